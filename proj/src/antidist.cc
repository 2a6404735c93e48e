// Copyright 2026 The ontokit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ontokit/antidist.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "ontokit/error.h"
#include "ontokit/random.h"

namespace ontokit::antidist {

using kernels::Distribution;
using kernels::FiniteSpace;
using kernels::ResponseFunction;

namespace {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;
};

Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
double norm(Vec2 a) { return std::hypot(a.x, a.y); }

// Support function of the zonotope Σ [0,1]·gᵢ.
double support_value(Vec2 u, const std::vector<Vec2> &g) {
    double h = 0.0;
    for (const Vec2 &gi : g) h += std::max(0.0, dot(u, gi));
    return h;
}

// Order positions [lo, hi) of the angle-sorted generators that are switched on.
struct Pattern {
    std::size_t lo = 0;
    std::size_t hi = 0;
};

// Searches every edge normal of the zonotope (and the generator directions,
// which suffice when it degenerates to a segment) for a separating line.
std::optional<Refutation> separate(Vec2 target, const std::vector<Vec2> &g, double scale) {
    std::vector<Vec2> dirs = {{0, 1}, {0, -1}, {1, 0}, {-1, 0}};
    for (const Vec2 &gi : g) {
        const double len = norm(gi);
        if (len == 0.0) continue;
        const Vec2 u{gi.x / len, gi.y / len};
        dirs.push_back(u);
        dirs.push_back({-u.x, -u.y});
        dirs.push_back({-u.y, u.x});
        dirs.push_back({u.y, -u.x});
    }
    std::optional<Refutation> best;
    const double tol = 1e-12 * scale;
    for (const Vec2 &u : dirs) {
        const double margin = dot(u, target) - support_value(u, g);
        if (margin > tol && (!best || margin > best->margin)) best = Refutation{u.x, u.y, margin};
    }
    return best;
}

// Writes the target point as a convex combination of zonotope vertices and
// returns the induced χ ∈ [0,1]^k (before the final residual check).
std::vector<double> assemble(Vec2 target, const std::vector<Vec2> &g, double scale) {
    const std::size_t k = g.size();
    std::vector<double> chi(k, 0.0);
    std::vector<bool> flipped(k, false);
    std::vector<std::size_t> order;
    Vec2 base;
    for (std::size_t i = 0; i < k; ++i) {
        if (std::abs(g[i].x) + std::abs(g[i].y) <= 1e-15 * scale) continue;
        // Orient every generator into the closed upper half plane; the base
        // vertex then switches the flipped ones on.
        if (g[i].y < 0.0 || (g[i].y == 0.0 && g[i].x < 0.0)) {
            flipped[i] = true;
            base = base + g[i];
        }
        order.push_back(i);
    }
    auto dir = [&](std::size_t i) { return flipped[i] ? Vec2{-g[i].x, -g[i].y} : g[i]; };
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        const Vec2 da = dir(a), db = dir(b);
        return std::atan2(da.y, da.x) < std::atan2(db.y, db.x);
    });
    const std::size_t m = order.size();
    std::vector<std::size_t> position(k, 0);
    for (std::size_t j = 0; j < m; ++j) position[order[j]] = j;

    // Boundary walk counter-clockwise from the lowest vertex: add generators
    // by increasing angle, then remove them in the same order.
    std::vector<Vec2> vertex{base};
    std::vector<Pattern> pattern{{0, 0}};
    for (std::size_t j = 1; j <= m; ++j) {
        vertex.push_back(vertex.back() + dir(order[j - 1]));
        pattern.push_back({0, j});
    }
    for (std::size_t j = 1; j + 1 <= m; ++j) {
        vertex.push_back(vertex.back() - dir(order[j - 1]));
        pattern.push_back({j, m});
    }

    std::vector<std::pair<double, Pattern>> weights;
    double best_score = -std::numeric_limits<double>::infinity();
    std::array<double, 3> best_lambda{};
    std::size_t best_j = 0;
    const double area_floor = 1e-14 * scale * scale;
    for (std::size_t j = 1; j + 1 < vertex.size(); ++j) {
        const Vec2 e1 = vertex[j] - vertex[0], e2 = vertex[j + 1] - vertex[0], r = target - vertex[0];
        const double det = cross(e1, e2);
        if (std::abs(det) <= area_floor) continue;
        const double l1 = cross(r, e2) / det, l2 = cross(e1, r) / det, l0 = 1.0 - l1 - l2;
        const double score = std::min({l0, l1, l2});
        if (score > best_score) {
            best_score = score;
            best_lambda = {l0, l1, l2};
            best_j = j;
        }
    }
    if (best_j != 0) {
        weights = {{best_lambda[0], pattern[0]}, {best_lambda[1], pattern[best_j]}, {best_lambda[2], pattern[best_j + 1]}};
    } else if (m > 0) {
        // Flat zonotope: a segment from the base to the far vertex.
        const Vec2 span = vertex[m] - vertex[0];
        const double t = std::clamp(dot(target - vertex[0], span) / dot(span, span), 0.0, 1.0);
        weights = {{1.0 - t, pattern[0]}, {t, pattern[m]}};
    }

    for (std::size_t i : order) {
        double s = 0.0;
        for (const auto &[w, p] : weights)
            if (position[i] >= p.lo && position[i] < p.hi) s += std::clamp(w, 0.0, 1.0);
        s = std::clamp(s, 0.0, 1.0);
        chi[i] = flipped[i] ? 1.0 - s : s;
    }
    return chi;
}

const FiniteSpace &common_space(const std::vector<Distribution> &ensemble) {
    if (ensemble.empty()) throw Error(ErrorCode::InvalidArgument, "ensemble must be nonempty");
    for (const auto &mu : ensemble)
        if (!(mu.space() == ensemble.front().space()))
            throw Error(ErrorCode::SpaceMismatch, "ensemble distributions live on different spaces");
    return ensemble.front().space();
}

}  // namespace

AntidistResult antidist_classical(const AntidistProblem &p) {
    const FiniteSpace &space = common_space(p.ensemble);
    if (p.target >= p.ensemble.size()) throw Error(ErrorCode::InvalidArgument, "target index out of range");
    const std::size_t k = space.size();
    std::vector<Vec2> g(k);
    double scale = 1.0;
    for (std::size_t i = 0; i < k; ++i) {
        g[i].x = p.ensemble[p.target][i];
        for (std::size_t j = 0; j < p.ensemble.size(); ++j)
            if (j != p.target) g[i].y += p.ensemble[j][i];
        scale += std::abs(g[i].x) + std::abs(g[i].y);
    }
    const Vec2 target{0.0, 1.0};

    AntidistResult result;
    if (auto r = separate(target, g, scale)) {
        result.refutation = *r;
        return result;
    }
    std::vector<double> chi = assemble(target, g, scale);
    double on_target = 0.0, on_others = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
        on_target += chi[i] * g[i].x;
        on_others += chi[i] * g[i].y;
    }
    if (std::abs(on_target) > kCertificateTol || std::abs(on_others - 1.0) > kCertificateTol)
        throw Error(ErrorCode::VerificationFailed, "certificate residuals (" + std::to_string(on_target) + ", " +
                                                       std::to_string(on_others) + ") miss (0, 1)");
    result.certificate = AntidistCertificate{ResponseFunction(space, std::move(chi)), on_target, on_others};
    return result;
}

bool ensemble_antidistinguishable(const std::vector<Distribution> &ensemble) {
    for (std::size_t t = 0; t < ensemble.size(); ++t)
        if (!antidist_classical({ensemble, t}).certified()) return false;
    return true;
}

std::optional<std::vector<ResponseFunction>> antidist_joint(const std::vector<Distribution> &ensemble) {
    const FiniteSpace &space = common_space(ensemble);
    for (const auto &mu : ensemble)
        if (!mu.is_probability())
            throw Error(ErrorCode::SignedUnsupported, "joint anti-distinguishability needs nonnegative distributions");
    std::vector<std::vector<double>> values(ensemble.size(), std::vector<double>(space.size(), 0.0));
    for (std::size_t lambda = 0; lambda < space.size(); ++lambda) {
        bool placed = false;
        for (std::size_t k = 0; k < ensemble.size() && !placed; ++k) {
            if (ensemble[k][lambda] <= kernels::kSupportEps) {
                values[k][lambda] = 1.0;
                placed = true;
            }
        }
        if (!placed) return std::nullopt;
    }
    std::vector<ResponseFunction> out;
    for (auto &v : values) out.emplace_back(space, std::move(v));
    return out;
}

bool antidist_quantum_check(const std::vector<quantum::DensityMatrix> &states, const quantum::ProjectiveMeasurement &m,
                            const std::vector<std::size_t> &assignment) {
    if (assignment.size() != states.size())
        throw Error(ErrorCode::DimMismatch, "assignment must give one outcome per state");
    for (std::size_t i = 0; i < states.size(); ++i) {
        if (states[i].dim() != m.dim()) throw Error(ErrorCode::DimMismatch, "state and measurement dimensions differ");
        if (assignment[i] >= m.size()) throw Error(ErrorCode::DimMismatch, "assigned outcome out of range");
    }
    for (std::size_t i = 0; i < states.size(); ++i)
        if (quantum::born(states[i], m, assignment[i]) > kDerivedTol) return false;
    return true;
}

bool antidist_quantum_check(const std::vector<Ket> &states, const quantum::ProjectiveMeasurement &m,
                            const std::vector<std::size_t> &assignment) {
    std::vector<quantum::DensityMatrix> rhos;
    for (const Ket &k : states) rhos.push_back(quantum::DensityMatrix::from_ket(k));
    return antidist_quantum_check(rhos, m, assignment);
}

quantum::ProjectiveMeasurement pbr_measurement() {
    using quantum::ket_minus;
    using quantum::ket_one;
    using quantum::ket_plus;
    using quantum::ket_zero;
    auto sum = [](const Ket &a, const Ket &b) {
        std::vector<Complex> v(a.dim());
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = (a[i] + b[i]) / std::sqrt(2.0);
        return Ket(std::move(v));
    };
    return quantum::ProjectiveMeasurement({
        sum(kron(ket_zero(), ket_one()), kron(ket_one(), ket_zero())),
        sum(kron(ket_zero(), ket_minus()), kron(ket_one(), ket_plus())),
        sum(kron(ket_plus(), ket_one()), kron(ket_minus(), ket_zero())),
        sum(kron(ket_plus(), ket_minus()), kron(ket_minus(), ket_plus())),
    });
}

std::string_view convention_name(GammaConvention c) {
    switch (c) {
        case GammaConvention::TanOfOverlap:
            return "tan(overlap)";
        case GammaConvention::TanOfArcsin:
            return "tan(arcsin(overlap))";
        case GammaConvention::TanOfArccos:
            return "tan(arccos(overlap))";
    }
    return "?";
}

std::size_t auto_copies(double overlap) {
    if (!(overlap > 0.0 && overlap < 1.0)) throw Error(ErrorCode::BadOverlap, "overlap must lie strictly in (0, 1)");
    const double bound = 1.0 / std::sqrt(2.0) + 1e-12;
    std::size_t n = 1;
    double p = overlap;
    while (p > bound) {
        p *= overlap;
        ++n;
    }
    return n;
}

namespace {

quantum::Channel span_map(double t) {
    const double c = std::sqrt((1.0 - t * t) / 2.0);
    ComplexMatrix k0{{1.0, 0.0}, {0.0, t}};
    ComplexMatrix k1{{0.0, c}, {0.0, c}};
    return quantum::Channel(2, 2, {k0, k1}, true);
}

}  // namespace

CompressionResult compression_channel(const Ket &psi, const Ket &phi, std::optional<std::size_t> n_opt) {
    if (psi.dim() != phi.dim()) throw Error(ErrorCode::DimMismatch, "psi and phi have different dimensions");
    const Complex ov = inner(psi, phi);
    const double a = std::abs(ov);
    if (a <= kDerivedTol || a >= 1.0 - kDerivedTol)
        throw Error(ErrorCode::BadOverlap, "|<psi|phi>| = " + std::to_string(a) + " must lie strictly in (0, 1)");
    const std::size_t n = n_opt ? *n_opt : auto_copies(a);
    if (n == 0) throw Error(ErrorCode::InvalidArgument, "copy count must be >= 1");
    const double gamma = std::pow(a, static_cast<double>(n));
    if (gamma > 1.0 / std::sqrt(2.0) + 1e-12)
        throw Error(ErrorCode::InvalidArgument,
                    "|<psi|phi>|^n = " + std::to_string(gamma) + " exceeds 1/sqrt(2); increase n");
    const double s = std::sqrt(1.0 - gamma * gamma);

    // Span coordinates: ψ⊗ⁿ ↦ (1, 0) and the phase-aligned φ⊗ⁿ ↦ (γ, s).
    const Ket psi_coords({1.0, 0.0});
    const Ket phi_coords({gamma, s});
    const ComplexMatrix zero_proj = quantum::ket_zero().projector();
    const ComplexMatrix plus_proj = quantum::ket_plus().projector();

    std::vector<CompressionCandidate> candidates;
    const std::array<std::pair<GammaConvention, double>, 3> readings = {{
        {GammaConvention::TanOfOverlap, std::tan(gamma)},
        {GammaConvention::TanOfArcsin, std::tan(std::asin(gamma))},
        {GammaConvention::TanOfArccos, std::tan(std::acos(gamma))},
    }};
    std::optional<std::size_t> chosen;
    for (auto [conv, t] : readings) {
        // tan(asin(1/√2)) rounds to just above 1.
        if (t > 1.0 && t <= 1.0 + 1e-12) t = 1.0;
        CompressionCandidate c{conv, t, std::numeric_limits<double>::infinity(),
                               std::numeric_limits<double>::infinity(), false};
        if (t >= 0.0 && t <= 1.0) {
            const quantum::Channel ch = span_map(t);
            c.residual_zero = max_abs_diff(quantum::apply_map(ch, psi_coords.projector()), zero_proj);
            c.residual_plus = max_abs_diff(quantum::apply_map(ch, phi_coords.projector()), plus_proj);
            c.passed = c.residual_zero <= 1e-8 && c.residual_plus <= 1e-8;
        } else {
            c.tan_parameter = std::numeric_limits<double>::quiet_NaN();
        }
        if (c.passed && !chosen) chosen = candidates.size();
        candidates.push_back(c);
    }
    if (!chosen) {
        std::string detail = "no K0 parametrization reproduces |0><0| and |+><+|:";
        for (const auto &c : candidates)
            detail += " " + std::string(convention_name(c.convention)) + " residuals " + std::to_string(c.residual_zero) +
                      "/" + std::to_string(c.residual_plus) + ";";
        throw Error(ErrorCode::VerificationFailed, detail);
    }
    const CompressionCandidate &pick = candidates[*chosen];
    quantum::Channel span = span_map(pick.tan_parameter);

    // Explicit map on (Cᵈ)^⊗n: project onto the span, compress, and send the
    // orthogonal complement to |0⟩ so the whole map stays trace preserving.
    std::optional<quantum::Channel> full;
    const std::size_t d = psi.dim();
    std::size_t big = 1;
    bool small = true;
    for (std::size_t i = 0; i < n && small; ++i) {
        big *= d;
        small = big <= kMaxExplicitCompressionDim;
    }
    if (small) {
        const Ket pn = tensor_power(psi, n);
        const Ket fn = tensor_power(phi, n);
        const Complex phase = std::polar(1.0, -std::arg(ov) * static_cast<double>(n));
        std::vector<Complex> e1(big);
        for (std::size_t i = 0; i < big; ++i) e1[i] = (phase * fn[i] - gamma * pn[i]) / s;
        const Ket b1 = Ket::normalized(std::move(e1));
        ComplexMatrix coiso(2, big);
        for (std::size_t i = 0; i < big; ++i) {
            coiso(0, i) = std::conj(pn[i]);
            coiso(1, i) = std::conj(b1[i]);
        }
        std::vector<ComplexMatrix> kraus;
        for (const ComplexMatrix &k : span.kraus()) kraus.push_back(k * coiso);
        const ComplexMatrix q = ComplexMatrix::identity(big) - dagger(coiso) * coiso;
        for (std::size_t j = 0; j < big; ++j) {
            ComplexMatrix kj(2, big);
            bool nonzero = false;
            for (std::size_t c = 0; c < big; ++c) {
                kj(0, c) = q(j, c);
                nonzero = nonzero || std::abs(q(j, c)) > 1e-14;
            }
            if (nonzero) kraus.push_back(std::move(kj));
        }
        quantum::Channel ch(big, 2, std::move(kraus), true);
        const double rz = max_abs_diff(quantum::apply_map(ch, pn.projector()), zero_proj);
        const double rp = max_abs_diff(quantum::apply_map(ch, fn.projector()), plus_proj);
        if (rz > 1e-8 || rp > 1e-8)
            throw Error(ErrorCode::VerificationFailed, "explicit compression channel residuals " + std::to_string(rz) +
                                                           "/" + std::to_string(rp));
        full = std::move(ch);
    }

    const ComplexMatrix out0 = quantum::apply_map(span, psi_coords.projector());
    const ComplexMatrix out1 = quantum::apply_map(span, phi_coords.projector());
    const double output_overlap = std::sqrt(std::max(0.0, trace_of_product(out0, out1).real()));

    return CompressionResult{n,
                             a,
                             gamma,
                             pick.convention,
                             pick.tan_parameter,
                             std::move(candidates),
                             std::move(span),
                             psi_coords,
                             phi_coords,
                             std::move(full),
                             output_overlap};
}

PbrReport pbr_demo(const Ket &psi, const Ket &phi, std::optional<std::size_t> n) {
    CompressionResult comp = compression_channel(psi, phi, n);
    const quantum::Channel pair = quantum::tensor(comp.span_channel, comp.span_channel);
    const quantum::ProjectiveMeasurement m = pbr_measurement();
    PbrReport report{std::move(comp)};
    const std::array<const Ket *, 2> singles = {&report.compression.psi_coords, &report.compression.phi_coords};
    std::vector<quantum::DensityMatrix> outputs;
    for (std::size_t row = 0; row < 4; ++row) {
        const Ket in = kron(*singles[row / 2], *singles[row % 2]);
        outputs.push_back(quantum::apply(pair, quantum::DensityMatrix::from_ket(in)));
        double sum = 0.0;
        for (std::size_t k = 0; k < 4; ++k) {
            report.table[row][k] = quantum::born(outputs.back(), m, k);
            sum += report.table[row][k];
        }
        report.assigned[row] = report.table[row][row];
        report.max_row_sum_error = std::max(report.max_row_sum_error, std::abs(sum - 1.0));
    }
    report.anti_distinguished = antidist_quantum_check(outputs, m, {0, 1, 2, 3});
    return report;
}

bool LemmaReport::ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const LemmaCheck &c) { return c.ok(); });
}

const LemmaCheck &LemmaReport::check(const std::string &name) const {
    for (const auto &c : checks)
        if (c.name == name) return c;
    throw Error(ErrorCode::InvalidArgument, "no lemma check named '" + name + "'");
}

namespace {

std::vector<double> random_weights(const std::vector<bool> &in_support, Rng &rng) {
    std::vector<double> w(in_support.size(), 0.0);
    double total = 0.0;
    for (std::size_t i = 0; i < w.size(); ++i)
        if (in_support[i]) total += (w[i] = rng.uniform(0.05, 1.0));
    for (double &x : w) x /= total;
    return w;
}

// One random pair of probability vectors. Modes: full supports, independent
// random supports, and disjoint supports.
std::pair<std::vector<double>, std::vector<double>> random_pair(Rng &rng) {
    const std::size_t k = 1 + rng.below(5);
    std::size_t mode = rng.below(3);
    if (mode == 2 && k < 2) mode = 1;
    std::vector<bool> sa(k, true), sb(k, true);
    if (mode == 1) {
        auto draw = [&](std::vector<bool> &s) {
            do {
                for (std::size_t i = 0; i < k; ++i) s[i] = rng.coin();
            } while (std::none_of(s.begin(), s.end(), [](bool b) { return b; }));
        };
        draw(sa);
        draw(sb);
    } else if (mode == 2) {
        // Point 0 goes to μ, point 1 to ν, the rest to μ, ν or neither.
        for (std::size_t i = 0; i < k; ++i) {
            const std::size_t side = i < 2 ? i : rng.below(3);
            sa[i] = side == 0;
            sb[i] = side == 1;
        }
    }
    return {random_weights(sa, rng), random_weights(sb, rng)};
}

bool disjoint(const Distribution &mu, const Distribution &nu) {
    for (std::size_t i = 0; i < mu.size(); ++i)
        if (mu[i] > kernels::kSupportEps && nu[i] > kernels::kSupportEps) return false;
    return true;
}

}  // namespace

LemmaReport lemma_suite(std::size_t trials, std::uint64_t seed) {
    LemmaReport report;
    report.trials = trials;
    report.seed = seed;
    for (const char *name : {"ntensor_n2", "ntensor_n3", "four_family", "four_family_joint", "product_overlap",
                             "disjoint_support"})
        report.checks.push_back(LemmaCheck{name, 0, 0, std::nullopt});
    auto record = [&](std::size_t idx, bool premise, bool conclusion, const std::vector<double> &a,
                      const std::vector<double> &b) {
        LemmaCheck &c = report.checks[idx];
        if (!premise) return;
        ++c.premises;
        if (conclusion) return;
        ++c.violations;
        if (!c.counterexample) c.counterexample = std::make_pair(a, b);
    };

    for (std::size_t trial = 0; trial < trials; ++trial) {
        Rng rng = Rng::stream(seed, trial);
        const auto [wa, wb] = random_pair(rng);
        const FiniteSpace space = FiniteSpace::indexed(wa.size());
        const Distribution mu(space, wa), nu(space, wb);
        const bool base = ensemble_antidistinguishable({mu, nu});

        for (std::size_t n : {2u, 3u}) {
            const bool fam = ensemble_antidistinguishable({kernels::tensor_power(mu, n), kernels::tensor_power(nu, n)});
            record(n - 2, fam, base, wa, wb);
        }
        const std::vector<Distribution> four = {kernels::product(nu, nu), kernels::product(nu, mu),
                                                kernels::product(mu, nu), kernels::product(mu, mu)};
        record(2, ensemble_antidistinguishable(four), base, wa, wb);
        record(3, antidist_joint(four).has_value(), base, wa, wb);

        const double d1 = kernels::variational_distance(mu, nu);
        const bool overlapping = d1 < 1.0 - kDerivedTol;
        record(4, overlapping,
               kernels::overlap_mass(kernels::product(mu, mu), kernels::product(nu, nu)) > kernels::kSupportEps, wa,
               wb);
        record(5, true, base == disjoint(mu, nu), wa, wb);
    }
    return report;
}

}  // namespace ontokit::antidist
