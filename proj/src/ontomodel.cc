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

#include "ontokit/ontomodel.h"

#include <algorithm>
#include <cmath>
#include <set>

#include "ontokit/error.h"

namespace ontokit::ontomodel {

using kernels::Distribution;
using kernels::FiniteSpace;
using kernels::ResponseFunction;
using kernels::SignedKernel;

const Distribution &OntModel::distribution(const std::string &label) const {
    const auto it = distributions.find(label);
    if (it == distributions.end()) throw Error(ErrorCode::InvalidArgument, "no distribution for state '" + label + "'");
    return it->second;
}

ModelReport validate_model(const OntModel &m, double tol) {
    ModelReport r;
    for (const auto &[label, ket] : m.states) {
        const auto it = m.distributions.find(label);
        if (it == m.distributions.end()) {
            r.structural.push_back("state '" + label + "' has no distribution");
            continue;
        }
        if (!(it->second.space() == m.ontic)) r.structural.push_back("distribution of '" + label + "' is not over the ontic space");
        else if (!it->second.is_probability())
            r.structural.push_back("distribution of '" + label + "' has negative weights");
    }
    for (std::size_t mi = 0; mi < m.measurements.size(); ++mi) {
        const OntMeasurement &meas = m.measurements[mi];
        const std::string tag = "measurement " + std::to_string(mi);
        if (meas.responses.size() != meas.basis.size()) {
            r.structural.push_back(tag + " has " + std::to_string(meas.responses.size()) + " response functions for " +
                                   std::to_string(meas.basis.size()) + " outcomes");
            continue;
        }
        bool spaces_ok = true;
        for (const auto &xi : meas.responses) spaces_ok = spaces_ok && xi.space() == m.ontic;
        if (!spaces_ok) {
            r.structural.push_back(tag + " has response functions off the ontic space");
            continue;
        }
        for (std::size_t lambda = 0; lambda < m.ontic.size(); ++lambda) {
            double s = 0.0;
            for (const auto &xi : meas.responses) s += xi[lambda];
            if (std::abs(s - 1.0) > tol) r.sum_rule.push_back({mi, lambda, s});
        }
        for (const auto &[label, ket] : m.states) {
            const auto it = m.distributions.find(label);
            if (it == m.distributions.end() || !(it->second.space() == m.ontic)) continue;
            if (ket.dim() != meas.basis.dim()) {
                r.structural.push_back("state '" + label + "' and " + tag + " have different dimensions");
                continue;
            }
            for (std::size_t k = 0; k < meas.basis.size(); ++k) {
                const double born = std::norm(inner(meas.basis.outcomes()[k], ket));
                const double reproduced = meas.responses[k].integrate(it->second);
                const double dev = std::abs(born - reproduced);
                r.max_born_deviation = std::max(r.max_born_deviation, dev);
                if (dev > tol) r.born.push_back({label, mi, k, born, reproduced});
            }
        }
    }
    return r;
}

OntModel dirac_restriction_model(const std::vector<std::pair<std::string, Ket>> &catalog,
                                 const std::vector<quantum::ProjectiveMeasurement> &measurements) {
    std::vector<std::string> labels;
    for (const auto &s : catalog) labels.push_back(s.first);
    FiniteSpace ontic(labels);
    std::map<std::string, Distribution> dists;
    for (std::size_t i = 0; i < catalog.size(); ++i) dists.emplace(catalog[i].first, Distribution::point(ontic, i));
    std::vector<OntMeasurement> ms;
    for (const auto &pm : measurements) {
        std::vector<ResponseFunction> xis;
        for (const Ket &outcome : pm.outcomes()) {
            std::vector<double> values;
            for (const auto &s : catalog) {
                if (s.second.dim() != pm.dim()) throw Error(ErrorCode::DimMismatch, "catalog state '" + s.first + "' does not fit the measurement");
                values.push_back(std::min(1.0, std::norm(inner(outcome, s.second))));
            }
            xis.emplace_back(ontic, std::move(values));
        }
        ms.push_back({pm, std::move(xis)});
    }
    return OntModel{std::move(ontic), catalog, std::move(dists), std::move(ms)};
}

Classification classify_model(const OntModel &m) {
    Classification c;
    for (std::size_t i = 0; i < m.states.size(); ++i) {
        for (std::size_t j = i + 1; j < m.states.size(); ++j) {
            const auto &[la, ka] = m.states[i];
            const auto &[lb, kb] = m.states[j];
            if (ka.dim() != kb.dim()) continue;
            const double ov = std::abs(inner(ka, kb));
            if (ov <= kStrictMargin || ov >= 1.0 - kStrictMargin) continue;
            const double d = kernels::variational_distance(m.distribution(la), m.distribution(lb));
            if (d < 1.0 - kStrictMargin) {
                c.epistemic = true;
                c.witness = std::make_pair(la, lb);
                c.witness_distance = d;
                return c;
            }
        }
    }
    return c;
}

MaximalReport maximal_predicates(const OntModel &m, double tol) {
    MaximalReport r;
    for (const auto &[lpsi, kpsi] : m.states) {
        for (const auto &[lphi, kphi] : m.states) {
            if (kpsi.dim() != kphi.dim()) continue;
            const double measure = m.distribution(lpsi).measure(kernels::support(m.distribution(lphi)));
            const double born = std::norm(inner(kphi, kpsi));
            const PairViolation v{lpsi, lphi, measure, born};
            if (std::abs(measure - born) > tol) r.epistemic_violations.push_back(v);
            if ((born <= tol) != (measure <= tol)) r.nontrivial_violations.push_back(v);
        }
    }
    r.maximally_epistemic = r.epistemic_violations.empty();
    r.maximally_nontrivial = r.nontrivial_violations.empty();
    return r;
}

const MorphismImage &FunctorFragment::morphism(const std::string &name) const {
    for (const auto &m : morphisms)
        if (m.name == name) return m;
    throw Error(ErrorCode::MissingMorphism, "no morphism named '" + name + "'");
}

namespace {

double kernel_distance(const SignedKernel &a, const SignedKernel &b) {
    if (a.matrix().rows() != b.matrix().rows() || a.matrix().cols() != b.matrix().cols())
        return std::numeric_limits<double>::infinity();
    return max_abs_diff(a.matrix(), b.matrix());
}

}  // namespace

OperationalReport check_operational_model(const FunctorFragment &frag, const std::vector<CompositionTest> &tests,
                                          double tol) {
    OperationalReport r;
    const auto unit = frag.objects.find("I");
    if (unit == frag.objects.end()) r.failures.push_back("F(I) is not tabulated");
    else if (unit->second.size() != 1) r.failures.push_back("F(I) is not a one-point space");
    const auto two = frag.objects.find("2");
    if (two == frag.objects.end()) r.failures.push_back("F(2) is not tabulated");
    else if (!(two->second == FiniteSpace::two())) r.failures.push_back("F(2) is not the two-point space {0, 1}");

    for (const auto &m : frag.morphisms) {
        const auto s = frag.objects.find(m.source), t = frag.objects.find(m.target);
        if (s == frag.objects.end() || t == frag.objects.end()) {
            r.failures.push_back("morphism '" + m.name + "' has an untabulated endpoint");
            continue;
        }
        if (!(m.image.from() == s->second) || !(m.image.to() == t->second))
            r.failures.push_back("image of '" + m.name + "' does not run between the images of its endpoints");
    }

    for (const auto &t : tests) {
        const MorphismImage &g = frag.morphism(t.outer);
        const MorphismImage &f = frag.morphism(t.inner);
        const MorphismImage &h = frag.morphism(t.composite);
        ++r.compositions;
        if (f.target != g.source || h.source != f.source || h.target != g.target) {
            r.failures.push_back("composition test (" + t.outer + ", " + t.inner + ") has mismatched endpoints");
            continue;
        }
        const double err = kernel_distance(h.image, kernels::kcompose(g.image, f.image));
        r.max_composition_error = std::max(r.max_composition_error, err);
        if (!(err <= tol))
            r.failures.push_back("F(" + t.outer + " o " + t.inner + ") differs from F(" + t.outer + ") o F(" + t.inner +
                                 ") by " + std::to_string(err));
    }

    for (const auto &m : frag.morphisms) {
        if (m.source != m.target || m.channel.in_dim() != m.channel.out_dim()) continue;
        if (quantum::action_distance(m.channel, quantum::Channel::identity(m.channel.in_dim())) > kStructuralTol) continue;
        ++r.identities;
        const double err = kernel_distance(m.image, SignedKernel::identity(m.image.from()));
        r.max_identity_error = std::max(r.max_identity_error, err);
        if (!(err <= tol)) r.failures.push_back("identity '" + m.name + "' is not sent to the identity kernel");
    }

    for (const auto &s : frag.morphisms) {
        if (s.source != "I") continue;
        for (const auto &m : frag.morphisms) {
            if (m.target != "2" || m.source != s.target) continue;
            ++r.evaluations;
            const quantum::Channel q = quantum::compose(m.channel, s.channel);
            const double born = quantum::apply_map(q, ComplexMatrix::identity(1))(0, 0).real();
            double classical = std::numeric_limits<double>::infinity();
            if (m.image.from() == s.image.to() && s.image.from().size() == 1)
                classical = kernels::kcompose(m.image, s.image)(0, 0);
            const double err = std::abs(classical - born);
            r.max_evaluation_error = std::max(r.max_evaluation_error, err);
            if (!(err <= tol))
                r.failures.push_back("evaluation of " + m.name + " o " + s.name + ": " + std::to_string(classical) +
                                     " vs Born " + std::to_string(born));
        }
    }
    return r;
}

std::vector<std::size_t> ActionTable::act(const std::string &channel, const std::vector<std::size_t> &subset) const {
    const auto it = images.find(channel);
    if (it == images.end()) throw Error(ErrorCode::MissingAction, "no action tabulated for '" + channel + "'");
    std::set<std::size_t> out;
    for (std::size_t j : subset) {
        if (j >= it->second.size())
            throw Error(ErrorCode::MissingAction,
                        "action of '" + channel + "' is not tabulated on point " + std::to_string(j));
        out.insert(it->second[j].begin(), it->second[j].end());
    }
    return {out.begin(), out.end()};
}

EquivarianceReport check_equivariance(const FunctorFragment &frag, const ActionTable &act,
                                      const std::vector<std::string> &states, const std::vector<std::string> &channels,
                                      double tol) {
    EquivarianceReport r;
    for (const auto &sname : states) {
        const MorphismImage &s = frag.morphism(sname);
        for (const auto &fname : channels) {
            const MorphismImage &f = frag.morphism(fname);
            if (f.source != s.target) continue;
            const SignedKernel moved = kernels::kcompose(f.image, s.image);
            for (std::size_t j = 0; j < moved.to().size(); ++j) {
                double rhs = 0.0;
                for (std::size_t i : act.act(fname, {j})) rhs += s.image(i, 0);
                const double err = std::abs(moved(j, 0) - rhs);
                ++r.checks;
                r.max_error = std::max(r.max_error, err);
                if (!(err <= tol))
                    r.failures.push_back("F(" + fname + " o " + sname + ") at '" + moved.to().label(j) +
                                         "' differs from F(" + sname + ") on its action image by " + std::to_string(err));
            }
        }
    }
    return r;
}

bool action_compositional(const FunctorFragment &frag, const ActionTable &act,
                          const std::vector<CompositionTest> &tests) {
    for (const auto &t : tests) {
        const MorphismImage &h = frag.morphism(t.composite);
        for (std::size_t j = 0; j < h.image.to().size(); ++j)
            if (act.act(t.composite, {j}) != act.act(t.inner, act.act(t.outer, {j}))) return false;
    }
    return true;
}

}  // namespace ontokit::ontomodel
