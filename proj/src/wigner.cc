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

#include "ontokit/wigner.h"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "ontokit/error.h"
#include "ontokit/random.h"

namespace ontokit::wigner {

using kernels::FiniteSpace;
using quantum::Channel;

namespace {

std::vector<std::string> unit_or_indexed(std::size_t count, const std::vector<std::string> &labels) {
    return count == 1 ? std::vector<std::string>{"*"} : labels;
}

}  // namespace

bool FrameCheck::ok() const {
    return hermitian <= kFrameTol && unit_trace <= kFrameTol && involution <= kFrameTol && orthogonality <= kFrameTol &&
           completeness <= kFrameSumTol;
}

FrameCheck check_frame(Algebra algebra, std::size_t dim, const std::vector<ComplexMatrix> &ops, double c) {
    FrameCheck r;
    r.count = ops.size();
    const ComplexMatrix id = ComplexMatrix::identity(dim);
    ComplexMatrix sum(dim, dim);
    for (std::size_t i = 0; i < ops.size(); ++i) {
        const ComplexMatrix &s = ops[i];
        if (s.rows() != dim || !s.is_square()) throw Error(ErrorCode::DimMismatch, "frame operator has the wrong shape");
        r.hermitian = std::max(r.hermitian, max_abs_diff(s, dagger(s)));
        r.unit_trace = std::max(r.unit_trace, std::abs(trace(s) - 1.0));
        r.involution = std::max(r.involution, max_abs_diff(s * s, algebra == Algebra::Matrix ? id : s));
        for (std::size_t j = i; j < ops.size(); ++j) {
            const Complex t = trace_of_product(s, ops[j]);
            r.orthogonality = std::max(r.orthogonality, std::abs(t - (i == j ? c : 0.0)));
        }
        sum += s;
    }
    r.completeness = max_abs_diff(sum, Complex(c) * id);
    return r;
}

FrameCheck check_frame(const WignerFrame &f) { return check_frame(f.algebra(), f.dim(), f.operators(), f.norm_const()); }

WignerFrame::WignerFrame(Algebra algebra, std::size_t dim, std::vector<ComplexMatrix> operators, double norm_const,
                         std::vector<std::string> labels)
    : algebra_(algebra), dim_(dim), ops_(std::move(operators)), c_(norm_const), space_(std::move(labels)) {
    if (space_.size() != ops_.size()) throw Error(ErrorCode::DimMismatch, "one label per frame operator");
    const std::size_t expected = algebra == Algebra::Matrix ? dim * dim : dim;
    if (ops_.size() != expected)
        throw Error(ErrorCode::VerificationFailed, "frame has " + std::to_string(ops_.size()) + " operators, expected " +
                                                       std::to_string(expected));
    const FrameCheck fc = check_frame(algebra_, dim_, ops_, c_);
    if (!fc.ok()) throw Error(ErrorCode::VerificationFailed, "frame conditions fail");
}

ComplexMatrix displacement(std::size_t n, std::size_t q, std::size_t p) {
    if (n == 0) throw Error(ErrorCode::InvalidArgument, "dimension must be >= 1");
    const double w = 2.0 * std::numbers::pi / static_cast<double>(n);
    // τ = ω^{(n+1)/2}; for odd n this squares to ω.
    const std::size_t tau_exp = ((n + 1) / 2 * (q % n) % n) * (p % n) % n;
    const Complex tau_qp = std::polar(1.0, w * static_cast<double>(tau_exp));
    ComplexMatrix d(n, n);
    // X^q Z^p |x⟩ = ω^{px} |x+q⟩
    for (std::size_t x = 0; x < n; ++x)
        d((x + q) % n, x) = tau_qp * std::polar(1.0, w * static_cast<double>((p % n) * x % n));
    return d;
}

WignerFrame phase_point_operators(std::size_t n) {
    if (n == 0) throw Error(ErrorCode::InvalidArgument, "dimension must be >= 1");
    if (n % 2 == 0) throw Error(ErrorCode::EvenDimension, "phase-point operators need odd n, got " + std::to_string(n));
    ComplexMatrix parity(n, n);
    for (std::size_t x = 0; x < n; ++x) parity((n - x) % n, x) = 1.0;
    std::vector<ComplexMatrix> ops;
    std::vector<std::string> labels;
    for (std::size_t q = 0; q < n; ++q) {
        for (std::size_t p = 0; p < n; ++p) {
            const ComplexMatrix d = displacement(n, q, p);
            ops.push_back(d * parity * dagger(d));
            labels.push_back(std::to_string(q) + "," + std::to_string(p));
        }
    }
    return WignerFrame(Algebra::Matrix, n, std::move(ops), static_cast<double>(n), unit_or_indexed(n, labels));
}

WignerFrame commutative_frame(std::size_t k) {
    if (k == 0) throw Error(ErrorCode::InvalidArgument, "dimension must be >= 1");
    std::vector<ComplexMatrix> ops;
    for (std::size_t i = 0; i < k; ++i) ops.push_back(Ket::basis(k, i).projector());
    return WignerFrame(Algebra::Commutative, k, std::move(ops), 1.0, unit_or_indexed(k, FiniteSpace::indexed(k).labels()));
}

WignerFrame tensor_frame(const WignerFrame &a, const WignerFrame &b) {
    if (a.algebra() != b.algebra())
        throw Error(ErrorCode::UnrepresentableAlgebra, "tensor frames need two matrix or two commutative algebras");
    std::vector<ComplexMatrix> ops;
    for (const auto &x : a.operators())
        for (const auto &y : b.operators()) ops.push_back(kron(x, y));
    return WignerFrame(a.algebra(), a.dim() * b.dim(), std::move(ops), a.norm_const() * b.norm_const(),
                       product(a.space(), b.space()).labels());
}

namespace {

std::size_t padded_dim(const Object &obj) {
    return obj.algebra == Algebra::Matrix && obj.dim % 2 == 0 ? obj.dim + 1 : obj.dim;
}

}  // namespace

WignerFrame frame_for(const Object &obj) {
    return obj.algebra == Algebra::Matrix ? phase_point_operators(padded_dim(obj)) : commutative_frame(obj.dim);
}

WignerVector wigner_vector(const quantum::DensityMatrix &rho, const WignerFrame &frame) {
    if (rho.dim() != frame.dim()) throw Error(ErrorCode::DimMismatch, "state and frame dimensions differ");
    std::vector<double> v;
    ComplexMatrix rebuilt(frame.dim(), frame.dim());
    for (const auto &s : frame.operators()) {
        v.push_back(trace_of_product(rho.matrix(), s).real() / frame.norm_const());
        rebuilt += Complex(v.back()) * s;
    }
    if (max_abs_diff(rebuilt, rho.matrix()) > kDerivedTol)
        throw Error(ErrorCode::VerificationFailed, "state is not reconstructed by the frame (not in its algebra)");
    return {frame.dim(), kernels::Distribution(frame.space(), std::move(v))};
}

TransferMatrix transfer_matrix(const Channel &f, const WignerFrame &in, const WignerFrame &out) {
    if (f.in_dim() != in.dim() || f.out_dim() != out.dim())
        throw Error(ErrorCode::DimMismatch, "channel dimensions do not match the frames");
    TransferMatrix t{in.dim(), out.dim(), RealMatrix(out.size(), in.size()), 0.0};
    for (std::size_t j = 0; j < in.size(); ++j) {
        const ComplexMatrix image = quantum::apply_map(f, in.operators()[j]);
        for (std::size_t i = 0; i < out.size(); ++i) {
            const Complex v = trace_of_product(out.operators()[i], image) / out.norm_const();
            t.matrix(i, j) = v.real();
            t.max_imaginary = std::max(t.max_imaginary, std::abs(v.imag()));
        }
    }
    return t;
}

Channel pad_odd(const Channel &f, bool pad_in, bool pad_out) {
    const std::size_t din = f.in_dim() + (pad_in ? 1 : 0), dout = f.out_dim() + (pad_out ? 1 : 0);
    std::vector<ComplexMatrix> kraus;
    for (const auto &k : f.kraus()) {
        ComplexMatrix big(dout, din);
        for (std::size_t r = 0; r < k.rows(); ++r)
            for (std::size_t c = 0; c < k.cols(); ++c) big(r, c) = k(r, c);
        kraus.push_back(std::move(big));
    }
    if (pad_in) {
        ComplexMatrix extra(dout, din);
        extra(pad_out ? dout - 1 : 0, din - 1) = 1.0;
        kraus.push_back(std::move(extra));
    }
    return Channel(din, dout, std::move(kraus), f.trace_preserving());
}

Channel pad_odd(const Channel &f) { return pad_odd(f, f.in_dim() % 2 == 0, f.out_dim() % 2 == 0); }

quantum::DensityMatrix pad_state(const quantum::DensityMatrix &rho) {
    ComplexMatrix m(rho.dim() + 1, rho.dim() + 1);
    for (std::size_t r = 0; r < rho.dim(); ++r)
        for (std::size_t c = 0; c < rho.dim(); ++c) m(r, c) = rho.matrix()(r, c);
    return quantum::DensityMatrix(std::move(m));
}

FiniteSpace functor_object(const Object &obj) {
    if (obj.dim == 0) throw Error(ErrorCode::UnrepresentableAlgebra, "zero-dimensional algebra");
    return frame_for(obj).space();
}

kernels::SignedKernel functor_morphism(const Channel &f, const Object &in, const Object &out) {
    if (!f.trace_preserving()) throw Error(ErrorCode::NotTracePreserving, "the functor is defined on trace-preserving channels");
    if (f.in_dim() != in.dim || f.out_dim() != out.dim)
        throw Error(ErrorCode::DimMismatch, "channel dimensions do not match the objects");
    const bool pad_in = padded_dim(in) != in.dim, pad_out = padded_dim(out) != out.dim;
    const Channel g = pad_in || pad_out ? pad_odd(f, pad_in, pad_out) : f;
    const WignerFrame fin = frame_for(in), fout = frame_for(out);
    const TransferMatrix t = transfer_matrix(g, fin, fout);
    return kernels::SignedKernel(fin.space(), fout.space(), t.matrix, kTransferTol);
}

kernels::SignedKernel functor_morphism(const Channel &f) {
    return functor_morphism(f, Object::matrix(f.in_dim()), Object::matrix(f.out_dim()));
}

std::vector<std::size_t> induced_permutation(const WignerFrame &frame, const ComplexMatrix &u) {
    const auto &ops = frame.operators();
    std::vector<std::size_t> pi(ops.size());
    std::vector<bool> used(ops.size(), false);
    const ComplexMatrix ud = dagger(u);
    for (std::size_t i = 0; i < ops.size(); ++i) {
        const ComplexMatrix moved = ud * ops[i] * u;
        bool found = false;
        for (std::size_t j = 0; j < ops.size() && !found; ++j) {
            if (!used[j] && max_abs_diff(moved, ops[j]) <= kDerivedTol) {
                pi[i] = j;
                used[j] = true;
                found = true;
            }
        }
        if (!found) throw Error(ErrorCode::VerificationFailed, "conjugation does not permute the frame");
    }
    return pi;
}

WignerFragment make_fragment(std::size_t dim, std::size_t pairs, std::size_t probes, std::uint64_t seed) {
    const Object unit = Object::matrix(1), two = Object::commutative(2), sys = Object::matrix(dim);
    const std::string a = "M" + std::to_string(dim);
    WignerFragment out;
    auto &frag = out.fragment;
    frag.objects.emplace("I", functor_object(unit));
    frag.objects.emplace("2", functor_object(two));
    frag.objects.emplace(a, functor_object(sys));
    auto add = [&](std::string name, const std::string &src, const Object &s, const std::string &tgt, const Object &t,
                   Channel ch) {
        kernels::SignedKernel img = functor_morphism(ch, s, t);
        frag.morphisms.push_back({std::move(name), src, tgt, std::move(ch), std::move(img)});
    };
    add("id", a, sys, a, sys, Channel::identity(dim));
    for (std::size_t k = 0; k < pairs; ++k) {
        Rng rng = Rng::stream(seed, k);
        Channel f = quantum::random_channel(dim, dim, 1 + rng.below(3), rng);
        Channel g = quantum::random_channel(dim, dim, 1 + rng.below(3), rng);
        const std::string fk = "f" + std::to_string(k), gk = "g" + std::to_string(k);
        Channel h = quantum::compose(g, f);
        add(fk, a, sys, a, sys, std::move(f));
        add(gk, a, sys, a, sys, std::move(g));
        add(gk + "." + fk, a, sys, a, sys, std::move(h));
        out.tests.push_back({gk, fk, gk + "." + fk});
    }
    for (std::size_t k = 0; k < probes; ++k) {
        Rng rng = Rng::stream(seed, pairs + k);
        add("psi" + std::to_string(k), "I", unit, a, sys, Channel::prepare(quantum::random_ket(dim, rng)));
        const ComplexMatrix u = quantum::random_unitary(dim, rng);
        std::vector<double> eig(dim);
        for (double &e : eig) e = rng.uniform();
        const ComplexMatrix effect = u * ComplexMatrix::diagonal(eig) * dagger(u);
        add("chi" + std::to_string(k), a, sys, "2", two, Channel::two_outcome(effect));
    }
    return out;
}

bool MonoidalityReport::ok() const {
    return product_frame.ok() && identity_error <= kTransferTol && max_transfer_error <= kTransferTol;
}

MonoidalityReport monoidality_check(std::size_t m, std::size_t n, std::size_t trials, std::uint64_t seed) {
    const WignerFrame fm = phase_point_operators(m), fn = phase_point_operators(n);
    const WignerFrame prod = tensor_frame(fm, fn);
    MonoidalityReport r;
    r.m = m;
    r.n = n;
    r.trials = trials;
    r.product_frame = check_frame(prod);
    r.identity_error = max_abs_diff(transfer_matrix(Channel::identity(m * n), prod, prod).matrix,
                                    RealMatrix::identity(prod.size()));
    for (std::size_t t = 0; t < trials; ++t) {
        Rng rng = Rng::stream(seed, t);
        const Channel f = quantum::random_channel(m, m, 1 + rng.below(2), rng);
        const Channel g = quantum::random_channel(n, n, 1 + rng.below(2), rng);
        const RealMatrix joint = transfer_matrix(quantum::tensor(f, g), prod, prod).matrix;
        const RealMatrix split = kron(transfer_matrix(f, fm, fm).matrix, transfer_matrix(g, fn, fn).matrix);
        r.max_transfer_error = std::max(r.max_transfer_error, max_abs_diff(joint, split));
    }
    return r;
}

EpistemicReport epistemic_report(const Ket &psi, const Ket &phi, const WignerFrame &frame) {
    if (psi.dim() != frame.dim() || phi.dim() != frame.dim())
        throw Error(ErrorCode::DimMismatch, "states and frame dimensions differ");
    const auto rho = quantum::DensityMatrix::from_ket(psi), tau = quantum::DensityMatrix::from_ket(phi);
    const WignerVector v = wigner_vector(rho, frame), w = wigner_vector(tau, frame);
    EpistemicReport r{antidist::antidist_classical({{v.weights, w.weights}, 0}),
                      antidist::antidist_classical({{v.weights, w.weights}, 1})};
    r.anti_distinguishable = r.target_psi.certified() && r.target_phi.certified();
    r.overlap = std::abs(inner(psi, phi));
    r.trace_distance = 0.5 * trace_norm(rho.matrix() - tau.matrix());
    double l1 = 0.0;
    for (std::size_t i = 0; i < v.weights.size(); ++i) l1 += std::abs(v.weights[i] - w.weights[i]);
    r.l1_bound = 0.5 * frame.norm_const() * l1;
    r.bound_holds = r.trace_distance <= r.l1_bound + kDerivedTol;
    r.gap = r.l1_bound - r.trace_distance;
    return r;
}

}  // namespace ontokit::wigner
