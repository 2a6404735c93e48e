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

#include "ontokit/cli.h"

#include <CLI11.hpp>
#include <cstdint>
#include <cstdlib>
#include <cmath>
#include <cstdio>
#include <optional>
#include <ostream>

#include "ontokit/antidist.h"
#include "ontokit/error.h"
#include "ontokit/json_io.h"
#include "ontokit/ontomodel.h"
#include "ontokit/qmeasure.h"
#include "ontokit/wigner.h"

namespace ontokit::cli {

namespace {

using io::Json;

constexpr const char *kSchemas = R"(Input formats (all JSON; complex numbers are [re, im] pairs):
  ket       {"dim": n, "amplitudes": [[re, im], ...]}
  channel   {"in_dim": m, "out_dim": n, "kraus": [matrix, ...], "trace_preserving": true}
  kernel    {"from": [labels], "to": [labels], "matrix": [[real]], "convention": "column-stochastic"}
  ensemble  {"points": [labels], "ensemble": [[weights], ...]}
  model     {"ontic": [labels], "states": [{"label": s, "ket": ket}],
             "distributions": {s: [weights]},
             "measurements": [{"basis": [ket, ...], "responses": [[weights], ...]}]}
  qmeasure  {"points": [labels], "decoherence": [[[re, im], ...], ...]}
            or {"points": [labels], "measure": {"<bitmask>": value, ...}}
Numbers in reports carry 17 significant digits. Exit status: 0 pass,
1 check failure, 2 usage/schema/IO error. ONTOKIT_TOL sets the default
tolerance; --tol overrides it.)";

// The tolerance in force: --tol, else ONTOKIT_TOL, else the command default.
double resolve_tol(const std::optional<double> &flag, double fallback) {
    double tol = fallback;
    if (const char *env = std::getenv("ONTOKIT_TOL"); env != nullptr && *env != '\0') {
        char *end = nullptr;
        tol = std::strtod(env, &end);
        if (end == env || *end != '\0') throw Error(ErrorCode::InvalidArgument, "ONTOKIT_TOL is not a number");
    }
    if (flag) tol = *flag;
    if (!(tol > 0.0) || !std::isfinite(tol)) throw Error(ErrorCode::InvalidArgument, "tolerance must be positive");
    return tol;
}

std::string csv_number(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

Json subset_labels(const kernels::FiniteSpace &space, qmeasure::Subset u) {
    Json out = Json::array();
    for (std::size_t x = 0; x < space.size(); ++x)
        if (u >> x & 1u) out.push_back(space.label(x));
    return out;
}

int emit(std::ostream &out, const Json &report, bool ok) {
    out << io::dump(report);
    return ok ? kExitPass : kExitCheckFailed;
}

int cmd_validate_model(const std::string &path, double tol, std::ostream &out) {
    const ontomodel::OntModel m = io::model_from_json(io::read_file(path));
    const ontomodel::ModelReport r = ontomodel::validate_model(m, tol);
    Json born = Json::array(), sum_rule = Json::array();
    for (const auto &b : r.born)
        born.push_back({{"state", b.state}, {"measurement", b.measurement}, {"outcome", b.outcome}, {"born", b.born},
                        {"reproduced", b.reproduced}});
    for (const auto &s : r.sum_rule)
        sum_rule.push_back({{"measurement", s.measurement}, {"point", m.ontic.label(s.point)}, {"sum", s.sum}});
    Json report = {{"command", "validate-model"},       {"ok", r.ok()},
                   {"tolerance", tol},                   {"structural", r.structural},
                   {"born_deviations", std::move(born)}, {"sum_rule_violations", std::move(sum_rule)},
                   {"max_born_deviation", r.max_born_deviation}};
    if (r.structural.empty()) {
        const ontomodel::Classification c = ontomodel::classify_model(m);
        report["classification"] = {
            {"kind", c.epistemic ? "epistemic" : "ontic"},
            {"witness", c.witness ? Json::array({c.witness->first, c.witness->second}) : Json(nullptr)},
            {"distance", c.epistemic ? Json(c.witness_distance) : Json(nullptr)}};
        const ontomodel::MaximalReport mx = ontomodel::maximal_predicates(m, tol);
        auto pairs = [](const std::vector<ontomodel::PairViolation> &v) {
            Json a = Json::array();
            for (const auto &p : v) a.push_back({{"psi", p.psi}, {"phi", p.phi}, {"measure", p.measure}, {"born", p.born}});
            return a;
        };
        report["maximal"] = {{"maximally_epistemic", mx.maximally_epistemic},
                             {"maximally_nontrivial", mx.maximally_nontrivial},
                             {"epistemic_violations", pairs(mx.epistemic_violations)},
                             {"nontrivial_violations", pairs(mx.nontrivial_violations)}};
    }
    return emit(out, report, r.ok());
}

int cmd_antidist(const std::string &path, std::size_t target, bool csv, std::ostream &out) {
    const auto ensemble = io::ensemble_from_json(io::read_file(path));
    const antidist::AntidistResult r = antidist::antidist_classical({ensemble, target});
    const auto &space = ensemble.front().space();
    if (csv) {
        if (r.certified()) {
            out << "point,response\n";
            for (std::size_t i = 0; i < space.size(); ++i)
                out << space.label(i) << "," << csv_number(r.certificate->response[i]) << "\n";
        } else {
            out << "direction_target,direction_others,margin\n"
                << csv_number(r.refutation->u_target) << "," << csv_number(r.refutation->u_others) << ","
                << csv_number(r.refutation->margin) << "\n";
        }
        return kExitPass;
    }
    Json report = {{"command", "antidist"}, {"target", target}, {"decision", r.certified() ? "certified" : "refuted"}};
    if (r.certified()) {
        report["response"] = {{"points", space.labels()}, {"values", r.certificate->response.values()}};
        report["residuals"] = {r.certificate->on_target, r.certificate->on_others};
    } else {
        report["separating_direction"] = {r.refutation->u_target, r.refutation->u_others};
        report["margin"] = r.refutation->margin;
    }
    return emit(out, report, true);
}

int cmd_pbr(const std::string &psi_path, const std::string &phi_path, std::optional<std::size_t> n, bool csv,
            std::ostream &out) {
    const Ket psi = io::ket_from_json(io::read_file(psi_path), "psi");
    const Ket phi = io::ket_from_json(io::read_file(phi_path), "phi");
    const antidist::PbrReport r = antidist::pbr_demo(psi, phi, n);
    const bool ok = r.anti_distinguished && r.max_row_sum_error <= kDerivedTol;
    const std::array<const char *, 4> rows = {"psi psi", "psi phi", "phi psi", "phi phi"};
    if (csv) {
        out << "state,chi1,chi2,chi3,chi4\n";
        for (std::size_t i = 0; i < 4; ++i) {
            out << rows[i];
            for (double p : r.table[i]) out << "," << csv_number(p);
            out << "\n";
        }
        return ok ? kExitPass : kExitCheckFailed;
    }
    const auto &c = r.compression;
    Json candidates = Json::array();
    for (const auto &cand : c.candidates)
        candidates.push_back({{"convention", antidist::convention_name(cand.convention)},
                              {"tan_parameter", cand.tan_parameter},
                              {"residual_zero", cand.residual_zero},
                              {"residual_plus", cand.residual_plus},
                              {"passed", cand.passed}});
    Json table = Json::array();
    for (const auto &row : r.table) table.push_back(Json(std::vector<double>(row.begin(), row.end())));
    Json report = {{"command", "pbr-demo"},
                   {"ok", ok},
                   {"copies", c.n},
                   {"overlap", c.overlap},
                   {"gamma", c.gamma},
                   {"convention", antidist::convention_name(c.convention)},
                   {"tan_parameter", c.tan_parameter},
                   {"candidates", std::move(candidates)},
                   {"explicit_channel", c.full_channel.has_value()},
                   {"output_overlap", c.output_overlap},
                   {"rows", rows},
                   {"columns", {"chi1", "chi2", "chi3", "chi4"}},
                   {"table", std::move(table)},
                   {"assigned", std::vector<double>(r.assigned.begin(), r.assigned.end())},
                   {"anti_distinguished", r.anti_distinguished},
                   {"max_row_sum_error", r.max_row_sum_error}};
    return emit(out, report, ok);
}

int cmd_lemmas(std::size_t trials, std::uint64_t seed, std::ostream &out) {
    const antidist::LemmaReport r = antidist::lemma_suite(trials, seed);
    Json checks = Json::array();
    for (const auto &c : r.checks) {
        Json ce = nullptr;
        if (c.counterexample) ce = {{"mu", c.counterexample->first}, {"nu", c.counterexample->second}};
        checks.push_back({{"name", c.name}, {"premises", c.premises}, {"violations", c.violations}, {"counterexample", ce}});
    }
    Json report = {{"command", "lemmas"}, {"trials", trials}, {"seed", seed}, {"ok", r.ok()}, {"checks", std::move(checks)}};
    return emit(out, report, r.ok());
}

Json frame_check_json(const wigner::FrameCheck &c) {
    return {{"ok", c.ok()},
            {"count", c.count},
            {"hermitian", c.hermitian},
            {"unit_trace", c.unit_trace},
            {"involution", c.involution},
            {"orthogonality", c.orthogonality},
            {"completeness", c.completeness}};
}

int cmd_wigner_frame(std::size_t n, std::ostream &out) {
    const wigner::WignerFrame f = wigner::phase_point_operators(n);
    Json ops = Json::array();
    for (const auto &s : f.operators()) ops.push_back(io::to_json(s));
    const wigner::FrameCheck c = wigner::check_frame(f);
    Json report = {{"command", "wigner frame"},   {"dim", n},          {"norm_const", f.norm_const()},
                   {"labels", f.space().labels()}, {"operators", ops}, {"check", frame_check_json(c)}};
    return emit(out, report, c.ok());
}

int cmd_wigner_state(const std::string &path, std::optional<std::size_t> dim, bool csv, std::ostream &out) {
    const Ket ket = io::ket_from_json(io::read_file(path));
    if (dim && *dim != ket.dim())
        throw Error(ErrorCode::DimMismatch, "--dim " + std::to_string(*dim) + " but the ket has dimension " +
                                                std::to_string(ket.dim()));
    auto rho = quantum::DensityMatrix::from_ket(ket);
    const bool padded = ket.dim() % 2 == 0;
    if (padded) rho = wigner::pad_state(rho);
    const wigner::WignerFrame f = wigner::frame_for(wigner::Object::matrix(ket.dim()));
    const wigner::WignerVector v = wigner::wigner_vector(rho, f);
    if (csv) {
        out << "point,weight\n";
        for (std::size_t i = 0; i < v.weights.size(); ++i)
            out << "\"" << f.space().label(i) << "\"," << csv_number(v.weights[i]) << "\n";
        return kExitPass;
    }
    const auto &w = v.weights.weights();
    const double min_w = *std::min_element(w.begin(), w.end());
    Json report = {{"command", "wigner state"}, {"dim", f.dim()},        {"padded", padded},
                   {"points", f.space().labels()}, {"weights", w},      {"min_weight", min_w},
                   {"negative", min_w < -kDerivedTol}};
    return emit(out, report, true);
}

int cmd_wigner_functor(std::size_t dim, std::size_t trials, std::uint64_t seed, double tol, std::ostream &out) {
    const wigner::WignerFragment wf = wigner::make_fragment(dim, trials, trials, seed);
    const ontomodel::OperationalReport r = ontomodel::check_operational_model(wf.fragment, wf.tests, tol);
    Json report = {{"command", "wigner functor-check"},
                   {"dim", dim},
                   {"trials", trials},
                   {"seed", seed},
                   {"tolerance", tol},
                   {"ok", r.ok()},
                   {"compositions", r.compositions},
                   {"identities", r.identities},
                   {"evaluations", r.evaluations},
                   {"max_composition_error", r.max_composition_error},
                   {"max_identity_error", r.max_identity_error},
                   {"max_evaluation_error", r.max_evaluation_error},
                   {"failures", r.failures}};
    return emit(out, report, r.ok());
}

Json decision_json(const antidist::AntidistResult &r) {
    if (r.certified())
        return {{"decision", "certified"},
                {"response", r.certificate->response.values()},
                {"residuals", {r.certificate->on_target, r.certificate->on_others}}};
    return {{"decision", "refuted"},
            {"separating_direction", {r.refutation->u_target, r.refutation->u_others}},
            {"margin", r.refutation->margin}};
}

int cmd_wigner_epistemic(const std::string &psi_path, const std::string &phi_path, std::ostream &out) {
    Ket psi = io::ket_from_json(io::read_file(psi_path), "psi");
    Ket phi = io::ket_from_json(io::read_file(phi_path), "phi");
    if (psi.dim() != phi.dim()) throw Error(ErrorCode::DimMismatch, "psi and phi have different dimensions");
    const bool padded = psi.dim() % 2 == 0;
    if (padded) {
        auto pad = [](const Ket &k) {
            std::vector<Complex> v(k.amplitudes().begin(), k.amplitudes().end());
            v.push_back(0.0);
            return Ket(std::move(v));
        };
        psi = pad(psi);
        phi = pad(phi);
    }
    const wigner::WignerFrame f = wigner::phase_point_operators(psi.dim());
    const wigner::EpistemicReport r = wigner::epistemic_report(psi, phi, f);
    const bool nontrivial = r.overlap > ontomodel::kStrictMargin && r.overlap < 1.0 - ontomodel::kStrictMargin;
    Json report = {{"command", "wigner epistemic"},
                   {"dim", f.dim()},
                   {"padded", padded},
                   {"overlap", r.overlap},
                   {"anti_distinguishable", r.anti_distinguishable},
                   {"epistemic_witness", nontrivial && !r.anti_distinguishable},
                   {"target_psi", decision_json(r.target_psi)},
                   {"target_phi", decision_json(r.target_phi)},
                   {"trace_distance", r.trace_distance},
                   {"l1_bound", r.l1_bound},
                   {"bound_holds", r.bound_holds},
                   {"gap", r.gap}};
    return emit(out, report, r.bound_holds);
}

Json measure_report_json(const kernels::FiniteSpace &space, const qmeasure::MeasureReport &r) {
    Json negative = Json::array(), triples = Json::array(), kolmogorov = Json::array();
    for (auto u : r.negative) negative.push_back(subset_labels(space, u));
    for (const auto &t : r.sum_rule)
        triples.push_back({{"u", subset_labels(space, t.u)},
                           {"v", subset_labels(space, t.v)},
                           {"w", subset_labels(space, t.w)},
                           {"lhs", t.lhs},
                           {"rhs", t.rhs}});
    for (const auto &k : r.additivity)
        kolmogorov.push_back(
            {{"u", subset_labels(space, k.u)}, {"v", subset_labels(space, k.v)}, {"joint", k.joint}, {"sum", k.sum}});
    return {{"ok", r.ok()},
            {"normalization", r.normalization},
            {"normalized", r.normalized},
            {"negative_subsets", std::move(negative)},
            {"triples_checked", r.triples},
            {"max_sum_rule_error", r.max_sum_rule_error},
            {"sum_rule_violations", std::move(triples)},
            {"kolmogorov_violations", std::move(kolmogorov)}};
}

int cmd_qmeasure(const std::string &path, double tol, std::ostream &out) {
    const io::QMeasureInput in = io::qmeasure_from_json(io::read_file(path));
    Json report = {{"command", "qmeasure validate"}, {"tolerance", tol}};
    bool ok = true;
    std::optional<qmeasure::QuantumMeasure> measure = in.measure;
    if (in.decoherence) {
        const qmeasure::DecoherenceReport d = qmeasure::validate_decoherence(*in.decoherence, tol);
        report["form"] = "decoherence";
        report["decoherence"] = {{"ok", d.ok()},
                                 {"hermitian", d.hermitian},
                                 {"hermitian_error", d.hermitian_error},
                                 {"normalization", io::to_json(d.normalization)},
                                 {"normalized", d.normalized},
                                 {"min_eigenvalue", d.min_eigenvalue},
                                 {"families_checked", d.families_checked},
                                 {"min_family_eigenvalue", d.min_family_eigenvalue},
                                 {"strongly_positive", d.strongly_positive}};
        ok = d.ok();
        if (ok) measure = qmeasure::measure_from_decoherence(*in.decoherence);
    } else {
        report["form"] = "measure";
    }
    if (measure) {
        const qmeasure::MeasureReport m = qmeasure::validate_quantum_measure(*measure, tol);
        report["measure"] = measure_report_json(measure->space(), m);
        ok = ok && m.ok();
    }
    report["ok"] = ok;
    return emit(out, report, ok);
}

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Checks ontological models, anti-distinguishability, the PBR pipeline, discrete Wigner "
                 "functors and quantum measures.",
                 "ontokit"};
    app.footer(kSchemas);
    app.require_subcommand(1);

    std::string path, psi, phi;
    std::optional<double> tol;
    std::optional<std::size_t> copies, dim;
    std::size_t target = 0, trials = 1000, frame_n = 0, wig_dim = 3, wig_trials = 200;
    std::uint64_t seed = 42, wig_seed = 7;
    bool csv = false;

    auto *vm = app.add_subcommand("validate-model", "Validate an ontological model and classify it");
    vm->add_option("file", path, "model JSON")->required();
    vm->add_option("--tol", tol, "Born-rule tolerance (default 1e-7)");

    auto *ad = app.add_subcommand("antidist", "Decide anti-distinguishability of one ensemble member");
    ad->add_option("file", path, "ensemble JSON")->required();
    ad->add_option("--target", target, "index of the member to rule out")->required();
    ad->add_flag("--csv", csv, "tabular output");

    auto *pbr = app.add_subcommand("pbr-demo", "Compression plus entangled-measurement pipeline for a pair of states");
    pbr->add_option("--psi", psi, "ket JSON")->required();
    pbr->add_option("--phi", phi, "ket JSON")->required();
    pbr->add_option("--n", copies, "number of copies (default: least n with overlap^n <= 1/sqrt(2))");
    pbr->add_flag("--csv", csv, "tabular output");

    auto *lem = app.add_subcommand("lemmas", "Randomized tensor-lemma suite on distribution pairs");
    lem->add_option("--trials", trials, "number of random pairs")->capture_default_str();
    lem->add_option("--seed", seed, "RNG seed")->capture_default_str();

    auto *wig = app.add_subcommand("wigner", "Discrete Wigner frames and the signed-kernel functor");
    wig->require_subcommand(1);
    auto *wf = wig->add_subcommand("frame", "Emit the phase-point operators for odd n");
    wf->add_option("n", frame_n, "dimension")->required();
    auto *ws = wig->add_subcommand("state", "Emit the Wigner vector of a pure state");
    ws->add_option("file", path, "ket JSON")->required();
    ws->add_option("--dim", dim, "expected dimension");
    ws->add_flag("--csv", csv, "tabular output");
    auto *wc = wig->add_subcommand("functor-check", "Functoriality and evaluation on random channels");
    wc->add_option("--dim", wig_dim, "dimension")->capture_default_str();
    wc->add_option("--trials", wig_trials, "random channel pairs (and as many state/measurement probes)")
        ->capture_default_str();
    wc->add_option("--seed", wig_seed, "RNG seed")->capture_default_str();
    wc->add_option("--tol", tol, "entrywise tolerance (default 1e-8)");
    auto *we = wig->add_subcommand("epistemic", "Anti-distinguishability and trace-distance bound of two states");
    we->add_option("--psi", psi, "ket JSON")->required();
    we->add_option("--phi", phi, "ket JSON")->required();

    auto *qm = app.add_subcommand("qmeasure", "Quantum measures and decoherence functionals");
    qm->require_subcommand(1);
    auto *qv = qm->add_subcommand("validate", "Validate a decoherence functional or a measure table");
    qv->add_option("file", path, "qmeasure JSON")->required();
    qv->add_option("--tol", tol, "tolerance (default 1e-9)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError &e) {
        app.exit(e, out, err);
        return kExitError;
    }

    try {
        if (*vm) return cmd_validate_model(path, resolve_tol(tol, ontomodel::kBornTol), out);
        if (*ad) return cmd_antidist(path, target, csv, out);
        if (*pbr) return cmd_pbr(psi, phi, copies, csv, out);
        if (*lem) return cmd_lemmas(trials, seed, out);
        if (*wf) return cmd_wigner_frame(frame_n, out);
        if (*ws) return cmd_wigner_state(path, dim, csv, out);
        if (*wc) return cmd_wigner_functor(wig_dim, wig_trials, wig_seed, resolve_tol(tol, ontomodel::kFunctorTol), out);
        if (*we) return cmd_wigner_epistemic(psi, phi, out);
        if (*qv) return cmd_qmeasure(path, resolve_tol(tol, qmeasure::kMeasureTol), out);
    } catch (const Error &e) {
        err << "error: " << e.what() << "\n";
        return kExitError;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return kExitError;
    }
    err << app.help();
    return kExitError;
}

}  // namespace ontokit::cli
