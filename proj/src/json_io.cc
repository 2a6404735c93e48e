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

#include "ontokit/json_io.h"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "ontokit/error.h"

namespace ontokit::io {

namespace {

[[noreturn]] void schema(const std::string &where, const std::string &what) {
    throw Error(ErrorCode::Schema, "field '" + where + "': " + what);
}

bool is_scalar(const Json &j) { return !j.is_array() && !j.is_object(); }

// Arrays of scalars, or of arrays of scalars, print on one line.
bool is_compact(const Json &j) {
    if (!j.is_array()) return is_scalar(j);
    for (const auto &e : j)
        if (!is_scalar(e) && !(e.is_array() && std::all_of(e.begin(), e.end(), is_scalar))) return false;
    return true;
}

void write(const Json &j, int indent, int depth, std::string &out) {
    const std::string pad(static_cast<std::size_t>(indent * (depth + 1)), ' ');
    const std::string close_pad(static_cast<std::size_t>(indent * depth), ' ');
    switch (j.type()) {
        case Json::value_t::number_float: {
            const double x = j.get<double>();
            if (!std::isfinite(x)) {
                out += "null";
            } else {
                char buf[32];
                std::snprintf(buf, sizeof buf, "%.17g", x);
                out += buf;
            }
            return;
        }
        case Json::value_t::array: {
            if (j.empty()) {
                out += "[]";
                return;
            }
            const bool inline_ = is_compact(j);
            out += "[";
            bool first = true;
            for (const auto &e : j) {
                if (!first) out += inline_ ? ", " : ",";
                if (!inline_) out += "\n" + pad;
                write(e, indent, depth + 1, out);
                first = false;
            }
            if (!inline_) out += "\n" + close_pad;
            out += "]";
            return;
        }
        case Json::value_t::object: {
            if (j.empty()) {
                out += "{}";
                return;
            }
            out += "{";
            bool first = true;
            for (const auto &[k, v] : j.items()) {
                if (!first) out += ",";
                out += "\n" + pad + Json(k).dump() + ": ";
                write(v, indent, depth + 1, out);
                first = false;
            }
            out += "\n" + close_pad + "}";
            return;
        }
        default:
            out += j.dump();
    }
}

const Json &field(const Json &j, const std::string &key, const std::string &where) {
    if (!j.is_object()) schema(where, "expected an object");
    const auto it = j.find(key);
    if (it == j.end()) schema(where + "." + key, "missing");
    return *it;
}

double number(const Json &j, const std::string &where) {
    if (!j.is_number()) schema(where, "expected a number");
    return j.get<double>();
}

std::size_t count(const Json &j, const std::string &where) {
    if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0))
        schema(where, "expected a nonnegative integer");
    return j.get<std::size_t>();
}

const Json &array(const Json &j, const std::string &where) {
    if (!j.is_array()) schema(where, "expected an array");
    return j;
}

std::vector<std::string> labels(const Json &j, const std::string &where) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < array(j, where).size(); ++i) {
        if (!j[i].is_string()) schema(where + "[" + std::to_string(i) + "]", "expected a string label");
        out.push_back(j[i].get<std::string>());
    }
    return out;
}

std::vector<double> numbers(const Json &j, const std::string &where) {
    std::vector<double> out;
    for (std::size_t i = 0; i < array(j, where).size(); ++i) out.push_back(number(j[i], where + "[" + std::to_string(i) + "]"));
    return out;
}

// Runs a constructor and rethrows its validation failure as a schema error.
template <class F>
auto build(const std::string &where, F &&f) -> decltype(f()) {
    try {
        return f();
    } catch (const Error &e) {
        if (e.code() == ErrorCode::Schema) throw;
        schema(where, e.what());
    }
}

kernels::FiniteSpace space_from(const Json &j, const std::string &where) {
    return build(where, [&] { return kernels::FiniteSpace(labels(j, where)); });
}

}  // namespace

std::string dump(const Json &j, int indent) {
    std::string out;
    write(j, indent, 0, out);
    out += "\n";
    return out;
}

Json parse(const std::string &text, const std::string &what) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error &e) {
        throw Error(ErrorCode::Schema, what + ": malformed JSON (" + e.what() + ")");
    }
}

Json read_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::Schema, "cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse(ss.str(), path);
}

Json to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Json to_json(const ComplexMatrix &m) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Json to_json(const RealMatrix &m) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
        rows.push_back(std::move(row));
    }
    return rows;
}

Json to_json(const Ket &k) {
    Json amps = Json::array();
    for (const Complex &a : k.amplitudes()) amps.push_back(to_json(a));
    return {{"dim", k.dim()}, {"amplitudes", std::move(amps)}};
}

Json to_json(const quantum::Channel &c) {
    Json kraus = Json::array();
    for (const auto &k : c.kraus()) kraus.push_back(to_json(k));
    return {{"in_dim", c.in_dim()}, {"out_dim", c.out_dim()}, {"kraus", std::move(kraus)},
            {"trace_preserving", c.trace_preserving()}};
}

Json to_json(const kernels::SignedKernel &k) {
    return {{"from", k.from().labels()},
            {"to", k.to().labels()},
            {"matrix", to_json(k.matrix())},
            {"convention", "column-stochastic"}};
}

Json to_json(const kernels::Distribution &mu) {
    return {{"points", mu.space().labels()}, {"weights", mu.weights()}};
}

Complex complex_from_json(const Json &j, const std::string &where) {
    if (j.is_number()) return {j.get<double>(), 0.0};
    if (!j.is_array() || j.size() != 2) schema(where, "expected [re, im]");
    return {number(j[0], where + "[0]"), number(j[1], where + "[1]")};
}

ComplexMatrix matrix_from_json(const Json &j, const std::string &where) {
    if (!j.is_array() || j.empty()) schema(where, "expected a nonempty array of rows");
    const std::size_t rows = j.size();
    const std::size_t cols = array(j[0], where + "[0]").size();
    if (cols == 0) schema(where + "[0]", "empty row");
    std::vector<Complex> entries;
    for (std::size_t r = 0; r < rows; ++r) {
        const std::string rw = where + "[" + std::to_string(r) + "]";
        if (array(j[r], rw).size() != cols) schema(rw, "row length differs from the first row");
        for (std::size_t c = 0; c < cols; ++c) entries.push_back(complex_from_json(j[r][c], rw + "[" + std::to_string(c) + "]"));
    }
    return ComplexMatrix(rows, cols, std::move(entries));
}

Ket ket_from_json(const Json &j, const std::string &where) {
    const Json &amps = array(field(j, "amplitudes", where), where + ".amplitudes");
    std::vector<Complex> v;
    for (std::size_t i = 0; i < amps.size(); ++i)
        v.push_back(complex_from_json(amps[i], where + ".amplitudes[" + std::to_string(i) + "]"));
    if (j.contains("dim") && count(j["dim"], where + ".dim") != v.size())
        schema(where + ".dim", "does not match the number of amplitudes");
    if (v.empty()) schema(where + ".amplitudes", "empty");
    return build(where + ".amplitudes", [&] { return Ket(v); });
}

quantum::Channel channel_from_json(const Json &j, const std::string &where) {
    const std::size_t in = count(field(j, "in_dim", where), where + ".in_dim");
    const std::size_t out = count(field(j, "out_dim", where), where + ".out_dim");
    const Json &kj = array(field(j, "kraus", where), where + ".kraus");
    std::vector<ComplexMatrix> kraus;
    for (std::size_t i = 0; i < kj.size(); ++i) kraus.push_back(matrix_from_json(kj[i], where + ".kraus[" + std::to_string(i) + "]"));
    const Json &tp = field(j, "trace_preserving", where);
    if (!tp.is_boolean()) schema(where + ".trace_preserving", "expected a boolean");
    return build(where, [&] { return quantum::Channel(in, out, kraus, tp.get<bool>()); });
}

kernels::SignedKernel kernel_from_json(const Json &j, const std::string &where) {
    const Json &conv = field(j, "convention", where);
    if (!conv.is_string() || conv.get<std::string>() != "column-stochastic")
        schema(where + ".convention", "must be \"column-stochastic\"");
    kernels::FiniteSpace from = space_from(field(j, "from", where), where + ".from");
    kernels::FiniteSpace to = space_from(field(j, "to", where), where + ".to");
    const Json &mj = array(field(j, "matrix", where), where + ".matrix");
    if (mj.size() != to.size()) schema(where + ".matrix", "needs one row per point of 'to'");
    std::vector<double> entries;
    for (std::size_t r = 0; r < mj.size(); ++r) {
        std::vector<double> row = numbers(mj[r], where + ".matrix[" + std::to_string(r) + "]");
        if (row.size() != from.size()) schema(where + ".matrix[" + std::to_string(r) + "]", "needs one entry per point of 'from'");
        entries.insert(entries.end(), row.begin(), row.end());
    }
    return build(where, [&] { return kernels::SignedKernel(from, to, RealMatrix(to.size(), from.size(), entries)); });
}

std::vector<kernels::Distribution> ensemble_from_json(const Json &j) {
    kernels::FiniteSpace space = space_from(field(j, "points", "ensemble file"), "points");
    const Json &ej = array(field(j, "ensemble", "ensemble file"), "ensemble");
    if (ej.empty()) schema("ensemble", "must contain at least one distribution");
    std::vector<kernels::Distribution> out;
    for (std::size_t i = 0; i < ej.size(); ++i) {
        const std::string w = "ensemble[" + std::to_string(i) + "]";
        std::vector<double> weights = numbers(ej[i], w);
        out.push_back(build(w, [&] { return kernels::Distribution(space, weights); }));
    }
    return out;
}

Json ensemble_to_json(const std::vector<kernels::Distribution> &ensemble) {
    Json e = Json::array();
    for (const auto &mu : ensemble) e.push_back(mu.weights());
    return {{"points", ensemble.front().space().labels()}, {"ensemble", std::move(e)}};
}

ontomodel::OntModel model_from_json(const Json &j) {
    kernels::FiniteSpace ontic = space_from(field(j, "ontic", "model"), "ontic");
    std::vector<std::pair<std::string, Ket>> states;
    const Json &sj = array(field(j, "states", "model"), "states");
    for (std::size_t i = 0; i < sj.size(); ++i) {
        const std::string w = "states[" + std::to_string(i) + "]";
        const Json &label = field(sj[i], "label", w);
        if (!label.is_string()) schema(w + ".label", "expected a string");
        states.emplace_back(label.get<std::string>(), ket_from_json(field(sj[i], "ket", w), w + ".ket"));
    }
    std::map<std::string, kernels::Distribution> dists;
    const Json &dj = field(j, "distributions", "model");
    if (!dj.is_object()) schema("distributions", "expected an object keyed by state label");
    for (const auto &[label, weights] : dj.items()) {
        const std::string w = "distributions." + label;
        std::vector<double> v = numbers(weights, w);
        dists.emplace(label, build(w, [&] { return kernels::Distribution(ontic, v); }));
    }
    std::vector<ontomodel::OntMeasurement> ms;
    const Json &mj = array(field(j, "measurements", "model"), "measurements");
    for (std::size_t i = 0; i < mj.size(); ++i) {
        const std::string w = "measurements[" + std::to_string(i) + "]";
        const Json &bj = array(field(mj[i], "basis", w), w + ".basis");
        std::vector<Ket> basis;
        for (std::size_t k = 0; k < bj.size(); ++k) basis.push_back(ket_from_json(bj[k], w + ".basis[" + std::to_string(k) + "]"));
        if (basis.empty()) schema(w + ".basis", "empty");
        quantum::ProjectiveMeasurement pm = build(w + ".basis", [&] { return quantum::ProjectiveMeasurement(basis); });
        const Json &rj = array(field(mj[i], "responses", w), w + ".responses");
        std::vector<kernels::ResponseFunction> xis;
        for (std::size_t k = 0; k < rj.size(); ++k) {
            const std::string rw = w + ".responses[" + std::to_string(k) + "]";
            std::vector<double> v = numbers(rj[k], rw);
            xis.push_back(build(rw, [&] { return kernels::ResponseFunction(ontic, v); }));
        }
        ms.push_back({std::move(pm), std::move(xis)});
    }
    return ontomodel::OntModel{std::move(ontic), std::move(states), std::move(dists), std::move(ms)};
}

Json model_to_json(const ontomodel::OntModel &m) {
    Json states = Json::array();
    for (const auto &[label, ket] : m.states) states.push_back({{"label", label}, {"ket", to_json(ket)}});
    Json dists = Json::object();
    for (const auto &[label, ket] : m.states) {
        const auto it = m.distributions.find(label);
        if (it != m.distributions.end()) dists[label] = it->second.weights();
    }
    Json ms = Json::array();
    for (const auto &meas : m.measurements) {
        Json basis = Json::array();
        for (const Ket &k : meas.basis.outcomes()) basis.push_back(to_json(k));
        Json responses = Json::array();
        for (const auto &xi : meas.responses) responses.push_back(xi.values());
        ms.push_back({{"basis", std::move(basis)}, {"responses", std::move(responses)}});
    }
    return {{"ontic", m.ontic.labels()}, {"states", std::move(states)}, {"distributions", std::move(dists)},
            {"measurements", std::move(ms)}};
}

QMeasureInput qmeasure_from_json(const Json &j) {
    kernels::FiniteSpace space = space_from(field(j, "points", "qmeasure file"), "points");
    const bool has_d = j.contains("decoherence"), has_m = j.contains("measure");
    if (has_d == has_m) schema("decoherence|measure", "exactly one of the two forms is required");
    if (space.size() > qmeasure::kMaxPoints)
        throw Error(ErrorCode::TooLarge, "at most " + std::to_string(qmeasure::kMaxPoints) + " points are supported");
    QMeasureInput in;
    if (has_d) {
        ComplexMatrix d = matrix_from_json(j["decoherence"], "decoherence");
        in.decoherence = build("decoherence", [&] { return qmeasure::DecoherenceFunctional(space, d); });
        return in;
    }
    const Json &mj = j["measure"];
    if (!mj.is_object()) schema("measure", "expected an object keyed by decimal bitmask");
    const std::size_t subsets = std::size_t{1} << space.size();
    std::vector<double> values(subsets, 0.0);
    std::vector<bool> seen(subsets, false);
    for (const auto &[key, value] : mj.items()) {
        std::size_t mask = 0, used = 0;
        try {
            mask = std::stoul(key, &used);
        } catch (const std::exception &) {
            used = 0;
        }
        if (used != key.size() || key.empty() || mask >= subsets) schema("measure." + key, "not a bitmask of the points");
        values[mask] = number(value, "measure." + key);
        seen[mask] = true;
    }
    // The empty set may be omitted; every other subset needs a value.
    for (std::size_t u = 1; u < subsets; ++u)
        if (!seen[u]) schema("measure." + std::to_string(u), "missing");
    in.measure = qmeasure::QuantumMeasure(space, std::move(values));
    return in;
}

}  // namespace ontokit::io
