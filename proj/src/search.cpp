// Copyright 2026 The qssr Authors
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

#include "qssr/search.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <sstream>

#include <nlohmann/json.hpp>

#include "qssr/error.hpp"

namespace qssr {

AngleSequence fixed_point_angles(std::size_t rounds, double delta) {
    if (rounds < 1) throw ParameterError("fixed-point schedule needs at least one round");
    if (!(delta > 0.0 && delta < 1.0)) throw ParameterError("delta must lie in (0, 1)");
    AngleSequence seq;
    seq.rounds = rounds;
    seq.delta = delta;
    const double L = static_cast<double>(seq.degree());
    const double gamma = 1.0 / std::cosh(std::acosh(1.0 / delta) / L);
    const double s = std::sqrt(std::max(0.0, 1.0 - gamma * gamma));
    for (std::size_t j = 1; j <= rounds; ++j) {
        const double t = std::tan(2.0 * std::numbers::pi * static_cast<double>(j) / L) * s;
        seq.alphas.push_back(2.0 * std::atan2(1.0, t));  // arccot with range (0, pi)
    }
    for (std::size_t j = 0; j < rounds; ++j) seq.betas.push_back(-seq.alphas[rounds - 1 - j]);
    return seq;
}

std::size_t required_rounds(double w_min, double delta) {
    if (!(w_min > 0.0 && w_min <= 1.0)) throw ParameterError("w_min must lie in (0, 1]");
    if (!(delta > 0.0 && delta < 1.0)) throw ParameterError("delta must lie in (0, 1)");
    const double bound = std::log(2.0 / delta) / std::sqrt(w_min);
    return static_cast<std::size_t>(std::ceil(bound - 1e-12));
}

std::size_t rounds_for_degree(std::size_t degree) { return std::max<std::size_t>(1, degree / 2); }

std::string_view oracle_mode_name(OracleMode mode) {
    switch (mode) {
        case OracleMode::Circuit: return "circuit";
        case OracleMode::Diagonal: return "diagonal";
        case OracleMode::Auto: return "auto";
    }
    return "?";
}

OracleMode parse_oracle_mode(std::string_view text) {
    if (text == "circuit") return OracleMode::Circuit;
    if (text == "diagonal") return OracleMode::Diagonal;
    if (text == "auto") return OracleMode::Auto;
    throw ValidationError("oracle must be circuit, diagonal or auto");
}

const TraceRecord* SearchTrace::first_crossing(double threshold) const {
    for (const TraceRecord& r : records)
        if (r.marked_probability >= threshold) return &r;
    return nullptr;
}

SearchEngine::SearchEngine(const Instance& instance, const SearchOptions& options) {
    if (!(options.delta > 0.0 && options.delta < 1.0)) throw ParameterError("delta must lie in (0, 1)");
    pipeline_ = build_pipeline(instance, options.mode,
                               {.coin_reuse = options.coin_reuse, .max_qubits = std::numeric_limits<std::size_t>::max()});
    const std::size_t total = pipeline_.layout.total;
    oracle_ = options.oracle;
    if (oracle_ == OracleMode::Auto) {
        oracle_ = total <= options.circuit_qubit_limit ? OracleMode::Circuit : OracleMode::Diagonal;
    }
    if (oracle_ == OracleMode::Circuit) {
        width_ = total;
    } else {
        // Preparation wires are the lowest ones in every layout.
        width_ = pipeline_.prep_wires.size();
        for (Wire w : pipeline_.prep_wires)
            if (w >= width_) throw LayoutError("preparation wires are not the lowest wires of the layout");
    }
    if (width_ > kMaxQubits) {
        throw CapacityError("search needs " + std::to_string(width_) + " simulated qubits, limit is " +
                            std::to_string(kMaxQubits));
    }
    mask_ = marked_mask(instance, pipeline_.layout);
    prep_ = narrow(pipeline_.prep);
    unprep_ = prep_.inverse();
    prepared_ = StateVector(width_);
    prepared_.apply(prep_);
    prepared_.refresh_zero_wires();
}

Circuit SearchEngine::narrow(const Circuit& c) const {
    if (c.n_qubits() == width_) return c;
    Circuit out(width_);
    for (const GateOp& op : c.ops()) out.add(op);
    return out;
}

std::uint64_t SearchEngine::space_size() const {
    const Instance& inst = pipeline_.instance;
    if (pipeline_.mode == Mode::Full) return std::uint64_t{1} << pipeline_.layout.data_qubits();
    std::uint64_t n = 1;
    for (std::size_t e = 0; e < inst.jobs * inst.machines; ++e) n *= inst.window;
    return n;
}

void SearchEngine::apply_marked_reflection(StateVector& state, double angle) const {
    if (oracle_ == OracleMode::Circuit) {
        state.apply(build_marked_reflection(pipeline_, angle));
    } else {
        state.apply_mask_phase(mask_, angle);
    }
    state.refresh_zero_wires();
}

void SearchEngine::apply_initial_reflection(StateVector& state, double angle) const {
    state.apply(unprep_);
    const Wire target = pipeline_.prep_wires.front();
    const WireList others(pipeline_.prep_wires.begin() + 1, pipeline_.prep_wires.end());
    state.apply(GateOp::x(target));
    state.apply(GateOp::phase(target, angle, {}, others));
    state.apply(GateOp::x(target));
    state.apply(prep_);
    state.refresh_zero_wires();
}

StateVector SearchEngine::run(const std::vector<double>& marked_angles,
                              const std::vector<double>& initial_angles) const {
    if (marked_angles.size() != initial_angles.size()) throw ParameterError("angle lists differ in length");
    StateVector s = prepared_;
    for (std::size_t j = 0; j < marked_angles.size(); ++j) {
        apply_marked_reflection(s, marked_angles[j]);
        apply_initial_reflection(s, initial_angles[j]);
    }
    return s;
}

double SearchEngine::marked_probability(const StateVector& state) const {
    return qssr::marked_probability(state, mask_);
}

namespace {

SearchTrace start_trace(const SearchEngine& engine, const SearchOptions& options, std::string schedule,
                        std::size_t rounds) {
    SearchTrace t;
    t.instance = engine.pipeline().instance;
    t.mode = engine.pipeline().mode;
    t.schedule = std::move(schedule);
    t.rounds = rounds;
    t.delta = options.delta;
    t.seed = options.seed;
    t.oracle = engine.oracle();
    t.simulated_qubits = engine.simulated_qubits();
    t.solutions = engine.solutions();
    t.space_size = engine.space_size();
    t.records.push_back({0, 0, engine.marked_probability(engine.prepared())});
    return t;
}

}  // namespace

SearchTrace run_fixed_point(const SearchEngine& engine, const SearchOptions& options, std::size_t rounds) {
    SearchTrace t = start_trace(engine, options, "fixed_point", rounds);
    for (std::size_t r = 1; r <= rounds; ++r) {
        const AngleSequence seq = fixed_point_angles(r, options.delta);
        std::vector<double> marked, initial;
        for (std::size_t j = 0; j < r; ++j) {
            marked.push_back(seq.marked_angle(j));
            initial.push_back(seq.initial_angle(j));
        }
        const StateVector s = engine.run(marked, initial);
        t.records.push_back({seq.degree(), r, engine.marked_probability(s)});
    }
    return t;
}

SearchTrace run_fixed_point(const Instance& instance, const SearchOptions& options, std::size_t rounds) {
    return run_fixed_point(SearchEngine(instance, options), options, rounds);
}

SearchTrace run_grover(const SearchEngine& engine, const SearchOptions& options, std::size_t iterations) {
    SearchTrace t = start_trace(engine, options, "grover", iterations);
    StateVector s = engine.prepared();
    for (std::size_t r = 1; r <= iterations; ++r) {
        engine.apply_marked_reflection(s, std::numbers::pi);
        engine.apply_initial_reflection(s, std::numbers::pi);
        t.records.push_back({2 * r + 1, r, engine.marked_probability(s)});
    }
    return t;
}

SearchTrace run_grover(const Instance& instance, const SearchOptions& options, std::size_t iterations) {
    return run_grover(SearchEngine(instance, options), options, iterations);
}

std::string trace_to_csv(const SearchTrace& trace) {
    std::ostringstream out;
    out << "iteration,marked_probability\n";
    char buf[64];
    for (const TraceRecord& r : trace.records) {
        std::snprintf(buf, sizeof buf, "%zu,%.10g\n", r.iteration, r.marked_probability);
        out << buf;
    }
    return out.str();
}

std::string trace_to_json(const SearchTrace& trace) {
    nlohmann::ordered_json j;
    j["instance"] = nlohmann::ordered_json::parse(instance_to_json(trace.instance));
    j["mode"] = mode_name(trace.mode);
    j["schedule"] = trace.schedule;
    j["rounds"] = trace.rounds;
    j["delta"] = trace.delta;
    j["seed"] = trace.seed;
    j["oracle"] = oracle_mode_name(trace.oracle);
    j["simulated_qubits"] = trace.simulated_qubits;
    j["solutions"] = trace.solutions;
    j["space_size"] = trace.space_size;
    nlohmann::ordered_json records = nlohmann::ordered_json::array();
    for (const TraceRecord& r : trace.records) {
        records.push_back({{"iteration", r.iteration}, {"rounds", r.rounds}, {"marked_probability", r.marked_probability}});
    }
    j["records"] = records;
    return j.dump(2) + "\n";
}

VerifyReport verify_samples(const SearchEngine& engine, const StateVector& state, std::uint64_t shots,
                            std::uint64_t seed) {
    VerifyReport rep;
    rep.shots = shots;
    rep.seed = seed;
    const auto& inst = engine.pipeline().instance;
    const auto& layout = engine.pipeline().layout;
    for (const auto& [index, count] : sample(state, shots, seed)) {
        if (is_solution(inst, decode_basis(inst, layout, index))) rep.passing += count;
    }
    rep.pass_fraction = static_cast<double>(rep.passing) / static_cast<double>(shots);
    rep.exact_probability = engine.marked_probability(state);
    const double p = rep.exact_probability;
    rep.sigma = std::sqrt(std::max(p * (1.0 - p), 0.0) / static_cast<double>(shots));
    // A zero-variance distribution must reproduce the exact value.
    rep.consistent = std::abs(rep.pass_fraction - p) <= std::max(5.0 * rep.sigma, 1e-12);
    return rep;
}

std::string verify_to_json(const VerifyReport& report) {
    nlohmann::ordered_json j;
    j["shots"] = report.shots;
    j["seed"] = report.seed;
    j["passing"] = report.passing;
    j["pass_fraction"] = report.pass_fraction;
    j["exact_probability"] = report.exact_probability;
    j["sigma"] = report.sigma;
    j["consistent"] = report.consistent;
    return j.dump(2) + "\n";
}

}  // namespace qssr
