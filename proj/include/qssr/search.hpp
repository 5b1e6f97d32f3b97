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

#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qssr/circuits.hpp"
#include "qssr/problem.hpp"
#include "qssr/statevector.hpp"

namespace qssr {

/// Fixed-point schedule with `rounds` reflection pairs. The underlying
/// amplification polynomial has odd degree 2*rounds + 1.
struct AngleSequence {
    std::size_t rounds = 0;
    double delta = 0.1;
    std::vector<double> alphas;
    std::vector<double> betas;

    std::size_t degree() const { return 2 * rounds + 1; }
    /// Phase the marked reflection applies in round j (e^{i beta_j}).
    double marked_angle(std::size_t j) const { return betas.at(j); }
    /// Phase the initial reflection applies in round j (e^{-i alpha_j}).
    double initial_angle(std::size_t j) const { return -alphas.at(j); }
};

/// alpha_j = 2 arccot(tan(2 pi j / L) sqrt(1 - gamma^2)), beta_j = -alpha_{l-j+1},
/// with L = 2 rounds + 1 and 1/gamma = cosh(arccosh(1/delta) / L).
/// Throws ParameterError unless rounds >= 1 and 0 < delta < 1.
AngleSequence fixed_point_angles(std::size_t rounds, double delta);

/// Smallest integer L >= ln(2/delta) / sqrt(w_min): the polynomial degree that
/// guarantees success >= 1 - delta^2 whenever the marked fraction is >= w_min.
std::size_t required_rounds(double w_min, double delta);
/// Reflection pairs needed to reach degree `degree` (ceil((degree - 1) / 2), at least 1).
std::size_t rounds_for_degree(std::size_t degree);

enum class OracleMode {
    /// Gate-level condition circuits on the full layout.
    Circuit,
    /// Marked reflection applied as a diagonal phase over the data pattern;
    /// only the wires touched by the preparation are simulated.
    Diagonal,
    /// Circuit when the layout fits `circuit_qubit_limit`, Diagonal otherwise.
    Auto,
};

std::string_view oracle_mode_name(OracleMode mode);
OracleMode parse_oracle_mode(std::string_view text);

struct SearchOptions {
    Mode mode = Mode::Reduced;
    double delta = 0.1;
    OracleMode oracle = OracleMode::Auto;
    bool coin_reuse = true;
    std::size_t circuit_qubit_limit = 24;
    std::uint64_t seed = 0;
};

struct TraceRecord {
    /// 0 after preparation, else the polynomial degree 2 * rounds + 1.
    std::size_t iteration = 0;
    std::size_t rounds = 0;
    double marked_probability = 0.0;
};

struct SearchTrace {
    Instance instance;
    Mode mode = Mode::Reduced;
    std::string schedule;  // "fixed_point" or "grover"
    std::size_t rounds = 0;
    double delta = 0.0;
    std::uint64_t seed = 0;
    OracleMode oracle = OracleMode::Circuit;
    std::size_t simulated_qubits = 0;
    std::uint64_t solutions = 0;
    std::uint64_t space_size = 0;
    std::vector<TraceRecord> records;

    /// First record at or above `threshold`, if any.
    const TraceRecord* first_crossing(double threshold) const;
};

/// Owns the pipeline, marked mask and prepared state of one instance and mode.
class SearchEngine {
  public:
    SearchEngine(const Instance& instance, const SearchOptions& options);

    const PreparedPipeline& pipeline() const { return pipeline_; }
    const BasisMask& mask() const { return mask_; }
    OracleMode oracle() const { return oracle_; }
    std::size_t simulated_qubits() const { return width_; }
    const StateVector& prepared() const { return prepared_; }
    std::uint64_t solutions() const { return mask_.count(); }
    std::uint64_t space_size() const;

    void apply_marked_reflection(StateVector& state, double angle) const;
    void apply_initial_reflection(StateVector& state, double angle) const;
    /// Prepared state followed by one marked/initial pair per angle pair.
    StateVector run(const std::vector<double>& marked_angles, const std::vector<double>& initial_angles) const;
    double marked_probability(const StateVector& state) const;

  private:
    Circuit narrow(const Circuit& c) const;

    PreparedPipeline pipeline_;
    BasisMask mask_;
    OracleMode oracle_ = OracleMode::Circuit;
    std::size_t width_ = 0;
    Circuit prep_;
    Circuit unprep_;
    StateVector prepared_{1};
};

/// Iteration-0 record, then for every r in 1..rounds the final probability of
/// a fresh r-round fixed-point schedule (iteration 2r + 1).
SearchTrace run_fixed_point(const Instance& instance, const SearchOptions& options, std::size_t rounds);
SearchTrace run_fixed_point(const SearchEngine& engine, const SearchOptions& options, std::size_t rounds);

/// Plain amplitude amplification (both phases pi); one record per Grover
/// iteration t at iteration 2t + 1.
SearchTrace run_grover(const Instance& instance, const SearchOptions& options, std::size_t iterations);
SearchTrace run_grover(const SearchEngine& engine, const SearchOptions& options, std::size_t iterations);

/// `iteration,marked_probability` with 10 significant digits.
std::string trace_to_csv(const SearchTrace& trace);
std::string trace_to_json(const SearchTrace& trace);

struct VerifyReport {
    std::uint64_t shots = 0;
    std::uint64_t seed = 0;
    std::uint64_t passing = 0;
    double pass_fraction = 0.0;
    double exact_probability = 0.0;
    double sigma = 0.0;
    bool consistent = false;  // |pass_fraction - exact| <= 5 sigma
};

/// Samples `state` and checks each outcome's data pattern against the classical predicates.
VerifyReport verify_samples(const SearchEngine& engine, const StateVector& state, std::uint64_t shots,
                            std::uint64_t seed);
std::string verify_to_json(const VerifyReport& report);

}  // namespace qssr
