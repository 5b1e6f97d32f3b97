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
#include <vector>

#include "qssr/circuit.hpp"
#include "qssr/problem.hpp"

namespace qssr {

struct RatioRow {
    std::size_t machines = 0;
    std::size_t jobs = 0;
    std::uint64_t window = 0;
    Mode mode = Mode::Full;
    std::uint64_t space_size = 0;
    std::uint64_t solutions = 0;
    double sqrt_ratio = 0.0;
};

struct RatioCurves {
    std::vector<RatioRow> rows;
    /// Points skipped because a size or enumeration exceeded its budget.
    std::vector<std::string> skipped;
};

/// Full and reduced rows for every (I, K) with K in [k_min, k_max], all offsets zero.
RatioCurves ratio_curves(std::uint64_t window, const std::vector<std::size_t>& machines, std::size_t k_min,
                         std::size_t k_max, const CountOptions& options = {});

/// Header `I,K,C,mode,space_size,solutions,sqrt_ratio`.
std::string ratio_rows_to_csv(const std::vector<RatioRow>& rows);

/// Identifies the decomposition rules gate_count uses.
inline constexpr const char* kGateRuleTable = "linear-ancilla-v1";

/// Basic gates (generic one-qubit gates and CNOTs) needed for one op:
///  - each anti-control costs two X gates around the op;
///  - uncontrolled one-qubit gate: 1; swap: 3 CNOTs;
///  - X with m controls: 1 (m = 1), 15 (Toffoli, m = 2), 15 (2(m - 2) + 1) for m >= 3;
///  - other one-qubit gates with 1 control: 3; with m >= 2 controls: the
///    m-controlled X into a scratch wire, a 1-controlled gate, and the uncompute;
///  - controlled swap: 2 CNOTs plus an (m + 1)-controlled X.
std::uint64_t basic_gate_count(const GateOp& op);
std::uint64_t basic_gate_count(const Circuit& circuit);

struct ResourceReport {
    std::size_t machines = 0;
    std::size_t jobs = 0;
    std::uint64_t window = 0;
    std::uint64_t max_offset = 0;
    Mode mode = Mode::Full;
    std::size_t data_qubits = 0;
    std::size_t offset_qubits = 0;
    std::size_t flag_qubits = 0;
    std::size_t group_a = 0;
    std::size_t group_b = 0;
    std::size_t coin_qubits = 0;
    std::size_t sign_qubits = 0;
    std::size_t total = 0;
    /// I * K * log2((C-1)K + 1) + I(I-1)K/2 + 1, the closed-form estimate.
    double formula_total = 0.0;
    /// Marked plus initial reflection expanded with kGateRuleTable; 0 when not requested.
    std::uint64_t basic_gate_count_per_iteration = 0;
    std::string rule_table = kGateRuleTable;
};

/// Counts from build_layout. `instance` may carry any window >= 2 here; the
/// coin register then has ceil(log2 C) wires.
ResourceReport qubit_report(const Instance& instance, Mode mode);

/// Basic-gate count of one (marked reflection, initial reflection) pair.
std::uint64_t gate_count_report(const Instance& instance, Mode mode);

/// qubit_report plus gate_count_report.
ResourceReport resource_report(const Instance& instance, Mode mode);

std::string resource_report_to_json(const ResourceReport& report);

}  // namespace qssr
