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
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "qssr/qarith.hpp"
#include "qssr/statevector.hpp"

namespace qssr {

/// Full: uniform superposition over every data pattern, feasibility checked by flags.
/// Reduced: quantum-walk preparation over feasible paths only.
enum class Mode { Full, Reduced };

std::string_view mode_name(Mode mode);
/// Accepts "full" or "reduced"; throws ValidationError otherwise.
Mode parse_mode(std::string_view text);

/// Scheduling instance: `machines` machines with `jobs` jobs each, spacing
/// window `window` and per-machine earliest first-job dates `offsets`.
/// Offsets are stored shifted so that the smallest one is 0.
struct Instance {
    std::size_t machines = 1;
    std::size_t jobs = 1;
    std::uint64_t window = 2;
    std::vector<std::uint64_t> offsets;

    std::uint64_t max_offset() const;
    std::size_t coin_width() const;
    /// Latest reachable date of 0-based job k: O + (C-1)(k+1).
    std::uint64_t max_date(std::size_t job) const;
    /// Wires of the job-k register: ceil(log2(max_date(k) + 1)).
    std::size_t job_width(std::size_t job) const;
    /// Sum of job widths of one machine.
    std::size_t machine_width() const;
};

/// Validates and normalizes an instance. Throws ValidationError when C is not
/// a power of two >= 2, when I or K is zero, when offsets has the wrong length
/// or holds a negative value.
Instance new_instance(std::size_t machines, std::size_t jobs, std::uint64_t window,
                      const std::vector<std::int64_t>& offsets);

/// Same checks except that any window >= 2 is accepted. Only for qubit
/// counting (qubit_report); search and counting expect new_instance.
Instance sizing_instance(std::size_t machines, std::size_t jobs, std::uint64_t window,
                         const std::vector<std::int64_t>& offsets);

/// Parses {"machines", "jobs", "window", "offsets"}; unknown keys are rejected.
Instance parse_instance_json(std::string_view text);
Instance load_instance(const std::string& path);
std::string instance_to_json(const Instance& instance);

/// dates[i][k]: absolute date of job k on machine i.
struct Schedule {
    std::vector<std::vector<std::uint64_t>> dates;
    bool operator==(const Schedule&) const = default;
};

/// Wire assignment. Data registers come first (machine-major, job-minor, each
/// least-significant wire first), so the data pattern of a basis index is its
/// low `data_qubits()` bits.
struct QubitLayout {
    Mode mode = Mode::Full;
    std::vector<std::vector<RegisterSpan>> data;  // [machine][job]
    /// Full mode with a nonzero maximum offset: register holding O_i per machine.
    std::vector<RegisterSpan> offset;
    /// Reduced mode: walk coin registers (one shared register, or one per
    /// machine and step without coin reuse).
    std::vector<RegisterSpan> coin;
    /// Full mode: first-window flags (lo, hi) per machine, present with offset registers.
    std::vector<std::pair<Wire, Wire>> window_flags;
    /// Full mode: spacing flags (lo, hi) per machine and consecutive job pair, [i][k].
    std::vector<std::vector<std::pair<Wire, Wire>>> pair_flags;
    /// Group A: one wire per (machine pair, job), in (i < i', k) lexicographic order.
    WireList group_a;
    Wire group_b = 0;
    /// Scratch for comparator sign extension. It reuses the A/B wires, which
    /// are |0> while the spacing flags are computed, plus `sign_extra` wires.
    WireList sign_scratch;
    WireList sign_extra;
    std::size_t total = 0;

    std::size_t data_qubits() const;
    std::size_t offset_qubits() const;
    std::size_t coin_qubits() const;
    std::size_t flag_qubits() const;
    WireList data_wires() const;
    WireList flag_wires() const;
    /// Wire index of group A for machines i < i2 and job k.
    Wire a_wire(std::size_t i, std::size_t i2, std::size_t k, std::size_t machines) const;
};

struct LayoutOptions {
    /// Reduced mode: share one coin register across every walk step.
    bool coin_reuse = true;
    /// Upper bound on total wires; CapacityError beyond it.
    std::size_t max_qubits = kMaxQubits;
};

QubitLayout build_layout(const Instance& instance, Mode mode, const LayoutOptions& options = {});

/// Decodes the data registers of `basis_index` (higher bits are ignored).
Schedule decode_basis(const Instance& instance, const QubitLayout& layout, std::uint64_t basis_index);
/// Inverse of decode_basis over the data wires. Throws ParameterError when a
/// date does not fit its register.
std::uint64_t encode_schedule(const Instance& instance, const QubitLayout& layout, const Schedule& schedule);

bool is_feasible_path(const Instance& instance, std::size_t machine, const std::vector<std::uint64_t>& dates);
bool satisfies_resources(const Instance& instance, const Schedule& schedule);
bool is_solution(const Instance& instance, const Schedule& schedule);

/// Every feasible date row of `machine`, in lexicographic increment order.
std::vector<std::vector<std::uint64_t>> feasible_paths(const Instance& instance, std::size_t machine);

struct CountOptions {
    /// Limit on per-machine path count (C^K) and on backtracking nodes.
    std::uint64_t path_budget = std::uint64_t{1} << 22;
    std::uint64_t node_budget = std::uint64_t{1} << 32;
};

/// Exact solution count: per-machine path enumeration, backtracking over
/// machines with per-job date exclusion, and a path-count recursion for the
/// last machine.
std::uint64_t count_solutions(const Instance& instance, const CountOptions& options = {});
/// Reference count over the full product of per-machine paths.
std::uint64_t count_solutions_naive(const Instance& instance, const CountOptions& options = {});

/// Calls `visit` with every solution schedule.
void for_each_solution(const Instance& instance, const std::function<void(const Schedule&)>& visit,
                       const CountOptions& options = {});

struct SpaceSizes {
    std::uint64_t n_full = 0;
    std::uint64_t n_reduced = 0;
    std::uint64_t m_solutions = 0;
};

/// Throws CapacityError when a size does not fit 63 bits.
SpaceSizes space_sizes(const Instance& instance, const CountOptions& options = {});

/// Marks every data pattern of `layout` that decodes to a solution.
BasisMask marked_mask(const Instance& instance, const QubitLayout& layout);

}  // namespace qssr
