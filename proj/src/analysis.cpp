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

#include "qssr/analysis.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include <nlohmann/json.hpp>

#include "qssr/circuits.hpp"
#include "qssr/error.hpp"

namespace qssr {

RatioCurves ratio_curves(std::uint64_t window, const std::vector<std::size_t>& machines, std::size_t k_min,
                         std::size_t k_max, const CountOptions& options) {
    RatioCurves out;
    for (std::size_t I : machines)
        for (std::size_t K = k_min; K <= k_max; ++K) {
            const std::string point = "I=" + std::to_string(I) + ",K=" + std::to_string(K);
            std::uint64_t m = 0;
            Instance inst;
            try {
                inst = new_instance(I, K, window, std::vector<std::int64_t>(I, 0));
                m = count_solutions(inst, options);
            } catch (const Error& e) {
                out.skipped.push_back(point + ": " + e.what());
                continue;
            }
            if (m == 0) {
                out.skipped.push_back(point + ": no solutions");
                continue;
            }
            auto row = [&](Mode mode, std::uint64_t size) {
                out.rows.push_back({I, K, window, mode, size, m, std::sqrt(static_cast<double>(size) / double(m))});
            };
            const std::size_t full_bits = I * inst.machine_width();
            if (full_bits <= 63) {
                row(Mode::Full, std::uint64_t{1} << full_bits);
            } else {
                out.skipped.push_back(point + " full: space size exceeds 2^63");
            }
            const double reduced_bits = static_cast<double>(I * K) * std::log2(static_cast<double>(window));
            if (reduced_bits <= 63) {
                row(Mode::Reduced, std::uint64_t{1} << static_cast<std::size_t>(reduced_bits));
            } else {
                out.skipped.push_back(point + " reduced: space size exceeds 2^63");
            }
        }
    return out;
}

std::string ratio_rows_to_csv(const std::vector<RatioRow>& rows) {
    std::ostringstream out;
    out << "I,K,C,mode,space_size,solutions,sqrt_ratio\n";
    char buf[64];
    for (const RatioRow& r : rows) {
        std::snprintf(buf, sizeof buf, "%.10g", r.sqrt_ratio);
        out << r.machines << ',' << r.jobs << ',' << r.window << ',' << mode_name(r.mode) << ',' << r.space_size << ','
            << r.solutions << ',' << buf << '\n';
    }
    return out.str();
}

namespace {

std::uint64_t multi_x_cost(std::size_t m) {
    if (m == 0 || m == 1) return 1;
    if (m == 2) return 15;
    return 15 * (2 * (m - 2) + 1);
}

}  // namespace

std::uint64_t basic_gate_count(const GateOp& op) {
    const std::size_t m = op.controls.size() + op.anti_controls.size();
    std::uint64_t cost = 2 * op.anti_controls.size();
    switch (op.kind) {
        case GateKind::PauliX: cost += multi_x_cost(m); break;
        case GateKind::Swap: cost += m == 0 ? 3 : 2 + multi_x_cost(m + 1); break;
        default:
            if (m == 0) cost += 1;
            else if (m == 1) cost += 3;
            else cost += 2 * multi_x_cost(m) + 3;
            break;
    }
    return cost;
}

std::uint64_t basic_gate_count(const Circuit& circuit) {
    std::uint64_t total = 0;
    for (const GateOp& op : circuit.ops()) total += basic_gate_count(op);
    return total;
}

ResourceReport qubit_report(const Instance& instance, Mode mode) {
    const QubitLayout l = build_layout(instance, mode, {.max_qubits = std::numeric_limits<std::size_t>::max()});
    ResourceReport r;
    r.machines = instance.machines;
    r.jobs = instance.jobs;
    r.window = instance.window;
    r.max_offset = instance.max_offset();
    r.mode = mode;
    r.data_qubits = l.data_qubits();
    r.offset_qubits = l.offset_qubits();
    r.flag_qubits = l.flag_qubits();
    r.group_a = l.group_a.size();
    r.group_b = 1;
    r.coin_qubits = l.coin_qubits();
    r.sign_qubits = l.sign_extra.size();
    r.total = l.total;
    const double I = static_cast<double>(instance.machines);
    const double K = static_cast<double>(instance.jobs);
    const double C = static_cast<double>(instance.window);
    r.formula_total = I * K * std::log2((C - 1.0) * K + 1.0) + I * (I - 1.0) * K / 2.0 + 1.0;
    return r;
}

std::uint64_t gate_count_report(const Instance& instance, Mode mode) {
    const PreparedPipeline p = build_pipeline(instance, mode, {.max_qubits = std::numeric_limits<std::size_t>::max()});
    return basic_gate_count(build_marked_reflection(p, 1.0)) + basic_gate_count(build_initial_reflection(p, 1.0));
}

ResourceReport resource_report(const Instance& instance, Mode mode) {
    ResourceReport r = qubit_report(instance, mode);
    r.basic_gate_count_per_iteration = gate_count_report(instance, mode);
    return r;
}

std::string resource_report_to_json(const ResourceReport& r) {
    nlohmann::ordered_json j;
    j["machines"] = r.machines;
    j["jobs"] = r.jobs;
    j["window"] = r.window;
    j["max_offset"] = r.max_offset;
    j["mode"] = mode_name(r.mode);
    j["data_qubits"] = r.data_qubits;
    j["offset_qubits"] = r.offset_qubits;
    j["flag_qubits"] = r.flag_qubits;
    j["groupA"] = r.group_a;
    j["groupB"] = r.group_b;
    j["coin_qubits"] = r.coin_qubits;
    j["sign_qubits"] = r.sign_qubits;
    j["total"] = r.total;
    j["formula_total"] = r.formula_total;
    j["basic_gate_count_per_iteration"] = r.basic_gate_count_per_iteration;
    j["rule_table"] = r.rule_table;
    return j.dump(2) + "\n";
}

}  // namespace qssr
