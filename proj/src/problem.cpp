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

#include "qssr/problem.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <limits>
#include <sstream>

#include <nlohmann/json.hpp>

#include "qssr/error.hpp"

namespace qssr {
namespace {

std::size_t ceil_log2(std::uint64_t v) {
    // Smallest w with 2^w >= v; v >= 1.
    return v <= 1 ? 0 : static_cast<std::size_t>(std::bit_width(v - 1));
}

std::size_t bits_for_values(std::uint64_t count) { return std::max<std::size_t>(1, ceil_log2(count)); }

std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exp, const char* what) {
    std::uint64_t r = 1;
    for (std::uint64_t e = 0; e < exp; ++e) {
        if (r > (std::numeric_limits<std::uint64_t>::max() >> 1) / base) {
            throw CapacityError(std::string(what) + " exceeds 63 bits");
        }
        r *= base;
    }
    return r;
}

std::uint64_t read_register(std::uint64_t index, const RegisterSpan& reg) {
    std::uint64_t v = 0;
    for (std::size_t b = 0; b < reg.width(); ++b) v |= ((index >> reg[b]) & 1U) << b;
    return v;
}

}  // namespace

std::string_view mode_name(Mode mode) { return mode == Mode::Full ? "full" : "reduced"; }

Mode parse_mode(std::string_view text) {
    if (text == "full") return Mode::Full;
    if (text == "reduced") return Mode::Reduced;
    throw ValidationError("mode must be 'full' or 'reduced', got '" + std::string(text) + "'");
}

std::uint64_t Instance::max_offset() const {
    return offsets.empty() ? 0 : *std::max_element(offsets.begin(), offsets.end());
}

std::size_t Instance::coin_width() const { return ceil_log2(window); }

std::uint64_t Instance::max_date(std::size_t job) const { return max_offset() + (window - 1) * (job + 1); }

std::size_t Instance::job_width(std::size_t job) const { return bits_for_values(max_date(job) + 1); }

std::size_t Instance::machine_width() const {
    std::size_t w = 0;
    for (std::size_t k = 0; k < jobs; ++k) w += job_width(k);
    return w;
}

namespace {

Instance checked_instance(std::size_t machines, std::size_t jobs, std::uint64_t window,
                          const std::vector<std::int64_t>& offsets) {
    if (machines < 1) throw ValidationError("machines must be >= 1");
    if (jobs < 1) throw ValidationError("jobs must be >= 1");
    if (window < 2) throw ValidationError("window must be >= 2, got " + std::to_string(window));
    if (window > (std::uint64_t{1} << 20)) throw ValidationError("window must be <= 2^20");
    if (offsets.size() != machines) {
        throw ValidationError("expected " + std::to_string(machines) + " offsets, got " +
                              std::to_string(offsets.size()));
    }
    for (std::int64_t o : offsets) {
        if (o < 0) throw ValidationError("offsets must be >= 0");
        if (o > (std::int64_t{1} << 30)) throw ValidationError("offset too large");
    }
    const std::int64_t lo = *std::min_element(offsets.begin(), offsets.end());
    Instance inst;
    inst.machines = machines;
    inst.jobs = jobs;
    inst.window = window;
    for (std::int64_t o : offsets) inst.offsets.push_back(static_cast<std::uint64_t>(o - lo));
    return inst;
}

}  // namespace

Instance new_instance(std::size_t machines, std::size_t jobs, std::uint64_t window,
                      const std::vector<std::int64_t>& offsets) {
    if (!std::has_single_bit(window) || window < 2) {
        throw ValidationError("window must be a power of two >= 2, got " + std::to_string(window));
    }
    return checked_instance(machines, jobs, window, offsets);
}

Instance sizing_instance(std::size_t machines, std::size_t jobs, std::uint64_t window,
                         const std::vector<std::int64_t>& offsets) {
    return checked_instance(machines, jobs, window, offsets);
}

Instance parse_instance_json(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError(std::string("instance JSON: ") + e.what());
    }
    if (!j.is_object()) throw ValidationError("instance JSON must be an object");
    for (const auto& [key, value] : j.items()) {
        if (key != "machines" && key != "jobs" && key != "window" && key != "offsets") {
            throw ValidationError("instance JSON: unknown key '" + key + "'");
        }
    }
    auto integer = [&](const char* key) -> std::int64_t {
        if (!j.contains(key)) throw ValidationError(std::string("instance JSON: missing '") + key + "'");
        const auto& v = j.at(key);
        if (!v.is_number_integer()) throw ValidationError(std::string("instance JSON: '") + key + "' must be an integer");
        return v.get<std::int64_t>();
    };
    const std::int64_t machines = integer("machines");
    const std::int64_t jobs = integer("jobs");
    const std::int64_t window = integer("window");
    if (machines < 1 || jobs < 1 || window < 2) throw ValidationError("instance JSON: sizes out of range");
    if (!j.contains("offsets") || !j.at("offsets").is_array()) {
        throw ValidationError("instance JSON: 'offsets' must be an array");
    }
    std::vector<std::int64_t> offsets;
    for (const auto& v : j.at("offsets")) {
        if (!v.is_number_integer()) throw ValidationError("instance JSON: offsets must be integers");
        offsets.push_back(v.get<std::int64_t>());
    }
    return new_instance(static_cast<std::size_t>(machines), static_cast<std::size_t>(jobs),
                        static_cast<std::uint64_t>(window), offsets);
}

Instance load_instance(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open instance file '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_instance_json(ss.str());
}

std::string instance_to_json(const Instance& instance) {
    nlohmann::ordered_json j;
    j["machines"] = instance.machines;
    j["jobs"] = instance.jobs;
    j["window"] = instance.window;
    j["offsets"] = instance.offsets;
    return j.dump();
}

std::size_t QubitLayout::data_qubits() const {
    std::size_t n = 0;
    for (const auto& row : data)
        for (const auto& reg : row) n += reg.width();
    return n;
}

std::size_t QubitLayout::offset_qubits() const {
    std::size_t n = 0;
    for (const auto& reg : offset) n += reg.width();
    return n;
}

std::size_t QubitLayout::coin_qubits() const {
    std::size_t n = 0;
    for (const auto& reg : coin) n += reg.width();
    return n;
}

std::size_t QubitLayout::flag_qubits() const { return flag_wires().size(); }

WireList QubitLayout::data_wires() const {
    WireList w;
    for (const auto& row : data)
        for (const auto& reg : row) w.insert(w.end(), reg.wires().begin(), reg.wires().end());
    return w;
}

WireList QubitLayout::flag_wires() const {
    WireList w;
    for (const auto& [lo, hi] : window_flags) {
        w.push_back(lo);
        w.push_back(hi);
    }
    for (const auto& row : pair_flags)
        for (const auto& [lo, hi] : row) {
            w.push_back(lo);
            w.push_back(hi);
        }
    return w;
}

Wire QubitLayout::a_wire(std::size_t i, std::size_t i2, std::size_t k, std::size_t machines) const {
    // Pairs (i, i2) with i < i2 enumerated row by row.
    const std::size_t pair = i * machines - i * (i + 1) / 2 + (i2 - i - 1);
    const std::size_t jobs = data.empty() ? 0 : data.front().size();
    return group_a.at(pair * jobs + k);
}

QubitLayout build_layout(const Instance& instance, Mode mode, const LayoutOptions& options) {
    const std::size_t I = instance.machines;
    const std::size_t K = instance.jobs;
    QubitLayout layout;
    layout.mode = mode;
    Wire next = 0;
    auto take = [&](std::size_t width) {
        RegisterSpan r = RegisterSpan::range(next, width);
        next += static_cast<Wire>(width);
        return r;
    };

    layout.data.resize(I);
    for (std::size_t i = 0; i < I; ++i)
        for (std::size_t k = 0; k < K; ++k) layout.data[i].push_back(take(instance.job_width(k)));

    const std::uint64_t O = instance.max_offset();
    if (mode == Mode::Full) {
        if (O > 0) {
            const std::size_t w = bits_for_values(O + 1);
            for (std::size_t i = 0; i < I; ++i) layout.offset.push_back(take(w));
            for (std::size_t i = 0; i < I; ++i) {
                layout.window_flags.emplace_back(next, next + 1);
                next += 2;
            }
        }
        layout.pair_flags.resize(I);
        for (std::size_t i = 0; i < I; ++i)
            for (std::size_t k = 0; k + 1 < K; ++k) {
                layout.pair_flags[i].emplace_back(next, next + 1);
                next += 2;
            }
    } else {
        const std::size_t cw = std::max<std::size_t>(1, instance.coin_width());
        if (options.coin_reuse) {
            layout.coin.push_back(take(cw));
        } else {
            for (std::size_t s = 0; s < I * (K - 1); ++s) layout.coin.push_back(take(cw));
        }
    }

    for (std::size_t a = 0; a < I * (I - 1) * K / 2; ++a) layout.group_a.push_back(next++);
    layout.group_b = next++;

    if (mode == Mode::Full) {
        std::size_t needed = 0;
        if (O > 0) {
            needed = range_check_extra_width(layout.offset.front().width(), instance.job_width(0), instance.window);
        }
        for (std::size_t k = 0; k + 1 < K; ++k) {
            needed = std::max(needed,
                              range_check_extra_width(instance.job_width(k), instance.job_width(k + 1), instance.window));
        }
        WireList borrow = layout.group_a;
        borrow.push_back(layout.group_b);
        for (std::size_t s = 0; s < needed; ++s) {
            if (s < borrow.size()) {
                layout.sign_scratch.push_back(borrow[s]);
            } else {
                layout.sign_extra.push_back(next);
                layout.sign_scratch.push_back(next++);
            }
        }
    }

    layout.total = next;
    if (layout.total > options.max_qubits) {
        throw CapacityError("layout needs " + std::to_string(layout.total) + " qubits, limit is " +
                            std::to_string(options.max_qubits));
    }
    return layout;
}

Schedule decode_basis(const Instance& instance, const QubitLayout& layout, std::uint64_t basis_index) {
    Schedule s;
    s.dates.assign(instance.machines, std::vector<std::uint64_t>(instance.jobs));
    for (std::size_t i = 0; i < instance.machines; ++i)
        for (std::size_t k = 0; k < instance.jobs; ++k) s.dates[i][k] = read_register(basis_index, layout.data[i][k]);
    return s;
}

std::uint64_t encode_schedule(const Instance& instance, const QubitLayout& layout, const Schedule& schedule) {
    std::uint64_t index = 0;
    for (std::size_t i = 0; i < instance.machines; ++i)
        for (std::size_t k = 0; k < instance.jobs; ++k) {
            const RegisterSpan& reg = layout.data[i][k];
            const std::uint64_t v = schedule.dates.at(i).at(k);
            if (v >> reg.width()) throw ParameterError("date does not fit its register");
            for (std::size_t b = 0; b < reg.width(); ++b) index |= ((v >> b) & 1U) << reg[b];
        }
    return index;
}

bool is_feasible_path(const Instance& instance, std::size_t machine, const std::vector<std::uint64_t>& dates) {
    if (dates.size() != instance.jobs) return false;
    const std::uint64_t o = instance.offsets.at(machine);
    if (dates[0] < o || dates[0] > o + instance.window - 1) return false;
    for (std::size_t k = 1; k < dates.size(); ++k) {
        if (dates[k] < dates[k - 1] || dates[k] - dates[k - 1] > instance.window - 1) return false;
    }
    return true;
}

bool satisfies_resources(const Instance& instance, const Schedule& schedule) {
    for (std::size_t k = 0; k < instance.jobs; ++k)
        for (std::size_t i = 0; i < instance.machines; ++i)
            for (std::size_t i2 = i + 1; i2 < instance.machines; ++i2)
                if (schedule.dates[i][k] == schedule.dates[i2][k]) return false;
    return true;
}

bool is_solution(const Instance& instance, const Schedule& schedule) {
    for (std::size_t i = 0; i < instance.machines; ++i)
        if (!is_feasible_path(instance, i, schedule.dates[i])) return false;
    return satisfies_resources(instance, schedule);
}

std::vector<std::vector<std::uint64_t>> feasible_paths(const Instance& instance, std::size_t machine) {
    const std::uint64_t C = instance.window;
    const std::size_t K = instance.jobs;
    std::vector<std::vector<std::uint64_t>> out;
    std::vector<std::uint64_t> steps(K, 0);  // steps[0] is the first date minus the offset
    while (true) {
        std::vector<std::uint64_t> row(K);
        row[0] = instance.offsets.at(machine) + steps[0];
        for (std::size_t k = 1; k < K; ++k) row[k] = row[k - 1] + steps[k];
        out.push_back(std::move(row));
        std::size_t pos = K;
        while (pos > 0 && steps[pos - 1] == C - 1) steps[--pos] = 0;
        if (pos == 0) break;
        ++steps[pos - 1];
    }
    return out;
}

namespace {

void check_path_budget(const Instance& instance, const CountOptions& options) {
    const std::uint64_t per_machine = checked_pow(instance.window, instance.jobs, "path count");
    if (per_machine > options.path_budget) {
        throw CapacityError("C^K = " + std::to_string(per_machine) + " paths per machine exceeds the budget");
    }
}

class Counter {
  public:
    Counter(const Instance& instance, const CountOptions& options)
        : inst_(instance), opts_(options), span_(instance.max_date(instance.jobs - 1) + 1) {
        for (std::size_t i = 0; i + 1 < inst_.machines; ++i) paths_.push_back(feasible_paths(inst_, i));
        used_.assign(inst_.jobs, std::vector<std::uint32_t>(span_, 0));
        ways_.assign(span_ + inst_.window, 0);
        next_.assign(span_ + inst_.window, 0);
    }

    std::uint64_t run() {
        descend(0);
        return total_;
    }

  private:
    void charge(std::uint64_t n) {
        nodes_ += n;
        if (nodes_ > opts_.node_budget) throw CapacityError("solution count exceeds the node budget");
    }

    void descend(std::size_t machine) {
        if (machine + 1 == inst_.machines) {
            total_ += last_machine_ways();
            return;
        }
        for (const auto& row : paths_[machine]) {
            charge(1);
            bool ok = true;
            for (std::size_t k = 0; k < inst_.jobs && ok; ++k) ok = used_[k][row[k]] == 0;
            if (!ok) continue;
            for (std::size_t k = 0; k < inst_.jobs; ++k) ++used_[k][row[k]];
            descend(machine + 1);
            for (std::size_t k = 0; k < inst_.jobs; ++k) --used_[k][row[k]];
        }
    }

    // Paths of the last machine avoiding every used date, by backward recursion
    // ways_k(d) = [d free at k] * sum_{s < C} ways_{k+1}(d + s).
    std::uint64_t last_machine_ways() {
        const std::size_t K = inst_.jobs;
        const std::uint64_t C = inst_.window;
        charge(K * span_);
        for (std::uint64_t d = 0; d < span_; ++d) ways_[d] = used_[K - 1][d] == 0 ? 1 : 0;
        for (std::size_t k = K - 1; k-- > 0;) {
            // Sliding window sum over ways_[d .. d+C-1].
            std::uint64_t window_sum = 0;
            for (std::uint64_t d = span_ + C; d-- > 0;) {
                if (d < span_) window_sum += ways_[d];
                if (d + C < span_) window_sum -= ways_[d + C];
                if (d < span_) next_[d] = used_[k][d] == 0 ? window_sum : 0;
            }
            std::swap(ways_, next_);
        }
        const std::uint64_t o = inst_.offsets[inst_.machines - 1];
        std::uint64_t sum = 0;
        for (std::uint64_t d = o; d < o + C; ++d) sum += ways_[d];
        return sum;
    }

    const Instance& inst_;
    const CountOptions& opts_;
    std::uint64_t span_;
    std::vector<std::vector<std::vector<std::uint64_t>>> paths_;
    std::vector<std::vector<std::uint32_t>> used_;
    std::vector<std::uint64_t> ways_;
    std::vector<std::uint64_t> next_;
    std::uint64_t nodes_ = 0;
    std::uint64_t total_ = 0;
};

}  // namespace

std::uint64_t count_solutions(const Instance& instance, const CountOptions& options) {
    check_path_budget(instance, options);
    return Counter(instance, options).run();
}

std::uint64_t count_solutions_naive(const Instance& instance, const CountOptions& options) {
    check_path_budget(instance, options);
    std::vector<std::vector<std::vector<std::uint64_t>>> paths;
    for (std::size_t i = 0; i < instance.machines; ++i) paths.push_back(feasible_paths(instance, i));
    const std::uint64_t product = checked_pow(paths.front().size(), instance.machines, "path product");
    if (product > options.node_budget) throw CapacityError("path product exceeds the node budget");

    std::vector<std::size_t> pick(instance.machines, 0);
    Schedule s;
    s.dates.resize(instance.machines);
    std::uint64_t count = 0;
    for (std::uint64_t n = 0; n < product; ++n) {
        for (std::size_t i = 0; i < instance.machines; ++i) s.dates[i] = paths[i][pick[i]];
        if (satisfies_resources(instance, s)) ++count;
        for (std::size_t i = 0; i < instance.machines; ++i) {
            if (++pick[i] < paths[i].size()) break;
            pick[i] = 0;
        }
    }
    return count;
}

void for_each_solution(const Instance& instance, const std::function<void(const Schedule&)>& visit,
                       const CountOptions& options) {
    check_path_budget(instance, options);
    std::vector<std::vector<std::vector<std::uint64_t>>> paths;
    for (std::size_t i = 0; i < instance.machines; ++i) paths.push_back(feasible_paths(instance, i));
    const std::uint64_t span = instance.max_date(instance.jobs - 1) + 1;
    std::vector<std::vector<std::uint8_t>> used(instance.jobs, std::vector<std::uint8_t>(span, 0));
    Schedule s;
    s.dates.resize(instance.machines);
    std::uint64_t nodes = 0;

    std::function<void(std::size_t)> descend = [&](std::size_t machine) {
        if (machine == instance.machines) {
            visit(s);
            return;
        }
        for (const auto& row : paths[machine]) {
            if (++nodes > options.node_budget) throw CapacityError("solution enumeration exceeds the node budget");
            bool ok = true;
            for (std::size_t k = 0; k < instance.jobs && ok; ++k) ok = used[k][row[k]] == 0;
            if (!ok) continue;
            for (std::size_t k = 0; k < instance.jobs; ++k) used[k][row[k]] = 1;
            s.dates[machine] = row;
            descend(machine + 1);
            for (std::size_t k = 0; k < instance.jobs; ++k) used[k][row[k]] = 0;
        }
    };
    descend(0);
}

SpaceSizes space_sizes(const Instance& instance, const CountOptions& options) {
    SpaceSizes s;
    const std::size_t full_bits = instance.machines * instance.machine_width();
    if (full_bits > 63) throw CapacityError("full search space exceeds 2^63");
    s.n_full = std::uint64_t{1} << full_bits;
    s.n_reduced = checked_pow(instance.window, instance.jobs * instance.machines, "reduced search space");
    s.m_solutions = count_solutions(instance, options);
    return s;
}

BasisMask marked_mask(const Instance& instance, const QubitLayout& layout) {
    const std::size_t bits = layout.data_qubits();
    if (bits > kMaxQubits) throw CapacityError("data register too wide for a marked mask");
    BasisMask mask = BasisMask::empty(bits);
    for_each_solution(instance, [&](const Schedule& s) { mask.marked[encode_schedule(instance, layout, s)] = 1; });
    return mask;
}

}  // namespace qssr
