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

#include "qssr/circuits.hpp"

#include <bit>

#include "qssr/error.hpp"
#include "qssr/qarith.hpp"

namespace qssr {

Circuit build_uniform_prep(const Instance& instance, const QubitLayout& layout) {
    Circuit c(layout.total);
    for (Wire w : layout.data_wires()) c.add(GateOp::h(w));
    for (std::size_t i = 0; i < layout.offset.size(); ++i) {
        const RegisterSpan& reg = layout.offset[i];
        for (std::size_t b = 0; b < reg.width(); ++b)
            if ((instance.offsets[i] >> b) & 1U) c.add(GateOp::x(reg[b]));
    }
    return c;
}

Circuit build_walk_prep(const Instance& instance, const QubitLayout& layout) {
    if (layout.mode != Mode::Reduced) throw ValidationError("walk preparation needs a reduced-mode layout");
    if (!std::has_single_bit(instance.window)) throw ValidationError("walk preparation needs a power-of-two window");
    const std::size_t b = instance.coin_width();
    const std::size_t K = instance.jobs;
    const bool reuse = layout.coin.size() == 1;
    Circuit c(layout.total);

    for (std::size_t i = 0; i < instance.machines; ++i) {
        const RegisterSpan& first = layout.data[i][0];
        for (std::size_t j = 0; j < b; ++j) c.add(GateOp::h(first[j]));
        if (instance.offsets[i] > 0) c.append(add_constant(first, instance.offsets[i]), "offset");

        for (std::size_t k = 1; k < K; ++k) {
            const RegisterSpan& prev = layout.data[i][k - 1];
            const RegisterSpan& next = layout.data[i][k];
            const RegisterSpan& coin = reuse ? layout.coin[0] : layout.coin[i * (K - 1) + (k - 1)];

            Circuit step(layout.total);
            for (std::size_t j = 0; j < prev.width(); ++j) step.add(GateOp::x(next[j], {prev[j]}));
            for (Wire w : coin.wires()) step.add(GateOp::h(w));
            for (std::size_t j = 0; j < b; ++j) {
                step.append(controlled_add_constant(next, std::uint64_t{1} << j, {coin[j]}), "shift");
            }
            if (reuse) {
                // coin holds next - prev (mod C); subtract it back out.
                step.append(add_register(prev.low(b), coin), "uncoin_prev");
                step.append(add_register(next.low(b), coin).inverse(), "uncoin_next");
            }
            c.append(step, "walk_step");
        }
    }
    return c;
}

Circuit build_path_flags(const Instance& instance, const QubitLayout& layout) {
    if (layout.mode != Mode::Full) throw ValidationError("path flags need a full-mode layout");
    Circuit c(layout.total);
    auto sign = [&](std::size_t count) {
        return WireList(layout.sign_scratch.begin(), layout.sign_scratch.begin() + static_cast<std::ptrdiff_t>(count));
    };
    for (std::size_t i = 0; i < instance.machines; ++i) {
        const auto& regs = layout.data[i];
        if (!layout.offset.empty()) {
            const std::size_t need = range_check_extra_width(layout.offset[i].width(), regs[0].width(), instance.window);
            const auto [lo, hi] = layout.window_flags[i];
            c.append(range_check(layout.offset[i], regs[0], sign(need), instance.window, lo, hi), "window_check");
        }
        for (std::size_t k = 0; k + 1 < instance.jobs; ++k) {
            const std::size_t need = range_check_extra_width(regs[k].width(), regs[k + 1].width(), instance.window);
            const auto [lo, hi] = layout.pair_flags[i][k];
            c.append(range_check(regs[k], regs[k + 1], sign(need), instance.window, lo, hi), "spacing_check");
        }
    }
    return c;
}

Circuit build_resource_flags(const Instance& instance, const QubitLayout& layout) {
    const std::size_t I = instance.machines;
    Circuit c(layout.total);
    for (std::size_t k = 0; k < instance.jobs; ++k)
        for (std::size_t i = 0; i < I; ++i)
            for (std::size_t i2 = i + 1; i2 < I; ++i2) {
                const RegisterSpan& a = layout.data[i][k];
                const RegisterSpan& b = layout.data[i2][k];
                Circuit wall(layout.total);
                for (std::size_t j = 0; j < a.width(); ++j) wall.add(GateOp::x(b[j], {a[j]}));
                c.append(wall, "compare");
                // b now holds a XOR b, which is all zero iff the dates coincide.
                c.add(GateOp::x(layout.a_wire(i, i2, k, I), {}, b.wires()));
                c.append(wall, "restore");
            }
    c.add(GateOp::x(layout.group_b, {}, layout.group_a));
    return c;
}

PreparedPipeline build_pipeline(const Instance& instance, Mode mode, const PipelineOptions& options) {
    PreparedPipeline p;
    p.instance = instance;
    p.mode = mode;
    p.layout = build_layout(instance, mode, {.coin_reuse = options.coin_reuse, .max_qubits = options.max_qubits});
    const QubitLayout& l = p.layout;

    p.prep_wires = l.data_wires();
    p.marked_condition = Circuit(l.total);
    if (mode == Mode::Full) {
        p.prep = build_uniform_prep(instance, l);
        for (const auto& reg : l.offset) p.prep_wires.insert(p.prep_wires.end(), reg.wires().begin(), reg.wires().end());
        p.marked_condition.append(build_path_flags(instance, l), "path_flags");
        p.condition_wires = l.flag_wires();
    } else {
        p.prep = build_walk_prep(instance, l);
        for (const auto& reg : l.coin) p.prep_wires.insert(p.prep_wires.end(), reg.wires().begin(), reg.wires().end());
    }
    p.marked_condition.append(build_resource_flags(instance, l), "resource_flags");
    p.condition_wires.push_back(l.group_b);
    return p;
}

Circuit build_marked_reflection(const PreparedPipeline& pipeline, double angle) {
    Circuit c(pipeline.layout.total);
    c.append(pipeline.marked_condition, "condition");
    const Wire target = pipeline.condition_wires.back();
    WireList controls(pipeline.condition_wires.begin(), pipeline.condition_wires.end() - 1);
    c.add(GateOp::phase(target, angle, controls));
    c.append(pipeline.marked_condition.inverse(), "uncondition");
    return c;
}

Circuit build_initial_reflection(const PreparedPipeline& pipeline, double angle) {
    Circuit c(pipeline.layout.total);
    c.append(pipeline.prep.inverse(), "unprepare");
    const Wire target = pipeline.prep_wires.front();
    WireList others(pipeline.prep_wires.begin() + 1, pipeline.prep_wires.end());
    c.add(GateOp::x(target));
    c.add(GateOp::phase(target, angle, {}, others));
    c.add(GateOp::x(target));
    c.append(pipeline.prep, "prepare");
    return c;
}

}  // namespace qssr
