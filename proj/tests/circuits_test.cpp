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

#include <cmath>
#include <fstream>
#include <numbers>
#include <set>
#include <sstream>

#include <gtest/gtest.h>

#include "qssr/error.hpp"
#include "qssr/qarith.hpp"
#include "oracles.hpp"

namespace qssr {
namespace {

Instance make(std::size_t I, std::size_t K, std::uint64_t C = 4, std::vector<std::int64_t> off = {}) {
    if (off.empty()) off.assign(I, 0);
    return new_instance(I, K, C, off);
}

StateVector prepared_state(const PreparedPipeline& p) {
    StateVector s = init_state(p.layout.total);
    s.apply(p.prep);
    return s;
}

std::uint64_t data_mask(const QubitLayout& l) { return (std::uint64_t{1} << l.data_qubits()) - 1; }

// Probability mass outside the all-zero pattern of the given wires.
double weight_off_zero(const StateVector& s, const WireList& wires) {
    std::uint64_t m = 0;
    for (Wire w : wires) m |= std::uint64_t{1} << w;
    double p = 0.0;
    for (std::uint64_t i = 0; i < s.dimension(); ++i)
        if (i & m) p += std::norm(s.amplitude(i));
    return p;
}

std::set<std::uint64_t> feasible_product(const Instance& inst, const QubitLayout& l) {
    std::vector<std::vector<std::vector<std::uint64_t>>> paths;
    for (std::size_t i = 0; i < inst.machines; ++i) paths.push_back(feasible_paths(inst, i));
    std::set<std::uint64_t> out;
    std::vector<std::size_t> pick(inst.machines, 0);
    while (true) {
        Schedule s;
        for (std::size_t i = 0; i < inst.machines; ++i) s.dates.push_back(paths[i][pick[i]]);
        out.insert(encode_schedule(inst, l, s));
        std::size_t i = 0;
        while (i < inst.machines && ++pick[i] == paths[i].size()) pick[i++] = 0;
        if (i == inst.machines) break;
    }
    return out;
}

TEST(UniformPrep, HadamardWallAndMarkedFraction) {
    const Instance inst = make(2, 2);
    const PreparedPipeline p = build_pipeline(inst, Mode::Full);
    EXPECT_EQ(p.prep.size(), 10u);
    const StateVector s = prepared_state(p);
    for (std::uint64_t i = 0; i < 1024; ++i) EXPECT_NEAR(std::norm(s.amplitude(i)), 1.0 / 1024, 1e-12);
    EXPECT_NEAR(marked_probability(s, marked_mask(inst, p.layout)), 164.0 / 1024.0, 1e-9);
    EXPECT_EQ(build_uniform_prep(make(1, 1), build_layout(make(1, 1), Mode::Full)).size(), 2u);
}

TEST(UniformPrep, LoadsOffsets) {
    const Instance inst = make(2, 1, 4, {0, 3});
    const QubitLayout l = build_layout(inst, Mode::Full);
    const Circuit c = build_uniform_prep(inst, l);
    std::size_t xs = 0;
    for (const GateOp& op : c.ops()) xs += op.kind == GateKind::PauliX;
    EXPECT_EQ(xs, 2u);  // offset 3 = 0b11
}

TEST(WalkPrep, OneMachineTwoJobsHasSixteenPatterns) {
    const Instance inst = make(1, 2);
    const PreparedPipeline p = build_pipeline(inst, Mode::Reduced);
    const StateVector s = prepared_state(p);
    std::set<std::uint64_t> support;
    for (std::uint64_t i = 0; i < s.dimension(); ++i) {
        if (std::abs(s.amplitude(i)) > 1e-9) {
            support.insert(i);
            EXPECT_NEAR(std::abs(s.amplitude(i)), 0.25, 1e-9);
        }
    }
    // Register values (first, second): v and v..v+3 for v = 0..3.
    std::set<std::uint64_t> expected;
    for (std::uint64_t v = 0; v < 4; ++v)
        for (std::uint64_t w = v; w < v + 4; ++w) expected.insert(v | (w << 2));
    EXPECT_EQ(support, expected);
    EXPECT_LE(weight_off_zero(s, p.layout.coin[0].wires()), 1e-9);
}

TEST(WalkPrep, SingleJobIsHadamardWall) {
    const Instance inst = make(1, 1);
    const PreparedPipeline p = build_pipeline(inst, Mode::Reduced);
    EXPECT_EQ(p.prep.size(), 2u);
    const StateVector s = prepared_state(p);
    for (std::uint64_t i = 0; i < 4; ++i) EXPECT_NEAR(std::abs(s.amplitude(i)), 0.5, 1e-12);
}

class WalkSupport : public ::testing::TestWithParam<std::tuple<std::size_t, std::size_t, std::uint64_t, std::int64_t>> {};

TEST_P(WalkSupport, EqualsFeasiblePathProduct) {
    const auto [I, K, C, last_offset] = GetParam();
    std::vector<std::int64_t> off(I, 0);
    off.back() = last_offset;
    const Instance inst = new_instance(I, K, C, off);
    for (bool reuse : {true, false}) {
        PipelineOptions opt;
        opt.coin_reuse = reuse;
        const PreparedPipeline p = build_pipeline(inst, Mode::Reduced, opt);
        if (!reuse && p.layout.total > 20) continue;
        const StateVector s = prepared_state(p);
        const std::set<std::uint64_t> expected = feasible_product(inst, p.layout);
        const double per_state = 1.0 / static_cast<double>(expected.size());
        std::vector<double> data_prob(std::size_t{1} << p.layout.data_qubits(), 0.0);
        for (std::uint64_t i = 0; i < s.dimension(); ++i) data_prob[i & data_mask(p.layout)] += std::norm(s.amplitude(i));
        for (std::uint64_t d = 0; d < data_prob.size(); ++d) {
            ASSERT_NEAR(data_prob[d], expected.count(d) ? per_state : 0.0, 1e-9) << "pattern " << d;
        }
        if (reuse) {
            EXPECT_LE(weight_off_zero(s, p.layout.coin[0].wires()), 1e-9);
            // Pure uniform amplitudes on the data wires alone.
            for (std::uint64_t d : expected) EXPECT_NEAR(std::abs(s.amplitude(d)), std::sqrt(per_state), 1e-9);
        }
    }
}

INSTANTIATE_TEST_SUITE_P(Instances, WalkSupport,
                         ::testing::Values(std::make_tuple(1, 2, 4, 0), std::make_tuple(1, 3, 4, 0),
                                           std::make_tuple(2, 2, 4, 0), std::make_tuple(2, 2, 4, 1),
                                           std::make_tuple(1, 4, 2, 0), std::make_tuple(1, 2, 8, 0),
                                           std::make_tuple(2, 2, 2, 1)));

TEST(WalkPrep, CoinReturnsToZeroForTwoMachinesThreeJobs) {
    const PreparedPipeline p = build_pipeline(make(2, 3), Mode::Reduced);
    const StateVector s = prepared_state(p);
    EXPECT_GE(1.0 - weight_off_zero(s, p.layout.coin[0].wires()), 1.0 - 1e-9);
}

TEST(WalkPrep, RejectsFullLayout) {
    const Instance inst = make(1, 2);
    EXPECT_THROW(build_walk_prep(inst, build_layout(inst, Mode::Full)), ValidationError);
    EXPECT_THROW(build_path_flags(inst, build_layout(inst, Mode::Reduced)), ValidationError);
}

// Runs a condition circuit on one data basis state (ancillas zero) and returns the output index.
std::int64_t run_condition(const Circuit& c, const PreparedPipeline& p, std::uint64_t data_index) {
    StateVector s = testing::basis_state(p.layout.total, data_index);
    s.apply(c);
    return testing::as_basis_state(s);
}

std::uint64_t flag_bits(const QubitLayout& l, std::uint64_t index) {
    std::uint64_t bits = 0, pos = 0;
    for (Wire w : l.flag_wires()) bits |= ((index >> w) & 1U) << pos++;
    return bits;
}

TEST(PathFlags, Examples) {
    const Instance inst = make(2, 2);
    const PreparedPipeline p = build_pipeline(inst, Mode::Full);
    const Circuit flags = build_path_flags(inst, p.layout);
    const std::uint64_t good = encode_schedule(inst, p.layout, Schedule{{{0, 0}, {1, 2}}});
    const std::int64_t out = run_condition(flags, p, good);
    ASSERT_GE(out, 0);
    EXPECT_EQ(flag_bits(p.layout, out), 0b1111u);
    EXPECT_EQ(static_cast<std::uint64_t>(out) & data_mask(p.layout), good);

    const std::uint64_t bad = encode_schedule(inst, p.layout, Schedule{{{0, 5}, {1, 2}}});
    const std::int64_t out2 = run_condition(flags, p, bad);
    ASSERT_GE(out2, 0);
    const auto [lo, hi] = p.layout.pair_flags[0][0];
    EXPECT_EQ((out2 >> lo) & 1, 1);
    EXPECT_EQ((out2 >> hi) & 1, 0);
}

TEST(PathFlags, ExhaustiveAgainstPredicates) {
    const Instance inst = make(2, 2);
    const PreparedPipeline p = build_pipeline(inst, Mode::Full);
    const Circuit flags = build_path_flags(inst, p.layout);
    std::uint64_t flag_mask = 0;
    for (Wire w : p.layout.flag_wires()) flag_mask |= std::uint64_t{1} << w;
    for (std::uint64_t d = 0; d < 1024; ++d) {
        const std::int64_t out = run_condition(flags, p, d);
        ASSERT_GE(out, 0);
        ASSERT_EQ(static_cast<std::uint64_t>(out) & ~flag_mask, d) << "non-flag wires not restored for " << d;
        const Schedule s = decode_basis(inst, p.layout, d);
        for (std::size_t i = 0; i < 2; ++i) {
            const auto [lo, hi] = p.layout.pair_flags[i][0];
            const std::int64_t diff = std::int64_t(s.dates[i][1]) - std::int64_t(s.dates[i][0]);
            EXPECT_EQ((out >> lo) & 1, diff >= 0 ? 1 : 0);
            EXPECT_EQ((out >> hi) & 1, diff <= 3 ? 1 : 0);
        }
    }
}

TEST(PathFlags, FirstWindowWithOffsets) {
    const Instance inst = make(2, 1, 4, {0, 2});
    const PreparedPipeline p = build_pipeline(inst, Mode::Full);
    ASSERT_EQ(p.layout.window_flags.size(), 2u);
    const Circuit flags = build_path_flags(inst, p.layout);
    for (std::uint64_t d = 0; d < (std::uint64_t{1} << p.layout.data_qubits()); ++d) {
        // Offset registers hold O_i as after preparation.
        std::uint64_t index = d;
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t b = 0; b < p.layout.offset[i].width(); ++b)
                index |= ((inst.offsets[i] >> b) & 1U) << p.layout.offset[i][b];
        const std::int64_t out = run_condition(flags, p, index);
        ASSERT_GE(out, 0);
        const Schedule s = decode_basis(inst, p.layout, d);
        for (std::size_t i = 0; i < 2; ++i) {
            const auto [lo, hi] = p.layout.window_flags[i];
            const bool ok = ((out >> lo) & 1) && ((out >> hi) & 1);
            EXPECT_EQ(ok, is_feasible_path(inst, i, s.dates[i])) << d;
        }
    }
}

TEST(ResourceFlags, Examples) {
    const Instance inst = make(2, 2);
    const QubitLayout l = build_layout(inst, Mode::Full);
    const Circuit c = build_resource_flags(inst, l);
    const PreparedPipeline p = build_pipeline(inst, Mode::Full);
    const std::uint64_t clash = encode_schedule(inst, l, Schedule{{{1, 2}, {1, 3}}});
    const std::int64_t out = run_condition(c, p, clash);
    EXPECT_EQ((out >> l.a_wire(0, 1, 0, 2)) & 1, 1);
    EXPECT_EQ((out >> l.a_wire(0, 1, 1, 2)) & 1, 0);
    EXPECT_EQ((out >> l.group_b) & 1, 0);
    const std::uint64_t fine = encode_schedule(inst, l, Schedule{{{0, 1}, {1, 2}}});
    const std::int64_t out2 = run_condition(c, p, fine);
    for (Wire a : l.group_a) EXPECT_EQ((out2 >> a) & 1, 0);
    EXPECT_EQ((out2 >> l.group_b) & 1, 1);
    EXPECT_EQ(build_layout(make(3, 2), Mode::Reduced).group_a.size(), 6u);
}

// Applies the marked reflection to a uniform superposition over every data
// pattern and checks each pattern's phase against `expect_marked`.
template <class Pred>
void check_phase_kick(const PreparedPipeline& p, Pred expect_marked) {
    const QubitLayout& l = p.layout;
    StateVector s = init_state(l.total);
    for (Wire w : l.data_wires()) s.apply(GateOp::h(w));
    for (std::size_t i = 0; i < l.offset.size(); ++i)
        for (std::size_t b = 0; b < l.offset[i].width(); ++b)
            if ((p.instance.offsets[i] >> b) & 1U) s.apply(GateOp::x(l.offset[i][b]));
    std::uint64_t offset_bits = 0;
    for (std::uint64_t i = 0; i < s.dimension(); ++i)
        if (std::abs(s.amplitude(i)) > 0) offset_bits = i & ~data_mask(l);
    s.refresh_zero_wires();
    s.apply(build_marked_reflection(p, std::numbers::pi));
    const double amp = 1.0 / std::sqrt(static_cast<double>(std::uint64_t{1} << l.data_qubits()));
    double stray = 0.0;
    for (std::uint64_t i = 0; i < s.dimension(); ++i)
        if ((i & ~data_mask(l)) != offset_bits) stray += std::norm(s.amplitude(i));
    EXPECT_LE(stray, 1e-9) << "ancillas not restored";
    for (std::uint64_t d = 0; d <= data_mask(l); ++d) {
        const double sign = expect_marked(decode_basis(p.instance, l, d)) ? -1.0 : 1.0;
        ASSERT_NEAR(s.amplitude(d | offset_bits).real(), sign * amp, 1e-9) << "pattern " << d;
    }
}

TEST(MarkedReflection, PhaseKickFullMode) {
    for (const Instance& inst : {make(2, 2), make(1, 3), make(3, 1), make(2, 2, 2, {0, 1}), make(1, 2, 4, {0})}) {
        const PreparedPipeline p = build_pipeline(inst, Mode::Full);
        check_phase_kick(p, [&](const Schedule& s) { return is_solution(inst, s); });
    }
}

TEST(MarkedReflection, PhaseKickReducedMode) {
    for (const Instance& inst : {make(2, 2), make(3, 1), make(2, 1, 8)}) {
        const PreparedPipeline p = build_pipeline(inst, Mode::Reduced);
        check_phase_kick(p, [&](const Schedule& s) { return satisfies_resources(inst, s); });
    }
}

TEST(MarkedReflection, ZeroAngleAndInversePair) {
    const PreparedPipeline p = build_pipeline(make(2, 2), Mode::Reduced);
    const StateVector start = testing::random_state(p.layout.total, 4);
    StateVector s = start;
    s.apply(build_marked_reflection(p, 0.0));
    EXPECT_GE(fidelity(start, s), 1.0 - 1e-9);
    s.apply(build_marked_reflection(p, 0.8));
    s.apply(build_marked_reflection(p, -0.8));
    EXPECT_GE(fidelity(start, s), 1.0 - 1e-9);
}

TEST(InitialReflection, ActsOnPreparedStateOnly) {
    for (Mode mode : {Mode::Full, Mode::Reduced}) {
        const PreparedPipeline p = build_pipeline(make(2, 2), mode);
        const StateVector phi = prepared_state(p);

        StateVector s = phi;
        s.apply(build_initial_reflection(p, 0.0));
        EXPECT_GE(fidelity(phi, s), 1.0 - 1e-9);

        s = phi;
        s.apply(build_initial_reflection(p, std::numbers::pi));
        const auto a = testing::to_vector(s);
        const auto b = testing::to_vector(phi);
        for (std::size_t i = 0; i < a.size(); ++i) ASSERT_NEAR(std::abs(a[i] + b[i]), 0.0, 1e-9);

        // Orthogonal state: flip the sign of one marked component, then orthonormalize against phi.
        const BasisMask mask = marked_mask(p.instance, p.layout);
        std::vector<testing::Cplx> v = b;
        for (std::size_t i = 0; i < v.size(); ++i)
            if (std::abs(v[i]) > 0 && mask.contains(i & data_mask(p.layout))) {
                v[i] = -v[i];
                break;
            }
        testing::Cplx overlap = 0.0;
        for (std::size_t i = 0; i < v.size(); ++i) overlap += std::conj(b[i]) * v[i];
        double norm = 0.0;
        for (std::size_t i = 0; i < v.size(); ++i) {
            v[i] -= overlap * b[i];
            norm += std::norm(v[i]);
        }
        for (auto& x : v) x /= std::sqrt(norm);
        const StateVector orth = StateVector::from_amplitudes(v);
        StateVector t = orth;
        t.apply(build_initial_reflection(p, 1.3));
        const auto out = testing::to_vector(t);
        for (std::size_t i = 0; i < v.size(); ++i) ASSERT_NEAR(std::abs(out[i] - v[i]), 0.0, 1e-9);
    }
}

TEST(Pipeline, AncillasRestoredAfterReflections) {
    for (Mode mode : {Mode::Full, Mode::Reduced}) {
        const PreparedPipeline p = build_pipeline(make(2, 2), mode);
        StateVector s = prepared_state(p);
        for (int r = 0; r < 3; ++r) {
            s.apply(build_marked_reflection(p, 0.3 + r));
            s.apply(build_initial_reflection(p, -1.1 * r));
        }
        WireList ancillas = p.layout.flag_wires();
        ancillas.insert(ancillas.end(), p.layout.group_a.begin(), p.layout.group_a.end());
        ancillas.push_back(p.layout.group_b);
        for (const auto& c : p.layout.coin) ancillas.insert(ancillas.end(), c.wires().begin(), c.wires().end());
        for (Wire w : p.layout.sign_extra) ancillas.push_back(w);
        EXPECT_LE(weight_off_zero(s, ancillas), 1e-9);
        EXPECT_NEAR(s.norm_squared(), 1.0, 1e-9);
    }
}

TEST(Golden, PlusOneAndResourceFlagsDump) {
    std::ifstream in(std::string(QSSR_TEST_DATA_DIR) + "/golden_circuits.txt");
    ASSERT_TRUE(in) << "missing golden file";
    std::stringstream expected;
    expected << in.rdbuf();
    const Instance inst = make(2, 1);
    const std::string actual = "# plus_one width 3\n" + dump_circuit(plus_one(RegisterSpan::range(0, 3))) +
                               "# resource flags I=2 K=1 C=4\n" +
                               dump_circuit(build_resource_flags(inst, build_layout(inst, Mode::Full)));
    EXPECT_EQ(actual, expected.str());
}

}  // namespace
}  // namespace qssr
