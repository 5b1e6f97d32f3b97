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

#include "qssr/circuit.hpp"

#include <numbers>

#include <gtest/gtest.h>

#include "qssr/error.hpp"
#include "oracles.hpp"

namespace qssr {
namespace {

TEST(GateOp, RejectsOverlappingWires) {
    Circuit c(3);
    EXPECT_THROW(c.add(GateOp::x(0, {0})), WiringError);
    EXPECT_THROW(c.add(GateOp::x(0, {1}, {1})), WiringError);
    EXPECT_THROW(c.add(GateOp::swap(1, 1)), WiringError);
}

TEST(GateOp, RejectsOutOfRangeWire) {
    Circuit c(2);
    EXPECT_THROW(c.add(GateOp::h(2)), WiringError);
    EXPECT_THROW(c.add(GateOp::x(0, {5})), WiringError);
}

TEST(GateOp, RejectsWrongArity) {
    GateOp op = GateOp::swap(0, 1);
    op.targets.pop_back();
    EXPECT_THROW(validate_op(op, 2), WiringError);
}

TEST(GateOp, InverseNegatesPhases) {
    EXPECT_DOUBLE_EQ(GateOp::phase(0, 0.25).inverse().angle, -0.25);
    EXPECT_DOUBLE_EQ(GateOp::rotation(0, -1.5).inverse().angle, 1.5);
    EXPECT_EQ(GateOp::h(0).inverse().kind, GateKind::Hadamard);
}

TEST(Circuit, InverseReversesOpsAndSegments) {
    Circuit inner(2);
    inner.add(GateOp::h(0)).add(GateOp::phase(1, 0.5, {0}));
    Circuit c(3);
    c.add(GateOp::x(2));
    c.append(inner, "block");
    const Circuit inv = c.inverse();
    ASSERT_EQ(inv.size(), 3u);
    EXPECT_EQ(inv.ops()[0].kind, GateKind::Phase);
    EXPECT_DOUBLE_EQ(inv.ops()[0].angle, -0.5);
    EXPECT_EQ(inv.ops()[2].kind, GateKind::PauliX);
    ASSERT_EQ(inv.segments().size(), 1u);
    EXPECT_EQ(inv.segments()[0].name, "block^-1");
    EXPECT_EQ(inv.segments()[0].begin, 0u);
    EXPECT_EQ(inv.segments()[0].end, 2u);
}

TEST(Circuit, AppendRejectsWiderCircuit) {
    Circuit small(2), wide(3);
    EXPECT_THROW(small.append(wide), WiringError);
    EXPECT_THROW(wide.resize(2), WiringError);
}

TEST(Circuit, DumpParseRoundTrip) {
    const Circuit c = testing::random_circuit(4, 40, 7);
    const std::string text = dump_circuit(c);
    const Circuit back = parse_circuit(text, 4);
    EXPECT_EQ(dump_circuit(back), text);
    ASSERT_EQ(back.size(), c.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
        EXPECT_EQ(back.ops()[i].kind, c.ops()[i].kind);
        EXPECT_EQ(back.ops()[i].angle, c.ops()[i].angle);
        EXPECT_EQ(back.ops()[i].controls, c.ops()[i].controls);
    }
}

TEST(Circuit, DumpFormat) {
    Circuit c(3);
    c.add(GateOp::x(2, {0}, {1}));
    c.add(GateOp::phase(0, std::numbers::pi));
    EXPECT_EQ(dump_circuit(c),
              "X targets=2 controls=0 anti=1 angle=0\n"
              "PHASE targets=0 controls= anti= angle=3.1415926535897931\n");
}

TEST(Circuit, ParseRejectsGarbage) {
    EXPECT_THROW(parse_circuit("FOO targets=0 controls= anti= angle=0\n", 2), ValidationError);
    EXPECT_THROW(parse_circuit("X targets=a controls= anti= angle=0\n", 2), ValidationError);
    EXPECT_THROW(parse_circuit("X targets=0 controls=0 anti= angle=0\n", 2), WiringError);
}

}  // namespace
}  // namespace qssr
