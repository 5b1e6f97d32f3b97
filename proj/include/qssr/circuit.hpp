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
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace qssr {

/// Index of a qubit. Basis-state index bit j addresses wire j (little-endian).
using Wire = std::uint32_t;
using WireList = std::vector<Wire>;

enum class GateKind {
    Hadamard,
    PauliX,
    PauliZ,
    /// diag(1, e^{i angle}) on the target; used for oracle and reflection phases.
    Phase,
    /// Same matrix as Phase; tags the rotation layers of Fourier-basis arithmetic
    /// so that gate counting can price them separately.
    PhaseRotation,
    Swap,
};

std::string_view gate_kind_name(GateKind kind);

/// One primitive gate. The gate acts on `targets` only when every wire in
/// `controls` is |1> and every wire in `anti_controls` is |0>.
struct GateOp {
    GateKind kind = GateKind::PauliX;
    WireList targets;
    WireList controls;
    WireList anti_controls;
    double angle = 0.0;

    static GateOp h(Wire target);
    static GateOp x(Wire target, WireList controls = {}, WireList anti_controls = {});
    static GateOp z(Wire target, WireList controls = {}, WireList anti_controls = {});
    static GateOp phase(Wire target, double angle, WireList controls = {}, WireList anti_controls = {});
    static GateOp rotation(Wire target, double angle, WireList controls = {});
    static GateOp swap(Wire a, Wire b, WireList controls = {});

    /// Number of target wires the kind requires (2 for Swap, 1 otherwise).
    static std::size_t arity(GateKind kind);

    bool is_diagonal() const;
    GateOp inverse() const;
};

/// Throws WiringError unless the op's wire sets are well formed, pairwise
/// disjoint and below `n_qubits`.
void validate_op(const GateOp& op, std::size_t n_qubits);

/// Named half-open op range [begin, end) inside a Circuit.
struct Segment {
    std::string name;
    std::size_t begin = 0;
    std::size_t end = 0;
};

class Circuit {
  public:
    Circuit() = default;
    explicit Circuit(std::size_t n_qubits);

    std::size_t n_qubits() const { return n_qubits_; }
    const std::vector<GateOp>& ops() const { return ops_; }
    const std::vector<Segment>& segments() const { return segments_; }
    std::size_t size() const { return ops_.size(); }
    bool empty() const { return ops_.empty(); }

    Circuit& add(GateOp op);
    /// Appends every op of `other`; a non-empty name records the span as a segment.
    Circuit& append(const Circuit& other, std::string_view segment_name = {});

    /// Reversed op list with every op inverted. Segments are mirrored.
    Circuit inverse() const;

    /// Widens the register without touching existing ops.
    void resize(std::size_t n_qubits);

  private:
    std::size_t n_qubits_ = 0;
    std::vector<GateOp> ops_;
    std::vector<Segment> segments_;
};

/// One gate per line: `KIND targets=<list> controls=<list> anti=<list> angle=<radians>`.
std::string dump_circuit(const Circuit& circuit);
/// Parses the dump format back into a circuit of the given width.
Circuit parse_circuit(std::string_view text, std::size_t n_qubits);

}  // namespace qssr
