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

#include "qssr/circuit.hpp"
#include "qssr/problem.hpp"

namespace qssr {

struct PipelineOptions {
    /// Reduced mode: disentangle and reuse one coin register for every walk step.
    bool coin_reuse = true;
    std::size_t max_qubits = kMaxQubits;
};

/// Everything a search needs for one instance and mode.
struct PreparedPipeline {
    Instance instance;
    Mode mode = Mode::Full;
    QubitLayout layout;
    /// |0...0> -> |phi>.
    Circuit prep;
    /// Computes the condition wires; its inverse uncomputes them.
    Circuit marked_condition;
    /// A basis state is marked iff all of these read |1> after marked_condition.
    WireList condition_wires;
    /// Wires prep acts on; |phi> is prep applied to their all-zero pattern.
    WireList prep_wires;
};

/// Hadamard on every data wire; offset registers loaded with O_i by X gates.
Circuit build_uniform_prep(const Instance& instance, const QubitLayout& layout);

/// Quantum-walk preparation of the uniform superposition over feasible paths.
/// Per machine: Hadamards on the low log2(C) bits of the first register and a
/// constant add of O_i; then for each later job, copy the previous register,
/// Hadamard the coin, add 2^j controlled by coin bit j, and (with coin reuse)
/// subtract the step back out of the coin so it returns to |0...0>.
Circuit build_walk_prep(const Instance& instance, const QubitLayout& layout);

/// Full mode: first-window and spacing comparisons into the flag wires.
Circuit build_path_flags(const Instance& instance, const QubitLayout& layout);

/// Group A flags per machine pair and job (1 on equal dates) and the group B
/// flag (1 when no A flag is set).
Circuit build_resource_flags(const Instance& instance, const QubitLayout& layout);

/// Throws CapacityError when the layout exceeds options.max_qubits and
/// ValidationError when reduced mode is asked for a C that is not a power of two.
PreparedPipeline build_pipeline(const Instance& instance, Mode mode, const PipelineOptions& options = {});

/// Multiplies every marked basis state by e^{i angle}; ancillas are restored.
Circuit build_marked_reflection(const PreparedPipeline& pipeline, double angle);

/// Multiplies |phi> by e^{i angle} and leaves its orthogonal complement alone.
Circuit build_initial_reflection(const PreparedPipeline& pipeline, double angle);

}  // namespace qssr
