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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "qssr/circuit.hpp"

namespace qssr {

using Amplitude = std::complex<double>;

/// Largest register the dense simulator accepts (2^26 amplitudes, 1 GiB).
inline constexpr std::size_t kMaxQubits = 26;

struct BasisMask;

/// Dense state vector over `n_qubits` wires; amplitude index bit j is wire j.
///
/// Besides the amplitudes, the state remembers which wires are known to be
/// exactly |0> (every amplitude with that bit set is exactly zero). Gate
/// kernels skip those halves of the register, which is exact: a gate that
/// does not target such a wire maps the zero half onto itself.
class StateVector {
  public:
    /// |0...0> on `n_qubits` wires. Throws CapacityError outside [1, kMaxQubits].
    explicit StateVector(std::size_t n_qubits);

    /// Takes ownership of `amplitudes`; the length must be a power of two.
    static StateVector from_amplitudes(std::vector<Amplitude> amplitudes);

    std::size_t n_qubits() const { return n_qubits_; }
    std::uint64_t dimension() const { return std::uint64_t{1} << n_qubits_; }
    std::span<const Amplitude> amplitudes() const { return amps_; }
    Amplitude amplitude(std::uint64_t index) const { return amps_.at(index); }

    void apply(const GateOp& op);
    void apply(const Circuit& circuit);

    /// Multiplies every amplitude whose low `mask.n_bits` wires form a marked
    /// pattern by e^{i angle}.
    void apply_mask_phase(const BasisMask& mask, double angle);

    double norm_squared() const;

    /// Rescans the amplitudes and marks every wire whose |1> half is exactly zero.
    void refresh_zero_wires();
    std::uint64_t known_zero_mask() const { return zero_mask_; }

  private:
    StateVector() = default;

    std::size_t n_qubits_ = 0;
    std::vector<Amplitude> amps_;
    std::uint64_t zero_mask_ = 0;
};

/// Set of basis patterns over the lowest `n_bits` wires of a larger register.
struct BasisMask {
    std::size_t n_bits = 0;
    std::vector<std::uint8_t> marked;  // size 2^n_bits

    static BasisMask empty(std::size_t n_bits);
    bool contains(std::uint64_t pattern) const { return marked[pattern] != 0; }
    std::uint64_t count() const;
};

StateVector init_state(std::size_t n_qubits);

/// Value-returning form of StateVector::apply(circuit). Throws WiringError on width mismatch.
StateVector apply_circuit(StateVector state, const Circuit& circuit);

/// Sum of |amplitude|^2 over the given basis indices (duplicates counted once).
double marked_probability(const StateVector& state, std::span<const std::uint64_t> indices);

/// Probability that the lowest `mask.n_bits` wires read a marked pattern.
double marked_probability(const StateVector& state, const BasisMask& mask);

/// |<a|b>|^2.
double fidelity(const StateVector& a, const StateVector& b);

/// Multinomial draw of `shots` basis indices from |amplitude|^2; reproducible per seed.
std::map<std::uint64_t, std::uint64_t> sample(const StateVector& state, std::uint64_t shots,
                                              std::uint64_t seed);

}  // namespace qssr
