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

#include "qssr/statevector.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "qssr/error.hpp"

namespace qssr {
namespace {

std::uint64_t bit(Wire w) { return std::uint64_t{1} << w; }

std::uint64_t mask_of(const WireList& wires) {
    std::uint64_t m = 0;
    for (Wire w : wires) m |= bit(w);
    return m;
}

// Visits every index whose `fixed` bits equal the corresponding bits of
// `pattern`, in increasing order. Free-bit subsets are stepped with the
// (sub - free) & free recurrence.
template <class F>
void for_each_index(std::size_t n_qubits, std::uint64_t fixed, std::uint64_t pattern, F&& f) {
    const std::uint64_t free = ((std::uint64_t{1} << n_qubits) - 1) & ~fixed;
    std::uint64_t sub = 0;
    do {
        f(sub | pattern);
        sub = (sub - free) & free;
    } while (sub != 0);
}

}  // namespace

StateVector::StateVector(std::size_t n_qubits) : n_qubits_(n_qubits) {
    if (n_qubits < 1 || n_qubits > kMaxQubits) {
        throw CapacityError("register of " + std::to_string(n_qubits) +
                            " qubits outside supported range [1, " + std::to_string(kMaxQubits) + "]");
    }
    amps_.assign(std::size_t{1} << n_qubits, Amplitude{0.0, 0.0});
    amps_[0] = 1.0;
    zero_mask_ = dimension() - 1;
}

StateVector StateVector::from_amplitudes(std::vector<Amplitude> amplitudes) {
    const std::size_t len = amplitudes.size();
    if (len < 2 || !std::has_single_bit(len)) {
        throw CapacityError("amplitude count must be a power of two >= 2");
    }
    const auto n = static_cast<std::size_t>(std::countr_zero(len));
    if (n > kMaxQubits) {
        throw CapacityError("register of " + std::to_string(n) + " qubits exceeds limit");
    }
    StateVector s;
    s.n_qubits_ = n;
    s.amps_ = std::move(amplitudes);
    s.refresh_zero_wires();
    return s;
}

void StateVector::apply(const GateOp& op) {
    validate_op(op, n_qubits_);
    const std::uint64_t targets = mask_of(op.targets);
    const std::uint64_t controls = mask_of(op.controls);
    const std::uint64_t anti = mask_of(op.anti_controls);
    if (controls & zero_mask_) {
        return;  // a control can never read |1>
    }
    if (op.is_diagonal() && (targets & zero_mask_)) {
        return;  // the target's |1> half is empty
    }
    const std::uint64_t skip = zero_mask_ & ~targets & ~anti;
    const std::uint64_t fixed = targets | controls | anti | skip;
    Amplitude* a = amps_.data();
    const std::uint64_t t = op.targets[0] < 64 ? bit(op.targets[0]) : 0;

    switch (op.kind) {
        case GateKind::PauliX:
            for_each_index(n_qubits_, fixed, controls, [&](std::uint64_t i) { std::swap(a[i], a[i | t]); });
            zero_mask_ &= ~targets;
            break;
        case GateKind::Hadamard: {
            const double r = std::numbers::sqrt2 / 2.0;
            for_each_index(n_qubits_, fixed, controls, [&](std::uint64_t i) {
                const Amplitude a0 = a[i];
                const Amplitude a1 = a[i | t];
                a[i] = (a0 + a1) * r;
                a[i | t] = (a0 - a1) * r;
            });
            zero_mask_ &= ~targets;
            break;
        }
        case GateKind::PauliZ:
            for_each_index(n_qubits_, fixed, controls | t, [&](std::uint64_t i) { a[i] = -a[i]; });
            break;
        case GateKind::Phase:
        case GateKind::PhaseRotation: {
            const Amplitude factor = std::polar(1.0, op.angle);
            for_each_index(n_qubits_, fixed, controls | t, [&](std::uint64_t i) { a[i] *= factor; });
            break;
        }
        case GateKind::Swap: {
            const std::uint64_t u = bit(op.targets[1]);
            for_each_index(n_qubits_, fixed, controls | t, [&](std::uint64_t i) { std::swap(a[i], a[(i ^ t) | u]); });
            if ((zero_mask_ & targets) != targets) {
                zero_mask_ &= ~targets;
            }
            break;
        }
    }
}

void StateVector::apply(const Circuit& circuit) {
    if (circuit.n_qubits() != n_qubits_) {
        throw WiringError("circuit width " + std::to_string(circuit.n_qubits()) +
                          " does not match state width " + std::to_string(n_qubits_));
    }
    for (const GateOp& op : circuit.ops()) {
        apply(op);
    }
}

void StateVector::apply_mask_phase(const BasisMask& mask, double angle) {
    if (mask.n_bits > n_qubits_ || mask.marked.size() != (std::size_t{1} << mask.n_bits)) {
        throw ParameterError("mask does not fit the state");
    }
    const std::uint64_t low = (std::uint64_t{1} << mask.n_bits) - 1;
    const Amplitude factor = std::polar(1.0, angle);
    for (std::uint64_t i = 0; i < amps_.size(); ++i) {
        if (mask.marked[i & low]) amps_[i] *= factor;
    }
}

double StateVector::norm_squared() const {
    double sum = 0.0;
    for (const Amplitude& x : amps_) sum += std::norm(x);
    return sum;
}

void StateVector::refresh_zero_wires() {
    std::uint64_t support = 0;
    for (std::uint64_t i = 0; i < amps_.size(); ++i) {
        if (amps_[i].real() != 0.0 || amps_[i].imag() != 0.0) support |= i;
    }
    zero_mask_ = ~support & (dimension() - 1);
}

BasisMask BasisMask::empty(std::size_t n_bits) {
    if (n_bits > kMaxQubits) {
        throw CapacityError("mask over " + std::to_string(n_bits) + " bits exceeds limit");
    }
    return BasisMask{n_bits, std::vector<std::uint8_t>(std::size_t{1} << n_bits, 0)};
}

std::uint64_t BasisMask::count() const {
    return static_cast<std::uint64_t>(std::count(marked.begin(), marked.end(), std::uint8_t{1}));
}

StateVector init_state(std::size_t n_qubits) { return StateVector(n_qubits); }

StateVector apply_circuit(StateVector state, const Circuit& circuit) {
    state.apply(circuit);
    return state;
}

double marked_probability(const StateVector& state, std::span<const std::uint64_t> indices) {
    std::vector<std::uint64_t> unique(indices.begin(), indices.end());
    std::sort(unique.begin(), unique.end());
    unique.erase(std::unique(unique.begin(), unique.end()), unique.end());
    double p = 0.0;
    for (std::uint64_t i : unique) {
        if (i >= state.dimension()) {
            throw ParameterError("basis index " + std::to_string(i) + " out of range");
        }
        p += std::norm(state.amplitudes()[i]);
    }
    return std::min(p, 1.0);
}

double marked_probability(const StateVector& state, const BasisMask& mask) {
    if (mask.n_bits > state.n_qubits() || mask.marked.size() != (std::size_t{1} << mask.n_bits)) {
        throw ParameterError("mask does not fit the state");
    }
    const std::uint64_t low = (std::uint64_t{1} << mask.n_bits) - 1;
    const auto amps = state.amplitudes();
    double p = 0.0;
    for (std::uint64_t i = 0; i < amps.size(); ++i) {
        if (mask.marked[i & low]) p += std::norm(amps[i]);
    }
    return std::min(p, 1.0);
}

double fidelity(const StateVector& a, const StateVector& b) {
    if (a.n_qubits() != b.n_qubits()) {
        throw WiringError("fidelity between states of different width");
    }
    Amplitude overlap{0.0, 0.0};
    const auto x = a.amplitudes();
    const auto y = b.amplitudes();
    for (std::size_t i = 0; i < x.size(); ++i) overlap += std::conj(x[i]) * y[i];
    return std::norm(overlap);
}

std::map<std::uint64_t, std::uint64_t> sample(const StateVector& state, std::uint64_t shots,
                                              std::uint64_t seed) {
    if (shots < 1) {
        throw ParameterError("shots must be >= 1");
    }
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> uniform(0.0, 1.0);
    const double total = state.norm_squared();
    std::vector<double> draws(shots);
    for (double& u : draws) u = uniform(rng) * total;
    std::sort(draws.begin(), draws.end());

    std::map<std::uint64_t, std::uint64_t> histogram;
    const auto amps = state.amplitudes();
    double cumulative = 0.0;
    std::size_t next = 0;
    std::uint64_t last_nonzero = 0;
    for (std::uint64_t i = 0; i < amps.size() && next < draws.size(); ++i) {
        const double p = std::norm(amps[i]);
        if (p == 0.0) continue;
        last_nonzero = i;
        cumulative += p;
        while (next < draws.size() && draws[next] < cumulative) {
            ++histogram[i];
            ++next;
        }
    }
    // Rounding can leave the top draws just above the final cumulative sum.
    if (next < draws.size()) histogram[last_nonzero] += draws.size() - next;
    return histogram;
}

}  // namespace qssr
