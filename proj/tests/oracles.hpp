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

// Test-only reference models, written independently of the library kernels.

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include "qssr/circuit.hpp"
#include "qssr/statevector.hpp"

namespace qssr::testing {

using Cplx = std::complex<double>;
using Matrix = std::vector<std::vector<Cplx>>;

inline int bit_of(std::uint64_t v, Wire w) { return static_cast<int>((v >> w) & 1U); }

/// Dense matrix of one gate, column by column from the gate's definition.
inline Matrix dense_gate(const GateOp& op, std::size_t n) {
    const std::size_t dim = std::size_t{1} << n;
    Matrix u(dim, std::vector<Cplx>(dim, 0.0));
    for (std::size_t j = 0; j < dim; ++j) {
        bool active = true;
        for (Wire c : op.controls) active = active && bit_of(j, c) == 1;
        for (Wire c : op.anti_controls) active = active && bit_of(j, c) == 0;
        if (!active) {
            u[j][j] = 1.0;
            continue;
        }
        const Wire t = op.targets[0];
        const std::size_t flip = std::size_t{1} << t;
        const int b = bit_of(j, t);
        switch (op.kind) {
            case GateKind::Hadamard: {
                const double s = 1.0 / std::sqrt(2.0);
                u[j & ~flip][j] += s;
                u[j | flip][j] += b ? -s : s;
                break;
            }
            case GateKind::PauliX: u[j ^ flip][j] = 1.0; break;
            case GateKind::PauliZ: u[j][j] = b ? -1.0 : 1.0; break;
            case GateKind::Phase:
            case GateKind::PhaseRotation: u[j][j] = b ? std::exp(Cplx(0.0, op.angle)) : Cplx(1.0); break;
            case GateKind::Swap: {
                const Wire t2 = op.targets[1];
                std::size_t out = j & ~flip & ~(std::size_t{1} << t2);
                out |= static_cast<std::size_t>(bit_of(j, t2)) << t;
                out |= static_cast<std::size_t>(b) << t2;
                u[out][j] = 1.0;
                break;
            }
        }
    }
    return u;
}

inline std::vector<Cplx> mat_vec(const Matrix& u, const std::vector<Cplx>& v) {
    std::vector<Cplx> out(v.size(), 0.0);
    for (std::size_t r = 0; r < v.size(); ++r)
        for (std::size_t c = 0; c < v.size(); ++c) out[r] += u[r][c] * v[c];
    return out;
}

inline std::vector<Cplx> dense_run(const Circuit& c, std::vector<Cplx> v) {
    for (const GateOp& op : c.ops()) v = mat_vec(dense_gate(op, c.n_qubits()), v);
    return v;
}

inline std::vector<Cplx> to_vector(const StateVector& s) {
    return std::vector<Cplx>(s.amplitudes().begin(), s.amplitudes().end());
}

inline StateVector random_state(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> g;
    std::vector<Cplx> v(std::size_t{1} << n);
    double norm = 0.0;
    for (auto& x : v) {
        x = Cplx(g(rng), g(rng));
        norm += std::norm(x);
    }
    for (auto& x : v) x /= std::sqrt(norm);
    return StateVector::from_amplitudes(std::move(v));
}

inline StateVector basis_state(std::size_t n, std::uint64_t index) {
    std::vector<Cplx> v(std::size_t{1} << n, 0.0);
    v[index] = 1.0;
    return StateVector::from_amplitudes(std::move(v));
}

/// Index of the single basis state carrying the amplitude, or -1 when the
/// state is not a basis state (up to 1e-9).
inline std::int64_t as_basis_state(const StateVector& s) {
    std::int64_t found = -1;
    const auto a = s.amplitudes();
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double p = std::norm(a[i]);
        if (p > 1e-9) {
            if (found >= 0 || std::abs(p - 1.0) > 1e-9) return -1;
            found = static_cast<std::int64_t>(i);
        }
    }
    return found;
}

/// Random circuit mixing every gate kind, controls and anti-controls.
inline Circuit random_circuit(std::size_t n, std::size_t gates, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
    Circuit c(n);
    while (c.size() < gates) {
        std::vector<Wire> wires(n);
        for (std::size_t i = 0; i < n; ++i) wires[i] = static_cast<Wire>(i);
        std::shuffle(wires.begin(), wires.end(), rng);
        const int kind = static_cast<int>(rng() % (n >= 2 ? 6 : 5));
        const std::size_t arity = kind == 5 ? 2 : 1;
        const std::size_t extra = rng() % (n - arity + 1);
        WireList ctl, anti;
        for (std::size_t e = 0; e < extra; ++e) {
            const Wire w = wires[arity + e];
            if (rng() % 2) ctl.push_back(w); else anti.push_back(w);
        }
        GateOp op;
        switch (kind) {
            case 0: op = GateOp::h(wires[0]); op.controls = ctl; op.anti_controls = anti; break;
            case 1: op = GateOp::x(wires[0], ctl, anti); break;
            case 2: op = GateOp::z(wires[0], ctl, anti); break;
            case 3: op = GateOp::phase(wires[0], angle(rng), ctl, anti); break;
            case 4: op = GateOp::rotation(wires[0], angle(rng), ctl); op.anti_controls = anti; break;
            default: op = GateOp::swap(wires[0], wires[1], ctl); op.anti_controls = anti; break;
        }
        c.add(op);
    }
    return c;
}

/// Two-level model: amplitudes on the normalized marked and unmarked parts of
/// the prepared state, which both reflections keep invariant.
inline std::vector<double> two_level_trace(double w, const std::vector<double>& marked_angles,
                                           const std::vector<double>& initial_angles) {
    const Cplx s0(std::sqrt(w)), s1(std::sqrt(1.0 - w));
    Cplx g = s0, b = s1;
    std::vector<double> out{std::norm(g)};
    for (std::size_t j = 0; j < marked_angles.size(); ++j) {
        g *= std::exp(Cplx(0.0, marked_angles[j]));
        const Cplx overlap = std::conj(s0) * g + std::conj(s1) * b;
        const Cplx k = (std::exp(Cplx(0.0, initial_angles[j])) - 1.0) * overlap;
        g += k * s0;
        b += k * s1;
        out.push_back(std::norm(g));
    }
    return out;
}

/// Chebyshev polynomial of the first kind extended to |x| > 1.
inline double chebyshev_t(double n, double x) {
    if (std::abs(x) <= 1.0) return std::cos(n * std::acos(x));
    return std::cosh(n * std::acosh(x));
}

}  // namespace qssr::testing
