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

#include "qssr/qarith.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "qssr/error.hpp"

namespace qssr {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::size_t width_for(const WireList& wires) {
    return wires.empty() ? 0 : static_cast<std::size_t>(*std::max_element(wires.begin(), wires.end())) + 1;
}

std::size_t width_for(const RegisterSpan& reg) { return width_for(reg.wires()); }

// Phase 2*pi*numerator/2^shift reduced to (-pi, pi]; zero when it is a whole turn.
double turn_fraction(std::uint64_t numerator, std::size_t shift) {
    const std::uint64_t period = std::uint64_t{1} << shift;
    const std::uint64_t r = numerator % period;
    return std::remainder(kTwoPi * static_cast<double>(r) / static_cast<double>(period), kTwoPi);
}

// Fourier transform without the closing swaps: afterwards wire reg[j] carries
// the Fourier bit of weight 2^(width-1-j).
Circuit qft_unswapped(const RegisterSpan& reg, std::size_t n_qubits) {
    Circuit c(n_qubits);
    for (std::size_t j = reg.width(); j-- > 0;) {
        c.add(GateOp::h(reg[j]));
        for (std::size_t m = 0; m < j; ++m) {
            c.add(GateOp::rotation(reg[j], std::numbers::pi / static_cast<double>(std::uint64_t{1} << (j - m)),
                                   {reg[m]}));
        }
    }
    return c;
}

// Adds c inside the unswapped Fourier basis.
void add_rotation_layer(Circuit& c, const RegisterSpan& reg, std::uint64_t value, const WireList& controls) {
    for (std::size_t j = 0; j < reg.width(); ++j) {
        const double angle = turn_fraction(value, j + 1);
        if (angle != 0.0) c.add(GateOp::rotation(reg[j], angle, controls));
    }
}

Circuit constant_adder(const RegisterSpan& reg, std::uint64_t c, const WireList& controls, AddDirection direction) {
    const std::size_t w = reg.width();
    if (w >= 64 || c >= (std::uint64_t{1} << w)) {
        throw ParameterError("constant " + std::to_string(c) + " does not fit a " + std::to_string(w) +
                             "-wire register");
    }
    for (Wire ctl : controls) {
        if (reg.contains(ctl)) throw WiringError("control wire overlaps the target register");
    }
    const std::size_t n = std::max(width_for(reg), width_for(controls));
    const std::uint64_t modulus = std::uint64_t{1} << w;
    const std::uint64_t value = direction == AddDirection::Add ? c : (modulus - c) % modulus;

    Circuit out(n);
    if (value == 0) return out;
    const Circuit forward = qft_unswapped(reg, n);
    out.append(forward, "qft");
    Circuit layer(n);
    add_rotation_layer(layer, reg, value, controls);
    out.append(layer, "rotations");
    out.append(forward.inverse(), "iqft");
    return out;
}

}  // namespace

RegisterSpan::RegisterSpan(WireList wires) : wires_(std::move(wires)) {
    if (wires_.empty()) throw WiringError("register must hold at least one wire");
    WireList sorted = wires_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw WiringError("register wires must be distinct");
    }
}

RegisterSpan RegisterSpan::range(Wire first, std::size_t width) {
    WireList w(width);
    for (std::size_t i = 0; i < width; ++i) w[i] = first + static_cast<Wire>(i);
    return RegisterSpan(std::move(w));
}

RegisterSpan RegisterSpan::low(std::size_t n) const {
    if (n == 0 || n > width()) throw WiringError("sub-register width out of range");
    return RegisterSpan(WireList(wires_.begin(), wires_.begin() + static_cast<std::ptrdiff_t>(n)));
}

RegisterSpan RegisterSpan::extended(const WireList& high) const {
    WireList w = wires_;
    w.insert(w.end(), high.begin(), high.end());
    return RegisterSpan(std::move(w));
}

bool RegisterSpan::overlaps(const RegisterSpan& other) const {
    return std::any_of(other.wires_.begin(), other.wires_.end(), [&](Wire w) { return contains(w); });
}

bool RegisterSpan::contains(Wire w) const { return std::find(wires_.begin(), wires_.end(), w) != wires_.end(); }

Circuit qft(const RegisterSpan& reg) {
    const std::size_t n = width_for(reg);
    Circuit c = qft_unswapped(reg, n);
    for (std::size_t j = 0; j < reg.width() / 2; ++j) {
        c.add(GateOp::swap(reg[j], reg[reg.width() - 1 - j]));
    }
    return c;
}

Circuit plus_one(const RegisterSpan& reg) {
    if (reg.width() == 1) {
        Circuit c(width_for(reg));
        c.add(GateOp::x(reg[0]));
        return c;
    }
    return constant_adder(reg, 1, {}, AddDirection::Add);
}

Circuit add_constant(const RegisterSpan& reg, std::uint64_t c, AddDirection direction) {
    return constant_adder(reg, c, {}, direction);
}

Circuit controlled_add_constant(const RegisterSpan& reg, std::uint64_t c, const WireList& controls,
                                AddDirection direction) {
    return constant_adder(reg, c, controls, direction);
}

Circuit add_register(const RegisterSpan& src, const RegisterSpan& dst) {
    if (src.overlaps(dst)) throw WiringError("add_register operands overlap");
    if (dst.width() < src.width()) throw WiringError("destination register narrower than source");
    const std::size_t n = std::max(width_for(src), width_for(dst));
    const Circuit forward = qft_unswapped(dst, n);
    Circuit out(n);
    out.append(forward, "qft");
    Circuit layer(n);
    for (std::size_t s = 0; s < src.width(); ++s) {
        for (std::size_t j = 0; j < dst.width(); ++j) {
            const double angle = turn_fraction(std::uint64_t{1} << s, j + 1);
            if (angle != 0.0) layer.add(GateOp::rotation(dst[j], angle, {src[s]}));
        }
    }
    out.append(layer, "rotations");
    out.append(forward.inverse(), "iqft");
    return out;
}

Circuit twos_complement(const RegisterSpan& reg) {
    Circuit out(width_for(reg));
    for (Wire w : reg.wires()) out.add(GateOp::x(w));
    out.append(plus_one(reg), "plus_one");
    return out;
}

std::size_t range_check_extra_width(std::size_t lower_width, std::size_t upper_width, std::uint64_t bound) {
    // Both d = upper - lower and d - bound must lie in [-2^(E-1), 2^(E-1)).
    const std::uint64_t most_negative = ((std::uint64_t{1} << lower_width) - 1) + bound;
    const std::uint64_t most_positive = (std::uint64_t{1} << upper_width) - 1;
    std::size_t extra = 1;
    while (true) {
        const std::uint64_t half = std::uint64_t{1} << (upper_width + extra - 1);
        if (half >= most_negative && half > most_positive) return extra;
        ++extra;
    }
}

Circuit range_check(const RegisterSpan& lower, const RegisterSpan& upper, const WireList& sign_wires,
                    std::uint64_t bound, Wire flag_lo, Wire flag_hi) {
    if (bound < 1) throw ParameterError("range_check bound must be >= 1");
    if (sign_wires.empty()) throw LayoutError("range_check needs at least one sign wire");
    const RegisterSpan ext = upper.extended(sign_wires);
    if (lower.overlaps(ext)) throw WiringError("range_check operands overlap");
    if (ext.contains(flag_lo) || ext.contains(flag_hi) || lower.contains(flag_lo) || lower.contains(flag_hi) ||
        flag_lo == flag_hi) {
        throw WiringError("range_check flags must be distinct from the operands");
    }
    const std::size_t needed = range_check_extra_width(lower.width(), upper.width(), bound);
    if (sign_wires.size() < needed) {
        throw LayoutError("range_check needs " + std::to_string(needed) + " sign wire(s) for operand widths " +
                          std::to_string(lower.width()) + "/" + std::to_string(upper.width()) + " and bound " +
                          std::to_string(bound) + ", got " + std::to_string(sign_wires.size()));
    }
    const std::size_t n = std::max({width_for(lower), width_for(ext), static_cast<std::size_t>(flag_lo) + 1,
                                    static_cast<std::size_t>(flag_hi) + 1});
    const Wire sign = ext.top();

    Circuit difference = add_register(lower, ext).inverse();
    Circuit minus_bound = add_constant(ext, bound, AddDirection::Subtract);

    Circuit out(n);
    out.append(difference, "difference");
    out.add(GateOp::x(flag_lo, {}, {sign}));
    out.append(minus_bound, "minus_bound");
    out.add(GateOp::x(flag_hi, {sign}));
    out.append(minus_bound.inverse(), "restore_bound");
    out.append(difference.inverse(), "restore_difference");
    return out;
}

}  // namespace qssr
