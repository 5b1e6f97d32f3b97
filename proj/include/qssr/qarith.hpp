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

#include "qssr/circuit.hpp"

namespace qssr {

/// Ordered wires of an integer register, least-significant wire first.
class RegisterSpan {
  public:
    RegisterSpan() = default;
    /// Throws WiringError when `wires` is empty or repeats a wire.
    explicit RegisterSpan(WireList wires);
    /// `width` consecutive wires starting at `first`.
    static RegisterSpan range(Wire first, std::size_t width);

    const WireList& wires() const { return wires_; }
    std::size_t width() const { return wires_.size(); }
    Wire operator[](std::size_t i) const { return wires_[i]; }
    Wire top() const { return wires_.back(); }

    /// The `n` least-significant wires.
    RegisterSpan low(std::size_t n) const;
    /// This register extended by `high` as more-significant wires.
    RegisterSpan extended(const WireList& high) const;

    bool overlaps(const RegisterSpan& other) const;
    bool contains(Wire w) const;

  private:
    WireList wires_;
};

enum class AddDirection { Add, Subtract };

/// Discrete Fourier transform over 2^width, |y> -> sum_z e^{2 pi i y z / 2^width} |z> / sqrt(2^width),
/// with the closing swap network so that the output keeps the register's bit order.
Circuit qft(const RegisterSpan& reg);

/// |y> -> |y + 1 mod 2^width>: Fourier transform, one rotation layer, inverse transform.
Circuit plus_one(const RegisterSpan& reg);

/// |y> -> |y +- c mod 2^width>. Subtraction adds the two's complement 2^width - c.
/// Throws ParameterError unless 0 <= c < 2^width.
Circuit add_constant(const RegisterSpan& reg, std::uint64_t c, AddDirection direction = AddDirection::Add);

/// add_constant whose rotation layer is conditioned on every control being |1>.
Circuit controlled_add_constant(const RegisterSpan& reg, std::uint64_t c, const WireList& controls,
                                AddDirection direction = AddDirection::Add);

/// |a>|b> -> |a>|b + a mod 2^dst.width>; the inverse circuit subtracts.
Circuit add_register(const RegisterSpan& src, const RegisterSpan& dst);

/// |y> -> |2^width - y mod 2^width>: X on every wire followed by plus_one.
Circuit twos_complement(const RegisterSpan& reg);

/// Number of sign-extension wires range_check needs on top of the upper
/// operand so that both x1 - x0 and x1 - x0 - bound are representable.
std::size_t range_check_extra_width(std::size_t lower_width, std::size_t upper_width, std::uint64_t bound);

/// Sets flag_lo iff upper - lower >= 0 and flag_hi iff upper - lower <= bound - 1.
///
/// The difference is formed in the register `upper` extended by `sign_wires`
/// (initially |0>); its top wire acts as the sign bit. Both operand registers
/// and the sign wires are restored. Throws LayoutError when the extension is
/// too narrow (see range_check_extra_width).
Circuit range_check(const RegisterSpan& lower, const RegisterSpan& upper, const WireList& sign_wires,
                    std::uint64_t bound, Wire flag_lo, Wire flag_hi);

}  // namespace qssr
