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

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <sstream>

#include "qssr/error.hpp"

namespace qssr {

std::string_view gate_kind_name(GateKind kind) {
    switch (kind) {
        case GateKind::Hadamard: return "H";
        case GateKind::PauliX: return "X";
        case GateKind::PauliZ: return "Z";
        case GateKind::Phase: return "PHASE";
        case GateKind::PhaseRotation: return "PROT";
        case GateKind::Swap: return "SWAP";
    }
    return "?";
}

GateOp GateOp::h(Wire target) { return GateOp{GateKind::Hadamard, {target}, {}, {}, 0.0}; }

GateOp GateOp::x(Wire target, WireList controls, WireList anti_controls) {
    return GateOp{GateKind::PauliX, {target}, std::move(controls), std::move(anti_controls), 0.0};
}

GateOp GateOp::z(Wire target, WireList controls, WireList anti_controls) {
    return GateOp{GateKind::PauliZ, {target}, std::move(controls), std::move(anti_controls), 0.0};
}

GateOp GateOp::phase(Wire target, double angle, WireList controls, WireList anti_controls) {
    return GateOp{GateKind::Phase, {target}, std::move(controls), std::move(anti_controls), angle};
}

GateOp GateOp::rotation(Wire target, double angle, WireList controls) {
    return GateOp{GateKind::PhaseRotation, {target}, std::move(controls), {}, angle};
}

GateOp GateOp::swap(Wire a, Wire b, WireList controls) {
    return GateOp{GateKind::Swap, {a, b}, std::move(controls), {}, 0.0};
}

std::size_t GateOp::arity(GateKind kind) { return kind == GateKind::Swap ? 2 : 1; }

bool GateOp::is_diagonal() const {
    return kind == GateKind::PauliZ || kind == GateKind::Phase || kind == GateKind::PhaseRotation;
}

GateOp GateOp::inverse() const {
    GateOp inv = *this;
    if (kind == GateKind::Phase || kind == GateKind::PhaseRotation) {
        inv.angle = -angle;
    }
    return inv;
}

void validate_op(const GateOp& op, std::size_t n_qubits) {
    if (op.targets.size() != GateOp::arity(op.kind)) {
        throw WiringError(std::string(gate_kind_name(op.kind)) + " expects " +
                          std::to_string(GateOp::arity(op.kind)) + " target wire(s)");
    }
    WireList all;
    all.reserve(op.targets.size() + op.controls.size() + op.anti_controls.size());
    all.insert(all.end(), op.targets.begin(), op.targets.end());
    all.insert(all.end(), op.controls.begin(), op.controls.end());
    all.insert(all.end(), op.anti_controls.begin(), op.anti_controls.end());
    for (Wire w : all) {
        if (w >= n_qubits) {
            throw WiringError("wire " + std::to_string(w) + " outside register of " +
                              std::to_string(n_qubits) + " qubits");
        }
    }
    std::sort(all.begin(), all.end());
    if (std::adjacent_find(all.begin(), all.end()) != all.end()) {
        throw WiringError("targets, controls and anti-controls must be pairwise disjoint");
    }
}

Circuit::Circuit(std::size_t n_qubits) : n_qubits_(n_qubits) {}

Circuit& Circuit::add(GateOp op) {
    validate_op(op, n_qubits_);
    ops_.push_back(std::move(op));
    return *this;
}

Circuit& Circuit::append(const Circuit& other, std::string_view segment_name) {
    if (other.n_qubits_ > n_qubits_) {
        throw WiringError("appended circuit is wider than the destination");
    }
    const std::size_t offset = ops_.size();
    ops_.insert(ops_.end(), other.ops_.begin(), other.ops_.end());
    for (const Segment& s : other.segments_) {
        segments_.push_back({s.name, s.begin + offset, s.end + offset});
    }
    if (!segment_name.empty()) {
        segments_.push_back({std::string(segment_name), offset, ops_.size()});
    }
    return *this;
}

Circuit Circuit::inverse() const {
    Circuit inv(n_qubits_);
    inv.ops_.reserve(ops_.size());
    for (auto it = ops_.rbegin(); it != ops_.rend(); ++it) {
        inv.ops_.push_back(it->inverse());
    }
    const std::size_t n = ops_.size();
    for (const Segment& s : segments_) {
        inv.segments_.push_back({s.name + "^-1", n - s.end, n - s.begin});
    }
    return inv;
}

void Circuit::resize(std::size_t n_qubits) {
    if (n_qubits < n_qubits_) {
        throw WiringError("a circuit can only be widened");
    }
    n_qubits_ = n_qubits;
}

namespace {

void write_list(std::ostringstream& out, const WireList& wires) {
    for (std::size_t i = 0; i < wires.size(); ++i) {
        if (i) out << ',';
        out << wires[i];
    }
}

WireList read_list(std::string_view text) {
    WireList wires;
    while (!text.empty()) {
        const auto comma = text.find(',');
        const std::string_view item = text.substr(0, comma);
        Wire w = 0;
        auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), w);
        if (ec != std::errc{} || ptr != item.data() + item.size()) {
            throw ValidationError("bad wire list '" + std::string(text) + "'");
        }
        wires.push_back(w);
        if (comma == std::string_view::npos) break;
        text.remove_prefix(comma + 1);
    }
    return wires;
}

}  // namespace

std::string dump_circuit(const Circuit& circuit) {
    std::ostringstream out;
    char angle[40];
    for (const GateOp& op : circuit.ops()) {
        out << gate_kind_name(op.kind) << " targets=";
        write_list(out, op.targets);
        out << " controls=";
        write_list(out, op.controls);
        out << " anti=";
        write_list(out, op.anti_controls);
        std::snprintf(angle, sizeof angle, "%.17g", op.angle);
        out << " angle=" << angle << '\n';
    }
    return out.str();
}

Circuit parse_circuit(std::string_view text, std::size_t n_qubits) {
    Circuit circuit(n_qubits);
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream fields(line);
        std::string kind, targets, controls, anti, angle;
        fields >> kind >> targets >> controls >> anti >> angle;
        auto strip = [&](const std::string& field, std::string_view key) {
            if (field.rfind(key, 0) != 0) {
                throw ValidationError("expected '" + std::string(key) + "' in: " + line);
            }
            return std::string_view(field).substr(key.size());
        };
        GateOp op;
        if (kind == "H") op.kind = GateKind::Hadamard;
        else if (kind == "X") op.kind = GateKind::PauliX;
        else if (kind == "Z") op.kind = GateKind::PauliZ;
        else if (kind == "PHASE") op.kind = GateKind::Phase;
        else if (kind == "PROT") op.kind = GateKind::PhaseRotation;
        else if (kind == "SWAP") op.kind = GateKind::Swap;
        else throw ValidationError("unknown gate kind '" + kind + "'");
        op.targets = read_list(strip(targets, "targets="));
        op.controls = read_list(strip(controls, "controls="));
        op.anti_controls = read_list(strip(anti, "anti="));
        op.angle = std::stod(std::string(strip(angle, "angle=")));
        circuit.add(std::move(op));
    }
    return circuit;
}

}  // namespace qssr
