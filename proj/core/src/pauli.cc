// Copyright 2026 The condham Authors
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

#include "condham/pauli.h"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace condham {

int cyclic_label(PauliAxis axis) {
    if (axis == PauliAxis::I) {
        throw std::invalid_argument("identity has no cyclic axis label");
    }
    return static_cast<int>(axis) - 1;
}

PauliAxis axis_from_label(int label) {
    int reduced = ((label % 3) + 3) % 3;
    return static_cast<PauliAxis>(reduced + 1);
}

PauliAxis successor(PauliAxis axis) {
    return axis_from_label(cyclic_label(axis) + 1);
}

char axis_char(PauliAxis axis) {
    return "IXYZ"[static_cast<int>(axis)];
}

PauliAxis parse_axis(char c) {
    switch (c) {
        case 'I':
        case 'i':
        case '1':
            return PauliAxis::I;
        case 'X':
        case 'x':
            return PauliAxis::X;
        case 'Y':
        case 'y':
            return PauliAxis::Y;
        case 'Z':
        case 'z':
            return PauliAxis::Z;
        default:
            throw std::invalid_argument(std::string("unknown Pauli axis '") + c + "'");
    }
}

const DenseOperator &pauli_matrix(PauliAxis axis) {
    static const std::array<DenseOperator, 4> table = {
        DenseOperator::identity(2),
        DenseOperator::from_rows({{0, 1}, {1, 0}}),
        DenseOperator::from_rows({{0, Complex(0, -1)}, {Complex(0, 1), 0}}),
        DenseOperator::from_rows({{1, 0}, {0, -1}}),
    };
    return table[static_cast<int>(axis)];
}

PauliString::PauliString(size_t num_qubits) : axes_(num_qubits, PauliAxis::I) {
}

PauliString PauliString::single(size_t num_qubits, size_t qubit, PauliAxis axis) {
    return PauliString(num_qubits).with(qubit, axis);
}

PauliString PauliString::pair(size_t num_qubits, size_t q1, PauliAxis a1, size_t q2, PauliAxis a2) {
    if (q1 == q2) {
        throw std::invalid_argument("PauliString::pair: qubits must differ");
    }
    return PauliString(num_qubits).with(q1, a1).with(q2, a2);
}

PauliString PauliString::parse(std::string_view text, size_t num_qubits) {
    PauliString result(num_qubits);
    if (text == "I" || text.empty()) {
        return result;
    }
    size_t pos = 0;
    while (pos < text.size()) {
        size_t end = text.find('.', pos);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        std::string_view token = text.substr(pos, end - pos);
        if (token.size() < 2) {
            throw std::invalid_argument("malformed Pauli token '" + std::string(token) + "'");
        }
        PauliAxis axis = parse_axis(token[0]);
        size_t qubit = 0;
        auto [ptr, ec] = std::from_chars(token.data() + 1, token.data() + token.size(), qubit);
        if (ec != std::errc() || ptr != token.data() + token.size()) {
            throw std::invalid_argument("malformed Pauli token '" + std::string(token) + "'");
        }
        result.with(qubit, axis);
        pos = end + 1;
    }
    return result;
}

PauliAxis PauliString::axis(size_t qubit) const {
    if (qubit >= axes_.size()) {
        throw std::out_of_range("PauliString: qubit index out of range");
    }
    return axes_[qubit];
}

PauliString &PauliString::with(size_t qubit, PauliAxis axis) {
    if (qubit >= axes_.size()) {
        throw std::invalid_argument("PauliString: qubit " + std::to_string(qubit) +
                                    " out of range for " + std::to_string(axes_.size()) + " qubits");
    }
    if (axes_[qubit] != PauliAxis::I && axis != PauliAxis::I) {
        throw std::invalid_argument("PauliString: qubit " + std::to_string(qubit) +
                                    " already carries an axis");
    }
    axes_[qubit] = axis;
    return *this;
}

size_t PauliString::weight() const {
    size_t w = 0;
    for (auto a : axes_) {
        w += a != PauliAxis::I;
    }
    return w;
}

bool PauliString::commutes_with(const PauliString &other) const {
    size_t n = std::min(axes_.size(), other.axes_.size());
    size_t anti = 0;
    for (size_t q = 0; q < n; q++) {
        PauliAxis a = axes_[q];
        PauliAxis b = other.axes_[q];
        anti += a != PauliAxis::I && b != PauliAxis::I && a != b;
    }
    return anti % 2 == 0;
}

PauliString PauliString::times_ignoring_phase(const PauliString &other) const {
    if (other.axes_.size() != axes_.size()) {
        throw std::invalid_argument("PauliString product: qubit count mismatch");
    }
    PauliString result(axes_.size());
    // Symplectic (x, z) bits: I=00, X=10, Y=11, Z=01. The product XORs them.
    constexpr int encode[4] = {0b00, 0b10, 0b11, 0b01};
    constexpr PauliAxis decode[4] = {PauliAxis::I, PauliAxis::Z, PauliAxis::X, PauliAxis::Y};
    for (size_t q = 0; q < axes_.size(); q++) {
        int bits = encode[static_cast<int>(axes_[q])] ^ encode[static_cast<int>(other.axes_[q])];
        result.axes_[q] = decode[bits];
    }
    return result;
}

std::string PauliString::str() const {
    std::string out;
    for (size_t q = 0; q < axes_.size(); q++) {
        if (axes_[q] == PauliAxis::I) {
            continue;
        }
        if (!out.empty()) {
            out += '.';
        }
        out += axis_char(axes_[q]);
        out += std::to_string(q);
    }
    return out.empty() ? "I" : out;
}

DenseOperator embed(const PauliString &p, size_t n) {
    for (size_t q = n; q < p.num_qubits(); q++) {
        if (p.axis(q) != PauliAxis::I) {
            throw std::invalid_argument("embed: Pauli string touches qubit " + std::to_string(q) +
                                        " outside a " + std::to_string(n) + "-qubit register");
        }
    }
    size_t dim = size_t{1} << n;
    // A Pauli string maps |col> to phase * |col ^ flip_mask>.
    size_t flip_mask = 0;
    for (size_t q = 0; q < std::min(n, p.num_qubits()); q++) {
        PauliAxis a = p.axis(q);
        if (a == PauliAxis::X || a == PauliAxis::Y) {
            flip_mask |= size_t{1} << (n - 1 - q);
        }
    }
    DenseOperator result(dim);
    for (size_t col = 0; col < dim; col++) {
        Complex phase = 1;
        for (size_t q = 0; q < std::min(n, p.num_qubits()); q++) {
            bool bit = (col >> (n - 1 - q)) & 1;
            switch (p.axis(q)) {
                case PauliAxis::Z:
                    if (bit) {
                        phase = -phase;
                    }
                    break;
                case PauliAxis::Y:
                    // Y|0> = i|1>, Y|1> = -i|0>
                    phase *= bit ? Complex(0, -1) : Complex(0, 1);
                    break;
                default:
                    break;
            }
        }
        result(col ^ flip_mask, col) = phase;
    }
    return result;
}

}  // namespace condham
