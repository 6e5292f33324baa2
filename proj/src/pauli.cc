// Copyright 2026 surfmatch contributors
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

#include "surfmatch/pauli.h"

#include <stdexcept>
#include <string>

namespace surfmatch {

Mat2 PauliDecomposition::reconstruct() const {
    // I, X, XZ = [[0,-1],[1,0]], Z entrywise.
    return Mat2{
        c_i + c_z,
        c_x - c_xz,
        c_x + c_xz,
        c_i - c_z,
    };
}

PauliDecomposition decompose_error(const Mat2& e) {
    const std::complex<double> a = e[0], b = e[1], c = e[2], d = e[3];
    return PauliDecomposition{
        (a + d) / 2.0,
        (b + c) / 2.0,
        (-b + c) / 2.0,
        (a - d) / 2.0,
    };
}

size_t PauliFrame::check(QubitId q) const {
    if (q < 0 || static_cast<size_t>(q) >= x_bits_.size()) {
        throw std::invalid_argument("qubit id " + std::to_string(q) +
                                    " out of range for frame of " +
                                    std::to_string(x_bits_.size()) + " qubits");
    }
    return static_cast<size_t>(q);
}

PauliFrame& PauliFrame::operator^=(const PauliFrame& other) {
    if (other.num_qubits() != num_qubits()) {
        throw std::invalid_argument("frame size mismatch in composition");
    }
    for (size_t i = 0; i < x_bits_.size(); ++i) {
        x_bits_[i] ^= other.x_bits_[i];
        z_bits_[i] ^= other.z_bits_[i];
    }
    return *this;
}

PauliFrame propagate_cx(const PauliFrame& frame, QubitId control, QubitId target) {
    if (control == target) {
        throw std::invalid_argument("cx control equals target");
    }
    PauliFrame out = frame;
    out.apply_cx(control, target);
    return out;
}

PauliFrame propagate_h(const PauliFrame& frame, QubitId qubit) {
    PauliFrame out = frame;
    out.apply_h(qubit);
    return out;
}

}  // namespace surfmatch
