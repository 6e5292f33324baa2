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

#ifndef SURFMATCH_PAULI_H
#define SURFMATCH_PAULI_H

#include <array>
#include <complex>
#include <cstdint>
#include <vector>

namespace surfmatch {

using QubitId = int32_t;

// Row-major 2x2 complex matrix: {m00, m01, m10, m11}.
using Mat2 = std::array<std::complex<double>, 4>;

/// Coefficients of an arbitrary 2x2 operator in the {I, X, XZ, Z} basis.
/// Any single-qubit error is a linear superposition of no error, a bit
/// flip, a phase flip, or both; syndrome measurement projects onto one of
/// those four, which is why tracking X/Z bits suffices downstream.
struct PauliDecomposition {
    std::complex<double> c_i;
    std::complex<double> c_x;
    std::complex<double> c_xz;
    std::complex<double> c_z;

    Mat2 reconstruct() const;
};

PauliDecomposition decompose_error(const Mat2& e);

/// Classical record of accumulated X/Z error content per qubit. A qubit
/// with both bits set carries a Y-type error; global phase is discarded
/// everywhere. Frames compose by bitwise XOR.
class PauliFrame {
  public:
    PauliFrame() = default;
    explicit PauliFrame(size_t num_qubits)
        : x_bits_(num_qubits, 0), z_bits_(num_qubits, 0) {}

    size_t num_qubits() const { return x_bits_.size(); }

    bool x(QubitId q) const { return x_bits_[check(q)]; }
    bool z(QubitId q) const { return z_bits_[check(q)]; }
    void flip_x(QubitId q) { x_bits_[check(q)] ^= 1; }
    void flip_z(QubitId q) { z_bits_[check(q)] ^= 1; }

    void clear(QubitId q) {
        size_t i = check(q);
        x_bits_[i] = 0;
        z_bits_[i] = 0;
    }

    // In-place Clifford conjugation, used by the hot simulation path.
    void apply_h(QubitId q) {
        size_t i = check(q);
        std::swap(x_bits_[i], z_bits_[i]);
    }
    void apply_cx(QubitId control, QubitId target) {
        size_t c = check(control), t = check(target);
        x_bits_[t] ^= x_bits_[c];
        z_bits_[c] ^= z_bits_[t];
    }

    PauliFrame& operator^=(const PauliFrame& other);
    bool operator==(const PauliFrame& other) const = default;

  private:
    size_t check(QubitId q) const;

    std::vector<uint8_t> x_bits_;
    std::vector<uint8_t> z_bits_;
};

// Value-semantics propagation through the two Clifford gates the
// measurement circuits use. CX copies X errors control->target and Z
// errors target->control; H exchanges the X and Z content of one qubit.
PauliFrame propagate_cx(const PauliFrame& frame, QubitId control, QubitId target);
PauliFrame propagate_h(const PauliFrame& frame, QubitId qubit);

}  // namespace surfmatch

#endif
