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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>

#include "surfmatch/pauli.h"
#include "surfmatch/rng.h"

using namespace surfmatch;

namespace {

double max_entry_error(const Mat2& a, const Mat2& b) {
    double m = 0;
    for (int i = 0; i < 4; ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

}  // namespace

TEST_CASE("identity decomposes to pure I") {
    auto d = decompose_error(Mat2{1, 0, 0, 1});
    CHECK(d.c_i == std::complex<double>(1));
    CHECK(d.c_x == std::complex<double>(0));
    CHECK(d.c_xz == std::complex<double>(0));
    CHECK(d.c_z == std::complex<double>(0));
}

TEST_CASE("X decomposes to pure X") {
    auto d = decompose_error(Mat2{0, 1, 1, 0});
    CHECK(d.c_i == std::complex<double>(0));
    CHECK(d.c_x == std::complex<double>(1));
    CHECK(d.c_xz == std::complex<double>(0));
    CHECK(d.c_z == std::complex<double>(0));
}

TEST_CASE("Hadamard is (X+Z)/sqrt2") {
    const double s = 1.0 / std::sqrt(2.0);
    auto d = decompose_error(Mat2{s, s, s, -s});
    CHECK(std::abs(d.c_i) == doctest::Approx(0));
    CHECK(std::abs(d.c_x - s) == doctest::Approx(0));
    CHECK(std::abs(d.c_xz) == doctest::Approx(0));
    CHECK(std::abs(d.c_z - s) == doctest::Approx(0));
}

TEST_CASE("random matrices reconstruct to 1e-12") {
    uint64_t seed = 0x5caff01d;
    auto rnd = [&](uint64_t c) {
        return 2.0 * rng::unit_double(rng::at(seed, c)) - 1.0;
    };
    for (int trial = 0; trial < 1000; ++trial) {
        Mat2 e;
        for (int i = 0; i < 4; ++i) {
            uint64_t c = static_cast<uint64_t>(trial) * 8 + 2 * i;
            e[i] = std::complex<double>(rnd(c), rnd(c + 1));
        }
        auto d = decompose_error(e);
        CHECK(max_entry_error(e, d.reconstruct()) <= 1e-12);
    }
}

TEST_CASE("cx copies X from control to target") {
    PauliFrame f(4);
    f.flip_x(1);
    PauliFrame g = propagate_cx(f, 1, 2);
    CHECK(g.x(1));
    CHECK(g.x(2));
    CHECK_FALSE(g.z(1));
    CHECK_FALSE(g.z(2));
}

TEST_CASE("cx copies Z from target to control") {
    PauliFrame f(4);
    f.flip_z(2);
    PauliFrame g = propagate_cx(f, 1, 2);
    CHECK(g.z(1));
    CHECK(g.z(2));
    CHECK_FALSE(g.x(1));
    CHECK_FALSE(g.x(2));
}

TEST_CASE("cx on an empty frame does nothing") {
    PauliFrame f(3);
    CHECK(propagate_cx(f, 0, 1) == f);
}

TEST_CASE("h exchanges X and Z; Y stays Y") {
    PauliFrame f(2);
    f.flip_x(0);
    PauliFrame g = propagate_h(f, 0);
    CHECK_FALSE(g.x(0));
    CHECK(g.z(0));

    PauliFrame y(2);
    y.flip_x(1);
    y.flip_z(1);
    CHECK(propagate_h(y, 1) == y);

    PauliFrame empty(2);
    CHECK(propagate_h(empty, 0) == empty);
}

TEST_CASE("h twice is the identity on random frames") {
    uint64_t seed = 77;
    for (int trial = 0; trial < 50; ++trial) {
        PauliFrame f(8);
        for (QubitId q = 0; q < 8; ++q) {
            uint64_t bits = rng::at(seed, trial * 8 + q);
            if (bits & 1) f.flip_x(q);
            if (bits & 2) f.flip_z(q);
        }
        CHECK(propagate_h(propagate_h(f, 3), 3) == f);
    }
}

TEST_CASE("cx propagation is linear over frame composition") {
    uint64_t seed = 1234;
    for (int trial = 0; trial < 200; ++trial) {
        PauliFrame f1(6), f2(6);
        for (QubitId q = 0; q < 6; ++q) {
            uint64_t bits = rng::at(seed, trial * 16 + q);
            if (bits & 1) f1.flip_x(q);
            if (bits & 2) f1.flip_z(q);
            if (bits & 4) f2.flip_x(q);
            if (bits & 8) f2.flip_z(q);
        }
        PauliFrame sum = f1;
        sum ^= f2;
        PauliFrame lhs = propagate_cx(f1, 2, 3);
        lhs ^= propagate_cx(f2, 2, 3);
        CHECK(lhs == propagate_cx(sum, 2, 3));
    }
}

TEST_CASE("invalid qubit ids are rejected") {
    PauliFrame f(3);
    CHECK_THROWS_AS((void)propagate_h(f, 3), std::invalid_argument);
    CHECK_THROWS_AS((void)propagate_h(f, -1), std::invalid_argument);
    CHECK_THROWS_AS((void)propagate_cx(f, 0, 5), std::invalid_argument);
    CHECK_THROWS_AS((void)propagate_cx(f, 1, 1), std::invalid_argument);
}
