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

#include "surfmatch/bounds.h"

#include <sstream>

namespace surfmatch {

BigInt binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (int i = 0; i < k; ++i) {
        r *= n - i;
        r /= i + 1;
    }
    return r;
}

namespace {

Rational pow_rational(const Rational& base, int e) {
    Rational r = 1;
    for (int i = 0; i < e; ++i) r *= base;
    return r;
}

void check_eps_range(const Rational& eps) {
    if (eps < 0 || eps > 1) {
        throw std::invalid_argument("epsilon must lie in [0, 1]");
    }
}

}  // namespace

Rational path_failure_exact(int m, const Rational& eps) {
    if (m < 1) throw std::invalid_argument("m must be >= 1");
    check_eps_range(eps);
    const int half = (m + 1) / 2;
    Rational sum = 0;
    Rational eps_pow = pow_rational(eps, half);
    for (int i = half; i <= m; ++i) {
        sum += Rational(binomial(m, i)) * eps_pow;
        eps_pow *= eps;
    }
    return sum;
}

Rational path_failure_bound(int m, const Rational& eps) {
    if (m < 1) throw std::invalid_argument("m must be >= 1");
    if (eps < 0 || eps > Rational(1, 2)) {
        throw std::invalid_argument("epsilon must lie in [0, 1/2]");
    }
    BigInt two_m = BigInt(1) << m;
    return Rational(two_m) * pow_rational(eps, (m + 1) / 2);
}

BigInt path_count_bound(int n, int m) {
    if (n < 1 || m < 1) throw std::invalid_argument("n and m must be >= 1");
    BigInt count = 3 * BigInt(n) * n;
    for (int i = 1; i < m; ++i) count *= 11;
    return count;
}

BigFloat logical_error_bound(int n, const Rational& eps) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    check_eps_range(eps);
    if (484 * eps >= 1) {
        throw DivergenceError(
            "geometric series diverges: epsilon >= 1/484 (critical value)");
    }
    if (eps == 0) return BigFloat(0);
    BigFloat ratio = 22 * sqrt(static_cast<BigFloat>(eps));
    BigFloat front = BigFloat(3) * n * n / 11;
    return front * pow(ratio, n + 1) / (1 - ratio);
}

Rational threshold_from_linear_coefficient(const Rational& coeff) {
    if (coeff <= 0) throw std::invalid_argument("coefficient must be positive");
    return 1 / (484 * coeff);
}

Rational rational_from_double(double x) {
    return static_cast<Rational>(x);
}

BoundReport make_bound_report(int n, int m, const Rational& eps,
                              const Rational& linear_coeff) {
    BoundReport r;
    r.n = n;
    r.m = m;
    r.epsilon = eps;
    r.path_failure_exact_v = path_failure_exact(m, eps);
    r.bound_valid = eps <= Rational(1, 2);
    if (r.bound_valid) r.path_failure_bound_v = path_failure_bound(m, eps);
    r.path_count = path_count_bound(n, m);
    r.critical_epsilon = DivergenceError::critical_epsilon();
    try {
        r.logical_bound = logical_error_bound(n, eps);
        r.diverges = false;
    } catch (const DivergenceError&) {
        r.diverges = true;
    }
    r.linear_coeff = linear_coeff;
    r.threshold_p = threshold_from_linear_coefficient(linear_coeff);
    return r;
}

std::string big_float_str(const BigFloat& x) {
    return x.str(12, std::ios_base::scientific);
}

std::string bound_reports_csv(const std::vector<BoundReport>& reports) {
    std::ostringstream os;
    os << "# critical epsilon = 1/484 = "
       << big_float_str(static_cast<BigFloat>(Rational(1, 484))) << "\n";
    if (!reports.empty()) {
        const auto& r = reports.front();
        os << "# linear coefficient eps = " << r.linear_coeff
           << " * p gives threshold p = " << r.threshold_p << " = "
           << big_float_str(static_cast<BigFloat>(r.threshold_p)) << "\n";
    }
    os << "n,epsilon,eq12_bound\n";
    for (const auto& r : reports) {
        os << r.n << ',' << big_float_str(static_cast<BigFloat>(r.epsilon)) << ',';
        if (r.diverges) {
            os << "divergent";
        } else {
            os << big_float_str(r.logical_bound);
        }
        os << "\n";
    }
    return os.str();
}

}  // namespace surfmatch
