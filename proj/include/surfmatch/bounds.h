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

#ifndef SURFMATCH_BOUNDS_H
#define SURFMATCH_BOUNDS_H

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>
#include <vector>

namespace surfmatch {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using BigFloat = boost::multiprecision::cpp_bin_float_100;

// The logical-error bound is a geometric series in 22*sqrt(eps); it only
// converges for eps below the critical line probability 1/484.
class DivergenceError : public std::domain_error {
  public:
    explicit DivergenceError(const std::string& msg) : std::domain_error(msg) {}
    static Rational critical_epsilon() { return Rational(1, 484); }
};

BigInt binomial(int n, int k);

// Probability that at least ceil(m/2) of a length-m path's lines carry
// errors, as the literal sum  sum_{i=ceil(m/2)}^{m} C(m,i) eps^i. The sum
// omits the (1-eps) complement factors, so it is itself an upper bound on
// the binomial tail.
Rational path_failure_exact(int m, const Rational& eps);

// The closed-form relaxation 2^m * eps^ceil(m/2). Dominates
// path_failure_exact for eps <= 1/2, which is where the inequality chain
// (replacing C(m,ceil(m/2))/(1-eps) by the full binomial sum) is valid;
// larger eps is rejected.
Rational path_failure_bound(int m, const Rational& eps);

// At most 3 n^2 11^(m-1) length-m paths cross an n^3 volume whose dots
// have at most 12 neighbors: 3n^2 starting points and, excluding
// backtracking, at most 11 continuations per step.
BigInt path_count_bound(int n, int m);

// (3n^2/11) (22 sqrt(eps))^(n+1) / (1 - 22 sqrt(eps)); throws
// DivergenceError when 22 sqrt(eps) >= 1, i.e. exactly at eps >= 1/484.
BigFloat logical_error_bound(int n, const Rational& eps);

// The gate error rate at which a line with probability coeff * p reaches
// the critical 1/484: p_th = 1/(484 * coeff).
Rational threshold_from_linear_coefficient(const Rational& coeff);

// Exact rational from a double (binary expansion, no decimal rounding).
Rational rational_from_double(double x);

struct BoundReport {
    int n = 0;
    int m = 0;
    Rational epsilon;
    Rational path_failure_exact_v;
    bool bound_valid = false;  // eps <= 1/2
    Rational path_failure_bound_v;
    BigInt path_count;
    bool diverges = false;
    BigFloat logical_bound;  // meaningful when !diverges
    Rational critical_epsilon;
    Rational linear_coeff;
    Rational threshold_p;
};

BoundReport make_bound_report(int n, int m, const Rational& eps,
                              const Rational& linear_coeff);

// One `n,epsilon,eq12_bound` row per report, with the critical epsilon and
// threshold in header comments.
std::string bound_reports_csv(const std::vector<BoundReport>& reports);

std::string big_float_str(const BigFloat& x);  // fixed 12-digit scientific

}  // namespace surfmatch

#endif
