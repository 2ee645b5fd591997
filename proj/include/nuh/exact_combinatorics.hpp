#pragma once

#include <cstdint>
#include <string>

#include "nuh/certificate.hpp"
#include "nuh/rational.hpp"

namespace nuh {

// Counting floors for depth-3 pullback vectors landing in the vertical cone:
// v1 for a vertical start vector, v2 for a horizontal one. The tau2-only parts;
// the full floors scale by tau1^3.
struct CountingFloors {
    BigInt v1, v2;          // tau2-only values
    BigInt v1_d, v2_d;      // tau1^3-scaled
};

CountingFloors counting_floors(std::int64_t tau1, std::int64_t tau2);

// p(tau2) = v2 / (tau2^3 - (v1 - v2)), the asymptotic vertical-vector ratio.
Rational ratio_p(std::int64_t tau2);

// All closed-form quantities of the depth-3 averaging argument for one (tau1,tau2).
struct CombinatoricsTable {
    std::int64_t tau1, tau2, d;
    BigInt v1, v2;                       // tau2-only counting floors
    BigInt vv_d, vh_d, vv_d2, vh_d2;     // one- and two-step vertical/horizontal counts
    Rational c1, c2;                     // per-step log t coefficients
    Rational c, e;                       // recurrence a_{n+1} >= c a_n + e
    Rational p;                          // = e/(1-c)
    Rational I1, I2;                     // depth-3 coefficients per cone class
    Rational E1, E2, E3;                 // expansion terms of J
    Rational S;                          // = E1+E2+E3+3c2
    Rational J;                          // = p I1 + (1-p) I2 = S - (c2 + 1/tau2)/d^2
};

CombinatoricsTable coefficient_table(std::int64_t tau1, std::int64_t tau2);

// Exact scan of p(tau2) > 1/2 for 3 <= tau2 <= tau2_max and p(tau2) > 2/3 for
// 5 <= tau2 <= tau2_max.
Certificate certify_p_bounds(std::int64_t tau2_max);

// Exact scan of S(tau2) > 0 and J(tau2) > 0 (at tau1 = 1; J only grows with tau1)
// for 3 <= tau2 <= tau2_max. Direct evaluation over the finite range.
Certificate certify_J_positive(std::int64_t tau2_max);

// The degree threshold of the stable-ergodicity argument plus the t-power
// constants of the section-3 regime, recorded symbolically as exponents of t.
struct TheoremBThresholds {
    Rational lhs;            // (floor((m-1)/2) - 1) / (floor((m-1)/2) + 1)
    Rational rhs;            // 1 - delta0
    bool qualifies;          // lhs > rhs
    BigInt T;                // floor((1+7 delta0)/(28 delta0))
    double delta_exponent = -0.3;   // delta(t)   = 2 t^{-3/10}
    double r_exponent = -7.0;       // r(t)       =   t^{-7}
    double theta1_exponent = -0.4;  // theta1(t)  =   t^{-2/5}
    double theta2_exponent = -0.6;  // theta2(t)  =   t^{-3/5}
};

TheoremBThresholds theoremB_thresholds(std::int64_t m, const Rational& delta0);

// CSV table (tau2, v1, v2, p, c, e, I1, I2, S, J, ...) with exact "num/den" cells.
std::string combinatorics_csv(std::int64_t tau2_max);

} // namespace nuh
