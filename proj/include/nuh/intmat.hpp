#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "nuh/rational.hpp"

namespace nuh {

enum class Spectrum { HasPm1Eigenvalue, Hyperbolic, Complex };

// 2x2 integer matrix acting on T^2 = R^2/Z^2, with its elementary divisors
// tau1 = gcd of the entries and tau2 = |det|/tau1 (so tau1*tau2 = |det| = degree).
struct IntegerMatrix2 {
    std::int64_t e11, e12, e21, e22;

    IntegerMatrix2(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d);

    std::int64_t det() const { return e11 * e22 - e12 * e21; }
    std::int64_t degree() const { return det() < 0 ? -det() : det(); }
    std::int64_t tau1() const;
    std::int64_t tau2() const { return degree() / tau1(); }
    std::int64_t trace() const { return e11 + e22; }

    bool is_homothety() const { return e12 == 0 && e21 == 0 && e11 == e22; }
    Spectrum spectrum() const;

    // largest |eigenvalue|; for complex spectrum this is sqrt(|det|)
    double spectral_radius() const;

    std::array<double, 2> apply(double x, double y) const {
        return {double(e11) * x + double(e12) * y, double(e21) * x + double(e22) * y};
    }
    std::array<Rational, 2> apply(const Rational& x, const Rational& y) const {
        return {Rational(e11) * x + Rational(e12) * y, Rational(e21) * x + Rational(e22) * y};
    }

    // E^{-1} v over R^2 (exact)
    std::array<Rational, 2> solve(const Rational& x, const Rational& y) const;
    std::array<double, 2> solve(double x, double y) const;

    std::string str() const;
};

// classification string as reported by the CLI, e.g. "non_homothety,hyperbolic_spectrum"
std::string classify_matrix(const IntegerMatrix2& E);

// Admissibility gate for the certification pipeline: det != 0 (enforced at
// construction), non-homothety, e12 != 0.
bool admissible_for_certification(const IntegerMatrix2& E, std::string* reason = nullptr);

struct ElementaryDivisors {
    std::int64_t tau1, tau2, degree;
};

// Rejects singular matrices; homothety rejection is a separate gate so that the
// raw divisors stay inspectable.
ElementaryDivisors elementary_divisors(const IntegerMatrix2& E);

} // namespace nuh
