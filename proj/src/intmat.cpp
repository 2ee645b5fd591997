#include "nuh/intmat.hpp"

#include <cmath>
#include <stdexcept>

namespace nuh {

IntegerMatrix2::IntegerMatrix2(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d)
    : e11(a), e12(b), e21(c), e22(d) {
    if (det() == 0) throw std::invalid_argument("singular integer matrix: " + str());
}

std::int64_t IntegerMatrix2::tau1() const {
    std::int64_t g = gcd_i64(gcd_i64(e11, e12), gcd_i64(e21, e22));
    return g == 0 ? 1 : g;
}

Spectrum IntegerMatrix2::spectrum() const {
    // char poly: x^2 - tr x + det; eigenvalue +1 iff 1 - tr + det = 0, -1 iff 1 + tr + det = 0
    std::int64_t tr = trace(), de = det();
    if (1 - tr + de == 0 || 1 + tr + de == 0) return Spectrum::HasPm1Eigenvalue;
    std::int64_t disc = tr * tr - 4 * de;
    return disc < 0 ? Spectrum::Complex : Spectrum::Hyperbolic;
}

double IntegerMatrix2::spectral_radius() const {
    double tr = double(trace()), de = double(det());
    double disc = tr * tr - 4.0 * de;
    if (disc < 0) return std::sqrt(std::abs(de));
    double s = std::sqrt(disc);
    return std::max(std::abs((tr + s) / 2), std::abs((tr - s) / 2));
}

std::array<Rational, 2> IntegerMatrix2::solve(const Rational& x, const Rational& y) const {
    Rational de(det());
    return {(Rational(e22) * x - Rational(e12) * y) / de,
            (Rational(e11) * y - Rational(e21) * x) / de};
}

std::array<double, 2> IntegerMatrix2::solve(double x, double y) const {
    double de = double(det());
    return {(double(e22) * x - double(e12) * y) / de,
            (double(e11) * y - double(e21) * x) / de};
}

std::string IntegerMatrix2::str() const {
    return "[[" + std::to_string(e11) + "," + std::to_string(e12) + "],[" + std::to_string(e21) +
           "," + std::to_string(e22) + "]]";
}

std::string classify_matrix(const IntegerMatrix2& E) {
    std::string s = E.is_homothety() ? "homothety" : "non_homothety";
    switch (E.spectrum()) {
        case Spectrum::HasPm1Eigenvalue: s += ",has_pm1_eigenvalue"; break;
        case Spectrum::Hyperbolic: s += ",hyperbolic_spectrum"; break;
        case Spectrum::Complex: s += ",complex_spectrum"; break;
    }
    return s;
}

bool admissible_for_certification(const IntegerMatrix2& E, std::string* reason) {
    if (E.is_homothety()) {
        if (reason) *reason = "homothety";
        return false;
    }
    if (E.e12 == 0) {
        // the strip machinery needs (0,1) to be a non-eigenvector; with e12 = 0 it is one
        if (reason) *reason = "e12_zero";
        return false;
    }
    return true;
}

ElementaryDivisors elementary_divisors(const IntegerMatrix2& E) {
    return {E.tau1(), E.tau2(), E.degree()};
}

} // namespace nuh
