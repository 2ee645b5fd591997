#pragma once

#include <vector>

#include "nuh/certificate.hpp"
#include "nuh/intmat.hpp"
#include "nuh/rational.hpp"

namespace nuh {

// The degree-many cosets E^{-1}Z^2/Z^2 as exact rationals in [0,1)^2.
// x_spacing_regular records whether the offsets fall into tau2 equally spaced
// x-columns (at i/tau2) holding tau1 points each; the strip arguments of the
// certification pipeline require this.
struct PreimageLattice {
    std::vector<std::array<Rational, 2>> offsets;  // sorted lexicographically
    bool x_spacing_regular = false;
};

PreimageLattice preimage_lattice(const IntegerMatrix2& E);

// Checks E^{-1} Delta_alpha^v subset Int(Delta_alpha^h) exactly on ray slopes.
// Pre: non-homothety, e12 != 0, alpha > 1.
Certificate admissible_alpha(const IntegerMatrix2& E, const Rational& alpha);

// Smallest admissible alpha by bisection on exact per-candidate checks.
// Returns an alpha within `tol` above the infimum.
Rational min_admissible_alpha(const IntegerMatrix2& E, double tol = 1e-9);

struct ConeConstants {
    Rational alpha;
    Rational e_v_exact, e_h_exact;  // inf of ||E^{-1}u||_max over unit-max-norm u per cone
    double e_v, e_h;
};

// Exact candidate enumeration on the unit-square boundary clipped to each cone:
// the objective is max of two |affine| functions per segment, so the minimum is
// attained at segment endpoints, zeros, or equalization points.
ConeConstants cone_norm_constants(const IntegerMatrix2& E, const Rational& alpha);

} // namespace nuh
