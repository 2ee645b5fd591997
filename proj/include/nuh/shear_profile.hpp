#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nuh/certificate.hpp"
#include "nuh/rational.hpp"

namespace nuh {

enum class Region { Critical, GoodMinus, GoodPlus };

// Circle function s driving the shear h_t(x,y) = (x, y + t s(x)).
//
// s is defined through its derivative: constant slope per partition interval,
// alternating sign (negative on even intervals), with a cubic-smoothstep ramp of
// half-width `smooth` at each critical point so that s is C^2 and s'(x_j) = 0.
// One sign class is rescaled by a single scalar so that s' integrates to zero
// over the period; strict per-junction magnitude doubling cannot survive that
// balance, so the construction guarantees the two-step ladder
// |slope[j+2]| >= 2|slope[j]| instead (which is what the slope-separation
// arguments actually consume).
struct ShearProfile {
    std::int64_t n_intervals = 0;          // tau2 + 1 for the main family
    std::int64_t tau2 = 0;                 // partition parameter
    std::vector<Rational> critical_xs;     // j / n_intervals
    std::vector<double> slopes;            // per interval, balanced
    double delta = 0;                      // critical-window half-width
    double smooth = 0;                     // smoothing half-width, <= delta
    Rational s0;                           // s(0)
    double a = 0, b = 0;                   // min/max |slope|

    // cached for evaluation
    std::vector<double> crit_x;            // doubles of critical_xs, plus 1.0
    std::vector<double> s_at_crit;         // s(x_j), s_at_crit[n] ~ s0 (periodicity)

    double eval_s(double x) const;
    double eval_s_prime(double x) const;
    double eval_s_second(double x) const;

    // tight enclosure of s over [lo,hi] (0 <= lo <= hi <= 1): s is monotone
    // between consecutive critical points
    void s_range(double lo, double hi, double& smin, double& smax) const;

    Region classify(double x) const;
    bool in_critical(double x) const { return classify(x) == Region::Critical; }
    bool in_inner_critical(double x, double shrink = 0.5) const;  // window half-width shrink*delta
    double dist_to_critical(double x) const;

    std::string to_json() const;
    static ShearProfile from_json(const std::string& json);
};

// Default critical-window half-width: the size inequality needs
// delta < 1/(4(tau2+1)); keeping two preimage x-columns out of one window
// additionally needs delta < 1/(2 tau2 (tau2+1)).
double default_delta(std::int64_t tau2);

// Main-family construction. Raw magnitudes a0*kappa^j with alternating signs;
// retries with larger kappa (up to max_retries) if the two-step ladder fails
// after rebalancing.
ShearProfile build_profile(std::int64_t tau2, double a0, double kappa, double delta,
                           const Rational& s0, int max_retries = 8);

// Two-critical-point profile for the section-3 family: critical points {0, 1/2},
// slopes -sigma/+sigma with sigma = 0.6 t^{-3/10}, delta = 2 t^{-3/10}, and
// smoothing confined to the inner half of the window.
ShearProfile section3_profile(double t, const Rational& s0 = Rational(1, 2));

struct RegionDecomposition {
    // x-intervals as [lo, hi] pairs; the y factor is all of T^1
    std::vector<std::pair<Rational, Rational>> critical, good_minus, good_plus, inner_critical;
};

RegionDecomposition regions(const ShearProfile& p);

struct SlopeBoundsReport {
    double a, b;
    double min_abs_good, max_abs_good;   // sampled over the good region
    double max_abs_all;                  // sampled everywhere
    Certificate cert;
};

// Verifies |s'| <= b everywhere and |s'| >= a on the good region by dense
// sampling (10^4 points per interval).
SlopeBoundsReport slope_bounds_report(const ShearProfile& p);

} // namespace nuh
