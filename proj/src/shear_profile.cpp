#include "nuh/shear_profile.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "json.hpp"

namespace nuh {

namespace {

inline double smoothstep(double u) { return u * u * (3.0 - 2.0 * u); }          // q
inline double smoothstep_d(double u) { return 6.0 * u * (1.0 - u); }            // q'
inline double smoothstep_int(double u) { return u * u * u * (1.0 - u / 2.0); }  // int_0^u q

inline double wrap01(double x) {
    double y = x - std::floor(x);
    return y >= 1.0 ? 0.0 : y;
}

} // namespace

double ShearProfile::eval_s_prime(double x) const {
    x = wrap01(x);
    const double L = 1.0 / double(n_intervals);
    auto j = std::int64_t(x * double(n_intervals));
    if (j >= n_intervals) j = n_intervals - 1;
    double u = x - double(j) * L;
    if (u < smooth) return slopes[j] * smoothstep(u / smooth);
    if (u > L - smooth) return slopes[j] * smoothstep((L - u) / smooth);
    return slopes[j];
}

double ShearProfile::eval_s_second(double x) const {
    x = wrap01(x);
    const double L = 1.0 / double(n_intervals);
    auto j = std::int64_t(x * double(n_intervals));
    if (j >= n_intervals) j = n_intervals - 1;
    double u = x - double(j) * L;
    if (u < smooth) return slopes[j] * smoothstep_d(u / smooth) / smooth;
    if (u > L - smooth) return -slopes[j] * smoothstep_d((L - u) / smooth) / smooth;
    return 0.0;
}

double ShearProfile::eval_s(double x) const {
    x = wrap01(x);
    const double L = 1.0 / double(n_intervals);
    auto j = std::int64_t(x * double(n_intervals));
    if (j >= n_intervals) j = n_intervals - 1;
    double u = x - double(j) * L;
    if (u < smooth) return s_at_crit[j] + slopes[j] * smooth * smoothstep_int(u / smooth);
    if (u > L - smooth) return s_at_crit[j + 1] - slopes[j] * smooth * smoothstep_int((L - u) / smooth);
    return s_at_crit[j] + slopes[j] * (u - smooth / 2.0);
}

void ShearProfile::s_range(double lo, double hi, double& smin, double& smax) const {
    // s is monotone between consecutive critical points, so extrema over [lo,hi]
    // occur at the endpoints or at interior critical points
    smin = smax = eval_s(lo);
    double v = eval_s(hi);
    smin = std::min(smin, v);
    smax = std::max(smax, v);
    auto j0 = std::int64_t(std::ceil(lo * double(n_intervals)));
    auto j1 = std::int64_t(std::floor(hi * double(n_intervals)));
    for (auto j = j0; j <= j1; ++j) {
        double sj = s_at_crit[std::min(j, n_intervals)];
        smin = std::min(smin, sj);
        smax = std::max(smax, sj);
    }
}

double ShearProfile::dist_to_critical(double x) const {
    x = wrap01(x);
    const double L = 1.0 / double(n_intervals);
    double k = std::round(x * double(n_intervals));
    return std::abs(x - k * L);
}

Region ShearProfile::classify(double x) const {
    if (dist_to_critical(x) <= delta) return Region::Critical;
    x = wrap01(x);
    auto j = std::int64_t(x * double(n_intervals));
    if (j >= n_intervals) j = n_intervals - 1;
    return (j % 2 == 0) ? Region::GoodMinus : Region::GoodPlus;
}

bool ShearProfile::in_inner_critical(double x, double shrink) const {
    return dist_to_critical(x) <= shrink * delta;
}

double default_delta(std::int64_t tau2) {
    double size_bound = 1.0 / (8.0 * double(tau2 + 1));
    double column_bound = 0.45 / (double(tau2) * double(tau2 + 1));
    return std::min(size_bound, column_bound);
}

namespace {

void finalize(ShearProfile& p) {
    const std::int64_t n = p.n_intervals;
    p.crit_x.resize(n + 1);
    for (std::int64_t j = 0; j < n; ++j) p.crit_x[j] = to_double(p.critical_xs[j]);
    p.crit_x[n] = 1.0;
    p.s_at_crit.assign(n + 1, 0.0);
    p.s_at_crit[0] = to_double(p.s0);
    const double L = 1.0 / double(n);
    for (std::int64_t j = 0; j < n; ++j)
        p.s_at_crit[j + 1] = p.s_at_crit[j] + p.slopes[j] * (L - p.smooth);
    p.a = p.b = std::abs(p.slopes[0]);
    for (double s : p.slopes) {
        p.a = std::min(p.a, std::abs(s));
        p.b = std::max(p.b, std::abs(s));
    }
}

} // namespace

ShearProfile build_profile(std::int64_t tau2, double a0, double kappa, double delta,
                           const Rational& s0, int max_retries) {
    if (tau2 < 3) throw std::invalid_argument("build_profile: tau2 must be >= 3");
    if (!(a0 > 0)) throw std::invalid_argument("build_profile: a0 must be > 0");
    if (!(kappa > 2)) throw std::invalid_argument("build_profile: kappa must be > 2");
    const std::int64_t n = tau2 + 1;
    if (!(delta > 0) || !(1.0 / double(n) - 2.0 * delta > 0.5 / double(n)))
        throw std::invalid_argument("build_profile: delta violates 1/(tau2+1) - 2 delta > 1/(2(tau2+1))");
    if (s0 <= 0 || s0 >= 1 || rat_den(s0) == 1)
        throw std::invalid_argument("build_profile: s0 must be in (0,1) and not an integer");

    for (int attempt = 0;; ++attempt) {
        std::vector<double> mag(n);
        for (std::int64_t j = 0; j < n; ++j) mag[j] = a0 * std::pow(kappa, double(j));
        double sum_even = 0, sum_odd = 0;
        for (std::int64_t j = 0; j < n; ++j) (j % 2 == 0 ? sum_even : sum_odd) += mag[j];
        // scale the deficient class up so that sum of signed slopes vanishes
        if (sum_even < sum_odd) {
            double lam = sum_odd / sum_even;
            for (std::int64_t j = 0; j < n; j += 2) mag[j] *= lam;
        } else {
            double lam = sum_even / sum_odd;
            for (std::int64_t j = 1; j < n; j += 2) mag[j] *= lam;
        }

        bool ok = true;
        for (std::int64_t j = 0; j + 2 < n; ++j) ok = ok && mag[j + 2] >= 2.0 * mag[j];
        if (!ok) {
            if (attempt >= max_retries)
                throw std::runtime_error("build_profile: two-step slope ladder failed after retries");
            kappa *= 1.25;
            continue;
        }

        ShearProfile p;
        p.n_intervals = n;
        p.tau2 = tau2;
        p.critical_xs.resize(n);
        for (std::int64_t j = 0; j < n; ++j) p.critical_xs[j] = Rational(j, n);
        p.slopes.resize(n);
        for (std::int64_t j = 0; j < n; ++j) p.slopes[j] = (j % 2 == 0) ? -mag[j] : mag[j];
        p.delta = delta;
        p.smooth = delta;
        p.s0 = s0;
        finalize(p);
        return p;
    }
}

ShearProfile section3_profile(double t, const Rational& s0) {
    double delta = 2.0 * std::pow(t, -0.3);
    if (!(delta < 0.25))
        throw std::invalid_argument("section3_profile: t too small, critical windows overlap (need t > ~1024)");
    double sigma = 0.6 * std::pow(t, -0.3);
    ShearProfile p;
    p.n_intervals = 2;
    p.tau2 = 1;
    p.critical_xs = {Rational(0), Rational(1, 2)};
    p.slopes = {-sigma, sigma};
    p.delta = delta;
    p.smooth = delta / 2.0;  // full slope reached on C \ C_delta
    p.s0 = s0;
    finalize(p);
    return p;
}

RegionDecomposition regions(const ShearProfile& p) {
    RegionDecomposition R;
    const std::int64_t n = p.n_intervals;
    // delta and smooth are double parameters; express the windows with exact
    // rational centers and a dyadic-rational radius equal to the double value
    auto dr = [](double v) { return parse_rational(std::to_string(v)); };
    Rational d = dr(p.delta), di = d / 2;
    for (std::int64_t j = 0; j < n; ++j) {
        Rational c = p.critical_xs[j];
        R.critical.emplace_back(c - d, c + d);
        R.inner_critical.emplace_back(c - di, c + di);
        Rational next = (j + 1 < n) ? p.critical_xs[j + 1] : Rational(1);
        auto& side = (j % 2 == 0) ? R.good_minus : R.good_plus;
        side.emplace_back(c + d, next - d);
    }
    return R;
}

SlopeBoundsReport slope_bounds_report(const ShearProfile& p) {
    SlopeBoundsReport r;
    r.a = p.a;
    r.b = p.b;
    r.min_abs_good = 1e300;
    r.max_abs_good = 0;
    r.max_abs_all = 0;
    const int per_interval = 10000;
    const double n = double(p.n_intervals);
    const double tol = 1e-12 * (1.0 + p.b);
    for (std::int64_t j = 0; j < p.n_intervals; ++j) {
        for (int i = 0; i < per_interval; ++i) {
            double x = (double(j) + (i + 0.5) / per_interval) / n;
            double sp = std::abs(p.eval_s_prime(x));
            r.max_abs_all = std::max(r.max_abs_all, sp);
            if (sp > p.b + tol) {
                r.cert = Certificate::refuted("slope_bounds", "|s'(" + std::to_string(x) + ")| = " +
                                                                  std::to_string(sp) + " > b");
                return r;
            }
            if (p.classify(x) != Region::Critical) {
                r.min_abs_good = std::min(r.min_abs_good, sp);
                r.max_abs_good = std::max(r.max_abs_good, sp);
                if (sp < p.a - tol) {
                    r.cert = Certificate::refuted("slope_bounds", "|s'(" + std::to_string(x) + ")| = " +
                                                                      std::to_string(sp) + " < a on good region");
                    return r;
                }
            }
        }
    }
    r.cert = Certificate::proven("slope_bounds");
    r.cert.add_margin("b - max|s'|", r.b - r.max_abs_all);
    r.cert.add_margin("min_good|s'| - a", r.min_abs_good - r.a);
    return r;
}

std::string ShearProfile::to_json() const {
    nlohmann::json j;
    j["n_intervals"] = n_intervals;
    j["tau2"] = tau2;
    std::vector<std::string> cx;
    for (auto& c : critical_xs) cx.push_back(rat_str(c));
    j["critical_xs"] = cx;
    j["slopes"] = slopes;
    j["delta"] = delta;
    j["smooth"] = smooth;
    j["s0"] = rat_str(s0);
    j["a"] = a;
    j["b"] = b;
    return j.dump(2);
}

ShearProfile ShearProfile::from_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    ShearProfile p;
    p.n_intervals = j.at("n_intervals").get<std::int64_t>();
    p.tau2 = j.at("tau2").get<std::int64_t>();
    for (auto& s : j.at("critical_xs")) p.critical_xs.push_back(parse_rational(s.get<std::string>()));
    p.slopes = j.at("slopes").get<std::vector<double>>();
    p.delta = j.at("delta").get<double>();
    p.smooth = j.at("smooth").get<double>();
    p.s0 = parse_rational(j.at("s0").get<std::string>());
    finalize(p);
    return p;
}

} // namespace nuh
