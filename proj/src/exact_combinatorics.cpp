#include "nuh/exact_combinatorics.hpp"

#include <sstream>
#include <stdexcept>

namespace nuh {

namespace {

void require_range(std::int64_t tau1, std::int64_t tau2) {
    if (tau2 < 3) throw std::invalid_argument("tau2 must be >= 3");
    if (tau1 < 1) throw std::invalid_argument("tau1 must be >= 1");
}

} // namespace

CountingFloors counting_floors(std::int64_t tau1, std::int64_t tau2) {
    require_range(tau1, tau2);
    const BigInt n(tau2 - 1), h((tau2 - 1) / 2);
    CountingFloors f;
    f.v1 = n * n * n + n * (3 * h + 1) - h * h;
    f.v2 = f.v1 - (n - h) * (n - h) * (n - h);
    const BigInt t13 = BigInt(tau1) * tau1 * tau1;
    f.v1_d = t13 * f.v1;
    f.v2_d = t13 * f.v2;
    return f;
}

Rational ratio_p(std::int64_t tau2) {
    auto f = counting_floors(1, tau2);
    const BigInt t23 = BigInt(tau2) * tau2 * tau2;
    return Rational(f.v2, t23 - (f.v1 - f.v2));
}

CombinatoricsTable coefficient_table(std::int64_t tau1, std::int64_t tau2) {
    require_range(tau1, tau2);
    if (tau2 % tau1 != 0) throw std::invalid_argument("tau1 must divide tau2");

    CombinatoricsTable T;
    T.tau1 = tau1;
    T.tau2 = tau2;
    T.d = tau1 * tau2;

    auto f = counting_floors(tau1, tau2);
    T.v1 = f.v1;
    T.v2 = f.v2;

    const BigInt h((tau2 - 1) / 2), n(tau2 - 1), t1(tau1);
    T.vv_d = t1 * n;
    T.vh_d = t1 * h;
    T.vv_d2 = t1 * t1 * (n * n + h);
    T.vh_d2 = t1 * t1 * (h * (2 * tau2 - 1 - h) + h);

    T.c1 = Rational(tau2 - 1, tau2);
    T.c2 = -(Rational(1) - Rational(h, tau2));

    const BigInt t23 = BigInt(tau2) * tau2 * tau2;
    T.c = Rational((n - h) * (n - h) * (n - h), t23);
    T.e = Rational(T.v2, t23);
    T.p = T.e / (Rational(1) - T.c);

    const Rational d(T.d), d2 = d * d;
    const Rational tail = Rational(2) * T.c2 - T.c2 / d2 - Rational(1, tau2) / d2;
    T.I1 = T.c1 + (T.c1 - T.c2) * (Rational(T.vv_d) / d + Rational(T.vv_d2) / d2) + tail;
    T.I2 = T.c2 + (T.c1 - T.c2) * (Rational(T.vh_d) / d + Rational(T.vh_d2) / d2) + tail;

    // Expansion of J = p I1 + (1-p) I2 grouped by pullback depth. The per-depth
    // vertical/horizontal counts are the v-list entries; the leftover c2 mass is
    // 3c2 - (c2 + 1/tau2)/d^2.
    const Rational q = Rational(1) - T.p;
    T.E1 = T.p * (T.c1 - T.c2);
    T.E2 = (T.c1 - T.c2) * (T.p * Rational(T.vv_d) + q * Rational(T.vh_d)) / d;
    T.E3 = (T.c1 - T.c2) * (T.p * Rational(T.vv_d2) + q * Rational(T.vh_d2)) / d2;
    T.S = T.E1 + T.E2 + T.E3 + Rational(3) * T.c2;
    T.J = T.p * T.I1 + q * T.I2;
    return T;
}

Certificate certify_p_bounds(std::int64_t tau2_max) {
    if (tau2_max < 3) throw std::invalid_argument("tau2_max must be >= 3");
    const Rational half(1, 2), two_thirds(2, 3);
    Rational worst_half(1), worst_two_thirds(1);
    for (std::int64_t tau2 = 3; tau2 <= tau2_max; ++tau2) {
        Rational p = ratio_p(tau2);
        if (!(p > half))
            return Certificate::refuted("p>1/2", "tau2=" + std::to_string(tau2) + " p=" + rat_str(p));
        if (p - half < worst_half) worst_half = p - half;
        if (tau2 >= 5) {
            if (!(p > two_thirds))
                return Certificate::refuted("p>2/3", "tau2=" + std::to_string(tau2) + " p=" + rat_str(p));
            if (p - two_thirds < worst_two_thirds) worst_two_thirds = p - two_thirds;
        }
    }
    Certificate c = Certificate::proven("p_bounds[3.." + std::to_string(tau2_max) + "]");
    c.add_margin("min p-1/2", to_double(worst_half));
    if (tau2_max >= 5) c.add_margin("min p-2/3 (tau2>=5)", to_double(worst_two_thirds));
    return c;
}

Certificate certify_J_positive(std::int64_t tau2_max) {
    if (tau2_max < 3) throw std::invalid_argument("tau2_max must be >= 3");
    Rational worstS, worstJ;
    bool first = true;
    for (std::int64_t tau2 = 3; tau2 <= tau2_max; ++tau2) {
        auto T = coefficient_table(1, tau2);
        if (!(T.S > 0))
            return Certificate::refuted("S>0", "tau2=" + std::to_string(tau2) + " S=" + rat_str(T.S));
        if (!(T.J > 0))
            return Certificate::refuted("J>0", "tau2=" + std::to_string(tau2) + " J=" + rat_str(T.J));
        if (first || T.S < worstS) worstS = T.S;
        if (first || T.J < worstJ) worstJ = T.J;
        first = false;
    }
    Certificate c = Certificate::proven("S,J>0[3.." + std::to_string(tau2_max) + "]");
    c.add_margin("min S", to_double(worstS));
    c.add_margin("min J", to_double(worstJ));
    return c;
}

TheoremBThresholds theoremB_thresholds(std::int64_t m, const Rational& delta0) {
    if (m < 3) throw std::invalid_argument("m must be >= 3");
    if (!(delta0 > 0) || !(delta0 < 1)) throw std::invalid_argument("delta0 must be in (0,1)");
    TheoremBThresholds t;
    const BigInt h((m - 1) / 2);
    t.lhs = Rational(h - 1, h + 1);
    t.rhs = Rational(1) - delta0;
    t.qualifies = t.lhs > t.rhs;
    t.T = rat_floor((Rational(1) + Rational(7) * delta0) / (Rational(28) * delta0));
    return t;
}

std::string combinatorics_csv(std::int64_t tau2_max) {
    std::ostringstream os;
    os << "tau2,v1,v2,p,c,e,c1,c2,I1,I2,E1,E2,E3,S,J\n";
    for (std::int64_t tau2 = 3; tau2 <= tau2_max; ++tau2) {
        auto T = coefficient_table(1, tau2);
        os << tau2 << "," << T.v1.str() << "," << T.v2.str() << "," << rat_str(T.p) << ","
           << rat_str(T.c) << "," << rat_str(T.e) << "," << rat_str(T.c1) << "," << rat_str(T.c2)
           << "," << rat_str(T.I1) << "," << rat_str(T.I2) << "," << rat_str(T.E1) << ","
           << rat_str(T.E2) << "," << rat_str(T.E3) << "," << rat_str(T.S) << "," << rat_str(T.J)
           << "\n";
    }
    return os.str();
}

} // namespace nuh
