#include "nuh/lattice.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace nuh {

PreimageLattice preimage_lattice(const IntegerMatrix2& E) {
    const std::int64_t D = E.degree();
    std::set<std::array<Rational, 2>> seen;
    // E Z^2 contains D Z^2, so {0..D-1}^2 is a full residue system for Z^2/EZ^2
    for (std::int64_t k1 = 0; k1 < D; ++k1)
        for (std::int64_t k2 = 0; k2 < D; ++k2) {
            auto v = E.solve(Rational(k1), Rational(k2));
            seen.insert({mod1(v[0]), mod1(v[1])});
        }
    if (std::int64_t(seen.size()) != D)
        throw std::logic_error("preimage lattice enumeration produced " +
                               std::to_string(seen.size()) + " cosets, expected " + std::to_string(D));

    PreimageLattice L;
    L.offsets.assign(seen.begin(), seen.end());

    const std::int64_t tau2 = E.tau2(), tau1 = E.tau1();
    std::set<Rational> cols;
    for (auto& o : L.offsets) cols.insert(o[0]);
    bool regular = std::int64_t(cols.size()) == tau2;
    if (regular) {
        std::int64_t i = 0;
        for (auto& c : cols) regular = regular && c == Rational(i++, tau2);
        for (auto& c : cols) {
            std::int64_t cnt = 0;
            for (auto& o : L.offsets) cnt += o[0] == c;
            regular = regular && cnt == tau1;
        }
    }
    L.x_spacing_regular = regular;
    return L;
}

namespace {

// strictly inside the right component {v1 > 0, |v2| < alpha*v1} of the horizontal cone
bool in_right_component(const std::array<Rational, 2>& v, const Rational& alpha) {
    if (!(v[0] > 0)) return false;
    Rational a2 = v[1] < 0 ? -v[1] : v[1];
    return a2 < alpha * v[0];
}

} // namespace

Certificate admissible_alpha(const IntegerMatrix2& E, const Rational& alpha) {
    std::string reason;
    if (!admissible_for_certification(E, &reason))
        return Certificate::refuted("admissible_alpha", "matrix not admissible: " + reason);
    if (alpha <= 1)
        return Certificate::refuted("admissible_alpha", "alpha <= 1 violates the standing assumption alpha > 1");

    // The closed vertical cone is, up to sign, the convex sector spanned by
    // (1,alpha) and (-1,alpha). Its E^{-1}-image is the sector spanned by the two
    // ray images, and it lies in the open horizontal cone iff both images land
    // strictly inside the same convex component.
    auto w1 = E.solve(Rational(1), alpha);
    auto w2 = E.solve(Rational(-1), alpha);
    auto wm = E.solve(Rational(0), Rational(1));  // interior ray, implied by convexity

    auto neg = [](const std::array<Rational, 2>& v) { return std::array<Rational, 2>{-v[0], -v[1]}; };
    bool right = in_right_component(w1, alpha) && in_right_component(w2, alpha);
    bool left = in_right_component(neg(w1), alpha) && in_right_component(neg(w2), alpha);
    if (!right && !left) {
        auto wit = [&](const std::array<Rational, 2>& v, const char* name) {
            return std::string(name) + " -> (" + rat_str(v[0]) + "," + rat_str(v[1]) + ")";
        };
        std::string w = wit(w1, "ray(1,alpha)") + "; " + wit(w2, "ray(-1,alpha)");
        return Certificate::refuted("admissible_alpha",
                                    "image sector not strictly inside one horizontal component: " + w);
    }

    Certificate c = Certificate::proven("admissible_alpha");
    auto slope_margin = [&](const std::array<Rational, 2>& v) {
        Rational a1 = v[0] < 0 ? -v[0] : v[0];
        Rational a2 = v[1] < 0 ? -v[1] : v[1];
        return to_double(alpha - a2 / a1);
    };
    c.add_margin("ray(1,alpha)", slope_margin(w1));
    c.add_margin("ray(-1,alpha)", slope_margin(w2));
    c.add_margin("ray(0,1)", slope_margin(wm));
    return c;
}

Rational min_admissible_alpha(const IntegerMatrix2& E, double tol) {
    Rational hi(2);
    int guard = 0;
    while (!admissible_alpha(E, hi).proven_ok()) {
        hi *= 2;
        if (++guard > 60) throw std::runtime_error("no admissible alpha found up to 2^61 for " + E.str());
    }
    Rational lo(1);
    while (to_double(hi - lo) > tol) {
        Rational mid = (lo + hi) / 2;
        if (admissible_alpha(E, mid).proven_ok()) hi = mid; else lo = mid;
    }
    return hi;
}

namespace {

struct Affine { Rational c0, c1; };  // c0 + c1 * tau

// minimum of max(|f|,|g|) over tau in [lo,hi], all exact
Rational min_max_abs(const Affine& f, const Affine& g, const Rational& lo, const Rational& hi) {
    std::vector<Rational> cand{lo, hi};
    auto add_root = [&](const Rational& c0, const Rational& c1) {
        if (c1 != 0) cand.push_back(-c0 / c1);
    };
    add_root(f.c0, f.c1);
    add_root(g.c0, g.c1);
    // |f| = |g| on f = g or f = -g
    add_root(f.c0 - g.c0, f.c1 - g.c1);
    add_root(f.c0 + g.c0, f.c1 + g.c1);

    bool first = true;
    Rational best;
    for (auto& t : cand) {
        if (t < lo || t > hi) continue;
        Rational fv = f.c0 + f.c1 * t, gv = g.c0 + g.c1 * t;
        if (fv < 0) fv = -fv;
        if (gv < 0) gv = -gv;
        Rational m = fv > gv ? fv : gv;
        if (first || m < best) { best = m; first = false; }
    }
    return best;
}

} // namespace

ConeConstants cone_norm_constants(const IntegerMatrix2& E, const Rational& alpha) {
    if (!(alpha > 1)) throw std::invalid_argument("cone_norm_constants requires alpha > 1");
    const Rational de(E.det());
    // E^{-1}(u1,u2) = ((e22 u1 - e12 u2)/det, (e11 u2 - e21 u1)/det)
    auto inv1 = [&](const Affine& u1, const Affine& u2) {
        return Affine{(Rational(E.e22) * u1.c0 - Rational(E.e12) * u2.c0) / de,
                      (Rational(E.e22) * u1.c1 - Rational(E.e12) * u2.c1) / de};
    };
    auto inv2 = [&](const Affine& u1, const Affine& u2) {
        return Affine{(Rational(E.e11) * u2.c0 - Rational(E.e21) * u1.c0) / de,
                      (Rational(E.e11) * u2.c1 - Rational(E.e21) * u1.c1) / de};
    };
    auto seg_min = [&](const Affine& u1, const Affine& u2, const Rational& lo, const Rational& hi) {
        return min_max_abs(inv1(u1, u2), inv2(u1, u2), lo, hi);
    };

    const Rational one(1), inva = one / alpha;

    // vertical cone closure on the unit square boundary: u = (tau, 1), |tau| <= 1/alpha
    Rational ev = seg_min(Affine{0, 1}, Affine{1, 0}, -inva, inva);

    // horizontal cone: u = (1, tau), |tau| <= 1  and  u = (tau, 1), 1/alpha <= |tau| <= 1
    Rational eh = seg_min(Affine{1, 0}, Affine{0, 1}, -one, one);
    Rational eh2 = seg_min(Affine{0, 1}, Affine{1, 0}, inva, one);
    Rational eh3 = seg_min(Affine{0, 1}, Affine{1, 0}, -one, -inva);
    if (eh2 < eh) eh = eh2;
    if (eh3 < eh) eh = eh3;

    ConeConstants cc;
    cc.alpha = alpha;
    cc.e_v_exact = ev;
    cc.e_h_exact = eh;
    cc.e_v = to_double(ev);
    cc.e_h = to_double(eh);
    return cc;
}

} // namespace nuh
