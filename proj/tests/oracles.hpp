#ifndef TILTWALL_TESTS_ORACLES_HPP
#define TILTWALL_TESTS_ORACLES_HPP

// Independent reference computations. None of these call the function they
// are used to check; each takes a different route to the same quantity.

#include "tiltwall/tiltwall.hpp"

#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

namespace oracle {

using namespace tiltwall;

/// χ written out as a linear functional (symbolic expansion of ∫ ch·td):
///   (1−g)r + (3/2 − 3g/2 − 2d/3)cHF + cHH + (1 − g − d/2)dF + (3/2)dH + e.
inline Rat chi(const RuledThreefold& x, const CharVector& v) {
    const Rat g = x.g(), d = x.d();
    return (Rat(1) - g) * v.r + (Rat(3, 2) - Rat(3, 2) * g - Rat(2, 3) * d) * v.cHF + v.cHH +
           (Rat(1) - g - d / 2) * v.dF + Rat(3, 2) * v.dH + v.e;
}

/// e^{−βH} as a character, multiplied through the ring.
inline CharVector twist(const CharVector& ch, const Rat& beta, const RuledThreefold& x) {
    const Rat d = x.d();
    const CharVector exp_minus{1, -beta, -beta * d, beta * beta / 2, beta * beta * d / 2, -beta * beta * beta * d / 6};
    return tensor_product_char(ch, exp_minus, x);
}

/// Determinant by cofactor expansion.
inline Rat laplace_det(const RatMatrix& m) {
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    if (n == 1) return m(0, 0);
    Rat total = 0;
    for (std::size_t j = 0; j < n; ++j) {
        RatMatrix minor(n - 1, n - 1);
        for (std::size_t i = 1; i < n; ++i)
            for (std::size_t k = 0, kk = 0; k < n; ++k)
                if (k != j) minor(i - 1, kk++) = m(i, k);
        const Rat term = m(0, j) * laplace_det(minor);
        total += (j % 2 == 0) ? term : -term;
    }
    return total;
}

struct OracleWall {
    bool vertical = false;
    Rat pos;  // β of a vertical wall, center of a semicircle
    Rat radius_sq;

    friend auto operator<=>(const OracleWall&, const OracleWall&) = default;
};

/// The wall of u and w from the equal-slope polynomial on the β-axis,
///   f(β) = F.ch2^β(u)·HF.ch1^β(w) − F.ch2^β(w)·HF.ch1^β(u),
/// interpolated from its values at β = 0, 1, −1, 2. The semicircle's
/// endpoints are the roots of f, the vertical wall the root of a linear f.
inline std::optional<OracleWall> wall(const ReducedClass& u, const ReducedClass& w) {
    auto f = [&](long b) {
        const ReducedClass tu = tiltwall::twist(u, Rat(b));
        const ReducedClass tw = tiltwall::twist(w, Rat(b));
        return tu.dd * tw.c - tw.dd * tu.c;
    };
    const Rat f0 = f(0), f1 = f(1), fm = f(-1), f2 = f(2);
    // f = A β² + B β + C, with the cubic coefficient checked to vanish.
    const Rat C = f0;
    const Rat A = (f1 + fm) / 2 - C;
    const Rat B = (f1 - fm) / 2;
    if (A * 4 + B * 2 + C != f2) throw std::logic_error("oracle: equal-slope polynomial is not quadratic");
    if (!A.is_zero()) {
        const Rat center = -B / (A * 2);
        const Rat r2 = center * center - C / A;
        if (r2.sign() <= 0) return std::nullopt;
        return OracleWall{false, center, r2};
    }
    if (!B.is_zero()) return OracleWall{true, -C / B, Rat(0)};
    return std::nullopt;
}

/// a − bβ >= 0 for all β in [m − R, m + R], with R² given: equivalent to
/// a − bm >= |b|R.
inline bool linear_nonneg_on_interval(const Rat& a, const Rat& b, const Rat& m, const Rat& r2) {
    const Rat mid = a - b * m;
    return mid.sign() >= 0 && mid * mid >= b * b * r2;
}

inline bool window_ok(const ReducedClass& u, const ReducedClass& w, const OracleWall& wl) {
    if (wl.vertical) {
        const Rat fw = w.c - wl.pos * w.r;
        const Rat fu = u.c - wl.pos * u.r;
        return fw.sign() >= 0 && fu >= fw;
    }
    return linear_nonneg_on_interval(w.c, w.r, wl.pos, wl.radius_sq) &&
           linear_nonneg_on_interval(u.c - w.c, u.r - w.r, wl.pos, wl.radius_sq);
}

using Hit = std::tuple<ReducedClass, OracleWall>;

/// Full scan of |r| <= rank_bound, |c| <= box, |d| <= box with d in ½Z.
/// max_abs receives the largest |c| or |d| among accepted classes so the
/// caller can confirm the box was not binding.
inline std::set<Hit> destabilizers(const ReducedClass& u, long rank_bound, long box, long* max_abs = nullptr) {
    std::set<Hit> out;
    long seen = 0;
    const Rat du = u.c * u.c - Rat(2) * u.r * u.dd;
    for (long r = -rank_bound; r <= rank_bound; ++r)
        for (long c = -box; c <= box; ++c)
            for (long k = -2 * box; k <= 2 * box; ++k) {
                const ReducedClass w{Rat(r), Rat(c), Rat(k, 2)};
                const ReducedClass q = u - w;
                const Rat dw = w.c * w.c - Rat(2) * w.r * w.dd;
                const Rat dq = q.c * q.c - Rat(2) * q.r * q.dd;
                if (dw.sign() < 0 || dq.sign() < 0 || dw + dq > du) continue;
                const auto wl = wall(u, w);
                if (!wl || !window_ok(u, w, *wl)) continue;
                out.emplace(w, *wl);
                seen = std::max({seen, std::abs(c), std::abs(k) / 2 + 1});
            }
    if (max_abs) *max_abs = seen;
    return out;
}

inline OracleWall as_oracle(const Wall& w) {
    if (w.is_vertical()) return {true, w.beta(), Rat(0)};
    return {false, w.center(), w.radius_sq()};
}

inline std::set<Hit> flatten(const Enumeration& e) {
    std::set<Hit> out;
    for (const auto& hit : e.hits)
        for (const auto& w : hit.classes) out.emplace(w, as_oracle(hit.wall));
    return out;
}

inline std::string describe(const Hit& h) {
    const auto& [w, wl] = h;
    return "w=(" + w.str() + ") " + (wl.vertical ? "vertical " + wl.pos.str() : "semicircle " + wl.pos.str() + " " + wl.radius_sq.str());
}

/// Entries of a that are missing from b, one per line.
inline std::string missing(const std::set<Hit>& a, const std::set<Hit>& b) {
    std::string out;
    for (const auto& h : a)
        if (!b.count(h)) out += describe(h) + "\n";
    return out;
}

}  // namespace oracle

#endif  // TILTWALL_TESTS_ORACLES_HPP
