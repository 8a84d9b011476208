#ifndef TILTWALL_CHERN_HPP
#define TILTWALL_CHERN_HPP

#include "tiltwall/exactnum.hpp"
#include "tiltwall/geometry.hpp"

#include <stdexcept>
#include <string>

namespace tiltwall {

/// (H^2F.ch0, HF.ch1, F.ch2): the part of a character seen by the tilt slope.
struct ReducedClass {
    Rat r;
    Rat c;
    Rat dd;

    [[nodiscard]] std::string str() const { return r.str() + "," + c.str() + "," + dd.str(); }
    [[nodiscard]] bool is_zero() const { return r.is_zero() && c.is_zero() && dd.is_zero(); }
    /// Z + Z + ½Z.
    [[nodiscard]] bool is_lattice() const { return r.is_integer() && c.is_integer() && (Rat(2) * dd).is_integer(); }

    friend ReducedClass operator+(const ReducedClass& a, const ReducedClass& b) { return {a.r + b.r, a.c + b.c, a.dd + b.dd}; }
    friend ReducedClass operator-(const ReducedClass& a, const ReducedClass& b) { return {a.r - b.r, a.c - b.c, a.dd - b.dd}; }
    friend bool operator==(const ReducedClass&, const ReducedClass&) = default;
    friend auto operator<=>(const ReducedClass& a, const ReducedClass& b) {
        if (auto o = a.r <=> b.r; o != 0) return o;
        if (auto o = a.c <=> b.c; o != 0) return o;
        return a.dd <=> b.dd;
    }
};

inline ReducedClass parse_reduced_class(std::string_view text) {
    auto c1 = text.find(',');
    auto c2 = c1 == std::string_view::npos ? c1 : text.find(',', c1 + 1);
    if (c1 == std::string_view::npos || c2 == std::string_view::npos || text.find(',', c2 + 1) != std::string_view::npos)
        throw std::invalid_argument("reduced class must be 'r,c,d': '" + std::string(text) + "'");
    ReducedClass u{Rat::parse(text.substr(0, c1)), Rat::parse(text.substr(c1 + 1, c2 - c1 - 1)),
                   Rat::parse(text.substr(c2 + 1))};
    if (!u.r.is_integer() || !u.c.is_integer())
        throw std::invalid_argument("reduced class " + std::string(text) + ": r and c must be integers");
    if (!(Rat(2) * u.dd).is_integer())
        throw std::invalid_argument("reduced class " + std::string(text) + ": d must lie in (1/2)Z");
    return u;
}

/// A point (α², β) of the upper half plane; α² > 0.
struct TiltPoint {
    Rat alpha2;
    Rat beta;

    TiltPoint() : alpha2(1), beta(0) {}
    TiltPoint(Rat a2, Rat b) : alpha2(std::move(a2)), beta(std::move(b)) {
        if (alpha2.sign() <= 0) throw std::invalid_argument("alpha^2 must be positive");
    }
};

/// ch^{βH} = e^{−βH}·ch.
inline CharVector twist(const CharVector& ch, const Rat& beta, const RuledThreefold& x) {
    const Rat d = x.d();
    const Rat b2 = beta * beta / 2;
    const Rat b3 = beta * beta * beta / 6;
    return {
        ch.r,
        ch.cHF - beta * ch.r,
        ch.cHH - beta * d * ch.r,
        ch.dF - beta * ch.cHF + b2 * ch.r,
        ch.dH - beta * ch.cHH + b2 * d * ch.r,
        ch.e - beta * ch.dH + b2 * ch.cHH - b3 * d * ch.r,
    };
}

/// ch ⊗ O(aH + bF).
inline CharVector tensor_line(const CharVector& ch, long a, long b, const RuledThreefold& x) {
    if (a == 0) {
        const Rat m(b);
        return {ch.r, ch.cHF, ch.cHH + m * ch.r, ch.dF, ch.dH + m * ch.cHF, ch.e + m * ch.dF};
    }
    return tensor_product_char(ch, line_bundle_char(a, b, x), x);
}

inline ReducedClass reduced(const CharVector& ch) { return {ch.r, ch.cHF, ch.dF}; }

/// Twist of a reduced class; consistent with reduced(twist(ch, β)).
inline ReducedClass twist(const ReducedClass& u, const Rat& beta) {
    return {u.r, u.c - beta * u.r, u.dd - beta * u.c + beta * beta / 2 * u.r};
}

/// Δ̄ = (HF.ch1)² − 2 H²F.ch0 · F.ch2, invariant under twisting.
inline Rat disc_bar(const ReducedClass& u) { return u.c * u.c - Rat(2) * u.r * u.dd; }
inline Rat disc_bar(const CharVector& ch) { return disc_bar(reduced(ch)); }

enum class RootBranch {
    minus,  // (HF.ch1 − √Δ̄)/ch0, the defining branch
    plus,   // (HF.ch1 + √Δ̄)/ch0, the other root
};

/// β̄: the root of F.ch2^β = 0 selected by the sign in front of √Δ̄; when
/// ch0 = 0 the unique root F.ch2/HF.ch1.
inline QuadRat beta_bar(const ReducedClass& u, RootBranch branch = RootBranch::minus) {
    if (!u.r.is_zero()) {
        Rat disc = disc_bar(u);
        if (disc.sign() < 0)
            throw std::domain_error("beta_bar: negative discriminant " + disc.str());
        QuadRat root = QuadRat::sqrt(disc);
        if (branch == RootBranch::minus) root = -root;
        return (QuadRat(u.c) + root) / QuadRat(u.r);
    }
    if (u.c.is_zero()) throw std::domain_error("beta_bar undefined: ch0 = HF.ch1 = 0");
    return QuadRat(u.dd / u.c);
}
inline QuadRat beta_bar(const CharVector& ch, RootBranch branch = RootBranch::minus) {
    return beta_bar(reduced(ch), branch);
}

/// F.ch2^β evaluated at a quadratic irrational β.
inline QuadRat twisted_dF(const ReducedClass& u, const QuadRat& beta) {
    return QuadRat(u.dd) - beta * QuadRat(u.c) + beta * beta * QuadRat(u.r / 2);
}

}  // namespace tiltwall

#endif  // TILTWALL_CHERN_HPP
