#ifndef TILTWALL_INEQUALITIES_HPP
#define TILTWALL_INEQUALITIES_HPP

// Bogomolov–Gieseker type inequalities as signed defects: every function
// returns LHS − RHS oriented so that "defect >= 0" means the inequality
// holds. H²F = 1 and H³ = d throughout.

#include "tiltwall/chern.hpp"
#include "tiltwall/geometry.hpp"
#include "tiltwall/stability.hpp"

#include <stdexcept>

namespace tiltwall {

struct ClassicalDiscriminants {
    Rat f_delta;  // F.(ch1² − 2 ch0 ch2)
    Rat h_delta;  // H.(ch1² − 2 ch0 ch2)
};

inline ClassicalDiscriminants disc_classical(const CharVector& ch, const RuledThreefold& x) {
    const Rat d = x.d();
    const Rat& p = ch.cHF;
    const Rat q = ch.cHH - p * d;
    // F.ch1² = p², H.ch1² = p²d + 2pq
    return {p * p - Rat(2) * ch.r * ch.dF, p * p * d + Rat(2) * p * q - Rat(2) * ch.r * ch.dH};
}

/// Δ̃^β = HF.ch1^β · H².ch1^β − ch0 · H.ch2^β.
inline Rat disc_tilde(const CharVector& ch, const Rat& beta, const RuledThreefold& x) {
    const CharVector tw = twist(ch, beta, x);
    return tw.cHF * tw.cHH - tw.r * tw.dH;
}

/// ∇ = (d/3) ch0 F.ch2 − (2d/3)(HF.ch1)² + H².ch1 HF.ch1 − ch0 H.ch2.
inline Rat nabla(const CharVector& ch, const RuledThreefold& x) {
    const Rat d = x.d();
    return d / 3 * ch.r * ch.dF - Rat(2) * d / 3 * ch.cHF * ch.cHF + ch.cHH * ch.cHF - ch.r * ch.dH;
}

/// Same quantity written as Δ̃ − (d/6)Δ̄ − (d/2)(HF.ch1)².
inline Rat nabla_via_discriminants(const CharVector& ch, const RuledThreefold& x) {
    const Rat d = x.d();
    return disc_tilde(ch, 0, x) - d / 6 * disc_bar(ch) - d / 2 * ch.cHF * ch.cHF;
}

/// The line-bundle form of ∇ for L = aH + bF:
///   (H²L)(HFL) − ½(H²F)(HL²) + ⅙H³(FL²) − (2H³/3H²F)(HFL)².
inline Rat nabla_line_bundle_expression(long a, long b, const RuledThreefold& x) {
    const Rat A(a), B(b), d = x.d();
    const Rat h2l = A * d + B;              // H².L
    const Rat hfl = A;                      // HF.L
    const Rat hl2 = A * A * d + Rat(2) * A * B;  // H.L²
    const Rat fl2 = A * A;                  // F.L²
    return h2l * hfl - hl2 / 2 + d / 6 * fl2 - Rat(2) * d / 3 * hfl * hfl;
}

/// Conjectured inequality relating ch3 to lower degrees, at (α², β):
///   (F.ch2^β − (α²/2)ch0)(H.ch2^β − (d/3)F.ch2^β)
///     >= (ch3^β − (α²/2)H².ch1^β + (α²d/3)HF.ch1^β) HF.ch1^β.
inline Rat bg_main_defect(const CharVector& ch, const TiltPoint& pt, const RuledThreefold& x) {
    const CharVector tw = twist(ch, pt.beta, x);
    const Rat d = x.d();
    const Rat& a2 = pt.alpha2;
    const Rat lhs = (tw.dF - a2 / 2 * tw.r) * (tw.dH - d / 3 * tw.dF);
    const Rat rhs = (tw.e - a2 / 2 * tw.cHH + a2 * d / 3 * tw.cHF) * tw.cHF;
    return lhs - rhs;
}

/// ν = 0 specialization: ch3^β <= (α²/2)H².ch1^β − (α²d/3)HF.ch1^β.
inline Rat bg_nu_zero_defect(const CharVector& ch, const TiltPoint& pt, const RuledThreefold& x) {
    const CharVector tw = twist(ch, pt.beta, x);
    const Rat& a2 = pt.alpha2;
    return a2 / 2 * tw.cHH - a2 * x.d() / 3 * tw.cHF - tw.e;
}

/// The ν = 0 inequality moved along the circle of constant slope: at
/// β' = β + ν and α'² = α² + ν²,
///   ch3^{β'} <= α'² (½H².ch1^{β'} − (d/3)HF.ch1^{β'}).
/// Satisfies bg_main_defect = HF.ch1^β · bg_star_defect.
inline Rat bg_star_defect(const CharVector& ch, const TiltPoint& pt, const RuledThreefold& x) {
    const ExtRat slope = nu(ch, pt);
    if (slope.is_infinite()) throw std::domain_error("bg_star_defect: tilt slope is +inf");
    const Rat& v = slope.value();
    const CharVector tw = twist(ch, pt.beta + v, x);
    return (pt.alpha2 + v * v) * (tw.cHH / 2 - x.d() / 3 * tw.cHF) - tw.e;
}

/// Weaker form with coefficient d/4 in place of d/3 and no (d/3)F.ch2^β
/// correction on the left.
inline Rat bg_weak_defect(const CharVector& ch, const TiltPoint& pt, const RuledThreefold& x) {
    const CharVector tw = twist(ch, pt.beta, x);
    const Rat d = x.d();
    const Rat& a2 = pt.alpha2;
    const Rat lhs = (tw.dF - a2 / 2 * tw.r) * tw.dH;
    const Rat rhs = (tw.e - a2 / 2 * tw.cHH + a2 * d / 4 * tw.cHF) * tw.cHF;
    return lhs - rhs;
}

/// The four linear functionals with b·c − a·d = bg_weak_defect and
/// ν_{α,β,t} = (d − t·a)/c.
struct LiuFunctionals {
    Rat a;  // −F.ch2^β + (α²/2) ch0
    Rat b;  // −ch3^β + (α²/2)H².ch1^β − (α²d/4)HF.ch1^β
    Rat c;  // HF.ch1^β
    Rat d;  // H.ch2^β
};

inline LiuFunctionals liu_abcd(const CharVector& ch, const TiltPoint& pt, const RuledThreefold& x) {
    const CharVector tw = twist(ch, pt.beta, x);
    const Rat& a2 = pt.alpha2;
    return {
        -tw.dF + a2 / 2 * tw.r,
        -tw.e + a2 / 2 * tw.cHH - a2 * x.d() / 4 * tw.cHF,
        tw.cHF,
        tw.dH,
    };
}

/// (H.ch2(P))² − 2 H².ch1(P) ch3(P) for P the pushforward of A to k fibers.
/// Pass beta to evaluate on twisted degrees; the value does not depend on it.
inline Rat fiber_bogomolov_defect(long k, const CharVector& a, const RuledThreefold& x, const Rat& beta = 0) {
    const CharVector p = twist(fiber_pushforward_char(k, a), beta, x);
    return p.dH * p.dH - Rat(2) * p.cHH * p.e;
}

/// Δ̃ − (d/6)Δ̄ − (d/2)(HF.ch1)² >= 0; algebraically equal to ∇.
inline Rat corollary_defect(const CharVector& ch, const RuledThreefold& x) { return nabla_via_discriminants(ch, x); }

struct ChiBounds {
    Rat chi1;  // χ(O(H), E)
    Rat chi2;  // χ(O(2H), E)
};

/// The two Riemann–Roch functionals written out on the lattice coordinates:
///   χ(O(H),E)  = ch3 + ½H.ch2 − (g−1+d/2)F.ch2 − (g/2 − ½ + d/6)HF.ch1
///   χ(O(2H),E) = ch3 − ½H.ch2 − (g−1+d/2)F.ch2 + (g/2 − ½ + d/3)HF.ch1
inline ChiBounds prop42_chi_bounds(const CharVector& ch, const RuledThreefold& x) {
    const Rat g = x.g(), d = x.d();
    const Rat f_coeff = g - 1 + d / 2;
    const Rat half = Rat(1, 2);
    return {
        ch.e + half * ch.dH - f_coeff * ch.dF - (g / 2 - half + d / 6) * ch.cHF,
        ch.e - half * ch.dH - f_coeff * ch.dF + (g / 2 - half + d / 3) * ch.cHF,
    };
}

}  // namespace tiltwall

#endif  // TILTWALL_INEQUALITIES_HPP
