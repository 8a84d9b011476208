#ifndef TILTWALL_STABILITY_HPP
#define TILTWALL_STABILITY_HPP

// Slope functions and the central charge z_{s,t}. All slopes return ExtRat;
// a vanishing denominator gives +inf.

#include "tiltwall/chern.hpp"
#include "tiltwall/exactnum.hpp"
#include "tiltwall/geometry.hpp"

#include <stdexcept>

namespace tiltwall {

struct ChargeParams {
    Rat alpha2;
    Rat beta;
    Rat s;
    Rat t;

    ChargeParams(Rat a2, Rat b, Rat s_, Rat t_)
        : alpha2(std::move(a2)), beta(std::move(b)), s(std::move(s_)), t(std::move(t_)) {
        if (alpha2.sign() <= 0) throw std::invalid_argument("alpha^2 must be positive");
        if (s.sign() <= 0 || t.sign() <= 0) throw std::invalid_argument("s and t must be positive");
    }
    [[nodiscard]] TiltPoint point() const { return {alpha2, beta}; }
};

struct ChargeValue {
    Rat re;
    Rat im;

    friend ChargeValue operator+(const ChargeValue& a, const ChargeValue& b) { return {a.re + b.re, a.im + b.im}; }
    friend bool operator==(const ChargeValue&, const ChargeValue&) = default;
};

/// μ_{H,F} = HF.ch1 / H²F.ch0.
inline ExtRat mu_HF(const CharVector& ch) {
    if (ch.r.is_zero()) return ExtRat::infinity();
    return ch.cHF / ch.r;
}

/// μ_C. The "supported on fibers" case uses the numerical proxy
/// ch0 = HF.ch1 = F.ch2 = 0.
inline ExtRat mu_C(const CharVector& ch) {
    if (!ch.r.is_zero()) return ch.cHF / ch.r;
    if (ch.cHF.is_zero() && ch.dF.is_zero() && !ch.cHH.is_zero()) return ch.dH / ch.cHH;
    return ExtRat::infinity();
}

/// ν^{α,β}_{H,F}; depends on ch only through reduced(ch).
inline ExtRat nu(const ReducedClass& u, const TiltPoint& pt) {
    const ReducedClass tw = twist(u, pt.beta);
    if (tw.c.is_zero()) return ExtRat::infinity();
    return (tw.dd - pt.alpha2 / 2 * tw.r) / tw.c;
}
inline ExtRat nu(const CharVector& ch, const TiltPoint& pt) { return nu(reduced(ch), pt); }

/// ν_{α,β,t} = ((H+tF).ch2^β − (t/2)α² ch0) / HF.ch1^β.
inline ExtRat nu_mixed(const CharVector& ch, const TiltPoint& pt, const Rat& t, const RuledThreefold& x) {
    if (t.sign() <= 0) throw std::invalid_argument("t must be positive");
    const CharVector tw = twist(ch, pt.beta, x);
    if (tw.cHF.is_zero()) return ExtRat::infinity();
    return (tw.dH + t * tw.dF - t / 2 * pt.alpha2 * tw.r) / tw.cHF;
}

/// Necessary numerical conditions for membership in the tilted heart at β.
/// Passing them does not certify membership; failing any excludes it.
struct HeartSignReport {
    bool hf_nonnegative = false;         // HF.ch1^β >= 0
    bool hf_zero = false;                // HF.ch1^β = 0, so the second tier applies
    bool second_tier_ok = true;          // H.ch2^β >= 0, F.ch2^β >= 0, ch0 <= 0
    bool third_tier_applies = false;     // HF.ch1^β = ch0 = H.ch2^β = 0
    bool third_tier_ok = true;           // ch3^β >= 0

    [[nodiscard]] bool passes() const { return hf_nonnegative && second_tier_ok && third_tier_ok; }
};

inline HeartSignReport heart_sign_constraints(const CharVector& ch, const TiltPoint& pt, const RuledThreefold& x) {
    const CharVector tw = twist(ch, pt.beta, x);
    HeartSignReport rep;
    rep.hf_nonnegative = tw.cHF.sign() >= 0;
    rep.hf_zero = tw.cHF.is_zero();
    if (rep.hf_zero) {
        rep.second_tier_ok = tw.dH.sign() >= 0 && tw.dF.sign() >= 0 && tw.r.sign() <= 0;
        rep.third_tier_applies = tw.r.is_zero() && tw.dH.is_zero();
        if (rep.third_tier_applies) rep.third_tier_ok = tw.e.sign() >= 0;
    }
    return rep;
}

/// z_{s,t} = (s − α²d/4)HF.ch1^β − ch3^β + (α²/2)H².ch1^β
///         + i(H.ch2^β + t F.ch2^β − (tα²/2) ch0).
inline ChargeValue central_charge(const CharVector& ch, const ChargeParams& p, const RuledThreefold& x) {
    const CharVector tw = twist(ch, p.beta, x);
    const Rat d = x.d();
    ChargeValue z;
    z.re = (p.s - p.alpha2 * d / 4) * tw.cHF - tw.e + p.alpha2 / 2 * tw.cHH;
    z.im = tw.dH + p.t * tw.dF - p.t * p.alpha2 / 2 * tw.r;
    return z;
}

/// Z lies in {ρ e^{iπφ} : ρ > 0, 0 < φ <= 1}.
inline bool in_positive_cone(const ChargeValue& z) {
    return z.im.sign() > 0 || (z.im.is_zero() && z.re.sign() < 0);
}

/// ν_σ = −Re Z / Im Z.
inline ExtRat nu_sigma(const CharVector& ch, const ChargeParams& p, const RuledThreefold& x) {
    const ChargeValue z = central_charge(ch, p, x);
    if (z.im.is_zero()) return ExtRat::infinity();
    return -z.re / z.im;
}

}  // namespace tiltwall

#endif  // TILTWALL_STABILITY_HPP
