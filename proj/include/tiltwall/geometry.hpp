#ifndef TILTWALL_GEOMETRY_HPP
#define TILTWALL_GEOMETRY_HPP

// Numerical intersection ring of X = P(E) over a curve of genus g, with
// H = c1(O(1)) and F a fiber: H^2 F = 1, H F^2 = 0, F^2 = 0, H^3 = deg E.
// Degree-2 classes are spanned by H^2 and HF, degree-1 by H and F.

#include "tiltwall/exactnum.hpp"

#include <array>
#include <stdexcept>
#include <string>

namespace tiltwall {

struct RuledThreefold {
    long genus = 0;   // g(C)
    long degree = 0;  // d = H^3 = deg E

    RuledThreefold() = default;
    RuledThreefold(long g, long d) : genus(g), degree(d) {
        if (g < 0) throw std::invalid_argument("genus must be >= 0");
    }
    [[nodiscard]] Rat d() const { return Rat(degree); }
    [[nodiscard]] Rat g() const { return Rat(genus); }
};

/// A point of the rank-6 numerical lattice
///   (ch0, HF.ch1, H^2.ch1, F.ch2, H.ch2, ch3).
/// Entries are arbitrary rationals so that twisted characters are
/// representable; is_lattice() checks the integrality of a genuine class.
struct CharVector {
    Rat r;    // ch0
    Rat cHF;  // HF.ch1
    Rat cHH;  // H^2.ch1
    Rat dF;   // F.ch2
    Rat dH;   // H.ch2
    Rat e;    // ch3

    static constexpr std::size_t dimension = 6;

    [[nodiscard]] std::array<Rat, 6> coords() const { return {r, cHF, cHH, dF, dH, e}; }
    static CharVector from_coords(const std::array<Rat, 6>& c) { return {c[0], c[1], c[2], c[3], c[4], c[5]}; }
    [[nodiscard]] RatVector to_vector() const { return {r, cHF, cHH, dF, dH, e}; }
    static CharVector from_vector(const RatVector& v) {
        if (v.size() != 6) throw std::invalid_argument("character vectors have 6 coordinates");
        return {v[0], v[1], v[2], v[3], v[4], v[5]};
    }
    static CharVector basis(std::size_t i) {
        std::array<Rat, 6> c{0, 0, 0, 0, 0, 0};
        c.at(i) = 1;
        return from_coords(c);
    }

    /// Integrality of Z+Z+Z+½Z+½Z+⅙Z; empty string when valid.
    [[nodiscard]] std::string lattice_violation() const {
        if (!r.is_integer()) return "ch0 must be an integer, got " + r.str();
        if (!cHF.is_integer()) return "HF.ch1 must be an integer, got " + cHF.str();
        if (!cHH.is_integer()) return "H^2.ch1 must be an integer, got " + cHH.str();
        if (!(Rat(2) * dF).is_integer()) return "F.ch2 must lie in (1/2)Z, got " + dF.str();
        if (!(Rat(2) * dH).is_integer()) return "H.ch2 must lie in (1/2)Z, got " + dH.str();
        if (!(Rat(6) * e).is_integer()) return "ch3 must lie in (1/6)Z, got " + e.str();
        return {};
    }
    [[nodiscard]] bool is_lattice() const { return lattice_violation().empty(); }

    [[nodiscard]] std::string str() const {
        return r.str() + "," + cHF.str() + "," + cHH.str() + "," + dF.str() + "," + dH.str() + "," + e.str();
    }

    CharVector& operator+=(const CharVector& o) {
        r += o.r; cHF += o.cHF; cHH += o.cHH; dF += o.dF; dH += o.dH; e += o.e;
        return *this;
    }
    CharVector& operator-=(const CharVector& o) {
        r -= o.r; cHF -= o.cHF; cHH -= o.cHH; dF -= o.dF; dH -= o.dH; e -= o.e;
        return *this;
    }
    friend CharVector operator+(CharVector a, const CharVector& b) { return a += b; }
    friend CharVector operator-(CharVector a, const CharVector& b) { return a -= b; }
    friend CharVector operator-(const CharVector& a) { return {-a.r, -a.cHF, -a.cHH, -a.dF, -a.dH, -a.e}; }
    friend CharVector operator*(const Rat& s, const CharVector& a) {
        return {s * a.r, s * a.cHF, s * a.cHH, s * a.dF, s * a.dH, s * a.e};
    }
    friend bool operator==(const CharVector&, const CharVector&) = default;
};

/// "r,cHF,cHH,dF,dH,e". Throws std::invalid_argument with a precise message
/// on malformed text or (when require_lattice) non-integral entries.
inline CharVector parse_char_vector(std::string_view text, bool require_lattice = true) {
    std::array<Rat, 6> c{};
    std::size_t start = 0;
    for (std::size_t i = 0; i < 6; ++i) {
        auto comma = text.find(',', start);
        bool last = i == 5;
        if (last != (comma == std::string_view::npos))
            throw std::invalid_argument("character must have exactly 6 comma-separated entries: '" +
                                        std::string(text) + "'");
        auto piece = text.substr(start, last ? std::string_view::npos : comma - start);
        c.at(i) = Rat::parse(piece);
        start = comma + 1;
    }
    auto ch = CharVector::from_coords(c);
    if (require_lattice) {
        auto why = ch.lattice_violation();
        if (!why.empty()) throw std::invalid_argument("character " + std::string(text) + ": " + why);
    }
    return ch;
}

namespace detail {

/// Element of the numerical ring in the basis 1 | H, F | H^2, HF | point.
struct RingElement {
    Rat c0;
    Rat h, f;
    Rat hh, hf;
    Rat pt;
};

inline RingElement to_ring(const CharVector& v, const Rat& d) {
    // ch1 = pH + qF: HF.ch1 = p, H^2.ch1 = p d + q.
    // ch2 = xH^2 + yHF: F.ch2 = x, H.ch2 = x d + y.
    return {v.r, v.cHF, v.cHH - v.cHF * d, v.dF, v.dH - v.dF * d, v.e};
}

inline CharVector from_ring(const RingElement& a, const Rat& d) {
    return {a.c0, a.h, a.h * d + a.f, a.hh, a.hh * d + a.hf, a.pt};
}

/// Degree-1 times degree-2 intersection number.
inline Rat pair12(const Rat& h, const Rat& f, const Rat& hh, const Rat& hf, const Rat& d) {
    // H.H^2 = d, H.HF = 1, F.H^2 = 1, F.HF = 0
    return h * hh * d + h * hf + f * hh;
}

inline RingElement multiply(const RingElement& a, const RingElement& b, const Rat& d) {
    RingElement c;
    c.c0 = a.c0 * b.c0;
    c.h = a.c0 * b.h + a.h * b.c0;
    c.f = a.c0 * b.f + a.f * b.c0;
    c.hh = a.c0 * b.hh + a.hh * b.c0 + a.h * b.h;
    c.hf = a.c0 * b.hf + a.hf * b.c0 + a.h * b.f + a.f * b.h;
    c.pt = a.c0 * b.pt + a.pt * b.c0 + pair12(a.h, a.f, b.hh, b.hf, d) + pair12(b.h, b.f, a.hh, a.hf, d);
    return c;
}

}  // namespace detail

struct CanonicalData {
    Rat kH, kF;  // K_X = kH·H + kF·F
    Rat c2H;     // c2(T_X).H
    Rat c2F;     // c2(T_X).F
};

/// K_X = −3H + (2g−2+d)F, c2.H = d − 6g + 6, c2.F = 3.
inline CanonicalData canonical_and_c2(const RuledThreefold& x) {
    const Rat g = x.g(), d = x.d();
    // c1(T_X) = 3H − (2g−2+d)F and c2(T_X) = 3H^2 − (6g−6+2d)HF.
    Rat c2_hh = 3;
    Rat c2_hf = -(Rat(6) * g - 6 + Rat(2) * d);
    return {Rat(-3), Rat(2) * g - 2 + d, c2_hh * d + c2_hf, c2_hh};
}

/// ch(A)·ch(B) truncated at degree 3.
inline CharVector tensor_product_char(const CharVector& a, const CharVector& b, const RuledThreefold& x) {
    const Rat d = x.d();
    return detail::from_ring(detail::multiply(detail::to_ring(a, d), detail::to_ring(b, d), d), d);
}

/// ch(A^∨): signs (+,−,+,−) by degree.
inline CharVector dual_char(const CharVector& a) { return {a.r, -a.cHF, -a.cHH, a.dF, a.dH, -a.e}; }

/// Character of O(aH + bF).
inline CharVector line_bundle_char(long a, long b, const RuledThreefold& x) {
    const Rat A(a), B(b), d = x.d();
    return {Rat(1), A, A * d + B, A * A / 2, A * A * d / 2 + A * B, A * A * A * d / 6 + A * A * B / 2};
}

inline CharVector structure_sheaf_char() { return {1, 0, 0, 0, 0, 0}; }
inline CharVector skyscraper_char() { return {0, 0, 0, 0, 0, 1}; }

/// Character of i_*(A|_W) for W = k fibers: multiply by kF and shift degrees.
inline CharVector fiber_pushforward_char(long k, const CharVector& a) {
    if (k <= 0) throw std::invalid_argument("fiber multiplicity must be positive");
    const Rat K(k);
    return {0, 0, K * a.r, 0, K * a.cHF, K * a.dF};
}

/// χ(ch) by Hirzebruch–Riemann–Roch:
///   χ = ch3 + ½ c1·ch2 + (1/12)(c1²+c2)·ch1 + (1−g) ch0.
inline Rat euler_char(const RuledThreefold& x, const CharVector& ch) {
    const Rat d = x.d(), g = x.g();
    const auto v = detail::to_ring(ch, d);
    const Rat c1h = 3, c1f = -(Rat(2) * g - 2 + d);
    // c1^2 = 9H^2 + 2·3·c1f·HF; c2 = 3H^2 − (6g−6+2d)HF
    const Rat td2_hh = c1h * c1h + 3;
    const Rat td2_hf = Rat(2) * c1h * c1f - (Rat(6) * g - 6 + Rat(2) * d);
    Rat chi = v.pt;
    chi += detail::pair12(c1h, c1f, v.hh, v.hf, d) / 2;
    chi += detail::pair12(v.h, v.f, td2_hh, td2_hf, d) / 12;
    chi += v.c0 * (Rat(1) - g);
    return chi;
}

/// χ(A, B) = χ(A^∨ ⊗ B).
inline Rat euler_char_pair(const RuledThreefold& x, const CharVector& a, const CharVector& b) {
    return euler_char(x, tensor_product_char(dual_char(a), b, x));
}

}  // namespace tiltwall

#endif  // TILTWALL_GEOMETRY_HPP
