#ifndef TILTWALL_TESTS_FIXTURES_HPP
#define TILTWALL_TESTS_FIXTURES_HPP

// Hand-built quadratic forms with known definiteness on a given span.

#include "tiltwall/tiltwall.hpp"

#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace fixtures {

using namespace tiltwall;

struct DefinitenessCase {
    QForm6 q;
    std::vector<RatVector> basis;
    bool expected;
};

inline RatVector unit(std::size_t i) {
    RatVector v(6, Rat(0));
    v[i] = 1;
    return v;
}

inline QForm6 diag(std::initializer_list<long> entries) {
    RatMatrix m(6, 6);
    std::size_t i = 0;
    for (long e : entries) {
        m(i, i) = e;
        ++i;
    }
    return QForm6(m);
}

inline QForm6 with_entry(QForm6 q, std::size_t i, std::size_t j, const Rat& v) {
    RatMatrix m = q.matrix();
    m(i, j) = v;
    m(j, i) = v;
    return QForm6(m);
}

inline std::vector<DefinitenessCase> definiteness() {
    const QForm6 minus_id = diag({-1, -1, -1, -1, -1, -1});
    const QForm6 id = diag({1, 1, 1, 1, 1, 1});
    const std::vector<RatVector> full{unit(0), unit(1), unit(2), unit(3), unit(4), unit(5)};
    RatMatrix hilbert(6, 6);
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 6; ++j) hilbert(i, j) = Rat(-1, static_cast<long>(i + j + 1));
    RatMatrix tri(6, 6);
    for (std::size_t i = 0; i < 6; ++i) {
        tri(i, i) = -2;
        if (i + 1 < 6) tri(i, i + 1) = tri(i + 1, i) = 1;
    }
    RatMatrix tri_bad = tri;
    tri_bad(2, 2) = Rat(-1, 2);  // leading 3x3 minor of the negation turns negative
    return {
        {minus_id, full, true},
        {minus_id, {unit(2)}, true},
        {minus_id, {RatVector{1, 2, 3, 4, 5, 6}, RatVector{0, 1, 0, -1, 0, 1}}, true},
        {id, full, false},
        {id, {unit(4)}, false},
        {diag({-1, -1, 0, 0, 0, 0}), {unit(0), unit(1)}, true},
        {diag({-1, -1, 0, 0, 0, 0}), {unit(0), unit(2)}, false},
        {diag({-1, -1, 0, 0, 0, 0}), {unit(2)}, false},
        {diag({-1, 1, -1, 1, -1, 1}), {unit(0), unit(2), unit(4)}, true},
        {diag({-1, 1, -1, 1, -1, 1}), {unit(0), unit(1)}, false},
        {with_entry(diag({-1, -1, 0, 0, 0, 0}), 0, 1, 2), {unit(0), unit(1)}, false},
        {with_entry(diag({-1, -1, 0, 0, 0, 0}), 0, 1, Rat(1, 2)), {unit(0), unit(1)}, true},
        {with_entry(diag({-1, -1, 0, 0, 0, 0}), 0, 1, 1), {unit(0), unit(1)}, false},  // singular
        {with_entry(QForm6(), 0, 1, 1), {unit(0), unit(1)}, false},                     // hyperbolic plane
        {with_entry(QForm6(), 0, 1, 1), {RatVector{1, -1, 0, 0, 0, 0}}, true},
        {with_entry(QForm6(), 0, 1, 1), {RatVector{1, 1, 0, 0, 0, 0}}, false},
        {QForm6(hilbert), full, true},
        {QForm6(tri), full, true},
        {QForm6(tri_bad), full, false},
        {disc_bar_form(), {line_bundle_char(1, 2, RuledThreefold(0, 3)).to_vector()}, false},
        {disc_bar_form(), {unit(0), unit(3)}, false},
        {disc_bar_form(), {RatVector{1, 0, 0, 1, 0, 0}}, true},  // Δ̄ = −2
        {disc_bar_form(), {unit(2), unit(4), unit(5)}, false},
        {-1 * disc_bar_form() + diag({-1, 0, 0, -1, 0, 0}), {unit(0), unit(3)}, false},
    };
}

/// K·|Z|² − |v|²: negative on ker Z, with K raised until every
/// equality-case fixture is nonnegative.
inline QForm6 kernel_certificate(const ChargeParams& p, const RuledThreefold& x) {
    const auto f = charge_functionals(p, x);
    const QForm6 zz = QForm6::from_products({{f.re_coeffs, f.re_coeffs}, {f.im_coeffs, f.im_coeffs}}, {1, 1});
    const QForm6 minus_id = diag({-1, -1, -1, -1, -1, -1});
    Rat k = 1;
    for (const auto& ch : equality_case_fixtures(x)) {
        const Rat z2 = zz(ch);
        if (z2.sign() <= 0) throw std::logic_error("fixture with Z = 0");
        const Rat need = -minus_id(ch) / z2;
        if (need > k) k = need;
    }
    return k * zz + minus_id;
}

}  // namespace fixtures

#endif  // TILTWALL_TESTS_FIXTURES_HPP
