#ifndef TILTWALL_SUPPORT_HPP
#define TILTWALL_SUPPORT_HPP

// Quadratic forms on the rank-6 lattice and the support-property search
// for the central charge z_{s,t}. Coordinates are (r, cHF, cHH, dF, dH, e).

#include "tiltwall/chern.hpp"
#include "tiltwall/exactnum.hpp"
#include "tiltwall/geometry.hpp"
#include "tiltwall/inequalities.hpp"
#include "tiltwall/stability.hpp"

#include <algorithm>
#include <future>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace tiltwall {

class QForm6 {
public:
    QForm6() : m_(6, 6) {}
    explicit QForm6(RatMatrix m) : m_(std::move(m)) {
        if (m_.rows() != 6 || !m_.is_symmetric()) throw std::invalid_argument("QForm6 needs a symmetric 6x6 matrix");
    }
    /// Symmetrization of the bilinear form x ↦ Σ coeff·(x·u)(x·v).
    static QForm6 from_products(const std::vector<std::pair<RatVector, RatVector>>& terms,
                                const std::vector<Rat>& coeffs) {
        RatMatrix m(6, 6);
        for (std::size_t k = 0; k < terms.size(); ++k) {
            const auto& [u, v] = terms[k];
            for (std::size_t i = 0; i < 6; ++i)
                for (std::size_t j = 0; j < 6; ++j) m(i, j) += coeffs[k] * (u[i] * v[j] + u[j] * v[i]) / 2;
        }
        return QForm6(std::move(m));
    }

    [[nodiscard]] const RatMatrix& matrix() const { return m_; }
    [[nodiscard]] Rat operator()(const RatVector& v) const { return dot(v, m_.apply(v)); }
    [[nodiscard]] Rat operator()(const CharVector& ch) const { return (*this)(ch.to_vector()); }

    /// The 21 entries on and above the diagonal, row by row.
    [[nodiscard]] std::vector<Rat> upper_entries() const {
        std::vector<Rat> out;
        for (std::size_t i = 0; i < 6; ++i)
            for (std::size_t j = i; j < 6; ++j) out.push_back(m_(i, j));
        return out;
    }

    friend QForm6 operator+(const QForm6& a, const QForm6& b) { return QForm6(a.m_ + b.m_); }
    friend QForm6 operator*(const Rat& s, const QForm6& a) { return QForm6(s * a.m_); }
    friend bool operator==(const QForm6&, const QForm6&) = default;

private:
    RatMatrix m_;
};

struct ChargeFunctionals {
    RatVector re_coeffs;
    RatVector im_coeffs;

    [[nodiscard]] ChargeValue operator()(const CharVector& ch) const {
        const RatVector v = ch.to_vector();
        return {dot(re_coeffs, v), dot(im_coeffs, v)};
    }
    /// 2x6 matrix with rows Re Z, Im Z.
    [[nodiscard]] RatMatrix matrix() const {
        RatMatrix m(2, 6);
        for (std::size_t j = 0; j < 6; ++j) {
            m(0, j) = re_coeffs[j];
            m(1, j) = im_coeffs[j];
        }
        return m;
    }
};

/// z_{s,t} expanded into the untwisted coordinates.
inline ChargeFunctionals charge_functionals(const ChargeParams& p, const RuledThreefold& x) {
    const Rat d = x.d();
    const Rat& a2 = p.alpha2;
    const Rat& b = p.beta;
    const Rat& t = p.t;
    const Rat hf = p.s - a2 * d / 4;  // coefficient of HF.ch1^β in Re Z
    ChargeFunctionals z;
    z.re_coeffs = {
        -b * hf + b * b * b * d / 6 - a2 * b * d / 2,
        hf,
        (a2 - b * b) / 2,
        Rat(0),
        b,
        Rat(-1),
    };
    z.im_coeffs = {
        b * b * d / 2 + t * b * b / 2 - t * a2 / 2,
        -t * b,
        -b,
        t,
        Rat(1),
        Rat(0),
    };
    return z;
}

inline RatMatrix charge_matrix(const ChargeParams& p, const RuledThreefold& x) {
    return charge_functionals(p, x).matrix();
}

/// Symmetrization of b·c − a·d for the functionals of liu_abcd at pt, so
/// that Q(ch) = bg_weak_defect(ch, pt).
inline QForm6 bg_quadratic_form(const TiltPoint& pt, const RuledThreefold& x) {
    RatVector a(6), b(6), c(6), dv(6);
    for (std::size_t i = 0; i < 6; ++i) {
        const LiuFunctionals f = liu_abcd(CharVector::basis(i), pt, x);
        a[i] = f.a;
        b[i] = f.b;
        c[i] = f.c;
        dv[i] = f.d;
    }
    return QForm6::from_products({{b, c}, {a, dv}}, {Rat(1), Rat(-1)});
}

/// cHF² − 2 r dF.
inline QForm6 disc_bar_form() {
    RatMatrix m(6, 6);
    m(1, 1) = 1;
    m(0, 3) = -1;
    m(3, 0) = -1;
    return QForm6(std::move(m));
}

/// Negative definiteness of Q on the span of basis, by leading principal
/// minors of −BᵀMB.
inline bool is_negative_definite_on(const QForm6& q, const std::vector<RatVector>& basis) {
    if (basis.empty()) throw std::invalid_argument("is_negative_definite_on: empty basis");
    const RatMatrix b = RatMatrix::from_columns(basis);
    if (b.rows() != 6) throw std::invalid_argument("is_negative_definite_on: basis vectors need 6 coordinates");
    if (rank(b) != basis.size()) throw std::invalid_argument("is_negative_definite_on: basis is linearly dependent");
    const RatMatrix gram = b.transpose() * q.matrix() * b;
    return is_positive_definite(-gram);
}

/// Classes with semistable representatives on which any support form must
/// be nonnegative: line bundles O(aH + bF) for |a|, |b| <= 3 and
/// pushforwards of those to one or two fibers.
inline std::vector<CharVector> equality_case_fixtures(const RuledThreefold& x) {
    std::vector<CharVector> out;
    for (long a = -3; a <= 3; ++a)
        for (long b = -3; b <= 3; ++b) out.push_back(line_bundle_char(a, b, x));
    for (long k = 1; k <= 2; ++k)
        for (long a = -3; a <= 3; ++a) out.push_back(fiber_pushforward_char(k, line_bundle_char(a, 0, x)));
    return out;
}

struct SupportWitness {
    Rat lambda;
    Rat mu;
    QForm6 form;
};

struct SupportResult {
    std::optional<SupportWitness> witness;
    std::vector<RatVector> kernel;
    std::size_t candidates_tried = 0;
    std::string diagnostic;  // empty when a witness was found
};

/// a, a + step, ..., up to and including b when reached.
inline std::vector<Rat> rat_grid(const Rat& a, const Rat& b, const Rat& step) {
    if (step.sign() <= 0) throw std::invalid_argument("grid step must be positive");
    if (b < a) throw std::invalid_argument("grid end below grid start");
    std::vector<Rat> out;
    for (Rat v = a; v <= b; v += step) out.push_back(v);
    return out;
}

/// A nonzero vector of ker Z on which both Q_BG and Δ̄ vanish, when the
/// sheaf-like class (0, 0, 1, 0, β, (α²+β²)/2) is one. Its existence rules
/// out every member of the μ·Q_BG + λ·Δ̄ family.
inline std::optional<CharVector> common_isotropic_kernel_vector(const ChargeParams& p, const RuledThreefold& x) {
    const CharVector v{0, 0, 1, 0, p.beta, (p.alpha2 + p.beta * p.beta) / 2};
    const ChargeValue z = charge_functionals(p, x)(v);
    if (!z.re.is_zero() || !z.im.is_zero()) return std::nullopt;
    if (!bg_quadratic_form(p.point(), x)(v).is_zero() || !disc_bar_form()(v).is_zero()) return std::nullopt;
    return v;
}

/// Search the (λ, μ) grid, λ outer and μ inner, for Q = μ·Q_BG + λ·Δ̄
/// negative definite on ker Z and nonnegative on the equality-case
/// fixtures. The first witness in grid order is returned.
inline SupportResult verify_support(const ChargeParams& p, const RuledThreefold& x,
                                    const std::vector<Rat>& lambdas, const std::vector<Rat>& mus,
                                    unsigned threads = 0) {
    for (const auto& l : lambdas)
        if (l.sign() < 0) throw std::invalid_argument("lambda candidates must be >= 0");
    for (const auto& m : mus)
        if (m.sign() <= 0) throw std::invalid_argument("mu candidates must be > 0");

    SupportResult res;
    const RatMatrix zm = charge_matrix(p, x);
    res.kernel = kernel_basis(zm);
    if (rank(zm) < 2) {
        res.diagnostic = "degenerate charge: rank " + std::to_string(rank(zm)) + " < 2";
        return res;
    }
    const QForm6 qbg = bg_quadratic_form(p.point(), x);
    const QForm6 qdisc = disc_bar_form();
    const auto fixtures = equality_case_fixtures(x);

    std::vector<std::pair<Rat, Rat>> grid;
    for (const auto& l : lambdas)
        for (const auto& m : mus) grid.emplace_back(l, m);

    auto accepts = [&](const QForm6& q) {
        if (!is_negative_definite_on(q, res.kernel)) return false;
        return std::all_of(fixtures.begin(), fixtures.end(), [&](const CharVector& f) { return q(f).sign() >= 0; });
    };

    if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
    for (std::size_t start = 0; start < grid.size(); start += threads) {
        const std::size_t end = std::min(grid.size(), start + threads);
        std::vector<std::future<bool>> batch;
        for (std::size_t i = start; i < end; ++i) {
            batch.push_back(std::async(std::launch::async, [&, i] {
                return accepts(grid[i].second * qbg + grid[i].first * qdisc);
            }));
        }
        std::vector<bool> ok;
        for (auto& f : batch) ok.push_back(f.get());
        res.candidates_tried = end;
        for (std::size_t i = start; i < end; ++i) {
            if (!ok[i - start]) continue;
            const auto& [l, m] = grid[i];
            res.witness = SupportWitness{l, m, m * qbg + l * qdisc};
            res.candidates_tried = i + 1;
            return res;
        }
    }
    if (auto v = common_isotropic_kernel_vector(p, x))
        res.diagnostic = "inconclusive: ker Z contains " + v->str() +
                         ", on which both Q_BG and disc_bar vanish, so no member of the family is negative definite there";
    else
        res.diagnostic = "inconclusive: no witness in grid";
    return res;
}

/// A random integer combination of the kernel basis with coefficients in
/// [−bound, bound], never the zero combination.
template <class Rng>
RatVector random_kernel_vector(const std::vector<RatVector>& basis, Rng& rng, long bound = 20) {
    std::uniform_int_distribution<long> coef(-bound, bound);
    RatVector v(6, Rat(0));
    bool nonzero = false;
    while (!nonzero) {
        std::fill(v.begin(), v.end(), Rat(0));
        std::vector<long> k(basis.size());
        for (auto& c : k) c = coef(rng);
        nonzero = std::any_of(k.begin(), k.end(), [](long c) { return c != 0; });
        for (std::size_t i = 0; i < basis.size(); ++i)
            for (std::size_t j = 0; j < 6; ++j) v[j] += Rat(k[i]) * basis[i][j];
    }
    return v;
}

/// Independent check of a witness: Q < 0 on `samples` random kernel vectors
/// and Q >= 0 on every fixture.
template <class Rng>
bool reverify_witness(const QForm6& q, const std::vector<RatVector>& kernel, const std::vector<CharVector>& fixtures,
                      Rng& rng, std::size_t samples = 1000) {
    for (std::size_t i = 0; i < samples; ++i)
        if (q(random_kernel_vector(kernel, rng)).sign() >= 0) return false;
    return std::all_of(fixtures.begin(), fixtures.end(), [&](const CharVector& f) { return q(f).sign() >= 0; });
}

}  // namespace tiltwall

#endif  // TILTWALL_SUPPORT_HPP
