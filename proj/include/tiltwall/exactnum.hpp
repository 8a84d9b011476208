#ifndef TILTWALL_EXACTNUM_HPP
#define TILTWALL_EXACTNUM_HPP

// Exact scalars (Rat, QuadRat, ExtRat) and small exact linear algebra.
// Everything here is backed by GMP; there is no floating point on any
// decision path. to_double() exists only for rendering.

#include <gmpxx.h>

#include <cmath>
#include <compare>
#include <cstddef>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tiltwall {

/// Rational number in lowest terms with positive denominator.
class Rat {
public:
    Rat() = default;
    Rat(long n) : v_(n) {}  // NOLINT(google-explicit-constructor)
    Rat(int n) : v_(static_cast<long>(n)) {}  // NOLINT(google-explicit-constructor)
    explicit Rat(const mpz_class& n) : v_(n) {}
    Rat(const mpz_class& num, const mpz_class& den) {
        if (den == 0) throw std::domain_error("rational with zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }
    Rat(long num, long den) : Rat(mpz_class(num), mpz_class(den)) {}
    explicit Rat(const mpq_class& q) : v_(q) { v_.canonicalize(); }

    /// Parses "p/q" or "p" (optional leading '-' or '+', base 10, no spaces).
    static Rat parse(std::string_view text) {
        auto fail = [&]() -> Rat {
            throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
        };
        if (text.empty()) return fail();
        auto is_int = [](std::string_view s) {
            std::size_t i = 0;
            if (!s.empty() && (s[0] == '-' || s[0] == '+')) i = 1;
            if (i == s.size()) return false;
            for (; i < s.size(); ++i)
                if (s[i] < '0' || s[i] > '9') return false;
            return true;
        };
        auto to_mpz = [](std::string_view s) {
            if (!s.empty() && s[0] == '+') s.remove_prefix(1);
            return mpz_class(std::string(s), 10);
        };
        auto slash = text.find('/');
        if (slash == std::string_view::npos) {
            if (!is_int(text)) return fail();
            return Rat(to_mpz(text));
        }
        auto num = text.substr(0, slash);
        auto den = text.substr(slash + 1);
        if (!is_int(num) || den.empty() || den[0] == '-' || den[0] == '+' || !is_int(den))
            return fail();
        mpz_class d = to_mpz(den);
        if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
        return Rat(to_mpz(num), d);
    }

    [[nodiscard]] mpz_class num() const { return v_.get_num(); }
    [[nodiscard]] mpz_class den() const { return v_.get_den(); }
    [[nodiscard]] const mpq_class& raw() const { return v_; }
    [[nodiscard]] int sign() const { return sgn(v_); }
    [[nodiscard]] bool is_zero() const { return sign() == 0; }
    [[nodiscard]] bool is_integer() const { return v_.get_den() == 1; }
    [[nodiscard]] double to_double() const { return v_.get_d(); }

    [[nodiscard]] std::string str() const {
        if (is_integer()) return v_.get_num().get_str();
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

    [[nodiscard]] Rat abs() const { return Rat(mpq_class(::abs(v_))); }

    /// Largest integer <= this.
    [[nodiscard]] mpz_class floor() const {
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
        return q;
    }
    /// Smallest integer >= this.
    [[nodiscard]] mpz_class ceil() const {
        mpz_class q;
        mpz_cdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
        return q;
    }

    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o) {
        if (o.is_zero()) throw std::domain_error("division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
    friend Rat operator-(const Rat& a) { return Rat(mpq_class(-a.v_)); }

    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
        int c = cmp(a.v_, b.v_);
        if (c < 0) return std::strong_ordering::less;
        if (c > 0) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

private:
    mpq_class v_{0};
};

inline Rat pow(const Rat& x, unsigned k) {
    Rat out = 1;
    for (unsigned i = 0; i < k; ++i) out *= x;
    return out;
}

/// The rational square root of x if x is the square of a rational.
inline std::optional<Rat> exact_sqrt(const Rat& x) {
    if (x.sign() < 0) return std::nullopt;
    mpz_class n = x.num(), d = x.den();
    if (mpz_perfect_square_p(n.get_mpz_t()) == 0 || mpz_perfect_square_p(d.get_mpz_t()) == 0)
        return std::nullopt;
    mpz_class sn, sd;
    mpz_sqrt(sn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(sd.get_mpz_t(), d.get_mpz_t());
    return Rat(sn, sd);
}

/// Number a + b*sqrt(D) with a single radicand D >= 0.
///
/// The radicand is normalized to a non-square positive integer (or 0 with
/// b = 0 for rational values), so two values in the same quadratic field
/// always carry the same radicand. Arithmetic across different radicands
/// throws std::domain_error.
class QuadRat {
public:
    QuadRat() = default;
    QuadRat(Rat a) : a_(std::move(a)) {}  // NOLINT(google-explicit-constructor)
    QuadRat(long a) : a_(a) {}            // NOLINT(google-explicit-constructor)
    QuadRat(Rat a, Rat b, const Rat& radicand) : a_(std::move(a)), b_(std::move(b)) {
        if (radicand.sign() < 0) throw std::domain_error("negative radicand");
        if (b_.is_zero() || radicand.is_zero()) {
            b_ = 0;
            return;
        }
        if (auto s = exact_sqrt(radicand)) {
            a_ += b_ * *s;
            b_ = 0;
            return;
        }
        // sqrt(p/q) = sqrt(p*q)/q; then pull out square factors of small primes.
        mpz_class n = radicand.num() * radicand.den();
        b_ /= Rat(radicand.den());
        mpz_class outside = 1;
        for (unsigned long p : {2UL, 3UL, 5UL, 7UL, 11UL, 13UL, 17UL, 19UL, 23UL, 29UL, 31UL, 37UL, 41UL, 43UL, 47UL}) {
            mpz_class pp = p * p;
            while (mpz_divisible_p(n.get_mpz_t(), pp.get_mpz_t()) != 0) {
                n /= pp;
                outside *= p;
            }
        }
        b_ *= Rat(outside);
        d_ = n;
    }

    /// sqrt(x) for rational x >= 0.
    static QuadRat sqrt(const Rat& x) { return QuadRat(Rat(0), Rat(1), x); }

    [[nodiscard]] const Rat& rational_part() const { return a_; }
    [[nodiscard]] const Rat& irrational_coeff() const { return b_; }
    [[nodiscard]] const mpz_class& radicand() const { return d_; }
    [[nodiscard]] bool is_rational() const { return b_.is_zero(); }
    [[nodiscard]] std::optional<Rat> as_rational() const {
        if (is_rational()) return a_;
        return std::nullopt;
    }

    [[nodiscard]] QuadRat conjugate() const {
        QuadRat c = *this;
        c.b_ = -c.b_;
        return c;
    }
    /// (a+b√D)(a−b√D) = a² − b²D.
    [[nodiscard]] Rat norm() const { return a_ * a_ - b_ * b_ * Rat(d_); }

    /// Exact sign by case analysis on the signs of a and b.
    [[nodiscard]] int sign() const {
        int sa = a_.sign();
        int sb = b_.sign();
        if (sb == 0) return sa;
        if (sa == 0) return sb;
        if (sa == sb) return sa;
        Rat lhs = a_ * a_;
        Rat rhs = b_ * b_ * Rat(d_);
        if (lhs > rhs) return sa;
        if (lhs < rhs) return sb;
        return 0;
    }

    /// Rational interval [lo, hi] containing the value, of width <= 2^-bits * |b|.
    [[nodiscard]] std::pair<Rat, Rat> bounds(unsigned bits = 32) const {
        if (is_rational()) return {a_, a_};
        mpz_class scale = mpz_class(1) << bits;
        mpz_class scaled = d_ * scale * scale;
        mpz_class root;
        mpz_sqrt(root.get_mpz_t(), scaled.get_mpz_t());
        Rat lo_sqrt(root, scale);
        Rat hi_sqrt(root + 1, scale);
        Rat x = a_ + b_ * lo_sqrt;
        Rat y = a_ + b_ * hi_sqrt;
        if (x > y) std::swap(x, y);
        return {x, y};
    }

    [[nodiscard]] double to_double() const {
        return a_.to_double() + b_.to_double() * std::sqrt(d_.get_d());
    }

    [[nodiscard]] std::string str() const {
        if (is_rational()) return a_.str();
        std::string s;
        if (!a_.is_zero()) s = a_.str() + (b_.sign() > 0 ? " + " : " - ");
        else if (b_.sign() < 0) s = "-";
        Rat mag = b_.abs();
        if (mag != Rat(1)) s += mag.str() + "*";
        return s + "sqrt(" + d_.get_str() + ")";
    }

    QuadRat& operator+=(const QuadRat& o) {
        const QuadRat y = in_field_of(o);
        if (is_rational()) d_ = y.d_;
        a_ += y.a_;
        b_ += y.b_;
        normalize();
        return *this;
    }
    QuadRat& operator-=(const QuadRat& o) { return *this += -o; }
    QuadRat& operator*=(const QuadRat& o) {
        const QuadRat y = in_field_of(o);
        mpz_class d = is_rational() ? y.d_ : d_;
        Rat a = a_ * y.a_ + b_ * y.b_ * Rat(d);
        Rat b = a_ * y.b_ + b_ * y.a_;
        a_ = std::move(a);
        b_ = std::move(b);
        d_ = d;
        normalize();
        return *this;
    }
    QuadRat& operator/=(const QuadRat& o) {
        Rat n = o.norm();
        if (n.is_zero()) throw std::domain_error("division by zero");
        *this *= o.conjugate();
        a_ /= n;
        b_ /= n;
        normalize();
        return *this;
    }

    friend QuadRat operator+(QuadRat x, const QuadRat& y) { return x += y; }
    friend QuadRat operator-(QuadRat x, const QuadRat& y) { return x -= y; }
    friend QuadRat operator*(QuadRat x, const QuadRat& y) { return x *= y; }
    friend QuadRat operator/(QuadRat x, const QuadRat& y) { return x /= y; }
    friend QuadRat operator-(QuadRat x) {
        x.a_ = -x.a_;
        x.b_ = -x.b_;
        return x;
    }

    friend bool operator==(const QuadRat& x, const QuadRat& y) { return (x - y).sign() == 0; }
    /// Ordering within one quadratic field; throws on mixed radicands.
    friend std::strong_ordering operator<=>(const QuadRat& x, const QuadRat& y) {
        int s = (x - y).sign();
        if (s < 0) return std::strong_ordering::less;
        if (s > 0) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    friend std::ostream& operator<<(std::ostream& os, const QuadRat& q) { return os << q.str(); }

private:
    /// o rewritten over this value's radicand: √D' = (√(D D')/D)·√D when D D'
    /// is a square. Throws when the two fields differ.
    [[nodiscard]] QuadRat in_field_of(const QuadRat& o) const {
        if (is_rational() || o.is_rational() || d_ == o.d_) return o;
        mpz_class prod = d_ * o.d_;
        if (mpz_perfect_square_p(prod.get_mpz_t()) == 0)
            throw std::domain_error("QuadRat arithmetic across different radicands");
        mpz_class root;
        mpz_sqrt(root.get_mpz_t(), prod.get_mpz_t());
        QuadRat y = o;
        y.b_ = o.b_ * Rat(root, d_);
        y.d_ = d_;
        return y;
    }
    void normalize() {
        if (b_.is_zero()) d_ = 0;
    }

    Rat a_{0};
    Rat b_{0};
    mpz_class d_{0};
};

/// A finite rational or +∞. Arithmetic on +∞ is rejected.
class ExtRat {
public:
    ExtRat() = default;  // +∞
    ExtRat(Rat v) : v_(std::move(v)) {}  // NOLINT(google-explicit-constructor)
    ExtRat(long v) : v_(Rat(v)) {}       // NOLINT(google-explicit-constructor)

    static ExtRat infinity() { return ExtRat(); }

    [[nodiscard]] bool is_infinite() const { return !v_.has_value(); }
    [[nodiscard]] bool is_finite() const { return v_.has_value(); }
    [[nodiscard]] const Rat& value() const {
        if (!v_) throw std::domain_error("value of +inf requested");
        return *v_;
    }
    [[nodiscard]] std::string str() const { return v_ ? v_->str() : "inf"; }

    /// Parses a Rat or "inf".
    static ExtRat parse(std::string_view s) {
        if (s == "inf" || s == "+inf") return infinity();
        return Rat::parse(s);
    }

    friend ExtRat operator+(const ExtRat& x, const ExtRat& y) { return x.value() + y.value(); }
    friend ExtRat operator-(const ExtRat& x, const ExtRat& y) { return x.value() - y.value(); }
    friend ExtRat operator*(const ExtRat& x, const ExtRat& y) { return x.value() * y.value(); }
    friend ExtRat operator/(const ExtRat& x, const ExtRat& y) { return x.value() / y.value(); }

    friend bool operator==(const ExtRat& x, const ExtRat& y) { return x.v_ == y.v_; }
    friend std::strong_ordering operator<=>(const ExtRat& x, const ExtRat& y) {
        if (x.is_infinite() || y.is_infinite()) {
            if (x.is_infinite() && y.is_infinite()) return std::strong_ordering::equal;
            return x.is_infinite() ? std::strong_ordering::greater : std::strong_ordering::less;
        }
        return *x.v_ <=> *y.v_;
    }

    friend std::ostream& operator<<(std::ostream& os, const ExtRat& e) { return os << e.str(); }

private:
    std::optional<Rat> v_;
};

using RatVector = std::vector<Rat>;

inline Rat dot(const RatVector& x, const RatVector& y) {
    if (x.size() != y.size()) throw std::invalid_argument("dot: size mismatch");
    Rat s = 0;
    for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
    return s;
}

/// Dense row-major matrix of rationals, intended for small sizes.
class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, Rat(0)) {}
    RatMatrix(std::initializer_list<std::initializer_list<Rat>> init) {
        rows_ = init.size();
        cols_ = rows_ ? init.begin()->size() : 0;
        for (const auto& row : init) {
            if (row.size() != cols_) throw std::invalid_argument("ragged matrix initializer");
            a_.insert(a_.end(), row.begin(), row.end());
        }
    }
    static RatMatrix identity(std::size_t n) {
        RatMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }
    /// Matrix whose columns are the given vectors.
    static RatMatrix from_columns(const std::vector<RatVector>& cols) {
        if (cols.empty()) return {};
        RatMatrix m(cols.front().size(), cols.size());
        for (std::size_t j = 0; j < cols.size(); ++j) {
            if (cols[j].size() != m.rows_) throw std::invalid_argument("column size mismatch");
            for (std::size_t i = 0; i < m.rows_; ++i) m(i, j) = cols[j][i];
        }
        return m;
    }

    [[nodiscard]] std::size_t rows() const { return rows_; }
    [[nodiscard]] std::size_t cols() const { return cols_; }
    Rat& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    [[nodiscard]] const Rat& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    [[nodiscard]] RatMatrix transpose() const {
        RatMatrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }
    [[nodiscard]] bool is_square() const { return rows_ == cols_; }
    [[nodiscard]] bool is_symmetric() const {
        if (!is_square()) return false;
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = i + 1; j < cols_; ++j)
                if ((*this)(i, j) != (*this)(j, i)) return false;
        return true;
    }
    [[nodiscard]] RatMatrix leading_block(std::size_t k) const {
        RatMatrix b(k, k);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) b(i, j) = (*this)(i, j);
        return b;
    }
    [[nodiscard]] RatVector apply(const RatVector& v) const {
        if (v.size() != cols_) throw std::invalid_argument("apply: size mismatch");
        RatVector out(rows_, Rat(0));
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
        return out;
    }

    friend RatMatrix operator*(const RatMatrix& x, const RatMatrix& y) {
        if (x.cols_ != y.rows_) throw std::invalid_argument("matrix product: size mismatch");
        RatMatrix p(x.rows_, y.cols_);
        for (std::size_t i = 0; i < x.rows_; ++i)
            for (std::size_t k = 0; k < x.cols_; ++k) {
                if (x(i, k).is_zero()) continue;
                for (std::size_t j = 0; j < y.cols_; ++j) p(i, j) += x(i, k) * y(k, j);
            }
        return p;
    }
    friend RatMatrix operator+(RatMatrix x, const RatMatrix& y) {
        if (x.rows_ != y.rows_ || x.cols_ != y.cols_) throw std::invalid_argument("matrix sum: size mismatch");
        for (std::size_t i = 0; i < x.a_.size(); ++i) x.a_[i] += y.a_[i];
        return x;
    }
    friend RatMatrix operator*(const Rat& s, RatMatrix x) {
        for (auto& e : x.a_) e *= s;
        return x;
    }
    friend RatMatrix operator-(const RatMatrix& x) { return Rat(-1) * x; }
    friend bool operator==(const RatMatrix&, const RatMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rat> a_;
};

namespace detail {

using IntMatrix = std::vector<std::vector<mpz_class>>;

/// Scales every row by the lcm of its denominators. Row scaling by positive
/// factors preserves rank, kernel, and the signs of leading principal minors.
inline IntMatrix clear_denominators(const RatMatrix& m, mpz_class* det_scale = nullptr) {
    IntMatrix out(m.rows(), std::vector<mpz_class>(m.cols()));
    if (det_scale) *det_scale = 1;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        mpz_class l = 1;
        for (std::size_t j = 0; j < m.cols(); ++j) {
            mpz_class d = m(i, j).den();
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
        }
        for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j).num() * (l / m(i, j).den());
        if (det_scale) *det_scale *= l;
    }
    return out;
}

struct Echelon {
    IntMatrix a;
    std::vector<std::size_t> pivot_cols;
    int swaps = 0;
};

/// Bareiss fraction-free elimination to row echelon form with row pivoting.
/// Every division is exact.
inline Echelon bareiss_echelon(IntMatrix a, std::size_t cols) {
    Echelon e;
    const std::size_t rows = a.size();
    mpz_class prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c] == 0) ++p;
        if (p == rows) continue;
        if (p != r) {
            std::swap(a[p], a[r]);
            ++e.swaps;
        }
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                mpz_class v = a[r][c] * a[i][j] - a[i][c] * a[r][j];
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                a[i][j] = v;
            }
            a[i][c] = 0;
        }
        prev = a[r][c];
        e.pivot_cols.push_back(c);
        ++r;
    }
    e.a = std::move(a);
    return e;
}

}  // namespace detail

inline std::size_t rank(const RatMatrix& m) {
    return detail::bareiss_echelon(detail::clear_denominators(m), m.cols()).pivot_cols.size();
}

inline Rat determinant(const RatMatrix& m) {
    if (!m.is_square()) throw std::invalid_argument("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    mpz_class scale;
    auto e = detail::bareiss_echelon(detail::clear_denominators(m, &scale), n);
    if (e.pivot_cols.size() < n) return 0;
    // With Bareiss, the last pivot is the determinant of the scaled matrix.
    mpz_class d = e.a[n - 1][n - 1];
    if (e.swaps % 2 != 0) d = -d;
    return Rat(d, scale);
}

/// Determinants of the k×k leading blocks, k = 1..n.
inline std::vector<Rat> leading_principal_minors(const RatMatrix& m) {
    if (!m.is_square()) throw std::invalid_argument("minors of a non-square matrix");
    std::vector<Rat> out;
    for (std::size_t k = 1; k <= m.rows(); ++k) out.push_back(determinant(m.leading_block(k)));
    return out;
}

/// Sylvester's criterion, exact. Throws on non-symmetric input.
inline bool is_positive_definite(const RatMatrix& m) {
    if (!m.is_symmetric()) throw std::invalid_argument("is_positive_definite: matrix is not symmetric");
    for (std::size_t k = 1; k <= m.rows(); ++k)
        if (determinant(m.leading_block(k)).sign() <= 0) return false;
    return true;
}

/// Basis of {v : M v = 0}. One vector per free column of the reduced row
/// echelon form: 1 in its own free coordinate, 0 in the other free
/// coordinates. The result is therefore canonical for a given M.
inline std::vector<RatVector> kernel_basis(const RatMatrix& m) {
    const std::size_t cols = m.cols();
    auto e = detail::bareiss_echelon(detail::clear_denominators(m), cols);
    const std::size_t rk = e.pivot_cols.size();

    // Back-substitute to reduced form over Q.
    std::vector<RatVector> rref(rk, RatVector(cols, Rat(0)));
    for (std::size_t i = 0; i < rk; ++i) {
        Rat piv(e.a[i][e.pivot_cols[i]]);
        for (std::size_t j = 0; j < cols; ++j) rref[i][j] = Rat(e.a[i][j]) / piv;
    }
    for (std::size_t i = rk; i-- > 0;) {
        std::size_t pc = e.pivot_cols[i];
        for (std::size_t k = 0; k < i; ++k) {
            Rat f = rref[k][pc];
            if (f.is_zero()) continue;
            for (std::size_t j = 0; j < cols; ++j) rref[k][j] -= f * rref[i][j];
        }
    }

    std::vector<bool> is_pivot(cols, false);
    for (auto c : e.pivot_cols) is_pivot[c] = true;
    std::vector<RatVector> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        RatVector v(cols, Rat(0));
        v[f] = 1;
        for (std::size_t i = 0; i < rk; ++i) v[e.pivot_cols[i]] = -rref[i][f];
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace tiltwall

#endif  // TILTWALL_EXACTNUM_HPP
