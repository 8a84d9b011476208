#ifndef TILTWALL_WALLS_HPP
#define TILTWALL_WALLS_HPP

// Numerical walls for the tilt slope in the (β, α) half plane. Points are
// addressed by (α², β); a semicircle is stored as (center, radius²).

#include "tiltwall/chern.hpp"
#include "tiltwall/exactnum.hpp"
#include "tiltwall/stability.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <optional>
#include <stdexcept>
#include <thread>
#include <utility>
#include <vector>

namespace tiltwall {

class Wall {
public:
    enum class Kind { vertical, semicircle };

    static Wall vertical(Rat beta) { return Wall(Kind::vertical, std::move(beta), Rat(0)); }
    static Wall semicircle(Rat center, Rat radius_sq) {
        if (radius_sq.sign() <= 0) throw std::invalid_argument("semicircle wall needs radius^2 > 0");
        return Wall(Kind::semicircle, std::move(center), std::move(radius_sq));
    }

    [[nodiscard]] Kind kind() const { return kind_; }
    [[nodiscard]] bool is_vertical() const { return kind_ == Kind::vertical; }
    [[nodiscard]] bool is_semicircle() const { return kind_ == Kind::semicircle; }
    /// β of a vertical wall.
    [[nodiscard]] const Rat& beta() const {
        if (!is_vertical()) throw std::logic_error("beta() of a semicircle wall");
        return pos_;
    }
    [[nodiscard]] const Rat& center() const {
        if (!is_semicircle()) throw std::logic_error("center() of a vertical wall");
        return pos_;
    }
    [[nodiscard]] const Rat& radius_sq() const {
        if (!is_semicircle()) throw std::logic_error("radius_sq() of a vertical wall");
        return radius_sq_;
    }
    [[nodiscard]] const char* type_name() const { return is_vertical() ? "vertical" : "semicircle"; }

    friend bool operator==(const Wall&, const Wall&) = default;

    /// Output order: vertical walls by β, then semicircles by descending
    /// radius² and ascending center.
    friend bool operator<(const Wall& a, const Wall& b) {
        if (a.kind_ != b.kind_) return a.is_vertical();
        if (a.is_vertical()) return a.pos_ < b.pos_;
        if (a.radius_sq_ != b.radius_sq_) return a.radius_sq_ > b.radius_sq_;
        return a.pos_ < b.pos_;
    }

private:
    Wall(Kind k, Rat pos, Rat r2) : kind_(k), pos_(std::move(pos)), radius_sq_(std::move(r2)) {}

    Kind kind_;
    Rat pos_;
    Rat radius_sq_;
};

/// Locus of ν(u) = ν(w): empty, the whole half plane (proportional
/// classes), or a proper wall.
struct NumericalWall {
    enum class Kind { none, everywhere, proper };
    Kind kind = Kind::none;
    std::optional<Wall> wall;

    [[nodiscard]] bool is_proper() const { return kind == Kind::proper; }
};

/// The wall is (χ/2)(α² + β²) − ψβ + ω = 0 with
///   χ = r_u c_w − r_w c_u, ψ = r_u d_w − r_w d_u, ω = c_u d_w − c_w d_u.
inline NumericalWall numerical_wall(const ReducedClass& u, const ReducedClass& w) {
    const Rat chi = u.r * w.c - w.r * u.c;
    const Rat psi = u.r * w.dd - w.r * u.dd;
    const Rat omega = u.c * w.dd - w.c * u.dd;
    NumericalWall out;
    if (!chi.is_zero()) {
        Rat center = psi / chi;
        Rat r2 = center * center - Rat(2) * omega / chi;
        if (r2.sign() > 0) {
            out.kind = NumericalWall::Kind::proper;
            out.wall = Wall::semicircle(std::move(center), std::move(r2));
        }
        return out;
    }
    if (!psi.is_zero()) {
        out.kind = NumericalWall::Kind::proper;
        out.wall = Wall::vertical(omega / psi);
        return out;
    }
    if (omega.is_zero()) out.kind = NumericalWall::Kind::everywhere;
    return out;
}

inline bool wall_contains(const Wall& wall, const TiltPoint& pt) {
    if (wall.is_vertical()) return pt.beta == wall.beta();
    const Rat dx = pt.beta - wall.center();
    return dx * dx + pt.alpha2 == wall.radius_sq();
}

/// Whether the wall meets the vertical ray through pt at or above pt.
inline bool wall_passes_through_or_above(const Wall& wall, const TiltPoint& pt) {
    if (wall.is_vertical()) return pt.beta == wall.beta();
    const Rat dx = pt.beta - wall.center();
    return dx * dx + pt.alpha2 <= wall.radius_sq();
}

/// The semicircle through pt on which u keeps β + ν(u) fixed: center
/// β + ν, radius² α² + ν².
inline Wall circle_through(const ReducedClass& u, const TiltPoint& pt) {
    const ExtRat slope = nu(u, pt);
    if (slope.is_infinite()) throw std::domain_error("circle_through: tilt slope is +inf");
    const Rat& v = slope.value();
    return Wall::semicircle(pt.beta + v, pt.alpha2 + v * v);
}

/// Whether two walls share a point with α > 0.
inline bool walls_intersect(const Wall& a, const Wall& b) {
    if (a.is_vertical() && b.is_vertical()) return a.beta() == b.beta();
    if (a.is_vertical() || b.is_vertical()) {
        const Wall& v = a.is_vertical() ? a : b;
        const Wall& s = a.is_vertical() ? b : a;
        const Rat dx = v.beta() - s.center();
        return (s.radius_sq() - dx * dx).sign() > 0;
    }
    if (a.center() == b.center()) return a.radius_sq() == b.radius_sq();
    // Radical line of the two circles, then height above the β-axis.
    const Rat beta0 = (a.radius_sq() - b.radius_sq() + b.center() * b.center() - a.center() * a.center()) /
                      (Rat(2) * (b.center() - a.center()));
    const Rat dx = beta0 - a.center();
    return (a.radius_sq() - dx * dx).sign() > 0;
}

/// 0 <= HF.ch1^β(w) <= HF.ch1^β(u) at every point of the wall. Both sides
/// are linear in β, so the closed β-interval of the wall is checked at its
/// two endpoints, which are quadratic irrationals for a semicircle.
inline bool positivity_window_holds(const ReducedClass& u, const ReducedClass& w, const Wall& wall) {
    auto ok_at = [&](const QuadRat& beta) {
        const QuadRat fw = QuadRat(w.c) - beta * QuadRat(w.r);
        const QuadRat fu = QuadRat(u.c) - beta * QuadRat(u.r);
        return fw.sign() >= 0 && (fu - fw).sign() >= 0;
    };
    if (wall.is_vertical()) return ok_at(QuadRat(wall.beta()));
    const QuadRat radius = QuadRat::sqrt(wall.radius_sq());
    const QuadRat c(wall.center());
    return ok_at(c - radius) && ok_at(c + radius);
}

/// All conditions a destabilizing class w of u must satisfy, apart from the
/// rank bound.
inline std::optional<Wall> destabilizing_wall(const ReducedClass& u, const ReducedClass& w) {
    const Rat du = disc_bar(u);
    const Rat dw = disc_bar(w);
    const Rat dq = disc_bar(u - w);
    if (dw.sign() < 0 || dq.sign() < 0 || dw + dq > du) return std::nullopt;
    NumericalWall nw = numerical_wall(u, w);
    if (!nw.is_proper()) return std::nullopt;
    if (!positivity_window_holds(u, w, *nw.wall)) return std::nullopt;
    return nw.wall;
}

struct WallHit {
    Wall wall;
    std::vector<ReducedClass> classes;  // every destabilizing w on this wall, sorted
};

struct Enumeration {
    std::vector<WallHit> hits;         // one entry per distinct wall, in Wall order
    bool discriminant_negative = false;  // Δ̄(u) < 0: no tilt-semistable class u exists

    [[nodiscard]] std::size_t class_count() const {
        std::size_t n = 0;
        for (const auto& h : hits) n += h.classes.size();
        return n;
    }
};

namespace detail {

/// Closed interval of d_w allowed by Δ̄(w) >= 0, Δ̄(u−w) >= 0 and
/// Δ̄(w) + Δ̄(u−w) <= Δ̄(u), for fixed r_w and c_w. Each is linear in d_w.
inline std::optional<std::pair<Rat, Rat>> d_range(const ReducedClass& u, const Rat& rw, const Rat& cw) {
    struct Lin { Rat k, c; };  // k·d + c >= 0
    const Lin cons[3] = {
        {Rat(-2) * rw, cw * cw},
        {Rat(2) * (u.r - rw), (u.c - cw) * (u.c - cw) - Rat(2) * (u.r - rw) * u.dd},
        {Rat(2) * rw - u.r, u.c * cw - rw * u.dd - cw * cw},
    };
    std::optional<Rat> lo, hi;
    for (const auto& l : cons) {
        if (l.k.is_zero()) {
            if (l.c.sign() < 0) return std::nullopt;
            continue;
        }
        Rat bound = -l.c / l.k;
        if (l.k.sign() > 0) {
            if (!lo || bound > *lo) lo = bound;
        } else {
            if (!hi || bound < *hi) hi = bound;
        }
    }
    if (!lo || !hi) throw std::logic_error("unbounded d-range for " + u.str());
    if (*lo > *hi) return std::nullopt;
    return std::make_pair(*lo, *hi);
}

/// Integer c_w candidates for one r_w.
inline std::vector<mpz_class> c_candidates(const ReducedClass& u, long rw) {
    std::vector<mpz_class> out;
    auto push_range = [&](const QuadRat& lo, const QuadRat& hi) {
        mpz_class a = lo.bounds().first.floor();
        mpz_class b = hi.bounds().second.ceil();
        for (mpz_class c = a; c <= b; ++c) out.push_back(c);
    };
    const Rat RW(rw);
    if (!u.r.is_zero()) {
        // Semicircular walls of u are nested around the limit point β̄(u);
        // at that point HF.ch1^β(u) = √Δ̄(u), which bounds HF.ch1^β(w).
        const QuadRat anchor = beta_bar(u);
        const QuadRat base = anchor * QuadRat(RW);
        push_range(base, base + QuadRat::sqrt(disc_bar(u)));
        // Vertical wall at β = μ(u): HF.ch1^μ(w) = 0.
        const Rat cv = RW * u.c / u.r;
        if (cv.is_integer()) out.push_back(cv.num());
    } else if (u.c.sign() > 0 && rw != 0) {
        // Walls are concentric about β0 = d_u / c_u, where 0 <= c_w − β0 r_w <= c_u.
        const Rat base = u.dd / u.c * RW;
        push_range(QuadRat(base), QuadRat(base + u.c));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

inline std::vector<std::pair<Wall, ReducedClass>> scan_rank(const ReducedClass& u, long rw,
                                                            const std::optional<TiltPoint>& region) {
    std::vector<std::pair<Wall, ReducedClass>> found;
    const Rat RW(rw);
    for (const auto& c : c_candidates(u, rw)) {
        const Rat cw(c);
        auto range = d_range(u, RW, cw);
        if (!range) continue;
        const mpz_class k_lo = (Rat(2) * range->first).ceil();
        const mpz_class k_hi = (Rat(2) * range->second).floor();
        for (mpz_class k = k_lo; k <= k_hi; ++k) {
            ReducedClass w{RW, cw, Rat(k, mpz_class(2))};
            auto wall = destabilizing_wall(u, w);
            if (!wall) continue;
            if (region && !wall_passes_through_or_above(*wall, *region)) continue;
            found.emplace_back(std::move(*wall), w);
        }
    }
    return found;
}

}  // namespace detail

/// Every class w with |r_w| <= rank_bound that can destabilize a
/// tilt-semistable object of class u along a wall: Δ̄(w), Δ̄(u−w) >= 0,
/// Δ̄(w) + Δ̄(u−w) <= Δ̄(u), a proper numerical wall, and
/// 0 <= HF.ch1^β(w) <= HF.ch1^β(u) along the whole wall. When region is
/// given, only walls through or above that point are kept.
///
/// Completeness is relative to rank_bound only: for each rank the c and d
/// ranges are derived from the constraints themselves. threads = 0 uses the
/// hardware concurrency.
inline Enumeration enumerate_destabilizers(const ReducedClass& u, long rank_bound,
                                           const std::optional<TiltPoint>& region = std::nullopt,
                                           unsigned threads = 0) {
    if (rank_bound <= 0) throw std::invalid_argument("rank bound must be positive");
    Enumeration result;
    const Rat du = disc_bar(u);
    if (du.sign() < 0) {
        // Two non-negative discriminants cannot sum to at most a negative one.
        result.discriminant_negative = true;
        return result;
    }
    if (u.is_zero()) return result;
    // With ch0 = 0, HF.ch1^β(u) = c_u is constant; c_u < 0 leaves no room for
    // the positivity window and c_u = 0 forces every wall to be degenerate.
    if (u.r.is_zero() && u.c.sign() <= 0) return result;

    if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
    const long n_ranks = 2 * rank_bound + 1;
    threads = static_cast<unsigned>(std::min<long>(threads, n_ranks));

    std::vector<std::future<std::vector<std::pair<Wall, ReducedClass>>>> jobs;
    for (unsigned t = 0; t < threads; ++t) {
        jobs.push_back(std::async(std::launch::async, [&, t] {
            std::vector<std::pair<Wall, ReducedClass>> out;
            for (long i = t; i < n_ranks; i += threads) {
                auto part = detail::scan_rank(u, i - rank_bound, region);
                out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
            }
            return out;
        }));
    }
    std::map<Wall, std::vector<ReducedClass>> grouped;
    for (auto& j : jobs)
        for (auto& [wall, w] : j.get()) grouped[wall].push_back(std::move(w));
    for (auto& [wall, classes] : grouped) {
        std::sort(classes.begin(), classes.end());
        result.hits.push_back({wall, std::move(classes)});
    }
    return result;
}

/// The semicircular wall of largest radius among the enumerated walls.
inline std::optional<Wall> largest_wall(const ReducedClass& u, long rank_bound, unsigned threads = 0) {
    for (const auto& hit : enumerate_destabilizers(u, rank_bound, std::nullopt, threads).hits)
        if (hit.wall.is_semicircle()) return hit.wall;
    return std::nullopt;
}

}  // namespace tiltwall

#endif  // TILTWALL_WALLS_HPP
