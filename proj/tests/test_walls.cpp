#include "oracles.hpp"
#include "sampling.hpp"

#include <gtest/gtest.h>

using namespace tiltwall;

namespace {

/// Five rational points on a wall with α² > 0.
std::vector<TiltPoint> rational_points(const Wall& w) {
    std::vector<TiltPoint> pts;
    if (w.is_vertical()) {
        for (long k = 1; k <= 5; ++k) pts.emplace_back(Rat(k, 3), w.beta());
        return pts;
    }
    // A rational q < R keeps every |β − center| <= 2q/3 strictly inside.
    const Rat q = QuadRat::sqrt(w.radius_sq()).bounds().first;
    for (long k = -2; k <= 2; ++k) {
        const Rat dx = q * Rat(k, 3);
        pts.emplace_back(w.radius_sq() - dx * dx, w.center() + dx);
    }
    return pts;
}

std::optional<Wall> proper_wall(const ReducedClass& u, const ReducedClass& w) {
    auto nw = numerical_wall(u, w);
    if (!nw.is_proper()) return std::nullopt;
    return nw.wall;
}

/// The window checked only at the top of the semicircle.
bool apex_window(const ReducedClass& u, const ReducedClass& w, const Wall& wall) {
    const Rat b = wall.is_vertical() ? wall.beta() : wall.center();
    const Rat fw = w.c - b * w.r, fu = u.c - b * u.r;
    return fw.sign() >= 0 && fu >= fw;
}

}  // namespace

TEST(NumericalWall, Examples) {
    const auto a = numerical_wall({1, 0, 0}, {1, 1, Rat(1, 2)});
    ASSERT_TRUE(a.is_proper());
    EXPECT_EQ(*a.wall, Wall::semicircle(Rat(1, 2), Rat(1, 4)));
    EXPECT_EQ(nu(ReducedClass{1, 0, 0}, TiltPoint(Rat(1, 4), Rat(1, 2))),
              nu(ReducedClass{1, 1, Rat(1, 2)}, TiltPoint(Rat(1, 4), Rat(1, 2))));
    EXPECT_EQ(numerical_wall({1, 0, 0}, {2, 0, 0}).kind, NumericalWall::Kind::everywhere);
    const auto v = numerical_wall({1, 0, 0}, {0, 0, 1});
    ASSERT_TRUE(v.is_proper());
    EXPECT_EQ(*v.wall, Wall::vertical(0));
    EXPECT_EQ(numerical_wall({1, 0, 0}, {1, 0, 1}).wall, Wall::vertical(0));
    EXPECT_EQ(numerical_wall({1, 0, -1}, {1, -1, 0}).kind, NumericalWall::Kind::none);
}

TEST(NumericalWall, SemicircleRejectsNonPositiveRadius) {
    EXPECT_THROW((void)Wall::semicircle(0, 0), std::invalid_argument);
    EXPECT_THROW((void)Wall::semicircle(0, -1), std::invalid_argument);
}

TEST(NumericalWall, Contains) {
    const Wall s = Wall::semicircle(Rat(1, 2), Rat(1, 4));
    EXPECT_TRUE(wall_contains(s, TiltPoint(Rat(1, 4), Rat(1, 2))));
    EXPECT_FALSE(wall_contains(s, TiltPoint(Rat(1, 4), 0)));
    for (long k = 1; k < 6; ++k) EXPECT_TRUE(wall_contains(Wall::vertical(0), TiltPoint(Rat(k), 0)));
}

TEST(NumericalWall, Symmetry) {
    sampling::Engine g(71);
    for (int i = 0; i < 1000; ++i) {
        const auto u = sampling::reduced_class(g), w = sampling::reduced_class(g);
        const auto a = numerical_wall(u, w), b = numerical_wall(w, u), c = numerical_wall(u, u - w);
        EXPECT_EQ(a.kind, b.kind);
        EXPECT_EQ(a.wall, b.wall);
        EXPECT_EQ(a.kind, c.kind);
        EXPECT_EQ(a.wall, c.wall);
    }
}

TEST(NumericalWall, MatchesInterpolationOracle) {
    sampling::Engine g(72);
    for (int i = 0; i < 2000; ++i) {
        const auto u = sampling::reduced_class(g), w = sampling::reduced_class(g);
        const auto ours = proper_wall(u, w);
        const auto ref = oracle::wall(u, w);
        ASSERT_EQ(ours.has_value(), ref.has_value()) << u.str() << " / " << w.str();
        if (ours) {
            EXPECT_EQ(oracle::as_oracle(*ours), *ref);
        }
    }
}

TEST(NumericalWall, EqualSlopesAtRationalPoints) {
    sampling::Engine g(73);
    int checked = 0;
    while (checked < 200) {
        const auto u = sampling::reduced_class(g), w = sampling::reduced_class(g);
        const auto wall = proper_wall(u, w);
        if (!wall) continue;
        ++checked;
        for (const auto& pt : rational_points(*wall)) {
            ASSERT_TRUE(wall_contains(*wall, pt));
            const ReducedClass tu = twist(u, pt.beta), tw = twist(w, pt.beta);
            const Rat nu_u = tu.dd - pt.alpha2 * tu.r / 2, nu_w = tw.dd - pt.alpha2 * tw.r / 2;
            EXPECT_EQ(nu_u * tw.c, nu_w * tu.c);
            // With Δ̄ < 0 every wall passes through the point where ν(u) is 0/0.
            if (disc_bar(u).sign() >= 0 && disc_bar(w).sign() >= 0) {
                EXPECT_EQ(nu(u, pt), nu(w, pt)) << u.str() << " / " << w.str();
            }
        }
    }
}

TEST(NumericalWall, OffWallSlopesDiffer) {
    sampling::Engine g(74);
    int checked = 0;
    while (checked < 200) {
        const auto u = sampling::reduced_class(g), w = sampling::reduced_class(g);
        const auto nw = numerical_wall(u, w);
        if (nw.kind == NumericalWall::Kind::everywhere) continue;
        const auto pt = sampling::tilt_point(g);
        if (nw.wall && wall_contains(*nw.wall, pt)) continue;
        ++checked;
        EXPECT_NE(nu(u, pt), nu(w, pt));
    }
}

TEST(NumericalWall, NestedWallsIdenticalOrDisjoint) {
    sampling::Engine g(75);
    int checked = 0, identical = 0;
    while (checked < 200) {
        const auto u = sampling::reduced_class(g, 3);
        if (disc_bar(u).sign() < 0) continue;
        const auto a = proper_wall(u, sampling::reduced_class(g, 3));
        const auto b = proper_wall(u, sampling::reduced_class(g, 3));
        if (!a || !b) continue;
        ++checked;
        if (*a == *b) {
            ++identical;
            EXPECT_TRUE(walls_intersect(*a, *b));
        } else {
            EXPECT_FALSE(walls_intersect(*a, *b)) << u.str();
        }
    }
    EXPECT_GT(identical, 0);
}

TEST(NumericalWall, IntersectionExamples) {
    EXPECT_TRUE(walls_intersect(Wall::semicircle(0, 4), Wall::semicircle(1, 4)));
    EXPECT_FALSE(walls_intersect(Wall::semicircle(0, 1), Wall::semicircle(0, 4)));
    EXPECT_FALSE(walls_intersect(Wall::semicircle(0, 1), Wall::semicircle(5, 1)));
    EXPECT_TRUE(walls_intersect(Wall::vertical(0), Wall::semicircle(Rat(1, 2), 1)));
    EXPECT_FALSE(walls_intersect(Wall::vertical(1), Wall::semicircle(0, 1)));
}

TEST(CircleThrough, Examples) {
    EXPECT_EQ(circle_through({1, 1, Rat(1, 2)}, TiltPoint(1, 0)), Wall::semicircle(0, 1));
    EXPECT_THROW((void)circle_through({0, 0, 1}, TiltPoint(1, 0)), std::domain_error);
}

TEST(CircleThrough, ConstantShiftedSlope) {
    sampling::Engine g(76);
    int checked = 0;
    while (checked < 200) {
        const auto u = sampling::reduced_class(g);
        const auto pt = sampling::tilt_point(g);
        if (nu(u, pt).is_infinite()) continue;
        ++checked;
        const Wall c = circle_through(u, pt);
        EXPECT_TRUE(wall_contains(c, pt));
        for (const auto& q : rational_points(c)) {
            const ExtRat v = nu(u, q);
            if (v.is_infinite()) continue;
            EXPECT_EQ(q.beta + v.value(), c.center()) << u.str();
        }
    }
}

TEST(CircleThrough, NeverCrossesWallsOfTheSameClass) {
    sampling::Engine g(77);
    int checked = 0;
    while (checked < 300) {
        const auto u = sampling::reduced_class(g, 3);
        if (disc_bar(u).sign() < 0) continue;
        const auto pt = sampling::tilt_point(g);
        const auto wall = proper_wall(u, sampling::reduced_class(g, 3));
        if (!wall || nu(u, pt).is_infinite()) continue;
        ++checked;
        const Wall c = circle_through(u, pt);
        EXPECT_TRUE(c == *wall || !walls_intersect(c, *wall));
    }
}

TEST(Window, EndpointCheckMatchesIntervalOracleAndDenseSamples) {
    sampling::Engine g(78);
    int checked = 0;
    while (checked < 1000) {
        const auto u = sampling::reduced_class(g), w = sampling::reduced_class(g);
        const auto wall = proper_wall(u, w);
        if (!wall) continue;
        ++checked;
        const bool exact = positivity_window_holds(u, w, *wall);
        EXPECT_EQ(exact, oracle::window_ok(u, w, oracle::as_oracle(*wall))) << u.str() << " / " << w.str();
        if (wall->is_vertical()) continue;
        // Dense rational sample of the open interval.
        const Rat q = QuadRat::sqrt(wall->radius_sq()).bounds().first;
        bool sampled = true;
        for (long k = -200; k <= 200 && sampled; ++k) {
            const Rat b = wall->center() + q * Rat(k, 200);
            const Rat fw = w.c - b * w.r, fu = u.c - b * u.r;
            sampled = fw.sign() >= 0 && fu >= fw;
        }
        if (exact) {
            EXPECT_TRUE(sampled) << u.str() << " / " << w.str();
        } else {
            // A failure at an endpoint persists just outside it.
            const Rat qo = QuadRat::sqrt(wall->radius_sq()).bounds().second;
            bool outer = true;
            for (const Rat& b : {wall->center() - qo, wall->center() + qo}) {
                const Rat fw = w.c - b * w.r, fu = u.c - b * u.r;
                outer = outer && fw.sign() >= 0 && fu >= fw;
            }
            EXPECT_FALSE(outer && sampled) << u.str() << " / " << w.str();
        }
    }
}

TEST(Window, ApexCheckIsWeakerThanWholeWall) {
    sampling::Engine g(79);
    int apex_only = 0, checked = 0;
    while (checked < 2000) {
        const auto u = sampling::reduced_class(g), w = sampling::reduced_class(g);
        const auto wall = proper_wall(u, w);
        if (!wall) continue;
        ++checked;
        const bool exact = positivity_window_holds(u, w, *wall);
        const bool apex = apex_window(u, w, *wall);
        if (exact) {
            EXPECT_TRUE(apex);
        }
        if (apex && !exact) ++apex_only;
    }
    EXPECT_GT(apex_only, 0);
}

TEST(Window, ApexAgreesOnceDiscriminantsAreConstrained) {
    // Under Δ̄(u) >= 0, Δ̄(w) >= 0, Δ̄(u−w) >= 0, Δ̄(w) + Δ̄(u−w) <= Δ̄(u)
    // the apex value already decides the whole wall.
    int checked = 0;
    for (long ur = -3; ur <= 3; ++ur)
        for (long uc = -3; uc <= 3; ++uc)
            for (long uk = -6; uk <= 6; ++uk) {
                const ReducedClass u{Rat(ur), Rat(uc), Rat(uk, 2)};
                if (disc_bar(u).sign() < 0) continue;
                for (long r = -3; r <= 3; ++r)
                    for (long c = -6; c <= 6; ++c)
                        for (long k = -12; k <= 12; ++k) {
                            const ReducedClass w{Rat(r), Rat(c), Rat(k, 2)};
                            const Rat dw = disc_bar(w), dq = disc_bar(u - w);
                            if (dw.sign() < 0 || dq.sign() < 0 || dw + dq > disc_bar(u)) continue;
                            const auto wall = proper_wall(u, w);
                            if (!wall) continue;
                            ++checked;
                            EXPECT_EQ(apex_window(u, w, *wall), positivity_window_holds(u, w, *wall))
                                << u.str() << " / " << w.str();
                        }
            }
    EXPECT_GT(checked, 1000);
}

TEST(Enumerate, RejectsNonPositiveRankBound) {
    EXPECT_THROW((void)enumerate_destabilizers({1, 0, -1}, 0), std::invalid_argument);
    EXPECT_THROW((void)enumerate_destabilizers({1, 0, -1}, -3), std::invalid_argument);
}

TEST(Enumerate, ZeroDiscriminantHasNoSemicircles) {
    for (long rb = 1; rb <= 4; ++rb) {
        const auto e = enumerate_destabilizers({1, 1, Rat(1, 2)}, rb);
        for (const auto& h : e.hits) EXPECT_TRUE(h.wall.is_vertical());
        EXPECT_FALSE(largest_wall({1, 1, Rat(1, 2)}, rb).has_value());
    }
    sampling::Engine g(80);
    int checked = 0;
    while (checked < 100) {
        const auto u = sampling::reduced_class(g);
        if (!disc_bar(u).is_zero() || u.is_zero()) continue;
        ++checked;
        for (const auto& h : enumerate_destabilizers(u, 2).hits) EXPECT_TRUE(h.wall.is_vertical()) << u.str();
    }
}

TEST(Enumerate, NegativeDiscriminantFlagged) {
    const auto e = enumerate_destabilizers({1, 0, 1}, 2);
    EXPECT_TRUE(e.discriminant_negative);
    EXPECT_TRUE(e.hits.empty());
}

TEST(Enumerate, ExampleRankTwo) {
    const ReducedClass u{1, 0, -1};
    const auto e = enumerate_destabilizers(u, 2);
    ASSERT_FALSE(e.hits.empty());
    for (const auto& h : e.hits)
        for (const auto& w : h.classes) {
            EXPECT_EQ(proper_wall(u, w), h.wall);
            const auto pt = rational_points(h.wall).front();
            EXPECT_EQ(nu(u, pt), nu(w, pt));
        }
    EXPECT_EQ(largest_wall(u, 2), e.hits[1].wall);
    EXPECT_TRUE(e.hits[0].wall.is_vertical());
}

TEST(Enumerate, RankZeroClassHasOnlyVerticalCandidates) {
    const ReducedClass u{0, 1, 0};
    const auto e = enumerate_destabilizers(u, 1);
    for (const auto& h : e.hits) EXPECT_TRUE(h.wall.is_vertical());
    EXPECT_TRUE(oracle::flatten(e) == oracle::destabilizers(u, 1, 12));
}

TEST(Enumerate, KnownFixture) {
    const auto e = enumerate_destabilizers({1, 0, -1}, 3);
    ASSERT_EQ(e.hits.size(), 2u);
    EXPECT_EQ(e.hits[0].wall, Wall::vertical(0));
    EXPECT_EQ(e.hits[0].classes, (std::vector<ReducedClass>{{0, 0, -1}, {0, 0, Rat(-1, 2)}, {1, 0, Rat(-1, 2)}, {1, 0, 0}}));
    EXPECT_EQ(e.hits[1].wall, Wall::semicircle(Rat(-3, 2), Rat(1, 4)));
    EXPECT_EQ(e.hits[1].classes, (std::vector<ReducedClass>{{-1, 2, -2}, {0, 1, Rat(-3, 2)}, {1, -1, Rat(1, 2)}, {2, -2, 1}}));
}

TEST(Enumerate, MatchesBruteForceOracle) {
    sampling::Engine g(81);
    int checked = 0;
    while (checked < 25) {
        const auto u = sampling::reduced_class(g, 2);
        if (disc_bar(u).sign() < 0) continue;
        ++checked;
        const long rb = sampling::uniform(g, 1, 2);
        // Accepted classes need not be contiguous, so the box is doubled
        // until the scan stops changing.
        long box = 8;
        auto ref = oracle::destabilizers(u, rb, box);
        for (;;) {
            auto wider = oracle::destabilizers(u, rb, 2 * box);
            box *= 2;
            if (wider == ref) break;
            ref = std::move(wider);
        }
        const auto got = oracle::flatten(enumerate_destabilizers(u, rb));
        EXPECT_TRUE(got == ref) << u.str() << " rank " << rb << "\nextra:\n"
                                << oracle::missing(got, ref) << "missing:\n" << oracle::missing(ref, got);
    }
}

TEST(Enumerate, RegionKeepsWallsThroughOrAbove) {
    const ReducedClass u{2, 1, -2};
    const auto all = enumerate_destabilizers(u, 3);
    sampling::Engine g(82);
    for (int i = 0; i < 20; ++i) {
        const TiltPoint pt(Rat(sampling::uniform(g, 1, 16), 16), Rat(sampling::uniform(g, -16, 16), 8));
        std::vector<Wall> expected;
        for (const auto& h : all.hits)
            if (wall_passes_through_or_above(h.wall, pt)) expected.push_back(h.wall);
        std::vector<Wall> got;
        for (const auto& h : enumerate_destabilizers(u, 3, pt).hits) got.push_back(h.wall);
        EXPECT_EQ(got, expected);
    }
}

TEST(Enumerate, SortedAndDeterministicAcrossThreadCounts) {
    for (const ReducedClass& u : {ReducedClass{1, 0, -1}, ReducedClass{2, 1, -2}, ReducedClass{0, 2, 1}}) {
        const auto ref = enumerate_destabilizers(u, 3, std::nullopt, 1);
        for (std::size_t i = 1; i < ref.hits.size(); ++i) EXPECT_TRUE(ref.hits[i - 1].wall < ref.hits[i].wall);
        for (unsigned t : {2U, 3U, 7U, 16U}) {
            const auto e = enumerate_destabilizers(u, 3, std::nullopt, t);
            ASSERT_EQ(e.hits.size(), ref.hits.size());
            for (std::size_t i = 0; i < e.hits.size(); ++i) {
                EXPECT_EQ(e.hits[i].wall, ref.hits[i].wall);
                EXPECT_EQ(e.hits[i].classes, ref.hits[i].classes);
            }
        }
    }
}

TEST(LargestWall, MonotoneInRankBound) {
    for (const ReducedClass& u : {ReducedClass{1, 0, -1}, ReducedClass{2, 1, -2}, ReducedClass{1, 1, -2}}) {
        std::optional<Rat> prev;
        for (long rb = 1; rb <= 4; ++rb) {
            const auto w = largest_wall(u, rb);
            if (prev) {
                ASSERT_TRUE(w.has_value());
                EXPECT_GE(w->radius_sq(), *prev);
            }
            if (w) prev = w->radius_sq();
        }
    }
}
