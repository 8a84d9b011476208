#include "selftest.hpp"

#include "sampling.hpp"
#include "tiltwall/tiltwall.hpp"

#include <functional>

namespace tiltwall::cli {

namespace {

using sampling::Engine;

SuiteResult suite(const std::string& name, std::size_t n, Engine& g, const std::function<bool(Engine&)>& trial) {
    SuiteResult r{name, 0, n};
    for (std::size_t i = 0; i < n; ++i)
        if (trial(g)) ++r.passed;
    return r;
}

}  // namespace

std::vector<SuiteResult> run_selftest(std::uint64_t seed, std::size_t samples) {
    Engine g(seed);
    std::vector<SuiteResult> out;

    out.push_back(suite("twist group law", samples, g, [](Engine& e) {
        const auto x = sampling::threefold(e);
        const auto ch = sampling::rational_char(e);
        const Rat b1 = sampling::rational(e), b2 = sampling::rational(e);
        return twist(twist(ch, b1, x), b2, x) == twist(ch, b1 + b2, x) && twist(ch, 0, x) == ch;
    }));

    out.push_back(suite("disc_bar twist invariance", samples, g, [](Engine& e) {
        const auto x = sampling::threefold(e);
        const auto ch = sampling::rational_char(e);
        return disc_bar(twist(ch, sampling::rational(e), x)) == disc_bar(ch);
    }));

    out.push_back(suite("nabla invariance", samples, g, [](Engine& e) {
        const auto x = sampling::threefold(e);
        const auto ch = sampling::lattice_char(e);
        const long m = sampling::uniform(e, -5, 5);
        return nabla(twist(ch, sampling::rational(e), x), x) == nabla(ch, x) &&
               nabla(tensor_line(ch, 0, m, x), x) == nabla(ch, x);
    }));

    {
        SuiteResult r{"chi(O_X) = 1 - g sweep", 0, 0};
        for (long genus = 0; genus <= 5; ++genus)
            for (long degree = -3; degree <= 5; ++degree) {
                ++r.total;
                if (euler_char(RuledThreefold(genus, degree), structure_sheaf_char()) == Rat(1 - genus)) ++r.passed;
            }
        out.push_back(r);
    }

    out.push_back(suite("equivalence identity", samples, g, [](Engine& e) {
        for (;;) {
            const auto x = sampling::threefold(e);
            const auto ch = sampling::lattice_char(e);
            const auto pt = sampling::tilt_point(e);
            const CharVector tw = twist(ch, pt.beta, x);
            if (tw.cHF.is_zero()) continue;
            return bg_main_defect(ch, pt, x) == tw.cHF * bg_star_defect(ch, pt, x);
        }
    }));

    out.push_back(suite("nested walls", samples, g, [](Engine& e) {
        for (;;) {
            const auto u = sampling::reduced_class(e);
            // With Δ̄(u) < 0 all walls of u meet at the point where ν(u) is 0/0.
            if (disc_bar(u).sign() < 0) continue;
            const auto w1 = numerical_wall(u, sampling::reduced_class(e));
            const auto w2 = numerical_wall(u, sampling::reduced_class(e));
            if (!w1.is_proper() || !w2.is_proper()) continue;
            return *w1.wall == *w2.wall || !walls_intersect(*w1.wall, *w2.wall);
        }
    }));

    return out;
}

}  // namespace tiltwall::cli
