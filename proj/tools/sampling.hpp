#ifndef TILTWALL_TOOLS_SAMPLING_HPP
#define TILTWALL_TOOLS_SAMPLING_HPP

// Seeded random classes and parameters for the identity suites.

#include "tiltwall/chern.hpp"
#include "tiltwall/exactnum.hpp"
#include "tiltwall/geometry.hpp"

#include <cstdint>
#include <random>

namespace tiltwall::sampling {

using Engine = std::mt19937_64;

inline long uniform(Engine& g, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(g); }

/// p/q with |p| <= bound and 1 <= q <= max_den.
inline Rat rational(Engine& g, long bound = 6, long max_den = 4) {
    return Rat(uniform(g, -bound, bound), uniform(g, 1, max_den));
}

inline Rat positive_rational(Engine& g, long bound = 6, long max_den = 4) {
    return Rat(uniform(g, 1, bound), uniform(g, 1, max_den));
}

/// A lattice vector: integral ch0, ch1 degrees, ch2 in ½Z, ch3 in ⅙Z.
inline CharVector lattice_char(Engine& g, long bound = 6) {
    return {Rat(uniform(g, -bound, bound)), Rat(uniform(g, -bound, bound)), Rat(uniform(g, -bound, bound)),
            Rat(uniform(g, -2 * bound, 2 * bound), 2), Rat(uniform(g, -2 * bound, 2 * bound), 2),
            Rat(uniform(g, -6 * bound, 6 * bound), 6)};
}

/// Arbitrary rational coordinates, for identities that hold on the whole
/// rational span.
inline CharVector rational_char(Engine& g, long bound = 6) {
    return {rational(g, bound), rational(g, bound), rational(g, bound),
            rational(g, bound), rational(g, bound), rational(g, bound)};
}

inline ReducedClass reduced_class(Engine& g, long bound = 4) {
    return {Rat(uniform(g, -bound, bound)), Rat(uniform(g, -bound, bound)), Rat(uniform(g, -2 * bound, 2 * bound), 2)};
}

inline TiltPoint tilt_point(Engine& g) { return {positive_rational(g), rational(g)}; }

inline RuledThreefold threefold(Engine& g) { return {uniform(g, 0, 5), uniform(g, -3, 5)}; }

}  // namespace tiltwall::sampling

#endif  // TILTWALL_TOOLS_SAMPLING_HPP
