// Walks a vertical line through the tilt plane and reports where ν(u) and the
// heart sign constraints change, for a line bundle and its shift.

#include <tiltwall/tiltwall.hpp>

#include <iostream>

using namespace tiltwall;

namespace {

std::string describe(const Wall& w) {
    if (w.is_vertical()) return "vertical beta = " + w.beta().str();
    return "semicircle center " + w.center().str() + ", radius^2 " + w.radius_sq().str();
}

}  // namespace

int main() {
    const RuledThreefold x(1, 2);
    const CharVector l = line_bundle_char(1, 0, x);
    const CharVector shifted = -1 * l;

    std::cout << "X: genus " << x.genus << ", degree " << x.d() << "\n";
    std::cout << "ch(O(H)) = " << l.str() << "\n\n";
    std::cout << "beta      nu(O(H))   heart(O(H))  heart(O(H)[1])\n";
    for (int k = -4; k <= 8; ++k) {
        const TiltPoint pt(Rat(1, 4), Rat(k, 4));
        const auto a = heart_sign_constraints(l, pt, x);
        const auto b = heart_sign_constraints(shifted, pt, x);
        std::cout << pt.beta.str() << "\t  " << nu(l, pt).str() << "\t     " << (a.passes() ? "yes" : "no") << "\t  "
                  << (b.passes() ? "yes" : "no") << "\n";
    }

    // A class on the circle through a point keeps the same slope along it.
    const ReducedClass u = reduced(l);
    const TiltPoint p(Rat(1, 2), Rat(-1, 2));
    const Wall c = circle_through(u, p);
    std::cout << "\ncircle of constant nu through (alpha^2, beta) = (1/2, -1/2): " << describe(c) << "\n";
    return 0;
}
