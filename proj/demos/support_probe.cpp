// Searches for a quadratic form certifying the support property for a few
// central charges and prints what the search found.

#include <tiltwall/tiltwall.hpp>

#include <iostream>

using namespace tiltwall;

int main() {
    const RuledThreefold x(0, 3);
    const auto lambdas = rat_grid(0, 2, Rat(1, 2));
    const auto mus = rat_grid(Rat(1, 2), 2, Rat(1, 2));
    for (const ChargeParams& p : {ChargeParams(1, 0, 1, 1), ChargeParams(Rat(1, 2), Rat(1, 3), 2, Rat(1, 2)),
                                  ChargeParams(3, -1, Rat(1, 3), 4)}) {
        const SupportResult res = verify_support(p, x, lambdas, mus);
        std::cout << "alpha^2=" << p.alpha2.str() << " beta=" << p.beta.str() << " s=" << p.s.str()
                  << " t=" << p.t.str() << "\n  kernel dimension " << res.kernel.size() << ", "
                  << res.candidates_tried << " candidates\n  ";
        if (res.witness)
            std::cout << "witness found\n";
        else
            std::cout << res.diagnostic << "\n";
    }
    return 0;
}
