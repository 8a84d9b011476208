// Enumerates the walls of a reduced class and writes them as an SVG picture.
// usage: demo_wall_picture [r,c,d] [rank-bound] [out.svg]

#include <tiltwall/tiltwall.hpp>

#include <iostream>

using namespace tiltwall;

namespace {

std::string describe(const Wall& w) {
    if (w.is_vertical()) return "vertical beta = " + w.beta().str();
    return "semicircle center " + w.center().str() + ", radius^2 " + w.radius_sq().str();
}

}  // namespace

int main(int argc, char** argv) {
    try {
        const ReducedClass u = parse_reduced_class(argc > 1 ? argv[1] : "1,0,-1");
        const long bound = argc > 2 ? std::stol(argv[2]) : 3;
        const std::string out = argc > 3 ? argv[3] : "walls.svg";

        const Enumeration e = enumerate_destabilizers(u, bound);
        if (e.discriminant_negative) std::cerr << "note: disc_bar(u) < 0, no semistable objects of this class\n";
        std::vector<Wall> walls;
        for (const auto& h : e.hits) {
            walls.push_back(h.wall);
            std::cout << describe(h.wall) << "  (" << h.classes.size() << " classes)\n";
        }
        emit_svg(walls, std::nullopt, out);
        std::cout << walls.size() << " walls written to " << out << "\n";
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 1;
    }
    return 0;
}
