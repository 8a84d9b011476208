#ifndef TILTWALL_SVG_HPP
#define TILTWALL_SVG_HPP

// Static SVG rendering of walls in the (β, α) half plane. β runs to the
// right, α upward, both with the same scale. Only drawing coordinates are
// decimal; the exact wall data is kept in data-* attributes.

#include "tiltwall/chern.hpp"
#include "tiltwall/walls.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace tiltwall {

/// Mapping from (β, α) to SVG user units.
struct SvgFrame {
    static constexpr double width = 800;
    static constexpr double height = 500;
    static constexpr double margin = 40;

    double beta_min = -1;
    double beta_max = 1;
    double scale = 1;  // user units per unit of β and of α

    [[nodiscard]] double x(double beta) const { return margin + (beta - beta_min) * scale; }
    [[nodiscard]] double y(double alpha) const { return height - margin - alpha * scale; }

    static SvgFrame fit(const std::vector<Wall>& walls, const std::optional<TiltPoint>& query) {
        double lo = 0, hi = 0, top = 0;
        bool any = false;
        auto cover = [&](double a, double b) {
            lo = any ? std::min(lo, a) : a;
            hi = any ? std::max(hi, b) : b;
            any = true;
        };
        for (const auto& w : walls) {
            if (w.is_vertical()) {
                const double b = w.beta().to_double();
                cover(b, b);
            } else {
                const double r = std::sqrt(w.radius_sq().to_double());
                const double c = w.center().to_double();
                cover(c - r, c + r);
                top = std::max(top, r);
            }
        }
        if (query) {
            const double b = query->beta.to_double();
            cover(b, b);
            top = std::max(top, std::sqrt(query->alpha2.to_double()));
        }
        if (!any) cover(-1, 1);
        if (hi - lo < 1e-9) {
            lo -= 1;
            hi += 1;
        }
        if (top <= 0) top = (hi - lo) / 2;
        const double pad = 0.05 * (hi - lo);
        SvgFrame f;
        f.beta_min = lo - pad;
        f.beta_max = hi + pad;
        const double sx = (width - 2 * margin) / (f.beta_max - f.beta_min);
        const double sy = (height - 2 * margin) / (top * 1.1);
        f.scale = std::min(sx, sy);
        return f;
    }
};

namespace detail {

inline std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    std::string s(buf);
    if (s == "-0.000") s = "0.000";
    return s;
}

}  // namespace detail

/// Byte-identical output for identical input.
inline std::string render_svg(const std::vector<Wall>& walls, const std::optional<TiltPoint>& query) {
    using detail::fmt;
    const SvgFrame f = SvgFrame::fit(walls, query);
    const double x_end = SvgFrame::width - SvgFrame::margin;
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << SvgFrame::width << ' ' << SvgFrame::height
        << "\" width=\"" << SvgFrame::width << "\" height=\"" << SvgFrame::height << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    out << "<g id=\"axes\" stroke=\"black\" stroke-width=\"1\">\n";
    out << "<line id=\"beta-axis\" x1=\"" << fmt(SvgFrame::margin) << "\" y1=\"" << fmt(f.y(0)) << "\" x2=\""
        << fmt(x_end) << "\" y2=\"" << fmt(f.y(0)) << "\"/>\n";
    if (f.beta_min <= 0 && 0 <= f.beta_max)
        out << "<line id=\"alpha-axis\" x1=\"" << fmt(f.x(0)) << "\" y1=\"" << fmt(f.y(0)) << "\" x2=\""
            << fmt(f.x(0)) << "\" y2=\"" << fmt(SvgFrame::margin) << "\"/>\n";
    out << "</g>\n";
    out << "<text x=\"" << fmt(x_end) << "\" y=\"" << fmt(f.y(0) + 16) << "\" font-size=\"12\">beta</text>\n";
    out << "<text x=\"" << fmt(SvgFrame::margin) << "\" y=\"" << fmt(SvgFrame::margin - 8)
        << "\" font-size=\"12\">alpha</text>\n";
    out << "<g id=\"walls\" fill=\"none\" stroke=\"steelblue\" stroke-width=\"1.5\">\n";
    for (const auto& w : walls) {
        if (w.is_vertical()) {
            const double xb = f.x(w.beta().to_double());
            out << "<line class=\"wall vertical\" data-beta=\"" << w.beta().str() << "\" x1=\"" << fmt(xb)
                << "\" y1=\"" << fmt(f.y(0)) << "\" x2=\"" << fmt(xb) << "\" y2=\"" << fmt(SvgFrame::margin)
                << "\"/>\n";
        } else {
            const double c = w.center().to_double();
            const double r = std::sqrt(w.radius_sq().to_double());
            out << "<path class=\"wall semicircle\" data-center=\"" << w.center().str() << "\" data-radius-sq=\""
                << w.radius_sq().str() << "\" d=\"M " << fmt(f.x(c - r)) << ' ' << fmt(f.y(0)) << " A "
                << fmt(r * f.scale) << ' ' << fmt(r * f.scale) << " 0 0 1 " << fmt(f.x(c + r)) << ' '
                << fmt(f.y(0)) << "\"/>\n";
        }
    }
    out << "</g>\n";
    if (query) {
        out << "<circle id=\"query\" data-alpha2=\"" << query->alpha2.str() << "\" data-beta=\""
            << query->beta.str() << "\" cx=\"" << fmt(f.x(query->beta.to_double())) << "\" cy=\""
            << fmt(f.y(std::sqrt(query->alpha2.to_double()))) << "\" r=\"4\" fill=\"crimson\"/>\n";
    }
    out << "</svg>\n";
    return out.str();
}

inline void emit_svg(const std::vector<Wall>& walls, const std::optional<TiltPoint>& query, const std::string& path) {
    std::ofstream file(path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open " + path + " for writing");
    file << render_svg(walls, query);
    if (!file) throw std::runtime_error("failed writing " + path);
}

}  // namespace tiltwall

#endif  // TILTWALL_SVG_HPP
