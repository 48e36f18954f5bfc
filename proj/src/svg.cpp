#include "petalknot/svg.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace petalknot {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kCx = 500.0, kCy = 500.0, kR = 320.0;

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

struct Pt {
    double x, y;
};

Pt endpoint(int e, int n) {
    const double th = -2.0 * kPi * (e - 1) / (2.0 * n);
    // svg y axis points down; negate to keep the labels reading clockwise
    return {kCx + kR * std::cos(th), kCy - kR * std::sin(th)};
}

double endpoint_angle(int e, int n) { return -2.0 * kPi * (e - 1) / (2.0 * n); }

} // namespace

std::string render_svg(const UbercrossingDiagram& d) {
    const int n = d.n();
    std::ostringstream s;
    s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"1000\" height=\"1000\" "
         "viewBox=\"0 0 1000 1000\">\n";
    s << "<rect width=\"1000\" height=\"1000\" fill=\"white\"/>\n";
    s << "<circle cx=\"" << num(kCx) << "\" cy=\"" << num(kCy) << "\" r=\"" << num(kR)
      << "\" fill=\"none\" stroke=\"#cccccc\" stroke-dasharray=\"6 6\"/>\n";

    // chords
    for (int k = 1; k <= n; ++k) {
        const Pt a = endpoint(k, n), b = endpoint(k + n, n);
        s << "<line x1=\"" << num(a.x) << "\" y1=\"" << num(a.y) << "\" x2=\"" << num(b.x)
          << "\" y2=\"" << num(b.y) << "\" stroke=\"#203050\" stroke-width=\"2\"/>\n";
        // height label near the k-side endpoint
        const Pt lab{a.x + 0.12 * (kCx - a.x), a.y + 0.12 * (kCy - a.y)};
        s << "<text x=\"" << num(lab.x) << "\" y=\"" << num(lab.y)
          << "\" font-size=\"22\" fill=\"#a03030\" text-anchor=\"middle\">" << d.height(k)
          << "</text>\n";
    }

    // outer arcs as quadratic beziers bulging over their span side
    for (auto arc : d.arcs()) {
        const auto sp = d.span(arc);
        int a = arc.first, b = arc.second;
        if (n > 1) {
            // orient so the span is the clockwise side of (a, b)
            const int m = 2 * n;
            auto cw_gap = [&](int x, int y) {
                int g = (y - x) % m;
                if (g <= 0) g += m;
                return g - 1;
            };
            if (cw_gap(a, b) != static_cast<int>(sp.size())) std::swap(a, b);
        }
        const double ta = endpoint_angle(a, n), tb_raw = endpoint_angle(b, n);
        double tb = tb_raw;
        while (tb > ta) tb -= 2.0 * kPi; // clockwise from a to b in math angles
        const double tm = (ta + tb) / 2.0;
        const double bulge = 1.18 + 0.9 * (static_cast<double>(sp.size()) / (2.0 * n));
        const Pt pa = endpoint(a, n), pb = endpoint(b, n);
        const Pt ctrl{kCx + bulge * kR * std::cos(tm) * (1.0 + (ta - tb) / kPi),
                      kCy - bulge * kR * std::sin(tm) * (1.0 + (ta - tb) / kPi)};
        s << "<path d=\"M " << num(pa.x) << " " << num(pa.y) << " Q " << num(ctrl.x) << " "
          << num(ctrl.y) << " " << num(pb.x) << " " << num(pb.y)
          << "\" fill=\"none\" stroke=\"" << (sp.empty() ? "#209050" : "#9040a0")
          << "\" stroke-width=\"2\"/>\n";
    }

    // endpoint ticks
    for (int e = 1; e <= 2 * n; ++e) {
        const Pt p = endpoint(e, n);
        s << "<circle cx=\"" << num(p.x) << "\" cy=\"" << num(p.y)
          << "\" r=\"3\" fill=\"#404040\"/>\n";
    }
    s << "</svg>\n";
    return s.str();
}

} // namespace petalknot
