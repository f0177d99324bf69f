#include "gapsmith/diagram.hpp"

#include <algorithm>
#include <sstream>

namespace gapsmith {

namespace {

constexpr double kWidth = 900;
constexpr double kMargin = 60;
constexpr double kTrack = 70;

struct Axis {
    double lo, hi;

    double x(const Rational& v) const {
        const double span = hi > lo ? hi - lo : 1;
        return kMargin + (v.to_double() - lo) / span * (kWidth - 2 * kMargin);
    }
};

void endpoint(std::ostringstream& out, double x, double y, bool closed) {
    out << "<circle cx=\"" << x << "\" cy=\"" << y << "\" r=\"4\" stroke=\"#1f4e79\" stroke-width=\"2\" fill=\""
        << (closed ? "#1f4e79" : "white") << "\"/>\n";
}

}  // namespace

std::string render_svg(const std::vector<Stage>& stages) {
    Axis axis{0, 1};
    bool first = true;
    for (const auto& st : stages) {
        if (st.set.empty()) continue;
        const double lo = st.set.inf().to_double(), hi = st.set.sup().to_double();
        axis.lo = first ? lo : std::min(axis.lo, lo);
        axis.hi = first ? hi : std::max(axis.hi, hi);
        first = false;
    }

    std::ostringstream out;
    const double height = kTrack * static_cast<double>(stages.size()) + 30;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << height
        << "\" font-family=\"monospace\" font-size=\"11\">\n";
    for (std::size_t i = 0; i < stages.size(); ++i) {
        const auto& st = stages[i];
        const double y = 30 + kTrack * static_cast<double>(i);
        out << "<text x=\"4\" y=\"" << y - 14 << "\">" << st.label << "</text>\n";
        if (st.set.empty()) continue;
        for (const auto& c : st.set.components()) {
            const double x0 = axis.x(c.lo), x1 = axis.x(c.hi);
            if (!c.is_point())
                out << "<line x1=\"" << x0 << "\" y1=\"" << y << "\" x2=\"" << x1 << "\" y2=\"" << y
                    << "\" stroke=\"#1f4e79\" stroke-width=\"4\"/>\n";
            endpoint(out, x0, y, c.lo_closed);
            if (!c.is_point()) endpoint(out, x1, y, c.hi_closed);
        }
        for (const auto& g : gaps(st.set)) {
            const double x0 = axis.x(g.lo), x1 = axis.x(g.hi);
            const char* colour = g.is_bad() ? "#c0392b" : "#7f8c8d";
            out << "<line x1=\"" << x0 << "\" y1=\"" << y + 10 << "\" x2=\"" << x1 << "\" y2=\"" << y + 10
                << "\" stroke=\"" << colour << "\" stroke-dasharray=\"3,2\"/>\n";
            out << "<text x=\"" << (x0 + x1) / 2 << "\" y=\"" << y + 24 << "\" text-anchor=\"middle\" fill=\""
                << colour << "\">" << to_string(g.kind) << " " << g.length().str() << "</text>\n";
        }
        out << "<text x=\"" << axis.x(st.set.inf()) << "\" y=\"" << y - 8 << "\" text-anchor=\"middle\">"
            << st.set.inf().str() << "</text>\n";
        out << "<text x=\"" << axis.x(st.set.sup()) << "\" y=\"" << y - 8 << "\" text-anchor=\"middle\">"
            << st.set.sup().str() << "</text>\n";
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace gapsmith
