#include "knights/render.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "knights/errors.hpp"
#include "knights/lift.hpp"
#include "knights/serialize.hpp"

namespace knights {

namespace {

int mod_floor(int v, int mod) {
    int r = v % mod;
    return r < 0 ? r + mod : r;
}

// the path in cover coordinates, defined for open tours and rectangles too
std::vector<LiftPoint> unroll(const Tour &tour) {
    std::vector<LiftPoint> points{{tour.start.a, tour.start.b}};
    points.reserve(tour.jumps.size() + 1);
    for (const DirectedJump &jump : tour.jumps)
        points.push_back({points.back().a + jump.pair.x, points.back().b + jump.pair.y});
    return points;
}

bool jump_wraps(const BoardSpec &spec, const DirectedJump &jump) {
    int ra = jump.from.a + jump.pair.x;
    int rb = jump.from.b + jump.pair.y;
    if (spec.wraps_a() && (ra < 0 || ra >= spec.m)) return true;
    if (spec.wraps_b() && (rb < 0 || rb >= spec.n)) return true;
    return false;
}

int index_width(std::size_t count) {
    return static_cast<int>(std::to_string(count == 0 ? 0 : count - 1).size());
}

std::string pad_number(int value, int width) {
    std::string digits = std::to_string(value);
    return std::string(static_cast<std::size_t>(std::max(0, width - static_cast<int>(digits.size()))),
                       ' ') +
           digits;
}

std::string header_line(const Tour &tour) {
    std::ostringstream out;
    out << topology_name(tour.spec.topology) << ' ' << tour.spec.m << 'x' << tour.spec.n << ' '
        << (tour.closed ? "closed" : "open") << " tour\n";
    return out.str();
}

std::string board_ascii(const Tour &tour) {
    const BoardSpec &spec = tour.spec;
    std::vector<Square> order = visit_order(tour);
    std::map<Square, int> index;
    for (std::size_t i = 0; i < order.size(); ++i) index.emplace(order[i], static_cast<int>(i));
    std::map<Square, bool> wraps;
    for (const DirectedJump &jump : tour.jumps)
        if (jump_wraps(spec, jump)) wraps[jump.from] = true;

    const int width = index_width(order.size());
    std::ostringstream out;
    out << header_line(tour);
    for (int b = spec.n - 1; b >= 0; --b) {
        for (int a = 0; a < spec.m; ++a) {
            if (a > 0) out << ' ';
            out << pad_number(index.at({a, b}), width);
            out << (wraps.count({a, b}) ? '~' : ' ');
        }
        out << '\n';
    }
    if (!wraps.empty()) out << "~ move crosses an identified edge\n";
    return out.str();
}

struct LiftPlot {
    std::vector<LiftPoint> points;
    std::map<LiftPoint, int> first_visit;
    int a_lo = 0, a_hi = 0, b_lo = 0, b_hi = 0;
};

LiftPlot make_plot(const Tour &tour) {
    LiftPlot plot;
    plot.points = unroll(tour);
    for (std::size_t i = 0; i < plot.points.size(); ++i)
        plot.first_visit.emplace(plot.points[i], static_cast<int>(i));
    for (const LiftPoint &p : plot.points) {
        plot.a_lo = std::min(plot.a_lo, p.a);
        plot.a_hi = std::max(plot.a_hi, p.a);
        plot.b_lo = std::min(plot.b_lo, p.b);
        plot.b_hi = std::max(plot.b_hi, p.b);
    }
    return plot;
}

std::string lift_ascii(const Tour &tour, bool domains) {
    const BoardSpec &spec = tour.spec;
    LiftPlot plot = make_plot(tour);
    const LiftPoint base = plot.points.front();
    const bool rule_a = domains && spec.wraps_a();
    const bool rule_b = domains && spec.wraps_b();
    const int width = index_width(plot.points.size());

    std::ostringstream out;
    out << topology_name(spec.topology) << ' ' << spec.m << 'x' << spec.n << " lift\n";
    std::size_t row_chars = 0;
    for (int b = plot.b_hi; b >= plot.b_lo; --b) {
        std::ostringstream row;
        row << pad_number(b, 4) << ' ';
        for (int a = plot.a_lo; a <= plot.a_hi; ++a) {
            row << (rule_a && a > plot.a_lo && mod_floor(a, spec.m) == 0 ? '|' : ' ');
            auto it = plot.first_visit.find({a, b});
            if (it == plot.first_visit.end())
                row << std::string(static_cast<std::size_t>(width - 1), ' ') << ". ";
            else
                row << pad_number(it->second, width)
                    << (LiftPoint{a, b} == base ? '*' : ' ');
        }
        std::string line = row.str();
        row_chars = std::max(row_chars, line.size());
        out << line << '\n';
        if (rule_b && b > plot.b_lo && mod_floor(b, spec.n) == 0)
            out << std::string(row_chars, '-') << '\n';
    }
    return out.str();
}

std::string lift_svg(const Tour &tour, bool domains, int cell_px) {
    const BoardSpec &spec = tour.spec;
    LiftPlot plot = make_plot(tour);
    const int w = (plot.a_hi - plot.a_lo + 2) * cell_px;
    const int h = (plot.b_hi - plot.b_lo + 2) * cell_px;
    auto x = [&](int a) { return (a - plot.a_lo + 1) * cell_px; };
    auto y = [&](int b) { return (plot.b_hi - b + 1) * cell_px; };

    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << w
        << "\" height=\"" << h << "\" viewBox=\"0 0 " << w << ' ' << h << "\">\n"
        << "<rect width=\"" << w << "\" height=\"" << h << "\" fill=\"#ffffff\"/>\n";

    if (domains && spec.wraps_b()) {
        for (int b = plot.b_lo; b <= plot.b_hi; ++b) {
            if (mod_floor(b, spec.n) != 0 || b == plot.b_lo) continue;
            int yy = y(b) + cell_px / 2; // the seam runs below row b
            out << "<line x1=\"0\" y1=\"" << yy << "\" x2=\"" << w << "\" y2=\"" << yy
                << "\" stroke=\"#999999\" stroke-dasharray=\"6,3\"/>\n";
        }
    }
    if (domains && spec.wraps_a()) {
        for (int a = plot.a_lo; a <= plot.a_hi; ++a) {
            if (mod_floor(a, spec.m) != 0 || a == plot.a_lo) continue;
            int xx = x(a) - cell_px / 2;
            out << "<line x1=\"" << xx << "\" y1=\"0\" x2=\"" << xx << "\" y2=\"" << h
                << "\" stroke=\"#999999\" stroke-dasharray=\"6,3\"/>\n";
        }
    }

    if (plot.points.size() > 1) {
        out << "<polyline fill=\"none\" stroke=\"#1a5fb4\" stroke-width=\"2\" points=\"";
        for (std::size_t i = 0; i < plot.points.size(); ++i) {
            if (i > 0) out << ' ';
            out << x(plot.points[i].a) << ',' << y(plot.points[i].b);
        }
        out << "\"/>\n";
    }
    for (const LiftPoint &p : plot.points)
        out << "<circle cx=\"" << x(p.a) << "\" cy=\"" << y(p.b) << "\" r=\""
            << std::max(2, cell_px / 8) << "\" fill=\"#333333\"/>\n";
    const LiftPoint base = plot.points.front();
    out << "<circle cx=\"" << x(base.a) << "\" cy=\"" << y(base.b) << "\" r=\""
        << std::max(3, cell_px / 4) << "\" fill=\"#c01c28\"/>\n";
    out << "</svg>\n";
    return out.str();
}

} // namespace

std::string render(const Tour &tour, const RenderOptions &opts) {
    if (opts.cell_px < 4) throw InvalidProblem("cell_px must be at least 4");
    validate_tour(tour);
    switch (opts.mode) {
    case RenderMode::BoardAscii: return board_ascii(tour);
    case RenderMode::LiftAscii: return lift_ascii(tour, opts.show_fundamental_domains);
    case RenderMode::LiftSvg:
        return lift_svg(tour, opts.show_fundamental_domains, opts.cell_px);
    }
    throw InvalidProblem("unknown render mode");
}

} // namespace knights
