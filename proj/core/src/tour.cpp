#include "knights/tour.hpp"

#include <algorithm>
#include <set>

#include "knights/errors.hpp"

namespace knights {

void validate_tour(const Tour &tour) {
    const BoardSpec &spec = tour.spec;
    if (spec.m < 1 || spec.n < 1) throw InvalidTour("board extents must be positive");
    if (!on_board(spec, tour.start)) throw InvalidTour("start square is off the board");

    const long long squares = spec.square_count();
    const long long expected = tour.closed ? (squares == 1 ? 0 : squares) : squares - 1;
    if (static_cast<long long>(tour.jumps.size()) != expected)
        throw InvalidTour("wrong number of jumps for this board");

    std::set<Square> visited{tour.start};
    std::set<EdgeId> used;
    Square cur = tour.start;
    for (size_t i = 0; i < tour.jumps.size(); ++i) {
        const DirectedJump &j = tour.jumps[i];
        if (j.from != cur) throw InvalidTour("jump does not start where the previous one ended");
        Square next;
        try {
            next = apply_jump(spec, j);
        } catch (const InvalidJump &e) {
            throw InvalidTour(e.what());
        }
        if (!used.insert(canonical_edge(spec, j)).second) throw InvalidTour("edge used twice");
        const bool closing = tour.closed && i + 1 == tour.jumps.size();
        if (closing) {
            if (next != tour.start) throw InvalidTour("closed tour does not return to start");
        } else {
            if (!visited.insert(next).second) throw InvalidTour("square visited twice");
        }
        cur = next;
    }
    if (static_cast<long long>(visited.size()) != squares)
        throw InvalidTour("tour does not cover the board");
}

bool is_valid_tour(const Tour &tour) {
    try {
        validate_tour(tour);
        return true;
    } catch (const InvalidTour &) {
        return false;
    }
}

std::vector<Square> visit_order(const Tour &tour) {
    std::vector<Square> order{tour.start};
    order.reserve(tour.jumps.size() + 1);
    Square cur = tour.start;
    for (size_t i = 0; i < tour.jumps.size(); ++i) {
        cur = apply_jump(tour.spec, tour.jumps[i]);
        const bool closing = tour.closed && i + 1 == tour.jumps.size();
        if (!closing) order.push_back(cur);
    }
    return order;
}

Tour rotate_tour(const Tour &tour, Square new_start) {
    if (!tour.closed) throw InvalidTour("only closed tours can be rotated");
    if (!on_board(tour.spec, new_start)) throw InvalidTour("new start is off the board");
    if (tour.jumps.empty()) return tour;
    auto it = std::find_if(tour.jumps.begin(), tour.jumps.end(),
                           [&](const DirectedJump &j) { return j.from == new_start; });
    if (it == tour.jumps.end()) throw InvalidTour("new start is not on the tour");
    Tour out{tour.spec, new_start, {}, true};
    out.jumps.insert(out.jumps.end(), it, tour.jumps.end());
    out.jumps.insert(out.jumps.end(), tour.jumps.begin(), it);
    return out;
}

Tour reverse_tour(const Tour &tour) {
    Tour out{tour.spec, tour.start, {}, tour.closed};
    out.jumps.reserve(tour.jumps.size());
    Square cur = tour.start;
    std::vector<Square> targets;
    targets.reserve(tour.jumps.size());
    for (const DirectedJump &j : tour.jumps) {
        cur = apply_jump(tour.spec, j);
        targets.push_back(cur);
    }
    if (!tour.closed && !tour.jumps.empty()) out.start = targets.back();
    for (size_t i = tour.jumps.size(); i-- > 0;)
        out.jumps.push_back({targets[i], -tour.jumps[i].pair});
    return out;
}

Tour transpose_tour(const Tour &tour) {
    if (tour.spec.topology == Topology::Cylinder)
        throw InvalidTour("transposing a cylinder changes which coordinate wraps");
    auto flip_sq = [](Square s) { return Square{s.b, s.a}; };
    Tour out{{tour.spec.topology, tour.spec.n, tour.spec.m}, flip_sq(tour.start), {}, tour.closed};
    out.jumps.reserve(tour.jumps.size());
    for (const DirectedJump &j : tour.jumps)
        out.jumps.push_back({flip_sq(j.from), {j.pair.y, j.pair.x}});
    return out;
}

Tour embed_tour(const Tour &tour, Topology target) {
    const Topology src = tour.spec.topology;
    const bool widens = (src == target) || (src == Topology::Regular) ||
                        (src == Topology::Cylinder && target == Topology::Torus);
    if (!widens) throw InvalidTour("embedding must not remove identifications");
    Tour out = tour;
    out.spec.topology = target;
    return out;
}

} // namespace knights
