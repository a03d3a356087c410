#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <unordered_set>

#include "knights/board.hpp"
#include "knights/errors.hpp"

using namespace knights;

namespace {

const BoardSpec R88{Topology::Regular, 8, 8};
const BoardSpec C21{Topology::Cylinder, 2, 1};
const BoardSpec T11{Topology::Torus, 1, 1};
const BoardSpec T21{Topology::Torus, 2, 1};

// independent route: rectangle edge count by displacement-class placement
// counting, one term per direction class, clamped at zero
long long rect_edges_oracle(int m, int n) {
    auto clamp0 = [](long long v) { return v < 0 ? 0 : v; };
    return 2 * clamp0(static_cast<long long>(m - 1) * (n - 2)) +
           2 * clamp0(static_cast<long long>(m - 2) * (n - 1));
}

// independent route: distinct canonical ids instead of directed/2
long long edge_count_via_ids(const BoardSpec &spec) {
    std::set<EdgeId> ids;
    for (Square sq : all_squares(spec))
        for (const DirectedJump &j : neighbors(spec, sq)) ids.insert(canonical_edge(spec, j));
    return static_cast<long long>(ids.size());
}

long long directed_jump_count(const BoardSpec &spec) {
    long long directed = 0;
    for (Square sq : all_squares(spec)) directed += static_cast<long long>(neighbors(spec, sq).size());
    return directed;
}

std::vector<BoardSpec> sample_boards() {
    std::vector<BoardSpec> out;
    for (Topology t : {Topology::Regular, Topology::Cylinder, Topology::Torus})
        for (int m = 1; m <= 6; ++m)
            for (int n = 1; n <= 6; ++n) out.push_back({t, m, n});
    out.push_back({Topology::Cylinder, 8, 3});
    out.push_back({Topology::Torus, 7, 7});
    out.push_back({Topology::Regular, 8, 8});
    return out;
}

} // namespace

TEST_CASE("knight pairs are the eight displacements in lexicographic order") {
    const auto &ps = knight_pairs();
    REQUIRE(ps.size() == 8);
    CHECK(ps[0] == KnightPair{-2, -1});
    CHECK(ps[1] == KnightPair{-2, 1});
    CHECK(ps[2] == KnightPair{-1, -2});
    CHECK(ps[3] == KnightPair{-1, 2});
    CHECK(ps[4] == KnightPair{1, -2});
    CHECK(ps[5] == KnightPair{1, 2});
    CHECK(ps[6] == KnightPair{2, -1});
    CHECK(ps[7] == KnightPair{2, 1});
    CHECK(std::is_sorted(ps.begin(), ps.end()));
    for (KnightPair p : ps) CHECK(std::find(ps.begin(), ps.end(), -p) != ps.end());
}

TEST_CASE("apply_jump wraps identified coordinates and rejects the rest") {
    CHECK(apply_jump(R88, {{3, 3}, {2, 1}}) == Square{5, 4});
    CHECK_THROWS_AS(apply_jump(R88, {{7, 7}, {2, 1}}), InvalidJump);
    CHECK_THROWS_AS(apply_jump(R88, {{0, 0}, {-1, 2}}), InvalidJump);

    // cylinder wraps b only
    const BoardSpec c32{Topology::Cylinder, 3, 2};
    CHECK(apply_jump(c32, {{0, 1}, {1, 2}}) == Square{1, 1});
    CHECK(apply_jump(c32, {{0, 0}, {1, -2}}) == Square{1, 0});
    CHECK_THROWS_AS(apply_jump(c32, {{2, 0}, {1, 2}}), InvalidJump);

    // torus wraps both
    CHECK(apply_jump(T11, {{0, 0}, {2, 1}}) == Square{0, 0});
    CHECK(apply_jump(T21, {{0, 0}, {-1, 2}}) == Square{1, 0});

    CHECK_THROWS_AS(apply_jump(R88, {{8, 0}, {2, 1}}), InvalidJump);
    CHECK_THROWS_AS(apply_jump(R88, {{0, 0}, {3, 1}}), InvalidJump);
    CHECK_THROWS_AS(apply_jump(R88, {{0, 0}, {0, 0}}), InvalidJump);
}

TEST_CASE("neighbors follow knight_pairs order and respect topology containment") {
    for (const BoardSpec &spec : sample_boards()) {
        CAPTURE(spec.m);
        CAPTURE(spec.n);
        for (Square sq : all_squares(spec)) {
            auto ns = neighbors(spec, sq);
            CHECK(std::is_sorted(ns.begin(), ns.end()));
            for (const DirectedJump &j : ns) CHECK(on_board(spec, apply_jump(spec, j)));
        }
    }

    // every rectangle jump is a cylinder jump, every cylinder jump a torus jump
    for (int m = 1; m <= 5; ++m)
        for (int n = 1; n <= 5; ++n) {
            const BoardSpec r{Topology::Regular, m, n};
            const BoardSpec c{Topology::Cylinder, m, n};
            const BoardSpec t{Topology::Torus, m, n};
            for (Square sq : all_squares(r)) {
                auto as_set = [](std::vector<DirectedJump> v) {
                    return std::set<DirectedJump>(v.begin(), v.end());
                };
                auto rn = as_set(neighbors(r, sq));
                auto cn = as_set(neighbors(c, sq));
                auto tn = as_set(neighbors(t, sq));
                CHECK(std::includes(cn.begin(), cn.end(), rn.begin(), rn.end()));
                CHECK(std::includes(tn.begin(), tn.end(), cn.begin(), cn.end()));
            }
        }
}

TEST_CASE("canonical_edge is idempotent and pairs the two directed readings") {
    for (const BoardSpec &spec : sample_boards()) {
        for (Square sq : all_squares(spec)) {
            for (const DirectedJump &j : neighbors(spec, sq)) {
                EdgeId id = canonical_edge(spec, j);
                Square to = apply_jump(spec, j);
                DirectedJump back{to, -j.pair};
                CHECK(canonical_edge(spec, back) == id);
                CHECK(canonical_edge(spec, {id.from, id.pair}) == id);
                CHECK(on_board(spec, id.from));
            }
        }
    }
}

TEST_CASE("edge counts: frozen values") {
    CHECK(edge_count(R88) == 168);
    CHECK(edge_count(C21) == 2);
    CHECK(edge_count(T11) == 4);
    CHECK(edge_count(T21) == 8);
    CHECK(edge_count({Topology::Regular, 1, 1}) == 0);
    CHECK(edge_count({Topology::Regular, 2, 2}) == 0);
    CHECK(edge_count({Topology::Regular, 3, 3}) == 8);
    CHECK(edge_count({Topology::Regular, 4, 4}) == 24);
    CHECK(edge_count({Topology::Cylinder, 1, 5}) == 0);
}

TEST_CASE("edge counts agree with the rectangle placement oracle") {
    for (int m = 1; m <= 9; ++m)
        for (int n = 1; n <= 9; ++n) {
            CAPTURE(m);
            CAPTURE(n);
            CHECK(edge_count({Topology::Regular, m, n}) == rect_edges_oracle(m, n));
        }
}

TEST_CASE("edge counts agree with the canonical-id route and directed counts are even") {
    for (const BoardSpec &spec : sample_boards()) {
        CAPTURE(spec.m);
        CAPTURE(spec.n);
        CHECK(directed_jump_count(spec) % 2 == 0);
        CHECK(edge_count(spec) == edge_count_via_ids(spec));
    }
}

TEST_CASE("C(2,1) is two squares joined by two parallel edges") {
    auto sqs = all_squares(C21);
    REQUIRE(sqs.size() == 2);
    std::set<EdgeId> ids;
    for (Square sq : sqs)
        for (const DirectedJump &j : neighbors(C21, sq)) {
            Square to = apply_jump(C21, j);
            CHECK(to != sq); // no loops here, just the parallel pair
            ids.insert(canonical_edge(C21, j));
        }
    CHECK(ids.size() == 2);
}

TEST_CASE("T(1,1) is one square with four distinct loop edges") {
    REQUIRE(all_squares(T11).size() == 1);
    auto ns = neighbors(T11, {0, 0});
    CHECK(ns.size() == 8);
    std::set<EdgeId> ids;
    for (const DirectedJump &j : ns) {
        CHECK(apply_jump(T11, j) == Square{0, 0});
        ids.insert(canonical_edge(T11, j));
    }
    CHECK(ids.size() == 4);
    // readings pair p with -p
    for (const DirectedJump &j : ns)
        CHECK(canonical_edge(T11, j) == canonical_edge(T11, {{0, 0}, -j.pair}));
}

TEST_CASE("T(2,1) has four parallel edges and two loops per vertex") {
    std::set<EdgeId> loops, cross;
    for (Square sq : all_squares(T21))
        for (const DirectedJump &j : neighbors(T21, sq)) {
            if (apply_jump(T21, j) == sq)
                loops.insert(canonical_edge(T21, j));
            else
                cross.insert(canonical_edge(T21, j));
        }
    CHECK(loops.size() == 4);
    CHECK(cross.size() == 4);
}

TEST_CASE("rectangles are simple graphs and wide surfaces stay simple") {
    auto is_simple = [](const BoardSpec &spec) {
        std::set<EdgeId> ids;
        std::set<std::pair<Square, Square>> endpoints;
        for (Square sq : all_squares(spec))
            for (const DirectedJump &j : neighbors(spec, sq)) {
                Square to = apply_jump(spec, j);
                if (to == sq) return false;
                EdgeId id = canonical_edge(spec, j);
                if (ids.insert(id).second) {
                    Square u = std::min(sq, to), v = std::max(sq, to);
                    if (!endpoints.insert({u, v}).second) return false;
                }
            }
        return true;
    };
    for (int m = 1; m <= 8; ++m)
        for (int n = 1; n <= 8; ++n) CHECK(is_simple({Topology::Regular, m, n}));
    for (int m = 5; m <= 7; ++m)
        for (int n = 5; n <= 7; ++n) {
            CHECK(is_simple({Topology::Cylinder, m, n}));
            CHECK(is_simple({Topology::Torus, m, n}));
        }
}
