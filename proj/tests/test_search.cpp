#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "knights/errors.hpp"
#include "knights/search.hpp"

using namespace knights;

namespace {

// Independent oracle: bare recursive enumeration with no pruning and no
// shared machinery beyond the board primitives. Counts closed tours from
// (0,0) under the same undirected normalization the engine uses.
struct NaiveCounter {
    BoardSpec spec;
    ClassTarget target;
    long long count = 0;
    std::set<Square> visited;
    std::set<EdgeId> used;
    std::vector<DirectedJump> path;

    int pidx(KnightPair p) const {
        const auto &ps = knight_pairs();
        for (int i = 0; i < 8; ++i)
            if (ps[i] == p) return i;
        return -1;
    }

    void rec(Square cur) {
        if (visited.size() == static_cast<size_t>(spec.square_count())) {
            for (const DirectedJump &j : neighbors(spec, cur)) {
                if (apply_jump(spec, j) != Square{0, 0}) continue;
                if (used.count(canonical_edge(spec, j))) continue;
                if (pidx(path.front().pair) >= pidx(-j.pair)) continue;
                Tour tour{spec, {0, 0}, path, true};
                tour.jumps.push_back(j);
                if (!is_valid_tour(tour)) continue;
                if (target.kind == TargetKind::Any || matches_target(classify(tour), target))
                    ++count;
            }
            return;
        }
        for (const DirectedJump &j : neighbors(spec, cur)) {
            Square next = apply_jump(spec, j);
            if (visited.count(next)) continue;
            EdgeId id = canonical_edge(spec, j);
            if (used.count(id)) continue;
            visited.insert(next);
            used.insert(id);
            path.push_back(j);
            rec(next);
            path.pop_back();
            used.erase(id);
            visited.erase(next);
        }
    }

    long long run() {
        if (spec.square_count() == 1) {
            Tour empty{spec, {0, 0}, {}, true};
            if (target.kind == TargetKind::Any) return 1;
            return matches_target(classify(empty), target) ? 1 : 0;
        }
        visited.insert({0, 0});
        rec({0, 0});
        return count;
    }
};

long long naive_count(const BoardSpec &spec, const ClassTarget &target) {
    NaiveCounter c{spec, target};
    return c.run();
}

long long engine_count(const BoardSpec &spec, const ClassTarget &target,
                       const PruneOptions &prune = {}) {
    SearchProblem p{spec, target, {}, SearchMode::CountAll};
    SearchOutcome out = count_tours(p, {}, prune);
    REQUIRE(out.status == SearchStatus::Exhausted);
    return out.count;
}

} // namespace

TEST_CASE("worked examples: tiny boards") {
    // the 2x1 cylinder carries exactly one undirected tour, and it winds
    SearchProblem c21{{Topology::Cylinder, 2, 1}, ClassTarget::any(), {}, SearchMode::CountAll};
    SearchOutcome counted = count_tours(c21);
    CHECK(counted.status == SearchStatus::Exhausted);
    CHECK(counted.count == 1);

    SearchOutcome found = find_tour(c21);
    REQUIRE(found.status == SearchStatus::Found);
    HomotopyClass cls = classify(*found.tour);
    CHECK((cls == HomotopyClass::cylinder(4) || cls == HomotopyClass::cylinder(-4)));

    // one-square boards have exactly the empty tour
    SearchProblem c11{{Topology::Cylinder, 1, 1}, ClassTarget::identity(), {}, SearchMode::CountAll};
    CHECK(count_tours(c11).count == 1);
    SearchProblem t11{{Topology::Torus, 1, 1}, ClassTarget::longitude(), {}, SearchMode::CountAll};
    CHECK(count_tours(t11).count == 0);

    // the 4x4 rectangle has no closed tour at all
    SearchProblem r44{{Topology::Regular, 4, 4}, ClassTarget::any(), {}, SearchMode::CountAll};
    SearchOutcome none = count_tours(r44);
    CHECK(none.status == SearchStatus::Exhausted);
    CHECK(none.count == 0);
}

TEST_CASE("two-square tori: identity and longitude verdicts") {
    const BoardSpec t12{Topology::Torus, 1, 2};
    const BoardSpec t21{Topology::Torus, 2, 1};

    CHECK(prove_nonexistence({t12, ClassTarget::identity(), {}, SearchMode::ProveNone}).status ==
          SearchStatus::NoSolution);
    CHECK(prove_nonexistence({t21, ClassTarget::identity(), {}, SearchMode::ProveNone}).status ==
          SearchStatus::NoSolution);
    CHECK(prove_nonexistence({t21, ClassTarget::longitude(), {}, SearchMode::ProveNone}).status ==
          SearchStatus::NoSolution);

    // but T(1,2) carries a longitude and T(2,1) carries tours of other classes
    SearchOutcome lon = find_tour({t12, ClassTarget::longitude(), {}, SearchMode::FindOne});
    REQUIRE(lon.status == SearchStatus::Found);
    CHECK(matches_target(classify(*lon.tour), ClassTarget::longitude()));

    SearchOutcome any21 = find_tour({t21, ClassTarget::any(), {}, SearchMode::FindOne});
    REQUIRE(any21.status == SearchStatus::Found);
    CHECK_FALSE(classify(*any21.tour).is_identity());
}

TEST_CASE("engine counts match the naive enumeration oracle") {
    struct Case {
        BoardSpec spec;
        ClassTarget target;
    };
    const Case cases[] = {
        {{Topology::Cylinder, 2, 1}, ClassTarget::any()},
        {{Topology::Cylinder, 3, 2}, ClassTarget::any()},
        {{Topology::Cylinder, 3, 2}, ClassTarget::identity()},
        {{Topology::Cylinder, 4, 2}, ClassTarget::any()},
        {{Topology::Cylinder, 3, 1}, ClassTarget::any()},
        {{Topology::Cylinder, 4, 1}, ClassTarget::identity()},
        {{Topology::Torus, 2, 2}, ClassTarget::any()},
        {{Topology::Torus, 2, 2}, ClassTarget::identity()},
        {{Topology::Torus, 1, 3}, ClassTarget::any()},
        {{Topology::Torus, 3, 1}, ClassTarget::any()},
        {{Topology::Torus, 1, 4}, ClassTarget::longitude()},
        {{Topology::Torus, 2, 3}, ClassTarget::any()},
        {{Topology::Torus, 2, 4}, ClassTarget::longitude()},
        {{Topology::Regular, 3, 4}, ClassTarget::any()},
    };
    for (const Case &c : cases) {
        CAPTURE(c.spec.m);
        CAPTURE(c.spec.n);
        long long expected = naive_count(c.spec, c.target);
        CHECK(engine_count(c.spec, c.target) == expected);
        CHECK(engine_count(c.spec, c.target, PruneOptions::none()) == expected);
    }
}

TEST_CASE("frozen rectangle tour counts") {
    // classical catalog values: closed tour diagrams on 3-row boards
    CHECK(engine_count({Topology::Regular, 3, 10}, ClassTarget::any()) == 16);
    CHECK(engine_count({Topology::Regular, 10, 3}, ClassTarget::any()) == 16);
}

TEST_CASE("find_tour solves the classic 8x8 quickly and deterministically") {
    SearchProblem p{{Topology::Regular, 8, 8}, ClassTarget::any(), {}, SearchMode::FindOne};
    SearchOutcome a = find_tour(p);
    REQUIRE(a.status == SearchStatus::Found);
    CHECK(is_valid_tour(*a.tour));
    CHECK(a.tour->closed);
    SearchOutcome b = find_tour(p);
    REQUIRE(b.status == SearchStatus::Found);
    CHECK(*a.tour == *b.tour);
}

TEST_CASE("required edges are honored") {
    const BoardSpec spec{Topology::Regular, 5, 6};
    EdgeId pinned = canonical_edge(spec, {{0, 0}, {1, 2}});
    SearchProblem p{spec, ClassTarget::any(), {pinned}, SearchMode::FindOne};
    SearchOutcome out = find_tour(p);
    REQUIRE(out.status == SearchStatus::Found);
    bool traversed = false;
    for (const DirectedJump &j : out.tour->jumps)
        if (canonical_edge(spec, j) == pinned) traversed = true;
    CHECK(traversed);

    // non-canonical ids are rejected up front
    SearchProblem bad{spec, ClassTarget::any(), {EdgeId{{1, 2}, {-1, -2}}}, SearchMode::FindOne};
    CHECK_THROWS_AS(find_tour(bad), InvalidProblem);
}

TEST_CASE("problem validation rejects target and topology clashes") {
    CHECK_THROWS_AS(find_tour({{Topology::Regular, 5, 6}, ClassTarget::identity(), {}, {}}),
                    InvalidProblem);
    CHECK_THROWS_AS(find_tour({{Topology::Torus, 3, 3}, ClassTarget::generator(), {}, {}}),
                    TargetTopologyMismatch);
    CHECK_THROWS_AS(find_tour({{Topology::Cylinder, 3, 3}, ClassTarget::longitude(), {}, {}}),
                    TargetTopologyMismatch);
    CHECK_THROWS_AS(
        find_tour({{Topology::Cylinder, 3, 3},
                   ClassTarget::exact_class(HomotopyClass::torus(0, 1)),
                   {},
                   {}}),
        TargetTopologyMismatch);
}

TEST_CASE("budget exhaustion reports node and time usage") {
    SearchProblem p{{Topology::Regular, 8, 8}, ClassTarget::any(), {}, SearchMode::CountAll};
    SearchOutcome out = count_tours(p, {100, 600'000});
    CHECK(out.status == SearchStatus::BudgetExceeded);
    CHECK(out.stats.nodes >= 100);
}

TEST_CASE("prune toggles never change prove_nonexistence verdicts (toy sizes)") {
    const PruneOptions variants[] = {
        PruneOptions::all(),  PruneOptions::none(),     {true, false, false, false},
        {false, true, false, false}, {false, false, true, false}, {false, false, false, true}};
    for (Topology t : {Topology::Regular, Topology::Cylinder, Topology::Torus})
        for (int m = 1; m <= 4; ++m)
            for (int n = 1; n <= 2; ++n) {
                if (m * n > 8) continue;
                BoardSpec spec{t, m, n};
                std::vector<ClassTarget> targets{ClassTarget::any()};
                if (t != Topology::Regular) targets.push_back(ClassTarget::identity());
                for (const ClassTarget &target : targets) {
                    SearchStatus first = SearchStatus::NoSolution;
                    bool have = false;
                    for (const PruneOptions &pr : variants) {
                        SearchOutcome out =
                            prove_nonexistence({spec, target, {}, SearchMode::ProveNone}, {}, pr);
                        REQUIRE(out.status != SearchStatus::BudgetExceeded);
                        if (!have) {
                            first = out.status;
                            have = true;
                        } else {
                            CHECK(out.status == first);
                        }
                    }
                }
            }
}

TEST_CASE("open tours: endpoints, parity and the 3x3 core") {
    const BoardSpec r34{Topology::Regular, 3, 4};
    SearchOutcome ok = find_open_tour(r34, {0, 0}, {2, 3});
    REQUIRE(ok.status == SearchStatus::Found);
    CHECK(is_valid_tour(*ok.tour));
    CHECK_FALSE(ok.tour->closed);
    CHECK(ok.tour->start == Square{0, 0});
    CHECK(visit_order(*ok.tour).back() == Square{2, 3});

    // same-color endpoints cannot work on an even board
    CHECK(find_open_tour(r34, {0, 0}, {1, 1}).status == SearchStatus::NoSolution);

    // the 3x3 center square is unreachable
    CHECK(find_open_tour({Topology::Regular, 3, 3}, {0, 0}, {2, 2}).status ==
          SearchStatus::NoSolution);

    // open tours are a rectangle notion
    CHECK_THROWS_AS(find_open_tour({Topology::Cylinder, 3, 4}, {0, 0}, {2, 3}, {}),
                    InvalidProblem);

    // single square: the empty open tour
    SearchOutcome empty = find_open_tour({Topology::Regular, 1, 1}, {0, 0}, {0, 0});
    REQUIRE(empty.status == SearchStatus::Found);
    CHECK(empty.tour->jumps.empty());
}

TEST_CASE("for_each_tour honors lift bands and required lift edges") {
    const BoardSpec t12{Topology::Torus, 1, 2};
    SearchProblem p{t12, ClassTarget::longitude(), {}, SearchMode::FindOne};

    LiftConstraints band;
    band.b_min = 0;
    band.b_max = 2;
    long long seen = 0;
    SearchOutcome all = for_each_tour(p, band, {}, [&](const Tour &t) {
        CHECK(is_valid_tour(t));
        ++seen;
        return true;
    });
    CHECK(all.status == SearchStatus::Exhausted);
    // upward longitudes only: first move (2,1) or (-2,1), each with one closing
    CHECK(seen == 2);

    LiftConstraints pinned = band;
    pinned.required_lift_edges.push_back({{0, 0}, {2, 1}});
    long long pinned_seen = 0;
    for_each_tour(p, pinned, {}, [&](const Tour &) {
        ++pinned_seen;
        return true;
    });
    CHECK(pinned_seen == 1);

    // the allow predicate can carve arbitrary holes
    LiftConstraints blocked = band;
    blocked.allow = [](LiftPoint q) { return !(q == LiftPoint{2, 1}); };
    long long blocked_seen = 0;
    for_each_tour(p, blocked, {}, [&](const Tour &) {
        ++blocked_seen;
        return true;
    });
    CHECK(blocked_seen == 1);
}

TEST_CASE("constrained searches find surface tours of pinned classes") {
    // a nullhomotopic tour on the 3x2 cylinder
    SearchOutcome nul = find_tour({{Topology::Cylinder, 3, 2}, ClassTarget::identity(), {}, {}});
    REQUIRE(nul.status == SearchStatus::Found);
    CHECK(classify(*nul.tour).is_identity());

    // a longitude on the 3x3 torus
    SearchOutcome lon = find_tour({{Topology::Torus, 3, 3}, ClassTarget::longitude(), {}, {}});
    REQUIRE(lon.status == SearchStatus::Found);
    CHECK(matches_target(classify(*lon.tour), ClassTarget::longitude()));

    // an exact winding on the 2x1 cylinder, direction agnostic
    SearchOutcome w4 = find_tour(
        {{Topology::Cylinder, 2, 1}, ClassTarget::exact_class(HomotopyClass::cylinder(4)), {}, {}});
    REQUIRE(w4.status == SearchStatus::Found);

    // generators need m odd on cylinders with odd n
    SearchOutcome gen = find_tour({{Topology::Cylinder, 3, 1}, ClassTarget::generator(), {}, {}});
    REQUIRE(gen.status == SearchStatus::Found);
    HomotopyClass g = classify(*gen.tour);
    CHECK((g.k == 1 || g.k == -1));
}
