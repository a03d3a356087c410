#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "knights/errors.hpp"
#include "knights/lift.hpp"

using namespace knights;

namespace {

Tour cyl21_bigon() {
    return {{Topology::Cylinder, 2, 1}, {0, 0}, {{{0, 0}, {1, 2}}, {{1, 0}, {-1, 2}}}, true};
}

Tour torus12_bigon() {
    return {{Topology::Torus, 1, 2}, {0, 0}, {{{0, 0}, {2, 1}}, {{0, 1}, {-2, 1}}}, true};
}

Tour torus22_cycle() {
    return {{Topology::Torus, 2, 2},
            {0, 0},
            {{{0, 0}, {1, 2}}, {{1, 0}, {2, 1}}, {{1, 1}, {1, 2}}, {{0, 1}, {2, 1}}},
            true};
}

} // namespace

TEST_CASE("colors alternate across every knight edge") {
    CHECK(color({0, 0}) == Color::Red);
    CHECK(color({0, 1}) == Color::Blue);
    CHECK(color({-1, 0}) == Color::Blue);
    CHECK(color({-2, -3}) == Color::Blue);
    CHECK(color({-1, -1}) == Color::Red);
    for (KnightPair p : knight_pairs()) {
        LiftPoint from{3, -2};
        LiftPoint to{from.a + p.x, from.b + p.y};
        CHECK(color(from) != color(to));
    }
}

TEST_CASE("lift unrolls jumps from the canonical lift of the start square") {
    LiftPath lift = lift_tour(cyl21_bigon());
    REQUIRE(lift.points.size() == 3);
    CHECK(lift.points[0] == LiftPoint{0, 0});
    CHECK(lift.points[1] == LiftPoint{1, 2});
    CHECK(lift.points[2] == LiftPoint{0, 4});
    for (const LiftPoint &p : lift.points) {
        CHECK(p.a >= 0);
        CHECK(p.a < lift.spec.m);
    }

    // a rotated tour starts its lift at the new start's canonical lift
    Tour rot = rotate_tour(cyl21_bigon(), {1, 0});
    CHECK(lift_tour(rot).points[0] == LiftPoint{1, 0});

    CHECK(lift_tour(torus22_cycle()).points.back() == LiftPoint{6, 6});
}

TEST_CASE("lift rejects rectangles and open tours") {
    Tour open{{Topology::Regular, 3, 4}, {0, 0}, {}, false};
    CHECK_THROWS_AS(lift_tour({{Topology::Regular, 1, 1}, {0, 0}, {}, true}), NotASurface);
    Tour surf_open{{Topology::Cylinder, 2, 1}, {0, 0}, {{{0, 0}, {1, 2}}}, false};
    CHECK_THROWS_AS(lift_tour(surf_open), InvalidTour);
}

TEST_CASE("classification reads the winding off the lift endpoint") {
    CHECK(classify(cyl21_bigon()) == HomotopyClass::cylinder(4));
    CHECK(classify(torus12_bigon()) == HomotopyClass::torus(0, 1));
    CHECK(classify(torus22_cycle()) == HomotopyClass::torus(3, 3));

    // empty tours are identity
    CHECK(classify({{Topology::Cylinder, 1, 1}, {0, 0}, {}, true}).is_identity());
    CHECK(classify({{Topology::Torus, 1, 1}, {0, 0}, {}, true}).is_identity());
}

TEST_CASE("classification is rotation invariant and reversal negates it") {
    for (const Tour &t : {cyl21_bigon(), torus12_bigon(), torus22_cycle()}) {
        HomotopyClass cls = classify(t);
        for (Square s : all_squares(t.spec)) CHECK(classify(rotate_tour(t, s)) == cls);
        CHECK(classify(reverse_tour(t)) == -cls);
    }
}

TEST_CASE("embedding a cylinder tour into a torus moves k to q") {
    HomotopyClass cyl = classify(cyl21_bigon());
    HomotopyClass tor = classify(embed_tour(cyl21_bigon(), Topology::Torus));
    CHECK(tor == HomotopyClass::torus(0, cyl.k));

    // transposing a torus tour swaps the winding pair
    HomotopyClass flipped = classify(transpose_tour(torus22_cycle()));
    CHECK(flipped == HomotopyClass::torus(3, 3));
    CHECK(classify(transpose_tour(torus12_bigon())) == HomotopyClass::torus(1, 0));
}

TEST_CASE("matches_target distinguishes the named classes") {
    const HomotopyClass k0 = HomotopyClass::cylinder(0);
    const HomotopyClass k1 = HomotopyClass::cylinder(1);
    const HomotopyClass km1 = HomotopyClass::cylinder(-1);
    const HomotopyClass k4 = HomotopyClass::cylinder(4);
    const HomotopyClass t00 = HomotopyClass::torus(0, 0);
    const HomotopyClass lon = HomotopyClass::torus(0, -1);

    CHECK(matches_target(k0, ClassTarget::identity()));
    CHECK_FALSE(matches_target(k1, ClassTarget::identity()));
    CHECK(matches_target(t00, ClassTarget::identity()));

    CHECK(matches_target(k1, ClassTarget::generator()));
    CHECK(matches_target(km1, ClassTarget::generator()));
    CHECK_FALSE(matches_target(k4, ClassTarget::generator()));
    CHECK_THROWS_AS(matches_target(t00, ClassTarget::generator()), TargetTopologyMismatch);

    CHECK(matches_target(lon, ClassTarget::longitude()));
    CHECK_FALSE(matches_target(HomotopyClass::torus(1, 1), ClassTarget::longitude()));
    CHECK_THROWS_AS(matches_target(k1, ClassTarget::longitude()), TargetTopologyMismatch);

    // exact targets are direction agnostic
    CHECK(matches_target(k4, ClassTarget::exact_class(HomotopyClass::cylinder(-4))));
    CHECK(matches_target(lon, ClassTarget::exact_class(HomotopyClass::torus(0, 1))));
    CHECK_FALSE(matches_target(k4, ClassTarget::exact_class(k1)));
    CHECK_THROWS_AS(matches_target(k4, ClassTarget::exact_class(t00)), TargetTopologyMismatch);

    CHECK(matches_target(k4, ClassTarget::any()));
    CHECK(matches_target(t00, ClassTarget::any()));
}

TEST_CASE("parity obstruction blocks exactly the impossible color counts") {
    auto cyl = [](int m, int n) { return BoardSpec{Topology::Cylinder, m, n}; };
    auto tor = [](int m, int n) { return BoardSpec{Topology::Torus, m, n}; };

    // identity needs m*n even once there is more than one square
    CHECK(parity_obstruction(cyl(3, 3), ClassTarget::identity()));
    CHECK(parity_obstruction(cyl(3, 1), ClassTarget::identity()));
    CHECK(parity_obstruction(tor(5, 5), ClassTarget::identity()));
    CHECK_FALSE(parity_obstruction(cyl(1, 1), ClassTarget::identity()));
    CHECK_FALSE(parity_obstruction(tor(1, 1), ClassTarget::identity()));
    CHECK_FALSE(parity_obstruction(cyl(4, 3), ClassTarget::identity()));
    CHECK_FALSE(parity_obstruction(tor(2, 2), ClassTarget::identity()));

    // generator and longitude need n(m-1) even
    CHECK(parity_obstruction(cyl(4, 3), ClassTarget::generator()));
    CHECK(parity_obstruction(cyl(2, 1), ClassTarget::generator()));
    CHECK_FALSE(parity_obstruction(cyl(4, 4), ClassTarget::generator()));
    CHECK_FALSE(parity_obstruction(cyl(3, 3), ClassTarget::generator()));
    CHECK(parity_obstruction(tor(2, 3), ClassTarget::longitude()));
    CHECK_FALSE(parity_obstruction(tor(2, 4), ClassTarget::longitude()));
    CHECK_FALSE(parity_obstruction(tor(3, 3), ClassTarget::longitude()));

    CHECK_THROWS_AS(parity_obstruction(cyl(3, 3), ClassTarget::any()), InvalidProblem);
    CHECK_THROWS_AS(parity_obstruction(cyl(3, 3),
                                       ClassTarget::exact_class(HomotopyClass::cylinder(2))),
                    InvalidProblem);
    CHECK_THROWS_AS(parity_obstruction(tor(3, 3), ClassTarget::generator()), TargetTopologyMismatch);
    CHECK_THROWS_AS(parity_obstruction(cyl(3, 3), ClassTarget::longitude()), TargetTopologyMismatch);
    CHECK_THROWS_AS(parity_obstruction({Topology::Regular, 3, 3}, ClassTarget::identity()),
                    InvalidProblem);
}
