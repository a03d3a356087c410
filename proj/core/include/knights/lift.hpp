#pragma once

#include <optional>
#include <vector>

#include "knights/board.hpp"
#include "knights/tour.hpp"

namespace knights {

// vertex of the covering graph: the width-m strip over a cylinder, where a
// stays in [0, m) and b is unbounded, or the full plane over a torus
struct LiftPoint {
    int a = 0;
    int b = 0;

    friend auto operator<=>(const LiftPoint &, const LiftPoint &) = default;
};

enum class Color { Red, Blue };

// red iff a+b is even; every knight edge joins opposite colors
Color color(LiftPoint p);

// A closed tour unrolled in the covering graph, jump by jump, starting from
// the canonical lift (start.a, start.b) of the start square. Covers m*n
// jumps, so points has m*n+1 entries (1 for the empty tour).
struct LiftPath {
    BoardSpec spec;
    std::vector<LiftPoint> points;
};

// Homotopy class of a closed tour on a surface: the winding number k around
// a cylinder, or the winding pair (p around columns, q around rows) of a
// torus. The identity class is k = 0 resp. (p, q) = (0, 0).
struct HomotopyClass {
    Topology topology = Topology::Cylinder;
    long long k = 0;
    long long p = 0;
    long long q = 0;

    static HomotopyClass cylinder(long long k) { return {Topology::Cylinder, k, 0, 0}; }
    static HomotopyClass torus(long long p, long long q) { return {Topology::Torus, 0, p, q}; }

    bool is_identity() const {
        return topology == Topology::Cylinder ? k == 0 : (p == 0 && q == 0);
    }
    HomotopyClass operator-() const { return {topology, -k, -p, -q}; }

    friend bool operator==(const HomotopyClass &, const HomotopyClass &) = default;
};

enum class TargetKind { Identity, Generator, Longitude, Exact, Any };

// What class a search or construction should aim for. Generator means
// winding +-1 on a cylinder; Longitude means (0, +-1) on a torus; Exact
// matches a declared class up to sign, since reversing a tour negates its
// class; Any accepts everything.
struct ClassTarget {
    TargetKind kind = TargetKind::Any;
    std::optional<HomotopyClass> exact;

    static ClassTarget identity() { return {TargetKind::Identity, std::nullopt}; }
    static ClassTarget generator() { return {TargetKind::Generator, std::nullopt}; }
    static ClassTarget longitude() { return {TargetKind::Longitude, std::nullopt}; }
    static ClassTarget exact_class(HomotopyClass c) { return {TargetKind::Exact, c}; }
    static ClassTarget any() { return {TargetKind::Any, std::nullopt}; }

    friend bool operator==(const ClassTarget &, const ClassTarget &) = default;
};

// Unroll a closed tour in the covering graph of its surface.
// Throws NotASurface for rectangles and InvalidTour for open/invalid tours.
LiftPath lift_tour(const Tour &tour);

// Class from the lift's endpoint displacement: k = (end.b - start.b) / n on
// a cylinder, (p, q) = ((end.a - start.a) / m, (end.b - start.b) / n) on a
// torus. Rotating a closed tour never changes this; reversing negates it.
HomotopyClass classify(const Tour &tour);

// Throws TargetTopologyMismatch when the target cannot apply to the class's
// topology (Generator off a cylinder, Longitude off a torus, Exact across
// topologies).
bool matches_target(const HomotopyClass &cls, const ClassTarget &target);

// Color-count obstruction. A closed tour traverses m*n edges in a bipartite
// covering graph, so its lift endpoint displacement (da, db) must satisfy
// da + db = m*n (mod 2). Returns true when the target class is impossible:
//   Identity on a surface: m, n both odd and m*n > 1
//   Generator on a cylinder, Longitude on a torus: m even and n odd
// Only those three targets are meaningful here; anything else throws
// InvalidProblem (or TargetTopologyMismatch for a target/topology clash).
bool parity_obstruction(const BoardSpec &spec, const ClassTarget &target);

} // namespace knights
