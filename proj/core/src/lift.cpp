#include "knights/lift.hpp"

#include "knights/errors.hpp"

namespace knights {

Color color(LiftPoint p) {
    int s = (p.a + p.b) % 2;
    return s == 0 ? Color::Red : Color::Blue;
}

LiftPath lift_tour(const Tour &tour) {
    if (tour.spec.topology == Topology::Regular)
        throw NotASurface("rectangles have no identified direction to unroll");
    if (!tour.closed) throw InvalidTour("only closed tours lift to classifiable paths");
    validate_tour(tour);

    LiftPath lift{tour.spec, {}};
    lift.points.reserve(tour.jumps.size() + 1);
    LiftPoint cur{tour.start.a, tour.start.b};
    lift.points.push_back(cur);
    for (const DirectedJump &j : tour.jumps) {
        cur.a += j.pair.x;
        cur.b += j.pair.y;
        lift.points.push_back(cur);
    }
    return lift;
}

HomotopyClass classify(const Tour &tour) {
    LiftPath lift = lift_tour(tour);
    const LiftPoint first = lift.points.front();
    const LiftPoint last = lift.points.back();
    const long long da = last.a - first.a;
    const long long db = last.b - first.b;
    if (tour.spec.topology == Topology::Cylinder) {
        // a never wraps, so a closed tour always returns to its exact column
        return HomotopyClass::cylinder(db / tour.spec.n);
    }
    return HomotopyClass::torus(da / tour.spec.m, db / tour.spec.n);
}

bool matches_target(const HomotopyClass &cls, const ClassTarget &target) {
    switch (target.kind) {
    case TargetKind::Any:
        return true;
    case TargetKind::Identity:
        return cls.is_identity();
    case TargetKind::Generator:
        if (cls.topology != Topology::Cylinder)
            throw TargetTopologyMismatch("generator targets apply to cylinders only");
        return cls.k == 1 || cls.k == -1;
    case TargetKind::Longitude:
        if (cls.topology != Topology::Torus)
            throw TargetTopologyMismatch("longitude targets apply to tori only");
        return cls.p == 0 && (cls.q == 1 || cls.q == -1);
    case TargetKind::Exact:
        if (cls.topology != target.exact->topology)
            throw TargetTopologyMismatch("exact target declared for a different topology");
        return cls == *target.exact || cls == -*target.exact;
    }
    throw InvalidProblem("unknown target kind");
}

bool parity_obstruction(const BoardSpec &spec, const ClassTarget &target) {
    const bool m_odd = spec.m % 2 != 0;
    const bool n_odd = spec.n % 2 != 0;
    switch (target.kind) {
    case TargetKind::Identity:
        if (spec.topology == Topology::Regular)
            throw InvalidProblem("identity targets apply to surfaces only");
        // need da + db = 0 = m*n (mod 2)
        return m_odd && n_odd && spec.square_count() > 1;
    case TargetKind::Generator:
        if (spec.topology != Topology::Cylinder)
            throw TargetTopologyMismatch("generator targets apply to cylinders only");
        // need n = m*n (mod 2), i.e. n(m-1) even
        return !m_odd && n_odd;
    case TargetKind::Longitude:
        if (spec.topology != Topology::Torus)
            throw TargetTopologyMismatch("longitude targets apply to tori only");
        // need p*m + q*n = n = m*n (mod 2), same as the generator case
        return !m_odd && n_odd;
    default:
        throw InvalidProblem("parity obstruction is defined for identity, generator and longitude");
    }
}

} // namespace knights
