#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "knights/lift.hpp"
#include "knights/search.hpp"
#include "knights/tour.hpp"

namespace knights {

// Inductive tour families. Each id owns an admissible (m,n) set; the Mx
// families grow the board's a-extent, the xN families grow the b-extent.
enum class Family {
    NullCyl_Mx1,
    NullCyl_Mx2,
    NullCyl_Mx3,
    NullCyl_3xN,
    NullCyl_Mx4,
    NullCyl_4xN,
    NullTorus_Small,
    GenCyl_Mx1,
    GenCyl_Mx2,
    GenCyl_Mx3,
    GenCyl_3xN,
    GenCyl_Mx4,
    GenCyl_5xN,
    GenCyl_Delegated,
    LonTorus_1xN,
    LonTorus_2xN,
    LonTorus_4xN,
};

const std::vector<Family> &all_families();
std::string family_name(Family family);
std::optional<Family> family_from_name(const std::string &name);

// board topology and tour class the family produces
Topology family_topology(Family family);
ClassTarget family_target(Family family);

// What a fixture of this family at this size must look like for the
// induction step to apply. Edge-hook families name lift edges; band
// families constrain the lift path instead.
struct HookSpec {
    Family family = Family::NullCyl_Mx1;
    int m = 0;
    int n = 0;
    // lift edges consumed by the next extension step
    std::vector<std::pair<LiftPoint, LiftPoint>> hook_edges;
    // lift edges that must be present but survive the step
    std::vector<std::pair<LiftPoint, LiftPoint>> extra_edges;
    // lift-path constraints for band families
    LiftConstraints band;
    bool banded = false;
    // false for one-off fixture sizes with no extension step
    bool inductive = false;
};

HookSpec hook_spec(Family family, int m, int n);

// sizes derive_base_case accepts (induction bases plus one-off fixtures)
std::vector<std::pair<int, int>> base_sizes(Family family);

// whole admissible size set of the family
bool family_admits(Family family, int m, int n);

struct Fixture {
    Family family = Family::NullCyl_Mx1;
    int m = 0;
    int n = 0;
    Tour tour;
    std::string checksum;
};

// Derives a base-case fixture by constrained search. Candidates that
// cannot survive eight extension steps are rejected, so every stored
// base is known to feed its induction. Deterministic.
Fixture derive_base_case(Family family, int m, int n, Budget budget = {});

// One induction step: literal lift-coordinate surgery, then projection
// and full validation at the next size.
Fixture extend(Family family, const Fixture &fixture);

// checks tour against the fixture contract of (family, m, n)
void validate_fixture(const Fixture &fixture);

// Builds a tour of the requested class on the given board, via family
// induction where a family covers the size and delegated rectangle
// searches elsewhere. Throws Unsupported when no such tour exists.
Tour construct(const BoardSpec &spec, const ClassTarget &target, Budget budget = {});

// in-memory fixture cache shared by construct and the sweeps
void clear_fixture_cache();
Fixture get_fixture(Family family, int m, int n, Budget budget = {});
void seed_fixture_cache(const Fixture &fixture);

} // namespace knights
