#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <set>

#include "knights/board.hpp"
#include "knights/lift.hpp"
#include "knights/tour.hpp"

namespace knights {

struct Budget {
    long long max_nodes = 50'000'000;
    long long max_wall_ms = 600'000;
};

enum class SearchMode { FindOne, ProveNone, CountAll };

// Closed-tour search on one board. required_edges are canonical ids the tour
// must traverse. The mode field records intent for serialization and the
// command line; the entry points below each impose their own semantics.
struct SearchProblem {
    BoardSpec spec;
    ClassTarget target = ClassTarget::any();
    std::set<EdgeId> required_edges;
    SearchMode mode = SearchMode::FindOne;
};

// All prunes preserve the full solution set, so toggling them changes node
// counts, never verdicts: parity and winding bound the reachable lift
// endpoints, degree rejects states with a stranded square, connectivity
// rejects states whose unvisited region fell apart.
struct PruneOptions {
    bool parity = true;
    bool winding = true;
    bool degree = true;
    bool connectivity = true;

    static PruneOptions all() { return {}; }
    static PruneOptions none() { return {false, false, false, false}; }
};

struct SearchStats {
    long long nodes = 0;
    long long ms = 0;
};

enum class SearchStatus { Found, NoSolution, Exhausted, BudgetExceeded };

struct SearchOutcome {
    SearchStatus status = SearchStatus::NoSolution;
    std::optional<Tour> tour; // Found
    long long count = 0;      // Exhausted
    SearchStats stats;
};

// Extra conditions on the lifted path, used when deriving construction
// fixtures: a coordinate band every lift point must stay inside, specific
// lift edges the tour must traverse, and an arbitrary extra predicate.
struct LiftConstraints {
    std::optional<int> a_min, a_max, b_min, b_max;
    std::vector<std::pair<LiftPoint, LiftPoint>> required_lift_edges;
    std::function<bool(LiftPoint)> allow;
};

// Depth-first search over lifted positions, single threaded and fully
// deterministic. Closed tours are anchored at square (0,0); counting treats
// tours as undirected (of each direction pair, the one whose first
// displacement index is smaller than the reversed closing displacement's
// index is counted).

// first satisfying tour, Warnsdorff move ordering; NoSolution means the
// space was exhausted
SearchOutcome find_tour(const SearchProblem &problem, const Budget &budget = {},
                        const PruneOptions &prune = {});

// exhausts the space in displacement order; a counterexample comes back as
// Found, success as NoSolution
SearchOutcome prove_nonexistence(const SearchProblem &problem, const Budget &budget = {},
                                 const PruneOptions &prune = {});

// Exhausted(count) over undirected, rotation-normalized tours
SearchOutcome count_tours(const SearchProblem &problem, const Budget &budget = {},
                          const PruneOptions &prune = {});

// Open tour on a rectangle from one square to another (every square exactly
// once, no return move). required_edges, when given, must all be traversed.
SearchOutcome find_open_tour(const BoardSpec &spec, Square from, Square to,
                             const Budget &budget = {},
                             const std::set<EdgeId> &required_edges = {});

// Enumerate closed tours satisfying problem and constraints in engine order
// (no direction normalization); the callback returns false to stop early.
// Exhausted(count) when the space ran out, Found when the callback stopped.
SearchOutcome for_each_tour(const SearchProblem &problem, const LiftConstraints &constraints,
                            const Budget &budget,
                            const std::function<bool(const Tour &)> &on_found);

} // namespace knights
