#include "knights/construct.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <tuple>

#include "knights/errors.hpp"
#include "knights/serialize.hpp"
#include "knights/theorems.hpp"

namespace knights {

namespace {

int mod_floor(int v, int mod) {
    int r = v % mod;
    return r < 0 ? r + mod : r;
}

LiftPoint lp(int a, int b) { return LiftPoint{a, b}; }

LiftPoint shift(LiftPoint p, int da, int db) { return {p.a + da, p.b + db}; }

using LiftEdge = std::pair<LiftPoint, LiftPoint>;

LiftEdge norm_edge(LiftPoint p, LiftPoint q) { return q < p ? LiftEdge{q, p} : LiftEdge{p, q}; }

LiftEdge shift_edge(const LiftEdge &e, int da, int db) {
    return norm_edge(shift(e.first, da, db), shift(e.second, da, db));
}

bool is_knight_delta(int dx, int dy) {
    for (const KnightPair &p : knight_pairs())
        if (p.x == dx && p.y == dy) return true;
    return false;
}

Square project_point(const BoardSpec &spec, LiftPoint p) {
    int a = p.a, b = p.b;
    if (spec.topology == Topology::Torus) a = mod_floor(a, spec.m);
    if (spec.topology != Topology::Regular) b = mod_floor(b, spec.n);
    return {a, b};
}

std::set<LiftEdge> lift_edge_set(const Tour &tour) {
    LiftPath path = lift_tour(tour);
    std::set<LiftEdge> out;
    for (std::size_t i = 0; i + 1 < path.points.size(); ++i)
        out.insert(norm_edge(path.points[i], path.points[i + 1]));
    return out;
}

// Rebuilds the closed tour whose lift traverses exactly the given edges.
// The walk starts at the base point and is deterministic; any leftover
// edges mean the surgery split the path.
Tour trace_lift_edges(const BoardSpec &spec, const std::set<LiftEdge> &edges) {
    std::map<LiftPoint, std::vector<LiftPoint>> adjacent;
    for (const LiftEdge &e : edges) {
        adjacent[e.first].push_back(e.second);
        adjacent[e.second].push_back(e.first);
    }
    for (auto &[point, nbs] : adjacent) {
        if (nbs.size() > 2)
            throw StepInvalid("surgery produced a lift vertex of degree > 2");
        std::sort(nbs.begin(), nbs.end());
    }
    const LiftPoint origin{0, 0};
    if (!adjacent.count(origin)) throw StepInvalid("surgery removed the base point");

    std::set<LiftEdge> unused = edges;
    std::vector<LiftPoint> walk{origin};
    LiftPoint cur = origin;
    while (true) {
        const auto &nbs = adjacent[cur];
        bool advanced = false;
        for (const LiftPoint &next : nbs) {
            auto it = unused.find(norm_edge(cur, next));
            if (it == unused.end()) continue;
            unused.erase(it);
            walk.push_back(next);
            cur = next;
            advanced = true;
            break;
        }
        if (!advanced) break;
    }
    if (!unused.empty()) throw StepInvalid("surgery left the path disconnected");

    Tour tour{spec, {0, 0}, {}, true};
    tour.jumps.reserve(walk.size() - 1);
    for (std::size_t i = 0; i + 1 < walk.size(); ++i) {
        int dx = walk[i + 1].a - walk[i].a;
        int dy = walk[i + 1].b - walk[i].b;
        if (!is_knight_delta(dx, dy)) throw StepInvalid("surgery produced a non-knight edge");
        tour.jumps.push_back({project_point(spec, walk[i]), {dx, dy}});
    }
    return tour;
}

// Concatenates a directed lift path extension onto a band fixture.
Tour splice_band_path(const BoardSpec &spec, const std::vector<LiftPoint> &old_points,
                      const std::vector<LiftPoint> &tail) {
    if (tail.empty() || !(tail.front() == old_points.back()))
        throw StepInvalid("band extension does not start at the splice point");
    std::vector<LiftPoint> points = old_points;
    points.insert(points.end(), tail.begin() + 1, tail.end());
    Tour tour{spec, {0, 0}, {}, true};
    tour.jumps.reserve(points.size() - 1);
    for (std::size_t i = 0; i + 1 < points.size(); ++i) {
        int dx = points[i + 1].a - points[i].a;
        int dy = points[i + 1].b - points[i].b;
        if (!is_knight_delta(dx, dy)) throw StepInvalid("band extension has a non-knight step");
        tour.jumps.push_back({project_point(spec, points[i]), {dx, dy}});
    }
    return tour;
}

std::vector<LiftPoint> translated_tail(const Tour &block, int da, int db) {
    LiftPath path = lift_tour(block);
    std::vector<LiftPoint> out;
    out.reserve(path.points.size());
    for (const LiftPoint &p : path.points) out.push_back(shift(p, da, db));
    return out;
}

// ---- fixture cache ----

using CacheKey = std::tuple<Family, int, int>;

std::mutex g_cache_mutex;
std::map<CacheKey, Fixture> g_cache;

std::optional<Fixture> cache_lookup(Family family, int m, int n) {
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    auto it = g_cache.find({family, m, n});
    if (it == g_cache.end()) return std::nullopt;
    return it->second;
}

void cache_store(const Fixture &fx) {
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    g_cache.insert_or_assign({fx.family, fx.m, fx.n}, fx);
}

void cache_erase(Family family, int m, int n) {
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    g_cache.erase({family, m, n});
}

// ---- auxiliary spliced paths ----

std::mutex g_aux_mutex;

// open path on the 4x3 rectangle from (0,2) to (0,1) through {(3,0),(2,2)}
const Tour &gen_mx3_aux() {
    static std::optional<Tour> memo;
    std::lock_guard<std::mutex> lock(g_aux_mutex);
    if (!memo) {
        BoardSpec rect{Topology::Regular, 4, 3};
        EdgeId need = canonical_edge(rect, {{3, 0}, {-1, 2}});
        SearchOutcome out = find_open_tour(rect, {0, 2}, {0, 1}, {}, {need});
        if (out.status != SearchStatus::Found)
            throw BaseCaseNotFound("no spliceable open path on the 4x3 rectangle");
        memo = *out.tour;
    }
    return *memo;
}

// Two vertex-disjoint knight paths covering the local 3-wide by 4-tall
// block, with prescribed endpoints, jointly containing the two edges the
// next induction step will consume.
struct BlockCoverSearch {
    LiftPoint t1, s2, t2;
    std::vector<LiftPoint> path1, path2;
    std::set<LiftPoint> visited;
    std::vector<LiftEdge> found;
    bool done = false;

    static bool inside(LiftPoint p) { return p.a >= 0 && p.a < 3 && p.b >= 0 && p.b < 4; }

    std::vector<LiftPoint> moves(LiftPoint p) const {
        std::vector<LiftPoint> out;
        for (const KnightPair &kp : knight_pairs()) {
            LiftPoint q = shift(p, kp.x, kp.y);
            if (inside(q)) out.push_back(q);
        }
        return out;
    }

    void accept() {
        std::vector<LiftEdge> edges;
        for (std::size_t i = 0; i + 1 < path1.size(); ++i)
            edges.push_back(norm_edge(path1[i], path1[i + 1]));
        for (std::size_t i = 0; i + 1 < path2.size(); ++i)
            edges.push_back(norm_edge(path2[i], path2[i + 1]));
        auto has = [&](LiftPoint p, LiftPoint q) {
            return std::find(edges.begin(), edges.end(), norm_edge(p, q)) != edges.end();
        };
        if (!has(lp(2, 0), lp(1, 2)) || !has(lp(1, 0), lp(2, 2))) return;
        found = edges;
        done = true;
    }

    void rec2(LiftPoint cur) {
        if (done) return;
        if (cur == t2) {
            if (visited.size() == 12) accept();
            return;
        }
        for (LiftPoint next : moves(cur)) {
            if (visited.count(next)) continue;
            if (next == t2 && visited.size() + 1 != 12) continue;
            visited.insert(next);
            path2.push_back(next);
            rec2(next);
            if (done) return;
            path2.pop_back();
            visited.erase(next);
        }
    }

    void rec1(LiftPoint cur) {
        if (done) return;
        if (cur == t1) {
            visited.insert(s2);
            path2 = {s2};
            rec2(s2);
            path2.clear();
            visited.erase(s2);
            return;
        }
        for (LiftPoint next : moves(cur)) {
            if (visited.count(next)) continue;
            if (next == s2 || next == t2) continue;
            visited.insert(next);
            path1.push_back(next);
            rec1(next);
            if (done) return;
            path1.pop_back();
            visited.erase(next);
        }
    }

    std::optional<std::vector<LiftEdge>> run(LiftPoint s1, LiftPoint t1_, LiftPoint s2_,
                                             LiftPoint t2_) {
        t1 = t1_;
        s2 = s2_;
        t2 = t2_;
        visited = {s1};
        path1 = {s1};
        rec1(s1);
        if (!done) return std::nullopt;
        return found;
    }
};

// the three ways to pair up the block's four splice endpoints, in try order
const std::optional<std::vector<LiftEdge>> &gen_mx4_block(int pairing) {
    static std::optional<std::vector<LiftEdge>> memo[3];
    static bool computed[3] = {false, false, false};
    std::lock_guard<std::mutex> lock(g_aux_mutex);
    if (!computed[pairing]) {
        const LiftPoint e1{0, 1}, e2{1, 1}, e3{0, 3}, e4{1, 3};
        BlockCoverSearch search;
        switch (pairing) {
        case 0: memo[pairing] = search.run(e1, e2, e3, e4); break;
        case 1: memo[pairing] = search.run(e1, e3, e2, e4); break;
        default: memo[pairing] = search.run(e1, e4, e2, e3); break;
        }
        computed[pairing] = true;
    }
    return memo[pairing];
}

bool is_base_size(Family family, int m, int n) {
    for (auto [bm, bn] : base_sizes(family))
        if (bm == m && bn == n) return true;
    return false;
}

struct ChainRule {
    bool grows_m = true; // false: grows n
    int step = 0;
    int base_m = 0, base_n = 0;
};

// picks the induction base under the target size, or nullopt for
// one-off/unreachable sizes
std::optional<ChainRule> chain_rule(Family family, int m, int n) {
    auto mk = [](bool gm, int step, int bm, int bn) {
        return ChainRule{gm, step, bm, bn};
    };
    switch (family) {
    case Family::NullCyl_Mx1: return mk(true, 2, 4, 1);
    case Family::NullCyl_Mx2: return mk(true, 2, m % 2 == 1 ? 3 : 6, 2);
    case Family::NullCyl_Mx4:
        for (int bm : {3, 5, 7})
            if (m >= bm && (m - bm) % 3 == 0) return mk(true, 3, bm, 4);
        return std::nullopt;
    case Family::NullCyl_4xN: return mk(false, 2, 4, 5);
    case Family::GenCyl_Mx1: return mk(true, 2, 3, 1);
    case Family::GenCyl_Mx2: return mk(true, 2, m % 2 == 1 ? 3 : 6, 2);
    case Family::GenCyl_Mx3: return mk(true, 4, (m - 3) % 4 == 0 ? 3 : 5, 3);
    case Family::GenCyl_Mx4: return mk(true, 3, 5 + (m - 5) % 3, 4);
    case Family::GenCyl_3xN: {
        if (n == 5 || n == 6) return std::nullopt;
        for (int bn : {4, 7, 9, 10})
            if (n >= bn && (n - bn) % 4 == 0) return mk(false, 4, 3, bn);
        return std::nullopt;
    }
    case Family::GenCyl_5xN:
        if (n % 2 != 0) return std::nullopt;
        return mk(false, 4, 5, n % 4 == 0 ? 4 : 6);
    case Family::LonTorus_1xN: return mk(false, 2, 1, n % 2 == 0 ? 2 : 3);
    case Family::LonTorus_2xN: return mk(false, 2, 2, 2);
    case Family::LonTorus_4xN:
        if (n == 2) return std::nullopt;
        return mk(false, 4, 4, n % 4 == 0 ? 4 : 6);
    default: return std::nullopt;
    }
}

void check_band(const HookSpec &hs, const Tour &tour) {
    LiftPath path = lift_tour(tour);
    for (const LiftPoint &p : path.points) {
        if (hs.band.b_min && p.b < *hs.band.b_min)
            throw HookViolation("lift path leaves the band below");
        if (hs.band.b_max && p.b > *hs.band.b_max)
            throw HookViolation("lift path leaves the band above");
        if (hs.band.a_min && p.a < *hs.band.a_min)
            throw HookViolation("lift path leaves the band on the left");
        if (hs.band.a_max && p.a > *hs.band.a_max)
            throw HookViolation("lift path leaves the band on the right");
        if (hs.band.allow && !hs.band.allow(p))
            throw HookViolation("lift path visits an excluded point");
    }
}

Tour empty_closed_tour(const BoardSpec &spec) { return Tour{spec, {0, 0}, {}, true}; }

Fixture make_fixture(Family family, int m, int n, const Tour &tour) {
    Fixture fx{family, m, n, tour, tour_checksum(tour)};
    validate_fixture(fx);
    return fx;
}

// ---- construction routes ----

Tour embed_to(const Tour &tour, Topology topology) { return embed_tour(tour, topology); }

std::set<EdgeId> transpose_edges(const BoardSpec &tspec, const std::set<EdgeId> &edges) {
    std::set<EdgeId> out;
    for (const EdgeId &e : edges)
        out.insert(canonical_edge(tspec, {{e.from.b, e.from.a}, {e.pair.y, e.pair.x}}));
    return out;
}

// one direct attempt, then the transposed board, then the full budget
Tour rect_direct(int m, int n, const std::set<EdgeId> &required, Budget budget) {
    BoardSpec spec{Topology::Regular, m, n};
    SearchProblem problem{spec, ClassTarget::any(), required, SearchMode::FindOne};
    Budget slice{std::min(budget.max_nodes, 3'000'000LL),
                 std::min(budget.max_wall_ms, 60'000LL)};
    SearchOutcome out = find_tour(problem, slice);
    if (out.status == SearchStatus::Found) return *out.tour;
    if (out.status == SearchStatus::BudgetExceeded) {
        BoardSpec tspec{Topology::Regular, n, m};
        SearchProblem tproblem{tspec, ClassTarget::any(), transpose_edges(tspec, required),
                               SearchMode::FindOne};
        SearchOutcome tout = find_tour(tproblem, slice);
        if (tout.status == SearchStatus::Found) return transpose_tour(*tout.tour);
        out = find_tour(problem, budget);
        if (out.status == SearchStatus::Found) return *out.tour;
        if (out.status == SearchStatus::BudgetExceeded)
            throw BudgetExceeded("closed-tour search on the rectangle ran out of budget");
    }
    throw Unsupported("no closed tour on this rectangle");
}

// Closed rectangle tours. Small boards go straight to search; bigger boards
// are split into row slabs, each searched with a seam edge prescribed, and
// joined by swapping the seam edges for a crossing pair.
Tour rect_closed_search(int m, int n, std::set<EdgeId> required, Budget budget) {
    if (m * n > 1 && (m * n) % 2 == 1)
        throw Unsupported("color counts forbid a closed tour on an odd board");
    if (m > n) {
        BoardSpec tspec{Topology::Regular, n, m};
        return transpose_tour(rect_closed_search(n, m, transpose_edges(tspec, required), budget));
    }
    if (m < 5 || n < 10) return rect_direct(m, n, required, budget);

    BoardSpec spec{Topology::Regular, m, n};
    int n1 = 0;
    for (int c : {5, 6}) {
        if (!rect_closed_predicate(m, c) || !rect_closed_predicate(m, n - c) || n - c < 5)
            continue;
        bool spans = false;
        for (const EdgeId &e : required) {
            int lo = std::min(e.from.b, e.from.b + e.pair.y);
            int hi = std::max(e.from.b, e.from.b + e.pair.y);
            if (lo < c && hi >= c) spans = true;
        }
        if (!spans) {
            n1 = c;
            break;
        }
    }
    if (n1 == 0) return rect_direct(m, n, required, budget);

    // seam cycle: alpha tops the slab, beta sits at the remainder's foot,
    // and the two crossing edges replace them
    const LiftPoint a1{0, n1 - 1}, a2{2, n1 - 2}, b1{1, n1 + 1}, b2{3, n1};
    std::set<EdgeId> slab_required, rest_required;
    for (const EdgeId &e : required) {
        int lo = std::min(e.from.b, e.from.b + e.pair.y);
        if (lo < n1) slab_required.insert(e);
        else
            rest_required.insert(
                canonical_edge({Topology::Regular, m, n - n1},
                               {{e.from.a, e.from.b - n1}, e.pair}));
    }
    slab_required.insert(canonical_edge({Topology::Regular, m, n1}, {{0, n1 - 1}, {2, -1}}));
    rest_required.insert(canonical_edge({Topology::Regular, m, n - n1}, {{1, 1}, {2, -1}}));

    Tour slab = rect_closed_search(m, n1, slab_required, budget);
    Tour rest = rect_closed_search(m, n - n1, rest_required, budget);

    std::set<LiftEdge> edges;
    std::vector<Square> slab_order = visit_order(slab);
    slab_order.push_back(slab_order.front());
    for (std::size_t i = 0; i + 1 < slab_order.size(); ++i)
        edges.insert(norm_edge(lp(slab_order[i].a, slab_order[i].b),
                               lp(slab_order[i + 1].a, slab_order[i + 1].b)));
    std::vector<Square> rest_order = visit_order(rest);
    rest_order.push_back(rest_order.front());
    for (std::size_t i = 0; i + 1 < rest_order.size(); ++i)
        edges.insert(norm_edge(lp(rest_order[i].a, rest_order[i].b + n1),
                               lp(rest_order[i + 1].a, rest_order[i + 1].b + n1)));
    if (!edges.erase(norm_edge(a1, a2)) || !edges.erase(norm_edge(b1, b2)))
        throw StepInvalid("slab tour lost its seam edge");
    edges.insert(norm_edge(a1, b1));
    edges.insert(norm_edge(a2, b2));
    return trace_lift_edges(spec, edges);
}

Tour rect_closed_search(int m, int n, Budget budget) {
    return rect_closed_search(m, n, {}, budget);
}

Tour family_tour(Family family, int m, int n, Budget budget) {
    return get_fixture(family, m, n, budget).tour;
}

Tour cyl_identity_tour(int m, int n, Budget budget) {
    if (m * n == 1) return empty_closed_tour({Topology::Cylinder, 1, 1});
    if (n == 1) return family_tour(Family::NullCyl_Mx1, m, 1, budget);
    if (n == 2) return family_tour(Family::NullCyl_Mx2, m, 2, budget);
    if (n == 3) {
        if (m <= 8) return family_tour(Family::NullCyl_Mx3, m, 3, budget);
        return embed_to(rect_closed_search(m, 3, budget), Topology::Cylinder);
    }
    if (n == 4) return family_tour(Family::NullCyl_Mx4, m, 4, budget);
    if (m == 3) {
        if (n <= 8) return family_tour(Family::NullCyl_3xN, 3, n, budget);
        return embed_to(rect_closed_search(3, n, budget), Topology::Cylinder);
    }
    if (m == 4) return family_tour(Family::NullCyl_4xN, 4, n, budget);
    return embed_to(rect_closed_search(m, n, budget), Topology::Cylinder);
}

Tour delegated_generator_tour(int m, int n, Budget budget) {
    BoardSpec rect{Topology::Regular, m, n};
    SearchOutcome out = find_open_tour(rect, {0, 0}, {2, n - 1}, budget);
    if (out.status == SearchStatus::BudgetExceeded)
        throw BudgetExceeded("open-tour search for the delegated generator ran out of budget");
    if (out.status != SearchStatus::Found)
        throw Unsupported("no open tour between the wrap-adjacent endpoints");
    Tour tour = embed_to(*out.tour, Topology::Cylinder);
    tour.jumps.push_back({{2, n - 1}, {-2, 1}});
    tour.closed = true;
    return tour;
}

Tour cyl_generator_tour(int m, int n, Budget budget) {
    if (n == 1) return family_tour(Family::GenCyl_Mx1, m, 1, budget);
    if (n == 2) return family_tour(Family::GenCyl_Mx2, m, 2, budget);
    if (n == 3) return family_tour(Family::GenCyl_Mx3, m, 3, budget);
    if (n == 4 && m == 3) return family_tour(Family::GenCyl_3xN, 3, 4, budget);
    if (n == 4) return family_tour(Family::GenCyl_Mx4, m, 4, budget);
    if (m == 3) return family_tour(Family::GenCyl_3xN, 3, n, budget);
    if (m == 5 && (n % 2 == 0 || n == 5)) return family_tour(Family::GenCyl_5xN, 5, n, budget);
    return delegated_generator_tour(m, n, budget);
}

Tour torus_identity_tour(int m, int n, Budget budget) {
    if (m * n == 1) return empty_closed_tour({Topology::Torus, 1, 1});
    if (cyl_null_predicate(m, n))
        return embed_to(cyl_identity_tour(m, n, budget), Topology::Torus);
    if (cyl_null_predicate(n, m))
        return transpose_tour(embed_to(cyl_identity_tour(n, m, budget), Topology::Torus));
    if (m == 2 && n == 2) return family_tour(Family::NullTorus_Small, 2, 2, budget);
    if (m == 4 && n == 2) return family_tour(Family::NullTorus_Small, 4, 2, budget);
    if (m == 2 && n == 4)
        return transpose_tour(family_tour(Family::NullTorus_Small, 4, 2, budget));
    if (m == 4 && n == 4) return family_tour(Family::NullTorus_Small, 4, 4, budget);
    throw Unsupported("no nullhomotopic route covers this torus");
}

Tour torus_longitude_tour(int m, int n, Budget budget) {
    if (cyl_gen_predicate(m, n))
        return embed_to(cyl_generator_tour(m, n, budget), Topology::Torus);
    if (m == 1) return family_tour(Family::LonTorus_1xN, 1, n, budget);
    if (m == 2) return family_tour(Family::LonTorus_2xN, 2, n, budget);
    if (m == 4) return family_tour(Family::LonTorus_4xN, 4, n, budget);
    throw Unsupported("no longitude route covers this torus");
}

Tour any_search_tour(const BoardSpec &spec, Budget budget) {
    SearchOutcome out = find_tour({spec, ClassTarget::any(), {}, SearchMode::FindOne}, budget);
    if (out.status == SearchStatus::BudgetExceeded)
        throw BudgetExceeded("closed-tour search ran out of budget");
    if (out.status != SearchStatus::Found) throw Unsupported("no closed tour on this board");
    return *out.tour;
}

} // namespace

const std::vector<Family> &all_families() {
    static const std::vector<Family> families = {
        Family::NullCyl_Mx1,  Family::NullCyl_Mx2,     Family::NullCyl_Mx3,
        Family::NullCyl_3xN,  Family::NullCyl_Mx4,     Family::NullCyl_4xN,
        Family::NullTorus_Small, Family::GenCyl_Mx1,   Family::GenCyl_Mx2,
        Family::GenCyl_Mx3,   Family::GenCyl_3xN,      Family::GenCyl_Mx4,
        Family::GenCyl_5xN,   Family::GenCyl_Delegated, Family::LonTorus_1xN,
        Family::LonTorus_2xN, Family::LonTorus_4xN,
    };
    return families;
}

std::string family_name(Family family) {
    switch (family) {
    case Family::NullCyl_Mx1: return "NullCyl_Mx1";
    case Family::NullCyl_Mx2: return "NullCyl_Mx2";
    case Family::NullCyl_Mx3: return "NullCyl_Mx3";
    case Family::NullCyl_3xN: return "NullCyl_3xN";
    case Family::NullCyl_Mx4: return "NullCyl_Mx4";
    case Family::NullCyl_4xN: return "NullCyl_4xN";
    case Family::NullTorus_Small: return "NullTorus_Small";
    case Family::GenCyl_Mx1: return "GenCyl_Mx1";
    case Family::GenCyl_Mx2: return "GenCyl_Mx2";
    case Family::GenCyl_Mx3: return "GenCyl_Mx3";
    case Family::GenCyl_3xN: return "GenCyl_3xN";
    case Family::GenCyl_Mx4: return "GenCyl_Mx4";
    case Family::GenCyl_5xN: return "GenCyl_5xN";
    case Family::GenCyl_Delegated: return "GenCyl_Delegated";
    case Family::LonTorus_1xN: return "LonTorus_1xN";
    case Family::LonTorus_2xN: return "LonTorus_2xN";
    case Family::LonTorus_4xN: return "LonTorus_4xN";
    }
    throw InvalidProblem("unknown family");
}

std::optional<Family> family_from_name(const std::string &name) {
    for (Family f : all_families())
        if (family_name(f) == name) return f;
    return std::nullopt;
}

Topology family_topology(Family family) {
    switch (family) {
    case Family::NullTorus_Small:
    case Family::LonTorus_1xN:
    case Family::LonTorus_2xN:
    case Family::LonTorus_4xN: return Topology::Torus;
    default: return Topology::Cylinder;
    }
}

ClassTarget family_target(Family family) {
    switch (family) {
    case Family::NullCyl_Mx1:
    case Family::NullCyl_Mx2:
    case Family::NullCyl_Mx3:
    case Family::NullCyl_3xN:
    case Family::NullCyl_Mx4:
    case Family::NullCyl_4xN:
    case Family::NullTorus_Small: return ClassTarget::identity();
    case Family::LonTorus_1xN:
    case Family::LonTorus_2xN:
    case Family::LonTorus_4xN: return ClassTarget::longitude();
    default: return ClassTarget::generator();
    }
}

std::vector<std::pair<int, int>> base_sizes(Family family) {
    switch (family) {
    case Family::NullCyl_Mx1: return {{4, 1}};
    case Family::NullCyl_Mx2: return {{3, 2}, {6, 2}};
    case Family::NullCyl_Mx3: return {{4, 3}, {6, 3}, {8, 3}};
    case Family::NullCyl_3xN: return {{3, 6}, {3, 8}};
    case Family::NullCyl_Mx4: return {{3, 4}, {5, 4}, {7, 4}};
    case Family::NullCyl_4xN: return {{4, 5}};
    case Family::NullTorus_Small: return {{2, 2}, {4, 2}, {4, 4}};
    case Family::GenCyl_Mx1: return {{3, 1}};
    case Family::GenCyl_Mx2: return {{3, 2}, {6, 2}};
    case Family::GenCyl_Mx3: return {{3, 3}, {5, 3}};
    case Family::GenCyl_3xN: return {{3, 4}, {3, 5}, {3, 6}, {3, 7}, {3, 9}, {3, 10}};
    case Family::GenCyl_Mx4: return {{5, 4}, {6, 4}, {7, 4}};
    case Family::GenCyl_5xN: return {{5, 4}, {5, 5}, {5, 6}};
    case Family::GenCyl_Delegated: return {};
    case Family::LonTorus_1xN: return {{1, 2}, {1, 3}};
    case Family::LonTorus_2xN: return {{2, 2}};
    case Family::LonTorus_4xN: return {{4, 2}, {4, 4}, {4, 6}};
    }
    throw InvalidProblem("unknown family");
}

bool family_admits(Family family, int m, int n) {
    switch (family) {
    case Family::NullCyl_Mx1: return n == 1 && m >= 4 && m % 2 == 0;
    case Family::NullCyl_Mx2: return n == 2 && m >= 3 && m != 4;
    case Family::NullCyl_Mx3: return n == 3 && (m == 4 || m == 6 || m == 8);
    case Family::NullCyl_3xN: return m == 3 && (n == 6 || n == 8);
    case Family::NullCyl_Mx4: return n == 4 && m >= 3 && m != 4;
    case Family::NullCyl_4xN: return m == 4 && n >= 5 && n % 2 == 1;
    case Family::NullTorus_Small:
        return (m == 2 && n == 2) || (m == 4 && n == 2) || (m == 4 && n == 4);
    case Family::GenCyl_Mx1: return n == 1 && m >= 3 && m % 2 == 1;
    case Family::GenCyl_Mx2: return n == 2 && m >= 3 && m != 4;
    case Family::GenCyl_Mx3: return n == 3 && m >= 3 && m % 2 == 1;
    case Family::GenCyl_3xN: return m == 3 && n >= 4;
    case Family::GenCyl_Mx4: return n == 4 && m >= 5;
    case Family::GenCyl_5xN: return m == 5 && ((n >= 4 && n % 2 == 0) || n == 5);
    case Family::GenCyl_Delegated:
        return (m >= 6 && n >= 5 && cyl_gen_predicate(m, n)) ||
               (m == 5 && n >= 7 && n % 2 == 1);
    case Family::LonTorus_1xN: return m == 1 && n >= 2;
    case Family::LonTorus_2xN: return m == 2 && n >= 2 && n % 2 == 0;
    case Family::LonTorus_4xN: return m == 4 && n >= 2 && n % 2 == 0;
    }
    return false;
}

HookSpec hook_spec(Family family, int m, int n) {
    if (!family_admits(family, m, n))
        throw InvalidProblem(family_name(family) + " does not cover " + std::to_string(m) + "x" +
                             std::to_string(n));
    HookSpec hs;
    hs.family = family;
    hs.m = m;
    hs.n = n;
    switch (family) {
    case Family::NullCyl_Mx1:
        hs.inductive = true;
        hs.hook_edges = {norm_edge(lp(m - 2, -m / 2 + 1), lp(m - 1, -m / 2 + 3))};
        break;
    case Family::NullCyl_Mx2: {
        hs.inductive = true;
        const int p = m % 2 == 0 ? m - 1 : m;
        hs.hook_edges = {norm_edge(lp(m - 1, (-p + 5) / 2), lp(m - 2, (-p + 9) / 2)),
                         norm_edge(lp(m - 1, (p - 3) / 2), lp(m - 2, (p - 7) / 2))};
        break;
    }
    case Family::NullCyl_Mx4:
        hs.inductive = true;
        hs.hook_edges = {norm_edge(lp(m - 2, -1), lp(m - 1, -3))};
        if (m == 3) hs.extra_edges = {norm_edge(lp(0, 0), lp(1, -2))};
        break;
    case Family::NullCyl_4xN:
        hs.inductive = true;
        hs.hook_edges = {norm_edge(lp(0, -n + 1), lp(2, -n + 2)),
                         norm_edge(lp(1, -n + 1), lp(3, -n + 2)),
                         norm_edge(lp(0, n - 1), lp(2, n)),
                         norm_edge(lp(1, n - 1), lp(3, n))};
        break;
    case Family::GenCyl_Mx1:
        hs.inductive = true;
        hs.hook_edges = {norm_edge(lp(m - 1, (-m + 3) / 2), lp(m - 2, (-m - 1) / 2))};
        break;
    case Family::GenCyl_Mx2:
        hs.inductive = true;
        hs.hook_edges = {norm_edge(lp(m - 1, 2), lp(m - 2, 0)),
                         norm_edge(lp(m - 1, 1), lp(m - 2, -1))};
        break;
    case Family::GenCyl_Mx3:
        hs.inductive = true;
        hs.hook_edges = {norm_edge(lp(m - 1, 1), lp(m - 2, 3))};
        break;
    case Family::GenCyl_Mx4:
        hs.inductive = true;
        hs.hook_edges = {norm_edge(lp(m - 1, 0), lp(m - 2, 2)),
                         norm_edge(lp(m - 2, 0), lp(m - 1, 2))};
        break;
    case Family::GenCyl_3xN:
    case Family::GenCyl_5xN:
    case Family::LonTorus_4xN:
        if ((family == Family::GenCyl_3xN && (n == 5 || n == 6)) ||
            (family == Family::GenCyl_5xN && n == 5) ||
            (family == Family::LonTorus_4xN && n == 2))
            break; // one-off sizes carry no band hypothesis
        hs.inductive = true;
        hs.banded = true;
        hs.band.b_min = -n;
        hs.band.b_max = 0;
        hs.band.allow = [](LiftPoint p) { return p.b != 0 || p == LiftPoint{0, 0}; };
        break;
    case Family::LonTorus_1xN:
        hs.inductive = true;
        hs.banded = true;
        hs.band.b_min = 0;
        hs.band.b_max = n;
        hs.band.allow = [](LiftPoint p) { return p.b != 0 || p == LiftPoint{0, 0}; };
        break;
    case Family::LonTorus_2xN:
        // the next extension drops three squares into the old territory;
        // the path must keep their residues free
        hs.inductive = true;
        hs.banded = true;
        hs.band.allow = [n](LiftPoint p) {
            if (mod_floor(p.a, 2) == 0 && p.b == -n - 1) return false;
            if (mod_floor(p.a, 2) == 1 && (p.b == -n + 1 || p.b == -n + 2)) return false;
            return true;
        };
        break;
    default:
        break; // fixture-only families
    }
    return hs;
}

void validate_fixture(const Fixture &fx) {
    HookSpec hs = hook_spec(fx.family, fx.m, fx.n);
    BoardSpec want{family_topology(fx.family), fx.m, fx.n};
    if (!(fx.tour.spec == want)) throw StepInvalid("fixture tour is on the wrong board");
    if (!(fx.tour.start == Square{0, 0})) throw StepInvalid("fixture tour must start at (0,0)");
    if (!fx.tour.closed) throw StepInvalid("fixture tours are closed");
    validate_tour(fx.tour);
    if (!matches_target(classify(fx.tour), family_target(fx.family)))
        throw StepInvalid("fixture tour has the wrong class");
    if (!hs.hook_edges.empty() || !hs.extra_edges.empty()) {
        std::set<LiftEdge> edges = lift_edge_set(fx.tour);
        for (const LiftEdge &e : hs.hook_edges)
            if (!edges.count(e)) throw HookViolation("fixture lacks a hook edge");
        for (const LiftEdge &e : hs.extra_edges)
            if (!edges.count(e)) throw HookViolation("fixture lacks a required edge");
    }
    if (hs.banded) check_band(hs, fx.tour);
    if (fx.checksum != tour_checksum(fx.tour))
        throw StepInvalid("fixture checksum does not match its tour");
}

Fixture extend(Family family, const Fixture &fixture) {
    if (fixture.family != family)
        throw InvalidProblem("fixture belongs to " + family_name(fixture.family));
    HookSpec hs = hook_spec(family, fixture.m, fixture.n);
    if (!hs.inductive)
        throw Unsupported(family_name(family) + " has no inductive step at " +
                          std::to_string(fixture.m) + "x" + std::to_string(fixture.n));
    try {
        validate_fixture(fixture);
    } catch (const HookViolation &) {
        throw;
    } catch (const std::exception &e) {
        throw HookViolation(std::string("corrupt fixture: ") + e.what());
    }

    const int m = fixture.m, n = fixture.n;
    int nm = m, nn = n;
    Tour next;

    auto surgery = [&](const std::vector<LiftEdge> &remove, const std::vector<LiftEdge> &add) {
        std::set<LiftEdge> edges = lift_edge_set(fixture.tour);
        for (const LiftEdge &e : remove) {
            auto it = edges.find(e);
            if (it == edges.end()) throw HookViolation("fixture lacks a hook edge");
            edges.erase(it);
        }
        for (const LiftEdge &e : add)
            if (!edges.insert(e).second) throw StepInvalid("replacement edge already present");
        return trace_lift_edges({family_topology(family), nm, nn}, edges);
    };

    switch (family) {
    case Family::NullCyl_Mx1: {
        nm = m + 2;
        const int h = -m / 2;
        next = surgery({norm_edge(lp(m - 2, h + 1), lp(m - 1, h + 3))},
                       {norm_edge(lp(m - 2, h + 1), lp(m, h)),
                        norm_edge(lp(m, h), lp(m + 1, h + 2)),
                        norm_edge(lp(m + 1, h + 2), lp(m - 1, h + 3))});
        break;
    }
    case Family::NullCyl_Mx2: {
        nm = m + 2;
        const int p = m % 2 == 0 ? m - 1 : m;
        next = surgery(
            {norm_edge(lp(m - 1, (-p + 5) / 2), lp(m - 2, (-p + 9) / 2)),
             norm_edge(lp(m - 1, (p - 3) / 2), lp(m - 2, (p - 7) / 2))},
            {norm_edge(lp(m - 1, (-p + 5) / 2), lp(m + 1, (-p + 3) / 2)),
             norm_edge(lp(m + 1, (-p + 3) / 2), lp(m, (-p + 7) / 2)),
             norm_edge(lp(m, (-p + 7) / 2), lp(m - 2, (-p + 9) / 2)),
             norm_edge(lp(m - 1, (p - 3) / 2), lp(m + 1, (p - 1) / 2)),
             norm_edge(lp(m + 1, (p - 1) / 2), lp(m, (p - 5) / 2)),
             norm_edge(lp(m, (p - 5) / 2), lp(m - 2, (p - 7) / 2))});
        break;
    }
    case Family::NullCyl_Mx4: {
        nm = m + 3;
        Fixture block = get_fixture(Family::NullCyl_Mx4, 3, 4);
        std::set<LiftEdge> block_edges = lift_edge_set(block.tour);
        LiftEdge cut = norm_edge(lp(0, 0), lp(1, -2));
        if (!block_edges.count(cut)) throw StepInvalid("spliced block lacks its cut edge");
        block_edges.erase(cut);
        std::vector<LiftEdge> add;
        for (const LiftEdge &e : block_edges) add.push_back(shift_edge(e, m, 0));
        add.push_back(norm_edge(lp(m - 2, -1), lp(m, 0)));
        add.push_back(norm_edge(lp(m - 1, -3), lp(m + 1, -2)));
        next = surgery({norm_edge(lp(m - 2, -1), lp(m - 1, -3))}, add);
        break;
    }
    case Family::NullCyl_4xN: {
        nn = n + 2;
        next = surgery(
            {norm_edge(lp(0, -n + 1), lp(2, -n + 2)), norm_edge(lp(1, -n + 1), lp(3, -n + 2)),
             norm_edge(lp(0, n - 1), lp(2, n)), norm_edge(lp(1, n - 1), lp(3, n))},
            {norm_edge(lp(0, -n + 1), lp(1, -n - 1)), norm_edge(lp(1, -n - 1), lp(3, -n)),
             norm_edge(lp(3, -n), lp(2, -n + 2)),
             norm_edge(lp(1, -n + 1), lp(0, -n - 1)), norm_edge(lp(0, -n - 1), lp(2, -n)),
             norm_edge(lp(2, -n), lp(3, -n + 2)),
             norm_edge(lp(0, n - 1), lp(1, n + 1)), norm_edge(lp(1, n + 1), lp(3, n + 2)),
             norm_edge(lp(3, n + 2), lp(2, n)),
             norm_edge(lp(1, n - 1), lp(0, n + 1)), norm_edge(lp(0, n + 1), lp(2, n + 2)),
             norm_edge(lp(2, n + 2), lp(3, n))});
        break;
    }
    case Family::GenCyl_Mx1: {
        nm = m + 2;
        next = surgery({norm_edge(lp(m - 1, (-m + 3) / 2), lp(m - 2, (-m - 1) / 2))},
                       {norm_edge(lp(m - 1, (-m + 3) / 2), lp(m + 1, (-m + 1) / 2)),
                        norm_edge(lp(m + 1, (-m + 1) / 2), lp(m, (-m - 3) / 2)),
                        norm_edge(lp(m, (-m - 3) / 2), lp(m - 2, (-m - 1) / 2))});
        break;
    }
    case Family::GenCyl_Mx2: {
        nm = m + 2;
        next = surgery({norm_edge(lp(m - 1, 2), lp(m - 2, 0)),
                        norm_edge(lp(m - 1, 1), lp(m - 2, -1))},
                       {norm_edge(lp(m - 1, 2), lp(m + 1, 1)),
                        norm_edge(lp(m + 1, 1), lp(m, -1)),
                        norm_edge(lp(m, -1), lp(m - 2, 0)),
                        norm_edge(lp(m - 1, 1), lp(m + 1, 2)),
                        norm_edge(lp(m + 1, 2), lp(m, 0)),
                        norm_edge(lp(m, 0), lp(m - 2, -1))});
        break;
    }
    case Family::GenCyl_Mx3: {
        nm = m + 4;
        const Tour &aux = gen_mx3_aux();
        std::vector<Square> order = visit_order(aux);
        std::vector<LiftEdge> add;
        for (std::size_t i = 0; i + 1 < order.size(); ++i)
            add.push_back(norm_edge(lp(order[i].a + m, order[i].b + 1),
                                    lp(order[i + 1].a + m, order[i + 1].b + 1)));
        add.push_back(norm_edge(lp(m - 1, 1), lp(m, 3)));
        add.push_back(norm_edge(lp(m - 2, 3), lp(m, 2)));
        next = surgery({norm_edge(lp(m - 1, 1), lp(m - 2, 3))}, add);
        break;
    }
    case Family::GenCyl_Mx4: {
        nm = m + 3;
        // the block's endpoint pairing decides whether the cut arcs rejoin
        // into one cycle, so try each pairing until one validates whole
        std::string last_error = "no block cover exists";
        for (int pairing = 0; pairing < 3; ++pairing) {
            const auto &cover = gen_mx4_block(pairing);
            if (!cover) continue;
            std::vector<LiftEdge> add;
            for (const LiftEdge &e : *cover) add.push_back(shift_edge(e, m, 0));
            add.push_back(norm_edge(lp(m - 2, 0), lp(m, 1)));
            add.push_back(norm_edge(lp(m - 1, 0), lp(m + 1, 1)));
            add.push_back(norm_edge(lp(m - 2, 2), lp(m, 3)));
            add.push_back(norm_edge(lp(m - 1, 2), lp(m + 1, 3)));
            try {
                Tour trial = surgery({norm_edge(lp(m - 1, 0), lp(m - 2, 2)),
                                      norm_edge(lp(m - 2, 0), lp(m - 1, 2))},
                                     add);
                Fixture out{family, nm, nn, trial, tour_checksum(trial)};
                validate_fixture(out);
                return out;
            } catch (const std::exception &e) {
                last_error = e.what();
            }
        }
        throw StepInvalid(std::string("extension produced an invalid fixture: ") + last_error);
    }
    case Family::GenCyl_3xN:
    case Family::GenCyl_5xN:
    case Family::LonTorus_4xN: {
        nn = n + 4;
        Family block_family = family;
        int block_m = family == Family::GenCyl_3xN ? 3 : (family == Family::GenCyl_5xN ? 5 : 4);
        Fixture block = get_fixture(block_family, block_m, 4);
        next = splice_band_path({family_topology(family), nm, nn},
                                lift_tour(fixture.tour).points,
                                translated_tail(block.tour, 0, -n));
        break;
    }
    case Family::LonTorus_1xN: {
        nn = n + 2;
        std::vector<LiftPoint> tail{lp(0, n), lp(2, n + 1), lp(0, n + 2)};
        next = splice_band_path({Topology::Torus, 1, nn}, lift_tour(fixture.tour).points, tail);
        break;
    }
    case Family::LonTorus_2xN: {
        nn = n + 2;
        std::vector<LiftPoint> tail{lp(0, -n), lp(1, -n + 2), lp(3, -n + 1), lp(2, -n - 1),
                                    lp(0, -n - 2)};
        next = splice_band_path({Topology::Torus, 2, nn}, lift_tour(fixture.tour).points, tail);
        break;
    }
    default:
        throw Unsupported(family_name(family) + " has no inductive step");
    }

    Fixture out{family, nm, nn, next, tour_checksum(next)};
    try {
        validate_fixture(out);
    } catch (const std::exception &e) {
        throw StepInvalid(std::string("extension produced an invalid fixture: ") + e.what());
    }
    return out;
}

Fixture derive_base_case(Family family, int m, int n, Budget budget) {
    if (!is_base_size(family, m, n))
        throw InvalidProblem(std::to_string(m) + "x" + std::to_string(n) + " is not a base size of " +
                             family_name(family));
    HookSpec hs = hook_spec(family, m, n);
    BoardSpec spec{family_topology(family), m, n};
    SearchProblem problem{spec, family_target(family), {}, SearchMode::FindOne};

    if (!hs.inductive) {
        SearchOutcome out = find_tour(problem, budget);
        if (out.status != SearchStatus::Found)
            throw BaseCaseNotFound(family_name(family) + " base " + std::to_string(m) + "x" +
                                   std::to_string(n) +
                                   (out.status == SearchStatus::BudgetExceeded
                                        ? ": search budget exhausted"
                                        : ": no tour found"));
        Fixture fx = make_fixture(family, m, n, *out.tour);
        cache_store(fx);
        return fx;
    }

    LiftConstraints constraints = hs.band;
    for (const LiftEdge &e : hs.hook_edges) constraints.required_lift_edges.push_back(e);
    for (const LiftEdge &e : hs.extra_edges) constraints.required_lift_edges.push_back(e);

    std::optional<Fixture> accepted;
    std::vector<Fixture> chain;
    SearchOutcome out = for_each_tour(problem, constraints, budget, [&](const Tour &tour) {
        Fixture candidate{family, m, n, tour, tour_checksum(tour)};
        try {
            validate_fixture(candidate);
        } catch (const std::exception &) {
            return true;
        }
        // the candidate may serve as its own splice block, so seed it
        cache_store(candidate);
        std::vector<Fixture> grown;
        try {
            Fixture cur = candidate;
            for (int step = 0; step < 8; ++step) {
                cur = extend(family, cur);
                grown.push_back(cur);
            }
        } catch (const std::exception &) {
            cache_erase(family, m, n);
            return true;
        }
        accepted = candidate;
        chain = std::move(grown);
        return false;
    });

    if (!accepted)
        throw BaseCaseNotFound(family_name(family) + " base " + std::to_string(m) + "x" +
                               std::to_string(n) +
                               (out.status == SearchStatus::BudgetExceeded
                                    ? ": search budget exhausted"
                                    : ": no extendable tour found"));
    for (const Fixture &fx : chain) cache_store(fx);
    return *accepted;
}

void clear_fixture_cache() {
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    g_cache.clear();
}

void seed_fixture_cache(const Fixture &fixture) {
    validate_fixture(fixture);
    cache_store(fixture);
}

Fixture get_fixture(Family family, int m, int n, Budget budget) {
    if (auto hit = cache_lookup(family, m, n)) return *hit;
    if (is_base_size(family, m, n)) return derive_base_case(family, m, n, budget);
    auto rule = chain_rule(family, m, n);
    if (!rule || !family_admits(family, m, n))
        throw InvalidProblem(family_name(family) + " cannot reach " + std::to_string(m) + "x" +
                             std::to_string(n));
    Fixture cur = get_fixture(family, rule->base_m, rule->base_n, budget);
    while (cur.m != m || cur.n != n) {
        int im = rule->grows_m ? cur.m + rule->step : cur.m;
        int in = rule->grows_m ? cur.n : cur.n + rule->step;
        if (auto hit = cache_lookup(family, im, in)) {
            cur = *hit;
            continue;
        }
        cur = extend(family, cur);
        cache_store(cur);
    }
    return cur;
}

Tour construct(const BoardSpec &spec, const ClassTarget &target, Budget budget) {
    if (spec.m < 1 || spec.n < 1) throw InvalidProblem("board extents must be positive");

    // fold exact targets onto the three named classes
    TargetKind kind = target.kind;
    if (kind == TargetKind::Exact) {
        if (!target.exact) throw InvalidProblem("exact target without a class");
        const HomotopyClass &c = *target.exact;
        if (c.topology != spec.topology)
            throw TargetTopologyMismatch("exact class is for a different topology");
        if (c.is_identity()) kind = TargetKind::Identity;
        else if (spec.topology == Topology::Cylinder && (c.k == 1 || c.k == -1))
            kind = TargetKind::Generator;
        else if (spec.topology == Topology::Torus && c.p == 0 && (c.q == 1 || c.q == -1))
            kind = TargetKind::Longitude;
        else
            throw Unsupported("only identity, generator and longitude classes are constructible");
    }

    Tour tour;
    switch (spec.topology) {
    case Topology::Regular:
        if (kind == TargetKind::Identity || kind == TargetKind::Generator ||
            kind == TargetKind::Longitude)
            throw TargetTopologyMismatch("class targets need a surface board");
        tour = rect_closed_search(spec.m, spec.n, budget);
        break;
    case Topology::Cylinder:
        switch (kind) {
        case TargetKind::Identity:
            if (!cyl_null_predicate(spec.m, spec.n))
                throw Unsupported("no nullhomotopic tour exists on this cylinder");
            tour = cyl_identity_tour(spec.m, spec.n, budget);
            break;
        case TargetKind::Generator:
            if (!cyl_gen_predicate(spec.m, spec.n))
                throw Unsupported("no generator tour exists on this cylinder");
            tour = cyl_generator_tour(spec.m, spec.n, budget);
            break;
        case TargetKind::Longitude:
            throw TargetTopologyMismatch("longitudes live on the torus");
        default:
            if (cyl_null_predicate(spec.m, spec.n))
                tour = cyl_identity_tour(spec.m, spec.n, budget);
            else if (cyl_gen_predicate(spec.m, spec.n))
                tour = cyl_generator_tour(spec.m, spec.n, budget);
            else if (cyl_any_predicate(spec.m, spec.n))
                tour = any_search_tour(spec, budget);
            else
                throw Unsupported("no closed tour exists on this cylinder");
            break;
        }
        break;
    case Topology::Torus:
        switch (kind) {
        case TargetKind::Identity:
            if (!tori_null_predicate(spec.m, spec.n))
                throw Unsupported("no nullhomotopic tour exists on this torus");
            tour = torus_identity_tour(spec.m, spec.n, budget);
            break;
        case TargetKind::Longitude:
            if (!torus_lon_predicate(spec.m, spec.n))
                throw Unsupported("no longitude tour exists on this torus");
            tour = torus_longitude_tour(spec.m, spec.n, budget);
            break;
        case TargetKind::Generator:
            throw TargetTopologyMismatch("generators live on the cylinder");
        default:
            if (tori_null_predicate(spec.m, spec.n))
                tour = torus_identity_tour(spec.m, spec.n, budget);
            else if (torus_lon_predicate(spec.m, spec.n))
                tour = torus_longitude_tour(spec.m, spec.n, budget);
            else
                tour = any_search_tour(spec, budget);
            break;
        }
        break;
    }

    validate_tour(tour);
    if (spec.topology != Topology::Regular && target.kind != TargetKind::Any &&
        !matches_target(classify(tour), target))
        throw StepInvalid("construction produced a tour of the wrong class");
    return tour;
}

} // namespace knights
