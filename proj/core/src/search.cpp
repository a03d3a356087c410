#include "knights/search.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <map>

#include "knights/errors.hpp"

namespace knights {

namespace {

struct BudgetBlown {};

int pair_index(KnightPair p) {
    const auto &ps = knight_pairs();
    for (int i = 0; i < 8; ++i)
        if (ps[i] == p) return i;
    return -1;
}

long long floor_div(long long a, long long b) {
    long long q = a / b, r = a % b;
    return (r != 0 && r < 0) ? q - 1 : q;
}

long long ceil_div(long long a, long long b) { return -floor_div(-a, b); }

// admissible feasibility window for the lift endpoint: every jump moves each
// lift coordinate by at most 2, the pair by exactly 3, and flips the color
struct EndpointSet {
    enum class Kind { Fixed, CylAny, TorAny } kind = Kind::Fixed;
    std::vector<LiftPoint> fixed; // displacements from the start lift
};

class Engine {
  public:
    Engine(const BoardSpec &spec, const ClassTarget &target, const std::set<EdgeId> &required,
           const Budget &budget, const PruneOptions &prune, const LiftConstraints *lift,
           bool warnsdorff, bool normalize, std::function<bool(const Tour &)> sink)
        : spec_(spec), target_(target), budget_(budget), prune_(prune), lift_(lift),
          warnsdorff_(warnsdorff), normalize_(normalize), sink_(std::move(sink)),
          m_(spec.m), n_(spec.n), mn_(static_cast<int>(spec.square_count())) {
        build_tables(required);
    }

    // closed search anchored at (0,0), or open search from -> to
    bool run(bool open, Square from, Square to) {
        open_ = open;
        start_sq_ = from;
        start_idx_ = idx(from);
        to_idx_ = open ? idx(to) : start_idx_;
        cur_idx_ = start_idx_;
        cur_lift_ = {from.a, from.b};
        start_lift_ = cur_lift_;
        stop_ = false;

        endpoints_ = make_endpoints(open, from, to);
        if (missing_required_) return false; // a required edge is not in this multigraph
        if (lift_ && !lift_point_ok(cur_lift_)) return false;

        visited_.assign(mn_, 0);
        lift_at_.assign(mn_, LiftPoint{});
        avail_cnt_.assign(mn_, 0);
        for (int u = 0; u < mn_; ++u) avail_cnt_[u] = static_cast<int>(adj_sq_[u].size());
        visited_[start_idx_] = 1;
        visited_count_ = 1;
        lift_at_[start_idx_] = cur_lift_;
        if (open_) // the anchor square stops being available once left behind
            for (int w : adj_sq_[start_idx_]) --avail_cnt_[w];

        t0_ = std::chrono::steady_clock::now();
        if (open_)
            dfs_open();
        else
            dfs_closed();
        return true;
    }

    long long nodes() const { return nodes_; }
    long long elapsed_ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - t0_)
            .count();
    }

  private:
    struct Move {
        int to;
        int pair_idx;
        KnightPair pair;
        int edge_serial;
    };

    BoardSpec spec_;
    ClassTarget target_;
    Budget budget_;
    PruneOptions prune_;
    const LiftConstraints *lift_;
    bool warnsdorff_;
    bool normalize_;
    std::function<bool(const Tour &)> sink_;

    int m_, n_, mn_;
    std::vector<std::vector<Move>> moves_;
    std::vector<std::vector<int>> adj_sq_;   // distinct neighbor squares
    std::vector<std::vector<char>> adj_mat_; // distinct-square adjacency
    int n_serials_ = 0;
    std::vector<int> req_of_serial_;   // serial -> required-edge index or -1
    int req_base_total_ = 0;
    bool missing_required_ = false;

    struct ReqLift {
        LiftPoint p, q;
        bool used = false;
    };
    std::vector<ReqLift> req_lift_;
    int req_lift_unused_ = 0;
    std::vector<char> req_base_used_;
    int req_base_unused_ = 0;

    bool open_ = false;
    Square start_sq_;
    int start_idx_ = 0, to_idx_ = 0, cur_idx_ = 0;
    LiftPoint cur_lift_, start_lift_;
    std::vector<char> visited_;
    std::vector<LiftPoint> lift_at_;
    std::vector<int> avail_cnt_; // distinct nbrs in unvisited (+ start when closed)
    int visited_count_ = 0;
    std::vector<DirectedJump> path_;
    std::vector<int> path_serials_;
    EndpointSet endpoints_;
    bool stop_ = false;

    long long nodes_ = 0;
    std::chrono::steady_clock::time_point t0_;

    // bfs scratch
    std::vector<int> bfs_queue_;
    std::vector<long long> bfs_seen_;
    long long bfs_gen_ = 0;

    int idx(Square s) const { return s.a * n_ + s.b; }

    void build_tables(const std::set<EdgeId> &required) {
        moves_.resize(mn_);
        adj_sq_.resize(mn_);
        adj_mat_.assign(mn_, std::vector<char>(mn_, 0));
        std::map<EdgeId, int> serial;
        for (Square s : all_squares(spec_)) {
            int u = idx(s);
            for (const DirectedJump &j : neighbors(spec_, s)) {
                Square t = apply_jump(spec_, j);
                EdgeId id = canonical_edge(spec_, j);
                auto [it, fresh] = serial.emplace(id, n_serials_);
                if (fresh) ++n_serials_;
                moves_[u].push_back({idx(t), pair_index(j.pair), j.pair, it->second});
                if (!adj_mat_[u][idx(t)]) {
                    adj_mat_[u][idx(t)] = 1;
                    adj_sq_[u].push_back(idx(t));
                }
            }
        }
        req_of_serial_.assign(n_serials_, -1);
        for (const EdgeId &id : required) {
            auto it = serial.find(id);
            if (it == serial.end()) {
                missing_required_ = true;
                return;
            }
            if (req_of_serial_[it->second] < 0) req_of_serial_[it->second] = req_base_total_++;
        }
        req_base_used_.assign(req_base_total_, 0);
        req_base_unused_ = req_base_total_;
        if (lift_) {
            for (const auto &[p, q] : lift_->required_lift_edges) req_lift_.push_back({p, q});
            req_lift_unused_ = static_cast<int>(req_lift_.size());
        }
        index_required_endpoints();
    }

    EndpointSet make_endpoints(bool open, Square from, Square to) const {
        EndpointSet out;
        if (open) {
            out.fixed = {{to.a - from.a, to.b - from.b}};
            return out;
        }
        switch (target_.kind) {
        case TargetKind::Identity:
            out.fixed = {{0, 0}};
            return out;
        case TargetKind::Generator:
            out.fixed = {{0, n_}, {0, -n_}};
            return out;
        case TargetKind::Longitude:
            out.fixed = {{0, n_}, {0, -n_}};
            return out;
        case TargetKind::Exact: {
            const HomotopyClass &c = *target_.exact;
            LiftPoint d = spec_.topology == Topology::Cylinder
                              ? LiftPoint{0, static_cast<int>(c.k) * n_}
                              : LiftPoint{static_cast<int>(c.p) * m_, static_cast<int>(c.q) * n_};
            out.fixed = {d};
            if (!(d == LiftPoint{0, 0})) out.fixed.push_back({-d.a, -d.b});
            return out;
        }
        case TargetKind::Any:
            if (spec_.topology == Topology::Regular) {
                out.fixed = {{0, 0}};
            } else if (spec_.topology == Topology::Cylinder) {
                out.kind = EndpointSet::Kind::CylAny;
            } else {
                out.kind = EndpointSet::Kind::TorAny;
            }
            return out;
        }
        return out;
    }

    void tick() {
        ++nodes_;
        if (nodes_ > budget_.max_nodes) throw BudgetBlown{};
        if ((nodes_ & 4095) == 0 && elapsed_ms() > budget_.max_wall_ms) throw BudgetBlown{};
    }

    bool lift_point_ok(LiftPoint p) const {
        if (!lift_) return true;
        if (lift_->a_min && p.a < *lift_->a_min) return false;
        if (lift_->a_max && p.a > *lift_->a_max) return false;
        if (lift_->b_min && p.b < *lift_->b_min) return false;
        if (lift_->b_max && p.b > *lift_->b_max) return false;
        if (lift_->allow && !lift_->allow(p)) return false;
        return true;
    }

    bool disp_ok(long long da, long long db, int r) const {
        if (prune_.winding) {
            long long ax = std::llabs(da), ay = std::llabs(db);
            if (ax > 2LL * r || ay > 2LL * r || ax + ay > 3LL * r) return false;
        }
        if (prune_.parity && (((da + db - r) % 2 + 2) % 2) != 0) return false;
        return true;
    }

    bool feasible(int r) const {
        if (!prune_.winding && !prune_.parity) return true;
        const long long ra = cur_lift_.a - start_lift_.a;
        const long long rb = cur_lift_.b - start_lift_.b;
        switch (endpoints_.kind) {
        case EndpointSet::Kind::Fixed:
            for (const LiftPoint &f : endpoints_.fixed)
                if (disp_ok(f.a - ra, f.b - rb, r)) return true;
            return false;
        case EndpointSet::Kind::CylAny: {
            if (!prune_.winding) {
                // parity only: an odd n lets k absorb any parity
                if (n_ % 2 != 0) return true;
                return disp_ok(-ra, -rb, r);
            }
            long long klo = std::max<long long>(-2 * m_, ceil_div(rb - 2LL * r, n_));
            long long khi = std::min<long long>(2 * m_, floor_div(rb + 2LL * r, n_));
            for (long long k = klo; k <= khi; ++k)
                if (disp_ok(-ra, k * n_ - rb, r)) return true;
            return false;
        }
        case EndpointSet::Kind::TorAny: {
            if (!prune_.winding) {
                if (m_ % 2 != 0 || n_ % 2 != 0) return true;
                return disp_ok(-ra, -rb, r);
            }
            long long plo = std::max<long long>(-2 * n_, ceil_div(ra - 2LL * r, m_));
            long long phi = std::min<long long>(2 * n_, floor_div(ra + 2LL * r, m_));
            long long qlo = std::max<long long>(-2 * m_, ceil_div(rb - 2LL * r, n_));
            long long qhi = std::min<long long>(2 * m_, floor_div(rb + 2LL * r, n_));
            for (long long p = plo; p <= phi; ++p)
                for (long long q = qlo; q <= qhi; ++q)
                    if (disp_ok(p * m_ - ra, q * n_ - rb, r)) return true;
            return false;
        }
        }
        return true;
    }

    bool target_matches(long long da, long long db) const {
        if (spec_.topology == Topology::Regular) return true; // only Any reaches here
        if (target_.kind == TargetKind::Any) return true;
        HomotopyClass cls = spec_.topology == Topology::Cylinder
                                ? HomotopyClass::cylinder(db / n_)
                                : HomotopyClass::torus(da / m_, db / n_);
        return matches_target(cls, target_);
    }

    bool base_endpoint_alive(int sq) const {
        if (!visited_[sq]) return true;
        if (sq == cur_idx_) return true;
        if (!open_ && sq == start_idx_) return true; // the closing move may still use it
        return false;
    }

    // a required edge is dead once an endpoint square can no longer host a
    // traversal: visited, not current, and (for lifts) not the closing anchor
    bool required_edges_alive() const {
        if (req_base_unused_ > 0) {
            for (const auto &[serial, entry] : req_endpoints_) {
                (void)serial;
                if (req_base_used_[entry.req]) continue;
                if (!base_endpoint_alive(entry.u) || !base_endpoint_alive(entry.v)) return false;
            }
        }
        for (const ReqLift &e : req_lift_) {
            if (e.used) continue;
            if (!lift_endpoint_alive(e.p) || !lift_endpoint_alive(e.q)) return false;
        }
        return true;
    }

    bool lift_endpoint_alive(LiftPoint p) const {
        Square base = project(p);
        if (!on_board(spec_, base)) return false;
        int sq = idx(base);
        if (!visited_[sq]) return true;
        if (!open_ && sq == start_idx_) return true; // closure may revisit at another lift
        if (lift_at_[sq] != p) return false;
        return sq == cur_idx_;
    }

    Square project(LiftPoint p) const {
        auto wrap = [](int v, int k) {
            int r = v % k;
            return r < 0 ? r + k : r;
        };
        int a = spec_.wraps_a() ? wrap(p.a, m_) : p.a;
        int b = spec_.wraps_b() ? wrap(p.b, n_) : p.b;
        return {a, b};
    }

    // (serial of required base edge, endpoints) precomputed for aliveness
    struct ReqEndpoints {
        int req, u, v;
    };
    std::vector<std::pair<int, ReqEndpoints>> req_endpoints_;

    void index_required_endpoints() {
        req_endpoints_.clear();
        for (int u = 0; u < mn_; ++u)
            for (const Move &mv : moves_[u]) {
                int r = req_of_serial_[mv.edge_serial];
                if (r < 0) continue;
                bool seen = false;
                for (auto &[s, e] : req_endpoints_)
                    if (s == mv.edge_serial) seen = true;
                if (!seen) req_endpoints_.push_back({mv.edge_serial, {r, u, mv.to}});
            }
    }

    bool dead_square() const {
        for (int u = 0; u < mn_; ++u) {
            if (visited_[u]) continue;
            int eff = avail_cnt_[u];
            if (cur_idx_ != start_idx_ || open_)
                if (adj_mat_[cur_idx_][u]) ++eff;
            int need = (open_ && u == to_idx_) ? 1 : 2;
            if (eff < need) return true;
        }
        return false;
    }

    bool disconnected() {
        int want = mn_ - visited_count_;
        if (want == 0) return false;
        ++bfs_gen_;
        if (bfs_seen_.size() != static_cast<size_t>(mn_)) bfs_seen_.assign(mn_, 0);
        bfs_queue_.clear();
        bfs_queue_.push_back(cur_idx_);
        bfs_seen_[cur_idx_] = bfs_gen_;
        int reached = 0;
        for (size_t h = 0; h < bfs_queue_.size(); ++h) {
            int u = bfs_queue_[h];
            for (int w : adj_sq_[u]) {
                if (bfs_seen_[w] == bfs_gen_ || visited_[w]) continue;
                bfs_seen_[w] = bfs_gen_;
                bfs_queue_.push_back(w);
                ++reached;
            }
        }
        return reached != want;
    }

    // a tour never repeats an edge, so a required edge is marked at most once
    void mark_move(const Move &mv, LiftPoint from_lift, LiftPoint to_lift, int *req_lift_hit) {
        int r = req_of_serial_[mv.edge_serial];
        if (r >= 0) {
            req_base_used_[r] = 1;
            --req_base_unused_;
        }
        *req_lift_hit = -1;
        for (size_t i = 0; i < req_lift_.size(); ++i) {
            ReqLift &e = req_lift_[i];
            if (e.used) continue;
            if ((e.p == from_lift && e.q == to_lift) || (e.p == to_lift && e.q == from_lift)) {
                e.used = true;
                --req_lift_unused_;
                *req_lift_hit = static_cast<int>(i);
                break;
            }
        }
    }

    void unmark_move(const Move &mv, int req_lift_hit) {
        int r = req_of_serial_[mv.edge_serial];
        if (r >= 0) {
            req_base_used_[r] = 0;
            ++req_base_unused_;
        }
        if (req_lift_hit >= 0) {
            req_lift_[req_lift_hit].used = false;
            ++req_lift_unused_;
        }
    }

    void emit_closed(const Move &closing) {
        Tour tour{spec_, start_sq_, path_, true};
        tour.jumps.push_back({project(cur_lift_), closing.pair});
        if (!sink_(tour)) stop_ = true;
    }

    void try_close() {
        const int first_serial = path_serials_.front();
        for (const Move &mv : moves_[cur_idx_]) {
            if (stop_) return;
            if (mv.to != start_idx_) continue;
            if (mn_ == 2 && mv.edge_serial == first_serial) continue;
            LiftPoint nl{cur_lift_.a + mv.pair.x, cur_lift_.b + mv.pair.y};
            if (!lift_point_ok(nl)) continue;
            long long da = nl.a - start_lift_.a, db = nl.b - start_lift_.b;
            if (spec_.topology == Topology::Regular && (da != 0 || db != 0)) continue;
            if (spec_.topology == Topology::Cylinder && da != 0) continue;
            if (spec_.topology != Topology::Regular && db % n_ != 0) continue;
            if (spec_.topology == Topology::Torus && da % m_ != 0) continue;
            if (!target_matches(da, db)) continue;
            // undirected counting: keep the direction whose first displacement
            // precedes the reversed closing displacement
            if (normalize_ && pair_index(path_[0].pair) >= pair_index(-mv.pair)) continue;
            int lift_hit = -1;
            mark_move(mv, cur_lift_, nl, &lift_hit);
            if (req_base_unused_ == 0 && req_lift_unused_ == 0) emit_closed(mv);
            unmark_move(mv, lift_hit);
        }
    }

    void dfs_closed() {
        tick();
        if (stop_) return;
        if (visited_count_ == mn_) {
            try_close();
            return;
        }
        const int remaining = mn_ - static_cast<int>(path_.size());
        if (!feasible(remaining)) return;
        if ((req_base_unused_ > 0 || req_lift_unused_ > 0) && !required_edges_alive()) return;
        if (prune_.degree && mn_ >= 3 && dead_square()) return;
        if (prune_.connectivity && disconnected()) return;
        expand([this] { dfs_closed(); });
    }

    void dfs_open() {
        tick();
        if (stop_) return;
        if (visited_count_ == mn_) {
            if (cur_idx_ == to_idx_ && req_base_unused_ == 0 && req_lift_unused_ == 0) {
                Tour tour{spec_, start_sq_, path_, false};
                if (!sink_(tour)) stop_ = true;
            }
            return;
        }
        const int remaining = (mn_ - 1) - static_cast<int>(path_.size());
        if (!feasible(remaining)) return;
        if ((req_base_unused_ > 0 || req_lift_unused_ > 0) && !required_edges_alive()) return;
        if (prune_.degree && mn_ >= 3 && dead_square()) return;
        if (prune_.connectivity && disconnected()) return;
        expand([this] { dfs_open(); });
    }

    template <class Recurse> void expand(const Recurse &recurse) {
        struct Cand {
            int key;
            const Move *mv;
            LiftPoint nl;
        };
        Cand cands[8];
        int n_cands = 0;
        for (const Move &mv : moves_[cur_idx_]) {
            if (visited_[mv.to]) continue;
            if (open_ && mv.to == to_idx_ && visited_count_ + 1 < mn_) continue;
            LiftPoint nl{cur_lift_.a + mv.pair.x, cur_lift_.b + mv.pair.y};
            if (!lift_point_ok(nl)) continue;
            cands[n_cands++] = {avail_cnt_[mv.to], &mv, nl};
        }
        if (warnsdorff_)
            std::stable_sort(cands, cands + n_cands,
                             [](const Cand &x, const Cand &y) { return x.key < y.key; });
        for (int i = 0; i < n_cands && !stop_; ++i) {
            const Move &mv = *cands[i].mv;
            const LiftPoint nl = cands[i].nl;
            const LiftPoint prev_lift = cur_lift_;
            const int prev_idx = cur_idx_;

            int lift_hit = -1;
            mark_move(mv, prev_lift, nl, &lift_hit);
            visited_[mv.to] = 1;
            ++visited_count_;
            lift_at_[mv.to] = nl;
            for (int w : adj_sq_[mv.to]) --avail_cnt_[w];
            path_.push_back({project(prev_lift), mv.pair});
            path_serials_.push_back(mv.edge_serial);
            cur_idx_ = mv.to;
            cur_lift_ = nl;

            recurse();

            cur_idx_ = prev_idx;
            cur_lift_ = prev_lift;
            path_.pop_back();
            path_serials_.pop_back();
            for (int w : adj_sq_[mv.to]) ++avail_cnt_[w];
            --visited_count_;
            visited_[mv.to] = 0;
            unmark_move(mv, lift_hit);
        }
    }
};

// problem validation shared by the entry points
void validate_problem(const SearchProblem &p, const Budget &budget) {
    if (p.spec.m < 1 || p.spec.n < 1) throw InvalidProblem("board extents must be positive");
    if (budget.max_nodes < 0 || budget.max_wall_ms < 0)
        throw InvalidProblem("budget must be nonnegative");
    switch (p.target.kind) {
    case TargetKind::Identity:
        if (p.spec.topology == Topology::Regular)
            throw InvalidProblem("identity targets apply to surfaces only");
        break;
    case TargetKind::Generator:
        if (p.spec.topology != Topology::Cylinder)
            throw TargetTopologyMismatch("generator targets apply to cylinders only");
        break;
    case TargetKind::Longitude:
        if (p.spec.topology != Topology::Torus)
            throw TargetTopologyMismatch("longitude targets apply to tori only");
        break;
    case TargetKind::Exact:
        if (!p.target.exact) throw InvalidProblem("exact target carries no class");
        if (p.target.exact->topology != p.spec.topology)
            throw TargetTopologyMismatch("exact target declared for a different topology");
        break;
    case TargetKind::Any:
        break;
    }
    for (const EdgeId &e : p.required_edges) {
        try {
            if (canonical_edge(p.spec, {e.from, e.pair}) != e)
                throw InvalidProblem("required edge id is not canonical");
        } catch (const InvalidJump &err) {
            throw InvalidProblem(std::string("required edge is invalid: ") + err.what());
        }
    }
}

// the closed tour of a one-square board is empty; no engine run needed
bool empty_tour_satisfies(const SearchProblem &p, const LiftConstraints *lift) {
    if (!p.required_edges.empty()) return false;
    if (lift && !lift->required_lift_edges.empty()) return false;
    if (lift) {
        LiftPoint origin{0, 0};
        if (lift->a_min && origin.a < *lift->a_min) return false;
        if (lift->a_max && origin.a > *lift->a_max) return false;
        if (lift->b_min && origin.b < *lift->b_min) return false;
        if (lift->b_max && origin.b > *lift->b_max) return false;
        if (lift->allow && !lift->allow(origin)) return false;
    }
    if (p.target.kind == TargetKind::Any) return true;
    if (p.spec.topology == Topology::Regular) return p.target.kind == TargetKind::Any;
    HomotopyClass cls = p.spec.topology == Topology::Cylinder ? HomotopyClass::cylinder(0)
                                                              : HomotopyClass::torus(0, 0);
    return matches_target(cls, p.target);
}

SearchOutcome run_closed(const SearchProblem &problem, const Budget &budget,
                         const PruneOptions &prune, const LiftConstraints *lift, bool warnsdorff,
                         bool normalize, const std::function<bool(const Tour &)> &sink) {
    validate_problem(problem, budget);
    SearchOutcome out;
    if (problem.spec.square_count() == 1) {
        if (empty_tour_satisfies(problem, lift)) {
            Tour empty{problem.spec, {0, 0}, {}, true};
            ++out.count;
            if (!sink(empty)) {
                out.status = SearchStatus::Found;
                out.tour = empty;
                return out;
            }
        }
        out.status = SearchStatus::Exhausted;
        return out;
    }
    long long emitted = 0;
    std::optional<Tour> last;
    bool stopped = false;
    Engine engine(problem.spec, problem.target, problem.required_edges, budget, prune, lift,
                  warnsdorff, normalize, [&](const Tour &t) {
                      ++emitted;
                      last = t;
                      stopped = !sink(t);
                      return !stopped;
                  });
    bool blown = false;
    try {
        engine.run(false, {0, 0}, {0, 0});
    } catch (const BudgetBlown &) {
        blown = true;
    }
    out.stats = {engine.nodes(), engine.elapsed_ms()};
    out.count = emitted;
    if (stopped) {
        out.status = SearchStatus::Found;
        out.tour = last;
    } else if (blown) {
        out.status = SearchStatus::BudgetExceeded;
    } else {
        out.status = SearchStatus::Exhausted;
    }
    return out;
}

} // namespace

SearchOutcome find_tour(const SearchProblem &problem, const Budget &budget,
                        const PruneOptions &prune) {
    SearchOutcome out =
        run_closed(problem, budget, prune, nullptr, true, false, [](const Tour &) { return false; });
    if (out.status == SearchStatus::Exhausted) {
        out.status = SearchStatus::NoSolution;
        out.count = 0;
    }
    return out;
}

SearchOutcome prove_nonexistence(const SearchProblem &problem, const Budget &budget,
                                 const PruneOptions &prune) {
    SearchOutcome out = run_closed(problem, budget, prune, nullptr, false, false,
                                   [](const Tour &) { return false; });
    if (out.status == SearchStatus::Exhausted) {
        out.status = SearchStatus::NoSolution;
        out.count = 0;
    }
    return out;
}

SearchOutcome count_tours(const SearchProblem &problem, const Budget &budget,
                          const PruneOptions &prune) {
    SearchOutcome out =
        run_closed(problem, budget, prune, nullptr, false, true, [](const Tour &) { return true; });
    if (out.status == SearchStatus::Found) out.status = SearchStatus::Exhausted;
    return out;
}

SearchOutcome for_each_tour(const SearchProblem &problem, const LiftConstraints &constraints,
                            const Budget &budget,
                            const std::function<bool(const Tour &)> &on_found) {
    return run_closed(problem, budget, PruneOptions::all(), &constraints, false, false, on_found);
}

SearchOutcome find_open_tour(const BoardSpec &spec, Square from, Square to, const Budget &budget,
                             const std::set<EdgeId> &required_edges) {
    if (spec.topology != Topology::Regular)
        throw InvalidProblem("open tours are searched on rectangles only");
    if (spec.m < 1 || spec.n < 1) throw InvalidProblem("board extents must be positive");
    if (!on_board(spec, from) || !on_board(spec, to))
        throw InvalidProblem("open tour endpoints must be on the board");
    SearchOutcome out;
    if (spec.square_count() == 1) {
        if (from == to && required_edges.empty()) {
            out.status = SearchStatus::Found;
            out.tour = Tour{spec, from, {}, false};
        }
        return out;
    }
    std::optional<Tour> got;
    Engine engine(spec, ClassTarget::any(), required_edges, budget, PruneOptions::all(), nullptr,
                  true, false, [&](const Tour &t) {
                      got = t;
                      return false;
                  });
    bool blown = false;
    try {
        engine.run(true, from, to);
    } catch (const BudgetBlown &) {
        blown = true;
    }
    out.stats = {engine.nodes(), engine.elapsed_ms()};
    if (got) {
        out.status = SearchStatus::Found;
        out.tour = got;
    } else if (blown) {
        out.status = SearchStatus::BudgetExceeded;
    } else {
        out.status = SearchStatus::NoSolution;
    }
    return out;
}

} // namespace knights
