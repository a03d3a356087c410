#include "knights/theorems.hpp"

#include <algorithm>
#include <thread>

#include "knights/construct.hpp"
#include "knights/errors.hpp"
#include "knights/serialize.hpp"

namespace knights {

bool rect_closed_predicate(int m, int n) {
    int lo = std::min(m, n), hi = std::max(m, n);
    if (m % 2 == 1 && n % 2 == 1) return false;
    if (lo == 1 || lo == 2 || lo == 4) return false;
    if (lo == 3 && (hi == 4 || hi == 6 || hi == 8)) return false;
    return true;
}

bool cyl_any_predicate(int m, int n) {
    if (m == 1 && n > 1) return false;
    if ((m == 2 || m == 4) && n % 2 == 0) return false;
    return true;
}

bool cyl_null_predicate(int m, int n) {
    if (m % 2 == 1 && n % 2 == 1 && m * n > 1) return false;
    if (m == 1 && n > 1) return false;
    if (m == 2) return false;
    if (m == 4 && n % 2 == 0) return false;
    return true;
}

bool cyl_gen_predicate(int m, int n) {
    if (m == 1 || m == 2 || m == 4) return false;
    if (m % 2 == 0 && n % 2 == 1) return false;
    return true;
}

bool tori_null_predicate(int m, int n) {
    if (m == 1 && n == 1) return true;
    if ((m == 1 && n == 2) || (m == 2 && n == 1)) return false;
    return m % 2 == 0 || n % 2 == 0;
}

bool torus_lon_predicate(int m, int n) {
    if (m == 1 && n == 1) return false;
    return m % 2 == 1 || n % 2 == 0;
}

std::string claim_source_name(ClaimSource source) {
    switch (source) {
    case ClaimSource::RectClosed: return "rect-closed";
    case ClaimSource::CylAny: return "cyl-any";
    case ClaimSource::CylNull: return "cyl-null";
    case ClaimSource::ToriNull: return "tori-null";
    case ClaimSource::CylGen: return "cyl-gen";
    case ClaimSource::TorusLon: return "torus-lon";
    }
    throw InvalidProblem("unknown claim source");
}

std::optional<ClaimSource> claim_source_from_name(const std::string &name) {
    for (ClaimSource s : {ClaimSource::RectClosed, ClaimSource::CylAny, ClaimSource::CylNull,
                          ClaimSource::ToriNull, ClaimSource::CylGen, ClaimSource::TorusLon})
        if (claim_source_name(s) == name) return s;
    return std::nullopt;
}

Claim make_claim(ClaimSource source, int m, int n) {
    if (m < 1 || n < 1) throw InvalidProblem("board extents must be positive");
    Claim claim;
    claim.source = source;
    switch (source) {
    case ClaimSource::RectClosed:
        claim.spec = {Topology::Regular, m, n};
        claim.target = ClassTarget::any();
        claim.predicted = rect_closed_predicate(m, n);
        break;
    case ClaimSource::CylAny:
        claim.spec = {Topology::Cylinder, m, n};
        claim.target = ClassTarget::any();
        claim.predicted = cyl_any_predicate(m, n);
        break;
    case ClaimSource::CylNull:
        claim.spec = {Topology::Cylinder, m, n};
        claim.target = ClassTarget::identity();
        claim.predicted = cyl_null_predicate(m, n);
        break;
    case ClaimSource::ToriNull:
        claim.spec = {Topology::Torus, m, n};
        claim.target = ClassTarget::identity();
        claim.predicted = tori_null_predicate(m, n);
        break;
    case ClaimSource::CylGen:
        claim.spec = {Topology::Cylinder, m, n};
        claim.target = ClassTarget::generator();
        claim.predicted = cyl_gen_predicate(m, n);
        break;
    case ClaimSource::TorusLon:
        claim.spec = {Topology::Torus, m, n};
        claim.target = ClassTarget::longitude();
        claim.predicted = torus_lon_predicate(m, n);
        break;
    }
    return claim;
}

namespace {

// boards past this square count are not exhaustively refuted by the sweeps
constexpr long long kExhaustCeiling = 26;

VerdictRow verify_cell(ClaimSource source, int m, int n, VerifyMethod method,
                       const Budget &budget) {
    VerdictRow row;
    row.claim = make_claim(source, m, n);

    if (source == ClaimSource::RectClosed && m == 1 && n == 1) {
        row.evidence = EvidenceKind::Skipped;
        row.detail = "outside predicate domain";
        row.agree = true;
        return row;
    }

    const SearchProblem problem{row.claim.spec, row.claim.target, {}, SearchMode::FindOne};

    if (row.claim.predicted) {
        if (method == VerifyMethod::ConstructThenSearch) {
            try {
                Tour tour = construct(row.claim.spec, row.claim.target, budget);
                row.evidence = EvidenceKind::FoundTour;
                row.detail = tour_checksum(tour);
                row.agree = true;
                return row;
            } catch (const BudgetExceeded &) {
                row.evidence = EvidenceKind::Skipped;
                row.detail = "construction budget exhausted";
                row.agree = false;
                return row;
            } catch (const Unsupported &) {
                // fall through to a direct search
            }
        }
        SearchOutcome out = find_tour(problem, budget);
        row.stats = out.stats;
        switch (out.status) {
        case SearchStatus::Found:
            row.evidence = EvidenceKind::FoundTour;
            row.detail = tour_checksum(*out.tour);
            row.agree = true;
            break;
        case SearchStatus::BudgetExceeded:
            row.evidence = EvidenceKind::Skipped;
            row.detail = "search budget exhausted";
            row.agree = false;
            break;
        default:
            row.evidence = EvidenceKind::ExhaustedNone;
            row.detail = "predicted tour does not exist";
            row.agree = false;
            break;
        }
        return row;
    }

    // negative claim: parity first, then exhaustive refutation at desk scale
    bool parity_applies = row.claim.target.kind != TargetKind::Any &&
                          row.claim.spec.topology != Topology::Regular;
    if (parity_applies && parity_obstruction(row.claim.spec, row.claim.target)) {
        row.evidence = EvidenceKind::ParityBlocked;
        row.detail = "color counts forbid the class";
        row.agree = true;
        return row;
    }
    if (row.claim.spec.square_count() > kExhaustCeiling) {
        row.evidence = EvidenceKind::Skipped;
        row.detail = "board too large to exhaust";
        row.agree = true;
        return row;
    }
    SearchOutcome out = prove_nonexistence(problem, budget);
    row.stats = out.stats;
    switch (out.status) {
    case SearchStatus::NoSolution:
        row.evidence = EvidenceKind::ExhaustedNone;
        row.detail = "exhaustive search agrees";
        row.agree = true;
        break;
    case SearchStatus::Found:
        row.evidence = EvidenceKind::FoundTour;
        row.detail = tour_checksum(*out.tour);
        row.agree = false;
        break;
    default:
        row.evidence = EvidenceKind::Skipped;
        row.detail = "refutation budget exhausted";
        row.agree = false;
        break;
    }
    return row;
}

} // namespace

std::vector<VerdictRow> verify_range(ClaimSource source, const std::vector<int> &ms,
                                     const std::vector<int> &ns, VerifyMethod method,
                                     Budget budget, int jobs) {
    if (jobs < 1) throw InvalidProblem("jobs must be positive");
    std::vector<std::pair<int, int>> cells;
    cells.reserve(ms.size() * ns.size());
    for (int m : ms)
        for (int n : ns) cells.emplace_back(m, n);

    std::vector<VerdictRow> rows(cells.size());
    if (jobs == 1 || cells.size() <= 1) {
        for (std::size_t i = 0; i < cells.size(); ++i)
            rows[i] = verify_cell(source, cells[i].first, cells[i].second, method, budget);
        return rows;
    }

    // fixture derivation is shared state, so warm the cache single threaded
    // before fanning out
    if (method == VerifyMethod::ConstructThenSearch) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            const Claim claim = make_claim(source, cells[i].first, cells[i].second);
            if (!claim.predicted) continue;
            try {
                construct(claim.spec, claim.target, budget);
            } catch (const std::exception &) {
                // the worker records the miss in its row
            }
        }
    }

    const int workers = static_cast<int>(std::min<std::size_t>(jobs, cells.size()));
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (std::size_t i = w; i < cells.size(); i += workers)
                rows[i] = verify_cell(source, cells[i].first, cells[i].second, method, budget);
        });
    }
    for (std::thread &t : pool) t.join();
    return rows;
}

} // namespace knights
