#pragma once

#include <optional>
#include <string>
#include <vector>

#include "knights/board.hpp"
#include "knights/lift.hpp"
#include "knights/search.hpp"

namespace knights {

// Closed-tour existence characterizations, one predicate per claim family.
// rect_closed_predicate expects max(m,n) > 1; the one-square board is
// outside its domain and is skipped by the sweeps.
bool rect_closed_predicate(int m, int n);
bool cyl_any_predicate(int m, int n);
bool cyl_null_predicate(int m, int n);
bool cyl_gen_predicate(int m, int n);
bool tori_null_predicate(int m, int n);
bool torus_lon_predicate(int m, int n);

enum class ClaimSource { RectClosed, CylAny, CylNull, ToriNull, CylGen, TorusLon };

std::string claim_source_name(ClaimSource source);
std::optional<ClaimSource> claim_source_from_name(const std::string &name);

struct Claim {
    BoardSpec spec;
    ClassTarget target;
    bool predicted = false;
    ClaimSource source = ClaimSource::RectClosed;
};

Claim make_claim(ClaimSource source, int m, int n);

enum class EvidenceKind { FoundTour, ExhaustedNone, ParityBlocked, Skipped };

struct VerdictRow {
    Claim claim;
    EvidenceKind evidence = EvidenceKind::Skipped;
    std::string detail; // tour checksum, or the reason a cell was skipped
    bool agree = false;
    SearchStats stats;
};

enum class VerifyMethod { SearchOnly, ConstructThenSearch };

// Checks every (m,n) in ms x ns against the predicate: positives are
// discharged by exhibiting a tour, negatives by parity or exhaustive
// refutation. Rows come back in sweep order regardless of jobs.
std::vector<VerdictRow> verify_range(ClaimSource source, const std::vector<int> &ms,
                                     const std::vector<int> &ns, VerifyMethod method,
                                     Budget budget = {}, int jobs = 1);

} // namespace knights
