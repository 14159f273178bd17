#ifndef PB_SEARCH_HPP
#define PB_SEARCH_HPP

#include <optional>
#include <string>
#include <vector>

#include "pb/binomial.hpp"
#include "pb/gf.hpp"

namespace pb {

/// All prime powers <= max_q, ascending; optionally only those with
/// q = -1 (mod r).
std::vector<PrimePower> enumerate_prime_powers(u32 max_q, std::optional<u32> r_filter = {});

enum class CondKind {
    NontrivialRthRoot,  // b != 1 and b^r = 1
    RootOfProduct,      // some listed prime-field factor vanishes at b
    MemberOfSet,        // b equals one of the listed prime-field constants
};

/// One case of a published classification, evaluated on b = a^{(q+1)/r}.
/// Condition polynomials and set members live in the prime field.
struct TheoremPredicate {
    u32 r = 0;
    u32 q = 0;             // fixed q; ignored when pow2_family is set
    bool pow2_family = false;  // matches every q = 2^m with r | q+1
    int case_id = 0;
    CondKind kind = CondKind::NontrivialRthRoot;
    std::vector<FpPoly> factors;
    std::vector<u32> members;

    bool applies_to(u32 qq) const;
    bool eval(const FieldCtx& F, FieldElem b) const;
};

/// The built-in case tables; r = 5 and r = 7 are available.
const std::vector<TheoremPredicate>& known_cases(u32 r);

struct ClassRecord {
    u32 q = 0, p = 0, n = 0, r = 0;
    u32 b_index = 0;
    u32 a_rep_index = 0;
    u32 a_rep_power = 0;
    bool is_pp = false;
    int matched_case = 0;  // 0 = no case applies / none matched
};

struct ClassificationReport {
    u32 q = 0, r = 0;
    std::vector<ClassRecord> rows;  // sorted by b_index
    u32 pp_count = 0;
    double seconds = 0.0;
    std::vector<u32> diff_b;        // b indices where predicate != oracle
    u64 hermite_checked = 0;
    u64 hermite_mismatches = 0;
};

struct SearchOptions {
    unsigned jobs = 1;
    u64 size_cap = FieldCtx::kDefaultSizeCap;  // cap on q^2
    double cross_check_fraction = 0.0;         // share of classes re-tested by hermite_check
    u32 negative_samples = 256;                // sampled a for r nmid q+1, q > 30
};

/// Brute-force classification of all b-classes for one q, annotated
/// against the built-in case table when one applies.
ClassificationReport classify(u32 q, u32 r, const SearchOptions& opts = {});

struct PerQResult {
    u32 q = 0;
    bool divides = false;      // r | q+1
    bool exhaustive = false;   // negative check over all a (vs sampled)
    bool pass = false;
    u32 pp_classes = 0;
    std::vector<u32> diff_b;   // mismatched b indices (r | q+1 case)
};

struct TheoremVerification {
    u32 r = 0;
    u32 q_max = 0;
    bool pass = false;
    std::vector<PerQResult> per_q;
};

/// Checks the case table against brute force for every prime power
/// r <= q <= q_max.  For r | q+1 the full b-class map is compared; for
/// r nmid q+1 the absence of permutations is asserted (all a for q <= 30,
/// sampled beyond).  Exponents below r are outside the family's reduced
/// range and are skipped.
TheoremVerification verify_theorem(u32 r, u32 q_max, const SearchOptions& opts = {});
TheoremVerification verify_theorem_with(const std::vector<TheoremPredicate>& cases, u32 r,
                                        u32 q_max, const SearchOptions& opts = {});

struct ConjectureFinding {
    u32 q = 0;
    u32 b_index = 0;
    u32 a_rep_power = 0;
    bool b_is_rth_root = false;  // false marks the conjecturally sporadic ones
};

/// For each q = -1 (mod r) up to q_max, every permutation class, split by
/// whether b is an r-th root of unity.  Sorted by (q, b_index).
std::vector<ConjectureFinding> conjecture_scan(u32 r, u32 q_max, const SearchOptions& opts = {});

/// Default sweep bound for a given r (128 for r = 5, 100 for r = 7).
u32 default_q_max(u32 r);

}  // namespace pb

#endif
