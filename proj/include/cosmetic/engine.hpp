#pragma once

// Enumeration of candidate truly cosmetic slope pairs p/q, p/q' (0 < p,
// q < q') through the arithmetic filters, and assembly of the per-geometry
// classification table.
//
// Everything here is a necessary condition only: a surviving family is not
// claimed to be realized by any knot.

#include "cosmetic/obstructions.hpp"
#include "cosmetic/rational.hpp"
#include "cosmetic/verdict.hpp"

#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cosmetic {

/// Bound on the distance between two exceptional slopes.
inline constexpr unsigned kExceptionalDistanceBound = 8;

/// All slope pairs p/q, p/(q + gap) with q in a fixed residue class mod p.
struct CandidateFamily {
    std::uint64_t p = 1;
    std::optional<std::uint64_t> q_residue;  // nullopt: any q (p = 1)
    std::uint64_t gap = 1;
    std::vector<ObstructionVerdict> verdicts;
    bool surviving = false;
    // Set when p * gap exceeds the exceptional bound because the distance
    // filter was disabled.
    bool beyond_exceptional_bound = false;

    friend bool operator==(const CandidateFamily&, const CandidateFamily&) = default;
};

struct ClassifyOptions {
    bool distance_filter = true;
    // Largest gap tried when the distance filter is disabled.
    std::uint64_t max_gap = kExceptionalDistanceBound;
};

/// Every family for numerator p with its verdict trail, in (gap, residue)
/// order. For p > 8 a single family carrying the failed distance verdict is
/// returned. Throws std::invalid_argument for p == 0.
std::vector<CandidateFamily> classify_candidates(std::uint64_t p, const ClassifyOptions& options = {});

std::vector<CandidateFamily> surviving(std::span<const CandidateFamily> families);

/// Independent re-check of every family from the definitional oracles
/// (term-by-term Dedekind sums, exhaustive unit search). Returns one message
/// per disagreement; empty means consistent.
std::vector<std::string> cross_check(std::span<const CandidateFamily> families);

/// Families with the same p whose residues and gaps form a full product,
/// used for compact rendering: "p = 2, q = 1 mod 2, gap in {2,4}".
struct FamilySummary {
    std::uint64_t p = 1;
    std::set<std::uint64_t> residues;  // empty: any q
    std::set<std::uint64_t> gaps;
};

std::vector<FamilySummary> summarize(std::span<const CandidateFamily> families);

std::string describe(const FamilySummary& summary);

struct ClassificationEntry {
    GeometryClass geometry;
    int theorem_case = 0;  // 1-4; 0 for the finite pi_1 branch
    unsigned distance_cap = 0;
    std::vector<CandidateFamily> families;
    // Axiom consumed instead of computed; set for the finite pi_1 branch.
    std::optional<ObstructionVerdict> cited_axiom;
};

struct ClassificationTable {
    std::vector<ClassificationEntry> entries;

    const ClassificationEntry& entry(GeometryClass g) const;
};

/// Runs classify_candidates for p = 1..8 and intersects the survivors with
/// each geometry's distance cap.
ClassificationTable replicate_theorem();

/// Which optional filters enumerate_pairs applies. Coprimality is always
/// checked since the other filters are undefined without it.
struct FilterSet {
    bool congruence = true;
    bool dedekind = true;
    bool distance = true;

    /// "all" or a comma list of congruence, dedekind, distance.
    static FilterSet parse(std::string_view text);
    std::string to_string() const;
};

struct EnumerationRequest {
    std::uint64_t p_min = 1;
    std::uint64_t p_max = 8;
    Integer q_min = 1;
    Integer q_max = 1000;
    FilterSet filters;
    std::uint64_t max_gap = kExceptionalDistanceBound;
    unsigned jobs = 1;
};

struct PairResult {
    std::uint64_t p = 1;
    Integer q;
    std::uint64_t gap = 1;
    std::vector<ObstructionVerdict> verdicts;
    bool surviving = false;

    friend bool operator==(const PairResult&, const PairResult&) = default;
};

/// Concrete pairs p/q, p/(q + gap) for every p, q in range and gap in
/// [1, max_gap], sorted by (p, q, gap) whatever the number of jobs. Throws
/// std::invalid_argument on empty or oversized ranges.
std::vector<PairResult> enumerate_pairs(const EnumerationRequest& request);

}  // namespace cosmetic
