#pragma once

// Static census of hyperbolic manifolds carrying a pair of toroidal fillings
// at distance >= 4: M1..M14 (distance 4 or 5) and the Whitehead-link
// fillings W(1), W(2), W(-5), W(-5/2) (distance 6, 7 or 8).
//
// Slopes are stored in the framing of the published tables. The census ships
// as data/census.json and is compiled into the library; a different file can
// be loaded at runtime with Census::load_file.

#include "cosmetic/invariants.hpp"
#include "cosmetic/rational.hpp"
#include "cosmetic/slope.hpp"

#include <json.hpp>

#include <filesystem>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace cosmetic {

inline constexpr int kCensusSchemaVersion = 1;

struct KnownFilling {
    Slope slope;          // canonical form of the published slope
    std::string written;  // slope exactly as written in the table
    std::string kind;     // "lens" or "toroidal"
    std::optional<LensSpace> lens;
    std::optional<Integer> order;  // |H_1|, 0 = infinite
};

/// H_1 of a toroidal filling is Z^free_rank + torsion.
struct FillingHomology {
    std::string filling;
    int free_rank = 0;
    std::vector<Integer> torsion;
};

/// Quotient of H_1 of every filling of the second cusp by its core.
struct PeripheralQuotient {
    std::vector<Integer> torsion;
};

/// Closing the second cusp yields a knot exterior in S^3, whose only
/// candidate truly cosmetic pair is known from the literature.
struct S3ExteriorCited {
    std::vector<Slope> forced_slopes;
};

/// Fillings are surgeries on the Whitehead link with one fixed coefficient.
struct WhiteheadFilling {
    Slope coefficient;
};

struct AlexanderFact {
    AlexanderPolynomial polynomial;
};

struct HomologyFact {
    std::string statement;
    std::variant<FillingHomology, PeripheralQuotient, S3ExteriorCited, WhiteheadFilling, AlexanderFact> data;
};

struct CensusRecord {
    std::string id;
    int boundary_tori = 1;
    int toroidal_pair_distance = 0;
    std::vector<KnownFilling> known_fillings;
    std::vector<HomologyFact> homology_facts;
};

class Census {
public:
    /// Parses and validates. Throws std::invalid_argument on schema or
    /// consistency errors (distance groupings, lens orders, slope distances).
    static Census from_json(std::string_view text);
    static Census load_file(const std::filesystem::path& path);

    /// The census compiled from data/census.json.
    static const Census& builtin();

    const std::vector<CensusRecord>& records() const { return records_; }

    /// Accepts "M6", "M_6", "m6", "W(2)", "W(-5/2)". Throws
    /// std::out_of_range for unknown ids.
    const CensusRecord& lookup(std::string_view id) const;

private:
    std::vector<CensusRecord> records_;
};

/// Lookup in the built-in census.
const CensusRecord& census_lookup(std::string_view id);

nlohmann::ordered_json to_json(const CensusRecord& record);

struct ExclusionReason {
    std::string rule;
    std::string detail;
};

/// Whether a census manifold can be the exterior of a knot in an integer
/// homology sphere (H_1 = Z) with an orientation-preserving homeomorphism
/// between its two toroidal fillings.
struct ExteriorVerdict {
    bool excluded = false;
    std::vector<ExclusionReason> reasons;
};

ExteriorVerdict zhs_exterior_filter(const CensusRecord& record);

/// Orders p = |H_1| a filling can have when it belongs to a truly cosmetic
/// pair p/q, p/q' at the given distance: p | distance and some residue class
/// q mod p with gap distance / p passes the parity, linking-form and Dedekind
/// filters.
std::set<Integer> admissible_orders(unsigned distance);

}  // namespace cosmetic
