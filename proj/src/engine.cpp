#include "cosmetic/engine.hpp"

#include "cosmetic/dedekind.hpp"
#include "cosmetic/invariants.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace cosmetic {

namespace {

constexpr std::uint64_t kMaxEnumeratedPairs = 50'000'000;

Integer to_integer(std::uint64_t value) { return Integer(static_cast<unsigned long>(value)); }

// Parity first: the other filters need coprime input.
std::vector<ObstructionVerdict> run_filters(std::uint64_t p, const Integer& q, std::uint64_t gap,
                                            const FilterSet& filters) {
    std::vector<ObstructionVerdict> verdicts;
    const Integer ip = to_integer(p);
    const Integer q2 = q + to_integer(gap);
    if (filters.distance) {
        verdicts.push_back(distance_filter(ip, to_integer(gap), kExceptionalDistanceBound));
    }
    verdicts.push_back(parity_filter(ip, q, q2));
    if (!verdicts.back().passed) {
        return verdicts;
    }
    if (filters.congruence) {
        verdicts.push_back(linking_congruence(p, q, q2));
    }
    if (filters.dedekind) {
        verdicts.push_back(cosmetic_dedekind_obstruction(ip, q, q2));
    }
    return verdicts;
}

bool all_passed(const std::vector<ObstructionVerdict>& verdicts) {
    return std::all_of(verdicts.begin(), verdicts.end(), [](const auto& v) { return v.passed; });
}

bool exhaustive_unit_search(std::uint64_t p, const Integer& q, const Integer& q2) {
    const Integer ip = to_integer(p);
    for (std::uint64_t u = 0; u < std::max<std::uint64_t>(p, 1); ++u) {
        if (std::gcd(u, p) != 1) {
            continue;
        }
        const Integer iu = to_integer(u);
        if (floor_mod(Integer(q2 * iu * iu - q), ip) == 0) {
            return true;
        }
    }
    return false;
}

const ObstructionVerdict* find_verdict(const CandidateFamily& f, std::string_view name) {
    for (const auto& v : f.verdicts) {
        if (v.filter_name == name) {
            return &v;
        }
    }
    return nullptr;
}

}  // namespace

std::vector<CandidateFamily> classify_candidates(std::uint64_t p, const ClassifyOptions& options) {
    if (p == 0) {
        throw std::invalid_argument("classify_candidates needs p >= 1");
    }
    std::vector<CandidateFamily> families;
    if (options.distance_filter && p > kExceptionalDistanceBound) {
        CandidateFamily f;
        f.p = p;
        f.q_residue = std::nullopt;
        f.gap = 1;
        f.verdicts.push_back(distance_filter(to_integer(p), 1, kExceptionalDistanceBound));
        f.surviving = false;
        families.push_back(std::move(f));
        return families;
    }

    const std::uint64_t max_gap = options.distance_filter ? kExceptionalDistanceBound / p : options.max_gap;
    FilterSet filters;
    filters.distance = options.distance_filter;
    for (std::uint64_t gap = 1; gap <= max_gap; ++gap) {
        for (std::uint64_t r = 0; r < p; ++r) {
            CandidateFamily f;
            f.p = p;
            f.q_residue = p == 1 ? std::nullopt : std::optional<std::uint64_t>(r);
            f.gap = gap;
            f.verdicts = run_filters(p, to_integer(r), gap, filters);
            f.surviving = all_passed(f.verdicts);
            f.beyond_exceptional_bound = p * gap > kExceptionalDistanceBound;
            families.push_back(std::move(f));
        }
    }
    return families;
}

std::vector<CandidateFamily> surviving(std::span<const CandidateFamily> families) {
    std::vector<CandidateFamily> out;
    std::copy_if(families.begin(), families.end(), std::back_inserter(out), [](const auto& f) { return f.surviving; });
    return out;
}

std::vector<std::string> cross_check(std::span<const CandidateFamily> families) {
    std::vector<std::string> problems;
    for (const auto& f : families) {
        const Integer p = to_integer(f.p);
        const Integer q = to_integer(f.q_residue.value_or(0));
        const Integer q2 = q + to_integer(f.gap);
        std::ostringstream label;
        label << "p=" << f.p << " q=" << q << " gap=" << f.gap << ": ";

        const bool coprime = gcd(q, p) == 1 && gcd(q2, p) == 1;
        if (f.surviving && !coprime) {
            problems.push_back(label.str() + "surviving family is not coprime to p");
        }
        if (f.surviving && !f.beyond_exceptional_bound && f.p * f.gap > kExceptionalDistanceBound) {
            problems.push_back(label.str() + "surviving family exceeds the distance bound");
        }
        if (!coprime) {
            continue;
        }
        const bool congruent = exhaustive_unit_search(f.p, q, q2);
        const bool dedekind = dedekind_sum_direct(q, p) == dedekind_sum_direct(q2, p);
        if (const auto* v = find_verdict(f, "congruence"); v != nullptr && v->passed != congruent) {
            problems.push_back(label.str() + "linking congruence disagrees with exhaustive unit search");
        }
        if (const auto* v = find_verdict(f, "dedekind"); v != nullptr && v->passed != dedekind) {
            problems.push_back(label.str() + "Dedekind verdict disagrees with the direct sum");
        }
        if (f.surviving && (!congruent || !dedekind)) {
            problems.push_back(label.str() + "surviving family fails an oracle check");
        }
    }
    return problems;
}

std::vector<FamilySummary> summarize(std::span<const CandidateFamily> families) {
    std::map<std::uint64_t, std::set<std::pair<std::uint64_t, std::uint64_t>>> by_p;
    for (const auto& f : families) {
        by_p[f.p].insert({f.q_residue.value_or(0), f.gap});
    }
    std::vector<FamilySummary> out;
    for (const auto& [p, members] : by_p) {
        FamilySummary s;
        s.p = p;
        for (const auto& [r, g] : members) {
            s.residues.insert(r);
            s.gaps.insert(g);
        }
        if (s.residues.size() * s.gaps.size() == members.size()) {
            if (p == 1) {
                s.residues.clear();
            }
            out.push_back(std::move(s));
            continue;
        }
        // Not a product: one line per family.
        for (const auto& [r, g] : members) {
            FamilySummary single;
            single.p = p;
            if (p != 1) {
                single.residues = {r};
            }
            single.gaps = {g};
            out.push_back(std::move(single));
        }
    }
    return out;
}

std::string describe(const FamilySummary& s) {
    std::ostringstream out;
    out << "p = " << s.p;
    if (!s.residues.empty()) {
        out << ", q = ";
        bool first = true;
        for (const auto r : s.residues) {
            out << (first ? "" : " or ") << r;
            first = false;
        }
        out << " mod " << s.p;
    }
    const bool contiguous = !s.gaps.empty() && *s.gaps.begin() == 1 && *s.gaps.rbegin() == s.gaps.size();
    if (s.gaps.size() == 1) {
        out << ", q' = q + " << *s.gaps.begin();
    } else if (contiguous) {
        out << ", |q' - q| <= " << *s.gaps.rbegin();
    } else {
        out << ", q' - q in {";
        bool first = true;
        for (const auto g : s.gaps) {
            out << (first ? "" : ",") << g;
            first = false;
        }
        out << "}";
    }
    return out.str();
}

const ClassificationEntry& ClassificationTable::entry(GeometryClass g) const {
    for (const auto& e : entries) {
        if (e.geometry == g) {
            return e;
        }
    }
    throw std::out_of_range("no table entry for " + std::string(to_string(g)));
}

ClassificationTable replicate_theorem() {
    std::vector<CandidateFamily> survivors;
    for (std::uint64_t p = 1; p <= kExceptionalDistanceBound; ++p) {
        const auto families = classify_candidates(p);
        const auto kept = surviving(families);
        survivors.insert(survivors.end(), kept.begin(), kept.end());
    }

    const std::pair<GeometryClass, int> rows[] = {
        {GeometryClass::reducible, 1},
        {GeometryClass::seifert_toroidal, 2},
        {GeometryClass::small_seifert_infinite, 3},
        {GeometryClass::toroidal_irreducible_non_seifert, 4},
        {GeometryClass::finite_pi1, 0},
    };

    ClassificationTable table;
    for (const auto& [geometry, theorem_case] : rows) {
        ClassificationEntry e;
        e.geometry = geometry;
        e.theorem_case = theorem_case;
        e.distance_cap = distance_cap(geometry);
        for (const auto& f : survivors) {
            if (f.p * f.gap <= e.distance_cap) {
                e.families.push_back(f);
            }
        }
        if (geometry == GeometryClass::finite_pi1) {
            // A homology sphere with finite pi_1 is S^3 or the Poincare sphere,
            // both L-spaces, which forces Delta''(1) = 2 for the knot. Cited.
            auto axiom = alexander_obstruction(2);
            axiom.witness = *axiom.witness + " for knots with an S^3 or Sigma(2,3,5) surgery (cited, not computed)";
            e.families.clear();
            e.cited_axiom = std::move(axiom);
        }
        table.entries.push_back(std::move(e));
    }
    return table;
}

FilterSet FilterSet::parse(std::string_view text) {
    if (text == "all") {
        return {};
    }
    FilterSet f{false, false, false};
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto comma = text.find(',', start);
        const auto name = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
        if (name == "congruence") {
            f.congruence = true;
        } else if (name == "dedekind") {
            f.dedekind = true;
        } else if (name == "distance") {
            f.distance = true;
        } else {
            throw std::invalid_argument("unknown filter '" + std::string(name) +
                                        "' (expected all or congruence,dedekind,distance)");
        }
        if (comma == std::string_view::npos) {
            break;
        }
        start = comma + 1;
    }
    return f;
}

std::string FilterSet::to_string() const {
    std::string out;
    auto add = [&](bool on, const char* name) {
        if (on) {
            out += (out.empty() ? "" : ",") + std::string(name);
        }
    };
    add(congruence, "congruence");
    add(dedekind, "dedekind");
    add(distance, "distance");
    return out.empty() ? "none" : out;
}

std::vector<PairResult> enumerate_pairs(const EnumerationRequest& request) {
    if (request.p_min < 1 || request.p_min > request.p_max) {
        throw std::invalid_argument("invalid p range");
    }
    if (request.q_min > request.q_max) {
        throw std::invalid_argument("invalid q range");
    }
    if (request.max_gap < 1) {
        throw std::invalid_argument("max_gap must be >= 1");
    }
    const Integer q_count = request.q_max - request.q_min + 1;
    const Integer p_count = to_integer(request.p_max - request.p_min + 1);
    const Integer total = q_count * p_count * to_integer(request.max_gap);
    if (total > to_integer(kMaxEnumeratedPairs)) {
        throw std::invalid_argument("enumeration of " + to_string(total) + " pairs exceeds the limit of " +
                                    std::to_string(kMaxEnumeratedPairs));
    }

    // One work item per (p, q); items are numbered p-major.
    const std::uint64_t qs = q_count.get_ui();
    const std::uint64_t items = p_count.get_ui() * qs;
    const unsigned jobs = std::max(1u, std::min<unsigned>(request.jobs, static_cast<unsigned>(items)));

    auto run_range = [&](std::uint64_t begin, std::uint64_t end, std::vector<PairResult>& out) {
        for (std::uint64_t i = begin; i < end; ++i) {
            const std::uint64_t p = request.p_min + i / qs;
            const Integer q = request.q_min + to_integer(i % qs);
            for (std::uint64_t gap = 1; gap <= request.max_gap; ++gap) {
                PairResult r;
                r.p = p;
                r.q = q;
                r.gap = gap;
                r.verdicts = run_filters(p, q, gap, request.filters);
                r.surviving = all_passed(r.verdicts);
                out.push_back(std::move(r));
            }
        }
    };

    std::vector<std::vector<PairResult>> parts(jobs);
    if (jobs == 1) {
        run_range(0, items, parts[0]);
    } else {
        std::vector<std::jthread> workers;
        const std::uint64_t chunk = (items + jobs - 1) / jobs;
        for (unsigned j = 0; j < jobs; ++j) {
            const std::uint64_t begin = std::min(items, j * chunk);
            const std::uint64_t end = std::min(items, begin + chunk);
            workers.emplace_back([&, j, begin, end] { run_range(begin, end, parts[j]); });
        }
    }

    std::vector<PairResult> results;
    for (auto& part : parts) {
        std::move(part.begin(), part.end(), std::back_inserter(results));
    }
    std::sort(results.begin(), results.end(), [](const PairResult& a, const PairResult& b) {
        if (a.p != b.p) {
            return a.p < b.p;
        }
        if (a.q != b.q) {
            return a.q < b.q;
        }
        return a.gap < b.gap;
    });
    return results;
}

}  // namespace cosmetic
