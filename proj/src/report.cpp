#include "cosmetic/report.hpp"

#include <json.hpp>

#include <sstream>
#include <stdexcept>

namespace cosmetic {

namespace {

using ojson = nlohmann::ordered_json;

ojson integer_json(const Integer& value) {
    if (value.fits_slong_p()) {
        return value.get_si();
    }
    return to_string(value);
}

ojson verdict_json(const ObstructionVerdict& v) {
    ojson j;
    j["filter"] = v.filter_name;
    j["passed"] = v.passed;
    j["witness"] = v.witness ? ojson(*v.witness) : ojson(nullptr);
    return j;
}

ojson family_json(const CandidateFamily& f) {
    ojson j;
    j["p"] = f.p;
    j["q_residue"] = f.q_residue ? ojson(*f.q_residue) : ojson("any");
    j["gap"] = f.gap;
    j["distance"] = f.p * f.gap;
    j["surviving"] = f.surviving;
    if (f.beyond_exceptional_bound) {
        j["warning"] = "p * gap exceeds the exceptional distance bound; distance filter disabled";
    }
    j["verdicts"] = ojson::array();
    for (const auto& v : f.verdicts) {
        j["verdicts"].push_back(verdict_json(v));
    }
    return j;
}

std::string csv_field(const std::string& text) {
    if (text.find_first_of(",\"\n") == std::string::npos) {
        return text;
    }
    std::string out = "\"";
    for (const char c : text) {
        out += c == '"' ? std::string("\"\"") : std::string(1, c);
    }
    return out + "\"";
}

std::string residue_text(const CandidateFamily& f) {
    return f.q_residue ? std::to_string(*f.q_residue) : std::string("any");
}

std::string case_label(const ClassificationEntry& e) {
    return e.theorem_case == 0 ? std::string("finite") : std::to_string(e.theorem_case);
}

std::string heading(const ClassificationEntry& e) {
    switch (e.geometry) {
        case GeometryClass::reducible:
            return "reducible";
        case GeometryClass::seifert_toroidal:
            return "toroidal Seifert fibred";
        case GeometryClass::small_seifert_infinite:
            return "small Seifert fibred, infinite pi_1";
        case GeometryClass::toroidal_irreducible_non_seifert:
            return "toroidal, irreducible, not Seifert fibred";
        case GeometryClass::finite_pi1:
            return "finite pi_1";
        case GeometryClass::exceptional_generic:
            return "exceptional";
    }
    return "unknown";
}

// First failing witness, or the last witness when everything passed.
std::string explanation(const std::vector<ObstructionVerdict>& verdicts) {
    for (const auto& v : verdicts) {
        if (!v.passed) {
            return v.filter_name + ": " + v.witness.value_or("");
        }
    }
    std::string out;
    for (const auto& v : verdicts) {
        if (v.witness) {
            out += (out.empty() ? "" : "; ") + v.filter_name + ": " + *v.witness;
        }
    }
    return out;
}

std::string verdict_cell(const std::vector<ObstructionVerdict>& verdicts, std::string_view name) {
    for (const auto& v : verdicts) {
        if (v.filter_name == name) {
            return v.passed ? "pass" : "fail";
        }
    }
    return "-";
}

}  // namespace

ReportFormat parse_report_format(std::string_view name) {
    if (name == "json") {
        return ReportFormat::json;
    }
    if (name == "csv") {
        return ReportFormat::csv;
    }
    if (name == "markdown" || name == "md") {
        return ReportFormat::markdown;
    }
    throw std::invalid_argument("unknown report format '" + std::string(name) + "' (expected json, csv, markdown)");
}

std::string emit_report(const ClassificationTable& table, ReportFormat format) {
    std::ostringstream out;
    switch (format) {
        case ReportFormat::json: {
            ojson doc;
            doc["schema_version"] = kReportSchemaVersion;
            doc["kind"] = "classification_table";
            doc["entries"] = ojson::array();
            for (const auto& e : table.entries) {
                ojson j;
                j["geometry"] = to_string(e.geometry);
                j["case"] = case_label(e);
                j["distance_cap"] = e.distance_cap;
                j["summary"] = ojson::array();
                for (const auto& s : summarize(e.families)) {
                    j["summary"].push_back(describe(s));
                }
                j["families"] = ojson::array();
                for (const auto& f : e.families) {
                    j["families"].push_back(family_json(f));
                }
                j["cited_axiom"] = e.cited_axiom ? verdict_json(*e.cited_axiom) : ojson(nullptr);
                doc["entries"].push_back(std::move(j));
            }
            out << doc.dump(2) << '\n';
            break;
        }
        case ReportFormat::csv:
            out << "geometry,case,distance_cap,p,q_residue,gap,note\n";
            for (const auto& e : table.entries) {
                for (const auto& f : e.families) {
                    out << to_string(e.geometry) << ',' << case_label(e) << ',' << e.distance_cap << ',' << f.p << ','
                        << residue_text(f) << ',' << f.gap << ",\n";
                }
                if (e.cited_axiom) {
                    out << to_string(e.geometry) << ',' << case_label(e) << ',' << e.distance_cap << ",,,,"
                        << csv_field("obstructed: " + e.cited_axiom->witness.value_or("")) << '\n';
                }
            }
            break;
        case ReportFormat::markdown:
            out << "# Exceptional truly cosmetic surgeries on hyperbolic knots in homology spheres\n\n"
                << "Slopes p/q and p/q' with 0 < p and q < q'. Each row lists the residue families that survive "
                   "every arithmetic obstruction within the distance cap of that geometry. These are necessary "
                   "conditions only.\n\n";
            for (const auto& e : table.entries) {
                out << "## ";
                if (e.theorem_case != 0) {
                    out << "(" << e.theorem_case << ") ";
                }
                out << heading(e) << "\n\n";
                out << "Distance cap: " << e.distance_cap << "\n\n";
                if (e.cited_axiom) {
                    out << "Fully obstructed: " << e.cited_axiom->witness.value_or("") << ".\n\n";
                    continue;
                }
                if (e.families.empty()) {
                    out << "No surviving family.\n\n";
                    continue;
                }
                for (const auto& s : summarize(e.families)) {
                    out << "- " << describe(s) << "\n";
                }
                out << "\n| p | q mod p | q' - q | Delta | verdicts |\n|---|---|---|---|---|\n";
                for (const auto& f : e.families) {
                    out << "| " << f.p << " | " << residue_text(f) << " | " << f.gap << " | " << f.p * f.gap << " | "
                        << explanation(f.verdicts) << " |\n";
                }
                out << '\n';
            }
            break;
    }
    return out.str();
}

std::string emit_report(std::span<const CandidateFamily> families, ReportFormat format) {
    std::ostringstream out;
    switch (format) {
        case ReportFormat::json: {
            ojson doc;
            doc["schema_version"] = kReportSchemaVersion;
            doc["kind"] = "candidate_families";
            doc["families"] = ojson::array();
            doc["surviving"] = ojson::array();
            for (const auto& f : families) {
                doc["families"].push_back(family_json(f));
                if (f.surviving) {
                    doc["surviving"].push_back(family_json(f));
                }
            }
            out << doc.dump(2) << '\n';
            break;
        }
        case ReportFormat::csv:
            out << "p,q_residue,gap,distance,parity,congruence,dedekind,surviving,explanation\n";
            for (const auto& f : families) {
                out << f.p << ',' << residue_text(f) << ',' << f.gap << ',' << verdict_cell(f.verdicts, "distance")
                    << ',' << verdict_cell(f.verdicts, "parity") << ',' << verdict_cell(f.verdicts, "congruence")
                    << ',' << verdict_cell(f.verdicts, "dedekind") << ',' << (f.surviving ? "yes" : "no") << ','
                    << csv_field(explanation(f.verdicts)) << '\n';
            }
            break;
        case ReportFormat::markdown: {
            out << "| p | q mod p | q' - q | survives | explanation |\n|---|---|---|---|---|\n";
            std::size_t survivors = 0;
            for (const auto& f : families) {
                survivors += f.surviving ? 1 : 0;
                out << "| " << f.p << " | " << residue_text(f) << " | " << f.gap << " | "
                    << (f.surviving ? "yes" : "no") << (f.beyond_exceptional_bound ? " (beyond bound)" : "")
                    << " | " << explanation(f.verdicts) << " |\n";
            }
            out << "\nSurviving families: " << survivors << "\n";
            break;
        }
    }
    return out.str();
}

std::string emit_report(std::span<const PairResult> pairs, const FilterSet& filters, ReportFormat format) {
    std::ostringstream out;
    switch (format) {
        case ReportFormat::json: {
            ojson doc;
            doc["schema_version"] = kReportSchemaVersion;
            doc["kind"] = "pair_enumeration";
            doc["filters"] = filters.to_string();
            std::size_t survivors = 0;
            doc["pairs"] = ojson::array();
            for (const auto& r : pairs) {
                ojson j;
                j["p"] = r.p;
                j["q"] = integer_json(r.q);
                j["q_prime"] = integer_json(r.q + Integer(static_cast<unsigned long>(r.gap)));
                j["gap"] = r.gap;
                j["surviving"] = r.surviving;
                j["verdicts"] = ojson::array();
                for (const auto& v : r.verdicts) {
                    j["verdicts"].push_back(verdict_json(v));
                }
                survivors += r.surviving ? 1 : 0;
                doc["pairs"].push_back(std::move(j));
            }
            doc["survivor_count"] = survivors;
            out << doc.dump(2) << '\n';
            break;
        }
        case ReportFormat::csv:
            out << "p,q,q_prime,gap,distance,parity,congruence,dedekind,surviving,explanation\n";
            for (const auto& r : pairs) {
                out << r.p << ',' << r.q << ',' << Integer(r.q + Integer(static_cast<unsigned long>(r.gap))) << ','
                    << r.gap << ',' << verdict_cell(r.verdicts, "distance") << ','
                    << verdict_cell(r.verdicts, "parity") << ',' << verdict_cell(r.verdicts, "congruence") << ','
                    << verdict_cell(r.verdicts, "dedekind") << ',' << (r.surviving ? "yes" : "no") << ','
                    << csv_field(explanation(r.verdicts)) << '\n';
            }
            break;
        case ReportFormat::markdown: {
            out << "| p/q | p/q' | survives | explanation |\n|---|---|---|---|\n";
            std::size_t survivors = 0;
            for (const auto& r : pairs) {
                survivors += r.surviving ? 1 : 0;
                out << "| " << r.p << "/" << r.q << " | " << r.p << "/"
                    << Integer(r.q + Integer(static_cast<unsigned long>(r.gap))) << " | "
                    << (r.surviving ? "yes" : "no") << " | " << explanation(r.verdicts) << " |\n";
            }
            out << "\nFilters: " << filters.to_string() << ". Surviving pairs: " << survivors << "\n";
            break;
        }
    }
    return out.str();
}

}  // namespace cosmetic
