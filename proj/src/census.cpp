#include "cosmetic/census.hpp"

#include "cosmetic/homology.hpp"
#include "cosmetic/obstructions.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace cosmetic {

namespace detail {
extern const char* const kBuiltinCensusJson;
}

namespace {

using nlohmann::json;

std::string normalize_id(std::string_view id) {
    std::string out;
    for (const char c : id) {
        if (c == '_' || std::isspace(static_cast<unsigned char>(c))) {
            continue;
        }
        out += (c == 'm' || c == 'w') ? static_cast<char>(std::toupper(c)) : c;
    }
    return out;
}

Integer json_integer(const json& value, const std::string& what) {
    if (value.is_number_integer()) {
        return Integer(std::to_string(value.get<long long>()), 10);
    }
    if (value.is_string()) {
        return parse_integer(value.get<std::string>());
    }
    throw std::invalid_argument(what + " must be an integer");
}

const json& field(const json& obj, const char* key, const std::string& where) {
    const auto it = obj.find(key);
    if (it == obj.end()) {
        throw std::invalid_argument(where + ": missing field '" + key + "'");
    }
    return *it;
}

std::vector<Integer> integer_list(const json& value, const std::string& where) {
    std::vector<Integer> out;
    for (const auto& item : value) {
        out.push_back(json_integer(item, where));
    }
    return out;
}

std::string torsion_text(int free_rank, const std::vector<Integer>& torsion) {
    std::string out;
    for (int i = 0; i < free_rank; ++i) {
        out += out.empty() ? "Z" : " + Z";
    }
    for (const auto& t : torsion) {
        out += (out.empty() ? "Z/" : " + Z/") + to_string(t);
    }
    return out.empty() ? "0" : out;
}

std::string join(const std::set<Integer>& values) {
    std::string out;
    for (const auto& v : values) {
        out += (out.empty() ? "" : ",") + to_string(v);
    }
    return "{" + out + "}";
}

HomologyFact parse_fact(const json& obj, const std::string& where) {
    HomologyFact fact;
    fact.statement = field(obj, "statement", where).get<std::string>();
    const auto kind = field(obj, "kind", where).get<std::string>();
    if (kind == "filling_homology") {
        FillingHomology h;
        h.filling = obj.value("filling", std::string("r"));
        h.free_rank = field(obj, "free_rank", where).get<int>();
        h.torsion = integer_list(field(obj, "torsion", where), where + ".torsion");
        fact.data = std::move(h);
    } else if (kind == "peripheral_quotient") {
        fact.data = PeripheralQuotient{integer_list(field(obj, "torsion", where), where + ".torsion")};
    } else if (kind == "s3_exterior_cited") {
        S3ExteriorCited s;
        for (const auto& item : field(obj, "forced_slopes", where)) {
            s.forced_slopes.push_back(Slope::parse(item.get<std::string>()));
        }
        if (s.forced_slopes.size() != 2) {
            throw std::invalid_argument(where + ": forced_slopes must list exactly two slopes");
        }
        fact.data = std::move(s);
    } else if (kind == "whitehead_filling") {
        fact.data = WhiteheadFilling{Slope::parse(field(obj, "coefficient", where).get<std::string>())};
    } else if (kind == "alexander") {
        fact.data = AlexanderFact{AlexanderPolynomial::from_json(field(obj, "polynomial", where).dump())};
    } else {
        throw std::invalid_argument(where + ": unknown homology fact kind '" + kind + "'");
    }
    return fact;
}

KnownFilling parse_filling(const json& obj, const std::string& where) {
    KnownFilling f{Slope::meridian(), "", "", std::nullopt, std::nullopt};
    f.written = field(obj, "slope", where).get<std::string>();
    f.slope = Slope::parse(f.written);
    f.kind = field(obj, "kind", where).get<std::string>();
    if (f.kind != "lens" && f.kind != "toroidal") {
        throw std::invalid_argument(where + ": unknown filling kind '" + f.kind + "'");
    }
    if (const auto it = obj.find("lens"); it != obj.end()) {
        if (!it->is_array() || it->size() != 2) {
            throw std::invalid_argument(where + ": lens must be [p, q]");
        }
        f.lens = LensSpace(json_integer((*it)[0], where), json_integer((*it)[1], where));
    }
    if (const auto it = obj.find("order"); it != obj.end()) {
        f.order = json_integer(*it, where + ".order");
    }
    if (f.kind == "lens" && !f.lens) {
        throw std::invalid_argument(where + ": lens filling without lens space");
    }
    return f;
}

// Distance groupings of the published classification.
std::optional<int> expected_distance(const std::string& id) {
    static const std::map<std::string, int> table = {
        {"M1", 4},  {"M2", 4},  {"M3", 5},  {"M4", 4},   {"M5", 5},   {"M6", 4},       {"M7", 5},
        {"M8", 5},  {"M9", 4},  {"M10", 5}, {"M11", 5},  {"M12", 5},  {"M13", 4},      {"M14", 4},
        {"W(2)", 6}, {"W(-5/2)", 7}, {"W(1)", 8}, {"W(-5)", 8},
    };
    const auto it = table.find(id);
    return it == table.end() ? std::nullopt : std::optional<int>(it->second);
}

void validate(const CensusRecord& r) {
    const std::string where = "census record " + r.id;
    if (r.boundary_tori != 1 && r.boundary_tori != 2) {
        throw std::invalid_argument(where + ": boundary_tori must be 1 or 2");
    }
    if (r.toroidal_pair_distance < 4 || r.toroidal_pair_distance > 8) {
        throw std::invalid_argument(where + ": toroidal_pair_distance must be in [4, 8]");
    }
    if (const auto d = expected_distance(r.id); d && *d != r.toroidal_pair_distance) {
        throw std::invalid_argument(where + ": toroidal pair distance " + std::to_string(r.toroidal_pair_distance) +
                                    " contradicts the classification (" + std::to_string(*d) + ")");
    }
    static const std::set<std::string> two_cusped = {"M1", "M2", "M3", "M14"};
    if (r.id.starts_with('M') && two_cusped.contains(r.id) != (r.boundary_tori == 2)) {
        throw std::invalid_argument(where + ": wrong number of boundary tori");
    }
    std::vector<Slope> toroidal;
    for (const auto& f : r.known_fillings) {
        if (f.lens && f.order && *f.order != f.lens->p()) {
            throw std::invalid_argument(where + ": order " + to_string(*f.order) + " of " + f.lens->to_string() +
                                        " does not match its p");
        }
        if (f.kind == "toroidal") {
            toroidal.push_back(f.slope);
        }
    }
    if (toroidal.size() == 2 && slope_distance(toroidal[0], toroidal[1]) != r.toroidal_pair_distance) {
        throw std::invalid_argument(where + ": toroidal fillings " + toroidal[0].to_string() + ", " +
                                    toroidal[1].to_string() + " are not at the recorded distance");
    }
}

}  // namespace

Census Census::from_json(std::string_view text) {
    const json doc = json::parse(text);
    const auto version = field(doc, "schema_version", "census").get<int>();
    if (version != kCensusSchemaVersion) {
        throw std::invalid_argument("unsupported census schema_version " + std::to_string(version));
    }
    Census census;
    std::set<std::string> seen;
    for (const auto& obj : field(doc, "records", "census")) {
        CensusRecord r;
        r.id = normalize_id(field(obj, "id", "census record").get<std::string>());
        const std::string where = "census record " + r.id;
        if (!seen.insert(r.id).second) {
            throw std::invalid_argument("duplicate census id " + r.id);
        }
        r.boundary_tori = field(obj, "boundary_tori", where).get<int>();
        r.toroidal_pair_distance = field(obj, "toroidal_pair_distance", where).get<int>();
        for (const auto& f : field(obj, "known_fillings", where)) {
            r.known_fillings.push_back(parse_filling(f, where));
        }
        for (const auto& h : field(obj, "homology_facts", where)) {
            r.homology_facts.push_back(parse_fact(h, where));
        }
        validate(r);
        census.records_.push_back(std::move(r));
    }
    return census;
}

Census Census::load_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument("cannot open census file " + path.string());
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    return from_json(buffer.str());
}

const Census& Census::builtin() {
    static const Census census = from_json(detail::kBuiltinCensusJson);
    return census;
}

const CensusRecord& Census::lookup(std::string_view id) const {
    const std::string key = normalize_id(id);
    const auto it = std::find_if(records_.begin(), records_.end(), [&](const auto& r) { return r.id == key; });
    if (it == records_.end()) {
        throw std::out_of_range("unknown census id '" + std::string(id) + "'");
    }
    return *it;
}

const CensusRecord& census_lookup(std::string_view id) { return Census::builtin().lookup(id); }

nlohmann::ordered_json to_json(const CensusRecord& record) {
    nlohmann::ordered_json out;
    out["id"] = record.id;
    out["boundary_tori"] = record.boundary_tori;
    out["toroidal_pair_distance"] = record.toroidal_pair_distance;
    out["known_fillings"] = nlohmann::ordered_json::array();
    for (const auto& f : record.known_fillings) {
        nlohmann::ordered_json j;
        j["slope"] = f.written;
        j["canonical_slope"] = f.slope.to_string();
        j["kind"] = f.kind;
        if (f.lens) {
            j["lens"] = f.lens->to_string();
        }
        if (f.order) {
            j["order"] = to_string(*f.order);
        }
        out["known_fillings"].push_back(std::move(j));
    }
    out["homology_facts"] = nlohmann::ordered_json::array();
    for (const auto& h : record.homology_facts) {
        nlohmann::ordered_json j;
        j["statement"] = h.statement;
        std::visit(
            [&](const auto& data) {
                using T = std::decay_t<decltype(data)>;
                if constexpr (std::is_same_v<T, FillingHomology>) {
                    j["kind"] = "filling_homology";
                    j["filling"] = data.filling;
                    j["free_rank"] = data.free_rank;
                    j["torsion"] = nlohmann::ordered_json::array();
                    for (const auto& t : data.torsion) {
                        j["torsion"].push_back(to_string(t));
                    }
                } else if constexpr (std::is_same_v<T, PeripheralQuotient>) {
                    j["kind"] = "peripheral_quotient";
                    j["torsion"] = nlohmann::ordered_json::array();
                    for (const auto& t : data.torsion) {
                        j["torsion"].push_back(to_string(t));
                    }
                } else if constexpr (std::is_same_v<T, S3ExteriorCited>) {
                    j["kind"] = "s3_exterior_cited";
                    j["forced_slopes"] = nlohmann::ordered_json::array();
                    for (const auto& s : data.forced_slopes) {
                        j["forced_slopes"].push_back(s.to_string());
                    }
                } else if constexpr (std::is_same_v<T, WhiteheadFilling>) {
                    j["kind"] = "whitehead_filling";
                    j["coefficient"] = data.coefficient.to_string();
                } else {
                    j["kind"] = "alexander";
                    nlohmann::ordered_json poly;
                    for (const auto& [k, a] : data.polynomial.coefficients()) {
                        poly[std::to_string(k)] = to_string(a);
                    }
                    j["polynomial"] = std::move(poly);
                }
            },
            h.data);
        out["homology_facts"].push_back(std::move(j));
    }
    return out;
}

std::set<Integer> admissible_orders(unsigned distance) {
    std::set<Integer> orders;
    for (unsigned p = 1; p <= distance; ++p) {
        if (distance % p != 0) {
            continue;
        }
        const Integer gap = distance / p;
        for (unsigned q = 0; q < p; ++q) {
            const Integer iq = q;
            const Integer iq2 = iq + gap;
            if (!parity_filter(p, iq, iq2).passed) {
                continue;
            }
            if (linking_congruence(p, iq, iq2).passed && cosmetic_dedekind_obstruction(p, iq, iq2).passed) {
                orders.insert(p);
                break;
            }
        }
    }
    return orders;
}

ExteriorVerdict zhs_exterior_filter(const CensusRecord& record) {
    ExteriorVerdict verdict;
    auto exclude = [&](std::string rule, std::string detail) {
        verdict.excluded = true;
        verdict.reasons.push_back({std::move(rule), std::move(detail)});
    };

    for (const auto& fact : record.homology_facts) {
        std::visit(
            [&](const auto& data) {
                using T = std::decay_t<decltype(data)>;
                if constexpr (std::is_same_v<T, FillingHomology>) {
                    const auto text = torsion_text(data.free_rank, data.torsion);
                    if (data.free_rank > 0) {
                        exclude("filling_homology", "H_1(" + record.id + "(" + data.filling + ")) = " + text +
                                                        " is infinite, but a filling p/q with p > 0 of a knot "
                                                        "exterior in a homology sphere has H_1 = Z/p");
                        return;
                    }
                    const auto nontrivial = std::count_if(data.torsion.begin(), data.torsion.end(),
                                                          [](const Integer& t) { return t > 1; });
                    if (nontrivial > 1) {
                        exclude("filling_homology", "H_1(" + record.id + "(" + data.filling + ")) = " + text +
                                                        " is not cyclic");
                    }
                } else if constexpr (std::is_same_v<T, PeripheralQuotient>) {
                    const bool torsion = std::any_of(data.torsion.begin(), data.torsion.end(),
                                                     [](const Integer& t) { return t > 1; });
                    if (torsion) {
                        exclude("peripheral_quotient", "H_1 of every filling of the second cusp surjects onto " +
                                                           torsion_text(0, data.torsion) +
                                                           ", so H_1(Y_K) != Z");
                    }
                } else if constexpr (std::is_same_v<T, S3ExteriorCited>) {
                    const Integer d = slope_distance(data.forced_slopes[0], data.forced_slopes[1]);
                    if (d != record.toroidal_pair_distance) {
                        exclude("s3_exterior_cited",
                                "H_1 = Z forces an S^3 knot exterior whose only candidate pair " +
                                    data.forced_slopes[0].to_string() + ", " + data.forced_slopes[1].to_string() +
                                    " has distance " + to_string(d) + " != " +
                                    std::to_string(record.toroidal_pair_distance) + " (cited, not computed)");
                    }
                } else if constexpr (std::is_same_v<T, WhiteheadFilling>) {
                    const auto admissible = admissible_orders(static_cast<unsigned>(record.toroidal_pair_distance));
                    // |H_1| = |w| * |a| for the second coefficient a/b (lk = 0).
                    const Integer w = link_surgery_h1({data.coefficient, Slope::parse("1"), 0});
                    std::set<Integer> reachable;
                    for (const auto& order : admissible) {
                        if (floor_mod(order, w) == 0 &&
                            link_surgery_h1({data.coefficient, Slope::parse(to_string(order / w)), 0}) == order) {
                            reachable.insert(order);
                        }
                    }
                    if (reachable.empty()) {
                        exclude("whitehead_homology",
                                "|H_1| = " + to_string(w) + "|a| for Whitehead surgery {" +
                                    data.coefficient.to_string() + ", a/b}, but a truly cosmetic pair at distance " +
                                    std::to_string(record.toroidal_pair_distance) + " needs |H_1| in " +
                                    join(admissible));
                    }
                } else {
                    const Integer delta2 = alexander_second_derivative_at_1(data.polynomial);
                    const auto v = alexander_obstruction(delta2);
                    if (!v.passed) {
                        exclude("alexander", *v.witness + " (" + fact.statement + ")");
                    }
                }
            },
            fact.data);
    }

    std::vector<const KnownFilling*> toroidal;
    const KnownFilling* shifted_lens = nullptr;
    for (const auto& f : record.known_fillings) {
        if (f.kind == "toroidal") {
            toroidal.push_back(&f);
        } else if (f.kind == "lens" && f.lens) {
            if (f.slope == Slope::meridian()) {
                if (f.lens->p() != 1) {
                    exclude("lens_torsion", record.id + "(1/0) = " + f.lens->to_string() + " has |H_1| = " +
                                                to_string(f.lens->p()) + ", so |Tor H_1(Y_K)| != 1");
                }
            } else {
                shifted_lens = &f;
            }
        }
    }

    if (shifted_lens != nullptr && toroidal.size() == 2) {
        const Integer order = shifted_lens->lens->p();
        const auto shifts = solve_framing_shift(order, shifted_lens->slope);
        std::string detail = record.id + "(" + shifted_lens->written + ") = " + shifted_lens->lens->to_string() +
                             " gives framing shifts " + join(shifts) + ";";
        bool any_match = false;
        for (const auto& shift : shifts) {
            const WatsonData w{1, FramingShift{shift}};
            const Integer o1 = h1_order_watson(w, toroidal[0]->slope);
            const Integer o2 = h1_order_watson(w, toroidal[1]->slope);
            detail += " shift " + to_string(shift) + ": |H_1(" + record.id + "(" + toroidal[0]->written +
                      "))| = " + to_string(o1) + ", |H_1(" + record.id + "(" + toroidal[1]->written +
                      "))| = " + to_string(o2) + ";";
            any_match = any_match || o1 == o2;
        }
        if (!any_match) {
            exclude("framing_shift", detail + " the toroidal fillings never have equal homology");
        }
    }
    return verdict;
}

}  // namespace cosmetic
