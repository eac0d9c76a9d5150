// Command-line front end.
//
// Exit codes: 0 success, 1 bad input, 2 internal cross-check failure.

#include "cosmetic/census.hpp"
#include "cosmetic/dedekind.hpp"
#include "cosmetic/engine.hpp"
#include "cosmetic/homology.hpp"
#include "cosmetic/invariants.hpp"
#include "cosmetic/obstructions.hpp"
#include "cosmetic/report.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

using namespace cosmetic;

namespace {

constexpr int kExitBadInput = 1;
constexpr int kExitCrossCheck = 2;

// Direct Dedekind sums are O(p); above this the CLI skips the cross-check.
const Integer kDirectCheckLimit = 100000;

struct CrossCheckFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Range {
    Integer lo;
    Integer hi;
};

// "a..b" or a single value "a".
Range parse_range(const std::string& text) {
    const auto dots = text.find("..");
    if (dots == std::string::npos) {
        const Integer v = parse_integer(text);
        return {v, v};
    }
    return {parse_integer(text.substr(0, dots)), parse_integer(text.substr(dots + 2))};
}

std::uint64_t to_u64(const Integer& v, const char* what) {
    if (v < 0 || !v.fits_ulong_p()) {
        throw std::invalid_argument(std::string(what) + " out of range: " + to_string(v));
    }
    return v.get_ui();
}

void write_output(const std::string& text, const std::string& path) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::invalid_argument("cannot write " + path);
    }
    out << text;
}

void require_consistent(const std::vector<std::string>& problems) {
    if (problems.empty()) {
        return;
    }
    std::string message = "cross-check failed:";
    for (const auto& p : problems) {
        message += "\n  " + p;
    }
    throw CrossCheckFailure(message);
}

void print_verdict(const ObstructionVerdict& v) {
    std::cout << v.filter_name << ": " << (v.passed ? "pass" : "fail");
    if (v.witness) {
        std::cout << " (" << *v.witness << ")";
    }
    std::cout << '\n';
}

// Holds the option values for every subcommand.
struct Options {
    std::string census_file;

    std::string dedekind_q, dedekind_p;

    std::string lens_p, lens_q;
    std::string lambda_y = "0", delta2, surgery_slope;
    std::string alexander_json;

    std::uint64_t congruence_p = 0;
    std::string congruence_q, congruence_q2;

    std::string watson_c = "1", watson_shift = "0", watson_slope;
    std::string link_f1, link_f2, link_lk = "0";

    std::string census_id;
    bool census_all = false;

    std::uint64_t classify_p = 0;
    bool no_distance_filter = false;
    std::uint64_t max_gap = kExceptionalDistanceBound;

    std::string format = "json";
    std::string theorem_format = "markdown";

    std::string enum_p = "1..8", enum_q = "1..1000", filters = "all", output;
    unsigned jobs = 1;
};

const Census& active_census(const Options& o, std::optional<Census>& loaded) {
    if (o.census_file.empty()) {
        return Census::builtin();
    }
    if (!loaded) {
        loaded = Census::load_file(o.census_file);
    }
    return *loaded;
}

void cmd_dedekind(const Options& o) {
    const Integer q = parse_integer(o.dedekind_q);
    const Integer p = parse_integer(o.dedekind_p);
    const Rational fast = dedekind_sum_fast(q, p);
    if (abs(p) <= kDirectCheckLimit) {
        const Rational direct = dedekind_sum_direct(q, p);
        if (direct != fast) {
            throw CrossCheckFailure("Dedekind sums disagree: reciprocity " + fast.to_string() + ", direct " +
                                    direct.to_string());
        }
    }
    std::cout << fast << '\n';
}

void cmd_casson_lens(const Options& o) {
    const LensSpace lens(parse_integer(o.lens_p), parse_integer(o.lens_q));
    std::cout << "lambda(" << lens.to_string() << ") = " << casson_lens(lens) << '\n';
}

void cmd_casson_surgery(const Options& o) {
    const SurgeryCassonInput in{Rational::parse(o.lambda_y), parse_integer(o.delta2), Slope::parse(o.surgery_slope)};
    std::cout << "lambda(Y_K(" << in.slope.to_string() << ")) = " << casson_surgery(in) << '\n';
}

void cmd_casson_alexander(const Options& o) {
    const auto poly = AlexanderPolynomial::from_json(o.alexander_json);
    const Integer d2 = alexander_second_derivative_at_1(poly);
    std::cout << "Delta''(1) = " << d2 << '\n';
    print_verdict(alexander_obstruction(d2));
}

void cmd_congruence(const Options& o) {
    const auto v = linking_congruence(o.congruence_p, parse_integer(o.congruence_q), parse_integer(o.congruence_q2));
    print_verdict(v);
}

void cmd_watson(const Options& o) {
    const WatsonData data{parse_integer(o.watson_c), FramingShift{parse_integer(o.watson_shift)}};
    const Slope s = Slope::parse(o.watson_slope);
    std::cout << "|H_1(M(" << s.to_string() << "))| = " << h1_order_watson(data, s) << '\n';
}

void cmd_link(const Options& o) {
    const LinkSurgeryData data{Slope::parse(o.link_f1), Slope::parse(o.link_f2), parse_integer(o.link_lk)};
    if (data.linking_number != 0) {
        std::cerr << "warning: nonzero linking number uses an extrapolated linking matrix\n";
    }
    std::cout << "|H_1| = " << link_surgery_h1(data) << '\n';
}

nlohmann::ordered_json verdict_json(const CensusRecord& r) {
    const auto v = zhs_exterior_filter(r);
    nlohmann::ordered_json j;
    j["id"] = r.id;
    j["excluded"] = v.excluded;
    j["reasons"] = nlohmann::ordered_json::array();
    for (const auto& reason : v.reasons) {
        j["reasons"].push_back({{"rule", reason.rule}, {"detail", reason.detail}});
    }
    return j;
}

void cmd_census_show(const Options& o, const Census& census) {
    std::cout << to_json(census.lookup(o.census_id)).dump(2) << '\n';
}

void cmd_census_filter(const Options& o, const Census& census) {
    nlohmann::ordered_json doc;
    doc["schema_version"] = kReportSchemaVersion;
    doc["kind"] = "census_exclusion";
    doc["records"] = nlohmann::ordered_json::array();
    if (o.census_all || o.census_id.empty()) {
        for (const auto& r : census.records()) {
            doc["records"].push_back(verdict_json(r));
        }
    } else {
        doc["records"].push_back(verdict_json(census.lookup(o.census_id)));
    }
    std::cout << doc.dump(2) << '\n';
}

void cmd_classify(const Options& o) {
    ClassifyOptions options;
    options.distance_filter = !o.no_distance_filter;
    options.max_gap = o.max_gap;
    const auto families = classify_candidates(o.classify_p, options);
    require_consistent(cross_check(families));
    std::cout << emit_report(std::span<const CandidateFamily>(families), parse_report_format(o.format));
}

void cmd_replicate(const Options& o) {
    const auto format = parse_report_format(o.theorem_format);
    for (std::uint64_t p = 1; p <= kExceptionalDistanceBound; ++p) {
        require_consistent(cross_check(classify_candidates(p)));
    }
    std::cout << emit_report(replicate_theorem(), format);
}

void cmd_enumerate(const Options& o) {
    EnumerationRequest request;
    const Range p = parse_range(o.enum_p);
    const Range q = parse_range(o.enum_q);
    request.p_min = to_u64(p.lo, "p");
    request.p_max = to_u64(p.hi, "p");
    request.q_min = q.lo;
    request.q_max = q.hi;
    request.filters = FilterSet::parse(o.filters);
    request.max_gap = o.max_gap;
    request.jobs = o.jobs;
    const auto format = parse_report_format(o.format);
    const auto pairs = enumerate_pairs(request);
    write_output(emit_report(std::span<const PairResult>(pairs), request.filters, format), o.output);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Arithmetic obstructions to exceptional truly cosmetic surgeries"};
    app.require_subcommand(1);
    Options o;
    app.add_option("--census-file", o.census_file, "Census JSON replacing the built-in one")->check(CLI::ExistingFile);

    std::function<void()> action;
    std::optional<Census> loaded;

    auto* ded = app.add_subcommand("dedekind", "Exact Dedekind sum s(q, p)");
    ded->add_option("q", o.dedekind_q)->required();
    ded->add_option("p", o.dedekind_p)->required();
    ded->callback([&] { action = [&] { cmd_dedekind(o); }; });

    auto* casson = app.add_subcommand("casson", "Casson invariants");
    casson->require_subcommand(1);
    auto* lens = casson->add_subcommand("lens", "lambda(L(p, q)) = -s(q, p) / 2");
    lens->add_option("p", o.lens_p)->required();
    lens->add_option("q", o.lens_q)->required();
    lens->callback([&] { action = [&] { cmd_casson_lens(o); }; });
    auto* surgery = casson->add_subcommand("surgery", "lambda of p/q surgery on a knot in a homology sphere");
    surgery->add_option("--lambda-y", o.lambda_y, "Casson invariant of the ambient sphere")->capture_default_str();
    surgery->add_option("--delta2", o.delta2, "Delta''_K(1)")->required();
    surgery->add_option("slope", o.surgery_slope, "p/q with p > 0")->required();
    surgery->callback([&] { action = [&] { cmd_casson_surgery(o); }; });
    auto* alex = casson->add_subcommand("alexander", "Delta''(1) of an Alexander polynomial given as JSON");
    alex->add_option("polynomial", o.alexander_json, R"(e.g. {"-1":1,"0":-3,"1":1})")->required();
    alex->callback([&] { action = [&] { cmd_casson_alexander(o); }; });

    auto* cong = app.add_subcommand("congruence", "Linking form congruence q = q' u^2 (mod p)");
    cong->add_option("p", o.congruence_p)->required()->check(CLI::PositiveNumber);
    cong->add_option("q", o.congruence_q)->required();
    cong->add_option("q2", o.congruence_q2, "q'")->required();
    cong->callback([&] { action = [&] { cmd_congruence(o); }; });

    auto* homology = app.add_subcommand("homology", "First homology orders of fillings");
    homology->require_subcommand(1);
    auto* watson = homology->add_subcommand("watson", "|H_1(M(s))| = c_M * Delta(s, lambda_M)");
    watson->add_option("--c-m", o.watson_c, "c_M")->capture_default_str();
    watson->add_option("--shift", o.watson_shift, "framing shift to the rational longitude")->capture_default_str();
    watson->add_option("slope", o.watson_slope)->required();
    watson->callback([&] { action = [&] { cmd_watson(o); }; });
    auto* link = homology->add_subcommand("link", "Surgery on a two-component link");
    link->add_option("--framing1", o.link_f1)->required();
    link->add_option("--framing2", o.link_f2)->required();
    link->add_option("--lk", o.link_lk, "linking number")->capture_default_str();
    link->callback([&] { action = [&] { cmd_link(o); }; });

    auto* census = app.add_subcommand("census", "Census records");
    census->require_subcommand(1);
    auto* show = census->add_subcommand("show", "Print a record");
    show->add_option("id", o.census_id)->required();
    show->callback([&] { action = [&] { cmd_census_show(o, active_census(o, loaded)); }; });
    auto* filter = census->add_subcommand("filter", "Run the homology-sphere exterior filter");
    filter->add_option("id", o.census_id, "record id; every record if omitted");
    filter->add_flag("--all", o.census_all);
    filter->callback([&] { action = [&] { cmd_census_filter(o, active_census(o, loaded)); }; });

    auto* classify = app.add_subcommand("classify", "Candidate families for one numerator p");
    classify->add_option("--p", o.classify_p)->required()->check(CLI::PositiveNumber);
    classify->add_option("--format", o.format)->capture_default_str();
    classify->add_flag("--no-distance-filter", o.no_distance_filter, "explore beyond the exceptional bound");
    classify->add_option("--max-gap", o.max_gap, "largest q' - q without the distance filter")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    classify->callback([&] { action = [&] { cmd_classify(o); }; });

    auto* theorem = app.add_subcommand("replicate-theorem", "Classification table by geometry");
    theorem->add_option("--format", o.theorem_format)->capture_default_str();
    theorem->callback([&] { action = [&] { cmd_replicate(o); }; });

    auto* enumerate = app.add_subcommand("enumerate", "Concrete slope pairs through the filters");
    enumerate->add_option("--p", o.enum_p, "range a..b")->capture_default_str();
    enumerate->add_option("--q", o.enum_q, "range a..b")->capture_default_str();
    enumerate->add_option("--filters", o.filters, "all or congruence,dedekind,distance")->capture_default_str();
    enumerate->add_option("--max-gap", o.max_gap)->capture_default_str()->check(CLI::PositiveNumber);
    enumerate->add_option("--jobs", o.jobs)->capture_default_str()->check(CLI::PositiveNumber);
    enumerate->add_option("--format", o.format)->capture_default_str();
    enumerate->add_option("--output", o.output, "file; stdout if omitted");
    enumerate->callback([&] { action = [&] { cmd_enumerate(o); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        action();
    } catch (const CrossCheckFailure& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitCrossCheck;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitBadInput;
    }
    return 0;
}
