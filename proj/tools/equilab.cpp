#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "equilab/catalog.hpp"
#include "equilab/gallery.hpp"
#include "equilab/report.hpp"
#include "equilab/transforms.hpp"

using namespace equilab;

namespace {

constexpr int kExitViolations = 1;
constexpr int kExitInput = 2;
constexpr int kExitBudget = 3;

Graph load_graph(const std::string& input) {
    if (input.rfind("gallery:", 0) == 0) return generate(std::string_view(input).substr(8));
    if (input == "-") return parse_edge_list(std::cin);
    std::ifstream in(input);
    if (!in) throw InputError("cannot open \"" + input + "\"");
    return parse_edge_list(in);
}

std::vector<std::string> split_labels(const std::string& text) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ',')) {
        if (item.empty()) throw InputError("empty label in target list");
        out.push_back(item);
    }
    return out;
}

Json envelope(const std::string& input) {
    Json j;
    j["schema"] = kReportSchema;
    j["tool"] = "equilab";
    j["version"] = std::string(kToolVersion);
    j["input"] = input;
    return j;
}

struct Common {
    std::string input;
    bool json = true;
    bool text = false;
    std::uint64_t budget = kDefaultEnumerationBudget;
    std::uint64_t seed = 0;
};

int run_analyze(const Common& c, bool with_co_line, bool strong, int exhaustive_ground, int strong_ground) {
    const Graph g = load_graph(c.input);
    AnalyzeOptions options;
    options.enumeration_budget = c.budget;
    options.exhaustive_ground = exhaustive_ground;
    options.strong_ground = strong_ground;
    options.seed = c.seed;
    options.with_co_line = with_co_line;
    options.strong = strong;
    options.source = c.input;
    const auto report = analyze(g, options);
    if (c.text) std::cout << report_text(report.json);
    else std::cout << report.json.dump(2) << "\n";
    return report.budget_exhausted ? kExitBudget : 0;
}

int run_certify(const Common& c, const std::string& target_text, const std::string& system) {
    const Graph g = load_graph(c.input);
    SetSystem s;
    if (system == "stars") {
        s = star_system(g);
    } else {
        auto stable = stable_system(g, c.budget);
        if (auto* b = std::get_if<BudgetNote>(&stable)) {
            std::cerr << "equilab: budget exhausted: " << b->what << "\n";
            return kExitBudget;
        }
        s = std::get<SetSystem>(std::move(stable));
    }
    Subset target;
    for (const auto& label : split_labels(target_text)) {
        const auto idx = s.find_element(label);
        if (!idx) throw InputError("unknown element \"" + label + "\"");
        target.push_back(*idx);
    }
    std::sort(target.begin(), target.end());
    target.erase(std::unique(target.begin(), target.end()), target.end());

    Json j = envelope(c.input);
    j["system"] = system;
    std::string summary;
    const auto space = solve_unit_system(s);
    if (const auto* inf = std::get_if<UnitInfeasibility>(&space)) {
        j["result"] = equi_witness_json(s, EquiWitness{*inf});
        summary = "unit system infeasible; every total is vacuously forced";
    } else {
        const auto r = forced_value(s, std::get<AffineSolutionSpace>(space), target);
        if (const auto* cert = std::get_if<ForcedValueCertificate>(&r)) {
            j["result"] = certificate_json(s, *cert);
            summary = "forced value " + cert->value.get_num().get_str() + "/" + cert->value.get_den().get_str();
        } else {
            j["result"] = not_forced_json(s, std::get<NotForced>(r));
            summary = "not forced";
        }
    }
    if (c.text) std::cout << summary << "\n";
    else std::cout << j.dump(2) << "\n";
    return 0;
}

int run_gallery(const std::string& descriptor, const std::string& output) {
    const Graph g = generate(descriptor);
    const auto text = to_edge_list(g);
    if (output.empty() || output == "-") {
        std::cout << text;
        return 0;
    }
    std::ofstream out(output);
    if (!out) throw InputError("cannot write \"" + output + "\"");
    out << text;
    return 0;
}

// Expected rows (general partition, strong, equi, P5/triangle) for the
// named gallery graphs; both sides of each row must match.
struct GalleryExpectation {
    const char* descriptor;
    std::array<Answer, 4> rows;
};

constexpr Answer Y = Answer::yes;
constexpr Answer N = Answer::no;

const GalleryExpectation kGalleryMatrix[] = {
    {"graph_H", {N, N, Y, Y}},
    {"cycle(4)", {Y, Y, Y, Y}},
    {"cycle(6)", {N, N, N, N}},
    {"path(5)", {N, N, N, N}},
    {"complete_bipartite(3,3)", {Y, Y, Y, Y}},
    {"complete_bipartite(4,3)", {N, N, N, Y}},
    {"kmn_plus(2,3)", {N, N, N, Y}},
};

Json graph_json(const Graph& g) {
    Json edges = Json::array();
    for (EdgeId e = 0; e < g.edge_count(); ++e) edges.push_back(g.edge_label(e));
    return edges;
}

struct RowTally {
    int yes = 0, no = 0, unknown = 0;
    void add(Answer a) { (a == Answer::yes ? yes : a == Answer::no ? no : unknown)++; }
};

int run_crosscheck(const Common& c, int max_n, int samples, bool gallery, int strong_ground) {
    Table1Budgets budgets;
    budgets.enumeration = c.budget;
    budgets.seed = c.seed;
    budgets.strong_ground = strong_ground;
    std::vector<std::pair<std::string, Graph>> graphs;
    if (gallery) {
        for (const auto& e : kGalleryMatrix) graphs.emplace_back(e.descriptor, generate(e.descriptor));
    } else {
        if (max_n < 2 || max_n > 9) throw InputError("--max-n must lie in 2..9");
        for (auto& g : connected_graphs_up_to(max_n, GraphClass::triangle_free, 2)) graphs.emplace_back("", std::move(g));
        std::mt19937_64 rng(c.seed);
        for (int i = 0; i < samples; ++i) {
            std::uniform_int_distribution<int> size(std::max(max_n + 1, 3), std::max(max_n + 3, 3));
            graphs.emplace_back("sample", random_triangle_free(size(rng), 12, rng));
        }
    }

    Json j = envelope(gallery ? "gallery" : "catalog");
    if (!gallery) {
        j["max_n"] = max_n;
        j["samples"] = samples;
    }
    j["seed"] = c.seed;
    std::array<RowTally, 4> left, right;
    const std::array<std::string, 4> names{"general_partition", "strong", "equi", "p5_triangle"};
    Json violations = Json::array();
    Json matrix = Json::array();
    int partial = 0;
    std::size_t index = 0;
    for (const auto& [name, g] : graphs) {
        const auto r = crosscheck_table1(g, budgets);
        if (r.partial) ++partial;
        std::vector<std::string> messages = r.violations;
        for (std::size_t i = 0; i < 4; ++i) {
            left[i].add(r.rows[i].left);
            right[i].add(r.rows[i].right);
        }
        if (gallery) {
            const auto& expected = kGalleryMatrix[index].rows;
            Json rows;
            for (std::size_t i = 0; i < 4; ++i) {
                rows[r.rows[i].name] = Json::array({std::string(to_string(r.rows[i].left)), std::string(to_string(r.rows[i].right))});
                if (r.rows[i].left != expected[i] || r.rows[i].right != expected[i]) {
                    messages.push_back("row " + std::to_string(i + 1) + " (" + r.rows[i].name + "): expected " +
                                       std::string(to_string(expected[i])));
                }
            }
            matrix.push_back(Json{{"graph", name}, {"rows", std::move(rows)}});
        }
        if (!messages.empty()) violations.push_back(Json{{"graph", name.empty() ? "catalog" : name}, {"edges", graph_json(g)}, {"messages", messages}});
        ++index;
    }
    j["graphs"] = graphs.size();
    j["partial"] = partial;
    Json rows = Json::array();
    for (std::size_t i = 0; i < 4; ++i) {
        auto tally = [](const RowTally& t) { return Json{{"yes", t.yes}, {"no", t.no}, {"unknown", t.unknown}}; };
        rows.push_back(Json{{"row", i + 1}, {"name", names[i]}, {"left", tally(left[i])}, {"right", tally(right[i])}});
    }
    j["rows"] = std::move(rows);
    if (gallery) j["matrix"] = std::move(matrix);
    j["violation_count"] = violations.size();
    j["violations"] = std::move(violations);

    if (c.text) {
        std::cout << "graphs checked: " << graphs.size() << "\n";
        for (std::size_t i = 0; i < 4; ++i) {
            std::cout << "row " << i + 1 << ": left yes/no/unknown " << left[i].yes << "/" << left[i].no << "/" << left[i].unknown
                      << ", right " << right[i].yes << "/" << right[i].no << "/" << right[i].unknown << "\n";
        }
        if (partial > 0) std::cout << "partial (budget): " << partial << "\n";
        std::cout << "violations: " << j["violation_count"] << "\n";
        for (const auto& v : j["violations"])
            for (const auto& m : v["messages"]) std::cout << "  " << v["graph"].get<std::string>() << ": " << m.get<std::string>() << "\n";
    } else {
        std::cout << j.dump(2) << "\n";
    }
    if (!j["violations"].empty()) return kExitViolations;
    return partial > 0 ? kExitBudget : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Equistarable and equistable graph property laboratory"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(kToolVersion));

    Common c;
    auto add_common = [&](CLI::App* sub, bool input) {
        if (input) sub->add_option("input", c.input, "edge-list file, - for stdin, or gallery:<descriptor>")->required();
        auto* json = sub->add_flag("--json", c.json, "JSON output (default)");
        sub->add_flag("--text", c.text, "human-readable output")->excludes(json);
        sub->add_option("--budget", c.budget, "enumeration step budget")->capture_default_str();
        sub->add_option("--seed", c.seed, "seed for randomized search")->capture_default_str();
    };

    auto* analyze_cmd = app.add_subcommand("analyze", "run the property panel on a graph");
    add_common(analyze_cmd, true);
    bool with_co_line = false, strong = false;
    int exhaustive_ground = kDefaultExhaustiveGround, strong_ground = kDefaultStrongGround;
    analyze_cmd->add_flag("--with-co-line", with_co_line, "also evaluate co-line graph properties");
    analyze_cmd->add_flag("--strong", strong, "also decide strong equistarability");
    analyze_cmd->add_option("--max-ground", exhaustive_ground, "largest ground set for exhaustive subset scans")->capture_default_str();
    analyze_cmd->add_option("--strong-ground", strong_ground, "largest ground set for the strong check")->capture_default_str();

    auto* certify_cmd = app.add_subcommand("certify", "certify or refute a forced total on a target subset");
    add_common(certify_cmd, true);
    std::string target, system = "stars";
    certify_cmd->add_option("--target", target, "comma-separated element labels")->required();
    certify_cmd->add_option("--system", system, "stars (edge labels) or stable (vertex labels)")
        ->check(CLI::IsMember({"stars", "stable"}))
        ->capture_default_str();

    auto* gallery_cmd = app.add_subcommand("gallery", "write a gallery graph as an edge list");
    std::string descriptor, output;
    gallery_cmd->add_option("descriptor", descriptor, "family descriptor, e.g. cycle(5)")->required();
    gallery_cmd->add_option("-o,--output", output, "output path (default stdout)");

    auto* crosscheck_cmd = app.add_subcommand("crosscheck", "compare both sides of every row of the equivalence table");
    add_common(crosscheck_cmd, false);
    int max_n = 6, samples = 0;
    bool use_gallery = false;
    crosscheck_cmd->add_option("--max-n", max_n, "largest vertex count for the exhaustive catalog")->capture_default_str();
    crosscheck_cmd->add_option("--samples", samples, "random triangle-free samples beyond max-n")->capture_default_str();
    crosscheck_cmd->add_flag("--gallery", use_gallery, "check the named gallery graphs against their expected verdicts");
    crosscheck_cmd->add_option("--strong-ground", strong_ground, "largest ground set for the strong check")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInput;
    }

    try {
        if (*analyze_cmd) return run_analyze(c, with_co_line, strong, exhaustive_ground, strong_ground);
        if (*certify_cmd) return run_certify(c, target, system);
        if (*gallery_cmd) return run_gallery(descriptor, output);
        return run_crosscheck(c, max_n, samples, use_gallery, strong_ground);
    } catch (const InputError& e) {
        std::cerr << "equilab: " << e.what() << "\n";
        return kExitInput;
    }
}
