#include <doctest.h>

#include "equilab/catalog.hpp"
#include "equilab/gallery.hpp"
#include "equilab/report.hpp"
#include "equilab/transforms.hpp"

using namespace equilab;

namespace {

AnalyzeOptions full() {
    AnalyzeOptions o;
    o.with_co_line = true;
    o.strong = true;
    o.source = "test";
    return o;
}

}  // namespace

TEST_CASE("rationals survive serialization") {
    const Rational small(-3, 7);
    CHECK(rational_json(small) == Json{{"num", -3}, {"den", 7}});
    CHECK(rational_from_json(rational_json(small)) == small);
    Rational big(Integer("123456789012345678901234567890"), Integer("7"));
    big.canonicalize();
    const Json j = rational_json(big);
    CHECK(j["num"].is_string());
    CHECK(rational_from_json(j) == big);
    CHECK_THROWS_AS(rational_from_json(Json{{"num", 1}, {"den", 0}}), InputError);
    CHECK_THROWS_AS(rational_from_json(Json{{"num", "1x"}, {"den", 1}}), InputError);
}

TEST_CASE("certificates round-trip") {
    const auto s = star_system(generate("cycle(6)"));
    const Subset t{*s.find_element("1-2"), *s.find_element("4-5")};
    const auto cert = std::get<ForcedValueCertificate>(forced_value(s, t));
    const Json j = certificate_json(s, cert);
    CHECK(j["type"] == "forced_value");
    CHECK(j["value"] == Json{{"num", 1}, {"den", 1}});
    const auto back = certificate_from_json(s, j);
    CHECK(back.valid_for(s));
    CHECK(back.value == cert.value);
    CHECK(back.target == cert.target);

    Json tampered = j;
    tampered["value"] = rational_json(Rational(2));
    CHECK_FALSE(certificate_from_json(s, tampered).valid_for(s));

    const auto c4 = star_system(generate("cycle(4)"));
    const Subset opposite{*c4.find_element("1-2"), *c4.find_element("3-4")};
    const auto nf = std::get<NotForced>(forced_value(c4, opposite));
    CHECK(not_forced_from_json(c4, not_forced_json(c4, nf)).valid_for(c4));
    CHECK_THROWS_AS(certificate_from_json(s, Json{{"type", "forced_value"}, {"target", {"9-9"}}, {"coefficients", Json::array()}, {"value", rational_json(1)}}),
                    InputError);
}

TEST_CASE("analyze reports re-validate and are deterministic") {
    for (const char* d : {"complete_bipartite(4,3)", "cycle(4)", "cycle(6)", "petersen", "kmn_plus(2,3)", "graph_H", "path(5)",
                          "disjoint_union(cycle(4),star(3))"}) {
        CAPTURE(d);
        const Graph g = generate(d);
        const auto a = analyze(g, full());
        const auto b = analyze(g, full());
        CHECK(a.json.dump() == b.json.dump());
        CHECK(revalidate_report(a.json, g));
        CHECK(revalidate_report(Json::parse(a.json.dump()), g));
        CHECK_FALSE(report_text(a.json).empty());
    }
    for (const auto& g : connected_graphs_up_to(6, GraphClass::triangle_free, 2)) CHECK(revalidate_report(analyze(g, full()).json, g));
}

TEST_CASE("report contents") {
    const auto k43 = analyze(generate("complete_bipartite(4,3)"), full()).json;
    CHECK(k43["schema"] == 1);
    CHECK(k43["properties"]["p5_constrained"]["answer"] == "yes");
    CHECK(k43["properties"]["equistarable"]["answer"] == "no");
    CHECK(k43["properties"]["equistarable"]["witness"]["type"] == "unit_infeasibility");

    const auto c4 = analyze(generate("cycle(4)"), {}).json;
    CHECK(c4["properties"]["equistarable"]["answer"] == "yes");
    CHECK(c4["properties"]["equistarable"]["witness"]["type"] == "weighting");
    CHECK_FALSE(c4["properties"].contains("co_line"));

    const auto pet = analyze(generate("petersen"), full()).json;
    CHECK(pet["properties"]["equistarable"]["witness"]["type"] == "forced_value");
    CHECK(pet["properties"]["equistarable"]["witness"]["value"] == Json{{"num", 1}, {"den", 1}});

    AnalyzeOptions tight = full();
    tight.exhaustive_ground = 8;
    const auto budget = analyze(generate("petersen"), tight);
    CHECK(budget.budget_exhausted);
    CHECK(budget.json["properties"]["equistarable"]["witness"]["type"] == "budget");
    CHECK(revalidate_report(budget.json, generate("petersen")));
}

TEST_CASE("tampered reports are rejected") {
    const Graph g = generate("cycle(4)");
    auto j = analyze(g, full()).json;
    j["properties"]["equistarable"]["witness"]["weights"][0]["num"] = 5;
    CHECK_FALSE(revalidate_report(j, g));

    const Graph c6 = generate("cycle(6)");
    auto k = analyze(c6, full()).json;
    k["properties"]["equistarable"]["answer"] = "yes";
    CHECK_FALSE(revalidate_report(k, c6));

    CHECK_THROWS_AS(analyze(parse_edge_list("v x\na b"), full()), InputError);
}

TEST_CASE("equivalence table report serialization") {
    const auto j = table1_json(crosscheck_table1(generate("graph_H")));
    CHECK(j["rows"].size() == 4);
    CHECK(j["rows"][2]["left"] == "yes");
    CHECK(j["violations"].empty());
}
