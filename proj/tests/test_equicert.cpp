#include <doctest.h>

#include <random>

#include "equilab/catalog.hpp"
#include "equilab/equicert.hpp"
#include "equilab/gallery.hpp"
#include "equilab/lp.hpp"
#include "equilab/linalg.hpp"
#include "equilab/recognizers.hpp"
#include "equilab/transforms.hpp"
#include "oracles.hpp"

using namespace equilab;

namespace {

Subset elements(const SetSystem& s, std::initializer_list<const char*> names) {
    Subset out;
    for (const char* n : names) out.push_back(*s.find_element(n));
    std::sort(out.begin(), out.end());
    return out;
}

RationalVector rv(std::initializer_list<Rational> xs) { return RationalVector(xs); }

SetSystem stable(const Graph& g) { return std::get<SetSystem>(stable_system(g)); }

// Random point of the affine solution space.
RationalVector sample(const AffineSolutionSpace& space, std::mt19937_64& rng) {
    RationalVector x = space.particular.weights;
    std::uniform_int_distribution<int> coef(-9, 9);
    for (const auto& k : space.kernel_basis) {
        const Rational c = make_rational(coef(rng), 7);
        for (std::size_t i = 0; i < x.size(); ++i) x[i] += c * k[i];
    }
    return x;
}

Rational total(const RationalVector& x, const Subset& t) {
    Rational s = 0;
    for (int i : t) s += x[i];
    return s;
}

}  // namespace

TEST_CASE("exact linear programs") {
    LinearProgram a;  // min x, x - s = 3
    a.equalities = {rv({1, -1})};
    a.rhs = rv({3});
    a.nonnegative = {true, true};
    a.objective = rv({1, 0});
    const auto ra = std::get<LpOptimal>(lp_optimize(a));
    CHECK(ra.value == 3);
    CHECK(a.feasible(ra.x));

    LinearProgram b;
    b.equalities = {};
    b.rhs = {};
    b.nonnegative = {true};
    b.objective = rv({1});
    b.sense = Sense::maximize;
    CHECK(std::holds_alternative<LpUnbounded>(lp_optimize(b)));

    LinearProgram c;  // max t : a + b = 1, a - t - s1 = 0, b - t - s2 = 0
    c.equalities = {rv({1, 1, 0, 0, 0}), rv({1, 0, -1, -1, 0}), rv({0, 1, -1, 0, -1})};
    c.rhs = rv({1, 0, 0});
    c.nonnegative = {true, true, false, true, true};
    c.objective = rv({0, 0, 1, 0, 0});
    c.sense = Sense::maximize;
    CHECK(std::get<LpOptimal>(lp_optimize(c)).value == Rational(1, 2));

    LinearProgram d;  // x = -1, x >= 0
    d.equalities = {rv({1})};
    d.rhs = rv({-1});
    d.nonnegative = {true};
    d.objective = rv({0});
    CHECK(std::holds_alternative<LpInfeasible>(lp_optimize(d)));
}

TEST_CASE("exact elimination") {
    const RationalMatrix m{rv({1, 1, 0, 0}), rv({0, 1, 1, 0}), rv({0, 0, 1, 1}), rv({1, 0, 0, 1})};
    const auto k = kernel_basis(m, 4);
    REQUIRE(k.size() == 1);
    for (const auto& row : m) CHECK(dot(row, k[0]) == 0);
    const auto inc = solve_affine({rv({1, 1}), rv({1, 1})}, rv({1, 2}), 2);
    const auto& proof = std::get<InconsistentSystem>(inc);
    CHECK(proof.residual != 0);
    CHECK(proof.multipliers[0] + proof.multipliers[1] == 0);
}

TEST_CASE("star systems") {
    const auto k2 = star_system(generate("complete(2)"));
    CHECK(k2.ground_size == 1);
    CHECK(k2.family == std::vector<Subset>{{0}});
    const auto k13 = star_system(generate("star(3)"));
    CHECK(k13.family == std::vector<Subset>{{0, 1, 2}});
    const auto k23p = star_system(generate("kmn_plus(2,3)"));
    CHECK(k23p.ground_size == 9);
    CHECK(k23p.family.size() == 5);
    CHECK_THROWS_AS(star_system(parse_edge_list("v z\na b")), InputError);

    for (const auto& g : connected_graphs_up_to(6, GraphClass::any, 2)) {
        const auto s = star_system(g);
        CHECK(s.well_formed());
        auto fam = s.family;
        std::sort(fam.begin(), fam.end());
        CHECK(fam == oracle::maximal_stars(g));
    }
}

TEST_CASE("stable systems") {
    CHECK(stable(generate("complete(3)")).family == std::vector<Subset>{{0}, {1}, {2}});
    const auto gstar = stable(co_line(generate("kmn_plus(2,3)")).graph);
    CHECK(gstar.family.size() == 5);
    for (const auto& f : gstar.family) CHECK(f.size() == 3);
    CHECK(stable(Graph::with_default_labels(2, {})).family == std::vector<Subset>{{0, 1}});
    CHECK(std::holds_alternative<BudgetNote>(stable_system(generate("petersen"), 2)));
}

TEST_CASE("unit systems") {
    const auto k43 = star_system(generate("complete_bipartite(4,3)"));
    const auto inf = std::get<UnitInfeasibility>(solve_unit_system(k43));
    CHECK(inf.valid_for(k43));

    const auto c4 = star_system(generate("cycle(4)"));
    const auto sp = std::get<AffineSolutionSpace>(solve_unit_system(c4));
    CHECK(sp.particular.weights == rv({Rational(1, 2), Rational(1, 2), Rational(1, 2), Rational(1, 2)}));
    REQUIRE(sp.kernel_basis.size() == 1);
    // edges in id order: 1-2, 1-4, 2-3, 3-4; opposite pairs share a sign
    const auto& k = sp.kernel_basis[0];
    CHECK(k[0] == k[3]);
    CHECK(k[1] == k[2]);
    CHECK(k[0] == -k[1]);
    CHECK(sp.valid_for(c4));

    const auto k2 = std::get<AffineSolutionSpace>(solve_unit_system(star_system(generate("complete(2)"))));
    CHECK(k2.particular.weights == rv({1}));
    CHECK(k2.kernel_basis.empty());
}

TEST_CASE("forced values") {
    std::mt19937_64 rng(11);
    const auto c6 = star_system(generate("cycle(6)"));
    const auto cert = std::get<ForcedValueCertificate>(forced_value(c6, elements(c6, {"1-2", "4-5"})));
    CHECK(cert.value == 1);
    CHECK(cert.valid_for(c6));

    const auto k23p = star_system(generate("kmn_plus(2,3)"));
    const auto leaves = elements(k23p, {"b1-l1", "b2-l2", "b3-l3"});
    const auto lc = std::get<ForcedValueCertificate>(forced_value(k23p, leaves));
    CHECK(lc.value == 1);
    CHECK(lc.valid_for(k23p));

    const auto c4 = star_system(generate("cycle(4)"));
    const auto nf = std::get<NotForced>(forced_value(c4, elements(c4, {"1-2", "3-4"})));
    CHECK(nf.valid_for(c4));
    CHECK(abs(nf.inner_product) == 2);
    CHECK_THROWS_AS(forced_value(star_system(generate("complete_bipartite(4,3)")), Subset{0}), InputError);

    // forced totals agree with every sampled solution, in both directions
    for (const auto& g : connected_graphs_up_to(6, GraphClass::triangle_free, 3)) {
        const auto s = star_system(g);
        const auto space = solve_unit_system(s);
        if (!std::holds_alternative<AffineSolutionSpace>(space)) continue;
        const auto& sp = std::get<AffineSolutionSpace>(space);
        for (std::uint32_t m = 1; m < (1u << s.ground_size); m += 3) {
            const Subset t = oracle::set_of(m);
            const auto r = forced_value(s, sp, t);
            const auto x = sample(sp, rng);
            if (const auto* c = std::get_if<ForcedValueCertificate>(&r)) {
                CHECK(c->valid_for(s));
                CHECK(total(x, t) == c->value);
            } else {
                const auto& n = std::get<NotForced>(r);
                CHECK(n.valid_for(s));
                RationalVector y = x;
                for (std::size_t i = 0; i < y.size(); ++i) y[i] += n.direction[i];
                CHECK(total(y, t) != total(x, t));
            }
        }
    }
}

TEST_CASE("weighting verification") {
    const auto c4 = star_system(generate("cycle(4)"));
    const Rational h(1, 2), a(1, 3), b(2, 3);
    const auto half = verify_weighting(c4, WeightFunction{rv({h, h, h, h})});
    CHECK(half.answer == Answer::no);
    REQUIRE(half.witness.has_value());
    CHECK(half.witness->size() == 2);
    CHECK_FALSE(c4.contains_member(*half.witness));
    // 1-2, 1-4, 2-3, 3-4 alternate around the cycle as 1-2, 2-3, 3-4, 1-4
    CHECK(verify_weighting(c4, WeightFunction{rv({a, b, b, a})}).answer == Answer::yes);
    CHECK(verify_weighting(star_system(generate("complete(2)")), WeightFunction{rv({1})}).answer == Answer::yes);
    CHECK(verify_weighting(star_system(generate("petersen")), WeightFunction{RationalVector(15, Rational(1, 3))}, 10).answer == Answer::unknown);

    std::mt19937_64 rng(3);
    for (const auto& g : connected_graphs_up_to(5, GraphClass::any, 2)) {
        const auto s = star_system(g);
        for (int trial = 0; trial < 4; ++trial) {
            RationalVector w(static_cast<std::size_t>(s.ground_size));
            std::uniform_int_distribution<int> num(1, 4);
            for (auto& x : w) x = make_rational(num(rng), 4);
            const auto r = verify_weighting(s, WeightFunction{w});
            CHECK(r.answer == answer_of(oracle::weighting_ok(s, w)));
        }
    }
}

TEST_CASE("exact equistarability decisions") {
    const auto c4 = star_system(generate("cycle(4)"));
    const auto yes = decide_equi_exact(c4);
    REQUIRE(yes.answer == Answer::yes);
    CHECK(oracle::weighting_ok(c4, std::get<WeightFunction>(yes.witness).weights));

    const auto c6 = star_system(generate("cycle(6)"));
    const auto no = decide_equi_exact(c6);
    REQUIRE(no.answer == Answer::no);
    const auto& cert = std::get<ForcedValueCertificate>(no.witness);
    CHECK(cert.value == 1);
    CHECK(cert.valid_for(c6));
    CHECK(cert.target == elements(c6, {"1-2", "4-5"}));

    const Graph pg = generate("petersen");
    const auto pet = star_system(pg);
    const auto pno = decide_equi_exact(pet);
    REQUIRE(pno.answer == Answer::no);
    const auto& pc = std::get<ForcedValueCertificate>(pno.witness);
    CHECK(pc.value == 1);
    CHECK(pc.valid_for(pet));
    REQUIRE(pc.target.size() == 3);
    // induced 3-matching: no edge joins two of its edges
    VertexSet vm;
    for (int e : pc.target) {
        vm.push_back(pg.edge(e).u);
        vm.push_back(pg.edge(e).v);
    }
    std::sort(vm.begin(), vm.end());
    CHECK(std::adjacent_find(vm.begin(), vm.end()) == vm.end());
    CHECK(induced_subgraph(pg, vm).edge_count() == 3);

    const auto k43 = decide_equi_exact(star_system(generate("complete_bipartite(4,3)")));
    CHECK(k43.answer == Answer::no);
    CHECK(std::holds_alternative<UnitInfeasibility>(k43.witness));

    CHECK(decide_equi_exact(pet, {10, 0}).answer == Answer::unknown);
}

TEST_CASE("every decision on small graphs carries a checkable witness") {
    // yes: the weighting passes the direct-summation oracle; no: the
    // certificate passes its own identity check.
    for (const auto& g : connected_graphs_up_to(6, GraphClass::any, 2)) {
        const auto s = star_system(g);
        const auto d = decide_equi_exact(s);
        REQUIRE(d.answer != Answer::unknown);
        if (d.answer == Answer::yes) {
            CHECK(oracle::weighting_ok(s, std::get<WeightFunction>(d.witness).weights));
        } else if (const auto* c = std::get_if<ForcedValueCertificate>(&d.witness)) {
            CHECK(c->valid_for(s));
            CHECK(c->value == 1);
            CHECK_FALSE(s.contains_member(c->target));
        } else if (const auto* u = std::get_if<UnitInfeasibility>(&d.witness)) {
            CHECK(u->valid_for(s));
        } else {
            CHECK(std::get<StrictInfeasibility>(d.witness).valid_for(s));
        }
    }
}

TEST_CASE("strong checks") {
    const auto h = star_system(graph_h());
    const auto hs = strong_check(h);
    REQUIRE(hs.answer == Answer::no);
    const auto& pin = std::get<PinnedSubset>(hs.witness);
    CHECK(pin.value == Rational(1, 2));
    CHECK(pin.target.size() == 2);
    CHECK(pin.valid_for(h));

    CHECK(strong_check(star_system(generate("cycle(4)"))).answer == Answer::yes);
    CHECK(strong_check(stable(generate("complete(3)"))).answer == Answer::yes);
    CHECK(strong_check(star_system(generate("circulant(11,1,3)"))).answer == Answer::unknown);
    const auto k43 = strong_check(star_system(generate("complete_bipartite(4,3)")));
    REQUIRE(k43.answer == Answer::no);
    CHECK(std::get<EmptyPolytope>(k43.witness).valid_for(star_system(generate("complete_bipartite(4,3)"))));

    // strong implies equi, and pinned values re-derive by LP
    for (const auto& g : connected_graphs_up_to(6, GraphClass::triangle_free, 2)) {
        const auto s = star_system(g);
        const auto st = strong_check(s);
        if (st.answer == Answer::yes) CHECK(decide_equi_exact(s).answer == Answer::yes);
        if (const auto* p = std::get_if<PinnedSubset>(&st.witness)) CHECK(p->valid_for(s));
        if (const auto* e = std::get_if<EmptyPolytope>(&st.witness)) CHECK(e->valid_for(s));
    }
}

TEST_CASE("component monotonicity and relabeling invariance") {
    std::mt19937_64 rng(5);
    const auto graphs = connected_graphs_up_to(5, GraphClass::any, 2);
    for (std::size_t i = 0; i < graphs.size(); i += 4) {
        for (std::size_t j = i; j < graphs.size(); j += 7) {
            const Graph u = disjoint_union(graphs[i], graphs[j]);
            const auto whole = decide_equi_exact(star_system(u)).answer;
            const auto a = decide_equi_exact(star_system(graphs[i])).answer;
            const auto b = decide_equi_exact(star_system(graphs[j])).answer;
            if (whole == Answer::yes) CHECK((a == Answer::yes && b == Answer::yes));
            if (try_bipartition(u)) CHECK(whole == answer_of(a == Answer::yes && b == Answer::yes));
        }
    }
    for (const auto& g : graphs) {
        std::vector<Vertex> perm(static_cast<std::size_t>(g.vertex_count()));
        for (std::size_t k = 0; k < perm.size(); ++k) perm[k] = static_cast<Vertex>(k);
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<Edge> edges;
        for (const auto& e : g.edges()) edges.push_back({perm[e.u], perm[e.v]});
        const Graph h = Graph::with_default_labels(g.vertex_count(), edges);
        CHECK(decide_equi_exact(star_system(g)).answer == decide_equi_exact(star_system(h)).answer);
        CHECK(strong_check(star_system(g)).answer == strong_check(star_system(h)).answer);
    }
}

TEST_CASE("graph H and its disjoint union") {
    const auto h = star_system(graph_h());
    const auto d = decide_equi_exact(h);
    REQUIRE(d.answer == Answer::yes);
    CHECK(oracle::weighting_ok(h, std::get<WeightFunction>(d.witness).weights));
}

TEST_CASE("witness order") {
    CHECK(witness_before(Subset{5}, Subset{0, 1}));
    CHECK(witness_before(Subset{0, 2}, Subset{1, 2}));
    CHECK_FALSE(witness_before(Subset{1, 2}, Subset{1, 2}));
}
