#include "equilab/report.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "equilab/transforms.hpp"

namespace equilab {

namespace {

Json integer_json(const Integer& z) {
    if (z.fits_slong_p()) return Json(z.get_si());
    return Json(z.get_str());
}

Integer integer_from_json(const Json& j) {
    if (j.is_number_integer()) return Integer(j.get<long>());
    if (j.is_string()) {
        const auto text = j.get<std::string>();
        Integer z;
        if (text.empty() || z.set_str(text, 10) != 0) throw InputError("malformed integer \"" + text + "\"");
        return z;
    }
    throw InputError("expected an integer");
}

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

std::string type_of(const Json& j) { return field(j, "type").get<std::string>(); }

Json names_json(const std::vector<std::string>& names, const Subset& s) {
    Json out = Json::array();
    for (int x : s) out.push_back(names.at(static_cast<std::size_t>(x)));
    return out;
}

Subset subset_from_json(const SetSystem& s, const Json& j) {
    Subset out;
    for (const auto& name : j) {
        const auto idx = s.find_element(name.get<std::string>());
        if (!idx) throw InputError("unknown element \"" + name.get<std::string>() + "\"");
        out.push_back(*idx);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

int member_index(const SetSystem& s, const std::string& name) {
    for (std::size_t i = 0; i < s.member_names.size(); ++i)
        if (s.member_names[i] == name) return static_cast<int>(i);
    throw InputError("unknown family member \"" + name + "\"");
}

Json weighted_list(const std::vector<std::string>& names, const RationalVector& v, const char* key, bool skip_zero) {
    Json out = Json::array();
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (skip_zero && sgn(v[i]) == 0) continue;
        Json item;
        item[key] = names.at(i);
        item["num"] = integer_json(v[i].get_num());
        item["den"] = integer_json(v[i].get_den());
        out.push_back(std::move(item));
    }
    return out;
}

RationalVector member_vector(const SetSystem& s, const Json& list) {
    RationalVector out(s.family.size(), Rational(0));
    for (const auto& item : list) out[static_cast<std::size_t>(member_index(s, field(item, "member").get<std::string>()))] = rational_from_json(item);
    return out;
}

RationalVector element_vector(const SetSystem& s, const Json& list) {
    RationalVector out(static_cast<std::size_t>(s.ground_size), Rational(0));
    for (const auto& item : list) {
        const auto name = field(item, "element").get<std::string>();
        const auto idx = s.find_element(name);
        if (!idx) throw InputError("unknown element \"" + name + "\"");
        out[static_cast<std::size_t>(*idx)] = rational_from_json(item);
    }
    return out;
}

Json budget_json(const BudgetNote& b) { return Json{{"type", "budget"}, {"what", b.what}, {"limit", b.limit}}; }

std::vector<std::string> labels_of(const Graph& g) { return {g.labels().begin(), g.labels().end()}; }

Json vertices_json(const Graph& g, const VertexSet& vs) {
    Json out = Json::array();
    for (Vertex v : vs) out.push_back(g.label(v));
    return out;
}

Json edges_json(const Graph& g, const EdgeSet& es) {
    Json out = Json::array();
    for (EdgeId e : es) out.push_back(g.edge_label(e));
    return out;
}

Vertex vertex_from_json(const Graph& g, const Json& j) {
    const auto v = g.find(j.get<std::string>());
    if (!v) throw InputError("unknown vertex \"" + j.get<std::string>() + "\"");
    return *v;
}

VertexSet vertex_set_from_json(const Graph& g, const Json& j) {
    VertexSet out;
    for (const auto& x : j) out.push_back(vertex_from_json(g, x));
    std::sort(out.begin(), out.end());
    return out;
}

Json entry(Answer a, Json witness) { return Json{{"answer", std::string(to_string(a))}, {"witness", std::move(witness)}}; }

Answer answer_from_json(const Json& j) {
    const auto text = field(j, "answer").get<std::string>();
    if (text == "yes") return Answer::yes;
    if (text == "no") return Answer::no;
    if (text == "unknown") return Answer::unknown;
    throw InputError("bad answer \"" + text + "\"");
}

Json p5_json(const Graph& g, const P5Verdict& v) {
    if (!v.path) return Json{{"type", "degree_two_scan"}};
    return Json{{"type", "p5_path"}, {"path", vertices_json(g, VertexSet(v.path->begin(), v.path->end()))}};
}

P5Verdict p5_from_json(const Graph& g, Answer a, const Json& w) {
    P5Verdict v;
    v.answer = a;
    if (type_of(w) == "p5_path") {
        const auto& path = field(w, "path");
        if (path.size() != 5) throw InputError("p5 path must list five vertices");
        std::array<Vertex, 5> p{};
        for (std::size_t i = 0; i < 5; ++i) p[i] = vertex_from_json(g, path[i]);
        v.path = p;
    }
    return v;
}

Json matching_witness_json(const Graph& g, const BipartiteVerdict& v) {
    if (v.answer == Answer::yes) {
        Json comps = Json::array();
        for (const auto& tag : v.classification->components) {
            comps.push_back(Json{{"vertices", Json(labels_of(tag.graph))}, {"kind", std::string(to_string(tag.kind))}});
        }
        return Json{{"type", "component_classification"}, {"components", std::move(comps)}};
    }
    if (v.answer == Answer::no) {
        Json w{{"type", "failing_2_matching"}, {"edges", edges_json(g, v.failing->edges)}};
        if (v.violator) {
            w["hall_violator"] = Json{{"subset", vertices_json(g, v.violator->subset)},
                                      {"neighborhood", vertices_json(g, v.violator->neighborhood)},
                                      {"context", v.violator->context}};
        }
        return w;
    }
    return budget_json(*v.budget);
}

bool revalidate_bipartite(const Graph& g, Answer a, const Json& w) {
    if (a == Answer::yes) {
        if (type_of(w) != "component_classification") return false;
        const auto fresh = component_classification(g);
        const auto& comps = field(w, "components");
        if (comps.size() != fresh.components.size() || !fresh.all_good() || !fresh.valid_for(g)) return false;
        for (std::size_t i = 0; i < comps.size(); ++i) {
            if (field(comps[i], "kind").get<std::string>() != to_string(fresh.components[i].kind)) return false;
            if (field(comps[i], "vertices").get<std::vector<std::string>>() != labels_of(fresh.components[i].graph)) return false;
        }
        return true;
    }
    if (a == Answer::no) {
        if (type_of(w) != "failing_2_matching") return false;
        Matching m;
        for (const auto& e : field(w, "edges")) {
            const auto id = g.find_edge(e.get<std::string>());
            if (!id) return false;
            m.edges.push_back(*id);
        }
        std::sort(m.edges.begin(), m.edges.end());
        if (m.size() != 2 || !m.valid_for(g)) return false;
        const auto b = try_bipartition(g);
        const auto r = extend_to_perfect_internal(g, b, m);
        if (r.answer != Answer::no) return false;
        if (w.contains("hall_violator")) {
            HallViolator h{vertex_set_from_json(g, field(w["hall_violator"], "subset")),
                           vertex_set_from_json(g, field(w["hall_violator"], "neighborhood")), 0, ""};
            if (!h.valid_for(g, m.covered(g))) return false;
        }
        return true;
    }
    return type_of(w) == "budget";
}

Json triangle_json(const Graph& h, const TriangleVerdict& v) {
    if (v.answer == Answer::yes) return Json{{"type", "stable_set_scan"}};
    if (v.answer == Answer::no) {
        return Json{{"type", "triangle_violation"},
                    {"stable", vertices_json(h, v.violation->stable)},
                    {"edge", Json::array({h.label(v.violation->u), h.label(v.violation->v)})}};
    }
    return budget_json(*v.budget);
}

bool revalidate_triangle(const Graph& h, Answer a, const Json& w) {
    if (a == Answer::unknown) return type_of(w) == "budget";
    TriangleVerdict v;
    v.answer = a;
    if (a == Answer::no) {
        if (type_of(w) != "triangle_violation") return false;
        const auto& e = field(w, "edge");
        if (e.size() != 2) return false;
        v.violation = TriangleViolation{vertex_set_from_json(h, field(w, "stable")), vertex_from_json(h, e[0]), vertex_from_json(h, e[1])};
    } else if (type_of(w) != "stable_set_scan") {
        return false;
    }
    return v.valid_for(h);
}

Json partition_json(const Graph& h, const GeneralPartitionVerdict& v) {
    if (v.answer == Answer::yes) {
        Json cliques = Json::array();
        for (EdgeId e = 0; e < h.edge_count(); ++e) {
            cliques.push_back(Json{{"edge", Json::array({h.label(h.edge(e).u), h.label(h.edge(e).v)})},
                                   {"clique", vertices_json(h, v.strong_clique[static_cast<std::size_t>(e)])}});
        }
        return Json{{"type", "strong_cliques"}, {"cliques", std::move(cliques)}};
    }
    if (v.answer == Answer::no) {
        const auto& e = h.edge(*v.failing_edge);
        return Json{{"type", "edge_without_strong_clique"}, {"edge", Json::array({h.label(e.u), h.label(e.v)})}};
    }
    return budget_json(*v.budget);
}

std::optional<EdgeId> edge_from_json(const Graph& h, const Json& e) {
    if (e.size() != 2) return std::nullopt;
    return h.edge_id(vertex_from_json(h, e[0]), vertex_from_json(h, e[1]));
}

bool revalidate_partition(const Graph& h, Answer a, const Json& w) {
    if (a == Answer::unknown) return type_of(w) == "budget";
    GeneralPartitionVerdict v;
    v.answer = a;
    if (a == Answer::yes) {
        if (type_of(w) != "strong_cliques") return false;
        v.strong_clique.assign(static_cast<std::size_t>(h.edge_count()), {});
        std::vector<bool> seen(static_cast<std::size_t>(h.edge_count()), false);
        for (const auto& item : field(w, "cliques")) {
            const auto e = edge_from_json(h, field(item, "edge"));
            if (!e) return false;
            seen[static_cast<std::size_t>(*e)] = true;
            v.strong_clique[static_cast<std::size_t>(*e)] = vertex_set_from_json(h, field(item, "clique"));
        }
        if (std::find(seen.begin(), seen.end(), false) != seen.end()) return false;
    } else {
        if (type_of(w) != "edge_without_strong_clique") return false;
        v.failing_edge = edge_from_json(h, field(w, "edge"));
        if (!v.failing_edge) return false;
    }
    return v.valid_for(h);
}

std::string subset_text(const Json& names) {
    std::string out = "{";
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (i > 0) out += ",";
        out += names[i].get<std::string>();
    }
    return out + "}";
}

std::string rational_text(const Json& j) {
    auto part = [](const Json& x) { return x.is_string() ? x.get<std::string>() : std::to_string(x.get<long>()); };
    return part(field(j, "num")) + "/" + part(field(j, "den"));
}

std::string witness_text(const Json& w) {
    const auto type = type_of(w);
    if (type == "forced_value") return "forced value " + rational_text(w["value"]) + " on " + subset_text(w["target"]);
    if (type == "weighting") {
        std::string out = "weighting";
        for (const auto& item : w["weights"]) out += " " + item["element"].get<std::string>() + "=" + rational_text(item);
        return out;
    }
    if (type == "unit_infeasibility") return "unit system infeasible (combination gives 0 = " + rational_text(w["residual"]) + ")";
    if (type == "strict_infeasibility") return "no strictly positive unit weighting";
    if (type == "empty_polytope") return "no nonnegative unit weighting";
    if (type == "pinned_subset") return "total pinned to " + rational_text(w["value"]) + " on " + subset_text(w["target"]);
    if (type == "p5_path") return "path " + subset_text(w["path"]);
    if (type == "failing_2_matching") return "2-matching " + subset_text(w["edges"]) + " does not extend";
    if (type == "component_classification") {
        std::string out = "components:";
        for (const auto& c : w["components"]) out += " " + c["kind"].get<std::string>();
        return out;
    }
    if (type == "triangle_violation") return "stable set " + subset_text(w["stable"]) + " and edge " + subset_text(w["edge"]);
    if (type == "edge_without_strong_clique") return "edge " + subset_text(w["edge"]) + " lies in no strong clique";
    if (type == "strong_cliques") return "strong clique for every edge";
    if (type == "budget") return "budget exhausted: " + w["what"].get<std::string>();
    return type;
}

}  // namespace

Json rational_json(const Rational& r) { return Json{{"num", integer_json(r.get_num())}, {"den", integer_json(r.get_den())}}; }

Rational rational_from_json(const Json& j) {
    const Integer den = integer_from_json(field(j, "den"));
    if (den <= 0) throw InputError("denominator must be positive");
    return make_rational(integer_from_json(field(j, "num")), den);
}

Json certificate_json(const SetSystem& s, const ForcedValueCertificate& c) {
    return Json{{"type", "forced_value"},
                {"target", names_json(s.element_names, c.target)},
                {"coefficients", weighted_list(s.member_names, c.coefficients, "member", true)},
                {"value", rational_json(c.value)}};
}

Json not_forced_json(const SetSystem& s, const NotForced& nf) {
    return Json{{"type", "not_forced"},
                {"target", names_json(s.element_names, nf.target)},
                {"direction", weighted_list(s.element_names, nf.direction, "element", true)},
                {"inner_product", rational_json(nf.inner_product)}};
}

ForcedValueCertificate certificate_from_json(const SetSystem& s, const Json& j) {
    if (type_of(j) != "forced_value") throw InputError("not a forced-value certificate");
    return ForcedValueCertificate{subset_from_json(s, field(j, "target")), member_vector(s, field(j, "coefficients")),
                                  rational_from_json(field(j, "value"))};
}

NotForced not_forced_from_json(const SetSystem& s, const Json& j) {
    if (type_of(j) != "not_forced") throw InputError("not a separating direction");
    return NotForced{subset_from_json(s, field(j, "target")), element_vector(s, field(j, "direction")),
                     rational_from_json(field(j, "inner_product"))};
}

Json equi_witness_json(const SetSystem& s, const EquiWitness& w) {
    return std::visit(
        [&](const auto& x) -> Json {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, WeightFunction>) {
                return Json{{"type", "weighting"}, {"weights", weighted_list(s.element_names, x.weights, "element", false)}};
            } else if constexpr (std::is_same_v<T, UnitInfeasibility>) {
                return Json{{"type", "unit_infeasibility"},
                            {"multipliers", weighted_list(s.member_names, x.multipliers, "member", true)},
                            {"residual", rational_json(x.residual)}};
            } else if constexpr (std::is_same_v<T, StrictInfeasibility>) {
                return Json{{"type", "strict_infeasibility"}, {"multipliers", weighted_list(s.member_names, x.multipliers, "member", true)}};
            } else if constexpr (std::is_same_v<T, ForcedValueCertificate>) {
                return certificate_json(s, x);
            } else if constexpr (std::is_same_v<T, BudgetNote>) {
                return budget_json(x);
            } else {
                return Json{{"type", "none"}};
            }
        },
        w);
}

Json strong_witness_json(const SetSystem& s, const StrongWitness& w) {
    return std::visit(
        [&](const auto& x) -> Json {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, EmptyPolytope>) {
                return Json{{"type", "empty_polytope"}, {"multipliers", weighted_list(s.member_names, x.multipliers, "member", true)}};
            } else if constexpr (std::is_same_v<T, PinnedSubset>) {
                return Json{{"type", "pinned_subset"}, {"target", names_json(s.element_names, x.target)}, {"value", rational_json(x.value)}};
            } else if constexpr (std::is_same_v<T, BudgetNote>) {
                return budget_json(x);
            } else {
                return Json{{"type", "exhaustive_scan"}, {"ground", s.ground_size}};
            }
        },
        w);
}

bool revalidate_equi_witness(const SetSystem& s, Answer answer, const Json& w, int max_ground) {
    const auto type = type_of(w);
    if (answer == Answer::yes) {
        if (type != "weighting") return false;
        WeightFunction phi{element_vector(s, field(w, "weights"))};
        if (std::any_of(phi.weights.begin(), phi.weights.end(), [](const Rational& x) { return sgn(x) <= 0; })) return false;
        return verify_weighting(s, phi, max_ground).answer == Answer::yes;
    }
    if (answer == Answer::no) {
        if (type == "forced_value") {
            const auto c = certificate_from_json(s, w);
            return c.value == 1 && !s.contains_member(c.target) && c.valid_for(s);
        }
        if (type == "unit_infeasibility") {
            return UnitInfeasibility{member_vector(s, field(w, "multipliers")), rational_from_json(field(w, "residual"))}.valid_for(s);
        }
        if (type == "strict_infeasibility") return StrictInfeasibility{member_vector(s, field(w, "multipliers"))}.valid_for(s);
        return false;
    }
    return type == "budget";
}

bool revalidate_strong_witness(const SetSystem& s, Answer answer, const Json& w) {
    const auto type = type_of(w);
    if (answer == Answer::yes) return type == "exhaustive_scan" && strong_check(s, std::max(s.ground_size, 1)).answer == Answer::yes;
    if (answer == Answer::no) {
        if (type == "empty_polytope") return EmptyPolytope{member_vector(s, field(w, "multipliers"))}.valid_for(s);
        if (type == "pinned_subset") return PinnedSubset{subset_from_json(s, field(w, "target")), rational_from_json(field(w, "value"))}.valid_for(s);
        return false;
    }
    return type == "budget";
}

PropertyReport analyze(const Graph& g, const AnalyzeOptions& options) {
    if (g.has_isolated_vertex()) throw InputError("graph has an isolated vertex; equistarability is undefined");
    PropertyReport out;
    auto& j = out.json;
    const auto bip = try_bipartition(g);
    const bool triangle_free = is_triangle_free(g);
    j["schema"] = kReportSchema;
    j["tool"] = "equilab";
    j["version"] = std::string(kToolVersion);
    j["input"] = options.source;
    j["graph"] = Json{{"vertices", g.vertex_count()},
                      {"edges", g.edge_count()},
                      {"bipartite", bip.has_value()},
                      {"triangle_free", triangle_free},
                      {"components", components(g).count}};
    j["budgets"] = Json{{"enumeration", options.enumeration_budget},
                        {"exhaustive_ground", options.exhaustive_ground},
                        {"strong_ground", options.strong_ground}};
    j["seed"] = options.seed;

    auto note = [&](Answer a) {
        if (a == Answer::unknown) out.budget_exhausted = true;
        return a;
    };
    Json props;
    const auto p5 = is_p5_constrained(g);
    props["p5_constrained"] = entry(p5.answer, p5_json(g, p5));

    const auto stars = star_system(g);
    const auto equi = decide_equi_exact(stars, {options.exhaustive_ground, options.seed});
    props["equistarable"] = entry(note(equi.answer), equi_witness_json(stars, equi.witness));
    if (bip) {
        const auto rb = recognize_equistarable_bipartite(g);
        props["equistarable_bipartite"] = entry(note(rb.answer), matching_witness_json(g, rb));
    }
    if (is_forest(g)) {
        const auto rf = recognize_equistarable_forest(g);
        props["equistarable_forest"] = entry(rf.answer, p5_json(g, rf));
    }
    if (options.strong) {
        const auto st = strong_check(stars, options.strong_ground);
        props["strongly_equistarable"] = entry(note(st.answer), strong_witness_json(stars, st.witness));
    }
    if (options.with_co_line && g.edge_count() > 0) {
        const Graph h = co_line(g).graph;
        Json co;
        co["vertices"] = h.vertex_count();
        co["edges"] = h.edge_count();
        const auto stable = stable_system(h, options.enumeration_budget);
        if (const auto* s = std::get_if<SetSystem>(&stable)) {
            const auto eq = decide_equi_exact(*s, {options.exhaustive_ground, options.seed});
            co["equistable"] = entry(note(eq.answer), equi_witness_json(*s, eq.witness));
            if (options.strong) {
                const auto st = strong_check(*s, options.strong_ground);
                co["strongly_equistable"] = entry(note(st.answer), strong_witness_json(*s, st.witness));
            }
        } else {
            co["equistable"] = entry(note(Answer::unknown), budget_json(std::get<BudgetNote>(stable)));
            if (options.strong) co["strongly_equistable"] = entry(Answer::unknown, budget_json(std::get<BudgetNote>(stable)));
        }
        const auto tri = triangle_condition(h, options.enumeration_budget);
        co["triangle_condition"] = entry(note(tri.answer), triangle_json(h, tri));
        const auto gp = general_partition(h, options.enumeration_budget);
        co["general_partition"] = entry(note(gp.answer), partition_json(h, gp));
        props["co_line"] = std::move(co);
    }
    j["properties"] = std::move(props);
    return out;
}

bool revalidate_report(const Json& report, const Graph& g) {
    try {
        if (field(report, "schema").get<int>() != kReportSchema) return false;
        const auto& props = field(report, "properties");
        const auto& p5 = field(props, "p5_constrained");
        if (!p5_from_json(g, answer_from_json(p5), field(p5, "witness")).valid_for(g)) return false;
        const auto stars = star_system(g);
        const int ground = field(field(report, "budgets"), "exhaustive_ground").get<int>();
        const auto& eq = field(props, "equistarable");
        if (!revalidate_equi_witness(stars, answer_from_json(eq), field(eq, "witness"), ground)) return false;
        if (props.contains("equistarable_bipartite")) {
            const auto& e = props["equistarable_bipartite"];
            if (!revalidate_bipartite(g, answer_from_json(e), field(e, "witness"))) return false;
        }
        if (props.contains("equistarable_forest")) {
            const auto& e = props["equistarable_forest"];
            if (!p5_from_json(g, answer_from_json(e), field(e, "witness")).valid_for(g)) return false;
        }
        if (props.contains("strongly_equistarable")) {
            const auto& e = props["strongly_equistarable"];
            if (!revalidate_strong_witness(stars, answer_from_json(e), field(e, "witness"))) return false;
        }
        if (props.contains("co_line")) {
            const auto& co = props["co_line"];
            const Graph h = co_line(g).graph;
            const auto stable = stable_system(h);
            if (const auto* s = std::get_if<SetSystem>(&stable)) {
                const auto& e = field(co, "equistable");
                if (!revalidate_equi_witness(*s, answer_from_json(e), field(e, "witness"), ground)) return false;
                if (co.contains("strongly_equistable")) {
                    const auto& st = co["strongly_equistable"];
                    if (!revalidate_strong_witness(*s, answer_from_json(st), field(st, "witness"))) return false;
                }
            }
            const auto& tri = field(co, "triangle_condition");
            if (!revalidate_triangle(h, answer_from_json(tri), field(tri, "witness"))) return false;
            const auto& gp = field(co, "general_partition");
            if (!revalidate_partition(h, answer_from_json(gp), field(gp, "witness"))) return false;
        }
        return true;
    } catch (const InputError&) {
        return false;
    } catch (const nlohmann::json::exception&) {
        return false;
    }
}

std::string report_text(const Json& report) {
    std::ostringstream out;
    const auto& g = report["graph"];
    auto yn = [](const Json& b) { return b.get<bool>() ? "yes" : "no"; };
    out << "input: " << report["input"].get<std::string>() << "\n";
    out << "graph: " << g["vertices"] << " vertices, " << g["edges"] << " edges, bipartite " << yn(g["bipartite"]) << ", triangle-free "
        << yn(g["triangle_free"]) << ", " << g["components"] << " component(s)\n";
    auto line = [&](const std::string& name, const Json& e) {
        out << name << ": " << e["answer"].get<std::string>() << "  [" << witness_text(e["witness"]) << "]\n";
    };
    for (const auto& [name, e] : report["properties"].items()) {
        if (name == "co_line") {
            out << "co-line graph: " << e["vertices"] << " vertices, " << e["edges"] << " edges\n";
            for (const auto& [sub, se] : e.items()) {
                if (se.is_object()) line("  " + sub, se);
            }
            continue;
        }
        line(name, e);
    }
    return out.str();
}

Json table1_json(const Table1Report& r) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < r.rows.size(); ++i) {
        rows.push_back(Json{{"row", i + 1},
                            {"name", r.rows[i].name},
                            {"left", std::string(to_string(r.rows[i].left))},
                            {"right", std::string(to_string(r.rows[i].right))}});
    }
    return Json{{"rows", std::move(rows)}, {"violations", r.violations}, {"partial", r.partial}};
}

}  // namespace equilab
