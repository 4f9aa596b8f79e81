#include "wavegraph/json_io.hpp"

namespace wavegraph {

json partition_to_json(const Partition& p) {
    return json(p.parts());
}

json tableau_to_json(const StandardTableau& t) {
    return json(t.rows);
}

StandardTableau tableau_from_json(const json& j) {
    if (!j.is_array()) throw InvalidInput("tableau must be an array of rows");
    StandardTableau t;
    for (const auto& row : j) {
        if (!row.is_array()) throw InvalidInput("tableau rows must be arrays");
        t.rows.push_back(row.get<std::vector<int>>());
    }
    return t;
}

json graph_to_json(const WaveGraph& g) {
    return json{{"n", g.n}, {"m", g.m}, {"components", g.components}};
}

WaveGraph graph_from_json(const json& j) {
    WaveGraph g;
    const json* comps = nullptr;
    if (j.is_array()) {
        comps = &j;
    } else if (j.is_object() && j.contains("components")) {
        comps = &j.at("components");
        if (j.contains("n")) g.n = j.at("n").get<int>();
        if (j.contains("m")) g.m = j.at("m").get<int>();
    } else {
        throw InvalidInput("graph must be a component array or {n,m,components}");
    }
    for (const auto& comp : *comps) {
        if (!comp.is_array()) throw InvalidInput("graph components must be arrays");
        g.components.push_back(comp.get<std::vector<int>>());
    }
    if (g.n == 0 && !g.components.empty())
        g.n = static_cast<int>(g.components[0].size());
    if (g.m == 0)
        for (const auto& comp : g.components)
            g.m += static_cast<int>(comp.size());
    return g;
}

json tensor_to_json(const SparseTensor& t) {
    json terms = json::array();
    for (const auto& [word, coeff] : t.terms()) {
        json idx = json::array();
        for (Letter a : word) idx.push_back(int(a));
        terms.push_back(json{{"idx", std::move(idx)}, {"coeff", coeff.get_str()}});
    }
    return json{{"n", t.n()}, {"m", t.m()}, {"terms", std::move(terms)}};
}

json word_to_json(const LatticeWord& w) {
    if (w.n <= 9) return json(to_string(w));
    json arr = json::array();
    for (Letter a : w.letters) arr.push_back(int(a));
    return arr;
}

json certificate_to_json(const Certificate& cert) {
    json invariance = json::array();
    for (const GraphCheck& check : cert.invariance.per_graph) {
        invariance.push_back(json{
            {"word", check.word},
            {"lie_annihilation", check.lie_annihilated ? "pass" : "fail"},
            {"transvection_fixed", check.transvections_fixed ? "pass" : "fail"}});
    }

    json independence{
        {"words", cert.independence.words},
        {"matrix", cert.independence.matrix},
        {"triangular", cert.independence.triangular},
        {"unit_diagonal", cert.independence.unit_diagonal},
        {"determinant", cert.independence.determinant.get_str()},
        {"verdict", cert.independence.pass ? "pass" : "fail"}};

    json out{
        {"n", cert.n},
        {"m", cert.m},
        {"dimension", cert.dimension.get_str()},
        {"words", cert.words},
        {"invariance",
         json{{"per_graph", std::move(invariance)},
              {"verdict", cert.invariance.pass ? "pass" : "fail"}}},
        {"independence", std::move(independence)},
        {"verdict", cert.pass ? "pass" : "fail"}};

    if (cert.spanning) {
        out["spanning"] = json{
            {"oracle_dimension", cert.spanning->oracle_dim},
            {"formula_dimension", cert.spanning->formula_dim.get_str()},
            {"graph_count", cert.spanning->graph_count},
            {"rank", cert.spanning->rank},
            {"verdict", cert.spanning->pass ? "pass" : "fail"}};
    }
    return out;
}

}  // namespace wavegraph
