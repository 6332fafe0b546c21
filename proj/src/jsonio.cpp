#include "narycat/jsonio.hpp"

#include "narycat/errors.hpp"

namespace narycat {

namespace {

nlohmann::json factor_to_json(const Factor& f) {
    if (f.is_leaf())
        return 0;
    nlohmann::json inner = nlohmann::json::array();
    for (const Factor& g : f.inner().factors)
        inner.push_back(factor_to_json(g));
    return nlohmann::json{{"factors", std::move(inner)}};
}

Factor factor_from_json(const nlohmann::json& j, int d) {
    if (j.is_number()) {
        if (j.get<int>() != 0)
            throw SyntaxError("monomial json: leaf factor must be 0");
        return Factor();
    }
    if (!j.is_object() || !j.contains("factors"))
        throw SyntaxError("monomial json: factor must be 0 or {\"factors\":[...]}");
    Monomial inner;
    inner.d = d;
    for (const nlohmann::json& g : j.at("factors"))
        inner.factors.push_back(factor_from_json(g, d));
    return Factor(std::move(inner));
}

std::vector<std::vector<int>> labels_from_json(const nlohmann::json& j) {
    return j.at("labels").get<std::vector<std::vector<int>>>();
}

} // namespace

nlohmann::json monomial_to_json(const Monomial& m) {
    nlohmann::json factors = nlohmann::json::array();
    for (const Factor& f : m.factors)
        factors.push_back(factor_to_json(f));
    return {{"d", m.d}, {"factors", std::move(factors)}};
}

Monomial monomial_from_json(const nlohmann::json& j) {
    Monomial m;
    m.d = j.at("d").get<int>();
    for (const nlohmann::json& f : j.at("factors"))
        m.factors.push_back(factor_from_json(f, m.d));
    validate_monomial(m);
    return m;
}

nlohmann::json path_to_json(const LatticePath& p) {
    return {{"steps", to_string(p)}};
}

LatticePath path_from_json(const nlohmann::json& j) {
    return parse_path(j.at("steps").get<std::string>());
}

nlohmann::json labeled_schroder_to_json(const LabeledSchroderPath& p) {
    return {{"steps", to_string(p.base)}, {"labels", p.labels}};
}

LabeledSchroderPath labeled_schroder_from_json(const nlohmann::json& j) {
    LabeledSchroderPath p;
    p.base = parse_path(j.at("steps").get<std::string>());
    p.labels = labels_from_json(j);
    return p;
}

nlohmann::json labeled_dyck_to_json(const LabeledDyckPath& p) {
    return {{"steps", to_string(p.base)}, {"labels", p.labels}};
}

LabeledDyckPath labeled_dyck_from_json(const nlohmann::json& j) {
    LabeledDyckPath p;
    p.base = parse_path(j.at("steps").get<std::string>());
    p.labels = labels_from_json(j);
    return p;
}

nlohmann::json tree_to_json(const OrderedTree& t) {
    return {{"outdegrees", t.outdegrees}};
}

OrderedTree tree_from_json(const nlohmann::json& j) {
    OrderedTree t;
    t.outdegrees = j.at("outdegrees").get<std::vector<int>>();
    if (!is_valid_tree(t))
        throw SyntaxError("tree json: outdegrees are not a preorder encoding");
    return t;
}

nlohmann::json labeled_tree_to_json(const LabeledTree& t) {
    return {{"outdegrees", t.base.outdegrees}, {"labels", t.labels}};
}

LabeledTree labeled_tree_from_json(const nlohmann::json& j) {
    LabeledTree t;
    t.base.outdegrees = j.at("outdegrees").get<std::vector<int>>();
    if (!is_valid_tree(t.base))
        throw SyntaxError("tree json: outdegrees are not a preorder encoding");
    t.labels = labels_from_json(j);
    return t;
}

nlohmann::json perm_to_json(const Perm& w) {
    return {{"values", w}};
}

Perm perm_from_json(const nlohmann::json& j) {
    Perm w = j.at("values").get<std::vector<int>>();
    if (!is_permutation(w))
        throw SyntaxError("perm json: values are not a permutation of 1..n");
    return w;
}

nlohmann::json fpath_to_json(const FPath& f) {
    nlohmann::json steps = nlohmann::json::array();
    for (const FStep& s : f.steps) {
        nlohmann::json step{{"run", s.run}};
        if (s.run >= 1)
            step["label"] = s.label;
        steps.push_back(std::move(step));
    }
    return {{"steps", std::move(steps)}};
}

FPath fpath_from_json(const nlohmann::json& j) {
    FPath f;
    for (const nlohmann::json& s : j.at("steps")) {
        FStep step;
        step.run = s.at("run").get<long long>();
        if (s.contains("label"))
            step.label = s.at("label").get<std::vector<int>>();
        f.steps.push_back(std::move(step));
    }
    if (!is_valid_fpath(f))
        throw SyntaxError("fpath json: steps do not form a valid path");
    return f;
}

} // namespace narycat
