#include "tropolax/json_io.hpp"

#include <fstream>
#include <stdexcept>

namespace tropolax {

namespace {

json scalar_to_json(const MaxPlusScalar& s) {
    if (s.is_bottom()) return nullptr;
    return rational_str(s.value());
}

MaxPlusScalar scalar_from_json(const json& j) {
    if (j.is_null()) return MaxPlusScalar::bottom();
    if (!j.is_string()) throw std::invalid_argument("matrix entry must be string or null");
    return MaxPlusScalar(parse_rational(j.get<std::string>()));
}

}  // namespace

json potential_to_json(const Potential& u) {
    json values = json::array();
    for (const Rational& v : u.values()) values.push_back(rational_str(v));
    return json{{"support_lo", u.is_zero() ? 0 : u.support_lo()},
                {"values", std::move(values)}};
}

Potential potential_from_json(const json& j) {
    if (!j.is_object() || !j.contains("support_lo") || !j.contains("values"))
        throw std::invalid_argument(
            "potential: expected {\"support_lo\": int, \"values\": [..]}");
    if (!j.at("support_lo").is_number_integer())
        throw std::invalid_argument("potential: support_lo must be an integer");
    if (!j.at("values").is_array())
        throw std::invalid_argument("potential: values must be an array");
    std::vector<Rational> vals;
    for (const json& e : j.at("values")) {
        if (!e.is_string())
            throw std::invalid_argument("potential: values must be rational strings");
        vals.push_back(parse_rational(e.get<std::string>()));
    }
    return Potential(j.at("support_lo").get<int>(), std::move(vals));
}

Potential load_potential(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open input file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw std::invalid_argument("malformed JSON in " + path + ": " + e.what());
    }
    return potential_from_json(j);
}

json matrix_to_json(const MaxPlusMatrix& a) {
    json rows = json::array();
    for (int i = a.lo(); i <= a.hi(); ++i) {
        json row = json::array();
        for (int j = a.lo(); j <= a.hi(); ++j) row.push_back(scalar_to_json(a.at(i, j)));
        rows.push_back(std::move(row));
    }
    return json{{"offset", a.offset()}, {"entries", std::move(rows)}};
}

MaxPlusMatrix matrix_from_json(const json& j) {
    if (!j.is_object() || !j.contains("offset") || !j.contains("entries"))
        throw std::invalid_argument(
            "matrix: expected {\"offset\": int, \"entries\": [[..]]}");
    const json& rows = j.at("entries");
    if (!rows.is_array() || rows.empty())
        throw std::invalid_argument("matrix: entries must be a nonempty array");
    int n = static_cast<int>(rows.size());
    MaxPlusMatrix a(n, j.at("offset").get<int>());
    for (int i = 0; i < n; ++i) {
        const json& row = rows[static_cast<std::size_t>(i)];
        if (!row.is_array() || static_cast<int>(row.size()) != n)
            throw std::invalid_argument("matrix: entries must be square");
        for (int c = 0; c < n; ++c)
            a.set(a.lo() + i, a.lo() + c,
                  scalar_from_json(row[static_cast<std::size_t>(c)]));
    }
    return a;
}

json eigenseq_to_json(const EigenSeq& phi) {
    json values = json::array();
    for (const Rational& v : phi.window_values()) values.push_back(rational_str(v));
    return json{{"window_lo", phi.window_lo()},
                {"window_hi", phi.window_hi()},
                {"k", rational_str(phi.slope())},
                {"values", std::move(values)}};
}

json soliton_to_json(const Soliton& s) {
    return json{{"l", s.l}, {"s", s.s}};
}

json critical_graph_to_json(const CriticalGraph& g) {
    json edges = json::array();
    for (const auto& [i, j] : g.edges) edges.push_back(json::array({i, j}));
    json comps = json::array();
    for (const auto& comp : g.components) {
        json c = json::array();
        for (int v : comp) c.push_back(v);
        comps.push_back(std::move(c));
    }
    return json{{"lambda", scalar_to_json(g.lambda)},
                {"nodes", json(g.nodes)},
                {"edges", std::move(edges)},
                {"components", std::move(comps)}};
}

json report_to_json(const ConstraintReport& r) {
    json v = nullptr;
    if (r.first_violation) {
        v = json{{"equation", r.first_violation->equation},
                 {"index", r.first_violation->index},
                 {"lhs", rational_str(r.first_violation->lhs)},
                 {"rhs", rational_str(r.first_violation->rhs)}};
    }
    return json{{"gamma_eigen_ok", r.gamma_eigen_ok},
                {"delta_eigen_ok", r.delta_eigen_ok},
                {"backward_ok", r.backward_ok},
                {"forward_ok", r.forward_ok},
                {"mu", rational_str(r.mu)},
                {"omega", rational_str(r.omega)},
                {"first_violation", std::move(v)}};
}

std::string dump_json(const json& j) {
    return j.dump(2) + "\n";
}

}  // namespace tropolax
