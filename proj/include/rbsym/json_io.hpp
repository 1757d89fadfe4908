#pragma once

#include <nlohmann/json.hpp>

#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "rbsym/graph.hpp"
#include "rbsym/ncsym.hpp"
#include "rbsym/qsym.hpp"
#include "rbsym/sym.hpp"
#include "rbsym/unipoly.hpp"

namespace rbsym {

using Json = nlohmann::json;

// Structurally invalid input (missing/mistyped fields); maps to a usage error.
struct MalformedInput : std::runtime_error {
    explicit MalformedInput(const std::string& field, const std::string& what)
        : std::runtime_error("field \"" + field + "\": " + what) {}
};

// Semantically invalid input (loops where forbidden, order axioms violated,
// size limits); maps to a bound/precondition error.
struct BoundViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

inline int read_n(const Json& j) {
    if (!j.is_object()) throw MalformedInput("<root>", "expected a JSON object");
    if (!j.contains("n")) throw MalformedInput("n", "missing");
    if (!j["n"].is_number_integer()) throw MalformedInput("n", "expected an integer");
    int n = j["n"].get<int>();
    if (n < 1) throw MalformedInput("n", "expected a positive integer");
    return n;
}

inline std::vector<std::pair<int, int>> read_pairs(const Json& j, const std::string& field,
                                                   int n) {
    if (!j.contains(field)) throw MalformedInput(field, "missing");
    const Json& arr = j[field];
    if (!arr.is_array()) throw MalformedInput(field, "expected an array of pairs");
    std::vector<std::pair<int, int>> out;
    for (const Json& e : arr) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
            !e[1].is_number_integer())
            throw MalformedInput(field, "each entry must be a pair of integers");
        int a = e[0].get<int>(), b = e[1].get<int>();
        if (a < 1 || a > n || b < 1 || b > n)
            throw MalformedInput(field, "vertex outside [1, n]");
        out.emplace_back(a, b);
    }
    return out;
}

}  // namespace detail

inline std::optional<NCBasis> nc_basis_from_name(const std::string& s) {
    if (s == "m") return NCBasis::m;
    if (s == "e") return NCBasis::e;
    if (s == "p") return NCBasis::p;
    if (s == "h") return NCBasis::h;
    return std::nullopt;
}

inline Graph graph_from_json(const Json& j) {
    Graph G;
    G.n = detail::read_n(j);
    for (auto [a, b] : detail::read_pairs(j, "edges", G.n)) {
        if (a == b) throw BoundViolation("graphs carry no loops");
        G.add_edge(a, b);
    }
    return G;
}

inline Digraph digraph_from_json(const Json& j) {
    Digraph D;
    D.n = detail::read_n(j);
    for (auto [a, b] : detail::read_pairs(j, "arcs", D.n)) D.add_arc(a, b);
    return D;
}

inline Poset poset_from_json(const Json& j) {
    int n = detail::read_n(j);
    auto rel = detail::read_pairs(j, "strict", n);
    bool covers = false;
    if (j.contains("covers")) {
        if (!j["covers"].is_boolean()) throw MalformedInput("covers", "expected a boolean");
        covers = j["covers"].get<bool>();
    }
    try {
        return Poset(n, rel, covers);
    } catch (const std::invalid_argument& e) {
        throw BoundViolation(std::string("not a strict order: ") + e.what());
    }
}

inline Json graph_to_json(const Graph& G) {
    Json edges = Json::array();
    for (auto& [a, b] : G.edges) edges.push_back({a, b});
    return Json{{"n", G.n}, {"edges", edges}};
}

inline Json digraph_to_json(const Digraph& D) {
    Json arcs = Json::array();
    for (auto& [a, b] : D.arcs) arcs.push_back({a, b});
    return Json{{"n", D.n}, {"arcs", arcs}};
}

inline Json poset_to_json(const Poset& P) {
    Json rel = Json::array();
    for (int a = 1; a <= P.n(); ++a)
        for (int b = 1; b <= P.n(); ++b)
            if (P.less(a, b)) rel.push_back({a, b});
    return Json{{"n", P.n()}, {"strict", rel}};
}

// ----------------------------------------------------------- expansion keys

inline std::string partition_key(const IntPartition& lambda) {
    std::string s;
    for (size_t i = 0; i < lambda.parts().size(); ++i) {
        if (i) s += ",";
        s += std::to_string(lambda.parts()[i]);
    }
    return s;
}

inline IntPartition parse_partition_key(const std::string& s) {
    std::vector<int> parts;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ','))
        if (!tok.empty()) parts.push_back(std::stoi(tok));
    return IntPartition(std::move(parts));
}

inline std::string composition_key(const Composition& alpha) {
    std::string s;
    for (size_t i = 0; i < alpha.parts().size(); ++i) {
        if (i) s += ",";
        s += std::to_string(alpha.parts()[i]);
    }
    return s;
}

inline Composition parse_composition_key(const std::string& s) {
    std::vector<int> parts;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ','))
        if (!tok.empty()) parts.push_back(std::stoi(tok));
    return Composition(std::move(parts));
}

inline std::string set_partition_key(const SetPartition& pi) {
    std::string s;
    for (size_t i = 0; i < pi.blocks().size(); ++i) {
        if (i) s += "|";
        for (size_t k = 0; k < pi.blocks()[i].size(); ++k) {
            if (k) s += ",";
            s += std::to_string(pi.blocks()[i][k]);
        }
    }
    return s;
}

inline SetPartition parse_set_partition_key(int n, const std::string& s) {
    std::vector<std::vector<int>> blocks;
    std::stringstream ss(s);
    std::string btok;
    while (std::getline(ss, btok, '|')) {
        std::vector<int> block;
        std::stringstream bs(btok);
        std::string tok;
        while (std::getline(bs, tok, ','))
            if (!tok.empty()) block.push_back(std::stoi(tok));
        if (!block.empty()) blocks.push_back(std::move(block));
    }
    return SetPartition(n, std::move(blocks));
}

// ------------------------------------------------------ expansion documents

inline Json sym_to_json(const SymElement& f) {
    Json terms = Json::array();
    for (auto& [key, c] : f.coeffs)
        terms.push_back({{"key", partition_key(key)}, {"coeff", rational_to_string(c)}});
    return Json{{"algebra", "sym"},
                {"degree", f.degree},
                {"basis", sym_basis_name(f.basis)},
                {"terms", terms}};
}

inline Json qsym_to_json(const QSymElement& f) {
    Json terms = Json::array();
    for (auto& [mask, c] : f.coeffs) {
        Composition alpha = Composition::from_subset(PositionSubset(f.degree, mask));
        terms.push_back({{"key", composition_key(alpha)}, {"coeff", rational_to_string(c)}});
    }
    return Json{{"algebra", "qsym"},
                {"degree", f.degree},
                {"basis", qsym_basis_name(f.basis)},
                {"terms", terms}};
}

inline Json ncsym_to_json(const NCSymElement& f) {
    Json terms = Json::array();
    for (auto& [pi, c] : f.coeffs)
        terms.push_back({{"key", set_partition_key(pi)}, {"coeff", rational_to_string(c)}});
    return Json{{"algebra", "ncsym"},
                {"degree", f.degree},
                {"basis", nc_basis_name(f.basis)},
                {"terms", terms}};
}

inline SymElement sym_from_json(const Json& j) {
    if (!j.is_object() || j.value("algebra", "") != "sym")
        throw MalformedInput("algebra", "expected \"sym\"");
    auto basis = sym_basis_from_name(j.value("basis", ""));
    if (!basis) throw MalformedInput("basis", "unknown basis name");
    if (!j.contains("degree") || !j["degree"].is_number_integer())
        throw MalformedInput("degree", "expected an integer");
    SymElement f = SymElement::zero(j["degree"].get<int>(), *basis);
    for (const Json& t : j.value("terms", Json::array()))
        f.add_term(parse_partition_key(t.at("key").get<std::string>()),
                   Rational(t.at("coeff").get<std::string>()));
    return f;
}

inline QSymElement qsym_from_json(const Json& j) {
    if (!j.is_object() || j.value("algebra", "") != "qsym")
        throw MalformedInput("algebra", "expected \"qsym\"");
    std::string bname = j.value("basis", "");
    if (bname != "M" && bname != "F") throw MalformedInput("basis", "unknown basis name");
    QSymElement f = QSymElement::zero(j["degree"].get<int>(),
                                      bname == "M" ? QSymBasis::M : QSymBasis::F);
    for (const Json& t : j.value("terms", Json::array()))
        f.add_term(parse_composition_key(t.at("key").get<std::string>()).to_subset().mask(),
                   Rational(t.at("coeff").get<std::string>()));
    return f;
}

inline NCSymElement ncsym_from_json(const Json& j) {
    if (!j.is_object() || j.value("algebra", "") != "ncsym")
        throw MalformedInput("algebra", "expected \"ncsym\"");
    auto basis = nc_basis_from_name(j.value("basis", ""));
    if (!basis) throw MalformedInput("basis", "unknown basis name");
    NCSymElement f = NCSymElement::zero(j["degree"].get<int>(), *basis);
    for (const Json& t : j.value("terms", Json::array()))
        f.add_term(parse_set_partition_key(f.degree, t.at("key").get<std::string>()),
                   Rational(t.at("coeff").get<std::string>()));
    return f;
}

inline Json poly_to_json(const UniPolynomial& p) {
    return Json{{"poly", p.to_string()}};
}

}  // namespace rbsym
