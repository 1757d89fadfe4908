#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "rbsym/checks.hpp"
#include "rbsym/decomp.hpp"
#include "rbsym/enumerate.hpp"
#include "rbsym/graph.hpp"
#include "rbsym/invariants.hpp"
#include "rbsym/json_io.hpp"
#include "rbsym/ncsym.hpp"
#include "rbsym/qsym.hpp"
#include "rbsym/sym.hpp"

using namespace rbsym;

namespace {

constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBounds = 3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open input file: " + path);
    Json j;
    try {
        in >> j;
    } catch (const Json::parse_error& e) {
        throw MalformedInput("<json>", e.what());
    }
    return j;
}

void emit(const std::string& out_path, const std::string& text) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw UsageError("cannot open output file: " + out_path);
    out << text;
}

std::string expansion_table(const Json& doc) {
    std::ostringstream os;
    size_t width = 3;
    for (const Json& t : doc["terms"])
        width = std::max(width, t["key"].get<std::string>().size());
    os << doc["basis"].get<std::string>() << "-expansion, degree "
       << doc["degree"].get<int>() << "\n";
    for (const Json& t : doc["terms"]) {
        std::string key = t["key"].get<std::string>();
        os << key << std::string(width - key.size() + 2, ' ')
           << t["coeff"].get<std::string>() << "\n";
    }
    return os.str();
}

std::string render_expansion(const Json& doc, const std::string& format) {
    if (format == "table") return expansion_table(doc);
    return doc.dump(2) + "\n";
}

int run_compute(const std::string& kind, const std::string& in_path,
                const std::string& basis, const std::string& out_path,
                const std::string& format) {
    Json input = load_json(in_path);
    bool qsym_basis = (basis == "M" || basis == "F");

    auto sym_out = [&](const SymElement& f) {
        if (qsym_basis) {
            auto q = qsym_convert(embed_sym_in_qsym(sym_convert(f, SymBasis::m)),
                                  basis == "M" ? QSymBasis::M : QSymBasis::F);
            emit(out_path, render_expansion(qsym_to_json(q), format));
            return;
        }
        auto b = sym_basis_from_name(basis);
        if (!b) throw UsageError("unknown basis: " + basis);
        emit(out_path, render_expansion(sym_to_json(sym_convert(f, *b)), format));
    };
    auto ncsym_out = [&](const NCSymElement& f) {
        auto b = nc_basis_from_name(basis);
        if (!b) throw UsageError("basis for this kind must be one of m,e,p,h");
        emit(out_path, render_expansion(ncsym_to_json(ncsym_convert(f, *b)), format));
    };
    auto poly_out = [&](const UniPolynomial& p) {
        if (format == "table")
            emit(out_path, p.to_string() + "\n");
        else
            emit(out_path, poly_to_json(p).dump(2) + "\n");
    };

    if (kind == "X") {
        sym_out(chromatic_sym(graph_from_json(input)));
    } else if (kind == "U") {
        sym_out(redei_berge(digraph_from_json(input)));
    } else if (kind == "Y") {
        ncsym_out(Y_chromatic(graph_from_json(input)));
    } else if (kind == "W") {
        Digraph X = digraph_from_json(input);
        if (!X.loopless()) throw BoundViolation("W requires a loopless digraph");
        ncsym_out(W_redei(X));
    } else if (kind == "chromatic-poly") {
        poly_out(chromatic_poly(graph_from_json(input)));
    } else if (kind == "rb-poly") {
        poly_out(redei_berge_poly(digraph_from_json(input)));
    } else if (kind == "cover-poly") {
        Digraph X = digraph_from_json(input);
        if (!X.loopless())
            throw BoundViolation("the cover polynomial requires a loopless digraph");
        auto slices = cover_polynomial(X);
        if (format == "table") {
            std::ostringstream os;
            for (size_t j = 0; j < slices.size(); ++j)
                os << "n^" << j << ": " << slices[j].to_string() << "\n";
            emit(out_path, os.str());
        } else {
            Json arr = Json::array();
            for (size_t j = 0; j < slices.size(); ++j)
                arr.push_back({{"n_power", j}, {"poly", slices[j].to_string()}});
            emit(out_path, Json{{"slices", arr}}.dump(2) + "\n");
        }
    } else if (kind == "xi-x0") {
        Digraph X = digraph_from_json(input);
        if (!X.loopless())
            throw BoundViolation("path covers require a loopless digraph");
        sym_out(path_cycle_x0(X));
    } else {
        throw UsageError("unknown compute kind: " + kind);
    }
    return 0;
}

int run_verify(const std::string& suite, int n, std::uint64_t seed, bool unsafe,
               const std::string& out_path) {
    auto it = suite_registry().find(suite);
    if (it == suite_registry().end()) throw UsageError("unknown suite: " + suite);
    const SuiteSpec& spec = it->second;
    int bound = (n > 0) ? n : spec.default_n;
    if (bound > spec.safe_cap && !unsafe)
        throw BoundViolation("bound " + std::to_string(bound) + " exceeds the safe cap " +
                             std::to_string(spec.safe_cap) +
                             " for this suite (use --unsafe-bounds to lift)");
    SuiteReport rep = spec.run(bound, seed);
    std::ostringstream os;
    for (auto& [label, ok] : rep.instances)
        os << label << (ok ? " PASS" : " FAIL") << "\n";
    os << "suite " << rep.suite << ": "
       << (rep.instances.size() - rep.failures()) << "/" << rep.instances.size()
       << " pass\n";
    emit(out_path, os.str());
    return rep.all_pass() ? 0 : kExitVerifyFail;
}

int run_enumerate(const std::string& kind, int n, const std::string& out_path) {
    if (n < 1) throw UsageError("--n must be a positive integer");
    std::ostringstream os;
    long long count = 0;
    auto cap = [&](int limit, const char* what) {
        if (n > limit)
            throw BoundViolation(std::string(what) + " enumeration is limited to n <= " +
                                 std::to_string(limit));
    };
    if (kind == "posets" || kind == "posets-iso") {
        cap(6, "poset");
        for (const auto& P : enumerate_posets(n, kind == "posets-iso")) {
            os << detail::enc(P) << "\n";
            ++count;
        }
    } else if (kind == "nuio-irreducible") {
        cap(8, "unit interval order");
        for (const auto& P : enumerate_irreducible_nuio(n)) {
            os << detail::enc(P) << "\n";
            ++count;
        }
    } else if (kind == "tournaments") {
        cap(6, "tournament");
        for (const auto& T : enumerate_tournaments(n)) {
            os << detail::enc(T) << "\n";
            ++count;
        }
    } else if (kind == "bags") {
        cap(20, "bag");
        for (const auto& lam : all_int_partitions(n)) {
            os << detail::enc(bag_of_sticks(lam)) << "\n";
            ++count;
        }
    } else {
        throw UsageError("unknown enumerate kind: " + kind);
    }
    os << "count: " << count << "\n";
    emit(out_path, os.str());
    return 0;
}

Graph complete_multipartite(const IntPartition& lam) {
    Graph G;
    G.n = lam.weight();
    std::vector<int> part;
    for (size_t bi = 0; bi < lam.parts().size(); ++bi)
        for (int i = 0; i < lam.parts()[bi]; ++i) part.push_back(static_cast<int>(bi));
    for (int a = 1; a <= G.n; ++a)
        for (int b = a + 1; b <= G.n; ++b)
            if (part[a - 1] != part[b - 1]) G.add_edge(a, b);
    return G;
}

int run_search(const std::string& target, int n, const std::string& out_path) {
    if (n < 1) throw UsageError("--n must be a positive integer");
    Json findings = Json::array();
    if (target == "e-negative-uio" || target == "h-negative-uio") {
        if (n > 7) throw BoundViolation("unit interval scan is limited to n <= 7");
        for (int k = 1; k <= n; ++k)
            for (const auto& P : detail::nuio_up_to_iso(k)) {
                PositivityVerdict v =
                    target == "e-negative-uio"
                        ? positivity(chromatic_sym(inc(P)), SymBasis::e)
                        : positivity(redei_berge(digraph_of(P)), SymBasis::h);
                if (!v.positive)
                    findings.push_back({{"poset", poset_to_json(P)},
                                        {"key", partition_key(*v.certificate)},
                                        {"coeff", rational_to_string(v.coefficient)}});
            }
    } else if (target == "equal-U-nonisomorphic-posets") {
        if (n > 5) throw BoundViolation("the poset collision scan is limited to n <= 5");
        for (int k = 1; k <= n; ++k) {
            std::map<std::string, std::vector<Poset>> by_u;
            for (const auto& P : enumerate_posets(k, true))
                by_u[sym_to_json(redei_berge(digraph_of(P))).dump()].push_back(P);
            for (auto& [key, group] : by_u) {
                if (group.size() < 2) continue;
                // re-verify by exact expansion equality, pairwise
                bool equal = true;
                for (size_t i = 1; i < group.size(); ++i)
                    if (!(redei_berge(digraph_of(group[i])) ==
                          redei_berge(digraph_of(group[0]))))
                        equal = false;
                Json posets = Json::array();
                for (const auto& P : group) posets.push_back(poset_to_json(P));
                findings.push_back({{"posets", posets}, {"reverified", equal}});
            }
        }
    } else if (target == "equal-X-nonisomorphic-complete-multipartite") {
        if (n > 8) throw BoundViolation("the multipartite scan is limited to n <= 8");
        for (int k = 1; k <= n; ++k) {
            std::map<std::string, std::vector<IntPartition>> by_x;
            for (const auto& lam : all_int_partitions(k))
                by_x[sym_to_json(chromatic_sym(complete_multipartite(lam))).dump()]
                    .push_back(lam);
            for (auto& [key, group] : by_x)
                if (group.size() >= 2) {
                    Json types = Json::array();
                    for (const auto& lam : group) types.push_back(partition_key(lam));
                    findings.push_back({{"part_sizes", types}});
                }
        }
    } else {
        throw UsageError("unknown search target: " + target);
    }
    emit(out_path,
         Json{{"target", target}, {"findings", findings}}.dump(2) + "\n");
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact chromatic and Redei-Berge invariant toolkit"};
    app.require_subcommand(1);

    std::string kind, in_path, out_path, basis = "m", format = "json";
    int n = 0;
    std::uint64_t seed = 1;
    bool unsafe = false;

    auto* compute = app.add_subcommand("compute", "compute an invariant expansion");
    compute->add_option("kind", kind,
                        "one of X, U, Y, W, chromatic-poly, rb-poly, cover-poly, xi-x0")
        ->required();
    compute->add_option("--in", in_path, "input structure JSON")->required();
    compute->add_option("--out", out_path, "output file (default stdout)");
    compute->add_option("--basis", basis, "m, e, p, h, s, M, or F");
    compute->add_option("--format", format)->check(CLI::IsMember({"json", "table"}));

    auto* verify = app.add_subcommand("verify", "run a named verification suite");
    verify->add_option("suite", kind, "suite name")->required();
    verify->add_option("--n", n, "size bound (default per suite)");
    verify->add_option("--seed", seed, "seed for sampled instances");
    verify->add_flag("--unsafe-bounds", unsafe, "lift the per-suite safe caps");
    verify->add_option("--out", out_path, "report file (default stdout)");
    verify->add_option("--format", format)->check(CLI::IsMember({"json", "table"}));

    auto* enumerate = app.add_subcommand("enumerate", "list structures canonically");
    enumerate
        ->add_option("kind", kind,
                     "posets, posets-iso, nuio-irreducible, tournaments, or bags")
        ->required();
    enumerate->add_option("--n", n, "number of elements")->required();
    enumerate->add_option("--out", out_path, "output file (default stdout)");

    auto* search = app.add_subcommand("search", "scan for counterexamples/collisions");
    search
        ->add_option("target", kind,
                     "e-negative-uio, h-negative-uio, equal-U-nonisomorphic-posets, or "
                     "equal-X-nonisomorphic-complete-multipartite")
        ->required();
    search->add_option("--n", n, "scan sizes 1..n")->required();
    search->add_option("--out", out_path, "findings file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (compute->parsed()) return run_compute(kind, in_path, basis, out_path, format);
        if (verify->parsed()) return run_verify(kind, n, seed, unsafe, out_path);
        if (enumerate->parsed()) return run_enumerate(kind, n, out_path);
        if (search->parsed()) return run_search(kind, n, out_path);
    } catch (const MalformedInput& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const BoundViolation& e) {
        std::cerr << "bound violation: " << e.what() << "\n";
        return kExitBounds;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBounds;
    }
    return 0;
}
