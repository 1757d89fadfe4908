#include <catch2/catch_amalgamated.hpp>

#include "rbsym/graph.hpp"

using namespace rbsym;

namespace {

Poset chain(int n) {
    std::vector<std::pair<int, int>> rel;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v) rel.push_back({u, v});
    return Poset(n, rel);
}

Poset antichain(int n) { return Poset(n, {}); }

bool is_acyclic(const Digraph& X) {
    // a digraph is acyclic iff some topological order exists
    std::vector<bool> removed(X.n + 1, false);
    for (int step = 0; step < X.n; ++step) {
        int src = 0;
        for (int v = 1; v <= X.n && src == 0; ++v) {
            if (removed[v]) continue;
            bool has_in = false;
            for (auto& [a, b] : X.arcs)
                if (b == v && !removed[a]) has_in = true;
            if (!has_in) src = v;
        }
        if (src == 0) return false;
        removed[src] = true;
    }
    return true;
}

}  // namespace

TEST_CASE("poset construction and validation") {
    CHECK_THROWS(Poset(3, {{1, 2}, {2, 1}}));
    CHECK_THROWS(Poset(3, {{1, 1}}));
    CHECK_THROWS(Poset(3, {{1, 2}, {2, 3}}));  // not transitive as given
    CHECK(Poset(3, {{1, 2}, {2, 3}}, /*from_covers=*/true).less(1, 3));
    CHECK(chain(3).covers() == std::vector<std::pair<int, int>>{{1, 2}, {2, 3}});
}

TEST_CASE("incomparability graph and poset digraph") {
    auto two_chain = chain(2);
    CHECK(inc(two_chain).edges.empty());
    CHECK(digraph_of(two_chain) == Digraph(2, {{1, 2}}));

    auto anti = antichain(3);
    CHECK(inc(anti).edges.size() == 3);
    CHECK(digraph_of(anti).arcs.empty());

    Poset V(3, {{1, 3}, {2, 3}});
    CHECK(inc(V) == Graph(3, {{1, 2}}));

    for (const auto& P : enumerate_posets(4, false)) {
        auto D = digraph_of(P);
        CHECK(is_acyclic(D));
        // transitively closed
        for (auto& [u, v] : D.arcs)
            for (auto& [x, w] : D.arcs)
                if (v == x) CHECK(D.has_arc(u, w));
        CHECK(opposite(D) == digraph_of(P.dual()));
        // inc is the complement of the comparability graph
        for (int u = 1; u <= P.n(); ++u)
            for (int v = u + 1; v <= P.n(); ++v)
                CHECK(inc(P).has_edge(u, v) == (!P.less(u, v) && !P.less(v, u)));
    }
}

TEST_CASE("complement, product, ordinal sum") {
    auto edge = Digraph(2, {{1, 2}});
    CHECK(complement(edge) == Digraph(2, {{1, 1}, {2, 2}, {2, 1}}));
    CHECK(complement(complement(edge)) == edge);

    Digraph T1(1, {});
    CHECK(product(T1, T1) == Digraph(2, {{1, 2}}));

    CHECK(ordinal_sum(chain(1), chain(1)) == chain(2));
    CHECK(ordinal_sum(chain(2), antichain(1)) == chain(3));
}

TEST_CASE("deletion and contraction") {
    auto edge = Digraph(2, {{1, 2}});
    CHECK(contract_arc(edge, {1, 2}) == Digraph(1, {}));
    CHECK(delete_arc(edge, {1, 2}) == Digraph(2, {}));
    CHECK_THROWS(delete_arc(edge, {2, 1}));
    CHECK_THROWS(contract_arc(Digraph(1, {{1, 1}}), {1, 1}));

    auto tri = Graph(3, {{1, 2}, {2, 3}, {1, 3}});
    CHECK(contract_edge(tri, {2, 3}) == Graph(2, {{1, 2}}));
    CHECK(delete_edge(tri, {1, 2}).edges.size() == 2);

    auto c3 = chain(3);
    auto del = poset_delete_covering(c3, {1, 2});
    CHECK(del.strict() == std::set<std::pair<int, int>>{{2, 3}, {1, 3}});
    CHECK_THROWS(poset_delete_covering(c3, {1, 3}));  // not a covering
    CHECK(poset_contract_covering(c3, {2, 3}) == chain(2));
}

TEST_CASE("deleting or contracting a covering mirrors the incomparability graph, n <= 4") {
    for (int n = 2; n <= 4; ++n)
        for (const auto& P : enumerate_posets(n, false))
            for (auto e : P.covers()) {
                auto key = std::minmax(e.first, e.second);
                // inc(P \ e) = inc(P) + e
                auto expected = inc(P);
                expected.add_edge(key.first, key.second);
                CHECK(inc(poset_delete_covering(P, e)) == expected);
                // inc(P / e) = (inc(P) + e) / e
                CHECK(inc(poset_contract_covering(P, e)) ==
                      contract_edge(expected, {key.first, key.second}));
            }
}

TEST_CASE("linear and quasi-linear extensions") {
    CHECK(linear_extensions(antichain(4)).size() == 24);
    CHECK(quasi_linear_extensions(antichain(4)).size() == 24);
    CHECK(linear_extensions(chain(4)).size() == 1);
    CHECK(quasi_linear_extensions(chain(4)).size() == 1);

    Poset V(3, {{1, 3}, {2, 3}});
    CHECK(linear_extensions(V).size() == 2);
    // only 123 and 213 avoid an immediate descent (3 must come last)
    CHECK(quasi_linear_extensions(V).size() == 2);
    // a single relation 1 < 3 leaves four descent-free listings
    CHECK(quasi_linear_extensions(Poset(3, {{1, 3}})).size() == 4);

    // every linear extension is quasi-linear
    for (const auto& P : enumerate_posets(4, false)) {
        auto lin = linear_extensions(P);
        auto quasi = quasi_linear_extensions(P);
        for (const auto& sigma : lin)
            CHECK(std::find(quasi.begin(), quasi.end(), sigma) != quasi.end());
    }
}

TEST_CASE("hamiltonian counts and tournaments") {
    CHECK(hamiltonian_paths(transitive_tournament(3)) == 1);
    auto c3 = Digraph(3, {{1, 2}, {2, 3}, {3, 1}});
    CHECK(hamiltonian_cycles(c3) == 1);
    CHECK(hamiltonian_paths(c3) == 3);
    CHECK(is_tournament(c3));
    CHECK_FALSE(is_tournament(Digraph(2, {{1, 2}, {2, 1}})));

    CHECK(enumerate_tournaments(3).size() == 8);
    for (int n = 1; n <= 4; ++n)
        for (const auto& T : enumerate_tournaments(n)) CHECK(hamiltonian_paths(T) % 2 == 1);
}

TEST_CASE("hamiltonian cycle in the complement digraph detects irreducibility, n <= 5") {
    for (int n = 1; n <= 5; ++n)
        for (const auto& P : enumerate_posets(n, true))
            CHECK((hamiltonian_cycles(complement(digraph_of(P))) > 0) == is_irreducible(P));
}

TEST_CASE("stable partitions") {
    auto k3 = Graph(3, {{1, 2}, {2, 3}, {1, 3}});
    auto st = stable_partitions(k3);
    REQUIRE(st.size() == 1);
    CHECK(st[0] == SetPartition::bottom(3));

    CHECK(stable_partitions(Graph(3, {})).size() == 5);

    auto path = Graph(3, {{1, 2}, {2, 3}});
    auto sp = stable_partitions(path);
    REQUIRE(sp.size() == 2);
    CHECK(std::count(sp.begin(), sp.end(), SetPartition::parse("13/2")) == 1);
    CHECK(std::count(sp.begin(), sp.end(), SetPartition::bottom(3)) == 1);
}

TEST_CASE("bags of sticks") {
    CHECK(bag_of_sticks(IntPartition({2, 1})) == Digraph(3, {{1, 2}}));
    CHECK_FALSE(is_bag_of_sticks(Digraph(3, {{1, 2}, {2, 3}, {3, 1}})));
    CHECK_FALSE(is_bag_of_sticks(Digraph(3, {{1, 2}, {1, 3}})));
    CHECK_FALSE(is_bag_of_sticks(Digraph(1, {{1, 1}})));
    CHECK(is_bag_of_sticks(Digraph(3, {})));
    CHECK_THROWS(stick_type(Digraph(3, {{1, 2}, {1, 3}})));

    for (int n = 1; n <= 6; ++n)
        for (const auto& lam : all_int_partitions(n)) {
            auto X = bag_of_sticks(lam);
            CHECK(is_bag_of_sticks(X));
            CHECK(stick_type(X) == lam);
        }
}

TEST_CASE("path covers and path-cycle covers") {
    auto p3 = bag_of_sticks(IntPartition({3}));
    auto covers = path_covers(p3);
    REQUIRE(covers.size() == 4);
    std::map<IntPartition, int> by_type;
    for (auto& c : covers) ++by_type[c.type];
    CHECK(by_type[IntPartition({1, 1, 1})] == 1);
    CHECK(by_type[IntPartition({2, 1})] == 2);
    CHECK(by_type[IntPartition({3})] == 1);

    auto c3 = Digraph(3, {{1, 2}, {2, 3}, {3, 1}});
    bool found_full_cycle = false;
    for (auto& c : path_cycle_covers(c3))
        if (c.edges.size() == 3) {
            found_full_cycle = true;
            CHECK(c.cycles == IntPartition({3}));
            CHECK(c.paths == IntPartition(std::vector<int>{}));
        }
    CHECK(found_full_cycle);

    CHECK(path_cycle_covers(Digraph(3, {})).size() == 1);
    CHECK_THROWS(path_cycle_covers(Digraph(1, {{1, 1}})));
}

TEST_CASE("unit interval orders") {
    CHECK(unit_interval_order(3, {2}) == antichain(3));
    CHECK(unit_interval_order(3, {1}) == Poset(3, {{1, 3}}));
    CHECK_THROWS(unit_interval_order(4, {2, 1}));  // not non-decreasing
    CHECK_THROWS(unit_interval_order(4, {0, 2}));  // below the diagonal

    auto irred4 = enumerate_irreducible_nuio(4);
    REQUIRE(irred4.size() == 5);
    for (size_t i = 0; i < irred4.size(); ++i) {
        CHECK(is_irreducible(irred4[i]));
        for (size_t j = i + 1; j < irred4.size(); ++j)
            CHECK_FALSE(isomorphic(irred4[i], irred4[j]));
    }

    // every enumerated unit interval order passes the digraph closure test
    for (int n = 1; n <= 5; ++n)
        for (const auto& P : enumerate_all_nuio(n))
            CHECK(is_natural_unit_interval_digraph(digraph_of(P)));
    CHECK_FALSE(is_natural_unit_interval_digraph(Digraph(3, {{1, 2}})));
    CHECK_FALSE(is_natural_unit_interval_digraph(Digraph(2, {{2, 1}})));

    // Catalan counts and pairwise non-isomorphism of the full enumeration
    CHECK(enumerate_all_nuio(3).size() == 5);
    CHECK(enumerate_all_nuio(4).size() == 14);
    auto all5 = enumerate_all_nuio(5);
    CHECK(all5.size() == 42);
    std::set<std::uint64_t> forms;
    for (const auto& P : all5) forms.insert(canonical_form(P));
    CHECK(forms.size() == all5.size());

    // clique-coloring equality and the chain bound, n <= 6
    for (int n = 1; n <= 6; ++n)
        for (const auto& P : enumerate_all_nuio(n)) {
            auto G = inc(P);
            CHECK(chromatic_number(G) == clique_number(G));
            CHECK(incomparability_number(P) * chain_number(P) >= n);
        }
}

TEST_CASE("poset enumeration") {
    CHECK(enumerate_posets(3, false).size() == 19);
    CHECK(enumerate_posets(3, true).size() == 5);
    CHECK(enumerate_posets(4, false).size() == 219);
    CHECK(enumerate_posets(4, true).size() == 16);

    // labeled enumeration produces valid, distinct posets
    auto labeled = enumerate_posets(3, false);
    for (size_t i = 0; i < labeled.size(); ++i)
        for (size_t j = i + 1; j < labeled.size(); ++j)
            CHECK_FALSE(labeled[i] == labeled[j]);
}

TEST_CASE("irreducibility and connectedness") {
    for (int n = 2; n <= 4; ++n) CHECK_FALSE(is_irreducible(chain(n)));
    CHECK(is_irreducible(antichain(3)));
    CHECK_FALSE(is_irreducible(Poset(3, {{1, 3}, {2, 3}})));

    // a poset is irreducible iff its incomparability graph is connected
    for (int n = 1; n <= 5; ++n)
        for (const auto& P : enumerate_posets(n, true))
            CHECK(is_connected(inc(P)) == is_irreducible(P));
}

TEST_CASE("statistics") {
    CHECK(incomparability_number(chain(4)) == 1);
    CHECK(chain_number(chain(4)) == 4);
    CHECK(incomparability_number(antichain(4)) == 4);
    CHECK(chain_number(antichain(4)) == 1);

    auto k3 = Graph(3, {{1, 2}, {2, 3}, {1, 3}});
    CHECK(chromatic_number(k3) == 3);
    CHECK(clique_number(k3) == 3);
    CHECK(independence_number(k3) == 1);
    CHECK(chromatic_number(Graph(3, {{1, 2}, {2, 3}})) == 2);
}

TEST_CASE("broken cycle complex") {
    auto tri = Graph(3, {{1, 2}, {2, 3}, {1, 3}});
    CHECK(broken_cycle_complex(tri).size() == 6);

    auto forest = Graph(4, {{1, 2}, {3, 4}});
    CHECK(broken_cycle_complex(forest).size() == 4);

    // every element spans a forest: |S| = n - l(lambda(S))
    auto c4 = Graph(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}});
    for (auto& el : broken_cycle_complex(c4))
        CHECK(static_cast<int>(el.edges.size()) == 4 - el.type.length());

    // custom labelings must be injective and cover every edge
    std::map<std::pair<int, int>, int> bad{{{1, 2}, 1}, {{2, 3}, 1}, {{1, 3}, 2}};
    CHECK_THROWS(broken_cycle_complex(tri, bad));
}

TEST_CASE("canonical forms") {
    auto P = Poset(3, {{1, 3}});
    auto Q = Poset(3, {{2, 1}});
    CHECK(isomorphic(P, Q));
    CHECK_FALSE(isomorphic(P, chain(3)));
    CHECK(canonical_form(Graph(3, {{1, 2}})) == canonical_form(Graph(3, {{2, 3}})));
    CHECK_THROWS(canonical_mask(9, {}));
}
