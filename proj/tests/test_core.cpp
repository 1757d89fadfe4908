#include <catch2/catch_amalgamated.hpp>

#include "rbsym/enumerate.hpp"
#include "rbsym/partitions.hpp"
#include "rbsym/set_partition.hpp"

using namespace rbsym;

TEST_CASE("composition <-> subset bijection") {
    Composition a({2, 1, 3});
    auto I = a.to_subset();
    CHECK(I.ambient() == 6);
    CHECK(I.elements() == std::vector<int>{2, 3});
    CHECK(Composition::from_subset(I) == a);

    CHECK(Composition({5}).to_subset().elements().empty());
    auto ones = Composition::from_subset(PositionSubset::of(4, {1, 2, 3}));
    CHECK(ones == Composition({1, 1, 1, 1}));

    CHECK_THROWS(PositionSubset::of(4, {4}));

    // round trips, all n <= 7
    for (int n = 1; n <= 7; ++n) {
        auto comps = all_compositions(n);
        CHECK(comps.size() == (n >= 1 ? (1u << (n - 1)) : 1u));
        for (const auto& c : comps) CHECK(Composition::from_subset(c.to_subset()) == c);
    }
}

TEST_CASE("subset complement and opposite are involutions") {
    for (int n = 2; n <= 7; ++n) {
        for (unsigned m = 0; m < (1u << (n - 1)); ++m) {
            PositionSubset I(n, m);
            CHECK(I.complement().complement() == I);
            CHECK(I.opposite().opposite() == I);
        }
    }
    // alpha^op reverses the part list
    for (const auto& a : all_compositions(6)) {
        auto rev = a.parts();
        std::reverse(rev.begin(), rev.end());
        CHECK(Composition::from_subset(a.to_subset().opposite()) == Composition(rev));
        CHECK(a.opposite() == Composition(rev));
    }
}

TEST_CASE("composition refinement") {
    CHECK(Composition({1, 1, 1}).is_finer_than(Composition({2, 1})));
    CHECK_FALSE(Composition({2, 1}).is_finer_than(Composition({1, 2})));
    CHECK(Composition({2, 1}).is_finer_than(Composition({2, 1})));
    CHECK_THROWS(Composition({2}).is_finer_than(Composition({3})));
}

TEST_CASE("partition statistics") {
    IntPartition lam({1, 3, 2, 1});
    CHECK(lam.parts() == std::vector<int>{3, 2, 1, 1});
    CHECK(lam.weight() == 7);
    CHECK(lam.length() == 4);
    CHECK(lam.conjugate() == IntPartition({4, 2, 1}));
    CHECK(lam.conjugate().conjugate() == lam);
    CHECK(IntPartition::parse("2,1,1").to_string() == "2,1,1");
}

TEST_CASE("set partition lattice operations") {
    auto pi = SetPartition::parse("13/2");
    auto sigma = SetPartition::parse("12/3");
    CHECK(pi.meet(sigma) == SetPartition::bottom(3));
    CHECK(pi.join(sigma) == SetPartition::top(3));
    CHECK(pi.meet(pi) == pi);
    CHECK(pi.join(pi) == pi);
    CHECK(SetPartition::parse("12/34").join(SetPartition::parse("14/23")) ==
          SetPartition::top(4));
    CHECK_THROWS(pi.meet(SetPartition::parse("12/34")));
}

TEST_CASE("lattice axioms and partial order, n <= 5") {
    for (int n = 1; n <= 5; ++n) {
        auto parts = all_set_partitions(n);
        for (const auto& a : parts)
            for (const auto& b : parts) {
                CHECK(a.meet(b) == b.meet(a));
                CHECK(a.join(b) == b.join(a));
                CHECK(a.meet(a.join(b)) == a);
                CHECK(a.join(a.meet(b)) == a);
                CHECK(a.meet(b).leq(a));
                CHECK(a.leq(a.join(b)));
                if (a.leq(b) && b.leq(a)) CHECK(a == b);
            }
        if (n <= 4)
            for (const auto& a : parts)
                for (const auto& b : parts)
                    for (const auto& c : parts) {
                        CHECK(a.meet(b).meet(c) == a.meet(b.meet(c)));
                        if (a.leq(b) && b.leq(c)) CHECK(a.leq(c));
                    }
    }
}

TEST_CASE("mobius function against the recursive defining relation") {
    // oracle: sum_{sigma <= tau <= pi} mu(tau, pi) = [sigma == pi]
    for (int n = 1; n <= 5; ++n) {
        auto parts = all_set_partitions(n);
        for (const auto& sigma : parts)
            for (const auto& pi : parts) {
                if (!sigma.leq(pi)) continue;
                BigInt total = 0;
                for (const auto& tau : parts)
                    if (sigma.leq(tau) && tau.leq(pi)) total += mobius(tau, pi);
                CHECK(total == (sigma == pi ? 1 : 0));
            }
    }
    CHECK(mobius(SetPartition::bottom(3), SetPartition::top(3)) == 2);
    CHECK(mobius(SetPartition::bottom(2), SetPartition::top(2)) == -1);
    CHECK(mobius(SetPartition::parse("12/3"), SetPartition::parse("12/3")) == 1);
    CHECK_THROWS(mobius(SetPartition::top(3), SetPartition::bottom(3)));
}

TEST_CASE("set partition statistics") {
    auto pi = SetPartition::parse("12/3/4");
    CHECK(pi.type() == IntPartition({2, 1, 1}));
    CHECK(pi.type_multiplicity() == 2);
    CHECK(pi.block_factorial() == 2);

    auto bot = SetPartition::bottom(4);
    CHECK(bot.type() == IntPartition({1, 1, 1, 1}));
    CHECK(bot.type_multiplicity() == 24);
    CHECK(bot.block_factorial() == 1);

    auto top = SetPartition::top(4);
    CHECK(top.type() == IntPartition({4}));
    CHECK(top.type_multiplicity() == 1);
    CHECK(top.block_factorial() == 24);
}

TEST_CASE("pi plus and slash") {
    auto pi = SetPartition::parse("12/3");
    CHECK(pi.plus() == SetPartition::parse("12/34"));
    CHECK(pi.slash() == SetPartition::parse("12/3/4"));
    CHECK(SetPartition::top(3).plus() == SetPartition::top(4));
    CHECK(SetPartition::bottom(3).plus() == SetPartition::parse("1/2/34"));
}

TEST_CASE("enumeration counts") {
    CHECK(all_set_partitions(3).size() == 5);
    CHECK(all_set_partitions(5).size() == 52);
    CHECK(all_int_partitions(5).size() == 7);
    CHECK(all_permutations(3).size() == 6);
    CHECK(bell_number(6) == 203);

    // duplicate-free
    auto sp = all_set_partitions(4);
    for (size_t i = 0; i < sp.size(); ++i)
        for (size_t j = i + 1; j < sp.size(); ++j) CHECK(!(sp[i] == sp[j]));
}
