#include <gtest/gtest.h>

#include <thread>

#include "oracles.hpp"
#include "properties.hpp"

using namespace schur;
using Blocks = std::vector<std::vector<residue>>;

namespace {

Enumerator& shared() {
    static Enumerator en;
    return en;
}

void expect_ok(const props::Outcome& o) {
    for (const auto& f : o.failures) ADD_FAILURE() << f;
}

}  // namespace

TEST(Enumerate, SmallOrders) {
    EXPECT_EQ(shared().omega(1), 1u);
    EXPECT_EQ(shared().omega(6), 7u);
    EXPECT_EQ(shared().omega(12), 32u);
    EXPECT_EQ(shared().omega(36), 284u);
    EXPECT_EQ(shared().omega(100), 563u);
}

TEST(Enumerate, OrderFourIsExactlyThreeRings) {
    auto four = enumerate_all(4);
    ASSERT_EQ(four.size(), 3u);
    EXPECT_TRUE(four.contains(trivial_ring(4).partition()));
    EXPECT_TRUE(four.contains(canonicalize(4, {{0}, {2}, {1, 3}})));
    EXPECT_TRUE(four.contains(discrete_ring(4).partition()));
}

TEST(Enumerate, CanonicalOrderWithoutDuplicates) {
    for (residue n = 1; n <= 40; ++n) {
        const auto& rings = shared().enumerate(n)->rings();
        for (std::size_t i = 1; i < rings.size(); ++i) ASSERT_LT(rings[i - 1], rings[i]) << n;
    }
}

TEST(Enumerate, BudgetOnOrder) {
    Enumerator small({.max_order = 20});
    EXPECT_EQ(small.omega(20), shared().omega(20));
    EXPECT_THROW(small.omega(21), BudgetExceeded);
    EXPECT_THROW(small.omega(0), std::invalid_argument);
}

TEST(Enumerate, BudgetOnRingCount) {
    Enumerator tight({.max_rings = 20});
    EXPECT_EQ(tight.omega(7), 4u);
    EXPECT_THROW(tight.omega(12), BudgetExceeded);
}

TEST(Enumerate, MinimalSectionsGiveTheSameSet) {
    Enumerator minimal({.minimal_sections = true});
    for (residue n = 1; n <= 128; ++n) ASSERT_EQ(minimal.omega(n), shared().omega(n)) << n;
    for (residue n = 1; n <= 72; ++n) ASSERT_TRUE(*minimal.enumerate(n) == *shared().enumerate(n)) << n;
}

TEST(Enumerate, VerifyOptionAcceptsEverything) {
    Enumerator checked({.verify = true});
    for (residue n = 1; n <= 48; ++n) ASSERT_NO_THROW(checked.enumerate(n)) << n;
}

TEST(Enumerate, ConcurrentCallersSeeOneResult) {
    Enumerator en;
    std::vector<std::shared_ptr<const RingSet>> got(8);
    std::vector<std::thread> pool;
    for (std::size_t i = 0; i < got.size(); ++i) pool.emplace_back([&, i] { got[i] = en.enumerate(60); });
    for (auto& t : pool) t.join();
    for (auto& g : got) EXPECT_EQ(g.get(), got[0].get());
    EXPECT_EQ(got[0]->size(), 1103u);
}

TEST(BruteForce, Examples) {
    EXPECT_EQ(brute_force_enumerate(3).size(), 2u);
    EXPECT_EQ(brute_force_enumerate(6).size(), 7u);
    EXPECT_EQ(brute_force_enumerate(2).size(), 1u);
    EXPECT_EQ(brute_force_enumerate(1).size(), 1u);
    EXPECT_THROW(brute_force_enumerate(11), BudgetExceeded);
    EXPECT_EQ(brute_force_enumerate(11, 11).size(), 4u);
}

TEST(BruteForce, EqualsEnumeratorUpToTen) {
    for (residue n = 1; n <= 10; ++n) ASSERT_EQ(brute_force_enumerate(n), *shared().enumerate(n)) << n;
}

TEST(BruteForce, IndependentExpansionOracleUpToEight) {
    for (residue n = 1; n <= 8; ++n) {
        std::vector<SchurRing> found;
        for (const auto& blocks : oracle::all_set_partitions(n))
            if (oracle::is_schur_by_expansion(n, blocks)) found.push_back(SchurRing::unchecked(canonicalize(n, blocks)));
        ASSERT_EQ(RingSet(n, found), *shared().enumerate(n)) << n;
    }
}

TEST(Classify, TrivialRings) {
    auto six = classify(trivial_ring(6));
    EXPECT_TRUE(six.is_trivial);
    EXPECT_FALSE(six.is_automorphic);
    EXPECT_TRUE(six.is_primitive);
    EXPECT_EQ(six.core_order, 6u);

    auto five = classify(trivial_ring(5));
    EXPECT_TRUE(five.is_trivial);
    EXPECT_TRUE(five.is_automorphic);
}

TEST(Classify, WedgeOverFour) {
    auto c = classify(SchurRing::from_partition(canonicalize(4, {{0}, {2}, {1, 3}})));
    EXPECT_TRUE(c.is_wedge_decomposable);
    ASSERT_TRUE(c.wedge_section);
    EXPECT_EQ(c.wedge_section->d, 2u);
    EXPECT_EQ(c.core_order, 2u);
    // Its classes are also the orbits of U(4) = {1, 3}.
    EXPECT_EQ(c.families(), (std::vector<std::string>{"automorphic", "wedge"}));
}

TEST(Classify, DirectProduct) {
    auto p = direct_product(discrete_ring(2), trivial_ring(3));
    auto c = classify(p);
    EXPECT_TRUE(c.is_direct_decomposable);
    ASSERT_TRUE(c.direct_factors);
    EXPECT_EQ(*c.direct_factors, (std::pair<residue, residue>{2, 3}));
    EXPECT_TRUE(c.is_automorphic);  // orbits of {1, 5} on Z_6
}

TEST(Classify, EveryRingIsInSomeFamily) {
    for (residue n = 1; n <= 40; ++n)
        for (const auto& s : *shared().enumerate(n)) {
            auto c = classify(s);
            ASSERT_FALSE(c.families().empty()) << props::show(s.partition());
            ASSERT_TRUE(s.is_s_subgroup(c.core_order));
            ASSERT_EQ(c.is_discrete, s == discrete_ring(n));
        }
}

TEST(CountByCore, Examples) {
    EXPECT_EQ(count_by_core(4, discrete_ring(4)), 1u);
    EXPECT_EQ(count_by_core(6, trivial_ring(6)), 1u);
    EXPECT_EQ(count_by_core(12, trivial_ring(4)), 2u);
    EXPECT_EQ(count_by_core(4, discrete_ring(2)), 1u);
    EXPECT_THROW(count_by_core(12, trivial_ring(5)), std::invalid_argument);
}

TEST(CountByCore, IndecomposableRingIsItsOwnCore) {
    for (residue n = 1; n <= 30; ++n)
        for (const auto& s : *shared().enumerate(n))
            if (!is_wedge_decomposable(s)) ASSERT_EQ(count_by_core(shared(), n, s), 1u) << props::show(s.partition());
}

class EnumeratorProperties : public ::testing::TestWithParam<residue> {};

TEST_P(EnumeratorProperties, AxiomsHold) { expect_ok(props::axioms(shared(), GetParam())); }

TEST_P(EnumeratorProperties, SubringsAndQuotientsAreEnumerated) {
    props::Outcome o;
    for (const auto& s : *shared().enumerate(GetParam())) o.merge(props::closure(shared(), s));
    expect_ok(o);
}

TEST_P(EnumeratorProperties, SingletonClosure) {
    props::Outcome o;
    for (const auto& s : *shared().enumerate(GetParam())) o.merge(props::singleton_closure(s));
    expect_ok(o);
}

TEST_P(EnumeratorProperties, CommutingSquare) {
    props::Outcome o;
    for (const auto& s : *shared().enumerate(GetParam())) o.merge(props::commuting_square(s));
    expect_ok(o);
}

TEST_P(EnumeratorProperties, CountingIdentity) {
    props::Outcome o;
    for (const auto& s : *shared().enumerate(GetParam())) o.merge(props::counting_identity(s));
    expect_ok(o);
}

TEST_P(EnumeratorProperties, PrimitiveRings) { expect_ok(props::primitivity(shared(), GetParam())); }

TEST_P(EnumeratorProperties, CoreCountsForPrimitiveCores) { expect_ok(props::core_counts(shared(), GetParam())); }

INSTANTIATE_TEST_SUITE_P(UpToThirty, EnumeratorProperties, ::testing::Range<residue>(1, 31));

TEST(Table, DeterministicAcrossJobCounts) {
    auto one = compute_table(1, 64, EnumerationOptions{}, 1);
    auto four = compute_table(1, 64, EnumerationOptions{}, 4);
    EXPECT_EQ(render_csv(one), render_csv(four));
    EXPECT_EQ(render_json(one), render_json(four));
}

TEST(Table, RowsAndSummary) {
    auto rows = compute_table(1, 1);
    EXPECT_EQ(render_csv(rows), "n,omega,method,reference,match\n1,1,enumerated,1,MATCH\n"
                                "# rows=1 computed=1 skipped=0 mismatches=0\n");
    auto sixty = compute_table(60, 60);
    EXPECT_EQ(*sixty[0].omega, 1103u);
    EXPECT_TRUE(*sixty[0].reference_match);
}

TEST(Table, RowsAboveBudgetAreSkipped) {
    auto rows = compute_table(30, 34, EnumerationOptions{.max_order = 32});
    auto s = summarize(rows);
    EXPECT_EQ(s.rows, 5u);
    EXPECT_EQ(s.computed, 3u);
    EXPECT_EQ(s.skipped, 2u);
    EXPECT_EQ(s.mismatches, 0u);
    EXPECT_EQ(rows[4].method, "skipped");
    EXPECT_NE(render_csv(rows).find("34,,skipped,"), std::string::npos);
}

TEST(Table, RejectsBadRange) {
    EXPECT_THROW(compute_table(0, 3), std::invalid_argument);
    EXPECT_THROW(compute_table(5, 3), std::invalid_argument);
}
