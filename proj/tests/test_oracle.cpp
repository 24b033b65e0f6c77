#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "twistconj/oracle.hpp"
#include "twistconj/reid.hpp"

using namespace twistconj;

TEST_CASE("fast kernel agrees with the serial reference")
{
    const Group g;

    SUBCASE("level-reversing twist")
    {
        const BoxSpec box{4, 2, 5, 2};
        const Partition ref = brute_force_partition_reference(g, g.phi(), box);
        const Partition fast1 = brute_force_partition(g, g.phi(), box, 1);
        const Partition fast4 = brute_force_partition(g, g.phi(), box, 4);
        CHECK(ref.block_of == fast1.block_of);
        CHECK(ref.merge_events == fast1.merge_events);
        CHECK(ref.bridge_links == fast1.bridge_links);
        CHECK(fast1.block_of == fast4.block_of);
        CHECK(fast1.merge_events == fast4.merge_events);
    }
    SUBCASE("level-preserving twist")
    {
        const BoxSpec box{4, 2, 4, 2};
        const Twist phi2 = g.twist_pow(g.phi(), 2);
        const Partition ref = brute_force_partition_reference(g, phi2, box);
        const Partition fast = brute_force_partition(g, phi2, box, 2);
        CHECK(ref.block_of == fast.block_of);
        CHECK(ref.merge_events == fast.merge_events);
    }
    SUBCASE("identity twist")
    {
        const BoxSpec box{4, 1, 4, 1};
        const Twist id = g.identity_twist();
        const Partition ref = brute_force_partition_reference(g, id, box);
        const Partition fast = brute_force_partition(g, id, box, 2);
        CHECK(ref.block_of == fast.block_of);
    }
}

TEST_CASE("the built-in twist partitions small boxes into the four classes")
{
    const Group g;
    const Partition p = brute_force_partition(g, g.phi(), BoxSpec{4, 2, 6, 2}, 1);
    CHECK(p.block_count == 4);

    // blocks agree with the analytic classes element by element
    ConjContext ctx(g, g.phi());
    std::set<std::pair<long, std::string>> pairs;
    for (std::size_t i = 0; i < p.elements.size(); ++i)
        pairs.insert({p.block_of[i], class_name(ctx, class_id(ctx, p.elements[i])).value()});
    CHECK(pairs.size() == 4); // one name per block
}

TEST_CASE("cross-validation of the built-in twist")
{
    const Group g;
    const CrossReport r = cross_validate(g, g.phi(), BoxSpec{4, 2, 6, 2}, 1);
    CHECK(r.ok());
    CHECK(r.partition.block_count == 4);
    CHECK(r.mismatch_total == 0);
    CHECK(r.class_check_supported);
    CHECK(r.replay_checked == r.partition.merge_events + r.partition.bridge_links);
    CHECK(r.conjugacy_checked + r.conjugacy_skipped_degenerate == r.replay_checked);
    CHECK(r.conjugacy_skipped_degenerate == 0);
    CHECK(r.analytic_finite);
    CHECK(r.block_count_matches);
    CHECK(r.level_table.size() == 24);
    CHECK(r.level_table_ok);
}

TEST_CASE("tiny conjugator bounds under-merge but never contradict")
{
    const Group g;
    // level-0 conjugators only: levels can never merge, so blocks >> 4
    const CrossReport r = cross_validate(g, g.phi(), BoxSpec{4, 2, 1, 0}, 1);
    CHECK(r.mismatch_total == 0);
    CHECK(r.partition.block_count > 4);
    CHECK(!r.block_count_matches); // under-merged at these bounds
    CHECK(r.level_table_ok); // table uses class labels, not blocks
}

TEST_CASE("stability: enlarging conjugator bounds only refines upward")
{
    const Group g;
    const Partition small = brute_force_partition(g, g.phi(), BoxSpec{4, 2, 3, 1}, 1);
    const Partition big = brute_force_partition(g, g.phi(), BoxSpec{4, 2, 6, 2}, 1);

    CHECK(big.merge_events >= small.merge_events);
    CHECK(big.block_count <= small.block_count);
    // no split: same block in the small run implies same block in the big run
    std::set<std::pair<long, long>> small_to_big;
    for (std::size_t i = 0; i < small.elements.size(); ++i)
        small_to_big.insert({small.block_of[i], big.block_of[i]});
    CHECK(static_cast<long>(small_to_big.size()) == small.block_count);
}

TEST_CASE("level-preserving twists never merge across levels")
{
    const Group g;
    const Twist phi2 = g.twist_pow(g.phi(), 2);
    const Partition p = brute_force_partition(g, phi2, BoxSpec{4, 2, 6, 2}, 1);
    for (std::size_t i = 0; i < p.elements.size(); ++i)
        for (std::size_t j = i + 1; j < p.elements.size(); ++j)
            if (p.block_of[i] == p.block_of[j])
                REQUIRE(p.elements[i].n == p.elements[j].n);
}

TEST_CASE("identity twist on the level-0 slice merges plain conjugation orbits")
{
    const Group g;
    const Partition p =
        brute_force_partition(g, g.identity_twist(), BoxSpec{5, 0, 5, 2}, 1);

    // (0,0) is alone in its class
    const long origin = p.index_of(make_elem(0, 0, 0));
    REQUIRE(origin >= 0);
    CHECK(p.block_sizes[static_cast<std::size_t>(p.block_of[static_cast<std::size_t>(origin)])] == 1);

    // the block of (1,0) is exactly its two-sided matrix orbit inside the box
    std::set<long> expected;
    for (const bool forward : {true, false}) {
        IntVec v{Int(1), Int(0)};
        for (int step = 0; step < 30; ++step) {
            const long idx = p.index_of(Elem{v, Int(0)});
            if (idx >= 0)
                expected.insert(idx);
            v = forward ? g.alpha().apply(v) : g.alpha_inv().apply(v);
        }
    }
    const long blk = p.block_of[static_cast<std::size_t>(p.index_of(make_elem(1, 0, 0)))];
    std::set<long> got;
    for (std::size_t i = 0; i < p.elements.size(); ++i)
        if (p.block_of[i] == blk)
            got.insert(static_cast<long>(i));
    CHECK(got == expected);
}

TEST_CASE("abelian slice: lattice action of the level matrix has one class")
{
    const Group g;
    // M = A, eps = +1 restricted to level 0 with level-0 conjugators is the
    // twisted conjugacy of the lattice endomorphism A; det(I - A) = -1 means
    // a single class.
    const Twist abelian = g.twist(g.alpha(), 1);
    const Partition p = brute_force_partition(g, abelian, BoxSpec{6, 0, 10, 0}, 1);
    CHECK(p.block_count == 1);
    CHECK(reidemeister_abelian(g.alpha()) == 1);
}

TEST_CASE("cross-validation handles twists without class labels")
{
    const Group g;
    const Twist phi2 = g.twist_pow(g.phi(), 2);
    const CrossReport r = cross_validate(g, phi2, BoxSpec{3, 1, 4, 1}, 1);
    CHECK(!r.class_check_supported);
    CHECK(r.class_pairs_checked == 0);
    CHECK(r.level_table.empty());
    CHECK(r.mismatch_total == 0);
    CHECK(!r.analytic_finite);
    CHECK(r.conjugacy_checked == r.replay_checked); // no degenerate levels for phi^2
}

TEST_CASE("cross-validation counts degenerate-level skips instead of failing")
{
    const Group g;
    const CrossReport r = cross_validate(g, g.identity_twist(), BoxSpec{3, 1, 3, 1}, 1);
    CHECK(r.mismatch_total == 0);
    CHECK(r.conjugacy_skipped_degenerate > 0); // level 0 of the identity twist
}
