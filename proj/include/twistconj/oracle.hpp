#pragma once

#include <optional>
#include <string>
#include <vector>

#include "twistconj/group.hpp"
#include "twistconj/reid.hpp"

namespace twistconj {

/// Finite search window: elements ((m,k),n) with |m|,|k| <= v_bound and
/// |n| <= n_bound; conjugators bounded likewise by conj_v_bound/conj_z_bound.
struct BoxSpec
{
    long v_bound = 6;
    long n_bound = 4;
    long conj_v_bound = 10;
    long conj_z_bound = 4;
};

/// Partition of the element box produced by closing the defining relation
/// h ~ g h t(g^-1) over all bounded conjugators. Conjugation images that
/// leave the box still act as union-find nodes: two box elements sharing an
/// outside image are conjugate through it. The result is a refinement of
/// the true class partition: it never merges non-conjugate elements, and
/// may leave conjugate elements split when every witness exceeds the
/// bounds.
struct Partition
{
    BoxSpec box;
    std::vector<Elem> elements; // fixed enumeration order (n, then m, then k)
    std::vector<long> block_of; // dense block ids in order of smallest member
    long block_count = 0;
    std::vector<long> block_sizes; // indexed by block id
    long merge_events = 0; // conjugation images that landed in the box
    long bridge_links = 0; // blocks joined through an outside image

    long index_of(const Elem& e) const; // -1 when outside the box
};

/// Serial reference sweep: applies the group operations literally for every
/// (conjugator, element) pair. Kept as the trusted baseline for the fast
/// kernel; the benchmark tool compares the two.
Partition brute_force_partition_reference(const Group& g, const Twist& t, const BoxSpec& box);

/// Fast sweep. Expands the conjugation action into per-level transported
/// vectors plus lattice shifts, and shards conjugators across OpenMP
/// threads; results are independent of jobs by construction.
Partition brute_force_partition(const Group& g, const Twist& t, const BoxSpec& box,
                                int jobs = 1);

struct Mismatch
{
    std::string kind; // "replay", "class", "conjugacy", "witness"
    Elem conjugator, h, image;
    std::string detail;
};

/// One row of the parity-table reproduction: elements of a class at levels
/// j mod 6 must all satisfy the stated coordinate-parity condition, and
/// empty cells must stay empty.
struct LevelCell
{
    int j; // 0..5
    std::string cls; // "B1".."B4"
    std::string condition; // "m+k even", ..., or "empty"
    long count = 0;
    bool ok = true;
};

struct CrossReport
{
    Partition partition;

    bool class_check_supported = false;
    long class_pairs_checked = 0;
    long replay_checked = 0;
    long conjugacy_checked = 0;
    long conjugacy_skipped_degenerate = 0;

    std::vector<Mismatch> mismatches; // empty on success (capped in output)
    long mismatch_total = 0;

    Cardinal analytic = Cardinal::infinite();
    bool analytic_finite = false;
    bool block_count_matches = false; // meaningful when analytic_finite

    std::vector<LevelCell> level_table; // built-in phi only
    bool level_table_ok = true;

    bool ok() const { return mismatch_total == 0 && level_table_ok; }
};

/// Runs the fast sweep with every check armed: each in-box image is replayed
/// through the plain group operations, endpoints must agree in class_id
/// (when supported), and the pair must be confirmed by are_twisted_conjugate
/// with its analytic witness replaying exactly. The primary tripwire of the
/// test suite.
CrossReport cross_validate(const Group& g, const Twist& t, const BoxSpec& box, int jobs = 1);

} // namespace twistconj
