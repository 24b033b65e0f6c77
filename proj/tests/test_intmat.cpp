#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "twistconj/errors.hpp"
#include "twistconj/intmat.hpp"

using namespace twistconj;

namespace {

const IntMat A{{2, 1}, {1, 1}};
const IntMat M{{0, 1}, {-1, 0}};

IntMat random_mat(std::mt19937_64& rng, int k, long lo, long hi)
{
    std::uniform_int_distribution<long> dist(lo, hi);
    IntMat m(k, k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            m.at(i, j) = dist(rng);
    return m;
}

IntVec random_vec(std::mt19937_64& rng, int k, long lo, long hi)
{
    std::uniform_int_distribution<long> dist(lo, hi);
    IntVec v(k);
    for (int i = 0; i < k; ++i)
        v[i] = dist(rng);
    return v;
}

} // namespace

TEST_CASE("determinants of the core matrices")
{
    CHECK(det(IntMat::identity(2)) == 1);
    CHECK(det(A) == 1);
    CHECK(det(IntMat::identity(2) - A) == -1);
    CHECK(det(IntMat{{1, -1}, {1, 1}}) == 2); // I - M
}

TEST_CASE("Bareiss elimination agrees with cofactor expansion on random 3x3/4x4")
{
    std::mt19937_64 rng(7001);
    for (int iter = 0; iter < 200; ++iter) {
        const int k = 3 + (iter & 1);
        const IntMat m = random_mat(rng, k, -9, 9);
        // cofactor expansion along the first row as the independent route
        Int expected = 0;
        for (int j = 0; j < k; ++j) {
            IntMat sub(k - 1, k - 1);
            for (int r = 1; r < k; ++r)
                for (int c = 0, cc = 0; c < k; ++c) {
                    if (c == j)
                        continue;
                    sub.at(r - 1, cc++) = m.at(r, c);
                }
            const Int cof = det(sub);
            expected += (j % 2 == 0 ? m.at(0, j) : Int(-m.at(0, j))) * cof;
        }
        CHECK(det(m) == expected);
    }
}

TEST_CASE("matrix powers")
{
    CHECK(mat_pow(A, 0) == IntMat::identity(2));
    CHECK(mat_pow(A, -1) == IntMat{{1, -1}, {-1, 2}});
    CHECK(mat_pow(A, 2) == IntMat{{5, 3}, {3, 2}});
    CHECK(mat_pow(A, -1) * A == IntMat::identity(2));

    for (long n = -12; n <= 12; ++n)
        CHECK(det(mat_pow(A, n)) == 1);

    CHECK_THROWS_AS(mat_pow(IntMat{{2, 0}, {0, 1}}, -1), NonInvertibleError);
}

TEST_CASE("snf golden cases")
{
    SUBCASE("identity")
    {
        const auto s = snf(IntMat::identity(3));
        CHECK(s.d == IntMat::identity(3));
    }
    SUBCASE("I - M reduces to diag(1,2)")
    {
        const auto s = snf(IntMat{{1, -1}, {1, 1}});
        CHECK(s.d == IntMat{{1, 0}, {0, 2}});
        CHECK(s.u * IntMat{{1, -1}, {1, 1}} * s.v == s.d);
    }
    SUBCASE("zero matrix")
    {
        const IntMat z(2, 2);
        const auto s = snf(z);
        CHECK(s.d == z);
        CHECK(is_unimodular(s.u));
        CHECK(is_unimodular(s.v));
    }
}

TEST_CASE("snf round-trip and invariants on 500 random matrices")
{
    std::mt19937_64 rng(7002);
    for (int iter = 0; iter < 500; ++iter) {
        const int k = 2 + iter % 3;
        const IntMat m = random_mat(rng, k, -20, 20);
        const auto s = snf(m);
        CHECK(s.u * m * s.v == s.d);
        const Int du = det(s.u), dv = det(s.v);
        CHECK((du == 1 || du == -1));
        CHECK((dv == 1 || dv == -1));
        for (int i = 0; i < k; ++i) {
            CHECK(s.d.at(i, i) >= 0);
            for (int j = 0; j < k; ++j)
                if (i != j)
                    CHECK(s.d.at(i, j) == 0);
            if (i + 1 < k && s.d.at(i, i) != 0)
                CHECK((s.d.at(i + 1, i + 1) == 0 || divides(s.d.at(i, i), s.d.at(i + 1, i + 1))));
            if (i + 1 < k && s.d.at(i, i) == 0)
                CHECK(s.d.at(i + 1, i + 1) == 0);
        }
    }
}

TEST_CASE("snf is deterministic")
{
    std::mt19937_64 rng(7003);
    for (int iter = 0; iter < 50; ++iter) {
        const IntMat m = random_mat(rng, 3, -20, 20);
        const auto s1 = snf(m);
        const auto s2 = snf(m);
        CHECK(s1.d == s2.d);
        CHECK(s1.u == s2.u);
        CHECK(s1.v == s2.v);
    }
}

TEST_CASE("lattice membership")
{
    const IntMat i_minus_m{{1, -1}, {1, 1}};

    SUBCASE("zero vector always has the zero witness")
    {
        std::mt19937_64 rng(7004);
        const IntMat m = random_mat(rng, 2, -10, 10);
        const auto w = lattice_member(m, IntVec{Int(0), Int(0)});
        REQUIRE(w.has_value());
        CHECK(m.apply(*w) == IntVec{Int(0), Int(0)});
    }
    SUBCASE("(1,1) in (I-M)Z^2 with witness (1,0)")
    {
        const auto w = lattice_member(i_minus_m, IntVec{Int(1), Int(1)});
        REQUIRE(w.has_value());
        CHECK(*w == IntVec{Int(1), Int(0)});
    }
    SUBCASE("(1,0) is not in (I-M)Z^2")
    {
        CHECK(!lattice_member(i_minus_m, IntVec{Int(1), Int(0)}).has_value());
    }
    SUBCASE("witnesses replay and members are closed under addition")
    {
        std::mt19937_64 rng(7005);
        for (int iter = 0; iter < 200; ++iter) {
            const IntMat m = random_mat(rng, 2, -8, 8);
            const IntVec a = m.apply(random_vec(rng, 2, -10, 10));
            const IntVec b = m.apply(random_vec(rng, 2, -10, 10));
            const auto wa = lattice_member(m, a);
            const auto wb = lattice_member(m, b);
            REQUIRE(wa.has_value());
            REQUIRE(wb.has_value());
            CHECK(m.apply(*wa) == a);
            const auto wsum = lattice_member(m, vec_add(a, b));
            REQUIRE(wsum.has_value());
            CHECK(m.apply(*wsum) == vec_add(a, b));
        }
    }
}

TEST_CASE("cokernel orders")
{
    CHECK(coker_order(IntMat{{1, -1}, {1, 1}}) == 2);
    CHECK(coker_order(A - M) == 2);
    CHECK(!coker_order(IntMat(2, 2)).is_finite());
}

TEST_CASE("coset labels")
{
    const IntMat i_minus_m{{1, -1}, {1, 1}};
    const auto s = snf(i_minus_m);

    CHECK(coset_label(s, IntVec{Int(0), Int(0)}) == std::vector<Int>{Int(0), Int(0)});
    CHECK(coset_label(s, IntVec{Int(1), Int(1)}) == std::vector<Int>{Int(0), Int(0)});
    CHECK(coset_label(s, IntVec{Int(1), Int(0)}) != std::vector<Int>{Int(0), Int(0)});

    CHECK_THROWS_AS(coset_label(snf(IntMat(2, 2)), IntVec{Int(1), Int(0)}),
                    InfiniteCokernelError);

    SUBCASE("equal labels iff difference is a lattice member")
    {
        std::mt19937_64 rng(7006);
        for (int iter = 0; iter < 300; ++iter) {
            IntMat m = random_mat(rng, 2, -8, 8);
            if (det(m) == 0)
                continue;
            const auto sm = snf(m);
            const IntVec v = random_vec(rng, 2, -50, 50);
            const IntVec w = random_vec(rng, 2, -50, 50);
            const bool same = coset_label(sm, v) == coset_label(sm, w);
            const bool member = lattice_member(m, vec_sub(v, w)).has_value();
            CHECK(same == member);
        }
    }
}

TEST_CASE("finite cokernel order counts the distinct labels over a residue box")
{
    std::mt19937_64 rng(7007);
    int tested = 0;
    while (tested < 60) {
        const IntMat m = random_mat(rng, 2, -4, 4);
        const Int d = det(m);
        if (d == 0 || abs_int(d) > 12)
            continue;
        ++tested;
        const auto s = snf(m);
        const long range = to_long(abs_int(d));
        std::set<std::vector<Int>> labels;
        for (long x = 0; x < range; ++x)
            for (long y = 0; y < range; ++y)
                labels.insert(coset_label(s, IntVec{Int(x), Int(y)}));
        CHECK(Int(labels.size()) == abs_int(d));
    }
}
