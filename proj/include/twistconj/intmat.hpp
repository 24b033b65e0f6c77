#pragma once

#include <initializer_list>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "twistconj/integers.hpp"

namespace twistconj {

using IntVec = std::vector<Int>;

/// Dense matrix of exact integers. Small (the group core needs 2x2, the
/// abelian congruence sweeps use general k), immutable in spirit: all
/// operations return fresh values.
class IntMat
{
public:
    IntMat() : rows_(0), cols_(0) {}
    IntMat(int rows, int cols);
    IntMat(std::initializer_list<std::initializer_list<long>> rows);

    static IntMat identity(int k);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Int& at(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    const Int& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

    IntMat operator+(const IntMat& o) const;
    IntMat operator-(const IntMat& o) const;
    IntMat operator-() const;
    IntMat operator*(const IntMat& o) const;
    bool operator==(const IntMat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }
    bool operator!=(const IntMat& o) const { return !(*this == o); }

    IntMat transpose() const;
    bool is_symmetric() const;
    Int trace() const;

    IntVec apply(const IntVec& v) const;

    std::string str() const;
    friend std::ostream& operator<<(std::ostream& os, const IntMat& m) { return os << m.str(); }

private:
    int rows_, cols_;
    std::vector<Int> a_;
};

/// Smith normal form u*m*v = d with unimodular u, v, nonnegative diagonal d
/// and divisibility chain d1 | d2 | ... Deterministic (fixed pivoting rule),
/// so decompositions are stable across runs.
struct SnfDecomposition
{
    IntMat d, u, v;
};

/// Exact determinant; fraction-free (Bareiss) elimination beyond 2x2.
Int det(const IntMat& m);

bool is_unimodular(const IntMat& m);

/// Exact inverse of a matrix with determinant +-1 (adjugate route).
IntMat inverse_unimodular(const IntMat& m);

/// Exact n-th power; n < 0 requires a unimodular base (NonInvertibleError).
IntMat mat_pow(const IntMat& m, const Int& n);

SnfDecomposition snf(const IntMat& m);

/// Witness w with m*w = v, if v lies in the column lattice of m.
/// Solves in SNF coordinates with exact divisibility checks.
std::optional<IntVec> solve_in_lattice(const SnfDecomposition& s, const IntVec& v);
std::optional<IntVec> lattice_member(const IntMat& m, const IntVec& v);

/// |det(m)| when nonzero, infinite otherwise.
Cardinal coker_order(const IntMat& m);

/// Canonical coordinates of v in Z^k / m Z^k: (u*v mod d1, ..., u*v mod dk),
/// residues in [0, di). Equal labels iff same coset. InfiniteCokernelError
/// when some di = 0.
std::vector<Int> coset_label(const SnfDecomposition& s, const IntVec& v);

IntVec vec_add(const IntVec& a, const IntVec& b);
IntVec vec_sub(const IntVec& a, const IntVec& b);
IntVec vec_neg(const IntVec& a);

} // namespace twistconj
