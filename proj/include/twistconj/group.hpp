#pragma once

#include <map>
#include <ostream>
#include <string>

#include "twistconj/intmat.hpp"

namespace twistconj {

/// Element ((m,k),n) of the semidirect product Z^2 x| Z: a lattice vector
/// v = (m,k) together with the level n.
struct Elem
{
    IntVec v; // size 2
    Int n;

    bool operator==(const Elem& o) const { return v == o.v && n == o.n; }
    bool operator!=(const Elem& o) const { return !(*this == o); }
};

Elem make_elem(Int m, Int k, Int n);
inline Elem make_elem(long m, long k, long n) { return make_elem(Int(m), Int(k), Int(n)); }

std::ostream& operator<<(std::ostream& os, const Elem& e);

/// Endomorphism datum: v |-> m*v on the lattice part, n |-> eps*n on the
/// level. Valid only when m*A = A^eps*m; construct through Group::twist so
/// the check is never skipped.
struct Twist
{
    IntMat m;
    int eps; // +1 or -1

    bool operator==(const Twist& o) const { return m == o.m && eps == o.eps; }
    bool operator!=(const Twist& o) const { return !(*this == o); }
};

/// Memoized integer powers of a fixed unimodular matrix. Not thread-safe:
/// hot loops keep one per thread.
class PowerCache
{
public:
    explicit PowerCache(IntMat base);

    const IntMat& pow(long n) const;
    IntMat pow(const Int& n) const;

    /// base^n * v without copying the cached power.
    IntVec apply_pow(const Int& n, const IntVec& v) const;

private:
    IntMat base_;
    mutable std::map<long, IntMat> memo_;
};

/// The group Z^2 x| Z for a fixed hyperbolic unimodular 2x2 matrix:
/// (v,n)*(v',n') = (v + A^n v', n+n'). Pure value arithmetic throughout;
/// a Group is safe to share across threads.
class Group
{
public:
    /// Default matrix [[2,1],[1,1]].
    Group();

    /// Any unimodular 2x2 matrix with |trace| > 2 works as the level action.
    explicit Group(IntMat a);

    const IntMat& alpha() const { return a_; }
    const IntMat& alpha_inv() const { return a_inv_; }

    IntMat alpha_pow(const Int& n) const { return mat_pow(a_, n); }

    Elem identity() const { return make_elem(0, 0, 0); }
    Elem mul(const Elem& a, const Elem& b) const;
    Elem inv(const Elem& a) const;

    /// Validates m*A = A^eps*m eagerly; everything downstream may assume it.
    Twist twist(IntMat m, int eps) const;

    /// The built-in level-reversing twist ((m,k),n) |-> ((k,-m),-n).
    Twist phi() const;
    Twist identity_twist() const;

    Elem apply(const Twist& t, const Elem& a) const;

    Twist twist_compose(const Twist& s, const Twist& t) const;
    Twist twist_pow(const Twist& t, long j) const;

    /// g * h * t(g^-1), the defining relation of twisted conjugacy.
    Elem twisted_conj(const Elem& g, const Elem& h, const Twist& t) const;

    // Cached variants for sweep-style callers; identical results.
    Elem mul(const Elem& a, const Elem& b, const PowerCache& pc) const;
    Elem inv(const Elem& a, const PowerCache& pc) const;
    Elem twisted_conj(const Elem& g, const Elem& h, const Twist& t, const PowerCache& pc) const;

private:
    IntMat a_, a_inv_;
};

} // namespace twistconj
