#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "twistconj/group.hpp"

namespace twistconj {

/// Canonical label of a twisted conjugacy class for a level-reversing twist:
/// the level parity plus the coset of the transported lattice vector in
/// Z^2 / (I - A^parity M) Z^2.
struct ClassId
{
    int parity; // 0 or 1
    std::vector<Int> coset;

    bool operator==(const ClassId& o) const { return parity == o.parity && coset == o.coset; }
    bool operator!=(const ClassId& o) const { return !(*this == o); }
    bool operator<(const ClassId& o) const
    {
        if (parity != o.parity)
            return parity < o.parity;
        return coset < o.coset;
    }

    bool is_zero_coset() const;
    std::string str() const;
};

struct ConjugacyWitness
{
    Elem g; // twisted_conj(g, h1, t) == h2
};

struct ReidemeisterInfo
{
    enum class Reason { finite, level_preserving, degenerate_cokernel };
    Cardinal count;
    Reason reason;
};

/// Per-twist scratch data (normal forms of the level lattices, memoized
/// matrix powers) shared by the decision procedures. One instance per
/// thread in parallel sweeps.
class ConjContext
{
public:
    ConjContext(const Group& g, const Twist& t);

    const Group& group() const { return *group_; }
    const Twist& twist() const { return t_; }
    const PowerCache& powers() const { return powers_; }

    /// SNF of I - A^level * M; DegenerateLatticeError when singular.
    const SnfDecomposition& level_lattice(long level) const;
    bool level_lattice_degenerate(long level) const;

private:
    const Group* group_;
    Twist t_;
    PowerCache powers_;
    mutable std::map<long, SnfDecomposition> lattices_;
    mutable std::map<long, bool> degenerate_;
};

/// Decides h1 ~ h2 under x ~ g x t(g^-1) and produces a replayable witness.
/// Level-reversing twists reduce to one lattice membership test; for
/// level-preserving twists the conjugator level is searched over one period
/// of the induced action on the finite cokernel.
std::optional<ConjugacyWitness> are_twisted_conjugate(const Group& g, const Elem& h1,
                                                      const Elem& h2, const Twist& t);
std::optional<ConjugacyWitness> are_twisted_conjugate(const ConjContext& ctx, const Elem& h1,
                                                      const Elem& h2);

/// Total on classes: equal ids iff twisted conjugate. Level-reversing
/// twists only (UnsupportedTwistError otherwise); DegenerateLatticeError if
/// either base-level cokernel is infinite.
ClassId class_id(const Group& g, const Elem& h, const Twist& t);
ClassId class_id(const ConjContext& ctx, const Elem& h);

/// Canonical base-level element of a class (parity p, vector U_p^-1 * label).
Elem class_representative(const ConjContext& ctx, const ClassId& id);

/// "B1".."B4" for the built-in twist phi; nullopt for other twists.
std::optional<std::string> class_name(const ConjContext& ctx, const ClassId& id);

/// The four classes of phi in canonical order B1, B2, B3, B4.
std::vector<ClassId> enumerate_classes(const ConjContext& ctx);

ReidemeisterInfo reidemeister_info(const Group& g, const Twist& t);
Cardinal reidemeister_number(const Group& g, const Twist& t);

/// |det(I - F)| when nonzero, infinite otherwise (endomorphism F of Z^k).
Cardinal reidemeister_abelian(const IntMat& f);

/// Moebius function; DomainError for d <= 0.
int mobius(long d);

struct CongruenceRow
{
    long n;
    Int lhs; // sum over d|n of mobius(d) * R(F^(n/d))
    bool holds; // lhs == 0 mod n
};

/// Checks sum_{d|n} mu(d) R(F^{n/d}) == 0 mod n for n = 1..n_max in exact
/// integers. InfiniteReidemeisterError names the first power j with
/// det(I - F^j) = 0.
std::vector<CongruenceRow> congruence_check(const IntMat& f, long n_max);

} // namespace twistconj
