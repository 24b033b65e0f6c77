#pragma once

#include <optional>
#include <string>
#include <vector>

#include "twistconj/frac.hpp"
#include "twistconj/group.hpp"
#include "twistconj/intmat.hpp"
#include "twistconj/reid.hpp"
#include "twistconj/rootsum.hpp"

namespace twistconj {

/// Rational point of the dual torus, coordinates in [0,1).
struct TorusPoint
{
    Frac x, y;

    bool operator==(const TorusPoint& o) const { return x == o.x && y == o.y; }
    bool operator!=(const TorusPoint& o) const { return !(*this == o); }
    bool operator<(const TorusPoint& o) const { return x != o.x ? x < o.x : y < o.y; }

    std::string str() const { return "(" + x.str() + "," + y.str() + ")"; }
};

/// A finite orbit of the level action on the dual torus, with the action
/// recorded as an index permutation: points[alpha_perm[i]] = A*points[i].
/// mu_perm is present iff the orbit is setwise invariant under the twist's
/// lattice action.
struct OrbitRep
{
    std::vector<TorusPoint> points;
    std::vector<int> alpha_perm;
    std::optional<std::vector<int>> mu_perm;

    int size() const { return static_cast<int>(points.size()); }
};

/// Induced finite-dimensional representation carried by an orbit; matrices
/// are monomial with root-of-unity entries.
struct Representation
{
    OrbitRep orbit;

    int dimension() const { return orbit.size(); }
};

/// Monomial matrix: one root-of-unity entry per row and column. Column j
/// holds e^{2*pi*i*angle_of[j]} in row row_of[j].
struct MonomialMatrix
{
    int dim = 0;
    std::vector<int> row_of;
    std::vector<Frac> angle_of;

    static MonomialMatrix identity(int dim);

    MonomialMatrix operator*(const MonomialMatrix& o) const;
    bool operator==(const MonomialMatrix& o) const
    {
        return dim == o.dim && row_of == o.row_of && angle_of == o.angle_of;
    }
    bool operator!=(const MonomialMatrix& o) const { return !(*this == o); }

    RootSum trace() const;

    /// Exact integer form when every entry is +-1; throws otherwise.
    IntMat to_int_matrix() const;
};

/// The parity character (-1)^n.
int sign_character(const Elem& e);

struct CharacterTable
{
    std::vector<std::string> row_names; // characters
    std::vector<std::string> col_names; // classes B1..B4
    std::vector<Elem> representatives;
    IntMat values; // 4x4, entries +-1
    Int determinant;
};

/// Dual-torus machinery for a symmetric level action: orbit enumeration,
/// induced representations, intertwiners and twisted characters.
/// The level action must be symmetric for the dual action to be the matrix
/// itself (UnsupportedMatrixError otherwise).
class DualSystem
{
public:
    DualSystem(); // built-in group and its twist phi
    DualSystem(const Group& g, const Twist& t);

    const Group& group() const { return group_; }
    const Twist& twist() const { return twist_; }

    TorusPoint apply_alpha(const TorusPoint& p) const;
    TorusPoint apply_mu(const TorusPoint& p) const;

    /// Orbit of p under the level action, listed in iteration order from p.
    /// Rational points always close up (denominators are preserved).
    OrbitRep alpha_orbit(const TorusPoint& p) const;

    /// All distinct orbits of points with denominators dividing q_max that
    /// are setwise invariant under the twist's lattice action, each with
    /// mu_perm filled. Points inside each orbit are sorted, orbits ordered
    /// by their smallest point, so output is deterministic.
    std::vector<OrbitRep> invariant_orbits(long q_max) const;

    /// rho(g) = diag(e^{2 pi i <v, p_i>}) * (permutation part of the level).
    MonomialMatrix rep_matrix(const Representation& rep, const Elem& g) const;

    /// Permutation matrix of mu_perm; NotInvariantError when absent.
    MonomialMatrix intertwiner(const Representation& rep) const;

    /// g |-> Tr(S * rho(g)); constant on twisted conjugacy classes.
    RootSum twisted_character(const Representation& rep, const Elem& g) const;

    /// Twisted character of rep tensored with the parity character.
    RootSum twisted_character_tensor_sign(const Representation& rep, const Elem& g) const;

    /// Solution count of (m,k) = (M - A^n)(s,t): 1 if v lies in the column
    /// lattice of M - A^n, else 0. DegenerateLatticeError if det = 0.
    int l2_twisted_character(const Elem& e) const;

    /// Values of the four twisted characters on the four classes, exact.
    /// Defined for the built-in twist only (UnsupportedTwistError).
    CharacterTable character_table() const;

private:
    Group group_;
    Twist twist_;
};

} // namespace twistconj
