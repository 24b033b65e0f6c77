#include "twistconj/reps.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "twistconj/errors.hpp"

namespace twistconj {

MonomialMatrix MonomialMatrix::identity(int dim)
{
    MonomialMatrix m;
    m.dim = dim;
    m.row_of.resize(dim);
    std::iota(m.row_of.begin(), m.row_of.end(), 0);
    m.angle_of.assign(dim, Frac());
    return m;
}

MonomialMatrix MonomialMatrix::operator*(const MonomialMatrix& o) const
{
    if (dim != o.dim)
        throw std::invalid_argument("MonomialMatrix: dimension mismatch");
    MonomialMatrix r;
    r.dim = dim;
    r.row_of.resize(dim);
    r.angle_of.resize(dim);
    for (int j = 0; j < dim; ++j) {
        const int mid = o.row_of[j];
        r.row_of[j] = row_of[mid];
        r.angle_of[j] = o.angle_of[j] + angle_of[mid];
    }
    return r;
}

RootSum MonomialMatrix::trace() const
{
    RootSum t;
    for (int j = 0; j < dim; ++j)
        if (row_of[j] == j)
            t = t + RootSum::root(angle_of[j]);
    return t;
}

IntMat MonomialMatrix::to_int_matrix() const
{
    IntMat m(dim, dim);
    for (int j = 0; j < dim; ++j) {
        const Frac& a = angle_of[j];
        if (a.is_zero())
            m.at(row_of[j], j) = 1;
        else if (a == Frac(Int(1), Int(2)))
            m.at(row_of[j], j) = -1;
        else
            throw std::domain_error("MonomialMatrix: entry e(" + a.str() + ") is not +-1");
    }
    return m;
}

int sign_character(const Elem& e)
{
    return mod_floor(e.n, 2) == 0 ? 1 : -1;
}

DualSystem::DualSystem() : group_(), twist_(group_.phi()) {}

DualSystem::DualSystem(const Group& g, const Twist& t) : group_(g), twist_(t)
{
    if (!group_.alpha().is_symmetric())
        throw UnsupportedMatrixError(
            "DualSystem: level action must be symmetric for the dual action "
            "to equal the matrix itself");
}

namespace {

TorusPoint apply_mod1(const IntMat& m, const TorusPoint& p)
{
    // Common denominator, integer matrix action, reduce mod 1.
    const Int den = p.x.den() * p.y.den();
    const Int a = p.x.num() * p.y.den();
    const Int b = p.y.num() * p.x.den();
    TorusPoint r;
    r.x = Frac(m.at(0, 0) * a + m.at(0, 1) * b, den);
    r.y = Frac(m.at(1, 0) * a + m.at(1, 1) * b, den);
    return r;
}

Frac pairing(const IntVec& v, const TorusPoint& p)
{
    return p.x.scaled(v[0]) + p.y.scaled(v[1]);
}

int index_of(const std::vector<TorusPoint>& points, const TorusPoint& p)
{
    for (std::size_t i = 0; i < points.size(); ++i)
        if (points[i] == p)
            return static_cast<int>(i);
    return -1;
}

std::vector<int> perm_inverse(const std::vector<int>& p)
{
    std::vector<int> inv(p.size());
    for (std::size_t i = 0; i < p.size(); ++i)
        inv[p[i]] = static_cast<int>(i);
    return inv;
}

std::vector<int> perm_compose(const std::vector<int>& p, const std::vector<int>& q)
{
    std::vector<int> r(p.size());
    for (std::size_t i = 0; i < p.size(); ++i)
        r[i] = p[q[i]];
    return r;
}

long perm_order(const std::vector<int>& p)
{
    std::vector<int> id(p.size());
    std::iota(id.begin(), id.end(), 0);
    std::vector<int> cur = p;
    long order = 1;
    while (cur != id) {
        cur = perm_compose(p, cur);
        ++order;
    }
    return order;
}

std::vector<int> perm_pow(const std::vector<int>& p, long e)
{
    std::vector<int> r(p.size());
    std::iota(r.begin(), r.end(), 0);
    for (long i = 0; i < e; ++i)
        r = perm_compose(p, r);
    return r;
}

} // namespace

TorusPoint DualSystem::apply_alpha(const TorusPoint& p) const
{
    return apply_mod1(group_.alpha(), p);
}

TorusPoint DualSystem::apply_mu(const TorusPoint& p) const
{
    return apply_mod1(twist_.m, p);
}

OrbitRep DualSystem::alpha_orbit(const TorusPoint& p) const
{
    OrbitRep orbit;
    TorusPoint cur = p;
    do {
        orbit.points.push_back(cur);
        cur = apply_alpha(cur);
    } while (cur != p);
    const int n = orbit.size();
    orbit.alpha_perm.resize(n);
    for (int i = 0; i < n; ++i)
        orbit.alpha_perm[i] = (i + 1) % n;
    return orbit;
}

std::vector<OrbitRep> DualSystem::invariant_orbits(long q_max) const
{
    if (q_max < 1)
        throw DomainError("invariant_orbits: q_max must be >= 1");

    std::set<TorusPoint> seen;
    std::vector<OrbitRep> out;
    for (long a = 0; a < q_max; ++a) {
        for (long b = 0; b < q_max; ++b) {
            TorusPoint p{Frac(Int(a), Int(q_max)), Frac(Int(b), Int(q_max))};
            if (seen.count(p))
                continue;

            std::vector<TorusPoint> pts;
            TorusPoint cur = p;
            do {
                pts.push_back(cur);
                seen.insert(cur);
                cur = apply_alpha(cur);
            } while (cur != p);
            std::sort(pts.begin(), pts.end());

            OrbitRep orbit;
            orbit.points = std::move(pts);
            const int n = orbit.size();
            orbit.alpha_perm.resize(n);
            for (int i = 0; i < n; ++i)
                orbit.alpha_perm[i] = index_of(orbit.points, apply_alpha(orbit.points[i]));

            std::vector<int> mu(n);
            bool invariant = true;
            for (int i = 0; i < n && invariant; ++i) {
                mu[i] = index_of(orbit.points, apply_mu(orbit.points[i]));
                invariant = mu[i] >= 0;
            }
            if (!invariant)
                continue;
            orbit.mu_perm = std::move(mu);
            out.push_back(std::move(orbit));
        }
    }
    std::sort(out.begin(), out.end(),
              [](const OrbitRep& l, const OrbitRep& r) { return l.points[0] < r.points[0]; });
    return out;
}

MonomialMatrix DualSystem::rep_matrix(const Representation& rep, const Elem& g) const
{
    const OrbitRep& orbit = rep.orbit;
    const int dim = orbit.size();

    // Level part: basis vector i goes to the inverse-action slot; reduce the
    // level mod the permutation order so huge levels stay exact.
    const long order = perm_order(orbit.alpha_perm);
    const long r = mod_floor(g.n, Int(order)).get_si();
    const std::vector<int> level_perm = perm_pow(perm_inverse(orbit.alpha_perm), r);

    MonomialMatrix m;
    m.dim = dim;
    m.row_of = level_perm;
    m.angle_of.resize(dim);
    for (int j = 0; j < dim; ++j)
        m.angle_of[j] = pairing(g.v, orbit.points[m.row_of[j]]);
    return m;
}

MonomialMatrix DualSystem::intertwiner(const Representation& rep) const
{
    if (!rep.orbit.mu_perm)
        throw NotInvariantError("intertwiner: orbit carries no lattice-action data "
                                "(not setwise invariant, or built without it)");
    MonomialMatrix s;
    s.dim = rep.dimension();
    s.row_of = *rep.orbit.mu_perm;
    s.angle_of.assign(s.dim, Frac());
    return s;
}

RootSum DualSystem::twisted_character(const Representation& rep, const Elem& g) const
{
    return (intertwiner(rep) * rep_matrix(rep, g)).trace();
}

RootSum DualSystem::twisted_character_tensor_sign(const Representation& rep, const Elem& g) const
{
    return twisted_character(rep, g) * Int(sign_character(g));
}

int DualSystem::l2_twisted_character(const Elem& e) const
{
    const IntMat lat = twist_.m - group_.alpha_pow(e.n);
    if (det(lat) == 0)
        throw DegenerateLatticeError("l2_twisted_character: det(M - A^n) = 0");
    return lattice_member(lat, e.v) ? 1 : 0;
}

CharacterTable DualSystem::character_table() const
{
    if (group_.alpha() != IntMat{{2, 1}, {1, 1}} || twist_ != group_.phi())
        throw UnsupportedTwistError("character_table: defined for the built-in twist phi");

    const std::vector<OrbitRep> orbits = invariant_orbits(2);
    if (orbits.size() != 2 || orbits[0].size() != 1 || orbits[1].size() != 3)
        throw std::logic_error("character_table: unexpected orbit structure");
    const Representation rho1{orbits[0]};
    const Representation rho2{orbits[1]};

    ConjContext ctx(group_, twist_);
    const std::vector<ClassId> classes = enumerate_classes(ctx);
    if (classes.size() != 4)
        throw std::logic_error("character_table: expected four classes");

    CharacterTable table;
    table.row_names = {"rho1", "pi", "rho2", "rho2_tensor_pi"};
    table.values = IntMat(4, 4);
    for (std::size_t c = 0; c < classes.size(); ++c) {
        Elem rep = class_representative(ctx, classes[c]);
        table.col_names.push_back(class_name(ctx, classes[c]).value());

        const RootSum vals[4] = {
            twisted_character(rho1, rep),
            RootSum::integer(Int(sign_character(rep))),
            twisted_character(rho2, rep),
            twisted_character_tensor_sign(rho2, rep),
        };
        for (int r = 0; r < 4; ++r) {
            const auto v = vals[r].as_integer();
            if (!v)
                throw std::logic_error("character_table: non-integer character value");
            table.values.at(r, static_cast<int>(c)) = *v;
        }
        table.representatives.push_back(std::move(rep));
    }
    table.determinant = det(table.values);
    return table;
}

} // namespace twistconj
