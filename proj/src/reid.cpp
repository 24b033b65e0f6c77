#include "twistconj/reid.hpp"

#include <sstream>

#include "twistconj/errors.hpp"

namespace twistconj {

bool ClassId::is_zero_coset() const
{
    for (const Int& c : coset)
        if (c != 0)
            return false;
    return true;
}

std::string ClassId::str() const
{
    std::ostringstream os;
    os << "(parity " << parity << ", coset [";
    for (std::size_t i = 0; i < coset.size(); ++i)
        os << (i ? "," : "") << coset[i].get_str();
    os << "])";
    return os.str();
}

ConjContext::ConjContext(const Group& g, const Twist& t)
    : group_(&g), t_(t), powers_(g.alpha())
{
}

const SnfDecomposition& ConjContext::level_lattice(long level) const
{
    auto it = lattices_.find(level);
    if (it == lattices_.end()) {
        const IntMat lat = IntMat::identity(2) - powers_.pow(level) * t_.m;
        degenerate_[level] = det(lat) == 0;
        it = lattices_.emplace(level, snf(lat)).first;
    }
    if (degenerate_.at(level))
        throw DegenerateLatticeError("det(I - A^" + std::to_string(level) +
                                     " M) = 0: lattice decision unavailable at this level");
    return it->second;
}

bool ConjContext::level_lattice_degenerate(long level) const
{
    auto it = degenerate_.find(level);
    if (it == degenerate_.end()) {
        const IntMat lat = IntMat::identity(2) - powers_.pow(level) * t_.m;
        it = degenerate_.emplace(level, det(lat) == 0).first;
        if (!it->second)
            lattices_.emplace(level, snf(lat));
    }
    return it->second;
}

namespace {

// I - A^n M for levels outside the machine-word cache.
SnfDecomposition level_lattice_big(const ConjContext& ctx, const Int& level)
{
    const IntMat lat =
        IntMat::identity(2) - mat_pow(ctx.group().alpha(), level) * ctx.twist().m;
    if (det(lat) == 0)
        throw DegenerateLatticeError("det(I - A^" + level.get_str() +
                                     " M) = 0: lattice decision unavailable at this level");
    return snf(lat);
}

std::optional<ConjugacyWitness> conj_level_reversing(const ConjContext& ctx, const Elem& h1,
                                                     const Elem& h2)
{
    // Levels combine as 2z + n: a conjugator of level z carries level n1 to
    // 2z + n1, so the level gap must be even.
    const Int gap = h2.n - h1.n;
    if (mpz_odd_p(gap.get_mpz_t()))
        return std::nullopt;
    const Int z = gap / 2;

    std::optional<IntVec> w;
    const IntVec diff = vec_sub(h2.v, ctx.powers().apply_pow(z, h1.v));
    if (fits_long(h2.n))
        w = solve_in_lattice(ctx.level_lattice(h2.n.get_si()), diff);
    else
        w = solve_in_lattice(level_lattice_big(ctx, h2.n), diff);
    if (!w)
        return std::nullopt;
    Elem g;
    g.v = std::move(*w);
    g.n = z;
    return ConjugacyWitness{std::move(g)};
}

std::optional<ConjugacyWitness> conj_level_preserving(const ConjContext& ctx, const Elem& h1,
                                                      const Elem& h2)
{
    if (h1.n != h2.n)
        return std::nullopt;

    SnfDecomposition local;
    const SnfDecomposition* lat = nullptr;
    if (fits_long(h2.n)) {
        lat = &ctx.level_lattice(h2.n.get_si());
    } else {
        local = level_lattice_big(ctx, h2.n);
        lat = &local;
    }

    // A descends to a permutation of the finite quotient, so the coset of
    // A^z v1 is periodic in z; one period covers every candidate.
    const std::vector<Int> start = coset_label(*lat, h1.v);
    const std::vector<Int> target = coset_label(*lat, h2.v);
    IntVec cur = h1.v;
    long z = 0;
    for (;;) {
        if (coset_label(*lat, cur) == target) {
            auto w = solve_in_lattice(*lat, vec_sub(h2.v, cur));
            if (!w)
                throw std::logic_error("conjugacy: coset match without a lattice witness");
            Elem g;
            g.v = std::move(*w);
            g.n = z;
            return ConjugacyWitness{std::move(g)};
        }
        cur = ctx.group().alpha().apply(cur);
        ++z;
        if (coset_label(*lat, cur) == start)
            return std::nullopt; // walked the whole cycle
    }
}

} // namespace

std::optional<ConjugacyWitness> are_twisted_conjugate(const ConjContext& ctx, const Elem& h1,
                                                      const Elem& h2)
{
    if (h1 == h2)
        return ConjugacyWitness{ctx.group().identity()}; // reflexivity, no lattice needed
    if (ctx.twist().eps == -1)
        return conj_level_reversing(ctx, h1, h2);
    return conj_level_preserving(ctx, h1, h2);
}

std::optional<ConjugacyWitness> are_twisted_conjugate(const Group& g, const Elem& h1,
                                                      const Elem& h2, const Twist& t)
{
    ConjContext ctx(g, t);
    return are_twisted_conjugate(ctx, h1, h2);
}

ClassId class_id(const ConjContext& ctx, const Elem& h)
{
    if (ctx.twist().eps != -1)
        throw UnsupportedTwistError(
            "class_id: no finite canonical labeling for level-preserving twists");
    if (ctx.level_lattice_degenerate(0) || ctx.level_lattice_degenerate(1))
        throw DegenerateLatticeError("class_id: infinite base-level cokernel");

    ClassId id;
    id.parity = static_cast<int>(mod_floor(h.n, 2).get_si());
    const Int z = (h.n - id.parity) / 2;
    const IntVec base = ctx.powers().apply_pow(Int(-z), h.v);
    id.coset = coset_label(ctx.level_lattice(id.parity), base);
    return id;
}

ClassId class_id(const Group& g, const Elem& h, const Twist& t)
{
    ConjContext ctx(g, t);
    return class_id(ctx, h);
}

Elem class_representative(const ConjContext& ctx, const ClassId& id)
{
    const SnfDecomposition& lat = ctx.level_lattice(id.parity);
    const IntMat u_inv = inverse_unimodular(lat.u);
    Elem e;
    e.v = u_inv.apply(id.coset);
    e.n = id.parity;
    return e;
}

namespace {

bool is_builtin_phi(const ConjContext& ctx)
{
    const Group& g = ctx.group();
    return g.alpha() == IntMat{{2, 1}, {1, 1}} && ctx.twist() == g.phi();
}

} // namespace

std::optional<std::string> class_name(const ConjContext& ctx, const ClassId& id)
{
    if (!is_builtin_phi(ctx))
        return std::nullopt;
    if (id.parity == 0)
        return id.is_zero_coset() ? "B1" : "B2";
    return id.is_zero_coset() ? "B3" : "B4";
}

std::vector<ClassId> enumerate_classes(const ConjContext& ctx)
{
    if (ctx.twist().eps != -1)
        throw UnsupportedTwistError("enumerate_classes: level-reversing twists only");
    std::vector<ClassId> out;
    for (int parity = 0; parity <= 1; ++parity) {
        const SnfDecomposition& lat = ctx.level_lattice(parity);
        const int k = lat.d.rows();
        // Mixed-radix sweep over the residues, lexicographic order.
        std::vector<Int> label(k, Int(0));
        for (;;) {
            out.push_back(ClassId{parity, label});
            int i = k - 1;
            while (i >= 0) {
                label[i] += 1;
                if (label[i] < lat.d.at(i, i))
                    break;
                label[i] = 0;
                --i;
            }
            if (i < 0)
                break;
        }
    }
    return out;
}

ReidemeisterInfo reidemeister_info(const Group& g, const Twist& t)
{
    if (t.eps == 1) {
        // Every level is preserved and meets at least one class, and there
        // are infinitely many levels.
        return {Cardinal::infinite(), ReidemeisterInfo::Reason::level_preserving};
    }
    // Even-level classes are counted by Z^2/(I-M)Z^2 and odd-level classes
    // by Z^2/(I-AM)Z^2; level transport reduces everything to those two.
    const Cardinal even = coker_order(IntMat::identity(2) - t.m);
    const Cardinal odd = coker_order(IntMat::identity(2) - g.alpha() * t.m);
    if (even.is_finite() && odd.is_finite())
        return {Cardinal::finite(even.value() + odd.value()), ReidemeisterInfo::Reason::finite};
    return {Cardinal::infinite(), ReidemeisterInfo::Reason::degenerate_cokernel};
}

Cardinal reidemeister_number(const Group& g, const Twist& t)
{
    return reidemeister_info(g, t).count;
}

Cardinal reidemeister_abelian(const IntMat& f)
{
    if (!f.is_square())
        throw std::invalid_argument("reidemeister_abelian: non-square matrix");
    return coker_order(IntMat::identity(f.rows()) - f);
}

int mobius(long d)
{
    if (d <= 0)
        throw DomainError("mobius: argument must be positive");
    int primes = 0;
    for (long p = 2; p * p <= d; ++p) {
        if (d % p == 0) {
            d /= p;
            if (d % p == 0)
                return 0;
            ++primes;
        }
    }
    if (d > 1)
        ++primes;
    return primes % 2 == 0 ? 1 : -1;
}

std::vector<CongruenceRow> congruence_check(const IntMat& f, long n_max)
{
    if (n_max < 1)
        throw DomainError("congruence_check: n_max must be >= 1");
    if (!f.is_square())
        throw std::invalid_argument("congruence_check: non-square matrix");

    std::vector<Int> r(static_cast<std::size_t>(n_max) + 1);
    IntMat power = IntMat::identity(f.rows());
    for (long j = 1; j <= n_max; ++j) {
        power = power * f;
        const Cardinal rj = coker_order(IntMat::identity(f.rows()) - power);
        if (!rj.is_finite())
            throw InfiniteReidemeisterError(
                j, "congruence_check: det(I - F^" + std::to_string(j) + ") = 0");
        r[static_cast<std::size_t>(j)] = rj.value();
    }

    std::vector<CongruenceRow> rows;
    rows.reserve(static_cast<std::size_t>(n_max));
    for (long n = 1; n <= n_max; ++n) {
        Int lhs = 0;
        for (long d = 1; d <= n; ++d) {
            if (n % d != 0)
                continue;
            const int mu = mobius(d);
            if (mu != 0)
                lhs += mu * r[static_cast<std::size_t>(n / d)];
        }
        rows.push_back(CongruenceRow{n, lhs, divides(Int(n), lhs)});
    }
    return rows;
}

} // namespace twistconj
