#include "twistconj/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "twistconj/errors.hpp"
#include "twistconj/union_find.hpp"

namespace twistconj {

namespace {

struct BoxGeom
{
    long vb, nb, side;

    explicit BoxGeom(const BoxSpec& box)
        : vb(box.v_bound), nb(box.n_bound), side(2 * box.v_bound + 1)
    {
        if (vb < 0 || nb < 0 || box.conj_v_bound < 0 || box.conj_z_bound < 0)
            throw std::invalid_argument("BoxSpec: bounds must be nonnegative");
        if (size() > (1L << 30))
            throw std::invalid_argument("BoxSpec: element box too large");
    }

    long size() const { return side * side * (2 * nb + 1); }

    long index(long m, long k, long n) const
    {
        return ((n + nb) * side + (m + vb)) * side + (k + vb);
    }

    bool vec_in_box(long m, long k) const { return m >= -vb && m <= vb && k >= -vb && k <= vb; }
};

std::vector<Elem> enumerate_elements(const BoxGeom& geom)
{
    std::vector<Elem> out;
    out.reserve(static_cast<std::size_t>(geom.size()));
    for (long n = -geom.nb; n <= geom.nb; ++n)
        for (long m = -geom.vb; m <= geom.vb; ++m)
            for (long k = -geom.vb; k <= geom.vb; ++k)
                out.push_back(make_elem(m, k, n));
    return out;
}

struct Conjugator
{
    long x, y, z;
};

std::vector<Conjugator> enumerate_conjugators(const BoxSpec& box)
{
    std::vector<Conjugator> out;
    const long cv = box.conj_v_bound, cz = box.conj_z_bound;
    out.reserve(static_cast<std::size_t>((2 * cv + 1) * (2 * cv + 1) * (2 * cz + 1)));
    for (long z = -cz; z <= cz; ++z)
        for (long x = -cv; x <= cv; ++x)
            for (long y = -cv; y <= cv; ++y)
                out.push_back({x, y, z});
    return out;
}

// Conjugation images that leave the element box still take part in the
// union-find: two box elements sharing an image are twisted conjugate
// through it, and those bridges are what closes the partition near the
// box walls. Bridge keys are packed into a word; coordinates this large
// never bridge anything useful, so oversized images are skipped.
constexpr long kBridgeCoordBound = 1L << 30;

std::uint64_t bridge_key(long m, long k)
{
    return (static_cast<std::uint64_t>(m + kBridgeCoordBound) << 32) ^
           static_cast<std::uint64_t>(k + kBridgeCoordBound);
}

bool bridge_coords_ok(const IntVec& v)
{
    if (!fits_long(v[0]) || !fits_long(v[1]))
        return false;
    const long m = v[0].get_si(), k = v[1].get_si();
    return m > -kBridgeCoordBound && m < kBridgeCoordBound && k > -kBridgeCoordBound &&
           k < kBridgeCoordBound;
}

Partition finish_partition(const BoxSpec& box, std::vector<Elem> elements, UnionFind& uf,
                           long merge_events, long bridge_links)
{
    Partition p;
    p.box = box;
    p.elements = std::move(elements);
    p.merge_events = merge_events;
    p.bridge_links = bridge_links;
    p.block_of.assign(p.elements.size(), -1);

    std::vector<long> block_of_root(p.elements.size(), -1);
    for (std::size_t i = 0; i < p.elements.size(); ++i) {
        const std::size_t root = uf.find(i);
        if (block_of_root[root] < 0) {
            block_of_root[root] = p.block_count++;
            p.block_sizes.push_back(0);
        }
        p.block_of[i] = block_of_root[root];
        ++p.block_sizes[static_cast<std::size_t>(p.block_of[i])];
    }
    return p;
}

struct CheckCounters
{
    long replay_checked = 0;
    long class_checked = 0;
    long atc_checked = 0;
    long atc_skipped = 0;
    long mismatch_total = 0;
    std::vector<Mismatch> mismatches;

    void record(std::string kind, const Elem& g, const Elem& h, const Elem& img,
                std::string detail)
    {
        ++mismatch_total;
        if (mismatches.size() < 64)
            mismatches.push_back(Mismatch{std::move(kind), g, h, img, std::move(detail)});
    }

    void absorb(CheckCounters&& o)
    {
        replay_checked += o.replay_checked;
        class_checked += o.class_checked;
        atc_checked += o.atc_checked;
        atc_skipped += o.atc_skipped;
        mismatch_total += o.mismatch_total;
        for (auto& m : o.mismatches)
            if (mismatches.size() < 64)
                mismatches.push_back(std::move(m));
    }
};

struct ValidationState
{
    const std::vector<int>* class_codes = nullptr; // nullptr when unsupported
    CheckCounters counters;
};

// Full per-pair validation: replay the conjugator through the plain group
// operations, compare class labels, and confirm with the analytic decision
// procedure (whose witness must itself replay).
void validate_pair(const Group& group, const Twist& twist, const ConjContext& ctx,
                   const PowerCache& pc, const Elem& g, const Elem& h, const Elem& image,
                   ValidationState& vs)
{
    CheckCounters& cc = vs.counters;

    const Elem ref = group.twisted_conj(g, h, twist, pc);
    ++cc.replay_checked;
    if (ref != image)
        cc.record("replay", g, h, image, "conjugator does not replay to the merged image");

    try {
        const auto w = are_twisted_conjugate(ctx, h, image);
        ++cc.atc_checked;
        if (!w) {
            cc.record("conjugacy", g, h, image, "analytic decision denies an oracle merge");
        } else {
            const Elem wre = group.twisted_conj(w->g, h, twist, pc);
            if (wre != image)
                cc.record("witness", w->g, h, image, "analytic witness does not replay");
        }
    } catch (const DegenerateLatticeError&) {
        ++cc.atc_skipped;
    }
}

void validate_class_pair(const Elem& g, const Elem& h, long h_idx, const Elem& image,
                         long img_idx, ValidationState& vs)
{
    if (!vs.class_codes)
        return;
    ++vs.counters.class_checked;
    if ((*vs.class_codes)[static_cast<std::size_t>(h_idx)] !=
        (*vs.class_codes)[static_cast<std::size_t>(img_idx)])
        vs.counters.record("class", g, h, image, "merged elements carry different class labels");
}

int resolve_jobs(int jobs)
{
    if (jobs > 0)
        return jobs;
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

/// Shared precomputation for the fast kernel. The image of h = ((m,k),n)
/// under g = ((x,y),z) is (A^z (m,k) + W_j (x,y), j) with W_j = I - A^j M
/// and j = 2z+n (level-reversing) or j = n (level-preserving), so a sweep
/// costs one cached matrix-vector product per conjugator and level plus two
/// integer additions per element.
struct FastTables
{
    BoxGeom geom;
    std::vector<Elem> elements;
    std::vector<Conjugator> conjugators;
    long cz;
    long level_reach; // largest |image level|
    std::vector<std::vector<IntVec>> transported; // [z+cz][vector index]: A^z v
    std::vector<IntMat> shift_mat; // [j+level_reach]: I - A^j M

    FastTables(const Group& group, const Twist& twist, const BoxSpec& box)
        : geom(box), elements(enumerate_elements(geom)), conjugators(enumerate_conjugators(box)),
          cz(box.conj_z_bound)
    {
        const PowerCache powers(group.alpha());
        level_reach = twist.eps == -1 ? 2 * cz + geom.nb : geom.nb;

        transported.resize(static_cast<std::size_t>(2 * cz + 1));
        for (long z = -cz; z <= cz; ++z) {
            auto& tv = transported[static_cast<std::size_t>(z + cz)];
            tv.reserve(static_cast<std::size_t>(geom.side * geom.side));
            const IntMat& az = powers.pow(z);
            for (long m = -geom.vb; m <= geom.vb; ++m)
                for (long k = -geom.vb; k <= geom.vb; ++k)
                    tv.push_back(az.apply(IntVec{Int(m), Int(k)}));
        }

        shift_mat.resize(static_cast<std::size_t>(2 * level_reach + 1));
        for (long j = -level_reach; j <= level_reach; ++j)
            shift_mat[static_cast<std::size_t>(j + level_reach)] =
                IntMat::identity(2) - powers.pow(j) * twist.m;
    }

    long image_level(long z, long n, int eps) const { return eps == -1 ? 2 * z + n : n; }
};

/// Phase 1: every conjugation image that lands inside the box becomes a
/// direct union-find edge. Conjugators are sharded across threads; the edge
/// set (and hence the partition) does not depend on the shard count.
long sweep_direct_edges(const Group& group, const Twist& twist, const FastTables& tables,
                        int jobs, UnionFind& uf, ValidationState* vs)
{
    const BoxGeom& geom = tables.geom;
    const long nb = geom.nb, vcount = geom.side * geom.side, cz = tables.cz;
    const int nthreads = resolve_jobs(jobs);

    std::vector<std::vector<std::pair<std::int32_t, std::int32_t>>> buffers(
        static_cast<std::size_t>(nthreads));
    std::vector<CheckCounters> counters(static_cast<std::size_t>(nthreads));

#ifdef _OPENMP
#pragma omp parallel num_threads(nthreads)
#endif
    {
#ifdef _OPENMP
        const int tid = omp_get_thread_num();
#else
        const int tid = 0;
#endif
        auto& merges = buffers[static_cast<std::size_t>(tid)];
        ValidationState local;
        if (vs)
            local.class_codes = vs->class_codes;
        PowerCache pc(group.alpha());
        ConjContext ctx(group, twist);
        IntVec img(2);

#ifdef _OPENMP
#pragma omp for schedule(dynamic, 16)
#endif
        for (long c = 0; c < static_cast<long>(tables.conjugators.size()); ++c) {
            const Conjugator& cj = tables.conjugators[static_cast<std::size_t>(c)];
            const IntVec gv{Int(cj.x), Int(cj.y)};
            const auto& tv = tables.transported[static_cast<std::size_t>(cj.z + cz)];

            for (long n = -nb; n <= nb; ++n) {
                const long target = tables.image_level(cj.z, n, twist.eps);
                if (target < -nb || target > nb)
                    continue;
                const IntVec shift =
                    tables.shift_mat[static_cast<std::size_t>(target + tables.level_reach)]
                        .apply(gv);

                const long h_base = (n + nb) * vcount;
                for (long i2 = 0; i2 < vcount; ++i2) {
                    const IntVec& t2 = tv[static_cast<std::size_t>(i2)];
                    img[0] = t2[0] + shift[0];
                    img[1] = t2[1] + shift[1];
                    if (!fits_long(img[0]) || !fits_long(img[1]))
                        continue;
                    const long im = img[0].get_si(), ik = img[1].get_si();
                    if (!geom.vec_in_box(im, ik))
                        continue;
                    const long h_idx = h_base + i2;
                    const long img_idx = geom.index(im, ik, target);
                    merges.emplace_back(static_cast<std::int32_t>(h_idx),
                                        static_cast<std::int32_t>(img_idx));

                    if (!vs)
                        continue;
                    const Elem g = make_elem(cj.x, cj.y, cj.z);
                    const Elem& h = tables.elements[static_cast<std::size_t>(h_idx)];
                    const Elem& image = tables.elements[static_cast<std::size_t>(img_idx)];
                    validate_class_pair(g, h, h_idx, image, img_idx, local);
                    validate_pair(group, twist, ctx, pc, g, h, image, local);
                }
            }
        }
        counters[static_cast<std::size_t>(tid)] = std::move(local.counters);
    }

    long merge_events = 0;
    for (auto& buf : buffers) {
        merge_events += static_cast<long>(buf.size());
        for (const auto& [a, b] : buf)
            uf.merge(static_cast<std::size_t>(a), static_cast<std::size_t>(b));
    }
    if (vs)
        for (auto& cc : counters)
            vs->counters.absorb(std::move(cc));
    return merge_events;
}

/// Phase 2: images outside the box, grouped by image level so the key map
/// stays small. The first box element producing an image owns it; later
/// producers merge with the owner. Serial and in fixed scan order, so the
/// bridge structure is reproducible run to run.
long sweep_bridges(const Group& group, const Twist& twist, const FastTables& tables,
                   UnionFind& uf, ValidationState* vs)
{
    const BoxGeom& geom = tables.geom;
    const long nb = geom.nb, vcount = geom.side * geom.side, cz = tables.cz;

    PowerCache pc(group.alpha());
    ConjContext ctx(group, twist);
    IntVec img(2);
    long bridge_links = 0;

    struct Owner
    {
        std::int32_t h_idx;
        std::int32_t conj_idx;
    };
    std::unordered_map<std::uint64_t, Owner> owners;

    for (long lvl = -tables.level_reach; lvl <= tables.level_reach; ++lvl) {
        owners.clear();
        const IntMat& w =
            tables.shift_mat[static_cast<std::size_t>(lvl + tables.level_reach)];

        for (long c = 0; c < static_cast<long>(tables.conjugators.size()); ++c) {
            const Conjugator& cj = tables.conjugators[static_cast<std::size_t>(c)];
            const long n = twist.eps == -1 ? lvl - 2 * cj.z : lvl;
            if (n < -nb || n > nb)
                continue;
            const IntVec shift = w.apply(IntVec{Int(cj.x), Int(cj.y)});
            const auto& tv = tables.transported[static_cast<std::size_t>(cj.z + cz)];
            const long h_base = (n + nb) * vcount;

            for (long i2 = 0; i2 < vcount; ++i2) {
                const IntVec& t2 = tv[static_cast<std::size_t>(i2)];
                img[0] = t2[0] + shift[0];
                img[1] = t2[1] + shift[1];
                if (!bridge_coords_ok(img))
                    continue;
                const long im = img[0].get_si(), ik = img[1].get_si();
                if (lvl >= -nb && lvl <= nb && geom.vec_in_box(im, ik))
                    continue; // box node, handled by the direct phase
                const long h_idx = h_base + i2;
                auto [it, inserted] = owners.emplace(
                    bridge_key(im, ik),
                    Owner{static_cast<std::int32_t>(h_idx), static_cast<std::int32_t>(c)});
                if (inserted)
                    continue;
                if (!uf.merge(static_cast<std::size_t>(it->second.h_idx),
                              static_cast<std::size_t>(h_idx)))
                    continue;
                ++bridge_links;

                if (!vs)
                    continue;
                // Both endpoints map to the same out-of-box element, so the
                // composite conjugator carries the owner to the newcomer.
                const Conjugator& oj =
                    tables.conjugators[static_cast<std::size_t>(it->second.conj_idx)];
                const Elem g0 = make_elem(oj.x, oj.y, oj.z);
                const Elem g1 = make_elem(cj.x, cj.y, cj.z);
                const Elem& h0 = tables.elements[static_cast<std::size_t>(it->second.h_idx)];
                const Elem& h1 = tables.elements[static_cast<std::size_t>(h_idx)];
                const Elem composite = group.mul(group.inv(g1, pc), g0, pc);
                validate_class_pair(composite, h0, it->second.h_idx, h1, h_idx, *vs);
                validate_pair(group, twist, ctx, pc, composite, h0, h1, *vs);
            }
        }
    }
    return bridge_links;
}

} // namespace

long Partition::index_of(const Elem& e) const
{
    if (!fits_long(e.n) || !fits_long(e.v[0]) || !fits_long(e.v[1]))
        return -1;
    const BoxGeom geom(box);
    const long n = e.n.get_si();
    if (n < -geom.nb || n > geom.nb)
        return -1;
    const long m = e.v[0].get_si(), k = e.v[1].get_si();
    if (!geom.vec_in_box(m, k))
        return -1;
    return geom.index(m, k, n);
}

Partition brute_force_partition(const Group& group, const Twist& twist, const BoxSpec& box,
                                int jobs)
{
    FastTables tables(group, twist, box);
    UnionFind uf(tables.elements.size());
    const long merge_events = sweep_direct_edges(group, twist, tables, jobs, uf, nullptr);
    const long bridge_links = sweep_bridges(group, twist, tables, uf, nullptr);
    return finish_partition(box, std::move(tables.elements), uf, merge_events, bridge_links);
}

Partition brute_force_partition_reference(const Group& group, const Twist& twist,
                                          const BoxSpec& box)
{
    const BoxGeom geom(box);
    std::vector<Elem> elements = enumerate_elements(geom);
    const std::vector<Conjugator> conjugators = enumerate_conjugators(box);
    UnionFind uf(elements.size());
    PowerCache powers(group.alpha());
    long merge_events = 0;
    long bridge_links = 0;

    auto in_box = [&](const Elem& img, long& im, long& ik, long& lvl) {
        if (!fits_long(img.n))
            return false;
        lvl = img.n.get_si();
        if (lvl < -geom.nb || lvl > geom.nb || !fits_long(img.v[0]) || !fits_long(img.v[1]))
            return false;
        im = img.v[0].get_si();
        ik = img.v[1].get_si();
        return geom.vec_in_box(im, ik);
    };

    // Direct pass: images landing inside the box.
    for (const Conjugator& cj : conjugators) {
        const Elem g = make_elem(cj.x, cj.y, cj.z);
        for (std::size_t i = 0; i < elements.size(); ++i) {
            const Elem img = group.twisted_conj(g, elements[i], twist, powers);
            long im, ik, lvl;
            if (in_box(img, im, ik, lvl)) {
                uf.merge(i, static_cast<std::size_t>(geom.index(im, ik, lvl)));
                ++merge_events;
            }
        }
    }

    // Bridge pass: images outside the box, grouped by image level so the
    // key map stays small. Two box elements hitting the same outside image
    // are conjugate through it.
    const long reach = twist.eps == -1 ? 2 * box.conj_z_bound + geom.nb : geom.nb;
    std::unordered_map<std::uint64_t, std::size_t> owners;
    for (long lvl = -reach; lvl <= reach; ++lvl) {
        owners.clear();
        for (const Conjugator& cj : conjugators) {
            const long n = twist.eps == -1 ? lvl - 2 * cj.z : lvl;
            if (n < -geom.nb || n > geom.nb)
                continue;
            const Elem g = make_elem(cj.x, cj.y, cj.z);
            for (long m = -geom.vb; m <= geom.vb; ++m) {
                for (long k = -geom.vb; k <= geom.vb; ++k) {
                    const std::size_t h_idx =
                        static_cast<std::size_t>(geom.index(m, k, n));
                    const Elem img = group.twisted_conj(g, elements[h_idx], twist, powers);
                    if (!fits_long(img.n) || img.n.get_si() != lvl)
                        throw std::logic_error("reference sweep: unexpected image level");
                    if (!bridge_coords_ok(img.v))
                        continue;
                    const long im = img.v[0].get_si(), ik = img.v[1].get_si();
                    if (lvl >= -geom.nb && lvl <= geom.nb && geom.vec_in_box(im, ik))
                        continue;
                    auto [it, inserted] = owners.emplace(bridge_key(im, ik), h_idx);
                    if (!inserted && uf.merge(it->second, h_idx))
                        ++bridge_links;
                }
            }
        }
    }
    return finish_partition(box, std::move(elements), uf, merge_events, bridge_links);
}

namespace {

enum class Cond { SumEven, SumOdd, MEven, MOdd, KEven, KOdd, Empty };

constexpr Cond kParityTable[6][4] = {
    {Cond::SumEven, Cond::SumOdd, Cond::Empty, Cond::Empty},
    {Cond::Empty, Cond::Empty, Cond::MEven, Cond::MOdd},
    {Cond::KEven, Cond::KOdd, Cond::Empty, Cond::Empty},
    {Cond::Empty, Cond::Empty, Cond::SumEven, Cond::SumOdd},
    {Cond::MEven, Cond::MOdd, Cond::Empty, Cond::Empty},
    {Cond::Empty, Cond::Empty, Cond::KEven, Cond::KOdd},
};

const char* cond_name(Cond c)
{
    switch (c) {
    case Cond::SumEven: return "m+k even";
    case Cond::SumOdd: return "m+k odd";
    case Cond::MEven: return "m even";
    case Cond::MOdd: return "m odd";
    case Cond::KEven: return "k even";
    case Cond::KOdd: return "k odd";
    case Cond::Empty: return "empty";
    }
    return "?";
}

bool cond_holds(Cond c, const Elem& e)
{
    const bool m_odd = mpz_odd_p(e.v[0].get_mpz_t()) != 0;
    const bool k_odd = mpz_odd_p(e.v[1].get_mpz_t()) != 0;
    switch (c) {
    case Cond::SumEven: return m_odd == k_odd;
    case Cond::SumOdd: return m_odd != k_odd;
    case Cond::MEven: return !m_odd;
    case Cond::MOdd: return m_odd;
    case Cond::KEven: return !k_odd;
    case Cond::KOdd: return k_odd;
    case Cond::Empty: return false;
    }
    return false;
}

} // namespace

CrossReport cross_validate(const Group& group, const Twist& twist, const BoxSpec& box, int jobs)
{
    CrossReport report;

    FastTables tables(group, twist, box);

    // Canonical class labels when the twist supports them; the sweep then
    // checks concordance pair by pair.
    std::vector<int> class_codes;
    std::vector<std::string> code_names;
    bool class_supported = true;
    try {
        ConjContext ctx(group, twist);
        std::map<ClassId, int> dense;
        class_codes.reserve(tables.elements.size());
        for (const Elem& e : tables.elements) {
            const ClassId id = class_id(ctx, e);
            auto [it, inserted] = dense.emplace(id, static_cast<int>(dense.size()));
            if (inserted)
                code_names.push_back(class_name(ctx, id).value_or(id.str()));
            class_codes.push_back(it->second);
        }
    } catch (const UnsupportedTwistError&) {
        class_supported = false;
    } catch (const DegenerateLatticeError&) {
        class_supported = false;
    }
    report.class_check_supported = class_supported;

    ValidationState vs;
    vs.class_codes = class_supported ? &class_codes : nullptr;

    UnionFind uf(tables.elements.size());
    const long merge_events = sweep_direct_edges(group, twist, tables, jobs, uf, &vs);
    const long bridge_links = sweep_bridges(group, twist, tables, uf, &vs);
    report.partition =
        finish_partition(box, std::move(tables.elements), uf, merge_events, bridge_links);

    report.replay_checked = vs.counters.replay_checked;
    report.class_pairs_checked = vs.counters.class_checked;
    report.conjugacy_checked = vs.counters.atc_checked;
    report.conjugacy_skipped_degenerate = vs.counters.atc_skipped;
    report.mismatch_total = vs.counters.mismatch_total;
    report.mismatches = std::move(vs.counters.mismatches);

    const Partition& part = report.partition;

    // No block may span two class labels (the per-pair check implies it; this
    // pass re-verifies on the closed partition).
    if (class_supported) {
        std::vector<int> block_class(static_cast<std::size_t>(part.block_count), -1);
        for (std::size_t i = 0; i < part.elements.size(); ++i) {
            const auto b = static_cast<std::size_t>(part.block_of[i]);
            if (block_class[b] < 0) {
                block_class[b] = class_codes[i];
            } else if (block_class[b] != class_codes[i]) {
                ++report.mismatch_total;
                if (report.mismatches.size() < 64)
                    report.mismatches.push_back(
                        Mismatch{"class", make_elem(0, 0, 0), part.elements[i],
                                 part.elements[i], "block spans two class labels"});
            }
        }

        // Parity-table reproduction, meaningful for the built-in twist where
        // classes carry the names B1..B4.
        bool named = !code_names.empty() && code_names.size() <= 4;
        for (const std::string& name : code_names)
            if (name.size() != 2 || name[0] != 'B')
                named = false;
        if (named) {
            long cell_count[6][4] = {};
            bool cell_ok[6][4];
            for (auto& row : cell_ok)
                for (bool& b : row)
                    b = true;
            for (std::size_t i = 0; i < part.elements.size(); ++i) {
                const Elem& e = part.elements[i];
                const int j = static_cast<int>(mod_floor(e.n, 6).get_si());
                const int cls = code_names[static_cast<std::size_t>(class_codes[i])][1] - '1';
                ++cell_count[j][cls];
                const Cond cond = kParityTable[j][cls];
                if (cond == Cond::Empty || !cond_holds(cond, e))
                    cell_ok[j][cls] = false;
            }
            for (int j = 0; j < 6; ++j)
                for (int cls = 0; cls < 4; ++cls) {
                    LevelCell cell;
                    cell.j = j;
                    cell.cls = "B" + std::to_string(cls + 1);
                    const Cond cond = kParityTable[j][cls];
                    cell.condition = cond_name(cond);
                    cell.count = cell_count[j][cls];
                    cell.ok = cond == Cond::Empty ? cell.count == 0
                                                  : cell.count == 0 || cell_ok[j][cls];
                    if (!cell.ok)
                        report.level_table_ok = false;
                    report.level_table.push_back(cell);
                }
        }
    }

    report.analytic = reidemeister_number(group, twist);
    report.analytic_finite = report.analytic.is_finite();
    if (report.analytic_finite)
        report.block_count_matches = report.analytic == Int(part.block_count);

    std::sort(report.mismatches.begin(), report.mismatches.end(),
              [](const Mismatch& a, const Mismatch& b) {
                  if (a.kind != b.kind)
                      return a.kind < b.kind;
                  if (a.h.n != b.h.n)
                      return a.h.n < b.h.n;
                  return a.h.v < b.h.v;
              });
    return report;
}

} // namespace twistconj
