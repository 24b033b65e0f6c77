#include "twistconj/intmat.hpp"

#include <sstream>
#include <stdexcept>

#include "twistconj/errors.hpp"

namespace twistconj {

IntMat::IntMat(int rows, int cols)
    : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols)
{
    if (rows < 0 || cols < 0)
        throw std::invalid_argument("IntMat: negative dimension");
}

IntMat::IntMat(std::initializer_list<std::initializer_list<long>> rows)
    : rows_(static_cast<int>(rows.size())), cols_(0)
{
    for (const auto& r : rows) {
        if (cols_ == 0)
            cols_ = static_cast<int>(r.size());
        else if (static_cast<int>(r.size()) != cols_)
            throw std::invalid_argument("IntMat: ragged initializer");
        for (long x : r)
            a_.emplace_back(x);
    }
}

IntMat IntMat::identity(int k)
{
    IntMat m(k, k);
    for (int i = 0; i < k; ++i)
        m.at(i, i) = 1;
    return m;
}

IntMat IntMat::operator+(const IntMat& o) const
{
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("IntMat: shape mismatch in +");
    IntMat r(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i)
        r.a_[i] = a_[i] + o.a_[i];
    return r;
}

IntMat IntMat::operator-(const IntMat& o) const
{
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("IntMat: shape mismatch in -");
    IntMat r(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i)
        r.a_[i] = a_[i] - o.a_[i];
    return r;
}

IntMat IntMat::operator-() const
{
    IntMat r(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i)
        r.a_[i] = -a_[i];
    return r;
}

IntMat IntMat::operator*(const IntMat& o) const
{
    if (cols_ != o.rows_)
        throw std::invalid_argument("IntMat: shape mismatch in *");
    IntMat r(rows_, o.cols_);
    Int acc;
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < o.cols_; ++j) {
            acc = 0;
            for (int t = 0; t < cols_; ++t)
                acc += at(i, t) * o.at(t, j);
            r.at(i, j) = acc;
        }
    }
    return r;
}

IntMat IntMat::transpose() const
{
    IntMat r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            r.at(j, i) = at(i, j);
    return r;
}

bool IntMat::is_symmetric() const
{
    if (!is_square())
        return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = i + 1; j < cols_; ++j)
            if (at(i, j) != at(j, i))
                return false;
    return true;
}

Int IntMat::trace() const
{
    if (!is_square())
        throw std::invalid_argument("IntMat: trace of non-square matrix");
    Int t = 0;
    for (int i = 0; i < rows_; ++i)
        t += at(i, i);
    return t;
}

IntVec IntMat::apply(const IntVec& v) const
{
    if (static_cast<int>(v.size()) != cols_)
        throw std::invalid_argument("IntMat: vector length mismatch");
    IntVec r(rows_);
    for (int i = 0; i < rows_; ++i) {
        Int acc = 0;
        for (int j = 0; j < cols_; ++j)
            acc += at(i, j) * v[j];
        r[i] = acc;
    }
    return r;
}

std::string IntMat::str() const
{
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < rows_; ++i) {
        os << (i ? ",[" : "[");
        for (int j = 0; j < cols_; ++j)
            os << (j ? "," : "") << at(i, j).get_str();
        os << "]";
    }
    os << "]";
    return os.str();
}

Int det(const IntMat& m)
{
    if (!m.is_square())
        throw std::invalid_argument("det: non-square matrix");
    const int k = m.rows();
    if (k == 0)
        return 1;
    if (k == 1)
        return m.at(0, 0);
    if (k == 2)
        return m.at(0, 0) * m.at(1, 1) - m.at(0, 1) * m.at(1, 0);

    // Bareiss: every intermediate division is exact.
    IntMat b = m;
    int sign = 1;
    Int prev = 1;
    for (int i = 0; i < k - 1; ++i) {
        if (b.at(i, i) == 0) {
            int p = -1;
            for (int r = i + 1; r < k; ++r)
                if (b.at(r, i) != 0) {
                    p = r;
                    break;
                }
            if (p < 0)
                return 0;
            for (int c = 0; c < k; ++c)
                std::swap(b.at(i, c), b.at(p, c));
            sign = -sign;
        }
        for (int r = i + 1; r < k; ++r)
            for (int c = i + 1; c < k; ++c)
                b.at(r, c) = exact_div(b.at(r, c) * b.at(i, i) - b.at(r, i) * b.at(i, c), prev);
        prev = b.at(i, i);
    }
    return sign > 0 ? b.at(k - 1, k - 1) : Int(-b.at(k - 1, k - 1));
}

bool is_unimodular(const IntMat& m)
{
    if (!m.is_square())
        return false;
    const Int d = det(m);
    return d == 1 || d == -1;
}

namespace {

// Determinant of the minor with row i and column j removed.
Int minor_det(const IntMat& m, int i, int j)
{
    const int k = m.rows();
    IntMat sub(k - 1, k - 1);
    for (int r = 0, rr = 0; r < k; ++r) {
        if (r == i)
            continue;
        for (int c = 0, cc = 0; c < k; ++c) {
            if (c == j)
                continue;
            sub.at(rr, cc) = m.at(r, c);
            ++cc;
        }
        ++rr;
    }
    return det(sub);
}

} // namespace

IntMat inverse_unimodular(const IntMat& m)
{
    if (!m.is_square())
        throw NonInvertibleError("inverse: non-square matrix");
    const Int d = det(m);
    if (d != 1 && d != -1)
        throw NonInvertibleError("inverse: determinant " + d.get_str() + " is not a unit");
    const int k = m.rows();
    IntMat inv(k, k);
    if (k == 1) {
        inv.at(0, 0) = d; // m = [d] with d = +-1
        return inv;
    }
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            Int cof = minor_det(m, j, i);
            if ((i + j) % 2 != 0)
                cof = -cof;
            inv.at(i, j) = d == 1 ? cof : Int(-cof);
        }
    return inv;
}

IntMat mat_pow(const IntMat& m, const Int& n)
{
    if (!m.is_square())
        throw std::invalid_argument("mat_pow: non-square matrix");
    IntMat base = m;
    Int e = n;
    if (e < 0) {
        base = inverse_unimodular(m); // throws NonInvertibleError when det != +-1
        e = -e;
    }
    IntMat result = IntMat::identity(m.rows());
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t()))
            result = result * base;
        e >>= 1;
        if (e > 0)
            base = base * base;
    }
    return result;
}

namespace {

struct PivotPos
{
    int i = -1, j = -1;
};

// Smallest nonzero absolute value in the trailing submatrix, row-major
// tie-break. Fixing this rule keeps decompositions byte-stable.
PivotPos find_pivot(const IntMat& d, int t)
{
    PivotPos best;
    Int best_abs = 0;
    for (int i = t; i < d.rows(); ++i)
        for (int j = t; j < d.cols(); ++j) {
            if (d.at(i, j) == 0)
                continue;
            Int a = abs_int(d.at(i, j));
            if (best.i < 0 || a < best_abs) {
                best = {i, j};
                best_abs = a;
            }
        }
    return best;
}

} // namespace

SnfDecomposition snf(const IntMat& m)
{
    const int rows = m.rows(), cols = m.cols();
    SnfDecomposition s{m, IntMat::identity(rows), IntMat::identity(cols)};
    IntMat& d = s.d;
    IntMat& u = s.u;
    IntMat& v = s.v;

    auto swap_rows = [&](int a, int b) {
        if (a == b)
            return;
        for (int c = 0; c < cols; ++c)
            std::swap(d.at(a, c), d.at(b, c));
        for (int c = 0; c < rows; ++c)
            std::swap(u.at(a, c), u.at(b, c));
    };
    auto swap_cols = [&](int a, int b) {
        if (a == b)
            return;
        for (int r = 0; r < rows; ++r)
            std::swap(d.at(r, a), d.at(r, b));
        for (int r = 0; r < cols; ++r)
            std::swap(v.at(r, a), v.at(r, b));
    };
    auto row_sub = [&](int dst, int src, const Int& q) { // row dst -= q*row src
        if (q == 0)
            return;
        for (int c = 0; c < cols; ++c)
            d.at(dst, c) -= q * d.at(src, c);
        for (int c = 0; c < rows; ++c)
            u.at(dst, c) -= q * u.at(src, c);
    };
    auto col_sub = [&](int dst, int src, const Int& q) { // col dst -= q*col src
        if (q == 0)
            return;
        for (int r = 0; r < rows; ++r)
            d.at(r, dst) -= q * d.at(r, src);
        for (int r = 0; r < cols; ++r)
            v.at(r, dst) -= q * v.at(r, src);
    };

    const int steps = rows < cols ? rows : cols;
    for (int t = 0; t < steps; ++t) {
        for (;;) {
            const PivotPos p = find_pivot(d, t);
            if (p.i < 0)
                break; // trailing submatrix is zero
            swap_rows(t, p.i);
            swap_cols(t, p.j);

            bool clean = true;
            for (int i = t + 1; i < rows; ++i) {
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), d.at(i, t).get_mpz_t(), d.at(t, t).get_mpz_t());
                row_sub(i, t, q);
                if (d.at(i, t) != 0)
                    clean = false;
            }
            for (int j = t + 1; j < cols; ++j) {
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), d.at(t, j).get_mpz_t(), d.at(t, t).get_mpz_t());
                col_sub(j, t, q);
                if (d.at(t, j) != 0)
                    clean = false;
            }
            if (!clean)
                continue; // pivot shrank; repeat with the smaller one

            // Divisibility chain: fold any non-divisible trailing entry into
            // row t and keep reducing.
            bool chain_ok = true;
            for (int i = t + 1; i < rows && chain_ok; ++i)
                for (int j = t + 1; j < cols && chain_ok; ++j)
                    if (!divides(d.at(t, t), d.at(i, j))) {
                        row_sub(t, i, Int(-1)); // row t += row i
                        chain_ok = false;
                    }
            if (chain_ok)
                break;
        }
        if (t < rows && t < cols && d.at(t, t) < 0) {
            for (int c = 0; c < cols; ++c)
                d.at(t, c) = -d.at(t, c);
            for (int c = 0; c < rows; ++c)
                u.at(t, c) = -u.at(t, c);
        }
    }
    return s;
}

std::optional<IntVec> solve_in_lattice(const SnfDecomposition& s, const IntVec& v)
{
    const int rows = s.d.rows(), cols = s.d.cols();
    if (static_cast<int>(v.size()) != rows)
        throw std::invalid_argument("solve_in_lattice: vector length mismatch");
    const IntVec r = s.u.apply(v);
    static const Int zero(0);
    IntVec y(cols, zero);
    for (int i = 0; i < rows; ++i) {
        const Int& di = i < cols ? s.d.at(i, i) : zero;
        if (di == 0) {
            if (r[i] != 0)
                return std::nullopt;
        } else {
            if (!divides(di, r[i]))
                return std::nullopt;
            y[i] = exact_div(r[i], di);
        }
    }
    return s.v.apply(y);
}

std::optional<IntVec> lattice_member(const IntMat& m, const IntVec& v)
{
    return solve_in_lattice(snf(m), v);
}

Cardinal coker_order(const IntMat& m)
{
    const Int d = det(m);
    if (d == 0)
        return Cardinal::infinite();
    return Cardinal::finite(abs_int(d));
}

std::vector<Int> coset_label(const SnfDecomposition& s, const IntVec& v)
{
    const int rows = s.d.rows(), cols = s.d.cols();
    const IntVec r = s.u.apply(v);
    static const Int zero(0);
    std::vector<Int> label(rows);
    for (int i = 0; i < rows; ++i) {
        const Int& di = i < cols ? s.d.at(i, i) : zero;
        if (di == 0)
            throw InfiniteCokernelError("coset_label: infinite cokernel (zero diagonal entry)");
        label[i] = mod_floor(r[i], di);
    }
    return label;
}

IntVec vec_add(const IntVec& a, const IntVec& b)
{
    IntVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = a[i] + b[i];
    return r;
}

IntVec vec_sub(const IntVec& a, const IntVec& b)
{
    IntVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = a[i] - b[i];
    return r;
}

IntVec vec_neg(const IntVec& a)
{
    IntVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = -a[i];
    return r;
}

} // namespace twistconj
