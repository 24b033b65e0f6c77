#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace twistconj {

// Exact arbitrary-precision integer. Entries of powers of the Anosov matrix
// grow at a golden-ratio rate, so fixed-width arithmetic is not an option.
using Int = mpz_class;

inline Int abs_int(const Int& a) { return ::abs(a); }

inline Int gcd_int(const Int& a, const Int& b)
{
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

// Canonical residue in [0, m); requires m > 0.
inline Int mod_floor(const Int& a, const Int& m)
{
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

inline bool divides(const Int& d, const Int& a)
{
    return mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t()) != 0;
}

// Exact quotient; caller guarantees divisibility.
inline Int exact_div(const Int& a, const Int& d)
{
    Int q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t());
    return q;
}

inline bool fits_long(const Int& a) { return a.fits_slong_p(); }

inline long to_long(const Int& a)
{
    if (!a.fits_slong_p())
        throw std::overflow_error("integer too large for machine word: " + a.get_str());
    return a.get_si();
}

// A count that is either a nonnegative integer or infinite. Used for
// cokernel orders and Reidemeister numbers.
class Cardinal
{
public:
    static Cardinal infinite() { return Cardinal(std::nullopt); }
    static Cardinal finite(Int n) { return Cardinal(std::move(n)); }

    bool is_finite() const { return v_.has_value(); }

    const Int& value() const
    {
        if (!v_)
            throw std::logic_error("Cardinal: value() on infinite");
        return *v_;
    }

    bool operator==(const Cardinal& o) const { return v_ == o.v_; }
    bool operator==(const Int& n) const { return v_ && *v_ == n; }
    bool operator==(long n) const { return v_ && *v_ == n; }

    std::string str() const { return v_ ? v_->get_str() : std::string("infinite"); }

private:
    explicit Cardinal(std::optional<Int> v) : v_(std::move(v)) {}
    std::optional<Int> v_;
};

} // namespace twistconj
