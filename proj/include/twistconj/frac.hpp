#pragma once

#include <string>

#include "twistconj/integers.hpp"

namespace twistconj {

/// Reduced rational in [0,1): 0 <= num < den, gcd(num,den) = 1 (value 0 is
/// stored as 0/1). Models both dual-torus coordinates and angles of roots
/// of unity, both of which live mod 1.
class Frac
{
public:
    Frac() : num_(0), den_(1) {}
    Frac(Int num, Int den);

    const Int& num() const { return num_; }
    const Int& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }

    Frac operator+(const Frac& o) const { return Frac(num_ * o.den_ + o.num_ * den_, den_ * o.den_); }
    Frac operator-() const { return Frac(-num_, den_); }

    /// (k * this) mod 1.
    Frac scaled(const Int& k) const { return Frac(k * num_, den_); }

    bool operator==(const Frac& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Frac& o) const { return !(*this == o); }
    bool operator<(const Frac& o) const { return num_ * o.den_ < o.num_ * den_; }

    double to_double() const { return mpq_class(num_, den_).get_d(); }

    std::string str() const
    {
        return den_ == 1 ? num_.get_str() : num_.get_str() + "/" + den_.get_str();
    }

private:
    Int num_, den_;
};

inline Frac::Frac(Int num, Int den) : num_(std::move(num)), den_(std::move(den))
{
    if (den_ == 0)
        throw std::domain_error("Frac: zero denominator");
    if (den_ < 0) {
        den_ = -den_;
        num_ = -num_;
    }
    num_ = mod_floor(num_, den_);
    const Int g = gcd_int(num_, den_);
    if (g > 1) {
        num_ = exact_div(num_, g);
        den_ = exact_div(den_, g);
    }
    if (num_ == 0)
        den_ = 1;
}

} // namespace twistconj
