#pragma once

#include <cmath>
#include <complex>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include "twistconj/frac.hpp"

namespace twistconj {

/// Exact integer combination of roots of unity e^{2*pi*i*angle} with
/// rational angles. Angles of denominator <= 2 are folded into the integer
/// part (e^{i*pi} = -1), so values that are integers are reported exactly;
/// deeper cyclotomic relations are not normalized and equality for those
/// falls back to a 1e-12 float comparison.
class RootSum
{
public:
    RootSum() = default;

    static RootSum integer(Int k)
    {
        RootSum r;
        r.add_term(Frac(), std::move(k));
        return r;
    }

    static RootSum root(const Frac& angle, Int coeff = Int(1))
    {
        RootSum r;
        r.add_term(angle, std::move(coeff));
        return r;
    }

    RootSum operator+(const RootSum& o) const
    {
        RootSum r = *this;
        for (const auto& [angle, coeff] : o.terms_)
            r.add_term(angle, coeff);
        return r;
    }

    RootSum operator*(const Int& k) const
    {
        RootSum r;
        for (const auto& [angle, coeff] : terms_)
            r.add_term(angle, coeff * k);
        return r;
    }

    bool operator==(const RootSum& o) const { return terms_ == o.terms_; }
    bool operator!=(const RootSum& o) const { return !(*this == o); }

    bool is_integer() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_zero()); }

    std::optional<Int> as_integer() const
    {
        if (terms_.empty())
            return Int(0);
        if (terms_.size() == 1 && terms_.begin()->first.is_zero())
            return terms_.begin()->second;
        return std::nullopt;
    }

    std::complex<double> eval() const
    {
        std::complex<double> acc(0.0, 0.0);
        for (const auto& [angle, coeff] : terms_) {
            const double a = 2.0 * M_PI * angle.to_double();
            acc += coeff.get_d() * std::complex<double>(std::cos(a), std::sin(a));
        }
        return acc;
    }

    std::string str() const
    {
        if (terms_.empty())
            return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [angle, coeff] : terms_) {
            if (!first && coeff > 0)
                os << "+";
            first = false;
            if (angle.is_zero()) {
                os << coeff.get_str();
            } else {
                if (coeff == -1)
                    os << "-";
                else if (coeff != 1)
                    os << coeff.get_str() << "*";
                os << "e(" << angle.str() << ")";
            }
        }
        return os.str();
    }

private:
    void add_term(Frac angle, Int coeff)
    {
        if (coeff == 0)
            return;
        if (angle.den() == 2) { // e^{i*pi} = -1 exactly
            angle = Frac();
            coeff = -coeff;
        }
        auto [it, inserted] = terms_.emplace(angle, coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second == 0)
                terms_.erase(it);
        }
    }

    std::map<Frac, Int> terms_;
};

inline bool approx_equal(const RootSum& a, const RootSum& b, double tol = 1e-12)
{
    if (a == b)
        return true;
    return std::abs(a.eval() - b.eval()) < tol;
}

} // namespace twistconj
