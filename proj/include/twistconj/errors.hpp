#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace twistconj {

// Negative power requested of a matrix with determinant outside {+1,-1}.
struct NonInvertibleError : std::domain_error
{
    using std::domain_error::domain_error;
};

// Twist data violating the compatibility relation M*A = A^eps*M.
struct IncompatibleTwistError : std::invalid_argument
{
    using std::invalid_argument::invalid_argument;
};

// Coset labels requested in an infinite quotient (some diagonal entry zero).
struct InfiniteCokernelError : std::domain_error
{
    using std::domain_error::domain_error;
};

// Operation defined only for a restricted family of twists (e.g. canonical
// class labels exist only in the level-reversing case).
struct UnsupportedTwistError : std::invalid_argument
{
    using std::invalid_argument::invalid_argument;
};

// det(I - A^n M) = 0 at the level under decision; the lattice-based
// procedure does not apply and no answer is guessed.
struct DegenerateLatticeError : std::domain_error
{
    using std::domain_error::domain_error;
};

// Orbit is not setwise invariant under the torus action of the twist.
struct NotInvariantError : std::invalid_argument
{
    using std::invalid_argument::invalid_argument;
};

// Matrix outside the supported family (not unimodular/hyperbolic/symmetric
// where required).
struct UnsupportedMatrixError : std::invalid_argument
{
    using std::invalid_argument::invalid_argument;
};

struct DomainError : std::domain_error
{
    using std::domain_error::domain_error;
};

// Some power j has det(I - F^j) = 0, so the congruence sum is undefined.
struct InfiniteReidemeisterError : std::runtime_error
{
    InfiniteReidemeisterError(long power_, const std::string& msg)
        : std::runtime_error(msg), power(power_)
    {
    }
    long power;
};

struct ParseError : std::runtime_error
{
    ParseError(std::size_t position_, const std::string& msg)
        : std::runtime_error(msg + " (at position " + std::to_string(position_) + ")"),
          position(position_)
    {
    }
    std::size_t position;
};

} // namespace twistconj
