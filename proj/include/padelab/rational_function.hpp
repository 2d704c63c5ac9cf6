#ifndef PADELAB_RATIONAL_FUNCTION_HPP
#define PADELAB_RATIONAL_FUNCTION_HPP

#include "padelab/polynomial.hpp"

#include <string>

namespace padelab {

/// numerator / denominator with a nonzero denominator. No reduction is implied.
struct RationalFunction {
    Polynomial numerator;
    Polynomial denominator = Polynomial::constant(1);

    RationalFunction() = default;
    RationalFunction(Polynomial num, Polynomial den);
    explicit RationalFunction(Polynomial num) : numerator(std::move(num)) {}

    /// Throws PreconditionError where the denominator vanishes.
    GaussianRational operator()(const GaussianRational& z) const;

    /// Coprime form with denominator(0) = 1 when the denominator does not vanish
    /// at the origin, otherwise with a monic denominator.
    RationalFunction reduced() const;

    std::string to_string() const;

    friend bool operator==(const RationalFunction&, const RationalFunction&) = default;
};

/// Equality as functions: a.num * b.den == b.num * a.den.
bool same_function(const RationalFunction& a, const RationalFunction& b);

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
RationalFunction operator*(const Polynomial& p, const RationalFunction& r);

}  // namespace padelab

#endif
