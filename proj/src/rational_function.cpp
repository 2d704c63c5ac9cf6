#include "padelab/rational_function.hpp"

#include "padelab/errors.hpp"

namespace padelab {

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : numerator(std::move(num)), denominator(std::move(den)) {
    if (denominator.is_zero()) throw PreconditionError("rational function with zero denominator");
}

GaussianRational RationalFunction::operator()(const GaussianRational& z) const {
    GaussianRational d = denominator(z);
    if (d.is_zero()) throw PreconditionError("denominator vanishes at " + z.to_string());
    return numerator(z) / d;
}

RationalFunction RationalFunction::reduced() const {
    if (numerator.is_zero()) return {};
    Polynomial g = gcd(numerator, denominator);
    Polynomial num = exact_divide(numerator, g);
    Polynomial den = exact_divide(denominator, g);
    GaussianRational scale = den.coeff(0).is_zero() ? den.leading() : den.coeff(0);
    GaussianRational inv = scale.inverse();
    return {num * inv, den * inv};
}

std::string RationalFunction::to_string() const {
    return "(" + numerator.to_string() + ") / (" + denominator.to_string() + ")";
}

bool same_function(const RationalFunction& a, const RationalFunction& b) {
    return a.numerator * b.denominator == b.numerator * a.denominator;
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    if (a.denominator == b.denominator) return {a.numerator - b.numerator, a.denominator};
    return {a.numerator * b.denominator - b.numerator * a.denominator, a.denominator * b.denominator};
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    if (a.denominator == b.denominator) return {a.numerator + b.numerator, a.denominator};
    return {a.numerator * b.denominator + b.numerator * a.denominator, a.denominator * b.denominator};
}

RationalFunction operator*(const Polynomial& p, const RationalFunction& r) {
    return {p * r.numerator, r.denominator};
}

}  // namespace padelab
