#ifndef PADELAB_POLYNOMIAL_HPP
#define PADELAB_POLYNOMIAL_HPP

#include "padelab/gaussian_rational.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace padelab {

/// Dense univariate polynomial over the Gaussian rationals.
///
/// Trailing zero coefficients are stripped on construction, so the zero
/// polynomial has an empty coefficient vector and no degree or valuation.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<GaussianRational> coeffs);
    Polynomial(std::initializer_list<GaussianRational> coeffs)
        : Polynomial(std::vector<GaussianRational>(coeffs)) {}

    static Polynomial constant(GaussianRational c);
    /// c * z^k
    static Polynomial monomial(GaussianRational c, std::size_t k);
    /// prod (1 - z / w_i)
    static Polynomial from_inverse_roots(std::span<const GaussianRational> roots);

    bool is_zero() const { return coeffs_.empty(); }
    std::optional<std::size_t> degree() const { return degree_; }
    std::optional<std::size_t> valuation() const { return valuation_; }
    /// Degree with the zero polynomial mapped to 0.
    std::size_t degree_or_zero() const { return degree_.value_or(0); }

    std::span<const GaussianRational> coeffs() const { return coeffs_; }
    /// Coefficient of z^k; zero past the degree.
    GaussianRational coeff(std::size_t k) const;
    const GaussianRational& leading() const;

    GaussianRational operator()(const GaussianRational& z) const;

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Polynomial& o);
    Polynomial& operator*=(const GaussianRational& c);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(Polynomial a, const GaussianRational& c) { return a *= c; }
    friend Polynomial operator*(const GaussianRational& c, Polynomial a) { return a *= c; }
    Polynomial operator-() const;

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

    /// z^k * this
    Polynomial shifted(std::size_t k) const;
    /// Coefficients 0..k only.
    Polynomial truncated(std::size_t max_degree) const;
    Polynomial monic() const;

    std::string to_string() const;

private:
    void normalize();

    std::vector<GaussianRational> coeffs_;
    std::optional<std::size_t> degree_;
    std::optional<std::size_t> valuation_;
};

struct DivMod {
    Polynomial quotient;
    Polynomial remainder;
};

/// Euclidean division; throws PreconditionError on a zero divisor.
DivMod divmod(const Polynomial& a, const Polynomial& b);

/// Exact quotient a / b; throws VerificationError when the remainder is nonzero.
Polynomial exact_divide(const Polynomial& a, const Polynomial& b);

/// Monic gcd over the Gaussian-rational field. Throws PreconditionError when both are zero.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

enum class PolyOp { add, sub, mul };
Polynomial poly_arith(const Polynomial& a, const Polynomial& b, PolyOp op);

}  // namespace padelab

#endif
