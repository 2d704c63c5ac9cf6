#ifndef PADELAB_POWER_SERIES_HPP
#define PADELAB_POWER_SERIES_HPP

#include "padelab/gaussian_rational.hpp"
#include "padelab/polynomial.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace padelab {

/// Truncated power series a_0 + a_1 z + ... + a_{N-1} z^{N-1} + O(z^N).
///
/// Coefficients at index >= truncation_len() are unknown. Reading one is an
/// error; nothing in the library pads with zeros.
class PowerSeries {
public:
    PowerSeries() = default;
    explicit PowerSeries(std::vector<GaussianRational> coeffs) : coeffs_(std::move(coeffs)) {}

    /// Expansion of a polynomial, known to `truncation_len` terms (zeros past its degree are genuine).
    static PowerSeries from_polynomial(const Polynomial& p, std::size_t truncation_len);

    std::size_t truncation_len() const { return coeffs_.size(); }
    std::span<const GaussianRational> coeffs() const { return coeffs_; }

    /// a_k; throws TruncationError for k >= truncation_len().
    const GaussianRational& at(std::size_t k) const;
    /// a_k for signed k, with negative indices read as zero.
    GaussianRational at_signed(long k) const;

    /// S_N: sum of a_k z^k for k <= n.
    Polynomial partial_sum(std::size_t n) const;
    /// Same series known to fewer terms.
    PowerSeries truncated(std::size_t len) const;

    friend bool operator==(const PowerSeries& a, const PowerSeries& b) { return a.coeffs_ == b.coeffs_; }

private:
    std::vector<GaussianRational> coeffs_;
};

/// Product of a series with a polynomial, to the series' truncation.
PowerSeries multiply(const PowerSeries& s, const Polynomial& p);

/// Product of two series, to the shorter truncation.
PowerSeries multiply(const PowerSeries& a, const PowerSeries& b);

/// Linear combination; truncation is the shortest among the inputs.
PowerSeries add(const PowerSeries& a, const PowerSeries& b);
PowerSeries scale(const PowerSeries& s, const GaussianRational& c);

/// 1/s to the same truncation. Requires a_0 != 0.
PowerSeries series_reciprocal(const PowerSeries& s);

/// s/q to the same truncation. Requires q(0) != 0.
PowerSeries series_div_poly(const PowerSeries& s, const Polynomial& q);

/// Valuation of (q*s - p), reading coefficients up to `through` (inclusive).
/// Returns through+1 when every coefficient in range vanishes.
std::size_t linearized_valuation(const PowerSeries& s, const Polynomial& p, const Polynomial& q,
                                 std::size_t through);

}  // namespace padelab

#endif
