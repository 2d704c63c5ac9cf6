#ifndef PADELAB_PADE_HPP
#define PADELAB_PADE_HPP

#include "padelab/gaussian_rational.hpp"
#include "padelab/polynomial.hpp"
#include "padelab/power_series.hpp"
#include "padelab/rational_function.hpp"

#include <cstddef>
#include <string_view>

namespace padelab {

enum class PadeStatus {
    Normal,           ///< C_{m,n} != 0 and C_{m+1,n} != 0
    ExistsNonNormal,  ///< C_{m,n} != 0, C_{m+1,n} == 0
    DegenerateExists, ///< C_{m,n} == 0 but the approximant exists; see PadeResult::degenerate_factor
    NotExists,
};

std::string_view to_string(PadeStatus s);

/// Classification of the (m, n) entry of the Padé table of a series.
///
/// For every status except NotExists, numerator/denominator is the approximant
/// in irreducible form with denominator(0) = 1. For NotExists they hold the
/// reduced candidate that failed the order condition (diagnostic only).
struct PadeResult {
    std::size_t m = 0;
    std::size_t n = 0;
    Polynomial numerator;
    Polynomial denominator;
    GaussianRational hankel_mn;   ///< C_{m,n}
    GaussianRational hankel_m1n;  ///< C_{m+1,n}
    PadeStatus status = PadeStatus::NotExists;
    /// T with T(0) = 0 and (Jacobi numerator, Jacobi denominator) = T * (numerator, denominator).
    /// Only meaningful for DegenerateExists.
    Polynomial degenerate_factor;

    bool exists() const { return status != PadeStatus::NotExists; }
    RationalFunction as_function() const { return {numerator, denominator}; }

    friend bool operator==(const PadeResult&, const PadeResult&) = default;
};

/// The determinantal pair (P-hat, Q-hat) of Jacobi's formulas.
struct JacobiPair {
    Polynomial numerator;
    Polynomial denominator;
};

/// Hankel determinant C_{m,n}: n x n, row i = (a_{m-n+1+i}, ..., a_{m+i}), a_j = 0 for j < 0.
/// Needs truncation_len >= m + n (entries up to a_{m+n-1}).
GaussianRational hankel_det(const PowerSeries& s, std::size_t m, std::size_t n);

/// Jacobi's determinant pair. Needs truncation_len >= m + n + 1.
JacobiPair jacobi_pair(const PowerSeries& s, std::size_t m, std::size_t n);

/// Solves the n x n Toeplitz-Hankel system for the denominator; falls back to the
/// Jacobi route when C_{m,n} = 0.
PadeResult pade_via_system(const PowerSeries& s, std::size_t m, std::size_t n);

/// Builds the approximant from Jacobi's determinants and classifies it.
PadeResult pade_via_jacobi(const PowerSeries& s, std::size_t m, std::size_t n);

/// Checks [1/S; n/m] = 1/[S; m/n] and S in D_{m,n} iff 1/S in D_{n,m}.
/// Requires a_0 != 0, truncation >= m + n + 1 and that [S; m/n] exists.
bool reciprocal_duality_check(const PowerSeries& s, std::size_t m, std::size_t n);

/// val(Q*S - P) >= m + n + 1, read exactly from the series.
bool satisfies_order_condition(const PowerSeries& s, const PadeResult& r);

}  // namespace padelab

#endif
