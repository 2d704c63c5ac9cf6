#ifndef PADELAB_POLE_LAB_HPP
#define PADELAB_POLE_LAB_HPP

#include "padelab/pade.hpp"
#include "padelab/polynomial.hpp"
#include "padelab/power_series.hpp"

#include <cstddef>

namespace padelab {

/// f = P + c1 z^{m-1+n} + c2 z^{m+n}, with c2 solved so that [f; m/n] has a pole (or zero) at target.
struct PolePlacementWitness {
    Polynomial base;
    std::size_t m = 0;
    std::size_t n = 0;
    GaussianRational c1;
    GaussianRational c2;
    PowerSeries witness;
    GaussianRational target;
    /// P_{n-2} for poles, R_{m-2} for zeros: the part of the Jacobi determinant carrying c1^2 z^2.
    Polynomial auxiliary;
    /// Global sign of the Jacobi determinant relative to the closed-form expression.
    GaussianRational sign;
    PadeResult approximant;

    friend bool operator==(const PolePlacementWitness&, const PolePlacementWitness&) = default;
};

/// The series P + c1 z^{m-1+n} + c2 z^{m+n}, known to m+n+1 terms.
PowerSeries perturbed_series(const Polynomial& base, std::size_t m, std::size_t n, const GaussianRational& c1,
                             const GaussianRational& c2);

/// Requires deg P = m-1 >= 0, n >= 1, target != 0, c1 != 0. Throws RetryableError when the derived
/// c2 vanishes or the resulting (m, n) is not normal.
PolePlacementWitness place_pole(const Polynomial& base, std::size_t m, std::size_t n, const GaussianRational& target,
                                const GaussianRational& c1);

/// As place_pole, for a zero of the numerator. Also requires P(target) != 0.
PolePlacementWitness place_zero(const Polynomial& base, std::size_t m, std::size_t n, const GaussianRational& target,
                                const GaussianRational& c1);

/// Expansion of P / (1 - z/mu)^n to `trunc` terms; verifies [f; m/n] = P / (1 - z/mu)^n exactly.
/// Requires deg P <= m, P(mu) != 0, |mu| > 1 and trunc >= m + n + 1.
PowerSeries poles_outside_disk_witness(const Polynomial& base, std::size_t m, std::size_t n,
                                       const GaussianRational& mu, std::size_t trunc);

/// (1 - z/mu)^n
Polynomial power_of_linear_factor(const GaussianRational& mu, std::size_t n);

}  // namespace padelab

#endif
