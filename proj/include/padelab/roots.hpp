#ifndef PADELAB_ROOTS_HPP
#define PADELAB_ROOTS_HPP

#include "padelab/polynomial.hpp"

#include <complex>
#include <vector>

namespace padelab {

struct NumericRoot {
    std::complex<double> value;
    /// |q(root)| evaluated at working precision on the unrounded root.
    double residual = 0;
};

/// All roots of q (with multiplicity) by Aberth iteration at `precision_bits` binary digits,
/// ordered by order_roots_polar with alpha = 0 and no guard band.
/// Throws VerificationError when the iteration does not settle.
std::vector<NumericRoot> poly_roots_numeric(const Polynomial& q, unsigned precision_bits = 256);

/// Sorts by (modulus, argument shifted into [alpha, alpha + 2 pi)). Moduli closer than
/// `modulus_tol` (relative) count as equal. Throws PreconditionError when a root's argument is
/// within `guard` of alpha modulo 2 pi, or when a root is zero.
std::vector<std::complex<double>> order_roots_polar(std::vector<std::complex<double>> roots, double alpha,
                                                    double guard = 1e-9, double modulus_tol = 1e-9);

}  // namespace padelab

#endif
