#ifndef PADELAB_APPROX_ORACLE_HPP
#define PADELAB_APPROX_ORACLE_HPP

#include "padelab/polynomial.hpp"
#include "padelab/rational_function.hpp"
#include "padelab/sampling.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace padelab {

/// P(w) must avoid both 0 and alpha.
struct PointConstraint {
    GaussianRational w;
    GaussianRational alpha;
};

struct ApproxTask {
    RationalFunction target;
    CompactSetSpec K;
    DiskSampleSpec L;
    Rational epsilon;
    std::size_t valuation_floor = 1;
    std::vector<PointConstraint> point_constraints;
    /// Cap on deg Q in P = z^p Q.
    std::size_t degree_cap = 64;
    /// Optional hard cap on deg P (used for gap blocks).
    std::optional<std::size_t> max_degree;
};

struct ApproxResult {
    Polynomial polynomial;
    std::size_t fitted_degree = 0;         ///< deg Q of the accepted least-squares fit
    std::optional<Rational> perturbation;  ///< coefficient of the monomial added for point constraints
    Rational error_K;                      ///< upper bound of the sampled error on K
    Rational error_L;                      ///< upper bound of the sampled size on L
};

/// Polynomial P with val(P) >= p that is within epsilon of the target on K, within epsilon of 0 on L
/// and avoids the forbidden values at the constraint points. Throws EscalationError when no
/// degree up to the cap meets epsilon/2 on the samples.
ApproxResult approx_with_valuation(const ApproxTask& task);

/// Independent re-check of every bound promised by approx_with_valuation.
bool check_approximation(const ApproxTask& task, const Polynomial& p);

}  // namespace padelab

#endif
