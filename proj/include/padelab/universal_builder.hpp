#ifndef PADELAB_UNIVERSAL_BUILDER_HPP
#define PADELAB_UNIVERSAL_BUILDER_HPP

#include "padelab/approx_oracle.hpp"
#include "padelab/pade.hpp"
#include "padelab/sampling.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace padelab {

/// Q(z) = prod (1 - z/w_i).
struct DenominatorSpec {
    Polynomial Q;
    std::vector<GaussianRational> roots;

    static DenominatorSpec from_roots(std::vector<GaussianRational> roots);
    std::size_t q() const { return roots.size(); }
    /// Throws PreconditionError unless Q matches the roots, Q(0) = 1 and every |w_i| >= 1.
    void validate() const;

    friend bool operator==(const DenominatorSpec&, const DenominatorSpec&) = default;
};

struct UniversalTask {
    RationalFunction target;
    CompactSetSpec K;
    Rational epsilon;

    friend bool operator==(const UniversalTask&, const UniversalTask&) = default;
};

struct BuildStep {
    std::size_t j = 0;             ///< f_{j+1} = f_j + increment
    std::size_t task = 0;
    Polynomial increment;
    std::size_t valuation_floor = 0;
    std::size_t checkpoint = 0;    ///< p_{n_{j+1}}: least element of mu >= deg f_{j+1}
    Rational step_epsilon;
    std::optional<Rational> perturbation;

    friend bool operator==(const BuildStep&, const BuildStep&) = default;
};

/// Approximation certificate for the checkpoint reached after one step.
struct Certificate {
    std::size_t task = 0;
    std::size_t step = 0;  ///< index j of f_j
    std::size_t p = 0;
    Rational error_K;      ///< upper bound of max over K of |f_j/Q - h|
    Rational error_L;      ///< upper bound of max over L of |f_j/Q - f|
    Polynomial denominator;
    bool within_epsilon = false;

    friend bool operator==(const Certificate&, const Certificate&) = default;
};

struct BuildTrace {
    std::vector<std::size_t> mu;
    Polynomial initial;  ///< f_0 = Q T
    Polynomial T;
    std::size_t q = 0;
    std::size_t checkpoint0 = 0;  ///< p_{n_0}
    std::vector<BuildStep> steps;
    Polynomial f_tilde;
    PowerSeries f;
    std::vector<Certificate> certificates;

    /// f_j, rebuilt from f_0 and the increments.
    Polynomial partial(std::size_t j) const;
    /// p_{n_j}
    std::size_t checkpoint(std::size_t j) const { return j == 0 ? checkpoint0 : steps.at(j - 1).checkpoint; }

    friend bool operator==(const BuildTrace&, const BuildTrace&) = default;
};

struct BuildOptions {
    std::size_t degree_cap = 64;
    std::size_t extra_terms = 8;  ///< coefficients of f kept past the last protected window
};

/// Least element of mu that is >= d; throws PreconditionError when mu is exhausted.
std::size_t least_at_least(const std::vector<std::size_t>& mu, std::size_t d);

BuildTrace build_universal(const DenominatorSpec& spec, const std::vector<UniversalTask>& tasks,
                           const std::vector<std::size_t>& mu, const Polynomial& T, const DiskSampleSpec& L,
                           const Rational& epsilon0, std::size_t rounds, const BuildOptions& options = {});

struct CheckpointCertificate {
    std::size_t j = 0;
    std::size_t p = 0;
    GaussianRational hankel_pq;
    GaussianRational hankel_p1q;
    PadeStatus status = PadeStatus::NotExists;
};

/// Recomputes [f; p_{n_j}/q] and checks it equals f_j/Q; for j >= 1 also that the degree is normal
/// with reduced denominator exactly Q. Throws VerificationError on any mismatch.
CheckpointCertificate verify_checkpoint(const BuildTrace& trace, const DenominatorSpec& spec, std::size_t j);

struct SpanMember {
    PowerSeries series;
    GaussianRational coefficient;
};

struct SpanCertificate {
    PadeResult combined;     ///< [sum a_k f_k; m/q]
    RationalFunction sum;    ///< sum a_k [f_k; m/q], reduced
    bool linear = false;     ///< the two agree exactly
    std::size_t reduced_degree = 0;  ///< degree of the reduced denominator, a divisor of Q
};

/// Requires every member's (m, q) approximant to exist with one shared denominator.
SpanCertificate span_pade_check(const std::vector<SpanMember>& members, std::size_t m, std::size_t q);

struct PoleSearchResult {
    bool holds = false;
    std::optional<std::size_t> p;
    double root_deviation = 0;  ///< at the witness
    double max_residual = 0;    ///< at the witness
};

/// Searches p in mu (within the truncation of f) for f in D_{p,q}, deg den = q, polar-ordered
/// roots within s_inv of W, and sampled errors below s_inv against h on K and against the
/// partial sum of f on L. Roots must carry residuals below `residual_bound`.
PoleSearchResult asymptotic_pole_predicate(const PowerSeries& f, const std::vector<std::size_t>& mu, std::size_t q,
                                           const std::vector<GaussianRational>& W, double alpha, const Rational& s_inv,
                                           const CompactSetSpec& K, const RationalFunction& h,
                                           const DiskSampleSpec& L, double residual_bound = 1e-9);

}  // namespace padelab

#endif
