#ifndef PADELAB_GAP_TRANSFER_HPP
#define PADELAB_GAP_TRANSFER_HPP

#include "padelab/universal_builder.hpp"

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace padelab {

/// Gap windows (p_m, q_m] with a weight table phi[x] for x = 0..phi.size()-1.
struct GapSchedule {
    std::vector<std::pair<std::size_t, std::size_t>> windows;
    std::vector<std::size_t> phi;

    /// Throws PreconditionError unless 1 <= p_0 < q_0 <= p_1 < q_1 <= ..., q_m/p_m is
    /// nondecreasing, phi is nondecreasing and p_m < phi(q_m) < q_m for every window.
    void validate() const;

    /// The smallest nondecreasing table with p_m < phi(q_m): phi(x) = min(x-1, max{p_m+1 : q_m <= x}).
    static GapSchedule with_minimal_weight(std::vector<std::pair<std::size_t, std::size_t>> windows);

    friend bool operator==(const GapSchedule&, const GapSchedule&) = default;
};

/// Series with exact zeros at every index k with p_m < k <= q_m, stored through the last window.
struct GapSeries {
    PowerSeries g;
    GapSchedule schedule;

    /// True when every stored coefficient inside a gap window is exactly zero.
    bool gaps_are_zero() const;

    friend bool operator==(const GapSeries&, const GapSeries&) = default;
};

struct GapStep {
    std::size_t j = 0;
    std::size_t task = 0;
    std::size_t block_start = 0;  ///< q_j + 1
    std::size_t block_end = 0;    ///< p_{j+1}
    Polynomial increment;
    Rational step_epsilon;
    std::optional<Rational> pin;  ///< coefficient added at p_{j+1} when the fit left it zero

    friend bool operator==(const GapStep&, const GapStep&) = default;
};

struct GapCertificate {
    std::size_t task = 0;
    std::size_t m = 0;  ///< checkpoint window index
    std::size_t p = 0;
    Rational error_K;   ///< upper bound of max over K of |S_p(g) - h|
    Rational error_L;   ///< upper bound of max over L of |S_p(g) - g|
    bool within_epsilon = false;

    friend bool operator==(const GapCertificate&, const GapCertificate&) = default;
};

struct GapBuild {
    GapSeries series;
    std::vector<GapStep> steps;
    std::vector<GapCertificate> certificates;

    friend bool operator==(const GapBuild&, const GapBuild&) = default;
};

/// Partial-sum induction: block j has support in (q_j, p_{j+1}] and a nonzero coefficient at p_{j+1}.
/// Requires every p_m in mu, deg T <= p_0, and one window per step plus one.
GapBuild build_gap_series(const std::vector<std::size_t>& mu, const GapSchedule& schedule,
                          const std::vector<UniversalTask>& tasks, const Polynomial& T, const DiskSampleSpec& L,
                          const Rational& epsilon0, std::size_t rounds, const BuildOptions& options = {});

struct TransferCertificate {
    std::size_t m = 0;
    std::size_t p = 0;
    std::size_t q = 0;
    bool coprime = false;
    bool exact_match = false;
    PadeStatus status = PadeStatus::NotExists;
    Polynomial denominator;

    friend bool operator==(const TransferCertificate&, const TransferCertificate&) = default;
};

struct Transfer {
    PowerSeries f;
    std::vector<TransferCertificate> certificates;
};

/// f = g/Q with [f; p_m/q] = S_{p_m}(g)/Q checked at every stored window whose a_{p_m} is nonzero.
/// Throws PreconditionError when a window is not wider than q or a root of Q is a zero of S_{p_m}(g).
Transfer transfer_to_pade(const GapSeries& gs, const DenominatorSpec& spec);

struct WeightRow {
    std::size_t n = 0;
    std::size_t r = 0;      ///< index into S with p_r = min{p_m >= n}
    std::size_t x = 0;      ///< p_r + q_r
    std::size_t phi_x = 0;  ///< phi(p_r + q_r)
    bool ok = false;        ///< phi_x < n
};

struct SSchedule {
    std::vector<std::size_t> mu;
    GapSchedule schedule;
    std::vector<WeightRow> rows;
};

/// mu = distinct p values of S, phi(x) = min(x-1, U(x)) with U(x) = min{p_{r-1} : p_r + q_r >= x}
/// (p_{-1} = 0), and gap windows starting at the least element of mu past the previous gap.
/// Each gap ends at the first x with phi(x) > p_m, pushed out so that q_m/p_m never decreases.
SSchedule schedule_for_S(const std::vector<std::pair<std::size_t, std::size_t>>& S, std::size_t horizon);

struct SCheck {
    std::size_t p = 0;
    std::size_t q = 0;
    bool exact = false;
};

/// For each stored checkpoint p with a_p != 0 and a matching (p, q) in S, whether [g; p/q] = S_p(g).
std::vector<SCheck> generalized_s_check(const GapSeries& gs, const std::vector<std::pair<std::size_t, std::size_t>>& S);

}  // namespace padelab

#endif
