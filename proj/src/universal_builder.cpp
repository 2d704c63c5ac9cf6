#include "padelab/universal_builder.hpp"

#include "padelab/errors.hpp"
#include "padelab/roots.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace padelab {

namespace {

Rational min_abs_lower(const Polynomial& q, std::span<const GaussianRational> pts) {
    std::optional<Rational> best2;
    for (const auto& z : pts) {
        Rational v = q(z).norm2();
        if (!best2 || v < *best2) best2 = v;
    }
    return best2 ? sqrt_lower(*best2) : Rational(1);
}

Rational min_of(std::initializer_list<Rational> xs) {
    Rational best = *xs.begin();
    for (const auto& x : xs) best = std::min(best, x);
    return best;
}

}  // namespace

DenominatorSpec DenominatorSpec::from_roots(std::vector<GaussianRational> roots) {
    DenominatorSpec s;
    s.Q = Polynomial::from_inverse_roots(roots);
    s.roots = std::move(roots);
    s.validate();
    return s;
}

void DenominatorSpec::validate() const {
    for (const auto& w : roots)
        if (w.norm2() < 1) throw PreconditionError("denominator root " + w.to_string() + " lies inside the unit disk");
    if (Q != Polynomial::from_inverse_roots(roots)) throw PreconditionError("Q does not match its roots");
    if (Q.coeff(0) != GaussianRational(1)) throw PreconditionError("Q(0) must be 1");
}

Polynomial BuildTrace::partial(std::size_t j) const {
    if (j > steps.size()) throw PreconditionError("step index past the end of the trace");
    Polynomial f = initial;
    for (std::size_t k = 0; k < j; ++k) f += steps[k].increment;
    return f;
}

std::size_t least_at_least(const std::vector<std::size_t>& mu, std::size_t d) {
    auto it = std::lower_bound(mu.begin(), mu.end(), d);
    if (it == mu.end()) throw PreconditionError("mu exhausted: no element >= " + std::to_string(d));
    return *it;
}

BuildTrace build_universal(const DenominatorSpec& spec, const std::vector<UniversalTask>& tasks,
                           const std::vector<std::size_t>& mu, const Polynomial& T, const DiskSampleSpec& L,
                           const Rational& epsilon0, std::size_t rounds, const BuildOptions& options) {
    spec.validate();
    L.validate();
    if (sgn(epsilon0) <= 0 || epsilon0 >= 1) throw PreconditionError("epsilon0 must lie in (0, 1)");
    if (mu.empty() || !std::is_sorted(mu.begin(), mu.end()) ||
        std::adjacent_find(mu.begin(), mu.end()) != mu.end())
        throw PreconditionError("mu must be a nonempty strictly increasing sequence");
    for (const auto& t : tasks) {
        t.K.validate();
        if (sgn(t.epsilon) <= 0) throw PreconditionError("task epsilon must be positive");
        for (const auto& z : t.K.samples)
            if (spec.Q(z).is_zero()) throw PreconditionError("a compact sample is a root of Q");
    }

    const std::size_t q = spec.q();
    BuildTrace trace;
    trace.mu = mu;
    trace.T = T;
    trace.q = q;
    trace.initial = spec.Q * T;
    trace.checkpoint0 = least_at_least(mu, trace.initial.degree_or_zero());

    Rational d_wl = distance_lower_bound(spec.roots, L.samples).value_or(1);
    Rational q_on_l = min_abs_lower(spec.Q, L.samples);

    Polynomial f = trace.initial;
    std::size_t total = tasks.empty() ? 0 : rounds * tasks.size();
    for (std::size_t j = 0; j < total; ++j) {
        std::size_t t = j % tasks.size();
        const UniversalTask& task = tasks[t];
        Rational d_wk = distance_lower_bound(spec.roots, task.K.samples).value_or(1);
        Rational q_on_k = min_abs_lower(spec.Q, task.K.samples);

        Rational scale = 1;
        scale /= Rational(mpz_class(1) << static_cast<mp_bitcnt_t>(j + 1));
        Rational tol = epsilon0 * scale * min_of({Rational(1), d_wk, d_wl, q_on_l});
        // Dividing by Q at the checkpoint must still leave the task within its own epsilon.
        tol = std::min(tol, Rational(task.epsilon * std::min(Rational(1), q_on_k)));

        ApproxTask at;
        at.target = RationalFunction(spec.Q * task.target.numerator - f * task.target.denominator,
                                     task.target.denominator);
        at.K = task.K;
        at.L = L;
        at.epsilon = tol;
        at.valuation_floor = trace.checkpoint(j) + q + 1;
        at.degree_cap = options.degree_cap;
        for (const auto& w : spec.roots) at.point_constraints.push_back({w, -f(w)});
        ApproxResult res = approx_with_valuation(at);

        f += res.polynomial;
        BuildStep step;
        step.j = j;
        step.task = t;
        step.increment = std::move(res.polynomial);
        step.valuation_floor = at.valuation_floor;
        step.checkpoint = least_at_least(mu, f.degree_or_zero());
        step.step_epsilon = tol;
        step.perturbation = res.perturbation;
        trace.steps.push_back(std::move(step));

        Certificate cert;
        cert.task = t;
        cert.step = j + 1;
        cert.p = trace.steps.back().checkpoint;
        RationalFunction approximant(f, spec.Q);
        cert.error_K = sqrt_upper(max_abs2_on_samples(approximant - task.target, task.K.samples));
        cert.denominator = approximant.reduced().denominator;
        cert.within_epsilon = cert.error_K <= task.epsilon;
        trace.certificates.push_back(std::move(cert));
    }

    trace.f_tilde = f;
    std::size_t last = std::max(f.degree_or_zero(), trace.checkpoint(trace.steps.size()));
    std::size_t trunc = last + q + 1 + options.extra_terms;
    trace.f = series_div_poly(PowerSeries::from_polynomial(f, trunc), spec.Q);
    for (auto& cert : trace.certificates) {
        RationalFunction gap(trace.partial(cert.step) - f, spec.Q);
        cert.error_L = sup_norm_on_samples(gap, L.samples);
    }
    return trace;
}

CheckpointCertificate verify_checkpoint(const BuildTrace& trace, const DenominatorSpec& spec, std::size_t j) {
    const std::size_t q = spec.q();
    std::size_t p = trace.checkpoint(j);
    if (trace.f.truncation_len() < p + q + 1)
        throw VerificationError("series too short to check the checkpoint of step " + std::to_string(j));
    PadeResult r = pade_via_system(trace.f, p, q);
    RationalFunction expected = RationalFunction(trace.partial(j), spec.Q).reduced();
    std::string where = " at step " + std::to_string(j) + " (p = " + std::to_string(p) + ")";
    if (!r.exists()) throw VerificationError("approximant does not exist" + where);
    if (r.numerator != expected.numerator || r.denominator != expected.denominator)
        throw VerificationError("[f; p/q] differs from f_j/Q" + where);
    if (j >= 1) {
        if (r.status != PadeStatus::Normal) throw VerificationError("degree is not normal" + where);
        if (r.denominator != spec.Q) throw VerificationError("reduced denominator differs from Q" + where);
    }
    return {j, p, r.hankel_mn, r.hankel_m1n, r.status};
}

SpanCertificate span_pade_check(const std::vector<SpanMember>& members, std::size_t m, std::size_t q) {
    if (members.empty()) throw PreconditionError("span check needs at least one member");
    std::optional<Polynomial> shared;
    Polynomial numerator;
    std::optional<PowerSeries> g;
    for (const auto& member : members) {
        PadeResult r = pade_via_system(member.series, m, q);
        if (!r.exists()) throw PreconditionError("a member has no (m, q) approximant");
        if (shared && r.denominator != *shared) throw PreconditionError("members' denominators differ");
        shared = r.denominator;
        numerator += r.numerator * member.coefficient;
        PowerSeries term = scale(member.series, member.coefficient);
        g = g ? add(*g, term) : term;
    }
    SpanCertificate cert;
    cert.sum = RationalFunction(numerator, *shared).reduced();
    cert.combined = pade_via_system(*g, m, q);
    cert.linear = cert.combined.exists() && cert.combined.numerator == cert.sum.numerator &&
                  cert.combined.denominator == cert.sum.denominator;
    cert.reduced_degree = cert.sum.denominator.degree_or_zero();
    return cert;
}

PoleSearchResult asymptotic_pole_predicate(const PowerSeries& f, const std::vector<std::size_t>& mu, std::size_t q,
                                           const std::vector<GaussianRational>& W, double alpha, const Rational& s_inv,
                                           const CompactSetSpec& K, const RationalFunction& h,
                                           const DiskSampleSpec& L, double residual_bound) {
    if (W.size() != q) throw PreconditionError("W must have q points");
    std::vector<std::complex<double>> w_num;
    for (const auto& w : W) w_num.emplace_back(w.real_double(), w.imag_double());
    auto w_ordered = order_roots_polar(w_num, alpha);

    Polynomial partial = f.partial_sum(f.truncation_len() - 1);
    Rational s2 = s_inv * s_inv;
    double tol = s_inv.get_d();
    bool any_candidate = false;
    for (std::size_t p : mu) {
        if (p + q + 1 > f.truncation_len()) break;
        any_candidate = true;
        PadeResult r = pade_via_system(f, p, q);
        if (r.hankel_mn.is_zero() || r.denominator.degree_or_zero() != q) continue;
        auto roots = poly_roots_numeric(r.denominator);
        std::vector<std::complex<double>> values;
        double max_residual = 0;
        for (const auto& rt : roots) {
            values.push_back(rt.value);
            max_residual = std::max(max_residual, rt.residual);
        }
        if (max_residual >= residual_bound) continue;
        std::vector<std::complex<double>> ordered;
        try {
            ordered = order_roots_polar(values, alpha);
        } catch (const PreconditionError&) {
            continue;
        }
        double deviation = 0;
        for (std::size_t l = 0; l < q; ++l) deviation = std::max(deviation, std::abs(ordered[l] - w_ordered[l]));
        if (deviation >= tol) continue;
        RationalFunction approx = r.as_function();
        if (max_abs2_on_samples(approx - h, K.samples) >= s2) continue;
        if (max_abs2_on_samples(approx - RationalFunction(partial), L.samples) >= s2) continue;
        return {true, p, deviation, max_residual};
    }
    if (!any_candidate) throw TruncationError("truncation too short for every p in mu");
    return {};
}

}  // namespace padelab
