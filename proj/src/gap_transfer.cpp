#include "padelab/gap_transfer.hpp"

#include "padelab/errors.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace padelab {

namespace {

std::string window_name(std::size_t m, std::size_t p, std::size_t q) {
    return "window " + std::to_string(m) + " (" + std::to_string(p) + ", " + std::to_string(q) + "]";
}

Rational dyadic_floor(const Rational& x) {
    Rational c = 1;
    while (c > x) c /= 2;
    while (c * 2 <= x) c *= 2;
    return c;
}

}  // namespace

void GapSchedule::validate() const {
    std::size_t prev_q = 0;
    for (std::size_t m = 0; m < windows.size(); ++m) {
        auto [p, q] = windows[m];
        std::string name = window_name(m, p, q);
        if (p == 0) throw PreconditionError(name + ": p must be positive");
        if (p >= q) throw PreconditionError(name + ": needs p < q");
        if (m > 0 && p < prev_q) throw PreconditionError(name + ": overlaps the previous window");
        if (m > 0) {
            auto [pp, pq] = windows[m - 1];
            if (mpz_class(q) * pp < mpz_class(pq) * p) throw PreconditionError(name + ": q/p decreases");
        }
        if (q >= phi.size()) throw PreconditionError(name + ": weight table does not reach q");
        if (!(p < phi[q] && phi[q] < q)) throw PreconditionError(name + ": p < phi(q) < q fails");
        prev_q = q;
    }
    for (std::size_t x = 1; x < phi.size(); ++x)
        if (phi[x] < phi[x - 1]) throw PreconditionError("weight table is not monotone");
}

GapSchedule GapSchedule::with_minimal_weight(std::vector<std::pair<std::size_t, std::size_t>> windows) {
    GapSchedule s;
    std::size_t top = windows.empty() ? 0 : windows.back().second;
    s.phi.assign(top + 1, 0);
    std::size_t floor_value = 0;
    std::size_t next = 0;
    for (std::size_t x = 0; x <= top; ++x) {
        while (next < windows.size() && windows[next].second <= x) floor_value = windows[next++].first + 1;
        s.phi[x] = std::min(x == 0 ? 0 : x - 1, floor_value);
    }
    s.windows = std::move(windows);
    return s;
}

bool GapSeries::gaps_are_zero() const {
    for (auto [p, q] : schedule.windows)
        for (std::size_t k = p + 1; k <= q && k < g.truncation_len(); ++k)
            if (!g.at(k).is_zero()) return false;
    return true;
}

GapBuild build_gap_series(const std::vector<std::size_t>& mu, const GapSchedule& schedule,
                          const std::vector<UniversalTask>& tasks, const Polynomial& T, const DiskSampleSpec& L,
                          const Rational& epsilon0, std::size_t rounds, const BuildOptions& options) {
    schedule.validate();
    L.validate();
    if (sgn(epsilon0) <= 0 || epsilon0 >= 1) throw PreconditionError("epsilon0 must lie in (0, 1)");
    if (schedule.windows.empty()) throw PreconditionError("schedule has no windows");
    for (auto [p, q] : schedule.windows)
        if (!std::binary_search(mu.begin(), mu.end(), p))
            throw PreconditionError("gap start " + std::to_string(p) + " is not in mu");
    if (T.degree_or_zero() > schedule.windows[0].first) throw PreconditionError("deg T exceeds p_0");
    for (const auto& t : tasks) t.K.validate();

    std::size_t total = tasks.empty() ? 0 : rounds * tasks.size();
    if (schedule.windows.size() < total + 1)
        throw PreconditionError("schedule has " + std::to_string(schedule.windows.size()) + " windows, the build needs " +
                                std::to_string(total + 1));

    GapBuild out;
    Polynomial g = T;
    for (std::size_t j = 0; j < total; ++j) {
        std::size_t t = j % tasks.size();
        const UniversalTask& task = tasks[t];
        std::size_t start = schedule.windows[j].second + 1;
        std::size_t end = schedule.windows[j + 1].first;

        Rational tol = epsilon0 / Rational(mpz_class(1) << static_cast<mp_bitcnt_t>(j + 1));
        tol = std::min(tol, task.epsilon);

        ApproxTask at;
        at.target = RationalFunction(task.target.numerator - g * task.target.denominator, task.target.denominator);
        at.K = task.K;
        at.L = L;
        at.epsilon = tol;
        at.valuation_floor = start;
        at.max_degree = end;
        at.degree_cap = options.degree_cap;
        ApproxResult res;
        try {
            res = approx_with_valuation(at);
        } catch (const EscalationError& e) {
            throw EscalationError("schedule too tight for the block (" + std::to_string(start - 1) + ", " +
                                  std::to_string(end) + "]: " + e.what());
        }

        GapStep step;
        step.j = j;
        step.task = t;
        step.block_start = start;
        step.block_end = end;
        step.step_epsilon = tol;
        step.increment = std::move(res.polynomial);
        if (step.increment.coeff(end).is_zero()) {
            // a_{p_{j+1}} must not vanish; a monomial of size tol/2^10 on every sample keeps the budget.
            Rational big2 = 1;
            for (const auto* pts : {&task.K.samples, &L.samples})
                for (const auto& z : *pts)
                    big2 = std::max(big2, pow(GaussianRational(z.norm2()), static_cast<unsigned>(end)).re());
            Rational c = dyadic_floor(tol / (1024 * sqrt_upper(big2)));
            step.increment += Polynomial::monomial(GaussianRational(c), end);
            step.pin = c;
            if (!check_approximation(at, step.increment))
                throw VerificationError("pinned block left its tolerance at step " + std::to_string(j));
        }
        g += step.increment;
        out.steps.push_back(std::move(step));

        GapCertificate cert;
        cert.task = t;
        cert.m = j + 1;
        cert.p = end;
        cert.error_K = sqrt_upper(max_abs2_on_samples(RationalFunction(g) - task.target, task.K.samples));
        cert.within_epsilon = cert.error_K <= task.epsilon;
        out.certificates.push_back(std::move(cert));
    }

    std::size_t last = total;
    out.series.schedule.windows.assign(schedule.windows.begin(), schedule.windows.begin() + static_cast<long>(last + 1));
    std::size_t trunc = out.series.schedule.windows.back().second + 1;
    out.series.schedule.phi.assign(schedule.phi.begin(),
                                   schedule.phi.begin() + static_cast<long>(std::min(schedule.phi.size(), trunc)));
    out.series.g = PowerSeries::from_polynomial(g, trunc);

    Polynomial partial = T;
    std::size_t k = 0;
    for (auto& cert : out.certificates) {
        partial += out.steps[k++].increment;
        cert.error_L = sup_norm_on_samples(RationalFunction(partial - g), L.samples);
    }
    if (!out.series.gaps_are_zero()) throw VerificationError("a gap window holds a nonzero coefficient");
    return out;
}

Transfer transfer_to_pade(const GapSeries& gs, const DenominatorSpec& spec) {
    spec.validate();
    const std::size_t q = spec.q();
    Transfer out;
    out.f = series_div_poly(gs.g, spec.Q);
    for (std::size_t m = 0; m < gs.schedule.windows.size(); ++m) {
        auto [p, qm] = gs.schedule.windows[m];
        if (qm >= gs.g.truncation_len()) continue;
        if (gs.g.at(p).is_zero()) continue;
        std::string name = window_name(m, p, qm);
        if (qm - p <= q) throw PreconditionError(name + " is not wider than q = " + std::to_string(q));
        Polynomial partial = gs.g.partial_sum(p);
        for (const auto& w : spec.roots)
            if (partial(w).is_zero())
                throw PreconditionError("root " + w.to_string() + " of Q is a zero of S_" + std::to_string(p) + "(g), " +
                                        name);
        TransferCertificate cert;
        cert.m = m;
        cert.p = p;
        cert.q = q;
        cert.coprime = gcd(partial, spec.Q) == Polynomial::constant(1);
        PadeResult r = pade_via_system(out.f, p, q);
        cert.status = r.status;
        cert.denominator = r.denominator;
        cert.exact_match = cert.coprime && r.exists() && r.numerator == partial && r.denominator == spec.Q;
        out.certificates.push_back(std::move(cert));
    }
    return out;
}

SSchedule schedule_for_S(const std::vector<std::pair<std::size_t, std::size_t>>& S, std::size_t horizon) {
    SSchedule out;
    if (horizon == 0) return out;
    for (auto [p, q] : S) {
        if (p == 0) throw PreconditionError("S must consist of positive integers");
        out.mu.push_back(p);
    }
    std::sort(out.mu.begin(), out.mu.end());
    out.mu.erase(std::unique(out.mu.begin(), out.mu.end()), out.mu.end());
    if (out.mu.empty() || out.mu.back() < horizon)
        throw PreconditionError("S does not reach the horizon " + std::to_string(horizon));

    auto previous = [&](std::size_t p) {
        auto it = std::lower_bound(out.mu.begin(), out.mu.end(), p);
        return it == out.mu.begin() ? std::size_t{0} : *(it - 1);
    };
    std::size_t max_sum = 0;
    for (auto [p, q] : S) max_sum = std::max(max_sum, p + q);
    auto phi = [&](std::size_t x) {
        std::size_t u = std::numeric_limits<std::size_t>::max();
        for (auto [p, q] : S)
            if (p + q >= x) u = std::min(u, previous(p));
        return std::min(x == 0 ? std::size_t{0} : x - 1, u);
    };

    std::vector<std::pair<std::size_t, std::size_t>> windows;
    std::size_t p = out.mu.front();
    while (true) {
        std::size_t q = p + 1;
        while (phi(q) <= p) ++q;
        if (!windows.empty()) {
            auto [pp, pq] = windows.back();
            std::size_t ratio_floor = (pq * p + pp - 1) / pp;
            q = std::max(q, ratio_floor);
        }
        windows.emplace_back(p, q);
        auto it = std::lower_bound(out.mu.begin(), out.mu.end(), q + 1);
        if (it == out.mu.end()) break;
        p = *it;
    }
    out.schedule.windows = windows;
    std::size_t top = std::max(windows.back().second, max_sum);
    for (std::size_t x = 0; x <= top; ++x) out.schedule.phi.push_back(phi(x));
    out.schedule.validate();

    for (std::size_t n = 1; n <= horizon; ++n) {
        std::size_t pr = *std::lower_bound(out.mu.begin(), out.mu.end(), n);
        for (std::size_t r = 0; r < S.size(); ++r) {
            if (S[r].first != pr) continue;
            WeightRow row;
            row.n = n;
            row.r = r;
            row.x = S[r].first + S[r].second;
            row.phi_x = out.schedule.phi.at(row.x);
            row.ok = row.phi_x < n;
            out.rows.push_back(row);
        }
    }
    return out;
}

std::vector<SCheck> generalized_s_check(const GapSeries& gs, const std::vector<std::pair<std::size_t, std::size_t>>& S) {
    std::vector<SCheck> out;
    for (auto [p, qm] : gs.schedule.windows) {
        if (qm >= gs.g.truncation_len() || gs.g.at(p).is_zero()) continue;
        Polynomial partial = gs.g.partial_sum(p);
        for (auto [sp, sq] : S) {
            if (sp != p || p + sq + 1 > gs.g.truncation_len()) continue;
            PadeResult r = pade_via_system(gs.g, p, sq);
            out.push_back({p, sq, r.exists() && r.numerator == partial && r.denominator == Polynomial::constant(1)});
        }
    }
    return out;
}

}  // namespace padelab
