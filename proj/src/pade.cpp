#include "padelab/pade.hpp"

#include "padelab/errors.hpp"
#include "padelab/linear_algebra.hpp"

#include <string>

namespace padelab {

std::string_view to_string(PadeStatus s) {
    switch (s) {
        case PadeStatus::Normal: return "Normal";
        case PadeStatus::ExistsNonNormal: return "ExistsNonNormal";
        case PadeStatus::DegenerateExists: return "DegenerateExists";
        case PadeStatus::NotExists: return "NotExists";
    }
    return "?";
}

namespace {

void require_truncation(const PowerSeries& s, std::size_t needed, const char* what) {
    if (s.truncation_len() < needed)
        throw TruncationError(std::string(what) + " needs " + std::to_string(needed) +
                              " coefficients, series has " + std::to_string(s.truncation_len()));
}

long signed_index(std::size_t m, std::size_t n, std::size_t offset) {
    return static_cast<long>(m) - static_cast<long>(n) + 1 + static_cast<long>(offset);
}

/// The n x (n+1) block shared by both Jacobi determinants.
Matrix jacobi_rows(const PowerSeries& s, std::size_t m, std::size_t n) {
    Matrix rows(n, n + 1);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j <= n; ++j) rows(i, j) = s.at_signed(signed_index(m, n, i + j));
    return rows;
}

/// Any nonzero (P, Q) with deg P <= m, deg Q <= n and Q*S - P = O(z^{m+n+1}).
JacobiPair linearized_solution(const PowerSeries& s, std::size_t m, std::size_t n) {
    // Unknowns: q_0..q_n, then p_0..p_m. Equations: coefficients 0..m+n of Q*S - P.
    std::size_t eqs = m + n + 1;
    Matrix a(eqs, n + 1 + m + 1);
    for (std::size_t k = 0; k < eqs; ++k) {
        for (std::size_t i = 0; i <= n && i <= k; ++i) a(k, i) = s.at(k - i);
        if (k <= m) a(k, n + 1 + k) = GaussianRational(-1);
    }
    auto x = kernel_vector(std::move(a));
    if (!x) throw VerificationError("linearized Padé system has a trivial kernel");
    std::vector<GaussianRational> q(x->begin(), x->begin() + static_cast<long>(n + 1));
    std::vector<GaussianRational> p(x->begin() + static_cast<long>(n + 1), x->end());
    return {Polynomial(std::move(p)), Polynomial(std::move(q))};
}

PadeResult classify(const PowerSeries& s, std::size_t m, std::size_t n, GaussianRational c_mn,
                    GaussianRational c_m1n, const JacobiPair& jacobi) {
    PadeResult r;
    r.m = m;
    r.n = n;
    r.hankel_mn = std::move(c_mn);
    r.hankel_m1n = std::move(c_m1n);

    JacobiPair pair = jacobi;
    bool jacobi_vanishes = jacobi.denominator.is_zero();
    if (jacobi_vanishes) pair = linearized_solution(s, m, n);

    Polynomial g = gcd(pair.numerator, pair.denominator);
    Polynomial num = exact_divide(pair.numerator, g);
    Polynomial den = exact_divide(pair.denominator, g);
    if (den.coeff(0).is_zero()) {
        r.numerator = std::move(num);
        r.denominator = std::move(den);
        r.status = PadeStatus::NotExists;
        return r;
    }
    GaussianRational inv = den.coeff(0).inverse();
    r.numerator = num * inv;
    r.denominator = den * inv;
    if (linearized_valuation(s, r.numerator, r.denominator, m + n) < m + n + 1) {
        r.status = PadeStatus::NotExists;
        return r;
    }
    if (!r.hankel_mn.is_zero()) {
        r.status = r.hankel_m1n.is_zero() ? PadeStatus::ExistsNonNormal : PadeStatus::Normal;
        return r;
    }
    r.status = PadeStatus::DegenerateExists;
    if (!jacobi_vanishes) {
        r.degenerate_factor = exact_divide(jacobi.denominator, r.denominator);
        if (r.degenerate_factor * r.numerator != jacobi.numerator)
            throw VerificationError("Jacobi numerator is not T times the reduced numerator");
        if (!r.degenerate_factor.coeff(0).is_zero())
            throw VerificationError("degenerate factor does not vanish at the origin");
    }
    return r;
}

}  // namespace

GaussianRational hankel_det(const PowerSeries& s, std::size_t m, std::size_t n) {
    if (n == 0) return GaussianRational(1);
    require_truncation(s, m + n, "Hankel determinant");
    Matrix h(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) h(i, j) = s.at_signed(signed_index(m, n, i + j));
    return determinant(std::move(h));
}

JacobiPair jacobi_pair(const PowerSeries& s, std::size_t m, std::size_t n) {
    require_truncation(s, m + n + 1, "Jacobi determinants");
    Matrix rows = jacobi_rows(s, m, n);
    Polynomial num;
    Polynomial den;
    for (std::size_t j = 0; j <= n; ++j) {
        // Cofactor of the entry (n, j) in the (n+1) x (n+1) determinant.
        GaussianRational minor = n == 0 ? GaussianRational(1) : determinant(rows.without_column(j));
        if (minor.is_zero()) continue;
        if ((n + j) % 2 == 1) minor = -minor;
        den += Polynomial::monomial(minor, n - j);
        long top = static_cast<long>(m) - static_cast<long>(n) + static_cast<long>(j);
        if (top >= 0) num += s.partial_sum(static_cast<std::size_t>(top)).shifted(n - j) * minor;
    }
    return {std::move(num), std::move(den)};
}

PadeResult pade_via_jacobi(const PowerSeries& s, std::size_t m, std::size_t n) {
    require_truncation(s, m + n + 1, "Padé approximant");
    JacobiPair pair = jacobi_pair(s, m, n);
    return classify(s, m, n, hankel_det(s, m, n), hankel_det(s, m + 1, n), pair);
}

PadeResult pade_via_system(const PowerSeries& s, std::size_t m, std::size_t n) {
    require_truncation(s, m + n + 1, "Padé approximant");
    GaussianRational c_mn = hankel_det(s, m, n);
    if (c_mn.is_zero()) return pade_via_jacobi(s, m, n);

    Matrix h(n, n);
    std::vector<GaussianRational> rhs(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) h(i, j) = s.at_signed(signed_index(m, n, i + j));
        rhs[i] = -s.at(m + 1 + i);
    }
    auto sol = solve(std::move(h), std::move(rhs));
    if (!sol) throw VerificationError("Hankel system singular although C_{m,n} != 0");
    // sol = (q_n, ..., q_1)
    std::vector<GaussianRational> q(n + 1);
    q[0] = GaussianRational(1);
    for (std::size_t k = 1; k <= n; ++k) q[k] = (*sol)[n - k];
    Polynomial den(std::move(q));
    Polynomial num = (s.partial_sum(m) * den).truncated(m);

    PadeResult r;
    r.m = m;
    r.n = n;
    r.hankel_mn = std::move(c_mn);
    r.hankel_m1n = hankel_det(s, m + 1, n);
    RationalFunction reduced = RationalFunction(std::move(num), std::move(den)).reduced();
    r.numerator = std::move(reduced.numerator);
    r.denominator = std::move(reduced.denominator);
    if (linearized_valuation(s, r.numerator, r.denominator, m + n) < m + n + 1)
        throw VerificationError("solution of the Hankel system violates the order condition");
    r.status = r.hankel_m1n.is_zero() ? PadeStatus::ExistsNonNormal : PadeStatus::Normal;
    return r;
}

bool satisfies_order_condition(const PowerSeries& s, const PadeResult& r) {
    if (!r.exists()) return false;
    if (r.denominator.coeff(0) != GaussianRational(1)) return false;
    if (r.numerator.degree_or_zero() > r.m || r.denominator.degree_or_zero() > r.n) return false;
    return linearized_valuation(s, r.numerator, r.denominator, r.m + r.n) >= r.m + r.n + 1;
}

bool reciprocal_duality_check(const PowerSeries& s, std::size_t m, std::size_t n) {
    require_truncation(s, m + n + 1, "duality check");
    if (s.at(0).is_zero()) throw PreconditionError("duality check needs a_0 != 0");
    PadeResult direct = pade_via_system(s, m, n);
    if (!direct.exists()) throw PreconditionError("[S; m/n] does not exist");
    GaussianRational p0 = direct.numerator.coeff(0);
    if (p0.is_zero()) throw PreconditionError("[S; m/n] has a vanishing numerator constant term");

    PowerSeries inv = series_reciprocal(s);
    PadeResult dual = pade_via_system(inv, n, m);
    if (!dual.exists()) return false;
    GaussianRational scale = p0.inverse();
    bool same_fraction = dual.numerator == direct.denominator * scale && dual.denominator == direct.numerator * scale;
    bool same_membership = hankel_det(s, m, n).is_zero() == hankel_det(inv, n, m).is_zero();
    return same_fraction && same_membership;
}

}  // namespace padelab
