#include "padelab/pole_lab.hpp"

#include "padelab/errors.hpp"

namespace padelab {

namespace {

void check_common(const Polynomial& base, std::size_t m, std::size_t n, const GaussianRational& target,
                  const GaussianRational& c1) {
    if (m == 0) throw PreconditionError("placement needs m >= 1");
    if (n == 0) throw PreconditionError("placement needs n >= 1");
    if (base.is_zero() || *base.degree() != m - 1)
        throw PreconditionError("base polynomial must have degree exactly m-1");
    if (target.is_zero()) throw PreconditionError("target must be nonzero");
    if (c1.is_zero()) throw PreconditionError("c1 must be nonzero");
}

/// Splits a polynomial-valued function of c2 that is affine in c2 into value at 0 and slope.
template <class F>
std::pair<Polynomial, Polynomial> affine_in_c2(F&& eval) {
    Polynomial at0 = eval(GaussianRational(0));
    Polynomial at1 = eval(GaussianRational(1));
    Polynomial slope = at1 - at0;
    if (eval(GaussianRational(2)) != at0 + slope * GaussianRational(2))
        throw VerificationError("Jacobi determinant is not affine in c2");
    return {at0, slope};
}

/// Constant s with p = s * q; throws if p is not a constant multiple of q.
GaussianRational constant_ratio(const Polynomial& p, const Polynomial& q) {
    Polynomial s = exact_divide(p, q);
    if (s.degree_or_zero() != 0 || s.is_zero()) throw VerificationError("determinant slope has unexpected shape");
    return s.coeff(0);
}

PolePlacementWitness finish(PolePlacementWitness w) {
    if (w.c2.is_zero()) throw RetryableError("derived c2 vanishes; choose another c1");
    w.witness = perturbed_series(w.base, w.m, w.n, w.c1, w.c2);
    w.approximant = pade_via_system(w.witness, w.m, w.n);
    if (w.approximant.status != PadeStatus::Normal)
        throw RetryableError("placement produced a non-normal degree (" + std::string(to_string(w.approximant.status)) +
                             "); choose another c1");
    return w;
}

}  // namespace

PowerSeries perturbed_series(const Polynomial& base, std::size_t m, std::size_t n, const GaussianRational& c1,
                             const GaussianRational& c2) {
    Polynomial f = base + Polynomial::monomial(c1, m + n - 1) + Polynomial::monomial(c2, m + n);
    return PowerSeries::from_polynomial(f, m + n + 1);
}

PolePlacementWitness place_pole(const Polynomial& base, std::size_t m, std::size_t n, const GaussianRational& target,
                                const GaussianRational& c1) {
    check_common(base, m, n, target, c1);
    auto [a_part, b_part] = affine_in_c2(
        [&](const GaussianRational& c2) { return jacobi_pair(perturbed_series(base, m, n, c1, c2), m, n).denominator; });

    // Jacobi denominator = s * (-c1^2 P_{n-2}(z) z^2 - c2 a^{n-1} z + c1 a^{n-1}), a = a_{m-1}.
    GaussianRational lead = pow(base.leading(), static_cast<unsigned>(n - 1));
    Polynomial z = Polynomial::monomial(1, 1);
    GaussianRational s = -constant_ratio(b_part, lead * z);
    Polynomial rest = Polynomial::constant(c1 * lead) - a_part * s.inverse();
    Polynomial aux = exact_divide(rest, Polynomial::monomial(c1 * c1, 2));

    PolePlacementWitness w;
    w.base = base;
    w.m = m;
    w.n = n;
    w.c1 = c1;
    w.target = target;
    w.auxiliary = aux;
    w.sign = s;
    w.c2 = (c1 * lead - c1 * c1 * aux(target) * target * target) / (lead * target);
    if (!(a_part(target) + w.c2 * b_part(target)).is_zero())
        throw VerificationError("closed-form c2 disagrees with the determinant");
    w = finish(std::move(w));
    if (!w.approximant.denominator(target).is_zero())
        throw RetryableError("placed pole cancelled against the numerator; choose another c1");
    return w;
}

PolePlacementWitness place_zero(const Polynomial& base, std::size_t m, std::size_t n, const GaussianRational& target,
                                const GaussianRational& c1) {
    check_common(base, m, n, target, c1);
    GaussianRational p_t = base(target);
    if (p_t.is_zero()) throw PreconditionError("P(target) = 0");
    auto [a_part, b_part] = affine_in_c2(
        [&](const GaussianRational& c2) { return jacobi_pair(perturbed_series(base, m, n, c1, c2), m, n).numerator; });

    // Jacobi numerator = s * (-c1^2 R(z) z^2 - c2 a^{n-1} z P(z) + c1 a^{n-1} P~(z)),
    // with P~ = P + c1 z^m when n = 1 and P~ = P otherwise.
    GaussianRational lead = pow(base.leading(), static_cast<unsigned>(n - 1));
    Polynomial z = Polynomial::monomial(1, 1);
    GaussianRational s = -constant_ratio(b_part, lead * z * base);
    Polynomial p_tilde = n == 1 ? base + Polynomial::monomial(c1, m) : base;
    Polynomial rest = p_tilde * (c1 * lead) - a_part * s.inverse();
    Polynomial aux = exact_divide(rest, Polynomial::monomial(c1 * c1, 2));

    PolePlacementWitness w;
    w.base = base;
    w.m = m;
    w.n = n;
    w.c1 = c1;
    w.target = target;
    w.auxiliary = aux;
    w.sign = s;
    w.c2 = (c1 * lead * p_tilde(target) - c1 * c1 * aux(target) * target * target) / (lead * target * p_t);
    if (!(a_part(target) + w.c2 * b_part(target)).is_zero())
        throw VerificationError("closed-form c2 disagrees with the determinant");
    w = finish(std::move(w));
    if (!w.approximant.numerator(target).is_zero())
        throw RetryableError("placed zero cancelled against the denominator; choose another c1");
    return w;
}

Polynomial power_of_linear_factor(const GaussianRational& mu, std::size_t n) {
    if (mu.is_zero()) throw PreconditionError("mu must be nonzero");
    Polynomial factor{GaussianRational(1), -mu.inverse()};
    Polynomial out = Polynomial::constant(1);
    for (std::size_t k = 0; k < n; ++k) out *= factor;
    return out;
}

PowerSeries poles_outside_disk_witness(const Polynomial& base, std::size_t m, std::size_t n,
                                       const GaussianRational& mu, std::size_t trunc) {
    if (base.degree_or_zero() > m) throw PreconditionError("deg P exceeds m");
    if (mu.norm2() <= 1) throw PreconditionError("|mu| must exceed 1");
    if (base(mu).is_zero()) throw PreconditionError("P(mu) = 0");
    if (trunc < m + n + 1) throw PreconditionError("truncation must be at least m+n+1");
    Polynomial q = power_of_linear_factor(mu, n);
    PowerSeries f = series_div_poly(PowerSeries::from_polynomial(base, trunc), q);
    PadeResult r = pade_via_system(f, m, n);
    if (!r.exists() || r.numerator != base || r.denominator != q)
        throw VerificationError("[f; m/n] differs from P/(1-z/mu)^n");
    return f;
}

}  // namespace padelab
