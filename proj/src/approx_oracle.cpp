#include "padelab/approx_oracle.hpp"

#include "padelab/errors.hpp"

#include <algorithm>
#include <string>

namespace padelab {

namespace {

/// Exact Gaussian integer, used for fraction-free elimination.
struct GaussInt {
    mpz_class re;
    mpz_class im;
};

GaussInt operator+(const GaussInt& a, const GaussInt& b) { return {a.re + b.re, a.im + b.im}; }
GaussInt operator-(const GaussInt& a, const GaussInt& b) { return {a.re - b.re, a.im - b.im}; }
GaussInt operator*(const GaussInt& a, const GaussInt& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
GaussInt conj(const GaussInt& a) { return {a.re, -a.im}; }
bool is_zero(const GaussInt& a) { return sgn(a.re) == 0 && sgn(a.im) == 0; }

/// a / b where the quotient is known to be a Gaussian integer.
GaussInt divexact(const GaussInt& a, const GaussInt& b) {
    mpz_class n = b.re * b.re + b.im * b.im;
    GaussInt t = a * conj(b);
    mpz_class re, im;
    mpz_divexact(re.get_mpz_t(), t.re.get_mpz_t(), n.get_mpz_t());
    mpz_divexact(im.get_mpz_t(), t.im.get_mpz_t(), n.get_mpz_t());
    return {re, im};
}

GaussianRational to_rational(const GaussInt& a) { return {Rational(a.re), Rational(a.im)}; }

/// Solves g x = b for Hermitian positive definite g over the Gaussian integers by Bareiss
/// elimination. Returns y and det with x = y / det, or nullopt when g is singular.
std::optional<std::pair<std::vector<GaussInt>, GaussInt>> bareiss_solve(std::vector<std::vector<GaussInt>> a,
                                                                         std::vector<GaussInt> b) {
    const std::size_t n = a.size();
    GaussInt prev{1, 0};
    for (std::size_t k = 0; k < n; ++k) {
        if (is_zero(a[k][k])) {
            std::size_t r = k + 1;
            while (r < n && is_zero(a[r][k])) ++r;
            if (r == n) return std::nullopt;
            std::swap(a[r], a[k]);
            std::swap(b[r], b[k]);
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) a[i][j] = divexact(a[k][k] * a[i][j] - a[i][k] * a[k][j], prev);
            b[i] = divexact(a[k][k] * b[i] - a[i][k] * b[k], prev);
            a[i][k] = {0, 0};
        }
        prev = a[k][k];
    }
    GaussInt det = a[n - 1][n - 1];
    std::vector<GaussInt> y(n);
    for (std::size_t k = n; k-- > 0;) {
        GaussInt acc = det * b[k];
        for (std::size_t l = k + 1; l < n; ++l) acc = acc - a[k][l] * y[l];
        y[k] = divexact(acc, a[k][k]);
    }
    return std::make_pair(std::move(y), det);
}

struct Sample {
    GaussianRational z;
    GaussianRational target;
    GaussInt scaled_target;         // E * target
    std::vector<GaussInt> powers;  // (D z)^{p+k}, k = 0..d
};

bool violates_constraints(const Polynomial& p, const std::vector<PointConstraint>& cs) {
    for (const auto& c : cs) {
        GaussianRational v = p(c.w);
        if (v.is_zero() || v == c.alpha) return true;
    }
    return false;
}

/// Largest power of two not exceeding x (x > 0).
Rational dyadic_floor(const Rational& x) {
    Rational c = 1;
    while (c > x) c /= 2;
    while (c * 2 <= x) c *= 2;
    return c;
}

bool within(const ApproxTask& task, const Polynomial& p, const Rational& bound2) {
    for (const auto& z : task.K.samples)
        if ((p(z) - task.target(z)).norm2() > bound2) return false;
    for (const auto& z : task.L.samples)
        if (p(z).norm2() > bound2) return false;
    return true;
}

/// Nearest multiple of grid (a power of two), ties toward +infinity.
Rational round_to_grid(const Rational& x, const Rational& grid) {
    Rational scaled = x / grid + Rational(1, 2);
    mpz_class n;
    mpz_fdiv_q(n.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
    return Rational(n) * grid;
}

mpz_class lcm_denominators(const std::vector<GaussianRational>& xs) {
    mpz_class l = 1;
    for (const auto& x : xs) {
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.re().get_den_mpz_t());
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.im().get_den_mpz_t());
    }
    return l;
}

GaussInt scale_to_integer(const GaussianRational& x, const mpz_class& d) {
    Rational re = x.re() * d;
    Rational im = x.im() * d;
    return {re.get_num(), im.get_num()};
}

}  // namespace

ApproxResult approx_with_valuation(const ApproxTask& task) {
    if (sgn(task.epsilon) <= 0) throw PreconditionError("epsilon must be positive");
    if (task.valuation_floor < 1) throw PreconditionError("valuation floor must be at least 1");
    task.K.validate();
    task.L.validate();
    const std::size_t p = task.valuation_floor;
    if (task.max_degree && *task.max_degree < p)
        throw EscalationError("no room for a polynomial between degree " + std::to_string(p) + " and " +
                              std::to_string(*task.max_degree));

    // Distinct nonzero samples; duplicates would make the normal equations singular.
    std::vector<Sample> samples;
    auto add = [&](const GaussianRational& z, GaussianRational target) {
        if (z.is_zero()) return;
        for (const auto& s : samples)
            if (s.z == z) return;
        samples.push_back({z, std::move(target), {}, {}});
    };
    for (const auto& z : task.K.samples) add(z, task.target(z));
    for (const auto& z : task.L.samples) add(z, GaussianRational(0));

    // Work with Z = D z and E h(z), both Gaussian integers. With x_k = c_k / D^{p+k} the normal
    // equations sum conj(Z^{p+k}) Z^{p+l} x_l = sum conj(Z^{p+k}) h(z) have integer entries
    // after scaling the right side by E.
    std::vector<GaussianRational> points, targets;
    for (const auto& s : samples) {
        points.push_back(s.z);
        targets.push_back(s.target);
    }
    const mpz_class D = lcm_denominators(points);
    const mpz_class E = lcm_denominators(targets);
    for (auto& s : samples) {
        GaussInt big_z = scale_to_integer(s.z, D);
        GaussInt power{1, 0};
        for (std::size_t k = 0; k < p; ++k) power = power * big_z;
        s.powers.push_back(power);
        s.scaled_target = scale_to_integer(s.target, E);
    }

    // 2^radius_bits >= max |z| over the samples.
    std::size_t radius_bits = 0;
    {
        Rational r2 = 1;
        for (const auto& s : samples) r2 = std::max(r2, s.z.norm2());
        Rational bound = 1;
        while (bound < r2) {
            bound *= 4;
            ++radius_bits;
        }
    }

    std::size_t cap = std::min(task.degree_cap, samples.empty() ? 0 : samples.size() - 1);
    if (task.max_degree) cap = std::min(cap, *task.max_degree - p);

    const Rational half_eps2 = task.epsilon * task.epsilon / 4;
    std::optional<Polynomial> fit;
    std::size_t fitted_degree = 0;
    if (samples.empty()) {
        fit = Polynomial{};
    } else {
        std::vector<std::vector<GaussInt>> gram;
        std::vector<GaussInt> rhs;
        std::size_t d = 0;
        while (true) {
            // Extend the Gram matrix and right side up to degree d.
            while (gram.size() <= d) {
                std::size_t k = gram.size();
                if (k > 0)
                    for (auto& s : samples) s.powers.push_back(s.powers.back() * scale_to_integer(s.z, D));
                for (auto& row : gram) row.push_back({0, 0});
                gram.emplace_back(k + 1, GaussInt{0, 0});
                rhs.push_back({0, 0});
                for (const auto& s : samples) {
                    GaussInt top = conj(s.powers[k]);
                    for (std::size_t l = 0; l <= k; ++l) {
                        GaussInt v = top * s.powers[l];
                        gram[k][l] = gram[k][l] + v;
                        if (l != k) gram[l][k] = gram[l][k] + conj(v);
                    }
                    if (!is_zero(s.scaled_target)) rhs[k] = rhs[k] + top * s.scaled_target;
                }
            }
            if (auto sol = bareiss_solve(gram, rhs)) {
                const auto& [y, det] = *sol;
                // P(z) = sum_k y_k Z^{p+k} / (det E); det is a positive integer for a Gram matrix.
                GaussianRational inv_delta = to_rational(det * GaussInt{E, 0}).inverse();
                bool ok = true;
                for (const auto& s : samples) {
                    GaussInt acc{0, 0};
                    for (std::size_t k = 0; k <= d; ++k) acc = acc + y[k] * s.powers[k];
                    if ((to_rational(acc) * inv_delta - s.target).norm2() > half_eps2) {
                        ok = false;
                        break;
                    }
                }
                if (ok) {
                    // Round each coefficient to a dyadic grid: |delta_k| * max|z|^{p+k} <= 2^-t with
                    // 2^-t <= epsilon / (16 (d+1)), so rounding moves P by at most epsilon/16 on the samples.
                    Rational unit = dyadic_floor(task.epsilon / (16 * static_cast<long>(d + 1)));
                    std::vector<GaussianRational> coeffs(p + d + 1);
                    mpz_class dpow = 1;
                    for (std::size_t k = 0; k < p; ++k) dpow *= D;
                    for (std::size_t k = 0; k <= d; ++k) {
                        GaussianRational exact = to_rational(y[k]) * GaussianRational(Rational(dpow)) * inv_delta;
                        Rational grid = unit;
                        for (std::size_t e = 0; e < (p + k) * radius_bits; ++e) grid /= 2;
                        coeffs[p + k] = GaussianRational(round_to_grid(exact.re(), grid), round_to_grid(exact.im(), grid));
                        dpow *= D;
                    }
                    Polynomial rounded(std::move(coeffs));
                    if (within(task, rounded, Rational(task.epsilon * task.epsilon * 81 / 256))) {
                        fit = std::move(rounded);
                        fitted_degree = d;
                        break;
                    }
                }
            }
            if (d == cap) break;
            d = std::min(cap, d + 1 + d / 8);
        }
    }
    if (!fit)
        throw EscalationError("least-squares fit did not reach epsilon/2 = " +
                              rational_to_string(task.epsilon / 2) + " with deg Q <= " + std::to_string(cap));

    ApproxResult result;
    result.fitted_degree = fitted_degree;
    result.polynomial = std::move(*fit);

    if (violates_constraints(result.polynomial, task.point_constraints)) {
        std::size_t k = p + fitted_degree + 1;
        if (task.max_degree) k = std::min(k, *task.max_degree);
        // B bounds |z|^k on every sample so that |c z^k| <= epsilon / 2^10 there.
        Rational big2 = 1;
        for (const auto* pts : {&task.K.samples, &task.L.samples})
            for (const auto& z : *pts) big2 = std::max(big2, pow(GaussianRational(z.norm2()), static_cast<unsigned>(k)).re());
        Rational c = dyadic_floor(task.epsilon / (1024 * sqrt_upper(big2)));
        bool placed = false;
        for (int attempt = 0; attempt < 256 && !placed; ++attempt, c /= 2) {
            Polynomial candidate = result.polynomial + Polynomial::monomial(GaussianRational(c), k);
            if (!violates_constraints(candidate, task.point_constraints)) {
                result.polynomial = std::move(candidate);
                result.perturbation = c;
                placed = true;
            }
        }
        if (!placed) throw EscalationError("could not satisfy the point constraints");
    }

    RationalFunction diff_k(result.polynomial);
    result.error_K = sqrt_upper(max_abs2_on_samples(diff_k - task.target, task.K.samples));
    result.error_L = sup_norm_on_samples(diff_k, task.L.samples);
    if (!check_approximation(task, result.polynomial))
        throw VerificationError("oracle output failed its own bounds");
    return result;
}

bool check_approximation(const ApproxTask& task, const Polynomial& p) {
    if (!p.is_zero() && *p.valuation() < task.valuation_floor) return false;
    if (task.max_degree && p.degree_or_zero() > *task.max_degree) return false;
    if (!within(task, p, task.epsilon * task.epsilon)) return false;
    return !violates_constraints(p, task.point_constraints);
}

}  // namespace padelab
