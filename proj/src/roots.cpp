#include "padelab/roots.hpp"

#include "padelab/errors.hpp"

#include <boost/multiprecision/mpfr.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>

namespace padelab {

namespace {

using boost::multiprecision::mpfr_float;

struct Cx {
    mpfr_float re;
    mpfr_float im;
};

Cx operator+(const Cx& a, const Cx& b) { return {a.re + b.re, a.im + b.im}; }
Cx operator-(const Cx& a, const Cx& b) { return {a.re - b.re, a.im - b.im}; }
Cx operator*(const Cx& a, const Cx& b) { return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re}; }
Cx operator/(const Cx& a, const Cx& b) {
    mpfr_float d = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}
mpfr_float abs(const Cx& a) { return boost::multiprecision::sqrt(a.re * a.re + a.im * a.im); }

mpfr_float to_mpfr(const Rational& q) {
    mpfr_float x;
    mpfr_set_q(x.backend().data(), q.get_mpq_t(), MPFR_RNDN);
    return x;
}

/// Sets and restores the default working precision.
class PrecisionScope {
public:
    explicit PrecisionScope(unsigned bits) : saved_(mpfr_float::default_precision()) {
        mpfr_float::default_precision(static_cast<unsigned>(bits * 0.30103) + 2);
    }
    ~PrecisionScope() { mpfr_float::default_precision(saved_); }
    PrecisionScope(const PrecisionScope&) = delete;
    PrecisionScope& operator=(const PrecisionScope&) = delete;

private:
    unsigned saved_;
};

void horner(const std::vector<Cx>& c, const Cx& z, Cx& value, Cx& deriv) {
    value = c.back();
    deriv = {mpfr_float(0), mpfr_float(0)};
    for (std::size_t k = c.size() - 1; k-- > 0;) {
        deriv = deriv * z + value;
        value = value * z + c[k];
    }
}

}  // namespace

std::vector<NumericRoot> poly_roots_numeric(const Polynomial& q, unsigned precision_bits) {
    if (q.is_zero()) throw PreconditionError("roots of the zero polynomial");
    std::size_t deg = *q.degree();
    if (deg == 0) return {};
    PrecisionScope scope(precision_bits);

    std::vector<Cx> c;
    for (const auto& a : q.coeffs()) c.push_back({to_mpfr(a.re()), to_mpfr(a.im())});

    // Initial guesses on a circle whose radius is the geometric mean of the roots' moduli when
    // the constant term is nonzero, with a small angular offset to avoid symmetric stalls.
    mpfr_float radius = 1;
    {
        mpfr_float lead = abs(c.back());
        mpfr_float tail = abs(c.front());
        if (tail > 0) radius = boost::multiprecision::pow(tail / lead, mpfr_float(1) / mpfr_float(deg));
    }
    std::vector<Cx> z(deg);
    for (std::size_t k = 0; k < deg; ++k) {
        mpfr_float theta = mpfr_float(2) * boost::math::constants::pi<mpfr_float>() * mpfr_float(k) / mpfr_float(deg) +
                           mpfr_float(0.4);
        z[k] = {radius * boost::multiprecision::cos(theta), radius * boost::multiprecision::sin(theta)};
    }

    mpfr_float tol = boost::multiprecision::ldexp(mpfr_float(1), -static_cast<int>(precision_bits) + 8);
    bool settled = false;
    for (int iter = 0; iter < 2000 && !settled; ++iter) {
        mpfr_float worst = 0;
        for (std::size_t k = 0; k < deg; ++k) {
            Cx value, deriv;
            horner(c, z[k], value, deriv);
            if (value.re == 0 && value.im == 0) continue;
            Cx ratio = value / deriv;
            Cx sum{mpfr_float(0), mpfr_float(0)};
            for (std::size_t j = 0; j < deg; ++j)
                if (j != k) sum = sum + Cx{mpfr_float(1), mpfr_float(0)} / (z[k] - z[j]);
            Cx step = ratio / (Cx{mpfr_float(1), mpfr_float(0)} - ratio * sum);
            z[k] = z[k] - step;
            mpfr_float scale = std::max(mpfr_float(1), abs(z[k]));
            worst = std::max(worst, mpfr_float(abs(step) / scale));
        }
        settled = worst <= tol;
    }

    std::vector<NumericRoot> out;
    mpfr_float backward_tol = boost::multiprecision::ldexp(mpfr_float(1), -static_cast<int>(precision_bits) / 2);
    for (const auto& root : z) {
        Cx value, deriv;
        horner(c, root, value, deriv);
        // Residual relative to the size of the terms, which is what multiple roots can reach.
        mpfr_float size = 0;
        mpfr_float power = 1;
        mpfr_float r = abs(root);
        for (const auto& coef : c) {
            size += abs(coef) * power;
            power *= r;
        }
        mpfr_float residual = abs(value);
        if (!settled && residual > backward_tol * size)
            throw VerificationError("root iteration did not converge for " + q.to_string());
        out.push_back({{root.re.convert_to<double>(), root.im.convert_to<double>()}, residual.convert_to<double>()});
    }

    std::vector<std::complex<double>> values;
    for (const auto& r : out) values.push_back(r.value);
    auto ordered = order_roots_polar(values, 0.0, 0.0);
    std::vector<NumericRoot> sorted;
    for (const auto& v : ordered) {
        auto it = std::find_if(out.begin(), out.end(), [&](const NumericRoot& r) { return r.value == v; });
        sorted.push_back(*it);
        out.erase(it);
    }
    return sorted;
}

std::vector<std::complex<double>> order_roots_polar(std::vector<std::complex<double>> roots, double alpha,
                                                    double guard, double modulus_tol) {
    constexpr double two_pi = 2 * std::numbers::pi;
    auto shifted_arg = [&](const std::complex<double>& z) {
        double t = std::fmod(std::arg(z) - alpha, two_pi);
        if (t < 0) t += two_pi;
        return t;
    };
    for (const auto& z : roots) {
        if (z == std::complex<double>(0, 0)) throw PreconditionError("order_roots_polar: zero root has no argument");
        double t = shifted_arg(z);
        if (guard > 0 && (t < guard || two_pi - t < guard))
            throw PreconditionError("alpha is within the guard band of a root's argument");
    }
    std::stable_sort(roots.begin(), roots.end(),
                     [](const auto& a, const auto& b) { return std::abs(a) < std::abs(b); });
    // Group nearly equal moduli, then order each group by shifted argument.
    std::size_t start = 0;
    while (start < roots.size()) {
        std::size_t end = start + 1;
        while (end < roots.size() &&
               std::abs(roots[end]) - std::abs(roots[start]) <= modulus_tol * std::max(1.0, std::abs(roots[start])))
            ++end;
        std::stable_sort(roots.begin() + static_cast<long>(start), roots.begin() + static_cast<long>(end),
                         [&](const auto& a, const auto& b) { return shifted_arg(a) < shifted_arg(b); });
        start = end;
    }
    return roots;
}

}  // namespace padelab
