#include "padelab/sampling.hpp"

#include "padelab/errors.hpp"

#include <algorithm>
#include <cmath>

namespace padelab {

namespace {

constexpr unsigned kSlackBits = 40;

bool is_rational_square(const Rational& x, Rational& root) {
    if (sgn(x) < 0) return false;
    if (!mpz_perfect_square_p(x.get_num_mpz_t()) || !mpz_perfect_square_p(x.get_den_mpz_t())) return false;
    mpz_class n = sqrt(mpz_class(x.get_num()));
    mpz_class d = sqrt(mpz_class(x.get_den()));
    root = Rational(n, d);
    root.canonicalize();
    return true;
}

/// floor(sqrt(x * 2^80))
mpz_class scaled_isqrt(const Rational& x) {
    mpz_class scaled = x.get_num();
    scaled <<= 2 * kSlackBits;
    mpz_class floor_val = scaled / x.get_den();
    return sqrt(floor_val);
}

Rational dyadic(const mpz_class& n) {
    mpz_class den = 1;
    den <<= kSlackBits;
    Rational r(n, den);
    r.canonicalize();
    return r;
}

}  // namespace

void CompactSetSpec::validate() const {
    if (samples.empty()) throw PreconditionError("compact set has no samples");
    if (sgn(margin) <= 0) throw PreconditionError("compact set margin must be positive");
    Rational margin2 = margin * margin;
    for (const auto& z : samples) {
        if (z.norm2() < 1) throw PreconditionError("sample " + z.to_string() + " lies inside the unit disk");
        for (const auto& w : excluded)
            if ((z - w).norm2() < margin2)
                throw PreconditionError("sample " + z.to_string() + " is closer than the margin to " + w.to_string());
    }
}

void DiskSampleSpec::validate() const {
    if (sgn(radius) < 0 || radius >= 1) throw PreconditionError("disk radius must lie in [0, 1)");
    Rational r2 = radius * radius;
    for (const auto& z : samples)
        if (z.norm2() > r2) throw PreconditionError("disk sample " + z.to_string() + " lies outside the radius");
}

Rational sqrt_upper(const Rational& x) {
    if (sgn(x) < 0) throw PreconditionError("square root of a negative number");
    Rational root;
    if (is_rational_square(x, root)) return root;
    return dyadic(scaled_isqrt(x) + 1);
}

Rational sqrt_lower(const Rational& x) {
    if (sgn(x) < 0) throw PreconditionError("square root of a negative number");
    Rational root;
    if (is_rational_square(x, root)) return root;
    return dyadic(scaled_isqrt(x));
}

Rational max_abs2_on_samples(const RationalFunction& f, std::span<const GaussianRational> pts) {
    Rational best = 0;
    for (const auto& z : pts) {
        Rational v = f(z).norm2();
        if (v > best) best = v;
    }
    return best;
}

Rational sup_norm_on_samples(const RationalFunction& f, std::span<const GaussianRational> pts) {
    return sqrt_upper(max_abs2_on_samples(f, pts));
}

std::optional<Rational> distance_lower_bound(std::span<const GaussianRational> a,
                                             std::span<const GaussianRational> b) {
    if (a.empty() || b.empty()) return std::nullopt;
    std::optional<Rational> best2;
    for (const auto& z : a)
        for (const auto& w : b) {
            Rational d2 = (z - w).norm2();
            if (!best2 || d2 < *best2) best2 = d2;
        }
    return sqrt_lower(*best2);
}

std::vector<GaussianRational> circle_samples(const GaussianRational& center, const Rational& radius,
                                             std::size_t count) {
    if (count == 0) return {};
    if (sgn(radius) <= 0) throw PreconditionError("circle radius must be positive");
    // Hypotenuses whose squares have many representations as sums of two squares.
    static const long kHypotenuses[] = {5, 25, 65, 325, 1105, 5525, 27625, 32045, 160225};
    for (long n : kHypotenuses) {
        std::vector<std::pair<long, long>> pts;
        for (long x = -n; x <= n; ++x) {
            long rest = n * n - x * x;
            long y = static_cast<long>(std::llround(std::sqrt(static_cast<double>(rest))));
            while (y * y > rest) --y;
            while ((y + 1) * (y + 1) <= rest) ++y;
            if (y * y != rest) continue;
            pts.emplace_back(x, y);
            if (y != 0) pts.emplace_back(x, -y);
        }
        if (pts.size() < count) continue;
        std::sort(pts.begin(), pts.end(), [](const auto& a, const auto& b) {
            double ta = std::atan2(static_cast<double>(a.second), static_cast<double>(a.first));
            double tb = std::atan2(static_cast<double>(b.second), static_cast<double>(b.first));
            if (ta < 0) ta += 2 * M_PI;
            if (tb < 0) tb += 2 * M_PI;
            return ta < tb;
        });
        std::vector<GaussianRational> out;
        out.reserve(count);
        for (std::size_t k = 0; k < count; ++k) {
            const auto& [x, y] = pts[k * pts.size() / count];
            Rational re(x, n);
            Rational im(y, n);
            re.canonicalize();
            im.canonicalize();
            out.push_back(center + GaussianRational(radius * re, radius * im));
        }
        return out;
    }
    throw PreconditionError("too many circle samples requested");
}

std::vector<GaussianRational> disk_samples(const Rational& radius, std::size_t rings, std::size_t per_ring) {
    std::vector<GaussianRational> out{GaussianRational(0)};
    for (std::size_t k = 1; k <= rings; ++k) {
        Rational r = radius * Rational(static_cast<long>(k), static_cast<long>(rings));
        r.canonicalize();
        if (sgn(r) == 0) continue;
        auto ring = circle_samples(GaussianRational(0), r, per_ring);
        out.insert(out.end(), ring.begin(), ring.end());
    }
    return out;
}

}  // namespace padelab
