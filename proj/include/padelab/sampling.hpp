#ifndef PADELAB_SAMPLING_HPP
#define PADELAB_SAMPLING_HPP

#include "padelab/gaussian_rational.hpp"
#include "padelab/rational_function.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace padelab {

/// Finite point cloud standing in for a compact K outside the closed unit disk and away from W.
struct CompactSetSpec {
    std::vector<GaussianRational> samples;
    Rational margin;
    std::vector<GaussianRational> excluded;

    /// Throws PreconditionError unless samples is nonempty, margin > 0, every |z| >= 1
    /// and every |z - w| >= margin, all checked exactly on squares.
    void validate() const;

    friend bool operator==(const CompactSetSpec&, const CompactSetSpec&) = default;
};

/// Finite point cloud inside the closed disk of radius `radius` < 1.
struct DiskSampleSpec {
    std::vector<GaussianRational> samples;
    Rational radius;

    void validate() const;

    friend bool operator==(const DiskSampleSpec&, const DiskSampleSpec&) = default;
};

/// Smallest dyadic u (denominator 2^40) with u >= sqrt(x), or sqrt(x) itself when x is a rational square.
Rational sqrt_upper(const Rational& x);
/// Largest dyadic l (denominator 2^40) with l <= sqrt(x), or sqrt(x) itself when x is a rational square.
Rational sqrt_lower(const Rational& x);

/// Exact max of |f(z)|^2 over the samples (0 for an empty list).
Rational max_abs2_on_samples(const RationalFunction& f, std::span<const GaussianRational> pts);

/// Upper bound on max |f(z)| over the samples; exact when the maximum of |f|^2 is a rational square.
Rational sup_norm_on_samples(const RationalFunction& f, std::span<const GaussianRational> pts);

/// Lower bound on min |z - w| over z in a, w in b; nullopt when either list is empty.
std::optional<Rational> distance_lower_bound(std::span<const GaussianRational> a,
                                             std::span<const GaussianRational> b);

/// `count` points lying exactly on |z - center| = radius, spread evenly in angle.
/// Points are rational lattice points (x/N, y/N) with x^2 + y^2 = N^2, scaled and shifted.
std::vector<GaussianRational> circle_samples(const GaussianRational& center, const Rational& radius,
                                             std::size_t count);

/// The origin plus `rings` concentric circles of radii radius*k/rings, `per_ring` points each.
std::vector<GaussianRational> disk_samples(const Rational& radius, std::size_t rings, std::size_t per_ring);

}  // namespace padelab

#endif
