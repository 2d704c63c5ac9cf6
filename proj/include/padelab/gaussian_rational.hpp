#ifndef PADELAB_GAUSSIAN_RATIONAL_HPP
#define PADELAB_GAUSSIAN_RATIONAL_HPP

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>

namespace padelab {

using Rational = mpq_class;

/// Exact complex number re + im*i with arbitrary-precision rational parts.
///
/// Both parts are kept canonical (coprime, positive denominator), so equality
/// is structural. Text form is "a/b+c/d*i" with the imaginary part omitted when
/// zero and the real part omitted when zero and the imaginary part is not.
class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(long v) : re_(v) {}  // NOLINT(google-explicit-constructor)
    GaussianRational(Rational re) : re_(std::move(re)) { re_.canonicalize(); }  // NOLINT
    GaussianRational(Rational re, Rational im);

    static GaussianRational i() { return GaussianRational(Rational(0), Rational(1)); }
    static GaussianRational parse(std::string_view text);

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }

    GaussianRational conj() const { return {re_, -im_}; }
    /// |z|^2, exact.
    Rational norm2() const { return re_ * re_ + im_ * im_; }
    GaussianRational inverse() const;

    GaussianRational& operator+=(const GaussianRational& o);
    GaussianRational& operator-=(const GaussianRational& o);
    GaussianRational& operator*=(const GaussianRational& o);
    GaussianRational& operator/=(const GaussianRational& o);

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
    GaussianRational operator-() const { return {-re_, -im_}; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }

    std::string to_string() const;
    double real_double() const { return re_.get_d(); }
    double imag_double() const { return im_.get_d(); }

private:
    Rational re_{0};
    Rational im_{0};
};

GaussianRational pow(const GaussianRational& base, unsigned exponent);

/// Canonical text of a single rational: "n" or "n/d".
std::string rational_to_string(const Rational& q);
/// Parses "n", "n/d" or a finite decimal literal such as "-0.125", exactly.
Rational parse_rational(std::string_view text);

std::ostream& operator<<(std::ostream& os, const GaussianRational& z);

}  // namespace padelab

#endif
