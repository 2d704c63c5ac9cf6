#include "padelab/power_series.hpp"

#include "padelab/errors.hpp"

#include <algorithm>

namespace padelab {

PowerSeries PowerSeries::from_polynomial(const Polynomial& p, std::size_t truncation_len) {
    std::vector<GaussianRational> v(truncation_len);
    for (std::size_t k = 0; k < truncation_len; ++k) v[k] = p.coeff(k);
    return PowerSeries(std::move(v));
}

const GaussianRational& PowerSeries::at(std::size_t k) const {
    if (k >= coeffs_.size())
        throw TruncationError("coefficient a_" + std::to_string(k) + " requested from a series truncated at " +
                              std::to_string(coeffs_.size()));
    return coeffs_[k];
}

GaussianRational PowerSeries::at_signed(long k) const {
    if (k < 0) return {};
    return at(static_cast<std::size_t>(k));
}

Polynomial PowerSeries::partial_sum(std::size_t n) const {
    if (n >= coeffs_.size()) at(n);  // raises
    return Polynomial(std::vector<GaussianRational>(coeffs_.begin(), coeffs_.begin() + n + 1));
}

PowerSeries PowerSeries::truncated(std::size_t len) const {
    if (len > coeffs_.size())
        throw TruncationError("cannot extend a series truncated at " + std::to_string(coeffs_.size()) + " to " +
                              std::to_string(len));
    return PowerSeries(std::vector<GaussianRational>(coeffs_.begin(), coeffs_.begin() + len));
}

PowerSeries multiply(const PowerSeries& s, const Polynomial& p) {
    std::size_t n = s.truncation_len();
    std::vector<GaussianRational> out(n);
    auto pc = p.coeffs();
    for (std::size_t i = 0; i < pc.size() && i < n; ++i) {
        if (pc[i].is_zero()) continue;
        for (std::size_t k = i; k < n; ++k) out[k] += pc[i] * s.coeffs()[k - i];
    }
    return PowerSeries(std::move(out));
}

PowerSeries multiply(const PowerSeries& a, const PowerSeries& b) {
    std::size_t n = std::min(a.truncation_len(), b.truncation_len());
    std::vector<GaussianRational> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (a.coeffs()[i].is_zero()) continue;
        for (std::size_t k = i; k < n; ++k) out[k] += a.coeffs()[i] * b.coeffs()[k - i];
    }
    return PowerSeries(std::move(out));
}

PowerSeries add(const PowerSeries& a, const PowerSeries& b) {
    std::size_t n = std::min(a.truncation_len(), b.truncation_len());
    std::vector<GaussianRational> out(n);
    for (std::size_t k = 0; k < n; ++k) out[k] = a.coeffs()[k] + b.coeffs()[k];
    return PowerSeries(std::move(out));
}

PowerSeries scale(const PowerSeries& s, const GaussianRational& c) {
    std::vector<GaussianRational> out(s.coeffs().begin(), s.coeffs().end());
    for (auto& x : out) x *= c;
    return PowerSeries(std::move(out));
}

PowerSeries series_reciprocal(const PowerSeries& s) {
    std::size_t n = s.truncation_len();
    if (n == 0) return s;
    if (s.at(0).is_zero()) throw PreconditionError("series reciprocal needs a_0 != 0");
    GaussianRational inv0 = s.at(0).inverse();
    std::vector<GaussianRational> b(n);
    b[0] = inv0;
    for (std::size_t k = 1; k < n; ++k) {
        GaussianRational acc;
        for (std::size_t i = 1; i <= k; ++i) {
            if (s.coeffs()[i].is_zero()) continue;
            acc += s.coeffs()[i] * b[k - i];
        }
        b[k] = -(acc * inv0);
    }
    return PowerSeries(std::move(b));
}

PowerSeries series_div_poly(const PowerSeries& s, const Polynomial& q) {
    if (q.is_zero() || q.coeff(0).is_zero()) throw PreconditionError("series division needs q(0) != 0");
    std::size_t n = s.truncation_len();
    GaussianRational inv0 = q.coeff(0).inverse();
    auto qc = q.coeffs();
    std::vector<GaussianRational> r(n);
    // s = q * r, solved coefficient by coefficient.
    for (std::size_t k = 0; k < n; ++k) {
        GaussianRational acc = s.coeffs()[k];
        for (std::size_t i = 1; i < qc.size() && i <= k; ++i) {
            if (qc[i].is_zero()) continue;
            acc -= qc[i] * r[k - i];
        }
        r[k] = acc * inv0;
    }
    return PowerSeries(std::move(r));
}

std::size_t linearized_valuation(const PowerSeries& s, const Polynomial& p, const Polynomial& q,
                                 std::size_t through) {
    auto qc = q.coeffs();
    for (std::size_t k = 0; k <= through; ++k) {
        GaussianRational acc;
        for (std::size_t i = 0; i < qc.size() && i <= k; ++i) {
            if (qc[i].is_zero()) continue;
            acc += qc[i] * s.at(k - i);
        }
        acc -= p.coeff(k);
        if (!acc.is_zero()) return k;
    }
    return through + 1;
}

}  // namespace padelab
