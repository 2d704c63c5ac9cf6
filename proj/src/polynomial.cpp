#include "padelab/polynomial.hpp"

#include "padelab/errors.hpp"

#include <sstream>

namespace padelab {

Polynomial::Polynomial(std::vector<GaussianRational> coeffs) : coeffs_(std::move(coeffs)) {
    normalize();
}

void Polynomial::normalize() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    if (coeffs_.empty()) {
        degree_.reset();
        valuation_.reset();
        return;
    }
    degree_ = coeffs_.size() - 1;
    std::size_t v = 0;
    while (coeffs_[v].is_zero()) ++v;
    valuation_ = v;
}

Polynomial Polynomial::constant(GaussianRational c) {
    return Polynomial(std::vector<GaussianRational>{std::move(c)});
}

Polynomial Polynomial::monomial(GaussianRational c, std::size_t k) {
    std::vector<GaussianRational> v(k + 1);
    v[k] = std::move(c);
    return Polynomial(std::move(v));
}

Polynomial Polynomial::from_inverse_roots(std::span<const GaussianRational> roots) {
    Polynomial q = constant(1);
    for (const auto& w : roots) {
        if (w.is_zero()) throw PreconditionError("root at the origin cannot be written as 1 - z/w");
        q *= Polynomial{GaussianRational(1), -w.inverse()};
    }
    return q;
}

GaussianRational Polynomial::coeff(std::size_t k) const {
    return k < coeffs_.size() ? coeffs_[k] : GaussianRational();
}

const GaussianRational& Polynomial::leading() const {
    if (is_zero()) throw PreconditionError("zero polynomial has no leading coefficient");
    return coeffs_.back();
}

GaussianRational Polynomial::operator()(const GaussianRational& z) const {
    GaussianRational acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= z;
        acc += *it;
    }
    return acc;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    normalize();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
    normalize();
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<GaussianRational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Polynomial(std::move(out));
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
    *this = *this * o;
    return *this;
}

Polynomial& Polynomial::operator*=(const GaussianRational& c) {
    for (auto& x : coeffs_) x *= c;
    normalize();
    return *this;
}

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (auto& x : r.coeffs_) x = -x;
    return r;
}

Polynomial Polynomial::shifted(std::size_t k) const {
    if (is_zero()) return {};
    std::vector<GaussianRational> v(k);
    v.insert(v.end(), coeffs_.begin(), coeffs_.end());
    return Polynomial(std::move(v));
}

Polynomial Polynomial::truncated(std::size_t max_degree) const {
    if (coeffs_.size() <= max_degree + 1) return *this;
    return Polynomial(std::vector<GaussianRational>(coeffs_.begin(), coeffs_.begin() + max_degree + 1));
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return {};
    return *this * leading().inverse();
}

std::string Polynomial::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (coeffs_[k].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        std::string c = coeffs_[k].to_string();
        bool compound = !coeffs_[k].is_real() && sgn(coeffs_[k].re()) != 0;
        if (k == 0) {
            os << c;
            continue;
        }
        if (compound)
            os << '(' << c << ")*";
        else if (c == "-1")
            os << '-';
        else if (c != "1")
            os << c << '*';
        os << 'z';
        if (k > 1) os << '^' << k;
    }
    return os.str();
}

DivMod divmod(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw PreconditionError("polynomial division by zero");
    if (a.is_zero() || *a.degree() < *b.degree()) return {Polynomial{}, a};
    std::size_t db = *b.degree();
    std::vector<GaussianRational> rem(a.coeffs().begin(), a.coeffs().end());
    std::vector<GaussianRational> quo(rem.size() - db);
    GaussianRational inv_lead = b.leading().inverse();
    for (std::size_t k = rem.size(); k-- > db;) {
        if (rem[k].is_zero()) continue;
        GaussianRational factor = rem[k] * inv_lead;
        for (std::size_t j = 0; j <= db; ++j) rem[k - db + j] -= factor * b.coeffs()[j];
        quo[k - db] = std::move(factor);
    }
    rem.resize(db);
    return {Polynomial(std::move(quo)), Polynomial(std::move(rem))};
}

Polynomial exact_divide(const Polynomial& a, const Polynomial& b) {
    DivMod qr = divmod(a, b);
    if (!qr.remainder.is_zero())
        throw VerificationError("polynomial division is not exact: " + a.to_string() + " / " + b.to_string());
    return qr.quotient;
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() && b.is_zero()) throw PreconditionError("gcd of two zero polynomials");
    Polynomial x = a;
    Polynomial y = b;
    while (!y.is_zero()) {
        Polynomial r = divmod(x, y).remainder;
        x = std::move(y);
        // Keep the working remainders monic to slow coefficient growth.
        y = r.monic();
    }
    return x.monic();
}

Polynomial poly_arith(const Polynomial& a, const Polynomial& b, PolyOp op) {
    switch (op) {
        case PolyOp::add: return a + b;
        case PolyOp::sub: return a - b;
        case PolyOp::mul: return a * b;
    }
    return {};
}

}  // namespace padelab
