#include <jetmoduli/polynomial.hpp>

#include <stdexcept>

namespace jetmoduli {

TruncatedPolynomial::TruncatedPolynomial(int n, int degree_bound) : n_(n), bound_(degree_bound) {
    if (n < 1) throw std::invalid_argument("TruncatedPolynomial: need at least one variable");
    if (degree_bound < 0) throw std::invalid_argument("TruncatedPolynomial: negative degree bound");
}

TruncatedPolynomial TruncatedPolynomial::constant(int n, const Rational& value, int degree_bound) {
    TruncatedPolynomial p(n, degree_bound);
    p.set_coeff(MultiIndex(n), value);
    return p;
}

TruncatedPolynomial TruncatedPolynomial::monomial(const MultiIndex& m, const Rational& c,
                                                  int degree_bound) {
    TruncatedPolynomial p(m.vars(), degree_bound);
    p.set_coeff(m, c);
    return p;
}

Rational TruncatedPolynomial::coeff(const MultiIndex& m) const {
    const auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

void TruncatedPolynomial::set_coeff(const MultiIndex& m, const Rational& value) {
    if (m.vars() != n_) throw std::invalid_argument("set_coeff: wrong variable count");
    if (m.degree() > bound_)
        throw std::invalid_argument("set_coeff: degree exceeds truncation bound");
    if (value.is_zero())
        terms_.erase(m);
    else
        terms_[m] = value;
}

void TruncatedPolynomial::add_coeff(const MultiIndex& m, const Rational& value) {
    set_coeff(m, coeff(m) + value);
}

TruncatedPolynomial TruncatedPolynomial::derivative(int var) const {
    TruncatedPolynomial d(n_, bound_ > 0 ? bound_ - 1 : 0);
    for (const auto& [m, c] : terms_) {
        const int e = m[var];
        if (e == 0) continue;
        d.add_coeff(m.minus(var), Rational(e) * c);
    }
    return d;
}

TruncatedPolynomial TruncatedPolynomial::truncated(int new_bound) const {
    TruncatedPolynomial p(n_, new_bound);
    for (const auto& [m, c] : terms_)
        if (m.degree() <= new_bound) p.terms_[m] = c;
    return p;
}

void TruncatedPolynomial::check_same_vars(const TruncatedPolynomial& o) const {
    if (n_ != o.n_)
        throw std::invalid_argument("TruncatedPolynomial: mismatched variable count");
}

TruncatedPolynomial& TruncatedPolynomial::operator+=(const TruncatedPolynomial& o) {
    check_same_vars(o);
    if (o.bound_ > bound_) bound_ = o.bound_;
    for (const auto& [m, c] : o.terms_) add_coeff(m, c);
    return *this;
}

TruncatedPolynomial& TruncatedPolynomial::operator-=(const TruncatedPolynomial& o) {
    check_same_vars(o);
    if (o.bound_ > bound_) bound_ = o.bound_;
    for (const auto& [m, c] : o.terms_) add_coeff(m, -c);
    return *this;
}

TruncatedPolynomial& TruncatedPolynomial::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
}

TruncatedPolynomial truncate_product(const TruncatedPolynomial& p, const TruncatedPolynomial& q,
                                     int bound) {
    if (p.vars() != q.vars())
        throw std::invalid_argument("truncate_product: mismatched variable count");
    TruncatedPolynomial out(p.vars(), bound);
    for (const auto& [mp, cp] : p.terms()) {
        if (mp.degree() > bound) continue;
        for (const auto& [mq, cq] : q.terms()) {
            if (mp.degree() + mq.degree() > bound) continue;
            MultiIndex m = mp;
            for (int v = 0; v < m.vars(); ++v) m[v] += mq[v];
            out.add_coeff(m, cp * cq);
        }
    }
    return out;
}

}  // namespace jetmoduli
