#include "helpenum/cyclo.hpp"

#include <numeric>
#include <stdexcept>

namespace helpenum {

long long euler_phi(long long n) {
    if (n < 1) throw std::invalid_argument("euler_phi: n must be positive");
    long long r = 1, m = n;
    for (long long p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            long long pe = 1;
            while (m % p == 0) { m /= p; pe *= p; }
            r *= pe - pe / p;
        }
    }
    if (m > 1) r *= m - 1;
    return r;
}

int moebius(long long n) {
    if (n < 1) throw std::invalid_argument("moebius: n must be positive");
    int r = 1;
    long long m = n;
    for (long long p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            m /= p;
            if (m % p == 0) return 0;
            r = -r;
        }
    }
    if (m > 1) r = -r;
    return r;
}

long long ramanujan_sum(long long m, long long a) {
    if (m < 1) throw std::invalid_argument("ramanujan_sum: m must be positive");
    long long am = a % m;
    if (am < 0) am += m;
    long long g = am == 0 ? m : std::gcd(am, m);
    long long k = m / g;
    int mu = moebius(k);
    if (mu == 0) return 0;
    return mu * (euler_phi(m) / euler_phi(k));
}

Cyclotomic::Cyclotomic(const Rational& q, long long order) : order_(order) {
    if (order < 1) throw std::invalid_argument("Cyclotomic: order must be positive");
    add_term(0, q);
}

Cyclotomic Cyclotomic::root(long long order, long long exponent) {
    Cyclotomic x;
    x.order_ = order;
    if (order < 1) throw std::invalid_argument("Cyclotomic::root: order must be positive");
    x.add_term(exponent, Rational(1));
    return x;
}

void Cyclotomic::add_term(long long exponent, const Rational& coeff) {
    if (coeff == 0) return;
    long long e = exponent % order_;
    if (e < 0) e += order_;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, coeff);
    } else {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

Cyclotomic Cyclotomic::rescaled(long long new_order) const {
    if (new_order < 1 || new_order % order_ != 0)
        throw std::invalid_argument("Cyclotomic::rescaled: target order must be a positive multiple");
    Cyclotomic x;
    x.order_ = new_order;
    long long f = new_order / order_;
    for (const auto& [e, c] : terms_) x.terms_.emplace(e * f, c);
    return x;
}

Cyclotomic Cyclotomic::galois(long long j) const {
    long long jm = j % order_;
    if (jm < 0) jm += order_;
    if (std::gcd(jm == 0 ? order_ : jm, order_) != 1)
        throw std::invalid_argument("Cyclotomic::galois: j must be coprime to the order");
    Cyclotomic x;
    x.order_ = order_;
    for (const auto& [e, c] : terms_) x.add_term(e * jm, c);
    return x;
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
    long long L = std::lcm(order_, o.order_);
    Cyclotomic a = rescaled(L);
    for (const auto& [e, c] : o.rescaled(L).terms_) a.add_term(e, c);
    return a;
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const {
    return *this + o.scaled(Rational(-1));
}

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
    long long L = std::lcm(order_, o.order_);
    Cyclotomic a = rescaled(L), b = o.rescaled(L);
    Cyclotomic r;
    r.order_ = L;
    for (const auto& [e1, c1] : a.terms_)
        for (const auto& [e2, c2] : b.terms_)
            r.add_term(e1 + e2, c1 * c2);
    return r;
}

Cyclotomic Cyclotomic::scaled(const Rational& q) const {
    Cyclotomic r;
    r.order_ = order_;
    if (q == 0) return r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, c * q);
    return r;
}

Rational Cyclotomic::trace() const {
    Rational s(0);
    for (const auto& [e, c] : terms_) s += c * ramanujan_sum(order_, e);
    return s;
}

Rational Cyclotomic::trace_over(long long m) const {
    if (m < 1) throw std::invalid_argument("trace_over: m must be positive");
    long long L = std::lcm(order_, m);
    // Tr_{Q(zeta_L)/Q} = [Q(zeta_L):Q(zeta_m)] * Tr_{Q(zeta_m)/Q} on Q(zeta_m).
    return rescaled(L).trace() * Rational(euler_phi(m), euler_phi(L));
}

bool Cyclotomic::is_zero() const {
    if (terms_.empty()) return true;
    for (long long b = 0; b < order_; ++b) {
        Rational s(0);
        for (const auto& [e, c] : terms_) s += c * ramanujan_sum(order_, e - b);
        if (s != 0) return false;
    }
    return true;
}

bool Cyclotomic::equals(const Cyclotomic& o) const {
    return (*this - o).is_zero();
}

std::optional<Rational> Cyclotomic::as_rational() const {
    if (terms_.empty()) return Rational(0);
    if (terms_.size() == 1 && terms_.begin()->first == 0) return terms_.begin()->second;
    Rational q = trace() / euler_phi(order_);
    if (equals(Cyclotomic(q, order_))) return q;
    return std::nullopt;
}

}  // namespace helpenum
