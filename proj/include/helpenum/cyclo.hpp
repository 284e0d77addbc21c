#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <optional>

namespace helpenum {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Euler totient, by trial division.
long long euler_phi(long long n);

/// Moebius function, in {-1, 0, 1}.
int moebius(long long n);

/// Ramanujan sum c_m(a) = sum of e(a*j/m) over j coprime to m.
/// Evaluates to mu(m/g) * phi(m) / phi(m/g) with g = gcd(a mod m, m);
/// equals the trace of a single root of unity e(a/m) from Q(zeta_m) to Q.
long long ramanujan_sum(long long m, long long a);

/// An exact element of a cyclotomic field, stored as a rational combination
/// of roots of unity e(a/n) at a fixed order n.  No canonical-basis reduction
/// is performed; equality is decided by trace probes against the power basis,
/// which is all the engine ever needs.
class Cyclotomic {
public:
    Cyclotomic() : order_(1) {}
    explicit Cyclotomic(const Rational& q, long long order = 1);
    explicit Cyclotomic(long long q) : Cyclotomic(Rational(q)) {}

    /// e(exponent / order)
    static Cyclotomic root(long long order, long long exponent);

    long long order() const { return order_; }
    const std::map<long long, Rational>& terms() const { return terms_; }

    /// Same value embedded at a larger order (new_order must be a multiple).
    Cyclotomic rescaled(long long new_order) const;

    /// Galois conjugate: exponent a maps to a*j mod n; j must be coprime to n.
    Cyclotomic galois(long long j) const;
    Cyclotomic conjugate() const { return galois(-1); }

    Cyclotomic operator+(const Cyclotomic& o) const;
    Cyclotomic operator-(const Cyclotomic& o) const;
    Cyclotomic operator*(const Cyclotomic& o) const;
    Cyclotomic scaled(const Rational& q) const;

    /// Trace to Q from Q(zeta_order): linear extension of the Ramanujan sum.
    Rational trace() const;

    /// Trace to Q from Q(zeta_m).  The value must lie in Q(zeta_m); the
    /// representation order need not divide m (the value is rescaled to the
    /// lcm L and the result corrected by phi(m)/phi(L), using transitivity
    /// of the trace).
    Rational trace_over(long long m) const;

    /// True iff the value is zero: every power-basis trace probe vanishes.
    bool is_zero() const;
    bool equals(const Cyclotomic& o) const;

    /// The rational value if this element lies in Q, otherwise nullopt.
    std::optional<Rational> as_rational() const;

private:
    long long order_;
    std::map<long long, Rational> terms_;  // exponent mod order -> nonzero coeff

    void add_term(long long exponent, const Rational& coeff);
};

}  // namespace helpenum
