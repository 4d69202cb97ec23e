#pragma once

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace toledo {

using Rational = mpq_class;
using Integer = mpz_class;

// Element of Q(zeta_N) in the power basis of Q[x]/Phi_N.  Stored as integer
// numerators over one positive common denominator, always in lowest terms.
class CycloNum {
public:
    CycloNum();
    CycloNum(long v);
    CycloNum(const Rational& v, int order = 1);

    static CycloNum zero(int order);
    static CycloNum zeta(int order, long power = 1);

    int order() const { return order_; }
    int degree() const { return static_cast<int>(num_.size()); }
    std::vector<Rational> coeffs() const;
    Rational coeff(int i) const;
    const std::vector<Integer>& numerators() const { return num_; }
    const Integer& denominator() const { return den_; }

    bool is_zero() const;
    bool is_rational() const;
    Rational to_rational() const;

    // Re-express in Q(zeta_M); M must be a multiple of order().
    CycloNum lift(int M) const;
    // Smallest order representing the same number.
    CycloNum reduced() const;

    CycloNum& operator+=(const CycloNum& b);
    CycloNum& operator-=(const CycloNum& b);
    CycloNum& operator*=(const CycloNum& b);
    CycloNum& operator/=(const CycloNum& b);

    friend CycloNum operator+(CycloNum a, const CycloNum& b) { return a += b; }
    friend CycloNum operator-(CycloNum a, const CycloNum& b) { return a -= b; }
    friend CycloNum operator*(CycloNum a, const CycloNum& b) { return a *= b; }
    friend CycloNum operator/(CycloNum a, const CycloNum& b) { return a /= b; }
    CycloNum operator-() const;

    friend bool operator==(const CycloNum& a, const CycloNum& b);
    friend bool operator!=(const CycloNum& a, const CycloNum& b) { return !(a == b); }

    std::string to_string() const;

private:
    CycloNum(int order, std::vector<Integer> num, Integer den);
    void normalize();

    int order_ = 1;
    std::vector<Integer> num_;
    Integer den_ = 1;

    friend CycloNum inv(const CycloNum& a);
    friend CycloNum galois(const CycloNum& a, long k);
};

CycloNum inv(const CycloNum& a);
CycloNum conjugate(const CycloNum& a);
CycloNum galois(const CycloNum& a, long k);
CycloNum pow(const CycloNum& a, long e);

// Trace from the subfield whose Q-embeddings are the Galois maps listed in
// orbit (one representative per coset).  Empty orbit = full group.
Rational trace_to_Q(const CycloNum& a, const std::vector<long>& orbit = {});

CycloNum quantum_int(long n, const CycloNum& q);
CycloNum quantum_factorial(long n, const CycloNum& q);

long euler_phi(long n);
long lcm_order(long a, long b);
// Phi_N, low degree first.
const std::vector<Integer>& cyclotomic_poly(int N);

class Embedding {
public:
    Embedding() : Embedding(1, 1) {}
    Embedding(int order, long exponent);

    int order() const { return order_; }
    long exponent() const { return exponent_; }
    // zeta_M -> exp(2 pi i K / M) for every M; K = exponent mod order.
    long universal_exponent() const { return universal_; }
    // Fraction x in [0,1) with zeta_M^j -> exp(2 pi i x).
    Rational angle_of(int M, long j) const;

    Embedding compose(long k) const;
    bool operator==(const Embedding& o) const { return order_ == o.order_ && exponent_ == o.exponent_; }

private:
    int order_;
    long exponent_;
    long universal_;
};

// Element mapping to +i under e.
CycloNum imag_unit(const Embedding& e);
// Root of unity zeta_M^j, as the exact fraction of a turn under e.
Rational root_angle(const CycloNum& z, const Embedding& e);

struct SignedInterval {
    double re_lo, re_hi, im_lo, im_hi;
    long precision;
};

SignedInterval enclose(const CycloNum& a, const Embedding& e, long bits);
int sign_real(const CycloNum& a, const Embedding& e);
std::complex<double> to_complex(const CycloNum& a, const Embedding& e);

std::string rational_string(const Rational& q);
Rational parse_rational(const std::string& s);

}  // namespace toledo
