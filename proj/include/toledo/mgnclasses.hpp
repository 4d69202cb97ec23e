#pragma once

#include "toledo/cyclotomic.hpp"

#include <map>
#include <string>
#include <vector>

namespace toledo {

// Labels: psi_i (1-based), kappa_1, kappa_tilde_1, lambda_1, delta_irr and
// delta_{a,{i,j,..}} for the boundary divisor with a genus-a side carrying
// the points A.  Separating labels are stored in canonical form: the smaller
// of (a, A) and (g - a, complement) in lexicographic order.
class H2Class {
public:
    H2Class() = default;
    H2Class(int g, int n);

    int g() const { return g_; }
    int n() const { return n_; }
    const std::map<std::string, Rational>& coeffs() const { return c_; }
    Rational get(const std::string& label) const;
    // Accepts any spelling of a label (non-canonical delta sides, "delta_{1,{}}").
    H2Class& add(const std::string& label, const Rational& c);

    H2Class& operator+=(const H2Class& b);
    H2Class& operator-=(const H2Class& b);
    H2Class& operator*=(const Rational& s);
    friend H2Class operator+(H2Class a, const H2Class& b) { return a += b; }
    friend H2Class operator-(H2Class a, const H2Class& b) { return a -= b; }
    friend H2Class operator*(H2Class a, const Rational& s) { return a *= s; }
    friend H2Class operator*(const Rational& s, H2Class a) { return a *= s; }
    bool operator==(const H2Class& b) const { return g_ == b.g_ && n_ == b.n_ && c_ == b.c_; }
    bool is_zero() const { return c_.empty(); }

    std::string to_string() const;

private:
    void check_same(const H2Class& b) const;
    int g_ = 0, n_ = 0;
    std::map<std::string, Rational> c_;
};

struct BoundaryDivisor {
    int a = 0;
    std::vector<int> points;  // 1-based
    std::string label;
};

bool is_stable(int g, int n);
std::string psi_label(int i);
// Canonical label of the divisor splitting off (a, A); throws when a side is unstable.
std::string delta_label(int g, int n, int a, std::vector<int> A);
std::string canonical_label(int g, int n, const std::string& label);
// Every separating boundary divisor once.
std::vector<BoundaryDivisor> separating_divisors(int g, int n);

H2Class psi_sum(int g, int n);
H2Class delta_sum(int g, int n);  // delta_irr (when g >= 1) plus all separating divisors

// Rewrite kappa_tilde_1 and lambda_1 in terms of kappa_1, psi, delta.
H2Class to_kappa_basis(const H2Class& c);
// Rewrite kappa_1 and lambda_1 in terms of kappa_tilde_1, psi, delta.
H2Class to_kappa_tilde_basis(const H2Class& c);

// Rewrite kappa_1 and kappa_tilde_1 through kappa~ = 12 lambda - delta.
H2Class to_lambda_basis(const H2Class& c);

// K of the l-twisted compactification: (13/12) kappa~ + (1/12 - 1/l) delta + psi.
H2Class canonical_class(int l, int g, int n);
// c^* K of the elliptic-tail contraction (level 5): canonical_class(5) - delta_{1,{}}/5.
H2Class elliptic_pullback(int g, int n);

bool reduce_supported(int g, int n);
// Coordinates in the fixed basis of H^2 for the supported (g, n):
// (0,4) psi_1; (0,5) psi_1..psi_5; (1,1) psi_1; (1,2) delta_irr, delta_{0,{1,2}};
// (1,3) delta_irr and the four delta_{0,S}; (2,1) psi_1, delta_irr, delta_{1,{}}.
H2Class reduce(const H2Class& c);
std::vector<std::string> reduced_basis(int g, int n);

// Degree of a class on a one-dimensional space: (0,4) or (1,1).
Rational integrate(const H2Class& c);
// Intersection number on a two-dimensional space: (0,5) or (1,2).
Rational intersect(const H2Class& a, const H2Class& b);

}  // namespace toledo
