#pragma once

#include "toledo/cyclotomic.hpp"
#include "toledo/matrix.hpp"

#include <vector>

namespace toledo {

struct Signature {
    int p = 0, q = 0, z = 0;
    int value() const { return p - q; }
    bool operator==(const Signature& o) const { return p == o.p && q == o.q && z == o.z; }
};

bool is_hermitian(const CMat& H);
// Exact signature of a Hermitian matrix from the sign pattern of its
// characteristic polynomial (all roots are real, so Descartes is exact).
Signature signature(const CMat& H, const Embedding& e);
Signature signature(const QMat& H);

// Forms are matrices h with h(x, y) = y* h x; U is an isometry when U* h U = h.
bool is_isometry(const CMat& U, const CMat& h);

// Meyer cocycle mu(A, B) for isometries of one form, C = (AB)^{-1}.
int meyer_cocycle(const CMat& A, const CMat& B, const CMat& h, const Embedding& e);
// The two evaluation routes, exposed for cross-checks.
int meyer_cocycle_direct(const CMat& A, const CMat& B, const CMat& h, const Embedding& e);
int meyer_cocycle_kernel(const CMat& A, const CMat& B, const CMat& h, const Embedding& e);
// Signature of h (1/i)(B^-1 - 1)(A^-1 - 1)^-1 (B - A^-1); needs 1 - A invertible.
int meyer_cocycle_alt(const CMat& A, const CMat& B, const CMat& h, const Embedding& e);

struct EigenPiece {
    CycloNum eigenvalue;
    Rational angle;  // fraction of a turn in [0, 1)
    int dim = 0;
    Signature sig;
};

// Spectral data of a finite-order (modulo scalars) isometry.  bound <= 0 uses
// 24 * N^2 with N the order of the coefficient field.
std::vector<EigenPiece> eigen_split(const CMat& U, const CMat& h, const Embedding& e, long bound = 0);

// Smallest t >= 1 with U^t scalar, or 0 if none up to bound.
long scalar_power_order(const CMat& U, long bound, CycloNum* scalar = nullptr);

Rational f_angle(const Rational& x);
Rational g_function(const CMat& U, const CMat& h, const Embedding& e);
Rational g_function(const std::vector<EigenPiece>& split);

// Angles as fractions of a turn in (-1/2, 1/2), all nonzero with one sign.
Rational toledo_triangle_pu11(const Rational& xa, const Rational& xb, const Rational& xc);
// Same value from counterclockwise turns a, b, c in (0,1): the centers span a
// triangle with angles pi a, pi b, pi c (sum < 1) or pi(1-a), .. (sum > 2).
// Covers obtuse triangles, where some rotation angle leaves (-pi, pi).
Rational toledo_triangle_turns(const Rational& a, const Rational& b, const Rational& c);
// Rotation angle of a U(1,1) isometry: angle(lambda_neg / lambda_pos) in (-1/2, 1/2].
Rational pu11_angle(const CMat& U, const CMat& h, const Embedding& e);

// tau(A, B) = (mu(A, B) - G(A) - G(B) - G(C)) / 2 with C = (AB)^{-1}.
Rational toledo_triangle_meyer(const CMat& A, const CMat& B, const CMat& h, const Embedding& e);

// Shift a fraction of a turn into (-1/2, 1/2].
Rational centered_angle(const Rational& x);

}  // namespace toledo
