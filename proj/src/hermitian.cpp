#include "toledo/hermitian.hpp"

#include <numeric>
#include <stdexcept>

namespace toledo {

bool is_hermitian(const CMat& H) { return H.rows() == H.cols() && H == H.adjoint(); }

static Signature descartes(const std::vector<int>& s)
{
    // s: signs of the coefficients, low degree first, leading sign nonzero
    Signature out;
    size_t z = 0;
    while (z < s.size() && s[z] == 0) ++z;
    out.z = static_cast<int>(z);
    int prev = 0, prev_neg = 0;
    for (size_t k = z; k < s.size(); ++k) {
        if (s[k] == 0) continue;
        int neg = ((k % 2) ? -1 : 1) * s[k];
        if (prev && s[k] != prev) ++out.p;
        if (prev_neg && neg != prev_neg) ++out.q;
        prev = s[k];
        prev_neg = neg;
    }
    return out;
}

Signature signature(const CMat& H, const Embedding& e)
{
    if (!is_hermitian(H)) throw std::invalid_argument("signature: matrix is not Hermitian");
    auto cp = charpoly(H);
    std::vector<int> s;
    for (const auto& c : cp) s.push_back(sign_real(c, e));
    Signature out = descartes(s);
    if (out.p + out.q + out.z != static_cast<int>(H.rows()))
        throw std::logic_error("signature: root count mismatch");
    return out;
}

Signature signature(const QMat& H)
{
    if (H.rows() != H.cols() || H != H.transpose()) throw std::invalid_argument("signature: matrix is not symmetric");
    auto cp = charpoly(H);
    std::vector<int> s;
    for (const auto& c : cp) s.push_back(sgn(c));
    Signature out = descartes(s);
    if (out.p + out.q + out.z != static_cast<int>(H.rows()))
        throw std::logic_error("signature: root count mismatch");
    return out;
}

bool is_isometry(const CMat& U, const CMat& h) { return U.adjoint() * h * U == h; }

static CMat minus_i(const Embedding& e, size_t n) { return CMat::identity(n) * (-imag_unit(e)); }

int meyer_cocycle_direct(const CMat& A, const CMat& B, const CMat& h, const Embedding& e)
{
    size_t d = A.rows();
    CMat I = CMat::identity(d);
    CMat H = minus_i(e, d) * (I - inverse(B)) * inverse(I - A) * (I - A * B);
    return signature(h * H, e).value();
}

int meyer_cocycle_alt(const CMat& A, const CMat& B, const CMat& h, const Embedding& e)
{
    size_t d = A.rows();
    CMat I = CMat::identity(d);
    CMat Ai = inverse(A);
    CMat H = minus_i(e, d) * (inverse(B) - I) * inverse(Ai - I) * (B - Ai);
    return signature(h * H, e).value();
}

int meyer_cocycle_kernel(const CMat& A, const CMat& B, const CMat& h, const Embedding& e)
{
    size_t d = A.rows();
    CMat I = CMat::identity(d);
    CMat K(d, 2 * d);
    K.set_block(0, 0, inverse(A) - I);
    K.set_block(0, d, B - I);
    CMat N = nullspace(K);
    if (N.cols() == 0) return 0;
    CMat P(d, 2 * d), Pi2(d, 2 * d);
    P.set_block(0, 0, I);
    P.set_block(0, d, I);
    Pi2.set_block(0, d, I);
    CMat M = N.adjoint() * Pi2.adjoint() * (I - B).adjoint() * h * P * N;
    M = M * (-imag_unit(e));
    return signature(M, e).value();
}

int meyer_cocycle(const CMat& A, const CMat& B, const CMat& h, const Embedding& e)
{
    if (A.rows() != h.rows() || B.rows() != h.rows()) throw std::invalid_argument("meyer_cocycle: mismatched forms");
    if (!is_isometry(A, h) || !is_isometry(B, h)) throw std::invalid_argument("meyer_cocycle: not isometries of the form");
    CMat I = CMat::identity(A.rows());
    if (!det(I - A).is_zero()) return meyer_cocycle_direct(A, B, h, e);
    return meyer_cocycle_kernel(A, B, h, e);
}

long scalar_power_order(const CMat& U, long bound, CycloNum* scalar)
{
    CMat P = U;
    for (long t = 1; t <= bound; ++t) {
        if (P.is_scalar(scalar)) return t;
        P = P * U;
    }
    return 0;
}

static int field_order_of(const CMat& m)
{
    long N = 1;
    for (const auto& x : m.data()) N = lcm_order(N, x.order());
    return static_cast<int>(N);
}

std::vector<EigenPiece> eigen_split(const CMat& U, const CMat& h, const Embedding& e, long bound)
{
    size_t d = U.rows();
    int N0 = static_cast<int>(lcm_order(field_order_of(U), field_order_of(h)));
    if (bound <= 0) bound = 24L * N0 * N0;
    CycloNum c;
    long t = scalar_power_order(U, bound, &c);
    if (t == 0) throw std::domain_error("eigen_split: no scalar power within bound");
    int M0 = N0 % 2 ? 2 * N0 : N0;
    CycloNum cl = c.lift(static_cast<int>(lcm_order(M0, c.order())));
    M0 = cl.order() % 2 ? 2 * cl.order() : cl.order();
    long j = -1;
    for (long k = 0; k < M0; ++k)
        if (CycloNum::zeta(M0, k) == cl) {
            j = k;
            break;
        }
    if (j < 0) throw std::domain_error("eigen_split: scalar power is not a root of unity");
    std::vector<EigenPiece> out;
    int total = 0;
    long M = M0 * t;
    for (long w = 0; w < t; ++w) {
        long a = j + M0 * w;
        long g = std::gcd(a, M);
        int ord = static_cast<int>(M / g);
        CycloNum lam = CycloNum::zeta(ord, a / g);
        CMat D = U - CMat::identity(d) * lam;
        CMat V = nullspace(D);
        if (V.cols() == 0) continue;
        EigenPiece p;
        p.eigenvalue = lam;
        p.angle = e.angle_of(ord, a / g);
        p.dim = static_cast<int>(V.cols());
        p.sig = signature(V.adjoint() * h * V, e);
        total += p.dim;
        out.push_back(p);
    }
    if (total != static_cast<int>(d)) throw std::domain_error("eigen_split: isometry is not diagonalizable");
    return out;
}

Rational f_angle(const Rational& x)
{
    if (x == 0) return 0;
    if (x < 0 || x >= 1) throw std::invalid_argument("f_angle: expects a fraction of a turn in [0,1)");
    return 1 - 2 * x;
}

Rational g_function(const std::vector<EigenPiece>& split)
{
    Rational s = 0;
    for (const auto& p : split) s += p.sig.value() * f_angle(p.angle);
    return s;
}

Rational g_function(const CMat& U, const CMat& h, const Embedding& e) { return g_function(eigen_split(U, h, e)); }

Rational centered_angle(const Rational& x0)
{
    Rational x = x0;
    Integer fl;
    mpz_fdiv_q(fl.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    x -= Rational(fl);
    if (x > Rational(1, 2)) x -= 1;
    return x;
}

Rational toledo_triangle_pu11(const Rational& xa, const Rational& xb, const Rational& xc)
{
    int s = sgn(xa);
    for (const auto* x : {&xa, &xb, &xc}) {
        if (*x == 0 || sgn(*x) != s) throw std::domain_error("toledo_triangle_pu11: angles vanish or have mixed signs");
        if (abs(*x) >= Rational(1, 2)) throw std::domain_error("toledo_triangle_pu11: angle outside (-pi, pi)");
    }
    return s - (xa + xb + xc);
}

Rational toledo_triangle_turns(const Rational& a, const Rational& b, const Rational& c)
{
    for (const auto* x : {&a, &b, &c})
        if (*x <= 0 || *x >= 1) throw std::domain_error("toledo_triangle_turns: turns must lie in (0,1)");
    Rational s = a + b + c;
    if (s < 1) return 1 - s;
    if (s > 2) return 2 - s;
    throw std::domain_error("toledo_triangle_turns: no hyperbolic triangle with these angles");
}

Rational pu11_angle(const CMat& U, const CMat& h, const Embedding& e)
{
    auto sp = eigen_split(U, h, e);
    Rational pos, neg;
    int np = 0, nn = 0;
    for (const auto& p : sp) {
        if (p.sig.p == p.dim && p.dim == 1) {
            pos = p.angle;
            ++np;
        } else if (p.sig.q == p.dim && p.dim == 1) {
            neg = p.angle;
            ++nn;
        } else if (p.dim == 2 && p.sig.p == 1 && p.sig.q == 1) {
            pos = neg = p.angle;
            np = nn = 1;
        }
    }
    if (np != 1 || nn != 1) throw std::domain_error("pu11_angle: not an isometry of a (1,1) form");
    return centered_angle(neg - pos);
}

Rational toledo_triangle_meyer(const CMat& A, const CMat& B, const CMat& h, const Embedding& e)
{
    CMat C = inverse(A * B);
    int mu = meyer_cocycle(A, B, h, e);
    return (Rational(mu) - g_function(A, h, e) - g_function(B, h, e) - g_function(C, h, e)) / 2;
}

}  // namespace toledo
