#include "toledo/qrep.hpp"

#include "toledo/fusion.hpp"

#include <stdexcept>

namespace toledo {

namespace {

CycloNum qn(int l, long n) { return quantum_int(n, CycloNum::zeta(l)); }

void check_args(int l, const Embedding& e, int i)
{
    if (l < 5 || l % 2 == 0) throw std::invalid_argument("qrep: level must be odd and >= 5");
    if (e.order() != l) throw std::invalid_argument("qrep: embedding must have order l");
    if (i < 0 || i > (l - 3) / 2) throw std::invalid_argument("qrep: color index out of range");
}

}  // namespace

FourPointData four_point_data(int l, const Embedding& e, int i)
{
    check_args(l, e, i);
    int r = (l - 1) / 2;
    FourPointData d;
    d.l = l;
    d.i = i;
    d.e = e;
    CycloNum q = CycloNum::zeta(l);
    d.f0_norm = -qn(l, 2) * qn(l, 2 * i + 1);
    d.f1_norm = so3_theta(l, 2 * r - 2, 2 * r - 2, 2) * so3_theta(l, 2 * i, 2 * i, 2) / qn(l, 3);
    CycloNum t0 = so3_theta(l, 2 * r - 2, 2 * i, 2 * r - 2 - 2 * i);
    d.g0_norm = t0 * t0 / qn(l, 2 * r - 2 * i - 1);
    if (i > 0) {
        CycloNum t1 = so3_theta(l, 2 * r - 2, 2 * i, 2 * r - 2 * i);
        d.g1_norm = t1 * t1 / qn(l, 2 * r - 2 * i + 1);
    } else {
        d.g1_norm = CycloNum::zero(l);
    }
    d.gamma_eigen[0] = CycloNum(Rational(1), l);
    d.gamma_eigen[1] = pow(q, 4);
    d.delta_eigen[0] = pow(q, 2L * (r - i - 1) * (r - i));
    d.delta_eigen[1] = pow(q, 2L * (r - i) * (r - i + 1));
    return d;
}

Rational four_point_toledo(int l, const Embedding& e, int i, int j)
{
    check_args(l, e, i);
    check_args(l, e, j);
    if (i != j || i == 0) return 0;
    int r = (l - 1) / 2;
    int s2i = sign_real(qn(l, 2 * i), e);
    if (s2i * sign_real(qn(l, 2 * i + 2), e) > 0) return 0;
    int sg = sign_real(qn(l, 2) * qn(l, 2 * i + 1), e);
    Rational xa = centered_angle(e.angle_of(l, 4L * (r - i) * s2i));
    Rational xc = centered_angle(e.angle_of(l, -4L * sg));
    if (xa == 0 || xc == 0 || abs(xa) == Rational(1, 2) || abs(xc) == Rational(1, 2))
        throw std::domain_error("four_point_toledo: degenerate angle");
    // mixed signs: an obtuse vertex, handled through turns in (0,1)
    auto turn = [](const Rational& x) -> Rational { return x < 0 ? x + 1 : x; };
    Rational tau = sgn(xa) == sgn(xc) ? toledo_triangle_pu11(xa, xa, xc) : toledo_triangle_turns(turn(xa), turn(xa), turn(xc));
    Rational tl = tau * l;
    if (tl.get_den() != 1 || abs(tau) >= 1) throw std::logic_error("four_point_toledo: value outside (-1,1) cap Z/l");
    return tau;
}

PuncturedTorusRep punctured_torus_rep(int l, const Embedding& e, int i)
{
    check_args(l, e, i);
    int r = (l - 1) / 2;
    PuncturedTorusRep T;
    T.l = l;
    T.i = i;
    T.e = e;
    for (int j = 0; j < r; ++j)
        if (i <= 2 * j && 2 * j < 2 * r - i) T.window.push_back(j);
    int d = T.dim();
    if (d != r - i) throw std::logic_error("punctured_torus_rep: window dimension is not r - i");
    CycloNum q = CycloNum::zeta(l);
    auto u = [&](int m) {
        if (m == 0) return CycloNum::zero(l);
        return qn(l, i + m + 1) * qn(l, m - i) / (qn(l, m) * qn(l, m + 1));
    };
    T.Cd = CMat(d, d);
    for (int a = 0; a < d; ++a) {
        int j = T.window[a];
        if (a + 1 < d) T.Cd(a + 1, a) = CycloNum(1);
        T.Cd(a, a) = u(2 * j + 1) + u(2 * j) - CycloNum(1);
        if (a > 0) T.Cd(a - 1, a) = u(2 * j) * u(2 * j - 1);
    }
    std::vector<CycloNum> c(r), rr(r);
    for (int j = 0; j < r; ++j) {
        c[j] = pow(q, 4 * j + 2) + CycloNum(1) + pow(q, -4 * j - 2);
        rr[j] = pow(q, 2L * j * (j + 1));
    }
    for (int a = 0; a < r; ++a)
        for (int b = a + 1; b < r; ++b)
            if (c[a] == c[b]) throw std::domain_error("punctured_torus_rep: curve-operator eigenvalues collide");
    std::vector<CycloNum> cg, tg;
    for (int j : T.window) {
        cg.push_back(c[j]);
        tg.push_back(rr[j]);
    }
    T.Cg = CMat::diag(cg);
    T.Tg = CMat::diag(tg);
    CMat I = CMat::identity(d);
    T.Td = CMat(d, d);
    for (int a = 0; a < r; ++a) {
        CMat P = I;
        for (int b = 0; b < r; ++b)
            if (b != a) P = P * ((T.Cd - I * c[b]) * inv(c[a] - c[b]));
        T.Td += P * rr[a];
    }
    int j0 = T.window[0];
    int si = so3_algebra(l, e).basis_sign(i);
    CycloNum base = so3_theta(l, 2 * j0, 2 * j0, 2 * i) * CycloNum(si) / qn(l, 2 * j0 + 1);
    T.norms.push_back(CycloNum(sign_real(base, e)));
    for (int a = 1; a < d; ++a) {
        int j = T.window[a - 1];
        T.norms.push_back(T.norms.back() * u(2 * j + 2) * u(2 * j + 1));
    }
    T.h = CMat::diag(T.norms);
    return T;
}

Rational tau_11(const PuncturedTorusRep& T)
{
    if (T.i == 0) return 0;
    CMat I = CMat::identity(T.dim());
    if (det(I - T.Tg).is_zero()) throw std::domain_error("tau_11: 1 - T_gamma is singular");
    CMat A = inverse(T.Tg);
    CMat B = inverse(T.Td * T.Tg);
    return toledo_triangle_meyer(A, B, T.h, T.e);
}

Rational tau_11(int l, const Embedding& e, int i)
{
    if (i == 0) return 0;
    return tau_11(punctured_torus_rep(l, e, i));
}

}  // namespace toledo
