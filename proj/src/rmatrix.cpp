#include "toledo/rmatrix.hpp"

#include "toledo/qrep.hpp"

#include <stdexcept>

namespace toledo {

namespace {

QVec matvec(const QMat& M, const QVec& v)
{
    QVec out(M.rows(), Rational(0));
    for (size_t i = 0; i < M.rows(); ++i)
        for (size_t j = 0; j < M.cols(); ++j)
            if (v[j] != 0) out[i] += M(i, j) * v[j];
    return out;
}

QVec prod(const FrobeniusAlgebra& V, std::initializer_list<const QVec*> vs)
{
    QVec p = V.unit();
    for (const QVec* v : vs) p = V.product(p, *v);
    return p;
}

Integer disc(const FrobeniusAlgebra& V) { return det(V.trace_gram()).get_num(); }

}  // namespace

Integer r1_denominator_bound(const FrobeniusAlgebra& V)
{
    Integer d = disc(V);
    return Integer(6 * V.field_order()) * d * d;
}

R1Invariants check_r1(const FrobeniusAlgebra& V, const R1Matrix& R)
{
    R1Invariants out;
    int r = V.rank();
    QMat eR = V.eta_matrix() * R.R;
    out.self_adjoint = eR == eR.transpose();
    out.orthogonal = true;
    for (int k = 0; k < r; ++k)
        if ((R.Rprime * V.left_mult(k)).trace() != 0) out.orthogonal = false;
    out.decomposition = R.R == V.mult_matrix(R.r1) + R.Rprime;
    out.bound = r1_denominator_bound(V);
    out.denominators = true;
    for (const auto& x : R.R.data())
        if (!mpz_divisible_p(out.bound.get_mpz_t(), x.get_den_mpz_t())) out.denominators = false;
    return out;
}

Rational tau_from_r1_04(const FrobeniusAlgebra& V, const QMat& R, const std::vector<QVec>& v)
{
    if (v.size() != 4) throw std::invalid_argument("tau_from_r1_04: needs four colors");
    Rational t = 0;
    for (int i = 0; i < 4; ++i) {
        QVec rest = V.unit();
        for (int j = 0; j < 4; ++j)
            if (j != i) rest = V.product(rest, v[j]);
        t += V.eta(matvec(R, v[i]), rest);
    }
    t -= V.eta(prod(V, {&v[0], &v[1], &v[2], &v[3]}), matvec(R, V.unit()));
    const int pairs[3][4] = {{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}};
    for (const auto& p : pairs)
        t -= V.eta(matvec(R, V.product(v[p[0]], v[p[1]])), V.product(v[p[2]], v[p[3]]));
    return t;
}

Rational tau_from_r1_11(const FrobeniusAlgebra& V, const QMat& R, const QVec& v)
{
    const QVec& Om = V.omega_element();
    Rational t = (V.eta(Om, matvec(R, v)) - V.eta(Om, V.product(v, matvec(R, V.unit())))) / 24;
    return t - (R * V.mult_matrix(v)).trace() / 2;
}

R1Input r1_input(int l, long exponent)
{
    Embedding e(l, exponent);
    int r = (l - 1) / 2;
    R1Input in;
    for (int i = 0; i < r; ++i) {
        in.tau04_pivot.push_back(four_point_toledo(l, e, i, i));
        in.tau11.push_back(tau_11(l, e, i));
    }
    return in;
}

bool pivot_has_simple_spectrum(const FrobeniusAlgebra& V)
{
    int r = V.rank();
    QMat K(r, r);
    QVec p = V.unit();
    for (int k = 0; k < r; ++k) {
        K.set_col(k, p);
        p = V.product(p, V.basis(r - 1));
    }
    return static_cast<int>(rank(K)) == r;
}

// Constraint values of R' : eta R' symmetric, tr(R' M_{e_k}) = 0, and the
// entries of [[R', M_w], M_w] - M_{[[R', M_w], M_w](1)}.
static QVec constraints(const FrobeniusAlgebra& V, const QMat& Rp)
{
    int r = V.rank();
    QVec out;
    QMat eR = V.eta_matrix() * Rp;
    for (int a = 0; a < r; ++a)
        for (int b = a + 1; b < r; ++b) out.push_back(eR(a, b) - eR(b, a));
    for (int k = 0; k < r; ++k) out.push_back((Rp * V.left_mult(k)).trace());
    const QMat& W = V.left_mult(r - 1);
    QMat C = Rp * W - W * Rp;
    QMat D = C * W - W * C;
    QMat L = D - V.mult_matrix(D.col(0));
    for (int a = 0; a < r; ++a)
        for (int b = 0; b < r; ++b) out.push_back(L(a, b));
    return out;
}

R1Matrix solve_r1(const FrobeniusAlgebra& V, const R1Input& in)
{
    int r = V.rank();
    if (static_cast<int>(in.tau04_pivot.size()) != r || static_cast<int>(in.tau11.size()) != r)
        throw std::invalid_argument("solve_r1: input tables must have one entry per basis color");
    if (!pivot_has_simple_spectrum(V)) throw R1SolveError("solve_r1: pivot multiplication has repeated eigenvalues", {});

    int nu = r * r;
    size_t neq = constraints(V, QMat(r, r)).size();
    QMat A(neq, nu + 1);
    for (int u = 0; u < nu; ++u) {
        QMat E(r, r);
        E(u / r, u % r) = 1;
        QVec c = constraints(V, E);
        for (size_t k = 0; k < neq; ++k) A(k, u) = c[k];
    }
    // right-hand side: A_w = diag(tau04(w, w, e_i, e_i) eps_i) sits in the last r*r rows
    size_t off = neq - nu;
    for (int i = 0; i < r; ++i) A(off + i * r + i, nu) = in.tau04_pivot[i] * V.epsilon(i);

    auto piv = rref(A);
    std::vector<Rational> resid;
    for (size_t k = 0; k < piv.size(); ++k)
        if (piv[k] == static_cast<size_t>(nu)) resid.push_back(A(k, nu));
    if (!resid.empty()) throw R1SolveError("solve_r1: input tables are not realizable (inconsistent system)", resid);
    if (static_cast<int>(piv.size()) < nu) throw R1SolveError("solve_r1: singular system", {});

    R1Matrix out;
    out.Rprime = QMat(r, r);
    for (int u = 0; u < nu; ++u) out.Rprime(u / r, u % r) = A(u, nu);

    QMat G = V.trace_gram();
    QMat rhs(r, 1);
    for (int k = 0; k < r; ++k) {
        QVec x = matvec(out.Rprime, V.basis(k));
        QVec y = V.product(V.basis(k), out.Rprime.col(0));
        for (int a = 0; a < r; ++a) x[a] -= y[a];
        rhs(k, 0) = 2 * (V.trace_V(x) / 24 - in.tau11[k]);
    }
    out.r1 = solve(G.transpose(), rhs).col(0);
    out.R = V.mult_matrix(out.r1) + out.Rprime;

    auto inv = check_r1(V, out);
    if (!inv.self_adjoint || !inv.orthogonal || !inv.decomposition)
        throw std::logic_error("solve_r1: solution violates the R_1 invariants");
    return out;
}

R1Matrix solve_r1(int l, long exponent)
{
    return solve_r1(build_algebra(Family::SO3, l, exponent), r1_input(l, exponent));
}

QMat r_entries(const FrobeniusAlgebra& V, const QMat& R) { return R * inverse(V.eta_matrix()); }

H2Class degree2_class(const FrobeniusAlgebra& V, const QMat& R, int g, int n, const std::vector<QVec>& colors)
{
    if (!is_stable(g, n)) throw std::invalid_argument("degree2_class: unstable (g,n)");
    if (static_cast<int>(colors.size()) != n) throw std::invalid_argument("degree2_class: need one color per point");
    int r = V.rank();
    H2Class c(g, n);
    for (int i = 0; i < n; ++i) {
        auto v = colors;
        v[i] = matvec(R, colors[i]);
        c.add(psi_label(i + 1), tft_value(V, g, v));
    }
    {
        auto v = colors;
        v.push_back(matvec(R, V.unit()));
        c.add("kappa_1", -tft_value(V, g, v));
    }
    QMat rr = r_entries(V, R);
    if (g >= 1) {
        Rational s = 0;
        for (int a = 0; a < r; ++a)
            for (int b = 0; b < r; ++b) {
                if (rr(a, b) == 0) continue;
                auto v = colors;
                v.push_back(V.basis(a));
                v.push_back(V.basis(b));
                s += rr(a, b) * tft_value(V, g - 1, v);
            }
        c.add("delta_irr", -s);
    }
    for (const auto& d : separating_divisors(g, n)) {
        std::vector<QVec> left, right;
        std::vector<bool> inA(n, false);
        for (int p : d.points) inA[p - 1] = true;
        for (int p = 0; p < n; ++p) (inA[p] ? left : right).push_back(colors[p]);
        std::vector<Rational> sl(r), sr(r);
        for (int a = 0; a < r; ++a) {
            auto x = left, y = right;
            x.push_back(V.basis(a));
            y.push_back(V.basis(a));
            sl[a] = tft_value(V, d.a, x);
            sr[a] = tft_value(V, g - d.a, y);
        }
        Rational s = 0;
        for (int a = 0; a < r; ++a)
            for (int b = 0; b < r; ++b) s += rr(a, b) * sl[a] * sr[b];
        c.add(d.label, -s);
    }
    return c;
}

std::vector<CrosscheckRow> closed_formula_crosscheck(int gmax, int nmax)
{
    FrobeniusAlgebra V = build_algebra(Family::SO3, 5, 1);
    FrobeniusAlgebra U = build_algebra(Family::SO3, 5, 2);
    QMat R = solve_r1(5, 1).R;
    auto sg = [&](int g, int n) { return g < 0 ? Rational(0) : tft_value(V, g, std::vector<int>(n, 1)); };
    auto dd = [&](int g, int n) { return g < 0 ? Rational(0) : tft_value(U, g, std::vector<int>(n, 1)); };

    std::vector<std::pair<int, int>> cells;
    for (int g = 0; g <= gmax; ++g)
        for (int n = 0; n <= nmax; ++n)
            if (is_stable(g, n)) cells.emplace_back(g, n);
    std::vector<CrosscheckRow> rows(cells.size());

#pragma omp parallel for schedule(dynamic)
    for (size_t idx = 0; idx < cells.size(); ++idx) {
        auto [g, n] = cells[idx];
        CrosscheckRow row;
        row.g = g;
        row.n = n;
        Rational s = sg(g, n), d = dd(g, n);
        row.sigma = s;

        H2Class X = degree2_class(V, R, g, n, std::vector<QVec>(n, V.basis(1)));
        H2Class Xt = to_kappa_tilde_basis(X);
        row.kt_closed = Xt.get("kappa_tilde_1");
        row.psi_closed = n ? Xt.get("psi_1") : Rational(0);
        row.irr_closed = g ? Xt.get("delta_irr") : Rational(0);
        Rational a = -Rational(23, 270) * s - Rational(1, 27) * sg(g, n + 1);
        Rational b = -Rational(2, 15) * s;
        Rational c = g ? Rational(1, 90) * sg(g - 1, n + 1) : Rational(0);
        row.closed_formula_match = row.kt_closed == a && row.irr_closed == c;
        for (int i = 1; i <= n; ++i)
            if (Xt.get(psi_label(i)) != b) row.closed_formula_match = false;

        // relation side: mu_x = sigma_x / 3 + (d_x / 5) sigma / d
        auto mu = [&](const Rational& sx, const Rational& dx) -> Rational { return sx / 3 + dx / 5 * s / d; };
        H2Class P(g, n);
        row.psi_pipeline = -Rational(2, 15) * s;
        for (int i = 1; i <= n; ++i) P.add(psi_label(i), row.psi_pipeline);
        if (g >= 1) {
            row.irr_pipeline = -Rational(2, 15) * sg(g - 1, n + 2);
            P.add("delta_irr", row.irr_pipeline);
            Rational mu_irr = mu(sg(g - 1, n + 2), dd(g - 1, n + 2));
            Rational mu_1 = mu(sg(1, 1) * sg(g - 1, n + 1), dd(1, 1) * dd(g - 1, n + 1));
            Rational tC2 = 2 * sg(g - 1, n) - 2 * dd(g - 1, n) * s / d;
            row.lambda_pipeline = 12 * mu_irr - mu_1 - tC2;
            P.add("lambda_1", row.lambda_pipeline);
            row.lambda_literal = Rational(92, 15) * s + Rational(4, 3) * sg(g - 1, n);
            row.lambda_second = -Rational(46, 45) * s - Rational(4, 9) * sg(g, n + 1);
        }
        for (const auto& dv : separating_divisors(g, n)) {
            int k = static_cast<int>(dv.points.size());
            P.add(dv.label, -Rational(2, 15) * sg(dv.a, k + 1) * sg(g - dv.a, n - k + 1));
        }
        H2Class L = to_lambda_basis(X);
        if (g == 0) L.add("lambda_1", -L.get("lambda_1"));
        row.class_match = L == P;
        row.literal_match = g >= 1 && row.lambda_literal == row.lambda_pipeline;
        row.second_match = g >= 1 && row.lambda_second == row.lambda_pipeline;
        rows[idx] = row;
    }
    return rows;
}

}  // namespace toledo
