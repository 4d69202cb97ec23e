// One PASS/FAIL line per acceptance criterion.  Exit status is nonzero on any
// failure; --allow-documented tolerates the known reference-matrix mismatch in
// criterion 3 (the line still reads FAIL).
#include "toledo/eulerchi.hpp"
#include "toledo/hermitian.hpp"
#include "toledo/qrep.hpp"
#include "toledo/rmatrix.hpp"
#include "toledo/tables.hpp"
#include "toledo/uniformization.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <cstring>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>

using namespace toledo;

namespace {

struct Outcome {
    bool pass = true;
    bool documented = false;  // failure recorded as a known mismatch
    std::string detail;
};

QMat qmat(int den, std::vector<long> e)
{
    size_t n = e.size() == 4 ? 2 : 3;
    std::vector<Rational> d;
    for (long x : e) d.push_back(Rational(x) / den);
    return QMat(n, n, d);
}

std::vector<long> exponents(int l)
{
    std::vector<long> ks;
    for (long k = 1; k < l; ++k)
        if (std::gcd(k, static_cast<long>(l)) == 1) ks.push_back(k);
    return ks;
}

Outcome fibonacci()
{
    const char* want[4][7] = {{"1|0", "0|0", "0|1", "1|0", "1|1", "1|2", "3|2"},
                              {"2|0", "0|1", "1|2", "3|1", "3|4", "5|6", "10|8"},
                              {"4|1", "1|4", "5|5", "9|6", "11|14", "20|20", "34|31"},
                              {"9|6", "7|13", "19|16", "29|26", "42|48", "74|71", "119|116"}};
    Outcome o;
    int ok = 0, total = 0;
    for (const auto& c : signature_table(build_algebra(Family::SO3, 5, 1), 3, 6)) {
        ++total;
        if (rational_string(c.p) + "|" + rational_string(c.q) == want[c.g][c.n]) ++ok;
    }
    o.pass = ok == 28 && total == 28;
    o.detail = std::to_string(ok) + "/28 entries";
    return o;
}

Outcome level7()
{
    const std::vector<std::vector<Rational>> sigma = {{1, 0, 0, -1, 2, 3, 0, -1}, {1, -2, 0, 1, 0, 3, -2, -1},
                                                      {3, 2, 2, 1, 2, 3, 2, 1}};
    const Rational z = 0;
    const std::vector<std::vector<Rational>> tau = {
        {Rational(2, 7), Rational(-4, 7), Rational(2, 7), z, z, z, Rational(-1, 42), z},
        {Rational(2, 7), z, Rational(-2, 7), z, Rational(4, 7), z, z, z},
        {z, z, z, z, z, z, z, z}};
    auto rows = level7_rows(Exec::Parallel);
    int ok = 0;
    for (size_t i = 0; i < rows.size() && i < 8; ++i)
        for (int k = 0; k < 3; ++k) ok += (rows[i].sigma[k] == sigma[k][i]) + (rows[i].tau[k] == tau[k][i]);
    return {ok == 48, false, std::to_string(ok) + "/48 values"};
}

Outcome r1_matrices()
{
    Outcome o;
    std::ostringstream d;
    bool l5 = solve_r1(5, 1).R == qmat(270, {23, -10, 10, -23});
    bool q1 = solve_r1(7, 1).R == qmat(22218, {1373, 1425, -1635, 1425, 59, -1722, 1635, 1722, -1432});
    bool q2 = solve_r1(7, 2).R == qmat(22218, {-3615, 1027, 1973, -1027, 3719, -36, 1973, 36, -104});
    bool bound = true;
    for (auto [l, k] : std::vector<std::pair<int, long>>{{5, 1}, {5, 2}, {7, 1}, {7, 2}, {7, 3}})
        bound = bound && check_r1(build_algebra(Family::SO3, l, k), solve_r1(l, k)).denominators;
    d << "level5 " << (l5 ? "ok" : "differs") << ", q1 " << (q1 ? "ok" : "differs") << ", q2 "
      << (q2 ? "ok" : "differs from the reference matrix (documented: reference matrix needs tau04(w,w,e1,e1)=+2/7)")
      << ", denominator bound " << (bound ? "ok" : "violated");
    o.pass = l5 && q1 && q2 && bound;
    o.documented = l5 && q1 && !q2 && bound;
    o.detail = d.str();
    return o;
}

Outcome round_trip()
{
    int checks = 0, bad = 0;
    std::mt19937 rng(4);
    std::uniform_int_distribution<int> u(-9, 9);
    for (auto [l, k] : std::vector<std::pair<int, long>>{{5, 1}, {5, 2}, {7, 1}, {7, 2}, {7, 3}}) {
        FrobeniusAlgebra V = build_algebra(Family::SO3, l, k);
        R1Input in = r1_input(l, k);
        QMat R = solve_r1(V, in).R;
        int r = V.rank();
        QVec w = V.basis(r - 1);
        QVec v(r);
        for (auto& x : v) x = Rational(u(rng)) / 11;
        QMat R2 = R + V.mult_matrix(v);
        for (int i = 0; i < r; ++i) {
            std::vector<QVec> c = {w, w, V.basis(i), V.basis(i)};
            bad += tau_from_r1_04(V, R, c) != in.tau04_pivot[i];
            bad += tau_from_r1_11(V, R, V.basis(i)) != in.tau11[i];
            for (int a = 0; a < r; ++a)
                for (int b = 0; b < r; ++b) {
                    std::vector<QVec> c2 = {V.basis(i), V.basis(a), V.basis(b), w};
                    bad += tau_from_r1_04(V, R2, c2) != tau_from_r1_04(V, R, c2);
                    ++checks;
                }
            checks += 2;
        }
    }
    return {bad == 0, false, std::to_string(checks - bad) + "/" + std::to_string(checks) + " identities"};
}

Outcome uniformization()
{
    Outcome o;
    std::ostringstream d;
    for (auto [g, n] : std::vector<std::pair<int, int>>{{0, 5}, {1, 2}, {1, 3}, {2, 1}}) {
        auto rep = uniformization_check(g, n);
        o.pass = o.pass && rep.passed();
        d << "(" << g << "," << n << ") " << (rep.passed() ? "ok" : "FAIL") << " ";
        for (const auto& x : rep.extra)
            if (!x.pass) d << "[" << x.name << " = " << rational_string(x.value) << "] ";
    }
    o.detail = d.str();
    return o;
}

Outcome crosscheck()
{
    auto rows = closed_formula_crosscheck(4, 4);
    int closed = 0, cls = 0, second = 0, literal = 0, genus_pos = 0;
    for (const auto& r : rows) {
        closed += r.closed_formula_match;
        cls += r.class_match;
        if (r.g >= 1) {
            ++genus_pos;
            second += r.second_match;
            literal += r.literal_match;
        }
    }
    int n = static_cast<int>(rows.size());
    std::ostringstream d;
    d << "closed formulas " << closed << "/" << n << ", relation pipeline " << cls << "/" << n
      << ", a = -(46/45)sigma - (4/9)sigma_{g,n+1} " << second << "/" << genus_pos << "; the (92/15) literal matches "
      << literal << "/" << genus_pos << " (only where sigma = 0)";
    return {closed == n && cls == n && second == genus_pos && n == 21, false, d.str()};
}

Outcome euler()
{
    bool ok = chi_bar(0, 5).coeffs == std::vector<Rational>{2, -10, 15} && chi_twisted(0, 5, 5) == Rational(3, 5);
    for (int l = 1; l <= 10; ++l) ok = ok && chi_twisted(1, 1, l) == Rational(1, 2 * l) - Rational(1, 12);
    return {ok, false, "chi_bar(0,5) = " + chi_bar(0, 5).to_string() + ", chi_twisted(0,5,5) = " +
                           rational_string(chi_twisted(0, 5, 5))};
}

// --- property suites ---

bool associative(const FrobeniusAlgebra& V)
{
    int r = V.rank();
    for (int i = 0; i < r; ++i) {
        if (V.product(V.unit(), V.basis(i)) != V.basis(i)) return false;
        for (int j = 0; j < r; ++j)
            for (int k = 0; k < r; ++k)
                if (V.product(V.product(V.basis(i), V.basis(j)), V.basis(k)) !=
                    V.product(V.basis(i), V.product(V.basis(j), V.basis(k))))
                    return false;
    }
    return true;
}

CMat form11(int p, int q)
{
    std::vector<CycloNum> d(p, CycloNum(1));
    d.insert(d.end(), q, CycloNum(-1));
    return CMat::diag(d);
}

CMat finite_order(std::mt19937& rng, int p, int q)
{
    int d = p + q;
    std::uniform_int_distribution<int> k(0, 11);
    std::vector<CycloNum> diag;
    for (int i = 0; i < d; ++i) diag.push_back(CycloNum::zeta(12, k(rng)));
    CMat D = CMat::diag(diag);
    if (!p || !q) return D;
    std::uniform_int_distribution<int> pi(0, p - 1), qi(p, d - 1);
    int a = pi(rng), b = qi(rng);
    CMat g = CMat::identity(d);
    g(a, a) = g(b, b) = CycloNum(Rational(5, 4));
    g(a, b) = g(b, a) = CycloNum(Rational(3, 4));
    return g * D * inverse(g);
}

CMat direct_sum(const CMat& a, const CMat& b)
{
    CMat m(a.rows() + b.rows(), a.cols() + b.cols());
    m.set_block(0, 0, a);
    m.set_block(a.rows(), a.cols(), b);
    return m;
}

Outcome properties()
{
    std::ostringstream d;
    bool ok = true;

    int algebras = 0, alg_ok = 0;
    for (int l = 3; l <= 25; l += 2)
        for (long k : exponents(l)) {
            auto V = build_algebra(Family::SO3, l, k);
            ++algebras;
            alg_ok += associative(V) && is_semisimple(V).determinant != 0;
        }
    for (int r = 2; r <= 12; ++r)
        for (long k : {1L, 4L * r - 1}) {
            auto V = build_algebra(Family::SU2, r, k);
            ++algebras;
            alg_ok += associative(V) && is_semisimple(V).determinant != 0;
        }
    ok = ok && alg_ok == algebras;
    d << "algebras " << alg_ok << "/" << algebras;

    int glued = 0;
    bool glue_ok = true;
    for (auto [f, lev, k] : std::vector<std::tuple<Family, int, long>>{
             {Family::SO3, 5, 1}, {Family::SO3, 7, 2}, {Family::SO3, 9, 1}, {Family::SU2, 4, 1}}) {
        auto rep = gluing_checks(build_algebra(f, lev, k), 50, 3 + lev);
        glue_ok = glue_ok && rep.passed;
        glued += rep.checked;
    }
    ok = ok && glue_ok && glued >= 200;
    d << ", gluing " << (glue_ok ? glued : 0) << "/" << glued;

    std::mt19937 rng(99);
    Embedding e12(12, 1);
    int cocycle_ok = 0;
    for (int t = 0; t < 100; ++t) {
        int p = 1 + t % 2, q = t % 3 == 0 ? 0 : 1;
        CMat h = form11(p, q);
        CMat A = finite_order(rng, p, q), B = finite_order(rng, p, q), C = finite_order(rng, p, q);
        bool c = meyer_cocycle(B, C, h, e12) - meyer_cocycle(A * B, C, h, e12) + meyer_cocycle(A, B * C, h, e12) -
                     meyer_cocycle(A, B, h, e12) ==
                 0;
        CMat h2 = form11(1, 1), A2 = finite_order(rng, 1, 1), B2 = finite_order(rng, 1, 1);
        bool add = meyer_cocycle(direct_sum(A, A2), direct_sum(B, B2), direct_sum(h, h2), e12) ==
                   meyer_cocycle(A, B, h, e12) + meyer_cocycle(A2, B2, h2, e12);
        cocycle_ok += c && add;
    }
    ok = ok && cocycle_ok == 100;
    d << ", cocycle+additivity " << cocycle_ok << "/100";

    int desc_ok = 0;
    std::uniform_int_distribution<int> cf(-3, 3);
    for (int t = 0; t < 1000; ++t) {
        int dim = 1 + t % 5, N = std::vector<int>{3, 4, 5, 7, 8}[t % 5];
        std::uniform_int_distribution<int> kk(0, N - 1);
        CMat H(dim, dim);
        for (int i = 0; i < dim; ++i) {
            CycloNum a = CycloNum(cf(rng)) * CycloNum::zeta(N, kk(rng));
            H(i, i) = a + conjugate(a);
            for (int j = i + 1; j < dim; ++j) {
                H(i, j) = CycloNum(cf(rng)) * CycloNum::zeta(N, kk(rng)) + CycloNum(cf(rng));
                H(j, i) = conjugate(H(i, j));
            }
        }
        Embedding e(N, 1);
        Eigen::MatrixXcd X(dim, dim);
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j) X(i, j) = to_complex(H(i, j), e);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(X);
        int p = 0, q = 0, z = 0;
        for (int i = 0; i < dim; ++i) {
            double v = es.eigenvalues()(i);
            if (std::abs(v) < 1e-8) ++z;
            else (v > 0 ? p : q)++;
        }
        auto s = signature(H, e);
        desc_ok += s.p == p && s.q == q && s.z == z;
    }
    ok = ok && desc_ok == 1000;
    d << ", Descartes vs eigenvalues " << desc_ok << "/1000";

    int u1_ok = 0;
    const double pi = std::acos(-1.0);
    Embedding e30(30, 1);
    CMat one = CMat::identity(1);
    for (int a = 0; a < 30; ++a)
        for (int b = 0; b < 30; ++b) {
            int want = 0;
            if (a && b && (a + b) % 30)
                want = std::sin(pi * (a + b) / 30) * std::sin(pi * a / 30) * std::sin(pi * b / 30) > 0 ? 1 : -1;
            u1_ok += meyer_cocycle(CMat::diag({CycloNum::zeta(30, a)}), CMat::diag({CycloNum::zeta(30, b)}), one, e30) ==
                     want;
        }
    ok = ok && u1_ok == 900;
    d << ", U(1) formula " << u1_ok << "/900";
    return {ok, false, d.str()};
}

Outcome torus_norms()
{
    int total = 0, ok = 0;
    for (int l = 5; l <= 13; l += 2)
        for (long k : exponents(l)) {
            Embedding e(l, k);
            FrobeniusAlgebra V = so3_algebra(l, e);
            for (int i = 0; i <= (l - 3) / 2; ++i) {
                Rational tr = V.trace_V(V.basis(i));
                if (tr == 0) continue;
                ++total;
                ok += Rational(signature(punctured_torus_rep(l, e, i).h, e).value()) == tr;
            }
        }
    return {ok == total, false, std::to_string(ok) + "/" + std::to_string(total) + " (l, embedding, i) triples"};
}

}  // namespace

int main(int argc, char** argv)
{
    bool allow_documented = argc > 1 && std::strcmp(argv[1], "--allow-documented") == 0;
    const std::vector<std::pair<std::string, Outcome (*)()>> criteria = {
        {"Fibonacci signature table", &fibonacci},
        {"level-7 sigma and tau values", &level7},
        {"R1 matrices", &r1_matrices},
        {"round trip and r1 independence", &round_trip},
        {"uniformization identities", &uniformization},
        {"closed-formula cross-check", &crosscheck},
        {"Euler characteristics", &euler},
        {"property suites", &properties},
        {"torus-norm calibration", &torus_norms},
    };
    int failed = 0, undocumented = 0;
    for (size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& ex) {
            o = {false, false, std::string("exception: ") + ex.what()};
        }
        std::cout << (o.pass ? "PASS" : "FAIL") << " " << i + 1 << " " << criteria[i].first << ": " << o.detail
                  << std::endl;
        if (!o.pass) {
            ++failed;
            if (!o.documented) ++undocumented;
        }
    }
    std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria pass" << std::endl;
    if (undocumented) return 1;
    return failed && !allow_documented ? 1 : 0;
}
