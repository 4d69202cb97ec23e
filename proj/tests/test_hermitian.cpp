#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "toledo/hermitian.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <random>

using namespace toledo;

namespace {

Eigen::MatrixXcd to_eigen(const CMat& m, const Embedding& e)
{
    Eigen::MatrixXcd x(m.rows(), m.cols());
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j) x(i, j) = to_complex(m(i, j), e);
    return x;
}

CMat random_hermitian(std::mt19937& rng, int d, int N)
{
    std::uniform_int_distribution<int> c(-3, 3), k(0, N - 1);
    CMat H(d, d);
    for (int i = 0; i < d; ++i) {
        CycloNum a = CycloNum(c(rng)) * CycloNum::zeta(N, k(rng));
        H(i, i) = a + conjugate(a);
        for (int j = i + 1; j < d; ++j) {
            H(i, j) = CycloNum(c(rng)) * CycloNum::zeta(N, k(rng)) + CycloNum(c(rng));
            H(j, i) = conjugate(H(i, j));
        }
    }
    return H;
}

// Finite-order isometry of h = diag(1, .., 1, -1, .., -1): a diagonal matrix
// of 12th roots of unity conjugated by a rational boost.
struct Model {
    CMat h, A, B;
};

CMat boost(int d, int i, int j, const Rational& a, const Rational& b)
{
    CMat g = CMat::identity(d);
    g(i, i) = CycloNum(a);
    g(j, j) = CycloNum(a);
    g(i, j) = CycloNum(b);
    g(j, i) = CycloNum(b);
    return g;
}

CMat random_finite_order(std::mt19937& rng, int p, int q)
{
    int d = p + q;
    std::uniform_int_distribution<int> k(0, 11);
    std::vector<CycloNum> diag;
    for (int i = 0; i < d; ++i) diag.push_back(CycloNum::zeta(12, k(rng)));
    CMat D = CMat::diag(diag);
    if (p == 0 || q == 0) return D;
    std::uniform_int_distribution<int> pi(0, p - 1), qi(p, d - 1), s(0, 2);
    // a^2 - b^2 = 1
    const Rational ab[3][2] = {{Rational(5, 4), Rational(3, 4)}, {Rational(5, 3), Rational(4, 3)},
                               {Rational(13, 12), Rational(5, 12)}};
    int w = s(rng);
    CMat g = boost(d, pi(rng), qi(rng), ab[w][0], ab[w][1]);
    return g * D * inverse(g);
}

CMat form(int p, int q)
{
    std::vector<CycloNum> d;
    for (int i = 0; i < p; ++i) d.push_back(CycloNum(1));
    for (int i = 0; i < q; ++i) d.push_back(CycloNum(-1));
    return CMat::diag(d);
}

CMat direct_sum(const CMat& a, const CMat& b)
{
    CMat m(a.rows() + b.rows(), a.cols() + b.cols());
    m.set_block(0, 0, a);
    m.set_block(a.rows(), a.cols(), b);
    return m;
}

}  // namespace

TEST_CASE("Descartes signature against floating-point eigenvalues")
{
    std::mt19937 rng(2024);
    int agree = 0, total = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        int d = 1 + trial % 5;
        int N = std::vector<int>{3, 4, 5, 7, 8}[trial % 5];
        CMat H = random_hermitian(rng, d, N);
        Embedding e(N, 1);
        auto s = signature(H, e);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(to_eigen(H, e));
        int p = 0, q = 0, z = 0;
        for (int i = 0; i < d; ++i) {
            double v = es.eigenvalues()(i);
            if (std::abs(v) < 1e-8) ++z;
            else (v > 0 ? p : q)++;
        }
        ++total;
        if (s.p == p && s.q == q && s.z == z) ++agree;
        CHECK(s.p + s.q + s.z == d);
    }
    CHECK(agree == total);
}

TEST_CASE("signature of -H swaps p and q")
{
    std::mt19937 rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        CMat H = random_hermitian(rng, 4, 5);
        Embedding e(5, 2);
        auto a = signature(H, e), b = signature(H * CycloNum(-1), e);
        CHECK(a.p == b.q);
        CHECK(a.q == b.p);
        CHECK(a.z == b.z);
    }
}

TEST_CASE("non-Hermitian input is rejected")
{
    CMat M(2, 2);
    M(0, 1) = CycloNum(1);
    CHECK_THROWS(signature(M, Embedding(1, 1)));
}

TEST_CASE("U(1) Meyer closed formula on 30th roots of unity")
{
    Embedding e(30, 1);
    CMat h = CMat::identity(1);
    const double pi = std::acos(-1.0);
    for (int a = 0; a < 30; ++a)
        for (int b = 0; b < 30; ++b) {
            CMat A = CMat::diag({CycloNum::zeta(30, a)}), B = CMat::diag({CycloNum::zeta(30, b)});
            int want = 0;
            if (a % 30 && b % 30 && (a + b) % 30) {
                double v = std::sin(pi * (a + b) / 30) * std::sin(pi * a / 30) * std::sin(pi * b / 30);
                want = v > 0 ? 1 : -1;
            }
            CAPTURE(a);
            CAPTURE(b);
            CHECK(meyer_cocycle(A, B, h, e) == want);
        }
}

TEST_CASE("Meyer cocycle identity and block additivity")
{
    std::mt19937 rng(99);
    Embedding e(12, 1);
    int nonzero = 0;
    for (int trial = 0; trial < 100; ++trial) {
        int p = 1 + trial % 2, q = trial % 3 == 0 ? 0 : 1;
        CMat h = form(p, q);
        CMat A = random_finite_order(rng, p, q), B = random_finite_order(rng, p, q), C = random_finite_order(rng, p, q);
        REQUIRE(is_isometry(A, h));
        int lhs = meyer_cocycle(B, C, h, e) - meyer_cocycle(A * B, C, h, e) + meyer_cocycle(A, B * C, h, e) -
                  meyer_cocycle(A, B, h, e);
        CHECK(lhs == 0);
        if (meyer_cocycle(A, B, h, e) != 0) ++nonzero;

        CMat h2 = form(1, 1);
        CMat A2 = random_finite_order(rng, 1, 1), B2 = random_finite_order(rng, 1, 1);
        int sum = meyer_cocycle(A, B, h, e) + meyer_cocycle(A2, B2, h2, e);
        CHECK(meyer_cocycle(direct_sum(A, A2), direct_sum(B, B2), direct_sum(h, h2), e) == sum);
    }
    CHECK(nonzero > 20);
}

TEST_CASE("direct, kernel and alternative routes agree")
{
    std::mt19937 rng(3);
    Embedding e(12, 5);
    int compared = 0;
    for (int trial = 0; trial < 60; ++trial) {
        CMat h = form(1, 1);
        CMat A = random_finite_order(rng, 1, 1), B = random_finite_order(rng, 1, 1);
        if (det(CMat::identity(2) - A).is_zero()) continue;
        int d = meyer_cocycle_direct(A, B, h, e);
        CHECK(meyer_cocycle_kernel(A, B, h, e) == d);
        CHECK(meyer_cocycle_alt(A, B, h, e) == d);
        ++compared;
    }
    CHECK(compared > 20);
}

TEST_CASE("triangle group (5,5,5) in PU(1,1)")
{
    CHECK(toledo_triangle_pu11(Rational(-1, 5), Rational(-1, 5), Rational(-1, 5)) == Rational(-2, 5));
    CHECK(toledo_triangle_pu11(Rational(1, 7), Rational(1, 3), Rational(1, 2) - Rational(1, 100)) > 0);
    CHECK_THROWS(toledo_triangle_pu11(Rational(1, 5), Rational(-1, 5), Rational(1, 5)));
    CHECK_THROWS(toledo_triangle_pu11(Rational(1, 2), Rational(1, 5), Rational(1, 5)));
}

TEST_CASE("commuting elliptic pair has zero Toledo value")
{
    // shared fixed point, so the image lies in a compact subgroup
    Embedding e(12, 1);
    CMat h = form(1, 1);
    CMat g = boost(2, 0, 1, Rational(5, 4), Rational(3, 4));
    for (int a = 1; a < 12; ++a)
        for (int b = 1; b < 12; ++b) {
            CMat A = g * CMat::diag({CycloNum::zeta(12, a), CycloNum(1)}) * inverse(g);
            CMat B = g * CMat::diag({CycloNum::zeta(12, b), CycloNum(1)}) * inverse(g);
            CMat C = inverse(A * B);
            Rational xa = pu11_angle(A, h, e), xb = pu11_angle(B, h, e), xc = pu11_angle(C, h, e);
            Rational t = toledo_triangle_meyer(A, B, h, e);
            CHECK(t == 0);
            CHECK(centered_angle(xa + xb + xc) == 0);
        }
}

TEST_CASE("turn-based triangle formula extends the angle formula")
{
    for (int a = 1; a < 12; ++a)
        for (int b = 1; b < 12; ++b)
            for (int c = 1; c < 12; ++c) {
                Rational x(a, 12), y(b, 12), z(c, 12);
                x.canonicalize();
                y.canonicalize();
                z.canonicalize();
                Rational s = x + y + z;
                if (s >= 1 && s <= 2) {
                    CHECK_THROWS(toledo_triangle_turns(x, y, z));
                    continue;
                }
                Rational t = toledo_triangle_turns(x, y, z);
                CHECK(abs(t) < 1);
                // mirror image
                CHECK(toledo_triangle_turns(1 - x, 1 - y, 1 - z) == -t);
                bool acute = (s < 1 && x < Rational(1, 2) && y < Rational(1, 2) && z < Rational(1, 2)) ||
                             (s > 2 && x > Rational(1, 2) && y > Rational(1, 2) && z > Rational(1, 2));
                if (acute) CHECK(toledo_triangle_pu11(centered_angle(x), centered_angle(y), centered_angle(z)) == t);
            }
}

TEST_CASE("G is odd under inversion when 1 is not an eigenvalue")
{
    std::mt19937 rng(8);
    Embedding e(12, 1);
    int tested = 0;
    for (int trial = 0; trial < 60; ++trial) {
        int p = 1 + trial % 2, q = 1;
        CMat h = form(p, q);
        CMat U = random_finite_order(rng, p, q);
        if (det(CMat::identity(p + q) - U).is_zero()) continue;
        CHECK(g_function(inverse(U), h, e) == -g_function(U, h, e));
        ++tested;
    }
    CHECK(tested > 10);
}

TEST_CASE("conjugation invariance")
{
    std::mt19937 rng(17);
    Embedding e(12, 1);
    CMat h = form(1, 1);
    for (int trial = 0; trial < 30; ++trial) {
        CMat A = random_finite_order(rng, 1, 1), B = random_finite_order(rng, 1, 1);
        CMat gg = random_finite_order(rng, 1, 1);
        CHECK(meyer_cocycle(gg * A * inverse(gg), gg * B * inverse(gg), h, e) == meyer_cocycle(A, B, h, e));
    }
}

TEST_CASE("G-function and eigen split")
{
    Embedding e(5, 1);
    CMat h = form(1, 1);
    CMat U = CMat::diag({CycloNum::zeta(5), CycloNum::zeta(5, 3)});
    auto sp = eigen_split(U, h, e);
    REQUIRE(sp.size() == 2);
    // f(1/5) - f(3/5) = 3/5 - (-1/5)
    CHECK(g_function(U, h, e) == Rational(4, 5));
    CHECK(f_angle(0) == 0);
    CHECK(f_angle(Rational(1, 2)) == 0);
    CHECK_THROWS(f_angle(1));
    CHECK(centered_angle(Rational(3, 4)) == Rational(-1, 4));
    CHECK(centered_angle(Rational(1, 2)) == Rational(1, 2));
    CHECK(scalar_power_order(U, 100) == 5);
}
