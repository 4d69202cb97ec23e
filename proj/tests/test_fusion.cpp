#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "toledo/fusion.hpp"

#include <cmath>
#include <numeric>

using namespace toledo;

namespace {

// discriminant of a monic cubic x^3 + b x^2 + c x + d
Rational cubic_disc(long b, long c, long d)
{
    return Rational(b * b * c * c - 4 * c * c * c - 4 * b * b * b * d - 27 * d * d + 18 * b * c * d);
}

bool associative_with_unit(const FrobeniusAlgebra& V)
{
    int r = V.rank();
    for (int i = 0; i < r; ++i) {
        if (V.product(V.unit(), V.basis(i)) != V.basis(i)) return false;
        for (int j = 0; j < r; ++j) {
            if (V.product(V.basis(i), V.basis(j)) != V.product(V.basis(j), V.basis(i))) return false;
            for (int k = 0; k < r; ++k)
                if (V.product(V.product(V.basis(i), V.basis(j)), V.basis(k)) !=
                    V.product(V.basis(i), V.product(V.basis(j), V.basis(k))))
                    return false;
        }
    }
    return true;
}

}  // namespace

TEST_CASE("level 5 algebras")
{
    auto V = build_algebra(Family::SO3, 5, 1);
    CHECK(V.rank() == 2);
    // t^2 = -t - 1
    CHECK(V.product(V.basis(1), V.basis(1)) == QVec{-1, -1});
    CHECK(V.alpha() == QVec{Rational(1, 3), Rational(-1, 3)});
    CHECK(is_semisimple(V).determinant == -3);
    auto U = build_algebra(Family::SO3, 5, 2);
    CHECK(U.epsilons() == std::vector<int>{1, 1});
    CHECK(is_semisimple(U).determinant == 5);
    CHECK(*unitary_exponent(Family::SO3, 5) == 2);
}

TEST_CASE("level 7 algebras")
{
    auto V1 = build_algebra(Family::SO3, 7, 1);
    auto V2 = build_algebra(Family::SO3, 7, 2);
    auto V3 = build_algebra(Family::SO3, 7, 3);
    CHECK(V1.epsilons() == std::vector<int>{1, 1, -1});
    CHECK(V2.epsilons() == std::vector<int>{1, -1, 1});
    CHECK(V3.epsilons() == std::vector<int>{1, 1, 1});
    // e1^2 = e0 + e1 + e2 at q1: t^3 - t - 1, disc -23; q3: t^3 - 2t^2 - t + 1, disc 49
    CHECK(V1.product(V1.basis(1), V1.basis(1)) == QVec{1, 1, 1});
    CHECK(is_semisimple(V1).determinant == cubic_disc(0, -1, -1));
    CHECK(is_semisimple(V3).determinant == cubic_disc(-2, -1, 1));
    // alpha in the e basis; with e2 = t^2 - t - 1 this is (9 + 3t - 2t^2)/23
    CHECK(V1.alpha() == QVec{Rational(7, 23), Rational(1, 23), Rational(-2, 23)});
    // with s = e1, e2 = s^2 + s + 1: (19 + 9s + 8s^2)/23
    CHECK(V2.alpha() == QVec{Rational(11, 23), Rational(1, 23), Rational(8, 23)});
    CHECK(V3.alpha() == QVec{Rational(3, 7), Rational(-1, 7), 0});
    // counit through alpha: eps(x) = tr(alpha x)
    for (const auto* V : {&V1, &V2, &V3})
        for (int i = 0; i < 3; ++i) CHECK(V->trace_V(V->product(V->alpha(), V->basis(i))) == V->counit(V->basis(i)));
}

TEST_CASE("level 7 signatures")
{
    auto V1 = build_algebra(Family::SO3, 7, 1);
    auto V2 = build_algebra(Family::SO3, 7, 2);
    auto V3 = build_algebra(Family::SO3, 7, 3);
    using C = std::vector<int>;
    const C rows[] = {{1, 1, 1, 1}, {1, 1, 1, 2}, {1, 1, 2, 2}, {1, 2, 2, 2}, {2, 2, 2, 2}};
    const int s1[] = {1, 0, 0, -1, 2}, s2[] = {1, -2, 0, 1, 0}, s3[] = {3, 2, 2, 1, 2};
    for (int k = 0; k < 5; ++k) {
        CHECK(tft_value(V1, 0, rows[k]) == s1[k]);
        CHECK(tft_value(V2, 0, rows[k]) == s2[k]);
        CHECK(tft_value(V3, 0, rows[k]) == s3[k]);
    }
    const int t1[] = {3, 0, -1}, t2[] = {3, -2, -1}, t3[] = {3, 2, 1};
    for (int i = 0; i < 3; ++i) {
        CHECK(tft_value(V1, 1, C{i}) == t1[i]);
        CHECK(tft_value(V2, 1, C{i}) == t2[i]);
        CHECK(tft_value(V3, 1, C{i}) == t3[i]);
    }
}

TEST_CASE("Fibonacci signature table")
{
    const char* want[4][7] = {{"1|0", "0|0", "0|1", "1|0", "1|1", "1|2", "3|2"},
                              {"2|0", "0|1", "1|2", "3|1", "3|4", "5|6", "10|8"},
                              {"4|1", "1|4", "5|5", "9|6", "11|14", "20|20", "34|31"},
                              {"9|6", "7|13", "19|16", "29|26", "42|48", "74|71", "119|116"}};
    auto cells = signature_table(build_algebra(Family::SO3, 5, 1), 3, 6);
    REQUIRE(cells.size() == 28);
    for (const auto& c : cells) {
        std::string got = rational_string(c.p) + "|" + rational_string(c.q);
        CHECK(got == want[c.g][c.n]);
        CHECK(c.stable == (2 * c.g - 2 + c.n > 0));
    }
}

TEST_CASE("associativity, unit and semisimplicity on every built algebra")
{
    for (int l = 3; l <= 25; l += 2) {
        for (long k = 1; k < l; ++k) {
            if (std::gcd(k, static_cast<long>(l)) != 1) continue;
            if (l > 15 && k > 2) break;
            auto V = build_algebra(Family::SO3, l, k);
            CAPTURE(l);
            CAPTURE(k);
            CHECK(associative_with_unit(V));
            CHECK(is_semisimple(V).semisimple);
            CHECK(is_semisimple(V).determinant != 0);
        }
    }
    for (int r = 2; r <= 12; ++r) {
        for (long k : {1L, 4L * r - 1}) {
            auto V = build_algebra(Family::SU2, r, k);
            CAPTURE(r);
            CHECK(associative_with_unit(V));
            CHECK(is_semisimple(V).determinant != 0);
        }
    }
}

TEST_CASE("gluing identities on random samples")
{
    int checked = 0;
    for (auto [f, lev, k] : std::vector<std::tuple<Family, int, long>>{
             {Family::SO3, 5, 1}, {Family::SO3, 7, 2}, {Family::SO3, 9, 1}, {Family::SU2, 4, 1}}) {
        auto rep = gluing_checks(build_algebra(f, lev, k), 50, 3 + lev);
        CHECK(rep.passed);
        checked += rep.checked;
    }
    CHECK(checked >= 200);
}

TEST_CASE("Verlinde dimensions")
{
    // Fibonacci: 1, 2, 5, 15 conformal blocks in genus 0..3
    CHECK(verlinde_dimension(5, 0) == 1);
    CHECK(verlinde_dimension(5, 1) == 2);
    CHECK(verlinde_dimension(5, 2) == 5);
    CHECK(verlinde_dimension(5, 3) == 15);
    for (int l : {7, 9, 11})
        for (int g = 0; g <= 4; ++g)
            CHECK(std::abs(verlinde_dimension(l, g).get_d() - verlinde_sine_formula(l, g)) < 1e-6);
}

TEST_CASE("SU2 unitary partner exists only for even r")
{
    CHECK(unitary_exponent(Family::SU2, 4).has_value());
    CHECK_FALSE(unitary_exponent(Family::SU2, 5).has_value());
    auto k = unitary_exponent(Family::SU2, 4);
    auto U = build_algebra(Family::SU2, 4, *k);
    for (int e : U.epsilons()) CHECK(e == 1);
}

TEST_CASE("number field diagnostics")
{
    auto rep = conjecture_report(7, 1, 200);
    CHECK(rep.number_field == "yes");
    bool has2 = false;
    for (long e : rep.same_field_as) has2 |= e == 2;
    CHECK(has2);
}

TEST_CASE("argument checks")
{
    CHECK_THROWS(build_algebra(Family::SO3, 6, 1));
    CHECK_THROWS(build_algebra(Family::SO3, 7, 7));
    CHECK_THROWS(tft_value(build_algebra(Family::SO3, 5, 1), -1, std::vector<int>{}));
}
