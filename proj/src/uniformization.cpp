#include "toledo/uniformization.hpp"

#include "toledo/rmatrix.hpp"

#include <stdexcept>

namespace toledo {

H2Class level5_tau(int g, int n)
{
    static const FrobeniusAlgebra V = build_algebra(Family::SO3, 5, 1);
    static const QMat R = solve_r1(V, r1_input(5, 1)).R;
    return degree2_class(V, R, g, n, std::vector<QVec>(n, V.basis(1)));
}

bool UniformizationReport::passed() const
{
    if (!proportional) return false;
    for (const auto& c : extra)
        if (!c.pass) return false;
    return true;
}

static ScalarCheck scalar(std::string name, const Rational& v, const Rational& e) { return {std::move(name), v, e, v == e}; }

UniformizationReport uniformization_check(int g, int n)
{
    UniformizationReport rep;
    rep.g = g;
    rep.n = n;
    int q = 3 * g - 3 + n;
    H2Class tau = reduce(level5_tau(g, n));
    if (g == 0 && n == 5) {
        rep.factor = Rational(2) / (q + 1);
        H2Class K = reduce(canonical_class(5, 0, 5));
        rep.tau = tau;
        rep.rhs = K * rep.factor;
        rep.extra.push_back(scalar("c1(K)^2", intersect(K, K), Rational(9, 5)));
        Rational t04 = integrate(level5_tau(0, 4));
        rep.extra.push_back(scalar("integral tau_{0,4}", t04, Rational(-2, 5)));
        FrobeniusAlgebra V = build_algebra(Family::SO3, 5, 1);
        Rational s02 = tft_value(V, 0, std::vector<int>{1, 1}), s03 = tft_value(V, 0, std::vector<int>{1, 1, 1});
        H2Class D(0, 5);
        D.add("delta_{0,{1,2}}", 1);
        Rational restr = intersect(tau, D);
        rep.extra.push_back(scalar("tau_{0,5} on a boundary divisor vs sigma_{0,2} sigma_{0,3} tau_{0,4}", restr, s02 * s03 * t04));
        rep.extra.push_back(scalar("tau_{0,5} on a boundary divisor vs -tau_{0,4}", restr, -t04));
    } else if ((g == 1 && (n == 2 || n == 3)) || (g == 2 && n == 1)) {
        // the conjugate representation uniformizes in case (1,3)
        rep.factor = Rational(2) / (q + 1) * (g == 1 && n == 3 ? -1 : 1);
        H2Class K = reduce(elliptic_pullback(g, n));
        rep.tau = tau;
        rep.rhs = K * rep.factor;
        if (g == 1 && n == 2) {
            rep.extra.push_back(scalar("(c^* c1(K^E))^2", intersect(K, K), Rational(3, 200)));
            H2Class D(1, 2);
            D.add("delta_irr", 1);
            rep.extra.push_back(scalar("tau_{1,2} on delta_irr", intersect(tau, D), Rational(1, 5)));
        }
    } else {
        throw std::invalid_argument("uniformization_check: case must be (0,5), (1,2), (1,3) or (2,1)");
    }
    rep.proportional = rep.tau == rep.rhs;
    return rep;
}

}  // namespace toledo
