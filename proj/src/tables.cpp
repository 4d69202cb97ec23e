#include "toledo/tables.hpp"

#include "toledo/eulerchi.hpp"
#include "toledo/uniformization.hpp"

#include <stdexcept>

namespace toledo {

namespace {

std::string Q(const Rational& x) { return rational_string(x); }

SignatureCell cell(const FrobeniusAlgebra& V, const FrobeniusAlgebra& U, int g, int n, int color)
{
    SignatureCell c;
    c.g = g;
    c.n = n;
    c.sigma = tft_value(V, g, std::vector<int>(n, color));
    c.dim = tft_value(U, g, std::vector<int>(n, color));
    c.p = (c.dim + c.sigma) / 2;
    c.q = (c.dim - c.sigma) / 2;
    c.stable = 2 * g - 2 + n > 0;
    return c;
}

const std::vector<std::pair<std::string, std::vector<int>>>& level7_colors()
{
    static const std::vector<std::pair<std::string, std::vector<int>>> rows = {
        {"omega_{0,4}(e1,e1,e1,e1)", {1, 1, 1, 1}}, {"omega_{0,4}(e1,e1,e1,e2)", {1, 1, 1, 2}},
        {"omega_{0,4}(e1,e1,e2,e2)", {1, 1, 2, 2}}, {"omega_{0,4}(e1,e2,e2,e2)", {1, 2, 2, 2}},
        {"omega_{0,4}(e2,e2,e2,e2)", {2, 2, 2, 2}}, {"omega_{1,1}(e0)", {0}},
        {"omega_{1,1}(e1)", {1}},                   {"omega_{1,1}(e2)", {2}}};
    return rows;
}

}  // namespace

std::vector<SignatureCell> signature_grid(const FrobeniusAlgebra& V, const FrobeniusAlgebra& U, int gmax, int nmax,
                                          int color, Exec exec)
{
    int w = nmax + 1;
    std::vector<SignatureCell> out((gmax + 1) * w);
    if (exec == Exec::Serial) {
        for (int g = 0; g <= gmax; ++g)
            for (int n = 0; n <= nmax; ++n) out[g * w + n] = cell(V, U, g, n, color);
        return out;
    }
    long total = static_cast<long>(out.size());
#pragma omp parallel for schedule(dynamic)
    for (long k = 0; k < total; ++k) out[k] = cell(V, U, static_cast<int>(k / w), static_cast<int>(k % w), color);
    return out;
}

static void level7_column(int k, std::vector<Level7Row>& rows)
{
    FrobeniusAlgebra V = build_algebra(Family::SO3, 7, k);
    QMat R = solve_r1(V, r1_input(7, k)).R;
    const auto& spec = level7_colors();
    for (size_t i = 0; i < spec.size(); ++i) {
        const auto& c = spec[i].second;
        if (c.size() == 4) {
            std::vector<QVec> v;
            for (int x : c) v.push_back(V.basis(x));
            rows[i].sigma[k - 1] = tft_value(V, 0, c);
            rows[i].tau[k - 1] = tau_from_r1_04(V, R, v);
        } else {
            rows[i].sigma[k - 1] = tft_value(V, 1, c);
            rows[i].tau[k - 1] = tau_from_r1_11(V, R, V.basis(c[0]));
        }
    }
}

std::vector<Level7Row> level7_rows(Exec exec)
{
    std::vector<Level7Row> rows(level7_colors().size());
    for (size_t i = 0; i < rows.size(); ++i) rows[i].label = level7_colors()[i].first;
    if (exec == Exec::Serial) {
        for (int k = 1; k <= 3; ++k) level7_column(k, rows);
        return rows;
    }
    // columns write disjoint array slots
#pragma omp parallel for schedule(dynamic)
    for (int k = 1; k <= 3; ++k) level7_column(k, rows);
    return rows;
}

Table fibonacci_table(Exec exec)
{
    FrobeniusAlgebra V = build_algebra(Family::SO3, 5, 1);
    FrobeniusAlgebra U = build_algebra(Family::SO3, 5, 2);
    Table t{"fibonacci-signatures", {"g", "n", "sigma", "dim", "p", "q", "p|q", "stable"}, {}};
    for (const auto& c : signature_grid(V, U, 3, 6, 1, exec))
        t.rows.push_back({std::to_string(c.g), std::to_string(c.n), Q(c.sigma), Q(c.dim), Q(c.p), Q(c.q),
                          Q(c.p) + "|" + Q(c.q), c.stable ? "yes" : "no"});
    return t;
}

Table level7_table(Exec exec)
{
    Table t{"level7", {"invariant", "sigma_q1", "tau_q1", "sigma_q2", "tau_q2", "sigma_q3", "tau_q3"}, {}};
    for (const auto& r : level7_rows(exec))
        t.rows.push_back({r.label, Q(r.sigma[0]), Q(r.tau[0]), Q(r.sigma[1]), Q(r.tau[1]), Q(r.sigma[2]), Q(r.tau[2])});
    return t;
}

Table r1_table(int l, long exponent)
{
    FrobeniusAlgebra V = build_algebra(Family::SO3, l, exponent);
    R1Matrix R = solve_r1(V, r1_input(l, exponent));
    auto inv = check_r1(V, R);
    Table t{"r1-level" + std::to_string(l) + "-q" + std::to_string(exponent), {"row"}, {}};
    int r = V.rank();
    for (int j = 0; j < r; ++j) t.columns.push_back("e" + std::to_string(j));
    t.columns.push_back("r1");
    for (int i = 0; i < r; ++i) {
        std::vector<std::string> row{"e" + std::to_string(i)};
        for (int j = 0; j < r; ++j) row.push_back(Q(R.R(i, j)));
        row.push_back(Q(R.r1[i]));
        t.rows.push_back(row);
    }
    std::vector<std::string> foot{"denominator_bound"};
    for (int j = 0; j < r; ++j) foot.push_back(j == 0 ? inv.bound.get_str() : "");
    foot.push_back(inv.all() ? "ok" : "violated");
    t.rows.push_back(foot);
    return t;
}

Table uniformization_table()
{
    Table t{"uniformization", {"case", "check", "lhs", "rhs", "pass"}, {}};
    const std::pair<int, int> cases[] = {{0, 5}, {1, 2}, {1, 3}, {2, 1}};
    for (auto [g, n] : cases) {
        auto rep = uniformization_check(g, n);
        std::string c = std::to_string(g) + "," + std::to_string(n);
        t.rows.push_back({c, "tau = " + Q(rep.factor) + " * K", rep.tau.to_string(), rep.rhs.to_string(),
                          rep.proportional ? "yes" : "no"});
        for (const auto& x : rep.extra) t.rows.push_back({c, x.name, Q(x.value), Q(x.expected), x.pass ? "yes" : "no"});
    }
    return t;
}

Table crosscheck_table(int gmax, int nmax)
{
    Table t{"crosscheck",
            {"g", "n", "sigma", "kappa_tilde", "psi", "delta_irr", "lambda_relations", "lambda_12a", "lambda_92_15",
             "closed_formulas", "classes_agree", "92_15_agrees", "second_form_agrees"},
            {}};
    for (const auto& r : closed_formula_crosscheck(gmax, nmax)) {
        bool g1 = r.g >= 1;
        t.rows.push_back({std::to_string(r.g), std::to_string(r.n), Q(r.sigma), Q(r.kt_closed), Q(r.psi_closed),
                          g1 ? Q(r.irr_closed) : "", g1 ? Q(r.lambda_pipeline) : "", g1 ? Q(12 * r.kt_closed) : "",
                          g1 ? Q(r.lambda_literal) : "", r.closed_formula_match ? "yes" : "no",
                          r.class_match ? "yes" : "no", g1 ? (r.literal_match ? "yes" : "no") : "",
                          g1 ? (r.second_match ? "yes" : "no") : ""});
    }
    return t;
}

Table euler_table()
{
    Table t{"euler", {"g", "n", "chi_bar", "chi_open", "chi_l1", "chi_l5"}, {}};
    const std::pair<int, int> cells[] = {{0, 3}, {0, 4}, {0, 5}, {0, 6}, {1, 1}, {1, 2}, {1, 3}, {2, 0}, {2, 1}, {3, 0}};
    for (auto [g, n] : cells) {
        auto p = chi_bar(g, n);
        t.rows.push_back({std::to_string(g), std::to_string(n), p.to_string(), Q(harer_zagier(g, n)),
                          Q(chi_twisted(g, n, 1)), Q(chi_twisted(g, n, 5))});
    }
    return t;
}

const std::vector<std::string>& table_names()
{
    static const std::vector<std::string> names = {"fibonacci-signatures", "level7",    "r1",
                                                   "uniformization",       "crosscheck", "euler"};
    return names;
}

std::vector<Table> reproduce_table(const std::string& name)
{
    if (name == "fibonacci-signatures") return {fibonacci_table()};
    if (name == "level7") return {level7_table()};
    if (name == "r1") return {r1_table(5, 1), r1_table(7, 1), r1_table(7, 2), r1_table(7, 3)};
    if (name == "uniformization") return {uniformization_table()};
    if (name == "crosscheck") return {crosscheck_table(4, 4)};
    if (name == "euler") return {euler_table()};
    throw std::invalid_argument("unknown table: " + name);
}

}  // namespace toledo
