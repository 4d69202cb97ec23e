#include "toledo/mgnclasses.hpp"

#include <algorithm>
#include <regex>
#include <sstream>
#include <stdexcept>

namespace toledo {

bool is_stable(int g, int n) { return g >= 0 && n >= 0 && 2 * g - 2 + n > 0; }

std::string psi_label(int i) { return "psi_" + std::to_string(i); }

static std::string raw_delta(int a, const std::vector<int>& A)
{
    std::string s = "delta_{" + std::to_string(a) + ",{";
    for (size_t k = 0; k < A.size(); ++k) s += (k ? "," : "") + std::to_string(A[k]);
    return s + "}}";
}

std::string delta_label(int g, int n, int a, std::vector<int> A)
{
    std::sort(A.begin(), A.end());
    if (std::adjacent_find(A.begin(), A.end()) != A.end()) throw std::invalid_argument("delta_label: repeated point");
    for (int p : A)
        if (p < 1 || p > n) throw std::invalid_argument("delta_label: point out of range");
    std::vector<int> B;
    for (int p = 1; p <= n; ++p)
        if (!std::binary_search(A.begin(), A.end(), p)) B.push_back(p);
    int b = g - a;
    if (a < 0 || b < 0 || !is_stable(a, static_cast<int>(A.size()) + 1) || !is_stable(b, static_cast<int>(B.size()) + 1))
        throw std::invalid_argument("delta_label: unstable side in " + raw_delta(a, A));
    if (std::make_pair(b, B) < std::make_pair(a, A)) return raw_delta(b, B);
    return raw_delta(a, A);
}

std::string canonical_label(int g, int n, const std::string& label)
{
    static const std::regex psi_re(R"(psi_(\d+))");
    static const std::regex delta_re(R"(delta_\{(\d+),\{([0-9,]*)\}\})");
    std::smatch m;
    if (label == "kappa_1" || label == "kappa_tilde_1" || label == "lambda_1") return label;
    if (label == "delta_irr") {
        if (g < 1) throw std::invalid_argument("delta_irr needs genus >= 1");
        return label;
    }
    if (std::regex_match(label, m, psi_re)) {
        int i = std::stoi(m[1]);
        if (i < 1 || i > n) throw std::invalid_argument("psi index out of range: " + label);
        return psi_label(i);
    }
    if (std::regex_match(label, m, delta_re)) {
        std::vector<int> A;
        std::stringstream ss(m[2]);
        std::string tok;
        while (std::getline(ss, tok, ','))
            if (!tok.empty()) A.push_back(std::stoi(tok));
        return delta_label(g, n, std::stoi(m[1]), A);
    }
    throw std::invalid_argument("unknown class label: " + label);
}

std::vector<BoundaryDivisor> separating_divisors(int g, int n)
{
    std::vector<BoundaryDivisor> out;
    std::vector<std::string> seen;
    for (int a = 0; a <= g; ++a)
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            std::vector<int> A;
            for (int p = 0; p < n; ++p)
                if (mask & (1u << p)) A.push_back(p + 1);
            if (!is_stable(a, static_cast<int>(A.size()) + 1) || !is_stable(g - a, n - static_cast<int>(A.size()) + 1))
                continue;
            std::string lab = delta_label(g, n, a, A);
            if (std::find(seen.begin(), seen.end(), lab) != seen.end()) continue;
            seen.push_back(lab);
            if (lab == raw_delta(a, A)) out.push_back({a, A, lab});
            else {
                // keep the canonical side
                std::vector<int> B;
                for (int p = 1; p <= n; ++p)
                    if (!std::binary_search(A.begin(), A.end(), p)) B.push_back(p);
                out.push_back({g - a, B, lab});
            }
        }
    return out;
}

H2Class::H2Class(int g, int n) : g_(g), n_(n)
{
    if (!is_stable(g, n)) throw std::invalid_argument("H2Class: unstable (g,n)");
}

Rational H2Class::get(const std::string& label) const
{
    auto it = c_.find(canonical_label(g_, n_, label));
    return it == c_.end() ? Rational(0) : it->second;
}

H2Class& H2Class::add(const std::string& label, const Rational& c)
{
    if (c == 0) return *this;
    std::string k = canonical_label(g_, n_, label);
    Rational& x = c_[k];
    x += c;
    if (x == 0) c_.erase(k);
    return *this;
}

void H2Class::check_same(const H2Class& b) const
{
    if (g_ != b.g_ || n_ != b.n_) throw std::invalid_argument("H2Class: classes live on different spaces");
}

H2Class& H2Class::operator+=(const H2Class& b)
{
    check_same(b);
    for (const auto& [k, v] : b.c_) add(k, v);
    return *this;
}

H2Class& H2Class::operator-=(const H2Class& b)
{
    check_same(b);
    for (const auto& [k, v] : b.c_) add(k, -v);
    return *this;
}

H2Class& H2Class::operator*=(const Rational& s)
{
    if (s == 0) c_.clear();
    for (auto& [k, v] : c_) v *= s;
    return *this;
}

std::string H2Class::to_string() const
{
    if (c_.empty()) return "0";
    std::string s;
    for (const auto& [k, v] : c_) {
        if (!s.empty()) s += " + ";
        s += "(" + rational_string(v) + ")" + k;
    }
    return s;
}

H2Class psi_sum(int g, int n)
{
    H2Class c(g, n);
    for (int i = 1; i <= n; ++i) c.add(psi_label(i), 1);
    return c;
}

H2Class delta_sum(int g, int n)
{
    H2Class c(g, n);
    if (g >= 1) c.add("delta_irr", 1);
    for (const auto& d : separating_divisors(g, n)) c.add(d.label, 1);
    return c;
}

H2Class to_kappa_basis(const H2Class& c)
{
    // kappa~ = kappa - psi, lambda = (kappa~ + delta) / 12
    H2Class out(c.g(), c.n());
    H2Class kt(c.g(), c.n());
    kt.add("kappa_1", 1);
    kt -= psi_sum(c.g(), c.n());
    for (const auto& [k, v] : c.coeffs()) {
        if (k == "kappa_tilde_1") out += kt * v;
        else if (k == "lambda_1") out += (kt + delta_sum(c.g(), c.n())) * (v / 12);
        else out.add(k, v);
    }
    return out;
}

H2Class to_kappa_tilde_basis(const H2Class& c)
{
    H2Class out(c.g(), c.n());
    for (const auto& [k, v] : c.coeffs()) {
        if (k == "kappa_1") {
            out.add("kappa_tilde_1", v);
            out += psi_sum(c.g(), c.n()) * v;
        } else if (k == "lambda_1") {
            out.add("kappa_tilde_1", v / 12);
            out += delta_sum(c.g(), c.n()) * (v / 12);
        } else {
            out.add(k, v);
        }
    }
    return out;
}

H2Class to_lambda_basis(const H2Class& c)
{
    H2Class out(c.g(), c.n());
    H2Class kt(c.g(), c.n());
    kt.add("lambda_1", 12);
    kt -= delta_sum(c.g(), c.n());
    for (const auto& [k, v] : c.coeffs()) {
        if (k == "kappa_tilde_1") out += kt * v;
        else if (k == "kappa_1") out += (kt + psi_sum(c.g(), c.n())) * v;
        else out.add(k, v);
    }
    return out;
}

H2Class canonical_class(int l, int g, int n)
{
    if (l < 1) throw std::invalid_argument("canonical_class: level must be >= 1");
    H2Class c(g, n);
    c.add("kappa_tilde_1", Rational(13, 12));
    c += delta_sum(g, n) * (Rational(1, 12) - Rational(1, l));
    c += psi_sum(g, n);
    return c;
}

H2Class elliptic_pullback(int g, int n)
{
    if (g < 1) throw std::invalid_argument("elliptic_pullback: no elliptic tails in genus 0");
    if (g == 2 && n == 0) throw std::invalid_argument("elliptic_pullback: (2,0) is excluded");
    if (g == 1 && n == 1) throw std::invalid_argument("elliptic_pullback: (1,1) has no elliptic-tail divisor");
    H2Class c = canonical_class(5, g, n);
    c.add(delta_label(g, n, 1, {}), Rational(-1, 5));
    return c;
}

bool reduce_supported(int g, int n)
{
    return (g == 0 && (n == 4 || n == 5)) || (g == 1 && n >= 1 && n <= 3) || (g == 2 && n == 1);
}

std::vector<std::string> reduced_basis(int g, int n)
{
    if (!reduce_supported(g, n)) throw std::invalid_argument("reduce: unsupported (g,n)");
    if (g == 0 && n == 4) return {"psi_1"};
    if (g == 0) return {"psi_1", "psi_2", "psi_3", "psi_4", "psi_5"};
    if (g == 1 && n == 1) return {"psi_1"};
    if (g == 2) return {"psi_1", "delta_irr", "delta_{1,{}}"};
    std::vector<std::string> b{"delta_irr"};
    for (const auto& d : separating_divisors(g, n)) b.push_back(d.label);
    return b;
}

// lambda_1 in terms of boundary divisors.
static H2Class lambda_class(int g, int n)
{
    H2Class c(g, n);
    if (g == 1) c.add("delta_irr", Rational(1, 12));
    if (g == 2) {
        c.add("delta_irr", Rational(1, 10));
        c.add(delta_label(g, n, 1, {}), Rational(1, 5));
    }
    return c;
}

// Image of one label (kappa_1 already eliminated) in the reduced basis.
static H2Class reduce_label(int g, int n, const std::string& k)
{
    H2Class out(g, n);
    auto basis = reduced_basis(g, n);
    if (std::find(basis.begin(), basis.end(), k) != basis.end()) return out.add(k, 1);
    if (g == 0 && n == 4) return out.add("psi_1", 1);
    if (g == 0 && n == 5) {
        // delta_{0,{i,j}} = 2/3 (psi_i + psi_j) - 1/3 (the other three psi)
        std::smatch m;
        std::string lab = k;
        static const std::regex re(R"(delta_\{0,\{([0-9,]*)\}\})");
        if (!std::regex_match(lab, m, re)) throw std::logic_error("reduce: unexpected label " + k);
        std::vector<int> S;
        std::stringstream ss(m[1]);
        std::string tok;
        while (std::getline(ss, tok, ',')) S.push_back(std::stoi(tok));
        if (S.size() == 3) {
            std::vector<int> T;
            for (int p = 1; p <= 5; ++p)
                if (std::find(S.begin(), S.end(), p) == S.end()) T.push_back(p);
            S = T;
        }
        for (int p = 1; p <= 5; ++p) {
            bool in = std::find(S.begin(), S.end(), p) != S.end();
            out.add(psi_label(p), in ? Rational(2, 3) : Rational(-1, 3));
        }
        return out;
    }
    if (g == 1 && n == 1) {
        if (k == "delta_irr") return out.add("psi_1", 12);
        throw std::logic_error("reduce: unexpected label " + k);
    }
    if (g == 1 && k.rfind("psi_", 0) == 0) {
        // psi_i = lambda + sum of delta_{0,S} with i in S
        int i = std::stoi(k.substr(4));
        out += lambda_class(g, n);
        for (const auto& d : separating_divisors(g, n))
            if (d.a == 0 && std::find(d.points.begin(), d.points.end(), i) != d.points.end()) out.add(d.label, 1);
        return out;
    }
    throw std::logic_error("reduce: unexpected label " + k);
}

H2Class reduce(const H2Class& c0)
{
    int g = c0.g(), n = c0.n();
    if (!reduce_supported(g, n)) throw std::invalid_argument("reduce: unsupported (g,n)");
    // kappa = psi + 12 lambda - delta
    H2Class c = to_kappa_basis(c0);
    H2Class kappa = psi_sum(g, n) + lambda_class(g, n) * 12 - delta_sum(g, n);
    H2Class flat(g, n);
    for (const auto& [k, v] : c.coeffs()) {
        if (k == "kappa_1") flat += kappa * v;
        else flat.add(k, v);
    }
    H2Class out(g, n);
    for (const auto& [k, v] : flat.coeffs()) out += reduce_label(g, n, k) * v;
    return out;
}

Rational integrate(const H2Class& c)
{
    int g = c.g(), n = c.n();
    if (!((g == 0 && n == 4) || (g == 1 && n == 1))) throw std::invalid_argument("integrate: unsupported (g,n)");
    Rational x = reduce(c).get("psi_1");
    return g == 0 ? x : x / 24;
}

Rational intersect(const H2Class& a, const H2Class& b)
{
    if (a.g() != b.g() || a.n() != b.n()) throw std::invalid_argument("intersect: classes live on different spaces");
    int g = a.g(), n = a.n();
    H2Class x = reduce(a), y = reduce(b);
    Rational s = 0;
    if (g == 0 && n == 5) {
        for (int i = 1; i <= 5; ++i)
            for (int j = 1; j <= 5; ++j) s += x.get(psi_label(i)) * y.get(psi_label(j)) * (i == j ? 1 : 2);
        return s;
    }
    if (g == 1 && n == 2) {
        const std::string d1 = "delta_{0,{1,2}}", di = "delta_irr";
        s += x.get(d1) * y.get(d1) * Rational(-1, 24);
        s += (x.get(d1) * y.get(di) + x.get(di) * y.get(d1)) * Rational(1, 2);
        return s;
    }
    throw std::invalid_argument("intersect: unsupported (g,n)");
}

}  // namespace toledo
