#include "toledo/eulerchi.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace toledo {

namespace {

bool stable(int g, int n) { return g >= 0 && n >= 0 && 2 * g - 2 + n > 0; }

Integer factorial(long n)
{
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return f;
}

Integer binom(long n, long k)
{
    Integer b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return b;
}

std::vector<Rational> poly_mul(const std::vector<Rational>& a, const std::vector<Rational>& b)
{
    std::vector<Rational> c(a.size() + b.size() - 1, Rational(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    return c;
}

void poly_add(std::vector<Rational>& a, const std::vector<Rational>& b, const Rational& s)
{
    if (a.size() < b.size()) a.resize(b.size(), Rational(0));
    for (size_t i = 0; i < b.size(); ++i) a[i] += s * b[i];
}

std::mutex chi_mutex;
std::map<std::pair<int, int>, std::vector<Rational>> chi_memo;

std::vector<Rational> chi_rec(int g, int n)
{
    auto key = std::make_pair(g, n);
    {
        std::lock_guard<std::mutex> lock(chi_mutex);
        auto it = chi_memo.find(key);
        if (it != chi_memo.end()) return it->second;
    }
    std::vector<Rational> d{Rational(0)};
    if (g >= 1 && stable(g - 1, n + 2)) poly_add(d, chi_rec(g - 1, n + 2), Rational(1, 2));
    for (int g1 = 0; g1 <= g; ++g1)
        for (int k = 0; k <= n; ++k) {
            if (!stable(g1, k + 1) || !stable(g - g1, n - k + 1)) continue;
            poly_add(d, poly_mul(chi_rec(g1, k + 1), chi_rec(g - g1, n - k + 1)), Rational(binom(n, k)) / 2);
        }
    std::vector<Rational> p(d.size() + 1, Rational(0));
    p[0] = harer_zagier(g, n);
    for (size_t i = 0; i < d.size(); ++i) p[i + 1] = d[i] / static_cast<long>(i + 1);
    while (p.size() > 1 && p.back() == 0) p.pop_back();
    std::lock_guard<std::mutex> lock(chi_mutex);
    chi_memo[key] = p;
    return p;
}

}  // namespace

Rational ChiPoly::operator()(const Rational& kappa) const
{
    Rational v = 0;
    for (size_t i = coeffs.size(); i-- > 0;) v = v * kappa + coeffs[i];
    return v;
}

std::string ChiPoly::to_string() const
{
    std::string s;
    for (size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i] == 0 && coeffs.size() > 1) continue;
        std::string c = rational_string(abs(coeffs[i]));
        std::string term = i == 0 ? c : (c == "1" ? "" : c + "*") + (i == 1 ? "k" : "k^" + std::to_string(i));
        if (s.empty()) s = (coeffs[i] < 0 ? "-" : "") + term;
        else s += (coeffs[i] < 0 ? " - " : " + ") + term;
    }
    return s;
}

Rational bernoulli(int k)
{
    // B_0..B_k with B_1 = -1/2
    if (k < 0) throw std::invalid_argument("bernoulli: negative index");
    std::vector<Rational> B(k + 1);
    B[0] = 1;
    for (int m = 1; m <= k; ++m) {
        Rational s = 0;
        for (int j = 0; j < m; ++j) s += Rational(binom(m + 1, j)) * B[j];
        B[m] = -s / (m + 1);
    }
    return B[k];
}

Rational harer_zagier(int g, int n)
{
    if (!stable(g, n)) throw std::invalid_argument("harer_zagier: unstable (g,n)");
    if (g == 0) return Rational(factorial(n - 3) * ((n - 3) % 2 ? -1 : 1));
    Rational v = Rational(2 * g - 1) * bernoulli(2 * g) / Rational(factorial(2 * g)) * Rational(factorial(2 * g + n - 3));
    return n % 2 ? -v : v;
}

ChiPoly chi_bar(int g, int n)
{
    if (!stable(g, n)) throw std::invalid_argument("chi_bar: unstable (g,n)");
    return ChiPoly{g, n, chi_rec(g, n)};
}

Rational chi_twisted(int g, int n, int l)
{
    if (l < 1) throw std::invalid_argument("chi_twisted: level must be >= 1");
    return chi_bar(g, n)(Rational(1, l));
}

}  // namespace toledo
