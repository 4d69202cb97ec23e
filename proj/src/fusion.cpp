#include "toledo/fusion.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

namespace toledo {

std::string family_name(Family f) { return f == Family::SU2 ? "su2" : "so3"; }

Family parse_family(const std::string& s)
{
    if (s == "su2" || s == "SU2") return Family::SU2;
    if (s == "so3" || s == "SO3") return Family::SO3;
    throw std::invalid_argument("unknown family: " + s);
}

namespace {

std::mutex qf_mutex;
std::map<int, std::vector<CycloNum>> qf_cache;

// [n]! for 0 <= n < l at q = zeta_l
const std::vector<CycloNum>& qfact(int l)
{
    std::lock_guard<std::mutex> lock(qf_mutex);
    auto it = qf_cache.find(l);
    if (it != qf_cache.end()) return it->second;
    CycloNum q = CycloNum::zeta(l);
    std::vector<CycloNum> f{CycloNum(Rational(1), l)};
    for (int n = 1; n < l; ++n) f.push_back(f.back() * quantum_int(n, q));
    return qf_cache[l] = f;
}

// signs of [n] (n = 0..N) at variable x under e
std::vector<int> qint_signs(const CycloNum& x, int N, const Embedding& e)
{
    std::vector<int> s(N + 1, 0);
    for (int n = 1; n <= N; ++n) s[n] = sign_real(quantum_int(n, x), e);
    return s;
}

int theta_sign(const std::vector<int>& qs, int I, int J, int K)
{
    int a = (J + K - I) / 2, b = (I + K - J) / 2, c = (I + J - K) / 2;
    auto fs = [&](int n) {
        int s = 1;
        for (int m = 1; m <= n; ++m) s *= qs[m];
        return s;
    };
    int s = ((a + b + c) % 2) ? -1 : 1;
    return s * fs(a + b + c + 1) * fs(a) * fs(b) * fs(c) * fs(I) * fs(J) * fs(K);
}

}  // namespace

CycloNum root_q(Family f, int level)
{
    return f == Family::SO3 ? CycloNum::zeta(level) : CycloNum::zeta(4 * level);
}

bool so3_admissible(int l, int i, int j, int k)
{
    return i <= j + k && j <= i + k && k <= i + j && i + j + k < l - 1;
}

CycloNum so3_theta(int l, int I, int J, int K)
{
    const auto& f = qfact(l);
    int a = (J + K - I) / 2, b = (I + K - J) / 2, c = (I + J - K) / 2;
    if (a < 0 || b < 0 || c < 0 || a + b + c + 1 >= l) throw std::invalid_argument("theta symbol outside range");
    CycloNum v = f[a + b + c + 1] * f[a] * f[b] * f[c] / (f[I] * f[J] * f[K]);
    return ((a + b + c) % 2) ? -v : v;
}

FrobeniusAlgebra::FrobeniusAlgebra(Family family, int level, Embedding e, std::vector<int> eps,
                                   std::vector<int> omega, std::vector<int> basis_signs)
    : family_(family), level_(level), emb_(e), rank_(static_cast<int>(eps.size())), eps_(std::move(eps)),
      omega_(std::move(omega)), signs_(std::move(basis_signs))
{
    int r = rank_;
    mult_.assign(r, QMat(r, r));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            for (int k = 0; k < r; ++k) mult_[i](k, j) = omega03(i, j, k) * eps_[k];
    QMat G = trace_gram();
    QMat rhs(r, 1);
    rhs(0, 0) = 1;
    QMat a = solve(G.transpose(), rhs);
    alpha_ = a.col(0);
    QMat o = solve(mult_matrix(alpha_), rhs);
    Omega_ = o.col(0);
}

QVec FrobeniusAlgebra::basis(int i) const
{
    QVec v(rank_, Rational(0));
    v.at(i) = 1;
    return v;
}

QMat FrobeniusAlgebra::mult_matrix(const QVec& v) const
{
    QMat m(rank_, rank_);
    for (int i = 0; i < rank_; ++i)
        if (v[i] != 0) m += mult_[i] * v[i];
    return m;
}

QVec FrobeniusAlgebra::product(const QVec& a, const QVec& b) const { return mult_matrix(a) * b; }

QVec FrobeniusAlgebra::power(const QVec& a, long e) const
{
    if (e < 0) {
        QMat rhs(rank_, 1);
        rhs(0, 0) = 1;
        return power(solve(mult_matrix(a), rhs).col(0), -e);
    }
    QVec r = unit();
    for (long i = 0; i < e; ++i) r = product(r, a);
    return r;
}

Rational FrobeniusAlgebra::eta(const QVec& x, const QVec& y) const
{
    Rational s = 0;
    for (int i = 0; i < rank_; ++i) s += x[i] * y[i] * eps_[i];
    return s;
}

QMat FrobeniusAlgebra::eta_matrix() const
{
    QMat m(rank_, rank_);
    for (int i = 0; i < rank_; ++i) m(i, i) = eps_[i];
    return m;
}

Rational FrobeniusAlgebra::trace_V(const QVec& x) const
{
    Rational s = 0;
    for (int i = 0; i < rank_; ++i)
        if (x[i] != 0) s += x[i] * mult_[i].trace();
    return s;
}

QMat FrobeniusAlgebra::trace_gram() const
{
    QMat G(rank_, rank_);
    for (int i = 0; i < rank_; ++i)
        for (int j = 0; j < rank_; ++j) G(i, j) = trace_V(product(basis(i), basis(j)));
    return G;
}

FrobeniusAlgebra so3_algebra(int l, const Embedding& e)
{
    if (l < 3 || l % 2 == 0) throw std::invalid_argument("so3_algebra: level must be odd and >= 3");
    if (e.order() != l) throw std::invalid_argument("so3_algebra: embedding must have order l");
    int r = (l - 1) / 2;
    auto qs = qint_signs(CycloNum::zeta(l), l - 1, e);
    std::vector<int> eps(r), omega(r * r * r, 0);
    for (int i = 0; i < r; ++i) eps[i] = qs[2 * i + 1];
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            for (int k = 0; k < r; ++k)
                if (so3_admissible(l, i, j, k)) omega[(i * r + j) * r + k] = theta_sign(qs, 2 * i, 2 * j, 2 * k);
    int s = 1;
    if (r >= 2 && omega[(1 * r + 1) * r + 1] < 0) s = -1;
    std::vector<int> signs(r);
    for (int i = 0; i < r; ++i) signs[i] = (i % 2 && s < 0) ? -1 : 1;
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            for (int k = 0; k < r; ++k) omega[(i * r + j) * r + k] *= signs[i] * signs[j] * signs[k];
    return FrobeniusAlgebra(Family::SO3, l, e, eps, omega, signs);
}

FrobeniusAlgebra su2_algebra(int r, const Embedding& e)
{
    if (r < 2) throw std::invalid_argument("su2_algebra: r must be >= 2");
    if (e.order() != 4 * r) throw std::invalid_argument("su2_algebra: embedding must have order 4r");
    CycloNum A = CycloNum::zeta(4 * r);
    auto qs = qint_signs(A * A, r, e);
    int n = r - 1;
    std::vector<int> eps(n), omega(n * n * n, 0);
    for (int i = 0; i < n; ++i) eps[i] = (i % 2 ? -1 : 1) * qs[i + 1];
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                if ((i + j + k) % 2) continue;
                int a = (j + k - i) / 2, b = (i + k - j) / 2, c = (i + j - k) / 2;
                if (a < 0 || b < 0 || c < 0 || a + b + c > r - 2) continue;
                omega[(i * n + j) * n + k] = theta_sign(qs, i, j, k);
            }
    return FrobeniusAlgebra(Family::SU2, r, e, eps, omega, std::vector<int>(n, 1));
}

FrobeniusAlgebra build_algebra(Family f, int level, long exponent)
{
    if (f == Family::SO3) return so3_algebra(level, Embedding(level, exponent));
    return su2_algebra(level, Embedding(4 * level, exponent));
}

SemisimpleWitness is_semisimple(const FrobeniusAlgebra& V)
{
    Rational d = det(V.trace_gram());
    return {d != 0, d};
}

Rational tft_value(const FrobeniusAlgebra& V, int g, const std::vector<QVec>& colors)
{
    if (g < 0) throw std::invalid_argument("tft_value: negative genus");
    QVec x = V.unit();
    for (const auto& c : colors) x = V.product(x, c);
    const QVec& base = g <= 1 ? V.alpha() : V.omega_element();
    int e = g <= 1 ? 1 - g : g - 1;
    for (int i = 0; i < e; ++i) x = V.product(x, base);
    return V.trace_V(x);
}

Rational tft_value(const FrobeniusAlgebra& V, int g, const std::vector<int>& colors)
{
    std::vector<QVec> c;
    for (int i : colors) c.push_back(V.basis(i));
    return tft_value(V, g, c);
}

std::optional<long> unitary_exponent(Family f, int level)
{
    int N = f == Family::SO3 ? level : 4 * level;
    CycloNum x = f == Family::SO3 ? CycloNum::zeta(N) : CycloNum::zeta(N, 2);
    int rank = f == Family::SO3 ? (level - 1) / 2 : level - 1;
    for (long k = 1; k < N; ++k) {
        if (std::gcd(k, static_cast<long>(N)) != 1) continue;
        Embedding e(N, k);
        bool ok = true;
        for (int i = 0; i < rank && ok; ++i) {
            int s = f == Family::SO3 ? sign_real(quantum_int(2 * i + 1, x), e)
                                     : (i % 2 ? -1 : 1) * sign_real(quantum_int(i + 1, x), e);
            ok = s > 0;
        }
        if (ok) return k;
    }
    return std::nullopt;
}

std::vector<SignatureCell> signature_table(const FrobeniusAlgebra& V, const FrobeniusAlgebra& U, int gmax, int nmax,
                                           int color)
{
    std::vector<SignatureCell> out;
    for (int g = 0; g <= gmax; ++g)
        for (int n = 0; n <= nmax; ++n) {
            SignatureCell c;
            c.g = g;
            c.n = n;
            c.sigma = tft_value(V, g, std::vector<int>(n, color));
            c.dim = tft_value(U, g, std::vector<int>(n, color));
            c.p = (c.dim + c.sigma) / 2;
            c.q = (c.dim - c.sigma) / 2;
            c.stable = 2 * g - 2 + n > 0;
            out.push_back(c);
        }
    return out;
}

std::vector<SignatureCell> signature_table(const FrobeniusAlgebra& V, int gmax, int nmax, int color)
{
    auto k = unitary_exponent(V.family(), V.level());
    if (!k)
        throw std::domain_error("no unitary embedding for " + family_name(V.family()) + " at level " +
                                std::to_string(V.level()));
    return signature_table(V, build_algebra(V.family(), V.level(), *k), gmax, nmax, color);
}

double verlinde_sine_formula(int l, int g)
{
    const double pi = std::acos(-1.0);
    double s = 0;
    for (int m = 1; m <= (l - 1) / 2; ++m) s += std::pow(std::sin(2 * m * pi / l), 2 - 2 * g);
    return std::pow(l / 4.0, g - 1) * s;
}

Rational verlinde_dimension(int l, int g)
{
    auto k = unitary_exponent(Family::SO3, l);
    if (!k) throw std::domain_error("no unitary embedding");
    Rational d = tft_value(so3_algebra(l, Embedding(l, *k)), g, std::vector<int>{});
    double ref = verlinde_sine_formula(l, g);
    if (std::abs(d.get_d() - ref) > 1e-9 * std::max(1.0, std::abs(ref)))
        throw std::logic_error("verlinde_dimension: trace and sine formulas disagree");
    return d;
}

GluingReport gluing_checks(const FrobeniusAlgebra& V, int samples, unsigned seed, int gmax, int nmax)
{
    GluingReport rep;
    std::mt19937 rng(seed);
    int r = V.rank();
    auto rnd = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
    auto colors = [&](int n) {
        std::vector<int> c(n);
        for (auto& x : c) x = rnd(0, r - 1);
        return c;
    };
    auto fail = [&](const std::string& kind, int g, const std::vector<int>& c) {
        rep.passed = false;
        std::ostringstream os;
        os << kind << " g=" << g << " colors=";
        for (int x : c) os << x << ",";
        rep.failures.push_back(os.str());
    };
    for (int s = 0; s < samples; ++s) {
        int kind = s % 3;
        int g = rnd(0, gmax), n = rnd(0, nmax);
        auto c = colors(n);
        ++rep.checked;
        if (kind == 0) {
            Rational lhs = tft_value(V, g + 1, c), rhs = 0;
            for (int mu = 0; mu < r; ++mu) {
                auto cc = c;
                cc.push_back(mu);
                cc.push_back(mu);
                rhs += V.epsilon(mu) * tft_value(V, g, cc);
            }
            if (lhs != rhs) fail("nonseparating", g, c);
        } else if (kind == 1) {
            int g1 = rnd(0, g), n1 = rnd(0, n);
            std::vector<int> c1(c.begin(), c.begin() + n1), c2(c.begin() + n1, c.end());
            Rational lhs = tft_value(V, g, c), rhs = 0;
            for (int mu = 0; mu < r; ++mu) {
                auto a = c1, b = c2;
                a.push_back(mu);
                b.push_back(mu);
                rhs += V.epsilon(mu) * tft_value(V, g1, a) * tft_value(V, g - g1, b);
            }
            if (lhs != rhs) fail("separating", g, c);
        } else {
            auto cc = c;
            cc.push_back(0);
            if (tft_value(V, g, cc) != tft_value(V, g, c)) fail("unit", g, c);
        }
    }
    return rep;
}

// ---------------------------------------------------------------- diagnostics

namespace {

using Poly = std::vector<long long>;

void trim(Poly& a)
{
    while (!a.empty() && a.back() == 0) a.pop_back();
}

long long pmod(long long a, long long p) { return ((a % p) + p) % p; }

long long inv_mod(long long a, long long p)
{
    long long r = 1, b = pmod(a, p), e = p - 2;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

Poly poly_rem(Poly a, const Poly& b, long long p)
{
    trim(a);
    long long ib = inv_mod(b.back(), p);
    while (a.size() >= b.size()) {
        long long c = a.back() * ib % p;
        size_t sh = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i) a[sh + i] = pmod(a[sh + i] - c * b[i], p);
        trim(a);
    }
    return a;
}

Poly poly_div(Poly a, const Poly& b, long long p)
{
    trim(a);
    Poly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
    long long ib = inv_mod(b.back(), p);
    while (a.size() >= b.size()) {
        long long c = a.back() * ib % p;
        size_t sh = a.size() - b.size();
        q[sh] = c;
        for (size_t i = 0; i < b.size(); ++i) a[sh + i] = pmod(a[sh + i] - c * b[i], p);
        trim(a);
    }
    return q;
}

Poly poly_gcd(Poly a, Poly b, long long p)
{
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = poly_rem(a, b, p);
        a = b;
        b = r;
    }
    return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, long long p)
{
    if (a.empty() || b.empty()) return {};
    Poly c(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    return poly_rem(c, f, p);
}

Poly poly_powmod(Poly b, long long e, const Poly& f, long long p)
{
    Poly r{1};
    b = poly_rem(b, f, p);
    while (e) {
        if (e & 1) r = poly_mulmod(r, b, f, p);
        b = poly_mulmod(b, b, f, p);
        e >>= 1;
    }
    return r;
}

// Degrees of the irreducible factors mod p; empty when f is not squarefree mod p.
std::vector<int> factor_degrees(const std::vector<Integer>& fz, long long p)
{
    Poly f;
    for (const auto& c : fz) f.push_back(pmod(mpz_fdiv_ui(c.get_mpz_t(), p), p));
    trim(f);
    if (static_cast<size_t>(f.size()) != fz.size()) return {};
    Poly df;
    for (size_t i = 1; i < f.size(); ++i) df.push_back(f[i] * static_cast<long long>(i) % p);
    trim(df);
    if (df.empty() || poly_gcd(f, df, p).size() != 1) return {};
    std::vector<int> degs;
    Poly h{0, 1};
    for (int d = 1; 2 * d < static_cast<int>(f.size()); ++d) {
        h = poly_powmod(h, p, f, p);
        Poly hx = h;
        hx.resize(std::max<size_t>(hx.size(), 2), 0);
        hx[1] = pmod(hx[1] - 1, p);
        Poly g = poly_gcd(f, hx, p);
        int gd = static_cast<int>(g.size()) - 1;
        if (gd > 0) {
            for (int k = 0; k < gd / d; ++k) degs.push_back(d);
            f = poly_div(f, g, p);
            h = poly_rem(h, f, p);
        }
    }
    if (f.size() > 1) degs.push_back(static_cast<int>(f.size()) - 1);
    return degs;
}

std::vector<Integer> min_poly_e1(const FrobeniusAlgebra& V)
{
    auto cp = charpoly(V.left_mult(V.rank() > 1 ? 1 : 0));
    std::vector<Integer> out;
    for (auto& c : cp) out.push_back(c.get_num());
    return out;
}

std::vector<long> small_primes(long bound)
{
    std::vector<long> ps;
    for (long n = 3; n <= bound; ++n) {
        bool pr = true;
        for (long d = 2; d * d <= n; ++d)
            if (n % d == 0) {
                pr = false;
                break;
            }
        if (pr) ps.push_back(n);
    }
    return ps;
}

}  // namespace

ConjectureReport conjecture_report(int l, long exponent, int prime_bound)
{
    ConjectureReport rep;
    auto V = so3_algebra(l, Embedding(l, exponent));
    rep.min_poly = min_poly_e1(V);
    int deg = static_cast<int>(rep.min_poly.size()) - 1;
    auto primes = small_primes(prime_bound);
    // subset sums of factor degrees that survive every prime
    std::vector<bool> possible(deg + 1, true);
    for (long p : primes) {
        auto degs = factor_degrees(rep.min_poly, p);
        if (degs.empty()) continue;
        std::vector<bool> ss(deg + 1, false);
        ss[0] = true;
        for (int d : degs)
            for (int s = deg; s >= d; --s)
                if (ss[s - d]) ss[s] = true;
        for (int s = 0; s <= deg; ++s) possible[s] = possible[s] && ss[s];
    }
    bool irreducible = true;
    for (int s = 1; s < deg; ++s)
        if (possible[s]) irreducible = false;
    rep.number_field = irreducible ? "yes" : "undetermined";

    Integer D = abs(det(V.trace_gram()).get_num());
    bool squarefree = true, decided = true;
    Integer R = D;
    for (long p = 2; p <= 100000 && R > 1; ++p) {
        int m = 0;
        while (mpz_divisible_ui_p(R.get_mpz_t(), p)) {
            R /= p;
            ++m;
        }
        if (m >= 2) squarefree = false;
    }
    if (R > 1 && mpz_perfect_square_p(R.get_mpz_t())) squarefree = false;
    if (R > Integer("1000000000000000")) decided = false;
    rep.maximal_order = squarefree && decided ? "yes" : "undetermined";

    long e0 = ((exponent % l) + l) % l;
    e0 = std::min(e0, l - e0);
    for (long k = 1; k <= (l - 1) / 2; ++k) {
        if (k == e0 || std::gcd(k, static_cast<long>(l)) != 1) continue;
        auto W = so3_algebra(l, Embedding(l, k));
        auto mp = min_poly_e1(W);
        bool same = true;
        for (long p : primes) {
            auto a = factor_degrees(rep.min_poly, p), b = factor_degrees(mp, p);
            if (a.empty() || b.empty()) continue;
            std::sort(a.begin(), a.end());
            std::sort(b.begin(), b.end());
            if (a != b) {
                same = false;
                break;
            }
        }
        if (same) rep.same_field_as.push_back(k);
    }
    return rep;
}

}  // namespace toledo
