#include "toledo/cyclotomic.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace toledo {

namespace {

struct FieldData {
    int N = 1;
    int phi = 1;
    std::vector<Integer> poly;              // Phi_N, monic
    std::vector<std::vector<Integer>> red;  // red[k] = x^k mod Phi_N, k < N
};

std::recursive_mutex cache_mutex;
std::map<int, std::vector<Integer>> poly_cache;
std::map<int, std::shared_ptr<const FieldData>> field_cache;

std::vector<Integer> poly_divexact(std::vector<Integer> a, const std::vector<Integer>& b)
{
    // b monic
    int da = static_cast<int>(a.size()) - 1, db = static_cast<int>(b.size()) - 1;
    std::vector<Integer> q(da - db + 1);
    for (int i = da; i >= db; --i) {
        Integer c = a[i];
        q[i - db] = c;
        if (c != 0)
            for (int j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
    }
    for (int i = 0; i < db; ++i)
        if (a[i] != 0) throw std::logic_error("cyclotomic polynomial division not exact");
    return q;
}

std::shared_ptr<const FieldData> field(int N)
{
    std::lock_guard<std::recursive_mutex> lock(cache_mutex);
    auto it = field_cache.find(N);
    if (it != field_cache.end()) return it->second;
    auto f = std::make_shared<FieldData>();
    f->N = N;
    f->poly = cyclotomic_poly(N);
    f->phi = static_cast<int>(f->poly.size()) - 1;
    int phi = f->phi;
    f->red.assign(N, std::vector<Integer>(phi));
    std::vector<Integer> cur(phi);
    cur[0] = 1;
    for (int k = 0; k < N; ++k) {
        f->red[k] = cur;
        // multiply by x
        Integer top = cur[phi - 1];
        for (int i = phi - 1; i > 0; --i) cur[i] = cur[i - 1];
        cur[0] = 0;
        if (top != 0)
            for (int i = 0; i < phi; ++i) cur[i] -= top * f->poly[i];
    }
    field_cache[N] = f;
    return f;
}

long gcd_l(long a, long b) { return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b); }

long mod(long a, long m)
{
    long r = a % m;
    return r < 0 ? r + m : r;
}

bool is_prime(long n)
{
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

}  // namespace

long euler_phi(long n)
{
    long r = n;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            r -= r / p;
        }
    }
    if (n > 1) r -= r / n;
    return r;
}

long lcm_order(long a, long b) { return a / gcd_l(a, b) * b; }

const std::vector<Integer>& cyclotomic_poly(int N)
{
    if (N < 1) throw std::invalid_argument("cyclotomic order must be positive");
    std::lock_guard<std::recursive_mutex> lock(cache_mutex);
    auto it = poly_cache.find(N);
    if (it != poly_cache.end()) return it->second;
    std::vector<Integer> p(N + 1);
    p[0] = -1;
    p[N] = 1;
    for (int d = 1; d < N; ++d)
        if (N % d == 0) p = poly_divexact(p, cyclotomic_poly(d));
    return poly_cache[N] = p;
}

// ---------------------------------------------------------------- CycloNum

CycloNum::CycloNum() : order_(1), num_(1), den_(1) {}

CycloNum::CycloNum(long v) : order_(1), num_(1), den_(1) { num_[0] = v; }

CycloNum::CycloNum(const Rational& v, int order) : order_(order), den_(1)
{
    num_.assign(field(order)->phi, Integer(0));
    num_[0] = v.get_num();
    den_ = v.get_den();
}

CycloNum::CycloNum(int order, std::vector<Integer> num, Integer den)
    : order_(order), num_(std::move(num)), den_(std::move(den))
{
    normalize();
}

CycloNum CycloNum::zero(int order) { return CycloNum(Rational(0), order); }

CycloNum CycloNum::zeta(int order, long power)
{
    auto f = field(order);
    return CycloNum(order, f->red[mod(power, order)], Integer(1));
}

void CycloNum::normalize()
{
    if (den_ < 0) {
        den_ = -den_;
        for (auto& c : num_) c = -c;
    }
    Integer g = den_;
    for (const auto& c : num_) {
        if (g == 1) break;
        if (c != 0) g = gcd(g, c);
    }
    if (g != 1) {
        for (auto& c : num_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
        mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
    }
}

std::vector<Rational> CycloNum::coeffs() const
{
    std::vector<Rational> out;
    out.reserve(num_.size());
    for (const auto& c : num_) {
        Rational q(c, den_);
        q.canonicalize();
        out.push_back(q);
    }
    return out;
}

Rational CycloNum::coeff(int i) const
{
    Rational q(num_.at(i), den_);
    q.canonicalize();
    return q;
}

bool CycloNum::is_zero() const
{
    return std::all_of(num_.begin(), num_.end(), [](const Integer& c) { return c == 0; });
}

bool CycloNum::is_rational() const
{
    return std::all_of(num_.begin() + 1, num_.end(), [](const Integer& c) { return c == 0; });
}

Rational CycloNum::to_rational() const
{
    if (!is_rational()) throw std::domain_error("cyclotomic number is not rational");
    return coeff(0);
}

CycloNum CycloNum::lift(int M) const
{
    if (M == order_) return *this;
    if (M % order_ != 0) throw std::invalid_argument("lift target must be a multiple of the order");
    auto f = field(M);
    int step = M / order_;
    std::vector<Integer> out(f->phi);
    for (size_t i = 0; i < num_.size(); ++i) {
        if (num_[i] == 0) continue;
        const auto& r = f->red[(i * step) % M];
        for (int m = 0; m < f->phi; ++m)
            if (r[m] != 0) out[m] += num_[i] * r[m];
    }
    return CycloNum(M, std::move(out), den_);
}

CycloNum CycloNum::reduced() const
{
    if (is_rational()) return CycloNum(to_rational());
    for (int d = 2; d < order_; ++d) {
        if (order_ % d != 0) continue;
        bool fixed = true;
        for (long k = 1 + d; k < order_ && fixed; k += d)
            if (gcd_l(k, order_) == 1 && galois(*this, k) != *this) fixed = false;
        if (!fixed) continue;
        // solve for coordinates in Q(zeta_d)
        auto fd = field(d);
        int pd = fd->phi, pn = degree();
        std::vector<std::vector<Rational>> m(pn, std::vector<Rational>(pd + 1));
        for (int i = 0; i < pd; ++i) {
            CycloNum b = zeta(d, i).lift(order_);
            for (int r = 0; r < pn; ++r) m[r][i] = Rational(b.num_[r], b.den_);
        }
        for (int r = 0; r < pn; ++r) m[r][pd] = Rational(num_[r], den_);
        for (auto& row : m)
            for (auto& x : row) x.canonicalize();
        int row = 0;
        std::vector<int> piv;
        for (int c = 0; c < pd && row < pn; ++c) {
            int p = row;
            while (p < pn && m[p][c] == 0) ++p;
            if (p == pn) continue;
            std::swap(m[p], m[row]);
            Rational iv = 1 / m[row][c];
            for (auto& x : m[row]) x *= iv;
            for (int r = 0; r < pn; ++r)
                if (r != row && m[r][c] != 0) {
                    Rational f = m[r][c];
                    for (int k = 0; k <= pd; ++k) m[r][k] -= f * m[row][k];
                }
            piv.push_back(c);
            ++row;
        }
        std::vector<Rational> sol(pd);
        for (size_t r = 0; r < piv.size(); ++r) sol[piv[r]] = m[r][pd];
        Integer den = 1;
        for (auto& s : sol) den = lcm(den, s.get_den());
        std::vector<Integer> nums(pd);
        for (int i = 0; i < pd; ++i) nums[i] = sol[i].get_num() * (den / sol[i].get_den());
        CycloNum out(d, std::move(nums), den);
        if (out.lift(order_) == *this) return out;
    }
    return *this;
}

static void unify(CycloNum& a, CycloNum& b)
{
    if (a.order() == b.order()) return;
    int L = static_cast<int>(lcm_order(a.order(), b.order()));
    a = a.lift(L);
    b = b.lift(L);
}

CycloNum& CycloNum::operator+=(const CycloNum& b0)
{
    CycloNum b = b0;
    unify(*this, b);
    if (den_ == b.den_) {
        for (size_t i = 0; i < num_.size(); ++i) num_[i] += b.num_[i];
    } else {
        for (size_t i = 0; i < num_.size(); ++i) num_[i] = num_[i] * b.den_ + b.num_[i] * den_;
        den_ *= b.den_;
    }
    normalize();
    return *this;
}

CycloNum& CycloNum::operator-=(const CycloNum& b) { return *this += -b; }

CycloNum& CycloNum::operator*=(const CycloNum& b0)
{
    if (b0.order_ == 1) {
        for (auto& c : num_) c *= b0.num_[0];
        den_ *= b0.den_;
        normalize();
        return *this;
    }
    if (order_ == 1) {
        Integer n = num_[0], d = den_;
        *this = b0;
        for (auto& c : num_) c *= n;
        den_ *= d;
        normalize();
        return *this;
    }
    CycloNum b = b0;
    unify(*this, b);
    auto f = field(order_);
    int phi = f->phi;
    std::vector<Integer> prod(2 * phi - 1);
    for (int i = 0; i < phi; ++i) {
        if (num_[i] == 0) continue;
        for (int j = 0; j < phi; ++j)
            if (b.num_[j] != 0) mpz_addmul(prod[i + j].get_mpz_t(), num_[i].get_mpz_t(), b.num_[j].get_mpz_t());
    }
    std::vector<Integer> out(prod.begin(), prod.begin() + phi);
    for (int k = phi; k < 2 * phi - 1; ++k) {
        if (prod[k] == 0) continue;
        const auto& r = f->red[k % order_];
        for (int m = 0; m < phi; ++m)
            if (r[m] != 0) mpz_addmul(out[m].get_mpz_t(), prod[k].get_mpz_t(), r[m].get_mpz_t());
    }
    num_ = std::move(out);
    den_ *= b.den_;
    normalize();
    return *this;
}

CycloNum& CycloNum::operator/=(const CycloNum& b) { return *this *= inv(b); }

CycloNum CycloNum::operator-() const
{
    CycloNum r = *this;
    for (auto& c : r.num_) c = -c;
    return r;
}

bool operator==(const CycloNum& a0, const CycloNum& b0)
{
    if (a0.order_ == b0.order_) return a0.den_ == b0.den_ && a0.num_ == b0.num_;
    CycloNum a = a0, b = b0;
    unify(a, b);
    return a.den_ == b.den_ && a.num_ == b.num_;
}

std::string CycloNum::to_string() const
{
    std::string s;
    bool first = true;
    for (size_t i = 0; i < num_.size(); ++i) {
        if (num_[i] == 0) continue;
        Rational c(num_[i], den_);
        c.canonicalize();
        std::string cs = rational_string(abs(c));
        s += first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
        first = false;
        if (i == 0)
            s += cs;
        else {
            if (cs != "1") s += cs + "*";
            s += "z" + std::to_string(order_) + (i > 1 ? "^" + std::to_string(i) : "");
        }
    }
    return first ? "0" : s;
}

CycloNum inv(const CycloNum& a)
{
    if (a.is_zero()) throw std::domain_error("inversion of zero");
    if (a.is_rational()) return CycloNum(1 / a.to_rational(), a.order());
    auto f = field(a.order());
    int phi = f->phi;
    // columns: a * x^i, solve M c = e0
    std::vector<std::vector<Rational>> m(phi, std::vector<Rational>(phi + 1));
    std::vector<Integer> col = a.num_;
    for (int i = 0; i < phi; ++i) {
        for (int r = 0; r < phi; ++r) m[r][i] = col[r];
        Integer top = col[phi - 1];
        for (int r = phi - 1; r > 0; --r) col[r] = col[r - 1];
        col[0] = 0;
        if (top != 0)
            for (int r = 0; r < phi; ++r) col[r] -= top * f->poly[r];
    }
    m[0][phi] = 1;
    for (int c = 0; c < phi; ++c) {
        int p = c;
        while (m[p][c] == 0) ++p;
        std::swap(m[p], m[c]);
        Rational iv = 1 / m[c][c];
        for (int k = c; k <= phi; ++k) m[c][k] *= iv;
        for (int r = 0; r < phi; ++r)
            if (r != c && m[r][c] != 0) {
                Rational fct = m[r][c];
                for (int k = c; k <= phi; ++k) m[r][k] -= fct * m[c][k];
            }
    }
    Integer den = 1;
    for (int r = 0; r < phi; ++r) den = lcm(den, m[r][phi].get_den());
    std::vector<Integer> nums(phi);
    for (int r = 0; r < phi; ++r) nums[r] = m[r][phi].get_num() * (den / m[r][phi].get_den());
    // a^{-1} = (den_a) * (num_a)^{-1}
    CycloNum out(a.order(), std::move(nums), den);
    return out * CycloNum(Rational(a.den_));
}

CycloNum galois(const CycloNum& a, long k)
{
    int N = a.order();
    if (gcd_l(k, N) != 1) throw std::invalid_argument("galois exponent not coprime to the order");
    long kk = mod(k, N);
    if (kk == 1 % N || N <= 2) return a;
    auto f = field(N);
    std::vector<Integer> out(f->phi);
    for (size_t i = 0; i < a.num_.size(); ++i) {
        if (a.num_[i] == 0) continue;
        const auto& r = f->red[(i * kk) % N];
        for (int m = 0; m < f->phi; ++m)
            if (r[m] != 0) out[m] += a.num_[i] * r[m];
    }
    return CycloNum(N, std::move(out), a.den_);
}

CycloNum conjugate(const CycloNum& a) { return galois(a, a.order() - 1); }

CycloNum pow(const CycloNum& a, long e)
{
    if (e < 0) return pow(inv(a), -e);
    CycloNum r(Rational(1), a.order()), b = a;
    while (e) {
        if (e & 1) r *= b;
        e >>= 1;
        if (e) b *= b;
    }
    return r;
}

Rational trace_to_Q(const CycloNum& a, const std::vector<long>& orbit)
{
    int N = a.order();
    std::vector<long> full;
    for (long k = 1; k <= std::max(N, 1); ++k)
        if (gcd_l(k, N) == 1 && (k < N || N == 1)) full.push_back(k);
    if (orbit.empty()) {
        CycloNum s = CycloNum::zero(N);
        for (long k : full) s += galois(a, k);
        return s.to_rational();
    }
    // every conjugate must occur among the orbit values, equally often
    std::vector<CycloNum> vals;
    for (long k : orbit) vals.push_back(galois(a, k));
    std::vector<int> hits(vals.size(), 0);
    for (long k : full) {
        CycloNum c = galois(a, k);
        bool found = false;
        for (size_t i = 0; i < vals.size(); ++i)
            if (vals[i] == c) {
                ++hits[i];
                found = true;
                break;
            }
        if (!found) throw std::domain_error("element is not in the subfield named by the orbit");
    }
    for (int h : hits)
        if (h != hits[0] || h * static_cast<long>(vals.size()) != static_cast<long>(full.size()))
            throw std::domain_error("element is not in the subfield named by the orbit");
    CycloNum s = CycloNum::zero(N);
    for (const auto& v : vals) s += v;
    if (!s.is_rational()) throw std::domain_error("element is not in the subfield named by the orbit");
    return s.to_rational();
}

CycloNum quantum_int(long n, const CycloNum& q)
{
    CycloNum qi = inv(q);
    if ((q - qi).is_zero()) throw std::domain_error("quantum integer at degenerate q");
    if (n == 0) return CycloNum::zero(q.order());
    if (n < 0) return -quantum_int(-n, q);
    // q^{n-1} + q^{n-3} + ... + q^{1-n}
    CycloNum q2 = q * q;
    CycloNum term = pow(qi, n - 1), s = CycloNum::zero(q.order());
    for (long m = 0; m < n; ++m) {
        s += term;
        term *= q2;
    }
    return s;
}

CycloNum quantum_factorial(long n, const CycloNum& q)
{
    CycloNum r(Rational(1), q.order());
    for (long m = 2; m <= n; ++m) r *= quantum_int(m, q);
    return r;
}

// ---------------------------------------------------------------- Embedding

Embedding::Embedding(int order, long exponent) : order_(order)
{
    if (order < 1) throw std::invalid_argument("embedding order must be positive");
    exponent_ = mod(exponent, order);
    if (gcd_l(exponent_, order) != 1 && order > 1) throw std::invalid_argument("embedding exponent not coprime to the order");
    long K = 1000000;
    K += mod(exponent_ - K, order);
    while (!is_prime(K)) K += order;
    universal_ = K;
}

Rational Embedding::angle_of(int M, long j) const
{
    long a = mod(mod(universal_, M) * mod(j, M), M);
    Rational x(a, M);
    x.canonicalize();
    return x;
}

Embedding Embedding::compose(long k) const { return Embedding(order_, exponent_ * mod(k, order_)); }

CycloNum imag_unit(const Embedding& e) { return CycloNum::zeta(4, e.universal_exponent() % 4 == 1 ? 1 : 3); }

Rational root_angle(const CycloNum& z, const Embedding& e)
{
    int n = z.order();
    int M = n % 2 ? 2 * n : n;
    CycloNum zl = z.lift(M);
    if (zl.denominator() != 1) throw std::domain_error("not a root of unity");
    for (long j = 0; j < M; ++j)
        if (CycloNum::zeta(M, j) == zl) return e.angle_of(M, j);
    throw std::domain_error("not a root of unity");
}

// ---------------------------------------------------------------- intervals

namespace {

struct Interval {
    mpfr_t lo, hi;
    explicit Interval(long prec)
    {
        mpfr_init2(lo, prec);
        mpfr_init2(hi, prec);
        mpfr_set_zero(lo, 1);
        mpfr_set_zero(hi, 1);
    }
    ~Interval()
    {
        mpfr_clear(lo);
        mpfr_clear(hi);
    }
    Interval(const Interval&) = delete;
    Interval& operator=(const Interval&) = delete;
};

// Enclosure of sum_j n_j * trig(2 pi x_j) where trig = cos (re) or sin (im).
void enclose_part(const CycloNum& a, const Embedding& e, long prec, bool imag, Interval& out)
{
    mpfr_t pi, th, v, t, err;
    mpfr_inits2(prec, pi, th, v, t, err, (mpfr_ptr)0);
    mpfr_const_pi(pi, MPFR_RNDN);
    // |theta~ - theta| <= 2^(4-prec) for theta in [0, 2 pi)
    mpfr_set_ui_2exp(err, 1, 4 - prec, MPFR_RNDU);
    const auto& nums = a.numerators();
    int M = a.order();
    for (size_t j = 0; j < nums.size(); ++j) {
        if (nums[j] == 0) continue;
        Rational x = e.angle_of(M, static_cast<long>(j));
        mpfr_mul_ui(th, pi, 2, MPFR_RNDN);
        mpfr_mul_z(th, th, x.get_num_mpz_t(), MPFR_RNDN);
        mpfr_div_z(th, th, x.get_den_mpz_t(), MPFR_RNDN);
        mpfr_t c_lo, c_hi;
        mpfr_inits2(prec, c_lo, c_hi, (mpfr_ptr)0);
        if (imag) {
            mpfr_sin(c_lo, th, MPFR_RNDD);
            mpfr_sin(c_hi, th, MPFR_RNDU);
        } else {
            mpfr_cos(c_lo, th, MPFR_RNDD);
            mpfr_cos(c_hi, th, MPFR_RNDU);
        }
        mpfr_sub(c_lo, c_lo, err, MPFR_RNDD);
        mpfr_add(c_hi, c_hi, err, MPFR_RNDU);
        const Integer& n = nums[j];
        if (n > 0) {
            mpfr_mul_z(t, c_lo, n.get_mpz_t(), MPFR_RNDD);
            mpfr_add(out.lo, out.lo, t, MPFR_RNDD);
            mpfr_mul_z(t, c_hi, n.get_mpz_t(), MPFR_RNDU);
            mpfr_add(out.hi, out.hi, t, MPFR_RNDU);
        } else {
            mpfr_mul_z(t, c_hi, n.get_mpz_t(), MPFR_RNDD);
            mpfr_add(out.lo, out.lo, t, MPFR_RNDD);
            mpfr_mul_z(t, c_lo, n.get_mpz_t(), MPFR_RNDU);
            mpfr_add(out.hi, out.hi, t, MPFR_RNDU);
        }
        mpfr_clears(c_lo, c_hi, (mpfr_ptr)0);
    }
    mpfr_div_z(out.lo, out.lo, a.denominator().get_mpz_t(), MPFR_RNDD);
    mpfr_div_z(out.hi, out.hi, a.denominator().get_mpz_t(), MPFR_RNDU);
    mpfr_clears(pi, th, v, t, err, (mpfr_ptr)0);
}

constexpr long kMaxBits = 16384;

}  // namespace

SignedInterval enclose(const CycloNum& a, const Embedding& e, long bits)
{
    Interval re(bits), im(bits);
    enclose_part(a, e, bits, false, re);
    enclose_part(a, e, bits, true, im);
    return {mpfr_get_d(re.lo, MPFR_RNDD), mpfr_get_d(re.hi, MPFR_RNDU), mpfr_get_d(im.lo, MPFR_RNDD),
            mpfr_get_d(im.hi, MPFR_RNDU), bits};
}

int sign_real(const CycloNum& a, const Embedding& e)
{
    if (a.is_zero()) return 0;
    if (a.is_rational()) return sgn(a.to_rational());
    if (conjugate(a) != a) throw std::domain_error("sign_real: value is not conjugation-fixed");
    for (long bits = 64; bits <= kMaxBits; bits *= 2) {
        Interval re(bits);
        enclose_part(a, e, bits, false, re);
        if (mpfr_sgn(re.lo) > 0) return 1;
        if (mpfr_sgn(re.hi) < 0) return -1;
    }
    throw std::runtime_error("sign_real: precision cap reached");
}

std::complex<double> to_complex(const CycloNum& a, const Embedding& e)
{
    std::complex<long double> s = 0;
    const long double two_pi = 6.283185307179586476925286766559L;
    const auto& nums = a.numerators();
    for (size_t j = 0; j < nums.size(); ++j) {
        if (nums[j] == 0) continue;
        Rational x = e.angle_of(a.order(), static_cast<long>(j));
        long double th = two_pi * x.get_d();
        Rational c(nums[j], a.denominator());
        c.canonicalize();
        s += static_cast<long double>(c.get_d()) * std::complex<long double>(std::cos(th), std::sin(th));
    }
    return {static_cast<double>(s.real()), static_cast<double>(s.imag())};
}

std::string rational_string(const Rational& q)
{
    Rational c = q;
    c.canonicalize();
    return c.get_str();
}

Rational parse_rational(const std::string& s)
{
    auto b = s.find_first_not_of(" \t\n"), e = s.find_last_not_of(" \t\n");
    std::string t = b == std::string::npos ? "" : s.substr(b, e - b + 1);
    Rational q;
    if (t.empty() || q.set_str(t, 10) != 0) throw std::invalid_argument("bad rational: " + s);
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
    q.canonicalize();
    return q;
}

}  // namespace toledo
