#include "glim/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "glim/error.hpp"

namespace glim {

namespace {

using Poly = std::vector<Rational>;

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Exact division of integer polynomials (divisor monic).
std::vector<Integer> divide_monic(std::vector<Integer> num, const std::vector<Integer>& den) {
  const std::size_t dn = den.size() - 1;
  std::vector<Integer> q(num.size() - dn, 0);
  for (std::size_t i = num.size(); i-- > dn;) {
    Integer c = num[i];
    q[i - dn] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
  }
  return q;
}

std::vector<Integer> compute_cyclotomic(int n, std::map<int, std::vector<Integer>>& memo) {
  auto it = memo.find(n);
  if (it != memo.end()) return it->second;
  std::vector<Integer> p(n + 1, 0);
  p[0] = -1;
  p[n] = 1;
  for (int d = 1; d < n; ++d)
    if (n % d == 0) p = divide_monic(p, compute_cyclotomic(d, memo));
  memo[n] = p;
  return p;
}

// Reduce a polynomial modulo a monic integer polynomial of degree deg.
void reduce_mod(Poly& p, const std::vector<Integer>& mod) {
  const std::size_t deg = mod.size() - 1;
  for (std::size_t i = p.size(); i-- > deg;) {
    if (p[i] == 0) continue;
    Rational c = p[i];
    for (std::size_t j = 0; j <= deg; ++j) p[i - deg + j] -= c * mod[j];
  }
  p.resize(deg, 0);
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      if (b[j] != 0) r[i + j] += a[i] * b[j];
  }
  return r;
}

// Quotient and remainder over Q.
std::pair<Poly, Poly> poly_divmod(Poly a, Poly b) {
  trim(a);
  trim(b);
  if (a.size() < b.size()) return {{}, a};
  Poly q(a.size() - b.size() + 1, 0);
  const Rational lead = b.back();
  for (std::size_t i = a.size(); i-- >= b.size();) {
    Rational c = a[i] / lead;
    q[i - b.size() + 1] = c;
    if (c != 0)
      for (std::size_t j = 0; j < b.size(); ++j) a[i - b.size() + 1 + j] -= c * b[j];
    if (i == b.size() - 1) break;
  }
  trim(a);
  return {q, a};
}

Poly poly_sub(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

}  // namespace

CyclotomicField::CyclotomicField(int n) : n_(n) {
  GLIM_CHECK(n >= 1, "cyclotomic conductor must be positive");
  static std::map<int, std::vector<Integer>> memo;
  static std::mutex memo_mutex;
  {
    std::lock_guard<std::mutex> lock(memo_mutex);
    poly_ = compute_cyclotomic(n, memo);
  }
  phi_ = static_cast<int>(poly_.size()) - 1;
  powers_.resize(n);
  for (int k = 0; k < n; ++k) {
    Poly p(k + 1, 0);
    p[k] = 1;
    reduce_mod(p, poly_);
    powers_[k] = std::move(p);
  }
  for (int k = 1; k <= n; ++k)
    if (std::gcd(k, n) == 1) units_.push_back(k % n == 0 ? 0 : k);
  if (n == 1) units_ = {0};
}

std::shared_ptr<const CyclotomicField> CyclotomicField::get(int n) {
  static std::map<int, std::shared_ptr<const CyclotomicField>> cache;
  static std::mutex m;
  std::lock_guard<std::mutex> lock(m);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  auto f = std::make_shared<const CyclotomicField>(n);
  cache.emplace(n, f);
  return f;
}

const std::vector<Rational>& CyclotomicField::zeta_power(long k) const {
  long r = k % n_;
  if (r < 0) r += n_;
  return powers_[static_cast<std::size_t>(r)];
}

CycNum::CycNum(int n) : field_(CyclotomicField::get(n)), c_(field_->degree(), 0) {}

CycNum::CycNum(int n, const Rational& q) : CycNum(n) { c_[0] = q; }

CycNum::CycNum(std::shared_ptr<const CyclotomicField> f, std::vector<Rational> coeffs)
    : field_(std::move(f)), c_(std::move(coeffs)) {
  GLIM_ASSERT(static_cast<int>(c_.size()) == field_->degree(), "CycNum: coefficient length");
  for (auto& x : c_) x.canonicalize();
}

CycNum CycNum::zeta(int n, long k) {
  auto f = CyclotomicField::get(n);
  return CycNum(f, f->zeta_power(k));
}

bool CycNum::is_zero() const {
  for (const auto& x : c_)
    if (x != 0) return false;
  return true;
}

bool CycNum::is_rational() const {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

Rational CycNum::to_rational() const {
  GLIM_CHECK(is_rational(), "CycNum is not rational: " + to_string());
  return c_[0];
}

std::pair<CycNum, CycNum> common_field(const CycNum& a, const CycNum& b) {
  if (a.conductor() == b.conductor()) return {a, b};
  const int m = std::lcm(a.conductor(), b.conductor());
  return {a.lift(m), b.lift(m)};
}

CycNum CycNum::operator+(const CycNum& o) const {
  if (o.conductor() != conductor()) {
    auto [x, y] = common_field(*this, o);
    return x + y;
  }
  CycNum r = *this;
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] += o.c_[i];
  return r;
}

CycNum& CycNum::operator+=(const CycNum& o) {
  if (o.conductor() != conductor()) return *this = *this + o;
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

CycNum& CycNum::operator-=(const CycNum& o) {
  if (o.conductor() != conductor()) return *this = *this - o;
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

CycNum CycNum::operator-(const CycNum& o) const {
  CycNum r = *this;
  r -= o;
  return r;
}

CycNum CycNum::operator-() const {
  CycNum r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

CycNum CycNum::operator*(const CycNum& o) const {
  if (o.conductor() != conductor()) {
    auto [x, y] = common_field(*this, o);
    return x * y;
  }
  Poly p = poly_mul(c_, o.c_);
  if (p.empty()) return CycNum(field_, Poly(c_.size(), 0));
  reduce_mod(p, field_->cyclotomic_polynomial());
  return CycNum(field_, std::move(p));
}

CycNum CycNum::operator*(const Rational& q) const {
  CycNum r = *this;
  for (auto& x : r.c_) x *= q;
  return r;
}

bool CycNum::operator==(const CycNum& o) const {
  if (o.conductor() != conductor()) {
    auto [x, y] = common_field(*this, o);
    return x.c_ == y.c_;
  }
  return c_ == o.c_;
}

CycNum CycNum::inverse() const {
  GLIM_CHECK(!is_zero(), "division by zero in Q(zeta_n)");
  // Extended Euclid: s*a + t*Phi = 1.
  Poly a = c_;
  trim(a);
  Poly m(field_->cyclotomic_polynomial().begin(), field_->cyclotomic_polynomial().end());
  Poly r0 = m, r1 = a;
  Poly s0 = {}, s1 = {Rational(1)};
  while (!(r1.size() == 1)) {
    GLIM_ASSERT(!r1.empty(), "CycNum::inverse: non-invertible element");
    auto [q, r] = poly_divmod(r0, r1);
    Poly s2 = poly_sub(s0, poly_mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  Rational inv = 1 / r1[0];
  for (auto& x : s1) x *= inv;
  reduce_mod(s1, field_->cyclotomic_polynomial());
  return CycNum(field_, std::move(s1));
}

CycNum CycNum::times_zeta(long k) const {
  CycNum r(conductor());
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    const auto& z = field_->zeta_power(static_cast<long>(i) + k);
    for (std::size_t j = 0; j < z.size(); ++j)
      if (z[j] != 0) r.c_[j] += c_[i] * z[j];
  }
  return r;
}

CycNum CycNum::galois(int k) const {
  CycNum r(conductor());
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    const auto& z = field_->zeta_power(static_cast<long>(i) * k);
    for (std::size_t j = 0; j < z.size(); ++j)
      if (z[j] != 0) r.c_[j] += c_[i] * z[j];
  }
  return r;
}

Rational CycNum::norm() const {
  CycNum acc(conductor(), Rational(1));
  for (int k : field_->galois_units()) acc = acc * galois(k == 0 ? 1 : k);
  return acc.to_rational();
}

CycNum CycNum::lift(int m) const {
  GLIM_CHECK(m % conductor() == 0, "CycNum::lift: target conductor must be a multiple");
  if (m == conductor()) return *this;
  const int step = m / conductor();
  CycNum r(m);
  const auto& f = r.field();
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    const auto& z = f.zeta_power(static_cast<long>(i) * step);
    for (std::size_t j = 0; j < z.size(); ++j)
      if (z[j] != 0) r.c_[j] += c_[i] * z[j];
  }
  return r;
}

std::optional<int> CycNum::root_of_unity_exponent() const {
  const int n = conductor();
  for (int k = 0; k < n; ++k)
    if (field_->zeta_power(k) == c_) return k;
  return std::nullopt;
}

Integer CycNum::denominator() const {
  Integer d = 1;
  for (const auto& x : c_) {
    Integer den = x.get_den();
    mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), den.get_mpz_t());
  }
  return d;
}

std::string CycNum::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0)
      os << c_[i];
    else
      os << c_[i] << "*z" << conductor() << "^" << i;
  }
  if (first) os << "0";
  return os.str();
}

CycNum root_of_unity(int n, long k) { return CycNum::zeta(n, k); }

Rational norm_to_Q(const CycNum& x) { return x.norm(); }

long padic_valuation(const Rational& q, unsigned long p) {
  GLIM_CHECK(q != 0, "valuation of zero");
  long v = 0;
  Integer num = q.get_num(), den = q.get_den();
  while (mpz_divisible_ui_p(num.get_mpz_t(), p)) {
    num /= p;
    ++v;
  }
  while (mpz_divisible_ui_p(den.get_mpz_t(), p)) {
    den /= p;
    --v;
  }
  return v;
}

std::vector<unsigned long> prime_factors(Integer z) {
  std::vector<unsigned long> out;
  z = abs(z);
  GLIM_CHECK(z != 0, "prime_factors of zero");
  for (unsigned long p = 2; z > 1; ++p) {
    if (Integer(p) * p > z) {
      GLIM_CHECK(z.fits_ulong_p(), "prime factor too large");
      out.push_back(z.get_ui());
      break;
    }
    if (mpz_divisible_ui_p(z.get_mpz_t(), p)) {
      out.push_back(p);
      while (mpz_divisible_ui_p(z.get_mpz_t(), p)) z /= p;
    }
  }
  return out;
}

}  // namespace glim
