#include "butson/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace butson {

int euler_phi(int n) {
  if (n < 1)
    throw std::invalid_argument("euler_phi: n must be positive");
  int result = n;
  for (int p : prime_divisors(n))
    result = result / p * (p - 1);
  return result;
}

std::vector<int> prime_divisors(int n) {
  std::vector<int> primes;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      primes.push_back(p);
      while (n % p == 0)
        n /= p;
    }
  }
  if (n > 1)
    primes.push_back(n);
  return primes;
}

int lcm_int(int a, int b) { return std::lcm(a, b); }

namespace {

// Exact quotient of a by the monic polynomial b.
IntPoly divide_monic(IntPoly a, const IntPoly &b) {
  const int db = static_cast<int>(b.size()) - 1;
  const int da = static_cast<int>(a.size()) - 1;
  IntPoly q(da - db + 1);
  for (int i = da; i >= db; --i) {
    Integer c = a[i];
    q[i - db] = c;
    if (c != 0)
      for (int j = 0; j <= db; ++j)
        a[i - db + j] -= c * b[j];
  }
  for (int i = 0; i < db; ++i)
    if (a[i] != 0)
      throw std::logic_error("divide_monic: nonzero remainder");
  return q;
}

IntPoly compute_cyclo_poly(int L) {
  IntPoly num(L + 1);
  num[L] = 1;
  num[0] = -1;
  for (int d = 1; d < L; ++d)
    if (L % d == 0)
      num = divide_monic(std::move(num), cyclo_poly(d));
  return num;
}

} // namespace

const IntPoly &cyclo_poly(int L) {
  if (L < 1)
    throw std::invalid_argument("cyclo_poly: L must be positive");
  static std::recursive_mutex mu;
  static std::map<int, std::unique_ptr<IntPoly>> cache;
  std::lock_guard lock(mu);
  auto it = cache.find(L);
  if (it != cache.end())
    return *it->second;
  auto poly = std::make_unique<IntPoly>(compute_cyclo_poly(L));
  return *cache.emplace(L, std::move(poly)).first->second;
}

std::string poly_to_string(const IntPoly &p, char var) {
  std::ostringstream out;
  bool first = true;
  for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i) {
    const Integer &c = p[i];
    if (c == 0)
      continue;
    Integer mag = abs(c);
    if (first)
      out << (c < 0 ? "-" : "");
    else
      out << (c < 0 ? " - " : " + ");
    first = false;
    if (i == 0 || mag != 1)
      out << mag.get_str();
    if (i > 0) {
      if (mag != 1)
        out << '*';
      out << var;
      if (i > 1)
        out << '^' << i;
    }
  }
  if (first)
    out << '0';
  return out.str();
}

// ---------------------------------------------------------------------------

RootOfUnity::RootOfUnity(int order, std::int64_t exponent) : order_(order), exponent_(0) {
  if (order < 1)
    throw std::invalid_argument("RootOfUnity: order must be positive");
  exponent_ = mod_pos(exponent, order);
}

RootOfUnity RootOfUnity::minimal() const {
  const int g = std::gcd(order_, exponent_);
  return {order_ / g, exponent_ / g};
}

int RootOfUnity::exponent_at(int level) const {
  const RootOfUnity m = minimal();
  if (level % m.order_ != 0)
    throw std::invalid_argument("RootOfUnity::exponent_at: order does not divide level");
  return m.exponent_ * (level / m.order_);
}

std::complex<double> RootOfUnity::value() const {
  return std::polar(1.0, 2.0 * std::numbers::pi * exponent_ / order_);
}

std::string RootOfUnity::to_string() const {
  const RootOfUnity m = minimal();
  if (m.order_ == 1)
    return "1";
  if (m.order_ == 2)
    return "-1";
  std::string s = "z" + std::to_string(m.order_);
  if (m.exponent_ != 1)
    s += "^" + std::to_string(m.exponent_);
  return s;
}

RootOfUnity operator*(const RootOfUnity &a, const RootOfUnity &b) {
  const int L = std::lcm(a.order_, b.order_);
  return {L, static_cast<std::int64_t>(a.exponent_) * (L / a.order_) +
                 static_cast<std::int64_t>(b.exponent_) * (L / b.order_)};
}

bool operator==(const RootOfUnity &a, const RootOfUnity &b) {
  const RootOfUnity x = a.minimal(), y = b.minimal();
  return x.order_ == y.order_ && x.exponent_ == y.exponent_;
}

// ---------------------------------------------------------------------------

namespace detail {

struct CycloField {
  explicit CycloField(int L) : level(L), modulus(cyclo_poly(L)) {
    degree = static_cast<int>(modulus.size()) - 1;
    for (int j = 0; j < degree; ++j)
      if (modulus[j] != 0)
        support.push_back(j);
  }

  // Reduces p modulo Phi_L in place, leaving exactly `degree` coefficients.
  void reduce(std::vector<Integer> &p) const {
    Integer c;
    for (int top = static_cast<int>(p.size()) - 1; top >= degree; --top) {
      if (sgn(p[top]) == 0)
        continue;
      c = p[top];
      const int base = top - degree;
      for (int j : support)
        mpz_submul(p[base + j].get_mpz_t(), c.get_mpz_t(), modulus[j].get_mpz_t());
      p[top] = 0;
    }
    p.resize(degree);
  }

  int level;
  int degree;
  IntPoly modulus;
  std::vector<int> support;
};

const CycloField *field(int level) {
  if (level < 1)
    throw std::invalid_argument("cyclotomic level must be positive");
  static std::mutex mu;
  static std::map<int, std::unique_ptr<CycloField>> cache;
  // cyclo_poly takes its own lock; build outside ours.
  {
    std::lock_guard lock(mu);
    auto it = cache.find(level);
    if (it != cache.end())
      return it->second.get();
  }
  auto f = std::make_unique<CycloField>(level);
  std::lock_guard lock(mu);
  return cache.emplace(level, std::move(f)).first->second.get();
}

} // namespace detail

CycloElement::CycloElement() : CycloElement(zero(1)) {}

CycloElement::CycloElement(const detail::CycloField *field, std::vector<Integer> coeffs)
    : field_(field), coeffs_(std::move(coeffs)) {}

CycloElement CycloElement::zero(int level) {
  const auto *f = detail::field(level);
  return {f, std::vector<Integer>(f->degree)};
}

CycloElement CycloElement::integer(int level, const Integer &value) {
  CycloElement e = zero(level);
  e.coeffs_[0] = value;
  return e;
}

CycloElement CycloElement::root(int level, std::int64_t exponent) {
  const auto *f = detail::field(level);
  const int e = mod_pos(exponent, level);
  std::vector<Integer> p(std::max(e + 1, f->degree));
  p[e] = 1;
  f->reduce(p);
  return {f, std::move(p)};
}

CycloElement CycloElement::root_sum(int level, std::span<const int> counts) {
  const auto *f = detail::field(level);
  std::vector<Integer> p(std::max<std::size_t>(counts.size(), f->degree));
  for (std::size_t e = 0; e < counts.size(); ++e)
    p[e] = counts[e];
  f->reduce(p);
  return {f, std::move(p)};
}

int CycloElement::level() const { return field_->level; }

bool CycloElement::is_zero() const {
  for (const auto &c : coeffs_)
    if (sgn(c) != 0)
      return false;
  return true;
}

std::optional<Integer> CycloElement::as_integer() const {
  for (std::size_t j = 1; j < coeffs_.size(); ++j)
    if (sgn(coeffs_[j]) != 0)
      return std::nullopt;
  return coeffs_[0];
}

CycloElement CycloElement::conj() const {
  const int L = field_->level;
  std::vector<Integer> p(std::max(L, field_->degree));
  for (int j = 0; j < degree(); ++j)
    p[(L - j) % L] += coeffs_[j];
  field_->reduce(p);
  return {field_, std::move(p)};
}

CycloElement CycloElement::embed(int target) const {
  const int L = field_->level;
  if (target < 1 || target % L != 0)
    throw std::invalid_argument("CycloElement::embed: target level " + std::to_string(target) +
                                " is not a multiple of " + std::to_string(L));
  if (target == L)
    return *this;
  const auto *f = detail::field(target);
  const int r = target / L;
  std::vector<Integer> p(std::max((degree() - 1) * r + 1, f->degree));
  for (int j = 0; j < degree(); ++j)
    p[j * r] = coeffs_[j];
  f->reduce(p);
  return {f, std::move(p)};
}

CycloElement CycloElement::mul_root(std::int64_t e) const {
  const int s = mod_pos(e, field_->level);
  std::vector<Integer> p(degree() + s);
  for (int j = 0; j < degree(); ++j)
    p[j + s] = coeffs_[j];
  field_->reduce(p);
  return {field_, std::move(p)};
}

std::optional<CycloElement> CycloElement::divide_exact(const Integer &d) const {
  if (d == 0)
    throw std::domain_error("CycloElement::divide_exact: division by zero");
  std::vector<Integer> q(coeffs_.size());
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    if (!mpz_divisible_p(coeffs_[j].get_mpz_t(), d.get_mpz_t()))
      return std::nullopt;
    mpz_divexact(q[j].get_mpz_t(), coeffs_[j].get_mpz_t(), d.get_mpz_t());
  }
  return CycloElement{field_, std::move(q)};
}

std::complex<double> CycloElement::to_complex() const {
  std::complex<double> z = 0.0;
  const double step = 2.0 * std::numbers::pi / field_->level;
  for (int j = 0; j < degree(); ++j)
    if (sgn(coeffs_[j]) != 0)
      z += coeffs_[j].get_d() * std::polar(1.0, step * j);
  return z;
}

std::string CycloElement::to_string() const {
  IntPoly p(coeffs_.begin(), coeffs_.end());
  std::string body = poly_to_string(p, 'z');
  return body + " [L=" + std::to_string(level()) + "]";
}

void CycloElement::require_same_level(const CycloElement &other, const char *op) const {
  if (field_ != other.field_)
    throw std::invalid_argument(std::string("CycloElement ") + op + ": level mismatch (" +
                                std::to_string(level()) + " vs " + std::to_string(other.level()) +
                                ")");
}

CycloElement CycloElement::operator-() const {
  CycloElement r = *this;
  for (auto &c : r.coeffs_)
    c = -c;
  return r;
}

CycloElement &CycloElement::operator+=(const CycloElement &rhs) {
  require_same_level(rhs, "add");
  for (std::size_t j = 0; j < coeffs_.size(); ++j)
    coeffs_[j] += rhs.coeffs_[j];
  return *this;
}

CycloElement &CycloElement::operator-=(const CycloElement &rhs) {
  require_same_level(rhs, "subtract");
  for (std::size_t j = 0; j < coeffs_.size(); ++j)
    coeffs_[j] -= rhs.coeffs_[j];
  return *this;
}

CycloElement &CycloElement::operator*=(const CycloElement &rhs) { return *this = *this * rhs; }

CycloElement &CycloElement::operator*=(const Integer &rhs) {
  for (auto &c : coeffs_)
    c *= rhs;
  return *this;
}

CycloElement operator*(const CycloElement &a, const CycloElement &b) {
  a.require_same_level(b, "multiply");
  const int da = a.degree(), db = b.degree();
  std::vector<Integer> p(da + db - 1);
  for (int i = 0; i < da; ++i) {
    if (sgn(a.coeffs_[i]) == 0)
      continue;
    for (int j = 0; j < db; ++j)
      if (sgn(b.coeffs_[j]) != 0)
        mpz_addmul(p[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
  }
  a.field_->reduce(p);
  return {a.field_, std::move(p)};
}

bool operator==(const CycloElement &a, const CycloElement &b) {
  return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
}

// ---------------------------------------------------------------------------

namespace {

// m = square * squarefree
std::pair<int, int> split_square(int m) {
  int square_root = 1, squarefree = 1;
  for (int p : prime_divisors(m)) {
    int e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    for (int i = 0; i < e / 2; ++i)
      square_root *= p;
    if (e % 2)
      squarefree *= p;
  }
  return {square_root, squarefree};
}

int legendre(int a, int p) {
  long long r = 1, base = a % p, e = (p - 1) / 2;
  while (e) {
    if (e & 1)
      r = r * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return r == 1 ? 1 : -1;
}

} // namespace

int sqrt_conductor(int m) {
  if (m < 1)
    throw std::invalid_argument("sqrt_conductor: m must be positive");
  const int s = split_square(m).second;
  if (s == 1)
    return 1;
  return s % 4 == 1 ? s : 4 * s;
}

CycloElement sqrt_embed(int m, int L) {
  const int conductor = sqrt_conductor(m);
  if (L < 1 || L % conductor != 0)
    throw std::invalid_argument("sqrt_embed: conductor " + std::to_string(conductor) +
                                " of sqrt(" + std::to_string(m) + ") does not divide level " +
                                std::to_string(L));
  const auto [c, s] = split_square(m);
  CycloElement g = CycloElement::integer(L, c);
  int three_mod_four = 0;
  for (int p : prime_divisors(s)) {
    if (p == 2) {
      g *= CycloElement::root(L, L / 8) - CycloElement::root(L, 3 * L / 8);
      continue;
    }
    // quadratic Gauss sum: sqrt(p) for p = 1 mod 4, i*sqrt(p) for p = 3 mod 4
    CycloElement gauss = CycloElement::zero(L);
    for (int a = 1; a < p; ++a)
      gauss += CycloElement::integer(L, legendre(a, p)) * CycloElement::root(L, a * (L / p));
    g *= gauss;
    if (p % 4 == 3)
      ++three_mod_four;
  }
  switch (three_mod_four % 4) {
  case 1:
    return g.mul_root(3 * L / 4);
  case 2:
    return -g;
  case 3:
    return g.mul_root(L / 4);
  default:
    return g;
  }
}

RootDetector::RootDetector(const CycloElement &scale) : level_(scale.level()) {
  if (scale.is_zero())
    throw std::invalid_argument("RootDetector: scale must be nonzero");
  table_.reserve(level_);
  table_.push_back(scale);
  for (int e = 1; e < level_; ++e)
    table_.push_back(table_.back().mul_root(1));
}

std::optional<int> RootDetector::find(const CycloElement &x) const {
  if (x.level() != level_)
    throw std::invalid_argument("RootDetector::find: level mismatch");
  for (int e = 0; e < level_; ++e)
    if (table_[e] == x)
      return e;
  return std::nullopt;
}

std::optional<RootOfUnity> detect_scaled_root(const CycloElement &x, const CycloElement &scale) {
  if (auto e = RootDetector(scale).find(x))
    return RootOfUnity(x.level(), *e);
  return std::nullopt;
}

} // namespace butson
