#include "skewlab/monomial.hpp"

#include <sstream>
#include <stdexcept>

namespace skewlab {

Monomial::Monomial(int n) : n_(static_cast<uint8_t>(n)) {
  if (n < 1 || n > kMaxGenerators)
    throw std::invalid_argument("Monomial: number of generators out of range");
}

Monomial::Monomial(int n, const std::vector<int>& exps) : Monomial(n) {
  if (static_cast<int>(exps.size()) != n)
    throw std::invalid_argument("Monomial: exponent vector has wrong length");
  int d = 0;
  for (int i = 0; i < n; ++i) {
    if (exps[i] < 0 || exps[i] > kMaxExponent)
      throw std::invalid_argument("Monomial: exponent out of range");
    e_[i] = static_cast<uint8_t>(exps[i]);
    d += exps[i];
  }
  degree_ = static_cast<uint16_t>(d);
}

Monomial Monomial::generator(int n, int i) {
  Monomial m(n);
  m.e_[i] = 1;
  m.degree_ = 1;
  return m;
}

std::vector<int> Monomial::exp_vector() const { return std::vector<int>(e_.begin(), e_.begin() + n_); }

Monomial Monomial::times(const Monomial& o) const {
  Monomial r = *this;
  for (int i = 0; i < n_; ++i) {
    const int s = e_[i] + o.e_[i];
    if (s > kMaxExponent) throw std::overflow_error("Monomial: exponent overflow");
    r.e_[i] = static_cast<uint8_t>(s);
  }
  r.degree_ = static_cast<uint16_t>(degree_ + o.degree_);
  return r;
}

Monomial Monomial::shifted(int power) const {
  Monomial r(n_);
  r.degree_ = degree_;
  for (int i = 0; i < n_; ++i) r.e_[(i + power) % n_] = e_[i];
  return r;
}

std::string Monomial::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < n_; ++i) {
    if (e_[i] == 0) continue;
    if (!first) os << "*";
    first = false;
    os << "x" << i;
    if (e_[i] > 1) os << "^" << static_cast<int>(e_[i]);
  }
  if (first) return "1";
  return os.str();
}

std::size_t Monomial::hash() const {
  uint64_t h = 1469598103934665603ull;
  for (int i = 0; i < n_; ++i) {
    h ^= e_[i];
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

int mono_mul_sign(const Monomial& a, const Monomial& b) {
  // parity of sum_{j} b_j * (sum_{i>j} a_i)
  int suffix = 0;
  int parity = 0;
  for (int j = a.n() - 1; j >= 0; --j) {
    parity ^= (b.exp(j) & suffix & 1);
    suffix ^= (a.exp(j) & 1);
  }
  return parity ? -1 : 1;
}

int sigma_sign(const Monomial& m, int power) {
  const int n = m.n();
  power %= n;
  if (power < 0) power += n;
  if (power == 0) return 1;
  int wrapped = 0;
  for (int i = n - power; i < n; ++i) wrapped += m.exp(i);
  const int rest = m.degree() - wrapped;
  return ((wrapped & 1) && (rest & 1)) ? -1 : 1;
}

uint64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<uint64_t>(n - k + i) / static_cast<uint64_t>(i);
  return r;
}

namespace {

void enumerate(int n, int pos, int remaining, std::vector<int>& cur, std::vector<Monomial>& out) {
  if (pos == n - 1) {
    cur[pos] = remaining;
    out.emplace_back(n, cur);
    return;
  }
  for (int v = remaining; v >= 0; --v) {
    cur[pos] = v;
    enumerate(n, pos + 1, remaining - v, cur, out);
  }
}

}  // namespace

std::vector<Monomial> monomials_of_degree(int n, int d) {
  std::vector<Monomial> out;
  if (d < 0) return out;
  out.reserve(monomial_count(n, d));
  std::vector<int> cur(n, 0);
  enumerate(n, 0, d, cur, out);
  return out;
}

uint64_t monomial_rank(const Monomial& m) {
  // Count monomials that precede m: at position i every larger exponent v
  // leaves (rem - v) to spread over the remaining p = n-i-1 variables;
  // summing over v gives C(rem - a_i - 1 + p, p).
  const int n = m.n();
  uint64_t rank = 0;
  int rem = m.degree();
  for (int i = 0; i + 1 < n; ++i) {
    const int a = m.exp(i);
    const int p = n - i - 1;
    if (rem > a) rank += binomial(rem - a - 1 + p, p);
    rem -= a;
  }
  return rank;
}

}  // namespace skewlab
