// Normal-ordered monomials x_0^{a_0} ... x_{n-1}^{a_{n-1}} of the (-1)-skew
// polynomial algebra, their total order and a ranking within one degree.

#ifndef SKEWLAB_MONOMIAL_HPP
#define SKEWLAB_MONOMIAL_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace skewlab {

inline constexpr int kMaxGenerators = 32;
inline constexpr int kMaxExponent = 255;

class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(int n);
  Monomial(int n, const std::vector<int>& exps);

  static Monomial generator(int n, int i);

  int n() const { return n_; }
  int degree() const { return degree_; }
  int exp(int i) const { return e_[i]; }
  const std::array<uint8_t, kMaxGenerators>& exps() const { return e_; }
  std::vector<int> exp_vector() const;

  /// x^a * x^b without the sign.
  Monomial times(const Monomial& o) const;
  /// Shift every index by `power` (mod n); no sign.
  Monomial shifted(int power) const;

  /// "x0^2*x1", or "1" for the unit.
  std::string to_string() const;

  /// Degree first, then lexicographic with larger exponents of x0 first.
  friend bool operator<(const Monomial& a, const Monomial& b) {
    if (a.degree_ != b.degree_) return a.degree_ < b.degree_;
    for (int i = 0; i < a.n_; ++i)
      if (a.e_[i] != b.e_[i]) return a.e_[i] > b.e_[i];
    return false;
  }
  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.n_ == b.n_ && a.degree_ == b.degree_ && a.e_ == b.e_;
  }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

  std::size_t hash() const;

 private:
  std::array<uint8_t, kMaxGenerators> e_{};
  uint8_t n_ = 0;
  uint16_t degree_ = 0;
};

/// +1 or -1: the sign picked up when normal-ordering x^a x^b,
/// (-1)^{sum_{i>j} a_i b_j}.
int mono_mul_sign(const Monomial& a, const Monomial& b);

/// Sign of sigma^power applied to a normal-ordered monomial: the block of
/// letters whose index wraps past n-1 moves to the front.
int sigma_sign(const Monomial& m, int power);

/// Binomial coefficient as a 64-bit count (inputs are small here).
uint64_t binomial(int n, int k);

/// Number of monomials of degree d in n variables.
inline uint64_t monomial_count(int n, int d) { return d < 0 ? 0 : binomial(n + d - 1, d); }

/// All monomials of degree d in increasing monomial order.
std::vector<Monomial> monomials_of_degree(int n, int d);

/// Position of m among monomials_of_degree(m.n(), m.degree()).
uint64_t monomial_rank(const Monomial& m);

}  // namespace skewlab

template <>
struct std::hash<skewlab::Monomial> {
  std::size_t operator()(const skewlab::Monomial& m) const noexcept { return m.hash(); }
};

#endif  // SKEWLAB_MONOMIAL_HPP
