// The skew group algebra A#C_n. Basis elements are x^a # s^i with the
// normal-ordered monomial on the left and the group element on the right;
// (a # s^i)(b # s^j) = a sigma^i(b) # s^{i+j}.

#ifndef SKEWLAB_SMASH_PRODUCT_HPP
#define SKEWLAB_SMASH_PRODUCT_HPP

#include <string>
#include <vector>

#include "skewlab/skew_algebra.hpp"

namespace skewlab {

struct SmashKey {
  Monomial mono;
  int power = 0;  // reduced mod n

  friend bool operator<(const SmashKey& a, const SmashKey& b) {
    if (a.mono != b.mono) return a.mono < b.mono;
    return a.power < b.power;
  }
  friend bool operator==(const SmashKey& a, const SmashKey& b) {
    return a.power == b.power && a.mono == b.mono;
  }
};

using SmashTerm = std::pair<SmashKey, CycNumber>;

class SmashElem {
 public:
  explicit SmashElem(const AlgebraContext& ctx) : ctx_(ctx) {}
  SmashElem(const AlgebraContext& ctx, std::vector<SmashTerm> terms);

  /// a # 1
  static SmashElem embed(const AlgElem& a);
  /// 1 # s^power
  static SmashElem group(const AlgebraContext& ctx, int power);
  static SmashElem basis(const AlgebraContext& ctx, const Monomial& m, int power);

  const AlgebraContext& context() const { return ctx_; }
  const std::vector<SmashTerm>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  std::optional<int> homogeneous_degree() const;
  bool is_homogeneous() const { return is_zero() || homogeneous_degree().has_value(); }
  /// True when every term has group power 0.
  bool is_plain() const;
  /// The A-part of a plain element; throws InvalidInput otherwise.
  AlgElem to_plain() const;

  SmashElem& operator+=(const SmashElem& o);
  SmashElem& operator-=(const SmashElem& o);
  SmashElem& operator*=(const CycNumber& c);
  SmashElem operator-() const;

  friend SmashElem operator+(SmashElem a, const SmashElem& b) { return a += b; }
  friend SmashElem operator-(SmashElem a, const SmashElem& b) { return a -= b; }
  friend SmashElem operator*(SmashElem a, const CycNumber& c) { return a *= c; }
  friend bool operator==(const SmashElem& a, const SmashElem& b) { return a.terms_ == b.terms_; }

  /// Canonical text, e.g. "(1/2)*x0 # s - x1 # s^2".
  std::string to_string() const;

 private:
  AlgebraContext ctx_;
  std::vector<SmashTerm> terms_;
};

SmashElem smash_mul(const SmashElem& u, const SmashElem& v);
SmashElem smash_mul_serial(const SmashElem& u, const SmashElem& v);
SmashElem operator*(const SmashElem& u, const SmashElem& v);
SmashElem power(const SmashElem& u, int exponent);
SmashElem graded_commutator(const SmashElem& u, const SmashElem& v);

/// e_gamma = (1/n) sum_i (w^gamma s)^i.
SmashElem e_element(const AlgebraContext& ctx, long gamma);

struct RelationCheck {
  std::string relation;
  bool holds = false;
};

struct PresentationReport {
  int n = 0;
  std::vector<RelationCheck> checks;
  bool all_hold() const;
};

/// Checks e_a b_g = b_g e_{a-g}, e_i e_j = delta_ij e_i and
/// [b_0, b_k] = [b_l, b_{k-l}] inside the concrete A#C_n.
PresentationReport presentation_check(const AlgebraContext& ctx);

/// (1 # s) e_0 = e_0 (1 # s) = e_0.
bool sigma_central_on_e0(const AlgebraContext& ctx);

}  // namespace skewlab

#endif  // SKEWLAB_SMASH_PRODUCT_HPP
