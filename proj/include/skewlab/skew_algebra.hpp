// The (-1)-skew polynomial algebra A = k_{-1}[x_0, ..., x_{n-1}] over Q(w),
// the cyclic shift sigma: x_i -> x_{i+1}, and the distinguished elements
// b_gamma and c_j.

#ifndef SKEWLAB_SKEW_ALGEBRA_HPP
#define SKEWLAB_SKEW_ALGEBRA_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "skewlab/cyclotomic.hpp"
#include "skewlab/monomial.hpp"

namespace skewlab {

class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class AlgebraContext {
 public:
  explicit AlgebraContext(int n);

  int n() const { return n_; }
  const CycContext& cyc() const { return *cyc_; }

  CycNumber scalar(const Rational& r) const { return CycNumber(*cyc_, r); }
  CycNumber omega(long k) const { return omega_power(*cyc_, k); }

  friend bool operator==(const AlgebraContext& a, const AlgebraContext& b) { return a.n_ == b.n_; }

 private:
  int n_;
  const CycContext* cyc_;
};

using Term = std::pair<Monomial, CycNumber>;

/// Sparse element of A. Terms are sorted by monomial order and carry no
/// zero coefficients.
class AlgElem {
 public:
  explicit AlgElem(const AlgebraContext& ctx) : ctx_(ctx) {}
  AlgElem(const AlgebraContext& ctx, std::vector<Term> terms);

  static AlgElem one(const AlgebraContext& ctx);
  static AlgElem scalar(const AlgebraContext& ctx, const CycNumber& c);
  static AlgElem monomial(const AlgebraContext& ctx, const Monomial& m);
  static AlgElem generator(const AlgebraContext& ctx, int i);

  const AlgebraContext& context() const { return ctx_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Common degree of all terms; nullopt for zero or mixed degrees.
  std::optional<int> homogeneous_degree() const;
  bool is_homogeneous() const { return is_zero() || homogeneous_degree().has_value(); }

  CycNumber coefficient(const Monomial& m) const;

  AlgElem& operator+=(const AlgElem& o);
  AlgElem& operator-=(const AlgElem& o);
  AlgElem& operator*=(const CycNumber& c);
  AlgElem operator-() const;

  friend AlgElem operator+(AlgElem a, const AlgElem& b) { return a += b; }
  friend AlgElem operator-(AlgElem a, const AlgElem& b) { return a -= b; }
  friend AlgElem operator*(AlgElem a, const CycNumber& c) { return a *= c; }
  friend AlgElem operator*(const CycNumber& c, AlgElem a) { return a *= c; }
  friend bool operator==(const AlgElem& a, const AlgElem& b) { return a.terms_ == b.terms_; }

  /// Canonical text, e.g. "(1/2)*x0^2 - (1/2)*x1^2".
  std::string to_string() const;

 private:
  AlgebraContext ctx_;
  std::vector<Term> terms_;
};

/// Sorts, merges equal monomials and drops zero coefficients.
std::vector<Term> normalize_terms(std::vector<Term> terms);

/// Product in A (OpenMP-parallel over the terms of u).
AlgElem mul(const AlgElem& u, const AlgElem& v);
/// Single-threaded reference product kept for cross-checking mul().
AlgElem mul_serial(const AlgElem& u, const AlgElem& v);
AlgElem operator*(const AlgElem& u, const AlgElem& v);
AlgElem power(const AlgElem& u, int exponent);

/// sigma^power (power taken mod n).
AlgElem sigma_apply(const AlgElem& u, int power);

/// [u, v] = uv - (-1)^{deg u deg v} vu for homogeneous u, v.
AlgElem graded_commutator(const AlgElem& u, const AlgElem& v);

/// b_gamma = (1/n) sum_i w^{i gamma} x_i.
AlgElem b_element(const AlgebraContext& ctx, long gamma);
/// c_j from the closed formula (2/n^2) sum_i w^{ij} x_i^2.
AlgElem c_element(const AlgebraContext& ctx, long j);
/// c_j as the graded commutator [b_k, b_{j-k}].
AlgElem c_via_commutator(const AlgebraContext& ctx, long j, long k);

/// True iff u commutes with every generator x_i.
bool is_central(const AlgElem& u);

/// (1/n) sum_i (w^gamma sigma)^i applied to u: the component of u in the
/// w^{-gamma}-eigenspace of sigma.
AlgElem eigen_projection(const AlgElem& u, long gamma);

/// The weight gamma with sigma(u) = w^{-gamma} u, if u is such an eigenvector.
std::optional<int> sigma_weight(const AlgElem& u);

/// Text form shared by algebra and smash terms: coefficient then body.
std::string format_term(const CycNumber& c, const std::string& body, bool first);

}  // namespace skewlab

#endif  // SKEWLAB_SKEW_ALGEBRA_HPP
