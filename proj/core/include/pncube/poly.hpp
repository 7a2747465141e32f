#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "pncube/multiset.hpp"

namespace pncube {

/// One monomial c * p1^e1 * ... * pk^ek with c > 0 and all ei > 0.
/// Variables are place names, sorted shortlex.
struct Monomial {
  std::int64_t coeff = 1;
  std::vector<std::pair<std::string, std::int64_t>> powers;

  bool operator==(const Monomial&) const = default;
  auto operator<=>(const Monomial&) const = default;
};

/// Polynomial over place variables with nonnegative integer coefficients,
/// in merged normal form: monomials with equal variable parts are combined,
/// zero coefficients dropped, monomials sorted. The zero polynomial has no
/// monomials; a nonzero constant is a single monomial with no variables.
class FlowPolynomial {
 public:
  FlowPolynomial() = default;
  explicit FlowPolynomial(std::vector<Monomial> monomials);

  static FlowPolynomial constant(std::int64_t c);
  /// The identity monomial on one place, evaluating to m(place).
  static FlowPolynomial variable(const std::string& place);

  const std::vector<Monomial>& monomials() const { return monomials_; }
  bool is_zero() const { return monomials_.empty(); }
  bool is_constant() const;
  /// Value of a constant polynomial (0 for the zero polynomial).
  std::int64_t constant_value() const;

  /// Evaluates at a marking; absent places count as 0.
  std::int64_t eval(const Marking& m) const;

  void add_monomial(Monomial mono);
  FlowPolynomial& operator+=(const FlowPolynomial& other);

  /// All place names appearing with positive exponent.
  std::vector<std::string> variables() const;

  /// Normal form accepted by parse_poly: "2*p1*p1 + p2 + 3", "0".
  std::string to_string() const;

  bool operator==(const FlowPolynomial&) const = default;
  auto operator<=>(const FlowPolynomial&) const = default;

 private:
  std::vector<Monomial> monomials_;
};

/// P evaluated at m; total (never fails on well-formed polynomials).
std::int64_t eval_poly(const FlowPolynomial& p, const Marking& m);

}  // namespace pncube
