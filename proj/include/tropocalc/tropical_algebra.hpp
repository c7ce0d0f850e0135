#pragma once

#include <compare>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tropocalc/rational.hpp"

namespace tropo {

/// Element of the max-plus semifield: either -inf or an exact rational.
class TropNum {
 public:
  /// The tropical zero, -inf.
  TropNum() = default;
  TropNum(Rational value) : value_(std::move(value)) {}  // NOLINT(implicit)
  TropNum(long value) : value_(Rational(value)) {}       // NOLINT(implicit)

  static TropNum neg_infinity() { return TropNum(); }
  static TropNum one() { return TropNum(0L); }

  bool is_finite() const noexcept { return value_.has_value(); }
  bool is_neg_infinity() const noexcept { return !value_.has_value(); }

  /// Finite part. Precondition: is_finite().
  const Rational& value() const;

  friend bool operator==(const TropNum& a, const TropNum& b);
  friend std::strong_ordering operator<=>(const TropNum& a, const TropNum& b);

 private:
  std::optional<Rational> value_;
};

std::string to_string(const TropNum& a);
std::ostream& operator<<(std::ostream& os, const TropNum& a);

/// Tropical sum: max.
TropNum trop_add(const TropNum& a, const TropNum& b);
/// Tropical product: classical sum, -inf absorbing.
TropNum trop_mul(const TropNum& a, const TropNum& b);
/// Tropical quotient: classical difference. Throws DivisionByTropicalZero when b = -inf.
TropNum trop_div(const TropNum& a, const TropNum& b);

/// Multi-index j in Z^n.
using Exponent = std::vector<int>;

struct Monomial {
  Exponent exponent;
  TropNum coefficient;
};

/// Finite max-plus polynomial max_j (a_j + <j, x>) in n variables. Terms with
/// coefficient -inf are dropped; repeated exponents are merged by max.
class TropPolynomial {
 public:
  /// Throws InvalidArgument on an empty term list (after dropping -inf terms)
  /// or on an exponent whose length differs from `dimension`.
  TropPolynomial(int dimension, const std::vector<Monomial>& terms);
  TropPolynomial(int dimension, std::map<Exponent, Rational> terms);

  int dimension() const noexcept { return dimension_; }
  const std::map<Exponent, Rational>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }

  /// Coefficient of x^j, -inf when the monomial is absent.
  TropNum coefficient(const Exponent& j) const;
  std::vector<Exponent> support() const;

  friend bool operator==(const TropPolynomial&, const TropPolynomial&) = default;

 private:
  int dimension_ = 0;
  std::map<Exponent, Rational> terms_;
};

/// max over terms of a_j + sum_i j_i x_i. A coordinate equal to -inf is only
/// admitted when no term has a negative exponent in it (IndeterminateValue).
TropNum evaluate(const TropPolynomial& f, std::span<const TropNum> x);
TropNum evaluate(const TropPolynomial& f, std::span<const Rational> x);

/// Exponents of the terms attaining the maximum at x.
std::set<Exponent> argmax_terms(const TropPolynomial& f, std::span<const TropNum> x);
std::set<Exponent> argmax_terms(const TropPolynomial& f, std::span<const Rational> x);

/// The maximal presentation of f: every lattice point of the Newton polytope
/// gets the value of the upper concave envelope of the lifted support.
TropPolynomial canonicalize(const TropPolynomial& f);

/// Exponents whose lifted point (j, a_j) is a vertex of the upper hull.
std::set<Exponent> essential_support(const TropPolynomial& f);

/// Lattice points of the convex hull of the support.
std::vector<Exponent> newton_lattice_points(const TropPolynomial& f);

/// Parses the text grammar `coef`, `coef*x^a*y^b`, `coef*x1^a1*...` joined by
/// `+`. Variables x, y, z alias x1, x2, x3. Without `dimension` the number of
/// variables is the largest index used (at least 1); with it, exactly that
/// many. Throws ParseError.
TropPolynomial parse_polynomial(std::string_view text, std::optional<int> dimension = {});

/// Inverse of parse_polynomial; terms are ordered by total degree.
std::string to_text(const TropPolynomial& f);

}  // namespace tropo
