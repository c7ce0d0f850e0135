#include "tropocalc/tropical_algebra.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "tropocalc/convex.hpp"
#include "tropocalc/error.hpp"

namespace tropo {

const Rational& TropNum::value() const {
  if (!value_) throw Error(ErrorCode::InvalidArgument, "value() of tropical zero (-inf)");
  return *value_;
}

bool operator==(const TropNum& a, const TropNum& b) {
  if (a.is_finite() != b.is_finite()) return false;
  return !a.is_finite() || *a.value_ == *b.value_;
}

std::strong_ordering operator<=>(const TropNum& a, const TropNum& b) {
  if (!a.is_finite() || !b.is_finite()) {
    return a.is_finite() <=> b.is_finite();
  }
  int c = cmp(*a.value_, *b.value_);
  return c <=> 0;
}

std::string to_string(const TropNum& a) { return a.is_finite() ? to_string(a.value()) : "-inf"; }

std::ostream& operator<<(std::ostream& os, const TropNum& a) { return os << to_string(a); }

TropNum trop_add(const TropNum& a, const TropNum& b) { return a < b ? b : a; }

TropNum trop_mul(const TropNum& a, const TropNum& b) {
  if (!a.is_finite() || !b.is_finite()) return TropNum::neg_infinity();
  return TropNum(Rational(a.value() + b.value()));
}

TropNum trop_div(const TropNum& a, const TropNum& b) {
  if (!b.is_finite()) {
    throw Error(ErrorCode::DivisionByTropicalZero, "tropical division by -inf");
  }
  if (!a.is_finite()) return TropNum::neg_infinity();
  return TropNum(Rational(a.value() - b.value()));
}

TropPolynomial::TropPolynomial(int dimension, const std::vector<Monomial>& terms)
    : dimension_(dimension) {
  if (dimension <= 0) throw Error(ErrorCode::InvalidArgument, "polynomial dimension must be positive");
  for (const auto& t : terms) {
    if (static_cast<int>(t.exponent.size()) != dimension) {
      throw Error(ErrorCode::InvalidArgument, "exponent length differs from polynomial dimension");
    }
    if (!t.coefficient.is_finite()) continue;
    auto [it, inserted] = terms_.emplace(t.exponent, t.coefficient.value());
    if (!inserted && it->second < t.coefficient.value()) it->second = t.coefficient.value();
  }
  if (terms_.empty()) throw Error(ErrorCode::InvalidArgument, "empty tropical polynomial");
}

TropPolynomial::TropPolynomial(int dimension, std::map<Exponent, Rational> terms)
    : dimension_(dimension), terms_(std::move(terms)) {
  if (dimension <= 0) throw Error(ErrorCode::InvalidArgument, "polynomial dimension must be positive");
  if (terms_.empty()) throw Error(ErrorCode::InvalidArgument, "empty tropical polynomial");
  for (const auto& [j, a] : terms_) {
    if (static_cast<int>(j.size()) != dimension) {
      throw Error(ErrorCode::InvalidArgument, "exponent length differs from polynomial dimension");
    }
  }
}

TropNum TropPolynomial::coefficient(const Exponent& j) const {
  auto it = terms_.find(j);
  if (it == terms_.end()) return TropNum::neg_infinity();
  return TropNum(it->second);
}

std::vector<Exponent> TropPolynomial::support() const {
  std::vector<Exponent> out;
  out.reserve(terms_.size());
  for (const auto& [j, a] : terms_) out.push_back(j);
  return out;
}

namespace {

void check_point(const TropPolynomial& f, std::span<const TropNum> x) {
  if (static_cast<int>(x.size()) != f.dimension()) {
    throw Error(ErrorCode::DimensionMismatch, "point dimension differs from polynomial dimension");
  }
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].is_finite()) continue;
    for (const auto& [j, a] : f.terms()) {
      if (j[i] < 0) {
        throw Error(ErrorCode::IndeterminateValue,
                    "negative exponent meets a -inf coordinate");
      }
    }
  }
}

TropNum term_value(const Exponent& j, const Rational& a, std::span<const TropNum> x) {
  Rational v = a;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (j[i] == 0) continue;
    if (!x[i].is_finite()) return TropNum::neg_infinity();
    v += j[i] * x[i].value();
  }
  return TropNum(std::move(v));
}

std::vector<TropNum> lift(std::span<const Rational> x) {
  return std::vector<TropNum>(x.begin(), x.end());
}

}  // namespace

TropNum evaluate(const TropPolynomial& f, std::span<const TropNum> x) {
  check_point(f, x);
  TropNum best = TropNum::neg_infinity();
  for (const auto& [j, a] : f.terms()) best = trop_add(best, term_value(j, a, x));
  return best;
}

TropNum evaluate(const TropPolynomial& f, std::span<const Rational> x) {
  auto lifted = lift(x);
  return evaluate(f, lifted);
}

std::set<Exponent> argmax_terms(const TropPolynomial& f, std::span<const TropNum> x) {
  check_point(f, x);
  std::vector<std::pair<const Exponent*, TropNum>> values;
  TropNum best = TropNum::neg_infinity();
  for (const auto& [j, a] : f.terms()) {
    values.emplace_back(&j, term_value(j, a, x));
    best = trop_add(best, values.back().second);
  }
  std::set<Exponent> out;
  for (const auto& [j, v] : values) {
    if (v == best) out.insert(*j);
  }
  return out;
}

std::set<Exponent> argmax_terms(const TropPolynomial& f, std::span<const Rational> x) {
  auto lifted = lift(x);
  return argmax_terms(f, lifted);
}

namespace {

void split_terms(const TropPolynomial& f, std::vector<Exponent>& points,
                 std::vector<Rational>& values) {
  for (const auto& [j, a] : f.terms()) {
    points.push_back(j);
    values.push_back(a);
  }
}

void box_points(const std::vector<Exponent>& support, std::size_t axis, Exponent& current,
                const Exponent& lo, const Exponent& hi, std::vector<Exponent>& out) {
  if (axis == lo.size()) {
    out.push_back(current);
    return;
  }
  for (int v = lo[axis]; v <= hi[axis]; ++v) {
    current[axis] = v;
    box_points(support, axis + 1, current, lo, hi, out);
  }
}

}  // namespace

std::vector<Exponent> newton_lattice_points(const TropPolynomial& f) {
  const auto support = f.support();
  const auto n = static_cast<std::size_t>(f.dimension());
  Exponent lo = support.front();
  Exponent hi = support.front();
  for (const auto& j : support) {
    for (std::size_t i = 0; i < n; ++i) {
      lo[i] = std::min(lo[i], j[i]);
      hi[i] = std::max(hi[i], j[i]);
    }
  }
  std::vector<Exponent> box;
  Exponent current(n);
  box_points(support, 0, current, lo, hi, box);
  std::vector<Rational> zeros(support.size());
  std::vector<Exponent> out;
  for (const auto& j : box) {
    if (convex::concave_envelope_at(support, zeros, j)) out.push_back(j);
  }
  return out;
}

TropPolynomial canonicalize(const TropPolynomial& f) {
  std::vector<Exponent> points;
  std::vector<Rational> values;
  split_terms(f, points, values);
  std::map<Exponent, Rational> out;
  for (const auto& j : newton_lattice_points(f)) {
    if (auto v = convex::concave_envelope_at(points, values, j)) out.emplace(j, *v);
  }
  return TropPolynomial(f.dimension(), std::move(out));
}

std::set<Exponent> essential_support(const TropPolynomial& f) {
  std::set<Exponent> out;
  for (const auto& [j, a] : f.terms()) {
    std::vector<Exponent> points;
    std::vector<Rational> values;
    for (const auto& [k, b] : f.terms()) {
      if (k == j) continue;
      points.push_back(k);
      values.push_back(b);
    }
    auto env = convex::concave_envelope_at(points, values, j);
    if (!env || *env < a) out.insert(j);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Text grammar

namespace {

class PolynomialParser {
 public:
  explicit PolynomialParser(std::string_view text) : text_(text) {}

  TropPolynomial parse(std::optional<int> dimension) {
    std::vector<std::pair<std::map<int, int>, Rational>> terms;
    skip_space();
    if (at_end()) fail("empty polynomial");
    while (true) {
      terms.push_back(term());
      skip_space();
      if (at_end()) break;
      if (peek() != '+') fail("expected '+'");
      ++pos_;
      skip_space();
      if (at_end()) fail("dangling '+'");
    }
    int dim = dimension.value_or(1);
    for (const auto& [vars, coef] : terms) {
      for (const auto& [var, e] : vars) {
        if (dimension && var > *dimension) {
          throw ParseError(0, "variable x" + std::to_string(var) + " exceeds dimension " +
                                  std::to_string(*dimension));
        }
        dim = std::max(dim, var);
      }
    }
    std::vector<Monomial> monomials;
    for (auto& [vars, coef] : terms) {
      Exponent j(dim, 0);
      for (const auto& [var, e] : vars) j[var - 1] += e;
      monomials.push_back({std::move(j), TropNum(coef)});
    }
    return TropPolynomial(dim, monomials);
  }

 private:
  std::pair<std::map<int, int>, Rational> term() {
    Rational coef = 0;
    bool has_coef = false;
    if (starts_number()) {
      coef = number();
      has_coef = true;
    }
    std::map<int, int> vars;
    skip_space();
    bool need_factor = false;
    if (!at_end() && peek() == '*') {
      if (!has_coef) fail("unexpected '*'");
      ++pos_;
      need_factor = true;
    }
    while (true) {
      skip_space();
      if (at_end() || !is_var_start(peek())) {
        if (need_factor) fail("expected a variable");
        break;
      }
      auto [var, e] = factor();
      vars[var] += e;
      skip_space();
      need_factor = false;
      if (!at_end() && peek() == '*') {
        ++pos_;
        need_factor = true;
      }
    }
    if (!has_coef && vars.empty()) fail("expected a coefficient or variable");
    return {std::move(vars), std::move(coef)};
  }

  std::pair<int, int> factor() {
    char c = peek();
    ++pos_;
    int var = 0;
    if (c == 'y') {
      var = 2;
    } else if (c == 'z') {
      var = 3;
    } else {
      std::size_t start = pos_;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      var = start == pos_ ? 1 : std::stoi(std::string(text_.substr(start, pos_ - start)));
      if (var <= 0) {
        pos_ = start;
        fail("variable index must be positive");
      }
    }
    int e = 1;
    skip_space();
    if (!at_end() && peek() == '^') {
      ++pos_;
      skip_space();
      bool negative = consume_minus();
      std::size_t start = pos_;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      if (start == pos_) fail("expected an integer exponent");
      e = std::stoi(std::string(text_.substr(start, pos_ - start)));
      if (negative) e = -e;
    }
    return {var, e};
  }

  Rational number() {
    std::size_t start = pos_;
    bool negative = consume_minus();
    if (!negative && peek() == '+') ++pos_;
    std::size_t body = pos_;
    while (!at_end() && (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '.' ||
                         peek() == '/')) {
      ++pos_;
    }
    if (body == pos_) {
      pos_ = start;
      fail("expected a number");
    }
    try {
      Rational v = parse_rational(text_.substr(body, pos_ - body));
      return negative ? Rational(-v) : v;
    } catch (const ParseError& e) {
      throw ParseError(body, e.what());
    }
  }

  bool starts_number() const {
    if (at_end()) return false;
    char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.' || c == '-') return true;
    return text_.substr(pos_).starts_with("\xE2\x88\x92");  // U+2212 minus sign
  }

  bool consume_minus() {
    if (at_end()) return false;
    if (peek() == '-') {
      ++pos_;
      return true;
    }
    if (text_.substr(pos_).starts_with("\xE2\x88\x92")) {
      pos_ += 3;
      return true;
    }
    return false;
  }

  static bool is_var_start(char c) { return c == 'x' || c == 'y' || c == 'z'; }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(pos_, message + " at position " + std::to_string(pos_));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::string var_name(int index, int dimension) {
  if (dimension <= 3) return std::string(1, "xyz"[index]);
  return "x" + std::to_string(index + 1);
}

}  // namespace

TropPolynomial parse_polynomial(std::string_view text, std::optional<int> dimension) {
  return PolynomialParser(text).parse(dimension);
}

std::string to_text(const TropPolynomial& f) {
  std::vector<std::pair<Exponent, Rational>> terms(f.terms().begin(), f.terms().end());
  std::stable_sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    int da = std::accumulate(a.first.begin(), a.first.end(), 0);
    int db = std::accumulate(b.first.begin(), b.first.end(), 0);
    if (da != db) return da < db;
    return a.first > b.first;
  });
  std::ostringstream out;
  bool first = true;
  for (const auto& [j, a] : terms) {
    if (!first) out << " + ";
    first = false;
    out << to_string(a);
    for (std::size_t i = 0; i < j.size(); ++i) {
      if (j[i] == 0) continue;
      out << '*' << var_name(static_cast<int>(i), f.dimension());
      if (j[i] != 1) out << '^' << j[i];
    }
  }
  return out.str();
}

}  // namespace tropo
