#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "projzero/field.hpp"
#include "projzero/matrix.hpp"

namespace projzero {

/// Exponent vector of a monomial in x_0..x_n.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<unsigned> exps);
  static Monomial variable(std::size_t nvars, std::size_t index);

  std::size_t nvars() const noexcept { return exps_.size(); }
  unsigned degree() const noexcept { return degree_; }
  unsigned operator[](std::size_t i) const { return exps_[i]; }
  const std::vector<unsigned>& exponents() const noexcept { return exps_; }

  Monomial operator*(const Monomial& o) const;
  bool divides(const Monomial& o) const;
  /// Requires divides(o); returns o / *this.
  Monomial quotient_of(const Monomial& o) const;

  /// Canonical (exponent-lexicographic) comparison, for containers only.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) { return a.exps_ <=> b.exps_; }
  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }

 private:
  std::vector<unsigned> exps_;
  unsigned degree_ = 0;
};

/// Monomial order. The ranking lists variable indices most significant first.
class MonomialOrder {
 public:
  enum class Kind { degrevlex, lex };

  MonomialOrder() = default;
  MonomialOrder(Kind kind, std::vector<std::size_t> ranking);
  static MonomialOrder degrevlex(std::size_t nvars);
  static MonomialOrder lex(std::size_t nvars);

  Kind kind() const noexcept { return kind_; }
  const std::vector<std::size_t>& ranking() const noexcept { return ranking_; }
  std::size_t nvars() const noexcept { return ranking_.size(); }
  /// The variable compared last by degrevlex, used for the a*b split.
  std::size_t least_significant() const { return ranking_.back(); }

  /// True when a is strictly greater than b.
  bool greater(const Monomial& a, const Monomial& b) const;
  /// Descending comparator.
  auto descending() const {
    return [this](const Monomial& a, const Monomial& b) { return greater(a, b); };
  }

  std::string name() const { return kind_ == Kind::degrevlex ? "degrevlex" : "lex"; }

 private:
  Kind kind_ = Kind::degrevlex;
  std::vector<std::size_t> ranking_;
};

/// All monomials of total degree d in nvars variables, descending in `order`.
std::vector<Monomial> monomials_of_degree(std::size_t nvars, unsigned d, const MonomialOrder& order);

/// Binomial coefficient C(n, k) (saturating at uint64 max).
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

/// Homogeneous polynomial of fixed degree. Zero coefficients are never stored.
class Form {
 public:
  using Terms = std::map<Monomial, Scalar>;

  Form() = default;
  /// Zero form of the given degree.
  Form(Field field, std::size_t nvars, unsigned degree);
  /// Throws NotHomogeneous if a monomial has the wrong degree.
  Form(Field field, std::size_t nvars, unsigned degree, const Terms& terms);
  static Form monomial(Field field, const Monomial& m, Scalar coeff);
  /// Sum of coeffs[i] * x_i.
  static Form linear(Field field, const Vector& coeffs);

  const Field& field() const noexcept { return field_; }
  std::size_t nvars() const noexcept { return nvars_; }
  unsigned degree() const noexcept { return degree_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  Scalar coefficient(const Monomial& m) const;

  /// Adds c * m; m must have the form's degree.
  void add_term(const Monomial& m, const Scalar& c);

  Form& operator+=(const Form& o);
  Form& operator-=(const Form& o);
  friend Form operator+(Form a, const Form& b) { return a += b; }
  friend Form operator-(Form a, const Form& b) { return a -= b; }
  Form operator*(const Form& o) const;
  Form scaled(const Scalar& c) const;
  Form pow(unsigned e) const;

  /// Substitutes the fixed representative coordinates.
  Scalar evaluate(std::span<const Scalar> point) const;

  /// Coefficients on `basis` (monomials of this degree); throws if a term is
  /// outside the basis.
  Vector coefficients(const std::vector<Monomial>& basis) const;
  static Form from_coefficients(Field field, const std::vector<Monomial>& basis, const Vector& coeffs);

  friend bool operator==(const Form& a, const Form& b) {
    return a.field_ == b.field_ && a.nvars_ == b.nvars_ && a.degree_ == b.degree_ && a.terms_ == b.terms_;
  }

 private:
  Field field_;
  std::size_t nvars_ = 0;
  unsigned degree_ = 0;
  Terms terms_;
};

/// Variable names, field and active order: everything needed to read and
/// print forms.
struct Ring {
  Field field;
  std::vector<std::string> vars;
  MonomialOrder order;

  Ring() = default;
  Ring(Field f, std::vector<std::string> names);
  Ring(Field f, std::vector<std::string> names, MonomialOrder o);
  std::size_t nvars() const noexcept { return vars.size(); }
  /// Variable index or throws UnknownVariable.
  std::size_t index_of(std::string_view name) const;
};

/// Grammar: terms joined by + and -; a term is [coeff *] var [^ exp] [* var [^ exp]]...
/// with integer or a/b coefficients. Throws SyntaxError, NotHomogeneous, UnknownVariable.
Form parse_form(std::string_view text, const Ring& ring);

std::string to_string(const Monomial& m, const Ring& ring);
/// Terms in descending ring order; "0" for the zero form.
std::string to_string(const Form& f, const Ring& ring);

/// Evaluation of every form at every point: rows are forms, columns points.
Matrix evaluation_matrix(const std::vector<Form>& forms, const std::vector<Vector>& points);
Matrix evaluation_matrix(const std::vector<Monomial>& monomials, const Field& field, const std::vector<Vector>& points);
Scalar evaluate(const Monomial& m, std::span<const Scalar> point);

}  // namespace projzero
