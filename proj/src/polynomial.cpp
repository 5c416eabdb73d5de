#include "projzero/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "projzero/errors.hpp"
#include "projzero/kernels.hpp"

namespace projzero {

Monomial::Monomial(std::vector<unsigned> exps) : exps_(std::move(exps)) {
  degree_ = std::accumulate(exps_.begin(), exps_.end(), 0u);
}

Monomial Monomial::variable(std::size_t nvars, std::size_t index) {
  std::vector<unsigned> e(nvars, 0);
  e.at(index) = 1;
  return Monomial(std::move(e));
}

Monomial Monomial::operator*(const Monomial& o) const {
  if (o.nvars() != nvars()) throw std::invalid_argument("monomial variable count mismatch");
  std::vector<unsigned> e(exps_);
  for (std::size_t i = 0; i < e.size(); ++i) e[i] += o.exps_[i];
  return Monomial(std::move(e));
}

bool Monomial::divides(const Monomial& o) const {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > o.exps_[i]) return false;
  return true;
}

Monomial Monomial::quotient_of(const Monomial& o) const {
  if (!divides(o)) throw std::invalid_argument("monomial does not divide");
  std::vector<unsigned> e(o.exps_);
  for (std::size_t i = 0; i < e.size(); ++i) e[i] -= exps_[i];
  return Monomial(std::move(e));
}

MonomialOrder::MonomialOrder(Kind kind, std::vector<std::size_t> ranking) : kind_(kind), ranking_(std::move(ranking)) {
  std::vector<std::size_t> sorted = ranking_;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i)
    if (sorted[i] != i) throw Error(ExitCode::input_error, "variable ranking is not a permutation");
}

MonomialOrder MonomialOrder::degrevlex(std::size_t nvars) {
  std::vector<std::size_t> r(nvars);
  std::iota(r.begin(), r.end(), 0);
  return {Kind::degrevlex, r};
}

MonomialOrder MonomialOrder::lex(std::size_t nvars) {
  std::vector<std::size_t> r(nvars);
  std::iota(r.begin(), r.end(), 0);
  return {Kind::lex, r};
}

bool MonomialOrder::greater(const Monomial& a, const Monomial& b) const {
  if (kind_ == Kind::degrevlex) {
    if (a.degree() != b.degree()) return a.degree() > b.degree();
    for (std::size_t k = ranking_.size(); k-- > 0;) {
      std::size_t v = ranking_[k];
      if (a[v] != b[v]) return a[v] < b[v];
    }
    return false;
  }
  for (std::size_t v : ranking_)
    if (a[v] != b[v]) return a[v] > b[v];
  return false;
}

std::vector<Monomial> monomials_of_degree(std::size_t nvars, unsigned d, const MonomialOrder& order) {
  std::vector<Monomial> out;
  if (nvars == 0) {
    if (d == 0) out.emplace_back(0);
    return out;
  }
  std::vector<unsigned> e(nvars, 0);
  // Enumerate compositions of d into nvars parts.
  auto rec = [&](auto&& self, std::size_t i, unsigned left) -> void {
    if (i + 1 == nvars) {
      e[i] = left;
      out.emplace_back(e);
      return;
    }
    for (unsigned k = 0; k <= left; ++k) {
      e[i] = k;
      self(self, i + 1, left - k);
    }
  };
  rec(rec, 0, d);
  std::sort(out.begin(), out.end(), order.descending());
  return out;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
  }
  return static_cast<std::uint64_t>(r);
}

Form::Form(Field field, std::size_t nvars, unsigned degree) : field_(field), nvars_(nvars), degree_(degree) {}

Form::Form(Field field, std::size_t nvars, unsigned degree, const Terms& terms)
    : field_(field), nvars_(nvars), degree_(degree) {
  for (const auto& [m, c] : terms) add_term(m, c);
}

Form Form::monomial(Field field, const Monomial& m, Scalar coeff) {
  Form f(field, m.nvars(), m.degree());
  f.add_term(m, coeff);
  return f;
}

Form Form::linear(Field field, const Vector& coeffs) {
  Form f(field, coeffs.size(), 1);
  for (std::size_t i = 0; i < coeffs.size(); ++i) f.add_term(Monomial::variable(coeffs.size(), i), coeffs[i]);
  return f;
}

Scalar Form::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? field_.zero() : it->second;
}

void Form::add_term(const Monomial& m, const Scalar& c) {
  if (m.nvars() != nvars_) throw std::invalid_argument("monomial variable count mismatch");
  if (m.degree() != degree_)
    throw NotHomogeneous("term of degree " + std::to_string(m.degree()) + " in a form of degree " +
                         std::to_string(degree_));
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Form& Form::operator+=(const Form& o) {
  if (o.is_zero()) return *this;
  if (is_zero() && degree_ != o.degree_) degree_ = o.degree_;
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Form& Form::operator-=(const Form& o) {
  if (o.is_zero()) return *this;
  if (is_zero() && degree_ != o.degree_) degree_ = o.degree_;
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Form Form::operator*(const Form& o) const {
  if (o.nvars_ != nvars_) throw std::invalid_argument("form variable count mismatch");
  Form r(field_, nvars_, degree_ + o.degree_);
  for (const auto& [m1, c1] : terms_)
    for (const auto& [m2, c2] : o.terms_) r.add_term(m1 * m2, c1 * c2);
  return r;
}

Form Form::scaled(const Scalar& c) const {
  Form r(field_, nvars_, degree_);
  if (c.is_zero()) return r;
  for (const auto& [m, v] : terms_) r.terms_.emplace(m, v * c);
  return r;
}

Form Form::pow(unsigned e) const {
  Form result = Form::monomial(field_, Monomial(nvars_), field_.one());
  Form base = *this;
  while (e != 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e != 0) base = base * base;
  }
  return result;
}

Scalar evaluate(const Monomial& m, std::span<const Scalar> point) {
  if (point.size() != m.nvars()) throw std::invalid_argument("point length mismatch");
  Scalar v = point.empty() ? Scalar() : point.front().field().one();
  for (std::size_t i = 0; i < m.nvars(); ++i)
    if (m[i] != 0) v *= point[i].pow(m[i]);
  return v;
}

Scalar Form::evaluate(std::span<const Scalar> point) const {
  if (point.size() != nvars_) throw std::invalid_argument("point length mismatch");
  Scalar s = field_.zero();
  for (const auto& [m, c] : terms_) s += c * projzero::evaluate(m, point);
  return s;
}

Vector Form::coefficients(const std::vector<Monomial>& basis) const {
  Vector v = zero_vector(field_, basis.size());
  std::size_t found = 0;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    auto it = terms_.find(basis[i]);
    if (it != terms_.end()) {
      v[i] = it->second;
      ++found;
    }
  }
  if (found != terms_.size()) throw std::invalid_argument("form has terms outside the monomial basis");
  return v;
}

Form Form::from_coefficients(Field field, const std::vector<Monomial>& basis, const Vector& coeffs) {
  if (basis.size() != coeffs.size()) throw std::invalid_argument("coefficient count mismatch");
  if (basis.empty()) throw std::invalid_argument("empty monomial basis");
  Form f(field, basis.front().nvars(), basis.front().degree());
  for (std::size_t i = 0; i < basis.size(); ++i) f.add_term(basis[i], coeffs[i]);
  return f;
}

Ring::Ring(Field f, std::vector<std::string> names)
    : field(f), vars(std::move(names)), order(MonomialOrder::degrevlex(vars.size())) {}

Ring::Ring(Field f, std::vector<std::string> names, MonomialOrder o) : field(f), vars(std::move(names)), order(std::move(o)) {
  if (order.nvars() != vars.size()) throw Error(ExitCode::input_error, "order ranking does not match the variables");
}

std::size_t Ring::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < vars.size(); ++i)
    if (vars[i] == name) return i;
  throw UnknownVariable(std::string(name));
}

namespace {

struct Token {
  enum class Kind { number, ident, plus, minus, star, slash, caret, end } kind;
  std::string text;
  std::size_t pos;
};

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({Token::Kind::number, std::string(s.substr(i, j - i)), i});
      i = j;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
      out.push_back({Token::Kind::ident, std::string(s.substr(i, j - i)), i});
      i = j;
      continue;
    }
    Token::Kind k;
    switch (c) {
      case '+': k = Token::Kind::plus; break;
      case '-': k = Token::Kind::minus; break;
      case '*': k = Token::Kind::star; break;
      case '/': k = Token::Kind::slash; break;
      case '^': k = Token::Kind::caret; break;
      default: throw SyntaxError("unexpected character '" + std::string(1, c) + "' at position " + std::to_string(i));
    }
    out.push_back({k, std::string(1, c), i});
    ++i;
  }
  out.push_back({Token::Kind::end, "", s.size()});
  return out;
}

class Parser {
 public:
  Parser(std::string_view text, const Ring& ring) : tokens_(tokenize(text)), ring_(ring) {}

  Form parse() {
    struct Term {
      Monomial m;
      Scalar c;
    };
    std::vector<Term> terms;
    bool negative = false;
    if (peek().kind == Token::Kind::plus || peek().kind == Token::Kind::minus) negative = next().kind == Token::Kind::minus;
    while (true) {
      auto [m, c] = term();
      terms.push_back({m, negative ? -c : c});
      if (peek().kind == Token::Kind::end) break;
      const Token& op = next();
      if (op.kind != Token::Kind::plus && op.kind != Token::Kind::minus) fail(op, "expected '+' or '-'");
      negative = op.kind == Token::Kind::minus;
    }
    // Homogeneity is judged after like terms are combined.
    std::map<Monomial, Scalar> combined;
    for (auto& t : terms) {
      auto [it, inserted] = combined.try_emplace(t.m, t.c);
      if (!inserted) it->second += t.c;
    }
    unsigned degree = terms.front().m.degree();
    bool have_degree = false;
    for (const auto& [m, c] : combined) {
      if (c.is_zero()) continue;
      if (!have_degree) {
        degree = m.degree();
        have_degree = true;
      } else if (m.degree() != degree) {
        throw NotHomogeneous("mixed total degrees " + std::to_string(degree) + " and " + std::to_string(m.degree()));
      }
    }
    Form f(ring_.field, ring_.nvars(), degree);
    for (const auto& [m, c] : combined) f.add_term(m, c);
    return f;
  }

 private:
  std::pair<Monomial, Scalar> term() {
    std::vector<unsigned> exps(ring_.nvars(), 0);
    Scalar coeff = ring_.field.one();
    while (true) {
      const Token& t = next();
      if (t.kind == Token::Kind::number) {
        mpz_class num(t.text), den(1);
        if (peek().kind == Token::Kind::slash) {
          next();
          const Token& d = next();
          if (d.kind != Token::Kind::number) fail(d, "expected denominator");
          den = mpz_class(d.text);
        }
        coeff *= ring_.field.from_rational(num, den);
      } else if (t.kind == Token::Kind::ident) {
        std::size_t v = ring_.index_of(t.text);
        unsigned e = 1;
        if (peek().kind == Token::Kind::caret) {
          next();
          const Token& x = next();
          if (x.kind != Token::Kind::number || x.text.size() > 6) fail(x, "expected exponent");
          e = static_cast<unsigned>(std::stoul(x.text));
        }
        exps[v] += e;
      } else {
        fail(t, "expected coefficient or variable");
      }
      if (peek().kind != Token::Kind::star) break;
      next();
    }
    return {Monomial(std::move(exps)), coeff};
  }

  const Token& peek() const { return tokens_[pos_]; }
  const Token& next() {
    const Token& t = tokens_[pos_];
    if (t.kind != Token::Kind::end) ++pos_;
    return t;
  }
  [[noreturn]] void fail(const Token& t, const std::string& what) const {
    throw SyntaxError(what + " at position " + std::to_string(t.pos) + (t.text.empty() ? "" : " near '" + t.text + "'"));
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  const Ring& ring_;
};

}  // namespace

Form parse_form(std::string_view text, const Ring& ring) { return Parser(text, ring).parse(); }

std::string to_string(const Monomial& m, const Ring& ring) {
  std::string s;
  for (std::size_t i = 0; i < m.nvars(); ++i) {
    if (m[i] == 0) continue;
    if (!s.empty()) s += '*';
    s += ring.vars.at(i);
    if (m[i] > 1) s += '^' + std::to_string(m[i]);
  }
  return s.empty() ? "1" : s;
}

std::string to_string(const Form& f, const Ring& ring) {
  if (f.is_zero()) return "0";
  std::vector<std::pair<Monomial, Scalar>> terms(f.terms().begin(), f.terms().end());
  std::sort(terms.begin(), terms.end(), [&](const auto& a, const auto& b) { return ring.order.greater(a.first, b.first); });
  std::string out;
  for (const auto& [m, c] : terms) {
    bool negative = !c.field().is_finite() && sgn(c.rational()) < 0;
    Scalar magnitude = negative ? -c : c;
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    if (m.degree() == 0) {
      out += magnitude.to_string();
    } else {
      if (!magnitude.is_one()) out += magnitude.to_string() + "*";
      out += to_string(m, ring);
    }
  }
  return out;
}

Matrix evaluation_matrix(const std::vector<Form>& forms, const std::vector<Vector>& points) {
  if (forms.empty()) throw std::invalid_argument("evaluation_matrix: no forms");
  return kernels::tabulate(forms.front().field(), forms.size(), points.size(),
                           [&](std::size_t i, std::size_t j) { return forms[i].evaluate(points[j]); });
}

Matrix evaluation_matrix(const std::vector<Monomial>& monomials, const Field& field, const std::vector<Vector>& points) {
  return kernels::tabulate(field, monomials.size(), points.size(),
                           [&](std::size_t i, std::size_t j) { return evaluate(monomials[i], points[j]); });
}

}  // namespace projzero
