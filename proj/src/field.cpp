#include "projzero/field.hpp"

#include <cctype>
#include <stdexcept>

#include "projzero/errors.hpp"

namespace projzero {

namespace {

std::uint32_t reduce_mod(const mpz_class& value, std::uint32_t p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), value.get_mpz_t(), p);
  return static_cast<std::uint32_t>(r.get_ui());
}

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
  // Extended Euclid on signed 64-bit values; p < 2^31 so nothing overflows.
  std::int64_t t = 0, new_t = 1, r = p, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

Field Field::prime(std::uint64_t p) {
  if (p >= (1ULL << 31)) throw Error(ExitCode::input_error, "prime fields require p < 2^31");
  if (!is_prime(p)) throw Error(ExitCode::input_error, std::to_string(p) + " is not prime");
  return Field(static_cast<std::uint32_t>(p));
}

Field Field::parse(std::string_view text) {
  text = trim(text);
  if (text == "Q" || text == "QQ") return rationals();
  std::string_view digits;
  if (text.starts_with("GF(") && text.ends_with(")")) {
    digits = text.substr(3, text.size() - 4);
  } else if (text.starts_with("Z_") || text.starts_with("F_")) {
    digits = text.substr(2);
  } else if (text.starts_with("Z") || text.starts_with("F")) {
    digits = text.substr(1);
  } else if (all_digits(text)) {
    digits = text;
  }
  digits = trim(digits);
  if (!all_digits(digits) || digits.size() > 10) throw Error(ExitCode::input_error, "unknown field: " + std::string(text));
  return prime(std::stoull(std::string(digits)));
}

Scalar Field::zero() const { return from_int(0); }
Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(long long value) const {
  Scalar s;
  s.modulus_ = modulus_;
  if (modulus_ == 0) {
    s.q_ = mpq_class(mpz_class(static_cast<long>(value)));
  } else {
    long long r = value % static_cast<long long>(modulus_);
    if (r < 0) r += modulus_;
    s.residue_ = static_cast<std::uint32_t>(r);
  }
  return s;
}

Scalar Field::from_integer(const mpz_class& value) const {
  Scalar s;
  s.modulus_ = modulus_;
  if (modulus_ == 0)
    s.q_ = mpq_class(value);
  else
    s.residue_ = reduce_mod(value, modulus_);
  return s;
}

Scalar Field::from_rational(const mpz_class& num, const mpz_class& den) const {
  if (modulus_ == 0) {
    if (den == 0) throw Error(ExitCode::input_error, "division by zero in rational literal");
    Scalar s;
    s.q_ = mpq_class(num, den);
    s.q_.canonicalize();
    return s;
  }
  std::uint32_t d = reduce_mod(den, modulus_);
  if (d == 0) throw Error(ExitCode::input_error, "denominator vanishes in " + to_string());
  return from_integer(num) * from_integer(den).inverse();
}

Scalar Field::from_rational(const mpq_class& value) const {
  return from_rational(value.get_num(), value.get_den());
}

Scalar Field::parse_element(std::string_view text) const {
  text = trim(text);
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text = trim(text.substr(1));
  }
  std::string_view num = text, den = "1";
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    num = trim(text.substr(0, slash));
    den = trim(text.substr(slash + 1));
  }
  if (!all_digits(num) || !all_digits(den)) throw SyntaxError("bad field element '" + std::string(text) + "'");
  mpz_class n{std::string(num)}, d{std::string(den)};
  if (negative) n = -n;
  return from_rational(n, d);
}

Scalar Field::element(std::uint64_t index) const {
  if (modulus_ != 0) return from_int(static_cast<long long>(index % modulus_));
  if (index == 0) return zero();
  long long k = static_cast<long long>((index + 1) / 2);
  return from_int(index % 2 == 1 ? k : -k);
}

std::string Field::to_string() const {
  if (modulus_ == 0) return "Q";
  return "GF(" + std::to_string(modulus_) + ")";
}

Field Scalar::field() const { return Field(modulus_); }

void Scalar::check_same(const Scalar& o) const {
  if (modulus_ != o.modulus_) throw std::logic_error("scalar arithmetic across different fields");
}

Scalar& Scalar::operator+=(const Scalar& o) {
  check_same(o);
  if (modulus_ == 0) {
    q_ += o.q_;
  } else {
    std::uint64_t r = static_cast<std::uint64_t>(residue_) + o.residue_;
    residue_ = static_cast<std::uint32_t>(r % modulus_);
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  check_same(o);
  if (modulus_ == 0) {
    q_ -= o.q_;
  } else {
    std::uint64_t r = static_cast<std::uint64_t>(residue_) + modulus_ - o.residue_;
    residue_ = static_cast<std::uint32_t>(r % modulus_);
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  check_same(o);
  if (modulus_ == 0) {
    q_ *= o.q_;
  } else {
    std::uint64_t r = static_cast<std::uint64_t>(residue_) * o.residue_;
    residue_ = static_cast<std::uint32_t>(r % modulus_);
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  check_same(o);
  return *this *= o.inverse();
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  if (modulus_ == 0)
    r.q_ = -q_;
  else if (residue_ != 0)
    r.residue_ = modulus_ - residue_;
  return r;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  Scalar r = *this;
  if (modulus_ == 0)
    r.q_ = 1 / q_;
  else
    r.residue_ = inverse_mod(residue_, modulus_);
  return r;
}

Scalar Scalar::pow(std::uint64_t exponent) const {
  Scalar result = field().one();
  Scalar base = *this;
  while (exponent != 0) {
    if (exponent & 1) result *= base;
    exponent >>= 1;
    if (exponent != 0) base *= base;
  }
  return result;
}

std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
  if (a.modulus_ != b.modulus_) return a.modulus_ <=> b.modulus_;
  if (a.modulus_ != 0) return a.residue_ <=> b.residue_;
  int c = cmp(a.q_, b.q_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Scalar::to_string() const {
  if (modulus_ != 0) return std::to_string(residue_);
  return q_.get_str();
}

}  // namespace projzero
