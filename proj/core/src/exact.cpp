#include "latin/exact.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "latin/error.hpp"

namespace latin {

namespace {

using i128 = __int128;

std::int64_t narrow(i128 v) {
  if (v > INT64_MAX || v < INT64_MIN) throw std::overflow_error("rational overflow");
  return static_cast<std::int64_t>(v);
}

i128 gcd128(i128 a, i128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

Rational make_rational(i128 num, i128 den) {
  if (den == 0) throw Error(ErrorCode::invalid_parameter, "division by zero");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  i128 g = gcd128(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  return Rational(narrow(num), narrow(den));
}

std::int64_t smallest_prime_factor(std::int64_t n) {
  for (std::int64_t p = 2; p * p <= n; ++p)
    if (n % p == 0) return p;
  return n;
}

}  // namespace

// --- Rational ---------------------------------------------------------------

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw Error(ErrorCode::invalid_parameter, "division by zero");
  if (den < 0) {
    num = narrow(-static_cast<i128>(num));
    den = narrow(-static_cast<i128>(den));
  }
  std::int64_t g = std::gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  num_ = num;
  den_ = den;
}

std::int64_t Rational::floor() const noexcept {
  std::int64_t q = num_ / den_;
  if (num_ % den_ != 0 && num_ < 0) --q;
  return q;
}

Rational Rational::operator-() const { return make_rational(-static_cast<i128>(num_), den_); }

Rational& Rational::operator+=(const Rational& o) {
  *this = make_rational(static_cast<i128>(num_) * o.den_ + static_cast<i128>(o.num_) * den_,
                        static_cast<i128>(den_) * o.den_);
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  *this = make_rational(static_cast<i128>(num_) * o.den_ - static_cast<i128>(o.num_) * den_,
                        static_cast<i128>(den_) * o.den_);
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  *this = make_rational(static_cast<i128>(num_) * o.num_, static_cast<i128>(den_) * o.den_);
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  *this = make_rational(static_cast<i128>(num_) * o.den_, static_cast<i128>(den_) * o.num_);
  return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  return static_cast<i128>(a.num_) * b.den_ <=> static_cast<i128>(b.num_) * a.den_;
}

std::string Rational::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

// --- Real -------------------------------------------------------------------

Real::Real(Rational value) {
  if (!value.is_zero()) terms_.push_back({1, value});
}

Real Real::sqrt(std::int64_t n) {
  if (n < 0) throw Error(ErrorCode::invalid_parameter, "sqrt of negative number");
  if (n == 0) return {};
  std::int64_t outside = 1;
  std::int64_t inside = n;
  for (std::int64_t p = 2; p * p <= inside; ++p) {
    while (inside % (p * p) == 0) {
      inside /= p * p;
      outside *= p;
    }
  }
  Real r;
  r.terms_.push_back({inside, Rational(outside)});
  return r;
}

bool Real::is_rational() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].radicand == 1);
}

Rational Real::as_rational() const {
  if (!is_rational()) throw Error(ErrorCode::invalid_parameter, "value is irrational: " + to_string());
  return terms_.empty() ? Rational() : terms_[0].coeff;
}

void Real::add_term(std::int64_t radicand, const Rational& coeff) {
  if (coeff.is_zero()) return;
  auto it = std::lower_bound(terms_.begin(), terms_.end(), radicand,
                             [](const Term& t, std::int64_t r) { return t.radicand < r; });
  if (it != terms_.end() && it->radicand == radicand) {
    it->coeff += coeff;
    if (it->coeff.is_zero()) terms_.erase(it);
  } else {
    terms_.insert(it, Term{radicand, coeff});
  }
}

Real Real::operator-() const {
  Real r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

Real& Real::operator+=(const Real& o) {
  for (const auto& t : o.terms_) add_term(t.radicand, t.coeff);
  return *this;
}

Real& Real::operator-=(const Real& o) {
  for (const auto& t : o.terms_) add_term(t.radicand, -t.coeff);
  return *this;
}

Real& Real::operator*=(const Real& o) {
  Real out;
  for (const auto& a : terms_) {
    for (const auto& b : o.terms_) {
      // sqrt(a)*sqrt(b) = g*sqrt((a/g)*(b/g)) for squarefree a, b with g = gcd(a, b).
      std::int64_t g = std::gcd(a.radicand, b.radicand);
      std::int64_t rad = (a.radicand / g) * (b.radicand / g);
      out.add_term(rad, a.coeff * b.coeff * Rational(g));
    }
  }
  *this = std::move(out);
  return *this;
}

Real Real::conjugate(std::int64_t prime) const {
  Real r = *this;
  for (auto& t : r.terms_)
    if (t.radicand % prime == 0) t.coeff = -t.coeff;
  return r;
}

Real Real::inverse() const {
  if (is_zero()) throw Error(ErrorCode::invalid_parameter, "division by zero");
  if (is_rational()) return Real(Rational(1) / as_rational());
  std::int64_t prime = 0;
  for (const auto& t : terms_) {
    if (t.radicand > 1) {
      prime = smallest_prime_factor(t.radicand);
      break;
    }
  }
  // x * conj_p(x) no longer involves sqrt(p); recurse on the smaller field.
  Real c = conjugate(prime);
  return c * (*this * c).inverse();
}

Real& Real::operator/=(const Real& o) {
  *this *= o.inverse();
  return *this;
}

int Real::sign() const {
  if (terms_.empty()) return 0;
  if (is_rational()) return terms_[0].coeff.sign();
  std::int64_t prime = 0;
  for (const auto& t : terms_) {
    if (t.radicand > 1) {
      prime = smallest_prime_factor(t.radicand);
      break;
    }
  }
  // Split x = A + B*sqrt(p) with A, B free of sqrt(p).
  Real a;
  Real b;
  for (const auto& t : terms_) {
    if (t.radicand % prime == 0)
      b.add_term(t.radicand / prime, t.coeff);
    else
      a.add_term(t.radicand, t.coeff);
  }
  int sa = a.sign();
  int sb = b.sign();
  if (sa >= 0 && sb >= 0) return (sa > 0 || sb > 0) ? 1 : 0;
  if (sa <= 0 && sb <= 0) return -1;
  // Opposite signs: compare A^2 with p*B^2.
  Real diff = a * a - Real(Rational(prime)) * b * b;
  return sa * diff.sign();
}

double Real::to_double() const noexcept {
  long double v = 0;
  for (const auto& t : terms_)
    v += static_cast<long double>(t.coeff.to_double()) * std::sqrt(static_cast<long double>(t.radicand));
  return static_cast<double>(v);
}

std::strong_ordering operator<=>(const Real& a, const Real& b) {
  int s = (a - b).sign();
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Real::to_string() const {
  if (terms_.empty()) return "0";
  std::int64_t den = 1;
  for (const auto& t : terms_) den = std::lcm(den, t.coeff.den());
  std::string body;
  for (const auto& t : terms_) {
    std::int64_t c = narrow(static_cast<i128>(t.coeff.num()) * (den / t.coeff.den()));
    bool negative = c < 0;
    std::int64_t mag = negative ? -c : c;
    if (negative)
      body += "-";
    else if (!body.empty())
      body += "+";
    if (t.radicand == 1) {
      body += std::to_string(mag);
    } else {
      if (mag != 1) body += std::to_string(mag) + "*";
      body += "sqrt" + std::to_string(t.radicand);
    }
  }
  if (den == 1) return body;
  if (terms_.size() > 1) return "(" + body + ")/" + std::to_string(den);
  return body + "/" + std::to_string(den);
}

namespace {

class RealParser {
 public:
  explicit RealParser(std::string_view s) : s_(s) {}

  Real parse() {
    Real v = expression();
    skip();
    if (pos_ != s_.size()) fail("trailing characters");
    return v;
  }

 private:
  Real expression() {
    Real v;
    bool first = true;
    while (true) {
      skip();
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
      } else if (!first) {
        break;
      }
      Real t = term();
      v += sign < 0 ? -t : t;
      first = false;
    }
    return v;
  }

  Real term() {
    Real v = factor();
    while (true) {
      skip();
      if (peek() == '*') {
        ++pos_;
        v *= factor();
      } else if (peek() == '/') {
        ++pos_;
        v /= factor();
      } else {
        return v;
      }
    }
  }

  Real factor() {
    skip();
    if (peek() == '(') {
      ++pos_;
      Real v = expression();
      skip();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return v;
    }
    if (s_.substr(pos_, 4) == "sqrt") {
      pos_ += 4;
      return Real::sqrt(integer());
    }
    return Real(Rational(integer()));
  }

  std::int64_t integer() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return std::stoll(std::string(s_.substr(start, pos_ - start)));
  }

  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const char* why) const {
    throw Error(ErrorCode::load_error,
                std::string("cannot parse exact number '") + std::string(s_) + "': " + why);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Real Real::parse(std::string_view text) { return RealParser(text).parse(); }

std::string to_string(const Vec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].to_string();
  }
  return s + ")";
}

// --- Matrix -----------------------------------------------------------------

Matrix::Matrix(std::size_t n) : n_(n), a_(n * n) {}

Matrix::Matrix(std::size_t n, std::vector<Real> entries) : n_(n), a_(std::move(entries)) {
  if (a_.size() != n * n) throw Error(ErrorCode::invalid_parameter, "matrix entry count mismatch");
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Real(1);
  return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
  Matrix out(n_);
  for (std::size_t r = 0; r < n_; ++r)
    for (std::size_t c = 0; c < n_; ++c) {
      Real acc;
      for (std::size_t k = 0; k < n_; ++k) {
        if (a_[r * n_ + k].is_zero() || o(k, c).is_zero()) continue;
        acc += a_[r * n_ + k] * o(k, c);
      }
      out(r, c) = std::move(acc);
    }
  return out;
}

Vec Matrix::operator*(const Vec& v) const {
  if (v.size() != n_) throw Error(ErrorCode::invalid_parameter, "dimension mismatch");
  Vec out(n_);
  for (std::size_t r = 0; r < n_; ++r) {
    Real acc;
    for (std::size_t k = 0; k < n_; ++k) {
      if (a_[r * n_ + k].is_zero() || v[k].is_zero()) continue;
      acc += a_[r * n_ + k] * v[k];
    }
    out[r] = std::move(acc);
  }
  return out;
}

Matrix Matrix::transposed() const {
  Matrix t(n_);
  for (std::size_t r = 0; r < n_; ++r)
    for (std::size_t c = 0; c < n_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Real Matrix::determinant() const {
  // Fraction-based Gaussian elimination; sizes here are 2 or 3.
  Matrix m = *this;
  Real det(1);
  for (std::size_t col = 0; col < n_; ++col) {
    std::size_t pivot = col;
    while (pivot < n_ && m(pivot, col).is_zero()) ++pivot;
    if (pivot == n_) return {};
    if (pivot != col) {
      for (std::size_t c = 0; c < n_; ++c) std::swap(m(pivot, c), m(col, c));
      det = -det;
    }
    det *= m(col, col);
    Real inv = m(col, col).inverse();
    for (std::size_t r = col + 1; r < n_; ++r) {
      if (m(r, col).is_zero()) continue;
      Real f = m(r, col) * inv;
      for (std::size_t c = col; c < n_; ++c) m(r, c) -= f * m(col, c);
    }
  }
  return det;
}

Matrix Matrix::inverse() const {
  Matrix m = *this;
  Matrix inv = identity(n_);
  for (std::size_t col = 0; col < n_; ++col) {
    std::size_t pivot = col;
    while (pivot < n_ && m(pivot, col).is_zero()) ++pivot;
    if (pivot == n_) throw Error(ErrorCode::invalid_parameter, "singular matrix");
    if (pivot != col)
      for (std::size_t c = 0; c < n_; ++c) {
        std::swap(m(pivot, c), m(col, c));
        std::swap(inv(pivot, c), inv(col, c));
      }
    Real p = m(col, col).inverse();
    for (std::size_t c = 0; c < n_; ++c) {
      m(col, c) *= p;
      inv(col, c) *= p;
    }
    for (std::size_t r = 0; r < n_; ++r) {
      if (r == col || m(r, col).is_zero()) continue;
      Real f = m(r, col);
      for (std::size_t c = 0; c < n_; ++c) {
        m(r, c) -= f * m(col, c);
        inv(r, c) -= f * inv(col, c);
      }
    }
  }
  return inv;
}

Real dot(const Vec& a, const Vec& b) {
  Real acc;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

Vec operator+(const Vec& a, const Vec& b) {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

Vec operator-(const Vec& a, const Vec& b) {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

Vec operator*(const Real& s, const Vec& v) {
  Vec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = s * v[i];
  return out;
}

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::invalid_parameter: return "invalid-parameter";
    case ErrorCode::unsupported_source: return "unsupported-source";
    case ErrorCode::ambiguous_seed: return "ambiguous-seed";
    case ErrorCode::not_invariant: return "not-invariant";
    case ErrorCode::undefined_sin: return "undefined-sin";
    case ErrorCode::non_simple_dual: return "non-simple-dual";
    case ErrorCode::too_large: return "too-large";
    case ErrorCode::not_an_action: return "not-an-action";
    case ErrorCode::not_uniform: return "not-uniform";
    case ErrorCode::size_mismatch: return "size-mismatch";
    case ErrorCode::invalid_labeling: return "invalid-labeling";
    case ErrorCode::unsupported: return "unsupported";
    case ErrorCode::invalid_partial: return "invalid-partial";
    case ErrorCode::invalid_design: return "invalid-design";
    case ErrorCode::not_found: return "not-found";
    case ErrorCode::construction_bug: return "construction-bug";
    case ErrorCode::load_error: return "load-error";
    case ErrorCode::no_layout: return "no-layout";
  }
  return "unknown";
}

}  // namespace latin
