#pragma once

// Exact arithmetic used for geometric coordinates and isometries.
//
// `Rational` is an int64 fraction with overflow-checked operations.
// `Real` is an element of a multiquadratic field: a finite sum of
// rational multiples of square roots of distinct squarefree integers,
// e.g. (1 + sqrt3)/2 or (sqrt6 - sqrt2)/4. The field is closed under
// +, -, * and division, and equality is structural, so symmetry matching
// never needs a tolerance.

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace latin {

class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t value) : num_(value) {}  // NOLINT(implicit)
  Rational(std::int64_t num, std::int64_t den);

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_ == 0; }
  bool is_integer() const noexcept { return den_ == 1; }
  int sign() const noexcept { return (num_ > 0) - (num_ < 0); }
  double to_double() const noexcept { return static_cast<double>(num_) / static_cast<double>(den_); }

  /// Largest integer not greater than this value.
  std::int64_t floor() const noexcept;

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  /// "3", "-3/2".
  std::string to_string() const;

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

class Real {
 public:
  /// One term: coeff * sqrt(radicand), radicand squarefree and >= 1.
  struct Term {
    std::int64_t radicand;
    Rational coeff;
    friend bool operator==(const Term&, const Term&) = default;
  };

  Real() = default;
  Real(std::int64_t value) : Real(Rational(value)) {}  // NOLINT(implicit)
  Real(Rational value);                                  // NOLINT(implicit)

  /// sqrt(n) for n >= 0; perfect-square factors are pulled out.
  static Real sqrt(std::int64_t n);

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_rational() const noexcept;
  /// Rational part if the value is rational; throws otherwise.
  Rational as_rational() const;
  const std::vector<Term>& terms() const noexcept { return terms_; }

  /// Exact sign, computed by recursive conjugation (no floating point).
  int sign() const;
  double to_double() const noexcept;

  Real operator-() const;
  Real& operator+=(const Real& o);
  Real& operator-=(const Real& o);
  Real& operator*=(const Real& o);
  Real& operator/=(const Real& o);
  Real inverse() const;

  friend Real operator+(Real a, const Real& b) { return a += b; }
  friend Real operator-(Real a, const Real& b) { return a -= b; }
  friend Real operator*(Real a, const Real& b) { return a *= b; }
  friend Real operator/(Real a, const Real& b) { return a /= b; }

  friend bool operator==(const Real&, const Real&) = default;
  friend std::strong_ordering operator<=>(const Real& a, const Real& b);

  /// Canonical text form, e.g. "3/2", "(1+sqrt3)/2", "-sqrt5", "(sqrt6-sqrt2)/4".
  std::string to_string() const;
  /// Inverse of to_string(); also accepts "a*sqrtN" and unparenthesised sums.
  static Real parse(std::string_view text);

 private:
  void add_term(std::int64_t radicand, const Rational& coeff);
  /// Flip the sign of every term whose radicand is divisible by `prime`.
  Real conjugate(std::int64_t prime) const;

  std::vector<Term> terms_;  // sorted by radicand, no zero coefficients
};

using Vec = std::vector<Real>;

std::string to_string(const Vec& v);

/// Square matrix over Real, row-major.
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(std::size_t n);
  Matrix(std::size_t n, std::vector<Real> entries);

  static Matrix identity(std::size_t n);

  std::size_t size() const noexcept { return n_; }
  const Real& operator()(std::size_t r, std::size_t c) const { return a_[r * n_ + c]; }
  Real& operator()(std::size_t r, std::size_t c) { return a_[r * n_ + c]; }

  Matrix operator*(const Matrix& o) const;
  Vec operator*(const Vec& v) const;
  Matrix transposed() const;
  Real determinant() const;
  /// Throws Error(invalid_parameter) when singular.
  Matrix inverse() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Real> a_;
};

Real dot(const Vec& a, const Vec& b);
Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator*(const Real& s, const Vec& v);

}  // namespace latin
