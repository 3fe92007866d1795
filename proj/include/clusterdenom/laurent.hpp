#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "clusterdenom/exmat.hpp"
#include "clusterdenom/numeric.hpp"

namespace clusterdenom {

inline constexpr int kMaxVariables = 16;

/// Exponent vector of a Laurent monomial; only the first n entries are used,
/// the rest stay zero so that comparison and hashing ignore them.
class Exponents {
 public:
  using Value = std::int16_t;

  Exponents() { e_.fill(0); }
  Value operator[](int i) const { return e_[static_cast<std::size_t>(i)]; }
  void set(int i, int v);
  /// Throws std::overflow_error past the int16 range.
  friend Exponents operator+(const Exponents& a, const Exponents& b);
  friend Exponents operator-(const Exponents& a, const Exponents& b);

  friend bool operator==(const Exponents&, const Exponents&) = default;
  friend auto operator<=>(const Exponents&, const Exponents&) = default;

  std::size_t hash() const;

 private:
  std::array<Value, kMaxVariables> e_;
};

using DenominatorVector = std::vector<int>;

/// Exact Laurent polynomial with integer coefficients in n variables.
/// Terms are kept sorted by ascending lexicographic exponent with no zero
/// coefficients, so equal polynomials have identical representations.
class LaurentPolynomial {
 public:
  struct Term {
    Exponents exponents;
    BigInt coefficient;
    friend bool operator==(const Term&, const Term&) = default;
  };

  explicit LaurentPolynomial(int n);  // zero polynomial

  static LaurentPolynomial constant(int n, const BigInt& c);
  /// x_i (0-based)
  static LaurentPolynomial variable(int n, int i);
  static LaurentPolynomial monomial(int n, std::span<const int> exponents, const BigInt& c = 1);
  /// Sums duplicates and drops zeros.
  static LaurentPolynomial from_terms(int n, std::vector<Term> terms);
  /// Inverse of to_string().
  static LaurentPolynomial parse(int n, std::string_view text);

  int variables() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  std::span<const Term> terms() const { return terms_; }
  bool all_coefficients_positive() const;

  friend LaurentPolynomial operator+(const LaurentPolynomial& p, const LaurentPolynomial& q);
  friend LaurentPolynomial operator-(const LaurentPolynomial& p, const LaurentPolynomial& q);
  friend LaurentPolynomial operator*(const LaurentPolynomial& p, const LaurentPolynomial& q);
  LaurentPolynomial pow(unsigned e) const;

  friend bool operator==(const LaurentPolynomial&, const LaurentPolynomial&) = default;

  /// "coef:e1,...,en" per term in ascending lexicographic order, joined by ';'.
  std::string to_string() const;
  std::size_t hash() const;

 private:
  int n_;
  std::vector<Term> terms_;
};

struct LaurentHash {
  std::size_t operator()(const LaurentPolynomial& p) const { return p.hash(); }
};

LaurentPolynomial add(const LaurentPolynomial& p, const LaurentPolynomial& q);
LaurentPolynomial mul(const LaurentPolynomial& p, const LaurentPolynomial& q);

/// Returns r with r * q == p; throws InexactDivision when no Laurent
/// polynomial r exists and InvalidArgument for q == 0.
LaurentPolynomial div_exact(const LaurentPolynomial& p, const LaurentPolynomial& q);

/// d_i = -(minimum exponent of x_i over the terms of p). Throws InvalidArgument on zero.
DenominatorVector denom_vector(const LaurentPolynomial& p);

/// New variable x_k' from x_k x_k' = prod x_j^[b_jk]+ + prod x_j^[-b_jk]+.
LaurentPolynomial exchange_step(std::span<const LaurentPolynomial> cluster, const ExchangeMatrix& b, int k);

}  // namespace clusterdenom
