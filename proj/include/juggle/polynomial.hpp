#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "juggle/big_int.hpp"
#include "juggle/errors.hpp"
#include "juggle/matrix.hpp"

namespace juggle {

/// Polynomial with big-integer coefficients, constant term first. Trailing
/// zero coefficients are trimmed so the zero polynomial has no coefficients.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coefficients) : coeffs_(std::move(coefficients)) { trim(); }
  IntPolynomial(std::initializer_list<long long> coefficients) {
    for (long long c : coefficients) coeffs_.emplace_back(c);
    trim();
  }

  static IntPolynomial monomial(const BigInt& coefficient, std::size_t degree) {
    std::vector<BigInt> c(degree + 1, BigInt(0));
    c[degree] = coefficient;
    return IntPolynomial(std::move(c));
  }

  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  const std::vector<BigInt>& coefficients() const noexcept { return coeffs_; }

  BigInt operator[](std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigInt(0); }
  BigInt leading() const { return is_zero() ? BigInt(0) : coeffs_.back(); }
  bool is_monic() const { return !is_zero() && coeffs_.back() == 1; }

  BigInt evaluate(const BigInt& x) const {
    BigInt value = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) value = value * x + *it;
    return value;
  }

  /// Terms of degree <= max_degree.
  IntPolynomial truncated(std::size_t max_degree) const {
    std::vector<BigInt> c(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(
                                                                std::min(coeffs_.size(), max_degree + 1)));
    return IntPolynomial(std::move(c));
  }

  /// x^d p(1/x) for d = degree().
  IntPolynomial reversed() const {
    std::vector<BigInt> c(coeffs_.rbegin(), coeffs_.rend());
    return IntPolynomial(std::move(c));
  }

  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<BigInt> c(std::max(a.coeffs_.size(), b.coeffs_.size()), BigInt(0));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a[i] + b[i];
    return IntPolynomial(std::move(c));
  }

  friend IntPolynomial operator-(const IntPolynomial& a) {
    std::vector<BigInt> c = a.coeffs_;
    for (auto& x : c) x = -x;
    return IntPolynomial(std::move(c));
  }

  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) { return a + (-b); }

  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigInt> c(a.coeffs_.size() + b.coeffs_.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return IntPolynomial(std::move(c));
  }

  friend IntPolynomial operator*(const BigInt& s, const IntPolynomial& p) {
    std::vector<BigInt> c = p.coeffs_;
    for (auto& x : c) x *= s;
    return IntPolynomial(std::move(c));
  }

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  /// Human form in increasing degree, e.g. "1 - 10x + 27x^2 - 20x^3".
  std::string to_string(char variable = 'x') const { return format(false, variable); }

  /// Same, highest degree first, e.g. "x^3 - 10x^2 + 27x - 20".
  std::string to_string_descending(char variable = 'x') const { return format(true, variable); }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::string format(bool descending, char variable) const {
    if (is_zero()) return "0";
    std::string out;
    auto term = [&](std::size_t i) {
      const BigInt& c = coeffs_[i];
      if (c == 0) return;
      const bool negative = c < 0;
      const BigInt magnitude = negative ? BigInt(-c) : c;
      if (out.empty()) {
        if (negative) out += '-';
      } else {
        out += negative ? " - " : " + ";
      }
      if (i == 0 || magnitude != 1) out += magnitude.str();
      if (i >= 1) out += variable;
      if (i >= 2) out += "^" + std::to_string(i);
    };
    if (descending) {
      for (std::size_t i = coeffs_.size(); i-- > 0;) term(i);
    } else {
      for (std::size_t i = 0; i < coeffs_.size(); ++i) term(i);
    }
    return out;
  }

  std::vector<BigInt> coeffs_;
};

/// Exact quotient of a by b; throws if b does not divide a over Z[x].
inline IntPolynomial exact_divide(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw ParameterError("polynomial division by zero");
  std::vector<BigInt> rem = a.coefficients();
  if (a.degree() < b.degree()) {
    if (a.is_zero()) return {};
    throw ParameterError("polynomial division is not exact");
  }
  const std::size_t db = static_cast<std::size_t>(b.degree());
  std::vector<BigInt> quotient(rem.size() - db, BigInt(0));
  for (std::size_t k = quotient.size(); k-- > 0;) {
    const BigInt& top = rem[k + db];
    if (top % b.leading() != 0) throw ParameterError("polynomial division is not exact");
    quotient[k] = top / b.leading();
    for (std::size_t i = 0; i <= db; ++i) rem[k + i] -= quotient[k] * b[i];
  }
  if (!IntPolynomial(rem).is_zero()) throw ParameterError("polynomial division is not exact");
  return IntPolynomial(std::move(quotient));
}

/// gcd of the coefficients (nonnegative).
inline BigInt content(const IntPolynomial& p) {
  BigInt g = 0;
  for (const auto& c : p.coefficients()) g = boost::multiprecision::gcd(g, c);
  return g;
}

inline IntPolynomial primitive_part(const IntPolynomial& p) {
  if (p.is_zero()) return p;
  BigInt g = content(p);
  if (p.leading() < 0) g = -g;
  std::vector<BigInt> c = p.coefficients();
  for (auto& x : c) x /= g;
  return IntPolynomial(std::move(c));
}

/// Primitive gcd over Z[x] (positive leading coefficient), by the
/// primitive pseudo-remainder sequence.
inline IntPolynomial gcd(IntPolynomial a, IntPolynomial b) {
  if (a.is_zero()) return primitive_part(b);
  if (b.is_zero()) return primitive_part(a);
  a = primitive_part(a);
  b = primitive_part(b);
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    // pseudo-remainder of a by b
    std::vector<BigInt> rem = a.coefficients();
    const std::size_t db = static_cast<std::size_t>(b.degree());
    const BigInt lead = b.leading();
    for (std::size_t k = rem.size(); k-- > db;) {
      const BigInt top = rem[k];
      for (auto& x : rem) x *= lead;
      for (std::size_t i = 0; i <= db; ++i) rem[k - db + i] -= top * b[i];
    }
    rem.resize(db);
    a = std::move(b);
    b = primitive_part(IntPolynomial(std::move(rem)));
  }
  return a;
}

/// det(xI - A) by the Faddeev-LeVerrier recursion. Every division by k is
/// exact for an integer matrix, so no rationals appear.
inline IntPolynomial char_poly(const Matrix<BigInt>& a) {
  if (!a.square()) throw ParameterError("characteristic polynomial of a non-square matrix");
  const std::size_t n = a.rows();
  std::vector<BigInt> c(n + 1, BigInt(0));
  c[n] = 1;
  Matrix<BigInt> running(n, n);  // M_k
  for (std::size_t k = 1; k <= n; ++k) {
    running = a * running;
    for (std::size_t i = 0; i < n; ++i) running(i, i) += c[n - k + 1];
    const Matrix<BigInt> product = a * running;
    BigInt trace = 0;
    for (std::size_t i = 0; i < n; ++i) trace += product(i, i);
    if (trace % k != 0) throw std::logic_error("inexact division in characteristic polynomial");
    c[n - k] = -trace / k;
  }
  return IntPolynomial(std::move(c));
}

/// a(n) = -q_1 a(n-1) - ... - q_r a(n-r) for a monic characteristic
/// polynomial x^r + q_1 x^{r-1} + ... + q_r.
struct LinearRecurrence {
  std::vector<BigInt> q;  // q_1 .. q_r

  std::size_t order() const noexcept { return q.size(); }

  /// Next term from the last order() terms (oldest first).
  BigInt next(const std::vector<BigInt>& terms) const {
    if (terms.size() < order()) throw ParameterError("not enough terms to apply the recurrence");
    BigInt value = 0;
    for (std::size_t i = 1; i <= order(); ++i) value -= q[i - 1] * terms[terms.size() - i];
    return value;
  }

  /// Appends terms until `terms` has `count` entries.
  void extend(std::vector<BigInt>& terms, std::size_t count) const {
    while (terms.size() < count) terms.push_back(next(terms));
  }

  /// "a(n+3) = 10a(n+2) - 27a(n+1) + 20a(n)"
  std::string to_string() const {
    const std::size_t r = order();
    std::string out = "a(n" + (r ? "+" + std::to_string(r) : std::string()) + ") =";
    bool first = true;
    for (std::size_t i = 1; i <= r; ++i) {
      const BigInt c = -q[i - 1];
      if (c == 0) continue;
      const bool negative = c < 0;
      const BigInt magnitude = negative ? BigInt(-c) : c;
      out += first ? (negative ? " -" : " ") : (negative ? " - " : " + ");
      first = false;
      if (magnitude != 1) out += magnitude.str();
      out += "a(n" + (r - i ? "+" + std::to_string(r - i) : std::string()) + ")";
    }
    if (first) out += " 0";
    return out;
  }

  friend bool operator==(const LinearRecurrence&, const LinearRecurrence&) = default;
};

inline LinearRecurrence recurrence_from_charpoly(const IntPolynomial& p) {
  if (!p.is_monic()) throw ParameterError("characteristic polynomial must be monic");
  const std::size_t r = static_cast<std::size_t>(p.degree());
  LinearRecurrence rec;
  for (std::size_t i = 1; i <= r; ++i) rec.q.push_back(p[r - i]);
  return rec;
}

/// A generating function numerator / denominator with denominator(0) = 1.
struct RationalGF {
  IntPolynomial numerator;
  IntPolynomial denominator{1};

  RationalGF() = default;
  RationalGF(IntPolynomial num, IntPolynomial den) : numerator(std::move(num)), denominator(std::move(den)) {
    if (denominator[0] != 1) throw ParameterError("generating function denominator must have constant term 1");
  }

  std::string to_string() const {
    return "(" + numerator.to_string() + ") / (" + denominator.to_string() + ")";
  }

  friend bool operator==(const RationalGF&, const RationalGF&) = default;
};

/// Power-series coefficients of x^1 .. x^count.
inline std::vector<BigInt> expand(const RationalGF& gf, std::size_t count) {
  std::vector<BigInt> series(count + 1, BigInt(0));
  const auto& den = gf.denominator;
  for (std::size_t k = 0; k <= count; ++k) {
    BigInt value = gf.numerator[k];
    for (std::size_t i = 1; i <= k && static_cast<int>(i) <= den.degree(); ++i) value -= den[i] * series[k - i];
    series[k] = std::move(value);
  }
  series.erase(series.begin());
  return series;
}

/// F / (1 + F): first-return counts from closed-walk counts.
inline RationalGF primitive_transform(const RationalGF& f) {
  if (f.numerator[0] != 0) throw ParameterError("primitive transform needs F(0) = 0");
  return RationalGF(f.numerator, f.denominator + f.numerator);
}

/// The same function in lowest terms.
inline RationalGF reduced(const RationalGF& f) {
  if (f.numerator.is_zero()) return RationalGF({}, IntPolynomial{1});
  IntPolynomial g = gcd(f.numerator, f.denominator);
  if (g.degree() <= 0) return f;
  if (g[0] < 0) g = -g;
  return RationalGF(exact_divide(f.numerator, g), exact_divide(f.denominator, g));
}

}  // namespace juggle
