#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "semibetti/error.hpp"

namespace semibetti {

/// Univariate polynomial with Int coefficients, dense, no trailing zeros.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Int> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

  /// -1 for the zero polynomial.
  Int degree() const noexcept { return static_cast<Int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  const std::vector<Int>& coefficients() const noexcept { return coeffs_; }

  Int coefficient(Int d) const noexcept {
    if (d < 0 || d > degree()) return 0;
    return coeffs_[static_cast<std::size_t>(d)];
  }

  void add_term(Int d, Int c) {
    if (static_cast<std::size_t>(d) >= coeffs_.size()) coeffs_.resize(static_cast<std::size_t>(d) + 1, 0);
    coeffs_[static_cast<std::size_t>(d)] += c;
    trim();
  }

  Int value_at_one() const noexcept {
    Int sum = 0;
    for (Int c : coeffs_) sum += c;
    return sum;
  }

  /// Largest e such that (1 - t)^e divides the polynomial. Zero polynomial
  /// reports -1.
  int vanishing_order_at_one() const {
    if (is_zero()) return -1;
    IntPolynomial p = *this;
    int order = 0;
    while (p.value_at_one() == 0) {
      // Synthetic division by (t - 1).
      std::vector<Int> q(p.coeffs_.size() - 1, 0);
      Int carry = 0;
      for (std::size_t i = p.coeffs_.size(); i-- > 1;) {
        carry += p.coeffs_[i];
        q[i - 1] = carry;
      }
      p = IntPolynomial(std::move(q));
      ++order;
    }
    return order;
  }

  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<Int> out(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) out[i] -= b.coeffs_[i];
    return IntPolynomial(std::move(out));
  }

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  std::string to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t d = 0; d < coeffs_.size(); ++d) {
      const Int c = coeffs_[d];
      if (c == 0) continue;
      const Int mag = c < 0 ? -c : c;
      if (out.empty()) {
        if (c < 0) out += "-";
      } else {
        out += c < 0 ? " - " : " + ";
      }
      if (d == 0) {
        out += std::to_string(mag);
        continue;
      }
      if (mag != 1) out += std::to_string(mag) + "*";
      out += "t";
      if (d != 1) out += "^" + std::to_string(d);
    }
    return out;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<Int> coeffs_;
};

}  // namespace semibetti
