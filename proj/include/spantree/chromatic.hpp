#pragma once

#include <vector>

#include "spantree/multigraph.hpp"
#include "spantree/numbers.hpp"

namespace spantree {

/// Polynomial in one variable with exact integer coefficients, stored
/// densely by ascending power.  The zero polynomial has no coefficients;
/// otherwise the last coefficient is nonzero.
class IntPolynomial {
public:
  IntPolynomial() = default;

  explicit IntPolynomial(std::vector<BigInt> coefficients)
      : coefficients_(std::move(coefficients)) {
    trim();
  }

  static IntPolynomial monomial(int power, BigInt coefficient = 1) {
    std::vector<BigInt> c(power + 1);
    c[power] = std::move(coefficient);
    return IntPolynomial(std::move(c));
  }

  bool is_zero() const { return coefficients_.empty(); }

  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coefficients_.size()) - 1; }

  const std::vector<BigInt>& coefficients() const { return coefficients_; }

  BigInt coefficient(int power) const {
    if (power < 0 || power > degree()) return 0;
    return coefficients_[power];
  }

  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<BigInt> c(std::max(a.coefficients_.size(), b.coefficients_.size()));
    for (std::size_t i = 0; i < a.coefficients_.size(); ++i) c[i] += a.coefficients_[i];
    for (std::size_t i = 0; i < b.coefficients_.size(); ++i) c[i] += b.coefficients_[i];
    return IntPolynomial(std::move(c));
  }

  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<BigInt> c(std::max(a.coefficients_.size(), b.coefficients_.size()));
    for (std::size_t i = 0; i < a.coefficients_.size(); ++i) c[i] += a.coefficients_[i];
    for (std::size_t i = 0; i < b.coefficients_.size(); ++i) c[i] -= b.coefficients_[i];
    return IntPolynomial(std::move(c));
  }

  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigInt> c(a.coefficients_.size() + b.coefficients_.size() - 1);
    for (std::size_t i = 0; i < a.coefficients_.size(); ++i)
      for (std::size_t j = 0; j < b.coefficients_.size(); ++j)
        c[i + j] += a.coefficients_[i] * b.coefficients_[j];
    return IntPolynomial(std::move(c));
  }

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

private:
  void trim() {
    while (!coefficients_.empty() && coefficients_.back() == 0) coefficients_.pop_back();
  }

  std::vector<BigInt> coefficients_;
};

inline BigInt evaluate(const IntPolynomial& p, const BigInt& x) {
  BigInt out = 0;
  for (int i = p.degree(); i >= 0; --i) out = out * x + p.coefficient(i);
  return out;
}

namespace detail {

// Parallel edges impose the same coloring constraint as a single edge.
inline Multigraph collapse_parallel(const Multigraph& g) {
  Multigraph out(g.vertex_count());
  for (const auto& [key, mult] : g.edges()) out = out.add_edge(key.u, key.v);
  return out;
}

} // namespace detail

// The unique polynomial whose value at every nonnegative integer k is the
// number of proper k-colorings.  Computed by deletion minus contraction:
//   chi(G, k) = chi(G minus rho, k) - chi(G / rho, k)
// recursing on the smallest edge until the graph is edgeless (k^n), with a
// loop short-circuiting to the zero polynomial and parallel edges collapsed.
inline IntPolynomial chromatic_polynomial(const Multigraph& g) {
  for (const auto& [key, mult] : g.edges())
    if (key.is_loop()) return {};

  Multigraph simple = detail::collapse_parallel(g);
  if (simple.edges().empty())
    return IntPolynomial::monomial(simple.vertex_count());

  EdgeKey rho = simple.edges().begin()->first;
  return chromatic_polynomial(simple.delete_edge(rho)) -
         chromatic_polynomial(simple.contract_edge(rho));
}

} // namespace spantree
