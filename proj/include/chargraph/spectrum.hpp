#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "chargraph/simple_graph.hpp"

namespace chargraph {

using BigInt = boost::multiprecision::cpp_int;

// Dense integer polynomial, coefficients in ascending degree order with no
// trailing zeros (the zero polynomial is empty).
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coefficients);

  const std::vector<BigInt>& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const BigInt& leading() const { return coeffs_.back(); }
  const BigInt& operator[](std::size_t i) const { return coeffs_[i]; }

  BigInt evaluate(const BigInt& x) const;
  IntPolynomial derivative() const;
  BigInt content() const;
  IntPolynomial primitive_part() const;

  // "x^3 - 3x - 2"
  std::string to_string() const;

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

// gcd over Q, normalized primitive with positive leading coefficient;
// computed with a primitive pseudo-remainder sequence.
IntPolynomial polynomial_gcd(const IntPolynomial& a, const IntPolynomial& b);

// Exact division; the divisor must divide the dividend over Z[x] up to the
// divisor's leading coefficient being +-1 or dividing every step.
IntPolynomial exact_quotient(const IntPolynomial& dividend, const IntPolynomial& divisor);

// Monic characteristic polynomial det(xI - A) of the adjacency matrix,
// computed by the Faddeev-LeVerrier recurrence over the integers.
IntPolynomial char_poly(const SimpleGraph& g);

struct SpectrumSummary {
  std::size_t distinct_count = 0;
  // Integer eigenvalues, decreasing, with multiplicities.
  std::vector<std::pair<long long, std::size_t>> integer_eigenvalues;
  // Total multiplicity of eigenvalues that are not integers.
  std::size_t irrational_multiplicity = 0;
  bool has_irrational_part = false;
};

// distinct_count = deg(p / gcd(p, p')). Integer roots come from divisor
// testing of the (x-stripped) constant term, restricted to |r| < n.
SpectrumSummary distinct_eigenvalue_count(const SimpleGraph& g);
SpectrumSummary spectrum_summary(const IntPolynomial& p, std::size_t vertex_count);

}  // namespace chargraph
