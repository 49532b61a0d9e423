#include "chargraph/spectrum.hpp"

#include <algorithm>
#include <sstream>

namespace chargraph {

namespace {

using boost::multiprecision::abs;
using boost::multiprecision::gcd;

// Pseudo-remainder of a by b (deg a >= deg b).
IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<BigInt> r = a.coefficients();
  const auto& d = b.coefficients();
  const int db = b.degree();
  const BigInt& lead = b.leading();
  while (static_cast<int>(r.size()) - 1 >= db && !r.empty()) {
    const BigInt top = r.back();
    const std::size_t shift = r.size() - 1 - static_cast<std::size_t>(db);
    for (auto& c : r) c *= lead;
    for (std::size_t i = 0; i < d.size(); ++i) r[shift + i] -= top * d[i];
    while (!r.empty() && r.back() == 0) r.pop_back();
  }
  return IntPolynomial(std::move(r));
}

}  // namespace

IntPolynomial::IntPolynomial(std::vector<BigInt> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt IntPolynomial::evaluate(const BigInt& x) const {
  BigInt acc = 0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
  return acc;
}

IntPolynomial IntPolynomial::derivative() const {
  std::vector<BigInt> d;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d.push_back(coeffs_[i] * static_cast<long long>(i));
  return IntPolynomial(std::move(d));
}

BigInt IntPolynomial::content() const {
  BigInt c = 0;
  for (const auto& x : coeffs_) c = gcd(c, abs(x));
  return c;
}

IntPolynomial IntPolynomial::primitive_part() const {
  if (is_zero()) return *this;
  BigInt c = content();
  if (leading() < 0) c = -c;
  std::vector<BigInt> out;
  out.reserve(coeffs_.size());
  for (const auto& x : coeffs_) out.push_back(x / c);
  return IntPolynomial(std::move(out));
}

std::string IntPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const BigInt& c = coeffs_[i];
    if (c == 0) continue;
    BigInt mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (mag != 1 || i == 0) os << mag;
    if (i >= 1) os << 'x';
    if (i >= 2) os << '^' << i;
    first = false;
  }
  return os.str();
}

IntPolynomial polynomial_gcd(const IntPolynomial& a, const IntPolynomial& b) {
  IntPolynomial x = a.primitive_part();
  IntPolynomial y = b.primitive_part();
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    IntPolynomial r = pseudo_remainder(x, y).primitive_part();
    x = std::move(y);
    y = std::move(r);
  }
  return x.primitive_part();
}

IntPolynomial exact_quotient(const IntPolynomial& dividend, const IntPolynomial& divisor) {
  std::vector<BigInt> r = dividend.coefficients();
  const auto& d = divisor.coefficients();
  const int dd = divisor.degree();
  if (dividend.degree() < dd) return IntPolynomial();
  std::vector<BigInt> q(static_cast<std::size_t>(dividend.degree() - dd + 1));
  for (int i = dividend.degree() - dd; i >= 0; --i) {
    const auto top = static_cast<std::size_t>(i + dd);
    BigInt c = r[top] / divisor.leading();
    q[static_cast<std::size_t>(i)] = c;
    for (std::size_t j = 0; j < d.size(); ++j) r[static_cast<std::size_t>(i) + j] -= c * d[j];
  }
  return IntPolynomial(std::move(q));
}

IntPolynomial char_poly(const SimpleGraph& g) {
  const std::size_t n = g.n();
  using Mat = std::vector<std::vector<BigInt>>;
  // coefficients c_n = 1, M_1 = I, c_{n-k} = -tr(A M_k) / k,
  // M_{k+1} = A M_k + c_{n-k} I
  std::vector<BigInt> c(n + 1, 0);
  c[n] = 1;
  Mat m(n, std::vector<BigInt>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  for (std::size_t k = 1; k <= n; ++k) {
    Mat am(n, std::vector<BigInt>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
      for_each_vertex(g.neighbors(static_cast<Vertex>(i)), [&](Vertex j) {
        for (std::size_t col = 0; col < n; ++col) am[i][col] += m[j][col];
      });
    }
    BigInt trace = 0;
    for (std::size_t i = 0; i < n; ++i) trace += am[i][i];
    c[n - k] = -trace / static_cast<long long>(k);
    for (std::size_t i = 0; i < n; ++i) am[i][i] += c[n - k];
    m = std::move(am);
  }
  return IntPolynomial(std::move(c));
}

SpectrumSummary spectrum_summary(const IntPolynomial& p, std::size_t vertex_count) {
  SpectrumSummary s;
  if (p.degree() <= 0) return s;
  IntPolynomial square_free = exact_quotient(p, polynomial_gcd(p, p.derivative()));
  s.distinct_count = static_cast<std::size_t>(square_free.degree());

  // Strip the root 0, then test divisors of the constant term. Adjacency
  // eigenvalues satisfy |r| <= n - 1.
  std::vector<BigInt> coeffs = p.coefficients();
  std::size_t zero_mult = 0;
  while (!coeffs.empty() && coeffs.front() == 0) {
    coeffs.erase(coeffs.begin());
    ++zero_mult;
  }
  IntPolynomial rest(coeffs);
  std::vector<std::pair<long long, std::size_t>> roots;
  if (zero_mult > 0) roots.emplace_back(0, zero_mult);
  const BigInt constant = rest.is_zero() ? BigInt(0) : abs(rest[0]);
  const auto bound = static_cast<long long>(std::max<std::size_t>(vertex_count, 1));
  for (long long r = 1; r <= bound && rest.degree() > 0; ++r) {
    if (constant % r != 0) continue;
    for (long long cand : {r, -r}) {
      std::size_t mult = 0;
      IntPolynomial lin(std::vector<BigInt>{BigInt(-cand), BigInt(1)});
      while (rest.degree() > 0 && rest.evaluate(cand) == 0) {
        rest = exact_quotient(rest, lin);
        ++mult;
      }
      if (mult > 0) roots.emplace_back(cand, mult);
    }
  }
  std::sort(roots.begin(), roots.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
  s.integer_eigenvalues = std::move(roots);
  s.irrational_multiplicity = static_cast<std::size_t>(std::max(rest.degree(), 0));
  s.has_irrational_part = s.irrational_multiplicity > 0;
  return s;
}

SpectrumSummary distinct_eigenvalue_count(const SimpleGraph& g) {
  return spectrum_summary(char_poly(g), g.n());
}

}  // namespace chargraph
