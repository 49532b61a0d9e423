#include "chargraph/degrees.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <sstream>

#include <nlohmann/json.hpp>

#include "chargraph/errors.hpp"
#include "chargraph/number_theory.hpp"

namespace chargraph {

namespace {

using Row = std::vector<std::uint64_t>;
using Matrix = std::vector<Row>;

// Row-reduced basis of a subspace of GF(l)^r.
struct Subspace {
  Matrix rows;
  std::vector<std::size_t> pivots;
};

std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return a >= b ? a - b : a + p - b;
}

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> row_reduce(Matrix& m, std::uint64_t p) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t cols = m.front().size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t piv = rank;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[rank], m[piv]);
    const std::uint64_t inv = modp::inv(m[rank][c], p);
    for (auto& x : m[rank]) x = modp::mul(x, inv, p);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == rank || m[r][c] == 0) continue;
      const std::uint64_t f = m[r][c];
      for (std::size_t k = 0; k < cols; ++k) {
        m[r][k] = sub_mod(m[r][k], modp::mul(f, m[rank][k], p), p);
      }
    }
    pivots.push_back(c);
    ++rank;
  }
  m.resize(rank);
  return pivots;
}

Matrix nullspace(Matrix a, std::uint64_t p) {
  const std::size_t cols = a.empty() ? 0 : a.front().size();
  auto pivots = row_reduce(a, p);
  std::vector<char> is_pivot(cols, 0);
  for (auto c : pivots) is_pivot[c] = 1;
  Matrix basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Row v(cols, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = sub_mod(0, a[r][free], p);
    basis.push_back(std::move(v));
  }
  return basis;
}

// Characteristic polynomial (ascending coefficients) via Hessenberg reduction.
Row char_poly_mod(Matrix h, std::uint64_t p) {
  const std::size_t n = h.size();
  for (std::size_t j = 0; j + 2 < n; ++j) {
    std::size_t i = j + 1;
    while (i < n && h[i][j] == 0) ++i;
    if (i == n) continue;
    if (i != j + 1) {
      std::swap(h[i], h[j + 1]);
      for (std::size_t r = 0; r < n; ++r) std::swap(h[r][i], h[r][j + 1]);
    }
    const std::uint64_t inv = modp::inv(h[j + 1][j], p);
    for (std::size_t k = j + 2; k < n; ++k) {
      const std::uint64_t u = modp::mul(h[k][j], inv, p);
      if (u == 0) continue;
      for (std::size_t c = 0; c < n; ++c) h[k][c] = sub_mod(h[k][c], modp::mul(u, h[j + 1][c], p), p);
      for (std::size_t r = 0; r < n; ++r) h[r][j + 1] = (h[r][j + 1] + modp::mul(u, h[r][k], p)) % p;
    }
  }
  std::vector<Row> polys(n + 1);
  polys[0] = {1};
  for (std::size_t m = 0; m < n; ++m) {
    Row next(m + 2, 0);
    for (std::size_t d = 0; d <= m; ++d) {
      next[d + 1] = (next[d + 1] + polys[m][d]) % p;
      next[d] = sub_mod(next[d], modp::mul(h[m][m], polys[m][d], p), p);
    }
    std::uint64_t t = 1;
    for (std::size_t i = m; i-- > 0;) {
      t = modp::mul(t, h[i + 1][i], p);
      const std::uint64_t f = modp::mul(h[i][m], t, p);
      if (f == 0) continue;
      for (std::size_t d = 0; d < polys[i].size(); ++d) {
        next[d] = sub_mod(next[d], modp::mul(f, polys[i][d], p), p);
      }
    }
    polys[m + 1] = std::move(next);
  }
  return polys[n];
}

std::uint64_t eval_mod(const Row& f, std::uint64_t x, std::uint64_t p) {
  std::uint64_t acc = 0;
  for (std::size_t i = f.size(); i-- > 0;) acc = (modp::mul(acc, x, p) + f[i]) % p;
  return acc;
}

// Distinct roots in GF(p), assuming f splits into linear factors.
std::vector<std::uint64_t> roots_mod(Row f, std::uint64_t p) {
  std::vector<std::uint64_t> roots;
  for (std::uint64_t x = 0; x < p && f.size() > 1; ++x) {
    bool hit = false;
    while (f.size() > 1 && eval_mod(f, x, p) == 0) {
      hit = true;
      // synthetic division by (t - x)
      Row q(f.size() - 1, 0);
      std::uint64_t carry = 0;
      for (std::size_t i = f.size(); i-- > 1;) {
        carry = (f[i] + modp::mul(carry, x, p)) % p;
        q[i - 1] = carry;
      }
      f = std::move(q);
    }
    if (hit) roots.push_back(x);
  }
  if (f.size() > 1) {
    throw Error(ErrorKind::DegreeRecoveryFailure, "class matrix eigenvalues do not lie in GF(l)");
  }
  return roots;
}

std::vector<Subspace> split(const Subspace& w, const Matrix& m, std::uint64_t p) {
  const std::size_t d = w.rows.size();
  const std::size_t r = m.size();
  Matrix images(d, Row(r, 0));
  for (std::size_t s = 0; s < d; ++s) {
    for (std::size_t j = 0; j < r; ++j) {
      std::uint64_t acc = 0;
      for (std::size_t k = 0; k < r; ++k) {
        if (m[j][k] != 0 && w.rows[s][k] != 0) acc = (acc + modp::mul(m[j][k], w.rows[s][k], p)) % p;
      }
      images[s][j] = acc;
    }
  }
  Matrix restricted(d, Row(d, 0));
  for (std::size_t t = 0; t < d; ++t) {
    for (std::size_t s = 0; s < d; ++s) restricted[t][s] = images[s][w.pivots[t]];
  }
  auto eigenvalues = roots_mod(char_poly_mod(restricted, p), p);
  if (eigenvalues.size() == 1) return {w};

  std::vector<Subspace> out;
  std::size_t total = 0;
  for (std::uint64_t lambda : eigenvalues) {
    Matrix shifted = restricted;
    for (std::size_t t = 0; t < d; ++t) shifted[t][t] = sub_mod(shifted[t][t], lambda, p);
    Subspace piece;
    for (const auto& coords : nullspace(std::move(shifted), p)) {
      Row v(r, 0);
      for (std::size_t s = 0; s < d; ++s) {
        if (coords[s] == 0) continue;
        for (std::size_t k = 0; k < r; ++k) v[k] = (v[k] + modp::mul(coords[s], w.rows[s][k], p)) % p;
      }
      piece.rows.push_back(std::move(v));
    }
    piece.pivots = row_reduce(piece.rows, p);
    total += piece.rows.size();
    out.push_back(std::move(piece));
  }
  if (total != d) {
    throw Error(ErrorKind::DegreeRecoveryFailure, "class matrix is not diagonalizable on a common eigenspace");
  }
  return out;
}

}  // namespace

DegreeMultiset DegreeMultiset::from_list(std::span<const std::uint64_t> values, DegreeSource source) {
  if (values.empty()) throw Error(ErrorKind::EmptyInput, "degree list is empty");
  std::map<std::uint64_t, std::uint64_t> counts;
  for (auto v : values) {
    if (v == 0) throw Error(ErrorKind::ParseError, "character degrees are positive");
    ++counts[v];
  }
  DegreeMultiset d;
  d.entries_.assign(counts.begin(), counts.end());
  d.source_ = source;
  return d;
}

std::vector<std::uint64_t> DegreeMultiset::distinct_degrees() const {
  std::vector<std::uint64_t> out;
  for (const auto& [deg, mult] : entries_) out.push_back(deg);
  return out;
}

std::vector<std::uint64_t> DegreeMultiset::expanded() const {
  std::vector<std::uint64_t> out;
  for (const auto& [deg, mult] : entries_) out.insert(out.end(), mult, deg);
  return out;
}

std::uint64_t DegreeMultiset::count() const {
  std::uint64_t n = 0;
  for (const auto& [deg, mult] : entries_) n += mult;
  return n;
}

std::uint64_t DegreeMultiset::sum_of_squares() const {
  std::uint64_t s = 0;
  for (const auto& [deg, mult] : entries_) s += mult * deg * deg;
  return s;
}

std::uint64_t DegreeMultiset::multiplicity(std::uint64_t degree) const {
  for (const auto& [deg, mult] : entries_) {
    if (deg == degree) return mult;
  }
  return 0;
}

std::string DegreeMultiset::to_string() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) os << ", ";
    os << entries_[i].first << 'x' << entries_[i].second;
  }
  os << '}';
  return os.str();
}

DegreeMultiset degree_multiset_from_list(std::span<const std::uint64_t> values) {
  return DegreeMultiset::from_list(values);
}

DegreeMultiset parse_degree_list(const std::string& text) {
  std::vector<std::uint64_t> values;
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '[') {
    try {
      for (const auto& v : nlohmann::json::parse(text)) {
        auto x = v.get<std::int64_t>();
        if (x < 1) throw Error(ErrorKind::ParseError, "character degrees are positive");
        values.push_back(static_cast<std::uint64_t>(x));
      }
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorKind::ParseError, e.what());
    }
    return DegreeMultiset::from_list(values);
  }
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    std::string token = text.substr(pos, comma - pos);
    auto a = token.find_first_not_of(" \t\r\n");
    auto b = token.find_last_not_of(" \t\r\n");
    if (a == std::string::npos) {
      if (comma != text.size() || !values.empty()) throw Error(ErrorKind::ParseError, "empty degree entry");
    } else {
      token = token.substr(a, b - a + 1);
      std::uint64_t v = 0;
      auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
      if (ec != std::errc() || ptr != token.data() + token.size()) {
        throw Error(ErrorKind::ParseError, "bad degree '" + token + "'");
      }
      values.push_back(v);
    }
    pos = comma + 1;
  }
  return DegreeMultiset::from_list(values);
}

ClassMatrix class_matrix(const PermGroup& g, std::size_t class_index) {
  const auto& classes = g.conjugacy_classes();
  const std::size_t r = classes.size();
  ClassMatrix cm;
  cm.class_index = class_index;
  cm.coefficients.assign(r, std::vector<std::uint64_t>(r, 0));
  for (std::size_t k = 0; k < r; ++k) {
    const ElementId z = classes[k].members.front();
    for (ElementId x : classes[class_index].members) {
      ElementId y = g.multiply(g.inverse(x), z);
      ++cm.coefficients[g.class_of(y)][k];
    }
  }
  return cm;
}

std::uint64_t dixon_prime(std::uint64_t order, std::uint64_t exponent) {
  std::uint64_t l = exponent + 1;
  while (!(l * l > 4 * order && is_prime(l))) l += exponent;
  return l;
}

DegreeMultiset character_degrees(const PermGroup& g) {
  const std::uint64_t order = g.order();
  const auto& classes = g.conjugacy_classes();
  const std::size_t r = classes.size();
  if (r == order) {
    std::vector<std::uint64_t> ones(order, 1);
    return DegreeMultiset::from_list(ones, DegreeSource::Group);
  }
  const std::uint64_t l = dixon_prime(order, g.exponent());

  Subspace whole;
  whole.rows.assign(r, Row(r, 0));
  for (std::size_t i = 0; i < r; ++i) {
    whole.rows[i][i] = 1;
    whole.pivots.push_back(i);
  }
  std::vector<Subspace> spaces{whole};
  auto unsplit = [&] {
    return std::any_of(spaces.begin(), spaces.end(), [](const Subspace& s) { return s.rows.size() > 1; });
  };
  for (std::size_t i = 1; i < r && unsplit(); ++i) {
    Matrix m = class_matrix(g, i).coefficients;
    for (auto& row : m) {
      for (auto& x : row) x %= l;
    }
    std::vector<Subspace> next;
    for (const auto& w : spaces) {
      if (w.rows.size() == 1) {
        next.push_back(w);
        continue;
      }
      for (auto& piece : split(w, m, l)) next.push_back(std::move(piece));
    }
    spaces = std::move(next);
  }
  if (unsplit()) {
    throw Error(ErrorKind::DegreeRecoveryFailure, "class matrices did not separate the characters");
  }

  std::vector<std::size_t> inverse_class(r);
  for (std::size_t j = 0; j < r; ++j) inverse_class[j] = g.class_of(g.inverse(classes[j].members.front()));

  const std::uint64_t root_bound = isqrt(order);
  std::vector<std::uint64_t> degrees;
  for (const auto& w : spaces) {
    Row v = w.rows.front();
    if (v[0] == 0) throw Error(ErrorKind::DegreeRecoveryFailure, "central character vanishes at the identity");
    const std::uint64_t scale = modp::inv(v[0], l);
    for (auto& x : v) x = modp::mul(x, scale, l);
    // sum_j w_j w_j' / |C_j| = |G| / d^2
    std::uint64_t s = 0;
    for (std::size_t j = 0; j < r; ++j) {
      std::uint64_t term = modp::mul(v[j], v[inverse_class[j]], l);
      term = modp::mul(term, modp::inv(classes[j].size % l, l), l);
      s = (s + term) % l;
    }
    if (s == 0) throw Error(ErrorKind::DegreeRecoveryFailure, "degenerate orthogonality sum");
    const std::uint64_t d2 = modp::mul(order % l, modp::inv(s, l), l);
    std::uint64_t found = 0;
    for (std::uint64_t d = 1; d <= root_bound; ++d) {
      if (modp::mul(d, d, l) == d2) {
        found = d;
        break;
      }
    }
    if (found == 0 || order % found != 0) {
      throw Error(ErrorKind::DegreeRecoveryFailure, "no integer degree matches the recovered square");
    }
    degrees.push_back(found);
  }
  auto cd = DegreeMultiset::from_list(degrees, DegreeSource::Group);
  if (cd.sum_of_squares() != order || cd.count() != r) {
    throw Error(ErrorKind::DegreeRecoveryFailure, "recovered degrees violate sum d^2 = |G|");
  }
  return cd;
}

DegreeMultiset psl2_2n_degrees(unsigned n) {
  if (n < 2 || n > 62) throw Error(ErrorKind::ParseError, "PSL(2, 2^n) needs 2 <= n <= 62");
  const std::uint64_t q = std::uint64_t{1} << n;
  std::vector<std::uint64_t> values{1, q - 1, q, q + 1};
  return DegreeMultiset::from_list(values);
}

DegreeMultiset direct_product_degrees(const DegreeMultiset& a, const DegreeMultiset& b) {
  if (a.empty() || b.empty()) throw Error(ErrorKind::EmptyInput, "direct product of an empty degree multiset");
  std::vector<std::uint64_t> values;
  for (const auto& [da, ma] : a.entries()) {
    for (const auto& [db, mb] : b.entries()) values.insert(values.end(), ma * mb, da * db);
  }
  auto source = (a.source() == DegreeSource::Group && b.source() == DegreeSource::Group)
                    ? DegreeSource::Group
                    : DegreeSource::External;
  return DegreeMultiset::from_list(values, source);
}

std::vector<QuotientDegrees> quotient_degree_survey(const PermGroup& g, std::size_t class_cap) {
  std::vector<QuotientDegrees> out;
  for (auto& n : normal_subgroups(g, class_cap)) {
    auto q = quotient_group(g, n);
    out.push_back({std::move(n), character_degrees(q)});
  }
  return out;
}

std::vector<ItoMichlerEntry> ito_michler_check(const PermGroup& g, const DegreeMultiset& cd) {
  std::vector<ItoMichlerEntry> out;
  for (std::uint64_t p : g.order_primes()) {
    ItoMichlerEntry e;
    e.prime = p;
    for (const auto& [deg, mult] : cd.entries()) {
      if (deg % p == 0) e.divides_some_degree = true;
    }
    Subgroup sylow = sylow_subgroup(g, p);
    e.sylow_normal_abelian = sylow.is_normal && is_abelian(g, sylow);
    e.consistent = (!e.divides_some_degree) == e.sylow_normal_abelian;
    out.push_back(e);
  }
  return out;
}

std::vector<ItoMichlerEntry> ito_michler_check(const PermGroup& g) {
  return ito_michler_check(g, character_degrees(g));
}

}  // namespace chargraph
