#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "chargraph/perm_group.hpp"

namespace chargraph {

enum class DegreeSource { Group, External };

// cd(G) with multiplicities. Entries are sorted by degree.
class DegreeMultiset {
 public:
  using Entry = std::pair<std::uint64_t, std::uint64_t>;  // (degree, multiplicity)

  DegreeMultiset() = default;

  // Throws EmptyInput on an empty list and ParseError on a zero degree.
  static DegreeMultiset from_list(std::span<const std::uint64_t> values,
                                  DegreeSource source = DegreeSource::External);

  const std::vector<Entry>& entries() const { return entries_; }
  DegreeSource source() const { return source_; }

  std::vector<std::uint64_t> distinct_degrees() const;
  std::vector<std::uint64_t> expanded() const;
  std::uint64_t count() const;
  std::uint64_t sum_of_squares() const;
  std::uint64_t multiplicity(std::uint64_t degree) const;
  bool empty() const { return entries_.empty(); }

  // "{1x2, 2x1}"
  std::string to_string() const;

  friend bool operator==(const DegreeMultiset& a, const DegreeMultiset& b) {
    return a.entries_ == b.entries_;
  }

 private:
  std::vector<Entry> entries_;
  DegreeSource source_ = DegreeSource::External;
};

DegreeMultiset degree_multiset_from_list(std::span<const std::uint64_t> values);

// Parses "1,15,16,17" or a JSON array "[1,15,16,17]".
DegreeMultiset parse_degree_list(const std::string& text);

// Structure constants for class i: coefficients[j][k] counts pairs (x, y)
// with x in C_i, y in C_j and xy equal to the fixed representative of C_k.
// Every column sums to |C_i|.
struct ClassMatrix {
  std::size_t class_index = 0;
  std::vector<std::vector<std::uint64_t>> coefficients;
};

ClassMatrix class_matrix(const PermGroup& g, std::size_t class_index);

// Smallest prime l with l = 1 (mod exponent) and l > 2 sqrt(order).
std::uint64_t dixon_prime(std::uint64_t order, std::uint64_t exponent);

// Irreducible character degrees via simultaneous eigenvectors of the class
// matrices over GF(l). Throws DegreeRecoveryFailure if the recovered
// degrees fail the sum-of-squares or class-count identities.
DegreeMultiset character_degrees(const PermGroup& g);

// {1, 2^n, 2^n - 1, 2^n + 1}, each with multiplicity one.
DegreeMultiset psl2_2n_degrees(unsigned n);

DegreeMultiset direct_product_degrees(const DegreeMultiset& a, const DegreeMultiset& b);

struct QuotientDegrees {
  Subgroup kernel;
  DegreeMultiset degrees;
};

// cd(G/N) for every normal subgroup N, in normal_subgroups order.
std::vector<QuotientDegrees> quotient_degree_survey(const PermGroup& g,
                                                    std::size_t class_cap = kDefaultClassCap);

struct ItoMichlerEntry {
  std::uint64_t prime = 0;
  bool divides_some_degree = false;
  bool sylow_normal_abelian = false;
  bool consistent = false;
};

// One entry per prime dividing |G|.
std::vector<ItoMichlerEntry> ito_michler_check(const PermGroup& g, const DegreeMultiset& cd);
std::vector<ItoMichlerEntry> ito_michler_check(const PermGroup& g);

}  // namespace chargraph
