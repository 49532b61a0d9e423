#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "chargraph/permutation.hpp"

namespace chargraph {

using ElementId = std::uint32_t;

inline constexpr std::size_t kDefaultGroupCap = 10'000;
inline constexpr std::size_t kDefaultClassCap = 24;

struct ConjugacyClass {
  Permutation representative;
  std::size_t size = 0;
  std::vector<ElementId> members;  // sorted
};

// A subgroup of a materialized PermGroup, as sorted element indices into the
// parent. `generators` is a small generating set (also parent indices).
struct Subgroup {
  std::vector<ElementId> elements;
  std::vector<ElementId> generators;
  bool is_normal = false;

  std::size_t order() const { return elements.size(); }
  bool contains(ElementId x) const;
  bool is_trivial() const { return elements.size() == 1; }
  friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.elements == b.elements; }
};

// A finite permutation group with every element enumerated. Element 0 is
// the identity; the rest appear in breadth-first order over the generators.
// Conjugacy classes are computed at construction and never change.
class PermGroup {
 public:
  // Throws ClosureExceedsCap if the group has more than `cap` elements and
  // MalformedPermutation if the generators disagree on degree.
  static PermGroup from_generators(std::vector<Permutation> generators,
                                   std::size_t cap = kDefaultGroupCap);

  std::size_t degree() const { return degree_; }
  std::size_t order() const { return elements_.size(); }
  std::uint64_t exponent() const { return exponent_; }
  const std::vector<Permutation>& generators() const { return generators_; }
  const std::vector<ElementId>& generator_ids() const { return generator_ids_; }
  const std::vector<Permutation>& elements() const { return elements_; }
  const Permutation& element(ElementId id) const { return elements_[id]; }

  std::optional<ElementId> find(const Permutation& p) const;
  ElementId multiply(ElementId a, ElementId b) const;
  ElementId inverse(ElementId a) const { return inverses_[a]; }
  // a^-1 * b * a
  ElementId conjugate(ElementId b, ElementId a) const;
  // a^-1 * b^-1 * a * b
  ElementId commutator(ElementId a, ElementId b) const;
  std::uint64_t element_order(ElementId a) const { return elements_[a].order(); }

  const std::vector<ConjugacyClass>& conjugacy_classes() const { return classes_; }
  std::size_t class_of(ElementId a) const { return class_of_[a]; }

  bool is_abelian() const;
  std::vector<std::uint64_t> order_primes() const;

 private:
  PermGroup() = default;
  void build_classes();

  std::size_t degree_ = 0;
  std::uint64_t exponent_ = 1;
  std::vector<Permutation> generators_;
  std::vector<ElementId> generator_ids_;
  std::vector<Permutation> elements_;
  std::unordered_map<Permutation, ElementId, PermutationHash> index_;
  std::vector<ElementId> inverses_;
  std::vector<ElementId> table_;  // full Cayley table when the group is small
  std::vector<ConjugacyClass> classes_;
  std::vector<std::size_t> class_of_;
};

std::vector<ConjugacyClass> conjugacy_classes(const PermGroup& g);

Subgroup whole_group(const PermGroup& g);
Subgroup trivial_subgroup(const PermGroup& g);

// Subgroup generated by `gens`; nullopt if it grows beyond `limit` elements.
std::optional<Subgroup> try_generate(const PermGroup& g, std::span<const ElementId> gens,
                                     std::size_t limit);
Subgroup generate(const PermGroup& g, std::span<const ElementId> gens);

// Smallest subgroup containing `seeds` that is invariant under conjugation by
// every element of `conjugators`.
Subgroup normal_closure(const PermGroup& g, std::span<const ElementId> seeds,
                        std::span<const ElementId> conjugators);

bool is_normal_subgroup(const PermGroup& g, const Subgroup& h);
bool is_abelian(const PermGroup& g, const Subgroup& h);

// [H, K] for H, K given by generators, closed under conjugation by `within`.
Subgroup commutator_subgroup(const PermGroup& g, const Subgroup& h, const Subgroup& k,
                             const Subgroup& within);

// G, G', G'', ... ending at the first repeated term.
std::vector<Subgroup> derived_series(const PermGroup& g);
bool is_solvable(const PermGroup& g);

// Lower central series of H computed inside H.
std::vector<Subgroup> lower_central_series(const PermGroup& g, const Subgroup& h);
bool is_nilpotent(const PermGroup& g, const Subgroup& h);
Subgroup center(const PermGroup& g);

// All normal subgroups, sorted by order (then by element list). Throws
// TooManyClasses when G has more than `class_cap` classes (at most 64).
std::vector<Subgroup> normal_subgroups(const PermGroup& g, std::size_t class_cap = kDefaultClassCap);

Subgroup fitting_subgroup(const PermGroup& g, std::size_t class_cap = kDefaultClassCap);

// Throws PrimeDoesNotDivideOrder.
Subgroup sylow_subgroup(const PermGroup& g, std::uint64_t p);
std::optional<Subgroup> normal_p_complement(const PermGroup& g, std::uint64_t p,
                                            std::size_t class_cap = kDefaultClassCap);

// Regular action on the cosets of N. Throws NotNormal.
PermGroup quotient_group(const PermGroup& g, const Subgroup& n);

// H as a standalone permutation group on the same points.
PermGroup subgroup_as_group(const PermGroup& g, const Subgroup& h);

struct FrobeniusStructure {
  Subgroup kernel;
  Subgroup complement;
  bool kernel_elementary_abelian = false;
  std::uint64_t kernel_prime = 0;  // set when the kernel is elementary abelian
};

std::optional<FrobeniusStructure> frobenius_structure(const PermGroup& g,
                                                      std::size_t class_cap = kDefaultClassCap);

// Direct product acting on disjoint point sets.
PermGroup direct_product(const PermGroup& a, const PermGroup& b,
                         std::size_t cap = kDefaultGroupCap);

}  // namespace chargraph
