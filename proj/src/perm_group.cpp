#include "chargraph/perm_group.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <limits>
#include <map>
#include <numeric>

#include "chargraph/errors.hpp"
#include "chargraph/number_theory.hpp"

namespace chargraph {

namespace {

constexpr std::size_t kCayleyTableLimit = 1024;

std::vector<ElementId> dedup_generators(const PermGroup& g, std::span<const ElementId> gens) {
  std::vector<ElementId> out;
  for (ElementId x : gens) {
    if (x == 0) continue;
    if (std::find(out.begin(), out.end(), x) == out.end()) out.push_back(x);
  }
  (void)g;
  return out;
}

// Breadth-first closure of {1} under right multiplication by `gens`.
std::optional<std::vector<ElementId>> closure(const PermGroup& g, std::span<const ElementId> gens,
                                              std::size_t limit) {
  std::vector<char> seen(g.order(), 0);
  std::vector<ElementId> out{0};
  seen[0] = 1;
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (ElementId s : gens) {
      ElementId y = g.multiply(out[i], s);
      if (!seen[y]) {
        seen[y] = 1;
        out.push_back(y);
        if (out.size() > limit) return std::nullopt;
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Generating set for an arbitrary subgroup given by its elements.
Subgroup subgroup_from_elements(const PermGroup& g, std::vector<ElementId> elements) {
  std::sort(elements.begin(), elements.end());
  Subgroup h;
  h.elements = {0};
  for (ElementId x : elements) {
    if (h.contains(x)) continue;
    h.generators.push_back(x);
    h.elements = *closure(g, h.generators, std::numeric_limits<std::size_t>::max());
  }
  if (h.elements != elements) {
    throw Error(ErrorKind::ClosureExceedsCap, "element set is not closed under composition");
  }
  return h;
}

std::uint64_t class_mask(const PermGroup& g, const Subgroup& h) {
  std::uint64_t mask = 0;
  for (ElementId x : h.elements) mask |= std::uint64_t{1} << g.class_of(x);
  return mask;
}

}  // namespace

bool Subgroup::contains(ElementId x) const {
  return std::binary_search(elements.begin(), elements.end(), x);
}

PermGroup PermGroup::from_generators(std::vector<Permutation> generators, std::size_t cap) {
  if (cap == 0) throw Error(ErrorKind::ClosureExceedsCap, "cap must be at least 1");
  PermGroup g;
  g.degree_ = generators.empty() ? 0 : generators.front().degree();
  for (const auto& p : generators) {
    if (p.degree() != g.degree_) {
      throw Error(ErrorKind::MalformedPermutation, "generators act on different point counts");
    }
  }
  g.generators_ = std::move(generators);
  g.elements_.push_back(Permutation::identity(g.degree_));
  g.index_.emplace(g.elements_.front(), 0);
  for (std::size_t i = 0; i < g.elements_.size(); ++i) {
    for (const auto& s : g.generators_) {
      Permutation y = g.elements_[i] * s;
      if (g.index_.contains(y)) continue;
      if (g.elements_.size() >= cap) {
        throw Error(ErrorKind::ClosureExceedsCap,
                    "group order exceeds the cap of " + std::to_string(cap));
      }
      g.index_.emplace(y, static_cast<ElementId>(g.elements_.size()));
      g.elements_.push_back(std::move(y));
    }
  }
  for (const auto& s : g.generators_) g.generator_ids_.push_back(g.index_.at(s));

  const std::size_t n = g.elements_.size();
  g.inverses_.resize(n);
  for (std::size_t i = 0; i < n; ++i) g.inverses_[i] = g.index_.at(g.elements_[i].inverse());
  if (n <= kCayleyTableLimit) {
    g.table_.resize(n * n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        g.table_[a * n + b] = g.index_.at(g.elements_[a] * g.elements_[b]);
      }
    }
  }
  for (const auto& p : g.elements_) g.exponent_ = std::lcm(g.exponent_, p.order());
  g.build_classes();
  return g;
}

std::optional<ElementId> PermGroup::find(const Permutation& p) const {
  auto it = index_.find(p.widened(degree_));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

ElementId PermGroup::multiply(ElementId a, ElementId b) const {
  if (!table_.empty()) return table_[static_cast<std::size_t>(a) * elements_.size() + b];
  return index_.at(elements_[a] * elements_[b]);
}

ElementId PermGroup::conjugate(ElementId b, ElementId a) const {
  return multiply(multiply(inverses_[a], b), a);
}

ElementId PermGroup::commutator(ElementId a, ElementId b) const {
  return multiply(multiply(inverses_[a], inverses_[b]), multiply(a, b));
}

void PermGroup::build_classes() {
  const std::size_t n = elements_.size();
  constexpr auto kUnset = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> raw(n, kUnset);
  std::vector<std::vector<ElementId>> orbits;
  for (ElementId x = 0; x < n; ++x) {
    if (raw[x] != kUnset) continue;
    std::vector<ElementId> orbit{x};
    raw[x] = orbits.size();
    for (std::size_t i = 0; i < orbit.size(); ++i) {
      for (ElementId s : generator_ids_) {
        ElementId y = conjugate(orbit[i], s);
        if (raw[y] == kUnset) {
          raw[y] = orbits.size();
          orbit.push_back(y);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    orbits.push_back(std::move(orbit));
  }
  std::sort(orbits.begin(), orbits.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.front() < b.front();
  });
  class_of_.assign(n, 0);
  classes_.clear();
  for (std::size_t c = 0; c < orbits.size(); ++c) {
    ConjugacyClass cls;
    cls.representative = elements_[orbits[c].front()];
    cls.size = orbits[c].size();
    for (ElementId x : orbits[c]) class_of_[x] = c;
    cls.members = std::move(orbits[c]);
    classes_.push_back(std::move(cls));
  }
}

bool PermGroup::is_abelian() const {
  for (std::size_t i = 0; i < generator_ids_.size(); ++i) {
    for (std::size_t j = i + 1; j < generator_ids_.size(); ++j) {
      ElementId a = generator_ids_[i];
      ElementId b = generator_ids_[j];
      if (multiply(a, b) != multiply(b, a)) return false;
    }
  }
  return true;
}

std::vector<std::uint64_t> PermGroup::order_primes() const { return prime_divisors(order()); }

std::vector<ConjugacyClass> conjugacy_classes(const PermGroup& g) { return g.conjugacy_classes(); }

Subgroup whole_group(const PermGroup& g) {
  Subgroup h;
  h.elements.resize(g.order());
  std::iota(h.elements.begin(), h.elements.end(), ElementId{0});
  h.generators = dedup_generators(g, g.generator_ids());
  h.is_normal = true;
  return h;
}

Subgroup trivial_subgroup(const PermGroup& /*g*/) {
  Subgroup h;
  h.elements = {0};
  h.is_normal = true;
  return h;
}

std::optional<Subgroup> try_generate(const PermGroup& g, std::span<const ElementId> gens,
                                     std::size_t limit) {
  auto ids = dedup_generators(g, gens);
  auto elems = closure(g, ids, limit);
  if (!elems) return std::nullopt;
  Subgroup h;
  h.elements = std::move(*elems);
  h.generators = std::move(ids);
  return h;
}

Subgroup generate(const PermGroup& g, std::span<const ElementId> gens) {
  auto h = try_generate(g, gens, std::numeric_limits<std::size_t>::max());
  h->is_normal = is_normal_subgroup(g, *h);
  return *h;
}

Subgroup normal_closure(const PermGroup& g, std::span<const ElementId> seeds,
                        std::span<const ElementId> conjugators) {
  Subgroup h = trivial_subgroup(g);
  h.is_normal = false;
  std::vector<char> member(g.order(), 0);
  member[0] = 1;
  std::deque<ElementId> work(seeds.begin(), seeds.end());
  while (!work.empty()) {
    ElementId x = work.front();
    work.pop_front();
    if (member[x]) continue;
    h.generators.push_back(x);
    h.elements = *closure(g, h.generators, std::numeric_limits<std::size_t>::max());
    for (ElementId y : h.elements) member[y] = 1;
    for (ElementId c : conjugators) work.push_back(g.conjugate(x, c));
  }
  return h;
}

bool is_normal_subgroup(const PermGroup& g, const Subgroup& h) {
  for (ElementId x : h.generators) {
    for (ElementId s : g.generator_ids()) {
      if (!h.contains(g.conjugate(x, s))) return false;
    }
  }
  return true;
}

bool is_abelian(const PermGroup& g, const Subgroup& h) {
  for (std::size_t i = 0; i < h.generators.size(); ++i) {
    for (std::size_t j = i + 1; j < h.generators.size(); ++j) {
      ElementId a = h.generators[i];
      ElementId b = h.generators[j];
      if (g.multiply(a, b) != g.multiply(b, a)) return false;
    }
  }
  return true;
}

Subgroup commutator_subgroup(const PermGroup& g, const Subgroup& h, const Subgroup& k,
                             const Subgroup& within) {
  std::vector<ElementId> seeds;
  for (ElementId a : h.generators) {
    for (ElementId b : k.generators) seeds.push_back(g.commutator(a, b));
  }
  Subgroup c = normal_closure(g, seeds, within.generators);
  c.is_normal = is_normal_subgroup(g, c);
  return c;
}

std::vector<Subgroup> derived_series(const PermGroup& g) {
  std::vector<Subgroup> series{whole_group(g)};
  while (true) {
    const Subgroup& cur = series.back();
    Subgroup next = commutator_subgroup(g, cur, cur, cur);
    if (next.order() == cur.order()) break;
    series.push_back(std::move(next));
  }
  return series;
}

bool is_solvable(const PermGroup& g) { return derived_series(g).back().order() == 1; }

std::vector<Subgroup> lower_central_series(const PermGroup& g, const Subgroup& h) {
  std::vector<Subgroup> series{h};
  while (series.back().order() > 1) {
    Subgroup next = commutator_subgroup(g, series.back(), h, h);
    if (next.order() == series.back().order()) break;
    series.push_back(std::move(next));
  }
  return series;
}

bool is_nilpotent(const PermGroup& g, const Subgroup& h) {
  return lower_central_series(g, h).back().order() == 1;
}

Subgroup center(const PermGroup& g) {
  std::vector<ElementId> elems;
  for (ElementId x = 0; x < g.order(); ++x) {
    bool central = true;
    for (ElementId s : g.generator_ids()) {
      if (g.multiply(x, s) != g.multiply(s, x)) {
        central = false;
        break;
      }
    }
    if (central) elems.push_back(x);
  }
  Subgroup z = subgroup_from_elements(g, std::move(elems));
  z.is_normal = true;
  return z;
}

std::vector<Subgroup> normal_subgroups(const PermGroup& g, std::size_t class_cap) {
  const auto& classes = g.conjugacy_classes();
  if (classes.size() > std::min<std::size_t>(class_cap, 64)) {
    throw Error(ErrorKind::TooManyClasses,
                std::to_string(classes.size()) + " conjugacy classes exceed the cap of " +
                    std::to_string(std::min<std::size_t>(class_cap, 64)));
  }
  // Each normal subgroup is a union of classes, hence the join of the normal
  // closures of the classes it contains. Close the single-class closures
  // under joins; a join depends only on the union of the class masks.
  std::map<std::uint64_t, Subgroup> by_mask;
  std::vector<std::uint64_t> order;
  auto record = [&](Subgroup h) {
    std::uint64_t m = class_mask(g, h);
    if (by_mask.contains(m)) return;
    h.is_normal = true;
    by_mask.emplace(m, std::move(h));
    order.push_back(m);
  };
  record(trivial_subgroup(g));
  for (std::size_t c = 1; c < classes.size(); ++c) {
    ElementId rep = classes[c].members.front();
    record(normal_closure(g, std::span<const ElementId>(&rep, 1), g.generator_ids()));
  }
  std::map<std::uint64_t, std::uint64_t> join_of_union;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      std::uint64_t u = order[i] | order[j];
      if (by_mask.contains(u) || join_of_union.contains(u)) continue;
      std::vector<ElementId> gens = by_mask.at(order[i]).generators;
      const auto& more = by_mask.at(order[j]).generators;
      gens.insert(gens.end(), more.begin(), more.end());
      auto joined = try_generate(g, gens, std::numeric_limits<std::size_t>::max());
      std::uint64_t m = class_mask(g, *joined);
      join_of_union.emplace(u, m);
      record(std::move(*joined));
    }
  }
  std::vector<Subgroup> out;
  out.reserve(by_mask.size());
  for (auto& [m, h] : by_mask) out.push_back(std::move(h));
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.elements < b.elements;
  });
  return out;
}

Subgroup fitting_subgroup(const PermGroup& g, std::size_t class_cap) {
  Subgroup best = trivial_subgroup(g);
  for (auto& n : normal_subgroups(g, class_cap)) {
    if (n.order() > best.order() && is_nilpotent(g, n)) best = n;
  }
  return best;
}

Subgroup sylow_subgroup(const PermGroup& g, std::uint64_t p) {
  if (p < 2 || g.order() % p != 0) {
    throw Error(ErrorKind::PrimeDoesNotDivideOrder,
                std::to_string(p) + " does not divide the group order " + std::to_string(g.order()));
  }
  std::size_t target = 1;
  for (std::size_t m = g.order(); m % p == 0; m /= p) target *= p;

  std::vector<ElementId> p_elements;
  for (ElementId x = 1; x < g.order(); ++x) {
    std::uint64_t q = 0;
    if (is_prime_power(g.element_order(x), &q) && q == p) p_elements.push_back(x);
  }
  // A p-subgroup that is not Sylow is properly contained in a larger
  // p-subgroup of its normalizer, so greedy extension always reaches a
  // Sylow subgroup.
  Subgroup h = trivial_subgroup(g);
  while (h.order() < target) {
    bool grown = false;
    for (ElementId x : p_elements) {
      if (h.contains(x)) continue;
      std::vector<ElementId> gens = h.generators;
      gens.push_back(x);
      auto k = try_generate(g, gens, target);
      std::uint64_t q = 0;
      if (k && is_prime_power(k->order(), &q) && q == p) {
        h = std::move(*k);
        grown = true;
        break;
      }
    }
    if (!grown) break;
  }
  h.is_normal = is_normal_subgroup(g, h);
  return h;
}

std::optional<Subgroup> normal_p_complement(const PermGroup& g, std::uint64_t p,
                                            std::size_t class_cap) {
  std::size_t target = g.order();
  while (p >= 2 && target % p == 0) target /= p;
  for (auto& n : normal_subgroups(g, class_cap)) {
    if (n.order() == target) return n;
  }
  return std::nullopt;
}

PermGroup quotient_group(const PermGroup& g, const Subgroup& n) {
  if (!is_normal_subgroup(g, n)) throw Error(ErrorKind::NotNormal, "quotient by a non-normal subgroup");
  if (n.order() == 1) return g;
  constexpr auto kUnset = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> coset_of(g.order(), kUnset);
  std::vector<ElementId> reps;
  for (ElementId x = 0; x < g.order(); ++x) {
    if (coset_of[x] != kUnset) continue;
    for (ElementId y : n.elements) coset_of[g.multiply(y, x)] = static_cast<std::uint32_t>(reps.size());
    reps.push_back(x);
  }
  const std::size_t index = reps.size();
  std::vector<Permutation> gens;
  for (ElementId s : g.generator_ids()) {
    std::vector<Point> images(std::max<std::size_t>(index, 1));
    for (std::size_t c = 0; c < index; ++c) images[c] = coset_of[g.multiply(reps[c], s)];
    gens.emplace_back(std::move(images));
  }
  return PermGroup::from_generators(std::move(gens), std::max<std::size_t>(index, 1));
}

PermGroup subgroup_as_group(const PermGroup& g, const Subgroup& h) {
  std::vector<Permutation> gens;
  for (ElementId x : h.generators) gens.push_back(g.element(x));
  if (gens.empty()) gens.push_back(Permutation::identity(g.degree()));
  return PermGroup::from_generators(std::move(gens), h.order());
}

std::optional<FrobeniusStructure> frobenius_structure(const PermGroup& g, std::size_t class_cap) {
  const std::size_t order = g.order();
  for (const auto& f : normal_subgroups(g, class_cap)) {
    if (f.order() == 1 || f.order() == order) continue;
    const std::size_t k = order / f.order();
    if (std::gcd(f.order(), k) != 1) continue;

    // Every element outside the kernel must centralize no nontrivial
    // kernel element.
    bool fixed_point_free = true;
    for (ElementId x = 0; x < order && fixed_point_free; ++x) {
      if (f.contains(x)) continue;
      for (ElementId y : f.elements) {
        if (y != 0 && g.multiply(x, y) == g.multiply(y, x)) {
          fixed_point_free = false;
          break;
        }
      }
    }
    if (!fixed_point_free) continue;

    // Any subgroup of order dividing k lies in some complement, so greedy
    // extension by elements of order dividing k reaches a full complement.
    Subgroup h = trivial_subgroup(g);
    for (ElementId x = 1; x < order && h.order() < k; ++x) {
      if (f.contains(x) || h.contains(x) || k % g.element_order(x) != 0) continue;
      std::vector<ElementId> gens = h.generators;
      gens.push_back(x);
      auto cand = try_generate(g, gens, k);
      if (cand && k % cand->order() == 0) h = std::move(*cand);
    }
    if (h.order() != k) continue;

    bool disjoint_conjugates = true;
    for (ElementId x = 0; x < order && disjoint_conjugates; ++x) {
      if (h.contains(x)) continue;
      for (ElementId y : h.elements) {
        if (y != 0 && h.contains(g.conjugate(y, x))) {
          disjoint_conjugates = false;
          break;
        }
      }
    }
    if (!disjoint_conjugates) continue;

    h.is_normal = is_normal_subgroup(g, h);
    FrobeniusStructure out{f, h, false, 0};
    std::uint64_t p = 0;
    if (is_abelian(g, f) && is_prime_power(f.order(), &p)) {
      bool exponent_p = true;
      for (ElementId y : f.elements) {
        if (y != 0 && g.element_order(y) != p) exponent_p = false;
      }
      if (exponent_p) {
        out.kernel_elementary_abelian = true;
        out.kernel_prime = p;
      }
    }
    return out;
  }
  return std::nullopt;
}

PermGroup direct_product(const PermGroup& a, const PermGroup& b, std::size_t cap) {
  const std::size_t da = a.degree();
  const std::size_t n = da + b.degree();
  std::vector<Permutation> gens;
  for (const auto& s : a.generators()) gens.push_back(s.widened(n));
  for (const auto& s : b.generators()) {
    std::vector<Point> images(n);
    std::iota(images.begin(), images.end(), Point{0});
    for (std::size_t i = 0; i < b.degree(); ++i) images[da + i] = static_cast<Point>(da + s[i]);
    gens.emplace_back(std::move(images));
  }
  if (gens.empty()) gens.push_back(Permutation::identity(n));
  return PermGroup::from_generators(std::move(gens), cap);
}

}  // namespace chargraph
