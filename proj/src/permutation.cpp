#include "chargraph/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include <nlohmann/json.hpp>

#include "chargraph/errors.hpp"

namespace chargraph {

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<char> hit(images_.size(), 0);
  for (Point x : images_) {
    if (x >= images_.size() || hit[x]) {
      throw Error(ErrorKind::MalformedPermutation, "image array is not a bijection");
    }
    hit[x] = 1;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

Permutation Permutation::from_cycles(std::size_t degree,
                                     const std::vector<std::vector<Point>>& cycles) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  std::vector<char> moved(degree, 0);
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      Point from = cycle[i];
      Point to = cycle[(i + 1) % cycle.size()];
      if (from >= degree || to >= degree || moved[from]) {
        throw Error(ErrorKind::MalformedPermutation, "cycles overlap or leave the point range");
      }
      moved[from] = 1;
      images[from] = to;
    }
  }
  return Permutation(std::move(images));
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<Point> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = static_cast<Point>(i);
  Permutation p;
  p.images_ = std::move(inv);
  return p;
}

std::uint64_t Permutation::order() const {
  std::vector<char> seen(images_.size(), 0);
  std::uint64_t result = 1;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    std::uint64_t len = 0;
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = 1;
      ++len;
    }
    result = std::lcm(result, len);
  }
  return result;
}

Permutation Permutation::widened(std::size_t degree) const {
  if (degree <= images_.size()) return *this;
  Permutation p = *this;
  for (std::size_t i = images_.size(); i < degree; ++i) p.images_.push_back(static_cast<Point>(i));
  return p;
}

std::string Permutation::to_cycle_string() const {
  std::string out;
  std::vector<char> seen(images_.size(), 0);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    out += '(';
    bool first = true;
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = 1;
      if (!first) out += ' ';
      out += std::to_string(j + 1);
      first = false;
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  std::size_t n = std::max(a.degree(), b.degree());
  Permutation lhs = a.widened(n);
  Permutation rhs = b.widened(n);
  std::vector<Point> images(n);
  for (std::size_t i = 0; i < n; ++i) images[i] = rhs.images_[lhs.images_[i]];
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  std::uint64_t h = 1469598103934665603ULL;
  for (Point x : p.images()) {
    h ^= x;
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

namespace {

std::vector<Permutation> widen_all(std::vector<std::vector<std::vector<Point>>> cycle_lists,
                                   std::size_t degree) {
  std::vector<Permutation> out;
  out.reserve(cycle_lists.size());
  for (const auto& cycles : cycle_lists) out.push_back(Permutation::from_cycles(degree, cycles));
  return out;
}

}  // namespace

std::vector<Permutation> parse_generators(std::string_view text) {
  std::vector<std::vector<std::vector<Point>>> gens;
  std::vector<std::vector<Point>> current;
  bool have_current = false;
  std::size_t degree = 0;
  std::size_t i = 0;
  auto fail = [&](const std::string& why) {
    throw Error(ErrorKind::ParseError, "generator list at offset " + std::to_string(i) + ": " + why);
  };
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (c == ',') {
      if (!have_current) fail("empty generator");
      gens.push_back(std::move(current));
      current.clear();
      have_current = false;
      ++i;
    } else if (c == '(') {
      ++i;
      std::vector<Point> cycle;
      while (true) {
        while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ',')) ++i;
        if (i >= text.size()) fail("unterminated cycle");
        if (text[i] == ')') {
          ++i;
          break;
        }
        if (!std::isdigit(static_cast<unsigned char>(text[i]))) fail("expected a point number");
        std::uint64_t v = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
          v = v * 10 + static_cast<std::uint64_t>(text[i] - '0');
          if (v > 1'000'000) fail("point number too large");
          ++i;
        }
        if (v == 0) fail("points are 1-based");
        cycle.push_back(static_cast<Point>(v - 1));
        degree = std::max<std::size_t>(degree, v);
      }
      current.push_back(std::move(cycle));
      have_current = true;
    } else {
      fail(std::string("unexpected character '") + c + "'");
    }
  }
  if (have_current) {
    gens.push_back(std::move(current));
  } else if (!gens.empty()) {
    fail("trailing comma");
  }
  return widen_all(std::move(gens), degree);
}

std::vector<Permutation> parse_generators_json(std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
  if (!doc.is_object() || !doc.contains("generators")) {
    throw Error(ErrorKind::ParseError, "group JSON needs a \"generators\" array");
  }
  std::size_t degree = doc.value("degree", std::size_t{0});
  std::vector<std::vector<std::vector<Point>>> gens;
  try {
    for (const auto& gen : doc.at("generators")) {
      std::vector<std::vector<Point>> cycles;
      for (const auto& cycle : gen) {
        std::vector<Point> pts;
        for (const auto& v : cycle) {
          auto x = v.get<std::int64_t>();
          if (x < 1) throw Error(ErrorKind::ParseError, "points are 1-based");
          pts.push_back(static_cast<Point>(x - 1));
          degree = std::max<std::size_t>(degree, static_cast<std::size_t>(x));
        }
        cycles.push_back(std::move(pts));
      }
      gens.push_back(std::move(cycles));
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
  return widen_all(std::move(gens), degree);
}

}  // namespace chargraph
