#pragma once

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <numeric>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include <nlohmann/json.hpp>

#include "errors.hpp"
#include "root_system.hpp"
#include "signed_permutation.hpp"

namespace weylres {

enum class GroupKind { Plain, EvenSign, FullSign, Extended };

inline std::string kind_name(GroupKind k) {
  switch (k) {
    case GroupKind::Plain: return "plain";
    case GroupKind::EvenSign: return "even-sign";
    case GroupKind::FullSign: return "full-sign";
    case GroupKind::Extended: return "extended";
  }
  return "?";
}

inline constexpr int kDefaultEnumerationCap = 7;

// WEYL_RESTRICT_MAX_RANK overrides the enumeration cap.
inline int enumeration_cap() {
  if (const char* env = std::getenv("WEYL_RESTRICT_MAX_RANK")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0 && v <= SignedPermutation::kMaxSize)
      return static_cast<int>(v);
  }
  return kDefaultEnumerationCap;
}

struct GroupTable {
  RootType type = RootType::A;
  int rank = 0;
  int dim = 0;  // number of coordinates acted on
  GroupKind kind = GroupKind::Plain;
  std::vector<SignedPermutation> elements;    // sorted, unique
  std::vector<SignedPermutation> generators;  // empty for derived tables

  std::size_t order() const { return elements.size(); }
  bool contains(const SignedPermutation& w) const {
    return std::binary_search(elements.begin(), elements.end(), w);
  }
};

inline std::vector<SignedPermutation> closure(const std::vector<SignedPermutation>& generators,
                                              int dim) {
  std::unordered_set<SignedPermutation, SignedPermutationHash> seen;
  std::deque<SignedPermutation> queue;
  auto id = SignedPermutation::identity(dim);
  seen.insert(id);
  queue.push_back(id);
  while (!queue.empty()) {
    SignedPermutation w = queue.front();
    queue.pop_front();
    for (const auto& g : generators) {
      SignedPermutation x = g * w;
      if (seen.insert(x).second) queue.push_back(x);
    }
  }
  std::vector<SignedPermutation> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

inline GroupKind classify(const std::vector<SignedPermutation>& elements) {
  bool plain = true, even = true;
  for (const auto& w : elements) {
    if (!w.all_positive()) plain = false;
    if (w.negative_count() % 2) even = false;
  }
  if (plain) return GroupKind::Plain;
  return even ? GroupKind::EvenSign : GroupKind::FullSign;
}

// Simple reflections, plus the diagram involution sigma_k for type D when
// extended. sigma_k swaps alpha_1 = f_1 + f_2 and alpha_2 = f_2 - f_1 and is
// realized by flipping the sign of coordinate 1.
inline std::vector<SignedPermutation> weyl_generators(const RootSystem& rs, bool extended) {
  std::vector<SignedPermutation> gens;
  for (const auto& a : rs.simple_roots) {
    auto s = reflection_as_signed_permutation(a);
    if (!s) throw std::logic_error("simple reflection is not a signed permutation");
    gens.push_back(*s);
  }
  if (extended && rs.type == RootType::D)
    gens.push_back(SignedPermutation::sign_change(rs.ambient_dim, {0}));
  return gens;
}

inline GroupTable generate_group(const RootSystem& rs, bool extended, int cap) {
  if (rs.rank > cap)
    throw PreconditionError("rank " + std::to_string(rs.rank) + " above the enumeration cap " +
                            std::to_string(cap));
  GroupTable g;
  g.type = rs.type;
  g.rank = rs.rank;
  g.dim = rs.ambient_dim;
  g.generators = weyl_generators(rs, extended);
  g.elements = closure(g.generators, g.dim);
  switch (rs.type) {
    case RootType::A: g.kind = GroupKind::Plain; break;
    case RootType::B:
    case RootType::C: g.kind = GroupKind::FullSign; break;
    case RootType::D: g.kind = extended ? GroupKind::Extended : GroupKind::EvenSign; break;
  }
  return g;
}

inline GroupTable generate_weyl(const RootSystem& rs, int cap = enumeration_cap()) {
  return generate_group(rs, false, cap);
}

// W~: W adjoined with sigma_k for type D, W itself otherwise.
inline GroupTable generate_extended(const RootSystem& rs, int cap = enumeration_cap()) {
  return generate_group(rs, true, cap);
}

// All signed permutations of dim coordinates.
inline GroupTable hyperoctahedral(int dim, int cap = enumeration_cap()) {
  GroupTable g = generate_weyl(build_root_system(RootType::B, dim), cap);
  return g;
}

// A subspace that signed permutations may preserve: either the vectors
// supported on the first `block` coordinates (optionally trace zero), or the
// diagonal {(x, x)} in Q^half + Q^half.
class EmbeddedSubspace {
 public:
  static EmbeddedSubspace coordinate_block(int ambient, int block, bool trace_zero) {
    require(block >= 1 && block <= ambient, "subspace block out of range");
    EmbeddedSubspace s;
    s.diagonal_ = false;
    s.ambient_ = ambient;
    s.block_ = block;
    s.trace_zero_ = trace_zero;
    if (trace_zero) {
      for (int i = 0; i + 1 < block; ++i) {
        std::vector<long> v(ambient, 0);
        v[i + 1] = 1;
        v[i] = -1;
        s.basis_.push_back(v);
      }
    } else {
      for (int i = 0; i < block; ++i) {
        std::vector<long> v(ambient, 0);
        v[i] = 1;
        s.basis_.push_back(v);
      }
    }
    return s;
  }

  static EmbeddedSubspace diagonal(int half) {
    EmbeddedSubspace s;
    s.diagonal_ = true;
    s.ambient_ = 2 * half;
    s.block_ = half;
    for (int i = 0; i < half; ++i) {
      std::vector<long> v(2 * half, 0);
      v[i] = 1;
      v[half + i] = 1;
      s.basis_.push_back(v);
    }
    return s;
  }

  int ambient() const { return ambient_; }
  // Number of coordinates of the restricted action.
  int restricted_dim() const { return block_; }
  bool is_diagonal() const { return diagonal_; }
  const std::vector<std::vector<long>>& basis() const { return basis_; }

  bool contains(const std::vector<long>& v) const {
    if (static_cast<int>(v.size()) != ambient_) return false;
    if (diagonal_) {
      for (int i = 0; i < block_; ++i)
        if (v[i] != v[block_ + i]) return false;
      return true;
    }
    for (int i = block_; i < ambient_; ++i)
      if (v[i] != 0) return false;
    if (trace_zero_) return std::accumulate(v.begin(), v.end(), 0L) == 0;
    return true;
  }

  // w(V) = V, tested on the image of each basis vector.
  bool preserved_by(const SignedPermutation& w) const {
    for (const auto& b : basis_)
      if (!contains(w.apply(b))) return false;
    return true;
  }

  // The action induced on V, in coordinates 1..block for a coordinate block
  // and in diagonal coordinates x -> (x, x) for the diagonal.
  std::optional<SignedPermutation> induced(const SignedPermutation& w) const {
    if (!preserved_by(w)) return std::nullopt;
    if (!diagonal_) return w.truncated(block_);
    std::vector<int> perm(block_), signs(block_);
    for (int i = 0; i < block_; ++i) {
      std::vector<long> img = w.apply(basis_[i]);
      int target = -1;
      for (int j = 0; j < block_; ++j)
        if (img[j] != 0) target = j;
      if (target < 0) return std::nullopt;
      perm[i] = target;
      signs[i] = img[target] > 0 ? 1 : -1;
    }
    return SignedPermutation::from(std::span<const int>(perm), std::span<const int>(signs));
  }

 private:
  bool diagonal_ = false;
  int ambient_ = 0;
  int block_ = 0;
  bool trace_zero_ = false;
  std::vector<std::vector<long>> basis_;
};

// The rank-n Cartan subspace inside the rank-k one for the given type.
inline EmbeddedSubspace embedded_cartan(RootType type, int ambient, int n) {
  require(n >= 1, "embedded rank must be positive");
  if (type == RootType::A) {
    require(n + 1 <= ambient, "embedded rank exceeds the ambient rank");
    return EmbeddedSubspace::coordinate_block(ambient, n + 1, true);
  }
  require(n <= ambient, "embedded rank exceeds the ambient rank");
  return EmbeddedSubspace::coordinate_block(ambient, n, false);
}

inline GroupTable stabilizer(const GroupTable& g, const EmbeddedSubspace& v) {
  require(g.dim == v.ambient(), "subspace and group act on different spaces");
  GroupTable out;
  out.type = g.type;
  out.rank = g.rank;
  out.dim = g.dim;
  out.kind = g.kind;
  for (const auto& w : g.elements)
    if (v.preserved_by(w)) out.elements.push_back(w);
  return out;
}

inline GroupTable stabilizer(const GroupTable& g, int n) {
  require(n >= 1 && n <= g.rank, "stabilizer rank out of range");
  return stabilizer(g, embedded_cartan(g.type, g.dim, n));
}

inline SignedPermutation restrict_element(const SignedPermutation& w, RootType type, int n) {
  auto v = embedded_cartan(type, w.size(), n);
  auto r = v.induced(w);
  if (!r) throw PreconditionError("element does not preserve the embedded subspace");
  return *r;
}

struct RestrictedImage {
  GroupTable image;
  std::size_t stabilizer_order = 0;
  std::size_t kernel_order = 0;
};

inline RestrictedImage restricted_image(const GroupTable& g, const EmbeddedSubspace& v,
                                        RootType image_type, int image_rank) {
  GroupTable stab = stabilizer(g, v);
  RestrictedImage out;
  out.stabilizer_order = stab.order();
  out.image.type = image_type;
  out.image.rank = image_rank;
  out.image.dim = v.restricted_dim();
  for (const auto& w : stab.elements) out.image.elements.push_back(*v.induced(w));
  std::sort(out.image.elements.begin(), out.image.elements.end());
  out.image.elements.erase(std::unique(out.image.elements.begin(), out.image.elements.end()),
                           out.image.elements.end());
  out.image.kind = classify(out.image.elements);
  out.kernel_order = out.stabilizer_order / out.image.order();
  return out;
}

inline RestrictedImage restricted_image(const GroupTable& g, int n) {
  require(n >= 1 && n <= g.rank, "restriction rank out of range");
  return restricted_image(g, embedded_cartan(g.type, g.dim, n), g.type, n);
}

enum class GroupRelation { Equal, ProperSubgroup, ProperSupergroup, Incomparable };

inline std::string relation_name(GroupRelation r) {
  switch (r) {
    case GroupRelation::Equal: return "equal";
    case GroupRelation::ProperSubgroup: return "proper-subgroup";
    case GroupRelation::ProperSupergroup: return "proper-supergroup";
    case GroupRelation::Incomparable: return "incomparable";
  }
  return "?";
}

inline GroupRelation compare_groups(const GroupTable& a, const GroupTable& b) {
  require(a.dim == b.dim, "comparing groups acting on different dimensions");
  bool a_in_b = std::includes(b.elements.begin(), b.elements.end(), a.elements.begin(),
                              a.elements.end());
  bool b_in_a = std::includes(a.elements.begin(), a.elements.end(), b.elements.begin(),
                              b.elements.end());
  if (a_in_b && b_in_a) return GroupRelation::Equal;
  if (a_in_b) return GroupRelation::ProperSubgroup;
  if (b_in_a) return GroupRelation::ProperSupergroup;
  return GroupRelation::Incomparable;
}

// Every pair (a, b) acting block-diagonally on Q^dim + Q^dim.
inline GroupTable product_group(const GroupTable& a, const GroupTable& b) {
  GroupTable g;
  g.type = a.type;
  g.rank = a.rank + b.rank;
  g.dim = a.dim + b.dim;
  g.kind = a.kind;
  g.elements.reserve(a.order() * b.order());
  for (const auto& x : a.elements)
    for (const auto& y : b.elements) g.elements.push_back(SignedPermutation::direct_sum(x, y));
  std::sort(g.elements.begin(), g.elements.end());
  for (const auto& x : a.generators)
    g.generators.push_back(SignedPermutation::direct_sum(x, SignedPermutation::identity(b.dim)));
  for (const auto& y : b.generators)
    g.generators.push_back(SignedPermutation::direct_sum(SignedPermutation::identity(a.dim), y));
  return g;
}

// True when the group equals the closure of the reflections it contains.
inline bool generated_by_reflections(const GroupTable& g) {
  std::vector<SignedPermutation> refl;
  for (const auto& w : g.elements)
    if (w.is_reflection()) refl.push_back(w);
  return closure(refl, g.dim) == g.elements;
}

inline bool is_closed(const GroupTable& g) {
  for (const auto& a : g.elements) {
    if (!g.contains(a.inverse())) return false;
    for (const auto& b : g.elements)
      if (!g.contains(a * b)) return false;
  }
  return true;
}

inline nlohmann::json to_json(const GroupTable& g, bool with_elements = true) {
  nlohmann::json j{{"type", type_name(g.type)},
                   {"rank", g.rank},
                   {"dim", g.dim},
                   {"kind", kind_name(g.kind)},
                   {"order", g.order()}};
  if (with_elements) {
    nlohmann::json els = nlohmann::json::array();
    for (const auto& w : g.elements) els.push_back(to_json(w));
    j["elements"] = els;
  }
  return j;
}

}  // namespace weylres
