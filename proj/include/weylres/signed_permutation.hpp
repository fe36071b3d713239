#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "errors.hpp"
#include "rational.hpp"

namespace weylres {

// x -> y with y_{perm(i)} = sign_i * x_i. Stored inline so that group tables
// of a few hundred thousand elements stay compact and trivially comparable.
class SignedPermutation {
 public:
  static constexpr int kMaxSize = 16;

  SignedPermutation() = default;

  static SignedPermutation identity(int size) {
    require(size >= 0 && size <= kMaxSize, "signed permutation size out of range");
    SignedPermutation w;
    w.size_ = static_cast<std::uint8_t>(size);
    for (int i = 0; i < size; ++i) w.perm_[i] = static_cast<std::int8_t>(i);
    return w;
  }

  // perm is 0-based; signs are +1/-1.
  static SignedPermutation from(std::span<const int> perm, std::span<const int> signs) {
    require(perm.size() == signs.size(), "perm and signs differ in length");
    SignedPermutation w = identity(static_cast<int>(perm.size()));
    std::array<bool, kMaxSize> seen{};
    for (std::size_t i = 0; i < perm.size(); ++i) {
      require(perm[i] >= 0 && perm[i] < w.size() && !seen[perm[i]], "perm is not a bijection");
      require(signs[i] == 1 || signs[i] == -1, "signs must be +1 or -1");
      seen[perm[i]] = true;
      w.perm_[i] = static_cast<std::int8_t>(perm[i]);
      if (signs[i] < 0) w.neg_ |= static_cast<std::uint16_t>(1u << i);
    }
    return w;
  }

  static SignedPermutation from(std::initializer_list<int> perm, std::initializer_list<int> signs) {
    std::vector<int> p(perm), s(signs);
    return from(std::span<const int>(p), std::span<const int>(s));
  }

  // Flip the signs of the given 0-based coordinates.
  static SignedPermutation sign_change(int size, std::initializer_list<int> coords) {
    SignedPermutation w = identity(size);
    for (int c : coords) w.neg_ ^= static_cast<std::uint16_t>(1u << c);
    return w;
  }

  static SignedPermutation transposition(int size, int a, int b) {
    SignedPermutation w = identity(size);
    std::swap(w.perm_[a], w.perm_[b]);
    return w;
  }

  int size() const { return size_; }
  int image(int i) const { return perm_[i]; }
  int sign(int i) const { return (neg_ >> i) & 1u ? -1 : 1; }
  int negative_count() const { return __builtin_popcount(neg_); }
  bool all_positive() const { return neg_ == 0; }
  bool is_identity() const { return *this == identity(size_); }

  // (this * other)(x) = this(other(x))
  SignedPermutation operator*(const SignedPermutation& other) const {
    require(size_ == other.size_, "composing signed permutations of different size");
    SignedPermutation w;
    w.size_ = size_;
    for (int i = 0; i < size_; ++i) {
      int mid = other.perm_[i];
      w.perm_[i] = perm_[mid];
      if ((other.sign(i) * sign(mid)) < 0) w.neg_ |= static_cast<std::uint16_t>(1u << i);
    }
    return w;
  }

  SignedPermutation inverse() const {
    SignedPermutation w;
    w.size_ = size_;
    for (int i = 0; i < size_; ++i) {
      w.perm_[perm_[i]] = static_cast<std::int8_t>(i);
      if (sign(i) < 0) w.neg_ |= static_cast<std::uint16_t>(1u << perm_[i]);
    }
    return w;
  }

  template <class T>
  std::vector<T> apply(std::span<const T> x) const {
    require(static_cast<int>(x.size()) == size_, "vector size does not match signed permutation");
    std::vector<T> y(size_);
    for (int i = 0; i < size_; ++i) y[perm_[i]] = sign(i) < 0 ? T(-x[i]) : T(x[i]);
    return y;
  }

  template <class T>
  std::vector<T> apply(const std::vector<T>& x) const {
    return apply(std::span<const T>(x));
  }

  // Restriction to the first m coordinates; nullopt unless the permutation
  // maps {0..m-1} onto itself.
  std::optional<SignedPermutation> truncated(int m) const {
    SignedPermutation w = identity(m);
    for (int i = 0; i < m; ++i) {
      if (perm_[i] >= m) return std::nullopt;
      w.perm_[i] = perm_[i];
      if (sign(i) < 0) w.neg_ |= static_cast<std::uint16_t>(1u << i);
    }
    return w;
  }

  // Block-diagonal element acting by a on the first a.size() coordinates
  // and by b on the rest.
  static SignedPermutation direct_sum(const SignedPermutation& a, const SignedPermutation& b) {
    require(a.size_ + b.size_ <= kMaxSize, "direct sum too large");
    SignedPermutation w = identity(a.size_ + b.size_);
    for (int i = 0; i < a.size_; ++i) {
      w.perm_[i] = a.perm_[i];
      if (a.sign(i) < 0) w.neg_ |= static_cast<std::uint16_t>(1u << i);
    }
    for (int i = 0; i < b.size_; ++i) {
      w.perm_[a.size_ + i] = static_cast<std::int8_t>(a.size_ + b.perm_[i]);
      if (b.sign(i) < 0) w.neg_ |= static_cast<std::uint16_t>(1u << (a.size_ + i));
    }
    return w;
  }

  // rank(I - w): each cycle contributes its length minus one, or its full
  // length when the product of signs along it is -1.
  int moved_rank() const {
    std::array<bool, kMaxSize> seen{};
    int r = 0;
    for (int i = 0; i < size_; ++i) {
      if (seen[i]) continue;
      int len = 0, prod = 1, j = i;
      while (!seen[j]) {
        seen[j] = true;
        prod *= sign(j);
        j = perm_[j];
        ++len;
      }
      r += prod < 0 ? len : len - 1;
    }
    return r;
  }

  bool is_reflection() const { return moved_rank() == 1; }

  friend auto operator<=>(const SignedPermutation&, const SignedPermutation&) = default;
  friend bool operator==(const SignedPermutation&, const SignedPermutation&) = default;

  std::size_t hash() const {
    std::size_t h = size_;
    for (int i = 0; i < size_; ++i) h = h * 31 + static_cast<std::size_t>(perm_[i]);
    return h * 65599 + neg_;
  }

 private:
  std::uint8_t size_ = 0;
  std::array<std::int8_t, kMaxSize> perm_{};
  std::uint16_t neg_ = 0;
};

struct SignedPermutationHash {
  std::size_t operator()(const SignedPermutation& w) const { return w.hash(); }
};

// The reflection s_alpha, provided it permutes coordinates up to sign.
inline std::optional<SignedPermutation> reflection_as_signed_permutation(const RationalVector& alpha) {
  const int s = static_cast<int>(alpha.size());
  Rational norm2 = dot(alpha, alpha);
  std::vector<int> perm(s), signs(s);
  for (int i = 0; i < s; ++i) {
    // s_alpha(e_i) = e_i - 2 alpha_i / |alpha|^2 alpha
    Rational c = 2 * alpha[i] / norm2;
    int target = -1, sg = 0;
    for (int j = 0; j < s; ++j) {
      Rational y = (i == j ? Rational(1) : Rational(0)) - c * alpha[j];
      if (y == 0) continue;
      if (target >= 0 || (y != 1 && y != -1)) return std::nullopt;
      target = j;
      sg = y > 0 ? 1 : -1;
    }
    if (target < 0) return std::nullopt;
    perm[i] = target;
    signs[i] = sg;
  }
  return SignedPermutation::from(std::span<const int>(perm), std::span<const int>(signs));
}

inline nlohmann::json to_json(const SignedPermutation& w) {
  nlohmann::json perm = nlohmann::json::array(), signs = nlohmann::json::array();
  for (int i = 0; i < w.size(); ++i) {
    perm.push_back(w.image(i) + 1);
    signs.push_back(w.sign(i));
  }
  return {{"perm", perm}, {"signs", signs}};
}

inline SignedPermutation signed_permutation_from_json(const nlohmann::json& j) {
  std::vector<int> perm, signs;
  for (const auto& p : j.at("perm")) perm.push_back(p.get<int>() - 1);
  for (const auto& s : j.at("signs")) signs.push_back(s.get<int>());
  return SignedPermutation::from(std::span<const int>(perm), std::span<const int>(signs));
}

}  // namespace weylres
