#pragma once

// Classical root systems A_k, B_k, C_k, D_k.
//
// Coordinates are stored as (x_1, ..., x_s) with f_j the j-th unit vector.
// Simple roots are numbered so that alpha_1 sits at the right end of the
// Dynkin diagram and new simple roots are appended on the left; a rank-n
// system embeds into a rank-k one on coordinates 1..n (1..n+1 for type A)
// with the remaining coordinates zero.

#include <algorithm>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "errors.hpp"
#include "rational.hpp"

namespace weylres {

enum class RootType { A, B, C, D };

inline char type_char(RootType t) {
  switch (t) {
    case RootType::A: return 'A';
    case RootType::B: return 'B';
    case RootType::C: return 'C';
    case RootType::D: return 'D';
  }
  return '?';
}

inline std::string type_name(RootType t) { return std::string(1, type_char(t)); }

inline RootType parse_root_type(std::string_view s) {
  if (s == "A") return RootType::A;
  if (s == "B") return RootType::B;
  if (s == "C") return RootType::C;
  if (s == "D") return RootType::D;
  throw PreconditionError("unsupported root system type '" + std::string(s) + "'");
}

// Smallest rank drawn in the propagation diagrams.
inline int diagram_min_rank(RootType t) {
  switch (t) {
    case RootType::A: return 1;
    case RootType::B: return 2;
    case RootType::C: return 3;
    case RootType::D: return 4;
  }
  return 1;
}

// Smallest rank we are willing to construct at all.
inline int construct_min_rank(RootType t) { return t == RootType::D ? 2 : 1; }

inline constexpr int kDefaultRankCap = 8;

// Number of coordinates of the ambient space for a rank-r system.
inline int ambient_dim(RootType t, int rank) { return t == RootType::A ? rank + 1 : rank; }

inline RationalVector unit(int dim, int j) {
  RationalVector v(dim, 0);
  v[j - 1] = 1;
  return v;
}

inline RationalVector operator+(RationalVector a, const RationalVector& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

inline RationalVector operator-(RationalVector a, const RationalVector& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

inline RationalVector operator*(const Rational& c, RationalVector a) {
  for (auto& x : a) x *= c;
  return a;
}

inline RationalVector operator-(RationalVector a) {
  for (auto& x : a) x = -x;
  return a;
}

// s_alpha(v) = v - 2 (v, alpha) / (alpha, alpha) alpha
inline RationalVector reflect(const RationalVector& alpha, const RationalVector& v) {
  Rational c = 2 * dot(v, alpha) / dot(alpha, alpha);
  return v - c * alpha;
}

struct RootSystem {
  RootType type = RootType::A;
  int rank = 0;
  int ambient_dim = 0;
  std::vector<RationalVector> roots;         // sorted
  std::vector<RationalVector> simple_roots;  // alpha_1 .. alpha_k
  bool degenerate = false;                   // below the diagram's rank bound

  bool contains(const RationalVector& v) const {
    return std::binary_search(roots.begin(), roots.end(), v);
  }
  const RationalVector& simple(int j) const { return simple_roots.at(j - 1); }
};

inline RootSystem build_root_system(RootType type, int rank, int rank_cap = kDefaultRankCap) {
  if (rank < construct_min_rank(type))
    throw PreconditionError("rank " + std::to_string(rank) + " below the minimum for type " +
                            type_name(type));
  if (rank > rank_cap)
    throw PreconditionError("rank " + std::to_string(rank) + " above the cap " +
                            std::to_string(rank_cap));

  RootSystem rs;
  rs.type = type;
  rs.rank = rank;
  rs.ambient_dim = weylres::ambient_dim(type, rank);
  rs.degenerate = rank < diagram_min_rank(type);
  const int s = rs.ambient_dim;
  auto f = [s](int j) { return unit(s, j); };

  if (type == RootType::A) {
    for (int i = 1; i <= s; ++i)
      for (int j = 1; j <= s; ++j)
        if (i != j) rs.roots.push_back(f(i) - f(j));
    for (int j = 1; j <= rank; ++j) rs.simple_roots.push_back(f(j + 1) - f(j));
  } else {
    for (int i = 1; i <= s; ++i) {
      for (int j = 1; j < i; ++j) {
        for (int a : {1, -1})
          for (int b : {1, -1}) rs.roots.push_back(Rational(a) * f(i) + Rational(b) * f(j));
      }
      if (type == RootType::B) {
        rs.roots.push_back(f(i));
        rs.roots.push_back(-f(i));
      } else if (type == RootType::C) {
        rs.roots.push_back(Rational(2) * f(i));
        rs.roots.push_back(Rational(-2) * f(i));
      }
    }
    switch (type) {
      case RootType::B: rs.simple_roots.push_back(f(1)); break;
      case RootType::C: rs.simple_roots.push_back(Rational(2) * f(1)); break;
      case RootType::D: rs.simple_roots.push_back(f(1) + f(2)); break;
      default: break;
    }
    for (int j = 2; j <= rank; ++j) rs.simple_roots.push_back(f(j) - f(j - 1));
  }
  std::sort(rs.roots.begin(), rs.roots.end());
  return rs;
}

// Coordinates of v in terms of the (linearly independent) vectors in basis,
// if v lies in their span.
inline std::optional<RationalVector> solve_in_span(const std::vector<RationalVector>& basis,
                                                   const RationalVector& v) {
  const int rows = static_cast<int>(v.size());
  const int cols = static_cast<int>(basis.size());
  std::vector<RationalVector> m(rows, RationalVector(cols + 1));
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) m[r][c] = basis[c][r];
    m[r][cols] = v[r];
  }
  std::vector<int> pivot_col;
  int row = 0;
  for (int c = 0; c < cols && row < rows; ++c) {
    int p = row;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[row]);
    Rational inv = 1 / m[row][c];
    for (auto& x : m[row]) x *= inv;
    for (int r = 0; r < rows; ++r) {
      if (r == row || m[r][c] == 0) continue;
      Rational fct = m[r][c];
      for (int cc = c; cc <= cols; ++cc) m[r][cc] -= fct * m[row][cc];
    }
    pivot_col.push_back(c);
    ++row;
  }
  for (int r = row; r < rows; ++r)
    if (m[r][cols] != 0) return std::nullopt;
  RationalVector out(cols, 0);
  for (int r = 0; r < row; ++r) out[pivot_col[r]] = m[r][cols];
  return out;
}

// Coordinates of v in the basis of simple roots, if v lies in their span.
inline std::optional<RationalVector> simple_coordinates(const RootSystem& rs,
                                                        const RationalVector& v) {
  return solve_in_span(rs.simple_roots, v);
}

inline std::vector<RationalVector> positive_roots(const RootSystem& rs) {
  std::vector<RationalVector> out;
  for (const auto& a : rs.roots) {
    auto c = simple_coordinates(rs, a);
    if (!c) continue;
    if (std::all_of(c->begin(), c->end(), [](const Rational& x) { return x >= 0; }))
      out.push_back(a);
  }
  return out;
}

// Orthogonal projection onto the trace-zero hyperplane.
inline RationalVector trace_zero_part(RationalVector v) {
  Rational mean = 0;
  for (const auto& x : v) mean += x;
  mean /= static_cast<long>(v.size());
  for (auto& x : v) x -= mean;
  return v;
}

inline RationalVector truncate(const RationalVector& v, int m) {
  return RationalVector(v.begin(), v.begin() + m);
}

struct SimpleRestrictionReport {
  RootType type = RootType::A;
  int k = 0;
  int n = 0;
  bool pass = true;
  std::optional<int> offending_index;
  std::vector<RationalVector> restricted;  // alpha_{k,j}| for j = 1..k
};

// Checks alpha_{n,j} = alpha_{k,j}| for j <= n, and that the remaining simple
// roots of the big system restrict to zero or to non-simple vectors.
inline SimpleRestrictionReport verify_simple_restriction(RootType type, int k, int n) {
  require(n >= construct_min_rank(type) && k >= n, "invalid rank pair for simple-root restriction");
  RootSystem big = build_root_system(type, k);
  RootSystem small = build_root_system(type, n);
  SimpleRestrictionReport rep{type, k, n, true, std::nullopt, {}};
  const int m = small.ambient_dim;
  auto normalize = [&](const RationalVector& v) {
    return type == RootType::A ? trace_zero_part(v) : v;
  };
  for (int j = 1; j <= k; ++j) {
    RationalVector r = truncate(big.simple(j), m);
    rep.restricted.push_back(r);
    bool ok;
    if (j <= n) {
      ok = (r == small.simple(j));
    } else {
      RationalVector nr = normalize(r);
      ok = is_zero(r) || std::none_of(small.simple_roots.begin(), small.simple_roots.end(),
                                       [&](const RationalVector& a) { return normalize(a) == nr; });
    }
    if (!ok && rep.pass) {
      rep.pass = false;
      rep.offending_index = j;
    }
  }
  return rep;
}

inline nlohmann::json to_json(const RootSystem& rs) {
  nlohmann::json roots = nlohmann::json::array();
  for (const auto& r : rs.roots) roots.push_back(vector_to_json(r));
  nlohmann::json simple = nlohmann::json::array();
  for (const auto& r : rs.simple_roots) simple.push_back(vector_to_json(r));
  return {{"type", type_name(rs.type)},
          {"rank", rs.rank},
          {"ambient_dim", rs.ambient_dim},
          {"degenerate", rs.degenerate},
          {"roots", roots},
          {"simple", simple}};
}

inline nlohmann::json to_json(const SimpleRestrictionReport& r) {
  nlohmann::json restricted = nlohmann::json::array();
  for (const auto& v : r.restricted) restricted.push_back(vector_to_json(v));
  nlohmann::json j{{"type", type_name(r.type)}, {"k", r.k}, {"n", r.n}, {"pass", r.pass},
                   {"restricted", restricted}};
  j["offending_index"] = r.offending_index ? nlohmann::json(*r.offending_index) : nlohmann::json();
  return j;
}

}  // namespace weylres
