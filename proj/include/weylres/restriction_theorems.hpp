#pragma once

// Group- and algebra-level checks for restricting Weyl groups and their
// invariants from h_k to h_n, and the counterexample obtained by removing a
// simple root from the middle of a B/C/D diagram.

#include <set>
#include <string>
#include <vector>

#include "group_table.hpp"
#include "invariants.hpp"
#include "polynomial.hpp"
#include "report.hpp"
#include "root_system.hpp"

namespace weylres {

inline unsigned long to_ulong(const mpz_class& z) { return z.get_ui(); }

// |W_k ∩ Stab(h_n)| and the kernel of restriction to h_n.
inline unsigned long expected_stabilizer_order(RootType type, int k, int n) {
  switch (type) {
    case RootType::A: return to_ulong(factorial(k - n) * factorial(n + 1));
    case RootType::B:
    case RootType::C: return to_ulong(pow2(k) * factorial(k - n) * factorial(n));
    case RootType::D: return to_ulong(pow2(k - 1) * factorial(k - n) * factorial(n));
  }
  return 0;
}

inline unsigned long expected_kernel_order(RootType type, int k, int n) {
  switch (type) {
    case RootType::A: return to_ulong(factorial(k - n));
    case RootType::B:
    case RootType::C: return to_ulong(pow2(k - n) * factorial(k - n));
    case RootType::D: return k == n ? 1 : to_ulong(pow2(k - n - 1) * factorial(k - n));
  }
  return 0;
}

inline nlohmann::json group_summary(const GroupTable& g) {
  return {{"order", g.order()}, {"kind", kind_name(g.kind)}};
}

inline Report verify_theorem_admext(RootType type, int k, int n) {
  require_rank_pair(type, k, n);
  require(k <= enumeration_cap(), "rank k above the enumeration cap");
  Report rep;
  rep.theorem = "AdmExt";
  rep.subject = rank_subject(type, k, n);

  auto rs_k = build_root_system(type, k);
  auto rs_n = build_root_system(type, n);
  auto w_k = generate_weyl(rs_k);
  auto w_n = generate_weyl(rs_n);
  auto img = restricted_image(w_k, n);

  rep.add("0-simple-roots", verify_simple_restriction(type, k, n).pass,
          "alpha_{k,j}| = alpha_{n,j} for j <= n");
  unsigned long stab = expected_stabilizer_order(type, k, n);
  rep.add("1-stabilizer-order", img.stabilizer_order == stab, "|W_{k,n}| matches the closed formula",
          {{"expected", stab}, {"actual", img.stabilizer_order}});
  unsigned long ker = expected_kernel_order(type, k, n);
  rep.add("1-kernel-order", img.kernel_order == ker, "kernel of restriction matches the closed formula",
          {{"expected", ker}, {"actual", img.kernel_order}});
  rep.add("1-restriction-identities", verify_restriction_identities(type, k, n).pass(),
          "generator restriction identities hold");

  const bool strict_d = type == RootType::D && k > n;
  if (!strict_d) {
    auto rel = compare_groups(img.image, w_n);
    rep.add("1-image", rel == GroupRelation::Equal, "W_{k,n}|h_n = W_n",
            {{"relation", relation_name(rel)}, {"image", group_summary(img.image)}});
    auto s = check_surjectivity(type, k, n, false);
    Claim& c = rep.add("1-surjective", s.surjective(), "restriction of invariants is surjective");
    c.detail["witnesses"] = to_json(s)["claims"];
  }

  if (type != RootType::D) return rep;

  auto wt_k = generate_extended(rs_k);
  auto wt_n = generate_extended(rs_n);

  if (strict_d) {
    auto hyper = hyperoctahedral(n);
    rep.add("2-image-all-sign-changes", compare_groups(img.image, hyper) == GroupRelation::Equal,
            "W_{k,n}|h_n is the group of all signed permutations", {{"image", group_summary(img.image)}});
    auto rel = compare_groups(w_n, img.image);
    rep.add("2-strict", rel == GroupRelation::ProperSubgroup, "W_n is a proper subgroup of W_{k,n}|h_n",
            {{"relation", relation_name(rel)}, {"witness", to_json(SignedPermutation::sign_change(n, {0}))}});
    auto s = check_surjectivity(type, k, n, false);
    rep.add("2-pfaffian-obstruction", s.obstruction && s.obstruction->certified(),
            label("p", n, 1) + " is not a restriction of a W_k-invariant",
            s.obstruction ? nlohmann::json{{"restricted_generators_even", s.obstruction->restricted_generators_even},
                                           {"target_has_odd_exponent", s.obstruction->target_has_odd_exponent}}
                          : nlohmann::json::object());
  }

  rep.add("3-reflection-group",
          generated_by_reflections(wt_k) && compare_groups(wt_k, hyperoctahedral(k)) == GroupRelation::Equal,
          "W~_k is generated by its reflections and equals W(B_k)", {{"order", wt_k.order()}});
  if (strict_d)
    rep.add("3-image-W", compare_groups(img.image, wt_n) == GroupRelation::Equal, "W_{k,n}|h_n = W~_n");
  auto img_t = restricted_image(wt_k, n);
  rep.add("3-image-Wtilde", compare_groups(img_t.image, wt_n) == GroupRelation::Equal,
          "W~_{k,n}|h_n = W~_n", {{"image", group_summary(img_t.image)}});

  auto st = check_surjectivity(type, k, n, true);
  Claim& c4 = rep.add("4-surjective-extended", st.surjective(), "restriction onto W~_n-invariants is surjective");
  c4.detail["witnesses"] = to_json(st)["claims"];

  if (strict_d) {
    // Restrictions of W_k-invariants are W~_n-invariant, so with surjectivity
    // onto the W~_n-invariants the two images coincide.
    auto gens_n = weyl_generators(rs_n, true);
    auto big = char_poly_generators(type, k);
    bool inside = true;
    for (const auto& p : big.generators)
      if (!is_invariant(std::span<const SignedPermutation>(gens_n), restrict_poly(p, n))) inside = false;
    rep.add("4-images-equal", inside && st.surjective(), "I_{W_k}| = I_{W~_n}");
  }
  auto even = check_even_subalgebra(k);
  rep.add("4-even-subalgebra", even.pass(), "I_{W~_k} is the even part of I_{W_k}",
          {{"max_degree", even.max_degree}, {"monomials_checked", even.monomials_checked}});
  return rep;
}

namespace detail {

// Basis of {a : (a, b) = 0 for all b in rows}.
inline std::vector<RationalVector> annihilator(const std::vector<RationalVector>& rows, int dim) {
  std::vector<RationalVector> m = rows;
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < dim && r < static_cast<int>(m.size()); ++c) {
    int p = r;
    while (p < static_cast<int>(m.size()) && m[p][c] == 0) ++p;
    if (p == static_cast<int>(m.size())) continue;
    std::swap(m[p], m[r]);
    Rational inv = 1 / m[r][c];
    for (auto& x : m[r]) x *= inv;
    for (int i = 0; i < static_cast<int>(m.size()); ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rational f = m[i][c];
      for (int cc = 0; cc < dim; ++cc) m[i][cc] -= f * m[r][cc];
    }
    pivots.push_back(c);
    ++r;
  }
  std::vector<RationalVector> out;
  for (int free = 0; free < dim; ++free) {
    if (std::find(pivots.begin(), pivots.end(), free) != pivots.end()) continue;
    RationalVector v(dim, 0);
    v[free] = 1;
    for (int i = 0; i < r; ++i) v[pivots[i]] = -m[i][free];
    out.push_back(v);
  }
  return out;
}

struct Component {
  std::vector<int> indices;  // 1-based simple root indices, ascending
  std::string type;
  int rank = 0;
};

inline Component classify_component(const RootSystem& rs, std::vector<int> idx) {
  std::sort(idx.begin(), idx.end());
  Component c{idx, "A", static_cast<int>(idx.size())};
  if (idx.size() == 1) return c;
  std::map<Rational, int> lengths;
  int max_degree = 0;
  for (int a : idx) {
    ++lengths[dot(rs.simple(a), rs.simple(a))];
    int deg = 0;
    for (int b : idx)
      if (a != b && dot(rs.simple(a), rs.simple(b)) != 0) ++deg;
    max_degree = std::max(max_degree, deg);
  }
  if (lengths.size() == 1) {
    c.type = max_degree <= 2 ? "A" : "D";
  } else {
    // the odd one out is short in B, long in C
    bool short_unique = lengths.begin()->second == 1 && lengths.rbegin()->second != 1;
    c.type = short_unique ? "B" : "C";
  }
  return c;
}

}  // namespace detail

inline Report remark_counterexample(RootType type, int k, int removed) {
  require(type != RootType::A, "the remark concerns types B, C and D");
  require(k >= std::max(3, diagram_min_rank(type)), "rank too small for the remark");
  require(removed >= 1 && removed <= k, "removed simple root index out of range");
  require(k - removed >= 2, "k - i must be at least 2 for the remark to apply");
  require(k <= enumeration_cap(), "rank k above the enumeration cap");

  Report rep;
  rep.theorem = "Remark";
  rep.subject = {{"type", type_name(type)}, {"k", k}, {"removed", removed}};
  auto rs = build_root_system(type, k);
  const int dim = rs.ambient_dim;

  // connected components of the diagram with alpha_i removed
  std::vector<int> comp_of(k + 1, -1);
  std::vector<detail::Component> comps;
  for (int start = k; start >= 1; --start) {
    if (start == removed || comp_of[start] >= 0) continue;
    std::vector<int> idx{start}, stack{start};
    comp_of[start] = static_cast<int>(comps.size());
    while (!stack.empty()) {
      int a = stack.back();
      stack.pop_back();
      for (int b = 1; b <= k; ++b)
        if (b != removed && comp_of[b] < 0 && dot(rs.simple(a), rs.simple(b)) != 0) {
          comp_of[b] = comp_of[start];
          idx.push_back(b);
          stack.push_back(b);
        }
    }
    comps.push_back(detail::classify_component(rs, idx));
  }
  const detail::Component& factor = comps.front();  // contains alpha_k
  const int ell = factor.rank;

  std::vector<RationalVector> basis;
  std::set<int> support;
  for (int a : factor.indices) {
    basis.push_back(rs.simple(a));
    for (int j = 0; j < dim; ++j)
      if (rs.simple(a)[j] != 0) support.insert(j + 1);
  }
  nlohmann::json comps_json = nlohmann::json::array();
  for (const auto& c : comps)
    comps_json.push_back({{"indices", c.indices}, {"type", c.type}, {"rank", c.rank}});
  rep.add("factor-is-type-A", factor.type == "A" && ell >= 2,
          "the component containing alpha_k is of type A_l with l >= 2",
          {{"factor", factor.type + std::to_string(ell)},
           {"coordinates", std::vector<int>(support.begin(), support.end())},
           {"components", comps_json}});

  // stabilizer of V = span(basis) and its image on V
  auto ann = detail::annihilator(basis, dim);
  auto in_v = [&](const RationalVector& v) {
    for (const auto& a : ann)
      if (dot(a, v) != 0) return false;
    return true;
  };
  auto acts_as_minus_id = [&](const SignedPermutation& w) {
    for (const auto& b : basis)
      if (w.apply(b) != -b) return false;
    return true;
  };
  auto w_k = generate_weyl(rs);
  std::size_t stab_order = 0;
  std::set<std::vector<RationalVector>> induced;
  std::optional<SignedPermutation> minus_id;
  for (const auto& w : w_k.elements) {
    bool keeps = std::all_of(basis.begin(), basis.end(), [&](const RationalVector& b) { return in_v(w.apply(b)); });
    if (!keeps) continue;
    ++stab_order;
    std::vector<RationalVector> cols;
    for (const auto& b : basis) cols.push_back(*solve_in_span(basis, w.apply(b)));
    induced.insert(cols);
    if (!minus_id && acts_as_minus_id(w)) minus_id = w;
  }
  nlohmann::json d1{{"stabilizer_order", stab_order}, {"image_order", induced.size()}};
  if (minus_id) d1["witness"] = to_json(*minus_id);
  rep.add("minus-id-in-image", minus_id.has_value(), "-id on V lies in the image of Stab_W(V)", d1);

  std::vector<SignedPermutation> gens;
  for (int a : factor.indices) gens.push_back(*reflection_as_signed_permutation(rs.simple(a)));
  auto w_a = closure(gens, dim);
  bool any = std::any_of(w_a.begin(), w_a.end(), acts_as_minus_id);
  rep.add("minus-id-not-in-W(A)", !any, "-id on V is not in W(A_l)",
          {{"order", w_a.size()}, {"expected_order", to_ulong(factorial(ell + 1))}});

  auto g = char_poly_generators(type, k);
  std::vector<RationalVector> m(dim, RationalVector(ell, 0));
  for (int j = 0; j < dim; ++j)
    for (int i = 0; i < ell; ++i) m[j][i] = basis[i][j];
  bool even = true;
  nlohmann::json odd = nlohmann::json::array();
  for (int nu = 1; nu <= g.count(); ++nu) {
    auto r = linear_substitute(g.p(nu), m, ell);
    if (!r.all_degrees_even()) {
      even = false;
      odd.push_back(label("p", k, nu));
    }
  }
  rep.add("restricted-invariants-even", even, "every generator restricted to V is even",
          {{"odd_generators", odd}});
  return rep;
}

}  // namespace weylres
