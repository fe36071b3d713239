#pragma once

// Irreducible Riemannian symmetric spaces G/K with G classical and K
// connected, their restricted root systems, and propagation between them.
//
// Multiplicities come from the standard classification; every entry is
// audited on lookup against rank + sum of multiplicities = dim M.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "errors.hpp"
#include "group_table.hpp"
#include "invariants.hpp"
#include "polynomial.hpp"
#include "report.hpp"
#include "restriction_theorems.hpp"
#include "root_system.hpp"

namespace weylres {

enum class Family { AComplex, BComplex, DComplex, CComplex, AIII, AI, AII, BDI, DIII, CII, CI };

inline const std::vector<std::pair<Family, std::string>>& family_names() {
  static const std::vector<std::pair<Family, std::string>> names{
      {Family::AComplex, "A-complex"}, {Family::BComplex, "B-complex"}, {Family::DComplex, "D-complex"},
      {Family::CComplex, "C-complex"}, {Family::AIII, "AIII"},          {Family::AI, "AI"},
      {Family::AII, "AII"},            {Family::BDI, "BDI"},            {Family::DIII, "DIII"},
      {Family::CII, "CII"},            {Family::CI, "CI"}};
  return names;
}

inline std::string family_name(Family f) {
  for (const auto& [fam, name] : family_names())
    if (fam == f) return name;
  return "?";
}

inline Family parse_family(const std::string& s) {
  for (const auto& [fam, name] : family_names())
    if (name == s) return fam;
  throw PreconditionError("unknown symmetric space family '" + s + "'");
}

inline bool two_parameter(Family f) { return f == Family::AIII || f == Family::BDI || f == Family::CII; }

struct SpaceDescriptor {
  Family family = Family::AI;
  int j = 0;  // one-parameter rows
  int p = 0;  // two-parameter rows
  int q = 0;
  std::string g_noncompact;
  std::string g_compact;
  std::string k_name;
  int rank = 0;
  int dim = 0;

  std::string label() const {
    std::string s = family_name(family) + "(";
    s += two_parameter(family) ? std::to_string(p) + "," + std::to_string(q) : std::to_string(j);
    return s + ")";
  }
  bool operator==(const SpaceDescriptor& o) const {
    return family == o.family && j == o.j && p == o.p && q == o.q;
  }
};

inline SpaceDescriptor lookup_space(Family f, int a, int b = 0) {
  SpaceDescriptor s;
  s.family = f;
  auto str = [](int x) { return std::to_string(x); };
  if (two_parameter(f)) {
    require(a >= 1 && b >= 1, family_name(f) + " needs p, q >= 1");
    // AIII and CII are symmetric in p, q; keep p <= q. BDI keeps p >= q.
    if (f == Family::BDI) {
      s.p = std::max(a, b);
      s.q = std::min(a, b);
      require(s.p + s.q >= 3, "BDI needs p + q >= 3");
    } else {
      s.p = std::min(a, b);
      s.q = std::max(a, b);
    }
    s.rank = std::min(s.p, s.q);
  } else {
    require(b == 0, family_name(f) + " takes a single parameter j");
    s.j = a;
  }
  const int j = s.j, p = s.p, q = s.q;
  switch (f) {
    case Family::AComplex:
      require(j >= 2, "A-complex needs j >= 2");
      s.g_noncompact = "SL(" + str(j) + ",C)";
      s.g_compact = "SU(" + str(j) + ") x SU(" + str(j) + ")";
      s.k_name = "diag SU(" + str(j) + ")";
      s.rank = j - 1;
      s.dim = j * j - 1;
      break;
    case Family::BComplex:
      require(j >= 1, "B-complex needs j >= 1");
      s.g_noncompact = "SO(" + str(2 * j + 1) + ",C)";
      s.g_compact = "SO(" + str(2 * j + 1) + ") x SO(" + str(2 * j + 1) + ")";
      s.k_name = "diag SO(" + str(2 * j + 1) + ")";
      s.rank = j;
      s.dim = 2 * j * j + j;
      break;
    case Family::DComplex:
      require(j >= 2, "D-complex needs j >= 2");
      s.g_noncompact = "SO(" + str(2 * j) + ",C)";
      s.g_compact = "SO(" + str(2 * j) + ") x SO(" + str(2 * j) + ")";
      s.k_name = "diag SO(" + str(2 * j) + ")";
      s.rank = j;
      s.dim = 2 * j * j - j;
      break;
    case Family::CComplex:
      require(j >= 1, "C-complex needs j >= 1");
      s.g_noncompact = "Sp(" + str(j) + ",C)";
      s.g_compact = "Sp(" + str(j) + ") x Sp(" + str(j) + ")";
      s.k_name = "diag Sp(" + str(j) + ")";
      s.rank = j;
      s.dim = 2 * j * j + j;
      break;
    case Family::AIII:
      s.g_noncompact = "SU(" + str(p) + "," + str(q) + ")";
      s.g_compact = "SU(" + str(p + q) + ")";
      s.k_name = "S(U(" + str(p) + ") x U(" + str(q) + "))";
      s.dim = 2 * p * q;
      break;
    case Family::AI:
      require(j >= 2, "AI needs j >= 2");
      s.g_noncompact = "SL(" + str(j) + ",R)";
      s.g_compact = "SU(" + str(j) + ")";
      s.k_name = "SO(" + str(j) + ")";
      s.rank = j - 1;
      s.dim = (j - 1) * (j + 2) / 2;
      break;
    case Family::AII:
      require(j >= 2, "AII needs j >= 2");
      s.g_noncompact = "SU*(" + str(2 * j) + ")";
      s.g_compact = "SU(" + str(2 * j) + ")";
      s.k_name = "Sp(" + str(j) + ")";
      s.rank = j - 1;
      s.dim = 2 * j * j - j - 1;
      break;
    case Family::BDI:
      s.g_noncompact = "SO_o(" + str(p) + "," + str(q) + ")";
      s.g_compact = "SO(" + str(p + q) + ")";
      s.k_name = "SO(" + str(p) + ") x SO(" + str(q) + ")";
      s.dim = p * q;
      break;
    case Family::DIII:
      require(j >= 2, "DIII needs j >= 2");
      s.g_noncompact = "SO*(" + str(2 * j) + ")";
      s.g_compact = "SO(" + str(2 * j) + ")";
      s.k_name = "U(" + str(j) + ")";
      s.rank = j / 2;
      s.dim = j * (j - 1);
      break;
    case Family::CII:
      s.g_noncompact = "Sp(" + str(p) + "," + str(q) + ")";
      s.g_compact = "Sp(" + str(p + q) + ")";
      s.k_name = "Sp(" + str(p) + ") x Sp(" + str(q) + ")";
      s.dim = 4 * p * q;
      break;
    case Family::CI:
      require(j >= 1, "CI needs j >= 1");
      s.g_noncompact = "Sp(" + str(j) + ",R)";
      s.g_compact = "Sp(" + str(j) + ")";
      s.k_name = "U(" + str(j) + ")";
      s.rank = j;
      s.dim = j * (j + 1);
      break;
  }
  return s;
}

// "BDI:7,1", "CI:3", "A-complex:4"
inline SpaceDescriptor parse_space(const std::string& text) {
  auto colon = text.find(':');
  require(colon != std::string::npos, "space must look like FAMILY:params, got '" + text + "'");
  Family f = parse_family(text.substr(0, colon));
  std::string params = text.substr(colon + 1);
  auto comma = params.find(',');
  auto to_int = [&](const std::string& s) {
    require(!s.empty() && s.size() <= 6 && s.find_first_not_of("0123456789") == std::string::npos,
            "bad parameter in '" + text + "'");
    return std::stoi(s);
  };
  if (two_parameter(f)) {
    require(comma != std::string::npos, family_name(f) + " needs two parameters p,q");
    return lookup_space(f, to_int(params.substr(0, comma)), to_int(params.substr(comma + 1)));
  }
  require(comma == std::string::npos, family_name(f) + " takes a single parameter");
  return lookup_space(f, to_int(params));
}

// Positive root shapes of the restricted root system.
inline const std::vector<std::string>& root_shapes() {
  static const std::vector<std::string> shapes{"f_i-f_j", "f_i+f_j", "f_i", "2f_i"};
  return shapes;
}

struct RestrictedRootData {
  RootType sigma_half_type = RootType::A;
  int rank = 0;
  bool reduced = true;
  std::map<std::string, int> multiplicities;  // by root shape; absent shapes have no roots
  std::vector<RationalVector> positive_roots;  // of Sigma, including 2f_i
  std::vector<int> root_multiplicity;          // parallel to positive_roots
  RationalVector rho;                          // ambient coordinates (r+1 for type A)

  int multiplicity_sum() const {
    int s = 0;
    for (int m : root_multiplicity) s += m;
    return s;
  }
};

namespace detail {

struct TableEntry {
  RootType type;
  int rank;
  std::map<std::string, int> mult;
};

inline TableEntry table_entry(const SpaceDescriptor& s) {
  const int p = s.p, q = s.q, j = s.j;
  switch (s.family) {
    case Family::AComplex: return {RootType::A, j - 1, {{"f_i-f_j", 2}}};
    case Family::BComplex: return {RootType::B, j, {{"f_i-f_j", 2}, {"f_i+f_j", 2}, {"f_i", 2}}};
    case Family::DComplex: return {RootType::D, j, {{"f_i-f_j", 2}, {"f_i+f_j", 2}}};
    case Family::CComplex: return {RootType::C, j, {{"f_i-f_j", 2}, {"f_i+f_j", 2}, {"2f_i", 2}}};
    case Family::AIII:
      if (p == q) return {RootType::C, p, {{"f_i-f_j", 2}, {"f_i+f_j", 2}, {"2f_i", 1}}};
      return {RootType::B, p, {{"f_i-f_j", 2}, {"f_i+f_j", 2}, {"f_i", 2 * (q - p)}, {"2f_i", 1}}};
    case Family::AI: return {RootType::A, j - 1, {{"f_i-f_j", 1}}};
    case Family::AII: return {RootType::A, j - 1, {{"f_i-f_j", 4}}};
    case Family::BDI:
      if (p == q) return {RootType::D, q, {{"f_i-f_j", 1}, {"f_i+f_j", 1}}};
      return {RootType::B, q, {{"f_i-f_j", 1}, {"f_i+f_j", 1}, {"f_i", p - q}}};
    case Family::DIII:
      if (j % 2 == 0) return {RootType::C, j / 2, {{"f_i-f_j", 4}, {"f_i+f_j", 4}, {"2f_i", 1}}};
      return {RootType::B, j / 2, {{"f_i-f_j", 4}, {"f_i+f_j", 4}, {"f_i", 4}, {"2f_i", 1}}};
    case Family::CII:
      if (p == q) return {RootType::C, p, {{"f_i-f_j", 4}, {"f_i+f_j", 4}, {"2f_i", 3}}};
      return {RootType::B, p, {{"f_i-f_j", 4}, {"f_i+f_j", 4}, {"f_i", 4 * (q - p)}, {"2f_i", 3}}};
    case Family::CI: return {RootType::C, j, {{"f_i-f_j", 1}, {"f_i+f_j", 1}, {"2f_i", 1}}};
  }
  throw std::logic_error("unhandled family");
}

}  // namespace detail

inline RestrictedRootData restricted_root_data(const SpaceDescriptor& s) {
  auto e = detail::table_entry(s);
  RestrictedRootData d;
  d.sigma_half_type = e.type;
  d.rank = e.rank;
  d.multiplicities = e.mult;
  // a B-type Sigma_{1/2} carrying 2f_i is the non-reduced BC_r
  d.reduced = !(e.type == RootType::B && e.mult.count("2f_i"));

  const int r = e.rank;
  const int amb = ambient_dim(e.type, r);
  auto f = [amb](int i) { return unit(amb, i); };
  auto push = [&](const std::string& shape, const RationalVector& v) {
    auto it = e.mult.find(shape);
    if (it == e.mult.end() || it->second == 0) return;
    d.positive_roots.push_back(v);
    d.root_multiplicity.push_back(it->second);
  };
  for (int i = 1; i <= amb; ++i)
    for (int k = 1; k < i; ++k) {
      push("f_i-f_j", f(i) - f(k));
      if (e.type != RootType::A) push("f_i+f_j", f(i) + f(k));
    }
  if (e.type != RootType::A)
    for (int i = 1; i <= amb; ++i) {
      push("f_i", f(i));
      push("2f_i", Rational(2) * f(i));
    }

  d.rho = RationalVector(amb, 0);
  for (std::size_t i = 0; i < d.positive_roots.size(); ++i)
    d.rho = d.rho + make_rational(d.root_multiplicity[i], 2) * d.positive_roots[i];

  if (d.rank != s.rank || d.rank + d.multiplicity_sum() != s.dim)
    throw std::logic_error("multiplicity table entry for " + s.label() +
                           " fails rank + sum of multiplicities = dim");
  return d;
}

inline nlohmann::json to_json(const SpaceDescriptor& s) {
  nlohmann::json j{{"family", family_name(s.family)}, {"label", s.label()}};
  if (two_parameter(s.family)) {
    j["p"] = s.p;
    j["q"] = s.q;
  } else {
    j["j"] = s.j;
  }
  j["G_noncompact"] = s.g_noncompact;
  j["G_compact"] = s.g_compact;
  j["K"] = s.k_name;
  j["rank"] = s.rank;
  j["dim"] = s.dim;
  return j;
}

inline nlohmann::json to_json(const RestrictedRootData& d) {
  nlohmann::json mult = nlohmann::json::object();
  for (const auto& shape : root_shapes())
    if (d.multiplicities.count(shape)) mult[shape] = d.multiplicities.at(shape);
  return {{"sigma_half", {{"type", type_name(d.sigma_half_type)}, {"rank", d.rank}}},
          {"reduced", d.reduced},
          {"multiplicities", mult},
          {"multiplicity_sum", d.multiplicity_sum()},
          {"rho", vector_to_json(d.rho)}};
}

// All table rows with parameters up to `max_param`.
inline std::vector<SpaceDescriptor> all_spaces(int max_param) {
  std::vector<SpaceDescriptor> out;
  for (const auto& [f, name] : family_names()) {
    if (two_parameter(f)) {
      for (int p = 1; p <= max_param; ++p)
        for (int q = 1; q <= max_param; ++q) {
          if (f == Family::BDI ? (p < q || p + q < 3) : p > q) continue;
          out.push_back(lookup_space(f, p, q));
        }
    } else {
      for (int j = 1; j <= max_param; ++j) {
        try {
          out.push_back(lookup_space(f, j));
        } catch (const PreconditionError&) {
        }
      }
    }
  }
  return out;
}

// A product of irreducible factors, up to covering.
using ProductSpace = std::vector<SpaceDescriptor>;

struct PropagationStep {
  std::string s_k;
  std::string s_n;
  bool propagates = false;
  std::string rule;
};

inline PropagationStep propagation_step(const SpaceDescriptor& sk, const SpaceDescriptor& sn) {
  PropagationStep st{sk.label(), sn.label(), false, ""};
  auto dk = restricted_root_data(sk);
  auto dn = restricted_root_data(sn);
  auto sig = [](const RestrictedRootData& d) { return type_name(d.sigma_half_type) + std::to_string(d.rank); };
  if (sk == sn) {
    st.propagates = true;
    st.rule = "identical spaces";
  } else if (dk.sigma_half_type != dn.sigma_half_type) {
    st.rule = "Sigma_1/2 types differ: " + sig(dk) + " vs " + sig(dn);
  } else if (sk.dim < sn.dim) {
    // M_n sits inside M_k, so its dimension cannot be larger
    st.rule = "dimension decreases: dim " + std::to_string(sk.dim) + " < " + std::to_string(sn.dim);
  } else if (dk.rank < dn.rank) {
    st.rule = "rank decreases: " + sig(dk) + " cannot extend " + sig(dn);
  } else if (dk.rank == dn.rank) {
    st.propagates = true;
    st.rule = "same Sigma_1/2 " + sig(dk) + " (a_k = a_n)";
  } else {
    st.propagates = true;
    st.rule = "left extension " + sig(dn) + " -> " + sig(dk);
  }
  return st;
}

// Factors of s_n are assigned injectively to factors of s_k.
inline Report check_propagation(const ProductSpace& sk, const ProductSpace& sn) {
  require(!sk.empty() && !sn.empty(), "spaces must have at least one factor");
  Report rep;
  rep.theorem = "propagation";
  nlohmann::json lk = nlohmann::json::array(), ln = nlohmann::json::array();
  for (const auto& s : sk) lk.push_back(s.label());
  for (const auto& s : sn) ln.push_back(s.label());
  rep.subject = {{"s_k", lk}, {"s_n", ln}};

  if (sn.size() > sk.size()) {
    rep.add("factors", false, "s_n has more irreducible factors than s_k");
    return rep;
  }
  std::vector<std::vector<PropagationStep>> steps(sn.size());
  for (std::size_t a = 0; a < sn.size(); ++a)
    for (std::size_t b = 0; b < sk.size(); ++b) steps[a].push_back(propagation_step(sk[b], sn[a]));

  std::vector<int> assign(sn.size(), -1);
  std::vector<bool> used(sk.size(), false);
  auto search = [&](auto&& self, std::size_t a) -> bool {
    if (a == sn.size()) return true;
    for (std::size_t b = 0; b < sk.size(); ++b) {
      if (used[b] || !steps[a][b].propagates) continue;
      used[b] = true;
      assign[a] = static_cast<int>(b);
      if (self(self, a + 1)) return true;
      used[b] = false;
    }
    assign[a] = -1;
    return false;
  };
  bool ok = search(search, 0);
  for (std::size_t a = 0; a < sn.size(); ++a) {
    const PropagationStep& st = ok ? steps[a][assign[a]] : steps[a][std::min(a, sk.size() - 1)];
    rep.add("factor:" + sn[a].label(), ok && st.propagates,
            st.s_k + " propagates " + st.s_n, {{"s_k", st.s_k}, {"rule", st.rule}});
  }
  return rep;
}

inline Report check_propagation(const SpaceDescriptor& sk, const SpaceDescriptor& sn) {
  return check_propagation(ProductSpace{sk}, ProductSpace{sn});
}

// The restriction theorem for a propagating pair, run on the Sigma_{1/2}
// systems with the same engine as for Cartan subalgebras.
inline Report verify_theorem_admext_gk(const SpaceDescriptor& sk, const SpaceDescriptor& sn) {
  auto prop = check_propagation(sk, sn);
  require(prop.pass(), sk.label() + " does not propagate " + sn.label());
  auto dk = restricted_root_data(sk);
  auto dn = restricted_root_data(sn);
  const RootType t = dk.sigma_half_type;
  const int k = dk.rank, n = dn.rank;
  require(k <= enumeration_cap(), "Sigma_1/2 rank above the enumeration cap");
  require(k >= construct_min_rank(t) && n >= construct_min_rank(t), "Sigma_1/2 rank too small to model");

  Report rep;
  rep.theorem = "AdmExtG/K";
  rep.subject = {{"s_k", sk.label()}, {"s_n", sn.label()},
                 {"sigma_k", type_name(t) + std::to_string(k)}, {"sigma_n", type_name(t) + std::to_string(n)}};

  auto rs_k = build_root_system(t, k), rs_n = build_root_system(t, n);
  auto w_k = generate_weyl(rs_k), w_n = generate_weyl(rs_n);
  auto wt_k = generate_extended(rs_k), wt_n = generate_extended(rs_n);
  auto img = restricted_image(w_k, n);
  auto img_t = restricted_image(wt_k, n);

  if (t != RootType::D || k == n) {
    auto rel = compare_groups(img.image, w_n);
    rep.add("1-image", rel == GroupRelation::Equal, "W_{a_n}(g_k,a_k)|a_n = W(g_n,a_n)",
            {{"relation", relation_name(rel)}, {"image_order", img.image.order()}});
    rep.add("1-surjective", check_surjectivity(t, k, n, false, true).surjective(),
            "I(a_k) -> I(a_n) is surjective");
  } else {
    auto rel = compare_groups(w_n, img.image);
    rep.add("2-strict", rel == GroupRelation::ProperSubgroup, "W(g_n,a_n) is a proper subgroup of the restriction",
            {{"relation", relation_name(rel)}, {"image_order", img.image.order()}});
    auto s = check_surjectivity(t, k, n, false, true);
    rep.add("2-pfaffian-obstruction", s.obstruction && s.obstruction->certified(),
            "the Pfaffian of a_n is not a restricted invariant");
  }
  rep.add("3-image-Wtilde", compare_groups(img_t.image, wt_n) == GroupRelation::Equal,
          "W~_{a_n}(g_k,a_k)|a_n = W~(g_n,a_n)", {{"image_order", img_t.image.order()}});
  rep.add("3-surjective-extended", check_surjectivity(t, k, n, true, true).surjective(),
          "I_W~(a_k) -> I_W~(a_n) is surjective");
  return rep;
}

inline bool is_split_case(const SpaceDescriptor& s) {
  return s.family == Family::AI || s.family == Family::CI ||
         (s.family == Family::BDI && (s.p == s.q || s.p == s.q + 1));
}

inline bool is_complex_case(const SpaceDescriptor& s) {
  return s.family == Family::AComplex || s.family == Family::BComplex || s.family == Family::CComplex ||
         s.family == Family::DComplex;
}

// Generators of the W~-invariants of a rank-r system: p_{r,nu}, with the
// Pfaffian of type D replaced by the determinant term.
inline std::vector<std::pair<std::string, Polynomial>> extended_invariant_generators(RootType t, int r) {
  auto g = char_poly_generators(t, r);
  std::vector<std::pair<std::string, Polynomial>> out;
  for (int nu = 1; nu <= g.count(); ++nu) {
    if (t == RootType::D && nu == 1)
      out.emplace_back(determinant_label(r), g.determinant_term);
    else
      out.emplace_back(label("p", r, nu), g.p(nu));
  }
  return out;
}

inline Report verify_theorem_ihia(const SpaceDescriptor& s) {
  const bool split = is_split_case(s), complex = is_complex_case(s);
  if (!split && !complex)
    throw OutOfScopeError(s.label() + " is neither split nor complex; its Cartan subalgebra "
                          "is not modeled");
  auto d = restricted_root_data(s);
  const RootType t = d.sigma_half_type;
  const int r = d.rank;
  require(r <= enumeration_cap(), "rank above the enumeration cap");
  auto rs = build_root_system(t, r);
  auto w = generate_weyl(rs);
  auto wt = generate_extended(rs);
  const int amb = rs.ambient_dim;

  Report rep;
  rep.theorem = "IhIa";
  rep.subject = {{"space", s.label()}, {"case", split ? "split" : "complex"},
                 {"sigma", type_name(t) + std::to_string(r)}};

  if (split) {
    // a = h_R: the stabilizer of a is everything and restriction is the identity
    auto img = restricted_image(wt, EmbeddedSubspace::coordinate_block(amb, amb, t == RootType::A), t, r);
    rep.add("image-Wtilde", compare_groups(img.image, wt) == GroupRelation::Equal && img.kernel_order == 1,
            "W~(g,a) = W~_a(g,h)|a", {{"order", wt.order()}});
    auto surj = check_surjectivity(t, r, r, true, true);
    rep.add("surjective", surj.surjective(), "restriction of W~-invariants is surjective");
    return rep;
  }

  // h = a + a with a the diagonal; W(g,h) = W x W
  const std::size_t limit = 2'000'000;
  require(wt.order() * wt.order() <= limit, "product group too large to enumerate");
  auto prod_w = product_group(w, w);
  auto prod_wt = product_group(wt, wt);
  auto diag = EmbeddedSubspace::diagonal(amb);
  auto img_w = restricted_image(prod_w, diag, t, r);
  auto img_wt = restricted_image(prod_wt, diag, t, r);
  rep.add("image-W", compare_groups(img_w.image, w) == GroupRelation::Equal,
          "diagonal stabilizer of W x W restricts onto W(g,a)",
          {{"product_order", prod_w.order()}, {"stabilizer_order", img_w.stabilizer_order},
           {"image_order", img_w.image.order()}});
  rep.add("image-Wtilde", compare_groups(img_wt.image, wt) == GroupRelation::Equal,
          "diagonal stabilizer of W~ x W~ restricts onto W~(g,a)",
          {{"product_order", prod_wt.order()}, {"stabilizer_order", img_wt.stabilizer_order},
           {"image_order", img_wt.image.order()}});

  // q (x) 1 restricted to the diagonal is q
  std::vector<SignedPermutation> gens;
  for (const auto& g : weyl_generators(rs, true)) {
    gens.push_back(SignedPermutation::direct_sum(g, SignedPermutation::identity(amb)));
    gens.push_back(SignedPermutation::direct_sum(SignedPermutation::identity(amb), g));
  }
  std::vector<RationalVector> m(2 * amb, RationalVector(amb, 0));
  for (int i = 0; i < amb; ++i) m[i][i] = m[amb + i][i] = 1;
  for (const auto& [name, qpoly] : extended_invariant_generators(t, r)) {
    auto lifted = embed_poly(qpoly, 2 * amb);
    bool inv = is_invariant(std::span<const SignedPermutation>(gens), lifted);
    bool back = equal_on_cartan(t, linear_substitute(lifted, m, amb), qpoly);
    rep.add("preimage:" + name, inv && back, name + " (x) 1 restricts to " + name,
            {{"invariant", inv}, {"restricts", back}});
  }
  return rep;
}

}  // namespace weylres
