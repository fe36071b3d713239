#pragma once

// Generators of the Weyl group invariants read off from the characteristic
// polynomial F_k(t, X) = det(t + X), and the identities relating them under
// restriction from rank k to rank n.
//
//   A_k:  F = prod_{j<=k+1} (t + x_j),     p_{k,nu} = coeff of t^{nu-1}
//   B_k:  F = t prod_j (t^2 - x_j^2),      p_{k,nu} = coeff of t^{2nu-1}
//   C_k:  F = prod_j (t^2 - x_j^2),        p_{k,nu} = coeff of t^{2(nu-1)}
//   D_k:  as C_k for nu >= 2; p_{k,1} is the Pfaffian.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "group_table.hpp"
#include "polynomial.hpp"
#include "report.hpp"
#include "root_system.hpp"

namespace weylres {

// Sign of the Pfaffian x_1...x_k. Only even k has a sign fixed by the
// (-1)^{k/2} convention; odd k uses the floor.
inline int pfaffian_sign(int k) { return (k / 2) % 2 == 0 ? 1 : -1; }

struct GeneratorSet {
  RootType type = RootType::A;
  int rank = 0;
  int num_vars = 0;
  std::vector<Polynomial> generators;  // p_{k,1}, ...
  std::vector<Polynomial> char_poly;   // coefficient of t^m at index m
  Polynomial determinant_term;         // D only: the t^0 coefficient

  const Polynomial& p(int nu) const { return generators.at(nu - 1); }
  int count() const { return static_cast<int>(generators.size()); }
};

inline int expected_degree(RootType type, int k, int nu) {
  switch (type) {
    case RootType::A: return k + 2 - nu;
    case RootType::B:
    case RootType::C: return 2 * (k - nu + 1);
    case RootType::D: return nu == 1 ? k : 2 * (k - nu + 1);
  }
  return -1;
}

namespace detail {

using TPoly = std::vector<Polynomial>;  // coefficients in t

inline TPoly multiply(const TPoly& a, const TPoly& b, int vars) {
  TPoly out(a.size() + b.size() - 1, Polynomial(vars));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      if (!a[i].is_zero() && !b[j].is_zero()) out[i + j] += a[i] * b[j];
  return out;
}

}  // namespace detail

inline GeneratorSet char_poly_generators(RootType type, int rank) {
  require(rank >= construct_min_rank(type), "rank below the minimum for type " + type_name(type));
  require(rank <= kDefaultRankCap, "rank above the cap");
  GeneratorSet g;
  g.type = type;
  g.rank = rank;
  g.num_vars = ambient_dim(type, rank);
  const int s = g.num_vars;

  detail::TPoly f{Polynomial::constant(s, 1)};
  if (type == RootType::A) {
    for (int j = 1; j <= s; ++j) f = detail::multiply(f, {Polynomial::x(s, j), Polynomial::constant(s, 1)}, s);
  } else {
    if (type == RootType::B) f = detail::multiply(f, {Polynomial(s), Polynomial::constant(s, 1)}, s);
    for (int j = 1; j <= s; ++j) {
      auto xj = Polynomial::x(s, j);
      f = detail::multiply(f, {-(xj * xj), Polynomial(s), Polynomial::constant(s, 1)}, s);
    }
  }
  g.char_poly = f;

  switch (type) {
    case RootType::A:
      for (int nu = 1; nu <= rank + 1; ++nu) g.generators.push_back(f[nu - 1]);
      break;
    case RootType::B:
      for (int nu = 1; nu <= rank; ++nu) g.generators.push_back(f[2 * nu - 1]);
      break;
    case RootType::C:
      for (int nu = 1; nu <= rank; ++nu) g.generators.push_back(f[2 * (nu - 1)]);
      break;
    case RootType::D: {
      Exponent ones(s, 1);
      Polynomial pf = Polynomial::monomial(ones, pfaffian_sign(rank));
      g.determinant_term = f[0];
      // det(X) = prod(-x_j^2) = (-1)^k Pf^2
      Polynomial expected = pf * pf;
      if (rank % 2) expected = -expected;
      if (!(g.determinant_term == expected))
        throw std::logic_error("Pfaffian does not square to the determinant term");
      g.generators.push_back(pf);
      for (int nu = 2; nu <= rank; ++nu) g.generators.push_back(f[2 * (nu - 1)]);
      break;
    }
  }
  return g;
}

// Equality as functions on the Cartan subspace (trace zero for type A).
inline bool equal_on_cartan(RootType type, const Polynomial& a, const Polynomial& b) {
  if (type != RootType::A) return a == b;
  return reduce_trace_zero(a) == reduce_trace_zero(b);
}

inline bool is_zero_on_cartan(RootType type, const Polynomial& a) {
  return type == RootType::A ? reduce_trace_zero(a).is_zero() : a.is_zero();
}

// Number of coordinates kept when restricting to the rank-n subalgebra.
inline int restricted_vars(RootType type, int n) { return ambient_dim(type, n); }

inline void require_rank_pair(RootType type, int k, int n, bool allow_degenerate = false) {
  int lo = allow_degenerate ? construct_min_rank(type) : diagram_min_rank(type);
  require(n >= lo, "rank n=" + std::to_string(n) + " below the bound " + std::to_string(lo) +
                       " for type " + type_name(type));
  require(k >= n, "rank k must be at least n");
  require(k <= kDefaultRankCap, "rank k above the cap");
}

inline nlohmann::json rank_subject(RootType type, int k, int n) {
  return {{"type", type_name(type)}, {"k", k}, {"n", n}};
}

// Label of the D-type t^0 coefficient of F_n, i.e. (-1)^n p_{n,1}^2.
inline std::string determinant_label(int n) {
  return std::string(n % 2 ? "-" : "") + label("p", n, 1) + "^2";
}

inline Report verify_restriction_identities(RootType type, int k, int n,
                                            bool allow_degenerate = false) {
  require_rank_pair(type, k, n, allow_degenerate);
  auto big = char_poly_generators(type, k);
  auto small = char_poly_generators(type, n);
  const int m = restricted_vars(type, n);
  Report rep;
  rep.theorem = "restriction-identities";
  rep.subject = rank_subject(type, k, n);

  for (int nu = 1; nu <= big.count(); ++nu) {
    Polynomial r = restrict_poly(big.p(nu), m);
    std::string lhs = label("p", k, nu) + "|";
    nlohmann::json detail{{"nu", nu}, {"restricted", r.to_string()}};
    if (nu <= k - n) {
      rep.add("nu=" + std::to_string(nu), is_zero_on_cartan(type, r), lhs + " = 0", detail);
    } else if (type == RootType::D && k > n && nu == k - n + 1) {
      rep.add("nu=" + std::to_string(nu), r == small.determinant_term,
              lhs + " = " + determinant_label(n), detail);
    } else {
      int mu = nu + n - k;
      rep.add("nu=" + std::to_string(nu), equal_on_cartan(type, r, small.p(mu)),
              lhs + " = " + label("p", n, mu), detail);
    }
  }
  return rep;
}

struct Witness {
  std::string target;
  std::string preimage;
  Polynomial target_poly;
  Polynomial preimage_poly;
  bool restricts_correctly = false;
  bool invariant = false;  // preimage and target invariant under their groups
  bool verified() const { return restricts_correctly && invariant; }
};

// Non-membership of the Pfaffian p_{n,1} in the image of restriction. Every
// restricted generator has only even exponents, so everything in the algebra
// they generate does too, while p_{n,1} = +-x_1...x_n has odd exponents.
struct Obstruction {
  std::string target;
  bool restricted_generators_even = false;
  bool products_even = false;  // spot check on pairwise products
  bool target_has_odd_exponent = false;
  bool certified() const {
    return restricted_generators_even && products_even && target_has_odd_exponent;
  }
};

struct SurjectivityReport {
  RootType type = RootType::A;
  int k = 0;
  int n = 0;
  bool extended = false;
  std::vector<Witness> witnesses;
  std::optional<Obstruction> obstruction;

  bool surjective() const {
    if (obstruction) return false;
    for (const auto& w : witnesses)
      if (!w.verified()) return false;
    return true;
  }
};

// Unlike the theorem checks, this accepts target ranks below the diagram
// bound (e.g. C_2), which are still honest root systems.
inline SurjectivityReport check_surjectivity(RootType type, int k, int n, bool extended,
                                             bool allow_degenerate = true) {
  require_rank_pair(type, k, n, allow_degenerate);
  auto big = char_poly_generators(type, k);
  auto small = char_poly_generators(type, n);
  const auto gens_k = weyl_generators(build_root_system(type, k), extended);
  const auto gens_n = weyl_generators(build_root_system(type, n), extended);
  const int m = restricted_vars(type, n);

  SurjectivityReport rep{type, k, n, extended, {}, std::nullopt};
  auto witness = [&](std::string target, const Polynomial& tp, std::string pre, const Polynomial& pp) {
    Witness w{std::move(target), std::move(pre), tp, pp, false, false};
    w.restricts_correctly = equal_on_cartan(type, restrict_poly(pp, m), tp);
    w.invariant = is_invariant(std::span<const SignedPermutation>(gens_k), pp) &&
                  is_invariant(std::span<const SignedPermutation>(gens_n), tp);
    rep.witnesses.push_back(std::move(w));
  };

  for (int mu = 1; mu <= small.count(); ++mu) {
    int nu = mu + k - n;
    if (type == RootType::D && mu == 1) {
      if (extended) {
        if (k == n)
          witness(determinant_label(n), small.determinant_term, determinant_label(k), big.determinant_term);
        else
          witness(determinant_label(n), small.determinant_term, label("p", k, nu), big.p(nu));
      } else if (k == n) {
        witness(label("p", n, 1), small.p(1), label("p", k, 1), big.p(1));
      } else {
        Obstruction ob;
        ob.target = label("p", n, 1);
        std::vector<Polynomial> restricted;
        for (const auto& p : big.generators) restricted.push_back(restrict_poly(p, m));
        ob.restricted_generators_even = std::all_of(
            restricted.begin(), restricted.end(), [](const Polynomial& p) { return p.all_exponents_even(); });
        ob.products_even = true;
        for (std::size_t i = 0; i < restricted.size(); ++i)
          for (std::size_t j = i; j < restricted.size(); ++j)
            if (!(restricted[i] * restricted[j]).all_exponents_even()) ob.products_even = false;
        ob.target_has_odd_exponent = !small.p(1).all_exponents_even();
        rep.obstruction = ob;
      }
      continue;
    }
    witness(label("p", n, mu), small.p(mu), label("p", k, nu), big.p(nu));
  }
  return rep;
}

inline void append_claims(Report& rep, const SurjectivityReport& s, const std::string& prefix) {
  for (const auto& w : s.witnesses)
    rep.add(prefix + "witness:" + w.target, w.verified(), w.preimage + "| = " + w.target,
            {{"witness", w.preimage},
             {"preimage", w.preimage_poly.to_string()},
             {"target_poly", w.target_poly.to_string()}});
  if (s.obstruction) {
    const auto& o = *s.obstruction;
    rep.add(prefix + "obstruction:" + o.target, o.certified(),
            o.target + " is not a restriction of an invariant",
            {{"restricted_generators_even", o.restricted_generators_even},
             {"products_even", o.products_even},
             {"target_has_odd_exponent", o.target_has_odd_exponent}});
  }
}

inline nlohmann::json to_json(const SurjectivityReport& s) {
  Report r;
  r.theorem = "surjectivity";
  r.subject = rank_subject(s.type, s.k, s.n);
  r.subject["extended"] = s.extended;
  append_claims(r, s, "");
  auto j = to_json(r);
  j["surjective"] = s.surjective();
  return j;
}

// Rank of the Jacobian of the given polynomials with respect to the first
// `vars` variables at a rational point.
inline int jacobian_rank(const std::vector<Polynomial>& polys, int vars, const RationalVector& point) {
  std::vector<RationalVector> rows;
  for (const auto& p : polys) {
    RationalVector row;
    for (int j = 1; j <= vars; ++j) row.push_back(p.partial(j).evaluate(point));
    rows.push_back(row);
  }
  int rank = 0;
  for (int c = 0; c < vars; ++c) {
    int piv = rank;
    while (piv < static_cast<int>(rows.size()) && rows[piv][c] == 0) ++piv;
    if (piv == static_cast<int>(rows.size())) continue;
    std::swap(rows[piv], rows[rank]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (static_cast<int>(r) == rank || rows[r][c] == 0) continue;
      Rational f = rows[r][c] / rows[rank][c];
      for (int cc = c; cc < vars; ++cc) rows[r][cc] -= f * rows[rank][cc];
    }
    ++rank;
  }
  return rank;
}

// The k generators that are nonzero on the Cartan subspace, as functions of
// its first k coordinates (type A: x_{k+1} eliminated).
inline std::vector<Polynomial> cartan_generators(const GeneratorSet& g) {
  std::vector<Polynomial> out;
  for (int nu = 1; nu <= g.rank; ++nu)
    out.push_back(g.type == RootType::A ? reduce_trace_zero(g.p(nu)) : g.p(nu));
  return out;
}

// Reynolds projection of a single monomial, accumulated with integer counts.
inline Polynomial reynolds_monomial(const GroupTable& g, const Exponent& e) {
  std::map<Exponent, long> acc;
  Exponent f(e.size());
  for (const auto& w : g.elements) {
    int sign = 1;
    for (int i = 0; i < w.size(); ++i) {
      f[w.image(i)] = e[i];
      if (w.sign(i) < 0 && (e[i] & 1)) sign = -sign;
    }
    acc[f] += sign;
  }
  Polynomial out(static_cast<int>(e.size()));
  for (const auto& [x, c] : acc)
    if (c) out.add_term(x, make_rational(c, static_cast<long>(g.order())));
  return out;
}

// Exponent vectors with nonincreasing entries summing to d.
inline std::vector<Exponent> partition_exponents(int vars, int d) {
  std::vector<Exponent> out;
  Exponent e(vars, 0);
  auto rec = [&](auto&& self, int pos, int left, int cap) -> void {
    if (pos == vars) {
      if (left == 0) out.push_back(e);
      return;
    }
    for (int a = std::min(left, cap); a >= 0; --a) {
      e[pos] = a;
      self(self, pos + 1, left - a, a);
    }
    e[pos] = 0;
  };
  rec(rec, 0, d, d);
  return out;
}

struct EvenSubalgebraCheck {
  int k = 0;
  int max_degree = 0;
  int monomials_checked = 0;
  std::optional<Exponent> failure;
  bool pass() const { return !failure; }
};

// For type D_k: the W~-invariants are exactly the W-invariants with only
// even exponents. Checked degree by degree on Reynolds projections of
// monomials; since both groups contain all coordinate permutations, sorted
// exponent vectors suffice.
inline EvenSubalgebraCheck check_even_subalgebra(int k, int max_degree = -1) {
  auto rs = build_root_system(RootType::D, k);
  auto w = generate_weyl(rs);
  auto wt = generate_extended(rs);
  EvenSubalgebraCheck out;
  out.k = k;
  out.max_degree = max_degree < 0 ? 2 * k : max_degree;
  for (int d = 0; d <= out.max_degree && !out.failure; ++d) {
    for (const auto& e : partition_exponents(k, d)) {
      ++out.monomials_checked;
      bool even = std::all_of(e.begin(), e.end(), [](int a) { return a % 2 == 0; });
      Polynomial rw = reynolds_monomial(w, e);
      Polynomial rt = reynolds_monomial(wt, e);
      bool ok;
      if (even) {
        ok = rt == rw && rw.all_exponents_even();
      } else {
        ok = rt.is_zero();
        for (const auto& [x, c] : rw.terms())
          if (std::all_of(x.begin(), x.end(), [](int a) { return a % 2 == 0; })) ok = false;
      }
      if (!ok) {
        out.failure = e;
        break;
      }
    }
  }
  return out;
}

inline nlohmann::json to_json(const GeneratorSet& g) {
  nlohmann::json gens = nlohmann::json::array();
  for (int nu = 1; nu <= g.count(); ++nu)
    gens.push_back({{"name", label("p", g.rank, nu)},
                    {"degree", g.p(nu).degree()},
                    {"poly", g.p(nu).to_string()},
                    {"terms", to_json(g.p(nu))["terms"]}});
  nlohmann::json cp = nlohmann::json::array();
  for (const auto& c : g.char_poly) cp.push_back(c.to_string());
  nlohmann::json j{{"type", type_name(g.type)}, {"rank", g.rank}, {"vars", g.num_vars},
                   {"generators", gens}, {"char_poly", cp}};
  if (g.type == RootType::D) j["determinant_term"] = g.determinant_term.to_string();
  return j;
}

}  // namespace weylres
