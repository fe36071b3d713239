#pragma once

// The verification matrix run by `weylres_cli sweep` and the acceptance
// binary. Each criterion counts its cases and records failing ones by name.

#include <array>
#include <random>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "group_table.hpp"
#include "invariants.hpp"
#include "restriction_theorems.hpp"
#include "symmetric_spaces.hpp"
#include "transfer.hpp"

namespace weylres {

struct CriterionResult {
  int id = 0;
  std::string name;
  int cases = 0;
  std::vector<std::string> failures;

  bool pass() const { return failures.empty(); }
  void check(bool ok, const std::string& what) {
    ++cases;
    if (!ok) failures.push_back(what);
  }
};

inline nlohmann::json to_json(const CriterionResult& c) {
  return {{"id", c.id}, {"name", c.name}, {"cases", c.cases},
          {"passed", c.cases - static_cast<int>(c.failures.size())}, {"pass", c.pass()},
          {"failures", c.failures}};
}

namespace sweep_detail {

inline std::string case_name(RootType t, int k, int n) {
  return type_name(t) + "(" + std::to_string(k) + "," + std::to_string(n) + ")";
}

inline const std::array<RootType, 4>& all_types() {
  static const std::array<RootType, 4> t{RootType::A, RootType::B, RootType::C, RootType::D};
  return t;
}

}  // namespace sweep_detail

inline CriterionResult criterion_group_orders(int max_rank) {
  CriterionResult r{1, "Weyl group orders", 0, {}};
  for (RootType t : sweep_detail::all_types())
    for (int k = diagram_min_rank(t); k <= max_rank; ++k) {
      auto rs = build_root_system(t, k);
      mpz_class expected;
      switch (t) {
        case RootType::A: expected = factorial(k + 1); break;
        case RootType::B:
        case RootType::C: expected = pow2(k) * factorial(k); break;
        case RootType::D: expected = pow2(k - 1) * factorial(k); break;
      }
      std::string name = type_name(t) + std::to_string(k);
      r.check(generate_weyl(rs).order() == expected.get_ui(), "|W(" + name + ")|");
      if (t == RootType::D)
        r.check(generate_extended(rs).order() == mpz_class(pow2(k) * factorial(k)).get_ui(), "|W~(" + name + ")|");
    }
  return r;
}

inline CriterionResult criterion_admext_part1(int max_rank) {
  CriterionResult r{2, "AdmExt(1): restricted image and stabilizer order, types A/B/C", 0, {}};
  for (RootType t : {RootType::A, RootType::B, RootType::C})
    for (int k = diagram_min_rank(t) + 1; k <= max_rank; ++k) {
      auto w_k = generate_weyl(build_root_system(t, k));
      for (int n = diagram_min_rank(t); n < k; ++n) {
        auto img = restricted_image(w_k, n);
        auto w_n = generate_weyl(build_root_system(t, n));
        mpz_class stab = t == RootType::A ? mpz_class(factorial(k - n) * factorial(n + 1))
                                          : mpz_class(pow2(k - n) * factorial(k - n) * pow2(n) * factorial(n));
        auto name = sweep_detail::case_name(t, k, n);
        r.check(compare_groups(img.image, w_n) == GroupRelation::Equal, name + " image");
        r.check(img.stabilizer_order == stab.get_ui(), name + " stabilizer order");
      }
    }
  return r;
}

inline std::vector<std::pair<int, int>> default_d_pairs() { return {{5, 4}, {6, 4}, {6, 5}}; }

inline CriterionResult criterion_admext_part2(const std::vector<std::pair<int, int>>& pairs) {
  CriterionResult r{3, "AdmExt(2): strict containment and Pfaffian obstruction for D", 0, {}};
  for (auto [k, n] : pairs) {
    auto name = sweep_detail::case_name(RootType::D, k, n);
    auto img = restricted_image(generate_weyl(build_root_system(RootType::D, k)), n);
    auto w_n = generate_weyl(build_root_system(RootType::D, n));
    r.check(compare_groups(w_n, img.image) == GroupRelation::ProperSubgroup, name + " W_n strictly inside image");
    r.check(compare_groups(img.image, hyperoctahedral(n)) == GroupRelation::Equal, name + " image is hyperoctahedral");
    r.check(img.image.order() == mpz_class(pow2(n) * factorial(n)).get_ui(), name + " image order 2^n n!");
    auto big = char_poly_generators(RootType::D, k);
    bool even = true;
    for (const auto& p : big.generators) even = even && restrict_poly(p, n).all_exponents_even();
    r.check(even, name + " restricted generators all-even");
    auto s = check_surjectivity(RootType::D, k, n, false);
    r.check(s.obstruction && s.obstruction->certified(), name + " obstruction certificate");
  }
  return r;
}

inline CriterionResult criterion_admext_part34(const std::vector<std::pair<int, int>>& pairs) {
  CriterionResult r{4, "AdmExt(3),(4): extended group and W~-invariants for D", 0, {}};
  for (auto [k, n] : pairs) {
    auto name = sweep_detail::case_name(RootType::D, k, n);
    auto rs_k = build_root_system(RootType::D, k);
    auto img = restricted_image(generate_extended(rs_k), n);
    auto wt_n = generate_extended(build_root_system(RootType::D, n));
    r.check(compare_groups(img.image, wt_n) == GroupRelation::Equal, name + " W~ image");
    auto s = check_surjectivity(RootType::D, k, n, true);
    for (const auto& w : s.witnesses) r.check(w.verified(), name + " witness " + w.preimage + " -> " + w.target);
    r.check(!s.obstruction, name + " no obstruction for W~");
  }
  return r;
}

inline CriterionResult criterion_restriction_identities(int max_k) {
  CriterionResult r{5, "restriction identities of the generators", 0, {}};
  for (RootType t : sweep_detail::all_types())
    for (int k = diagram_min_rank(t) + 1; k <= max_k; ++k)
      for (int n = diagram_min_rank(t); n < k; ++n) {
        auto rep = verify_restriction_identities(t, k, n);
        for (const auto& c : rep.claims) r.check(c.pass, sweep_detail::case_name(t, k, n) + " " + c.statement);
        if (t == RootType::D) {
          // p_{n,1}^2 with p_{n,1} = (-1)^{n/2} x_1...x_n read as i^n x_1...x_n
          auto big = char_poly_generators(t, k);
          Polynomial sq = Polynomial::monomial(Exponent(n, 2), n % 2 ? -1 : 1);
          r.check(restrict_poly(big.p(k - n + 1), n) == sq,
                  sweep_detail::case_name(t, k, n) + " D-special identity");
        }
      }
  return r;
}

inline CriterionResult criterion_remark() {
  CriterionResult r{6, "remark: B_4 with alpha_2 removed", 0, {}};
  auto rep = remark_counterexample(RootType::B, 4, 2);
  for (const auto& c : rep.claims) r.check(c.pass, c.id);
  const Claim* f = rep.find("factor-is-type-A");
  r.check(f && f->detail["factor"] == "A2", "factor is A2");
  return r;
}

inline CriterionResult criterion_ihia(int max_j) {
  CriterionResult r{7, "IhIa: split and complex cases", 0, {}};
  std::vector<SpaceDescriptor> spaces;
  for (int j = 2; j <= max_j + 1; ++j) spaces.push_back(lookup_space(Family::AI, j));
  for (int j = 1; j <= max_j; ++j) spaces.push_back(lookup_space(Family::CI, j));
  for (int p = 2; p <= max_j; ++p) spaces.push_back(lookup_space(Family::BDI, p, p));
  for (int p = 1; p <= max_j; ++p) spaces.push_back(lookup_space(Family::BDI, p + 1, p));
  for (int j = 2; j <= max_j; ++j) spaces.push_back(lookup_space(Family::AComplex, j));
  for (int j = 1; j <= max_j; ++j) {
    spaces.push_back(lookup_space(Family::BComplex, j));
    spaces.push_back(lookup_space(Family::CComplex, j));
  }
  for (int j = 2; j <= max_j; ++j) spaces.push_back(lookup_space(Family::DComplex, j));
  for (const auto& s : spaces) {
    auto rep = verify_theorem_ihia(s);
    for (const auto& c : rep.claims) r.check(c.pass, s.label() + " " + c.id);
  }
  return r;
}

inline CriterionResult criterion_table(int max_param) {
  CriterionResult r{8, "table consistency: rank + sum of multiplicities = dim", 0, {}};
  for (const auto& s : all_spaces(max_param)) {
    const int j = s.j, p = s.p, q = s.q;
    int dim = 0;
    switch (s.family) {
      case Family::AComplex: dim = j * j - 1; break;
      case Family::BComplex:
      case Family::CComplex: dim = 2 * j * j + j; break;
      case Family::DComplex: dim = 2 * j * j - j; break;
      case Family::AIII: dim = 2 * p * q; break;
      case Family::AI: dim = (j - 1) * (j + 2) / 2; break;
      case Family::AII: dim = 2 * j * j - j - 1; break;
      case Family::BDI: dim = p * q; break;
      case Family::DIII: dim = j * (j - 1); break;
      case Family::CII: dim = 4 * p * q; break;
      case Family::CI: dim = j * (j + 1); break;
    }
    auto d = restricted_root_data(s);
    r.check(d.rank + d.multiplicity_sum() == dim && s.dim == dim, s.label());
  }
  return r;
}

inline CriterionResult criterion_non_reduced(int max_param) {
  CriterionResult r{9, "non-reduced restricted root systems", 0, {}};
  for (const auto& s : all_spaces(max_param)) {
    bool listed = ((s.family == Family::AIII || s.family == Family::CII) && s.p != s.q) ||
                  (s.family == Family::DIII && s.j % 2 == 1);
    r.check(restricted_root_data(s).reduced == !listed, s.label());
  }
  return r;
}

// A random polynomial in the W~-invariant generators of a space.
inline OperatorSymbol random_invariant_symbol(std::mt19937& rng, const SpaceDescriptor& s) {
  auto d = restricted_root_data(s);
  auto gens = extended_invariant_generators(d.sigma_half_type, d.rank);
  const int v = symbol_vars(s);
  auto coeff = [&](int range, int den) {
    return make_rational(static_cast<long>(rng() % (2 * range + 1)) - range, 1 + static_cast<long>(rng() % den));
  };
  Polynomial p = Polynomial::constant(v, coeff(3, 3));
  int terms = 1 + static_cast<int>(rng() % 3);
  for (int t = 0; t < terms; ++t) {
    Polynomial m = Polynomial::constant(v, coeff(4, 4));
    int factors = 1 + static_cast<int>(rng() % 2);
    for (int f = 0; f < factors; ++f) m *= gens[rng() % gens.size()].second;
    p += m;
  }
  return make_symbol(s, p);
}

inline CriterionResult criterion_transfer(int max_k, int random_pairs) {
  CriterionResult r{10, "transfer of invariant operators", 0, {}};
  auto hyp = [](int k) { return lookup_space(Family::BDI, k, 1); };
  for (int k = 2; k <= max_k; ++k)
    for (int n = 2; n <= k; ++n) {
      std::string name = hyp(k).label() + "->" + hyp(n).label();
      r.check(transfer_laplacian(hyp(k), hyp(n)).matches, name + " Laplacian (table rho)");
      auto hyperbolic = transfer_laplacian(hyp(k), hyp(n), RhoConvention::Paper);
      r.check(hyperbolic.matches, name + " Laplacian (hyperbolic rho)");
      r.check(hyperbolic.shift == make_rational(k * k - n * n, 4), name + " shift (k^2-n^2)/4");
    }
  for (int k = 1; k <= std::min(max_k, 6); ++k)
    for (int n = 1; n <= k; ++n) {
      auto sk = lookup_space(Family::CI, k), sn = lookup_space(Family::CI, n);
      r.check(transfer_laplacian(sk, sn).matches, sk.label() + "->" + sn.label() + " Laplacian");
    }

  std::mt19937 rng(20240611);
  const std::vector<std::array<SpaceDescriptor, 3>> towers{
      {hyp(9), hyp(6), hyp(3)},
      {lookup_space(Family::CI, 5), lookup_space(Family::CI, 3), lookup_space(Family::CI, 2)},
      {lookup_space(Family::BDI, 6, 6), lookup_space(Family::BDI, 5, 5), lookup_space(Family::BDI, 4, 4)},
      {lookup_space(Family::AComplex, 5), lookup_space(Family::AI, 4), lookup_space(Family::AI, 3)}};
  for (int i = 0; i < random_pairs; ++i) {
    const auto& [k, m, n] = towers[i % towers.size()];
    auto a = random_invariant_symbol(rng, k), b = random_invariant_symbol(rng, k);
    auto ta = gamma_transfer(a, k, n), tb = gamma_transfer(b, k, n);
    std::string name = "pair " + std::to_string(i) + " " + k.label() + "->" + n.label();
    r.check(gamma_transfer(make_symbol(k, a.symbol + b.symbol), k, n).symbol == ta.symbol + tb.symbol, name + " sum");
    r.check(gamma_transfer(make_symbol(k, a.symbol * b.symbol), k, n).symbol == ta.symbol * tb.symbol,
            name + " product");
    r.check(gamma_transfer(gamma_transfer(a, k, m), m, n).symbol == ta.symbol, name + " tower");
  }
  return r;
}

struct SweepOptions {
  int max_rank = 6;
};

inline std::vector<CriterionResult> run_sweep(const SweepOptions& o) {
  require(o.max_rank >= 2 && o.max_rank <= enumeration_cap(), "max rank must lie in [2, enumeration cap]");
  std::vector<std::pair<int, int>> d_pairs;
  for (auto [k, n] : default_d_pairs())
    if (k <= o.max_rank) d_pairs.emplace_back(k, n);
  std::vector<CriterionResult> out;
  out.push_back(criterion_group_orders(o.max_rank));
  out.push_back(criterion_admext_part1(o.max_rank));
  out.push_back(criterion_admext_part2(d_pairs));
  out.push_back(criterion_admext_part34(d_pairs));
  out.push_back(criterion_restriction_identities(std::min(o.max_rank + 1, 7)));
  if (o.max_rank >= 4) out.push_back(criterion_remark());
  out.push_back(criterion_ihia(std::min(o.max_rank, 4)));
  out.push_back(criterion_table(8));
  out.push_back(criterion_non_reduced(8));
  out.push_back(criterion_transfer(12, 100));
  return out;
}

}  // namespace weylres
