#include <catch_amalgamated.hpp>

#include <random>

#include "weylres/invariants.hpp"

using namespace weylres;

namespace {

const RootType kTypes[] = {RootType::A, RootType::B, RootType::C, RootType::D};

Polynomial mono(std::initializer_list<int> e, long c = 1) {
  return Polynomial::monomial(Exponent(e), make_rational(c));
}

RationalVector random_point(std::mt19937& rng, int n) {
  RationalVector v(n);
  for (auto& x : v) x = make_rational(static_cast<long>(rng() % 21) - 10, 1 + rng() % 5);
  return v;
}

// Elementary symmetric polynomial by subset enumeration.
Polynomial elementary(int vars, int d) {
  Polynomial out(vars);
  for (unsigned mask = 0; mask < (1u << vars); ++mask) {
    if (__builtin_popcount(mask) != d) continue;
    Exponent e(vars, 0);
    for (int i = 0; i < vars; ++i)
      if (mask >> i & 1) e[i] = 1;
    out.add_term(e, 1);
  }
  return out;
}

// det(t + X) evaluated directly from its product form.
Rational char_poly_value(RootType type, const RationalVector& x, const Rational& t) {
  Rational v = 1;
  if (type == RootType::A) {
    for (const auto& xi : x) v *= t + xi;
    return v;
  }
  if (type == RootType::B) v = t;
  for (const auto& xi : x) v *= t * t - xi * xi;
  return v;
}

}  // namespace

TEST_CASE("B2 generators", "[invariants]") {
  auto g = char_poly_generators(RootType::B, 2);
  REQUIRE(g.count() == 2);
  CHECK(g.p(2) == -(mono({2, 0}) + mono({0, 2})));
  CHECK(g.p(1) == mono({2, 2}));
}

TEST_CASE("A2 generators are elementary symmetric", "[invariants]") {
  auto g = char_poly_generators(RootType::A, 2);
  REQUIRE(g.count() == 3);
  CHECK(g.p(1) == elementary(3, 3));
  CHECK(g.p(2) == elementary(3, 2));
  CHECK(g.p(3) == elementary(3, 1));
  CHECK(reduce_trace_zero(g.p(3)).is_zero());
  for (int k = 1; k <= 6; ++k) {
    auto gk = char_poly_generators(RootType::A, k);
    for (int nu = 1; nu <= k + 1; ++nu) CHECK(gk.p(nu) == elementary(k + 1, k + 2 - nu));
  }
}

TEST_CASE("D4 Pfaffian", "[invariants]") {
  auto g = char_poly_generators(RootType::D, 4);
  CHECK(g.p(1) == mono({1, 1, 1, 1}));
  CHECK(g.p(1) * g.p(1) == g.determinant_term);
  CHECK(g.determinant_term == mono({2, 2, 2, 2}));
  CHECK(pfaffian_sign(4) == 1);
  CHECK(pfaffian_sign(2) == -1);
  CHECK(pfaffian_sign(6) == -1);
  // odd rank: the t^0 coefficient is minus the square
  auto g5 = char_poly_generators(RootType::D, 5);
  CHECK(g5.determinant_term == -(g5.p(1) * g5.p(1)));
}

TEST_CASE("expansion agrees with the product at random points", "[invariants][property]") {
  std::mt19937 rng(21);
  for (RootType t : kTypes)
    for (int k = construct_min_rank(t); k <= 7; ++k) {
      auto g = char_poly_generators(t, k);
      for (int trial = 0; trial < 5; ++trial) {
        auto x = random_point(rng, g.num_vars);
        Rational tt = make_rational(static_cast<long>(rng() % 13) - 6, 1 + rng() % 3);
        Rational sum = 0, tp = 1;
        for (const auto& c : g.char_poly) {
          sum += c.evaluate(x) * tp;
          tp *= tt;
        }
        INFO(type_name(t) << k);
        CHECK(sum == char_poly_value(t, x, tt));
      }
    }
}

TEST_CASE("generators are invariant", "[invariants][property]") {
  for (RootType t : kTypes)
    for (int k = construct_min_rank(t); k <= 7; ++k) {
      auto rs = build_root_system(t, k);
      auto w = weyl_generators(rs, false);
      auto wt = weyl_generators(rs, true);
      auto g = char_poly_generators(t, k);
      INFO(type_name(t) << k);
      for (int nu = 1; nu <= g.count(); ++nu) {
        CHECK(is_invariant(std::span<const SignedPermutation>(w), g.p(nu)));
        bool pf = t == RootType::D && nu == 1;
        CHECK(is_invariant(std::span<const SignedPermutation>(wt), g.p(nu)) == !pf);
      }
      if (t == RootType::D)
        CHECK(is_invariant(std::span<const SignedPermutation>(wt), g.determinant_term));
    }
  // full tables for small ranks
  for (RootType t : kTypes) {
    int k = std::max(3, construct_min_rank(t));
    auto tab = generate_weyl(build_root_system(t, k));
    auto g = char_poly_generators(t, k);
    for (const auto& p : g.generators) CHECK(is_invariant(tab, p, true));
  }
}

TEST_CASE("degree ladder", "[invariants][property]") {
  for (RootType t : kTypes)
    for (int k = construct_min_rank(t); k <= 7; ++k) {
      auto g = char_poly_generators(t, k);
      INFO(type_name(t) << k);
      CHECK(g.count() == (t == RootType::A ? k + 1 : k));
      for (int nu = 1; nu <= g.count(); ++nu) {
        CHECK(g.p(nu).degree() == expected_degree(t, k, nu));
        CHECK(g.p(nu).is_homogeneous());
      }
    }
  CHECK(expected_degree(RootType::D, 5, 1) == 5);
  CHECK(expected_degree(RootType::A, 3, 1) == 4);
}

TEST_CASE("restriction identities: B(3,2)", "[invariants]") {
  auto rep = verify_restriction_identities(RootType::B, 3, 2);
  CHECK(rep.pass());
  auto b3 = char_poly_generators(RootType::B, 3);
  auto b2 = char_poly_generators(RootType::B, 2);
  CHECK(restrict_poly(b3.p(3), 2) == b2.p(2));
  CHECK(restrict_poly(b3.p(2), 2) == b2.p(1));
  CHECK(restrict_poly(b3.p(1), 2).is_zero());
  CHECK(rep.find("nu=1")->statement == "p_{3,1}| = 0");
}

TEST_CASE("restriction identities: D(5,4)", "[invariants]") {
  auto rep = verify_restriction_identities(RootType::D, 5, 4);
  CHECK(rep.pass());
  auto d5 = char_poly_generators(RootType::D, 5);
  auto d4 = char_poly_generators(RootType::D, 4);
  for (int nu = 3; nu <= 5; ++nu) CHECK(restrict_poly(d5.p(nu), 4) == d4.p(nu - 1));
  CHECK(restrict_poly(d5.p(2), 4) == mono({2, 2, 2, 2}));
  CHECK(restrict_poly(d5.p(1), 4).is_zero());
}

TEST_CASE("restriction identities: equal rank is the identity", "[invariants]") {
  for (RootType t : kTypes) {
    int k = diagram_min_rank(t) + 1;
    auto rep = verify_restriction_identities(t, k, k);
    CHECK(rep.pass());
    CHECK(rep.claims.size() == static_cast<std::size_t>(t == RootType::A ? k + 1 : k));
  }
}

TEST_CASE("restriction identities for all ranks up to 7", "[invariants][property]") {
  for (RootType t : kTypes)
    for (int k = diagram_min_rank(t); k <= 7; ++k)
      for (int n = diagram_min_rank(t); n <= k; ++n) {
        INFO(type_name(t) << " " << k << " " << n);
        CHECK(verify_restriction_identities(t, k, n).pass());
      }
  CHECK_THROWS_AS(verify_restriction_identities(RootType::D, 5, 3), PreconditionError);
  CHECK_THROWS_AS(verify_restriction_identities(RootType::B, 2, 3), PreconditionError);
  CHECK(verify_restriction_identities(RootType::D, 5, 3, true).pass());
}

TEST_CASE("surjectivity witnesses", "[invariants]") {
  auto c = check_surjectivity(RootType::C, 4, 2, false);
  CHECK(c.surjective());
  REQUIRE(c.witnesses.size() == 2);
  CHECK(c.witnesses[0].target == "p_{2,1}");
  CHECK(c.witnesses[0].preimage == "p_{4,3}");
  CHECK(c.witnesses[1].preimage == "p_{4,4}");

  auto d = check_surjectivity(RootType::D, 5, 4, false);
  CHECK_FALSE(d.surjective());
  REQUIRE(d.obstruction);
  CHECK(d.obstruction->certified());
  CHECK(d.obstruction->target == "p_{4,1}");

  auto de = check_surjectivity(RootType::D, 5, 4, true);
  CHECK(de.surjective());
  REQUIRE(de.witnesses.size() == 4);
  CHECK(de.witnesses[0].target == "p_{4,1}^2");
  CHECK(de.witnesses[0].preimage == "p_{5,2}");
  for (const auto& w : de.witnesses) CHECK(w.verified());

  // odd target rank: the t^0 coefficient is -p_{5,1}^2
  auto d65 = check_surjectivity(RootType::D, 6, 5, true);
  CHECK(d65.surjective());
  CHECK(d65.witnesses[0].target == "-p_{5,1}^2");
}

TEST_CASE("surjectivity sweep", "[invariants][property]") {
  for (RootType t : kTypes)
    for (int k = diagram_min_rank(t); k <= 7; ++k)
      for (int n = diagram_min_rank(t); n <= k; ++n) {
        INFO(type_name(t) << " " << k << " " << n);
        auto s = check_surjectivity(t, k, n, false);
        bool obstructed = t == RootType::D && k > n;
        CHECK(s.surjective() == !obstructed);
        if (obstructed) CHECK(s.obstruction->certified());
        CHECK(check_surjectivity(t, k, n, true).surjective());
      }
}

TEST_CASE("Jacobian rank at a random point", "[invariants][smoke]") {
  std::mt19937 rng(22);
  for (RootType t : kTypes)
    for (int k = construct_min_rank(t); k <= 6; ++k) {
      auto g = char_poly_generators(t, k);
      RationalVector x(g.num_vars);
      for (auto& v : x) v = make_rational(static_cast<long>(rng() % 2001) - 1000, 1 + rng() % 97);
      INFO(type_name(t) << k);
      CHECK(jacobian_rank(cartan_generators(g), k, x) == k);
    }
}

TEST_CASE("partition exponents", "[invariants]") {
  CHECK(partition_exponents(3, 3).size() == 3);
  CHECK(partition_exponents(2, 4) == std::vector<Exponent>{{4, 0}, {3, 1}, {2, 2}});
  CHECK(partition_exponents(4, 0).size() == 1);
}

TEST_CASE("Reynolds of a monomial matches the generic operator", "[invariants]") {
  auto g = generate_weyl(build_root_system(RootType::D, 4));
  for (const auto& e : partition_exponents(4, 4))
    CHECK(reynolds_monomial(g, e) == reynolds(g, Polynomial::monomial(e)));
}

TEST_CASE("even subalgebra", "[invariants]") {
  for (int k = 4; k <= 5; ++k) {
    auto c = check_even_subalgebra(k);
    CHECK(c.pass());
    CHECK(c.max_degree == 2 * k);
  }
}

TEST_CASE("generator JSON", "[invariants][json]") {
  auto j = to_json(char_poly_generators(RootType::D, 4));
  CHECK(j["generators"].size() == 4);
  CHECK(j["generators"][0]["name"] == "p_{4,1}");
  CHECK(j["generators"][0]["degree"] == 4);
  CHECK(j.contains("determinant_term"));
  auto s = to_json(check_surjectivity(RootType::D, 5, 4, false));
  CHECK(s["surjective"] == false);
  CHECK(s["claims"].back()["id"] == "obstruction:p_{4,1}");
}
