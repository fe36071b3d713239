#include <catch_amalgamated.hpp>

#include "weylres/symmetric_spaces.hpp"

using namespace weylres;

namespace {

// Dim M and Rank M columns of the classification table, typed in directly.
int table_dim(const SpaceDescriptor& s) {
  const int j = s.j, p = s.p, q = s.q;
  switch (s.family) {
    case Family::AComplex: return j * j - 1;
    case Family::BComplex: return 2 * j * j + j;
    case Family::DComplex: return 2 * j * j - j;
    case Family::CComplex: return 2 * j * j + j;
    case Family::AIII: return 2 * p * q;
    case Family::AI: return (j - 1) * (j + 2) / 2;
    case Family::AII: return 2 * j * j - j - 1;
    case Family::BDI: return p * q;
    case Family::DIII: return j * (j - 1);
    case Family::CII: return 4 * p * q;
    case Family::CI: return j * (j + 1);
  }
  return -1;
}

int table_rank(const SpaceDescriptor& s) {
  switch (s.family) {
    case Family::AComplex:
    case Family::AI:
    case Family::AII: return s.j - 1;
    case Family::DIII: return s.j / 2;
    case Family::AIII:
    case Family::BDI:
    case Family::CII: return std::min(s.p, s.q);
    default: return s.j;
  }
}

// The three non-reduced cases, listed explicitly.
bool listed_non_reduced(const SpaceDescriptor& s) {
  if (s.family == Family::AIII || s.family == Family::CII) return std::min(s.p, s.q) < std::max(s.p, s.q);
  if (s.family == Family::DIII) return s.j % 2 == 1;
  return false;
}

}  // namespace

TEST_CASE("lookup examples", "[spaces]") {
  auto a = lookup_space(Family::AIII, 3, 2);
  CHECK(a.rank == 2);
  CHECK(a.dim == 12);
  CHECK(a.g_noncompact == "SU(2,3)");
  auto ci = lookup_space(Family::CI, 3);
  CHECK(ci.rank == 3);
  CHECK(ci.dim == 12);
  auto aii = lookup_space(Family::AII, 2);
  CHECK(aii.rank == 1);
  CHECK(aii.dim == 5);
  CHECK(parse_space("BDI:7,1") == lookup_space(Family::BDI, 7, 1));
  CHECK(parse_space("BDI:1,7").label() == "BDI(7,1)");
  CHECK(parse_space("A-complex:4").rank == 3);
  CHECK_THROWS_AS(parse_space("BDI:7"), PreconditionError);
  CHECK_THROWS_AS(parse_space("EIII:2"), PreconditionError);
  CHECK_THROWS_AS(parse_space("CI"), PreconditionError);
  CHECK_THROWS_AS(lookup_space(Family::BDI, 1, 1), PreconditionError);
  CHECK_THROWS_AS(lookup_space(Family::AI, 1), PreconditionError);
}

TEST_CASE("restricted root data examples", "[spaces]") {
  auto d = restricted_root_data(lookup_space(Family::BDI, 4, 2));
  CHECK(d.sigma_half_type == RootType::B);
  CHECK(d.rank == 2);
  CHECK(d.multiplicities.at("f_i-f_j") == 1);
  CHECK(d.multiplicities.at("f_i+f_j") == 1);
  CHECK(d.multiplicities.at("f_i") == 2);
  CHECK(d.rank + d.multiplicity_sum() == 8);
  CHECK(d.reduced);

  auto a = restricted_root_data(lookup_space(Family::AComplex, 5));
  CHECK(a.sigma_half_type == RootType::A);
  CHECK(a.rank + a.multiplicity_sum() == 24);

  auto dd = restricted_root_data(lookup_space(Family::BDI, 5, 5));
  CHECK(dd.sigma_half_type == RootType::D);
  CHECK(dd.rank == 5);

  auto bc = restricted_root_data(lookup_space(Family::AIII, 2, 5));
  CHECK(bc.sigma_half_type == RootType::B);
  CHECK_FALSE(bc.reduced);
  CHECK(bc.multiplicities.at("f_i") == 6);
  CHECK(bc.multiplicities.at("2f_i") == 1);
}

TEST_CASE("rho for small cases", "[spaces]") {
  // BDI(4,2): rho = 1/2 (f1 + f2 + (f2-f1) + (f2+f1)) + 1/2 (f1 + f2) from m(f_i) = 2
  auto d = restricted_root_data(lookup_space(Family::BDI, 4, 2));
  CHECK(d.rho == RationalVector{1, 2});
  // hyperbolic space SO(k,1)/SO(k): rho = (k-1)/2
  for (int k = 2; k <= 12; ++k)
    CHECK(restricted_root_data(lookup_space(Family::BDI, k, 1)).rho == RationalVector{make_rational(k - 1, 2)});
  // SL(3,R): rho = (-1, 0, 1)
  CHECK(restricted_root_data(lookup_space(Family::AI, 3)).rho == RationalVector{-1, 0, 1});
}

TEST_CASE("master consistency over the whole table", "[spaces][property]") {
  auto spaces = all_spaces(8);
  CHECK(spaces.size() > 100);
  for (const auto& s : spaces) {
    INFO(s.label());
    CHECK(s.dim == table_dim(s));
    CHECK(s.rank == table_rank(s));
    auto d = restricted_root_data(s);
    CHECK(d.rank + d.multiplicity_sum() == table_dim(s));
    CHECK(d.rank == table_rank(s));
  }
}

TEST_CASE("non-reduced flags match the listed cases", "[spaces][property]") {
  for (const auto& s : all_spaces(8)) {
    INFO(s.label());
    CHECK(restricted_root_data(s).reduced == !listed_non_reduced(s));
  }
}

TEST_CASE("type D only for complex D and split BDI(p,p)", "[spaces][property]") {
  for (const auto& s : all_spaces(8)) {
    INFO(s.label());
    bool expected = s.family == Family::DComplex || (s.family == Family::BDI && s.p == s.q);
    CHECK((restricted_root_data(s).sigma_half_type == RootType::D) == expected);
  }
}

TEST_CASE("rho is dominant", "[spaces][property]") {
  for (const auto& s : all_spaces(8)) {
    auto d = restricted_root_data(s);
    auto rs = build_root_system(d.sigma_half_type, d.rank, 8);
    INFO(s.label());
    for (const auto& a : rs.simple_roots) CHECK(dot(d.rho, a) >= 0);
  }
}

TEST_CASE("propagation", "[spaces]") {
  auto small = lookup_space(Family::BDI, 5, 2);
  auto big = lookup_space(Family::BDI, 7, 3);
  auto r = check_propagation(big, small);
  CHECK(r.pass());
  CHECK(r.claims[0].detail["rule"] == "left extension B2 -> B3");
  CHECK_FALSE(check_propagation(small, big).pass());

  CHECK(check_propagation(big, big).pass());
  CHECK(check_propagation(big, big).claims[0].detail["rule"] == "identical spaces");

  // SL(n,R)/SO(n) sits in SL(k,C)/SU(k)
  CHECK(check_propagation(lookup_space(Family::AComplex, 5), lookup_space(Family::AI, 4)).pass());
  // AIII(3,3) has Sigma_1/2 of type C, so it does not extend AI(4)
  CHECK_FALSE(check_propagation(lookup_space(Family::AIII, 3, 3), lookup_space(Family::AI, 4)).pass());
  // BC into B is decided on Sigma_1/2
  CHECK(check_propagation(lookup_space(Family::BDI, 6, 3), lookup_space(Family::AIII, 2, 3)).pass());
  // same Sigma_1/2 but the smaller space cannot contain the larger one
  auto down = check_propagation(lookup_space(Family::BDI, 4, 1), lookup_space(Family::BDI, 6, 1));
  CHECK_FALSE(down.pass());
  CHECK(down.claims[0].detail["rule"] == "dimension decreases: dim 4 < 6");
}

TEST_CASE("propagation of products", "[spaces]") {
  ProductSpace k{lookup_space(Family::CI, 4), lookup_space(Family::BDI, 7, 3)};
  ProductSpace n{lookup_space(Family::BDI, 5, 2), lookup_space(Family::CI, 2)};
  CHECK(check_propagation(k, n).pass());
  ProductSpace n2{lookup_space(Family::BDI, 5, 2), lookup_space(Family::BDI, 4, 2)};
  CHECK_FALSE(check_propagation(k, n2).pass());
  CHECK_FALSE(check_propagation(ProductSpace{lookup_space(Family::CI, 4)}, n).pass());
}

TEST_CASE("restriction theorem for propagating spaces", "[spaces][theorems]") {
  auto r = verify_theorem_admext_gk(lookup_space(Family::BDI, 6, 3), lookup_space(Family::BDI, 4, 2));
  CHECK(r.pass());
  CHECK(r.find("1-image") != nullptr);

  auto d = verify_theorem_admext_gk(lookup_space(Family::BDI, 6, 6), lookup_space(Family::BDI, 5, 5));
  CHECK(d.pass());
  CHECK(d.find("2-strict")->pass);
  CHECK(d.find("2-pfaffian-obstruction")->pass);

  auto same = lookup_space(Family::CI, 3);
  CHECK(verify_theorem_admext_gk(same, same).pass());

  // rank-one chains
  CHECK(verify_theorem_admext_gk(lookup_space(Family::BDI, 9, 1), lookup_space(Family::BDI, 4, 1)).pass());
  CHECK_THROWS_AS(verify_theorem_admext_gk(lookup_space(Family::BDI, 4, 2), lookup_space(Family::BDI, 6, 3)),
                  PreconditionError);
}

TEST_CASE("IhIa for split spaces", "[spaces][ihia]") {
  for (auto s : {lookup_space(Family::AI, 4), lookup_space(Family::CI, 3), lookup_space(Family::BDI, 4, 4),
                 lookup_space(Family::BDI, 5, 4), lookup_space(Family::BDI, 2, 1)}) {
    INFO(s.label());
    auto r = verify_theorem_ihia(s);
    CHECK(r.pass());
    CHECK(r.subject["case"] == "split");
  }
}

TEST_CASE("IhIa for complex spaces", "[spaces][ihia]") {
  // j = 4 is S_4 x S_4 with 576 elements, restricting onto S_4
  auto a4 = verify_theorem_ihia(lookup_space(Family::AComplex, 4));
  CHECK(a4.pass());
  CHECK(a4.find("image-W")->detail["product_order"] == 576);
  CHECK(a4.find("image-W")->detail["image_order"] == 24);
  auto a3 = verify_theorem_ihia(lookup_space(Family::AComplex, 3));
  CHECK(a3.find("image-W")->detail["image_order"] == 6);

  auto d4 = verify_theorem_ihia(lookup_space(Family::DComplex, 4));
  CHECK(d4.pass());
  CHECK(d4.find("image-Wtilde")->detail["image_order"] == 384);
  for (int j = 1; j <= 3; ++j) {
    CHECK(verify_theorem_ihia(lookup_space(Family::BComplex, j)).pass());
    CHECK(verify_theorem_ihia(lookup_space(Family::CComplex, j)).pass());
  }
}

TEST_CASE("IhIa out of scope", "[spaces][ihia]") {
  CHECK_THROWS_AS(verify_theorem_ihia(lookup_space(Family::AIII, 3, 2)), OutOfScopeError);
  CHECK_THROWS_AS(verify_theorem_ihia(lookup_space(Family::BDI, 7, 3)), OutOfScopeError);
  CHECK_THROWS_AS(verify_theorem_ihia(lookup_space(Family::CII, 2, 2)), OutOfScopeError);
}

TEST_CASE("space JSON", "[spaces][json]") {
  auto s = lookup_space(Family::BDI, 4, 2);
  auto j = to_json(s);
  CHECK(j["family"] == "BDI");
  CHECK(j["p"] == 4);
  CHECK(j["dim"] == 8);
  auto d = to_json(restricted_root_data(s));
  CHECK(d["sigma_half"]["type"] == "B");
  CHECK(d["multiplicities"]["f_i"] == 2);
  CHECK(d["rho"] == nlohmann::json::array({1, 2}));
}
