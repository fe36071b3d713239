#include <catch_amalgamated.hpp>

#include <random>

#include "weylres/transfer.hpp"

using namespace weylres;

namespace {

SpaceDescriptor hyp(int k) { return lookup_space(Family::BDI, k, 1); }

// Random polynomial in the W~-invariant generators of the space.
OperatorSymbol random_symbol(std::mt19937& rng, const SpaceDescriptor& s) {
  auto d = restricted_root_data(s);
  auto gens = extended_invariant_generators(d.sigma_half_type, d.rank);
  const int v = symbol_vars(s);
  Polynomial p = Polynomial::constant(v, make_rational(static_cast<long>(rng() % 7) - 3, 1 + rng() % 3));
  int terms = 1 + static_cast<int>(rng() % 3);
  for (int t = 0; t < terms; ++t) {
    Polynomial m = Polynomial::constant(v, make_rational(static_cast<long>(rng() % 9) - 4, 1 + rng() % 4));
    int factors = 1 + static_cast<int>(rng() % 2);
    for (int f = 0; f < factors; ++f) m *= gens[rng() % gens.size()].second;
    p += m;
  }
  return make_symbol(s, p);
}

}  // namespace

TEST_CASE("Laplacian symbols", "[transfer]") {
  auto ci2 = lookup_space(Family::CI, 2);
  auto lap = laplacian_symbol(ci2);
  // rho of C_2 with all multiplicities one is (1, 2)
  CHECK(rho_norm2(ci2) == 5);
  CHECK(lap.symbol == Polynomial::monomial({2, 0}) + Polynomial::monomial({0, 2}) - Polynomial::constant(2, 5));

  auto h = laplacian_symbol(hyp(5));
  CHECK(h.symbol == Polynomial::monomial({2}) - Polynomial::constant(1, 4));
  CHECK(laplacian_symbol(hyp(5), RhoConvention::Paper).symbol ==
        Polynomial::monomial({2}) - Polynomial::constant(1, make_rational(25, 4)));

  OperatorSymbol zero = make_symbol(ci2, Polynomial(2));
  CHECK(gamma_transfer(zero, ci2, lookup_space(Family::CI, 1)).symbol.is_zero());
  CHECK_THROWS_AS(make_symbol(ci2, Polynomial::x(2, 1)), PreconditionError);
}

TEST_CASE("transfer of the Laplacian shifts by rho", "[transfer]") {
  for (int k = 2; k <= 12; ++k)
    for (int n = 2; n <= k; ++n) {
      auto t = transfer_laplacian(hyp(k), hyp(n));
      CHECK(t.matches);
      CHECK(t.shift == make_rational((k - 1) * (k - 1) - (n - 1) * (n - 1), 4));
      auto tp = transfer_laplacian(hyp(k), hyp(n), RhoConvention::Paper);
      CHECK(tp.matches);
      CHECK(tp.shift == make_rational(k * k - n * n, 4));
    }
  auto c = transfer_laplacian(lookup_space(Family::CI, 3), lookup_space(Family::CI, 2));
  CHECK(c.matches);
  CHECK(c.shift == 9);
  CHECK(rho_shift(hyp(6), hyp(6)) == 0);
  CHECK_THROWS_AS(rho_shift(lookup_space(Family::CI, 3), lookup_space(Family::CI, 2), RhoConvention::Paper),
                  PreconditionError);
}

TEST_CASE("rho shift diverges along a chain", "[transfer][property]") {
  for (int n = 2; n <= 4; ++n) {
    Rational prev = -1;
    for (int k = n + 1; k <= 12; ++k) {
      Rational s = rho_shift(hyp(k), hyp(n));
      CHECK(s > prev);
      prev = s;
    }
    CHECK(prev > 20);
  }
  Rational prev = -1;
  for (int j = 2; j <= 8; ++j) {
    Rational s = rho_shift(lookup_space(Family::CI, j), lookup_space(Family::CI, 1));
    CHECK(s > prev);
    prev = s;
  }
}

TEST_CASE("transfer is an algebra homomorphism", "[transfer][property]") {
  std::mt19937 rng(31);
  std::vector<std::pair<SpaceDescriptor, SpaceDescriptor>> pairs{
      {hyp(7), hyp(4)},
      {lookup_space(Family::CI, 4), lookup_space(Family::CI, 2)},
      {lookup_space(Family::BDI, 6, 6), lookup_space(Family::BDI, 4, 4)},
      {lookup_space(Family::AComplex, 5), lookup_space(Family::AI, 3)}};
  for (int trial = 0; trial < 100; ++trial) {
    const auto& [sk, sn] = pairs[trial % pairs.size()];
    auto a = random_symbol(rng, sk), b = random_symbol(rng, sk);
    auto ta = gamma_transfer(a, sk, sn), tb = gamma_transfer(b, sk, sn);
    CHECK(gamma_transfer(make_symbol(sk, a.symbol + b.symbol), sk, sn).symbol == ta.symbol + tb.symbol);
    CHECK(gamma_transfer(make_symbol(sk, a.symbol * b.symbol), sk, sn).symbol == ta.symbol * tb.symbol);
  }
  auto one = make_symbol(hyp(7), Polynomial::constant(1, 1));
  CHECK(gamma_transfer(one, hyp(7), hyp(3)).symbol == Polynomial::constant(1, 1));
}

TEST_CASE("transfer composes along towers", "[transfer][property]") {
  std::mt19937 rng(32);
  std::vector<std::array<SpaceDescriptor, 3>> towers{
      {hyp(9), hyp(6), hyp(3)},
      {lookup_space(Family::CI, 5), lookup_space(Family::CI, 3), lookup_space(Family::CI, 2)},
      {lookup_space(Family::BDI, 7, 3), lookup_space(Family::BDI, 5, 2), lookup_space(Family::BDI, 3, 1)}};
  for (int trial = 0; trial < 100; ++trial) {
    const auto& [k, m, n] = towers[trial % towers.size()];
    auto a = random_symbol(rng, k);
    CHECK(gamma_transfer(gamma_transfer(a, k, m), m, n).symbol == gamma_transfer(a, k, n).symbol);
  }
}

TEST_CASE("transfer onto every generator", "[transfer]") {
  for (int n = 4; n <= 5; ++n) {
    auto sk = lookup_space(Family::BDI, 6, 6), sn = lookup_space(Family::BDI, n, n);
    auto s = check_surjectivity(RootType::D, 6, n, true);
    CHECK(s.surjective());
    for (const auto& w : s.witnesses) {
      auto t = gamma_transfer(make_symbol(sk, w.preimage_poly), sk, sn);
      CHECK(t.symbol == w.target_poly);
    }
  }
}

TEST_CASE("transfer preconditions", "[transfer]") {
  auto lap = laplacian_symbol(hyp(4));
  CHECK_THROWS_AS(gamma_transfer(lap, hyp(5), hyp(3)), PreconditionError);
  CHECK_THROWS_AS(gamma_transfer(lap, hyp(4), lookup_space(Family::CI, 1)), PreconditionError);
  CHECK_THROWS_AS(gamma_transfer(lap, hyp(4), hyp(6)), PreconditionError);
}

TEST_CASE("transfer JSON", "[transfer][json]") {
  auto j = to_json(transfer_laplacian(hyp(7), hyp(4), RhoConvention::Paper));
  CHECK(j["shift"] == nlohmann::json{{"num", 33}, {"den", 4}});
  CHECK(j["matches"] == true);
  CHECK(j["symbol_n"]["space"] == "BDI(4,1)");
}
