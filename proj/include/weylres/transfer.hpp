#pragma once

// Symbol-level transfer of invariant differential operators along a
// propagation M_k -> M_n: an operator is represented by its W~-invariant
// symbol on a*, and transfer is restriction to a_n*.

#include <string>

#include "group_table.hpp"
#include "polynomial.hpp"
#include "symmetric_spaces.hpp"

namespace weylres {

// Table: rho from the multiplicities. Paper: the hyperbolic
// normalization |alpha| = 1, rho_k = (k/2) alpha, only for BDI(k,1).
enum class RhoConvention { Table, Paper };

inline std::string convention_name(RhoConvention c) { return c == RhoConvention::Table ? "table" : "paper"; }

inline RhoConvention parse_convention(const std::string& s) {
  if (s == "table") return RhoConvention::Table;
  if (s == "paper") return RhoConvention::Paper;
  throw PreconditionError("unknown rho convention '" + s + "' (expected table or paper)");
}

inline Rational rho_norm2(const SpaceDescriptor& s, RhoConvention c = RhoConvention::Table) {
  if (c == RhoConvention::Paper) {
    require(s.family == Family::BDI && s.q == 1, "the hyperbolic normalization applies to BDI(k,1) only");
    return make_rational(static_cast<long>(s.p) * s.p, 4);
  }
  auto d = restricted_root_data(s);
  return dot(d.rho, d.rho);
}

struct OperatorSymbol {
  SpaceDescriptor space;
  Polynomial symbol;  // in the coordinates of a* (r+1 ambient ones for type A)
};

inline int symbol_vars(const SpaceDescriptor& s) {
  auto d = restricted_root_data(s);
  return ambient_dim(d.sigma_half_type, d.rank);
}

inline std::vector<SignedPermutation> extended_generators(const SpaceDescriptor& s) {
  auto d = restricted_root_data(s);
  return weyl_generators(build_root_system(d.sigma_half_type, d.rank), true);
}

inline bool is_valid_symbol(const OperatorSymbol& op) {
  if (op.symbol.num_vars() != symbol_vars(op.space)) return false;
  auto gens = extended_generators(op.space);
  return is_invariant(std::span<const SignedPermutation>(gens), op.symbol);
}

inline OperatorSymbol make_symbol(const SpaceDescriptor& s, Polynomial p) {
  OperatorSymbol op{s, std::move(p)};
  require(op.symbol.num_vars() == symbol_vars(s), "symbol has the wrong number of variables");
  require(is_valid_symbol(op), "symbol is not W~-invariant");
  return op;
}

// lambda_1^2 + ... + lambda_r^2 - |rho|^2
inline OperatorSymbol laplacian_symbol(const SpaceDescriptor& s, RhoConvention c = RhoConvention::Table) {
  const int v = symbol_vars(s);
  Polynomial p(v);
  for (int i = 1; i <= v; ++i) p += Polynomial::x(v, i) * Polynomial::x(v, i);
  p -= Polynomial::constant(v, rho_norm2(s, c));
  return make_symbol(s, p);
}

inline OperatorSymbol gamma_transfer(const OperatorSymbol& op, const SpaceDescriptor& sk,
                                     const SpaceDescriptor& sn) {
  require(op.space == sk, "symbol is not attached to " + sk.label());
  require(check_propagation(sk, sn).pass(), sk.label() + " does not propagate " + sn.label());
  require(is_valid_symbol(op), "symbol is not W~-invariant");
  OperatorSymbol out{sn, restrict_poly(op.symbol, symbol_vars(sn))};
  if (!is_valid_symbol(out))
    throw std::logic_error("transferred symbol is not W~-invariant on " + sn.label());
  return out;
}

inline Rational rho_shift(const SpaceDescriptor& sk, const SpaceDescriptor& sn,
                          RhoConvention c = RhoConvention::Table) {
  require(check_propagation(sk, sn).pass(), sk.label() + " does not propagate " + sn.label());
  return rho_norm2(sk, c) - rho_norm2(sn, c);
}

struct LaplacianTransfer {
  Rational shift;
  OperatorSymbol transferred;  // Gamma_{k,n}(Delta_k)
  OperatorSymbol expected;     // Delta_n - shift
  bool matches = false;
};

inline LaplacianTransfer transfer_laplacian(const SpaceDescriptor& sk, const SpaceDescriptor& sn,
                                            RhoConvention c = RhoConvention::Table) {
  LaplacianTransfer t{rho_shift(sk, sn, c), gamma_transfer(laplacian_symbol(sk, c), sk, sn),
                      laplacian_symbol(sn, c), false};
  t.expected.symbol -= Polynomial::constant(t.expected.symbol.num_vars(), t.shift);
  t.matches = t.transferred.symbol == t.expected.symbol;
  return t;
}

inline nlohmann::json to_json(const OperatorSymbol& op) {
  return {{"space", op.space.label()}, {"symbol", op.symbol.to_string()}, {"poly", to_json(op.symbol)}};
}

inline nlohmann::json to_json(const LaplacianTransfer& t) {
  return {{"shift", rational_to_json(t.shift)},
          {"shift_text", to_string(t.shift)},
          {"symbol_n", to_json(t.transferred)},
          {"expected", to_json(t.expected)},
          {"matches", t.matches}};
}

}  // namespace weylres
