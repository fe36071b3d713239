#pragma once

// Command-line front end. Exit codes: 0 all claims hold, 1 a claim is false,
// 2 usage or precondition error.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "weylres/group_table.hpp"
#include "weylres/invariants.hpp"
#include "weylres/restriction_theorems.hpp"
#include "weylres/sweep.hpp"
#include "weylres/symmetric_spaces.hpp"
#include "weylres/transfer.hpp"

namespace weylres::cli {

struct Output {
  nlohmann::json result;
  std::string text;
  bool pass = true;
};

inline std::string report_text(const Report& r) {
  std::string s = r.theorem + " " + r.subject.dump() + "\n";
  for (const auto& c : r.claims) s += std::string(c.pass ? "  [PASS] " : "  [FAIL] ") + c.id + ": " + c.statement + "\n";
  s += std::string("overall: ") + (r.pass() ? "PASS" : "FAIL") + "\n";
  return s;
}

inline Output from_report(const Report& r) { return {to_json(r), report_text(r), r.pass()}; }

struct SpaceArgs {
  std::string space, family;
  int p = 0, q = 0, j = 0;

  void attach(CLI::App* sub) {
    sub->add_option("space,--space", space, "space such as BDI:7,1 or CI:3");
    sub->add_option("--family", family, "family name (AIII, BDI, CI, A-complex, ...)");
    sub->add_option("--p", p, "first parameter of AIII/BDI/CII");
    sub->add_option("--q", q, "second parameter of AIII/BDI/CII");
    sub->add_option("--j", j, "parameter of one-parameter families");
  }
  bool given() const { return !space.empty() || !family.empty(); }
  SpaceDescriptor get() const {
    if (!space.empty()) return parse_space(space);
    require(!family.empty(), "give a space (e.g. BDI:7,1) or --family with parameters");
    Family f = parse_family(family);
    return two_parameter(f) ? lookup_space(f, p, q) : lookup_space(f, j);
  }
};

inline std::optional<std::size_t> closed_form_order(RootType t, int r, bool extended) {
  mpz_class o;
  switch (t) {
    case RootType::A: o = factorial(r + 1); break;
    case RootType::B:
    case RootType::C: o = pow2(r) * factorial(r); break;
    case RootType::D: o = extended ? mpz_class(pow2(r) * factorial(r)) : mpz_class(pow2(r - 1) * factorial(r)); break;
  }
  if (!o.fits_ulong_p()) return std::nullopt;
  return o.get_ui();
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Weyl group restriction and symmetric space propagation checks", "weylres_cli"};
  app.require_subcommand(1);
  app.fallthrough();
  bool json = false;
  app.add_flag("--json", json, "emit JSON (schema 1)");

  std::string type;
  int rank = 0, k = 0, n = 0, removed = 0;
  auto type_opt = [&](CLI::App* s) { s->add_option("--type", type, "root system type A, B, C or D")->required(); };

  auto* roots = app.add_subcommand("roots", "root system in ambient coordinates");
  type_opt(roots);
  roots->add_option("--rank", rank)->required();

  auto* weyl = app.add_subcommand("weyl", "enumerate the Weyl group");
  bool extended = false, elements = false;
  std::size_t max_order = 100000;
  type_opt(weyl);
  weyl->add_option("--rank", rank)->required();
  weyl->add_flag("--extended", extended, "adjoin a sign change for type D");
  weyl->add_flag("--elements", elements, "list the elements");
  weyl->add_option("--max-order", max_order, "refuse groups larger than this")->capture_default_str();

  auto* inv = app.add_subcommand("invariants", "characteristic polynomial generators");
  type_opt(inv);
  inv->add_option("--rank", rank)->required();

  auto* restrict_cmd = app.add_subcommand("restrict", "restriction identities and surjectivity");
  type_opt(restrict_cmd);
  restrict_cmd->add_option("--k", k)->required();
  restrict_cmd->add_option("--n", n)->required();
  restrict_cmd->add_flag("--extended", extended, "use W~ for type D");

  auto* admext = app.add_subcommand("verify-admext", "restriction theorem for Weyl groups");
  type_opt(admext);
  admext->add_option("--k", k)->required();
  admext->add_option("--n", n)->required();

  auto* remark = app.add_subcommand("remark", "removing an interior simple root");
  type_opt(remark);
  remark->add_option("--k", k)->required();
  remark->add_option("--remove", removed, "index i of the removed simple root")->required();

  SpaceArgs ihia_space;
  auto* ihia = app.add_subcommand("verify-ihia", "extended restriction for split and complex spaces");
  ihia_space.attach(ihia);

  std::vector<std::string> from, to;
  auto* gk = app.add_subcommand("verify-g-k", "restriction theorem along a propagation");
  gk->add_option("--from", from, "larger space M_k")->required()->expected(1);
  gk->add_option("--to", to, "smaller space M_n")->required()->expected(1);

  SpaceArgs spaces_args;
  int max_param = 8;
  auto* spaces = app.add_subcommand("spaces", "restricted root data of symmetric spaces");
  spaces_args.attach(spaces);
  spaces->add_option("--max-param", max_param, "parameter bound when listing the table")->capture_default_str();

  auto* prop = app.add_subcommand("propagate", "decide whether M_k propagates M_n");
  prop->add_option("--from", from, "factors of M_k")->required();
  prop->add_option("--to", to, "factors of M_n")->required();

  std::string op = "laplacian", convention = "table";
  auto* transfer = app.add_subcommand("transfer", "transfer an invariant operator");
  transfer->add_option("--from", from)->required()->expected(1);
  transfer->add_option("--to", to)->required()->expected(1);
  transfer->add_option("--op", op)->check(CLI::IsMember({"laplacian"}))->capture_default_str();
  transfer->add_option("--rho-convention", convention)->check(CLI::IsMember({"table", "paper"}))->capture_default_str();

  int max_rank = 6;
  auto* sweep = app.add_subcommand("sweep", "run the verification matrix");
  sweep->add_option("--max-rank", max_rank)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return 0;
    }
    err << "error: " << e.what() << "\n\n" << app.help();
    return 2;
  }

  CLI::App* sub = app.get_subcommands().front();
  Output o;
  try {
    if (sub == roots) {
      auto rs = build_root_system(parse_root_type(type), rank);
      o.result = to_json(rs);
      o.text = type_name(rs.type) + std::to_string(rs.rank) + ": " + std::to_string(rs.roots.size()) + " roots\n";
      for (std::size_t i = 0; i < rs.simple_roots.size(); ++i)
        o.text += "  alpha_" + std::to_string(i + 1) + " = " + vector_to_json(rs.simple_roots[i]).dump() + "\n";
    } else if (sub == weyl) {
      RootType t = parse_root_type(type);
      auto rs = build_root_system(t, rank);
      auto expected = closed_form_order(t, rank, extended);
      require(expected && *expected <= max_order,
              "group order exceeds --max-order " + std::to_string(max_order));
      auto g = extended ? generate_extended(rs) : generate_weyl(rs);
      o.result = to_json(g, elements);
      o.pass = g.order() == *expected;
      o.text = std::string(extended ? "W~(" : "W(") + type_name(t) + std::to_string(rank) + "): order " +
               std::to_string(g.order()) + ", " + kind_name(g.kind) + "\n";
    } else if (sub == inv) {
      auto g = char_poly_generators(parse_root_type(type), rank);
      o.result = to_json(g);
      for (int nu = 1; nu <= g.count(); ++nu) o.text += "  " + label("p", rank, nu) + " = " + g.p(nu).to_string() + "\n";
    } else if (sub == restrict_cmd) {
      RootType t = parse_root_type(type);
      auto ids = verify_restriction_identities(t, k, n, true);
      auto s = check_surjectivity(t, k, n, extended);
      o.result = {{"identities", to_json(ids)}, {"surjectivity", to_json(s)}};
      Report sr;
      sr.theorem = "surjectivity";
      sr.subject = {{"extended", extended}};
      append_claims(sr, s, "");
      o.pass = ids.pass() && sr.pass();
      o.text = report_text(ids) + report_text(sr) + "surjective: " + (s.surjective() ? "yes" : "no") + "\n";
    } else if (sub == admext) {
      o = from_report(verify_theorem_admext(parse_root_type(type), k, n));
    } else if (sub == remark) {
      o = from_report(remark_counterexample(parse_root_type(type), k, removed));
    } else if (sub == ihia) {
      o = from_report(verify_theorem_ihia(ihia_space.get()));
    } else if (sub == gk) {
      o = from_report(verify_theorem_admext_gk(parse_space(from[0]), parse_space(to[0])));
    } else if (sub == spaces) {
      std::vector<SpaceDescriptor> list;
      if (spaces_args.given())
        list.push_back(spaces_args.get());
      else {
        require(max_param >= 1 && max_param <= 64, "--max-param must lie in [1, 64]");
        list = all_spaces(max_param);
      }
      nlohmann::json arr = nlohmann::json::array();
      for (const auto& s : list) {
        auto d = restricted_root_data(s);
        arr.push_back({{"space", to_json(s)}, {"restricted_roots", to_json(d)}});
        o.text += s.label() + ": " + s.g_noncompact + "/" + s.k_name + ", rank " + std::to_string(s.rank) +
                  ", dim " + std::to_string(s.dim) + ", Sigma_1/2 " + type_name(d.sigma_half_type) +
                  std::to_string(d.rank) + (d.reduced ? "" : " (non-reduced)") + "\n";
      }
      o.result = {{"spaces", arr}};
    } else if (sub == prop) {
      ProductSpace pk, pn;
      for (const auto& s : from) pk.push_back(parse_space(s));
      for (const auto& s : to) pn.push_back(parse_space(s));
      o = from_report(check_propagation(pk, pn));
    } else if (sub == transfer) {
      auto c = parse_convention(convention);
      auto t = transfer_laplacian(parse_space(from[0]), parse_space(to[0]), c);
      o.result = to_json(t);
      o.result["op"] = op;
      o.result["rho_convention"] = convention_name(c);
      o.pass = t.matches;
      o.text = "shift: " + to_string(t.shift) + "\nsymbol on " + t.transferred.space.label() + ": " +
               t.transferred.symbol.to_string() + "\nmatches Delta_n - shift: " + (t.matches ? "yes" : "no") + "\n";
    } else if (sub == sweep) {
      auto results = run_sweep({max_rank});
      nlohmann::json arr = nlohmann::json::array();
      bool all = true;
      for (const auto& c : results) {
        arr.push_back(to_json(c));
        all = all && c.pass();
        o.text += std::string(c.pass() ? "[PASS] " : "[FAIL] ") + std::to_string(c.id) + " " + c.name + " (" +
                  std::to_string(c.cases - static_cast<int>(c.failures.size())) + "/" + std::to_string(c.cases) +
                  ")\n";
        for (const auto& f : c.failures) o.text += "    failed: " + f + "\n";
      }
      o.result = {{"max_rank", max_rank}, {"criteria", arr}, {"pass", all}};
      o.pass = all;
    }
  } catch (const OutOfScopeError& e) {
    err << "out of scope: " << e.what() << "\n";
    return 2;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n\n" << sub->help();
    return 2;
  }

  if (json)
    out << nlohmann::json{{"schema", "1"}, {"command", sub->get_name()}, {"result", o.result}}.dump(2) << "\n";
  else
    out << o.text;
  return o.pass ? 0 : 1;
}

}  // namespace weylres::cli
