#include "lpa/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <set>
#include <sstream>

#include "lpa/contraction.hpp"
#include "lpa/expr.hpp"
#include "lpa/graph_io.hpp"
#include "lpa/morita.hpp"
#include "lpa/moves.hpp"
#include "lpa/reduction.hpp"
#include "lpa/sampling.hpp"

namespace lpa::cli {

namespace {

std::vector<std::string> split_ids(const std::string& s) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == ',') {
      if (i > start) out.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

GraphRef load_graph(const std::string& path) {
  return std::make_shared<const Graph>(load_graph_file(path));
}

/// The full verification tour for one contraction: family relations,
/// B-identities, homomorphism properties of phi, the preimage sweep over
/// basis monomials of MM*, injectivity spot checks, and the fullness
/// cross-check.
Diagnostics cg_verify(GraphRef E, const std::vector<std::string>& G0, Ring ring,
                      std::size_t maxlen, int samples, std::uint64_t seed) {
  Diagnostics diag = validate(*E, G0);
  if (!diag.passed()) return diag;

  ContractionResult res = contract(E, G0, ring);
  Diagnostics fam = family_check(res);
  for (auto& item : fam.items) diag.items.push_back(item);
  if (!fam.passed()) return diag;

  for (const auto& v : res.T0()) {
    bool ok = b_identity_check(*E, res.G0, ring, v);
    diag.record("b-identity " + v, ok, ok ? "" : "vertex " + v);
  }

  {
    Sampler sm(res.G, ring, seed);
    bool ok = true;
    std::string witness;
    if (res.G->vertices().empty()) {
      diag.record("phi-homomorphism", true);
    } else {
      for (int i = 0; i < samples && ok; ++i) {
        Element x = sm.element(4, 3);
        Element y = sm.element(4, 3);
        if (!(phi(res, x * y) == phi(res, x) * phi(res, y)) ||
            !(phi(res, x + y) == phi(res, x) + phi(res, y)) ||
            !(phi(res, x.star()) == phi(res, x).star())) {
          ok = false;
          witness = to_expr(x) + " ; " + to_expr(y);
        }
      }
      diag.record("phi-homomorphism", ok, witness);
    }
  }

  {
    // All basis monomials s_mu s_{nu*} of MM* with |mu|, |nu| <= maxlen.
    std::set<std::string> g0(res.G0.begin(), res.G0.end());
    PathFilter into_g0;
    into_g0.range_in = g0;
    auto paths = enumerate_paths(*E, maxlen, into_g0);
    std::map<std::string, std::vector<const Path*>> by_source;
    for (const auto& p : paths) by_source[p.source()].push_back(&p);
    bool ok = true;
    std::string witness;
    std::size_t count = 0;
    for (const auto& [src, group] : by_source) {
      for (const Path* mu : group) {
        for (const Path* nu : group) {
          Element y = Element::monomial(E, ring, 1, *mu, *nu);
          // Only basis monomials: skip pairs whose normal form rewrites.
          if (y.term_count() != 1 ||
              !(y.terms().begin()->first == Monomial{*mu, *nu}))
            continue;
          ++count;
          Element back = phi(res, preimage(res, y));
          if (!(back == y)) {
            ok = false;
            witness = to_expr(y);
            break;
          }
        }
        if (!ok) break;
      }
      if (!ok) break;
    }
    diag.record("preimage-sweep (" + std::to_string(count) + " monomials)", ok,
                witness);
  }

  {
    Diagnostics inj = injectivity_check(res, samples, seed);
    for (auto& item : inj.items) diag.items.push_back(item);
  }

  diag.record("fullness", is_full(*E, res.G0), "SigmaH(G0) != E^0");
  return diag;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Leavitt path algebra toolkit"};
  app.require_subcommand(1);

  std::string graph_file, ring_spec = "Z", expr, lhs, rhs, set_arg, g0_arg,
              seg_arg, dfile, cert_file, fixture_name;
  std::int64_t deg = 0;
  std::uint64_t depth = 2, seed = 1;
  int samples = 100;
  std::size_t maxlen = 4;
  bool emit_expected = false;
  std::optional<std::size_t> maxlen_opt;

  auto* closure = app.add_subcommand("closure", "saturated hereditary closure");
  closure->add_option("graph", graph_file)->required();
  closure->add_option("--set", set_arg, "comma-separated vertex ids");

  auto* full = app.add_subcommand("full", "fullness of a vertex subset");
  full->add_option("graph", graph_file)->required();
  full->add_option("--set", set_arg);

  auto* quotient = app.add_subcommand("quotient", "quotient by a saturated hereditary set");
  quotient->add_option("graph", graph_file)->required();
  quotient->add_option("--set", set_arg);

  auto* nf = app.add_subcommand("nf", "normal form of an expression");
  nf->add_option("graph", graph_file)->required();
  nf->add_option("--ring", ring_spec);
  nf->add_option("--expr", expr)->required();

  auto* mul = app.add_subcommand("mul", "product of two expressions");
  mul->add_option("graph", graph_file)->required();
  mul->add_option("--ring", ring_spec);
  mul->add_option("--lhs", lhs)->required();
  mul->add_option("--rhs", rhs)->required();

  auto* grade = app.add_subcommand("grade", "graded component");
  grade->add_option("graph", graph_file)->required();
  grade->add_option("--ring", ring_spec);
  grade->add_option("--expr", expr)->required();
  grade->add_option("--deg", deg)->required();

  auto* morita = app.add_subcommand("morita", "verify the Morita context");
  morita->add_option("graph", graph_file)->required();
  morita->add_option("--set", set_arg);
  morita->add_option("--samples", samples);
  morita->add_option("--seed", seed);

  auto* cgv = app.add_subcommand("cg-validate", "contraction hypotheses");
  cgv->add_option("graph", graph_file)->required();
  cgv->add_option("--g0", g0_arg);

  auto* cgc = app.add_subcommand("cg-contract", "contract onto G0");
  cgc->add_option("graph", graph_file)->required();
  cgc->add_option("--g0", g0_arg);
  cgc->add_option("--ring", ring_spec);

  auto* cgverify = app.add_subcommand("cg-verify", "full contraction verification");
  cgverify->add_option("graph", graph_file)->required();
  cgverify->add_option("--g0", g0_arg);
  cgverify->add_option("--ring", ring_spec);
  cgverify->add_option("--maxlen", maxlen);
  cgverify->add_option("--samples", samples);
  cgverify->add_option("--seed", seed);

  auto* delay = app.add_subcommand("delay-in", "in-delay by a Drinen source vector");
  delay->add_option("graph", graph_file)->required();
  delay->add_option("--d", dfile, "delay vector file")->required();

  auto* desing = app.add_subcommand("desing", "truncated desingularisation");
  desing->add_option("graph", graph_file)->required();
  desing->add_option("--depth", depth)->required();

  auto* collapse = app.add_subcommand("collapse", "collapse an acyclic segment");
  collapse->add_option("graph", graph_file)->required();
  collapse->add_option("--seg", seg_arg);
  collapse->add_option("--ring", ring_spec);

  auto* fixture_cmd = app.add_subcommand("fixture", "paper example graphs");
  fixture_cmd->add_option("name", fixture_name, "EX51|EX52|EX53")->required();
  fixture_cmd->add_option("--depth", depth)->required();
  fixture_cmd->add_flag("--emit-expected", emit_expected,
                        "emit the expected contraction instead of E");

  auto* reduce_cmd = app.add_subcommand("reduce", "reduction theorem search");
  reduce_cmd->add_option("graph", graph_file)->required();
  reduce_cmd->add_option("--ring", ring_spec);
  reduce_cmd->add_option("--expr", expr)->required();
  reduce_cmd->add_option("--maxlen", maxlen_opt);

  auto* vcert = app.add_subcommand("verify-cert", "verify a reduction certificate");
  vcert->add_option("graph", graph_file)->required();
  vcert->add_option("--ring", ring_spec);
  vcert->add_option("--expr", expr)->required();
  vcert->add_option("--cert", cert_file, "certificate file")->required();

  std::vector<std::string> argv = args;
  std::reverse(argv.begin(), argv.end());
  try {
    app.parse(argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  try {
    Ring ring = Ring::parse(ring_spec);

    if (closure->parsed()) {
      GraphRef g = load_graph(graph_file);
      auto H = saturated_hereditary_closure(*g, split_ids(set_arg));
      for (std::size_t i = 0; i < H.size(); ++i)
        out << (i ? "," : "") << H[i];
      out << "\n";
      return 0;
    }
    if (full->parsed()) {
      GraphRef g = load_graph(graph_file);
      out << (is_full(*g, split_ids(set_arg)) ? "true" : "false") << "\n";
      return 0;
    }
    if (quotient->parsed()) {
      GraphRef g = load_graph(graph_file);
      out << serialize(quotient_graph(*g, split_ids(set_arg)));
      return 0;
    }
    if (nf->parsed()) {
      GraphRef g = load_graph(graph_file);
      out << to_expr(parse_element(g, ring, expr)) << "\n";
      return 0;
    }
    if (mul->parsed()) {
      GraphRef g = load_graph(graph_file);
      Element a = parse_element(g, ring, lhs);
      Element b = parse_element(g, ring, rhs);
      out << to_expr(a * b) << "\n";
      return 0;
    }
    if (grade->parsed()) {
      GraphRef g = load_graph(graph_file);
      out << to_expr(parse_element(g, ring, expr).grade_component(deg)) << "\n";
      return 0;
    }
    if (morita->parsed()) {
      GraphRef g = load_graph(graph_file);
      MoritaSpec spec(g, ring, split_ids(set_arg));
      MoritaReport report = verify_morita_context(spec, samples, seed);
      out << report.to_text();
      return report.passed() ? 0 : 1;
    }
    if (cgv->parsed()) {
      GraphRef g = load_graph(graph_file);
      Diagnostics diag = validate(*g, split_ids(g0_arg));
      out << diag.to_text();
      return diag.passed() ? 0 : 1;
    }
    if (cgc->parsed()) {
      GraphRef g = load_graph(graph_file);
      out << serialize_contraction(contract(g, split_ids(g0_arg), ring));
      return 0;
    }
    if (cgverify->parsed()) {
      GraphRef g = load_graph(graph_file);
      Diagnostics diag = cg_verify(g, split_ids(g0_arg), ring, maxlen, samples, seed);
      out << diag.to_text();
      return diag.passed() ? 0 : 1;
    }
    if (delay->parsed()) {
      GraphRef g = load_graph(graph_file);
      DelayVector d = DelayVector::parse(read_file(dfile));
      out << serialize(*in_delay(*g, d).graph);
      return 0;
    }
    if (desing->parsed()) {
      MultiGraph mg = load_multigraph_file(graph_file);
      out << serialize(*desingularise_truncated(mg, depth).graph);
      return 0;
    }
    if (collapse->parsed()) {
      GraphRef g = load_graph(graph_file);
      CollapseResult res = collapse_segment(g, split_ids(seg_arg), ring);
      out << res.diagnostics;
      out << serialize_contraction(res.contraction);
      return 0;
    }
    if (fixture_cmd->parsed()) {
      Fixture fx = fixture(parse_fixture_name(fixture_name), depth);
      if (emit_expected)
        out << serialize_expected_contraction(fx);
      else
        out << serialize(*fx.E);
      return 0;
    }
    if (reduce_cmd->parsed()) {
      GraphRef g = load_graph(graph_file);
      Element x = parse_element(g, ring, expr);
      ReduceOptions opts;
      opts.max_len = maxlen_opt;
      ReductionOutcome outcome = reduce(x, opts);
      if (!outcome.certificate) {
        out << "EXHAUSTED\n";
        return 1;
      }
      out << serialize_certificate(*outcome.certificate) << "\n";
      return 0;
    }
    if (vcert->parsed()) {
      GraphRef g = load_graph(graph_file);
      Element x = parse_element(g, ring, expr);
      ReductionCertificate cert = parse_certificate(*g, read_file(cert_file));
      bool ok = verify_certificate(x, cert);
      out << (ok ? "true" : "false") << "\n";
      return ok ? 0 : 1;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  err << "no subcommand\n";
  return 2;
}

}  // namespace lpa::cli
