#include "modrep/cli.hpp"

#include <algorithm>
#include <fstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "modrep/report.hpp"

namespace modrep {

namespace {

struct Options {
  RunConfig cfg;
  std::string group;
  std::string normal;
  std::uint32_t p = 0;
  std::string sigma;
  std::string expect;
  bool allow_reducible = false;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

int emit(const std::string& text, const Options& o, std::ostream& out) {
  if (o.cfg.out.empty()) {
    out << text;
    return kExitPass;
  }
  std::ofstream f(o.cfg.out, std::ios::binary);
  if (!f) throw Error(ErrorKind::InvalidInput, "cannot write " + o.cfg.out);
  f << text;
  out << "wrote " << o.cfg.out << '\n';
  return kExitPass;
}

void require_format(const Options& o, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed)
    if (o.cfg.format == a) return;
  throw UsageError("unsupported --format '" + o.cfg.format + "'");
}

int cmd_table(const Options& o, std::ostream& out) {
  require_format(o, {"text", "json", "csv"});
  const GroupPtr g = make_group(o.group, o.p);
  const BrauerTable t = brauer_table(g, o.p, o.cfg.meataxe());
  const bool polynomial = o.group == "SL2" || o.group == "GL2";
  const auto labels = polynomial ? polynomial_row_labels(t) : std::vector<std::string>{};

  std::optional<TableComparison> cmp;
  if (!o.expect.empty()) {
    if (o.expect != "paper") throw UsageError("--expect takes only 'paper'");
    if (!polynomial || o.p != 3) throw Error(ErrorKind::InvalidInput, "published tables exist for SL2 and GL2 at p = 3");
    cmp = compare_with_paper(t, o.group == "SL2" ? 1 : 2);
  }

  std::string text;
  if (o.cfg.format == "json") {
    text = table_json(t, labels, o.cfg, cmp ? &*cmp : nullptr);
  } else if (o.cfg.format == "csv") {
    text = table_csv(t, labels);
  } else {
    text = table_text(t, labels);
    if (cmp) text += comparison_text(*cmp);
  }
  emit(text, o, out);
  return cmp && !cmp->matches ? kExitMismatch : kExitPass;
}

int cmd_clifford(const Options& o, std::ostream& out) {
  require_format(o, {"text", "json"});
  const GroupPair pair = make_group_pair(o.group, o.normal, o.p);
  CliffordContext ctx = make_clifford_context(pair.g, pair.n, o.p, o.cfg.meataxe());
  std::vector<CliffordReport> reports;
  if (!o.sigma.empty()) {
    Representation sigma = make_representation(o.sigma, pair.n, o.p, o.allow_reducible, &ctx.irr_n);
    if (!is_irreducible(sigma, ctx.opts).irreducible) throw Error(ErrorKind::NotIrreducible, sigma.label());
    if (!sigma.field()->same_as(*ctx.field)) {
      ctx.field = compositum(ctx.field, sigma.field());
      for (auto& r : ctx.irr_g) r = rebase(r, ctx.field);
      for (auto& r : ctx.irr_n) r = rebase(r, ctx.field);
    }
    reports.push_back(clifford_correspondence(sigma, ctx));
  } else {
    for (std::size_t i : orbit_representatives(ctx)) reports.push_back(clifford_correspondence(ctx.irr_n[i], ctx));
  }
  emit(o.cfg.format == "json" ? clifford_json(ctx, reports, o.cfg) : clifford_text(ctx, reports), o, out);
  const bool ok = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.passed(); });
  return ok ? kExitPass : kExitMismatch;
}

int cmd_verify(const Options& o, std::ostream& out) {
  require_format(o, {"text", "json"});
  if (o.cfg.suite.empty()) throw UsageError("empty suite selection; use --suite paper or --suite quick");
  const SuiteSummary s = run_suite(o.cfg.suite, o.cfg.meataxe());
  emit(o.cfg.format == "json" ? summary_json(s, o.cfg) : summary_text(s), o, out);
  return s.passed() ? kExitPass : kExitMismatch;
}

int cmd_section2(const Options& o, std::ostream& out) {
  require_format(o, {"text", "json"});
  if (!is_prime(o.p)) throw Error(ErrorKind::NotPrime, std::to_string(o.p));
  const auto r = verify_section2(o.p, o.cfg.meataxe());
  SuiteSummary s;
  s.suite = "polynomial-family";
  s.entries.push_back({"polynomial-family p=" + std::to_string(o.p), r.checks});
  std::string text;
  if (o.cfg.format == "json") {
    text = summary_json(s, o.cfg);
  } else {
    text = "GL2/SL2 polynomial family, p = " + std::to_string(o.p) + "\n" + checks_text(r.checks) +
           (r.passed() ? "PASS\n" : "FAIL\n");
  }
  emit(text, o, out);
  return r.passed() ? kExitPass : kExitMismatch;
}

int cmd_emit_tables(const Options& o, std::ostream& out) {
  require_format(o, {"text", "json"});
  const PaperTables t = emit_paper_tables(o.cfg.meataxe());
  const auto l1 = polynomial_row_labels(t.table1);
  const auto l2 = polynomial_row_labels(t.table2);
  std::string text;
  if (o.cfg.format == "json") {
    nlohmann::ordered_json j;
    j["tables"] = {nlohmann::ordered_json::parse(table_json(t.table1, l1, o.cfg, &t.cmp1)),
                   nlohmann::ordered_json::parse(table_json(t.table2, l2, o.cfg, &t.cmp2))};
    j["induction"] = t.induction_lines;
    j["induction_ok"] = t.induction_ok;
    j["passed"] = t.passed();
    text = j.dump(2) + "\n";
  } else {
    text = table_text(t.table1, l1) + comparison_text(t.cmp1) + "\n" + table_text(t.table2, l2) +
           comparison_text(t.cmp2) + "\n";
    for (const auto& line : t.induction_lines) text += line + "\n";
  }
  emit(text, o, out);
  return t.passed() ? kExitPass : kExitMismatch;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Modular representations of finite groups and Clifford theory checks", "modrep"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* c) {
    c->add_option("--seed", o.cfg.seed, "random seed");
    c->add_option("--budget", o.cfg.budget, "Meataxe attempts before giving up");
    c->add_option("--field-bound", o.cfg.field_bound, "largest field order recorded in the run config");
    c->add_option("--format", o.cfg.format, "text, json or csv");
    c->add_option("--out", o.cfg.out, "write the report to this path");
  };

  auto* table = app.add_subcommand("table", "Brauer character table");
  table->add_option("--group", o.group, "group descriptor")->required();
  table->add_option("--p", o.p, "characteristic")->required();
  table->add_option("--expect", o.expect, "compare with a published table ('paper')");
  common(table);

  auto* clifford = app.add_subcommand("clifford", "Clifford theory reports for a normal subgroup");
  clifford->add_option("--group", o.group, "group descriptor")->required();
  clifford->add_option("--normal", o.normal, "normal subgroup descriptor")->required();
  clifford->add_option("--p", o.p, "characteristic")->required();
  clifford->add_option("--sigma", o.sigma, "representation of the normal subgroup");
  clifford->add_flag("--allow-reducible", o.allow_reducible, "accept polynomial degrees beyond p-1");
  common(clifford);

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", o.cfg.suite, "paper or quick");
  common(verify);

  auto* section2 = app.add_subcommand("verify-section2", "polynomial representations of SL2 and GL2");
  section2->add_option("--p", o.p, "characteristic")->required();
  section2->add_flag("--allow-reducible", o.allow_reducible, "accepted for symmetry with clifford");
  common(section2);

  auto* tables = app.add_subcommand("emit-tables", "both published tables with comparisons");
  common(tables);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (table->parsed()) return cmd_table(o, out);
    if (clifford->parsed()) return cmd_clifford(o, out);
    if (verify->parsed()) return cmd_verify(o, out);
    if (section2->parsed()) return cmd_section2(o, out);
    if (tables->parsed()) return cmd_emit_tables(o, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    const bool mismatch = e.kind() == ErrorKind::TableMismatch || e.kind() == ErrorKind::PaperCheckFailure;
    return mismatch ? kExitMismatch : kExitInput;
  }
  return kExitUsage;
}

}  // namespace modrep
