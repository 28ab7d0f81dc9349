#include "modrep/report.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace modrep {

namespace {

using ojson = nlohmann::ordered_json;

ojson config_json(const RunConfig& cfg) {
  ojson j;
  j["seed"] = cfg.seed;
  j["field_bound"] = cfg.field_bound;
  j["meataxe_budget"] = cfg.budget;
  j["suite"] = cfg.suite;
  j["format"] = cfg.format;
  j["out"] = cfg.out;
  return j;
}

ojson conventions_json() {
  ojson j;
  for (const auto& [k, v] : conventions()) j[k] = v;
  return j;
}

ojson field_json(const FieldPtr& f) {
  ojson j;
  j["p"] = f->p();
  j["k"] = f->k();
  j["modulus"] = f->modulus_string();
  return j;
}

ojson cyc_json(const CyclotomicInt& c) {
  ojson j;
  j["M"] = c.conductor();
  j["coeffs"] = c.coeffs();
  j["display"] = c.display();
  return j;
}

ojson checks_json(const std::vector<Check>& checks) {
  ojson a = ojson::array();
  for (const auto& c : checks) {
    ojson j;
    j["clause"] = c.clause;
    j["passed"] = c.passed;
    j["detail"] = c.detail;
    a.push_back(std::move(j));
  }
  return a;
}

ojson header(const std::string& schema, const RunConfig& cfg) {
  ojson j;
  j["schema"] = schema;
  j["config"] = config_json(cfg);
  j["conventions"] = conventions_json();
  return j;
}

std::string label_of(const std::vector<std::string>& labels, std::size_t i, const BrauerTable& t) {
  return i < labels.size() ? labels[i] : t.rows[i].label;
}

// Display width in code points; entries may contain "√".
std::size_t width(const std::string& s) {
  return static_cast<std::size_t>(std::count_if(s.begin(), s.end(), [](char c) { return (c & 0xC0) != 0x80; }));
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

// Right-aligned fixed-width grid.
std::string grid(const std::vector<std::vector<std::string>>& cells) {
  std::vector<std::size_t> w;
  for (const auto& row : cells) {
    if (w.size() < row.size()) w.resize(row.size(), 0);
    for (std::size_t j = 0; j < row.size(); ++j) w[j] = std::max(w[j], width(row[j]));
  }
  std::ostringstream os;
  for (const auto& row : cells) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j) os << "  ";
      const std::size_t pad = w[j] - width(row[j]);
      if (j == 0) os << row[j] << std::string(pad, ' ');
      else os << std::string(pad, ' ') << row[j];
    }
    os << '\n';
  }
  return os.str();
}

std::string label_or_index(const CliffordContext& ctx, long idx) {
  if (idx < 0 || static_cast<std::size_t>(idx) >= ctx.irr_g.size()) return "";
  return ctx.irr_g[static_cast<std::size_t>(idx)].label();
}

std::size_t count_passed(const std::vector<Check>& cs) {
  return static_cast<std::size_t>(std::count_if(cs.begin(), cs.end(), [](const Check& c) { return c.passed; }));
}

}  // namespace

std::vector<std::pair<std::string, std::string>> conventions() {
  return {
      {"field_modulus", "Conway polynomials; searched Conway-compatible modulus beyond the stored table"},
      {"element_format", "a0+a1*t+... in the power basis of the modulus"},
      {"embedding", "primitive of GF(p^k) -> primitive(GF(p^K))^((p^K-1)/(p^k-1))"},
      {"brauer_lift", kLiftConvention},
      {"class_order", "(element order, class size, key of representative)"},
      {"class_representative", "key-minimal member"},
      {"coset_representatives", "first element of each coset in BFS enumeration order"},
      {"action", "P(x,y) -> P(ax+cy, bx+dy) on basis x^k, x^(k-1)y, ..., y^k"},
      {"irreducible_order", "(degree, character key); within a degree larger values first"},
  };
}

std::string table_json(const BrauerTable& t, const std::vector<std::string>& row_labels, const RunConfig& cfg,
                       const TableComparison* cmp) {
  ojson j = header("brauer-table/1", cfg);
  j["group"] = t.group->name();
  j["group_order"] = t.group->size();
  j["p"] = t.p;
  j["field"] = t.irreducibles.empty() ? ojson() : field_json(t.irreducibles.front().field());
  j["conductor"] = t.conductor;
  ojson classes = ojson::array();
  for (std::size_t c = 0; c < t.classes.size(); ++c) {
    ojson e;
    e["name"] = t.class_names[c];
    e["order"] = t.orders[c];
    e["size"] = t.sizes[c];
    e["representative"] = element_key(t.group->element(t.group->classes()[t.classes[c]].rep));
    classes.push_back(std::move(e));
  }
  j["classes"] = std::move(classes);
  ojson rows = ojson::array();
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    ojson r;
    r["label"] = label_of(row_labels, i, t);
    r["degree"] = t.rows[i].degree;
    ojson vals = ojson::array();
    for (const auto& v : t.rows[i].values) vals.push_back(cyc_json(v));
    r["values"] = std::move(vals);
    rows.push_back(std::move(r));
  }
  j["rows"] = std::move(rows);
  if (cmp) {
    ojson c;
    c["title"] = cmp->title;
    c["matches"] = cmp->matches;
    c["galois_twist"] = cmp->galois_twist;
    c["columns"] = cmp->columns;
    c["mapped_classes"] = cmp->mapped;
    ojson diffs = ojson::array();
    for (const auto& d : cmp->diffs) {
      diffs.push_back({{"row", d.row}, {"column", d.column}, {"expected", d.expected}, {"actual", d.actual}});
    }
    c["diffs"] = std::move(diffs);
    c["notes"] = cmp->notes;
    j["comparison"] = std::move(c);
  }
  return j.dump(2) + "\n";
}

std::string table_text(const BrauerTable& t, const std::vector<std::string>& row_labels) {
  std::vector<std::vector<std::string>> cells;
  std::vector<std::string> head{""}, ord{"order"}, size{"size"};
  for (std::size_t c = 0; c < t.classes.size(); ++c) {
    head.push_back(t.class_names[c]);
    ord.push_back(std::to_string(t.orders[c]));
    size.push_back(std::to_string(t.sizes[c]));
  }
  cells.push_back(head);
  cells.push_back(ord);
  cells.push_back(size);
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    std::vector<std::string> row{label_of(row_labels, i, t)};
    for (const auto& v : t.rows[i].values) row.push_back(v.display());
    cells.push_back(std::move(row));
  }
  std::ostringstream os;
  os << t.group->name() << " (order " << t.group->size() << "), p = " << t.p << "\n" << grid(cells);
  return os.str();
}

std::string table_csv(const BrauerTable& t, const std::vector<std::string>& row_labels) {
  std::ostringstream os;
  os << "row";
  for (const auto& n : t.class_names) os << ',' << csv_field(n);
  os << "\norder";
  for (auto o : t.orders) os << ',' << o;
  os << "\nsize";
  for (auto s : t.sizes) os << ',' << s;
  os << '\n';
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    os << csv_field(label_of(row_labels, i, t));
    for (const auto& v : t.rows[i].values) os << ',' << csv_field(v.zeta_string());
    os << '\n';
  }
  return os.str();
}

std::string comparison_text(const TableComparison& c) {
  std::ostringstream os;
  os << c.title << ": " << (c.matches ? "matches" : "MISMATCH");
  if (c.galois_twist) os << " (Galois-conjugate rows exchanged)";
  os << '\n';
  for (std::size_t i = 0; i < c.columns.size() && i < c.mapped.size(); ++i) {
    os << "  column " << c.columns[i] << " -> " << c.mapped[i] << '\n';
  }
  for (const auto& d : c.diffs) {
    os << "  " << d.row << " @ " << d.column << ": expected " << d.expected << ", got " << d.actual << '\n';
  }
  for (const auto& n : c.notes) os << "  note: " << n << '\n';
  return os.str();
}

std::string clifford_json(const CliffordContext& ctx, const std::vector<CliffordReport>& reports,
                          const RunConfig& cfg) {
  ojson j = header("clifford-report/1", cfg);
  j["group"] = ctx.g->name();
  j["normal"] = ctx.n->name();
  j["p"] = ctx.p;
  j["field"] = field_json(ctx.field);
  ojson irr_g = ojson::array();
  for (const auto& r : ctx.irr_g) irr_g.push_back({{"label", r.label()}, {"degree", r.degree()}});
  j["irreducibles_g"] = std::move(irr_g);
  ojson irr_n = ojson::array();
  for (const auto& r : ctx.irr_n) irr_n.push_back({{"label", r.label()}, {"degree", r.degree()}});
  j["irreducibles_n"] = std::move(irr_n);

  ojson arr = ojson::array();
  bool all = true;
  for (const auto& rep : reports) {
    ojson r;
    r["sigma"] = rep.sigma_label;
    r["sigma_degree"] = rep.sigma_degree;
    r["inertia_order"] = rep.inertia.inertia->size();
    r["inertia_index"] = rep.inertia.d;
    ojson orbit = ojson::array();
    for (const auto& o : rep.inertia.orbit) orbit.push_back(o.label());
    r["orbit"] = std::move(orbit);
    ojson ghat = ojson::array();
    for (std::size_t i = 0; i < rep.ghat.size(); ++i) {
      ghat.push_back({{"theta", ctx.irr_g[rep.ghat[i]].label()},
                      {"ell", i < rep.ghat_ell.size() ? rep.ghat_ell[i] : 0}});
    }
    r["ghat"] = std::move(ghat);
    ojson corr = ojson::array();
    for (const auto& e : rep.correspondence) {
      ojson c;
      c["phi"] = e.phi.label();
      c["phi_degree"] = e.phi.degree();
      c["composition_multiplicity"] = e.composition_multiplicity;
      c["m"] = e.m;
      c["ell_phi"] = e.ell_phi;
      c["ell_induced"] = e.ell_induced;
      c["induced_degree"] = e.induced.degree();
      c["theta"] = label_or_index(ctx, e.theta_index);
      corr.push_back(std::move(c));
    }
    r["correspondence"] = std::move(corr);
    r["checks"] = checks_json(rep.checks);
    r["passed"] = rep.passed();
    all = all && rep.passed();
    arr.push_back(std::move(r));
  }
  j["reports"] = std::move(arr);
  j["passed"] = all;
  return j.dump(2) + "\n";
}

std::string clifford_text(const CliffordContext& ctx, const std::vector<CliffordReport>& reports) {
  std::ostringstream os;
  os << ctx.g->name() << " over " << ctx.n->name() << ", p = " << ctx.p << ", field " << ctx.field->name() << '\n';
  for (const auto& rep : reports) {
    os << "\nsigma " << rep.sigma_label << " (degree " << rep.sigma_degree << "): |I| = "
       << rep.inertia.inertia->size() << ", [I:N] = " << rep.inertia.d << ", orbit size "
       << rep.inertia.orbit.size() << '\n';
    os << "  G-hat:";
    for (std::size_t i = 0; i < rep.ghat.size(); ++i) {
      os << ' ' << ctx.irr_g[rep.ghat[i]].label();
      if (i < rep.ghat_ell.size()) os << " (ell " << rep.ghat_ell[i] << ')';
    }
    os << '\n';
    for (const auto& e : rep.correspondence) {
      os << "  " << e.phi.label() << " -> " << label_or_index(ctx, e.theta_index) << "  m = " << e.m
         << ", composition multiplicity " << e.composition_multiplicity << '\n';
    }
    os << checks_text(rep.checks);
  }
  return os.str();
}

std::string summary_json(const SuiteSummary& s, const RunConfig& cfg) {
  ojson j = header("verify-summary/1", cfg);
  j["suite"] = s.suite;
  ojson entries = ojson::array();
  std::size_t total = 0, passed = 0;
  for (const auto& e : s.entries) {
    ojson x;
    x["name"] = e.name;
    x["passed"] = e.passed();
    x["checks"] = checks_json(e.checks);
    total += e.checks.size();
    passed += count_passed(e.checks);
    entries.push_back(std::move(x));
  }
  j["entries"] = std::move(entries);
  j["notes"] = s.notes;
  j["checks_total"] = total;
  j["checks_passed"] = passed;
  j["passed"] = s.passed();
  return j.dump(2) + "\n";
}

std::string summary_text(const SuiteSummary& s) {
  std::ostringstream os;
  std::size_t total = 0, passed = 0;
  for (const auto& e : s.entries) {
    const std::size_t ok = count_passed(e.checks);
    total += e.checks.size();
    passed += ok;
    os << (e.passed() ? "PASS " : "FAIL ") << e.name << "  (" << ok << "/" << e.checks.size() << ")\n";
    for (const auto& c : e.checks) {
      if (!c.passed) os << "    FAIL " << c.clause << "  " << c.detail << '\n';
    }
  }
  for (const auto& n : s.notes) os << "note: " << n << '\n';
  os << "suite " << s.suite << ": " << passed << "/" << total << " checks passed, "
     << (s.passed() ? "PASS" : "FAIL") << '\n';
  return os.str();
}

std::string checks_text(const std::vector<Check>& checks) {
  std::ostringstream os;
  for (const auto& c : checks) {
    os << "  " << (c.passed ? "PASS " : "FAIL ") << c.clause;
    if (!c.detail.empty()) os << "  " << c.detail;
    os << '\n';
  }
  return os.str();
}

}  // namespace modrep
