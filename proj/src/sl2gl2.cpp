#include "modrep/sl2gl2.hpp"

#include <algorithm>

namespace modrep {

namespace {

// Coefficients of (u + v t)^e, low-to-high in t.
std::vector<Elem> binomial_power(const Field& f, Elem u, Elem v, unsigned e) {
  std::vector<Elem> out{1};
  for (unsigned i = 0; i < e; ++i) {
    std::vector<Elem> next(out.size() + 1, 0);
    for (std::size_t j = 0; j < out.size(); ++j) {
      next[j] = f.add(next[j], f.mul(out[j], u));
      next[j + 1] = f.add(next[j + 1], f.mul(out[j], v));
    }
    out = std::move(next);
  }
  return out;
}

void check_range(std::uint32_t p, unsigned k, bool allow_reducible) {
  if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p));
  if (k > p - 1 && !allow_reducible) {
    throw Error(ErrorKind::KOutOfRange, "k=" + std::to_string(k) + " outside 0.." + std::to_string(p - 1));
  }
}

Check make_check(std::string clause, bool passed, std::string detail = {}) {
  return Check{std::move(clause), passed, std::move(detail)};
}

bool iso_irr(const Representation& a, const Representation& b) {
  return a.degree() == b.degree() && hom_dim(a, b) > 0;
}

std::string num(std::size_t x) { return std::to_string(x); }

std::string theta_name(unsigned k, unsigned r) { return "theta_" + std::to_string(k) + "," + std::to_string(r); }
std::string sigma_name(unsigned k) { return "sigma_" + std::to_string(k); }

}  // namespace

Matrix substitution_matrix(const Matrix& g, unsigned k) {
  const Field& f = *g.field();
  const Elem a = g(0, 0), b = g(0, 1), c = g(1, 0), d = g(1, 1);
  Matrix m(g.field(), k + 1, k + 1);
  // Monomial j is x^(k-j) y^j; its image (ax+cy)^(k-j) (bx+dy)^j expanded in
  // powers of y gives column j.
  for (unsigned j = 0; j <= k; ++j) {
    const auto f1 = binomial_power(f, a, c, k - j);
    const auto f2 = binomial_power(f, b, d, j);
    for (std::size_t s = 0; s < f1.size(); ++s) {
      if (!f1[s]) continue;
      for (std::size_t t = 0; t < f2.size(); ++t) m(s + t, j) = f.add(m(s + t, j), f.mul(f1[s], f2[t]));
    }
  }
  return m;
}

Representation pol_k(std::uint32_t p, unsigned k, bool allow_reducible) {
  check_range(p, k, allow_reducible);
  const GroupPtr g = make_SL2(p);
  std::vector<Matrix> gens;
  for (const auto& x : g->gen_matrices()) gens.push_back(substitution_matrix(x, k));
  return Representation::from_generator_images(g, g->field(), std::move(gens), "Pol_" + std::to_string(k));
}

Representation pol_k_r(std::uint32_t p, unsigned k, unsigned r, bool allow_reducible) {
  check_range(p, k, allow_reducible);
  if (r > p - 2 && !(p == 2 && r == 0)) {
    throw Error(ErrorKind::ROutOfRange, "r=" + std::to_string(r) + " outside 0.." + std::to_string(p - 2));
  }
  const GroupPtr g = make_GL2(p);
  const Field& f = *g->field();
  std::vector<Matrix> gens;
  for (const auto& x : g->gen_matrices()) gens.push_back(substitution_matrix(x, k).scaled(f.pow(determinant(x), r)));
  return Representation::from_generator_images(g, g->field(), std::move(gens),
                                                "Pol_" + std::to_string(k) + "(" + std::to_string(r) + ")");
}

// ---------------------------------------------------------------------------

Section2Report verify_section2(std::uint32_t p, const MeataxeOptions& opts) {
  if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p));
  Section2Report rep;
  rep.p = p;
  const GroupPtr sl = make_SL2(p);
  const GroupPtr gl = make_GL2(p);
  const FieldPtr fp = sl->field();
  const unsigned twists = p == 2 ? 1 : p - 1;

  std::vector<Representation> pols;
  for (unsigned k = 0; k < p; ++k) pols.push_back(pol_k(p, k));
  std::vector<std::vector<Representation>> polrs(p);
  for (unsigned k = 0; k < p; ++k)
    for (unsigned r = 0; r < twists; ++r) polrs[k].push_back(pol_k_r(p, k, r));

  {
    bool ok = true;
    for (const auto& x : pols) ok = ok && x.is_homomorphism(sl->size() <= 400);
    rep.checks.push_back(make_check("action-convention", ok, "P(x,y) -> P(ax+cy, bx+dy) is a left action"));
  }

  // SL2: irreducible, distinct, complete.
  {
    std::string detail;
    bool ok = true;
    for (const auto& x : pols) {
      const auto v = is_irreducible(x, opts);
      ok = ok && v.irreducible;
      detail += x.label() + ":" + (v.irreducible ? v.certificate : std::string("reducible")) + " ";
    }
    rep.checks.push_back(make_check("pol-irreducible", ok, detail));
  }
  {
    bool ok = true;
    std::vector<std::string> keys;
    for (const auto& x : pols) keys.push_back(character_key(brauer_character(x)));
    for (std::size_t i = 0; i < pols.size(); ++i)
      for (std::size_t j = i + 1; j < pols.size(); ++j)
        ok = ok && keys[i] != keys[j] && hom_dim(pols[i], pols[j]) == 0;
    rep.checks.push_back(make_check("pol-distinct", ok, "Brauer characters and Hom spaces"));
  }
  const auto regular_sl = p_regular_classes(*sl, p).size();
  rep.checks.push_back(make_check("pol-count", regular_sl == p && pols.size() == p,
                                  num(regular_sl) + " p-regular classes"));
  {
    const auto irr = enumerate_irreducibles(sl, p, opts);
    bool ok = irr.size() == p;
    for (const auto& x : irr) {
      ok = ok && std::any_of(pols.begin(), pols.end(), [&](const Representation& q) {
             auto [a, b] = common_field(q, x);
             return iso_irr(a, b);
           });
    }
    rep.checks.push_back(make_check("pol-exhaust", ok, num(irr.size()) + " irreducibles by tensor closure"));
  }

  // GL2: Pol_k(r).
  std::vector<Representation> flat;
  for (const auto& row : polrs)
    for (const auto& x : row) flat.push_back(x);
  {
    bool ok = true;
    for (const auto& x : flat) ok = ok && is_irreducible(x, opts).irreducible;
    rep.checks.push_back(make_check("polr-irreducible", ok, num(flat.size()) + " twisted representations"));
  }
  {
    bool ok = true;
    for (std::size_t i = 0; i < flat.size(); ++i)
      for (std::size_t j = i + 1; j < flat.size(); ++j)
        if (flat[i].degree() == flat[j].degree() && hom_dim(flat[i], flat[j]) != 0) ok = false;
    rep.checks.push_back(make_check("polr-distinct", ok, "pairwise Hom spaces vanish"));
  }
  {
    const auto irr = enumerate_irreducibles(gl, p, opts);
    const auto regular_gl = p_regular_classes(*gl, p).size();
    bool ok = irr.size() == flat.size() && regular_gl == flat.size();
    for (const auto& x : irr) {
      ok = ok && std::any_of(flat.begin(), flat.end(), [&](const Representation& q) {
             auto [a, b] = common_field(q, x);
             return iso_irr(a, b);
           });
    }
    rep.checks.push_back(make_check("polr-exhaust", ok,
                                    num(irr.size()) + " irreducibles by tensor closure, " + num(regular_gl) +
                                        " p-regular classes, " + num(flat.size()) + " twists"));
  }

  // Inertia groups and the restriction/induction identities.
  {
    bool ok = true;
    for (const auto& x : pols) ok = ok && inertia_group(x, gl, false, opts).inertia == gl;
    rep.checks.push_back(make_check("inertia-full", ok, "I_G(Pol_k) = G for all k"));
  }
  {
    bool ok = true;
    std::string detail;
    for (const auto& x : pols) {
      const auto m = multiplicity_in_semisimple(x, restrict(induce(x, gl), sl), opts);
      ok = ok && m == p - 1;
      detail += num(m) + " ";
    }
    rep.checks.push_back(make_check("res-ind-multiplicity", ok, "multiplicities " + detail + "expected " + num(p - 1)));
  }
  {
    bool ok = true;
    for (unsigned k = 0; k < p; ++k)
      for (const auto& x : polrs[k]) ok = ok && restrict(x, sl).images() == pols[k].images();
    rep.checks.push_back(make_check("res-twist-exact", ok, "Res Pol_k(r) equals Pol_k entry by entry"));
  }
  {
    bool ok = true;
    std::string detail;
    for (unsigned k = 0; k < p; ++k) {
      const auto cf = composition_factors(induce(pols[k], gl), opts);
      std::vector<int> hits(twists, 0);
      for (const auto& [f, m] : cf.factors) {
        for (unsigned r = 0; r < twists; ++r) {
          if (iso_irr(f, polrs[k][r])) hits[r] += static_cast<int>(m);
        }
      }
      const bool each_once = std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; });
      ok = ok && each_once && cf.count() == twists;
      detail += "k=" + std::to_string(k) + ":" + num(cf.count()) + " ";
    }
    rep.checks.push_back(make_check("ind-factors", ok, "factor counts " + detail));
  }
  {
    bool ok = true;
    for (unsigned k = 0; k < p; ++k)
      for (unsigned j = 0; j < p; ++j)
        for (const auto& x : polrs[j]) ok = ok && ((hom_dim(pols[k], restrict(x, sl)) > 0) == (j == k));
    rep.checks.push_back(make_check("ghat-pol", ok, "G-hat(Pol_k) = {Pol_k(r)}"));
  }

  // The unipotent matrix and the Weyl element.
  {
    bool rank_ok = true;
    bool swap_ok = true;
    const Matrix u = Matrix::from_ints(fp, {{1, 1}, {0, 1}});
    const Matrix w = Matrix::from_ints(fp, {{0, -1}, {1, 0}});
    for (unsigned k = 0; k < p; ++k) {
      const Matrix r = substitution_matrix(u, k);
      rank_ok = rank_ok && rank(r - Matrix::identity(fp, k + 1)) == k;
      const Matrix s = substitution_matrix(w, k);
      for (unsigned i = 0; i <= k; ++i) {
        const Elem e = s(i, 0);
        if (i == k ? (e != 1 && e != fp->neg(1)) : e != 0) swap_ok = false;
      }
    }
    const Matrix rp = substitution_matrix(u, p);
    const bool drops = rank(rp - Matrix::identity(fp, p + 1)) < p;
    rep.checks.push_back(make_check("unipotent-rank", rank_ok && drops,
                                    "rank(R_{k+1} - I) = k for k < p, and < p for k = p"));
    rep.checks.push_back(make_check("w-swap", swap_ok, "w sends the x^k coordinate to the y^k coordinate"));
  }
  {
    bool ok = true;
    for (unsigned k = 0; k < p; ++k) {
      const auto base = brauer_character(polrs[k][0]);
      for (unsigned r = 0; r < twists; ++r) {
        const auto chi = brauer_character(polrs[k][r]);
        const auto det = brauer_character(polrs[0][r]);
        for (std::size_t c = 0; c < chi.values.size(); ++c) ok = ok && chi.values[c] == base.values[c] * det.values[c];
      }
    }
    rep.checks.push_back(make_check("character-twist", ok, "chi(Pol_k(r)) = chi(Pol_k(0)) * chi(det^r)"));
  }
  return rep;
}

// ---------------------------------------------------------------------------

std::vector<std::string> polynomial_row_labels(const BrauerTable& t) {
  std::vector<std::string> labels;
  for (const auto& r : t.rows) labels.push_back(r.label);
  const std::uint32_t p = t.p;
  const bool is_sl = t.group == make_SL2(p);
  const bool is_gl = t.group == make_GL2(p);
  if (!is_sl && !is_gl) return labels;
  for (unsigned k = 0; k < p; ++k) {
    const unsigned twists = is_sl ? 1 : (p == 2 ? 1 : p - 1);
    for (unsigned r = 0; r < twists; ++r) {
      const auto chi = brauer_character(is_sl ? pol_k(p, k) : pol_k_r(p, k, r));
      for (std::size_t i = 0; i < t.rows.size(); ++i) {
        if (t.rows[i].values == chi.values) labels[i] = is_sl ? sigma_name(k) : theta_name(k, r);
      }
    }
  }
  return labels;
}

std::vector<std::vector<CyclotomicInt>> expected_table(int which) {
  auto z = [](std::int64_t v) { return CyclotomicInt::integer(v, 8); };
  const CyclotomicInt s = CyclotomicInt::root(8, 1) + CyclotomicInt::root(8, 3);  // sqrt(2) i
  if (which == 1) {
    return {{z(1), z(1), z(1)}, {z(2), z(-2), z(0)}, {z(3), z(3), z(-1)}};
  }
  return {
      {z(1), z(1), z(1), z(1), z(1), z(1)},
      {z(1), z(1), z(-1), z(-1), z(-1), z(1)},
      {z(2), z(-2), z(0), s, -s, z(0)},
      {z(2), z(-2), z(0), -s, s, z(0)},
      {z(3), z(3), z(1), z(-1), z(-1), z(-1)},
      {z(3), z(3), z(-1), z(1), z(1), z(-1)},
  };
}

TableComparison compare_with_paper(const BrauerTable& t, int which) {
  TableComparison cmp;
  std::vector<std::string> row_names;
  std::vector<std::size_t> sizes;
  std::vector<std::uint64_t> orders;
  if (which == 1) {
    cmp.title = "SL2(3), p=3";
    cmp.columns = {"I2", "-I2", "c4(z)"};
    cmp.mapped = {"I2", "-I2", "c4(w^2)"};
    row_names = {"sigma_0", "sigma_1", "sigma_2"};
    sizes = {1, 1, 6};
    orders = {1, 2, 4};
  } else {
    cmp.title = "GL2(3), p=3";
    cmp.columns = {"I2", "-I2", "c3(1,-1)", "c4(z)", "c4(-z)", "c4(z^2)"};
    cmp.mapped = {"I2", "-I2", "c3(1,-1)", "c4(w)", "c4(w^5)", "c4(w^2)"};
    row_names = {"theta_0,0", "theta_0,1", "theta_1,0", "theta_1,1", "theta_2,0", "theta_2,1"};
    sizes = {1, 1, 12, 6, 6, 6};
    orders = {1, 2, 2, 8, 8, 4};
    cmp.notes.push_back("class sizes are read as GL2(3) class sizes");
  }
  const auto expected = expected_table(which);

  std::vector<std::size_t> col;
  for (std::size_t j = 0; j < cmp.mapped.size(); ++j) {
    auto it = std::find(t.class_names.begin(), t.class_names.end(), cmp.mapped[j]);
    if (it == t.class_names.end()) {
      cmp.diffs.push_back({"class", cmp.columns[j], cmp.mapped[j], "missing"});
      continue;
    }
    const std::size_t c = static_cast<std::size_t>(it - t.class_names.begin());
    col.push_back(c);
    if (t.sizes[c] != sizes[j]) cmp.diffs.push_back({"|Cl|", cmp.columns[j], num(sizes[j]), num(t.sizes[c])});
    if (t.orders[c] != orders[j]) cmp.diffs.push_back({"o(g)", cmp.columns[j], num(orders[j]), num(t.orders[c])});
  }
  if (t.class_names.size() != cmp.columns.size()) {
    cmp.diffs.push_back({"classes", "*", num(cmp.columns.size()), num(t.class_names.size())});
  }
  if (t.rows.size() != expected.size()) cmp.diffs.push_back({"rows", "*", num(expected.size()), num(t.rows.size())});
  if (!cmp.diffs.empty()) return cmp;

  auto row_values = [&](std::size_t i) {
    std::vector<CyclotomicInt> v;
    for (std::size_t c : col) v.push_back(t.rows[i].values[c]);
    return v;
  };
  // Rows in table order first; otherwise as a multiset, which absorbs a
  // Galois twist exchanging conjugate rows.
  bool ordered = true;
  for (std::size_t i = 0; i < expected.size(); ++i) ordered = ordered && row_values(i) == expected[i];
  if (ordered) {
    cmp.matches = true;
    return cmp;
  }
  std::vector<bool> used(t.rows.size(), false);
  bool multiset = true;
  for (std::size_t i = 0; i < expected.size(); ++i) {
    bool found = false;
    for (std::size_t r = 0; r < t.rows.size() && !found; ++r) {
      if (!used[r] && row_values(r) == expected[i]) used[r] = found = true;
    }
    multiset = multiset && found;
  }
  if (multiset) {
    cmp.matches = true;
    cmp.galois_twist = true;
    cmp.notes.push_back("rows match after exchanging Galois-conjugate rows");
    return cmp;
  }
  for (std::size_t i = 0; i < expected.size(); ++i) {
    const auto v = row_values(i);
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (!(v[j] == expected[i][j])) cmp.diffs.push_back({row_names[i], cmp.columns[j], expected[i][j].display(), v[j].display()});
    }
  }
  return cmp;
}

PaperTables emit_paper_tables(const MeataxeOptions& opts) {
  PaperTables out;
  out.table1 = brauer_table(make_SL2(3), 3, opts);
  out.table2 = brauer_table(make_GL2(3), 3, opts);
  out.cmp1 = compare_with_paper(out.table1, 1);
  out.cmp2 = compare_with_paper(out.table2, 2);

  const auto labels = polynomial_row_labels(out.table2);
  const GroupPtr gl = make_GL2(3);
  out.induction_ok = true;
  for (unsigned k = 0; k < 3; ++k) {
    const auto cf = composition_factors(induce(pol_k(3, k), gl), opts);
    std::vector<std::string> names;
    bool ok = cf.count() == 2;
    std::vector<std::string> want{theta_name(k, 0), theta_name(k, 1)};
    for (const auto& [f, m] : cf.factors) {
      std::string name = "?";
      for (std::size_t i = 0; i < out.table2.irreducibles.size(); ++i) {
        auto [a, b] = common_field(out.table2.irreducibles[i], f);
        if (iso_irr(a, b)) name = labels[i];
      }
      for (std::size_t c = 0; c < m; ++c) names.push_back(name);
    }
    std::sort(names.begin(), names.end());
    ok = ok && names == want;
    out.induction_ok = out.induction_ok && ok;
    std::string line = "Ind " + sigma_name(k) + " =";
    for (std::size_t i = 0; i < names.size(); ++i) line += (i ? " + " : " ") + names[i];
    out.induction_lines.push_back(line + (ok ? "" : "  [mismatch]"));
  }
  return out;
}

}  // namespace modrep
