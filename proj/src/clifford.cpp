#include "modrep/clifford.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace modrep {

namespace {

Check make_check(std::string clause, bool passed, std::string detail = {}) {
  return Check{std::move(clause), passed, std::move(detail)};
}

std::string num(std::size_t x) { return std::to_string(x); }

// N-indices of N's generators mapped into G.
std::vector<std::size_t> gens_in(const CosetData& d) {
  std::vector<std::size_t> out;
  for (std::size_t j : d.subgroup->gens()) out.push_back(d.sub_in_group[j]);
  return out;
}

bool iso_irr(const Representation& a, const Representation& b) {
  return a.degree() == b.degree() && hom_dim(a, b) > 0;
}

// Composition multiplicity of each orbit member; returns false if some
// factor is outside the orbit.
bool orbit_multiplicities(const CompositionFactors& cf, const std::vector<Representation>& orbit,
                          std::vector<std::size_t>& mult) {
  mult.assign(orbit.size(), 0);
  bool inside = true;
  for (const auto& [factor, m] : cf.factors) {
    bool found = false;
    for (std::size_t i = 0; i < orbit.size(); ++i) {
      if (iso_irr(orbit[i], factor)) {
        mult[i] += m;
        found = true;
        break;
      }
    }
    if (!found) inside = false;
  }
  return inside;
}

std::string join(const std::vector<std::size_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + num(v[i]);
  return s;
}

void res_ind_checks(const Representation& sigma, const InertiaData& in, const MeataxeOptions& opts,
                    ResIndRecord& rec) {
  const GroupPtr& g = in.n_in_g.group;
  rec.inertia = in;
  rec.induced = induce(sigma, in.n_in_g);
  const Representation res = restrict(rec.induced, sigma.group());
  rec.res_ind = composition_factors(res, opts);
  const bool inside = orbit_multiplicities(rec.res_ind, in.orbit, rec.orbit_multiplicity);
  rec.end_dim = hom_dim(rec.induced, rec.induced);

  bool distinct = true;
  for (std::size_t i = 0; i < in.orbit.size(); ++i)
    for (std::size_t j = i + 1; j < in.orbit.size(); ++j)
      if (iso_irr(in.orbit[i], in.orbit[j])) distinct = false;
  const bool mult_ok = std::all_of(rec.orbit_multiplicity.begin(), rec.orbit_multiplicity.end(),
                                   [&](std::size_t m) { return m == in.d; });
  bool socle_ok = true;
  for (const auto& o : in.orbit) socle_ok = socle_ok && hom_dim(o, res) == in.d;
  std::size_t degree_sum = 0;
  for (const auto& [f, m] : rec.res_ind.factors) degree_sum += f.degree() * m;

  rec.checks.push_back(make_check("orbit-stabilizer", in.orbit.size() * in.inertia->size() == g->size(),
                                  num(in.orbit.size()) + "*" + num(in.inertia->size()) + " vs " + num(g->size())));
  rec.checks.push_back(make_check("orbit-distinct", distinct, "orbit size " + num(in.orbit.size())));
  rec.checks.push_back(make_check("res-ind-orbit", inside, "all factors of Res Ind lie in the orbit"));
  rec.checks.push_back(make_check("res-ind-multiplicity", mult_ok,
                                  "multiplicities [" + join(rec.orbit_multiplicity) + "], d=" + num(in.d)));
  rec.checks.push_back(make_check("res-ind-socle", socle_ok, "dim Hom(orbit member, Res Ind) = d"));
  rec.checks.push_back(make_check("end-dim", rec.end_dim == in.d, "dim End = " + num(rec.end_dim) + ", d=" + num(in.d)));
  rec.checks.push_back(make_check("degree-accounting", degree_sum == res.degree(),
                                  num(degree_sum) + " vs " + num(res.degree())));
}

}  // namespace

bool all_passed(const std::vector<Check>& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

bool is_p_group(std::size_t order, std::uint32_t p) {
  while (order % p == 0) order /= p;
  return order == 1;
}

bool is_cyclic(const Group& g) {
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g.order_of(i) == g.size()) return true;
  }
  return false;
}

CliffordContext make_clifford_context(const GroupPtr& g, const GroupPtr& n, std::uint32_t p,
                                      const MeataxeOptions& opts) {
  if (!is_normal(*g, *n)) throw Error(ErrorKind::NotNormal, n->name() + " is not normal in " + g->name());
  CliffordContext ctx;
  ctx.g = g;
  ctx.n = n;
  ctx.p = p;
  ctx.opts = opts;
  ctx.irr_g = enumerate_irreducibles(g, p, opts);
  ctx.irr_n = enumerate_irreducibles(n, p, opts);
  ctx.field = compositum(ctx.irr_g.front().field(), ctx.irr_n.front().field());
  for (auto& r : ctx.irr_g) r = rebase(r, ctx.field);
  for (auto& r : ctx.irr_n) r = rebase(r, ctx.field);
  return ctx;
}

InertiaData inertia_group(const Representation& sigma, const GroupPtr& g, bool naive, const MeataxeOptions& opts) {
  const GroupPtr& n = sigma.group();
  if (!is_normal(*g, *n)) throw Error(ErrorKind::NotNormal, n->name() + " is not normal in " + g->name());
  if (!is_irreducible(sigma, opts).irreducible) throw Error(ErrorKind::NotIrreducible, sigma.label());
  InertiaData in;
  in.n_in_g = coset_reps(g, n);
  auto fixes = [&](std::size_t x) { return iso_irr(conjugate(sigma, g->element(x)), sigma); };
  if (naive) {
    std::set<std::size_t> cosets;
    for (std::size_t x = 0; x < g->size(); ++x) {
      if (fixes(x)) cosets.insert(in.n_in_g.coset_of[x]);
    }
    in.stabilizing.assign(cosets.begin(), cosets.end());
  } else {
    for (std::size_t c = 0; c < in.n_in_g.index(); ++c) {
      if (c == 0 || fixes(in.n_in_g.reps[c])) in.stabilizing.push_back(c);
    }
  }
  in.d = in.stabilizing.size();
  if (in.d == in.n_in_g.index()) {
    in.inertia = g;
  } else if (in.d == 1) {
    in.inertia = n;
  } else {
    std::vector<std::size_t> gens = gens_in(in.n_in_g);
    for (std::size_t c : in.stabilizing) gens.push_back(in.n_in_g.reps[c]);
    in.inertia = subgroup_generated(*g, gens, "I_" + g->name() + "(" + sigma.label() + ")");
    if (in.inertia->size() != in.d * n->size()) {
      throw Error(ErrorKind::PaperCheckFailure, "stabilizing cosets do not form a subgroup");
    }
  }
  in.i_in_g = coset_reps(g, in.inertia);
  for (std::size_t c = 0; c < in.i_in_g.index(); ++c) {
    if (c == 0) {
      in.orbit.push_back(sigma);
      continue;
    }
    in.orbit.push_back(conjugate(sigma, g->element(in.i_in_g.reps[c])).relabeled("^r" + num(c) + "(" + sigma.label() + ")"));
  }
  return in;
}

ResIndRecord res_ind_decompose(const Representation& sigma, const GroupPtr& g, const MeataxeOptions& opts) {
  ResIndRecord rec;
  res_ind_checks(sigma, inertia_group(sigma, g, false, opts), opts, rec);
  return rec;
}

RestrictionRecord clifford_restrict(const Representation& theta, const InertiaData& inertia,
                                    const MeataxeOptions& opts) {
  RestrictionRecord rec;
  const Representation& sigma = inertia.orbit.front();
  const Representation res = restrict(theta, sigma.group());
  const auto cf = composition_factors(res, opts);
  if (!orbit_multiplicities(cf, inertia.orbit, rec.orbit_multiplicity)) {
    throw Error(ErrorKind::OrbitMismatch, "Res " + theta.label() + " has a factor outside the orbit of " + sigma.label());
  }
  rec.ell = rec.orbit_multiplicity.front();
  const bool common = std::all_of(rec.orbit_multiplicity.begin(), rec.orbit_multiplicity.end(),
                                  [&](std::size_t m) { return m == rec.ell; });
  if (!common) {
    throw Error(ErrorKind::OrbitMismatch, "unequal multiplicities [" + join(rec.orbit_multiplicity) + "] in Res " +
                                              theta.label());
  }
  rec.socle_multiplicity = hom_dim(sigma, res);
  rec.checks.push_back(make_check("restriction-orbit", true, "ell=" + num(rec.ell)));
  rec.checks.push_back(make_check("restriction-semisimple", rec.socle_multiplicity == rec.ell,
                                  "dim Hom(sigma, Res theta)=" + num(rec.socle_multiplicity) +
                                      ", composition multiplicity=" + num(rec.ell)));
  rec.checks.push_back(make_check("restriction-degree",
                                  theta.degree() == rec.ell * inertia.orbit.size() * sigma.degree(),
                                  num(theta.degree()) + " = " + num(rec.ell) + "*" + num(inertia.orbit.size()) + "*" +
                                      num(sigma.degree())));
  return rec;
}

CorollaryRecord induced_irreducibility_check(const Representation& sigma, const GroupPtr& g,
                                             const MeataxeOptions& opts, bool strict) {
  CorollaryRecord rec;
  const InertiaData in = inertia_group(sigma, g, false, opts);
  rec.inertia_is_n = in.d == 1;
  rec.induced_irreducible = is_irreducible(induce(sigma, in.n_in_g), opts).irreducible;
  const bool agree = rec.inertia_is_n == rec.induced_irreducible;
  rec.checks.push_back(make_check("induced-irreducible-iff-inertia-trivial", agree,
                                  std::string("Ind irreducible: ") + (rec.induced_irreducible ? "yes" : "no") +
                                      ", I = N: " + (rec.inertia_is_n ? "yes" : "no")));
  if (strict && !agree) throw Error(ErrorKind::PaperCheckFailure, rec.checks.back().detail);
  return rec;
}

// ---------------------------------------------------------------------------

CliffordReport clifford_correspondence(const Representation& sigma_in, CliffordContext& ctx) {
  Representation sigma = rebase(sigma_in, ctx.field);
  InertiaData in = inertia_group(sigma, ctx.g, false, ctx.opts);

  // Factors of Ind_N^I sigma must be absolutely irreducible; enlarge the
  // common field otherwise.
  auto ind_to_inertia = [&](const Representation& s, const InertiaData& d) {
    return d.inertia == s.group() ? s : induce(s, coset_reps(d.inertia, s.group()));
  };
  Representation ind_ni = ind_to_inertia(sigma, in);
  CompositionFactors phis = composition_factors(ind_ni, ctx.opts);
  const bool split = std::all_of(phis.factors.begin(), phis.factors.end(),
                                 [](const auto& f) { return hom_dim(f.first, f.first) == 1; });
  if (!split) {
    const auto sf = ensure_splitting_field({ind_ni}, ctx.opts);
    ctx.field = compositum(ctx.field, sf.field);
    for (auto& r : ctx.irr_g) r = rebase(r, ctx.field);
    for (auto& r : ctx.irr_n) r = rebase(r, ctx.field);
    sigma = rebase(sigma, ctx.field);
    in = inertia_group(sigma, ctx.g, false, ctx.opts);
    ind_ni = ind_to_inertia(sigma, in);
    phis = composition_factors(ind_ni, ctx.opts);
  }

  CliffordReport rep;
  rep.sigma_label = sigma.label();
  rep.sigma_degree = sigma.degree();
  rep.inertia = in;

  ResIndRecord ri;
  res_ind_checks(sigma, in, ctx.opts, ri);
  for (auto& c : ri.checks) rep.checks.push_back(std::move(c));

  // Corollary: both sides computed separately.
  {
    const bool ind_irr = is_irreducible(ri.induced, ctx.opts).irreducible;
    rep.checks.push_back(make_check("induced-irreducible-iff-inertia-trivial", ind_irr == (in.d == 1),
                                    std::string("Ind irreducible: ") + (ind_irr ? "yes" : "no") +
                                        ", d=" + num(in.d)));
  }

  // G-hat(sigma) from the independent enumeration, under both readings of
  // "sigma lies in Res theta".
  bool readings_agree = true;
  bool restrictions_ok = true;
  std::string restriction_detail;
  for (std::size_t i = 0; i < ctx.irr_g.size(); ++i) {
    const Representation res = restrict(ctx.irr_g[i], sigma.group());
    const bool sub = hom_dim(sigma, res) > 0;
    const bool factor = composition_factors(res, ctx.opts).multiplicity_of(sigma) > 0;
    if (sub != factor) readings_agree = false;
    if (!sub) continue;
    rep.ghat.push_back(i);
    try {
      auto rr = clifford_restrict(ctx.irr_g[i], in, ctx.opts);
      rep.ghat_ell.push_back(rr.ell);
      for (const auto& c : rr.checks) {
        if (!c.passed) {
          restrictions_ok = false;
          restriction_detail += ctx.irr_g[i].label() + ": " + c.clause + " (" + c.detail + "); ";
        }
      }
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::OrbitMismatch) throw;
      rep.ghat_ell.push_back(0);
      restrictions_ok = false;
      restriction_detail += std::string(e.what()) + "; ";
    }
  }
  rep.checks.push_back(make_check("ghat-readings-agree", readings_agree,
                                  "submodule and composition-factor readings coincide"));
  rep.checks.push_back(make_check("restriction-single-orbit", restrictions_ok,
                                  restrictions_ok ? "ell = [" + join(rep.ghat_ell) + "]" : restriction_detail));

  // Correspondence.
  const CosetData i_cosets = in.i_in_g;
  bool all_irreducible = true;
  bool ell_phi_ok = true;
  bool ell_ind_ok = true;
  bool res_phi_ok = true;
  std::size_t degree_sum = 0;
  for (std::size_t k = 0; k < phis.factors.size(); ++k) {
    const auto& [phi, c] = phis.factors[k];
    CorrespondenceEntry e;
    e.phi = phi.relabeled("phi" + num(k) + "[" + sigma.label() + "]");
    e.composition_multiplicity = c;
    e.m = hom_dim(ind_ni, phi);
    const Representation res_phi = restrict(phi, sigma.group());
    e.ell_phi = hom_dim(sigma, res_phi);
    e.induced = (in.inertia == ctx.g ? e.phi : induce(e.phi, i_cosets)).relabeled("Ind(" + e.phi.label() + ")");
    e.ell_induced = hom_dim(sigma, restrict(e.induced, sigma.group()));
    if (!is_irreducible(e.induced, ctx.opts).irreducible) all_irreducible = false;
    for (std::size_t i = 0; i < ctx.irr_g.size(); ++i) {
      if (iso_irr(ctx.irr_g[i], e.induced)) {
        e.theta_index = static_cast<long>(i);
        break;
      }
    }
    if (e.ell_phi != e.m) ell_phi_ok = false;
    if (e.ell_induced != e.m) ell_ind_ok = false;
    const auto cf_res = composition_factors(res_phi, ctx.opts);
    const bool only_sigma = cf_res.distinct() == 1 && iso_irr(cf_res.factors[0].first, sigma) &&
                            cf_res.factors[0].second == e.m;
    if (!only_sigma || e.ell_phi * sigma.degree() != phi.degree()) res_phi_ok = false;
    degree_sum += c * e.induced.degree();
    rep.correspondence.push_back(std::move(e));
  }
  std::vector<std::size_t> hit;
  bool into_ghat = true;
  for (const auto& e : rep.correspondence) {
    if (e.theta_index < 0) {
      into_ghat = false;
      continue;
    }
    const auto t = static_cast<std::size_t>(e.theta_index);
    if (std::find(rep.ghat.begin(), rep.ghat.end(), t) == rep.ghat.end()) into_ghat = false;
    hit.push_back(t);
  }
  std::vector<std::size_t> sorted_hit = hit;
  std::sort(sorted_hit.begin(), sorted_hit.end());
  const bool injective = std::adjacent_find(sorted_hit.begin(), sorted_hit.end()) == sorted_hit.end() &&
                         hit.size() == rep.correspondence.size();
  sorted_hit.erase(std::unique(sorted_hit.begin(), sorted_hit.end()), sorted_hit.end());
  const bool surjective = sorted_hit == rep.ghat;
  const std::size_t index = ctx.g->size() / sigma.group()->size();

  rep.checks.push_back(make_check("correspondence-irreducible", all_irreducible, "every Ind_I^G phi is irreducible"));
  rep.checks.push_back(make_check("correspondence-into-ghat", into_ghat, "every Ind_I^G phi lies over sigma"));
  rep.checks.push_back(make_check("correspondence-injective", injective, num(rep.correspondence.size()) + " phi"));
  rep.checks.push_back(make_check("correspondence-surjective", surjective,
                                  "images [" + join(sorted_hit) + "] vs G-hat(sigma) [" + join(rep.ghat) + "]"));
  rep.checks.push_back(make_check("inertia-index-phi", ell_phi_ok, "dim Hom_N(sigma, Res phi) = m_phi"));
  rep.checks.push_back(make_check("inertia-index-induced", ell_ind_ok, "dim Hom_N(sigma, Res Ind phi) = m_phi"));
  rep.checks.push_back(make_check("res-phi-multiple", res_phi_ok, "Res_N^I phi = m_phi sigma"));
  rep.checks.push_back(make_check("degree-identity", degree_sum == index * sigma.degree(),
                                  num(degree_sum) + " vs " + num(index * sigma.degree())));
  return rep;
}

std::vector<std::size_t> orbit_representatives(CliffordContext& ctx) {
  std::vector<std::size_t> reps;
  std::vector<bool> covered(ctx.irr_n.size(), false);
  for (std::size_t i = 0; i < ctx.irr_n.size(); ++i) {
    if (covered[i]) continue;
    reps.push_back(i);
    const auto in = inertia_group(ctx.irr_n[i], ctx.g, false, ctx.opts);
    for (std::size_t j = i; j < ctx.irr_n.size(); ++j) {
      for (const auto& o : in.orbit) {
        if (iso_irr(o, ctx.irr_n[j])) covered[j] = true;
      }
    }
  }
  return reps;
}

// ---------------------------------------------------------------------------

GreenRecord green_verify(const GroupPtr& g, const GroupPtr& n, const Representation& theta_in, std::uint32_t p,
                         const std::vector<Representation>& irr_g, const MeataxeOptions& opts) {
  const QuotientGroup q = quotient(g, n);
  if (!is_p_group(q.group->size(), p)) {
    throw Error(ErrorKind::HypothesisViolation,
                g->name() + "/" + n->name() + " has order " + num(q.group->size()) + ", not a power of " + num(p));
  }
  if (n->size() % p != 0) throw Error(ErrorKind::HypothesisViolation, num(p) + " does not divide |" + n->name() + "|");
  FieldPtr field = theta_in.field();
  for (const auto& t : irr_g) field = compositum(field, t.field());
  const Representation theta = rebase(theta_in, field);
  const Representation sigma = restrict(theta, n);
  if (!is_irreducible(sigma, opts).irreducible) throw Error(ErrorKind::NotIrreducible, "Res " + theta.label());

  GreenRecord rec;
  rec.theta = theta;
  rec.index = q.group->size();
  const auto reg = composition_factors(regular(q.group, field), opts);
  const bool unique_psi = reg.distinct() == 1 && reg.factors[0].first.degree() == 1 &&
                          reg.factors[0].second == q.group->size();
  rec.checks.push_back(make_check("quotient-unique-irreducible", unique_psi,
                                  num(reg.distinct()) + " distinct factors of the regular module of G/N"));
  const Representation psi = reg.factors[0].first.relabeled("psi");
  rec.psi_bar = inflate(psi, q);
  const Representation target = tensor(theta, rec.psi_bar);

  const auto cf = composition_factors(induce(sigma, g), opts);
  const bool multiple_ok = cf.distinct() == 1 && iso_irr(cf.factors[0].first, target) && cf.factors[0].second == rec.index;
  rec.checks.push_back(make_check("green-induced-multiple", multiple_ok,
                                  "Ind sigma has " + num(cf.count()) + " factors in " + num(cf.distinct()) +
                                      " classes; [G:N]=" + num(rec.index)));

  bool unique = true;
  std::size_t extensions = 0;
  for (const auto& t : irr_g) {
    const Representation tr = rebase(t, field);
    if (tr.degree() != sigma.degree() || !isomorphic(restrict(tr, n), sigma, opts.seed)) continue;
    ++extensions;
    if (!iso_irr(tr, target)) unique = false;
  }
  rec.checks.push_back(make_check("green-uniqueness", unique && extensions >= 1,
                                  num(extensions) + " irreducibles of G restrict to sigma"));
  return rec;
}

ExtensionResult extension_search(const Representation& sigma_in, const CliffordContext& ctx, ExtensionCase which) {
  const QuotientGroup q = quotient(ctx.g, ctx.n);
  const std::size_t index = q.group->size();
  std::string log;
  if (which == ExtensionCase::CyclicQuotient) {
    if (!is_cyclic(*q.group)) throw Error(ErrorKind::HypothesisViolation, "G/N is not cyclic");
    log = "case i (G/N cyclic of order " + num(index) + ")";
  } else {
    if (std::gcd(ctx.n->size(), index) != 1) {
      throw Error(ErrorKind::HypothesisViolation,
                  "gcd(|N|, [G:N]) = gcd(" + num(ctx.n->size()) + ", " + num(index) + ") != 1");
    }
    log = "case ii (gcd(|N|,[G:N]) = 1)";
  }
  const Representation sigma = rebase(sigma_in, ctx.field);
  const auto in = inertia_group(sigma, ctx.g, false, ctx.opts);
  if (in.inertia != ctx.g) throw Error(ErrorKind::HypothesisViolation, "inertia group of " + sigma.label() + " is not G");
  ExtensionResult out;
  for (const auto& t : ctx.irr_g) {
    if (t.degree() != sigma.degree()) continue;
    if (isomorphic(restrict(t, ctx.n), sigma, ctx.opts.seed)) {
      out.theta = t;
      break;
    }
  }
  out.log = log + ", " + ctx.g->name() + " over " + ctx.n->name() + ", sigma=" + sigma.label() + ": " +
            (out.theta ? "extension " + out.theta->label() : std::string("no extension found"));
  return out;
}

}  // namespace modrep
