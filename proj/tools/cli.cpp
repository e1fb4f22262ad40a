#include <CLI11.hpp>
#include <iostream>

#include "sextic/jsonio.hpp"

using namespace sextic;

namespace {

int g_pretty = 0;

void emit(const json& payload) {
  json out{{"status", "ok"}, {"payload", payload}};
  std::cout << (g_pretty ? out.dump(2) : out.dump()) << "\n";
}

void emit_with_diagnostics(const json& payload, const std::vector<std::string>& diags) {
  json d = json::array();
  for (const auto& s : diags) d.push_back(s);
  json out{{"status", "ok"}, {"payload", payload}, {"diagnostics", d}};
  std::cout << (g_pretty ? out.dump(2) : out.dump()) << "\n";
}

json parse_json_arg(const std::string& s) { return json::parse(s); }

TrigonalCurve curve_from_cli(const std::string& curve, const std::string& curve_json) {
  if (!curve.empty()) return TrigonalCurve::from_string(curve);
  if (!curve_json.empty()) return curve_from_json(parse_json_arg(curve_json));
  std::string line, all;
  while (std::getline(std::cin, line)) all += line;
  json j = json::parse(all);
  return curve_from_json(j.contains("curve") ? j.at("curve") : j);
}

json table1_rows() {
  json rows = json::array();
  rows.push_back({{"fiber", "I0"}, {"synonym", "A~0"}, {"point", "J2,0"}});
  rows.push_back({{"fiber", "I1"}, {"synonym", "A~0*"}, {"point", "J2,1"}});
  rows.push_back({{"fiber", "II"}, {"synonym", "A~0**"}, {"point", "E12"}});
  rows.push_back({{"fiber", "III"}, {"synonym", "A~1*"}, {"point", "E13"}});
  rows.push_back({{"fiber", "IV"}, {"synonym", "A~2*"}, {"point", "E14"}});
  rows.push_back({{"fiber", "IV*"}, {"synonym", "E~6"}, {"point", "E18"}});
  rows.push_back({{"fiber", "III*"}, {"synonym", "E~7"}, {"point", "E19"}});
  rows.push_back({{"fiber", "II*"}, {"synonym", "E~8"}, {"point", "E20"}});
  rows.push_back({{"fiber", "In, n>=2"}, {"synonym", "A~p, p=n-1>=1"}, {"point", "J2,n"}});
  rows.push_back({{"fiber", "In*, n>=0"}, {"synonym", "D~q, q=n+4"}, {"point", "J3,n"}});
  return rows;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact toolkit for trigonal models of plane sextics"};
  app.set_help_all_flag("--help-all");
  app.add_flag("--pretty", g_pretty, "pretty-print the JSON output");
  app.require_subcommand(1);

  // ---- lattice ----
  auto* lat = app.add_subcommand("lattice", "integer lattices, E8 embeddings, torsion");
  lat->require_subcommand(1);
  std::string mat_json, spec_str, pred_spec;
  int dihedral_n = 3;

  auto* snf = lat->add_subcommand("snf", "Smith normal form of an integer matrix");
  snf->add_option("matrix", mat_json, "matrix as JSON rows")->required();
  snf->callback([&] {
    IMat m = imat_from_json(parse_json_arg(mat_json));
    auto s = smith_normal_form(m);
    json diag = json::array();
    for (int i = 0; i < std::min(s.d.rows(), s.d.cols()); ++i) diag.push_back(to_json(s.d(i, i)));
    emit(json{{"u", to_json(s.u)}, {"d", to_json(s.d)}, {"v", to_json(s.v)}, {"diagonal", diag}});
  });

  auto* discr = lat->add_subcommand("discr", "discriminant group of a nondegenerate lattice");
  discr->add_option("lattice", mat_json, "{\"rank\": n, \"gram\": [[..]]} or a bare gram matrix")->required();
  discr->callback([&] {
    json j = parse_json_arg(mat_json);
    GramLattice l = j.is_array() ? GramLattice(static_cast<int>(j.size()), imat_from_json(j)) : lattice_from_json(j);
    emit(to_json(discriminant_group(l)));
  });

  auto* embed = lat->add_subcommand("embed", "search a root-subsystem embedding into E8");
  embed->add_option("spec", spec_str, "ADE spec, e.g. \"A5+A2+A1\" or \"3A2\"")->required();
  embed->callback([&] {
    auto w = find_embedding(parse_spec(spec_str));
    json out{{"spec", parse_spec(spec_str).name()}, {"embeds", w.has_value()}};
    if (w) {
      out["witness"] = to_json(*w);
      out["torsion"] = to_json(w->roots.empty() ? TorsionGroup{} : quotient_torsion(w->embedding()));
    }
    emit(out);
  });

  auto* cls = lat->add_subcommand("classify-odd-torsion", "all root subsystems of E8 with odd nontrivial quotient torsion");
  cls->callback([&] {
    json rows = json::array();
    for (const auto& r : classify_odd_torsion()) rows.push_back(to_json(r));
    emit(rows);
  });

  auto* clp = lat->add_subcommand("classify-pred", "scan root subsystems by a torsion predicate");
  std::vector<int> divisors;
  bool pred_odd = false, pred_nontrivial = false;
  clp->add_option("--divisor", divisors, "require n-torsion for each given n (repeatable)");
  clp->add_flag("--odd", pred_odd, "require |K| odd");
  clp->add_flag("--nontrivial", pred_nontrivial, "require K nontrivial");
  clp->callback([&] {
    auto pred = [&](const TorsionGroup& k) {
      if (pred_nontrivial && k.trivial()) return false;
      if (pred_odd && k.order() % 2 == 0) return false;
      for (int d : divisors) {
        bool has = false;
        for (const Int& f : k.invariant_factors)
          if (f % d == 0) has = true;
        if (!has) return false;
      }
      return true;
    };
    json rows = json::array();
    for (const auto& r : classify_by_predicate(pred)) rows.push_back(to_json(r));
    emit(rows);
  });

  auto* dih = lat->add_subcommand("dihedral-count", "number of Z/n subgroups of Tor(K, Z/n)");
  dih->add_option("spec", spec_str, "ADE spec")->required();
  dih->add_option("-n", dihedral_n, "prime n")->required();
  dih->callback([&] {
    int c = dihedral_quotient_count(parse_spec(spec_str), Int(dihedral_n));
    emit(json{{"spec", parse_spec(spec_str).name()}, {"n", dihedral_n}, {"count", c}});
  });

  auto* vl = lat->add_subcommand("verify-lemma-e8", "certificates for the rank-10 orthogonal complement");
  vl->callback([&] { emit(to_json(verify_lemma_e8())); });

  // ---- trigonal ----
  auto* tri = app.add_subcommand("trigonal", "trigonal curve analysis");
  tri->require_subcommand(1);
  std::string curve_str, curve_json, fiber_json;
  Rat fiber_x;

  auto add_curve_opts = [&](CLI::App* cmd) {
    cmd->add_option("--curve", curve_str, "plain-text equation, e.g. \"y^3 + (x^3+1)^2\"");
    cmd->add_option("--curve-json", curve_json, "JSON {\"a\":[..],\"b\":[..],\"c\":[..]} ascending");
  };

  auto* red = tri->add_subcommand("reduce", "eliminate the y^2 term");
  add_curve_opts(red);
  red->callback([&] {
    ReducedModel m = reduce(curve_from_cli(curve_str, curve_json));
    emit(json{{"P", to_json(m.P)}, {"Q", to_json(m.Q)}, {"discriminant", to_json(m.discriminant())}});
  });

  auto* fib = tri->add_subcommand("fibers", "Kodaira types of the singular fibers");
  add_curve_opts(fib);
  fib->callback([&] {
    ReducedModel m = reduce(curve_from_cli(curve_str, curve_json));
    auto fibers = singular_fibers(m);
    json rows = json::array();
    int total = 0;
    bool minimal = true;
    for (const auto& f : fibers) {
      rows.push_back(to_json(f));
      total += f.euler_total;
      minimal = minimal && f.kodaira.minimal();
    }
    json out{{"fibers", rows}, {"total_euler", total}};
    if (minimal) out["sigma"] = sigma_from_fibers(m).name();
    emit(out);
  });

  auto* sing = tri->add_subcommand("singularities", "classify the singular points of the curve");
  add_curve_opts(sing);
  sing->callback([&] {
    json rows = json::array();
    for (const auto& r : classify_singular_points(curve_from_cli(curve_str, curve_json))) rows.push_back(to_json(r));
    emit(rows);
  });

  auto* gen = tri->add_subcommand("genus", "genus bookkeeping 4 - sum of deltas");
  add_curve_opts(gen);
  gen->callback([&] { emit(json{{"genus", genus(curve_from_cli(curve_str, curve_json))}}); });

  auto* sx = tri->add_subcommand("sextic", "singularities of the sextic for a chosen fiber");
  add_curve_opts(sx);
  sx->add_option("--fiber", fiber_json, "{\"x\": \"r\"} | \"inf\" | {\"minpoly\": [..]}")->required();
  sx->callback([&] {
    ReducedModel m = reduce(curve_from_cli(curve_str, curve_json));
    emit(to_json(sextic_singularities(m, fiber_choice_from_json(parse_json_arg(fiber_json)))));
  });

  std::string at_str = "0";
  auto* cub = tri->add_subcommand("cubic", "associated cubic at a triple point");
  add_curve_opts(cub);
  cub->add_option("--at", at_str, "fiber x-coordinate of the triple point");
  cub->callback([&] {
    emit(to_json(associated_cubic(curve_from_cli(curve_str, curve_json), rat_from_string(at_str))));
  });
  auto* qua = tri->add_subcommand("quartic", "associated quartic at a double point");
  add_curve_opts(qua);
  qua->add_option("--at", at_str, "fiber x-coordinate of the double point");
  qua->callback([&] {
    json out = to_json(associated_quartic(curve_from_cli(curve_str, curve_json), rat_from_string(at_str)));
    out["point"] = "(0:1:0)";
    out["line"] = "x = 0";
    emit(out);
  });

  // ---- torus ----
  auto* tor = app.add_subcommand("torus", "torus structures p^3 + q^2");
  tor->require_subcommand(1);
  std::string structure_json;

  auto* det = tor->add_subcommand("detect", "find all torus structures");
  add_curve_opts(det);
  det->callback([&] {
    ReducedModel m = reduce(curve_from_cli(curve_str, curve_json));
    auto rep = detect_torus(m);
    json out = to_json(rep);
    json splits = json::array();
    for (const auto& s : rep.structures) splits.push_back(to_json(inner_outer_split(m, s)));
    out["inner_outer"] = splits;
    emit_with_diagnostics(out, rep.diagnostics);
  });

  auto* ver = tor->add_subcommand("verify", "check one structure exactly");
  add_curve_opts(ver);
  ver->add_option("--structure", structure_json, "{\"b\":[..],\"l\":[..],\"e\":[..],\"minpoly\"?:[..]}")->required();
  ver->callback([&] {
    ReducedModel m = reduce(curve_from_cli(curve_str, curve_json));
    bool ok = verify_torus(m, torus_structure_from_json(parse_json_arg(structure_json)));
    emit(json{{"verified", ok}});
  });

  auto* exp = tor->add_subcommand("expected", "3-torsion subgroup count for a spec");
  exp->add_option("spec", spec_str, "ADE spec")->required();
  exp->callback([&] {
    emit(json{{"spec", parse_spec(spec_str).name()}, {"count", expected_torus_count(parse_spec(spec_str))}});
  });

  auto* io = tor->add_subcommand("inner-outer", "inner/outer split of the singular points");
  add_curve_opts(io);
  io->add_option("--structure", structure_json, "structure JSON; defaults to each detected one")->required();
  io->callback([&] {
    ReducedModel m = reduce(curve_from_cli(curve_str, curve_json));
    emit(to_json(inner_outer_split(m, torus_structure_from_json(parse_json_arg(structure_json)))));
  });

  // ---- group ----
  auto* grp = app.add_subcommand("group", "free-group monodromies, presentations, quotients");
  grp->require_subcommand(1);
  std::string fiber_type, group_expr, group_expr2;
  std::vector<std::string> gens, rels;
  int order_bound = 24;

  auto* mon = grp->add_subcommand("monodromy", "explicit braid monodromy of a special fiber");
  mon->add_option("type", fiber_type, "A0**, A1* or A2*")->required();
  mon->callback([&] {
    SpecialFiber f = special_fiber_from_name(fiber_type);
    Endomorphism m = monodromy(f);
    std::vector<std::string> names{"a1", "a2", "a3"};
    json imgs = json::array();
    for (const auto& w : m.images) imgs.push_back(word_text(w, names));
    Word pi = monodromy_product();
    emit(json{{"type", special_fiber_name(f)},
              {"images", imgs},
              {"product", word_text(pi, names)},
              {"fixes_product", m.apply(pi) == pi}});
  });

  auto* pres = grp->add_subcommand("present", "local van Kampen presentation of a special fiber");
  pres->add_option("type", fiber_type, "A0**, A1* or A2*")->required();
  pres->callback([&] {
    Presentation p = local_presentation(special_fiber_from_name(fiber_type));
    json rl = json::array();
    for (const auto& r : p.relators) rl.push_back(word_text(r, p.names()));
    emit(json{{"ngens", p.ngens}, {"relators", rl}});
  });

  auto add_pres_opts = [&](CLI::App* cmd) {
    cmd->add_option("--gens", gens, "generator names")->delimiter(',');
    cmd->add_option("--rel", rels, "relators, '=' sugar allowed (repeatable)");
    cmd->add_option("--fiber", fiber_type, "use the local presentation of a special fiber instead");
  };
  auto pres_from_cli = [&]() -> Presentation {
    if (!fiber_type.empty()) return local_presentation(special_fiber_from_name(fiber_type));
    return parse_presentation(gens, rels);
  };

  auto* ab = grp->add_subcommand("abelianize", "rank and torsion of the abelianization");
  add_pres_opts(ab);
  ab->callback([&] {
    auto [rank, tors] = abelianization(pres_from_cli());
    emit(json{{"rank", rank}, {"torsion", to_json(tors)}});
  });

  auto* homs = grp->add_subcommand("homs", "count homomorphisms into a finite group");
  add_pres_opts(homs);
  homs->add_option("--group", group_expr, "e.g. S3, D10xC3, sd(5,6,-1)")->required();
  homs->callback([&] {
    Presentation p = pres_from_cli();
    FiniteGroup g = group_from_expression(group_expr);
    long n = hom_count(p, g);
    emit(json{{"group", g.name()}, {"order", g.order()}, {"count", n}, {"epimorphism", epimorphism_exists(p, g)}});
  });

  auto* spec_cmd = grp->add_subcommand("spectrum", "hom counts over all groups up to an order bound");
  add_pres_opts(spec_cmd);
  spec_cmd->add_option("--bound", order_bound, "catalogue order bound (<= 24)");
  spec_cmd->callback([&] {
    json out = json::object();
    for (const auto& [name, count] : hom_count_spectrum(pres_from_cli(), order_bound)) out[name] = count;
    emit(out);
  });

  auto* alex = grp->add_subcommand("alexander", "Fox-calculus Alexander polynomial");
  add_pres_opts(alex);
  alex->callback([&] { emit(to_json(fox_alexander(pres_from_cli()))); });

  auto* iso = grp->add_subcommand("iso", "brute-force isomorphism test (order <= 60)");
  iso->add_option("first", group_expr)->required();
  iso->add_option("second", group_expr2)->required();
  iso->callback([&] {
    FiniteGroup a = group_from_expression(group_expr), b = group_from_expression(group_expr2);
    emit(json{{"first", a.name()}, {"second", b.name()}, {"isomorphic", is_isomorphic_small(a, b)}});
  });

  // ---- tables ----
  auto* tables = app.add_subcommand("tables", "fiber/point dictionary and the prohibition verdicts");
  tables->callback([&] {
    json out;
    out["table1"] = table1_rows();
    // non-embeddable lattices rule out the J-sextics built on them
    json noj = json::array();
    for (const char* s : {"A3+2A2", "A4+2A2", "A6+A2"}) {
      RootSystemSpec sp = parse_spec(s);
      noj.push_back(json{{"sigma", sp.name()},
                         {"embeds", find_embedding(sp).has_value()},
                         {"verdict", "prohibited (no embedding into E8)"}});
    }
    // four cusps use up the twelve fibers three at a time
    noj.push_back(json{{"sigma", "4A2 with an extra I1 fiber"},
                       {"verdict", "prohibited (4 cusps consume all twelve fibers, none left of type I1)"}});
    out["no_j10"] = noj;
    json noe = json::array();
    for (const char* s : {"3A2", "3A2+A1", "A5+A2", "A8", "E6+A2", "4A2", "2A4"}) {
      RootSystemSpec sp = parse_spec(s);
      int d3 = dihedral_quotient_count(sp, 3), d5 = dihedral_quotient_count(sp, 5);
      noe.push_back(json{{"sigma", sp.name()},
                         {"dihedral_quotients", d3 + d5 > 0},
                         {"verdict", "E12+sigma prohibited (a dihedral quotient exists but the E12 fiber forces an "
                                     "abelian group)"}});
    }
    for (const char* s : {"A3+2A2", "A4+2A2", "A6+A2"}) {
      noe.push_back(json{{"sigma", parse_spec(s).name()},
                         {"dihedral_quotients", false},
                         {"verdict", "E12+sigma prohibited (no embedding into E8)"}});
    }
    out["no_e12"] = noe;
    emit(out);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const std::exception& e) {
    json out{{"status", "error"}, {"reason", e.what()}};
    std::cout << (g_pretty ? out.dump(2) : out.dump()) << "\n";
    return 1;
  }
  return 0;
}
