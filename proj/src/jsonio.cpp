#include "sextic/jsonio.hpp"

namespace sextic {

json to_json(const Int& v) {
  if (v >= std::numeric_limits<int64_t>::min() && v <= std::numeric_limits<int64_t>::max())
    return static_cast<int64_t>(v);
  return v.str();
}

json to_json(const Rat& v) { return to_string(v); }

json to_json(const QPoly& p) {
  json a = json::array();
  for (int i = 0; i <= p.deg(); ++i) a.push_back(to_json(p.coeff(i)));
  return a;
}

json to_json(const IMat& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json r = json::array();
    for (int j = 0; j < m.cols(); ++j) r.push_back(to_json(m(i, j)));
    rows.push_back(r);
  }
  return rows;
}

json to_json(const TorsionGroup& t) {
  json f = json::array();
  for (const Int& d : t.invariant_factors) f.push_back(to_json(d));
  return json{{"factors", f}};
}

json to_json(const GramLattice& l) { return json{{"rank", l.rank}, {"gram", to_json(l.gram)}}; }

json to_json(const NFElem& e) {
  if (e.is_rational()) return to_string(e.rational());
  json a = json::array();
  for (int i = 0; i <= e.rep().deg(); ++i) a.push_back(to_string(e.rep().coeff(i)));
  return a;
}

json to_json(const KP& p) {
  json a = json::array();
  for (int i = 0; i <= p.deg(); ++i) a.push_back(to_json(p.coeff(i)));
  return a;
}

Rat rat_from_json(const json& j) {
  if (j.is_number_integer()) return Rat(static_cast<int64_t>(j));
  if (j.is_string()) return rat_from_string(j.get<std::string>());
  throw std::invalid_argument("expected a rational (integer or \"p/q\" string)");
}

QPoly qpoly_from_json(const json& j) {
  if (j.is_string()) return qpoly_from_string(j.get<std::string>());
  std::vector<Rat> c;
  for (const auto& v : j) c.push_back(rat_from_json(v));
  return QPoly(std::move(c));
}

IMat imat_from_json(const json& j) {
  int rows = static_cast<int>(j.size());
  int cols = rows ? static_cast<int>(j[0].size()) : 0;
  IMat m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    if (static_cast<int>(j[i].size()) != cols) throw std::invalid_argument("ragged matrix");
    for (int k = 0; k < cols; ++k) {
      const auto& v = j[i][k];
      m(i, k) = v.is_string() ? Int(v.get<std::string>()) : Int(static_cast<int64_t>(v));
    }
  }
  return m;
}

GramLattice lattice_from_json(const json& j) {
  IMat g = imat_from_json(j.at("gram"));
  int rank = j.contains("rank") ? j.at("rank").get<int>() : g.rows();
  return GramLattice(rank, std::move(g));
}

json to_json(const EmbeddingWitness& w) {
  json roots = json::array();
  for (const Root& r : w.roots) {
    json v = json::array();
    for (int i = 0; i < 8; ++i) v.push_back(r[i]);
    roots.push_back(v);
  }
  return json{{"spec", w.spec.name()}, {"roots_doubled", roots}};
}

json to_json(const ClassificationRow& r) {
  json tf = json::array();
  for (const Int& d : r.torsion.invariant_factors) tf.push_back(to_json(d));
  return json{{"spec", r.spec.name()}, {"torsion", tf}, {"classes", r.classes_up_to_isometry}};
}

json to_json(const LemmaE8Report& r) {
  return json{{"t_unimodular", r.t_unimodular},
              {"t_signature", {r.t_signature[0], r.t_signature[1], r.t_signature[2]}},
              {"f_characteristic", r.f_characteristic},
              {"complement_rank", r.complement_rank},
              {"complement_even", r.complement_even},
              {"complement_unimodular", r.complement_unimodular},
              {"complement_signature",
               {r.complement_signature[0], r.complement_signature[1], r.complement_signature[2]}},
              {"complement_root_count", r.complement_root_count},
              {"all_ok", r.all_ok()}};
}

namespace {

json ord_json(int v) {
  if (v >= kInfiniteOrder) return "inf";
  return v;
}

}  // namespace

json to_json(const FiberReport& r) {
  json out{{"type", r.kodaira.name()},
           {"ord_p", ord_json(r.ord_p)},
           {"ord_q", ord_json(r.ord_q)},
           {"ord_delta", r.ord_d},
           {"euler", r.euler},
           {"euler_total", r.euler_total},
           {"orbit", r.location.orbit_size()}};
  if (r.location.at_infinity)
    out["x"] = "inf";
  else if (r.location.minpoly.deg() == 1)
    out["x"] = to_string(Rat(-r.location.minpoly.coeff(0)));
  else
    out["minpoly"] = to_json(r.location.minpoly);
  return out;
}

json to_json(const SingularPointReport& r) {
  json out{{"orbit", r.orbit_size},
           {"milnor", r.milnor},
           {"simple", r.simple}};
  if (r.at_infinity)
    out["x"] = "inf";
  else if (r.xlocus.deg() == 1)
    out["x"] = to_string(Rat(-r.xlocus.coeff(0)));
  else
    out["minpoly"] = to_json(r.xlocus);
  out["y"] = to_json(r.y0);
  if (r.simple) {
    out["type"] = r.type.name();
    out["delta"] = r.delta;
    out["branches"] = r.branches;
  } else {
    out["label"] = r.nonsimple_label;
  }
  return out;
}

json to_json(const SexticSpec& s) {
  json labels = json::array();
  for (const auto& l : s.labels()) labels.push_back(l);
  return json{{"sigma_B", s.sigma_b.name()},
              {"fiber", s.fiber.name()},
              {"distinguished", s.distinguished},
              {"sigma_C", labels}};
}

json to_json(const PlaneCurve& c) {
  json monomials = json::array();
  for (int j = 0; j <= c.f.deg(); ++j) {
    const QPoly& cj = c.f.coeff(j);
    for (int i = 0; i <= cj.deg(); ++i)
      if (!(cj.coeff(i) == 0)) monomials.push_back(json{{"x", i}, {"y", j}, {"c", to_string(cj.coeff(i))}});
  }
  return json{{"degree", c.degree}, {"monomials", monomials}, {"equation", to_string(c.f)}};
}

json to_json(const TorusStructure& s) {
  json out{{"b", to_json(s.b)}, {"l", to_json(s.l)}, {"e", to_json(s.e)}};
  if (s.field) out["minpoly"] = to_json(s.field->minpoly);
  return out;
}

json to_json(const DetectionReport& r) {
  json st = json::array();
  for (const auto& s : r.structures) st.push_back(to_json(s));
  json diag = json::array();
  for (const auto& d : r.diagnostics) diag.push_back(d);
  return json{{"count", r.count_over_closure}, {"structures", st}, {"diagnostics", diag}};
}

json to_json(const InnerOuterSplit& s) {
  json pts = json::array();
  for (const auto& p : s.points) {
    json e{{"orbit", p.orbit_size}, {"inner", p.inner}, {"type", p.type.name()}};
    if (p.at_infinity)
      e["x"] = "inf";
    else if (p.xlocus.deg() == 1)
      e["x"] = to_string(Rat(-p.xlocus.coeff(0)));
    else
      e["minpoly"] = to_json(p.xlocus);
    pts.push_back(e);
  }
  return json{{"points", pts}, {"inner", s.inner_total()}, {"outer", s.outer_total()}};
}

json to_json(const LaurentPoly& p) {
  json c = json::array();
  for (const Int& v : p.c) c.push_back(to_json(v));
  return json{{"coefficients", c}, {"text", p.text()}};
}

TrigonalCurve curve_from_json(const json& j) {
  if (j.is_string()) return TrigonalCurve::from_string(j.get<std::string>());
  QPoly a = j.contains("a") ? qpoly_from_json(j.at("a")) : QPoly();
  QPoly b = j.contains("b") ? qpoly_from_json(j.at("b")) : QPoly();
  QPoly c = j.contains("c") ? qpoly_from_json(j.at("c")) : QPoly();
  if (j.contains("P") || j.contains("Q")) {
    a = QPoly();
    b = j.contains("P") ? qpoly_from_json(j.at("P")) : QPoly();
    c = j.contains("Q") ? qpoly_from_json(j.at("Q")) : QPoly();
  }
  return TrigonalCurve(std::move(a), std::move(b), std::move(c));
}

FiberChoice fiber_choice_from_json(const json& j) {
  if (j.is_string()) {
    std::string s = j.get<std::string>();
    if (s == "inf") return FiberChoice::at_infinity();
    return FiberChoice::at(rat_from_string(s));
  }
  if (j.contains("minpoly")) return FiberChoice::orbit(qpoly_from_json(j.at("minpoly")));
  const auto& x = j.at("x");
  if (x.is_string() && x.get<std::string>() == "inf") return FiberChoice::at_infinity();
  return FiberChoice::at(rat_from_json(x));
}

TorusStructure torus_structure_from_json(const json& j) {
  TorusStructure s;
  NF field;
  if (j.contains("minpoly")) field = make_field(to_monic(qpoly_from_json(j.at("minpoly"))));
  auto kp_from = [&](const json& arr) {
    std::vector<NFElem> c;
    for (const auto& v : arr) {
      if (v.is_array()) {
        if (!field) throw std::invalid_argument("field coefficients need a minpoly");
        std::vector<Rat> rep;
        for (const auto& w : v) rep.push_back(rat_from_json(w));
        c.emplace_back(field, QPoly(std::move(rep)));
      } else {
        c.emplace_back(rat_from_json(v));
      }
    }
    return KP(std::move(c));
  };
  s.field = field;
  if (j.contains("b")) s.b = kp_from(j.at("b"));
  if (j.contains("l")) s.l = kp_from(j.at("l"));
  if (j.contains("e")) s.e = kp_from(j.at("e"));
  return s;
}

FiniteGroup group_from_expression(const std::string& expr) {
  // split on 'x' at top level
  std::vector<std::string> parts;
  size_t depth = 0, start = 0;
  for (size_t i = 0; i < expr.size(); ++i) {
    char c = expr[i];
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == 'x' && depth == 0 && i > start) {
      parts.push_back(expr.substr(start, i - start));
      start = i + 1;
    }
  }
  parts.push_back(expr.substr(start));
  auto atom = [](std::string s) -> FiniteGroup {
    auto trim = [](std::string& t) {
      while (!t.empty() && isspace(static_cast<unsigned char>(t.front()))) t.erase(t.begin());
      while (!t.empty() && isspace(static_cast<unsigned char>(t.back()))) t.pop_back();
    };
    trim(s);
    if (s.empty()) throw std::invalid_argument("empty group expression");
    if (s == "S3") return symmetric3();
    if (s == "S4") return symmetric4();
    if (s == "A4") return alternating4();
    if (s == "Q8") return metacyclic2(4, -1, 2, "Q8");
    if (s == "Q16") return metacyclic2(8, -1, 4, "Q16");
    if (s == "SD16") return metacyclic2(8, 3, 0, "SD16");
    if (s == "SL23" || s == "SL(2,3)") return sl23();
    if (s[0] == 'C') return cyclic(std::stoi(s.substr(1)));
    if (s.rfind("Dic", 0) == 0) {
      int n = std::stoi(s.substr(3));
      return metacyclic2(2 * n, -1, n, s);
    }
    if (s[0] == 'D') return dihedral(std::stoi(s.substr(1)));
    if (s.rfind("sd(", 0) == 0 && s.back() == ')') {
      std::string args = s.substr(3, s.size() - 4);
      std::vector<int> v;
      size_t pos = 0;
      while (pos < args.size()) {
        size_t comma = args.find(',', pos);
        if (comma == std::string::npos) comma = args.size();
        v.push_back(std::stoi(args.substr(pos, comma - pos)));
        pos = comma + 1;
      }
      if (v.size() != 3) throw std::invalid_argument("sd(m,k,u) expects three arguments");
      return semidirect_cyclic(v[0], v[1], v[2]);
    }
    throw std::invalid_argument("unknown group '" + s + "'");
  };
  FiniteGroup g = atom(parts[0]);
  for (size_t i = 1; i < parts.size(); ++i) g = direct_product(g, atom(parts[i]));
  return g;
}

}  // namespace sextic
