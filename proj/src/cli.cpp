#include "birat/cli.hpp"

#include <CLI11.hpp>

#include "birat/json_io.hpp"

namespace birat {

namespace {

struct Negative : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A path, or inline JSON when the argument starts with '{'.
json load(const std::string& arg) {
  const auto first = arg.find_first_not_of(" \t\n");
  if (first != std::string::npos && arg[first] == '{') return parse_json_text(arg);
  return read_json_file(arg);
}

std::vector<int> parse_ids(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::logic_error&) {
      throw ParseError("'" + tok + "' is not a point id");
    }
  }
  return out;
}

std::string join(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

std::string map_text(const QuadraticMap& q) {
  return std::string(to_string(q.kind)) + "(" + join({q.base.begin(), q.base.end()}) + ")";
}

struct Options {
  bool json_out = false;
  bool text_out = false;
  std::string net, invariants, matrix, base, bdf_case, branch, mults;
  Int genus = 0, chi = 0, n_max = 12, order = 1, hirz = 0, bound = 60;
  int points = 0;
  bool isotrivial = false;
};

void add_format(CLI::App* app, Options& o) {
  auto* j = app->add_flag("--json", o.json_out, "JSON output");
  auto* t = app->add_flag("--text", o.text_out, "text output (default)");
  j->excludes(t);
}

int cremona_apply(const Options& o, std::ostream& out) {
  const HomaloidalNet net = net_from_json(load(o.net));
  const auto ids = parse_ids(o.base);
  if (ids.size() != 3) throw ParseError("--base takes three point ids");
  const QuadraticMap q = make_quadratic(net.config, {ids[0], ids[1], ids[2]});
  const QuadraticImage img = apply_quadratic(net.config, q);
  const HomaloidalNet after{act(img.action, net.cls), img.config};
  if (o.json_out) out << to_json(after).dump(2) << "\n";
  else out << map_text(q) << " " << to_string(net.cls) << " -> " << to_string(after.cls) << "\n";
  return 0;
}

int cremona_check(const Options& o, std::ostream& out) {
  const HomaloidalNet net = net_from_json(load(o.net));
  const HomaloidalVerdict v = is_homaloidal(net.cls, net.config);
  if (o.json_out) out << json{{"homaloidal", v.ok}, {"reason", v.reason}}.dump(2) << "\n";
  else out << to_string(net.cls) << (v.ok ? " is homaloidal" : " is not homaloidal: " + v.reason) << "\n";
  if (!v.ok) throw Negative("not homaloidal: " + v.reason);
  return 0;
}

int factor_cmd(const Options& o, std::ostream& out) {
  const FactorizationTrace t = factor(net_from_json(load(o.net)));
  if (o.json_out) {
    out << to_json(t).dump(2) << "\n";
    return 0;
  }
  for (std::size_t i = 0; i < t.steps.size(); ++i) {
    const auto& s = t.steps[i];
    out << i + 1 << "  case " << s.nc_case << "  " << map_text(s.map) << "  " << to_string(s.after.cls) << "  "
        << to_string(s.simplicity) << "\n";
  }
  out << "terminal " << to_string(t.terminal);
  if (t.closing) out << "  closing " << map_text(*t.closing);
  out << "\n";
  return 0;
}

int sarkisov_cmd(const Options& o, std::ostream& out) {
  const HomaloidalNet net = net_from_json(load(o.net));
  const SarkisovTrace t = run_sarkisov(net.cls, net.config);
  if (o.json_out) {
    out << to_json(t).dump(2) << "\n";
    return 0;
  }
  SarkisovDegree prev = t.initial;
  for (const auto& l : t.links) {
    out << to_string(l.kind) << "  " << (l.center ? std::to_string(*l.center) : "-") << "  " << to_string(l.result)
        << "  " << to_string(prev) << " -> " << to_string(l.degree) << "\n";
    prev = l.degree;
  }
  return 0;
}

std::vector<Int> parse_ints(const std::string& text) {
  std::vector<Int> out;
  if (text.empty()) return out;
  for (int v : parse_ids(text)) out.push_back(v);
  return out;
}

int plurigenus_cmd(const Options& o, std::ostream& out) {
  EllipticFibration f{o.genus, o.chi, parse_ints(o.mults), o.isotrivial};
  f.validate();
  const PlurigenusTable t = plurigenus_table(f, o.n_max);
  if (o.json_out) {
    json p = json::object();
    for (std::size_t i = 0; i < t.values.size(); ++i) p[std::to_string(i + 1)] = t.values[i];
    out << json{{"genus", f.base_genus}, {"chi", f.chi}, {"mults", f.mults}, {"plurigenera", p},
                {"exact", t.exact_for_isotrivial}}
               .dump(2)
        << "\n";
    return 0;
  }
  out << (t.exact_for_isotrivial ? "# exact values" : "# lower bounds") << "\n";
  for (std::size_t i = 0; i < t.values.size(); ++i) out << "P_" << i + 1 << " = " << t.values[i] << "\n";
  return 0;
}

int zariski_cmd(const Options& o, std::ostream& out) {
  const FibreMatrix m = fibre_matrix_from_json(load(o.matrix));
  const ZariskiVerdict v = zariski_check(m);
  const Inertia sig = lattice_signature(m.gram);
  if (o.json_out) {
    json j = to_json(v);
    j["signature"] = to_json(sig);
    out << j.dump(2) << "\n";
    return 0;
  }
  out << "negative semidefinite: " << (v.semidefinite ? "yes" : "no") << "\n"
      << "kernel dimension: " << v.kernel_dim << "\n"
      << "kernel spanned by the fibre: " << (v.kernel_is_span_of_weights ? "yes" : "no") << "\n"
      << "connected components: " << v.components << "\n"
      << "signature (+,-,0): (" << sig.positive << "," << sig.negative << "," << sig.zero << ")\n";
  return 0;
}

int classify_cmd(const Options& o, std::ostream& out) {
  const SurfaceInvariants s = invariants_from_json(load(o.invariants));
  const auto violations = consistency_check(s);
  auto fail = [&](const std::string& msg, const std::vector<std::string>& v) -> int {
    if (o.json_out)
      out << json{{"kappa", nullptr}, {"subclass", nullptr}, {"violations", v}, {"error", msg}}.dump(2) << "\n";
    else
      for (const auto& x : v) out << "violation: " << x << "\n";
    throw Negative(msg);
  };
  if (!violations.empty()) return fail("inconsistent record", violations);
  Classification c;
  try {
    c = classify(s);
  } catch (const InconsistentRecord& e) {
    return fail(e.what(), {e.what()});
  } catch (const InsufficientData& e) {
    return fail(std::string("insufficient data: ") + e.what(), {});
  }
  if (o.json_out) {
    out << to_json(c, violations).dump(2) << "\n";
    return 0;
  }
  out << "kappa " << to_string(c.kappa);
  if (c.subclass) out << "  " << to_string(*c.subclass);
  if (c.canonical_order) out << "  canonical order " << *c.canonical_order;
  if (!c.admissible_orders.empty()) {
    out << "  admissible orders ";
    for (std::size_t i = 0; i < c.admissible_orders.size(); ++i) out << (i ? "," : "") << c.admissible_orders[i];
  }
  out << "\n";
  return 0;
}

int hirzebruch_cmd(const Options& o, std::ostream& out) {
  const ConeDescription c = hirzebruch_cone(o.hirz);
  if (o.json_out) {
    out << to_json(c).dump(2) << "\n";
    return 0;
  }
  for (std::size_t i = 0; i < c.rays.size(); ++i)
    out << c.labels[i] << "  square " << pairing(c.gram, c.rays[i], c.rays[i]) << "\n";
  return 0;
}

int neg_curves_cmd(const Options& o, std::ostream& out) {
  const auto v = enumerate_minus_one_classes(o.points);
  if (o.json_out) {
    json cs = json::array();
    for (const auto& c : v) cs.push_back(to_json(c));
    out << json{{"points", o.points}, {"count", v.size()}, {"classes", cs}}.dump(2) << "\n";
    return 0;
  }
  out << v.size() << " classes\n";
  for (const auto& c : v) out << to_string(c) << "\n";
  return 0;
}

int collinear_cmd(const Options& o, std::ostream& out) {
  const CollinearCone c = collinear_blowup_cone(o.bound);
  const std::vector<std::pair<std::string, bool>> checks = {
      {"rays K-nonpositive", c.rays_k_nonpositive},
      {"C is the only K-trivial ray, C^2 = -2", c.c_unique_k_trivial},
      {"no other K-trivial curve", c.no_other_k_trivial},
      {"no other (-1)-curve", c.no_other_minus_one},
      {"3d - sum m = 2 only for C + E_j + E_k", c.pencils_decompose},
      {"rays extremal", c.rays_extremal}};
  if (o.json_out) {
    json j = to_json(c.cone);
    j["anticanonical_square"] = c.anticanonical_square;
    j["degree_bound"] = c.degree_bound;
    json ch = json::object();
    for (const auto& [k, v] : checks) ch[k] = v;
    j["checks"] = ch;
    j["ok"] = c.ok();
    out << j.dump(2) << "\n";
  } else {
    out << "(-K)^2 = " << c.anticanonical_square << "\n";
    for (std::size_t i = 0; i < c.rays.size(); ++i)
      out << "ray " << c.cone.labels[i] << " = " << to_string(c.rays[i]) << "\n";
    out << "degree bound " << c.degree_bound << "\n";
    for (const auto& [k, v] : checks) out << (v ? "ok    " : "FAIL  ") << k << "\n";
  }
  if (!c.ok()) throw Negative("collinear example checks failed");
  return 0;
}

json bdf_json(BdF b) {
  BdFCase c;
  c.which = b;
  const BranchData br = c.branch();
  return {{"case", to_string(b)}, {"group", c.group()}, {"h_order", c.h_order()},
          {"minimal_power", bdf_minimal_power(c)}, {"branch", br.branch}};
}

int bdf_cmd(const Options& o, std::ostream& out) {
  std::vector<BdF> cases;
  if (o.bdf_case.empty())
    cases = {BdF::I, BdF::II, BdF::III, BdF::IV, BdF::V, BdF::VI, BdF::VII};
  else
    cases = {parse_bdf(o.bdf_case)};
  json all = json::array();
  for (BdF b : cases) all.push_back(bdf_json(b));
  if (o.json_out) {
    out << (cases.size() == 1 ? all[0] : all).dump(2) << "\n";
    return 0;
  }
  for (const auto& j : all) {
    out << j["case"].get<std::string>() << "  G = " << j["group"].get<std::string>() << "  |H| = " << j["h_order"]
        << "  nK trivial first at n = " << j["minimal_power"] << "\n";
  }
  return 0;
}

int hurwitz_cmd(const Options& o, std::ostream& out) {
  const BranchData b{o.order, o.genus, parse_ints(o.branch)};
  const Int g = riemann_hurwitz_genus(b);
  if (o.json_out) out << json{{"order", b.group_order}, {"base_genus", b.base_genus}, {"branch", b.branch}, {"genus", g}}.dump(2) << "\n";
  else out << "g = " << g << "\n";
  return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations on rational and elliptic surfaces", "birat-surf"};
  app.require_subcommand(1);
  Options o;
  std::function<int()> action;

  auto* cremona = app.add_subcommand("cremona", "quadratic maps on homaloidal nets");
  cremona->require_subcommand(1);
  auto* capply = cremona->add_subcommand("apply", "apply the quadratic map at three base points");
  capply->add_option("--net", o.net, "net file or inline JSON")->required();
  capply->add_option("--base", o.base, "three point ids, i,j,k")->required();
  add_format(capply, o);
  capply->callback([&] { action = [&] { return cremona_apply(o, out); }; });
  auto* ccheck = cremona->add_subcommand("check", "test the homaloidal conditions");
  ccheck->add_option("--net", o.net, "net file or inline JSON")->required();
  add_format(ccheck, o);
  ccheck->callback([&] { action = [&] { return cremona_check(o, out); }; });

  auto* fac = app.add_subcommand("factor", "factor a homaloidal net into quadratic maps");
  fac->add_option("--net", o.net, "net file or inline JSON")->required();
  add_format(fac, o);
  fac->callback([&] { action = [&] { return factor_cmd(o, out); }; });

  auto* sark = app.add_subcommand("sarkisov", "untwist a homaloidal net into Sarkisov links");
  sark->add_option("--net", o.net, "net file or inline JSON")->required();
  add_format(sark, o);
  sark->callback([&] { action = [&] { return sarkisov_cmd(o, out); }; });

  auto* plu = app.add_subcommand("plurigenus", "plurigenera of an elliptic fibration");
  plu->add_option("--genus", o.genus, "genus of the base")->required();
  plu->add_option("--chi", o.chi, "chi(O_S)")->required();
  plu->add_option("--mults", o.mults, "multiplicities of the multiple fibres, comma separated");
  plu->add_option("--n-max", o.n_max, "largest n")->check(CLI::PositiveNumber);
  plu->add_flag("--isotrivial", o.isotrivial, "isotrivial product (C1 x C2)/G");
  add_format(plu, o);
  plu->callback([&] { action = [&] { return plurigenus_cmd(o, out); }; });

  auto* zar = app.add_subcommand("zariski", "Zariski's lemma on a fibre intersection matrix");
  zar->add_option("--matrix", o.matrix, "matrix file or inline JSON")->required();
  add_format(zar, o);
  zar->callback([&] { action = [&] { return zariski_cmd(o, out); }; });

  auto* cls = app.add_subcommand("classify", "Kodaira dimension and class from invariants");
  cls->add_option("--invariants", o.invariants, "invariants file or inline JSON")->required();
  add_format(cls, o);
  cls->callback([&] { action = [&] { return classify_cmd(o, out); }; });

  auto* cone = app.add_subcommand("cone", "cones of curves");
  cone->require_subcommand(1);
  auto* hz = cone->add_subcommand("hirzebruch", "rays of NE(F_n)");
  hz->add_option("--n", o.hirz, "n >= 0")->required();
  add_format(hz, o);
  hz->callback([&] { action = [&] { return hirzebruch_cmd(o, out); }; });
  auto* nc = cone->add_subcommand("neg-curves", "(-1)-classes on n general points");
  nc->add_option("--points", o.points, "n in 1..8")->required();
  add_format(nc, o);
  nc->callback([&] { action = [&] { return neg_curves_cmd(o, out); }; });
  auto* col = cone->add_subcommand("collinear-example", "blow-up at three collinear points");
  col->add_option("--bound", o.bound, "degree bound for the exclusions")->check(CLI::PositiveNumber);
  add_format(col, o);
  col->callback([&] { action = [&] { return collinear_cmd(o, out); }; });

  auto* bdf = app.add_subcommand("bdf", "Bagnera-De Franchis types of bielliptic surfaces");
  bdf->add_option("--case", o.bdf_case, "i..vii; all when absent");
  add_format(bdf, o);
  bdf->callback([&] { action = [&] { return bdf_cmd(o, out); }; });

  auto* rh = app.add_subcommand("hurwitz", "genus of a Galois cover from its branching");
  rh->add_option("--order", o.order, "order of the group")->required();
  rh->add_option("--genus", o.genus, "genus of the base");
  rh->add_option("--branch", o.branch, "branching indices, comma separated")->required();
  add_format(rh, o);
  rh->callback([&] { action = [&] { return hurwitz_cmd(o, out); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  } catch (const std::exception& e) {
    err << "birat-surf: " << e.what() << "\n";
    return 2;
  }
  try {
    return action ? action() : 2;
  } catch (const Negative& e) {
    err << "birat-surf: " << e.what() << "\n";
    return 1;
  } catch (const ParseError& e) {
    err << "birat-surf: malformed input: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    err << "birat-surf: " << e.what() << "\n";
    return 1;
  } catch (const StructuralError& e) {
    err << "birat-surf: malformed input: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "birat-surf: internal error: " << e.what() << "\n";
    return 3;
  }
}

}  // namespace birat
