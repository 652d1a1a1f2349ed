#include "birat/json_io.hpp"

#include <fstream>
#include <sstream>

namespace birat {

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json_text(ss.str());
}

json parse_json_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

static const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  return j.at(key);
}

static Int as_int(const json& j, const char* what) {
  if (!j.is_number_integer()) throw ParseError(std::string("'") + what + "' must be an integer");
  return j.get<Int>();
}

static std::vector<Int> as_int_list(const json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string("'") + what + "' must be an array");
  std::vector<Int> out;
  for (const auto& x : j) out.push_back(as_int(x, what));
  return out;
}

json to_json(const DivisorClass& c) { return {{"degree", c.degree}, {"mults", c.mults}}; }

DivisorClass class_from_json(const json& j) {
  return DivisorClass(as_int(field(j, "degree"), "degree"), as_int_list(field(j, "mults"), "mults"));
}

json to_json(const PointConfig& c) {
  json pts = json::array();
  for (const auto& p : c.points) {
    json o;
    o["id"] = p.id;
    o["parent"] = p.parent ? json(*p.parent) : json(nullptr);
    o["proximate_to"] = p.proximate_to;
    o["generic"] = p.generic;
    pts.push_back(o);
  }
  json out = {{"points", pts}, {"collinear", c.collinear}};
  if (!c.curves.empty()) {
    json cs = json::array();
    for (const auto& k : c.curves) cs.push_back(to_json(k));
    out["curves"] = cs;
  }
  return out;
}

PointConfig config_from_json(const json& j) {
  PointConfig c;
  const json& pts = field(j, "points");
  if (!pts.is_array()) throw ParseError("'points' must be an array");
  for (const auto& p : pts) {
    PointNode n;
    n.id = static_cast<int>(as_int(field(p, "id"), "id"));
    if (p.contains("parent") && !p.at("parent").is_null())
      n.parent = static_cast<int>(as_int(p.at("parent"), "parent"));
    if (p.contains("proximate_to"))
      for (Int v : as_int_list(p.at("proximate_to"), "proximate_to")) n.proximate_to.push_back(static_cast<int>(v));
    if (p.contains("generic")) {
      if (!p.at("generic").is_boolean()) throw ParseError("'generic' must be a boolean");
      n.generic = p.at("generic").get<bool>();
    }
    c.points.push_back(n);
  }
  if (j.contains("collinear")) {
    if (!j.at("collinear").is_array()) throw ParseError("'collinear' must be an array");
    for (const auto& s : j.at("collinear")) {
      std::vector<int> ids;
      for (Int v : as_int_list(s, "collinear")) ids.push_back(static_cast<int>(v));
      c.collinear.push_back(ids);
    }
  }
  if (j.contains("curves")) {
    if (!j.at("curves").is_array()) throw ParseError("'curves' must be an array");
    for (const auto& k : j.at("curves")) c.curves.push_back(class_from_json(k));
  }
  try {
    c.validate();
  } catch (const DomainError& e) {
    throw ParseError(std::string("invalid configuration: ") + e.what());
  }
  return c;
}

json to_json(const HomaloidalNet& net) {
  json j = to_json(net.cls);
  j["config"] = to_json(net.config);
  return j;
}

HomaloidalNet net_from_json(const json& j) {
  HomaloidalNet net{class_from_json(j), {}};
  net.config = j.contains("config") ? config_from_json(j.at("config")) : PointConfig::general(net.cls.size());
  if (net.config.size() != net.cls.size())
    throw ParseError("net has " + std::to_string(net.cls.size()) + " multiplicities but the configuration has " +
                     std::to_string(net.config.size()) + " points");
  return net;
}

json to_json(const QuadraticMap& q) { return {{"kind", to_string(q.kind)}, {"base", q.base}}; }

json to_json(const Simplicity& s) { return json::array({s.k, s.h, s.s}); }

json to_json(const FactorizationTrace& t) {
  json steps = json::array();
  for (std::size_t i = 0; i < t.steps.size(); ++i) {
    const auto& s = t.steps[i];
    steps.push_back({{"step", i + 1},
                     {"case", s.nc_case},
                     {"map", to_json(s.map)},
                     {"net", to_json(s.after)},
                     {"simplicity", to_json(s.simplicity)}});
  }
  json j = {{"input", to_json(t.input)}, {"simplicity", to_json(t.initial)}, {"steps", steps},
            {"terminal", to_string(t.terminal)}};
  j["closing"] = t.closing ? to_json(*t.closing) : json(nullptr);
  j["final"] = to_json(t.final_net);
  return j;
}

json to_json(const SarkisovDegree& d) {
  return {{"mu", to_string(d.mu)}, {"lambda", d.lambda}, {"ell", d.ell ? json(*d.ell) : json(nullptr)}};
}

json to_json(const SarkisovTrace& t) {
  json links = json::array();
  for (const auto& l : t.links)
    links.push_back({{"kind", to_string(l.kind)},
                     {"center", l.center ? json(*l.center) : json(nullptr)},
                     {"model", to_string(l.result)},
                     {"degree", to_json(l.degree)}});
  return {{"initial_degree", to_json(t.initial)}, {"links", links}, {"final_model", to_string(t.final_state.mfs)}};
}

static std::optional<Int> opt_int(const json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return as_int(j.at(key), key);
}

SurfaceInvariants invariants_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("invariants must be a JSON object");
  SurfaceInvariants s;
  s.q = opt_int(j, "q");
  s.p_g = opt_int(j, "p_g");
  s.K2 = opt_int(j, "K2");
  s.e = opt_int(j, "e");
  s.chi = opt_int(j, "chi");
  if (j.contains("plurigenera")) {
    const json& p = j.at("plurigenera");
    if (!p.is_object()) throw ParseError("'plurigenera' must map n to P_n");
    for (const auto& [k, v] : p.items()) {
      Int n = 0;
      try {
        std::size_t used = 0;
        n = std::stoll(k, &used);
        if (used != k.size()) throw std::invalid_argument(k);
      } catch (const std::logic_error&) {
        throw ParseError("plurigenus index '" + k + "' is not an integer");
      }
      if (n < 1) throw ParseError("plurigenus index must be >= 1");
      s.plurigenera[n] = as_int(v, "plurigenera");
    }
  }
  if (j.contains("minimal")) {
    if (!j.at("minimal").is_boolean()) throw ParseError("'minimal' must be a boolean");
    s.minimal = j.at("minimal").get<bool>();
  }
  if (j.contains("bdf_case") && !j.at("bdf_case").is_null()) {
    if (!j.at("bdf_case").is_string()) throw ParseError("'bdf_case' must be a roman numeral i..vii");
    try {
      s.bdf_case = parse_bdf(j.at("bdf_case").get<std::string>());
    } catch (const DomainError& e) {
      throw ParseError(e.what());
    }
  }
  return s;
}

json to_json(const SurfaceInvariants& s) {
  json j = json::object();
  auto put = [&](const char* k, const std::optional<Int>& v) {
    if (v) j[k] = *v;
  };
  put("q", s.q);
  put("p_g", s.p_g);
  put("K2", s.K2);
  put("e", s.e);
  put("chi", s.chi);
  json p = json::object();
  for (const auto& [n, v] : s.plurigenera) p[std::to_string(n)] = v;
  j["plurigenera"] = p;
  j["minimal"] = s.minimal;
  if (s.bdf_case) j["bdf_case"] = to_string(*s.bdf_case);
  return j;
}

json to_json(const Classification& c, const std::vector<std::string>& violations) {
  json j = {{"kappa", to_string(c.kappa)}};
  j["subclass"] = c.subclass ? json(to_string(*c.subclass)) : json(nullptr);
  if (c.canonical_order) j["canonical_order"] = *c.canonical_order;
  else if (!c.admissible_orders.empty()) j["admissible_orders"] = c.admissible_orders;
  j["violations"] = violations;
  return j;
}

FibreMatrix fibre_matrix_from_json(const json& j) {
  FibreMatrix m;
  const json& g = field(j, "gram");
  if (!g.is_array()) throw ParseError("'gram' must be an array of rows");
  for (const auto& row : g) m.gram.push_back(as_int_list(row, "gram"));
  m.weights = as_int_list(field(j, "weights"), "weights");
  try {
    m.validate();
  } catch (const DomainError& e) {
    throw ParseError(std::string("invalid fibre matrix: ") + e.what());
  }
  return m;
}

json to_json(const ZariskiVerdict& v) {
  return {{"negative_semidefinite", v.semidefinite},
          {"kernel_dim", v.kernel_dim},
          {"kernel_is_span_of_weights", v.kernel_is_span_of_weights},
          {"components", v.components}};
}

json to_json(const Inertia& i) { return {{"positive", i.positive}, {"negative", i.negative}, {"zero", i.zero}}; }

json to_json(const ConeDescription& c) {
  json squares = json::array();
  for (const auto& r : c.rays) squares.push_back(pairing(c.gram, r, r));
  return {{"gram", c.gram}, {"rays", c.rays}, {"labels", c.labels}, {"ray_squares", squares},
          {"polyhedral", c.polyhedral}};
}

}  // namespace birat
