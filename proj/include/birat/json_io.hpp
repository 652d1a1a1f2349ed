#ifndef BIRAT_JSON_IO_HPP
#define BIRAT_JSON_IO_HPP

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "birat/classifier.hpp"
#include "birat/cone.hpp"
#include "birat/factorization.hpp"
#include "birat/sarkisov.hpp"

namespace birat {

using json = nlohmann::ordered_json;

// Input that does not match the expected schema.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json read_json_file(const std::string& path);
json parse_json_text(const std::string& text);

json to_json(const DivisorClass& c);
DivisorClass class_from_json(const json& j);

json to_json(const PointConfig& c);
// Validated; rule violations are reported as ParseError.
PointConfig config_from_json(const json& j);

// {"degree", "mults", "config"?}; without a config the points are general.
json to_json(const HomaloidalNet& net);
HomaloidalNet net_from_json(const json& j);

json to_json(const QuadraticMap& q);
json to_json(const Simplicity& s);
json to_json(const FactorizationTrace& t);

json to_json(const SarkisovDegree& d);
json to_json(const SarkisovTrace& t);

// {"q", "p_g", "K2", "e", "chi", "plurigenera": {"n": P_n}, "minimal", "bdf_case"}
SurfaceInvariants invariants_from_json(const json& j);
json to_json(const SurfaceInvariants& s);
json to_json(const Classification& c, const std::vector<std::string>& violations);

// {"gram": [[...]], "weights": [...]}
FibreMatrix fibre_matrix_from_json(const json& j);
json to_json(const ZariskiVerdict& v);
json to_json(const Inertia& i);

json to_json(const ConeDescription& c);

}  // namespace birat

#endif  // BIRAT_JSON_IO_HPP
