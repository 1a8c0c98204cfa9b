#pragma once

// JSON model files. Rationals are strings ("p/q" or "n"); output is canonical
// (sorted keys, reduced rationals); unknown fields are rejected on input.

#include <filesystem>
#include <stdexcept>
#include <string>
#include <variant>

#include <json.hpp>

#include "tensamp/builders/curve.hpp"
#include "tensamp/scheme/scheme.hpp"
#include "tensamp/surface/model.hpp"

namespace tensamp {

using Json = nlohmann::json;

/// File missing or unreadable.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Json rat_to_json(const Rat& r);
Rat rat_from_json(const Json& j, const std::string& where);
Json vec_to_json(const RatVec& v);
RatVec vec_from_json(const Json& j, std::size_t dim, const std::string& where);

Json surface_to_json(const SurfaceModel& m, const std::string& name = "");
SurfaceModel surface_from_json(const Json& j);

Json curve_to_json(const CurveModel& c, const std::string& name = "");
CurveModel curve_from_json(const Json& j);

/// Nested "model" entries may be inline objects or paths relative to base_dir.
SchemeModel scheme_from_json(const Json& j, const std::filesystem::path& base_dir);

Json certificate_to_json(const StratCertificate& c);
StratCertificate certificate_from_json(const Json& j);

struct ModelFile {
  std::string kind;  // surface | curve | scheme | certificate
  std::string name;
  std::variant<SurfaceModel, CurveModel, SchemeModel, StratCertificate> model;
};

Json read_json_file(const std::filesystem::path& path);
ModelFile parse_model_file(const Json& j, const std::filesystem::path& base_dir);
ModelFile load_model_file(const std::filesystem::path& path);

/// Two-space indented dump with a trailing newline.
std::string canonical_dump(const Json& j);

}  // namespace tensamp
