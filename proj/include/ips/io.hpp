#pragma once

// JSON documents for point sets (ips-planar/1) and distance matrices
// (ips-dm/1). Keys are emitted in sorted order and rationals as "num/den", so
// emit(parse(emit(x))) == emit(x) byte for byte.

#include <filesystem>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "ips/dmatrix.hpp"
#include "ips/geometry.hpp"

namespace ips {

using Json = nlohmann::json;

inline constexpr const char* kPlanarFormat = "ips-planar/1";
inline constexpr const char* kDistanceMatrixFormat = "ips-dm/1";

/// Malformed or semantically invalid document.
class DocumentError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct PlanarDocument {
  PlanarPointSet set;
  Json provenance = Json::object();
};

struct DistanceMatrixDocument {
  DistanceMatrix matrix;
  Json provenance = Json::object();
};

/// Always "num/den", including den == 1.
std::string rational_string(const Rational& x);
Rational parse_rational_string(const Json& j);

Json planar_to_json(const PlanarDocument& doc);
PlanarDocument planar_from_json(const Json& j);

Json distance_matrix_to_json(const DistanceMatrixDocument& doc);
DistanceMatrixDocument distance_matrix_from_json(const Json& j);

/// Two-space indented, trailing newline.
std::string dump_document(const Json& j);
Json read_json_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace ips
