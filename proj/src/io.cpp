#include "ips/io.hpp"

#include <fstream>
#include <sstream>

namespace ips {

namespace {

[[noreturn]] void fail(const std::string& what) { throw DocumentError(what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) fail("document must be a JSON object");
  const auto it = j.find(key);
  if (it == j.end()) fail(std::string("missing key \"") + key + "\"");
  return *it;
}

void require_format(const Json& j, const char* expected) {
  const Json& f = field(j, "format");
  if (!f.is_string() || f.get<std::string>() != expected)
    fail(std::string("expected format ") + expected);
}

void require_keys(const Json& j, std::initializer_list<const char*> allowed) {
  for (const auto& [key, value] : j.items()) {
    bool known = false;
    for (const char* a : allowed) known = known || key == a;
    if (!known) fail("unknown key \"" + key + "\"");
  }
}

Integer parse_integer(const Json& j) {
  if (j.is_number_integer()) return j.is_number_unsigned() ? Integer(j.get<unsigned long>())
                                                            : Integer(j.get<long>());
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    const bool digits = !s.empty() && s.find_first_not_of("-0123456789") == std::string::npos &&
                        s.find('-', 1) == std::string::npos && s != "-";
    if (digits) return Integer(s, 10);
  }
  fail("expected an integer, got " + j.dump());
}

Json integer_json(const Integer& x) {
  if (x.fits_slong_p()) return Json(x.get_si());
  return Json(x.get_str());
}

Json provenance_or_empty(const Json& p) { return p.is_null() ? Json::object() : p; }

Json provenance_of(const Json& j) {
  const auto it = j.find("provenance");
  if (it == j.end()) return Json::object();
  if (!it->is_object()) fail("provenance must be an object");
  return *it;
}

}  // namespace

std::string rational_string(const Rational& x) {
  return x.numerator().get_str() + "/" + x.denominator().get_str();
}

Rational parse_rational_string(const Json& j) {
  if (!j.is_string()) fail("expected a \"num/den\" string, got " + j.dump());
  try {
    return Rational::parse(j.get<std::string>());
  } catch (const std::exception& e) {
    fail("bad rational " + j.dump() + ": " + e.what());
  }
}

Json planar_to_json(const PlanarDocument& doc) {
  Json points = Json::array();
  for (const auto& p : doc.set.points())
    points.push_back({{"x", rational_string(p.x)}, {"y", rational_string(p.y_coeff)}});
  return {{"format", kPlanarFormat},
          {"q", integer_json(doc.set.radicand())},
          {"points", std::move(points)},
          {"provenance", provenance_or_empty(doc.provenance)}};
}

PlanarDocument planar_from_json(const Json& j) {
  require_format(j, kPlanarFormat);
  require_keys(j, {"format", "q", "points", "provenance"});
  const Integer q = parse_integer(field(j, "q"));
  const Json& pts = field(j, "points");
  if (!pts.is_array()) fail("points must be an array");
  std::vector<PlanarPoint> points;
  for (const auto& p : pts) {
    require_keys(p, {"x", "y"});
    points.push_back({parse_rational_string(field(p, "x")), parse_rational_string(field(p, "y"))});
  }
  try {
    return {PlanarPointSet(q, std::move(points)), provenance_of(j)};
  } catch (const std::invalid_argument& e) {
    fail(e.what());
  }
}

Json distance_matrix_to_json(const DistanceMatrixDocument& doc) {
  const auto& m = doc.matrix;
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.size(); ++i) {
    Json row = Json::array();
    for (Eigen::Index k = 0; k < m.size(); ++k) row.push_back(integer_json(m(i, k)));
    rows.push_back(std::move(row));
  }
  return {{"entries", std::move(rows)},
          {"format", kDistanceMatrixFormat},
          {"n", m.size()},
          {"provenance", provenance_or_empty(doc.provenance)}};
}

DistanceMatrixDocument distance_matrix_from_json(const Json& j) {
  require_format(j, kDistanceMatrixFormat);
  require_keys(j, {"entries", "format", "n", "provenance"});
  const Json& nj = field(j, "n");
  if (!nj.is_number_integer() || nj.get<long>() < 1) fail("n must be a positive integer");
  const auto n = nj.get<Eigen::Index>();
  const Json& rows = field(j, "entries");
  if (!rows.is_array() || static_cast<Eigen::Index>(rows.size()) != n)
    fail("entries must have n rows");
  IntegerMatrix m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const Json& row = rows[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != n)
      fail("row " + std::to_string(i) + " must have n entries");
    for (Eigen::Index k = 0; k < n; ++k) m(i, k) = parse_integer(row[static_cast<std::size_t>(k)]);
  }
  try {
    return {DistanceMatrix(std::move(m)), provenance_of(j)};
  } catch (const std::invalid_argument& e) {
    fail(e.what());
  }
}

std::string dump_document(const Json& j) { return j.dump(2) + "\n"; }

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return Json::parse(buf.str());
  } catch (const Json::parse_error& e) {
    fail(path.string() + ": " + e.what());
  }
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

}  // namespace ips
