#include "trialg/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace trialg {

using nlohmann::json;

namespace {

[[noreturn]] void bad(const std::string &what) { throw Error(ErrorKind::BadInput, what); }

const json &field(const json &j, const char *key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::size_t index_of(const json &v, std::size_t limit, const char *what) {
  if (!v.is_number_integer()) bad(std::string(what) + " must be an integer");
  const auto x = v.get<long long>();
  if (x < 0 || static_cast<std::size_t>(x) >= limit) bad(std::string(what) + " out of range: " + std::to_string(x));
  return static_cast<std::size_t>(x);
}

mpz_class parse_integer(const json &v) {
  mpz_class z;
  if (v.is_number_integer()) {
    if (v.is_number_unsigned()) return mpz_class(std::to_string(v.get<unsigned long long>()));
    return mpz_class(std::to_string(v.get<long long>()));
  }
  if (v.is_string()) {
    const auto &s = v.get_ref<const std::string &>();
    if (s.empty() || z.set_str(s, 10) != 0) bad("malformed integer '" + s + "'");
    return z;
  }
  bad("rational halves must be integers or integer strings");
}

json integer_json(const mpz_class &z) {
  if (z.fits_slong_p()) return json(z.get_si());
  return json(z.get_str());
}

Vector coord_list(const json &j, std::size_t dim, const char *what) {
  if (!j.is_array() || j.size() != dim) bad(std::string(what) + " must list " + std::to_string(dim) + " [num, den] pairs");
  Vector out;
  for (const auto &p : j) {
    if (!p.is_array() || p.size() != 2) bad(std::string(what) + " entries must be [num, den]");
    out.push_back(parse_rational_pair(p[0], p[1]));
  }
  return out;
}

json coords_json(const Vector &v) {
  json out = json::array();
  for (const auto &c : v) out.push_back(rational_pair(c));
  return out;
}

void check_schema(const json &j) {
  const auto &v = field(j, "schema_version");
  if (!v.is_number_integer() || v.get<long long>() != kSchemaVersion) bad("unsupported schema_version");
}

} // namespace

std::string file_text(const nlohmann::ordered_json &j) {
  std::string out = "{\n";
  std::size_t n = 0;
  for (const auto &[key, value] : j.items()) {
    out += "  " + nlohmann::json(key).dump() + ": ";
    const bool nested = value.is_array() && !value.empty() && value.front().is_array();
    if (nested) {
      out += "[\n";
      for (std::size_t i = 0; i < value.size(); ++i) out += "    " + value[i].dump() + (i + 1 < value.size() ? ",\n" : "\n");
      out += "  ]";
    } else {
      out += value.dump();
    }
    out += ++n < j.size() ? ",\n" : "\n";
  }
  return out + "}\n";
}

TriangularAlgebra AlgebraFile::triangular() const {
  if (!e) bad("algebra file has no idempotent_e");
  return TriangularAlgebra(algebra, *e);
}

std::string fingerprint(const FiniteAlgebra &alg) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto feed = [&h](const std::string &s) {
    for (unsigned char c : s) {
      h ^= c;
      h *= 0x100000001b3ULL;
    }
    h ^= 0xff;
    h *= 0x100000001b3ULL;
  };
  feed("dim=" + std::to_string(alg.dim()));
  for (const auto &l : alg.labels()) feed(l);
  for (const auto &c : alg.structure()) {
    feed(std::to_string(c.i) + "," + std::to_string(c.j) + "," + std::to_string(c.k) + "," + to_string(c.value));
  }
  for (const auto &u : alg.unit().coords) feed(to_string(u));
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

json rational_pair(const Rational &r) { return json::array({integer_json(r.get_num()), integer_json(r.get_den())}); }

Rational parse_rational_pair(const json &num, const json &den) {
  const mpz_class n = parse_integer(num), d = parse_integer(den);
  if (d == 0) bad("zero denominator");
  Rational r(n, d);
  r.canonicalize();
  return r;
}

nlohmann::ordered_json algebra_to_json(const FiniteAlgebra &alg, const std::optional<Element> &e) {
  nlohmann::ordered_json j;
  j["schema_version"] = kSchemaVersion;
  j["dim"] = alg.dim();
  j["basis_labels"] = alg.labels();
  json structure = json::array();
  for (const auto &c : alg.structure()) {
    structure.push_back(json::array({c.i, c.j, c.k, integer_json(c.value.get_num()), integer_json(c.value.get_den())}));
  }
  j["structure"] = std::move(structure);
  j["unit"] = coords_json(alg.unit().coords);
  if (e) j["idempotent_e"] = coords_json(e->coords);
  return j;
}

AlgebraFile algebra_from_json(const json &j) {
  check_schema(j);
  const auto &dim_j = field(j, "dim");
  if (!dim_j.is_number_integer() || dim_j.get<long long>() < 1) bad("dim must be a positive integer");
  const auto dim = dim_j.get<std::size_t>();

  const auto &labels_j = field(j, "basis_labels");
  if (!labels_j.is_array() || labels_j.size() != dim) bad("basis_labels must have dim entries");
  std::vector<std::string> labels;
  for (const auto &l : labels_j) {
    if (!l.is_string()) bad("basis labels must be strings");
    labels.push_back(l.get<std::string>());
  }

  std::vector<StructureConstant> constants;
  for (const auto &c : field(j, "structure")) {
    if (!c.is_array() || c.size() != 5) bad("structure entries must be [i, j, k, num, den]");
    constants.push_back({index_of(c[0], dim, "i"), index_of(c[1], dim, "j"), index_of(c[2], dim, "k"), parse_rational_pair(c[3], c[4])});
  }

  AlgebraFile out;
  out.algebra = std::make_shared<const FiniteAlgebra>(std::move(labels), std::move(constants), coord_list(field(j, "unit"), dim, "unit"));
  if (j.contains("idempotent_e") && !j.at("idempotent_e").is_null()) {
    out.e = out.algebra->element(coord_list(j.at("idempotent_e"), dim, "idempotent_e"));
    (void)out.triangular();
  }
  return out;
}

nlohmann::ordered_json map_to_json(const FiniteAlgebra &alg, const BilinearMap &phi) {
  nlohmann::ordered_json j;
  j["schema_version"] = kSchemaVersion;
  j["algebra_fingerprint"] = fingerprint(alg);
  json coeffs = json::array();
  for (const auto &c : phi.coefficients()) {
    coeffs.push_back(json::array({c.i, c.j, c.k, integer_json(c.value.get_num()), integer_json(c.value.get_den())}));
  }
  j["coeffs"] = std::move(coeffs);
  return j;
}

BilinearMap map_from_json(const FiniteAlgebra &alg, const json &j) {
  check_schema(j);
  const auto &fp = field(j, "algebra_fingerprint");
  if (!fp.is_string()) bad("algebra_fingerprint must be a string");
  if (fp.get<std::string>() != fingerprint(alg)) {
    throw Error(ErrorKind::FingerprintMismatch, "map file was made for algebra " + fp.get<std::string>() + ", not " + fingerprint(alg));
  }
  const auto dim = alg.dim();
  BilinearMap phi(alg);
  for (const auto &c : field(j, "coeffs")) {
    if (!c.is_array() || c.size() != 5) bad("coeffs entries must be [i, j, k, num, den]");
    const auto i = index_of(c[0], dim, "i"), jj = index_of(c[1], dim, "j"), k = index_of(c[2], dim, "k");
    phi.set(i, jj, k, phi.coeff(i, jj, k) + parse_rational_pair(c[3], c[4]));
  }
  return phi;
}

Poset poset_from_json(const json &j) {
  const auto &size_j = field(j, "size");
  if (!size_j.is_number_integer() || size_j.get<long long>() < 1) throw Error(ErrorKind::BadPoset, "size must be a positive integer");
  const auto n = size_j.get<std::size_t>();
  std::vector<std::pair<std::size_t, std::size_t>> rel;
  for (const auto &c : field(j, "covers")) {
    if (!c.is_array() || c.size() != 2 || !c[0].is_number_integer() || !c[1].is_number_integer()) {
      throw Error(ErrorKind::BadPoset, "covers entries must be [x, y] integer pairs");
    }
    const auto x = c[0].get<long long>(), y = c[1].get<long long>();
    if (x < 1 || y < 1 || static_cast<std::size_t>(x) > n || static_cast<std::size_t>(y) > n) {
      throw Error(ErrorKind::BadPoset, "cover element out of range 1.." + std::to_string(n));
    }
    rel.emplace_back(static_cast<std::size_t>(x - 1), static_cast<std::size_t>(y - 1));
  }
  return Poset::from_relations(n, rel);
}

json read_json_file(const std::string &path) {
  std::ifstream in(path);
  if (!in) bad("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception &ex) {
    bad(path + ": " + ex.what());
  }
}

void write_text_file(const std::string &path, const std::string &text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) bad("cannot write " + path);
  out << text;
  if (!out) bad("write failed: " + path);
}

AlgebraFile load_algebra(const std::string &path) { return algebra_from_json(read_json_file(path)); }

void save_algebra(const std::string &path, const FiniteAlgebra &alg, const std::optional<Element> &e) {
  write_text_file(path, file_text(algebra_to_json(alg, e)));
}

BilinearMap load_map(const FiniteAlgebra &alg, const std::string &path) { return map_from_json(alg, read_json_file(path)); }

void save_map(const std::string &path, const FiniteAlgebra &alg, const BilinearMap &phi) {
  write_text_file(path, file_text(map_to_json(alg, phi)));
}

} // namespace trialg
