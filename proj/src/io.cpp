#include "isograss/io.hpp"

#include "isograss/errors.hpp"

#include <fstream>
#include <sstream>

namespace isograss {

namespace {

std::string rational_text(const mpq_class& q) { return q.get_str(); }

int int_field(const Json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number_integer())
    throw ParseError(std::string("params: missing integer field '") + key + "'");
  return j.at(key).get<int>();
}

}  // namespace

Json scalar_to_json(const Scalar& x, Field field) {
  if (field == Field::Rational) {
    if (!x.is_real()) throw InvalidArgument("non-real entry in a rational matrix");
    return rational_text(x.re());
  }
  Json o;
  o["re"] = rational_text(x.re());
  o["im"] = rational_text(x.im());
  return o;
}

Scalar scalar_from_json(const Json& j) {
  if (j.is_number_integer()) return Scalar(mpq_class(j.get<long>()));
  if (j.is_string()) return Scalar(parse_rational(j.get<std::string>()));
  if (j.is_object()) {
    auto part = [&](const char* key) {
      if (!j.contains(key)) return mpq_class(0);
      const Json& v = j.at(key);
      if (v.is_number_integer()) return mpq_class(v.get<long>());
      if (v.is_string()) return parse_rational(v.get<std::string>());
      throw ParseError(std::string("scalar: field '") + key + "' must be a string");
    };
    for (const auto& [k, v] : j.items())
      if (k != "re" && k != "im") throw ParseError("scalar: unexpected key '" + k + "'");
    return Scalar(part("re"), part("im"));
  }
  throw ParseError("scalar must be a string \"a/b\" or an object {\"re\", \"im\"}");
}

Json params_to_json(CaseTag c, const GroupParams& g) {
  Json o;
  if (is_signed_case(c)) {
    o["p"] = g.p;
    o["q"] = g.q;
    o["p1"] = g.p1;
    o["q1"] = g.q1;
  } else {
    o["n"] = g.n;
    o["m"] = g.m;
  }
  return o;
}

GroupParams params_from_json(CaseTag c, const Json& j) {
  if (!j.is_object()) throw ParseError("params must be an object");
  GroupParams g = is_signed_case(c)
                      ? GroupParams::signed_params(int_field(j, "p"), int_field(j, "q"),
                                                   int_field(j, "p1"), int_field(j, "q1"))
                      : GroupParams::nm(int_field(j, "n"), int_field(j, "m"));
  validate_group_params(c, g);
  return g;
}

Json subspace_to_json(const Subspace& s) {
  const FormSpace& sp = s.space();
  Json o;
  o["case"] = std::string(to_string(sp.case_tag()));
  o["params"] = params_to_json(sp.case_tag(), sp.params());
  Json rows = Json::array();
  for (std::size_t i = 0; i < s.dim(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < sp.dim(); ++j) row.push_back(scalar_to_json(s.basis()(i, j), sp.field()));
    rows.push_back(row);
  }
  o["basis"] = rows;
  return o;
}

Subspace subspace_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("subspace file must hold a JSON object");
  for (const char* key : {"case", "params", "basis"})
    if (!j.contains(key)) throw ParseError(std::string("subspace file: missing '") + key + "'");
  if (!j.at("case").is_string()) throw ParseError("subspace file: 'case' must be a string");
  const CaseTag c = parse_case(j.at("case").get<std::string>());
  const GroupParams g = params_from_json(c, j.at("params"));
  SpacePtr space = standard_space(c, g);
  const Json& b = j.at("basis");
  if (!b.is_array()) throw ParseError("subspace file: 'basis' must be an array of rows");
  Matrix rows(0, space->dim(), space->field());
  for (const Json& row : b) {
    if (!row.is_array() || row.size() != space->dim())
      throw ParseError("subspace file: every basis row needs " + std::to_string(space->dim()) +
                       " entries");
    std::vector<Scalar> v;
    for (const Json& x : row) {
      Scalar s = scalar_from_json(x);
      if (space->field() == Field::Rational && !s.is_real())
        throw ParseError("subspace file: non-real entry for a rational case");
      v.push_back(std::move(s));
    }
    rows.append_row(v);
  }
  return Subspace(space, rows);
}

Json tuple_to_json(const OrbitParams& t) {
  Json a = Json::array();
  for (int e : t.entries()) a.push_back(e);
  return a;
}

Json orbit_info_to_json(CaseTag c, const GroupParams& g, const OrbitInfo& info) {
  Json o;
  o["case"] = std::string(to_string(c));
  o["params"] = params_to_json(c, g);
  o["tuple"] = tuple_to_json(info.params);
  o["dim_H"] = info.dim_h;
  o["dim_stab"] = info.dim_stab;
  o["dim_orbit"] = info.dim_orbit;
  o["is_open"] = info.is_open;
  o["component_count"] = info.component_count;
  return o;
}

Json atlas_to_json(CaseTag c, const GroupParams& g, int r, const std::vector<OrbitInfo>& orbits) {
  Json o;
  o["case"] = std::string(to_string(c));
  o["params"] = params_to_json(c, g);
  o["r"] = r;
  Json list = Json::array();
  for (const auto& info : orbits) list.push_back(orbit_info_to_json(c, g, info));
  o["orbits"] = list;
  return o;
}

std::string atlas_to_csv(CaseTag c, const GroupParams& g, const std::vector<OrbitInfo>& orbits) {
  std::ostringstream os;
  os << "case,params,tuple,dim_H,dim_stab,dim_orbit,is_open,component_count\n";
  for (const auto& info : orbits) {
    os << to_string(c) << ",\"" << params_to_string(c, g) << "\",\"" << info.params.to_string()
       << "\"," << info.dim_h << ',' << info.dim_stab << ',' << info.dim_orbit << ','
       << (info.is_open ? "true" : "false") << ',' << info.component_count << '\n';
  }
  return os.str();
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write '" + path + "'");
  out << content;
  if (!out) throw ParseError("error while writing '" + path + "'");
}

Json read_json_file(const std::string& path) {
  const std::string text = read_text_file(path);
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("'" + path + "' is not valid JSON: " + e.what());
  }
}

}  // namespace isograss
