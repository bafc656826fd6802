#include <motzeta/errors.hpp>
#include <motzeta/io.hpp>

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace motzeta {

using nlohmann::json;

namespace {

std::string where(std::string_view text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

long long as_int(const json& v, const std::string& what) {
  if (!v.is_number_integer()) throw InputError("fan JSON: " + what + " must be an integer");
  return v.get<long long>();
}

const json& field(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) throw InputError(std::string("fan JSON: missing field \"") + key + "\"");
  return *it;
}

std::string csv_quote(const std::string& s) { return '"' + s + '"'; }

}  // namespace

Fan fan_from_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw InputError("fan JSON parse error at " + where(text, e.byte) + ": " + e.what());
  }
  if (!j.is_object()) throw InputError("fan JSON: top level must be an object");
  // Reports produced by `fan --format json` nest the fan under "fan".
  if (!j.contains("rank") && j.contains("fan")) j = json(j["fan"]);
  if (!j.is_object()) throw InputError("fan JSON: \"fan\" must be an object");
  const long long rank = as_int(field(j, "rank"), "rank");
  if (rank < 1 || rank > 16) throw InputError("fan JSON: rank out of range");

  const json& jr = field(j, "rays");
  if (!jr.is_array()) throw InputError("fan JSON: rays must be an array");
  std::vector<IntVector> rays;
  for (std::size_t i = 0; i < jr.size(); ++i) {
    if (!jr[i].is_array()) throw InputError("fan JSON: ray " + std::to_string(i) + " is not an array");
    IntVector v;
    for (const auto& x : jr[i]) v.push_back(as_int(x, "ray " + std::to_string(i) + " entry"));
    rays.push_back(std::move(v));
  }

  const json& jc = field(j, "max_cones");
  if (!jc.is_array()) throw InputError("fan JSON: max_cones must be an array");
  std::vector<std::vector<int>> cones;
  for (std::size_t i = 0; i < jc.size(); ++i) {
    if (!jc[i].is_array())
      throw InputError("fan JSON: cone " + std::to_string(i) + " is not an array");
    std::vector<int> c;
    for (const auto& x : jc[i])
      c.push_back(static_cast<int>(as_int(x, "cone " + std::to_string(i) + " index")));
    cones.push_back(std::move(c));
  }
  return Fan(static_cast<int>(rank), std::move(rays), std::move(cones));
}

Fan load_fan_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open fan file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return fan_from_json(ss.str());
}

std::string fan_to_json(const Fan& f) {
  json j;
  j["rank"] = f.rank();
  j["rays"] = f.rays();
  j["max_cones"] = f.max_cones();
  return j.dump();
}

Format parse_format(std::string_view s) {
  if (s == "text") return Format::text;
  if (s == "json") return Format::json;
  if (s == "csv") return Format::csv;
  throw InputError("unknown format '" + std::string(s) + "' (text, json, csv)");
}

std::string mobius_table_json(const MultiDegreeTable& t) {
  json rows = json::array();
  for (const auto& [e, c] : t.values) rows.push_back({{"e", e}, {"mu", c.str()}});
  json j;
  j["ground"] = t.ground;
  j["trunc"] = t.trunc;
  j["entries"] = rows;
  return j.dump(2);
}

std::string mobius_table_csv(const MultiDegreeTable& t) {
  std::ostringstream os;
  for (int i = 0; i < t.ground; ++i) os << "e_" << i << ',';
  os << "mu\n";
  for (const auto& [e, c] : t.values) {
    for (int x : e) os << x << ',';
    os << csv_quote(c.str()) << '\n';
  }
  return os.str();
}

std::string heights_report(const HeightSeries& hs, const std::vector<int>& qs, Format fmt) {
  std::ostringstream os;
  json rows = json::array();
  if (fmt == Format::csv) {
    os << "d,n,vdim,class";
    for (int q : qs) os << ",at_" << q;
    os << '\n';
  }
  for (int d = 0; d <= hs.D; ++d) {
    const auto& c = hs.classes[static_cast<std::size_t>(d)];
    const auto n = hs.components[static_cast<std::size_t>(d)];
    const std::string vd = c.is_zero() ? "" : std::to_string(c.vdim());
    std::vector<std::string> vals;
    for (int q : qs) vals.push_back(to_string(c.eval(Rational(q))));
    switch (fmt) {
      case Format::json: {
        json row{{"d", d}, {"n", n}, {"class", c.str()}};
        row["vdim"] = c.is_zero() ? json(nullptr) : json(c.vdim());
        json sp = json::object();
        for (std::size_t i = 0; i < qs.size(); ++i) sp[std::to_string(qs[i])] = vals[i];
        row["at"] = sp;
        rows.push_back(row);
        break;
      }
      case Format::csv:
        os << d << ',' << n << ',' << vd << ',' << csv_quote(c.str());
        for (const auto& v : vals) os << ',' << v;
        os << '\n';
        break;
      case Format::text:
        os << "d=" << d << "  n=" << n << "  [U] = " << c.str();
        for (std::size_t i = 0; i < qs.size(); ++i) os << "  @" << qs[i] << "=" << vals[i];
        os << '\n';
        break;
    }
  }
  if (fmt == Format::json) return rows.dump(2) + "\n";
  return os.str();
}

}  // namespace motzeta
