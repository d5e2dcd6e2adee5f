#include "circord/io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

namespace circord {

namespace {

[[noreturn]] void fail(const std::string& field, const std::string& what) {
  throw InvalidInput(field + ": " + what);
}

const Json& require(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(where.empty() ? key : where + "." + key, "missing field");
  return *it;
}

long long as_int(const Json& j, const std::string& field) {
  if (!j.is_number_integer()) fail(field, "expected an integer");
  return j.get<long long>();
}

std::vector<std::vector<long long>> int_matrix(const Json& j, const std::string& field) {
  if (!j.is_array()) fail(field, "expected an array of rows");
  std::vector<std::vector<long long>> rows;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string f = field + "[" + std::to_string(i) + "]";
    if (!j[i].is_array()) fail(f, "expected an array");
    std::vector<long long> row;
    for (std::size_t k = 0; k < j[i].size(); ++k) row.push_back(as_int(j[i][k], f + "[" + std::to_string(k) + "]"));
    rows.push_back(std::move(row));
  }
  return rows;
}

FiniteGroup group_field(const Json& j, const std::string& field) {
  if (j.is_string()) return named_group(j.get<std::string>());
  try {
    return group_from_json(j);
  } catch (const InvalidInput& e) {
    fail(field, e.what());
  }
}

}  // namespace

FiniteGroup group_from_json(const Json& j) {
  const std::string name = j.contains("name") && j["name"].is_string() ? j["name"].get<std::string>() : "G";
  const long long order = as_int(require(j, "order", ""), "order");
  if (order < 1) fail("order", "must be positive");
  const auto rows = int_matrix(require(j, "table", ""), "table");
  if (static_cast<long long>(rows.size()) != order) fail("table", "expected " + std::to_string(order) + " rows");
  Table t;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (static_cast<long long>(rows[i].size()) != order)
      fail("table[" + std::to_string(i) + "]", "expected " + std::to_string(order) + " entries");
    std::vector<int> row;
    for (std::size_t k = 0; k < rows[i].size(); ++k) {
      if (rows[i][k] < 0 || rows[i][k] >= order)
        fail("table[" + std::to_string(i) + "][" + std::to_string(k) + "]", "entry out of range");
      row.push_back(static_cast<int>(rows[i][k]));
    }
    t.push_back(std::move(row));
  }
  for (long long g = 0; g < order; ++g)
    if (t[0][g] != g || t[g][0] != g)
      fail("table", "element 0 must be the identity (row/column " + std::to_string(g) + ")");
  std::vector<std::string> names;
  if (j.contains("names")) {
    const Json& n = j["names"];
    if (!n.is_array() || static_cast<long long>(n.size()) != order)
      fail("names", "expected " + std::to_string(order) + " strings");
    for (std::size_t i = 0; i < n.size(); ++i) {
      if (!n[i].is_string()) fail("names[" + std::to_string(i) + "]", "expected a string");
      names.push_back(n[i].get<std::string>());
    }
  }
  try {
    return FiniteGroup::from_table(name, t, std::move(names));
  } catch (const InvalidInput& e) {
    fail("table", e.what());
  }
}

Json group_to_json(const FiniteGroup& g) {
  return Json{{"name", g.name()}, {"order", g.order()}, {"table", g.table()}, {"names", g.element_names()}};
}

FiniteGroup named_group(const std::string& name) {
  if (name == "trivial" || name == "1") return cyclic_group(1);
  FiniteGroup g;
  bool first = true;
  std::stringstream ss(name);
  std::string part;
  while (std::getline(ss, part, 'x')) {
    std::string digits;
    if (part.rfind("Z/", 0) == 0)
      digits = part.substr(2);
    else if (part.rfind("Z", 0) == 0)
      digits = part.substr(1);
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos || digits.size() > 6)
      fail("group", "unknown group name '" + name + "'");
    const int k = std::stoi(digits);
    if (k < 1) fail("group", "cyclic factor must have order >= 1");
    const FiniteGroup c = cyclic_group(k);
    g = first ? c : direct_product(g, c).group;
    first = false;
  }
  if (first) fail("group", "empty group name");
  return FiniteGroup::from_table(name, g.table(), g.element_names());
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput(path + ": cannot open file");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InvalidInput(path + ": " + e.what());
  }
}

FiniteGroup load_group(const std::string& path_or_name) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(path_or_name, ec)) {
    try {
      return group_from_json(read_json_file(path_or_name));
    } catch (const InvalidInput& e) {
      throw InvalidInput(path_or_name + ": " + e.what());
    }
  }
  return named_group(path_or_name);
}

ParsedOrdering ordering_from_json(const Json& j) {
  FiniteGroup g = group_field(require(j, "group", ""), "group");
  const Json& kind_j = require(j, "kind", "");
  if (!kind_j.is_string()) fail("kind", "expected a string");
  const std::string kind = kind_j.get<std::string>();
  const Json& data = require(j, "data", "");
  const int n = g.order();
  if (kind == "arrangement") {
    if (!data.is_array()) fail("data", "expected an integer list");
    Arrangement a;
    for (std::size_t i = 0; i < data.size(); ++i) {
      const long long v = as_int(data[i], "data[" + std::to_string(i) + "]");
      if (v < 0 || v >= n) fail("data[" + std::to_string(i) + "]", "element out of range");
      a.push_back(static_cast<Element>(v));
    }
    return {g, arrangement_to_inhom(g, a)};
  }
  if (kind == "inhom") {
    Cochain2 f = Cochain2::from_rows(int_matrix(data, "data"));
    return {g, validate_inhom(g, std::move(f))};
  }
  if (kind == "hom") {
    TripleTable c(n);
    if (!data.is_array() || static_cast<int>(data.size()) != n) fail("data", "expected an order^3 array");
    for (int a = 0; a < n; ++a) {
      const auto rows = int_matrix(data[a], "data[" + std::to_string(a) + "]");
      if (static_cast<int>(rows.size()) != n) fail("data[" + std::to_string(a) + "]", "wrong size");
      for (int b = 0; b < n; ++b) {
        if (static_cast<int>(rows[b].size()) != n)
          fail("data[" + std::to_string(a) + "][" + std::to_string(b) + "]", "wrong size");
        for (int d = 0; d < n; ++d) {
          if (rows[b][d] < -1 || rows[b][d] > 1)
            fail("data[" + std::to_string(a) + "][" + std::to_string(b) + "][" + std::to_string(d) + "]",
                 "value must be -1, 0 or 1");
          c(a, b, d) = static_cast<signed char>(rows[b][d]);
        }
      }
    }
    return {g, hom_to_inhom(validate_hom(g, std::move(c)))};
  }
  fail("kind", "expected arrangement, inhom or hom");
}

Json ordering_to_json(const InhomCircularOrder& f, const std::string& kind) {
  const FiniteGroup& g = f.group();
  Json out{{"group", group_to_json(g)}, {"kind", kind}};
  if (kind == "arrangement") {
    out["data"] = inhom_to_arrangement(f);
  } else if (kind == "inhom") {
    out["data"] = f.cochain().rows();
  } else if (kind == "hom") {
    const HomCircularOrder c = inhom_to_hom(f);
    const int n = g.order();
    Json data = Json::array();
    for (int a = 0; a < n; ++a) {
      Json plane = Json::array();
      for (int b = 0; b < n; ++b) {
        Json row = Json::array();
        for (int d = 0; d < n; ++d) row.push_back(c(a, b, d));
        plane.push_back(row);
      }
      data.push_back(plane);
    }
    out["data"] = data;
  } else {
    throw InvalidInput("ordering kind must be arrangement, inhom or hom");
  }
  return out;
}

CentralExtension extension_from_json(const Json& j) {
  FiniteGroup g = group_field(require(j, "base", ""), "base");
  Cochain2 f = Cochain2::from_rows(int_matrix(require(j, "cocycle", ""), "cocycle"));
  if (f.order() != g.order()) fail("cocycle", "size does not match the base group");
  const Json& c = require(j, "coefficients", "");
  Coefficients coeff;
  if (c.is_string() && c.get<std::string>() == "Z") {
    coeff = Coefficients::integers();
  } else if (c.is_object() && c.contains("Zn")) {
    coeff = Coefficients::mod(as_int(c["Zn"], "coefficients.Zn"));
  } else {
    fail("coefficients", "expected \"Z\" or {\"Zn\": n}");
  }
  try {
    return CentralExtension::build(std::move(g), std::move(f), coeff);
  } catch (const InvalidInput& e) {
    fail("cocycle", e.what());
  }
}

Json extension_to_json(const CentralExtension& e) {
  Json coeff = e.coefficients().is_integral() ? Json("Z") : Json{{"Zn", e.coefficients().modulus}};
  return Json{{"base", group_to_json(e.base())}, {"cocycle", e.cocycle().rows()}, {"coefficients", coeff}};
}

Json integer_to_json(const Integer& v) { return v.fits_int64() ? Json(v.to_int64()) : Json(v.str()); }

Json class_to_json(const CohomologyClass& c) {
  Json moduli = Json::array(), coords = Json::array();
  for (const Integer& m : c.moduli) moduli.push_back(integer_to_json(m));
  for (const Integer& x : c.coordinates) coords.push_back(integer_to_json(x));
  return Json{{"invariant_factors", moduli}, {"coordinates", coords}};
}

Json spectrum_to_json(const ObstructionSpectrum& s) {
  return Json{{"is_all", s.is_all()}, {"is_empty", s.is_empty()}, {"minimal", s.minimal()}, {"description", s.describe()}};
}

Json prom_to_json(const PromElement& x) { return Json{{"M", to_string(x.m)}, {"w", x.w}}; }

PromElement prom_from_json(const Json& j) {
  const Json& m = require(j, "M", "");
  if (!m.is_string()) fail("M", "expected a string");
  PromElement x;
  const std::string s = m.get<std::string>();
  if (s == "I") x.m = PointGroup::I;
  else if (s == "A") x.m = PointGroup::A;
  else if (s == "B") x.m = PointGroup::B;
  else if (s == "AB") x.m = PointGroup::AB;
  else fail("M", "expected I, A, B or AB");
  const Json& w = require(j, "w", "");
  if (!w.is_array() || w.size() != 3) fail("w", "expected three integers");
  for (int i = 0; i < 3; ++i) x.w[i] = as_int(w[i], "w[" + std::to_string(i) + "]");
  check_parity(x);
  return x;
}

}  // namespace circord
