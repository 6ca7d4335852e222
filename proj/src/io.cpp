#include "matgor/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>

#include "matgor/finite_field.hpp"

namespace matgor {

using nlohmann::json;

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("matroid spec lacks \"") + key + "\"");
  return j.at(key);
}

int get_int(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_number_integer()) throw InputError(std::string("\"") + key + "\" must be an integer");
  return v.get<int>();
}

std::string label_of(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long>());
  throw InputError("ground set labels must be strings or integers");
}

FiniteField field_from_json(const json& f) {
  if (!f.is_object()) throw InputError("\"field\" must be an object");
  int p = get_int(f, "p");
  int k = f.contains("k") ? get_int(f, "k") : 1;
  if (k == 1) return FiniteField(p);
  if (f.contains("modulus")) {
    if (!f.at("modulus").is_array()) throw InputError("\"modulus\" must be an integer list");
    std::vector<int> mod;
    for (const auto& c : f.at("modulus")) {
      if (!c.is_number_integer()) throw InputError("\"modulus\" must be an integer list");
      mod.push_back(c.get<int>());
    }
    return FiniteField(p, k, mod);
  }
  if (!is_prime(p) || k < 1 || k > 20) throw InputError("invalid field spec");
  long q = 1;
  for (int i = 0; i < k; ++i) q *= p;
  if (q > (1L << 20)) throw InputError("field order exceeds 2^20");
  return FiniteField::of_order(int(q));
}

Matroid from_bases_json(const json& j) {
  const json& ground = field(j, "ground");
  const json& bases = field(j, "bases");
  if (!ground.is_array() || !bases.is_array()) throw InputError("\"ground\" and \"bases\" must be arrays");
  std::vector<std::string> labels;
  std::map<std::string, int> index;
  for (const auto& g : ground) {
    std::string l = label_of(g);
    if (index.count(l)) throw InputError("duplicate ground set label " + l);
    index[l] = int(labels.size());
    labels.push_back(l);
  }
  if (labels.size() > std::size_t(kMaxGround)) throw GuardExceeded("ground set larger than 40 elements");
  if (bases.empty()) throw InputError("bases list is empty");
  std::vector<Subset> bs;
  for (const auto& b : bases) {
    if (!b.is_array()) throw InputError("each basis must be an array");
    Subset s = 0;
    for (const auto& e : b) {
      auto it = index.find(label_of(e));
      if (it == index.end()) throw InputError("basis element " + label_of(e) + " is not in the ground set");
      if (contains(s, it->second)) throw InputError("repeated element in a basis");
      s |= singleton(it->second);
    }
    bs.push_back(s);
  }
  for (Subset s : bs)
    if (popcount(s) != popcount(bs.front())) throw InputError("bases have different sizes");
  return from_bases(labels, bs);
}

Matroid from_matrix_json(const json& j) {
  FiniteField f = field_from_json(field(j, "field"));
  const json& cols = field(j, "columns");
  if (!cols.is_array() || cols.empty()) throw InputError("\"columns\" must be a nonempty array");
  if (cols.size() > std::size_t(kMaxGround)) throw GuardExceeded("ground set larger than 40 elements");
  std::vector<std::vector<FiniteField::Element>> vs;
  for (const auto& c : cols) {
    if (!c.is_array() || c.empty()) throw InputError("each column must be a nonempty array");
    std::vector<FiniteField::Element> v;
    for (const auto& x : c) {
      if (!x.is_number_integer()) throw InputError("matrix entries must be integers");
      long e = x.get<long>();
      if (f.degree() == 1) e = ((e % f.order()) + f.order()) % f.order();
      if (e < 0 || e >= f.order()) throw InputError("matrix entry outside the field");
      v.push_back(FiniteField::Element(e));
    }
    if (!vs.empty() && v.size() != vs.front().size()) throw InputError("columns have different lengths");
    vs.push_back(std::move(v));
  }
  std::vector<std::string> labels;
  if (j.contains("ground")) {
    for (const auto& g : j.at("ground")) labels.push_back(label_of(g));
    if (labels.size() != vs.size()) throw InputError("\"ground\" length differs from the number of columns");
  }
  return from_gf_matrix(GFMatrix::from_columns(f, vs), labels);
}

}  // namespace

Matroid matroid_from_json(const json& j) {
  if (!j.is_object()) throw InputError("matroid spec must be a JSON object");
  const json& t = field(j, "type");
  if (!t.is_string()) throw InputError("\"type\" must be a string");
  const std::string type = t.get<std::string>();
  if (type == "bases") return from_bases_json(j);
  if (type == "matrix") return from_matrix_json(j);
  if (type == "pg") {
    int q = get_int(j, "q"), n = get_int(j, "n");
    if (q < 2 || n < 1) throw InputError("pg needs q >= 2 and n >= 1");
    return projective_geometry(q, n);
  }
  if (type == "boolean") {
    int n = get_int(j, "n");
    if (n < 1) throw InputError("boolean needs n >= 1");
    if (n > kMaxGround) throw GuardExceeded("ground set larger than 40 elements");
    check_guard(n <= 20, "boolean matroid on more than 20 elements");
    return boolean_matroid(n);
  }
  if (type == "plane") {
    const json& lines = field(j, "lines");
    if (!lines.is_array()) throw InputError("\"lines\" must be an array");
    std::vector<std::vector<int>> ls;
    for (const auto& l : lines) {
      if (!l.is_array()) throw InputError("each line must be an array of integers");
      std::vector<int> pts;
      for (const auto& p : l) {
        if (!p.is_number_integer()) throw InputError("each line must be an array of integers");
        pts.push_back(p.get<int>());
      }
      ls.push_back(std::move(pts));
    }
    return projective_plane(ls);
  }
  if (type == "truncation") {
    Matroid inner = matroid_from_json(field(j, "of"));
    int i = get_int(j, "i");
    if (i < 1 || i > inner.rank()) throw InputError("truncation level out of range");
    return truncation(inner, i);
  }
  if (type == "direct_sum") {
    const json& parts = field(j, "parts");
    if (!parts.is_array() || parts.size() < 2) throw InputError("direct_sum needs at least two parts");
    Matroid acc = matroid_from_json(parts.at(0));
    for (std::size_t i = 1; i < parts.size(); ++i) acc = direct_sum(acc, matroid_from_json(parts.at(i)));
    return acc;
  }
  throw InputError("unknown matroid type \"" + type + "\"");
}

Matroid load_matroid(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw InputError(std::string("invalid JSON in ") + path + ": " + e.what());
  }
  return matroid_from_json(j);
}

json builtin_spec(const std::string& name) {
  if (name == "m22") return {{"type", "pg"}, {"q", 2}, {"n", 2}};
  if (name == "m23") return {{"type", "pg"}, {"q", 2}, {"n", 3}};
  if (name == "fivevec")
    return {{"type", "matrix"},
            {"field", {{"p", 2}, {"k", 1}}},
            {"columns", {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {0, 1, 1}}}};
  if (name == "fano")
    return {{"type", "plane"},
            {"lines", {{1, 2, 4}, {2, 3, 5}, {3, 4, 6}, {4, 5, 7}, {5, 6, 1}, {6, 7, 2}, {7, 1, 3}}}};
  if (name.rfind("boolean:", 0) == 0) {
    const std::string arg = name.substr(8);
    if (arg.empty() || arg.size() > 3 || !std::all_of(arg.begin(), arg.end(), [](char c) { return std::isdigit(c); }))
      throw InputError("boolean:N needs a positive integer N");
    return {{"type", "boolean"}, {"n", std::stoi(arg)}};
  }
  throw InputError("unknown built-in matroid \"" + name + "\" (m22, m23, fivevec, boolean:N, fano)");
}

Matroid builtin_matroid(const std::string& name) { return matroid_from_json(builtin_spec(name)); }

json label_json(const std::string& s) {
  bool numeric = !s.empty() && s.size() < 10 && std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(c); });
  if (numeric) return std::stol(s);
  return s;
}

json subset_json(const Matroid& m, Subset s) {
  json out = json::array();
  for (int e : elements(s)) out.push_back(label_json(m.labels()[e]));
  return out;
}

json matroid_to_json(const Matroid& m) {
  json ground = json::array();
  for (const auto& l : m.labels()) ground.push_back(label_json(l));
  auto bases = m.bases();
  std::sort(bases.begin(), bases.end(), lex_less);
  json bs = json::array();
  for (Subset b : bases) {
    json row = json::array();
    for (int e : elements(b)) row.push_back(label_json(m.labels()[e]));
    bs.push_back(row);
  }
  return {{"type", "bases"}, {"ground", ground}, {"bases", bs}};
}

}  // namespace matgor
