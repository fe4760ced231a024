#include "alcove/cli/document.hpp"

#include <limits>
#include <set>

#include "alcove/errors.hpp"

namespace alcove::cli {

using nlohmann::json;

namespace {

const std::set<std::string> kKinds = {"alcoved", "hypersimplex", "wsp-matroid", "transversal", "order-poset", "weight"};

class Checker {
 public:
  std::vector<Violation> violations;

  void fail(std::string path, std::string message) { violations.push_back({std::move(path), std::move(message)}); }

  void allow_only(const json& obj, const std::string& path, const std::set<std::string>& keys) {
    for (const auto& [key, _] : obj.items())
      if (!keys.contains(key)) fail(path + "/" + key, "unknown field");
  }

  std::optional<Int> integer(const json& obj, const std::string& path, const std::string& key, bool required = true) {
    auto it = obj.find(key);
    if (it == obj.end()) {
      if (required) fail(path + "/" + key, "missing required field");
      return std::nullopt;
    }
    return integer_value(*it, path + "/" + key);
  }

  std::optional<Int> integer_value(const json& v, const std::string& path) {
    if (v.is_number_integer()) {
      if (v.is_number_unsigned() && v.get<std::uint64_t>() > static_cast<std::uint64_t>(std::numeric_limits<Int>::max())) {
        fail(path, "integer out of range");
        return std::nullopt;
      }
      return v.get<Int>();
    }
    fail(path, "expected an integer");
    return std::nullopt;
  }

  // Integer in [lo, hi].
  std::optional<int> ranged(const json& obj, const std::string& path, const std::string& key, Int lo, Int hi) {
    auto v = integer(obj, path, key);
    if (!v) return std::nullopt;
    if (*v < lo || *v > hi) {
      fail(path + "/" + key, "must lie in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
      return std::nullopt;
    }
    return static_cast<int>(*v);
  }

  const json* array(const json& obj, const std::string& path, const std::string& key, bool required = true) {
    auto it = obj.find(key);
    if (it == obj.end()) {
      if (required) fail(path + "/" + key, "missing required field");
      return nullptr;
    }
    if (!it->is_array()) {
      fail(path + "/" + key, "expected an array");
      return nullptr;
    }
    return &*it;
  }

  std::optional<std::vector<Int>> int_list(const json& obj, const std::string& path, const std::string& key,
                                           bool required = true) {
    const json* arr = array(obj, path, key, required);
    if (!arr) return std::nullopt;
    std::vector<Int> out;
    bool ok = true;
    for (std::size_t t = 0; t < arr->size(); ++t) {
      auto v = integer_value((*arr)[t], path + "/" + key + "/" + std::to_string(t));
      if (v) out.push_back(*v);
      else ok = false;
    }
    if (!ok) return std::nullopt;
    return out;
  }

  std::optional<std::vector<std::pair<int, int>>> pair_list(const json& obj, const std::string& path,
                                                            const std::string& key, int lo, int hi) {
    const json* arr = array(obj, path, key);
    if (!arr) return std::nullopt;
    std::vector<std::pair<int, int>> out;
    bool ok = true;
    for (std::size_t t = 0; t < arr->size(); ++t) {
      const std::string at = path + "/" + key + "/" + std::to_string(t);
      const json& e = (*arr)[t];
      if (!e.is_array() || e.size() != 2) {
        fail(at, "expected a two-element array");
        ok = false;
        continue;
      }
      auto a = integer_value(e[0], at + "/0");
      auto b = integer_value(e[1], at + "/1");
      if (!a || !b) {
        ok = false;
        continue;
      }
      if (*a < lo || *a > hi || *b < lo || *b > hi) {
        fail(at, "entries must lie in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
        ok = false;
        continue;
      }
      out.emplace_back(static_cast<int>(*a), static_cast<int>(*b));
    }
    if (!ok) return std::nullopt;
    return out;
  }
};

std::optional<Int> bound_end(Checker& ck, const json& entry, const std::string& path, const std::string& key) {
  auto it = entry.find(key);
  if (it == entry.end() || it->is_null()) return std::nullopt;
  return ck.integer_value(*it, path + "/" + key);
}

std::optional<SpecDocument> parse_alcoved(Checker& ck, const json& root) {
  ck.allow_only(root, "", {"kind", "n", "level", "unit_cube", "bounds"});
  AlcovedDocument doc;
  auto n = ck.ranged(root, "", "n", 2, 30);
  auto level = ck.integer(root, "", "level");
  if (auto it = root.find("unit_cube"); it != root.end()) {
    if (it->is_boolean()) doc.unit_cube = it->get<bool>();
    else ck.fail("/unit_cube", "expected a boolean");
  }
  const std::size_t before = ck.violations.size();
  if (const json* arr = ck.array(root, "", "bounds", false)) {
    std::set<std::pair<int, int>> seen;
    for (std::size_t t = 0; t < arr->size(); ++t) {
      const std::string at = "/bounds/" + std::to_string(t);
      const json& e = (*arr)[t];
      if (!e.is_object()) {
        ck.fail(at, "expected an object");
        continue;
      }
      ck.allow_only(e, at, {"i", "j", "lo", "hi"});
      auto i = ck.integer(e, at, "i");
      auto j = ck.integer(e, at, "j");
      BoundEntry b;
      b.lo = bound_end(ck, e, at, "lo");
      b.hi = bound_end(ck, e, at, "hi");
      if (!i || !j) continue;
      if (*i >= *j) {
        ck.fail(at, "pair must satisfy i < j");
        continue;
      }
      if (*i < 0 || (n && *j > *n - 1)) {
        ck.fail(at, "pair must satisfy 0 <= i < j <= n-1");
        continue;
      }
      if (b.lo && b.hi && *b.lo > *b.hi) ck.fail(at, "lo > hi");
      if (!seen.insert({static_cast<int>(*i), static_cast<int>(*j)}).second) ck.fail(at, "duplicate pair");
      b.i = static_cast<int>(*i);
      b.j = static_cast<int>(*j);
      doc.bounds.push_back(b);
    }
  }
  if (!n || !level || ck.violations.size() != before) return std::nullopt;
  doc.n = *n;
  doc.level = *level;
  try {
    (void)doc.spec();
  } catch (const std::exception& e) {
    ck.fail("", e.what());
    return std::nullopt;
  }
  return doc;
}

std::optional<SpecDocument> parse_hypersimplex(Checker& ck, const json& root) {
  ck.allow_only(root, "", {"kind", "k", "n"});
  auto n = ck.ranged(root, "", "n", 2, 30);
  auto k = ck.integer(root, "", "k");
  if (!n || !k) return std::nullopt;
  if (*k <= 0 || *k >= *n) {
    ck.fail("/k", "must satisfy 0 < k < n");
    return std::nullopt;
  }
  return HypersimplexDocument{static_cast<int>(*k), *n};
}

std::optional<std::vector<int>> small_ints(Checker& ck, const json& root, const std::string& key, bool required) {
  auto v = ck.int_list(root, "", key, required);
  if (!v) return std::nullopt;
  std::vector<int> out;
  for (std::size_t t = 0; t < v->size(); ++t) {
    if ((*v)[t] < 0 || (*v)[t] > 30) {
      ck.fail("/" + key + "/" + std::to_string(t), "must lie in [0, 30]");
      return std::nullopt;
    }
    out.push_back(static_cast<int>((*v)[t]));
  }
  return out;
}

std::optional<SpecDocument> parse_wsp(Checker& ck, const json& root) {
  ck.allow_only(root, "", {"kind", "parts", "b", "c", "k"});
  WspDocument doc;
  auto parts = small_ints(ck, root, "parts", true);
  auto k = ck.integer(root, "", "k");
  const bool has_b = root.contains("b");
  const bool has_c = root.contains("c");
  auto b = small_ints(ck, root, "b", false);
  auto c = small_ints(ck, root, "c", false);
  if (!parts || !k || (has_b && !b) || (has_c && !c)) return std::nullopt;
  doc.parts = *parts;
  doc.b = has_b ? *b : std::vector<int>(parts->size(), 0);
  doc.c = has_c ? *c : std::vector<int>(parts->size(), 1);
  WeightedSetPartition p;
  try {
    p = doc.partition();
  } catch (const std::exception& e) {
    ck.fail("/parts", e.what());
    return std::nullopt;
  }
  if (p.n() > 30) {
    ck.fail("/parts", "total size must be at most 30");
    return std::nullopt;
  }
  if (*k <= 0 || *k >= p.n()) {
    ck.fail("/k", "must satisfy 0 < k < n");
    return std::nullopt;
  }
  doc.k = static_cast<int>(*k);
  return doc;
}

std::optional<SpecDocument> parse_transversal(Checker& ck, const json& root) {
  ck.allow_only(root, "", {"kind", "n", "intervals"});
  auto n = ck.ranged(root, "", "n", 1, 30);
  if (!n) return std::nullopt;
  auto intervals = ck.pair_list(root, "", "intervals", 1, *n);
  if (!intervals) return std::nullopt;
  if (intervals->empty()) {
    ck.fail("/intervals", "at least one interval is required");
    return std::nullopt;
  }
  return TransversalDocument{*n, *intervals};
}

std::optional<SpecDocument> parse_order_poset(Checker& ck, const json& root) {
  ck.allow_only(root, "", {"kind", "m", "relations"});
  auto m = ck.ranged(root, "", "m", 1, 29);
  if (!m) return std::nullopt;
  auto relations = ck.pair_list(root, "", "relations", 1, *m);
  if (!relations) return std::nullopt;
  for (std::size_t t = 0; t < relations->size(); ++t)
    if ((*relations)[t].first >= (*relations)[t].second)
      ck.fail("/relations/" + std::to_string(t), "natural labeling requires a < b");
  if (!ck.violations.empty()) return std::nullopt;
  return OrderPosetDocument{*m, *relations};
}

std::optional<SpecDocument> parse_weight(Checker& ck, const json& root) {
  ck.allow_only(root, "", {"kind", "lambda"});
  auto lambda = ck.int_list(root, "", "lambda");
  if (!lambda) return std::nullopt;
  if (lambda->size() < 2 || lambda->size() > 30) {
    ck.fail("/lambda", "length must lie in [2, 30]");
    return std::nullopt;
  }
  for (std::size_t t = 0; t < lambda->size(); ++t)
    if ((*lambda)[t] < 0) ck.fail("/lambda/" + std::to_string(t), "entries must be non-negative");
  if (!ck.violations.empty()) return std::nullopt;
  return WeightDocument{*lambda};
}

json bound_json(const std::optional<Int>& v) { return v ? json(*v) : json(nullptr); }

json pairs_json(const std::vector<std::pair<int, int>>& pairs) {
  json out = json::array();
  for (auto [a, b] : pairs) out.push_back({a, b});
  return out;
}

}  // namespace

AlcovedSpec AlcovedDocument::spec() const {
  AlcovedSpec::BoundMap map;
  for (const auto& b : bounds) map[{b.i, b.j}] = Bound{b.lo, b.hi};
  return AlcovedSpec(n, level, std::move(map), unit_cube);
}

Poset OrderPosetDocument::poset() const {
  Poset p;
  p.m = m;
  p.relations.insert(relations.begin(), relations.end());
  return p;
}

std::string kind_name(const SpecDocument& doc) {
  static const char* names[] = {"alcoved", "hypersimplex", "wsp-matroid", "transversal", "order-poset", "weight"};
  return names[doc.index()];
}

ParseResult parse_spec(std::string_view text) {
  json value;
  try {
    value = json::parse(text);
  } catch (const json::parse_error& e) {
    return ParseResult{std::nullopt, {Violation{"", std::string("malformed JSON: ") + e.what()}}};
  }
  return parse_spec_value(value);
}

ParseResult parse_spec_value(const json& value) {
  Checker ck;
  if (!value.is_object()) return ParseResult{std::nullopt, {Violation{"", "expected a JSON object"}}};
  auto kind = value.find("kind");
  if (kind == value.end()) return ParseResult{std::nullopt, {Violation{"/kind", "missing required field"}}};
  if (!kind->is_string() || !kKinds.contains(kind->get<std::string>()))
    return ParseResult{std::nullopt, {Violation{"/kind", "unknown kind"}}};
  const std::string k = kind->get<std::string>();
  std::optional<SpecDocument> doc;
  if (k == "alcoved") doc = parse_alcoved(ck, value);
  else if (k == "hypersimplex") doc = parse_hypersimplex(ck, value);
  else if (k == "wsp-matroid") doc = parse_wsp(ck, value);
  else if (k == "transversal") doc = parse_transversal(ck, value);
  else if (k == "order-poset") doc = parse_order_poset(ck, value);
  else doc = parse_weight(ck, value);
  if (!ck.violations.empty()) doc.reset();
  return ParseResult{doc, std::move(ck.violations)};
}

json to_json(const SpecDocument& doc) {
  json out;
  out["kind"] = kind_name(doc);
  if (auto* a = std::get_if<AlcovedDocument>(&doc)) {
    out["n"] = a->n;
    out["level"] = a->level;
    out["unit_cube"] = a->unit_cube;
    out["bounds"] = json::array();
    for (const auto& b : a->bounds)
      out["bounds"].push_back({{"i", b.i}, {"j", b.j}, {"lo", bound_json(b.lo)}, {"hi", bound_json(b.hi)}});
  } else if (auto* h = std::get_if<HypersimplexDocument>(&doc)) {
    out["k"] = h->k;
    out["n"] = h->n;
  } else if (auto* w = std::get_if<WspDocument>(&doc)) {
    out["parts"] = w->parts;
    out["b"] = w->b;
    out["c"] = w->c;
    out["k"] = w->k;
  } else if (auto* t = std::get_if<TransversalDocument>(&doc)) {
    out["n"] = t->n;
    out["intervals"] = pairs_json(t->intervals);
  } else if (auto* p = std::get_if<OrderPosetDocument>(&doc)) {
    out["m"] = p->m;
    out["relations"] = pairs_json(p->relations);
  } else {
    out["lambda"] = std::get<WeightDocument>(doc).lambda;
  }
  return out;
}

}  // namespace alcove::cli
