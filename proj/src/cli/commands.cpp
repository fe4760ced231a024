#include "alcove/cli/commands.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "alcove/errors.hpp"
#include "alcove/geometry.hpp"
#include "alcove/hypersimplex.hpp"
#include "alcove/multi_eulerian.hpp"
#include "alcove/rank_two.hpp"
#include "alcove/sorting_ideal.hpp"

namespace alcove::cli {

using nlohmann::json;

namespace {

template <class... Fs>
struct Overloaded : Fs... {
  using Fs::operator()...;
};

Int count(std::size_t s) { return static_cast<Int>(s); }

// Indicator points, or lattice points shifted to be non-negative, as multisets.
std::vector<Multiset> as_multisets(const std::vector<Point>& points) {
  std::vector<Multiset> out;
  for (const auto& p : points) out.push_back(Multiset::from_counts(p));
  return out;
}

std::vector<Point> as_points(const std::vector<Multiset>& sets) {
  std::vector<Point> out;
  for (const auto& s : sets) out.push_back(s.counts());
  return out;
}

// Normalized (n-1)-volume of the convex hull of a sort-closed point set.
Int sorted_volume(const std::vector<Point>& points) {
  if (points.empty()) return 0;
  const int n = static_cast<int>(points[0].size());
  if (affine_rank(points) < n - 1) return 0;
  if (!is_sort_closed_points(points)) throw NotSortClosedError("point set is not sort-closed");
  return count_sorted_subsets(as_multisets(points), static_cast<std::size_t>(n));
}

Int circuit_volume(const std::vector<Point>& points) {
  if (!is_sort_closed_points(points))
    throw MethodDomainError("circuit method needs a sort-closed point set");
  return count(minimal_circuits(std::set<Point>(points.begin(), points.end())).size());
}

Int alcoved_volume(const AlcovedSpec& spec, const std::string& method) {
  if (method == "circuit") return volume(spec, VolumeMethod::circuit);
  if (method == "lattice-sum") return volume(spec, VolumeMethod::lattice_sum);
  if (method == "descent") return volume(spec, VolumeMethod::descent);
  if (method == "sorted") return count(triangulate(spec, TriangulationMethod::sorted).size());
  if (method == "alcove") return count(alcoves(spec).size());
  throw ArgumentError("unknown method '" + method + "'");
}

bool is_rank_two(const WspDocument& w) {
  return w.k == 2 && w.partition().is_unweighted();
}

std::optional<WeightedSetPartition> rank_two_partition(const SpecDocument& doc) {
  if (auto* h = std::get_if<HypersimplexDocument>(&doc); h && h->k == 2)
    return WeightedSetPartition::unweighted(std::vector<int>(static_cast<std::size_t>(h->n), 1));
  if (auto* w = std::get_if<WspDocument>(&doc); w && is_rank_two(*w)) return w->partition();
  return std::nullopt;
}

std::vector<Point> weight_points(const WeightDocument& w) { return weight_polytope_points(w.lambda); }

std::optional<AlcovedSpec> alcoved_form(const SpecDocument& doc) {
  return std::visit(Overloaded{
                        [](const AlcovedDocument& a) -> std::optional<AlcovedSpec> { return a.spec(); },
                        [](const HypersimplexDocument& h) -> std::optional<AlcovedSpec> {
                          return AlcovedSpec::hypersimplex(h.k, h.n);
                        },
                        [](const WspDocument& w) -> std::optional<AlcovedSpec> { return wsp_spec(w.partition(), w.k); },
                        [](const OrderPosetDocument& p) -> std::optional<AlcovedSpec> {
                          return from_order_poset(p.poset());
                        },
                        [](const auto&) -> std::optional<AlcovedSpec> { return std::nullopt; },
                    },
                    doc);
}

Output domain_error(const std::string& message) { return Output{kDomain, "", message + "\n"}; }

template <class F>
Output guarded(F&& body) {
  try {
    return body();
  } catch (const ComputationError& e) {
    return domain_error(e.what());
  } catch (const ArgumentError& e) {
    return domain_error(e.what());
  }
}

std::string quote_csv(const std::string& field) {
  if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char ch : field) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

}  // namespace

std::vector<std::string> volume_methods(const SpecDocument& doc) {
  return std::visit(
      Overloaded{
          [](const AlcovedDocument& a) -> std::vector<std::string> {
            std::vector<std::string> m{"circuit", "lattice-sum", "sorted", "alcove"};
            if (a.unit_cube) m.push_back("descent");
            return m;
          },
          [](const HypersimplexDocument&) -> std::vector<std::string> {
            return {"circuit", "stanley", "sorted", "alcove", "lattice-sum", "descent", "eulerian"};
          },
          [](const WspDocument& w) -> std::vector<std::string> {
            std::vector<std::string> m{"alcoved", "sorted", "lattice-sum"};
            if (is_rank_two(w)) {
              m.push_back("thrackles");
              m.push_back("odd-cycles");
              m.push_back("complement");
            }
            return m;
          },
          [](const TransversalDocument&) -> std::vector<std::string> { return {"sorted", "circuit"}; },
          [](const OrderPosetDocument&) -> std::vector<std::string> {
            return {"circuit", "linear-extensions", "lattice-sum"};
          },
          [](const WeightDocument&) -> std::vector<std::string> { return {"sorted", "circuit"}; },
      },
      doc);
}

Int compute_volume(const SpecDocument& doc, const std::string& method) {
  const auto methods = volume_methods(doc);
  if (std::find(methods.begin(), methods.end(), method) == methods.end())
    throw ArgumentError("method '" + method + "' does not apply to kind " + kind_name(doc));
  return std::visit(
      Overloaded{
          [&](const AlcovedDocument& a) { return alcoved_volume(a.spec(), method); },
          [&](const HypersimplexDocument& h) -> Int {
            const HypersimplexId id(h.k, h.n);
            if (method == "circuit") return count(enumerate_minimal_circuits(id).size());
            if (method == "stanley") return count(triangulate(id, HypersimplexMethod::stanley).size());
            if (method == "sorted") return count(triangulate(id, HypersimplexMethod::sorted).size());
            if (method == "alcove") return count(triangulate(id, HypersimplexMethod::alcove).size());
            if (method == "eulerian") return eulerian_number(h.k, h.n - 1);
            return alcoved_volume(AlcovedSpec::hypersimplex(h.k, h.n), method);
          },
          [&](const WspDocument& w) -> Int {
            const auto p = w.partition();
            if (method == "alcoved") return volume(wsp_spec(p, w.k), VolumeMethod::circuit);
            if (method == "lattice-sum") return volume(wsp_spec(p, w.k), VolumeMethod::lattice_sum);
            if (method == "sorted") return sorted_volume(as_points(wsp_bases(p, w.k).bases));
            if (method == "thrackles") return count(enumerate_maximal_thrackles(p).size());
            if (method == "odd-cycles") return volume_by_odd_cycles(p);
            return volume_by_complement(p);
          },
          [&](const TransversalDocument& t) -> Int {
            const auto points = as_points(transversal_bases(t.system()).bases);
            if (method == "sorted") return sorted_volume(points);
            return circuit_volume(points);
          },
          [&](const OrderPosetDocument& p) -> Int {
            if (method == "linear-extensions") return count(linear_extensions(p.poset()).size());
            return alcoved_volume(from_order_poset(p.poset()), method);
          },
          [&](const WeightDocument& w) -> Int {
            const auto points = weight_points(w);
            if (method == "sorted") return sorted_volume(points);
            if (affine_rank(points) < static_cast<int>(w.lambda.size()) - 1) return 0;
            return circuit_volume(points);
          },
      },
      doc);
}

Output run_volume(const SpecDocument& doc, const std::string& method, bool all_methods) {
  return guarded([&]() -> Output {
    if (!all_methods) {
      const auto methods = volume_methods(doc);
      const std::string chosen = method.empty() ? methods.front() : method;
      if (std::find(methods.begin(), methods.end(), chosen) == methods.end()) {
        std::string list;
        for (const auto& m : methods) list += (list.empty() ? "" : ", ") + m;
        return Output{kUsage, "", "unknown method '" + chosen + "' for kind " + kind_name(doc) + " (choose from " + list + ")\n"};
      }
      return Output{kOk, std::to_string(compute_volume(doc, chosen)) + "\n", ""};
    }
    Output result;
    std::optional<Int> agreed;
    bool mismatch = false;
    for (const auto& m : volume_methods(doc)) {
      try {
        const Int v = compute_volume(doc, m);
        result.out += m + " " + std::to_string(v) + "\n";
        if (agreed && *agreed != v) mismatch = true;
        if (!agreed) agreed = v;
      } catch (const MethodDomainError& e) {
        result.out += m + " n/a\n";
      } catch (const NotSortClosedError& e) {
        result.out += m + " n/a\n";
      }
    }
    if (!agreed) return domain_error("no volume method applies");
    if (mismatch) {
      result.exit_code = kVerification;
      result.err = "volume methods disagree\n";
    }
    return result;
  });
}

std::string to_dot(const DualGraph& g) {
  std::ostringstream os;
  os << "graph gamma {\n";
  for (std::size_t i = 0; i < g.node_count(); ++i) os << "  n" << i << " [label=\"" << g.labels[i] << "\"];\n";
  for (auto [a, b] : g.edges) os << "  n" << a << " -- n" << b << ";\n";
  os << "}\n";
  return os.str();
}

json to_graph_json(const DualGraph& g) {
  json out;
  out["nodes"] = g.labels;
  out["edges"] = json::array();
  for (auto [a, b] : g.edges) out["edges"].push_back({a, b});
  return out;
}

Output run_graph(const SpecDocument& doc, const std::string& format) {
  if (format != "dot" && format != "json") return Output{kUsage, "", "format must be dot or json\n"};
  return guarded([&]() -> Output {
    DualGraph g;
    if (auto* h = std::get_if<HypersimplexDocument>(&doc)) {
      g = dual_graph(HypersimplexId(h->k, h->n));
    } else if (auto spec = alcoved_form(doc)) {
      g = gamma_graph(*spec);
    } else {
      return domain_error("graph needs an alcoved description; kind " + kind_name(doc) + " has none");
    }
    if (format == "dot") return Output{kOk, to_dot(g), ""};
    return Output{kOk, to_graph_json(g).dump(2) + "\n", ""};
  });
}

Output run_bases(const SpecDocument& doc) {
  return guarded([&]() -> Output {
    std::vector<std::string> lines;
    if (auto* h = std::get_if<HypersimplexDocument>(&doc)) {
      for (const auto& s : all_subsets(h->n, h->k)) lines.push_back(s.label());
    } else if (auto* w = std::get_if<WspDocument>(&doc)) {
      for (const auto& s : wsp_bases(w->partition(), w->k).bases) lines.push_back(s.label());
    } else if (auto* t = std::get_if<TransversalDocument>(&doc)) {
      for (const auto& s : transversal_bases(t->system()).bases) lines.push_back(s.label());
    } else if (auto* wt = std::get_if<WeightDocument>(&doc)) {
      for (const auto& p : weight_points(*wt)) lines.push_back(point_to_string(p));
    } else {
      for (const auto& p : raw_lattice_points(*alcoved_form(doc))) lines.push_back(point_to_string(p));
    }
    Output out;
    for (const auto& l : lines) out.out += l + "\n";
    return out;
  });
}

Output run_generators(const SpecDocument& doc) {
  return guarded([&]() -> Output {
    std::vector<Multiset> ground;
    if (auto* h = std::get_if<HypersimplexDocument>(&doc)) {
      ground = all_subsets(h->n, h->k);
    } else if (auto* w = std::get_if<WspDocument>(&doc)) {
      ground = wsp_bases(w->partition(), w->k).bases;
    } else if (auto* t = std::get_if<TransversalDocument>(&doc)) {
      ground = transversal_bases(t->system()).bases;
    } else if (auto* wt = std::get_if<WeightDocument>(&doc)) {
      ground = as_multisets(weight_points(*wt));
    } else {
      ground = as_multisets(lattice_points(*alcoved_form(doc)).points);
    }
    Output out;
    for (const auto& g : groebner_generators(ground)) out.out += g.to_string() + "\n";
    return out;
  });
}

Output run_thrackles(const SpecDocument& doc) {
  return guarded([&]() -> Output {
    auto p = rank_two_partition(doc);
    if (!p) return domain_error("thrackles need rank two with b = 0, c = 1 on every part");
    Output out;
    for (const auto& g : enumerate_maximal_thrackles(*p))
      out.out += g.to_string() + " " + std::to_string(move_degree(g, *p)) + "\n";
    return out;
  });
}

Output run_normalize(const SpecDocument& doc) { return Output{kOk, to_json(doc).dump(2) + "\n", ""}; }

Output eulerian_table(int max_m) {
  if (max_m < 1 || max_m > 20) return Output{kUsage, "", "max-m must lie in [1, 20]\n"};
  std::ostringstream os;
  os << "m";
  for (int k = 1; k <= max_m; ++k) os << ",k" << k;
  os << "\r\n";
  for (int m = 1; m <= max_m; ++m) {
    os << m;
    for (int k = 1; k <= max_m; ++k) os << ',' << (k <= m ? eulerian_number(k, m) : 0);
    os << "\r\n";
  }
  return Output{kOk, os.str(), ""};
}

WeightedSetPartition parse_partition(const std::string& text) {
  std::vector<int> parts, b, c;
  std::stringstream ss(text);
  std::string token;
  auto to_int = [&](const std::string& s) {
    if (s.empty() || s.size() > 3 || !std::all_of(s.begin(), s.end(), [](char ch) { return ch >= '0' && ch <= '9'; }))
      throw ArgumentError("bad partition entry '" + s + "' in '" + text + "'");
    return std::stoi(s);
  };
  while (std::getline(ss, token, '+')) {
    std::vector<std::string> fields;
    std::stringstream ts(token);
    std::string f;
    while (std::getline(ts, f, ':')) fields.push_back(f);
    if (fields.size() == 1) {
      parts.push_back(to_int(fields[0]));
      b.push_back(0);
      c.push_back(1);
    } else if (fields.size() == 3) {
      parts.push_back(to_int(fields[0]));
      b.push_back(to_int(fields[1]));
      c.push_back(to_int(fields[2]));
    } else {
      throw ArgumentError("partition part must be 'a' or 'a:b:c', got '" + token + "'");
    }
  }
  if (parts.empty() || text.back() == '+') throw ArgumentError("empty partition part in '" + text + "'");
  return WeightedSetPartition(parts, b, c);
}

Output multi_eulerian_table(const std::vector<std::string>& partitions) {
  if (partitions.empty()) return Output{kUsage, "", "at least one --parts is required\n"};
  std::vector<std::pair<std::string, IntPolynomial>> rows;
  int width = 1;
  try {
    for (const auto& text : partitions) {
      const auto p = parse_partition(text);
      if (p.n() < 2 || p.n() > 10) throw ArgumentError("partition size must lie in [2, 10]");
      rows.emplace_back(text, multi_eulerian_polynomial(p, MultiEulerianMethod::alcoved_volume));
      width = std::max(width, rows.back().second.degree());
    }
  } catch (const ArgumentError& e) {
    return Output{kUsage, "", std::string(e.what()) + "\n"};
  } catch (const ComputationError& e) {
    return domain_error(e.what());
  }
  std::ostringstream os;
  os << "parts";
  for (int k = 1; k <= width; ++k) os << ",k" << k;
  os << "\r\n";
  for (const auto& [label, poly] : rows) {
    os << quote_csv(label);
    for (int k = 1; k <= width; ++k) os << ',' << poly.coefficient(k);
    os << "\r\n";
  }
  return Output{kOk, os.str(), ""};
}

}  // namespace alcove::cli
