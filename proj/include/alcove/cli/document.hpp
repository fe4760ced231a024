#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

#include "alcove/alcoved.hpp"
#include "alcove/arith.hpp"
#include "alcove/matroid.hpp"

namespace alcove::cli {

struct BoundEntry {
  int i = 0;
  int j = 0;
  std::optional<Int> lo;
  std::optional<Int> hi;

  bool operator==(const BoundEntry&) const = default;
};

struct AlcovedDocument {
  int n = 0;
  Int level = 0;
  bool unit_cube = false;
  std::vector<BoundEntry> bounds;

  AlcovedSpec spec() const;
  bool operator==(const AlcovedDocument&) const = default;
};

struct HypersimplexDocument {
  int k = 0;
  int n = 0;

  bool operator==(const HypersimplexDocument&) const = default;
};

struct WspDocument {
  std::vector<int> parts;
  std::vector<int> b;
  std::vector<int> c;
  int k = 0;

  WeightedSetPartition partition() const { return WeightedSetPartition(parts, b, c); }
  bool operator==(const WspDocument&) const = default;
};

struct TransversalDocument {
  int n = 0;
  std::vector<std::pair<int, int>> intervals;

  CyclicIntervalSystem system() const { return CyclicIntervalSystem{n, intervals}; }
  bool operator==(const TransversalDocument&) const = default;
};

struct OrderPosetDocument {
  int m = 0;
  std::vector<std::pair<int, int>> relations;

  Poset poset() const;
  bool operator==(const OrderPosetDocument&) const = default;
};

struct WeightDocument {
  std::vector<Int> lambda;

  bool operator==(const WeightDocument&) const = default;
};

using SpecDocument = std::variant<AlcovedDocument, HypersimplexDocument, WspDocument, TransversalDocument,
                                  OrderPosetDocument, WeightDocument>;

std::string kind_name(const SpecDocument& doc);

struct Violation {
  std::string path;  // JSON pointer, "" for the whole document
  std::string message;
};

struct ParseResult {
  std::optional<SpecDocument> document;
  std::vector<Violation> violations;

  bool ok() const { return document.has_value(); }
};

/// Validates shape, types and ranges, then builds the underlying object so
/// that e.g. an unbounded alcoved system is rejected here.
ParseResult parse_spec(std::string_view text);
ParseResult parse_spec_value(const nlohmann::json& value);

nlohmann::json to_json(const SpecDocument& doc);

}  // namespace alcove::cli
