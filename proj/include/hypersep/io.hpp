#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"

#include "hypersep/bounds.hpp"
#include "hypersep/constructions.hpp"
#include "hypersep/hypergraph.hpp"
#include "hypersep/septree.hpp"

namespace hypersep {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

// Compact {"r":..,"n":..,"edges":[[..],..]}, streamed edge by edge; the bytes
// equal Json::dump() of the same object.
void write_hypergraph_json(std::ostream& out, const Hypergraph& h);
std::string hypergraph_json(const Hypergraph& h);

// Rejects unknown fields and every Hypergraph invariant violation.
Hypergraph parse_hypergraph_json(std::string_view text);

Json tree_to_json(const SeparatorTree& t);
Json abstract_tree_to_json(const AbstractTree& t);

// k is `k_hint` when given, else the size of the first separator; a
// single-atom tree needs the hint. The stored small/big order is kept.
SeparatorTree tree_from_json(const Json& j, std::optional<unsigned> k_hint);
AbstractTree abstract_tree_from_json(const Json& j, std::optional<unsigned> k_hint);

// Integers that fit in 64 bits become JSON numbers, others strings.
Json big_to_json(const BigInt& z);
Json rational_to_json(const Rational& q);  // always "num/den"

void write_construction_json(std::ostream& out, const ConstructionOutput& c);

Json bound_to_json(const Bound& b);
Json bounds_report_to_json(const BoundsReport& report);
Json ledger_to_json(const EdgeLedger& ledger);

std::string read_file(const std::string& path);
// Writes via a temporary file renamed into place.
void write_file(const std::string& path, const std::string& content);

}  // namespace hypersep
