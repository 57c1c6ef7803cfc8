#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "svir/coset.hpp"
#include "svir/invariants.hpp"
#include "svir/mckean_singer.hpp"
#include "svir/su2_level.hpp"
#include "svir/susy_index.hpp"

namespace svir {

using Json = nlohmann::json;

inline constexpr const char* kSchemaVersion = "svir/1";

/// Malformed or mismatched document; what() starts with the offending path.
class JsonSchemaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Documents are {"schema_version": ..., "kind": ..., "payload": {...}}.
// Complex numbers are [re, im], rationals {"num", "den"}, sectors
// {"j", "k", "l", "branch"}.

Json to_json(const LevelData& v);
Json to_json(const CosetModularData& v);
Json to_json(const InvariantMatrix& v);
Json to_json(const IndexReport& v);
Json to_json(const McKeanSingerReport& v);
Json to_json(int m, SearchMode mode, const std::vector<InvariantMatrix>& v);

LevelData level_data_from_json(const Json& doc);
CosetModularData coset_data_from_json(const Json& doc);
InvariantMatrix invariant_from_json(const Json& doc);
IndexReport index_report_from_json(const Json& doc);
McKeanSingerReport mckean_singer_report_from_json(const Json& doc);
std::vector<InvariantMatrix> invariant_list_from_json(const Json& doc);

// Building blocks, also used by the table printers.
Json rational_to_json(const Rational& r);
Rational rational_from_json(const Json& j, const std::string& path);
Json sector_to_json(const SectorLabel& s);
SectorLabel sector_from_json(const Json& j, const std::string& path);

}  // namespace svir
