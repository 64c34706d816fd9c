#ifndef GIK_IO_HPP
#define GIK_IO_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "gik/instance.hpp"

namespace gik {

/// Instance schema: {"weights": ["3", "5/2", ...], "capacities": [...],
/// "profits": [[...], ...], "item_ids": [...] (optional)}. Rationals are
/// "p/q" or integer strings; loading validates every instance invariant.
Instance instance_from_json(const nlohmann::json& doc);
nlohmann::json instance_to_json(const Instance& inst);

Instance load_instance_file(const std::string& path);

/// Chains serialize as one index list per period, permutations as one list.
nlohmann::json chain_to_json(const Chain& chain);
Chain chain_from_json(const Instance& inst, const nlohmann::json& doc);
nlohmann::json perm_to_json(const Permutation& perm);

/// One benchmark measurement; `ratio` = profit / oracle_profit whenever the
/// oracle ran and found positive profit.
struct RunRecord {
  std::string instance_id;
  std::string family;
  int n = 0;
  int T = 0;
  std::uint64_t seed = 0;
  std::string algorithm;
  Rational epsilon;
  Rational profit;
  std::optional<Rational> oracle_profit;
  std::optional<Rational> ratio;
  long long wall_ms = 0;
  bool certified = true;

  bool operator==(const RunRecord& other) const;
};

inline constexpr const char* kCsvHeader =
    "instance_id,family,n,T,seed,algorithm,epsilon,profit,oracle_profit,ratio,wall_ms,certified";

/// Rows sorted by (instance_id, algorithm); min/mean-ratio summary rows per
/// algorithm are appended with instance_id "summary:min" / "summary:mean".
/// float_view appends approximate decimal columns for human scanning.
void write_csv(std::ostream& out, std::vector<RunRecord> records, bool float_view = false);

/// Parses data rows back bit-exactly; summary rows and float columns are
/// skipped.
std::vector<RunRecord> read_csv(std::istream& in);

}  // namespace gik

#endif  // GIK_IO_HPP
