#pragma once

#include <functional>
#include <string>
#include <vector>

#include "srlab/serialize.hpp"
#include "srlab/sumrank.hpp"

namespace srlab {

// Ordered from best to worst; a row takes the worst status of its checks.
enum class RowStatus { Match, InsideBounds, BudgetLimited, Mismatch };
const char* status_name(RowStatus s);

struct TableOptions {
  std::uint64_t budget = 1ull << 24;       // codewords per distance search
  std::uint64_t pair_budget = 1ull << 27;  // codeword pairs for SR(C0, C1) with q = m = 2
  unsigned jobs = 1;
  // Called for every self-dual sum-rank code built while checking rows.
  std::function<void(const std::string& where, const SumRankCode& c)> on_self_dual;
};

struct Check {
  std::string name;
  RowStatus status = RowStatus::Match;
  Json expected;
  Json computed;
};

struct RowReport {
  std::string id, cite;
  RowStatus status = RowStatus::Match;
  std::vector<Check> checks;
  std::vector<std::string> flags;
  std::vector<std::string> notes;
  double seconds = 0;
};

struct TableReport {
  std::string table, title;
  std::vector<RowReport> rows;
  RowStatus status() const;
};

// Ids of the embedded manifests, numerically ordered.
std::vector<std::string> table_ids();
// Throws UnknownTable.
const Json& table_manifest(const std::string& id);

TableReport run_table(const Json& manifest, const TableOptions& opt);
TableReport run_table(const std::string& id, const TableOptions& opt);

Json report_json(const std::vector<TableReport>& reports, bool timing);
// One record per check, RFC 4180 quoting.
std::string report_csv(const std::vector<TableReport>& reports, bool timing);
// 0 all rows match or sit inside printed bounds, 2 budget-limited rows only, 3 any mismatch.
int report_exit_code(const std::vector<TableReport>& reports);

}  // namespace srlab
