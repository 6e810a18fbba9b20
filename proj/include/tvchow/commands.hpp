#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "tvchow/document.hpp"

namespace tvchow {

enum ExitCode : int { kExitOk = 0, kExitValidation = 1, kExitParse = 2, kExitResourceCap = 3 };

enum class OutputFormat { text, csv };
enum class DowngradeMode { automatic, geometric, counting };

/// Largest N*d for which the automatic mode picks geometric output.
inline constexpr std::size_t kAutoGeometricRank = 4;

struct CommandOptions {
  std::optional<std::size_t> N;      // overrides the document
  std::optional<KRange> k;           // overrides the document
  std::optional<CountStrategy> strategy;
  DowngradeMode mode = DowngradeMode::automatic;
  OutputFormat format = OutputFormat::text;
  ResourceCaps caps;
  Execution exec = Execution::parallel;
};

/// "2" or "1..2".
KRange parse_k_range(const std::string& text);
DowngradeMode parse_mode(const std::string& text);
OutputFormat parse_format(const std::string& text);

struct ResultRow {
  std::string label;
  std::size_t k = 0;
  Integer r, v, t;
  Integer sum;  // r + v + t
  Integer rhs;  // sum_i S'_i S_{k-i}
  bool identity_holds = false;
  bool within_bound = false;  // k <= N d
};

struct ResultTable {
  std::size_t N = 0;
  std::size_t d = 0;
  std::vector<ResultRow> rows;  // increasing k
  std::vector<std::string> warnings;

  std::string to_csv() const;
  std::string to_text() const;
};

/// Counts for the document's variety (or its profile block) over the k range.
/// ResourceCapError when N exceeds caps.counting_N.
ResultTable count_table(const ComputationDocument& doc, const CommandOptions& opts);

/// Validation pass behind the validate command.
ValidationReport validate_document(const ComputationDocument& doc);

int cmd_validate(const std::string& text, const CommandOptions& opts, std::ostream& out, std::ostream& err);
int cmd_downgrade(const std::string& text, const CommandOptions& opts, std::ostream& out, std::ostream& err);
int cmd_count(const std::string& text, const CommandOptions& opts, std::ostream& out, std::ostream& err);
int cmd_selfcheck(const CommandOptions& opts, std::ostream& out, std::ostream& err);

}  // namespace tvchow
