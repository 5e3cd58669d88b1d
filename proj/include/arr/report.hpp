#pragma once

#include <optional>
#include <string>

#include "arr/arrangement.hpp"
#include "arr/freeness.hpp"

namespace arr {

inline constexpr const char* kToolVersion = "1.0.0";

struct AnalyzeOptions {
  long budget = 10000;
  bool with_timing = false;  // timing breaks byte-identical output; opt-in
};

struct AnalyzeInput {
  // Either family+alpha or a file path.
  std::string family;  // "A" | "B" | "braid" | "boolean" | ""
  std::optional<Rat> alpha;
  int family_size = 0;  // braid/boolean parameter
  std::string file_path;

  Arrangement build() const;
  std::string describe() const;
};

struct AnalyzeOutcome {
  std::string report_json;  // full RunReport document
  DecideResult freeness;
};

AnalyzeOutcome analyze(const AnalyzeInput& input, const AnalyzeOptions& opts = {});

// One line per alpha for sweep tables.
struct SweepRow {
  Rat alpha;
  std::string freeness;    // "free {1,4,4}" / "not_free (hilbert_mismatch)" / ...
  std::string chi;         // factored or raw characteristic polynomial
  Int chambers;
  std::string kpi1;        // engine verdict, "-" when rank != 3
  bool failed = false;
  std::string error;
};

SweepRow sweep_row(const std::string& family, const Rat& alpha, long budget);

std::string format_sweep_table(const std::string& family,
                               const std::vector<SweepRow>& rows);

}  // namespace arr
