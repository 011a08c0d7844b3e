#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "cdiff/closed_spectrum.hpp"
#include "cdiff/curve.hpp"
#include "cdiff/field.hpp"
#include "cdiff/oracle.hpp"
#include "cdiff/spectrum.hpp"

namespace cdiff {

struct VariantOutcome {
  ClosedSpectrum closed;
  bool match = false;  // ok() and exact equality with the oracle spectrum
};

struct AlternateOutcome {
  TraceSymbol symbol = TraceSymbol::kStandardTrace;
  VariantOutcome outcome;
};

struct MomentSummary {
  std::uint64_t sum0 = 0;
  std::uint64_t sum1 = 0;
  std::uint64_t sum2 = 0;
  std::uint64_t gcd_d = 0;
  std::optional<BigInt> n4;         // computed only for q <= n4_max
  std::optional<bool> second_ok;    // second-moment identity, when n4 is known
  bool first_ok = false;            // sum0 = sum1 = q
};

struct VerifyRecord {
  FieldSpec field;
  Element c;
  CaseTag tag;
  Spectrum oracle;
  std::optional<VariantOutcome> cprim;
  std::optional<VariantOutcome> printed;
  /// The general statement re-evaluated with other readings of its trace symbol.
  std::vector<AlternateOutcome> printed_alternates;
  MomentSummary moments;
  std::optional<CurveTrace> curve;
  std::optional<std::int64_t> C;
  std::optional<bool> bridge;  // C = -t - 1
};

struct VerifyOptions {
  std::uint64_t n4_max = 125;
  bool cprim = true;
  bool printed = true;
};

/// Throws UnsupportedCase for c = 1.
[[nodiscard]] VerifyRecord verify_one(const Field& f, Element c, const VerifyOptions& opts = {});

enum class CSelection { kAll, kSample, kExplicit };

struct SweepConfig {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> fields;  // explicit (p, n); bounds used when empty
  std::uint32_t p_max = 0;
  std::uint32_t n_max = 1;
  std::uint64_t q_max = kDefaultEnumerationLimit;
  CSelection selection = CSelection::kAll;
  std::uint64_t sample_size = 16;
  std::uint64_t seed = 0;
  std::vector<std::uint64_t> c_values;  // canonical indices for kExplicit
  VerifyOptions verify;
  unsigned threads = 1;
  std::uint64_t enumeration_limit = kDefaultEnumerationLimit;
};

struct SummaryCell {
  std::uint64_t total = 0;
  std::uint64_t match = 0;
  std::uint64_t mismatch = 0;       // consistent formula, different spectrum
  std::uint64_t inconsistent = 0;   // formula-inconsistency result
};

struct SweepSummary {
  std::uint64_t records = 0;
  std::map<std::pair<std::string, std::string>, SummaryCell> cells;  // (case label, variant)
  std::uint64_t cprim_failures = 0;
  std::uint64_t printed_failures = 0;
  std::uint64_t moment_failures = 0;
  std::uint64_t bridge_failures = 0;
};

struct SweepResult {
  std::vector<VerifyRecord> records;  // sorted by (p, n, c)
  SweepSummary summary;
};

/// (p, n) pairs a config covers, sorted.
[[nodiscard]] std::vector<std::pair<std::uint32_t, std::uint32_t>> sweep_fields(const SweepConfig& cfg);
/// c indices the config selects in f, ascending, never including 1.
[[nodiscard]] std::vector<std::uint64_t> sweep_cs(const SweepConfig& cfg, const Field& f);

[[nodiscard]] SweepResult sweep(const SweepConfig& cfg);
[[nodiscard]] SweepSummary summarize(const std::vector<VerifyRecord>& records);

/// 0 normally; 1 in strict mode when any C_PRIMITIVE comparison failed.
[[nodiscard]] int sweep_exit_code(const SweepSummary& s, bool strict);

/// One JSON object per record, then a summary object, each on its own line.
void write_ndjson(std::ostream& os, const SweepResult& result);

}  // namespace cdiff
