#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cdiff/field.hpp"
#include "cdiff/rational.hpp"
#include "cdiff/spectrum.hpp"

namespace cdiff {

enum class CaseKind {
  kCZero,
  kCMinusOne,
  kGenEta1I,
  kGenEta1II,
  kGenEta1III,
  kGenEtaM1I,
  kGenEtaM1II,
  kGenEtaM1III,
};

/// eta(0) = 0, so eta(c) and eta(2c) are 0 when c = 0.
struct SignData {
  int eta_minus_one = 0;
  int eta_one_minus_c = 0;
  int eta_one_plus_c = 0;
  int eta_two = 0;
  int eta_c = 0;
  int eta_two_c = 0;

  bool operator==(const SignData&) const = default;
};

/// Case label for c != 1. Branch I: eta(1-c) = eta(1+c); II: eta(1-c) = 1, eta(1+c) = -1;
/// III: eta(1-c) = -1, eta(1+c) = 1. `square_minus_one` refines a GEN_ETA1 tag when c^2 = -1.
struct CaseTag {
  CaseKind kind = CaseKind::kCZero;
  bool square_minus_one = false;
  SignData signs;

  /// "GEN_ETA1_II" etc.
  [[nodiscard]] std::string name() const;
  /// name() plus "+C_SQUARE_MINUS1" when refined.
  [[nodiscard]] std::string label() const;
  [[nodiscard]] bool general() const { return kind != CaseKind::kCZero && kind != CaseKind::kCMinusOne; }

  bool operator==(const CaseTag&) const = default;
};

enum class FormulaVariant { kAsPrinted, kCPrimitive };
[[nodiscard]] std::string to_string(FormulaVariant v);

enum class Consistency { kOk, kFormulaInconsistency };
[[nodiscard]] std::string to_string(Consistency c);

/// Value substituted for the trace symbol in the as-printed statements.
enum class TraceSymbol {
  kStandardTrace,  // t = q + 1 - #E
  kCharacterSum,   // s = #E - q - 1, the sign of the printed definition
  kShiftedSum,     // C - 3
};
[[nodiscard]] std::string to_string(TraceSymbol s);

struct ClosedSpectrum {
  CaseTag tag;
  FormulaVariant variant = FormulaVariant::kCPrimitive;
  std::string formula;  // which set of formulas was evaluated
  Consistency consistency = Consistency::kOk;
  Spectrum spectrum;  // meaningful only when ok()
  /// Every evaluated omega_i before merging; index 0 holds q minus the rest.
  std::vector<std::pair<std::uint64_t, Rational>> raw;
  /// omega_0 as the statement gives it, when it gives one.
  std::optional<Rational> printed_zero;
  /// Closed-form input that was plugged in: C for C_PRIMITIVE, the trace term for AS_PRINTED.
  std::optional<std::int64_t> parameter;
  std::vector<std::string> notes;

  [[nodiscard]] bool ok() const { return consistency == Consistency::kOk; }
};

/// Throws UnsupportedCase for c = 1.
[[nodiscard]] CaseTag classify(const Field& f, Element c);

[[nodiscard]] Spectrum spectrum_c0(const Field& f);
[[nodiscard]] Spectrum spectrum_cminus1(const Field& f);

/// c not in {0, 1, -1}. AS_PRINTED evaluates the general statements with the chosen trace
/// symbol; C_PRIMITIVE evaluates formulas in the character sum C.
[[nodiscard]] ClosedSpectrum spectrum_general(const Field& f, Element c, FormulaVariant variant,
                                              TraceSymbol symbol = TraceSymbol::kStandardTrace);

/// c^2 = -1 (InvalidInput otherwise). AS_PRINTED evaluates the dedicated statement for square
/// roots of -1; C_PRIMITIVE is spectrum_general's C path.
[[nodiscard]] ClosedSpectrum spectrum_c2_minus1(const Field& f, Element c, FormulaVariant variant);

/// Dispatches on the case: c = 0, c = -1, c^2 = -1 (AS_PRINTED only), otherwise general.
[[nodiscard]] ClosedSpectrum closed_spectrum(const Field& f, Element c, FormulaVariant variant);

}  // namespace cdiff
