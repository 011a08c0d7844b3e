#include "cdiff/closed_spectrum.hpp"

#include "cdiff/charsum.hpp"
#include "cdiff/curve.hpp"
#include "cdiff/errors.hpp"

namespace cdiff {
namespace {

using Raw = std::vector<std::pair<std::uint64_t, Rational>>;

ClosedSpectrum finalize(const Field& f, const CaseTag& tag, FormulaVariant variant, std::string formula,
                        Raw entries, std::optional<Rational> printed_zero = std::nullopt) {
  ClosedSpectrum out;
  out.tag = tag;
  out.variant = variant;
  out.formula = std::move(formula);
  out.printed_zero = printed_zero;
  const Rational q(static_cast<std::int64_t>(f.q()));

  Rational rest;
  for (const auto& [i, w] : entries) rest += w;
  const Rational zero = q - rest;
  out.raw.emplace_back(0, zero);
  out.raw.insert(out.raw.end(), entries.begin(), entries.end());

  if (printed_zero && *printed_zero != zero) {
    out.notes.push_back("printed omega_0 = " + printed_zero->str() + " differs from q minus the rest = " +
                        zero.str());
  }

  Spectrum s(f.q());
  for (const auto& [i, w] : out.raw) {
    if (!w.is_integer() || w < Rational(0)) {
      out.consistency = Consistency::kFormulaInconsistency;
      out.notes.push_back("omega_" + std::to_string(i) + " = " + w.str() + " is not a nonnegative integer");
      continue;
    }
    s.add(i, static_cast<std::uint64_t>(w.num()));
  }
  if (out.ok() && s.first_moment() != f.q()) {
    out.consistency = Consistency::kFormulaInconsistency;
    out.notes.push_back("sum of i * omega_i is " + std::to_string(s.first_moment()) + ", expected " +
                        std::to_string(f.q()));
  }
  if (out.ok()) out.spectrum = std::move(s);
  return out;
}

ClosedSpectrum closed_c0(const Field& f, const CaseTag& tag, FormulaVariant variant) {
  const std::int64_t q = f.q();
  if (tag.signs.eta_minus_one == 1) return finalize(f, tag, variant, "c=0, eta(-1)=1", {{1, Rational(q)}});
  return finalize(f, tag, variant, "c=0, eta(-1)=-1", {{1, Rational(1)}, {2, Rational(q - 1, 2)}});
}

ClosedSpectrum closed_cminus1(const Field& f, const CaseTag& tag, FormulaVariant variant) {
  const std::int64_t q = f.q();
  if (tag.signs.eta_minus_one == 1) {
    return finalize(f, tag, variant, "c=-1, eta(-1)=1",
                    {{1, Rational(q - 3, 2)}, {static_cast<std::uint64_t>((q + 3) / 4), Rational(2)}});
  }
  return finalize(f, tag, variant, "c=-1, eta(-1)=-1",
                  {{2, Rational(q - 3, 4)},
                   {static_cast<std::uint64_t>((q + 1) / 4), Rational(1)},
                   {static_cast<std::uint64_t>((q + 5) / 4), Rational(1)}});
}

bool branch_one(CaseKind k) { return k == CaseKind::kGenEta1I || k == CaseKind::kGenEtaM1I; }
bool branch_two(CaseKind k) { return k == CaseKind::kGenEta1II || k == CaseKind::kGenEtaM1II; }

ClosedSpectrum general_cprim(const Field& f, Element c, const CaseTag& tag) {
  const std::int64_t q = f.q();
  const std::int64_t C = abc_sums(f, c).C;
  const auto& sg = tag.signs;
  const int e2 = sg.eta_two, ec = sg.eta_c, e2c = sg.eta_two_c;
  const bool both_plus = e2 == 1 && ec == 1;
  ClosedSpectrum out;
  if (sg.eta_minus_one == -1) {
    out = finalize(f, tag, FormulaVariant::kCPrimitive, "eta(-1)=-1 C-form, moment-repaired",
                   {{1, Rational(q - C + 4, 4)}, {2, Rational(3 * q + C - 4, 8)}});
  } else if (branch_one(tag.kind)) {
    out = finalize(f, tag, FormulaVariant::kCPrimitive, "eta(1-c^2)=1 C-form",
                   {{1, Rational(3 * q - 2 - C, 4)}, {2, Rational(q + 2 + C, 8)}});
  } else if (branch_two(tag.kind)) {
    const std::int64_t add = both_plus ? 2 : (ec == -1 ? 1 : 0);
    const std::int64_t w3 = ec == -1 ? 1 : (e2 == 1 ? 0 : 2);
    out = finalize(f, tag, FormulaVariant::kCPrimitive, "eta(1-c)=1, eta(1+c)=-1 C-form",
                   {{1, Rational(q - 2 + C, 4) + add},
                    {2, Rational(q - C - 4, 4)},
                    {3, Rational(w3)},
                    {4, Rational(q + 2 + C - 4 * (2 - e2 - e2c), 16)}});
  } else {
    const std::int64_t add = both_plus ? 0 : (ec == -1 ? 1 : 2);
    const std::int64_t w3 = both_plus ? 2 : (ec == -1 ? 1 : 0);
    out = finalize(f, tag, FormulaVariant::kCPrimitive, "eta(1-c)=-1, eta(1+c)=1 C-form",
                   {{1, Rational(q - 2 + C, 4) + add},
                    {2, Rational(q - C - 4, 4)},
                    {3, Rational(w3)},
                    {4, Rational(q + 2 + C - 4 * (2 + e2 + e2c), 16)}});
  }
  out.parameter = C;
  return out;
}

ClosedSpectrum general_printed(const Field& f, Element c, const CaseTag& tag, TraceSymbol symbol) {
  const std::int64_t q = f.q();
  std::int64_t a = 0;
  switch (symbol) {
    case TraceSymbol::kStandardTrace: a = count_points(f, c).t; break;
    case TraceSymbol::kCharacterSum: a = count_points(f, c).s; break;
    case TraceSymbol::kShiftedSum: a = abc_sums(f, c).C - 3; break;
  }
  const auto& sg = tag.signs;
  const int e2 = sg.eta_two, ec = sg.eta_c;
  const bool both_plus = e2 == 1 && ec == 1;
  const std::string sym = " with a = " + to_string(symbol);
  ClosedSpectrum out;
  if (sg.eta_minus_one == 1) {
    if (branch_one(tag.kind)) {
      out = finalize(f, tag, FormulaVariant::kAsPrinted, "eta(-1)=1 statement (i)" + sym,
                     {{1, Rational(3 * q - a - 5, 4)}, {2, Rational(q + a + 5, 8)}}, Rational(q + a + 5, 8));
    } else if (branch_two(tag.kind)) {
      const std::int64_t add = both_plus ? 2 : (ec == -1 ? 1 : 0);
      out = finalize(f, tag, FormulaVariant::kAsPrinted, "eta(-1)=1 statement (ii)" + sym,
                     {{1, Rational(q + a + 1, 4) + add},
                      {2, Rational(q - a - 7, 4)},
                      {3, Rational(ec == -1 ? 1 : 0)},
                      {4, Rational(q + a - 3 - 4 * e2 * (1 + ec), 16)}});
    } else {
      const std::int64_t add = both_plus ? 0 : (ec == -1 ? 1 : 2);
      const std::int64_t w3 = both_plus ? 2 : (ec == -1 ? 1 : 0);
      out = finalize(f, tag, FormulaVariant::kAsPrinted, "eta(-1)=1 statement (iii)" + sym,
                     {{1, Rational(q + a + 1, 4) + add},
                      {2, Rational(q - a - 7, 4)},
                      {3, Rational(w3)},
                      {4, Rational(q + a - 3 + 4 * e2 * (1 + ec), 16)}});
    }
  } else {
    const Rational w1(q - a + 1, 4);
    if (branch_one(tag.kind)) {
      out = finalize(f, tag, FormulaVariant::kAsPrinted, "eta(-1)=-1 statement (i)" + sym,
                     {{1, w1}, {2, Rational(3 * q + a + 1, 8)}}, Rational(3 * q + a - 3, 8));
    } else if (branch_two(tag.kind)) {
      out = finalize(f, tag, FormulaVariant::kAsPrinted, "eta(-1)=-1 statement (ii)" + sym,
                     {{1, w1}, {2, Rational(3 * q + a + 19, 8)}}, Rational(3 * q + a - 21, 8));
    } else {
      out = finalize(f, tag, FormulaVariant::kAsPrinted, "eta(-1)=-1 statement (iii)" + sym,
                     {{1, w1}, {2, Rational(3 * q + a - 5 - 4 * e2, 8)}}, Rational(3 * q + a + 3 + 4 * e2, 8));
    }
  }
  out.parameter = a;
  return out;
}

void require_general(const Field& f, Element c) {
  if (c == Field::zero() || c == Field::one() || c == f.neg(Field::one())) {
    throw InvalidInput("general-case formulas need c outside {0, 1, -1}");
  }
}

}  // namespace

std::string CaseTag::name() const {
  switch (kind) {
    case CaseKind::kCZero: return "C_ZERO";
    case CaseKind::kCMinusOne: return "C_MINUS_ONE";
    case CaseKind::kGenEta1I: return "GEN_ETA1_I";
    case CaseKind::kGenEta1II: return "GEN_ETA1_II";
    case CaseKind::kGenEta1III: return "GEN_ETA1_III";
    case CaseKind::kGenEtaM1I: return "GEN_ETAM1_I";
    case CaseKind::kGenEtaM1II: return "GEN_ETAM1_II";
    case CaseKind::kGenEtaM1III: return "GEN_ETAM1_III";
  }
  return "?";
}

std::string CaseTag::label() const { return square_minus_one ? name() + "+C_SQUARE_MINUS1" : name(); }

std::string to_string(FormulaVariant v) { return v == FormulaVariant::kAsPrinted ? "AS_PRINTED" : "C_PRIMITIVE"; }

std::string to_string(Consistency c) { return c == Consistency::kOk ? "ok" : "formula-inconsistency"; }

std::string to_string(TraceSymbol s) {
  switch (s) {
    case TraceSymbol::kStandardTrace: return "t";
    case TraceSymbol::kCharacterSum: return "s";
    case TraceSymbol::kShiftedSum: return "C-3";
  }
  return "?";
}

CaseTag classify(const Field& f, Element c) {
  if (c == Field::one()) {
    throw UnsupportedCase("c = 1 is out of scope: the ordinary differential spectrum is not covered");
  }
  const Element one = Field::one(), two = f.from_int(2);
  CaseTag tag;
  tag.signs = {f.eta(f.neg(one)), f.eta(f.sub(one, c)), f.eta(f.add(one, c)),
               f.eta(two),        f.eta(c),             f.eta(f.mul(two, c))};
  tag.square_minus_one = f.mul(c, c) == f.neg(one);
  if (c == Field::zero()) {
    tag.kind = CaseKind::kCZero;
  } else if (c == f.neg(one)) {
    tag.kind = CaseKind::kCMinusOne;
  } else {
    const bool eta1 = tag.signs.eta_minus_one == 1;
    const int m = tag.signs.eta_one_minus_c, p = tag.signs.eta_one_plus_c;
    if (m == p) {
      tag.kind = eta1 ? CaseKind::kGenEta1I : CaseKind::kGenEtaM1I;
    } else if (m == 1) {
      tag.kind = eta1 ? CaseKind::kGenEta1II : CaseKind::kGenEtaM1II;
    } else {
      tag.kind = eta1 ? CaseKind::kGenEta1III : CaseKind::kGenEtaM1III;
    }
  }
  return tag;
}

Spectrum spectrum_c0(const Field& f) {
  auto r = closed_c0(f, classify(f, Field::zero()), FormulaVariant::kCPrimitive);
  if (!r.ok()) throw InternalInconsistency("c = 0 spectrum failed its own moment check");
  return r.spectrum;
}

Spectrum spectrum_cminus1(const Field& f) {
  const Element m1 = f.neg(Field::one());
  auto r = closed_cminus1(f, classify(f, m1), FormulaVariant::kCPrimitive);
  if (!r.ok()) throw InternalInconsistency("c = -1 spectrum failed its own moment check");
  return r.spectrum;
}

ClosedSpectrum spectrum_general(const Field& f, Element c, FormulaVariant variant, TraceSymbol symbol) {
  require_general(f, c);
  const CaseTag tag = classify(f, c);
  return variant == FormulaVariant::kCPrimitive ? general_cprim(f, c, tag) : general_printed(f, c, tag, symbol);
}

ClosedSpectrum spectrum_c2_minus1(const Field& f, Element c, FormulaVariant variant) {
  if (f.mul(c, c) != f.neg(Field::one())) throw InvalidInput("c is not a square root of -1");
  if (variant == FormulaVariant::kCPrimitive) return spectrum_general(f, c, variant);

  const CaseTag tag = classify(f, c);
  const std::int64_t q = f.q();
  const std::uint64_t p = f.p(), n = f.n();
  std::int64_t T = 0;
  std::string formula;
  bool two_and_four = false;
  if (p % 4 == 3) {
    // c exists only for n even here.
    T = lucas_v(0, static_cast<std::int64_t>(p), n);
    formula = "c^2=-1 statement (i), trace 2(-p)^(n/2)";
  } else {
    const TwoSquares ab = cornacchia(p);
    T = lucas_v(2 * ab.a, static_cast<std::int64_t>(p), n);
    if (p % 8 == 5 && n % 2 == 1) {
      two_and_four = true;
      formula = "c^2=-1 statement (ii)(2), trace (a+bc)^n+(a-bc)^n";
    } else {
      formula = "c^2=-1 statement (ii)(1), trace (a+bc)^n+(a-bc)^n";
    }
  }
  ClosedSpectrum out;
  if (two_and_four) {
    out = finalize(f, tag, FormulaVariant::kAsPrinted, formula,
                   {{1, Rational(q + T + 5, 4)},
                    {2, Rational(q - T - 7, 4)},
                    {3, Rational(1)},
                    {4, Rational(q + T - 3, 16)}},
                   Rational(7 * q - T - 5, 16));
  } else {
    out = finalize(f, tag, FormulaVariant::kAsPrinted, formula,
                   {{1, Rational(3 * q - T - 5, 4)}, {2, Rational(q + T + 5, 8)}}, Rational(q + T + 5, 8));
  }
  out.parameter = T;
  return out;
}

ClosedSpectrum closed_spectrum(const Field& f, Element c, FormulaVariant variant) {
  const CaseTag tag = classify(f, c);
  if (tag.kind == CaseKind::kCZero) return closed_c0(f, tag, variant);
  if (tag.kind == CaseKind::kCMinusOne) return closed_cminus1(f, tag, variant);
  if (tag.square_minus_one && variant == FormulaVariant::kAsPrinted) return spectrum_c2_minus1(f, c, variant);
  return spectrum_general(f, c, variant);
}

}  // namespace cdiff
