#pragma once

#include <json.hpp>

#include "cdiff/charsum.hpp"
#include "cdiff/closed_spectrum.hpp"
#include "cdiff/curve.hpp"
#include "cdiff/field.hpp"
#include "cdiff/oracle.hpp"
#include "cdiff/spectrum.hpp"
#include "cdiff/verifier.hpp"

namespace cdiff {

using Json = nlohmann::ordered_json;

[[nodiscard]] Json to_json(const FieldSpec& f);
/// {"0": omega_0, "1": omega_1, ...} in ascending index order.
[[nodiscard]] Json to_json(const Spectrum& s);
/// Number when it fits in int64, decimal string otherwise.
[[nodiscard]] Json to_json(const BigInt& v);
[[nodiscard]] Json to_json(const PairCounts& c);
/// {"+1,+1,+1,+1": n, ...} in slot order.
[[nodiscard]] Json to_json(const QuadCounts& c);
[[nodiscard]] Json to_json(const QuadPrediction& p);
[[nodiscard]] Json to_json(const SignData& s);
[[nodiscard]] Json to_json(const CurveTrace& t);
[[nodiscard]] Json to_json(const ClosedSpectrum& s);
[[nodiscard]] Json to_json(const MomentReport& m);
[[nodiscard]] Json to_json(const VerifyRecord& r);
[[nodiscard]] Json to_json(const SweepSummary& s);

/// Keys: fields [[p, n], ...], p_max, n_max, q_max, c ("all" | "sample" | [indices]), sample_size,
/// seed, n4_max, threads, variants (["C_PRIMITIVE", "AS_PRINTED"]). Throws InvalidInput on bad input.
[[nodiscard]] SweepConfig sweep_config_from_json(const Json& j);

}  // namespace cdiff
