#include "cdiff/json_io.hpp"

#include <limits>
#include <string>

#include "cdiff/errors.hpp"

namespace cdiff {
namespace {

Json raw_json(const std::vector<std::pair<std::uint64_t, Rational>>& raw) {
  Json out = Json::array();
  for (const auto& [i, w] : raw) {
    Json e;
    e["i"] = i;
    if (w.is_integer()) {
      e["value"] = w.num();
    } else {
      e["value"] = w.str();
    }
    out.push_back(std::move(e));
  }
  return out;
}

Json outcome_json(const VariantOutcome& o) {
  Json j = to_json(o.closed);
  j["match"] = o.match;
  return j;
}

std::uint64_t get_uint(const Json& j, const char* key, std::uint64_t fallback) {
  if (!j.contains(key)) return fallback;
  const Json& v = j.at(key);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0)) {
    throw InvalidInput(std::string("config key '") + key + "' must be a nonnegative integer");
  }
  return v.get<std::uint64_t>();
}

}  // namespace

Json to_json(const FieldSpec& f) {
  Json j;
  j["p"] = f.p;
  j["n"] = f.n;
  j["modulus"] = f.modulus;
  j["q"] = f.q;
  return j;
}

Json to_json(const Spectrum& s) {
  Json j = Json::object();
  for (const auto& [i, w] : s.entries()) j[std::to_string(i)] = w;
  return j;
}

Json to_json(const BigInt& v) {
  if (v <= std::numeric_limits<std::int64_t>::max() && v >= std::numeric_limits<std::int64_t>::min()) {
    return v.convert_to<std::int64_t>();
  }
  return v.str();
}

Json to_json(const PairCounts& c) {
  Json j;
  for (int i : {1, -1})
    for (int k : {1, -1}) j[std::string(i > 0 ? "+1" : "-1") + "," + (k > 0 ? "+1" : "-1")] = c.at(i, k);
  return j;
}

Json to_json(const QuadCounts& c) {
  Json j;
  for (std::size_t k = 0; k < 16; ++k) j[QuadCounts::key(k)] = c.counts[k];
  return j;
}

Json to_json(const QuadPrediction& p) {
  Json j;
  for (std::size_t k = 0; k < 16; ++k) {
    const Rational& v = p.values[k];
    if (v.is_integer()) {
      j[QuadCounts::key(k)] = v.num();
    } else {
      j[QuadCounts::key(k)] = v.str();
    }
  }
  return j;
}

Json to_json(const SignData& s) {
  Json j;
  j["eta(-1)"] = s.eta_minus_one;
  j["eta(1-c)"] = s.eta_one_minus_c;
  j["eta(1+c)"] = s.eta_one_plus_c;
  j["eta(2)"] = s.eta_two;
  j["eta(c)"] = s.eta_c;
  j["eta(2c)"] = s.eta_two_c;
  return j;
}

Json to_json(const CurveTrace& t) {
  Json j;
  j["q"] = t.q;
  j["c2_index"] = t.c2.index();
  j["count"] = t.count;
  j["t"] = t.t;
  j["s"] = t.s;
  j["base_field"] = t.base_field;
  j["lifted"] = t.lifted;
  return j;
}

Json to_json(const ClosedSpectrum& s) {
  Json j;
  j["variant"] = to_string(s.variant);
  j["formula"] = s.formula;
  j["consistency"] = to_string(s.consistency);
  if (s.ok()) {
    j["spectrum"] = to_json(s.spectrum);
  } else {
    j["spectrum"] = nullptr;
  }
  j["raw"] = raw_json(s.raw);
  if (s.printed_zero) {
    j["printed_omega_0"] = s.printed_zero->is_integer() ? Json(s.printed_zero->num()) : Json(s.printed_zero->str());
  }
  if (s.parameter) {
    j["parameter"] = *s.parameter;
  } else {
    j["parameter"] = nullptr;
  }
  j["notes"] = s.notes;
  return j;
}

Json to_json(const MomentReport& m) {
  Json j;
  j["sum0"] = m.sum0;
  j["sum1"] = m.sum1;
  j["sum2"] = m.sum2;
  j["n4"] = to_json(m.n4);
  j["gcd_d"] = m.gcd_d;
  j["consistent"] = m.consistent;
  return j;
}

Json to_json(const VerifyRecord& r) {
  Json j;
  j["field"] = to_json(r.field);
  j["c"] = r.c.index();
  j["case"] = r.tag.label();
  j["signs"] = to_json(r.tag.signs);
  j["oracle"] = to_json(r.oracle);
  if (r.cprim) j["C_PRIMITIVE"] = outcome_json(*r.cprim);
  if (r.printed) j["AS_PRINTED"] = outcome_json(*r.printed);
  if (!r.printed_alternates.empty()) {
    Json alts = Json::array();
    for (const auto& a : r.printed_alternates) {
      Json e;
      e["symbol"] = to_string(a.symbol);
      e["consistency"] = to_string(a.outcome.closed.consistency);
      e["parameter"] = a.outcome.closed.parameter ? Json(*a.outcome.closed.parameter) : Json(nullptr);
      e["spectrum"] = a.outcome.closed.ok() ? to_json(a.outcome.closed.spectrum) : Json(nullptr);
      e["match"] = a.outcome.match;
      alts.push_back(std::move(e));
    }
    j["AS_PRINTED_alternates"] = std::move(alts);
  }
  Json m;
  m["sum0"] = r.moments.sum0;
  m["sum1"] = r.moments.sum1;
  m["sum2"] = r.moments.sum2;
  m["gcd_d"] = r.moments.gcd_d;
  m["n4"] = r.moments.n4 ? to_json(*r.moments.n4) : Json(nullptr);
  m["first_ok"] = r.moments.first_ok;
  m["second_ok"] = r.moments.second_ok ? Json(*r.moments.second_ok) : Json(nullptr);
  j["moments"] = std::move(m);
  j["curve"] = r.curve ? to_json(*r.curve) : Json(nullptr);
  j["C"] = r.C ? Json(*r.C) : Json(nullptr);
  j["bridge"] = r.bridge ? Json(*r.bridge) : Json(nullptr);
  return j;
}

Json to_json(const SweepSummary& s) {
  Json j;
  j["records"] = s.records;
  Json cells = Json::array();
  for (const auto& [key, cell] : s.cells) {
    Json e;
    e["case"] = key.first;
    e["variant"] = key.second;
    e["total"] = cell.total;
    e["match"] = cell.match;
    e["mismatch"] = cell.mismatch;
    e["inconsistent"] = cell.inconsistent;
    cells.push_back(std::move(e));
  }
  j["cells"] = std::move(cells);
  j["cprim_failures"] = s.cprim_failures;
  j["printed_failures"] = s.printed_failures;
  j["moment_failures"] = s.moment_failures;
  j["bridge_failures"] = s.bridge_failures;
  return j;
}

SweepConfig sweep_config_from_json(const Json& j) {
  if (!j.is_object()) throw InvalidInput("sweep config must be a JSON object");
  SweepConfig cfg;
  if (j.contains("fields")) {
    for (const Json& e : j.at("fields")) {
      if (!e.is_array() || e.size() != 2) throw InvalidInput("config 'fields' entries must be [p, n]");
      cfg.fields.emplace_back(e.at(0).get<std::uint32_t>(), e.at(1).get<std::uint32_t>());
    }
  }
  cfg.p_max = static_cast<std::uint32_t>(get_uint(j, "p_max", cfg.p_max));
  cfg.n_max = static_cast<std::uint32_t>(get_uint(j, "n_max", cfg.n_max));
  cfg.q_max = get_uint(j, "q_max", cfg.q_max);
  cfg.sample_size = get_uint(j, "sample_size", cfg.sample_size);
  cfg.seed = get_uint(j, "seed", cfg.seed);
  cfg.verify.n4_max = get_uint(j, "n4_max", cfg.verify.n4_max);
  cfg.threads = static_cast<unsigned>(get_uint(j, "threads", cfg.threads));
  if (j.contains("c")) {
    const Json& c = j.at("c");
    if (c.is_string() && c == "all") {
      cfg.selection = CSelection::kAll;
    } else if (c.is_string() && c == "sample") {
      cfg.selection = CSelection::kSample;
    } else if (c.is_array()) {
      cfg.selection = CSelection::kExplicit;
      for (const Json& v : c) cfg.c_values.push_back(v.get<std::uint64_t>());
    } else {
      throw InvalidInput("config 'c' must be \"all\", \"sample\" or a list of indices");
    }
  }
  if (j.contains("variants")) {
    cfg.verify.cprim = cfg.verify.printed = false;
    for (const Json& v : j.at("variants")) {
      if (v == "C_PRIMITIVE") {
        cfg.verify.cprim = true;
      } else if (v == "AS_PRINTED") {
        cfg.verify.printed = true;
      } else {
        throw InvalidInput("unknown variant in config: " + v.dump());
      }
    }
  }
  return cfg;
}

}  // namespace cdiff
