#include "cdiff/verifier.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <numeric>
#include <random>
#include <thread>

#include "cdiff/charsum.hpp"
#include "cdiff/errors.hpp"
#include "cdiff/json_io.hpp"

namespace cdiff {
namespace {

VariantOutcome compare(ClosedSpectrum closed, const Spectrum& oracle) {
  VariantOutcome out;
  out.match = closed.ok() && closed.spectrum == oracle;
  out.closed = std::move(closed);
  return out;
}

void tally(SummaryCell& cell, const VariantOutcome& o) {
  ++cell.total;
  if (o.match) {
    ++cell.match;
  } else if (o.closed.ok()) {
    ++cell.mismatch;
  } else {
    ++cell.inconsistent;
  }
}

}  // namespace

VerifyRecord verify_one(const Field& f, Element c, const VerifyOptions& opts) {
  VerifyRecord r;
  r.field = f.spec();
  r.c = c;
  r.tag = classify(f, c);
  const std::uint64_t d = default_exponent(f);
  r.oracle = spectrum_brute(f, d, c);

  r.moments.sum0 = r.oracle.total();
  r.moments.sum1 = r.oracle.first_moment();
  r.moments.sum2 = r.oracle.second_moment();
  r.moments.first_ok = r.moments.sum0 == f.q() && r.moments.sum1 == f.q();
  if (f.q() <= opts.n4_max) {
    const MomentReport m = moment_check(r.oracle, n4(f, d, c), d, f);
    r.moments.n4 = m.n4;
    r.moments.second_ok = m.consistent;
    r.moments.gcd_d = m.gcd_d;
  } else {
    r.moments.gcd_d = std::gcd(d, static_cast<std::uint64_t>(f.q()) - 1);
  }

  if (r.tag.general()) {
    r.C = abc_sums(f, c).C;
    r.curve = count_points(f, c);
    r.bridge = *r.C == -r.curve->t - 1;
  }

  if (opts.cprim) r.cprim = compare(closed_spectrum(f, c, FormulaVariant::kCPrimitive), r.oracle);
  if (opts.printed) {
    r.printed = compare(closed_spectrum(f, c, FormulaVariant::kAsPrinted), r.oracle);
    if (r.tag.general()) {
      std::vector<TraceSymbol> symbols;
      if (r.tag.square_minus_one) symbols.push_back(TraceSymbol::kStandardTrace);
      symbols.push_back(TraceSymbol::kCharacterSum);
      symbols.push_back(TraceSymbol::kShiftedSum);
      for (const TraceSymbol s : symbols) {
        r.printed_alternates.push_back(
            {s, compare(spectrum_general(f, c, FormulaVariant::kAsPrinted, s), r.oracle)});
      }
    }
  }
  return r;
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> sweep_fields(const SweepConfig& cfg) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
  const std::uint64_t cap = std::min(cfg.q_max, cfg.enumeration_limit);
  if (!cfg.fields.empty()) {
    out = cfg.fields;
  } else {
    for (std::uint32_t p = 3; p <= cfg.p_max; p += 2) {
      if (!is_prime(p)) continue;
      std::uint64_t q = 1;
      for (std::uint32_t n = 1; n <= cfg.n_max; ++n) {
        q *= p;
        if (q > cap) break;
        out.emplace_back(p, n);
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::uint64_t> sweep_cs(const SweepConfig& cfg, const Field& f) {
  std::vector<std::uint64_t> out;
  switch (cfg.selection) {
    case CSelection::kAll:
    case CSelection::kSample:
      for (std::uint64_t c = 0; c < f.q(); ++c)
        if (c != 1) out.push_back(c);
      break;
    case CSelection::kExplicit:
      for (const std::uint64_t c : cfg.c_values) {
        (void)f.element(c);
        if (c == 1) throw UnsupportedCase("c = 1 is out of scope for the sweep");
        out.push_back(c);
      }
      std::sort(out.begin(), out.end());
      out.erase(std::unique(out.begin(), out.end()), out.end());
      break;
  }
  if (cfg.selection == CSelection::kSample && out.size() > cfg.sample_size) {
    std::mt19937_64 rng(cfg.seed ^ (static_cast<std::uint64_t>(f.p()) << 32 | f.n()));
    for (std::size_t i = 0; i < cfg.sample_size; ++i) {
      std::uniform_int_distribution<std::size_t> pick(i, out.size() - 1);
      std::swap(out[i], out[pick(rng)]);
    }
    out.resize(cfg.sample_size);
    std::sort(out.begin(), out.end());
  }
  return out;
}

SweepResult sweep(const SweepConfig& cfg) {
  struct Task {
    const Field* field;
    Element c;
  };
  std::vector<Field> fields;
  for (const auto& [p, n] : sweep_fields(cfg)) fields.push_back(make_field(p, n, cfg.enumeration_limit));
  std::vector<Task> tasks;
  for (const Field& f : fields)
    for (const std::uint64_t c : sweep_cs(cfg, f)) tasks.push_back({&f, f.element(c)});

  SweepResult result;
  result.records.resize(tasks.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      try {
        result.records[i] = verify_one(*tasks[i].field, tasks[i].c, cfg.verify);
      } catch (...) {
        const std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = tasks.size();
      }
    }
  };
  const unsigned threads = std::max(1u, cfg.threads);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  result.summary = summarize(result.records);
  return result;
}

SweepSummary summarize(const std::vector<VerifyRecord>& records) {
  SweepSummary s;
  s.records = records.size();
  for (const VerifyRecord& r : records) {
    const std::string label = r.tag.label();
    if (r.cprim) {
      tally(s.cells[{label, to_string(FormulaVariant::kCPrimitive)}], *r.cprim);
      if (!r.cprim->match) ++s.cprim_failures;
    }
    if (r.printed) {
      tally(s.cells[{label, to_string(FormulaVariant::kAsPrinted)}], *r.printed);
      if (!r.printed->match) ++s.printed_failures;
    }
    if (!r.moments.first_ok || r.moments.second_ok == false) ++s.moment_failures;
    if (r.bridge == false) ++s.bridge_failures;
  }
  return s;
}

int sweep_exit_code(const SweepSummary& s, bool strict) { return strict && s.cprim_failures > 0 ? 1 : 0; }

void write_ndjson(std::ostream& os, const SweepResult& result) {
  for (const VerifyRecord& r : result.records) os << to_json(r).dump() << '\n';
  Json tail;
  tail["summary"] = to_json(result.summary);
  os << tail.dump() << '\n';
}

}  // namespace cdiff
