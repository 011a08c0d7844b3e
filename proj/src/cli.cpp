#include "cdiff/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>

#include "cdiff/charsum.hpp"
#include "cdiff/closed_spectrum.hpp"
#include "cdiff/curve.hpp"
#include "cdiff/errors.hpp"
#include "cdiff/json_io.hpp"
#include "cdiff/oracle.hpp"
#include "cdiff/verifier.hpp"

namespace cdiff::cli {
namespace {

constexpr std::uint64_t kFullScanLimit = 4096;

struct FieldArgs {
  std::uint32_t p = 0;
  std::uint32_t n = 1;
  std::optional<std::uint64_t> c;
  std::string c_poly;
};

void add_field_options(CLI::App* cmd, FieldArgs& a, bool need_c) {
  cmd->add_option("--p", a.p, "odd prime characteristic")->required();
  cmd->add_option("--n", a.n, "extension degree")->capture_default_str();
  auto* c = cmd->add_option("--c", a.c, "multiplier as a canonical element index");
  auto* cp = cmd->add_option("--c-poly", a.c_poly, "multiplier as comma-separated coefficients, constant first");
  c->excludes(cp);
  cp->excludes(c);
  if (need_c) cmd->callback([cmd] {
    if (cmd->count("--c") + cmd->count("--c-poly") == 0) throw CLI::RequiredError("--c or --c-poly");
  });
}

std::uint64_t enumeration_limit(std::optional<std::uint64_t> flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("CDIFF_QMAX")) {
    try {
      std::size_t used = 0;
      const std::uint64_t v = std::stoull(env, &used);
      if (used == std::string(env).size()) return v;
    } catch (const std::exception&) {
    }
    throw InvalidInput(std::string("CDIFF_QMAX is not a nonnegative integer: ") + env);
  }
  return kDefaultEnumerationLimit;
}

std::optional<Element> parse_c(const Field& f, const FieldArgs& a) {
  if (a.c) return f.element(*a.c);
  if (a.c_poly.empty()) return std::nullopt;
  std::vector<std::int64_t> coeffs;
  std::stringstream ss(a.c_poly);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      coeffs.push_back(std::stoll(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw InvalidInput("bad coefficient in --c-poly: '" + item + "'");
    }
  }
  return f.from_coeffs(coeffs);
}

void reject_c_one(Element c) {
  if (c == Field::one()) {
    throw UnsupportedCase("c = 1 is out of scope: the ordinary differential spectrum is not covered");
  }
}

std::uint64_t uniformity(const Field& f, std::uint64_t d, Element c, const Spectrum& row_one) {
  if (f.q() <= kFullScanLimit) return c_uniformity(f, d, c);
  // Rows a != 0 are permutations of row 1 (substitute x = a y), so only row 0 adds anything.
  return std::max(row_one.max_index(), a0_row(f, d, c).max());
}

std::string spectrum_csv(const Spectrum& s) {
  std::string out = "i,omega\n";
  for (const auto& [i, w] : s.entries()) out += std::to_string(i) + "," + std::to_string(w) + "\n";
  return out;
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw InvalidInput("cannot open output file " + path);
  file << text;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"c-differential spectra of x^((q+1)/2) over odd-characteristic finite fields", "cdiff"};
  app.require_subcommand(1);
  std::optional<std::uint64_t> limit_flag;
  app.add_option("--enum-limit", limit_flag, "largest field size to enumerate (default 50000 or CDIFF_QMAX)");

  // spectrum
  FieldArgs sp;
  std::optional<std::uint64_t> sp_d;
  std::string sp_method = "both", sp_variant = "cprim", sp_format = "json", sp_out;
  auto* spectrum_cmd = app.add_subcommand("spectrum", "closed-form and/or brute-force spectrum");
  add_field_options(spectrum_cmd, sp, true);
  spectrum_cmd->add_option("--d", sp_d, "exponent for the brute-force oracle (default (q+1)/2)");
  spectrum_cmd->add_option("--method", sp_method)->check(CLI::IsMember({"closed", "brute", "both"}))->capture_default_str();
  spectrum_cmd->add_option("--variant", sp_variant)->check(CLI::IsMember({"printed", "cprim"}))->capture_default_str();
  spectrum_cmd->add_option("--format", sp_format)->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
  spectrum_cmd->add_option("--out", sp_out, "write to this file instead of standard output");

  // ddt
  FieldArgs dd;
  std::optional<std::uint64_t> dd_d, dd_a;
  std::string dd_format = "csv", dd_out;
  auto* ddt_cmd = app.add_subcommand("ddt", "c-DDT rows by enumeration");
  add_field_options(ddt_cmd, dd, true);
  ddt_cmd->add_option("--d", dd_d, "exponent (default (q+1)/2)");
  ddt_cmd->add_option("--a", dd_a, "single row a (canonical index); full table when omitted");
  ddt_cmd->add_option("--format", dd_format)->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
  ddt_cmd->add_option("--out", dd_out);

  // charsum
  FieldArgs cs;
  std::string cs_out;
  auto* charsum_cmd = app.add_subcommand("charsum", "character sums and cyclotomic counts");
  add_field_options(charsum_cmd, cs, false);
  charsum_cmd->add_option("--out", cs_out);

  // ec-trace
  FieldArgs ec;
  bool ec_direct = false;
  std::string ec_out;
  auto* ec_cmd = app.add_subcommand("ec-trace", "trace of y^2 = x(x-1)(x-c^2)");
  add_field_options(ec_cmd, ec, true);
  ec_cmd->add_flag("--direct", ec_direct, "count over the full field instead of F_p(c^2)");
  ec_cmd->add_option("--out", ec_out);

  // verify
  FieldArgs vf;
  std::uint64_t vf_n4 = VerifyOptions{}.n4_max;
  bool vf_strict = false;
  std::string vf_out;
  auto* verify_cmd = app.add_subcommand("verify", "compare both closed-form variants with the oracle");
  add_field_options(verify_cmd, vf, true);
  verify_cmd->add_option("--n4-max", vf_n4, "largest q for the N4 moment check")->capture_default_str();
  verify_cmd->add_flag("--strict", vf_strict, "exit 1 on a C_PRIMITIVE mismatch");
  verify_cmd->add_option("--out", vf_out);

  // sweep
  std::string sw_config, sw_out, sw_c;
  std::optional<std::uint32_t> sw_p_max, sw_n_max;
  std::optional<std::uint64_t> sw_q_max, sw_n4, sw_sample, sw_seed;
  std::optional<unsigned> sw_threads;
  bool sw_strict = false;
  auto* sweep_cmd = app.add_subcommand("sweep", "verify every selected (field, c); NDJSON report");
  sweep_cmd->add_option("--config", sw_config, "JSON config file; flags override its keys")->check(CLI::ExistingFile);
  sweep_cmd->add_option("--p-max", sw_p_max);
  sweep_cmd->add_option("--n-max", sw_n_max);
  sweep_cmd->add_option("--q-max", sw_q_max);
  sweep_cmd->add_option("--c", sw_c, "all or sample")->check(CLI::IsMember({"all", "sample"}));
  sweep_cmd->add_option("--sample-size", sw_sample);
  sweep_cmd->add_option("--seed", sw_seed);
  sweep_cmd->add_option("--n4-max", sw_n4);
  sweep_cmd->add_option("--threads", sw_threads);
  sweep_cmd->add_flag("--strict", sw_strict, "exit 1 on any C_PRIMITIVE mismatch");
  sweep_cmd->add_option("--out", sw_out);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return 2;
  }

  try {
    const std::uint64_t limit = enumeration_limit(limit_flag);

    if (*spectrum_cmd) {
      const Field f = make_field(sp.p, sp.n, limit);
      const Element c = *parse_c(f, sp);
      reject_c_one(c);
      const std::uint64_t d = sp_d.value_or(default_exponent(f));
      if (sp_d && d != default_exponent(f) && sp_method != "brute") {
        throw InvalidInput("--d applies to --method brute only; closed forms assume d = (q+1)/2");
      }
      const CaseTag tag = classify(f, c);
      Json j;
      j["q"] = f.q();
      j["c"] = c.index();
      j["case"] = tag.label();
      std::optional<ClosedSpectrum> closed;
      std::optional<Spectrum> brute;
      if (sp_method != "brute") {
        closed = closed_spectrum(f, c, sp_variant == "printed" ? FormulaVariant::kAsPrinted : FormulaVariant::kCPrimitive);
      }
      if (sp_method != "closed") brute = spectrum_brute(f, d, c);

      const Spectrum* shown = brute ? &*brute : (closed->ok() ? &closed->spectrum : nullptr);
      j["spectrum"] = shown ? to_json(*shown) : Json(nullptr);
      j["uniformity"] = shown ? Json(uniformity(f, d, c, *shown)) : Json(nullptr);
      j["consistency"] = closed ? to_string(closed->consistency) : to_string(Consistency::kOk);
      Json notes = Json::array();
      if (closed) {
        for (const auto& note : closed->notes) notes.push_back(note);
        j["variant"] = to_string(closed->variant);
        j["closed"] = to_json(*closed);
      }
      if (closed && brute) {
        const bool match = closed->ok() && closed->spectrum == *brute;
        j["match"] = match;
        if (!match) notes.push_back("closed form disagrees with the brute-force spectrum");
      }
      if (sp_method == "brute") j["d"] = d;
      j["notes"] = notes;
      if (sp_format == "csv") {
        if (!shown) throw InvalidInput("no spectrum to print: the closed form is inconsistent");
        emit(spectrum_csv(*shown), sp_out, out);
      } else {
        emit(j.dump() + "\n", sp_out, out);
      }
      return 0;
    }

    if (*ddt_cmd) {
      const Field f = make_field(dd.p, dd.n, limit);
      const Element c = *parse_c(f, dd);
      const std::uint64_t d = dd_d.value_or(default_exponent(f));
      const PowerMap power(f, d);
      if (d >= f.q()) throw InvalidInput("exponent d must be below q");
      std::vector<Element> rows;
      if (dd_a) {
        rows.push_back(f.element(*dd_a));
      } else {
        rows = f.enumerate();
      }
      std::string text;
      Json j;
      if (dd_format == "csv") text = dd_a ? "b,count\n" : "a,b,count\n";
      for (const Element a : rows) {
        const DdtRow row = ddt_row(f, power, c, a);
        if (dd_format == "csv") {
          for (std::size_t b = 0; b < row.counts.size(); ++b) {
            if (!dd_a) text += std::to_string(a.index()) + ",";
            text += std::to_string(b) + "," + std::to_string(row.counts[b]) + "\n";
          }
        } else {
          Json r;
          r["a"] = a.index();
          r["counts"] = row.counts;
          j["rows"].push_back(std::move(r));
        }
      }
      if (dd_format == "json") {
        Json head;
        head["q"] = f.q();
        head["c"] = c.index();
        head["d"] = d;
        head["rows"] = std::move(j["rows"]);
        text = head.dump() + "\n";
      }
      emit(text, dd_out, out);
      return 0;
    }

    if (*charsum_cmd) {
      const Field f = make_field(cs.p, cs.n, limit);
      const std::optional<Element> c = parse_c(f, cs);
      Json j;
      j["q"] = f.q();
      j["field"] = to_json(f.spec());
      if (c) {
        const ABCSums s = abc_sums(f, *c);
        j["c"] = c->index();
        j["A"] = s.A;
        j["B"] = s.B;
        j["C"] = s.C;
      }
      j["S"] = to_json(pair_counts_S(f));
      j["T"] = to_json(pair_counts_T(f));
      if (c) {
        const ABCSums s = abc_sums(f, *c);
        j["Squad"] = to_json(quad_counts(f, *c));
        if (f.eta(f.neg(Field::one())) == 1) {
          j["Squad_closed"] = to_json(quad_counts_closed(f, *c, s, QuadFormulaSet::kCorrected));
          j["Squad_as_printed"] = to_json(quad_counts_closed(f, *c, s, QuadFormulaSet::kAsPrinted));
        }
        j["Squad_expansion"] = to_json(quad_counts_expansion(f, *c, s));
        j["cubic_sum"] = quartic_reduction_check(f, *c);
      }
      j["S_predicted"] = {{"S(1,-1)=(q+1)/4", to_json(pair_counts_S_predicted(f, SConvention::kLargeOneMinus))},
                          {"S(-1,1)=(q+1)/4", to_json(pair_counts_S_predicted(f, SConvention::kLargeMinusOne))}};
      j["T_closed"] = to_json(pair_counts_T_closed(f));
      emit(j.dump() + "\n", cs_out, out);
      return 0;
    }

    if (*ec_cmd) {
      const Field f = make_field(ec.p, ec.n, limit);
      const Element c = *parse_c(f, ec);
      const CurveTrace t = ec_direct ? count_points(f, c) : trace_via_subfield(f, c);
      emit(to_json(t).dump() + "\n", ec_out, out);
      return 0;
    }

    if (*verify_cmd) {
      const Field f = make_field(vf.p, vf.n, limit);
      const Element c = *parse_c(f, vf);
      reject_c_one(c);
      VerifyOptions opts;
      opts.n4_max = vf_n4;
      const VerifyRecord r = verify_one(f, c, opts);
      emit(to_json(r).dump() + "\n", vf_out, out);
      return vf_strict && r.cprim && !r.cprim->match ? 1 : 0;
    }

    if (*sweep_cmd) {
      SweepConfig cfg;
      if (!sw_config.empty()) {
        std::ifstream in(sw_config);
        Json parsed;
        try {
          parsed = Json::parse(in);
        } catch (const Json::exception& e) {
          throw InvalidInput("cannot parse sweep config: " + std::string(e.what()));
        }
        cfg = sweep_config_from_json(parsed);
      }
      if (sw_p_max) cfg.p_max = *sw_p_max;
      if (sw_n_max) cfg.n_max = *sw_n_max;
      if (sw_q_max) cfg.q_max = *sw_q_max;
      if (sw_c == "all") cfg.selection = CSelection::kAll;
      if (sw_c == "sample") cfg.selection = CSelection::kSample;
      if (sw_sample) cfg.sample_size = *sw_sample;
      if (sw_seed) cfg.seed = *sw_seed;
      if (sw_n4) cfg.verify.n4_max = *sw_n4;
      if (sw_threads) cfg.threads = *sw_threads;
      cfg.enumeration_limit = limit;
      const SweepResult result = sweep(cfg);
      std::ostringstream text;
      write_ndjson(text, result);
      emit(text.str(), sw_out, out);
      return sweep_exit_code(result.summary, sw_strict);
    }
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const DivisionByZero& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const InternalInconsistency& e) {
    err << "internal error: " << e.what() << "\n";
    return 3;
  } catch (const Json::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace cdiff::cli
