#include <doctest.h>

#include <sstream>

#include "cdiff/errors.hpp"
#include "cdiff/json_io.hpp"
#include "cdiff/verifier.hpp"

using namespace cdiff;

TEST_CASE("verify_one on small fields") {
  const Field f9 = make_field(3, 2);
  const VerifyRecord r = verify_one(f9, Element{3});
  CHECK(r.oracle.entries() == std::map<std::uint64_t, std::uint64_t>{{0, 2}, {1, 5}, {2, 2}});
  REQUIRE(r.cprim);
  CHECK(r.cprim->match);
  REQUIRE(r.printed);
  CHECK_FALSE(r.printed->match);
  CHECK(r.moments.first_ok);
  REQUIRE(r.moments.second_ok);
  CHECK(*r.moments.second_ok);
  REQUIRE(r.curve);
  CHECK(r.curve->count == 16);
  CHECK(r.C == 5);
  CHECK(r.bridge == true);

  const Field f5 = make_field(5, 1);
  const VerifyRecord s = verify_one(f5, f5.from_int(2));
  CHECK(s.cprim->match);
  CHECK(s.printed->match);

  const Field f7 = make_field(7, 1);
  const VerifyRecord z = verify_one(f7, Field::zero());
  CHECK(z.tag.kind == CaseKind::kCZero);
  CHECK(z.cprim->match);
  CHECK_FALSE(z.curve);
  CHECK_FALSE(z.C);
  CHECK(z.printed_alternates.empty());

  CHECK_THROWS_AS((void)verify_one(f7, Field::one()), UnsupportedCase);

  VerifyOptions no_n4;
  no_n4.n4_max = 0;
  no_n4.printed = false;
  const VerifyRecord w = verify_one(f7, f7.from_int(3), no_n4);
  CHECK_FALSE(w.moments.n4);
  CHECK_FALSE(w.moments.second_ok);
  CHECK_FALSE(w.printed);
}

TEST_CASE("sweep field and c selection") {
  SweepConfig cfg;
  cfg.p_max = 7;
  cfg.n_max = 2;
  CHECK(sweep_fields(cfg) ==
        std::vector<std::pair<std::uint32_t, std::uint32_t>>{{3, 1}, {3, 2}, {5, 1}, {5, 2}, {7, 1}, {7, 2}});
  cfg.q_max = 30;
  CHECK(sweep_fields(cfg).size() == 5);

  const Field f25 = make_field(5, 2);
  const auto all = sweep_cs(cfg, f25);
  CHECK(all.size() == 24);
  CHECK(std::find(all.begin(), all.end(), 1) == all.end());

  cfg.selection = CSelection::kSample;
  cfg.sample_size = 5;
  cfg.seed = 11;
  const auto sample = sweep_cs(cfg, f25);
  CHECK(sample.size() == 5);
  CHECK(std::is_sorted(sample.begin(), sample.end()));
  CHECK(sample == sweep_cs(cfg, f25));

  cfg.selection = CSelection::kExplicit;
  cfg.c_values = {4, 0, 4};
  CHECK(sweep_cs(cfg, f25) == std::vector<std::uint64_t>{0, 4});
  cfg.c_values = {1};
  CHECK_THROWS_AS((void)sweep_cs(cfg, f25), UnsupportedCase);
  cfg.c_values = {25};
  CHECK_THROWS_AS((void)sweep_cs(cfg, f25), InvalidInput);
}

TEST_CASE("sweep over p <= 7, n <= 2") {
  SweepConfig cfg;
  cfg.p_max = 7;
  cfg.n_max = 2;
  const SweepResult r = sweep(cfg);
  CHECK(r.records.size() == 2 + 8 + 4 + 24 + 6 + 48);
  CHECK(r.summary.records == r.records.size());
  CHECK(r.summary.cprim_failures == 0);
  CHECK(r.summary.moment_failures == 0);
  CHECK(r.summary.bridge_failures == 0);
  CHECK(r.summary.printed_failures > 0);
  CHECK(sweep_exit_code(r.summary, true) == 0);

  SweepSummary bad = r.summary;
  bad.cprim_failures = 1;
  CHECK(sweep_exit_code(bad, false) == 0);
  CHECK(sweep_exit_code(bad, true) == 1);
}

TEST_CASE("empty sweep") {
  SweepConfig cfg;
  const SweepResult r = sweep(cfg);
  CHECK(r.records.empty());
  std::ostringstream os;
  write_ndjson(os, r);
  const Json j = Json::parse(os.str());
  CHECK(j.at("summary").at("records") == 0);
}

TEST_CASE("sweep output is deterministic and thread-independent") {
  SweepConfig cfg;
  cfg.p_max = 13;
  cfg.n_max = 2;
  cfg.q_max = 125;
  cfg.selection = CSelection::kSample;
  cfg.sample_size = 6;
  cfg.seed = 3;
  auto render = [](const SweepConfig& c) {
    std::ostringstream os;
    write_ndjson(os, sweep(c));
    return os.str();
  };
  const std::string one = render(cfg);
  CHECK(one == render(cfg));
  cfg.threads = 4;
  CHECK(one == render(cfg));

  std::istringstream lines(one);
  std::string line;
  std::size_t count = 0;
  while (std::getline(lines, line)) {
    const Json j = Json::parse(line);
    CHECK(j.is_object());
    ++count;
  }
  CHECK(count == 1 + sweep(cfg).records.size());
}

TEST_CASE("sweep config parsing") {
  const Json j = Json::parse(R"({"fields": [[5, 1], [3, 2]], "c": [0, 2], "n4_max": 0, "variants": ["C_PRIMITIVE"]})");
  const SweepConfig cfg = sweep_config_from_json(j);
  CHECK(cfg.fields.size() == 2);
  CHECK(cfg.selection == CSelection::kExplicit);
  CHECK(cfg.verify.cprim);
  CHECK_FALSE(cfg.verify.printed);
  const SweepResult r = sweep(cfg);
  CHECK(r.records.size() == 4);
  CHECK(r.records.front().field.q == 9);
  CHECK_THROWS_AS((void)sweep_config_from_json(Json::parse(R"({"c": "some"})")), InvalidInput);
  CHECK_THROWS_AS((void)sweep_config_from_json(Json::parse(R"({"p_max": -3})")), InvalidInput);
  CHECK_THROWS_AS((void)sweep_config_from_json(Json::parse("[1]")), InvalidInput);
}
