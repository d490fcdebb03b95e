#include <gtest/gtest.h>

#include <sstream>
#include <string>
#include <vector>

#include "hadafrac/errors.hpp"
#include "hadafrac/fuzz.hpp"

using namespace hadafrac;

namespace {

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    out.push_back(line);
  }
  return out;
}

std::vector<std::string> fields(const std::string& row) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream in(row);
  while (std::getline(in, field, ',')) {
    out.push_back(field);
  }
  if (!row.empty() && row.back() == ',') {
    out.emplace_back();
  }
  return out;
}

FuzzConfig config_for(TheoremId id, std::int64_t trials, std::uint64_t seed) {
  FuzzConfig config;
  config.theorem = id;
  config.trials = trials;
  config.master_seed = seed;
  return config;
}

}  // namespace

TEST(Fuzz, HeaderIsExact) {
  EXPECT_EQ(csv_header(), "theorem,alpha,beta,t,p,q,seed,lhs,bound,ratio,margin,pass");
}

TEST(Fuzz, SoundnessSmokeForEveryCheck) {
  for (TheoremId id : kAllTheorems) {
    std::ostringstream csv;
    const RunSummary summary = run_fuzz(config_for(id, 300, 1), csv);
    EXPECT_EQ(summary.trials_run, 300) << to_string(id);
    EXPECT_EQ(summary.failures, 0) << to_string(id);
    EXPECT_EQ(summary.passes + summary.failures, summary.trials_run);
    EXPECT_EQ(lines(csv.str()).size(), 301u);
  }
}

TEST(Fuzz, SpecExamplesPass) {
  std::ostringstream csv;
  EXPECT_EQ(run_fuzz(config_for(TheoremId::T31, 1000, 1), csv).failures, 0);
  EXPECT_EQ(run_fuzz(config_for(TheoremId::T34, 1000, 1), csv).failures, 0);
}

TEST(Fuzz, ByteIdenticalAcrossRunsAndThreadCounts) {
  for (TheoremId id : {TheoremId::T32, TheoremId::T34, TheoremId::POWMEAN}) {
    FuzzConfig config = config_for(id, 200, 12345);
    std::ostringstream a, b, c;
    config.threads = 1;
    run_fuzz(config, a);
    run_fuzz(config, b);
    config.threads = 4;
    run_fuzz(config, c);
    EXPECT_EQ(a.str(), b.str());
    EXPECT_EQ(a.str(), c.str());
  }
}

TEST(Fuzz, SeedsChangeTheStream) {
  std::ostringstream a, b;
  run_fuzz(config_for(TheoremId::T31, 20, 1), a);
  run_fuzz(config_for(TheoremId::T31, 20, 2), b);
  EXPECT_NE(a.str(), b.str());
}

TEST(Fuzz, RowsCarryReproducibleState) {
  const FuzzConfig config = config_for(TheoremId::T34, 50, 9);
  std::ostringstream csv;
  run_fuzz(config, csv);
  const auto rows = lines(csv.str());
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto f = fields(rows[i]);
    ASSERT_EQ(f.size(), 12u) << rows[i];
    EXPECT_EQ(f[0], "T34");
    EXPECT_FALSE(f[1].empty());
    EXPECT_TRUE(f[2].empty());  // no beta for single-order checks
    EXPECT_FALSE(f[4].empty());
    EXPECT_FALSE(f[5].empty());
    EXPECT_EQ(std::stoull(f[6]), trial_seed(9, i - 1));

    std::ostringstream replayed;
    replay_trial(config, std::stoull(f[6]), replayed);
    EXPECT_EQ(lines(replayed.str()).at(1), rows[i]);
  }
}

TEST(Fuzz, TwoOrderChecksReportBeta) {
  std::ostringstream csv;
  run_fuzz(config_for(TheoremId::P32, 5, 3), csv);
  const auto f = fields(lines(csv.str()).at(1));
  EXPECT_FALSE(f[2].empty());
  EXPECT_TRUE(f[4].empty());
  EXPECT_TRUE(f[5].empty());
}

TEST(Fuzz, NumbersRoundTrip) {
  const FuzzConfig config = config_for(TheoremId::YOUNG, 1, 4);
  const TrialResult result = run_trial(config, trial_seed(4, 0));
  const auto f = fields(csv_row(result.report));
  EXPECT_EQ(std::stod(f[1]), *result.report.params.alpha);
  EXPECT_EQ(std::stod(f[7]), result.report.lhs);
  EXPECT_EQ(std::stod(f[8]), result.report.bound);
  EXPECT_EQ(f[11], result.report.pass ? "true" : "false");
}

TEST(Fuzz, EqualityCaseRowHasRatioOne) {
  for (TheoremId id : {TheoremId::T31, TheoremId::POWMEAN}) {
    std::uint64_t master = 0;
    while (!run_trial(config_for(id, 1, master), trial_seed(master, 0)).equality_case) {
      ++master;
    }
    std::ostringstream csv;
    const RunSummary summary = run_fuzz(config_for(id, 1, master), csv);
    EXPECT_NEAR(summary.worst_ratio, 1.0, 1e-10);
    EXPECT_EQ(summary.failures, 0);
  }
}

TEST(Fuzz, KinkedTrialsUseRelaxedTolerance) {
  const FuzzConfig config = config_for(TheoremId::T31, 1, 0);
  int kinked = 0;
  int smooth = 0;
  for (std::uint64_t i = 0; i < 200; ++i) {
    const TrialResult r = run_trial(config, trial_seed(5, i), i);
    EXPECT_EQ(r.report.rel_tol, r.kinked ? 1e-7 : 1e-9);
    (r.kinked ? kinked : smooth) += 1;
  }
  EXPECT_GT(kinked, 0);
  EXPECT_GT(smooth, 0);
}

TEST(Fuzz, SummaryAndReproducer) {
  FuzzConfig config = config_for(TheoremId::P33, 10, 2);
  RunSummary summary;
  summary.trials_run = 10;
  summary.passes = 9;
  summary.failures = 1;
  summary.first_failure_seed = 777;
  const std::string text = format_summary(config, summary);
  EXPECT_NE(text.find("1 failed"), std::string::npos);
  EXPECT_NE(text.find("--replay 777"), std::string::npos);
  EXPECT_NE(text.find("--theorem P33"), std::string::npos);
  summary.failures = 0;
  summary.first_failure_seed.reset();
  EXPECT_EQ(format_summary(config, summary).find("reproduce"), std::string::npos);
}

TEST(Fuzz, ConfigValidation) {
  std::ostringstream csv;
  FuzzConfig config = config_for(TheoremId::T31, 0, 1);
  EXPECT_THROW(run_fuzz(config, csv), DomainError);
  config.trials = 1;
  config.t_range = {1.0, 2.0};
  EXPECT_THROW(config.validate(), DomainError);
  config.t_range = {2.0, 1.5};
  EXPECT_THROW(config.validate(), DomainError);
  config.t_range = {1.5, 2.0};
  config.alpha_range = {0.0, 1.0};
  EXPECT_THROW(config.validate(), DomainError);
  config.alpha_range = {0.5, 0.5};
  EXPECT_NO_THROW(config.validate());
  config.rel_tol = -1.0;
  EXPECT_THROW(config.validate(), DomainError);
}
