#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hpt/generator_table.hpp"
#include "hpt/graded_poly.hpp"
#include "hpt/homology_db.hpp"

namespace hpt {

enum class StageStatus { Pass, Fail, Ambiguous };

std::string_view status_name(StageStatus s);

struct StageReport {
  int index = 0;
  std::string name;
  std::string operation;
  std::vector<std::string> inputs;
  std::vector<std::string> expected;
  StageStatus status = StageStatus::Pass;
  // Inputs were replaced by published data because an upstream stage did
  // not pass.
  bool fallback = false;
  std::vector<std::pair<std::string, std::string>> details;
  std::vector<std::string> diff;
  std::vector<std::string> candidates;

  void detail(std::string key, std::string value) { details.emplace_back(std::move(key), std::move(value)); }
  void fail_with(std::string line) {
    status = StageStatus::Fail;
    diff.push_back(std::move(line));
  }
};

struct Report {
  std::vector<StageReport> stages;

  StageStatus overall() const;
  const StageReport* first_failure() const;
  std::string text() const;
  std::string json() const;
};

struct PipelineOptions {
  std::vector<int> eval_ranks{2, 3, 4, 5};
  std::vector<int> reference = reference_ranks();
  bool khovanov_filter = true;
  // Also assert the d(-1) readings, which are otherwise only reported.
  bool strict = false;
};

class Pipeline {
 public:
  Pipeline(const Database& db, PipelineOptions opts = {});

  // Stages 1-6.
  Report run_kt();
  // Stages 7-9; runs the KT stages first if needed, but only reports its own.
  Report run_conway();
  Report run_all();

 private:
  struct LinkChain {
    std::optional<GeneratorTable> table1;
    std::optional<GeneratorTable> table2;
    std::optional<FamilyPoincare> reduced;
    std::optional<Poincare> total;
  };

  StageReport stage_corner_table(const std::string& b_name, const std::string& c_name, LinkChain& out);
  StageReport stage_e1_filter(const GeneratorTable& table1, LinkChain& out);
  StageReport stage_khovanov_search(const GeneratorTable& table2, const std::string& kh_name, LinkChain& out);
  StageReport stage_total_reduction(const FamilyPoincare& reduced, LinkChain& out);
  StageReport stage_final(const Poincare& link_total, const std::string& knot, std::optional<Poincare>& out);
  StageReport stage_cross_checks(const Poincare& final_poly, const std::string& knot);

  GeneratorTable published_table(const std::string& prefix) const;
  std::vector<int> check_ranks() const;

  const Database& db_;
  PipelineOptions opts_;
  std::optional<Report> kt_report_;
  std::optional<Poincare> kt_final_;
};

// Throws StageMismatch naming the first failing or ambiguous stage.
void require_pass(const Report& r);

// Degree-level differences between two objects, canonical forms for families.
std::vector<std::string> diff_family(const FamilyPoincare& got, const FamilyPoincare& want);
std::vector<std::string> diff_poincare(const Poincare& got, const Poincare& want);

}  // namespace hpt
