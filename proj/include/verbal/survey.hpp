#ifndef VERBAL_SURVEY_HPP
#define VERBAL_SURVEY_HPP

#include <optional>
#include <string>
#include <vector>

#include "verbal/word_values.hpp"

namespace verbal {

struct SurveySpec {
  std::vector<std::string> words;   // word strings over {x, y, z1, z2, z3}
  std::vector<std::string> groups;  // catalog names or JSON paths
  EnumBudget budget;
  std::string format = "csv";  // csv | json
};

struct SurveyRow {
  std::string word;
  std::string group;
  int group_order = 0;
  bool skipped = false;  // budget exceeded
  ConcisenessReport report;
  std::optional<int> nilpotency_class;
};

// One row per (word, group), in spec order.  Budget overruns mark the row as
// skipped instead of failing the run.
std::vector<SurveyRow> run_survey(const SurveySpec& spec);

// Deterministic, versioned renderings.
std::string survey_to_csv(const std::vector<SurveyRow>& rows);
std::string survey_to_json(const std::vector<SurveyRow>& rows);

// Single-report JSON: {"schema":1, "word":..., "group":..., ...}.
std::string report_to_json(const std::string& word, const std::string& group,
                           const ConcisenessReport& r);

// Default variable alphabet for CLI-supplied words.
std::vector<std::string> default_alphabet();

}  // namespace verbal

#endif
