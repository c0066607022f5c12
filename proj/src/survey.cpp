#include "verbal/survey.hpp"

#include <atomic>
#include <mutex>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "verbal/catalog.hpp"

namespace verbal {

std::vector<std::string> default_alphabet() {
  return {"x", "y", "z1", "z2", "z3"};
}

namespace {

std::vector<std::string> used_alphabet(const std::string& text) {
  // parse against the full default alphabet, then keep the variables used
  Word w = parse_word(text, default_alphabet());
  std::vector<std::string> used;
  for (const auto& v : w.alphabet())
    for (const auto& l : w.body().letters())
      if (l.sym == v) {
        used.push_back(v);
        break;
      }
  if (used.empty()) used.push_back("x");
  return used;
}

}  // namespace

std::vector<SurveyRow> run_survey(const SurveySpec& spec) {
  if (spec.words.empty() || spec.groups.empty())
    fail(ErrorKind::parse, "survey needs at least one word and one group");
  // parse everything up front so malformed input fails before any work
  std::vector<std::pair<std::string, Word>> words;
  for (const auto& ws : spec.words) words.emplace_back(ws, parse_word(ws, used_alphabet(ws)));
  std::vector<FiniteGroup> groups;
  for (const auto& gs : spec.groups) groups.push_back(group_by_name(gs));

  std::vector<SurveyRow> rows(words.size() * groups.size());
  auto compute = [&](std::size_t i) {
    const auto& [ws, w] = words[i / groups.size()];
    const FiniteGroup& g = groups[i % groups.size()];
    SurveyRow row;
    row.word = ws;
    row.group = g.name();
    row.group_order = g.order();
    row.nilpotency_class = nilpotency_class(g);
    try {
      row.report = conciseness_report(w, g, spec.budget);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::budget) throw;
      row.skipped = true;
    }
    rows[i] = std::move(row);
  };

  // worker pool over rows; assembly order is fixed by the index
  unsigned workers = std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, rows.size());
  if (workers <= 1) {
    for (std::size_t i = 0; i < rows.size(); ++i) compute(i);
    return rows;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  std::mutex error_lock;
  std::exception_ptr first_error;
  for (unsigned t = 0; t < workers; ++t)
    pool.emplace_back([&] {
      for (;;) {
        std::size_t i = next.fetch_add(1);
        if (i >= rows.size()) return;
        try {
          compute(i);
        } catch (...) {
          std::lock_guard<std::mutex> lk(error_lock);
          if (!first_error) first_error = std::current_exception();
        }
      }
    });
  for (auto& th : pool) th.join();
  if (first_error) std::rethrow_exception(first_error);
  return rows;
}

std::string survey_to_csv(const std::vector<SurveyRow>& rows) {
  std::ostringstream os;
  os << "# verbal survey v1\n";
  os << "word,group,order,value_count,verbal_order,width,weakly_rational,"
        "nilpotency_class\n";
  for (const auto& r : rows) {
    os << '"' << r.word << "\"," << r.group << ',' << r.group_order << ',';
    if (r.skipped) {
      os << "skipped,skipped,skipped,skipped,";
    } else {
      os << r.report.value_count << ',' << r.report.verbal_order << ','
         << r.report.width << ',' << (r.report.weakly_rational_on_G ? "true" : "false")
         << ',';
    }
    if (r.nilpotency_class)
      os << *r.nilpotency_class;
    else
      os << "none";
    os << '\n';
  }
  return os.str();
}

namespace {

nlohmann::json row_json(const SurveyRow& r) {
  nlohmann::json j;
  j["word"] = r.word;
  j["group"] = r.group;
  j["order"] = r.group_order;
  if (r.skipped) {
    j["skipped"] = true;
  } else {
    j["value_count"] = r.report.value_count;
    j["verbal_order"] = r.report.verbal_order;
    j["width"] = r.report.width;
    j["weakly_rational"] = r.report.weakly_rational_on_G;
  }
  if (r.nilpotency_class)
    j["nilpotency_class"] = *r.nilpotency_class;
  else
    j["nilpotency_class"] = nullptr;
  return j;
}

}  // namespace

std::string survey_to_json(const std::vector<SurveyRow>& rows) {
  nlohmann::json j;
  j["schema"] = 1;
  auto arr = nlohmann::json::array();
  for (const auto& r : rows) arr.push_back(row_json(r));
  j["rows"] = std::move(arr);
  return j.dump(2) + "\n";
}

std::string report_to_json(const std::string& word, const std::string& group,
                           const ConcisenessReport& r) {
  nlohmann::json j;
  j["schema"] = 1;
  j["word"] = word;
  j["group"] = group;
  j["value_count"] = r.value_count;
  j["verbal_order"] = r.verbal_order;
  j["width"] = r.width;
  j["weakly_rational"] = r.weakly_rational_on_G;
  return j.dump(2) + "\n";
}

}  // namespace verbal
