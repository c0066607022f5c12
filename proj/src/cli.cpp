#include "verbal/cli.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "verbal/catalog.hpp"
#include "verbal/criteria.hpp"
#include "verbal/hall.hpp"
#include "verbal/param_word.hpp"
#include "verbal/survey.hpp"
#include "verbal/verify_suites.hpp"
#include "verbal/word_values.hpp"

namespace verbal {

namespace {

// splits on commas at bracket depth zero, so labels like "(1,0|2)" survive
std::vector<std::string> split_top_level(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char c : text) {
    if (c == '(' || c == '[' || c == '{') ++depth;
    if (c == ')' || c == ']' || c == '}') --depth;
    if (c == ',' && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

Assignment parse_assignment(const std::string& text, const Word& w,
                            const FiniteGroup& g) {
  Assignment a;
  a.values.assign(w.alphabet().size(), -1);
  for (const auto& piece : split_top_level(text)) {
    auto eq = piece.find('=');
    if (eq == std::string::npos)
      fail(ErrorKind::parse, "assignment entry \"" + piece + "\" needs var=label");
    std::string var = piece.substr(0, eq);
    std::string label = piece.substr(eq + 1);
    auto it = std::find(w.alphabet().begin(), w.alphabet().end(), var);
    if (it == w.alphabet().end())
      fail(ErrorKind::parse, "assignment names unknown variable '" + var + "'");
    auto elem = g.element_by_label(label);
    if (!elem)
      fail(ErrorKind::parse, "no element labelled \"" + label + "\" in " + g.name());
    a.values[it - w.alphabet().begin()] = *elem;
  }
  for (std::size_t i = 0; i < a.values.size(); ++i)
    if (a.values[i] < 0)
      fail(ErrorKind::parse, "assignment misses variable '" + w.alphabet()[i] + "'");
  return a;
}

std::vector<std::string> word_alphabet(const std::string& text) {
  Word probe = parse_word(text, default_alphabet());
  std::vector<std::string> used;
  for (const auto& v : probe.alphabet())
    for (const auto& l : probe.body().letters())
      if (l.sym == v) {
        used.push_back(v);
        break;
      }
  if (used.empty()) used.push_back("x");
  return used;
}

void write_output(const std::string& path, const std::string& content,
                  std::ostream& out) {
  if (path.empty()) {
    out << content;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) fail(ErrorKind::parse, "cannot write to \"" + path + "\"");
  f << content;
}

std::vector<long long> parse_primes(const std::string& text) {
  std::vector<long long> out;
  for (const auto& piece : split_top_level(text)) out.push_back(std::stoll(piece));
  return out;
}

int print_suites(const std::vector<SuiteResult>& results, std::ostream& out) {
  bool all_ok = true;
  for (const auto& r : results) {
    out << (r.passed ? "[PASS] " : "[FAIL] ") << r.name << " (" << std::fixed
        << std::setprecision(1) << r.seconds << "s): " << r.detail << "\n";
    all_ok = all_ok && r.passed;
  }
  return all_ok ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"word maps, verbal subgroups and nilpotent collection on finite groups"};
  app.require_subcommand(1);

  std::string word_text, group_spec, assignment_text, omega_text, alphabet_text;
  std::string output_path, format = "csv", primes_text = "2,3,5", suite_name;
  std::vector<std::string> words, groups;
  std::uint64_t budget_tuples = EnumBudget{}.max_tuples;
  std::uint64_t seed = 12345;
  int class_bound = 3, valence = 2, count = 200, max_e = 3, max_order = 0;

  auto* eval = app.add_subcommand("eval", "evaluate a word at an assignment");
  eval->add_option("-w,--word", word_text)->required();
  eval->add_option("-G,--group", group_spec)->required();
  eval->add_option("-a,--assign", assignment_text)->required();

  auto* values = app.add_subcommand("values", "enumerate the value set G_w");
  values->add_option("-w,--word", word_text)->required();
  values->add_option("-G,--group", group_spec)->required();
  values->add_option("--budget", budget_tuples);

  auto* verbal_cmd = app.add_subcommand("verbal", "compute the verbal subgroup w(G)");
  verbal_cmd->add_option("-w,--word", word_text)->required();
  verbal_cmd->add_option("-G,--group", group_spec)->required();
  verbal_cmd->add_option("--budget", budget_tuples);

  auto* survey = app.add_subcommand("survey", "tabulate reports over words x groups");
  std::string word_sink, group_sink;
  // each() sees raw tokens, sidestepping CLI11's bracket-list splitting of
  // vector options (word syntax itself uses [ and ,)
  survey->add_option("--word", word_sink)
      ->each([&words](const std::string& s) { words.push_back(s); })
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeLast)
      ->required();
  survey->add_option("--group", group_sink)
      ->each([&groups](const std::string& s) { groups.push_back(s); })
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeLast)
      ->required();
  survey->add_option("--budget", budget_tuples);
  survey->add_option("-o,--output", output_path);
  survey->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));

  auto* verify = app.add_subcommand("verify", "run a named verification suite");
  verify->add_option("suite", suite_name)
      ->required()
      ->check(CLI::IsMember({"f2", "cor3", "collect", "laurent", "sylow", "all"}));
  verify->add_option("--class", class_bound);
  verify->add_option("--group", group_spec);
  verify->add_option("--seed", seed);
  verify->add_option("--count", count);
  verify->add_option("--max-e", max_e);
  verify->add_option("--max-order", max_order);
  verify->add_option("--primes", primes_text);

  auto* collect_cmd = app.add_subcommand("collect", "print the Hall normal form");
  collect_cmd->add_option("-w,--word", word_text)->required();
  collect_cmd->add_option("--alphabet", alphabet_text)->required();
  collect_cmd->add_option("--class", class_bound)->required();

  auto* decompose = app.add_subcommand("decompose", "friendly E-product decomposition");
  decompose->add_option("--omega", omega_text)->required();
  decompose->add_option("--valence", valence)->required();
  decompose->add_option("--class", class_bound)->required();

  auto* checkvn = app.add_subcommand("check-vn", "Laurent virtual-nilpotency test");
  checkvn->add_option("--word", word_text)->required();
  checkvn->add_option("--primes", primes_text);

  try {
    std::vector<std::string> mut = args;
    std::reverse(mut.begin(), mut.end());
    app.parse(mut);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      out << app.help();
      return 0;
    }
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  EnumBudget budget{budget_tuples};
  try {
    if (eval->parsed()) {
      FiniteGroup g = group_by_name(group_spec);
      Word w = parse_word(word_text, word_alphabet(word_text));
      Assignment a = parse_assignment(assignment_text, w, g);
      out << g.label(evaluate(w, g, a)) << "\n";
      return 0;
    }
    if (values->parsed()) {
      FiniteGroup g = group_by_name(group_spec);
      Word w = parse_word(word_text, word_alphabet(word_text));
      auto vs = value_set(w, g, {}, budget);
      out << "|G_w| = " << vs.size() << "\n";
      for (Elem v : vs) out << g.label(v) << "\n";
      return 0;
    }
    if (verbal_cmd->parsed()) {
      FiniteGroup g = group_by_name(group_spec);
      Word w = parse_word(word_text, word_alphabet(word_text));
      Subgroup s = verbal_subgroup(w, g, budget);
      out << "|w(G)| = " << s.order() << "\n";
      for (Elem v : s.elements) out << g.label(v) << "\n";
      return 0;
    }
    if (survey->parsed()) {
      SurveySpec spec{words, groups, budget, format};
      auto rows = run_survey(spec);
      write_output(output_path,
                   format == "csv" ? survey_to_csv(rows) : survey_to_json(rows), out);
      return 0;
    }
    if (verify->parsed()) {
      std::vector<SuiteResult> results;
      if (suite_name == "f2") {
        if (!group_spec.empty()) group_by_name(group_spec);  // fixture errors surface early
        results.push_back(group_spec.empty() ? suite_f2()
                                             : suite_f2_single(class_bound, group_spec));
      } else if (suite_name == "cor3") {
        results.push_back(suite_cor3(max_order > 0 ? max_order : 16));
      } else if (suite_name == "collect") {
        results.push_back(suite_collect(count, seed));
      } else if (suite_name == "laurent") {
        results.push_back(suite_laurent(max_e, parse_primes(primes_text)));
      } else if (suite_name == "sylow") {
        results.push_back(suite_sylow(max_order > 0 ? max_order : 64));
      } else {
        results = run_all_acceptance();
      }
      return print_suites(results, out);
    }
    if (collect_cmd->parsed()) {
      auto alphabet = split_top_level(alphabet_text);
      Word w = parse_word(word_text, alphabet);
      HallNormalForm nf = collect(w, class_bound);
      out << nf.str(alphabet) << "\n";
      return 0;
    }
    if (decompose->parsed()) {
      ParamWord omega = parse_param_word(omega_text, valence);
      std::vector<std::string> handles;
      for (int q = 1; q <= valence; ++q) handles.push_back("b" + std::to_string(q));
      auto fd = friendly_decompose(omega, class_bound, handles);
      nlohmann::json j;
      j["schema"] = 1;
      j["omega"] = omega.str();
      j["class"] = class_bound;
      auto factors = nlohmann::json::array();
      for (const auto& f : fd.source.factors) factors.push_back(f.str());
      j["e_product"] = std::move(factors);
      auto nu = nlohmann::json::array();
      for (const auto& f : fd.nu_b.factors) nu.push_back(f.str());
      j["nu_b"] = std::move(nu);
      j["certificate"] = nlohmann::json::parse(fd.certificate.to_json());
      // iterated maximal lengths down to the empty product
      auto chain = nlohmann::json::array();
      ParamWord cur = omega;
      for (int round = 0; round < 64; ++round) {
        auto step = friendly_decompose(cur, class_bound, handles);
        if (step.source.empty()) break;
        chain.push_back(nlohmann::json::array(
            {step.certificate.max_source.co_k, step.certificate.max_source.deg}));
        if (step.nu_b.empty()) break;
        cur = step.nu_b.product();
      }
      j["descent_chain"] = std::move(chain);
      out << j.dump(2) << "\n";
      return 0;
    }
    if (checkvn->parsed()) {
      GeneralizedEngelShape shape = parse_shape(word_text);
      auto primes = parse_primes(primes_text);
      nlohmann::json j;
      j["schema"] = 1;
      j["word"] = word_text;
      if (shape.arity() >= 2) {
        LaurentPoly img = laurent_image(shape, primes.empty() ? 2 : primes[0]);
        j["polynomial"] = img.str();
      } else {
        j["polynomial"] = "power word";
      }
      bool vn = implies_virtual_nilpotency(shape, primes);
      j["nonzero"] = vn;
      j["implies_virtual_nilpotency"] = vn;
      auto parr = nlohmann::json::array();
      for (long long p : primes) parr.push_back(p);
      j["primes"] = std::move(parr);
      out << j.dump(2) << "\n";
      return 0;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.kind() == ErrorKind::parse ? 2 : 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  err << "no subcommand\n";
  return 2;
}

}  // namespace verbal
