// imaged: command-line front end for the imaged-factor verification toolkit.
//
// Exit codes: 0 verified, 1 a check failed, 2 usage or input error.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "imaged/factor_oracle.hpp"
#include "imaged/data.hpp"
#include "imaged/repetition.hpp"
#include "imaged/report.hpp"
#include "imaged/search.hpp"
#include "imaged/theorems.hpp"
#include "imaged/transfer.hpp"

namespace {

using imaged::Morphism;
using imaged::Rational;
using imaged::Word;
using json = nlohmann::ordered_json;

constexpr int kExitVerified = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

// Input errors detected after argument parsing.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct MorphismInput {
  Morphism morphism;
  std::string source;  // builtin name, file path or compact text
  std::optional<std::string> file_digest;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw InputError("cannot read " + path);
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// "h37" / "h342" name the bundled morphisms; an existing path is read as a
// morphism file; anything else is tried as the compact form "IMAGE0/IMAGE1".
MorphismInput load_morphism(const std::string& spec) {
  if (spec == "h37") {
    return {imaged::data::morphism37(), spec, std::nullopt};
  }
  if (spec == "h342") {
    return {imaged::data::morphism342(), spec, std::nullopt};
  }
  if (std::ifstream probe(spec); probe.good()) {
    const std::string text = read_file(spec);
    return {Morphism::parse(text), spec, imaged::fnv1a_hex(text)};
  }
  if (spec.find('/') != std::string::npos) {
    return {Morphism::parse_compact(spec), spec, std::nullopt};
  }
  throw InputError("morphism '" + spec + "' is neither a builtin name, a readable file nor IMAGE0/IMAGE1");
}

json morphism_json(const MorphismInput& in) {
  json j;
  j["source"] = in.source;
  j["digest"] = in.morphism.digest();
  if (in.file_digest) {
    j["fileDigest"] = *in.file_digest;
  }
  return j;
}

json manifest(const std::string& command, json parameters, json inputs) {
  json m;
  m["command"] = command;
  m["parameters"] = std::move(parameters);
  m["inputs"] = std::move(inputs);
  m["version"] = imaged::version();
  return m;
}

std::function<void(std::size_t, std::size_t)> progress_printer(bool enabled) {
  if (!enabled) {
    return {};
  }
  auto start = std::chrono::steady_clock::now();
  return [start](std::size_t done, std::size_t total) {
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::fprintf(stderr, "\r%zu/%zu subtrees, %.1f s", done, total, s);
    if (done == total) {
      std::fputc('\n', stderr);
    }
  };
}

unsigned parse_rules(const std::string& text) {
  if (text.empty() || text == "all") {
    return imaged::kAllRules;
  }
  unsigned rules = 0;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item == "run") {
      rules |= imaged::kRuleRun;
    } else if (item == "complement") {
      rules |= imaged::kRuleComplement;
    } else if (item == "image") {
      rules |= imaged::kRuleImage;
    } else if (item != "none") {
      throw InputError("unknown rule '" + item + "' (expected run, complement, image, all or none)");
    }
  }
  return rules;
}

void print_report(const imaged::Report& report) {
  std::cout << report.theorem << ": " << (report.pass ? "PASS" : "FAIL") << "\n";
  for (const auto& stage : report.stages) {
    std::cout << "  " << (stage.pass ? "ok   " : "FAIL ") << stage.name;
    for (const auto& [key, value] : stage.counts) {
      std::cout << " " << key << "=" << value;
    }
    std::cout << "\n";
    if (!stage.detail.empty()) {
      std::cout << "       " << stage.detail << "\n";
    }
    for (const auto& c : stage.counterexample) {
      std::cout << "       counterexample: " << (c.empty() ? "ε" : c) << "\n";
    }
  }
  if (report.search) {
    std::cout << "  nodes " << report.search->nodes_visited << ", max depth " << report.search->max_depth
              << ", deepest " << report.search->deepest_word << "\n";
  }
  std::cout << "  elapsed " << report.elapsed_ms << " ms\n";
}

// ---------------------------------------------------------------------------

struct VerifyArgs {
  std::string theorem;
  std::string morphism;
  std::size_t target = 36;
  unsigned threads = 1;
  std::size_t depth_cap = 0;
  std::string rules;
  bool free_first = false;
  bool keep_going = false;
  bool no_witnesses = false;
  bool progress = false;
  bool json = false;
  bool no_timing = false;
};

int run_verify(const VerifyArgs& a) {
  json params;
  json inputs = json::object();
  params["threads"] = a.threads;
  imaged::Report report;

  imaged::SearchConfig cfg;
  cfg.threads = a.threads;
  cfg.first_letter_fixed = !a.free_first;
  if (a.depth_cap > 0) {
    cfg.depth_cap = a.depth_cap;
  }
  cfg.rules = parse_rules(a.rules);
  cfg.progress = progress_printer(a.progress);

  if (a.theorem == "thm2" || a.theorem == "thm4") {
    const bool thm2 = a.theorem == "thm2";
    const auto m = load_morphism(a.morphism.empty() ? (thm2 ? "h37" : "h342") : a.morphism);
    inputs["morphism"] = morphism_json(m);
    params["keepGoing"] = a.keep_going;
    if (thm2) {
      report = imaged::verify_thm2(m.morphism, {.threads = a.threads, .keep_going = a.keep_going});
    } else {
      params["witnesses"] = !a.no_witnesses;
      imaged::Thm4Options opts;
      opts.threads = a.threads;
      opts.witnesses = !a.no_witnesses;
      opts.keep_going = a.keep_going;
      report = imaged::verify_thm4(m.morphism, opts);
    }
  } else if (a.theorem == "thm3") {
    params["firstLetterFixed"] = cfg.first_letter_fixed;
    params["rules"] = cfg.rules;
    if (cfg.depth_cap) {
      params["depthCap"] = *cfg.depth_cap;
    }
    report = imaged::verify_thm3(imaged::data::backtrack_patterns(), cfg);
  } else {
    params["target"] = a.target;
    params["firstLetterFixed"] = cfg.first_letter_fixed;
    if (cfg.depth_cap) {
      params["depthCap"] = *cfg.depth_cap;
    }
    report = imaged::verify_thm5(a.target, cfg);
  }

  if (a.json) {
    json doc = json::parse(report.to_json(!a.no_timing));
    doc["manifest"] = manifest("verify " + a.theorem, params, inputs);
    std::cout << doc.dump(2) << "\n";
  } else {
    print_report(report);
  }
  return report.pass ? kExitVerified : kExitFailed;
}

// ---------------------------------------------------------------------------

struct LemmaArgs {
  std::string morphism = "h37";
  std::string alpha = "7/4";
  std::string beta;
  std::size_t n = 1;
  unsigned threads = 1;
  bool json = false;
};

int run_lemma_sync(const LemmaArgs& a) {
  const auto m = load_morphism(a.morphism);
  const Rational alpha = Rational::parse(a.alpha);
  const Rational beta = Rational::parse(a.beta);

  json doc;
  doc["manifest"] = manifest("lemma-sync", {{"alpha", alpha.str()}, {"beta", beta.str()}, {"n", a.n}, {"threads", a.threads}},
                             {{"morphism", morphism_json(m)}});
  const auto start = std::chrono::steady_clock::now();
  int code = kExitVerified;
  try {
    const auto r = imaged::verify_transfer(m.morphism, alpha, beta, a.n, a.threads);
    doc["pass"] = r.pass;
    doc["bound"] = r.bound.str();
    doc["maxLength"] = r.max_length;
    doc["wordsChecked"] = r.words_checked;
    if (r.counterexample) {
      const auto& c = *r.counterexample;
      doc["counterexample"] = {{"preimage", c.preimage.str()},
                               {"start", c.witness.start},
                               {"period", c.witness.period},
                               {"length", c.witness.length}};
    }
    code = r.pass ? kExitVerified : kExitFailed;
  } catch (const imaged::HypothesisError& e) {
    // Still report whether the premise holds, for diagnosis.
    doc["pass"] = false;
    doc["hypothesis"] = e.what();
    code = kExitFailed;
    if (const auto q = imaged::uniform_width(m.morphism)) {
      const auto bound = imaged::sync_bound(alpha, beta, *q);
      const auto r = imaged::check_images_free(m.morphism, alpha, beta, a.n, imaged::longest_length_below(bound), a.threads);
      doc["bound"] = bound.str();
      doc["premise"] = {{"pass", r.pass}, {"maxLength", r.max_length}, {"wordsChecked", r.words_checked}};
    }
  }
  doc["elapsedMs"] = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  if (a.json) {
    std::cout << doc.dump(2) << "\n";
    return code;
  }
  std::cout << "lemma-sync: " << (doc["pass"].get<bool>() ? "PASS" : "FAIL") << "\n";
  if (doc.contains("hypothesis")) {
    std::cout << "  hypothesis violated: " << doc["hypothesis"].get<std::string>() << "\n";
    if (!doc.contains("premise")) {
      return code;
    }
    const auto& p = doc["premise"];
    std::cout << "  premise alone " << (p["pass"].get<bool>() ? "holds" : "fails") << " for pre-images up to length "
              << p["maxLength"].get<std::size_t>() << " (" << p["wordsChecked"].get<std::size_t>() << " words)\n";
    return code;
  }
  std::cout << "  bound " << doc["bound"].get<std::string>() << ", pre-images up to length "
            << doc["maxLength"].get<std::size_t>() << ", words checked " << doc["wordsChecked"].get<std::size_t>()
            << "\n";
  if (doc.contains("counterexample")) {
    std::cout << "  counterexample pre-image " << doc["counterexample"]["preimage"].get<std::string>() << "\n";
  }
  return code;
}

// ---------------------------------------------------------------------------

struct OracleArgs {
  std::string morphism = "h37";
  std::string alpha = "7/4";
  std::size_t max_len = 300;
  std::optional<std::string> query;
  std::optional<std::size_t> squares;
  std::optional<std::size_t> factors;
  std::string cache;
  bool list = false;
};

int run_oracle(const OracleArgs& a) {
  const auto m = load_morphism(a.morphism);
  const Rational alpha = Rational::parse(a.alpha);
  if (a.query && a.query->size() > a.max_len) {
    throw InputError("query of length " + std::to_string(a.query->size()) + " exceeds --max-len " +
                     std::to_string(a.max_len));
  }

  std::optional<imaged::FactorOracle> oracle;
  if (!a.cache.empty() && std::ifstream(a.cache).good()) {
    oracle = imaged::FactorOracle::load_windows(m.morphism, alpha, a.max_len, a.cache);
  } else {
    oracle = imaged::FactorOracle::build(m.morphism, alpha, a.max_len);
    if (!a.cache.empty()) {
      oracle->save_windows(a.cache);
    }
  }

  if (a.query) {
    const Word q(*a.query);
    const bool present = oracle->is_factor(q);
    std::cout << (present ? "present" : "absent") << "\n";
    if (const auto w = oracle->witness(q); present && w) {
      std::cout << "  in image of " << w->preimage << " at offset " << w->offset << "\n";
    }
    return kExitVerified;
  }
  if (a.squares) {
    const auto inv = imaged::square_roots(*oracle, *a.squares);
    std::vector<std::string> roots;
    for (const auto& u : inv.all()) {
      roots.push_back(u.str());
    }
    if (a.list || roots.size() <= 64) {
      for (std::size_t i = 0; i < roots.size(); ++i) {
        std::cout << (i ? "," : "") << roots[i];
      }
      std::cout << "\n";
    }
    std::cout << roots.size() << " square roots of period <= " << *a.squares << "\n";
    return kExitVerified;
  }
  if (a.factors) {
    const auto fs = oracle->factors_of_length(*a.factors);
    if (a.list) {
      for (const auto& f : fs) {
        std::cout << f << "\n";
      }
    }
    std::cout << fs.size() << " factors of length " << *a.factors << "\n";
    return kExitVerified;
  }
  std::cout << oracle->window_count() << " windows of length " << oracle->window() << "\n";
  return kExitVerified;
}

// ---------------------------------------------------------------------------

struct FreeArgs {
  int alphabet = 3;
  std::string beta = "7/4";
  std::size_t length = 0;
  bool count_only = false;
};

int run_free(const FreeArgs& a) {
  const auto words = imaged::enumerate_free(imaged::Alphabet(a.alphabet), Rational::parse(a.beta), a.length);
  if (a.count_only) {
    std::cout << words.size() << "\n";
    return kExitVerified;
  }
  for (const auto& w : words) {
    std::cout << w.str() << "\n";
  }
  return kExitVerified;
}

struct SquaresArgs {
  std::size_t min_period = 2;
  std::size_t depth_cap = 64;
};

int run_squares(const SquaresArgs& a) {
  const auto r = imaged::max_word_without_big_squares(a.min_period, a.depth_cap);
  std::cout << "longest word without squares of period >= " << a.min_period << ": "
            << (r.reached_cap ? ">= " : "") << r.max_length << "\n";
  for (const auto& w : r.witnesses) {
    std::cout << "  " << w << "\n";
  }
  return kExitVerified;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verification toolkit for imaged factors of binary words"};
  app.require_subcommand(0, 1);

  bool dump_data = false;
  bool show_version = false;
  app.add_flag("--dump-data", dump_data, "Print the bundled morphisms and word sets");
  app.add_flag("--version", show_version, "Print the toolkit version");

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Run a theorem pipeline");
  verify->add_option("theorem", va.theorem, "thm2, thm3, thm4 or thm5")
      ->required()
      ->check(CLI::IsMember({"thm2", "thm3", "thm4", "thm5"}));
  verify->add_option("--morphism", va.morphism, "Morphism: h37, h342, a file, or IMAGE0/IMAGE1");
  verify->add_option("--target", va.target, "Imaged-factor count for thm5")->check(CLI::PositiveNumber);
  verify->add_option("--threads", va.threads, "Worker threads")->check(CLI::PositiveNumber);
  verify->add_option("--depth-cap", va.depth_cap, "Depth cap for the searches")->check(CLI::PositiveNumber);
  verify->add_option("--rules", va.rules, "thm3 backtrack rules: comma list of run,complement,image");
  verify->add_flag("--free-first-letter", va.free_first, "Do not fix the first letter to 0");
  verify->add_flag("--keep-going", va.keep_going, "Run every stage even after a failure");
  verify->add_flag("--no-witnesses", va.no_witnesses, "thm4: skip the witness search for the 36 words");
  verify->add_flag("--progress", va.progress, "Report search progress on stderr");
  verify->add_flag("--json", va.json, "Emit the report as JSON");
  verify->add_flag("--no-timing", va.no_timing, "Omit elapsed times from the JSON report");

  LemmaArgs la;
  auto* lemma = app.add_subcommand("lemma-sync", "Check the freeness transfer for a uniform morphism");
  lemma->add_option("--morphism", la.morphism, "Morphism: h37, h342, a file, or IMAGE0/IMAGE1");
  lemma->add_option("--alpha", la.alpha, "Pre-image exponent p/q");
  lemma->add_option("--beta", la.beta, "Image exponent p/q")->required();
  lemma->add_option("--n", la.n, "Minimal period")->check(CLI::PositiveNumber);
  lemma->add_option("--threads", la.threads, "Worker threads")->check(CLI::PositiveNumber);
  lemma->add_flag("--json", la.json, "Emit JSON");

  OracleArgs oa;
  auto* oracle = app.add_subcommand("oracle", "Query the factor language of a uniform morphism");
  oracle->add_option("--morphism", oa.morphism, "Morphism: h37, h342, a file, or IMAGE0/IMAGE1");
  oracle->add_option("--alpha", oa.alpha, "Pre-image exponent p/q");
  oracle->add_option("--max-len", oa.max_len, "Longest query length");
  auto* q = oracle->add_option("--query", oa.query, "Factor membership of WORD");
  auto* s = oracle->add_option("--squares", oa.squares, "Square roots up to period P");
  auto* f = oracle->add_option("--factors", oa.factors, "Factors of length L");
  q->excludes(s)->excludes(f);
  s->excludes(f);
  oracle->add_option("--cache", oa.cache, "Window cache file (read if present, else written)");
  oracle->add_flag("--list", oa.list, "List every factor or root");

  FreeArgs fa;
  auto* free = app.add_subcommand("free", "Enumerate repetition-free words");
  free->add_option("--alphabet", fa.alphabet, "Alphabet size 1..3")->check(CLI::Range(1, 3));
  free->add_option("--beta", fa.beta, "Exponent p/q");
  free->add_option("--length", fa.length, "Word length")->required();
  free->add_flag("--count-only", fa.count_only, "Print only the number of words");

  SquaresArgs sa;
  auto* squares = app.add_subcommand("squares", "Longest binary word without squares of large period");
  squares->add_option("--min-period", sa.min_period, "Smallest forbidden square period")->check(CLI::PositiveNumber);
  squares->add_option("--depth-cap", sa.depth_cap, "Search depth cap")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitVerified : kExitUsage;
  }

  try {
    if (show_version) {
      std::cout << imaged::version() << "\n";
      return kExitVerified;
    }
    if (dump_data) {
      std::cout << imaged::data::dump();
      return kExitVerified;
    }
    if (verify->parsed()) {
      return run_verify(va);
    }
    if (lemma->parsed()) {
      return run_lemma_sync(la);
    }
    if (oracle->parsed()) {
      return run_oracle(oa);
    }
    if (free->parsed()) {
      return run_free(fa);
    }
    if (squares->parsed()) {
      return run_squares(sa);
    }
    std::cout << app.help();
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
