#include "hog/cli.hpp"

#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "CLI11.hpp"

#include "hog/ac_trie.hpp"
#include "hog/ehog.hpp"
#include "hog/export.hpp"
#include "hog/hog.hpp"
#include "hog/instance_gen.hpp"
#include "hog/overlap_oracle.hpp"
#include "hog/verify.hpp"
#include "hog/word_set.hpp"

namespace hog::cli {
namespace {

// Allowed --emit values per subcommand; the first entry is the default.
const std::map<std::string, std::vector<std::string>>& emit_table() {
  static const std::map<std::string, std::vector<std::string>> table{
      {"build-trie", {"dot", "json"}}, {"build-ehog", {"dot", "json"}},
      {"build-hog", {"dot", "json"}},  {"og-matrix", {"tsv", "json"}},
      {"trace", {"tsv"}},              {"gen-pz", {}},
      {"stats", {"json", "tsv"}},      {"sweep", {}},
      {"verify", {}},
  };
  return table;
}

std::string resolve_emit(const RunConfig& config) {
  const auto& table = emit_table();
  auto it = table.find(config.subcommand);
  if (it == table.end())
    throw validation_error("unknown subcommand '" + config.subcommand + "'");
  const auto& allowed = it->second;
  if (config.emit.empty()) return allowed.empty() ? std::string() : allowed.front();
  if (std::find(allowed.begin(), allowed.end(), config.emit) == allowed.end())
    throw validation_error("--emit " + config.emit + " is not supported by " +
                           config.subcommand);
  return config.emit;
}

std::vector<std::string> split_words(const std::string& inline_words) {
  std::vector<std::string> out;
  std::stringstream ss(inline_words);
  std::string token;
  while (std::getline(ss, token, ','))
    if (!token.empty()) out.push_back(token);
  return out;
}

StringSet load_words(const RunConfig& config, std::istream& in) {
  if (!config.input.empty() && !config.words.empty())
    throw validation_error("--input and --words are mutually exclusive");
  InputFormat format = parse_input_format(config.format);
  ContainmentPolicy policy = parse_containment_policy(config.containment);
  std::vector<std::string> raw;
  if (!config.words.empty()) {
    raw = split_words(config.words);
  } else if (!config.input.empty()) {
    std::ifstream file(config.input, std::ios::binary);
    if (!file) throw validation_error("cannot read input file '" + config.input + "'");
    raw = parse_words(file, format);
  } else {
    raw = parse_words(in, format);
  }
  return normalize(std::move(raw), policy);
}

// Runs the oracle checks requested by --verify / --debug-invariants.
bool verification_passes(const RunConfig& config, const StringSet& words, std::ostream& err) {
  if (!config.verify && !config.debug_invariants) return true;
  bool ok = true;
  for (const CheckResult& r : verify_instance(words, config.debug_invariants)) {
    if (r.passed) continue;
    err << "verification failed: " << r.name << ": " << r.detail << '\n';
    ok = false;
  }
  return ok;
}

int dispatch(const RunConfig& config, const std::string& emit, std::istream& in,
             std::ostream& out, std::ostream& err) {
  const std::string& cmd = config.subcommand;

  if (cmd == "gen-pz") {
    write_words(out, generate_pz(config.alphabet, config.z));
    return kOk;
  }
  if (cmd == "sweep") {
    if (config.alphabet.empty()) throw validation_error("sweep requires --alphabet");
    write_sweep_csv(out, sweep_pz(config.alphabet, config.z_max));
    return kOk;
  }

  StringSet words;
  if (cmd == "stats" && !config.alphabet.empty()) {
    if (!config.input.empty() || !config.words.empty())
      throw validation_error("stats takes either --alphabet/--z or input words, not both");
    words = generate_pz(config.alphabet, config.z);
  } else {
    words = load_words(config, in);
  }

  if (cmd == "verify") {
    bool ok = true;
    for (const CheckResult& r : verify_instance(words, true)) {
      out << (r.passed ? "PASS " : "FAIL ") << r.name;
      if (!r.passed) out << ": " << r.detail;
      out << '\n';
      ok = ok && r.passed;
    }
    return ok ? kOk : kVerificationFailure;
  }

  if (!verification_passes(config, words, err)) return kVerificationFailure;

  if (cmd == "build-trie") {
    Trie trie = build_trie(words);
    compute_failure_links(trie);
    if (emit == "dot")
      write_trie_dot(out, trie, words);
    else
      out << trie_stats_json(trie, words).dump(2) << '\n';
  } else if (cmd == "build-ehog") {
    Ehog ehog = build_ehog(words);
    if (emit == "dot")
      write_ehog_dot(out, ehog, words);
    else
      out << ehog_stats_json(ehog, words).dump(2) << '\n';
  } else if (cmd == "build-hog") {
    HogBuild build = build_hog_detailed(words);
    if (emit == "dot")
      write_hog_dot(out, build.hog, words);
    else
      out << hog_stats_json(build, words).dump(2) << '\n';
  } else if (cmd == "og-matrix") {
    OverlapMatrix m;
    if (config.via == "hog")
      m = og_from_hog(build_hog(words), words);
    else if (config.via == "oracle")
      m = overlap_graph(words);
    else
      throw validation_error("--via must be hog or oracle");
    if (emit == "tsv")
      write_matrix_tsv(out, m);
    else
      out << matrix_json(m).dump(2) << '\n';
  } else if (cmd == "trace") {
    write_trace_tsv(out, trace_mark_hog(words));
  } else if (cmd == "stats") {
    SizeReport report = size_report(words);
    if (emit == "json")
      out << size_report_json(report, words).dump(2) << '\n';
    else
      write_size_report_tsv(out, report, words);
  }
  return kOk;
}

void add_input_options(CLI::App* sub, RunConfig& config) {
  auto* input = sub->add_option("--input", config.input, "Word file (default: stdin)");
  auto* words = sub->add_option("--words", config.words, "Inline comma-separated words");
  input->excludes(words);
  sub->add_option("--format", config.format, "Input format")
      ->check(CLI::IsMember({"lines", "fasta"}));
  sub->add_option("--containment", config.containment,
                  "What to do with duplicate or contained words")
      ->check(CLI::IsMember({"reject", "filter"}));
}

void add_check_flags(CLI::App* sub, RunConfig& config) {
  sub->add_flag("--verify", config.verify, "Cross-check against the brute-force oracle");
  sub->add_flag("--debug-invariants", config.debug_invariants,
                "Check the marking invariants against the oracle");
}

void add_output_options(CLI::App* sub, RunConfig& config, bool with_emit) {
  sub->add_option("--out", config.out, "Output file (default: stdout)");
  if (with_emit) sub->add_option("--emit", config.emit, "Output format: dot, json or tsv");
}

}  // namespace

int run(const RunConfig& config, std::istream& in, std::ostream& out, std::ostream& err) {
  try {
    std::string emit = resolve_emit(config);
    if (config.out.empty()) return dispatch(config, emit, in, out, err);
    std::ostringstream buffer;
    int code = dispatch(config, emit, in, buffer, err);
    if (code != kOk) return code;
    std::ofstream file(config.out, std::ios::binary);
    if (!file) throw validation_error("cannot write '" + config.out + "'");
    file << buffer.str();
    return file ? kOk : kValidationError;
  } catch (const format_error& e) {
    err << "format error: " << e.what() << '\n';
  } catch (const validation_error& e) {
    err << "error: " << e.what() << '\n';
  }
  return kValidationError;
}

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
  RunConfig config;
  CLI::App app{"Hierarchical overlap graph construction and verification", "hogtool"};
  app.require_subcommand(1);

  struct Spec {
    const char* name;
    const char* help;
  };
  const Spec specs[] = {
      {"build-trie", "Aho-Corasick tree with failure links"},
      {"build-ehog", "Extended hierarchical overlap graph"},
      {"build-hog", "Hierarchical overlap graph"},
      {"og-matrix", "Overlap graph weights"},
      {"trace", "Per-node trace of the marking pass"},
      {"gen-pz", "Cyclic-shift instance family"},
      {"stats", "EHOG/HOG node counts and their ratio"},
      {"sweep", "Size ratios of the cyclic-shift family for z = 1, 2, 4, ..."},
      {"verify", "Run every oracle cross-check on the input"},
  };
  for (const Spec& s : specs) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    const std::string name = s.name;
    sub->callback([&config, name] { config.subcommand = name; });
    bool takes_words = name != "gen-pz" && name != "sweep";
    if (takes_words) add_input_options(sub, config);
    if (takes_words && name != "verify") add_check_flags(sub, config);
    add_output_options(sub, config, !emit_table().at(name).empty());
    if (name == "og-matrix")
      sub->add_option("--via", config.via, "Route: hog or oracle")
          ->check(CLI::IsMember({"hog", "oracle"}));
    if (name == "gen-pz" || name == "stats" || name == "sweep") {
      auto* alphabet = sub->add_option("--alphabet", config.alphabet,
                                       "Ordered distinct symbols, e.g. acgt");
      if (name == "gen-pz") alphabet->required();
    }
    if (name == "gen-pz" || name == "stats")
      sub->add_option("--z", config.z, "Repetition count")->check(CLI::PositiveNumber);
    if (name == "sweep")
      sub->add_option("--z-max", config.z_max, "Largest z")->check(CLI::PositiveNumber);
  }

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kValidationError;
  }
  return run(config, in, out, err);
}

}  // namespace hog::cli
