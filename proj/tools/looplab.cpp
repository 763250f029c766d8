#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "looplab/catalog.hpp"
#include "looplab/enumerate.hpp"
#include "looplab/error.hpp"
#include "looplab/io.hpp"
#include "looplab/report.hpp"
#include "looplab/theorems.hpp"

namespace {

struct Input {
  looplab::LoopTable table;
  std::string source;
};

/// Inputs are a file path, "-" for stdin, or "catalog:<name>".
Input load(const std::string& arg) {
  using looplab::Error;
  if (arg.rfind("catalog:", 0) == 0)
    return {looplab::catalog_lookup(arg.substr(8)).table, arg};
  std::string text;
  if (arg == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    text = ss.str();
  } else {
    std::ifstream f(arg);
    if (!f) throw Error(Error::Kind::Parse, "cannot open '" + arg + "'");
    std::ostringstream ss;
    ss << f.rdbuf();
    text = ss.str();
  }
  const looplab::MagmaTable m = looplab::parse_table(text);
  looplab::Validation v = looplab::validate(m);
  if (!v.loop) {
    std::string msg = "not a loop";
    if (!v.issues.empty()) msg = v.issues.front().message();
    throw Error(Error::Kind::NotALoop, msg);
  }
  return {*std::move(v.loop), arg};
}

int env_threads() {
  const char* s = std::getenv("LOOPLAB_THREADS");
  if (!s) return 0;
  try {
    return std::max(1, std::stoi(s));
  } catch (const std::exception&) {
    return 0;
  }
}

int run_analyze(const std::string& input, bool as_json) {
  const Input in = load(input);
  const looplab::AnalysisReport r = looplab::analyze(in.table, in.source);
  std::cout << (as_json ? looplab::to_json(r) : looplab::to_text(r));
  return 0;
}

int run_verify(const std::string& input,
               const std::vector<std::string>& claim_names) {
  using looplab::Error;
  const Input in = load(input);
  std::vector<looplab::ClaimId> ids;
  if (claim_names.empty()) {
    ids = looplab::all_claims();
  } else {
    for (const std::string& s : claim_names) {
      const auto id = looplab::claim_from_string(s);
      if (!id)
        throw Error(Error::Kind::Precondition, "unknown claim '" + s + "'");
      ids.push_back(*id);
    }
  }
  bool falsified = false;
  for (const looplab::ClaimId id : ids) {
    const looplab::TheoremVerdict v = looplab::verify_claim(in.table, id);
    std::cout << to_string(id) << ": ";
    if (!v.applicable)
      std::cout << "not applicable (" << v.evidence << ")";
    else if (v.verified)
      std::cout << "verified - " << v.evidence;
    else
      std::cout << "FALSIFIED - " << v.evidence;
    std::cout << "\n";
    falsified = falsified || v.falsified();
  }
  return falsified ? 1 : 0;
}

int run_enumerate(int order, const std::vector<std::string>& filter_names,
                  bool up_to_iso, long long limit) {
  looplab::EnumerationJob job;
  job.order = order;
  for (const std::string& name : filter_names)
    job.filters.push_back(looplab::parse_filter(name));
  job.up_to_iso = up_to_iso;
  if (limit >= 0) job.limit = limit;
  job.threads = env_threads();
  looplab::EnumerationStats stats;
  bool first = true;
  looplab::enumerate(
      job,
      [&](const looplab::LoopTable& t) {
        if (!first) std::cout << "\n";
        first = false;
        std::cout << looplab::format_table(t);
        return true;
      },
      &stats);
  std::ostringstream sum;
  sum << "order " << order << ": " << stats.generated << " tables";
  for (const looplab::FilterStage& st : stats.stages)
    sum << "; after " << st.name << ": " << st.survivors;
  sum << "; emitted " << stats.emitted << "\n";
  std::cerr << sum.str();
  return 0;
}

int run_catalog_emit(const std::string& name) {
  std::cout << looplab::format_table(looplab::catalog_lookup(name).table);
  return 0;
}

int run_catalog_list() {
  for (const std::string& name : looplab::catalog_names()) {
    if (name.find('N') != std::string::npos) {
      std::cout << name << "\n";
      continue;
    }
    const looplab::CatalogEntry e = looplab::catalog_lookup(name);
    std::cout << name << "  (order " << e.table.order() << ") "
              << e.description << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite loop analysis over Cayley tables"};
  app.require_subcommand(1);

  std::string input;
  bool as_json = false;
  CLI::App* analyze = app.add_subcommand("analyze", "full report on one loop");
  analyze->add_option("input", input, "table file, '-' for stdin, or catalog:<name>")
      ->required();
  analyze->add_flag("--json", as_json, "machine-readable report");

  std::vector<std::string> claim_names;
  CLI::App* verify = app.add_subcommand("verify", "check the named claims");
  verify->add_option("input", input, "table file, '-' for stdin, or catalog:<name>")
      ->required();
  verify->add_option("--claims", claim_names, "comma-separated claim ids")
      ->delimiter(',');

  int order = 0;
  std::vector<std::string> filter_names;
  bool up_to_iso = false;
  long long limit = -1;
  CLI::App* enumerate =
      app.add_subcommand("enumerate", "stream all loops of one order");
  enumerate->add_option("--order", order, "loop order")->required();
  enumerate->add_option("--filter", filter_names, "comma-separated predicates")
      ->delimiter(',');
  enumerate->add_flag("--up-to-iso", up_to_iso,
                      "one representative per isomorphism class");
  enumerate->add_option("--limit", limit, "stop after this many tables");

  std::string catalog_name;
  CLI::App* catalog = app.add_subcommand("catalog", "built-in loops");
  catalog->require_subcommand(1);
  CLI::App* emit = catalog->add_subcommand("emit", "print a catalog table");
  emit->add_option("name", catalog_name, "catalog entry name")->required();
  CLI::App* list = catalog->add_subcommand("list", "list catalog entries");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*analyze) return run_analyze(input, as_json);
    if (*verify) return run_verify(input, claim_names);
    if (*enumerate) return run_enumerate(order, filter_names, up_to_iso, limit);
    if (*emit) return run_catalog_emit(catalog_name);
    if (*list) return run_catalog_list();
  } catch (const looplab::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
