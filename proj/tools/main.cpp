// facering: command-line front end.
//
// Exit status: 0 ok, 1 a checked property failed, 2 invalid input.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "facering/classify.hpp"
#include "facering/corpus.hpp"
#include "facering/incidence.hpp"
#include "facering/io.hpp"
#include "facering/random.hpp"
#include "oracle_runner.hpp"

namespace {

using namespace facering;

constexpr int kOk = 0;
constexpr int kViolated = 1;
constexpr int kInvalid = 2;

/// A file path, or `corpus:<name>` for a built-in poset.
PosetFile load(const std::string& input) {
  const std::string prefix = "corpus:";
  if (input.rfind(prefix, 0) == 0) return corpus_file(input.substr(prefix.size()));
  return read_poset_file(input);
}

std::string display_name(const PosetFile& file, const std::string& input) {
  return file.name.empty() ? input : file.name;
}

int cmd_validate(const std::string& input) {
  const PosetFile file = load(input);
  const SimplicialPoset p = file.build();
  const auto inc = verify_incidence(p);
  std::cout << display_name(file, input) << ": valid simplicial poset, " << p.size()
            << " elements, " << p.atom_count() << " atoms, rank " << p.rank()
            << (p.is_pure() ? ", pure" : ", not pure") << "\n";
  if (!inc.ok) {
    std::cout << "incidence identity fails on the diamond " << p.name(inc.failing->first) << " > "
              << p.name(inc.failing->second) << "\n";
    return kViolated;
  }
  std::cout << "incidence identity holds on " << inc.diamonds_checked << " diamonds\n";
  return kOk;
}

int cmd_report(const std::string& input, const FieldSpec& field) {
  const PosetFile file = load(input);
  const SimplicialPoset p = file.build();
  std::cout << report_json(display_name(file, input), p, local_cohomology_table(p, field));
  return kOk;
}

int cmd_classify(const std::string& input, const FieldSpec& field) {
  const PosetFile file = load(input);
  const SimplicialPoset p = file.build();
  std::cout << classification_json(display_name(file, input), classify(p, field));
  return kOk;
}

int cmd_oracle(const std::string& input, const FieldSpec& field, const cli::OracleOptions& opts) {
  const PosetFile file = load(input);
  bool all = true;
  for (const auto& check : cli::run_oracles(file, field, opts)) {
    std::cout << (check.passed ? "PASS " : "FAIL ") << check.name;
    if (!check.passed) std::cout << ": " << check.detail;
    std::cout << "\n";
    all = all && check.passed;
  }
  return all ? kOk : kViolated;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Face rings of simplicial posets: local cohomology and ring-theoretic properties"};
  app.require_subcommand(1);

  std::string input;
  std::string field_text = "rational";
  std::uint64_t seed = 1;
  cli::OracleOptions oracle_opts;
  std::string corpus_name;
  RandomPosetParams random_params;

  auto add_input = [&](CLI::App* sub) {
    sub->add_option("input", input, "Poset file (JSON), or corpus:<name>")->required();
  };
  auto add_field = [&](CLI::App* sub) {
    sub->add_option("--field", field_text, "Coefficient field: rational | gf:<p>");
  };

  auto* validate_cmd = app.add_subcommand("validate", "Check the simplicial poset axioms");
  add_input(validate_cmd);

  auto* report_cmd = app.add_subcommand("report", "f/h-vectors, cohomology of X and the K_x table");
  add_input(report_cmd);
  add_field(report_cmd);

  auto* classify_cmd = app.add_subcommand("classify", "Depth, CM, Buchsbaum, Gorenstein(*), Serre");
  add_input(classify_cmd);
  add_field(classify_cmd);

  auto* oracle_cmd = app.add_subcommand("oracle", "Run the cross-checks on one poset");
  add_input(oracle_cmd);
  add_field(oracle_cmd);
  oracle_cmd->add_option("--seed", oracle_opts.seed, "Seed for the randomized checks");
  oracle_cmd->add_option("--products", oracle_opts.products, "Random products to straighten");
  oracle_cmd->add_option("--complexes", oracle_opts.complexes, "Random complexes for DD");

  auto* corpus_cmd = app.add_subcommand("corpus", "The built-in examples");
  corpus_cmd->require_subcommand(1);
  auto* list_cmd = corpus_cmd->add_subcommand("list", "List the built-in names");
  auto* emit_cmd = corpus_cmd->add_subcommand("emit", "Print a built-in poset as a poset file");
  emit_cmd->add_option("name", corpus_name, "Corpus name, e.g. boolean:3 or cone:digon")->required();

  auto* random_cmd = app.add_subcommand("random", "Print a random simplicial poset");
  random_cmd->add_option("--seed", seed, "Seed");
  random_cmd->add_option("--max-vertices", random_params.max_vertices, "At most 8 is sensible")
      ->check(CLI::Range(1u, 16u));
  random_cmd->add_option("--max-facets", random_params.max_facets)->check(CLI::Range(1u, 64u));
  random_cmd->add_option("--max-doublings", random_params.max_doublings);

  CLI11_PARSE(app, argc, argv);

  try {
    FieldSpec field = FieldSpec::parse(field_text);
    if (*validate_cmd) return cmd_validate(input);
    if (*report_cmd) return cmd_report(input, field);
    if (*classify_cmd) return cmd_classify(input, field);
    if (*oracle_cmd) return cmd_oracle(input, field, oracle_opts);
    if (*list_cmd) {
      for (const auto& name : corpus_names()) std::cout << name << "\n";
      return kOk;
    }
    if (*emit_cmd) {
      std::cout << emit_poset_file(corpus_file(corpus_name));
      return kOk;
    }
    if (*random_cmd) {
      std::cout << emit_poset_file(random_simplicial_poset(seed, random_params));
      return kOk;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.is_input_error() ? kInvalid : kViolated;
  }
  return kOk;
}
