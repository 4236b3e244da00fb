// prodquot: classification and homology of unmixed product-quotient surfaces.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "prodquot/errors.hpp"
#include "prodquot/report.hpp"

using namespace prodquot;

namespace {

std::size_t cap_from_env() {
  const char* v = std::getenv("PRODQUOT_CAP");
  if (!v || !*v) return kDefaultMaxOrder;
  try {
    std::size_t pos = 0;
    const auto n = std::stoul(v, &pos);
    if (pos != std::string(v).size() || n == 0) throw std::invalid_argument(v);
    return n;
  } catch (const std::exception&) {
    throw MalformedInput(std::string("PRODQUOT_CAP must be a positive integer, got '") + v + "'");
  }
}

Json read_json(const std::string& path) {
  std::stringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw MalformedInput("cannot open " + path);
    buf << in.rdbuf();
  }
  try {
    return Json::parse(buf.str());
  } catch (const Json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Classify unmixed product-quotient surfaces with pg = q = 0 and compute H1(S, Z)"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", PRODQUOT_VERSION);

  std::string format = "md";
  bool timing = false;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"md", "json"}))->capture_default_str();
  app.add_flag("--timing", timing, "Include wall time in the report");

  ClassifyRequest creq;
  bool abelian_only = true;
  std::string group;
  auto* classify = app.add_subcommand("classify", "Classify structures for abelian groups up to an order, or for one group");
  classify->add_option("--max-order", creq.max_order, "Largest group order in the abelian sweep")->capture_default_str();
  classify->add_flag("--abelian-only,!--all-groups", abelian_only, "Restrict the sweep to abelian groups");
  classify->add_option("--group", group, "Classify a single group given as ab:d1,d2,... or perm:n:gens");
  classify->add_flag("--swap-factors", creq.swap_factors,
                     "Also identify a structure with its factor swap when the signatures agree");
  classify->add_option("--jobs,-j", creq.jobs, "Worker threads")->check(CLI::PositiveNumber)->capture_default_str();

  std::optional<int> example_id;
  auto* verify = app.add_subcommand("verify-examples", "Check the built-in non-abelian example structures");
  verify->add_option("--id", example_id, "Check only this example (1-5)");

  std::string in_path;
  auto* homology = app.add_subcommand("homology", "Compute H1(S, Z) and numerical invariants for one structure");
  homology->add_option("--in", in_path, "Structure JSON file, or - for stdin")->required();

  std::string sig_group;
  auto* sigs = app.add_subcommand("signatures", "List admissible signatures and signature pairs for a group");
  sigs->add_option("--group", sig_group, "Group spec")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : static_cast<int>(ExitCode::usage);
  }

  try {
    Report rep;
    if (*classify) {
      creq.cap = cap_from_env();
      if (!group.empty()) {
        creq.group_spec = group;
      } else if (!abelian_only) {
        throw UnsupportedHypothesis("the sweep covers abelian groups only; use --group for a single non-abelian group");
      }
      rep = cmd_classify(creq);
    } else if (*verify) {
      rep = cmd_verify_examples(example_id);
    } else if (*homology) {
      rep = cmd_homology(read_json(in_path));
    } else {
      rep = cmd_signatures(sig_group);
    }
    if (!timing) rep.seconds.reset();
    if (format == "json") {
      std::cout << rep.to_json().dump(2) << "\n";
    } else {
      std::cout << rep.markdown;
      if (rep.seconds) std::cout << "\n_" << *rep.seconds << " s_\n";
    }
    return static_cast<int>(rep.exit_code);
  } catch (const Error& e) {
    std::cerr << "prodquot: " << e.what() << "\n";
    return static_cast<int>(ExitCode::usage);
  } catch (const std::exception& e) {
    std::cerr << "prodquot: internal error: " << e.what() << "\n";
    return static_cast<int>(ExitCode::usage);
  }
}
