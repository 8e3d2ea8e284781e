// polyface: 2-face census of order and chain polytopes.
//
// Exit codes: 0 clean, 1 property violation, 2 usage or input error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include "polyface/cli_io.hpp"
#include "polyface/poset_gen.hpp"

using namespace polyface;

namespace {

constexpr int kClean = 0;
constexpr int kViolation = 1;
constexpr int kUsage = 2;

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<Polytope> polytopes(const std::string& which) {
  if (which == "both") return {Polytope::Order, Polytope::Chain};
  return {polytope_from_string(which)};
}

json one_or_many(std::vector<json> items) {
  if (items.size() == 1) return std::move(items.front());
  return json(std::move(items));
}

bool same_counts(const json& a, const json& b) {
  for (const char* k : {"f0", "f1", "f2_tri", "f2_sq"}) {
    if (a[k] != b[k]) return false;
  }
  return true;
}

// Mutated census used by `verify --inject-fault`: one extra O-square
// wherever there is at least one.
FVector2 faulty_census(const Poset& p, Polytope kind) {
  FVector2 f = f_vector2(p, kind);
  if (kind == Polytope::Order && f.f2_sq > 0) ++f.f2_sq;
  return f;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"2-face census of order and chain polytopes of finite posets"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "Emit posets as JSON");
  gen->require_subcommand(1);
  std::string gen_name;
  std::optional<int> gen_k;
  auto* gen_named = gen->add_subcommand("named", "chain K, antichain K, v, lambda, x5, diamond");
  gen_named->add_option("name", gen_name)->required();
  gen_named->add_option("k", gen_k, "size for chain/antichain");
  int rnd_n = 0;
  double rnd_density = 0.5;
  std::uint64_t rnd_seed = 0;
  auto* gen_random = gen->add_subcommand("random", "Random poset from a seeded relation draw");
  gen_random->add_option("--n", rnd_n)->required()->check(CLI::Range(0, ElementSet::kMaxElements));
  gen_random->add_option("--density", rnd_density)->check(CLI::Range(0.0, 1.0));
  gen_random->add_option("--seed", rnd_seed);
  int all_n = 0;
  auto* gen_all = gen->add_subcommand("all", "All posets on n elements up to isomorphism, one per line");
  gen_all->add_option("--n", all_n)->required();

  // census / oracle
  std::string input;
  std::string which = "both";
  bool with_oracle = false;
  auto* census = app.add_subcommand("census", "Combinatorial f-vector and 2-face lists");
  census->add_option("poset", input, "poset JSON file (default: stdin)");
  census->add_option("--polytope", which)->check(CLI::IsMember({"O", "C", "both"}));
  census->add_flag("--oracle", with_oracle, "cross-check against the geometric oracle");
  auto* oracle_cmd = app.add_subcommand("oracle", "Faces from the facet inequalities");
  oracle_cmd->add_option("poset", input, "poset JSON file (default: stdin)");
  oracle_cmd->add_option("--polytope", which)->check(CLI::IsMember({"O", "C", "both"}));

  // verify
  VerifyOptions vopt;
  bool inject_fault = false;
  auto* verify = app.add_subcommand("verify", "Sweep all small posets and check every property");
  verify->add_option("--min-n", vopt.min_n)->check(CLI::NonNegativeNumber);
  verify->add_option("--max-n", vopt.max_n, "largest poset size (POLYFACE_MAX_N caps it)");
  verify->add_option("--oracle-max-n", vopt.oracle_max_n, "largest size checked against the oracle");
  verify->add_option("--facet-max-n", vopt.facet_max_n);
  verify->add_option("--jobs", vopt.jobs)->check(CLI::PositiveNumber);
  verify->add_option("--seed", vopt.seed, "seed for sampled recursion instances");
  verify->add_flag("--inject-fault", inject_fault, "corrupt the O-square count to test the harness");

  auto* bijection = app.add_subcommand("bijection", "Match squares of O(P) and C(P)");
  bijection->add_option("poset", input, "poset JSON file (default: stdin)");
  auto* dot = app.add_subcommand("dot", "Hasse diagram in DOT");
  dot->add_option("poset", input, "poset JSON file (default: stdin)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kClean : kUsage;
  }

  try {
    if (gen->parsed()) {
      if (gen_named->parsed()) {
        std::cout << poset_to_json(named_poset(gen_name, gen_k)).dump() << "\n";
      } else if (gen_random->parsed()) {
        std::cout << poset_to_json(random_poset(rnd_n, rnd_density, rnd_seed)).dump() << "\n";
      } else {
        for (const auto& p : all_posets(all_n)) std::cout << poset_to_json(p).dump() << "\n";
      }
      return kClean;
    }

    if (census->parsed()) {
      const Poset p = parse_poset(read_input(input));
      std::vector<json> reports, checks;
      bool match = true;
      for (Polytope kind : polytopes(which)) {
        reports.push_back(census_report(p, kind));
        if (with_oracle) {
          checks.push_back(oracle_report(p, kind));
          match = match && same_counts(reports.back(), checks.back());
        }
      }
      if (!with_oracle) {
        std::cout << one_or_many(std::move(reports)).dump(2) << "\n";
        return kClean;
      }
      json out{{"census", one_or_many(std::move(reports))},
               {"oracle", one_or_many(std::move(checks))},
               {"match", match}};
      std::cout << out.dump(2) << "\n";
      if (!match) std::cerr << "census and oracle disagree\n";
      return match ? kClean : kViolation;
    }

    if (oracle_cmd->parsed()) {
      const Poset p = parse_poset(read_input(input));
      std::vector<json> reports;
      for (Polytope kind : polytopes(which)) reports.push_back(oracle_report(p, kind));
      std::cout << one_or_many(std::move(reports)).dump(2) << "\n";
      return kClean;
    }

    if (verify->parsed()) {
      if (vopt.min_n > vopt.max_n) throw InputError("--min-n exceeds --max-n");
      if (inject_fault) vopt.census = faulty_census;
      const VerificationReport r = run_verification(vopt);
      std::cout << verification_to_json(r).dump(2) << "\n";
      for (const auto& c : r.counterexamples) {
        std::cerr << "counterexample [" << c.property << "] " << poset_to_json(c.poset).dump() << ": "
                  << c.details << "\n";
      }
      return r.clean() ? kClean : kViolation;
    }

    if (bijection->parsed()) {
      const Poset p = parse_poset(read_input(input));
      const BijectionReport r = verify_bijection(p);
      std::cout << bijection_report(p, r).dump(2) << "\n";
      return r.clean() ? kClean : kViolation;
    }

    if (dot->parsed()) {
      std::cout << to_dot(parse_poset(read_input(input)));
      return kClean;
    }
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const PosetError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const oracle::OracleError& e) {
    std::cerr << "oracle: " << e.what() << "\n";
    return kViolation;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
