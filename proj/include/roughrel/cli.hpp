#ifndef ROUGHREL_CLI_HPP
#define ROUGHREL_CLI_HPP

#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "roughrel/claims.hpp"
#include "roughrel/relation_io.hpp"

namespace roughrel::cli {

namespace detail {

inline Relation load_relation(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return io::parse_relation(buffer.str());
}

// Comma-separated labels; the empty string is the empty set.
inline Subset parse_label_set(const Relation& r, const std::string& csv) {
  Bitset bits(r.size());
  std::size_t start = 0;
  while (start <= csv.size() && !csv.empty()) {
    std::size_t comma = csv.find(',', start);
    std::string label = comma == std::string::npos ? csv.substr(start)
                                                   : csv.substr(start, comma - start);
    auto idx = r.universe()->index_of(label);
    if (!idx) throw std::runtime_error("unknown label in --set: '" + label + "'");
    bits.set(*idx);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return Subset(r.universe(), std::move(bits));
}

inline std::string subset_text(const Subset& s) {
  std::string out = "{";
  bool first = true;
  for (const std::string& label : s.member_labels()) {
    if (!first) out += ",";
    out += label;
    first = false;
  }
  out += "}";
  return out;
}

inline Relation apply_closure(const std::string& kind, const Relation& r) {
  if (kind == "r") return reflexive_closure(r);
  if (kind == "s") return symmetric_closure(r);
  if (kind == "t") return transitive_closure(r);
  if (kind == "e") return equivalence_closure(r);
  if (kind == "ts") return ts_closure(r);
  if (kind == "rst") return rst_closure(r);
  throw std::runtime_error("unknown closure kind: " + kind);
}

inline std::size_t powerset_cap_from_env() {
  const char* env = std::getenv("ROUGHREL_MAX_POWERSET");
  if (!env) return kDefaultPowersetCap;
  char* end = nullptr;
  unsigned long value = std::strtoul(env, &end, 10);
  if (end == env || *end != '\0')
    throw std::runtime_error("invalid ROUGHREL_MAX_POWERSET value: " + std::string(env));
  return static_cast<std::size_t>(value);
}

}  // namespace detail

// Entry point shared by the binary and the tests; `args` excludes the
// program name. All output is deterministic given the inputs.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"finite binary relation toolkit: closures, rough approximations, "
               "definable set families"};
  app.name("roughrel");
  app.fallthrough(true);
  app.require_subcommand(1);

  bool json_out = false;
  app.add_flag("--json", json_out, "emit JSON instead of text");
  std::size_t max_powerset = 0;  // resolved after parse: flag, else env, else default
  auto* cap_opt =
      app.add_option("--max-powerset", max_powerset, "cap for naive powerset scans");

  std::string props_file;
  auto* props_cmd = app.add_subcommand("props", "report basic properties of a relation");
  props_cmd->add_option("file", props_file, "relation file")->required();

  std::string closure_kind, closure_file;
  auto* closure_cmd = app.add_subcommand("closure", "compute a closure of a relation");
  closure_cmd->add_option("--kind", closure_kind, "closure kind")
      ->required()
      ->check(CLI::IsMember({"r", "s", "t", "e", "ts", "rst"}));
  closure_cmd->add_option("file", closure_file, "relation file")->required();

  bool approx_lower = false, approx_upper = false;
  std::string approx_set, approx_file;
  auto* approx_cmd = app.add_subcommand("approx", "lower or upper approximation of a set");
  approx_cmd->add_flag("--lower", approx_lower, "lower approximation");
  approx_cmd->add_flag("--upper", approx_upper, "upper approximation");
  approx_cmd->add_option("--set", approx_set, "comma-separated labels")->required();
  approx_cmd->add_option("file", approx_file, "relation file")->required();

  bool neigh_succ = false, neigh_pred = false, neigh_v = false;
  std::string neigh_set, neigh_file;
  auto* neigh_cmd = app.add_subcommand("neigh", "bulk neighborhood of a set");
  neigh_cmd->add_flag("--succ", neigh_succ, "successor neighborhood");
  neigh_cmd->add_flag("--pred", neigh_pred, "predecessor neighborhood");
  neigh_cmd->add_flag("--v", neigh_v, "successor and predecessor neighborhood");
  neigh_cmd->add_option("--set", neigh_set, "comma-separated labels")->required();
  neigh_cmd->add_option("file", neigh_file, "relation file")->required();

  bool def_inner = false, def_outer = false, def_both = false;
  std::string def_method = "naive", def_file;
  auto* def_cmd = app.add_subcommand("definable", "enumerate definable set families");
  def_cmd->add_flag("--inner", def_inner, "inner definable sets");
  def_cmd->add_flag("--outer", def_outer, "outer definable sets");
  def_cmd->add_flag("--both", def_both, "definable sets");
  def_cmd->add_option("--method", def_method, "naive or fast")
      ->check(CLI::IsMember({"naive", "fast"}));
  def_cmd->add_option("file", def_file, "relation file")->required();

  std::string eq_file1, eq_file2;
  auto* eq_cmd =
      app.add_subcommand("check-equal", "do two relations induce the same definable family");
  eq_cmd->add_option("file1", eq_file1, "first relation file")->required();
  eq_cmd->add_option("file2", eq_file2, "second relation file")->required();

  std::string classes_file;
  auto* classes_cmd =
      app.add_subcommand("classes", "equivalence classes of an equivalence relation");
  classes_cmd->add_option("file", classes_file, "relation file")->required();

  std::string verify_claim_id, verify_mode = "exhaustive";
  std::size_t verify_n = 3;
  std::uint64_t verify_trials = 1000, verify_seed = 0;
  bool verify_list = false;
  auto* verify_cmd = app.add_subcommand("verify", "sweep one registered claim");
  verify_cmd->add_option("--claim", verify_claim_id, "claim id");
  verify_cmd->add_option("--n", verify_n, "universe size");
  verify_cmd->add_option("--mode", verify_mode, "exhaustive or random")
      ->check(CLI::IsMember({"exhaustive", "random"}));
  verify_cmd->add_option("--trials", verify_trials, "instances in random mode");
  verify_cmd->add_option("--seed", verify_seed, "seed in random mode");
  verify_cmd->add_flag("--list", verify_list, "list registered claims");

  std::string dot_kind, dot_file;
  auto* dot_cmd = app.add_subcommand("dot", "emit Graphviz text for a relation or closure");
  dot_cmd->add_option("--kind", dot_kind, "closure kind to render")
      ->check(CLI::IsMember({"r", "s", "t", "e", "ts", "rst"}));
  dot_cmd->add_option("file", dot_file, "relation file")->required();

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (!*cap_opt) max_powerset = detail::powerset_cap_from_env();

    if (*props_cmd) {
      const Relation r = detail::load_relation(props_file);
      const bool refl = is_reflexive(r), symm = is_symmetric(r), trans = is_transitive(r),
                 serial = is_serial(r), equiv = refl && symm && trans;
      if (json_out) {
        io::json j;
        j["reflexive"] = refl;
        j["symmetric"] = symm;
        j["transitive"] = trans;
        j["serial"] = serial;
        j["equivalence"] = equiv;
        out << j.dump(2) << '\n';
      } else {
        out << "reflexive=" << (refl ? "true" : "false") << '\n'
            << "symmetric=" << (symm ? "true" : "false") << '\n'
            << "transitive=" << (trans ? "true" : "false") << '\n'
            << "serial=" << (serial ? "true" : "false") << '\n'
            << "equivalence=" << (equiv ? "true" : "false") << '\n';
      }
    } else if (*closure_cmd) {
      const Relation result =
          detail::apply_closure(closure_kind, detail::load_relation(closure_file));
      if (json_out)
        out << io::relation_to_json(result).dump(2) << '\n';
      else
        out << io::serialize_relation(result);
    } else if (*approx_cmd) {
      if (approx_lower == approx_upper)
        throw std::runtime_error("approx needs exactly one of --lower or --upper");
      const Relation r = detail::load_relation(approx_file);
      const Subset x = detail::parse_label_set(r, approx_set);
      const Subset result = approx_lower ? lower_approx(r, x) : upper_approx(r, x);
      if (json_out) {
        io::json j;
        j["set"] = io::subset_to_json(result);
        out << j.dump(2) << '\n';
      } else {
        out << detail::subset_text(result) << '\n';
      }
    } else if (*neigh_cmd) {
      if (neigh_succ + neigh_pred + neigh_v != 1)
        throw std::runtime_error("neigh needs exactly one of --succ, --pred or --v");
      const Relation r = detail::load_relation(neigh_file);
      const Subset x = detail::parse_label_set(r, neigh_set);
      const Subset result = neigh_succ ? succ_set(r, x)
                                       : (neigh_pred ? pred_set(r, x) : v_set(r, x));
      if (json_out) {
        io::json j;
        j["set"] = io::subset_to_json(result);
        out << j.dump(2) << '\n';
      } else {
        out << detail::subset_text(result) << '\n';
      }
    } else if (*def_cmd) {
      if (def_inner + def_outer + def_both != 1)
        throw std::runtime_error("definable needs exactly one of --inner, --outer or --both");
      const Relation r = detail::load_relation(def_file);
      SetFamily family(r.universe());
      if (def_method == "fast") {
        if (!def_both)
          throw std::runtime_error("the fast method computes only the definable family");
        family = definable_family_fast(r);
      } else if (def_inner) {
        family = inner_family_naive(r, max_powerset);
      } else if (def_outer) {
        family = outer_family_naive(r, max_powerset);
      } else {
        family = definable_family_naive(r, max_powerset);
      }
      if (json_out) {
        out << io::family_to_json(family).dump(2) << '\n';
      } else {
        for (const Subset& s : family) out << detail::subset_text(s) << '\n';
      }
    } else if (*eq_cmd) {
      const Relation r1 = detail::load_relation(eq_file1);
      const Relation r2 = detail::load_relation(eq_file2);
      const EquivalenceReport report = same_definable_family(r1, r2);
      if (json_out) {
        out << io::equivalence_report_to_json(report).dump(2) << '\n';
      } else {
        out << "equal=" << (report.equal ? "true" : "false") << '\n'
            << "reason=" << to_string(report.reason) << '\n';
        if (report.witness) out << "witness=" << detail::subset_text(*report.witness) << '\n';
      }
    } else if (*classes_cmd) {
      const Partition p = equivalence_classes(detail::load_relation(classes_file));
      if (json_out) {
        out << io::partition_to_json(p).dump(2) << '\n';
      } else {
        for (const Subset& block : p.blocks()) out << detail::subset_text(block) << '\n';
      }
    } else if (*verify_cmd) {
      if (verify_list) {
        const auto& registry = oracle::standard_registry();
        if (json_out) {
          io::json arr = io::json::array();
          for (const std::string& id : registry.ids()) {
            io::json j;
            j["id"] = id;
            j["summary"] = registry.find(id)->summary;
            arr.push_back(std::move(j));
          }
          out << arr.dump(2) << '\n';
        } else {
          for (const std::string& id : registry.ids())
            out << id << ": " << registry.find(id)->summary << '\n';
        }
      } else {
        if (verify_claim_id.empty())
          throw std::runtime_error("verify requires --claim (or --list)");
        oracle::SweepParams params;
        params.claim_id = verify_claim_id;
        params.n = verify_n;
        params.mode = verify_mode == "random" ? oracle::SweepMode::Random
                                              : oracle::SweepMode::Exhaustive;
        params.trials = verify_trials;
        params.seed = verify_seed;
        const oracle::SweepReport report = oracle::verify_claim(params);
        if (json_out) {
          out << io::sweep_report_to_json(report).dump(2) << '\n';
        } else {
          out << "claim: " << report.claim_id << '\n'
              << "mode: " << oracle::to_string(report.mode) << '\n'
              << "universe_size: " << report.universe_size << '\n'
              << "trials: " << report.trials << '\n'
              << "failures: " << report.failures.size() << '\n';
          for (const oracle::Failure& f : report.failures)
            out << "failure: " << io::failure_to_json(f).dump() << '\n';
          out << "elapsed_ms: " << report.elapsed.count() << '\n'
              << "result: " << (report.passed() ? "PASS" : "FAIL") << '\n';
        }
      }
    } else if (*dot_cmd) {
      const Relation r = detail::load_relation(dot_file);
      const Relation target = dot_kind.empty() ? r : detail::apply_closure(dot_kind, r);
      out << io::dot_graph(target, connected_components(r));
    }
    return 0;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace roughrel::cli

#endif  // ROUGHREL_CLI_HPP
