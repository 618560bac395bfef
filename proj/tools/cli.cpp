#include "cli.hpp"

#include <cstdlib>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "crosscheck.hpp"
#include "simpair/simpair.hpp"

namespace simpair::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

/// Thrown when a decision disagrees with its oracle or a witness fails verification.
struct InternalDisagreement : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::optional<std::uint64_t> env_cap() {
  const char* v = std::getenv("SIMPAIR_CAP");
  if (!v || !*v) return std::nullopt;
  try {
    std::size_t used = 0;
    auto cap = std::stoull(v, &used);
    if (used != std::string(v).size()) throw std::invalid_argument("trailing");
    return cap;
  } catch (const std::exception&) {
    throw Error(ErrorCode::InvalidArgument, std::string("SIMPAIR_CAP is not an integer: '") + v + "'");
  }
}

FinPair load_pair(const std::string& path) { return parse_pair(read_file(path)); }

void emit(const std::string& text, const std::string& out_path, std::ostream& out) {
  if (out_path.empty())
    out << text << '\n';
  else
    write_file(out_path, text);
}

int cmd_invariants(const std::string& path, bool json, std::ostream& out) {
  auto p = load_pair(path);
  auto lit = [](const auto& s) { return print_shape_literal(s); };
  if (json) {
    ordered_json j;
    j["n"] = p.size();
    j["E"] = {{"fs", lit(fs_of(p.E()))}, {"cs", lit(cs_of(p.E()))}};
    j["F"] = {{"fs", lit(fs_of(p.F()))}, {"cs", lit(cs_of(p.F()))}};
    auto classes = ordered_json::array();
    for (std::size_t c = 0; c < p.F().num_classes(); ++c) {
      ordered_json cls;
      cls["elements"] = p.F().block(c);
      cls["lfs"] = lit(lfs_of_class(p, c));
      cls["lcs"] = lit(lcs_of_class(p, c));
      classes.push_back(cls);
    }
    j["classes"] = classes;
    j["crs"] = lit(crs_of(p));
    auto gfs = ordered_json::array();
    for (const auto& [shape, count] : gfs_of(p)) {
      ordered_json entry;
      entry["shape"] = lit(shape);
      entry["count"] = count.count();
      gfs.push_back(entry);
    }
    j["gfs"] = gfs;
    out << j.dump() << '\n';
    return kHolds;
  }
  out << "n=" << p.size() << '\n';
  out << "fs(E)=" << lit(fs_of(p.E())) << '\n';
  out << "cs(E)=" << lit(cs_of(p.E())) << '\n';
  out << "fs(F)=" << lit(fs_of(p.F())) << '\n';
  out << "cs(F)=" << lit(cs_of(p.F())) << '\n';
  for (std::size_t c = 0; c < p.F().num_classes(); ++c) {
    out << "class " << c << " {";
    const auto& b = p.F().block(c);
    for (std::size_t i = 0; i < b.size(); ++i) out << (i ? "," : "") << b[i];
    out << "}: lfs=" << lit(lfs_of_class(p, c)) << " lcs=" << lit(lcs_of_class(p, c)) << '\n';
  }
  out << "crs=" << lit(crs_of(p)) << '\n';
  out << "gfs=" << print_gfs(gfs_of(p)) << '\n';
  return kHolds;
}

struct DecideArgs {
  std::string relation, file_a, file_b, witness_path;
  bool oracle = false;
  bool json = false;
  std::optional<std::uint64_t> cap;
};

int cmd_decide(const DecideArgs& args, std::ostream& out) {
  auto a = load_pair(args.file_a);
  auto b = load_pair(args.file_b);

  Decision d;
  std::function<Decision()> brute;
  const char* name = "";
  if (args.relation == "red") {
    name = "reduction";
    d = decide_reduction(a, b);
    brute = [&] { return oracle::brute_reduction(a, b, args.cap.value_or(oracle::kDefaultCap)); };
  } else if (args.relation == "emb") {
    name = "embedding";
    d = decide_embedding(a, b);
    brute = [&] { return oracle::brute_embedding(a, b, args.cap.value_or(oracle::kDefaultCap)); };
  } else {
    name = "isomorphism";
    d = decide_isomorphism(a, b);
    brute = [&] { return oracle::brute_isomorphism(a, b, args.cap.value_or(oracle::kDefaultIsoCap)); };
  }

  if (d.holds && (!d.witness || !verify_witness(a, b, *d.witness).ok))
    throw InternalDisagreement(std::string(name) + " witness failed verification");

  std::optional<bool> oracle_holds;
  if (args.oracle) {
    auto o = brute();
    oracle_holds = o.holds;
    if (o.holds != d.holds)
      throw InternalDisagreement(std::string(name) + ": decision says " + (d.holds ? "holds" : "does not hold") +
                                 ", oracle disagrees");
  }

  if (d.holds && !args.witness_path.empty()) write_file(args.witness_path, serialize_witness(*d.witness));

  if (args.json) {
    ordered_json j;
    j["relation"] = name;
    j["holds"] = d.holds;
    if (oracle_holds) j["oracle"] = *oracle_holds;
    if (d.witness) j["witness"] = ordered_json::parse(serialize_witness(*d.witness));
    out << j.dump() << '\n';
  } else {
    out << name << ": " << (d.holds ? "holds" : "does not hold") << '\n';
    if (oracle_holds) out << "oracle: agrees\n";
  }
  return d.holds ? kHolds : kDoesNotHold;
}

int cmd_verify(const std::string& fa, const std::string& fb, const std::string& fw, bool json, std::ostream& out) {
  auto a = load_pair(fa);
  auto b = load_pair(fb);
  auto w = parse_witness(read_file(fw));
  auto v = verify_witness(a, b, w);
  if (json) {
    ordered_json j;
    j["ok"] = v.ok;
    auto list = ordered_json::array();
    for (const auto& viol : v.violations) list.push_back(viol.str());
    j["violations"] = list;
    out << j.dump() << '\n';
  } else {
    out << (v.ok ? "ok" : "invalid") << '\n';
    for (const auto& viol : v.violations) out << "  " << viol.str() << '\n';
  }
  return v.ok ? kHolds : kDoesNotHold;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Decide simultaneous reducibility, embeddability and isomorphism of nested finite equivalence relations",
               "simpair"};
  app.require_subcommand(1);

  bool json = false;
  std::optional<std::uint64_t> cap_flag;
  std::string out_path;

  std::string invariants_file;
  auto* inv = app.add_subcommand("invariants", "Print shape invariants of a pair file");
  inv->add_option("file", invariants_file, "Pair file")->required();
  inv->add_flag("--json", json, "JSON output");

  DecideArgs dec;
  auto* decide = app.add_subcommand("decide", "Decide red (<=), emb (embedding) or iso (isomorphism)");
  decide->add_option("relation", dec.relation, "red | emb | iso")->required()->check(CLI::IsMember({"red", "emb", "iso"}));
  decide->add_option("a", dec.file_a, "Source pair file")->required();
  decide->add_option("b", dec.file_b, "Target pair file")->required();
  decide->add_option("--witness", dec.witness_path, "Write a verified witness here when the relation holds");
  decide->add_flag("--oracle", dec.oracle, "Also run the brute-force oracle; exit 3 on disagreement");
  decide->add_option("--cap", cap_flag, "Oracle search-space cap");
  decide->add_flag("--json", json, "JSON output");

  std::string verify_a, verify_b, verify_w;
  auto* verify = app.add_subcommand("verify", "Check a witness file against two pair files");
  verify->add_option("a", verify_a, "Source pair file")->required();
  verify->add_option("b", verify_b, "Target pair file")->required();
  verify->add_option("witness", verify_w, "Witness file")->required();
  verify->add_flag("--json", json, "JSON output");

  auto* gen = app.add_subcommand("gen", "Generate a pair file");
  gen->require_subcommand(1);
  std::vector<std::string> gen_shapes;
  auto* gen_shape = gen->add_subcommand("shape", "Pair realizing the given local fine shapes, one F-class each");
  gen_shape->add_option("shapes", gen_shapes, "Shape literals such as \"<2|0;0>\"")->required();
  gen_shape->add_option("-o", out_path, "Output file (default stdout)");
  std::size_t orbit_degree = 0;
  std::vector<std::string> orbit_sub, orbit_full;
  auto* gen_orbit = gen->add_subcommand("orbit", "Orbit pair of a permutation group and a subgroup");
  gen_orbit->add_option("degree", orbit_degree, "Number of points")->required();
  gen_orbit->add_option("gens", orbit_sub, "Subgroup generators in cycle notation");
  gen_orbit->add_option("--full", orbit_full, "Additional generators of the full group (repeatable)");
  gen_orbit->add_option("-o", out_path, "Output file (default stdout)");
  std::uint64_t random_seed = 1;
  std::size_t random_n = 0;
  std::string random_profile = "uniform";
  auto* gen_random = gen->add_subcommand("random", "Reproducible random pair");
  gen_random->add_option("--seed", random_seed, "Seed");
  gen_random->add_option("--n", random_n, "Ground-set size")->required();
  gen_random->add_option("--profile", random_profile, "uniform | shape")->check(CLI::IsMember({"uniform", "shape"}));
  gen_random->add_option("-o", out_path, "Output file (default stdout)");

  CrossCheckOptions cc;
  auto* cross = app.add_subcommand("crosscheck", "Compare every decision procedure against the brute-force oracles");
  cross->add_option("--nmax", cc.n_max, "Exhaustive sweep over all pairs with at most this many points");
  cross->add_option("--seed", cc.seed, "Seed for the random part");
  cross->add_option("--count", cc.count, "Number of random instances");
  cross->add_option("--rmax", cc.random_max, "Largest random ground set");
  cross->add_option("--cap", cap_flag, "Oracle search-space cap");
  cross->add_option("-o", cc.reproducer_dir, "Directory for reproducer files");

  auto* shape = app.add_subcommand("shape", "Shape literal utilities");
  shape->require_subcommand(1);
  std::string lit_a, lit_b;
  auto* shape_parse = shape->add_subcommand("parse", "Print the canonical form of a literal");
  shape_parse->add_option("literal", lit_a)->required();
  auto* shape_leq_cmd = shape->add_subcommand("leq", "Pointwise comparison; exit 0 iff a <= b");
  shape_leq_cmd->add_option("a", lit_a)->required();
  shape_leq_cmd->add_option("b", lit_b)->required();
  auto* shape_sc = shape->add_subcommand("sc", "Exit 0 iff the literal is a realizable local coarse shape");
  shape_sc->add_option("literal", lit_a)->required();
  auto* shape_min = shape->add_subcommand("minsize", "Least size of a class with this local coarse shape");
  shape_min->add_option("literal", lit_a)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kHolds;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kHolds;
  } catch (const CLI::ParseError& e) {
    err << "simpair: " << e.what() << '\n';
    return kInputError;
  }

  try {
    auto cap = cap_flag ? cap_flag : env_cap();
    if (inv->parsed()) return cmd_invariants(invariants_file, json, out);
    if (decide->parsed()) {
      dec.json = json;
      dec.cap = cap;
      return cmd_decide(dec, out);
    }
    if (verify->parsed()) return cmd_verify(verify_a, verify_b, verify_w, json, out);
    if (gen_shape->parsed()) {
      std::vector<LocalFineShape> g;
      for (const auto& s : gen_shapes) g.emplace_back(parse_shape_literal(s));
      emit(serialize_pair(build_shape_pair(g)), out_path, out);
      return kHolds;
    }
    if (gen_orbit->parsed()) {
      std::vector<Permutation> sub, full;
      for (const auto& s : orbit_sub) sub.push_back(parse_cycles(s, orbit_degree));
      full = sub;
      for (const auto& s : orbit_full) full.push_back(parse_cycles(s, orbit_degree));
      emit(serialize_pair(orbit_pair(orbit_degree, sub, full)), out_path, out);
      return kHolds;
    }
    if (gen_random->parsed()) {
      auto profile = random_profile == "shape" ? RandomProfile::ShapeTargeted : RandomProfile::UniformRefinement;
      emit(serialize_pair(random_pair(random_seed, random_n, profile)), out_path, out);
      return kHolds;
    }
    if (cross->parsed()) {
      cc.cap = cap;
      auto report = cross_check(cc);
      report.print(out);
      if (!report.clean()) {
        err << "simpair: disagreements found; reproducers written to " << cc.reproducer_dir << '\n';
        return kDisagreement;
      }
      return kHolds;
    }
    if (shape_parse->parsed()) {
      out << print_shape_literal(parse_shape_literal(lit_a)) << '\n';
      return kHolds;
    }
    if (shape_leq_cmd->parsed()) {
      bool leq = shape_leq(parse_shape_literal(lit_a), parse_shape_literal(lit_b));
      out << (leq ? "true" : "false") << '\n';
      return leq ? kHolds : kDoesNotHold;
    }
    if (shape_sc->parsed()) {
      bool member = sc_member(parse_shape_literal(lit_a));
      out << (member ? "true" : "false") << '\n';
      return member ? kHolds : kDoesNotHold;
    }
    if (shape_min->parsed()) {
      out << min_size(parse_shape_literal(lit_a)).str() << '\n';
      return kHolds;
    }
  } catch (const CapExceeded& e) {
    err << "simpair: " << e.what() << '\n';
    return kCapExceeded;
  } catch (const InternalDisagreement& e) {
    err << "simpair: internal disagreement: " << e.what() << '\n';
    return kDisagreement;
  } catch (const Error& e) {
    err << "simpair: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

}  // namespace simpair::cli
