// knot: exact group-cohomology engine for the Hasse norm principle in
// prime-squared degree. Subcommands: zoo, sha, h1pic, adequacy, verify.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "knot/cohom.hpp"
#include "knot/groupzoo.hpp"
#include "knot/json_io.hpp"
#include "knot/knot.hpp"
#include "knot/verify.hpp"

namespace {

constexpr int kExitTrivial = 0;
constexpr int kExitZmodP = 10;
constexpr int kExitError = 2;

std::uint64_t order_cap() {
  if (const char* v = std::getenv("KNOT_CAP")) {
    char* end = nullptr;
    unsigned long long cap = std::strtoull(v, &end, 10);
    if (end && *end == '\0' && cap >= 1) return cap;
    throw knot::BadParameter("KNOT_CAP must be a positive integer");
  }
  return knot::kDefaultOrderCap;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text << "\n";
  } else {
    std::ofstream f(out_path);
    if (!f) throw knot::BadParameter("cannot open output file " + out_path);
    f << text << "\n";
  }
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
  }
  std::ifstream f(path);
  if (!f) throw knot::BadParameter("cannot open input file " + path);
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

knot::PermGroup zoo_group(const std::string& name, long long p, long long n,
                          const std::string& mats_arg, std::uint64_t cap,
                          std::string& canonical) {
  using namespace knot;
  // names Pn / P'n / En / Hn may carry the index inline, e.g. "P'2"
  auto parse_indexed = [&](const std::string& prefix) -> std::optional<long long> {
    if (name.rfind(prefix, 0) != 0) return std::nullopt;
    std::string rest = name.substr(prefix.size());
    if (rest.empty() || rest == "n") return n;
    return std::stoll(rest);
  };
  std::ostringstream canon;
  if (auto idx = parse_indexed("P'")) {
    canon << "{\"construction\":\"P'n\",\"p\":" << p << ",\"n\":" << *idx << "}";
    canonical = canon.str();
    return build_Pprime(*idx, p);
  }
  if (auto idx = parse_indexed("P")) {
    canon << "{\"construction\":\"Pn\",\"p\":" << p << ",\"n\":" << *idx << "}";
    canonical = canon.str();
    return build_P(*idx, p);
  }
  if (auto idx = parse_indexed("E")) {
    canon << "{\"construction\":\"En\",\"p\":" << p << ",\"n\":" << *idx << "}";
    canonical = canon.str();
    return build_E(*idx, p);
  }
  if (auto idx = parse_indexed("H")) {
    canon << "{\"construction\":\"Hn\",\"p\":" << p << ",\"n\":" << *idx << "}";
    canonical = canon.str();
    return build_H(*idx, p);
  }
  if (name == "semidirect-std" || name == "heisenberg-cover") {
    std::vector<MatGL2> mats;
    for (const auto& e : parse_mats_arg(mats_arg))
      mats.push_back(MatGL2::make(e[0], e[1], e[2], e[3], p));
    canon << "{\"construction\":\"" << name << "\",\"p\":" << p << ",\"mats\":"
          << mats_arg << "}";
    canonical = canon.str();
    if (name == "semidirect-std")
      return build_semidirect_std(p, std::move(mats), cap).group;
    return build_heisenberg_cover(p, std::move(mats), cap).total;
  }
  throw UnknownConstruction("unknown construction: " + name);
}

struct CommonFlags {
  long long p = 3;
  long long n = 1;
  std::string mats;
  std::string method = "classifier";
  int jobs = 1;
  bool fast_p_part = false;
  std::string out;
};

knot::Method parse_method(const std::string& m) {
  if (m == "classifier") return knot::Method::Classifier;
  if (m == "cohomology") return knot::Method::Cohomology;
  if (m == "both") return knot::Method::Both;
  throw knot::BadParameter("method must be classifier, cohomology or both");
}

int run_sha_like(const std::string& input_path, const CommonFlags& flags,
                 bool h1pic_mode) {
  using namespace knot;
  std::uint64_t cap = order_cap();
  InputDoc doc = parse_input_doc(read_input(input_path), cap);
  const PermGroup& g = doc.group.group;
  PermGroup h = point_stabilizer(g, doc.stabilizer_point);

  std::vector<PermGroup> dgroups;
  for (const auto& gens : doc.decomposition_generators)
    dgroups.push_back(PermGroup::close(gens, g.degree(), cap));
  DecompositionSet ds =
      DecompositionSet::admissible_closure(g, std::move(dgroups));

  Method method = flags.method == "classifier" && !doc.methods.empty()
                      ? (doc.methods.size() > 1 ? Method::Both : doc.methods[0])
                      : parse_method(flags.method);
  CohOptions opts;
  opts.fast_p_part = flags.fast_p_part;
  opts.jobs = flags.jobs;

  KnotReport rep = h1pic_mode ? decide_h1pic(g, h, method, opts)
                              : decide_hnp(g, h, ds, method, opts);
  emit(report_json(rep, doc.canonical), flags.out);
  return rep.decision == Decision::Trivial ? kExitTrivial : kExitZmodP;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact cohomology engine for the Hasse norm principle in "
               "degree p^2"};
  app.require_subcommand(1);

  CommonFlags flags;
  std::string zoo_name, input_path = "-", suite;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--p", flags.p, "prime p");
    cmd->add_option("--n", flags.n, "family index n");
    cmd->add_option("--mats", flags.mats,
                    "matrix list, e.g. [[1,1],[0,1]],[[0,-1],[1,0]]");
    cmd->add_option("--method", flags.method,
                    "classifier | cohomology | both");
    cmd->add_option("--jobs", flags.jobs, "parallel width for sweeps");
    cmd->add_flag("--fast-p-part", flags.fast_p_part,
                  "coefficient reduction modulo the p-part only");
    cmd->add_option("--out", flags.out, "write output to a file");
  };

  CLI::App* zoo = app.add_subcommand("zoo", "print a named construction");
  zoo->add_option("name", zoo_name, "Pn | P'n | En | Hn | semidirect-std | "
                                    "heisenberg-cover")
      ->required();
  add_common(zoo);

  CLI::App* sha = app.add_subcommand(
      "sha", "decide the Hasse norm principle from an input document");
  sha->add_option("input", input_path, "JSON input document (- for stdin)");
  add_common(sha);

  CLI::App* h1pic = app.add_subcommand("h1pic", "H^1(k, Pic Xbar) decision");
  h1pic->add_option("input", input_path, "JSON input document (- for stdin)");
  add_common(h1pic);

  CLI::App* adequacy =
      app.add_subcommand("adequacy", "Bartels product condition");
  adequacy->add_option("input", input_path, "JSON input document (- for stdin)");
  add_common(adequacy);

  CLI::App* verify = app.add_subcommand("verify", "run a verification sweep");
  verify->add_option("suite", suite, "p3-classification | p3-pgroups | "
                                     "oracles | drakokhrust | p5-stretch")
      ->required();
  add_common(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) ? kExitError : kExitTrivial;
  }

  try {
    if (zoo->parsed()) {
      std::string canonical;
      knot::PermGroup g =
          zoo_group(zoo_name, flags.p, flags.n, flags.mats, order_cap(),
                    canonical);
      emit(knot::zoo_json(zoo_name, g), flags.out);
      return kExitTrivial;
    }
    if (sha->parsed()) return run_sha_like(input_path, flags, false);
    if (h1pic->parsed()) return run_sha_like(input_path, flags, true);
    if (adequacy->parsed()) {
      std::uint64_t cap = order_cap();
      knot::InputDoc doc = knot::parse_input_doc(read_input(input_path), cap);
      const knot::PermGroup& g = doc.group.group;
      knot::PermGroup h = knot::point_stabilizer(g, doc.stabilizer_point);
      std::vector<knot::PermGroup> dgroups;
      for (const auto& gens : doc.decomposition_generators)
        dgroups.push_back(knot::PermGroup::close(gens, g.degree(), cap));
      knot::DecompositionSet ds =
          knot::DecompositionSet::admissible_closure(g, std::move(dgroups));
      bool adequate = knot::adequacy_criterion(g, h, ds);
      std::ostringstream os;
      os << "{\n  \"input_hash\": " << knot::stable_hash(doc.canonical)
         << ",\n  \"adequate\": " << (adequate ? "true" : "false") << "\n}";
      emit(os.str(), flags.out);
      return kExitTrivial;
    }
    if (verify->parsed()) {
      knot::CohOptions opts;
      opts.fast_p_part = flags.fast_p_part;
      opts.jobs = flags.jobs;
      std::vector<knot::CheckResult> results =
          knot::run_verify_suite(suite, opts);
      std::ostringstream os;
      bool all = true;
      for (const auto& c : results) {
        os << (c.pass ? "PASS" : "FAIL") << "  " << c.name << "  expected "
           << c.expected << "  computed " << c.computed << "\n";
        all &= c.pass;
      }
      os << (all ? "all checks passed" : "SOME CHECKS FAILED");
      emit(os.str(), flags.out);
      return all ? kExitTrivial : kExitError;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
