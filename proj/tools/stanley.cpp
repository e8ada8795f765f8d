#include <cstdlib>
#include <fstream>
#include <iostream>
#include <thread>

#include <CLI11.hpp>

#include "stanley/lab.hpp"
#include "stanley/report.hpp"

namespace {

using namespace stanley;

constexpr std::size_t kPathListLimit = 200;

void write_json(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  out << j.dump(2) << '\n';
}

/// Every path starting at `start`, depth first, up to kPathListLimit.
void collect_paths(const PbPartition& pb, std::vector<Monomial>& steps, json& out) {
  if (out.size() >= kPathListLimit) return;
  out.push_back(classify_path(pb, steps));
  const auto img = *pb.h_of(steps.back());
  for (const auto& next : b_divisors(img, pb.B())) {
    if (!pb.in_domain(next) || std::find(steps.begin(), steps.end(), next) != steps.end()) continue;
    steps.push_back(next);
    collect_paths(pb, steps, out);
    steps.pop_back();
  }
}

int run_analyze(const std::string& file) {
  const auto inst = load_instance(file);
  const auto poset = build_poset(inst);
  json j = analyze(inst, poset);
  j["poset_size"] = poset.size();
  j["E_degree_normalized"] = check_E_degree_normalized(inst);
  std::cout << j.dump(2) << '\n';
  return 0;
}

int run_sdepth(const std::string& file, const std::string& witness, std::optional<int> k,
               bool no_trim) {
  const auto inst = load_instance(file);
  const auto poset = build_poset(inst);
  SdepthOptions opt;
  opt.trim = !no_trim;
  json j{{"poset_size", poset.size()}};
  std::optional<IntervalPartition> part;
  if (k) {
    part = sdepth_decision(poset, *k, opt);
    j["k"] = *k;
    j["feasible"] = part.has_value();
  } else {
    auto res = sdepth(poset, opt);
    j["sdepth"] = res.value;
    part = std::move(res.witness);
  }
  if (!witness.empty() && part) write_json(witness, *part);
  std::cout << j.dump(2) << '\n';
  return 0;
}

int run_depth(const std::string& file, const Field& field, const std::string& betti,
              const std::string& module) {
  const auto inst = load_instance(file);
  const auto spec = module == "s-over-j"   ? SquarefreeModuleSpec::ring_over_j(inst)
                    : module == "s-over-i" ? SquarefreeModuleSpec::ring_over_i(inst)
                                           : SquarefreeModuleSpec::quotient(inst);
  const auto summary = koszul_homology(spec, field, {.max_variables = 16, .threads = 0});
  if (!betti.empty()) write_json(betti, summary);
  std::cout << json{{"module", module},
                    {"field", to_string(field)},
                    {"pd", summary.pd},
                    {"depth", depth_json(summary.depth)}}
                   .dump(2)
            << '\n';
  return 0;
}

int run_paths(const std::string& file, const std::string& b_text, const std::string& from,
              bool normalize) {
  const auto inst = load_instance(file);
  const auto b = parse_monomial(b_text, inst.n);
  const auto dropped = default_dropped_index(inst, b);
  if (!dropped) throw ArgumentError(b_text + " lies in no single (f_i)");
  auto pb = build_pb(inst, b, *dropped);
  json j{{"b", b}, {"dropped", *dropped}, {"built", pb.has_value()}};
  if (!pb) {
    std::cout << j.dump(2) << '\n';
    return 0;
  }
  if (normalize) {
    auto norm = normalize_i0(*pb);
    j["normalize"] = {{"swaps", norm.swaps}, {"converged", norm.converged}};
    pb = std::move(norm.pb);
  }
  j["decoration"] = *pb;
  j["normalization_violations"] = normalization_violations(*pb);
  j["omega_configuration"] = omega_configuration_flag(*pb);
  json tug = json::array();
  json paths = json::array();
  if (!from.empty()) {
    const auto start = parse_monomial(from, inst.n);
    tug.push_back(compute_tug(*pb, start));
    std::vector<Monomial> steps{start};
    collect_paths(*pb, steps, paths);
  } else {
    for (const auto& [a, c] : pb->h()) {
      if (a.degree() != inst.d + 1) continue;
      tug.push_back(compute_tug(*pb, a));
      paths.push_back(classify_path(*pb, {a}));
    }
  }
  j["tug"] = tug;
  j["paths"] = paths;
  std::cout << j.dump(2) << '\n';
  return 0;
}

int run_verify(const std::string& file, const Field& field, bool cross_check, bool lemma_dep) {
  const auto inst = load_instance(file);
  VerifyOptions opt;
  opt.field = field;
  opt.cross_check = cross_check;
  opt.lemma_dep = lemma_dep;
  const auto rec = verify_conjecture_case(inst, opt);
  std::cout << json(rec).dump(2) << '\n';
  return rec.status == ConjectureStatus::Violation && rec.recheck && rec.recheck->confirmed ? 1 : 0;
}

int run_campaign_cmd(const std::string& config_file, const std::string& out, unsigned jobs,
                     const Field& field, bool field_given) {
  auto config = load_campaign_config(config_file);
  if (!out.empty()) config.output = out;
  if (field_given || !config.field) config.field = field;
  if (jobs == 0) jobs = std::max(1U, std::thread::hardware_concurrency());
  const auto summary = run_campaign(config, jobs);
  json j = summary;
  j["output"] = config.output.string();
  std::cout << j.dump(2) << '\n';
  return summary.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
  // Read once; per-command --field overrides it.
  Field field;
  try {
    field = default_field();
  } catch (const Error& e) {
    std::cerr << "STANLEY_FIELD: " << e.what() << '\n';
    return 2;
  }

  CLI::App app{"Stanley depth and depth of squarefree monomial quotients"};
  app.require_subcommand(1);
  std::string file, field_text, witness, betti, module = "i-over-j", b, from, config, out;
  std::optional<int> k;
  bool no_trim = false, normalize = false, cross_check = false, lemma_dep = false;
  unsigned jobs = 1;

  auto* analyze_cmd = app.add_subcommand("analyze", "structure of B, C, W and the hypotheses");
  analyze_cmd->add_option("instance", file)->required()->check(CLI::ExistingFile);

  auto* sdepth_cmd = app.add_subcommand("sdepth", "exact Stanley depth or a single decision");
  sdepth_cmd->add_option("instance", file)->required()->check(CLI::ExistingFile);
  sdepth_cmd->add_option("--witness", witness, "write the witness partition as JSON");
  sdepth_cmd->add_option("--k", k, "only decide sdepth >= K");
  sdepth_cmd->add_flag("--no-trim", no_trim, "allow interval tops of any degree");

  auto* depth_cmd = app.add_subcommand("depth", "depth via Koszul homology");
  depth_cmd->add_option("instance", file)->required()->check(CLI::ExistingFile);
  depth_cmd->add_option("--field", field_text, "gf2, gfp:P or q");
  depth_cmd->add_option("--betti", betti, "write nonzero Koszul homology dimensions as JSON");
  depth_cmd->add_option("--module", module)->check(CLI::IsMember({"i-over-j", "s-over-j", "s-over-i"}));

  auto* paths_cmd = app.add_subcommand("paths", "P_b decoration, T/U/G sets and paths");
  paths_cmd->add_option("instance", file)->required()->check(CLI::ExistingFile);
  paths_cmd->add_option("--b", b)->required();
  paths_cmd->add_option("--from", from, "list the paths starting here");
  paths_cmd->add_flag("--normalize", normalize, "apply normalize_i0 first");

  auto* verify_cmd = app.add_subcommand("verify", "verdict for one instance");
  verify_cmd->add_option("instance", file)->required()->check(CLI::ExistingFile);
  verify_cmd->add_option("--field", field_text, "gf2, gfp:P or q");
  verify_cmd->add_flag("--cross-check", cross_check, "also compute depth over Q and GF(32003)");
  verify_cmd->add_flag("--lemma-dep", lemma_dep, "search for disjoint intervals [f_i, c_i]");

  auto* campaign_cmd = app.add_subcommand("campaign", "run a verification campaign");
  campaign_cmd->add_option("--config", config)->required()->check(CLI::ExistingFile);
  campaign_cmd->add_option("--out", out, "output directory (overrides the config)");
  campaign_cmd->add_option("--jobs", jobs, "worker threads, 0 for all cores");
  campaign_cmd->add_option("--field", field_text, "gf2, gfp:P or q");

  CLI11_PARSE(app, argc, argv);

  try {
    if (!field_text.empty()) field = parse_field(field_text);
    if (*analyze_cmd) return run_analyze(file);
    if (*sdepth_cmd) return run_sdepth(file, witness, k, no_trim);
    if (*depth_cmd) return run_depth(file, field, betti, module);
    if (*paths_cmd) return run_paths(file, b, from, normalize);
    if (*verify_cmd) return run_verify(file, field, cross_check, lemma_dep);
    if (*campaign_cmd) return run_campaign_cmd(config, out, jobs, field, !field_text.empty());
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 3;
  }
  return 0;
}
