#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "cnn/batch.hpp"
#include "cnn/engine.hpp"
#include "cnn/generators.hpp"
#include "cnn/json_io.hpp"
#include "cnn/potential.hpp"
#include "cnn/svg.hpp"
#include "cnn/unit_cnn.hpp"

namespace {

using namespace cnn;

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kUsage = 2;

// Input or parameter problem detected after CLI parsing.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string exact_and_float(const Scalar& v) { return v.to_string() + " (" + std::to_string(v.to_double()) + ")"; }

// Accepts a bare object of the requested kind or a generated pair file.
Instance load_instance(const std::string& path) {
  const Json j = read_json_file(path);
  if (j.is_object() && j.contains("instance") && j.contains("opt")) return instance_from_json(j.at("instance"), "instance");
  return instance_from_json(j);
}

AlignedTrajectory load_opt(const std::string& path) {
  const Json j = read_json_file(path);
  if (j.is_object() && j.contains("opt")) return trajectory_from_json(j.at("opt"), "opt");
  return trajectory_from_json(j);
}

void emit(const std::string& out, const Json& j) {
  if (out.empty() || out == "-") {
    std::cout << dump_json(j);
  } else {
    write_text_file(out, dump_json(j));
  }
}

struct GenerateArgs {
  std::string kind;
  std::uint64_t cycles = 1;
  std::uint64_t seed = 0;
  std::size_t segments = 12;
  std::int64_t bound = 3;
  std::string out;
};

int cmd_generate(const GenerateArgs& a) {
  GeneratedPair pair;
  if (a.kind == "tight1" || a.kind == "tight2" || a.kind == "adversary") {
    if (a.cycles == 0) throw UsageError("--cycles must be at least 1");
  }
  if (a.kind == "tight1") {
    pair = tight1(a.cycles);
  } else if (a.kind == "tight2") {
    pair = tight2(a.cycles);
  } else if (a.kind == "fig2") {
    pair = fig2_scenario();
  } else if (a.kind == "random") {
    if (a.bound < 1) throw UsageError("--bound must be at least 1");
    pair = random_orthogonal(a.seed, a.segments, a.bound);
  } else {
    BishopRookOnline online;
    pair = adversary_continuous(online, a.cycles);
  }
  emit(a.out, to_json(pair));
  if (!a.out.empty() && a.out != "-") {
    std::cerr << pair.meta.name << ": " << pair.instance.segments.size() << " segments, opt cost "
              << exact_and_float(pair.opt.cost()) << "\n";
  }
  return kOk;
}

int cmd_rectify(const std::string& instance_path, const std::string& epsilon, const std::string& out) {
  const Scalar eps = parse_decimal(epsilon);
  if (eps.sign() <= 0) throw UsageError("--epsilon must be positive");
  emit(out, to_json(rectify(load_instance(instance_path), eps)));
  return kOk;
}

int cmd_run(const std::string& instance_path, const std::string& trace_path, const std::string& epsilon) {
  Instance inst = load_instance(instance_path);
  if (!epsilon.empty()) {
    const Scalar eps = parse_decimal(epsilon);
    if (eps.sign() <= 0) throw UsageError("--rectify-epsilon must be positive");
    inst = rectify(inst, eps);
  } else if (!inst.is_axis_parallel()) {
    throw UsageError("instance has diagonal segments; pass --rectify-epsilon");
  }
  const Trace trace = run(inst);
  emit(trace_path, to_json(trace));
  std::cerr << "online cost " << exact_and_float(trace.final_cost) << "\n";
  return kOk;
}

int cmd_verify_files(const std::string& trace_path, const std::string& opt_path, const std::string& report_path) {
  const Trace trace = trace_from_json(read_json_file(trace_path));
  const AlignedTrajectory opt = load_opt(opt_path);
  if (opt.end_s() != trace.instance.total_length()) throw UsageError("opt and trace have different arc lengths");
  const AlignmentReport feasible = validate_alignment(opt, trace.instance);
  if (!feasible.feasible)
    throw UsageError("opt is not aligned with the request at s = " + feasible.first_violation->to_string());
  const VerificationReport report = verify_nondecreasing(trace, opt);
  if (!report_path.empty()) emit(report_path, to_json(report));
  if (report.ok) {
    std::cout << "ok: potential non-decreasing over " << report.records.size() << " checkpoints\n";
    return kOk;
  }
  const auto& d = *report.first_decrease;
  std::cout << "FAIL: potential decreases at s = " << exact_and_float(d.s) << " from " << d.phi_before.to_string()
            << " to " << d.phi_after.to_string() << "\n";
  return kVerifyFailed;
}

int cmd_verify_batch(const BatchConfig& config, const std::string& report_path) {
  const BatchSummary summary = verify_random_parallel(config);
  Json items = Json::array();
  for (const auto& item : summary.items) {
    Json j{{"seed", item.seed}, {"ok", item.ok}, {"ell_on", to_json(item.ell_on)}, {"ell_opt", to_json(item.ell_opt)}};
    if (item.first_decrease) j["first_decrease_s"] = to_json(*item.first_decrease);
    if (!item.error.empty()) j["error"] = item.error;
    items.push_back(std::move(j));
    if (!item.ok) std::cout << "FAIL seed " << item.seed << (item.error.empty() ? "" : ": " + item.error) << "\n";
  }
  if (!report_path.empty()) emit(report_path, Json{{"failures", summary.failures}, {"items", std::move(items)}});
  std::cout << (summary.items.size() - summary.failures) << "/" << summary.items.size()
            << " random pairs passed (threads " << batch_thread_count() << ")\n";
  return summary.failures == 0 ? kOk : kVerifyFailed;
}

int cmd_ratio(const std::string& trace_path, const std::string& opt_path) {
  const Trace trace = trace_from_json(read_json_file(trace_path));
  const AlignedTrajectory opt = load_opt(opt_path);
  if (!validate_alignment(opt, trace.instance).feasible) throw UsageError("opt is not aligned with the request");
  std::cout << "online " << exact_and_float(trace.final_cost) << "\n";
  std::cout << "offline " << exact_and_float(opt.cost()) << "\n";
  const auto ratio = competitive_ratio(trace.final_cost, opt.cost());
  std::cout << "ratio " << (ratio ? exact_and_float(*ratio) : std::string("unbounded")) << "\n";
  return kOk;
}

struct UnitArgs {
  std::string algo;
  std::string requests;
  std::size_t rounds = 0;
  std::string against = "ortho3";
  std::string transcript;
  std::size_t limit = kDefaultOptLimit;
};

int cmd_unit(const UnitArgs& a) {
  if (a.algo == "adversary") {
    Sweet4 sweet;
    Ortho3 ortho;
    UnitOnline& online = a.against == "sweet4" ? static_cast<UnitOnline&>(sweet) : ortho;
    const UnitRun run = adversary_unit_square(online, a.rounds);
    std::vector<Point> requests;
    for (const auto& e : run.transcript) requests.push_back(e.request);
    const OptResult opt = bruteforce_opt(requests, {}, requests.size());
    if (!a.transcript.empty()) emit(a.transcript, to_json(run.transcript));
    std::cout << "online " << run.dollars << "\nopt " << opt.dollars << "\n";
    return kOk;
  }
  if (a.requests.empty()) throw UsageError("--requests is required for --algo " + a.algo);
  const std::vector<Point> requests = unit_requests_from_json(read_json_file(a.requests));
  if (a.algo == "opt") {
    if (requests.size() > a.limit) throw UsageError("too many requests for the exact optimum; raise --limit");
    std::cout << "opt " << bruteforce_opt(requests, {}, a.limit).dollars << "\n";
    return kOk;
  }
  UnitRun run;
  if (a.algo == "ortho3") {
    if (!is_orthogonal(requests)) throw UsageError("ortho3 needs consecutive requests sharing a coordinate");
    run = ortho3_run(requests);
  } else {
    run = sweet4_run(requests);
  }
  if (!a.transcript.empty()) emit(a.transcript, to_json(run.transcript));
  std::cout << "online " << run.dollars << "\n";
  return kOk;
}

int cmd_render(const std::string& trace_path, const std::string& opt_path, const std::string& out) {
  const Trace trace = trace_from_json(read_json_file(trace_path));
  std::optional<AlignedTrajectory> opt;
  if (!opt_path.empty()) opt = load_opt(opt_path);
  write_text_file(out, render_svg(trace, opt));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Continuous CNN workbench: Bishop-Rook engine, potential checks, generators"};
  app.require_subcommand(1);

  GenerateArgs gen;
  auto* generate = app.add_subcommand("generate", "Write an instance bundled with an offline trajectory");
  generate->add_option("--kind", gen.kind)->required()->check(CLI::IsMember({"tight1", "tight2", "fig2", "random", "adversary"}));
  generate->add_option("--cycles", gen.cycles, "Cycle count for tight1, tight2 and adversary");
  generate->add_option("--seed", gen.seed, "Seed for random");
  generate->add_option("--segments", gen.segments, "Segment count for random");
  generate->add_option("--bound", gen.bound, "Coordinate bound for random");
  generate->add_option("--out", gen.out, "Output path (stdout if omitted)");

  std::string rect_instance, rect_epsilon, rect_out;
  auto* rectify_cmd = app.add_subcommand("rectify", "Replace diagonal legs by staircases");
  rectify_cmd->add_option("--instance", rect_instance)->required();
  rectify_cmd->add_option("--epsilon", rect_epsilon)->required();
  rectify_cmd->add_option("--out", rect_out);

  std::string run_instance, run_trace, run_epsilon;
  auto* run_cmd = app.add_subcommand("run", "Run Bishop-Rook and write the trace");
  run_cmd->add_option("--instance", run_instance)->required();
  run_cmd->add_option("--trace", run_trace, "Trace output path (stdout if omitted)");
  run_cmd->add_option("--rectify-epsilon", run_epsilon);

  std::string ver_trace, ver_opt, ver_report;
  std::size_t ver_random = 0;
  BatchConfig batch;
  auto* verify = app.add_subcommand("verify", "Check that the potential never decreases");
  verify->add_option("--trace", ver_trace);
  verify->add_option("--opt", ver_opt);
  verify->add_option("--report", ver_report);
  verify->add_option("--random", ver_random, "Verify this many seeded random pairs instead");
  verify->add_option("--seed", batch.first_seed, "First seed for --random");
  verify->add_option("--segments", batch.n_segments);
  verify->add_option("--bound", batch.coord_bound);

  std::string ratio_trace, ratio_opt;
  auto* ratio = app.add_subcommand("ratio", "Print online cost over offline cost");
  ratio->add_option("--trace", ratio_trace)->required();
  ratio->add_option("--opt", ratio_opt)->required();

  UnitArgs unit_args;
  auto* unit = app.add_subcommand("unit", "Unit-cost variant: online algorithms, exact optimum, adversary");
  unit->add_option("--algo", unit_args.algo)->required()->check(CLI::IsMember({"sweet4", "ortho3", "opt", "adversary"}));
  unit->add_option("--requests", unit_args.requests);
  unit->add_option("--rounds", unit_args.rounds);
  unit->add_option("--against", unit_args.against)->check(CLI::IsMember({"ortho3", "sweet4"}));
  unit->add_option("--transcript", unit_args.transcript);
  unit->add_option("--limit", unit_args.limit, "Request limit for the exact optimum");

  std::string ren_trace, ren_opt, ren_out;
  auto* render = app.add_subcommand("render", "Draw a trace as SVG");
  render->add_option("--trace", ren_trace)->required();
  render->add_option("--opt", ren_opt);
  render->add_option("--out", ren_out)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*generate) return cmd_generate(gen);
    if (*rectify_cmd) return cmd_rectify(rect_instance, rect_epsilon, rect_out);
    if (*run_cmd) return cmd_run(run_instance, run_trace, run_epsilon);
    if (*verify) {
      batch.count = ver_random;
      if (ver_random > 0) return cmd_verify_batch(batch, ver_report);
      if (ver_trace.empty() || ver_opt.empty()) throw UsageError("verify needs --trace and --opt, or --random N");
      return cmd_verify_files(ver_trace, ver_opt, ver_report);
    }
    if (*ratio) return cmd_ratio(ratio_trace, ratio_opt);
    if (*unit) return cmd_unit(unit_args);
    if (*render) return cmd_render(ren_trace, ren_opt, ren_out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
