#include <cstdio>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tuition/calibration.hpp"
#include "tuition/config.hpp"
#include "tuition/errors.hpp"
#include "tuition/output.hpp"
#include "tuition/scenarios.hpp"

using namespace tuition;

namespace {

LoadedConfig load(const std::string& path) {
  if (path.empty()) return load_config_text("{}");
  return load_config(resolve_config_path(path));
}

std::string share(const std::optional<double>& s) {
  return s ? format_number(100.0 * *s) + "%" : std::string("n/a");
}

int cmd_run(const std::string& config_path, const std::string& scenario, const std::string& out_dir) {
  LoadedConfig lc = load(config_path);
  SimConfig cfg = lc.sim;
  if (!scenario.empty()) {
    const auto id = parse_scenario(scenario);
    if (!id) throw ConfigError("--scenario", "expected S1..S5, got '" + scenario + "'");
    cfg = build_scenario(*id, lc.sim);
  }
  const Trajectory traj = run(cfg);
  const std::string dir = out_dir.empty() ? lc.output.dir : out_dir;
  const std::string stem = cfg.scenario_id.empty() ? "run" : cfg.scenario_id;
  write_trajectory(traj, dir, stem, lc.output.csv, lc.output.json);
  std::cout << "scenario " << (cfg.scenario_id.empty() ? "-" : cfg.scenario_id) << ": "
            << traj.samples.size() << " years written to " << dir << "\n";
  std::cout << "College A ranked first " << share(fraction_top_ranked(traj, CollegeId::A)) << " of the time\n";
  std::cout << "College B ranked first " << share(fraction_top_ranked(traj, CollegeId::B)) << " of the time\n";
  return 0;
}

void print_state(const CollegeState& s) {
  std::printf("  students %.6g  faculty %.6g  student_space %.6g  faculty_space %.6g\n", s.students, s.faculty,
              s.student_space, s.faculty_space);
  std::printf("  sticker_price %.6g  typical_aid %.6g  typical_net_price %.6g\n", s.sticker_price, s.typical_aid,
              s.typical_net_price);
  std::printf("  typical_admit_rate %.6g  typical_yield %.6g  perceived_experience %.6g\n", s.typical_admit_rate,
              s.typical_yield, s.perceived_experience);
  std::printf("  cash %.6g  debt %.6g  endowment %.6g\n", s.cash, s.debt, s.endowment);
}

int cmd_calibrate(const std::string& config_path) {
  LoadedConfig lc = load(config_path);
  for (int i = 0; i < 2; ++i) {
    std::cout << "College " << (i == 0 ? "A" : "B") << ":\n";
    if (!lc.calibration[i]) {
      std::cout << "  initial state given explicitly, residuals only\n";
      print_state(lc.sim.initial[i]);
      for (const Residual& r : steady_state_residuals(lc.sim.colleges[i], lc.sim.initial[i], lc.targets.applications)) {
        std::printf("  residual %-22s %.3e\n", r.stock.c_str(), r.relative);
      }
      continue;
    }
    const CalibrationReport& rep = *lc.calibration[i];
    std::cout << "  mode " << to_string(rep.mode) << ", " << rep.iterations << " iterations\n";
    print_state(rep.state);
    std::printf("  load index %.6g  experience %.6g  discount rate %.6g\n", rep.load_index, rep.experience,
                rep.discount_rate);
    for (const Residual& r : rep.residuals) std::printf("  residual %-22s %.3e\n", r.stock.c_str(), r.relative);
    std::printf("  max residual %.3e\n", rep.max_residual);
    for (const std::string& n : rep.notes) std::cout << "  note: " << n << "\n";
  }
  return 0;
}

int cmd_compare(const std::string& config_path, const std::string& out_dir) {
  LoadedConfig lc = load(config_path);
  std::vector<std::future<Trajectory>> jobs;
  for (ScenarioId id : kAllScenarios) {
    jobs.push_back(std::async(std::launch::async, [cfg = build_scenario(id, lc.sim)] { return run(cfg); }));
  }
  std::vector<ScenarioReport> reports;
  const std::string dir = out_dir.empty() ? lc.output.dir : out_dir;
  for (auto& job : jobs) {
    const Trajectory traj = job.get();
    write_trajectory(traj, dir, traj.scenario_id, lc.output.csv, lc.output.json);
    reports.push_back(make_report(traj));
  }
  const auto orderings = compare_scenarios(reports);
  write_comparison(reports, orderings, std::cout);
  std::ofstream table(std::filesystem::path(dir) / "comparison.txt");
  write_comparison(reports, orderings, table);
  std::ofstream industry(std::filesystem::path(dir) / "industry.csv");
  write_industry_csv(reports, industry);
  if (!table || !industry) throw std::runtime_error("cannot write comparison files in " + dir);
  return 0;
}

int cmd_validate(const std::string& config_path) {
  const LoadedConfig lc = load(config_path);
  std::cout << "config ok: " << (config_path.empty() ? "<defaults>" : config_path) << ", " << lc.sim.events.size()
            << " events, horizon " << lc.sim.horizon << " years\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Two-college tuition dynamics simulator"};
  app.require_subcommand(1);

  std::string config_path;
  std::string scenario;
  std::string out_dir;

  auto* run_cmd = app.add_subcommand("run", "run one scenario and write its trajectory");
  run_cmd->add_option("--scenario", scenario, "S1..S5 (default: the config's scenario section)");
  run_cmd->add_option("--config", config_path, "JSON config file");
  run_cmd->add_option("--out", out_dir, "output directory");

  auto* cal_cmd = app.add_subcommand("calibrate", "print the steady state and its residuals");
  cal_cmd->add_option("--config", config_path, "JSON config file");

  auto* cmp_cmd = app.add_subcommand("compare", "run S1..S5 and compare them at the horizon");
  cmp_cmd->add_option("--config", config_path, "JSON config file");
  cmp_cmd->add_option("--out", out_dir, "output directory");

  auto* val_cmd = app.add_subcommand("validate", "load and check a config");
  val_cmd->add_option("--config", config_path, "JSON config file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*run_cmd) return cmd_run(config_path, scenario, out_dir);
    if (*cal_cmd) return cmd_calibrate(config_path);
    if (*cmp_cmd) return cmd_compare(config_path, out_dir);
    if (*val_cmd) return cmd_validate(config_path);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const CalibrationError& e) {
    std::cerr << "calibration error: " << e.what() << " [binding: " << e.binding_constraint() << "]\n";
    return 1;
  } catch (const SimulationError& e) {
    std::cerr << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
