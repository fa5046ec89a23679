#include <algorithm>
#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <Eigen/Dense>

#include <dielqed/lagrangian.hpp>
#include <dielqed/plane_wave.hpp>
#include <dielqed/quantize.hpp>
#include <dielqed/relativity.hpp>
#include <dielqed/report.hpp>
#include <dielqed/verification.hpp>

namespace {

struct GlobalConfig {
  std::string format = "table";
  std::string out_path;
  double hbar = 1.0;
  double c = 1.0;
  int dim = 20;
  int grid = 0;
  double tol = 0.0;
};

void emit(const dielqed::report::Table& table, const GlobalConfig& cfg) {
  const std::string body =
      dielqed::report::render(table, dielqed::report::parse_format(cfg.format));
  if (cfg.out_path.empty()) {
    std::cout << body;
    return;
  }
  std::ofstream out(cfg.out_path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output path: " + cfg.out_path);
  out << body;
}

int run_verify(const GlobalConfig& cfg) {
  dielqed::verify::VerifyOptions options;
  options.dim = cfg.dim;
  options.grid = cfg.grid;
  options.hbar = cfg.hbar;
  options.c = cfg.c;
  options.tolerance_override = cfg.tol;
  const auto results = dielqed::verify::run_all_checks(options);

  dielqed::report::Table table;
  table.columns = {"check", "residual", "tolerance", "status"};
  bool all_pass = true;
  for (const auto& result : results) {
    table.rows.push_back({result.name, result.residual, result.tolerance, result.pass});
    all_pass = all_pass && result.pass;
  }
  emit(table, cfg);
  return all_pass ? 0 : 1;
}

int run_compare(const GlobalConfig& cfg, std::vector<double> n_list, double omega,
                double volume) {
  if (n_list.empty()) throw std::invalid_argument("compare needs a nonempty --n list");
  const double n_ref = n_list.front();
  std::sort(n_list.begin(), n_list.end());

  dielqed::report::Table table;
  table.columns = {"scheme",          "n",            "momentum_coeff", "prefactor",
                   "commutator_scale", "energy_ratio", "correspondence_residual"};
  for (auto scheme : {dielqed::quantize::Scheme::Ginzburg,
                      dielqed::quantize::Scheme::Corrected}) {
    for (double n : n_list) {
      const auto row = dielqed::quantize::build_report(scheme, n, n_ref, omega, volume,
                                                       cfg.hbar, cfg.c, cfg.dim);
      table.rows.push_back({std::string(dielqed::quantize::scheme_name(scheme)),
                            row.refractive_index, row.momentum_coefficient,
                            row.prefactor, row.commutator_scale, row.energy_ratio,
                            row.correspondence_residual});
    }
  }
  emit(table, cfg);
  return 0;
}

int run_boost(const GlobalConfig& cfg, double n, double v, double t,
              const Eigen::Vector3d& position) {
  const dielqed::relativity::MaterialBoost boost(v, n, cfg.c);
  const dielqed::relativity::FourVector primed =
      dielqed::relativity::event_from_time(t, position, n, cfg.c);
  const dielqed::relativity::FourVector lab =
      dielqed::relativity::boost_event(primed, boost);

  dielqed::report::Table table;
  table.columns = {"quantity", "value"};
  table.rows.push_back({std::string("gamma"), dielqed::relativity::gamma(boost)});
  table.rows.push_back(
      {std::string("t"), dielqed::relativity::coordinate_time(lab, n, cfg.c)});
  table.rows.push_back({std::string("x"), lab.spatial.x()});
  table.rows.push_back({std::string("y"), lab.spatial.y()});
  table.rows.push_back({std::string("z"), lab.spatial.z()});
  emit(table, cfg);
  return 0;
}

int run_interface(const GlobalConfig& cfg, double n1, double n2, double amplitude,
                  double omega) {
  const dielqed::fields::MediumInterface interface(n1, n2);
  const double transmitted = dielqed::fields::refracted_amplitude(amplitude, interface);
  const dielqed::fields::PlaneWave incident(amplitude, omega, n1, 0.0,
                                            Eigen::Vector3d::UnitX(), cfg.c);
  const dielqed::fields::PlaneWave refracted(transmitted, omega, n2, 0.0,
                                             Eigen::Vector3d::UnitX(), cfg.c);

  dielqed::report::Table table;
  table.columns = {"quantity", "value"};
  table.rows.push_back({std::string("transmitted_amplitude"), transmitted});
  table.rows.push_back(
      {std::string("incident_flux"), dielqed::fields::time_averaged_flux(incident)});
  table.rows.push_back(
      {std::string("transmitted_flux"), dielqed::fields::time_averaged_flux(refracted)});
  table.rows.push_back(
      {std::string("flux_residual"),
       dielqed::fields::flux_continuity_residual(interface, amplitude, omega, cfg.c)});
  emit(table, cfg);
  return 0;
}

int run_lagrangian(const GlobalConfig& cfg, double mass, double n, double xdot) {
  if (!(mass > 0.0)) throw std::invalid_argument("mass must be positive");
  if (!(n >= 1.0)) throw std::invalid_argument("refractive index must be >= 1");
  const dielqed::lagrange::LagrangianFunction free_particle =
      [mass](const Eigen::VectorXd&, const Eigen::VectorXd& qd, double) {
        return 0.5 * mass * qd(0) * qd(0);
      };
  Eigen::VectorXd q(1), qdot_tau(1);
  q << 0.0;
  qdot_tau << n * xdot;
  const double momentum =
      dielqed::lagrange::canonical_momentum(free_particle, q, qdot_tau, 0);

  dielqed::report::Table table;
  table.columns = {"quantity", "value"};
  table.rows.push_back({std::string("mass"), mass});
  table.rows.push_back({std::string("n"), n});
  table.rows.push_back({std::string("xdot"), xdot});
  table.rows.push_back({std::string("canonical_momentum"), momentum});
  emit(table, cfg);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  GlobalConfig cfg;
  CLI::App app{"Verification and comparison tool for macroscopic field "
               "quantization in linear dielectrics"};
  app.set_config("--config", "", "Read options from a key=value file");
  app.add_option("--format", cfg.format, "Report format: table, csv, or json")
      ->check(CLI::IsMember({"table", "csv", "json"}))
      ->capture_default_str();
  app.add_option("--out", cfg.out_path, "Write the report body to this file");
  app.add_option("--hbar", cfg.hbar, "Reduced Planck constant")->capture_default_str();
  app.add_option("--c", cfg.c, "Vacuum light speed")->capture_default_str();
  app.add_option("--dim", cfg.dim, "Truncated number-state dimension")
      ->capture_default_str();
  app.add_option("--grid", cfg.grid, "Mode quadrature points per axis, 0 = automatic")
      ->capture_default_str();
  app.add_option("--tol", cfg.tol, "Replace every verification tolerance");
  app.require_subcommand(1);

  CLI::App* verify_cmd = app.add_subcommand("verify", "Run the full invariant suite");
  verify_cmd->fallthrough();

  std::vector<double> n_list;
  double compare_omega = 1.0;
  double compare_volume = 1.0;
  CLI::App* compare_cmd =
      app.add_subcommand("compare", "Tabulate both quantization schemes across media");
  compare_cmd->fallthrough();
  compare_cmd->add_option("--n", n_list, "Refractive index list; first entry is the reference")
      ->required()
      ->delimiter(',');
  compare_cmd->add_option("--omega", compare_omega, "Mode angular frequency")
      ->capture_default_str();
  compare_cmd->add_option("--volume", compare_volume, "Quantization volume")
      ->capture_default_str();

  double boost_n = 1.0;
  double boost_v = 0.0;
  double boost_t = 0.0;
  double boost_x = 0.0;
  double boost_y = 0.0;
  double boost_z = 0.0;
  CLI::App* boost_cmd =
      app.add_subcommand("boost", "Transform an event with the material boost");
  boost_cmd->fallthrough();
  boost_cmd->add_option("--n", boost_n, "Refractive index")->capture_default_str();
  boost_cmd->add_option("--v", boost_v, "Frame velocity along +x")->capture_default_str();
  boost_cmd->add_option("--t", boost_t, "Primed-frame coordinate time")
      ->capture_default_str();
  boost_cmd->add_option("--x", boost_x, "Primed-frame x")->capture_default_str();
  boost_cmd->add_option("--y", boost_y, "Primed-frame y")->capture_default_str();
  boost_cmd->add_option("--z", boost_z, "Primed-frame z")->capture_default_str();

  double iface_n1 = 1.0;
  double iface_n2 = 1.5;
  double iface_amplitude = 1.0;
  double iface_omega = 1.0;
  CLI::App* interface_cmd = app.add_subcommand(
      "interface", "Reflectionless interface amplitudes and flux continuity");
  interface_cmd->fallthrough();
  interface_cmd->add_option("--n1", iface_n1, "Incident-side index")
      ->capture_default_str();
  interface_cmd->add_option("--n2", iface_n2, "Transmitted-side index")
      ->capture_default_str();
  interface_cmd->add_option("--amplitude", iface_amplitude, "Incident amplitude")
      ->capture_default_str();
  interface_cmd->add_option("--omega", iface_omega, "Angular frequency")
      ->capture_default_str();

  double lag_mass = 1.0;
  double lag_n = 1.0;
  double lag_xdot = 0.1;
  CLI::App* lagrangian_cmd = app.add_subcommand(
      "lagrangian", "Finite-difference canonical momentum of the free particle");
  lagrangian_cmd->fallthrough();
  lagrangian_cmd->add_option("--mass", lag_mass, "Rest mass")->capture_default_str();
  lagrangian_cmd->add_option("--n", lag_n, "Refractive index")->capture_default_str();
  lagrangian_cmd->add_option("--xdot", lag_xdot, "Coordinate velocity")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& help) {
    return app.exit(help);
  } catch (const CLI::CallForAllHelp& help) {
    return app.exit(help);
  } catch (const CLI::ParseError& err) {
    app.exit(err);
    return 2;
  }

  try {
    if (*verify_cmd) return run_verify(cfg);
    if (*compare_cmd) return run_compare(cfg, n_list, compare_omega, compare_volume);
    if (*boost_cmd)
      return run_boost(cfg, boost_n, boost_v, boost_t,
                       Eigen::Vector3d(boost_x, boost_y, boost_z));
    if (*interface_cmd)
      return run_interface(cfg, iface_n1, iface_n2, iface_amplitude, iface_omega);
    if (*lagrangian_cmd) return run_lagrangian(cfg, lag_mass, lag_n, lag_xdot);
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 2;
  }
  return 2;
}
