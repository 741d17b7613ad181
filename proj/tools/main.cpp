// Command-line front end: regime classification, reference-table
// reproduction, q sweeps, reduced-dynamics simulation, and the
// harmonics dual-oracle check. All numeric output uses 17 significant
// digits so files round-trip exactly.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sphthc/harmonics.hpp"
#include "sphthc/params.hpp"
#include "sphthc/reduced.hpp"
#include "sphthc/reference.hpp"
#include "sphthc/spectrum.hpp"
#include "sphthc/transition.hpp"

namespace {

using namespace sphthc;

constexpr int kExitOk = 0;
constexpr int kExitTolerance = 1;
constexpr int kExitDomain = 2;
constexpr int kExitDiverged = 3;

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string json_str(const std::string& s) { return "\"" + s + "\""; }

std::string regime_name(Regime r) {
  switch (r) {
    case Regime::SteadyMultiEquilibria: return "steady-multi-equilibria";
    case Regime::Oscillatory: return "oscillatory";
    default: return "degenerate";
  }
}

std::string type_name(TransitionType t) {
  switch (t) {
    case TransitionType::TypeI: return "type-I";
    case TransitionType::TypeII: return "type-II";
    default: return "marginal";
  }
}

struct CommonOpts {
  double Le = 1e-2;
  double Pr = 7.5;
  double R = 620.0;
  std::optional<double> r;
  std::optional<int> lc;
  std::optional<double> rtilde;
  int sign = +1;
  std::string format = "json";
  std::string out;
};

void add_param_flags(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--le", o.Le, "Lewis number");
  cmd->add_option("--pr", o.Pr, "Prandtl number");
  cmd->add_option("--R", o.R, "thermal Rayleigh number");
  cmd->add_option("--r", o.r, "aspect ratio a/h (overrides --lc preset)");
  cmd->add_option("--lc", o.lc, "critical-degree preset: 1 -> r = 2/pi, 2 -> r = 2 sqrt(3)/pi")
      ->check(CLI::IsMember({1, 2}));
  cmd->add_option("--rtilde", o.rtilde,
                  "saline Rayleigh magnitude (default: fixed by the criticality constraint)");
  cmd->add_option("--sign", o.sign, "salinity gradient sign, +1 or -1")
      ->check(CLI::IsMember({1, -1}));
}

void add_output_flags(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--format", o.format, "output format")
      ->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--out", o.out, "output path (default: stdout)");
}

double resolve_aspect_ratio(const CommonOpts& o) {
  if (o.r) return *o.r;
  return reference::preset_aspect_ratio(o.lc.value_or(1));
}

Params build_params(const CommonOpts& o, std::optional<double> R_override = {}) {
  const double R = R_override.value_or(o.R);
  const double r = resolve_aspect_ratio(o);
  if (o.rtilde) return Params::make(o.Pr, o.Le, R, *o.rtilde, r, o.sign);
  return Params::at_criticality(o.Pr, o.Le, R, r);
}

void write_output(const CommonOpts& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f) throw Error("cannot open output file: " + o.out);
  f << text;
}

std::string params_json(const Params& p) {
  std::ostringstream os;
  os << "{\"Pr\": " << fmt(p.Pr) << ", \"Le\": " << fmt(p.Le)
     << ", \"R\": " << fmt(p.R) << ", \"Rtilde\": " << fmt(p.Rtilde)
     << ", \"r\": " << fmt(p.r) << ", \"s_sign\": " << p.s_sign << "}";
  return os.str();
}

// ---------------------------------------------------------------- classify

int cmd_classify(const CommonOpts& o) {
  const Params p = build_params(o);
  const RegimeReport reg = regime(p);

  std::optional<TransitionReport> tr;
  std::optional<double> rstar;
  std::string unavailable;
  if (reg.regime != Regime::SteadyMultiEquilibria) {
    unavailable = "transition number is defined in the K > 0 regime only";
  } else if (reg.l_c > 2) {
    unavailable = "transition number formulas cover l_c in {1, 2}";
  } else {
    tr = transition_number(reg.l_c, p);
    if (p.Le < 1.0) {
      try {
        rstar = critical_R_star(reg.l_c, p.Le, p.Pr, p.r);
      } catch (const NoSignChange&) {
      }
    }
  }

  std::ostringstream os;
  if (o.format == "json") {
    os << "{\n  \"schema\": 1,\n  \"command\": \"classify\",\n";
    os << "  \"params\": " << params_json(p) << ",\n";
    os << "  \"regime\": {\"sigma\": " << fmt(reg.sigma)
       << ", \"sigma_c\": " << fmt(reg.sigma_c) << ", \"l_c\": " << reg.l_c
       << ", \"K\": " << fmt(reg.K) << ", \"classification\": "
       << json_str(regime_name(reg.regime)) << ", \"R0\": " << fmt(reg.R0)
       << ", \"R1\": " << fmt(reg.R1) << ", \"eta\": " << fmt(reg.eta)
       << ", \"eta_c\": " << fmt(reg.eta_c) << "},\n";
    if (tr) {
      os << "  \"transition\": {\"q\": " << fmt(tr->q)
         << ", \"classification\": " << json_str(type_name(tr->classification))
         << ", \"d_terms\": [";
      for (std::size_t i = 0; i < tr->d_terms.size(); ++i) {
        const DTerm& d = tr->d_terms[i];
        os << (i ? ", " : "") << "{\"l\": " << d.l << ", \"n\": " << d.n
           << ", \"value\": " << fmt(d.value) << "}";
      }
      os << "], \"attractor_radius_sq\": "
         << (tr->attractor_radius_sq ? fmt(*tr->attractor_radius_sq) : "null")
         << ", \"R_star\": " << (rstar ? fmt(*rstar) : "null")
         << ", \"near_pole\": " << (tr->near_pole ? "true" : "false") << "}\n";
    } else {
      os << "  \"transition\": null,\n  \"transition_unavailable\": "
         << json_str(unavailable) << "\n";
    }
    os << "}\n";
  } else {
    os << "Pr,Le,R,Rtilde,s_sign,r,sigma,sigma_c,l_c,K,regime,R0,R1,eta,eta_c,"
          "q,classification,d_0_2,d_2_2,d_4_2,R_star,attractor_radius_sq,near_pole\n";
    os << fmt(p.Pr) << ',' << fmt(p.Le) << ',' << fmt(p.R) << ','
       << fmt(p.Rtilde) << ',' << p.s_sign << ',' << fmt(p.r) << ','
       << fmt(reg.sigma) << ',' << fmt(reg.sigma_c) << ',' << reg.l_c << ','
       << fmt(reg.K) << ',' << regime_name(reg.regime) << ',' << fmt(reg.R0)
       << ',' << fmt(reg.R1) << ',' << fmt(reg.eta) << ',' << fmt(reg.eta_c)
       << ',';
    if (tr) {
      os << fmt(tr->q) << ',' << type_name(tr->classification);
      const double* d42 = nullptr;
      os << ',' << fmt(tr->d_terms[0].value) << ',' << fmt(tr->d_terms[1].value);
      if (tr->d_terms.size() > 2) {
        d42 = &tr->d_terms[2].value;
      }
      os << ',' << (d42 ? fmt(*d42) : "");
      os << ',' << (rstar ? fmt(*rstar) : "");
      os << ','
         << (tr->attractor_radius_sq ? fmt(*tr->attractor_radius_sq) : "");
      os << ',' << (tr->near_pole ? "1" : "0") << "\n";
    } else {
      os << ",,,,,,," << "\n";
    }
  }
  write_output(o, os.str());
  return kExitOk;
}

// ------------------------------------------------------------------ tables

struct TableEntry {
  int table;
  double Le, R;
  std::string quantity;
  double computed, ref, err, tol;
  bool ok;
  std::string note;
};

int cmd_tables(const CommonOpts& o) {
  std::vector<TableEntry> entries;

  const auto add_cell = [&](int table, double Le, double R,
                            const std::string& qty, double computed,
                            const reference::Cell& cell) {
    if (cell.decimals < 0) return;
    TableEntry e;
    e.table = table;
    e.Le = Le;
    e.R = R;
    e.quantity = qty;
    e.computed = computed;
    e.ref = cell.value;
    e.err = std::abs(computed - cell.value);
    e.tol = reference::cell_tolerance(cell);
    e.ok = e.err <= e.tol;
    e.note = cell.note ? cell.note : "";
    entries.push_back(e);
  };

  for (int table = 1; table <= 2; ++table) {
    const int lc = table;
    const double r = reference::preset_aspect_ratio(lc);
    const auto rows = table == 1 ? reference::table1() : reference::table2();
    for (const reference::InteractionRow& row : rows) {
      const Params p = Params::at_criticality(o.Pr, row.Le, row.R, r);
      add_cell(table, row.Le, row.R, "d02", d_zero_mode(lc, p), row.d02);
      add_cell(table, row.Le, row.R, "d22", d_higher(lc, 2, p), row.d22);
      if (lc == 2) add_cell(table, row.Le, row.R, "d42", d_higher(lc, 4, p), row.d42);
    }
  }
  for (int table = 3; table <= 4; ++table) {
    const int lc = table - 2;
    const double r = reference::preset_aspect_ratio(lc);
    const auto rows = table == 3 ? reference::table3() : reference::table4();
    for (const reference::ThresholdRow& row : rows) {
      const double rstar = critical_R_star(lc, row.Le, o.Pr, r);
      const double r0 =
          regime(Params::at_criticality(o.Pr, row.Le, 620.0, r)).R0;
      entries.push_back({table, row.Le, 0.0, "R_star", rstar, row.R_star,
                         std::abs(rstar - row.R_star), 1e-2,
                         std::abs(rstar - row.R_star) <= 1e-2, ""});
      entries.push_back({table, row.Le, 0.0, "R0", r0, row.R0,
                         std::abs(r0 - row.R0), 1e-2,
                         std::abs(r0 - row.R0) <= 1e-2, ""});
    }
  }

  bool all_ok = true;
  for (const TableEntry& e : entries) all_ok = all_ok && e.ok;

  std::ostringstream os;
  if (o.format == "json") {
    os << "{\n  \"schema\": 1,\n  \"command\": \"tables\",\n  \"entries\": [\n";
    for (std::size_t i = 0; i < entries.size(); ++i) {
      const TableEntry& e = entries[i];
      os << "    {\"table\": " << e.table << ", \"Le\": " << fmt(e.Le)
         << ", \"R\": " << fmt(e.R) << ", \"quantity\": " << json_str(e.quantity)
         << ", \"computed\": " << fmt(e.computed) << ", \"reference\": "
         << fmt(e.ref) << ", \"error\": " << fmt(e.err) << ", \"tolerance\": "
         << fmt(e.tol) << ", \"ok\": " << (e.ok ? "true" : "false")
         << ", \"note\": " << json_str(e.note) << "}"
         << (i + 1 < entries.size() ? "," : "") << "\n";
    }
    os << "  ],\n  \"all_ok\": " << (all_ok ? "true" : "false") << "\n}\n";
  } else {
    os << "table,Le,R,quantity,computed,reference,error,tolerance,ok,note\n";
    for (const TableEntry& e : entries)
      os << e.table << ',' << fmt(e.Le) << ',' << fmt(e.R) << ',' << e.quantity
         << ',' << fmt(e.computed) << ',' << fmt(e.ref) << ',' << fmt(e.err)
         << ',' << fmt(e.tol) << ',' << (e.ok ? "1" : "0") << ",\"" << e.note
         << "\"\n";
  }
  write_output(o, os.str());
  return all_ok ? kExitOk : kExitTolerance;
}

// ------------------------------------------------------------------ qsweep

int cmd_qsweep(const CommonOpts& o, double rmin, double rmax, int steps) {
  if (!(rmin < rmax) || steps < 2)
    throw InvalidParams("sweep grid needs rmin < rmax and steps >= 2");
  const double r = resolve_aspect_ratio(o);
  const int lc = critical_degree(r);
  if (lc > 2) throw UnsupportedDegree("q sweeps cover l_c in {1, 2}");

  struct Row {
    double R, q;
    std::vector<DTerm> d;
    bool near_pole;
  };
  std::vector<Row> rows;
  for (int i = 0; i < steps; ++i) {
    const double R = rmin + (rmax - rmin) * i / (steps - 1);
    try {
      const Params p = Params::at_criticality(o.Pr, o.Le, R, r);
      const TransitionReport tr = transition_number(lc, p);
      rows.push_back({R, tr.q, tr.d_terms, tr.near_pole});
    } catch (const UnsupportedRegime&) {
    } catch (const PoleAtR0&) {
    }
  }
  if (rows.empty())
    throw UnsupportedRegime("sweep grid has no points in the K > 0 regime");

  std::ostringstream os;
  if (o.format == "json") {
    os << "{\n  \"schema\": 1,\n  \"command\": \"qsweep\",\n  \"l_c\": " << lc
       << ",\n  \"points\": [\n";
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const Row& row = rows[i];
      os << "    {\"R\": " << fmt(row.R) << ", \"q\": " << fmt(row.q);
      for (const DTerm& d : row.d)
        os << ", \"d_" << d.l << "_" << d.n << "\": " << fmt(d.value);
      os << ", \"near_pole\": " << (row.near_pole ? "true" : "false") << "}"
         << (i + 1 < rows.size() ? "," : "") << "\n";
    }
    os << "  ]\n}\n";
  } else {
    os << "R,q,d_0_2,d_2_2,d_4_2,near_pole\n";
    for (const Row& row : rows) {
      os << fmt(row.R) << ',' << fmt(row.q) << ',' << fmt(row.d[0].value)
         << ',' << fmt(row.d[1].value) << ','
         << (row.d.size() > 2 ? fmt(row.d[2].value) : "") << ','
         << (row.near_pole ? "1" : "0") << "\n";
    }
  }
  write_output(o, os.str());
  return kExitOk;
}

// ---------------------------------------------------------------- simulate

int cmd_simulate(const CommonOpts& o, double dt_opt, double horizon_opt,
                 double x0_scale, std::uint64_t seed) {
  const Params p = build_params(o);
  const RegimeReport reg = regime(p);
  if (reg.regime != Regime::SteadyMultiEquilibria)
    throw UnsupportedRegime("simulation needs the K > 0 regime");
  if (reg.l_c > 2)
    throw UnsupportedDegree("reduced equations cover l_c in {1, 2}");

  const TransitionReport tr = transition_number(reg.l_c, p);
  const double beta = eigenvalues(reg.l_c, 1, p).betas[0].real();

  AmplitudeState s0 = AmplitudeState::zero(reg.l_c);
  double amp = x0_scale;
  if (amp < 0.0) {
    amp = (beta > 0.0 && tr.q > 0.0) ? 0.3 * std::sqrt(beta / tr.q) : 1e-3;
  }
  if (amp > 0.0) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    s0.at(0) = {normal(rng), 0.0};
    for (int m = 1; m <= reg.l_c; ++m) {
      s0.at(m) = {normal(rng), normal(rng)};
      s0.at(-m) = (m % 2 == 0 ? 1.0 : -1.0) * std::conj(s0.at(m));
    }
    const double n0 = std::sqrt(s0.norm_sq());
    for (auto& xm : s0.x) xm *= amp / n0;
  }

  const double rate =
      std::max({std::abs(beta), std::abs(tr.q) * s0.norm_sq(), 1e-6});
  const double dt = dt_opt > 0.0 ? dt_opt : 0.02 / rate;
  const double horizon =
      horizon_opt > 0.0 ? horizon_opt : (beta > 0.0 ? 14.0 / beta : 200.0);
  const long n_steps = static_cast<long>(std::ceil(horizon / dt));
  const int stride = static_cast<int>(std::max(1L, n_steps / 2000));

  const Trajectory traj = integrate(s0, beta, tr.q, dt, horizon, stride);

  std::ostringstream csv;
  csv << "t";
  for (int m = -reg.l_c; m <= reg.l_c; ++m)
    csv << ",re_x_" << m << ",im_x_" << m;
  csv << ",norm_sq\n";
  for (const AmplitudeState& s : traj.samples) {
    csv << fmt(s.t);
    for (const auto& xm : s.x) csv << ',' << fmt(xm.real()) << ',' << fmt(xm.imag());
    csv << ',' << fmt(s.norm_sq()) << "\n";
  }

  const double terminal = traj.samples.back().norm_sq();
  const double expected = (beta > 0.0 && tr.q > 0.0) ? beta / tr.q : 0.0;
  std::ostringstream rep;
  rep << "{\n  \"schema\": 1,\n  \"command\": \"simulate\",\n"
      << "  \"params\": " << params_json(p) << ",\n"
      << "  \"beta_crit\": " << fmt(beta) << ",\n  \"q\": " << fmt(tr.q)
      << ",\n  \"classification\": " << json_str(type_name(tr.classification))
      << ",\n  \"dt\": " << fmt(dt) << ",\n  \"horizon\": " << fmt(horizon)
      << ",\n  \"seed\": " << seed << ",\n  \"x0_norm\": " << fmt(amp)
      << ",\n  \"terminal_norm_sq\": " << fmt(terminal)
      << ",\n  \"expected_norm_sq\": " << fmt(expected)
      << ",\n  \"diverged\": " << (traj.diverged ? "true" : "false") << "\n}\n";

  if (o.out.empty()) {
    std::cout << csv.str();
    std::cerr << rep.str();
  } else {
    std::ofstream f(o.out, std::ios::binary);
    if (!f) throw Error("cannot open output file: " + o.out);
    f << csv.str();
    std::cout << rep.str();
  }
  return traj.diverged ? kExitDiverged : kExitOk;
}

// --------------------------------------------------------- harmonics-check

int cmd_harmonics_check(const CommonOpts& o, int degree) {
  if (degree < 0 || degree > kMaxHarmonicDegree)
    throw InvalidParams("degree cap is " + std::to_string(kMaxHarmonicDegree));

  double max_dev = 0.0;
  long checked = 0;
  for (int l1 = 0; l1 <= degree; ++l1)
    for (int l2 = 0; l2 <= degree; ++l2)
      for (int l3 = 0; l3 <= degree; ++l3)
        for (int m1 = -l1; m1 <= l1; ++m1)
          for (int m2 = -l2; m2 <= l2; ++m2)
            for (int m3 = -l3; m3 <= l3; ++m3) {
              const HarmonicIndex a{l1, m1}, b{l2, m2}, c{l3, m3};
              const std::complex<double> quad = triple_product_quadrature(a, b, c);
              const double closed = gaunt_closed_form(a, b, c);
              max_dev = std::max(max_dev, std::abs(quad - closed));
              ++checked;
            }

  const bool ok = max_dev < 1e-12;
  std::ostringstream os;
  if (o.format == "json") {
    os << "{\n  \"schema\": 1,\n  \"command\": \"harmonics-check\",\n"
       << "  \"degree\": " << degree << ",\n  \"triples_checked\": " << checked
       << ",\n  \"max_abs_deviation\": " << fmt(max_dev)
       << ",\n  \"ok\": " << (ok ? "true" : "false") << "\n}\n";
  } else {
    os << "degree,triples_checked,max_abs_deviation,ok\n";
    os << degree << ',' << checked << ',' << fmt(max_dev) << ','
       << (ok ? "1" : "0") << "\n";
  }
  write_output(o, os.str());
  return ok ? kExitOk : kExitTolerance;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Linear stability and first-transition analysis of "
               "double-diffusive convection in a spherical shell"};
  app.require_subcommand(1);

  CommonOpts o_classify, o_tables, o_qsweep, o_sim, o_harm;

  CLI::App* classify = app.add_subcommand(
      "classify", "Regime report, transition number, and classification");
  add_param_flags(classify, o_classify);
  add_output_flags(classify, o_classify);

  CLI::App* tables = app.add_subcommand(
      "tables", "Recompute the reference interaction/threshold tables");
  tables->add_option("--pr", o_tables.Pr, "Prandtl number");
  add_output_flags(tables, o_tables);

  double rmin = 600.0, rmax = 660.0;
  int steps = 31;
  CLI::App* qsweep =
      app.add_subcommand("qsweep", "Transition number over an R grid");
  add_param_flags(qsweep, o_qsweep);
  add_output_flags(qsweep, o_qsweep);
  qsweep->add_option("--rmin", rmin, "grid start")->required();
  qsweep->add_option("--rmax", rmax, "grid end")->required();
  qsweep->add_option("--steps", steps, "grid size (>= 2)")->required();

  double dt = -1.0, horizon = -1.0, x0_scale = -1.0;
  std::uint64_t seed = 1;
  CLI::App* simulate = app.add_subcommand(
      "simulate", "Integrate the reduced amplitude equations");
  add_param_flags(simulate, o_sim);
  add_output_flags(simulate, o_sim);
  simulate->add_option("--dt", dt, "time step (default: auto)");
  simulate->add_option("--horizon", horizon, "integration horizon (default: auto)");
  simulate->add_option("--x0-scale", x0_scale,
                       "initial amplitude norm; 0 starts at the origin (default: auto)");
  simulate->add_option("--seed", seed, "random seed for the initial condition");

  int degree = 8;
  CLI::App* harm = app.add_subcommand(
      "harmonics-check", "Exhaustive quadrature vs closed-form comparison");
  harm->add_option("--degree", degree, "max degree (<= 16)");
  add_output_flags(harm, o_harm);

  CLI11_PARSE(app, argc, argv);

  try {
    if (classify->parsed()) return cmd_classify(o_classify);
    if (tables->parsed()) return cmd_tables(o_tables);
    if (qsweep->parsed()) return cmd_qsweep(o_qsweep, rmin, rmax, steps);
    if (simulate->parsed())
      return cmd_simulate(o_sim, dt, horizon, x0_scale, seed);
    if (harm->parsed()) return cmd_harmonics_check(o_harm, degree);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  }
  return kExitOk;
}
