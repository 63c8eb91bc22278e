// Command-line surface over the discord library: state construction,
// value computation with method reporting, and the spin-chain series.
//
// Exit codes: 0 success, 1 file/parse/parameter errors, 2 state-validation
// or constructor-constraint violations, 3 method not applicable.

#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <tdd/discord.hpp>
#include <tdd/errors.hpp>
#include <tdd/json_io.hpp>
#include <tdd/oracle.hpp>
#include <tdd/spin_chain.hpp>
#include <tdd/state.hpp>

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitValidation = 2;
constexpr int kExitNotApplicable = 3;

std::string fmt12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

// TDD_GRID can pin the minimizer grid ("<theta>x<phi>" or a single size
// applied as N x 2N), mainly to speed up CI sweeps.
void apply_grid_env(tdd::MinimizerConfig& cfg) {
  const char* raw = std::getenv("TDD_GRID");
  if (raw == nullptr || *raw == '\0') return;
  int nt = 0, np = 0;
  char trailing = '\0';
  if (std::sscanf(raw, "%dx%d%c", &nt, &np, &trailing) == 2) {
    // parsed both sizes
  } else if (std::sscanf(raw, "%d%c", &nt, &trailing) == 1) {
    np = 2 * nt;
  } else {
    throw tdd::InvalidConfigError(std::string("TDD_GRID is not a grid size: ") + raw);
  }
  if (nt < 1 || np < 1) {
    throw tdd::InvalidConfigError(std::string("TDD_GRID sizes must be positive: ") + raw);
  }
  cfg.grid_theta = nt;
  cfg.grid_phi = np;
}

tdd::DensityMatrix read_state(const std::string& path) {
  if (path == "-") return tdd::read_state_json(std::cin);
  std::ifstream in(path);
  if (!in) {
    throw tdd::ParseError("cannot open input file: " + path);
  }
  return tdd::read_state_json(in);
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw tdd::ParseError("cannot open output file: " + path);
  }
  out << text;
}

struct ComputeOptions {
  std::string input;
  std::string method = "auto";
  bool verify = false;
  bool json = false;
  bool text = false;
};

int run_compute(const ComputeOptions& opt) {
  const tdd::DensityMatrix rho = read_state(opt.input);

  tdd::MinimizerConfig cfg;
  apply_grid_env(cfg);

  double value = 0.0;
  std::string method_name;
  std::optional<tdd::Direction> direction;
  std::optional<std::array<int, 2>> grid;
  std::optional<double> verify_numeric;
  std::optional<double> verify_oracle;

  if (opt.method == "oracle") {
    value = tdd::oracle::discord_definition(rho);
    method_name = "oracle";
  } else {
    tdd::DiscordResult res;
    if (opt.method == "numeric") {
      res = tdd::discord_numeric(tdd::to_bloch(rho), cfg);
    } else if (opt.method == "closed") {
      res = tdd::discord_closed(rho, cfg);
    } else {
      res = tdd::discord(rho, cfg);
    }
    value = res.value;
    method_name = tdd::to_string(res.method);
    direction = res.direction;
    grid = res.grid_used;
  }

  if (opt.verify) {
    verify_numeric = std::abs(value - tdd::discord_numeric(tdd::to_bloch(rho), cfg).value);
    verify_oracle = std::abs(value - tdd::oracle::discord_definition(rho));
  }

  if (opt.json) {
    std::ostringstream out;
    out << "{\n  \"value\": " << fmt12(value) << ",\n  \"method\": \""
        << method_name << "\"";
    if (direction.has_value()) {
      out << ",\n  \"theta\": " << fmt12(direction->theta())
          << ",\n  \"phi\": " << fmt12(direction->phi());
    }
    if (grid.has_value()) {
      out << ",\n  \"grid\": [" << (*grid)[0] << ", " << (*grid)[1] << "]";
    }
    if (verify_numeric.has_value()) {
      out << ",\n  \"verify_numeric\": " << fmt12(*verify_numeric)
          << ",\n  \"verify_oracle\": " << fmt12(*verify_oracle);
    }
    out << "\n}\n";
    std::cout << out.str();
    return 0;
  }

  char line[256];
  std::snprintf(line, sizeof line, "%.9f method=%s", value, method_name.c_str());
  std::string text = line;
  if (direction.has_value()) {
    std::snprintf(line, sizeof line, " theta=%.9f phi=%.9f",
                  direction->theta(), direction->phi());
    text += line;
  }
  if (verify_numeric.has_value()) {
    std::snprintf(line, sizeof line, " verify_numeric=%.3e verify_oracle=%.3e",
                  *verify_numeric, *verify_oracle);
    text += line;
  }
  text += "\n";
  std::cout << text;
  return 0;
}

struct SpinChainOptions {
  int n = 3;
  double j = 1.0;
  double t_max = 5.0;
  int steps = 500;
  std::string out;
};

int run_spin_chain(const SpinChainOptions& opt) {
  if (opt.steps < 1) {
    throw tdd::InvalidConfigError("--steps must be at least 1");
  }
  if (!(opt.t_max >= 0.0)) {
    throw tdd::InvalidConfigError("--t-max must be non-negative");
  }

  tdd::spinchain::ChainConfig cfg;
  cfg.n = opt.n;
  cfg.j = opt.j;
  apply_grid_env(cfg.minimizer);
  if (opt.steps == 1) {
    cfg.times.push_back(0.0);
  } else {
    for (int i = 0; i < opt.steps; ++i) {
      cfg.times.push_back(opt.t_max * i / (opt.steps - 1));
    }
  }

  const auto samples = tdd::spinchain::run_series(cfg);

  std::string csv = "t,abs_f,d_eq87,d_xstate,d_numeric\n";
  double best_d = -1.0;
  double best_mod = 0.0;
  double best_t = 0.0;
  for (const auto& s : samples) {
    const double mod = std::abs(s.f);
    csv += fmt12(s.t) + "," + fmt12(mod) + "," + fmt12(s.d) + "," +
           fmt12(s.d_x_state) + "," + fmt12(s.d_numeric) + "\n";
    if (s.d > best_d) {
      best_d = s.d;
      best_mod = mod;
      best_t = s.t;
    }
  }
  write_text(opt.out, csv);

  char line[192];
  std::snprintf(line, sizeof line,
                "maximum d_eq87=%.12g at abs_f=%.12g (t=%.12g)\n", best_d,
                best_mod, best_t);
  // Keep the CSV stream clean when it goes to stdout.
  if (opt.out.empty()) {
    std::cerr << line;
  } else {
    std::cout << line;
  }
  return 0;
}

struct MakeQcOptions {
  double p = 0.0;
  std::vector<double> s0;
  std::vector<double> s1;
  std::string out;
};

struct MakeXOptions {
  std::vector<double> diag;
  std::vector<double> rho32{0.0, 0.0};
  std::vector<double> rho41{0.0, 0.0};
  std::string out;
};

struct MakeBellOptions {
  std::vector<double> c;
  std::string out;
};

tdd::Vec3 vec3_of(const std::vector<double>& v, const char* flag) {
  if (v.size() != 3) {
    throw tdd::InvalidConfigError(std::string(flag) + " needs exactly 3 comma-separated values");
  }
  return tdd::Vec3(v[0], v[1], v[2]);
}

int run_make_qc(const MakeQcOptions& opt) {
  const tdd::DensityMatrix rho = tdd::make_quantum_classical(
      opt.p, vec3_of(opt.s0, "--s0"), vec3_of(opt.s1, "--s1"));
  write_text(opt.out, tdd::write_state_json(rho));
  return 0;
}

int run_make_x(const MakeXOptions& opt) {
  if (opt.diag.size() != 4) {
    throw tdd::InvalidConfigError("--diag needs exactly 4 comma-separated values");
  }
  if (opt.rho32.size() != 2 || opt.rho41.size() != 2) {
    throw tdd::InvalidConfigError("--rho32/--rho41 need re,im pairs");
  }
  const tdd::DensityMatrix rho = tdd::make_x_state(
      opt.diag[0], opt.diag[1], opt.diag[2], opt.diag[3],
      tdd::Complex(opt.rho32[0], opt.rho32[1]),
      tdd::Complex(opt.rho41[0], opt.rho41[1]));
  write_text(opt.out, tdd::write_state_json(rho));
  return 0;
}

int run_make_bell(const MakeBellOptions& opt) {
  if (opt.c.size() != 3) {
    throw tdd::InvalidConfigError("--c needs exactly 3 comma-separated values");
  }
  const tdd::DensityMatrix rho = tdd::make_bell_diagonal(opt.c[0], opt.c[1], opt.c[2]);
  write_text(opt.out, tdd::write_state_json(rho));
  return 0;
}

int dispatch(int argc, char** argv) {
  CLI::App app{"one-sided trace-distance discord for two-qubit states"};
  app.require_subcommand(1);

  ComputeOptions copt;
  auto* compute = app.add_subcommand(
      "compute", "compute the discord of a state read from JSON");
  compute->add_option("--input", copt.input, "state JSON file, or - for stdin")
      ->required();
  compute->add_option("--method", copt.method, "auto|numeric|oracle|closed")
      ->check(CLI::IsMember({"auto", "numeric", "oracle", "closed"}));
  compute->add_flag("--verify", copt.verify,
                    "cross-check against the numeric and oracle routes");
  compute->add_flag("--json", copt.json, "machine-readable output");
  compute->add_flag("--text", copt.text, "single-line text output (default)");

  SpinChainOptions sopt;
  auto* chain = app.add_subcommand(
      "spin-chain", "end-to-end transfer discord series for an XX chain");
  chain->add_option("--n", sopt.n, "chain length (>= 2)");
  chain->add_option("--j", sopt.j, "coupling strength (> 0)");
  chain->add_option("--t-max", sopt.t_max, "final time");
  chain->add_option("--steps", sopt.steps, "number of samples (>= 1)");
  chain->add_option("--out", sopt.out, "CSV path (stdout when omitted)");

  auto* make = app.add_subcommand("make", "emit constructor states as JSON");
  make->require_subcommand(1);

  MakeQcOptions qopt;
  auto* make_qc = make->add_subcommand("qc", "quantum-classical state");
  make_qc->add_option("--p", qopt.p, "branch weight in [0, 1]")->required();
  make_qc->add_option("--s0", qopt.s0, "first Bloch vector x,y,z")
      ->required()
      ->delimiter(',');
  make_qc->add_option("--s1", qopt.s1, "second Bloch vector x,y,z")
      ->required()
      ->delimiter(',');
  make_qc->add_option("--out", qopt.out, "output path (stdout when omitted)");

  MakeXOptions xopt;
  auto* make_x = make->add_subcommand("x", "X-shaped state");
  make_x->add_option("--diag", xopt.diag, "diagonal rho11,rho22,rho33,rho44")
      ->required()
      ->delimiter(',');
  make_x->add_option("--rho32", xopt.rho32, "inner corner re,im")->delimiter(',');
  make_x->add_option("--rho41", xopt.rho41, "outer corner re,im")->delimiter(',');
  make_x->add_option("--out", xopt.out, "output path (stdout when omitted)");

  MakeBellOptions bopt;
  auto* make_bell = make->add_subcommand("bell-diagonal", "Bell-diagonal state");
  make_bell->add_option("--c", bopt.c, "correlation triple c1,c2,c3")
      ->required()
      ->delimiter(',');
  make_bell->add_option("--out", bopt.out, "output path (stdout when omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      return app.exit(e);  // --help and friends
    }
    app.exit(e);
    return kExitUsage;
  }

  if (compute->parsed()) return run_compute(copt);
  if (chain->parsed()) return run_spin_chain(sopt);
  if (make_qc->parsed()) return run_make_qc(qopt);
  if (make_x->parsed()) return run_make_x(xopt);
  if (make_bell->parsed()) return run_make_bell(bopt);
  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return dispatch(argc, argv);
  } catch (const tdd::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const tdd::InvalidConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const tdd::NotApplicableError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNotApplicable;
  } catch (const tdd::NonHermitianError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const tdd::TraceNotOneError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const tdd::NotPositiveError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const tdd::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const tdd::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
