// Command-line front end. Talks to the simulator only through majority.h.
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "majority/majority.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitViolation = 2;

struct Failure {
  std::string message;
};

void check(mr_status status) {
  if (status != MR_OK) throw Failure{std::string(mr_status_name(status)) + ": " + mr_last_error()};
}

// Options common to every subcommand, filled with per-subcommand defaults.
struct Common {
  std::string model = "majority";
  int d = 1;
  int n = 3;
  std::int64_t side = 0;
  double time = 0.0;
  std::uint64_t replicas = 0;
  std::uint64_t seed = 1;
  std::string out = "-";
  unsigned threads = 0;
};

struct Extras {
  std::vector<std::int64_t> m_list{12, 20, 30};
  std::vector<std::int64_t> pair_dist;
  std::vector<double> times{10.0, 50.0, 100.0};
  std::string shape_class = "mixed";
  std::int64_t margin = -1;
  std::vector<std::string> inputs;
  std::string slice_mode;
  double time_cap = 1.0e4;
};

CLI::App* add_common(CLI::App& app, const std::string& name, const std::string& description, Common& c,
                     bool with_model) {
  CLI::App* sub = app.add_subcommand(name, description);
  if (with_model)
    sub->add_option("--model", c.model, "majority or voter")
        ->check(CLI::IsMember({"majority", "voter"}))
        ->capture_default_str();
  sub->add_option("--d", c.d, "lattice dimension")->capture_default_str();
  sub->add_option("--n", c.n, "hyperedge side n")->capture_default_str();
  sub->add_option("--side", c.side, "lattice side L")->capture_default_str();
  sub->add_option("--time", c.time, "time horizon T")->capture_default_str();
  sub->add_option("--replicas", c.replicas, "number of replicas")->capture_default_str();
  sub->add_option("--seed", c.seed, "random seed")->capture_default_str();
  sub->add_option("--out", c.out, "output path ('-' for stdout)")->capture_default_str();
  sub->add_option("--threads", c.threads, "worker threads (0: available parallelism)")->capture_default_str();
  sub->add_option("--config", "file of key=value lines, same keys as the flags; explicit flags win");
  return sub;
}

std::string join_results(const CLI::Option* opt) {
  std::string s;
  for (const std::string& r : opt->results()) s += (s.empty() ? "" : ",") + r;
  return s;
}

// "# majority <sub> --key=value ..." from the resolved options, in declaration order.
std::string config_comment(const CLI::App* sub) {
  std::string line = "# majority " + sub->get_name();
  for (const CLI::Option* opt : sub->get_options()) {
    const std::string name = opt->get_name(false, true);
    if (opt->get_positional()) {
      if (opt->count()) line += ' ' + join_results(opt);
      continue;
    }
    if (opt == sub->get_help_ptr() || name == "--config" || name == "--threads" || name == "--out") continue;
    std::string value = opt->count() ? join_results(opt) : opt->get_default_str();
    if (value.size() >= 2 && value.front() == '[' && value.back() == ']') value = value.substr(1, value.size() - 2);
    line += ' ' + name + '=' + value;
  }
  return line + '\n';
}

void write_output(const std::string& path, const std::string& data) {
  if (path == "-") {
    std::cout.write(data.data(), static_cast<std::streamsize>(data.size()));
    std::cout.flush();
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Failure{"cannot open " + path + " for writing"};
  f.write(data.data(), static_cast<std::streamsize>(data.size()));
  if (!f) throw Failure{"write failed: " + path};
}

std::string take_text(mr_text& text) {
  std::string s(text.data ? text.data : "", text.size);
  mr_text_free(&text);
  return s;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

// Splices "--key=value" arguments from --config files in front of the
// explicit flags; keys also given explicitly are dropped.
std::vector<std::string> expand_config(const std::vector<std::string>& args) {
  std::vector<std::string> out;
  std::vector<std::string> config_paths;
  std::set<std::string> explicit_keys;
  for (std::size_t i = 0; i < args.size(); ++i) {
    const std::string& a = args[i];
    if (a == "--config" && i + 1 < args.size()) {
      config_paths.push_back(args[++i]);
      continue;
    }
    if (a.rfind("--config=", 0) == 0) {
      config_paths.push_back(a.substr(9));
      continue;
    }
    if (a.rfind("--", 0) == 0) {
      const auto eq = a.find('=');
      explicit_keys.insert(eq == std::string::npos ? a.substr(2) : a.substr(2, eq - 2));
    }
    out.push_back(a);
  }
  if (config_paths.empty()) return out;
  // Subcommand (and slice mode) come first; injected flags follow them.
  std::size_t pos = 1;
  while (pos < out.size() && out[pos].rfind("-", 0) != 0) ++pos;
  std::vector<std::string> injected;
  for (const std::string& path : config_paths) {
    std::ifstream f(path);
    if (!f) throw Failure{"cannot read config file " + path};
    std::string line;
    int lineno = 0;
    while (std::getline(f, line)) {
      ++lineno;
      line = trim(line);
      if (line.empty() || line[0] == '#') continue;
      const auto eq = line.find('=');
      if (eq == std::string::npos) throw Failure{path + ":" + std::to_string(lineno) + ": expected key=value"};
      std::string key = trim(line.substr(0, eq));
      if (key.rfind("--", 0) == 0) key = key.substr(2);
      if (explicit_keys.count(key)) continue;
      injected.push_back("--" + key + "=" + trim(line.substr(eq + 1)));
    }
  }
  out.insert(out.begin() + static_cast<std::ptrdiff_t>(pos), injected.begin(), injected.end());
  return out;
}

std::optional<mr_model> parse_model(const std::string& s) {
  if (s == "majority") return MR_MODEL_MAJORITY;
  if (s == "voter") return MR_MODEL_VOTER;
  return std::nullopt;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Kinetic Monte Carlo for the majority-rule model on block hypergraphs"};
  app.require_subcommand(1);
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);

  Extras x;

  Common snap{"majority", 2, 3, 400, 20.0, 1, 1, "snapshot", 0};
  CLI::App* cmd_snapshot =
      add_common(app, "snapshot", "Run from Bernoulli(1/2) on a 2D torus; write <out>.grid and <out>.pgm", snap, true);

  Common thm{"majority", 2, 3, 0, 0.0, 200, 1, "-", 0};
  CLI::App* cmd_theorem4 = add_common(app, "theorem4", "Corner identity over cluster files or a generated corpus "
                                                       "(--replicas = corpus size)", thm, false);
  cmd_theorem4->add_option("--input", x.inputs, "grid file(s); replaces the generated corpus")
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
  cmd_theorem4->add_option("--shape-class", x.shape_class, "rectangle, staircase, random_orthoconvex or mixed")
      ->check(CLI::IsMember({"rectangle", "staircase", "random_orthoconvex", "mixed"}))
      ->capture_default_str();

  Common drift{"majority", 1, 2, 0, 1000.0, 100, 1, "-", 0};
  CLI::App* cmd_drift = add_common(app, "drift1d", "Front process of the 1D model, n even", drift, false);

  Common coup{"majority", 1, 3, 0, 50.0, 500, 1, "-", 0};
  CLI::App* cmd_coupling = add_common(app, "coupling1d", "Center-path coupling check, 1D, n odd", coup, false);
  std::vector<std::int64_t> coupling_dists{1, 2, 3, 4, 5, 6};
  cmd_coupling->add_option("--pair-dist", coupling_dists, "pair distances, cycled over replicas")
      ->delimiter(',')
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll)
      ->capture_default_str();

  Common slice{"majority", 2, 2, 0, 1.0e4, 0, 1, "-", 0};
  CLI::App* cmd_slice = add_common(app, "slice", "Slice process (d=2, n=2): table | run | goodtime", slice, false);
  cmd_slice->add_option("mode", x.slice_mode, "table, run or goodtime")
      ->required()
      ->check(CLI::IsMember({"table", "run", "goodtime"}));
  cmd_slice->add_option("--time-cap", x.time_cap, "goodtime: per-replica time cap")->capture_default_str();
  cmd_slice->get_option("--replicas")->description("number of replicas (0: 100 for run, 10000 for goodtime)");

  Common ext{"majority", 2, 3, 0, 1000.0, 100, 1, "-", 0};
  CLI::App* cmd_ext = add_common(app, "extinction", "Extinction time of m x m squares (--time = time cap)", ext, false);
  cmd_ext->add_option("--m-list", x.m_list, "square sides")
      ->delimiter(',')
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll)
      ->capture_default_str();
  cmd_ext->add_option("--margin", x.margin, "window margin around the square (negative: 2m)")->capture_default_str();

  Common cs{"majority", 1, 3, 0, 0.0, 1000, 1, "-", 0};
  CLI::App* cmd_cs =
      add_common(app, "cluster-stats", "Disagreement probability at distance --pair-dist (--side 0: auto)", cs, true);
  std::vector<std::int64_t> cs_dists{1};
  cmd_cs->add_option("--times", x.times, "observation times")
      ->delimiter(',')
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll)
      ->capture_default_str();
  cmd_cs->add_option("--pair-dist", cs_dists, "pair distances")
      ->delimiter(',')
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll)
      ->capture_default_str();

  try {
    std::vector<std::string> args(argv, argv + argc);
    args = expand_config(args);
    std::vector<std::string> reversed(args.rbegin(), args.rend() - 1);
    app.parse(reversed);
  } catch (const CLI::Success& e) {
    return app.exit(e) == 0 ? kExitOk : kExitError;
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitError;
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message << '\n';
    return kExitError;
  }

  CLI::App* sub = app.get_subcommands().front();
  try {
    const auto usage = [](const std::string& msg) { throw Failure{msg}; };
    const auto reject_voter_n = [&](CLI::App* s, const Common& c) {
      if (c.model == "voter" && s->count("--n") > 0) usage("--n does not apply to --model voter");
    };

    mr_text csv{nullptr, 0};
    mr_report report{0, 0, 0};
    Common* common = nullptr;
    int exit_on_violation = kExitOk;

    if (sub == cmd_snapshot) {
      reject_voter_n(sub, snap);
      if (snap.d != 2) usage("--d must be 2 for snapshot");
      mr_snapshot_params p;
      mr_snapshot_defaults(&p);
      p.model = *parse_model(snap.model);
      p.n = snap.n;
      p.side = snap.side;
      p.horizon = snap.time;
      p.seed = snap.seed;
      mr_config* config = nullptr;
      check(mr_run_snapshot(&p, &config));
      mr_text grid{nullptr, 0}, pgm{nullptr, 0};
      std::uint64_t ones = 0, size = 0;
      const mr_status s1 = mr_config_to_text(config, &grid);
      const mr_status s2 = s1 == MR_OK ? mr_config_to_pgm(config, &pgm) : s1;
      const mr_status s3 = s2 == MR_OK ? mr_config_count(config, &ones, &size) : s2;
      mr_config_free(config);
      check(s3);
      const std::string prefix = snap.out == "-" ? "snapshot" : snap.out;
      write_output(prefix + ".grid", take_text(grid));
      write_output(prefix + ".pgm", take_text(pgm));
      std::ostringstream msg;
      msg << config_comment(sub) << "# wrote " << prefix << ".grid " << prefix << ".pgm density="
          << static_cast<double>(ones) / static_cast<double>(size) << '\n';
      std::cout << msg.str();
      return kExitOk;
    } else if (sub == cmd_theorem4) {
      common = &thm;
      mr_theorem4_params p;
      mr_theorem4_defaults(&p);
      std::vector<const char*> paths;
      for (const auto& s : x.inputs) paths.push_back(s.c_str());
      p.inputs = paths.data();
      p.input_count = paths.size();
      p.count = thm.replicas;
      p.shape_class = x.shape_class.c_str();
      p.seed = thm.seed;
      p.threads = thm.threads;
      check(mr_run_theorem4(&p, &csv, &report));
      exit_on_violation = kExitViolation;
    } else if (sub == cmd_drift) {
      common = &drift;
      mr_drift1d_params p;
      mr_drift1d_defaults(&p);
      if (drift.d != 1) usage("--d must be 1 for drift1d");
      p.n = drift.n;
      p.horizon = drift.time;
      p.replicas = drift.replicas;
      p.seed = drift.seed;
      p.threads = drift.threads;
      check(mr_run_drift1d(&p, &csv, &report));
    } else if (sub == cmd_coupling) {
      common = &coup;
      if (coup.d != 1) usage("--d must be 1 for coupling1d");
      mr_coupling1d_params p;
      mr_coupling1d_defaults(&p);
      p.n = coup.n;
      p.horizon = coup.time;
      p.replicas = coup.replicas;
      p.seed = coup.seed;
      p.threads = coup.threads;
      p.pair_dists = coupling_dists.data();
      p.pair_dist_count = coupling_dists.size();
      check(mr_run_coupling1d(&p, &csv, &report));
      exit_on_violation = kExitViolation;
    } else if (sub == cmd_slice) {
      common = &slice;
      if (slice.d != 2 || slice.n != 2) usage("the slice process needs --d 2 --n 2");
      mr_slice_params p;
      mr_slice_defaults(&p);
      p.horizon = slice.time;
      p.seed = slice.seed;
      p.threads = slice.threads;
      p.time_cap = x.time_cap;
      if (x.slice_mode == "table") {
        check(mr_run_slice_table(&p, &csv, &report));
        exit_on_violation = kExitViolation;
      } else if (x.slice_mode == "run") {
        p.replicas = slice.replicas ? slice.replicas : 100;
        check(mr_run_slice_run(&p, &csv, &report));
      } else {
        p.replicas = slice.replicas ? slice.replicas : 10000;
        check(mr_run_slice_goodtime(&p, &csv, &report));
      }
    } else if (sub == cmd_ext) {
      common = &ext;
      if (ext.d != 2) usage("--d must be 2 for extinction");
      mr_extinction_params p;
      mr_extinction_defaults(&p);
      p.m_list = x.m_list.data();
      p.m_count = x.m_list.size();
      p.margin = x.margin;
      p.n = ext.n;
      p.replicas = ext.replicas;
      p.seed = ext.seed;
      p.time_cap = ext.time;
      p.threads = ext.threads;
      check(mr_run_extinction(&p, &csv, &report));
    } else if (sub == cmd_cs) {
      common = &cs;
      reject_voter_n(sub, cs);
      mr_cluster_stats_params p;
      mr_cluster_stats_defaults(&p);
      p.model = *parse_model(cs.model);
      p.dim = cs.d;
      p.n = cs.n;
      p.side = cs.side;
      p.times = x.times.data();
      p.time_count = x.times.size();
      p.pair_dists = cs_dists.data();
      p.pair_dist_count = cs_dists.size();
      p.replicas = cs.replicas;
      p.seed = cs.seed;
      p.threads = cs.threads;
      check(mr_run_cluster_stats(&p, &csv, &report));
    }

    write_output(common->out, config_comment(sub) + take_text(csv));
    if (report.violations > 0 && exit_on_violation != kExitOk) {
      std::cerr << sub->get_name() << ": " << report.violations << " violation(s) detected\n";
      return exit_on_violation;
    }
    return kExitOk;
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message << '\n';
    return kExitError;
  }
}
