#include "orlicz/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "orlicz/acceptance.hpp"
#include "orlicz/besov.hpp"
#include "orlicz/config.hpp"
#include "orlicz/csv.hpp"
#include "orlicz/democracy.hpp"
#include "orlicz/embeddings.hpp"
#include "orlicz/error.hpp"
#include "orlicz/greedy.hpp"
#include "orlicz/numeric.hpp"

namespace orlicz {

namespace {

namespace fs = std::filesystem;

// Every setting that may come from a flag or a config file, with defaults.
const std::map<std::string, std::string>& defaults() {
  static const std::map<std::string, std::string> d = {
      {"dim", "1"},          {"J", "8"},           {"M", "0"},
      {"weight", "const"},   {"young", "power:p=2"}, {"function", "bump"},
      {"wavelet", "haar"},   {"seed", "1"},        {"out", ""},
      {"plotscript", ""},    {"N", "8"},           {"alpha", "0.5"},
      {"q", "1"},            {"sigma-mode", "support"}, {"Nmax", "64"},
      {"trials", "4"},       {"generators", "a,b,c"}, {"witness", "false"},
      {"gamma", "0.25"},     {"p", "2"},           {"out-dir", "selftest_out"}};
  return d;
}

struct Settings {
  std::map<std::string, std::string> flags;  // values bound to CLI11 options
  std::map<std::string, CLI::Option*> options;
  std::string config_path;

  void add(CLI::App* app, const std::string& key, const std::string& help) {
    if (key == "witness")
      options[key] = app->add_flag("--" + key + "{true}", flags[key], help);
    else
      options[key] = app->add_option("--" + key, flags[key], help);
  }
};

bool is_path_kind(const std::string& spec) {
  return spec.rfind("file:", 0) == 0 || spec.rfind("table:", 0) == 0;
}

class Resolved {
public:
  Resolved(const Settings& s, const std::vector<std::string>& keys) {
    values_ = defaults();
    if (!s.config_path.empty()) {
      const ConfigFile cfg = ConfigFile::load(s.config_path);
      const fs::path dir = fs::path(s.config_path).parent_path();
      for (const std::string& k : cfg.keys()) {
        if (!defaults().count(k)) throw ConfigError("unknown key '" + k + "'", cfg.line_of(k));
        std::string v = *cfg.get(k);
        // file paths inside a config are relative to the config itself
        if ((k == "function" || k == "weight" || k == "young") && is_path_kind(v)) {
          const std::size_t colon = v.find(':');
          const std::string rest = v.substr(colon + 1);
          const std::size_t comma = rest.find(',');
          const fs::path p(rest.substr(0, comma));
          if (p.is_relative() && !dir.empty())
            v = v.substr(0, colon + 1) + (dir / p).string() +
                (comma == std::string::npos ? "" : rest.substr(comma));
        }
        values_[k] = v;
        lines_[k] = cfg.line_of(k);
      }
    }
    for (const std::string& k : keys) {
      auto it = s.options.find(k);
      if (it != s.options.end() && it->second->count() > 0) {
        values_[k] = s.flags.at(k);
        lines_.erase(k);
      }
    }
  }

  const std::string& str(const std::string& k) const { return values_.at(k); }

  double number(const std::string& k) const {
    return wrap(k, [&] { return parse_double(str(k), k); });
  }
  long integer(const std::string& k) const {
    return wrap(k, [&] { return parse_long(str(k), k); });
  }
  bool flag(const std::string& k) const {
    const std::string& v = str(k);
    if (v == "true" || v == "1" || v == "yes") return true;
    if (v == "false" || v == "0" || v == "no" || v.empty()) return false;
    return wrap(k, [&]() -> bool { throw InvalidArgument("expected a boolean for " + k); });
  }

private:
  // reports config-file values with their line number
  template <class F>
  auto wrap(const std::string& k, F&& f) const -> decltype(f()) {
    try {
      return f();
    } catch (const Error& e) {
      auto it = lines_.find(k);
      if (it != lines_.end()) throw ConfigError(e.what(), it->second);
      throw;
    }
  }

  std::map<std::string, std::string> values_;
  std::map<std::string, int> lines_;
};

const std::vector<std::string> grid_keys = {"dim", "J", "M", "weight", "young", "function",
                                            "wavelet", "out", "plotscript"};

struct Space {
  Ambient X;
  GridFunction f;
  WaveletFamily family;
};

Space build_space(const Resolved& r, const YoungFunction* young_override = nullptr) {
  int dim = static_cast<int>(r.integer("dim"));
  int J = static_cast<int>(r.integer("J"));
  int M = static_cast<int>(r.integer("M"));
  const std::string fspec = r.str("function");
  // a grid file fixes the shape
  if (fspec.rfind("file:", 0) == 0) {
    const GridFile g = read_grid_file(parse_kind_spec(fspec).path);
    dim = g.dim;
    J = g.finest_level;
    M = g.domain_levels;
  }
  if (dim != 1 && dim != 2) throw InvalidArgument("dim must be 1 or 2");
  if (J < 1 || M < 0 || (J + M) * dim > 24) throw InvalidArgument("grid levels out of range");
  YoungFunction F = young_override ? *young_override : YoungFunction::parse(r.str("young"));
  return Space{Ambient(make_weight(r.str("weight"), dim, J, M), std::move(F)),
               make_function(fspec, dim, J, M), WaveletFamily::parse(r.str("wavelet"))};
}

void emit(const CsvTable& t, const Resolved& r, bool log_axes) {
  const std::string out = r.str("out");
  const std::string plot = r.str("plotscript");
  if (out.empty()) {
    t.write(std::cout);
  } else {
    t.save(out);
  }
  if (!plot.empty()) {
    if (out.empty()) throw InvalidArgument("--plotscript needs --out");
    std::ofstream f(plot);
    if (!f) throw Error("cannot write " + plot);
    f << plot_script(out, t.header(), log_axes);
  }
}

int cmd_norm(const Resolved& r) {
  const Space s = build_space(r);
  const double v = s.X.norm(s.f);
  std::printf("%s\n", format_number(v).c_str());
  if (!r.str("out").empty()) {
    CsvTable t({"norm"});
    t.add({v});
    t.save(r.str("out"));
  }
  return 0;
}

int cmd_greedy(const Resolved& r) {
  const Space s = build_space(r);
  const long Nl = r.integer("N");
  if (Nl < 0) throw InvalidArgument("--N must be nonnegative");
  const std::size_t N = static_cast<std::size_t>(Nl);
  const SigmaMode mode = parse_sigma_mode(r.str("sigma-mode"));
  if (mode == SigmaMode::greedy) throw InvalidArgument("--sigma-mode must be exhaustive or support");
  const RankedExpansion re(analyze(s.f, s.family), s.X.atoms());
  std::vector<std::size_t> Ns(N + 1);
  for (std::size_t i = 0; i <= N; ++i) Ns[i] = i;
  const auto g = greedy_error_profile(re, Ns, s.X);
  const auto sup = sigma_profile(re, N, s.X, SigmaMode::support);
  std::vector<double> ex;
  std::vector<std::string> header = {"N", "greedy_error", "sigma_support"};
  if (mode == SigmaMode::exhaustive) {
    ex = sigma_profile(re, N, s.X, SigmaMode::exhaustive);
    header.push_back("sigma_exhaustive");
  }
  header.push_back("ratio");
  CsvTable t(header);
  for (std::size_t i = 0; i <= N; ++i) {
    const double ratio = sup[i] > 0.0 ? g[i] / sup[i] : (g[i] > 0.0 ? INFINITY : 1.0);
    std::vector<CsvTable::Cell> row = {static_cast<long long>(i), g[i], sup[i]};
    if (!ex.empty()) row.push_back(ex[i]);
    row.push_back(ratio);
    t.add(std::move(row));
  }
  emit(t, r, false);
  const double alpha = r.number("alpha"), q = r.number("q");
  std::fprintf(stderr, "terms %zu, scaling remainder norm %s, approximation norm (alpha=%g, q=%g, greedy) %s\n",
               re.size(), format_number(scaling_remainder_norm(re, s.X)).c_str(), alpha, q,
               format_number(approx_space_norm(re, alpha, q, s.X, SigmaMode::greedy)).c_str());
  return 0;
}

int cmd_democracy(const Resolved& r) {
  const Space s = build_space(r);
  const long Nmax = r.integer("Nmax"), trials = r.integer("trials");
  if (Nmax < 1 || trials < 1) throw InvalidArgument("--Nmax and --trials must be positive");
  const ProbeResult res = democracy_probe(s.X, dyadic_range(static_cast<std::size_t>(Nmax)),
                                          static_cast<std::size_t>(trials),
                                          static_cast<std::uint64_t>(r.integer("seed")),
                                          parse_generators(r.str("generators")));
  CsvTable t({"N", "gen", "norm", "surrogate", "h_minus", "h_plus"});
  for (const ProbeRow& row : res.rows)
    t.add({static_cast<long long>(row.N), to_string(row.gen), row.norm, row.surrogate,
           row.h_minus, row.h_plus});
  emit(t, r, true);
  return 0;
}

int cmd_embeddings(const Resolved& r) {
  const Space s = build_space(r);
  const double alpha = r.number("alpha"), q = r.number("q");
  const SigmaMode mode = parse_sigma_mode(r.str("sigma-mode"));
  if (r.flag("witness")) {
    CsvTable t({"N", "tau_plus", "tau_minus", "h_plus", "h_minus", "sigma_N", "approx_norm",
                "implied_lower", "brick_norm", "implied_upper", "plus_left", "plus_middle",
                "plus_right", "minus_left", "minus_middle", "minus_right"});
    const long Nmax = r.integer("Nmax");
    if (Nmax < 1) throw InvalidArgument("--Nmax must be positive");
    for (std::size_t N : dyadic_range(static_cast<std::size_t>(Nmax))) {
      const OptimalityReport w = optimality_witness(s.X, alpha, q, N, mode);
      t.add({static_cast<long long>(N), w.tau_plus, w.tau_minus, w.h_plus, w.h_minus, w.sigma_N,
             w.approx_norm, w.implied_lower, w.brick_norm, w.implied_upper, w.chain_plus.left,
             w.chain_plus.middle, w.chain_plus.right, w.chain_minus.left, w.chain_minus.middle,
             w.chain_minus.right});
    }
    emit(t, r, true);
    return 0;
  }
  const RankedExpansion re(analyze(s.f, s.family), s.X.atoms());
  const EmbeddingReport e = embedding_check(re, alpha, q, s.X, mode);
  CsvTable t({"alpha", "q", "left", "middle", "right", "left_over_middle", "middle_over_right"});
  t.add({alpha, q, e.left, e.middle, e.right, e.left / e.middle, e.middle / e.right});
  emit(t, r, false);
  return 0;
}

int cmd_besov(const Resolved& r) {
  const double p = r.number("p");
  if (!(p > 1.0)) throw InvalidArgument("--p must exceed 1");
  const YoungFunction F = YoungFunction::power(p);
  const Space s = build_space(r, &F);
  const IdentificationReport rep =
      besov_identification_check(analyze(s.f, s.family), r.number("gamma"), s.X);
  if (rep.ap_warning)
    std::fprintf(stderr, "warning: w^{tau/p} has no finite A_tau constant on this grid\n");
  CsvTable t({"tau", "norm_a", "norm_b", "norm_c", "ratio_ab", "ratio_ac", "ratio_bc"});
  t.add({rep.tau, rep.a, rep.b, rep.c, rep.ratio_ab, rep.ratio_ac, rep.ratio_bc});
  emit(t, r, false);
  return 0;
}

int cmd_selftest(const Resolved& r) {
  AcceptanceOptions o;
  o.out_dir = r.str("out-dir");
  o.seed = static_cast<std::uint64_t>(r.integer("seed"));
  return run_acceptance_suite(o, std::cout);
}

}  // namespace

int run_cli(int argc, char** argv) {
  CLI::App app{"Greedy N-term wavelet approximation in weighted Orlicz spaces"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "orlicz-greedy 1.0");

  struct Command {
    CLI::App* app;
    Settings settings;
    std::vector<std::string> keys;
    int (*run)(const Resolved&);
  };
  std::vector<Command> cmds;
  cmds.reserve(6);
  auto add = [&](const std::string& name, const std::string& help,
                 std::vector<std::string> extra, int (*run)(const Resolved&), bool grid = true) {
    cmds.push_back(Command{app.add_subcommand(name, help), {}, {}, run});
    Command& c = cmds.back();
    c.app->add_option("--config", c.settings.config_path, "key = value configuration file")
        ->check(CLI::ExistingFile);
    if (grid) c.keys = grid_keys;
    c.keys.insert(c.keys.end(), extra.begin(), extra.end());
    for (const std::string& k : c.keys) c.settings.add(c.app, k, "default: " + defaults().at(k));
  };
  add("norm", "Luxemburg norm of a grid function", {}, cmd_norm);
  add("greedy", "greedy errors and N-term errors", {"N", "alpha", "q", "sigma-mode"}, cmd_greedy);
  add("democracy", "brick norms against the dilation envelopes",
      {"Nmax", "trials", "seed", "generators"}, cmd_democracy);
  add("embeddings", "Lorentz embedding chain, or optimality witnesses with --witness",
      {"alpha", "q", "sigma-mode", "witness", "Nmax"}, cmd_embeddings);
  add("besov", "Besov identification norms", {"gamma", "p"}, cmd_besov);
  add("selftest", "run the acceptance suite twice", {"seed", "out-dir"}, cmd_selftest, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }
  try {
    for (Command& c : cmds)
      if (c.app->parsed()) return c.run(Resolved(c.settings, c.keys));
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 1;
}

}  // namespace orlicz
