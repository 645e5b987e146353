// qkdsec: security-analysis CLI for multilevel quantum key distribution.
//
// Subcommands: mubs, fig1, fig2, fig3, thresholds, link, simulate.
// Figure data goes out as CSV (or JSON with --format json), structured
// objects as JSON. Exit codes: 0 success, 2 usage error, 3 no secure regime.

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

#include "qkdsec/attacks.hpp"
#include "qkdsec/info.hpp"
#include "qkdsec/mub.hpp"
#include "qkdsec/realistic.hpp"
#include "qkdsec/security.hpp"
#include "qkdsec/sim.hpp"

using json = nlohmann::ordered_json;
using namespace qkdsec;

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitNoSecureRegime = 3;

// Every numeric value is emitted as a decimal string with 12 significant
// digits, CSV and JSON alike.
std::string fmt12(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%#.12g", v);
  return buf;
}

double round12(double v) { return std::stod(fmt12(v)); }

// stdout by default, file when --out is given
class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw CLI::ValidationError("--out", "cannot open " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

// Column-named rows; renders as CSV (header first) or a JSON row array.
class Table {
 public:
  explicit Table(std::vector<std::string> columns)
      : columns_(std::move(columns)) {}

  void add_row(std::vector<json> cells) { rows_.push_back(std::move(cells)); }

  void emit(std::ostream& os, const std::string& format) const {
    if (format == "json") {
      json arr = json::array();
      for (const auto& row : rows_) {
        json obj;
        for (std::size_t i = 0; i < columns_.size(); ++i)
          obj[columns_[i]] = row[i];
        arr.push_back(std::move(obj));
      }
      os << arr.dump(2) << "\n";
      return;
    }
    for (std::size_t i = 0; i < columns_.size(); ++i)
      os << columns_[i] << (i + 1 < columns_.size() ? "," : "\n");
    for (const auto& row : rows_) {
      for (std::size_t i = 0; i < row.size(); ++i) {
        if (row[i].is_number_float())
          os << fmt12(row[i].get<double>());
        else
          os << row[i].dump();
        os << (i + 1 < row.size() ? "," : "\n");
      }
    }
  }

 private:
  std::vector<std::string> columns_;
  std::vector<std::vector<json>> rows_;
};

json basis_to_json(const Basis& basis) {
  json rows = json::array();
  for (std::size_t r = 0; r < basis.vectors.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < basis.vectors.cols(); ++c) {
      const cplx z = basis.vectors(r, c);
      row.push_back({round12(z.real()), round12(z.imag())});
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

void require_supported(int dim) {
  if (!is_supported_dimension(dim))
    throw std::invalid_argument("dimension " + std::to_string(dim) +
                                " is not supported (prime powers with a "
                                "pinned construction only)");
}

struct LinkFlags {
  LinkParams lp;
  std::string threshold = "incoherent";
  std::string qber_mode = "approx";

  ThresholdKind threshold_kind() const {
    return threshold == "coherent" ? ThresholdKind::kCoherent
                                   : ThresholdKind::kIncoherent;
  }
  QberMode mode() const {
    return qber_mode == "exact" ? QberMode::kExact : QberMode::kApprox;
  }
};

void add_link_flags(CLI::App* cmd, LinkFlags& flags) {
  cmd->add_option("--mu", flags.lp.mu, "Mean photon number per symbol")
      ->capture_default_str();
  cmd->add_option("--eta", flags.lp.eta_d, "Detector quantum efficiency")
      ->capture_default_str();
  cmd->add_option("--alpha-db-km", flags.lp.alpha_db_per_km,
                  "Channel attenuation (dB/km)")
      ->capture_default_str();
  cmd->add_option("--pdark", flags.lp.p_dark,
                  "Dark-count probability per detector per gate")
      ->capture_default_str();
  cmd->add_option("--length-km", flags.lp.length_km, "Transmission length (km)")
      ->capture_default_str();
  cmd->add_option("--threshold", flags.threshold,
                  "Security threshold for the distance limit")
      ->check(CLI::IsMember({"incoherent", "coherent"}))
      ->capture_default_str();
  cmd->add_option("--qber", flags.qber_mode, "QBER form")
      ->check(CLI::IsMember({"exact", "approx"}))
      ->capture_default_str();
}

// ---------------------------------------------------------------- mubs ----
int cmd_mubs(int dim, const std::string& out_path) {
  const MubFamily fam = build_mub_family(PrimePowerDim::of(dim));
  const int n = fam.dim.n;

  json doc;
  doc["dim"] = n;
  doc["num_bases"] = fam.size();
  doc["expected_overlap"] = round12(1.0 / std::sqrt(static_cast<double>(n)));
  json bases = json::array();
  for (const Basis& b : fam.bases) bases.push_back(basis_to_json(b));
  doc["bases"] = std::move(bases);

  json report = json::array();
  for (int a = 0; a < fam.size(); ++a)
    for (int b = 0; b < fam.size(); ++b) {
      if (a == b) continue;
      const CMatrix cross =
          fam.bases[a].vectors.adjoint() * fam.bases[b].vectors;
      json mags = json::array();
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          mags.push_back(round12(std::abs(cross(i, j))));
      report.push_back({{"basis_a", a}, {"basis_b", b},
                        {"magnitudes", std::move(mags)}});
    }
  doc["cross_overlaps"] = std::move(report);

  Output out(out_path);
  out.stream() << doc.dump(2) << "\n";
  return 0;
}

// ---------------------------------------------------------------- fig1 ----
int cmd_fig1(const std::vector<int>& dims, int bases_override, int grid_size,
             const std::string& format, const std::string& out_path) {
  Table table({"N", "e_B", "R_AB"});
  for (int n : dims) {
    require_supported(n);
    const int m = bases_override > 0 ? bases_override : n + 1;
    if (m > n + 1)
      throw CLI::ValidationError("--bases", "M exceeds N+1 for N=" +
                                                std::to_string(n));
    const double e_top = (n - 1.0) / n;
    const double e_star = incoherent_threshold(n).e_max;
    bool crossing_emitted = false;
    for (int i = 0; i <= grid_size; ++i) {
      const double e = e_top * i / grid_size;
      if (!crossing_emitted && e >= e_star) {
        table.add_row({n, round12(e_star),
                       round12(rate_ab(n, m, e_star).rate_bits)});
        crossing_emitted = true;
        if (e == e_star) continue;
      }
      table.add_row({n, round12(e), round12(rate_ab(n, m, e).rate_bits)});
    }
  }
  Output out(out_path);
  table.emit(out.stream(), format);
  return 0;
}

// ---------------------------------------------------------------- fig2 ----
int cmd_fig2(int max_dim, const std::string& format,
             const std::string& out_path) {
  Table table({"N", "e_incoherent", "e_coherent"});
  for (int n : supported_dimensions(std::max(max_dim, 2))) {
    if (n > max_dim) break;
    table.add_row({n, round12(incoherent_threshold(n).e_max),
                   round12(coherent_threshold(n).e_max)});
  }
  Output out(out_path);
  table.emit(out.stream(), format);
  return 0;
}

// ---------------------------------------------------------------- fig3 ----
int cmd_fig3(const std::vector<int>& dims, const LinkFlags& flags,
             double max_km, int grid_size, const std::string& format,
             const std::string& out_path) {
  Table table({"N", "L_km", "QBER", "R_AB"});
  int secure_dims = 0;
  for (int n : dims) {
    require_supported(n);
    LinkParams lp = flags.lp;
    lp.dim = n;
    lp.bases = n + 1;
    const MaxDistance md = max_distance(lp, flags.threshold_kind());
    if (md.kind == MaxDistance::Kind::kNoSecureDistance) {
      std::cerr << "fig3: no secure distance for N=" << n
                << " at these parameters\n";
      continue;
    }
    ++secure_dims;
    std::vector<double> grid;
    grid.reserve(grid_size + 1);
    for (int i = 0; i <= grid_size; ++i) grid.push_back(max_km * i / grid_size);
    for (const DistancePoint& pt : rate_vs_distance(lp, grid, flags.mode()))
      table.add_row({n, round12(pt.length_km), round12(pt.qber),
                     round12(pt.rate_bits)});
    if (md.kind == MaxDistance::Kind::kFinite) {
      LinkParams at = lp;
      at.length_km = md.length_km;
      const double q = qber(at, flags.mode());
      const double e_b = std::min(q, (n - 1.0) / n);
      table.add_row({n, round12(md.length_km), round12(q),
                     round12(rate_ab(n, lp.bases, e_b).rate_bits)});
    }
  }
  Output out(out_path);
  table.emit(out.stream(), format);
  return secure_dims > 0 ? 0 : kExitNoSecureRegime;
}

// ----------------------------------------------------------- thresholds ----
int cmd_thresholds(int dim, const std::string& format,
                   const std::string& out_path) {
  require_supported(dim);
  const ThresholdResult inc = incoherent_threshold(dim);
  const ThresholdResult coh = coherent_threshold(dim);
  Output out(out_path);
  std::ostream& os = out.stream();
  if (format == "csv") {
    Table table({"N", "e_incoherent", "residual_incoherent", "e_coherent",
                 "residual_coherent"});
    table.add_row({dim, round12(inc.e_max), round12(inc.residual),
                   round12(coh.e_max), round12(coh.residual)});
    table.emit(os, format);
  } else {
    json doc;
    doc["dim"] = dim;
    doc["incoherent"] = {{"e_max", round12(inc.e_max)},
                         {"residual", round12(inc.residual)}};
    doc["coherent"] = {{"e_max", round12(coh.e_max)},
                       {"residual", round12(coh.residual)}};
    os << doc.dump(2) << "\n";
  }
  return 0;
}

// ---------------------------------------------------------------- link ----
int cmd_link(int dim, int bases, const LinkFlags& flags,
             const std::string& out_path) {
  require_supported(dim);
  LinkParams lp = flags.lp;
  lp.dim = dim;
  lp.bases = bases > 0 ? bases : dim + 1;

  const double q = qber(lp, flags.mode());
  const double e_b = std::min(q, (dim - 1.0) / dim);
  const MaxDistance md = max_distance(lp, flags.threshold_kind());

  json doc;
  doc["params"] = {{"mu", lp.mu},
                   {"eta", lp.eta_d},
                   {"alpha_db_km", lp.alpha_db_per_km},
                   {"pdark", lp.p_dark},
                   {"length_km", lp.length_km},
                   {"dim", lp.dim},
                   {"bases", lp.bases},
                   {"threshold", flags.threshold},
                   {"qber_form", flags.qber_mode}};
  doc["qber"] = round12(q);
  doc["e_b"] = round12(e_b);
  doc["rate_bits"] = round12(rate_ab(lp.dim, lp.bases, e_b).rate_bits);
  doc["thresholds"] = {
      {"incoherent", round12(incoherent_threshold(dim).e_max)},
      {"coherent", round12(coherent_threshold(dim).e_max)}};
  switch (md.kind) {
    case MaxDistance::Kind::kFinite:
      doc["max_distance_km"] = round12(md.length_km);
      break;
    case MaxDistance::Kind::kUnbounded:
      doc["max_distance_km"] = "unbounded";
      break;
    case MaxDistance::Kind::kNoSecureDistance:
      doc["max_distance_km"] = nullptr;
      break;
  }

  Output out(out_path);
  out.stream() << doc.dump(2) << "\n";
  if (md.kind == MaxDistance::Kind::kNoSecureDistance) {
    std::cerr << "link: no secure distance at these parameters\n";
    return kExitNoSecureRegime;
  }
  return 0;
}

// ------------------------------------------------------------- simulate ----
int cmd_simulate(int dim, int bases, const std::string& attack_name,
                 const std::string& beta_arg, std::uint64_t n_symbols,
                 std::uint64_t seed, const std::string& transcript_path,
                 const std::string& out_path) {
  ProtocolConfig cfg;
  cfg.dim = dim;
  cfg.bases = bases > 0 ? bases : dim + 1;
  cfg.n_symbols = n_symbols;
  cfg.seed = seed;

  double analytic_e = 0.0, analytic_iab = std::log2(dim), analytic_iae = 0.0;
  if (attack_name == "none") {
    cfg.attack = NoAttack{};
  } else if (attack_name == "intercept-resend") {
    cfg.attack = InterceptResend{};
    const AttackStats s = intercept_resend_stats(cfg.dim, cfg.bases);
    analytic_e = s.e_b;
    analytic_iab = s.i_ab_bits;
    analytic_iae = s.i_ae_bits;
  } else {  // cloner
    double beta_value = 0.0;
    if (beta_arg != "symmetric") {
      try {
        std::size_t pos = 0;
        beta_value = std::stod(beta_arg, &pos);
        if (pos != beta_arg.size()) throw std::invalid_argument(beta_arg);
      } catch (const std::exception&) {
        throw CLI::ValidationError("--beta",
                                   "expected a number in [0,1] or 'symmetric'");
      }
    }
    const ClonerAsymmetry asym = beta_arg == "symmetric"
                                     ? ClonerAsymmetry::symmetric(dim)
                                     : cloner_from_beta(beta_value, dim);
    cfg.attack = Cloner{asym};
    analytic_e = 1.0 - fidelities(asym).bob;
    analytic_iab = i_ab_cloner(asym);
    analytic_iae = i_ae_cloner(asym);
  }

  std::unique_ptr<std::ofstream> transcript;
  if (!transcript_path.empty()) {
    transcript = std::make_unique<std::ofstream>(transcript_path);
    if (!*transcript)
      throw CLI::ValidationError("--transcript",
                                 "cannot open " + transcript_path);
  }
  const TranscriptStats stats = run_protocol(cfg, transcript.get());

  const auto n_sift = static_cast<double>(stats.n_sifted);
  const double sift_sigma = std::sqrt(
      cfg.n_symbols * (1.0 / cfg.bases) * (1.0 - 1.0 / cfg.bases));
  const double e_sigma =
      n_sift > 0 && analytic_e > 0.0
          ? std::sqrt(analytic_e * (1.0 - analytic_e) / n_sift)
          : 0.0;

  json doc;
  doc["config"] = {{"dim", cfg.dim},
                   {"bases", cfg.bases},
                   {"symbols", cfg.n_symbols},
                   {"attack", attack_name},
                   {"seed", cfg.seed}};
  if (attack_name == "cloner") {
    const ClonerAsymmetry& asym = std::get<Cloner>(cfg.attack).asym;
    doc["config"]["alpha"] = round12(asym.alpha);
    doc["config"]["beta"] = round12(asym.beta);
  }
  doc["empirical"] = {{"n_sifted", stats.n_sifted},
                      {"n_errors", stats.n_errors},
                      {"e_hat", round12(stats.e_hat)},
                      {"i_ab_hat", round12(stats.i_ab_hat)},
                      {"i_ae_hat", round12(stats.i_ae_hat)}};
  doc["analytic"] = {{"e_b", round12(analytic_e)},
                     {"i_ab", round12(analytic_iab)},
                     {"i_ae", round12(analytic_iae)}};
  doc["z_scores"] = {
      {"sift",
       round12((stats.n_sifted - cfg.n_symbols / static_cast<double>(cfg.bases)) /
               sift_sigma)},
      {"e_hat",
       e_sigma > 0.0 ? round12((stats.e_hat - analytic_e) / e_sigma) : 0.0}};
  doc["deltas"] = {{"i_ab", round12(stats.i_ab_hat - analytic_iab)},
                   {"i_ae", round12(stats.i_ae_hat - analytic_iae)}};

  Output out(out_path);
  out.stream() << doc.dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Security analysis toolkit for N-level quantum key distribution"};
  app.require_subcommand(1);

  std::string out_path;
  std::string format = "csv";
  const auto add_common = [&](CLI::App* cmd, bool with_format) {
    cmd->add_option("--out", out_path,
                    "Write output to a file instead of stdout");
    if (with_format)
      cmd->add_option("--format", format, "Output format")
          ->check(CLI::IsMember({"csv", "json"}))
          ->capture_default_str();
  };

  // mubs
  auto* mubs = app.add_subcommand(
      "mubs", "Emit a mutually unbiased basis family with its overlap report");
  int mubs_dim = 2;
  mubs->add_option("--dim,-N", mubs_dim, "Hilbert space dimension")->required();
  add_common(mubs, false);

  // fig1
  auto* fig1 = app.add_subcommand(
      "fig1", "Key rate vs error rate per dimension");
  std::vector<int> fig1_dims{2, 3, 4, 8, 16};
  int fig1_bases = 0;
  int fig1_grid = 200;
  fig1->add_option("--dims", fig1_dims, "Dimensions to sweep")
      ->delimiter(',')
      ->capture_default_str();
  fig1->add_option("--bases,-M", fig1_bases,
                   "Number of bases (default per-N: N+1)");
  fig1->add_option("--grid-size", fig1_grid, "Error-rate grid intervals")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  add_common(fig1, true);

  // fig2
  auto* fig2 = app.add_subcommand(
      "fig2", "Incoherent and coherent error-rate thresholds vs N");
  int fig2_max = kDefaultPrimeCap;
  fig2->add_option("--max-dim", fig2_max, "Largest dimension to include")
      ->check(CLI::Range(2, 1000))
      ->capture_default_str();
  add_common(fig2, true);

  // fig3
  auto* fig3 = app.add_subcommand(
      "fig3", "Key rate vs transmission distance per dimension");
  std::vector<int> fig3_dims{2, 3, 4, 8};
  double fig3_max_km = 200.0;
  int fig3_grid = 200;
  LinkFlags fig3_flags;
  fig3->add_option("--dims", fig3_dims, "Dimensions to sweep")
      ->delimiter(',')
      ->capture_default_str();
  fig3->add_option("--max-km", fig3_max_km, "Grid upper end (km)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  fig3->add_option("--grid-size", fig3_grid, "Distance grid intervals")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  add_link_flags(fig3, fig3_flags);
  add_common(fig3, true);

  // thresholds
  auto* thresholds = app.add_subcommand(
      "thresholds", "Both security thresholds for one dimension");
  int thr_dim = 2;
  std::string thr_format = "json";
  thresholds->add_option("--dim,-N", thr_dim, "Hilbert space dimension")
      ->required();
  thresholds->add_option("--format", thr_format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  thresholds->add_option("--out", out_path,
                         "Write output to a file instead of stdout");

  // link
  auto* link = app.add_subcommand(
      "link", "Analyze one realistic link configuration (JSON)");
  int link_dim = 2;
  int link_bases = 0;
  LinkFlags link_flags;
  link->add_option("--dim,-N", link_dim, "Hilbert space dimension")
      ->capture_default_str();
  link->add_option("--bases,-M", link_bases, "Number of bases (default N+1)");
  add_link_flags(link, link_flags);
  add_common(link, false);

  // simulate
  auto* simulate = app.add_subcommand(
      "simulate", "Run the seeded protocol simulation (JSON stats)");
  int sim_dim = 2;
  int sim_bases = 0;
  std::string sim_attack = "none";
  std::string sim_beta = "symmetric";
  std::uint64_t sim_symbols = 100000;
  std::uint64_t sim_seed = 0;
  std::string sim_transcript;
  simulate->add_option("--dim,-N", sim_dim, "Hilbert space dimension")
      ->capture_default_str();
  simulate->add_option("--bases,-M", sim_bases, "Number of bases (default N+1)");
  simulate->add_option("--attack", sim_attack, "Attack model")
      ->check(CLI::IsMember({"none", "intercept-resend", "cloner"}))
      ->capture_default_str();
  simulate->add_option("--beta", sim_beta,
                       "Cloner asymmetry: a number in [0,1] or 'symmetric'")
      ->capture_default_str();
  simulate->add_option("--symbols", sim_symbols, "Number of symbols to send")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  simulate->add_option("--seed", sim_seed, "RNG seed (required, no default)")
      ->required();
  simulate->add_option("--transcript", sim_transcript,
                       "Write the per-symbol transcript CSV here");
  add_common(simulate, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (mubs->parsed()) return cmd_mubs(mubs_dim, out_path);
    if (fig1->parsed())
      return cmd_fig1(fig1_dims, fig1_bases, fig1_grid, format, out_path);
    if (fig2->parsed()) return cmd_fig2(fig2_max, format, out_path);
    if (fig3->parsed())
      return cmd_fig3(fig3_dims, fig3_flags, fig3_max_km, fig3_grid, format,
                      out_path);
    if (thresholds->parsed()) return cmd_thresholds(thr_dim, thr_format, out_path);
    if (link->parsed()) return cmd_link(link_dim, link_bases, link_flags, out_path);
    if (simulate->parsed())
      return cmd_simulate(sim_dim, sim_bases, sim_attack, sim_beta, sim_symbols,
                          sim_seed, sim_transcript, out_path);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNoSecureRegime;
  }
  return 0;
}
