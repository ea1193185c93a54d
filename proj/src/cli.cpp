// Copyright 2026 ranklaw authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ranklaw/cli.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "ranklaw/analytics.hpp"
#include "ranklaw/corpus.hpp"
#include "ranklaw/error.hpp"
#include "ranklaw/numfmt.hpp"
#include "ranklaw/plotio.hpp"
#include "ranklaw/powerfit.hpp"
#include "ranklaw/relation.hpp"
#include "ranklaw/synth.hpp"

namespace ranklaw {

namespace {

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kUsage:
    case ErrorKind::kDomain:
      return 1;
    case ErrorKind::kIo:
    case ErrorKind::kParse:
    case ErrorKind::kStructure:
    case ErrorKind::kMonotonicity:
    case ErrorKind::kUndefinedAggregate:
    case ErrorKind::kEmptyPlot:
      return 2;
    case ErrorKind::kInsufficientData:
    case ErrorKind::kDegenerateAbscissa:
    case ErrorKind::kDegenerateData:
    case ErrorKind::kDivisionByZero:
    case ErrorKind::kNonInvertible:
      return 3;
  }
  return 1;
}

struct InputOptions {
  std::string path;
  std::string format = "auto";  // auto|csv|tsv|json
  std::string rank_key = "hosts";
};

void add_input_options(CLI::App* cmd, InputOptions& opts) {
  cmd->add_option("--input", opts.path,
                  "snapshot file path, or - for standard input")
      ->required();
  cmd->add_option("--input-format", opts.format,
                  "input encoding (default: by file extension)")
      ->check(CLI::IsMember({"auto", "csv", "tsv", "json"}));
  cmd->add_option("--rank-key", opts.rank_key,
                  "column a csv/tsv input is sorted by (default hosts)")
      ->check(CLI::IsMember({"hosts", "hits"}));
}

std::string slurp(const std::string& path, std::istream& in) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) {
    throw Error(ErrorKind::kIo, "cannot open input file '" + path + "'");
  }
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return buffer.str();
}

RatingSnapshot load_snapshot(const InputOptions& opts, std::istream& in) {
  std::string format = opts.format;
  if (format == "auto") {
    if (opts.path.ends_with(".json")) format = "json";
    else if (opts.path.ends_with(".tsv")) format = "tsv";
    else format = "csv";
  }
  const std::string text = slurp(opts.path, in);
  if (format == "json") {
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& ex) {
      throw Error(ErrorKind::kParse, std::string("invalid JSON: ") + ex.what());
    }
    return snapshot_from_json(doc);
  }
  const TableFormat table =
      format == "tsv" ? TableFormat::kTsv : TableFormat::kCsv;
  return parse_snapshot(text, table, rank_key_from_name(opts.rank_key));
}

void warn_low_confidence(const PowerLawFit& fit, std::ostream& err) {
  if (fit.n_used < 10) {
    err << "warning: " << relation_name(fit.relation) << " fit used only "
        << fit.n_used << " points; estimates are low-confidence\n";
  }
}

PowerLawFit fit_relation_ols(const RatingSnapshot& snapshot,
                             Relation relation, std::ostream& err) {
  auto fit = fit_loglog_ols(relation_pairs(snapshot, relation), relation);
  warn_low_confidence(fit, err);
  return fit;
}

void write_json(const nlohmann::ordered_json& doc, std::ostream& out) {
  out << doc.dump(2) << "\n";
}

void write_fit_text(const PowerLawFit& fit, std::ostream& out) {
  out << "relation: " << relation_name(fit.relation) << "\n"
      << "method: " << fit_method_name(fit.method) << "\n"
      << "exponent: " << format_double(fit.exponent) << "\n"
      << "prefactor: " << format_double(fit.prefactor) << "\n"
      << "exponent_stderr: " << format_double(fit.exponent_stderr) << "\n"
      << "r_squared: " << format_double(fit.r_squared) << "\n"
      << "n_used: " << fit.n_used << "\n"
      << "n_excluded: " << fit.n_excluded << "\n";
}

std::string relation_display(Relation relation) {
  std::string name = relation_name(relation);
  std::replace(name.begin(), name.end(), '_', ' ');
  return name;
}

// --- subcommand handlers -------------------------------------------------

struct FitOptions {
  InputOptions input;
  std::string relation;
  std::string method = "ols";
  std::string format = "text";
  std::optional<double> x_min;
};

int run_fit(const FitOptions& opts, std::istream& in, std::ostream& out,
            std::ostream& err) {
  const Relation relation = relation_from_name(opts.relation);
  const RatingSnapshot snapshot = load_snapshot(opts.input, in);

  PowerLawFit fit;
  if (opts.method == "ols") {
    fit = fit_relation_ols(snapshot, relation, err);
  } else {
    if (relation == Relation::kHitsVsHosts) {
      throw Error(ErrorKind::kUsage,
                  "mle estimates a value distribution; use --relation "
                  "hosts-vs-rank or hits-vs-rank");
    }
    std::vector<double> values;
    values.reserve(snapshot.entries.size());
    for (const auto& entry : snapshot.entries) {
      values.push_back(relation == Relation::kHostsVsRank ? entry.hosts
                                                          : entry.hits);
    }
    double x_min = 0.0;
    if (opts.x_min) {
      x_min = *opts.x_min;
    } else {
      // Default tail start: the smallest positive value, i.e. the whole
      // positive sample.
      for (double v : values) {
        if (v > 0.0 && (x_min == 0.0 || v < x_min)) x_min = v;
      }
      if (x_min == 0.0) {
        throw Error(ErrorKind::kInsufficientData,
                    std::string(relation_name(relation)) +
                        ": no positive values to fit");
      }
    }
    fit = fit_mle_tail(values, x_min, relation);
    warn_low_confidence(fit, err);
  }

  if (opts.format == "json") write_json(fit_to_json(fit), out);
  else write_fit_text(fit, out);
  return 0;
}

struct RelationOptions {
  InputOptions input;
  std::string format = "text";
  double linearity_tol = kDefaultLinearityTolerance;
};

int run_relation(const RelationOptions& opts, std::istream& in,
                 std::ostream& out, std::ostream& err) {
  const RatingSnapshot snapshot = load_snapshot(opts.input, in);
  const auto host_fit =
      fit_relation_ols(snapshot, Relation::kHostsVsRank, err);
  const auto hit_fit = fit_relation_ols(snapshot, Relation::kHitsVsRank, err);
  const auto direct_fit =
      fit_relation_ols(snapshot, Relation::kHitsVsHosts, err);
  const DerivedRelation rel =
      derive_relation(host_fit, hit_fit, direct_fit, opts.linearity_tol);

  if (opts.format == "json") {
    auto doc = relation_to_json(rel);
    doc["fits"]["hosts_vs_rank"] = fit_to_json(host_fit);
    doc["fits"]["hits_vs_rank"] = fit_to_json(hit_fit);
    doc["fits"]["hits_vs_hosts"] = fit_to_json(direct_fit);
    write_json(doc, out);
  } else {
    out << "alpha: " << format_double(rel.alpha) << "\n"
        << "beta: " << format_double(rel.beta) << "\n"
        << "gamma_derived: " << format_double(rel.gamma_derived) << "\n"
        << "prefactor_derived: " << format_double(rel.prefactor_derived)
        << "\n"
        << "gamma_direct: " << format_double(rel.gamma_direct) << "\n"
        << "prefactor_direct: " << format_double(rel.prefactor_direct) << "\n"
        << "gamma_discrepancy: " << format_double(rel.gamma_discrepancy)
        << "\n"
        << "linear_regime: " << (rel.linear_regime ? "true" : "false") << "\n"
        << "hosts_vs_rank_r_squared: " << format_double(host_fit.r_squared)
        << "\n"
        << "hits_vs_rank_r_squared: " << format_double(hit_fit.r_squared)
        << "\n"
        << "hits_vs_hosts_r_squared: " << format_double(direct_fit.r_squared)
        << "\n";
  }
  return 0;
}

struct AnomalyOptions {
  InputOptions input;
  std::string relation = "hits-vs-hosts";
  std::string format = "text";
  double threshold = kDefaultAnomalyThreshold;
};

int run_anomalies(const AnomalyOptions& opts, std::istream& in,
                  std::ostream& out, std::ostream& err) {
  const Relation relation = relation_from_name(opts.relation);
  const RatingSnapshot snapshot = load_snapshot(opts.input, in);
  const auto fit = fit_relation_ols(snapshot, relation, err);
  const AnomalyReport report = score_anomalies(snapshot, fit, opts.threshold);

  if (opts.format == "json") {
    write_json(anomaly_report_to_json(report), out);
    return 0;
  }
  out << "relation: " << relation_name(report.relation) << "\n"
      << "threshold: " << format_double(report.threshold) << "\n"
      << "residual_std: " << format_double(report.residual_std) << "\n";
  out << "flagged:";
  if (report.flagged.empty()) {
    out << " (none)";
  } else {
    for (auto rank : report.flagged) out << " " << rank;
  }
  out << "\n";
  for (const auto& site : report.per_site) {
    out << "site " << site.rank << ": observed "
        << format_value(site.observed) << " predicted "
        << format_double(site.predicted) << " log_residual "
        << format_double(site.log_residual) << " zscore "
        << format_double(site.zscore) << "\n";
  }
  return 0;
}

struct PredictOptions {
  InputOptions input;
  std::string relation = "hosts-vs-rank";
  std::string format = "text";
  std::optional<double> hosts;
  std::optional<double> rank;
  std::optional<double> invert_value;
};

int run_predict(const PredictOptions& opts, std::istream& in,
                std::ostream& out, std::ostream& err) {
  const int given = (opts.hosts ? 1 : 0) + (opts.rank ? 1 : 0) +
                    (opts.invert_value ? 1 : 0);
  if (given != 1) {
    throw Error(ErrorKind::kUsage,
                "give exactly one of --hosts, --rank, --invert-value");
  }
  const RatingSnapshot snapshot = load_snapshot(opts.input, in);

  nlohmann::ordered_json doc;
  std::string text_line;
  if (opts.hosts) {
    const auto fit = fit_relation_ols(snapshot, Relation::kHitsVsHosts, err);
    const double predicted = predict_hits(*opts.hosts, fit);
    doc["relation"] = relation_name(fit.relation);
    doc["hosts"] = *opts.hosts;
    doc["predicted_hits"] = predicted;
    text_line = "predicted_hits: " + format_double(predicted);
  } else if (opts.rank) {
    const Relation relation = relation_from_name(opts.relation);
    const auto fit = fit_relation_ols(snapshot, relation, err);
    const double predicted = predict_by_rank(*opts.rank, fit);
    doc["relation"] = relation_name(fit.relation);
    doc["rank"] = *opts.rank;
    doc["predicted"] = predicted;
    text_line = "predicted: " + format_double(predicted);
  } else {
    const Relation relation = relation_from_name(opts.relation);
    const auto fit = fit_relation_ols(snapshot, relation, err);
    const double rank = invert_rank(*opts.invert_value, fit);
    doc["relation"] = relation_name(fit.relation);
    doc["value"] = *opts.invert_value;
    doc["rank"] = rank;
    text_line = "rank: " + format_double(rank);
  }

  if (opts.format == "json") write_json(doc, out);
  else out << text_line << "\n";
  return 0;
}

struct SynthOptions {
  std::string spec_path;
  std::string format = "text";
  std::optional<std::int64_t> n;
  std::optional<double> alpha;
  std::optional<double> c_h;
  std::optional<double> beta;
  std::optional<double> c_s;
  double sigma = 0.0;
  std::uint64_t seed = 0;
  bool integerize = false;
  bool sigma_given = false;
  bool seed_given = false;
  bool integerize_given = false;
};

int run_synth(const SynthOptions& opts, std::istream& in, std::ostream& out,
              std::ostream& err) {
  (void)err;
  SynthSpec spec;
  if (!opts.spec_path.empty()) {
    if (opts.n || opts.alpha || opts.c_h || opts.beta || opts.c_s ||
        opts.sigma_given || opts.seed_given || opts.integerize_given) {
      throw Error(ErrorKind::kUsage,
                  "--spec cannot be combined with individual synth flags");
    }
    const std::string text = slurp(opts.spec_path, in);
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& ex) {
      throw Error(ErrorKind::kParse, std::string("invalid JSON: ") + ex.what());
    }
    spec = synth_spec_from_json(doc);
  } else {
    if (!opts.n || !opts.alpha || !opts.c_h || !opts.beta || !opts.c_s) {
      throw Error(ErrorKind::kUsage,
                  "synth needs --n, --alpha, --ch, --beta and --cs "
                  "(or --spec FILE)");
    }
    spec.n_sites = *opts.n;
    spec.alpha = *opts.alpha;
    spec.c_h = *opts.c_h;
    spec.beta = *opts.beta;
    spec.c_s = *opts.c_s;
    spec.noise_sigma = opts.sigma;
    spec.seed = opts.seed;
    spec.integerize = opts.integerize;
  }

  const RatingSnapshot snapshot = generate(spec);
  if (opts.format == "json") write_json(snapshot_to_json(snapshot), out);
  else out << serialize_table(snapshot, TableFormat::kCsv);
  return 0;
}

struct PlotOptions {
  InputOptions input;
  std::string relation;
  std::string title;
  bool no_fit = false;
  bool table = false;
};

int run_plot(const PlotOptions& opts, std::istream& in, std::ostream& out,
             std::ostream& err) {
  const Relation relation = relation_from_name(opts.relation);
  const RatingSnapshot snapshot = load_snapshot(opts.input, in);

  PlotSpec plot;
  for (const auto& [x, y] : relation_pairs(snapshot, relation)) {
    if (x > 0.0 && y > 0.0) plot.points.emplace_back(x, y);
  }
  switch (relation) {
    case Relation::kHostsVsRank:
      plot.x_label = "rank";
      plot.y_label = "hosts";
      break;
    case Relation::kHitsVsRank:
      plot.x_label = "rank";
      plot.y_label = "hits";
      break;
    case Relation::kHitsVsHosts:
      plot.x_label = "hosts";
      plot.y_label = "hits";
      break;
  }
  plot.title = opts.title;
  if (plot.title.empty()) {
    plot.title = relation_display(relation);
    if (!snapshot.category.empty()) plot.title += " - " + snapshot.category;
  }
  if (!opts.no_fit) {
    const auto fit = fit_relation_ols(snapshot, relation, err);
    plot.fit_line = {fit.exponent, fit.prefactor};
  }

  out << (opts.table ? emit_table(plot) : render_svg(plot));
  return 0;
}

struct RerankOptions {
  InputOptions input;
  std::string by;
  std::string format = "text";
};

int run_rerank(const RerankOptions& opts, std::istream& in, std::ostream& out,
               std::ostream& err) {
  (void)err;
  const RatingSnapshot snapshot = load_snapshot(opts.input, in);
  const RatingSnapshot reranked =
      rerank(snapshot, rank_key_from_name(opts.by));
  if (opts.format == "json") write_json(snapshot_to_json(reranked), out);
  else out << serialize_table(reranked, TableFormat::kCsv);
  return 0;
}

void add_format_option(CLI::App* cmd, std::string& format) {
  cmd->add_option("--format", format, "output format (default text)")
      ->check(CLI::IsMember({"json", "text"}));
}

int run_impl(const std::vector<std::string>& args, std::istream& in,
             std::ostream& out, std::ostream& err) {
  CLI::App app{"power-law analysis of website rating snapshots"};
  app.name("ranklaw");
  app.require_subcommand(1);

  FitOptions fit_opts;
  auto* fit_cmd =
      app.add_subcommand("fit", "fit one relation as a power law");
  add_input_options(fit_cmd, fit_opts.input);
  fit_cmd->add_option("--relation", fit_opts.relation,
                      "hosts-vs-rank, hits-vs-rank or hits-vs-hosts")
      ->required()
      ->check(CLI::IsMember(
          {"hosts-vs-rank", "hits-vs-rank", "hits-vs-hosts"}));
  fit_cmd->add_option("--method", fit_opts.method,
                      "ols (log-log least squares) or mle (tail exponent)")
      ->check(CLI::IsMember({"ols", "mle"}));
  double fit_xmin = 0.0;
  auto* xmin_opt = fit_cmd->add_option(
      "--xmin", fit_xmin, "tail start for --method mle (default: data min)");
  add_format_option(fit_cmd, fit_opts.format);

  RelationOptions rel_opts;
  auto* rel_cmd = app.add_subcommand(
      "relation", "derive the hits-vs-hosts law from the two rank laws and "
                  "compare with the direct fit");
  add_input_options(rel_cmd, rel_opts.input);
  rel_cmd->add_option("--linearity-tol", rel_opts.linearity_tol,
                      "tolerance for calling gamma linear (default 0.1)");
  add_format_option(rel_cmd, rel_opts.format);

  AnomalyOptions anom_opts;
  auto* anom_cmd = app.add_subcommand(
      "anomalies", "flag sites deviating from a fitted law");
  add_input_options(anom_cmd, anom_opts.input);
  anom_cmd->add_option("--relation", anom_opts.relation,
                       "law to score against (default hits-vs-hosts)")
      ->check(CLI::IsMember(
          {"hosts-vs-rank", "hits-vs-rank", "hits-vs-hosts"}));
  anom_cmd->add_option("--threshold", anom_opts.threshold,
                       "|zscore| flag threshold (default 2.0)");
  add_format_option(anom_cmd, anom_opts.format);

  PredictOptions pred_opts;
  auto* pred_cmd = app.add_subcommand(
      "predict", "evaluate a fitted law forward or invert a rank law");
  add_input_options(pred_cmd, pred_opts.input);
  double pred_hosts = 0.0;
  double pred_rank = 0.0;
  double pred_invert = 0.0;
  auto* hosts_opt = pred_cmd->add_option(
      "--hosts", pred_hosts, "predict hits for this host count");
  auto* rank_opt = pred_cmd->add_option(
      "--rank", pred_rank, "evaluate the rank law at this rank");
  auto* invert_opt = pred_cmd->add_option(
      "--invert-value", pred_invert,
      "rank at which the rank law reaches this value");
  pred_cmd->add_option("--relation", pred_opts.relation,
                       "rank law for --rank/--invert-value "
                       "(default hosts-vs-rank)")
      ->check(CLI::IsMember({"hosts-vs-rank", "hits-vs-rank"}));
  add_format_option(pred_cmd, pred_opts.format);

  SynthOptions synth_opts;
  auto* synth_cmd = app.add_subcommand(
      "synth", "generate a synthetic snapshot from two rank laws");
  std::int64_t synth_n = 0;
  double synth_alpha = 0.0;
  double synth_ch = 0.0;
  double synth_beta = 0.0;
  double synth_cs = 0.0;
  auto* n_opt = synth_cmd->add_option("--n", synth_n, "number of sites");
  auto* alpha_opt =
      synth_cmd->add_option("--alpha", synth_alpha, "hosts rank exponent");
  auto* ch_opt = synth_cmd->add_option("--ch", synth_ch, "hosts prefactor");
  auto* beta_opt =
      synth_cmd->add_option("--beta", synth_beta, "hits rank exponent");
  auto* cs_opt = synth_cmd->add_option("--cs", synth_cs, "hits prefactor");
  auto* sigma_opt = synth_cmd->add_option(
      "--sigma", synth_opts.sigma, "log-normal noise sigma (default 0)");
  auto* seed_opt =
      synth_cmd->add_option("--seed", synth_opts.seed, "rng seed (default 0)");
  auto* integerize_opt = synth_cmd->add_flag(
      "--integerize", synth_opts.integerize,
      "round to whole counts, clamping at 1");
  synth_cmd->add_option("--spec", synth_opts.spec_path,
                        "read the recipe from a JSON file instead of flags");
  add_format_option(synth_cmd, synth_opts.format);

  PlotOptions plot_opts;
  auto* plot_cmd = app.add_subcommand(
      "plot", "emit a log-log scatter of one relation as SVG");
  add_input_options(plot_cmd, plot_opts.input);
  plot_cmd->add_option("--relation", plot_opts.relation,
                       "hosts-vs-rank, hits-vs-rank or hits-vs-hosts")
      ->required()
      ->check(CLI::IsMember(
          {"hosts-vs-rank", "hits-vs-rank", "hits-vs-hosts"}));
  plot_cmd->add_option("--title", plot_opts.title,
                       "plot title (default: relation and category)");
  plot_cmd->add_flag("--no-fit", plot_opts.no_fit, "omit the fitted line");
  plot_cmd->add_flag("--table", plot_opts.table,
                     "emit the numeric companion TSV instead of SVG");

  RerankOptions rerank_opts;
  auto* rerank_cmd = app.add_subcommand(
      "rerank", "re-sort a snapshot by the other column and renumber ranks");
  add_input_options(rerank_cmd, rerank_opts.input);
  rerank_cmd->add_option("--by", rerank_opts.by, "new sort key")
      ->required()
      ->check(CLI::IsMember({"hosts", "hits"}));
  add_format_option(rerank_cmd, rerank_opts.format);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& ex) {
    err << "error: " << ex.what() << "\n";
    return 1;
  }

  if (xmin_opt->count() > 0) fit_opts.x_min = fit_xmin;
  if (hosts_opt->count() > 0) pred_opts.hosts = pred_hosts;
  if (rank_opt->count() > 0) pred_opts.rank = pred_rank;
  if (invert_opt->count() > 0) pred_opts.invert_value = pred_invert;
  if (n_opt->count() > 0) synth_opts.n = synth_n;
  if (alpha_opt->count() > 0) synth_opts.alpha = synth_alpha;
  if (ch_opt->count() > 0) synth_opts.c_h = synth_ch;
  if (beta_opt->count() > 0) synth_opts.beta = synth_beta;
  if (cs_opt->count() > 0) synth_opts.c_s = synth_cs;
  synth_opts.sigma_given = sigma_opt->count() > 0;
  synth_opts.seed_given = seed_opt->count() > 0;
  synth_opts.integerize_given = integerize_opt->count() > 0;

  if (fit_cmd->parsed()) return run_fit(fit_opts, in, out, err);
  if (rel_cmd->parsed()) return run_relation(rel_opts, in, out, err);
  if (anom_cmd->parsed()) return run_anomalies(anom_opts, in, out, err);
  if (pred_cmd->parsed()) return run_predict(pred_opts, in, out, err);
  if (synth_cmd->parsed()) return run_synth(synth_opts, in, out, err);
  if (plot_cmd->parsed()) return run_plot(plot_opts, in, out, err);
  if (rerank_cmd->parsed()) return run_rerank(rerank_opts, in, out, err);
  err << "error: no subcommand given\n";
  return 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in,
            std::ostream& out, std::ostream& err) {
  try {
    return run_impl(args, in, out, err);
  } catch (const Error& ex) {
    err << "error: " << ex.what() << "\n";
    return exit_code_for(ex.kind());
  } catch (const std::exception& ex) {
    err << "error: " << ex.what() << "\n";
    return 1;
  }
}

}  // namespace ranklaw
