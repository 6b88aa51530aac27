#include "kzdisk/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <thread>

#include "kzdisk/report.hpp"

namespace kzdisk {

namespace {

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

std::vector<std::string> split_commas(const std::string& text, const char* what) {
  std::vector<std::string> items;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) items.push_back(item);
  if (items.empty() || text.back() == ',') throw UsageError(std::string("malformed ") + what + ": '" + text + "'");
  return items;
}

std::vector<int> parse_ints(const std::string& text, const char* what) {
  std::vector<int> out;
  for (const auto& item : split_commas(text, what)) {
    int v = 0;
    const auto res = std::from_chars(item.data(), item.data() + item.size(), v);
    if (item.empty() || res.ec != std::errc{} || res.ptr != item.data() + item.size()) {
      throw UsageError(std::string("malformed ") + what + ": '" + text + "'");
    }
    out.push_back(v);
  }
  return out;
}

std::vector<double> parse_doubles(const std::string& text, const char* what) {
  std::vector<double> out;
  for (const auto& item : split_commas(text, what)) {
    char* end = nullptr;
    const double v = std::strtod(item.c_str(), &end);
    if (item.empty() || end != item.c_str() + item.size()) {
      throw UsageError(std::string("malformed ") + what + ": '" + text + "'");
    }
    out.push_back(v);
  }
  return out;
}

CoverParams cover_from(const std::string& degree, const std::string& exponents) {
  const auto n = parse_ints(degree, "degree");
  const auto a = parse_ints(exponents, "exponent list");
  if (n.size() != 1 || a.size() != 4) throw UsageError("expected N and four comma-separated exponents");
  return validate_params(n[0], {a[0], a[1], a[2], a[3]});
}

std::string join(std::span<const int> xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + std::to_string(xs[i]);
  return s;
}

void emit(std::ostream& out, const Json& env) { out << env.dump(2) << '\n'; }

struct Options {
  bool json = false;
  // analyze / flat
  std::string degree;
  std::string exponents;
  std::string origami_out;
  // search
  int n_max = 12;
  unsigned threads = 0;
  // lyapunov
  std::string cover;
  std::string origami_file;
  std::uint64_t steps = 1'000'000;
  int samples = 8;
  std::uint64_t seed = 0x5eed5eed5eed5eedULL;
  std::string csv;
  std::uint64_t trace_every = 0;
  bool full = false;
  // spectrum
  std::string kz;
  int sigma = 0;
};

int cmd_analyze(const Options& o, std::ostream& out) {
  const CoverParams p = cover_from(o.degree, o.exponents);
  const Json payload = analysis_payload(p);
  if (o.json) {
    emit(out, envelope("analyze", {{"N", p.degree()}, {"a", p.exponents()}}, "analysis", payload, utc_timestamp()));
    return kExitOk;
  }
  out << "cover            " << p.to_string() << '\n';
  out << "genus            " << genus(p) << '\n';
  out << "eigenspace dims  " << join(eigenspace_dims(p).dims) << '\n';
  const auto m = square_root_index(p);
  out << "orientable       " << (m ? "yes (m = " + std::to_string(*m) + ")" : std::string("no")) << '\n';
  if (m) {
    const RankBoundReport r = degeneracy_verdict(p);
    out << "spectrum         " << join(mqplus_spectrum(p).exponents()) << " (mod " << p.degree() << ")\n";
    out << "structural rank  " << r.structural_rank << '\n';
    out << "corollary bound  " << r.corollary_bound << '\n';
    out << "det forced zero  " << (r.full_determinant_forced ? "yes" : "no") << '\n';
    out << "verdict          " << to_string(r.verdict) << (r.trivial_torus ? " (genus 1)" : "") << '\n';
  }
  return kExitOk;
}

int cmd_search(const Options& o, std::ostream& out) {
  if (o.n_max < 2) throw UsageError("--nmax must be at least 2");
  const unsigned threads = o.threads ? o.threads : std::max(1u, std::thread::hardware_concurrency());
  const SearchReport r = run_search(o.n_max, threads);
  if (o.json) {
    emit(out, envelope("search", {{"n_max", o.n_max}}, "search", search_payload(r), utc_timestamp()));
    return kExitOk;
  }
  out << "classes examined " << r.examined << " (non-orientable " << r.skipped_nonorientable << ", genus one "
      << r.genus_one << ")\n";
  for (const auto& h : r.hits) {
    out << "hit " << h.params.to_string() << "  genus " << h.report.genus << "  rank " << h.report.structural_rank
        << (h.needs_review ? "  NEEDS REVIEW" : "") << '\n';
  }
  return kExitOk;
}

int cmd_flat(const Options& o, std::ostream& out) {
  const CoverParams p = cover_from(o.degree, o.exponents);
  const PillowComplex c = build_cover_complex(p);
  if (!o.origami_out.empty()) {
    if (!holonomy_orientable(c)) throw DomainError("cover is not orientable; there is no square-tiled surface");
    std::ofstream f(o.origami_out);
    if (!f) throw UsageError("cannot write " + o.origami_out);
    f << "# square-tiled surface of the cover " << p.to_string() << '\n' << serialize(to_origami(c));
  }
  const Json payload = flat_payload(c);
  if (o.json) {
    Json echo = {{"N", p.degree()}, {"a", p.exponents()}};
    if (!o.origami_out.empty()) echo["out"] = o.origami_out;
    emit(out, envelope("flat", echo, "flat", payload, utc_timestamp()));
    return kExitOk;
  }
  out << "cover      " << p.to_string() << '\n';
  out << "squares    " << c.squares() << '\n';
  out << "genus      " << complex_genus(c) << '\n';
  const StratumSignature sig = stratum_signature(c);
  out << "quadratic  Q(" << join(sig.quadratic_orders) << ")\n";
  if (sig.abelian_orders) {
    out << "abelian    H(" << join(*sig.abelian_orders) << ")\n";
    out << serialize(to_origami(c));
  } else {
    out << "abelian    none (non-orientable)\n";
  }
  return kExitOk;
}

int cmd_lyapunov(const Options& o, std::ostream& out) {
  if (o.cover.empty() == o.origami_file.empty()) throw UsageError("give exactly one of --cover and --origami");
  Origami origami(Permutation::identity(1), Permutation::identity(1));
  Json source;
  if (!o.cover.empty()) {
    const CoverParams p = parse_cover(o.cover);
    const PillowComplex c = build_cover_complex(p);
    if (!holonomy_orientable(c)) throw DomainError("cover " + p.to_string() + " is not orientable");
    origami = to_origami(c);
    source = {{"type", "cover"}, {"cover", p.to_string()}};
  } else {
    std::ifstream f(o.origami_file);
    if (!f) throw UsageError("cannot read " + o.origami_file);
    std::stringstream text;
    text << f.rdbuf();
    origami = parse_origami(text.str());
    source = {{"type", "origami"}, {"file", o.origami_file}};
  }

  LyapunovOptions opt;
  opt.steps = o.steps;
  opt.samples = o.samples;
  opt.seed = o.seed;
  opt.full_homology = o.full;
  opt.threads = o.threads;
  if (!o.csv.empty()) {
    const std::uint64_t per_sample = o.samples > 0 ? o.steps / static_cast<std::uint64_t>(o.samples) : 0;
    opt.trace_every = o.trace_every ? o.trace_every : std::max<std::uint64_t>(1, per_sample / 100);
  }
  const LyapunovEstimate e = lyapunov_estimate(origami, opt);
  if (!o.csv.empty()) {
    std::ofstream f(o.csv);
    if (!f) throw UsageError("cannot write " + o.csv);
    write_trace_csv(f, e);
  }

  if (o.json) {
    Json echo = {{"steps", o.steps}, {"samples", o.samples}, {"seed", o.seed}, {"full_homology", o.full}};
    if (!o.cover.empty()) echo["cover"] = o.cover;
    if (!o.origami_file.empty()) echo["origami"] = o.origami_file;
    if (!o.csv.empty()) echo["csv"] = o.csv;
    emit(out, envelope("lyapunov", echo, "lyapunov", lyapunov_payload(e, source), utc_timestamp()));
    return kExitOk;
  }
  out << "genus " << e.genus << ", orbit size " << e.orbit_size << ", " << e.steps << " digits over " << e.samples
      << " samples, seed " << e.seed << '\n';
  if (e.empty()) {
    out << "no nontrivial exponents\n";
    return kExitOk;
  }
  const int first = e.full_homology ? 1 : 2;
  out << std::setprecision(6);
  for (std::size_t i = 0; i < e.lambdas.size(); ++i) {
    out << (e.full_homology ? "nu_" : "lambda_") << first + static_cast<int>(i) << " = " << e.lambdas[i] << " +- "
        << e.std_error[i] << '\n';
  }
  out << "sum_check = " << e.sum_check << '\n';
  return kExitOk;
}

int cmd_spectrum(const Options& o, std::ostream& out) {
  const auto kz = parse_doubles(o.kz, "exponent list");
  const auto values = teichmuller_spectrum(kz, o.sigma);
  if (o.json) {
    emit(out, envelope("spectrum", {{"kz", kz}, {"sigma", o.sigma}}, "spectrum", spectrum_payload(kz, o.sigma, values),
                       utc_timestamp()));
    return kExitOk;
  }
  out << std::setprecision(10);
  for (std::size_t i = 0; i < values.size(); ++i) out << (i ? " " : "") << values[i];
  out << '\n';
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cyclic covers of the pillowcase and their Kontsevich-Zorich spectra", "kzdisk"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kToolVersion));
  Options o;

  auto* analyze = app.add_subcommand("analyze", "arithmetic criteria for one cover");
  analyze->add_option("N", o.degree, "cover degree")->required();
  analyze->add_option("a", o.exponents, "exponents a1,a2,a3,a4")->required();
  analyze->add_flag("--json", o.json, "JSON report");

  auto* search = app.add_subcommand("search", "search cover classes for totally degenerate spectra");
  search->add_option("--nmax", o.n_max, "largest degree")->capture_default_str();
  search->add_option("--threads", o.threads, "worker threads (0 = all cores)");
  search->add_flag("--json", o.json, "JSON report");

  auto* flat = app.add_subcommand("flat", "flat model and square-tiled surface of a cover");
  flat->add_option("N", o.degree, "cover degree")->required();
  flat->add_option("a", o.exponents, "exponents a1,a2,a3,a4")->required();
  flat->add_option("--out", o.origami_out, "write the origami to this file");
  flat->add_flag("--json", o.json, "JSON report");

  auto* lyap = app.add_subcommand("lyapunov", "Monte Carlo Kontsevich-Zorich exponents");
  lyap->add_option("--cover", o.cover, "cover N:a1,a2,a3,a4");
  lyap->add_option("--origami", o.origami_file, "origami file");
  lyap->add_option("--steps", o.steps, "continued-fraction digits in total")->capture_default_str();
  lyap->add_option("--samples", o.samples, "independent samples")->capture_default_str();
  lyap->add_option("--seed", o.seed, "64-bit master seed")->capture_default_str();
  lyap->add_option("--csv", o.csv, "write the convergence trace");
  lyap->add_option("--trace-every", o.trace_every, "digits between trace rows");
  lyap->add_option("--threads", o.threads, "worker threads (0 = all cores)");
  lyap->add_flag("--full", o.full, "all exponents of H_1 (diagnostic)");
  lyap->add_flag("--json", o.json, "JSON report");

  auto* spectrum = app.add_subcommand("spectrum", "Teichmueller flow spectrum from KZ exponents");
  spectrum->add_option("--kz", o.kz, "exponents 1,l2,...,lg")->required();
  spectrum->add_option("--sigma", o.sigma, "number of distinct zeros")->required();
  spectrum->add_flag("--json", o.json, "JSON report");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << (dynamic_cast<const CLI::CallForVersion*>(&e) ? e.what() : app.help()) << '\n';
      return kExitOk;
    }
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (analyze->parsed()) return cmd_analyze(o, out);
    if (search->parsed()) return cmd_search(o, out);
    if (flat->parsed()) return cmd_flat(o, out);
    if (lyap->parsed()) return cmd_lyapunov(o, out);
    if (spectrum->parsed()) return cmd_spectrum(o, out);
  } catch (const CoverError& e) {
    err << "error: " << to_string(e.code()) << ": " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  }
  return kExitUsage;
}

}  // namespace kzdisk
