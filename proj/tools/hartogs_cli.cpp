// Command-line front end: kernel, qpoly, roots, scan, witness, eval.
//
// Exit codes: 0 success (conjecture findings in a scan are flagged, not
// fatal), 1 numerical failure, 2 invalid input, 3 internal mismatch.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>

#include <unistd.h>

#include "CLI11.hpp"

#include "hartogs/error.hpp"
#include "hartogs/kernel.hpp"
#include "hartogs/luqikeng.hpp"
#include "hartogs/palindrome.hpp"
#include "hartogs/rootloc.hpp"
#include "hartogs/serialize.hpp"

namespace {

using namespace hartogs;

enum class Format { Text, Json, Csv };

struct CliConfig {
  std::int64_t m = 0;
  std::int64_t n = 0;
  std::int64_t m_max = 0;
  std::optional<std::int64_t> k_filter;
  std::string format = "text";
  std::string output_path;
  std::int64_t cutoff = 400;
  double tol = 1e-12;
  std::size_t workers = 1;
  bool verify = false;
  bool timing = false;
  bool float_roots = false;
  bool all_roots = false;
  std::string z;
  std::string w;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Format parse_format(const std::string& s) {
  if (s == "json") return Format::Json;
  if (s == "csv") return Format::Csv;
  return Format::Text;
}

std::string complex_str(Complex z) {
  std::ostringstream os;
  os.precision(17);
  os << z.real() << (z.imag() < 0 ? " - " : " + ") << std::abs(z.imag()) << "i";
  return os.str();
}

// "a,b,c,d" -> (a + bi, c + di)
DomainPoint parse_point(const std::string& text, const char* name) {
  std::vector<double> v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      v.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError(std::string("--") + name + " expects four comma-separated numbers re1,im1,re2,im2");
    }
  }
  if (v.size() != 4) {
    throw UsageError(std::string("--") + name + " expects four comma-separated numbers re1,im1,re2,im2");
  }
  return {Complex(v[0], v[1]), Complex(v[2], v[3])};
}

std::string render_kernel(const CliConfig& cfg, Format fmt) {
  const PairMN pair(cfg.m, cfg.n);
  const KernelRational kernel = kernel_rational(pair);
  if (cfg.verify) {
    if (!(kernel.numerator == numerator_oracle(pair))) {
      throw HartogsError(ErrorKind::InternalMismatch, "effective numerator disagrees with the D_m double sum");
    }
    if (kernel.numerator.term_count() != static_cast<std::size_t>(4 * pair.m() - 3)) {
      throw HartogsError(ErrorKind::InternalMismatch, "numerator does not have 4m-3 terms");
    }
  }
  if (fmt == Format::Json) return to_json(kernel).dump() + "\n";
  if (fmt == Format::Csv) {
    std::string out = "deg_s,deg_t,coeff\n";
    for (const auto& [e, c] : kernel.numerator.terms()) {
      out += std::to_string(e.first) + "," + std::to_string(e.second) + "," + c.get_str() + "\n";
    }
    return out;
  }
  std::string out = "K_{" + std::to_string(pair.m()) + "/" + std::to_string(pair.n()) + "}(z,w) = P(s,t) / (" +
                    kernel.denominator_string() + ")\n";
  out += "P(s,t) = " + kernel.numerator.to_string() + "\n";
  out += "terms: " + std::to_string(kernel.numerator.term_count()) + "\n";
  return out;
}

std::string render_qpoly(const CliConfig& cfg, Format fmt) {
  const QPoly q = q_poly(PairMN(cfg.m, cfg.n));
  if (fmt == Format::Json) return to_json(q).dump() + "\n";
  if (fmt == Format::Csv) {
    std::string out = "degree,coeff\n";
    const auto coeffs = q.poly.coeff_strings();
    for (std::size_t i = 0; i < coeffs.size(); ++i) out += std::to_string(i) + "," + coeffs[i] + "\n";
    return out;
  }
  std::string out = "Q_{" + std::to_string(cfg.m) + "," + std::to_string(cfg.n) + "}(s) = " + q.poly.to_string() + "\n";
  out += "palindromic: " + std::string(q.poly.is_palindromic() ? "true" : "false") + "\n";
  out += "piece identities: " + std::string(verify_piece_identities(q) ? "true" : "false") + "\n";
  return out;
}

std::string render_roots(const CliConfig& cfg, Format fmt) {
  const PairMN pair(cfg.m, cfg.n);
  const IntPoly q = q_poly(pair).poly;
  RootCensus census = interior_root_count(q);
  if (cfg.float_roots) attach_float_roots(census, q, cfg.tol);
  for (const auto& w : census.warnings) std::cerr << "warning: " << w << "\n";
  if (fmt == Format::Json) {
    Json j{{"m", pair.m()}, {"n", pair.n()}, {"degree", q.degree()}};
    j["census"] = to_json(census);
    return j.dump() + "\n";
  }
  if (fmt == Format::Csv) {
    return "m,n,degree,inside,on_circle,outside,method\n" + std::to_string(pair.m()) + "," +
           std::to_string(pair.n()) + "," + std::to_string(q.degree()) + "," + std::to_string(census.inside) +
           "," + std::to_string(census.on_circle) + "," + std::to_string(census.outside) + "," +
           to_string(census.method) + "\n";
  }
  std::string out = "inside=" + std::to_string(census.inside) + " on=" + std::to_string(census.on_circle) +
                    " outside=" + std::to_string(census.outside) + " method=" + to_string(census.method) + "\n";
  if (census.float_roots) {
    for (const auto& r : *census.float_roots) {
      out += "  " + complex_str(r.value) + "  |r|=" + std::to_string(std::abs(r.value)) + "  " +
             to_string(r.location) + "\n";
    }
  }
  return out;
}

std::string render_scan(const CliConfig& cfg, Format fmt) {
  if (cfg.m_max < 2) throw UsageError("--m-max must be at least 2");
  ScanOptions options;
  options.m_max = cfg.m_max;
  options.k_filter = cfg.k_filter;
  options.workers = cfg.workers;
  const auto rows = scan(options);
  for (const auto& row : rows) {
    if (!row.error.empty()) {
      std::cerr << "error: (" << row.m << "," << row.n << "): " << row.error << "\n";
    } else if (!row.conjecture_holds) {
      std::cerr << (is_proven_family(row.k) ? "VIOLATION" : "finding") << ": (" << row.m << "," << row.n
                << ") circle_count=" << row.circle_count << " interior_count=" << row.interior_count << "\n";
    }
  }
  if (fmt == Format::Json) {
    Json arr = Json::array();
    for (const auto& row : rows) arr.push_back(to_json(row, cfg.timing));
    return arr.dump() + "\n";
  }
  if (fmt == Format::Csv) return to_csv(rows, cfg.timing);
  std::size_t holds = 0;
  for (const auto& row : rows) holds += row.conjecture_holds ? 1 : 0;
  return "pairs=" + std::to_string(rows.size()) + " conjecture_holds=" + std::to_string(holds) +
         " flagged=" + std::to_string(rows.size() - holds) + "\n";
}

std::string render_witness(const CliConfig& cfg, Format fmt) {
  const PairMN pair(cfg.m, cfg.n);
  std::vector<ZeroWitness> witnesses;
  if (cfg.all_roots) {
    witnesses = zero_witnesses(pair);
  } else {
    witnesses.push_back(zero_witness(pair));
  }
  if (fmt == Format::Json) {
    Json arr = Json::array();
    for (const auto& w : witnesses) arr.push_back(to_json(w));
    return (cfg.all_roots ? arr : arr[0]).dump() + "\n";
  }
  if (fmt == Format::Csv) {
    std::ostringstream os;
    os.precision(17);
    os << "m,n,s0_re,s0_im,z1_re,z1_im,z2_re,z2_im,w1_re,w1_im,w2_re,w2_im,residual,margin\n";
    for (const auto& w : witnesses) {
      os << pair.m() << "," << pair.n() << "," << w.s0.real() << "," << w.s0.imag() << "," << w.z.z1.real() << ","
         << w.z.z1.imag() << "," << w.z.z2.real() << "," << w.z.z2.imag() << "," << w.w.z1.real() << ","
         << w.w.z1.imag() << "," << w.w.z2.real() << "," << w.w.z2.imag() << "," << w.residual << ","
         << w.margin << "\n";
    }
    return os.str();
  }
  std::ostringstream os;
  for (const auto& w : witnesses) {
    os << "s0 = " << complex_str(w.s0) << "\n";
    os << "  z = (" << complex_str(w.z.z1) << ", " << complex_str(w.z.z2) << ")\n";
    os << "  w = (" << complex_str(w.w.z1) << ", " << complex_str(w.w.z2) << ")\n";
    os << "  |K(z,w)| = " << w.residual << "  margin = " << w.margin << "\n";
  }
  return os.str();
}

std::string render_eval(const CliConfig& cfg, Format fmt) {
  const PairMN pair(cfg.m, cfg.n);
  const DomainPoint z = parse_point(cfg.z, "z");
  const DomainPoint w = parse_point(cfg.w, "w");
  if (cfg.cutoff < 1) throw UsageError("--cutoff must be positive");
  const Complex closed = eval_kernel(pair, z, w);
  const SeriesResult series = series_kernel(pair, z, w, cfg.cutoff);
  const double rel = std::abs(closed - series.value) / std::abs(closed);
  if (fmt == Format::Json) {
    Json j{{"m", pair.m()},
           {"n", pair.n()},
           {"closed_form", {closed.real(), closed.imag()}},
           {"series", {series.value.real(), series.value.imag()}},
           {"cutoff", cfg.cutoff},
           {"series_terms", series.terms},
           {"tail_bound", series.tail_bound},
           {"relative_difference", rel}};
    return j.dump() + "\n";
  }
  std::ostringstream os;
  os.precision(17);
  if (fmt == Format::Csv) {
    os << "m,n,closed_re,closed_im,series_re,series_im,cutoff,tail_bound,relative_difference\n";
    os << pair.m() << "," << pair.n() << "," << closed.real() << "," << closed.imag() << "," << series.value.real()
       << "," << series.value.imag() << "," << cfg.cutoff << "," << series.tail_bound << "," << rel << "\n";
    return os.str();
  }
  os << "closed form: " << complex_str(closed) << "\n";
  os << "series:      " << complex_str(series.value) << "  (cutoff " << cfg.cutoff << ", " << series.terms
     << " terms, tail <= " << series.tail_bound << ")\n";
  os << "relative difference: " << rel << "\n";
  return os.str();
}

// Writes to a sibling temporary and renames, so a failed run leaves no file.
void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  const std::string tmp = path + ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary);
    if (!out) throw UsageError("cannot open " + tmp + " for writing");
    out << text;
    if (!out) throw UsageError("failed writing " + tmp);
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bergman kernels of rational Hartogs triangles"};
  app.require_subcommand(1);
  CliConfig cfg;

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--output-format", cfg.format, "Output format (text; csv for scan)")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    sub->add_option("-o,--output", cfg.output_path, "Write to this path instead of stdout");
  };
  auto add_pair = [&](CLI::App* sub) {
    sub->add_option("--m", cfg.m, "Numerator of gamma = m/n")->required();
    sub->add_option("--n", cfg.n, "Denominator of gamma = m/n")->required();
  };

  auto* kernel = app.add_subcommand("kernel", "Numerator polynomial and denominator of the Bergman kernel");
  add_pair(kernel);
  add_format(kernel);
  kernel->add_flag("--verify", cfg.verify, "Check against the D_m double sum and the 4m-3 term count");

  auto* qpoly = app.add_subcommand("qpoly", "Diagonal restriction Q_{m,n}");
  add_pair(qpoly);
  add_format(qpoly);

  auto* roots = app.add_subcommand("roots", "Exact root census of Q_{m,n} relative to the unit circle");
  add_pair(roots);
  add_format(roots);
  roots->add_flag("--float", cfg.float_roots, "Also report float root approximations");
  roots->add_option("--tol", cfg.tol, "Backward-error tolerance for float roots");

  auto* scan_cmd = app.add_subcommand("scan", "Census of Q_{m,n} over all coprime pairs with m <= m-max");
  scan_cmd->add_option("--m-max", cfg.m_max, "Largest m")->required();
  scan_cmd->add_option("--k", cfg.k_filter, "Restrict to m - n = k");
  scan_cmd->add_option("--workers", cfg.workers, "Worker threads (HARTOGS_WORKERS overrides)")
      ->check(CLI::PositiveNumber);
  scan_cmd->add_flag("--timing", cfg.timing, "Fill elapsed_ms (output is then not reproducible)");
  add_format(scan_cmd);

  auto* witness = app.add_subcommand("witness", "Explicit zero of the Bergman kernel");
  add_pair(witness);
  add_format(witness);
  witness->add_flag("--all", cfg.all_roots, "One witness per interior root");

  auto* eval = app.add_subcommand("eval", "Evaluate the kernel in closed form and by truncated series");
  add_pair(eval);
  add_format(eval);
  eval->add_option("--z", cfg.z, "Point z as re1,im1,re2,im2")->required();
  eval->add_option("--w", cfg.w, "Point w as re1,im1,re2,im2")->required();
  eval->add_option("--cutoff", cfg.cutoff, "Series cutoff on a and |b|");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (const char* env = std::getenv("HARTOGS_WORKERS")) {
    try {
      const long v = std::stol(env);
      if (v < 1) throw std::invalid_argument(env);
      cfg.workers = static_cast<std::size_t>(v);
    } catch (const std::exception&) {
      std::cerr << "error: HARTOGS_WORKERS must be a positive integer\n";
      return 2;
    }
  }

  if (scan_cmd->parsed() && scan_cmd->count("--output-format") == 0) cfg.format = "csv";
  const Format fmt = parse_format(cfg.format);
  try {
    std::string text;
    if (kernel->parsed()) text = render_kernel(cfg, fmt);
    else if (qpoly->parsed()) text = render_qpoly(cfg, fmt);
    else if (roots->parsed()) text = render_roots(cfg, fmt);
    else if (scan_cmd->parsed()) text = render_scan(cfg, fmt);
    else if (witness->parsed()) text = render_witness(cfg, fmt);
    else if (eval->parsed()) text = render_eval(cfg, fmt);
    emit(text, cfg.output_path);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const HartogsError& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.kind()) {
      case ErrorKind::InvalidPair:
      case ErrorKind::DegenerateInput:
      case ErrorKind::OutsideDomain:
        return 2;
      case ErrorKind::InternalMismatch:
        return 3;
      default:
        return 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
