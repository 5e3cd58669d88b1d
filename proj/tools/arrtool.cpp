// Command-line front end: analyze single arrangements, sweep the built-in
// one-parameter families, render projective plots, verify certificates.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <mutex>
#include <thread>

#include "arr/chambers.hpp"
#include "arr/freeness.hpp"
#include "arr/report.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitInputError = 2;
constexpr int kExitInternalError = 3;

void write_output(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream f(path);
  if (!f) throw std::invalid_argument("cannot write to " + path);
  f << content;
}

arr::AnalyzeInput make_input(const std::string& family, const std::string& alpha,
                             const std::string& file, int d) {
  arr::AnalyzeInput in;
  if (!file.empty()) {
    if (!family.empty())
      throw std::invalid_argument("--family and --file are mutually exclusive");
    in.file_path = file;
    return in;
  }
  if (family.empty()) throw std::invalid_argument("need --family or --file");
  in.family = family;
  if (family == "A" || family == "B") {
    if (alpha.empty()) throw std::invalid_argument("--alpha required for family " + family);
    auto q = arr::parse_rational(alpha);
    if (!q)
      throw std::invalid_argument("--alpha must be an exact rational like -2 or 1/2 "
                                  "(decimals are not accepted)");
    in.alpha = *q;
  } else if (family == "braid" || family == "boolean") {
    if (d < 1) throw std::invalid_argument("--d must be >= 1 for " + family);
    in.family_size = d;
  } else {
    throw std::invalid_argument("unknown family '" + family + "' (A, B, braid, boolean)");
  }
  return in;
}

std::vector<arr::Rat> parse_alpha_list(const std::string& spec) {
  std::vector<arr::Rat> out;
  auto add = [&](const std::string& tok) {
    auto q = arr::parse_rational(tok);
    if (!q) throw std::invalid_argument("bad alpha '" + tok + "'");
    out.push_back(*q);
  };
  if (spec.find(':') != std::string::npos) {
    // start:stop:step, inclusive
    std::vector<std::string> parts;
    std::size_t pos = 0;
    while (true) {
      auto next = spec.find(':', pos);
      parts.push_back(spec.substr(pos, next - pos));
      if (next == std::string::npos) break;
      pos = next + 1;
    }
    if (parts.size() != 3) throw std::invalid_argument("range spec is start:stop:step");
    arr::Rat start = arr::parse_rational_or_throw(parts[0]);
    arr::Rat stop = arr::parse_rational_or_throw(parts[1]);
    arr::Rat step = arr::parse_rational_or_throw(parts[2]);
    if (step <= 0) throw std::invalid_argument("step must be positive");
    for (arr::Rat v = start; v <= stop; v += step) out.push_back(v);
  } else {
    std::size_t pos = 0;
    while (pos <= spec.size()) {
      auto next = spec.find(',', pos);
      std::string tok = spec.substr(pos, next == std::string::npos ? std::string::npos
                                                                   : next - pos);
      if (!tok.empty()) add(tok);
      if (next == std::string::npos) break;
      pos = next + 1;
    }
  }
  if (out.empty()) throw std::invalid_argument("empty alpha list");
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// A form spec is either a variable name (x, y, z, w) or dim comma-separated
// rationals.
arr::LinearForm parse_form_spec(const std::string& spec, int dim) {
  auto names = arr::default_var_names(dim);
  for (int i = 0; i < dim; ++i) {
    if (spec == names[i]) {
      std::vector<arr::Int> v(dim, arr::Int(0));
      v[i] = 1;
      return arr::LinearForm{v};
    }
  }
  std::vector<arr::Rat> coeffs;
  std::size_t pos = 0;
  while (pos <= spec.size()) {
    auto next = spec.find(',', pos);
    std::string tok = spec.substr(pos, next == std::string::npos ? std::string::npos
                                                                 : next - pos);
    if (!tok.empty()) coeffs.push_back(arr::parse_rational_or_throw(tok));
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  if (static_cast<int>(coeffs.size()) != dim)
    throw std::invalid_argument("form spec needs " + std::to_string(dim) + " entries");
  return arr::normalize_form(coeffs);
}

int run(int argc, char** argv) {
  CLI::App app{"exact analysis of central hyperplane arrangements"};
  app.require_subcommand(1);

  std::string family, alpha, file, out, cert_out, alphas, infinity, cert_in;
  int d = 0, jobs = 1, width = 800, height = 800;
  long budget = 10000;
  bool timing = false;

  auto* analyze = app.add_subcommand("analyze", "full report for one arrangement");
  analyze->add_option("--family", family, "A, B, braid or boolean");
  analyze->add_option("--alpha", alpha, "exact rational parameter, e.g. -2 or 1/2");
  analyze->add_option("--d", d, "size parameter for braid/boolean");
  analyze->add_option("--file", file, "arrangement text file");
  analyze->add_option("--out", out, "report destination (default stdout)");
  analyze->add_option("--cert", cert_out, "also write the freeness certificate here");
  analyze->add_option("--budget", budget, "node budget for the freeness search");
  analyze->add_flag("--timing", timing, "include wall-clock timing in the report");

  auto* sweep = app.add_subcommand("sweep", "row-per-alpha table over a family");
  sweep->add_option("--family", family, "A or B")->required();
  sweep->add_option("--alphas", alphas, "comma list or start:stop:step")->required();
  sweep->add_option("--jobs", jobs, "parallel workers");
  sweep->add_option("--budget", budget, "node budget per row");
  sweep->add_option("--out", out, "table destination (default stdout)");

  auto* plot = app.add_subcommand("plot", "projective SVG picture");
  plot->add_option("--family", family, "A, B, braid or boolean");
  plot->add_option("--alpha", alpha, "exact rational parameter");
  plot->add_option("--d", d, "size parameter for braid/boolean");
  plot->add_option("--file", file, "arrangement text file");
  plot->add_option("--infinity", infinity, "form at infinity: variable name or coefficients")
      ->required();
  plot->add_option("--out", out, "SVG destination (default stdout)");
  plot->add_option("--width", width, "canvas width");
  plot->add_option("--height", height, "canvas height");

  auto* verify = app.add_subcommand("verify", "check a freeness certificate");
  verify->add_option("cert", cert_in, "certificate JSON path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInputError;
  }

  if (analyze->parsed()) {
    arr::AnalyzeInput in = make_input(family, alpha, file, d);
    arr::AnalyzeOptions opts;
    opts.budget = budget;
    opts.with_timing = timing;
    arr::AnalyzeOutcome res = arr::analyze(in, opts);
    write_output(out, res.report_json);
    if (!cert_out.empty()) {
      if (!res.freeness.certificate)
        throw std::invalid_argument("no certificate available for this input");
      write_output(cert_out, res.freeness.certificate->to_json());
    }
    return kExitOk;
  }

  if (sweep->parsed()) {
    if (family != "A" && family != "B")
      throw std::invalid_argument("sweep supports families A and B");
    std::vector<arr::Rat> values = parse_alpha_list(alphas);
    std::vector<arr::SweepRow> rows(values.size());
    if (jobs < 1) jobs = 1;
    std::size_t cursor = 0;
    std::mutex mu;
    auto worker = [&]() {
      while (true) {
        std::size_t i;
        {
          std::lock_guard<std::mutex> lock(mu);
          if (cursor >= values.size()) return;
          i = cursor++;
        }
        rows[i] = arr::sweep_row(family, values[i], budget);
      }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    write_output(out, arr::format_sweep_table(family, rows));
    return kExitOk;
  }

  if (plot->parsed()) {
    arr::AnalyzeInput in = make_input(family, alpha, file, d);
    arr::Arrangement a = in.build();
    if (a.rank() == 3 && a.dim() != 3) a = arr::essentialize(a);
    if (a.rank() != 3 || a.dim() != 3)
      throw std::invalid_argument("plot needs a rank-3 arrangement");
    arr::LinearForm inf = parse_form_spec(infinity, a.dim());
    if (!a.contains(inf))
      throw std::invalid_argument("infinity form is not in the arrangement");
    arr::PlotOptions popts;
    popts.width = width;
    popts.height = height;
    write_output(out, arr::plot_svg(a, a.index_of(inf), popts));
    return kExitOk;
  }

  if (verify->parsed()) {
    std::ifstream f(cert_in);
    if (!f) throw std::invalid_argument("cannot open " + cert_in);
    std::string text((std::istreambuf_iterator<char>(f)),
                     std::istreambuf_iterator<char>());
    arr::FreenessCertificate cert;
    try {
      cert = arr::FreenessCertificate::from_json(text);
    } catch (const std::exception& e) {
      std::cerr << "malformed certificate: " << e.what() << "\n";
      return kExitInputError;
    }
    arr::VerifyResult r = arr::verify_certificate(cert);
    if (r.ok) {
      std::cout << "certificate OK: " << cert.verdict << " ("
                << cert.witness_kind << ")\n";
      return kExitOk;
    }
    std::cout << "certificate INVALID: " << r.failure << "\n";
    return kExitVerifyFailed;
  }

  return kExitInputError;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::logic_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternalError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInternalError;
  }
}
