#include "dtcert/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>

#include "dtcert/scan.hpp"
#include "dtcert/torus_knot.hpp"

namespace dtcert::cli {

Triple parse_triple(const std::string& text) {
  std::vector<Int> parts;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = text.find(',', pos);
    const std::string piece = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    if (piece.empty() || !std::all_of(piece.begin(), piece.end(), [](unsigned char ch) { return std::isdigit(ch); }))
      throw InvalidInput("malformed triple '" + text + "': expected p,q,r");
    try {
      parts.push_back(std::stoll(piece));
    } catch (const std::out_of_range&) {
      throw InvalidInput("triple entry out of range in '" + text + "'");
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (parts.size() != 3) throw InvalidInput("malformed triple '" + text + "': expected 3 entries, got " +
                                            std::to_string(parts.size()));
  return {parts[0], parts[1], parts[2]};
}

namespace {

const std::vector<std::string> kFormats{"json", "csv", "text"};

int do_certify(const std::string& triple_text, const std::string& format, const std::string& cache_path,
               Int seifert_limit, std::ostream& out, std::ostream& err, const std::string& usage) {
  Triple t{2, 3, 7};
  try {
    t = parse_triple(triple_text);
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << "\n" << usage;
    return kInvalidInput;
  }
  std::optional<InvariantCache> cache;
  CertifyOptions opts;
  opts.seifert_check_limit = seifert_limit;
  if (!cache_path.empty()) {
    cache.emplace(cache_path, InvariantCache::kFormulaVersion, &err);
    opts.hooks = cache->hooks();
  }
  const Certificate c = certify(t, opts);
  out << render_certificate(c, parse_output_format(format));
  if (cache) cache->flush();
  return c.route == Route::none ? kNotCertified : kCertified;
}

int do_signature(const std::vector<Int>& torus, const std::string& method, Int limit, std::ostream& out,
                 std::ostream& err) {
  const Int q = torus.at(0), r = torus.at(1);
  if (q < 2 || r < 2 || gcd(q, r) != 1) {
    err << "error: T(q,r) needs coprime q, r >= 2\n";
    return kInvalidInput;
  }
  std::optional<Int> by_count, by_seifert;
  if (method == "count" || method == "both") by_count = knot_signature_count(q, r);
  if (method == "seifert" || method == "both") by_seifert = knot_signature_seifert(q, r, limit);

  out << "T(" << q << "," << r << ") genus=" << slice_genus(q, r);
  if (by_count) out << " signature_count=" << *by_count;
  if (by_seifert) out << " signature_seifert=" << *by_seifert;
  out << '\n';
  if (by_count && by_seifert && *by_count != *by_seifert) {
    err << "error: signature methods disagree\n";
    return kDefect;
  }
  return kCertified;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Certification of exotic Dehn twists on Brieskorn-Pham Milnor fibers", "dtcert"};
  app.require_subcommand(1);

  std::string triple_text, format = "text", cache_path;
  Int certify_seifert = 240;
  auto* certify_cmd = app.add_subcommand("certify", "Certify a single triple");
  certify_cmd->add_option("--triple", triple_text, "Exponents p,q,r")->required();
  certify_cmd->add_option("--format", format, "Output format")->check(CLI::IsMember(kFormats));
  certify_cmd->add_option("--cache", cache_path, "Invariant cache file (JSON lines)");
  certify_cmd->add_option("--seifert-limit", certify_seifert, "Seifert cross-check up to (q-1)(r-1) <= N")
      ->check(CLI::NonNegativeNumber);

  ScanConfig cfg;
  std::string mode = "all", scan_format = "csv", scan_cache, output;
  bool force_seifert = false;
  std::optional<Int> p_max;
  auto* scan_cmd = app.add_subcommand("scan", "Certify every triple in a range");
  scan_cmd->add_option("--mode", mode, "theorem1, theorem2 or all")
      ->check(CLI::IsMember({"theorem1", "theorem2", "all"}));
  scan_cmd->add_option("--q-max", cfg.q_max, "Bound on q")->required();
  scan_cmd->add_option("--r-max", cfg.r_max, "Bound on r")->required();
  scan_cmd->add_option("--p-max", p_max, "Bound on p (defaults to the r bound)");
  scan_cmd->add_flag("--all", cfg.include_all, "Also emit rows that are not certified");
  scan_cmd->add_option("--format", scan_format, "Output format")->check(CLI::IsMember(kFormats));
  scan_cmd->add_option("--cache", scan_cache, "Invariant cache file (JSON lines)");
  scan_cmd->add_option("--jobs", cfg.jobs, "Worker threads")->check(CLI::PositiveNumber);
  scan_cmd->add_option("--seifert-limit", cfg.seifert_check_limit, "Seifert cross-check up to (q-1)(r-1) <= N")
      ->check(CLI::NonNegativeNumber);
  scan_cmd->add_flag("--force-seifert", force_seifert, "Seifert cross-check up to the Seifert dimension cap");
  scan_cmd->add_option("--output", output, "Write the table here instead of stdout");

  std::vector<Int> torus;
  std::string method = "both";
  Int limit = kDefaultSeifertDimensionLimit;
  auto* sig_cmd = app.add_subcommand("signature", "Torus knot signature");
  sig_cmd->add_option("--torus", torus, "q r")->expected(2)->required();
  sig_cmd->add_option("--method", method, "count, seifert or both")
      ->check(CLI::IsMember({"count", "seifert", "both"}));
  sig_cmd->add_option("--limit", limit, "Seifert form dimension cap")->check(CLI::PositiveNumber);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kCertified;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kInvalidInput;
  }

  try {
    if (*certify_cmd) {
      return do_certify(triple_text, format, cache_path, certify_seifert, out, err, certify_cmd->help());
    }
    if (*scan_cmd) {
      cfg.mode = parse_scan_mode(mode);
      cfg.format = parse_output_format(scan_format);
      cfg.p_max = p_max.value_or(cfg.r_max);
      if (!scan_cache.empty()) cfg.cache_path = scan_cache;
      if (force_seifert) cfg.seifert_check_limit = kDefaultSeifertDimensionLimit;
      if (output.empty()) {
        run_scan(cfg, out);
      } else {
        std::ofstream file(output);
        if (!file) throw IoError("cannot open output file " + output);
        run_scan(cfg, file);
        if (!file.flush()) throw IoError("error writing output file " + output);
      }
      return kCertified;
    }
    if (*sig_cmd) return do_signature(torus, method, limit, out, err);
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kIoFailure;
  } catch (const ConsistencyError& e) {
    err << "defect: " << e.what() << '\n';
    return kDefect;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const UnsupportedInput& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  }
  return kInvalidInput;
}

}  // namespace dtcert::cli
