#pragma once

// Batch certification over ranges of triples, output rendering and the
// persistent invariant cache.

#include <array>
#include <atomic>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <shared_mutex>
#include <string>
#include <vector>

#include "dtcert/certifier.hpp"

namespace dtcert {

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class ScanMode { theorem1, theorem2, all };
enum class OutputFormat { json, csv, text };

ScanMode parse_scan_mode(const std::string& s);
OutputFormat parse_output_format(const std::string& s);

struct ScanConfig {
  Int q_max = 11;
  Int r_max = 11;
  Int p_max = 11;
  ScanMode mode = ScanMode::all;
  OutputFormat format = OutputFormat::csv;
  std::optional<std::filesystem::path> cache_path;
  unsigned jobs = 1;
  bool include_all = false;  // also emit NONE rows
  Int seifert_check_limit = 240;

  void validate() const;
};

/// One cached entry, keyed by the ascending triple. Torus knot signatures are
/// stored on the entry of (2,q,r).
struct CacheRecord {
  Triple key{2, 3, 7};
  std::optional<MilnorInvariants> invariants;
  std::optional<Int> signature_count;
  std::optional<Int> signature_seifert;
  int version = 0;

  friend bool operator==(const CacheRecord&, const CacheRecord&) = default;
};

/// JSON-lines cache file. Lookups may run concurrently; stores are serialized.
/// Records with another version stamp are ignored. A line that fails to parse
/// discards the whole file (with a warning) and the next flush rewrites it.
class InvariantCache {
 public:
  static constexpr int kFormulaVersion = 1;

  explicit InvariantCache(std::filesystem::path path, int version = kFormulaVersion, std::ostream* warnings = nullptr);

  std::optional<CacheRecord> lookup(const Triple& t) const;
  /// Merges the present fields of `record` into the entry for its key.
  void store(CacheRecord record);
  /// Writes pending records to disk. Throws IoError naming the path.
  void flush();

  ComputeHooks hooks();

  std::size_t size() const;
  std::size_t hits() const { return hits_; }
  std::size_t misses() const { return misses_; }
  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
  int version_;
  mutable std::shared_mutex mutex_;
  std::map<std::array<Int, 3>, CacheRecord> records_;
  std::vector<std::array<Int, 3>> dirty_;
  bool rewrite_ = false;
  mutable std::atomic<std::size_t> hits_{0};
  mutable std::atomic<std::size_t> misses_{0};
};

nlohmann::json to_json(const CacheRecord& r);
CacheRecord cache_record_from_json(const nlohmann::json& j);

/// Triples visited by a scan, in lexicographic order.
std::vector<Triple> scan_triples(const ScanConfig& cfg);

Certificate certify_for_mode(ScanMode mode, const Triple& t, const CertifyOptions& opts);

/// Runs the scan and writes the rendered table to `out`. Returns the number
/// of rows written.
std::size_t run_scan(const ScanConfig& cfg, std::ostream& out);

/// Runs the scan and returns the emitted certificates (for small ranges).
std::vector<Certificate> scan_certificates(const ScanConfig& cfg);

std::string csv_header();
std::string csv_row(const Certificate& c);
std::string text_row(const Certificate& c);
std::string text_report(const Certificate& c);

/// Renders one certificate for the `certify` verb.
std::string render_certificate(const Certificate& c, OutputFormat format);

}  // namespace dtcert
