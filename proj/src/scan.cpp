#include "dtcert/scan.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

#include "dtcert/torus_knot.hpp"

namespace dtcert {

ScanMode parse_scan_mode(const std::string& s) {
  if (s == "theorem1") return ScanMode::theorem1;
  if (s == "theorem2") return ScanMode::theorem2;
  if (s == "all") return ScanMode::all;
  throw InvalidInput("unknown scan mode '" + s + "'");
}

OutputFormat parse_output_format(const std::string& s) {
  if (s == "json") return OutputFormat::json;
  if (s == "csv") return OutputFormat::csv;
  if (s == "text") return OutputFormat::text;
  throw InvalidInput("unknown output format '" + s + "'");
}

void ScanConfig::validate() const {
  if (q_max < 3 || r_max < 3 || p_max < 3) throw InvalidInput("scan bounds must be at least 3");
  if (jobs < 1) throw InvalidInput("jobs must be at least 1");
  if (seifert_check_limit < 0) throw InvalidInput("seifert limit must be nonnegative");
}

// ---------------------------------------------------------------------------
// Cache

namespace {

std::array<Int, 3> key_of(const Triple& t) { return t.sorted().values(); }

}  // namespace

nlohmann::json to_json(const CacheRecord& r) {
  nlohmann::json j;
  j["version"] = r.version;
  j["key"] = r.key.values();
  j["invariants"] = r.invariants ? to_json(*r.invariants) : nlohmann::json(nullptr);
  j["signature_count"] = r.signature_count ? nlohmann::json(*r.signature_count) : nlohmann::json(nullptr);
  j["signature_seifert"] = r.signature_seifert ? nlohmann::json(*r.signature_seifert) : nlohmann::json(nullptr);
  return j;
}

CacheRecord cache_record_from_json(const nlohmann::json& j) {
  const auto k = j.at("key").get<std::array<Int, 3>>();
  CacheRecord r{Triple(k[0], k[1], k[2]).sorted(), std::nullopt, std::nullopt, std::nullopt, j.at("version").get<int>()};
  if (!j.at("invariants").is_null()) r.invariants = invariants_from_json(j.at("invariants"));
  if (!j.at("signature_count").is_null()) r.signature_count = j.at("signature_count").get<Int>();
  if (!j.at("signature_seifert").is_null()) r.signature_seifert = j.at("signature_seifert").get<Int>();
  return r;
}

InvariantCache::InvariantCache(std::filesystem::path path, int version, std::ostream* warnings)
    : path_(std::move(path)), version_(version) {
  std::ifstream in(path_);
  if (!in) return;  // no cache yet
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    try {
      CacheRecord rec = cache_record_from_json(nlohmann::json::parse(line));
      if (rec.version != version_) continue;
      records_.insert_or_assign(rec.key.values(), std::move(rec));
    } catch (const std::exception& e) {
      if (warnings) {
        *warnings << "warning: corrupt cache file " << path_.string() << " (line " << lineno << ": " << e.what()
                  << "); rebuilding from empty\n";
      }
      records_.clear();
      rewrite_ = true;
      return;
    }
  }
}

std::optional<CacheRecord> InvariantCache::lookup(const Triple& t) const {
  std::shared_lock lock(mutex_);
  auto it = records_.find(key_of(t));
  if (it == records_.end()) {
    ++misses_;
    return std::nullopt;
  }
  ++hits_;
  return it->second;
}

void InvariantCache::store(CacheRecord record) {
  record.key = record.key.sorted();
  record.version = version_;
  std::unique_lock lock(mutex_);
  auto [it, inserted] = records_.try_emplace(record.key.values(), record);
  if (!inserted) {
    auto& cur = it->second;
    if (record.invariants) cur.invariants = std::move(record.invariants);
    if (record.signature_count) cur.signature_count = record.signature_count;
    if (record.signature_seifert) cur.signature_seifert = record.signature_seifert;
  }
  dirty_.push_back(record.key.values());
}

void InvariantCache::flush() {
  std::unique_lock lock(mutex_);
  if (!rewrite_ && dirty_.empty()) return;
  std::sort(dirty_.begin(), dirty_.end());
  dirty_.erase(std::unique(dirty_.begin(), dirty_.end()), dirty_.end());

  std::ofstream out(path_, rewrite_ ? std::ios::trunc : std::ios::app);
  if (!out) throw IoError("cannot write cache file " + path_.string());
  if (rewrite_) {
    for (const auto& [key, rec] : records_) out << to_json(rec).dump() << '\n';
  } else {
    for (const auto& key : dirty_) out << to_json(records_.at(key)).dump() << '\n';
  }
  out.flush();
  if (!out) throw IoError("error writing cache file " + path_.string());
  dirty_.clear();
  rewrite_ = false;
}

std::size_t InvariantCache::size() const {
  std::shared_lock lock(mutex_);
  return records_.size();
}

ComputeHooks InvariantCache::hooks() {
  ComputeHooks h;
  h.invariants = [this](const Triple& t) {
    if (auto rec = lookup(t); rec && rec->invariants) return *rec->invariants;
    MilnorInvariants inv = dtcert::invariants(t);
    store({t, inv, std::nullopt, std::nullopt, version_});
    return inv;
  };
  h.knot_signature = [this](Int q, Int r, SignatureMethod m) {
    const Triple key(2, q, r);
    auto rec = lookup(key);
    if (m == SignatureMethod::count) {
      if (rec && rec->signature_count) return *rec->signature_count;
      const Int s = knot_signature_count(q, r);
      store({key, std::nullopt, s, std::nullopt, version_});
      return s;
    }
    if (rec && rec->signature_seifert) return *rec->signature_seifert;
    const Int s = knot_signature_seifert(q, r, std::numeric_limits<Int>::max());
    store({key, std::nullopt, std::nullopt, s, version_});
    return s;
  };
  return h;
}

// ---------------------------------------------------------------------------
// Scan

std::vector<Triple> scan_triples(const ScanConfig& cfg) {
  std::vector<Triple> out;
  if (cfg.mode == ScanMode::theorem1) {
    for (Int q = 3; q <= std::min(cfg.q_max, cfg.r_max); ++q)
      for (Int r = q + 1; r <= cfg.r_max; ++r) out.emplace_back(2, q, r);
    return out;
  }
  for (Int p = 2; p <= std::min(cfg.p_max, cfg.r_max); ++p)
    for (Int q = p + 1; q <= std::min(cfg.q_max, cfg.r_max); ++q)
      for (Int r = q + 1; r <= cfg.r_max; ++r) out.emplace_back(p, q, r);
  return out;
}

Certificate certify_for_mode(ScanMode mode, const Triple& t, const CertifyOptions& opts) {
  switch (mode) {
    case ScanMode::theorem1: return certify_theorem1(t.q(), t.r(), opts);
    case ScanMode::theorem2: return certify_theorem2(t.p(), t.q(), t.r(), opts);
    case ScanMode::all: return certify(t, opts);
  }
  return certify(t, opts);
}

std::string csv_header() { return "p,q,r,route,mu,sigma,b_plus,b_minus,d3,eigenspace_dim,conditions_failed"; }

std::string csv_row(const Certificate& c) {
  std::ostringstream os;
  const auto& inv = c.invariants;
  os << c.triple.p() << ',' << c.triple.q() << ',' << c.triple.r() << ',' << to_string(c.route) << ',' << inv.mu << ','
     << inv.sigma << ',' << inv.b_plus() << ',' << inv.b_minus() << ',' << to_string(inv.d3) << ',';
  if (c.eigenspace_dim) os << *c.eigenspace_dim;
  os << ',';
  const auto failed = c.failed_conditions();
  for (std::size_t i = 0; i < failed.size(); ++i) os << (i ? ";" : "") << failed[i];
  return os.str();
}

std::string text_row(const Certificate& c) {
  std::ostringstream os;
  const auto& inv = c.invariants;
  os << c.triple.to_string() << ' ' << to_string(c.route) << " mu=" << inv.mu << " sigma=" << inv.sigma
     << " b+=" << inv.b_plus() << " b-=" << inv.b_minus() << " d3=" << to_string(inv.d3);
  if (c.eigenspace_dim) os << " eigenspace=" << *c.eigenspace_dim;
  const auto failed = c.failed_conditions();
  if (!failed.empty()) {
    os << " failed=";
    for (std::size_t i = 0; i < failed.size(); ++i) os << (i ? "," : "") << failed[i];
  }
  return os.str();
}

std::string text_report(const Certificate& c) {
  std::ostringstream os;
  const auto& inv = c.invariants;
  os << "triple      " << c.triple.to_string() << '\n'
     << "route       " << to_string(c.route) << '\n'
     << "invariants  mu=" << inv.mu << " sigma+=" << inv.sigma_plus << " sigma-=" << inv.sigma_minus
     << " nullity=" << inv.nullity << " sigma=" << inv.sigma << " d3=" << to_string(inv.d3) << '\n'
     << "eigenspace  " << (c.eigenspace_dim ? std::to_string(*c.eigenspace_dim) : std::string("-")) << '\n'
     << "conditions\n";
  for (const auto& k : c.conditions) {
    os << "  [" << (k.pass ? "pass" : "FAIL") << "] " << k.name << ": expected " << k.expected << "; got " << k.actual
       << '\n';
  }
  if (!c.notes.empty()) os << "notes\n";
  for (const auto& n : c.notes) os << "  - " << n << '\n';
  return os.str();
}

std::string render_certificate(const Certificate& c, OutputFormat format) {
  switch (format) {
    case OutputFormat::json: return to_json(c).dump(2) + "\n";
    case OutputFormat::csv: return csv_header() + "\n" + csv_row(c) + "\n";
    case OutputFormat::text: return text_report(c);
  }
  return {};
}

namespace {

constexpr std::size_t kChunk = 8192;

template <typename Sink>
void scan_chunks(const ScanConfig& cfg, Sink&& sink) {
  cfg.validate();
  std::optional<InvariantCache> cache;
  if (cfg.cache_path) cache.emplace(*cfg.cache_path, InvariantCache::kFormulaVersion, &std::cerr);

  CertifyOptions opts;
  opts.seifert_check_limit = cfg.seifert_check_limit;
  if (cache) opts.hooks = cache->hooks();

  const auto triples = scan_triples(cfg);
  std::vector<std::optional<Certificate>> slots;
  for (std::size_t base = 0; base < triples.size(); base += kChunk) {
    const std::size_t n = std::min(kChunk, triples.size() - base);
    slots.assign(n, std::nullopt);
    auto work = [&](std::size_t i) {
      Certificate c = certify_for_mode(cfg.mode, triples[base + i], opts);
      if (cfg.include_all || c.route != Route::none) slots[i] = std::move(c);
    };
    if (cfg.jobs <= 1) {
      for (std::size_t i = 0; i < n; ++i) work(i);
    } else {
      std::atomic<std::size_t> next{0};
      std::exception_ptr failure;
      std::mutex failure_mutex;
      std::vector<std::thread> pool;
      for (unsigned w = 0; w < cfg.jobs; ++w) {
        pool.emplace_back([&] {
          try {
            for (std::size_t i; (i = next.fetch_add(1)) < n;) work(i);
          } catch (...) {
            std::lock_guard g(failure_mutex);
            if (!failure) failure = std::current_exception();
            next = n;
          }
        });
      }
      for (auto& t : pool) t.join();
      if (failure) std::rethrow_exception(failure);
    }
    for (auto& s : slots)
      if (s) sink(*s);
  }
  if (cache) cache->flush();
}

}  // namespace

std::size_t run_scan(const ScanConfig& cfg, std::ostream& out) {
  std::size_t rows = 0;
  if (cfg.format == OutputFormat::csv) out << csv_header() << '\n';
  if (cfg.format == OutputFormat::json) out << '[';
  scan_chunks(cfg, [&](const Certificate& c) {
    switch (cfg.format) {
      case OutputFormat::csv: out << csv_row(c) << '\n'; break;
      case OutputFormat::text: out << text_row(c) << '\n'; break;
      case OutputFormat::json: out << (rows ? ",\n" : "\n") << to_json(c).dump(); break;
    }
    ++rows;
  });
  if (cfg.format == OutputFormat::json) out << (rows ? "\n]\n" : "]\n");
  return rows;
}

std::vector<Certificate> scan_certificates(const ScanConfig& cfg) {
  std::vector<Certificate> out;
  scan_chunks(cfg, [&](const Certificate& c) { out.push_back(c); });
  return out;
}

}  // namespace dtcert
