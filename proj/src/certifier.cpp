#include "dtcert/certifier.hpp"

#include <algorithm>

#include "dtcert/ko_ring.hpp"
#include "dtcert/torus_knot.hpp"

namespace dtcert {

std::string to_string(Route r) {
  switch (r) {
    case Route::direct: return "DIRECT";
    case Route::embedding: return "EMBEDDING";
    case Route::none: return "NONE";
  }
  return "NONE";
}

Route parse_route(const std::string& s) {
  if (s == "DIRECT") return Route::direct;
  if (s == "EMBEDDING") return Route::embedding;
  if (s == "NONE") return Route::none;
  throw InvalidInput("unknown route '" + s + "'");
}

std::vector<std::string> Certificate::failed_conditions() const {
  std::vector<std::string> out;
  for (const auto& c : conditions)
    if (!c.pass) out.push_back(c.name);
  return out;
}

ComputeHooks ComputeHooks::direct() {
  return {[](const Triple& t) { return dtcert::invariants(t); },
          [](Int q, Int r, SignatureMethod m) {
            return m == SignatureMethod::count ? knot_signature_count(q, r) : knot_signature_seifert(q, r);
          }};
}

namespace {

std::string pair_str(Int q, Int r) { return "q=" + std::to_string(q) + ", r=" + std::to_string(r); }

bool all_pass(const std::vector<Condition>& cs) {
  return std::all_of(cs.begin(), cs.end(), [](const Condition& c) { return c.pass; });
}

const char* kSpinNote = "canonical bundle of the Milnor fiber is trivial: the canonical spin^c structure is spin";
const char* kUnitNote =
    "psi_0 taken to generate KO^0(pt) (Stein filling of the canonical contact structure); recorded, not computed";

}  // namespace

Certificate certify_theorem1(Int q, Int r, const CertifyOptions& opts) {
  Certificate cert{Triple(2, q, r), Route::none, {}, {}, std::nullopt, {}};
  auto& conds = cert.conditions;

  const bool odd = q % 2 != 0 && r % 2 != 0;
  conds.push_back({"theorem1.q_r_odd", "q and r odd", pair_str(q, r), odd});
  const bool big = q >= 3 && r >= 3;
  conds.push_back({"theorem1.q_r_at_least_3", "q >= 3 and r >= 3", pair_str(q, r), big});
  const Int g = gcd(q, r);
  conds.push_back({"theorem1.q_r_coprime", "gcd(q,r) = 1", "gcd(q,r) = " + std::to_string(g), g == 1});

  cert.invariants = opts.hooks.invariants(cert.triple);
  cert.notes.push_back(kSpinNote);

  const bool domain_ok = odd && big && g == 1;
  if (!domain_ok) {
    conds.push_back({"theorem1.quarter_genus_odd", "(q-1)(r-1)/4 odd", "undefined: q, r not odd coprime >= 3", false});
    return cert;
  }

  const Int quarter = checked_mul(q - 1, r - 1) / 4;
  const bool parity = quarter_genus_is_odd(q, r);
  conds.push_back({"theorem1.quarter_genus_odd", "(q-1)(r-1)/4 odd", "(q-1)(r-1)/4 = " + std::to_string(quarter), parity});

  // b+ from the lattice count and from genus + signature/2 must agree, and
  // its class mod 4 must match the parity of the quarter genus.
  const Int b_lattice = cert.invariants.sigma_plus;
  const Int sigma_count = opts.hooks.knot_signature(q, r, SignatureMethod::count);
  if (sigma_count % 2 != 0) throw ConsistencyError("odd torus knot signature for " + pair_str(q, r));
  const Int b_lemma = slice_genus(q, r) + sigma_count / 2;
  if (b_lattice != b_lemma) {
    throw ConsistencyError("b+ mismatch for " + cert.triple.to_string() + ": lattice count " +
                           std::to_string(b_lattice) + ", genus formula " + std::to_string(b_lemma));
  }
  conds.push_back({"theorem1.b_plus_routes_agree", "lattice b+ = g + sigma/2",
                   std::to_string(b_lattice) + " = " + std::to_string(slice_genus(q, r)) + " + (" +
                       std::to_string(sigma_count) + ")/2",
                   true});

  const Int dim = checked_mul(q - 1, r - 1);
  if (opts.seifert_check_limit > 0 && dim <= opts.seifert_check_limit) {
    const Int sigma_seifert = opts.hooks.knot_signature(q, r, SignatureMethod::seifert);
    if (sigma_seifert != sigma_count) {
      throw ConsistencyError("torus knot signature mismatch for " + pair_str(q, r) + ": Seifert form " +
                             std::to_string(sigma_seifert) + ", lattice count " + std::to_string(sigma_count));
    }
    conds.push_back({"theorem1.signature_methods_agree", "Seifert signature = lattice signature",
                     std::to_string(sigma_seifert) + " = " + std::to_string(sigma_count), true});
  }

  const bool mod4 = b_lattice % 4 == 2;
  if (mod4 != parity) {
    throw ConsistencyError("quarter genus parity and b+ mod 4 disagree for " + cert.triple.to_string());
  }
  conds.push_back({"theorem1.b_plus_mod_4", "b+ = 2 (mod 4)", "b+ = " + std::to_string(b_lattice), mod4});

  // The boundary Dehn twist extends to an involution-like map acting by -1 on all of H+.
  cert.eigenspace_dim = b_lattice;
  const ko::LedgerOutcome ledger = ko::exoticness_ledger(b_lattice, true);
  conds.push_back({"theorem1.framing_ledger", "torsion component flips under reframing",
                   ledger.hypotheses_hold() ? std::to_string(ledger.torsion_pulled_back) + " -> " +
                                                  std::to_string(ledger.torsion_reframed)
                                            : "hypothesis failed: " + *ledger.failed_hypothesis,
                   ledger.exotic});
  cert.notes.push_back(kUnitNote);
  if (q == 3 || r == 3) {
    cert.notes.push_back("q = 3: (2,3,7) and (2,3,11) were already known to carry exotic boundary Dehn twists");
  }

  if (all_pass(conds)) cert.route = Route::direct;
  return cert;
}

Certificate certify_theorem2(Int p, Int q, Int r, const CertifyOptions& opts) {
  const Triple t(p, q, r);
  Certificate cert{t, Route::none, {}, {}, std::nullopt, {}};
  auto& conds = cert.conditions;

  const bool coprime = is_pairwise_coprime(t);
  conds.push_back({"theorem2.pairwise_coprime", "gcd = 1 pairwise",
                   "gcd(p,q)=" + std::to_string(gcd(p, q)) + ", gcd(q,r)=" + std::to_string(gcd(q, r)) +
                       ", gcd(p,r)=" + std::to_string(gcd(p, r)),
                   coprime});
  const bool ordered = p >= 2 && t.is_strictly_increasing();
  conds.push_back({"theorem2.strictly_increasing", "2 <= p < q < r", t.to_string(), ordered});
  conds.push_back({"theorem2.r_at_least_7", "r >= 7", "r = " + std::to_string(r), r >= 7});

  cert.invariants = opts.hooks.invariants(t);
  cert.notes.push_back(kSpinNote);

  if (all_pass(conds)) {
    const MilnorInvariants base = opts.hooks.invariants(Triple(2, 3, 7));
    const ko::LedgerOutcome ledger = ko::exoticness_ledger(base.sigma_plus, true);
    conds.push_back({"theorem2.embedded_fiber_ledger", "b+(M_c(2,3,7)) = 2 and torsion flips",
                     "b+ = " + std::to_string(base.sigma_plus) +
                         (ledger.exotic ? ", flips" : ", no flip"),
                     base.sigma_plus == 2 && ledger.exotic});
    cert.eigenspace_dim = base.sigma_plus;
    cert.notes.push_back("M_c(2,3,7) embeds in M_c" + t.to_string() + " by monotonicity of the exponents");
    cert.notes.push_back(
        "Mayer-Vietoris splits H+ so the extended twist acts by -1 exactly on H+(M_c(2,3,7)), dimension 2");
    cert.notes.push_back(
        "certifies an exotic diffeomorphism extended from M_c(2,3,7), not the boundary Dehn twist of M_c" +
        t.to_string());
    cert.notes.push_back(kUnitNote);
  }

  if (all_pass(conds)) cert.route = Route::embedding;
  return cert;
}

Certificate certify(const Triple& t, const CertifyOptions& opts) {
  std::vector<Condition> first_route;
  if (t.p() == 2) {
    Certificate direct = certify_theorem1(t.q(), t.r(), opts);
    if (direct.route == Route::direct) return direct;
    first_route = std::move(direct.conditions);
  } else {
    first_route.push_back({"theorem1.p_equals_2", "p = 2", "p = " + std::to_string(t.p()), false});
  }

  Certificate cert = certify_theorem2(t.p(), t.q(), t.r(), opts);
  if (cert.route == Route::embedding) {
    cert.notes.push_back("direct criterion not met; embedding criterion applies");
    return cert;
  }
  first_route.insert(first_route.end(), cert.conditions.begin(), cert.conditions.end());
  cert.conditions = std::move(first_route);
  return cert;
}

// JSON

nlohmann::json to_json(const MilnorInvariants& inv) {
  return {{"mu", inv.mu},           {"sigma_plus", inv.sigma_plus}, {"sigma_minus", inv.sigma_minus},
          {"nullity", inv.nullity}, {"sigma", inv.sigma},           {"d3", to_string(inv.d3)}};
}

MilnorInvariants invariants_from_json(const nlohmann::json& j) {
  MilnorInvariants inv;
  inv.mu = j.at("mu").get<Int>();
  inv.sigma_plus = j.at("sigma_plus").get<Int>();
  inv.sigma_minus = j.at("sigma_minus").get<Int>();
  inv.nullity = j.at("nullity").get<Int>();
  inv.sigma = j.at("sigma").get<Int>();
  inv.d3 = parse_rational(j.at("d3").get<std::string>());
  return inv;
}

nlohmann::json to_json(const Certificate& c) {
  nlohmann::json conds = nlohmann::json::array();
  for (const auto& k : c.conditions) {
    conds.push_back({{"name", k.name}, {"expected", k.expected}, {"actual", k.actual}, {"pass", k.pass}});
  }
  nlohmann::json j;
  j["triple"] = {c.triple.p(), c.triple.q(), c.triple.r()};
  j["route"] = to_string(c.route);
  j["conditions"] = std::move(conds);
  j["invariants"] = to_json(c.invariants);
  j["eigenspace_dim"] = c.eigenspace_dim ? nlohmann::json(*c.eigenspace_dim) : nlohmann::json(nullptr);
  j["notes"] = c.notes;
  return j;
}

Certificate certificate_from_json(const nlohmann::json& j) {
  const auto& t = j.at("triple");
  if (!t.is_array() || t.size() != 3) throw InvalidInput("certificate: triple must be an array of 3 integers");
  Certificate c{Triple(t[0].get<Int>(), t[1].get<Int>(), t[2].get<Int>()), parse_route(j.at("route").get<std::string>()),
                {}, invariants_from_json(j.at("invariants")), std::nullopt, j.at("notes").get<std::vector<std::string>>()};
  for (const auto& k : j.at("conditions")) {
    c.conditions.push_back({k.at("name").get<std::string>(), k.at("expected").get<std::string>(),
                            k.at("actual").get<std::string>(), k.at("pass").get<bool>()});
  }
  if (!j.at("eigenspace_dim").is_null()) c.eigenspace_dim = j.at("eigenspace_dim").get<Int>();
  return c;
}

}  // namespace dtcert
