#pragma once

// Evaluates the hypotheses of the two exoticness criteria for a Brieskorn-Pham
// triple and packages the outcome as a certificate.
//
// DIRECT     the boundary Dehn twist of M_c(2,q,r) itself is certified
//            (odd quarter genus of T(q,r)).
// EMBEDDING  M_c(p,q,r) carries an exotic diffeomorphism obtained by
//            extending the boundary Dehn twist of an embedded M_c(2,3,7).
//            This says nothing about the boundary Dehn twist of M_c(p,q,r).

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "dtcert/arith.hpp"
#include "dtcert/milnor_fiber.hpp"

namespace dtcert {

enum class Route { direct, embedding, none };

std::string to_string(Route r);
Route parse_route(const std::string& s);

struct Condition {
  std::string name;
  std::string expected;
  std::string actual;
  bool pass = false;

  friend bool operator==(const Condition&, const Condition&) = default;
};

struct Certificate {
  Triple triple{2, 3, 7};
  Route route = Route::none;
  std::vector<Condition> conditions;
  MilnorInvariants invariants;
  std::optional<Int> eigenspace_dim;
  std::vector<std::string> notes;

  std::vector<std::string> failed_conditions() const;

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

/// Sources for the expensive quantities, so that callers can memoize them.
struct ComputeHooks {
  std::function<MilnorInvariants(const Triple&)> invariants;
  std::function<Int(Int q, Int r, SignatureMethod)> knot_signature;

  static ComputeHooks direct();
};

struct CertifyOptions {
  /// Cross-check the torus-knot signature with the Seifert form when
  /// (q-1)(r-1) is at most this value. Zero disables the check.
  Int seifert_check_limit = 240;
  ComputeHooks hooks = ComputeHooks::direct();
};

/// Odd-quarter-genus criterion for M_c(2,q,r). Throws InvalidInput only if
/// q or r is below 2; every other defect shows up as a failing condition.
Certificate certify_theorem1(Int q, Int r, const CertifyOptions& opts = {});

/// Embedding criterion: pairwise coprime, 2 <= p < q < r, r >= 7.
Certificate certify_theorem2(Int p, Int q, Int r, const CertifyOptions& opts = {});

/// DIRECT when p = 2 and the first criterion holds, otherwise the embedding
/// verdict. NONE certificates list the failures of both routes.
Certificate certify(const Triple& t, const CertifyOptions& opts = {});

nlohmann::json to_json(const Certificate& c);
Certificate certificate_from_json(const nlohmann::json& j);

nlohmann::json to_json(const MilnorInvariants& inv);
MilnorInvariants invariants_from_json(const nlohmann::json& j);

}  // namespace dtcert
