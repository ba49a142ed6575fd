#pragma once

// Canonical JSON and plain-text serialization of every report type.  All
// numbers are exact: integers are emitted as JSON numbers when they fit in
// 64 bits and as decimal strings otherwise; rationals are {num, den} objects
// in lowest terms.

#include <nlohmann/json.hpp>

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "gitworst/futaki.hpp"
#include "gitworst/hilbert.hpp"
#include "gitworst/ideal.hpp"
#include "gitworst/monomial.hpp"
#include "gitworst/state.hpp"
#include "gitworst/worst.hpp"

namespace gitworst {

using Json = nlohmann::ordered_json;

inline Json json_int(const Int& v) {
  if (v <= std::numeric_limits<long long>::max() && v >= std::numeric_limits<long long>::min())
    return v.convert_to<long long>();
  return v.str();
}

inline Json json_rational(const Rat& q) {
  return Json{{"num", json_int(numerator(q))}, {"den", json_int(denominator(q))}};
}

inline Json json_int_list(const std::vector<Int>& vs) {
  Json arr = Json::array();
  for (const Int& v : vs) arr.push_back(json_int(v));
  return arr;
}

inline Json json_monomials(const std::vector<Monomial>& ms) {
  Json arr = Json::array();
  for (const Monomial& m : ms) arr.push_back(m.str());
  return arr;
}

// ---------------------------------------------------------------------------

inline Json json_macaulay(const HilbertPolySpec& spec) {
  Json out;
  out["r"] = spec.r();
  out["poly"] = spec.canonical_text();
  out["bSequence"] = spec.b_sequence();
  out["aSequence"] = spec.a_sequence();
  out["gotzmann"] = spec.gotzmann_number();
  out["gamma"] = spec.gamma();
  if (auto p = spec.p_const()) out["p"] = *p;
  return out;
}

inline Json json_scalars(const DerivedScalars& sc) {
  Json out;
  out["d"] = sc.d;
  out["delta"] = sc.delta;
  out["l"] = sc.l;
  out["e"] = json_int(sc.e);
  out["rho"] = json_int(sc.rho);
  out["pOfD"] = json_int(sc.pOfD);
  out["alpha"] = json_int(sc.alpha);
  out["epsilon"] = json_int(sc.epsilon);
  out["discriminant"] = sc.discriminant ? json_int(*sc.discriminant) : Json(nullptr);
  out["center"] = json_int(sc.center);
  out["lPrime"] = sc.lPrime ? Json(*sc.lPrime) : Json(nullptr);
  out["ePrime"] = sc.ePrime ? json_int(*sc.ePrime) : Json(nullptr);
  return out;
}

inline Json json_thresholds(const HilbertPolySpec& spec, long long cap,
                            const std::optional<long long>& dP,
                            const std::optional<long long>& dUp) {
  Json out;
  out["spec"] = spec.canonical_text();
  out["r"] = spec.r();
  out["cap"] = cap;
  out["DP"] = dP ? Json(*dP) : Json(nullptr);
  out["Dup"] = dUp ? Json(*dUp) : Json(nullptr);
  return out;
}

inline Json json_state(const StateVector& s, const std::optional<OnePS>& lambda) {
  Json out;
  out["c"] = json_int_list(s.coords);
  out["d"] = s.d;
  out["b"] = s.b;
  out["normSq"] = json_int(s.norm_sq());
  Rat d0 = s.dist0_sq();
  out["dist0SqNum"] = json_int(numerator(d0));
  out["dist0SqDen"] = json_int(denominator(d0));
  out["lambda"] = lambda ? json_int_list(lambda->weights) : Json(nullptr);
  return out;
}

inline Json json_worst(const WorstReport& rep) {
  Json out;
  out["r"] = rep.r;
  out["d"] = rep.d;
  out["b"] = rep.b;
  if (rep.specText) out["poly"] = *rep.specText;
  out["method"] = rep.method;
  out["searchedCount"] = json_int(rep.searchedCount);
  out["maxNormSq"] = json_int(rep.maxNormSq);
  out["dist0SqNum"] = json_int(numerator(rep.dist0Sq));
  out["dist0SqDen"] = json_int(denominator(rep.dist0Sq));
  Json maxs = Json::array();
  for (size_t i = 0; i < rep.maximizers.size(); ++i) {
    Json entry;
    entry["members"] = json_monomials(rep.maximizers[i].members());
    entry["state"] = json_int_list(state_vector(rep.maximizers[i]).coords);
    entry["adapted"] = rep.adapted[i] ? json_int_list(rep.adapted[i]->weights) : Json(nullptr);
    if (i < rep.persistenceOk.size()) entry["persistence"] = static_cast<bool>(rep.persistenceOk[i]);
    if (i < rep.borelOk.size()) entry["borelAfterPermutation"] = static_cast<bool>(rep.borelOk[i]);
    if (i < rep.pointSupportOk.size())
      entry["pointSupport"] = static_cast<bool>(rep.pointSupportOk[i]);
    if (i < rep.decompositions.size()) {
      const WorstDecomposition& dec = rep.decompositions[i];
      entry["decomposition"] = Json{{"z0", json_monomials(dec.z0.members())},
                                    {"z1", json_monomials(dec.z1.members())},
                                    {"P0", dec.P0.canonical_text()},
                                    {"P1", dec.P1.canonical_text()}};
    }
    maxs.push_back(std::move(entry));
  }
  out["maximizers"] = std::move(maxs);
  Json reps = Json::array();
  for (const MonomialSubspace& W : rep.orbitRepresentatives)
    reps.push_back(json_monomials(W.members()));
  out["orbitRepresentatives"] = std::move(reps);
  if (rep.unrestrictedMaxNormSq) out["unrestrictedMaxNormSq"] = json_int(*rep.unrestrictedMaxNormSq);
  if (rep.windowCertified) out["windowCertified"] = *rep.windowCertified;
  return out;
}

inline Json json_regularity(const RegularityReport& rep) {
  Json out;
  Json gens = Json::array();
  for (const Monomial& g : rep.input.generators()) gens.push_back(g.str());
  out["generators"] = std::move(gens);
  Json sat = Json::array();
  for (const Monomial& g : rep.saturated.generators()) sat.push_back(g.str());
  out["saturated"] = std::move(sat);
  out["borelFixed"] = rep.borelPerm.has_value();
  out["regularity"] = rep.regularity ? Json(*rep.regularity) : Json(nullptr);
  return out;
}

inline Json json_persistence(const PersistenceReport& rep) {
  Json out;
  out["pass"] = rep.pass;
  out["dim"] = json_int(rep.dim);
  out["expectedDim"] = json_int(rep.expectedDim);
  out["grownDim"] = json_int(rep.grownDim);
  out["expectedGrownDim"] = json_int(rep.expectedGrownDim);
  return out;
}

inline Json json_murai(const MuraiReport& rep) {
  Json out;
  out["pass"] = rep.pass;
  out["divisorOk"] = rep.divisorOk;
  out["commonDivisor"] = rep.commonDivisor ? Json(rep.commonDivisor->str()) : Json(nullptr);
  out["exchangeOk"] = rep.exchangeOk;
  Json fails = Json::array();
  for (size_t i = 0; i < rep.nonMembers.size(); ++i)
    if (rep.witnessIndex[i] < 0) fails.push_back(rep.nonMembers[i].str());
  out["failures"] = std::move(fails);
  return out;
}

inline Json json_futaki(const FutakiExpansion& fe, bool destabilized) {
  Json out;
  out["lambda"] = json_int_list(fe.lambda.weights);
  out["A0"] = json_rational(fe.A0);
  out["A1"] = json_rational(fe.A1);
  out["destabilized"] = destabilized;
  return out;
}

// ---------------------------------------------------------------------------
// Plain-text rendering: a stable line-oriented view of the same data.

inline std::string text_report(const Json& j, int indent = 0) {
  std::ostringstream os;
  const std::string pad(static_cast<size_t>(indent) * 2, ' ');
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (v.is_object() || (v.is_array() && !v.empty() && (v.front().is_object() || v.front().is_array()))) {
        os << pad << k << ":\n" << text_report(v, indent + 1);
      } else {
        os << pad << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
      }
    }
  } else if (j.is_array()) {
    for (const auto& v : j) {
      if (v.is_object() || v.is_array())
        os << pad << "-\n" << text_report(v, indent + 1);
      else
        os << pad << "- " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    }
  } else {
    os << pad << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
  return os.str();
}

/// Final rendering per the --format flag.
inline std::string emit_report(const Json& j, const std::string& format) {
  if (format == "json") return j.dump(2) + "\n";
  if (format == "text") return text_report(j);
  throw std::invalid_argument("unknown format: " + format);
}

}  // namespace gitworst
