#include <schur/serialize.hpp>

#include <json.hpp>

namespace schur::io {

namespace {

using json = nlohmann::ordered_json;

json int_to_json(const Int& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

Int int_from_json(const json& j) {
  if (j.is_string()) return Int(j.get<std::string>(), 10);
  if (j.is_number_unsigned()) return Int(j.get<unsigned long>());
  return Int(j.get<long>());
}

json weight_to_json(const Weight& w) {
  json arr = json::array();
  for (const Int& e : w.entries()) arr.push_back(int_to_json(e));
  return arr;
}

Weight weight_from(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("weight: expected a JSON array, got " + j.dump());
  std::vector<Int> entries;
  entries.reserve(j.size());
  for (const json& e : j) entries.push_back(int_from_json(e));
  return Weight(std::move(entries));
}

json character_to_json(const Character& x) {
  json out;
  out["rank"] = x.rank();
  json terms = json::array();
  for (const auto& [w, mult] : x.terms()) {
    terms.push_back(json{{"weight", weight_to_json(w)}, {"mult", int_to_json(mult)}});
  }
  out["terms"] = std::move(terms);
  return out;
}

Character character_from(const json& j) {
  std::map<Weight, Int> terms;
  for (const json& term : j.at("terms")) {
    terms.emplace(weight_from(term.at("weight")), int_from_json(term.at("mult")));
  }
  return Character(j.at("rank").get<std::size_t>(), std::move(terms));
}

json end_algebra_to_json(const EndAlgebra& e) {
  json out;
  if (e.truncated) {
    out["generators"] = e.truncated->generators;
    out["cap"] = e.truncated->cap;
  }
  out["dimension"] = e.dim.get_str();
  return out;
}

EndAlgebra end_algebra_from(const json& j) {
  EndAlgebra out;
  out.dim = Int(j.at("dimension").get<std::string>(), 10);
  if (j.contains("generators")) {
    out.truncated = TruncatedPolyAlgebra{j.at("generators").get<unsigned long>(),
                                         j.at("cap").get<unsigned long>()};
  }
  return out;
}

json index_to_json(const AdmissibleIndex& ix) {
  return json{{"value", ix.value}, {"exact", ix.exact}};
}

AdmissibleIndex index_from(const json& j) {
  return AdmissibleIndex{j.at("value").get<unsigned long>(), j.at("exact").get<bool>()};
}

json descriptor_to_json(const InjectiveDescriptor& d) {
  json out;
  out["socle_weight"] = weight_to_json(d.socle_weight.weight());
  if (d.character) out["character"] = character_to_json(*d.character);
  out["end_algebra"] = end_algebra_to_json(d.end_algebra);
  out["index"] = index_to_json(d.index);
  return out;
}

InjectiveDescriptor descriptor_from(const json& j) {
  InjectiveDescriptor out{DominantWeight(weight_from(j.at("socle_weight"))), std::nullopt,
                          end_algebra_from(j.at("end_algebra")), index_from(j.at("index"))};
  if (j.contains("character")) out.character = character_from(j.at("character"));
  return out;
}

json construction_to_json(const ConstructionResult& r) {
  json out;
  out["regime"] = r.regime == Regime::classical ? "classical" : "quantum";
  out["n"] = r.n;
  out["p"] = int_to_json(r.p);
  out["m"] = r.m;
  out["P"] = int_to_json(r.P);
  if (r.l) out["l"] = int_to_json(*r.l);
  out["h"] = r.h;
  out["r"] = int_to_json(r.r);
  if (r.u_minus1) out["u_minus1"] = int_to_json(*r.u_minus1);
  if (r.lambda_minus1) out["lambda_minus1"] = weight_to_json(r.lambda_minus1->weight());
  json digits = json::array();
  for (const Int& u : r.digits) digits.push_back(int_to_json(u));
  out["digits"] = std::move(digits);
  json factors = json::array();
  for (const DominantWeight& f : r.lambda_factors) factors.push_back(weight_to_json(f.weight()));
  out["lambda_factors"] = std::move(factors);
  out["gamma"] = weight_to_json(r.gamma.weight());
  out["mu"] = weight_to_json(r.mu.weight());
  if (r.descriptor.character) out["character"] = character_to_json(*r.descriptor.character);
  out["end_algebra"] = end_algebra_to_json(r.descriptor.end_algebra);
  out["index"] = index_to_json(r.descriptor.index);
  out["repdim_lower_bound"] = int_to_json(r.repdim_lower_bound);
  return out;
}

ConstructionResult construction_from(const json& j) {
  const bool quantum = j.at("regime").get<std::string>() == "quantum";
  InjectiveDescriptor descriptor{DominantWeight(weight_from(j.at("mu"))), std::nullopt,
                                 end_algebra_from(j.at("end_algebra")),
                                 index_from(j.at("index"))};
  if (j.contains("character")) descriptor.character = character_from(j.at("character"));

  std::vector<Int> digits;
  for (const json& u : j.at("digits")) digits.push_back(int_from_json(u));
  std::vector<DominantWeight> factors;
  for (const json& f : j.at("lambda_factors")) factors.emplace_back(weight_from(f));

  return ConstructionResult{
      quantum ? Regime::quantum : Regime::classical,
      j.at("n").get<std::size_t>(),
      int_from_json(j.at("p")),
      j.at("m").get<unsigned long>(),
      int_from_json(j.at("P")),
      j.contains("l") ? std::optional<Int>(int_from_json(j.at("l"))) : std::nullopt,
      j.at("h").get<unsigned long>(),
      int_from_json(j.at("r")),
      j.contains("u_minus1") ? std::optional<Int>(int_from_json(j.at("u_minus1")))
                             : std::nullopt,
      j.contains("lambda_minus1")
          ? std::optional<DominantWeight>(DominantWeight(weight_from(j.at("lambda_minus1"))))
          : std::nullopt,
      std::move(digits),
      std::move(factors),
      DominantWeight(weight_from(j.at("gamma"))),
      DominantWeight(weight_from(j.at("mu"))),
      std::move(descriptor),
      int_from_json(j.at("repdim_lower_bound"))};
}

json report_to_json(const OracleReport& r) {
  json out;
  out["identity"] = r.identity;
  out["checked"] = r.checked;
  json failures = json::array();
  for (const OracleFailure& f : r.failures) {
    failures.push_back(json{{"inputs", f.inputs}, {"expected", f.expected}, {"got", f.got}});
  }
  out["failures"] = std::move(failures);
  return out;
}

OracleReport report_from(const json& j) {
  OracleReport out;
  out.identity = j.at("identity").get<std::string>();
  out.checked = j.at("checked").get<std::uint64_t>();
  for (const json& f : j.at("failures")) {
    out.failures.push_back({f.at("inputs").get<std::string>(),
                            f.at("expected").get<std::string>(),
                            f.at("got").get<std::string>()});
  }
  return out;
}

}  // namespace

std::string to_json(const Weight& w) { return weight_to_json(w).dump(); }

Weight weight_from_json(const std::string& text) { return weight_from(json::parse(text)); }

std::string to_json(const Character& x) { return character_to_json(x).dump(); }

Character character_from_json(const std::string& text) {
  return character_from(json::parse(text));
}

std::string to_json(const InjectiveDescriptor& d) { return descriptor_to_json(d).dump(); }

InjectiveDescriptor descriptor_from_json(const std::string& text) {
  return descriptor_from(json::parse(text));
}

std::string to_json(const ConstructionResult& r) { return construction_to_json(r).dump(); }

ConstructionResult construction_from_json(const std::string& text) {
  return construction_from(json::parse(text));
}

std::string to_json(const OracleReport& r) { return report_to_json(r).dump(); }

std::string to_json(const std::vector<OracleReport>& reports) {
  json arr = json::array();
  for (const OracleReport& r : reports) arr.push_back(report_to_json(r));
  return arr.dump();
}

OracleReport report_from_json(const std::string& text) { return report_from(json::parse(text)); }

}  // namespace schur::io
