#include "chatelet/certificate.hpp"

#include <json.hpp>
#include <sstream>

namespace chatelet {

using ordered_json = nlohmann::ordered_json;

std::string status_str(Status s) {
  switch (s) {
    case Status::Proved: return "proved";
    case Status::Enumerated: return "enumerated";
    case Status::CitedAssumption: return "cited-assumption";
    case Status::Failed: return "failed";
    default: return "inconclusive";
  }
}

Status parse_status(const std::string& s) {
  if (s == "proved") return Status::Proved;
  if (s == "enumerated") return Status::Enumerated;
  if (s == "cited-assumption") return Status::CitedAssumption;
  if (s == "failed") return Status::Failed;
  if (s == "inconclusive") return Status::Inconclusive;
  throw std::invalid_argument("parse_status: unknown status '" + s + "'");
}

bool Certificate::has_failure() const {
  for (const auto& r : results)
    if (r.status == Status::Failed) return true;
  return false;
}

bool Certificate::has_inconclusive() const {
  for (const auto& r : results)
    if (r.status == Status::Inconclusive) return true;
  return false;
}

bool Certificate::passed() const { return !has_failure() && !has_inconclusive(); }

std::string emit_certificate(const Certificate& c, bool json, bool color) {
  if (json) {
    ordered_json j;
    j["kind"] = c.kind;
    j["version"] = c.version;
    ordered_json inputs = ordered_json::object();
    for (const auto& [k, v] : c.inputs) inputs[k] = v;
    j["inputs"] = inputs;
    ordered_json results = ordered_json::array();
    for (const ResultItem& r : c.results) {
      ordered_json item;
      item["claim"] = r.claim;
      item["status"] = status_str(r.status);
      if (r.depth) item["depth"] = *r.depth;
      if (r.source) item["source"] = *r.source;
      ordered_json data = ordered_json::object();
      for (const auto& [k, v] : r.data) data[k] = v;
      item["data"] = data;
      results.push_back(item);
    }
    j["results"] = results;
    return j.dump(2) + "\n";
  }
  // text table
  const char* green = color ? "\033[32m" : "";
  const char* red = color ? "\033[31m" : "";
  const char* yellow = color ? "\033[33m" : "";
  const char* off = color ? "\033[0m" : "";
  std::ostringstream out;
  out << c.kind << " (toolkit " << c.version << ")\n";
  for (const auto& [k, v] : c.inputs) out << "  " << k << " = " << v << "\n";
  for (const ResultItem& r : c.results) {
    const char* tint = r.status == Status::Failed              ? red
                       : r.status == Status::Inconclusive      ? yellow
                       : r.status == Status::CitedAssumption   ? yellow
                                                               : green;
    out << "  [" << tint << status_str(r.status) << off << "] " << r.claim;
    if (r.depth) out << " (depth " << *r.depth << ")";
    out << "\n";
    for (const auto& [k, v] : r.data) out << "      " << k << ": " << v << "\n";
    if (r.source) out << "      source: " << *r.source << "\n";
  }
  return out.str();
}

Certificate parse_certificate(const std::string& json_text) {
  ordered_json j = ordered_json::parse(json_text);
  Certificate c;
  c.kind = j.at("kind").get<std::string>();
  c.version = j.at("version").get<std::string>();
  for (auto& [k, v] : j.at("inputs").items())
    c.inputs.emplace_back(k, v.get<std::string>());
  for (auto& item : j.at("results")) {
    ResultItem r;
    r.claim = item.at("claim").get<std::string>();
    r.status = parse_status(item.at("status").get<std::string>());
    if (item.contains("depth")) r.depth = item.at("depth").get<long>();
    if (item.contains("source")) r.source = item.at("source").get<std::string>();
    for (auto& [k, v] : item.at("data").items())
      r.data.emplace_back(k, v.get<std::string>());
    c.results.push_back(std::move(r));
  }
  return c;
}

namespace {

std::string value_set_str(bool zero, bool half) {
  if (zero && half) return "{0, 1/2}";
  if (zero) return "{0}";
  if (half) return "{1/2}";
  return "{}";
}

ResultItem entry_item(const std::string& place_label, bool zero, bool half,
                      Provenance prov, long depth,
                      const std::optional<std::string>& zero_wit,
                      const std::optional<std::string>& half_wit) {
  ResultItem r;
  r.claim = "invariant value set at " + place_label;
  r.status = prov == Provenance::Enumerated || prov == Provenance::SplitReduction
                 ? Status::Enumerated
                 : Status::Proved;
  if (r.status == Status::Enumerated) r.depth = depth;
  r.data.emplace_back("place", place_label);
  r.data.emplace_back("invariants", value_set_str(zero, half));
  r.data.emplace_back("provenance", provenance_str(prov));
  if (zero_wit) r.data.emplace_back("zero_witness_x", *zero_wit);
  if (half_wit) r.data.emplace_back("half_witness_x", *half_wit);
  return r;
}

}  // namespace

Certificate profile_certificate(const V0& v0, const QProfile& qp, const ExtProfile& ep) {
  Certificate c;
  c.kind = "invariant-profile";
  c.inputs = {{"surface", v0.surface.equation_str()},
              {"brauer_class", "(" + rat_str(v0.cls.a) + ", " + v0.cls.reps[0].str() + ")"},
              {"p1", std::to_string(v0.p1)},
              {"p2", std::to_string(v0.p2)},
              {"field_d", std::to_string(ep.field.d)},
              {"depth", std::to_string(qp.depth)},
              {"primes_upto", std::to_string(qp.prime_bound)}};
  for (const auto& [v, vs] : qp.entries) {
    std::optional<std::string> zw, hw;
    if (vs.zero_witness) zw = rat_str(*vs.zero_witness);
    if (vs.half_witness) hw = rat_str(*vs.half_witness);
    c.results.push_back(entry_item(v.label(), vs.zero, vs.half, vs.prov, vs.depth, zw, hw));
  }
  for (const auto& [w, vs] : ep.entries) {
    std::optional<std::string> zw, hw;
    if (vs.zero_witness) zw = vs.zero_witness->str();
    if (vs.half_witness) hw = vs.half_witness->str();
    c.results.push_back(entry_item(w.label(), vs.zero, vs.half, vs.prov, vs.depth, zw, hw));
  }
  return c;
}

Certificate wa_certificate(const WAFailureCertificate& w) {
  Certificate c;
  c.kind = "wa-failure";
  std::string off_str;
  for (const ExtPlace& v : w.off) off_str += (off_str.empty() ? "" : ",") + v.label();
  c.inputs = {{"field_d", std::to_string(w.field.d)},
              {"p1", std::to_string(w.p1)},
              {"p2", std::to_string(w.p2)},
              {"surface", w.surface.equation_str()},
              {"off", off_str.empty() ? "(none)" : off_str},
              {"depth", std::to_string(w.depth)},
              {"primes_upto", std::to_string(w.prime_bound)}};

  ResultItem head;
  head.claim = "adelic invariant sum over the chosen open set equals 1/2";
  head.status = Status::Proved;
  head.data.emplace_back("distinguished_place", w.w0.label());
  head.data.emplace_back("half_witness_x", w.w0_witness.str());
  if (w.w0_norm_witness) {
    head.data.emplace_back("half_witness_norm_y", rat_str(w.w0_norm_witness->first));
    head.data.emplace_back("half_witness_norm_z", rat_str(w.w0_norm_witness->second));
  }
  head.data.emplace_back("co_place", w.w1.label());
  head.data.emplace_back("zero_witness_x", w.w1_witness.str());
  if (w.w1_norm_witness) {
    head.data.emplace_back("zero_witness_norm_y", rat_str(w.w1_norm_witness->first));
    head.data.emplace_back("zero_witness_norm_z", rat_str(w.w1_norm_witness->second));
  }
  head.data.emplace_back("adelic_sum", rat_str(w.adelic_sum));
  c.results.push_back(head);

  for (const WASupportEntry& e : w.support) {
    std::optional<std::string> zw, hw;
    if (e.values.zero_witness) zw = e.values.zero_witness->str();
    if (e.values.half_witness) hw = e.values.half_witness->str();
    ResultItem item =
        entry_item(e.place.label(), e.values.zero, e.values.half, e.values.prov,
                   e.values.depth, zw, hw);
    item.data.emplace_back("chosen_invariant", invariant_str(e.chosen));
    c.results.push_back(std::move(item));
  }

  int fam = 1;
  for (const std::string& proof : w.family_proofs) {
    ResultItem item;
    item.claim = "family proof " + std::to_string(fam++);
    item.status = Status::Proved;
    item.data.emplace_back("argument", proof);
    c.results.push_back(std::move(item));
  }
  return c;
}

}  // namespace chatelet
