#ifndef CHATELET_CERTIFICATE_HPP
#define CHATELET_CERTIFICATE_HPP

#include "chatelet/invariants.hpp"

namespace chatelet {

inline constexpr const char* kToolkitVersion = "0.1.0";

struct Config {
  long depth = 4;
  long prime_scan_bound = 100000;  // find_prime_pair search guard
  long prime_table_bound = 200;    // profile / certificate support places
  bool json = true;

  void validate() const {
    if (depth < 1 || prime_scan_bound < 1 || prime_table_bound < 1)
      throw std::invalid_argument("config: bounds must be positive");
  }
};

enum class Status { Proved, Enumerated, CitedAssumption, Failed, Inconclusive };

std::string status_str(Status s);
Status parse_status(const std::string& s);

// One verified (or failed, or assumed) claim. `data` is an ordered key-value
// list; rationals are serialized as exact "num/den" strings, invariants as
// "0" / "1/2", places by their labels.
struct ResultItem {
  std::string claim;
  Status status = Status::Proved;
  std::vector<std::pair<std::string, std::string>> data;
  std::optional<long> depth;          // required when status = enumerated
  std::optional<std::string> source;  // required when status = cited-assumption
};

struct Certificate {
  std::string kind;
  std::string version = kToolkitVersion;
  std::vector<std::pair<std::string, std::string>> inputs;
  std::vector<ResultItem> results;

  bool passed() const;        // no failed and no inconclusive items
  bool has_failure() const;
  bool has_inconclusive() const;
};

// JSON uses insertion-ordered keys: kind, version, inputs, results; item keys
// claim, status, depth?, source?, then the data pairs. Identical input gives
// byte-identical output.
std::string emit_certificate(const Certificate& c, bool json, bool color = false);
Certificate parse_certificate(const std::string& json_text);

Certificate profile_certificate(const V0& v0, const QProfile& qp, const ExtProfile& ep);
Certificate wa_certificate(const WAFailureCertificate& c);

}  // namespace chatelet

#endif
