#pragma once

// Named verification suites shared by the CLI (`verify <suite>`) and the
// acceptance tests. Each suite returns a report whose checks carry
// machine-readable counts.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "wreath/oracle.hpp"
#include "wreath/subgroup_tower.hpp"

namespace wreath {

inline constexpr std::string_view kVersion = "0.1.0";

struct Check {
  std::string name;
  bool passed = true;
  bool skipped = false;
  std::string details;
  std::vector<std::pair<std::string, BigInt>> counts;

  Check& count(std::string key, BigInt value) {
    counts.emplace_back(std::move(key), std::move(value));
    return *this;
  }
  Check& fail(std::string why) {
    passed = false;
    if (!details.empty()) details += "; ";
    details += why;
    return *this;
  }
};

struct VerificationReport {
  std::string command;
  nlohmann::ordered_json parameters = nlohmann::ordered_json::object();
  std::vector<Check> checks;
  std::uint64_t seed = 0;
  std::int64_t elapsed_ms = 0;
  std::string version{kVersion};

  bool passed() const;
  nlohmann::ordered_json to_json() const;
  std::string to_text() const;
};

// Integers that fit in int64 become JSON numbers, larger ones decimal strings.
nlohmann::ordered_json big_to_json(const BigInt& v);

struct SuiteParams {
  int d = 3;
  int n = 2;
  int max_n = 6;
  int max_d = 7;
  int max_m = 12;
  std::optional<Family> family;  // both E and U when empty
  std::uint64_t seed = 0;
  std::optional<std::int64_t> samples;  // suite-specific default when empty
  std::uint64_t guard = kDefaultGuard;
};

const std::vector<std::string>& suite_names();

// Throws InvalidParameter for an unknown suite name.
VerificationReport run_suite(std::string_view name, const SuiteParams& params);

VerificationReport verify_relations(const SuiteParams& params);
VerificationReport verify_sgn2_hom(const SuiteParams& params);
VerificationReport verify_subgroup_orders(const SuiteParams& params);
VerificationReport verify_generators_closure(const SuiteParams& params);
VerificationReport verify_w_lemmas(const SuiteParams& params);
VerificationReport verify_phi_bijectivity(const SuiteParams& params);
VerificationReport verify_normalizer_oracle(const SuiteParams& params);
VerificationReport verify_prop_components(const SuiteParams& params);
VerificationReport verify_shift_identity(const SuiteParams& params);
VerificationReport verify_liu_osserman(const SuiteParams& params);
VerificationReport verify_fixed_points(const SuiteParams& params);

// Random element of the normalizer tower: phi_representative(v) times a
// random member of G_n, on a random side.
TreeAut random_tower_element(int degree, int level, Family family, std::mt19937_64& rng);

} // namespace wreath
