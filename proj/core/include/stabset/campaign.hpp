#ifndef STABSET_CAMPAIGN_HPP
#define STABSET_CAMPAIGN_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace stabset::campaign {

struct PropertyResult {
  std::string module;
  std::string name;
  int instances = 0;
  int failures = 0;
  std::string counterexample;  // first failure, rendered
};

struct CampaignReport {
  std::uint64_t seed = 0;
  int scale = 1;
  std::vector<PropertyResult> properties;

  bool all_pass() const;
};

// Runs every module's randomized property suite. Deterministic in the seed;
// scale multiplies instance counts, scale 0 runs nothing.
CampaignReport run_campaign(std::uint64_t seed, int scale);

}  // namespace stabset::campaign

#endif
