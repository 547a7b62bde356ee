#ifndef STABSET_EPISTURMIAN_HPP
#define STABSET_EPISTURMIAN_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "stabset/substitution.hpp"

namespace stabset::monoid {

// L(a): a -> a, b -> ab.  R(a): a -> a, b -> ba.
struct Token {
  bool left = true;
  char letter = 0;

  bool operator==(const Token&) const = default;
  std::string str() const { return std::string(left ? "L" : "R") + letter; }
};

// Whitespace-separated tokens like "La Lb Ra".
std::vector<Token> parse_directive(const std::string& text, const std::string& alphabet);

subst::Substitution token_substitution(Token t, const std::string& alphabet);

struct EpiReport {
  std::string prefix;                    // stable common prefix, possibly shorter than asked
  std::vector<std::size_t> step_lengths; // stable length after each directive step
};

// Longest common prefix of the images of all infinite words under
// phi_{d1} ... phi_{dn}, for growing n, cut at len. The walk runs over
// residual suffixes of the letter images, so the prefix is exact.
EpiReport episturmian_generate(const std::string& alphabet, const std::vector<Token>& directive,
                               std::size_t len);

// Maximal W' whose image under the token agrees with w on every determined
// position; nullopt when no preimage prefix exists. Unique per token.
std::optional<std::string> desubstitute_once(Token t, std::string_view w,
                                             const std::string& alphabet);

struct DesubBranch {
  std::vector<Token> tokens;
  std::string leftover;   // determined preimage prefix at the branch bottom
  bool exhausted = false;  // parse ran out of determined letters early
};

// All token branches of the given depth, tokens tried L before R, letters in
// alphabet order. A branch whose determined prefix shrinks to nothing is
// reported as exhausted instead of being expanded vacuously.
std::vector<DesubBranch> desubstitute_branches(const std::string& alphabet, std::string_view w,
                                               int depth,
                                               const std::vector<Token>* restrict_to = nullptr);

struct AtracDepthReport {
  bool witnessed = false;
  std::vector<Token> witness;
  std::string witness_seed;
};

// One-sided: some length-n composition from the token family maps a word onto
// something agreeing with w at the determined precision.
AtracDepthReport monoid_atrac_depth(const std::string& alphabet, const std::vector<Token>& family,
                                    std::string_view w, int n);

}  // namespace stabset::monoid

#endif
