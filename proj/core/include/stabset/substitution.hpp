#ifndef STABSET_SUBSTITUTION_HPP
#define STABSET_SUBSTITUTION_HPP

#include <array>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "stabset/rational.hpp"

namespace stabset::subst {

// Letter-to-word map over an ordered finite alphabet of printable characters.
// Empty images are allowed.
class Substitution {
 public:
  Substitution(std::string alphabet, std::vector<std::string> images);

  // One line per letter: "a -> ab", dot for the empty word, '#' comments.
  static Substitution parse(const std::string& text);

  const std::string& alphabet() const { return alphabet_; }
  const std::string& image(char s) const;
  bool in_alphabet(char s) const { return index_[static_cast<unsigned char>(s)] >= 0; }
  int letter_index(char s) const;
  void require_word(std::string_view w) const;

  std::string to_dsl() const;
  bool operator==(const Substitution&) const = default;

 private:
  std::string alphabet_;
  std::vector<std::string> images_;
  std::array<int, 256> index_;
};

std::string apply(const Substitution& phi, std::string_view w);
std::string apply_n(const Substitution& phi, std::string_view w, int n);

// Substitution computing phi(psi(.)).
Substitution compose(const Substitution& phi, const Substitution& psi);
Substitution power(const Substitution& phi, int n);

struct MortalityReport {
  std::string mortal;  // subset of the alphabet, in alphabet order
  int exponent = 0;    // least m killing every mortal letter
};
MortalityReport mortality(const Substitution& phi);

bool is_mortal(const Substitution& phi, char s);
bool non_erasing(const Substitution& phi);
// Number of immortal letters in w.
int immortal_count(const Substitution& phi, std::string_view w);

// phi^r(seed) = v1 . seed . v2 with v1 all-mortal; finite_case iff v2 is
// all-mortal too.
struct FixedPointSpec {
  char seed = 0;
  int power = 0;  // r = m_s, the first return of the leading immortal letter
  std::string v1;
  std::string v2;
  bool finite_case = false;
};

struct FixedPointAnalysis {
  std::vector<FixedPointSpec> specs;
  long long m = 0;  // lcm of the m_s, 0 when there is no immortal letter
};
FixedPointAnalysis fixed_point_specs(const Substitution& phi);

// The fixed finite word of a finite_case spec: phi^{r*exp}(seed).
std::string fixed_word(const Substitution& phi, const FixedPointSpec& spec);

// Length-len prefix of the infinite fixed word of phi^r: the mortal debris
// psi^{q-1}(v1)...psi(v1) v1, then seed, then v2 psi(v2) psi^2(v2) ...
std::string expand_fixed_point(const Substitution& phi, const FixedPointSpec& spec,
                               std::size_t len);

// All words over letters with nonempty image whose image is exactly w.
std::set<std::string> canonical_preimages(const Substitution& phi, std::string_view w);

struct MembershipReport {
  bool in_orb = false;
  bool in_stab = false;
  bool in_atrac = false;
  std::optional<int> period;
  bool exact = true;
};

// Orbit membership by forward iteration; termination rests on two guards:
// the immortal count never decreases along an orbit, and past the mortality
// exponent the word length is bounded by (immortal count) * Lmax^(exp+1),
// so the seen-set closes. The other two sets equal the orbit set for finite
// words; that equality is what the cross-check oracles below exercise.
MembershipReport membership_finite(const Substitution& phi, std::string_view w);

// Exact oracles on the bounded universe of words of length <= |w| (complete
// for non-erasing substitutions, where preimages can never be longer).
bool stab_exact_nonerasing(const Substitution& phi, const std::string& w);
bool atrac_exact_nonerasing(const Substitution& phi, const std::string& w);

// Longest canonical-preimage chain from w, capped at max_depth. Sound for
// every substitution; for erasing ones chains through dead letters are not
// explored, so this is one-sided evidence.
int backward_chain_depth(const Substitution& phi, const std::string& w, int max_depth);

// Letters s with phi^p(s) = s for some p >= 1. Finite words in the orbit set
// of a non-erasing substitution are exactly the words over these letters.
std::string periodic_letters(const Substitution& phi);

enum class PrefixVerdict { Consistent, Inconsistent, Inconclusive };

struct PrefixStabReport {
  PrefixVerdict verdict = PrefixVerdict::Inconclusive;
  long long m = 0;
  std::size_t checked_positions = 0;
  std::size_t mismatch_position = 0;  // 1-based, set when inconsistent
};

// Stability of an infinite word is fixedness under phi^m; on a finite prefix
// this compares phi^m(prefix) with the prefix on the overlap.
PrefixStabReport stab_membership_prefix(const Substitution& phi, std::string_view prefix);

// Extension by a fresh letter t with image t. Embedding W -> W t t t ...
// turns finite-word membership questions into infinite-word ones.
struct ErasureExtension {
  Substitution extended;
  char t;
};
ErasureExtension erasure_extension(const Substitution& phi);

// Occurrence-count matrix and exact lengths of phi^n(seed), for growth checks
// at exponents where the words themselves would be astronomically long.
std::vector<std::vector<Int>> letter_count_matrix(const Substitution& phi);
Int iterated_length(const Substitution& phi, char seed, int n);

}  // namespace stabset::subst

#endif
