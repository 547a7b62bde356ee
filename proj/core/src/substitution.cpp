#include "stabset/substitution.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace stabset::subst {

Substitution::Substitution(std::string alphabet, std::vector<std::string> images)
    : alphabet_(std::move(alphabet)), images_(std::move(images)) {
  index_.fill(-1);
  if (alphabet_.empty()) throw std::invalid_argument("empty alphabet");
  if (images_.size() != alphabet_.size())
    throw std::invalid_argument("one image per letter required");
  for (std::size_t i = 0; i < alphabet_.size(); ++i) {
    unsigned char c = static_cast<unsigned char>(alphabet_[i]);
    if (index_[c] >= 0) throw std::invalid_argument("duplicate letter in alphabet");
    index_[c] = static_cast<int>(i);
  }
  for (const std::string& img : images_) {
    for (char c : img) {
      if (!in_alphabet(c)) throw std::invalid_argument("image uses letter outside alphabet");
    }
  }
}

Substitution Substitution::parse(const std::string& text) {
  std::string alphabet;
  std::vector<std::string> images;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string lhs, arrow, rhs;
    if (!(ls >> lhs)) continue;
    if (!(ls >> arrow >> rhs) || arrow != "->" || lhs.size() != 1)
      throw std::invalid_argument("bad substitution line: " + line);
    alphabet += lhs[0];
    images.push_back(rhs == "." ? std::string() : rhs);
  }
  return Substitution(std::move(alphabet), std::move(images));
}

const std::string& Substitution::image(char s) const {
  int i = index_[static_cast<unsigned char>(s)];
  if (i < 0) throw std::invalid_argument(std::string("letter outside alphabet: ") + s);
  return images_[i];
}

int Substitution::letter_index(char s) const {
  int i = index_[static_cast<unsigned char>(s)];
  if (i < 0) throw std::invalid_argument(std::string("letter outside alphabet: ") + s);
  return i;
}

void Substitution::require_word(std::string_view w) const {
  for (char c : w)
    if (!in_alphabet(c)) throw std::invalid_argument(std::string("letter outside alphabet: ") + c);
}

std::string Substitution::to_dsl() const {
  std::string out;
  for (std::size_t i = 0; i < alphabet_.size(); ++i) {
    out += alphabet_[i];
    out += " -> ";
    out += images_[i].empty() ? "." : images_[i];
    out += '\n';
  }
  return out;
}

std::string apply(const Substitution& phi, std::string_view w) {
  phi.require_word(w);
  std::string out;
  for (char c : w) out += phi.image(c);
  return out;
}

std::string apply_n(const Substitution& phi, std::string_view w, int n) {
  std::string cur(w);
  for (int i = 0; i < n; ++i) cur = subst::apply(phi, cur);
  return cur;
}

Substitution compose(const Substitution& phi, const Substitution& psi) {
  std::vector<std::string> images;
  for (char c : psi.alphabet()) images.push_back(subst::apply(phi, psi.image(c)));
  return Substitution(psi.alphabet(), std::move(images));
}

Substitution power(const Substitution& phi, int n) {
  std::vector<std::string> images;
  for (char c : phi.alphabet()) images.push_back(std::string(1, c));
  Substitution acc(phi.alphabet(), std::move(images));
  for (int i = 0; i < n; ++i) acc = compose(phi, acc);
  return acc;
}

MortalityReport mortality(const Substitution& phi) {
  const std::string& s = phi.alphabet();
  std::vector<int> death(s.size(), 0);  // 0 = not known mortal
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (death[i] != 0) continue;
      const std::string& img = phi.image(s[i]);
      int worst = 0;
      bool all_mortal = true;
      for (char c : img) {
        int d = death[phi.letter_index(c)];
        if (d == 0) {
          all_mortal = false;
          break;
        }
        worst = std::max(worst, d);
      }
      if (all_mortal) {
        death[i] = worst + 1;
        changed = true;
      }
    }
  }
  MortalityReport rep;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (death[i] != 0) {
      rep.mortal += s[i];
      rep.exponent = std::max(rep.exponent, death[i]);
    }
  }
  return rep;
}

bool is_mortal(const Substitution& phi, char s) {
  return mortality(phi).mortal.find(s) != std::string::npos;
}

bool non_erasing(const Substitution& phi) { return mortality(phi).mortal.empty(); }

int immortal_count(const Substitution& phi, std::string_view w) {
  MortalityReport rep = mortality(phi);
  int count = 0;
  for (char c : w)
    if (rep.mortal.find(c) == std::string::npos) ++count;
  return count;
}

namespace {

// First immortal letter of phi(s), or 0 when there is none.
char first_immortal_of_image(const Substitution& phi, const std::string& mortal, char s) {
  for (char c : phi.image(s))
    if (mortal.find(c) == std::string::npos) return c;
  return 0;
}

}  // namespace

FixedPointAnalysis fixed_point_specs(const Substitution& phi) {
  FixedPointAnalysis out;
  MortalityReport mort = mortality(phi);
  std::string immortal;
  for (char c : phi.alphabet())
    if (mort.mortal.find(c) == std::string::npos) immortal += c;
  const int k = static_cast<int>(immortal.size());
  long long m = 0;
  for (char s : immortal) {
    char t = s;
    int r = 0;
    for (int step = 1; step <= k; ++step) {
      t = first_immortal_of_image(phi, mort.mortal, t);
      if (t == s) {
        r = step;
        break;
      }
    }
    if (r == 0) continue;
    std::string word = apply_n(phi, std::string(1, s), r);
    auto pos = word.npos;
    for (std::size_t i = 0; i < word.size(); ++i) {
      if (mort.mortal.find(word[i]) == std::string::npos) {
        pos = i;
        break;
      }
    }
    FixedPointSpec spec;
    spec.seed = s;
    spec.power = r;
    spec.v1 = word.substr(0, pos);
    spec.v2 = word.substr(pos + 1);
    spec.finite_case = immortal_count(phi, spec.v2) == 0;
    out.specs.push_back(std::move(spec));
    m = (m == 0) ? r : std::lcm(m, static_cast<long long>(r));
  }
  out.m = m;
  return out;
}

std::string fixed_word(const Substitution& phi, const FixedPointSpec& spec) {
  if (!spec.finite_case) throw std::invalid_argument("spec has an infinite fixed word");
  Substitution psi = power(phi, spec.power);
  int q = mortality(psi).exponent;
  return apply_n(psi, std::string(1, spec.seed), q);
}

std::string expand_fixed_point(const Substitution& phi, const FixedPointSpec& spec,
                               std::size_t len) {
  if (spec.finite_case) throw std::invalid_argument("spec has a finite fixed word");
  Substitution psi = power(phi, spec.power);
  int q = mortality(psi).exponent;
  std::string out;
  for (int j = q - 1; j >= 0; --j) out += apply_n(psi, spec.v1, j);
  out += spec.seed;
  std::string chunk = spec.v2;
  while (out.size() < len) {
    out += chunk;
    chunk = subst::apply(psi, chunk);
  }
  if (out.size() > len) out.resize(len);
  return out;
}

std::set<std::string> canonical_preimages(const Substitution& phi, std::string_view w) {
  phi.require_word(w);
  const std::size_t len = w.size();
  std::vector<char> viable(len + 1, 0);
  viable[len] = 1;
  std::vector<std::pair<char, std::string>> blocks;
  for (char c : phi.alphabet()) {
    if (!phi.image(c).empty()) blocks.emplace_back(c, phi.image(c));
  }
  for (std::size_t i = len; i-- > 0;) {
    for (const auto& [letter, img] : blocks) {
      if (i + img.size() <= len && w.substr(i, img.size()) == img && viable[i + img.size()]) {
        viable[i] = 1;
        break;
      }
    }
  }
  std::set<std::string> out;
  if (!viable[0]) return out;
  std::string acc;
  auto dfs = [&](auto&& self, std::size_t i) -> void {
    if (i == len) {
      out.insert(acc);
      return;
    }
    for (const auto& [letter, img] : blocks) {
      if (i + img.size() <= len && w.substr(i, img.size()) == img && viable[i + img.size()]) {
        acc.push_back(letter);
        self(self, i + img.size());
        acc.pop_back();
      }
    }
  };
  dfs(dfs, 0);
  return out;
}

MembershipReport membership_finite(const Substitution& phi, std::string_view w) {
  phi.require_word(w);
  MembershipReport rep;
  const MortalityReport mort = mortality(phi);
  auto linf_of = [&](const std::string& v) {
    int count = 0;
    for (char c : v)
      if (mort.mortal.find(c) == std::string::npos) ++count;
    return count;
  };
  const int linf = linf_of(std::string(w));
  std::map<std::string, int> seen;
  std::string cur(w);
  seen[cur] = 0;
  for (int step = 1;; ++step) {
    cur = subst::apply(phi, cur);
    if (cur == w) {
      rep.in_orb = true;
      rep.period = step;
      break;
    }
    if (linf_of(cur) > linf) break;  // can never come back
    if (seen.count(cur)) break;      // cycle avoiding w
    seen[cur] = step;
  }
  rep.in_stab = rep.in_atrac = rep.in_orb;
  rep.exact = true;
  return rep;
}

namespace {

bool is_periodic_word(const Substitution& phi, const std::string& v, std::size_t len_cap) {
  std::set<std::string> seen{v};
  std::string cur = v;
  while (true) {
    cur = subst::apply(phi, cur);
    if (cur == v) return true;
    if (cur.size() > len_cap) return false;
    if (!seen.insert(cur).second) return false;
  }
}

// Backward closure of w under preimages, length-bounded universe.
std::set<std::string> backward_closure(const Substitution& phi, const std::string& w) {
  std::set<std::string> closure{w};
  std::deque<std::string> queue{w};
  while (!queue.empty()) {
    std::string cur = queue.front();
    queue.pop_front();
    for (const std::string& pre : canonical_preimages(phi, cur)) {
      if (closure.insert(pre).second) queue.push_back(pre);
    }
  }
  return closure;
}

}  // namespace

bool stab_exact_nonerasing(const Substitution& phi, const std::string& w) {
  if (!non_erasing(phi)) throw std::invalid_argument("exact oracle needs a non-erasing map");
  for (const std::string& v : backward_closure(phi, w)) {
    if (is_periodic_word(phi, v, w.size())) return true;
  }
  return false;
}

bool atrac_exact_nonerasing(const Substitution& phi, const std::string& w) {
  if (!non_erasing(phi)) throw std::invalid_argument("exact oracle needs a non-erasing map");
  const std::size_t universe = backward_closure(phi, w).size();
  std::set<std::string> level{w};
  for (std::size_t depth = 0; depth <= universe; ++depth) {
    std::set<std::string> next;
    for (const std::string& v : level) {
      auto pre = canonical_preimages(phi, v);
      next.insert(pre.begin(), pre.end());
    }
    if (next.empty()) return false;
    level = std::move(next);
  }
  return true;  // a level survived past the universe size, so a cycle feeds w
}

int backward_chain_depth(const Substitution& phi, const std::string& w, int max_depth) {
  phi.require_word(w);
  std::set<std::string> level{w};
  std::set<std::set<std::string>> seen_levels{level};
  for (int depth = 1; depth <= max_depth; ++depth) {
    std::set<std::string> next;
    for (const std::string& v : level) {
      auto pre = canonical_preimages(phi, v);
      next.insert(pre.begin(), pre.end());
    }
    if (next.empty()) return depth - 1;
    if (!seen_levels.insert(next).second) return max_depth;  // level cycle: every depth reachable
    level = std::move(next);
  }
  return max_depth;
}

std::string periodic_letters(const Substitution& phi) {
  const std::string& s = phi.alphabet();
  std::string out;
  for (char c : s) {
    char cur = c;
    bool periodic = false;
    for (std::size_t step = 0; step < s.size() + 1; ++step) {
      const std::string& img = phi.image(cur);
      if (img.size() != 1) break;
      cur = img[0];
      if (cur == c) {
        periodic = true;
        break;
      }
    }
    if (periodic) out += c;
  }
  return out;
}

PrefixStabReport stab_membership_prefix(const Substitution& phi, std::string_view prefix) {
  phi.require_word(prefix);
  PrefixStabReport rep;
  FixedPointAnalysis analysis = fixed_point_specs(phi);
  if (analysis.m == 0) throw std::invalid_argument("substitution has no immortal letter");
  rep.m = analysis.m;
  if (immortal_count(phi, prefix) == 0) {
    rep.verdict = PrefixVerdict::Inconclusive;
    return rep;
  }
  Substitution psi = power(phi, static_cast<int>(analysis.m));
  std::string img = subst::apply(psi, prefix);
  std::size_t overlap = std::min(img.size(), prefix.size());
  if (overlap == 0) {
    rep.verdict = PrefixVerdict::Inconclusive;
    return rep;
  }
  for (std::size_t i = 0; i < overlap; ++i) {
    if (img[i] != prefix[i]) {
      rep.verdict = PrefixVerdict::Inconsistent;
      rep.mismatch_position = i + 1;
      rep.checked_positions = i + 1;
      return rep;
    }
  }
  rep.verdict = PrefixVerdict::Consistent;
  rep.checked_positions = overlap;
  return rep;
}

ErasureExtension erasure_extension(const Substitution& phi) {
  const std::string candidates = "tuvwsrqponmlkjihgfedcbazyx0123456789";
  char t = 0;
  for (char c : candidates) {
    if (!phi.in_alphabet(c)) {
      t = c;
      break;
    }
  }
  if (t == 0) throw std::invalid_argument("no spare letter available");
  std::vector<std::string> images;
  for (char c : phi.alphabet()) images.push_back(phi.image(c));
  images.push_back(std::string(1, t));
  return {Substitution(phi.alphabet() + t, std::move(images)), t};
}

std::vector<std::vector<Int>> letter_count_matrix(const Substitution& phi) {
  const std::string& s = phi.alphabet();
  std::vector<std::vector<Int>> m(s.size(), std::vector<Int>(s.size(), 0));
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (char c : phi.image(s[i])) m[i][phi.letter_index(c)] += 1;
  }
  return m;
}

Int iterated_length(const Substitution& phi, char seed, int n) {
  const std::size_t dim = phi.alphabet().size();
  auto m = letter_count_matrix(phi);
  std::vector<Int> counts(dim, 0);
  counts[phi.letter_index(seed)] = 1;
  for (int step = 0; step < n; ++step) {
    std::vector<Int> next(dim, 0);
    for (std::size_t i = 0; i < dim; ++i) {
      if (counts[i] == 0) continue;
      for (std::size_t j = 0; j < dim; ++j) next[j] += counts[i] * m[i][j];
    }
    counts = std::move(next);
  }
  Int total = 0;
  for (const Int& c : counts) total += c;
  return total;
}

}  // namespace stabset::subst
