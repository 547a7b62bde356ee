#include "stabset/episturmian.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace stabset::monoid {

std::vector<Token> parse_directive(const std::string& text, const std::string& alphabet) {
  std::vector<Token> out;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    if (tok.size() != 2 || (tok[0] != 'L' && tok[0] != 'R'))
      throw std::invalid_argument("bad directive token: " + tok);
    if (alphabet.find(tok[1]) == std::string::npos)
      throw std::invalid_argument("directive letter outside alphabet: " + tok);
    out.push_back({tok[0] == 'L', tok[1]});
  }
  return out;
}

subst::Substitution token_substitution(Token t, const std::string& alphabet) {
  std::vector<std::string> images;
  for (char c : alphabet) {
    if (c == t.letter)
      images.push_back(std::string(1, c));
    else if (t.left)
      images.push_back(std::string{t.letter, c});
    else
      images.push_back(std::string{c, t.letter});
  }
  return subst::Substitution(alphabet, std::move(images));
}

namespace {

// Longest common prefix of all concatenations of the images {u_x}, walked as
// a set of residual suffixes: an empty residual may restart with any u_x, a
// nonempty one forces its first letter.
std::string common_prefix_of_concatenations(const std::vector<std::string>& images,
                                            std::size_t cap) {
  for (const std::string& u : images)
    if (u.empty()) return {};
  std::string prefix;
  std::set<std::string> residuals{""};
  while (prefix.size() < cap) {
    char next = 0;
    std::set<std::string> advanced;
    bool ok = true;
    for (const std::string& r : residuals) {
      std::vector<std::string> heads;
      if (r.empty()) {
        for (const std::string& u : images) heads.push_back(u);
      } else {
        heads.push_back(r);
      }
      for (const std::string& h : heads) {
        if (next == 0) next = h[0];
        if (h[0] != next) {
          ok = false;
          break;
        }
        advanced.insert(h.substr(1));
      }
      if (!ok) break;
    }
    if (!ok || next == 0) break;
    prefix += next;
    residuals = std::move(advanced);
  }
  return prefix;
}

}  // namespace

EpiReport episturmian_generate(const std::string& alphabet, const std::vector<Token>& directive,
                               std::size_t len) {
  if (directive.empty()) throw std::invalid_argument("empty directive");
  EpiReport rep;
  std::vector<std::string> identity_images;
  for (char c : alphabet) identity_images.push_back(std::string(1, c));
  subst::Substitution composed(alphabet, std::move(identity_images));
  for (const Token& t : directive) {
    composed = subst::compose(composed, token_substitution(t, alphabet));
    std::vector<std::string> images;
    for (char c : alphabet) images.push_back(composed.image(c));
    std::string lcp = common_prefix_of_concatenations(images, len);
    if (lcp.size() > rep.prefix.size()) rep.prefix = lcp;
    rep.step_lengths.push_back(rep.prefix.size());
  }
  return rep;
}

std::optional<std::string> desubstitute_once(Token t, std::string_view w,
                                             const std::string& alphabet) {
  std::string out;
  std::size_t i = 0;
  const char a = t.letter;
  if (t.left) {
    // Blocks: "a" -> a, "a b" -> b. A block never starts with b != a. A lone
    // trailing a is ambiguous (letter a, or a cut "a b" block) and is dropped:
    // only forced letters may be emitted, or deeper levels go wrong.
    while (i < w.size()) {
      if (w[i] != a) return std::nullopt;
      if (i + 1 == w.size()) break;
      if (w[i + 1] != a) {
        out += w[i + 1];
        i += 2;
      } else {
        out += a;
        i += 1;
      }
    }
  } else {
    // Blocks: "a" -> a, "b a" -> b. After b != a the next letter must be a.
    while (i < w.size()) {
      if (w[i] == a) {
        out += a;
        i += 1;
      } else {
        if (i + 1 < w.size() && w[i + 1] != a) return std::nullopt;
        out += w[i];
        i += 2;  // consumes the trailing a, possibly cut off at the end
      }
    }
  }
  for (char c : out)
    if (alphabet.find(c) == std::string::npos) return std::nullopt;
  return out;
}

std::vector<DesubBranch> desubstitute_branches(const std::string& alphabet, std::string_view w,
                                               int depth,
                                               const std::vector<Token>* restrict_to) {
  std::vector<Token> family;
  if (restrict_to) {
    family = *restrict_to;
  } else {
    for (char c : alphabet) family.push_back({true, c});
    for (char c : alphabet) family.push_back({false, c});
  }
  std::vector<DesubBranch> out;
  DesubBranch cur;
  auto dfs = [&](auto&& self, std::string_view word, int remaining) -> void {
    if (remaining == 0) {
      cur.leftover = std::string(word);
      cur.exhausted = false;
      out.push_back(cur);
      return;
    }
    for (const Token& t : family) {
      auto pre = desubstitute_once(t, word, alphabet);
      if (!pre) continue;
      if (pre->empty()) {
        // No determined letters left: every deeper token works vacuously.
        cur.tokens.push_back(t);
        cur.leftover.clear();
        cur.exhausted = true;
        out.push_back(cur);
        cur.tokens.pop_back();
        continue;
      }
      cur.tokens.push_back(t);
      self(self, *pre, remaining - 1);
      cur.tokens.pop_back();
    }
  };
  if (!w.empty()) dfs(dfs, w, depth);
  return out;
}

AtracDepthReport monoid_atrac_depth(const std::string& alphabet, const std::vector<Token>& family,
                                    std::string_view w, int n) {
  if (n < 0) throw std::invalid_argument("depth must be non-negative");
  AtracDepthReport rep;
  if (n == 0) {
    rep.witnessed = true;
    rep.witness_seed = std::string(w);
    return rep;
  }
  auto branches = desubstitute_branches(alphabet, w, n, &family);
  if (branches.empty()) return rep;
  const DesubBranch& b = branches.front();
  // Forward verification of the found branch.
  std::string word = b.leftover.empty() ? std::string(1, alphabet[0]) : b.leftover;
  for (auto it = b.tokens.rbegin(); it != b.tokens.rend(); ++it)
    word = subst::apply(token_substitution(*it, alphabet), word);
  std::size_t overlap = std::min(word.size(), w.size());
  for (std::size_t i = 0; i < overlap; ++i) {
    if (word[i] != w[i]) return rep;  // desubstitution bug; treated as refuted
  }
  rep.witnessed = true;
  rep.witness = b.tokens;
  rep.witness_seed = b.leftover;
  return rep;
}

}  // namespace stabset::monoid
