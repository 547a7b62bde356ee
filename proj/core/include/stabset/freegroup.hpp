#ifndef STABSET_FREEGROUP_HPP
#define STABSET_FREEGROUP_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace stabset::freegrp {

// Freely reduced word; entries are +g / -g for generator index g-1.
using Word = std::vector<int>;

Word reduce(Word w);
Word inverse(const Word& w);
Word concat(const Word& x, const Word& y);  // reduced concatenation

// Letters x, y, z, then a, b, c, ... Capitals are inverses.
char generator_letter(int index);
Word parse_word(const std::string& text, int rank);
std::string format_word(const Word& w);

struct FreeEndo {
  int rank = 0;
  std::vector<Word> images;

  static FreeEndo create(int rank, std::vector<Word> images);
  static FreeEndo parse(int rank, const std::vector<std::string>& images);

  Word apply(const Word& w) const;
  // Images of phi^n.
  std::vector<Word> iterated_images(int n) const;
};

// Folded subgroup graph. Every edge carries an expression over the input
// generators: traversing the edge multiplies the expression in, so a
// base-to-base trace of w yields a word in the generators that maps to w.
class StallingsGraph {
 public:
  StallingsGraph(const std::vector<Word>& generators, int rank, bool with_expressions);

  int rank() const;          // E - V + 1 on the folded graph
  int vertex_count() const;  // after pruning unreachable merged slots
  int edge_count() const;
  bool contains(const Word& w) const;

  // Expression of w over the generator indices (1-based, signed), when w is
  // in the subgroup and expressions were requested.
  std::optional<Word> express(const Word& w) const;

  // Deterministic edge list (BFS renumbering, letters in order): tuples
  // (u, v, letter).
  std::vector<std::array<int, 3>> canonical_edges() const;

 private:
  struct Edge {
    int u = 0, v = 0, letter = 0;
    Word omega;
    bool alive = true;
  };
  int rank_ = 0;
  bool with_expressions_ = false;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adj_;
  std::vector<char> vertex_alive_;

  void fold();
  void merge_vertices(int survivor, int dying, const Word& delta);
  std::optional<std::pair<int, Word>> step(int vertex, int signed_letter) const;
};

StallingsGraph stallings_graph(const std::vector<Word>& generators, int rank);

struct RankChain {
  std::vector<int> ranks;              // rank of phi^n(F), n = 1..N
  int rank_stable_at = 0;              // least n with rank_n = rank_{n+1} (within horizon)
  std::optional<int> set_stable_at;    // least n with phi^n(F) = phi^{n+1}(F), n = 0..N-1
};

RankChain rank_chain(const FreeEndo& phi, int n_max);

// Explicit v with phi(v) = w, through the expression-labeled graph of Im(phi).
std::optional<Word> preimage_solve(const FreeEndo& phi, const Word& w);

struct StabAtracReport {
  bool exact = false;
  std::optional<int> stable_n;   // set-stabilization point when found
  bool in_atrac = false;         // exact when `exact`, else membership in phi^depth(F)
  bool in_stab = false;
  int chain_length = 0;          // backward chain actually constructed
  std::vector<Word> chain;       // x0 = w, phi(x_{i+1}) = x_i
};

// Exact when the image subgroup chain stabilizes as a set within the depth:
// then membership in the stable subgroup decides both sets, and backward
// chains are built inside it. Otherwise one-sided at the given depth.
StabAtracReport stab_atrac_report(const FreeEndo& phi, const Word& w, int depth);

}  // namespace stabset::freegrp

#endif
