#include "stabset/freegroup.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>

namespace stabset::freegrp {

Word reduce(Word w) {
  Word out;
  for (int s : w) {
    if (s == 0) throw std::invalid_argument("zero letter");
    if (!out.empty() && out.back() == -s)
      out.pop_back();
    else
      out.push_back(s);
  }
  return out;
}

Word inverse(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (int& s : out) s = -s;
  return out;
}

Word concat(const Word& x, const Word& y) {
  Word out = x;
  out.insert(out.end(), y.begin(), y.end());
  return reduce(std::move(out));
}

char generator_letter(int index) {
  static const std::string letters = "xyzabcdefghijklmnopqrstuvw";
  if (index < 0 || index >= static_cast<int>(letters.size()))
    throw std::invalid_argument("generator index out of range");
  return letters[index];
}

Word parse_word(const std::string& text, int rank) {
  Word w;
  for (char c : text) {
    if (c == ' ' || c == '1') continue;  // '1' allowed as the trivial word
    bool upper = (c >= 'A' && c <= 'Z');
    char low = upper ? static_cast<char>(c - 'A' + 'a') : c;
    int idx = -1;
    for (int i = 0; i < rank; ++i) {
      if (generator_letter(i) == low) {
        idx = i;
        break;
      }
    }
    if (idx < 0) throw std::invalid_argument(std::string("unknown generator: ") + c);
    w.push_back(upper ? -(idx + 1) : idx + 1);
  }
  return reduce(std::move(w));
}

std::string format_word(const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (int s : w) {
    char c = generator_letter(std::abs(s) - 1);
    out += s > 0 ? c : static_cast<char>(c - 'a' + 'A');
  }
  return out;
}

FreeEndo FreeEndo::create(int rank, std::vector<Word> images) {
  if (rank < 1) throw std::invalid_argument("rank must be positive");
  if (static_cast<int>(images.size()) != rank)
    throw std::invalid_argument("one image per generator required");
  for (Word& w : images) {
    w = reduce(std::move(w));
    for (int s : w)
      if (std::abs(s) > rank) throw std::invalid_argument("image uses generator outside rank");
  }
  return FreeEndo{rank, std::move(images)};
}

FreeEndo FreeEndo::parse(int rank, const std::vector<std::string>& images) {
  std::vector<Word> ws;
  for (const std::string& s : images) ws.push_back(parse_word(s, rank));
  return create(rank, std::move(ws));
}

Word FreeEndo::apply(const Word& w) const {
  Word out;
  for (int s : w) {
    const Word& img = images[std::abs(s) - 1];
    if (s > 0)
      out.insert(out.end(), img.begin(), img.end());
    else {
      Word inv = inverse(img);
      out.insert(out.end(), inv.begin(), inv.end());
    }
  }
  return reduce(std::move(out));
}

std::vector<Word> FreeEndo::iterated_images(int n) const {
  std::vector<Word> cur;
  for (int i = 1; i <= rank; ++i) cur.push_back(Word{i});
  for (int step = 0; step < n; ++step)
    for (Word& w : cur) w = apply(w);
  return cur;
}

// ---------------------------------------------------------------------------

StallingsGraph::StallingsGraph(const std::vector<Word>& generators, int rank,
                               bool with_expressions)
    : rank_(rank), with_expressions_(with_expressions) {
  adj_.emplace_back();  // base = 0
  vertex_alive_.push_back(1);
  int symbol = 0;
  for (const Word& gen : generators) {
    ++symbol;
    Word g = reduce(gen);
    if (g.empty()) continue;
    int prev = 0;
    for (std::size_t j = 0; j < g.size(); ++j) {
      int next;
      if (j + 1 == g.size()) {
        next = 0;
      } else {
        next = static_cast<int>(adj_.size());
        adj_.emplace_back();
        vertex_alive_.push_back(1);
      }
      Word omega;
      if (with_expressions_ && j + 1 == g.size()) omega = Word{symbol};
      int s = g[j];
      Edge e;
      if (s > 0) {
        e = Edge{prev, next, s, omega, true};
      } else {
        e = Edge{next, prev, -s, with_expressions_ ? inverse(omega) : Word{}, true};
      }
      int id = static_cast<int>(edges_.size());
      edges_.push_back(std::move(e));
      adj_[edges_[id].u].push_back(id);
      if (edges_[id].v != edges_[id].u) adj_[edges_[id].v].push_back(id);
      prev = next;
    }
  }
  fold();
}

void StallingsGraph::merge_vertices(int survivor, int dying, const Word& delta) {
  // Every edge at the dying vertex is rewritten to reference the survivor;
  // expressions pick up delta on the side that touched it.
  std::vector<int> ids = adj_[dying];
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  for (int id : ids) {
    Edge& e = edges_[id];
    if (!e.alive) continue;
    if (e.u == dying) {
      if (with_expressions_) e.omega = concat(delta, e.omega);
      e.u = survivor;
    }
    if (e.v == dying) {
      if (with_expressions_) e.omega = concat(e.omega, inverse(delta));
      e.v = survivor;
    }
    adj_[survivor].push_back(id);
  }
  adj_[dying].clear();
  vertex_alive_[dying] = 0;
}

void StallingsGraph::fold() {
  std::deque<int> work;
  for (int v = 0; v < static_cast<int>(adj_.size()); ++v) work.push_back(v);
  while (!work.empty()) {
    int u = work.front();
    work.pop_front();
    if (!vertex_alive_[u]) continue;
    bool changed = true;
    while (changed) {
      changed = false;
      std::map<std::pair<int, int>, int> first;  // (letter, direction) -> edge id
      for (int id : adj_[u]) {
        Edge& e = edges_[id];
        if (!e.alive) continue;
        for (int dir = 0; dir < 2; ++dir) {
          if (dir == 0 && e.u != u) continue;
          if (dir == 1 && e.v != u) continue;
          auto key = std::make_pair(e.letter, dir);
          auto it = first.find(key);
          if (it == first.end()) {
            first[key] = id;
            continue;
          }
          if (it->second == id) continue;  // duplicate adjacency listing
          Edge& f0 = edges_[it->second];
          Edge& f1 = edges_[id];
          // dir 0: both leave u; merge their targets. dir 1: both enter u.
          int a = dir == 0 ? f0.v : f0.u;
          int b = dir == 0 ? f1.v : f1.u;
          Word delta;
          if (with_expressions_) {
            delta = dir == 0 ? concat(inverse(f0.omega), f1.omega)
                             : concat(f0.omega, inverse(f1.omega));
          }
          if (a == b) {
            f1.alive = false;  // parallel duplicate
          } else {
            if (b == 0 || (a != 0 && adj_[a].size() < adj_[b].size())) {
              std::swap(a, b);
              if (with_expressions_) delta = inverse(delta);
            }
            merge_vertices(a, b, delta);
            work.push_back(a);
          }
          changed = true;
          break;
        }
        if (changed) break;
      }
    }
  }
  // Drop dead ids from adjacency once at the end.
  for (auto& list : adj_) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    std::erase_if(list, [&](int id) { return !edges_[id].alive; });
  }
  // Core pruning: strip degree-1 non-base vertices. Reduced words cannot
  // traverse such hairs, so membership and expressions are untouched.
  bool pruned = true;
  while (pruned) {
    pruned = false;
    for (int v = 1; v < static_cast<int>(adj_.size()); ++v) {
      if (!vertex_alive_[v]) continue;
      int degree = 0;
      int last = -1;
      for (int id : adj_[v]) {
        const Edge& e = edges_[id];
        if (!e.alive) continue;
        degree += (e.u == v ? 1 : 0) + (e.v == v ? 1 : 0);
        last = id;
      }
      if (degree == 1) {
        edges_[last].alive = false;
        vertex_alive_[v] = 0;
        adj_[v].clear();
        pruned = true;
      } else if (degree == 0) {
        vertex_alive_[v] = 0;
      }
    }
    for (auto& list : adj_)
      std::erase_if(list, [&](int id) { return !edges_[id].alive; });
  }
}

int StallingsGraph::edge_count() const {
  int e = 0;
  for (const Edge& ed : edges_)
    if (ed.alive) ++e;
  return e;
}

int StallingsGraph::vertex_count() const {
  int v = 0;
  for (std::size_t i = 0; i < vertex_alive_.size(); ++i)
    if (vertex_alive_[i]) ++v;
  return v;
}

int StallingsGraph::rank() const { return edge_count() - vertex_count() + 1; }

std::optional<std::pair<int, Word>> StallingsGraph::step(int vertex, int signed_letter) const {
  int letter = std::abs(signed_letter);
  for (int id : adj_[vertex]) {
    const Edge& e = edges_[id];
    if (!e.alive || e.letter != letter) continue;
    if (signed_letter > 0 && e.u == vertex) return std::make_pair(e.v, e.omega);
    if (signed_letter < 0 && e.v == vertex) return std::make_pair(e.u, inverse(e.omega));
  }
  return std::nullopt;
}

bool StallingsGraph::contains(const Word& w) const {
  int v = 0;
  for (int s : reduce(w)) {
    auto nxt = step(v, s);
    if (!nxt) return false;
    v = nxt->first;
  }
  return v == 0;
}

std::optional<Word> StallingsGraph::express(const Word& w) const {
  int v = 0;
  Word acc;
  for (int s : reduce(w)) {
    auto nxt = step(v, s);
    if (!nxt) return std::nullopt;
    v = nxt->first;
    if (with_expressions_) acc = concat(acc, nxt->second);
  }
  if (v != 0) return std::nullopt;
  return acc;
}

std::vector<std::array<int, 3>> StallingsGraph::canonical_edges() const {
  // BFS renumbering from the base, neighbours visited in letter order.
  std::map<int, int> number{{0, 0}};
  std::deque<int> queue{0};
  std::vector<std::array<int, 3>> out;
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (int letter = 1; letter <= rank_; ++letter) {
      for (int sign : {+1, -1}) {
        auto nxt = step(u, sign * letter);
        if (!nxt) continue;
        if (!number.count(nxt->first)) {
          number[nxt->first] = static_cast<int>(number.size());
          queue.push_back(nxt->first);
        }
      }
    }
  }
  for (const Edge& e : edges_) {
    if (!e.alive) continue;
    out.push_back({number.at(e.u), number.at(e.v), e.letter});
  }
  std::sort(out.begin(), out.end());
  return out;
}

StallingsGraph stallings_graph(const std::vector<Word>& generators, int rank) {
  return StallingsGraph(generators, rank, /*with_expressions=*/false);
}

RankChain rank_chain(const FreeEndo& phi, int n_max) {
  if (n_max < 1) throw std::invalid_argument("horizon must be positive");
  RankChain out;
  std::vector<std::vector<Word>> gens(n_max + 2);
  for (int i = 1; i <= phi.rank; ++i) gens[0].push_back(Word{i});
  for (int n = 1; n <= n_max + 1; ++n) {
    gens[n] = gens[n - 1];
    for (Word& w : gens[n]) w = phi.apply(w);
  }
  std::vector<StallingsGraph> graphs;
  graphs.reserve(n_max + 2);
  for (int n = 0; n <= n_max + 1; ++n) graphs.emplace_back(gens[n], phi.rank, false);
  for (int n = 1; n <= n_max; ++n) out.ranks.push_back(graphs[n].rank());
  out.rank_stable_at = n_max;
  for (int n = 1; n < n_max; ++n) {
    if (graphs[n].rank() == graphs[n + 1].rank()) {
      out.rank_stable_at = n;
      break;
    }
  }
  for (int n = 0; n <= n_max; ++n) {
    bool stable = true;
    for (const Word& g : gens[n]) {
      if (!graphs[n + 1].contains(g)) {
        stable = false;
        break;
      }
    }
    if (stable) {
      out.set_stable_at = n;
      break;
    }
  }
  return out;
}

std::optional<Word> preimage_solve(const FreeEndo& phi, const Word& w) {
  StallingsGraph graph(phi.images, phi.rank, /*with_expressions=*/true);
  auto expr = graph.express(reduce(w));
  if (!expr) return std::nullopt;
  // Symbols are 1-based generator indices of phi's images.
  return reduce(*expr);
}

StabAtracReport stab_atrac_report(const FreeEndo& phi, const Word& w_in, int depth) {
  if (depth < 1) throw std::invalid_argument("depth must be positive");
  Word w = reduce(w_in);
  StabAtracReport rep;
  rep.chain.push_back(w);

  std::vector<std::vector<Word>> gens(depth + 2);
  for (int i = 1; i <= phi.rank; ++i) gens[0].push_back(Word{i});
  for (int n = 1; n <= depth + 1; ++n) {
    gens[n] = gens[n - 1];
    for (Word& g : gens[n]) g = phi.apply(g);
  }
  std::optional<int> stable_n;
  for (int n = 0; n <= depth; ++n) {
    StallingsGraph next(gens[n + 1], phi.rank, false);
    bool stable = true;
    for (const Word& g : gens[n]) {
      if (!next.contains(g)) {
        stable = false;
        break;
      }
    }
    if (stable) {
      stable_n = n;
      break;
    }
  }
  rep.stable_n = stable_n;

  if (stable_n) {
    const int n = *stable_n;
    StallingsGraph stable_graph(gens[n], phi.rank, false);
    rep.exact = true;
    rep.in_atrac = stable_graph.contains(w);
    rep.in_stab = rep.in_atrac;
    if (rep.in_stab) {
      // Backward steps inside the stable subgroup: express the current point
      // over the generators of phi^{n+1}(F) and reread the expression over
      // those of phi^n(F); phi maps the latter onto the former.
      StallingsGraph hi(gens[n + 1], phi.rank, true);
      Word cur = w;
      for (int i = 0; i < depth; ++i) {
        auto expr = hi.express(cur);
        if (!expr) break;  // unreachable when membership holds
        Word v;
        for (int s : *expr) {
          const Word& g = gens[n][std::abs(s) - 1];
          Word part = s > 0 ? g : inverse(g);
          v.insert(v.end(), part.begin(), part.end());
        }
        v = reduce(std::move(v));
        rep.chain.push_back(v);
        cur = v;
      }
    }
  } else {
    StallingsGraph at_depth(gens[depth], phi.rank, false);
    rep.exact = false;
    rep.in_atrac = at_depth.contains(w);  // membership in phi^depth(F) only
    Word cur = w;
    for (int i = 0; i < depth; ++i) {
      auto v = preimage_solve(phi, cur);
      if (!v) break;
      rep.chain.push_back(*v);
      cur = *v;
    }
    rep.in_stab = static_cast<int>(rep.chain.size()) - 1 >= depth;
  }
  rep.chain_length = static_cast<int>(rep.chain.size()) - 1;
  return rep;
}

}  // namespace stabset::freegrp
