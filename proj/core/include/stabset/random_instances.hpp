#ifndef STABSET_RANDOM_INSTANCES_HPP
#define STABSET_RANDOM_INSTANCES_HPP

#include <string>
#include <vector>

#include "stabset/fgraph.hpp"
#include "stabset/freegroup.hpp"
#include "stabset/interval.hpp"
#include "stabset/linalg.hpp"
#include "stabset/monoid_finite.hpp"
#include "stabset/prng.hpp"
#include "stabset/substitution.hpp"

namespace stabset::gen {

inline fgraph::FiniteSelfMap random_fmap(Rng& rng, int max_size) {
  int n = static_cast<int>(rng.range(1, max_size));
  std::vector<int> succ(n);
  for (int& s : succ) s = static_cast<int>(rng.below(n));
  return fgraph::FiniteSelfMap::create(std::move(succ));
}

inline subst::Substitution random_substitution(Rng& rng, int max_letters, int max_image_len,
                                               bool allow_erasing) {
  int k = static_cast<int>(rng.range(1, max_letters));
  std::string alphabet(std::string("abcdefgh").substr(0, k));
  std::vector<std::string> images;
  for (int i = 0; i < k; ++i) {
    int len = static_cast<int>(rng.range(allow_erasing ? 0 : 1, max_image_len));
    std::string img;
    for (int j = 0; j < len; ++j) img += alphabet[rng.below(k)];
    images.push_back(img);
  }
  return subst::Substitution(alphabet, std::move(images));
}

inline std::string random_word(Rng& rng, const std::string& alphabet, int max_len) {
  int len = static_cast<int>(rng.range(0, max_len));
  std::string w;
  for (int i = 0; i < len; ++i) w += alphabet[rng.below(alphabet.size())];
  return w;
}

inline monoid::MonoidSystem random_monoid_system(Rng& rng, int max_maps, int max_size) {
  int size = static_cast<int>(rng.range(1, max_size));
  int count = static_cast<int>(rng.range(1, max_maps));
  std::vector<std::pair<std::string, std::vector<int>>> maps;
  for (int i = 0; i < count; ++i) {
    std::vector<int> succ(size);
    for (int& s : succ) s = static_cast<int>(rng.below(size));
    maps.emplace_back("f" + std::to_string(i), std::move(succ));
  }
  return monoid::MonoidSystem::create(size, std::move(maps));
}

// Entries biased toward zero so kernels and nontrivial chains actually occur.
inline linalg::RationalMatrix random_matrix(Rng& rng, int max_dim) {
  int d = static_cast<int>(rng.range(1, max_dim));
  linalg::RationalMatrix m(d, d);
  for (int r = 0; r < d; ++r)
    for (int c = 0; c < d; ++c) {
      if (rng.chance(1, 2)) continue;  // zero
      m.at(r, c) = rng.small_rational(4, 3);
    }
  return m;
}

inline freegrp::Word random_reduced_word(Rng& rng, int rank, int max_len) {
  int len = static_cast<int>(rng.range(0, max_len));
  freegrp::Word w;
  for (int i = 0; i < len; ++i) {
    while (true) {
      int g = static_cast<int>(rng.range(1, rank));
      int s = rng.chance(1, 2) ? g : -g;
      if (!w.empty() && w.back() == -s) continue;
      w.push_back(s);
      break;
    }
  }
  return w;
}

inline freegrp::FreeEndo random_endo(Rng& rng, int rank, int max_image_len) {
  std::vector<freegrp::Word> images;
  for (int i = 0; i < rank; ++i) images.push_back(random_reduced_word(rng, rank, max_image_len));
  return freegrp::FreeEndo::create(rank, std::move(images));
}

// Continuous map: random increasing breakpoints, random values, linear
// interpolation in between.
inline interval::PWLMap random_continuous_pwl(Rng& rng, int max_pieces) {
  int r = static_cast<int>(rng.range(1, max_pieces));
  std::vector<Rational> breaks{Rational(0)};
  for (int i = 1; i < r; ++i) {
    Rational b(rng.range(1, 15), 16);
    bool fresh = true;
    for (const Rational& x : breaks)
      if (x == b) fresh = false;
    if (fresh) breaks.push_back(b);
  }
  breaks.push_back(Rational(1));
  std::sort(breaks.begin(), breaks.end());
  std::vector<Rational> values;
  for (std::size_t i = 0; i < breaks.size(); ++i) values.emplace_back(rng.range(0, 8), 8);
  std::vector<std::pair<Rational, Rational>> pieces;
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    Rational p = (values[i + 1] - values[i]) / (breaks[i + 1] - breaks[i]);
    Rational q = values[i] - p * breaks[i];
    pieces.emplace_back(p, q);
  }
  return interval::PWLMap::create(std::move(breaks), std::move(pieces));
}

}  // namespace stabset::gen

#endif
