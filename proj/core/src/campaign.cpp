#include "stabset/campaign.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <sstream>

#include "stabset/episturmian.hpp"
#include "stabset/hilbert.hpp"
#include "stabset/random_instances.hpp"
#include "stabset/runlength.hpp"
#include "stabset/staircase.hpp"

namespace stabset::campaign {

namespace {

using Check = std::function<std::optional<std::string>(Rng&)>;

struct Battery {
  std::string module;
  std::string name;
  int base_instances = 0;
  Check check;
};

std::string show_fmap(const fgraph::FiniteSelfMap& f) {
  std::ostringstream os;
  os << "succ=[";
  for (std::size_t i = 0; i < f.succ.size(); ++i) os << (i ? "," : "") << f.succ[i];
  os << "]";
  return os.str();
}

std::optional<std::string> check_fmap_sets(Rng& rng) {
  auto f = gen::random_fmap(rng, 120);
  auto q = fgraph::four_sets(f);
  if (!q.inclusion_chain_holds()) return "inclusion chain broken: " + show_fmap(f);
  if (q.stab != q.atrac) return "stab != atrac: " + show_fmap(f);
  if (fgraph::image_of(f, q.stab) != q.stab) return "stab not stabilized: " + show_fmap(f);
  return std::nullopt;
}

std::optional<std::string> check_fmap_maximality(Rng& rng) {
  auto f = gen::random_fmap(rng, 10);
  auto stab = fgraph::greatest_stabilized_subset(f);
  const int n = f.size;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> y;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) y.push_back(i);
    if (fgraph::image_of(f, y) != y) continue;
    if (!std::includes(stab.begin(), stab.end(), y.begin(), y.end()))
      return "stabilized subset escapes stab: " + show_fmap(f);
  }
  return std::nullopt;
}

std::optional<std::string> check_fmap_power_stab(Rng& rng) {
  auto f = gen::random_fmap(rng, 60);
  auto stab = fgraph::greatest_stabilized_subset(f);
  for (int n = 2; n <= 5; ++n) {
    if (fgraph::greatest_stabilized_subset(f.power(n)) != stab)
      return "stab(phi^n) differs: " + show_fmap(f);
  }
  return std::nullopt;
}

std::optional<std::string> check_staircase_classify(Rng& rng) {
  long long n = rng.range(-8, 8);
  long long cap = std::max(n - 1, 0LL);
  long long m = rng.range(0, cap);
  staircase::Z2Point p{n, m};
  auto rep = staircase::classify(p);
  for (int depth = 1; depth <= 12; ++depth) {
    bool found = staircase::backward_search(p, depth).has_value();
    bool expected = rep.behavior == staircase::ChainBehavior::UnboundedFiniteChains
                        ? true
                        : depth <= rep.max_chain;
    if (found != expected) {
      std::ostringstream os;
      os << "search/classify disagree at (" << n << "," << m << ") depth " << depth;
      return os.str();
    }
  }
  return std::nullopt;
}

std::optional<std::string> check_staircase_truncation(Rng& rng) {
  int big_n = static_cast<int>(rng.range(1, 6));
  auto t = staircase::truncate(big_n);
  auto q = fgraph::four_sets(t.map);
  std::vector<int> loop{t.label_of({-big_n, 0})};
  if (q.stab != loop || q.atrac != loop || q.orb != loop || q.fix != loop) {
    return "truncation sets differ from the boundary loop, N=" + std::to_string(big_n);
  }
  return std::nullopt;
}

std::optional<std::string> check_linalg_stable(Rng& rng) {
  auto m = gen::random_matrix(rng, 6);
  auto stable = linalg::stable_subspace(m);
  auto eventual = linalg::image_basis(linalg::mat_pow(m, m.rows));
  if (!(stable == eventual)) return "stable subspace is not the eventual image";
  if (!linalg::decomposition_check(m)) return "kernel/image decomposition fails";
  return std::nullopt;
}

std::optional<std::string> check_linalg_chain_shape(Rng& rng) {
  auto m = gen::random_matrix(rng, 6);
  auto rep = linalg::chain_report(m);
  const int d = m.rows;
  if (rep.stab_index > d) return "stabilization index exceeds dimension";
  for (std::size_t i = 0; i + 1 < rep.ker_dims.size(); ++i) {
    if (rep.ker_dims[i + 1] < rep.ker_dims[i]) return "kernel dims decrease";
    if (rep.im_dims[i + 1] > rep.im_dims[i]) return "image dims increase";
    bool before = static_cast<int>(i) < rep.stab_index;
    if (before && rep.ker_dims[i + 1] == rep.ker_dims[i]) return "kernel stalls early";
    if (!before && rep.ker_dims[i + 1] != rep.ker_dims[i]) return "kernel moves after stabilizing";
  }
  for (std::size_t i = 0; i < rep.ker_dims.size(); ++i)
    if (rep.ker_dims[i] + rep.im_dims[i] != d) return "rank-nullity broken";
  return std::nullopt;
}

std::optional<std::string> check_linalg_fmap_shadow(Rng& rng) {
  int big_n = static_cast<int>(rng.range(1, 4));
  auto t = staircase::truncate(big_n);
  const int d = t.map.size;
  linalg::RationalMatrix m(d, d);
  for (int i = 0; i < d; ++i) m.at(t.map.succ[i], i) = 1;
  auto q = fgraph::four_sets(t.map);
  auto stable = linalg::stable_subspace(m);
  if (stable.dim() != static_cast<int>(q.stab.size()))
    return "linearized truncation disagrees with the set computation";
  if (!(stable == linalg::image_basis(linalg::mat_pow(m, d)))) return "stable != eventual image";
  return std::nullopt;
}

std::optional<std::string> check_alpha_bijection(Rng& rng) {
  std::uint64_t idx = 1 + rng.below(1000000);
  auto [k, n] = hilbert::alpha_inv(idx);
  if (hilbert::alpha(k, n) != idx) return "alpha round trip fails at " + std::to_string(idx);
  std::uint64_t k2 = 1 + rng.below(1000), n2 = 1 + rng.below(1000);
  auto [k3, n3] = hilbert::alpha_inv(hilbert::alpha(k2, n2));
  if (k3 != k2 || n3 != n2) return "alpha_inv round trip fails";
  return std::nullopt;
}

std::optional<std::string> check_hilbert_shift(Rng& rng) {
  hilbert::TruncationWindow w{12, 12};
  std::uint64_t k = 2 + rng.below(11);
  std::uint64_t j = 2 + rng.below(k - 1);
  auto chk = hilbert::verify_shift_relation(k, j, w);
  if (!chk.pass()) return "shift relation fails at k=" + std::to_string(k) + " j=" + std::to_string(j);
  return std::nullopt;
}

hilbert::Combination random_combination(Rng& rng, std::uint64_t k_max, const Rational& target) {
  // Random lambdas on a random support, last one solved to hit the target.
  std::vector<std::uint64_t> ks;
  std::uint64_t count = 2 + rng.below(4);
  while (ks.size() < count) {
    std::uint64_t k = 1 + rng.below(k_max);
    if (std::find(ks.begin(), ks.end(), k) == ks.end()) ks.push_back(k);
  }
  std::sort(ks.begin(), ks.end());
  hilbert::Combination combo;
  Rational sum = 0;
  for (std::size_t i = 0; i + 1 < ks.size(); ++i) {
    Rational lambda = rng.small_rational(6, 4);
    combo.emplace_back(ks[i], lambda);
    sum += lambda / Rational(Int(ks[i]) * Int(ks[i]));
  }
  Rational last = (target - sum) * Rational(Int(ks.back()) * Int(ks.back()));
  combo.emplace_back(ks.back(), last);
  return combo;
}

std::optional<std::string> check_hilbert_kernel(Rng& rng) {
  hilbert::TruncationWindow w{12, 12};
  auto combo = random_combination(rng, w.k_max, Rational(0));
  auto chk = hilbert::kernel_witness(combo, rng.small_rational(3, 2), w);
  if (!chk.pass()) return "kernel witness has a nonzero internal coordinate";
  return std::nullopt;
}

std::optional<std::string> check_hilbert_e0(Rng& rng) {
  hilbert::TruncationWindow w{12, 12};
  auto combo = random_combination(rng, w.k_max, Rational(1));
  auto chk = hilbert::e0_witness(combo, rng.small_rational(3, 2), w);
  if (!chk.pass()) return "e0 witness misses e0";
  if (chk.e0_coefficient != 1) return "e0 coefficient is not 1";
  return std::nullopt;
}

std::optional<std::string> check_hilbert_basis_in_image(Rng& rng) {
  hilbert::TruncationWindow w{12, 12};
  std::uint64_t k = 1 + rng.below(w.k_max);
  std::uint64_t n = 1 + rng.below(w.n_max - 1);
  auto src = hilbert::SparseVec::basis(hilbert::alpha(k, n + 1));
  hilbert::SparseVec scaled;
  scaled.add_scaled(src, Rational(n + 1));
  auto img = hilbert::t_hat_apply(scaled, w);
  if (!(img == hilbert::SparseVec::basis(hilbert::alpha(k, n))))
    return "basis vector not reproduced from one level up";
  return std::nullopt;
}

std::optional<std::string> check_hilbert_divergence(Rng& rng) {
  std::uint64_t k = 1 + rng.below(3);
  Rational a1 = rng.small_rational(4, 2);
  auto rep = hilbert::nonsurjectivity_evidence(k, a1, {50, 200, 800});
  if (!rep.monotone) return "partial norms not monotone";
  if (rep.rung_norm_squared.back().second <= rep.rung_norm_squared.front().second)
    return "partial norms do not grow";
  return std::nullopt;
}

std::optional<std::string> check_hilbert_norm(Rng& rng) {
  hilbert::TruncationWindow w{10, 10};
  std::vector<hilbert::SparseVec> samples;
  for (int s = 0; s < 4; ++s) {
    hilbert::SparseVec v;
    for (int t = 0; t < 6; ++t) {
      std::uint64_t k = 1 + rng.below(w.k_max);
      std::uint64_t n = 1 + rng.below(w.n_max);
      v.add(hilbert::alpha(k, n), rng.small_rational(5, 3));
    }
    samples.push_back(std::move(v));
  }
  auto chk = hilbert::norm_bound_check(samples, w);
  if (!chk.pass) return "operator norm bound violated";
  return std::nullopt;
}

std::optional<std::string> check_subst_monotone(Rng& rng) {
  auto phi = gen::random_substitution(rng, 4, 3, true);
  auto w = gen::random_word(rng, phi.alphabet(), 6);
  if (subst::immortal_count(phi, subst::apply(phi, w)) < subst::immortal_count(phi, w))
    return "immortal count dropped: " + phi.to_dsl();
  auto mort = subst::mortality(phi);
  int mortal = static_cast<int>(mort.mortal.size());
  if (mort.exponent > mortal || mortal > static_cast<int>(phi.alphabet().size()))
    return "mortality exponent bound broken: " + phi.to_dsl();
  return std::nullopt;
}

std::optional<std::string> check_subst_length_monotone(Rng& rng) {
  auto phi = gen::random_substitution(rng, 4, 3, false);
  auto w = gen::random_word(rng, phi.alphabet(), 6);
  if (subst::apply(phi, w).size() < w.size()) return "length dropped: " + phi.to_dsl();
  return std::nullopt;
}

std::optional<std::string> check_subst_cross_oracle(Rng& rng) {
  auto phi = gen::random_substitution(rng, 3, 3, false);
  auto w = gen::random_word(rng, phi.alphabet(), 4);
  auto rep = subst::membership_finite(phi, w);
  bool stab = subst::stab_exact_nonerasing(phi, w);
  bool atrac = subst::atrac_exact_nonerasing(phi, w);
  if (rep.in_orb != stab || stab != atrac)
    return "oracles disagree on \"" + w + "\": " + phi.to_dsl();
  return std::nullopt;
}

std::optional<std::string> check_subst_periodic_monoid(Rng& rng) {
  auto phi = gen::random_substitution(rng, 4, 3, false);
  auto w = gen::random_word(rng, phi.alphabet(), 5);
  std::string periodic = subst::periodic_letters(phi);
  bool in_monoid = true;
  for (char c : w)
    if (periodic.find(c) == std::string::npos) in_monoid = false;
  if (subst::membership_finite(phi, w).in_orb != in_monoid)
    return "periodic-letter characterization fails on \"" + w + "\": " + phi.to_dsl();
  return std::nullopt;
}

std::optional<std::string> check_subst_erasing_consistent(Rng& rng) {
  auto phi = gen::random_substitution(rng, 3, 3, true);
  auto w = gen::random_word(rng, phi.alphabet(), 4);
  auto rep = subst::membership_finite(phi, w);
  int depth = subst::backward_chain_depth(phi, w, 30);
  if (depth >= 30 && !rep.in_atrac)
    return "deep canonical chain for a point outside atrac: " + phi.to_dsl();
  return std::nullopt;
}

std::optional<std::string> check_subst_expansion(Rng& rng) {
  auto phi = gen::random_substitution(rng, 3, 3, true);
  auto analysis = subst::fixed_point_specs(phi);
  for (const auto& spec : analysis.specs) {
    if (spec.finite_case) {
      std::string fixed = subst::fixed_word(phi, spec);
      if (subst::apply_n(phi, fixed, spec.power) != fixed)
        return "finite fixed word is not fixed: " + phi.to_dsl();
      continue;
    }
    std::string a = subst::expand_fixed_point(phi, spec, 40);
    std::string b = subst::expand_fixed_point(phi, spec, 80);
    if (b.substr(0, a.size()) != a) return "expansion is not prefix-stable: " + phi.to_dsl();
    std::string img = subst::apply_n(phi, b, spec.power);
    if (img.substr(0, std::min(img.size(), b.size())) != b.substr(0, std::min(img.size(), b.size())))
      return "expansion not reproduced by the substitution: " + phi.to_dsl();
    for (int n = 1; n <= 20; ++n) {
      if (subst::iterated_length(phi, spec.seed, spec.power * n) < n + 1)
        return "growth bound fails: " + phi.to_dsl();
    }
  }
  return std::nullopt;
}

std::optional<std::string> check_monoid_finite(Rng& rng) {
  auto sys = gen::random_monoid_system(rng, 3, 60);
  auto sets = monoid::finite_monoid_sets(sys);
  if (!sets.equal) return "monoid stab != atrac";
  if (monoid::family_image(sys, sets.stab) != sets.stab) return "monoid stab not stabilized";
  return std::nullopt;
}

std::optional<std::string> check_monoid_maximality(Rng& rng) {
  auto sys = gen::random_monoid_system(rng, 3, 8);
  auto sets = monoid::finite_monoid_sets(sys);
  const int n = sys.size;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> y;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) y.push_back(i);
    if (monoid::family_image(sys, y) != y) continue;
    if (!std::includes(sets.stab.begin(), sets.stab.end(), y.begin(), y.end()))
      return "family-stabilized subset escapes stab";
  }
  return std::nullopt;
}

std::optional<std::string> check_rle_round_trip(Rng& rng) {
  std::string sigma = "123";
  std::string shape;
  int len = static_cast<int>(rng.range(1, 8));
  for (int i = 0; i < len; ++i) {
    char c = sigma[rng.below(sigma.size())];
    if (!shape.empty() && shape.back() == c) {
      --i;
      continue;
    }
    shape += c;
  }
  std::vector<int> content;
  for (std::size_t i = 0; i < shape.size(); ++i)
    content.push_back(static_cast<int>(rng.range(1, 3)));
  std::string v = monoid::psi_apply(shape, content);
  auto pair = monoid::rle_decode(v);
  std::vector<int> recovered = pair.lengths;
  if (pair.pending > 0) recovered.push_back(pair.pending);
  if (pair.shape != shape || recovered != content) return "run-length round trip fails";
  return std::nullopt;
}

std::optional<std::string> check_kolakoski(Rng& rng) {
  std::size_t len = 50 + rng.below(400);
  std::string k = monoid::kolakoski(len);
  auto pair = monoid::rle_decode(k);
  for (std::size_t i = 0; i < pair.lengths.size(); ++i) {
    if (k[i] - '0' != pair.lengths[i]) return "kolakoski self-reading broken";
  }
  for (std::size_t i = 1; i < pair.shape.size(); ++i)
    if (pair.shape[i] == pair.shape[i - 1]) return "kolakoski runs not alternating";
  return std::nullopt;
}

std::optional<std::string> check_episturmian_recovery(Rng& rng) {
  std::string alphabet = "ab";
  if (rng.chance(1, 2)) alphabet = "abc";
  std::vector<monoid::Token> directive;
  int len = static_cast<int>(rng.range(1, 8));
  for (int i = 0; i < len; ++i)
    directive.push_back({rng.chance(1, 2), alphabet[rng.below(alphabet.size())]});
  auto rep = monoid::episturmian_generate(alphabet, directive, 160);
  if (rep.prefix.empty()) return std::nullopt;  // no stable prefix to recover from
  auto deep = monoid::monoid_atrac_depth(alphabet, {}, rep.prefix, 0);
  std::vector<monoid::Token> family;
  for (char c : alphabet) family.push_back({true, c});
  for (char c : alphabet) family.push_back({false, c});
  auto found = monoid::monoid_atrac_depth(alphabet, family, rep.prefix, len);
  if (!deep.witnessed || !found.witnessed)
    return "no desubstitution branch of full depth for a generated prefix";
  return std::nullopt;
}

std::optional<std::string> check_free_reduce(Rng& rng) {
  auto w = gen::random_reduced_word(rng, 3, 10);
  if (freegrp::reduce(w) != w) return "reduce not idempotent";
  if (!freegrp::concat(w, freegrp::inverse(w)).empty()) return "w * w^-1 does not cancel";
  return std::nullopt;
}

std::optional<std::string> check_free_rank_chain(Rng& rng) {
  int rank = static_cast<int>(rng.range(2, 3));
  auto phi = gen::random_endo(rng, rank, 4);
  auto chain = freegrp::rank_chain(phi, 4);
  for (std::size_t i = 0; i + 1 < chain.ranks.size(); ++i)
    if (chain.ranks[i + 1] > chain.ranks[i]) return "rank chain increases";
  if (chain.set_stable_at) {
    // Hopfian shadow: once set-stable, stays set-stable across the horizon.
    auto gens_n = phi.iterated_images(*chain.set_stable_at + 1);
    auto gens_next = phi.iterated_images(*chain.set_stable_at + 2);
    freegrp::StallingsGraph g(gens_next, rank, false);
    for (const auto& w : gens_n)
      if (!g.contains(w)) return "set stability lost one level up";
  }
  return std::nullopt;
}

std::optional<std::string> check_free_membership(Rng& rng) {
  int rank = static_cast<int>(rng.range(2, 3));
  auto phi = gen::random_endo(rng, rank, 4);
  auto v = gen::random_reduced_word(rng, rank, 6);
  auto w = phi.apply(v);
  freegrp::StallingsGraph g(phi.images, rank, false);
  if (!g.contains(w)) return "image point rejected by the image graph";
  auto pre = freegrp::preimage_solve(phi, w);
  if (!pre) return "no preimage found for an image point";
  if (phi.apply(*pre) != w) return "preimage does not map back";
  return std::nullopt;
}

std::optional<std::string> check_free_inner_stab(Rng& rng) {
  int rank = 2;
  auto c = gen::random_reduced_word(rng, rank, 4);
  std::vector<freegrp::Word> images;
  for (int i = 1; i <= rank; ++i)
    images.push_back(freegrp::concat(freegrp::concat(c, freegrp::Word{i}), freegrp::inverse(c)));
  auto phi = freegrp::FreeEndo::create(rank, std::move(images));
  auto w = gen::random_reduced_word(rng, rank, 5);
  auto rep = freegrp::stab_atrac_report(phi, w, 4);
  if (!rep.exact || !rep.in_stab) return "inner automorphism point not stable";
  if (rep.chain_length < 4) return "inner automorphism chain too short";
  return std::nullopt;
}

std::optional<std::string> check_interval_iterates(Rng& rng) {
  auto f = gen::random_continuous_pwl(rng, 4);
  auto its = interval::atrac_iterates(f, 8);
  for (std::size_t i = 0; i < its.size(); ++i) {
    if (its[i].empty()) return "iterate became empty";
    if (i > 0 && !interval::subset_of(its[i], its[i - 1])) return "iterates not decreasing";
  }
  return std::nullopt;
}

std::optional<std::string> check_interval_chains(Rng& rng) {
  auto f = gen::random_continuous_pwl(rng, 4);
  const int d = 6;
  auto its = interval::atrac_iterates(f, d);
  const auto& last = its.back();
  for (int num = 0; num <= 16; ++num) {
    Rational x(num, 16);
    if (!last.contains(x)) continue;
    auto chain = interval::backward_chain_point(f, x, d);
    if (!chain) return "point of the d-th image without a depth-d chain";
  }
  return std::nullopt;
}

std::vector<Battery> batteries() {
  return {
      {"fgraph", "four-sets-chain-and-equality", 60, check_fmap_sets},
      {"fgraph", "stab-maximality-exhaustive", 12, check_fmap_maximality},
      {"fgraph", "stab-of-powers", 20, check_fmap_power_stab},
      {"fgraph", "staircase-classify-vs-search", 40, check_staircase_classify},
      {"fgraph", "staircase-truncation-sets", 6, check_staircase_truncation},
      {"linalg", "stable-equals-eventual-image", 25, check_linalg_stable},
      {"linalg", "kernel-chain-shape", 25, check_linalg_chain_shape},
      {"linalg", "functional-graph-shadow", 4, check_linalg_fmap_shadow},
      {"hilbert", "pairing-bijection", 200, check_alpha_bijection},
      {"hilbert", "shift-relations", 20, check_hilbert_shift},
      {"hilbert", "kernel-witnesses", 15, check_hilbert_kernel},
      {"hilbert", "e0-witnesses", 15, check_hilbert_e0},
      {"hilbert", "basis-vectors-in-image", 30, check_hilbert_basis_in_image},
      {"hilbert", "divergence-monotone", 6, check_hilbert_divergence},
      {"hilbert", "norm-bound", 8, check_hilbert_norm},
      {"subst", "immortal-count-monotone", 60, check_subst_monotone},
      {"subst", "non-erasing-length-monotone", 40, check_subst_length_monotone},
      {"subst", "membership-cross-oracle", 40, check_subst_cross_oracle},
      {"subst", "periodic-letter-monoid", 40, check_subst_periodic_monoid},
      {"subst", "erasing-search-consistent", 30, check_subst_erasing_consistent},
      {"subst", "fixed-point-expansion", 25, check_subst_expansion},
      {"monoid", "finite-stab-equals-atrac", 40, check_monoid_finite},
      {"monoid", "finite-stab-maximality", 10, check_monoid_maximality},
      {"monoid", "run-length-round-trip", 40, check_rle_round_trip},
      {"monoid", "kolakoski-self-reading", 10, check_kolakoski},
      {"monoid", "episturmian-recovery", 15, check_episturmian_recovery},
      {"freegroup", "reduction", 60, check_free_reduce},
      {"freegroup", "rank-chain", 15, check_free_rank_chain},
      {"freegroup", "image-membership-and-preimage", 20, check_free_membership},
      {"freegroup", "inner-automorphism-stability", 8, check_free_inner_stab},
      {"interval", "iterates-decreasing", 15, check_interval_iterates},
      {"interval", "image-points-have-chains", 10, check_interval_chains},
  };
}

}  // namespace

bool CampaignReport::all_pass() const {
  for (const auto& p : properties)
    if (p.failures > 0) return false;
  return true;
}

CampaignReport run_campaign(std::uint64_t seed, int scale) {
  CampaignReport report;
  report.seed = seed;
  report.scale = scale;
  if (scale <= 0) return report;
  std::uint64_t stream = 0;
  for (const Battery& b : batteries()) {
    PropertyResult res;
    res.module = b.module;
    res.name = b.name;
    res.instances = b.base_instances * scale;
    // Independent stream per battery so adding one does not shift the others.
    Rng rng(seed ^ (0x9e3779b97f4a7c15ULL * ++stream));
    for (int i = 0; i < res.instances; ++i) {
      auto failure = b.check(rng);
      if (failure) {
        ++res.failures;
        if (res.counterexample.empty()) res.counterexample = *failure;
      }
    }
    report.properties.push_back(std::move(res));
  }
  return report;
}

}  // namespace stabset::campaign
