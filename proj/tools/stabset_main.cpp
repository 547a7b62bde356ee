// stabset: computes and cross-verifies fixed/orbit/stable/attracting sets for
// finite functional graphs, exact rational linear maps, a truncated sequence
// space operator, word substitutions, free group endomorphisms, piecewise
// linear interval maps, and monoids of self-maps.

#include <CLI11.hpp>

#include <iostream>
#include <string>

#include "stabset/campaign.hpp"
#include "stabset/episturmian.hpp"
#include "stabset/fgraph.hpp"
#include "stabset/freegroup.hpp"
#include "stabset/hilbert.hpp"
#include "stabset/interval.hpp"
#include "stabset/json_io.hpp"
#include "stabset/linalg.hpp"
#include "stabset/monoid_finite.hpp"
#include "stabset/prng.hpp"
#include "stabset/runlength.hpp"
#include "stabset/staircase.hpp"
#include "stabset/substitution.hpp"

namespace {

using stabset::Rational;
using stabset::io::Json;

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailed = 1;
constexpr int kExitInputError = 2;

struct Options {
  std::string format = "json";
  std::uint64_t seed = 1;
  int depth = 12;
  long long length = 64;
  double tolerance = 1e-9;
};

void render_text(const Json& j, std::ostream& os, int indent = 0) {
  std::string pad(indent, ' ');
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      if (value.is_object() || value.is_array()) {
        os << pad << key << ":\n";
        render_text(value, os, indent + 2);
      } else {
        os << pad << key << ": " << value.dump() << "\n";
      }
    }
  } else if (j.is_array()) {
    for (const auto& value : j) {
      if (value.is_object() || value.is_array()) {
        os << pad << "-\n";
        render_text(value, os, indent + 2);
      } else {
        os << pad << "- " << value.dump() << "\n";
      }
    }
  } else {
    os << pad << j.dump() << "\n";
  }
}

int emit(const Json& report, const Options& opt, bool ok) {
  if (opt.format == "json")
    std::cout << report.dump(2) << "\n";
  else
    render_text(report, std::cout);
  return ok ? kExitOk : kExitVerificationFailed;
}

std::string behavior_name(stabset::staircase::ChainBehavior b) {
  switch (b) {
    case stabset::staircase::ChainBehavior::InfiniteChain:
      return "infinite-chain";
    case stabset::staircase::ChainBehavior::UnboundedFiniteChains:
      return "unbounded-finite-chains";
    default:
      return "bounded-chains";
  }
}

// ----- fmap ---------------------------------------------------------------

int run_fmap_sets(const std::string& file, const Options& opt) {
  auto f = stabset::io::fmap_from_json(stabset::io::load_json(file));
  auto q = stabset::fgraph::four_sets(f);
  Json rep{{"command", "fmap sets"},
           {"size", f.size},
           {"sets", stabset::io::set_quad_to_json(q)},
           {"inclusion_chain", q.inclusion_chain_holds()},
           {"stab_equals_atrac", q.stab == q.atrac}};
  return emit(rep, opt, q.inclusion_chain_holds() && q.stab == q.atrac);
}

int run_fmap_chain(const std::string& file, int x, const Options& opt) {
  auto f = stabset::io::fmap_from_json(stabset::io::load_json(file));
  auto chain = stabset::fgraph::backward_chain(f, x, opt.depth);
  Json rep{{"command", "fmap chain"}, {"x", x}, {"depth", opt.depth}, {"found", chain.has_value()}};
  if (chain) rep["chain"] = *chain;
  return emit(rep, opt, true);
}

int run_fmap_stair_classify(long long n, long long m, const Options& opt) {
  stabset::staircase::Z2Point p{n, m};
  auto rep = stabset::staircase::classify(p);
  auto search = stabset::staircase::backward_search(p, opt.depth);
  Json j{{"command", "fmap stair-classify"},
         {"point", stabset::io::z2_to_json(p)},
         {"in_atrac", rep.in_atrac},
         {"in_stab", rep.in_stab},
         {"chain_behavior", behavior_name(rep.behavior)}};
  if (rep.behavior == stabset::staircase::ChainBehavior::BoundedChains)
    j["max_chain"] = rep.max_chain;
  j["search_depth"] = opt.depth;
  j["search_found"] = search.has_value();
  return emit(j, opt, true);
}

int run_fmap_stair_truncate(int window, const Options& opt) {
  auto t = stabset::staircase::truncate(window);
  auto q = stabset::fgraph::four_sets(t.map);
  Json labels = Json::array();
  for (const auto& p : t.label_to_point) labels.push_back(stabset::io::z2_to_json(p));
  Json j{{"command", "fmap stair-truncate"},
         {"window", window},
         {"map", stabset::io::fmap_to_json(t.map)},
         {"labels", labels},
         {"sets", stabset::io::set_quad_to_json(q)}};
  return emit(j, opt, true);
}

// ----- linear ---------------------------------------------------------------

int run_linear(const std::string& sub, const std::string& file, const Options& opt) {
  auto m = stabset::io::matrix_from_json(stabset::io::load_json(file));
  Json j{{"command", "linear " + sub}, {"n", m.rows}};
  bool ok = true;
  if (sub == "chain") {
    j["report"] = stabset::io::chain_report_to_json(stabset::linalg::chain_report(m));
  } else if (sub == "kernel") {
    j["kernel"] = stabset::io::basis_to_json(stabset::linalg::kernel_basis(m));
  } else if (sub == "stable") {
    auto stable = stabset::linalg::stable_subspace(m);
    j["stable"] = stabset::io::basis_to_json(stable);
    j["equals_eventual_image"] =
        stable == stabset::linalg::image_basis(stabset::linalg::mat_pow(m, m.rows));
    ok = j["equals_eventual_image"].get<bool>();
  } else {  // check
    ok = stabset::linalg::decomposition_check(m);
    j["decomposition_check"] = ok;
  }
  return emit(j, opt, ok);
}

// ----- hilbert ---------------------------------------------------------------

int run_hilbert_verify(std::uint64_t kmax, std::uint64_t nmax, const std::string& which,
                       const Options& opt) {
  namespace hb = stabset::hilbert;
  hb::TruncationWindow w{kmax, nmax};
  Json j{{"command", "hilbert verify"}, {"kmax", kmax}, {"nmax", nmax}};
  bool ok = true;
  stabset::Rng rng(opt.seed);

  if (which.empty() || which == "shift") {
    int checked = 0, failed = 0;
    for (std::uint64_t k = 2; k <= w.k_max; ++k)
      for (std::uint64_t jj = 2; jj <= k; ++jj) {
        ++checked;
        if (!hb::verify_shift_relation(k, jj, w).pass()) ++failed;
      }
    j["shift"] = Json{{"checked", checked}, {"failed", failed}};
    ok = ok && failed == 0;
  }
  if (which.empty() || which == "kernel") {
    int failed = 0;
    const int count = 25;
    for (int i = 0; i < count; ++i) {
      std::uint64_t k1 = 1 + rng.below(w.k_max), k2 = 1 + rng.below(w.k_max);
      if (k1 == k2) k2 = (k2 % w.k_max) + 1;
      Rational l1 = rng.small_rational(5, 3);
      if (l1 == 0) l1 = 1;
      Rational l2 = -l1 * Rational(stabset::Int(k2) * k2, stabset::Int(k1) * k1);
      if (!hb::kernel_witness({{k1, l1}, {k2, l2}}, rng.small_rational(2, 2), w).pass()) ++failed;
      Rational e1 = rng.small_rational(5, 3);
      Rational e2 = (Rational(1) - e1 / Rational(stabset::Int(k1) * k1)) *
                    Rational(stabset::Int(k2) * k2);
      if (!hb::e0_witness({{k1, e1}, {k2, e2}}, rng.small_rational(2, 2), w).pass()) ++failed;
    }
    j["kernel"] = Json{{"witnesses", 2 * count}, {"failed", failed}};
    ok = ok && failed == 0;
  }
  if (which.empty() || which == "preimage") {
    int failed = 0, checked = 0;
    for (std::uint64_t m = 2; m <= std::min<std::uint64_t>(6, w.k_max); ++m) {
      ++checked;
      hb::Combination combo{{m, Rational(stabset::Int(m) * m)}};
      if (!hb::e0_preimage_depth(m, combo, Rational(1), w).pass()) ++failed;
      ++checked;
      hb::Combination two{{m, Rational(stabset::Int(m) * m, 2)},
                          {m + 1, Rational(stabset::Int(m + 1) * (m + 1), 2)}};
      if (m + 1 <= w.k_max && !hb::e0_preimage_depth(m, two, Rational(0), w).pass()) ++failed;
    }
    j["preimage"] = Json{{"checked", checked}, {"failed", failed}};
    ok = ok && failed == 0;
  }
  if (which.empty() || which == "norm") {
    std::vector<hb::SparseVec> samples{hb::SparseVec::basis(0)};
    for (int i = 0; i < 200; ++i) {
      hb::SparseVec v;
      for (int t = 0; t < 8; ++t)
        v.add(hb::alpha(1 + rng.below(w.k_max), 1 + rng.below(w.n_max)), rng.small_rational(6, 4));
      samples.push_back(std::move(v));
    }
    auto chk = hb::norm_bound_check(samples, w, opt.tolerance);
    j["norm"] = Json{{"samples", chk.samples}, {"bound", chk.bound}, {"worst_ratio", chk.worst_ratio},
                     {"pass", chk.pass}};
    ok = ok && chk.pass;
  }
  if (which.empty() || which == "diverge") {
    bool pass = true;
    Json rows = Json::array();
    for (std::uint64_t k : {std::uint64_t(1), std::uint64_t(2), std::uint64_t(3)}) {
      for (const Rational& a1 : {Rational(0), Rational(1), Rational(-1, 2)}) {
        auto rep = hb::nonsurjectivity_evidence(k, a1, {100, 1000, 10000});
        double top = rep.rung_norm_squared.back().second;
        bool good = rep.monotone && top > 1000.0;
        pass = pass && good;
        rows.push_back(Json{{"k", k},
                            {"a1", stabset::rational_str(a1)},
                            {"norm2_at_top", top},
                            {"monotone", rep.monotone}});
      }
    }
    j["diverge"] = Json{{"cases", rows}, {"pass", pass}};
    ok = ok && pass;
  }
  return emit(j, opt, ok);
}

// ----- subst ---------------------------------------------------------------

stabset::subst::Substitution load_substitution(const std::string& file) {
  return stabset::subst::Substitution::parse(stabset::io::read_file(file));
}

int run_subst_analyze(const std::string& file, const Options& opt) {
  auto phi = load_substitution(file);
  auto mort = stabset::subst::mortality(phi);
  auto analysis = stabset::subst::fixed_point_specs(phi);
  Json specs = Json::array();
  for (const auto& s : analysis.specs) {
    specs.push_back(Json{{"seed", std::string(1, s.seed)},
                         {"power", s.power},
                         {"v1", s.v1},
                         {"v2", s.v2},
                         {"case", s.finite_case ? "finite" : "infinite"}});
  }
  Json j{{"command", "subst analyze"},
         {"alphabet", phi.alphabet()},
         {"mortal", mort.mortal},
         {"exponent", mort.exponent},
         {"non_erasing", mort.mortal.empty()},
         {"periodic_letters", stabset::subst::periodic_letters(phi)},
         {"fixed_point_specs", specs},
         {"m", analysis.m}};
  return emit(j, opt, true);
}

int run_subst_fixpoint(const std::string& file, char seed, const Options& opt) {
  auto phi = load_substitution(file);
  auto analysis = stabset::subst::fixed_point_specs(phi);
  for (const auto& s : analysis.specs) {
    if (s.seed != seed) continue;
    Json j{{"command", "subst fixpoint"}, {"seed", std::string(1, seed)}, {"power", s.power}};
    if (s.finite_case) {
      j["case"] = "finite";
      j["word"] = stabset::subst::fixed_word(phi, s);
    } else {
      j["case"] = "infinite";
      j["prefix"] = stabset::subst::expand_fixed_point(phi, s, static_cast<std::size_t>(opt.length));
    }
    return emit(j, opt, true);
  }
  throw std::invalid_argument(std::string("no fixed-point seed at letter ") + seed);
}

int run_subst_member(const std::string& file, const std::string& word, const Options& opt) {
  auto phi = load_substitution(file);
  auto rep = stabset::subst::membership_finite(phi, word);
  int search = stabset::subst::backward_chain_depth(phi, word, opt.depth);
  Json j{{"command", "subst member"},
         {"word", word},
         {"in_orb", rep.in_orb},
         {"in_stab", rep.in_stab},
         {"in_atrac", rep.in_atrac},
         {"method", "exact"},
         {"canonical_chain_depth", search},
         {"search_depth", opt.depth}};
  if (rep.period) j["period"] = *rep.period;
  bool consistent = !(search >= opt.depth && !rep.in_atrac);
  j["search_consistent"] = consistent;
  return emit(j, opt, consistent);
}

int run_subst_stabprefix(const std::string& file, const std::string& word, const Options& opt) {
  auto phi = load_substitution(file);
  auto rep = stabset::subst::stab_membership_prefix(phi, word);
  std::string verdict = rep.verdict == stabset::subst::PrefixVerdict::Consistent ? "consistent"
                        : rep.verdict == stabset::subst::PrefixVerdict::Inconsistent
                            ? "inconsistent"
                            : "inconclusive";
  Json j{{"command", "subst stabprefix"},
         {"word", word},
         {"m", rep.m},
         {"verdict", verdict},
         {"checked_positions", rep.checked_positions}};
  if (rep.verdict == stabset::subst::PrefixVerdict::Inconsistent)
    j["mismatch_position"] = rep.mismatch_position;
  return emit(j, opt, true);
}

// ----- monoid ---------------------------------------------------------------

int run_monoid_finite(const std::string& file, const Options& opt) {
  auto sys = stabset::io::monoid_system_from_json(stabset::io::load_json(file));
  auto sets = stabset::monoid::finite_monoid_sets(sys);
  Json j{{"command", "monoid finite"},
         {"size", sys.size},
         {"stab", sets.stab},
         {"atrac", sets.atrac},
         {"equal", sets.equal}};
  return emit(j, opt, sets.equal);
}

int run_monoid_epi(const std::string& directive, const std::string& alphabet, const Options& opt) {
  auto tokens = stabset::monoid::parse_directive(directive, alphabet);
  auto rep =
      stabset::monoid::episturmian_generate(alphabet, tokens, static_cast<std::size_t>(opt.length));
  Json j{{"command", "monoid epi"},
         {"directive", directive},
         {"alphabet", alphabet},
         {"prefix", rep.prefix},
         {"stable_length", rep.prefix.size()},
         {"requested_length", opt.length},
         {"step_lengths", rep.step_lengths}};
  return emit(j, opt, true);
}

int run_monoid_desub(const std::string& word, const std::string& alphabet, const Options& opt) {
  auto branches = stabset::monoid::desubstitute_branches(alphabet, word, opt.depth);
  Json out = Json::array();
  for (std::size_t i = 0; i < branches.size() && i < 32; ++i) {
    Json toks = Json::array();
    for (const auto& t : branches[i].tokens) toks.push_back(t.str());
    out.push_back(Json{{"tokens", toks}, {"leftover", branches[i].leftover}});
  }
  Json j{{"command", "monoid desub"},
         {"word", word},
         {"depth", opt.depth},
         {"branches", branches.size()},
         {"sample", out}};
  return emit(j, opt, true);
}

int run_monoid_kolakoski(const Options& opt) {
  std::string k = stabset::monoid::kolakoski(static_cast<std::size_t>(opt.length));
  auto pair = stabset::monoid::rle_decode(k);
  bool self = true;
  std::size_t mismatch = 0;
  for (std::size_t i = 0; i < pair.lengths.size(); ++i) {
    if (k[i] - '0' != pair.lengths[i]) {
      self = false;
      mismatch = i + 1;
      break;
    }
  }
  Json j{{"command", "monoid kolakoski"},
         {"length", opt.length},
         {"prefix", k.substr(0, std::min<std::size_t>(k.size(), 80))},
         {"self_reading_consistent", self}};
  if (!self) j["first_mismatch"] = mismatch;
  // The literature sometimes prints ...2211 for the first ten symbols; the
  // self-reading fixed point has a 2 in position 10. Flag, do not hide.
  if (k.size() >= 10)
    j["position_10"] = std::string(1, k[9]);
  return emit(j, opt, self);
}

int run_monoid_smooth(const std::string& word, const std::string& sigma, const Options& opt) {
  auto rep = stabset::monoid::smooth_check(word, sigma, opt.depth);
  Json j{{"command", "monoid smooth"},
         {"word", word},
         {"alphabet", sigma},
         {"depth", opt.depth},
         {"achieved_depth", rep.achieved_depth},
         {"pass", rep.pass}};
  if (!rep.pass) {
    j["failed_depth"] = rep.failed_depth;
    j["failed_position"] = rep.failed_position;
  }
  return emit(j, opt, rep.pass);
}

// ----- freegroup -------------------------------------------------------------

int run_freegroup_rankchain(const std::string& file, int n, const Options& opt) {
  auto phi = stabset::io::free_endo_from_json(stabset::io::load_json(file));
  auto chain = stabset::freegrp::rank_chain(phi, n);
  Json j{{"command", "freegroup rankchain"},
         {"endomorphism", stabset::io::free_endo_to_json(phi)},
         {"ranks", chain.ranks},
         {"rank_stable_at", chain.rank_stable_at}};
  if (chain.set_stable_at)
    j["set_stable_at"] = *chain.set_stable_at;
  else
    j["set_stable_at"] = nullptr;
  return emit(j, opt, true);
}

int run_freegroup_member(const std::string& file, const std::string& word, const Options& opt) {
  auto phi = stabset::io::free_endo_from_json(stabset::io::load_json(file));
  auto w = stabset::freegrp::parse_word(word, phi.rank);
  auto rep = stabset::freegrp::stab_atrac_report(phi, w, opt.depth);
  Json chain = Json::array();
  for (const auto& c : rep.chain) chain.push_back(stabset::freegrp::format_word(c));
  Json j{{"command", "freegroup member"},
         {"word", stabset::freegrp::format_word(w)},
         {"depth", opt.depth},
         {"exact", rep.exact},
         {"in_atrac", rep.in_atrac},
         {"in_stab", rep.in_stab},
         {"chain_length", rep.chain_length},
         {"chain", chain}};
  if (rep.stable_n)
    j["set_stable_at"] = *rep.stable_n;
  else
    j["set_stable_at"] = nullptr;
  return emit(j, opt, true);
}

// ----- interval --------------------------------------------------------------

int run_interval_atrac(const std::string& file, int n, const Options& opt) {
  auto f = stabset::io::pwl_from_json(stabset::io::load_json(file));
  auto its = stabset::interval::atrac_iterates(f, n);
  Json steps = Json::array();
  for (const auto& u : its) steps.push_back(stabset::io::interval_union_to_json(u));
  bool nonempty = true;
  for (const auto& u : its) nonempty = nonempty && !u.empty();
  Json j{{"command", "interval atrac"},
         {"n", n},
         {"iterates", steps},
         {"fixed_points", stabset::io::interval_union_to_json(stabset::interval::fixed_points(f))},
         {"all_nonempty", nonempty}};
  return emit(j, opt, nonempty);
}

int run_interval_chain(const std::string& file, const std::string& x, const Options& opt) {
  auto f = stabset::io::pwl_from_json(stabset::io::load_json(file));
  Rational point = stabset::parse_rational(x);
  auto chain = stabset::interval::backward_chain_point(f, point, opt.depth);
  Json j{{"command", "interval chain"}, {"x", x}, {"depth", opt.depth}, {"found", chain.has_value()}};
  if (chain) {
    Json c = Json::array();
    for (const auto& r : *chain) c.push_back(stabset::rational_str(r));
    j["chain"] = c;
  }
  return emit(j, opt, true);
}

// ----- campaign --------------------------------------------------------------

int run_campaign_cmd(int scale, const Options& opt) {
  auto report = stabset::campaign::run_campaign(opt.seed, scale);
  Json props = Json::array();
  for (const auto& p : report.properties) {
    Json row{{"module", p.module},
             {"property", p.name},
             {"instances", p.instances},
             {"failures", p.failures}};
    if (p.failures > 0) row["counterexample"] = p.counterexample;
    props.push_back(row);
  }
  Json j{{"command", "campaign"},
         {"seed", report.seed},
         {"scale", report.scale},
         {"properties", props},
         {"all_pass", report.all_pass()}};
  return emit(j, opt, report.all_pass());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"stable/attracting set computations for self-maps"};
  app.require_subcommand(1);

  Options opt;
  app.add_option("--format", opt.format, "report format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--seed", opt.seed, "random seed");
  app.add_option("--depth", opt.depth, "search depth");
  app.add_option("--length", opt.length, "output length / precision");
  app.add_option("--tolerance", opt.tolerance, "float comparison slack");

  std::string file, word, x, directive, alphabet = "ab", check, sigma = "12";
  int n = 8, point_x = 0, window = 3, scale = 1;
  long long stair_n = 0, stair_m = 0;
  std::uint64_t kmax = 40, nmax = 40;
  char seed_letter = 'a';

  auto* fmap = app.add_subcommand("fmap", "finite functional graphs");
  auto* fmap_sets = fmap->add_subcommand("sets", "all four sets");
  fmap_sets->add_option("file", file)->required();
  auto* fmap_chain = fmap->add_subcommand("chain", "backward chain from a point");
  fmap_chain->add_option("file", file)->required();
  fmap_chain->add_option("--x", point_x)->required();
  auto* stair_cls = fmap->add_subcommand("stair-classify", "classify a staircase point");
  stair_cls->add_option("--n", stair_n)->required();
  stair_cls->add_option("--m", stair_m);
  auto* stair_trunc = fmap->add_subcommand("stair-truncate", "finite staircase window");
  stair_trunc->add_option("--window", window)->required();

  auto* linear = app.add_subcommand("linear", "exact rational linear maps");
  for (const char* sub : {"chain", "kernel", "stable", "check"})
    linear->add_subcommand(sub)->add_option("file", file)->required();

  auto* hilbert_cmd = app.add_subcommand("hilbert", "truncated sequence-space operator");
  auto* hverify = hilbert_cmd->add_subcommand("verify", "run the verification batteries");
  hverify->add_option("--kmax", kmax);
  hverify->add_option("--nmax", nmax);
  hverify->add_option("--check", check)
      ->check(CLI::IsMember({"shift", "kernel", "preimage", "norm", "diverge"}));

  auto* subst_cmd = app.add_subcommand("subst", "word substitutions");
  auto* s_an = subst_cmd->add_subcommand("analyze", "mortality and fixed-point seeds");
  s_an->add_option("file", file)->required();
  auto* s_fp = subst_cmd->add_subcommand("fixpoint", "expand a fixed point");
  s_fp->add_option("file", file)->required();
  s_fp->add_option("--seed", seed_letter)->required();
  auto* s_mem = subst_cmd->add_subcommand("member", "orbit/stable/attracting membership");
  s_mem->add_option("file", file)->required();
  s_mem->add_option("--word", word)->required();
  auto* s_sp = subst_cmd->add_subcommand("stabprefix", "prefix-precision stability check");
  s_sp->add_option("file", file)->required();
  s_sp->add_option("--word", word)->required();

  auto* monoid_cmd = app.add_subcommand("monoid", "monoids of self-maps");
  auto* m_fin = monoid_cmd->add_subcommand("finite", "finite carrier system");
  m_fin->add_option("file", file)->required();
  auto* m_epi = monoid_cmd->add_subcommand("epi", "episturmian generation");
  m_epi->add_option("--directive", directive)->required();
  m_epi->add_option("--alphabet", alphabet);
  auto* m_desub = monoid_cmd->add_subcommand("desub", "desubstitution branches");
  m_desub->add_option("--word", word)->required();
  m_desub->add_option("--alphabet", alphabet);
  auto* m_kol = monoid_cmd->add_subcommand("kolakoski", "self-reading fixed point");
  auto* m_smooth = monoid_cmd->add_subcommand("smooth", "iterated run-length check");
  m_smooth->add_option("--word", word)->required();
  m_smooth->add_option("--alphabet", sigma);

  auto* fg = app.add_subcommand("freegroup", "free group endomorphisms");
  auto* fg_rank = fg->add_subcommand("rankchain", "image rank chain");
  fg_rank->add_option("file", file)->required();
  fg_rank->add_option("--n", n);
  auto* fg_mem = fg->add_subcommand("member", "stable/attracting membership");
  fg_mem->add_option("file", file)->required();
  fg_mem->add_option("--word", word)->required();

  auto* iv = app.add_subcommand("interval", "piecewise linear interval maps");
  auto* iv_atrac = iv->add_subcommand("atrac", "image iterates");
  iv_atrac->add_option("file", file)->required();
  iv_atrac->add_option("--n", n);
  auto* iv_chain = iv->add_subcommand("chain", "backward chain from a rational");
  iv_chain->add_option("file", file)->required();
  iv_chain->add_option("--x", x)->required();

  auto* camp = app.add_subcommand("campaign", "randomized property suites");
  camp->add_option("--sizes", scale, "instance count multiplier, 0 runs nothing");

  // Global flags may appear after the subcommand.
  auto enable_fallthrough = [](auto&& self, CLI::App* a) -> void {
    for (CLI::App* sub : a->get_subcommands({})) {
      sub->fallthrough();
      self(self, sub);
    }
  };
  enable_fallthrough(enable_fallthrough, &app);

  CLI11_PARSE(app, argc, argv);

  try {
    if (fmap_sets->parsed()) return run_fmap_sets(file, opt);
    if (fmap_chain->parsed()) return run_fmap_chain(file, point_x, opt);
    if (stair_cls->parsed()) return run_fmap_stair_classify(stair_n, stair_m, opt);
    if (stair_trunc->parsed()) return run_fmap_stair_truncate(window, opt);
    if (linear->parsed()) {
      for (const char* sub : {"chain", "kernel", "stable", "check"})
        if (linear->get_subcommand(sub)->parsed()) return run_linear(sub, file, opt);
    }
    if (hverify->parsed()) return run_hilbert_verify(kmax, nmax, check, opt);
    if (s_an->parsed()) return run_subst_analyze(file, opt);
    if (s_fp->parsed()) return run_subst_fixpoint(file, seed_letter, opt);
    if (s_mem->parsed()) return run_subst_member(file, word, opt);
    if (s_sp->parsed()) return run_subst_stabprefix(file, word, opt);
    if (m_fin->parsed()) return run_monoid_finite(file, opt);
    if (m_epi->parsed()) return run_monoid_epi(directive, alphabet, opt);
    if (m_desub->parsed()) return run_monoid_desub(word, alphabet, opt);
    if (m_kol->parsed()) return run_monoid_kolakoski(opt);
    if (m_smooth->parsed()) return run_monoid_smooth(word, sigma, opt);
    if (fg_rank->parsed()) return run_freegroup_rankchain(file, n, opt);
    if (fg_mem->parsed()) return run_freegroup_member(file, word, opt);
    if (iv_atrac->parsed()) return run_interval_atrac(file, n, opt);
    if (iv_chain->parsed()) return run_interval_chain(file, x, opt);
    if (camp->parsed()) return run_campaign_cmd(scale, opt);
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerificationFailed;
  }
  std::cerr << "input error: no subcommand\n";
  return kExitInputError;
}
