#include "stabset/json_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace stabset::io {

namespace {

void require(bool cond, const std::string& what) {
  if (!cond) throw std::invalid_argument(what);
}

}  // namespace

fgraph::FiniteSelfMap fmap_from_json(const Json& j) {
  require(j.contains("size") && j.contains("succ"), "functional graph needs size and succ");
  std::vector<int> succ = j.at("succ").get<std::vector<int>>();
  require(static_cast<int>(succ.size()) == j.at("size").get<int>(),
          "succ length must equal size");
  return fgraph::FiniteSelfMap::create(std::move(succ));
}

Json fmap_to_json(const fgraph::FiniteSelfMap& f) {
  return Json{{"size", f.size}, {"succ", f.succ}};
}

Json set_quad_to_json(const fgraph::SetQuad& q) {
  return Json{{"fix", q.fix}, {"orb", q.orb}, {"stab", q.stab}, {"atrac", q.atrac}};
}

staircase::Z2Point z2_from_json(const Json& j) {
  require(j.contains("n") && j.contains("m"), "point needs n and m");
  staircase::Z2Point p{j.at("n").get<long long>(), j.at("m").get<long long>()};
  staircase::require_valid(p);
  return p;
}

Json z2_to_json(staircase::Z2Point p) { return Json{{"n", p.n}, {"m", p.m}}; }

linalg::RationalMatrix matrix_from_json(const Json& j) {
  require(j.contains("n") && j.contains("entries"), "matrix needs n and entries");
  int n = j.at("n").get<int>();
  require(n >= 1, "dimension must be positive");
  linalg::RationalMatrix m(n, n);
  const Json& rows = j.at("entries");
  require(static_cast<int>(rows.size()) == n, "wrong row count");
  for (int r = 0; r < n; ++r) {
    require(static_cast<int>(rows[r].size()) == n, "wrong column count");
    for (int c = 0; c < n; ++c) m.at(r, c) = parse_rational(rows[r][c].get<std::string>());
  }
  return m;
}

Json matrix_to_json(const linalg::RationalMatrix& m) {
  Json rows = Json::array();
  for (int r = 0; r < m.rows; ++r) {
    Json row = Json::array();
    for (int c = 0; c < m.cols; ++c) row.push_back(rational_str(m.at(r, c)));
    rows.push_back(row);
  }
  return Json{{"n", m.rows}, {"entries", rows}};
}

Json basis_to_json(const linalg::SubspaceBasis& b) {
  Json vecs = Json::array();
  for (const auto& v : b.vecs) {
    Json row = Json::array();
    for (const auto& x : v) row.push_back(rational_str(x));
    vecs.push_back(row);
  }
  return Json{{"dimension", b.dim()}, {"basis", vecs}};
}

Json chain_report_to_json(const linalg::ChainReport& r) {
  return Json{{"ker_dims", r.ker_dims}, {"im_dims", r.im_dims}, {"stab_index", r.stab_index}};
}

monoid::MonoidSystem monoid_system_from_json(const Json& j) {
  require(j.contains("size") && j.contains("maps"), "system needs size and maps");
  std::vector<std::pair<std::string, std::vector<int>>> maps;
  for (const Json& m : j.at("maps")) {
    maps.emplace_back(m.at("name").get<std::string>(), m.at("succ").get<std::vector<int>>());
  }
  return monoid::MonoidSystem::create(j.at("size").get<int>(), std::move(maps));
}

freegrp::FreeEndo free_endo_from_json(const Json& j) {
  require(j.contains("rank") && j.contains("images"), "endomorphism needs rank and images");
  return freegrp::FreeEndo::parse(j.at("rank").get<int>(),
                                  j.at("images").get<std::vector<std::string>>());
}

Json free_endo_to_json(const freegrp::FreeEndo& e) {
  Json images = Json::array();
  for (const auto& w : e.images) images.push_back(freegrp::format_word(w));
  return Json{{"rank", e.rank}, {"images", images}};
}

interval::PWLMap pwl_from_json(const Json& j) {
  require(j.contains("breakpoints") && j.contains("pieces"), "map needs breakpoints and pieces");
  std::vector<Rational> breaks;
  for (const Json& b : j.at("breakpoints")) breaks.push_back(parse_rational(b.get<std::string>()));
  std::vector<std::pair<Rational, Rational>> pieces;
  for (const Json& p : j.at("pieces")) {
    pieces.emplace_back(parse_rational(p.at("p").get<std::string>()),
                        parse_rational(p.at("q").get<std::string>()));
  }
  std::vector<bool> attach;
  if (j.contains("attach")) {
    for (const Json& a : j.at("attach")) {
      std::string s = a.get<std::string>();
      require(s == "left" || s == "right", "attach entries must be left or right");
      attach.push_back(s == "left");
    }
  }
  return interval::PWLMap::create(std::move(breaks), std::move(pieces), std::move(attach));
}

Json pwl_to_json(const interval::PWLMap& f) {
  Json breaks = Json::array();
  for (const auto& b : f.breakpoints) breaks.push_back(rational_str(b));
  Json pieces = Json::array();
  for (const auto& [p, q] : f.pieces)
    pieces.push_back(Json{{"p", rational_str(p)}, {"q", rational_str(q)}});
  Json attach = Json::array();
  for (bool a : f.attach_left) attach.push_back(a ? "left" : "right");
  return Json{{"breakpoints", breaks}, {"pieces", pieces}, {"attach", attach}};
}

Json interval_union_to_json(const interval::IntervalUnion& u) {
  Json parts = Json::array();
  for (const auto& p : u.parts()) {
    parts.push_back(Json{{"lo", rational_str(p.lo)},
                         {"hi", rational_str(p.hi)},
                         {"lo_closed", p.lo_closed},
                         {"hi_closed", p.hi_closed}});
  }
  return parts;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Json load_json(const std::string& path) {
  try {
    return Json::parse(read_file(path));
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument("bad JSON in " + path + ": " + e.what());
  }
}

}  // namespace stabset::io
