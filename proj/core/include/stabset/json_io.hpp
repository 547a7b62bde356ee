#ifndef STABSET_JSON_IO_HPP
#define STABSET_JSON_IO_HPP

#include <string>

#include <json.hpp>

#include "stabset/fgraph.hpp"
#include "stabset/freegroup.hpp"
#include "stabset/interval.hpp"
#include "stabset/linalg.hpp"
#include "stabset/monoid_finite.hpp"
#include "stabset/staircase.hpp"
#include "stabset/substitution.hpp"

namespace stabset::io {

using Json = nlohmann::ordered_json;

// {"size": N, "succ": [...]}
fgraph::FiniteSelfMap fmap_from_json(const Json& j);
Json fmap_to_json(const fgraph::FiniteSelfMap& f);
Json set_quad_to_json(const fgraph::SetQuad& q);

// {"n": int, "m": int}
staircase::Z2Point z2_from_json(const Json& j);
Json z2_to_json(staircase::Z2Point p);

// {"n": d, "entries": [["p/q", ...], ...]}
linalg::RationalMatrix matrix_from_json(const Json& j);
Json matrix_to_json(const linalg::RationalMatrix& m);
Json basis_to_json(const linalg::SubspaceBasis& b);
Json chain_report_to_json(const linalg::ChainReport& r);

// {"size": N, "maps": [{"name": "...", "succ": [...]}, ...]}
monoid::MonoidSystem monoid_system_from_json(const Json& j);

// {"rank": m, "images": ["xY", ...]}
freegrp::FreeEndo free_endo_from_json(const Json& j);
Json free_endo_to_json(const freegrp::FreeEndo& e);

// {"breakpoints": [...], "pieces": [{"p": "...", "q": "..."}, ...],
//  "attach": ["left"|"right", ...] (optional)}
interval::PWLMap pwl_from_json(const Json& j);
Json pwl_to_json(const interval::PWLMap& f);
Json interval_union_to_json(const interval::IntervalUnion& u);

std::string read_file(const std::string& path);
Json load_json(const std::string& path);

}  // namespace stabset::io

#endif
