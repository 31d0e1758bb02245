#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "coarsedim/cover.hpp"
#include "coarsedim/finfam.hpp"
#include "coarsedim/ordinal.hpp"
#include "coarsedim/partition.hpp"
#include "coarsedim/space.hpp"

namespace coarsedim {

using Json = nlohmann::ordered_json;

/// `0`, or an array of {"exp": ..., "coef": n} with strictly decreasing exponents.
/// Input also accepts a bare integer and a string in the `w^2+w*3+1` syntax.
Json ordinalToJson(const Ordinal& xi);
Ordinal ordinalFromJson(const Json& j);

/// {"members": [[1,3],[2]]}
Json familyToJson(const ExplicitFamily& family);
ExplicitFamily familyFromJson(const Json& j);

/// "2,3,4"
FinSet parseFinSet(std::string_view text);
TauLabel parseTau(std::string_view text);
/// "0:8,-4:4"
Box parseBox(std::string_view text);

/// One point per line: `label;x0;x1;...`, label comma-joined. Blank lines and `#` comments are skipped.
std::vector<LatticePoint> readPointsCsv(std::istream& in);
void writePointsCsv(std::ostream& out, std::span<const LatticePoint> points);

/// {"label": [2,3], "coords": [0,4]}
Json pointToJson(const LatticePoint& p);
LatticePoint pointFromJson(const Json& j);

/// {"radii": [...], "bound": B, "families": [[block, ...], ...]} with blocks as arrays of points.
Json coverToJson(const CoverSpec& spec);
CoverSpec coverFromJson(const Json& j);

/// {"dimension": n, "side": B, "step": g, "eps": e, "families": [[[[x,y],...],...],...]}
Json partitionToJson(const PartitionInstance& instance);
PartitionInstance partitionFromJson(const Json& j);

Json readJsonFile(const std::string& path);
std::string readTextFile(const std::string& path);

}  // namespace coarsedim
