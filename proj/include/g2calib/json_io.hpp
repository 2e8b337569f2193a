#pragma once

#include "g2calib/boundary.hpp"
#include "g2calib/bundle.hpp"
#include "g2calib/plane.hpp"
#include "g2calib/symbol.hpp"
#include "g2calib/torus.hpp"
#include "g2calib/vec7.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace g2calib {

using Json = nlohmann::json;

// Parsers throw ParseError naming the offending field.  Rationals travel
// as decimal-free strings ("-1/2"), coordinates as 1-based indices.

Vec7 parse_vec7(const Json& j, const std::string& field);

/// {"dim": 3|4, "vectors": [[7 floats], ...]}; vectors are orthonormalized.
OrientedPlane parse_plane(const Json& j);
Json plane_to_json(const OrientedPlane& p);

/// {"u": [...], "v": [...], "w": [...], "F": plane, "NX": optional [2 vectors]}
struct BoundaryInput {
    BoundaryConfig cfg;
    std::optional<std::array<Vec7, 2>> NX;
};
BoundaryInput parse_boundary_config(const Json& j);

/// [{"genus": g, "c1": n}, ...]
std::vector<BoundaryComponent> parse_components(const Json& j);

/// {"vertices": [ids], "triangles": [[i,j,k], ...], "lines": [[[re,im] x N], ...]}
SampledLineBundle parse_bundle(const Json& j);
Json bundle_to_json(const SampledLineBundle& b);

/// {"signs": [+-1 x 7], "shift": ["0","1/2",... x 7]}
AffineTorusMap parse_torus_map(const Json& j);
Json torus_map_to_json(const AffineTorusMap& m);

/// {"free": [1-based coords], "fixed": {"4": "0", ...}}
CoordSubtorus parse_subtorus(const Json& j);
Json subtorus_to_json(const CoordSubtorus& t);

Json orbit_census_to_json(const OrbitCensus& census);

/// Uniform command report; serialization round-trips losslessly.
struct RunCheck {
    std::string name;
    bool pass = false;
    Json value;
};

struct RunReport {
    std::string command;
    Json inputs;
    Json outputs;
    std::vector<RunCheck> checks;

    bool all_pass() const;
    Json to_json() const;
    static RunReport from_json(const Json& j);
};

} // namespace g2calib
