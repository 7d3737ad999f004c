#pragma once

#include <json.hpp>

#include <string>

#include "parred/root_datum.hpp"

namespace parred {

using Json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

// Integers are emitted as JSON numbers while they are exactly representable
// in a double (53 bits) and as decimal strings beyond that.
Json int_to_json(const Int& x);
Int json_to_int(const Json& j);

// Rationals are always exact strings, "p/q" or "p".
Json rat_to_json(const Rat& x);
Rat json_to_rat(const Json& j);

Json ivec_to_json(const IVec& v);
IVec json_to_ivec(const Json& j);
Json qvec_to_json(const QVec& v);

// Root-datum description files: {"preset": "A2"} or
// {"cartan": [[2,-1],[-1,2]], "torus_rank": 0, "isogeny": "sc"|"ad"}.
RootDatum root_datum_from_json(const Json& j);
RootDatum load_root_datum(const std::string& path);

// Inspection record for `rootdata inspect`.
Json root_datum_to_json(const RootDatum& rd);

Json load_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

} // namespace parred
