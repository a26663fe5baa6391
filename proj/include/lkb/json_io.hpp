#pragma once

#include <json.hpp>

#include "lkb/detect.hpp"
#include "lkb/homology.hpp"
#include "lkb/krammer.hpp"
#include "lkb/laurent.hpp"
#include "lkb/pairing.hpp"
#include "lkb/poly_matrix.hpp"

namespace lkb {

using Json = nlohmann::ordered_json;

/// [[a, b, coeff], ...] in canonical term order; coeff is a string when it
/// does not fit in 64 bits.
Json to_json(const LaurentPoly& p);
LaurentPoly laurent_from_json(const Json& j);

/// Array of rows.
Json to_json(const PolyMatrix& m);
PolyMatrix matrix_from_json(const Json& j);

/// Array of block rows, each an array of matrices.
Json to_json(const BlockMatrix& m);

Json to_json(const GroupRingElement& r);
Json to_json(const HomologyClassX& v);
Json to_json(const HomologyClassY& v);
Json to_json(const PairingValue& p);

/// {found, kind, witness_words, witness_braids, rewritten_braid, depth_searched}.
Json to_json(const DetectionResult& r);

}  // namespace lkb
