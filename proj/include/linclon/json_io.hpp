#pragma once

#include <json.hpp>

#include "linclon/clonoid.hpp"
#include "linclon/ffield.hpp"
#include "linclon/funcspace.hpp"
#include "linclon/modlattice.hpp"

namespace linclon {

using nlohmann::json;

// Parsers throw Error(Malformed) on structural problems and let domain
// errors (NotPrime, Reducible, ...) propagate.

FieldSpec parse_field(const json& j);
/// Accepts {"factors":[...]}, a bare array of fields, or a single field object.
ProductRing parse_ring(const json& j);
/// Domain and codomain may be omitted when defaults are supplied; when
/// present they must match them.
FiniteFunction parse_function(const json& j, const ProductRing* K = nullptr, const ProductRing* F = nullptr);

json to_json(const FieldSpec& f);
json to_json(const ProductRing& r);
json to_json(const FiniteFunction& f);
json to_json(const SubspaceBasis& b);
json to_json(const ClonoidSlice& s);
json to_json(const GenerationVerdict& v);
json to_json(const SubmoduleLattice& l);
json to_json(const ProductLattice& l);
json to_json(const BigInt& n);

}  // namespace linclon
