#pragma once

#include <string>

#include "shiftarg/diagram.hpp"
#include "shiftarg/lie_algebra.hpp"
#include "shiftarg/pbw.hpp"
#include "shiftarg/poly.hpp"

namespace shiftarg {

/// {"context": [names...], "terms": [{"coeff": "num/den", "exps":
/// {"idx": e, ...}}, ...]} with terms in the canonical order; round trips
/// bit-exactly. Trailing "u"/"zinv" names are recognised as formal.
std::string poly_to_json(const CPoly& p);
CPoly poly_from_json(const std::string& text);

/// {"words": [{"idx": [i_1 <= ... <= i_k], "coeff": "num/den"}, ...]}.
std::string pbw_to_json(const PBWElement& e);

/// {"family": ..., "n": ..., "dim": ..., "rank": ..., "basis": [...]}.
std::string algebra_descriptor_json(const LieAlgebra& g);

/// {"matrix": [["num/den", ...], ...]} via the trace-form representative.
std::string functional_to_json(const LieAlgebra& g, const Functional& f);

std::string diagram_report_json(const DiagramReport& rep);

/// Builds gl_N / o_N / sp_2n from names like "gl3", "sp4", "o5".
AlgebraPtr algebra_from_name(const std::string& name);

/// Functional shorthand: "zero", "scalar:c", "diag:a,b,...",
/// "nilpotent:p1,p2,...", "rand" / "rand:lo,hi" (seeded element of the
/// algebra), "randreg" (resampled until regular), or an explicit
/// {"matrix": [[...]]} JSON object.
Functional parse_functional(const AlgebraPtr& g, const std::string& spec,
                            uint64_t seed);

}  // namespace shiftarg
