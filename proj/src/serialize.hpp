#pragma once

#include "correspondence.hpp"

#include <json.hpp>

namespace tcsd {

using Json = nlohmann::json;

/**
 * Document formats. Complex numbers are [re, im] pairs, matrices are
 * row-major arrays of rows, algebra elements are arrays of blocks.
 *
 * System document:
 *   { "algebra": {"blocks": [n1,...]},
 *     "group":   {"labels": [...], "table": [[...],...]},
 *     "alpha":   {"<label>": {"perm": [...], "unitary": <element>}, ...},
 *     "sigma":   [[<element>,...],...] }          // row g, column h
 *
 * Coefficient document: { "system": <system>, "maps": [<matrix>, ...] }
 * Representation document:
 *   { "system": <system>,
 *     "module": {"dim": m, "right_action": [<matrix>...],
 *                 "inner_product": [[<element>...]...]},
 *     "rho": [<matrix>...], "v": [<matrix>...] }
 */

Json complex_to_json(Cplx z);
Cplx complex_from_json(const Json& j);
Json mat_to_json(const Mat& m);
Mat mat_from_json(const Json& j);
Mat mat_from_json(const Json& j, int rows, int cols);

Json element_to_json(const AlgebraElement& a);
AlgebraElement element_from_json(const AlgebraPtr& algebra, const Json& j);

Json system_to_json(const TwistedSystem& system);
SystemPtr system_from_json(const Json& j, double tol);

/// Map from group-element label to the coefficient at that element.
Json crossed_element_to_json(const CrossedElement& f);
CrossedElement crossed_element_from_json(const SystemPtr& system, const Json& j);

Json coeff_to_json(const CoeffMap& t);
CoeffMap coeff_from_json(const Json& j, double tol);

/// Representation documents may carry a list of distinguished carrier vectors
/// (e.g. the cyclic vector of a reconstruction) under "vectors".
struct RepDocument {
    EquivariantRep rep;
    std::vector<Vec> vectors;
};
Json rep_to_json(const EquivariantRep& rep, const std::vector<Vec>& vectors = {});
RepDocument rep_from_json(const Json& j, double tol);

Json crossed_export_json(const RegularRep& reg, const CrossedSummary& summary);

Json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const Json& j);

}  // namespace tcsd
