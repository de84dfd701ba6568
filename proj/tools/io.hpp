#pragma once

// JSON forms of subspaces and reports. Entries are strings "p" or "p/q"
// (q > 0, reduced) so nothing passes through floating point.

#include "crlab/borel_search.hpp"
#include "crlab/commrank.hpp"
#include "crlab/triangularize.hpp"
#include "crlab/verify.hpp"

#include <json.hpp>

#include <string>

namespace crlab::io {

using Json = nlohmann::ordered_json;

std::string entry_to_string(const Rational &q);
/// Strict: optional sign, digits, optional "/digits" with nonzero
/// denominator. Throws Error(Parse).
Rational parse_entry(const std::string &s);

Json matrix_to_json(const Mat &m);
Mat matrix_from_json(const Json &j, std::size_t rows, std::size_t cols);

/// Square spaces carry "ambient"; rectangular ones "rows" and "cols".
/// The basis is written in canonical order, so write(read(f)) is stable.
Json subspace_to_json(const MatrixSubspace &v);
MatrixSubspace subspace_from_json(const Json &j);

MatrixSubspace read_subspace(const std::string &path);
void write_json(const Json &j, const std::string &path); // "-" for stdout
std::string dump(const Json &j);

Json profile_to_json(const CommutatorProfile &p);
Json bound_report_to_json(const BoundReport &r);
Json rank_condition_to_json(const RankConditionResult &r);
Json flanders_to_json(const FlandersReport &r);
Json triangularization_to_json(const TriangularizationResult &r);
Json spec_to_json(const InvariantSpaceSpec &s);
Json search_to_json(const SearchReport &r);
Json structure_to_json(const StructureVerdict &v);
Json algebra_report_to_json(const AlgebraStructureReport &r);
Json error_to_json(const Error &e);

} // namespace crlab::io
