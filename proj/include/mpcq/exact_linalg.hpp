#pragma once

// Small dense linear algebra over Q, used for polyhedral conversions.

#include <optional>
#include <vector>

#include "mpcq/lattice.hpp"

namespace mpcq::linalg {

/// Rank of the matrix whose rows are given. Rows must share one length.
std::size_t rank(std::vector<RatCovector> rows);

/// Unique solution of A x = b for square A given by rows; nullopt if singular.
std::optional<RatCovector> solve(std::vector<RatCovector> rows, RatCovector rhs);

/// Basis of { d in Q^dim : <row, d> = 0 for every row }.
std::vector<RatCovector> null_space(std::vector<RatCovector> rows, std::size_t dim);

Rational dot(const RatCovector& a, const RatCovector& b);

/// Scales a nonzero rational vector to the primitive integer vector on the
/// same ray. Used to deduplicate halfspace normals.
RatCovector primitive(const RatCovector& v);

}  // namespace mpcq::linalg
