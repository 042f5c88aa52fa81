#pragma once

// Exact linear algebra used by the feasibility kernels and the oracle.

#include <optional>
#include <vector>

#include "glim/cyclotomic.hpp"

namespace glim::linalg {

using QMat = std::vector<std::vector<Rational>>;
using ZMat = std::vector<std::vector<Integer>>;

/// Row-reduces [A | b]; returns independent rows or nullopt if inconsistent.
std::optional<std::pair<QMat, std::vector<Rational>>> independent_system(const QMat& A, const std::vector<Rational>& b);

/// Integer solution v of v * M = t (M rows are generators), via HNF.
std::optional<std::vector<Integer>> integer_row_combination(const ZMat& M, const std::vector<Integer>& t);

/// A vertex of {w >= 0 : A w = b}, or nullopt if empty.  Bland's rule.
std::optional<std::vector<Rational>> lp_vertex(const QMat& A, const std::vector<Rational>& b);

}  // namespace glim::linalg
