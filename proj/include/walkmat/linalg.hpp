#pragma once

#include "walkmat/bigint.hpp"
#include "walkmat/graph.hpp"
#include "walkmat/matrix.hpp"

namespace walkmat {

using IntMatrix = Matrix<BigInt>;

/// Exact determinant by fraction-free (Bareiss) elimination. Pivots on the
/// first nonzero entry of each column; every division is exact.
BigInt det_bareiss(IntMatrix m);

/// W = [e, Ae, ..., A^{n-1}e], built column by column with matrix-vector
/// products.
IntMatrix walk_matrix(const IntMatrix& a);

IntMatrix adjacency_matrix(const Graph& g);
IntMatrix walk_matrix(const Graph& g);

inline BigInt adjacency_det(const Graph& g) { return det_bareiss(adjacency_matrix(g)); }
inline BigInt walk_det(const Graph& g) { return det_bareiss(walk_matrix(g)); }

}  // namespace walkmat
