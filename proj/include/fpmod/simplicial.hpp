#pragma once

#include "fpmod/homology.hpp"

namespace fpmod {

// Finite abstract simplicial complex on integer vertices, stored as the
// downward closure of its facets, one sorted list per dimension.
struct SimplicialComplex {
  std::vector<std::vector<std::vector<int>>> simplices;
};

SimplicialComplex simplicial_from_facets(const std::vector<std::vector<int>>& facets);

int simplex_count(const SimplicialComplex& sc, int dim);
long euler_characteristic(const SimplicialComplex& sc);

// Matrix of the i-th boundary map, rows indexed by i-simplices, columns by
// their faces. The 0-th boundary has no columns.
Mat boundary_matrix(const SimplicialComplex& sc, int i, const RingHandle& ring);

// The whole chain complex of free modules, degree 0 at the low end.
Complex chain_complex(const SimplicialComplex& sc, const RingHandle& ring);

Presentation simplicial_homology(const SimplicialComplex& sc, int degree,
                                 const RingHandle& ring);
Presentation simplicial_cohomology(const SimplicialComplex& sc, int degree,
                                   const RingHandle& ring);

}  // namespace fpmod
