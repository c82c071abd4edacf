#include "fpmod/simplicial.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace fpmod {

SimplicialComplex simplicial_from_facets(const std::vector<std::vector<int>>& facets) {
  std::vector<std::set<std::vector<int>>> by_dim;
  for (const auto& facet : facets) {
    std::vector<int> v = facet;
    std::sort(v.begin(), v.end());
    if (std::adjacent_find(v.begin(), v.end()) != v.end())
      throw std::runtime_error("facet with a repeated vertex");
    if (v.empty()) throw std::runtime_error("empty facet");
    int subsets = 1 << v.size();
    for (int mask = 1; mask < subsets; ++mask) {
      std::vector<int> face;
      for (size_t j = 0; j < v.size(); ++j)
        if (mask & (1 << j)) face.push_back(v[j]);
      int dim = static_cast<int>(face.size()) - 1;
      if (dim >= static_cast<int>(by_dim.size())) by_dim.resize(dim + 1);
      by_dim[dim].insert(std::move(face));
    }
  }
  SimplicialComplex sc;
  for (const auto& level : by_dim)
    sc.simplices.emplace_back(level.begin(), level.end());
  return sc;
}

int simplex_count(const SimplicialComplex& sc, int dim) {
  if (dim < 0 || dim >= static_cast<int>(sc.simplices.size())) return 0;
  return static_cast<int>(sc.simplices[dim].size());
}

long euler_characteristic(const SimplicialComplex& sc) {
  long chi = 0;
  for (size_t d = 0; d < sc.simplices.size(); ++d) {
    long n = static_cast<long>(sc.simplices[d].size());
    chi += (d % 2 == 0) ? n : -n;
  }
  return chi;
}

Mat boundary_matrix(const SimplicialComplex& sc, int i, const RingHandle& ring) {
  int rows = simplex_count(sc, i);
  int cols = i == 0 ? 0 : simplex_count(sc, i - 1);
  Mat m = Mat::zeros(ring, rows, cols);
  if (i == 0 || rows == 0) return m;

  std::map<std::vector<int>, int> face_index;
  for (int c = 0; c < cols; ++c) face_index[sc.simplices[i - 1][c]] = c;

  for (int r = 0; r < rows; ++r) {
    const std::vector<int>& s = sc.simplices[i][r];
    for (size_t j = 0; j < s.size(); ++j) {
      std::vector<int> face = s;
      face.erase(face.begin() + j);
      auto it = face_index.find(face);
      if (it == face_index.end())
        throw std::runtime_error("complex is not downward closed");
      m.at(r, it->second) = ring_from_int(*ring, j % 2 == 0 ? 1 : -1);
    }
  }
  return m;
}

Complex chain_complex(const SimplicialComplex& sc, const RingHandle& ring) {
  std::vector<Presentation> objects;
  std::vector<Morphism> maps;
  int top = static_cast<int>(sc.simplices.size()) - 1;
  for (int d = 0; d <= top; ++d)
    objects.push_back(free_presentation(ring, simplex_count(sc, d)));
  for (int d = 1; d <= top; ++d)
    maps.push_back(make_morphism(objects[d], objects[d - 1],
                                 boundary_matrix(sc, d, ring)));
  return make_complex(std::move(objects), std::move(maps), 0);
}

Presentation simplicial_homology(const SimplicialComplex& sc, int degree,
                                 const RingHandle& ring) {
  if (degree < 0) throw std::runtime_error("homology degree must be nonnegative");
  Presentation cq = free_presentation(ring, simplex_count(sc, degree));
  Presentation above = free_presentation(ring, simplex_count(sc, degree + 1));
  Presentation below = free_presentation(ring, simplex_count(sc, degree - 1));
  Morphism in = make_morphism(above, cq, boundary_matrix(sc, degree + 1, ring));
  Morphism out = make_morphism(cq, below, boundary_matrix(sc, degree, ring));
  return defect_of(in, out);
}

Presentation simplicial_cohomology(const SimplicialComplex& sc, int degree,
                                   const RingHandle& ring) {
  if (degree < 0) throw std::runtime_error("cohomology degree must be nonnegative");
  int n = static_cast<int>(sc.simplices.size());
  if (n == 0 || degree >= n) return zero_presentation(ring);
  Complex dual = functor_on_complex(hom_r_functor(), chain_complex(sc, ring));
  return complex_homology(dual)[n - 1 - degree];
}

}  // namespace fpmod
