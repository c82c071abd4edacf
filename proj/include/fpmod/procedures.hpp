#pragma once

#include "fpmod/presentation.hpp"

namespace fpmod {

// Solve b = x*a modulo the rows of l. Unsolvable inputs yield nullopt, not a fault.
std::optional<Mat> right_divide(const Mat& b, const Mat& a, const std::optional<Mat>& l);

// Same, also returning y with b = x*a + y*l holding exactly.
struct DivideWitness {
  Mat x;
  Mat y;
};
std::optional<DivideWitness> right_divide_with_witness(const Mat& b, const Mat& a,
                                                       const std::optional<Mat>& l);

// Fill in the dashed arrow of a commuting square: psi with alpha*phi = psi*beta.
// Existence is the caller's responsibility (source free, or beta injective).
std::optional<Morphism> complete_im_sq(const Morphism& alpha, const Morphism& phi,
                                       const Morphism& beta);

// psi with psi*beta the identity morphism of beta's target.
std::optional<Morphism> leftinverse(const Morphism& beta);

// Rows mapping onto b under alpha, expressed in alpha's source generators.
std::optional<Mat> preimage(const Mat& b, const Morphism& alpha);

// A free resolution: maps[0] is the (unit-free) relation matrix of `reduced`,
// maps[i] the i+1-st boundary. map(i) is 1-based and pads with empty matrices
// past the point where syzygies vanish.
struct Resolution {
  Presentation module;
  Presentation reduced;
  BaseChange change;
  std::vector<Mat> maps;

  int rank(int i) const;
  Mat map(int i) const;
  Presentation free_module(int i) const;
  Morphism boundary(int i) const;
  Morphism augmentation() const;
};
Resolution resolution_of_module(const Presentation& p, int length);

// Presentation of the submodule generated by m1 inside the module presented by m2,
// with the embedding rows and the m1-row -> generator map (-1 for dropped rows).
struct Subfactor {
  Presentation pres;
  Mat embedding;
  std::vector<int> row_to_gen;
};
Subfactor subfactor_module(const Mat& m1, const Mat& m2);

}  // namespace fpmod
