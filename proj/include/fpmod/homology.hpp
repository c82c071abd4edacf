#pragma once

#include "fpmod/functors_basic.hpp"
#include "fpmod/procedures.hpp"

namespace fpmod {

// Fiber product of phi and beta over their common target, with its two
// projections.
struct PullbackData {
  Presentation pres;
  Morphism to_first;   // pres -> phi.source
  Morphism to_second;  // pres -> beta.source
};
PullbackData pullback(const Morphism& phi, const Morphism& beta);

// mono injective, epi surjective, image of mono = kernel of epi, and the
// composite vanishes.
bool is_short_exact(const Morphism& mono, const Morphism& epi);

// Simultaneous free resolutions of the three modules of a short exact
// sequence. The middle tower splits level by level: include[i] and project[i]
// are the block inclusion/projection between the free covers, and they commute
// with the boundaries and (at level 0) with the augmentations.
struct ResolvedSes {
  Resolution left;
  Resolution middle;
  Resolution right;
  std::vector<Morphism> include;  // left cover -> middle cover, levels 0..length+1
  std::vector<Morphism> project;  // middle cover -> right cover
};
ResolvedSes resolve_short_exact_seq(const Morphism& mono, const Morphism& epi,
                                    int length);

// Homology at every position of a chain complex, ends capped by zero maps.
std::vector<Presentation> complex_homology(const Complex& c);

// True when the homology vanishes at each position that has a map on both sides.
bool complex_exact_interior(const Complex& c);

// Long exact sequence of a unary additive functor applied to a short exact
// sequence, through homological degree q_max. The terms are listed from the
// tail of the sequence: objects[3q] is H_q of the right module, objects[3q+1]
// H_q of the middle one, objects[3q+2] H_q of the left one, with the connecting
// maps in between. The covariant version computes left derived pieces, the
// contravariant one right derived pieces (listed from the top degree down).
Complex long_exact_homology_seq(const FunctorHandle& f, const Morphism& mono,
                                const Morphism& epi, int q_max);
Complex long_exact_cohomology_seq(const FunctorHandle& f, const Morphism& mono,
                                  const Morphism& epi, int q_max);

}  // namespace fpmod
