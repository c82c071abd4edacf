#pragma once

#include "fpmod/functor.hpp"

namespace fpmod {

// The basic catalogue. Every constructor returns an immutable descriptor; the
// engine owns application and cleaning.
FunctorHandle identity_functor();
FunctorHandle cokernel_functor();   // Arrow slot
FunctorHandle kernel_functor();     // Arrow slot
FunctorHandle defect_functor();     // ArrowPair slot, zero composite required
FunctorHandle hom_r_functor();      // Object slot, contravariant: M -> Hom(M, R)
FunctorHandle tensor_functor();     // two Object slots, covariant
FunctorHandle hom_functor();        // Object slots: contravariant, covariant

// Standard derived and composed instances.
FunctorHandle ext_functor(int q);         // right derived hom in slot 0
FunctorHandle ext_functor_cheap(int q);   // left-exact shortcut for objects
FunctorHandle tor_functor(int q);         // left derived tensor in slot 0
FunctorHandle tor_functor_cheap(int q);   // right-exact shortcut for objects
FunctorHandle hom_hom_functor();          // Hom(Hom(-,L1),L2), arity 3
FunctorHandle l_hom_hom_functor();        // first left derivation of the above
FunctorHandle ext_ext_functor(int j, int k);

// Plain-result shortcuts used across the library.
Presentation cokernel_of(const Morphism& alpha);
Presentation kernel_of(const Morphism& alpha);
Presentation defect_of(const Morphism& first, const Morphism& second);

// Kernel presentation together with its embedding into alpha's source.
struct KernelData {
  Presentation pres;    // cleaned
  Morphism embedding;   // pres -> alpha.source
};
KernelData kernel_with_embedding(const Morphism& alpha);

}  // namespace fpmod
