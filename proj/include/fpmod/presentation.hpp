#pragma once

#include "fpmod/backends.hpp"

namespace fpmod {

// A finitely presented module: gens columns, one relation per row of relations.
struct Presentation {
  RingHandle ring;
  int gens = 0;
  Mat relations;  // rows x gens
};

Presentation make_presentation(RingHandle r, int gens, Mat relations);
Presentation free_presentation(RingHandle r, int gens);
Presentation zero_presentation(RingHandle r);
bool presentations_equal(const Presentation& a, const Presentation& b);
bool is_zero_module(const Presentation& p);

// Elements are rows, so a morphism is a source.gens x target.gens matrix acting on
// the right; "first then second" composes as first.matrix * second.matrix.
struct Morphism {
  Presentation source;
  Presentation target;
  Mat matrix;
};

enum class MorphValidity { Valid, ShapeMismatch, NotInduced };
Morphism make_morphism(Presentation source, Presentation target, Mat matrix);
MorphValidity morphism_validity(const Morphism& phi);
Morphism identity_morphism(const Presentation& p);
Morphism zero_morphism(Presentation source, Presentation target);
Morphism compose(const Morphism& first, const Morphism& second);
bool morphisms_equal(const Morphism& a, const Morphism& b);
bool is_zero_morphism(const Morphism& phi);

// Mutually inverse generator changes between two presentations of one module.
struct BaseChange {
  Mat old_to_new;
  Mat new_to_old;
};
BaseChange identity_change(const Presentation& p);
BaseChange compose_changes(const BaseChange& first, const BaseChange& second);

std::pair<Presentation, BaseChange> eliminate_units(const Presentation& p);
std::pair<Presentation, BaseChange> better_generators(const Presentation& p);

// Invariant factors (units excluded, each dividing the next) plus free rank.
struct Decomposition {
  std::vector<mpz_class> factors;
  int rank = 0;
  bool operator==(const Decomposition& o) const = default;
};
Decomposition canonical_decomposition(const Presentation& p);
std::string decomposition_to_string(const Decomposition& d);

}  // namespace fpmod
