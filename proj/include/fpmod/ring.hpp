#pragma once

#include <gmpxx.h>

#include <functional>
#include <memory>
#include <string>
#include <variant>
#include <vector>

namespace fpmod {

enum class Backend { Integers, Rationals, PrimeField, Poly, Residue };
enum class MonomialOrder { Degrevlex, Lex };

// One term of a polynomial: coefficient and exponent vector (one slot per variable).
// Coefficients over a prime field are kept with denominator 1 and numerator in [0, p).
struct PolyTerm {
  mpq_class coeff;
  std::vector<unsigned> exps;
  bool operator==(const PolyTerm& o) const { return coeff == o.coeff && exps == o.exps; }
};

// Terms sorted strictly descending in the owning ring's monomial order, no zero coefficients.
struct PolyVal {
  std::vector<PolyTerm> terms;
  bool operator==(const PolyVal& o) const { return terms == o.terms; }
};

using Element = std::variant<mpz_class, mpq_class, PolyVal>;

struct Ring;
using RingHandle = std::shared_ptr<const Ring>;

struct Ring {
  Backend backend = Backend::Integers;

  // PrimeField
  mpz_class p;

  // Poly
  RingHandle coeff;
  std::vector<std::string> vars;
  MonomialOrder order = MonomialOrder::Degrevlex;

  // Residue
  RingHandle base;
  std::vector<Element> ideal;        // generators as given
  std::vector<Element> ideal_basis;  // canonical basis of the ideal over the base
  std::function<Element(const Element&)> reduce;

  // Optional involution used by theta_transpose; identity when absent.
  std::function<Element(const Ring&, const Element&)> theta;
};

RingHandle make_integers();
RingHandle make_rationals();
RingHandle make_prime_field(const mpz_class& p);
RingHandle make_poly(RingHandle coeff_field, std::vector<std::string> vars,
                     MonomialOrder order = MonomialOrder::Degrevlex);
RingHandle with_involution(RingHandle r,
                           std::function<Element(const Ring&, const Element&)> theta);

bool rings_equal(const Ring& a, const Ring& b);

Element ring_zero(const Ring& r);
Element ring_one(const Ring& r);
Element ring_from_int(const Ring& r, long v);
Element add(const Ring& r, const Element& a, const Element& b);
Element sub(const Ring& r, const Element& a, const Element& b);
Element mul(const Ring& r, const Element& a, const Element& b);
Element neg(const Ring& r, const Element& a);
bool is_zero(const Element& a);
bool elements_equal(const Element& a, const Element& b);
Element apply_theta(const Ring& r, const Element& a);

// Text form: print then parse is the identity on every backend.
Element parse_element(const Ring& r, const std::string& text);
std::string print_element(const Ring& r, const Element& a);

// Polynomial internals shared with the Groebner machinery.
int monomial_cmp(const Ring& poly_ring, const std::vector<unsigned>& a,
                 const std::vector<unsigned>& b);
PolyVal poly_from_term(mpq_class c, std::vector<unsigned> exps);
PolyVal poly_add(const Ring& r, const PolyVal& a, const PolyVal& b);
PolyVal poly_neg(const Ring& r, const PolyVal& a);
PolyVal poly_mul(const Ring& r, const PolyVal& a, const PolyVal& b);
PolyVal poly_mul_term(const Ring& r, const PolyVal& a, const mpq_class& c,
                      const std::vector<unsigned>& mon);
mpq_class coeff_normalize(const Ring& poly_ring, const mpq_class& c);
mpq_class coeff_inv(const Ring& poly_ring, const mpq_class& c);

}  // namespace fpmod
