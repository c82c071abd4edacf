#include "fpmod/ring.hpp"

#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace fpmod {

namespace {

mpz_class fdiv_r(const mpz_class& a, const mpz_class& m) {
  mpz_class r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

mpz_class mod_inverse(const mpz_class& a, const mpz_class& m) {
  mpz_class r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
    throw std::runtime_error("element not invertible modulo " + m.get_str());
  return r;
}

const mpz_class& as_int(const Element& e) {
  if (!std::holds_alternative<mpz_class>(e))
    throw std::runtime_error("element kind mismatch: expected integer representative");
  return std::get<mpz_class>(e);
}

const mpq_class& as_rat(const Element& e) {
  if (!std::holds_alternative<mpq_class>(e))
    throw std::runtime_error("element kind mismatch: expected rational");
  return std::get<mpq_class>(e);
}

const PolyVal& as_poly(const Element& e) {
  if (!std::holds_alternative<PolyVal>(e))
    throw std::runtime_error("element kind mismatch: expected polynomial");
  return std::get<PolyVal>(e);
}

}  // namespace

RingHandle make_integers() {
  auto r = std::make_shared<Ring>();
  r->backend = Backend::Integers;
  return r;
}

RingHandle make_rationals() {
  auto r = std::make_shared<Ring>();
  r->backend = Backend::Rationals;
  return r;
}

RingHandle make_prime_field(const mpz_class& p) {
  if (p <= 1 || mpz_probab_prime_p(p.get_mpz_t(), 30) == 0)
    throw std::runtime_error("prime field modulus must be prime, got " + p.get_str());
  auto r = std::make_shared<Ring>();
  r->backend = Backend::PrimeField;
  r->p = p;
  return r;
}

RingHandle make_poly(RingHandle coeff_field, std::vector<std::string> vars,
                     MonomialOrder order) {
  if (!coeff_field || (coeff_field->backend != Backend::Rationals &&
                       coeff_field->backend != Backend::PrimeField))
    throw std::runtime_error("polynomial coefficients must form a field backend");
  if (vars.empty()) throw std::runtime_error("polynomial ring needs at least one variable");
  for (size_t i = 0; i < vars.size(); ++i)
    for (size_t j = i + 1; j < vars.size(); ++j)
      if (vars[i] == vars[j]) throw std::runtime_error("duplicate variable name " + vars[i]);
  auto r = std::make_shared<Ring>();
  r->backend = Backend::Poly;
  r->coeff = std::move(coeff_field);
  r->vars = std::move(vars);
  r->order = order;
  return r;
}

RingHandle with_involution(RingHandle r,
                           std::function<Element(const Ring&, const Element&)> theta) {
  auto copy = std::make_shared<Ring>(*r);
  copy->theta = std::move(theta);
  return copy;
}

bool rings_equal(const Ring& a, const Ring& b) {
  if (&a == &b) return true;
  if (a.backend != b.backend) return false;
  switch (a.backend) {
    case Backend::Integers:
    case Backend::Rationals:
      return true;
    case Backend::PrimeField:
      return a.p == b.p;
    case Backend::Poly:
      return a.vars == b.vars && a.order == b.order && rings_equal(*a.coeff, *b.coeff);
    case Backend::Residue: {
      if (!rings_equal(*a.base, *b.base)) return false;
      if (a.ideal_basis.size() != b.ideal_basis.size()) return false;
      for (size_t i = 0; i < a.ideal_basis.size(); ++i)
        if (!elements_equal(a.ideal_basis[i], b.ideal_basis[i])) return false;
      return true;
    }
  }
  return false;
}

// ---------------------------------------------------------------------------
// coefficient field helpers (rationals or prime field, denominators kept at 1)

mpq_class coeff_normalize(const Ring& poly_ring, const mpq_class& c) {
  if (poly_ring.coeff->backend == Backend::Rationals) return c;
  const mpz_class& p = poly_ring.coeff->p;
  mpz_class num = fdiv_r(c.get_num(), p);
  if (c.get_den() != 1) {
    mpz_class den = fdiv_r(c.get_den(), p);
    num = fdiv_r(num * mod_inverse(den, p), p);
  }
  return mpq_class(num);
}

mpq_class coeff_inv(const Ring& poly_ring, const mpq_class& c) {
  if (c == 0) throw std::runtime_error("division by zero coefficient");
  if (poly_ring.coeff->backend == Backend::Rationals) return mpq_class(1) / c;
  return mpq_class(mod_inverse(c.get_num(), poly_ring.coeff->p));
}

// ---------------------------------------------------------------------------
// polynomial arithmetic

int monomial_cmp(const Ring& poly_ring, const std::vector<unsigned>& a,
                 const std::vector<unsigned>& b) {
  if (poly_ring.order == MonomialOrder::Lex) {
    for (size_t i = 0; i < a.size(); ++i)
      if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
    return 0;
  }
  unsigned long da = std::accumulate(a.begin(), a.end(), 0ul);
  unsigned long db = std::accumulate(b.begin(), b.end(), 0ul);
  if (da != db) return da > db ? 1 : -1;
  for (size_t i = a.size(); i-- > 0;)
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  return 0;
}

PolyVal poly_from_term(mpq_class c, std::vector<unsigned> exps) {
  PolyVal v;
  if (c != 0) v.terms.push_back({std::move(c), std::move(exps)});
  return v;
}

PolyVal poly_add(const Ring& r, const PolyVal& a, const PolyVal& b) {
  PolyVal out;
  out.terms.reserve(a.terms.size() + b.terms.size());
  size_t i = 0, j = 0;
  while (i < a.terms.size() && j < b.terms.size()) {
    int c = monomial_cmp(r, a.terms[i].exps, b.terms[j].exps);
    if (c > 0) {
      out.terms.push_back(a.terms[i++]);
    } else if (c < 0) {
      out.terms.push_back(b.terms[j++]);
    } else {
      mpq_class s = coeff_normalize(r, a.terms[i].coeff + b.terms[j].coeff);
      if (s != 0) out.terms.push_back({s, a.terms[i].exps});
      ++i, ++j;
    }
  }
  for (; i < a.terms.size(); ++i) out.terms.push_back(a.terms[i]);
  for (; j < b.terms.size(); ++j) out.terms.push_back(b.terms[j]);
  return out;
}

PolyVal poly_neg(const Ring& r, const PolyVal& a) {
  PolyVal out = a;
  for (auto& t : out.terms) t.coeff = coeff_normalize(r, -t.coeff);
  return out;
}

PolyVal poly_mul_term(const Ring& r, const PolyVal& a, const mpq_class& c,
                      const std::vector<unsigned>& mon) {
  PolyVal out;
  if (c == 0) return out;
  out.terms.reserve(a.terms.size());
  for (const auto& t : a.terms) {
    mpq_class nc = coeff_normalize(r, t.coeff * c);
    if (nc == 0) continue;
    std::vector<unsigned> e = t.exps;
    for (size_t k = 0; k < e.size(); ++k) e[k] += mon[k];
    out.terms.push_back({std::move(nc), std::move(e)});
  }
  return out;
}

PolyVal poly_mul(const Ring& r, const PolyVal& a, const PolyVal& b) {
  PolyVal out;
  for (const auto& t : a.terms) out = poly_add(r, out, poly_mul_term(r, b, t.coeff, t.exps));
  return out;
}

// ---------------------------------------------------------------------------
// generic element arithmetic

Element ring_zero(const Ring& r) {
  switch (r.backend) {
    case Backend::Integers:
    case Backend::PrimeField:
      return mpz_class(0);
    case Backend::Rationals:
      return mpq_class(0);
    case Backend::Poly:
      return PolyVal{};
    case Backend::Residue:
      return ring_zero(*r.base);
  }
  throw std::logic_error("unreachable");
}

Element ring_one(const Ring& r) { return ring_from_int(r, 1); }

Element ring_from_int(const Ring& r, long v) {
  switch (r.backend) {
    case Backend::Integers:
      return mpz_class(v);
    case Backend::PrimeField:
      return fdiv_r(mpz_class(v), r.p);
    case Backend::Rationals:
      return mpq_class(v);
    case Backend::Poly:
      return poly_from_term(coeff_normalize(r, mpq_class(v)),
                            std::vector<unsigned>(r.vars.size(), 0));
    case Backend::Residue:
      return r.reduce(ring_from_int(*r.base, v));
  }
  throw std::logic_error("unreachable");
}

Element add(const Ring& r, const Element& a, const Element& b) {
  switch (r.backend) {
    case Backend::Integers:
      return mpz_class(as_int(a) + as_int(b));
    case Backend::PrimeField:
      return fdiv_r(as_int(a) + as_int(b), r.p);
    case Backend::Rationals:
      return mpq_class(as_rat(a) + as_rat(b));
    case Backend::Poly:
      return poly_add(r, as_poly(a), as_poly(b));
    case Backend::Residue:
      return r.reduce(add(*r.base, a, b));
  }
  throw std::logic_error("unreachable");
}

Element sub(const Ring& r, const Element& a, const Element& b) { return add(r, a, neg(r, b)); }

Element mul(const Ring& r, const Element& a, const Element& b) {
  switch (r.backend) {
    case Backend::Integers:
      return mpz_class(as_int(a) * as_int(b));
    case Backend::PrimeField:
      return fdiv_r(as_int(a) * as_int(b), r.p);
    case Backend::Rationals:
      return mpq_class(as_rat(a) * as_rat(b));
    case Backend::Poly:
      return poly_mul(r, as_poly(a), as_poly(b));
    case Backend::Residue:
      return r.reduce(mul(*r.base, a, b));
  }
  throw std::logic_error("unreachable");
}

Element neg(const Ring& r, const Element& a) {
  switch (r.backend) {
    case Backend::Integers:
      return mpz_class(-as_int(a));
    case Backend::PrimeField:
      return fdiv_r(-as_int(a), r.p);
    case Backend::Rationals:
      return mpq_class(-as_rat(a));
    case Backend::Poly:
      return poly_neg(r, as_poly(a));
    case Backend::Residue:
      return r.reduce(neg(*r.base, a));
  }
  throw std::logic_error("unreachable");
}

bool is_zero(const Element& a) {
  if (const auto* z = std::get_if<mpz_class>(&a)) return *z == 0;
  if (const auto* q = std::get_if<mpq_class>(&a)) return *q == 0;
  return std::get<PolyVal>(a).terms.empty();
}

bool elements_equal(const Element& a, const Element& b) {
  if (a.index() != b.index()) return false;
  if (const auto* z = std::get_if<mpz_class>(&a)) return *z == std::get<mpz_class>(b);
  if (const auto* q = std::get_if<mpq_class>(&a)) return *q == std::get<mpq_class>(b);
  return std::get<PolyVal>(a) == std::get<PolyVal>(b);
}

Element apply_theta(const Ring& r, const Element& a) {
  if (r.theta) return r.theta(r, a);
  return a;
}

// ---------------------------------------------------------------------------
// parsing

namespace {

struct Cursor {
  const std::string& s;
  size_t pos = 0;
  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  [[noreturn]] void fail(const std::string& why) const {
    throw std::runtime_error("cannot parse element '" + s + "': " + why);
  }
};

mpz_class parse_unsigned_int(Cursor& c) {
  c.skip_ws();
  size_t start = c.pos;
  while (c.pos < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.pos]))) ++c.pos;
  if (c.pos == start) c.fail("expected digits");
  return mpz_class(c.s.substr(start, c.pos - start));
}

mpq_class parse_rational_number(Cursor& c) {
  mpz_class num = parse_unsigned_int(c);
  if (c.peek() == '/') {
    ++c.pos;
    mpz_class den = parse_unsigned_int(c);
    if (den == 0) c.fail("zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    return q;
  }
  return mpq_class(num);
}

std::string parse_identifier(Cursor& c) {
  c.skip_ws();
  size_t start = c.pos;
  if (c.pos < c.s.size() && (std::isalpha(static_cast<unsigned char>(c.s[c.pos])) || c.s[c.pos] == '_'))
    ++c.pos;
  else
    c.fail("expected variable name");
  while (c.pos < c.s.size() && (std::isalnum(static_cast<unsigned char>(c.s[c.pos])) || c.s[c.pos] == '_'))
    ++c.pos;
  return c.s.substr(start, c.pos - start);
}

PolyVal parse_poly(const Ring& r, const std::string& text) {
  Cursor c{text};
  PolyVal result;
  if (c.done()) c.fail("empty input");
  bool first = true;
  while (!c.done()) {
    int sign = 1;
    char ch = c.peek();
    if (ch == '+' || ch == '-') {
      sign = ch == '-' ? -1 : 1;
      ++c.pos;
    } else if (!first) {
      c.fail("expected '+' or '-' between terms");
    }
    first = false;

    mpq_class coeff(sign);
    std::vector<unsigned> exps(r.vars.size(), 0);
    bool any_factor = false;
    while (true) {
      char f = c.peek();
      if (std::isdigit(static_cast<unsigned char>(f))) {
        coeff *= parse_rational_number(c);
        any_factor = true;
      } else if (std::isalpha(static_cast<unsigned char>(f)) || f == '_') {
        std::string name = parse_identifier(c);
        size_t idx = 0;
        while (idx < r.vars.size() && r.vars[idx] != name) ++idx;
        if (idx == r.vars.size()) c.fail("unknown variable '" + name + "'");
        unsigned e = 1;
        if (c.peek() == '^') {
          ++c.pos;
          e = static_cast<unsigned>(parse_unsigned_int(c).get_ui());
        }
        exps[idx] += e;
        any_factor = true;
      } else {
        break;
      }
      if (c.peek() == '*') {
        ++c.pos;
        continue;
      }
      char n = c.peek();
      if (std::isalnum(static_cast<unsigned char>(n)) || n == '_') continue;
      break;
    }
    if (!any_factor) c.fail("empty term");
    result = poly_add(r, result, poly_from_term(coeff_normalize(r, coeff), std::move(exps)));
  }
  return result;
}

std::string print_poly(const Ring& r, const PolyVal& v) {
  if (v.terms.empty()) return "0";
  std::string out;
  for (size_t k = 0; k < v.terms.size(); ++k) {
    const PolyTerm& t = v.terms[k];
    mpq_class c = t.coeff;
    bool negative = c < 0;
    if (negative) c = -c;
    if (k == 0) {
      if (negative) out += '-';
    } else {
      out += negative ? '-' : '+';
    }
    std::string mono;
    for (size_t i = 0; i < t.exps.size(); ++i) {
      if (t.exps[i] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += r.vars[i];
      if (t.exps[i] >= 2) mono += '^' + std::to_string(t.exps[i]);
    }
    if (mono.empty()) {
      out += c.get_str();
    } else {
      if (c != 1) out += c.get_str() + "*";
      out += mono;
    }
  }
  return out;
}

mpz_class parse_signed_int(const Ring&, const std::string& text) {
  Cursor c{text};
  int sign = 1;
  char ch = c.peek();
  if (ch == '+' || ch == '-') {
    sign = ch == '-' ? -1 : 1;
    ++c.pos;
  }
  mpz_class v = parse_unsigned_int(c);
  if (!c.done()) c.fail("trailing characters");
  return sign * v;
}

}  // namespace

Element parse_element(const Ring& r, const std::string& text) {
  switch (r.backend) {
    case Backend::Integers:
      return parse_signed_int(r, text);
    case Backend::PrimeField:
      return fdiv_r(parse_signed_int(r, text), r.p);
    case Backend::Rationals: {
      Cursor c{text};
      int sign = 1;
      char ch = c.peek();
      if (ch == '+' || ch == '-') {
        sign = ch == '-' ? -1 : 1;
        ++c.pos;
      }
      mpq_class q = parse_rational_number(c);
      if (!c.done()) c.fail("trailing characters");
      return mpq_class(sign * q);
    }
    case Backend::Poly:
      return parse_poly(r, text);
    case Backend::Residue:
      return r.reduce(parse_element(*r.base, text));
  }
  throw std::logic_error("unreachable");
}

std::string print_element(const Ring& r, const Element& a) {
  switch (r.backend) {
    case Backend::Integers:
    case Backend::PrimeField:
      return std::get<mpz_class>(a).get_str();
    case Backend::Rationals:
      return std::get<mpq_class>(a).get_str();
    case Backend::Poly:
      return print_poly(r, std::get<PolyVal>(a));
    case Backend::Residue:
      return print_element(*r.base, a);
  }
  throw std::logic_error("unreachable");
}

}  // namespace fpmod
