#include "fpmod/pipeline.hpp"

#include <cctype>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fpmod {

namespace {

// Malformed document node; the pointer names the offending spot.
struct SchemaError : std::runtime_error {
  std::string pointer;
  SchemaError(std::string ptr, const std::string& msg)
      : std::runtime_error(msg), pointer(std::move(ptr)) {}
};

mpz_class mpz_from_json(const Json& v, const std::string& ptr) {
  if (v.is_number_integer()) return mpz_class(v.get<long>());
  if (v.is_string()) {
    try {
      return mpz_class(v.get<std::string>());
    } catch (const std::invalid_argument&) {
      throw SchemaError(ptr, "not a decimal integer: '" + v.get<std::string>() + "'");
    }
  }
  throw SchemaError(ptr, "expected an integer or a decimal string");
}

Element element_from_json(const RingHandle& r, const Json& v, const std::string& ptr) {
  if (v.is_number_integer()) return ring_from_int(*r, v.get<long>());
  if (v.is_string()) return parse_element(*r, v.get<std::string>());
  throw SchemaError(ptr, "expected a ring element literal (string or integer)");
}

RingHandle ring_at(const Json& spec, const std::string& ptr) {
  if (!spec.is_object()) throw SchemaError(ptr, "ring spec must be an object");
  if (!spec.contains("type") || !spec["type"].is_string())
    throw SchemaError(ptr + "/type", "ring spec needs a \"type\" string");
  const std::string type = spec["type"].get<std::string>();
  if (type == "integers") return make_integers();
  if (type == "rationals") return make_rationals();
  if (type == "primefield") {
    if (!spec.contains("p")) throw SchemaError(ptr + "/p", "prime field needs \"p\"");
    return make_prime_field(mpz_from_json(spec["p"], ptr + "/p"));
  }
  if (type == "poly") {
    if (!spec.contains("coeff")) throw SchemaError(ptr + "/coeff", "poly ring needs a coefficient field");
    RingHandle coeff = ring_at(spec["coeff"], ptr + "/coeff");
    if (!spec.contains("vars") || !spec["vars"].is_array() || spec["vars"].empty())
      throw SchemaError(ptr + "/vars", "poly ring needs a nonempty \"vars\" array");
    std::vector<std::string> vars;
    for (size_t i = 0; i < spec["vars"].size(); ++i) {
      const Json& v = spec["vars"][i];
      if (!v.is_string())
        throw SchemaError(ptr + "/vars/" + std::to_string(i), "variable names are strings");
      vars.push_back(v.get<std::string>());
    }
    MonomialOrder order = MonomialOrder::Degrevlex;
    if (spec.contains("order")) {
      const std::string o = spec["order"].is_string() ? spec["order"].get<std::string>() : "";
      if (o == "lex")
        order = MonomialOrder::Lex;
      else if (o != "degrevlex")
        throw SchemaError(ptr + "/order", "order is \"degrevlex\" or \"lex\"");
    }
    return make_poly(std::move(coeff), std::move(vars), order);
  }
  if (type == "residue") {
    if (!spec.contains("base")) throw SchemaError(ptr + "/base", "residue ring needs a base");
    RingHandle base = ring_at(spec["base"], ptr + "/base");
    if (!spec.contains("ideal") || !spec["ideal"].is_array() || spec["ideal"].empty())
      throw SchemaError(ptr + "/ideal", "residue ring needs a nonempty \"ideal\" array");
    std::vector<Element> gens;
    for (size_t i = 0; i < spec["ideal"].size(); ++i)
      gens.push_back(element_from_json(base, spec["ideal"][i], ptr + "/ideal/" + std::to_string(i)));
    return residue_class_ring(std::move(base), gens);
  }
  throw SchemaError(ptr + "/type", "unknown ring type '" + type + "'");
}

Mat mat_at(const RingHandle& r, const Json& rows, int cols_hint, const std::string& ptr) {
  if (!rows.is_array()) throw SchemaError(ptr, "matrix must be an array of rows");
  if (rows.empty()) return Mat::zeros(r, 0, cols_hint < 0 ? 0 : cols_hint);
  if (!rows[0].is_array()) throw SchemaError(ptr + "/0", "matrix rows are arrays");
  const int cols = static_cast<int>(rows[0].size());
  Mat m = Mat::zeros(r, static_cast<int>(rows.size()), cols);
  for (size_t i = 0; i < rows.size(); ++i) {
    const Json& row = rows[i];
    const std::string rptr = ptr + "/" + std::to_string(i);
    if (!row.is_array() || static_cast<int>(row.size()) != cols)
      throw SchemaError(rptr, "matrix rows must all have the same length");
    for (size_t j = 0; j < row.size(); ++j)
      m.at(static_cast<int>(i), static_cast<int>(j)) =
          element_from_json(r, row[j], rptr + "/" + std::to_string(j));
  }
  if (cols_hint >= 0 && cols != cols_hint)
    throw SchemaError(ptr, "matrix has " + std::to_string(cols) + " columns, expected " +
                               std::to_string(cols_hint));
  return m;
}

struct ExprParser {
  const std::string& s;
  size_t pos = 0;

  [[noreturn]] void fail(const std::string& what) const {
    throw std::runtime_error("functor expression: " + what + " at offset " + std::to_string(pos));
  }
  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }
  std::string ident() {
    skip_ws();
    size_t begin = pos;
    while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
      ++pos;
    if (begin == pos) fail("expected a functor name");
    return s.substr(begin, pos - begin);
  }
  int integer() {
    skip_ws();
    size_t begin = pos;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (begin == pos || (s[pos - 1] == '-' || s[pos - 1] == '+')) fail("expected an integer");
    return std::stoi(s.substr(begin, pos - begin));
  }
  FunctorHandle expr() {
    const std::string name = ident();
    if (name == "Cokernel") return cokernel_functor();
    if (name == "Kernel") return kernel_functor();
    if (name == "DefectOfHoms") return defect_functor();
    if (name == "HomR") return hom_r_functor();
    if (name == "Hom") return hom_functor();
    if (name == "Tensor") return tensor_functor();
    if (name == "LDerived" || name == "RDerived") {
      expect('(');
      const int q = integer();
      expect(',');
      FunctorHandle base = expr();
      expect(')');
      return name == "LDerived" ? left_derived(std::move(base), 0, q)
                                : right_derived_cofunctor(std::move(base), 0, q);
    }
    if (name == "Compose") {
      expect('(');
      FunctorHandle outer = expr();
      expect(',');
      const int slot = integer();
      expect(',');
      FunctorHandle inner = expr();
      expect(')');
      return compose_functors(std::move(outer), slot, std::move(inner));
    }
    if (name == "Ext" || name == "Tor") {
      expect('(');
      const int q = integer();
      expect(')');
      return name == "Ext" ? ext_functor(q) : tor_functor(q);
    }
    fail("unknown functor '" + name + "'");
  }
};

// One named value in a running pipeline.
struct Value {
  enum class Kind { Module, Map, Matrix, Flag, Decomp, Chain, Les, Record, Unsolvable };
  Kind kind = Kind::Record;
  Presentation module;
  Morphism map;
  Mat matrix;
  bool flag = false;
  Decomposition decomp;
  Complex chain;
  bool les_cohomology = false;
  Json record;
};

Value val_module(Presentation p) {
  Value v;
  v.kind = Value::Kind::Module;
  v.module = std::move(p);
  return v;
}
Value val_map(Morphism m) {
  Value v;
  v.kind = Value::Kind::Map;
  v.map = std::move(m);
  return v;
}
Value val_matrix(Mat m) {
  Value v;
  v.kind = Value::Kind::Matrix;
  v.matrix = std::move(m);
  return v;
}
Value val_flag(bool b) {
  Value v;
  v.kind = Value::Kind::Flag;
  v.flag = b;
  return v;
}
Value val_decomp(Decomposition d) {
  Value v;
  v.kind = Value::Kind::Decomp;
  v.decomp = std::move(d);
  return v;
}
Value val_chain(Complex c) {
  Value v;
  v.kind = Value::Kind::Chain;
  v.chain = std::move(c);
  return v;
}
Value val_record(Json j) {
  Value v;
  v.kind = Value::Kind::Record;
  v.record = std::move(j);
  return v;
}
Value val_unsolvable() {
  Value v;
  v.kind = Value::Kind::Unsolvable;
  return v;
}

Json chain_to_json(const Complex& c) {
  Json objs = Json::array();
  for (const Presentation& p : c.objects) objs.push_back(presentation_to_json(p));
  Json maps = Json::array();
  for (const Morphism& m : c.maps) maps.push_back(mat_to_json(m.matrix));
  return Json{{"low", c.low}, {"objects", objs}, {"maps", maps}};
}

// The sequence read from its head; each entry carries the map leaving its
// module toward the tail, the last map is null.
Json les_to_json(const Complex& c) {
  Json entries = Json::array();
  const int n = static_cast<int>(c.objects.size());
  for (int k = n - 1; k >= 0; --k) {
    Json e;
    e["module"] = presentation_to_json(c.objects[k]);
    if (k > 0) {
      e["map"] = mat_to_json(c.maps[k - 1].matrix);
      e["is_connecting"] = (k - 1) % 3 == 2;
    } else {
      e["map"] = nullptr;
      e["is_connecting"] = false;
    }
    entries.push_back(std::move(e));
  }
  return entries;
}

Json value_to_json(const Value& v) {
  switch (v.kind) {
    case Value::Kind::Module: return presentation_to_json(v.module);
    case Value::Kind::Map: return morphism_to_json(v.map);
    case Value::Kind::Matrix: return mat_to_json(v.matrix);
    case Value::Kind::Flag: return Json(v.flag);
    case Value::Kind::Decomp: return decomposition_to_json(v.decomp);
    case Value::Kind::Chain: return chain_to_json(v.chain);
    case Value::Kind::Les: return les_to_json(v.chain);
    case Value::Kind::Record: return v.record;
    case Value::Kind::Unsolvable: break;
  }
  return Json{{"unsolvable", true}};
}

Json resolution_to_json(const Resolution& res) {
  Json ranks = Json::array();
  for (int i = 0; i <= static_cast<int>(res.maps.size()); ++i) ranks.push_back(res.rank(i));
  Json maps = Json::array();
  for (const Mat& m : res.maps) maps.push_back(mat_to_json(m));
  return Json{{"ranks", ranks}, {"maps", maps}};
}

std::vector<std::vector<int>> facets_at(const Json& j, const std::string& ptr) {
  if (!j.is_array()) throw SchemaError(ptr, "facets must be an array of vertex lists");
  std::vector<std::vector<int>> out;
  for (size_t i = 0; i < j.size(); ++i) {
    const Json& f = j[i];
    const std::string fptr = ptr + "/" + std::to_string(i);
    if (!f.is_array() || f.empty()) throw SchemaError(fptr, "facets are nonempty vertex lists");
    std::vector<int> verts;
    for (size_t k = 0; k < f.size(); ++k) {
      if (!f[k].is_number_integer() || f[k].get<long>() < 0)
        throw SchemaError(fptr + "/" + std::to_string(k), "vertices are nonnegative integers");
      verts.push_back(f[k].get<int>());
    }
    out.push_back(std::move(verts));
  }
  return out;
}

// Step execution context: resolves argument names against the environment and
// reads the step's option fields.
struct Exec {
  const RingHandle& ring;
  std::map<std::string, Value>& env;
  const Json& step;
  std::string ptr;
  std::vector<std::string> args;

  Exec(const RingHandle& r, std::map<std::string, Value>& e, const Json& st, std::string p)
      : ring(r), env(e), step(st), ptr(std::move(p)) {
    if (!step.contains("args")) return;
    const Json& a = step["args"];
    if (!a.is_array()) throw SchemaError(ptr + "/args", "args must be an array of names");
    for (size_t i = 0; i < a.size(); ++i) {
      if (!a[i].is_string())
        throw SchemaError(ptr + "/args/" + std::to_string(i), "arguments are names");
      args.push_back(a[i].get<std::string>());
    }
  }

  void expect_args(size_t lo, size_t hi = 0) const {
    if (hi < lo) hi = lo;
    if (args.size() < lo || args.size() > hi)
      throw SchemaError(ptr + "/args", "op expects " + std::to_string(lo) +
                                           (hi > lo ? "-" + std::to_string(hi) : "") +
                                           " arguments, got " + std::to_string(args.size()));
  }
  const Value& arg(size_t i) const {
    auto it = env.find(args[i]);
    if (it == env.end())
      throw SchemaError(ptr + "/args/" + std::to_string(i), "unknown name '" + args[i] + "'");
    if (it->second.kind == Value::Kind::Unsolvable)
      throw std::runtime_error("argument '" + args[i] + "' is an unsolvable result");
    return it->second;
  }
  const Presentation& module(size_t i) const {
    const Value& v = arg(i);
    if (v.kind != Value::Kind::Module)
      throw std::runtime_error("argument '" + args[i] + "' is not a module");
    return v.module;
  }
  const Morphism& map(size_t i) const {
    const Value& v = arg(i);
    if (v.kind != Value::Kind::Map)
      throw std::runtime_error("argument '" + args[i] + "' is not a morphism");
    return v.map;
  }
  const Mat& matrix(size_t i) const {
    const Value& v = arg(i);
    if (v.kind == Value::Kind::Matrix) return v.matrix;
    if (v.kind == Value::Kind::Map) return v.map.matrix;
    throw std::runtime_error("argument '" + args[i] + "' is not a matrix");
  }
  const Value& chain_value(size_t i) const {
    const Value& v = arg(i);
    if (v.kind != Value::Kind::Chain && v.kind != Value::Kind::Les)
      throw std::runtime_error("argument '" + args[i] + "' is not a complex");
    return v;
  }

  int int_field(const char* key) const {
    if (!step.contains(key) || !step[key].is_number_integer())
      throw SchemaError(ptr + "/" + key, std::string("step needs an integer \"") + key + "\"");
    return step[key].get<int>();
  }
  int int_field_or(const char* key, int fallback) const {
    if (!step.contains(key)) return fallback;
    if (!step[key].is_number_integer())
      throw SchemaError(ptr + "/" + key, std::string("\"") + key + "\" must be an integer");
    return step[key].get<int>();
  }
  bool flag_field(const char* key) const {
    if (!step.contains(key)) return false;
    if (!step[key].is_boolean())
      throw SchemaError(ptr + "/" + key, std::string("\"") + key + "\" must be a boolean");
    return step[key].get<bool>();
  }
  FunctorHandle functor_field() const {
    if (!step.contains("functor") || !step["functor"].is_string())
      throw SchemaError(ptr + "/functor", "step needs a \"functor\" expression string");
    try {
      return parse_functor_expression(step["functor"].get<std::string>());
    } catch (const std::exception& e) {
      throw SchemaError(ptr + "/functor", e.what());
    }
  }
};

// Maps a run of argument names onto one functor slot according to its shape:
// one module or morphism name, or two morphism names for an arrow pair.
std::vector<SlotValue> slot_args(const Exec& x, const FunctorHandle& f) {
  std::vector<SlotValue> vals;
  size_t k = 0;
  for (size_t s = 0; s < f->shapes.size(); ++s) {
    const size_t need = f->shapes[s] == SlotShape::ArrowPair ? 2 : 1;
    if (k + need > x.args.size()) throw std::runtime_error("too few arguments for the functor's slots");
    switch (f->shapes[s]) {
      case SlotShape::Object: vals.push_back(slot_object(x.module(k))); break;
      case SlotShape::Arrow: vals.push_back(slot_arrow(x.map(k))); break;
      case SlotShape::ArrowPair: vals.push_back(slot_pair(x.map(k), x.map(k + 1))); break;
    }
    k += need;
  }
  if (k != x.args.size()) throw std::runtime_error("too many arguments for the functor's slots");
  return vals;
}

FunctorHandle fixed_functor(const Exec& x, FunctorHandle f) {
  if (!x.step.contains("fix")) return f;
  const Json& fix = x.step["fix"];
  if (!fix.is_array()) throw SchemaError(x.ptr + "/fix", "fix must be an array (null marks open slots)");
  std::vector<std::optional<SlotValue>> fixed;
  for (size_t i = 0; i < fix.size(); ++i) {
    if (fix[i].is_null()) {
      fixed.emplace_back(std::nullopt);
    } else if (fix[i].is_string()) {
      const std::string name = fix[i].get<std::string>();
      auto it = x.env.find(name);
      if (it == x.env.end() || it->second.kind != Value::Kind::Module)
        throw SchemaError(x.ptr + "/fix/" + std::to_string(i), "'" + name + "' is not a module");
      fixed.emplace_back(slot_object(it->second.module));
    } else {
      throw SchemaError(x.ptr + "/fix/" + std::to_string(i), "fix entries are names or null");
    }
  }
  return curry_functor(std::move(f), std::move(fixed));
}

bool decomposable_ring(const Ring& r) {
  switch (r.backend) {
    case Backend::Integers:
    case Backend::Rationals:
    case Backend::PrimeField: return true;
    case Backend::Residue: return decomposable_ring(*r.base);
    case Backend::Poly: return false;
  }
  return false;
}

Value execute_step(const RingHandle& ring, std::map<std::string, Value>& env, const Json& step,
                   const std::string& ptr) {
  const Exec x(ring, env, step, ptr);
  const std::string op = step["op"].get<std::string>();

  if (op == "mat_mul") {
    x.expect_args(2);
    return val_matrix(mat_mul(x.matrix(0), x.matrix(1)));
  }
  if (op == "mat_stack") {
    x.expect_args(2);
    return val_matrix(mat_stack(x.matrix(0), x.matrix(1)));
  }
  if (op == "kronecker") {
    x.expect_args(2);
    return val_matrix(kronecker(x.matrix(0), x.matrix(1)));
  }
  if (op == "theta_transpose") {
    x.expect_args(1);
    return val_matrix(theta_transpose(x.matrix(0)));
  }
  if (op == "basis_of_module") {
    x.expect_args(1);
    return val_matrix(basis_of_module(x.matrix(0)).basis);
  }
  if (op == "decide_zero") {
    x.expect_args(2);
    ReductionResult r = decide_zero(x.matrix(0), x.matrix(1));
    return val_record(Json{{"reduced", mat_to_json(r.reduced)}, {"is_zero", r.is_zero}});
  }
  if (op == "syzygies_generators") {
    x.expect_args(1, 2);
    std::optional<Mat> modulo;
    if (x.args.size() == 2) modulo = x.matrix(1);
    return val_matrix(syzygies_generators(x.matrix(0), modulo));
  }
  if (op == "smith_normal_form") {
    x.expect_args(1);
    SmithResult s = smith_normal_form(x.matrix(0));
    return val_record(
        Json{{"d", mat_to_json(s.d)}, {"u", mat_to_json(s.u)}, {"v", mat_to_json(s.v)}});
  }
  if (op == "morphism_is_valid") {
    x.expect_args(1);
    return val_flag(morphism_validity(x.map(0)) == MorphValidity::Valid);
  }
  if (op == "morphisms_equal") {
    x.expect_args(2);
    return val_flag(morphisms_equal(x.map(0), x.map(1)));
  }
  if (op == "presentations_equal") {
    x.expect_args(2);
    return val_flag(presentations_equal(x.module(0), x.module(1)));
  }
  if (op == "eliminate_units") {
    x.expect_args(1);
    return val_module(eliminate_units(x.module(0)).first);
  }
  if (op == "better_generators") {
    x.expect_args(1);
    return val_module(better_generators(x.module(0)).first);
  }
  if (op == "canonical_decomposition") {
    x.expect_args(1);
    return val_decomp(canonical_decomposition(x.module(0)));
  }
  if (op == "right_divide") {
    x.expect_args(2, 3);
    std::optional<Mat> l;
    if (x.args.size() == 3) l = x.matrix(2);
    std::optional<Mat> sol = right_divide(x.matrix(0), x.matrix(1), l);
    return sol ? val_matrix(std::move(*sol)) : val_unsolvable();
  }
  if (op == "leftinverse") {
    x.expect_args(1);
    std::optional<Morphism> inv = leftinverse(x.map(0));
    return inv ? val_map(std::move(*inv)) : val_unsolvable();
  }
  if (op == "preimage") {
    x.expect_args(2);
    std::optional<Mat> pre = preimage(x.matrix(0), x.map(1));
    return pre ? val_matrix(std::move(*pre)) : val_unsolvable();
  }
  if (op == "complete_im_sq") {
    x.expect_args(3);
    std::optional<Morphism> psi = complete_im_sq(x.map(0), x.map(1), x.map(2));
    return psi ? val_map(std::move(*psi)) : val_unsolvable();
  }
  if (op == "resolution_of_module") {
    x.expect_args(1);
    const int length = x.int_field("length");
    Resolution res = resolution_of_module(x.module(0), length);
    std::vector<Presentation> objects;
    std::vector<Morphism> maps;
    for (int i = 0; i <= length + 1; ++i) objects.push_back(res.free_module(i));
    for (int i = 1; i <= length + 1; ++i) maps.push_back(res.boundary(i));
    return val_chain(make_complex(std::move(objects), std::move(maps)));
  }
  if (op == "subfactor_module") {
    x.expect_args(2);
    Subfactor sf = subfactor_module(x.matrix(0), x.matrix(1));
    return val_record(Json{{"module", presentation_to_json(sf.pres)},
                           {"embedding", mat_to_json(sf.embedding)}});
  }
  if (op == "functor_obj") {
    FunctorHandle f = fixed_functor(x, x.functor_field());
    return val_module(functor_obj(f, slot_args(x, f)));
  }
  if (op == "functor_map") {
    FunctorHandle f = fixed_functor(x, x.functor_field());
    const int slot = x.int_field_or("slot", 0);
    const int arity = functor_arity(*f);
    if (slot < 0 || slot >= arity) throw std::runtime_error("active slot out of range");
    for (SlotShape sh : f->shapes)
      if (sh != SlotShape::Object)
        throw std::runtime_error("functor_map steps act on module slots only");
    x.expect_args(static_cast<size_t>(arity));
    const Morphism& phi = x.map(static_cast<size_t>(slot));
    std::vector<SlotValue> vals;
    for (int s = 0; s < arity; ++s)
      vals.push_back(slot_object(s == slot ? phi.source : x.module(static_cast<size_t>(s))));
    return val_map(functor_map(f, slot, object_change(phi), vals));
  }
  if (op == "resolution_of_seq") {
    x.expect_args(1);
    LiftedChainMap lifted = resolution_of_seq(x.map(0), x.int_field("degree"));
    Json levels = Json::array();
    for (const Morphism& m : lifted.levels) levels.push_back(mat_to_json(m.matrix));
    return val_record(Json{{"source", resolution_to_json(lifted.source)},
                           {"target", resolution_to_json(lifted.target)},
                           {"levels", levels}});
  }
  if (op == "functor_on_complex") {
    x.expect_args(1);
    FunctorHandle f = fixed_functor(x, x.functor_field());
    return val_chain(functor_on_complex(f, x.chain_value(0).chain));
  }
  if (op == "obj_slice" || op == "mor_slice") {
    x.expect_args(1);
    const Complex& c = x.chain_value(0).chain;
    const int position = x.int_field("position");
    if (op == "obj_slice") {
      if (position < 1 || position > static_cast<int>(c.objects.size()))
        throw std::runtime_error("slice position out of range");
      return val_module(obj_slice(c, position));
    }
    if (position < 1 || position > static_cast<int>(c.maps.size()))
      throw std::runtime_error("slice position out of range");
    return val_map(mor_slice(c, position));
  }
  if (op == "pullback") {
    x.expect_args(2);
    PullbackData pb = pullback(x.map(0), x.map(1));
    return val_record(Json{{"module", presentation_to_json(pb.pres)},
                           {"to_first", morphism_to_json(pb.to_first)},
                           {"to_second", morphism_to_json(pb.to_second)}});
  }
  if (op == "resolve_short_exact_seq") {
    x.expect_args(2);
    ResolvedSes rs = resolve_short_exact_seq(x.map(0), x.map(1), x.int_field("length"));
    Json include = Json::array();
    Json project = Json::array();
    for (const Morphism& m : rs.include) include.push_back(mat_to_json(m.matrix));
    for (const Morphism& m : rs.project) project.push_back(mat_to_json(m.matrix));
    return val_record(Json{{"left", resolution_to_json(rs.left)},
                           {"middle", resolution_to_json(rs.middle)},
                           {"right", resolution_to_json(rs.right)},
                           {"include", include},
                           {"project", project}});
  }
  if (op == "long_exact_homology_seq" || op == "long_exact_cohomology_seq") {
    x.expect_args(2);
    FunctorHandle f = fixed_functor(x, x.functor_field());
    const int degree = x.int_field("degree");
    const bool cohomology = op == "long_exact_cohomology_seq";
    Value v;
    v.kind = Value::Kind::Les;
    v.les_cohomology = cohomology;
    v.chain = cohomology ? long_exact_cohomology_seq(f, x.map(0), x.map(1), degree)
                         : long_exact_homology_seq(f, x.map(0), x.map(1), degree);
    return v;
  }
  if (op == "verify_exactness") {
    x.expect_args(1);
    const Value& v = x.chain_value(0);
    std::vector<Presentation> defects = complex_homology(v.chain);
    int lo = 0;
    int hi = static_cast<int>(defects.size());
    if (v.kind == Value::Kind::Les) {
      // The window cuts the sequence off at one end; no exactness claim there.
      if (v.les_cohomology)
        lo = 1;
      else
        hi -= 1;
    }
    Json positions = Json::array();
    bool exact = true;
    for (int i = lo; i < hi; ++i) {
      Json rec{{"index", i}};
      if (decomposable_ring(*defects[i].ring))
        rec["defect"] = decomposition_to_json(canonical_decomposition(defects[i]));
      else
        rec["defect"] = presentation_to_json(defects[i]);
      exact = exact && is_zero_module(defects[i]);
      positions.push_back(std::move(rec));
    }
    return val_record(Json{{"positions", positions}, {"exact", exact}});
  }
  if (op == "simplicial_chain_complex") {
    if (!step.contains("facets")) throw SchemaError(ptr + "/facets", "step needs a facet list");
    SimplicialComplex sc = simplicial_from_facets(facets_at(step["facets"], ptr + "/facets"));
    return val_chain(chain_complex(sc, ring));
  }
  if (op == "simplicial_homology") {
    if (!step.contains("facets")) throw SchemaError(ptr + "/facets", "step needs a facet list");
    SimplicialComplex sc = simplicial_from_facets(facets_at(step["facets"], ptr + "/facets"));
    const int degree = x.int_field("degree");
    return val_module(x.flag_field("cohomology") ? simplicial_cohomology(sc, degree, ring)
                                                 : simplicial_homology(sc, degree, ring));
  }
  throw SchemaError(ptr + "/op", "unknown op '" + op + "'");
}

void parse_defs(const RingHandle& ring, std::map<std::string, Value>& env, const Json& doc) {
  if (!doc.contains("defs")) return;
  const Json& defs = doc["defs"];
  if (!defs.is_object()) throw SchemaError("/defs", "defs must be an object");
  // Presentations and raw matrices first, so morphisms can name them in any order.
  for (const auto& [name, d] : defs.items()) {
    const std::string ptr = "/defs/" + name;
    if (!d.is_object()) throw SchemaError(ptr, "definitions are objects");
    if (d.contains("matrix")) continue;
    if (d.contains("entries")) {
      env[name] = val_matrix(mat_at(ring, d["entries"], d.value("cols", -1), ptr + "/entries"));
      continue;
    }
    if (!d.contains("gens") || !d["gens"].is_number_integer() || d["gens"].get<int>() < 0)
      throw SchemaError(ptr + "/gens", "presentation needs a nonnegative \"gens\" count");
    const int gens = d["gens"].get<int>();
    Mat relations = d.contains("relations") ? mat_at(ring, d["relations"], gens, ptr + "/relations")
                                            : Mat::zeros(ring, 0, gens);
    env[name] = val_module(make_presentation(ring, gens, std::move(relations)));
  }
  for (const auto& [name, d] : defs.items()) {
    const std::string ptr = "/defs/" + name;
    if (!d.contains("matrix")) continue;
    auto endpoint = [&](const char* key) -> const Presentation& {
      if (!d.contains(key) || !d[key].is_string())
        throw SchemaError(ptr + "/" + key, std::string("morphism needs a \"") + key + "\" name");
      auto it = env.find(d[key].get<std::string>());
      if (it == env.end() || it->second.kind != Value::Kind::Module)
        throw SchemaError(ptr + "/" + key,
                          "'" + d[key].get<std::string>() + "' is not a defined module");
      return it->second.module;
    };
    const Presentation& source = endpoint("source");
    const Presentation& target = endpoint("target");
    Mat matrix = mat_at(ring, d["matrix"], target.gens, ptr + "/matrix");
    if (matrix.rows != source.gens)
      throw SchemaError(ptr + "/matrix", "matrix needs one row per source generator");
    env[name] = val_map(make_morphism(source, target, std::move(matrix)));
  }
}

}  // namespace

RingHandle ring_from_json(const Json& spec) { return ring_at(spec, ""); }

Mat mat_from_json(const RingHandle& r, const Json& rows, int cols_hint) {
  return mat_at(r, rows, cols_hint, "");
}

Json mat_to_json(const Mat& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.rows; ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.cols; ++j) row.push_back(print_element(*m.ring, m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json presentation_to_json(const Presentation& p) {
  return Json{{"gens", p.gens}, {"relations", mat_to_json(p.relations)}};
}

Json morphism_to_json(const Morphism& phi) {
  return Json{{"source", presentation_to_json(phi.source)},
              {"target", presentation_to_json(phi.target)},
              {"matrix", mat_to_json(phi.matrix)}};
}

Json decomposition_to_json(const Decomposition& d) {
  Json factors = Json::array();
  for (const mpz_class& f : d.factors) {
    if (f.fits_slong_p())
      factors.push_back(f.get_si());
    else
      factors.push_back(f.get_str());
  }
  return Json{{"factors", factors}, {"rank", d.rank}};
}

FunctorHandle parse_functor_expression(const std::string& text) {
  ExprParser p{text};
  FunctorHandle f = p.expr();
  p.skip_ws();
  if (p.pos != text.size()) p.fail("trailing input");
  return f;
}

SimplicialComplex simplicial_from_json(const Json& doc) {
  const Json& facets = doc.is_object() && doc.contains("facets") ? doc["facets"] : doc;
  return simplicial_from_facets(facets_at(facets, "/facets"));
}

PipelineResult run_pipeline(const Json& doc) {
  int current_step = -1;
  try {
    if (!doc.is_object()) throw SchemaError("", "pipeline document must be an object");
    if (!doc.contains("ring")) throw SchemaError("/ring", "pipeline document needs a \"ring\"");
    RingHandle ring = ring_at(doc["ring"], "/ring");
    std::map<std::string, Value> env;
    parse_defs(ring, env, doc);

    bool saw_unsolvable = false;
    const Json steps = doc.value("steps", Json::array());
    if (!steps.is_array()) throw SchemaError("/steps", "steps must be an array");
    for (size_t i = 0; i < steps.size(); ++i) {
      current_step = static_cast<int>(i);
      const std::string ptr = "/steps/" + std::to_string(i);
      const Json& step = steps[i];
      if (!step.is_object() || !step.contains("op") || !step["op"].is_string())
        throw SchemaError(ptr + "/op", "step needs an \"op\" string");
      Value v = execute_step(ring, env, step, ptr);
      if (v.kind == Value::Kind::Unsolvable) saw_unsolvable = true;
      if (step.contains("bind")) {
        if (!step["bind"].is_string()) throw SchemaError(ptr + "/bind", "bind must be a name");
        env[step["bind"].get<std::string>()] = std::move(v);
      }
    }
    current_step = -1;

    Json outputs = Json::object();
    if (doc.contains("outputs")) {
      const Json& names = doc["outputs"];
      if (!names.is_array()) throw SchemaError("/outputs", "outputs must be an array of names");
      for (size_t i = 0; i < names.size(); ++i) {
        if (!names[i].is_string())
          throw SchemaError("/outputs/" + std::to_string(i), "output entries are names");
        const std::string name = names[i].get<std::string>();
        auto it = env.find(name);
        if (it == env.end())
          throw SchemaError("/outputs/" + std::to_string(i), "unknown name '" + name + "'");
        outputs[name] = value_to_json(it->second);
      }
    }
    return {saw_unsolvable ? 2 : 0, Json{{"outputs", outputs}}};
  } catch (const SchemaError& e) {
    Json err{{"message", e.what()}, {"pointer", e.pointer}};
    if (current_step >= 0) err["step"] = current_step;
    return {1, Json{{"error", err}}};
  } catch (const std::exception& e) {
    Json err{{"message", e.what()}};
    if (current_step >= 0) err["step"] = current_step;
    return {1, Json{{"error", err}}};
  }
}

}  // namespace fpmod
