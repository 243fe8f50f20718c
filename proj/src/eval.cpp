#include "mildem/eval.hpp"

#include <cctype>
#include <functional>
#include <map>
#include <numeric>

namespace mildem {

namespace {

[[noreturn]] void type_error(const std::string& fn, std::size_t i, const std::string& want, const Value& got) {
  fail(ErrorKind::MalformedLiteral,
       fn + ": argument " + std::to_string(i + 1) + " should be " + want + ", got " + type_name(got));
}

template <class T>
const T& arg(const std::string& fn, const ValueList& args, std::size_t i, const char* want) {
  if (i >= args.size()) fail(ErrorKind::ArityMismatch, fn + ": missing argument " + std::to_string(i + 1));
  if (const T* p = std::get_if<T>(&args[i].v)) return *p;
  type_error(fn, i, want, args[i]);
}

// Lists of one kind; a simplex also counts as a list of its coordinates.
template <class T>
std::vector<T> list_arg(const std::string& fn, const ValueList& args, std::size_t i, const char* want) {
  if (i >= args.size()) fail(ErrorKind::ArityMismatch, fn + ": missing argument " + std::to_string(i + 1));
  std::vector<T> out;
  if (const auto* l = std::get_if<ValueList>(&args[i].v)) {
    for (const Value& x : *l) {
      if (const T* p = std::get_if<T>(&x.v)) out.push_back(*p);
      else type_error(fn, i, std::string("a list of ") + want, args[i]);
    }
    return out;
  }
  if constexpr (std::is_same_v<T, MElt>) {
    if (const auto* s = std::get_if<Simplex>(&args[i].v)) return s->coords;
  }
  if (const T* p = std::get_if<T>(&args[i].v)) return {*p};
  type_error(fn, i, std::string("a list of ") + want, args[i]);
}

// Factors for box-product queries: elements become vertices.
std::vector<Simplex> factors(const std::string& fn, const Value& v) {
  std::vector<Simplex> out;
  if (const auto* s = std::get_if<Simplex>(&v.v)) {
    for (const MElt& x : s->coords) out.push_back(Simplex::vertex(x));
    return out;
  }
  if (const auto* l = std::get_if<ValueList>(&v.v)) {
    for (const Value& x : *l) {
      if (const auto* e = std::get_if<MElt>(&x.v)) out.push_back(Simplex::vertex(*e));
      else if (const auto* s = std::get_if<Simplex>(&x.v)) out.push_back(*s);
      else fail(ErrorKind::MalformedLiteral, fn + ": factors must be elements or simplices");
    }
    return out;
  }
  fail(ErrorKind::MalformedLiteral, fn + ": expected a list of factors");
}

Value text(std::string s) { return Value{Text{std::move(s)}}; }

std::string box_text(const std::vector<Simplex>& xs) {
  const BoxResult r = box_membership(xs);
  if (const auto* w = std::get_if<BoxWitness>(&r)) return to_string(*w);
  return to_string(std::get<NotInBox>(r));
}

std::string chain_text(const WitnessChain& c) {
  std::string out = "chain{case=" + std::to_string(c.case_number) + ", maps=[";
  for (std::size_t i = 0; i < c.maps.size(); ++i) out += (i ? ", " : "") + to_string(c.maps[i]);
  out += "], verified=[";
  for (std::size_t i = 0; i < c.verified.size(); ++i) out += (i ? ", " : "") + c.verified[i];
  return out + "]}";
}

std::string class_text(const SetClass& c) {
  switch (c.kind) {
    case SetClass::Kind::Finite: return "Finite(" + std::to_string(c.count) + ")";
    case SetClass::Kind::Cofinite: return "Cofinite(" + std::to_string(c.count) + ")";
    default: return "Bi-infinite";
  }
}

std::string mu_text(const MuReport& r) {
  return "mu{input=" + to_string(r.input) + ", result=" + to_string(r.result) +
         ", relation=" + (r.relation_holds ? "true" : "false") + ", phi_agrees=" + (r.phi_agrees ? "true" : "false") +
         ", payload_mild=" + (r.payload_mild ? "true" : "false") + "}";
}

using Fn = std::function<Value(const ValueList&)>;

struct FnEntry {
  std::string signature;
  Fn fn;
};

const std::map<std::string, FnEntry>& functions() {
  static const std::map<std::string, FnEntry> table = [] {
    std::map<std::string, FnEntry> t;
    auto def = [&](const std::string& name, std::string sig, Fn fn) { t[name] = FnEntry{std::move(sig), std::move(fn)}; };

    // sets
    def("union", "union(S, T)", [](const ValueList& a) {
      return Value{set_union(arg<UPSet>("union", a, 0, "a set"), arg<UPSet>("union", a, 1, "a set"))};
    });
    def("intersect", "intersect(S, T)", [](const ValueList& a) {
      return Value{set_intersection(arg<UPSet>("intersect", a, 0, "a set"), arg<UPSet>("intersect", a, 1, "a set"))};
    });
    def("difference", "difference(S, T)", [](const ValueList& a) {
      return Value{set_difference(arg<UPSet>("difference", a, 0, "a set"), arg<UPSet>("difference", a, 1, "a set"))};
    });
    def("complement", "complement(S)", [](const ValueList& a) { return Value{complement(arg<UPSet>("complement", a, 0, "a set"))}; });
    def("classify", "classify(S)", [](const ValueList& a) {
      return text(class_text(classify(arg<UPSet>("classify", a, 0, "a set"))));
    });
    def("coinfinite?", "coinfinite?(S)", [](const ValueList& a) { return Value{arg<UPSet>("coinfinite?", a, 0, "a set").is_coinfinite()}; });
    def("contains", "contains(S, n)", [](const ValueList& a) {
      return Value{arg<UPSet>("contains", a, 0, "a set").contains(arg<Int>("contains", a, 1, "an integer"))};
    });
    def("progression", "progression(start, step)", [](const ValueList& a) {
      return Value{UPSet::progression(arg<Int>("progression", a, 0, "an integer"), arg<Int>("progression", a, 1, "an integer"))};
    });
    def("above", "above(n)", [](const ValueList& a) { return Value{UPSet::above(arg<Int>("above", a, 0, "an integer"))}; });
    def("interval", "interval(lo, hi)", [](const ValueList& a) {
      return Value{UPSet::interval(arg<Int>("interval", a, 0, "an integer"), arg<Int>("interval", a, 1, "an integer"))};
    });
    def("enumerator", "enumerator(S)", [](const ValueList& a) {
      return Value{validate(enumerator(arg<UPSet>("enumerator", a, 0, "a set")))};
    });

    // maps
    def("swap", "swap(a, b)", [](const ValueList& a) {
      return Value{maps::swap(arg<Int>("swap", a, 0, "an integer"), arg<Int>("swap", a, 1, "an integer"))};
    });
    def("interleave", "interleave(n, j)", [](const ValueList& a) {
      return Value{maps::interleave(arg<Int>("interleave", a, 0, "an integer"), arg<Int>("interleave", a, 1, "an integer"))};
    });
    def("affine", "affine(slope, offset)", [](const ValueList& a) {
      return Value{maps::affine(arg<Int>("affine", a, 0, "an integer"), arg<Int>("affine", a, 1, "an integer"))};
    });
    def("compose", "compose(u, v, ...) = u ∘ v ∘ ...", [](const ValueList& a) {
      if (a.empty()) fail(ErrorKind::ArityMismatch, "compose: needs at least one map");
      PAPInj out = arg<PAPInj>("compose", a, 0, "a map");
      for (std::size_t i = 1; i < a.size(); ++i) out = compose(out, arg<PAPInj>("compose", a, i, "a map"));
      return Value{out};
    });
    def("apply", "apply(u, x)", [](const ValueList& a) {
      return Value{arg<PAPInj>("apply", a, 0, "a map")(arg<Int>("apply", a, 1, "an integer"))};
    });
    def("image", "image(u) or image(u, S)", [](const ValueList& a) {
      const PAPInj& u = arg<PAPInj>("image", a, 0, "a map");
      return Value{a.size() > 1 ? image(u, arg<UPSet>("image", a, 1, "a set")) : image(u)};
    });
    def("preimage", "preimage(u, S)", [](const ValueList& a) {
      return Value{preimage(arg<PAPInj>("preimage", a, 0, "a map"), arg<UPSet>("preimage", a, 1, "a set"))};
    });
    def("equal_on", "equal_on(u, v, A)", [](const ValueList& a) {
      return Value{equal_on(arg<PAPInj>("equal_on", a, 0, "a map"), arg<PAPInj>("equal_on", a, 1, "a map"),
                            arg<UPSet>("equal_on", a, 2, "a set"))};
    });
    def("fixes", "fixes(u, A): u lies in M_A", [](const ValueList& a) {
      return Value{fixes_pointwise(arg<PAPInj>("fixes", a, 0, "a map"), arg<UPSet>("fixes", a, 1, "a set"))};
    });
    def("bijective?", "bijective?(u)", [](const ValueList& a) { return Value{is_bijective(arg<PAPInj>("bijective?", a, 0, "a map"))}; });
    def("agreeing_bijection", "agreeing_bijection(f, A)", [](const ValueList& a) {
      return Value{agreeing_bijection(arg<PAPInj>("agreeing_bijection", a, 0, "a map"),
                                      arg<UPSet>("agreeing_bijection", a, 1, "a set"))};
    });

    // Inj(n×ω, ω)
    def("injn", "injn(u_1, ..., u_n)", [](const ValueList& a) {
      std::vector<PAPInj> us;
      for (std::size_t i = 0; i < a.size(); ++i) us.push_back(arg<PAPInj>("injn", a, i, "a map"));
      return Value{InjN(std::move(us))};
    });
    def("standard", "standard(n): the n-fold interleaving", [](const ValueList& a) {
      return Value{InjN::standard(static_cast<std::size_t>(arg<Int>("standard", a, 0, "an integer")))};
    });
    def("operad_compose", "operad_compose(f, [g_1, ..., g_n])", [](const ValueList& a) {
      const auto inner = list_arg<InjN>("operad_compose", a, 1, "injn values");
      return Value{operad_compose(arg<InjN>("operad_compose", a, 0, "an injn"), inner)};
    });
    def("precompose", "precompose(f, [u_1, ..., u_n])", [](const ValueList& a) {
      const auto us = list_arg<PAPInj>("precompose", a, 1, "maps");
      return Value{precompose(arg<InjN>("precompose", a, 0, "an injn"), us)};
    });

    // ℳ-sets
    def("act", "act(f, x): x an element, simplex or cfg", [](const ValueList& a) {
      if (a.size() > 1 && std::holds_alternative<MElt>(a[1].v))
        return Value{act(arg<PAPInj>("act", a, 0, "a map"), std::get<MElt>(a[1].v))};
      if (a.size() > 1 && std::holds_alternative<Simplex>(a[1].v))
        return Value{em_act(list_arg<PAPInj>("act", a, 0, "maps"), std::get<Simplex>(a[1].v))};
      return Value{act(list_arg<PAPInj>("act", a, 0, "maps"), arg<StarSimplex>("act", a, 1, "an element, simplex or cfg"))};
    });
    def("supported_on", "supported_on(x, A)", [](const ValueList& a) {
      return Value{is_supported_on(arg<MElt>("supported_on", a, 0, "an element"), arg<UPSet>("supported_on", a, 1, "a set"))};
    });
    def("support", "support(x): the least support, or NoMinimal", [](const ValueList& a) {
      const auto s = minimal_support(arg<MElt>("support", a, 0, "an element"));
      return s ? Value{*s} : text("NoMinimal");
    });
    def("classify_element", "classify_element(x)", [](const ValueList& a) {
      return text(std::string(to_string(classify_element(arg<MElt>("classify_element", a, 0, "an element")))));
    });
    def("mild?", "mild?(x)", [](const ValueList& a) { return Value{is_mild(arg<MElt>("mild?", a, 0, "an element"))}; });
    def("tame?", "tame?(x)", [](const ValueList& a) { return Value{is_tame(arg<MElt>("tame?", a, 0, "an element"))}; });
    def("cap_witness", "cap_witness(x, A, B, f): the chain showing f.x = x", [](const ValueList& a) {
      const std::string fn = "cap_witness";
      return text(chain_text(intersection_support_witness(arg<MElt>(fn, a, 0, "an element"), arg<UPSet>(fn, a, 1, "a set"),
                                                          arg<UPSet>(fn, a, 2, "a set"), arg<PAPInj>(fn, a, 3, "a map"))));
    });
    def("chi", "chi(A, [u_0, ..., u_n])", [](const ValueList& a) {
      return Value{stabilizing_chi(arg<UPSet>("chi", a, 0, "a set"), list_arg<PAPInj>("chi", a, 1, "maps"))};
    });
    def("equal_mod_MA", "equal_mod_MA(A, [u...], [v...])", [](const ValueList& a) {
      const auto r = equal_mod_MA(arg<UPSet>("equal_mod_MA", a, 0, "a set"), list_arg<PAPInj>("equal_mod_MA", a, 1, "maps"),
                                  list_arg<PAPInj>("equal_mod_MA", a, 2, "maps"));
      return text(r == ModEquality::Equal ? "Equal" : "Unknown");
    });

    // simplices
    def("face", "face(s, i) for simplices and cfgs", [](const ValueList& a) {
      const Int i = arg<Int>("face", a, 1, "an integer");
      if (a.size() && std::holds_alternative<StarSimplex>(a[0].v)) return Value{face(std::get<StarSimplex>(a[0].v), i)};
      return Value{face(arg<Simplex>("face", a, 0, "a simplex"), i)};
    });
    def("degeneracy", "degeneracy(s, i) for simplices and cfgs", [](const ValueList& a) {
      const Int i = arg<Int>("degeneracy", a, 1, "an integer");
      if (a.size() && std::holds_alternative<StarSimplex>(a[0].v)) return Value{degeneracy(std::get<StarSimplex>(a[0].v), i)};
      const Simplex& s = arg<Simplex>("degeneracy", a, 0, "a simplex");
      return Value{degeneracy(s, i, s.degree() + 1)};
    });
    def("pullback", "pullback(s, [f(0), ..., f(m)])", [](const ValueList& a) {
      return Value{pullback(arg<Simplex>("pullback", a, 0, "a simplex"), list_arg<Int>("pullback", a, 1, "integers"))};
    });
    def("k_support", "k_support(s, k)", [](const ValueList& a) {
      const auto s = k_support(arg<Simplex>("k_support", a, 0, "a simplex"), arg<Int>("k_support", a, 1, "an integer"));
      return s ? Value{*s} : text("NoMinimal");
    });
    def("k_supported_on", "k_supported_on(s, k, A)", [](const ValueList& a) {
      return Value{is_k_supported_on(arg<Simplex>("k_supported_on", a, 0, "a simplex"), arg<Int>("k_supported_on", a, 1, "an integer"),
                                     arg<UPSet>("k_supported_on", a, 2, "a set"))};
    });
    def("member", "member(F, s)", [](const ValueList& a) {
      return Value{arg<TruncEMSS>("member", a, 0, "a family").contains(arg<Simplex>("member", a, 1, "a simplex"))};
    });

    // box product
    def("box?", "box? [x; y; ...] or box?([s, t, ...])", [](const ValueList& a) {
      if (a.size() != 1) fail(ErrorKind::ArityMismatch, "box?: takes one list of factors");
      return text(box_text(factors("box?", a[0])));
    });
    def("zip", "zip([s, t, ...])", [](const ValueList& a) {
      if (a.size() != 1) fail(ErrorKind::ArityMismatch, "zip: takes one list of factors");
      return Value{zip(factors("zip", a[0]))};
    });
    def("unzip", "unzip(s)", [](const ValueList& a) {
      ValueList out;
      for (Simplex& s : unzip(arg<Simplex>("unzip", a, 0, "a simplex"))) out.push_back(Value{std::move(s)});
      return Value{std::move(out)};
    });

    // operadic product
    def("phi", "phi(c)", [](const ValueList& a) {
      ValueList out;
      for (Simplex& s : phi(arg<OperadicClass>("phi", a, 0, "a class"))) out.push_back(Value{std::move(s)});
      return Value{std::move(out)};
    });
    def("phi_inverse", "phi_inverse([s, t, ...])", [](const ValueList& a) {
      if (a.size() != 1) fail(ErrorKind::ArityMismatch, "phi_inverse: takes one list of factors");
      return Value{phi_inverse(factors("phi_inverse", a[0]))};
    });
    def("class_equal", "class_equal(c1, c2)", [](const ValueList& a) {
      return Value{class_equal(arg<OperadicClass>("class_equal", a, 0, "a class"), arg<OperadicClass>("class_equal", a, 1, "a class"))};
    });
    def("mu", "mu(s): rewrite [standard; s, *] with a mild payload", [](const ValueList& a) {
      return text(mu_text(mu_via_operadic(arg<Simplex>("mu", a, 0, "a simplex"))));
    });

    // free commutative *-algebra
    def("psum", "psum(a, b)", [](const ValueList& a) {
      return Value{sum(arg<StarSimplex>("psum", a, 0, "a cfg"), arg<StarSimplex>("psum", a, 1, "a cfg"))};
    });
    def("summable?", "summable?(a, b)", [](const ValueList& a) {
      return Value{summable(arg<StarSimplex>("summable?", a, 0, "a cfg"), arg<StarSimplex>("summable?", a, 1, "a cfg"))};
    });
    def("i_action", "i_action([f_0, ..., f_n], [a_1, ..., a_r])", [](const ValueList& a) {
      return Value{i_action(list_arg<InjN>("i_action", a, 0, "injn values"), list_arg<StarSimplex>("i_action", a, 1, "cfgs"))};
    });
    return t;
  }();
  return table;
}

class Parser {
 public:
  explicit Parser(std::string_view src) : src_(src) {}

  Value parse_all() {
    Value v = expr();
    ws();
    if (pos_ != src_.size()) error("end of input");
    return v;
  }

 private:
  std::string_view src_;
  std::size_t pos_ = 0;

  [[noreturn]] void error(const std::string& expected) const {
    const std::string found = pos_ < src_.size() ? "'" + std::string(1, src_[pos_]) + "'" : "end of input";
    fail(ErrorKind::ParseError, "column " + std::to_string(pos_ + 1) + ": expected " + expected + ", found " + found);
  }

  void ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    ws();
    return pos_ < src_.size() && src_[pos_] == c;
  }
  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) error(std::string("'") + c + "'");
  }
  void expect_word(const std::string& w) {
    ws();
    if (src_.substr(pos_, w.size()) != w) error("'" + w + "'");
    pos_ += w.size();
  }

  std::string ident() {
    ws();
    const std::size_t start = pos_;
    if (pos_ < src_.size() && (std::isalpha(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
      ++pos_;
      while (pos_ < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) ++pos_;
      if (pos_ < src_.size() && src_[pos_] == '?') ++pos_;
    }
    if (start == pos_) error("a name");
    return std::string(src_.substr(start, pos_ - start));
  }

  Int integer() {
    ws();
    const std::size_t start = pos_;
    if (pos_ < src_.size() && src_[pos_] == '-') ++pos_;
    const std::size_t digits = pos_;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    if (digits == pos_) {
      pos_ = start;
      error("an integer");
    }
    try {
      return std::stoll(std::string(src_.substr(start, pos_ - start)));
    } catch (const std::out_of_range&) {
      pos_ = start;
      error("an integer in range");
    }
  }

  // num or num/den
  std::pair<Int, Int> rational() {
    const Int num = integer();
    Int den = 1;
    if (accept('/')) den = integer();
    if (den <= 0) error("a positive denominator");
    return {num, den};
  }

  std::vector<Int> int_list() {
    expect('[');
    std::vector<Int> out;
    if (accept(']')) return out;
    do out.push_back(integer());
    while (accept(','));
    expect(']');
    return out;
  }

  // {x:y, ...}
  std::vector<std::pair<Int, Int>> int_map() {
    expect('{');
    std::vector<std::pair<Int, Int>> out;
    if (accept('}')) return out;
    do {
      const Int x = integer();
      expect(':');
      out.emplace_back(x, integer());
    } while (accept(','));
    expect('}');
    return out;
  }

  std::string key() {
    const std::string k = ident();
    expect('=');
    return k;
  }

  template <class T>
  T want(Value v, const char* what) {
    if (T* p = std::get_if<T>(&v.v)) return std::move(*p);
    error(what);
  }

  Value expr() {
    Value v = primary();
    while (peek('^')) {
      ++pos_;
      const std::string f = ident();
      auto* fam = std::get_if<TruncEMSS>(&v.v);
      if (!fam) error("a family before '^'");
      if (f == "mu") *fam = filter_tau_mu(*fam, SimplicialFilter::Mu);
      else if (f == "tau") *fam = filter_tau_mu(*fam, SimplicialFilter::Tau);
      else error("'mu' or 'tau'");
    }
    return v;
  }

  Value primary() {
    ws();
    if (pos_ >= src_.size()) error("an expression");
    const char c = src_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '-') return Value{integer()};
    if (c == '[') return bracket();
    if (c == '*') {
      ++pos_;
      return Value{MElt::point()};
    }
    const std::size_t at = pos_;
    const std::string name = ident();
    if (peek('{')) return literal(name, at);
    if (peek('(')) return call(name, at);
    if (name == "box?") return call_with(name, at, ValueList{expr()});
    return constant(name, at);
  }

  Value bracket() {
    expect('[');
    ValueList items;
    char sep = 0;
    if (!accept(']')) {
      for (;;) {
        items.push_back(expr());
        if (peek(';') || peek(',')) {
          const char s = src_[pos_];
          if (sep && s != sep) error(std::string("'") + sep + "'");
          sep = s;
          ++pos_;
          continue;
        }
        expect(']');
        break;
      }
    }
    const bool all_elements = !items.empty() && std::all_of(items.begin(), items.end(), [](const Value& v) {
      return std::holds_alternative<MElt>(v.v);
    });
    if (sep == ';' || (sep == 0 && all_elements)) {
      if (!all_elements) error("elements in a simplex literal");
      Simplex s;
      for (Value& v : items) s.coords.push_back(std::get<MElt>(std::move(v.v)));
      return Value{std::move(s)};
    }
    return Value{std::move(items)};
  }

  Value constant(const std::string& name, std::size_t at) {
    if (name == "id") return Value{maps::identity()};
    if (name == "succ") return Value{maps::succ()};
    if (name == "double") return Value{maps::doubling()};
    if (name == "evens") return Value{UPSet::evens()};
    if (name == "odds") return Value{UPSet::odds()};
    if (name == "omega") return Value{UPSet::omega()};
    if (name == "empty") return Value{UPSet{}};
    if (name == "true") return Value{true};
    if (name == "false") return Value{false};
    pos_ = at;
    error("a known name");
  }

  Value call(const std::string& name, std::size_t at) {
    expect('(');
    ValueList args;
    if (!accept(')')) {
      do args.push_back(expr());
      while (accept(','));
      expect(')');
    }
    return call_with(name, at, std::move(args));
  }

  Value call_with(const std::string& name, std::size_t at, ValueList args) {
    const auto& fns = functions();
    const auto it = fns.find(name);
    if (it == fns.end()) {
      pos_ = at;
      error("a known function");
    }
    return it->second.fn(args);
  }

  Value literal(const std::string& head, std::size_t at) {
    if (head == "up") return Value{up_body()};
    if (head == "pap") return Value{pap_body()};
    if (head == "inj") return Value{inj_body()};
    if (head == "selfm" || head == "warn") {
      expect('{');
      PAPInj u = want<PAPInj>(expr(), "a map");
      expect('}');
      return Value{head == "selfm" ? MElt::self(std::move(u)) : MElt::warning(std::move(u))};
    }
    if (head == "cfg") return Value{cfg_body()};
    if (head == "class") return Value{class_body()};
    if (head == "EInj" || head == "ESelfM" || head == "EWarn") return Value{family_body(head)};
    pos_ = at;
    error("a literal head (up, pap, inj, selfm, warn, cfg, class, EInj, ESelfM, EWarn)");
  }

  UPSet up_body() {
    expect('{');
    ws();
    if (src_.substr(pos_, 6) == "finite") {
      key();
      const auto xs = int_list();
      expect('}');
      return UPSet::finite(xs);
    }
    if (src_.substr(pos_, 3) == "mod") {
      expect_word("mod");
      const Int p = integer();
      expect_word("in");
      const auto res = int_list();
      expect('}');
      return UPSet::make(0, {}, p, res);
    }
    Int n = 0, p = 1;
    std::vector<Int> exc, res;
    bool seen_p = false;
    do {
      const std::size_t at = pos_;
      const std::string k = key();
      if (k == "N") n = integer();
      else if (k == "exc") exc = int_list();
      else if (k == "p") p = integer(), seen_p = true;
      else if (k == "res") res = int_list();
      else {
        pos_ = at;
        error("one of N, exc, p, res");
      }
    } while (accept(','));
    expect('}');
    if (!seen_p) error("a period p");
    return UPSet::make(n, exc, p, res);
  }

  PAPInj pap_body() {
    expect('{');
    std::vector<std::pair<Int, Int>> table;
    Int n = 0, p = 1;
    std::vector<std::tuple<Int, std::pair<Int, Int>, std::pair<Int, Int>>> pieces;
    do {
      const std::size_t at = pos_;
      const std::string k = key();
      if (k == "table") table = int_map();
      else if (k == "N") n = integer();
      else if (k == "p") p = integer();
      else if (k == "pieces") {
        expect('[');
        if (!accept(']')) {
          do {
            expect('(');
            const Int r = integer();
            expect(',');
            const auto slope = rational();
            expect(',');
            const auto off = rational();
            expect(')');
            pieces.emplace_back(r, slope, off);
          } while (accept(','));
          expect(']');
        }
      } else {
        pos_ = at;
        error("one of table, N, p, pieces");
      }
    } while (accept(','));
    expect('}');
    if (p < 1 || p > kMaxPeriod) fail(ErrorKind::MalformedLiteral, "period out of range");
    if (static_cast<Int>(table.size()) != n) fail(ErrorKind::MalformedLiteral, "table must list exactly 1..N");
    std::vector<Int> values(static_cast<std::size_t>(n), 0);
    for (const auto& [x, y] : table) {
      if (x < 1 || x > n || values[x - 1] != 0) fail(ErrorKind::MalformedLiteral, "table must list exactly 1..N");
      values[x - 1] = y;
    }
    if (static_cast<Int>(pieces.size()) != p) fail(ErrorKind::MalformedLiteral, "need one piece per residue");
    std::vector<Piece> ps(static_cast<std::size_t>(p));
    std::vector<bool> seen(static_cast<std::size_t>(p), false);
    for (const auto& [r, slope, off] : pieces) {
      if (r < 0 || r >= p || seen[r]) fail(ErrorKind::MalformedLiteral, "piece residues must be 0..p-1, once each");
      seen[r] = true;
      // u(x) = slope*x + off on x ≡ r; with x = p q + r this is (slope p) q + slope r + off
      const Int a_num = checked_mul(slope.first, p);
      if (a_num % slope.second != 0) fail(ErrorKind::MalformedLiteral, "slope times period must be an integer");
      const Int a = a_num / slope.second;
      const Int b_num = checked_add(checked_mul(off.first, p), checked_mul(checked_mul(a, r), off.second));
      const Int b_den = checked_mul(off.second, p);
      if (b_num % b_den != 0) fail(ErrorKind::MalformedLiteral, "piece for residue " + std::to_string(r) + " is not integral");
      ps[r] = Piece{a, b_num / b_den};
    }
    return validate(QuasiAffine(std::move(values), p, std::move(ps)));
  }

  MElt inj_body() {
    expect('{');
    std::vector<Int> dom;
    std::vector<std::pair<Int, Int>> table;
    bool seen_a = false, seen_t = false;
    do {
      const std::size_t at = pos_;
      const std::string k = key();
      if (k == "A") dom = int_list(), seen_a = true;
      else if (k == "table") table = int_map(), seen_t = true;
      else {
        pos_ = at;
        error("A or table");
      }
    } while (accept(','));
    expect('}');
    if (!seen_a || !seen_t) error("both A and table");
    std::vector<Int> keys, vals;
    for (const auto& [x, y] : table) keys.push_back(x), vals.push_back(y);
    auto sorted_dom = dom, sorted_keys = keys;
    std::sort(sorted_dom.begin(), sorted_dom.end());
    std::sort(sorted_keys.begin(), sorted_keys.end());
    if (sorted_dom != sorted_keys) fail(ErrorKind::MalformedLiteral, "table keys must be exactly A");
    return MElt::injection(std::move(keys), std::move(vals));
  }

  StarSimplex cfg_body() {
    expect('{');
    Int m = -1, n = -1;
    std::vector<std::vector<Int>> cols;
    bool seen_cols = false;
    do {
      const std::size_t at = pos_;
      const std::string k = key();
      if (k == "m") m = integer();
      else if (k == "n") n = integer();
      else if (k == "cols") {
        seen_cols = true;
        expect('[');
        if (!accept(']')) {
          do cols.push_back(int_list());
          while (accept(','));
          expect(']');
        }
      } else {
        pos_ = at;
        error("one of m, n, cols");
      }
    } while (accept(','));
    expect('}');
    if (m < 0 || !seen_cols) error("m and cols");
    if (static_cast<Int>(cols.size()) != m) fail(ErrorKind::MalformedLiteral, "m must equal the number of columns");
    Int degree = n;
    if (!cols.empty()) {
      degree = static_cast<Int>(cols.front().size()) - 1;
      if (n >= 0 && n != degree) fail(ErrorKind::MalformedLiteral, "n disagrees with the column length");
    }
    if (degree < 0) fail(ErrorKind::MalformedLiteral, "a weight-0 cfg needs n");
    return StarSimplex(degree, std::move(cols));
  }

  OperadicClass class_body() {
    expect('{');
    OperadicClass c;
    bool seen_f = false, seen_p = false;
    do {
      const std::size_t at = pos_;
      const std::string k = key();
      const Value v = expr();
      ValueList items;
      if (const auto* l = std::get_if<ValueList>(&v.v)) items = *l;
      else items = {v};
      if (k == "frame") {
        seen_f = true;
        for (const Value& x : items) c.frame.push_back(want<InjN>(x, "injn values in the frame"));
      } else if (k == "payload") {
        seen_p = true;
        for (const Value& x : items) {
          if (const auto* s = std::get_if<Simplex>(&x.v)) c.payload.push_back(*s);
          else if (const auto* e = std::get_if<MElt>(&x.v)) c.payload.push_back(Simplex::vertex(*e));
          else error("simplices in the payload");
        }
      } else {
        pos_ = at;
        error("frame or payload");
      }
    } while (accept(','));
    expect('}');
    if (!seen_f || !seen_p) error("both frame and payload");
    c.check();
    return c;
  }

  TruncEMSS family_body(const std::string& head) {
    expect('{');
    std::vector<Int> dom;
    Int d = 3;
    do {
      const std::size_t at = pos_;
      const std::string k = key();
      if (k == "A" && head == "EInj") dom = int_list();
      else if (k == "D") d = integer();
      else {
        pos_ = at;
        error(head == "EInj" ? "A or D" : "D");
      }
    } while (accept(','));
    expect('}');
    TruncEMSS x;
    x.base = head == "EInj" ? MSetFamily::injections(dom) : head == "ESelfM" ? MSetFamily::self() : MSetFamily::warning();
    x.max_degree = d;
    return x;
  }
};

template <class T>
T parse_as(std::string_view text, const char* what) {
  Value v = Parser(text).parse_all();
  if (T* p = std::get_if<T>(&v.v)) return std::move(*p);
  fail(ErrorKind::ParseError, std::string("expected ") + what + ", got " + type_name(v));
}

std::string list_text(const ValueList& l) {
  std::string out = "[";
  for (std::size_t i = 0; i < l.size(); ++i) out += (i ? ", " : "") + to_string(l[i]);
  return out + "]";
}

}  // namespace

Value eval(std::string_view expr) { return Parser(expr).parse_all(); }

Simplex parse_simplex(std::string_view text) {
  Value v = Parser(text).parse_all();
  if (auto* e = std::get_if<MElt>(&v.v)) return Simplex::vertex(*e);
  if (auto* s = std::get_if<Simplex>(&v.v)) return *s;
  fail(ErrorKind::ParseError, "expected a simplex, got " + type_name(v));
}

OperadicClass parse_class(std::string_view text) { return parse_as<OperadicClass>(text, "a class"); }
StarSimplex parse_star(std::string_view text) { return parse_as<StarSimplex>(text, "a cfg"); }
TruncEMSS parse_family(std::string_view text) { return parse_as<TruncEMSS>(text, "a family"); }

std::vector<Simplex> parse_simplex_list(std::string_view text) { return factors("factors", Parser(text).parse_all()); }

std::string family_literal(const TruncEMSS& x) {
  std::string out;
  switch (x.base.kind) {
    case MSetFamily::Kind::Injection: {
      out = "EInj{A=[";
      for (std::size_t i = 0; i < x.base.domain.size(); ++i) out += (i ? ", " : "") + std::to_string(x.base.domain[i]);
      out += "], D=" + std::to_string(x.max_degree) + "}";
      break;
    }
    case MSetFamily::Kind::Self: out = "ESelfM{D=" + std::to_string(x.max_degree) + "}"; break;
    case MSetFamily::Kind::Warning: out = "EWarn{D=" + std::to_string(x.max_degree) + "}"; break;
    default: out = x.name();
  }
  if (x.filter == MSetFamily::Filter::Mild) out += "^mu";
  if (x.filter == MSetFamily::Filter::Tame) out += "^tau";
  return out;
}

std::string to_string(const Value& v) {
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Int>) return std::to_string(x);
        else if constexpr (std::is_same_v<T, bool>) return x ? "true" : "false";
        else if constexpr (std::is_same_v<T, Text>) return x.s;
        else if constexpr (std::is_same_v<T, OperadicClass>) {
          std::string out = "class{frame=[";
          for (std::size_t k = 0; k < x.frame.size(); ++k) out += (k ? ", " : "") + to_string(x.frame[k]);
          out += "], payload=[";
          for (std::size_t j = 0; j < x.payload.size(); ++j) out += (j ? ", " : "") + to_string(x.payload[j]);
          return out + "]}";
        } else if constexpr (std::is_same_v<T, TruncEMSS>) return family_literal(x);
        else if constexpr (std::is_same_v<T, ValueList>) return list_text(x);
        else return to_string(x);
      },
      v.v);
}

std::string type_name(const Value& v) {
  static const char* names[] = {"integer", "boolean", "text", "set", "map", "injn", "element", "simplex",
                                "cfg",     "class",   "family", "list"};
  return names[v.v.index()];
}

const std::vector<std::pair<std::string, std::string>>& eval_functions() {
  static const std::vector<std::pair<std::string, std::string>> out = [] {
    std::vector<std::pair<std::string, std::string>> v;
    for (const auto& [name, e] : functions()) v.emplace_back(name, e.signature);
    return v;
  }();
  return out;
}

}  // namespace mildem
