#include "mildem/staralg.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "mildem/gen.hpp"

namespace mildem {

StarSimplex::StarSimplex(Int degree, std::vector<std::vector<Int>> columns)
    : degree_(degree), columns_(std::move(columns)) {
  if (degree < 0) fail(ErrorKind::MalformedLiteral, "negative degree");
  for (const auto& c : columns_) {
    if (static_cast<Int>(c.size()) != degree + 1)
      fail(ErrorKind::MalformedLiteral, "column length differs from degree + 1");
    for (Int v : c)
      if (v < 1) fail(ErrorKind::MalformedLiteral, "values lie in omega");
  }
  for (Int k = 0; k <= degree; ++k) {
    std::set<Int> seen;
    for (const auto& c : columns_)
      if (!seen.insert(c[k]).second)
        fail(ErrorKind::MalformedLiteral, "value " + std::to_string(c[k]) + " repeats at level " + std::to_string(k));
  }
  std::sort(columns_.begin(), columns_.end());
}

UPSet StarSimplex::support(Int k) const {
  if (k < 0 || k > degree_) fail(ErrorKind::IndexOutOfRange, "level outside [0, n]");
  std::vector<Int> xs;
  for (const auto& c : columns_) xs.push_back(c[k]);
  return UPSet::finite(std::move(xs));
}

Simplex StarSimplex::as_simplex() const {
  std::vector<Int> domain(weight());
  std::iota(domain.begin(), domain.end(), Int{1});
  Simplex s;
  for (Int k = 0; k <= degree_; ++k) {
    std::vector<Int> values;
    for (const auto& c : columns_) values.push_back(c[k]);
    s.coords.push_back(MElt::injection(domain, std::move(values)));
  }
  return s;
}

namespace {

StarSimplex juxtapose(Int degree, const std::vector<StarSimplex>& parts) {
  std::vector<std::vector<Int>> cols;
  for (const StarSimplex& p : parts) cols.insert(cols.end(), p.columns().begin(), p.columns().end());
  return StarSimplex(degree, std::move(cols));
}

}  // namespace

bool summable(const StarSimplex& a, const StarSimplex& b) {
  if (a.degree() != b.degree()) fail(ErrorKind::ArityMismatch, "summands of different degrees");
  return in_box({a.as_simplex(), b.as_simplex()});
}

StarSimplex sum(const StarSimplex& a, const StarSimplex& b) {
  if (a.degree() != b.degree()) fail(ErrorKind::ArityMismatch, "summands of different degrees");
  const BoxResult r = box_membership({a.as_simplex(), b.as_simplex()});
  if (const auto* bad = std::get_if<NotInBox>(&r)) fail(ErrorKind::NotSummable, to_string(*bad));
  return juxtapose(a.degree(), {a, b});
}

StarSimplex i_action(const std::vector<InjN>& frame, const std::vector<StarSimplex>& operands) {
  if (frame.empty()) fail(ErrorKind::ArityMismatch, "empty frame");
  const Int n = static_cast<Int>(frame.size()) - 1;
  std::vector<StarSimplex> moved;
  for (std::size_t j = 0; j < operands.size(); ++j) {
    const StarSimplex& x = operands[j];
    if (x.degree() != n) fail(ErrorKind::ArityMismatch, "operand degree differs from the frame length");
    std::vector<std::vector<Int>> cols = x.columns();
    for (auto& c : cols)
      for (Int k = 0; k <= n; ++k) {
        if (frame[k].arity() != operands.size()) fail(ErrorKind::ArityMismatch, "frame arity differs from the operand count");
        c[k] = frame[k](j, c[k]);
      }
    moved.emplace_back(n, std::move(cols));
  }
  if (operands.empty())
    for (const InjN& f : frame)
      if (f.arity() != 0) fail(ErrorKind::ArityMismatch, "frame arity differs from the operand count");
  return juxtapose(n, moved);
}

StarSimplex face(const StarSimplex& a, Int i) {
  if (a.degree() < 1 || i < 0 || i > a.degree()) fail(ErrorKind::IndexOutOfRange, "face index");
  auto cols = a.columns();
  for (auto& c : cols) c.erase(c.begin() + i);
  return StarSimplex(a.degree() - 1, std::move(cols));
}

StarSimplex degeneracy(const StarSimplex& a, Int i) {
  if (i < 0 || i > a.degree()) fail(ErrorKind::IndexOutOfRange, "degeneracy index");
  auto cols = a.columns();
  for (auto& c : cols) c.insert(c.begin() + i, c[i]);
  return StarSimplex(a.degree() + 1, std::move(cols));
}

StarSimplex act(const std::vector<PAPInj>& us, const StarSimplex& a) {
  if (static_cast<Int>(us.size()) != a.degree() + 1) fail(ErrorKind::ArityMismatch, "need one map per level");
  auto cols = a.columns();
  for (auto& c : cols)
    for (std::size_t k = 0; k < us.size(); ++k) c[k] = us[k](c[k]);
  return StarSimplex(a.degree(), std::move(cols));
}

std::vector<StarSimplex> all_star_simplices(std::size_t weight, Int degree, Int bound) {
  std::vector<std::vector<Int>> all_cols;
  std::vector<Int> col(degree + 1, 1);
  for (;;) {
    all_cols.push_back(col);
    Int pos = degree;
    while (pos >= 0 && ++col[pos] > bound) col[pos--] = 1;
    if (pos < 0) break;
  }
  std::vector<StarSimplex> out;
  std::vector<std::size_t> pick;
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    if (pick.size() == weight) {
      std::vector<std::vector<Int>> cols;
      for (std::size_t i : pick) cols.push_back(all_cols[i]);
      out.emplace_back(degree, std::move(cols));
      return;
    }
    for (std::size_t i = from; i < all_cols.size(); ++i) {
      bool clash = false;
      for (std::size_t p : pick)
        for (Int k = 0; k <= degree && !clash; ++k) clash = all_cols[p][k] == all_cols[i][k];
      if (clash) continue;
      pick.push_back(i);
      rec(i + 1);
      pick.pop_back();
    }
  };
  rec(0);
  return out;
}

bool CmonReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const CmonCheck& c) { return c.failures.empty(); });
}

namespace {

// Weight `m` with values in [1, bound] avoiding `taken[k]` at level k.
StarSimplex random_star(Rng& rng, std::size_t m, Int degree, Int bound, std::vector<std::set<Int>>& taken) {
  std::vector<std::vector<Int>> cols(m, std::vector<Int>(degree + 1));
  for (Int k = 0; k <= degree; ++k)
    for (auto& c : cols) {
      Int v;
      do v = rng.uniform(1, bound);
      while (taken[k].count(v));
      taken[k].insert(v);
      c[k] = v;
    }
  return StarSimplex(degree, std::move(cols));
}

// Pairwise summable simplices of random weights.
std::vector<StarSimplex> summable_family(Rng& rng, std::size_t count, const CmonBounds& b) {
  const Int degree = rng.uniform(0, b.max_degree);
  // room for every column at every level
  const Int bound = std::max<Int>(b.max_entry, static_cast<Int>(count * b.max_weight) + 2);
  std::vector<std::set<Int>> taken(degree + 1);
  std::vector<StarSimplex> out;
  for (std::size_t i = 0; i < count; ++i)
    out.push_back(random_star(rng, static_cast<std::size_t>(rng.uniform(0, static_cast<Int>(b.max_weight))), degree,
                              bound, taken));
  return out;
}

std::string show(std::initializer_list<StarSimplex> xs) {
  std::string out;
  for (const StarSimplex& x : xs) out += (out.empty() ? "" : ", ") + to_string(x);
  return out;
}

}  // namespace

CmonReport verify_cmon(const CmonBounds& b, std::uint64_t seed) {
  CmonReport rep;
  rep.checks.reserve(16);
  auto add = [&](std::string name) -> CmonCheck& {
    rep.checks.push_back(CmonCheck{std::move(name), 0, {}});
    return rep.checks.back();
  };

  {
    CmonCheck& unit = add("unit");
    CmonCheck& empty = add("no positive-weight vertex supported on the empty set");
    for (Int n = 0; n <= b.max_degree; ++n)
      for (std::size_t m = 0; m <= b.max_weight; ++m)
        for (const StarSimplex& a : all_star_simplices(m, n, b.max_entry)) {
          ++unit.instances;
          const StarSimplex e = StarSimplex::unit(n);
          if (!(sum(a, e) == a) || !(sum(e, a) == a)) unit.failures.push_back(show({a}));
          if (n == 0 && m > 0) {
            ++empty.instances;
            if (a.support(0).empty()) empty.failures.push_back(show({a}));
          }
        }
  }

  CmonCheck& comm = add("commutativity");
  for (Int n = 0; n <= b.max_degree; ++n) {
    std::vector<std::vector<StarSimplex>> by_weight;
    for (std::size_t m = 0; m <= b.max_weight; ++m) by_weight.push_back(all_star_simplices(m, n, b.max_entry));
    for (std::size_t m1 = 0; m1 <= b.max_weight; ++m1)
      for (std::size_t m2 = m1; m1 + m2 <= b.max_weight; ++m2)
        for (const StarSimplex& x : by_weight[m1])
          for (const StarSimplex& y : by_weight[m2]) {
            ++comm.instances;
            const bool s = summable(x, y);
            if (s != summable(y, x) || (s && !(sum(x, y) == sum(y, x)))) comm.failures.push_back(show({x, y}));
          }
  }
  CmonCheck& supp = add("support of a sum");
  CmonCheck& simp = add("faces and degeneracies");
  CmonCheck& eqv = add("E M-action");
  CmonCheck& norm = add("normal form");
  for (std::size_t t = 0; t < b.pairs; ++t) {
    Rng rng = trial_rng(seed, t);
    const auto ab = summable_family(rng, 2, b);
    const StarSimplex &x = ab[0], &y = ab[1];
    const StarSimplex s = sum(x, y);
    ++comm.instances;
    if (!(s == sum(y, x))) comm.failures.push_back(show({x, y}));
    ++supp.instances;
    for (Int k = 0; k <= s.degree(); ++k)
      if (s.support(k) != set_union(x.support(k), y.support(k))) {
        supp.failures.push_back(show({x, y}));
        break;
      }
    ++simp.instances;
    bool ok = true;
    for (Int i = 0; i <= s.degree(); ++i) {
      if (s.degree() >= 1) ok = ok && face(s, i) == sum(face(x, i), face(y, i));
      ok = ok && degeneracy(s, i) == sum(degeneracy(x, i), degeneracy(y, i));
    }
    if (!ok) simp.failures.push_back(show({x, y}));
    ++eqv.instances;
    std::vector<PAPInj> us;
    for (Int k = 0; k <= s.degree(); ++k) us.push_back(random_injection(rng));
    if (!(act(us, s) == sum(act(us, x), act(us, y)))) eqv.failures.push_back(show({x, y}));
    ++norm.instances;
    auto cols = s.columns();
    std::shuffle(cols.begin(), cols.end(), rng.engine());
    if (!(StarSimplex(s.degree(), cols) == s)) norm.failures.push_back(show({s}));
  }

  CmonCheck& assoc = add("associativity");
  for (std::size_t t = 0; t < b.triples; ++t) {
    Rng rng = trial_rng(seed ^ 0xa55aULL, t);
    const auto xyz = summable_family(rng, 3, b);
    ++assoc.instances;
    if (!(sum(sum(xyz[0], xyz[1]), xyz[2]) == sum(xyz[0], sum(xyz[1], xyz[2]))))
      assoc.failures.push_back(show({xyz[0], xyz[1], xyz[2]}));
  }

  CmonCheck& cons = add("i-action recovers the sum");
  CmonCheck& rel = add("i-action respects the defining relation");
  for (std::size_t t = 0; t < b.actions; ++t) {
    Rng rng = trial_rng(seed ^ 0x1d1dULL, t);
    const auto ab = summable_family(rng, 2, b);
    const StarSimplex &x = ab[0], &y = ab[1];
    ++cons.instances;
    const OperadicClass c = phi_inverse({x.as_simplex(), y.as_simplex()});
    if (!(i_action(c.frame, {x, y}) == sum(x, y))) cons.failures.push_back(show({x, y}));

    ++rel.instances;
    std::vector<InjN> frame;
    std::vector<std::vector<PAPInj>> us;
    for (Int k = 0; k <= x.degree(); ++k) {
      frame.push_back(random_injn(rng, 2));
      us.push_back({random_injection(rng), random_injection(rng)});
    }
    std::vector<InjN> moved;
    std::vector<PAPInj> ux, uy;
    for (Int k = 0; k <= x.degree(); ++k) {
      moved.push_back(precompose(frame[k], us[k]));
      ux.push_back(us[k][0]);
      uy.push_back(us[k][1]);
    }
    if (!(i_action(moved, {x, y}) == i_action(frame, {act(ux, x), act(uy, y)}))) rel.failures.push_back(show({x, y}));
  }
  return rep;
}

std::string to_string(const StarSimplex& a) {
  std::string out = "cfg{m=" + std::to_string(a.weight());
  if (a.weight() == 0) out += ", n=" + std::to_string(a.degree());
  out += ", cols=[";
  for (std::size_t i = 0; i < a.columns().size(); ++i) {
    out += i ? ", [" : "[";
    for (std::size_t k = 0; k < a.columns()[i].size(); ++k) out += (k ? ", " : "") + std::to_string(a.columns()[i][k]);
    out += "]";
  }
  return out + "]}";
}

}  // namespace mildem
