#include "mildem/group.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <set>

namespace mildem {

FinGroup::FinGroup(std::vector<std::vector<int>> table) : table_(std::move(table)) {
  const int n = order();
  if (n < 1) fail(ErrorKind::MalformedLiteral, "a group has at least one element");
  for (const auto& row : table_) {
    if (static_cast<int>(row.size()) != n) fail(ErrorKind::MalformedLiteral, "multiplication table is not square");
    for (int v : row)
      if (v < 0 || v >= n) fail(ErrorKind::MalformedLiteral, "multiplication table leaves the group");
  }
  identity_ = -1;
  for (int e = 0; e < n && identity_ < 0; ++e) {
    bool ok = true;
    for (int g = 0; g < n && ok; ++g) ok = table_[e][g] == g && table_[g][e] == g;
    if (ok) identity_ = e;
  }
  if (identity_ < 0) fail(ErrorKind::MalformedLiteral, "no identity element");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (table_[table_[a][b]][c] != table_[a][table_[b][c]]) fail(ErrorKind::MalformedLiteral, "not associative");
  inverse_.assign(n, -1);
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h)
      if (table_[g][h] == identity_) inverse_[g] = h;
  if (std::count(inverse_.begin(), inverse_.end(), -1) > 0) fail(ErrorKind::MalformedLiteral, "missing inverse");
}

FinGroup FinGroup::trivial() { return cyclic(1); }

FinGroup FinGroup::cyclic(int n) {
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  return FinGroup(std::move(t));
}

FinGroup FinGroup::symmetric(int n) {
  std::vector<std::vector<Int>> perms;
  std::vector<Int> p(n);
  std::iota(p.begin(), p.end(), Int{1});
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  std::map<std::vector<Int>, int> index;
  for (std::size_t i = 0; i < perms.size(); ++i) index[perms[i]] = static_cast<int>(i);
  const int m = static_cast<int>(perms.size());
  std::vector<std::vector<int>> t(m, std::vector<int>(m));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      // (ab)(i) = a(b(i))
      std::vector<Int> c(n);
      for (int i = 0; i < n; ++i) c[i] = perms[a][perms[b][i] - 1];
      t[a][b] = index.at(c);
    }
  FinGroup g(std::move(t));
  g.perms_ = std::move(perms);
  return g;
}

int subgroup_order(Subgroup s) { return std::popcount(s); }

namespace {

Subgroup closure(const FinGroup& g, Subgroup gens) {
  Subgroup s = gens | (Subgroup{1} << g.identity());
  for (bool grew = true; grew;) {
    grew = false;
    for (int a = 0; a < g.order(); ++a) {
      if (!(s >> a & 1)) continue;
      for (int b = 0; b < g.order(); ++b) {
        if (!(s >> b & 1)) continue;
        const int c = g.mul(a, b);
        if (!(s >> c & 1)) {
          s |= Subgroup{1} << c;
          grew = true;
        }
      }
    }
  }
  return s;
}

Subgroup conjugate_by(const FinGroup& g, Subgroup s, int x) {
  Subgroup out = 0;
  for (int a = 0; a < g.order(); ++a)
    if (s >> a & 1) out |= Subgroup{1} << g.mul(g.mul(x, a), g.inverse(x));
  return out;
}

void sort_subgroups(std::vector<Subgroup>& v) {
  std::sort(v.begin(), v.end(), [](Subgroup a, Subgroup b) {
    const int oa = subgroup_order(a), ob = subgroup_order(b);
    return oa != ob ? oa < ob : a < b;
  });
}

}  // namespace

std::vector<Subgroup> subgroups(const FinGroup& g) {
  if (g.order() > kMaxGroupOrder) fail(ErrorKind::GroupTooLarge, "order " + std::to_string(g.order()));
  std::set<Subgroup> seen{closure(g, 0)};
  std::vector<Subgroup> frontier(seen.begin(), seen.end());
  while (!frontier.empty()) {
    std::vector<Subgroup> next;
    for (Subgroup s : frontier)
      for (int x = 0; x < g.order(); ++x) {
        if (s >> x & 1) continue;
        const Subgroup t = closure(g, s | (Subgroup{1} << x));
        if (seen.insert(t).second) next.push_back(t);
      }
    frontier = std::move(next);
  }
  std::vector<Subgroup> out(seen.begin(), seen.end());
  sort_subgroups(out);
  return out;
}

bool conjugate(const FinGroup& g, Subgroup a, Subgroup b) {
  for (int x = 0; x < g.order(); ++x)
    if (conjugate_by(g, a, x) == b) return true;
  return false;
}

std::vector<Subgroup> subgroup_classes(const FinGroup& g) {
  std::vector<Subgroup> reps;
  for (Subgroup s : subgroups(g)) {
    const bool fresh = std::none_of(reps.begin(), reps.end(), [&](Subgroup r) { return conjugate(g, r, s); });
    if (fresh) reps.push_back(s);
  }
  return reps;
}

UniversalEmbedding universal_embedding(const FinGroup& h, int max_order) {
  if (h.order() > max_order) fail(ErrorKind::GroupTooLarge, "order " + std::to_string(h.order()));
  UniversalEmbedding out;
  // Positions in a block are cosets xK; position index = offset + coset number.
  std::vector<std::vector<Subgroup>> cosets;
  Int offset = 0;
  for (Subgroup k : subgroup_classes(h)) {
    std::vector<Subgroup> cs;
    for (int x = 0; x < h.order(); ++x) {
      Subgroup c = 0;
      for (int a = 0; a < h.order(); ++a)
        if (k >> a & 1) c |= Subgroup{1} << h.mul(x, a);
      if (std::find(cs.begin(), cs.end(), c) == cs.end()) cs.push_back(c);
    }
    out.orbit_types.push_back(k);
    out.orbit_offsets.push_back(offset);
    offset += static_cast<Int>(cs.size());
    cosets.push_back(std::move(cs));
  }
  const Int b = offset;
  out.block_size = b;
  for (int g = 0; g < h.order(); ++g) {
    // π_g(i): the position of g·(coset i)
    std::vector<Int> pi(b);
    for (std::size_t t = 0; t < cosets.size(); ++t) {
      const auto& cs = cosets[t];
      for (std::size_t i = 0; i < cs.size(); ++i) {
        Subgroup moved = 0;
        for (int a = 0; a < h.order(); ++a)
          if (cs[i] >> a & 1) moved |= Subgroup{1} << h.mul(g, a);
        const auto j = std::find(cs.begin(), cs.end(), moved) - cs.begin();
        pi[out.orbit_offsets[t] + static_cast<Int>(i)] = out.orbit_offsets[t] + j;
      }
    }
    // x = b*q + r: position r - 1 of block q for r >= 1, the last position of block q - 1 for r = 0
    std::vector<Piece> pieces(b);
    pieces[0] = Piece{b, pi[b - 1] + 1 - b};
    for (Int r = 1; r < b; ++r) pieces[r] = Piece{b, pi[r - 1] + 1};
    out.maps.push_back(trust_injective(QuasiAffine({}, b, std::move(pieces))));
  }
  return out;
}

bool is_homomorphism(const FinGroup& h, const UniversalEmbedding& emb) {
  for (int g = 0; g < h.order(); ++g) {
    if (find_collision(emb.maps[g].map()) || !is_bijective(emb.maps[g])) return false;
    for (int k = 0; k < h.order(); ++k)
      if (!(compose(emb.maps[g], emb.maps[k]) == emb.maps[h.mul(g, k)])) return false;
  }
  return emb.maps[h.identity()] == maps::identity();
}

Subgroup stabilizer(const FinGroup& h, const UniversalEmbedding& emb, Int x) {
  Subgroup s = 0;
  for (int g = 0; g < h.order(); ++g)
    if (emb.maps[g](x) == x) s |= Subgroup{1} << g;
  return s;
}

}  // namespace mildem
