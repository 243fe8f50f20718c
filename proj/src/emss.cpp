#include "mildem/emss.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace mildem {

Simplex face(const Simplex& s, Int i) {
  if (i < 0 || i > s.degree() || s.degree() < 1)
    fail(ErrorKind::IndexOutOfRange, "face d_" + std::to_string(i) + " of a " + std::to_string(s.degree()) + "-simplex");
  Simplex out = s;
  out.coords.erase(out.coords.begin() + i);
  return out;
}

Simplex degeneracy(const Simplex& s, Int i, Int max_degree) {
  if (i < 0 || i > s.degree())
    fail(ErrorKind::IndexOutOfRange,
         "degeneracy s_" + std::to_string(i) + " of a " + std::to_string(s.degree()) + "-simplex");
  if (s.degree() + 1 > max_degree)
    fail(ErrorKind::TruncationExceeded, "degree " + std::to_string(s.degree() + 1) + " exceeds the truncation");
  Simplex out = s;
  out.coords.insert(out.coords.begin() + i, s.coords[i]);
  return out;
}

std::vector<DeltaMap> monotone_maps(Int m, Int n) {
  std::vector<DeltaMap> out;
  DeltaMap f(m + 1, 0);
  std::function<void(Int, Int)> rec = [&](Int pos, Int lo) {
    if (pos > m) {
      out.push_back(f);
      return;
    }
    for (Int v = lo; v <= n; ++v) {
      f[pos] = v;
      rec(pos + 1, v);
    }
  };
  rec(0, 0);
  return out;
}

Simplex pullback(const Simplex& s, const DeltaMap& f) {
  Simplex out;
  for (Int v : f) {
    if (v < 0 || v > s.degree()) fail(ErrorKind::IndexOutOfRange, "structure map leaves [n]");
    out.coords.push_back(s.coords[v]);
  }
  return out;
}

Simplex em_act(const std::vector<PAPInj>& us, const Simplex& s) {
  if (static_cast<Int>(us.size()) != s.degree() + 1)
    fail(ErrorKind::ArityMismatch, "need one map per coordinate");
  Simplex out;
  for (std::size_t k = 0; k < us.size(); ++k) out.coords.push_back(act(us[k], s.coords[k]));
  return out;
}

std::vector<PAPInj> slot(Int degree, Int k, const PAPInj& u) {
  std::vector<PAPInj> out(degree + 1);
  out.at(k) = u;
  return out;
}

std::optional<UPSet> k_support(const Simplex& s, Int k) {
  if (k < 0 || k > s.degree()) fail(ErrorKind::IndexOutOfRange, "k outside [0, n]");
  return minimal_support(s.coords[k]);
}

bool is_k_supported_on(const Simplex& s, Int k, const UPSet& a) {
  if (k < 0 || k > s.degree()) fail(ErrorKind::IndexOutOfRange, "k outside [0, n]");
  return is_supported_on(s.coords[k], a);
}

bool finitely_supported(const Simplex& s) {
  return std::all_of(s.coords.begin(), s.coords.end(), [](const MElt& x) { return is_tame(x); });
}

bool co_infinitely_supported(const Simplex& s) {
  return std::all_of(s.coords.begin(), s.coords.end(), [](const MElt& x) { return is_mild(x); });
}

GroupTwist symmetric_twist(std::size_t domain_size) {
  GroupTwist t{FinGroup::symmetric(static_cast<int>(domain_size)), {}};
  for (const auto& p : t.group.permutations()) {
    std::vector<std::size_t> row;
    for (Int v : p) row.push_back(static_cast<std::size_t>(v - 1));
    t.action.push_back(std::move(row));
  }
  return t;
}

bool TruncEMSS::contains(const Simplex& s) const {
  if (s.degree() < 0 || s.degree() > max_degree) return false;
  for (const MElt& x : s.coords)
    if (!base.contains(x)) return false;
  switch (filter) {
    case MSetFamily::Filter::All: return true;
    case MSetFamily::Filter::Mild: return co_infinitely_supported(s);
    case MSetFamily::Filter::Tame: return finitely_supported(s);
  }
  return false;
}

std::string TruncEMSS::name() const {
  std::string out = "E" + base.name();
  if (filter != MSetFamily::Filter::All) out = "(" + out + (filter == MSetFamily::Filter::Mild ? ")^mu" : ")^tau");
  return out;
}

TruncEMSS filter_tau_mu(const TruncEMSS& x, SimplicialFilter which) {
  TruncEMSS out = x;
  if (which == SimplicialFilter::Tau) {
    out.filter = MSetFamily::Filter::Tame;
  } else if (out.filter == MSetFamily::Filter::All) {
    out.filter = MSetFamily::Filter::Mild;
  }
  return out;
}

MElt twist_act(const GroupTwist& t, int g, const MElt& x) {
  if (x.kind() != MElt::Kind::Injection) fail(ErrorKind::UnsupportedFamily, "group twists act on Inj(A, omega)");
  // (u ∘ g⁻¹)(g·a_i) = u(a_i)
  std::vector<Int> values(x.values().size());
  for (std::size_t i = 0; i < values.size(); ++i) values[t.action[g][i]] = x.values()[i];
  return MElt::injection(x.domain(), std::move(values));
}

std::vector<MElt> injections_upto(const std::vector<Int>& domain, Int bound) {
  std::vector<MElt> out;
  std::vector<Int> values(domain.size());
  std::vector<char> used(bound + 1, 0);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == domain.size()) {
      out.push_back(MElt::injection(domain, values));
      return;
    }
    for (Int v = 1; v <= bound; ++v) {
      if (used[v]) continue;
      used[v] = 1;
      values[i] = v;
      rec(i + 1);
      used[v] = 0;
    }
  };
  rec(0);
  return out;
}

FixedPointReport graph_fixed_points(const TruncEMSS& x, const FinGroup& h, const UniversalEmbedding& emb,
                                    const std::vector<int>& phi, Int n, Int entry_bound) {
  if (x.base.kind != MSetFamily::Kind::Injection)
    fail(ErrorKind::UnsupportedFamily, "fixed points are computed for E Inj(A, omega) with finite A");
  if (n < 0 || n > x.max_degree) fail(ErrorKind::TruncationExceeded, "degree beyond the truncation");
  if (static_cast<int>(phi.size()) != h.order()) fail(ErrorKind::ArityMismatch, "phi needs one value per element of H");
  const GroupTwist twist = x.twist ? *x.twist : GroupTwist{};
  const std::size_t size = x.base.domain.size();
  // Without a twist every φ(h) must act trivially.
  auto permuted = [&](int g, std::size_t i) { return x.twist ? twist.action[g][i] : i; };

  std::vector<MElt> fixed;
  for (const MElt& u : injections_upto(x.base.domain, entry_bound)) {
    if (!x.base.contains(u)) continue;
    bool ok = true;
    for (int g = 0; g < h.order() && ok; ++g)
      for (std::size_t i = 0; i < size && ok; ++i) ok = emb.maps[g](u.values()[i]) == u.values()[permuted(phi[g], i)];
    if (ok) fixed.push_back(u);
  }

  FixedPointReport report;
  report.entry_bound = entry_bound;
  report.bound_warning = entry_bound % emb.block_size != 0;
  std::vector<std::size_t> idx(n + 1, 0);
  if (fixed.empty()) return report;
  for (;;) {
    Simplex s;
    for (std::size_t i : idx) s.coords.push_back(fixed[i]);
    if (x.contains(s)) report.simplices.push_back(std::move(s));
    Int pos = n;
    while (pos >= 0 && ++idx[pos] == fixed.size()) idx[pos--] = 0;
    if (pos < 0) break;
  }
  return report;
}

std::string to_string(const Simplex& s) {
  std::string out = "[";
  for (std::size_t k = 0; k < s.coords.size(); ++k) out += (k ? "; " : "") + to_string(s.coords[k]);
  return out + "]";
}

}  // namespace mildem
