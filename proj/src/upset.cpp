#include "mildem/upset.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace mildem {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::MalformedLiteral: return "MalformedLiteral";
    case ErrorKind::NotInjective: return "NotInjective";
    case ErrorKind::FiniteSet: return "FiniteSet";
    case ErrorKind::NotCoinfinite: return "NotCoinfinite";
    case ErrorKind::PreconditionFailed: return "PreconditionFailed";
    case ErrorKind::SearchExhausted: return "SearchExhausted";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::TruncationExceeded: return "TruncationExceeded";
    case ErrorKind::ArityMismatch: return "ArityMismatch";
    case ErrorKind::GroupTooLarge: return "GroupTooLarge";
    case ErrorKind::UnsupportedFamily: return "UnsupportedFamily";
    case ErrorKind::NoMinimalSupport: return "NoMinimalSupport";
    case ErrorKind::WitnessInvalid: return "WitnessInvalid";
    case ErrorKind::VerificationFailed: return "VerificationFailed";
    case ErrorKind::NotSummable: return "NotSummable";
    case ErrorKind::UnknownCheck: return "UnknownCheck";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::Overflow: return "Overflow";
  }
  return "Error";
}

UPSet::UPSet() = default;

UPSet UPSet::from_bits(Int threshold, const std::vector<char>& below, Int period,
                       const std::vector<char>& tail) {
  // Minimal period: the smallest divisor d of `period` with tail[r] == tail[r mod d].
  Int best = period;
  for (Int d = 1; d < period; ++d) {
    if (period % d != 0) continue;
    bool ok = true;
    for (Int r = d; r < period && ok; ++r) ok = tail[r] == tail[r % d];
    if (ok) {
      best = d;
      break;
    }
  }
  // Minimal threshold: drop trailing exceptional positions that follow the tail.
  Int n = threshold;
  while (n > 0 && static_cast<bool>(below[n - 1]) == static_cast<bool>(tail[n % best])) --n;

  UPSet out;
  out.threshold_ = n;
  out.period_ = best;
  for (Int x = 1; x <= n; ++x)
    if (below[x - 1]) out.exceptional_.push_back(x);
  for (Int r = 0; r < best; ++r)
    if (tail[r]) out.residues_.push_back(r);
  return out;
}

UPSet UPSet::make(Int threshold, std::vector<Int> exceptional, Int period, std::vector<Int> residues) {
  if (threshold < 0) fail(ErrorKind::MalformedLiteral, "negative threshold");
  if (period < 1) fail(ErrorKind::MalformedLiteral, "period must be positive");
  if (period > kMaxPeriod || threshold > kMaxPeriod) fail(ErrorKind::MalformedLiteral, "field too large");
  std::vector<char> below(threshold, 0), tail(period, 0);
  for (Int x : exceptional) {
    if (x < 1 || x > threshold)
      fail(ErrorKind::MalformedLiteral, "exceptional element " + std::to_string(x) + " outside {1..N}");
    below[x - 1] = 1;
  }
  for (Int r : residues) {
    if (r < 0 || r >= period)
      fail(ErrorKind::MalformedLiteral, "residue " + std::to_string(r) + " outside {0..p-1}");
    tail[r] = 1;
  }
  return from_bits(threshold, below, period, tail);
}

UPSet UPSet::finite(std::vector<Int> elements) {
  Int n = 0;
  for (Int x : elements) {
    if (x < 1) fail(ErrorKind::MalformedLiteral, "elements of omega start at 1");
    n = std::max(n, x);
  }
  return make(n, std::move(elements), 1, {});
}

UPSet UPSet::periodic(Int period, std::vector<Int> residues) { return make(0, {}, period, std::move(residues)); }

UPSet UPSet::progression(Int start, Int step) {
  if (start < 1 || step < 1) fail(ErrorKind::MalformedLiteral, "progression needs start >= 1, step >= 1");
  return make(start - 1, {}, step, {floor_mod(start, step)});
}

UPSet UPSet::above(Int n) { return make(std::max<Int>(n, 0), {}, 1, {0}); }

UPSet UPSet::interval(Int lo, Int hi) {
  std::vector<Int> xs;
  for (Int x = std::max<Int>(lo, 1); x <= hi; ++x) xs.push_back(x);
  return finite(std::move(xs));
}

bool UPSet::contains(Int x) const {
  if (x < 1) return false;
  if (x <= threshold_) return std::binary_search(exceptional_.begin(), exceptional_.end(), x);
  return std::binary_search(residues_.begin(), residues_.end(), x % period_);
}

bool UPSet::is_coinfinite() const { return static_cast<Int>(residues_.size()) < period_; }
bool UPSet::is_cofinite() const { return static_cast<Int>(residues_.size()) == period_; }

std::size_t UPSet::size() const {
  if (!is_finite()) fail(ErrorKind::PreconditionFailed, "size() of an infinite set");
  return exceptional_.size();
}

std::vector<Int> UPSet::elements() const {
  if (!is_finite()) fail(ErrorKind::PreconditionFailed, "elements() of an infinite set");
  return exceptional_;
}

Int UPSet::nth(Int k) const {
  if (k < 1) fail(ErrorKind::IndexOutOfRange, "nth index starts at 1");
  const Int e = static_cast<Int>(exceptional_.size());
  if (k <= e) return exceptional_[k - 1];
  if (residues_.empty()) fail(ErrorKind::FiniteSet, "nth beyond the end of a finite set");
  const Int r = static_cast<Int>(residues_.size());
  const Int j = k - e - 1;
  // First tail member with each residue, in increasing order.
  Int base = threshold_ + 1;
  std::vector<Int> heads;
  for (Int x = base; x < base + period_; ++x)
    if (std::binary_search(residues_.begin(), residues_.end(), x % period_)) heads.push_back(x);
  return heads[j % r] + period_ * (j / r);
}

std::vector<Int> UPSet::first(std::size_t count) const {
  std::vector<Int> out;
  const std::size_t total = is_finite() ? exceptional_.size() : count;
  for (std::size_t k = 1; k <= std::min(count, total); ++k) out.push_back(nth(static_cast<Int>(k)));
  return out;
}

std::vector<Int> UPSet::members_upto(Int bound) const {
  std::vector<Int> out;
  for (Int x = 1; x <= bound; ++x)
    if (contains(x)) out.push_back(x);
  return out;
}

Int UPSet::count_upto(Int x) const {
  if (x < 1) return 0;
  Int count = static_cast<Int>(std::upper_bound(exceptional_.begin(), exceptional_.end(), x) - exceptional_.begin());
  if (x <= threshold_) return count;
  for (Int r : residues_) {
    // members y with threshold < y <= x and y mod p == r
    count += floor_div(x - r, period_) - floor_div(threshold_ - r, period_);
  }
  return count;
}

namespace {

template <class Pred>
UPSet combine(const UPSet& s, const UPSet& t, Pred pred) {
  const Int n = std::max(s.threshold(), t.threshold());
  const Int p = checked_lcm(s.period(), t.period());
  std::vector<char> below(n), tail(p);
  for (Int x = 1; x <= n; ++x) below[x - 1] = pred(s.contains(x), t.contains(x));
  for (Int r = 0; r < p; ++r) {
    // a representative above both thresholds with residue r mod p
    Int x = n + 1 + floor_mod(r - (n + 1), p);
    tail[r] = pred(s.contains(x), t.contains(x));
  }
  return UPSet::from_bits(n, below, p, tail);
}

}  // namespace

UPSet set_union(const UPSet& s, const UPSet& t) {
  return combine(s, t, [](bool a, bool b) { return a || b; });
}
UPSet set_intersection(const UPSet& s, const UPSet& t) {
  return combine(s, t, [](bool a, bool b) { return a && b; });
}
UPSet set_difference(const UPSet& s, const UPSet& t) {
  return combine(s, t, [](bool a, bool b) { return a && !b; });
}
UPSet complement(const UPSet& s) {
  return combine(s, s, [](bool a, bool) { return !a; });
}
bool is_subset(const UPSet& s, const UPSet& t) { return set_difference(s, t).empty(); }
bool disjoint(const UPSet& s, const UPSet& t) { return set_intersection(s, t).empty(); }

UPSet boolean(BoolOp op, const UPSet& s, const UPSet& t) {
  switch (op) {
    case BoolOp::Union: return set_union(s, t);
    case BoolOp::Intersect: return set_intersection(s, t);
    case BoolOp::Complement: return complement(s);
  }
  return s;
}

SetClass classify(const UPSet& s) {
  if (s.is_finite()) return {SetClass::Kind::Finite, s.size()};
  UPSet c = complement(s);
  if (c.is_finite()) return {SetClass::Kind::Cofinite, c.size()};
  return {SetClass::Kind::BiInfinite, 0};
}

Int comparison_horizon(const UPSet& s, const UPSet& t) {
  return std::max(s.threshold(), t.threshold()) + checked_lcm(s.period(), t.period());
}

namespace {

void print_list(std::ostream& os, const std::vector<Int>& xs) {
  os << '[';
  for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? ", " : "") << xs[i];
  os << ']';
}

}  // namespace

std::ostream& operator<<(std::ostream& os, const UPSet& s) {
  if (s.is_finite()) {
    os << "up{finite=";
    print_list(os, s.exceptional());
    return os << '}';
  }
  if (s.threshold() == 0) {
    os << "up{mod " << s.period() << " in ";
    print_list(os, s.residues());
    return os << '}';
  }
  os << "up{N=" << s.threshold() << ", exc=";
  print_list(os, s.exceptional());
  os << ", p=" << s.period() << ", res=";
  print_list(os, s.residues());
  return os << '}';
}

std::string to_string(const UPSet& s) {
  std::ostringstream os;
  os << s;
  return os.str();
}

}  // namespace mildem
