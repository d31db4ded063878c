#include "tbuchi/dbm.hpp"

#include <cassert>
#include <stdexcept>

namespace tbuchi {

Bound Bound::operator+(Bound o) const {
  if (is_infinity() || o.is_infinity()) return infinity();
  int v;
  if (__builtin_add_overflow(value(), o.value(), &v))
    throw std::overflow_error("difference bound overflow");
  std::int32_t raw;
  if (__builtin_mul_overflow(v, 2, &raw)) throw std::overflow_error("difference bound overflow");
  if (!is_strict() && !o.is_strict()) {
    if (__builtin_add_overflow(raw, 1, &raw)) throw std::overflow_error("difference bound overflow");
  }
  if (raw == kInfinityRaw) throw std::overflow_error("difference bound overflow");
  return Bound(raw);
}

std::string Bound::text() const {
  if (is_infinity()) return "<inf";
  return (is_strict() ? "<" : "<=") + std::to_string(value());
}

Dbm::Dbm(unsigned dim) : dim_(dim), m_(dim * dim, Bound::infinity()) {
  assert(dim >= 1);
  for (unsigned i = 0; i < dim; ++i) set(i, i, Bound::le_zero());
  for (unsigned j = 0; j < dim; ++j) set(0, j, Bound::le_zero());
}

Dbm Dbm::origin(unsigned dim) {
  Dbm d(dim);
  for (unsigned i = 0; i < dim; ++i)
    for (unsigned j = 0; j < dim; ++j) d.set(i, j, Bound::le_zero());
  return d;
}

void Dbm::tighten(unsigned i, unsigned j, Bound b) {
  if (b < at(i, j)) set(i, j, b);
}

void Dbm::constrain(const AtomicConstraint& atom) {
  const ClockId x = atom.clock;
  const int c = atom.constant;
  switch (atom.rel) {
    case Rel::lt: tighten(x, 0, Bound::strict(c)); break;
    case Rel::le: tighten(x, 0, Bound::weak(c)); break;
    case Rel::eq:
      tighten(x, 0, Bound::weak(c));
      tighten(0, x, Bound::weak(-c));
      break;
    case Rel::ge: tighten(0, x, Bound::weak(-c)); break;
    case Rel::gt: tighten(0, x, Bound::strict(-c)); break;
  }
}

bool Dbm::close() {
  for (unsigned k = 0; k < dim_; ++k)
    for (unsigned i = 0; i < dim_; ++i) {
      const Bound ik = at(i, k);
      if (ik.is_infinity()) continue;
      for (unsigned j = 0; j < dim_; ++j) {
        const Bound kj = at(k, j);
        if (kj.is_infinity()) continue;
        const Bound sum = ik + kj;
        if (sum < at(i, j)) set(i, j, sum);
      }
    }
  for (unsigned i = 0; i < dim_; ++i)
    if (at(i, i) < Bound::le_zero()) return false;
  return true;
}

std::optional<Zone> Zone::canonical(Dbm d) {
  if (!d.close()) return std::nullopt;
  return Zone(std::move(d));
}

std::size_t Zone::hash() const {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](std::uint64_t v) {
    h ^= v;
    h *= 1099511628211ull;
  };
  mix(dim());
  for (unsigned i = 0; i < dim(); ++i)
    for (unsigned j = 0; j < dim(); ++j) mix(static_cast<std::uint32_t>(at(i, j).raw()));
  return static_cast<std::size_t>(h);
}

bool Zone::includes(const Zone& o) const {
  assert(dim() == o.dim());
  for (unsigned i = 0; i < dim(); ++i)
    for (unsigned j = 0; j < dim(); ++j)
      if (at(i, j) < o.at(i, j)) return false;
  return true;
}

bool Zone::contains_valuation(const std::vector<long long>& scaled, long long den) const {
  assert(scaled.size() == dim() && scaled[0] == 0 && den > 0);
  for (unsigned i = 0; i < dim(); ++i)
    for (unsigned j = 0; j < dim(); ++j) {
      const Bound b = at(i, j);
      if (b.is_infinity()) continue;
      const long long diff = scaled[i] - scaled[j];
      const long long rhs = static_cast<long long>(b.value()) * den;
      if (b.is_strict() ? diff >= rhs : diff > rhs) return false;
    }
  return true;
}

namespace {

Zone expect_nonempty(std::optional<Zone> z, const char* op) {
  if (!z) throw std::logic_error(std::string(op) + " emptied a nonempty zone");
  return *std::move(z);
}

}  // namespace

Zone up(const Zone& z) {
  Dbm d = z.dbm();
  for (unsigned i = 1; i < d.dim(); ++i) d.set(i, 0, Bound::infinity());
  return expect_nonempty(Zone::canonical(std::move(d)), "up");
}

std::optional<Zone> and_guard(const Zone& z, const Guard& g) {
  Dbm d = z.dbm();
  for (const auto& atom : g) d.constrain(atom);
  return Zone::canonical(std::move(d));
}

std::optional<Zone> and_positive(const Zone& z, ClockSet xs) {
  Dbm d = z.dbm();
  xs.for_each([&d](ClockId x) { d.tighten(0, x, Bound::strict(0)); });
  return Zone::canonical(std::move(d));
}

std::optional<Zone> intersect(const Zone& a, const Zone& b) {
  Dbm d = a.dbm();
  for (unsigned i = 0; i < d.dim(); ++i)
    for (unsigned j = 0; j < d.dim(); ++j) d.tighten(i, j, b.at(i, j));
  return Zone::canonical(std::move(d));
}

Zone reset(const Zone& z, ClockSet r) {
  Dbm d = z.dbm();
  r.for_each([&d](ClockId x) {
    for (unsigned j = 0; j < d.dim(); ++j) {
      d.set(x, j, d.at(0, j));
      d.set(j, x, d.at(j, 0));
    }
  });
  return expect_nonempty(Zone::canonical(std::move(d)), "reset");
}

Zone approx_m(const Zone& z, int M) {
  if (M < 0) throw std::invalid_argument("negative extrapolation constant");
  Dbm d = z.dbm();
  const Bound above = Bound::strict(-M);
  for (unsigned i = 0; i < d.dim(); ++i)
    for (unsigned j = 0; j < d.dim(); ++j) {
      if (i == j) continue;
      const Bound b = d.at(i, j);
      if (b.is_infinity()) continue;
      if (i != 0 && b.value() > M)
        d.set(i, j, Bound::infinity());
      else if (j != 0 && b < above)
        d.set(i, j, above);
    }
  return expect_nonempty(Zone::canonical(std::move(d)), "approx_m");
}

std::optional<Zone> fire(const Zone& z, const Transition& t, int M) {
  auto crossing = and_guard(up(z), t.guard);
  if (!crossing) return std::nullopt;
  return approx_m(reset(*crossing, t.reset), M);
}

EdgeProfile profile_of(const Zone& crossing, ClockSet reset) {
  EdgeProfile p;
  p.reset = reset;
  for (ClockId x = 1; x < crossing.dim(); ++x) {
    const Bound upper = crossing.at(x, 0);
    if (upper <= Bound::le_zero()) p.zero_checked.add(x);
    if (!upper.is_infinity()) p.bounded.add(x);
    if (crossing.at(0, x) <= Bound::weak(-1)) p.lower1.add(x);
  }
  return p;
}

std::optional<EdgeProfile> edge_profile(const Zone& z, const Transition& t) {
  auto crossing = and_guard(up(z), t.guard);
  if (!crossing) return std::nullopt;
  return profile_of(*crossing, t.reset);
}

bool orders_clocks(const Zone& z) {
  for (unsigned i = 1; i < z.dim(); ++i)
    for (unsigned j = i + 1; j < z.dim(); ++j)
      if (!(z.at(i, j) <= Bound::le_zero()) && !(z.at(j, i) <= Bound::le_zero())) return false;
  return true;
}

std::string zone_text(const Zone& z, const Tba& a) {
  std::string out;
  auto emit = [&out](const std::string& part) {
    if (!out.empty()) out += " & ";
    out += part;
  };
  for (ClockId x = 1; x < z.dim(); ++x) {
    const std::string& n = a.clock_name(x);
    const Bound lo = z.at(0, x);
    const Bound hi = z.at(x, 0);
    if (!hi.is_infinity() && !hi.is_strict() && !lo.is_strict() && lo.value() == -hi.value()) {
      emit(n + "=" + std::to_string(hi.value()));
      continue;
    }
    if (lo < Bound::le_zero())
      emit(n + (lo.is_strict() ? ">" : ">=") + std::to_string(-lo.value()));
    if (!hi.is_infinity())
      emit(n + (hi.is_strict() ? "<" : "<=") + std::to_string(hi.value()));
  }
  for (unsigned i = 1; i < z.dim(); ++i)
    for (unsigned j = 1; j < z.dim(); ++j) {
      if (i == j) continue;
      const Bound b = z.at(i, j);
      if (b.is_infinity()) continue;
      Bound implied = Bound::infinity();
      if (!z.at(i, 0).is_infinity()) implied = z.at(i, 0) + z.at(0, j);
      if (b < implied)
        emit(a.clock_name(i) + "-" + a.clock_name(j) + (b.is_strict() ? "<" : "<=") +
             std::to_string(b.value()));
    }
  return out.empty() ? "true" : out;
}

}  // namespace tbuchi
