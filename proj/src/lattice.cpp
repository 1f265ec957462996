#include "synlab/lattice.hpp"

#include <algorithm>

#include "synlab/errors.hpp"

namespace synlab {

std::string format_subset(Mask m) {
  std::string out = "{";
  bool first = true;
  for (int i = 0; i < 32; ++i) {
    if ((m >> i) & 1u) {
      if (!first) out += ',';
      out += std::to_string(i);
      first = false;
    }
  }
  out += '}';
  return out;
}

void require_powerset_carrier(int n) {
  if (n < 0 || n > kMaxPowersetCarrier)
    throw InputError("carrier of size " + std::to_string(n) +
                     " exceeds the powerset-table cap of " +
                     std::to_string(kMaxPowersetCarrier));
}

EndoMap::EndoMap(int carrier, std::vector<Mask> table) : n_(carrier), table_(std::move(table)) {
  require_powerset_carrier(n_);
  if (table_.size() != powerset_size(n_))
    throw InputError("endomap table has " + std::to_string(table_.size()) + " entries, expected " +
                     std::to_string(powerset_size(n_)));
  const Mask full = full_mask(n_);
  for (Mask v : table_)
    if (!is_subset(v, full)) throw InputError("endomap value " + std::to_string(v) + " outside carrier");
}

EndoMap EndoMap::identity(int carrier) {
  std::vector<Mask> t(powerset_size(carrier));
  for (Mask m = 0; m < t.size(); ++m) t[m] = m;
  return EndoMap(carrier, std::move(t));
}

EndoMap EndoMap::top(int carrier) {
  return EndoMap(carrier, std::vector<Mask>(powerset_size(carrier), full_mask(carrier)));
}

bool EndoMap::is_inflationary() const {
  for (Mask m = 0; m < table_.size(); ++m)
    if (!is_subset(m, table_[m])) return false;
  return true;
}

bool EndoMap::is_monotone() const {
  // single-element steps generate the order
  for (Mask m = 0; m < table_.size(); ++m)
    for (int i = 0; i < n_; ++i) {
      const Mask bit = Mask{1} << i;
      if (!(m & bit) && !is_subset(table_[m], table_[m | bit])) return false;
    }
  return true;
}

bool EndoMap::is_idempotent() const {
  for (Mask m = 0; m < table_.size(); ++m)
    if (table_[table_[m]] != table_[m]) return false;
  return true;
}

EndoMap compose(const EndoMap& outer, const EndoMap& inner) {
  if (outer.carrier() != inner.carrier()) throw InputError("compose: carrier mismatch");
  std::vector<Mask> t(inner.size());
  for (Mask m = 0; m < t.size(); ++m) t[m] = outer(inner(m));
  return EndoMap(inner.carrier(), std::move(t));
}

EndoMap meet(const EndoMap& a, const EndoMap& b) {
  if (a.carrier() != b.carrier()) throw InputError("meet: carrier mismatch");
  std::vector<Mask> t(a.size());
  for (Mask m = 0; m < t.size(); ++m) t[m] = a(m) & b(m);
  return EndoMap(a.carrier(), std::move(t));
}

bool pointwise_leq(const EndoMap& a, const EndoMap& b) {
  if (a.carrier() != b.carrier()) throw InputError("pointwise_leq: carrier mismatch");
  for (Mask m = 0; m < a.size(); ++m)
    if (!is_subset(a(m), b(m))) return false;
  return true;
}

Relation::Relation(int carrier) : n_(carrier) {
  require_powerset_carrier(carrier);
  const std::size_t size = powerset_size(carrier);
  words_ = (size + 63) / 64;
  bits_.assign(size * words_, 0);
}

Relation Relation::discrete(int carrier) {
  Relation r(carrier);
  const Mask full = full_mask(carrier);
  for (Mask m = 0; m <= full; ++m)
    for (Mask k = 0; k <= full; ++k)
      if (is_subset(m, k)) r.set(m, k);
  return r;
}

Relation Relation::from_endomap(const EndoMap& u) {
  Relation r(u.carrier());
  const Mask full = full_mask(u.carrier());
  for (Mask m = 0; m <= full; ++m)
    for (Mask k = 0; k <= full; ++k)
      if (is_subset(u(m), k)) r.set(m, k);
  return r;
}

Relation Relation::from_pairs(int carrier, std::span<const std::pair<Mask, Mask>> pairs) {
  Relation r(carrier);
  const Mask full = full_mask(carrier);
  for (auto [m, k] : pairs) {
    if (!is_subset(m, full) || !is_subset(k, full))
      throw InputError("relation pair (" + std::to_string(m) + "," + std::to_string(k) +
                       ") outside carrier");
    r.set(m, k);
  }
  return r;
}

void Relation::set(Mask m, Mask k, bool value) {
  auto& w = bits_[m * words_ + (k >> 6)];
  const std::uint64_t bit = std::uint64_t{1} << (k & 63);
  if (value)
    w |= bit;
  else
    w &= ~bit;
}

void Relation::saturate() {
  const Mask full = full_mask(n_);
  // up-close every row; k | bit > k, so ascending order reaches all supersets
  for (Mask m = 0; m <= full; ++m)
    for (Mask k = 0; k <= full; ++k)
      if (test(m, k))
        for (int i = 0; i < n_; ++i) set(m, k | (Mask{1} << i));
  // rows of smaller m contain rows of larger m; supersets are visited first
  for (Mask m = full + 1; m-- > 0;)
    for (int i = 0; i < n_; ++i) {
      const Mask bit = Mask{1} << i;
      if (!(m & bit)) continue;
      const Mask sub = m ^ bit;
      for (std::size_t w = 0; w < words_; ++w) bits_[sub * words_ + w] |= bits_[m * words_ + w];
    }
}

void Relation::restrict_to_inclusion() {
  const Mask full = full_mask(n_);
  for (Mask m = 0; m <= full; ++m)
    for (Mask k = 0; k <= full; ++k)
      if (test(m, k) && !is_subset(m, k)) set(m, k, false);
}

Mask Relation::meet_of_row(Mask m) const {
  const Mask full = full_mask(n_);
  Mask acc = full;
  for (Mask k = 0; k <= full; ++k)
    if (test(m, k)) acc &= k;
  return acc;
}

bool Relation::row_empty(Mask m) const {
  for (std::size_t w = 0; w < words_; ++w)
    if (bits_[m * words_ + w]) return false;
  return true;
}

std::size_t Relation::count() const {
  std::size_t c = 0;
  for (auto w : bits_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool Relation::subset_of(const Relation& other) const {
  if (n_ != other.n_) throw InputError("relation carrier mismatch");
  for (std::size_t i = 0; i < bits_.size(); ++i)
    if (bits_[i] & ~other.bits_[i]) return false;
  return true;
}

Relation& Relation::operator|=(const Relation& other) {
  if (n_ != other.n_) throw InputError("relation carrier mismatch");
  for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] |= other.bits_[i];
  return *this;
}

Relation& Relation::operator&=(const Relation& other) {
  if (n_ != other.n_) throw InputError("relation carrier mismatch");
  for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] &= other.bits_[i];
  return *this;
}

std::vector<std::pair<Mask, Mask>> Relation::pairs() const {
  std::vector<std::pair<Mask, Mask>> out;
  const Mask full = full_mask(n_);
  for (Mask m = 0; m <= full; ++m)
    for (Mask k = 0; k <= full; ++k)
      if (test(m, k)) out.emplace_back(m, k);
  return out;
}

Relation transpose(const Relation& r) {
  Relation t(r.carrier());
  const Mask full = full_mask(r.carrier());
  for (Mask m = 0; m <= full; ++m)
    for (Mask k = 0; k <= full; ++k)
      if (r.test(m, k)) t.set(k, m);
  return t;
}

Mask image_of(std::span<const int> map, Mask m) {
  Mask out = 0;
  for (std::size_t i = 0; i < map.size(); ++i)
    if ((m >> i) & 1u) out |= Mask{1} << map[i];
  return out;
}

Mask preimage_of(std::span<const int> map, int /*cod_size*/, Mask n) {
  Mask out = 0;
  for (std::size_t i = 0; i < map.size(); ++i)
    if ((n >> map[i]) & 1u) out |= Mask{1} << i;
  return out;
}

SubsetTransport transport_of_map(std::span<const int> map, int cod_size) {
  const int dom_size = static_cast<int>(map.size());
  require_powerset_carrier(dom_size);
  require_powerset_carrier(cod_size);
  SubsetTransport t;
  t.from = dom_size;
  t.to = cod_size;
  t.forward.resize(powerset_size(dom_size));
  t.backward.resize(powerset_size(cod_size));
  for (Mask m = 0; m < t.forward.size(); ++m) t.forward[m] = image_of(map, m);
  for (Mask n = 0; n < t.backward.size(); ++n) t.backward[n] = preimage_of(map, cod_size, n);
  return t;
}

}  // namespace synlab
