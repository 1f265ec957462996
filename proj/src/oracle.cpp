#include "synlab/oracle.hpp"

#include <map>
#include <optional>
#include <random>

#include "synlab/errors.hpp"

namespace synlab {

namespace {

std::string numbered(const char* prefix, std::size_t k) { return std::string(prefix) + "#" + std::to_string(k); }

// Morphisms whose later endpoint is object k, so they are checkable once
// objects 0..k are assigned.
std::vector<std::vector<int>> morphisms_by_last_object(const FinCategory& C) {
  std::vector<std::vector<int>> out(static_cast<std::size_t>(C.object_count()));
  for (int f = 0; f < C.morphism_count(); ++f) {
    const auto& m = C.morphism(f);
    out[static_cast<std::size_t>(std::max(m.dom, m.cod))].push_back(f);
  }
  return out;
}

// Depth-first product of per-object candidates, pruned morphism by morphism.
template <typename Cand, typename PairOk, typename Emit>
void backtrack(const FinCategory& C, const std::vector<const std::vector<Cand>*>& per_object, PairOk&& ok,
               Emit&& emit) {
  const int n = C.object_count();
  const auto checks = morphisms_by_last_object(C);
  std::vector<const Cand*> chosen(static_cast<std::size_t>(n), nullptr);
  auto rec = [&](auto&& self, int k) -> void {
    if (k == n) {
      emit(chosen);
      return;
    }
    for (const auto& cand : *per_object[static_cast<std::size_t>(k)]) {
      chosen[static_cast<std::size_t>(k)] = &cand;
      bool good = true;
      for (int f : checks[static_cast<std::size_t>(k)]) {
        const auto& m = C.morphism(f);
        if (!ok(C.transport(f), *chosen[static_cast<std::size_t>(m.dom)], *chosen[static_cast<std::size_t>(m.cod)])) {
          good = false;
          break;
        }
      }
      if (good) self(self, k + 1);
    }
  };
  rec(rec, 0);
}

bool closure_pair_ok(const SubsetTransport& t, const EndoMap& cx, const EndoMap& cy) {
  for (Mask m = 0; m < cx.size(); ++m)
    if (!is_subset(t.image(cx(m)), cy(t.image(m)))) return false;
  return true;
}

bool t3_pair_ok(const SubsetTransport& t, const Relation& rx, const Relation& ry) {
  const Mask full = full_mask(t.to);
  for (Mask m = 0; m <= full; ++m)
    for (Mask n = 0; n <= full; ++n)
      if (ry.test(m, n) && !rx.test(t.preimage(m), t.preimage(n))) return false;
  return true;
}

// f(m) ⊏_Y n ⇒ m ⊏_X f⁻¹(n)
bool relation_continuous(const SubsetTransport& t, const Relation& rx, const Relation& ry) {
  const Mask full_x = full_mask(t.from), full_y = full_mask(t.to);
  for (Mask m = 0; m <= full_x; ++m)
    for (Mask n = 0; n <= full_y; ++n)
      if (ry.test(t.image(m), n) && !rx.test(m, t.preimage(n))) return false;
  return true;
}

template <typename T>
std::vector<const std::vector<T>*> per_carrier(const FinCategory& C, std::map<int, std::vector<T>>& cache,
                                               const std::function<std::vector<T>(int)>& make) {
  std::vector<const std::vector<T>*> out;
  for (int x = 0; x < C.object_count(); ++x) {
    const int n = C.carrier_size(x);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, make(n)).first;
    out.push_back(&it->second);
  }
  return out;
}

std::vector<ClosureOp> closures_from(const CategoryPtr& c, bool idempotent_only, const char* prefix) {
  std::map<int, std::vector<EndoMap>> cache;
  auto lists = per_carrier<EndoMap>(*c, cache, [&](int n) {
    auto maps = extensive_monotone_maps(n);
    if (idempotent_only) std::erase_if(maps, [](const EndoMap& u) { return !u.is_idempotent(); });
    return maps;
  });
  std::vector<ClosureOp> out;
  backtrack<EndoMap>(*c, lists, closure_pair_ok, [&](const std::vector<const EndoMap*>& pick) {
    ClosureOp op{numbered(prefix, out.size()), c, {}};
    for (const auto* u : pick) op.tables.push_back(*u);
    out.push_back(std::move(op));
  });
  return out;
}

// Rows of a T1/T2 relation are up-sets of ↑m, shrinking as m grows; a row is
// a bitset over the 2^n subsets.
std::vector<std::uint64_t> up_closed_rows_within(int n, Mask m) {
  const std::size_t size = powerset_size(n);
  std::vector<std::uint64_t> out;
  const std::uint64_t limit = size == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << size) - 1;
  for (std::uint64_t row = 0;; ++row) {
    bool good = true;
    for (Mask k = 0; good && k < size; ++k) {
      if (!((row >> k) & 1u)) continue;
      if (!is_subset(m, k)) good = false;
      for (int i = 0; good && i < n; ++i)
        if (!((row >> (k | (Mask{1} << i))) & 1u)) good = false;
    }
    if (good) out.push_back(row);
    if (row == limit) break;
  }
  return out;
}

}  // namespace

void require_enumerable(const FinCategory& c, const EnumOptions& opts) {
  if (opts.cap < 0 || opts.cap > 3) throw InputError("enumeration cap must lie in 0..3");
  if (opts.cap == 3 && !opts.force) throw InputError("enumeration at carrier 3 needs --force");
  if (c.max_carrier() > opts.cap)
    throw InputError("category " + c.id() + " has carrier " + std::to_string(c.max_carrier()) +
                     " above the enumeration cap " + std::to_string(opts.cap));
}

std::vector<EndoMap> extensive_monotone_maps(int carrier) {
  if (carrier > 3) throw InputError("extensive monotone maps are enumerated up to carrier 3");
  const Mask full = full_mask(carrier);
  const std::size_t size = powerset_size(carrier);
  std::vector<EndoMap> out;
  std::vector<Mask> table(size, 0);
  auto rec = [&](auto&& self, Mask m) -> void {
    if (m == size) {
      out.emplace_back(carrier, table);
      return;
    }
    Mask lower = m;
    for (int i = 0; i < carrier; ++i)
      if ((m >> i) & 1u) lower |= table[m & ~(Mask{1} << i)];
    const Mask free = full & ~lower;
    for (Mask s = 0;; s = (s - free) & free) {
      table[m] = lower | s;
      self(self, m + 1);
      if (s == free) break;
    }
  };
  rec(rec, 0);
  return out;
}

std::vector<Relation> squeeze_stable_relations(int carrier) {
  if (carrier > 3) throw InputError("topogenous relations are enumerated up to carrier 3");
  const std::size_t size = powerset_size(carrier);
  std::vector<std::vector<std::uint64_t>> rows;
  for (Mask m = 0; m < size; ++m) rows.push_back(up_closed_rows_within(carrier, m));
  std::vector<Relation> out;
  std::vector<std::uint64_t> pick(size, 0);
  auto rec = [&](auto&& self, Mask m) -> void {
    if (m == size) {
      Relation r(carrier);
      for (Mask a = 0; a < size; ++a)
        for (Mask k = 0; k < size; ++k)
          if ((pick[a] >> k) & 1u) r.set(a, k);
      out.push_back(std::move(r));
      return;
    }
    std::uint64_t bound = ~std::uint64_t{0};
    for (int i = 0; i < carrier; ++i)
      if ((m >> i) & 1u) bound &= pick[m & ~(Mask{1} << i)];
    for (auto row : rows[m])
      if ((row & ~bound) == 0) {
        pick[m] = row;
        self(self, m + 1);
      }
  };
  rec(rec, 0);
  return out;
}

std::vector<ClosureOp> enumerate_closures(const CategoryPtr& c, const EnumOptions& opts) {
  require_enumerable(*c, opts);
  return closures_from(c, false, "closure");
}

std::vector<TopogenousOrder> enumerate_topogenous(const CategoryPtr& c, const EnumOptions& opts) {
  require_enumerable(*c, opts);
  std::map<int, std::vector<Relation>> cache;
  auto lists = per_carrier<Relation>(*c, cache, squeeze_stable_relations);
  std::vector<TopogenousOrder> out;
  backtrack<Relation>(*c, lists, t3_pair_ok, [&](const std::vector<const Relation*>& pick) {
    TopogenousOrder op{numbered("topogenous", out.size()), c, {}};
    for (const auto* r : pick) op.relations.push_back(*r);
    out.push_back(std::move(op));
  });
  return out;
}

std::vector<QUBase> enumerate_principal_qubases(const CategoryPtr& c, const EnumOptions& opts) {
  require_enumerable(*c, opts);
  std::vector<QUBase> out;
  for (auto& cl : closures_from(c, true, "base")) {
    QUBase b{cl.id, c, {}};
    for (auto& t : cl.tables) b.maps.push_back({std::move(t)});
    out.push_back(std::move(b));
  }
  return out;
}

std::vector<Syntop> enumerate_simple_syntops(const CategoryPtr& c, const EnumOptions& opts) {
  require_enumerable(*c, opts);
  std::map<int, std::vector<Relation>> cache;
  auto lists = per_carrier<Relation>(*c, cache, [](int n) {
    auto rels = squeeze_stable_relations(n);
    std::erase_if(rels, [](const Relation& r) { return !is_interpolative(r); });
    return rels;
  });
  std::vector<Syntop> out;
  backtrack<Relation>(
      *c, lists,
      [](const SubsetTransport& t, const Relation& rx, const Relation& ry) {
        return t3_pair_ok(t, rx, ry) && relation_continuous(t, rx, ry);
      },
      [&](const std::vector<const Relation*>& pick) {
        Syntop s{numbered("syntop", out.size()), c, {}};
        for (const auto* r : pick) s.members.push_back({*r});
        out.push_back(std::move(s));
      });
  return out;
}

std::vector<QUBase> enumerate_all_qubases(const CategoryPtr& c, const EnumOptions& opts) {
  require_enumerable(*c, opts);
  if (c->object_count() != 1) throw InputError("all bases are enumerated on one-object categories only");
  if (c->carrier_size(0) > 2) throw InputError("all bases are enumerated up to carrier 2");
  const auto maps = extensive_monotone_maps(c->carrier_size(0));
  std::vector<QUBase> out;
  const std::size_t families = std::size_t{1} << maps.size();
  for (std::size_t bits = 1; bits < families; ++bits) {
    QUBase b{numbered("base", out.size()), c, {{}}};
    for (std::size_t i = 0; i < maps.size(); ++i)
      if ((bits >> i) & 1u) b.maps[0].push_back(maps[i]);
    if (validate_qubase(b).ok()) out.push_back(std::move(b));
  }
  return out;
}

std::vector<Structure> enumerate_kind(const CategoryPtr& c, std::string_view kind, const EnumOptions& opts) {
  std::vector<Structure> out;
  auto take = [&](auto&& v) {
    for (auto& s : v) out.emplace_back(std::move(s));
  };
  if (kind == "closure") take(enumerate_closures(c, opts));
  else if (kind == "topogenous") take(enumerate_topogenous(c, opts));
  else if (kind == "qubase") take(enumerate_principal_qubases(c, opts));
  else if (kind == "syntop") take(enumerate_simple_syntops(c, opts));
  else throw InputError("unknown structure kind " + std::string(kind) + " (closure, topogenous, qubase, syntop)");
  return out;
}

// ---------------------------------------------------------------------------
// Adversarial generation

namespace {

class Perturber {
 public:
  Perturber(const CategoryPtr& c, std::uint64_t seed) : C_(*c), rng_(seed) {}

  std::uint64_t pick(std::uint64_t bound) { return bound == 0 ? 0 : rng_() % bound; }

  // Closures: flip one element of one entry, then repair upward.
  void perturb(std::vector<EndoMap>& tables) {
    const int x = static_cast<int>(pick(static_cast<std::uint64_t>(C_.object_count())));
    auto& t = tables[static_cast<std::size_t>(x)];
    const int n = t.carrier();
    if (n == 0) return;
    const Mask m = static_cast<Mask>(pick(t.size()));
    const Mask e = Mask{1} << pick(static_cast<std::uint64_t>(n));
    if (pick(2) == 0) {
      t.set(m, t(m) | e);
    } else if (!(m & e)) {
      for (Mask k = 0; k < t.size(); ++k)
        if (is_subset(k, m) && !(k & e)) t.set(k, t(k) & ~e);
    }
  }

  void repair(std::vector<EndoMap>& tables, bool idempotent) {
    for (bool changed = true; changed;) {
      changed = false;
      auto widen = [&](EndoMap& t, Mask m, Mask extra) {
        if (!is_subset(extra, t(m))) {
          t.set(m, t(m) | extra);
          changed = true;
        }
      };
      for (auto& t : tables)
        for (Mask m = 0; m < t.size(); ++m) {
          widen(t, m, m);
          for (int i = 0; i < t.carrier(); ++i)
            if ((m >> i) & 1u) widen(t, m, t(m & ~(Mask{1} << i)));
          if (idempotent) widen(t, m, t(t(m)));
        }
      for (int f = 0; f < C_.morphism_count(); ++f) {
        const auto& mf = C_.morphism(f);
        const auto& tr = C_.transport(f);
        auto& cx = tables[static_cast<std::size_t>(mf.dom)];
        auto& cy = tables[static_cast<std::size_t>(mf.cod)];
        for (Mask m = 0; m < cx.size(); ++m) widen(cy, tr.image(m), tr.image(cx(m)));
      }
    }
  }

  // Relations: add one pair within inclusion, or remove a pair with all
  // pairs that would force it back.
  void perturb(std::vector<Relation>& rels) {
    const int x = static_cast<int>(pick(static_cast<std::uint64_t>(C_.object_count())));
    auto& r = rels[static_cast<std::size_t>(x)];
    const Mask full = full_mask(r.carrier());
    const Mask m = static_cast<Mask>(pick(std::uint64_t{full} + 1));
    const Mask n = static_cast<Mask>(pick(std::uint64_t{full} + 1)) | m;
    if (pick(2) == 0) {
      r.set(m, n);
    } else {
      for (Mask a = 0; a <= full; ++a)
        for (Mask b = 0; b <= full; ++b)
          if (is_subset(m, a) && is_subset(b, n)) r.set(a, b, false);
    }
  }

  void repair(std::vector<Relation>& rels) {
    for (bool changed = true; changed;) {
      changed = false;
      for (auto& r : rels) {
        r.restrict_to_inclusion();
        r.saturate();
      }
      for (int f = 0; f < C_.morphism_count(); ++f) {
        const auto& mf = C_.morphism(f);
        const auto& tr = C_.transport(f);
        auto& rx = rels[static_cast<std::size_t>(mf.dom)];
        const auto& ry = rels[static_cast<std::size_t>(mf.cod)];
        for (auto [m, n] : ry.pairs())
          if (!rx.test(tr.preimage(m), tr.preimage(n))) {
            rx.set(tr.preimage(m), tr.preimage(n));
            changed = true;
          }
        // continuity of single-member families: f(m) ⊏_Y n ⇒ m ⊏_X f⁻¹(n)
        const Mask full_x = full_mask(tr.from);
        for (Mask m = 0; m <= full_x; ++m)
          for (Mask n = 0; n <= full_mask(tr.to); ++n)
            if (ry.test(tr.image(m), n) && !rx.test(m, tr.preimage(n))) {
              rx.set(m, tr.preimage(n));
              changed = true;
            }
      }
    }
  }

  // Drops pairs, keeping T1/T2: the result lies below `r`.
  Relation thinned(const Relation& r) {
    Relation out = r;
    const Mask full = full_mask(r.carrier());
    const auto pairs = r.pairs();
    if (pairs.empty()) return out;
    const auto [m, n] = pairs[pick(pairs.size())];
    for (Mask a = 0; a <= full; ++a)
      for (Mask b = 0; b <= full; ++b)
        if (is_subset(m, a) && is_subset(b, n)) out.set(a, b, false);
    return out;
  }

  // An inflationary monotone map above `u`.
  EndoMap raised(const EndoMap& u) {
    EndoMap out = u;
    if (u.carrier() == 0) return out;
    const Mask m = static_cast<Mask>(pick(u.size()));
    out.set(m, out(m) | (Mask{1} << pick(static_cast<std::uint64_t>(u.carrier()))));
    for (Mask k = 0; k < out.size(); ++k)
      for (Mask j = 0; j < out.size(); ++j)
        if (is_subset(j, k)) out.set(k, out(k) | out(j));
    return out;
  }

 private:
  const FinCategory& C_;
  std::mt19937_64 rng_;
};

std::vector<EndoMap> minimum_members(const QUBase& b) {
  std::vector<EndoMap> out;
  for (const auto& fam : b.maps) {
    EndoMap w = fam.front();
    for (const auto& u : fam) w = meet(w, u);
    out.push_back(std::move(w));
  }
  return out;
}

std::vector<Relation> union_members(const Syntop& s) {
  std::vector<Relation> out;
  for (int x = 0; x < s.category->object_count(); ++x) out.push_back(s.union_at(x));
  return out;
}

}  // namespace

std::vector<Structure> adversarial_candidates(std::span<const Structure> pool, const AdversarialOptions& opts) {
  std::vector<Structure> out;
  if (pool.empty() || opts.count == 0) return out;
  const auto& c = structure_category(pool.front());
  for (const auto& s : pool)
    if (s.index() != pool.front().index() || structure_category(s) != c)
      throw InputError("adversarial pool mixes kinds or categories");
  Perturber P(c, opts.seed);
  const std::size_t max_attempts = opts.count * 50;
  for (std::size_t attempt = 0; out.size() < opts.count && attempt < max_attempts; ++attempt) {
    const Structure& base = pool[P.pick(pool.size())];
    const int steps = 1 + static_cast<int>(P.pick(3));
    const std::string id = numbered("adv", out.size());
    std::optional<Structure> cand;
    if (const auto* cl = std::get_if<ClosureOp>(&base)) {
      auto tables = cl->tables;
      for (int i = 0; i < steps; ++i) P.perturb(tables);
      P.repair(tables, P.pick(2) == 0);
      cand = ClosureOp{id, c, std::move(tables)};
    } else if (const auto* b = std::get_if<QUBase>(&base)) {
      auto tables = minimum_members(*b);
      for (int i = 0; i < steps; ++i) P.perturb(tables);
      P.repair(tables, true);
      QUBase q{id, c, {}};
      const bool pair = P.pick(2) == 0;
      for (auto& t : tables) {
        if (pair) q.maps.push_back({P.raised(t), t});
        else q.maps.push_back({t});
      }
      cand = std::move(q);
    } else if (const auto* t = std::get_if<TopogenousOrder>(&base)) {
      auto rels = t->relations;
      for (int i = 0; i < steps; ++i) P.perturb(rels);
      P.repair(rels);
      cand = TopogenousOrder{id, c, std::move(rels)};
    } else {
      auto rels = union_members(std::get<Syntop>(base));
      for (int i = 0; i < steps; ++i) P.perturb(rels);
      P.repair(rels);
      bool interpolative = true;
      for (const auto& r : rels) interpolative = interpolative && is_interpolative(r);
      if (!interpolative) continue;
      Syntop s{id, c, {}};
      const bool pair = P.pick(2) == 0;
      for (auto& r : rels) {
        if (pair) s.members.push_back({P.thinned(r), r});
        else s.members.push_back({r});
      }
      cand = std::move(s);
    }
    if (validate(*cand).ok()) out.push_back(std::move(*cand));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Certificates

std::size_t Certificate::continuous_count() const {
  std::size_t n = 0;
  for (const auto& c : candidates) n += c.continuous ? 1 : 0;
  return n;
}

nlohmann::json Certificate::to_json() const {
  nlohmann::json cands = nlohmann::json::array();
  for (const auto& c : candidates) {
    nlohmann::json j{{"id", c.id},
                     {"continuous", c.continuous},
                     {"ordering", ordering_name(c.ordering)},
                     {"on_required_side", c.on_required_side}};
    if (!c.continuous) j["continuity_witness"] = c.continuity_witness;
    cands.push_back(std::move(j));
  }
  return {{"subject", subject},
          {"direction", extremal_name(direction)},
          {"lifted", lifted_id},
          {"regime", regime},
          {"lifted_valid", lifted_valid},
          {"lifted_validity_witness", lifted_validity_witness},
          {"lifted_continuity_witness", lifted_continuity_witness},
          {"candidates", cands},
          {"tested", candidates.size()},
          {"continuous_candidates", continuous_count()},
          {"verdict", pass ? "PASS" : "FAIL"},
          {"counterexample", counterexample}};
}

std::string Certificate::to_text() const {
  std::string out = "certificate: " + subject + "\n";
  out += "  claim: " + lifted_id + " is the " + extremal_name(direction) + " admissible structure\n";
  out += "  regime: " + regime + ", " + std::to_string(candidates.size()) + " candidates, " +
         std::to_string(continuous_count()) + " admissible\n";
  out += "  lifted valid: " + std::string(lifted_valid ? "yes" : "no, " + lifted_validity_witness) + "\n";
  out += "  lifted continuous: " +
         std::string(lifted_continuity_witness.empty() ? "yes" : "no, " + lifted_continuity_witness) + "\n";
  out += "  verdict: " + std::string(pass ? "PASS" : "FAIL") + "\n";
  if (!counterexample.empty()) out += "  counterexample: " + counterexample + "\n";
  return out;
}

Certificate certify_extremal(const Structure& lifted, std::span<const Structure> candidates,
                             const ContinuityFn& continuity, Extremal direction, std::string regime) {
  Certificate cert;
  cert.direction = direction;
  cert.lifted_id = structure_id(lifted);
  cert.subject = std::string(kind_name(lifted)) + " " + cert.lifted_id;
  cert.regime = std::move(regime);
  const Report validity = validate(lifted);
  cert.lifted_valid = validity.ok();
  if (const Check* c = validity.first_failure()) cert.lifted_validity_witness = c->name + ": " + c->witness;
  cert.lifted_continuity_witness = continuity(lifted);
  cert.pass = cert.lifted_valid && cert.lifted_continuity_witness.empty();
  if (!cert.lifted_valid) cert.counterexample = "lifted structure invalid: " + cert.lifted_validity_witness;
  else if (!cert.lifted_continuity_witness.empty())
    cert.counterexample = "lifted structure not continuous: " + cert.lifted_continuity_witness;
  const bool below = lifted_below(direction);
  for (const auto& cand : candidates) {
    CandidateVerdict v;
    v.id = structure_id(cand);
    v.continuity_witness = continuity(cand);
    v.continuous = v.continuity_witness.empty();
    v.ordering = compare(lifted, cand);
    const bool side = v.ordering == Ordering::equal || v.ordering == (below ? Ordering::less : Ordering::greater);
    v.on_required_side = !v.continuous || side;
    if (!v.on_required_side && cert.pass) {
      cert.pass = false;
      cert.counterexample = "candidate " + v.id + " makes the designated maps continuous but the lifted structure is " +
                            ordering_name(v.ordering) + " than it";
    }
    cert.candidates.push_back(std::move(v));
  }
  return cert;
}

namespace {

std::vector<Structure> extreme_structures(const CategoryPtr& c, const Structure& like) {
  std::vector<Structure> out;
  switch (like.index()) {
    case 0:
      out.emplace_back(identity_closure(c));
      out.emplace_back(top_closure(c));
      break;
    case 1:
      out.emplace_back(discrete_topogenous(c));
      out.emplace_back(TopogenousOrder{"top", c, {}});
      for (int x = 0; x < c->object_count(); ++x)
        std::get<TopogenousOrder>(out.back()).relations.push_back(
            Relation::from_endomap(EndoMap::top(c->carrier_size(x))));
      break;
    case 2:
      out.emplace_back(identity_base(c));
      out.emplace_back(QUBase{"top", c, {}});
      for (int x = 0; x < c->object_count(); ++x)
        std::get<QUBase>(out.back()).maps.push_back({EndoMap::top(c->carrier_size(x))});
      break;
    default:
      out.emplace_back(discrete_syntop(c));
      break;
  }
  return out;
}

}  // namespace

std::vector<Structure> candidate_family(const CategoryPtr& c, const Structure& like, std::vector<Structure> pool,
                                        const CertifyOptions& opts, std::string* regime) {
  std::vector<Structure> out;
  if (c->max_carrier() <= opts.enumeration.cap) {
    out = enumerate_kind(c, kind_name(like), opts.enumeration);
    if (regime) *regime = "exhaustive";
  } else {
    for (auto& s : extreme_structures(c, like)) pool.push_back(std::move(s));
    std::erase_if(pool, [&](const Structure& s) {
      return s.index() != like.index() || structure_category(s) != c || !validate(s).ok();
    });
    out = pool;
    for (auto& s : adversarial_candidates(pool, opts.adversarial)) out.push_back(std::move(s));
    if (regime) *regime = "adversarial";
  }
  for (const auto& s : opts.extra)
    if (s.index() == like.index() && structure_category(s) == c) out.push_back(s);
  return out;
}

Certificate certify_lift(const Structure& input, const Transformation& t, const CertifyOptions& opts,
                         std::optional<Extremal> direction) {
  const Structure lifted = lift(input, t);
  const auto C = lift_output_category(t);
  std::string regime;
  std::vector<Structure> pool{lifted};
  const auto candidates = candidate_family(C, lifted, pool, opts, &regime);
  auto cert = certify_extremal(
      lifted, candidates, [&](const Structure& s) { return designated_continuity_witness(t, input, s); },
      direction.value_or(claimed_extremal(t, input)), regime);
  cert.subject = std::string(family_name(t)) + " lift of " + kind_name(input) + " " + structure_id(input) + " along " +
                 transformation_id(t);
  return cert;
}

namespace {

bool essentially_surjective(const FunctorData& F) {
  const auto& A = *F.source;
  const auto& C = *F.target;
  for (int y = 0; y < C.object_count(); ++y) {
    bool hit = false;
    for (int x = 0; !hit && x < A.object_count(); ++x) {
      const int fx = F.object(x);
      if (fx == y) {
        hit = true;
        break;
      }
      for (int f : C.hom(fx, y))
        for (int g : C.hom(y, fx)) {
          auto gf = C.compose(g, f), fg = C.compose(f, g);
          if (gf && fg && gf == C.identity(fx) && fg == C.identity(y)) hit = true;
        }
    }
    if (!hit) return false;
  }
  return true;
}

}  // namespace

Certificate certify_finest_on_target(const QUBase& input, const FibrationData& fd, const CertifyOptions& opts) {
  if (!essentially_surjective(fd.functor))
    throw Refused("fibration " + fd.id + ": the functor is not essentially surjective on objects");
  const QUBase lifted = lift_fibration_qubase(input, fd);
  const auto legs = fibration_legs(fd);
  std::string regime;
  const auto candidates = candidate_family(fd.functor.target, Structure(input), {Structure(input)}, opts, &regime);
  auto cert = certify_extremal(
      Structure(input), candidates,
      [&](const Structure& s) { return continuity_witness(lifted, std::get<QUBase>(s), legs); }, Extremal::finest,
      regime);
  cert.subject = "base " + input.id + " as the finest target structure for " + fd.id;
  return cert;
}

Report principality_check(const QUBase& b) {
  Report r("principality of base " + b.id);
  const Report validity = validate_qubase(b);
  r.note("valid base", validity.ok(), validity.first_failure() ? validity.first_failure()->witness : "");
  if (!validity.ok()) return r;
  const auto& C = *b.category;
  const auto mins = minimum_members(b);
  r.pass("minimum is a member");
  r.pass("minimum idempotent");
  for (int x = 0; x < C.object_count(); ++x) {
    const auto& w = mins[static_cast<std::size_t>(x)];
    bool member = false;
    for (const auto& u : b.at(x)) member = member || u == w;
    if (!member) r.fail("minimum is a member", "object " + C.object(x).id);
    if (!w.is_idempotent()) r.fail("minimum idempotent", "object " + C.object(x).id);
  }
  QUBase principal{b.id + "-min", b.category, {}};
  for (const auto& w : mins) principal.maps.push_back({w});
  const auto ord = compare(principal, b);
  r.note("filter equal", ord == Ordering::equal, std::string("principal base is ") + ordering_name(ord));
  return r;
}

QUBase principal_reduction(const QUBase& b) {
  const Report validity = validate_qubase(b);
  if (const Check* c = validity.first_failure()) throw Refused("base " + b.id + " is invalid: " + c->witness);
  QUBase out{b.id, b.category, {}};
  for (auto& w : minimum_members(b)) out.maps.push_back({std::move(w)});
  return out;
}

}  // namespace synlab
