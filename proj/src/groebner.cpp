#include "fsing/groebner.hpp"

#include <algorithm>
#include <set>

#include "fsing/errors.hpp"

namespace fsing::gb {

namespace {

/// Sum of sparse polynomials kept as a short ladder of ascending-sorted
/// vectors whose capacities grow geometrically, so repeated additions during
/// reduction cost O(n log n) overall instead of O(n^2).
class GeoBucket {
 public:
  GeoBucket(const PrimeField& field, const MonomialOrder& order) : field_(field), order_(order) {}

  void add(TermVec&& ascending) {
    if (ascending.empty()) return;
    std::size_t i = slot_for(ascending.size());
    TermVec incoming = std::move(ascending);
    for (;;) {
      if (buckets_.size() <= i) buckets_.resize(i + 1);
      if (buckets_[i].empty()) {
        if (incoming.size() <= capacity(i)) {
          buckets_[i] = std::move(incoming);
          return;
        }
      } else {
        merge(incoming, buckets_[i]);
        buckets_[i].clear();
        if (incoming.size() <= capacity(i)) {
          buckets_[i].swap(incoming);
          return;
        }
      }
      ++i;
    }
  }

  /// Combined leading term, or false when the sum is zero. The term stays in
  /// the bucket until drop_leading().
  bool leading(Term& out) {
    for (;;) {
      int best = -1;
      for (std::size_t i = 0; i < buckets_.size(); ++i) {
        if (buckets_[i].empty()) continue;
        if (best < 0 || order_.greater(buckets_[i].back().mono, buckets_[best].back().mono))
          best = static_cast<int>(i);
      }
      if (best < 0) return false;
      Term& top = buckets_[best].back();
      std::uint32_t c = top.coeff;
      for (std::size_t i = 0; i < buckets_.size(); ++i) {
        if (static_cast<int>(i) == best || buckets_[i].empty()) continue;
        if (buckets_[i].back().mono == top.mono) {
          c = field_.add(c, buckets_[i].back().coeff);
          buckets_[i].pop_back();
        }
      }
      if (c == 0) {
        buckets_[best].pop_back();
        continue;
      }
      top.coeff = c;
      lead_ = best;
      out = top;
      return true;
    }
  }

  void drop_leading() { buckets_[lead_].pop_back(); }

  TermVec take_descending() {
    TermVec all;
    for (TermVec& b : buckets_) {
      if (b.empty()) continue;
      if (all.empty()) {
        all.swap(b);
      } else {
        merge(all, b);
        b.clear();
      }
    }
    std::reverse(all.begin(), all.end());
    return all;
  }

 private:
  static std::size_t capacity(std::size_t i) { return std::size_t{8} << (2 * i); }
  static std::size_t slot_for(std::size_t len) {
    std::size_t i = 0;
    while (capacity(i) < len) ++i;
    return i;
  }

  // a := a + b, both ascending.
  void merge(TermVec& a, const TermVec& b) {
    scratch_.clear();
    scratch_.reserve(a.size() + b.size());
    auto x = a.begin(), xe = a.end();
    auto y = b.begin(), ye = b.end();
    while (x != xe && y != ye) {
      int c = order_.compare(x->mono, y->mono);
      if (c < 0) {
        scratch_.push_back(*x++);
      } else if (c > 0) {
        scratch_.push_back(*y++);
      } else {
        std::uint32_t s = field_.add(x->coeff, y->coeff);
        if (s != 0) scratch_.push_back({x->mono, s});
        ++x;
        ++y;
      }
    }
    scratch_.insert(scratch_.end(), x, xe);
    scratch_.insert(scratch_.end(), y, ye);
    a.swap(scratch_);
  }

  const PrimeField& field_;
  const MonomialOrder& order_;
  std::vector<TermVec> buckets_;
  TermVec scratch_;
  int lead_ = -1;
};

/// Contiguous index of reducer leading monomials for fast divisor lookup.
class ReducerTable {
 public:
  void add(std::size_t id, const TermVec* poly) {
    ids_.push_back(id);
    polys_.push_back(poly);
    leads_.push_back(poly->front().mono);
    masks_.push_back(poly->front().mono.support_mask());
  }
  void remove(std::size_t id) {
    for (std::size_t k = 0; k < ids_.size(); ++k) {
      if (ids_[k] != id) continue;
      ids_.erase(ids_.begin() + static_cast<std::ptrdiff_t>(k));
      polys_.erase(polys_.begin() + static_cast<std::ptrdiff_t>(k));
      leads_.erase(leads_.begin() + static_cast<std::ptrdiff_t>(k));
      masks_.erase(masks_.begin() + static_cast<std::ptrdiff_t>(k));
      return;
    }
  }
  void repoint(std::size_t id, const TermVec* poly) {
    for (std::size_t k = 0; k < ids_.size(); ++k)
      if (ids_[k] == id) polys_[k] = poly;
  }

  /// Shortest reducer whose lead divides m, or nullptr.
  const TermVec* find(const Monomial& m) const {
    const std::uint32_t mask = m.support_mask();
    const TermVec* best = nullptr;
    for (std::size_t k = 0; k < leads_.size(); ++k) {
      if (masks_[k] & ~mask) continue;
      if (!leads_[k].divides(m)) continue;
      if (!best || polys_[k]->size() < best->size()) {
        best = polys_[k];
        if (best->size() <= 2) break;
      }
    }
    return best;
  }

  bool empty() const { return ids_.empty(); }

 private:
  std::vector<std::size_t> ids_;
  std::vector<const TermVec*> polys_;
  std::vector<Monomial> leads_;
  std::vector<std::uint32_t> masks_;
};

void push_scaled_tail_ascending(TermVec& out, const TermVec& g, const Monomial& mult,
                                std::uint32_t c, const PrimeField& field) {
  out.reserve(out.size() + g.size());
  for (std::size_t k = g.size(); k-- > 1;)
    out.push_back({g[k].mono * mult, field.mul(g[k].coeff, c)});
}

/// Full reduction of the bucket contents; reducers are monic.
TermVec reduce_bucket(GeoBucket& bucket, const ReducerTable& reducers, const PrimeField& field) {
  TermVec result;
  Term lt;
  while (bucket.leading(lt)) {
    const TermVec* g = reducers.empty() ? nullptr : reducers.find(lt.mono);
    bucket.drop_leading();
    if (!g) {
      result.push_back(lt);
      continue;
    }
    TermVec add;
    push_scaled_tail_ascending(add, *g, lt.mono / g->front().mono, field.neg(lt.coeff), field);
    bucket.add(std::move(add));
  }
  return result;
}

void make_monic(TermVec& f, const PrimeField& field) {
  if (f.empty() || f.front().coeff == 1) return;
  std::uint32_t inv = field.inv(f.front().coeff);
  for (Term& t : f) t.coeff = field.mul(t.coeff, inv);
}

TermVec ascending_copy(const TermVec& desc) { return TermVec(desc.rbegin(), desc.rend()); }

struct Pair {
  std::size_t i, j;
  Monomial lcm;
  std::int64_t sugar;
};

class Buchberger {
 public:
  Buchberger(const PrimeField& field, const MonomialOrder& order, Stats* stats)
      : field_(field), order_(order), stats_(stats), pairs_(PairLess{&order}) {}

  void add_input(TermVec f) {
    if (unit_) return;
    GeoBucket bucket(field_, order_);
    bucket.add(ascending_copy(f));
    TermVec r = reduce_bucket(bucket, reducers_, field_);
    if (r.empty()) return;
    make_monic(r, field_);
    std::int64_t sugar = 0;
    for (const Term& t : f) sugar = std::max<std::int64_t>(sugar, t.mono.degree());
    insert(std::move(r), sugar);
  }

  void run() {
    while (!unit_ && !pairs_.empty()) {
      Pair pr = *pairs_.begin();
      pairs_.erase(pairs_.begin());
      if (stats_) ++stats_->pairs_reduced;
      TermVec r = s_reduce(pr);
      if (r.empty()) {
        if (stats_) ++stats_->zero_reductions;
        continue;
      }
      make_monic(r, field_);
      insert(std::move(r), pr.sugar);
    }
  }

  std::vector<TermVec> reduced() {
    std::vector<TermVec> out;
    if (unit_) {
      out.push_back(TermVec{Term{Monomial{}, 1}});
      return out;
    }
    std::vector<std::size_t> active;
    for (std::size_t k = 0; k < elems_.size(); ++k)
      if (elems_[k].active) active.push_back(k);
    std::sort(active.begin(), active.end(), [&](std::size_t a, std::size_t b) {
      return order_.compare(elems_[a].poly.front().mono, elems_[b].poly.front().mono) < 0;
    });
    // Interreduce tails, smallest leads first so later elements see reduced
    // reducers; the result is unique regardless.
    for (std::size_t k : active) {
      TermVec& f = elems_[k].poly;
      GeoBucket bucket(field_, order_);
      TermVec tail(f.rbegin(), f.rend() - 1);
      bucket.add(std::move(tail));
      TermVec reduced_tail = reduce_bucket(bucket, reducers_, field_);
      TermVec g;
      g.reserve(reduced_tail.size() + 1);
      g.push_back(f.front());
      g.insert(g.end(), reduced_tail.begin(), reduced_tail.end());
      f.swap(g);
      reducers_.repoint(k, &elems_[k].poly);
    }
    for (std::size_t k : active) out.push_back(elems_[k].poly);
    if (stats_) stats_->basis_size = out.size();
    return out;
  }

 private:
  struct Element {
    TermVec poly;
    Monomial lead;
    std::int64_t sugar;
    bool active;
  };

  struct PairLess {
    const MonomialOrder* order;
    bool operator()(const Pair& a, const Pair& b) const {
      if (a.sugar != b.sugar) return a.sugar < b.sugar;
      if (int c = order->compare(a.lcm, b.lcm)) return c < 0;
      if (a.j != b.j) return a.j < b.j;
      return a.i < b.i;
    }
  };

  TermVec s_reduce(const Pair& pr) {
    const Element& a = elems_[pr.i];
    const Element& b = elems_[pr.j];
    GeoBucket bucket(field_, order_);
    TermVec left, right;
    push_scaled_tail_ascending(left, a.poly, pr.lcm / a.lead, 1, field_);
    push_scaled_tail_ascending(right, b.poly, pr.lcm / b.lead, field_.neg(1), field_);
    bucket.add(std::move(left));
    bucket.add(std::move(right));
    return reduce_bucket(bucket, reducers_, field_);
  }

  std::int64_t pair_sugar(const Element& a, const Element& b, const Monomial& lcm) const {
    std::int64_t sa = a.sugar + lcm.degree() - a.lead.degree();
    std::int64_t sb = b.sugar + lcm.degree() - b.lead.degree();
    return std::max(sa, sb);
  }

  void insert(TermVec h, std::int64_t sugar) {
    if (h.front().mono.is_one()) {
      unit_ = true;
      pairs_.clear();
      return;
    }
    const std::size_t hid = elems_.size();
    const Monomial lh = h.front().mono;
    elems_.push_back({std::move(h), lh, sugar, true});

    // Gebauer-Moeller: candidate pairs (g, h) for active g.
    struct Candidate {
      std::size_t g;
      Monomial lcm;
      bool coprime;
      bool keep = true;
    };
    std::vector<Candidate> cands;
    for (std::size_t g = 0; g < hid; ++g) {
      if (!elems_[g].active) continue;
      cands.push_back({g, elems_[g].lead.lcm(lh), elems_[g].lead.coprime(lh)});
    }
    if (stats_) stats_->pairs_considered += cands.size();
    // Chain criterion among new pairs: drop (g1,h) if some other (g2,h)
    // has an lcm dividing lcm(g1,h). Equal lcms keep only the first, and
    // coprime pairs are preferred survivors so the product criterion can
    // discard the whole class.
    for (std::size_t a = 0; a < cands.size(); ++a) {
      if (cands[a].coprime) continue;
      for (std::size_t b = 0; b < cands.size(); ++b) {
        if (a == b || !cands[b].keep) continue;
        if (!cands[b].lcm.divides(cands[a].lcm)) continue;
        bool equal = cands[b].lcm == cands[a].lcm;
        if (!equal || cands[b].coprime || b < a) {
          cands[a].keep = false;
          break;
        }
      }
    }
    // Old pairs made redundant by h.
    for (auto it = pairs_.begin(); it != pairs_.end();) {
      const Pair& pr = *it;
      if (lh.divides(pr.lcm)) {
        Monomial l1 = elems_[pr.i].lead.lcm(lh);
        Monomial l2 = elems_[pr.j].lead.lcm(lh);
        if (!(l1 == pr.lcm) && !(l2 == pr.lcm)) {
          it = pairs_.erase(it);
          continue;
        }
      }
      ++it;
    }
    // Product criterion on the survivors.
    for (const Candidate& c : cands) {
      if (!c.keep || c.coprime) continue;
      pairs_.insert(Pair{c.g, hid, c.lcm, pair_sugar(elems_[c.g], elems_[hid], c.lcm)});
    }
    for (std::size_t g = 0; g < hid; ++g) {
      if (elems_[g].active && lh.divides(elems_[g].lead)) {
        elems_[g].active = false;
        reducers_.remove(g);
      }
    }
    // elems_ may have reallocated; refresh every reducer pointer.
    for (std::size_t g = 0; g < hid; ++g)
      if (elems_[g].active) reducers_.repoint(g, &elems_[g].poly);
    reducers_.add(hid, &elems_[hid].poly);
  }

  const PrimeField& field_;
  const MonomialOrder& order_;
  Stats* stats_;
  std::vector<Element> elems_;
  std::set<Pair, PairLess> pairs_;
  ReducerTable reducers_;
  bool unit_ = false;
};

}  // namespace

void normalize(TermVec& terms, const PrimeField& field, const MonomialOrder& order) {
  std::sort(terms.begin(), terms.end(),
            [&](const Term& a, const Term& b) { return order.greater(a.mono, b.mono); });
  TermVec out;
  out.reserve(terms.size());
  for (const Term& t : terms) {
    std::uint32_t c = t.coeff % field.characteristic();
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coeff = field.add(out.back().coeff, c);
      if (out.back().coeff == 0) out.pop_back();
    } else if (c != 0) {
      out.push_back({t.mono, c});
    }
  }
  terms.swap(out);
}

std::vector<TermVec> reduced_basis(const PrimeField& field, std::vector<TermVec> gens,
                                   const MonomialOrder& order, Stats* stats) {
  std::vector<TermVec> inputs;
  for (TermVec& g : gens) {
    normalize(g, field, order);
    if (g.empty()) continue;
    make_monic(g, field);
    inputs.push_back(std::move(g));
  }
  if (inputs.empty()) return {};
  std::stable_sort(inputs.begin(), inputs.end(), [&](const TermVec& a, const TermVec& b) {
    if (a.front().mono.degree() != b.front().mono.degree())
      return a.front().mono.degree() < b.front().mono.degree();
    if (int c = order.compare(a.front().mono, b.front().mono)) return c < 0;
    return a.size() < b.size();
  });
  Buchberger engine(field, order, stats);
  for (TermVec& f : inputs) engine.add_input(std::move(f));
  engine.run();
  return engine.reduced();
}

TermVec normal_form(const PrimeField& field, TermVec f, const std::vector<TermVec>& basis,
                    const MonomialOrder& order) {
  normalize(f, field, order);
  ReducerTable reducers;
  for (std::size_t k = 0; k < basis.size(); ++k)
    if (!basis[k].empty()) reducers.add(k, &basis[k]);
  GeoBucket bucket(field, order);
  bucket.add(ascending_copy(f));
  return reduce_bucket(bucket, reducers, field);
}

TermVec exact_divide(const PrimeField& field, TermVec f, TermVec g, const MonomialOrder& order) {
  normalize(f, field, order);
  normalize(g, field, order);
  if (g.empty()) throw Error(ErrorKind::InvalidArgument, "division by zero polynomial");
  const std::uint32_t inv = field.inv(g.front().coeff);
  GeoBucket bucket(field, order);
  bucket.add(ascending_copy(f));
  TermVec quotient;
  Term lt;
  while (bucket.leading(lt)) {
    if (!g.front().mono.divides(lt.mono))
      throw Error(ErrorKind::InvalidArgument, "polynomial division is not exact");
    bucket.drop_leading();
    Monomial m = lt.mono / g.front().mono;
    std::uint32_t c = field.mul(lt.coeff, inv);
    quotient.push_back({m, c});
    TermVec add;
    push_scaled_tail_ascending(add, g, m, field.neg(c), field);
    bucket.add(std::move(add));
  }
  return quotient;
}

}  // namespace fsing::gb
