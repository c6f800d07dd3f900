#include "latkit/spanning.hpp"

#include <algorithm>

#include "latkit/doubling.hpp"
#include "latkit/iso.hpp"
#include "latkit/predicates.hpp"

namespace latkit {

namespace {

using Coord = std::pair<int, int>;

// Prefix clauses shared by the finite and the coordinate checkers. leq and
// covers close over the concrete order; flat appends an element to the
// report's violating list.
template <class E, class Leq, class Cov, class Flat>
void run_prefix_checks(SpanningCheckReport& rep, const E& p, const E& q, const std::vector<E>& asc,
                       const std::vector<E>& desc, int prefix, Leq leq, Cov covers, Flat flat) {
  auto lt = [&](const E& a, const E& b) { return leq(a, b) && !(a == b); };
  auto violate = [&](const char* name, const E& a, const E& b) {
    if (!rep.violation.empty()) return;
    rep.violation = name;
    flat(a);
    flat(b);
  };
  if (!covers(p, q)) violate("cover", p, q);
  E prev = p;
  for (int i = 0; i < prefix && rep.violation.empty(); ++i) {
    if (!lt(prev, asc[std::size_t(i)])) violate("ascending", prev, asc[std::size_t(i)]);
    prev = asc[std::size_t(i)];
  }
  prev = q;
  for (int i = 0; i < prefix && rep.violation.empty(); ++i) {
    if (!lt(desc[std::size_t(i)], prev)) violate("descending", desc[std::size_t(i)], prev);
    prev = desc[std::size_t(i)];
  }
  for (int i = 0; i < prefix && rep.violation.empty(); ++i)
    if (leq(q, asc[std::size_t(i)])) violate("q_below_ascending", q, asc[std::size_t(i)]);
  for (int i = 0; i < prefix && rep.violation.empty(); ++i)
    if (leq(desc[std::size_t(i)], p)) violate("p_above_descending", p, desc[std::size_t(i)]);
  rep.prefix_ok = rep.violation.empty();
}

}  // namespace

const char* unboundedness_name(Unboundedness v) {
  switch (v) {
    case Unboundedness::verified: return "verified";
    case Unboundedness::refuted: return "refuted";
    case Unboundedness::unverifiable: return "unverifiable";
  }
  return "?";
}

TwoByZWitness two_by_z_canonical(bool dualized) {
  TwoByZWitness w;
  w.canonical = true;
  if (dualized) {
    w.p = {1, 0};
    w.q = {0, 0};
  }
  return w;
}

SpanningPairWitness canonical_window_witness(const TwoByZWindow& w, int prefix) {
  auto need = [&](int i, int k) {
    if (k < w.lo || k > w.hi)
      fail(Err::ElementOutOfWindow, "canonical witness leaves the window", {i, k});
    return w.index(i, k);
  };
  SpanningPairWitness out;
  out.p = need(0, 0);
  out.q = need(1, 0);
  for (int m = 1; m <= prefix; ++m) {
    out.ascending.push_back(need(0, m));
    out.descending.push_back(need(1, -m));
  }
  return out;
}

SpanningCheckReport verify_spanning_pair(const FiniteLattice& l, const SpanningPairWitness& w,
                                         int prefix) {
  auto need = [&](int e) {
    if (e < 0 || e >= l.size())
      fail(Err::ElementOutOfWindow, "witness element outside the lattice", {e});
  };
  need(w.p);
  need(w.q);
  if (int(w.ascending.size()) < prefix || int(w.descending.size()) < prefix)
    fail(Err::ElementOutOfWindow, "witness prefix shorter than requested", {prefix});
  for (int i = 0; i < prefix; ++i) {
    need(w.ascending[std::size_t(i)]);
    need(w.descending[std::size_t(i)]);
  }

  SpanningCheckReport rep;
  auto leq = [&](int a, int b) { return l.leq(a, b); };
  auto covers = [&](int a, int b) {
    auto up = l.upper_covers(a);
    return std::find(up.begin(), up.end(), b) != up.end();
  };
  run_prefix_checks(rep, w.p, w.q, w.ascending, w.descending, prefix, leq, covers,
                    [&](int e) { rep.violating.push_back(e); });
  // a finite lattice bounds every chain, so the infinite clauses always fail
  rep.unboundedness = Unboundedness::refuted;
  rep.refuting_bounds = {l.bottom(), l.top()};
  return rep;
}

bool two_by_z_covers(Coord a, Coord b, bool dualized) {
  if (dualized) std::swap(a, b);
  if (a.first < 0 || a.first > 1 || b.first < 0 || b.first > 1) return false;
  if (b.first == a.first && b.second == a.second + 1) return true;
  return b.first == a.first + 1 && b.second == a.second;
}

SpanningCheckReport verify_spanning_pair(const TwoByZWitness& w, int prefix, bool dualized) {
  TwoByZWitness v = w;
  if (w.canonical) {
    v.ascending.clear();
    v.descending.clear();
    for (int m = 1; m <= prefix; ++m) {
      if (dualized) {
        v.ascending.emplace_back(1, -m);
        v.descending.emplace_back(0, m);
      } else {
        v.ascending.emplace_back(0, m);
        v.descending.emplace_back(1, -m);
      }
    }
  }
  auto need = [&](Coord e) {
    if (e.first < 0 || e.first > 1)
      fail(Err::ElementOutOfWindow, "coordinate row outside 2 x Z", {e.first, e.second});
  };
  need(v.p);
  need(v.q);
  if (int(v.ascending.size()) < prefix || int(v.descending.size()) < prefix)
    fail(Err::ElementOutOfWindow, "witness prefix shorter than requested", {prefix});
  for (int i = 0; i < prefix; ++i) {
    need(v.ascending[std::size_t(i)]);
    need(v.descending[std::size_t(i)]);
  }

  SpanningCheckReport rep;
  auto raw_leq = [](Coord a, Coord b) { return a.first <= b.first && a.second <= b.second; };
  auto leq = [&](Coord a, Coord b) { return dualized ? raw_leq(b, a) : raw_leq(a, b); };
  auto covers = [&](Coord a, Coord b) { return two_by_z_covers(a, b, dualized); };
  run_prefix_checks(rep, v.p, v.q, v.ascending, v.descending, prefix, leq, covers, [&](Coord e) {
    rep.violating.push_back(e.first);
    rep.violating.push_back(e.second);
  });
  // only the generating formula certifies the chains as unbounded; a finite
  // list of coordinates never can
  rep.unboundedness = w.canonical ? Unboundedness::verified : Unboundedness::unverifiable;
  return rep;
}

bool check_theorem6_hypothesis(const FiniteLattice& window, int n_claim, const Bitset* interior) {
  return reducible_antichain_bound(window, interior).width <= n_claim;
}

bool check_theorem6_hypothesis(const TwoByZWindow& w, int n_claim) {
  Bitset in = w.interior();
  return check_theorem6_hypothesis(w.lattice, n_claim, &in);
}

Theorem6ConclusionReport check_theorem6_conclusion(const FiniteLattice& l,
                                                   const EmbeddingWindow& f) {
  if (f.lo > f.hi || int(f.image.size()) != 2 * (f.hi - f.lo + 1))
    fail(Err::CarrierMismatch, "embedding window image has the wrong shape",
         {int(f.image.size())});
  for (int e : f.image)
    if (e < 0 || e >= l.size())
      fail(Err::ElementOutOfWindow, "image element outside the lattice", {e});

  Theorem6ConclusionReport rep;
  auto report = [&](const char* clause, std::vector<int> ws) {
    if (!rep.failing_clause.empty()) return;
    rep.failing_clause = clause;
    rep.witness = std::move(ws);
  };

  rep.embedding_ok = true;
  Bitset image_set(l.size());
  for (int e : f.image) {
    if (image_set.test(e)) {
      rep.embedding_ok = false;
      report("embedding", {e});
    }
    image_set.set(e);
  }
  for (int k = f.lo; k <= f.hi && rep.embedding_ok; ++k)
    for (int i = 0; i < 2; ++i)
      for (int m = f.lo; m <= f.hi && rep.embedding_ok; ++m)
        for (int j = 0; j < 2; ++j) {
          int a = f.at(i, k), b = f.at(j, m);
          int want_join = f.at(std::max(i, j), std::max(k, m));
          int want_meet = f.at(std::min(i, j), std::min(k, m));
          if (l.join(a, b) != want_join || l.meet(a, b) != want_meet) {
            rep.embedding_ok = false;
            report("embedding", {a, b});
          }
        }

  rep.covers_ok = true;
  for (int k = f.lo + 1; k < f.hi; ++k) {
    auto up = l.upper_covers(f.at(0, k));
    if (std::find(up.begin(), up.end(), f.at(1, k)) == up.end()) {
      rep.covers_ok = false;
      report("covers", {f.at(0, k), f.at(1, k)});
      break;
    }
  }

  rep.outside_ok = true;
  for (int r = 0; r < l.size() && rep.outside_ok; ++r) {
    if (image_set.test(r)) continue;
    for (int m = f.lo; m <= f.hi && rep.outside_ok; ++m)
      for (int n = m; n <= f.hi && rep.outside_ok; ++n) {
        if (!(l.lt(f.at(0, m), r) && l.lt(r, f.at(1, n)))) continue;
        if (l.leq(r, f.at(0, n)) || l.leq(f.at(1, m), r)) continue;
        rep.outside_ok = false;
        report("outside", {r, f.at(0, m), f.at(1, n)});
      }
  }

  rep.ok = rep.embedding_ok && rep.covers_ok && rep.outside_ok;
  return rep;
}

Theorem5Report check_theorem5_premise(const FiniteLattice& l, const FiniteLattice& l_prime,
                                      const Bitset& c, const std::vector<int>& iso, int p, int q,
                                      int k_claim) {
  if (c.capacity() != l_prime.size())
    fail(Err::CarrierMismatch, "region does not index the base lattice");
  if (p < 0 || p >= l.size() || q < 0 || q >= l.size())
    fail(Err::UnknownElement, "copy pair candidates outside the lattice", {p, q});

  Theorem5Report rep;
  rep.convex_ok = !convexity_witness(l_prime, c).has_value();
  if (!rep.convex_ok) {
    rep.failing_clause = "convexity";
    return rep;
  }

  auto dd = day_double(l_prime, DoublingSpec{c, false});
  rep.iso_ok = int(iso.size()) == l.size() && l.size() == dd.lattice.size();
  if (rep.iso_ok) {
    std::vector<char> hit(std::size_t(l.size()), 0);
    for (int x : iso) {
      if (x < 0 || x >= l.size() || hit[std::size_t(x)]) {
        rep.iso_ok = false;
        break;
      }
      hit[std::size_t(x)] = 1;
    }
  }
  for (int a = 0; a < l.size() && rep.iso_ok; ++a)
    for (int b = 0; b < l.size(); ++b)
      if (l.leq(a, b) != dd.lattice.leq(iso[std::size_t(a)], iso[std::size_t(b)])) {
        rep.iso_ok = false;
        break;
      }
  if (!rep.iso_ok) {
    rep.failing_clause = "isomorphism";
    return rep;
  }

  for (int e : c.to_vector())
    if (iso[std::size_t(p)] == dd.lower_image[std::size_t(e)] &&
        iso[std::size_t(q)] == dd.upper_image[std::size_t(e)])
      rep.copy_pair_ok = true;
  if (!rep.copy_pair_ok) {
    rep.failing_clause = "copy_pair";
    return rep;
  }

  rep.premise_ok = true;
  rep.conclusion_checked = true;
  int k = k_claim >= 0 ? k_claim : l.size() / 2;
  if (k >= 1 && 2 * k == l.size())
    rep.conclusion_ok =
        is_isomorphic(l, product(chain_lattice(2), chain_lattice(k))).has_value();
  if (rep.conclusion_ok) rep.chain_length = k;
  return rep;
}

}  // namespace latkit
