#pragma once

// Primitivity rank, commutator length and commutator-critical subgroups.

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "wml/limits.hpp"
#include "wml/stallings.hpp"
#include "wml/surfaces.hpp"
#include "wml/whitehead.hpp"
#include "wml/words.hpp"

namespace wml {

struct InvariantOptions {
  FringeOptions fringe;
  WhiteheadOptions whitehead;
  int genus_cap = 3;
  int max_subdivision = 2;
  MatchingOptions matching{200'000};
};

/// A subgroup together with w written in its basis.
struct Witness {
  LabeledGraph graph;
  std::string key;
  Word rewritten;
};

struct PrimitivityResult {
  Extended pi;
  std::vector<Witness> witnesses;  // every fringe subgroup of rank pi where w is imprimitive
};

/// pi(w): 0 for the identity, 1 for proper powers, otherwise the least rank
/// of a fringe subgroup in which w is not primitive; infinite if none.
inline PrimitivityResult primitivity_rank(const Word& w, int r, const InvariantOptions& opt = {}) {
  Word word = w.with_rank(r);
  if (word.is_identity()) return {Extended::finite(0), {}};
  auto pp = is_proper_power(word);
  if (pp.proper) {
    LabeledGraph g = canonical(core_graph({pp.root}, r));
    return {Extended::finite(1), {{g, serialize(g), *membership_rewrite(g, word)}}};
  }
  try {
    std::vector<Witness> best;
    int best_rank = -1;
    for (const auto& m : fringe(word, opt.fringe)) {
      const int rk = m.graph.subgroup_rank();
      if (best_rank >= 0 && rk > best_rank) break;  // sorted by rank
      Word rw = *membership_rewrite(m.graph, word);
      if (is_primitive(rw, rk)) continue;
      best_rank = rk;
      best.push_back({m.graph, m.key, rw});
    }
    if (best_rank < 0) return {Extended::infinite(), {}};
    return {Extended::finite(best_rank), best};
  } catch (const ResourceLimit& e) {
    return {Extended::undecided(e.what()), {}};
  }
}

/// The critical subgroups: rank pi(w) and w imprimitive in them.
inline std::vector<LabeledGraph> critical_subgroups(const Word& w, int r, const InvariantOptions& opt = {}) {
  std::vector<LabeledGraph> out;
  for (const auto& wit : primitivity_rank(w, r, opt).witnesses) out.push_back(wit.graph);
  return out;
}

/// H is algebraic over <w>: w lies in no proper free factor of H.
inline bool is_algebraic_extension(const LabeledGraph& h, const Word& w, const WhiteheadOptions& opt = {}) {
  auto rw = membership_rewrite(h, w);
  if (!rw) throw std::invalid_argument("is_algebraic_extension: w is not in H");
  return !in_proper_free_factor(*rw, h.subgroup_rank(), opt);
}

struct CommutatorLengthResult {
  Extended cl;
  int best_subdivision = 0;          // K at which the minimum was found
  bool improved_by_subdivision = false;  // K = 2 beat K = 1
  std::vector<std::string> notes;
};

/// cl(w) as the least genus of a one-boundary matching surface for w, over
/// subdivision K = 1 and then K = 2 when that enumeration fits the cap.
inline CommutatorLengthResult commutator_length(const Word& w, const InvariantOptions& opt = {}) {
  CommutatorLengthResult res;
  Word core = cyclic_reduce(w).core;
  if (core.is_identity()) {
    res.cl = Extended::finite(0);
    return res;
  }
  if (!in_commutator_subgroup(core)) {
    res.cl = Extended::infinite();
    return res;
  }
  std::optional<int> best;
  for (int K = 1; K <= opt.max_subdivision; ++K) {
    std::optional<int> at_k;
    try {
      for_each_matching(
          {core}, K,
          [&](const MatchingSpec& spec) {
            int g = build_surface(spec).components.front().genus;
            if (!at_k || g < *at_k) at_k = g;
          },
          opt.matching);
    } catch (const ResourceLimit& e) {
      res.notes.push_back("K=" + std::to_string(K) + " skipped: " + e.what());
      if (K == 1) {
        res.cl = Extended::undecided(e.what());
        return res;
      }
      break;
    }
    if (at_k && (!best || *at_k < *best)) {
      if (best) res.improved_by_subdivision = true;
      best = at_k;
      res.best_subdivision = K;
    }
  }
  if (!best) {
    res.cl = Extended::undecided("no matching surface found");
  } else if (*best > opt.genus_cap) {
    res.cl = Extended::above(opt.genus_cap);
  } else {
    res.cl = Extended::finite(*best);
  }
  return res;
}

struct CommCritResult {
  bool decided = true;
  std::string reason;
  std::vector<Witness> subgroups;
  std::size_t count() const { return subgroups.size(); }
};

/// Fringe subgroups of rank pi(w) = 2cl(w) in which w is, for some basis,
/// the standard surface word [a1,b1]...[ag,bg].
inline CommCritResult comm_crit(const Word& w, int r, const Extended& pi, const Extended& cl,
                                const InvariantOptions& opt = {}) {
  CommCritResult res;
  if (pi.is_undecided() || cl.is_undecided() || cl.kind == Extended::Kind::AboveCap) {
    // An odd pi settles the answer regardless of cl.
    if (pi.is_finite() && pi.value % 2 == 1) return res;
    res.decided = false;
    res.reason = "pi or cl undecided";
    return res;
  }
  if (!pi.is_finite() || !cl.is_finite() || pi.value % 2 == 1 || pi.value != 2 * cl.value || pi.value == 0)
    return res;
  const int g = static_cast<int>(cl.value);
  const Word surface = standard_surface_word(g);
  Word word = w.with_rank(r);
  try {
    for (const auto& m : fringe(word, opt.fringe)) {
      if (m.graph.subgroup_rank() != pi.value) continue;
      Word rw = *membership_rewrite(m.graph, word);
      if (!in_commutator_subgroup(rw)) continue;
      if (orbit_equivalent(rw, surface.with_rank(2 * g), 2 * g, opt.whitehead)) res.subgroups.push_back({m.graph, m.key, rw});
    }
  } catch (const ResourceLimit& e) {
    res.decided = false;
    res.reason = e.what();
    res.subgroups.clear();
  }
  return res;
}

struct InvariantReport {
  Word word;
  int rank = 1;
  Extended pi;
  std::vector<Witness> pi_witnesses;
  CommutatorLengthResult cl;
  CommCritResult comm_crit;
  PowerDecomposition proper_power;

  bool undecided() const { return pi.is_undecided() || cl.cl.is_undecided() || !comm_crit.decided; }
};

inline InvariantReport compute_invariants(const Word& w, int r, const InvariantOptions& opt = {}) {
  InvariantReport rep;
  rep.word = w.with_rank(r);
  rep.rank = r;
  rep.proper_power = is_proper_power(rep.word);
  auto pr = primitivity_rank(rep.word, r, opt);
  rep.pi = pr.pi;
  rep.pi_witnesses = std::move(pr.witnesses);
  rep.cl = commutator_length(rep.word, opt);
  if (!rep.proper_power.proper)
    rep.comm_crit = comm_crit(rep.word, r, rep.pi, rep.cl.cl, opt);
  return rep;
}

}  // namespace wml
