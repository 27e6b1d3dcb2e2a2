#pragma once

// Surfaces glued from annuli along perfect matchings of letter occurrences.
//
// Each boundary word of length s (after subdividing letters) is an annulus
// cellulated by s quadrilaterals: inner vertices i_0..i_{s-1}, outer vertices
// o_0..o_{s-1}, and inner, outer and radial edges. Outer segment t runs from
// o_t to o_{t+1}. A matched (x,j)/(x^-1,j) pair of outer segments is glued
// with reversed orientation. Topology is then read off by union-find.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "wml/limits.hpp"
#include "wml/stallings.hpp"
#include "wml/words.hpp"

namespace wml {

/// Position of one letter occurrence: (word index, letter index).
struct Occurrence {
  int word = 0;
  int letter = 0;
  friend auto operator<=>(const Occurrence&, const Occurrence&) = default;
};

struct OccurrenceTable {
  std::map<int, std::vector<Occurrence>> positive, negative;  // by generator, in reading order
};

inline OccurrenceTable occurrences(const std::vector<Word>& words) {
  OccurrenceTable t;
  for (std::size_t m = 0; m < words.size(); ++m)
    for (std::size_t i = 0; i < words[m].size(); ++i) {
      Letter l = words[m][i];
      (l.sign() > 0 ? t.positive : t.negative)[l.generator()].push_back({static_cast<int>(m), static_cast<int>(i)});
    }
  return t;
}

using Matching = std::vector<int>;  // positive occurrence a -> negative occurrence sigma[a]

/// Boundary words plus, for every generator occurring, the matchings
/// sigma_{x,1..k_x} between its positive and negative occurrences.
struct MatchingSpec {
  std::vector<Word> words;
  std::map<int, std::vector<Matching>> matchings;

  int subdivision(int generator) const {
    auto it = matchings.find(generator);
    return it == matchings.end() ? 0 : static_cast<int>(it->second.size());
  }
};

/// One identification of a positive outer segment with a negative one.
struct Gluing {
  int generator = 0;
  int sub = 1;  // j in 1..k_x
  int positive_annulus = 0, positive_segment = 0;
  int negative_annulus = 0, negative_segment = 0;
  int positive_occurrence = 0, negative_occurrence = 0;
};

struct SurfaceComponent {
  std::vector<int> annuli;
  long vertices = 0, edges = 0, faces = 0;
  long chi = 0;
  int boundaries = 0;
  int genus = 0;
};

/// One outer segment of an annulus.
struct Segment {
  int generator = 0;
  int sign = 1;
  int sub = 1;
  int occurrence = 0;
};

class SurfaceComplex {
 public:
  std::vector<Word> words;
  std::vector<std::vector<Segment>> segments;  // per annulus
  std::vector<Gluing> gluings;
  std::vector<SurfaceComponent> components;
  std::vector<int> annulus_component;
  std::vector<std::vector<int>> outer_vertex_class;  // per annulus, per outer vertex
  int rank = 1;

  long total_chi() const {
    long c = 0;
    for (const auto& comp : components) c += comp.chi;
    return c;
  }
};

namespace detail {

inline void validate(const MatchingSpec& spec, const OccurrenceTable& occ) {
  for (const Word& w : spec.words)
    if (w.is_identity()) throw std::invalid_argument("surface: boundary word is trivial");
  std::set<int> gens;
  for (const auto& [g, v] : occ.positive) gens.insert(g);
  for (const auto& [g, v] : occ.negative) gens.insert(g);
  for (int g : gens) {
    auto pos = occ.positive.count(g) ? occ.positive.at(g).size() : 0;
    auto neg = occ.negative.count(g) ? occ.negative.at(g).size() : 0;
    if (pos != neg) throw std::invalid_argument("surface: generator x" + std::to_string(g) + " is unbalanced");
    auto it = spec.matchings.find(g);
    if (it == spec.matchings.end() || it->second.empty())
      throw std::invalid_argument("surface: no matching for generator x" + std::to_string(g));
    for (const Matching& s : it->second) {
      std::vector<int> sorted = s;
      std::sort(sorted.begin(), sorted.end());
      std::vector<int> expect(pos);
      std::iota(expect.begin(), expect.end(), 0);
      if (sorted != expect) throw std::invalid_argument("surface: matching for x" + std::to_string(g) + " is not a bijection");
    }
  }
  for (const auto& [g, v] : spec.matchings)
    if (!gens.count(g)) throw std::invalid_argument("surface: matching for absent generator x" + std::to_string(g));
}

}  // namespace detail

inline SurfaceComplex build_surface(const MatchingSpec& spec) {
  const OccurrenceTable occ = occurrences(spec.words);
  detail::validate(spec, occ);

  SurfaceComplex s;
  s.words = spec.words;
  for (const Word& w : spec.words) s.rank = std::max({s.rank, w.rank(), w.support_rank()});

  // Segments and the lookup (generator, sign, occurrence, sub) -> (annulus, segment).
  std::map<std::tuple<int, int, int, int>, std::pair<int, int>> where;
  std::map<std::pair<int, int>, int> occurrence_index;  // (word, letter) -> index among its sign
  for (const auto* table : {&occ.positive, &occ.negative})
    for (const auto& [g, list] : *table)
      for (std::size_t a = 0; a < list.size(); ++a) occurrence_index[{list[a].word, list[a].letter}] = static_cast<int>(a);
  for (std::size_t m = 0; m < spec.words.size(); ++m) {
    std::vector<Segment> segs;
    for (std::size_t i = 0; i < spec.words[m].size(); ++i) {
      Letter l = spec.words[m][i];
      const int k = spec.subdivision(l.generator());
      const int a = occurrence_index.at({static_cast<int>(m), static_cast<int>(i)});
      for (int step = 0; step < k; ++step) {
        const int j = l.sign() > 0 ? step + 1 : k - step;
        where[{l.generator(), l.sign(), a, j}] = {static_cast<int>(m), static_cast<int>(segs.size())};
        segs.push_back({l.generator(), l.sign(), j, a});
      }
    }
    s.segments.push_back(std::move(segs));
  }

  const std::size_t L = spec.words.size();
  std::vector<int> vbase(L), ebase(L);
  int nv = 0, ne = 0;
  for (std::size_t m = 0; m < L; ++m) {
    const int sm = static_cast<int>(s.segments[m].size());
    vbase[m] = nv;
    ebase[m] = ne;
    nv += 2 * sm;
    ne += 3 * sm;
  }
  auto outer_v = [&](int m, int t) {
    const int sm = static_cast<int>(s.segments[static_cast<std::size_t>(m)].size());
    return vbase[static_cast<std::size_t>(m)] + sm + (t % sm);
  };
  auto outer_e = [&](int m, int t) {
    const int sm = static_cast<int>(s.segments[static_cast<std::size_t>(m)].size());
    return ebase[static_cast<std::size_t>(m)] + sm + t;
  };

  detail::UnionFind vuf(nv), euf(ne), auf(static_cast<int>(L));
  for (const auto& [g, sigmas] : spec.matchings)
    for (std::size_t jj = 0; jj < sigmas.size(); ++jj) {
      const int j = static_cast<int>(jj) + 1;
      for (std::size_t a = 0; a < sigmas[jj].size(); ++a) {
        const int b = sigmas[jj][a];
        auto [pm, pt] = where.at({g, +1, static_cast<int>(a), j});
        auto [qm, qt] = where.at({g, -1, b, j});
        vuf.unite(outer_v(pm, pt), outer_v(qm, qt + 1));
        vuf.unite(outer_v(pm, pt + 1), outer_v(qm, qt));
        euf.unite(outer_e(pm, pt), outer_e(qm, qt));
        auf.unite(pm, qm);
        s.gluings.push_back({g, j, pm, pt, qm, qt, static_cast<int>(a), b});
      }
    }

  std::map<int, int> comp_id;
  s.annulus_component.resize(L);
  for (std::size_t m = 0; m < L; ++m) {
    auto [it, fresh] = comp_id.try_emplace(auf.find(static_cast<int>(m)), static_cast<int>(comp_id.size()));
    s.annulus_component[m] = it->second;
    if (fresh) s.components.emplace_back();
    s.components[static_cast<std::size_t>(it->second)].annuli.push_back(static_cast<int>(m));
  }
  for (auto& comp : s.components) {
    std::set<int> vs, es;
    for (int m : comp.annuli) {
      const int sm = static_cast<int>(s.segments[static_cast<std::size_t>(m)].size());
      for (int v = 0; v < 2 * sm; ++v) vs.insert(vuf.find(vbase[static_cast<std::size_t>(m)] + v));
      for (int e = 0; e < 3 * sm; ++e) es.insert(euf.find(ebase[static_cast<std::size_t>(m)] + e));
      comp.faces += sm;
    }
    comp.vertices = static_cast<long>(vs.size());
    comp.edges = static_cast<long>(es.size());
    comp.chi = comp.vertices - comp.edges + comp.faces;
    comp.boundaries = static_cast<int>(comp.annuli.size());
    const long twice_genus = 2 - comp.chi - comp.boundaries;
    if (twice_genus < 0 || twice_genus % 2 != 0)
      throw std::logic_error("surface: non-integral genus, cellulation is inconsistent");
    comp.genus = static_cast<int>(twice_genus / 2);
  }
  s.outer_vertex_class.resize(L);
  for (std::size_t m = 0; m < L; ++m)
    for (std::size_t t = 0; t < s.segments[m].size(); ++t)
      s.outer_vertex_class[m].push_back(vuf.find(outer_v(static_cast<int>(m), static_cast<int>(t))));
  return s;
}

/// Dual graph of one component: a vertex per region between consecutive
/// matched arcs, an x-labeled edge per (x,1) gluing (finer subsegments are
/// contracted, so each letter reads once), marked vertices at the annulus
/// basepoints. The image subgroup is wedge_marked of this graph.
inline LabeledGraph image_subgroup_graph(const SurfaceComplex& s, int component) {
  if (component < 0 || component >= static_cast<int>(s.components.size()))
    throw std::out_of_range("image_subgroup_graph: no such component");
  const auto& comp = s.components[static_cast<std::size_t>(component)];
  std::map<int, int> region;
  for (int m : comp.annuli)
    for (int cls : s.outer_vertex_class[static_cast<std::size_t>(m)]) region.try_emplace(cls, static_cast<int>(region.size()));
  auto rid = [&](int m, int t) {
    const auto& cls = s.outer_vertex_class[static_cast<std::size_t>(m)];
    return region.at(cls[static_cast<std::size_t>(t) % cls.size()]);
  };
  detail::UnionFind uf(static_cast<int>(region.size()));
  for (const auto& gl : s.gluings)
    if (gl.sub >= 2 && s.annulus_component[static_cast<std::size_t>(gl.positive_annulus)] == component)
      uf.unite(rid(gl.positive_annulus, gl.positive_segment), rid(gl.positive_annulus, gl.positive_segment + 1));
  std::vector<Edge> edges;
  for (const auto& gl : s.gluings)
    if (gl.sub == 1 && s.annulus_component[static_cast<std::size_t>(gl.positive_annulus)] == component)
      edges.push_back({rid(gl.positive_annulus, gl.positive_segment), rid(gl.positive_annulus, gl.positive_segment + 1),
                       gl.generator});
  std::vector<int> marked;
  for (int m : comp.annuli) marked.push_back(rid(m, 0));
  LabeledGraph raw(static_cast<int>(region.size()), edges, marked.front(), s.rank, marked);
  return detail::apply_identification(raw, uf);
}

/// Subgroup generated by the images of all paths between marked points.
inline LabeledGraph image_subgroup(const SurfaceComplex& s, int component) {
  return wedge_marked(image_subgroup_graph(s, component));
}

struct MatchingOptions {
  std::uint64_t spec_cap = 1'000'000;
};

namespace detail {

// Sequences sigma_1..sigma_k (k <= K) of permutations of p points with no two
// consecutive entries equal; equal neighbours give the same surface as the
// shorter sequence with that entry once.
inline std::vector<std::vector<Matching>> matching_sequences(int p, int K) {
  std::vector<Matching> perms;
  Matching v(static_cast<std::size_t>(p));
  std::iota(v.begin(), v.end(), 0);
  do perms.push_back(v);
  while (std::next_permutation(v.begin(), v.end()));
  std::vector<std::vector<Matching>> out, layer{{}};
  for (int k = 1; k <= K; ++k) {
    std::vector<std::vector<Matching>> next;
    for (const auto& seq : layer)
      for (const auto& s : perms)
        if (seq.empty() || seq.back() != s) {
          next.push_back(seq);
          next.back().push_back(s);
        }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

}  // namespace detail

/// Calls `visit` on every matching collection with k_x <= K per generator.
inline std::uint64_t for_each_matching(const std::vector<Word>& words, int max_subdivision,
                                       const std::function<void(const MatchingSpec&)>& visit,
                                       const MatchingOptions& opt = {}) {
  if (max_subdivision < 1) throw std::invalid_argument("enumerate_matchings: K must be at least 1");
  if (!is_balanced(words).balanced) throw std::invalid_argument("enumerate_matchings: words are not balanced");
  const OccurrenceTable occ = occurrences(words);
  std::vector<int> gens;
  std::vector<std::vector<std::vector<Matching>>> options;
  long double total = 1;
  for (const auto& [g, list] : occ.positive) {
    if (list.size() > 8) throw ResourceLimit("enumerate_matchings: more than 8 occurrences of a generator");
    gens.push_back(g);
    options.push_back(detail::matching_sequences(static_cast<int>(list.size()), max_subdivision));
    total *= static_cast<long double>(options.back().size());
  }
  if (total > static_cast<long double>(opt.spec_cap))
    throw ResourceLimit("enumerate_matchings: " + std::to_string(static_cast<double>(total)) +
                        " matching collections exceed the cap");
  std::vector<std::size_t> idx(gens.size(), 0);
  std::uint64_t count = 0;
  for (;;) {
    MatchingSpec spec{words, {}};
    for (std::size_t k = 0; k < gens.size(); ++k) spec.matchings[gens[k]] = options[k][idx[k]];
    visit(spec);
    ++count;
    std::size_t d = 0;
    for (; d < idx.size(); ++d) {
      if (++idx[d] < options[d].size()) break;
      idx[d] = 0;
    }
    if (d == idx.size()) break;
  }
  return count;
}

inline std::vector<MatchingSpec> enumerate_matchings(const std::vector<Word>& words, int max_subdivision,
                                                     const MatchingOptions& opt = {}) {
  std::vector<MatchingSpec> out;
  for_each_matching(words, max_subdivision, [&](const MatchingSpec& s) { out.push_back(s); }, opt);
  return out;
}

struct ForbiddenCheck {
  bool forbidden = false;
  std::optional<Gluing> witness;
};

/// Whether some matched pair joins two letters at the same position of w.
/// Every boundary word must be a power w^e of the cyclically reduced w.
inline ForbiddenCheck is_forbidden(const MatchingSpec& spec, const Word& w) {
  if (w.is_identity() || !w.is_cyclically_reduced())
    throw std::invalid_argument("is_forbidden: w must be nontrivial and cyclically reduced");
  const auto len = static_cast<long>(w.size());
  std::vector<long> exponent;
  for (const Word& b : spec.words) {
    long e = static_cast<long>(b.size()) / len;
    if (static_cast<long>(b.size()) % len != 0) throw std::invalid_argument("is_forbidden: word is not a power of w");
    if (b == w.pow(e))
      exponent.push_back(e);
    else if (b == w.pow(-e))
      exponent.push_back(-e);
    else
      throw std::invalid_argument("is_forbidden: word is not a power of w");
  }
  auto position = [&](const Occurrence& o) {
    long q = o.letter % len;
    return exponent[static_cast<std::size_t>(o.word)] > 0 ? q : len - 1 - q;
  };
  const OccurrenceTable occ = occurrences(spec.words);
  SurfaceComplex s = build_surface(spec);
  for (const auto& gl : s.gluings) {
    const auto& a = occ.positive.at(gl.generator)[static_cast<std::size_t>(gl.positive_occurrence)];
    const auto& b = occ.negative.at(gl.generator)[static_cast<std::size_t>(gl.negative_occurrence)];
    if (position(a) == position(b)) return {true, gl};
  }
  return {false, std::nullopt};
}

struct SpectrumKey {
  int components = 0;
  std::vector<int> boundary_profile;  // boundaries per component, sorted
  friend auto operator<=>(const SpectrumKey&, const SpectrumKey&) = default;
};

struct GenusSpectrum {
  std::uint64_t spec_count = 0;
  std::map<SpectrumKey, std::map<long, std::uint64_t>> chi;  // total chi multiset per shape
  std::map<std::pair<long, int>, std::uint64_t> component_chi_rank;  // (chi, image rank) per component
};

inline GenusSpectrum genus_spectrum(const std::vector<Word>& words, int max_subdivision,
                                    const MatchingOptions& opt = {}) {
  GenusSpectrum g;
  g.spec_count = for_each_matching(
      words, max_subdivision,
      [&](const MatchingSpec& spec) {
        SurfaceComplex s = build_surface(spec);
        SpectrumKey key{static_cast<int>(s.components.size()), {}};
        for (std::size_t c = 0; c < s.components.size(); ++c) {
          key.boundary_profile.push_back(s.components[c].boundaries);
          const int rk = image_subgroup(s, static_cast<int>(c)).subgroup_rank();
          ++g.component_chi_rank[{s.components[c].chi, rk}];
        }
        std::sort(key.boundary_profile.begin(), key.boundary_profile.end());
        ++g.chi[key][s.total_chi()];
      },
      opt);
  return g;
}

}  // namespace wml
