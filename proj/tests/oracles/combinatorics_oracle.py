"""Independent brute-force oracles for the graph and surface modules.

* fringe sizes: fold every vertex-set quotient of the spelling cycle of a
  cyclically reduced word and count isomorphism classes of based folded
  graphs by exhaustive bijection search (no canonical forms).
* commutator length of a single word: enumerate letter pairings and use
  genus = (1 - v + L/2) / 2 where v is the number of outer-vertex classes.
"""
import itertools
import sys


def set_partitions(k):
    def rec(i, blocks, assign):
        if i == k:
            yield list(assign)
            return
        for b in range(blocks + 1):
            assign.append(b)
            yield from rec(i + 1, max(blocks, b + 1), assign)
            assign.pop()
    yield from rec(0, 0, [])


def fold(nv, edges, base):
    parent = list(range(nv))

    def find(a):
        while parent[a] != a:
            a = parent[a]
        return a

    edges = set(edges)
    while True:
        edges = {(find(s), find(t), l) for s, t, l in edges}
        merged = False
        for (s1, t1, l1), (s2, t2, l2) in itertools.combinations(sorted(edges), 2):
            if l1 == l2 and s1 == s2 and t1 != t2:
                parent[find(t1)] = find(t2); merged = True; break
            if l1 == l2 and t1 == t2 and s1 != s2:
                parent[find(s1)] = find(s2); merged = True; break
        if not merged:
            break
    verts = sorted({find(v) for v in range(nv)})
    idx = {v: i for i, v in enumerate(verts)}
    return len(verts), frozenset((idx[s], idx[t], l) for s, t, l in edges), idx[find(base)]


def isomorphic(g, h):
    (n1, e1, b1), (n2, e2, b2) = g, h
    if n1 != n2 or len(e1) != len(e2):
        return False
    others = [v for v in range(n1) if v != b1]
    targets = [v for v in range(n2) if v != b2]
    for perm in itertools.permutations(targets):
        m = dict(zip(others, perm)); m[b1] = b2
        if {(m[s], m[t], l) for s, t, l in e1} == set(e2):
            return True
    return False


def cycle_graph(word):
    L = len(word)
    edges = []
    for i, a in enumerate(word):
        s, t = i, (i + 1) % L
        edges.append((s, t, a) if a > 0 else (t, s, -a))
    return L, edges


def fringe_size(word):
    L, edges = cycle_graph(word)
    reps = []
    for part in set_partitions(L):
        g = fold(max(part) + 1, [(part[s], part[t], l) for s, t, l in edges], part[0])
        if not any(isomorphic(g, r) for r in reps):
            reps.append(g)
    ranks = sorted(len(e) - nv + 1 for nv, e, _ in reps)
    return len(reps), ranks


def min_genus(word):
    L = len(word)
    gens = sorted({abs(a) for a in word})
    best = None
    per_gen = []
    for g in gens:
        P = [i for i, a in enumerate(word) if a == g]
        N = [i for i, a in enumerate(word) if a == -g]
        per_gen.append([list(zip(P, perm)) for perm in itertools.permutations(N)])
    for combo in itertools.product(*per_gen):
        parent = list(range(L))

        def find(a):
            while parent[a] != a:
                a = parent[a]
            return a
        for pairs in combo:
            for a, b in pairs:
                # outer vertex i = start of segment i
                parent[find(a)] = find((b + 1) % L)
                parent[find((a + 1) % L)] = find(b)
        v = len({find(i) for i in range(L)})
        genus = (1 - v + L // 2) // 2
        best = genus if best is None else min(best, genus)
    return best


def multi_word_chi(words, matchings):
    """Euler characteristic of the surface glued from annuli with boundary
    words `words`; matchings[g] is the list of permutations sigma_{g,1..k}
    from positive to negative occurrences (reading order). Computed as
    (outer vertex classes) - (glued pairs), annuli having chi 0."""
    k = {g: len(m) for g, m in matchings.items()}
    segs = []  # per word: list of (gen, sign, occurrence, sub)
    count = {}
    for w in words:
        row = []
        for a in w:
            g, sgn = abs(a), (1 if a > 0 else -1)
            occ = count.get((g, sgn), 0)
            count[(g, sgn)] = occ + 1
            subs = range(1, k[g] + 1) if sgn > 0 else range(k[g], 0, -1)
            row += [(g, sgn, occ, j) for j in subs]
        segs.append(row)
    ids = {}
    for m, row in enumerate(segs):
        for t in range(len(row)):
            ids[(m, t)] = len(ids)
    where = {}
    for m, row in enumerate(segs):
        for t, (g, sgn, occ, j) in enumerate(row):
            where[(g, sgn, occ, j)] = (m, t)
    parent = list(range(len(ids)))

    def find(a):
        while parent[a] != a:
            a = parent[a]
        return a

    def vid(m, t):
        return ids[(m, t % len(segs[m]))]
    pairs = 0
    for g, sigmas in matchings.items():
        for j, sigma in enumerate(sigmas, start=1):
            for a, b in enumerate(sigma):
                pm, pt = where[(g, 1, a, j)]
                qm, qt = where[(g, -1, b, j)]
                parent[find(vid(pm, pt))] = find(vid(qm, qt + 1))
                parent[find(vid(pm, pt + 1))] = find(vid(qm, qt))
                pairs += 1
    return len({find(i) for i in ids.values()}) - pairs


def parse(s):
    m = {"x": 1, "y": 2, "X": -1, "Y": -2}
    return [m[c] for c in s]


if __name__ == "__main__":
    print("fringe([x,y])", fringe_size(parse("xyXY")))
    print("fringe(x^2y^2)", fringe_size(parse("xxyy")))
    print("fringe([x,y^2])", fringe_size(parse("xyyXYY")))
    print("fringe(x)", fringe_size(parse("x")))
    print("genus([x,y])", min_genus(parse("xyXY")))
    print("genus([x,y]^2)", min_genus(parse("xyXY" * 2)))
    print("genus([x,y]^3)", min_genus(parse("xyXY" * 3)))
    print("genus([x,y^2])", min_genus(parse("xyyXYY")))
    # Two annuli [x,y], [y,x] with the x letters split in two.
    idp, sw = (0, 1), (1, 0)
    for sx in [(idp, sw), (sw, idp)]:
        for sy in [(idp,), (sw,)]:
            chi = multi_word_chi([parse("xyXY"), parse("yxYX")], {1: list(sx), 2: list(sy)})
            print("chi([x,y],[y,x]; x=%s, y=%s)" % (sx, sy), chi)
