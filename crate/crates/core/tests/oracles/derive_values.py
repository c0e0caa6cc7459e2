#!/usr/bin/env python3
"""Brute-force oracle for the frozen expected values in the core test suite.

Everything here is computed by direct enumeration over subsets and chains,
without sharing any code path with the Rust implementation.  Run with
`python3 derive_values.py` and compare against the constants in the tests.
"""
import itertools
from functools import lru_cache


def popcount(x):
    return bin(x).count("1")


def proper_faces(n):
    """Nonempty proper subsets of an n-set: face poset of the boundary of an (n-1)-simplex."""
    full = (1 << n) - 1
    return [m for m in range(1, full)]


def chain_counts(elements, leq):
    """f-vector of the order complex: number of chains of each length."""
    elements = list(elements)
    up = {e: [f for f in elements if f != e and leq(e, f)] for e in elements}
    memo = {}

    def count(e):
        if e in memo:
            return memo[e]
        out = {0: 1}
        for f in up[e]:
            for k, v in count(f).items():
                out[k + 1] = out.get(k + 1, 0) + v
        memo[e] = out
        return out

    total = {}
    for e in elements:
        for k, v in count(e).items():
            total[k] = total.get(k, 0) + v
    return [total[k] for k in sorted(total)]


def sub(a, b):
    return a & b == a


def graph_components(vertices, edges):
    parent = {v: v for v in vertices}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in edges:
        parent[find(a)] = find(b)
    return len({find(v) for v in vertices})


def c5_full(k):
    cols = range(1, 1 << k)
    edges = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]
    return [a for a in itertools.product(cols, repeat=5) if all(a[u] & a[v] == 0 for u, v in edges)]


def c5_small_by_image(k):
    """Restriction image of Hom(C_5, K_k) to vertices 1, 3, 5."""
    return sorted({(a[0], a[2], a[4]) for a in c5_full(k)})


def c5_small_by_predicate(k):
    full = (1 << k) - 1
    cols = range(1, 1 << k)
    return sorted(
        (f1, f3, f5)
        for f1, f3, f5 in itertools.product(cols, repeat=3)
        if f1 & f5 == 0 and (f1 | f3) != full and (f3 | f5) != full
    )


def triples(n):
    """(N, B, D) over the face poset of the boundary of the (n+1)-simplex."""
    P = proper_faces(n + 2)
    N, B, D = [], [], []
    for p in P:
        for q in P:
            for r in P:
                if not sub(q, r):
                    continue
                if p & r:
                    N.append((p, q, r))
                    if not sub(p, q):
                        B.append((p, q, r))
                if sub(p, q):
                    D.append((p, q, r))
    return N, B, D


def triple_leq(a, b):
    # (p^op, q, r^op): p reversed, q forward, r reversed
    return sub(b[0], a[0]) and sub(a[1], b[1]) and sub(b[2], a[2])


def main():
    print("Hom(C5,K_k) cell counts:", {k: len(c5_full(k)) for k in (2, 3, 4, 5)})
    print("proper 3-colourings of C5:", sum(1 for a in c5_full(3) if all(popcount(x) == 1 for x in a)))
    print("proper 4-colourings of C5:", sum(1 for a in c5_full(4) if all(popcount(x) == 1 for x in a)))
    for k in (2, 3, 4, 5):
        img, pred = c5_small_by_image(k), c5_small_by_predicate(k)
        print(f"Hom_{{2,4}}(C5,K{k}): image={len(img)} predicate={len(pred)} agree={img == pred}")

    # Hom(K2,K3): disjoint nonempty pairs
    print("Hom(K2,K3):", sum(1 for a in range(1, 8) for b in range(1, 8) if a & b == 0))

    for n in (1, 2):
        N, B, D = triples(n)
        print(f"n={n}: |N|={len(N)} |B|={len(B)} |D|={len(D)}")
        fB = chain_counts(B, triple_leq)
        print(f"  f(ΔB)={fB}")
        if n == 1:
            edges = [(a, b) for a in B for b in B if a != b and triple_leq(a, b)]
            c = graph_components(B, edges)
            print(f"  ΔB components={c} b1={len(edges) - len(B) + c}")
            fN = chain_counts(N, triple_leq)
            print(f"  f(ΔN)={fN}")
            amb = [(p, q, r) for p in proper_faces(3) for q in proper_faces(3) for r in proper_faces(3) if sub(q, r)]
            print(f"  f(Δ(P^op x Int P))={chain_counts(amb, triple_leq)}")

    # interval posets of boundary-simplex face posets and of chains
    for k in (3, 4):
        P = proper_faces(k)
        I = [(p, q) for p in P for q in P if sub(p, q)]
        ileq = lambda a, b: sub(a[0], b[0]) and sub(b[1], a[1])
        print(f"∂Δ^{k-1}: |P|={len(P)} f(ΔP)={chain_counts(P, sub)} |Int P|={len(I)} f(Δ Int P)={chain_counts(I, ileq)}")
        four = [(p, q, r, s) for p in P for q in P for r in P for s in P if sub(p, q) and sub(q, r) and sub(r, s)]
        three = [(p, q, r) for p in P for q in P for r in P if sub(p, q) and sub(q, r)]
        c32leq = lambda a, b: sub(a[0], b[0]) and sub(b[1], a[1]) and sub(a[2], b[2])
        print(f"  |4-chains|={len(four)} |chain32|={len(three)} f(Δ chain32)={chain_counts(three, c32leq)}")
    for m in (2, 3):
        P = list(range(m))
        le = lambda a, b: a <= b
        four = [t for t in itertools.product(P, repeat=4) if t[0] <= t[1] <= t[2] <= t[3]]
        three = [t for t in itertools.product(P, repeat=3) if t[0] <= t[1] <= t[2]]
        print(f"{m}-chain: |Int|={sum(1 for a in P for b in P if a <= b)} |4-chains|={len(four)} |chain32|={len(three)}")

    # D for ∂Δ^2 via the closed formula
    P = proper_faces(3)
    print("sum_{q<=r}(2^|q|-1) for ∂Δ^2:", sum((1 << popcount(q)) - 1 for q in P for r in P if sub(q, r)))

    # Hom(C5,K4) order complex f-vector and Euler characteristic
    cells = c5_full(4)
    leq = lambda a, b: all(sub(x, y) for x, y in zip(a, b))
    f = chain_counts(cells, leq)
    print("f(Δ F Hom(C5,K4)) =", f, "chi =", sum((-1) ** i * x for i, x in enumerate(f)))
    print("max cell dim Hom(C5,K4) =", max(sum(popcount(x) - 1 for x in a) for a in cells))


def order_complex_faces(elements, leq):
    """All chains, grouped by dimension, as sorted tuples of element indices."""
    elements = list(elements)
    idx = {e: i for i, e in enumerate(elements)}
    up = {e: [f for f in elements if f != e and leq(e, f)] for e in elements}
    faces = {}

    def extend(chain):
        faces.setdefault(len(chain) - 1, []).append(tuple(sorted(idx[c] for c in chain)))
        for f in up[chain[-1]]:
            extend(chain + [f])

    for e in elements:
        extend([e])
    return faces


def rank_mod_p(columns, p):
    """Rank of a sparse matrix over GF(p); columns are dicts row -> value."""
    pivots = {}
    rank = 0
    for col in columns:
        col = {r: v % p for r, v in col.items() if v % p}
        while col:
            low = max(col)
            if low not in pivots:
                pivots[low] = col
                rank += 1
                break
            other = pivots[low]
            factor = col[low] * pow(other[low], p - 2, p) % p
            for r, v in other.items():
                nv = (col.get(r, 0) - factor * v) % p
                if nv:
                    col[r] = nv
                else:
                    col.pop(r, None)
    return rank


def betti_mod_p(faces, p):
    dims = sorted(faces)
    index = {d: {f: i for i, f in enumerate(faces[d])} for d in dims}
    ranks = {}
    for d in dims:
        if d == 0:
            ranks[d] = 0
            continue
        cols = []
        for f in faces[d]:
            cols.append({index[d - 1][f[:i] + f[i + 1:]]: (-1) ** i for i in range(len(f))})
        ranks[d] = rank_mod_p(cols, p)
    return [len(faces[d]) - ranks[d] - ranks.get(d + 1, 0) for d in dims]


def homology_cross_checks():
    _, B, _ = triples(2)
    faces = order_complex_faces(B, triple_leq)
    print("ΔB(∂Δ^3) betti mod 2:", betti_mod_p(faces, 2), "mod 3:", betti_mod_p(faces, 3))
    cells = c5_full(4)
    leq = lambda a, b: all(sub(x, y) for x, y in zip(a, b))
    faces = order_complex_faces(cells, leq)
    print("Δ F Hom(C5,K4) betti mod 2:", betti_mod_p(faces, 2), "mod 3:", betti_mod_p(faces, 3))


if __name__ == "__main__":
    main()
    homology_cross_checks()
