#!/usr/bin/env python3
"""Regenerate data/catalog.txt, the shipped table of local models.

Every entry records a smooth affine spherical L-variety through its weight
monoid in (c | z) coordinates: c_i = <chi, alpha_i^vee> over the simple roots
of the listed type, z the central part.  Usage: make_catalog.py [out]
"""

import itertools
import sys
from pathlib import Path

MAX_RANK = 8


def type_token(family, r):
    if r == 1 and family in "BC":
        return "A1"
    return f"{family}{r}"


def unit(n, i):
    v = [0] * n
    v[i] = 1
    return v


def rows(vs):
    return "; ".join(",".join(str(x) for x in v) for v in vs)


class Entry:
    def __init__(self, name, types, generators, roots, derived=None, central=0, provenance="", smooth=True, note=""):
        self.name = name
        self.type = "x".join(types)
        self.generators = generators
        self.roots = roots
        self.derived = derived
        self.central = central
        self.provenance = provenance
        self.smooth = smooth
        self.note = note

    def text(self):
        out = ["[entry]", f"name = {self.name}", f"type = {self.type}", f"central_rank = {self.central}",
               f"generators = {rows(self.generators)}"]
        if self.derived:
            out.append(f"derived = {rows(self.derived)}")
        if self.roots is not None:
            out.append("spherical_roots = " + (rows(self.roots) if self.roots else "none"))
        if not self.smooth:
            out.append("smooth = false")
        if self.note:
            out.append(f"note = {self.note}")
        if self.provenance:
            out.append(f"provenance = {self.provenance}")
        return "\n".join(out)


# Factor blocks: (type token, rank, derived basis or None, generators, roots).
def block_free(family, r, roots):
    return (type_token(family, r), r, None, [unit(r, i) for i in range(r)], roots)


def adjacent_sums(r):
    return [[1 if j in (i, i + 1) else 0 for j in range(r)] for i in range(r - 1)]


def y_block(r):
    # all dominant weights of Sp(2r); the last C node is long
    return block_free("C", r, adjacent_sums(r))


def z_block(m):
    # all dominant weights of SO(2m+1); the last B node is short
    derived = [unit(m, i) for i in range(m - 1)] + [[2 if j == m - 1 else 0 for j in range(m)]]
    roots = adjacent_sums(m) + [[2 if j == m - 1 else 0 for j in range(m)]]
    return (type_token("B", m), m, derived, derived, roots)


def product(name, blocks, provenance):
    total = sum(b[1] for b in blocks)
    types, gens, roots = [], [], []
    derived = []
    has_derived = False
    off = 0
    for tok, r, der, gs, rs in blocks:
        types.append(tok)
        pad = lambda v: [0] * off + list(v) + [0] * (total - off - r)
        gens += [pad(g) for g in gs]
        roots += [pad(s) for s in rs]
        if der is not None:
            has_derived = True
            derived += [pad(d) for d in der]
        else:
            derived += [pad(unit(r, i)) for i in range(r)]
        off += r
    return Entry(name, types, gens, roots, derived if has_derived else None, provenance=provenance)


def hilbert_basis(member, box):
    """Irreducible nonzero elements of a 2-dimensional monoid, by search."""
    pts = [p for p in itertools.product(range(-box, box + 1), repeat=2) if p != (0, 0) and member(*p)]
    s = set(pts)
    out = []
    for p in pts:
        if not any(q != p and (p[0] - q[0], p[1] - q[1]) in s for q in pts):
            out.append(list(p))
    return sorted(out)


def catalog():
    es = []
    # rank one and vector representations
    es.append(Entry("C^2 for SL(2)", ["A1"], [[1]], [], provenance="defining representation of SL(2)"))
    for n in range(3, MAX_RANK + 1):
        es.append(Entry(f"C^{n} for SL({n})", [f"A{n-1}"], [unit(n - 1, 0)], [],
                        provenance=f"defining representation of SL({n})"))
    es.append(Entry("SL(2)/C*", ["A1"], [[2]], [[2]], provenance="symmetric space, weights 2Z>=0 omega"))
    es.append(Entry("SL(2)/N(C*)", ["A1"], [[4]], [[2]], provenance="symmetric space, weights 4Z>=0 omega"))
    es.append(Entry("SO(3)/SO(2)", ["A1"], [[2]], [[2]], derived=[[2]], provenance="symmetric space of SO(3)"))
    es.append(Entry("SO(3)/O(2)", ["A1"], [[4]], [[2]], derived=[[2]], provenance="symmetric space of SO(3)"))
    es.append(Entry("SO(3) with weights 4Z>=0 alpha", ["A1"], [[8]], None, derived=[[2]], smooth=False,
                    note="no smooth affine SO(3)-variety has weight monoid Z>=0(4 alpha)",
                    provenance="the affine SO(3)-varieties with this monoid are singular"))

    # all dominant weights of SL(n)
    for n in range(3, MAX_RANK + 1):
        name = f"SL({n})/Sp({n-1})" if n % 2 else f"SL({n})x^{{Sp({n})}}C^{n}"
        es.append(product(name, [block_free("A", n - 1, adjacent_sums(n - 1))], "model with every dominant weight once"))

    # Sp(2n): C^{2n}, induced quaternionic models, Y_n and products of Y's
    for n in range(2, MAX_RANK + 1):
        es.append(Entry(f"C^{2*n} for Sp({2*n})", [type_token("C", n)], [unit(n, 0)], [],
                        provenance=f"defining representation of Sp({2*n})"))
    for a in range(1, MAX_RANK):
        for b in range(1, MAX_RANK - a + 1):
            blk_a = (type_token("C", a), a, None, [unit(a, 0)], [])
            blk_b = (type_token("C", b), b, None, [], [])
            es.append(product(f"Sp({2*(a+b)})x^{{Sp({2*a})xSp({2*b})}}C^{2*a}", [blk_a, blk_b],
                              "C^{2a} for the first factor, second factor trivial"))
    for n in range(2, MAX_RANK + 1):
        es.append(product(f"Y_{n} for Sp({2*n})", [y_block(n)], "model with every dominant weight once"))
    for i in range(1, MAX_RANK // 2 + 1):
        for j in range(i, MAX_RANK - i + 1):
            es.append(product(f"Y_{{{i},{j}}} for Sp({2*i})xSp({2*j})", [y_block(i), y_block(j)],
                              "product Y_i x Y_j"))

    # SO(2m+1): Z_m and products with Y_i
    for m in range(2, MAX_RANK + 1):
        es.append(product(f"SO({2*m+1})/GL({m})", [z_block(m)], "model with every dominant weight once"))
    for i in range(1, MAX_RANK):
        for m in range(1, MAX_RANK - i + 1):
            es.append(product(f"Y_{i} x Z_{m} for Sp({2*i})xSO({2*m+1})", [y_block(i), z_block(m)],
                              "product Y_i x Z_m"))

    # groups as (L x L)-varieties; generators (omega_i, omega_i*)
    def double(name, family, r, dual):
        tok = type_token(family, r)
        gens = [unit(2 * r, i) for i in range(r)]
        for i in range(r):
            gens[i][r + dual(i)] = 1
        return Entry(name, [tok, tok], gens, [list(g) for g in gens], provenance="coordinate ring sum of End(V)")

    es.append(double("SL(2) as SL(2)xSL(2)-variety", "A", 1, lambda i: i))
    for n in range(3, 6):
        es.append(double(f"SL({n}) as SL({n})xSL({n})-variety", "A", n - 1, lambda i, r=n - 1: r - 1 - i))
    for n in range(2, 4):
        es.append(double(f"Sp({2*n}) as Sp({2*n})xSp({2*n})-variety", "C", n, lambda i: i))
    es.append(double("G2 as G2xG2-variety", "G", 2, lambda i: i))
    es.append(Entry("SL(2)xSL(2) as (SL(2)xSL(2))^2-variety", ["A1"] * 4, [[1, 0, 1, 0], [0, 1, 0, 1]],
                    [[1, 0, 1, 0], [0, 1, 0, 1]], provenance="coordinate ring sum of End(V)"))
    es.append(Entry("SO(4) as SO(4)xSO(4)-variety", ["A1"] * 4, [[1, 1, 1, 1], [2, 0, 2, 0], [0, 2, 0, 2]],
                    [[1, 0, 1, 0], [0, 1, 0, 1]],
                    derived=[[1, 1, 0, 0], [0, 2, 0, 0], [0, 0, 1, 1], [0, 0, 0, 2]],
                    provenance="coordinate ring sum of End(V), V through SO(4)"))

    # GL(n) as S(GL(n) x GL(n))-variety: the center acts trivially
    for n in range(2, 5):
        r = n - 1
        tok = type_token("A", r)
        gens = []
        for i in range(r):
            g = [0] * (2 * r + 1)
            g[i] = 1
            g[r + (r - 1 - i)] = 1
            gens.append(g)
        es.append(Entry(f"SL({n}) as S(GL({n})xGL({n}))-variety", [tok, tok], gens, [g[:2 * r] for g in gens],
                        central=1, provenance="symmetric space SL(2n)/S(GL(n)xGL(n)) at a vertex"))

    # L = SL(2) x C*: quotients by mu_n and line bundles over SL(2)/T
    for n in range(1, 7):
        gens = hilbert_basis(lambda k, j: abs(n * j) <= k and (k - n * j) % 2 == 0, 2 * n + 2)
        es.append(Entry(f"SL(2)/mu_{n}", ["A1"], gens, [[1]], central=1,
                        provenance=f"SL(2) x C* acting by left and right translation, C* = T/mu_{n}"))
    for a in range(1, 7):
        gens = hilbert_basis(lambda k, d: d >= 0 and k >= a * d and (k - a * d) % 2 == 0, 2 * a + 2)
        es.append(Entry(f"SL(2)x^{{C*}}C_{a}", ["A1"], gens, [[1]], central=1,
                        provenance=f"line bundle of weight {a} over SL(2)/T"))
    return es


def main():
    out = Path(sys.argv[1]) if len(sys.argv) > 1 else Path(__file__).resolve().parent.parent / "data" / "catalog.txt"
    body = "\n\n".join(e.text() for e in catalog())
    out.write_text("# generated by tools/make_catalog.py\nformat = 1\n\n" + body + "\n")


if __name__ == "__main__":
    main()
