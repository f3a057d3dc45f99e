#!/usr/bin/env python3
"""Independent brute-force oracle for the operad engine.

Shares no code with the C++ engine. Trees are nested tuples, labels are
ints, coefficients are fractions.Fraction, elimination is dense textbook
Gaussian elimination. The ideal is generated literally: every context tree
with a marked leaf, every relation, every ordered triple of subtrees and
every bijective labeling.

Run:  python3 tests/oracle/brute_force.py  (prints the values frozen into
tests/unit/test_oracle_values.cpp)
"""
from fractions import Fraction
from itertools import permutations, combinations
from math import factorial
import sys

# ---------------------------------------------------------------- trees


def shapes(n):
    if n == 1:
        return ['L']
    out = []
    for k in range(1, n):
        for l in shapes(k):
            for r in shapes(n - k):
                out.append((l, r))
    return out


def fill(shape, labels):
    it = iter(labels)

    def go(s):
        if s == 'L':
            return next(it)
        return (go(s[0]), go(s[1]))
    return go(shape)


def all_monomials(n):
    return [fill(s, p) for s in shapes(n) for p in permutations(range(1, n + 1))]


def leaves(t):
    if isinstance(t, int):
        return [t]
    return leaves(t[0]) + leaves(t[1])


def render(t):
    if isinstance(t, int):
        return 'abcdefghijklmnopqrstuvwxyz'[t - 1]
    return '(' + render(t[0]) + '*' + render(t[1]) + ')'


def relabel(t, f):
    if isinstance(t, int):
        return f[t]
    return (relabel(t[0], f), relabel(t[1], f))


def mirror(t):
    if isinstance(t, int):
        return t
    return (mirror(t[1]), mirror(t[0]))


# --------------------------------------------------------- identities
# Tiny independent parser: terms like "+ 2 a*(b*c)" with full parentheses.

def parse_product(s, i, names):
    if s[i] == '(':
        left, i = parse_product(s, i + 1, names)
        assert s[i] == '*'
        right, i = parse_product(s, i + 1, names)
        assert s[i] == ')'
        return (left, right), i + 1
    ch = s[i]
    if ch not in names:
        names[ch] = len(names) + 1
    return names[ch], i + 1


def parse_identity(text):
    s = text.replace(' ', '')
    if '=' in s:
        lhs, rhs = s.split('=')
    else:
        lhs, rhs = s, '0'
    names = {}
    vec = {}

    def side(expr, sign):
        if expr == '0':
            return
        i = 0
        while i < len(expr):
            sg = 1
            if expr[i] in '+-':
                sg = -1 if expr[i] == '-' else 1
                i += 1
            num = ''
            while i < len(expr) and (expr[i].isdigit() or expr[i] == '/'):
                num += expr[i]
                i += 1
            c = Fraction(num) if num else Fraction(1)
            # outer product without parentheses: X*Y
            x, i = parse_product(expr, i, names)
            if i < len(expr) and expr[i] == '*':
                y, i = parse_product(expr, i + 1, names)
                x = (x, y)
            vec[x] = vec.get(x, 0) + sign * sg * c
    side(lhs, 1)
    side(rhs, -1)
    return {k: v for k, v in vec.items() if v != 0}


# ------------------------------------------------------ linear algebra

def rank(rows, ncols):
    rows = [r[:] for r in rows if any(r)]
    rk = 0
    col = 0
    m = len(rows)
    while rk < m and col < ncols:
        piv = next((i for i in range(rk, m) if rows[i][col] != 0), None)
        if piv is None:
            col += 1
            continue
        rows[rk], rows[piv] = rows[piv], rows[rk]
        p = rows[rk][col]
        rows[rk] = [x / p for x in rows[rk]]
        for i in range(m):
            if i != rk and rows[i][col] != 0:
                f = rows[i][col]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[rk])]
        rk += 1
        col += 1
    return rk


def nullspace(rows, ncols):
    """Basis of {y : rows . y = 0} via dense elimination."""
    rows = [r[:] for r in rows if any(r)]
    pivcols = []
    rk = 0
    m = len(rows)
    for col in range(ncols):
        piv = next((i for i in range(rk, m) if rows[i][col] != 0), None)
        if piv is None:
            continue
        rows[rk], rows[piv] = rows[piv], rows[rk]
        p = rows[rk][col]
        rows[rk] = [x / p for x in rows[rk]]
        for i in range(m):
            if i != rk and rows[i][col] != 0:
                f = rows[i][col]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[rk])]
        pivcols.append(col)
        rk += 1
    free = [c for c in range(ncols) if c not in pivcols]
    basis = []
    for fc in free:
        y = [Fraction(0)] * ncols
        y[fc] = Fraction(1)
        for i, pc in enumerate(pivcols):
            y[pc] = -rows[i][fc]
        basis.append(y)
    return basis


# ---------------------------------------------------- relation spaces

MON3 = None  # index map filled lazily


def mon3_index():
    global MON3
    if MON3 is None:
        # the engine's canonical order: (xy)z shapes first, labels lex
        order = [((p[0], p[1]), p[2]) for p in permutations((1, 2, 3))]
        order += [(p[0], (p[1], p[2])) for p in permutations((1, 2, 3))]
        MON3 = {m: i for i, m in enumerate(order)}
    return MON3


def to_row3(vec):
    idx = mon3_index()
    row = [Fraction(0)] * 12
    for m, c in vec.items():
        row[idx[m]] += c
    return row


def s3_closure(identities):
    rows = []
    for text in identities:
        v = parse_identity(text)
        for p in permutations((1, 2, 3)):
            f = {1: p[0], 2: p[1], 3: p[2]}
            rows.append(to_row3({relabel(m, f): c for m, c in v.items()}))
    return rows


def span_basis(rows, ncols):
    # basis of row space = nullspace of nullspace
    ns = nullspace(rows, ncols)
    return nullspace(ns, ncols) if ns else [
        [Fraction(int(i == j)) for j in range(ncols)] for i in range(ncols)]


def same_span(a, b, ncols):
    ra, rb = rank(a, ncols), rank(b, ncols)
    return ra == rb == rank(a + b, ncols)


# ---------------------------------------------------------- ideal I(n)

def substitute(rel_vec, trees):
    """r(t1,t2,t3): replace label i of every degree-3 monomial by trees[i-1]."""
    out = {}
    for m, c in rel_vec.items():
        t = relabel(m, {1: trees[0], 2: trees[1], 3: trees[2]})
        out[t] = out.get(t, 0) + c
    return out


def plug(context, slot, tree):
    if isinstance(context, int):
        return tree if context == slot else context
    return (plug(context[0], slot, tree), plug(context[1], slot, tree))


def ideal_rows(rel_vecs, n):
    """Literal generation over contexts, slots, triples and bijective labelings."""
    cols = {m: i for i, m in enumerate(all_monomials(n))}
    seen = set()
    rows = []
    labels = list(range(1, n + 1))
    # sizes of t1,t2,t3 and of the context (k leaves, one of which is the hole)
    for s1 in range(1, n + 1):
        for s2 in range(1, n + 1 - s1):
            for s3 in range(1, n + 1 - s1 - s2):
                k = n - s1 - s2 - s3 + 1
                for cshape in shapes(k):
                    for slot in range(1, k + 1):
                        for sh1 in shapes(s1):
                            for sh2 in shapes(s2):
                                for sh3 in shapes(s3):
                                    for perm in permutations(labels):
                                        # context labels: k-1 non-hole leaves
                                        ctx_lab = list(perm[:k - 1])
                                        rest = perm[k - 1:]
                                        ctx_leaf = ctx_lab[:slot - 1] + [0] + ctx_lab[slot - 1:]
                                        ctx = fill(cshape, ctx_leaf)
                                        t1 = fill(sh1, rest[:s1])
                                        t2 = fill(sh2, rest[s1:s1 + s2])
                                        t3 = fill(sh3, rest[s1 + s2:])
                                        key = (ctx, t1, t2, t3)
                                        if key in seen:
                                            continue
                                        seen.add(key)
                                        for r in rel_vecs:
                                            v = substitute(r, (t1, t2, t3))
                                            full = {plug(ctx, 0, t): c for t, c in v.items()}
                                            row = [Fraction(0)] * len(cols)
                                            for t, c in full.items():
                                                row[cols[t]] += c
                                            if any(row):
                                                rows.append(row)
    return rows, len(cols)


def vec_from_row(row):
    order = sorted(mon3_index(), key=lambda m: mon3_index()[m])
    return {order[i]: c for i, c in enumerate(row) if c != 0}


def dims(identities, max_arity):
    basis = span_basis(s3_closure(identities), 12) if identities else []
    rel_vecs = [vec_from_row(r) for r in basis]
    out = [1, 2]
    for n in range(3, max_arity + 1):
        total = len(all_monomials(n))
        if not rel_vecs:
            out.append(total)
            continue
        rows, ncols = ideal_rows(rel_vecs, n)
        out.append(ncols - rank(rows, ncols))
    return out


# ---------------------------------------------------------- pairing / dual

def sign(p):
    s = 1
    p = list(p)
    for i in range(len(p)):
        for j in range(i + 1, len(p)):
            if p[i] > p[j]:
                s = -s
    return s


def pairing_diag():
    idx = mon3_index()
    d = [0] * 12
    for m, i in idx.items():
        labs = leaves(m)
        s = sign(labs)
        d[i] = s if isinstance(m[1], int) else -s
    return d


def dual_rows(identities):
    rows = s3_closure(identities) if identities else []
    d = pairing_diag()
    weighted = [[r[j] * d[j] for j in range(12)] for r in rows]
    if not weighted:
        return [[Fraction(int(i == j)) for j in range(12)] for i in range(12)]
    return nullspace(weighted, 12)


def jacobiator_rows(identities):
    """Lie-admissibility route, written independently: quotient normal forms by
    nullspace coordinates rather than RREF non-pivots."""
    rel = s3_closure(identities) if identities else []
    # A-side: choose complement via the projection onto a basis of the quotient.
    # Normal form: solve m = sum_j x_j e_j + r, using e_j = standard unit vectors
    # of columns that are free after eliminating rel.
    basisR = span_basis(rel, 12) if rel else []
    # pick complement columns greedily
    comp = []
    cur = [r[:] for r in basisR]
    for c in range(12):
        e = [Fraction(int(c == j)) for j in range(12)]
        if rank(cur + [e], 12) > rank(cur, 12):
            cur.append(e)
            comp.append(c)

    def nf(col):
        # coordinates of unit vector col over [basisR..., e_comp...]
        mat = basisR + [[Fraction(int(c == j)) for j in range(12)] for c in comp]
        # solve x^T mat = e_col  ->  mat^T x = e_col
        k = len(mat)
        aug = [[mat[i][j] for i in range(k)] + [Fraction(int(j == col))] for j in range(12)]
        # gaussian solve
        rk = 0
        piv = []
        for c in range(k):
            p = next((i for i in range(rk, 12) if aug[i][c] != 0), None)
            if p is None:
                continue
            aug[rk], aug[p] = aug[p], aug[rk]
            pv = aug[rk][c]
            aug[rk] = [x / pv for x in aug[rk]]
            for i in range(12):
                if i != rk and aug[i][c] != 0:
                    f = aug[i][c]
                    aug[i] = [a - f * b for a, b in zip(aug[i], aug[rk])]
            piv.append(c)
            rk += 1
        x = [Fraction(0)] * k
        for i, c in enumerate(piv):
            x[c] = aug[i][k]
        return x[len(basisR):]

    idx = mon3_index()
    # bracket [x(p), y(q)] = (x*y)(p.q) - (y*x)(q.p); cyclic (1,2,3)
    terms = []

    def bracket(lhs, rhs):
        (x, p), (y, q) = lhs, rhs
        return [((x, y), (p, q), 1), ((y, x), (q, p), -1)]

    for a, b, c in ((1, 2, 3), (2, 3, 1), (3, 1, 2)):
        for (m1, u1, s1) in bracket((a, a), (b, b)):
            for (m2, u2, s2) in bracket((m1, u1), (c, c)):
                terms.append((m2, u2, s1 * s2))
    assert len(terms) == 12
    conds = [[Fraction(0)] * 12 for _ in comp]
    for am, um, s in terms:
        coords = nf(idx[am])
        for j, x in enumerate(coords):
            conds[j][idx[um]] += s * x
    return conds


# ----------------------------------------------------------- series

def hilbert(dimlist):
    return [Fraction((-1) ** n * d, factorial(n)) for n, d in enumerate(dimlist, start=1)]


def compose(f, g, N):
    # f(g(t)) with zero constant terms; coefficient lists start at t^1
    res = [Fraction(0)] * (N + 1)
    power = [Fraction(0)] * (N + 1)
    power[0] = Fraction(1)
    for k in range(1, N + 1):
        nxt = [Fraction(0)] * (N + 1)
        for i, a in enumerate(power):
            if a == 0:
                continue
            for j in range(1, N + 1 - i):
                nxt[i + j] += a * g[j - 1]
        power = nxt
        if k - 1 < len(f):
            for i in range(N + 1):
                res[i] += f[k - 1] * power[i]
    return res[1:]


# ----------------------------------------------------------- presets

PRESETS = {
    'novikov-right': ['a*(b*c) - (a*b)*c - a*(c*b) + (a*c)*b = 0', 'a*(b*c) - b*(a*c) = 0'],
    'novikov-left': ['a*(b*c) - (a*b)*c - b*(a*c) + (b*a)*c = 0', '(a*b)*c - (a*c)*b = 0'],
    'assoc': ['(a*b)*c - a*(b*c) = 0'],
    'prelie-right': ['a*(b*c) - (a*b)*c - a*(c*b) + (a*c)*b = 0'],
    'perm': ['(a*b)*c - a*(b*c) = 0', '(a*b)*c - (a*c)*b = 0'],
    'leibniz': ['(a*b)*c - (a*c)*b - a*(b*c) = 0'],
    'zinbiel': ['(a*b)*c - a*(b*c) - a*(c*b) = 0'],
    'magma': [],
}


def main():
    max_arity = int(sys.argv[1]) if len(sys.argv) > 1 else 4
    for name, ids in PRESETS.items():
        print(name, 'relation dim', rank(s3_closure(ids), 12) if ids else 0,
              'dims', dims(ids, max_arity))
    for name, ids in PRESETS.items():
        d = dual_rows(ids)
        j = jacobiator_rows(ids)
        matches = [o for o, oid in PRESETS.items()
                   if same_span(d, s3_closure(oid) if oid else [], 12)]
        print(name, 'dual dim', rank(d, 12), 'routes agree', same_span(d, j, 12),
              'dual equals', matches)
    nov = hilbert([1, 2, 6, 20, 70])
    print('H_novikov', [str(x) for x in nov])
    print('H(H)', [str(x) for x in compose(nov, nov, 5)])
    ass = hilbert([1, 2, 6, 24, 120, 720])
    print('H_assoc o H_assoc', [str(x) for x in compose(ass, ass, 6)])
    mag = hilbert([1, 2, 12, 120])
    nil = hilbert([1, 2, 0, 0])
    print('H_magma o H_nil', [str(x) for x in compose(mag, nil, 4)])
    print('H_nil o H_magma', [str(x) for x in compose(nil, mag, 4)])


if __name__ == '__main__':
    main()
