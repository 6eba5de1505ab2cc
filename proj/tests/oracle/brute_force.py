"""Brute-force oracle for frozen test values.

Root systems are realized in Euclidean epsilon-coordinates (not through a
Cartan matrix), the group is the closure of the simple reflections acting on
vectors, and Bruhat covers are found by testing every reflection against
inversion-count lengths. Outputs are printed and copied into the C++ tests.
"""
from fractions import Fraction as F
from itertools import combinations, product
from math import factorial
import sympy as sp


def ip(a, b):
    return sum(F(x) * F(y) for x, y in zip(a, b))


def vec(*xs):
    return tuple(F(x) for x in xs)


def e(n, i):
    return tuple(F(1) if k == i else F(0) for k in range(n))


def add(a, b, s=1):
    return tuple(x + s * y for x, y in zip(a, b))


def simple_roots(t, r):
    if t == "A":
        n = r + 1
        return [add(e(n, i), e(n, i + 1), -1) for i in range(r)]
    if t == "B":
        return [add(e(r, i), e(r, i + 1), -1) for i in range(r - 1)] + [e(r, r - 1)]
    if t == "C":
        return [add(e(r, i), e(r, i + 1), -1) for i in range(r - 1)] + [tuple(2 * x for x in e(r, r - 1))]
    if t == "D":
        return [add(e(r, i), e(r, i + 1), -1) for i in range(r - 1)] + [add(e(r, r - 2), e(r, r - 1))]
    if t == "G":
        # short alpha1 = e1 - e2, long alpha2 = -2e1 + e2 + e3
        return [vec(1, -1, 0), vec(-2, 1, 1)]
    if t == "F":
        h = F(1, 2)
        return [vec(0, 1, -1, 0), vec(0, 0, 1, -1), vec(0, 0, 0, 1), (h, -h, -h, -h)]
    raise ValueError(t)


def reflect(v, a):
    c = 2 * ip(v, a) / ip(a, a)
    return tuple(x - c * y for x, y in zip(v, a))


def root_system(t, r):
    simple = simple_roots(t, r)
    roots = set(simple)
    frontier = list(simple)
    while frontier:
        nxt = []
        for v in frontier:
            for a in simple:
                w = reflect(v, a)
                if w not in roots:
                    roots.add(w)
                    nxt.append(w)
        frontier = nxt
    # positive: expansion in simple roots nonnegative
    M = sp.Matrix([[sp.Rational(x.numerator, x.denominator) for x in s] for s in simple]).T
    pos = []
    for v in roots:
        sol = M.solve_least_squares(sp.Matrix([sp.Rational(x.numerator, x.denominator) for x in v])) if M.shape[0] != M.shape[1] else M.solve(sp.Matrix([sp.Rational(x.numerator, x.denominator) for x in v]))
        if all(c >= 0 for c in sol):
            pos.append(v)
    return simple, pos


def coroot_coeffs(simple, a):
    # a^vee = 2a/(a,a) expanded in simple coroots 2a_i/(a_i,a_i)
    cor = [tuple(2 * x / ip(s, s) for x in s) for s in simple]
    av = tuple(2 * x / ip(a, a) for x in a)
    M = sp.Matrix([[sp.Rational(x.numerator, x.denominator) for x in c] for c in cor]).T
    b = sp.Matrix([sp.Rational(x.numerator, x.denominator) for x in av])
    sol = M.solve_least_squares(b) if M.shape[0] != M.shape[1] else M.solve(b)
    return [int(c) for c in sol]


class Group:
    def __init__(self, t, r):
        self.simple, self.pos = root_system(t, r)
        self.r = r
        # element = tuple of images of simple roots (a linear map on span)
        ident = tuple(self.simple)
        elems = {ident: 0}
        order = [ident]
        frontier = [ident]
        while frontier:
            nxt = []
            for g in frontier:
                for s in self.simple:
                    # g * s_s : images of simple roots under g(s_s(alpha))
                    h = tuple(self.apply(g, reflect(a, s)) for a in self.simple)
                    if h not in elems:
                        elems[h] = len(order)
                        order.append(h)
                        nxt.append(h)
            frontier = nxt
        self.elems = order
        self.index = elems
        self.length = [self.len_of(g) for g in order]

    def coords(self, v):
        M = sp.Matrix([[sp.Rational(x.numerator, x.denominator) for x in s] for s in self.simple]).T
        b = sp.Matrix([sp.Rational(x.numerator, x.denominator) for x in v])
        return M.solve_least_squares(b) if M.shape[0] != M.shape[1] else M.solve(b)

    def apply(self, g, v):
        c = self.coords(v)
        out = tuple(F(0) for _ in v)
        for ci, gi in zip(c, g):
            out = add(out, tuple(F(int(sp.fraction(ci)[0]), int(sp.fraction(ci)[1])) * x for x in gi))
        return out

    def len_of(self, g):
        posset = set(self.pos)
        return sum(1 for a in self.pos if self.apply(g, a) not in posset)

    def covers(self):
        cov = {}
        for i, g in enumerate(self.elems):
            lst = []
            for a in self.pos:
                h = tuple(self.apply(g, reflect(s, a)) for s in self.simple)
                j = self.index[h]
                if self.length[j] == self.length[i] + 1:
                    lst.append((j, coroot_coeffs(self.simple, a)))
            cov[i] = lst
        return cov


def analyze(t, r, polys_for=()):
    G = Group(t, r)
    cov = G.covers()
    n = len(G.elems)
    up = []
    for i in range(n):
        seen = {i}
        st = [i]
        while st:
            x = st.pop()
            for j, _ in cov[x]:
                if j not in seen:
                    seen.add(j)
                    st.append(j)
        up.append(seen)
    pairs = sum(len(s) for s in up)
    lens = [G.length.count(k) for k in range(max(G.length) + 1)]
    w0 = max(range(n), key=lambda i: G.length[i])
    xs = sp.symbols(f"x1:{r + 1}")

    def chains(u, w):
        total = sp.Integer(0)
        count = 0
        def dfs(v, acc):
            nonlocal total, count
            if v == w:
                total += acc
                count += 1
                return
            for j, c in cov[v]:
                if w in up[j]:
                    dfs(j, acc * sum(ci * x for ci, x in zip(c, xs)))
        if w in up[u]:
            dfs(u, sp.Integer(1))
        return sp.expand(total / factorial(G.length[w] - G.length[u])), count

    print(f"{t}{r}: |W|={n} |Phi+|={len(G.pos)} comparable_pairs={pairs} strata={lens} maxchains={chains(0, w0)[1]}")
    return G, cov, up, chains, w0


if __name__ == "__main__":
    G, cov, up, chains, w0 = analyze("A", 1)
    G, cov, up, chains, w0 = analyze("A", 2)
    print("  D_id^w0 =", chains(0, w0))
    G, cov, up, chains, w0 = analyze("A", 3)
    print("  D_id^w0 =", sp.factor(chains(0, w0)[0]), chains(0, w0)[1])
    G, cov, up, chains, w0 = analyze("B", 2)
    print("  D_id^w0 =", chains(0, w0))
    G, cov, up, chains, w0 = analyze("G", 2)
    print("  D_id^w0 =", chains(0, w0))
    simple, pos = G.simple, G.pos
    for a in pos:
        print("   G2 root", list(G.coords(a)), "coroot", coroot_coeffs(simple, a))
    G, cov, up, chains, w0 = analyze("B", 3)
    print("  D_id^w0 =", chains(0, w0))
    for t, r in [("A", 4), ("C", 3), ("D", 4), ("F", 4)]:
        s, p = root_system(t, r)
        print(f"{t}{r}: |Phi+|={len(p)}")
