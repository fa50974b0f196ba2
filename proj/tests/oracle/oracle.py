#!/usr/bin/env python3
"""Brute-force oracle for frozen test values.

Independent of the C++ library: elements are enumerated over a plain
coordinate box, partitions are generated by naive recursion, classes are
checked by direct predicates, and q-series identities are expanded with
dense dictionaries. Run it to regenerate the constants pinned in tests/.
"""
import itertools
import math
import sys
from functools import lru_cache


class Field:
    def __init__(self, d):
        self.d = d
        self.half = d % 4 == 1

    def emb(self, a):
        # returns (p, q) with value (p + q*sqrt d)/2
        x, y = a
        if self.half:
            return 2 * x + y, y
        return 2 * x, 2 * y

    def tp(self, a):
        p, q = self.emb(a)
        return p > 0 and p * p > q * q * self.d

    def mul(self, a, b):
        x1, y1 = a
        x2, y2 = b
        if self.half:
            c = (self.d - 1) // 4  # w^2 = w + c
            return (x1 * x2 + y1 * y2 * c, x1 * y2 + x2 * y1 + y1 * y2)
        return (x1 * x2 + y1 * y2 * self.d, x1 * y2 + x2 * y1)

    def below(self, delta):
        t = self.emb(delta)[0]
        out = []
        for x in range(-4 * t - 4, 4 * t + 5):
            for y in range(-4 * t - 4, 4 * t + 5):
                a = (x, y)
                r = (delta[0] - x, delta[1] - y)
                if self.tp(a) and (r == (0, 0) or self.tp(r)):
                    out.append(a)
        out.sort(key=self.emb)
        return out


def sub(a, b):
    return (a[0] - b[0], a[1] - b[1])


def partitions(F, delta, ground=None):
    if ground is None:
        ground = F.below(delta)
    res = []

    def rec(rem, maxidx, acc):
        if rem == (0, 0):
            res.append(tuple(acc))
            return
        for j in range(maxidx, -1, -1):
            g = ground[j]
            r = sub(rem, g)
            if r == (0, 0) or F.tp(r):
                acc.append(g)
                rec(r, j, acc)
                acc.pop()

    rec(delta, len(ground) - 1, [])
    return res


def radial(a):
    g = math.gcd(a[0], a[1])
    return g, (a[0] // g, a[1] // g)


def sections(lam):
    blocks = {}
    for part in lam:
        s, g = radial(part)
        blocks.setdefault(g, []).append(s)
    return blocks


def runs(scales):
    s = sorted(scales)
    r = 0
    prev = None
    for v in s:
        if prev is None or v != prev + 1:
            r += 1
        prev = v
    return r


def syl_a(lam, k):
    return all(radial(p)[0] % 2 == 1 for p in lam) and len(set(lam)) == k


def syl_b(lam, k):
    if len(set(lam)) != len(lam):
        return False
    return sum(runs(v) for v in sections(lam).values()) == k


def gor_a(lam, k, i):
    m = 2 * k + 1
    return all(radial(p)[0] % m not in (0, i % m, (-i) % m) for p in lam)


def gor_b(lam, k, i):
    for scales in sections(lam).values():
        b = sorted(scales, reverse=True)
        for j in range(len(b) - k + 1):
            if b[j] - b[j + k - 1] < 2:
                return False
        if b.count(1) > i - 1:
            return False
    return True


def residue(F, a, r):
    return (a[0] + a[1] * r) % 5


def prime_root(F):
    for r in range(5):
        if F.half:
            if (r * r - r - (F.d - 1) // 4) % 5 == 0:
                return r
        elif (r * r - F.d) % 5 == 0:
            return r
    return None


def modp_parts(F, lam, r, R):
    return all(residue(F, p, r) in R for p in lam)


def modp_shape(F, lam, r, v):
    bad = {2, 3} if v == 1 else {1, 4}
    for p in lam:
        s, g = radial(p)
        if residue(F, g, r) == 0:
            return False
        if s == 1 and residue(F, g, r) in bad:
            return False
    for scales in sections(lam).values():
        b = sorted(scales)
        for u, w in zip(b, b[1:]):
            if w - u < 2:
                return False
    return True


# ---------- classical integer partitions ----------

def int_parts(n, maxp=None):
    if maxp is None:
        maxp = n
    if n == 0:
        yield ()
        return
    for p in range(min(n, maxp), 0, -1):
        for rest in int_parts(n - p, p):
            yield (p,) + rest


def cA(n, k):
    return sum(1 for l in int_parts(n) if all(x % 2 for x in l) and len(set(l)) == k)


def cB(n, k):
    return sum(1 for l in int_parts(n) if len(set(l)) == len(l) and runs(l) == k)


# ---------- dense truncated classical series ----------

def smul(f, g, N, caps):
    out = {}
    for (e1, m1), c1 in f.items():
        for (e2, m2), c2 in g.items():
            e = e1 + e2
            m = tuple(a + b for a, b in zip(m1, m2))
            if e > N or any(a > c for a, c in zip(m, caps)):
                continue
            out[(e, m)] = out.get((e, m), 0) + c1 * c2
    return {k: v for k, v in out.items() if v}


def one(nm):
    return {(0, (0,) * nm): 1}


def geom_inv(u, N, caps):
    nm = len(caps)
    res = one(nm)
    pw = one(nm)
    while True:
        pw = smul(pw, u, N, caps)
        if not pw:
            return res
        for k, v in pw.items():
            res[k] = res.get(k, 0) + v
        res = {k: v for k, v in res.items() if v}


def main():
    out = []
    F3 = Field(3)
    delta = (21, 7)
    ps = partitions(F3, delta)
    out.append(("p(21+7w@3)", len(ps)))
    out.append(("sylA3", sum(syl_a(l, 3) for l in ps)))
    out.append(("sylB3", sum(syl_b(l, 3) for l in ps)))
    for k, i in [(2, 1), (2, 2), (3, 1), (3, 2), (3, 3)]:
        out.append((f"gorA({k},{i})@21+7w3", sum(gor_a(l, k, i) for l in ps)))
        out.append((f"gorB({k},{i})@21+7w3", sum(gor_b(l, k, i) for l in ps)))
    prim = [l for l in ps if all(radial(p)[0] == 1 for p in l)]
    out.append(("primitive partitions of 21+7w@3", len(prim)))
    # A/B for k=1..6
    for k in range(1, 7):
        out.append((f"sylA{k}/sylB{k}", (sum(syl_a(l, k) for l in ps), sum(syl_b(l, k) for l in ps))))
    F2 = Field(2)
    out.append(("downset(2)@2", F2.below((2, 0))))
    out.append(("gorA(2,2)@2", sum(gor_a(l, 2, 2) for l in partitions(F2, (2, 0)))))
    out.append(("gorB(2,2)@2", sum(gor_b(l, 2, 2) for l in partitions(F2, (2, 0)))))
    F5 = Field(5)
    r = prime_root(F5)
    ps5 = partitions(F5, (5, 0))
    out.append(("p(5)@5", len(ps5)))
    out.append(("modp parts14 @5 (5)", sum(modp_parts(F5, l, r, {1, 4}) for l in ps5)))
    out.append(("modp shape1 @5 (5)", sum(modp_shape(F5, l, r, 1) for l in ps5)))
    out.append(("modp parts23 @5 (5)", sum(modp_parts(F5, l, r, {2, 3}) for l in ps5)))
    out.append(("modp shape2 @5 (5)", sum(modp_shape(F5, l, r, 2) for l in ps5)))
    out.append(("roots", {d: prime_root(Field(d)) for d in (2, 3, 5, 6, 7, 11, 13, 14, 19, 21)}))
    out.append(("downset(2+w)@3", Field(3).below((2, 1))))
    out.append(("B22(9)", sum(1 for l in int_parts(9) if all(l[j] - l[j + 1] >= 2 for j in range(len(l) - 1)) and l.count(1) <= 1)))
    out.append(("B22 parts of 7", [l for l in int_parts(7) if all(l[j] - l[j + 1] >= 2 for j in range(len(l) - 1)) and l.count(1) <= 1]))
    out.append(("A2(7),B2(7),A1(7),B1(7)", (cA(7, 2), cB(7, 2), cA(7, 1), cB(7, 1))))
    # small p(delta) table over downset(5) for d in 2,3,5
    for d in (2, 3, 5):
        F = Field(d)
        big = {2: (5, 0), 3: (5, 0), 5: (5, 0)}[d]
        els = [a for a in F.below(big) if F.emb(a)[0] <= 10]
        out.append((f"#downset(5) d={d}", len(els)))
        out.append((f"p table d={d}", [(a, len(partitions(F, a))) for a in els if F.emb(a)[0] >= 8]))

    # ---------- classical identity checks ----------
    N = 20
    caps = (6,)
    # LeVeque alternate reading: (aq;q^2)_inf (q)_inf
    lhs = one(1)
    for n in range(1, N + 1, 2):
        lhs = smul(lhs, {(0, (0,)): 1, (n, (1,)): -1}, N, caps)
    lhs_alt = lhs
    for n in range(1, N + 1):
        lhs_alt = smul(lhs_alt, {(0, (0,)): 1, (n, (0,)): -1}, N, caps)
    lhs_std = lhs
    for n in range(1, N + 1):
        lhs_std = smul(lhs_std, {(0, (0,)): 1, (n, (0,)): 1}, N, caps)
    rhs = {}
    n = 0
    while n * (n + 1) // 2 <= N:
        term = {(n * (n + 1) // 2, (0,)): 1}
        for j in range(n):
            term = smul(term, {(0, (0,)): 1, (j, (1,)): -1}, N, caps)
        for j in range(1, n + 1):
            term = smul(term, geom_inv({(j, (0,)): 1}, N, caps), N, caps)
        for kk, v in term.items():
            rhs[kk] = rhs.get(kk, 0) + v
        n += 1
    rhs = {k: v for k, v in rhs.items() if v}
    out.append(("leveque (q;q)_inf reading equal", lhs_alt == rhs))
    out.append(("leveque standard (-q;q) equal", lhs_std == rhs))

    # Cauchy: markers (a, t)
    N = 15
    caps = (5, 5)
    def poch(mk, start, count):
        f = one(2)
        for j in range(start, start + count):
            f = smul(f, {(0, (0, 0)): 1, (j, mk): -1}, N, caps)
        return f
    num = poch((1, 1), 0, N + 1)
    den = one(2)
    for j in range(0, N + 1):
        den = smul(den, geom_inv({(j, (0, 1)): 1}, N, caps), N, caps)
    lhs = smul(num, den, N, caps)
    def rhs_of(shift):
        tot = {}
        for n in range(0, caps[1] + 1):
            m = n + shift
            if m < 0:
                continue  # (a;q)_{-1} has no polynomial form; skipped
            term = {(0, (0, n)): 1}
            term = smul(term, poch((1, 0), 0, m), N, caps)
            for j in range(1, n + 1):
                term = smul(term, geom_inv({(j, (0, 0)): 1}, N, caps), N, caps)
            for kk, v in term.items():
                tot[kk] = tot.get(kk, 0) + v
        return {k: v for k, v in tot.items() if v}
    out.append(("cauchy standard (a;q)_n equal", lhs == rhs_of(0)))
    out.append(("cauchy (a;q)_{n-1} reading equal (n=0 term is 1)", lhs == rhs_of(-1)))
    for k, v in out:
        print(k, "=", v)


if __name__ == "__main__":
    sys.setrecursionlimit(10000)
    main()
