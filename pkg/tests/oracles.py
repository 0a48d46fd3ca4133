"""Independent brute-force oracles for the test suite.

Everything here works on raw 1-based image tuples with direct definitions
(no search engine, no canonical forms), so the library's optimized paths are
checked against something that cannot share their bugs.
"""

import itertools


def compose_t(p, q):
    # apply p, then q
    return tuple(q[v - 1] for v in p)


def inverse_t(p):
    out = [0] * len(p)
    for i, v in enumerate(p):
        out[v - 1] = i + 1
    return tuple(out)


def identity_t(d):
    return tuple(range(1, d + 1))


def conj_t(p, g):
    out = [0] * len(p)
    for x in range(len(p)):
        out[g[x] - 1] = g[p[x] - 1]
    return tuple(out)


def all_perms(d):
    return list(itertools.permutations(range(1, d + 1)))


def closure_t(gens, d):
    els = {identity_t(d)}
    frontier = [identity_t(d)]
    while frontier:
        new = []
        for a in frontier:
            for g in gens:
                c = compose_t(a, g)
                if c not in els:
                    els.add(c)
                    new.append(c)
        frontier = new
    return els


def transitive_t(gens, d):
    seen = {1}
    frontier = [1]
    while frontier:
        x = frontier.pop()
        for g in gens:
            y = g[x - 1]
            if y not in seen:
                seen.add(y)
                frontier.append(y)
    return len(seen) == d


def cycle_count_t(p):
    seen = [False] * len(p)
    k = 0
    for i in range(len(p)):
        if not seen[i]:
            k += 1
            j = i
            while not seen[j]:
                seen[j] = True
                j = p[j] - 1
    return k


def min_simultaneous_conjugate(ts, d):
    """Plain scan over all conjugators; the reference for canonical forms."""
    return min(tuple(conj_t(p, g) for p in ts) for g in all_perms(d))


def same_class(t1, t2, d):
    """Direct search for one conjugator aligning both tuples simultaneously."""
    return any(all(conj_t(p, g) == q for p, q in zip(t1, t2)) for g in all_perms(d))


def brute_hom_count(generators, relators, d):
    """Count assignments satisfying every relator; relators are letter lists."""
    perms = all_perms(d)
    idd = identity_t(d)

    def ev(word, asg):
        t = idd
        for name, s in word:
            g = asg[name]
            t = compose_t(t, g if s > 0 else inverse_t(g))
        return t

    count = 0
    for images in itertools.product(perms, repeat=len(generators)):
        asg = dict(zip(generators, images))
        if all(ev(r, asg) == idd for r in relators):
            count += 1
    return count


def belyi_class_count(n, genus0=False, strict=False):
    """Simultaneous-conjugacy classes of transitive pairs, by orbit expansion."""
    perms = all_perms(n)
    idn = identity_t(n)
    seen = set()
    count = 0
    for s0 in perms:
        for s1 in perms:
            if not transitive_t([s0, s1], n):
                continue
            sinf = compose_t(s0, s1)
            if strict and (s0 == idn or s1 == idn or sinf == idn):
                continue
            if genus0:
                k = cycle_count_t(s0) + cycle_count_t(s1) + cycle_count_t(sinf)
                if k != n + 2:
                    continue
            orbit = frozenset(
                (conj_t(s0, g), conj_t(s1, g)) for g in perms
            )
            if orbit not in seen:
                seen.add(orbit)
                count += 1
    return count


# values computed with the oracles above before the main build
BELYI_STRICT_GENUS0_COUNTS = {2: 0, 3: 3, 4: 17}
BELYI_ALL_TRANSITIVE_COUNTS = {1: 1, 2: 3, 3: 7, 4: 26}
BELYI_GENUS0_COUNTS = {1: 1, 2: 3, 3: 6, 4: 20}
D4_DEGREE3_TOTAL = 7
D4_DEGREE3_RATIONAL = 6
