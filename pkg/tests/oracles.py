"""Brute-force reference computations that share no code with the package."""
import itertools
import math
from collections import Counter


def leibniz_det(rows):
    n = len(rows)
    total = 0
    for perm in itertools.permutations(range(n)):
        inversions = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = -1 if inversions % 2 else 1
        for i, p in enumerate(perm):
            term *= rows[i][p]
        total += term
    return total


def adjugate(rows):
    n = len(rows)
    if n == 1:
        return [[1]]
    adj = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            minor = [r[:j] + r[j + 1:] for k, r in enumerate(rows) if k != i]
            adj[j][i] = (-1) ** (i + j) * leibniz_det(minor)
    return adj


def cokernel_order_profile(rows):
    """Counter {element order: count} of Z^n / Q Z^n for nonsingular square Q.

    x lies in the image iff adj(Q) x = 0 mod det Q; the quotient is enumerated
    over the box [0, |det Q|)^n and deduplicated by that test.
    """
    n = len(rows)
    d = leibniz_det(rows)
    if d == 0:
        raise ValueError("singular")
    m = abs(d)
    adj = adjugate(rows)

    def in_image(x):
        return all(sum(a * b for a, b in zip(row, x)) % m == 0 for row in adj)

    reps = []
    for x in itertools.product(range(m), repeat=n):
        if not any(in_image([a - b for a, b in zip(x, r)]) for r in reps):
            reps.append(x)
    profile = Counter()
    for x in reps:
        k = 1
        while not in_image([k * c for c in x]):
            k += 1
        profile[k] += 1
    return profile


def cyclic_product_profile(orders):
    """Counter {element order: count} of Z/o1 x Z/o2 x ..."""
    profile = Counter()
    for x in itertools.product(*(range(o) for o in orders)):
        k = 1
        for c, o in zip(x, orders):
            k = k * (o // math.gcd(c, o)) // math.gcd(k, o // math.gcd(c, o))
        profile[k] += 1
    return profile


def gcd_of_minors(rows, k):
    """gcd of all k x k minors (the k-th determinantal divisor)."""
    m, n = len(rows), len(rows[0]) if rows else 0
    g = 0
    for ri in itertools.combinations(range(m), k):
        for ci in itertools.combinations(range(n), k):
            g = math.gcd(g, leibniz_det([[rows[i][j] for j in ci] for i in ri]))
    return g
