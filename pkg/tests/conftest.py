"""Shared instance generators for the property suites.

Everything is seeded: the same seed always yields the same instance
list, so failures reproduce exactly.
"""

import random

from kerpair import random_matrix


def pair_instances(ring, count, seed, max_rows=4, max_q1=4, max_q2=4, max_degree=2):
    """Seeded random (A, B) pairs sharing a codomain over one ring."""
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        p = rng.randint(1, max_rows)
        q1 = rng.randint(1, max_q1)
        q2 = rng.randint(1, max_q2)
        out.append((random_matrix(ring, p, q1, rng, max_degree=max_degree),
                    random_matrix(ring, p, q2, rng, max_degree=max_degree)))
    return out


def span_elements(sub) -> set:
    """Every element of a finite submodule, from its generators.

    Built one generator at a time (|span| * |ring| work per generator)
    rather than over the full coefficient product, which blows up past
    a handful of generators.
    """
    ring = sub.ring
    scalars = list(ring.elements())
    out = {(ring.zero,) * sub.ambient}
    for g in sub.generators():
        out = {tuple(ring.add(v[i], ring.mul(c, g[i]))
                     for i in range(sub.ambient))
               for v in out for c in scalars}
    return out
