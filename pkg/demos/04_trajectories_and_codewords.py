#!/usr/bin/env python3
"""State recursions x(t+1) = A x(t) + B u(t) and their polynomial shadow.

An input sequence is admissible when some state trajectory satisfies
the recursion.  With a free initial state everything is admissible;
under a periodic boundary the closing condition (A^T - I) x(0) = -x_f
may or may not be solvable.  The pencil zI - A moves the same question
into GF(p)[z], where codeword_consistency cross-checks both pictures.

Run: python3 demos/04_trajectories_and_codewords.py
"""

from kerpair import (
    AdmissibleInputQuery,
    Matrix,
    ModRing,
    PrimeField,
    SystemPair,
    codeword_consistency,
    pencil,
    poly_kernel,
    simulate,
    admissible,
)

F = PrimeField(2)

# a two-stage delay line: u enters x1, x1 shifts to x2
sys = SystemPair(Matrix(F, 2, 2, [[0, 0], [1, 0]]),
                 Matrix(F, 2, 1, [[1], [0]]))

traj = simulate(sys, (0, 0), [(1,), (0,), (1,)])
print("delay line from x(0) = (0,0), inputs 1,0,1:")
for t, x in enumerate(traj.states):
    print(f"  x({t}) = {x}")
print("recursion violations:", traj.check(sys) or "none")
print()

# periodic boundary: x(T) must equal x(0)
per = admissible(sys, AdmissibleInputQuery(((1,), (1,)), "periodic"))
print("periodic witness for u = 1,1:",
      per.states if per else "not admissible")

flip = SystemPair(Matrix(F, 1, 1, [[1]]), Matrix(F, 1, 1, [[1]]))
for u in (0, 1):
    per = admissible(flip, AdmissibleInputQuery(((u,),), "periodic"))
    print(f"x(1) = x(0) + {u} closes periodically:", per is not None)
print()

# the same recursion over Z/6 solves per prime and glues by CRT
R6 = ModRing(6)
wheel = SystemPair(Matrix(R6, 1, 1, [[0]]), Matrix(R6, 1, 1, [[1]]))
per = admissible(wheel, AdmissibleInputQuery(((3,),), "periodic"))
print("Z/6 system x(1) = u, u = 3: periodic witness states", per.states)
print()

# polynomial side: zI - A is injective as a K[z]-map (monic determinant),
# and admissible polynomial inputs always carry polynomial state witnesses
P, Bp = pencil(sys)
print("pencil zI - A =", P)
print("pencil kernel rank:", poly_kernel(P).rank)
print("codeword consistency:", codeword_consistency(sys) or "all checks pass")
