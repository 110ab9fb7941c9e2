"""Local-global kernel computation over square-free Z/m.

Z/m with m = p1 ... ps square-free is a product of prime fields; the
structural idempotents e_i realize the factors inside Z/m.  A kernel
pair over Z/m is computed by solving over each GF(p_i) and gluing

    ker(A|B) = e_1 ker(A mod p1 | B mod p1) + ... + e_s ker(A mod ps | B mod ps)

with local representatives lifted to [0, m).  Flat base change makes the
reduction of the glued kernel mod p_i land back on the local kernel,
which base_change_check verifies on concrete instances.
"""

from dataclasses import dataclass

from .errors import (
    BaseChangeViolatedError,
    NotSquareFreeError,
    RingMismatchError,
)
from .kernel import KernelPairResult, kernel_pair_field
from .linalg import Submodule
from .matrix import Matrix
from .rings import ModRing, PrimeField, crt_idempotents, factorize


@dataclass(frozen=True)
class CrtDecomposition:
    m: int
    primes: tuple          # ascending
    idempotents: tuple     # e_i = 1 mod primes[i], 0 mod the others

    def project(self, a: int, i: int) -> int:
        return a % self.primes[i]

    def check_laws(self) -> list:
        """Idempotent laws, verified exactly; returns violations."""
        m, es = self.m, self.idempotents
        out = []
        for i, e in enumerate(es):
            if (e * e) % m != e:
                out.append(f"e_{i} = {e} is not idempotent mod {m}")
            for j, f in enumerate(es[i + 1:], start=i + 1):
                if (e * f) % m != 0:
                    out.append(f"e_{i} e_{j} = {(e * f) % m} != 0 mod {m}")
            if e % self.primes[i] != 1 % self.primes[i]:
                out.append(f"e_{i} != 1 mod {self.primes[i]}")
            for j, p in enumerate(self.primes):
                if j != i and e % p != 0:
                    out.append(f"e_{i} != 0 mod {p}")
        if sum(es) % m != 1 % m:
            out.append(f"sum of idempotents is {sum(es) % m} != 1 mod {m}")
        return out


def idempotents(m: int) -> CrtDecomposition:
    """Structural idempotents of square-free m, ascending prime order."""
    factors = factorize(m)
    bad = next((p for p, k in factors if k > 1), None)
    if bad is not None:
        raise NotSquareFreeError(f"{m} is not square-free", prime=bad)
    primes = tuple(p for p, _ in factors)
    return CrtDecomposition(m=m, primes=primes,
                            idempotents=crt_idempotents(primes, m))


def reduce_matrix(a: Matrix, i: int) -> Matrix:
    """Entrywise reduction of a Z/m matrix modulo its i-th prime."""
    p = a.ring.primes[i]
    return a.map_entries(lambda e: e % p, ring=PrimeField(p))


@dataclass(frozen=True)
class LocalGlobalResult:
    primes: tuple
    local_results: tuple   # one KernelPairResult per prime
    glued: Submodule       # ker(f1|f2) over Z/m, per-component presentation
    glued_pair: Submodule
    glued_f1: Submodule
    method: str

    @property
    def local_kernels(self) -> tuple:
        return tuple(r.ker_bar for r in self.local_results)


def _require_square_free(ring):
    if not isinstance(ring, ModRing):
        raise RingMismatchError(f"expected a Z/m matrix, got one over {ring!r}")
    if not ring.square_free:
        bad = next(p for p, k in factorize(ring.m) if k > 1)
        raise NotSquareFreeError(
            f"Z/{ring.m} is not a product of fields", prime=bad)


def _glue(ring, ambient, comps) -> Submodule:
    return Submodule(ring, ambient, "components", components=tuple(comps))


def kernel_pair_crt(a: Matrix, b: Matrix, method: str = "projection") -> LocalGlobalResult:
    """ker(f1|f2) over square-free Z/m by per-prime solves and gluing."""
    ring = a.ring
    _require_square_free(ring)
    if ring != b.ring:
        raise RingMismatchError(f"{ring!r} vs {b.ring!r}")
    locals_ = []
    for i in range(len(ring.primes)):
        ai, bi = reduce_matrix(a, i), reduce_matrix(b, i)
        locals_.append(kernel_pair_field(ai, bi, method=method))
    q1, q2 = a.ncols, b.ncols
    return LocalGlobalResult(
        primes=ring.primes,
        local_results=tuple(locals_),
        glued=_glue(ring, q2, (r.ker_bar for r in locals_)),
        glued_pair=_glue(ring, q1 + q2, (r.ker_pair for r in locals_)),
        glued_f1=_glue(ring, q1, (r.ker_f1 for r in locals_)),
        method=method,
    )


def base_change_check(a: Matrix, b: Matrix, i: int, strict: bool = False) -> list:
    """Reduce the glued kernel mod the i-th prime and compare with the
    locally computed kernel; they must agree by flatness of the factor
    projection.

    The reduction goes through the glued generators e_j lift(basis) over
    Z/m, not through the stored components, so the comparison is against
    an independently assembled presentation.
    """
    ring = a.ring
    result = kernel_pair_crt(a, b)
    p = ring.primes[i]
    fp = PrimeField(p)
    reduced = Submodule.from_columns(
        fp, b.ncols, [tuple(x % p for x in g) for g in result.glued.generators()])
    direct = kernel_pair_field(reduce_matrix(a, i), reduce_matrix(b, i)).ker_bar
    violations = []
    if reduced != direct:
        violations.append(
            f"mod {p}: reduction of glued kernel (dim {reduced.dim}) "
            f"!= local kernel (dim {direct.dim})")
    if strict and violations:
        raise BaseChangeViolatedError(
            f"A={a!r} B={b!r} prime={p}: " + "; ".join(violations))
    return violations


def quotient_form_crt(a: Matrix, b: Matrix) -> list:
    """Per-prime dimension triples (dim ker_pair, dim ker_f1, dim ker_bar).

    Over each factor field the exact sequence forces
    dim ker_bar = dim ker_pair - dim ker_f1; the global kernel count is
    the product of p_i to the local ker_bar dimension.
    """
    result = kernel_pair_crt(a, b)
    return [(r.ker_pair.dim, r.ker_f1.dim, r.ker_bar.dim)
            for r in result.local_results]


def ker_bar_count(a: Matrix, b: Matrix) -> int:
    """|ker(f1|f2)| over square-free Z/m."""
    result = kernel_pair_crt(a, b)
    return result.glued.size()
