"""Fundamental cycles, the canonical cycle, and Euler characteristics.

The fundamental cycle of a support is the minimal effective cycle with
full support meeting every curve of the support non-positively; it is
computed by the classical incremental loop (start from the reduced cycle,
repeatedly bump a curve it still meets positively).  The canonical cycle
K solves the adjunction relations K . E_i = 2 g(E_i) - 2 - E_i^2 and is in
general only rational; the singularity is numerically Gorenstein when K
is integral.
"""

from __future__ import annotations

from ._linalg import solve
from .errors import InputError, InternalCheckError
from .graph import Cycle, DualGraph, QCycle, pairing

__all__ = [
    "adjunction_vector",
    "fundamental_cycle",
    "canonical_cycle",
    "is_numerically_gorenstein",
    "chi",
    "riemann_roch_colength",
]


def adjunction_vector(g: DualGraph) -> tuple[int, ...]:
    """Per-vertex value 2*genus - 2 - self_int, i.e. K . E_i.

    Dotting this vector with a cycle's coefficients gives K . D without
    solving for K, which keeps Euler characteristics in pure integers.
    """
    return tuple(2 * v.genus - 2 - v.self_int for v in g.vertices)


def _connected(g: DualGraph, indices: set[int]) -> bool:
    start = next(iter(indices))
    seen = {start}
    stack = [start]
    m = g.matrix
    while stack:
        i = stack.pop()
        for j in indices:
            if j not in seen and m[i][j] != 0:
                seen.add(j)
                stack.append(j)
    return seen == indices


def fundamental_cycle(g: DualGraph, support=None, rng=None) -> Cycle:
    """Minimal effective cycle with full support on ``support`` (default:
    every vertex) that meets each curve of the support non-positively.

    The incremental loop picks the first violating curve in vertex order;
    ``rng`` randomizes that pick instead.  The result is independent of
    the choice (the test suite drives this), only the trace differs.
    """
    if support is None:
        idxs = list(range(len(g)))
    else:
        idxs = sorted({g.index_of(v) for v in support})
        if not idxs:
            raise InputError("support must be non-empty")
        if not _connected(g, set(idxs)):
            raise InputError("support must be connected")

    m = g.matrix
    n = len(g)
    coeffs = [0] * n
    s = [0] * n  # s = M . coeffs
    for j in idxs:
        coeffs[j] = 1
        for i in range(n):
            s[i] += m[i][j]

    cap = sum(abs(v.self_int) for v in g.vertices) * n * 64
    steps = 0
    while True:
        violators = [i for i in idxs if s[i] > 0]
        if not violators:
            break
        j = rng.choice(violators) if rng is not None else violators[0]
        coeffs[j] += 1
        for i in range(n):
            s[i] += m[i][j]
        steps += 1
        if steps > cap:
            raise InternalCheckError(
                "fundamental-cycle-termination",
                f"incremental loop exceeded {cap} steps; "
                "the intersection form cannot be negative definite",
            )
    return Cycle(g, coeffs)


def canonical_cycle(g: DualGraph) -> QCycle:
    """The rational cycle K with K . E_i = 2 g(E_i) - 2 - E_i^2 for all i."""
    cached = g._cache.get("canonical")
    if cached is not None:
        return cached
    rhs = adjunction_vector(g)
    try:
        coeffs = solve([list(row) for row in g.matrix], list(rhs))
    except ValueError:
        raise InputError(
            "intersection matrix is singular; not a valid resolution graph"
        ) from None
    k = QCycle(g, coeffs)
    # re-substitution check, always on
    for i in range(len(g)):
        acc = sum(g.matrix[i][j] * coeffs[j] for j in range(len(g)))
        if acc != rhs[i]:
            raise InternalCheckError(
                "canonical-cycle-resubstitution",
                f"row {g.vertices[i].id}: {acc} != {rhs[i]}",
            )
    g._cache["canonical"] = k
    return k


def is_numerically_gorenstein(g: DualGraph) -> bool:
    """True when the canonical cycle has integer coefficients."""
    return canonical_cycle(g).is_integral


def chi(g: DualGraph, d: Cycle) -> int:
    """Euler characteristic -(D^2 + D.K)/2 of an integral cycle, as an
    exact integer."""
    if not isinstance(d, Cycle):
        raise InputError("chi expects an integral cycle")
    if d.graph != g:
        raise InputError("cycle does not live on this graph")
    two_chi = -(pairing(g, d, d) + sum(
        a * c for a, c in zip(adjunction_vector(g), d.coeffs)
    ))
    if two_chi % 2 != 0:
        raise InternalCheckError(
            "euler-characteristic-integrality", f"2*chi = {two_chi} is odd"
        )
    return two_chi // 2


def riemann_roch_colength(g: DualGraph, z: Cycle, p_g: int, q: int) -> int:
    """Colength of the ideal cut out by the anti-nef cycle Z, given the
    geometric genus p_g and the cohomological defect q of the ideal:

        colength = -(Z^2 + K.Z)/2 + p_g - q.

    A non-positive result signals an inconsistent (p_g, q, Z) triple,
    since a proper ideal has colength at least 1.
    """
    from .graph import is_anti_nef

    if not (isinstance(p_g, int) and isinstance(q, int)):
        raise InputError("p_g and q must be integers")
    if not 0 <= q <= p_g:
        raise InputError(f"need 0 <= q <= p_g, got q={q}, p_g={p_g}")
    if not z.is_effective or z.is_zero:
        raise InputError("Z must be a non-zero effective cycle")
    if not is_anti_nef(g, z):
        raise InputError("Z must be anti-nef")
    ell = chi(g, z) + p_g - q
    if ell <= 0:
        raise InputError(
            f"inconsistent data: colength {ell} is not positive "
            "(a proper ideal has colength >= 1)"
        )
    return ell
