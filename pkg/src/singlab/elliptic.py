"""Ellipticity, the minimally elliptic cycle, and the elliptic sequence.

A resolution graph is elliptic when the Euler characteristic of its
fundamental cycle vanishes (and then chi(D) >= 0 for every cycle D > 0,
which is re-checked on a bounded sweep).  On a numerically Gorenstein
elliptic graph the elliptic sequence Z_0 > Z_1 > ... > Z_m is built by
repeatedly restricting to the curves orthogonal to the current cycle; its
partial sums C_t and tail sums C'_t drive the ideal classification in
``singlab.classify``.

Every structural fact the construction relies on is verified on the
actual data and raises InternalCheckError when violated, naming the
property; this is how inconsistent analytic inputs (a wrong geometric
genus, say) surface instead of producing silent nonsense.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from . import _engine
from .cycles import adjunction_vector, canonical_cycle, chi, fundamental_cycle, is_numerically_gorenstein
from .errors import InputError, InternalCheckError
from .graph import Cycle, DualGraph, cycle_to_json, is_anti_nef, pairing

__all__ = [
    "EllipticSequence",
    "MinusOneChainReport",
    "ChiSweep",
    "is_elliptic",
    "minimally_elliptic_cycle",
    "elliptic_sequence",
    "enumerate_antinef_upto",
    "check_minus_one_chains",
    "chi_nonnegative_check",
]

# boxes at most this large are swept exhaustively inside is_elliptic;
# larger ones are sampled (the full sweep stays available through
# chi_nonnegative_check(..., mode="exhaustive"))
_AUTO_SWEEP_CAP = 200_000
_SWEEP_SAMPLES = 2000


@dataclass(frozen=True)
class ChiSweep:
    exhaustive: bool
    checked: int
    min_chi: int
    witness: tuple[int, ...]


@dataclass(frozen=True)
class MinusOneChainReport:
    """Outcome of the degree -1 chain decomposition check.

    ``minus_one_indices`` lists every j with Z_j^2 = -1; ``chain`` holds
    the vertex ids F_t (t = j_min .. m-1) through which Z_t - Z_m
    decomposes, ordered by t.  Both are empty when the check is vacuous.
    """

    minus_one_indices: tuple[int, ...]
    chain: tuple[str, ...]


@dataclass(frozen=True)
class EllipticSequence:
    """The cycles Z_0, ..., Z_m with their supports B_0 > ... > B_m."""

    graph: DualGraph
    supports: tuple[tuple[str, ...], ...]
    cycles: tuple[Cycle, ...]

    @property
    def m(self) -> int:
        return len(self.cycles) - 1

    @property
    def e_min(self) -> Cycle:
        return self.cycles[-1]

    def partial_sum(self, t: int) -> Cycle:
        """C_t = Z_0 + ... + Z_t  (C_-1 = 0)."""
        if not -1 <= t <= self.m:
            raise InputError(f"partial sum index {t} outside [-1, {self.m}]")
        acc = Cycle.zero(self.graph)
        for i in range(t + 1):
            acc = acc + self.cycles[i]
        return acc

    def tail_sum(self, t: int) -> Cycle:
        """C'_t = Z_t + ... + Z_m  (C'_{m+1} = 0)."""
        if not 0 <= t <= self.m + 1:
            raise InputError(f"tail sum index {t} outside [0, {self.m + 1}]")
        acc = Cycle.zero(self.graph)
        for i in range(t, self.m + 1):
            acc = acc + self.cycles[i]
        return acc

    def to_json_dict(self) -> dict:
        return {
            "m": self.m,
            "B": [list(b) for b in self.supports],
            "Z": [cycle_to_json(z) for z in self.cycles],
            "Emin": cycle_to_json(self.e_min),
            "C": [cycle_to_json(self.partial_sum(t)) for t in range(self.m + 1)],
            "Cprime": [cycle_to_json(self.tail_sum(t)) for t in range(self.m + 1)],
        }


def chi_nonnegative_check(g: DualGraph, factor: int = 2, mode: str = "auto",
                          samples: int = _SWEEP_SAMPLES, limit: int | None = None) -> ChiSweep:
    """Check chi(D) >= 0 for 0 < D <= factor * Z_E.

    ``mode`` is "exhaustive", "sample", or "auto" (exhaustive when the box
    has at most 200k candidates).  Raises InternalCheckError with a witness
    if a negative Euler characteristic shows up; for a valid elliptic graph
    none exists.
    """
    ze = fundamental_cycle(g)
    bounds = tuple(factor * c for c in ze.coeffs)
    matrix = g.matrix
    adj = adjunction_vector(g)
    size = _engine.box_size(bounds)
    if mode not in ("auto", "exhaustive", "sample"):
        raise InputError(f"unknown sweep mode {mode!r}")
    if mode == "auto":
        mode = "exhaustive" if size <= _AUTO_SWEEP_CAP else "sample"

    if mode == "exhaustive":
        _engine.check_budget(bounds, limit, what="chi sweep")
        min2, witness = _engine.min_twochi_in_box(matrix, adj, bounds)
        checked = size - 1
        exhaustive = True
    else:
        rng = random.Random(0xE11)
        n = len(bounds)
        min2, witness, checked = None, None, 0
        for _ in range(samples):
            d = tuple(rng.randint(0, b) for b in bounds)
            if all(x == 0 for x in d):
                continue
            checked += 1
            md = [sum(matrix[i][j] * d[j] for j in range(n)) for i in range(n)]
            two = -(sum(d[i] * md[i] for i in range(n)) + sum(adj[i] * d[i] for i in range(n)))
            if min2 is None or two < min2:
                min2, witness = two, d
        exhaustive = False

    if min2 is None:  # box held only the zero cycle
        return ChiSweep(exhaustive, 0, 0, ())
    if min2 < 0:
        raise InternalCheckError(
            "euler-characteristic-nonnegativity",
            f"2*chi = {min2} at {witness}",
        )
    return ChiSweep(exhaustive, checked, min2 // 2, witness)


def is_elliptic(g: DualGraph) -> bool:
    """True when the fundamental cycle has Euler characteristic zero.

    On success a bounded sanity sweep also confirms chi(D) >= 0 below
    2 Z_E (exhaustively for small boxes, sampled otherwise); a violation
    is an internal error, not a False.
    """
    cached = g._cache.get("elliptic")
    if cached is not None:
        return cached
    ze = fundamental_cycle(g)
    result = chi(g, ze) == 0
    if result:
        chi_nonnegative_check(g, factor=2, mode="auto")
    g._cache["elliptic"] = result
    return result


def minimally_elliptic_cycle(g: DualGraph) -> Cycle:
    """The unique minimal cycle 0 < D <= Z_E with chi(D) = 0."""
    cached = g._cache.get("emin")
    if cached is not None:
        return cached
    if not is_elliptic(g):
        raise InputError("graph is not elliptic")
    ze = fundamental_cycle(g)
    _engine.check_budget(ze.coeffs, what="minimally elliptic cycle search")
    zeros = _engine.chi_zeros_in_box(g.matrix, adjunction_vector(g), ze.coeffs)
    if not zeros:
        raise InternalCheckError(
            "minimally-elliptic-existence",
            "no chi = 0 cycle below the fundamental cycle",
        )
    best = min(zeros, key=sum)
    if not all(all(a <= b for a, b in zip(best, other)) for other in zeros):
        raise InternalCheckError(
            "minimally-elliptic-uniqueness",
            f"no unique minimum among {len(zeros)} chi = 0 cycles",
        )
    emin = Cycle(g, best)
    if len(emin.support()) > 1:
        idxs = {g.index_of(v) for v in emin.support()}
        from .cycles import _connected

        if not _connected(g, idxs):
            raise InternalCheckError(
                "minimally-elliptic-connectedness", f"support {emin.support()}"
            )
    g._cache["emin"] = emin
    return emin


def elliptic_sequence(g: DualGraph) -> EllipticSequence:
    """Build and fully verify the elliptic sequence of a numerically
    Gorenstein elliptic graph."""
    if not is_elliptic(g):
        raise InputError("graph is not elliptic")
    if not is_numerically_gorenstein(g):
        raise InputError(
            "graph is not numerically Gorenstein (canonical cycle is non-integral)"
        )
    emin = minimally_elliptic_cycle(g)
    emin_support = set(emin.support())

    supports: list[tuple[str, ...]] = [g.ids]
    cycles: list[Cycle] = [fundamental_cycle(g)]
    while pairing(g, cycles[-1], emin) == 0:
        if len(cycles) > len(g):
            raise InternalCheckError(
                "elliptic-sequence-termination",
                "more restriction steps than vertices",
            )
        z = cycles[-1]
        m = g.matrix
        n = len(g)
        mz = [sum(m[i][j] * z.coeffs[j] for j in range(n)) for i in range(n)]
        orthogonal = {i for i in range(n) if mz[i] == 0}
        # connected component of the orthogonal locus containing E_min
        start = g.index_of(next(iter(emin_support)))
        if start not in orthogonal:
            raise InternalCheckError(
                "elliptic-sequence-orthogonal-locus",
                "minimal cycle support not orthogonal to the current cycle",
            )
        comp = {start}
        stack = [start]
        while stack:
            i = stack.pop()
            for j in orthogonal:
                if j not in comp and m[i][j] != 0:
                    comp.add(j)
                    stack.append(j)
        if not {g.index_of(v) for v in emin_support} <= comp:
            raise InternalCheckError(
                "elliptic-sequence-orthogonal-locus",
                "minimal cycle support split across components",
            )
        support = tuple(v.id for i, v in enumerate(g.vertices) if i in comp)
        prev = set(supports[-1])
        if not set(support) < prev:
            raise InternalCheckError(
                "elliptic-sequence-supports-strictly-decrease",
                f"{support} does not shrink {supports[-1]}",
            )
        supports.append(support)
        cycles.append(fundamental_cycle(g, support))

    seq = EllipticSequence(g, tuple(supports), tuple(cycles))
    _verify_sequence(seq, emin)
    return seq


def _verify_sequence(seq: EllipticSequence, emin: Cycle) -> None:
    g = seq.graph
    m = seq.m
    if seq.cycles[m] != emin:
        raise InternalCheckError(
            "elliptic-sequence-ends-at-minimal-cycle",
            f"Z_{m} = {seq.cycles[m]} but the minimal cycle is {emin}",
        )
    selfints = [pairing(g, z, z) for z in seq.cycles]
    for i in range(m + 1):
        for j in range(i + 1, m + 1):
            if pairing(g, seq.cycles[i], seq.cycles[j]) != 0:
                raise InternalCheckError(
                    "elliptic-sequence-orthogonality", f"Z_{i} . Z_{j} != 0"
                )
    for i in range(m):
        if -selfints[i] < -selfints[i + 1]:
            raise InternalCheckError(
                "elliptic-sequence-degrees-monotone",
                f"-Z_{i}^2 = {-selfints[i]} < -Z_{i+1}^2 = {-selfints[i+1]}",
            )
    k = canonical_cycle(g).to_cycle()
    for t in range(m + 1):
        ct = seq.partial_sum(t)
        if not is_anti_nef(g, ct):
            raise InternalCheckError(
                "elliptic-sequence-partial-sums-anti-nef", f"C_{t} is not anti-nef"
            )
        cpt = seq.tail_sum(t)
        shifted = k + cpt
        for vid in seq.supports[t]:
            if pairing(g, shifted, Cycle.unit(g, vid)) != 0:
                raise InternalCheckError(
                    "elliptic-sequence-canonical-restriction",
                    f"(K + C'_{t}) . {vid} != 0",
                )
        if chi(g, ct) != 0 or chi(g, cpt) != 0 or chi(g, seq.cycles[t]) != 0:
            raise InternalCheckError(
                "elliptic-sequence-euler-characteristic-zero", f"at index {t}"
            )
    if seq.partial_sum(m) != -k:
        raise InternalCheckError(
            "elliptic-sequence-total-is-anticanonical",
            f"C_{m} = {seq.partial_sum(m)} but -K = {-k}",
        )


def enumerate_antinef_upto(g: DualGraph, c: Cycle, limit: int | None = None) -> list[Cycle]:
    """Every effective anti-nef cycle D with 0 <= D <= C, by exhaustive
    box scan (guarded by the enumeration budget)."""
    if c.graph != g:
        raise InputError("cycle does not live on this graph")
    if not c.is_effective:
        raise InputError("bounding cycle must be effective")
    _engine.check_budget(c.coeffs, limit, what="anti-nef enumeration")
    found = _engine.antinef_in_box(g.matrix, c.coeffs)
    return [Cycle(g, d) for d in found]


def check_minus_one_chains(g: DualGraph, seq: EllipticSequence) -> MinusOneChainReport:
    """Validate the chain structure forced by Z_j^2 = -1.

    Whenever some Z_j has self-intersection -1, each Z_i with j <= i < m
    must split as Z_m plus a chain of genus-0 (-2)-curves F_{m-1}, ..., F_i
    that the total cycle C_m (equivalently -K) meets trivially.  Violations
    raise InternalCheckError; the return value records what was checked.
    """
    if seq.graph != g:
        raise InputError("sequence belongs to a different graph")
    m = seq.m
    js = tuple(t for t in range(m + 1) if pairing(g, seq.cycles[t], seq.cycles[t]) == -1)
    if not js or js[0] == m:
        return MinusOneChainReport(js, ())

    j0 = js[0]
    adj = adjunction_vector(g)
    cm = seq.partial_sum(m)
    f: dict[int, int] = {}  # t -> vertex index of F_t
    for t in range(j0, m):
        z = seq.cycles[t]
        mz = [sum(g.matrix[i][k] * z.coeffs[k] for k in range(len(g))) for i in range(len(g))]
        negatives = [i for i in range(len(g)) if mz[i] < 0]
        if len(negatives) != 1 or mz[negatives[0]] != -1 or z.coeffs[negatives[0]] != 1:
            raise InternalCheckError(
                "minus-one-chain-structure",
                f"Z_{t} has no unique curve of pairing -1",
            )
        f[t] = negatives[0]

    zm = seq.cycles[m]
    for i in range(j0, m):
        expected = zm
        for t in range(i, m):
            expected = expected + Cycle.unit(g, g.vertices[f[t]].id)
        if expected != seq.cycles[i]:
            raise InternalCheckError(
                "minus-one-chain-structure",
                f"Z_{i} - Z_{m} is not the chain F_{m-1} + ... + F_{i}",
            )

    for t in range(j0, m):
        v = g.vertices[f[t]]
        if v.self_int != -2 or v.genus != 0:
            raise InternalCheckError(
                "minus-one-chain-structure", f"{v.id} is not a genus-0 (-2)-curve"
            )
        if t + 1 < m and g.matrix[f[t]][f[t + 1]] == 0:
            raise InternalCheckError(
                "minus-one-chain-structure",
                f"chain break between {v.id} and {g.vertices[f[t + 1]].id}",
            )
        unit = Cycle.unit(g, v.id)
        if pairing(g, cm, unit) != 0 or adj[f[t]] != 0:
            raise InternalCheckError(
                "minus-one-chain-structure",
                f"total cycle or canonical cycle meets {v.id}",
            )
    chain = tuple(g.vertices[f[t]].id for t in range(j0, m))
    return MinusOneChainReport(js, chain)
