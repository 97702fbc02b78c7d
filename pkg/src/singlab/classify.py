"""Classification of elliptic ideals with Gorenstein normal tangent cone.

Given a numerically Gorenstein elliptic graph and the geometric genus p_g
(an analytic invariant the graph does not determine, so it is an explicit
input), the cycles representing integrally closed ideals with Gorenstein
normal tangent cone and normal reduction number 2 are exactly certain
partial sums C_t of the elliptic sequence.  The admissible index set A_f
is an arithmetic progression determined by (m, p_g); membership of t then
additionally requires -Z_t^2 >= 2 unless the singularity fails to be
maximally elliptic, in which case (in characteristic zero) every t < m
also qualifies.

The same module computes normal Hilbert data (multiplicity, first and
second normal Hilbert coefficients, the colength sequence of the powers)
for any anti-nef cycle, in the regime where the cohomological defect q is
constant from the first power on, i.e. normal reduction number at most 2.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .cycles import canonical_cycle, chi, is_numerically_gorenstein, riemann_roch_colength
from .elliptic import elliptic_sequence, is_elliptic
from .errors import InputError, InternalCheckError
from .graph import Cycle, DualGraph, cycle_to_json, is_anti_nef, pairing

__all__ = [
    "AfStructure",
    "EllipticIdealClass",
    "ClassificationReport",
    "HilbertData",
    "derive_af",
    "classify_gorenstein_elliptic_ideals",
    "normal_hilbert_data",
    "pg_ideal_gorenstein_test",
]


@dataclass(frozen=True)
class AfStructure:
    """The admissible index set inside {0, ..., m}.

    gamma divides m with m/gamma = p_g - 1 (for p_g >= 2), beta = gamma - 1,
    and af = {beta + i*gamma : 0 <= i < m/gamma} plus m itself, so that
    |af| = p_g.  gamma = 1 exactly for maximally elliptic singularities.
    """

    gamma: int
    beta: int
    af: tuple[int, ...]
    maximal: bool


@dataclass(frozen=True)
class EllipticIdealClass:
    """Numerical record of one classified ideal, represented by C_t."""

    t: int
    cycle: Cycle
    colength: int
    e0: int
    kz: int
    chi: int
    eb2: int
    q: int
    kind: str  # "elliptic" | "strongly-elliptic"

    def to_json_dict(self) -> dict:
        return {
            "t": self.t,
            "cycle": cycle_to_json(self.cycle),
            "colength": self.colength,
            "e0": self.e0,
            "kz": self.kz,
            "chi": self.chi,
            "e2bar": self.eb2,
            "q": self.q,
            "kind": self.kind,
        }


@dataclass(frozen=True)
class ClassificationReport:
    af: AfStructure
    ideals: tuple[EllipticIdealClass, ...]
    zeta: int
    m: int
    p_g: int
    note: str | None = None

    def to_json_dict(self) -> dict:
        doc = {
            "gamma": self.af.gamma,
            "beta": self.af.beta,
            "af": list(self.af.af),
            "maximal": self.af.maximal,
            "m": self.m,
            "pg": self.p_g,
            "zeta": self.zeta,
            "ideals": [i.to_json_dict() for i in self.ideals],
        }
        if self.note:
            doc["note"] = self.note
        return doc


@dataclass(frozen=True)
class HilbertData:
    """Normal Hilbert data of the ideal cut out by an anti-nef cycle.

    ``colengths[k]`` is the colength of the (k+1)-st integral-closure
    power; ``q_sequence`` starts with p_g and stays at q from the first
    power on; ``br`` is the normal reduction number (1 or 2 here).
    """

    e0bar: int
    e1bar: int
    e2bar: int
    q_sequence: tuple[int, ...]
    colengths: tuple[int, ...]
    br: int

    def to_json_dict(self) -> dict:
        return {
            "e0bar": self.e0bar,
            "e1bar": self.e1bar,
            "e2bar": self.e2bar,
            "q": list(self.q_sequence),
            "colengths": list(self.colengths),
            "br": self.br,
        }


def derive_af(m: int, p_g: int) -> AfStructure:
    """Admissible index set from the sequence length m and genus p_g.

    Assumes residue characteristic zero for p_g < m + 1 (the structure of
    the progression is a characteristic-zero statement); the caller gates
    on that, see classify_gorenstein_elliptic_ideals.
    """
    if not (isinstance(m, int) and isinstance(p_g, int)):
        raise InputError("m and p_g must be integers")
    if m < 0 or p_g < 1:
        raise InputError(f"need m >= 0 and p_g >= 1, got m={m}, p_g={p_g}")
    if p_g == 1:
        if m != 0:
            raise InputError(
                f"p_g = 1 forces a sequence of length 1, got m = {m}"
            )
        return AfStructure(gamma=1, beta=0, af=(0,), maximal=True)
    if p_g > m + 1:
        raise InputError(
            f"inconsistent pair: p_g = {p_g} exceeds the sequence bound m + 1 = {m + 1}"
        )
    if m % (p_g - 1) != 0:
        raise InputError(
            f"inconsistent pair: p_g - 1 = {p_g - 1} does not divide m = {m}"
        )
    gamma = m // (p_g - 1)
    beta = gamma - 1
    af = tuple(beta + i * gamma for i in range(m // gamma)) + (m,)
    if len(af) != p_g or sorted(set(af)) != list(af):
        raise InternalCheckError(
            "admissible-index-set-size", f"|A| = {len(af)} but p_g = {p_g}"
        )
    return AfStructure(gamma=gamma, beta=beta, af=af, maximal=gamma == 1)


def classify_gorenstein_elliptic_ideals(
    g: DualGraph, p_g: int, char0: bool = True
) -> ClassificationReport:
    """All elliptic ideals whose normal tangent cone is Gorenstein.

    Requires a minimal, elliptic, numerically Gorenstein graph and a p_g
    consistent with the sequence length.  In the non-maximal case the
    classification is only valid in residue characteristic zero; pass
    char0=False to get a refusal instead of an unwarranted answer.
    """
    if not g.is_minimal:
        bad = next(v.id for v in g.vertices if v.genus == 0 and v.self_int == -1)
        raise InputError(
            f"graph is not minimal: vertex {bad} is a genus-0 (-1)-curve"
        )
    if not is_elliptic(g):
        raise InputError("graph is not elliptic")
    if not is_numerically_gorenstein(g):
        raise InputError("graph is not numerically Gorenstein")
    seq = elliptic_sequence(g)
    af = derive_af(seq.m, p_g)
    if not af.maximal and not char0:
        raise InputError(
            "the non-maximal classification needs residue characteristic zero; "
            "this graph with p_g = %d is not maximally elliptic" % p_g
        )

    k = canonical_cycle(g)
    ideals = []
    for rank, t in enumerate(af.af):
        zt2 = pairing(g, seq.cycles[t], seq.cycles[t])
        if not (-zt2 >= 2 or (not af.maximal and t < seq.m)):
            continue
        ct = seq.partial_sum(t)
        colength = rank + 1
        e0 = -pairing(g, ct, ct)
        kz = pairing(g, k, ct)
        chi_ct = chi(g, ct)
        if chi_ct != 0:
            raise InternalCheckError(
                "gorenstein-cone-euler-characteristic", f"chi(C_{t}) = {chi_ct}"
            )
        if kz != e0:
            raise InternalCheckError(
                "gorenstein-cone-canonical-degree", f"K.C_{t} = {kz} != {e0}"
            )
        if colength > p_g:
            raise InternalCheckError(
                "gorenstein-cone-colength-bound", f"{colength} > p_g = {p_g}"
            )
        ideals.append(
            EllipticIdealClass(
                t=t,
                cycle=ct,
                colength=colength,
                e0=e0,
                kz=int(kz),
                chi=chi_ct,
                eb2=colength,
                q=p_g - colength,
                kind="strongly-elliptic" if colength == 1 else "elliptic",
            )
        )

    zeta = len(ideals)
    zm2 = pairing(g, seq.cycles[seq.m], seq.cycles[seq.m])
    if (zeta == p_g) != (-zm2 >= 2):
        raise InternalCheckError(
            "gorenstein-cone-count-criterion",
            f"zeta = {zeta}, p_g = {p_g}, Z_m^2 = {zm2}",
        )
    note = None
    if af.maximal and pairing(g, seq.cycles[0], seq.cycles[0]) == -1:
        if zeta != 0:
            raise InternalCheckError(
                "gorenstein-cone-count-criterion",
                "maximally elliptic with Z_0^2 = -1 must have zeta = 0",
            )
        note = (
            "maximally elliptic with Z_0^2 = -1: every integrally closed ideal "
            "with Gorenstein normal tangent cone has normal reduction number 1"
        )
    return ClassificationReport(af=af, ideals=tuple(ideals), zeta=zeta,
                                m=seq.m, p_g=p_g, note=note)


def normal_hilbert_data(g: DualGraph, z: Cycle, p_g: int, q: int, n_max: int = 8) -> HilbertData:
    """Normal Hilbert data of the ideal cut out by Z, assuming the defect
    q(n) equals q for every power n >= 1 (normal reduction number <= 2).

    Verifies on the way that the degree-2 polynomial built from the three
    coefficients reproduces the colength of every power up to n_max + 1.
    """
    if not isinstance(z, Cycle) or z.graph != g:
        raise InputError("cycle does not live on this graph")
    if not is_anti_nef(g, z) or z.is_zero or not z.is_effective:
        raise InputError("Z must be a non-zero effective anti-nef cycle")
    if n_max < 1:
        raise InputError("n_max must be >= 1")
    e0bar = -pairing(g, z, z)
    ell = riemann_roch_colength(g, z, p_g, q)
    e1bar = e0bar - ell + (p_g - q)
    e2bar = p_g - q
    colengths = tuple(
        riemann_roch_colength(g, n * z, p_g, q) for n in range(1, n_max + 2)
    )
    for prev, nxt in zip(colengths, colengths[1:]):
        if nxt <= prev:
            raise InternalCheckError(
                "colength-strict-monotonicity", f"{prev} !< {nxt}"
            )
    for n in range(1, n_max + 1):
        value = e0bar * comb(n + 2, 2) - e1bar * (n + 1) + e2bar
        if value != colengths[n]:
            raise InternalCheckError(
                "hilbert-polynomial-matches-colengths",
                f"P({n}) = {value} but the power {n + 1} has colength {colengths[n]}",
            )
    br = 1 if e2bar == 0 else 2
    if br > p_g + 1:
        raise InternalCheckError("normal-reduction-number-bound", f"br = {br}")
    return HilbertData(
        e0bar=e0bar,
        e1bar=e1bar,
        e2bar=e2bar,
        q_sequence=(p_g,) + (q,) * n_max,
        colengths=colengths,
        br=br,
    )


def pg_ideal_gorenstein_test(g: DualGraph, z: Cycle) -> bool:
    """For a cycle representing an ideal with normal reduction number 1:
    the normal tangent cone is Gorenstein exactly when K.Z = 0.

    The equivalent route 2*colength = e0 (colength taken with q = p_g) is
    evaluated independently and compared.
    """
    k = canonical_cycle(g)
    kz = pairing(g, k, z)
    two_chi = 2 * chi(g, z)
    e0 = -pairing(g, z, z)
    if (kz == 0) != (two_chi == e0):
        raise InternalCheckError(
            "pg-ideal-gorenstein-route-agreement",
            f"K.Z = {kz} but 2*chi = {two_chi}, e0 = {e0}",
        )
    return kz == 0
