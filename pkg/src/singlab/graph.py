"""Weighted dual resolution graphs and their exact intersection pairing.

A graph records the irreducible exceptional curves of a resolution of a
normal surface singularity: each vertex carries a self-intersection number
and a genus, each edge an intersection multiplicity.  The graph is a valid
resolution graph exactly when its intersection matrix is negative
definite, which is decided by exact integer arithmetic (leading principal
minors); no floating point is used anywhere in this package.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction

from ._linalg import leading_principal_minors
from .errors import InputError

_ID_RE = re.compile(r"[A-Za-z0-9_]+\Z")


@dataclass(frozen=True)
class Vertex:
    id: str
    self_int: int
    genus: int = 0


class DualGraph:
    """Immutable weighted dual graph.

    ``vertices`` keeps document order (all reports refer to vertices by id,
    never by index).  ``edges`` is normalized to ``(id_a, id_b, mult)``
    with ``a`` preceding ``b`` in vertex order and one entry per pair;
    duplicate pairs in the input have their multiplicities summed.
    """

    __slots__ = ("vertices", "edges", "_index", "_matrix", "_cache")

    def __init__(self, vertices, edges):
        verts = []
        for v in vertices:
            if not isinstance(v, Vertex):
                v = Vertex(*v)
            if not _ID_RE.match(v.id):
                raise InputError(f"invalid vertex id {v.id!r}")
            if v.genus < 0:
                raise InputError(f"vertex {v.id}: genus must be >= 0")
            verts.append(v)
        if not verts:
            raise InputError("graph must have at least one vertex")
        index = {}
        for i, v in enumerate(verts):
            if v.id in index:
                raise InputError(f"duplicate vertex id {v.id!r}")
            index[v.id] = i

        mult = {}
        for a, b, m in edges:
            if a not in index or b not in index:
                missing = a if a not in index else b
                raise InputError(f"edge references unknown vertex {missing!r}")
            if a == b:
                raise InputError(f"loop edge at vertex {a!r} is not allowed")
            if m < 1:
                raise InputError(f"edge {a}-{b}: multiplicity must be >= 1")
            key = (min(index[a], index[b]), max(index[a], index[b]))
            mult[key] = mult.get(key, 0) + m

        n = len(verts)
        matrix = [[0] * n for _ in range(n)]
        for i, v in enumerate(verts):
            matrix[i][i] = v.self_int
        for (i, j), m in mult.items():
            matrix[i][j] = m
            matrix[j][i] = m

        # connectivity
        seen = {0}
        stack = [0]
        while stack:
            i = stack.pop()
            for j in range(n):
                if j != i and matrix[i][j] != 0 and j not in seen:
                    seen.add(j)
                    stack.append(j)
        if len(seen) != n:
            missing = next(verts[i].id for i in range(n) if i not in seen)
            raise InputError(f"graph is disconnected (vertex {missing!r} unreachable)")

        self.vertices = tuple(verts)
        self.edges = tuple(
            (verts[i].id, verts[j].id, mult[(i, j)]) for (i, j) in sorted(mult)
        )
        self._index = index
        self._matrix = tuple(tuple(row) for row in matrix)
        self._cache = {}

    # -- basic accessors -------------------------------------------------

    @property
    def ids(self) -> tuple[str, ...]:
        return tuple(v.id for v in self.vertices)

    def __len__(self) -> int:
        return len(self.vertices)

    def index_of(self, vid: str) -> int:
        try:
            return self._index[vid]
        except KeyError:
            raise InputError(f"unknown vertex id {vid!r}") from None

    @property
    def matrix(self) -> tuple[tuple[int, ...], ...]:
        return self._matrix

    @property
    def is_minimal(self) -> bool:
        """No genus-0 curve of self-intersection -1 (contractible curve)."""
        return not any(v.genus == 0 and v.self_int == -1 for v in self.vertices)

    def __eq__(self, other):
        return (
            isinstance(other, DualGraph)
            and self.vertices == other.vertices
            and self.edges == other.edges
        )

    def __hash__(self):
        return hash((self.vertices, self.edges))

    def __repr__(self):
        return f"DualGraph({len(self.vertices)} vertices, {len(self.edges)} edges)"


class Cycle:
    """Integer divisor supported on the exceptional curves of one graph."""

    __slots__ = ("graph", "coeffs")

    def __init__(self, graph: DualGraph, coeffs):
        coeffs = tuple(coeffs)
        if len(coeffs) != len(graph):
            raise InputError("cycle length does not match the graph")
        for c in coeffs:
            if not isinstance(c, int) or isinstance(c, bool):
                raise InputError("cycle coefficients must be integers")
        self.graph = graph
        self.coeffs = coeffs

    @classmethod
    def zero(cls, graph: DualGraph) -> Cycle:
        return cls(graph, (0,) * len(graph))

    @classmethod
    def unit(cls, graph: DualGraph, vid: str) -> Cycle:
        c = [0] * len(graph)
        c[graph.index_of(vid)] = 1
        return cls(graph, c)

    @classmethod
    def from_map(cls, graph: DualGraph, mapping) -> Cycle:
        c = [0] * len(graph)
        for vid, val in mapping.items():
            c[graph.index_of(vid)] = val
        return cls(graph, c)

    def coeff(self, vid: str) -> int:
        return self.coeffs[self.graph.index_of(vid)]

    def to_map(self) -> dict[str, int]:
        return {v.id: c for v, c in zip(self.graph.vertices, self.coeffs)}

    @property
    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    @property
    def is_effective(self) -> bool:
        return all(c >= 0 for c in self.coeffs)

    def support(self) -> tuple[str, ...]:
        return tuple(v.id for v, c in zip(self.graph.vertices, self.coeffs) if c != 0)

    def to_rational(self) -> QCycle:
        return QCycle(self.graph, tuple(Fraction(c) for c in self.coeffs))

    def _binop(self, other, op):
        if not isinstance(other, Cycle) or other.graph != self.graph:
            raise InputError("cycles live on different graphs")
        return Cycle(self.graph, tuple(op(a, b) for a, b in zip(self.coeffs, other.coeffs)))

    def __add__(self, other):
        return self._binop(other, lambda a, b: a + b)

    def __sub__(self, other):
        return self._binop(other, lambda a, b: a - b)

    def __neg__(self):
        return Cycle(self.graph, tuple(-c for c in self.coeffs))

    def __rmul__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        return Cycle(self.graph, tuple(k * c for c in self.coeffs))

    def __eq__(self, other):
        return (
            isinstance(other, Cycle)
            and other.graph == self.graph
            and other.coeffs == self.coeffs
        )

    def __hash__(self):
        return hash(self.coeffs)

    def __le__(self, other):
        """Componentwise partial order."""
        if not isinstance(other, Cycle) or other.graph != self.graph:
            raise InputError("cycles live on different graphs")
        return all(a <= b for a, b in zip(self.coeffs, other.coeffs))

    def __lt__(self, other):
        return self <= other and self != other

    def __ge__(self, other):
        return other.__le__(self)

    def __gt__(self, other):
        return other.__lt__(self)

    def __repr__(self):
        inside = ", ".join(f"{v.id}:{c}" for v, c in zip(self.graph.vertices, self.coeffs))
        return f"Cycle({inside})"


class QCycle:
    """Divisor with exact rational coefficients (used for the canonical cycle)."""

    __slots__ = ("graph", "coeffs")

    def __init__(self, graph: DualGraph, coeffs):
        coeffs = tuple(Fraction(c) for c in coeffs)
        if len(coeffs) != len(graph):
            raise InputError("cycle length does not match the graph")
        self.graph = graph
        self.coeffs = coeffs

    @property
    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def to_cycle(self) -> Cycle:
        if not self.is_integral:
            raise InputError("cycle has non-integral coefficients")
        return Cycle(self.graph, tuple(int(c) for c in self.coeffs))

    def coeff(self, vid: str) -> Fraction:
        return self.coeffs[self.graph.index_of(vid)]

    def to_map(self) -> dict[str, Fraction]:
        return {v.id: c for v, c in zip(self.graph.vertices, self.coeffs)}

    def __neg__(self):
        return QCycle(self.graph, tuple(-c for c in self.coeffs))

    def __eq__(self, other):
        return (
            isinstance(other, QCycle)
            and other.graph == self.graph
            and other.coeffs == self.coeffs
        )

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        inside = ", ".join(f"{v.id}:{c}" for v, c in zip(self.graph.vertices, self.coeffs))
        return f"QCycle({inside})"


# -- document format -----------------------------------------------------

_VERTEX_KEYS = {"id", "self", "genus"}
_EDGE_KEYS = {"ends", "mult"}


def graph_from_json(doc) -> DualGraph:
    """Build a graph from the decoded document; structural errors only."""
    if not isinstance(doc, dict) or set(doc) - {"vertices", "edges"}:
        raise InputError('graph document must be {"vertices": [...], "edges": [...]}')
    raw_vertices = doc.get("vertices")
    if not isinstance(raw_vertices, list) or not raw_vertices:
        raise InputError('"vertices" must be a non-empty list')
    vertices = []
    for entry in raw_vertices:
        if not isinstance(entry, dict) or not _VERTEX_KEYS >= set(entry):
            raise InputError(f"bad vertex entry {entry!r}")
        if "id" not in entry or "self" not in entry:
            raise InputError(f'vertex entry {entry!r} needs "id" and "self"')
        if not isinstance(entry["self"], int) or not isinstance(entry.get("genus", 0), int):
            raise InputError(f"vertex {entry.get('id')!r}: weights must be integers")
        vertices.append(Vertex(str(entry["id"]), entry["self"], entry.get("genus", 0)))
    edges = []
    for entry in doc.get("edges", []):
        if not isinstance(entry, dict) or not _EDGE_KEYS >= set(entry):
            raise InputError(f"bad edge entry {entry!r}")
        ends = entry.get("ends")
        if not (isinstance(ends, list) and len(ends) == 2):
            raise InputError(f'edge entry {entry!r} needs "ends": [a, b]')
        m = entry.get("mult", 1)
        if not isinstance(m, int):
            raise InputError(f"edge {ends!r}: multiplicity must be an integer")
        edges.append((str(ends[0]), str(ends[1]), m))
    return DualGraph(vertices, edges)


def parse_graph(text: str) -> DualGraph:
    """Parse and fully validate a graph document.

    Rejects, with a message naming the violated invariant: JSON syntax
    errors, duplicate ids, loop edges, disconnected graphs, and graphs
    whose intersection matrix is not negative definite.
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"graph document is not valid JSON: {exc}") from None
    g = graph_from_json(doc)
    if not is_negative_definite(g):
        raise InputError("intersection matrix is not negative definite")
    return g


def graph_to_json(g: DualGraph) -> dict:
    return {
        "vertices": [
            {"id": v.id, "self": v.self_int, "genus": v.genus} for v in g.vertices
        ],
        "edges": [{"ends": [a, b], "mult": m} for a, b, m in g.edges],
    }


def serialize_graph(g: DualGraph) -> str:
    return json.dumps(graph_to_json(g), sort_keys=True, separators=(", ", ": "))


def cycle_to_json(d) -> dict:
    if isinstance(d, QCycle):
        return {
            vid: {"num": c.numerator, "den": c.denominator}
            for vid, c in d.to_map().items()
        }
    return d.to_map()


# -- the intersection form ------------------------------------------------


def intersection_matrix(g: DualGraph) -> list[list[int]]:
    """Symmetric matrix: self-intersections on the diagonal, edge
    multiplicities off it."""
    return [list(row) for row in g.matrix]


def pairing(g: DualGraph, d1, d2):
    """Exact intersection number D1 . D2 (int for integer cycles,
    Fraction as soon as one side is rational)."""
    for d in (d1, d2):
        if not isinstance(d, (Cycle, QCycle)):
            raise InputError("pairing expects cycles")
        if d.graph != g:
            raise InputError("cycle does not live on this graph")
    m = g.matrix
    n = len(g)
    b = d2.coeffs
    mb = [sum(m[i][j] * b[j] for j in range(n)) for i in range(n)]
    return sum(d1.coeffs[i] * mb[i] for i in range(n))


def is_negative_definite(g: DualGraph) -> bool:
    """Exact test: the k-th leading principal minor must have sign (-1)^k."""
    minors = leading_principal_minors(g.matrix)
    return all(
        (minor > 0) if k % 2 == 0 else (minor < 0)
        for k, minor in enumerate(minors, start=1)
    )


def is_anti_nef(g: DualGraph, d: Cycle) -> bool:
    """True when D meets every curve non-positively (D . E_i <= 0 for all i)."""
    if not isinstance(d, Cycle) or d.graph != g:
        raise InputError("cycle does not live on this graph")
    m = g.matrix
    n = len(g)
    return all(sum(m[i][j] * d.coeffs[j] for j in range(n)) <= 0 for i in range(n))
