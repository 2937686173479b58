"""Finite-dimensional monomial bound-quiver algebras.

Paths are written in traversal order: the path ``("a", "b")`` runs along
arrow ``a`` first and then along ``b``.  Vertices are numbered ``1..n``.
"""

from __future__ import annotations

from collections import deque
from typing import TYPE_CHECKING, NamedTuple, Sequence

from .fieldmat import FieldSpec

if TYPE_CHECKING:
    from .rep import Representation

DEFAULT_PATH_CAP = 10_000


class InfiniteDimensional(ValueError):
    """The relations do not bound the length of nonzero paths."""


class Arrow(NamedTuple):
    name: str
    source: int
    target: int


class Path(NamedTuple):
    source: int
    target: int
    arrows: tuple[str, ...]

    @property
    def length(self) -> int:
        return len(self.arrows)

    def __str__(self) -> str:
        if not self.arrows:
            return f"e{self.source}"
        return " ".join(self.arrows)


class Quiver:
    """A finite quiver with named arrows."""

    def __init__(self, vertex_count: int, arrows: Sequence[tuple[str, int, int]] = ()):
        if vertex_count < 1:
            raise ValueError(f"a quiver needs at least one vertex, got {vertex_count}")
        self.vertex_count = int(vertex_count)
        self.arrows: tuple[Arrow, ...] = tuple(Arrow(str(a), int(s), int(t)) for a, s, t in arrows)
        seen = set()
        for a in self.arrows:
            if a.name in seen:
                raise ValueError(f"duplicate arrow name {a.name!r}")
            seen.add(a.name)
            for v in (a.source, a.target):
                if not 1 <= v <= self.vertex_count:
                    raise ValueError(f"arrow {a.name!r} uses vertex {v} outside 1..{self.vertex_count}")
        self.arrow = {a.name: a for a in self.arrows}

    @property
    def vertices(self) -> range:
        return range(1, self.vertex_count + 1)

    def outgoing(self, v: int) -> list[Arrow]:
        return [a for a in self.arrows if a.source == v]

    def incoming(self, v: int) -> list[Arrow]:
        return [a for a in self.arrows if a.target == v]

    def _key(self):
        return (self.vertex_count, self.arrows)

    def __eq__(self, other):
        return isinstance(other, Quiver) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        arrows = ", ".join(f"{a.name}:{a.source}->{a.target}" for a in self.arrows)
        return f"Quiver({self.vertex_count}, [{arrows}])"


class MonomialAlgebra:
    """Path algebra of ``quiver`` over ``field`` modulo monomial ``relations``.

    Instances are immutable.  ``path_basis`` lists every nonzero path (the
    trivial paths ``e_i`` included) in breadth-first order.
    """

    def __init__(self, field: FieldSpec, quiver: Quiver, relations, path_basis, name: str = ""):
        self.field = field
        self.quiver = quiver
        self.relations: tuple[tuple[str, ...], ...] = tuple(tuple(r) for r in relations)
        self.path_basis: tuple[Path, ...] = tuple(path_basis)
        self.name = name
        self._index = {(q.source, q.arrows): k for k, q in enumerate(self.path_basis)}
        self._cache: dict = {}

    @property
    def p(self) -> int:
        return self.field.p

    @property
    def vertex_count(self) -> int:
        return self.quiver.vertex_count

    @property
    def vertices(self) -> range:
        return self.quiver.vertices

    @property
    def dimension(self) -> int:
        return len(self.path_basis)

    def paths_from(self, i: int) -> list[Path]:
        return [q for q in self.path_basis if q.source == i]

    def paths(self, i: int, j: int) -> list[Path]:
        return [q for q in self.path_basis if q.source == i and q.target == j]

    def extend(self, path: Path, arrow: str) -> Path | None:
        """``path`` followed by ``arrow``, or ``None`` if that product is zero."""
        a = self.quiver.arrow[arrow]
        if a.source != path.target:
            return None
        key = (path.source, path.arrows + (arrow,))
        k = self._index.get(key)
        return None if k is None else self.path_basis[k]

    def is_nonzero_path(self, source: int, arrows: Sequence[str]) -> bool:
        return (source, tuple(arrows)) in self._index

    def _key(self):
        return (self.field, self.quiver, self.relations)

    def __eq__(self, other):
        return isinstance(other, MonomialAlgebra) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        label = self.name or "MonomialAlgebra"
        return f"<{label} over {self.field}: {self.vertex_count} vertices, dim {self.dimension}>"


def _check_relation(quiver: Quiver, rel: Sequence[str]) -> tuple[str, ...]:
    rel = tuple(rel)
    if len(rel) < 2:
        raise ValueError(f"relation {' '.join(rel)!r} must have length at least 2")
    for name in rel:
        if name not in quiver.arrow:
            raise ValueError(f"relation uses unknown arrow {name!r}")
    for a, b in zip(rel, rel[1:]):
        if quiver.arrow[a].target != quiver.arrow[b].source:
            raise ValueError(
                f"relation {' '.join(rel)!r} is not composable: {a} ends at "
                f"{quiver.arrow[a].target} but {b} starts at {quiver.arrow[b].source}"
            )
    return rel


def build_monomial_algebra(
    field: FieldSpec,
    quiver: Quiver,
    relations: Sequence[Sequence[str]] = (),
    *,
    path_cap: int = DEFAULT_PATH_CAP,
    name: str = "",
) -> MonomialAlgebra:
    """Enumerate the nonzero paths of ``kQ / (relations)`` breadth-first.

    Raises :class:`InfiniteDimensional` once more than ``path_cap`` paths
    have been produced.
    """
    rels = [_check_relation(quiver, r) for r in relations]
    # a new path can only acquire a relation as a suffix
    by_last: dict[str, list[tuple[str, ...]]] = {}
    for r in rels:
        by_last.setdefault(r[-1], []).append(r)

    basis = [Path(v, v, ()) for v in quiver.vertices]
    queue = deque(basis)
    while queue:
        q = queue.popleft()
        for a in quiver.outgoing(q.target):
            arrows = q.arrows + (a.name,)
            if any(arrows[-len(r):] == r for r in by_last.get(a.name, ()) if len(r) <= len(arrows)):
                continue
            new = Path(q.source, a.target, arrows)
            basis.append(new)
            if len(basis) > path_cap:
                raise InfiniteDimensional(
                    f"more than {path_cap} nonzero paths; the relations do not bound path length"
                )
            queue.append(new)
    return MonomialAlgebra(field, quiver, rels, basis, name=name)


def cyclic_nakayama(n: int, field: FieldSpec | None = None) -> MonomialAlgebra:
    """Cyclic quiver ``i -> i+1 (mod n)`` with every path of length two set to zero."""
    if n < 2:
        raise ValueError(f"the cyclic algebra needs n >= 2 vertices, got {n}")
    field = field or FieldSpec(2)
    arrows = [(f"a{i}", i, i % n + 1) for i in range(1, n + 1)]
    relations = [(f"a{i}", f"a{i % n + 1}") for i in range(1, n + 1)]
    return build_monomial_algebra(field, Quiver(n, arrows), relations, name=f"C_{n}")


def field_algebra(field: FieldSpec | None = None) -> MonomialAlgebra:
    """The one-vertex algebra with no arrows, i.e. the field itself."""
    return build_monomial_algebra(field or FieldSpec(2), Quiver(1), (), name="k")


def opposite(A: MonomialAlgebra) -> MonomialAlgebra:
    """Reverse every arrow and every relation; arrow names are kept."""
    cached = A._cache.get("opposite")
    if cached is not None:
        return cached
    quiver = Quiver(A.vertex_count, [(a.name, a.target, a.source) for a in A.quiver.arrows])
    relations = [tuple(reversed(r)) for r in A.relations]
    name = A.name[:-3] if A.name.endswith("^op") else (A.name + "^op" if A.name else "")
    opp = build_monomial_algebra(A.field, quiver, relations, path_cap=max(DEFAULT_PATH_CAP, A.dimension), name=name)
    A._cache["opposite"] = opp
    opp._cache["opposite"] = A
    return opp


def indecomposable_projective(A: MonomialAlgebra, i: int) -> Representation:
    """``P_i``: basis the paths starting at ``i``, arrows acting by extension."""
    from .rep import projective_module

    return projective_module(A, [i]).module


def indecomposable_injective(A: MonomialAlgebra, i: int) -> Representation:
    """``I^i``: the dual of the projective at ``i`` over the opposite algebra."""
    from .rep import Representation, dual

    D = dual(indecomposable_projective(opposite(A), i))
    return Representation(A, D.dims, D.maps, name=f"I{i}")


def regular_module(A: MonomialAlgebra) -> Representation:
    from .rep import projective_module

    return projective_module(A, list(A.vertices)).module


def is_self_injective(A: MonomialAlgebra, *, seed: int | None = None) -> bool:
    """True iff the indecomposable projectives match the indecomposable injectives.

    A ``True`` answer is always backed by explicit isomorphisms.
    """
    if "self_injective" in A._cache:
        return A._cache["self_injective"]
    from .rep import DEFAULT_SEED, is_isomorphic

    seed = DEFAULT_SEED if seed is None else seed
    projectives = [indecomposable_projective(A, i) for i in A.vertices]
    injectives = [indecomposable_injective(A, i) for i in A.vertices]
    unused = set(range(len(injectives)))
    result = True
    for P in projectives:
        match = next(
            (j for j in sorted(unused) if is_isomorphic(P, injectives[j], seed=seed).isomorphic),
            None,
        )
        if match is None:
            result = False
            break
        unused.discard(match)
    A._cache["self_injective"] = result
    return result
