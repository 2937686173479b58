"""Finitely generated representations of a monomial algebra.

A representation stores one vector space dimension per vertex and one
matrix per arrow, shaped ``dims[target] x dims[source]``.  Morphisms store
one matrix per vertex.  Everything is exact over GF(p).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from . import fieldmat as fm
from .algebra import MonomialAlgebra, Path, opposite

DEFAULT_SEED = 0xC0FFEE
DEFAULT_TRIALS = 64
EXHAUST_LIMIT = 2**20
_CHUNK = 1 << 15


class Representation:
    """A representation of ``algebra``; treat instances as immutable."""

    def __init__(self, algebra: MonomialAlgebra, dims: Sequence[int], maps=None, name: str = ""):
        self.algebra = algebra
        self.dims = tuple(int(d) for d in dims)
        if len(self.dims) != algebra.vertex_count:
            raise ValueError(f"expected {algebra.vertex_count} dimensions, got {len(self.dims)}")
        if any(d < 0 for d in self.dims):
            raise ValueError(f"dimensions must be nonnegative, got {self.dims}")
        maps = dict(maps or {})
        unknown = set(maps) - set(algebra.quiver.arrow)
        if unknown:
            raise ValueError(f"unknown arrows {sorted(unknown)}")
        p = algebra.p
        self.maps: dict[str, np.ndarray] = {}
        for a in algebra.quiver.arrows:
            shape = (self.dims[a.target - 1], self.dims[a.source - 1])
            m = maps.get(a.name)
            m = fm.zeros(*shape) if m is None else np.asarray(m, dtype=fm.DTYPE).reshape(shape) % p
            if m.shape != shape:
                raise ValueError(f"map for {a.name} has shape {m.shape}, expected {shape}")
            m.setflags(write=False)
            self.maps[a.name] = m
        self.name = name
        self._paths: dict[Path, np.ndarray] = {}

    @property
    def p(self) -> int:
        return self.algebra.p

    @property
    def total_dim(self) -> int:
        return sum(self.dims)

    def dim(self, v: int) -> int:
        return self.dims[v - 1]

    def is_zero(self) -> bool:
        return self.total_dim == 0

    def path_matrix(self, path: Path) -> np.ndarray:
        """Action of a path: the product of its arrow maps, later arrows on the left."""
        out = self._paths.get(path)
        if out is None:
            out = fm.identity(self.dim(path.source))
            for a in path.arrows:
                out = (self.maps[a] @ out) % self.p
            self._paths[path] = out
        return out

    def composite(self, arrows: Sequence[str]) -> np.ndarray:
        first = self.algebra.quiver.arrow[arrows[0]]
        out = fm.identity(self.dim(first.source))
        for a in arrows:
            out = (self.maps[a] @ out) % self.p
        return out

    def __repr__(self):
        label = f"{self.name} " if self.name else ""
        return f"<Representation {label}dims={self.dims} over {self.algebra!r}>"


class Morphism:
    """A family of vertex maps ``source -> target``; treat as immutable."""

    def __init__(self, source: Representation, target: Representation, maps: Sequence[np.ndarray]):
        if source.algebra != target.algebra:
            raise ValueError("morphism between representations of different algebras")
        self.source = source
        self.target = target
        p = source.p
        self.maps = tuple(np.asarray(m, dtype=fm.DTYPE).reshape(target.dims[k], source.dims[k]) % p
                          for k, m in enumerate(maps))
        if len(self.maps) != source.algebra.vertex_count:
            raise ValueError("need one matrix per vertex")

    @property
    def p(self) -> int:
        return self.source.p

    def at(self, v: int) -> np.ndarray:
        return self.maps[v - 1]

    def is_valid(self) -> bool:
        """Check commutativity with every arrow."""
        p = self.p
        for a in self.source.algebra.quiver.arrows:
            left = (self.target.maps[a.name] @ self.at(a.source)) % p
            right = (self.at(a.target) @ self.source.maps[a.name]) % p
            if not np.array_equal(left, right):
                return False
        return True

    def is_iso(self) -> bool:
        return all(fm.is_invertible(m, self.p) for m in self.maps)

    def is_zero(self) -> bool:
        return all(not np.any(m) for m in self.maps)

    def rank(self) -> int:
        return sum(fm.rank(m, self.p) for m in self.maps)

    def inverse(self) -> Morphism:
        return Morphism(self.target, self.source, [fm.inverse(m, self.p) for m in self.maps])

    def flatten(self) -> np.ndarray:
        return np.concatenate([m.ravel() for m in self.maps])

    def __matmul__(self, other: Morphism) -> Morphism:
        """``self @ other`` is the composite ``self o other``."""
        if other.target.dims != self.source.dims:
            raise ValueError("morphisms are not composable")
        p = self.p
        return Morphism(other.source, self.target, [(g @ f) % p for g, f in zip(self.maps, other.maps)])

    def __add__(self, other: Morphism) -> Morphism:
        return Morphism(self.source, self.target, [a + b for a, b in zip(self.maps, other.maps)])

    def scale(self, c: int) -> Morphism:
        return Morphism(self.source, self.target, [c * m for m in self.maps])

    def __repr__(self):
        return f"<Morphism {self.source.dims} -> {self.target.dims}>"


def identity_morphism(M: Representation) -> Morphism:
    return Morphism(M, M, [fm.identity(d) for d in M.dims])


def zero_morphism(M: Representation, N: Representation) -> Morphism:
    return Morphism(M, N, [fm.zeros(n, m) for m, n in zip(M.dims, N.dims)])


def zero_representation(A: MonomialAlgebra) -> Representation:
    return Representation(A, [0] * A.vertex_count)


def simple(A: MonomialAlgebra, i: int) -> Representation:
    if i not in A.vertices:
        raise ValueError(f"vertex {i} not in 1..{A.vertex_count}")
    dims = [0] * A.vertex_count
    dims[i - 1] = 1
    return Representation(A, dims, name=f"S{i}")


@dataclass(frozen=True)
class RelationViolation:
    relation: tuple[str, ...]
    composite: np.ndarray = field(repr=False)

    def __str__(self):
        return f"relation {' '.join(self.relation)} does not act as zero"


def check_module(M: Representation) -> RelationViolation | None:
    """First relation whose composite is nonzero on ``M``, or ``None``."""
    for rel in M.algebra.relations:
        comp = M.composite(rel)
        if np.any(comp):
            return RelationViolation(rel, comp)
    return None


@dataclass(frozen=True)
class DirectSum:
    module: Representation
    injections: tuple[Morphism, ...]
    projections: tuple[Morphism, ...]


def direct_sum(parts: Sequence[Representation], algebra: MonomialAlgebra | None = None) -> DirectSum:
    """Block-diagonal sum with its canonical injections and projections."""
    parts = list(parts)
    if not parts:
        if algebra is None:
            raise ValueError("the empty direct sum needs an explicit algebra")
        Z = zero_representation(algebra)
        return DirectSum(Z, (), ())
    A = parts[0].algebra
    if any(P.algebra != A for P in parts):
        raise ValueError("direct sum of representations over different algebras")
    n = A.vertex_count
    dims = [sum(P.dims[k] for P in parts) for k in range(n)]
    maps = {}
    for a in A.quiver.arrows:
        blocks = [P.maps[a.name] for P in parts]
        maps[a.name] = _block_diag(blocks)
    S = Representation(A, dims, maps)
    injections, projections = [], []
    offsets = [0] * n
    for P in parts:
        inj, proj = [], []
        for k in range(n):
            E = fm.zeros(dims[k], P.dims[k])
            E[offsets[k]:offsets[k] + P.dims[k], :] = fm.identity(P.dims[k])
            inj.append(E)
            proj.append(fm.transpose(E))
            offsets[k] += P.dims[k]
        injections.append(Morphism(P, S, inj))
        projections.append(Morphism(S, P, proj))
    return DirectSum(S, tuple(injections), tuple(projections))


def _block_diag(blocks: Sequence[np.ndarray]) -> np.ndarray:
    rows = sum(b.shape[0] for b in blocks)
    cols = sum(b.shape[1] for b in blocks)
    out = fm.zeros(rows, cols)
    r = c = 0
    for b in blocks:
        out[r:r + b.shape[0], c:c + b.shape[1]] = b
        r += b.shape[0]
        c += b.shape[1]
    return out


def sum_of(parts: Sequence[Representation], algebra: MonomialAlgebra | None = None) -> Representation:
    return direct_sum(parts, algebra).module


# --- projective modules -------------------------------------------------------


@dataclass(frozen=True)
class FreeModule:
    """A direct sum of indecomposable projectives ``P_{v_1} + ... + P_{v_m}``.

    ``labels[w-1]`` names the basis at vertex ``w``: pairs ``(j, path)`` for
    a path from ``vertices[j]`` to ``w``.  ``generators[j]`` is the basis
    index of the trivial path of summand ``j`` at its vertex.
    """

    module: Representation
    vertices: tuple[int, ...]
    labels: tuple[tuple[tuple[int, Path], ...], ...]
    generators: tuple[int, ...]


def projective_module(A: MonomialAlgebra, vertices: Sequence[int]) -> FreeModule:
    vertices = tuple(int(v) for v in vertices)
    for v in vertices:
        if v not in A.vertices:
            raise ValueError(f"vertex {v} not in 1..{A.vertex_count}")
    labels: list[list[tuple[int, Path]]] = [[] for _ in A.vertices]
    generators = []
    for j, v in enumerate(vertices):
        for q in A.paths_from(v):
            if not q.arrows:
                generators.append(len(labels[v - 1]))
            labels[q.target - 1].append((j, q))
    index = [{lab: k for k, lab in enumerate(labs)} for labs in labels]
    maps = {}
    for a in A.quiver.arrows:
        M = fm.zeros(len(labels[a.target - 1]), len(labels[a.source - 1]))
        for k, (j, q) in enumerate(labels[a.source - 1]):
            ext = A.extend(q, a.name)
            if ext is not None:
                M[index[a.target - 1][(j, ext)], k] = 1
        maps[a.name] = M
    name = "+".join(f"P{v}" for v in vertices) if vertices else "0"
    mod = Representation(A, [len(l) for l in labels], maps, name=name)
    return FreeModule(mod, vertices, tuple(tuple(l) for l in labels), tuple(generators))


def morphism_from_generators(free: FreeModule, N: Representation, images: Sequence[np.ndarray]) -> Morphism:
    """The unique morphism ``free -> N`` sending generator ``j`` to ``images[j]``."""
    A = N.algebra
    cols = []
    for w in A.vertices:
        block = fm.zeros(N.dim(w), len(free.labels[w - 1]))
        for k, (j, q) in enumerate(free.labels[w - 1]):
            block[:, k] = (N.path_matrix(q) @ np.asarray(images[j]).reshape(-1)) % N.p
        cols.append(block)
    return Morphism(free.module, N, cols)


def generator_images(free: FreeModule, f: Morphism) -> list[np.ndarray]:
    """Images of the generators of ``free`` under ``f``."""
    return [f.at(v)[:, free.generators[j]] for j, v in enumerate(free.vertices)]


def hom_from_projective(free: FreeModule, N: Representation) -> list[Morphism]:
    """Basis of ``Hom(free, N)`` read off from ``N`` at the generator vertices."""
    basis = []
    for j, v in enumerate(free.vertices):
        for k in range(N.dim(v)):
            images = [np.zeros(N.dim(u), dtype=fm.DTYPE) for u in free.vertices]
            images[j][k] = 1
            basis.append(morphism_from_generators(free, N, images))
    return basis


# --- hom spaces, kernels, images ---------------------------------------------


@dataclass(frozen=True)
class HomSpace:
    source: Representation
    target: Representation
    basis: tuple[Morphism, ...]

    @property
    def dim(self) -> int:
        return len(self.basis)

    def __len__(self):
        return len(self.basis)

    def __iter__(self):
        return iter(self.basis)

    def combination(self, coeffs: Sequence[int]) -> Morphism:
        p = self.source.p
        maps = [fm.zeros(t, s) for s, t in zip(self.source.dims, self.target.dims)]
        for c, b in zip(coeffs, self.basis):
            if c % p:
                maps = [m + int(c) * bm for m, bm in zip(maps, b.maps)]
        return Morphism(self.source, self.target, maps)


def _hom_system(M: Representation, N: Representation) -> tuple[np.ndarray, list[int]]:
    A = M.algebra
    offsets = [0]
    for v in A.vertices:
        offsets.append(offsets[-1] + N.dim(v) * M.dim(v))
    rows = []
    for a in A.quiver.arrows:
        s, t = a.source, a.target
        ds, dt = M.dim(s), N.dim(t)
        if ds == 0 or dt == 0:
            continue
        eq = fm.zeros(dt * ds, offsets[-1])
        # N_a X_s - X_t M_a = 0, with X_v flattened row-major
        eq[:, offsets[s - 1]:offsets[s]] += np.kron(N.maps[a.name], fm.identity(ds))
        eq[:, offsets[t - 1]:offsets[t]] -= np.kron(fm.identity(dt), fm.transpose(M.maps[a.name]))
        rows.append(eq % M.p)
    system = np.vstack(rows) if rows else fm.zeros(0, offsets[-1])
    return system, offsets


def hom_basis(M: Representation, N: Representation) -> HomSpace:
    """Basis of ``Hom(M, N)`` from the nullspace of the commuting equations."""
    if M.algebra != N.algebra:
        raise ValueError("Hom between representations of different algebras")
    system, offsets = _hom_system(M, N)
    null = fm.nullspace(system, M.p)
    basis = []
    for j in range(null.shape[1]):
        vec = null[:, j]
        maps = [vec[offsets[k]:offsets[k + 1]].reshape(N.dims[k], M.dims[k]) for k in range(len(M.dims))]
        basis.append(Morphism(M, N, maps))
    return HomSpace(M, N, tuple(basis))


def hom_dim(M: Representation, N: Representation) -> int:
    system, offsets = _hom_system(M, N)
    return offsets[-1] - fm.rank(system, M.p)


def subrepresentation(M: Representation, bases: Sequence[np.ndarray]) -> tuple[Representation, Morphism]:
    """Submodule spanned vertexwise by the independent columns of ``bases``."""
    p = M.p
    maps = {}
    for a in M.algebra.quiver.arrows:
        Bs, Bt = bases[a.source - 1], bases[a.target - 1]
        maps[a.name] = fm.solve(Bt, (M.maps[a.name] @ Bs) % p, p)
    S = Representation(M.algebra, [b.shape[1] for b in bases], maps)
    return S, Morphism(S, M, list(bases))


def quotient_representation(M: Representation, bases: Sequence[np.ndarray]) -> tuple[Representation, Morphism]:
    """Quotient of ``M`` by the submodule spanned by ``bases``."""
    p = M.p
    comps = [fm.complement(B, p) for B in bases]
    maps = {}
    for a in M.algebra.quiver.arrows:
        Qs = comps[a.source - 1][0]
        pit = comps[a.target - 1][1]
        maps[a.name] = (pit @ M.maps[a.name] @ Qs) % p
    Q = Representation(M.algebra, [c[0].shape[1] for c in comps], maps)
    return Q, Morphism(M, Q, [c[1] for c in comps])


def kernel(f: Morphism) -> tuple[Representation, Morphism]:
    """Kernel of ``f`` with its inclusion into ``f.source``."""
    return subrepresentation(f.source, [fm.nullspace(m, f.p) for m in f.maps])


@dataclass(frozen=True)
class ImageCokernel:
    image: Representation
    cokernel: Representation
    onto_image: Morphism
    image_inclusion: Morphism
    quotient: Morphism


def image_and_cokernel(f: Morphism) -> ImageCokernel:
    p = f.p
    bases = [fm.column_space(m, p) for m in f.maps]
    image, incl = subrepresentation(f.target, bases)
    onto = Morphism(f.source, image, [fm.solve(B, m, p) for B, m in zip(bases, f.maps)])
    coker, quot = quotient_representation(f.target, bases)
    return ImageCokernel(image, coker, onto, incl, quot)


# --- isomorphism testing --------------------------------------------------------


@dataclass(frozen=True)
class IsoVerdict:
    """Outcome of :func:`is_isomorphic`.

    Positive verdicts always carry an invertible ``witness``; negative ones
    are ``certified`` only when an invariant differs or the whole hom space
    was searched.
    """

    isomorphic: bool
    certified: bool
    witness: Morphism | None = None
    method: str = ""

    def __bool__(self):
        return self.isomorphic


def _hom_tensors(H: HomSpace) -> list[np.ndarray]:
    d = H.dim
    out = []
    for k in range(len(H.source.dims)):
        shape = (d, H.target.dims[k], H.source.dims[k])
        T = np.zeros(shape, dtype=fm.DTYPE)
        for b, mor in enumerate(H.basis):
            T[b] = mor.maps[k]
        out.append(T)
    return out


def _first_invertible(tensors: list[np.ndarray], coeffs: np.ndarray, p: int) -> int | None:
    ok = np.ones(len(coeffs), dtype=bool)
    for T in tensors:
        if T.shape[1] == 0:
            continue
        mats = np.tensordot(coeffs, T, axes=(1, 0)) % p
        ok &= fm.batch_invertible(mats, p)
        if not ok.any():
            return None
    hits = np.nonzero(ok)[0]
    return int(hits[0]) if hits.size else None


def _search(H: HomSpace, seed: int, trials: int, exhaust_limit: int) -> tuple[Morphism | None, bool]:
    """Look for an invertible element of ``H``; second value says whether the search was exhaustive."""
    p, d = H.source.p, H.dim
    tensors = _hom_tensors(H)
    eye = np.eye(d, dtype=fm.DTYPE)
    pairs = [eye[i] + eye[j] for i in range(d) for j in range(i + 1, d)]
    candidates = np.vstack([eye] + ([np.array(pairs)] if pairs else []))
    hit = _first_invertible(tensors, candidates, p)
    if hit is not None:
        return H.combination(candidates[hit]), False
    rng = np.random.default_rng(seed)
    if trials > 0:
        candidates = rng.integers(0, p, size=(trials, d), dtype=fm.DTYPE)
        hit = _first_invertible(tensors, candidates, p)
        if hit is not None:
            return H.combination(candidates[hit]), False
    if p**d > exhaust_limit:
        return None, False
    powers = p ** np.arange(d, dtype=fm.DTYPE)
    total = p**d
    for start in range(0, total, _CHUNK):
        idx = np.arange(start, min(start + _CHUNK, total), dtype=fm.DTYPE)
        candidates = (idx[:, None] // powers[None, :]) % p
        hit = _first_invertible(tensors, candidates, p)
        if hit is not None:
            return H.combination(candidates[hit]), True
    return None, True


def is_isomorphic(
    M: Representation,
    N: Representation,
    *,
    seed: int = DEFAULT_SEED,
    trials: int = DEFAULT_TRIALS,
    exhaust_limit: int = EXHAUST_LIMIT,
) -> IsoVerdict:
    """Decide ``M ~= N`` by searching ``Hom(M, N)`` for a vertexwise-invertible element.

    The search tries basis elements and pairwise sums, then ``trials``
    seeded random combinations, then the whole space when it has at most
    ``exhaust_limit`` elements.  Before searching, the dimension vectors and
    the four hom-space dimensions between ``M`` and ``N`` are compared; any
    mismatch is a certified negative.
    """
    if M.algebra != N.algebra:
        raise ValueError("isomorphism test across different algebras")
    if M.dims != N.dims:
        return IsoVerdict(False, True, method="dimension vectors differ")
    if M.is_zero():
        return IsoVerdict(True, True, zero_morphism(M, N), method="zero")
    H = hom_basis(M, N)
    if H.dim == 0:
        return IsoVerdict(False, True, method="no nonzero morphisms")
    invariants = {hom_dim(M, M), hom_dim(N, N), hom_dim(N, M), H.dim}
    if len(invariants) > 1:
        return IsoVerdict(False, True, method="hom dimensions differ")
    witness, exhaustive = _search(H, seed, trials, exhaust_limit)
    if witness is not None:
        if not (witness.is_valid() and witness.is_iso()):
            raise AssertionError("isomorphism search returned an invalid witness")
        return IsoVerdict(True, True, witness, method="exhaustive" if exhaustive else "search")
    if exhaustive:
        return IsoVerdict(False, True, method="exhaustive")
    return IsoVerdict(False, False, method="random search")


# --- duality ------------------------------------------------------------------


def dual(M: Representation) -> Representation:
    """The k-linear dual ``D M``, a representation of the opposite algebra."""
    opp = opposite(M.algebra)
    maps = {a: fm.transpose(m) for a, m in M.maps.items()}
    name = f"D({M.name})" if M.name else ""
    if M.name.startswith("D(") and M.name.endswith(")"):
        name = M.name[2:-1]
    return Representation(opp, M.dims, maps, name=name)


def dual_morphism(f: Morphism) -> Morphism:
    """``D f : D target -> D source``."""
    return Morphism(dual(f.target), dual(f.source), [fm.transpose(m) for m in f.maps])


# --- projective summands ----------------------------------------------------------


@dataclass(frozen=True)
class StripResult:
    """``M ~= stable_part + projective_part`` with the isomorphism in both directions.

    ``assemble`` maps ``direct_sum([stable_part, projective_part])`` onto
    ``M`` and ``split`` is its inverse.
    """

    stable_part: Representation
    projective_part: Representation
    projective_vertices: tuple[int, ...]
    assemble: Morphism
    split: Morphism


def _find_split(current: Representation, v: int) -> tuple[Morphism, Morphism] | None:
    """A pair ``f: P_v -> current``, ``g: current -> P_v`` with ``g o f`` invertible."""
    A = current.algebra
    P = projective_module(A, [v])
    G = hom_basis(current, P.module)
    gen = P.generators[0]
    for g in G:
        row = g.at(v)[gen]
        nz = np.nonzero(row)[0]
        if nz.size == 0:
            continue
        image = np.zeros(current.dim(v), dtype=fm.DTYPE)
        image[nz[0]] = 1
        f = morphism_from_generators(P, current, [image])
        if (g @ f).is_iso():
            return f, g
    return None


def strip_projective_summands(M: Representation) -> StripResult:
    """Split off indecomposable projective summands until none is left."""
    A, p = M.algebra, M.p
    current = M
    incl = identity_morphism(M)
    pieces: list[tuple[int, Morphism]] = []
    found = True
    while found:
        found = False
        for v in A.vertices:
            if current.dim(v) == 0:
                continue
            pair = _find_split(current, v)
            if pair is None:
                continue
            f, g = pair
            u = g @ f
            g = u.inverse() @ g
            K, k = kernel(g)
            pieces.append((v, incl @ f))
            incl = incl @ k
            current = K
            found = True
            break
    verts = tuple(v for v, _ in pieces)
    proj = projective_module(A, verts).module
    total = direct_sum([current, proj]).module
    blocks = [incl.maps] + [f.maps for _, f in pieces]
    assemble = Morphism(total, M, [np.hstack([b[k] for b in blocks]) if blocks else fm.zeros(M.dims[k], 0)
                                   for k in range(A.vertex_count)])
    split = assemble.inverse()
    return StripResult(current, proj, verts, assemble, split)


def is_projective(M: Representation) -> bool:
    return strip_projective_summands(M).stable_part.is_zero()


# --- sampling -------------------------------------------------------------------


def random_representation(A: MonomialAlgebra, dims: Sequence[int], rng: np.random.Generator) -> Representation:
    """A random representation with dimension vector ``dims``.

    Arrow maps are drawn one at a time; each relation becomes a linear
    condition on the last of its arrows to be drawn, so every draw is
    uniform on the maps compatible with those already chosen.
    """
    p = A.p
    dims = tuple(dims)
    order = {a.name: k for k, a in enumerate(A.quiver.arrows)}
    maps: dict[str, np.ndarray] = {}

    def dim(v):
        return dims[v - 1]

    for a in A.quiver.arrows:
        rows, cols = dim(a.target), dim(a.source)
        eqs = []
        nonlinear = False
        for rel in A.relations:
            if a.name not in rel or max(order[b] for b in rel) != order[a.name]:
                continue
            if rel.count(a.name) > 1:
                nonlinear = True
                continue
            m = rel.index(a.name)
            before, after = rel[:m], rel[m + 1:]
            C = fm.identity(cols) if not before else _chain(maps, before, A, dims)
            B = fm.identity(rows) if not after else _chain(maps, after, A, dims)
            eqs.append(np.kron(B, fm.transpose(C)) % p)
        if eqs:
            null = fm.nullspace(np.vstack(eqs), p)
            coeffs = rng.integers(0, p, size=null.shape[1], dtype=fm.DTYPE)
            X = ((null @ coeffs) % p).reshape(rows, cols)
        else:
            X = rng.integers(0, p, size=(rows, cols), dtype=fm.DTYPE)
        if nonlinear:
            maps[a.name] = X
            trial = Representation(A, dims, {**maps})
            if any(a.name in r and np.any(trial.composite(r)) for r in A.relations
                   if max(order[b] for b in r) <= order[a.name]):
                X = fm.zeros(rows, cols)
        maps[a.name] = X
    return Representation(A, dims, maps)


def _chain(maps, arrows, A, dims) -> np.ndarray:
    first = A.quiver.arrow[arrows[0]]
    out = fm.identity(dims[first.source - 1])
    for b in arrows:
        out = (maps[b] @ out) % A.p
    return out
