"""Minimal projective resolutions, syzygies, Ext and complexity."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import fieldmat as fm
from .algebra import regular_module
from .rep import (
    DEFAULT_SEED,
    FreeModule,
    Morphism,
    Representation,
    dual,
    hom_basis,
    is_isomorphic,
    kernel,
    morphism_from_generators,
    projective_module,
    quotient_representation,
    subrepresentation,
)


@dataclass(frozen=True)
class RadicalTop:
    radical: Representation
    inclusion: Morphism
    top: Representation
    quotient: Morphism


def radical_and_top(M: Representation) -> RadicalTop:
    """``rad M`` as the span of all arrow images, and ``top M = M / rad M``."""
    p = M.p
    bases = []
    for v in M.algebra.vertices:
        incoming = [M.maps[a.name] for a in M.algebra.quiver.incoming(v)]
        span = np.hstack(incoming) if incoming else fm.zeros(M.dim(v), 0)
        bases.append(fm.column_space(span, p))
    rad, incl = subrepresentation(M, bases)
    top, quot = quotient_representation(M, bases)
    return RadicalTop(rad, incl, top, quot)


@dataclass(frozen=True)
class ProjectiveCover:
    free: FreeModule
    cover: Morphism

    @property
    def module(self) -> Representation:
        return self.free.module

    @property
    def vertices(self) -> tuple[int, ...]:
        return self.free.vertices


def projective_cover(M: Representation) -> ProjectiveCover:
    """Minimal surjection ``P -> M``; ``P`` has one summand ``P_v`` per copy of ``S_v`` in the top."""
    p = M.p
    images, vertices = [], []
    for v in M.algebra.vertices:
        incoming = [M.maps[a.name] for a in M.algebra.quiver.incoming(v)]
        span = np.hstack(incoming) if incoming else fm.zeros(M.dim(v), 0)
        lifts, _ = fm.complement(fm.column_space(span, p), p)
        for k in range(lifts.shape[1]):
            vertices.append(v)
            images.append(lifts[:, k])
    free = projective_module(M.algebra, vertices)
    return ProjectiveCover(free, morphism_from_generators(free, M, images))


def syzygy(M: Representation) -> Representation:
    """First syzygy: the kernel of the projective cover."""
    return kernel(projective_cover(M).cover)[0]


class Resolution:
    """A minimal projective resolution of ``module``, extended on demand.

    ``term(k)`` is ``P_k`` (a :class:`FreeModule`), ``syzygy(k)`` is the
    ``k``-th syzygy (``syzygy(0)`` is the module itself) and ``boundary(k)``
    is ``P_k -> P_{k-1}`` for ``k >= 1`` and the cover ``P_0 -> M`` for
    ``k == 0``.  Once a syzygy vanishes the resolution is finished and
    ``projective_dimension`` is set; later terms are zero.
    """

    def __init__(self, module: Representation, horizon: int = 0):
        self.module = module
        self.algebra = module.algebra
        self._terms: list[FreeModule] = []
        self._covers: list[Morphism] = []
        self._syzygies: list[Representation] = [module]
        self._inclusions: list[Morphism | None] = [None]
        self.projective_dimension: int | None = 0 if module.is_zero() else None
        self.extend(horizon)

    @property
    def horizon(self) -> int:
        """Number of projective terms computed so far."""
        return len(self._terms)

    @property
    def finished(self) -> bool:
        return self.projective_dimension is not None

    def extend(self, horizon: int) -> Resolution:
        while len(self._terms) < horizon:
            last = self._syzygies[-1]
            cov = projective_cover(last)
            K, incl = kernel(cov.cover)
            self._terms.append(cov.free)
            self._covers.append(cov.cover)
            self._syzygies.append(K)
            self._inclusions.append(incl)
            if K.is_zero() and self.projective_dimension is None:
                self.projective_dimension = len(self._terms) - 1
        return self

    def term(self, k: int) -> FreeModule:
        self.extend(k + 1)
        return self._terms[k]

    def term_vertices(self, k: int) -> tuple[int, ...]:
        return self.term(k).vertices

    def syzygy(self, k: int) -> Representation:
        self.extend(k)
        return self._syzygies[k]

    def inclusion(self, k: int) -> Morphism:
        """``syzygy(k) -> P_{k-1}`` for ``k >= 1``."""
        if k < 1:
            raise ValueError("syzygy inclusions start at degree 1")
        self.extend(k)
        return self._inclusions[k]

    def cover(self, k: int) -> Morphism:
        """``P_k -> syzygy(k)``."""
        self.extend(k + 1)
        return self._covers[k]

    def boundary(self, k: int) -> Morphism:
        if k == 0:
            return self.cover(0)
        return self.inclusion(k) @ self.cover(k)

    def dims_sequence(self, horizon: int | None = None) -> list[int]:
        h = self.horizon if horizon is None else horizon
        return [self.term(k).module.total_dim for k in range(h)]

    def __repr__(self):
        terms = " ".join("+".join(f"P{v}" for v in t.vertices) or "0" for t in self._terms)
        return f"<Resolution of {self.module.dims}: {terms}>"


def min_resolution(M: Representation, horizon: int) -> Resolution:
    if horizon < 1:
        raise ValueError(f"horizon must be positive, got {horizon}")
    return Resolution(M, horizon)


# --- Ext ------------------------------------------------------------------------


def cochain_matrix(res: Resolution, k: int, N: Representation) -> np.ndarray:
    """Matrix of ``Hom(d_k, N): Hom(P_{k-1}, N) -> Hom(P_k, N)`` for ``k >= 1``.

    A morphism out of a free module is recorded by the images of its
    generators, so ``Hom(P, N)`` has coordinates ``+_j N_{v_j}``.
    """
    p = N.p
    source, target = res.term(k - 1), res.term(k)
    d = res.boundary(k)
    col_off = np.cumsum([0] + [N.dim(v) for v in source.vertices])
    row_off = np.cumsum([0] + [N.dim(v) for v in target.vertices])
    D = fm.zeros(int(row_off[-1]), int(col_off[-1]))
    for jj, w in enumerate(target.vertices):
        image = d.at(w)[:, target.generators[jj]]
        for idx in np.nonzero(image)[0]:
            j, path = source.labels[w - 1][idx]
            block = (int(image[idx]) * N.path_matrix(path)) % p
            D[row_off[jj]:row_off[jj + 1], col_off[j]:col_off[j + 1]] += block
    return D % p


def hom_dim_from_free(free: FreeModule, N: Representation) -> int:
    return sum(N.dim(v) for v in free.vertices)


def ext_dim(M: Representation, N: Representation, i: int, *, resolution: Resolution | None = None) -> int:
    """``dim Ext^i(M, N)`` as cohomology of ``Hom(P_*, N)``."""
    if i < 1:
        raise ValueError(f"Ext degree must be at least 1, got {i}")
    if M.algebra != N.algebra:
        raise ValueError("Ext between representations of different algebras")
    res = resolution if resolution is not None else Resolution(M)
    res.extend(i + 2)
    p = N.p
    cochains = hom_dim_from_free(res.term(i), N)
    if cochains == 0:
        return 0
    out_rank = fm.rank(cochain_matrix(res, i + 1, N), p)
    in_rank = fm.rank(cochain_matrix(res, i, N), p)
    return cochains - out_rank - in_rank


def ext_dim_by_hom_spaces(M: Representation, N: Representation, i: int, *,
                          resolution: Resolution | None = None) -> int:
    """Slow cross-check of :func:`ext_dim` built on generic hom-space bases.

    ``Hom(d, N)`` is evaluated by composing every basis morphism with the
    boundary and taking the rank of the flattened composites.
    """
    if i < 1:
        raise ValueError(f"Ext degree must be at least 1, got {i}")
    res = resolution if resolution is not None else Resolution(M)
    res.extend(i + 2)

    def induced_rank(k):
        d = res.boundary(k)
        images = [(f @ d).flatten() for f in hom_basis(d.target, N)]
        return fm.rank(np.column_stack(images), N.p) if images else 0

    return hom_basis(res.term(i).module, N).dim - induced_rank(i + 1) - induced_rank(i)


def ext_dims(M: Representation, N: Representation, degrees, *, resolution: Resolution | None = None) -> dict[int, int]:
    res = resolution if resolution is not None else Resolution(M)
    return {i: ext_dim(M, N, i, resolution=res) for i in degrees}


def first_nonvanishing_ext_against_regular(M: Representation, h: int, *, resolution: Resolution | None = None) -> int | None:
    """Smallest ``1 <= j <= h`` with ``Ext^j(M, A) != 0``, or ``None``."""
    R = regular_module(M.algebra)
    res = resolution if resolution is not None else Resolution(M)
    for j in range(1, h + 1):
        if res.finished and j > res.projective_dimension:
            return None
        if ext_dim(M, R, j, resolution=res):
            return j
    return None


def ext_vanishes_against_regular(M: Representation, h: int, *, resolution: Resolution | None = None) -> bool:
    """Bounded check that ``Ext^j(M, A) = 0`` for ``1 <= j <= h``."""
    if h < 1:
        raise ValueError(f"horizon must be positive, got {h}")
    return first_nonvanishing_ext_against_regular(M, h, resolution=resolution) is None


# --- injective coresolutions ------------------------------------------------------


class Coresolution:
    """Minimal injective coresolution of ``module``, obtained by dualising a
    projective resolution of ``D module`` over the opposite algebra.

    ``term_vertices(k)`` lists the indecomposable injectives ``I^v`` in
    degree ``k``; ``cosyzygy(k)`` is the ``k``-th cosyzygy.
    """

    def __init__(self, module: Representation, horizon: int = 0):
        self.module = module
        self.dual_resolution = Resolution(dual(module), horizon)

    @property
    def horizon(self) -> int:
        return self.dual_resolution.horizon

    @property
    def injective_dimension(self) -> int | None:
        return self.dual_resolution.projective_dimension

    def extend(self, horizon: int) -> Coresolution:
        self.dual_resolution.extend(horizon)
        return self

    def term_vertices(self, k: int) -> tuple[int, ...]:
        return self.dual_resolution.term_vertices(k)

    def term(self, k: int) -> Representation:
        return dual(self.dual_resolution.term(k).module)

    def cosyzygy(self, k: int) -> Representation:
        return dual(self.dual_resolution.syzygy(k))

    def dims_sequence(self, horizon: int | None = None) -> list[int]:
        return self.dual_resolution.dims_sequence(horizon)


def injective_coresolution(M: Representation, horizon: int) -> Coresolution:
    return Coresolution(M, horizon)


def cosyzygy(M: Representation) -> Representation:
    return dual(syzygy(dual(M)))


# --- complexity -----------------------------------------------------------------


@dataclass(frozen=True)
class ComplexityEstimate:
    """Growth of the terms of a minimal resolution.

    ``classification`` is one of ``finite_projective_dimension``,
    ``bounded``, ``growth`` or ``inconclusive``.  Only the first two can be
    ``certified``; ``exponent`` is then the exact complexity (0 or 1).
    """

    dims_sequence: tuple[int, ...]
    classification: str
    certified: bool
    period: int | None = None
    exponent: float | None = None
    witness: Morphism | None = field(default=None, repr=False)

    def to_dict(self) -> dict:
        return {
            "dims_sequence": list(self.dims_sequence),
            "classification": self.classification,
            "certified": self.certified,
            "period": self.period,
            "exponent": self.exponent,
        }


def complexity_estimate(M: Representation, horizon: int, *, seed: int = DEFAULT_SEED,
                        resolution: Resolution | None = None) -> ComplexityEstimate:
    if horizon < 4:
        raise ValueError(f"complexity needs a horizon of at least 4, got {horizon}")
    res = resolution if resolution is not None else Resolution(M)
    res.extend(horizon)
    dims = tuple(res.dims_sequence(horizon))
    if res.finished:
        return ComplexityEstimate(dims, "finite_projective_dimension", True, exponent=0)
    for d in range(1, horizon + 1):
        Od = res.syzygy(d)
        for e in range(d - 1, -1, -1):
            Oe = res.syzygy(e)
            if Oe.dims != Od.dims:
                continue
            verdict = is_isomorphic(Od, Oe, seed=seed)
            if verdict.isomorphic:
                return ComplexityEstimate(dims, "bounded", True, period=d - e, exponent=1,
                                          witness=verdict.witness)
    degrees = [k for k in range(1, len(dims)) if dims[k] > 0]
    if len(degrees) < 2:
        return ComplexityEstimate(dims, "inconclusive", False)
    slope = float(np.polyfit(np.log(degrees), np.log([dims[k] for k in degrees]), 1)[0])
    half = len(dims) // 2
    if max(dims[half:]) <= max(dims[:half]):
        return ComplexityEstimate(dims, "inconclusive", False, exponent=round(slope + 1, 3))
    return ComplexityEstimate(dims, "growth", False, exponent=round(slope + 1, 3))
