"""Detection of n-strongly Gorenstein projective, injective and flat modules.

A finitely generated module ``M`` is decided on its part ``M_`` without
projective summands: ``M`` is n-SG-projective exactly when ``Omega^n M_`` is
isomorphic to ``M_`` and ``Hom(-, projective)`` keeps the defining sequence
exact.  Over a self-injective algebra the second condition is automatic;
elsewhere it is replaced by vanishing of ``Ext^i(M_, A)``, checked up to a
horizon that the verdict records.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from .algebra import MonomialAlgebra, indecomposable_injective, indecomposable_projective, is_self_injective
from .rep import (
    DEFAULT_SEED,
    Morphism,
    Representation,
    direct_sum,
    dual,
    is_isomorphic,
    random_representation,
    simple,
    strip_projective_summands,
    StripResult,
    zero_morphism,
)
from .resolution import (
    Resolution,
    ext_dim,
    ext_dim_by_hom_spaces,
    first_nonvanishing_ext_against_regular,
    syzygy,
)


class InvariantViolation(RuntimeError):
    """Certified data contradicts a structural theorem; indicates a bug."""


class UncertifiedInput(ValueError):
    """An operation needing a certified n-SG-projective input got something else."""


class Flavor(str, Enum):
    PROJECTIVE = "projective"
    INJECTIVE = "injective"
    FLAT = "flat"


class Outcome(str, Enum):
    CERTIFIED_YES = "certified_yes"
    CERTIFIED_NO = "certified_no"
    BOUNDED_NO = "bounded_no"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class SGVerdict:
    """Answer to "is M n-SG-<kind>?".

    ``witness`` is an isomorphism ``Omega^n M_ -> M_`` for positive answers;
    ``failed_degree`` is the first ``i`` with ``Ext^i(M_, A) != 0`` when that
    is why the answer is negative.
    """

    kind: Flavor
    n: int
    outcome: Outcome
    witness: Morphism | None = field(default=None, repr=False)
    failed_degree: int | None = None
    assumptions: tuple[str, ...] = ()

    @property
    def is_yes(self) -> bool:
        return self.outcome is Outcome.CERTIFIED_YES

    @property
    def certified(self) -> bool:
        return self.outcome in (Outcome.CERTIFIED_YES, Outcome.CERTIFIED_NO)

    def relabel(self, kind: Flavor, *extra: str) -> SGVerdict:
        return SGVerdict(kind, self.n, self.outcome, self.witness, self.failed_degree, self.assumptions + extra)

    def to_dict(self) -> dict:
        return {
            "kind": self.kind.value,
            "n": self.n,
            "outcome": self.outcome.value,
            "assumptions": list(self.assumptions),
            "witness_present": self.witness is not None,
            "failed_degree": self.failed_degree,
        }


def default_ext_horizon(A: MonomialAlgebra) -> int:
    return 2 * A.dimension


class _Detector:
    """Shared state for deciding several ``n`` on one module."""

    def __init__(self, M: Representation, *, seed: int = DEFAULT_SEED, ext_horizon: int | None = None):
        self.module = M
        self.seed = seed
        self.strip: StripResult = strip_projective_summands(M)
        self.stable = self.strip.stable_part
        self.resolution = Resolution(self.stable)
        self.self_injective = is_self_injective(M.algebra, seed=seed)
        self.ext_horizon = ext_horizon or default_ext_horizon(M.algebra)
        self._ext_failures: dict[int, int | None] = {}

    def ext_failure(self, h: int) -> int | None:
        if h not in self._ext_failures:
            self._ext_failures[h] = first_nonvanishing_ext_against_regular(
                self.stable, h, resolution=self.resolution)
        return self._ext_failures[h]

    def decide(self, n: int) -> SGVerdict:
        if n < 1:
            raise ValueError(f"n must be positive, got {n}")
        kind = Flavor.PROJECTIVE
        if self.stable.is_zero():
            return SGVerdict(kind, n, Outcome.CERTIFIED_YES, zero_morphism(self.stable, self.stable),
                             assumptions=("module is projective",))
        omega = self.resolution.syzygy(n)
        iso = is_isomorphic(omega, self.stable, seed=self.seed)
        if self.self_injective:
            notes = ("algebra certified self-injective",)
            if iso.isomorphic:
                return SGVerdict(kind, n, Outcome.CERTIFIED_YES, iso.witness, assumptions=notes)
            if iso.certified:
                return SGVerdict(kind, n, Outcome.CERTIFIED_NO, assumptions=notes + (f"non-isomorphism: {iso.method}",))
            return SGVerdict(kind, n, Outcome.UNKNOWN, assumptions=notes + ("isomorphism search inconclusive",))
        notes = ("algebra not certified self-injective",)
        if not iso.isomorphic:
            outcome = Outcome.BOUNDED_NO if iso.certified else Outcome.UNKNOWN
            return SGVerdict(kind, n, outcome, assumptions=notes + (f"syzygy comparison: {iso.method}",))
        h = max(self.ext_horizon, n)
        failed = self.ext_failure(h)
        if failed is not None:
            return SGVerdict(kind, n, Outcome.BOUNDED_NO, failed_degree=failed,
                             assumptions=notes + (f"Ext^{failed}(M, A) != 0",))
        return SGVerdict(kind, n, Outcome.CERTIFIED_YES, iso.witness,
                         assumptions=notes + (f"Ext^i(M, A) = 0 checked for 1 <= i <= {h}",))


def is_n_sg_projective(M: Representation, n: int, *, seed: int = DEFAULT_SEED,
                       ext_horizon: int | None = None) -> SGVerdict:
    return _Detector(M, seed=seed, ext_horizon=ext_horizon).decide(n)


def is_n_sg_injective(M: Representation, n: int, *, seed: int = DEFAULT_SEED,
                      ext_horizon: int | None = None) -> SGVerdict:
    """Decided as n-SG-projectivity of ``D M`` over the opposite algebra."""
    verdict = is_n_sg_projective(dual(M), n, seed=seed, ext_horizon=ext_horizon)
    return verdict.relabel(Flavor.INJECTIVE, "decided on the dual module over the opposite algebra")


def is_n_sg_flat(M: Representation, n: int, *, seed: int = DEFAULT_SEED,
                 ext_horizon: int | None = None) -> SGVerdict:
    verdict = is_n_sg_projective(M, n, seed=seed, ext_horizon=ext_horizon)
    if is_self_injective(M.algebra, seed=seed):
        return verdict.relabel(Flavor.FLAT, "self-injective: flat and projective flavours coincide")
    if verdict.is_yes:
        return verdict.relabel(Flavor.FLAT, "finitely generated n-SG-projective implies n-SG-flat")
    return SGVerdict(Flavor.FLAT, n, Outcome.UNKNOWN,
                     assumptions=verdict.assumptions + ("converse direction is not decided",))


# --- period sets ---------------------------------------------------------------


def euclid_chain(m: int, n: int) -> list[int]:
    """Successive remainders ``m, n, j_0, j_1, ...`` ending in ``gcd(m, n)``."""
    chain = [m, n]
    while chain[-1]:
        chain.append(chain[-2] % chain[-1])
    chain.pop()
    return chain


@dataclass(frozen=True)
class PeriodSet:
    horizon: int
    verdicts: dict[int, SGVerdict]

    @property
    def members(self) -> list[int]:
        return sorted(n for n, v in self.verdicts.items() if v.is_yes)

    @property
    def all_certified(self) -> bool:
        return all(v.certified for v in self.verdicts.values())

    def closure_violations(self) -> list[str]:
        """Closure under multiples, gcd and consecutive pairs, on certified members."""
        members = set(self.members)
        out = []

        def refuted(k):
            v = self.verdicts.get(k)
            return v is not None and not v.is_yes and v.outcome is not Outcome.UNKNOWN

        for n in members:
            for k in range(2 * n, self.horizon + 1, n):
                if refuted(k):
                    out.append(f"{n} is a period but its multiple {k} is not")
        for m in members:
            for n in members:
                if m < n:
                    g = math.gcd(m, n)
                    if refuted(g):
                        chain = " -> ".join(map(str, euclid_chain(n, m)))
                        out.append(f"{m} and {n} are periods but gcd {g} is not (remainders {chain})")
                    if n == m + 1 and refuted(1):
                        out.append(f"consecutive periods {m}, {n} but 1 is not a period")
        return out

    def to_dict(self) -> dict:
        return {
            "horizon": self.horizon,
            "members": self.members,
            "all_certified": self.all_certified,
            "verdicts": {str(n): v.to_dict() for n, v in sorted(self.verdicts.items())},
        }


def sg_projective_period_set(M: Representation, horizon: int, *, seed: int = DEFAULT_SEED,
                             ext_horizon: int | None = None) -> PeriodSet:
    if horizon < 1:
        raise ValueError(f"horizon must be positive, got {horizon}")
    det = _Detector(M, seed=seed, ext_horizon=ext_horizon)
    result = PeriodSet(horizon, {n: det.decide(n) for n in range(1, horizon + 1)})
    problems = result.closure_violations()
    if problems:
        raise InvariantViolation("; ".join(problems))
    return result


# --- syzygy cycle sums ---------------------------------------------------------------


@dataclass(frozen=True)
class CycleSum:
    """``0 -> T -> Q -> T -> 0`` with ``T = Omega^1 M_ + ... + Omega^n M_`` and ``Q`` projective."""

    module: Representation
    middle: Representation
    inclusion: Morphism
    projection: Morphism
    self_iso: Morphism = field(repr=False)
    n: int = 1


def syzygy_cycle_sum(M: Representation, n: int, *, seed: int = DEFAULT_SEED,
                     ext_horizon: int | None = None) -> CycleSum:
    """Build the 1-SG-projective sum of the first ``n`` syzygies of an n-SG-projective module."""
    det = _Detector(M, seed=seed, ext_horizon=ext_horizon)
    verdict = det.decide(n)
    if not verdict.is_yes:
        raise UncertifiedInput(f"module is not certified {n}-SG-projective ({verdict.outcome.value})")
    res = det.resolution
    shifted = direct_sum([res.syzygy(i) for i in range(1, n + 1)])      # Omega^1 .. Omega^n
    unshifted = direct_sum([res.syzygy(i) for i in range(0, n)])        # Omega^0 .. Omega^{n-1}
    middle = direct_sum([res.term(i).module for i in range(0, n)])      # P_0 .. P_{n-1}
    T, Q = shifted.module, middle.module

    inclusion = _block_sum(T, Q, [middle.injections[i - 1] @ res.inclusion(i) @ shifted.projections[i - 1]
                                  for i in range(1, n + 1)])
    covers = _block_sum(Q, unshifted.module, [unshifted.injections[i] @ res.cover(i) @ middle.projections[i]
                                              for i in range(n)])
    # Omega^i stays in place for 1 <= i < n, Omega^n goes to Omega^0 through the witness
    pieces = [unshifted.injections[i] @ shifted.projections[i - 1] for i in range(1, n)]
    pieces.append(unshifted.injections[0] @ verdict.witness @ shifted.projections[n - 1])
    relabel = _block_sum(T, unshifted.module, pieces)
    projection = relabel.inverse() @ covers

    _check_short_exact(inclusion, projection)
    iso = is_isomorphic(syzygy(T), T, seed=seed)
    if not iso.isomorphic:
        raise InvariantViolation("syzygy of the cycle sum is not isomorphic to it")
    return CycleSum(T, Q, inclusion, projection, iso.witness, n)


def _block_sum(source: Representation, target: Representation, parts: list[Morphism]) -> Morphism:
    out = zero_morphism(source, target)
    for f in parts:
        out = out + f
    return out


def _check_short_exact(f: Morphism, g: Morphism) -> None:
    if not (f.is_valid() and g.is_valid()):
        raise InvariantViolation("cycle-sum maps are not module homomorphisms")
    if not (g @ f).is_zero():
        raise InvariantViolation("cycle-sum sequence is not a complex")
    if f.rank() != f.source.total_dim or g.rank() != g.target.total_dim:
        raise InvariantViolation("cycle-sum sequence is not exact at the ends")
    if f.source.total_dim + g.target.total_dim != f.target.total_dim:
        raise InvariantViolation("cycle-sum sequence is not exact in the middle")


# --- self-orthogonality ---------------------------------------------------------


@dataclass(frozen=True)
class SelfExtReport:
    n: int
    ext_dims: dict[int, int]
    projective: bool
    projective_by_stripping: bool

    def to_dict(self) -> dict:
        return {"n": self.n, "ext_dims": {str(k): v for k, v in self.ext_dims.items()},
                "projective": self.projective, "projective_by_stripping": self.projective_by_stripping}


def projectivity_via_self_ext(M: Representation, n: int, *, seed: int = DEFAULT_SEED,
                              ext_horizon: int | None = None) -> SelfExtReport:
    """For certified n-SG-projective ``M``: projective iff ``Ext^i(M, M) = 0`` for ``1 <= i <= n``."""
    det = _Detector(M, seed=seed, ext_horizon=ext_horizon)
    verdict = det.decide(n)
    if not verdict.is_yes:
        raise UncertifiedInput(f"module is not certified {n}-SG-projective ({verdict.outcome.value})")
    res = Resolution(M)
    dims = {i: ext_dim(M, M, i, resolution=res) for i in range(1, n + 1)}
    projective = not any(dims.values())
    by_strip = det.stable.is_zero()
    if projective != by_strip:
        raise InvariantViolation(
            f"self-Ext test says projective={projective} but stripping says {by_strip}")
    return SelfExtReport(n, dims, projective, by_strip)


# --- instance-level verification -----------------------------------------------------


@dataclass
class TheoremCheck:
    name: str
    status: str = "pass"       # pass | fail | skipped
    checked: int = 0
    details: list[str] = field(default_factory=list)

    def fail(self, message: str) -> None:
        self.status = "fail"
        self.details.append(message)

    def to_dict(self) -> dict:
        return {"name": self.name, "status": self.status, "checked": self.checked, "details": self.details}


@dataclass
class SuiteReport:
    algebra: str
    horizon: int
    seed: int
    checks: list[TheoremCheck]

    @property
    def passed(self) -> bool:
        return all(c.status != "fail" for c in self.checks)

    def to_dict(self) -> dict:
        return {"algebra": self.algebra, "horizon": self.horizon, "seed": self.seed,
                "passed": self.passed, "checks": [c.to_dict() for c in self.checks]}


def cyclic_order(A: MonomialAlgebra) -> int | None:
    """``n`` if ``A`` is the cyclic quiver on ``n >= 2`` vertices with all length-two paths zero."""
    n = A.vertex_count
    arrows = A.quiver.arrows
    if n < 2 or len(arrows) != n:
        return None
    succ = {}
    for a in arrows:
        if a.source in succ:
            return None
        succ[a.source] = a
    if set(succ) != set(A.vertices):
        return None
    v, seen = 1, set()
    while v not in seen:
        seen.add(v)
        v = succ[v].target
    if len(seen) != n or v != 1:
        return None
    expected = {(succ[v].name, succ[succ[v].target].name) for v in A.vertices}
    return n if set(A.relations) == expected else None


def _module_pool(A: MonomialAlgebra, seed: int, random_count: int = 4) -> list[tuple[str, Representation]]:
    pool = [(f"S{i}", simple(A, i)) for i in A.vertices]
    pool += [(f"P{i}", indecomposable_projective(A, i)) for i in A.vertices]
    pool += [(f"I{i}", indecomposable_injective(A, i)) for i in A.vertices]
    pool.append(("sum of simples", direct_sum([simple(A, i) for i in A.vertices]).module))
    rng = np.random.default_rng(seed)
    for k in range(random_count):
        dims = rng.multinomial(int(rng.integers(1, 5)), [1 / A.vertex_count] * A.vertex_count)
        pool.append((f"random{k} {tuple(int(d) for d in dims)}", random_representation(A, dims, rng)))
    return pool


def verify_theorem_suite(A: MonomialAlgebra, horizon: int, *, seed: int = DEFAULT_SEED) -> SuiteReport:
    """Run the structural checks on modules over ``A`` up to period ``horizon``."""
    if horizon < 1:
        raise ValueError(f"horizon must be positive, got {horizon}")
    pool = _module_pool(A, seed)
    detectors = {name: _Detector(M, seed=seed) for name, M in pool}
    periods = {}
    checks = []

    closure = TheoremCheck("period_set_closure")
    for name, det in detectors.items():
        ps = PeriodSet(horizon, {n: det.decide(n) for n in range(1, horizon + 1)})
        periods[name] = ps
        closure.checked += 1
        for problem in ps.closure_violations():
            closure.fail(f"{name}: {problem}")
    checks.append(closure)

    sums = TheoremCheck("direct_sum_closure")
    names = list(detectors)
    for a_idx, a in enumerate(names):
        for b in names[a_idx:a_idx + 3]:
            common = sorted(set(periods[a].members) & set(periods[b].members))
            if not common:
                continue
            n = common[0]
            M = direct_sum([dict(pool)[a], dict(pool)[b]]).module
            verdict = is_n_sg_projective(M, n, seed=seed)
            sums.checked += 1
            if not verdict.is_yes:
                sums.fail(f"{a} + {b} not certified {n}-SG-projective ({verdict.outcome.value})")
    checks.append(sums)

    stripping = TheoremCheck("projective_summand_invariance")
    for name, M in pool:
        for v in A.vertices:
            M2 = direct_sum([M, indecomposable_projective(A, v)]).module
            det2 = _Detector(M2, seed=seed)
            for n in range(1, min(horizon, 3) + 1):
                stripping.checked += 1
                left, right = detectors[name].decide(n).outcome, det2.decide(n).outcome
                if left is not right:
                    stripping.fail(f"{name} vs {name} + P{v} at n={n}: {left.value} != {right.value}")
    checks.append(stripping)

    finite = TheoremCheck("finite_type_periodicity")
    order = cyclic_order(A)
    if A.vertex_count == 1 and not A.quiver.arrows:
        order = 1
    if order is None:
        finite.status = "skipped"
        finite.details.append("indecomposables are only known explicitly for the cyclic algebra")
    else:
        for name in [f"S{i}" for i in A.vertices] + [f"P{i}" for i in A.vertices]:
            finite.checked += 1
            found = [n for n in range(1, order + 1) if detectors[name].decide(n).is_yes]
            if not found:
                finite.fail(f"{name} is not certified n-SG-projective for any n <= {order}")
    checks.append(finite)

    duality = TheoremCheck("character_module_duality")
    for name, M in pool:
        duality.checked += 1
        back = dual(dual(M))
        if back.algebra != A or not is_isomorphic(back, M, seed=seed).isomorphic:
            duality.fail(f"{name}: double dual is not isomorphic to the module")
        members = periods[name].members
        if not members:
            continue
        n = members[0]
        flat = is_n_sg_flat(M, n, seed=seed)
        if flat.is_yes:
            inj = is_n_sg_injective(dual(M), n, seed=seed)
            if not inj.is_yes:
                duality.fail(f"{name} is {n}-SG-flat but its dual is not certified {n}-SG-injective")
    checks.append(duality)

    cycles = TheoremCheck("syzygy_cycle_sum")
    for name, M in pool:
        members = periods[name].members
        if not members:
            continue
        try:
            syzygy_cycle_sum(M, members[0], seed=seed)
            cycles.checked += 1
        except (InvariantViolation, UncertifiedInput) as exc:
            cycles.fail(f"{name}: {exc}")
    checks.append(cycles)

    orth = TheoremCheck("self_orthogonality")
    for name, M in pool:
        members = periods[name].members
        if not members:
            continue
        orth.checked += 1
        try:
            projectivity_via_self_ext(M, members[0], seed=seed)
        except InvariantViolation as exc:
            orth.fail(f"{name}: {exc}")
    checks.append(orth)

    oracle = TheoremCheck("ext_oracle_agreement")
    for name, M in pool:
        res = Resolution(M)
        for N_name, N in pool[:2 * A.vertex_count]:
            for i in range(1, min(horizon, 4) + 1):
                oracle.checked += 1
                fast, slow = ext_dim(M, N, i, resolution=res), ext_dim_by_hom_spaces(M, N, i, resolution=res)
                if fast != slow:
                    oracle.fail(f"Ext^{i}({name}, {N_name}): cochains give {fast}, hom spaces give {slow}")
    checks.append(oracle)

    checks.extend(_cyclic_checks(A, order, horizon, seed))
    label = A.name or repr(A)
    return SuiteReport(label, horizon, seed, checks)


def _cyclic_checks(A: MonomialAlgebra, order: int | None, horizon: int, seed: int) -> list[TheoremCheck]:
    """Resolution shape, Ext pattern and period sets of the simples over the cyclic algebra."""
    names = ("cyclic_simple_resolutions", "cyclic_simple_ext_pattern", "cyclic_simple_period_sets")
    checks = [TheoremCheck(name) for name in names]
    if order is None or order < 2:
        for c in checks:
            c.status = "skipped"
            c.details.append("only applies to the cyclic algebra with radical square zero")
        return checks
    n = order
    resolutions, ext_pattern, periods = checks
    simples = [simple(A, i) for i in A.vertices]
    for i, S in enumerate(simples, start=1):
        res = Resolution(S, 3 * n)
        resolutions.checked += 1
        shapes = [(res.term_vertices(k), res.term(k).module.total_dim) for k in range(3 * n)]
        if any(len(vs) != 1 or d != 2 for vs, d in shapes):
            resolutions.fail(f"S{i}: terms are not single two-dimensional projectives: {shapes}")
        orbit = [next(j for j, T in enumerate(simples, start=1) if res.syzygy(k).dims == T.dims)
                 if res.syzygy(k).total_dim == 1 else None for k in range(n + 1)]
        if None in orbit or sorted(orbit[:n]) != list(range(1, n + 1)) or orbit[n] != i:
            resolutions.fail(f"S{i}: syzygy orbit {orbit} does not cycle through all simples with period {n}")
        for m in range(1, 3 * n + 1):
            ext_pattern.checked += 1
            got = ext_dim(S, S, m, resolution=res)
            if got != (1 if m % n == 0 else 0):
                ext_pattern.fail(f"Ext^{m}(S{i}, S{i}) = {got}")
        ps = sg_projective_period_set(S, horizon, seed=seed)
        periods.checked += 1
        expected = list(range(n, horizon + 1, n))
        if ps.members != expected or not ps.all_certified:
            periods.fail(f"S{i}: period set {ps.members}, expected {expected}, all certified: {ps.all_certified}")
    return checks

