"""One-shot verification suite: recompute every structural claim about a
given algebra and report pass/fail per claim.

The checks deliberately go through independent routes where possible: the
general solvers are compared against hand-written closed forms, the
probe-based local classifier against brute-force enumeration (on small
prime fields), and the canonical biderivation family against the full
identity sweep.  The (j,j) coefficient of the canonical family is
re-certified from the solver output on every run.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .algebra import (BASIS_PARITY, AlgebraParams, Quaternion, grade_split,
                      jordan_super, lie_super, parity_of)
from .biderivations import (BiderivationSpec, biderivation_space_maps,
                            canonical_bilinmap, canonical_eval,
                            certify_jj_coefficient, biderivation_defect,
                            solve_biderivations, symmetry_split)
from .derivations import (DerivationParams, derivation_matrix,
                          derivation_space_maps, graded_parts,
                          inner_span_rank, inner_superderivation,
                          is_superderivation, outer_dimension, recover_params,
                          solve_superderivations)
from .linalg import BilinMap, LinMap
from .local import (ENUMERATION_BOUND, classify_local, exhaustive_local_check,
                    pointwise_solvable)
from .rings import RingDescriptor

DEFAULT_SAMPLES = 250
_SEED = 0x5EED


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


def _random_element(rng: random.Random, ring: RingDescriptor):
    if ring.kind == "Q":
        return ring.element(Fraction(rng.randint(-9, 9), rng.randint(1, 9)))
    return ring.element(rng.randrange(ring.modulus))


def _random_quaternion(rng, params: AlgebraParams) -> Quaternion:
    return Quaternion(params, tuple(_random_element(rng, params.ring)
                                    for _ in range(4)))


def _random_linmap(rng, params: AlgebraParams) -> LinMap:
    return LinMap(params, tuple(tuple(_random_element(rng, params.ring)
                                      for _ in range(4)) for _ in range(4)))


def _check_derivation_space(params: AlgebraParams, degree: int) -> CheckResult:
    expected_dim = 1 if degree == 0 else 2
    name = (f"degree-{degree} superderivation space is the "
            f"{expected_dim}-parameter closed form")
    space = solve_superderivations(params, degree)
    problems = []
    if space.dim != expected_dim:
        problems.append(f"dim={space.dim}, expected {expected_dim}")
    for M in derivation_space_maps(params, degree):
        if not is_superderivation(M, degree):
            problems.append("solver basis fails the Leibniz sweep")
        if M != derivation_matrix(params, recover_params(M, degree)):
            problems.append("solver basis is not in the closed form")
    ring = params.ring
    if degree == 0:
        members = [DerivationParams(0, lam=ring.element(v)) for v in (1, -1, 2)]
    else:
        members = [DerivationParams(1, mu=ring.one, nu=ring.zero),
                   DerivationParams(1, mu=ring.zero, nu=ring.one),
                   DerivationParams(1, mu=ring.element(2), nu=ring.element(-1))]
    for dp in members:
        flat = derivation_matrix(params, dp).to_flat()
        if not space.contains(flat):
            problems.append("closed-form member missing from the solved space")
    return CheckResult(name, not problems, "; ".join(problems) or f"dim={space.dim}")


def _structured_near_misses(params: AlgebraParams, degree: int) -> list[LinMap]:
    # Maps supported on the closed-form entries but with broken couplings;
    # all of them must classify as not local.
    ring = params.ring
    one, two = ring.one, ring.element(2)
    binv = params.b.try_invert()
    if degree == 0:
        return [
            LinMap.from_entries(params, {(3, 2): one, (2, 3): -(params.a * two)}),
            LinMap.from_entries(params, {(3, 2): one}),
            LinMap.from_entries(params, {(2, 3): one}),
        ]
    return [
        LinMap.from_entries(params, {(0, 2): one, (3, 1): binv * two}),
        LinMap.from_entries(params, {(0, 3): one, (2, 1): -(binv * two)}),
        LinMap.from_entries(params, {(0, 2): one}),
        LinMap.from_entries(params, {(2, 1): one}),
    ]


def _check_local(params: AlgebraParams, degree: int, samples: int) -> CheckResult:
    name = f"every local degree-{degree} superderivation is a superderivation"
    ring = params.ring
    rng = random.Random(_SEED + degree)
    problems = []

    def verify_verdict(M: LinMap, expect_derivation=None):
        verdict = classify_local(M, degree)
        if verdict.is_derivation:
            if not is_superderivation(M, degree):
                problems.append("a classified map fails the Leibniz sweep")
            if M != derivation_matrix(params, verdict.params):
                problems.append("classified parameters do not reproduce the map")
        else:
            if pointwise_solvable(M, degree, verdict.witness) is not None:
                problems.append("witness is solvable after all")
        if expect_derivation is not None and verdict.is_derivation != expect_derivation:
            problems.append("verdict disagrees with construction")
        return verdict.is_derivation

    if degree == 0:
        members = [DerivationParams(0, lam=ring.element(v)) for v in (0, 1, 5)]
    else:
        members = [DerivationParams(1, mu=ring.element(m), nu=ring.element(n))
                   for m, n in ((0, 0), (1, 0), (2, 3))]
    for dp in members:
        verify_verdict(derivation_matrix(params, dp), expect_derivation=True)
    near = _structured_near_misses(params, degree)
    for M in near:
        verify_verdict(M, expect_derivation=False)

    randoms = [_random_linmap(rng, params) for _ in range(samples)]
    for M in randoms:
        verify_verdict(M)

    exhaustive_n = 0
    if ring.kind == "Fp" and ring.modulus <= ENUMERATION_BOUND:
        sweep = randoms[:min(samples, 150)] + near
        sweep += [derivation_matrix(params, dp) for dp in members]
        for M in sweep:
            agrees = (classify_local(M, degree).is_derivation
                      == (exhaustive_local_check(M, degree) is None))
            if not agrees:
                problems.append("probe classifier disagrees with the full sweep")
        exhaustive_n = len(sweep)
    detail = f"{samples} random + {len(near)} structured maps"
    if exhaustive_n:
        detail += f"; exhaustive oracle on {exhaustive_n} of them"
    return CheckResult(name, not problems, "; ".join(problems) or detail)


def _check_inner(params: AlgebraParams) -> CheckResult:
    name = "inner superderivations exhaust the superderivation space"
    problems = []
    rng = random.Random(_SEED + 11)
    rk = inner_span_rank(params)
    if rk != 3:
        problems.append(f"inner span rank {rk}, expected 3")
    out = outer_dimension(params)
    if out != 0:
        problems.append(f"outer dimension {out}, expected 0")
    basis = params.basis()
    mixed = [basis[0] + basis[2], basis[1] + basis[3]]
    mixed += [_random_quaternion(rng, params) for _ in range(5)]
    for x in list(basis) + mixed:
        even, odd = graded_parts(inner_superderivation(x))
        if not (is_superderivation(even, 0) and is_superderivation(odd, 1)):
            problems.append(f"inner map at {x!r} does not split into superderivations")
    return CheckResult(name, not problems,
                       "; ".join(problems) or "rank 3, outer dimension 0")


def _normalized_against_canonical(params: AlgebraParams, B: BilinMap):
    lam_coord = B.values[1][2].coeffs[3]
    inv = lam_coord.try_invert()
    if inv is None:
        return None
    return B.scale(inv) == canonical_bilinmap(params, params.ring.one)


def _check_bider_space(params: AlgebraParams, spec: BiderivationSpec,
                       expected_dim: int, name: str) -> CheckResult:
    space = solve_biderivations(params, spec)
    problems = []
    if space.dim != expected_dim:
        problems.append(f"dim={space.dim}, expected {expected_dim}")
    maps = [BilinMap.from_flat(params, v) for v in space.basis]
    for B in maps:
        if biderivation_defect(B, spec.degree) is not None:
            problems.append("solver basis fails the identity sweep")
    if expected_dim == 1 and space.dim == 1:
        if _normalized_against_canonical(params, maps[0]) is not True:
            problems.append("basis is not proportional to the canonical family")
        _, sym = symmetry_split(maps[0])
        if not sym.is_zero():
            problems.append("basis has a nonzero symmetric part")
    return CheckResult(name, not problems, "; ".join(problems) or f"dim={space.dim}")


def _check_canonical_family(params: AlgebraParams) -> CheckResult:
    name = "canonical degree-0 family passes the full identity sweep"
    problems = []
    rng = random.Random(_SEED + 23)
    for lam in (params.ring.one, params.ring.element(-2)):
        B = canonical_bilinmap(params, lam)
        defect = biderivation_defect(B, 0)
        if defect is not None:
            problems.append(f"identity {defect.kind} fails at {defect.where}")
        skew, sym = symmetry_split(B)
        if skew != B or not sym.is_zero():
            problems.append("family is not purely super-skew")
        for _ in range(20):
            x = _random_quaternion(rng, params)
            y = _random_quaternion(rng, params)
            if canonical_eval(lam, x, y) != B.eval(x, y):
                problems.append("closed form disagrees with the basis-pair grid")
                break
    return CheckResult(name, not problems, "; ".join(problems) or "verified")


def _check_jj_coefficient(params: AlgebraParams) -> CheckResult:
    name = "canonical family (j,j) scalar value certified from the solver"
    rep = certify_jj_coefficient(params)
    notes = [f"coefficient of the family parameter is {rep.certified}"]
    notes.append("equals -b" if rep.equals_minus_b else "DOES NOT equal -b")
    if rep.equals_minus_ab and not (params.a == params.ring.one):
        notes.append("also equals -a*b")
    elif not rep.equals_minus_ab:
        notes.append("the alternative -a*b is rejected")
    ok = rep.equals_minus_b and rep.solver_matches_closed_form
    if not rep.solver_matches_closed_form:
        notes.append("solver basis does not match the closed form")
    return CheckResult(name, ok, "; ".join(notes))


def _check_product_laws(params: AlgebraParams) -> CheckResult:
    name = "graded product laws (associativity, anticommutativity, grading)"
    problems = []
    rng = random.Random(_SEED + 31)
    basis = params.basis()
    for x, y, z in product(basis, repeat=3):
        if (x * y) * z != x * (y * z):
            problems.append(f"associativity fails on {x!r},{y!r},{z!r}")
    for _ in range(100):
        trip = [_random_quaternion(rng, params) for _ in range(3)]
        if (trip[0] * trip[1]) * trip[2] != trip[0] * (trip[1] * trip[2]):
            problems.append("associativity fails on random inputs")
            break
    for p, q in product(range(4), repeat=2):
        x, y = basis[p], basis[q]
        sign = -1 if (BASIS_PARITY[p] and BASIS_PARITY[q]) else 1
        if lie_super(x, y) != lie_super(y, x).scale(params.ring.element(-sign)):
            problems.append(f"super-anticommutativity fails on ({x!r},{y!r})")
        prod = x * y
        par = parity_of(prod)
        if par is not None and not prod.is_zero():
            if par != (BASIS_PARITY[p] + BASIS_PARITY[q]) % 2:
                problems.append(f"grading fails on ({x!r},{y!r})")
        if not (BASIS_PARITY[p] and BASIS_PARITY[q]):
            two = params.ring.element(2)
            lhs2 = lie_super(x, y) + jordan_super(x, y).scale(two)
            if lhs2 != prod.scale(two):
                problems.append(f"Lie/Jordan relation fails on ({x!r},{y!r})")
    for _ in range(50):
        x = _random_quaternion(rng, params)
        even, odd = grade_split(x)
        if even + odd != x or parity_of(even) != 0 or (
                not odd.is_zero() and parity_of(odd) != 1):
            problems.append("grade split is inconsistent")
            break
    return CheckResult(name, not problems, "; ".join(problems) or "verified")


def _check_slices(params: AlgebraParams) -> CheckResult:
    name = "biderivation slices in the first argument are superderivations"
    problems = []
    maps = [canonical_bilinmap(params, params.ring.element(3))]
    maps += biderivation_space_maps(params, BiderivationSpec(0, "any"))
    basis = params.basis()
    for B in maps:
        for p in range(4):
            cols = [B.eval(basis[p], e).to_vector() for e in basis]
            M = LinMap.from_columns(params, cols)
            if not is_superderivation(M, BASIS_PARITY[p]):
                problems.append(f"slice at basis index {p} fails")
    return CheckResult(name, not problems, "; ".join(problems) or "verified")


def run_theorem_suite(params: AlgebraParams,
                      samples: int = DEFAULT_SAMPLES) -> list[CheckResult]:
    """All structural checks for one algebra, in report order."""
    results = [
        _check_derivation_space(params, 0),
        _check_derivation_space(params, 1),
        _check_local(params, 0, samples),
        _check_local(params, 1, samples),
        _check_inner(params),
        _check_bider_space(params, BiderivationSpec(0, "skew"), 1,
                           "degree-0 super-skew biderivations form the canonical line"),
        _check_bider_space(params, BiderivationSpec(0, "sym"), 0,
                           "degree-0 super-symmetric biderivations vanish"),
        _check_bider_space(params, BiderivationSpec(0, "any"), 1,
                           "degree-0 biderivations coincide with the canonical line"),
        _check_bider_space(params, BiderivationSpec(1, "skew"), 0,
                           "degree-1 super-skew biderivations vanish"),
        _check_bider_space(params, BiderivationSpec(1, "sym"), 0,
                           "degree-1 super-symmetric biderivations vanish"),
        _check_bider_space(params, BiderivationSpec(1, "any"), 0,
                           "degree-1 biderivations vanish"),
        _check_canonical_family(params),
        _check_jj_coefficient(params),
        _check_product_laws(params),
        _check_slices(params),
    ]
    return results


def format_report(results: list[CheckResult]) -> str:
    lines = []
    width = max(len(r.name) for r in results) + 2
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        line = f"{r.name:<{width}} {status}"
        if r.detail:
            line += f"  ({r.detail})"
        lines.append(line)
    failed = sum(1 for r in results if not r.passed)
    lines.append(f"{failed} of {len(results)} checks failed" if failed
                 else f"all {len(results)} checks passed")
    return "\n".join(lines)
