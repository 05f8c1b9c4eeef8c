"""Randomized and exhaustive invariant suites behind the ``verify`` command.

Every suite is deterministic given a seed and returns a list of named
pass/fail results; the CLI renders them and turns failures into exit codes.
"""

from __future__ import annotations

import os
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from . import chains, liering, regular, wreath
from .ordinals import OrdinalCNF
from .partitions import EMPTY, Partition, enumerate_partitions
from .polyring import Poly


@dataclass
class PropertyResult:
    name: str
    passed: bool
    detail: str = ""


def max_workers() -> int:
    """Worker cap from the HYPERWREATH_THREADS environment variable (default 1)."""
    raw = os.environ.get("HYPERWREATH_THREADS", "")
    try:
        value = int(raw)
    except ValueError:
        return 1
    return max(1, value)


# -- random generators ---------------------------------------------------------


def random_partition(rng: random.Random, max_part: int, max_wt: int) -> Partition:
    if max_part < 1 or max_wt < 1:
        return EMPTY
    wt = rng.randint(0, max_wt)
    options = enumerate_partitions(wt, num_parts=None, max_part=max_part)
    if not options:
        return EMPTY
    return rng.choice(options)


def random_monomial(
    rng: random.Random,
    n: int,
    max_wt: int = 4,
    coeff_bound: int = 5,
    monic: bool = False,
    layer: Optional[int] = None,
    nonempty: bool = False,
) -> wreath.MonomialElement:
    k = layer if layer is not None else rng.randint(1, n)
    lam = random_partition(rng, k - 1, max_wt)
    if nonempty and lam.is_empty:
        if k == 1:
            raise ValueError("layer 1 admits only the empty partition")
        lam = Partition.from_parts([rng.randint(1, k - 1)])
    coeff = 1
    if not monic:
        coeff = rng.choice([c for c in range(-coeff_bound, coeff_bound + 1) if c])
    return wreath.MonomialElement(coeff, lam, k, n)


def random_group_element(
    rng: random.Random,
    n: int,
    max_wt: int = 4,
    coeff_bound: int = 5,
    max_terms: int = 3,
) -> wreath.GroupElement:
    layers: List[Poly] = []
    for k in range(1, n + 1):
        acc = Poly.zero()
        for _ in range(rng.randint(0, max_terms)):
            lam = random_partition(rng, k - 1, max_wt)
            coeff = rng.choice([c for c in range(-coeff_bound, coeff_bound + 1) if c])
            acc = acc + Poly.monomial(coeff, lam.mults)
        layers.append(acc)
    return wreath.GroupElement(n, layers)


# -- suites -------------------------------------------------------------------


def suite_group(seed: int, triples: int = 200, ns: Sequence[int] = (2, 3, 4, 5)) -> List[PropertyResult]:
    """Group axioms and the right-action contract on random elements."""
    rng = random.Random(seed)
    results: List[PropertyResult] = []
    assoc_ok = inv_ok = action_ok = True
    detail = ""
    for n in ns:
        for idx in range(triples):
            g = random_group_element(rng, n)
            h = random_group_element(rng, n)
            k = random_group_element(rng, n)
            if (g * h) * k != g * (h * k):
                assoc_ok = False
                detail = f"associativity broke at n={n} sample {idx}"
            gi = g.inverse()
            ident = wreath.GroupElement.identity(n)
            if g * gi != ident or gi * g != ident:
                inv_ok = False
                detail = f"inverse broke at n={n} sample {idx}"
            gh = g * h
            for _ in range(20):
                x = tuple(rng.randint(-6, 6) for _ in range(n))
                if gh.act(x) != h.act(g.act(x)):
                    action_ok = False
                    detail = f"action contract broke at n={n} sample {idx}"
                    break
    results.append(PropertyResult("associativity", assoc_ok, detail if not assoc_ok else ""))
    results.append(PropertyResult("two-sided inverse", inv_ok, detail if not inv_ok else ""))
    results.append(
        PropertyResult("act(g*h, x) == act(h, act(g, x))", action_ok, detail if not action_ok else "")
    )
    return results


def suite_formulas(seed: int, pairs: int = 200, ns: Sequence[int] = (2, 3, 4, 5)) -> List[PropertyResult]:
    """Commutator case split, Taylor expansion and the leading-term law."""
    rng = random.Random(seed)
    results: List[PropertyResult] = []

    split_ok = taylor_ok = True
    detail_split = detail_taylor = ""
    for idx in range(pairs):
        n = rng.choice(list(ns))
        a = random_monomial(rng, n)
        b = random_monomial(rng, n)
        fa = Poly.monomial(a.coeff, a.lam.mults)
        fb = Poly.monomial(b.coeff, b.lam.mults)
        direct = wreath.comm(a.to_group(), b.to_group())
        formula = wreath.comm_formula(fa, a.layer, fb, b.layer, n)
        if direct != formula:
            split_ok = False
            detail_split = f"case split broke on {a.render()} , {b.render()}"
        if a.layer > b.layer:
            taylor = wreath.taylor_comm(fa, a.layer, fb, b.layer, n)
            if taylor != formula:
                taylor_ok = False
                detail_taylor = f"taylor broke on {a.render()} , {b.render()}"
    results.append(PropertyResult("comm equals case-split formula", split_ok, detail_split))
    results.append(PropertyResult("case-split formula equals taylor sum", taylor_ok, detail_taylor))

    leading_ok = True
    detail_leading = ""
    count = 0
    while count < pairs:
        n = rng.choice([v for v in ns if v >= 2])
        k = rng.randint(2, n)
        u = rng.randint(1, k - 1)
        lam = random_partition(rng, k - 1, 5)
        if lam.multiplicity(u) == 0:
            lam = lam.combine(Partition.from_parts([u]))
        theta = random_partition(rng, u - 1, 4)
        count += 1
        predicted = wreath.leading_of_monomial_comm(lam, k, theta, u, n)
        actual = wreath.comm(
            wreath.GroupElement.monomial(1, lam, k, n),
            wreath.GroupElement.monomial(1, theta, u, n),
        ).leading_term()
        if predicted != actual:
            leading_ok = False
            detail_leading = f"leading term broke at lam={lam}, k={k}, theta={theta}, u={u}"
    results.append(PropertyResult("leading term of monomial commutators", leading_ok, detail_leading))

    # finite differences on a sampled coefficient grid
    diff_ok = True
    detail_diff = ""
    for d in range(0, 9):
        coeffs = [0] * d + [1]
        f = Poly({(i,): c for i, c in enumerate(coeffs) if c})
        steps = 0
        while not f.is_zero and steps <= 10:
            f = f.difference(1, 1)
            steps += 1
        if steps != d + 1:
            diff_ok = False
            detail_diff = f"monomial of degree {d} vanished after {steps} differences"
    for _ in range(300):
        deg = rng.randint(0, 8)
        coeffs = [rng.randint(-2, 2) for _ in range(deg + 1)]
        f = Poly({(i,): c for i, c in enumerate(coeffs) if c})
        true_deg = max((i for i, c in enumerate(coeffs) if c), default=-1)
        g = f
        for k in range(1, 11):
            g = g.difference(1, 1)
            if g.is_zero != (true_deg <= k - 1):
                diff_ok = False
                detail_diff = f"difference order broke for coeffs {coeffs} at k={k}"
                break
    results.append(PropertyResult("k-fold differences detect degree", diff_ok, detail_diff))
    return results


def suite_phi(seed: int, pairs: int = 200, ns: Sequence[int] = (2, 3, 4, 5)) -> List[PropertyResult]:
    """Bracket laws and the leading-term correspondence on commutators."""
    rng = random.Random(seed)
    results: List[PropertyResult] = []

    inter_ok = True
    detail = ""
    for _ in range(pairs):
        n = rng.choice(list(ns))
        a = random_monomial(rng, n)
        b = random_monomial(rng, n)
        lhs = liering.phi(wreath.comm(a.to_group(), b.to_group()))
        rhs = liering.bracket(liering.LieElement.from_monomial(a), liering.LieElement.from_monomial(b))
        if lhs != rhs:
            inter_ok = False
            detail = f"correspondence broke on {a.render()} , {b.render()}"
    results.append(PropertyResult("phi intertwines commutator and bracket", inter_ok, detail))

    laws_ok = True
    detail_laws = ""
    for _ in range(100):
        n = rng.choice(list(ns))
        a = liering.LieElement.from_monomial(random_monomial(rng, n))
        b = liering.LieElement.from_monomial(random_monomial(rng, n))
        c = liering.LieElement.from_monomial(random_monomial(rng, n))
        if not liering.bracket(a, a).is_zero:
            laws_ok = False
            detail_laws = "alternating law broke"
        lin = liering.bracket(a + b, c) - (liering.bracket(a, c) + liering.bracket(b, c))
        if not lin.is_zero:
            laws_ok = False
            detail_laws = "bilinearity broke"
        jac = (
            liering.bracket(a, liering.bracket(b, c))
            + liering.bracket(b, liering.bracket(c, a))
            + liering.bracket(c, liering.bracket(a, b))
        )
        if not jac.is_zero:
            laws_ok = False
            detail_laws = "jacobi identity broke"
    results.append(PropertyResult("bracket is alternating, bilinear, jacobi", laws_ok, detail_laws))
    return results


def suite_centers(seed: int, ns: Sequence[int] = (3, 4), per_monomial: int = 50) -> List[PropertyResult]:
    """Central-series drop of commutators and the description of the center."""
    rng = random.Random(seed)
    drop_ok = True
    center_ok = True
    detail_drop = detail_center = ""
    one = OrdinalCNF.from_int(1)
    for n in ns:
        monomials = [m for m in chains.candidate_monomials(n, 4)]
        for b in monomials:
            bg = b.to_group()
            alpha = b.tdeg()
            if chains.center_membership(bg, one) != (b.lam.is_empty and b.layer == n):
                center_ok = False
                detail_center = f"center classification broke at {b.render()}, n={n}"
            for _ in range(per_monomial):
                g = random_group_element(rng, n)
                c = wreath.comm(bg, g)
                if not c.tdeg() < alpha.successor():
                    drop_ok = False
                    detail_drop = f"degree did not drop for {b.render()} at n={n}"
                if not c.is_identity and not c.tdeg() < alpha:
                    drop_ok = False
                    detail_drop = f"strict drop failed for {b.render()} at n={n}"
    return [
        PropertyResult("commutator drops transfinite degree", drop_ok, detail_drop),
        PropertyResult("degree-zero monomials are exactly the top-layer constants", center_ok, detail_center),
    ]


def suite_chain(
    seed: int,
    ns: Sequence[int] = (3, 4),
    i_max: int = 6,
    wt_bound: Optional[int] = None,
) -> List[PropertyResult]:
    """Normalizer chain steps plus the growth law and the idealizer mirror."""
    results: List[PropertyResult] = []
    jobs: List[Tuple[int, int]] = [(n, i) for n in ns for i in range(1, i_max + 1)]

    def run(job: Tuple[int, int]) -> chains.ChainStepCheck:
        n, i = job
        return chains.check_chain_step(n, i, wt_bound=wt_bound)

    workers = max_workers()
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            steps = list(pool.map(run, jobs))
    else:
        steps = [run(job) for job in jobs]
    for (n, i), step in zip(jobs, steps):
        detail = ""
        if not step.ok:
            detail = (
                f"member_failures={step.member_failures[:3]} "
                f"outsider_passes={step.outsider_passes[:3]} "
                f"unknowns={step.unknowns[:3]} "
                f"mirror={step.mirror_disagreements[:3]}"
            )
        results.append(
            PropertyResult(f"normalizer step n={n} i={i} (bound {step.wt_bound})", step.ok, detail)
        )
    for n in (4, 5):
        report = chains.verify_growth(n, 12)
        results.append(
            PropertyResult(
                f"growth law n={n} i<=12",
                report.all_match,
                "" if report.all_match else "see chain report",
            )
        )
    return results


def suite_regular(
    seed: int, ns: Sequence[int] = (2, 3, 4), c_range: Tuple[int, int] = (-3, 3), radius: int = 2
) -> List[PropertyResult]:
    """Family axioms: abelian, normal, orbit-injective, and the conjugacy shift."""
    results: List[PropertyResult] = []
    ab_ok = norm_ok = orbit_ok = conj_ok = center_ok = True
    detail = ""
    lo, hi = c_range
    for n in ns:
        for c in range(lo, hi + 1):
            fam = regular.make_family(c, n)
            if not regular.is_abelian(fam):
                ab_ok = False
                detail = f"family c={c} n={n} not abelian"
            if not regular.is_normal_in_N0(fam):
                norm_ok = False
                detail = f"family c={c} n={n} not normal"
            if not regular.orbit_injectivity(fam, radius):
                orbit_ok = False
                detail = f"family c={c} n={n} not orbit-injective"
            if regular.membership_solve(wreath.GroupElement.delta(n, n), fam) is None:
                center_ok = False
                detail = f"top-layer unit missing from family c={c} n={n}"
        for d in range(lo, hi + 1):
            if regular.conjugate_family(regular.make_family(0, n), d).c != 2 * d:
                conj_ok = False
                detail = f"even-class conjugation broke at d={d}, n={n}"
            if regular.conjugate_family(regular.make_family(1, n), d).c != 2 * d + 1:
                conj_ok = False
                detail = f"odd-class conjugation broke at d={d}, n={n}"
    results.append(PropertyResult("families are abelian", ab_ok, detail if not ab_ok else ""))
    results.append(PropertyResult("families are normal under step-0 generators", norm_ok, detail if not norm_ok else ""))
    results.append(PropertyResult("orbit map is injective on the exponent grid", orbit_ok, detail if not orbit_ok else ""))
    results.append(PropertyResult("families contain the central generator", center_ok, detail if not center_ok else ""))
    results.append(PropertyResult("conjugation shifts the parameter by 2d", conj_ok, detail if not conj_ok else ""))
    return results


SUITES: Dict[str, Callable[..., List[PropertyResult]]] = {
    "group": suite_group,
    "formulas": suite_formulas,
    "phi": suite_phi,
    "centers": suite_centers,
    "chain": suite_chain,
    "regular": suite_regular,
}


def run_suite(name: str, seed: int, **kwargs) -> List[PropertyResult]:
    if name == "all":
        out: List[PropertyResult] = []
        for key in SUITES:
            out.extend(SUITES[key](seed))
        return out
    if name not in SUITES:
        raise KeyError(name)
    return SUITES[name](seed, **kwargs)
