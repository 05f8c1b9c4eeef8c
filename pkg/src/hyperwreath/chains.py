"""Normalizer chain machinery: level functions, generator enumeration,
saturated closures, bounded normalizer/idealizer verification, the central
series oracle and the growth law.

The chain starts from the translation subgroup generated by the unit
constants of every layer.  Generator sets are enumerated from the level
functions; all verification against the infinite group is weight-bounded and
reports "unknown" instead of guessing whenever a bound is hit.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Set, Tuple

from .liering import LieKey, bracket_keys, phi_set
from .ordinals import OrdinalCNF
from .partitions import EMPTY, Partition, enumerate_partitions, seq_at, sequences_abc
from .polyring import Poly
from .wreath import GroupElement, MonomialElement, comm_formula


# -- level data ------------------------------------------------------------


def h_func(i: int, n: int) -> int:
    """Step height floor((i-1)/(n-1)) + 1, with floor toward minus infinity."""
    if n < 2:
        raise ValueError("n must be >= 2")
    return (i - 1) // (n - 1) + 1


def r_func(i: int, n: int) -> int:
    """The residue of i in 1..n-1 modulo n-1; defined for i >= 1 only."""
    if n < 2:
        raise ValueError("n must be >= 2")
    if i < 1:
        raise ValueError("r is defined for i >= 1")
    return (i - 1) % (n - 1) + 1


def wdd(m: MonomialElement) -> int:
    """Weight-degree defect: wt - deg + n - layer."""
    return m.wt - m.deg + m.n - m.layer


def lev(i: int, m: MonomialElement) -> int:
    """Level function at step i: h_i * wdd + deg - 1."""
    return h_func(i, m.n) * wdd(m) + m.deg - 1


# -- saturated sets ----------------------------------------------------------


@dataclass(frozen=True)
class SaturatedSet:
    """A finite basis of monic monomials, optionally a weight-bounded closure.

    ``closure_bound`` is None for plain enumerated generator sets and carries
    the admitted weight for sets produced by ``saturated_closure``;
    ``discards`` counts constituents dropped against that bound.
    """

    n: int
    basis: FrozenSet[MonomialElement]
    closure_bound: Optional[int] = None
    discards: int = 0

    def __post_init__(self):
        for m in self.basis:
            if m.n != self.n:
                raise ValueError("basis member belongs to a different group")
            if not m.is_monic:
                raise ValueError("basis members must be monic")

    def __len__(self) -> int:
        return len(self.basis)

    def contains_monomial(self, m: MonomialElement) -> bool:
        return m.monic_part() in self.basis

    def contains_element(self, g: GroupElement) -> bool:
        """Saturated membership: every constituent's monic part is in the basis."""
        if g.n != self.n:
            return False
        return all(self.contains_monomial(m) for m in g.decompose())

    def sorted_members(self) -> List[MonomialElement]:
        return sorted(self.basis, key=lambda m: m.tdeg(), reverse=True)

    def lie_keys(self) -> FrozenSet[LieKey]:
        return phi_set(self.basis)


# -- generator enumeration -----------------------------------------------------


def _level_new_members(j: int, n: int) -> Set[MonomialElement]:
    """Monic monomials with a nonempty partition satisfying lev_j = j.

    For j = 0 the level function degenerates to deg - 1, which selects
    exactly the single-variable linear monomials.  For j >= 1 the step height
    is positive, so the defect is forced and the partitions are enumerable.
    """
    out: Set[MonomialElement] = set()
    if j == 0:
        for k in range(2, n + 1):
            for v in range(1, k):
                out.add(MonomialElement(1, Partition.from_parts([v]), k, n))
        return out
    h = h_func(j, n)
    for d in range(1, j + 2):
        if (j - d + 1) % h != 0:
            continue
        w = (j - d + 1) // h
        if w < 0:
            continue
        for k in range(1, n + 1):
            wt = w + d - (n - k)
            if wt < d:
                continue
            for lam in enumerate_partitions(wt, num_parts=d, max_part=k - 1):
                out.add(MonomialElement(1, lam, k, n))
    return out


def enumerate_N(i: int, n: int) -> SaturatedSet:
    """The generator set at step i: the translation generators plus every
    monomial whose level function hits its own index at some step <= i.

    The step -1 set is the translation subgroup's generators by convention,
    which keeps the chain anchored uniformly (at n = 2 the level rule alone
    would miss the base layer).
    """
    if i < -1:
        raise ValueError("i must be >= -1")
    members: Set[MonomialElement] = {
        MonomialElement(1, EMPTY, k, n) for k in range(1, n + 1)
    }
    for j in range(0, i + 1):
        members |= _level_new_members(j, n)
    return SaturatedSet(n=n, basis=frozenset(members))


def layer_counts(i: int, n: int) -> Tuple[Dict[int, int], int]:
    """Counts by layer of the step-i increment (new generators at step i)."""
    if i < 0:
        raise ValueError("i must be >= 0")
    prev = enumerate_N(i - 1, n).basis
    new = [m for m in enumerate_N(i, n).basis if m not in prev]
    counts = {k: 0 for k in range(1, n + 1)}
    for m in new:
        counts[m.layer] += 1
    return counts, len(new)


# -- growth report ---------------------------------------------------------------


@dataclass
class ChainRow:
    n: int
    i: int
    r: int
    h: int
    generators: List[str]
    counts: Dict[int, int]
    predicted: Dict[int, int]
    total: int
    predicted_total: int
    match: Optional[bool]  # None below the stability threshold
    discards: int = 0


@dataclass
class ChainReport:
    n: int
    i_max: int
    threshold: int
    rows: List[ChainRow] = field(default_factory=list)

    @property
    def all_match(self) -> bool:
        return all(row.match for row in self.rows if row.match is not None)

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "i_max": self.i_max,
            "threshold": self.threshold,
            "all_match": self.all_match,
            "rows": [
                {
                    "n": r.n,
                    "i": r.i,
                    "r": r.r,
                    "h": r.h,
                    "generators": r.generators,
                    "counts": {str(k): v for k, v in r.counts.items()},
                    "predicted": {str(k): v for k, v in r.predicted.items()},
                    "total": r.total,
                    "predicted_total": r.predicted_total,
                    "match": r.match,
                    "discards": r.discards,
                }
                for r in self.rows
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2)

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["n", "i", "r", "h", "k", "count", "predicted", "match"])
        for row in self.rows:
            for k in range(1, self.n + 1):
                writer.writerow(
                    [
                        row.n,
                        row.i,
                        row.r,
                        row.h,
                        k,
                        row.counts[k],
                        row.predicted[k],
                        "" if row.match is None else str(row.match).lower(),
                    ]
                )
        return buf.getvalue()

    def to_text(self) -> str:
        lines = [
            f"normalizer chain growth for n={self.n}, i <= {self.i_max} "
            f"(stability threshold i > {self.threshold})"
        ]
        header = ["i", "r", "h"] + [f"|L_i^B{k}|" for k in range(1, self.n + 1)] + [
            "total",
            "predicted",
            "match",
        ]
        lines.append("  ".join(f"{h:>10}" for h in header))
        for row in self.rows:
            cells = [row.i, row.r, row.h] + [row.counts[k] for k in range(1, self.n + 1)]
            cells += [
                row.total,
                row.predicted_total,
                "-" if row.match is None else ("ok" if row.match else "MISMATCH"),
            ]
            lines.append("  ".join(f"{str(c):>10}" for c in cells))
        lines.append(f"all above-threshold rows match: {self.all_match}")
        return "\n".join(lines)


def growth_threshold(n: int) -> int:
    """Steps beyond (n-4)(n-1) follow the stable counting law."""
    return (n - 4) * (n - 1)


def verify_growth(n: int, i_max: int) -> ChainReport:
    """Compare enumerated increment counts against the partition-sum law.

    Every step from 1 to i_max gets a row; rows at or below the stability
    threshold are reported but left unflagged.
    """
    if n < 2:
        raise ValueError("n must be >= 2")
    if i_max < 1:
        raise ValueError("i_max must be >= 1")
    _, b, c = sequences_abc(i_max + n + 2)
    threshold = growth_threshold(n)
    report = ChainReport(n=n, i_max=i_max, threshold=threshold)
    prev = enumerate_N(0, n).basis
    for i in range(1, i_max + 1):
        current = enumerate_N(i, n).basis
        new = sorted(
            (m for m in current if m not in prev),
            key=lambda m: m.tdeg(),
            reverse=True,
        )
        counts = {k: 0 for k in range(1, n + 1)}
        for m in new:
            counts[m.layer] += 1
        r = r_func(i, n)
        predicted = {k: seq_at(b, r + k - n - 1) for k in range(1, n + 1)}
        predicted_total = seq_at(c, r - 1)
        flagged = i > threshold
        match = (
            (counts == predicted and len(new) == predicted_total) if flagged else None
        )
        report.rows.append(
            ChainRow(
                n=n,
                i=i,
                r=r,
                h=h_func(i, n),
                generators=[m.render() for m in new],
                counts=counts,
                predicted=predicted,
                total=len(new),
                predicted_total=predicted_total,
                match=match,
            )
        )
        prev = current
    return report


# -- commutator constituents and closure -------------------------------------------


def comm_constituents(a: MonomialElement, b: MonomialElement) -> List[MonomialElement]:
    """Monomial constituents of the commutator of two monomial elements."""
    if a.n != b.n:
        raise ValueError("mismatched n")
    g = comm_formula(
        Poly.monomial(a.coeff, a.lam.mults),
        a.layer,
        Poly.monomial(b.coeff, b.lam.mults),
        b.layer,
        a.n,
    )
    return g.decompose()


def saturated_closure(
    gens: Iterable[MonomialElement], wt_bound: int, n: Optional[int] = None
) -> SaturatedSet:
    """Least monic-monomial set containing ``gens`` and closed under taking the
    monic parts of commutator constituents, up to the weight bound.

    Constituents heavier than the bound are discarded and counted; a nonzero
    discard count marks the closure as potentially incomplete.  The iteration
    cap only guards against a runaway loop; the set is finite by the bound.
    """
    if isinstance(gens, SaturatedSet):
        n = gens.n
        members = set(gens.basis)
    else:
        members = {m.monic_part() for m in gens}
        if n is None:
            if not members:
                raise ValueError("cannot infer n from an empty generator set")
            n = next(iter(members)).n
    if members and wt_bound < max(m.wt for m in members):
        raise ValueError("wt_bound is below the heaviest generator")
    discarded: Set[MonomialElement] = set()
    frontier = set(members)
    rounds = 0
    while frontier:
        rounds += 1
        if rounds > 10_000:
            raise RuntimeError("closure did not stabilize; bound too small?")
        new: Set[MonomialElement] = set()
        for a in frontier:
            for b in members:
                if a.layer == b.layer:
                    continue
                # the reversed commutator is the inverse and has the same
                # monic constituents, so one order suffices
                for m in comm_constituents(a, b):
                    monic = m.monic_part()
                    if monic in members or monic in new:
                        continue
                    if monic.wt > wt_bound:
                        discarded.add(monic)
                    else:
                        new.add(monic)
        members |= new
        frontier = new
    return SaturatedSet(
        n=n, basis=frozenset(members), closure_bound=wt_bound, discards=len(discarded)
    )


# -- normalizer / idealizer verification ----------------------------------------


def normalizes(b: MonomialElement, H: SaturatedSet) -> Optional[bool]:
    """Bounded check that ``b`` normalizes the saturated subgroup with basis ``H``.

    True when every constituent of every commutator with a basis member lands
    back in the basis.  A constituent that escapes the basis within the bound
    of a complete closure is conclusive evidence against; anything past the
    bound (or any escape when the closure itself discarded constituents) is
    not decidable at this bound and yields None ("unknown").
    """
    if H.closure_bound is None:
        raise ValueError("normalizes requires a closed SaturatedSet")
    if b.n != H.n:
        raise ValueError("mismatched n")
    conclusive_false = False
    any_unknown = False
    for m in H.sorted_members():
        if m.layer == b.layer:
            continue
        for part in comm_constituents(b, m):
            monic = part.monic_part()
            if monic in H.basis:
                continue
            if part.wt > H.closure_bound or H.discards > 0:
                any_unknown = True
            else:
                conclusive_false = True
    if conclusive_false:
        return False
    if any_unknown:
        return None
    return True


def idealizes(key: LieKey, h_keys: FrozenSet[LieKey], n: int) -> bool:
    """Check that a Lie basis element idealizes the homogeneous subring
    spanned by ``h_keys``: each bracket with a member is again in the span.
    """
    for other in h_keys:
        coeff, out = bracket_keys(key, other)
        if coeff != 0 and out not in h_keys:
            return False
    return True


def center_membership(g: GroupElement, alpha: OrdinalCNF) -> bool:
    """Upper-central-series test in the polynomial case: tdeg(g) < alpha."""
    return g.tdeg() < alpha


# -- normalizer step verification --------------------------------------------------


def candidate_monomials(n: int, wt_bound: int) -> List[MonomialElement]:
    """All monic monomials of weight up to the bound, every layer."""
    out: List[MonomialElement] = []
    for k in range(1, n + 1):
        for w in range(0, wt_bound + 1):
            for lam in enumerate_partitions(w, num_parts=None, max_part=k - 1):
                out.append(MonomialElement(1, lam, k, n))
    return out


@dataclass
class ChainStepCheck:
    n: int
    i: int
    wt_bound: int
    closure_size: int
    closure_discards: int
    members_checked: int
    outsiders_checked: int
    member_failures: List[str]
    outsider_passes: List[str]
    unknowns: List[str]
    mirror_disagreements: List[str]
    group_passes: int = 0
    lie_passes: int = 0

    @property
    def ok(self) -> bool:
        return not (
            self.member_failures
            or self.outsider_passes
            or self.unknowns
            or self.mirror_disagreements
        )


def check_chain_step(
    n: int,
    i: int,
    wt_bound: Optional[int] = None,
    candidates: Optional[Sequence[MonomialElement]] = None,
    check_mirror: bool = True,
) -> ChainStepCheck:
    """Verify one normalizer step: the step-i generators are exactly the
    bounded monomials normalizing the closure of the previous step, and the
    Lie-side idealizer test mirrors every verdict.
    """
    if wt_bound is None:
        wt_bound = 2 * (i + 2)
    prev = enumerate_N(i - 1, n)
    closure = saturated_closure(prev.basis, wt_bound, n=n)
    target = enumerate_N(i, n).basis
    if candidates is None:
        candidates = candidate_monomials(n, wt_bound)
    h_keys = closure.lie_keys()
    step = ChainStepCheck(
        n=n,
        i=i,
        wt_bound=wt_bound,
        closure_size=len(closure),
        closure_discards=closure.discards,
        members_checked=0,
        outsiders_checked=0,
        member_failures=[],
        outsider_passes=[],
        unknowns=[],
        mirror_disagreements=[],
    )
    for b in candidates:
        verdict = normalizes(b, closure)
        if verdict is None:
            step.unknowns.append(b.render())
            continue
        if verdict:
            step.group_passes += 1
        if check_mirror:
            lie_verdict = idealizes(b.lie_key(), h_keys, n)
            if lie_verdict:
                step.lie_passes += 1
            if lie_verdict != verdict:
                step.mirror_disagreements.append(b.render())
        if b in target:
            step.members_checked += 1
            if not verdict:
                step.member_failures.append(b.render())
        else:
            step.outsiders_checked += 1
            if verdict:
                step.outsider_passes.append(b.render())
    return step
