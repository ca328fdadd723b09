"""Capability verdicts and the cross-checks tying the three routes together.

A nilpotent algebra is capable exactly when its exterior center vanishes.
The decision procedure is the cover-based exterior center; the one
dimensional test through multiplier dimensions and the injectivity of the
induced multiplier map are independent certificates that must agree with it
line by line.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import catalog
from .algebra import (
    IdealSubspace,
    center,
    derived_subalgebra,
    is_nilpotent,
    quotient,
    subalgebra_on,
)
from .covers import Cover, exterior_center, exterior_square
from .homology import NotCentral, schur_multiplier
from .linalg import QQ, Subspace, subspace_intersect
from .recognize import recognize


class WrongDimension(Exception):
    pass


class UnsupportedDimension(Exception):
    pass


@dataclass(frozen=True)
class CapabilityReport:
    label: str
    exterior_center_dim: int
    capable: bool
    witness: Subspace  # basis of Z^(L); zero subspace for capable algebras


def is_capable(algebra_or_cover, label=""):
    zw = exterior_center(algebra_or_cover)
    return CapabilityReport(label=label or repr(zw.parent),
                            exterior_center_dim=zw.dim,
                            capable=zw.dim == 0,
                            witness=zw.space)


def dagger_test(algebra, line):
    """dim M(L) == dim M(L/K) - dim(L^2 cap K) for a central line K.

    True exactly when K lies inside the exterior center.
    """
    space = line.space if isinstance(line, IdealSubspace) else line
    if space.dim != 1:
        raise WrongDimension("the test applies to one dimensional ideals")
    if not center(algebra).space.contains_subspace(space):
        raise NotCentral("K must be central")
    q, _ = quotient(algebra, space)
    lhs = schur_multiplier(algebra).dim
    cap = subspace_intersect(derived_subalgebra(algebra).space, space).dim
    return lhs == schur_multiplier(q).dim - cap


def central_test_lines(algebra):
    """Deterministic central lines: basis lines, pairwise sums and differences."""
    z = center(algebra).space
    f = algebra.field
    rows = z.sparse_rows()
    seen = set()
    out = []

    def push(vec):
        s = Subspace.from_vectors(f, algebra.dim, [vec])
        key = tuple(sorted((c, f.to_str(v)) for c, v in s.sparse_rows()[0].items()))
        if key not in seen:
            seen.add(key)
            out.append(s)

    for r in rows:
        push(r)
    for a in range(len(rows)):
        for b in range(a + 1, len(rows)):
            plus = dict(rows[a])
            for c, v in rows[b].items():
                plus[c] = f.add(plus.get(c, f.zero), v)
            push(plus)
            minus = dict(rows[a])
            for c, v in rows[b].items():
                nv = f.sub(minus.get(c, f.zero), v)
                if nv:
                    minus[c] = nv
                else:
                    minus.pop(c, None)
            if minus:
                push(minus)
    if len(rows) > 2:
        total = {}
        for r in rows:
            for c, v in r.items():
                total[c] = f.add(total.get(c, f.zero), v)
        push(total)
    return out


def noncapable_census(max_dim, field=QQ, epsilon_samples=catalog.DEFAULT_EPSILON_SAMPLES):
    """Keys of the noncapable catalog entries through max_dim."""
    if max_dim > 6:
        raise UnsupportedDimension("catalog stops at dimension 6")
    out = []
    for key in catalog.all_keys(max_dim, field, epsilon_samples):
        entry = catalog.build(key, field)
        if exterior_center(entry.algebra).dim > 0:
            out.append(key)
    return out


@dataclass(frozen=True)
class SweepRow:
    key: object
    square_label: str
    square_center_dim: int
    capable: bool


def exterior_square_capability_sweep(dims=(3, 4, 5, 6), field=QQ,
                                     epsilon_samples=catalog.DEFAULT_EPSILON_SAMPLES,
                                     cover_cache=None):
    """Z^(L ^ L) for every nonabelian catalog entry of the given dimensions."""
    rows = []
    for dim in dims:
        for key in catalog.expand_keys(dim, field, epsilon_samples):
            entry = catalog.build(key, field)
            if entry.algebra.is_abelian():
                continue
            cover = cover_cache[key] if cover_cache else Cover(entry.algebra)
            w = exterior_square(cover)
            zw = exterior_center(w)
            rows.append(SweepRow(key, recognize(w).label(), zw.dim, zw.dim == 0))
    return rows


@dataclass(frozen=True)
class BoundCheck:
    """Outcome of the exterior-center bound for one algebra.

    status is "checked" when the hypothesis (nonabelian, dim >= 3, and
    L^2/Z^(L) capable) holds and the inequality was evaluated; a failed
    hypothesis yields status "skipped", never a failure.
    """

    label: str
    status: str          # "checked" | "skipped"
    reason: str = ""
    lhs: int = -1        # dim Z^(L ^ L)
    rhs: int = -1        # dim M(L / Z^(L))
    holds: bool = False


def theorem2_bound_check(algebra, label="", cover=None):
    """dim Z^(L^L) <= dim M(L/Z^(L)) whenever L^2/Z^(L) is capable."""
    if algebra.is_abelian():
        return BoundCheck(label, "skipped", reason="abelian")
    if algebra.dim < 3:
        return BoundCheck(label, "skipped", reason="dimension below 3")
    if not is_nilpotent(algebra):
        return BoundCheck(label, "skipped", reason="not nilpotent")
    cover = cover or Cover(algebra)
    zw = exterior_center(cover)
    der = derived_subalgebra(algebra)
    assert der.space.contains_subspace(zw.space), "Z^(L) escaped L^2"
    dsub, _ = subalgebra_on(algebra, der)
    inner = Subspace.from_vectors(
        algebra.field, dsub.dim,
        [der.space.coords(v) for v in zw.space.basis_vectors()])
    dq, _ = quotient(dsub, inner)
    if dq.dim > 0 and exterior_center(dq).dim > 0:
        return BoundCheck(label, "skipped", reason="L^2/Z^(L) not capable")
    w = exterior_square(cover)
    lhs = exterior_center(w).dim
    lbar, _ = quotient(algebra, zw.space)
    rhs = schur_multiplier(lbar).dim
    return BoundCheck(label, "checked", lhs=lhs, rhs=rhs, holds=lhs <= rhs)
