"""Identify computed algebras against the candidate output shapes.

Recognition targets the three families that occur as exterior or tensor
squares in dimensions up to six: A(k), H(m) + A(k), and L5_8 + A(k).
Recognition is constructive: a basis change is found that transforms the
input table into the model table exactly, and only then is the label
returned.  Everything else gets a canonical invariant fingerprint.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import (
    center,
    derived_subalgebra,
    direct_sum,
    lower_central_series,
    transform,
    upper_central_series,
)
from .catalog import abelian_algebra, heisenberg_algebra, indexed_key, build
from .homology import multiplier_dim
from .linalg import Echelon, Matrix, Subspace


class NotApplicable(Exception):
    """The decomposition's hypothesis (class 2, dim L^2 = 1) fails."""


@dataclass(frozen=True)
class Fingerprint:
    """Isomorphism-invariant profile used for fallback identification.

    Every field is basis-independent: dimensions of the lower and upper
    central series, of the derived subalgebra and its central part, of the
    centralizers of the lower central terms, and of the multiplier.
    """

    dim: int
    lcs_dims: tuple
    ucs_dims: tuple
    derived_dim: int
    center_dim: int
    derived_cap_center: int
    centralizer_dims: tuple
    multiplier_dim: int

    def as_tuple(self):
        return (self.dim, self.lcs_dims, self.ucs_dims, self.derived_dim,
                self.center_dim, self.derived_cap_center,
                self.centralizer_dims, self.multiplier_dim)

    def __str__(self):
        lcs = ",".join(str(d) for d in self.lcs_dims)
        ucs = ",".join(str(d) for d in self.ucs_dims)
        cents = ",".join(str(d) for d in self.centralizer_dims)
        return (f"dim={self.dim};lcs={lcs};ucs={ucs};der={self.derived_dim};"
                f"z={self.center_dim};derz={self.derived_cap_center};"
                f"cent={cents};m={self.multiplier_dim}")


def _centralizer_dim(algebra, space):
    from .linalg import kernel_from_rows
    rows = []
    for s in space.sparse_rows():
        per_k = {}
        for i in range(algebra.dim):
            v = algebra.bracket_sparse({i: algebra.field.one}, s)
            for k, c in v.items():
                per_k.setdefault(k, {})[i] = c
        rows.extend(per_k.values())
    return kernel_from_rows(algebra.field, algebra.dim, rows).dim


def fingerprint(algebra):
    from .linalg import subspace_intersect
    lcs = lower_central_series(algebra)
    ucs = upper_central_series(algebra)
    der = derived_subalgebra(algebra).space
    z = center(algebra).space
    cents = tuple(_centralizer_dim(algebra, g.space) for g in lcs[1:])
    return Fingerprint(
        dim=algebra.dim,
        lcs_dims=tuple(g.dim for g in lcs),
        ucs_dims=tuple(s.dim for s in ucs),
        derived_dim=der.dim,
        center_dim=z.dim,
        derived_cap_center=subspace_intersect(der, z).dim,
        centralizer_dims=cents,
        multiplier_dim=multiplier_dim(algebra),
    )


@dataclass(frozen=True)
class IsoType:
    """Recognized label: A(k), H(m)+A(k), L5_8+A(k), or a fingerprint."""

    kind: str                   # "abelian" | "heisenberg_sum" | "l58_sum" | "unrecognized"
    m: int = 0
    k: int = 0
    fp: Fingerprint = None
    basis: Matrix = None        # columns give the exhibited decomposition basis

    def label(self):
        if self.kind == "abelian":
            return f"A({self.k})"
        if self.kind == "heisenberg_sum":
            return f"H({self.m})" + (f"+A({self.k})" if self.k else "")
        if self.kind == "l58_sum":
            return "L5_8" + (f"+A({self.k})" if self.k else "")
        return f"UNRECOGNIZED[{self.fp}]"

    def __str__(self):
        return self.label()


def heisenberg_sum_model(m, k, field):
    alg = heisenberg_algebra(m, field)
    if k:
        alg = direct_sum(alg, abelian_algebra(k, field))
    return alg


def l58_sum_model(k, field):
    alg = build(indexed_key(5, 8), field).algebra
    if k:
        alg = direct_sum(alg, abelian_algebra(k, field))
    return alg


def _complement_rows(field, n, inner, outer):
    """Rows of ``outer`` extending ``inner`` to a basis of inner + outer."""
    ech = Echelon(field, n)
    for r in inner.sparse_rows():
        ech.add(dict(r))
    out = []
    for r in outer.sparse_rows():
        if ech.add(dict(r)):
            out.append(r)
    return out


@dataclass(frozen=True)
class HeisenbergSplit:
    m: int
    k: int
    basis: Matrix


def heisenberg_decomposition(algebra):
    """Split L with dim L^2 = 1 and class 2 as H(m) + A(k), constructively.

    The bracket factors through an alternating form beta on L with radical
    Z(L); a symplectic-style basis of a complement of the radical gives the
    H(m) part, and a complement of L^2 inside Z(L) the abelian part.  The
    returned basis transforms the table into the model table exactly.
    """
    f = algebra.field
    der = derived_subalgebra(algebra).space
    if der.dim != 1:
        raise NotApplicable("needs dim L^2 = 1")
    series = lower_central_series(algebra)
    if not (len(series) >= 2 and series[-1].dim == 0 and len(series) - 1 == 2):
        raise NotApplicable("needs class exactly 2")
    z_vec = der.sparse_rows()[0]
    z_pivot = der.pivots[0]

    def beta(u, v):
        w = algebra.bracket_sparse(u, v)
        if not w:
            return f.zero
        return f.div(w[z_pivot], z_vec[z_pivot])

    zspace = center(algebra).space
    rem = list(_complement_rows(f, algebra.dim, zspace, Subspace.full(f, algebra.dim)))
    pairs = []
    while rem:
        u = rem.pop(0)
        partner = None
        for idx, v in enumerate(rem):
            if beta(u, v):
                partner = idx
                break
        assert partner is not None, "radical vector escaped the center"
        v = rem.pop(partner)
        c = beta(u, v)
        v = {i: f.div(x, c) for i, x in v.items()}
        cleaned = []
        for w in rem:
            a = beta(u, w)
            b = beta(v, w)
            out = dict(w)
            for i, x in v.items():  # w - beta(u,w) v + beta(v,w) u
                nv = f.sub(out.get(i, f.zero), f.mul(a, x))
                if nv:
                    out[i] = nv
                else:
                    out.pop(i, None)
            for i, x in u.items():
                nv = f.add(out.get(i, f.zero), f.mul(b, x))
                if nv:
                    out[i] = nv
                else:
                    out.pop(i, None)
            cleaned.append(out)
        rem = cleaned
        pairs.append((u, v))
    m = len(pairs)
    k = zspace.dim - 1
    abelian_part = _complement_rows(f, algebra.dim, der, zspace)
    cols = []
    for u, v in pairs:
        cols.append(u)
        cols.append(v)
    cols.append(z_vec)
    cols.extend(abelian_part)
    z = f.zero
    basis = Matrix.from_columns(
        f, [tuple(c.get(i, z) for i in range(algebra.dim)) for c in cols],
        algebra.dim)
    model = heisenberg_sum_model(m, k, f)
    got = transform(algebra, basis)
    assert got.table_key() == model.table_key(), "symplectic split failed"
    return HeisenbergSplit(m, k, basis)


def _l58_sum_split(algebra):
    """Basis change to L5_8 + A(k) for class-2 algebras with dim L^2 = 2.

    Valid when the non-split core is five dimensional.  The core's bracket
    is a surjection from the 3-dim second exterior power of a transversal V
    onto L^2 with a one dimensional kernel; that kernel is spanned by a
    decomposable bivector a ^ b (its alternating matrix has rank two and its
    column space is span(a, b)), so (v1, a, b) with v1 outside span(a, b)
    realizes the model relations [v1,v2]=z4, [v1,v3]=z5, [v2,v3]=0.
    """
    f = algebra.field
    der = derived_subalgebra(algebra).space
    zspace = center(algebra).space
    if der.dim != 2 or not zspace.contains_subspace(der):
        return None
    w_rows = _complement_rows(f, algebra.dim, zspace, Subspace.full(f, algebra.dim))
    if len(w_rows) != 3:
        return None  # core dimension is not five
    # kernel line of Lambda^2(V) -> L^2
    pairs = [(0, 1), (0, 2), (1, 2)]
    images = [algebra.bracket_sparse(w_rows[i], w_rows[j]) for i, j in pairs]
    rows = {}
    for t, img in enumerate(images):
        coords = der.coords(img)
        for s, c in enumerate(coords):
            if c:
                rows.setdefault(s, {})[t] = c
    from .linalg import kernel_from_rows
    ker = kernel_from_rows(f, 3, rows.values())
    if ker.dim != 1:
        return None
    kappa = ker.sparse_rows()[0]
    k12 = kappa.get(0, f.zero)
    k13 = kappa.get(1, f.zero)
    k23 = kappa.get(2, f.zero)
    mat = [
        (f.zero, k12, k13),
        (f.neg(k12), f.zero, k23),
        (f.neg(k13), f.neg(k23), f.zero),
    ]
    col_space = Subspace.from_vectors(f, 3, [tuple(r[j] for r in mat) for j in range(3)])
    if col_space.dim != 2:
        return None
    ab = col_space.basis_vectors()
    v1_coeffs = None
    for cand in ((f.one, f.zero, f.zero), (f.zero, f.one, f.zero), (f.zero, f.zero, f.one)):
        if not col_space.contains(cand):
            v1_coeffs = cand
            break
    assert v1_coeffs is not None

    def mix(coeffs):
        out = {}
        for c, row in zip(coeffs, w_rows):
            if not c:
                continue
            for i, x in row.items():
                nv = f.add(out.get(i, f.zero), f.mul(c, x))
                if nv:
                    out[i] = nv
                else:
                    out.pop(i, None)
        return out

    v1 = mix(v1_coeffs)
    v2 = mix(ab[0])
    v3 = mix(ab[1])
    z4 = algebra.bracket_sparse(v1, v2)
    z5 = algebra.bracket_sparse(v1, v3)
    abelian_part = _complement_rows(f, algebra.dim, der, zspace)
    cols = [v1, v2, v3, z4, z5] + abelian_part
    z = f.zero
    basis = Matrix.from_columns(
        f, [tuple(c.get(i, z) for i in range(algebra.dim)) for c in cols],
        algebra.dim)
    k = zspace.dim - 2
    model = l58_sum_model(k, f)
    got = transform(algebra, basis)
    if got.table_key() != model.table_key():
        return None
    return IsoType("l58_sum", k=k, basis=basis)


def recognize(algebra):
    """Match against A(k), H(m)+A(k), L5_8+A(k); fingerprint otherwise."""
    if algebra.is_abelian():
        return IsoType("abelian", k=algebra.dim)
    series = lower_central_series(algebra)
    nilpotent = series[-1].dim == 0
    cls = len(series) - 1 if nilpotent else None
    if nilpotent and cls == 2:
        der_dim = derived_subalgebra(algebra).dim
        if der_dim == 1:
            split = heisenberg_decomposition(algebra)
            return IsoType("heisenberg_sum", m=split.m, k=split.k, basis=split.basis)
        if der_dim == 2:
            hit = _l58_sum_split(algebra)
            if hit is not None:
                return hit
    return IsoType("unrecognized", fp=fingerprint(algebra))
