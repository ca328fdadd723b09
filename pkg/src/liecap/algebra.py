"""Structure-constant Lie algebras and their elementary ideal calculus.

An algebra is a basis ``x1..xn`` plus a sparse table of bracket vectors
``[e_i, e_j]`` stored only for i < j; the i > j values follow from
antisymmetry and the diagonal is identically zero.  Everything is immutable
after construction and all arithmetic is exact.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field as dc_field

from .linalg import (
    QQ,
    DimensionMismatch,
    Matrix,
    PrimeField,
    Subspace,
    kernel_from_rows,
    _check_same_field,
)


class AlgebraError(Exception):
    pass


class NotNilpotent(AlgebraError):
    """The lower central series stabilized above zero."""


class NotAnIdeal(AlgebraError):
    pass


class LieAlgebra:
    """Finite-dimensional Lie algebra given by structure constants."""

    __slots__ = ("field", "dim", "labels", "table")

    def __init__(self, field, dim, brackets, labels=None):
        if labels is None:
            labels = tuple(f"x{i + 1}" for i in range(dim))
        else:
            labels = tuple(labels)
            if len(labels) != dim:
                raise DimensionMismatch("label count != dim")
        table = {}
        for (i, j), vec in brackets.items():
            if not (0 <= i < dim and 0 <= j < dim):
                raise DimensionMismatch(f"bracket index ({i},{j}) outside 0..{dim - 1}")
            if i == j:
                raise AlgebraError(f"diagonal bracket ({i},{i}) must be zero")
            row = {}
            for k, c in vec.items():
                c = field.coerce(c)
                if c:
                    row[k] = c
            if not row:
                continue
            if i > j:
                i, j = j, i
                row = {k: field.neg(c) for k, c in row.items()}
            if (i, j) in table:
                raise AlgebraError(f"bracket ({i},{j}) given twice")
            table[(i, j)] = row
        self.field = field
        self.dim = dim
        self.labels = labels
        self.table = table

    # -- basic bracket machinery ------------------------------------------

    def bracket_basis(self, i, j):
        """[e_i, e_j] as a sparse dict."""
        if i == j:
            return {}
        if i < j:
            return self.table.get((i, j), {})
        row = self.table.get((j, i))
        if not row:
            return {}
        neg = self.field.neg
        return {k: neg(c) for k, c in row.items()}

    def bracket_sparse(self, u, v):
        """Bracket of two sparse vectors; cost scales with their supports."""
        out = {}
        f = self.field
        add, mul, neg, zero = f.add, f.mul, f.neg, f.zero
        table = self.table
        for i, a in u.items():
            for j, b in v.items():
                if i == j:
                    continue
                row = table.get((i, j)) if i < j else table.get((j, i))
                if not row:
                    continue
                c = mul(a, b)
                if i > j:
                    c = neg(c)
                for k, w in row.items():
                    nv = add(out.get(k, zero), mul(c, w))
                    if nv:
                        out[k] = nv
                    else:
                        out.pop(k, None)
        return out

    def bracket(self, u, v):
        """Bracket of two coordinate vectors (dense sequences)."""
        if len(u) != self.dim or len(v) != self.dim:
            raise DimensionMismatch("vector length != dim")
        us = {i: self.field.coerce(c) for i, c in enumerate(u) if c}
        vs = {i: self.field.coerce(c) for i, c in enumerate(v) if c}
        out = self.bracket_sparse(us, vs)
        zero = self.field.zero
        return tuple(out.get(k, zero) for k in range(self.dim))

    def is_abelian(self):
        return not self.table

    def relabel(self, labels):
        return LieAlgebra(self.field, self.dim, self.table, labels=labels)

    def table_key(self):
        """Hashable canonical form of the structure table (labels ignored)."""
        return tuple(sorted((ij, tuple(sorted(row.items())))
                            for ij, row in self.table.items()))

    def __repr__(self):
        return f"LieAlgebra(dim {self.dim} over {self.field!r}, {len(self.table)} brackets)"


@dataclass
class ValidationReport:
    ok: bool
    failures: list = dc_field(default_factory=list)  # (i, j, k, residual dict)

    def first_failure(self):
        return self.failures[0] if self.failures else None


def validate(algebra):
    """Check the Jacobi identity on every basis triple.

    Antisymmetry and the zero diagonal hold by construction of the table, so
    the Jacobi identity is the one axiom that can fail.  Returns a report
    naming the first violating triple rather than raising.
    """
    f = algebra.field
    add, mul, zero = f.add, f.mul, f.zero
    n = algebra.dim

    def acc(target, coeff, vec):
        for k, c in vec.items():
            nv = add(target.get(k, zero), mul(coeff, c))
            if nv:
                target[k] = nv
            else:
                target.pop(k, None)

    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                total = {}
                for a, b, c in ((i, j, k), (j, k, i), (k, i, j)):
                    inner = algebra.bracket_basis(b, c)
                    for m, cm in inner.items():
                        for t, ct in algebra.bracket_basis(a, m).items():
                            acc(total, mul(cm, ct), {t: f.one})
                if total:
                    return ValidationReport(False, [(i, j, k, total)])
    return ValidationReport(True)


def direct_sum(h, k):
    """Direct sum with vanishing cross brackets; labels keep their summand."""
    _check_same_field(h.field, k.field)
    brackets = {}
    for (i, j), row in h.table.items():
        brackets[(i, j)] = dict(row)
    off = h.dim
    for (i, j), row in k.table.items():
        brackets[(i + off, j + off)] = {m + off: c for m, c in row.items()}
    labels = tuple(f"a.{s}" for s in h.labels) + tuple(f"b.{s}" for s in k.labels)
    return LieAlgebra(h.field, h.dim + k.dim, brackets, labels=labels)


# -- ideals and series ------------------------------------------------------


@dataclass(frozen=True)
class IdealSubspace:
    """A subspace of a fixed parent algebra, flagged as an ideal."""

    parent: LieAlgebra
    space: Subspace

    @property
    def dim(self):
        return self.space.dim

    def basis_vectors(self):
        return self.space.basis_vectors()


def _span(algebra, sparse_vectors):
    return Subspace._from_sparse(algebra.field, algebra.dim, sparse_vectors)


def derived_subalgebra(algebra):
    """L^2 = [L, L]: the span of all structure table vectors."""
    return IdealSubspace(algebra, _span(algebra, algebra.table.values()))


def center(algebra):
    """Z(L) = kernel of the adjoint action."""
    n = algebra.dim
    rows = {}
    for (i, j), row in algebra.table.items():
        for k, c in row.items():
            # condition indexed by (j, k): coefficient of e_k in [v, e_j]
            rows.setdefault((j, k), {})[i] = c
            rows.setdefault((i, k), {})[j] = algebra.field.neg(c)
    space = kernel_from_rows(algebra.field, n, rows.values())
    return IdealSubspace(algebra, space)


def _bracket_span(algebra, space):
    """Span of [space, L]."""
    vecs = []
    for row in space.sparse_rows():
        for j in range(algebra.dim):
            v = algebra.bracket_sparse(row, {j: algebra.field.one})
            if v:
                vecs.append(v)
    return _span(algebra, vecs)


def lower_central_series(algebra):
    """gamma_1 = L, gamma_{i+1} = [gamma_i, L], until it stops descending."""
    out = [IdealSubspace(algebra, Subspace.full(algebra.field, algebra.dim))]
    if algebra.dim == 0:
        return out
    while True:
        nxt = _bracket_span(algebra, out[-1].space)
        if nxt.dim == out[-1].dim:
            # stabilized; nilpotent iff this is zero
            if nxt.dim != 0:
                out.append(IdealSubspace(algebra, nxt))
            return out
        out.append(IdealSubspace(algebra, nxt))
        if nxt.dim == 0:
            return out


def is_nilpotent(algebra):
    return lower_central_series(algebra)[-1].dim == 0


def nilpotency_class(algebra):
    series = lower_central_series(algebra)
    if series[-1].dim != 0:
        raise NotNilpotent("lower central series stabilizes above zero")
    return len(series) - 1


def upper_central_series(algebra):
    """Z_1 = Z(L), Z_{i+1} = preimage of Z(L/Z_i), until stable."""
    f = algebra.field
    out = [center(algebra).space]
    while True:
        prev = out[-1]
        if prev.dim == algebra.dim:
            return out
        # v is in Z_{i+1} iff [v, e_j] reduces to 0 mod Z_i for every j;
        # residues are linear in v, one functional per residue coordinate
        func_rows = []
        for j in range(algebra.dim):
            per_k = {}
            for i in range(algebra.dim):
                if i == j:
                    continue
                image = algebra.bracket_basis(i, j)
                if not image:
                    continue
                residue = prev.reduce(image)
                for k, c in residue.items():
                    per_k.setdefault(k, {})[i] = c
            func_rows.extend(per_k.values())
        nxt = kernel_from_rows(f, algebra.dim, func_rows)
        if nxt.dim == prev.dim:
            return out
        out.append(nxt)


def minimal_generator_count(algebra):
    """dim L - dim L^2, the minimal generator count for nilpotent L."""
    if not is_nilpotent(algebra):
        raise NotNilpotent("generator count defined for nilpotent algebras only")
    return algebra.dim - derived_subalgebra(algebra).dim


def is_ideal(algebra, space):
    if isinstance(space, IdealSubspace):
        space = space.space
    one = algebra.field.one
    for row in space.sparse_rows():
        for j in range(algebra.dim):
            if not space.contains(algebra.bracket_sparse(row, {j: one})):
                return False
    return True


@dataclass(frozen=True)
class AlgebraMap:
    """Linear map between algebras; matrix is target_dim x source_dim."""

    source: LieAlgebra
    target: LieAlgebra
    matrix: Matrix

    def apply(self, vec):
        return self.matrix.apply(vec)

    def apply_sparse(self, vec):
        z = self.source.field.zero
        dense = [z] * self.source.dim
        for i, c in vec.items():
            dense[i] = c
        return self.matrix.apply(dense)

    def is_bracket_preserving(self):
        n = self.source.dim
        cols = [self.matrix.column(i) for i in range(n)]
        for i in range(n):
            for j in range(i + 1, n):
                lhs = self.apply_sparse(self.source.bracket_basis(i, j))
                rhs = self.target.bracket(cols[i], cols[j])
                if tuple(lhs) != tuple(rhs):
                    return False
        return True

    def image(self):
        return Subspace.from_vectors(self.target.field, self.target.dim,
                                     [self.matrix.column(i) for i in range(self.source.dim)])

    def kernel_space(self):
        from .linalg import kernel
        return kernel(self.matrix)


def quotient(algebra, ideal):
    """L/N with the canonical projection; basis = non-pivot coordinates of N."""
    space = ideal.space if isinstance(ideal, IdealSubspace) else ideal
    if space.ambient_dim != algebra.dim:
        raise DimensionMismatch("ideal lives in a different ambient space")
    if not is_ideal(algebra, space):
        raise NotAnIdeal("subspace is not an ideal")
    pivots = set(space.pivots)
    kept = [i for i in range(algebra.dim) if i not in pivots]
    pos = {c: t for t, c in enumerate(kept)}
    f = algebra.field

    def project(vec):
        residue = space.reduce(vec)
        return {pos[c]: v for c, v in residue.items()}

    brackets = {}
    for a in range(len(kept)):
        for b in range(a + 1, len(kept)):
            img = project(algebra.bracket_basis(kept[a], kept[b]))
            if img:
                brackets[(a, b)] = img
    q = LieAlgebra(f, len(kept), brackets, labels=tuple(algebra.labels[i] for i in kept))
    cols = []
    z = f.zero
    for i in range(algebra.dim):
        img = project({i: f.one})
        cols.append(tuple(img.get(t, z) for t in range(len(kept))))
    proj = AlgebraMap(algebra, q, Matrix.from_columns(f, cols, len(kept)))
    return q, proj


def subalgebra_on(algebra, space):
    """The bracket-closed subspace as a standalone algebra plus its embedding."""
    if isinstance(space, IdealSubspace):
        space = space.space
    rows = space.sparse_rows()
    brackets = {}
    for a in range(len(rows)):
        for b in range(a + 1, len(rows)):
            v = algebra.bracket_sparse(rows[a], rows[b])
            residue = space.reduce(v)
            if residue:
                raise AlgebraError("subspace is not closed under the bracket")
            coords = {t: v[p] for t, p in enumerate(space.pivots) if p in v}
            if coords:
                brackets[(a, b)] = coords
    sub = LieAlgebra(algebra.field, len(rows), brackets,
                     labels=tuple(f"w{t + 1}" for t in range(len(rows))))
    embed = AlgebraMap(sub, algebra,
                       Matrix.from_columns(algebra.field,
                                           [tuple(space.basis_vectors()[t]) for t in range(len(rows))],
                                           algebra.dim))
    return sub, embed


def transform(algebra, basis_matrix):
    """Rewrite the algebra on a new basis given by the columns of basis_matrix."""
    if basis_matrix.nrows != algebra.dim or basis_matrix.ncols != algebra.dim:
        raise DimensionMismatch("basis matrix must be dim x dim")
    inv = basis_matrix.inverse()
    n = algebra.dim
    cols = [basis_matrix.column(j) for j in range(n)]
    brackets = {}
    for a in range(n):
        for b in range(a + 1, n):
            w = algebra.bracket(cols[a], cols[b])
            coords = inv.apply(w)
            row = {k: c for k, c in enumerate(coords) if c}
            if row:
                brackets[(a, b)] = row
    return LieAlgebra(algebra.field, n, brackets, labels=algebra.labels)


# -- JSON interchange --------------------------------------------------------
# {"dim": n, "labels": [...], "field": "Q" | {"p": 5},
#  "brackets": [{"i": 1, "j": 2, "out": [{"k": 3, "c": "1"}]}]}
# with 1-based indices and exact coefficient strings.


def to_json(algebra):
    f = algebra.field
    brackets = []
    for (i, j) in sorted(algebra.table):
        row = algebra.table[(i, j)]
        out = [{"k": k + 1, "c": f.to_str(row[k])} for k in sorted(row)]
        brackets.append({"i": i + 1, "j": j + 1, "out": out})
    field_obj = "Q" if isinstance(f, type(QQ)) else {"p": f.p}
    return {"dim": algebra.dim, "labels": list(algebra.labels),
            "field": field_obj, "brackets": brackets}


def from_json(obj):
    fobj = obj.get("field", "Q")
    if fobj == "Q":
        f = QQ
    elif isinstance(fobj, dict) and "p" in fobj:
        f = PrimeField(int(fobj["p"]))
    else:
        raise AlgebraError(f"unknown field spec {fobj!r}")
    dim = int(obj["dim"])
    brackets = {}
    for item in obj.get("brackets", []):
        i, j = int(item["i"]) - 1, int(item["j"]) - 1
        row = {int(o["k"]) - 1: f.parse(str(o["c"])) for o in item["out"]}
        brackets[(i, j)] = row
    labels = obj.get("labels")
    return LieAlgebra(f, dim, brackets, labels=labels)


def dumps(algebra, **kw):
    return json.dumps(to_json(algebra), **kw)


def loads(text):
    return from_json(json.loads(text))
