"""Exact linear algebra over the rationals and odd prime fields.

Values are plain ``fractions.Fraction`` over Q and canonical residues
``0..p-1`` over GF(p); there is no per-element wrapper type.  Row reduction
over Q is fraction-free (integer rows with gcd stripping), so entries stay
small during elimination and results are exact bit for bit.

Subspaces are stored in reduced row echelon form, which makes equality
structural: two equal subspaces have identical basis matrices.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, isqrt, lcm


class LinalgError(Exception):
    pass


class MixedFields(LinalgError):
    """Operands disagree on their ground field."""


class DimensionMismatch(LinalgError):
    pass


class NotContained(LinalgError):
    """quotient_coords was asked for U subset W but U is not inside W."""


# ---------------------------------------------------------------------------
# ground fields


class RationalField:
    """The field Q; scalars are Fraction instances."""

    char = 0

    def __repr__(self):
        return "Q"

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("RationalField")

    @property
    def zero(self):
        return Fraction(0)

    @property
    def one(self):
        return Fraction(1)

    def from_int(self, a):
        return Fraction(a)

    def coerce(self, a):
        if isinstance(a, Fraction):
            return a
        if isinstance(a, int):
            return Fraction(a)
        raise TypeError(f"cannot coerce {a!r} into Q")

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        return 1 / a

    def div(self, a, b):
        return a / b

    def is_square(self, a):
        if a < 0:
            return False
        n, d = a.numerator, a.denominator
        return isqrt(n) ** 2 == n and isqrt(d) ** 2 == d

    def parse(self, s):
        return Fraction(s)

    def to_str(self, a):
        return str(a)


class PrimeField:
    """GF(p) for an odd prime p >= 3; scalars are ints in 0..p-1."""

    def __init__(self, p):
        if not isinstance(p, int) or p < 3 or p % 2 == 0:
            raise ValueError(f"prime field needs an odd prime >= 3, got {p!r}")
        d = 3
        while d * d <= p:
            if p % d == 0:
                raise ValueError(f"{p} is not prime")
            d += 2
        self.p = p
        self.char = p

    def __repr__(self):
        return f"GF({self.p})"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("PrimeField", self.p))

    @property
    def zero(self):
        return 0

    @property
    def one(self):
        return 1

    def from_int(self, a):
        return a % self.p

    def coerce(self, a):
        if isinstance(a, int):
            return a % self.p
        if isinstance(a, Fraction):
            return a.numerator % self.p * self.inv(a.denominator % self.p) % self.p
        raise TypeError(f"cannot coerce {a!r} into GF({self.p})")

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return a * b % self.p

    def neg(self, a):
        return -a % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of 0 in prime field")
        return pow(a, self.p - 2, self.p)

    def div(self, a, b):
        return a * self.inv(b) % self.p

    def is_square(self, a):
        a %= self.p
        return a != 0 and pow(a, (self.p - 1) // 2, self.p) == 1

    def parse(self, s):
        return self.coerce(Fraction(s))

    def to_str(self, a):
        return str(a % self.p)


QQ = RationalField()


def _check_same_field(a, b):
    if a != b:
        raise MixedFields(f"mixed ground fields {a!r} and {b!r}")


# ---------------------------------------------------------------------------
# incremental echelon engine (shared by rref / kernel / Subspace)


class Echelon:
    """Incremental row echelon structure over a fixed field.

    Rows are sparse ``{column: value}`` dicts.  Over Q the working rows are
    integer vectors (denominators cleared on entry, gcd stripped after each
    combination); ``finalize`` back-substitutes and converts to Fractions
    with unit pivots, yielding the canonical RREF basis of the row space.

    Rows may carry a tag vector (used to express later vectors in terms of
    the inserted rows); tags ride along through every row operation.
    """

    def __init__(self, field, width, tag_width=0):
        self.field = field
        self.width = width
        self.tag_width = tag_width
        self._rows = {}  # pivot column -> (row dict, tag dict)
        self._order = []  # pivot columns in insertion order
        self._final = False
        self._sorted_pivots = None

    @property
    def rank(self):
        return len(self._rows)

    def pivots(self):
        return tuple(sorted(self._rows))

    def add(self, row, tag=None):
        """Insert a vector; returns True if it enlarged the row space."""
        if self._final:
            raise RuntimeError("echelon already finalized")
        row, tag = self._prepare(row, tag)
        return self._insert(row, tag)

    def _prepare(self, row, tag):
        tag = dict(tag) if tag else {}
        if isinstance(self.field, RationalField):
            den = 1
            for v in row.values():
                if isinstance(v, Fraction):
                    den = lcm(den, v.denominator)
            for v in tag.values():
                if isinstance(v, Fraction):
                    den = lcm(den, v.denominator)
            out = {}
            for c, v in row.items():
                iv = int(v * den) if isinstance(v, Fraction) else v * den
                if iv:
                    out[c] = iv
            itag = {}
            for c, v in tag.items():
                iv = int(v * den) if isinstance(v, Fraction) else v * den
                if iv:
                    itag[c] = iv
            return out, itag
        p = self.field.p
        out = {}
        for c, v in row.items():
            iv = self.field.coerce(v)
            if iv:
                out[c] = iv
        itag = {}
        for c, v in tag.items():
            iv = self.field.coerce(v)
            if iv:
                itag[c] = iv
        return out, itag

    def _insert(self, row, tag):
        rational = isinstance(self.field, RationalField)
        while row:
            lead = min(row)
            hit = self._rows.get(lead)
            if hit is None:
                if rational:
                    g = 0
                    for v in row.values():
                        g = gcd(g, v)
                    for v in tag.values():
                        g = gcd(g, v)
                    if row[lead] < 0:
                        g = -g
                    if g not in (0, 1):
                        row = {c: v // g for c, v in row.items()}
                        tag = {c: v // g for c, v in tag.items()}
                else:
                    inv = self.field.inv(row[lead])
                    if inv != 1:
                        p = self.field.p
                        row = {c: v * inv % p for c, v in row.items()}
                        tag = {c: v * inv % p for c, v in tag.items()}
                self._rows[lead] = (row, tag)
                self._order.append(lead)
                return True
            prow, ptag = hit
            if rational:
                a, b = prow[lead], row[lead]
                g = gcd(a, b)
                a //= g
                b //= g
                row = _int_combine(row, a, prow, b)
                tag = _int_combine(tag, a, ptag, b)
                g = 0
                for v in row.values():
                    g = gcd(g, v)
                for v in tag.values():
                    g = gcd(g, v)
                if g > 1:
                    row = {c: v // g for c, v in row.items()}
                    tag = {c: v // g for c, v in tag.items()}
            else:
                p = self.field.p
                f = row[lead] * self.field.inv(prow[lead]) % p
                row = _mod_combine(row, prow, f, p)
                tag = _mod_combine(tag, ptag, f, p)
        return False

    def finalize(self):
        """Back-substitute and normalize pivots to 1 (canonical RREF)."""
        if self._final:
            return
        pivots = sorted(self._rows)
        rational = isinstance(self.field, RationalField)
        for idx in range(len(pivots) - 1, -1, -1):
            p0 = pivots[idx]
            row, tag = self._rows[p0]
            for q in pivots[idx + 1:]:
                if q not in row:
                    continue
                qrow, qtag = self._rows[q]
                if rational:
                    a, b = qrow[q], row[q]
                    g = gcd(a, b)
                    a //= g
                    b //= g
                    row = _int_combine(row, a, qrow, b)
                    tag = _int_combine(tag, a, qtag, b)
                    g = 0
                    for v in row.values():
                        g = gcd(g, v)
                    for v in tag.values():
                        g = gcd(g, v)
                    if row[p0] < 0:
                        g = -g
                    if g not in (0, 1):
                        row = {c: v // g for c, v in row.items()}
                        tag = {c: v // g for c, v in tag.items()}
                else:
                    pp = self.field.p
                    f = row[q] * self.field.inv(qrow[q]) % pp
                    row = _mod_combine(row, qrow, f, pp)
                    tag = _mod_combine(tag, qtag, f, pp)
            self._rows[p0] = (row, tag)
        out = {}
        for p0 in pivots:
            row, tag = self._rows[p0]
            lead = row[p0]
            if rational:
                frow = {c: Fraction(v, lead) for c, v in row.items()}
                ftag = {c: Fraction(v, lead) for c, v in tag.items()}
            else:
                pp = self.field.p
                inv = self.field.inv(lead)
                frow = {c: v * inv % pp for c, v in row.items()}
                ftag = {c: v * inv % pp for c, v in tag.items()}
            out[p0] = (frow, ftag)
        self._rows = out
        self._sorted_pivots = pivots
        self._final = True

    def reduce(self, vec, want_tag=False):
        """Residue of vec modulo the row space (requires finalize).

        The residue is the unique representative supported off the pivot
        columns.  With ``want_tag`` also returns t such that
        vec = -sum(t_i * row_i) + residue.
        """
        if not self._final:
            self.finalize()
        zero = self.field.zero
        v = {c: x for c, x in vec.items() if x != zero}
        tag = {}
        sub = self.field.sub
        mul = self.field.mul
        for p0 in self._sorted_pivots:
            c = v.get(p0)
            if not c:
                continue
            row, rtag = self._rows[p0]
            for col, val in row.items():
                nv = sub(v.get(col, zero), mul(c, val))
                if nv:
                    v[col] = nv
                else:
                    v.pop(col, None)
            for col, val in rtag.items():
                nv = sub(tag.get(col, zero), mul(c, val))
                if nv:
                    tag[col] = nv
                else:
                    tag.pop(col, None)
        if want_tag:
            return v, tag
        return v

    def rows(self):
        """Canonical RREF rows as (pivot, row dict) pairs, pivots ascending."""
        if not self._final:
            self.finalize()
        return [(p, self._rows[p][0]) for p in self._sorted_pivots]

    def row_tags(self):
        if not self._final:
            self.finalize()
        return [(p, self._rows[p][1]) for p in self._sorted_pivots]


def _int_combine(row, a, other, b):
    """a*row - b*other for integer sparse rows."""
    out = {}
    for c, v in row.items():
        out[c] = a * v
    for c, v in other.items():
        nv = out.get(c, 0) - b * v
        if nv:
            out[c] = nv
        else:
            out.pop(c, None)
    return out


def _mod_combine(row, other, f, p):
    """row - f*other mod p."""
    out = dict(row)
    for c, v in other.items():
        nv = (out.get(c, 0) - f * v) % p
        if nv:
            out[c] = nv
        else:
            out.pop(c, None)
    return out


# ---------------------------------------------------------------------------
# dense matrices


class Matrix:
    """Immutable dense matrix over a fixed field."""

    __slots__ = ("field", "nrows", "ncols", "rows")

    def __init__(self, field, rows, ncols=None):
        rows = [tuple(field.coerce(v) for v in r) for r in rows]
        if rows:
            ncols = len(rows[0])
            for r in rows:
                if len(r) != ncols:
                    raise DimensionMismatch("ragged rows")
        elif ncols is None:
            raise DimensionMismatch("empty matrix needs explicit column count")
        self.field = field
        self.nrows = len(rows)
        self.ncols = ncols
        self.rows = tuple(rows)

    @classmethod
    def zeros(cls, field, m, n):
        z = field.zero
        return cls(field, [[z] * n for _ in range(m)], ncols=n)

    @classmethod
    def identity(cls, field, n):
        z, o = field.zero, field.one
        return cls(field, [[o if i == j else z for j in range(n)] for i in range(n)], ncols=n)

    @classmethod
    def from_columns(cls, field, cols, nrows):
        cols = list(cols)
        z = field.zero
        return cls(field, [[col[i] if i < len(col) else z for col in cols] for i in range(nrows)],
                   ncols=len(cols))

    def column(self, j):
        return tuple(r[j] for r in self.rows)

    def transpose(self):
        return Matrix(self.field, [self.column(j) for j in range(self.ncols)], ncols=self.nrows)

    def apply(self, vec):
        if len(vec) != self.ncols:
            raise DimensionMismatch(f"vector length {len(vec)} vs {self.ncols} columns")
        mul, add = self.field.mul, self.field.add
        out = []
        for r in self.rows:
            acc = self.field.zero
            for a, b in zip(r, vec):
                if a and b:
                    acc = add(acc, mul(a, b))
            out.append(acc)
        return tuple(out)

    def __matmul__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        _check_same_field(self.field, other.field)
        if self.ncols != other.nrows:
            raise DimensionMismatch("inner dimensions disagree")
        cols = [self.apply(other.column(j)) for j in range(other.ncols)]
        return Matrix.from_columns(self.field, cols, self.nrows)

    def __eq__(self, other):
        return (isinstance(other, Matrix) and other.field == self.field
                and other.rows == self.rows and other.ncols == self.ncols)

    def __repr__(self):
        return f"Matrix({self.field!r}, {self.nrows}x{self.ncols})"

    def is_zero(self):
        z = self.field.zero
        return all(v == z for r in self.rows for v in r)

    def inverse(self):
        if self.nrows != self.ncols:
            raise DimensionMismatch("inverse of a non-square matrix")
        n = self.nrows
        ech = Echelon(self.field, n, tag_width=n)
        for i, r in enumerate(self.rows):
            row = {j: v for j, v in enumerate(r) if v}
            if not ech.add(row, {i: self.field.one}):
                raise LinalgError("matrix is singular")
        ech.finalize()
        z = self.field.zero
        # RREF row with pivot j is e_j; its tag expresses e_j over the input
        # rows, i.e. it is row j of the inverse
        tag_by_pivot = {p: t for p, t in ech.row_tags()}
        inv_rows = [[tag_by_pivot[j].get(i, z) for i in range(n)] for j in range(n)]
        return Matrix(self.field, inv_rows, ncols=n)


def _dense_to_sparse(row):
    return {j: v for j, v in enumerate(row) if v}


def _sparse_to_dense(row, width, zero):
    return tuple(row.get(j, zero) for j in range(width))


def rref(m):
    """Reduced row echelon form: returns (rref matrix, pivot columns, rank).

    The result has the same shape as the input, zero rows trailing.
    """
    ech = Echelon(m.field, m.ncols)
    for r in m.rows:
        ech.add(_dense_to_sparse(r))
    ech.finalize()
    z = m.field.zero
    rows = [_sparse_to_dense(row, m.ncols, z) for _, row in ech.rows()]
    while len(rows) < m.nrows:
        rows.append(tuple([z] * m.ncols))
    return Matrix(m.field, rows, ncols=m.ncols), ech.pivots(), ech.rank


def rank(m):
    return rref(m)[2]


def kernel_from_rows(field, width, rows):
    """Kernel of the linear map given by stacked row functionals."""
    ech = Echelon(field, width)
    for r in rows:
        ech.add(dict(r))
    ech.finalize()
    pivot_rows = dict(ech.rows())
    pivots = ech.pivots()
    pivot_set = set(pivots)
    basis = []
    one = field.one
    for f in range(width):
        if f in pivot_set:
            continue
        vec = {f: one}
        for p in pivots:
            c = pivot_rows[p].get(f)
            if c:
                vec[p] = field.neg(c)
        basis.append(vec)
    return Subspace._from_sparse(field, width, basis)


def kernel(m):
    """Right kernel {v : m v = 0} as a Subspace of the column space."""
    return kernel_from_rows(m.field, m.ncols, (_dense_to_sparse(r) for r in m.rows))


# ---------------------------------------------------------------------------
# subspaces


class Subspace:
    """A subspace of F^n held as canonical RREF basis rows."""

    __slots__ = ("field", "ambient_dim", "_rows", "pivots")

    def __init__(self, field, ambient_dim, rows, pivots, _internal=False):
        if not _internal:
            raise RuntimeError("use Subspace.from_vectors / zero / full")
        self.field = field
        self.ambient_dim = ambient_dim
        self._rows = rows            # tuple of sparse row dicts, pivot order
        self.pivots = pivots         # ascending pivot columns

    @classmethod
    def _from_sparse(cls, field, n, vectors):
        ech = Echelon(field, n)
        for v in vectors:
            ech.add(dict(v))
        ech.finalize()
        rows = tuple(row for _, row in ech.rows())
        return cls(field, n, rows, ech.pivots(), _internal=True)

    @classmethod
    def from_vectors(cls, field, n, vectors):
        sparse = []
        for v in vectors:
            if isinstance(v, dict):
                sparse.append({j: field.coerce(x) for j, x in v.items()})
            else:
                if len(v) != n:
                    raise DimensionMismatch(f"vector length {len(v)} in ambient {n}")
                sparse.append({j: field.coerce(x) for j, x in enumerate(v) if x})
        return cls._from_sparse(field, n, sparse)

    @classmethod
    def zero(cls, field, n):
        return cls(field, n, (), (), _internal=True)

    @classmethod
    def full(cls, field, n):
        one = field.one
        rows = tuple({i: one} for i in range(n))
        return cls(field, n, rows, tuple(range(n)), _internal=True)

    @property
    def dim(self):
        return len(self._rows)

    def basis_vectors(self):
        z = self.field.zero
        return [_sparse_to_dense(r, self.ambient_dim, z) for r in self._rows]

    def sparse_rows(self):
        return list(self._rows)

    def basis_matrix(self):
        m = Matrix(self.field, self.basis_vectors(), ncols=self.ambient_dim)
        return m

    def reduce(self, vec):
        """Residue of vec modulo this subspace, as a sparse dict."""
        if isinstance(vec, dict):
            v = {j: self.field.coerce(x) for j, x in vec.items() if x}
        else:
            if len(vec) != self.ambient_dim:
                raise DimensionMismatch("vector/ambient mismatch")
            v = {j: self.field.coerce(x) for j, x in enumerate(vec) if x}
        sub, mul, zero = self.field.sub, self.field.mul, self.field.zero
        for row, p in zip(self._rows, self.pivots):
            c = v.get(p)
            if not c:
                continue
            for col, val in row.items():
                nv = sub(v.get(col, zero), mul(c, val))
                if nv:
                    v[col] = nv
                else:
                    v.pop(col, None)
        return v

    def contains(self, vec):
        return not self.reduce(vec)

    def contains_subspace(self, other):
        self._check_compatible(other)
        return all(not self.reduce(r) for r in other._rows)

    def coords(self, vec):
        """Coefficients of vec on the RREF basis; NotContained if outside."""
        v = self.reduce(vec)
        if v:
            raise NotContained("vector outside subspace")
        if isinstance(vec, dict):
            dense = vec
            return tuple(self.field.coerce(dense.get(p, self.field.zero)) for p in self.pivots)
        return tuple(self.field.coerce(vec[p]) for p in self.pivots)

    def _check_compatible(self, other):
        _check_same_field(self.field, other.field)
        if other.ambient_dim != self.ambient_dim:
            raise DimensionMismatch("ambient dimensions disagree")

    def __eq__(self, other):
        return (isinstance(other, Subspace) and other.field == self.field
                and other.ambient_dim == self.ambient_dim
                and other.pivots == self.pivots and other._rows == self._rows)

    def __repr__(self):
        return f"Subspace(dim {self.dim} of F^{self.ambient_dim})"


def subspace_sum(u, v):
    u._check_compatible(v)
    return Subspace._from_sparse(u.field, u.ambient_dim, list(u._rows) + list(v._rows))


def subspace_intersect(u, v):
    """U cap V via left-kernel coefficients on stacked bases."""
    u._check_compatible(v)
    urows = u.sparse_rows()
    vrows = v.sparse_rows()
    stacked = urows + vrows
    if not urows or not vrows:
        return Subspace.zero(u.field, u.ambient_dim)
    # coefficient vectors (a, b) with a*U + b*V = 0 give points a*U of the intersection
    cols = {}
    for i, row in enumerate(stacked):
        for c, val in row.items():
            cols.setdefault(c, {})[i] = val
    coeff_kernel = kernel_from_rows(u.field, len(stacked), cols.values())
    vectors = []
    mul, add, zero = u.field.mul, u.field.add, u.field.zero
    for coeff in coeff_kernel.sparse_rows():
        vec = {}
        for i, a in coeff.items():
            if i >= len(urows):
                continue
            for c, val in urows[i].items():
                nv = add(vec.get(c, zero), mul(a, val))
                if nv:
                    vec[c] = nv
                else:
                    vec.pop(c, None)
        if vec:
            vectors.append(vec)
    return Subspace._from_sparse(u.field, u.ambient_dim, vectors)


class QuotientCoords:
    """Coordinate map for W/U: sends w in W to its complement coordinates."""

    def __init__(self, u, w):
        u._check_compatible(w)
        if not w.contains_subspace(u):
            raise NotContained("U is not contained in W")
        self.field = u.field
        self.ambient_dim = u.ambient_dim
        self.dim = w.dim - u.dim
        self._ech = Echelon(u.field, u.ambient_dim, tag_width=self.dim)
        for row in u.sparse_rows():
            self._ech.add(row)
        t = 0
        self.complement = []
        for row in w.sparse_rows():
            if self._ech.add(row, {t: u.field.one}):
                self.complement.append(row)
                t += 1
        self._ech.finalize()

    def coords(self, vec):
        if not isinstance(vec, dict):
            vec = {j: v for j, v in enumerate(vec) if v}
        residue, tag = self._ech.reduce(vec, want_tag=True)
        if residue:
            raise NotContained("vector outside W")
        z = self.field.zero
        neg = self.field.neg
        return tuple(neg(tag[i]) if i in tag else z for i in range(self.dim))


def quotient_coords(u, w):
    return QuotientCoords(u, w)


def express_in(field, width, rows, target):
    """Coefficients writing target as a combination of the given rows.

    Rows must be independent; returns None when target is outside their span.
    """
    ech = Echelon(field, width, tag_width=len(rows))
    for i, row in enumerate(rows):
        if not isinstance(row, dict):
            row = {j: v for j, v in enumerate(row) if v}
        if not ech.add(row, {i: field.one}):
            raise LinalgError("express_in needs independent rows")
    ech.finalize()
    if not isinstance(target, dict):
        target = {j: v for j, v in enumerate(target) if v}
    residue, tag = ech.reduce(target, want_tag=True)
    if residue:
        return None
    z = field.zero
    neg = field.neg
    return tuple(neg(tag[i]) if i in tag else z for i in range(len(rows)))
