"""Second homology of a Lie algebra from the exterior-power boundary maps.

The complex in low degrees is

    Lambda^3 L --d3--> Lambda^2 L --d2--> L

with d2(x ^ y) = [x, y] and d3(x ^ y ^ z) = [x,y]^z - [x,z]^y + [y,z]^x;
d2 . d3 vanishing is a rewrite of the Jacobi identity.  The multiplier is
ker d2 / im d3, reported with an explicit basis so maps induced by central
quotients can be written down as matrices.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import IdealSubspace, center, derived_subalgebra, quotient
from .linalg import Echelon, Matrix, Subspace, express_in


class NotCentral(Exception):
    pass


@dataclass(frozen=True)
class ExteriorBasis:
    """Lexicographic coordinates for Lambda^2 and Lambda^3 of F^n."""

    n: int
    pairs: tuple
    triples: tuple

    @classmethod
    def for_dim(cls, n):
        pairs = tuple((i, j) for i in range(n) for j in range(i + 1, n))
        triples = tuple((i, j, k) for i in range(n)
                        for j in range(i + 1, n) for k in range(j + 1, n))
        return cls(n, pairs, triples)

    def pair_index(self, i, j):
        # index of (i, j) with i < j in lexicographic order
        return self._pair_map()[(i, j)]

    def _pair_map(self):
        # tiny, rebuilt on demand; instances are throwaway
        return {p: t for t, p in enumerate(self.pairs)}


def _wedge_entry(field, out, pmap, a, b, coeff):
    """Accumulate coeff * (e_a ^ e_b) into sparse Lambda^2 coords."""
    if a == b or not coeff:
        return
    if a > b:
        a, b = b, a
        coeff = field.neg(coeff)
    idx = pmap[(a, b)]
    nv = field.add(out.get(idx, field.zero), coeff)
    if nv:
        out[idx] = nv
    else:
        out.pop(idx, None)


def ce_d2(algebra):
    """Matrix of Lambda^2 L -> L, e_i ^ e_j -> [e_i, e_j]."""
    ext = ExteriorBasis.for_dim(algebra.dim)
    cols = []
    z = algebra.field.zero
    for (i, j) in ext.pairs:
        row = algebra.bracket_basis(i, j)
        cols.append(tuple(row.get(k, z) for k in range(algebra.dim)))
    return Matrix.from_columns(algebra.field, cols, algebra.dim)


def _d3_column(algebra, pmap, triple):
    f = algebra.field
    i, j, k = triple
    out = {}
    for (a, b, c, sign) in ((i, j, k, 1), (i, k, j, -1), (j, k, i, 1)):
        row = algebra.bracket_basis(a, b)
        for m, cm in row.items():
            _wedge_entry(f, out, pmap, m, c, cm if sign > 0 else f.neg(cm))
    return out


def ce_d3(algebra):
    """Matrix of Lambda^3 L -> Lambda^2 L; satisfies d2 @ d3 = 0 exactly."""
    ext = ExteriorBasis.for_dim(algebra.dim)
    pmap = ext._pair_map()
    z = algebra.field.zero
    cols = []
    for triple in ext.triples:
        col = _d3_column(algebra, pmap, triple)
        cols.append(tuple(col.get(t, z) for t in range(len(ext.pairs))))
    return Matrix.from_columns(algebra.field, cols, len(ext.pairs))


@dataclass(frozen=True)
class MultiplierResult:
    """dim and a basis for ker d2 modulo im d3, in Lambda^2 coordinates.

    The basis spans a complement of im d3 inside ker d2, chosen by pivoting
    in lexicographic Lambda^2 order so induced-map matrices are reproducible.
    The multiplier is an abelian Lie algebra of this dimension.
    """

    dim: int
    basis: Subspace
    image: Subspace   # im d3
    cycles: Subspace  # ker d2


def _d3_image(algebra):
    ext = ExteriorBasis.for_dim(algebra.dim)
    pmap = ext._pair_map()
    width = len(ext.pairs)
    vecs = [_d3_column(algebra, pmap, t) for t in ext.triples]
    return Subspace._from_sparse(algebra.field, width, vecs)


def schur_multiplier(algebra):
    from .linalg import kernel
    cycles = kernel(ce_d2(algebra))
    image = _d3_image(algebra)
    assert cycles.contains_subspace(image), "d2 . d3 != 0"
    ech = Echelon(algebra.field, cycles.ambient_dim)
    for row in image.sparse_rows():
        ech.add(row)
    chosen = []
    for row in cycles.sparse_rows():
        if ech.add(dict(row)):
            chosen.append(row)
    basis = Subspace._from_sparse(algebra.field, cycles.ambient_dim, chosen)
    dim = cycles.dim - image.dim
    assert basis.dim == dim
    return MultiplierResult(dim, basis, image, cycles)


def multiplier_dim(algebra):
    return schur_multiplier(algebra).dim


def _lambda2_map(field, matrix, n_src, n_tgt):
    """Columns of Lambda^2 of a linear map, as sparse target coordinates."""
    src = ExteriorBasis.for_dim(n_src)
    tgt = ExteriorBasis.for_dim(n_tgt)
    tmap = tgt._pair_map()
    cols = {}
    for t, (i, j) in enumerate(src.pairs):
        ci = matrix.column(i)
        cj = matrix.column(j)
        out = {}
        for a in range(n_tgt):
            for b in range(a + 1, n_tgt):
                c = field.sub(field.mul(ci[a], cj[b]), field.mul(ci[b], cj[a]))
                _wedge_entry(field, out, tmap, a, b, c)
        cols[t] = out
    return cols


def induced_multiplier_map(algebra, ideal):
    """Matrix of M(L) -> M(L/N) for a central ideal N.

    Columns are indexed by the multiplier basis of L, rows by that of L/N;
    the kernel dimension does not depend on either basis choice.
    """
    space = ideal.space if isinstance(ideal, IdealSubspace) else ideal
    if not center(algebra).space.contains_subspace(space):
        raise NotCentral("ideal is not central")
    q, proj = quotient(algebra, space)
    m_l = schur_multiplier(algebra)
    m_q = schur_multiplier(q)
    lam2 = _lambda2_map(algebra.field, proj.matrix, algebra.dim, q.dim)
    width = len(ExteriorBasis.for_dim(q.dim).pairs)
    ref_rows = m_q.image.sparse_rows() + m_q.basis.sparse_rows()
    n_im = m_q.image.dim
    f = algebra.field
    cols = []
    src_pairs = ExteriorBasis.for_dim(algebra.dim).pairs
    for v in m_l.basis.sparse_rows():
        out = {}
        for t, c in v.items():
            for idx, w in lam2[t].items():
                nv = f.add(out.get(idx, f.zero), f.mul(c, w))
                if nv:
                    out[idx] = nv
                else:
                    out.pop(idx, None)
        if ref_rows:
            coeffs = express_in(f, width, ref_rows, out)
            assert coeffs is not None, "image of a cycle left ker d2"
            cols.append(tuple(coeffs[n_im:]))
        else:
            assert not out
            cols.append(())
    return Matrix.from_columns(f, cols, m_q.dim)


def induced_map_injective(algebra, ideal):
    from .linalg import rank
    m = induced_multiplier_map(algebra, ideal)
    return rank(m) == m.ncols


def kunneth_exterior_dim(h, k):
    """dim of (H + K) ^ (H + K) from the summand squares and abelianizations.

    The square dims come from the homology route: dim X^X = dim M(X) + dim X^2.
    """
    dh = derived_subalgebra(h).dim
    dk = derived_subalgebra(k).dim
    wedge_h = multiplier_dim(h) + dh
    wedge_k = multiplier_dim(k) + dk
    return wedge_h + wedge_k + (h.dim - dh) * (k.dim - dk)


def kunneth_tensor_dim(h, k):
    """Four-term analogue: summand tensor squares plus both cross terms."""
    dh = derived_subalgebra(h).dim
    dk = derived_subalgebra(k).dim
    tensor_h = multiplier_dim(h) + dh + (h.dim - dh) * (h.dim - dh + 1) // 2
    tensor_k = multiplier_dim(k) + dk + (k.dim - dk) * (k.dim - dk + 1) // 2
    return tensor_h + tensor_k + 2 * (h.dim - dh) * (k.dim - dk)
