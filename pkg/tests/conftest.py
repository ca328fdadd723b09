from fractions import Fraction

from liecap.algebra import LieAlgebra
from liecap.homology import ExteriorBasis, ce_d3
from liecap.linalg import QQ, kernel_from_rows


def central_extension(algebra, kdim, rng):
    """Random central extension by A(kdim) via a random 2-cocycle.

    Cocycles are combinations of a kernel basis of the transposed degree-3
    boundary map, which is exactly the condition for the extended table to
    satisfy the Jacobi identity.
    """
    m = ce_d3(algebra)
    rows = [{i: v for i, v in enumerate(m.column(j)) if v} for j in range(m.ncols)]
    cocycles = kernel_from_rows(QQ, m.nrows, rows).sparse_rows()
    ext = ExteriorBasis.for_dim(algebra.dim)
    brackets = {ij: dict(row) for ij, row in algebra.table.items()}
    for s in range(kdim):
        f = {}
        for r in cocycles:
            c = rng.randint(-2, 2)
            if c:
                for col, v in r.items():
                    f[col] = f.get(col, Fraction(0)) + c * v
        for t, val in f.items():
            if val:
                i, j = ext.pairs[t]
                row = dict(brackets.get((i, j), {}))
                row[algebra.dim + s] = row.get(algebra.dim + s, Fraction(0)) + val
                brackets[(i, j)] = row
    return LieAlgebra(QQ, algebra.dim + kdim, brackets)
