"""Free nilpotent Lie algebras on Hall bases and the covers built from them.

The cover of a nilpotent algebra L with d generators and class c is
L* = F/[R,F], where F is the free nilpotent algebra F(d, c+1) and R the
kernel of the presentation F -> L.  Computing inside F(d, c+1) loses
nothing: the relation ideal contains the (c+1)st lower central term, so
brackets of R against F in any deeper truncation land in killed degrees.

From the cover come, in one sweep:
  * the multiplier as ker(L* -> L), matching the homology route,
  * the nonabelian exterior square as the derived subalgebra of L*,
  * the exterior center of L as the image of Z(L*) in L.

The span of [R, F] is generated by brackets of an R-basis against the free
generators alone: [r, [u,v]] = [[r,u],v] - [[r,v],u] and both inner brackets
stay inside R because R is an ideal, so induction on word degree closes the
span.  A one-shot closure assertion guards the implementation anyway.
"""

from __future__ import annotations

import os

from .algebra import (
    AlgebraMap,
    IdealSubspace,
    LieAlgebra,
    center,
    derived_subalgebra,
    direct_sum,
    is_nilpotent,
    minimal_generator_count,
    nilpotency_class,
    subalgebra_on,
    NotNilpotent,
)
from .catalog import abelian_algebra
from .linalg import QQ, Echelon, Matrix, Subspace


class ResourceLimit(Exception):
    """A free algebra would exceed the configured basis-word cap."""


DEFAULT_WORD_LIMIT = 5000


def _word_limit(limit):
    if limit is not None:
        return limit
    env = os.environ.get("LIECAP_RESOURCE_LIMIT")
    return int(env) if env else DEFAULT_WORD_LIMIT


class HallWord:
    """A basis word of the free Lie algebra: a generator or a bracket [u, v].

    Non-leaf words satisfy the Hall conditions for the degree-compatible
    order: u > v, and when u = [a, b] also b <= v.
    """

    __slots__ = ("gen", "left", "right", "degree", "rank")

    def __init__(self, gen=None, left=None, right=None, degree=1, rank=0):
        self.gen = gen
        self.left = left
        self.right = right
        self.degree = degree
        self.rank = rank

    def __repr__(self):
        if self.gen is not None:
            return f"x{self.gen + 1}"
        return f"[{self.left!r},{self.right!r}]"


def hall_basis(d, c, limit=None):
    """The Hall words on d generators through degree c, in canonical order."""
    if d < 0 or c < 1:
        raise ValueError("need d >= 0 and c >= 1")
    cap = _word_limit(limit)
    by_degree = [[]]
    words = []

    def push(w):
        w.rank = len(words)
        words.append(w)
        by_degree[w.degree].append(w)
        if len(words) > cap:
            raise ResourceLimit(
                f"Hall basis for d={d}, c={c} exceeds {cap} words")

    by_degree.append([])
    for g in range(d):
        push(HallWord(gen=g, degree=1))
    for n in range(2, c + 1):
        by_degree.append([])
        for dv in range(1, n // 2 + 1):
            du = n - dv
            for v in by_degree[dv]:
                for u in by_degree[du]:
                    if u.rank <= v.rank:
                        continue
                    if u.gen is None and u.right.rank > v.rank:
                        continue
                    push(HallWord(left=u, right=v, degree=n))
    return words


class FreeNilpotent:
    """F(d, c) with its Hall-word basis and integer structure constants."""

    def __init__(self, d, c, limit=None):
        self.d = d
        self.c = c
        self.words = hall_basis(d, c, limit)
        self.dim = len(self.words)
        self._word_rank = {(w.left.rank, w.right.rank): w.rank
                           for w in self.words if w.gen is None}
        self._products = {}
        table = {}
        for j, w in enumerate(self.words):
            for i in range(j):
                if self.words[i].degree + w.degree > c:
                    continue
                prod = self.product(i, j)
                if prod:
                    table[(i, j)] = dict(prod)
        self._int_table = table
        self.algebra = LieAlgebra(
            QQ, self.dim,
            {ij: {k: QQ.from_int(v) for k, v in row.items()}
             for ij, row in table.items()},
            labels=tuple(repr(w) for w in self.words))

    def algebra_over(self, field):
        if field == QQ:
            return self.algebra
        return LieAlgebra(
            field, self.dim,
            {ij: {k: field.from_int(v) for k, v in row.items()}
             for ij, row in self._int_table.items()},
            labels=self.algebra.labels)

    def product(self, i, j):
        """[w_i, w_j] expanded over the Hall basis (integer coefficients)."""
        if i == j:
            return {}
        if i > j:
            return {k: -v for k, v in self.product(j, i).items()}
        key = (i, j)
        hit = self._products.get(key)
        if hit is not None:
            return hit
        # orient as [u, v] with u the larger word
        u = self.words[j]
        v = self.words[i]
        if u.degree + v.degree > self.c:
            out = {}
        else:
            w = self._word_rank.get((j, i))
            if w is not None:
                out = {w: -1}  # [w_i, w_j] = -[u, v] = -w
            else:
                # u = [a, b] with b > v; [u,v] = [[a,v],b] + [a,[b,v]]
                a, b = u.left.rank, u.right.rank
                acc = {}
                for t, ct in self.product(i, a).items():   # [v, a] = -[a, v]
                    for s, cs in self.product(t, b).items():
                        acc[s] = acc.get(s, 0) - ct * cs    # -[..] since flipped
                for t, ct in self.product(i, b).items():   # [v, b] = -[b, v]
                    for s, cs in self.product(a, t).items():
                        acc[s] = acc.get(s, 0) - ct * cs
                out = {k: -v2 for k, v2 in acc.items() if v2}
        self._products[key] = out
        return out


_FREE_CACHE = {}


def free_nilpotent(d, c, limit=None):
    """Memoized F(d, c); degree-graded, validated in tests."""
    key = (d, c)
    hit = _FREE_CACHE.get(key)
    if hit is None:
        hit = FreeNilpotent(d, c, limit)
        _FREE_CACHE[key] = hit
    elif _word_limit(limit) < hit.dim:
        raise ResourceLimit(f"F({d},{c}) has {hit.dim} words, over the cap")
    return hit


def default_generator_lift(algebra):
    """Coordinate lifts of the non-pivot complement of L^2, in label order."""
    derived = derived_subalgebra(algebra).space
    pivots = set(derived.pivots)
    one = algebra.field.one
    return [{i: one} for i in range(algebra.dim) if i not in pivots]


class Cover:
    """The cover L* = F/[R, F] with its projection onto L.

    ``multiplier_part`` is ker(pi) = R/[R,F], central in L*, of the same
    dimension as the homology-route multiplier; ``derived_part`` carries the
    nonabelian exterior square.  Star construction is lazy so dimension-only
    sweeps skip the quotient table.
    """

    def __init__(self, algebra, lift=None, extra_class=0, limit=None):
        if not is_nilpotent(algebra):
            raise NotNilpotent("covers need a nilpotent algebra")
        self.algebra = algebra
        field = algebra.field
        d = minimal_generator_count(algebra)
        c = nilpotency_class(algebra)
        self.gen_count = d
        self.cls = c
        self.free = free_nilpotent(d, c + 1 + extra_class, limit)
        self._ffield = field
        free_alg = self.free.algebra_over(field)
        self._free_alg = free_alg
        if lift is None:
            lift = default_generator_lift(algebra)
        if len(lift) != d:
            raise ValueError(f"lift must provide {d} generators")
        lift = [{i: field.coerce(v) for i, v in g.items()} if isinstance(g, dict)
                else {i: field.coerce(v) for i, v in enumerate(g) if v}
                for g in lift]
        self.lift = lift

        # evaluate the presentation on every Hall word
        words = self.free.words
        phi = []
        for w in words:
            if w.gen is not None:
                phi.append(lift[w.gen])
            else:
                phi.append(algebra.bracket_sparse(phi[w.left.rank], phi[w.right.rank]))
        self.phi = phi

        n, N = algebra.dim, self.free.dim
        ech = Echelon(field, N)
        rows = [{} for _ in range(n)]
        for col, vec in enumerate(phi):
            for k, v in vec.items():
                rows[k][col] = v
        for r in rows:
            ech.add(r)
        ech.finalize()
        if ech.rank != n:
            raise ValueError("generator lift does not generate the algebra")
        pivot_rows = dict(ech.rows())
        pivots = ech.pivots()
        pivot_set = set(pivots)
        one = field.one
        neg = field.neg

        # kernel vectors, one per free column; columns of degree > c are
        # zero columns of the presentation, so their vectors are pure e_f
        # and form a basis of the top graded piece gamma_{>c}(F) inside R
        low_kernel = []
        self._relation_dim = N - n
        top_degree_cols = []
        for f_col in range(N):
            if f_col in pivot_set:
                continue
            if words[f_col].degree > c:
                top_degree_cols.append(f_col)
                continue
            vec = {f_col: one}
            for p in pivots:
                cf = pivot_rows[p].get(f_col)
                if cf:
                    vec[p] = neg(cf)
            low_kernel.append(vec)

        # span of [R, F]: R-basis bracketed against the generators; words in
        # degrees above c+1 of F(d, c+1+extra) can still bracket nontrivially
        # when extra_class > 0, so pure top vectors join in up to the last degree
        span = Echelon(field, N)
        gens = [{g: one} for g in range(d)]
        for r in low_kernel:
            for g in gens:
                v = free_alg.bracket_sparse(r, g)
                if v:
                    span.add(v)
        top_cap = c + extra_class  # words of degree above this bracket to zero
        for f_col in top_degree_cols:
            if words[f_col].degree > top_cap:
                continue
            for g in gens:
                v = free_alg.bracket_sparse({f_col: one}, g)
                if v:
                    span.add(v)
        span.finalize()
        self._span = span
        self.multiplier_dim = self._relation_dim - span.rank
        self.star_dim = N - span.rank

        # one-shot ideal closure assertion for the [R, F] span
        for _, row in span.rows():
            for g in gens:
                v = free_alg.bracket_sparse(row, g)
                if v and span.reduce(v):
                    raise AssertionError("[R,F] span failed ideal closure")

        self._star = None
        self._pi = None

    # -- lazy star ---------------------------------------------------------

    def _build_star(self):
        if self._star is not None:
            return
        field = self._ffield
        span = self._span
        pivot_set = set(span.pivots())
        kept = [i for i in range(self.free.dim) if i not in pivot_set]
        pos = {c: t for t, c in enumerate(kept)}
        free_alg = self._free_alg
        brackets = {}
        for a in range(len(kept)):
            for b in range(a + 1, len(kept)):
                vec = free_alg.bracket_basis(kept[a], kept[b])
                if not vec:
                    continue
                residue = span.reduce(vec)
                row = {pos[cc]: v for cc, v in residue.items()}
                if row:
                    brackets[(a, b)] = row
        star = LieAlgebra(field, len(kept), brackets,
                          labels=tuple(f"s{t + 1}" for t in range(len(kept))))
        z = field.zero
        cols = []
        for col in kept:
            img = self.phi[col]
            cols.append(tuple(img.get(k, z) for k in range(self.algebra.dim)))
        pi = AlgebraMap(star, self.algebra,
                        Matrix.from_columns(field, cols, self.algebra.dim))
        assert star.dim == self.algebra.dim + self.multiplier_dim
        self._star = star
        self._pi = pi

    @property
    def star(self):
        self._build_star()
        return self._star

    @property
    def pi(self):
        self._build_star()
        return self._pi

    @property
    def multiplier_part(self):
        """ker(pi) = R/[R,F] as a subspace of the star algebra."""
        part = self.pi.kernel_space()
        return IdealSubspace(self.star, part)

    @property
    def derived_part(self):
        return derived_subalgebra(self.star)

    def multiplier_is_central(self):
        star = self.star
        one = star.field.one
        for row in self.multiplier_part.space.sparse_rows():
            for j in range(star.dim):
                if star.bracket_sparse(row, {j: one}):
                    return False
        return True


def exterior_cover(algebra, lift=None, extra_class=0, limit=None):
    return Cover(algebra, lift=lift, extra_class=extra_class, limit=limit)


def _as_cover(x, limit=None):
    return x if isinstance(x, Cover) else Cover(x, limit=limit)


def exterior_square(algebra_or_cover, limit=None):
    """L ^ L, realized as the derived subalgebra of the cover."""
    cover = _as_cover(algebra_or_cover, limit)
    sub, _ = subalgebra_on(cover.star, cover.derived_part)
    return sub


def exterior_square_dim(algebra_or_cover, limit=None):
    """dim L^L without building the star table: dim M(L) + dim L^2."""
    cover = _as_cover(algebra_or_cover, limit)
    return cover.multiplier_dim + derived_subalgebra(cover.algebra).dim


def exterior_center(algebra_or_cover, limit=None):
    """Z^(L) = {l : l ^ l' = 0 for all l'}, the image of Z(L*) under pi."""
    cover = _as_cover(algebra_or_cover, limit)
    algebra = cover.algebra
    z_star = center(cover.star).space
    vectors = [cover.pi.apply(v) for v in z_star.basis_vectors()]
    space = Subspace.from_vectors(algebra.field, algebra.dim, vectors)
    assert center(algebra).space.contains_subspace(space)
    return IdealSubspace(algebra, space)


def diagonal_square_dim(algebra):
    """dim of the diagonal ideal: (n - m)(n - m + 1)/2 for m = dim L^2."""
    n = algebra.dim
    m = derived_subalgebra(algebra).dim
    return (n - m) * (n - m + 1) // 2


def tensor_square(algebra_or_cover, limit=None):
    """L x L = (L ^ L) + diagonal ideal; the diagonal part is abelian."""
    cover = _as_cover(algebra_or_cover, limit)
    wedge = exterior_square(cover)
    diag = abelian_algebra(diagonal_square_dim(cover.algebra), cover.algebra.field)
    return direct_sum(wedge, diag)
