"""Explicit induced modules for GL_n over F_p (n <= 3).

V(lam) is realized as polynomial functions on GL_n spanned by products of
top-justified minors times a determinant twist: the level-i factors are
the minors on rows 1..i and an i-element column set, taken with
multiplicity lam_i - lam_{i+1}, and the twist is det^{lam_n}.  Each such
product transforms on the left by lower-triangular matrices through the
character lam, and is an eigenvector for right translation by the
diagonal torus; the stored weight of a basis vector is its plain
right-translation eigenvalue f(X t) = chi(t) f(X).

Right translation by a finite matrix group acts through Cauchy-Binet
expansions on the minor coordinates, which keeps all linear algebra
sparse and exact.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .cones import Weight
from .errors import (
    EmptyModuleError,
    GuardExceededError,
    TheoremViolationError,
)
from .fplinalg import fp_nullspace
from .fpoly import FpPolynomial, _grlex_key, minor
from .gfq import field_for, gf_matrix_rank

GROUP_ORDER_GUARD = 10 ** 4
MODULE_RANK_GUARD = 3


# ---------------------------------------------------------------------------
# the finite group GL_n(F_p)

def group_order(n, p):
    q = p ** n
    order = 1
    for i in range(n):
        order *= q - p ** i
    return order


@lru_cache(maxsize=None)
def group_elements(n, p):
    """All invertible n x n matrices over F_p, as tuples of row tuples."""
    if group_order(n, p) > GROUP_ORDER_GUARD:
        raise GuardExceededError(
            "|GL_%d(F_%d)| = %d exceeds the group guard %d"
            % (n, p, group_order(n, p), GROUP_ORDER_GUARD))
    out = []
    for flat in itertools.product(range(p), repeat=n * n):
        mat = tuple(flat[i * n:(i + 1) * n] for i in range(n))
        if _det_mod(mat, p):
            out.append(mat)
    assert len(out) == group_order(n, p)
    return tuple(out)


def _det_mod(mat, p):
    n = len(mat)
    m = [list(r) for r in mat]
    det = 1
    for c in range(n):
        piv = next((i for i in range(c, n) if m[i][c] % p), None)
        if piv is None:
            return 0
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            det = -det
        det = det * m[c][c] % p
        inv = pow(m[c][c], p - 2, p)
        for i in range(c + 1, n):
            if m[i][c]:
                f = inv * m[i][c] % p
                m[i] = [(x - f * y) % p for x, y in zip(m[i], m[c])]
    return det % p


def _mat_mul_mod(a, b, p):
    n = len(a)
    return tuple(tuple(sum(a[i][k] * b[k][j] for k in range(n)) % p
                       for j in range(n)) for i in range(n))


@lru_cache(maxsize=None)
def group_generators(n, p):
    """A small generating set, with an exact closure certificate.

    The closure under multiplication is enumerated and compared against
    the full group, so downstream fixed-space computations may use the
    generators with no sufficiency caveat.
    """
    ident = tuple(tuple(int(i == j) for j in range(n)) for i in range(n))
    gens = []
    if n > 1:
        transvection = tuple(tuple(
            1 if i == j else (1 if (i, j) == (0, 1) else 0)
            for j in range(n)) for i in range(n))
        gens.append(transvection)
        cycle = tuple(tuple(int(j == (i + 1) % n) for j in range(n))
                      for i in range(n))
        gens.append(cycle)
    if p > 2:
        prim = _primitive_root(p)
        diag = tuple(tuple(
            (prim if i == 0 else 1) if i == j else 0
            for j in range(n)) for i in range(n))
        gens.append(diag)
    closure = {ident}
    frontier = [ident]
    while frontier:
        new = []
        for m in frontier:
            for g in gens:
                x = _mat_mul_mod(g, m, p)
                if x not in closure:
                    closure.add(x)
                    new.append(x)
        frontier = new
    if len(closure) != group_order(n, p):
        raise TheoremViolationError(
            "generator closure has %d elements, expected %d"
            % (len(closure), group_order(n, p)))
    return tuple(gens)


def _primitive_root(p):
    for g in range(2, p):
        seen, x = set(), 1
        for _ in range(p - 1):
            x = x * g % p
            seen.add(x)
        if len(seen) == p - 1:
            return g
    return 1


# ---------------------------------------------------------------------------
# minor coordinates

@lru_cache(maxsize=None)
def _minor_poly(n, p, level, cols):
    return minor(n, p, range(1, level + 1), cols)


@lru_cache(maxsize=None)
def _det_poly(n, p):
    return _minor_poly(n, p, n, tuple(range(1, n + 1)))


def _minor_weight(n, cols):
    return Weight(1 if j + 1 in cols else 0 for j in range(n))


def _minor_value_table(n, p, point, field):
    """Values of every level minor and det at a GF point (matrix of GF
    elements given as row tuples)."""
    table = {}
    for level in range(1, n):
        for cols in itertools.combinations(range(1, n + 1), level):
            table[(level, cols)] = _gf_minor(field, point,
                                             tuple(range(1, level + 1)), cols)
    table["det"] = _gf_minor(field, point, tuple(range(1, n + 1)),
                             tuple(range(1, n + 1)))
    return table


def _gf_minor(field, mat, rows, cols):
    sub = [[mat[i - 1][j - 1] for j in cols] for i in rows]
    m = len(sub)
    det = field.one
    sub = [row[:] for row in sub]
    for c in range(m):
        piv = next((i for i in range(c, m) if sub[i][c]), None)
        if piv is None:
            return field.zero
        if piv != c:
            sub[c], sub[piv] = sub[piv], sub[c]
            det = field.mul(det, field.neg(field.one))
        det = field.mul(det, sub[c][c])
        inv = field.inv(sub[c][c])
        for i in range(c + 1, m):
            if sub[i][c]:
                f = field.mul(inv, sub[i][c])
                sub[i] = [field.sub(x, field.mul(f, y))
                          for x, y in zip(sub[i], sub[c])]
    return det


@lru_cache(maxsize=None)
def _binet_matrix(n, p, level, s):
    """Column-substitution coefficients: minor_{1..level,J}(X s) =
    sum_K  minor_{K,J}(s) * minor_{1..level,K}(X)."""
    subsets = list(itertools.combinations(range(1, n + 1), level))
    out = {}
    for J in subsets:
        col = {}
        for K in subsets:
            sub = tuple(tuple(s[i - 1][j - 1] for j in J) for i in K)
            c = _det_mod(sub, p)
            if c:
                col[K] = c
        out[J] = col
    return out


class ModuleElement:
    """num * det^{det_pow} with its module weight and torus eigenvalue."""

    __slots__ = ("n", "p", "num", "det_pow", "weight", "tweight")

    def __init__(self, n, p, num, det_pow, weight, tweight=None):
        self.n = n
        self.p = p
        self.num = num
        self.det_pow = det_pow
        self.weight = weight
        self.tweight = tweight

    def is_zero(self):
        return self.num.is_zero()


@dataclass
class InducedModule:
    lam: Weight
    n: int
    p: int
    det_pow: int
    level_mults: tuple          # multiplicity of each level 1..n-1
    basis: tuple                # minor monomials: tuples of ((level, cols), mult)
    basis_polys: tuple          # expanded numerators (FpPolynomial)
    weights: tuple              # right-translation eigenvalues (Weight)

    @property
    def dim(self):
        return len(self.basis)

    def element(self, coeffs):
        """Module element from a basis-coefficient mapping {index: c}."""
        num = FpPolynomial.zero(self.p)
        for i, c in coeffs.items():
            num = num + c * self.basis_polys[i]
        return ModuleElement(self.n, self.p, num, self.det_pow, self.lam)

    def basis_element(self, i):
        return ModuleElement(self.n, self.p, self.basis_polys[i],
                             self.det_pow, self.lam, self.weights[i])


def weyl_dimension(lam):
    n = len(lam)
    d = Fraction(1)
    for i in range(n):
        for j in range(i + 1, n):
            d *= Fraction(lam[i] - lam[j] + j - i, j - i)
    assert d.denominator == 1
    return int(d)


def _expand_monomial(n, p, mono):
    poly = FpPolynomial.constant(p, 1)
    for (level, cols), mult in mono:
        poly = poly * _minor_poly(n, p, level, cols) ** mult
    return poly


def _monomial_weight(n, lam_n, mono):
    w = Weight([lam_n] * n)
    for (level, cols), mult in mono:
        w = w + mult * _minor_weight(n, cols)
    return w


def build_module(lam, n, p):
    """Construct V(lam) with its weight decomposition.

    Raises EmptyModuleError when lam is not weakly decreasing; checks the
    resulting dimension against the Weyl dimension formula.
    """
    lam = Weight(lam)
    if lam.rank != n:
        raise EmptyModuleError("weight rank %d, expected %d" % (lam.rank, n))
    if n > MODULE_RANK_GUARD:
        raise GuardExceededError("induced modules are built for n <= %d"
                                 % MODULE_RANK_GUARD)
    if any(lam[i] < lam[i + 1] for i in range(n - 1)):
        raise EmptyModuleError("%s is not L-dominant; the module is zero"
                               % (lam,))
    mults = tuple(lam[i] - lam[i + 1] for i in range(n - 1))
    level_choices = []
    for level in range(1, n):
        cols = list(itertools.combinations(range(1, n + 1), level))
        level_choices.append(list(
            itertools.combinations_with_replacement(cols, mults[level - 1])))
    spanning = []
    for pick in itertools.product(*level_choices):
        factors = {}
        for level, chosen in enumerate(pick, start=1):
            for cols in chosen:
                factors[(level, cols)] = factors.get((level, cols), 0) + 1
        spanning.append(tuple(sorted(factors.items())))

    # group by torus eigenvalue; reduce to an independent subset per block
    by_weight = {}
    for mono in spanning:
        by_weight.setdefault(_monomial_weight(n, lam[-1], mono), []).append(mono)

    basis, polys, weights = [], [], []
    for w in sorted(by_weight):
        pivots = {}
        for mono in by_weight[w]:
            poly = _expand_monomial(n, p, mono)
            v = dict(poly.terms)
            while v:
                key = max(v, key=_grlex_key)
                if key not in pivots:
                    break
                pv = pivots[key]
                c = (-v[key] * pow(pv[key], p - 2 if p > 2 else 1, p)) % p
                for k2, c2 in pv.items():
                    nv = (v.get(k2, 0) + c * c2) % p
                    if nv:
                        v[k2] = nv
                    else:
                        v.pop(k2, None)
            if v:
                pivots[max(v, key=_grlex_key)] = v
                basis.append(mono)
                polys.append(poly)
                weights.append(w)

    module = InducedModule(lam, n, p, lam[-1], mults,
                           tuple(basis), tuple(polys), tuple(weights))
    expected = weyl_dimension(lam)
    if module.dim != expected:
        raise TheoremViolationError(
            "dim V(%s) = %d, Weyl formula gives %d" % (lam, module.dim, expected))
    return module


# ---------------------------------------------------------------------------
# right translation

def _act_monomial(module, s, mono):
    """Image of a basis monomial under X -> X s, as a minor-monomial dict."""
    n, p = module.n, module.p
    result = {(): 1}
    for (level, cols), mult in mono:
        images = _binet_matrix(n, p, level, s)[cols]
        for _ in range(mult):
            new = {}
            for m0, c0 in result.items():
                for K, cK in images.items():
                    d = dict(m0)
                    key = (level, K)
                    d[key] = d.get(key, 0) + 1
                    key2 = tuple(sorted(d.items()))
                    new[key2] = (new.get(key2, 0) + c0 * cK) % p
            result = {k: c for k, c in new.items() if c}
    if module.det_pow:
        ds = _det_mod(s, p)
        scale = pow(ds, module.det_pow % (p - 1) if p > 2 else 0, p)
        if scale != 1:
            result = {k: c * scale % p for k, c in result.items()}
    return result


def _act_expand(module, s, coeffs):
    """Expanded numerator polynomial of (X -> X s) applied to an element
    given by basis coefficients {index: c}."""
    n, p = module.n, module.p
    total = {}
    for i, c in coeffs.items():
        for mono, cm in _act_monomial(module, s, module.basis[i]).items():
            poly = _expand_monomial(n, p, mono)
            for t, ct in poly.terms.items():
                nv = (total.get(t, 0) + c * cm * ct) % p
                if nv:
                    total[t] = nv
                else:
                    total.pop(t, None)
    return FpPolynomial(p, total)


def invariants_finite_group(module):
    """Basis of the subspace fixed by right translation under GL_n(F_p).

    The kernel is cut out by the certified generating set, then the fixed
    equations of every single group element are verified exactly by
    interpolation on a point set whose basis-evaluation matrix has full
    rank over GF(p^k).  Returns a list of {basis index: coefficient} dicts.
    """
    n, p = module.n, module.p
    group = group_elements(n, p)
    gens = group_generators(n, p)
    d = module.dim
    if d == 0:
        return []

    current = [{i: 1} for i in range(d)]
    for g in gens:
        if not current:
            break
        cols = []
        for vec in current:
            diff = _act_expand(module, g, vec) - module.element(vec).num
            cols.append(dict(diff.terms))
        null = fp_nullspace(cols, p)
        new = []
        for combo in null:
            merged = {}
            for j, cj in combo.items():
                for i, ci in current[j].items():
                    v = (merged.get(i, 0) + cj * ci) % p
                    if v:
                        merged[i] = v
                    else:
                        merged.pop(i, None)
            if merged:
                new.append(merged)
        current = new
    if not current:
        return []

    _verify_fixed_by_all(module, current, group)
    return current


def _verify_fixed_by_all(module, vectors, group):
    """Exact all-elements check of invariance via certified interpolation.

    Since rho(s)v - v lies in V(lam) and the evaluation matrix of the
    basis at the chosen points has rank dim V(lam), vanishing at the
    points proves vanishing as a polynomial.
    """
    n, p = module.n, module.p
    field = field_for(p, 64)
    d = module.dim
    support = sorted({i for v in vectors for i in v})

    rng = random.Random(0x5EED + 31 * n + p)
    points, tables = [], []
    for attempt in range(16):
        while len(points) < d + 8:
            mat = tuple(tuple(rng.randrange(field.order) for _ in range(n))
                        for _ in range(n))
            table = _minor_value_table(n, p, mat, field)
            if table["det"] == field.zero:
                continue
            points.append(mat)
            tables.append(table)
        rows = [[_basis_value(module, i, t, field) for t in tables]
                for i in range(d)]
        if gf_matrix_rank(field, rows) == d:
            break
        points, tables = [], []
    else:
        raise TheoremViolationError("could not certify an evaluation basis")

    base_vals = [[_element_value(module, vec, t, field, support)
                  for t in tables] for vec in vectors]
    for s in group:
        for j, pt in enumerate(points):
            moved = _minor_value_table(n, p, _gf_mat_mul(field, pt, s), field)
            vals = {i: _basis_value(module, i, moved, field) for i in support}
            for vi, vec in enumerate(vectors):
                acc = field.zero
                for i, c in vec.items():
                    acc = field.add(acc, field.mul(field.from_int(c), vals[i]))
                if acc != base_vals[vi][j]:
                    raise TheoremViolationError(
                        "fixed-space vector moves under a group element")


def _gf_mat_mul(field, pt, s):
    n = len(pt)
    return tuple(tuple(
        _gf_dot(field, [pt[i][k] for k in range(n)],
                [field.from_int(s[k][j]) for k in range(n)])
        for j in range(n)) for i in range(n))


def _gf_dot(field, xs, ys):
    acc = field.zero
    for x, y in zip(xs, ys):
        acc = field.add(acc, field.mul(x, y))
    return acc


def _basis_value(module, i, table, field):
    val = field.one
    for (level, cols), mult in module.basis[i]:
        val = field.mul(val, field.pow(table[(level, cols)], mult))
    k = module.det_pow
    if k:
        dv = table["det"]
        val = field.mul(val, field.pow(dv, k) if k > 0
                        else field.pow(field.inv(dv), -k))
    return val


def _element_value(module, coeffs, table, field, support=None):
    total = field.zero
    for i in (support if support is not None else coeffs):
        c = coeffs.get(i, 0)
        if c:
            total = field.add(total, field.mul(field.from_int(c),
                                               _basis_value(module, i, table, field)))
    return total


# ---------------------------------------------------------------------------
# subspaces and the comparison of both dimension computations

def subspace_leq0(module):
    """Indices of basis vectors whose eigenvalue has last coordinate <= 0."""
    return [i for i, w in enumerate(module.weights) if w[module.n - 1] <= 0]


def intersection_dimension(module):
    """dim of (weight-nonpositive part) meet (finite-group invariants)."""
    good = set(subspace_leq0(module))
    fixed = invariants_finite_group(module)
    if not fixed:
        return 0
    # impose vanishing of coefficients on eigenvectors outside the part
    cols = []
    for vec in fixed:
        cols.append({("c", i): c for i, c in vec.items() if i not in good})
    null = fp_nullspace(cols, module.p)
    return len(null)


def highest_weight_vector(module):
    """The basis vector spanning the lower-Borel-stable line.

    Located as the (required one-dimensional) torus eigenspace of the
    coordinate reversal of lam, then certified by a symbolic check of
    stability under a generic lower-triangular right translation.
    """
    target = Weight(reversed(module.lam))
    hits = [i for i, w in enumerate(module.weights) if w == target]
    if len(hits) != 1:
        raise TheoremViolationError(
            "eigenspace of %s in V(%s) has dimension %d, expected 1"
            % (target, module.lam, len(hits)))
    elem = module.basis_element(hits[0])
    _check_lower_stability(module, elem)
    return elem


def _check_lower_stability(module, elem):
    n, p = module.n, module.p
    images = {}
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            img = FpPolynomial.zero(p)
            for k in range(j, n + 1):   # b lower-triangular: b_kj = 0 for k < j
                img = img + FpPolynomial.variable(p, ("a", i, k)) \
                    * FpPolynomial.variable(p, ("b", k, j))
            images[("a", i, j)] = img
    moved = elem.num.substitute(images)
    chi = elem.tweight
    scale = FpPolynomial.constant(p, 1)
    for j in range(1, n + 1):
        e = chi[j - 1] - module.det_pow
        assert e >= 0
        scale = scale * FpPolynomial.variable(p, ("b", j, j), e) if e else scale
    if moved != elem.num * scale:
        raise TheoremViolationError(
            "candidate line is not stable under lower-triangular translation")


def verify_left_borel_law(module):
    """Symbolic proof that every basis numerator transforms on the left
    through the module character: num(bX) = num(X) * prod over levels of
    the leading diagonal minors of b."""
    n, p = module.n, module.p
    images = {}
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            img = FpPolynomial.zero(p)
            for k in range(1, i + 1):   # b lower-triangular: b_ik = 0 for k > i
                img = img + FpPolynomial.variable(p, ("b", i, k)) \
                    * FpPolynomial.variable(p, ("a", k, j))
            images[("a", i, j)] = img
    scale = FpPolynomial.constant(p, 1)
    for level, mult in enumerate(module.level_mults, start=1):
        for r in range(1, level + 1):
            if mult:
                scale = scale * FpPolynomial.variable(p, ("b", r, r), mult)
    for poly in module.basis_polys:
        if poly.substitute(images) != poly * scale:
            raise TheoremViolationError("left Borel transformation law fails")
    return True


def thminter_check(lam, n, p, monomial_cap=None):
    """Both dimension computations for H^0 of weight lam: the matrix-space
    oracle and the representation-theoretic intersection."""
    from .sections import h0_dimension

    kwargs = {} if monomial_cap is None else {"monomial_cap": monomial_cap}
    lhs = h0_dimension(lam, n, p, **kwargs)
    try:
        module = build_module(lam, n, p)
    except EmptyModuleError:
        rhs = 0
    else:
        rhs = intersection_dimension(module)
    return lhs, rhs, lhs == rhs
