"""Sparse multivariate polynomials over F_p in matrix-entry variables.

Variables are tuples: ``('a', i, j)`` are the entries of the generic n x n
matrix (1-indexed), ``('b', i, j)`` entries of generic triangular group
elements, ``('t',)`` the one-parameter deformation variable.  A monomial
is a sorted tuple of (variable, exponent) pairs; terms map monomials to
nonzero coefficients in 1..p-1.  The canonical term order is graded
lexicographic with the variable order a_{1,1}, ..., a_{n,n}, then the
auxiliaries.

The weight grading assigns ``a_{i,j}`` the character vector
``e_i - p*e_j`` of the diagonal torus acting by twisted conjugation
``t . A = t A phi(t)^{-1}``; ``weight_of`` recovers the common weight of a
homogeneous polynomial.
"""

from __future__ import annotations

from functools import lru_cache

from .cones import Weight

_KIND_RANK = {"a": 0, "b": 1, "t": 2, "x": 3}


def _var_key(var):
    return (_KIND_RANK[var[0]],) + tuple(var[1:])


def _mono_mul(m1, m2):
    if not m1:
        return m2
    if not m2:
        return m1
    d = dict(m1)
    for v, e in m2:
        d[v] = d.get(v, 0) + e
    return tuple(sorted(d.items(), key=lambda t: _var_key(t[0])))


def _mono_deg(m):
    return sum(e for _, e in m)


def _grlex_key(m):
    """Sort key with natural semantics: larger key == graded-lex larger.

    The sparse monomial is encoded as (degree, sequence of
    (negated variable key, exponent)); lexicographic comparison of that
    sequence reproduces comparison of the dense exponent vectors.
    """
    return (_mono_deg(m),
            tuple((tuple(-c for c in _var_key(v)), e) for v, e in m))


def _grlex_larger(m1, m2):
    return _grlex_key(m1) > _grlex_key(m2)


class FpPolynomial:
    """Immutable sparse polynomial over F_p."""

    __slots__ = ("p", "terms")

    def __init__(self, p, terms=None):
        self.p = p
        clean = {}
        for m, c in (terms or {}).items():
            c %= p
            if c:
                clean[m] = c
        self.terms = clean

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, p):
        return cls(p)

    @classmethod
    def constant(cls, p, c):
        c %= p
        return cls(p, {(): c} if c else {})

    @classmethod
    def variable(cls, p, var, exp=1):
        if exp == 0:
            return cls.constant(p, 1)
        return cls(p, {((var, exp),): 1})

    # -- predicates ---------------------------------------------------------

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        return (isinstance(other, FpPolynomial) and self.p == other.p
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.p, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def total_degree(self):
        return max((_mono_deg(m) for m in self.terms), default=0)

    def variables(self):
        out = set()
        for m in self.terms:
            out.update(v for v, _ in m)
        return out

    # -- arithmetic ----------------------------------------------------------

    def _binop(self, other, sign):
        if isinstance(other, int):
            other = FpPolynomial.constant(self.p, other)
        assert self.p == other.p
        terms = dict(self.terms)
        for m, c in other.terms.items():
            terms[m] = (terms.get(m, 0) + sign * c) % self.p
        return FpPolynomial(self.p, terms)

    def __add__(self, other):
        return self._binop(other, 1)

    def __sub__(self, other):
        return self._binop(other, -1)

    def __neg__(self):
        return FpPolynomial(self.p, {m: -c for m, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return FpPolynomial(
                self.p, {m: c * other for m, c in self.terms.items()})
        assert self.p == other.p
        out = {}
        p = self.p
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = _mono_mul(m1, m2)
                out[m] = (out.get(m, 0) + c1 * c2) % p
        return FpPolynomial(p, out)

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative power of a polynomial")
        result = FpPolynomial.constant(self.p, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    def frobenius(self):
        """Raise every variable exponent by the factor p (equals f**p)."""
        return FpPolynomial(self.p, {
            tuple((v, e * self.p) for v, e in m): c
            for m, c in self.terms.items()})

    def substitute(self, images):
        """Simultaneous substitution; ``images`` maps variables to
        polynomials, unmapped variables stay themselves."""
        p = self.p
        cache = {}

        def power(var, exp):
            key = (var, exp)
            if key not in cache:
                img = images.get(var)
                if img is None:
                    cache[key] = FpPolynomial.variable(p, var, exp)
                else:
                    cache[key] = img ** exp
            return cache[key]

        out = FpPolynomial.zero(p)
        for m, c in self.terms.items():
            term = FpPolynomial.constant(p, c)
            for v, e in m:
                term = term * power(v, e)
            out = out + term
        return out

    def evaluate(self, assign, field):
        """Evaluate with values from a finite-field helper object."""
        total = field.zero
        for m, c in self.terms.items():
            val = field.from_int(c)
            for v, e in m:
                val = field.mul(val, field.pow(assign[v], e))
            total = field.add(total, val)
        return total

    # -- term order ----------------------------------------------------------

    def leading(self):
        """(monomial, coefficient) that is graded-lex largest."""
        best = max(self.terms, key=_grlex_key)
        return best, self.terms[best]

    def sorted_terms(self):
        """Terms in descending graded-lex order (canonical serialization)."""
        return sorted(self.terms.items(), key=lambda t: _grlex_key(t[0]),
                      reverse=True)

    def to_json_dict(self):
        def var_name(v):
            if v[0] in ("a", "b"):
                return "%s_%d_%d" % (v[0], v[1], v[2])
            return v[0] if len(v) == 1 else "%s_%d" % (v[0], v[1])

        return {"p": self.p,
                "terms": [{"exps": {var_name(v): e for v, e in m},
                           "coef": c}
                          for m, c in self.sorted_terms()]}

    def __repr__(self):
        if self.is_zero():
            return "0"
        bits = []
        for m, c in self.sorted_terms():
            factors = [str(c)] if (c != 1 or not m) else []
            for v, e in m:
                name = "_".join(str(x) for x in v)
                factors.append(name if e == 1 else "%s^%d" % (name, e))
            bits.append("*".join(factors))
        return " + ".join(bits)


def a_var(p, i, j):
    return FpPolynomial.variable(p, ("a", i, j))


def generic_matrix(n, p):
    return [[a_var(p, i, j) for j in range(1, n + 1)] for i in range(1, n + 1)]


def mat_identity(n, p):
    one = FpPolynomial.constant(p, 1)
    zero = FpPolynomial.zero(p)
    return [[one if i == j else zero for j in range(n)] for i in range(n)]


def mat_mul(A, B):
    n, k, m = len(A), len(B), len(B[0])
    out = []
    for i in range(n):
        row = []
        for j in range(m):
            acc = A[i][0] * B[0][j]
            for l in range(1, k):
                acc = acc + A[i][l] * B[l][j]
            row.append(acc)
        out.append(row)
    return out


def det(M):
    """Determinant by expansion over column subsets (exact, no division)."""
    m = len(M)
    if m == 0:
        raise ValueError("empty matrix")
    p = M[0][0].p

    @lru_cache(maxsize=None)
    def sub(cols):
        r = m - len(cols)
        if not cols:
            return FpPolynomial.constant(p, 1)
        total = FpPolynomial.zero(p)
        for idx, c in enumerate(cols):
            rest = cols[:idx] + cols[idx + 1:]
            term = M[r][c] * sub(rest)
            total = total + term if idx % 2 == 0 else total - term
        return total

    result = sub(tuple(range(m)))
    sub.cache_clear()
    return result


def submatrix(n, p, rows, cols):
    return [[a_var(p, i, j) for j in cols] for i in rows]


def minor(n, p, rows, cols):
    """Determinant of the a-variable submatrix (1-indexed selections)."""
    if len(rows) != len(cols):
        raise ValueError("minor needs equally many rows and columns")
    return det(submatrix(n, p, rows, cols))


@lru_cache(maxsize=None)
def delta_minor(n, p, i):
    """Anti-corner minor of rows 1..i against the last i columns."""
    if i == 0:
        return FpPolynomial.constant(p, 1)
    if not 1 <= i <= n:
        raise ValueError("need 0 <= i <= n")
    return minor(n, p, range(1, i + 1), range(n + 1 - i, n + 1))


def exact_divide(f, g):
    """Quotient f/g when g divides f exactly, else None.

    Single-divisor multivariate division: in an integral domain with a
    multiplicative monomial order, g | f forces LT(g) | LT(f), so leading
    term reduction either terminates with remainder zero or proves
    non-divisibility.
    """
    if g.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    p = f.p
    quot = FpPolynomial.zero(p)
    rem = f
    gm, gc = g.leading()
    gc_inv = pow(gc, p - 2, p) if p > 2 else gc
    gd = dict(gm)
    while not rem.is_zero():
        fm, fc = rem.leading()
        fd = dict(fm)
        qd = {}
        for v, e in gd.items():
            if fd.get(v, 0) < e:
                return None
            if fd[v] - e:
                qd[v] = fd[v] - e
        for v, e in fd.items():
            if v not in gd:
                qd[v] = e
        qm = tuple(sorted(qd.items(), key=lambda t: _var_key(t[0])))
        qc = (fc * gc_inv) % p
        q = FpPolynomial(p, {qm: qc})
        quot = quot + q
        rem = rem - q * g
    return quot


def weight_of(f, n):
    """Common twisted-conjugation weight of the monomials of f, if any.

    Returns a Weight, or None when f is zero or not homogeneous.  Raises
    ValueError when f involves variables other than the matrix entries.
    """
    if f.is_zero():
        return None
    p = f.p
    common = None
    for m in f.terms:
        wt = [0] * n
        for v, e in m:
            if v[0] != "a":
                raise ValueError("weight grading is defined on matrix entries "
                                 "only, found %r" % (v,))
            _, i, j = v
            wt[i - 1] += e
            wt[j - 1] -= p * e
        wt = Weight(wt)
        if common is None:
            common = wt
        elif common != wt:
            return None
    return common


class MinorBasis:
    """The anti-corner minors of the generic n x n matrix over F_p."""

    def __init__(self, n, p):
        self.n = n
        self.p = p
        self.deltas = tuple(delta_minor(n, p, i) for i in range(1, n + 1))

    def delta(self, i):
        if i == 0:
            return FpPolynomial.constant(self.p, 1)
        return self.deltas[i - 1]

    def delta_weight(self, i):
        """Weight of the i-th minor: i leading ones, then -p on the last i."""
        w = [0] * self.n
        for k in range(i):
            w[k] += 1
            w[self.n - 1 - k] -= self.p
        return Weight(w)

    def product(self, exps):
        out = FpPolynomial.constant(self.p, 1)
        for i, e in enumerate(exps, start=1):
            if e:
                out = out * self.delta(i) ** e
        return out


class RationalFunction:
    """Fraction num / prod Delta_i^{e_i} with a factored minor denominator."""

    __slots__ = ("basis", "num", "exps")

    def __init__(self, basis, num, exps=None):
        self.basis = basis
        self.num = num
        self.exps = tuple(exps) if exps is not None else (0,) * basis.n
        if num.is_zero():
            self.exps = (0,) * basis.n

    @classmethod
    def from_poly(cls, basis, poly):
        return cls(basis, poly)

    def is_zero(self):
        return self.num.is_zero()

    def _lift(self, exps):
        diff = tuple(e - s for e, s in zip(exps, self.exps))
        assert all(d >= 0 for d in diff)
        return self.num * self.basis.product(diff)

    def __add__(self, other):
        other = self._coerce(other)
        exps = tuple(max(a, b) for a, b in zip(self.exps, other.exps))
        return RationalFunction(self.basis,
                                self._lift(exps) + other._lift(exps), exps)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __neg__(self):
        return RationalFunction(self.basis, -self.num, self.exps)

    def __mul__(self, other):
        other = self._coerce(other)
        return RationalFunction(self.basis, self.num * other.num,
                                tuple(a + b for a, b in zip(self.exps, other.exps)))

    def _coerce(self, other):
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, FpPolynomial):
            return RationalFunction(self.basis, other)
        if isinstance(other, int):
            return RationalFunction(
                self.basis, FpPolynomial.constant(self.basis.p, other))
        raise TypeError(repr(other))

    def __eq__(self, other):
        if not isinstance(other, RationalFunction):
            other = self._coerce(other)
        exps = tuple(max(a, b) for a, b in zip(self.exps, other.exps))
        return self._lift(exps) == other._lift(exps)

    def __hash__(self):
        r = self.reduce()
        return hash((r.num, r.exps))

    def frobenius(self):
        return RationalFunction(self.basis, self.num.frobenius(),
                                tuple(e * self.basis.p for e in self.exps))

    def reduce(self):
        """Lowest terms with respect to the minor denominators."""
        num = self.num
        exps = list(self.exps)
        if num.is_zero():
            return RationalFunction(self.basis, num)
        for i in range(self.basis.n):
            while exps[i] > 0:
                q = exact_divide(num, self.basis.delta(i + 1))
                if q is None:
                    break
                num = q
                exps[i] -= 1
        return RationalFunction(self.basis, num, exps)

    def weight(self):
        """Weight of the fraction; None when the numerator is inhomogeneous."""
        wn = weight_of(self.num, self.basis.n)
        if wn is None:
            return None
        for i, e in enumerate(self.exps, start=1):
            if e:
                wn = wn - e * self.basis.delta_weight(i)
        return wn

    def __repr__(self):
        return "(%r) / %s" % (
            self.num,
            "*".join("D%d^%d" % (i + 1, e)
                     for i, e in enumerate(self.exps) if e) or "1")
