"""Constructors for the named weight cones of the symplectic zip setting.

Each constructor returns a NamedCone carrying a generator presentation, a
halfspace presentation, or both.  When both are present they describe the
same saturated cone (this is asserted by the test suite, not trusted).

All cones live in X*(T) = Z^n with the L-dominance convention
a_1 >= ... >= a_n.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cones import GeneratedCone, HalfspaceSystem, Weight
from .errors import ZipconeError
from .rootdata import SymplecticRootDatum, gaussian_binomial


@dataclass(frozen=True)
class NamedCone:
    name: str
    rank: int
    params: tuple = ()
    generated: GeneratedCone | None = None
    halfspaces: HalfspaceSystem | None = None

    def presentation(self, kind):
        if kind == "generators":
            if self.generated is None:
                raise ZipconeError("%s has no generator presentation" % self.name)
            return self.generated
        if kind == "halfspaces":
            if self.halfspaces is None:
                raise ZipconeError("%s has no halfspace presentation" % self.name)
            return self.halfspaces
        raise ValueError(kind)

    def any_presentation(self):
        return self.generated if self.generated is not None else self.halfspaces


def _unit(n, i):
    return Weight(1 if j == i else 0 for j in range(n))


def _fundamental(n, i):
    """(1,...,1,0,...,0) with i leading ones."""
    return Weight([1] * i + [0] * (n - i))


def hodge_character(n, p):
    return Weight([1 - p] * n)


def schubert_weight(n, p, i):
    """i leading ones and i trailing -p entries."""
    return _fundamental(n, i) - p * Weight(reversed(_fundamental(n, i)))


def eta_weight(n, p, i):
    """Boundary generator of the highest-weight cone, 1 <= i <= n-1."""
    a = gaussian_binomial(n - 1, i, p)
    b = -p ** (n - i) * gaussian_binomial(n - 1, i - 1, p)
    return Weight([a] * i + [b] * (n - i))


def _dominance_rows(n):
    rows = []
    for i in range(n - 1):
        r = [0] * n
        r[i], r[i + 1] = 1, -1
        rows.append(r)
    return rows


def cone_XplusI(n):
    gens = [_fundamental(n, i) for i in range(1, n)]
    diag = Weight([1] * n)
    gens += [diag, -diag]
    return NamedCone("XplusI", n, (n,),
                     generated=GeneratedCone(n, gens),
                     halfspaces=HalfspaceSystem(n, _dominance_rows(n)))


def cone_GS(datum):
    """Ampleness-type cone: pairings >= 0 on Levi positive roots, <= 0 on
    the rest; reduces to 0 >= a_1 >= ... >= a_n."""
    n = datum.n
    rows = []
    levi = []
    for root, coroot in zip(datum.positive_roots, datum.positive_coroots):
        if sum(root) == 0:
            # Levi roots e_i - e_j have coordinate sum zero
            levi.append(list(coroot))
        else:
            rows.append([-c for c in coroot])
    rows = levi + rows
    gens = [Weight([0] * (n - i) + [-1] * i) for i in range(1, n + 1)]
    return NamedCone("GS", n, (n,),
                     generated=GeneratedCone(n, gens),
                     halfspaces=HalfspaceSystem(n, rows))


def cone_schubert(datum, p):
    """Image of the dominant chamber under lam -> lam - p*reversal; a
    monoid generated by the images of the fundamental weights."""
    n = datum.n
    gens = [datum.h_map(_fundamental(n, i), p) for i in range(1, n + 1)]
    return NamedCone("Schubert", n, (n, p), generated=GeneratedCone(n, gens))


def cone_schubert_saturated(datum, p):
    n = datum.n
    rows = []
    for i in range(1, n):
        # (p a_{i+1} + a_{n-i}) - (p a_i + a_{n+1-i}) <= 0
        r = [0] * n
        r[i - 1] += p
        r[n - i] += 1
        r[i] -= p
        r[n - i - 1] -= 1
        rows.append(r)
    last = [0] * n
    last[0] -= p
    last[n - 1] -= 1
    rows.append(last)
    gens = [datum.h_map(_fundamental(n, i), p) for i in range(1, n + 1)]
    return NamedCone("SchubertSaturated", n, (n, p),
                     generated=GeneratedCone(n, gens),
                     halfspaces=HalfspaceSystem(n, rows))


def hw_functional(datum, p, alpha_index=None):
    """Row vector of the boundary-sign functional attached to a simple
    root outside the Levi: sum over minimal coset representatives of
    p^{length} times the permuted coroot."""
    if alpha_index is None:
        alpha_index = datum.beta_index
    if alpha_index in datum.levi_indices:
        raise ZipconeError("functional is defined for roots outside the Levi")
    n = datum.n
    total = [0] * n
    K = datum.orthogonal_levi_subset(alpha_index)
    for w in datum.min_coset_reps(K):
        idx = alpha_index
        for i in range(datum.r_alpha(alpha_index)):
            coroot = datum.simple_coroots[idx]
            moved = w.inverse().act(coroot)
            for k in range(n):
                total[k] += p ** (i + w.length()) * moved[k]
            idx = datum.sigma[idx]
    return Weight(total)


def cone_hw(datum, p):
    """Highest-weight cone: L-dominant weights with non-positive boundary
    functional; for Sp(2n) a single inequality sum_i p^{n-i} a_i <= 0."""
    n = datum.n
    rows = _dominance_rows(n)
    rows.append([-c for c in hw_functional(datum, p)])
    gens = [eta_weight(n, p, i) for i in range(1, n)]
    gens.append(hodge_character(n, p))
    return NamedCone("HW", n, (n, p),
                     generated=GeneratedCone(n, gens),
                     halfspaces=HalfspaceSystem(n, rows))


def cone_pol(n, p):
    gens = [_unit(n, i) - p * _unit(n, j)
            for i in range(n) for j in range(n)]
    return NamedCone("Pol", n, (n, p), generated=GeneratedCone(n, gens))


def sigma1(n):
    s = {(i, j) for i in range(1, n + 1) for j in range(1, i + 1)}
    s |= {(i, n + 1 - i) for i in range(1, n + 1)}
    return frozenset(s)


def sigma1prime(n):
    s = {(i, j) for i in range(1, n + 1) for j in range(1, i)}
    s |= {(i, n + 1 - i) for i in range(1, n + 1)}
    return frozenset(s)


def cone_sigma(subset, n, p):
    gens = [_unit(n, i - 1) - p * _unit(n, j - 1) for i, j in sorted(subset)]
    return NamedCone("Sigma", n, (n, p, tuple(sorted(subset))),
                     generated=GeneratedCone(n, gens))


def cone_zip_sp4(p):
    gens = [Weight((1, -p)), Weight((1 - p, 1 - p)), Weight((0, -p * (p - 1)))]
    return NamedCone("ZipSp4", 2, (2, p), generated=GeneratedCone(2, gens))


def cone_zip_sp4_saturated(p):
    return NamedCone("ZipSp4Saturated", 2, (2, p),
                     generated=GeneratedCone(2, [(1, -p), (-1, -1)]),
                     halfspaces=HalfspaceSystem(2, [(1, -1), (-p, -1)]))


def cone_zip_sp6_saturated(p):
    gens = [eta_weight(3, p, 1), eta_weight(3, p, 2),
            hodge_character(3, p), schubert_weight(3, p, 1)]
    rows = _dominance_rows(3)
    rows.append([-p * p, -1, -p])
    rows.append([-p, -p * p, -1])
    return NamedCone("ZipSp6Saturated", 3, (3, p),
                     generated=GeneratedCone(3, gens),
                     halfspaces=HalfspaceSystem(3, rows))


def cone_muord_saturated(n):
    base = cone_XplusI(n)
    return NamedCone("MuOrdSaturated", n, (n,),
                     generated=base.generated, halfspaces=base.halfspaces)


_CLI_NAMES = {
    "gs": lambda n, p: cone_GS(SymplecticRootDatum(n)),
    "schubert": lambda n, p: cone_schubert(SymplecticRootDatum(n), p),
    "schubert-sat": lambda n, p: cone_schubert_saturated(SymplecticRootDatum(n), p),
    "hw": lambda n, p: cone_hw(SymplecticRootDatum(n), p),
    "pol": lambda n, p: cone_pol(n, p),
    "sigma1": lambda n, p: cone_sigma(sigma1(n), n, p),
    "sigma1p": lambda n, p: cone_sigma(sigma1prime(n), n, p),
    "xplusi": lambda n, p: cone_XplusI(n),
    "muord-sat": lambda n, p: cone_muord_saturated(n),
    "zip-sp4": lambda n, p: cone_zip_sp4(p),
    "zip-sp4-sat": lambda n, p: cone_zip_sp4_saturated(p),
    "zip-sp6-sat": lambda n, p: cone_zip_sp6_saturated(p),
}


def catalog_cone(name, n, p):
    key = name.lower()
    if key not in _CLI_NAMES:
        raise ZipconeError("unknown cone %r (have: %s)"
                           % (name, ", ".join(sorted(_CLI_NAMES))))
    if key in ("zip-sp4", "zip-sp4-sat"):
        if n not in (None, 2):
            raise ZipconeError("%s is a rank-2 cone" % name)
        n = 2
    elif key == "zip-sp6-sat":
        if n not in (None, 3):
            raise ZipconeError("%s is a rank-3 cone" % name)
        n = 3
    elif n is None:
        raise ZipconeError("cone %r needs --n" % name)
    return _CLI_NAMES[key](n, p)


def catalog_names():
    return sorted(_CLI_NAMES)
