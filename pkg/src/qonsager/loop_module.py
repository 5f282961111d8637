"""Matrix realizations of the loop algebra on evaluation modules.

An evaluation module of highest index ell is (ell+1)-dimensional with the
standard basis v_0..v_ell; tensor products are formed through the
coproduct, with the left factor's basis index varying slowest.
"""

import os
from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .scalars import DeformationParameter, DomainError, format_rational


def max_dimension():
    """Module dimension cap; override with QONSAGER_MAX_DIM."""
    return int(os.environ.get("QONSAGER_MAX_DIM", "64"))


@dataclass(frozen=True)
class EvaluationSpec:
    ell: int
    a: Fraction

    def __post_init__(self):
        object.__setattr__(self, "a", Fraction(self.a))
        if self.ell < 1:
            raise DomainError("evaluation module index ell must be >= 1, got %d" % self.ell)
        if self.a == 0:
            raise DomainError("evaluation parameter a must be nonzero")


@dataclass(frozen=True)
class ModuleSpec:
    q: DeformationParameter
    factors: tuple

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple(self.factors))
        if not self.factors:
            raise DomainError("module spec needs at least one factor")

    @property
    def dimension(self):
        d = 1
        for f in self.factors:
            d *= f.ell + 1
        return d

    @property
    def diameter(self):
        return sum(f.ell for f in self.factors)

    def strings(self):
        from .qstrings import QString
        return tuple(QString(f.ell, f.a) for f in self.factors)


@dataclass(frozen=True)
class GeneratorSet:
    """The six matrices realizing e0+-, e1+-, k0, k0^-1 on one module.

    k1 is not stored: the relation k0 k1 = 1 makes it K0inv everywhere.
    """

    q: DeformationParameter
    dim: int
    E0p: tuple
    E0m: tuple
    E1p: tuple
    E1m: tuple
    K0: tuple
    K0inv: tuple

    def __post_init__(self):
        if not linalg.is_zero(linalg.sub(linalg.mul(self.K0, self.K0inv),
                                         linalg.identity(self.dim))):
            raise DomainError("K0 * K0inv must be the identity")

    @property
    def K1(self):
        return self.K0inv

    @property
    def K1inv(self):
        return self.K0


@dataclass(frozen=True)
class RelationCheck:
    relation: str
    ok: bool


@dataclass(frozen=True)
class RelationReport:
    checks: tuple

    @property
    def passed(self):
        return all(c.ok for c in self.checks)

    def failures(self):
        return tuple(c.relation for c in self.checks if not c.ok)

    def to_json(self):
        return [{"relation": c.relation, "ok": c.ok} for c in self.checks]


def evaluation_rep(q, spec):
    """Standard-basis action on a single evaluation module.

    k0 v_i = q^(2i-ell) v_i          e0+ v_i = a q [i+1] v_(i+1)
    e0- v_i = [ell-i+1]/(a q) v_(i-1)  e1+ v_i = [ell-i+1] v_(i-1)
    e1- v_i = [i+1] v_(i+1)          with v_(-1) = v_(ell+1) = 0.
    """
    ell, a = spec.ell, spec.a
    n = ell + 1
    K0 = [[Fraction(0)] * n for _ in range(n)]
    K0inv = [[Fraction(0)] * n for _ in range(n)]
    E0p = [[Fraction(0)] * n for _ in range(n)]
    E0m = [[Fraction(0)] * n for _ in range(n)]
    E1p = [[Fraction(0)] * n for _ in range(n)]
    E1m = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        K0[i][i] = q.power(2 * i - ell)
        K0inv[i][i] = q.power(ell - 2 * i)
        if i + 1 <= ell:
            E0p[i + 1][i] = a * q.q * q.q_int(i + 1)
            E1m[i + 1][i] = q.q_int(i + 1)
        if i - 1 >= 0:
            E0m[i - 1][i] = q.q_int(ell - i + 1) / (a * q.q)
            E1p[i - 1][i] = q.q_int(ell - i + 1)
    return GeneratorSet(q=q, dim=n,
                        E0p=linalg.mat(E0p), E0m=linalg.mat(E0m),
                        E1p=linalg.mat(E1p), E1m=linalg.mat(E1m),
                        K0=linalg.mat(K0), K0inv=linalg.mat(K0inv))


def tensor_rep(q, left, right):
    """Tensor-product action via the coproduct.

    e_i+  ->  k_i (x) e_i+  +  e_i+ (x) 1
    e_i-  ->  1 (x) e_i-  +  e_i- (x) k_i^-1
    k_0   ->  k_0 (x) k_0

    The e_i- line follows from the coproduct of e_i- k_i multiplied by
    the coproduct of k_i^-1.
    """
    if left.q != q or right.q != q:
        raise DomainError("tensor factors must share the deformation parameter q")
    IL = linalg.identity(left.dim)
    IR = linalg.identity(right.dim)
    kr = linalg.kron
    return GeneratorSet(
        q=q,
        dim=left.dim * right.dim,
        K0=kr(left.K0, right.K0),
        K0inv=kr(left.K0inv, right.K0inv),
        E0p=linalg.add(kr(left.K0, right.E0p), kr(left.E0p, IR)),
        E1p=linalg.add(kr(left.K1, right.E1p), kr(left.E1p, IR)),
        E0m=linalg.add(kr(IL, right.E0m), kr(left.E0m, right.K0inv)),
        E1m=linalg.add(kr(IL, right.E1m), kr(left.E1m, right.K1inv)),
    )


def build_module(spec):
    """Left fold of tensor_rep over the evaluation factors."""
    if spec.dimension > max_dimension():
        raise DomainError("module dimension %d exceeds cap %d (set QONSAGER_MAX_DIM)"
                          % (spec.dimension, max_dimension()))
    gens = evaluation_rep(spec.q, spec.factors[0])
    for factor in spec.factors[1:]:
        gens = tensor_rep(spec.q, gens, evaluation_rep(spec.q, factor))
    return gens


def verify_loop_relations(q, g):
    """Evaluate every defining relation of the loop algebra as a residual."""
    I = linalg.identity(g.dim)
    qq = q.q
    gens = {
        ("+", 0): g.E0p, ("-", 0): g.E0m,
        ("+", 1): g.E1p, ("-", 1): g.E1m,
    }
    k = {0: g.K0, 1: g.K1}
    kinv = {0: g.K0inv, 1: g.K1inv}
    checks = []

    def record(name, residual):
        checks.append(RelationCheck(name, linalg.is_zero(residual)))

    for i in (0, 1):
        record("k%d k%d^-1 = 1" % (i, i), linalg.sub(linalg.mul(k[i], kinv[i]), I))
        record("k%d^-1 k%d = 1" % (i, i), linalg.sub(linalg.mul(kinv[i], k[i]), I))
    record("k0 k1 = 1", linalg.sub(linalg.mul(k[0], k[1]), I))
    record("k1 k0 = 1", linalg.sub(linalg.mul(k[1], k[0]), I))

    for i in (0, 1):
        for j in (0, 1):
            for sign in ("+", "-"):
                factor = qq ** 2 if sign == "+" else qq ** -2
                if i != j:
                    factor = 1 / factor
                lhs = linalg.mul(linalg.mul(k[i], gens[(sign, j)]), kinv[i])
                record("k%d e%s_%d k%d^-1 = q^%s2 e%s_%d"
                       % (i, sign, j, i,
                          ("+" if (sign == "+") == (i == j) else "-"), sign, j),
                       linalg.sub(lhs, linalg.scale(factor, gens[(sign, j)])))

    coeff = 1 / (qq - qq ** -1)
    for i in (0, 1):
        rhs = linalg.scale(coeff, linalg.sub(k[i], kinv[i]))
        record("[e+_%d, e-_%d] = (k%d - k%d^-1)/(q - q^-1)" % (i, i, i, i),
               linalg.sub(linalg.commutator(gens[("+", i)], gens[("-", i)]), rhs))
    record("[e+_0, e-_1] = 0", linalg.commutator(gens[("+", 0)], gens[("-", 1)]))
    record("[e+_1, e-_0] = 0", linalg.commutator(gens[("+", 1)], gens[("-", 0)]))

    serre_c = qq ** 2 + qq ** -2
    for sign in ("+", "-"):
        for i, j in ((0, 1), (1, 0)):
            a, b = gens[(sign, i)], gens[(sign, j)]
            inner = linalg.add(
                linalg.mul(linalg.mul(a, a), b),
                linalg.scale(-serre_c, linalg.mul(linalg.mul(a, b), a)),
                linalg.mul(b, linalg.mul(a, a)),
            )
            record("serre e%s: [e%s_%d, e%s_%d^2 e%s_%d - (q^2+q^-2) "
                   "e%s_%d e%s_%d e%s_%d + e%s_%d e%s_%d^2] = 0"
                   % (sign, sign, i, sign, i, sign, j, sign, i, sign, j,
                      sign, i, sign, j, sign, i),
                   linalg.commutator(a, inner))
    return RelationReport(tuple(checks))


def k0_weight_dimensions(g, diameter):
    """Multiplicity of each k0 eigenvalue q^(2i-d), i = 0..d."""
    dims = []
    for i in range(diameter + 1):
        ev = g.q.power(2 * i - diameter)
        dims.append(sum(1 for j in range(g.dim) if g.K0[j][j] == ev))
    return tuple(dims)


def matrix_to_json(m):
    return [[format_rational(x) for x in row] for row in m]


def generator_set_to_json(g):
    return {
        "dim": g.dim,
        "matrices": {
            "e0p": matrix_to_json(g.E0p),
            "e0m": matrix_to_json(g.E0m),
            "e1p": matrix_to_json(g.E1p),
            "e1m": matrix_to_json(g.E1m),
            "k0": matrix_to_json(g.K0),
            "k0inv": matrix_to_json(g.K0inv),
        },
    }
