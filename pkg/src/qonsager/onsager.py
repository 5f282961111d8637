"""The two-generator pair (Z, Z*) realized inside a loop-algebra module.

Z and Z* are built from the module generators and the parameters (s, t);
they satisfy the tridiagonal (TD) relations with constants
beta = q^2 + q^-2 and delta = -(q^2 - q^-2)^2.  Matrices act on column
vectors, so a composite like "e1- k1" applies k1 first, i.e. E1m * K0inv.
"""

from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .loop_module import RelationCheck, RelationReport, matrix_to_json
from .scalars import DomainError, format_rational


@dataclass(frozen=True)
class OnsagerParams:
    s: Fraction
    t: Fraction

    def __post_init__(self):
        object.__setattr__(self, "s", Fraction(self.s))
        object.__setattr__(self, "t", Fraction(self.t))
        if self.s == 0:
            raise DomainError("parameter s must be nonzero")
        if self.t == 0:
            raise DomainError("parameter t must be nonzero")


@dataclass(frozen=True)
class OnsagerPair:
    q: object
    params: OnsagerParams
    Z: tuple
    Zstar: tuple
    dim: int


def td_constants(q):
    """(beta, delta) = (q^2 + q^-2, -(q^2 - q^-2)^2)."""
    qq = q.q
    return qq ** 2 + qq ** -2, -((qq ** 2 - qq ** -2) ** 2)


def phi_images(q, g, params):
    """Build Z and Z* on the module realized by the generator set g.

    Z  = alpha (s E0p + s^-1 E1m K0inv) + t s K0 + (t s)^-1 K0inv
    Z* = s E0m K0 + s^-1 E1p + t^-1 s K0 + t s^-1 K0inv
    with alpha = -q^-1 (q - q^-1)^2.
    """
    s, t = params.s, params.t
    qq = q.q
    alpha = -(qq ** -1) * (qq - qq ** -1) ** 2
    x = linalg.scale(alpha, linalg.add(
        linalg.scale(s, g.E0p),
        linalg.scale(1 / s, linalg.mul(g.E1m, g.K0inv)),
    ))
    y = linalg.add(
        linalg.scale(s, linalg.mul(g.E0m, g.K0)),
        linalg.scale(1 / s, g.E1p),
    )
    z = linalg.add(x, linalg.scale(t * s, g.K0),
                   linalg.scale(1 / (t * s), g.K0inv))
    zstar = linalg.add(y, linalg.scale(s / t, g.K0),
                       linalg.scale(t / s, g.K0inv))
    return OnsagerPair(q=q, params=params, Z=z, Zstar=zstar, dim=g.dim)


def verify_td_relations(pair):
    """Residuals of both TD relations; passes iff both are exactly zero."""
    beta, delta = td_constants(pair.q)
    checks = []
    for name, a, b in (("td relation in z", pair.Z, pair.Zstar),
                       ("td relation in z*", pair.Zstar, pair.Z)):
        a2 = linalg.mul(a, a)
        inner = linalg.add(
            linalg.mul(a2, b),
            linalg.scale(-beta, linalg.mul(linalg.mul(a, b), a)),
            linalg.mul(b, a2),
        )
        residual = linalg.sub(linalg.commutator(a, inner),
                              linalg.scale(delta, linalg.commutator(a, b)))
        checks.append(RelationCheck(name, linalg.is_zero(residual)))
    return RelationReport(tuple(checks))


def pair_to_json(pair):
    return {
        "q": format_rational(pair.q.q),
        "s": format_rational(pair.params.s),
        "t": format_rational(pair.params.t),
        "dim": pair.dim,
        "z": matrix_to_json(pair.Z),
        "zstar": matrix_to_json(pair.Zstar),
    }
