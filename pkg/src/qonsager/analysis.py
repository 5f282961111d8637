"""Irreducibility, isomorphism, eigenstructure and split decompositions.

Two independent routes are kept for each classification statement: the
criteria evaluated literally from the module data, and linear-algebra
oracles (word-span closure, diagonalizability, intertwiner spaces)
computed directly from the matrices.  Their agreement is the point.
"""

from dataclasses import dataclass

from . import linalg, qstrings
from .loop_module import build_module, k0_weight_dimensions
from .onsager import OnsagerPair, phi_images
from .scalars import DomainError


@dataclass(frozen=True)
class CriteriaVerdict:
    i1: bool
    i2: bool
    i3: bool

    @property
    def irreducible(self):
        return self.i1 and self.i2 and self.i3


@dataclass(frozen=True)
class SplitProfile:
    d: int
    theta: tuple
    theta_star: tuple
    dims_V: tuple
    dims_Vstar: tuple
    dims_U: tuple
    split_spaces: tuple  # RREF bases of the split subspaces, index 0..d


def burnside_irreducible(pair):
    """Word-span test: the pair generates the full matrix algebra.

    Closes the span of words in {I, Z, Z*} under right multiplication by
    the generators; full span (dim^2) means absolute irreducibility.
    Note this is insensitive to diagonalizability; see oracle_irreducible.
    """
    n = pair.dim
    span = linalg.IncrementalSpan()
    ident = linalg.identity(n)
    span.insert(linalg.flatten(ident))
    work = [ident]
    while work:
        m = work.pop()
        for g in (pair.Z, pair.Zstar):
            p = linalg.mul(m, g)
            if span.insert(linalg.flatten(p)):
                work.append(p)
    return span.dimension == n * n


def oracle_irreducible(pair):
    """Independent verdict matching the classification criteria.

    True iff the pair is absolutely irreducible (Burnside) AND both
    matrices are diagonalizable (squarefree minimal polynomials).  The
    diagonalizability half is what the classification's degenerate
    parameter condition detects: a pair with colliding expected
    eigenvalues stays absolutely irreducible but picks up Jordan blocks,
    so it is not a tridiagonal pair.
    """
    return (linalg.is_diagonalizable(pair.Z)
            and linalg.is_diagonalizable(pair.Zstar)
            and burnside_irreducible(pair))


def theorem_criteria(spec, params):
    """Evaluate the three classification conditions literally.

    i1: the string multiset is strongly in general position.
    i2: neither -s^2 nor -t^2 lies in any S(ell_i, a_i) u S(ell_i, 1/a_i).
    i3: none of +-st, +-s/t equals q^i for -d+1 <= i <= d-1, d the diameter.
    """
    q = spec.q
    strings = spec.strings()
    s, t = params.s, params.t
    d = spec.diameter

    i1 = qstrings.strongly_in_general_position(q, strings)

    i2 = True
    for st in strings:
        covered = set(st.elements(q)) | set(st.inverse().elements(q))
        if -s * s in covered or -t * t in covered:
            i2 = False
            break

    i3 = True
    if d >= 1:
        for value in (s * t, -s * t, s / t, -s / t):
            if q.power_index(value, -d + 1, d - 1) is not None:
                i3 = False
                break
    return CriteriaVerdict(i1=i1, i2=i2, i3=i3)


def intertwiner_dimension(pair_a, pair_b):
    """Dimension of {P : P Z_A = Z_B P and P Z*_A = Z*_B P}.

    For two absolutely irreducible pairs this is 1 iff they are
    isomorphic; a nonzero intertwiner is then certified invertible.
    """
    if pair_a.dim != pair_b.dim:
        raise DomainError("intertwiner: dimensions differ (%d vs %d)"
                          % (pair_a.dim, pair_b.dim))
    n = pair_a.dim
    rows = []
    for ga, gb in ((pair_a.Z, pair_b.Z), (pair_a.Zstar, pair_b.Zstar)):
        # vec(P Ga - Gb P) = 0, P laid out row-major
        for i in range(n):
            for j in range(n):
                row = [linalg.ZERO] * (n * n)
                for k in range(n):
                    row[i * n + k] += ga[k][j]
                    row[k * n + j] -= gb[i][k]
                rows.append(tuple(row))
    kernel = linalg.nullspace(tuple(rows))
    if len(kernel) == 1:
        p = linalg.unflatten(kernel[0], n, n)
        if linalg.rank(p) != n:
            raise DomainError("unique intertwiner is singular; "
                              "inputs are not both irreducible")
    return len(kernel)


_ORBIT = (
    lambda s, t: (s, t),
    lambda s, t: (-s, -t),
    lambda s, t: (1 / t, 1 / s),
    lambda s, t: (-1 / t, -1 / s),
    lambda s, t: (t, s),
    lambda s, t: (-t, -s),
    lambda s, t: (1 / s, 1 / t),
    lambda s, t: (-1 / s, -1 / t),
)


def theorem_iso_criteria(spec_a, params_a, spec_b, params_b):
    """Isomorphism test by the classification: equivalent strings and
    (s', t') in the 8-element parameter orbit of (s, t).

    Both inputs must satisfy the irreducibility criteria.
    """
    if not theorem_criteria(spec_a, params_a).irreducible \
            or not theorem_criteria(spec_b, params_b).irreducible:
        raise DomainError("isomorphism criteria require both representations "
                          "to be irreducible")
    if spec_a.q != spec_b.q:
        raise DomainError("isomorphism criteria require a common q")
    if not qstrings.equivalent(spec_a.q, spec_a.strings(), spec_b.strings()):
        return False
    target = (params_b.s, params_b.t)
    return any(f(params_a.s, params_a.t) == target for f in _ORBIT)


def expected_eigenvalues(q, params, d):
    """theta_i = s t q^(2i-d) + (s t)^-1 q^(d-2i) and the Z* analogue."""
    s, t = params.s, params.t
    theta = tuple(s * t * q.power(2 * i - d) + q.power(d - 2 * i) / (s * t)
                  for i in range(d + 1))
    theta_star = tuple(s / t * q.power(2 * i - d) + t / s * q.power(d - 2 * i)
                       for i in range(d + 1))
    return theta, theta_star


def eigen_profile(pair, spec):
    """Exact eigenspaces and the split decomposition.

    The i-th split subspace is the intersection of the first i+1
    Z*-eigenspaces' sum with the last d-i+1 Z-eigenspaces' sum; its
    dimension is cross-checked against the k0 weight-space dimensions
    of the underlying module.
    """
    q = spec.q
    d = spec.diameter
    theta, theta_star = expected_eigenvalues(q, pair.params, d)
    if len(set(theta)) != d + 1 or len(set(theta_star)) != d + 1:
        raise DomainError("expected eigenvalues collide; "
                          "the pair is outside the irreducible regime")

    v_spaces = [linalg.eigenspace(pair.Z, ev) for ev in theta]
    vstar_spaces = [linalg.eigenspace(pair.Zstar, ev) for ev in theta_star]
    dims_v = tuple(len(sp) for sp in v_spaces)
    dims_vstar = tuple(len(sp) for sp in vstar_spaces)
    if sum(dims_v) != pair.dim or sum(dims_vstar) != pair.dim:
        raise DomainError("not diagonalizable with the expected spectrum")

    u_spaces = []
    for i in range(d + 1):
        lower = linalg.subspace_sum(*vstar_spaces[:i + 1])
        upper = linalg.subspace_sum(*v_spaces[i:])
        u_spaces.append(linalg.subspace_intersection(lower, upper))
    dims_u = tuple(len(sp) for sp in u_spaces)

    weight_dims = k0_weight_dimensions(build_module(spec), d)
    if dims_u != weight_dims:
        raise DomainError("split subspace dimensions disagree with the "
                          "k0 weight-space dimensions")
    return SplitProfile(d=d, theta=theta, theta_star=theta_star,
                        dims_V=dims_v, dims_Vstar=dims_vstar,
                        dims_U=dims_u, split_spaces=tuple(u_spaces))


def generating_function(profile):
    """Coefficient list (dim U_0, ..., dim U_d)."""
    return tuple(profile.dims_U)


def product_coefficients(ells):
    """Coefficients of prod_i (1 + x + ... + x^ell_i)."""
    poly = (linalg.ONE,)
    for ell in ells:
        poly = linalg.poly_mul(poly, (linalg.ONE,) * (ell + 1))
    return tuple(int(c) for c in poly)


def generating_function_matches(profile, spec):
    return generating_function(profile) == product_coefficients(
        f.ell for f in spec.factors)


def is_leonard(profile):
    """A pair is a Leonard pair iff every split subspace is a line."""
    return all(dim == 1 for dim in profile.dims_U)


def eigenvalues_match_charpoly(pair, profile):
    """Check theta / theta* are exactly the characteristic roots,
    with multiplicities given by the split dimensions."""
    for m, evs in ((pair.Z, profile.theta), (pair.Zstar, profile.theta_star)):
        expected = (linalg.ONE,)
        for ev, mult in zip(evs, profile.dims_U):
            factor = (-ev, linalg.ONE)
            for _ in range(mult):
                expected = linalg.poly_mul(expected, factor)
        if linalg.charpoly(m) != expected:
            return False
    return True


def affine_standardization_check(pair, spec, lam, mu, lam_star, mu_star):
    """Split-decomposition invariance under Z -> lam Z + mu, Z* likewise.

    Recomputes the split subspaces of the transformed pair from scratch,
    with the eigenvalue lists carried through the affine maps in the
    induced order, and compares them with the original subspaces
    (identically or with the index order reversed).
    """
    if lam == 0 or lam_star == 0:
        raise DomainError("affine standardization requires nonzero scale factors")
    base = eigen_profile(pair, spec)
    n = pair.dim
    ident = linalg.identity(n)
    zt = linalg.add(linalg.scale(lam, pair.Z), linalg.scale(mu, ident))
    zst = linalg.add(linalg.scale(lam_star, pair.Zstar), linalg.scale(mu_star, ident))
    theta_t = [lam * ev + mu for ev in base.theta]
    theta_st = [lam_star * ev + mu_star for ev in base.theta_star]

    v_spaces = [linalg.eigenspace(zt, ev) for ev in theta_t]
    vstar_spaces = [linalg.eigenspace(zst, ev) for ev in theta_st]
    if sum(len(sp) for sp in v_spaces) != n \
            or sum(len(sp) for sp in vstar_spaces) != n:
        return False
    d = base.d
    u_spaces = []
    for i in range(d + 1):
        lower = linalg.subspace_sum(*vstar_spaces[:i + 1])
        upper = linalg.subspace_sum(*v_spaces[i:])
        u_spaces.append(linalg.subspace_intersection(lower, upper))
    dims = tuple(len(sp) for sp in u_spaces)
    if sorted(dims) != sorted(base.dims_U):
        return False
    forward = all(u_spaces[i] == base.split_spaces[i] for i in range(d + 1))
    backward = all(u_spaces[i] == base.split_spaces[d - i] for i in range(d + 1))
    return forward or backward


def build_pair(spec, params):
    """Convenience: module matrices then the (Z, Z*) pair."""
    return phi_images(spec.q, build_module(spec), params)


def analysis_report(spec, params):
    """Full analysis of one (module, s, t) configuration, JSON-friendly."""
    from .loop_module import verify_loop_relations
    from .onsager import verify_td_relations
    from .scalars import format_rational

    gens = build_module(spec)
    pair = phi_images(spec.q, gens, params)
    loop_report = verify_loop_relations(spec.q, gens)
    td_report = verify_td_relations(pair)
    verdict = theorem_criteria(spec, params)
    burnside = burnside_irreducible(pair)
    diag_z = linalg.is_diagonalizable(pair.Z)
    diag_zstar = linalg.is_diagonalizable(pair.Zstar)
    oracle = burnside and diag_z and diag_zstar
    report = {
        "dim": pair.dim,
        "loop_relations_ok": loop_report.passed,
        "td_relations_ok": td_report.passed,
        "criteria": {"i1": verdict.i1, "i2": verdict.i2, "i3": verdict.i3},
        "irreducible": verdict.irreducible,
        "burnside": burnside,
        "diagonalizable": {"z": diag_z, "zstar": diag_zstar},
        "oracle_irreducible": oracle,
        "agree": oracle == verdict.irreducible,
    }
    if verdict.irreducible:
        profile = eigen_profile(pair, spec)
        report["theta"] = [format_rational(v) for v in profile.theta]
        report["theta_star"] = [format_rational(v) for v in profile.theta_star]
        report["dims_U"] = list(profile.dims_U)
        report["g_product_match"] = generating_function_matches(profile, spec)
        report["leonard"] = is_leonard(profile)
        report["charpoly_match"] = eigenvalues_match_charpoly(pair, profile)
    return report
