"""Shared fixtures: deformation parameters, the analysis sweep, and
exhaustive search oracles for the q-string decompositions."""

from collections import Counter
from fractions import Fraction as F

import pytest

from qonsager import (
    DeformationParameter,
    EvaluationSpec,
    ModuleSpec,
    OnsagerParams,
)
from qonsager.qstrings import (
    QString,
    in_general_position,
    strongly_in_general_position,
)


@pytest.fixture(scope="session")
def q2():
    return DeformationParameter(F(2))


@pytest.fixture(scope="session")
def q3():
    return DeformationParameter(F(3))


@pytest.fixture(scope="session")
def q52():
    return DeformationParameter(F(5, 2))


def make_config(q, factors, s, t):
    spec = ModuleSpec(q=q, factors=tuple(EvaluationSpec(l, F(a)) for l, a in factors))
    return spec, OnsagerParams(F(s), F(t))


def sweep_configs():
    """The (module, s, t) sweep: >= 100 configurations, dimension <= 9.

    Includes configurations violating exactly one criterion each, plus a
    broad admissible family across three deformation parameters.
    """
    qs = {2: DeformationParameter(F(2)),
          3: DeformationParameter(F(3)),
          "5/2": DeformationParameter(F(5, 2))}
    configs = []
    for q in qs.values():
        for ell in (1, 2, 3):
            for a in (1, 3):
                for s, t in ((1, 3), (1, 5), (3, 5), (1, 1)):
                    configs.append(make_config(q, [(ell, a)], s, t))
    q = qs[2]
    for ell in (1, 2, 3):
        for a in (F(1, 2), -2):
            for s, t in ((1, 3), (1, 5), (3, 5), (1, 1)):
                configs.append(make_config(q, [(ell, a)], s, t))
    for s, t in ((1, 3), (1, 5), (3, 5), (1, 7)):
        configs.append(make_config(q, [(1, 1), (1, 16)], s, t))
        configs.append(make_config(q, [(1, 3), (1, 48)], s, t))
    for s, t in ((1, 3), (1, 5)):
        configs.append(make_config(q, [(2, 3), (1, 48)], s, t))
        configs.append(make_config(q, [(1, 2), (1, F(1, 8))], s, t))  # fails i1 only
    configs.append(make_config(q, [(2, 3), (2, 48)], 1, 5))  # dim 9
    # single-criterion violations
    configs.append(make_config(q, [(1, -9)], 3, 5))            # i2 only (via -s^2)
    configs.append(make_config(q, [(1, -25)], 1, 5))           # i2 only (via -t^2)
    configs.append(make_config(q, [(2, -9)], 3, 7))            # i2 only, ell=2
    configs.append(make_config(q, [(1, 1)], 1, 1))             # i3 only, st = q^0
    configs.append(make_config(q, [(2, 3)], 1, 2))             # i3 only, st = q^1
    configs.append(make_config(q, [(1, 3)], 2, 2))             # i3 only, s/t = q^0
    configs.append(make_config(q, [(1, 1), (1, 16)], 1, 2))    # i3 only, tensor
    return configs


@pytest.fixture(scope="session")
def sweep():
    """Analysis reports for the whole sweep, computed once."""
    from qonsager.analysis import (
        build_pair,
        burnside_irreducible,
        theorem_criteria,
    )
    from qonsager.linalg import is_diagonalizable

    rows = []
    for spec, params in sweep_configs():
        verdict = theorem_criteria(spec, params)
        pair = build_pair(spec, params)
        burnside = burnside_irreducible(pair)
        diag = is_diagonalizable(pair.Z) and is_diagonalizable(pair.Zstar)
        rows.append({
            "spec": spec, "params": params, "pair": pair,
            "verdict": verdict, "burnside": burnside,
            "diagonalizable": diag, "oracle": burnside and diag,
        })
    return rows


# ---------------------------------------------------------------------------
# exhaustive oracles for the decompositions

def enumerate_strings_containing(q, counts, value):
    """All q-strings, available inside counts, containing the given value."""
    rep, e0 = q.coset_normal_form(value)
    down = 0
    while counts[rep * q.power(2 * (e0 - down - 1))] > 0:
        down += 1
    up = 0
    while counts[rep * q.power(2 * (e0 + up + 1))] > 0:
        up += 1
    out = []
    for lo in range(e0 - down, e0 + 1):
        for hi in range(e0, e0 + up + 1):
            ell = hi - lo + 1
            out.append(QString(ell, rep * q.power(2 * lo + ell - 1)))
    return out


def remove_elements(q, counts, string):
    out = Counter(counts)
    for v in string.elements(q):
        if out[v] <= 0:
            return None
        out[v] -= 1
    return +out


def all_partitions(q, counts):
    """Every multiset partition of counts into q-strings."""
    counts = +Counter(counts)
    if not counts:
        return [()]
    anchor = min(counts)
    results = []
    for s in enumerate_strings_containing(q, counts, anchor):
        rest = remove_elements(q, counts, s)
        if rest is None:
            continue
        for tail in all_partitions(q, rest):
            results.append(tuple(sorted((s,) + tail, key=lambda x: (x.ell, x.base))))
    return sorted(set(results), key=lambda p: [(s.ell, s.base) for s in p])


def general_position_partitions(q, omega):
    return [p for p in all_partitions(q, Counter(omega))
            if in_general_position(q, p)]


def all_paired_covers(q, counts):
    """Every cover of counts by string/mirror pairs S u S^-1."""
    counts = +Counter(counts)
    if not counts:
        return [()]
    anchor = min(counts)
    results = []
    for s in enumerate_strings_containing(q, counts, anchor):
        rest = remove_elements(q, counts, s)
        if rest is None:
            continue
        rest = remove_elements(q, rest, s.inverse())
        if rest is None:
            continue
        for tail in all_paired_covers(q, rest):
            results.append(tuple(sorted((s,) + tail, key=lambda x: (x.ell, x.base))))
    return sorted(set(results), key=lambda p: [(s.ell, s.base) for s in p])


def strongly_general_paired_covers(q, omega):
    return [p for p in all_paired_covers(q, Counter(omega))
            if strongly_in_general_position(q, p)]
