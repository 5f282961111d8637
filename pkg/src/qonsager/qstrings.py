"""q-string combinatorics.

A q-string of length ell with base a is the set {a q^(2i-ell+1) : 0 <= i < ell}.
This module decides adjacency, general position, strong general position and
equivalence of q-string multisets, and decomposes scalar multisets into
q-strings: plainly, and under the inverse-closed pairing constraint.
"""

import itertools
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

from .scalars import DomainError, format_rational

MAX_SIGN_FACTORS = 16


class NotInverseClosedError(DomainError):
    """The input multiset violates the c / c^-1 pairing precondition."""

    def __init__(self, scalar):
        self.scalar = scalar
        super().__init__("multiset is not inverse-closed: unpaired scalar %s"
                         % format_rational(scalar))


@dataclass(frozen=True, order=True)
class QString:
    ell: int
    base: Fraction

    def __post_init__(self):
        object.__setattr__(self, "base", Fraction(self.base))
        if self.ell < 1:
            raise DomainError("q-string length must be >= 1, got %d" % self.ell)
        if self.base == 0:
            raise DomainError("q-string base must be nonzero")

    def elements(self, q):
        """The ell scalars a q^(2i-ell+1), each with multiplicity one."""
        return tuple(self.base * q.power(2 * i - self.ell + 1) for i in range(self.ell))

    def inverse(self):
        """The elementwise-inverted string S(ell, 1/a)."""
        return QString(self.ell, 1 / self.base)


def inverse_string(s):
    return s.inverse()


def canonical(strings):
    """Canonical sorted form of a q-string multiset."""
    return tuple(sorted(strings, key=lambda s: (s.ell, s.base)))


def adjacent(q, s1, s2):
    """True iff the two strings merge into one strictly longer q-string.

    Fast path: the base ratio must be q^(+-i) with i in
    {|l-l'|+2, |l-l'|+4, ..., l+l'}.
    """
    ratio = s2.base / s1.base
    lo = abs(s1.ell - s2.ell) + 2
    hi = s1.ell + s2.ell
    for i in range(lo, hi + 1, 2):
        if ratio == q.power(i) or ratio == q.power(-i):
            return True
    return False


def _run_as_string(q, rep, e_lo, e_hi):
    ell = e_hi - e_lo + 1
    return QString(ell, rep * q.power(2 * e_lo + ell - 1))


def as_qstring(q, values):
    """The q-string equal to the given set of scalars, or None.

    The set is a q-string iff all values share a q^2-coset and their
    coset exponents form a gap-free run with no repeats.
    """
    norms = [q.coset_normal_form(v) for v in values]
    reps = {rep for rep, _ in norms}
    if len(reps) != 1:
        return None
    exps = sorted(e for _, e in norms)
    if len(set(exps)) != len(exps):
        return None
    if exps[-1] - exps[0] + 1 != len(exps):
        return None
    return _run_as_string(q, reps.pop(), exps[0], exps[-1])


def adjacent_by_union(q, s1, s2):
    """Definitional adjacency test: the set union is a longer q-string."""
    union = set(s1.elements(q)) | set(s2.elements(q))
    merged = as_qstring(q, union)
    return merged is not None and merged.ell > max(s1.ell, s2.ell)


def in_general_position(q, strings):
    strings = list(strings)
    for i in range(len(strings)):
        for j in range(i + 1, len(strings)):
            if adjacent(q, strings[i], strings[j]):
                return False
    return True


def strongly_in_general_position(q, strings):
    """General position under every choice of base inversions.

    Exhaustive over the 2^n sign vectors; n is capped because it equals
    the number of tensor factors in practice.
    """
    strings = list(strings)
    if len(strings) > MAX_SIGN_FACTORS:
        raise DomainError("strong general position test capped at %d strings, got %d"
                          % (MAX_SIGN_FACTORS, len(strings)))
    for signs in itertools.product((1, -1), repeat=len(strings)):
        flipped = [s if e == 1 else s.inverse() for s, e in zip(strings, signs)]
        if not in_general_position(q, flipped):
            return False
    return True


def equivalent(q, a, b):
    """Multiset equality up to base inversions and reordering."""
    a, b = list(a), list(b)
    if len(a) != len(b):
        return False
    if len(a) > MAX_SIGN_FACTORS:
        raise DomainError("equivalence test capped at %d strings" % MAX_SIGN_FACTORS)
    key_b = sorted((s.ell, s.base) for s in b)
    for signs in itertools.product((1, -1), repeat=len(a)):
        key_a = sorted((s.ell, s.base if e == 1 else 1 / s.base)
                       for s, e in zip(a, signs))
        if key_a == key_b:
            return True
    return False


# ---------------------------------------------------------------------------
# decomposition

def _coset_profiles(q, omega):
    """Group a scalar multiset by q^2-coset: rep -> Counter(exponent)."""
    profiles = {}
    for value in omega:
        if value == 0:
            raise DomainError("scalar multisets must not contain zero")
        rep, e = q.coset_normal_form(value)
        profiles.setdefault(rep, Counter())[e] += 1
    return profiles


def _peel_runs(profile):
    """Layer-peel an exponent multiplicity profile into runs.

    Each pass removes one copy of every exponent with positive
    multiplicity, split into maximal gap-free runs; nested or
    gap-separated runs are automatically in general position.
    """
    profile = Counter(profile)
    runs = []
    while +profile:
        exps = sorted(e for e, m in profile.items() if m > 0)
        start = prev = exps[0]
        for e in exps[1:]:
            if e == prev + 1:
                prev = e
                continue
            runs.append((start, prev))
            start = prev = e
        runs.append((start, prev))
        for e in exps:
            profile[e] -= 1
    return runs


def decompose(q, omega):
    """The unique general-position q-string multiset with element union omega."""
    omega = list(omega)
    if not omega:
        raise DomainError("cannot decompose an empty multiset")
    strings = []
    for rep, profile in _coset_profiles(q, omega).items():
        for e_lo, e_hi in _peel_runs(profile):
            strings.append(_run_as_string(q, rep, e_lo, e_hi))
    return canonical(strings)


def _remove_string(q, counts, s):
    """Remove one copy of each element of s from counts; None if unavailable."""
    out = Counter(counts)
    for v in s.elements(q):
        if out[v] <= 0:
            return None
        out[v] -= 1
    return +out


def _self_inverse_coset_cover(q, counts):
    """Backtracking cover of a self-inverse coset by string/mirror pairs.

    Candidates always contain the element with the highest coset exponent
    as their top end (nothing above it exists, so some string must end
    there).  Longest candidates are tried first; the first cover that is
    strongly in general position wins.
    """
    if not +counts:
        return []
    exps = {v: q.coset_normal_form(v)[1] for v in counts if counts[v] > 0}
    top_value = max(exps, key=lambda v: exps[v])
    e_top = exps[top_value]
    run_len = 0
    rep = q.coset_normal_form(top_value)[0]
    while counts[rep * q.power(2 * (e_top - run_len))] > 0:
        run_len += 1
    for ell in range(run_len, 0, -1):
        s = _run_as_string(q, rep, e_top - ell + 1, e_top)
        after = _remove_string(q, counts, s)
        if after is None:
            continue
        after = _remove_string(q, after, s.inverse())
        if after is None:
            continue
        rest = _self_inverse_coset_cover(q, after)
        if rest is None:
            continue
        cover = [s] + rest
        if strongly_in_general_position(q, cover):
            return cover
    return None


def decompose_inverse_closed(q, omega):
    """Cover an inverse-closed multiset by pairs S(ell,a) u S(ell,1/a).

    The result is strongly in general position and unique up to
    equivalence.  Raises NotInverseClosedError when some scalar's inverse
    is missing, or +-1 occurs with odd multiplicity.
    """
    omega = list(omega)
    if not omega:
        raise DomainError("cannot decompose an empty multiset")
    counts = Counter(omega)
    for v, m in counts.items():
        if v == 0:
            raise DomainError("scalar multisets must not contain zero")
        if v in (1, -1):
            if m % 2 != 0:
                raise NotInverseClosedError(v)
        elif counts[1 / v] != m:
            raise NotInverseClosedError(v)

    profiles = _coset_profiles(q, omega)
    strings = []
    done = set()
    for rep in sorted(profiles):
        if rep in done:
            continue
        inv_rep = q.coset_normal_form(1 / rep)[0]
        coset_values = Counter({v: m for v, m in counts.items()
                                if q.coset_normal_form(v)[0] == rep})
        if inv_rep == rep:
            cover = _self_inverse_coset_cover(q, coset_values)
            if cover is None:
                raise DomainError("no strongly-general-position cover found "
                                  "for the self-inverse coset of %s" % format_rational(rep))
            strings.extend(cover)
            done.add(rep)
        else:
            # one coset of the mirrored pair carries the strings
            chosen = rep if rep > inv_rep else inv_rep
            chosen_values = coset_values if chosen == rep else Counter(
                {v: m for v, m in counts.items()
                 if q.coset_normal_form(v)[0] == chosen})
            strings.extend(decompose(q, chosen_values.elements()))
            done.update((rep, inv_rep))
    result = canonical(strings)
    if not strongly_in_general_position(q, result):
        raise DomainError("inverse-closed decomposition is not strongly in "
                          "general position; cross-coset interference")
    return result


def paired_elements(q, strings):
    """Multiset union of S u S^-1 over the given strings."""
    out = []
    for s in strings:
        out.extend(s.elements(q))
        out.extend(s.inverse().elements(q))
    return tuple(sorted(out))


# ---------------------------------------------------------------------------
# serialization

def qstring_to_json(s):
    return {"ell": s.ell, "a": format_rational(s.base)}


def multiset_to_json(strings):
    return [qstring_to_json(s) for s in strings]


def scalars_to_json(values):
    return [format_rational(v) for v in values]
