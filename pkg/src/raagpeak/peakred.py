"""Peaks in factorizations over long-range Whitehead generators, and their removal.

Heights are measured on a class tuple ``W``: ``h_i`` is the length after
applying the first ``i`` factors (in application order). Position ``i``
(``1 <= i < k``) is a peak when ``h_i >= h_{i-1}``, ``h_i >= h_{i+1}``
and one of the two is strict.

``lower_peak`` replaces a peak ``beta alpha^-1`` by a product whose
intermediate heights stay strictly below the peak. It follows the case
split on the relative position of the two multipliers and checks every
answer before returning it.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .counters import D
from .errors import InternalError, MalformedInput
from .graph import Graph
from .whitehead import (
    Factorization,
    Type1,
    Type2,
    apply_tuple,
    apply_word,
    compose,
    conjugation_by,
    fz,
    image_set,
    invert,
    invert_factorization,
    make_type2,
    sigma,
)
from .words import canonical_tuple, tuple_length

MAX_DEPTH = 3

# how often each case produced an accepted answer (for coverage checks)
case_counts = Counter()


@dataclass(frozen=True)
class PeakReport:
    indices: tuple
    heights: tuple
    max_height: int
    steps_at_max: int

    @property
    def measure(self):
        return (self.max_height, self.steps_at_max)


def applied(f: Factorization) -> list:
    return list(reversed(f.factors))


def from_applied(seq) -> Factorization:
    return Factorization(tuple(reversed(list(seq))))


def heights(g: Graph, f: Factorization, W) -> list:
    W = canonical_tuple(g, W)
    out = [tuple_length(W)]
    for aut in applied(f):
        W = apply_tuple(g, aut, W)
        out.append(tuple_length(W))
    return out


def _report(hs) -> PeakReport:
    k = len(hs) - 1
    peaks = []
    for i in range(1, k):
        up, down = hs[i] - hs[i - 1], hs[i] - hs[i + 1]
        if up >= 0 and down >= 0 and (up > 0 or down > 0):
            peaks.append(i)
    if not peaks:
        return PeakReport((), tuple(hs), 0, 0)
    top = max(hs[i] for i in peaks)
    steps = 0
    i = 1
    while i < k:
        if hs[i] != top:
            i += 1
            continue
        j = i
        while j + 1 < k and hs[j + 1] == top:
            j += 1
        if any(i <= p <= j for p in peaks):
            steps += j - i + 1
        i = j + 1
    return PeakReport(tuple(peaks), tuple(hs), top, steps)


def find_peaks(g: Graph, f: Factorization, W) -> PeakReport:
    return _report(heights(g, f, W))


def is_peak(g: Graph, beta, alpha, W) -> bool:
    """Is ``beta alpha^-1`` a peak with respect to ``W``?"""
    return bool(find_peaks(g, fz(beta, invert(g, alpha)), W).indices)


# the bar operation and inner corrections

def bar(g: Graph, aut: Type2) -> Type2:
    """``(L - A - lkl(a), a^-1)``: equals ``aut`` up to an inner automorphism."""
    return make_type2(g, set(g.letters) - aut.A - g.lkl(aut.a), aut.a ^ 1, check=False)


def conjugation_factors(g: Graph, word) -> list:
    """Factors (written order) for ``x -> w^-1 x w`` as letter conjugations."""
    return [conjugation_by(g, c) for c in reversed(word)]


def _safe_type2(g, A, a):
    try:
        return make_type2(g, A, a)
    except MalformedInput:
        return None


def _cases(g: Graph, beta, alpha, W, depth):
    """Peak-lowering candidate for ``beta alpha^-1`` when a case applies."""
    if isinstance(alpha, Type1):
        if isinstance(beta, Type1):
            return None
        moved = make_type2(g, image_set(alpha, beta.A), alpha.perm[beta.a], check=False)
        return "1", fz(invert(g, alpha), moved)
    if isinstance(beta, Type1):
        return None
    A, a = alpha.A, alpha.a
    B, b = beta.A, beta.a
    if (a >> 1) in g.lk[b >> 1]:
        return "2", fz(invert(g, alpha), beta)
    Wp = apply_tuple(g, invert(g, alpha), W)
    if not (A & B):
        if a >> 1 == b >> 1:
            t = _safe_type2(g, (A - {a}) | B, b)
            return None if t is None else ("3a", fz(t))
        if (a ^ 1) not in B:
            if (b ^ 1) not in A:
                return "3b", fz(invert(g, alpha), beta)
            t = _safe_type2(g, (A - {a}) | {a ^ 1} | (B - {b}), a ^ 1)
            return None if t is None else ("3b", fz(t, beta))
        if (b ^ 1) not in A:
            return None
        beta2 = _safe_type2(g, B, a ^ 1)
        if beta2 is None or D(g, beta2, Wp, "formula") >= 0:
            return None
        first = _safe_type2(g, (A | B) - {a}, a ^ 1)
        last = _safe_type2(g, ((B - {a ^ 1}) | {a}) - {b} | {b ^ 1}, a)
        if first is None or last is None:
            return None
        return "3c", fz(last, sigma(g, a, b), first)
    # intersecting sets: split off a shortening piece and recurse
    if depth >= MAX_DEPTH or a in B:
        return None
    Bc = set(g.letters) - B - g.lkl(b)
    gamma = _safe_type2(g, A & Bc, a)
    if gamma is None or D(g, gamma, Wp, "formula") >= 0:
        return None
    rest = _safe_type2(g, (A - Bc) | {a}, a)
    if rest is None:
        return None
    rest_inv = invert(g, rest)
    W1 = apply_tuple(g, rest_inv, W)
    sub = _lower(g, beta, gamma, W1, depth + 1)
    if sub is None:
        return None
    return "4", sub + fz(rest_inv)


def _acceptable(g, beta, alpha, W, cand, top) -> bool:
    if compose(g, cand) != compose(g, fz(beta, invert(g, alpha))):
        return False
    hs = heights(g, cand, W)
    return all(h < top for h in hs[1:-1])


def _lower(g: Graph, beta, alpha, W, depth=0):
    W = canonical_tuple(g, W)
    top = tuple_length(apply_tuple(g, invert(g, alpha), W))
    for swap in (False, True):
        if swap:
            b0, a0 = alpha, beta
            W0 = apply_tuple(g, fz(beta, invert(g, alpha)), W)
        else:
            b0, a0, W0 = beta, alpha, W
        for bbar, abar in ((False, False), (True, False), (False, True), (True, True)):
            if (bbar and not isinstance(b0, Type2)) or (abar and not isinstance(a0, Type2)):
                continue
            bt = bar(g, b0) if bbar else b0
            at = bar(g, a0) if abar else a0
            found = _cases(g, bt, at, W0, depth)
            if found is None:
                continue
            tag, core = found
            if bbar or abar:
                # b0 a0^-1 = C_w (bt at^-1) for the conjugator w below
                psi = fz(bt, invert(g, at))
                w = ()
                if abar:
                    w = apply_word(g, psi, (a0.a ^ 1,))
                if bbar:
                    w = w + (b0.a,)
                end0 = tuple_length(apply_tuple(g, fz(b0, invert(g, a0)), W0))
                if end0 < top:
                    core = Factorization(tuple(conjugation_factors(g, w))) + core
                else:
                    w_right = apply_word(g, invert_factorization(g, psi), w)
                    core = core + Factorization(tuple(conjugation_factors(g, w_right)))
            cand = invert_factorization(g, core) if swap else core
            if _acceptable(g, beta, alpha, W, cand, top):
                case_counts[tag] += 1
                return cand
    return None


def lower_peak(g: Graph, beta, alpha, W) -> Factorization:
    """Rewrite the peak ``beta alpha^-1`` (w.r.t. ``W``) below its height.

    The result composes to ``beta alpha^-1`` and every proper prefix,
    applied to ``W``, is strictly shorter than ``alpha^-1 W``.
    """
    if not is_peak(g, beta, alpha, W):
        raise MalformedInput("beta alpha^-1 is not a peak for this tuple")
    res = _lower(g, beta, alpha, W)
    if res is None:
        raise InternalError(f"no peak-lowering case matched for beta={beta!r}, alpha={alpha!r}, W={W!r}")
    return res


def peak_reduce(g: Graph, f: Factorization, W, trace=None) -> Factorization:
    """Remove all peaks, lowering a highest one at each step.

    ``trace`` (a list) receives the measure ``(max height, steps at max)``
    before each step and once at the end.
    """
    W = canonical_tuple(g, W)
    seq = applied(f)
    rep = _report(heights(g, from_applied(seq), W))
    if trace is not None:
        trace.append(rep.measure)
    target = compose(g, f)
    while rep.indices:
        i = next(p for p in rep.indices if rep.heights[p] == rep.max_height)
        base = apply_tuple(g, from_applied(seq[:i - 1]), W)
        low = lower_peak(g, seq[i], invert(g, seq[i - 1]), base)
        seq = seq[:i - 1] + applied(low) + seq[i + 1:]
        new = _report(heights(g, from_applied(seq), W))
        if not new.measure < rep.measure:
            raise InternalError(f"peak measure did not drop: {rep.measure} -> {new.measure}")
        rep = new
        if trace is not None:
            trace.append(rep.measure)
    out = from_applied(seq)
    if compose(g, out) != target:
        raise InternalError("peak reduction changed the automorphism")
    return out
