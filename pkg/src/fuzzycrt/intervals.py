"""
Modular arithmetic on integer intervals.

Residues are always the nonnegative representative, so ``x mod a`` lies in
``[0, a)`` for negative ``x`` as well (Python's ``%`` already does this).

Two representations are used side by side:

* a *representing interval* is any :class:`Interval` ``v``; it stands for the
  residue set ``v mod a``. Normalised representatives (see :func:`rep`) start
  in ``[0, a)`` and may run past ``a`` when the projection wraps around.
* a :class:`ModSet` is the canonical linear form of a residue set: sorted,
  disjoint, non-adjacent parts inside ``[0, a-1]``.
"""
from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple

from .errors import InvalidModulusError

__all__ = [
    "Interval",
    "ModSet",
    "project",
    "phi",
    "psi",
    "rep",
    "pair_pieces",
    "intersect_pair",
    "intersect_one_many",
    "merge_arcs",
    "lift_pieces",
    "lift_intersection",
    "member",
    "canonical_violation",
]


@dataclass(frozen=True, order=True, slots=True)
class Interval:
    """Closed, nonempty integer range ``[lo, hi]``."""

    lo: int
    hi: int

    def __post_init__(self):
        if self.lo > self.hi:
            raise ValueError(f"empty interval [{self.lo}, {self.hi}]")

    @property
    def size(self) -> int:
        return self.hi - self.lo + 1

    def __contains__(self, x: int) -> bool:
        return self.lo <= x <= self.hi

    def shift(self, t: int) -> "Interval":
        return Interval(self.lo + t, self.hi + t)

    def __repr__(self):
        return f"[{self.lo}, {self.hi}]"


def _check_modulus(alpha):
    if alpha < 1:
        raise InvalidModulusError(f"modulus must be >= 1, got {alpha}")


def canonical_violation(modulus: int, parts: Sequence[Interval]) -> Optional[str]:
    """Return a description of the first canonical-form violation, or None."""
    if modulus < 1:
        return f"modulus {modulus} < 1"
    prev = None
    for p in parts:
        if not isinstance(p, Interval):
            return f"part {p!r} is not an Interval"
        if p.lo < 0 or p.hi > modulus - 1:
            return f"part {p!r} outside [0, {modulus - 1}]"
        if prev is not None and p.lo <= prev.hi + 1:
            return f"parts {prev!r} and {p!r} overlap, touch or are unsorted"
        prev = p
    return None


def _merge_linear(parts: Iterable[Interval]) -> List[Interval]:
    out: List[Interval] = []
    for p in sorted(parts):
        if out and p.lo <= out[-1].hi + 1:
            if p.hi > out[-1].hi:
                out[-1] = Interval(out[-1].lo, p.hi)
        else:
            out.append(p)
    return out


@dataclass(frozen=True, slots=True)
class ModSet:
    """A set of residues modulo ``modulus`` in canonical linear form.

    The wrap-around set {9, 0, 1} mod 10 is stored as ``[0, 1], [9, 9]``.
    """

    modulus: int
    parts: Tuple[Interval, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(self.parts))
        problem = canonical_violation(self.modulus, self.parts)
        if problem is not None:
            raise ValueError(f"non-canonical ModSet: {problem}")

    @classmethod
    def from_parts(cls, modulus: int, parts: Iterable[Interval]) -> "ModSet":
        """Canonicalise parts that already lie inside ``[0, modulus)``."""
        return cls(modulus, tuple(_merge_linear(parts)))

    @classmethod
    def of(cls, modulus: int, intervals: Iterable[Interval]) -> "ModSet":
        """Union of the projections of arbitrary intervals."""
        _check_modulus(modulus)
        pieces = []
        for v in intervals:
            pieces.extend(_project_parts(v, modulus))
        return cls.from_parts(modulus, pieces)

    @classmethod
    def empty(cls, modulus: int) -> "ModSet":
        return cls(modulus, ())

    @property
    def is_empty(self) -> bool:
        return not self.parts

    @property
    def size(self) -> int:
        return sum(p.size for p in self.parts)

    def __contains__(self, x: int) -> bool:
        return member(x, self)

    def residues(self) -> Iterator[int]:
        for p in self.parts:
            yield from range(p.lo, p.hi + 1)

    def as_arcs(self) -> List[Interval]:
        """Minimal list of representing intervals; joins the wrap-around pair."""
        parts = list(self.parts)
        if (
            len(parts) >= 2
            and parts[0].lo == 0
            and parts[-1].hi == self.modulus - 1
        ):
            last = parts.pop()
            first = parts.pop(0)
            parts.append(Interval(last.lo, self.modulus + first.hi))
        return parts

    def __repr__(self):
        body = ", ".join(repr(p) for p in self.parts) or "empty"
        return f"ModSet(mod {self.modulus}: {body})"


def _project_parts(v: Interval, alpha: int) -> List[Interval]:
    if v.size >= alpha:
        return [Interval(0, alpha - 1)]
    lo, hi = v.lo % alpha, v.hi % alpha
    if lo <= hi:
        return [Interval(lo, hi)]
    return [Interval(0, hi), Interval(lo, alpha - 1)]


def project(v: Interval, alpha: int) -> ModSet:
    """Residues ``{z mod alpha : z in v}``; at most two parts."""
    _check_modulus(alpha)
    return ModSet(alpha, tuple(_project_parts(v, alpha)))


def rep(v: Interval, alpha: int) -> Interval:
    """Normalised representing interval of ``v`` modulo ``alpha``.

    The result starts in ``[0, alpha)`` and is shorter than ``alpha`` unless
    ``v`` covers every residue, in which case it is ``[0, alpha - 1]``.
    """
    if v.size >= alpha:
        return Interval(0, alpha - 1)
    lo = v.lo % alpha
    return Interval(lo, lo + v.hi - v.lo)


def phi(v: Interval, w: Interval, alpha: int) -> Optional[Interval]:
    """Basic interval from ``v``'s lower residue to ``w``'s upper residue, if ordered."""
    _check_modulus(alpha)
    lo, hi = v.lo % alpha, w.hi % alpha
    return Interval(lo, hi) if lo <= hi else None


def psi(v: Interval, w: Interval, alpha: int) -> Interval:
    """Wrap-around basic interval ``[max of lower residues, alpha + min of upper residues]``."""
    _check_modulus(alpha)
    return Interval(
        max(v.lo % alpha, w.lo % alpha),
        alpha + min(v.hi % alpha, w.hi % alpha),
    )


def pair_pieces(v: Interval, w: Interval, alpha: int) -> List[Interval]:
    """Representing intervals for ``v^[alpha] & w^[alpha]``, at most two of them.

    Pieces are disjoint and non-adjacent modulo ``alpha`` and each starts in
    ``[0, alpha)``.  Every result is one of the nine shapes ``{}, v, w,
    psi, phi(v,w), phi(w,v), phi(v,w)+phi(w,v), phi(v,w)+psi, phi(w,v)+psi``.
    """
    _check_modulus(alpha)
    vr, wr = rep(v, alpha), rep(w, alpha)
    if vr.size == alpha:
        return [wr]
    if wr.size == alpha:
        return [vr]
    v_wraps, w_wraps = vr.hi >= alpha, wr.hi >= alpha
    lv, uv = vr.lo, vr.hi % alpha
    lw, uw = wr.lo, wr.hi % alpha

    if not v_wraps and not w_wraps:
        lo, hi = max(lv, lw), min(uv, uw)
        return [Interval(lo, hi)] if lo <= hi else []

    if v_wraps and w_wraps:
        # both contain 0 and alpha-1, so psi is always part of the answer
        pieces = []
        if lv <= uw:
            pieces.append(Interval(lv, uw))
        if lw <= uv:
            pieces.append(Interval(lw, uv))
        pieces.append(psi(vr, wr, alpha))
        return pieces

    # exactly one wraps; call the straight one s and the wrapping one c
    (ls, us), (lc, uc) = ((lv, uv), (lw, uw)) if w_wraps else ((lw, uw), (lv, uv))
    pieces = []
    if ls <= uc:
        pieces.append(Interval(ls, min(us, uc)))
    if max(ls, lc) <= us:
        pieces.append(Interval(max(ls, lc), us))
    return pieces


def intersect_pair(v: Interval, w: Interval, alpha: int) -> ModSet:
    """``v^[alpha] & w^[alpha]`` as a canonical ModSet."""
    return ModSet.of(alpha, pair_pieces(v, w, alpha))


def intersect_one_many(v: Interval, Q: Sequence[Interval], alpha: int) -> List[Interval]:
    """Represent ``v^[alpha] & (union Q)^[alpha]`` with at most ``len(Q) + 1`` intervals.

    Each ``w`` in ``Q`` falls in one of four classes:

    * disjoint from ``v`` modulo ``alpha``: dropped;
    * ``w^[alpha]`` inside ``v^[alpha]``: kept as one interval;
    * ``v^[alpha]`` inside ``w^[alpha]``: the whole answer is ``v``;
    * partial overlap (the set ``D``): every piece of the intersection is an
      arc of ``v`` that either starts at ``v``'s lower residue or ends at its
      upper residue.  Only the longest arc of each kind survives, so ``D``
      contributes at most two intervals.  When those two arcs cover ``v``
      (a start-anchored and an end-anchored piece meeting), the answer
      collapses to ``v``.
    """
    _check_modulus(alpha)
    if not Q:
        return []
    vr = rep(v, alpha)
    if vr.size == alpha:
        return [rep(w, alpha) for w in Q]

    lv, uv = vr.lo, vr.hi % alpha
    contained: List[Interval] = []
    head = tail = 0  # longest arc of D anchored at lv / at uv
    for w in Q:
        wr = rep(w, alpha)
        pieces = pair_pieces(vr, wr, alpha)
        if not pieces:
            continue
        if len(pieces) == 1 and pieces[0].size == vr.size:
            return [vr]
        if len(pieces) == 1 and pieces[0].size == wr.size:
            contained.append(wr)
            continue
        for p in pieces:
            if p.lo == lv:
                head = max(head, p.size)
            elif p.hi % alpha == uv:
                tail = max(tail, p.size)
            else:  # pragma: no cover - excluded by the arc argument
                raise AssertionError(f"unanchored piece {p} of {vr} and {wr} mod {alpha}")

    if head + tail >= vr.size:
        return [vr]
    out = contained
    if head:
        out.append(Interval(lv, lv + head - 1))
    if tail:
        out.append(Interval(vr.hi - tail + 1, vr.hi))
    return out


def merge_arcs(intervals: Iterable[Interval], alpha: int) -> List[Interval]:
    """Canonical cyclic form: the fewest representing intervals for the union.

    Never returns more intervals than it is given.
    """
    return ModSet.of(alpha, intervals).as_arcs()


# -- lifted intersections ------------------------------------------------------

def _intersect_linear(parts: Sequence[Interval], lo: int, hi: int) -> List[Interval]:
    out = []
    for p in parts:
        a, b = max(p.lo, lo), min(p.hi, hi)
        if a <= b:
            out.append(Interval(a, b))
    return out


def _subtract_linear(parts: Sequence[Interval], cut: Sequence[Interval]) -> List[Interval]:
    out = list(parts)
    for c in cut:
        nxt = []
        for p in out:
            if p.hi < c.lo or p.lo > c.hi:
                nxt.append(p)
                continue
            if p.lo < c.lo:
                nxt.append(Interval(p.lo, c.lo - 1))
            if p.hi > c.hi:
                nxt.append(Interval(c.hi + 1, p.hi))
        out = nxt
    return out


def lift_pieces(A: Interval, B: Interval, a: int, b: int) -> List[Tuple[int, List[Interval]]]:
    """Nonempty sets ``D_i = A^[ab] & Y_i`` with their block index ``i``.

    ``Y_i = i*a + (B^[a] minus the residues already used by D_0..D_{i-1})``.
    Only blocks ``[i*a, (i+1)*a)`` that meet ``A^[ab]`` are visited, and the
    walk stops once every residue of ``B^[a]`` has been used, so the cost does
    not depend on ``b``.
    """
    _check_modulus(a)
    _check_modulus(b)
    m = a * b
    remaining = _project_parts(B, a)
    out: List[Tuple[int, List[Interval]]] = []
    for seg in _project_parts(A, m):
        i = seg.lo // a
        while remaining and i * a <= seg.hi:
            base = i * a
            lo, hi = max(seg.lo, base), min(seg.hi, base + a - 1)
            hit = _intersect_linear(remaining, lo - base, hi - base)
            if hit:
                if out and out[-1][0] == i:
                    out[-1][1].extend(p.shift(base) for p in hit)
                else:
                    out.append((i, [p.shift(base) for p in hit]))
                remaining = _subtract_linear(remaining, hit)
            i += 1
    return out


def lift_intersection(A: Interval, B: Interval, a: int, b: int) -> List[Interval]:
    """Disjoint intervals inside ``A^[ab]`` whose union projects onto ``A^[a] & B^[a]``.

    Different pieces never share a residue modulo ``a``, and within each
    residue class the piece keeps the smallest element of ``A^[ab]``.
    """
    flat = [p for _, d in lift_pieces(A, B, a, b) for p in d]
    return _merge_linear(flat)


def member(x: int, M: ModSet) -> bool:
    """True iff ``x mod M.modulus`` lies in some part of ``M``."""
    r = x % M.modulus
    k = bisect_right(M.parts, r, key=_lo)
    return k > 0 and r <= M.parts[k - 1].hi


def _lo(p: Interval) -> int:
    return p.lo
