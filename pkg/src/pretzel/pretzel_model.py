"""Pretzel vectors, parity data, orientations and normalization moves."""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Sequence

from . import diagram_oracle as _dg


@dataclass(frozen=True)
class PretzelSpec:
    p: tuple

    def __post_init__(self):
        object.__setattr__(self, "p", tuple(int(x) for x in self.p))
        if len(self.p) < 1:
            raise ValueError("a pretzel vector needs at least one entry")

    @property
    def n(self) -> int:
        return len(self.p)

    def mirror(self) -> "PretzelSpec":
        return PretzelSpec(tuple(-x for x in self.p))

    def __str__(self) -> str:
        return "L(" + ",".join(str(x) for x in self.p) + ")"


_SPEC_RE = re.compile(r"^\s*(?:[LK]\s*\(\s*(.*?)\s*\)|(.*?))\s*$")


def parse_spec(text: str) -> PretzelSpec:
    """Parse ``"-2,3,7"``, ``"K(-2,3,7)"`` or ``"L(2,4)"``."""
    m = _SPEC_RE.match(text)
    body = m.group(1) if m.group(1) is not None else m.group(2)
    parts = [x.strip() for x in body.split(",")] if body.strip() else []
    try:
        return PretzelSpec(tuple(int(x) for x in parts))
    except ValueError as exc:
        raise ValueError(f"bad pretzel spec {text!r}: {exc}") from None


def as_spec(spec) -> PretzelSpec:
    if isinstance(spec, PretzelSpec):
        return spec
    if isinstance(spec, str):
        return parse_spec(spec)
    return PretzelSpec(tuple(spec))


def sign(x: int) -> int:
    return (x > 0) - (x < 0)


@dataclass(frozen=True)
class ParityProfile:
    s: int
    odd_entries: tuple
    even_entries: tuple
    alpha: int
    component_count: int


def parity_profile(spec) -> ParityProfile:
    spec = as_spec(spec)
    even = tuple(i for i, x in enumerate(spec.p) if x % 2 == 0)
    odd = tuple(i for i, x in enumerate(spec.p) if x % 2)
    alpha = sum(sign(spec.p[i]) for i in odd)
    if even:
        mu = len(even)
    else:
        mu = 1 if spec.n % 2 else 2
    return ParityProfile(len(even), odd, even, alpha, mu)


def choose_pt(spec) -> int:
    """Index of the distinguished even box used when the number of odd boxes is odd.

    Smallest |p_e| wins.  A tie between a positive and a negative minimum is
    broken by alpha: alpha = 1 picks the negative one, otherwise the positive one.
    """
    spec = as_spec(spec)
    prof = parity_profile(spec)
    if not prof.even_entries:
        raise ValueError("choose_pt needs at least one even entry")
    low = min(abs(spec.p[i]) for i in prof.even_entries)
    cands = [i for i in prof.even_entries if abs(spec.p[i]) == low]
    signs = {sign(spec.p[i]) for i in cands}
    if len(signs) == 1:
        return cands[0]
    want = -1 if prof.alpha == 1 else 1
    return next(i for i in cands if sign(spec.p[i]) == want)


@dataclass(frozen=True)
class OrientedPretzel:
    spec: PretzelSpec
    eps: tuple
    component_orientations: tuple

    def diagram(self) -> _dg.Diagram:
        return _dg.build_diagram(self.spec.p, self.component_orientations).diagram

    def signed_vector(self) -> tuple:
        return tuple(zip(self.spec.p, self.eps))


def realizations(spec):
    """Every orientation class of the standard diagram with its eps vector."""
    spec = as_spec(spec)
    for flips in _dg.orientation_classes(spec.p):
        yield OrientedPretzel(spec, _dg.build_diagram(spec.p, flips).eps, flips)


def realize(spec, eps: Sequence[int]) -> OrientedPretzel:
    """Find an orientation whose traced eps vector equals ``eps``."""
    spec = as_spec(spec)
    eps = tuple(eps)
    for op in realizations(spec):
        if op.eps == eps:
            return op
    raise ValueError(f"eps {eps} is not realizable on {spec}")


def orientation_opposite_all(spec) -> OrientedPretzel:
    """eps = -1 on every even box and +1 on every odd box."""
    spec = as_spec(spec)
    prof = parity_profile(spec)
    if prof.s < 1:
        raise ValueError("needs at least one even entry")
    if len(prof.odd_entries) % 2:
        raise ValueError("odd number of odd entries: use orientation_opposite_except_pt")
    eps = tuple(-1 if x % 2 == 0 else 1 for x in spec.p)
    return realize(spec, eps)


def orientation_opposite_except_pt(spec, t: int | None = None) -> OrientedPretzel:
    """eps = -1 on even boxes other than ``t``; box ``t`` and odd boxes get +1.

    Indices refer to the given order of boxes; nothing is reordered.
    """
    spec = as_spec(spec)
    prof = parity_profile(spec)
    if len(prof.odd_entries) % 2 == 0:
        raise ValueError("needs an odd number of odd entries")
    if t is None:
        t = choose_pt(spec)
    if not 0 <= t < spec.n or spec.p[t] % 2:
        raise ValueError(f"box {t} is not an even box")
    eps = tuple(-1 if (x % 2 == 0 and i != t) else 1 for i, x in enumerate(spec.p))
    return realize(spec, eps)


def reduce_minus_one(spec) -> PretzelSpec:
    """Apply one isotopy move that removes a -1 entry from a 3-box vector.

    ``(q, -1, r) -> (q-2, 1, r-2)``.  Without a -1, the mirrored moves are used:
    ``(q, 1, 1) -> (q+1, -1, -1)`` and ``(q, 1, r) -> (q+2, -1, r+2)``.
    """
    spec = as_spec(spec)
    if spec.n != 3:
        raise ValueError("reduce_minus_one is defined on 3-box vectors")
    p = list(spec.p)
    if -1 in p:
        j = p.index(-1)
        out = list(p)
        out[j] = 1
        out[(j - 1) % 3] -= 2
        out[(j + 1) % 3] -= 2
        return PretzelSpec(tuple(out))
    if 1 not in p:
        raise ValueError("no +-1 entry to move")
    for j in range(3):
        if p[j] != 1 and p[(j + 1) % 3] == 1 and p[(j + 2) % 3] == 1:
            out = list(p)
            out[j] += 1
            out[(j + 1) % 3] = -1
            out[(j + 2) % 3] = -1
            return PretzelSpec(tuple(out))
    j = p.index(1)
    out = list(p)
    out[j] = -1
    out[(j - 1) % 3] += 2
    out[(j + 1) % 3] += 2
    return PretzelSpec(tuple(out))


@dataclass(frozen=True)
class Symmetric:
    spec: PretzelSpec
    mirror: bool


def symmetries(spec) -> set:
    """Rotations and reversals of the boxes, plus the same for the mirror (flagged)."""
    spec = as_spec(spec)
    out = set()
    for mirror, base in ((False, spec.p), (True, tuple(-x for x in spec.p))):
        for seq in (base, base[::-1]):
            for k in range(len(seq)):
                out.add(Symmetric(PretzelSpec(seq[k:] + seq[:k]), mirror))
    return out
