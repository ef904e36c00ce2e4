"""The distinguished one-parameter families of unitary modules whose
twice-infinitesimal-character is regular but not twice-integral, with
their exact multiplicity-free K-spectra.

Families (rank derived from the parameters):

  B(a, b)          so(2(a+b)+1), 0 < a <= b; spectrum
                   (x1, x1, ..., xa, xa, 0^(b-a))
  C_even(n)        sp(2n) even metaplectic component; spectrum (2k, 0...)
  C_odd(n)         sp(2n) odd component; spectrum (2k+1, 0...)
  D_even(a, b)     so(2(a+b)), spectrum (x1, ..., x_{2a}, 0^(b-a)),
                   sum even
  D_odd(a, b)      same shape, sum odd
  A(a, b)          gl(a+b) module induced from the trivial character of
                   GL(a) x GL(b)
  SpinB(n)         genuine family of the odd spin double cover
  SpinD+(n), SpinD-(n)   genuine families of the even spin double cover

The genuine Spin families carry only their two_lambda value here; their
spectra are not part of this catalog.
"""

from dataclasses import dataclass
import itertools

from .weights import (
    HalfIntVec,
    RootDatum,
    ZhParam,
    dominant_rep,
    norm_sq_x4,
)
from .characters import KType

KINDS = (
    "B",
    "C_even",
    "C_odd",
    "D_even",
    "D_odd",
    "A",
    "SpinB",
    "SpinD+",
    "SpinD-",
)

_AB_KINDS = ("B", "D_even", "D_odd", "A")
_N_KINDS = ("C_even", "C_odd", "SpinB", "SpinD+", "SpinD-")


@dataclass(frozen=True)
class UnipotentFamily:
    kind: str
    a: int = 0
    b: int = 0
    n: int = 0

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError("unknown family kind %r" % (self.kind,))
        if self.kind in _AB_KINDS:
            if not (0 < self.a <= self.b):
                raise ValueError("need 0 < a <= b, got a=%s b=%s" % (self.a, self.b))
        else:
            if self.n < 1:
                raise ValueError("need n >= 1")

    @property
    def datum(self):
        k = self.kind
        if k == "B":
            return RootDatum("B", self.a + self.b)
        if k in ("C_even", "C_odd"):
            return RootDatum("C", self.n)
        if k in ("D_even", "D_odd"):
            return RootDatum("D", self.a + self.b)
        if k == "A":
            return RootDatum("A", self.a + self.b)
        if k == "SpinB":
            return RootDatum("B", self.n)
        return RootDatum("D", self.n)

    def __str__(self):
        if self.kind in _AB_KINDS:
            return "%s(%d,%d)" % (self.kind, self.a, self.b)
        return "%s(%d)" % (self.kind, self.n)


def _halves_down(top_doubled, count):
    # top, top-1, ..., length count (doubled arithmetic)
    return tuple(top_doubled - 2 * i for i in range(count))


def zh_param(fam):
    """The defining parameter pair of the family.

    Both sides are built from the explicit strings; the odd members of
    the C/D families flip the sign of the -1/2 entry on the right side.
    Genuine Spin families have no parameter at this level.
    """
    k = fam.kind
    if k == "B":
        left = _halves_down(-1, fam.b)[::-1] + tuple(
            -2 * i for i in range(fam.a, 0, -1)
        )
        lam = HalfIntVec(left)
        return ZhParam(lam, lam, fam.datum)
    if k in ("C_even", "C_odd"):
        left = tuple(-(2 * (fam.n - i) - 1) for i in range(fam.n))
        right = left if k == "C_even" else left[:-1] + (1,)
        return ZhParam(HalfIntVec(left), HalfIntVec(right), fam.datum)
    if k in ("D_even", "D_odd"):
        half = tuple(-(2 * (fam.a - i) - 1) for i in range(fam.a))
        ints = tuple(-2 * (fam.b - 1 - i) for i in range(fam.b))
        left = half + ints
        if k == "D_even":
            right = left
        else:
            right = half[:-1] + (1,) + ints
        return ZhParam(HalfIntVec(left), HalfIntVec(right), fam.datum)
    if k == "A":
        coords = tuple(fam.a - 1 - 2 * i for i in range(fam.a)) + tuple(
            fam.b - 1 - 2 * i for i in range(fam.b)
        )
        lam = HalfIntVec(coords)
        return ZhParam(lam, lam, fam.datum)
    raise ValueError("no parameter pair for the genuine family %s" % (fam,))


def two_lambda(fam):
    """The dominant vector 2*lambda of the family.

    For the non-genuine families this is twice the left parameter made
    dominant; the genuine Spin families have the fixed half-integer
    strings (2n-1, ..., 3, 1)/2 and (2n-1, ..., 3, +-1)/2.
    """
    k = fam.kind
    if k == "SpinB":
        return HalfIntVec(tuple(2 * (fam.n - i) - 1 for i in range(fam.n)))
    if k in ("SpinD+", "SpinD-"):
        coords = [2 * (fam.n - i) - 1 for i in range(fam.n)]
        if k == "SpinD-":
            coords[-1] = -coords[-1]
        return HalfIntVec(tuple(coords))
    lam = zh_param(fam).lambda_L
    doubled2 = HalfIntVec(tuple(2 * c for c in lam.doubled))
    return dominant_rep(doubled2, fam.datum)


def kspectrum(fam, bound):
    """All K-types of the family with every coordinate at most bound,
    in increasing norm order.  Multiplicity-free by construction.
    """
    if bound < 0:
        raise ValueError("bound must be nonnegative")
    k = fam.kind
    datum = fam.datum
    out = []
    if k in ("C_even", "C_odd"):
        start = 0 if k == "C_even" else 1
        for m in range(start, bound + 1, 2):
            out.append((m,) + (0,) * (fam.n - 1))
    elif k == "B":
        zeros = (0,) * (fam.b - fam.a)
        for alphas in _weakly_decreasing(fam.a, bound):
            hw = tuple(x for x in alphas for _ in range(2)) + zeros
            out.append(hw)
    elif k in ("D_even", "D_odd"):
        want = 0 if k == "D_even" else 1
        zeros = (0,) * (fam.b - fam.a)
        for alphas in _weakly_decreasing(2 * fam.a, bound):
            if sum(alphas) % 2 != want:
                continue
            out.append(alphas + zeros)
    else:
        raise ValueError("no K-spectrum catalog for family %s" % (fam,))
    out.sort(key=lambda hw: (sum(4 * c * c for c in hw), hw))
    for hw in out:
        yield KType(HalfIntVec(tuple(2 * c for c in hw)), datum)


def _weakly_decreasing(length, bound):
    """All weakly decreasing tuples of the given length with entries in
    0..bound."""
    if length == 0:
        yield ()
        return
    for first in range(bound, -1, -1):
        for rest in _weakly_decreasing(length - 1, first):
            yield (first,) + rest


def search_norm_bound_x4(fam):
    """Integer upper bound for norm_sq_x4 of any K-type that could
    still tie or beat the family's spin-norm target.

    A K-type eta can only reach spin norm ||2 lambda|| when
    ||eta|| <= ||2 lambda|| + 2 ||rho||; the returned value is an exact
    integer dominating (||2 lambda|| + 2||rho||)^2 * 4.
    """
    import math

    tl = two_lambda(fam)
    a = norm_sq_x4(tl)
    b = 4 * norm_sq_x4(fam.datum.rho)
    # (sqrt(a) + sqrt(b))^2 = a + b + 2 sqrt(ab), rounded safely up
    return a + b + 2 * math.isqrt(a * b) + 2
