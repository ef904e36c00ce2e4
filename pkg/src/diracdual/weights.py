"""Exact weight vectors and classical root data.

All weight coordinates live in (1/2)Z.  To keep every comparison exact
we store *doubled* coordinates (integers equal to twice the coordinate)
and squared norms multiplied by 4.  Nothing in this package ever touches
a float.

Conventions for the four classical families, all in the standard
e_1..e_n coordinates:

  A  gl(n):  positive roots e_i - e_j (i<j); Weyl group S_n.
  B  so(2n+1): e_i +- e_j (i<j) and e_i; signed permutations.
  C  sp(2n):   e_i +- e_j (i<j) and 2e_i; signed permutations.
  D  so(2n):   e_i +- e_j (i<j); signed permutations with an even
               number of sign changes.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

FAMILIES = ("A", "B", "C", "D")


@dataclass(frozen=True)
class HalfIntVec:
    """A vector with coordinates in (1/2)Z, stored doubled.

    ``HalfIntVec((5, 3, 1))`` is the vector (5/2, 3/2, 1/2).  Use
    :func:`vec` to build one from ordinary numbers.
    """

    doubled: tuple

    def __post_init__(self):
        object.__setattr__(self, "doubled", tuple(int(c) for c in self.doubled))

    # -- construction helpers -------------------------------------------

    @staticmethod
    def from_halves(coords):
        """Build from Fractions/ints with denominator 1 or 2."""
        doubled = []
        for c in coords:
            f = Fraction(c)
            if f.denominator not in (1, 2):
                raise ValueError(
                    "coordinate %s is not a half-integer" % (c,)
                )
            doubled.append(int(2 * f))
        return HalfIntVec(tuple(doubled))

    @staticmethod
    def parse(text):
        """Parse comma-separated rationals, e.g. ``"5/2,3/2,1/2"``."""
        parts = [p.strip() for p in text.split(",") if p.strip() != ""]
        if not parts:
            raise ValueError("empty weight string")
        return HalfIntVec.from_halves(Fraction(p) for p in parts)

    # -- arithmetic ------------------------------------------------------

    def __add__(self, other):
        return HalfIntVec(
            tuple(a + b for a, b in zip(self.doubled, other.doubled))
        )

    def __sub__(self, other):
        return HalfIntVec(
            tuple(a - b for a, b in zip(self.doubled, other.doubled))
        )

    def __neg__(self):
        return HalfIntVec(tuple(-a for a in self.doubled))

    def __len__(self):
        return len(self.doubled)

    def __iter__(self):
        return iter(self.halves())

    # -- views -----------------------------------------------------------

    def halves(self):
        return tuple(Fraction(c, 2) for c in self.doubled)

    @property
    def is_integral(self):
        return all(c % 2 == 0 for c in self.doubled)

    def __str__(self):
        out = []
        for c in self.doubled:
            out.append(str(c // 2) if c % 2 == 0 else "%d/2" % c)
        return ",".join(out)

    def __repr__(self):
        return "HalfIntVec(%s)" % (str(self),)


def vec(*coords):
    """Convenience constructor from ints and "p/2" strings:
    ``vec(2, 1, 0)``, ``vec("5/2", "3/2", "1/2")``."""
    return HalfIntVec.from_halves(Fraction(c) for c in coords)


@dataclass(frozen=True)
class RootDatum:
    """One of the classical families A/B/C/D at a given rank."""

    family: str
    rank: int

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError("unknown family %r" % (self.family,))
        if not isinstance(self.rank, int) or self.rank < 1:
            raise ValueError("rank must be a positive integer")

    def positive_roots(self):
        """Positive roots in ordinary (not doubled) integer coordinates."""
        return _positive_roots(self.family, self.rank)

    @property
    def rho(self):
        return rho(self)

    def __str__(self):
        return "%s%d" % (self.family, self.rank)


@lru_cache(maxsize=None)
def _positive_roots(family, rank):
    roots = []
    for i in range(rank):
        for j in range(i + 1, rank):
            r = [0] * rank
            r[i], r[j] = 1, -1
            roots.append(tuple(r))
            if family in ("B", "C", "D"):
                r = [0] * rank
                r[i], r[j] = 1, 1
                roots.append(tuple(r))
    if family == "B":
        for i in range(rank):
            r = [0] * rank
            r[i] = 1
            roots.append(tuple(r))
    if family == "C":
        for i in range(rank):
            r = [0] * rank
            r[i] = 2
            roots.append(tuple(r))
    return tuple(roots)


def simple_roots(datum):
    """Simple roots in ordinary integer coordinates."""
    n = datum.rank
    out = []
    for i in range(n - 1):
        r = [0] * n
        r[i], r[i + 1] = 1, -1
        out.append(tuple(r))
    last = [0] * n
    if datum.family == "B":
        last[n - 1] = 1
        out.append(tuple(last))
    elif datum.family == "C":
        last[n - 1] = 2
        out.append(tuple(last))
    elif datum.family == "D":
        if n < 2:
            raise ValueError("type D needs rank >= 2")
        last[n - 2], last[n - 1] = 1, 1
        out.append(tuple(last))
    return out


@lru_cache(maxsize=None)
def _rho_doubled(family, rank):
    acc = [0] * rank
    for r in _positive_roots(family, rank):
        for i, c in enumerate(r):
            acc[i] += c
    return tuple(acc)  # sum of positive roots = doubled rho


def rho(datum):
    """Half the sum of positive roots.

    B_m: (m-1/2, ..., 1/2); C_m: (m, ..., 1); D_m: (m-1, ..., 1, 0);
    A_n (gl level): (n-1, n-3, ..., 1-n)/2... realized as the actual
    half-sum ((n-1)/2, (n-3)/2, ..., -(n-1)/2).
    """
    return HalfIntVec(_rho_doubled(datum.family, datum.rank))


def norm_sq_x4(v):
    """4 * ||v||^2, an exact nonnegative integer."""
    return sum(c * c for c in v.doubled)


def pairing_x2(v, root):
    """2 * <v, alpha> for a root alpha in ordinary coordinates."""
    return sum(c * r for c, r in zip(v.doubled, root))


def dominant_rep(v, datum):
    """The dominant representative {v} of the Weyl orbit of v.

    Type A sorts descending.  B and C sort absolute values descending.
    D does the same but the last coordinate keeps a minus sign when the
    number of strictly negative coordinates is odd and no coordinate
    vanishes (only an even number of signs can be flipped).
    """
    if len(v) != datum.rank:
        raise ValueError(
            "weight has %d coordinates, datum has rank %d"
            % (len(v), datum.rank)
        )
    d = v.doubled
    if datum.family == "A":
        return HalfIntVec(tuple(sorted(d, reverse=True)))
    mags = sorted((abs(c) for c in d), reverse=True)
    if datum.family in ("B", "C"):
        return HalfIntVec(tuple(mags))
    # type D
    negatives = sum(1 for c in d if c < 0)
    if negatives % 2 == 1 and all(c != 0 for c in d):
        mags[-1] = -mags[-1]
    return HalfIntVec(tuple(mags))


def is_dominant(v, datum):
    if len(v) != datum.rank:
        raise ValueError("rank mismatch")
    d = v.doubled
    if any(d[i] < d[i + 1] for i in range(len(d) - 1)):
        if datum.family != "D":
            return False
        # D allows v_{n-1} >= |v_n| with v_n possibly negative
        if any(d[i] < d[i + 1] for i in range(len(d) - 2)):
            return False
        return len(d) >= 2 and d[-2] >= abs(d[-1])
    if datum.family in ("B", "C"):
        return d[-1] >= 0
    return True


def is_regular(v, datum):
    """No root pairing vanishes."""
    if len(v) != datum.rank:
        raise ValueError("rank mismatch")
    d = v.doubled
    if datum.family == "A":
        return len(set(d)) == len(d)
    mags = [abs(c) for c in d]
    if len(set(mags)) != len(mags):
        return False
    if datum.family in ("B", "C"):
        return all(m != 0 for m in mags)
    return True  # D: a single zero coordinate is fine


def is_half_integral(v):
    """True when 2v is integral but v itself is not.

    Doubled storage makes 2v integral automatically, so this just says
    some coordinate has an odd doubled value.
    """
    return not v.is_integral


def nspan_coefficients(v, datum):
    """Expand v over the simple roots; None unless all coefficients are
    nonnegative integers.

    Closed forms via prefix sums p_i = v_1 + ... + v_i: type A needs
    every p_i >= 0 and p_n = 0; type B every p_i >= 0; type C every
    p_i >= 0 with p_n even; type D needs p_i >= 0 up to i = n-2 and
    both (p_{n-1} -+ v_n)/2 nonnegative integers.
    """
    if len(v) != datum.rank:
        raise ValueError("rank mismatch")
    if not v.is_integral:
        return None
    c = [x // 2 for x in v.doubled]
    n = datum.rank
    prefix = []
    acc = 0
    for x in c:
        acc += x
        prefix.append(acc)
    fam = datum.family
    if fam == "A":
        if prefix[-1] != 0 or any(p < 0 for p in prefix[:-1]):
            return None
        return tuple(prefix[:-1])
    if fam == "B":
        if any(p < 0 for p in prefix):
            return None
        return tuple(prefix)
    if fam == "C":
        if any(p < 0 for p in prefix[:-1]):
            return None
        if prefix[-1] % 2 or prefix[-1] < 0:
            return None
        return tuple(prefix[:-1]) + (prefix[-1] // 2,)
    # type D
    if n < 2:
        return None
    if any(p < 0 for p in prefix[: n - 2]):
        return None
    p_second_last = prefix[n - 2]  # v_1 + ... + v_{n-1}
    vn = c[n - 1]
    minus = p_second_last - vn
    plus = p_second_last + vn
    if minus % 2 or plus % 2 or minus < 0 or plus < 0:
        return None
    return tuple(prefix[: n - 2]) + (minus // 2, plus // 2)


def w0_action(v, datum):
    """The longest Weyl element applied to v.

    -1 in types B and C; coordinate reversal in type A; in type D the
    map is -1 for even rank and -1 composed with one last-coordinate
    flip for odd rank.
    """
    if datum.family == "A":
        return HalfIntVec(tuple(reversed(v.doubled)))
    if datum.family in ("B", "C"):
        return -v
    if datum.rank % 2 == 0:
        return -v
    flipped = [-c for c in v.doubled]
    flipped[-1] = -flipped[-1]
    return HalfIntVec(tuple(flipped))


@dataclass(frozen=True)
class ZhParam:
    """A module parameter: a pair of weights up to simultaneous
    Weyl-group action.  lambda_L - lambda_R must be a weight of a
    finite-dimensional module (integral, or half-integral throughout
    for the genuine double-cover parameters)."""

    lambda_L: HalfIntVec
    lambda_R: HalfIntVec
    datum: RootDatum

    def __post_init__(self):
        if len(self.lambda_L) != self.datum.rank or len(
            self.lambda_R
        ) != self.datum.rank:
            raise ValueError("parameter length does not match rank")
        diff = self.lambda_L - self.lambda_R
        if not (
            diff.is_integral
            or all(c % 2 == 1 for c in diff.doubled)
            and self.datum.family in ("B", "D")
        ):
            raise ValueError(
                "lambda_L - lambda_R = %s is not a module weight" % (diff,)
            )

    @property
    def mu(self):
        """Lowest K-type extremal weight lambda_L - lambda_R."""
        return self.lambda_L - self.lambda_R

    @property
    def nu(self):
        """Continuous part lambda_L + lambda_R."""
        return self.lambda_L + self.lambda_R

    def __str__(self):
        return "(%s ; %s)" % (self.lambda_L, self.lambda_R)
