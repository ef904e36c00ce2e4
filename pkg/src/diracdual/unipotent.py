"""Nilpotent-orbit catalog: partition validity, column pairing, the
attached infinitesimal character, and enumeration of the distinguished
parameters indexed by sign choices on column pairs.

The construction is purely combinatorial.  A valid partition is
transposed; a family-specific padding makes the column count odd (B, C)
or even (D); equal columns at fixed scan positions are peeled off in
pairs; the remaining columns are grouped into a singleton/spherical
anchor plus same-parity pairs, and every pair contributes either a
single descending coordinate string (sign +1, spherical) or a staggered
pair of strings, one for each side of the parameter (sign -1).
"""

from dataclasses import dataclass
import itertools

from .weights import HalfIntVec, RootDatum, ZhParam, dominant_rep

FAMILY_RANK = {
    "A": lambda n: n,
    "B": lambda n: (n - 1) // 2,
    "C": lambda n: n // 2,
    "D": lambda n: n // 2,
}


@dataclass(frozen=True)
class OrbitPartition:
    rows: tuple
    family: str

    @property
    def total(self):
        return sum(self.rows)

    @property
    def datum(self):
        return RootDatum(self.family, FAMILY_RANK[self.family](self.total))

    def __str__(self):
        return "%s[%s]" % (self.family, ",".join(str(r) for r in self.rows))


def validate(rows, family):
    """Check the classical parity conditions and return the orbit.

    B: total odd, every even part with even multiplicity.
    C: total even, every odd part with even multiplicity.
    D: total even, every even part with even multiplicity.
    A: any partition.
    """
    rows = tuple(int(r) for r in rows)
    if not rows or any(r <= 0 for r in rows):
        raise ValueError("partition parts must be positive")
    if any(rows[i] < rows[i + 1] for i in range(len(rows) - 1)):
        raise ValueError("partition must be weakly decreasing")
    total = sum(rows)
    if family == "A":
        return OrbitPartition(rows, family)
    if family not in ("B", "C", "D"):
        raise ValueError("unknown family %r" % (family,))
    want_total_odd = family == "B"
    if total % 2 != (1 if want_total_odd else 0):
        raise ValueError(
            "family %s needs total %s, got %d"
            % (family, "odd" if want_total_odd else "even", total)
        )
    bad_parity = 0 if family in ("B", "D") else 1
    counts = {}
    for r in rows:
        counts[r] = counts.get(r, 0) + 1
    for r, c in counts.items():
        if r % 2 == bad_parity and c % 2 == 1:
            raise ValueError(
                "part %d occurs %d times; %s parts need even multiplicity"
                % (r, c, "even" if bad_parity == 0 else "odd")
            )
    return OrbitPartition(rows, family)


def transpose(rows):
    """The dual partition (no padding)."""
    rows = tuple(rows)
    if not rows:
        return ()
    return tuple(
        sum(1 for r in rows if r > k) for k in range(rows[0])
    )


@dataclass(frozen=True)
class ColumnPairing:
    """Result of the column pairing procedure.

    ``equal_removed`` lists the column value of each removed equal pair.
    ``pairs`` are the sign-carrying pairs (big, small).  The anchor is a
    single odd column for B, a trailing even column for C, and the
    (first, last) even pair for D.  ``very_even`` marks the type-D case
    where everything was removed as equal pairs.
    """

    family: str
    equal_removed: tuple
    pairs: tuple
    singleton: object = None  # B: m0 (odd); C: trailing even column
    spherical_pair: object = None  # D: (m0, m_last)
    very_even: bool = False


def column_pairing(orbit):
    cols = list(transpose(orbit.rows))
    fam = orbit.family
    if fam == "A":
        raise ValueError("type A has no column pairing")
    if fam in ("B", "C") and len(cols) % 2 == 0:
        cols.append(0)
    if fam == "D" and len(cols) % 2 == 1:
        cols.append(0)

    # peel equal columns at the family's scan positions, rescanning
    # from scratch after each removal
    start = 1 if fam == "C" else 0
    removed = []
    while True:
        for i in range(start, len(cols) - 1, 2):
            if cols[i] == cols[i + 1]:
                removed.append(cols[i])
                del cols[i : i + 2]
                break
        else:
            break

    if fam == "B":
        singleton, rest = cols[0], cols[1:]
        pairs = [(rest[i], rest[i + 1]) for i in range(0, len(rest), 2)]
        assert singleton % 2 == 1, "leading column must be odd"
        assert all(a % 2 == b % 2 for a, b in pairs)
        return ColumnPairing(fam, tuple(removed), tuple(pairs), singleton=singleton)
    if fam == "C":
        singleton, rest = cols[-1], cols[:-1]
        pairs = [(rest[i], rest[i + 1]) for i in range(0, len(rest), 2)]
        assert singleton % 2 == 0, "trailing column must be even"
        assert all(a % 2 == b % 2 for a, b in pairs)
        return ColumnPairing(fam, tuple(removed), tuple(pairs), singleton=singleton)
    # type D
    if not cols:
        return ColumnPairing(fam, tuple(removed), (), very_even=True)
    sph = (cols[0], cols[-1])
    rest = cols[1:-1]
    pairs = [(rest[i], rest[i + 1]) for i in range(0, len(rest), 2)]
    assert sph[0] % 2 == 0 and sph[1] % 2 == 0, "anchor pair must be even"
    assert all(a % 2 == b % 2 for a, b in pairs)
    return ColumnPairing(fam, tuple(removed), tuple(pairs), spherical_pair=sph)


def _string(top_doubled, bottom_doubled):
    """Doubled coordinates top, top-2, ..., bottom (descending by 1)."""
    return tuple(range(top_doubled, bottom_doubled - 1, -2))


def _pair_string(a, b):
    # (a, b) with sign +1: a/2 down to -(b-2)/2
    return _string(a, -(b - 2))


def _pair_staggered(a, b):
    # sign -1: left side is the +1 string; the right side repeats its
    # head down to (b+2)/2 and shifts the tail down by one
    left = _pair_string(a, b)
    right = _string(a, b + 2) + _string(b - 2, -b)
    return left, right


def _centered_string(v):
    # (v-1)/2 down to -(v-1)/2
    return _string(v - 1, -(v - 1))


def _contributions(pairing):
    """Spherical strings plus per-pair string factories."""
    fam = pairing.family
    spherical = [_centered_string(v) for v in pairing.equal_removed]
    if fam == "B":
        spherical.append(_string(pairing.singleton - 2, 1))
    elif fam == "C":
        spherical.append(_string(pairing.singleton, 2))
    elif pairing.spherical_pair is not None:
        m0, mlast = pairing.spherical_pair
        spherical.append(_string(m0 - 2, -mlast))
    return spherical


@dataclass(frozen=True)
class UnipotentParam:
    orbit: OrbitPartition
    eta: tuple  # one sign per free pair, +1/-1
    zh: ZhParam
    very_even_tag: str = ""
    count_weight: int = 1  # 2 when counting for the disconnected form

    def __str__(self):
        tag = " [%s]" % self.very_even_tag if self.very_even_tag else ""
        return "%s eta=%s %s%s" % (self.orbit, self.eta, self.zh, tag)


def _frozen_pairs(pairing):
    """Indices of pairs whose sign is pinned to +1 (connected group).

    Only type B can trap the padding zero inside a pair; a pair ending
    in 0 admits the -1 choice only on the disconnected form.
    """
    return tuple(
        i for i, (a, b) in enumerate(pairing.pairs) if b == 0
    )


def infinitesimal_character(orbit):
    """The attached infinitesimal character, as a dominant weight."""
    if orbit.family == "A":
        cols = transpose(orbit.rows)
        coords = tuple(
            c for v in cols for c in _centered_string(v)
        )
        datum = orbit.datum
        return dominant_rep(HalfIntVec(coords), datum)
    pairing = column_pairing(orbit)
    coords = []
    for s in _contributions(pairing):
        coords.extend(s)
    for a, b in pairing.pairs:
        coords.extend(_pair_string(a, b))
    datum = orbit.datum
    return dominant_rep(HalfIntVec(tuple(coords)), datum)


def component_group_order(orbit):
    """|A(O)| for the connected group: a power of two.

    B/D count distinct odd row sizes (one factor of two is absorbed by
    the center for the special orthogonal groups), C counts distinct
    even row sizes.
    """
    if orbit.family == "A":
        return 1
    if orbit.family == "C":
        return 2 ** len({r for r in orbit.rows if r % 2 == 0})
    odd = len({r for r in orbit.rows if r % 2 == 1})
    return 2 ** max(odd - 1, 0)


def _canonical_pairs(lL, lR, family):
    """Simultaneous Weyl action making the left side dominant, with a
    deterministic tie-break on the right side."""
    pairs = [list(p) for p in zip(lL, lR)]
    if family == "A":
        pairs.sort(key=lambda p: (-p[0], -p[1]))
        return pairs
    flips = 0
    for p in pairs:
        if p[0] < 0:
            p[0], p[1] = -p[0], -p[1]
            flips += 1
        elif p[0] == 0 and p[1] < 0 and family != "D":
            p[1] = -p[1]
    if family == "D":
        zero_ps = [p for p in pairs if p[0] == 0]
        for p in zero_ps:
            if p[1] < 0:
                p[1] = -p[1]
                flips += 1
        if flips % 2 == 1:
            if zero_ps:
                # flip back the zero-left pair with the smallest right
                # value; only the right sign is visible
                p = min(zero_ps, key=lambda p: abs(p[1]))
                p[1] = -p[1]
            else:
                # keep one genuine sign: put it on the smallest left
                # coordinate so the left side stays dominant
                p = min(pairs, key=lambda p: (p[0], p[1]))
                p[0], p[1] = -p[0], -p[1]
    pairs.sort(key=lambda p: (-abs(p[0]), p[0] < 0, -p[1]))
    return pairs


def canonical_param(lL, lR, datum):
    """Canonical representative of (lL, lR) up to simultaneous action."""
    pairs = _canonical_pairs(list(lL.doubled), list(lR.doubled), datum.family)
    return ZhParam(
        HalfIntVec(tuple(p[0] for p in pairs)),
        HalfIntVec(tuple(p[1] for p in pairs)),
        datum,
    )


def enumerate_parameters(orbit, so=True):
    """All distinguished parameters attached to the orbit.

    One parameter per sign vector on the free pairs; the count equals
    component_group_order for the connected group.  With ``so=False``
    each parameter carries count_weight 2 (the sign-character twists of
    the disconnected orthogonal form are not stored separately).
    """
    weight = 1 if so else 2
    datum = orbit.datum
    if orbit.family == "A":
        lam = infinitesimal_character(orbit)
        return [
            UnipotentParam(
                orbit, (), ZhParam(lam, lam, datum), count_weight=weight
            )
        ]
    pairing = column_pairing(orbit)
    spherical = []
    for s in _contributions(pairing):
        spherical.extend(s)
    frozen = set(_frozen_pairs(pairing))
    free = [i for i in range(len(pairing.pairs)) if i not in frozen]
    out = []
    for choice in itertools.product((1, -1), repeat=len(free)):
        eta = [1] * len(pairing.pairs)
        for i, s in zip(free, choice):
            eta[i] = s
        left = list(spherical)
        right = list(spherical)
        for (a, b), s in zip(pairing.pairs, eta):
            if s == 1:
                seg = _pair_string(a, b)
                left.extend(seg)
                right.extend(seg)
            else:
                l_seg, r_seg = _pair_staggered(a, b)
                left.extend(l_seg)
                right.extend(r_seg)
        zh = canonical_param(
            HalfIntVec(tuple(left)), HalfIntVec(tuple(right)), datum
        )
        tag = "I/II" if pairing.very_even else ""
        out.append(
            UnipotentParam(
                orbit, tuple(eta), zh, very_even_tag=tag, count_weight=weight
            )
        )
    return out


def is_stably_trivial(orbit):
    """Combinatorial test for the orbits whose full component group
    survives the Lusztig quotient.

    A: always.  B: the largest part is the only odd part with odd
    multiplicity.  C/D: every even part has even multiplicity (for D
    this is implied by validity).
    """
    counts = {}
    for r in orbit.rows:
        counts[r] = counts.get(r, 0) + 1
    if orbit.family == "A":
        return True
    if orbit.family == "B":
        odd_odd = sorted(
            (r for r, c in counts.items() if r % 2 == 1 and c % 2 == 1),
            reverse=True,
        )
        return odd_odd == [orbit.rows[0]]
    return all(c % 2 == 0 for r, c in counts.items() if r % 2 == 0)


def is_triangular(orbit):
    """The staircase partitions: B (2m+1,2m-1,2m-1,...,3,3,1,1),
    C (2m,2m,...,2,2), D (2m-1,2m-1,...,1,1).  Not defined for A."""
    rows = list(orbit.rows)
    if orbit.family == "A":
        return False
    if orbit.family == "B":
        want = [rows[0]]
        v = rows[0] - 2
        while v >= 1:
            want.extend([v, v])
            v -= 2
        return rows[0] % 2 == 1 and rows == want
    if orbit.family == "C":
        want = []
        v = rows[0]
        while v >= 2:
            want.extend([v, v])
            v -= 2
        return rows[0] % 2 == 0 and rows == want
    want = []
    v = rows[0]
    while v >= 1:
        want.extend([v, v])
        v -= 2
    return rows[0] % 2 == 1 and rows == want


def alt_parameter(orbit, pair_index):
    """The alternative centered string for an equal even pair (B/D) or
    equal odd pair (C), in place of the staggered construction.

    Returns the parameter obtained by replacing that pair's
    contribution with ((m-1)/2, ..., -(m-1)/2) on both sides.
    """
    pairing = column_pairing(orbit)
    if not 0 <= pair_index < len(pairing.pairs):
        raise ValueError("no pair at index %d" % pair_index)
    a, b = pairing.pairs[pair_index]
    need = 0 if orbit.family in ("B", "D") else 1
    if a != b or a % 2 != need:
        raise ValueError(
            "pair %s does not admit the alternative parameter" % ((a, b),)
        )
    datum = orbit.datum
    coords = []
    for s in _contributions(pairing):
        coords.extend(s)
    for i, (x, y) in enumerate(pairing.pairs):
        if i == pair_index:
            coords.extend(_centered_string(x))
        else:
            coords.extend(_pair_string(x, y))
    lam = HalfIntVec(tuple(coords))
    zh = canonical_param(lam, lam, datum)
    eta = tuple(1 if i != pair_index else 0 for i in range(len(pairing.pairs)))
    return UnipotentParam(orbit, eta, zh)
