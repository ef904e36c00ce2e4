"""Unitarity classification for regular half-integral parameters.

The classification runs on the *string decomposition* of the coordinate
multiset: a maximal consecutive run anchored at 1/2 (``kappa0``), one
anchored at 1 for B/C resp. 0 for D (``sigma0``), and the remaining
maximal runs ("floating" strings).  Unitary parameters are exactly the
ones whose decomposition collapses to the anchored shapes; every other
shape is rejected together with a pair of small K-types on which the
invariant form is indefinite.

Entry points:

* ``decompose_strings``  -- the decomposition itself;
* ``spherical_unitarity`` -- parameters (lam, lam);
* ``relevant_unitarity``  -- parameters whose non-spherical part is a
  single small block (lowest K-type entries 0/1);
* ``full_unitarity``      -- arbitrary Hermitian parameters; peels off
  unitarily-induced character levels and delegates the rest.
"""

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction

from .weights import (
    HalfIntVec,
    RootDatum,
    ZhParam,
    dominant_rep,
    is_dominant,
    is_regular,
    vec,
)
from .characters import KType
from .unipotent import canonical_param

__all__ = [
    "StringDecomp",
    "UnitarityVerdict",
    "decompose_strings",
    "spherical_unitarity",
    "relevant_unitarity",
    "full_unitarity",
]


# ---------------------------------------------------------------------------
# string decomposition
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class StringDecomp:
    """Sorted coordinate multiset of a spherical parameter, cut into
    maximal consecutive runs.

    ``kappa`` entries are integer pairs (k, K) standing for the run
    (k-1/2, k+1/2, ..., K-1/2); ``sigma`` entries (n, N) stand for
    (n, n+1, ..., N).  The anchored runs are stored as lengths only:
    kappa0 = (1/2, ..., K0-1/2), sigma0 = (1, ..., N0) for B/C and
    (0, 1, ..., N0-1) for D.
    """

    datum: RootDatum
    kappa0_len: int
    sigma0_len: int
    kappa: tuple = ()
    sigma: tuple = ()
    nested: bool = True

    @property
    def has_extras(self):
        return bool(self.kappa) or bool(self.sigma)

    def coordinate_count(self):
        total = self.kappa0_len + self.sigma0_len
        total += sum(K - k + 1 for (k, K) in self.kappa)
        total += sum(N - n + 1 for (n, N) in self.sigma)
        return total

    def __str__(self):
        parts = []
        if self.kappa0_len:
            parts.append("k0<%d>" % self.kappa0_len)
        if self.sigma0_len:
            parts.append("s0<%d>" % self.sigma0_len)
        parts.extend("k(%d..%d)" % kk for kk in self.kappa)
        parts.extend("s(%d..%d)" % ss for ss in self.sigma)
        return " ".join(parts) if parts else "(empty)"


def _run_len(cnt, start):
    """Consume the maximal run start, start+1, ... (one copy each)."""
    n = 0
    x = start
    while cnt[x] > 0:
        cnt[x] -= 1
        x += 1
        n += 1
    return n


def _extract(lam, datum):
    """Core extraction; returns (K0, N0, kappa_runs, sigma_runs, nested)
    with runs in extraction order (smallest bottom first)."""
    fam = datum.family
    cnt = Counter(abs(c) for c in lam.halves())
    k0 = _run_len(cnt, Fraction(1, 2))
    s0 = _run_len(cnt, Fraction(1 if fam != "D" else 0))

    kappa, sigma = [], []
    for denom, out in ((2, kappa), (1, sigma)):
        while True:
            left = [x for x in cnt if x.denominator == denom and cnt[x] > 0]
            if not left:
                break
            b = min(left)
            length = _run_len(cnt, b)
            if denom == 2:
                out.append((int(b + Fraction(1, 2)), int(b + length - Fraction(1, 2))))
            else:
                out.append((int(b), int(b + length - 1)))

    # adjacency condition per parity class, in extraction order (anchored
    # run first): consecutive runs must be >= 2 apart or one must contain
    # the other.
    def _chain_ok(runs):
        for (k1, K1), (k2, K2) in zip(runs, runs[1:]):
            if not (k2 - K1 >= 2 or (k1 <= k2 <= K2 <= K1)):
                return False
        return True

    half_chain = ([(1, k0)] if k0 else []) + kappa
    if fam == "D":
        int_chain = ([(0, s0 - 1)] if s0 else []) + sigma
    else:
        int_chain = ([(1, s0)] if s0 else []) + sigma
    nested = _chain_ok(half_chain) and _chain_ok(int_chain)
    return k0, s0, kappa, sigma, nested


def _decompose(lam, datum, strict=True):
    if datum.family not in ("B", "C", "D"):
        raise ValueError("string decomposition is defined for families B/C/D")
    if len(lam) != datum.rank:
        raise ValueError("expected %d coordinates, got %d" % (datum.rank, len(lam)))
    if strict:
        if not is_dominant(lam, datum):
            raise ValueError("lambda must be dominant")
        if lam.is_integral:
            raise ValueError("lambda must be half-integral (some non-integer entry)")
    k0, s0, kappa, sigma, nested = _extract(lam, datum)
    present = lambda runs: tuple(sorted(runs, key=lambda r: (r[0] - r[1], r[0])))
    return StringDecomp(
        datum=datum,
        kappa0_len=k0,
        sigma0_len=s0,
        kappa=present(kappa),
        sigma=present(sigma),
        nested=nested,
    )


def decompose_strings(lam, datum):
    """Cut the coordinate multiset of a dominant half-integral ``lam``
    into anchored and floating maximal consecutive runs."""
    return _decompose(lam, datum, strict=True)


# ---------------------------------------------------------------------------
# verdicts and witness K-types
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class UnitarityVerdict:
    status: str                 # "Unitary" | "NonUnitary"
    case: str                   # which branch of the decision tree fired
    certificate: dict = None    # Unitary only
    witness: tuple = ()         # NonUnitary only: KTypes with indefinite form
    notes: str = ""

    @property
    def is_unitary(self):
        return self.status == "Unitary"

    def as_dict(self):
        out = {"status": self.status, "case": self.case}
        if self.is_unitary:
            out["certificate"] = self.certificate
        else:
            out["witness"] = [str(kt.hw) for kt in self.witness]
        if self.notes:
            out["notes"] = self.notes
        return out

    def __str__(self):
        if self.is_unitary:
            return "Unitary [%s]" % self.case
        wit = ", ".join(str(kt) for kt in self.witness)
        return "NonUnitary [%s] witness {%s}" % (self.case, wit)


def _kt(datum, coords):
    if len(coords) > datum.rank:
        raise RuntimeError(
            "witness K-type %s does not fit rank %d" % (coords, datum.rank))
    hw = sorted(coords, reverse=True)
    hw = hw + [0] * (datum.rank - len(hw))
    return KType(vec(*hw), datum)


def _trivial_kt(datum):
    return _kt(datum, [])


def _adjoint_kt(datum):
    # smallest faithful-ish test K-type: (1,1,0,...) for the orthogonal
    # families, (2,0,...) for C; rank one degenerates to (1) for B.
    if datum.family == "C":
        return _kt(datum, [2])
    if datum.rank == 1:
        if datum.family == "D":
            return None          # so(2) is abelian; no such K-type
        return _kt(datum, [1])
    return _kt(datum, [1, 1])


def _bottom_pair(datum):
    """Trivial + adjoint-type pair; the generic indefiniteness witness."""
    adj = _adjoint_kt(datum)
    if adj is None:
        return (_trivial_kt(datum),)
    return (_trivial_kt(datum), adj)


def _boundary_pair(datum):
    """(1,1,0,..) and (2,0,..): the pair split by parameters that deform
    onto the unitary shape from outside."""
    return (_kt(datum, [1, 1]), _kt(datum, [2]))


def _ones_kt(datum, m):
    return _kt(datum, [1] * m)


def _unitary(case, certificate, notes=""):
    return UnitarityVerdict("Unitary", case, certificate=certificate, notes=notes)


def _nonunitary(case, witness, notes=""):
    return UnitarityVerdict("NonUnitary", case, witness=tuple(witness), notes=notes)


# ---------------------------------------------------------------------------
# spherical parameters
# ---------------------------------------------------------------------------

def _absorb(fam, K0, N0, kappa, sigma):
    """Monotone merge of floating strings into the anchored ones.

    An integer string merges into kappa0 once its bottom sits at or below
    the first free slot K0; a half-integer string merges into sigma0 once
    its bottom reaches the top of sigma0 plus 1/2.  Thresholds only grow,
    so the fixpoint does not depend on the firing order.
    """
    kq, sq = sorted(kappa), sorted(sigma)
    while True:
        for i, (n, N) in enumerate(sq):
            if n <= K0:
                K0 += N - n + 1
                sq.pop(i)
                break
        else:
            for i, (k, K) in enumerate(kq):
                if k <= (N0 + 1 if fam == "B" else N0):
                    N0 += K - k + 1
                    kq.pop(i)
                    break
            else:
                return K0, N0, kq, sq


def _b_imbalance_pair(datum, K0, N0):
    # sigma0 sticking out above kappa0: indefiniteness between the
    # 2K0-ones K-type and its step-up companion.
    first = _ones_kt(datum, 2 * K0)
    if N0 == K0 + 1:
        second = _ones_kt(datum, 2 * K0 + 1)
    else:
        second = _ones_kt(datum, 2 * K0 + 2)
    return (first, second)


def _d_imbalance_pair(datum, K0, N0):
    # kappa0 sticking out above sigma0; for an odd overhang the form is
    # already indefinite inside one isotypic component.
    first = _ones_kt(datum, 2 * N0)
    if (K0 - N0) % 2 == 0:
        return (first, _ones_kt(datum, 2 * N0 + 2))
    return (first,)


def _spherical_B(sd):
    datum, K0, N0 = sd.datum, sd.kappa0_len, sd.sigma0_len
    if K0 == 0:
        return _nonunitary("B:missing-kappa0", _bottom_pair(datum))
    if not sd.has_extras:
        if N0 == 0:
            cert = {"kind": "trivial", "orbit": [1] * (2 * K0 + 1)}
            return _unitary(
                "B:trivial", cert,
                notes="boundary row (no integer anchor) accepted as the "
                      "trivial-representation parameter",
            )
        if N0 <= K0:
            cert = {
                "kind": "unipotent",
                "family": "B", "a": N0, "b": K0,
                "orbit": [2] * (2 * N0) + [1] * (2 * K0 - 2 * N0 + 1),
            }
            return _unitary("B:unipotent", cert)
        return _nonunitary(
            "B:sigma-exceeds-kappa", _b_imbalance_pair(datum, K0, N0))
    K0f, N0f, kq, sq = _absorb("B", K0, N0, sd.kappa, sd.sigma)
    if kq or sq:
        return _nonunitary("B:unabsorbed-extra", _bottom_pair(datum))
    if N0f <= K0f:
        return _nonunitary("B:boundary-pair", _boundary_pair(datum))
    return _nonunitary(
        "B:absorbed-sigma-exceeds-kappa", _b_imbalance_pair(datum, K0f, N0f))


def _string_values(sd):
    """All strings of the decomposition as coordinate lists."""
    out = []
    if sd.kappa0_len:
        out.append([Fraction(2 * i - 1, 2) for i in range(1, sd.kappa0_len + 1)])
    if sd.sigma0_len:
        lo = 0 if sd.datum.family == "D" else 1
        out.append([Fraction(lo + i) for i in range(sd.sigma0_len)])
    for (k, K) in sd.kappa:
        out.append([Fraction(2 * i - 1, 2) for i in range(k, K + 1)])
    for (n, N) in sd.sigma:
        out.append([Fraction(i) for i in range(n, N + 1)])
    return out


def _has_half_gap(strings):
    """True if two different strings come within 1/2 of each other."""
    for i in range(len(strings)):
        for j in range(i + 1, len(strings)):
            for x in strings[i]:
                for y in strings[j]:
                    if abs(x - y) == Fraction(1, 2):
                        return True
    return False


def _c_gap_pair(datum, strings):
    """C witness split: neighbouring strings hit the (1,1,..) K-type,
    fully separated ones the (2,0,..) K-type."""
    if _has_half_gap(strings):
        return "adjacent-strings", (_trivial_kt(datum), _kt(datum, [1, 1]))
    return "separated-strings", (_trivial_kt(datum), _kt(datum, [2]))


def _spherical_C(sd):
    datum, K0, N0 = sd.datum, sd.kappa0_len, sd.sigma0_len
    if K0 >= 1 and N0 == 0 and not sd.has_extras:
        cert = {
            "kind": "unipotent",
            "family": "C_even", "n": K0,
            "orbit": [2] + [1] * (2 * K0 - 2),
        }
        return _unitary("C:oscillator", cert)
    if N0 >= 1 and K0 == 0 and not sd.has_extras:
        cert = {"kind": "trivial", "orbit": [1] * (2 * N0)}
        return _unitary("C:trivial", cert)
    tag, pair = _c_gap_pair(datum, _string_values(sd))
    return _nonunitary("C:" + tag, pair)


def _spherical_D(sd):
    datum, K0, N0 = sd.datum, sd.kappa0_len, sd.sigma0_len
    if N0 == 0:
        return _nonunitary(
            "D:missing-sigma0", _bottom_pair(datum),
            notes="" if datum.rank > 1 else "rank-one degenerate case",
        )
    if not sd.has_extras:
        if K0 == 0:
            cert = {"kind": "trivial", "orbit": [1] * (2 * N0)}
            return _unitary("D:trivial", cert)
        if N0 >= K0:
            cert = {
                "kind": "unipotent",
                "family": "D_even", "a": K0, "b": N0,
                "orbit": [3] + [2] * (2 * K0 - 2) + [1] * (2 * N0 - 2 * K0 + 1),
            }
            return _unitary("D:unipotent", cert)
        return _nonunitary(
            "D:kappa-exceeds-sigma", _d_imbalance_pair(datum, K0, N0))
    K0f, N0f, kq, sq = _absorb("D", K0, N0, sd.kappa, sd.sigma)
    if kq or sq:
        return _nonunitary("D:unabsorbed-extra", _bottom_pair(datum))
    if N0f >= K0f:
        return _nonunitary("D:boundary-pair", _boundary_pair(datum))
    return _nonunitary(
        "D:absorbed-kappa-exceeds-sigma", _d_imbalance_pair(datum, K0f, N0f))


def spherical_unitarity(lam, datum):
    """Decide unitarity of the spherical parameter (lam, lam).

    ``lam`` must be regular with 2*lam integral; it is replaced by its
    dominant representative first.  Type A is routed through the level
    machinery of :func:`full_unitarity`.
    """
    if len(lam) != datum.rank:
        raise ValueError("expected %d coordinates, got %d" % (datum.rank, len(lam)))
    lam = dominant_rep(lam, datum)
    if not is_regular(lam, datum):
        raise ValueError("lambda must be regular")
    if datum.family == "A":
        return full_unitarity(ZhParam(lam, lam, datum))
    sd = _decompose(lam, datum, strict=False)
    return {"B": _spherical_B, "C": _spherical_C, "D": _spherical_D}[datum.family](sd)


# ---------------------------------------------------------------------------
# relevant parameters: one small non-spherical block
# ---------------------------------------------------------------------------

_HALF_BLOCK = "half"      # lambda-block (1/2 \\ -1/2), K-type entry 1
_GL2_BLOCK = "gl2"        # lambda-block (1,0 \\ 0,-1), K-type entries (1,1)


def _split_relevant(param, datum):
    """Normalize and split into (block kind, spherical coordinate list)."""
    cp = canonical_param(param.lambda_L, param.lambda_R, datum)
    pairs = []
    for l, r in zip(cp.lambda_L.halves(), cp.lambda_R.halves()):
        pairs.append((l, r) if l - r >= 0 else (-l, -r))
    spherical = [l for (l, r) in pairs if l == r]
    block = sorted(((l, r) for (l, r) in pairs if l != r), reverse=True)
    if any(l - r != 1 for (l, r) in block):
        raise ValueError("non-spherical block must have lowest K-type entries 1")
    if block == [(Fraction(1, 2), Fraction(-1, 2))]:
        kind = _HALF_BLOCK
    elif block == [(Fraction(1), Fraction(0)), (Fraction(0), Fraction(-1))]:
        if datum.family != "D":
            raise ValueError("the (1,0 \\ 0,-1) block only occurs in type D")
        kind = _GL2_BLOCK
    elif not block:
        raise ValueError("parameter is spherical; use spherical_unitarity")
    else:
        raise ValueError("malformed non-spherical block %s" % (block,))
    return kind, spherical


def _lift(datum, extra, kts):
    """Prepend ``extra`` coordinates to each witness K-type."""
    out = []
    for kt in kts:
        coords = [int(c) for c in kt.hw.halves()] + list(extra)
        out.append(_kt(datum, coords))
    return tuple(out)


def _sub_decomp(values, family):
    sub = RootDatum(family, len(values))
    return _decompose(HalfIntVec.from_halves(sorted(values, reverse=True)), sub, strict=False), sub


def relevant_unitarity(param, datum=None):
    """Decide unitarity when the non-spherical part is a single small
    block: (1/2 \\ -1/2) for B/C/D or (1,0 \\ 0,-1) for D."""
    if datum is None:
        datum = param.datum
    elif datum != param.datum:
        raise ValueError("datum does not match the parameter")
    if datum.family not in ("B", "C", "D"):
        raise ValueError("relevant parameters only occur in families B/C/D")
    kind, spherical = _split_relevant(param, datum)
    lam = dominant_rep(param.lambda_L, datum)
    if not is_regular(lam, datum):
        raise ValueError("lambda must be regular")
    fam = datum.family
    s = len(spherical)

    if kind == _GL2_BLOCK:
        if s == 0:
            cert = {
                "kind": "induced",
                "gl_blocks": [{"size": 2, "level": 1, "string": ["1", "0"]}],
                "core": {"kind": "trivial", "rank": 0},
            }
            return _unitary("relevant-D:gl2-character", cert)
        sub = RootDatum("D", s)
        return _nonunitary(
            "relevant-D:gl2-nontrivial-tail",
            _lift(datum, [1, 1], _bottom_pair(sub)))

    # (1/2 \ -1/2) block ----------------------------------------------------
    block_cert = {"size": 1, "level": 1, "string": ["1/2"]}

    if fam == "B":
        if s == 0:
            cert = {"kind": "induced", "gl_blocks": [block_cert],
                    "core": {"kind": "trivial", "rank": 0}}
            return _unitary("relevant-B:character", cert)
        sub = RootDatum("B", s)
        return _nonunitary(
            "relevant-B:nontrivial-tail",
            _lift(datum, [1], _bottom_pair(sub)))

    if fam == "C":
        if s == 0:
            cert = {"kind": "unipotent", "family": "C_odd", "n": 1}
            return _unitary("C:oscillator-odd", cert)
        sd, sub = _sub_decomp(spherical, "C")
        K1 = sd.kappa[0][1] if len(sd.kappa) == 1 and sd.kappa[0][0] == 2 else None
        if (K1 is not None and sd.sigma0_len == 0 and not sd.sigma
                and sd.kappa0_len == 0):
            cert = {"kind": "unipotent", "family": "C_odd", "n": K1}
            return _unitary("C:oscillator-odd", cert)
        if sd.sigma0_len >= 1 and not sd.has_extras and sd.kappa0_len == 0:
            # the block is a unitary one-dimensional factor on top of the
            # trivial representation
            cert = {
                "kind": "induced", "gl_blocks": [block_cert],
                "core": {"kind": "trivial", "rank": sd.sigma0_len,
                         "orbit": [1] * (2 * sd.sigma0_len)},
            }
            return _unitary("relevant-C:character-induced", cert)
        tag, pair = _c_gap_pair(sub, _string_values(sd))
        return _nonunitary("relevant-C:" + tag, _lift(datum, [1], pair))

    # fam == "D"
    if s == 0:
        cert = {"kind": "induced", "gl_blocks": [block_cert],
                "core": {"kind": "trivial", "rank": 0}}
        return _unitary("relevant-D:character", cert)
    sd, sub = _sub_decomp(spherical, "D")
    N0 = sd.sigma0_len
    if N0 == 0:
        return _nonunitary(
            "relevant-D:missing-sigma0",
            _lift(datum, [1], _bottom_pair(sub)))
    if not sd.has_extras and sd.kappa0_len == 0:
        cert = {"kind": "unipotent", "family": "D_odd", "a": 1, "b": N0}
        return _unitary(
            "relevant-D:unipotent", cert,
            notes="verdict via the unipotent-family cross-check")
    K1 = sd.kappa[0][1] if len(sd.kappa) == 1 and sd.kappa[0][0] == 2 else None
    if (K1 is not None and not sd.sigma and sd.kappa0_len == 0):
        if N0 >= K1:
            cert = {"kind": "unipotent", "family": "D_odd", "a": K1, "b": N0}
            return _unitary("relevant-D:unipotent", cert)
        return _nonunitary(
            "relevant-D:kappa-exceeds-sigma",
            _d_imbalance_pair(datum, K1, N0))
    if any(k >= 3 for (k, K) in sd.kappa):
        return _nonunitary(
            "relevant-D:deep-kappa",
            _lift(datum, [1], _boundary_pair(sub)))
    return _nonunitary(
        "relevant-D:extra-strings",
        _lift(datum, [1], _bottom_pair(sub)))


# ---------------------------------------------------------------------------
# full parameters
# ---------------------------------------------------------------------------

def _is_hermitian(pairs, fam):
    """Is some Weyl twist of (lambda_L, lambda_R) equal to
    (-lambda_R, -lambda_L)?  ``pairs`` holds doubled coordinates.

    Reduces to matching the pair multiset against its entrywise
    (l, r) -> (-r, -l) image, allowing per-pair sign flips for B/C,
    evenly many for D and none for A; for each +/- orbit the flip count
    has a fixed parity, so only counts and one parity bit are needed.
    """
    P = Counter(pairs)
    Q = Counter((-r, -l) for (l, r) in pairs)
    if fam == "A":
        return P == Q
    parity = 0
    seen = set()
    for key in set(P) | set(Q):
        neg = (-key[0], -key[1])
        rep = max(key, neg)
        if rep in seen:
            continue
        seen.add(rep)
        nrep = (-rep[0], -rep[1])
        if rep == nrep:      # the (0,0) pair absorbs any sign
            continue
        if P[rep] + P[nrep] != Q[rep] + Q[nrep]:
            return False
        parity ^= (P[rep] + Q[rep]) & 1
    if fam == "C" or fam == "B":
        return True
    return parity == 0 or P[(0, 0)] > 0


def _block_ok(values, r):
    """May the level-r coordinates sit inside a unitary character of a
    GL factor?  Per parity class: one consecutive run with top+bottom = r."""
    for denom in (1, 2):
        cls = sorted((x for x in values if x.denominator == denom), reverse=True)
        if not cls:
            continue
        for a, b in zip(cls, cls[1:]):
            if a - b != 1:
                return False
        if cls[0] + cls[-1] != r:
            return False
    return True


def _gl_block_descriptors(values, r):
    out = []
    for denom in (1, 2):
        cls = sorted((x for x in values if x.denominator == denom), reverse=True)
        if cls:
            out.append({
                "level": r,
                "size": len(cls),
                "string": [str(x) if x.denominator == 1 else "%d/2" % (2 * x,)
                           for x in cls],
            })
    return out


def _level_violation(datum, pairs, bad_level):
    """Witness for a level whose coordinates cannot form a character:
    the lowest K-type itself against the companion obtained by spreading
    one copy of the level value."""
    mu = sorted((l - r for (l, r) in pairs), reverse=True)
    companion = [x for x in mu]
    # replace the bad level's entries r^m by (r+1, r^(m-2), r-1)
    idx = [i for i, x in enumerate(companion) if x == bad_level]
    companion[idx[0]] = bad_level + 1
    companion[idx[-1]] = bad_level - 1
    first = _kt(datum, [int(x) for x in mu])
    second = _kt(datum, [int(x) for x in companion])
    return (first, second)


def full_unitarity(param):
    """Classify an arbitrary Hermitian parameter with 2*lambda regular
    integral.

    Levels >= 2 of the lowest K-type must stack into unitary characters
    of GL factors; the level <= 1 part is delegated to
    :func:`relevant_unitarity` / :func:`spherical_unitarity` and the
    verdict is pulled back through the induction.
    """
    datum = param.datum
    fam = datum.family
    if not is_regular(param.lambda_L, datum):
        raise ValueError("2*lambda must be regular")
    diff = param.lambda_L - param.lambda_R
    if not diff.is_integral:
        raise ValueError(
            "lowest K-type is not integral; genuine double-cover "
            "parameters are not classified here")
    raw = list(zip(param.lambda_L.doubled, param.lambda_R.doubled))
    if not _is_hermitian(raw, fam):
        raise ValueError("parameter is not Hermitian")

    pairs = [(l, r) for l, r in zip(param.lambda_L.halves(),
                                    param.lambda_R.halves())]
    if fam != "A":
        pairs = [(l, r) if l - r >= 0 else (-l, -r) for (l, r) in pairs]

    levels = {}
    for (l, r) in pairs:
        levels.setdefault(int(l - r), []).append((l, r))

    shape_levels = [r for r in sorted(levels) if (fam == "A" or r >= 1)]
    for r in shape_levels:
        if not _block_ok([l for (l, _) in levels[r]], r):
            return _nonunitary(
                "gl-string-violation", _level_violation(datum, pairs, r),
                notes="level %d" % r)

    gl_levels = shape_levels if fam == "A" else [r for r in shape_levels if r >= 2]
    blocks = []
    for r in gl_levels:
        blocks.extend(_gl_block_descriptors([l for (l, _) in levels[r]], r))

    if fam == "A":
        cert = {"kind": "induced", "gl_blocks": blocks,
                "core": {"kind": "trivial", "rank": 0}}
        return _unitary("A:character-stack", cert)

    # delegate levels <= 1
    sub_pairs = [p for r in levels if r <= 1 for p in levels[r]]
    gl_coords = sorted(
        (r for r in levels if r >= 2 for _ in levels[r]), reverse=True)

    if not sub_pairs:
        sub = _unitary("trivial", {"kind": "trivial", "rank": 0})
    else:
        sub_datum = RootDatum(fam, len(sub_pairs))
        sub_l = HalfIntVec.from_halves(l for (l, _) in sub_pairs)
        sub_r = HalfIntVec.from_halves(r for (_, r) in sub_pairs)
        if 1 in levels:
            sub = relevant_unitarity(ZhParam(sub_l, sub_r, sub_datum))
        else:
            sub = spherical_unitarity(sub_l, sub_datum)

    if not blocks:
        return sub
    if sub.is_unitary:
        cert = {"kind": "induced", "gl_blocks": blocks,
                "core": sub.certificate}
        return _unitary("induced+" + sub.case, cert, notes=sub.notes)
    return _nonunitary(
        "induced+" + sub.case,
        _lift(datum, gl_coords, sub.witness),
        notes=sub.notes)
