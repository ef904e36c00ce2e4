"""Spin norms, spin-lowest K-types, and Dirac cohomology.

For a unitary module pi whose infinitesimal character lambda has
2*lambda regular and integral, the spin norm

    ||eta||_spin = ||{eta - rho} + rho||

of its K-types is bounded below by ||2 lambda||, and the cohomology is
nonzero exactly when some K-type attains the bound.  When it does, the
cohomology is 2^[l/2] copies of the single K-type with highest weight
2*lambda - rho', taken in the positive system that makes 2*lambda
dominant.  Everything here is exact integer arithmetic on quadrupled
squared norms.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from math import isqrt

from .weights import (
    HalfIntVec,
    RootDatum,
    dominant_rep,
    is_regular,
    norm_sq_x4,
    rho,
)
from .characters import KType, rho_tensor_engine
from .spectrum import UnipotentFamily, kspectrum, search_norm_bound_x4, two_lambda

# The families whose K-spectra are catalogued in spectrum.kspectrum.
SERIES_KINDS = ("B", "C_even", "C_odd", "D_even", "D_odd")


@dataclass(frozen=True)
class DiracResult:
    """Outcome of a Dirac-cohomology computation.

    ``spin_lkts`` lists the spin-norm minimizers found, with their
    multiplicity in the module (always 1 here: the catalogued spectra
    are multiplicity free).  ``tau`` and ``multiplicity`` are populated
    only when the cohomology is nonzero.
    """

    nonzero: bool
    tau: object  # KType, or None when the cohomology vanishes
    multiplicity: object  # 2^[l/2], or None
    spin_lkts: tuple  # ((KType, mult), ...)
    checks: dict = field(default_factory=dict, compare=False)

    def as_dict(self):
        return {
            "nonzero": self.nonzero,
            "tau": None if self.tau is None else str(self.tau.hw),
            "multiplicity": self.multiplicity,
            "spin_lkts": [[str(kt.hw), m] for kt, m in self.spin_lkts],
            "checks": dict(self.checks),
        }

    def __str__(self):
        if not self.nonzero:
            lkts = ", ".join(str(kt) for kt, _ in self.spin_lkts)
            return "H_D = 0 (spin-norm minimizers: %s)" % (lkts or "none scanned")
        tail = (
            "spin-LKT %s" % self.spin_lkts[0][0]
            if self.spin_lkts
            else "spin-LKT not certified"
        )
        return "H_D = %d * %s (%s)" % (self.multiplicity, self.tau, tail)


def spin_norm_sq_x4(eta):
    """4 * ||{eta - rho} + rho||^2 for a K-type eta, an exact integer."""
    r = rho(eta.datum)
    return norm_sq_x4(dominant_rep(eta.hw - r, eta.datum) + r)


def _parity_nonzero(fam):
    """The even/odd selection rule: which C/D family member carries
    cohomology.  None for type B, where every member does."""
    if fam.kind == "C_even":
        return fam.n % 2 == 0
    if fam.kind == "C_odd":
        return fam.n % 2 == 1
    if fam.kind == "D_even":
        return fam.a % 2 == 0
    if fam.kind == "D_odd":
        return fam.a % 2 == 1
    return None


def spin_lkt_unipotent(fam, bound=None):
    """Scan the family's K-spectrum for its spin-norm minimizers.

    With ``bound=None`` the scan is complete: a K-type with
    ||eta|| > ||2 lambda|| + 2||rho|| satisfies
    ||{eta-rho}+rho|| >= ||eta-rho|| >= ||eta|| - ||rho||, which already
    exceeds every norm the scanned region produces, so no minimizer is
    missed.  An explicit ``bound`` caps the coordinates instead (quicker,
    possibly truncated; the result records whether it was complete).
    """
    if fam.kind not in SERIES_KINDS:
        raise ValueError(
            "no spin-norm scan for %s: the family's K-types are not catalogued"
            % (fam,)
        )
    datum = fam.datum
    tl = two_lambda(fam)
    target = norm_sq_x4(tl)
    limit = search_norm_bound_x4(fam)
    cap = isqrt(limit // 4)  # largest single coordinate inside the ball
    complete = True
    if bound is not None:
        if bound < 0:
            raise ValueError("bound must be nonnegative")
        complete = bound >= cap
        cap = bound
    best = None
    minimizers = []
    scanned = 0
    for eta in kspectrum(fam, cap):
        if bound is None and norm_sq_x4(eta.hw) > limit:
            continue
        scanned += 1
        s = spin_norm_sq_x4(eta)
        if best is None or s < best:
            best, minimizers = s, [eta]
        elif s == best:
            minimizers.append(eta)
    if best is None:
        raise ValueError("bound %s leaves no K-types to scan" % (bound,))
    if best < target:
        raise RuntimeError(
            "spin norm fell below ||2 lambda|| for %s: scan inconsistency" % (fam,)
        )
    nonzero = best == target
    if nonzero and len(minimizers) > 1:
        raise RuntimeError(
            "spin-norm tie on the floor for %s: %s"
            % (fam, ", ".join(str(m) for m in minimizers))
        )
    rule = _parity_nonzero(fam)
    if complete and rule is not None and rule != nonzero:
        raise RuntimeError(
            "even/odd selection rule disagrees with the scan for %s" % (fam,)
        )
    checks = {
        "min_spin_norm_sq_x4": best,
        "two_lambda_norm_sq_x4": target,
        "coordinate_bound": cap,
        "candidates": scanned,
        "complete": complete,
    }
    if rule is not None:
        checks["parity_rule_nonzero"] = rule
    if not nonzero:
        return DiracResult(False, None, None, tuple((m, 1) for m in minimizers), checks)
    tau = KType(dominant_rep(tl, datum) - rho(datum), datum)
    return DiracResult(
        True, tau, 2 ** (datum.rank // 2), ((minimizers[0], 1),), checks
    )


def hd_multiplicity(fam, via_tensor=False):
    """[V(2 lambda - rho') : H_D], the total multiplicity of the
    cohomology type.

    The counting path multiplies 2^[l/2] by the number of K-types on the
    spin-norm floor.  With ``via_tensor`` the count is recomputed as
    sum over the minimizers eta of [V(eta) (x) V(rho) : V(2 lambda - rho')]
    (each term is 1 on the floor and 0 off it); the two paths must agree.
    """
    res = spin_lkt_unipotent(fam)
    factor = 2 ** (fam.datum.rank // 2)
    by_count = factor * (len(res.spin_lkts) if res.nonzero else 0)
    if not via_tensor:
        return by_count
    datum = fam.datum
    tau_hw = dominant_rep(two_lambda(fam), datum) - rho(datum)
    engine = rho_tensor_engine(datum)
    total = sum(engine.multiplicity(kt.hw, tau_hw) for kt, _ in res.spin_lkts)
    by_tensor = factor * total
    if by_tensor != by_count:
        raise RuntimeError(
            "multiplicity paths disagree for %s: tensor gives %d, count gives %d"
            % (fam, by_tensor, by_count)
        )
    return by_count


def parity_vanishing(fam, bound):
    """Certify [pi (x) V(rho) : V(2 lambda - rho')] = 0 for a vanishing
    C/D family, two independent ways.

    Every root of types C and D has even coordinate sum, so each
    constituent of V(eta) (x) V(rho) keeps the coordinate-sum parity of
    eta + rho; for the vanishing member of an even/odd pair the target
    2 lambda - rho' sits in the opposite parity class for the whole
    spectrum.  The direct tensor computation checks the same
    multiplicities without the shortcut.  True when both confirm zero;
    ``bound`` caps the scanned coordinates.
    """
    if fam.kind not in ("C_even", "C_odd", "D_even", "D_odd"):
        raise ValueError("parity vanishing only applies to the C/D families")
    res = spin_lkt_unipotent(fam)
    if res.nonzero:
        raise ValueError(
            "%s has nonzero Dirac cohomology; nothing vanishes" % (fam,)
        )
    datum = fam.datum
    r = rho(datum)
    tau_hw = dominant_rep(two_lambda(fam), datum) - r
    # doubled-coordinate sums mod 4 stand in for ordinary sums mod 2
    tau_class = sum(tau_hw.doubled) % 4
    engine = rho_tensor_engine(datum)
    parity_ok = True
    tensor_zero = True
    scanned = 0
    for eta in kspectrum(fam, bound):
        scanned += 1
        if (sum(eta.hw.doubled) + sum(r.doubled)) % 4 == tau_class:
            parity_ok = False
        if engine.multiplicity(eta.hw, tau_hw) != 0:
            tensor_zero = False
    if scanned == 0:
        raise ValueError("bound %s leaves no K-types to test" % (bound,))
    if parity_ok and not tensor_zero:
        raise RuntimeError(
            "parity argument and tensor computation disagree for %s" % (fam,)
        )
    return parity_ok and tensor_zero


def _character_block(size, value):
    """The lambda-coordinates a GL(size) character contributes: the
    character weight spread by the GL half-sum (size-1)/2, ..., -(size-1)/2."""
    half = Fraction(value)
    return [half / 2 + Fraction(size - 1 - 2 * i, 2) for i in range(size)]


def dirac_induced(gl_blocks, core, xi):
    """Dirac cohomology of a module induced from unitary characters on
    GL blocks times a catalogued core family.

    ``gl_blocks`` lists the GL factor sizes ([] means no induction, where
    this reduces to spin_lkt_unipotent); ``xi`` holds one character
    coordinate per GL column, constant on each block.  The assembled
    lambda must be half-integral with 2*lambda regular.  The cohomology
    is nonzero exactly when the core's is; the bottom-layer K-type
    obtained by prefixing xi to the core's spin-LKT is reported as the
    spin-LKT whenever its spin norm verifies against ||2 lambda||.
    """
    blocks = [int(k) for k in gl_blocks]
    if any(k <= 0 for k in blocks):
        raise ValueError("GL block sizes must be positive")
    if core.kind not in SERIES_KINDS:
        raise ValueError("core %s has no catalogued K-spectrum" % (core,))
    if not isinstance(xi, HalfIntVec):
        xi = HalfIntVec.from_halves(Fraction(x) for x in xi)
    if len(xi) != sum(blocks):
        raise ValueError(
            "xi has %d coordinates, the GL blocks need %d" % (len(xi), sum(blocks))
        )
    if not blocks:
        return spin_lkt_unipotent(core)

    xi_vals = xi.halves()
    lam_halves = []
    pos = 0
    for size in blocks:
        seg = xi_vals[pos : pos + size]
        pos += size
        if any(v != seg[0] for v in seg):
            raise ValueError(
                "xi must be constant on each GL block (one unitary character "
                "per factor); block of size %d got %s"
                % (size, ",".join(str(v) for v in seg))
            )
        lam_halves.extend(_character_block(size, seg[0]))
    core_two = two_lambda(core)
    lam_halves.extend(h / 2 for h in core_two.halves())
    if any((2 * h).denominator != 1 for h in lam_halves):
        raise ValueError(
            "xi does not make lambda half-integral: lambda would be (%s)"
            % (",".join(str(h) for h in lam_halves))
        )
    lam = HalfIntVec.from_halves(lam_halves)
    datum = RootDatum(core.datum.family, len(lam))
    two_lam = lam + lam
    if not is_regular(two_lam, datum):
        raise ValueError(
            "2*lambda = %s is not regular for %s" % (two_lam, datum)
        )

    core_res = spin_lkt_unipotent(core)
    checks = {
        "lambda": str(lam),
        "gl_blocks": list(blocks),
        "core": str(core),
        "core_nonzero": core_res.nonzero,
    }
    if not core_res.nonzero:
        return DiracResult(False, None, None, (), checks)

    dom2 = dominant_rep(two_lam, datum)
    tau = KType(dom2 - rho(datum), datum)
    lift = dominant_rep(
        HalfIntVec(xi.doubled + core_res.spin_lkts[0][0].hw.doubled), datum
    )
    candidate = KType(lift, datum)
    verified = spin_norm_sq_x4(candidate) == norm_sq_x4(two_lam)
    checks["spin_lkt_verified"] = verified
    if verified:
        spin_lkts = ((candidate, 1),)
    else:
        spin_lkts = ()
        checks["note"] = (
            "bottom-layer lift %s does not reach the spin-norm floor; "
            "the spin-LKT is not identified" % (candidate,)
        )
    return DiracResult(True, tau, 2 ** (datum.rank // 2), spin_lkts, checks)
