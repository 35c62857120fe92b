"""Finite-check certification of coefficient-sequence identities.

Both sides of an identity "GF coefficients == closed form" are
quasi-polynomials of known bounded degree D and period P from the onset
index on.  Two quasi-polynomials of degree <= D and period dividing P
that agree on D+1 points in every residue class mod P are identical, so
checking the window [onset, onset + (D+1)*P) proves the identity for all
n >= onset.  A Certified verdict is therefore a theorem, not a sample.

fit_quasipoly is the matching guessing procedure: given raw samples it
searches for the smallest (period, degree) ansatz whose per-residue
interpolation reproduces everything it was not trained on.
"""

from __future__ import annotations

import math
import operator
from dataclasses import dataclass

from .closedform import Expr, expr_eval, expr_to_qp
from .genfunc import RationalGF
from .polynomial import interpolate
from .quasipoly import QuasiPoly


class InsufficientSamples(ValueError):
    """Too few samples for the requested ansatz search."""


@dataclass(frozen=True)
class Refutation:
    """First window index where the two sides disagree."""

    n: int
    lhs: int
    rhs: int


@dataclass(frozen=True)
class Certificate:
    """Outcome of a finite-check certification run.

    `window` is the checked index range; it always spans exactly
    degree_bound + 1 points in each residue class mod period.  If
    `refutation` is None the verdict is Certified and the identity holds
    for every n >= onset.
    """

    gf: RationalGF
    expr: Expr
    onset: int
    degree_bound: int
    period: int
    window: range
    refutation: Refutation | None

    @property
    def certified(self) -> bool:
        return self.refutation is None


def certify(gf: RationalGF, expr: Expr, onset_override: int | None = None) -> Certificate:
    """Prove or refute: coefficient n of gf == expr(n) for all n >= onset.

    The degree bound is the max of the generating function's bound and
    the converted expression's degree; the period is the lcm of the two
    periods.  Refutation is a result, not an error: the returned witness
    is the first mismatching index in the window.
    """
    if onset_override is not None and onset_override < 0:
        raise ValueError("onset_override must be non-negative")
    qp = expr_to_qp(expr)
    # gf.degree_bound() is an int >= 0, so the max absorbs a -inf qp degree
    degree = max(gf.degree_bound(), qp.degree)
    period = math.lcm(gf.period_bound(), qp.period)
    onset = gf.onset() if onset_override is None else onset_override
    window = range(onset, onset + (degree + 1) * period)
    coeffs = gf.coeffs(window.stop - 1)
    refutation = None
    for n in window:
        rhs = expr_eval(expr, n)
        if coeffs[n] != rhs:
            refutation = Refutation(n=n, lhs=coeffs[n], rhs=rhs)
            break
    return Certificate(
        gf=gf,
        expr=expr,
        onset=onset,
        degree_bound=degree,
        period=period,
        window=window,
        refutation=refutation,
    )


def rebuild_model(cert: Certificate) -> QuasiPoly:
    """Quasi-polynomial determined by the certificate's own window data.

    Interpolates the checked coefficients per residue class mod
    cert.period.  For an honest certificate this reconstructs the unique
    degree <= D quasi-polynomial behind the sequence; it is the object
    soundness_probe extrapolates with.
    """
    coeffs = cert.gf.coeffs(cert.window.stop - 1)
    constituents = []
    for r in range(cert.period):
        pts = [(n, coeffs[n]) for n in cert.window if n % cert.period == r]
        constituents.append(interpolate(pts))
    return QuasiPoly(cert.period, tuple(constituents))


# Fixed linear congruential generator (Knuth's 64-bit parameters), so
# probe runs are reproducible across platforms and implementations.
_LCG_MULT = 6364136223846793005
_LCG_INC = 1442695040888963407
_LCG_MASK = (1 << 64) - 1


def probe_indices(onset: int, n_max: int, probes: int, seed: int) -> list[int]:
    """Deterministic pseudo-random indices in [onset, n_max]."""
    if probes < 0:
        raise ValueError("probes must be non-negative")
    if n_max < onset:
        raise ValueError("n_max must be >= onset")
    span = n_max - onset + 1
    state = seed & _LCG_MASK
    out = []
    for _ in range(probes):
        state = (_LCG_MULT * state + _LCG_INC) & _LCG_MASK
        out.append(onset + state % span)
    return out


def soundness_probe(cert: Certificate, probes: int, n_max: int, seed: int = 0) -> bool:
    """Empirical backstop for a Certified verdict.

    Rebuilds the quasi-polynomial from the certificate window, draws
    `probes` deterministic indices in [cert.onset, n_max], and compares
    its values against the exact coefficients (one recurrence pass up to
    the largest probed index).  True means every probe agreed; with a
    correct implementation this is a consequence of the certified
    theorem, so False indicates a bug (or a tampered certificate).
    """
    if not cert.certified:
        raise ValueError("soundness_probe requires a Certified certificate")
    if probes < 0:
        raise ValueError("probes must be non-negative")
    if probes == 0:
        return True
    indices = probe_indices(cert.onset, n_max, probes, seed)
    model = rebuild_model(cert)
    coeffs = cert.gf.coeffs(max(indices))
    return all(model(i) == coeffs[i] for i in indices)


@dataclass(frozen=True)
class FitResult:
    """Outcome of a quasi-polynomial ansatz search.

    `model` reproduces every training sample exactly (interpolation is
    exact); holdout_verified is True iff it also reproduces every sample
    beyond the training prefix.  samples_used is the length of that
    training prefix, so len(samples) - samples_used values were held out.
    """

    model: QuasiPoly
    degree: int
    period: int
    holdout_verified: bool
    samples_used: int


def fit_quasipoly(samples, d_max: int, l_max: int, holdout: int) -> FitResult:
    """Search for the smallest quasi-polynomial ansatz explaining samples.

    samples[n] is the value at n.  Candidates (L, d) are tried by
    increasing period L then increasing degree d; each interpolates per
    residue class on the first (d+1)*L samples and is tested on all the
    rest.  The first candidate that survives its test wins.  If none
    does, the candidate with the most test matches is returned with
    holdout_verified=False.

    Requires len(samples) >= (d_max+1)*l_max + holdout so that even the
    largest candidate leaves `holdout` genuinely unseen samples.
    """
    if d_max < 0:
        raise ValueError("d_max must be >= 0")
    if l_max < 1:
        raise ValueError("l_max must be >= 1")
    if holdout < 1:
        raise ValueError("holdout must be >= 1")
    samples = [operator.index(v) for v in samples]
    minimum = (d_max + 1) * l_max + holdout
    if len(samples) < minimum:
        raise InsufficientSamples(
            f"need at least {minimum} samples for d_max={d_max}, "
            f"l_max={l_max}, holdout={holdout}; got {len(samples)}"
        )

    best = None
    best_matches = -1
    for period in range(1, l_max + 1):
        for degree in range(0, d_max + 1):
            train = (degree + 1) * period
            constituents = []
            for r in range(period):
                pts = [(n, samples[n]) for n in range(r, train, period)]
                constituents.append(interpolate(pts))
            model = QuasiPoly(period, tuple(constituents))
            matches = 0
            verified = True
            for n in range(train, len(samples)):
                if model(n) == samples[n]:
                    matches += 1
                else:
                    verified = False
            result = FitResult(
                model=model,
                degree=degree,
                period=period,
                holdout_verified=verified,
                samples_used=train,
            )
            if verified:
                return result
            if matches > best_matches:
                best = result
                best_matches = matches
    return best
