"""GL2 local parameters on the automorphic side and the three-level comparison.

Parameters are taken already normalised: any half-integral twist by
|det|^(-1/2) must be applied by the caller, since q^(1/2) is generally not
in the coefficient field.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import UnsupportedLocalType, ZeroParameter
from .fields import Field
from .functor import wd_of
from .phin import FilteredPhiNModule, PhiNModule
from .weil_deligne import (
    WDRep,
    frobenius_semisimplify,
    is_isomorphic,
    monodromy_dominates,
    segments,
    semisimplify,
    sp,
)
from .matrix import Matrix

PS = "unramified-principal-series"
STEINBERG = "steinberg-twist"
LEVELS = ("ss", "fss", "monodromy")

# reason vocabulary (stable)
REASON_MATCH = "match"
REASON_CONTRADICTION = "crystalline vs special: contradiction locus of the main theorem"
REASON_SS_DIFFER = "semisimplifications differ"
REASON_MONODROMY = "galois monodromy exceeds automorphic monodromy"
REASON_FSS_DIFFER = "frobenius-semisimple classes differ"


@dataclass(frozen=True)
class LocalAutomorphicDatum:
    kind: str
    q: int
    E: Field
    params: tuple

    def __post_init__(self):
        if self.kind not in (PS, STEINBERG):
            raise UnsupportedLocalType(f"unsupported local type {self.kind!r}")
        if self.E.characteristic != 0:
            raise UnsupportedLocalType("coefficient field must have characteristic 0")
        if any(self.E(p).is_zero() for p in self.params):
            raise ZeroParameter("local parameters must be nonzero")

    def parameter(self) -> WDRep:
        if self.kind == PS:
            return rec_unramified_ps(*self.params, self.q, self.E)
        return rec_steinberg_twist(self.params[0], self.q, self.E)


def rec_unramified_ps(alpha, beta, q: int, E: Field) -> WDRep:
    alpha, beta = E(alpha), E(beta)
    if alpha.is_zero() or beta.is_zero():
        raise ZeroParameter("Satake parameters must be nonzero")
    return WDRep(q, E, 2, Matrix.diag(E, [alpha, beta]), Matrix.zeros(E, 2))


def rec_steinberg_twist(c, q: int, E: Field) -> WDRep:
    c = E(c)
    if c.is_zero():
        raise ZeroParameter("twisting character value must be nonzero")
    return sp(2, c, q, E)


@dataclass
class CompatReport:
    level: str
    ss_match: bool
    fss_match: bool
    monodromy_ok: bool
    galois_segments: list
    automorphic_segments: list
    reason: str

    def __post_init__(self):
        if self.fss_match and not (self.ss_match and self.monodromy_ok):
            raise AssertionError("F-ss match must imply ss match and monodromy dominance")

    @property
    def verdict(self) -> bool:
        return {"ss": self.ss_match, "fss": self.fss_match, "monodromy": self.monodromy_ok}[self.level]

    def to_json(self):
        return {
            "level": self.level,
            "verdict": self.verdict,
            "ss_match": self.ss_match,
            "fss_match": self.fss_match,
            "monodromy_ok": self.monodromy_ok,
            "galois_segments": self.galois_segments,
            "automorphic_segments": self.automorphic_segments,
            "reason": self.reason,
        }


def compat_check(galois, automorphic, level: str = "fss", tau: int = 0) -> CompatReport:
    """Compare a Galois-side parameter with an automorphic datum at ss, F-ss and monodromy level.

    ``galois`` is a WDRep or a (filtered) (phi, N)-module, converted at ``tau``.
    """
    if level not in LEVELS:
        raise ValueError(f"level must be one of {LEVELS}")
    if isinstance(galois, (PhiNModule, FilteredPhiNModule)):
        galois = wd_of(galois, tau)
    if isinstance(automorphic, LocalAutomorphicDatum):
        auto = automorphic.parameter()
        special = automorphic.kind == STEINBERG
    else:
        auto = automorphic
        special = auto.d == 2 and not auto.N.is_zero()
    ss = is_isomorphic(semisimplify(galois), semisimplify(auto))
    fss = is_isomorphic(galois, auto)
    mono = monodromy_dominates(galois, auto)
    if fss:
        reason = REASON_MATCH
    elif not ss:
        reason = REASON_SS_DIFFER
    elif not mono:
        reason = REASON_MONODROMY
    elif special and galois.N.is_zero():
        reason = REASON_CONTRADICTION
    else:
        reason = REASON_FSS_DIFFER
    gs = [s.to_json() for s in segments(frobenius_semisimplify(galois))]
    au = [s.to_json() for s in segments(frobenius_semisimplify(auto))]
    return CompatReport(level, ss, fss, mono, gs, au, reason)
