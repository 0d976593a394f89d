"""From (phi, N)-modules to Weil-Deligne representations, one tau-component at a time.

Geometric Frobenius of K acts on D_tau through the f-fold composite of phi,
so the resulting representation has q = l**f.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .errors import IndexOutOfRange
from .phin import FilteredPhiNModule, PhiNModule
from .weil_deligne import WDRep, frobenius_semisimplify, segments


def _module(D):
    return D.module if isinstance(D, FilteredPhiNModule) else D


def wd_of(D: PhiNModule, tau: int = 0) -> WDRep:
    D = _module(D)
    if not 0 <= tau < D.f:
        raise IndexOutOfRange(f"tau={tau} outside 0..{D.f - 1}")
    return WDRep(D.l**D.f, D.E, D.d, D.composite(tau), D.n[tau])


@dataclass
class TauReport:
    pairs: list  # (i, j, isomorphic)
    segments: list  # per tau, serialised segment multiset

    @property
    def verdict(self) -> bool:
        return all(ok for _, _, ok in self.pairs)

    def to_json(self):
        return {
            "tau_independent": self.verdict,
            "pairs": [{"i": i, "j": j, "isomorphic": ok} for i, j, ok in self.pairs],
            "segments": self.segments,
        }


def tau_independence_check(D: PhiNModule) -> TauReport:
    """Compare the Weil-Deligne representations of all tau-components pairwise."""
    D = _module(D)
    reps = [wd_of(D, t) for t in range(D.f)]
    decomp = [segments(frobenius_semisimplify(w)) for w in reps]
    pairs = []
    for i in range(D.f):
        for j in range(i + 1, D.f):
            # same test as is_isomorphic, reusing the decompositions
            pairs.append((i, j, Counter(decomp[i]) == Counter(decomp[j])))
    return TauReport(pairs, [[s.to_json() for s in seg] for seg in decomp])
