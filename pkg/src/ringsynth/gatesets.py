"""The six restricted Clifford+T gate sets and the rings they generate."""
from __future__ import annotations

from dataclasses import dataclass

from .rings import RingTag, tag_leq


@dataclass(frozen=True)
class GateSet:
    tag: str
    gates: frozenset
    ring: RingTag
    label: str

    def __str__(self):
        return self.tag

    def contains_ring(self, tag) -> bool:
        return tag_leq(tag, self.ring)


INT = GateSet("INT", frozenset({"X", "CX", "CCX", "HH"}), RingTag.D, "{X,CX,CCX,HH}")
SUPINT = GateSet("SUPINT", frozenset({"X", "CX", "CCX", "H"}), RingTag.Z_over_sqrt2, "{X,CX,CCX,H}")
REAL = GateSet("REAL", frozenset({"X", "CX", "CCX", "H", "CH"}), RingTag.Dsqrt2, "{X,CX,CCX,H,CH}")
IMAG = GateSet("IMAG", frozenset({"X", "CX", "CCX", "F"}), RingTag.Disqrt2, "{X,CX,CCX,F}")
GAUSS = GateSet("GAUSS", frozenset({"X", "CX", "CCX", "WH", "S"}), RingTag.Di, "{X,CX,CCX,WH,S}")
SUPGAUSS = GateSet("SUPGAUSS", frozenset({"X", "CX", "CCX", "H", "S"}), RingTag.Zi_over_sqrt2,
                   "{X,CX,CCX,H,S}")

GATESETS = {g.tag: g for g in (INT, SUPINT, REAL, IMAG, GAUSS, SUPGAUSS)}

FOR_TAG = {g.ring: g for g in GATESETS.values()}


def get_gateset(name) -> GateSet:
    if isinstance(name, GateSet):
        return name
    key = str(name).upper()
    if key not in GATESETS:
        raise ValueError("unknown gate set %r (choose from %s)" % (name, ", ".join(GATESETS)))
    return GATESETS[key]


def gatesets_containing(tag):
    """Gate sets whose ring contains the given ring, smallest first."""
    return [g for g in GATESETS.values() if tag_leq(tag, g.ring)]
