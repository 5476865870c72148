"""Built-in fixture systems with expected decisions.

The expectations are re-verified by the test suite and the gallery
command, never trusted.  The four refutation fixtures correspond to
two-colored polyhedra: an octahedron (two path layouts), a hexagonal
bipyramid, and an elongated square bipyramid; the partner systems listed
here are the gray face sets the bounded search finds.
"""

from __future__ import annotations

from dataclasses import dataclass

from pathsys.core import PathSystem


@dataclass(frozen=True)
class GalleryEntry:
    name: str
    system: PathSystem
    expected: str  # Decision tag in the directed setting
    partner: PathSystem | None
    note: str


def _ps(*paths: str) -> PathSystem:
    return PathSystem.from_names([tuple(p) for p in paths])


OCT1 = _ps("ace", "adf", "bde", "bcf")
OCT1_PARTNER = _ps("ade", "acf", "bce", "bdf")
OCT2 = _ps("cea", "dfa", "bde", "bcf")
OCT2_PARTNER = _ps("dea", "cfa", "bce", "bdf")
HBP1 = _ps("adf", "bef", "bdg", "ceg", "cdh", "aeh")
HBP1_PARTNER = _ps("aef", "bdf", "beg", "cdg", "ceh", "adh")
ESB1 = _ps("bdgi", "cehj", "abe", "acd", "fgj", "fhi")
ESB1_PARTNER = _ps("ace", "abd", "behi", "cdgj", "fhj", "fgi")

TWO_PATH_DIRECTED = _ps("abc", "ca")
SIMPLEST_INCONSISTENT = _ps("abc", "ac")
NONSIMPLE_SINGLETON = _ps("abcbd")

ENTRIES: tuple[GalleryEntry, ...] = (
    GalleryEntry("OCT1", OCT1, "not_strongly_metrizable", OCT1_PARTNER,
                 "four crossing paths on six nodes; the colorful faces of a "
                 "two-colored octahedron"),
    GalleryEntry("OCT2", OCT2, "not_strongly_metrizable", OCT2_PARTNER,
                 "OCT1 with the topological order rotated so node a comes "
                 "last; same octahedron, different endpoint edges"),
    GalleryEntry("HBP1", HBP1, "not_strongly_metrizable", HBP1_PARTNER,
                 "six paths on eight nodes; colorful faces of a two-colored "
                 "hexagonal bipyramid"),
    GalleryEntry("ESB1", ESB1, "not_strongly_metrizable", ESB1_PARTNER,
                 "six paths on ten nodes; colorful faces of a two-colored "
                 "elongated square bipyramid"),
    GalleryEntry("TWO_PATH_DIRECTED", TWO_PATH_DIRECTED,
                 "strongly_metrizable", None,
                 "realizable with directed weights, but its reversal "
                 "closure is inconsistent, so not undirected-realizable"),
    GalleryEntry("SIMPLEST_INCONSISTENT", SIMPLEST_INCONSISTENT,
                 "inconsistent", None,
                 "two paths sharing endpoints with different interiors"),
)


def by_name(name: str) -> GalleryEntry:
    for e in ENTRIES:
        if e.name == name.upper():
            return e
    raise KeyError(name)
