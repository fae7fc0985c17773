"""Madelung enumeration of the 120-slot periodic system and its weight tower.

Subshells (n, l) fill in order of ascending n+l with ties broken by
ascending n.  Within one subshell the 2(2l+1) slots fill as two spin
blocks: all m from -l to +l at s = -1/2 first, then the same m sweep at
s = +1/2.  This block order is what puts the odd-Z endpoint of each filled
p-shell (e.g. Z=115) in the s = -1/2 projection and the even-Z endpoint
(Z=118) in the s = +1/2 projection.

The element symbol table ships as data/elements.csv (z,symbol; 120 rows);
Z = 119, 120 carry their systematic symbols Uue, Ubn.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources
from typing import Iterable, Optional

from .labels import InconsistentLabelsError, MadelungKet

MAX_Z = 120


@dataclass(frozen=True)
class Element:
    z: int
    symbol: str
    ket: MadelungKet
    anti: bool = False

    def __str__(self) -> str:
        return f"{self.symbol} = {self.ket}"

    def to_json_dict(self) -> dict:
        return {
            "z": self.z,
            "symbol": self.symbol,
            "ket": self.ket.to_json_dict(),
            "anti": self.anti,
        }


@dataclass(frozen=True)
class Point:
    m: int
    element: Optional[Element]

    def to_json_dict(self) -> dict:
        out: dict = {"m": self.m}
        if self.element is not None:
            out["z"] = self.element.z
            out["symbol"] = self.element.symbol
        return out


@dataclass(frozen=True)
class Subshell:
    l: int
    points: tuple[Point, ...]

    def to_json_dict(self) -> dict:
        return {"l": self.l, "points": [p.to_json_dict() for p in self.points]}


@dataclass(frozen=True)
class Floor:
    n: int
    subshells: tuple[Subshell, ...]

    def to_json_dict(self) -> dict:
        return {"n": self.n, "subshells": [s.to_json_dict() for s in self.subshells]}


@dataclass(frozen=True)
class TowerSlice:
    """One spin projection of the weight tower.

    Floor n carries subshells l = 0..|n|-1, each with its 2l+1 m-points;
    unfilled points stay present as empty slots.  Negative-n floors hold
    the mirrored antimatter copies.
    """

    s: Fraction
    floors: tuple[Floor, ...]

    @property
    def s_text(self) -> str:
        return ("+" if self.s > 0 else "") + str(self.s)

    def to_json_dict(self) -> dict:
        return {
            "s": self.s_text,
            "floors": [f.to_json_dict() for f in self.floors],
        }

    def elements(self) -> list[Element]:
        return [
            p.element
            for f in self.floors
            for sub in f.subshells
            for p in sub.points
            if p.element is not None
        ]

    def point(self, n: int, l: int, m: int) -> Optional[Element]:
        for f in self.floors:
            if f.n != n:
                continue
            for sub in f.subshells:
                if sub.l != l:
                    continue
                for p in sub.points:
                    if p.m == m:
                        return p.element
        return None


def subshell_order() -> Iterable[tuple[int, int]]:
    """(n, l) subshells in ascending (n+l, n) order, without end."""
    total = 1
    while True:
        n_min = total // 2 + 1
        for n in range(n_min, total + 1):
            yield n, total - n
        total += 1


def madelung_sequence(max_z: int) -> list[MadelungKet]:
    """First ``max_z`` kets of the filling order described in the module docstring."""
    if max_z < 1:
        raise ValueError("max_z must be positive")
    kets: list[MadelungKet] = []
    for n, l in subshell_order():
        for two_s in (-1, 1):
            for m in range(-l, l + 1):
                kets.append(MadelungKet(n=n, l=l, m=m, two_s=two_s))
                if len(kets) == max_z:
                    return kets
    raise AssertionError("unreachable")


def load_symbols() -> dict[int, str]:
    """Z -> symbol table from the packaged CSV (header z,symbol; 120 rows)."""
    text = resources.files("lietower").joinpath("data/elements.csv").read_text("utf-8")
    reader = csv.DictReader(text.splitlines())
    table = {}
    for row in reader:
        table[int(row["z"])] = row["symbol"]
    return table


def assign_elements(symbols: Optional[dict[int, str]] = None) -> list[Element]:
    """Zip the 120-ket Madelung sequence with the symbol table."""
    if symbols is None:
        symbols = load_symbols()
    missing = [z for z in range(1, MAX_Z + 1) if z not in symbols]
    if missing:
        raise KeyError(f"symbol table misses Z = {missing}")
    return [
        Element(z=z, symbol=symbols[z], ket=ket)
        for z, ket in enumerate(madelung_sequence(MAX_Z), start=1)
    ]


def antimatter_mirror(e: Element) -> Element:
    """Mirror copy with negated principal quantum number and anti- prefix."""
    if e.anti:
        raise InconsistentLabelsError(f"{e.symbol} is already a mirror copy")
    return Element(z=e.z, symbol=f"anti-{e.symbol}", ket=e.ket.mirrored(), anti=True)


def projection_slice(
    elements: list[Element], s: Fraction, *, mirror: bool = False
) -> TowerSlice:
    """All elements with spin projection s, placed on their tower floors.

    Floors run n = 1..8 (every ring present, filled or not); with
    ``mirror=True`` the antimatter floors n = -1..-8 follow, populated by
    the mirrored copies.
    """
    two_s = int(Fraction(s) * 2)
    if two_s not in (-1, 1):
        raise ValueError("spin must be -1/2 or +1/2")
    by_slot: dict[tuple[int, int, int], Element] = {}
    max_n = 0
    for e in elements:
        if e.anti:
            raise ValueError("pass matter elements; mirroring is handled here")
        max_n = max(max_n, e.ket.n)
        if e.ket.two_s == two_s:
            by_slot[(e.ket.n, e.ket.l, e.ket.m)] = e

    def build_floor(n: int) -> Floor:
        subshells = []
        for l in range(0, abs(n)):
            points = []
            for m in range(-l, l + 1):
                found = by_slot.get((abs(n), l, m))
                if found is not None and n < 0:
                    found = antimatter_mirror(found)
                points.append(Point(m=m, element=found))
            subshells.append(Subshell(l=l, points=tuple(points)))
        return Floor(n=n, subshells=tuple(subshells))

    floors = [build_floor(n) for n in range(1, max_n + 1)]
    if mirror:
        floors += [build_floor(-n) for n in range(1, max_n + 1)]
    return TowerSlice(s=Fraction(two_s, 2), floors=tuple(floors))


def period_lengths(elements: list[Element]) -> list[int]:
    """Row lengths of the filling order, one row per s-subshell start.

    A new row opens whenever the sequence enters an l = 0 subshell, which
    reproduces the doubled period pattern 2, 8, 8, 18, 18, 32, 32.
    """
    lengths: list[int] = []
    previous: Optional[tuple[int, int]] = None
    for e in elements:
        shell = (e.ket.n, e.ket.l)
        if e.ket.l == 0 and shell != previous:
            lengths.append(0)
        previous = shell
        lengths[-1] += 1
    return lengths


def haenzel_stats(n: int) -> dict[str, int]:
    """Sheet statistics: 2n^2 eigenvalue points, n^2 transversals, n rings."""
    if n < 1:
        raise ValueError("sheet number must be >= 1")
    return {"points": 2 * n * n, "transversals": n * n, "rings": n}


def homolog_lines(tower: TowerSlice) -> list[list[Element]]:
    """Vertical chains of same-(l, m) elements on consecutive matter floors.

    These are the classical homolog connections (the alkali column is the
    l = 0, m = 0 chain); each chain is reported top-down by n.
    """
    matter = [f for f in tower.floors if f.n > 0]
    slots: dict[tuple[int, int], dict[int, Element]] = {}
    for f in matter:
        for sub in f.subshells:
            for p in sub.points:
                if p.element is not None:
                    slots.setdefault((sub.l, p.m), {})[f.n] = p.element
    lines = []
    for (l, m) in sorted(slots):
        by_n = slots[(l, m)]
        chain = [by_n[n] for n in sorted(by_n)]
        if len(chain) >= 2:
            lines.append(chain)
    return lines


def find_element(
    elements: list[Element], *, z: Optional[int] = None, symbol: Optional[str] = None
) -> Element:
    """Lookup by atomic number or symbol; unknown symbols get the nearest hint."""
    if (z is None) == (symbol is None):
        raise ValueError("give exactly one of z or symbol")
    if z is not None:
        if not 1 <= z <= MAX_Z:
            raise KeyError(f"z={z} out of range 1..{MAX_Z}")
        return elements[z - 1]
    for e in elements:
        if e.symbol == symbol:
            return e
    import difflib

    hints = difflib.get_close_matches(
        symbol, [e.symbol for e in elements], n=1, cutoff=0.0
    )
    hint = f"; closest match: {hints[0]}" if hints else ""
    raise KeyError(f"unknown element symbol {symbol!r}{hint}")
