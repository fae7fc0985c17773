"""Defining matrix representation of the pseudo-orthogonal algebras so(p,q).

The rotation generators of a flat space with metric signature (p, q) are
realised as (p+q)x(p+q) matrices

    (L_ab)_{mn} = i * (delta_{ma} g_{bn} - delta_{mb} g_{an}),

with g = diag(+1 x p, -1 x q) and 1-based indices a < b throughout, matching
the index convention of the printed commutation table this module validates:

    [L_ab, L_cd] = i (g_ad L_bc + g_bc L_ad - g_ac L_bd - g_bd L_ac).

The realisation is *validated*, never assumed: ``verify_commutation`` checks
every unordered generator pair against the symbolic right-hand side, exactly.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Optional, Sequence

from .exact import (
    ExactMatrix,
    GaussianRational,
    I,
    SpanSolver,
    ZERO,
    commutator,
)

IndexPair = tuple[int, int]


@dataclass(frozen=True)
class Metric:
    """Diagonal metric with p entries +1 followed by q entries -1."""

    p: int
    q: int

    def __post_init__(self):
        if self.p < 0 or self.q < 0 or self.p + self.q < 2:
            raise ValueError("need p, q >= 0 with p + q >= 2")

    @property
    def dim(self) -> int:
        return self.p + self.q

    def g(self, a: int) -> int:
        """Diagonal metric entry for 1-based index a."""
        if not 1 <= a <= self.dim:
            raise IndexError(f"index {a} outside 1..{self.dim}")
        return 1 if a <= self.p else -1

    def matrix(self) -> ExactMatrix:
        return ExactMatrix.from_entries(
            self.dim, {(k, k): self.g(k + 1) for k in range(self.dim)}
        )

    def __str__(self) -> str:
        return f"({self.p},{self.q})"


def pair_name(a: int, b: int) -> str:
    return f"L{a}{b}"


class GeneratorSet:
    """Ordered family of rotation generators L_ab (a < b) for one signature.

    Lookup resolves the antisymmetry convention: ``gen(b, a)`` is
    ``-gen(a, b)`` and ``gen(a, a)`` is the zero matrix.
    """

    def __init__(self, metric: Metric):
        self.metric = metric
        n = metric.dim
        self.pairs: list[IndexPair] = [
            (a, b) for a in range(1, n + 1) for b in range(a + 1, n + 1)
        ]
        self._gens: dict[IndexPair, ExactMatrix] = {}
        for a, b in self.pairs:
            self._gens[(a, b)] = ExactMatrix.from_entries(
                n,
                {
                    (a - 1, b - 1): I * metric.g(b),
                    (b - 1, a - 1): -I * metric.g(a),
                },
            )
        self.names = [pair_name(a, b) for a, b in self.pairs]
        self._zero = ExactMatrix.zeros(n)

    def __len__(self) -> int:
        return len(self.pairs)

    def __iter__(self) -> Iterator[tuple[IndexPair, ExactMatrix]]:
        return ((pair, self._gens[pair]) for pair in self.pairs)

    def gen(self, a: int, b: int) -> ExactMatrix:
        if a == b:
            return self._zero
        if a < b:
            return self._gens[(a, b)]
        return -self._gens[(b, a)]

    def matrices(self) -> list[ExactMatrix]:
        return [self._gens[pair] for pair in self.pairs]

    def by_name(self, name: str) -> ExactMatrix:
        """Resolve "L12"-style names and, for signature (4,2), the hydrogen
        aliases L1..L3, A1..A3, B1..B3, G1..G3, D1..D3."""
        alias = hydrogen_aliases(self) if self.metric == Metric(4, 2) else {}
        if name in alias:
            return alias[name]
        if name.startswith("L") and len(name) == 3 and name[1:].isdigit():
            return self.gen(int(name[1]), int(name[2]))
        raise KeyError(f"unknown generator name {name!r}")


def build_generators(metric: Metric) -> GeneratorSet:
    """Construct the n(n-1)/2 defining-representation generators."""
    return GeneratorSet(metric)


def expected_bracket(
    metric: Metric, left: IndexPair, right: IndexPair
) -> list[tuple[GaussianRational, IndexPair]]:
    """Symbolic right-hand side of the bracket [L_left, L_right].

    Returns (coefficient, pair) terms with pairs normalised to a < b,
    L_aa dropped, and like terms combined; deterministic pair order.
    """
    a, b = left
    c, d = right
    for idx in (a, b, c, d):
        if not 1 <= idx <= metric.dim:
            raise IndexError(f"index {idx} outside 1..{metric.dim}")
    if a == b or c == d:
        raise ValueError("index pairs must have distinct members")
    g = metric.g
    # i*(g_ad L_bc + g_bc L_ad - g_ac L_bd - g_bd L_ac); metric is diagonal,
    # so g_xy is zero unless x == y.
    terms: dict[IndexPair, GaussianRational] = {}

    def add(sign: int, x: int, y: int, u: int, v: int) -> None:
        if x != y:
            return
        coeff = I * (sign * g(x))
        if u == v:
            return
        if u > v:
            u, v = v, u
            coeff = -coeff
        key = (u, v)
        acc = terms.get(key, ZERO) + coeff
        if acc:
            terms[key] = acc
        elif key in terms:
            del terms[key]

    add(+1, a, d, b, c)
    add(+1, b, c, a, d)
    add(-1, a, c, b, d)
    add(-1, b, d, a, c)
    return [(terms[key], key) for key in sorted(terms)]


def materialize(
    gs: GeneratorSet, terms: Sequence[tuple[GaussianRational, IndexPair]]
) -> ExactMatrix:
    """Turn a symbolic (coefficient, pair) sum into a matrix."""
    acc = ExactMatrix.zeros(gs.metric.dim)
    for coeff, (a, b) in terms:
        acc = acc + gs.gen(a, b) * coeff
    return acc


def format_terms(terms: Sequence[tuple[GaussianRational, IndexPair]]) -> str:
    if not terms:
        return "0"
    return " + ".join(
        f"({coeff})*{pair_name(a, b)}" for coeff, (a, b) in terms
    )


@dataclass(frozen=True)
class PairFailure:
    lhs_pair: IndexPair
    rhs_pair: IndexPair
    got: str
    expected: str

    def to_json_dict(self) -> dict:
        return {
            "lhs_pair": list(self.lhs_pair),
            "rhs_pair": list(self.rhs_pair),
            "got": self.got,
            "expected": self.expected,
        }


@dataclass
class CommutationReport:
    """Outcome of the exhaustive pairwise bracket check for one signature."""

    signature: tuple[int, int]
    pair_count: int
    failures: list[PairFailure] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_json_dict(self) -> dict:
        return {
            "signature": list(self.signature),
            "pair_count": self.pair_count,
            "failures": [f.to_json_dict() for f in self.failures],
        }


def verify_commutation(gs: GeneratorSet) -> CommutationReport:
    """Check every unordered generator pair against the symbolic bracket.

    Both sides are expanded in the generator basis: the computed commutator
    via an exact span solve, the expected side symbolically.  Any residual
    at all is a failure entry, never an exception.
    """
    metric = gs.metric
    solver = SpanSolver(gs.matrices())
    failures: list[PairFailure] = []
    pair_count = 0
    for i, left in enumerate(gs.pairs):
        for right in gs.pairs[i + 1 :]:
            pair_count += 1
            got = commutator(gs.gen(*left), gs.gen(*right))
            expected_terms = expected_bracket(metric, left, right)
            got_coeffs = solver.expand(got)
            expected_coeffs = [ZERO] * len(gs.pairs)
            for coeff, pair in expected_terms:
                expected_coeffs[gs.pairs.index(pair)] = coeff
            if got_coeffs is None or got_coeffs != expected_coeffs:
                if got_coeffs is None:
                    got_str = "<outside generator span>"
                else:
                    got_str = format_terms(
                        [
                            (c, gs.pairs[k])
                            for k, c in enumerate(got_coeffs)
                            if c
                        ]
                    )
                failures.append(
                    PairFailure(
                        lhs_pair=left,
                        rhs_pair=right,
                        got=got_str,
                        expected=format_terms(expected_terms),
                    )
                )
    return CommutationReport(
        signature=(metric.p, metric.q),
        pair_count=pair_count,
        failures=failures,
    )


def pseudo_antisymmetry_holds(gs: GeneratorSet) -> bool:
    """Membership check g L^T g == -L for every generator."""
    g = gs.metric.matrix()
    return all(
        g @ mat.transpose() @ g == -mat for _, mat in gs
    )


# -- hydrogen aliases for signature (4,2) -----------------------------------
#
# L1..L3: angular momentum; A1..A3: Laplace-Runge-Lenz vector; B, G (Gamma):
# its conjugate partners; D1..D3 (Delta): the radial so(2,1) triple.

_HYDROGEN_ALIAS_PAIRS: dict[str, IndexPair] = {
    "L1": (2, 3),
    "L2": (3, 1),
    "L3": (1, 2),
    "A1": (1, 4),
    "A2": (2, 4),
    "A3": (3, 4),
    "B1": (1, 5),
    "B2": (2, 5),
    "B3": (3, 5),
    "G1": (1, 6),
    "G2": (2, 6),
    "G3": (3, 6),
    "D1": (4, 6),
    "D2": (4, 5),
    "D3": (5, 6),
}


def hydrogen_aliases(gs: GeneratorSet) -> dict[str, ExactMatrix]:
    """Name bindings of the physical operators onto signature-(4,2) generators."""
    if gs.metric != Metric(4, 2):
        raise ValueError("hydrogen aliases require signature (4,2)")
    return {name: gs.gen(a, b) for name, (a, b) in _HYDROGEN_ALIAS_PAIRS.items()}


# The printed bracket table for the angular-momentum/boost pair (L, B),
# encoded as (left, right, coefficient, result); result None means zero.
HYDROGEN_LB_TABLE: list[tuple[str, str, GaussianRational, Optional[str]]] = [
    ("L1", "L2", -I, "L3"),
    ("L2", "L3", -I, "L1"),
    ("L3", "L1", -I, "L2"),
    ("B1", "B2", I, "L3"),
    ("B2", "B3", I, "L1"),
    ("B3", "B1", I, "L2"),
    ("L1", "B1", ZERO, None),
    ("L2", "B2", ZERO, None),
    ("L3", "B3", ZERO, None),
    ("L1", "B2", -I, "B3"),
    ("L1", "B3", I, "B2"),
    ("L2", "B3", -I, "B1"),
    ("L2", "B1", I, "B3"),
    ("L3", "B1", -I, "B2"),
    ("L3", "B2", I, "B1"),
]

_EPS = {
    (1, 2, 3): 1, (2, 3, 1): 1, (3, 1, 2): 1,
    (3, 2, 1): -1, (1, 3, 2): -1, (2, 1, 3): -1,
}


@dataclass
class AliasCheck:
    relation: str
    passed: bool
    got: str


@dataclass
class HydrogenAliasReport:
    """Printed (L, B) bracket table versus the matrix realisation, plus the
    record of which epsilon sign convention each alias family obeys.

    ``epsilon_convention`` is the handedness of the angular-momentum triple
    ([L_i, L_j] against +/- i eps_ijk L_k); ``family_conventions`` carries
    the same record for the [L,A] and [A,A] families, so a reader can see
    that the +i eps variant printed in prose fails across the board.
    """

    checks: list[AliasCheck]
    epsilon_convention: str  # "-i eps_ijk" or "+i eps_ijk" or "mixed"
    family_conventions: dict[str, str]

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_json_dict(self) -> dict:
        return {
            "checks": [
                {"relation": c.relation, "passed": c.passed, "got": c.got}
                for c in self.checks
            ],
            "epsilon_convention": self.epsilon_convention,
            "family_conventions": dict(self.family_conventions),
        }


def _epsilon_handedness(
    alias: dict[str, ExactMatrix], left: str, right: str, result: str
) -> str:
    """Which of [x_i, y_j] = +/- i eps_ijk z_k the matrices satisfy."""
    found = set()
    for (i, j, k), eps in _EPS.items():
        got = commutator(alias[f"{left}{i}"], alias[f"{right}{j}"])
        if got == alias[f"{result}{k}"] * (I * eps):
            found.add("+i eps_ijk")
        elif got == alias[f"{result}{k}"] * (-I * eps):
            found.add("-i eps_ijk")
        else:
            found.add("neither")
    return found.pop() if len(found) == 1 else "mixed"


def hydrogen_alias_check(gs: GeneratorSet) -> HydrogenAliasReport:
    alias = hydrogen_aliases(gs)
    checks = []
    for left, right, coeff, result in HYDROGEN_LB_TABLE:
        got = commutator(alias[left], alias[right])
        expected = (
            ExactMatrix.zeros(gs.metric.dim)
            if result is None
            else alias[result] * coeff
        )
        rel = f"[{left},{right}] = ({coeff})*{result}" if result else f"[{left},{right}] = 0"
        got_desc = _describe_in_aliases(got, alias)
        checks.append(AliasCheck(relation=rel, passed=got == expected, got=got_desc))
    families = {
        "[L,L]": _epsilon_handedness(alias, "L", "L", "L"),
        "[L,A]": _epsilon_handedness(alias, "L", "A", "A"),
        "[A,A]": _epsilon_handedness(alias, "A", "A", "L"),
    }
    return HydrogenAliasReport(
        checks=checks,
        epsilon_convention=families["[L,L]"],
        family_conventions=families,
    )


def _describe_in_aliases(mat: ExactMatrix, alias: dict[str, ExactMatrix]) -> str:
    names = list(alias)
    solver = SpanSolver([alias[n] for n in names])
    coeffs = solver.expand(mat)
    if coeffs is None:
        return "<outside alias span>"
    parts = [f"({c})*{names[k]}" for k, c in enumerate(coeffs) if c]
    return " + ".join(parts) if parts else "0"
