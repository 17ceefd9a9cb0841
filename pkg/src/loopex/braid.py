"""Braid words, closure bookkeeping, and the embedded knot corpus.

A braid word is a sequence of signed generator letters on a fixed number of
strands; knots enter the library as closures of such words.  The corpus ships
14 records (3_1 .. 7_7) with golden data: the Alexander polynomial, the scaled
two-loop polynomial in fundamental-domain and u-basis form, the genus, and
correction-ledger flags for the spots where the printed source tables needed
fixing.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources
from typing import Iterable, Sequence

from .exactalg import LaurentPolynomial


class BraidSyntaxError(ValueError):
    """Raised for malformed braid-word text."""


@dataclass(frozen=True)
class BraidWord:
    """A braid group element: strand count plus signed generator letters.

    Letters are nonzero integers; letter k means generator sigma_|k| with
    crossing sign sign(k).  The empty word on one strand closes to the unknot.
    """
    strands: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        if self.strands < 1:
            raise ValueError("strand count must be >= 1")
        object.__setattr__(self, "letters", tuple(self.letters))
        for k in self.letters:
            if not isinstance(k, int) or k == 0:
                raise BraidSyntaxError(f"zero or non-integer letter {k!r}")
            if abs(k) >= self.strands:
                raise BraidSyntaxError(
                    f"letter {k} needs at least {abs(k) + 1} strands, have {self.strands}")

    def __len__(self):
        return len(self.letters)

    def render(self) -> str:
        body = " ".join(str(k) for k in self.letters)
        return f"s={self.strands};" + (f" {body}" if body else "")


def parse_braid(text: str) -> BraidWord:
    """Parse whitespace-separated signed letters, optionally preceded by an
    "s=<n>;" strand declaration; without one, strands = max|letter| + 1."""
    text = text.strip()
    strands = None
    if text.startswith("s="):
        head, sep, rest = text.partition(";")
        if not sep:
            raise BraidSyntaxError("strand declaration missing ';'")
        try:
            strands = int(head[2:])
        except ValueError:
            raise BraidSyntaxError(f"bad strand count {head[2:]!r}") from None
        text = rest.strip()
    letters = []
    for token in text.split():
        try:
            k = int(token)
        except ValueError:
            raise BraidSyntaxError(f"malformed token {token!r}") from None
        if k == 0:
            raise BraidSyntaxError("zero letter")
        letters.append(k)
    if strands is None:
        strands = max((abs(k) for k in letters), default=0) + 1
    return BraidWord(strands, tuple(letters))


def writhe(b: BraidWord) -> int:
    """Sum of the letter signs (the framing correction input)."""
    return sum(1 if k > 0 else -1 for k in b.letters)


def permutation(b: BraidWord) -> list[int]:
    """Underlying permutation of strand positions, as the image list."""
    perm = list(range(b.strands))
    for k in b.letters:
        i = abs(k) - 1
        perm[i], perm[i + 1] = perm[i + 1], perm[i]
    return perm


def closure_component_count(b: BraidWord) -> int:
    """Number of link components of the braid closure (permutation cycles)."""
    perm = permutation(b)
    seen = [False] * b.strands
    cycles = 0
    for start in range(b.strands):
        if seen[start]:
            continue
        cycles += 1
        j = start
        while not seen[j]:
            seen[j] = True
            j = perm[j]
    return cycles


def mirror(b: BraidWord) -> BraidWord:
    """Mirror image: every crossing sign negated (an involution)."""
    return BraidWord(b.strands, tuple(-k for k in b.letters))


# ---------------------------------------------------------------------------
# Corpus
# ---------------------------------------------------------------------------

FUNDAMENTAL_DOMAIN_MSG = "fundamental domain requires m1 >= 2*m2 >= 0"


class CorpusError(ValueError):
    """Raised when a corpus file violates its schema or golden invariants."""


@dataclass(frozen=True)
class KnotRecord:
    """One corpus knot with golden data from the source tables."""
    name: str
    braid: BraidWord
    genus: int
    alexander_golden: LaurentPolynomial          # in t, symmetric, value 1 at t=1
    theta12_fundamental: tuple                   # ((m1, m2, int), ...) fundamental domain
    theta12_u: tuple                             # ((a, b, int), ...) coefficient of u1^a u2^b
    ledger_flags: tuple = ()

    @property
    def amphichiral(self) -> bool:
        return not self.theta12_fundamental


def _symmetric_completion(half_terms) -> LaurentPolynomial:
    """Rebuild a symmetric Laurent polynomial from its non-negative-power half."""
    terms: dict[tuple, object] = {}
    for exp, coeff in half_terms:
        if exp < 0:
            raise CorpusError("alexander entries list the non-negative half only")
        terms[(exp,)] = coeff
        if exp > 0:
            terms[(-exp,)] = coeff
    return LaurentPolynomial(("t",), terms)


def _validate_record(raw: dict) -> KnotRecord:
    required = {"name", "strands", "braid", "genus", "alexander",
                "theta12_fundamental", "theta12_u", "ledger"}
    missing = required - set(raw)
    if missing:
        raise CorpusError(f"record missing fields {sorted(missing)}")
    braid = BraidWord(int(raw["strands"]), tuple(int(k) for k in raw["braid"]))
    if closure_component_count(braid) != 1:
        raise CorpusError(f"{raw['name']}: braid closure is not a knot")
    alexander = _symmetric_completion([(int(e), int(c)) for e, c in raw["alexander"]])
    if alexander.evaluate({"t": 1}) != 1:
        raise CorpusError(f"{raw['name']}: golden Alexander value at t=1 is not 1")
    fundamental = []
    seen = set()
    for m1, m2, c in raw["theta12_fundamental"]:
        m1, m2, c = int(m1), int(m2), int(c)
        if not (m1 >= 2 * m2 >= 0):
            raise CorpusError(f"{raw['name']}: ({m1},{m2}) violates {FUNDAMENTAL_DOMAIN_MSG}")
        if (m1, m2) in seen:
            raise CorpusError(f"{raw['name']}: duplicate fundamental-domain pair {(m1, m2)}")
        seen.add((m1, m2))
        fundamental.append((m1, m2, c))
    ubasis = tuple((int(a), int(b), int(c)) for a, b, c in raw["theta12_u"])
    return KnotRecord(
        name=str(raw["name"]),
        braid=braid,
        genus=int(raw["genus"]),
        alexander_golden=alexander,
        theta12_fundamental=tuple(fundamental),
        theta12_u=ubasis,
        ledger_flags=tuple(str(f) for f in raw["ledger"]),
    )


def load_corpus(path: str | None = None) -> list[KnotRecord]:
    """Load the knot corpus from `path`, or the embedded file by default."""
    if path is None:
        text = resources.files("loopex.data").joinpath("corpus.json").read_text()
    else:
        with open(path) as fh:
            text = fh.read()
    raw = json.loads(text)
    if not isinstance(raw, list):
        raise CorpusError("corpus file must be a JSON array of records")
    records = [_validate_record(entry) for entry in raw]
    names = [r.name for r in records]
    if len(set(names)) != len(names):
        raise CorpusError("duplicate knot names in corpus")
    return records


def corpus_by_name(path: str | None = None) -> dict[str, KnotRecord]:
    return {r.name: r for r in load_corpus(path)}
