"""Quantum Schubert expansions ``sum_{lam,d} c_{lam,d}(t) q^d sigma_lam``."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Mapping, Optional

from .polyring import TPoly, linear_product
from .shapes import Partition, Rect, make_partition

Key = tuple[Partition, int]
# A coefficient kept as a sum of products of linear forms t_a - t_b.
Factored = tuple[tuple[tuple[int, int], ...], ...]


def term_order(key: Key):
    lam, d = key
    return (d,) + lam.sort_key()


@dataclass
class Expansion:
    """Finite map ``(lam, d) -> TPoly`` with zero coefficients omitted."""

    rect: Rect
    terms: dict = field(default_factory=dict)
    factored: dict = field(default_factory=dict)

    def __post_init__(self):
        self.terms = {k: v for k, v in self.terms.items() if v}
        self.factored = {k: v for k, v in self.factored.items() if k in self.terms}

    def __eq__(self, other) -> bool:
        if not isinstance(other, Expansion):
            return NotImplemented
        return self.rect == other.rect and self.terms == other.terms

    def __len__(self) -> int:
        return len(self.terms)

    def __getitem__(self, key: Key) -> TPoly:
        return self.terms.get(key, TPoly())

    def coefficient(self, parts, d: int = 0) -> TPoly:
        return self[(make_partition(self.rect, parts), d)]

    def items(self) -> Iterator[tuple[Key, TPoly]]:
        for key in sorted(self.terms, key=term_order):
            yield key, self.terms[key]

    def keys(self) -> list[Key]:
        return sorted(self.terms, key=term_order)

    def specialize_to_zero(self) -> dict[Key, int]:
        return {k: v.constant_term() for k, v in self.items() if v.constant_term()}

    def diff(self, other: "Expansion") -> list[Key]:
        """Keys whose coefficients disagree, in canonical order."""
        keys = set(self.terms) | set(other.terms)
        return sorted((k for k in keys if self[k] != other[k]), key=term_order)

    # -- serialization -----------------------------------------------------

    def to_json(self, operation: str = "product") -> dict:
        return {
            "grassmannian": self.rect.to_json(),
            "operation": operation,
            "terms": [
                {"partition": lam.to_json(), "q": d, "coefficient": c.to_json()}
                for (lam, d), c in self.items()
            ],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "Expansion":
        g = data["grassmannian"]
        rect = Rect(int(g["m"]), int(g["n"]))
        terms = {}
        for t in data["terms"]:
            key = (make_partition(rect, t["partition"]), int(t["q"]))
            terms[key] = TPoly.from_json(t["coefficient"])
        return cls(rect, terms)

    # -- rendering ---------------------------------------------------------

    def _coeff_text(self, key: Key, latex: bool, expand: bool) -> Optional[str]:
        """Rendered coefficient, or None when it is exactly 1."""
        poly = self.terms[key]
        if poly == TPoly.const(1):
            return None
        fac = None if expand else self.factored.get(key)
        if fac is not None:
            return _render_factored(fac, latex)
        text = poly.to_str(latex=latex)
        if len(poly) > 1:
            return f"({text})"
        return text

    def render(self, fmt: str = "latex", expand: bool = False) -> str:
        latex = fmt == "latex"
        pieces = []
        for key, _ in self.items():
            lam, d = key
            coeff = self._coeff_text(key, latex, expand)
            qpart = "" if d == 0 else ("q" if d == 1 else (f"q^{{{d}}}" if latex else f"q^{d}"))
            if latex:
                nz = lam.nonzero
                sigma = r"\sigma_{\emptyset}" if not nz else r"\sigma_{(" + ",".join(map(str, nz)) + ")}"
                body = qpart + (coeff or "") + sigma
            else:
                sigma = "s" + str(lam)
                body = "*".join(x for x in (qpart, coeff, sigma) if x)
            pieces.append(body)
        if not pieces:
            return "0"
        return " + ".join(pieces)


def _linear_text(a: int, b: int, latex: bool) -> str:
    if latex:
        ta = f"t_{{{a}}}" if a > 9 else f"t_{a}"
        tb = f"t_{{{b}}}" if b > 9 else f"t_{b}"
        return f"({ta}-{tb})"
    return f"(t{a}-t{b})"


def _render_factored(fac: Factored, latex: bool) -> str:
    summands = []
    for prod in fac:
        if not prod:
            summands.append("1")
        else:
            summands.append(("" if latex else "*").join(_linear_text(a, b, latex) for a, b in prod))
    if len(summands) == 1:
        return summands[0]
    inner = " + ".join(summands)
    return rf"\left[{inner}\right]" if latex else f"[{inner}]"


def expand_factored(fac: Factored) -> TPoly:
    out = TPoly()
    for prod in fac:
        out = out + linear_product(prod)
    return out
