"""Monomials, monomial ideals, minimal generating sets and polarization."""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .errors import ParseError, ZeroIdealError

EXPONENT_CAP = 2**31 - 1

_NAME = re.compile(r"[A-Za-z_][A-Za-z0-9_#]*")
_TERM = re.compile(r"\s*([A-Za-z_][A-Za-z0-9_#]*)\s*(?:\^\s*([0-9]+))?\s*")


@dataclass(frozen=True)
class PolynomialContext:
    """Ordered variable names of S = K[x_1, ..., x_n]."""

    variable_names: tuple[str, ...]
    _index: Mapping[str, int] = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        names = tuple(self.variable_names)
        if not names:
            raise ValueError("a polynomial context needs at least one variable")
        if len(set(names)) != len(names):
            raise ValueError("variable names must be unique")
        for name in names:
            if not _NAME.fullmatch(name):
                raise ValueError(f"invalid variable name {name!r}")
        object.__setattr__(self, "variable_names", names)
        object.__setattr__(self, "_index", {v: k for k, v in enumerate(names)})

    @classmethod
    def standard(cls, n: int, prefix: str = "x") -> "PolynomialContext":
        """Context with variables ``x1, ..., xn``."""
        return cls(tuple(f"{prefix}{k}" for k in range(1, n + 1)))

    @property
    def n(self) -> int:
        return len(self.variable_names)

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise ParseError(f"unknown variable {name!r}") from None


@dataclass(frozen=True, order=True)
class Monomial:
    """A monomial x^a stored as its exponent vector."""

    exponents: tuple[int, ...]

    def __post_init__(self):
        exps = tuple(int(e) for e in self.exponents)
        for e in exps:
            if e < 0:
                raise ValueError("exponents must be non-negative")
            if e > EXPONENT_CAP:
                raise OverflowError("exponent overflow")
        object.__setattr__(self, "exponents", exps)

    @classmethod
    def from_support(cls, support: Iterable[int], n: int) -> "Monomial":
        exps = [0] * n
        for k in support:
            exps[k] = 1
        return cls(tuple(exps))

    @property
    def degree(self) -> int:
        return sum(self.exponents)

    @property
    def is_squarefree(self) -> bool:
        return all(e <= 1 for e in self.exponents)

    @property
    def support(self) -> int:
        """Bitmask of the variables that occur."""
        mask = 0
        for k, e in enumerate(self.exponents):
            if e:
                mask |= 1 << k
        return mask

    def divides(self, other: "Monomial") -> bool:
        return all(a <= b for a, b in zip(self.exponents, other.exponents))

    def lcm(self, other: "Monomial") -> "Monomial":
        return Monomial(tuple(max(a, b) for a, b in zip(self.exponents, other.exponents)))

    def format(self, ctx: PolynomialContext) -> str:
        parts = []
        for name, e in zip(ctx.variable_names, self.exponents):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append(f"{name}^{e}")
        return "*".join(parts) if parts else "1"


def _sort_key(m: Monomial):
    return tuple(-e for e in m.exponents)


@dataclass(frozen=True)
class MonomialIdeal:
    """A monomial ideal given by its unique minimal monomial generating set.

    The zero ideal is the one with no generators.  Build instances with
    :func:`minimalize` unless the generators are already known to be minimal.
    """

    context: PolynomialContext
    generators: tuple[Monomial, ...]

    def __post_init__(self):
        gens = tuple(sorted(set(self.generators), key=_sort_key))
        for g in gens:
            if len(g.exponents) != self.context.n:
                raise ValueError("generator length does not match the context")
        if all(g.is_squarefree for g in gens):
            # square-free: divisibility is inclusion of supports
            masks = [g.support for g in gens]
            pairs = ((a, b) for a, ma in zip(gens, masks) for b, mb in zip(gens, masks)
                     if a is not b and ma & ~mb == 0)
        else:
            pairs = ((a, b) for a in gens for b in gens if a is not b and a.divides(b))
        for a, b in pairs:
            raise ValueError(f"{a.format(self.context)} divides {b.format(self.context)}; "
                             "use minimalize()")
        object.__setattr__(self, "generators", gens)

    @property
    def is_zero(self) -> bool:
        return not self.generators

    @property
    def is_unit(self) -> bool:
        return any(g.degree == 0 for g in self.generators)

    @property
    def is_squarefree(self) -> bool:
        return all(g.is_squarefree for g in self.generators)

    def __len__(self):
        return len(self.generators)

    def format(self) -> str:
        if not self.generators:
            return "(0)"
        return "(" + ", ".join(g.format(self.context) for g in self.generators) + ")"


def parse_monomial(text: str, ctx: PolynomialContext) -> Monomial:
    """Parse ``name('^'k)? ('*' name('^'k)?)*`` into an exponent vector.

    >>> parse_monomial("x1^2*x1", PolynomialContext.standard(2)).exponents
    (3, 0)
    """
    if not text or not text.strip():
        raise ParseError("empty monomial")
    exps = [0] * ctx.n
    for chunk in text.split("*"):
        match = _TERM.fullmatch(chunk)
        if match is None:
            raise ParseError(f"malformed term {chunk.strip()!r} in {text.strip()!r}")
        name, power = match.groups()
        k = ctx.index(name)
        if power is None:
            e = 1
        else:
            e = int(power)
            if e <= 0:
                raise ParseError(f"exponent must be positive in {chunk.strip()!r}")
        exps[k] += e
        if exps[k] > EXPONENT_CAP:
            raise ParseError(f"exponent overflow for {name}")
    return Monomial(tuple(exps))


def minimalize(gens: Iterable[Monomial], ctx: PolynomialContext) -> MonomialIdeal:
    """Keep the divisibility-minimal monomials of ``gens``."""
    unique = sorted(set(gens), key=lambda m: (m.degree, _sort_key(m)))
    kept: list[Monomial] = []
    for m in unique:
        if not any(g.divides(m) for g in kept):
            kept.append(m)
    return MonomialIdeal(ctx, tuple(kept))


def degree_stats(ideal: MonomialIdeal) -> tuple[int, int]:
    """Return ``(indeg, maxdeg)`` of the minimal generators."""
    if ideal.is_zero:
        raise ZeroIdealError("zero ideal has no generator degrees")
    degrees = [g.degree for g in ideal.generators]
    return min(degrees), max(degrees)


def polarize(ideal: MonomialIdeal):
    """Square-free polarization.

    Each variable ``v`` whose largest exponent among the generators is ``e``
    is replaced by the fresh variables ``v#1, ..., v#e``; a generator with
    exponent ``a`` in ``v`` uses ``v#1 ... v#a``.  Returns ``(J, ctx2, var_map)``
    where ``var_map`` sends each new name to ``(original name, copy index)``.
    Square-free input comes back unchanged with the identity map.
    """
    if ideal.is_zero:
        raise ZeroIdealError("cannot polarize the zero ideal")
    ctx = ideal.context
    if ideal.is_squarefree:
        return ideal, ctx, {v: (v, 1) for v in ctx.variable_names}

    top = [max(g.exponents[k] for g in ideal.generators) for k in range(ctx.n)]
    names: list[str] = []
    var_map: dict[str, tuple[str, int]] = {}
    offset: list[int] = []
    for name, e in zip(ctx.variable_names, top):
        offset.append(len(names))
        for copy in range(1, e + 1):
            fresh = f"{name}#{copy}"
            names.append(fresh)
            var_map[fresh] = (name, copy)
    ctx2 = PolynomialContext(tuple(names))
    gens = []
    for g in ideal.generators:
        support = [offset[k] + c for k, e in enumerate(g.exponents) for c in range(e)]
        gens.append(Monomial.from_support(support, ctx2.n))
    # polarization preserves minimality of a minimal generating set
    return MonomialIdeal(ctx2, tuple(gens)), ctx2, var_map
