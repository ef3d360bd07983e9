"""Finite propositional logic over an ordered signature.

Worlds are numbered ``0 .. 2**n - 1``.  World 0 makes every atom true and
the last atom varies fastest, so over ``(a, b)`` the canonical order is
``a b``, ``a -b``, ``-a b``, ``-a -b``.  Sets of worlds are kept as int
bitmasks (bit ``i`` set means world ``i`` is a member), which is also how
formulas are compared: two formulas are equivalent iff their masks agree.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Union

from . import syntax
from .errors import PreorderFormatError, UnknownAtomError

_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")


def members(mask: int) -> Iterator[int]:
    """Indices of set bits, ascending."""
    i = 0
    while mask:
        if mask & 1:
            yield i
        mask >>= 1
        i += 1


def popcount(mask: int) -> int:
    return bin(mask).count("1")


@dataclass(frozen=True)
class Signature:
    atoms: tuple[str, ...]

    def __init__(self, atoms: Iterable[str]):
        atoms = tuple(atoms)
        if not atoms:
            raise ValueError("a signature needs at least one atom")
        for a in atoms:
            if not isinstance(a, str) or not _IDENT.match(a) or a in syntax.KEYWORDS:
                raise ValueError(f"invalid atom name {a!r}")
        if len(set(atoms)) != len(atoms):
            raise ValueError("atom names must be unique")
        object.__setattr__(self, "atoms", atoms)

    @classmethod
    def of_size(cls, n: int) -> "Signature":
        """Default signature ``a, b, c, ...`` used by the postulate lab."""
        if n < 1 or n > 26:
            raise ValueError("signature size must be between 1 and 26")
        return cls("abcdefghijklmnopqrstuvwxyz"[:n])

    def __len__(self) -> int:
        return len(self.atoms)

    @property
    def n_worlds(self) -> int:
        return 1 << len(self.atoms)

    @property
    def full(self) -> int:
        """Mask of the whole world-space."""
        return (1 << self.n_worlds) - 1

    @cached_property
    def atom_masks(self) -> dict[str, int]:
        n = len(self.atoms)
        out = {}
        for j, name in enumerate(self.atoms):
            bit = 1 << (n - 1 - j)
            out[name] = sum(1 << w for w in range(1 << n) if not w & bit)
        return out

    def worlds(self) -> list["World"]:
        return [World(self, i) for i in range(self.n_worlds)]

    def world(self, text: str) -> "World":
        """Parse the signed-atom text form, e.g. ``"a -b"``."""
        parts = text.split()
        if len(parts) != len(self.atoms):
            raise PreorderFormatError(f"world {text!r} does not list {len(self.atoms)} atoms")
        index = 0
        n = len(self.atoms)
        for j, (atom, part) in enumerate(zip(self.atoms, parts)):
            name = part[1:] if part.startswith("-") else part
            if name != atom:
                raise PreorderFormatError(f"world {text!r}: expected atom {atom!r} in position {j}")
            if part.startswith("-"):
                index |= 1 << (n - 1 - j)
        return World(self, index)

    def world_text(self, index: int) -> str:
        n = len(self.atoms)
        return " ".join(
            ("-" if index >> (n - 1 - j) & 1 else "") + a for j, a in enumerate(self.atoms)
        )

    def mask_of(self, worlds: Union[int, Iterable["World"]]) -> int:
        if isinstance(worlds, int):
            return worlds
        mask = 0
        for w in worlds:
            if w.sig != self:
                raise ValueError("world belongs to a different signature")
            mask |= 1 << w.index
        return mask


@dataclass(frozen=True, order=True)
class World:
    sig: Signature = field(compare=False)
    index: int

    @property
    def assignment(self) -> tuple[bool, ...]:
        n = len(self.sig)
        return tuple(not self.index >> (n - 1 - j) & 1 for j in range(n))

    def satisfies(self, phi: "Formula") -> bool:
        return bool(phi.mask >> self.index & 1)

    def __str__(self) -> str:
        return self.sig.world_text(self.index)


def _evaluate(node: syntax.Node, sig: Signature) -> int:
    if isinstance(node, syntax.Const):
        return sig.full if node.value else 0
    if isinstance(node, syntax.Atom):
        try:
            return sig.atom_masks[node.name]
        except KeyError:
            raise UnknownAtomError(node.name, node.position) from None
    if isinstance(node, syntax.Not):
        return sig.full & ~_evaluate(node.operand, sig)
    left = _evaluate(node.left, sig)
    right = _evaluate(node.right, sig)
    if node.op == "&":
        return left & right
    if node.op == "|":
        return left | right
    if node.op == "->":
        return (sig.full & ~left) | right
    return sig.full & ~(left ^ right)


@dataclass(frozen=True)
class Formula:
    """A formula bound to a signature; ``mask`` caches its model set."""

    sig: Signature
    ast: syntax.Node
    mask: int = field(init=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "mask", _evaluate(self.ast, self.sig))

    @property
    def models(self) -> frozenset[World]:
        return frozenset(World(self.sig, i) for i in members(self.mask))

    def equivalent(self, other: "Formula") -> bool:
        return self.mask == other.mask

    @property
    def consistent(self) -> bool:
        return self.mask != 0

    @property
    def tautology(self) -> bool:
        return self.mask == self.sig.full

    def __str__(self) -> str:
        return syntax.to_text(self.ast)


@dataclass(frozen=True)
class BeliefSet:
    """A deductively closed set, represented by its models."""

    sig: Signature
    mask: int

    @classmethod
    def of(cls, *formulas: Union[str, Formula], sig: Signature) -> "BeliefSet":
        """``Cn`` of finitely many formulas."""
        mask = sig.full
        for phi in formulas:
            mask &= as_mask(phi, sig)
        return cls(sig, mask)

    @property
    def models(self) -> frozenset[World]:
        return frozenset(World(self.sig, i) for i in members(self.mask))

    @property
    def consistent(self) -> bool:
        return self.mask != 0

    def __contains__(self, phi: Union[str, Formula]) -> bool:
        return entails(self, phi)

    def as_formula(self) -> Formula:
        return formula_from_models(self.mask, self.sig)

    def __str__(self) -> str:
        return f"Cn({self.as_formula()})"


def parse_formula(text: str, sig: Signature) -> Formula:
    return Formula(sig, syntax.parse(text))


def as_mask(phi: Union[int, str, Formula, BeliefSet], sig: Signature) -> int:
    """Normalize any formula-like argument to a model mask."""
    if isinstance(phi, int):
        return phi
    if isinstance(phi, str):
        return parse_formula(phi, sig).mask
    return phi.mask


def models_of(phi: Formula) -> frozenset[World]:
    return phi.models


def _world_conjunction(sig: Signature, index: int) -> syntax.Node:
    node = None
    n = len(sig)
    for j, a in enumerate(sig.atoms):
        lit: syntax.Node = syntax.Atom(a)
        if index >> (n - 1 - j) & 1:
            lit = syntax.Not(lit)
        node = lit if node is None else syntax.Binary("&", node, lit)
    return node


def formula_from_models(worlds: Union[int, Iterable[World]], sig: Signature) -> Formula:
    """Disjunction of complete conjunctions, one per world in canonical order.

    The empty set gives ``bot`` and the whole world-space gives ``top``.
    """
    mask = sig.mask_of(worlds)
    if mask == 0:
        return Formula(sig, syntax.BOT)
    if mask == sig.full:
        return Formula(sig, syntax.TOP)
    node = None
    for i in members(mask):
        term = _world_conjunction(sig, i)
        node = term if node is None else syntax.Binary("|", node, term)
    return Formula(sig, node)


def entails(x: Union[BeliefSet, int], phi: Union[int, str, Formula], sig: Signature | None = None) -> bool:
    if isinstance(x, BeliefSet):
        sig = x.sig
        x = x.mask
    return x & ~as_mask(phi, sig) == 0


def alpha_equivalent(x: BeliefSet, y: BeliefSet, alpha: Union[str, Formula]) -> bool:
    """Do ``x`` and ``y`` agree on every model of ``alpha``."""
    a = as_mask(alpha, x.sig)
    return x.mask & a == y.mask & a


def consequences(mask: int, sig: Signature) -> frozenset[int]:
    """All formula classes entailed by a model set, as a set of masks.

    Exponential in the world count; meant for small-signature cross checks.
    """
    return frozenset(m for m in range(sig.full + 1) if mask & ~m == 0)
