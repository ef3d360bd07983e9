"""Memoized operator results over interned preorders.

Postulate bodies never touch :class:`EpistemicState` objects.  They ask a
:class:`Tables` instance for belief masks and successor states by integer
id, which keeps exhaustive sweeps fast and makes every instance cheap to
replay in isolation.
"""

from __future__ import annotations

from functools import lru_cache

from ..logic import Signature, members
from ..operators import ChangeOperator
from ..orders import Ranks, TotalPreorder, bottom


@lru_cache(maxsize=None)
def members_of(mask: int) -> tuple[int, ...]:
    return tuple(members(mask))


class Tables:
    def __init__(self, op: ChangeOperator, sig: Signature):
        self.op = op
        self.sig = sig
        self.full = sig.full
        self._ids: dict[Ranks, int] = {}
        self._stored: list[Ranks] = []
        self._assigned: list[Ranks] = []
        self._bottom: list[int] = []
        self._after: list[dict[int, int]] = []
        self._orders: dict[int, TotalPreorder] = {}

    def intern(self, ranks: Ranks) -> int:
        s = self._ids.get(ranks)
        if s is None:
            s = len(self._stored)
            self._ids[ranks] = s
            self._stored.append(ranks)
            self._assigned.append(self.op.assignment(ranks))
            self._bottom.append(bottom(ranks))
            self._after.append({})
        return s

    def stored(self, s: int) -> Ranks:
        return self._stored[s]

    def ranks(self, s: int) -> Ranks:
        """The order the operator assigns to state ``s``."""
        return self._assigned[s]

    def order(self, s: int) -> TotalPreorder:
        o = self._orders.get(s)
        if o is None:
            o = self._orders[s] = TotalPreorder(self.sig, self._assigned[s])
        return o

    def after(self, s: int, a: int) -> int:
        row = self._after[s]
        t = row.get(a)
        if t is None:
            t = row[a] = self.intern(self.op.change(self._stored[s], a))
        return t

    def bel0(self, s: int) -> int:
        return self._bottom[s]

    def bel1(self, s: int, a: int) -> int:
        return self._bottom[self.after(s, a)]

    def bel2(self, s: int, a: int, b: int) -> int:
        return self._bottom[self.after(self.after(s, a), b)]

    def neg(self, a: int) -> int:
        return self.full & ~a
