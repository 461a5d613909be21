"""
Multiplierless transform plans.

A :class:`TransformPlan` is a straight-line program of additions,
subtractions and left shifts over named integer slots. Inputs are the slots
``x0 .. x{n-1}``; ``outputs`` lists the slot holding each transform
coefficient. Plans are exact: applying one to integer input reproduces the
matrix product bit for bit.

The 8-point plan follows the sparse factorization ``T1 = D A4 A3 A2 A1``; the
16- and 32-point plans are built by the butterfly-and-interleave scaling
recursion, one pre-butterfly addition per input sample plus two half-size
plans.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Literal, Sequence

import numpy as np

from .catalog import T1

Op = Literal["ADD", "SUB", "SHL", "NEG", "COPY"]


@dataclass(frozen=True)
class Node:
    op: Op
    args: tuple[str, ...]
    dst: str
    shift: int = 0

    def __str__(self):
        if self.op == "SHL":
            return f"SHL {self.args[0]} {self.shift} -> {self.dst}"
        return f"{self.op} {' '.join(self.args)} -> {self.dst}"


@dataclass(frozen=True)
class TransformPlan:
    length: int
    nodes: tuple[Node, ...]
    outputs: tuple[str, ...]
    name: str = ""
    additions: int = field(init=False)
    shifts: int = field(init=False)

    def __post_init__(self):
        defined = {f"x{i}" for i in range(self.length)}
        for node in self.nodes:
            missing = [a for a in node.args if a not in defined]
            if missing:
                raise ValueError(f"{node}: undefined slot(s) {missing}")
            if node.dst in defined:
                raise ValueError(f"{node}: slot {node.dst} assigned twice")
            defined.add(node.dst)
        if len(self.outputs) != self.length or any(o not in defined for o in self.outputs):
            raise ValueError("plan outputs are incomplete")
        object.__setattr__(self, "additions", sum(n.op in ("ADD", "SUB") for n in self.nodes))
        object.__setattr__(self, "shifts", sum(n.op == "SHL" for n in self.nodes))

    @property
    def declared_cost(self) -> tuple[int, int]:
        return self.additions, self.shifts

    def text(self) -> str:
        lines = [f"# plan {self.name} length {self.length} additions {self.additions} shifts {self.shifts}"]
        lines += [str(n) for n in self.nodes]
        lines.append("OUT " + " ".join(self.outputs))
        return "\n".join(lines) + "\n"

    def magnitude_bound(self, input_bound: int) -> int:
        """Largest absolute value any slot can hold when ``|x_i| <= input_bound``."""
        bound = {f"x{i}": input_bound for i in range(self.length)}
        for n in self.nodes:
            if n.op in ("ADD", "SUB"):
                bound[n.dst] = bound[n.args[0]] + bound[n.args[1]]
            elif n.op == "SHL":
                bound[n.dst] = bound[n.args[0]] << n.shift
            else:
                bound[n.dst] = bound[n.args[0]]
        return max(bound.values())

    def bits_required(self, input_bound: int) -> int:
        """Signed two's-complement width that holds every intermediate."""
        return self.magnitude_bound(input_bound).bit_length() + 1


def apply_plan(plan: TransformPlan, x) -> np.ndarray:
    """Run ``plan`` on an integer vector, or on each column of a ``(length, m)`` array."""
    x = np.asarray(x)
    if x.shape[0] != plan.length:
        raise ValueError(f"input has length {x.shape[0]}, plan expects {plan.length}")
    if not np.issubdtype(x.dtype, np.integer):
        raise ValueError("plans operate on integer input")
    slots = {f"x{i}": x[i].astype(np.int64) for i in range(plan.length)}
    for n in plan.nodes:
        a = slots[n.args[0]]
        if n.op == "ADD":
            slots[n.dst] = a + slots[n.args[1]]
        elif n.op == "SUB":
            slots[n.dst] = a - slots[n.args[1]]
        elif n.op == "SHL":
            slots[n.dst] = a << n.shift
        elif n.op == "NEG":
            slots[n.dst] = -a
        else:
            slots[n.dst] = a
    return np.stack([slots[o] for o in plan.outputs])


class _Builder:
    def __init__(self, prefix: str):
        self.prefix = prefix
        self.nodes: list[Node] = []
        self._count = 0

    def _new(self) -> str:
        name = f"{self.prefix}{self._count}"
        self._count += 1
        return name

    def add(self, a, b):
        return self._emit("ADD", (a, b))

    def sub(self, a, b):
        return self._emit("SUB", (a, b))

    def shl(self, a, s=1):
        dst = self._new()
        self.nodes.append(Node("SHL", (a,), dst, s))
        return dst

    def _emit(self, op, args):
        dst = self._new()
        self.nodes.append(Node(op, args, dst))
        return dst


def t1_fast_plan() -> TransformPlan:
    """24 additions and 6 shifts for the 8-point ``T1``.

    The half-valued entries of ``A4`` are absorbed by the doubling in ``D``:
    each odd output is formed as ``2 * (...)`` directly, so no slot is ever
    fractional.
    """
    b = _Builder("t")
    x = [f"x{i}" for i in range(8)]
    # A1: outer butterfly
    a = [b.add(x[0], x[7]), b.add(x[1], x[6]), b.add(x[2], x[5]), b.add(x[3], x[4]),
         b.sub(x[3], x[4]), b.sub(x[2], x[5]), b.sub(x[1], x[6]), b.sub(x[0], x[7])]
    # A2: butterfly on the even half
    e = [b.add(a[0], a[3]), b.add(a[1], a[2]), b.sub(a[1], a[2]), b.sub(a[0], a[3])]
    # A3
    c = [b.add(e[0], e[1]), b.sub(e[0], e[1]), e[2], e[3], a[4], a[5], a[6], a[7]]
    # D * A4
    y = [None] * 8
    y[0] = c[0]
    y[4] = c[1]
    y[2] = b.add(c[2], b.shl(c[3]))
    y[6] = b.sub(c[3], b.shl(c[2]))
    y[1] = b.add(c[5], b.shl(b.add(c[6], c[7])))
    y[3] = b.sub(c[7], b.shl(b.add(c[4], c[5])))
    y[5] = b.add(c[4], b.shl(b.sub(c[7], c[6])))
    y[7] = b.sub(b.shl(b.sub(c[5], c[4])), c[6])
    return TransformPlan(8, tuple(b.nodes), tuple(y), "T1")


def _rename(plan: TransformPlan, inputs: Sequence[str], prefix: str) -> tuple[list[Node], list[str]]:
    mapping = {f"x{i}": s for i, s in enumerate(inputs)}

    def m(slot):
        return mapping.get(slot, prefix + slot)

    nodes = [Node(n.op, tuple(m(a) for a in n.args), m(n.dst), n.shift) for n in plan.nodes]
    return nodes, [m(o) for o in plan.outputs]


def jam_plan(half: TransformPlan) -> TransformPlan:
    """Double a plan: butterfly ``x_i +- x_{N-1-i}``, two half plans, interleave outputs."""
    h = half.length
    n = 2 * h
    b = _Builder("j")
    x = [f"x{i}" for i in range(n)]
    upper = [b.add(x[i], x[n - 1 - i]) for i in range(h)]
    lower = [b.sub(x[i], x[n - 1 - i]) for i in range(h)]
    even_nodes, even_out = _rename(half, upper, "e")
    odd_nodes, odd_out = _rename(half, lower, "o")
    outputs = [None] * n
    outputs[0::2] = even_out
    outputs[1::2] = odd_out
    name = f"{half.name.split('-')[0]}-{n}"
    return TransformPlan(n, tuple(b.nodes + even_nodes + odd_nodes), tuple(outputs), name)


def scaled_plan(n: int) -> TransformPlan:
    if n not in (8, 16, 32):
        raise ValueError(f"no plan for length {n}")
    plan = t1_fast_plan()
    while plan.length < n:
        plan = jam_plan(plan)
    return plan


def plan_matrix(plan: TransformPlan) -> np.ndarray:
    """Matrix realized by ``plan`` (its response to the unit vectors)."""
    return apply_plan(plan, np.eye(plan.length, dtype=np.int64))


# Printed factors of T1. A4 holds halves, kept exact as Fractions.
_h = Fraction(1, 2)
A1 = np.array([
    [1, 0, 0, 0, 0, 0, 0, 1],
    [0, 1, 0, 0, 0, 0, 1, 0],
    [0, 0, 1, 0, 0, 1, 0, 0],
    [0, 0, 0, 1, 1, 0, 0, 0],
    [0, 0, 0, 1, -1, 0, 0, 0],
    [0, 0, 1, 0, 0, -1, 0, 0],
    [0, 1, 0, 0, 0, 0, -1, 0],
    [1, 0, 0, 0, 0, 0, 0, -1],
], dtype=np.int64)
A2 = np.array([
    [1, 0, 0, 1, 0, 0, 0, 0],
    [0, 1, 1, 0, 0, 0, 0, 0],
    [0, 1, -1, 0, 0, 0, 0, 0],
    [1, 0, 0, -1, 0, 0, 0, 0],
    [0, 0, 0, 0, 1, 0, 0, 0],
    [0, 0, 0, 0, 0, 1, 0, 0],
    [0, 0, 0, 0, 0, 0, 1, 0],
    [0, 0, 0, 0, 0, 0, 0, 1],
], dtype=np.int64)
A3 = np.eye(8, dtype=np.int64)
A3[:2, :2] = [[1, 1], [1, -1]]
A4 = np.array([
    [1, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, _h, 1, 1],
    [0, 0, 1, 2, 0, 0, 0, 0],
    [0, 0, 0, 0, -1, -1, 0, _h],
    [0, 1, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, _h, 0, -1, 1],
    [0, 0, -2, 1, 0, 0, 0, 0],
    [0, 0, 0, 0, -1, 1, -_h, 0],
], dtype=object)
D = np.diag([1, 2, 1, 2, 1, 2, 1, 2]).astype(np.int64)


@dataclass(frozen=True)
class FactorizationCheck:
    exact: bool
    residual: int | Fraction
    mismatches: tuple[tuple[int, int], ...]

    def __bool__(self):
        return self.exact


def _exact(m) -> np.ndarray:
    return np.vectorize(Fraction, otypes=[object])(np.asarray(m, dtype=object))


def verify_factorization(factors=None, target=None) -> FactorizationCheck:
    """Multiply the factors in exact rational arithmetic and compare with ``target``."""
    factors = [D, A4, A3, A2, A1] if factors is None else factors
    target = T1 if target is None else target
    prod = _exact(factors[0])
    for f in factors[1:]:
        prod = prod.dot(_exact(f))
    diff = prod - _exact(target)
    bad = tuple((int(i), int(j)) for i, j in zip(*np.nonzero(diff != 0)))
    residual = max((abs(v) for v in diff.ravel()), default=Fraction(0))
    return FactorizationCheck(not bad, residual, bad)


@dataclass(frozen=True)
class ScaledTransform:
    """Integer ``N``-point matrix, its diagonal ``t @ t.T`` and pending ``1/sqrt(2)`` factors."""

    t: np.ndarray
    diagonal: np.ndarray
    levels: int = 0

    @property
    def pre_scale(self) -> float:
        return 2.0 ** (-self.levels / 2)

    @property
    def size(self) -> int:
        return self.t.shape[0]


def jam_scale(half) -> ScaledTransform:
    """``N``-point matrix from an ``N/2``-point one.

    ``t_N = Mper @ blockdiag(t, t) @ Madd`` with ``Madd = [[I, J], [I, -J]]``
    (``J`` the counter-identity) and ``Mper`` sending the two halves to the
    even and odd rows. The common ``1/sqrt(2)`` is not applied; it is counted
    in ``levels`` and left to the quantizer.
    """
    levels = 0
    if isinstance(half, ScaledTransform):
        levels = half.levels
        half = half.t
    half = np.asarray(half)
    if half.ndim != 2 or half.shape[0] != half.shape[1]:
        raise ValueError("half-size matrix must be square")
    h = half.shape[0]
    eye = np.eye(h, dtype=np.int64)
    counter = eye[::-1]
    madd = np.block([[eye, counter], [eye, -counter]])
    z = np.zeros_like(half, dtype=np.int64)
    stacked = np.block([[half, z], [z, half]]) @ madd
    t = np.empty_like(stacked)
    t[0::2] = stacked[:h]
    t[1::2] = stacked[h:]
    gram = t @ t.T
    if np.any(gram != np.diag(np.diag(gram))):
        raise ValueError("scaled matrix rows are not orthogonal")
    return ScaledTransform(t, np.diag(np.diag(gram)), levels + 1)


def scaled_transform(n: int) -> ScaledTransform:
    st = ScaledTransform(np.array(T1), np.diag(np.diag(T1 @ T1.T)), 0)
    while st.size < n:
        st = jam_scale(st)
    if st.size != n:
        raise ValueError(f"unsupported length {n}")
    return st


def scaled_diagonal(n: int) -> np.ndarray:
    """``t @ t.T`` for the 16- and 32-point scaled matrices, from the Kronecker formula."""
    i2 = np.eye(2, dtype=np.int64)
    d16 = 4 * np.kron(np.kron(i2, np.diag([4, 9, 10, 9])), i2)
    if n == 16:
        return d16
    if n == 32:
        return 2 * np.kron(d16, i2)
    raise ValueError(f"unsupported length {n}; expected 16 or 32")
