"""
Greedy row-by-row search for low-complexity DCT approximations.

For a row order ``p``, rows of the exact DCT are approximated one at a time:
row ``p(k)`` receives the vector of the search space ``P**8`` with the
smallest angle to it, among the vectors orthogonal to every row placed so far.
Running all orders and grouping identical outcomes gives the candidate
matrices.

Row labels in this module are 1-based, as in the usual ``p = (1, ..., 8)``
notation; arrays are indexed from 0 internally.

Tie handling
------------
The default policy ``"float"`` scans candidates in canonical order and keeps
the first one with the largest cosine, with cosines evaluated in a fixed
floating-point operation order. Several rows have mathematically exact ties
(for row 3 of the DCT, ``[1,0,0,-1,-1,0,0,1]`` and ``[1,1,-1,-1,-1,-1,1,1]``
both have cosine ``cos(pi/8)``), and this is the policy under which the
8-point DCT yields exactly the RDCT and T4 over ``{0, +-1}``.
``"canonical"`` treats cosines within ``TIE_TOL`` as equal and keeps the
earliest vector in canonical order. Ties are recorded under both policies.
"""

from __future__ import annotations

import itertools
import json
import logging
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Literal, Sequence

import numpy as np

from .catalog import format_matrix, parse_matrix
from .errors import InfeasibleSequenceError
from .linalg import exact_dct_matrix

log = logging.getLogger(__name__)

TIE_TOL = 1e-12

P1 = (0, 1, -1)
P2 = (0, 1, -1, 2, -2)
NAMED_SETS = {"d1": P1, "d2": P2}

TiePolicy = Literal["float", "canonical"]


@dataclass(frozen=True, eq=False)
class SearchSpace:
    """All vectors of ``entry_set ** length``, lexicographic in the declared entry order."""

    entry_set: tuple[int, ...]
    vectors: np.ndarray
    nonzero: np.ndarray

    @property
    def size(self) -> int:
        return len(self.vectors)

    @property
    def length(self) -> int:
        return self.vectors.shape[1]


def build_search_space(entry_set: Sequence[int], length: int = 8) -> SearchSpace:
    entry_set = tuple(int(e) for e in entry_set)
    if not entry_set:
        raise ValueError("entry set must not be empty")
    if len(set(entry_set)) != len(entry_set):
        raise ValueError("entry set has repeated values")
    digits = np.array(entry_set, dtype=np.int32)
    # Row i of the product in lexicographic order: mixed-radix digits of i.
    idx = np.indices((len(entry_set),) * length, dtype=np.int32).reshape(length, -1).T
    vectors = digits[idx]
    vectors.flags.writeable = False
    nonzero = np.any(vectors != 0, axis=1)
    nonzero.flags.writeable = False
    return SearchSpace(entry_set, vectors, nonzero)


@dataclass(frozen=True, order=True)
class PermutationSequence:
    """Approximation order for the free rows; ``fixed_rows`` are assigned first."""

    order: tuple[int, ...]
    fixed_rows: tuple[int, ...] = ()

    def __post_init__(self):
        rows = sorted(self.order + self.fixed_rows)
        if rows != list(range(1, len(rows) + 1)):
            raise ValueError(f"order {self.order} with fixed {self.fixed_rows} is not a permutation")


def enumerate_sequences(fixed: Iterable[int] = (1, 5), n: int = 8) -> list[PermutationSequence]:
    fixed = tuple(sorted(set(fixed)))
    if any(not 1 <= r <= n for r in fixed):
        raise ValueError(f"fixed rows must lie in 1..{n}")
    free = [r for r in range(1, n + 1) if r not in fixed]
    return [PermutationSequence(p, fixed) for p in itertools.permutations(free)]


def trivial_row(c: np.ndarray, row: int) -> np.ndarray:
    """Sign pattern of DCT row ``row`` (1-based); exact for rows 1 and 5."""
    return np.sign(np.asarray(c)[row - 1]).astype(np.int32)


@dataclass(frozen=True)
class Tie:
    row: int
    angle: float
    candidates: tuple[int, ...]
    chosen: int


class GreedySolver:
    """Precomputes candidate cosines for one (DCT matrix, search space) pair."""

    def __init__(self, c=None, space: SearchSpace | None = None, tie_policy: TiePolicy = "float"):
        if tie_policy not in ("float", "canonical"):
            raise ValueError(f"unknown tie policy {tie_policy!r}")
        self.c = exact_dct_matrix(8) if c is None else np.asarray(c, dtype=float)
        self.space = space if space is not None else build_search_space(P1)
        if self.space.length != self.c.shape[1]:
            raise ValueError("search space length does not match the DCT size")
        self.tie_policy = tie_policy
        self._vectors = self.space.vectors.astype(np.int64)
        self._cos = self._cosines()

    def _cosines(self) -> np.ndarray:
        d = self._vectors.astype(float)
        # Fixed left-to-right accumulation; no BLAS, no FMA.
        dots = np.zeros((len(d), self.c.shape[0]))
        for i in range(d.shape[1]):
            dots = dots + d[:, i : i + 1] * self.c[None, :, i]
        dnorm = np.sqrt(np.sum(self._vectors * self._vectors, axis=1)).astype(float)
        cnorm = np.sqrt(np.sum(self.c * self.c, axis=1))
        with np.errstate(divide="ignore", invalid="ignore"):
            cos = dots / (dnorm[:, None] * cnorm[None, :])
        cos[~self.space.nonzero] = -np.inf
        return cos

    def _orthogonal_to(self, row: np.ndarray) -> np.ndarray:
        return (self._vectors @ row.astype(np.int64)) == 0

    def solve(self, seq: PermutationSequence, ties: list | None = None) -> np.ndarray:
        n = self.c.shape[0]
        t = np.zeros((n, n), dtype=np.int64)
        feasible = self.space.nonzero.copy()
        for r in seq.fixed_rows:
            t[r - 1] = trivial_row(self.c, r)
            feasible &= self._orthogonal_to(t[r - 1])
        for r in seq.order:
            scores = np.where(feasible, self._cos[:, r - 1], -np.inf)
            best = int(np.argmax(scores))
            top = scores[best]
            if not np.isfinite(top):
                raise InfeasibleSequenceError(seq.order, r)
            near = np.flatnonzero(scores >= top - TIE_TOL)
            if self.tie_policy == "canonical":
                best = int(near[0])
            if len(near) > 1:
                tie = Tie(r, float(np.arccos(min(1.0, top))), tuple(int(i) for i in near), best)
                log.debug("tie at row %d, angle %.17g: %d candidates", r, tie.angle, len(near))
                if ties is not None:
                    ties.append(tie)
            t[r - 1] = self._vectors[best]
            feasible &= self._orthogonal_to(t[r - 1])
        return t


def greedy_solve(c, seq: PermutationSequence, space: SearchSpace, tie_policy: TiePolicy = "float",
                 ties: list | None = None) -> np.ndarray:
    """Approximate the rows of ``c`` in the order given by ``seq``."""
    return GreedySolver(c, space, tie_policy).solve(seq, ties)


@dataclass
class SearchResult:
    matrix: np.ndarray
    producing_orders: list[PermutationSequence] = field(default_factory=list)

    @property
    def multiplicity(self) -> int:
        return len(self.producing_orders)


@dataclass
class Derivation:
    space: tuple[int, ...]
    fixed_rows: tuple[int, ...]
    results: list[SearchResult]
    infeasible: list[tuple[PermutationSequence, int]]

    @property
    def sequences(self) -> int:
        return sum(r.multiplicity for r in self.results) + len(self.infeasible)


def _matrix_key(m: np.ndarray, entry_set: tuple[int, ...]) -> tuple:
    rank = {v: i for i, v in enumerate(entry_set)}
    return tuple((rank.get(int(v), len(rank)), int(v)) for v in m.ravel())


class _Checkpoint:
    """Append-only JSON-lines progress ledger; one line per finished order."""

    def __init__(self, path, header: dict):
        self.path = Path(path)
        self.header = header
        self.done: dict[tuple[int, ...], dict] = {}
        if self.path.exists():
            self._load()
        else:
            self.path.parent.mkdir(parents=True, exist_ok=True)
            with open(self.path, "w") as f:
                f.write(json.dumps(header) + "\n")
                f.flush()
                os.fsync(f.fileno())
        self._fh = open(self.path, "a")

    def _load(self):
        with open(self.path) as f:
            lines = f.read().split("\n")
        # A final line without a newline was cut short by an interruption.
        complete, tail = lines[:-1], lines[-1]
        if tail:
            log.warning("discarding truncated checkpoint line")
        if not complete or json.loads(complete[0]) != self.header:
            raise ValueError(f"checkpoint {self.path} was written for a different search")
        for line in complete[1:]:
            rec = json.loads(line)
            self.done[tuple(rec["order"])] = rec
        with open(self.path, "w") as f:
            f.write("\n".join(complete) + "\n")

    def record(self, rec: dict):
        self._fh.write(json.dumps(rec) + "\n")
        self._fh.flush()
        os.fsync(self._fh.fileno())
        self.done[tuple(rec["order"])] = rec

    def close(self):
        self._fh.close()


_worker: GreedySolver | None = None


def _init_worker(entry_set, tie_policy):
    global _worker
    _worker = GreedySolver(None, build_search_space(entry_set), tie_policy)


def _run_one(solver: GreedySolver, seq: PermutationSequence) -> dict:
    try:
        m = solver.solve(seq)
    except InfeasibleSequenceError as err:
        return {"order": list(seq.order), "infeasible_row": err.row}
    return {"order": list(seq.order), "matrix": format_matrix(m)}


def _run_in_worker(seq: PermutationSequence) -> dict:
    return _run_one(_worker, seq)


def derive_all(space: SearchSpace, fixed: Iterable[int] = (1, 5), *, tie_policy: TiePolicy = "float",
               workers: int = 1, checkpoint=None, c=None) -> Derivation:
    """Run the greedy search for every order of the free rows and group the outcomes.

    ``checkpoint`` names a progress file; orders already recorded there are
    not recomputed, so an interrupted run resumes where it stopped. The
    result does not depend on ``workers`` or on resumption.
    """
    seqs = enumerate_sequences(fixed, space.length)
    fixed = seqs[0].fixed_rows
    ckpt = None
    if checkpoint is not None:
        if c is not None:
            raise ValueError("checkpointed runs always use the exact DCT")
        ckpt = _Checkpoint(checkpoint, {"entry_set": list(space.entry_set), "fixed": list(fixed),
                                        "tie_policy": tie_policy})
    records = dict(ckpt.done) if ckpt else {}
    todo = [s for s in seqs if s.order not in records]
    try:
        if workers > 1 and len(todo) > 1 and c is None:
            with ProcessPoolExecutor(workers, initializer=_init_worker,
                                     initargs=(space.entry_set, tie_policy)) as pool:
                chunk = max(1, len(todo) // (4 * workers))
                for rec in pool.map(_run_in_worker, todo, chunksize=chunk):
                    records[tuple(rec["order"])] = rec
                    if ckpt:
                        ckpt.record(rec)
        elif todo:
            solver = GreedySolver(c, space, tie_policy)
            for seq in todo:
                rec = _run_one(solver, seq)
                records[seq.order] = rec
                if ckpt:
                    ckpt.record(rec)
    finally:
        if ckpt:
            ckpt.close()
    return _aggregate(space, seqs, records)


def _aggregate(space: SearchSpace, seqs, records) -> Derivation:
    groups: dict[bytes, SearchResult] = {}
    infeasible = []
    for seq in seqs:
        rec = records[seq.order]
        if "infeasible_row" in rec:
            infeasible.append((seq, rec["infeasible_row"]))
            continue
        m, _ = parse_matrix(rec["matrix"])
        res = groups.setdefault(m.tobytes(), SearchResult(m))
        res.producing_orders.append(seq)
    results = sorted(groups.values(), key=lambda r: _matrix_key(r.matrix, space.entry_set))
    for r in results:
        r.producing_orders.sort()
    return Derivation(space.entry_set, seqs[0].fixed_rows, results, infeasible)
