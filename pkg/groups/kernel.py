"""Abelianized kernel of an evaluation map ``F_r -> G``.

The Cayley graph of G under right multiplication by the images is walked
breadth first from the identity (generator index breaks ties). Each
non-tree edge ``v --x_j--> w`` yields the Schreier generator
``t_v x_j t_w^-1`` whose exponent-sum vector is ``e(v) + e_j - e(w)``.
"""

from __future__ import annotations

import logging
from collections import deque
from typing import List, Sequence

from core.checks import CheckLedger
from core.errors import InvalidInput, NotGenerating
from exactnum.lattice import IntegerLattice
from groups.group import PermGroup
from groups.permutation import Permutation

LOGGER = logging.getLogger(__name__)


def kernel_abelianization(
    group: PermGroup,
    images: Sequence[Permutation],
    ledger: CheckLedger | None = None,
) -> IntegerLattice:
    """Image in ``Z^r`` of the kernel of ``F_r -> G``, ``x_j -> images[j]``."""

    ledger = ledger if ledger is not None else CheckLedger()
    rank = len(images)
    for g in images:
        if g not in group:
            raise InvalidInput(f"{g} is not an element of the group")
    if not group.generated_by(images):
        raise NotGenerating("the images do not generate the group")
    if rank == 0:
        return IntegerLattice.zero(0)

    steps = [group.right_multiplication(g) for g in images]
    start = group.index_of(group.identity)
    exponent: dict[int, List[int]] = {start: [0] * rank}
    tree_edges = set()
    visit_order = [start]
    queue = deque([start])
    while queue:
        v = queue.popleft()
        for j in range(rank):
            w = int(steps[j][v])
            if w not in exponent:
                vec = list(exponent[v])
                vec[j] += 1
                exponent[w] = vec
                tree_edges.add((v, j))
                visit_order.append(w)
                queue.append(w)

    rows: List[List[int]] = []
    for v in visit_order:
        for j in range(rank):
            if (v, j) in tree_edges:
                continue
            w = int(steps[j][v])
            row = [a - b for a, b in zip(exponent[v], exponent[w])]
            row[j] += 1
            if any(row):
                rows.append(row)
    lattice = IntegerLattice.from_rows(rows, rank)
    LOGGER.debug("Kernel abelianization: %d Schreier rows, HNF rank %d", len(rows), lattice.rank)

    n = group.order
    ledger.require(
        "kernel_contains_order_multiples",
        all(lattice.contains([n * int(i == j) for i in range(rank)]) for j in range(rank)),
        f"|G|*e_j in kernel lattice for |G|={n}",
    )
    ledger.require("kernel_full_rank", lattice.rank == rank, f"rank {lattice.rank} of {rank}")
    index = lattice.determinant()
    ledger.require("kernel_index_divides_order", n % index == 0, f"index {index} divides {n}")
    return lattice


__all__ = ["kernel_abelianization"]
