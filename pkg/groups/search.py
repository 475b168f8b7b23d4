"""Deterministic search for generating tuples with prescribed orders."""

from __future__ import annotations

import logging
from typing import Dict, List, Optional, Sequence, Tuple

from core.errors import InternalInconsistency, InvalidInput
from groups.group import PermGroup
from groups.permutation import Permutation, product

LOGGER = logging.getLogger(__name__)


def find_generating_tuple(group: PermGroup, orders: Sequence[int]) -> Optional[Tuple[Permutation, ...]]:
    """First tuple (lexicographic over ``group.elements``) with the given orders,
    product one, generating the group; ``None`` when none exists."""

    orders = [int(o) for o in orders]
    if not orders or any(o < 1 for o in orders):
        raise InvalidInput(f"orders must be positive integers, got {orders}")
    by_order: Dict[int, List[Permutation]] = {}
    for e in group.elements:
        by_order.setdefault(e.order(), []).append(e)
    if any(o not in by_order for o in orders):
        LOGGER.debug("No elements of some order in %s", orders)
        return None

    identity = group.identity
    candidates = 0
    head_orders, last_order = orders[:-1], orders[-1]

    def extend(prefix: List[Permutation], partial: Permutation) -> Optional[Tuple[Permutation, ...]]:
        nonlocal candidates
        if len(prefix) == len(head_orders):
            closing = partial.inverse()
            if closing.order() != last_order:
                return None
            candidates += 1
            found = tuple(prefix) + (closing,)
            if group.generated_by(found):
                return found
            return None
        for g in by_order[head_orders[len(prefix)]]:
            prefix.append(g)
            hit = extend(prefix, partial * g)
            prefix.pop()
            if hit is not None:
                return hit
        return None

    result = extend([], identity)
    LOGGER.debug("Tuple search for %s checked %d candidates", orders, candidates)
    if result is not None:
        _verify(group, orders, result)
    return result


def _verify(group: PermGroup, orders: Sequence[int], found: Sequence[Permutation]) -> None:
    if [g.order() for g in found] != list(orders):
        raise InternalInconsistency("generating tuple has wrong element orders")
    if not product(found, group.degree).is_identity:
        raise InternalInconsistency("generating tuple product is not the identity")
    if not group.generated_by(found):
        raise InternalInconsistency("generating tuple does not generate")


__all__ = ["find_generating_tuple"]
