"""
Splitting connected subgraphs into connected pieces of bounded size.

``split_lemma_par`` cuts a finite connected subgraph of size K >= 4q into two connected
halves of size at least K/(2q). ``partition_lemma_par2`` partitions a connected subgraph
into pieces of size in [M, 2qM²], leaving pieces that reach an open vertex flagged
infinite. Ties are broken by the smallest vertex id so that results are reproducible.
"""

import time
from fractions import Fraction
from typing import FrozenSet, List, Tuple

from conformal_type_lab.config import config
from conformal_type_lab.errors import DomainError, InvalidPartition, TooSmall
from conformal_type_lab.partitioner.subgraph import SubgraphHandle
from conformal_type_lab.utils import create_logger, natural_key


class SubgraphSplitter:
    """Runs the splitting and partition procedures on handles of one parent graph."""

    def __init__(self):
        self.logger = create_logger(
            name=f"{self.__class__.__module__}.{self.__class__.__name__}",
            log_level=config.log_level,
            log_file=config.log_file,
        )

    def split(self, sub: SubgraphHandle) -> Tuple[SubgraphHandle, SubgraphHandle]:
        """Two disjoint connected subgraphs covering ``sub``, each of size >= K/(2q).

        Step 1 starts from the smallest vertex. Step 2 grows the set one adjacent vertex at a
        time while its complement stays connected. Step 3 handles a disconnected
        complement: a component of size >= K/(2q) becomes the first half and, if the rest
        is still too small, growing resumes from the rest.

        Raises:
            TooSmall: If K < 4q.
            InvalidPartition: If the procedure does not finish within 2K steps.
        """
        size = sub.size
        if size < 4 * sub.q:
            raise TooSmall(size, 4 * sub.q)
        threshold = Fraction(size, 2 * sub.q)

        grown: FrozenSet[str] = frozenset([sub.smallest()])
        for _ in range(2 * size):
            components = sub.components_without(grown)
            if len(components) > 1:
                qualifying = [c for c in components if len(c) >= threshold]
                if not qualifying:
                    raise InvalidPartition(
                        f"no component of size >= {threshold} after removing {len(grown)} "
                        f"vertices"
                    )
                first = qualifying[0]
                rest = sub.vertices - first
                if len(rest) >= threshold:
                    return sub.child(first), sub.child(rest)
                grown = frozenset(rest)
                continue
            if len(grown) >= threshold:
                return sub.child(grown), sub.child(sub.vertices - grown)
            grown = grown | {sub.frontier_of(grown)[0]}

        raise InvalidPartition(f"split of {size} vertices did not finish in {2 * size} steps")

    def partition(self, sub: SubgraphHandle, M: int) -> List[SubgraphHandle]:
        """Disjoint connected pieces covering ``sub``.

        The first piece is finite; every other piece is flagged infinite or has size in
        [M, 2qM]. Small leftovers are merged into the first piece, whose size stays within
        2qM².

        Raises:
            DomainError: If M < 2.
            TooSmall: If ``sub`` is finite and smaller than M.
            InvalidPartition: If the step budget 2·#(sub) is exhausted.
        """
        if M < 2:
            raise DomainError("M", M, "integers >= 2")
        if sub.size < M:
            if not sub.infinite:
                raise TooSmall(sub.size, M)
            return [sub]
        if sub.size == M:
            return [sub]

        start_time = time.time()
        budget = 2 * sub.size
        steps = 0

        first = frozenset([sub.smallest()])
        while len(first) < M:
            first = first | {sub.frontier_of(first)[0]}
            steps += 1

        pieces: List[SubgraphHandle] = []
        merged = set(first)
        upper = 2 * sub.q * M
        for component in sub.components_without(first):
            if sub.infinite and component & sub.open_vertices:
                pieces.append(sub.child(component, infinite=True))
            elif M <= len(component) <= upper:
                pieces.append(sub.child(component))
            elif len(component) > upper:
                stack = [sub.child(component)]
                while stack:
                    steps += 1
                    if steps > budget:
                        raise InvalidPartition(
                            f"partition of {sub.size} vertices exceeded {budget} steps"
                        )
                    piece = stack.pop()
                    if piece.size <= upper:
                        pieces.append(piece)
                    else:
                        stack.extend(self.split(piece))
            else:
                merged |= component

        pieces.sort(key=lambda piece: natural_key(piece.smallest()))
        head = sub.child(merged, infinite=False)
        self.logger.debug(
            f"Partitioned {sub.size} vertices (M={M}, q={sub.q}) into {len(pieces) + 1} "
            f"pieces in {time.time() - start_time:.3f} seconds"
        )
        return [head] + pieces


def split_lemma_par(sub: SubgraphHandle) -> Tuple[SubgraphHandle, SubgraphHandle]:
    """See :meth:`SubgraphSplitter.split`."""
    return SubgraphSplitter().split(sub)


def partition_lemma_par2(sub: SubgraphHandle, M: int) -> List[SubgraphHandle]:
    """See :meth:`SubgraphSplitter.partition`."""
    return SubgraphSplitter().partition(sub, M)
