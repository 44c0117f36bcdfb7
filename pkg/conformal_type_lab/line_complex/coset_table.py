"""
Depth-limited coset enumeration for groups generated by involutions.

Cosets of the trivial subgroup are defined breadth first up to a fixed depth. After each
level every relator is scanned at every live coset: a scan with a single gap fills it
(deduction), a complete scan that fails to return to its start identifies two cosets
(coincidence). Coincidences are merged with a union-find table, keeping the coset of
smaller depth as representative. The result is the Cayley graph near the identity.
"""

import time
from typing import Dict, List, Optional, Sequence

from tqdm import tqdm

from conformal_type_lab.config import config
from conformal_type_lab.errors import TooLarge
from conformal_type_lab.utils import create_logger

SENTINEL = -1


class CosetTable:
    """Coset table over involutive generators ``0..ngens-1``.

    Args:
        ngens (int): Number of generators; each is its own inverse.
        relators (Sequence[Sequence[int]]): Relator words over the generators.
        budget (Optional[int]): Maximum number of cosets ever defined.
    """

    def __init__(self, ngens: int, relators: Sequence[Sequence[int]],
                 budget: Optional[int] = None):
        self.ngens = ngens
        self.relators = [list(rel) for rel in relators if rel]
        for rel in self.relators:
            for gen in rel:
                if not 0 <= gen < ngens:
                    raise ValueError(f"relator {rel} uses unknown generator {gen}")
        self.budget = budget or config.get_line_complex_settings()["coset_budget"]
        self.labels: List[int] = []
        self.neighbors: List[List[int]] = []
        self.depth: List[int] = []
        self.logger = create_logger(
            name=f"{self.__class__.__module__}.{self.__class__.__name__}",
            log_level=config.log_level,
            log_file=config.log_file,
        )
        self.start = self.add_coset(0)

    # labels is a union-find forest over coset indices.
    def find(self, c: int) -> int:
        root = c
        while self.labels[root] != root:
            root = self.labels[root]
        while self.labels[c] != root:
            self.labels[c], c = root, self.labels[c]
        return root

    def add_coset(self, depth: int) -> int:
        if len(self.labels) >= self.budget:
            raise TooLarge(len(self.labels) + 1, self.budget)
        c = len(self.labels)
        self.labels.append(c)
        self.neighbors.append(self.ngens * [SENTINEL])
        self.depth.append(depth)
        return c

    def follow(self, c: int, gen: int) -> Optional[int]:
        target = self.neighbors[self.find(c)][gen]
        return None if target == SENTINEL else self.find(target)

    def _link(self, c: int, gen: int, d: int) -> None:
        self.neighbors[c][gen] = d
        self.neighbors[d][gen] = c

    def unify(self, c1: int, c2: int) -> None:
        to_unify = [(c1, c2)]
        while to_unify:
            a, b = to_unify.pop()
            a = self.find(a)
            b = self.find(b)
            if a == b:
                continue
            keep, drop = sorted((a, b), key=lambda c: (self.depth[c], c))
            self.labels[drop] = keep
            self.depth[keep] = min(self.depth[keep], self.depth[drop])
            for gen in range(self.ngens):
                n_drop = self.neighbors[drop][gen]
                if n_drop == SENTINEL:
                    continue
                n_drop = self.find(n_drop)
                n_keep = self.neighbors[keep][gen]
                if n_keep == SENTINEL:
                    self._link(keep, gen, n_drop)
                else:
                    to_unify.append((self.find(n_keep), n_drop))

    def scan(self, c: int, rel: Sequence[int]) -> bool:
        """Scan one relator at coset c. Returns True if the table changed."""
        c = self.find(c)
        length = len(rel)
        forward, i = c, 0
        while i < length:
            nxt = self.follow(forward, rel[i])
            if nxt is None:
                break
            forward, i = nxt, i + 1
        if i == length:
            if forward != c:
                self.unify(forward, c)
                return True
            return False

        backward, k = c, length
        while k > i:
            prv = self.follow(backward, rel[k - 1])
            if prv is None:
                break
            backward, k = prv, k - 1
        if k == i:
            if forward != backward:
                self.unify(forward, backward)
                return True
            return False
        if k == i + 1:
            self._link(self.find(forward), rel[i], self.find(backward))
            return True
        return False

    def live_cosets(self) -> List[int]:
        return [c for c in range(len(self.labels)) if self.find(c) == c]

    def close(self) -> None:
        """Scan relators at every live coset until nothing changes."""
        changed = True
        while changed:
            changed = False
            for c in self.live_cosets():
                if self.find(c) != c:
                    continue
                for rel in self.relators:
                    if self.scan(c, rel):
                        changed = True

    def enumerate(self, depth: int) -> None:
        """Define cosets breadth first up to ``depth``, closing after every level."""
        start_time = time.time()
        self.close()
        levels = range(depth)
        if config.show_progress and depth > 4:
            levels = tqdm(levels, desc="Coset levels", leave=False)
        for level in levels:
            frontier = [c for c in self.live_cosets() if self.depth[c] <= level]
            for c in frontier:
                for gen in range(self.ngens):
                    c = self.find(c)
                    if self.follow(c, gen) is None:
                        self._link(c, gen, self.add_coset(self.depth[c] + 1))
            self.close()
        self.logger.debug(
            f"Enumerated {len(self.live_cosets())} live cosets to depth {depth} "
            f"({len(self.labels)} defined) in {time.time() - start_time:.3f} seconds"
        )

    def is_complete(self) -> bool:
        """True when every live coset has all generator images defined (finite group)."""
        return all(
            self.follow(c, gen) is not None
            for c in self.live_cosets() for gen in range(self.ngens)
        )

    def adjacency(self) -> Dict[int, List[Optional[int]]]:
        """Live coset to its generator images (None where undefined)."""
        return {
            c: [self.follow(c, gen) for gen in range(self.ngens)]
            for c in self.live_cosets()
        }
