import itertools
import math
from typing import Iterator, List, Sequence, Tuple

MAX_GROUND_SET = 8


class SetPartition:
    """
    Partition of {1, ..., r} into nonempty blocks, blocks sorted and ordered by least element.
    """

    def __init__(self, r: int, blocks: Sequence[Sequence[int]]):
        canonical = sorted((tuple(sorted(block)) for block in blocks), key=lambda block: block[0] if block else 0)
        elements = [element for block in canonical for element in block]
        if any(len(block) == 0 for block in canonical) or sorted(elements) != list(range(1, r + 1)):
            raise ValueError(f"blocks {blocks} do not partition {{1..{r}}}")
        self.r = r
        self.blocks: Tuple[Tuple[int, ...], ...] = tuple(canonical)

    @property
    def size(self) -> int:
        """Number of blocks |rho|."""
        return len(self.blocks)

    def labels(self) -> List[int]:
        """Block label of every element 1..r (0-based list)."""
        labels = [0] * self.r
        for label, block in enumerate(self.blocks):
            for element in block:
                labels[element - 1] = label
        return labels

    def rotated(self, shift: int) -> 'SetPartition':
        """Relabel i -> ((i - 1 + shift) mod r) + 1."""
        return SetPartition(self.r, [[(element - 1 + shift) % self.r + 1 for element in block] for block in self.blocks])

    def __repr__(self):
        inner = ", ".join("{" + ",".join(str(e) for e in block) + "}" for block in self.blocks)
        return f"{{{inner}}}"

    def __eq__(self, other):
        if not isinstance(other, SetPartition):
            return False
        return self.r == other.r and self.blocks == other.blocks

    def __hash__(self):
        return hash((self.r, self.blocks))


def _restricted_growth(r: int) -> Iterator[List[int]]:
    def extend(prefix: List[int], top: int):
        if len(prefix) == r:
            yield list(prefix)
            return
        for label in range(top + 2):
            prefix.append(label)
            yield from extend(prefix, max(top, label))
            prefix.pop()

    yield from extend([0], 0)


def enumerate_partitions(r: int) -> List[SetPartition]:
    """All Bell(r) partitions of {1..r}, generated as restricted growth strings."""
    if r < 1 or r > MAX_GROUND_SET:
        raise ValueError(f"r must be in 1..{MAX_GROUND_SET}, got {r}")
    partitions = []
    for labels in _restricted_growth(r):
        blocks = [[] for _ in range(max(labels) + 1)]
        for element, label in enumerate(labels, start=1):
            blocks[label].append(element)
        partitions.append(SetPartition(r, blocks))
    return partitions


def is_noncrossing(rho: SetPartition) -> bool:
    """True iff there is no a < b < c < d with a, c in one block and b, d in another."""
    labels = rho.labels()
    for a, b, c, d in itertools.combinations(range(rho.r), 4):
        if labels[a] == labels[c] and labels[b] == labels[d] and labels[a] != labels[b]:
            return False
    return True


def four_cycle_partition() -> SetPartition:
    """The first crossing partition {{1,3},{2,4}}."""
    return SetPartition(4, [[1, 3], [2, 4]])


def bell_number(r: int) -> int:
    row = [1]
    for _ in range(r - 1):
        nxt = [row[-1]]
        for value in row:
            nxt.append(nxt[-1] + value)
        row = nxt
    return row[-1]


def catalan_number(r: int) -> int:
    return math.comb(2 * r, r) // (r + 1)
