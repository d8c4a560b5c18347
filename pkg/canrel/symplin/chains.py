"""
CANREL Correspondence Chains
Composable lists of linear canonical relations, their collapse, and the
equivalent two-term chain (coreduction, reduction).
"""

import logging
from dataclasses import dataclass
from typing import List, Tuple

from canrel.core.errors import StructureError
from canrel.symplin.relations import Flags, LinCanRel, compose_lin, lin_rel
from canrel.symplin.spaces import direct_sum, dual

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CorrChain:
    legs: Tuple[LinCanRel, ...]

    def __post_init__(self):
        legs = tuple(self.legs)
        object.__setattr__(self, "legs", legs)
        if not legs:
            raise StructureError("a chain needs at least one leg")
        for i, (a, b) in enumerate(zip(legs, legs[1:])):
            if a.dst != b.src:
                raise StructureError(f"legs {i} and {i + 1} do not meet")

    @property
    def src(self):
        return self.legs[0].src

    @property
    def dst(self):
        return self.legs[-1].dst


def ww_compose(chain: CorrChain) -> Tuple[LinCanRel, List[Flags]]:
    """Left fold of compose_lin with the flags of every junction."""
    acc = chain.legs[0]
    flags: List[Flags] = []
    for leg in chain.legs[1:]:
        acc, junction = compose_lin(acc, leg)
        flags.append(junction)
    bad = [i for i, f in enumerate(flags) if not f["strongly_transversal"]]
    if bad:
        logger.warning("chain junctions %s are not strongly transversal", bad)
    return acc, flags


def ww_two_term(chain: CorrChain) -> Tuple[LinCanRel, LinCanRel]:
    """
    c: X -> X ⊕ X̄ ⊕ Z with graph {(x, (x, b, z)) : (b, z) in Λ} and
    r: X ⊕ X̄ ⊕ Z -> Z with graph {((a, a, z), z)}, where Λ is the collapsed
    chain; c is a coreduction, r a reduction and c followed by r is Λ.
    """
    composite, _ = ww_compose(chain)
    X, Z = chain.src, chain.dst
    x, z = X.dim, Z.dim
    middle = direct_sum(X, dual(X), Z)

    def unit(n, i):
        return [1 if k == i else 0 for k in range(n)]

    c_rows = [unit(x, i) + unit(x, i) + [0] * x + [0] * z for i in range(x)]
    c_rows += [[0] * x + [0] * x + list(row) for row in composite.graph.rows()]
    r_rows = [unit(x, i) + unit(x, i) + [0] * z + [0] * z for i in range(x)]
    r_rows += [[0] * (2 * x) + unit(z, j) + unit(z, j) for j in range(z)]
    return lin_rel(X, middle, c_rows), lin_rel(middle, Z, r_rows)
