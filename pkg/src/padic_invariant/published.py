"""Previously published values of the tables and Bernoulli relations.

These are comparison fixtures only. Nothing in the package derives results
from them; every generated value comes from the recurrences. Coefficient
lists run from the constant term upward. Where a typeset line lacked an
operator between two x-power groups, ``+`` was assumed.
"""

from __future__ import annotations

from typing import Dict, List

from .polyring import BiPolynomial, NPolynomial, Polynomial

# U_k, low degree first.
_U: Dict[int, List[int]] = {
    1: [0, 2],  # 2x
    2: [0, -2, -4],  # -2x-4x^2
    3: [0, 2, 20, 8],  # 8x^3+20x^2+2x
    4: [0, -2, -60, -144, -16],  # -16x^4-144x^3-60x^2-2x
    5: [0, 2, 136, 1176, 352, 800],  # 800x^5+352x^4+1176x^3+136x^2+2x
    6: [0, -2, -332, -2244, -32992, -3616, -4032],
}

# A_{k-1}, keyed by k, then by power of x; inner lists are in n, low first.
_A: Dict[int, Dict[int, List[int]]] = {
    1: {0: [0, 1]},  # n
    2: {  # (4n^2-4n)x-n^2
        1: [0, -4, 4],
        0: [0, 0, -1],
    },
    3: {  # (16n^3-40n^2+72n)x^2-(8n^3-10n^2+8n)x+n^3
        2: [0, 72, -40, 16],
        1: [0, -8, 10, -8],
        0: [0, 0, 0, 1],
    },
    4: {
        3: [0, -880, 272, -224, 64],  # (64n^4-224n^3+272n^2-880n)x^3
        2: [0, 120, 4, 112, -48],  # -(48n^4-112n^3-4n^2-120n)x^2
        1: [0, -10, -18, -14, 12],  # +(12n^4-14n^3-18n^2-10n)x
        0: [0, 0, 0, 0, -1],  # -n^4
    },
    5: {
        4: [0, 7648, -1568, 1984, -1152, 256],
        3: [0, 3008, -1216, -480, 864, -256],  # -(256n^5-864n^4+480n^3+1216n^2-3008n)
        2: [0, -108, 308, -132, -216, 96],  # (96n^5-216n^4-132n^3+308n^2-108n), sign missing
        1: [0, 12, 28, 32, 18, -16],  # -(16n^5-18n^4-32n^3-28n^2-12n)
        0: [0, 0, 0, 0, 0, 1],
    },
    6: {
        5: [0, -147686, -2630, -384, 12544, -5632, 1024],
        4: [0, -28304, -8688, 15684, -6208, 5632, -128],  # -(128n^6-5632n^5+...+28304n)
        3: [0, -2792, -384, 6408, -19552, -2112, 640],
        2: [0, 280, -2436, -444, 404, 352, -160],  # -(160n^6-352n^5-404n^4+444n^3+2436n^2-280n)
        1: [0, -14, -40, -60, -50, -22, 20],  # (20n^6-22n^5-...-14n)x, sign missing
        0: [0, 0, 0, 0, 0, 0, -1],
    },
}

# Bernoulli-number relations sum_n C(2n,n) sum_j c_j(n) B_{n+j} = 0, keyed by k then offset j.
_RELATIONS: Dict[int, Dict[int, List[int]]] = {
    1: {1: [2, 4], 0: [0, -1]},  # (4n+2)B_{n+1}-nB_n
    2: {2: [12, 0, 16], 1: [2, 0, -8], 0: [0, 0, -1]},  # (16n^2+12)B_{n+2}-(8n^2-2)B_{n+1}-n^2B_n
    3: {3: [8, 0, 0, 64], 2: [20, 0, 0, -48], 1: [2, 0, 0, 12], 0: [0, 0, 0, -1]},
    4: {
        4: [-16, 0, 0, 0, 256],
        3: [-144, 0, 0, 0, -256],
        2: [-60, 0, 0, 0, 96],
        1: [-2, 0, 0, 0, -16],
        0: [0, 0, 0, 0, 1],
    },
    5: {
        5: [800, 0, 0, 0, 0, 1024],
        4: [352, 0, 0, 0, 0, -1280],
        3: [-1176, 0, 0, 0, 0, 640],
        2: [-136, 0, 0, 0, 0, -160],
        1: [2, 0, 0, 0, 0, 20],
        0: [0, 0, 0, 0, 0, -1],
    },
    6: {
        6: [-4032, 0, 0, 0, 0, 0, 4096],
        5: [-3616, 0, 0, 0, 0, 0, -6144],
        4: [-32992, 0, 0, 0, 0, 0, 3840],
        3: [-2244, 0, 0, 0, 0, 0, -1280],
        2: [-332, 0, 0, 0, 0, 0, 240],
        1: [-2, 0, 0, 0, 0, 0, -24],
        0: [0, 0, 0, 0, 0, 0, 1],
    },
}

# Bernoulli-polynomial relations: numerators of c_j(n)/(n+j+1), keyed by k then offset j.
_POLY_RELATIONS: Dict[int, Dict[int, List[int]]] = {
    1: {1: [2, 4], 0: [0, -1]},  # (4n+2)/(n+2), -n/(n+1)
    2: {2: [-4, 0, 16], 1: [-2, 0, -8], 0: [0, 0, 1]},  # (16n^2-4)/(n+3), -(8n^2+2)/(n+2), n^2/(n+1)
    3: {3: [8, 0, 0, 64], 2: [20, 0, 0, -48], 1: [2, 0, 0, 12], 0: [0, 0, 0, -1]},
}


def published_U(k: int) -> Polynomial | None:
    row = _U.get(k)
    return None if row is None else Polynomial(row)


def published_A(k: int) -> BiPolynomial | None:
    """Published ``A_{k-1}`` (same index shift as :meth:`PolynomialTables.A`)."""
    rows = _A.get(k)
    if rows is None:
        return None
    top = max(rows)
    return BiPolynomial([NPolynomial(rows.get(i, [])) for i in range(top + 1)])


def _offset_map(table, k):
    rows = table.get(k)
    if rows is None:
        return None
    return {j: NPolynomial(c) for j, c in sorted(rows.items())}


def published_relation(k: int) -> Dict[int, NPolynomial] | None:
    return _offset_map(_RELATIONS, k)


def published_poly_relation(k: int) -> Dict[int, NPolynomial] | None:
    return _offset_map(_POLY_RELATIONS, k)


def published_poly_relation_ks() -> List[int]:
    return sorted(_POLY_RELATIONS)


PUBLISHED_K_MAX = max(_U)
