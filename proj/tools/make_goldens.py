#!/usr/bin/env python3
"""Regenerate the golden table files used by the acceptance test.

Computes every value from the closed form with math.comb, independently of
the C++ library, and refuses to write anything if the hard-coded reference
rows disagree.
"""

import math
import pathlib

GOLDEN_DIR = pathlib.Path(__file__).resolve().parent.parent / "tests" / "goldens"


def narayana(d: int, n: int, k: int) -> int:
    if k < 0 or k > n:
        return 0
    num = math.comb(n + 1, k + 1) * math.comb(n + (n - k) * (d - 2) + 1, k)
    assert num % (n + 1) == 0, (d, n, k)
    return num // (n + 1)


def catalan(d: int, n: int) -> int:
    return sum(narayana(d, n, k) for k in range(n + 1))


REFERENCE_NARAYANA = {
    2: [
        [1],
        [1, 1],
        [1, 3, 1],
        [1, 6, 6, 1],
        [1, 10, 20, 10, 1],
        [1, 15, 50, 50, 15, 1],
        [1, 21, 105, 175, 105, 21, 1],
        [1, 28, 196, 490, 490, 196, 28, 1],
    ],
    3: [
        [1],
        [1, 1],
        [1, 4, 1],
        [1, 9, 10, 1],
        [1, 16, 42, 20, 1],
        [1, 25, 120, 140, 35, 1],
        [1, 36, 275, 600, 378, 56, 1],
        [1, 49, 546, 1925, 2310, 882, 84, 1],
    ],
}

REFERENCE_CATALAN = {
    2: [1, 2, 5, 14, 42, 132, 429, 1430],
    3: [1, 2, 6, 21, 80, 322, 1347, 5798],
    4: [1, 2, 7, 29, 131, 627, 3124, 16032],
    5: [1, 2, 8, 38, 196, 1073, 6120, 35968],
    6: [1, 2, 9, 48, 276, 1687, 10750, 70597],
}


def check_references() -> None:
    for d, rows in REFERENCE_NARAYANA.items():
        for n, row in enumerate(rows):
            got = [narayana(d, n, k) for k in range(n + 1)]
            assert got == row, (d, n, got, row)
    for d, row in REFERENCE_CATALAN.items():
        got = [catalan(d, n) for n in range(len(row))]
        assert got == row, (d, got, row)


def align_grid(rows: list[list[str]]) -> str:
    width: list[int] = []
    for row in rows:
        for j, cell in enumerate(row):
            if j >= len(width):
                width.append(0)
            width[j] = max(width[j], len(cell))
    return "".join(
        "  ".join(cell.rjust(width[j]) for j, cell in enumerate(row)) + "\n"
        for row in rows
    )


def narayana_table(d: int, n_max: int) -> str:
    rows = [["n\\k"] + [str(k) for k in range(n_max + 1)]]
    for n in range(n_max + 1):
        rows.append([str(n)] + [str(narayana(d, n, k)) for k in range(n + 1)])
    return align_grid(rows)


def catalan_table(n_max: int) -> str:
    rows = [["d\\n"] + [str(n) for n in range(n_max + 1)]]
    for d in range(2, 7):
        rows.append([str(d)] + [str(catalan(d, n)) for n in range(n_max + 1)])
    return align_grid(rows)


def main() -> None:
    check_references()
    GOLDEN_DIR.mkdir(parents=True, exist_ok=True)
    (GOLDEN_DIR / "table_d2.txt").write_text(narayana_table(2, 7))
    (GOLDEN_DIR / "table_d3.txt").write_text(narayana_table(3, 7))
    (GOLDEN_DIR / "table_catalan.txt").write_text(catalan_table(7))
    print(f"wrote 3 goldens to {GOLDEN_DIR}")


if __name__ == "__main__":
    main()
