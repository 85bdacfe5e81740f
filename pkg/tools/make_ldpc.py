#!/usr/bin/env python3
"""Generate the bundled rate-1/2 (3,6)-regular LDPC parity-check matrix.

The construction places 3 ones per column and 6 per row, rejecting any
column that would close a 4-cycle (two columns sharing two rows). Columns
are then permuted so the last m columns form an invertible GF(2) block,
which lets the encoder solve for parity bits directly. Output is alist
text format.

Usage: python tools/make_ldpc.py [output_path]
"""

import sys
from pathlib import Path

import numpy as np

N_VARS = 648
N_CHECKS = 324
COL_W = 3
ROW_W = 6


def build_regular_matrix(rng: np.random.Generator) -> np.ndarray | None:
    """One attempt at a 4-cycle-free (3,6)-regular matrix; None if stuck."""
    capacity = np.full(N_CHECKS, ROW_W, dtype=int)
    used_pairs: set[tuple[int, int]] = set()
    cols = []
    for _ in range(N_VARS):
        placed = None
        for _ in range(200):
            avail = np.flatnonzero(capacity > 0)
            if len(avail) < COL_W:
                return None
            weights = capacity[avail].astype(float)
            pick = rng.choice(avail, size=COL_W, replace=False,
                              p=weights / weights.sum())
            pick = tuple(sorted(int(r) for r in pick))
            pairs = [(pick[a], pick[b]) for a in range(COL_W)
                     for b in range(a + 1, COL_W)]
            if any(p in used_pairs for p in pairs):
                continue
            placed = pick
            used_pairs.update(pairs)
            for r in pick:
                capacity[r] -= 1
            break
        if placed is None:
            return None
        cols.append(placed)
    H = np.zeros((N_CHECKS, N_VARS), dtype=np.uint8)
    for j, rows in enumerate(cols):
        for r in rows:
            H[r, j] = 1
    return H


def gf2_pivot_columns(H: np.ndarray) -> list[int]:
    """Pivot column indices from GF(2) row reduction (rank == len(result))."""
    A = H.copy()
    m, n = A.shape
    pivots = []
    row = 0
    for col in range(n):
        if row >= m:
            break
        hit = np.flatnonzero(A[row:, col]) + row
        if len(hit) == 0:
            continue
        if hit[0] != row:
            A[[row, hit[0]]] = A[[hit[0], row]]
        elim = np.flatnonzero(A[:, col])
        elim = elim[elim != row]
        A[elim] ^= A[row]
        pivots.append(col)
        row += 1
    return pivots


def write_alist(H: np.ndarray, path: Path) -> None:
    m, n = H.shape
    col_idx = [list(np.flatnonzero(H[:, j]) + 1) for j in range(n)]
    row_idx = [list(np.flatnonzero(H[i, :]) + 1) for i in range(m)]
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(f"{n} {m}\n")
        fh.write(f"{max(len(c) for c in col_idx)} {max(len(r) for r in row_idx)}\n")
        fh.write(" ".join(str(len(c)) for c in col_idx) + "\n")
        fh.write(" ".join(str(len(r)) for r in row_idx) + "\n")
        for c in col_idx:
            fh.write(" ".join(map(str, c)) + "\n")
        for r in row_idx:
            fh.write(" ".join(map(str, r)) + "\n")


def main() -> None:
    out = Path(sys.argv[1]) if len(sys.argv) > 1 else (
        Path(__file__).resolve().parent.parent / "src" / "punctext" /
        "assets" / "ldpc_648_324.alist"
    )
    for salt in range(100):
        rng = np.random.default_rng(77000 + salt)
        H = build_regular_matrix(rng)
        if H is None:
            continue
        assert (H.sum(axis=0) == COL_W).all() and (H.sum(axis=1) == ROW_W).all()
        pivots = gf2_pivot_columns(H)
        if len(pivots) < N_CHECKS:
            continue
        pivot_set = set(pivots)
        message_cols = [j for j in range(N_VARS) if j not in pivot_set]
        order = message_cols + pivots
        H = H[:, order]
        # last m columns must be invertible now
        assert len(gf2_pivot_columns(H[:, N_CHECKS:])) == N_CHECKS
        write_alist(H, out)
        print(f"wrote {H.shape} alist to {out} (salt {salt})")
        return
    raise SystemExit("failed to build a valid matrix")


if __name__ == "__main__":
    main()
