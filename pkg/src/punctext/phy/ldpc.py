"""Systematic LDPC coding over a bundled parity-check matrix.

The bundled code is a rate-1/2 (3,6)-regular matrix of block length 648 in
alist format, with columns arranged so the last m form an invertible GF(2)
block: a codeword is [message | parity] with parity solved by a precomputed
matrix. Decoding is sum-product belief propagation with early exit on a
satisfied syndrome, vectorized across a batch of codewords.
"""

from __future__ import annotations

from functools import lru_cache
from importlib import resources
from pathlib import Path

import numpy as np

DEFAULT_MAX_ITER = 50

_ATANH_CLIP = 1.0 - 1e-12


def _gf2_solve_parity(h_msg: np.ndarray, h_par: np.ndarray) -> np.ndarray:
    """Return P with parity = P @ message (mod 2); requires h_par invertible."""
    m = h_par.shape[0]
    aug = np.concatenate([h_par.copy(), h_msg.copy()], axis=1).astype(np.uint8)
    for col in range(m):
        pivot_rows = np.flatnonzero(aug[col:, col]) + col
        if len(pivot_rows) == 0:
            raise ValueError("parity block of the check matrix is singular")
        if pivot_rows[0] != col:
            aug[[col, pivot_rows[0]]] = aug[[pivot_rows[0], col]]
        others = np.flatnonzero(aug[:, col])
        others = others[others != col]
        aug[others] ^= aug[col]
    return aug[:, m:]


class LdpcCode:
    """Encoder/decoder pair for one parity-check matrix."""

    def __init__(self, H: np.ndarray):
        H = np.asarray(H, dtype=np.uint8)
        self.H = H
        self.m, self.n = H.shape
        self.k = self.n - self.m
        self._parity_gen = _gf2_solve_parity(H[:, :self.k], H[:, self.k:])
        row_deg = H.sum(axis=1)
        col_deg = H.sum(axis=0)
        if len(set(row_deg)) != 1 or len(set(col_deg)) != 1:
            raise ValueError("decoder requires a regular check matrix")
        self.row_w = int(row_deg[0])
        self.col_w = int(col_deg[0])
        # chk_vars[i]: variables of check i. var_edges[v]: flat check-major
        # edge ids touching variable v. Regular degrees make both rectangular.
        self.chk_vars = np.array([np.flatnonzero(H[i]) for i in range(self.m)])
        edge_of: dict[int, list[int]] = {}
        for i in range(self.m):
            for t, v in enumerate(self.chk_vars[i]):
                edge_of.setdefault(int(v), []).append(i * self.row_w + t)
        self.var_edges = np.array([edge_of[v] for v in range(self.n)])
        self._edge_vars = self.chk_vars.reshape(-1)

    @classmethod
    def from_alist(cls, path: str | Path) -> "LdpcCode":
        with open(path, encoding="utf-8") as fh:
            tokens = fh.read().split()
        it = iter(tokens)
        n, m = int(next(it)), int(next(it))
        next(it), next(it)  # max degrees
        col_deg = [int(next(it)) for _ in range(n)]
        for _ in range(m):
            next(it)  # row degrees
        H = np.zeros((m, n), dtype=np.uint8)
        for j in range(n):
            for _ in range(col_deg[j]):
                H[int(next(it)) - 1, j] = 1
        return cls(H)

    @property
    def rate(self) -> float:
        return self.k / self.n

    def encode(self, message: np.ndarray) -> np.ndarray:
        """Systematic codewords for message bits of shape (k,) or (B, k)."""
        msg = np.atleast_2d(np.asarray(message, dtype=np.uint8))
        if msg.shape[1] != self.k:
            raise ValueError(f"message length must be {self.k}")
        parity = (msg @ self._parity_gen.T) % 2
        out = np.concatenate([msg, parity.astype(np.uint8)], axis=1)
        return out[0] if np.ndim(message) == 1 else out

    def check(self, codeword: np.ndarray) -> bool:
        cw = np.asarray(codeword, dtype=np.uint8)
        return bool(((self.H @ cw) % 2 == 0).all())

    def decode(self, llrs: np.ndarray, max_iter: int = DEFAULT_MAX_ITER
               ) -> tuple[np.ndarray, np.ndarray, np.ndarray | int]:
        """Sum-product decoding of channel LLRs (positive favors bit 0).

        Accepts (n,) or (B, n); returns (message bits, converged flags,
        iteration counts) with matching leading shape. Non-convergence
        returns the final estimate with converged False.
        """
        single = np.ndim(llrs) == 1
        Lc = np.atleast_2d(np.asarray(llrs, dtype=np.float64))
        if Lc.shape[1] != self.n:
            raise ValueError(f"LLR length must be {self.n}")
        B = Lc.shape[0]

        decided = (Lc < 0).astype(np.uint8)
        converged = self._syndrome_ok(decided)
        iterations = np.zeros(B, dtype=int)

        idx = np.flatnonzero(~converged)
        Q = Lc[idx][:, self.chk_vars]  # (A, m, row_w)
        Lc_act = Lc[idx]
        for it in range(1, max_iter + 1):
            if len(idx) == 0:
                break
            T = np.tanh(Q / 2.0)
            left = np.ones_like(T)
            right = np.ones_like(T)
            np.cumprod(T[:, :, :-1], axis=2, out=left[:, :, 1:])
            np.cumprod(T[:, :, :0:-1], axis=2, out=right[:, :, -2::-1])
            R = 2.0 * np.arctanh(np.clip(left * right, -_ATANH_CLIP, _ATANH_CLIP))
            Rf = R.reshape(len(idx), -1)
            posterior = Lc_act + Rf[:, self.var_edges].sum(axis=2)
            bits = (posterior < 0).astype(np.uint8)
            ok = self._syndrome_ok(bits)
            decided[idx] = bits
            iterations[idx] = it
            converged[idx[ok]] = True
            keep = ~ok
            idx = idx[keep]
            if len(idx):
                Q = (posterior[keep][:, self._edge_vars] - Rf[keep]) \
                    .reshape(len(idx), self.m, self.row_w)
                Lc_act = Lc_act[keep]

        msg = decided[:, :self.k]
        if single:
            return msg[0], bool(converged[0]), int(iterations[0])
        return msg, converged, iterations

    def _syndrome_ok(self, bits: np.ndarray) -> np.ndarray:
        syn = bits[:, self.chk_vars].sum(axis=2) % 2
        return (syn == 0).all(axis=1)


@lru_cache(maxsize=1)
def bundled_code() -> LdpcCode:
    ref = resources.files("punctext.assets").joinpath("ldpc_648_324.alist")
    with resources.as_file(ref) as path:
        return LdpcCode.from_alist(path)
