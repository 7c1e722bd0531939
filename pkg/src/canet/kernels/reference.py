"""Pure-numpy kernels (im2col convolution, windowed pooling).

This is the fallback backend: vectorized numpy that routes the heavy
contractions through BLAS. The numba backend in `jit.py` implements the
same signatures with explicit loops; `kernels/__init__.py` picks one at
import time via the CANET_KERNELS env var.

All functions take/return plain ndarrays in N x C x H x W layout and are
deterministic for fixed inputs.
"""

from __future__ import annotations

import numpy as np

name = "numpy"


def _pad_input(x: np.ndarray, ph: int, pw: int) -> np.ndarray:
    if ph == 0 and pw == 0:
        return x
    return np.pad(x, ((0, 0), (0, 0), (ph, ph), (pw, pw)))


def _windows(xp: np.ndarray, kh: int, kw: int, sh: int, sw: int) -> np.ndarray:
    """Strided view of all kernel-sized patches: [N, C, Ho, Wo, kh, kw]."""
    w = np.lib.stride_tricks.sliding_window_view(xp, (kh, kw), axis=(2, 3))
    return w[:, :, ::sh, ::sw]


def conv2d_forward(x, k, ph, pw, sh, sw):
    """Cross-correlation of x[N,Ci,H,W] with k[Co,Ci,kh,kw] -> [N,Co,Ho,Wo]."""
    xp = _pad_input(x, ph, pw)
    win = _windows(xp, k.shape[2], k.shape[3], sh, sw)
    # contract over (Ci, kh, kw); tensordot lowers to a single GEMM
    y = np.tensordot(win, k, axes=([1, 4, 5], [1, 2, 3]))
    return np.ascontiguousarray(y.transpose(0, 3, 1, 2))


def conv2d_backward_kernel(dy, x, kh, kw, ph, pw, sh, sw):
    """Gradient w.r.t. the kernel: [Co, Ci, kh, kw]."""
    xp = _pad_input(x, ph, pw)
    win = _windows(xp, kh, kw, sh, sw)
    return np.tensordot(dy, win, axes=([0, 2, 3], [0, 2, 3]))


def conv2d_backward_input(dy, k, h, w, ph, pw, sh, sw):
    """Gradient w.r.t. the input: [N, Ci, H, W]."""
    n = dy.shape[0]
    ci, kh, kw = k.shape[1], k.shape[2], k.shape[3]
    ho, wo = dy.shape[2], dy.shape[3]
    # per-patch gradient columns: [N, Ho, Wo, Ci, kh, kw]
    cols = np.tensordot(dy, k, axes=([1], [0]))
    cols = cols.transpose(0, 3, 4, 5, 1, 2)  # [N, Ci, kh, kw, Ho, Wo]
    dxp = np.zeros((n, ci, h + 2 * ph, w + 2 * pw), dtype=dy.dtype)
    for i in range(kh):
        for j in range(kw):
            dxp[:, :, i : i + sh * ho : sh, j : j + sw * wo : sw] += cols[:, :, i, j]
    if ph or pw:
        return np.ascontiguousarray(dxp[:, :, ph : ph + h, pw : pw + w])
    return dxp


def maxpool2d_forward(x, wh, ww, sh, sw):
    """Windowed spatial max. Returns (y, arg) where arg holds the flat
    in-plane index (ih * W + iw) of the winning element; ties resolve to
    the first element in row-major window scan order."""
    win = _windows(x, wh, ww, sh, sw)
    n, c, ho, wo = win.shape[:4]
    flat = win.reshape(n, c, ho, wo, wh * ww)
    arg_local = flat.argmax(axis=-1)
    y = np.take_along_axis(flat, arg_local[..., None], axis=-1)[..., 0]
    oh = np.arange(ho)[:, None] * sh
    ow = np.arange(wo)[None, :] * sw
    ih = oh + arg_local // ww
    iw = ow + arg_local % ww
    arg = (ih * x.shape[3] + iw).astype(np.int64)
    return np.ascontiguousarray(y), arg


def maxpool2d_backward(dy, arg, h, w):
    n, c = dy.shape[0], dy.shape[1]
    dx = np.zeros((n, c, h * w), dtype=dy.dtype)
    ni, ci = np.indices(dy.shape[:2])
    ni = ni[..., None, None]
    ci = ci[..., None, None]
    np.add.at(dx, (ni, ci, arg), dy)
    return dx.reshape(n, c, h, w)


def avgpool2d_forward(x, wh, ww, sh, sw):
    win = _windows(x, wh, ww, sh, sw)
    return np.ascontiguousarray(win.mean(axis=(4, 5)))


def avgpool2d_backward(dy, h, w, wh, ww, sh, sw):
    n, c, ho, wo = dy.shape
    share = (dy / (wh * ww)).astype(dy.dtype)
    dx = np.zeros((n, c, h, w), dtype=dy.dtype)
    for i in range(wh):
        for j in range(ww):
            dx[:, :, i : i + sh * ho : sh, j : j + sw * wo : sw] += share
    return dx
