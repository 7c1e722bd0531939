"""Numba-jitted kernels, signature-compatible with `reference.py`.

The convolution loops run channels-last internally so the contraction
covers contiguous memory (the wrappers transpose at the boundary).
Loops parallelize only over independent outputs: each prange iteration
owns a disjoint slice and accumulates serially, so results are
bit-identical regardless of thread count. fastmath is enabled for the
dot-product reductions; cross-backend agreement with the BLAS path is
within fp reassociation tolerance, not bitwise.
"""

from __future__ import annotations

import numpy as np
from numba import njit, prange

name = "numba"


def _pad_cl(x: np.ndarray, ph: int, pw: int) -> np.ndarray:
    """NCHW -> zero-padded channels-last [N, Hp, Wp, C]."""
    n, c, h, w = x.shape
    xp = np.zeros((n, h + 2 * ph, w + 2 * pw, c), dtype=x.dtype)
    xp[:, ph : ph + h, pw : pw + w, :] = x.transpose(0, 2, 3, 1)
    return xp


@njit(parallel=True, cache=True, fastmath=True)
def _conv2d_fwd(xp, kc, sh, sw, out):
    n, co, ho, wo = out.shape
    kh, kw, ci = kc.shape[1], kc.shape[2], kc.shape[3]
    for p in prange(n * ho):
        b = p // ho
        oh = p % ho
        for o in range(co):
            for ow in range(wo):
                acc = out[b, o, oh, ow]  # zero-initialized, fixes dtype
                base = ow * sw
                for i in range(kh):
                    xrow = xp[b, oh * sh + i]
                    krow = kc[o, i]
                    for j in range(kw):
                        for c in range(ci):
                            acc += xrow[base + j, c] * krow[j, c]
                out[b, o, oh, ow] = acc
    return out


def conv2d_forward(x, k, ph, pw, sh, sw):
    xp = _pad_cl(x, ph, pw)
    kc = np.ascontiguousarray(k.transpose(0, 2, 3, 1))
    n = x.shape[0]
    co, kh, kw = k.shape[0], k.shape[2], k.shape[3]
    ho = (xp.shape[1] - kh) // sh + 1
    wo = (xp.shape[2] - kw) // sw + 1
    out = np.zeros((n, co, ho, wo), dtype=x.dtype)
    return _conv2d_fwd(xp, kc, sh, sw, out)


@njit(parallel=True, cache=True, fastmath=True)
def _conv2d_bwd_k(xp, dy, sh, sw, dkc):
    co, kh, kw, ci = dkc.shape
    n, _, ho, wo = dy.shape
    for o in prange(co):
        for i in range(kh):
            dk_slab = dkc[o, i]  # [kw, ci], owned by this o
            for b in range(n):
                for oh in range(ho):
                    xrow = xp[b, oh * sh + i]
                    dyrow = dy[b, o, oh]
                    for ow in range(wo):
                        g = dyrow[ow]
                        base = ow * sw
                        for j in range(kw):
                            for c in range(ci):
                                dk_slab[j, c] += g * xrow[base + j, c]
    return dkc


def conv2d_backward_kernel(dy, x, kh, kw, ph, pw, sh, sw):
    xp = _pad_cl(x, ph, pw)
    dkc = np.zeros((dy.shape[1], kh, kw, x.shape[1]), dtype=dy.dtype)
    _conv2d_bwd_k(xp, np.ascontiguousarray(dy), sh, sw, dkc)
    return np.ascontiguousarray(dkc.transpose(0, 3, 1, 2))


@njit(parallel=True, cache=True, fastmath=True)
def _conv2d_bwd_x(dy, kc, sh, sw, dxp):
    n, co, ho, wo = dy.shape
    kh, kw, ci = kc.shape[1], kc.shape[2], kc.shape[3]
    for b in prange(n):
        for o in range(co):
            for oh in range(ho):
                dyrow = dy[b, o, oh]
                for ow in range(wo):
                    g = dyrow[ow]
                    base = ow * sw
                    for i in range(kh):
                        xrow = dxp[b, oh * sh + i]
                        krow = kc[o, i]
                        for j in range(kw):
                            for c in range(ci):
                                xrow[base + j, c] += g * krow[j, c]
    return dxp


def conv2d_backward_input(dy, k, h, w, ph, pw, sh, sw):
    n = dy.shape[0]
    ci = k.shape[1]
    kc = np.ascontiguousarray(k.transpose(0, 2, 3, 1))
    dxp = np.zeros((n, h + 2 * ph, w + 2 * pw, ci), dtype=dy.dtype)
    _conv2d_bwd_x(np.ascontiguousarray(dy), kc, sh, sw, dxp)
    dx_cl = dxp[:, ph : ph + h, pw : pw + w, :]
    return np.ascontiguousarray(dx_cl.transpose(0, 3, 1, 2))


@njit(parallel=True, cache=True)
def _maxpool_fwd(x, wh, ww, sh, sw, y, arg):
    n, c, ho, wo = y.shape
    w_in = x.shape[3]
    for p in prange(n * c):
        b = p // c
        ch = p % c
        for oh in range(ho):
            for ow in range(wo):
                best_h = oh * sh
                best_w = ow * sw
                best = x[b, ch, best_h, best_w]
                for i in range(wh):
                    for j in range(ww):
                        v = x[b, ch, oh * sh + i, ow * sw + j]
                        if v > best:  # strict: first index wins ties
                            best = v
                            best_h = oh * sh + i
                            best_w = ow * sw + j
                y[b, ch, oh, ow] = best
                arg[b, ch, oh, ow] = best_h * w_in + best_w
    return y, arg


def maxpool2d_forward(x, wh, ww, sh, sw):
    n, c, h, w = x.shape
    ho = (h - wh) // sh + 1
    wo = (w - ww) // sw + 1
    y = np.zeros((n, c, ho, wo), dtype=x.dtype)
    arg = np.zeros((n, c, ho, wo), dtype=np.int64)
    return _maxpool_fwd(np.ascontiguousarray(x), wh, ww, sh, sw, y, arg)


@njit(parallel=True, cache=True)
def _maxpool_bwd(dy, arg, dx_flat):
    n, c, ho, wo = dy.shape
    for p in prange(n * c):
        b = p // c
        ch = p % c
        for oh in range(ho):
            for ow in range(wo):
                dx_flat[b, ch, arg[b, ch, oh, ow]] += dy[b, ch, oh, ow]
    return dx_flat


def maxpool2d_backward(dy, arg, h, w):
    n, c = dy.shape[0], dy.shape[1]
    dx = np.zeros((n, c, h * w), dtype=dy.dtype)
    _maxpool_bwd(np.ascontiguousarray(dy), arg, dx)
    return dx.reshape(n, c, h, w)


@njit(parallel=True, cache=True)
def _avgpool_fwd(x, wh, ww, sh, sw, y):
    n, c, ho, wo = y.shape
    inv = 1.0 / (wh * ww)
    for p in prange(n * c):
        b = p // c
        ch = p % c
        for oh in range(ho):
            for ow in range(wo):
                acc = y[b, ch, oh, ow]
                for i in range(wh):
                    for j in range(ww):
                        acc += x[b, ch, oh * sh + i, ow * sw + j]
                y[b, ch, oh, ow] = acc * inv
    return y


def avgpool2d_forward(x, wh, ww, sh, sw):
    n, c, h, w = x.shape
    ho = (h - wh) // sh + 1
    wo = (w - ww) // sw + 1
    y = np.zeros((n, c, ho, wo), dtype=x.dtype)
    return _avgpool_fwd(np.ascontiguousarray(x), wh, ww, sh, sw, y)


@njit(parallel=True, cache=True)
def _avgpool_bwd(dy, wh, ww, sh, sw, dx):
    n, c, ho, wo = dy.shape
    inv = 1.0 / (wh * ww)
    for p in prange(n * c):
        b = p // c
        ch = p % c
        for oh in range(ho):
            for ow in range(wo):
                g = dy[b, ch, oh, ow] * inv
                for i in range(wh):
                    for j in range(ww):
                        dx[b, ch, oh * sh + i, ow * sw + j] += g
    return dx


def avgpool2d_backward(dy, h, w, wh, ww, sh, sw):
    n, c = dy.shape[0], dy.shape[1]
    dx = np.zeros((n, c, h, w), dtype=dy.dtype)
    return _avgpool_bwd(np.ascontiguousarray(dy), wh, ww, sh, sw, dx)
