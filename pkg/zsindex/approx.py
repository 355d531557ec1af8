#!/usr/bin/env python
# -*- coding: utf-8 -*-

# approx - interval indicator, its fourier coefficients and the vaaler smoothing
# available under the ISC license, see LICENSE

import math

import numpy

# Below this |t| the cotangent form of J_hat is replaced by its power series
SERIES_CUTOFF = 1e-3
# Rows of the grid evaluation handled per numpy block
GRID_BLOCK = 512


# @brief period-1 indicator of [0, 1/2] with midpoint values on 1/2 Z
def chi(t):
    frac = t - math.floor(t)
    if frac == 0 or frac == 0.5:
        return 0.5
    return 1 if frac < 0.5 else 0


# @brief fourier coefficient of chi
def chi_hat(k):
    if k == 0:
        return complex(0.5, 0.0)
    if k % 2 == 0:
        return complex(0.0, 0.0)
    return complex(0.0, -1.0 / (math.pi * k))


def _pi_t_cot_series(x):
    # x cot x = 1 - x^2/3 - x^4/45 - 2x^6/945 - ...
    x2 = x * x
    return 1.0 - x2 / 3.0 - x2 * x2 / 45.0 - 2.0 * x2 * x2 * x2 / 945.0


# @brief fourier transform of vaaler's J = H'/2, supported on [-1, 1]
def J_hat(t):
    t = abs(float(t))
    if t >= 1.0:
        return 0.0
    if t == 0.0:
        return 1.0
    if t < SERIES_CUTOFF:
        return (1.0 - t) * _pi_t_cot_series(math.pi * t) + t
    return math.pi * t * (1.0 - t) / math.tan(math.pi * t) + t


def J_hat_array(t):
    t = numpy.abs(numpy.asarray(t, dtype=float))
    result = numpy.zeros_like(t)
    inside = t < 1.0
    small = inside & (t < SERIES_CUTOFF)
    large = inside & ~small
    ts = t[small]
    result[small] = (1.0 - ts) * _pi_t_cot_series(math.pi * ts) + ts
    tl = t[large]
    result[large] = math.pi * tl * (1.0 - tl) / numpy.tan(math.pi * tl) + tl
    return result


class FourierSmoother:
    # @brief bundle of evaluators for the degree-H trigonometric polynomial f approximating chi
    # @param H truncation parameter (positive integer)
    def __init__(self, H):
        H = int(H)
        if H < 1:
            raise ValueError("Smoothing parameter H must be positive, got {}".format(H))
        self.H = H
        self.odd = numpy.arange(1, H + 1, 2, dtype=numpy.int64)
        # f_hat(h) = -i * weight for odd h > 0, +i * weight for -h
        self.weights = J_hat_array(self.odd / float(H + 1)) / (math.pi * self.odd)

    def __repr__(self):
        return "FourierSmoother(H={})".format(self.H)

    def f_hat(self, h):
        if abs(h) > self.H:
            return complex(0.0, 0.0)
        return chi_hat(h) * J_hat(h / float(self.H + 1))

    # @brief signed odd indices and their (purely imaginary) coefficients as numpy arrays
    # @return (indices, imaginary parts) over all odd h with |h| <= H
    def odd_spectrum(self):
        indices = numpy.concatenate((-self.odd[::-1], self.odd))
        imag = numpy.concatenate((self.weights[::-1], -self.weights))
        return indices, imag

    def f_eval(self, x):
        scalar = numpy.ndim(x) == 0
        x = numpy.atleast_1d(numpy.asarray(x, dtype=float))
        # reduce to [-1/2, 1/2] so that f(x) and f(-x) see exactly opposite sines
        r = x - numpy.rint(x)
        values = numpy.empty(len(r))
        for start in range(0, len(r), GRID_BLOCK):
            block = r[start:start + GRID_BLOCK]
            terms = 2.0 * self.weights * numpy.sin(2.0 * math.pi * numpy.outer(block, self.odd))
            values[start:start + len(block)] = [0.5 + math.fsum(row) for row in terms]
        return float(values[0]) if scalar else values

    # @brief f at the rational points r/n, with exact integer argument reduction
    # @param n the modulus
    # @param residues integers r (reduced modulo n)
    def grid_values(self, n, residues):
        residues = numpy.asarray(residues, dtype=numpy.int64) % n
        sines = numpy.sin(2.0 * math.pi * numpy.arange(n) / n)
        odd = self.odd % n
        values = numpy.empty(len(residues))
        for start in range(0, len(residues), GRID_BLOCK):
            block = residues[start:start + GRID_BLOCK]
            terms = 2.0 * self.weights * sines[numpy.outer(block, odd) % n]
            values[start:start + len(block)] = [0.5 + math.fsum(row) for row in terms]
        return values

    def fejer_K_hat(self, h):
        return max(0.0, 1.0 - abs(h) / float(self.H + 1))

    # @brief uniform bound on |chi - f| using only |C_h| <= 1
    def approx_error_bound(self):
        total = math.fsum(self.fejer_K_hat(h) for h in range(-self.H, self.H + 1))
        return total / (self.H + 1)

    # @brief sum of |f_hat(h)| over 0 < |h| <= H
    def abs_coefficient_sum(self):
        return 2.0 * math.fsum(self.weights.tolist())
