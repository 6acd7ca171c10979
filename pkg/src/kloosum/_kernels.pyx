# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled inner loops.

Mirrors kloosum._kernels_py; see that module for the contracts.  Compiled
with -ffp-contract=off so the floating-point arithmetic matches the NumPy
fallback operation for operation.
"""

from libc.stdint cimport int64_t

import numpy as np


def naive_sum(int64_t p, int64_t r, int64_t n, const double complex[::1] char_table,
              const int64_t[::1] inv_table):
    cdef double sre = 0.0, sim = 0.0, cre = 0.0, cim = 0.0
    cdef double yre, tre, yim, tim
    cdef int64_t base_prod, base_sum, x, prod, x_last, t, j, i, outer
    cdef double complex w
    n = n % p
    if r == 1:
        return complex(char_table[n])
    outer = r - 2  # odometer digits; the innermost free variable is the x loop
    digits_arr = np.ones(max(outer, 1), dtype=np.int64)
    prefix_prod = np.ones(max(outer, 1) + 1, dtype=np.int64)
    prefix_sum = np.zeros(max(outer, 1) + 1, dtype=np.int64)
    cdef int64_t[::1] d = digits_arr
    cdef int64_t[::1] pp = prefix_prod
    cdef int64_t[::1] ps = prefix_sum
    for i in range(outer):
        pp[i + 1] = (pp[i] * d[i]) % p
        ps[i + 1] = ps[i] + d[i]
    while True:
        base_prod = pp[outer]
        base_sum = ps[outer]
        for x in range(1, p):
            prod = (base_prod * x) % p
            x_last = (n * inv_table[prod]) % p
            t = (base_sum + x + x_last) % p
            w = char_table[t]
            yre = w.real - cre
            tre = sre + yre
            cre = (tre - sre) - yre
            sre = tre
            yim = w.imag - cim
            tim = sim + yim
            cim = (tim - sim) - yim
            sim = tim
        if outer == 0:
            break
        j = outer - 1
        while j >= 0:
            d[j] += 1
            if d[j] <= p - 1:
                break
            d[j] = 1
            j -= 1
        if j < 0:
            break
        for i in range(j, outer):
            pp[i + 1] = (pp[i] * d[i]) % p
            ps[i + 1] = ps[i] + d[i]
    return complex(sre, sim)


def convolution_pass(int64_t p, const double complex[::1] char_nz,
                     const double complex[::1] values, const int64_t[::1] inv_table):
    out = np.empty(p - 1, dtype=np.complex128)
    cdef double complex[::1] ov = out
    cdef int64_t n, x, idx
    cdef double sre, sim, cre, cim, yre, tre, yim, tim
    cdef double complex term
    for n in range(1, p):
        sre = sim = cre = cim = 0.0
        for x in range(1, p):
            idx = (n * inv_table[x]) % p
            term = char_nz[x - 1] * values[idx - 1]
            yre = term.real - cre
            tre = sre + yre
            cre = (tre - sre) - yre
            sre = tre
            yim = term.imag - cim
            tim = sim + yim
            cim = (tim - sim) - yim
            sim = tim
        ov[n - 1] = sre + 1j * sim
    return out


def bilinear_sum(int64_t p, const double complex[::1] values, const int64_t[::1] m_el,
                 const int64_t[::1] n_el, const double complex[::1] alpha,
                 const double complex[::1] beta):
    cdef double sre = 0.0, sim = 0.0, cre = 0.0, cim = 0.0
    cdef double ire, iim, icr, ici, yre, tre, yim, tim
    cdef int64_t i, j, m, idx
    cdef double complex kv, z
    for i in range(m_el.shape[0]):
        m = m_el[i]
        ire = iim = icr = ici = 0.0
        for j in range(n_el.shape[0]):
            idx = (m * n_el[j]) % p
            kv = values[idx - 1] * beta[j]
            yre = kv.real - icr
            tre = ire + yre
            icr = (tre - ire) - yre
            ire = tre
            yim = kv.imag - ici
            tim = iim + yim
            ici = (tim - iim) - yim
            iim = tim
        z = alpha[i] * (ire + 1j * iim)
        yre = z.real - cre
        tre = sre + yre
        cre = (tre - sre) - yre
        sre = tre
        yim = z.imag - cim
        tim = sim + yim
        cim = (tim - sim) - yim
        sim = tim
    return complex(sre, sim)


def brute_pair_count(int64_t p, int64_t H, const int64_t[::1] m_el):
    cdef int64_t M = m_el.shape[0]
    cdef int64_t K = (H - 1) * M
    prods = np.empty(K, dtype=np.int64)
    cdef int64_t[::1] pv = prods
    cdef int64_t x, i, j, k, cnt
    k = 0
    for x in range(1, H):
        for i in range(M):
            pv[k] = (x * m_el[i]) % p
            k += 1
    cnt = 0
    for i in range(K):
        for j in range(K):
            if pv[i] == pv[j]:
                cnt += 1
    return int(cnt)


def block_terms(int64_t p, const double complex[::1] values, int64_t ell,
                int64_t B, const double complex[::1] eta):
    cdef int64_t L = p - 1
    cdef int64_t nb = B + 1
    out = np.empty(L * L * (L - 1), dtype=np.float64)
    cdef double[::1] ov = out
    karr_re = np.empty((nb, L), dtype=np.float64)
    karr_im = np.empty((nb, L), dtype=np.float64)
    cdef double[:, ::1] kre = karr_re
    cdef double[:, ::1] kim = karr_im
    wbuf = np.empty(nb, dtype=np.int64)
    cdef int64_t[::1] w = wbuf
    cdef int64_t u, bi, x, s, t, idx, pos, q
    cdef double are, aim, pr, pi, er, ei, k1re, k1im, k2re, k2im, abs2, tv
    cdef double complex kv
    pos = 0
    for u in range(1, p):
        for bi in range(nb):
            w[bi] = (u + B + bi) % p
            if w[bi] == 0:
                continue
            for x in range(1, p):
                idx = (w[bi] * x) % p
                kv = values[idx - 1]
                kre[bi, x - 1] = kv.real
                kim[bi, x - 1] = kv.imag
        for s in range(1, p):
            for t in range(1, p):
                if t == s:
                    continue
                are = 0.0
                aim = 0.0
                for bi in range(nb):
                    if w[bi] == 0:
                        continue
                    k1re = kre[bi, s - 1]
                    k1im = kim[bi, s - 1]
                    k2re = kre[bi, t - 1]
                    k2im = kim[bi, t - 1]
                    pr = k1re * k2re + k1im * k2im
                    pi = k1im * k2re - k1re * k2im
                    er = eta[bi].real
                    ei = eta[bi].imag
                    are += er * pr - ei * pi
                    aim += er * pi + ei * pr
                abs2 = are * are + aim * aim
                tv = abs2
                for q in range(ell - 1):
                    tv *= abs2
                ov[pos] = tv
                pos += 1
    return out
