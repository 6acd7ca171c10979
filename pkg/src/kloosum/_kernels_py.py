"""NumPy fallback for the hot inner loops.

Same signatures and summation discipline as the compiled kernels in
_kernels.pyx: Kahan compensation for the long accumulations, exact fsum
block totals elsewhere.  Selected automatically when the extension is not
built (see kloosum.kernels).
"""

from __future__ import annotations

from math import fsum

import numpy as np


def naive_sum(p, r, n, char_table, inv_table):
    """Unnormalized K sum over x_1..x_{r-1} free, x_r = n/(x_1...x_{r-1}).

    Vectorizes the innermost free variable; block sums are combined with
    fsum so the result is a precision anchor for the other evaluators.
    """
    p = int(p)
    n = int(n) % p
    if r == 1:
        return complex(char_table[n])
    xs = np.arange(1, p, dtype=np.int64)
    re_parts: list[float] = []
    im_parts: list[float] = []

    def add_block(base_prod: int, base_sum: int) -> None:
        prod = base_prod * xs % p
        x_last = n * inv_table[prod] % p
        t = (base_sum + xs + x_last) % p
        block = char_table[t].sum()
        re_parts.append(block.real)
        im_parts.append(block.imag)

    outer = r - 2  # number of odometer digits; innermost digit is vectorized
    if outer == 0:
        add_block(1, 0)
    else:
        digits = [1] * outer
        while True:
            prod = 1
            tot = 0
            for d in digits:
                prod = prod * d % p
                tot += d
            add_block(prod, tot)
            j = outer - 1
            while j >= 0:
                digits[j] += 1
                if digits[j] <= p - 1:
                    break
                digits[j] = 1
                j -= 1
            if j < 0:
                break
    return complex(fsum(re_parts), fsum(im_parts))


def convolution_pass(p, char_nz, values, inv_table):
    """One multiplicative convolution step: out[n] = sum_x e_p(x) T[n/x].

    Accumulates over x in ascending order with componentwise Kahan
    compensation, matching the compiled kernel's order.
    """
    p = int(p)
    ns = np.arange(1, p, dtype=np.int64)
    acc = np.zeros(p - 1, dtype=np.complex128)
    comp = np.zeros(p - 1, dtype=np.complex128)
    for x in range(1, p):
        idx = ns * int(inv_table[x]) % p
        term = char_nz[x - 1] * values[idx - 1]
        y = term - comp
        t = acc + y
        comp = (t - acc) - y
        acc = t
    return acc


def bilinear_sum(p, values, m_el, n_el, alpha, beta):
    """sum_m sum_n alpha_m beta_n K(m n mod p)."""
    p = int(p)
    re_parts: list[float] = []
    im_parts: list[float] = []
    for i in range(len(m_el)):
        idx = int(m_el[i]) * n_el % p
        inner = (values[idx - 1] * beta).sum()
        z = complex(alpha[i]) * inner
        re_parts.append(z.real)
        im_parts.append(z.imag)
    return complex(fsum(re_parts), fsum(im_parts))


def brute_pair_count(p, H, m_el):
    """Quadruple count of x*m == y*n (mod p), x,y in [1,H), m,n in the set.

    Realized as the pair count over the (x, m) product list; cost is the
    same O(H^2 M^2) as the literal four-deep loop.
    """
    p = int(p)
    prods = np.arange(1, H, dtype=np.int64)[:, None] * np.asarray(m_el)[None, :] % p
    flat = prods.ravel()
    return int((flat[:, None] == flat[None, :]).sum())


def block_terms(p, values, ell, B, eta):
    """Per-(u, s, t) values |sum_b eta_b K(s(u+b)) conj(K(t(u+b)))|^(2 ell).

    Returns a flat float64 array with (p-1)*(p-2) entries per u (diagonal
    s = t excluded); block positions b with u + b = 0 mod p are skipped.
    All complex arithmetic is spelled out on separate re/im arrays so the
    result is bit-identical to a scalar re-evaluation in any loop order.
    """
    p = int(p)
    ell = int(ell)
    L = p - 1
    xs = np.arange(1, p, dtype=np.int64)
    bs = np.arange(B, 2 * B + 1, dtype=np.int64)
    eta = np.asarray(eta, dtype=np.complex128)
    off_diag = ~np.eye(L, dtype=bool)
    out = np.empty(L * L * (L - 1), dtype=np.float64)
    pos = 0
    for u in range(1, p):
        w = (u + bs) % p
        acc_re = np.zeros((L, L))
        acc_im = np.zeros((L, L))
        for bi in range(len(bs)):
            if w[bi] == 0:
                continue
            kb = values[w[bi] * xs % p - 1]
            a, c = kb.real, kb.imag
            # K(s w) * conj(K(t w)) split into re/im outer products
            pr = np.outer(a, a) + np.outer(c, c)
            pi = np.outer(c, a) - np.outer(a, c)
            er, ei = eta[bi].real, eta[bi].imag
            acc_re += er * pr - ei * pi
            acc_im += er * pi + ei * pr
        abs2 = acc_re * acc_re + acc_im * acc_im
        powered = abs2.copy()
        for _ in range(ell - 1):
            powered *= abs2
        chunk = powered[off_diag]
        out[pos : pos + chunk.size] = chunk
        pos += chunk.size
    return out
