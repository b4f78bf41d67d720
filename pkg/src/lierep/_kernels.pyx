# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot loops. Same surface as ``_kernels_py``."""

from collections import deque

from libc.stdlib cimport malloc, free

from lierep._kernels_py import BudgetExceeded


cdef class Kernel:
    cdef public int rank
    cdef public object cartan, simple, roots, coroots, gram, gram_scale
    cdef int nroots
    cdef long *_cartan    # row-major cartan[i][j]
    cdef long *_simple    # simple root j at _simple[j*rank:]
    cdef long *_roots     # positive roots as weights
    cdef long *_coroots
    cdef long *_gram

    backend = "cython"

    def __cinit__(self, cartan, roots, coroots, gram, gram_scale):
        cdef int n = len(cartan)
        cdef int i, j, k
        self.rank = n
        self.nroots = len(roots)
        self._cartan = <long *> malloc(n * n * sizeof(long))
        self._simple = <long *> malloc(n * n * sizeof(long))
        self._gram = <long *> malloc(n * n * sizeof(long))
        self._roots = <long *> malloc(max(1, self.nroots * n) * sizeof(long))
        self._coroots = <long *> malloc(max(1, self.nroots * n) * sizeof(long))
        if not (self._cartan and self._simple and self._gram and self._roots and self._coroots):
            raise MemoryError()
        for i in range(n):
            for j in range(n):
                self._cartan[i * n + j] = cartan[i][j]
                self._simple[j * n + i] = cartan[i][j]
                self._gram[i * n + j] = gram[i][j]
        for k in range(self.nroots):
            for j in range(n):
                self._roots[k * n + j] = roots[k][j]
                self._coroots[k * n + j] = coroots[k][j]

    def __init__(self, cartan, roots, coroots, gram, gram_scale):
        self.cartan = tuple(tuple(row) for row in cartan)
        self.simple = tuple(
            tuple(self.cartan[i][j] for i in range(self.rank)) for j in range(self.rank)
        )
        self.roots = tuple(tuple(r) for r in roots)
        self.coroots = tuple(tuple(c) for c in coroots)
        self.gram = tuple(tuple(row) for row in gram)
        self.gram_scale = gram_scale

    def __dealloc__(self):
        free(self._cartan)
        free(self._simple)
        free(self._gram)
        free(self._roots)
        free(self._coroots)

    cdef int _to_dominant(self, long *v) noexcept:
        cdef int n = self.rank
        cdef int i = 0, j
        cdef int sign = 1
        cdef long c
        cdef long *a
        while i < n:
            c = v[i]
            if c < 0:
                a = self._simple + i * n
                for j in range(n):
                    v[j] -= c * a[j]
                sign = -sign
                i = 0
            else:
                i += 1
        return sign

    cdef long _pair(self, long *a, long *b) noexcept:
        cdef int n = self.rank
        cdef int i, j
        cdef long s = 0
        for i in range(n):
            if a[i]:
                for j in range(n):
                    s += a[i] * self._gram[i * n + j] * b[j]
        return s

    def reflect_to_dominant(self, v):
        cdef int n = self.rank
        cdef long buf[64]
        cdef int j, sign
        if n > 64:
            raise ValueError("rank above 64 is not supported by the compiled kernel")
        for j in range(n):
            buf[j] = v[j]
        sign = self._to_dominant(buf)
        return tuple([buf[j] for j in range(n)]), sign

    def orbit(self, w):
        cdef int n = self.rank
        cdef int i, j
        cdef long c
        cdef long buf[64]
        cdef long *a
        start, _ = self.reflect_to_dominant(w)
        seen = {start}
        out = [start]
        cdef Py_ssize_t head = 0
        while head < len(out):
            x = out[head]
            head += 1
            for i in range(n):
                c = x[i]
                if c > 0:
                    a = self._simple + i * n
                    for j in range(n):
                        buf[j] = <long> x[j] - c * a[j]
                    y = tuple([buf[j] for j in range(n)])
                    if y not in seen:
                        seen.add(y)
                        out.append(y)
        return out

    def klimyk(self, weights, shifted):
        cdef int n = self.rank
        cdef int j, sign, singular
        cdef long buf[64]
        acc = {}
        for mu, mult in weights:
            for nu in self.orbit(mu):
                for j in range(n):
                    buf[j] = <long> nu[j] + <long> shifted[j]
                sign = self._to_dominant(buf)
                singular = 0
                for j in range(n):
                    if buf[j] == 0:
                        singular = 1
                        break
                if singular:
                    continue
                key = tuple([buf[j] - 1 for j in range(n)])
                acc[key] = acc.get(key, 0) + sign * mult
        return {k: m for k, m in acc.items() if m != 0}

    def weyl_dimension(self, lam):
        cdef int n = self.rank
        cdef int j, k
        cdef long s, t
        cdef long lr[64]
        cdef long *c
        for j in range(n):
            lr[j] = <long> lam[j] + 1
        num = 1
        den = 1
        for k in range(self.nroots):
            c = self._coroots + k * n
            s = 0
            t = 0
            for j in range(n):
                s += c[j] * lr[j]
                t += c[j]
            num *= s
            den *= t
        q, r = divmod(num, den)
        if r:
            raise ArithmeticError("Weyl dimension product is not integral")
        return q

    def dominant_weights(self, lam, heights, budget):
        cdef int n = self.rank
        cdef int j, k, ok
        cdef long buf[64]
        cdef long *a
        start = tuple(lam)
        depth = {start: 0}
        queue = deque([start])
        while queue:
            mu = queue.popleft()
            d = depth[mu]
            for k in range(self.nroots):
                a = self._roots + k * n
                ok = 1
                for j in range(n):
                    buf[j] = <long> mu[j] - a[j]
                    if buf[j] < 0:
                        ok = 0
                        break
                if not ok:
                    continue
                nu = tuple([buf[j] for j in range(n)])
                if nu in depth:
                    continue
                depth[nu] = d + heights[k]
                if len(depth) > budget:
                    raise BudgetExceeded(
                        f"more than {budget} dominant weights below {start}"
                    )
                queue.append(nu)
        return sorted(depth.items(), key=lambda kv: (kv[1], tuple(-c for c in kv[0])))

    def freudenthal(self, ordered):
        cdef int n = self.rank
        cdef int j, k
        cdef long mu_rho[64]
        cdef long nu[64]
        cdef long dom[64]
        cdef long top, gap, pnu
        cdef long *a
        lam = ordered[0]
        for j in range(n):
            mu_rho[j] = <long> lam[j] + 1
        top = self._pair(mu_rho, mu_rho)
        mult = {lam: 1}
        for mu in ordered[1:]:
            for j in range(n):
                mu_rho[j] = <long> mu[j] + 1
            gap = top - self._pair(mu_rho, mu_rho)
            total = 0
            for k in range(self.nroots):
                a = self._roots + k * n
                for j in range(n):
                    nu[j] = mu[j]
                while True:
                    for j in range(n):
                        nu[j] += a[j]
                        dom[j] = nu[j]
                    self._to_dominant(dom)
                    m = mult.get(tuple([dom[j] for j in range(n)]))
                    if m is None:
                        break
                    pnu = self._pair(nu, a)
                    total += m * pnu
            q, r = divmod(2 * total, gap)
            if r or q <= 0:
                raise ArithmeticError(f"Freudenthal recursion failed at {mu}")
            mult[mu] = q
        return mult

    def closure_order(self, limit):
        cdef int n = self.rank
        cdef int i, j, k
        cdef long a
        cdef long *out = <long *> malloc(n * n * sizeof(long))
        if not out:
            raise MemoryError()
        try:
            ident = tuple([1 if i == j else 0 for i in range(n) for j in range(n)])
            seen = {ident}
            queue = deque([ident])
            while queue:
                m = queue.popleft()
                for i in range(n):
                    for k in range(n * n):
                        out[k] = m[k]
                    for j in range(n):
                        a = self._cartan[j * n + i]
                        if a:
                            for k in range(n):
                                out[j * n + k] -= a * <long> m[i * n + k]
                    key = tuple([out[k] for k in range(n * n)])
                    if key not in seen:
                        seen.add(key)
                        if len(seen) > limit:
                            raise BudgetExceeded(f"reflection group larger than {limit}")
                        queue.append(key)
            return len(seen)
        finally:
            free(out)
