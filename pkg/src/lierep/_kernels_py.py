"""Pure-Python hot loops. Mirrors ``_kernels.pyx`` function for function."""

from collections import deque


class BudgetExceeded(RuntimeError):
    pass


class Kernel:
    """Integer kernels bound to one root system.

    ``cartan[i][j]`` is <alpha_i^vee, alpha_j>, so the simple root alpha_j in
    fundamental-weight coordinates is column j. ``roots`` are the positive
    roots in fundamental-weight coordinates, ``coroots`` their coroots in the
    simple-coroot basis, and ``gram`` the weight pairing scaled by
    ``gram_scale`` so that every entry is an integer.
    """

    backend = "python"

    def __init__(self, cartan, roots, coroots, gram, gram_scale):
        self.rank = len(cartan)
        self.cartan = tuple(tuple(row) for row in cartan)
        # columns of the Cartan matrix: simple roots as weights
        self.simple = tuple(
            tuple(self.cartan[i][j] for i in range(self.rank)) for j in range(self.rank)
        )
        self.roots = tuple(tuple(r) for r in roots)
        self.coroots = tuple(tuple(c) for c in coroots)
        self.gram = tuple(tuple(row) for row in gram)
        self.gram_scale = gram_scale

    def reflect_to_dominant(self, v):
        v = list(v)
        n = self.rank
        simple = self.simple
        sign = 1
        i = 0
        while i < n:
            c = v[i]
            if c < 0:
                a = simple[i]
                for j in range(n):
                    v[j] -= c * a[j]
                sign = -sign
                i = 0
            else:
                i += 1
        return tuple(v), sign

    def orbit(self, w):
        start, _ = self.reflect_to_dominant(w)
        n = self.rank
        simple = self.simple
        seen = {start}
        out = [start]
        queue = deque(out)
        while queue:
            x = queue.popleft()
            for i in range(n):
                c = x[i]
                if c > 0:
                    a = simple[i]
                    y = tuple(x[j] - c * a[j] for j in range(n))
                    if y not in seen:
                        seen.add(y)
                        out.append(y)
                        queue.append(y)
        return out

    def klimyk(self, weights, shifted):
        """Signed dominant-chamber accumulation for every orbit point of ``weights``.

        ``weights`` is a list of (dominant weight, multiplicity); ``shifted`` is the
        other highest weight plus rho. Returns {highest weight: signed count}.
        """
        n = self.rank
        acc = {}
        for mu, mult in weights:
            for nu in self.orbit(mu):
                v, sign = self.reflect_to_dominant([nu[j] + shifted[j] for j in range(n)])
                if 0 in v:
                    continue
                key = tuple(c - 1 for c in v)
                acc[key] = acc.get(key, 0) + sign * mult
        return {k: m for k, m in acc.items() if m != 0}

    def weyl_dimension(self, lam):
        num = 1
        den = 1
        for c in self.coroots:
            s = 0
            t = 0
            for j in range(self.rank):
                s += c[j] * (lam[j] + 1)
                t += c[j]
            num *= s
            den *= t
        q, r = divmod(num, den)
        if r:
            raise ArithmeticError("Weyl dimension product is not integral")
        return q

    def dominant_weights(self, lam, heights, budget):
        """Dominant weights below ``lam`` with their depth in simple-root heights.

        ``heights[k]`` is the height of positive root k. The result is sorted by
        depth, so every weight precedes those strictly below it.
        """
        n = self.rank
        start = tuple(lam)
        depth = {start: 0}
        queue = deque([start])
        while queue:
            mu = queue.popleft()
            d = depth[mu]
            for k, a in enumerate(self.roots):
                nu = tuple(mu[j] - a[j] for j in range(n))
                if min(nu) < 0 or nu in depth:
                    continue
                depth[nu] = d + heights[k]
                if len(depth) > budget:
                    raise BudgetExceeded(
                        f"more than {budget} dominant weights below {start}"
                    )
                queue.append(nu)
        return sorted(depth.items(), key=lambda kv: (kv[1], tuple(-c for c in kv[0])))

    def _pair(self, a, b):
        n = self.rank
        g = self.gram
        s = 0
        for i in range(n):
            ai = a[i]
            if ai:
                row = g[i]
                for j in range(n):
                    s += ai * row[j] * b[j]
        return s

    def freudenthal(self, ordered):
        """Multiplicities of the dominant weights in ``ordered`` (highest first)."""
        n = self.rank
        lam = ordered[0]
        lam_rho = tuple(c + 1 for c in lam)
        top = self._pair(lam_rho, lam_rho)
        mult = {lam: 1}
        for mu in ordered[1:]:
            mu_rho = tuple(c + 1 for c in mu)
            gap = top - self._pair(mu_rho, mu_rho)
            total = 0
            for a in self.roots:
                nu = mu
                while True:
                    nu = tuple(nu[j] + a[j] for j in range(n))
                    dom, _ = self.reflect_to_dominant(nu)
                    m = mult.get(dom)
                    if m is None:
                        break
                    total += m * self._pair(nu, a)
            q, r = divmod(2 * total, gap)
            if r or q <= 0:
                raise ArithmeticError(f"Freudenthal recursion failed at {mu}")
            mult[mu] = q
        return mult

    def closure_order(self, limit):
        """Order of the group generated by simple reflections, as matrices."""
        n = self.rank
        cartan = self.cartan
        ident = tuple(1 if i == j else 0 for i in range(n) for j in range(n))
        seen = {ident}
        queue = deque([ident])
        while queue:
            m = queue.popleft()
            for i in range(n):
                row_i = m[i * n:(i + 1) * n]
                out = list(m)
                for j in range(n):
                    a = cartan[j][i]
                    if a:
                        base = j * n
                        for k in range(n):
                            out[base + k] -= a * row_i[k]
                key = tuple(out)
                if key not in seen:
                    seen.add(key)
                    if len(seen) > limit:
                        raise BudgetExceeded(f"reflection group larger than {limit}")
                    queue.append(key)
        return len(seen)
