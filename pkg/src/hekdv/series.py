"""Truncated univariate power series over exact rationals, with Newton lifting."""

from fractions import Fraction

from .errors import SingularExpansionError


class PSeries:
    """Coefficients c[0..order] of a series truncated at the given order."""

    __slots__ = ("variable", "coeffs", "order")

    def __init__(self, variable, coeffs, order):
        coeffs = [Fraction(c) for c in coeffs]
        if len(coeffs) < order + 1:
            coeffs = coeffs + [Fraction(0)] * (order + 1 - len(coeffs))
        object.__setattr__(self, "variable", variable)
        object.__setattr__(self, "coeffs", tuple(coeffs[:order + 1]))
        object.__setattr__(self, "order", order)

    def __setattr__(self, *_):
        raise AttributeError("PSeries is immutable")

    @staticmethod
    def zero(variable, order):
        return PSeries(variable, [], order)

    @staticmethod
    def identity(variable, order):
        return PSeries(variable, [0, 1], order)

    def truncated(self, order):
        return PSeries(self.variable, list(self.coeffs), order)

    def __getitem__(self, k):
        return self.coeffs[k] if 0 <= k <= self.order else Fraction(0)

    @property
    def is_zero(self):
        return not any(self.coeffs)

    def valuation(self):
        """Index of the first nonzero coefficient; order+1 when zero."""
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return self.order + 1

    def _binop(self, other, op):
        if isinstance(other, (int, Fraction)):
            other = PSeries(self.variable, [other], self.order)
        n = min(self.order, other.order)
        return PSeries(self.variable,
                       [op(self[k], other[k]) for k in range(n + 1)], n)

    def __add__(self, other):
        return self._binop(other, lambda a, b: a + b)

    __radd__ = __add__

    def __sub__(self, other):
        return self._binop(other, lambda a, b: a - b)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return PSeries(self.variable, [-c for c in self.coeffs], self.order)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return PSeries(self.variable, [c * other for c in self.coeffs],
                           self.order)
        n = min(self.order, other.order)
        out = [Fraction(0)] * (n + 1)
        for i, a in enumerate(self.coeffs):
            if a and i <= n:
                for j, b in enumerate(other.coeffs):
                    if i + j > n:
                        break
                    if b:
                        out[i + j] += a * b
        return PSeries(self.variable, out, n)

    __rmul__ = __mul__

    def __pow__(self, n):
        result = PSeries(self.variable, [1], self.order)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def inverse(self):
        """Multiplicative inverse; requires a unit (nonzero constant term)."""
        if not self.coeffs[0]:
            raise SingularExpansionError(
                "series is not a unit (zero constant term)")
        inv0 = Fraction(1) / self.coeffs[0]
        out = [inv0] + [Fraction(0)] * self.order
        for k in range(1, self.order + 1):
            s = Fraction(0)
            for j in range(1, k + 1):
                s += self[j] * out[k - j]
            out[k] = -inv0 * s
        return PSeries(self.variable, out, self.order)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (Fraction(1) / Fraction(other))
        return self * other.inverse()

    def __eq__(self, other):
        if not isinstance(other, PSeries):
            return NotImplemented
        n = min(self.order, other.order)
        return all(self[k] == other[k] for k in range(n + 1))

    def __str__(self):
        var = self.variable
        parts = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            if k == 0:
                parts.append(str(c))
            elif k == 1:
                parts.append(f"{c}*{var}" if c != 1 else var)
            else:
                parts.append(f"{c}*{var}^{k}" if c != 1 else f"{var}^{k}")
        body = " + ".join(parts) if parts else "0"
        return f"{body} + O({var}^{self.order + 1})"

    __repr__ = __str__


def eval_at_series(p, assignments, order):
    """Evaluate an MPoly at PSeries values for each of its variables."""
    var = next(iter(assignments.values())).variable
    one = PSeries(var, [1], order)
    total = PSeries.zero(var, order)
    cache = {}
    for expo, c in p.terms.items():
        acc = one
        for v, e in zip(p.vars, expo):
            if e:
                key = (v, e)
                if key not in cache:
                    cache[key] = assignments[v] ** e
                acc = acc * cache[key]
        total = total + acc * c
    return total


def newton_solve(rel, order, seed, unknown="phi", parameter="t"):
    """Solve rel(unknown, parameter) = 0 for a series in the parameter.

    ``seed`` must satisfy the relation through its own truncation order and
    have a unit partial derivative there; Newton steps then at least double
    the number of correct coefficients per iteration.
    """
    if order < seed.order:
        raise ValueError("target order below the seed's order")
    t_series = PSeries.identity(parameter, order)
    drel = rel.derivative(unknown)
    cur = seed.truncated(order)
    residual = eval_at_series(rel, {unknown: cur, parameter: t_series}, order)
    # sanity on the seed before any step
    if residual.valuation() <= seed.order:
        raise SingularExpansionError(
            "seed does not satisfy the relation through its stated order")
    for _ in range(order.bit_length() + 3):
        if residual.is_zero:
            return cur
        dval = eval_at_series(drel, {unknown: cur, parameter: t_series}, order)
        if not dval.coeffs[0]:
            raise SingularExpansionError(
                "derivative is not a unit series; Newton step undefined")
        cur = cur - residual * dval.inverse()
        residual = eval_at_series(rel, {unknown: cur, parameter: t_series}, order)
    if residual.is_zero:
        return cur
    raise SingularExpansionError("Newton iteration failed to converge")
