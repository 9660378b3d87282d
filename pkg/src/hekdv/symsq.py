"""Function field of the square of a hyperelliptic curve, in Y-reduced form.

Every element is stored as num/den with num of degree <= 1 in each of Y1,
Y2 (the rewrites Y_i^2 -> Q(X_i) are confluent, so this normal form is
canonical) and den free of Y variables.  Denominators arising anywhere in
the pipeline are products of X1, X2 and (X1 - X2); normalization cancels
exactly those factors, which keeps expression swell linear.

The module also provides the two coordinate bridges with the symmetric
function generators: substitution of

    a = (X1+X2)/2,  b = (X1-X2)^2/4,  c = (Y1-Y2)/(X1-X2),  d = (Y1+Y2)/2

and its inverse through the auxiliary variable s with X1 = a+s, X2 = a-s,
Y1 = d+s*c, Y2 = d-s*c, s^2 = b.
"""

from fractions import Fraction

from .curve import CurveParams, y_symbols
from .errors import NotSymmetricError, ZeroDenominatorError
from .poly import MPoly, eval_poly, merge_vars

_HALF = Fraction(1, 2)
_QUARTER = Fraction(1, 4)


class SymSqField:
    """Context holding the curve relations for one symmetric square."""

    def __init__(self, params: CurveParams):
        self.params = params
        self.Q1 = params.Q("X1")
        self.Q2 = params.Q("X2")
        self.dQ1 = self.Q1.derivative("X1")
        self.dQ2 = self.Q2.derivative("X2")
        self._x1 = MPoly.var("X1")
        self._x2 = MPoly.var("X2")
        self._x1mx2 = self._x1 - self._x2

    # -- reduction ---------------------------------------------------------

    def reduce(self, p):
        """Confluent Y-reduction: rewrite Y_i^k (k >= 2) via Y_i^2 -> Q(X_i)."""
        for yvar, Q in (("Y1", self.Q1), ("Y2", self.Q2)):
            while p.degree_in(yvar) >= 2:
                i = p.vars.index(yvar)
                low = {}
                high = {}
                for expo, c in p.terms.items():
                    e = expo[i]
                    if e >= 2:
                        high[expo[:i] + (e - 2,) + expo[i + 1:]] = c
                    else:
                        low[expo] = c
                p = MPoly(p.vars, low) + MPoly(p.vars, high) * Q
        return p

    # -- element construction ----------------------------------------------

    def elem(self, num, den=1):
        return SymSqElem(self, num, den)

    def zero(self):
        return self.elem(0)

    def one(self):
        return self.elem(1)

    def gens(self):
        """The coordinate functions X1, Y1, X2, Y2 as field elements."""
        return {n: self.elem(MPoly.var(n)) for n in ("X1", "Y1", "X2", "Y2")}

    def abcd(self):
        """Pullbacks of the four symmetric generators."""
        x1, y1v, x2, y2v = (MPoly.var(n) for n in ("X1", "Y1", "X2", "Y2"))
        return {
            "a": self.elem((x1 + x2) * _HALF),
            "b": self.elem((x1 - x2) ** 2 * _QUARTER),
            "c": self.elem(y1v - y2v, x1 - x2),
            "d": self.elem((y1v + y2v) * _HALF),
        }

    def y_elems(self):
        """Curve parameters as field elements (symbols or constants)."""
        return {n: self.elem(self.params.coefficient(n))
                for n in y_symbols(self.params.genus)}

    def weights(self):
        from .poly import standard_weights
        return standard_weights(self.params.genus)


def _strip_known_factors(num, den):
    """Cancel common powers of X1, X2 and (X1 - X2); cheap and exact."""
    for name in ("X1", "X2"):
        kd = den.min_degree_in(name)
        if kd:
            kn = num.min_degree_in(name)
            k = min(kd, kn)
            if k:
                mono = MPoly.var(name, k)
                num = num.exact_div(mono)
                den = den.exact_div(mono)
    while den.degree_in("X1") or den.degree_in("X2"):
        dq = den.divide_out_linear("X1", "X2")
        if dq is None:
            break
        nq = num.divide_out_linear("X1", "X2")
        if nq is None:
            break
        num, den = nq, dq
    return num, den


class SymSqElem:
    """One element of the field, normalized as described in the module doc."""

    __slots__ = ("field", "num", "den")

    def __init__(self, field, num, den=1):
        if isinstance(num, SymSqElem):
            if num.field is not field:
                raise ValueError("element belongs to a different square")
            num, den0 = num.num, num.den
            den = den0 * _lift_poly(den)
        num = _lift_poly(num)
        den = _lift_poly(den)
        if den.is_zero:
            raise ZeroDenominatorError("symmetric-square element with zero denominator")
        num = field.reduce(num)
        den = field.reduce(den)
        # clear Y from the denominator by conjugate multiplication
        for yvar, Q in (("Y1", field.Q1), ("Y2", field.Q2)):
            if den.degree_in(yvar):
                i = den.vars.index(yvar)
                even = {e: c for e, c in den.terms.items() if e[i] % 2 == 0}
                odd = {e[:i] + (e[i] - 1,) + e[i + 1:]: c
                       for e, c in den.terms.items() if e[i] % 2 == 1}
                p = MPoly(den.vars, even)
                qpart = MPoly(den.vars, odd)
                conj = p - MPoly.var(yvar) * qpart
                num = field.reduce(num * conj)
                den = field.reduce(den * conj)
        if num.is_zero:
            num, den = MPoly.zero(), MPoly.const(1)
        else:
            num, den = _strip_known_factors(num, den)
            dc = den.as_constant()
            if dc is not None:
                num = num * (Fraction(1) / dc)
                den = MPoly.const(1)
            else:
                scale = den.content()
                if den.leading()[1] < 0:
                    scale = -scale
                num = num * (Fraction(1) / scale)
                den = den * (Fraction(1) / scale)
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, *_):
        raise AttributeError("SymSqElem is immutable")

    # -- predicates ---------------------------------------------------------

    @property
    def is_zero(self):
        return self.num.is_zero

    def __bool__(self):
        return not self.num.is_zero

    # -- arithmetic -----------------------------------------------------------

    def _lift(self, other):
        if isinstance(other, SymSqElem):
            if other.field is not self.field:
                raise ValueError("elements of different symmetric squares")
            return other
        return SymSqElem(self.field, _lift_poly(other))

    def __add__(self, other):
        o = self._lift(other)
        return SymSqElem(self.field,
                         self.num * o.den + o.num * self.den,
                         self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return SymSqElem(self.field, -self.num, self.den)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return SymSqElem(self.field, self.num * other, self.den)
        o = self._lift(other)
        return SymSqElem(self.field, self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._lift(other)
        if o.is_zero:
            raise ZeroDenominatorError("division by zero element")
        return SymSqElem(self.field, self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        return self._lift(other) / self

    def __pow__(self, n):
        if n < 0:
            return (self.field.one() / self) ** (-n)
        result = self.field.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other):
        o = self._lift(other)
        return (self.num * o.den - o.num * self.den).is_zero

    def __hash__(self):
        raise TypeError("SymSqElem is unhashable")

    def fraction_weight(self, table=None):
        from .poly import weighted_degree
        table = table or self.field.weights()
        wn = weighted_degree(self.num, table)
        wd = weighted_degree(self.den, table)
        if wn is None or wd is None:
            return None
        return wn - wd

    def __str__(self):
        if self.den.as_constant() == 1:
            return str(self.num)
        return f"({self.num}) / ({self.den})"

    def __repr__(self):
        return f"SymSqElem({self.num.to_str(max_terms=6)} / {self.den.to_str(max_terms=6)})"


def _lift_poly(x):
    if isinstance(x, MPoly):
        return x
    if isinstance(x, (int, Fraction)):
        return MPoly.const(x)
    raise TypeError(f"cannot coerce {type(x).__name__} into the field")


# -- coordinate bridges ------------------------------------------------------

def abcd_to_xy(expr, field):
    """Evaluate a polynomial (or fraction pair) in a,b,c,d,y on the square."""
    mapping = dict(field.abcd())
    mapping.update(field.y_elems())
    for v in expr.variables_used():
        if v not in mapping:
            mapping[v] = field.elem(MPoly.var(v))
    return eval_poly(expr, mapping, one=field.one())


def xy_to_abcd(p):
    """Rewrite a symmetric even polynomial through X1=a+s, X2=a-s, Y1=d+sc, Y2=d-sc.

    Only even powers of s may survive; they become powers of b.  Raises
    NotSymmetricError otherwise.
    """
    a, c, d, s = (MPoly.var(n) for n in ("a", "c", "d", "s"))
    q = p.subst({
        "X1": a + s, "X2": a - s,
        "Y1": d + s * c, "Y2": d - s * c,
        **{v: MPoly.var(v) for v in p.variables_used()
           if v not in ("X1", "X2", "Y1", "Y2")},
    })
    return _even_s_to_b(q)


def _even_s_to_b(q):
    if "s" not in q.vars:
        return q
    i = q.vars.index("s")
    vars = merge_vars(q.vars, ("b",))
    j = vars.index("b")
    out = {}
    for expo, coeff in q.terms.items():
        e = expo[i]
        if e % 2:
            raise NotSymmetricError(
                "odd power of the antisymmetric variable survives; "
                "input is not a symmetric function of the two points")
        new = [0] * len(vars)
        for v, k in zip(q.vars, expo):
            if v == "s":
                continue
            new[vars.index(v)] = k
        new[j] += e // 2
        key = tuple(new)
        out[key] = out.get(key, Fraction(0)) + coeff
    return MPoly(vars, {e: c for e, c in out.items() if c}).pruned()


def build_MN(params):
    """The two symmetric-square relations as polynomials in a,b,c,d,y.

    Constructed from the curve equation: the difference quotient of
    Y^2 - Q(X) over the two points (exact division by X1 - X2 in the
    s-coordinates) and the average, combined as printed.
    """
    Q1 = params.Q("X1")
    Q2 = params.Q("X2")
    Y1 = MPoly.var("Y1")
    Y2 = MPoly.var("Y2")
    m_num = Y1 ** 2 - Q1 - Y2 ** 2 + Q2
    n_raw = Y1 ** 2 - Q1 + Y2 ** 2 - Q2
    a, c, d, s = (MPoly.var(n) for n in ("a", "c", "d", "s"))
    sub = {
        "X1": a + s, "X2": a - s, "Y1": d + s * c, "Y2": d - s * c,
        **{v: MPoly.var(v) for v in y_symbols(params.genus)},
    }
    m_s = m_num.subst({k: v for k, v in sub.items() if k in m_num.variables_used()})
    m_div = m_s.exact_div(s * 2)
    if m_div is None:
        raise NotSymmetricError("difference quotient is not exact")
    M = _even_s_to_b(m_div)
    N = _even_s_to_b(n_raw.subst(
        {k: v for k, v in sub.items() if k in n_raw.variables_used()}))
    N_tilde = N * Fraction(-1, 2) + a * M
    return M, N_tilde
