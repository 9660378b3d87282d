"""Transcribed right-hand-side tables, first integrals and Poisson structures.

The four flows on C^4 with coordinates (u2, u4, u5, u7):

  * "I"  and "II"  -- the polynomial systems generated by the commuting
    derivations L3, L5 on the genus-3 square;
  * "T1" and "T3" -- the rational systems generated by the deformed pair,
    with denominators restricted to powers of u4 - u2^2.

These tables are transcriptions, entered here once and certified against
the derivation engine by the verification modules; they are also the
source of the numerical right-hand sides.
"""

from dataclasses import dataclass
from fractions import Fraction

from .errors import ConfigError
from .poly import MPoly, standard_weights, variables
from .ratfun import RatFn
from .symsq import build_MN
from .curve import CurveParams

U_VARS = ("u2", "u4", "u5", "u7")
FLOW_IDS = ("I", "II", "T1", "T3")

# weight added to deg(u_j) by each flow's right-hand side
FLOW_WEIGHT_SHIFT = {"I": 3, "II": 5, "T1": 1, "T3": 3}

u2, u4, u5, u7 = variables(*U_VARS)
y4, y6, y8, y10, y12, y14 = variables("y4", "y6", "y8", "y10", "y12", "y14")

_DENOM = u4 - u2 ** 2


@dataclass(frozen=True)
class FlowTable:
    flow: str
    entries: dict  # u-variable name -> RatFn

    def __post_init__(self):
        if self.flow not in FLOW_IDS:
            raise ConfigError(f"unknown flow {self.flow!r}")
        if set(self.entries) != set(U_VARS):
            raise ConfigError("flow table must cover exactly u2,u4,u5,u7")

    def homogeneity_ok(self):
        w = standard_weights(3)
        shift = FLOW_WEIGHT_SHIFT[self.flow]
        for name, entry in self.entries.items():
            want = w[name] + shift
            if entry.fraction_weight(w) != want:
                return False
        return True

    def denominators_ok(self):
        """Each denominator must be a constant times a power of u4 - u2^2."""
        for entry in self.entries.values():
            den = entry.den
            while den.as_constant() is None:
                den = den.exact_div(_DENOM)
                if den is None:
                    return False
        return True

    def mutated(self, uvar, delta):
        """Copy with `delta` (an MPoly) added to one entry; for control tests."""
        entries = dict(self.entries)
        entries[uvar] = entries[uvar] + RatFn(delta)
        return FlowTable(self.flow, entries)


def _table_I():
    return {
        "u2": RatFn(-1 * u5),
        "u4": RatFn(-2 * u7),
        "u5": RatFn(-35 * u2 ** 4 - 42 * u2 ** 2 * u4 - 3 * u4 ** 2
                    - 2 * y4 * (5 * u2 ** 2 + u4) + 4 * y6 * u2 - y8),
        "u7": RatFn(-7 * (3 * u2 ** 5 + 10 * u2 ** 3 * u4 + 3 * u2 * u4 ** 2)
                    - 10 * y4 * (u2 ** 3 + u2 * u4)
                    + 2 * y6 * (3 * u2 ** 2 + u4) - 3 * y8 * u2 + y10),
    }


def _table_II():
    return {
        "u2": RatFn(u2 * u5 - u7),
        "u4": RatFn(2 * (u2 * u7 - u4 * u5)),
        "u5": RatFn(u5 ** 2 + 14 * u2 ** 5 - 28 * u2 ** 3 * u4 - 18 * u2 * u4 ** 2
                    - 8 * y4 * u2 * u4 + 2 * y6 * (u2 ** 2 + u4)
                    - 2 * y8 * u2 + y10),
        "u7": RatFn(-1 * u5 * u7 + 21 * u2 ** 6 + 35 * u2 ** 4 * u4
                    - 21 * u2 ** 2 * u4 ** 2 - 3 * u4 ** 3
                    + 2 * y4 * (5 * u2 ** 4 - u4 ** 2)
                    - 2 * y6 * (3 * u2 ** 3 - u2 * u4)
                    + y8 * (3 * u2 ** 2 - u4) - y10 * u2),
    }


def _table_T1():
    return {
        "u2": RatFn(u2 * u5 - u7, _DENOM),
        "u4": RatFn(2 * (u2 * u7 - u4 * u5), _DENOM),
        "u5": RatFn(u5 ** 2 + 14 * u2 ** 5 - 28 * u2 ** 3 * u4
                    - 18 * u2 * u4 ** 2 - 8 * y4 * u2 * u4
                    + 2 * y6 * (u2 ** 2 + u4) - 2 * y8 * u2 + y10, _DENOM),
        "u7": RatFn(-1 * u5 * u7 + 21 * u2 ** 6 + 35 * u2 ** 4 * u4
                    - 21 * u2 ** 2 * u4 ** 2 - 3 * u4 ** 3
                    + 2 * y4 * (5 * u2 ** 4 - u4 ** 2)
                    - 2 * y6 * (3 * u2 ** 3 - u2 * u4)
                    + y8 * (3 * u2 ** 2 - u4) - y10 * u2, _DENOM),
    }


def _table_T3():
    return {
        "u2": RatFn(2 * u2 * u7 - u4 * u5 - u2 ** 2 * u5, _DENOM),
        "u4": RatFn(2 * (2 * u2 * u4 * u5 - u4 * u7 - u2 ** 2 * u7), _DENOM),
        "u5": RatFn(-2 * u2 * u5 ** 2 + 7 * u2 ** 6 + 63 * u2 ** 4 * u4
                    - 3 * u2 ** 2 * u4 ** 2 - 3 * u4 ** 3
                    + 2 * y4 * (5 * u2 ** 4 + 4 * u2 ** 2 * u4 - u4 ** 2)
                    - 8 * y6 * u2 ** 3 + y8 * (5 * u2 ** 2 - u4)
                    - 2 * y10 * u2, _DENOM),
        "u7": RatFn(2 * u2 * u5 * u7 - 21 * u2 ** 7 - 21 * u2 ** 5 * u4
                    - 7 * u2 ** 3 * u4 ** 2 - 15 * u2 * u4 ** 3
                    - 2 * y4 * (5 * u2 ** 5 + 3 * u2 * u4 ** 2)
                    + 2 * y6 * (3 * u2 ** 4 + u4 ** 2)
                    - y8 * (3 * u2 ** 3 + u2 * u4)
                    + y10 * (u2 ** 2 + u4), _DENOM),
    }


_BUILDERS = {"I": _table_I, "II": _table_II, "T1": _table_T1, "T3": _table_T3}


def flow_table(flow):
    if flow not in _BUILDERS:
        raise ConfigError(f"unknown flow {flow!r}; expected one of {FLOW_IDS}")
    return FlowTable(flow, _BUILDERS[flow]())


def first_integrals():
    """H12 and H14 as u-polynomials, built from the square's relations."""
    M3, N3t = build_MN(CurveParams.symbolic(3))
    sub = {"a": u2, "b": u4, "c": u5, "d": u7}
    keep = {v: MPoly.var(v) for v in ("y4", "y6", "y8", "y10", "y12", "y14")}
    H12 = RatFn(M3.subst({**sub, **keep}) + y12)
    H14 = RatFn(N3t.subst({**sub, **keep}) + y14)
    return H12, H14


@dataclass(frozen=True)
class PoissonStructure:
    """Constant antisymmetric bracket table on (u2, u4, u5, u7)."""

    name: str
    table: dict  # (ui, uj) with i < j in U_VARS order -> Fraction

    def bracket_value(self, vi, vj):
        if vi == vj:
            return Fraction(0)
        if (vi, vj) in self.table:
            return self.table[(vi, vj)]
        if (vj, vi) in self.table:
            return -self.table[(vj, vi)]
        return Fraction(0)


def structure_I():
    return PoissonStructure("I", {("u2", "u7"): Fraction(-1, 2),
                                  ("u4", "u5"): Fraction(-1)})


def structure_II():
    return PoissonStructure("II", {("u2", "u7"): Fraction(1, 2),
                                   ("u4", "u5"): Fraction(1)})


def poisson_bracket(f, g, structure):
    """{f, g} = sum over pairs of the constant bracket times the Jacobian part."""
    f = f if isinstance(f, RatFn) else RatFn(f)
    g = g if isinstance(g, RatFn) else RatFn(g)
    total = RatFn(0)
    for i, vi in enumerate(U_VARS):
        for vj in U_VARS[i + 1:]:
            cij = structure.bracket_value(vi, vj)
            if cij:
                total = total + (f.derivative(vi) * g.derivative(vj)
                                 - f.derivative(vj) * g.derivative(vi)) * cij
    return total
