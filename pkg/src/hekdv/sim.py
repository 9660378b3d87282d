"""Numerical integration of the four flows with invariant-drift monitoring.

The right-hand sides are compiled from the same transcribed tables that the
symbolic engine certifies, so the measured drift of the two integrals along
a trajectory is purely integrator error.  The stepper is an embedded
Dormand-Prince 5(4) pair with PI step-size control; complex seeds (curve
points with negative ordinate squares) are integrated as split real
systems of twice the dimension.
"""

from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .curve import CurveParams
from .errors import ConfigError, SeedError, SingularityAbort
from .tables import first_integrals, flow_table
from .poly import MPoly

T_FLOWS = ("T1", "T3")


# -- compiling exact tables into fast numeric callables ---------------------

def _poly_source(p: MPoly):
    if p.is_zero:
        return "0.0"
    parts = []
    for expo, c in p.terms.items():
        factors = [repr(float(c))]
        for v, e in zip(p.vars, expo):
            if e == 1:
                factors.append(v)
            elif e > 1:
                factors.append(f"{v}**{e}")
        parts.append("*".join(factors))
    return "(" + "+".join(parts) + ")"


def _bind_numeric(rf, params: CurveParams):
    """Compile a u-space rational function into f(u2, u4, u5, u7)."""
    num = params.sub_y(rf.num)
    den = params.sub_y(rf.den)
    src_num = _poly_source(num)
    if den.as_constant() == 1:
        body = src_num
    else:
        body = f"({src_num}) / ({_poly_source(den)})"
    code = f"lambda u2, u4, u5, u7: {body}"
    return eval(code, {"__builtins__": {}})


class CompiledFlow:
    """Vector field for one flow at fixed numeric curve parameters."""

    def __init__(self, flow, params: CurveParams):
        if not params.is_numeric:
            raise ConfigError("simulation needs numeric curve parameters")
        self.flow = flow
        self.params = params
        table = flow_table(flow)
        self._fns = [_bind_numeric(table.entries[u], params)
                     for u in ("u2", "u4", "u5", "u7")]

    def __call__(self, state4):
        u2, u4, u5, u7 = state4
        return np.array([f(u2, u4, u5, u7) for f in self._fns],
                        dtype=complex)


class CompiledIntegrals:
    """Numeric evaluators for the two invariants at fixed parameters."""

    def __init__(self, params: CurveParams):
        h12, h14 = first_integrals()
        self._h12 = _bind_numeric(h12, params)
        self._h14 = _bind_numeric(h14, params)

    def __call__(self, state4):
        u2, u4, u5, u7 = state4
        return self._h12(u2, u4, u5, u7), self._h14(u2, u4, u5, u7)


# -- states and trajectories --------------------------------------------------

@dataclass(frozen=True)
class SimState:
    u2: complex
    u4: complex
    u5: complex
    u7: complex
    time: float = 0.0

    def vector(self):
        return np.array([self.u2, self.u4, self.u5, self.u7], dtype=complex)

    @property
    def is_real(self):
        return all(abs(v.imag) == 0 for v in
                   (complex(self.u2), complex(self.u4),
                    complex(self.u5), complex(self.u7)))


@dataclass
class Trajectory:
    flow: str
    rel_tol: float
    abs_tol: float
    t0: float
    t_end: float
    samples: list = field(default_factory=list)  # (t, state4, H12, H14)
    aborted: bool = False
    abort_reason: str = ""

    def times(self):
        return [s[0] for s in self.samples]

    def final_state(self):
        t, y, _, _ = self.samples[-1]
        return SimState(*y, time=t)

    def h_drift(self):
        """Max absolute deviation of each integral from its initial value."""
        h12_0 = self.samples[0][2]
        h14_0 = self.samples[0][3]
        d12 = max(abs(s[2] - h12_0) for s in self.samples)
        d14 = max(abs(s[3] - h14_0) for s in self.samples)
        return d12, d14

    def relative_drift(self):
        h12_0, h14_0 = self.samples[0][2], self.samples[0][3]
        d12, d14 = self.h_drift()
        return (d12 / max(1.0, abs(h12_0)), d14 / max(1.0, abs(h14_0)))

    def to_csv(self, path):
        with open(path, "w") as fh:
            fh.write("time,u2,u4,u5,u7,H12,H14\n")
            for t, y, h12, h14 in self.samples:
                cells = [f"{t:.17g}"]
                for v in (*y, h12, h14):
                    v = complex(v)
                    if v.imag == 0:
                        cells.append(f"{v.real:.17g}")
                    else:
                        cells.append(f"{v.real:.17g}{v.imag:+.17g}j")
                fh.write(",".join(cells) + "\n")


# -- seeding ------------------------------------------------------------------

def curve_ordinate(params: CurveParams, xval):
    """Numeric Y with Y^2 = Q(x); complex when Q(x) < 0."""
    qx = params.Q("X1").eval_numeric({"X1": Fraction(xval)
                                      if isinstance(xval, (int, Fraction, str))
                                      else xval})
    return complex(np.sqrt(complex(qx)))


def seed_state(params: CurveParams, p1, p2, flow=None):
    """Build the symmetric-square coordinates of an unordered point pair.

    Both points must satisfy the curve equation to 1e-12 relative; the
    abscissas must differ, and for the rational flows must also be nonzero.
    The two invariants are checked against their curve values at 1e-10.
    """
    if not params.is_numeric:
        raise ConfigError("seeding needs numeric curve parameters")
    if params.genus != 3:
        raise ConfigError("the simulated flows live on the genus-3 square")
    x1, y1 = complex(p1[0]), complex(p1[1])
    x2, y2 = complex(p2[0]), complex(p2[1])
    Q = params.Q("X1")
    for tag, (xv, yv) in (("P1", (x1, y1)), ("P2", (x2, y2))):
        qx = complex(Q.eval_numeric({"X1": xv}))
        scale = max(1.0, abs(yv) ** 2, abs(qx))
        if abs(yv * yv - qx) > 1e-12 * scale:
            raise SeedError(f"{tag} is off the curve: |y^2 - Q(x)| too large")
    if x1 == x2:
        raise SeedError("coincident abscissas: the chart needs x1 != x2")
    if flow in T_FLOWS and (x1 == 0 or x2 == 0):
        raise SeedError("rational flows need nonzero abscissas")
    u2 = (x1 + x2) / 2
    u4 = (x1 - x2) ** 2 / 4
    u5 = (y1 - y2) / (x1 - x2)
    u7 = (y1 + y2) / 2
    state = (u2, u4, u5, u7)
    hvals = CompiledIntegrals(params)(state)
    targets = [float(params.coefficient(n).as_constant())
               for n in ("y12", "y14")]
    for tag, hv, want in zip(("H12", "H14"), hvals, targets):
        scale = max(1.0, abs(hv), abs(want))
        if abs(hv - want) > 1e-10 * scale:
            raise SeedError(f"{tag} residual {abs(hv - want):g} above seeding tolerance")
    return SimState(u2, u4, u5, u7, time=0.0)


# -- the embedded 5(4) pair ---------------------------------------------------

_DP_A = (
    (),
    (1 / 5,),
    (3 / 40, 9 / 40),
    (44 / 45, -56 / 15, 32 / 9),
    (19372 / 6561, -25360 / 2187, 64448 / 6561, -212 / 729),
    (9017 / 3168, -355 / 33, 46732 / 5247, 49 / 176, -5103 / 18656),
    (35 / 384, 0.0, 500 / 1113, 125 / 192, -2187 / 6784, 11 / 84),
)
_DP_C = (0.0, 1 / 5, 3 / 10, 4 / 5, 8 / 9, 1.0, 1.0)
_DP_B5 = (35 / 384, 0.0, 500 / 1113, 125 / 192, -2187 / 6784, 11 / 84, 0.0)
_DP_E = (71 / 57600, 0.0, -71 / 16695, 71 / 1920, -17253 / 339200,
         22 / 525, -1 / 40)


def _error_norm(err, y_old, y_new, rel_tol, abs_tol):
    scale = abs_tol + rel_tol * np.maximum(np.abs(y_old), np.abs(y_new))
    return float(np.sqrt(np.mean((np.abs(err) / scale) ** 2)))


def integrate(flow, s0: SimState, t_end, rel_tol=1e-12, abs_tol=1e-14,
              params: CurveParams = None, max_steps=200_000, reverse=False):
    """Integrate one flow from the seed state to the requested time.

    Samples are collected at accepted steps; the two invariants are
    evaluated alongside each sample.  For the rational flows, steps that
    would bring |u4 - u2^2| below 1e-8 times its initial size are rejected
    and the run aborts with the partial trajectory once the step size
    underflows.
    """
    if params is None:
        raise ConfigError("integrate needs the curve parameters")
    rhs_flow = CompiledFlow(flow, params)
    invariants = CompiledIntegrals(params)
    sign = -1.0 if reverse else 1.0

    def rhs(y):
        return sign * rhs_flow(y)

    guard = flow in T_FLOWS
    y = s0.vector()
    t = 0.0
    span = float(t_end)
    if span < 0:
        raise ConfigError("t_end must be nonnegative; use reverse=True to go back")
    v0 = abs(y[1] - y[0] ** 2)
    if guard and v0 == 0:
        raise SeedError("seed sits on the singular set u4 = u2^2")
    guard_floor = 1e-8 * max(v0, 1e-30)

    traj = Trajectory(flow=flow, rel_tol=rel_tol, abs_tol=abs_tol,
                      t0=0.0, t_end=span)
    h12, h14 = invariants(y)
    traj.samples.append((0.0, tuple(y), h12, h14))
    if span == 0.0:
        return traj

    k = [None] * 7
    k[0] = rhs(y)
    h = min(0.01 * span, _initial_step(rhs, y, k[0], rel_tol, abs_tol))
    err_prev = 1.0
    steps = 0
    while t < span:
        if steps >= max_steps:
            traj.aborted = True
            traj.abort_reason = "step budget exhausted"
            raise SingularityAbort(traj.abort_reason, traj)
        h = min(h, span - t)
        if h < 1e-15 * max(1.0, t):
            traj.aborted = True
            traj.abort_reason = "step size underflow near the singular set"
            raise SingularityAbort(traj.abort_reason, traj)
        for i in range(1, 7):
            yi = y + h * sum(aij * k[j] for j, aij in enumerate(_DP_A[i]))
            k[i] = rhs(yi)
        y_new = y + h * sum(b * k[i] for i, b in enumerate(_DP_B5) if b)
        err_vec = h * sum(e * k[i] for i, e in enumerate(_DP_E) if e)
        err = _error_norm(err_vec, y, y_new, rel_tol, abs_tol)
        bad = not np.all(np.isfinite(y_new.view(float)))
        if guard and not bad:
            if abs(y_new[1] - y_new[0] ** 2) < guard_floor:
                bad = True
        if err <= 1.0 and not bad:
            t += h
            y = y_new
            if float(np.max(np.abs(y))) > 1e9:
                traj.aborted = True
                traj.abort_reason = ("state magnitude overflow "
                                     "(finite-time escape)")
                raise SingularityAbort(traj.abort_reason, traj)
            k[0] = k[6]     # first-same-as-last
            h12, h14 = invariants(y)
            traj.samples.append((t, tuple(y), h12, h14))
            # PI controller (orders 5/4)
            factor = 0.9 * err ** -0.14 * err_prev ** 0.08 if err > 0 else 5.0
            err_prev = max(err, 1e-16)
            h *= min(5.0, max(0.2, factor))
        elif bad:
            h *= 0.25
        else:
            h *= min(1.0, max(0.2, 0.9 * err ** -0.2))
        steps += 1
    return traj


def _initial_step(rhs, y, f0, rel_tol, abs_tol):
    scale = abs_tol + rel_tol * np.abs(y)
    d0 = float(np.sqrt(np.mean((np.abs(y) / scale) ** 2)))
    d1 = float(np.sqrt(np.mean((np.abs(f0) / scale) ** 2)))
    h0 = 1e-6 if d0 < 1e-5 or d1 < 1e-5 else 0.01 * d0 / d1
    y1 = y + h0 * f0
    f1 = rhs(y1)
    d2 = float(np.sqrt(np.mean((np.abs(f1 - f0) / scale) ** 2))) / h0
    if max(d1, d2) > 1e-15:
        h1 = (0.01 / max(d1, d2)) ** (1 / 5)
    else:
        h1 = max(1e-6, h0 * 1e-3)
    return min(100 * h0, h1)


def commute_experiment(params: CurveParams, s0: SimState, sigma, tau,
                       rel_tol=1e-12, abs_tol=1e-14, flows=("T1", "T3"),
                       threshold_scale=1e-8):
    """Compare the two orderings of a pair of flows from the same seed.

    Returns a dict with the endpoint discrepancy and a PASS flag against
    1e-8 times the state scale; the flows commute exactly, so the
    discrepancy measures integrator error only.
    """
    fa, fb = flows

    def run(flow, state, span):
        if span == 0:
            return state
        traj = integrate(flow, state, span, rel_tol, abs_tol, params=params)
        return traj.final_state()

    leg1 = run(fb, run(fa, s0, sigma), tau)
    leg2 = run(fa, run(fb, s0, tau), sigma)
    diff = leg1.vector() - leg2.vector()
    disc = float(np.max(np.abs(diff)))
    scale = max(1.0, float(np.max(np.abs(leg1.vector()))),
                float(np.max(np.abs(leg2.vector()))))
    threshold = threshold_scale * scale
    return {
        "flows": list(flows),
        "sigma": sigma,
        "tau": tau,
        "discrepancy": disc,
        "threshold": threshold,
        "pass": disc <= threshold,
    }
