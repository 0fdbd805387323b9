"""N-step reachability for parsed Boolean systems.

Two backends:

* "zonotope": one scalar logical zonotope per state variable. Initial and
  input sets are built with enclose_points and reduced, then the update
  rules are applied with Minkowski operations step by step. After every
  step each per-variable zonotope is normalized (a scalar point set is
  either {c} or {0,1}, so gamma collapses to 0 or 1), which keeps long
  horizons linear-time.
* "explicit": ground-truth enumeration of the joint reachable set,
  R_{k+1} = { f(x,u) : x in R_k, u in U_k }.

The per-step "size" follows the usual benchmark convention for this kind
of table: the total number of points across the per-variable value sets.
The joint count (cartesian count for the zonotope backend, true joint
cardinality for the explicit backend) is recorded alongside it.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field
from typing import Optional

from .dsl import SystemSpec, eval_point, eval_zonotope
from .errors import CapacityError, UsageError
from .explicit import ExplicitSet
from .gf2 import BitVec
from .zonotope import (LogicalZonotope, contains, enclose_points, evaluate,
                       reduce)

DEFAULT_STATE_BUDGET = 20          # max n_x for the explicit backend
DEFAULT_REDUCE_THRESHOLD = 8       # reduce non-scalar zonotopes past this gamma


@dataclass
class StepRecord:
    k: int
    var_sets: dict                 # var -> tuple of bits present
    size: int                      # sum of per-variable set sizes
    joint_count: int
    time_s: float
    zonos: Optional[dict] = None   # zonotope backend only
    joint: Optional[ExplicitSet] = None  # explicit backend only


@dataclass
class ReachResult:
    backend: str
    var_names: tuple
    horizon: int
    steps: list = field(default_factory=list)
    total_time_s: float = 0.0

    def sizes(self):
        return [s.size for s in self.steps]

    def to_json_dict(self) -> dict:
        return {
            "backend": self.backend,
            "horizon": self.horizon,
            "vars": list(self.var_names),
            "steps": [{
                "k": s.k,
                "var_sets": {v: list(bits) for v, bits in s.var_sets.items()},
                "size": s.size,
                "joint_count": s.joint_count,
                "time_s": s.time_s,
            } for s in self.steps],
            "total_time_s": self.total_time_s,
        }


@dataclass
class ContainmentReport:
    ok: bool
    violations: list               # (k, state bitstring, variable)
    surplus: list                  # per step: zonotope size - exact size

    @property
    def max_surplus(self):
        return max(self.surplus) if self.surplus else 0


def _scalar_normalize(z: LogicalZonotope) -> LogicalZonotope:
    """Evaluate-preserving cleanup for 1-bit zonotopes.

    A scalar zonotope is {c} when every generator is zero and {0,1}
    otherwise, so gamma never needs to exceed 1.
    """
    if any(g.word for g in z.generators):
        return LogicalZonotope(z.center, (BitVec(1, 1),))
    return LogicalZonotope(z.center, ())


def _normalize(z: LogicalZonotope, threshold: int) -> LogicalZonotope:
    if z.dim == 1:
        return _scalar_normalize(z)
    if z.gamma > threshold:
        return reduce(z)
    return z


def _domain_zonotope(domain) -> LogicalZonotope:
    pts = [BitVec(1, b) for b in domain]
    return reduce(enclose_points(pts))


def reach(sys: SystemSpec, n: int, backend: str = "zonotope", *,
          reduce_threshold: int = DEFAULT_REDUCE_THRESHOLD,
          state_budget: int = DEFAULT_STATE_BUDGET) -> ReachResult:
    if n < 0:
        raise UsageError(f"horizon must be nonnegative, got {n}")
    if backend == "zonotope":
        return _reach_zonotope(sys, n, reduce_threshold)
    if backend == "explicit":
        return _reach_explicit(sys, n, state_budget)
    raise UsageError(f"unknown backend {backend!r}")


# ------------------------------------------------------------- zonotope


def _reach_zonotope(sys: SystemSpec, n: int, threshold: int) -> ReachResult:
    t0 = time.perf_counter()
    result = ReachResult("zonotope", sys.state_vars, n)

    state = {v: _domain_zonotope(sys.init[v]) for v in sys.state_vars}
    result.steps.append(_zono_record(0, sys, state, time.perf_counter() - t0))

    for k in range(1, n + 1):
        tk = time.perf_counter()
        dom = sys.inputs_at(k - 1)
        env = dict(state)
        for u in sys.input_vars:
            env[u] = _domain_zonotope(dom[u])
        for v in sys.updates:
            env[v + "'"] = eval_zonotope(sys.updates[v], env)
        state = {v: _normalize(env[v + "'"], threshold) for v in sys.state_vars}
        result.steps.append(_zono_record(k, sys, state, time.perf_counter() - tk))

    result.total_time_s = time.perf_counter() - t0
    return result


def _zono_record(k, sys, state, dt) -> StepRecord:
    var_sets = {}
    for v in sys.state_vars:
        ev = evaluate(state[v])
        var_sets[v] = tuple(p.word for p in ev.points)
    size = sum(len(bits) for bits in var_sets.values())
    joint = math.prod(len(bits) for bits in var_sets.values())
    return StepRecord(k, var_sets, size, joint, dt, zonos=dict(state))


# ------------------------------------------------------------- explicit


def exact_reach(sys: SystemSpec, n: int, *,
                state_budget: int = DEFAULT_STATE_BUDGET) -> list:
    """R_0..R_n as ExplicitSets over the joint state space."""
    return _exact_reach_timed(sys, n, state_budget)[0]


def _exact_reach_timed(sys: SystemSpec, n: int, state_budget: int):
    if sys.n_x > state_budget:
        raise CapacityError(
            f"n_x={sys.n_x} exceeds explicit state budget {state_budget}")
    t_prev = time.perf_counter()
    r = _init_words(sys)
    out = [ExplicitSet.from_words(sys.n_x, r)]
    times = [time.perf_counter() - t_prev]
    succ_cache = {}
    constant_inputs = sys.input_schedule is None
    for k in range(n):
        t_prev = time.perf_counter()
        assignments = _input_assignments(sys, k)
        nxt = set()
        for w in r:
            if constant_inputs and w in succ_cache:
                nxt |= succ_cache[w]
            else:
                s = _successors(sys, w, assignments)
                if constant_inputs:
                    succ_cache[w] = s
                nxt |= s
        if constant_inputs and nxt == r:
            # fixed point: every later step repeats this set
            fixed = ExplicitSet.from_words(sys.n_x, nxt)
            dt = time.perf_counter() - t_prev
            out.extend([fixed] * (n - k))
            times.extend([dt] + [0.0] * (n - k - 1))
            return out, times
        r = nxt
        out.append(ExplicitSet.from_words(sys.n_x, r))
        times.append(time.perf_counter() - t_prev)
    return out, times


def _init_words(sys: SystemSpec):
    words = [0]
    for i, v in enumerate(sys.state_vars):
        words = [w | (b << i) for w in words for b in sys.init[v]]
    return set(words)


def _input_assignments(sys: SystemSpec, k: int):
    dom = sys.inputs_at(k)
    envs = [{}]
    for u in sys.input_vars:
        envs = [dict(e, **{u: b}) for e in envs for b in dom[u]]
    return envs


def _successors(sys: SystemSpec, word: int, assignments) -> set:
    base = {v: word >> i & 1 for i, v in enumerate(sys.state_vars)}
    out = set()
    for u_env in assignments:
        env = dict(base)
        env.update(u_env)
        for v in sys.updates:
            env[v + "'"] = eval_point(sys.updates[v], env)
        w = 0
        for i, v in enumerate(sys.state_vars):
            w |= env[v + "'"] << i
        out.add(w)
    return out


def _reach_explicit(sys: SystemSpec, n: int, state_budget: int) -> ReachResult:
    t0 = time.perf_counter()
    sets, times = _exact_reach_timed(sys, n, state_budget)
    result = ReachResult("explicit", sys.state_vars, n)
    for k, (s, dt) in enumerate(zip(sets, times)):
        var_sets = {}
        for i, v in enumerate(sys.state_vars):
            var_sets[v] = tuple(sorted({p.word >> i & 1 for p in s.points}))
        size = sum(len(bits) for bits in var_sets.values())
        result.steps.append(StepRecord(k, var_sets, size, len(s), dt, joint=s))
    result.total_time_s = time.perf_counter() - t0
    return result


# ----------------------------------------------------------- containment


def check_containment(r_zono: ReachResult, r_exact: ReachResult) -> ContainmentReport:
    """Every exact joint state must fall inside the per-variable zonotopes."""
    if r_zono.horizon != r_exact.horizon or r_zono.var_names != r_exact.var_names:
        raise UsageError("reach results compare different systems or horizons")
    if r_zono.backend != "zonotope" or r_exact.backend != "explicit":
        raise UsageError("expected a zonotope result and an explicit result")
    violations = []
    surplus = []
    for zs, es in zip(r_zono.steps, r_exact.steps):
        for point in es.joint:
            for i, v in enumerate(r_zono.var_names):
                bit = BitVec(1, point.word >> i & 1)
                if not contains(zs.zonos[v], bit):
                    violations.append((zs.k, point.to_text(), v))
        surplus.append(zs.size - es.size)
    return ContainmentReport(not violations, violations, surplus)
