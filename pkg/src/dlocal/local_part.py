"""Standard contributions and assembly of the local part N(x; l).

Every entry y of a strict pattern gets a standard contribution depending
on n and on whether its vertex is circled:

    y > 0 uncircled: 1 - 1/p when n divides y, else 0
    y > 0 circled:   g_k / p with k = y mod n  (g_0 = -1)
    y = 0 uncircled: 1
    y = 0 circled:   never reached (strictness removes these patterns)

Within a component only one distinguished vertex counts: the rightmost
vertex for ordinary components, the endpoint of the shorter leg for
asymmetric multiple leaners.  A symmetric multiple leaner of length l
contributes sigma(y)(1 - p^-l) when its rightmost vertex y is uncircled
and sigma(y) sigma(upsilon) p^-(l-1) when it is circled, upsilon being the
vertex just left of y.  Zero-valued components contribute 1.

A pattern of weight lambda contributes p^|lambda| times the product of its
component contributions, and the coefficient a_lambda of the local part is
the sum over strict patterns of weight lambda.  The sigma values and the
small p-powers are cached and shared; nothing ever mutates a RingElem, so
sharing is safe.
"""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache

from .coeff_ring import RingElem, gauss_symbol
from .decoration import (
    ML_ASYMMETRIC,
    ML_SYMMETRIC,
    ORDINARY,
    Component,
    _row_analysis,
    _strictness_failure,
    component_structure,
)
from .pattern import (
    LittelmannPattern,
    _check_args,
    _complete,
    _row_fills,
    critical_positions,
    weight_vector,
)
from .root_data import HighestWeight, RootSystemD


@dataclass
class LocalPart:
    """Finite map from weight vectors to exact coefficients a_lambda."""

    rank: int
    n: int
    twist: tuple[int, ...]
    coefficients: dict[tuple[int, ...], RingElem] = field(default_factory=dict)

    def coefficient_at(self, lam) -> RingElem:
        return self.coefficients.get(tuple(lam), RingElem.zero(self.n))

    def support(self) -> list[tuple[int, ...]]:
        return sorted(self.coefficients)

    def to_json_obj(self):
        return {
            "rank": self.rank,
            "n": self.n,
            "twist": list(self.twist),
            "coefficients": [
                {"lambda": list(lam), "value": self.coefficients[lam].to_json_obj()}
                for lam in self.support()
            ],
        }

    def to_json_str(self) -> str:
        return json.dumps(self.to_json_obj(), separators=(",", ":"))


@lru_cache(maxsize=None)
def _one(n: int) -> RingElem:
    return RingElem.one(n)


@lru_cache(maxsize=None)
def _p_pow(e: int, n: int) -> RingElem:
    return RingElem.p_power(e, n)


@lru_cache(maxsize=None)
def sigma_entry(value: int, circled: bool, n: int) -> RingElem:
    """Standard contribution of a single entry."""
    if n < 1:
        raise ValueError(f"cover degree n must be >= 1, got {n}")
    if value < 0:
        raise ValueError(f"entry value must be >= 0, got {value}")
    if value == 0:
        if circled:
            raise ValueError("circled zero reached sigma; strictness must filter it")
        return _one(n)
    if circled:
        return gauss_symbol(value, n) * _p_pow(-1, n)
    if value % n == 0:
        return _one(n) - _p_pow(-1, n)
    return RingElem.zero(n)


def sigma_component(comp: Component, circled, n: int) -> RingElem:
    """Standard contribution of a component of the decorated graph."""
    if comp.value == 0:
        return _one(n)
    if comp.kind == ORDINARY:
        return sigma_entry(comp.value, comp.rightmost in circled, n)
    if comp.kind == ML_ASYMMETRIC:
        return sigma_entry(comp.value, comp.shorter_leg_endpoint in circled, n)
    if comp.kind == ML_SYMMETRIC:
        if comp.rightmost in circled:
            return (
                sigma_entry(comp.value, True, n)
                * sigma_entry(comp.value, comp.upsilon in circled, n)
                * _p_pow(-(comp.length - 1), n)
            )
        return sigma_entry(comp.value, False, n) * (_one(n) - _p_pow(-comp.length, n))
    raise ValueError(f"unclassified component kind {comp.kind!r}")


def sigma_rule_tag(comp: Component, circled, n: int) -> str:
    """Human-readable name of the rule sigma_component applies."""
    if comp.value == 0:
        return "zero component -> 1"
    if comp.kind == ORDINARY:
        if comp.rightmost in circled:
            return "rightmost circled -> g/p"
        if comp.value % n == 0:
            return "rightmost uncircled, n | value -> 1 - 1/p"
        return "rightmost uncircled, n does not divide value -> 0"
    if comp.kind == ML_ASYMMETRIC:
        side = "circled" if comp.shorter_leg_endpoint in circled else "uncircled"
        return f"asymmetric leaner, shorter-leg endpoint {side}"
    if comp.rightmost in circled:
        return (
            f"symmetric leaner of length {comp.length}, rightmost circled -> "
            "sigma(y) sigma(upsilon) / p^(length-1)"
        )
    return (
        f"symmetric leaner of length {comp.length}, rightmost uncircled -> "
        "sigma(y) (1 - 1/p^length)"
    )


def pattern_contribution(T: LittelmannPattern, hw: HighestWeight, n: int) -> RingElem:
    """p^|lambda(T)| times the product of component contributions.

    Rejects patterns that are not strict (their contribution is excluded
    from the local part, not zero).
    """
    circled = critical_positions(T, hw)
    failure = _strictness_failure(T, circled)
    if failure is not None:
        raise ValueError(f"nonstrict pattern: {failure}")
    acc = _p_pow(sum(weight_vector(T)), n)
    for comp in component_structure(T):
        factor = sigma_component(comp, circled, n)
        if factor.is_zero:
            return RingElem.zero(n)
        acc = acc * factor
    return acc


def _accumulate(acc, rank, rows, crit, n):
    """Add one pattern's contribution into the coefficient accumulator."""
    for i, j in crit:
        if rows[i - 1][j - i] == 0:
            return
    circled = set(crit)
    unit = _one(n)
    factors = []
    lam_sum = 0
    lam = [0] * rank
    for i, row in enumerate(rows, start=1):
        components, probes, delta = _row_analysis(rank, i, row)
        for pos in probes:
            if pos in circled:
                return
        for k in range(rank):
            lam[k] += delta[k]
        for comp in components:
            factor = sigma_component(comp, circled, n)
            if factor.is_zero:
                return
            if factor is not unit:
                factors.append(factor)
    value = _p_pow(sum(lam), n)
    for factor in factors:
        value = value * factor
    key = tuple(lam)
    prev = acc.get(key)
    acc[key] = value if prev is None else prev + value


def _chunk_worker(args):
    rank, m, n, lam, units = args
    acc: dict = {}
    for row, crit, s, t1, t2 in units:
        for rest_rows, rest_crit in _complete(rank, m, lam, 2, s, t1, t2):
            _accumulate(acc, rank, (row,) + rest_rows, crit + rest_crit, n)
    return acc


def local_part(
    rs: RootSystemD,
    hw: HighestWeight,
    n: int,
    weight=None,
    jobs: int = 0,
) -> LocalPart:
    """Assemble the local part by summing over strict patterns.

    ``weight`` restricts the computation to a single coefficient.  ``jobs``
    of 0 or 1 runs sequentially; larger values shard the completions of
    each first row across processes.  The result is independent of the
    schedule: coefficients are exact and addition commutes.
    """
    if n < 1:
        raise ValueError(f"cover degree n must be >= 1, got {n}")
    lam = _check_args(rs, hw, weight)
    r, m = rs.rank, hw.m
    acc: dict[tuple[int, ...], RingElem] = {}
    if jobs and jobs > 1 and r >= 3:
        units = _row_fills(r, m, 1, (0,) * (r - 2), 0, 0, lam)
        units.sort(key=lambda f: f[0])
        chunks = [units[k :: 4 * jobs] for k in range(4 * jobs)]
        payload = [(r, m, n, lam, chunk) for chunk in chunks if chunk]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for partial in pool.map(_chunk_worker, payload):
                for key, value in partial.items():
                    prev = acc.get(key)
                    acc[key] = value if prev is None else prev + value
    else:
        for rows, crit in _complete(r, m, lam, 1, (0,) * (r - 2), 0, 0):
            _accumulate(acc, r, rows, crit, n)
    coeffs = {key: value for key, value in acc.items() if not value.is_zero}
    return LocalPart(rank=r, n=n, twist=hw.twist, coefficients=coeffs)
