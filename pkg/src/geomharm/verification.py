"""Enumerate identity instances, evaluate both sides, and collect reports."""

from __future__ import annotations

import json
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Iterator

from . import harmonic_geometric as hg
from . import integrals as ig
from . import number_identities as ni
from .exact_core import bernoulli, binomial, poly_bernoulli
from .geometric import (
    convolve_gp,
    derivative_via_gp,
    dk_wn_via_higher_order,
    geometric,
    geometric_gf_oracle,
    higher_order_via_gp,
    raising_gp,
    reflect_gp,
)
from .polynomials import Poly, derivative, format_rational, to_text
from .series_eval import A_fin, direct_sum, hA_fin

__all__ = ["Identity", "IdentityReport", "IDENTITIES", "SUITES", "SERIES_GRID", "enumerate_cases", "run_suite"]

SUITES = ("polynomial", "integral", "number", "series")
SERIES_GRID = (Fraction(1, 2), Fraction(-1, 2), Fraction(1, 3), Fraction(-2, 3), Fraction(3, 4))
MAX_DERIV_ORDER = 10


@dataclass(frozen=True)
class Identity:
    id: str
    suite: str
    cases: Callable[[int], Iterable[tuple]]
    param_names: tuple[str, ...]
    sides: Callable[..., tuple]


@dataclass
class IdentityReport:
    identity_id: str
    params: dict
    status: str
    lhs: str
    rhs: str
    elapsed: float = field(default=0.0, compare=False)

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_dict(self) -> dict:
        return {
            "identity_id": self.identity_id,
            "params": self.params,
            "status": self.status,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "elapsed": self.elapsed,
        }

    @classmethod
    def from_dict(cls, d: dict) -> IdentityReport:
        return cls(d["identity_id"], dict(d["params"]), d["status"], d["lhs"], d["rhs"], d["elapsed"])

    def params_text(self) -> str:
        return ", ".join(f"{k}={v}" for k, v in self.params.items())


def _render(v) -> str:
    if isinstance(v, Poly):
        return to_text(v)
    return format_rational(v)


def _render_param(v):
    return format_rational(v) if isinstance(v, Fraction) else v


# --- case generators -------------------------------------------------------

def _range(lo: int) -> Callable[[int], Iterator[tuple]]:
    return lambda N: ((n,) for n in range(lo, N + 1))


def _n_k_deriv(N: int) -> Iterator[tuple]:
    for n in range(N + 1):
        for k in range(1, min(n, MAX_DERIV_ORDER) + 1):
            yield n, k


def _n_p_order(N: int) -> Iterator[tuple]:
    for n in range(N + 1):
        for p in range(1, min(N, MAX_DERIV_ORDER) + 1):
            yield n, p


def _semiorth_cases(N: int) -> Iterator[tuple]:
    for n in range(N + 1):
        for m in range(N + 1):
            if n + m >= 1:
                yield n, m


def _eq13_cases(N: int) -> Iterator[tuple]:
    for n in range(N + 1):
        for m in range(1, N + 1):
            if (n + m) % 2 == 0:
                yield n, m


def _teo6_cases(N: int) -> Iterator[tuple]:
    for n in range(1, N + 1):
        for j in range(1, n + 1):
            yield n, j


def _cor1_cases(N: int) -> Iterator[tuple]:
    for n in range(2, N + 1):
        for m in range(1, N + 1):
            if (n + m) % 2 == 1:
                yield n, m


def _series_cases(p_lo: int) -> Callable[[int], Iterator[tuple]]:
    def gen(N: int) -> Iterator[tuple]:
        for m in range(min(N, 8) + 1):
            for p in range(p_lo, N + 1):
                for x in SERIES_GRID:
                    yield m, p, x

    return gen


# --- side builders ---------------------------------------------------------

def _vs(build: Callable, reference: Callable) -> Callable:
    return lambda *a: (build(*a), reference(*a))


def _deriv(n: int, k: int) -> Poly:
    return derivative(geometric(n), k)


def _bernoulli_recurrence(n: int) -> tuple:
    # sum_{k<n} C(n,k) B_k = 0 for n >= 2
    return sum((binomial(n, k) * bernoulli(k) for k in range(n)), Fraction(0)), Fraction(0)


def _pb_first_order(n: int) -> tuple:
    return poly_bernoulli(n, 1), (-1) ** n * bernoulli(n)


IDENTITIES: tuple[Identity, ...] = (
    # polynomial suite
    Identity("gp-gf", "polynomial", _range(0), ("n",), _vs(geometric, geometric_gf_oracle)),
    Identity("eq5-reflect-gp", "polynomial", _range(1), ("n",), reflect_gp),
    Identity("eq10-convolve-gp", "polynomial", _range(0), ("n",), convolve_gp),
    Identity("raising-gp", "polynomial", _range(0), ("n",), raising_gp),
    Identity("eq15-derivative", "polynomial", _n_k_deriv, ("n", "k"), _vs(dk_wn_via_higher_order, _deriv)),
    Identity("remark-derivative", "polynomial", _n_k_deriv, ("n", "k"), _vs(derivative_via_gp, _deriv)),
    Identity("hgp-gp-higher-order", "polynomial", _n_p_order, ("n", "p"), higher_order_via_gp),
    Identity("hgp-gf", "polynomial", _range(1), ("n",), _vs(hg.hgp, hg.hgp_gf_oracle)),
    Identity("teo4-hgp", "polynomial", _range(1), ("n",), _vs(hg.hgp_via_theorem4, hg.hgp)),
    Identity("teo5-hgp", "polynomial", _range(1), ("n",), _vs(hg.hgp_via_theorem5, hg.hgp)),
    Identity("eq14-hgp", "polynomial", _range(1), ("n",), _vs(hg.hgp_via_eq14, hg.hgp)),
    Identity("pro2-hgp", "polynomial", _range(2), ("n",), lambda n: (hg.hgp_via_pro2(n - 1), hg.hgp(n))),
    Identity("eq6-reflect-hgp", "polynomial", _range(0), ("n",), hg.reflect_hgp),
    Identity("eq4-recurrence", "polynomial", _range(2), ("n",), hg.recurrence_eq4),
    Identity("eq8-convolution", "polynomial", _range(0), ("n",), hg.convolution_eq8),
    Identity("tf-raising-hgp", "polynomial", _range(0), ("n",), hg.raising_tf),
    Identity("pro2b-recurrence", "polynomial", _range(2), ("n",), hg.recurrence_pro2b),
    Identity("keller-genocchi", "polynomial", _range(2), ("n",), hg.keller_genocchi),
    # integral suite
    Identity("gp-b", "integral", _range(1), ("n",), ig.int_gp_plain),
    Identity("semiorth", "integral", _semiorth_cases, ("n", "m"), ig.int_semiorth),
    Identity("ihgp", "integral", _range(1), ("n",), ig.int_hgp_plain),
    Identity("m0-hgp-geomweight", "integral", _range(0), ("n",), ig.int_hgp_geomweight),
    Identity("eq13-hgp-gp-product", "integral", _eq13_cases, ("n", "m"), ig.int_hgp_gp_product),
    Identity("lngp", "integral", _range(1), ("n",), ig.int_gp_logweight),
    # number suite
    Identity("eq16", "number", _range(1), ("n",), ni.identity_eq16),
    Identity("teo6", "number", _teo6_cases, ("n", "j"), ni.identity_teo6),
    Identity("hg-b", "number", _range(1), ("n",), ni.identity_hgb),
    Identity("eq18", "number", _range(1), ("n",), ni.identity_eq18),
    Identity("cor1-double", "number", _cor1_cases, ("n", "m"), ni.identity_cor1_double),
    Identity("teo8-eq12", "number", _range(2), ("n",), ni.identity_teo8),
    Identity("pb-b", "number", lambda N: ((n,) for n in range(1, N + 1, 2)), ("n",), ni.identity_pbb),
    Identity("pb-first-order", "number", _range(0), ("n",), _pb_first_order),
    Identity("bernoulli-recurrence", "number", _range(2), ("n",), _bernoulli_recurrence),
    # series suite
    Identity(
        "A-fin-vs-direct", "series", _series_cases(0), ("m", "p", "x"),
        lambda m, p, x: (A_fin(m, p, x), direct_sum(m, p, x)),
    ),
    Identity(
        "hA-fin-vs-direct", "series", _series_cases(1), ("m", "p", "x"),
        lambda m, p, x: (hA_fin(m, p, x), direct_sum(m, p, x, with_harmonic=True)),
    ),
)


def enumerate_cases(suite: str, max_n: int, ids: Iterable[str] | None = None) -> list[tuple[Identity, tuple]]:
    """All (identity, params) pairs of a suite in deterministic order."""
    if suite != "all" and suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}")
    wanted = set(ids) if ids is not None else None
    out = []
    for ident in IDENTITIES:
        if suite != "all" and ident.suite != suite:
            continue
        if wanted is not None and ident.id not in wanted:
            continue
        out.extend((ident, params) for params in sorted(ident.cases(max_n)))
    return out


def check(ident: Identity, params: tuple) -> IdentityReport:
    named = {k: _render_param(v) for k, v in zip(ident.param_names, params)}
    t0 = time.perf_counter()
    try:
        lhs, rhs = ident.sides(*params)
        lt, rt = _render(lhs), _render(rhs)
        status = "pass" if lt == rt else "fail"
    except Exception as exc:  # a raised error inside an identity is a failed instance
        lt, rt, status = f"error: {type(exc).__name__}: {exc}", "", "fail"
    return IdentityReport(ident.id, named, status, lt, rt, time.perf_counter() - t0)


def run_suite(
    suite: str = "all", max_n: int = 10, jobs: int = 1, ids: Iterable[str] | None = None
) -> list[IdentityReport]:
    """Check every instance; report order does not depend on ``jobs``."""
    cases = enumerate_cases(suite, max_n, ids)
    if jobs <= 1:
        return [check(i, p) for i, p in cases]
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(lambda c: check(*c), cases))


def reports_to_json(reports: list[IdentityReport]) -> str:
    return json.dumps([r.to_dict() for r in reports], indent=2)
