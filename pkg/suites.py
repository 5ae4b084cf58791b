"""Identity suites: every operator identity checked exactly against an oracle.

Each suite expands into independent cases that run on a thread pool;
results are reported in case order regardless of completion order.
"""

import logging
import random
import time
from concurrent.futures import ThreadPoolExecutor, as_completed
from dataclasses import dataclass
from functools import partial
from typing import Any, Callable, Dict, List, Sequence, Tuple

from sympy import Poly, symbols
from sympy.polys.specialpolys import symmetric_poly

from .algebra.boson import (
    ChargedSchur,
    boson_series,
    e_mult,
    elementary,
    h_mult,
    schur_product,
    sigma_minus_B,
    to_boson_single,
    to_fermion,
)
from .algebra.exterior import ExtVector, SchubertKind, schubert_ext
from .algebra.fock import (
    FockMonomial,
    FockVector,
    giambelli,
    r_op,
    schubert_fock,
    schubert_op,
    sigma_fock,
    wedge_onto,
)
from .algebra.glrep import BoxBasisVector, FiniteGL, bracket, delta_action, to_fock
from .algebra.partitions import Partition, enumerate_bounded
from .algebra.series import LaurentSeries, compose
from .algebra.vertex import (
    GLElement,
    commutation_bar,
    commutation_plus_minus,
    delta_gl,
    djkm,
    djkm_bosonic,
    djkm_modified,
    djkm_series,
    gamma,
    gamma_star,
    gl_bracket,
)
from .errors import FockcalcError
from .models import CaseResult, SuiteReport

logger = logging.getLogger(__name__)

SUITE_NAMES = ("inverse", "giambelli", "boson", "commutation", "vertex", "djkm", "glrep")

Check = Callable[[], Tuple[bool, Dict[str, Any]]]


@dataclass(frozen=True)
class SuiteCase:
    suite: str
    order: int
    case_id: str
    check: Check


@dataclass(frozen=True)
class SuiteSize:
    """Enumeration bounds of every suite."""
    inverse_weight: int
    inverse_charge: int
    inverse_radius: int
    giambelli_weight: int
    giambelli_length: int
    giambelli_charge: int
    pieri_weight: int
    pieri_index: int
    pieri_charge: int
    eh_degree: int
    vacuum_depth: int
    determinant_weight: int
    ring_weight: int
    ring_pairs: int
    comm_weight: int
    comm_charge: int
    comm_radius: int
    vertex_weight: int
    vertex_charge: int
    vertex_radius: int
    djkm_weight: int
    djkm_charge: int
    djkm_radius: int
    lie_pairs: int
    gl_max_n: int
    gl_max_r: int
    gl_pairs: int


SIZES = {
    "small": SuiteSize(
        inverse_weight=3, inverse_charge=1, inverse_radius=3,
        giambelli_weight=4, giambelli_length=3, giambelli_charge=1,
        pieri_weight=4, pieri_index=3, pieri_charge=1, eh_degree=5, vacuum_depth=2, determinant_weight=3,
        ring_weight=3, ring_pairs=5,
        comm_weight=2, comm_charge=1, comm_radius=2,
        vertex_weight=2, vertex_charge=1, vertex_radius=2,
        djkm_weight=2, djkm_charge=0, djkm_radius=3, lie_pairs=5,
        gl_max_n=4, gl_max_r=2, gl_pairs=10,
    ),
    "default": SuiteSize(
        inverse_weight=6, inverse_charge=2, inverse_radius=5,
        giambelli_weight=6, giambelli_length=4, giambelli_charge=2,
        pieri_weight=6, pieri_index=5, pieri_charge=2, eh_degree=8, vacuum_depth=3, determinant_weight=5,
        ring_weight=4, ring_pairs=20,
        comm_weight=4, comm_charge=2, comm_radius=4,
        vertex_weight=4, vertex_charge=2, vertex_radius=4,
        djkm_weight=4, djkm_charge=2, djkm_radius=5, lie_pairs=20,
        gl_max_n=6, gl_max_r=3, gl_pairs=50,
    ),
}


def _vec_json(v: Any) -> Any:
    return v.to_json() if hasattr(v, "to_json") else str(v)


def _series_json(s: LaurentSeries) -> Dict[str, Any]:
    return s.to_json(lambda v: _series_json(v) if isinstance(v, LaurentSeries) else _vec_json(v))


def _seed(m: int, lam: Partition) -> FockVector:
    return FockVector({FockMonomial(m, lam): 1})


def _label(m: int, lam: Partition) -> str:
    return str(FockMonomial(m, lam))


# -- inverse ----------------------------------------------------------------

def check_inverse(raising: bool, m: int, lam: Partition, radius: int) -> Tuple[bool, Dict[str, Any]]:
    """σ̄₊(z)σ₊(z) = id or σ̄₋(z)σ₋(z) = id on [b]_{m+λ}."""
    f = _seed(m, lam)
    if raising:
        inner = schubert_fock(SchubertKind.PLUS, f, (0, radius))
        out = compose(schubert_op(SchubertKind.BAR_PLUS), inner, (0, radius), (0, None))
    else:
        inner = schubert_fock(SchubertKind.MINUS, f, (-max(lam.weight, radius), 0))
        out = compose(schubert_op(SchubertKind.BAR_MINUS), inner, (-radius, 0), (None, 0))
    ok = out.coeffs == {0: f}
    return ok, {} if ok else {"seed": FockMonomial(m, lam).to_json(), "series": _series_json(out)}


def _inverse_cases(size: SuiteSize) -> List[Tuple[str, Check]]:
    cases = []
    for m in range(-size.inverse_charge, size.inverse_charge + 1):
        for lam in enumerate_bounded(size.inverse_weight, size.inverse_weight):
            for raising in (True, False):
                name = "bar+ plus" if raising else "bar- minus"
                cases.append((f"{name} {_label(m, lam)}",
                              partial(check_inverse, raising, m, lam, size.inverse_radius)))
    return cases


# -- giambelli --------------------------------------------------------------

def check_giambelli(m: int, lam: Partition) -> Tuple[bool, Dict[str, Any]]:
    got = giambelli(lam, m)
    expected = _seed(m, lam)
    ok = got == expected
    return ok, {} if ok else {"seed": FockMonomial(m, lam).to_json(), "actual": got.to_json()}


def _giambelli_cases(size: SuiteSize) -> List[Tuple[str, Check]]:
    return [
        (_label(m, lam), partial(check_giambelli, m, lam))
        for m in range(-size.giambelli_charge, size.giambelli_charge + 1)
        for lam in enumerate_bounded(size.giambelli_weight, size.giambelli_length)
    ]


# -- boson ------------------------------------------------------------------

def check_pieri(lam: Partition, i: int, vertical: bool, m: int = 0) -> Tuple[bool, Dict[str, Any]]:
    """σ_i ↔ h_i (or σ̄_i ↔ (-1)^i e_i) on [b]_{m+λ} under the boson–fermion correspondence."""
    fermionic = to_boson_single(sigma_fock(i, _seed(m, lam), bar=vertical), m)
    s = ChargedSchur({lam: 1}, m)
    bosonic = (-1) ** i * e_mult(i, s) if vertical else h_mult(i, s)
    ok = fermionic == bosonic
    return ok, {} if ok else {"seed": FockMonomial(m, lam).to_json(), "i": i,
                              "fock": fermionic.to_json(), "pieri": bosonic.to_json()}


def check_eh_convolution(n: int) -> Tuple[bool, Dict[str, Any]]:
    """Σ_j (-1)^j e_j h_{n-j} = 0 for n >= 1."""
    total = ChargedSchur({}, 0)
    for j in range(n + 1):
        total = total + (-1) ** j * schur_product(elementary(j), ChargedSchur.schur((n - j,)))
    ok = not total
    return ok, {} if ok else {"n": n, "sum": total.to_json()}


def _nested_items(s: Any, prefix: Tuple[int, ...] = ()):
    if not isinstance(s, LaurentSeries):
        yield prefix, s
        return
    for e, v in s.items():
        yield from _nested_items(v, prefix + (e,))


def _nested_map(s: Any, fn: Callable[[Any], Any]) -> Any:
    if not isinstance(s, LaurentSeries):
        return fn(s)
    return s.map_coeffs(lambda v: _nested_map(v, fn), _nested_map(s.zero, fn))


def _bar_plus_chain(apply: Callable[[Any, Tuple[int, int]], LaurentSeries], v: Any, r: int, degree: int) -> Any:
    """σ̄₊(z_1)…σ̄₊(z_r) v, nested with z_r outermost (it acts first)."""
    def step(x: Any, k: int) -> Any:
        series = apply(x, (0, degree)).with_var(f"z{k}")
        if k == 1:
            return series
        return series.map_coeffs(lambda y: step(y, k - 1), None)
    return step(v, r)


def check_elementary_lemma(m: int, r: int) -> Tuple[bool, Dict[str, Any]]:
    """σ̄₊(z_1)…σ̄₊(z_r) b_{m-r} = Σ_j (-1)^j e_j(z) b_{m-r+j} on M."""
    nested = _bar_plus_chain(lambda x, win: schubert_ext(SchubertKind.BAR_PLUS, x, win),
                             ExtVector.b(m - r), r, r)
    zs = symbols(f"z1:{r + 1}")
    expected: Dict[Tuple[int, ...], ExtVector] = {}
    for j in range(r + 1):
        e_j = Poly(symmetric_poly(j, *zs) if j else 1, *zs)
        for exps, c in e_j.as_dict().items():
            # nested order is z_r, …, z_1
            key = tuple(reversed(exps))
            expected[key] = ExtVector({(m - r + j,): (-1) ** j * int(c)})
    got = {k: v for k, v in _nested_items(nested) if v}
    ok = got == expected
    return ok, {} if ok else {"m": m, "r": r, "got": {str(k): _vec_json(v) for k, v in got.items()}}


def check_vacuum_identity(m: int, r: int) -> Tuple[bool, Dict[str, Any]]:
    """b^r_m ∧ σ̄₊(z_1)…σ̄₊(z_r)[b]_{m-r} = [b]_m on the window [0, r+1]^r."""
    prefix = ExtVector({tuple(range(m, m - r, -1)): 1})
    nested = _bar_plus_chain(lambda x, win: schubert_fock(SchubertKind.BAR_PLUS, x, win),
                             FockVector.vacuum(m - r), r, r + 1)
    wedged = _nested_map(nested, lambda v: wedge_onto(prefix, v))
    got = {k: v for k, v in _nested_items(wedged) if v}
    ok = got == {(0,) * r: FockVector.vacuum(m)}
    return ok, {} if ok else {"m": m, "r": r, "got": {str(k): _vec_json(v) for k, v in got.items()}}


def check_sigma_minus_determinant(kind: SchubertKind, lam: Partition) -> Tuple[bool, Dict[str, Any]]:
    """Δ_λ(D(z)H) entrywise equals D(z) carried over from F, for D = σ₋ or σ̄₋."""
    window = (-lam.weight - 1, 0)
    bosonic = sigma_minus_B(kind, ChargedSchur({lam: 1}, 0), window)
    fermionic = boson_series(schubert_fock(kind, _seed(0, lam), window), 0)
    ok = bosonic == fermionic
    return ok, {} if ok else {"kind": kind.value, "shape": lam.to_json(),
                              "boson": _series_json(bosonic), "fock": _series_json(fermionic)}


def check_sigma_minus_ring(kind: SchubertKind, lam: Partition, mu: Partition) -> Tuple[bool, Dict[str, Any]]:
    """D(z)(s·t) = D(z)s · D(z)t on B."""
    s, t = ChargedSchur({lam: 1}, 0), ChargedSchur({mu: 1}, 0)
    window = (-(lam.weight + mu.weight), 0)
    left = sigma_minus_B(kind, schur_product(s, t), window)
    ds, dt = sigma_minus_B(kind, s, window), sigma_minus_B(kind, t, window)
    for e in range(window[0], 1):
        expected = ChargedSchur({}, 0)
        for a in range(e, 1):
            expected = expected + schur_product(ds.coeff(a), dt.coeff(e - a))
        if left.coeff(e) != expected:
            return False, {"kind": kind.value, "s": lam.to_json(), "t": mu.to_json(), "exponent": e,
                           "product": left.coeff(e).to_json(), "expected": expected.to_json()}
    return True, {}


def _boson_cases(size: SuiteSize, seed: int) -> List[Tuple[str, Check]]:
    cases: List[Tuple[str, Check]] = []
    for m in range(-size.pieri_charge, size.pieri_charge + 1):
        for lam in enumerate_bounded(size.pieri_weight, size.pieri_weight):
            for i in range(size.pieri_index + 1):
                label = _label(m, lam)
                cases.append((f"h_{i} {label}", partial(check_pieri, lam, i, False, m)))
                cases.append((f"e_{i} {label}", partial(check_pieri, lam, i, True, m)))
    for n in range(1, size.eh_degree + 1):
        cases.append((f"EH degree {n}", partial(check_eh_convolution, n)))
    for r in range(1, size.vacuum_depth + 1):
        for m in (-1, 0, 2):
            cases.append((f"elementary lemma m={m} r={r}", partial(check_elementary_lemma, m, r)))
            cases.append((f"vacuum identity m={m} r={r}", partial(check_vacuum_identity, m, r)))
    lowering = (SchubertKind.MINUS, SchubertKind.BAR_MINUS)
    for lam in enumerate_bounded(size.determinant_weight, size.determinant_weight):
        for kind in lowering:
            cases.append((f"determinant {kind.value} {lam}", partial(check_sigma_minus_determinant, kind, lam)))
    rng = random.Random(f"{seed}/boson")
    shapes = enumerate_bounded(size.ring_weight, size.ring_weight)
    for k in range(size.ring_pairs):
        lam, mu = rng.choice(shapes), rng.choice(shapes)
        kind = rng.choice(lowering)
        cases.append((f"ring #{k} {kind.value} {lam}·{mu}", partial(check_sigma_minus_ring, kind, lam, mu)))
    return cases


# -- commutation ------------------------------------------------------------

def check_commutation(bar: bool, m: int, lam: Partition, radius: int) -> Tuple[bool, Dict[str, Any]]:
    rule = commutation_bar if bar else commutation_plus_minus
    window = (-radius, radius)
    lhs, rhs = rule(_seed(m, lam), window, window)
    ok = lhs == rhs
    return ok, {} if ok else {"seed": FockMonomial(m, lam).to_json(),
                              "lhs": _series_json(lhs), "rhs": _series_json(rhs)}


def check_noncommutation() -> Tuple[bool, Dict[str, Any]]:
    """σ_{-1}σ_2[b]_0 = [b]_{0+(1)} while σ_2σ_{-1}[b]_0 = 0."""
    vac = FockVector.vacuum(0)
    first = sigma_fock(-1, sigma_fock(2, vac))
    second = sigma_fock(2, sigma_fock(-1, vac))
    ok = first == FockVector.basis_vector(0, (1,)) and not second
    return ok, {} if ok else {"sigma_-1 sigma_2": first.to_json(), "sigma_2 sigma_-1": second.to_json()}


def _commutation_cases(size: SuiteSize) -> List[Tuple[str, Check]]:
    cases: List[Tuple[str, Check]] = [("sigma_-1 sigma_2 vs sigma_2 sigma_-1", check_noncommutation)]
    for m in range(-size.comm_charge, size.comm_charge + 1):
        for lam in enumerate_bounded(size.comm_weight, size.comm_weight):
            cases.append((f"plus/minus {_label(m, lam)}", partial(check_commutation, False, m, lam, size.comm_radius)))
            cases.append((f"bar {_label(m, lam)}", partial(check_commutation, True, m, lam, size.comm_radius)))
    return cases


# -- vertex -----------------------------------------------------------------

def check_gamma(star: bool, m: int, lam: Partition, radius: int) -> Tuple[bool, Dict[str, Any]]:
    """All evaluation methods of Γ(z) (or Γ*(z)) agree on the window."""
    f = _seed(m, lam)
    window = (-radius, radius)
    op = gamma_star if star else gamma
    methods = ("operator", "explicit", "bosonic") if star else ("operator", "bosonic")
    reference = op(f, window, "direct")
    for method in methods:
        other = op(f, window, method)
        if other != reference:
            return False, {"seed": FockMonomial(m, lam).to_json(), "method": method,
                           "direct": _series_json(reference), "other": _series_json(other)}
    return True, {}


def check_r_commutes(m: int, lam: Partition, j: int) -> Tuple[bool, Dict[str, Any]]:
    """R(z)σ_j = σ_j R(z)."""
    f = _seed(m, lam)
    left = r_op(sigma_fock(j, f)).coeffs
    right = r_op(f).map_coeffs(lambda v: sigma_fock(j, v), FockVector()).coeffs
    right = {e: v for e, v in right.items() if v}
    ok = left == right
    return ok, {} if ok else {"seed": FockMonomial(m, lam).to_json(), "j": j}


def check_normal_ordering(m: int, lam: Partition, i: int, j: int) -> Tuple[bool, Dict[str, Any]]:
    """δ̂ = δ - 1 on the diagonal i = j <= 0 and δ̂ = δ elsewhere, both evaluations."""
    f = _seed(m, lam)
    expected = djkm(i, j, f)
    if i == j and i <= 0:
        expected = expected - f
    direct = djkm_modified(i, j, f)
    generating = djkm_modified(i, j, f, "generating")
    ok = direct == expected and generating == expected
    if lam.weight == 0 and m == 0 and i == j and i <= 0:
        ok = ok and not direct
    return ok, {} if ok else {"seed": FockMonomial(m, lam).to_json(), "i": i, "j": j,
                              "direct": direct.to_json(), "generating": generating.to_json()}


def _vertex_cases(size: SuiteSize) -> List[Tuple[str, Check]]:
    cases: List[Tuple[str, Check]] = []
    charges = range(-size.vertex_charge, size.vertex_charge + 1)
    for m in charges:
        for lam in enumerate_bounded(size.vertex_weight, size.vertex_weight):
            cases.append((f"gamma {_label(m, lam)}", partial(check_gamma, False, m, lam, size.vertex_radius)))
            cases.append((f"gamma_star {_label(m, lam)}", partial(check_gamma, True, m, lam, size.vertex_radius)))
            for j in (-2, 0, 2):
                cases.append((f"R sigma_{j} {_label(m, lam)}", partial(check_r_commutes, m, lam, j)))
    for lam in enumerate_bounded(2, 2):
        for i in range(-3, 2):
            for j in range(-3, 2):
                cases.append((f"normal order ({i},{j}) {_label(0, lam)}", partial(check_normal_ordering, 0, lam, i, j)))
    return cases


# -- djkm -------------------------------------------------------------------

def check_djkm(m: int, lam: Partition, radius: int) -> Tuple[bool, Dict[str, Any]]:
    """z^i w^{-j} of δ_m(z, w) is b_i ∧ (β_j ⌟ ·), fock side and boson side."""
    f = _seed(m, lam)
    window = (-radius, radius)
    series = djkm_series(f, window, window)
    bosonic = djkm_bosonic(to_boson_single(f, m), window, window)
    for i in range(-radius, radius + 1):
        for j in range(-radius, radius + 1):
            expected = djkm(i, j, f)
            got = series.coeff(i).coeff(-j)
            if got != expected:
                return False, {"seed": FockMonomial(m, lam).to_json(), "i": i, "j": j,
                               "expected": expected.to_json(), "actual": got.to_json()}
            boson_got = to_fermion(bosonic.coeff(i).coeff(-j))
            if boson_got != expected:
                return False, {"seed": FockMonomial(m, lam).to_json(), "i": i, "j": j, "side": "boson",
                               "expected": expected.to_json(), "actual": boson_got.to_json()}
    return True, {}


def _random_gl(rng: random.Random, terms: int = 3, reach: int = 4) -> GLElement:
    return GLElement(
        ((rng.randint(-reach, reach), rng.randint(-reach, reach)), rng.choice((-2, -1, 1, 2)))
        for _ in range(terms)
    )


def check_lie_homomorphism(a: GLElement, b: GLElement, m: int, lam: Partition) -> Tuple[bool, Dict[str, Any]]:
    """δ([A, B]) = δ(A)δ(B) - δ(B)δ(A)."""
    f = _seed(m, lam)
    left = delta_gl(gl_bracket(a, b), f)
    right = delta_gl(a, delta_gl(b, f)) - delta_gl(b, delta_gl(a, f))
    ok = left == right
    return ok, {} if ok else {"A": a.to_json(), "B": b.to_json(), "seed": FockMonomial(m, lam).to_json()}


def _djkm_cases(size: SuiteSize, seed: int) -> List[Tuple[str, Check]]:
    cases: List[Tuple[str, Check]] = []
    for m in range(-size.djkm_charge, size.djkm_charge + 1):
        for lam in enumerate_bounded(size.djkm_weight, size.djkm_weight):
            cases.append((f"generating {_label(m, lam)}", partial(check_djkm, m, lam, size.djkm_radius)))
    rng = random.Random(seed)
    seeds = enumerate_bounded(size.djkm_weight, size.djkm_weight)
    for k in range(size.lie_pairs):
        a, b = _random_gl(rng), _random_gl(rng)
        lam = rng.choice(seeds)
        m = rng.randint(-size.djkm_charge, size.djkm_charge)
        cases.append((f"lie #{k} {_label(m, lam)}", partial(check_lie_homomorphism, a, b, m, lam)))
    return cases


# -- glrep ------------------------------------------------------------------

def check_gl_law(a: FiniteGL, b: FiniteGL, r: int) -> Tuple[bool, Dict[str, Any]]:
    """δ([A, B]) = [δ(A), δ(B)] on every box shape, and δ matches the gl_∞ action on F."""
    n = a.n
    ab = bracket(a, b)
    a_inf = a.to_gl_element()
    for v in BoxBasisVector.box_basis(r, n):
        left = delta_action(ab, v)
        right = delta_action(a, delta_action(b, v)) - delta_action(b, delta_action(a, v))
        if left != right:
            return False, {"A": a.to_json(), "B": b.to_json(), "r": r, "shape": next(iter(v.keys())).to_json()}
        if to_fock(delta_action(a, v)) != delta_gl(a_inf, to_fock(v)):
            return False, {"A": a.to_json(), "r": r, "shape": next(iter(v.keys())).to_json(), "check": "fock"}
    return True, {}


def _glrep_cases(size: SuiteSize, seed: int) -> List[Tuple[str, Check]]:
    cases: List[Tuple[str, Check]] = []
    for n in range(1, size.gl_max_n + 1):
        for r in range(1, min(size.gl_max_r, n) + 1):
            rng = random.Random(f"{seed}/{n}/{r}")
            for k in range(size.gl_pairs):
                a, b = FiniteGL.random(n, rng), FiniteGL.random(n, rng)
                cases.append((f"gl_{n} r={r} #{k}", partial(check_gl_law, a, b, r)))
    return cases


# -- runner -----------------------------------------------------------------

def build_cases(name: str, size: str = "default", seed: int = 20240) -> List[SuiteCase]:
    """Expand a suite name (or ``all``) into its cases."""
    if size not in SIZES:
        raise ValueError(f"unknown suite size {size!r}, expected one of {', '.join(SIZES)}")
    if name != "all" and name not in SUITE_NAMES:
        raise ValueError(f"unknown suite {name!r}, expected one of {', '.join(SUITE_NAMES)} or all")
    bounds = SIZES[size]
    builders = {
        "inverse": lambda: _inverse_cases(bounds),
        "giambelli": lambda: _giambelli_cases(bounds),
        "boson": lambda: _boson_cases(bounds, seed),
        "commutation": lambda: _commutation_cases(bounds),
        "vertex": lambda: _vertex_cases(bounds),
        "djkm": lambda: _djkm_cases(bounds, seed),
        "glrep": lambda: _glrep_cases(bounds, seed),
    }
    names: Sequence[str] = SUITE_NAMES if name == "all" else (name,)
    cases: List[SuiteCase] = []
    for suite in names:
        for label, check in builders[suite]():
            cases.append(SuiteCase(suite, len(cases), f"{suite}/{label}", check))
    return cases


def _run_case(case: SuiteCase) -> CaseResult:
    try:
        passed, detail = case.check()
        return CaseResult(case.suite, case.case_id, passed, detail)
    except FockcalcError as e:
        logger.debug(f"{case.case_id} raised {type(e).__name__}: {e}")
        return CaseResult(case.suite, case.case_id, False, error=f"{type(e).__name__}: {e}")


def run_cases(name: str, size: str, cases: Sequence[SuiteCase], workers: int = 1) -> SuiteReport:
    report = SuiteReport(name, size)
    start = time.perf_counter()
    logger.info(f"Running suite {name} ({size}): {len(cases)} cases with {workers} workers")
    results: Dict[int, CaseResult] = {}
    if workers <= 1:
        for case in cases:
            results[case.order] = _run_case(case)
    else:
        with ThreadPoolExecutor(max_workers=workers) as executor:
            future_to_case = {executor.submit(_run_case, case): case for case in cases}
            for future in as_completed(future_to_case):
                case = future_to_case[future]
                results[case.order] = future.result()
                logger.debug(f"{'✓' if results[case.order].passed else '✗'} {case.case_id}")
    report.results = [results[k] for k in sorted(results)]
    report.elapsed = time.perf_counter() - start
    logger.info(f"Suite {name} complete: {report.passed}/{report.total} passed in {report.elapsed:.1f}s")
    if not report.ok:
        logger.warning(f"First failure: {report.first_failure().case_id}")
    return report


def run_suite(name: str, size: str = "default", workers: int = 1, seed: int = 20240) -> SuiteReport:
    """Run one suite (or ``all``) and aggregate the results."""
    return run_cases(name, size, build_cases(name, size, seed), workers)
