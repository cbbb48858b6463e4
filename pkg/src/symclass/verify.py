"""Verification suites: every identity the package implements, checked exactly.

Each suite returns a :class:`VerificationReport` listing its checks in a
fixed order.  A failing check carries a small witness (the ``n``, ``k``,
partition or coefficient that differs).
"""
from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources
from itertools import permutations

from . import classes, diffop, group_algebra as ga, vertex, wick
from .combinat import (
    binomial,
    compose,
    contents,
    cycles,
    inverse,
    permutation_of_type,
    factorial,
    pad,
    partition_key,
    partitions_of,
    partitions_up_to,
    z_of,
)
from .scalars import QLaurent
from .symfun import SymF, schur_in_p

__all__ = [
    "Check",
    "VerificationReport",
    "SUITES",
    "run_suite",
    "golden_table",
    "BRACKET_POINTS",
]

BRACKET_POINTS = ((2, 3), (3, 5), (5, 2))


@dataclass
class Check:
    id: str
    passed: bool
    witness: str = ""


@dataclass
class VerificationReport:
    suite: str
    checks: list = field(default_factory=list)
    info: list = field(default_factory=list)
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, cid: str, ok: bool, witness: str = "") -> bool:
        self.checks.append(Check(cid, bool(ok), "" if ok else witness))
        return ok

    def to_text(self, timing: bool = False) -> str:
        n_ok = sum(c.passed for c in self.checks)
        head = f"suite {self.suite}: {n_ok}/{len(self.checks)} checks passed"
        if timing:
            head += f" ({self.seconds:.2f} s)"
        lines = [head]
        for c in self.checks:
            line = f"  {'PASS' if c.passed else 'FAIL'} {c.id}"
            if c.witness:
                line += f"  [{c.witness}]"
            lines.append(line)
        lines.extend("  info: " + s for s in self.info)
        return "\n".join(lines)

    def to_json(self, timing: bool = False) -> dict:
        out = {
            "suite": self.suite,
            "passed": self.passed,
            "checks": [{"id": c.id, "passed": c.passed, "witness": c.witness} for c in self.checks],
            "info": list(self.info),
        }
        if timing:
            out["seconds"] = round(self.seconds, 3)
        return out


def _fmt(mu) -> str:
    return "(" + ",".join(map(str, mu)) + ")"


def _first_diff(a: dict, b: dict) -> str:
    keys = sorted(set(a) | set(b), key=lambda k: partition_key(k) if isinstance(k, tuple) else (0, k))
    for k in keys:
        if a.get(k, 0) != b.get(k, 0):
            return f"at {k}: {a.get(k, 0)} != {b.get(k, 0)}"
    return ""


def _symf_diff(f: SymF, g: SymF) -> str:
    return _first_diff(f.terms, g.terms)


def golden_table() -> dict:
    """The published table of ``p_m(Xi)`` in the a-basis, as shipped with the package."""
    text = resources.files("symclass").joinpath("data/jm_table.json").read_text()
    doc = json.loads(text)
    return {
        row["m"]: {tuple(t["kappa"]): Fraction(t["coeff"]) for t in row["terms"]} for row in doc["rows"]
    }


# suites --------------------------------------------------------------------------


def suite_table(rep: VerificationReport, max_n: int = 7, max_deg: int = 8) -> None:
    golden = golden_table()
    table = classes.jm_table(6)
    for m in range(1, 7):
        rep.add(f"table/row p_{m}", table[m] == golden[m], _first_diff(table[m], golden[m]))
    rep.info.append(f"nonzero table coefficients: {sum(len(r) for r in table.values())}")
    for kappa in partitions_up_to(8):
        if not kappa or sum(kappa) + len(kappa) > 8:
            continue
        low = sum(kappa) + len(kappa) - 2
        series = classes.phi_series(kappa, low + 1)
        mults = 1
        for part in set(kappa):
            mults *= factorial(kappa.count(part))
        want = Fraction(1, factorial(sum(kappa)) * mults)
        ok = series.valuation() == low and series[low] == want
        rep.add(f"table/leading phi{_fmt(kappa)}", ok, f"valuation {series.valuation()}, coeff {series[low]}")
    for m in range(1, 7):
        rep.add(f"table/no a_1 in p_{m}", (1,) not in table[m])
    for n in range(1, max_n + 1):
        for m in range(1, 7):
            want = ga.class_decomposition(ga.jm_power_sum(n, m))
            got = classes.to_classes(table[m], n)
            rep.add(f"table/substitution n={n} m={m}", got == want, _first_diff(got, want))
    # the same rows from the generating operator acting on p_1^n
    for n in range(1, min(max_n, 6) + 1):
        for m in range(1, 7):
            lhs = vertex.d_operator(m, n)(SymF.p(*(1,) * n))
            rhs = SymF.zero()
            for kappa, c in table[m].items():
                rhs = rhs + classes.a_sym(kappa, n) * c
            rep.add(f"table/generating n={n} m={m}", lhs == rhs, _symf_diff(lhs, rhs))


def suite_jucys(rep: VerificationReport, max_n: int = 7, max_deg: int = 8) -> None:
    for n in range(1, max_n + 1):
        for k in range(n):
            want = ga.GAElem(
                n, [(s, 1) for s in ga.all_permutations(n) if len(cycles(s)) == n - k]
            )
            rep.add(f"jucys/e_{k} n={n}", ga.jm_elementary(n, k) == want, f"n={n} k={k}")
    for n in range(1, min(max_n, 6) + 1):
        for k in range(1, 4):
            rep.add(f"jucys/central p_{k} n={n}", ga.is_central(ga.jm_power_sum(n, k)))
            if k < n:
                rep.add(f"jucys/central e_{k} n={n}", ga.is_central(ga.jm_elementary(n, k)))
    for n in range(1, min(max_n, 6) + 1):
        parts = partitions_of(n)
        # rank of the products e_{alpha_2} e_{alpha_3} ... in the center
        rows = []
        for alpha in parts:
            u = ga.GAElem.identity(n)
            for a in alpha[1:]:
                u = ga.ga_mul(u, ga.jm_elementary(n, a))
            dec = ga.class_decomposition(u)
            rows.append([dec.get(g, Fraction(0)) for g in parts])
        rep.add(f"jucys/e-basis n={n}", _rank(rows) == len(parts))


def _rank(rows) -> int:
    m = [list(map(Fraction, r)) for r in rows]
    rank = 0
    cols = len(m[0]) if m else 0
    for c in range(cols):
        piv = next((i for i in range(rank, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        for i in range(len(m)):
            if i != rank and m[i][c]:
                f = m[i][c] / m[rank][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[rank])]
        rank += 1
    return rank


def suite_eigen(rep: VerificationReport, max_n: int = 7, max_deg: int = 8) -> None:
    for k in range(1, 7):
        op = vertex.d_operator(k, max_n)
        for n in range(1, max_n + 1):
            lhs = op(SymF.p(*(1,) * n))
            rhs = ga.frobenius(ga.jm_power_sum(n, k))
            rep.add(f"eigen/oracle D_{k} n={n}", lhs == rhs, _symf_diff(lhs, rhs))
    for k in range(1, 6):
        op = vertex.d_operator(k, max_n)
        for lam in partitions_up_to(max_n):
            if not lam:
                continue
            s = schur_in_p(lam)
            eig = sum(c**k for c in contents(lam))
            rep.add(f"eigen/content D_{k} s{_fmt(lam)}", op(s) == s * eig, f"lambda={lam} k={k}")


def suite_gps(rep: VerificationReport, max_n: int = 7, max_deg: int = 8) -> None:
    top = min(max_n, 6)
    for n in range(2, top + 1):
        for rho in partitions_up_to(n):
            if not rho or 1 in rho:
                continue
            H = wick.gps_operator(rho, n)
            crho = ga.class_sum(n, rho)
            for beta in partitions_of(n):
                cb = ga.class_sum(n, beta)
                prod = ga.central_product(crho, cb)
                want = SymF({g: c * Fraction(factorial(n), z_of(g)) for g, c in prod.items()})
                got = H(ga.frobenius(cb))
                rep.add(f"gps/H{_fmt(rho)} C{_fmt(beta)}", got == want, _symf_diff(got, want))
    n = min(max_deg, 8)
    rep.add(f"gps/H(2) = D_1 deg<={n}", wick.gps_operator((2,), n).same_on(vertex.d_operator(1, n), n))
    for rho in [(2,), (3,), (2, 2), (3, 2)]:
        r = sum(rho)
        base = wick.gps_operator(rho, 6)
        # another permutation of the same cycle type
        shift = tuple((i + 1) % r for i in range(r))
        alt = compose(compose(shift, permutation_of_type(rho)), inverse(shift))
        rep.add(f"gps/sigma-invariance {_fmt(rho)}", wick.gps_operator(rho, 6, sigma=alt).same_on(base, 6))


def suite_w1inf(rep: VerificationReport, max_n: int = 7, max_deg: int = 8) -> None:
    deg, N = 6, 9
    basis = [SymF.p(*lam) for lam in partitions_up_to(deg)]
    for a, b in BRACKET_POINTS:
        a, b = Fraction(a), Fraction(b)
        for k in range(-3, 4):
            for l in range(-3, 4):
                A, B = vertex.t_at(k, a, N), vertex.t_at(l, b, N)
                C = vertex.t_at(k + l, a * b, N)
                witness = ""
                for f in basis:
                    lhs = A(B(f)) - B(A(f))
                    rhs = C(f) * (a**l - b**k)
                    if k == -l:
                        rhs = rhs + f * ((a ** (-k) - b ** (-l)) / (1 - a * b))
                    if lhs != rhs:
                        witness = f"input {f}: {_symf_diff(lhs, rhs)}"
                        break
                rep.add(f"w1inf/bracket (a,b)=({a},{b}) k={k} l={l}", not witness, witness)
    for k in (1, -1, 2, -2):
        v0 = vertex.vertex_mode(0, 8)
        br = diffop.commutator(v0, diffop.boson(k).map_coeffs(QLaurent.const))
        denom = 1 - QLaurent.q(k)
        pred = br.map_coeffs(lambda c: c.exact_div(denom))
        rep.add(f"w1inf/mode V_{k} from [V_0, alpha_{k}]", pred.same_on(vertex.vertex_mode(k, 8), 6))
    rep.add("w1inf/T_00 = 0", not vertex.t_mode(0, 0, 8).restrict(8))
    rep.add("w1inf/T_01 = -E", vertex.t_mode(0, 1, 8).same_on(-diffop.euler(8), 8))
    for k in (1, 2, 3):
        rep.add(f"w1inf/T_{k}0 = -alpha_{k}", vertex.t_mode(k, 0, 8).same_on(-diffop.boson(k), 8))
        rhs = diffop.boson(k) * Fraction(k + 3, 2) - diffop.virasoro_d(k, "d", 8)
        rep.add(f"w1inf/T_{k}1 = (k+3)/2 alpha_{k} - d_{k}", vertex.t_mode(k, 1, 8).same_on(rhs, 8))
    goulden = (vertex.t_mode(0, 2, 8) + vertex.t_mode(0, 1, 8)) * Fraction(-1, 2)
    rep.add("w1inf/D_1 = -(T_02 + T_01)/2", vertex.d_operator(1, 8).same_on(goulden, 8))
    rep.add("w1inf/D_1 closed form", vertex.d_operator(1, 8).same_on(diffop.goulden_closed(8), 8))
    for k in range(1, 6):
        got = vertex.d_operator_bernoulli(k, 7)
        rep.add(f"w1inf/bernoulli D_{k} deg<=7", got.same_on(vertex.d_operator(k, 7), 7))
    for j in range(1, 4):
        for k in (-3, -2, -1, 1, 2, 3):
            lhs = diffop.commutator(vertex.d_operator(j, N), diffop.boson(k))
            rhs = vertex.bracket_prediction(j, k, N)
            rep.add(f"w1inf/[D_{j}, alpha_{k}] in span T_k,m", lhs.same_on(rhs, deg))


def suite_virasoro(rep: VerificationReport, max_n: int = 7, max_deg: int = 8) -> None:
    deg = max(10, max_deg)
    for variant in ("prime", "d"):
        name = "d'" if variant == "prime" else "d"
        for j in range(1, 5):
            for k in range(1, 5):
                lhs = diffop.commutator(diffop.virasoro_d(j, variant, deg), diffop.virasoro_d(k, variant, deg))
                rhs = diffop.virasoro_d(j + k, variant, deg) * (j - k)
                rep.add(f"virasoro/[{name}_{j},{name}_{k}] deg<={deg}", lhs.same_on(rhs, deg))
    for n in range(1, min(max_n, 6) + 1):
        for k in range(1, min(n, 3) + 1):
            d = diffop.virasoro_d(k, "d", n)
            for mu in partitions_of(n):
                u = ga.class_sum(n, mu)
                erased = ga.frobenius(ga.delta_map(u, k, "delta"))
                image = d(ga.frobenius(u))
                same = set(erased.terms) == set(image.terms)
                rep.add(
                    f"virasoro/support delta_{k} C{_fmt(mu)}",
                    same,
                    f"erasure {sorted(erased.terms)} vs d_k {sorted(image.terms)}",
                )
                if same and erased:
                    ratios = ", ".join(
                        f"{_fmt(g)}: {erased.coeff(g) / image.coeff(g)}"
                        for g in sorted(erased.terms, key=partition_key)
                    )
                    rep.info.append(f"ratio ch(delta_{k} C{_fmt(mu)}) / d_{k} ch(C{_fmt(mu)}): {ratios}")


def suite_wick(rep: VerificationReport, max_n: int = 7, max_deg: int = 8) -> None:
    for n in range(1, 5):
        for lam in partitions_of(n):
            got = wick.p_expectation(lam, wick.NU, n, 2 * n)
            want = wick.hss_prediction(lam, lambda a, b: ga.structure_constants(n, a, b), n, 2 * n)
            rep.add(f"wick/HSS {_fmt(lam)}", got == want)
    for r in range(1, 4):
        for rho in partitions_of(r):
            got = wick.p_expectation(rho, wick.MU, 3, 8)
            closed = wick.p_expectation_closed(rho, 3, 8)
            rep.add(f"wick/closed form {_fmt(rho)} M=3", got == closed)
            rep.add(f"wick/a-b symmetry {_fmt(rho)}", closed == closed.swap_sides())
    for rho in [(4,), (2, 2)]:
        got = wick.p_expectation(rho, wick.MU, 4, 8)
        rep.add(f"wick/closed form {_fmt(rho)} M=4", got == wick.p_expectation_closed(rho, 4, 8))
    rep.add("wick/cauchy identity M=2", wick.partition_function(2, 6) == wick.cauchy_log(2, 6))
    for k in range(1, 5):
        word = [(False, i, i) for i in range(1, k + 1)] + [(True, i, i) for i in range(1, k + 1)]
        one = wick.MPoly.constant(k, 0)
        got = wick.wick_expectation(word, M=k, cap=0, propagator=lambda s, t: one)
        rep.add(f"wick/hafnian count k={k}", got == factorial(k))


def suite_pn(rep: VerificationReport, max_n: int = 7, max_deg: int = 8) -> None:
    for lam in partitions_up_to(8):
        for m in range(1, 6):
            rep.add(f"pn/shifted {_fmt(lam)} n={m}", vertex.pn_relation_check(lam, m), f"lambda={lam} n={m}")
    for m in range(1, 5):
        op = vertex.shifted_power_operator(m, 6)
        for lam in partitions_up_to(6):
            if not lam:
                continue
            s = schur_in_p(lam)
            rep.add(f"pn/P_{m} s{_fmt(lam)}", op(s) == s * vertex.shifted_eigen(lam, m))
    bad = 0
    for lam in partitions_up_to(8):
        for m in range(1, 6):
            literal = sum((part - i) ** m - (-i) ** m for i, part in enumerate(lam, start=1))
            rhs = sum(binomial(m, k) * vertex.content_power_sum(lam, k) for k in range(m))
            bad += literal != rhs
    rep.info.append(f"row convention (lambda_i - i): relation fails in {bad} of {len(partitions_up_to(8)) * 5} cases")


def suite_a_structure(rep: VerificationReport, max_n: int = 7, max_deg: int = 8) -> None:
    got = classes.a_structure((2,), (2,), max_n=max_n)
    want = {(2, 2): Fraction(1), (3,): Fraction(4), (1, 1): Fraction(2)}
    rep.add("a-structure/a2 a2", got == want, _first_diff(got, want))
    small = [p for p in partitions_up_to(3)]
    for i, alpha in enumerate(small):
        for beta in small[i:]:
            top = sum(alpha) + sum(beta)
            fits = []
            for offset in range(3):
                if top + offset > max_n:
                    break
                try:
                    fits.append(classes.a_structure(alpha, beta, offset=offset, max_n=max_n))
                except classes.OracleMismatch as exc:
                    fits.append(str(exc))
            ok = all(f == fits[0] and isinstance(f, dict) for f in fits)
            rep.add(f"a-structure/{_fmt(alpha)}x{_fmt(beta)} windows={len(fits)}", ok, str(fits))
    ns = [n for n in range(max_n - 2, max_n + 1) if n >= 1]
    for m in range(1, 5):
        rep.add(f"a-structure/d(m={m}, kappa=()) = table", classes.product_in_a(m) == classes.jm_in_a(m))
        for kappa in partitions_up_to(3):
            if not kappa:
                continue
            coeffs = classes.product_in_a(m, kappa)
            for n in ns:
                try:
                    classes.product_in_a_oracle_check(m, kappa, coeffs, n)
                    rep.add(f"a-structure/p_{m} x a{_fmt(kappa)} n={n}", True)
                except classes.OracleMismatch as exc:
                    rep.add(f"a-structure/p_{m} x a{_fmt(kappa)} n={n}", False, str(exc))


SUITES = {
    "table": suite_table,
    "jucys": suite_jucys,
    "gps": suite_gps,
    "eigen": suite_eigen,
    "w1inf": suite_w1inf,
    "virasoro": suite_virasoro,
    "wick": suite_wick,
    "pn": suite_pn,
    "a-structure": suite_a_structure,
}


def run_suite(name: str, max_n: int = 7, max_deg: int = 8) -> list:
    """Run one suite (or ``"all"``) and return the list of reports."""
    names = list(SUITES) if name == "all" else [name]
    out = []
    for nm in names:
        if nm not in SUITES:
            raise KeyError(nm)
        rep = VerificationReport(nm)
        start = time.perf_counter()
        SUITES[nm](rep, max_n=max_n, max_deg=max_deg)
        rep.seconds = time.perf_counter() - start
        out.append(rep)
    return out
