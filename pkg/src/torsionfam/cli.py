"""Command-line entry point and reproducible end-to-end pipelines.

Subcommands: ``torsion`` (torsion of a complex file and its valuations
at degeneration points), ``analyze`` (full deformation reports),
``eta-check`` (ray invariance of an eta ledger, optionally fed by a
family complex), ``conway`` (knot pipeline with oracle comparison),
and ``selftest`` (bundled corpus and cross-module invariants).

Reports exist in two renderings: a human-readable text form and a
versioned line-oriented key-value document (``--format structured``)
meant for test harnesses; the structured form is byte-identical across
runs on identical inputs.  Exit status is 0 when every check passes,
1 on a failed verdict, 2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import random
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from . import __version__
from .complexes import (
    CONVENTION_TAG,
    BasedChainComplex,
    conjugate_complex,
    direct_sum,
    is_generically_acyclic,
    torsion,
)
from .corpus import bundled_direct_sum, circle_family, torus3_family
from .dvr import analyze
from .eta import (
    ArgPairing,
    EtaProfile,
    JumpRecord,
    ray_invariant_check,
    signs_from_reports,
)
from .fileio import (
    ParseError,
    dump_complex,
    dump_knot,
    dump_ledger,
    load_complex,
    load_knot,
    load_ledger,
    load_presentation,
)
from .groupring import GroupRingElem, Word, fox_derivative
from .knots import alexander_from_fox, bundled_knots, conway_from_seifert, conway_normalize
from .linalg import Matrix
from .poly import Poly
from .ratfunc import RatFunc, cayley, conj_family
from .scalars import GaussRat, format_gauss, parse_gauss

__all__ = ["JobSpec", "Report", "run", "selftest", "main"]


@dataclass(frozen=True)
class JobSpec:
    """One CLI invocation: a command, its inputs, and its options."""

    command: str
    input_paths: tuple[str, ...] = ()
    options: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.command not in ("torsion", "analyze", "eta-check", "conway", "selftest"):
            raise ValueError(f"unknown command {self.command!r}")
        object.__setattr__(self, "input_paths", tuple(self.input_paths))


class Report:
    """Ordered items and named verdicts; renders text or structured."""

    def __init__(self, command: str):
        self.command = command
        self.items: list[tuple[str, str]] = []
        self.checks: list[tuple[str, bool]] = []
        self.notes: list[str] = []

    def item(self, key: str, value) -> None:
        self.items.append((key, str(value)))

    def check(self, name: str, ok: bool) -> None:
        self.checks.append((name, bool(ok)))

    def note(self, text: str) -> None:
        self.notes.append(text)

    @property
    def all_pass(self) -> bool:
        return all(ok for _, ok in self.checks)

    def structured(self) -> str:
        lines = [
            "torsionfam-report v1",
            f"tool torsionfam {__version__}",
            f"convention {CONVENTION_TAG}",
            f"command {self.command}",
        ]
        for key, value in self.items:
            lines.append(f"item {key} {value}")
        for text in self.notes:
            lines.append(f"note {text}")
        for name, ok in self.checks:
            lines.append(f"check {name} {'pass' if ok else 'fail'}")
        lines.append(f"verdict {'pass' if self.all_pass else 'fail'}")
        return "\n".join(lines) + "\n"

    def text(self) -> str:
        lines = [f"torsionfam {__version__} :: {self.command} (convention {CONVENTION_TAG})"]
        for key, value in self.items:
            lines.append(f"  {key} = {value}")
        for note in self.notes:
            lines.append(f"  note: {note}")
        for name, ok in self.checks:
            lines.append(f"  [{'PASS' if ok else 'FAIL'}] {name}")
        lines.append(f"verdict: {'pass' if self.all_pass else 'fail'}")
        return "\n".join(lines) + "\n"


# -- degeneration point discovery -------------------------------------------


def _integer_divisors(n: int, limit: int = 10**12) -> list[int]:
    n = abs(n)
    if n == 0:
        raise ValueError("no divisors of zero")
    if n > limit:
        raise ValueError(
            "auto discovery infeasible: coefficients too large, supply --t0"
        )
    out = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            out.append(n // d)
        d += 1
    return sorted(set(out))


def rational_real_roots(p: Poly) -> tuple[list[Fraction], int]:
    """Real rational roots of a Q(i) polynomial, with leftover degree.

    Returns (roots, leftover) where roots lists each distinct real
    rational root and leftover is the degree still unaccounted for
    after dividing out those roots with multiplicity; a positive
    leftover means zeros outside the exact rational search (complex or
    irrational).
    """
    if p.is_zero():
        raise ValueError("root search on the zero polynomial")
    # strip zero roots
    roots: list[Fraction] = []
    work = p
    t_zero_mult = work.valuation_at(GaussRat.zero())
    if t_zero_mult:
        roots.append(Fraction(0))
        lin = Poly([GaussRat.zero(), GaussRat.one()])
        for _ in range(t_zero_mult):
            work = work // lin
    if work.degree == 0:
        return roots, 0
    # real integer-cleared polynomial p * conj(p)
    real = work * work.conj()
    denom_lcm = 1
    for c in real.coeffs:
        denom_lcm = denom_lcm * c.re.denominator // _gcd(denom_lcm, c.re.denominator)
    ints = [int(c.re * denom_lcm) for c in real.coeffs]
    const = next(c for c in ints if c != 0)
    lead = ints[-1]
    candidates: set[Fraction] = set()
    for a in _integer_divisors(const):
        for b in _integer_divisors(lead):
            candidates.add(Fraction(a, b))
            candidates.add(Fraction(-a, b))
    found = [r for r in sorted(candidates) if work.evaluate(GaussRat(r)).is_zero()]
    accounted = t_zero_mult
    for r in found:
        accounted += work.valuation_at(GaussRat(r))
    roots.extend(found)
    return sorted(roots), p.degree - accounted


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def discover_centers(value: RatFunc) -> tuple[list[Fraction], int]:
    """Real rational zeros and poles of a torsion value, with leftovers."""
    roots_num, left_num = rational_real_roots(value.num)
    roots_den, left_den = ([], 0)
    if value.den.degree > 0:
        roots_den, left_den = rational_real_roots(value.den)
    centers = sorted(set(roots_num) | set(roots_den))
    return centers, left_num + left_den


# -- command implementations --------------------------------------------------


def _parse_t0_option(raw: Optional[str]) -> Optional[list[GaussRat]]:
    """None for 'auto'/missing, else the explicit list of points."""
    if raw is None or raw == "auto":
        return None
    out = []
    for tok in raw.split(","):
        try:
            out.append(parse_gauss(tok))
        except ValueError as exc:
            raise ValueError(f"bad --t0 value {tok!r}: {exc}") from exc
    return out


def _resolve_centers(report: Report, value: RatFunc, t0_option) -> list[GaussRat]:
    explicit = _parse_t0_option(t0_option)
    if explicit is not None:
        return explicit
    centers, leftover = discover_centers(value)
    if leftover:
        report.note(
            f"{leftover} zero/pole degrees of the torsion lie outside exact "
            "rational search (irrational or non-real); supply --t0 to analyze them"
        )
    return [GaussRat(c) for c in centers]


def _read_text(path: str) -> str:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            return handle.read()
    except OSError as exc:
        raise ValueError(f"cannot read {path}: {exc}") from exc


def _load_family(path: str):
    """Load a complex from a complex file or a presentation file.

    Presentation files are pushed through the twisted presentation
    complex of their representation; they carry no duality section.
    """
    text = _read_text(path)
    header = next(
        (line.split("#", 1)[0].strip() for line in text.splitlines()
         if line.split("#", 1)[0].strip()),
        "",
    )
    if header == "presentation v1":
        names, relators, rho = load_presentation(text, path)
        from .groupring import presentation_complex

        return presentation_complex(len(names), relators, rho), None
    return load_complex(text, path)


def _key_of_point(t0: GaussRat) -> str:
    return format_gauss(t0)


def _cmd_torsion(job: JobSpec) -> Report:
    report = Report("torsion")
    for path in job.input_paths:
        cplx, _ = _load_family(path)
        report.item("input", path)
        report.item("ranks", " ".join(str(r) for r in cplx.ranks))
        acyclic = is_generically_acyclic(cplx)
        report.check(f"{path}:generically-acyclic", acyclic)
        if not acyclic:
            continue
        value = torsion(cplx).value
        report.item("torsion.value", value)
        for t0 in _resolve_centers(report, value, job.options.get("t0")):
            report.item(
                f"torsion.valuation.{_key_of_point(t0)}", value.valuation(t0)
            )
    return report


def _load_duality(job: JobSpec, inline: Optional[list[Matrix]]):
    opt = job.options.get("duality", "on")
    if opt == "off":
        return None
    if opt == "on":
        return inline
    text = _read_text(opt)
    _, pairing = load_complex(text, opt)
    if pairing is None:
        raise ValueError(f"{opt} contains no duality section")
    return pairing


def _cmd_analyze(job: JobSpec) -> Report:
    report = Report("analyze")
    for path in job.input_paths:
        cplx, inline = _load_family(path)
        report.item("input", path)
        pairing = _load_duality(job, inline)
        acyclic = is_generically_acyclic(cplx)
        report.check(f"{path}:generically-acyclic", acyclic)
        if not acyclic:
            continue
        value = torsion(cplx).value
        report.item("torsion.value", value)
        for t0 in _resolve_centers(report, value, job.options.get("t0")):
            key = _key_of_point(t0)
            rep = analyze(cplx, t0, duality=pairing)
            report.item(f"analysis.{key}.nu", rep.nu)
            report.item(f"analysis.{key}.chi", rep.chi)
            report.item(
                f"analysis.{key}.dims", " ".join(str(d) for d in rep.dims.dims)
            )
            if rep.middle_dim_parity is not None:
                report.item(f"analysis.{key}.middle_parity", rep.middle_dim_parity)
            report.item(f"analysis.{key}.sign_flip", rep.sign_flip)
            report.check(f"{path}:{key}:nu-equals-chi", rep.nu == rep.chi)
            if rep.duality_ok is not None:
                report.check(f"{path}:{key}:duality", rep.duality_ok)
    return report


def _cmd_eta_check(job: JobSpec) -> Report:
    report = Report("eta-check")
    for path in job.input_paths:
        profile, signs = load_ledger(_read_text(path), path)
        report.item("input", path)
        report.item("dimclass", profile.dimension_class)
        report.item("jumps", len(profile.jumps))
        for warning in profile.warnings():
            report.note(f"{path}: {warning}")
        complex_path = job.options.get("complex")
        if complex_path:
            cplx, inline = _load_family(complex_path)
            pairing = _load_duality(job, inline)
            reports = [
                analyze(cplx, GaussRat(rec.t0), duality=pairing)
                for rec in profile.jumps
            ]
            for rec, rep in zip(profile.jumps, reports):
                parity_ok = (
                    rep.middle_dim_parity == rec.sigma_odd % 2
                    and rep.nu % 2 == rec.sigma_odd % 2
                )
                report.check(
                    f"{path}:jump-{rec.t0}:family-parity", parity_ok
                )
                if rec.nu is not None:
                    report.check(
                        f"{path}:jump-{rec.t0}:nu-matches-family", rec.nu == rep.nu
                    )
            if signs is None:
                signs = signs_from_reports(reports)
                report.item("signs.synthesized",
                            " ".join("+" if s == 1 else "-" for s in signs))
        if signs is None:
            raise ValueError(
                f"{path}: ledger has no signs and no family complex was given"
            )
        if profile.slope_data is None:
            # eta itself is reconstructible; report its value at each jump
            from .eta import eta_at_jump

            values = profile.interval_values()
            for rec, before, after in zip(profile.jumps, values, values[1:]):
                report.item(
                    f"eta.at.{rec.t0}", eta_at_jump(after, before, rec.sigma_even)
                )
        verdict = ray_invariant_check(profile, signs)
        if verdict.failing_interval is not None:
            report.item("ray.failing_interval", verdict.failing_interval)
        report.item(
            "ray.phases", " ".join(str(p) for p in verdict.phases)
        )
        report.check(f"{path}:ray-invariance", verdict.passed)
    return report


def _cmd_conway(job: JobSpec) -> Report:
    report = Report("conway")
    for path in job.input_paths:
        pres, seifert, _names = load_knot(_read_text(path), path)
        report.item("input", path)
        delta = alexander_from_fox(pres)
        nabla = conway_normalize(delta)
        report.item("alexander", repr(delta))
        report.item("conway", repr(nabla))
        if seifert is not None:
            oracle = conway_from_seifert(seifert)
            report.item("conway.oracle", repr(oracle))
            report.check(f"{path}:oracle-agreement", nabla == oracle)
    return report


# -- self test ----------------------------------------------------------------


def _selftest_ledgers() -> list[tuple[str, EtaProfile, list[int], bool]]:
    """Four bundled ledgers: three passing, one designed to fail."""
    jump1 = JumpRecord(Fraction(0), 1, 0, 1)
    jump2 = JumpRecord(Fraction(1), 2, 1, 2)
    pairing = ArgPairing((Fraction(1, 4), Fraction(1, 3)), (2, 6), 2)
    ledgers = [
        ("class3", EtaProfile(3, Fraction(1, 2), (jump1, jump2)), [1, -1, -1], True),
        ("su", EtaProfile(1, Fraction(0), (jump1,)), [1, -1], True),
        (
            "argclass",
            EtaProfile(1, Fraction(1, 2), (jump1,), (pairing, pairing)),
            [1, -1],
            True,
        ),
        ("broken", EtaProfile(3, Fraction(1, 2), (jump1, jump2)), [1, 1, 1], False),
    ]
    return ledgers


def selftest(seed: int = 20250) -> Report:
    """Run the bundled corpus and cross-module invariants."""
    report = Report("selftest")
    rng = random.Random(seed)
    report.item("seed", seed)

    # circle family
    circ = circle_family(cayley() - 1, centers=(Fraction(0),))
    tau = torsion(circ.complex).value
    report.check("circle.torsion", tau == cayley() - 1)
    rep = analyze(circ.complex, GaussRat(0), duality=list(circ.pairing))
    report.check(
        "circle.analysis",
        rep.nu == rep.chi == 1 and rep.sign_flip and rep.duality_ok
        and rep.middle_dim_parity == 1,
    )

    # 3-torus family: two routes to the exponent plus duality
    tor = torus3_family()
    rep = analyze(tor.complex, GaussRat(0), duality=list(tor.pairing))
    report.check("torus3.analysis", rep.nu == rep.chi == 0 and rep.duality_ok)
    report.check("torus3.dims", rep.dims.dims == (1, 2, 1, 0))

    # direct sums: everything adds
    both = direct_sum(circ.complex, tor.complex)
    rep_a = analyze(circ.complex, GaussRat(0))
    rep_b = analyze(tor.complex, GaussRat(0))
    rep_ab = analyze(both, GaussRat(0))
    report.check(
        "directsum.additivity",
        rep_ab.nu == rep_a.nu + rep_b.nu
        and rep_ab.dims.dims
        == tuple(
            a + b
            for a, b in zip(
                rep_a.dims.dims + (0,) * 4, rep_b.dims.dims + (0,) * 4
            )
        )[: len(rep_ab.dims.dims)],
    )
    bundle = bundled_direct_sum()
    ok = True
    for c in bundle.centers:
        r = analyze(bundle.complex, GaussRat(c), duality=list(bundle.pairing))
        ok = ok and r.nu == r.chi and bool(r.duality_ok)
    report.check("directsum.bundle", ok)

    # five knots against the oracle
    expected = {
        "unknot": (1,),
        "trefoil": (1, 0, 1),
        "figure8": (1, 0, -1),
        "5_1": (1, 0, 3, 0, 1),
        "5_2": (1, 0, 2),
    }
    for name, (pres, seif) in bundled_knots().items():
        nab = conway_normalize(alexander_from_fox(pres))
        oracle = conway_from_seifert(seif)
        report.check(
            f"knots.{name}",
            nab == oracle and nab.coefficients == expected[name],
        )

    # four ledgers
    for name, profile, signs, expect_pass in _selftest_ledgers():
        verdict = ray_invariant_check(profile, signs)
        report.check(f"ledgers.{name}", verdict.passed == expect_pass)

    # round trips
    text = dump_complex(tor.complex, list(tor.pairing))
    cplx2, pairing2 = load_complex(text)
    report.check(
        "roundtrip.complex",
        cplx2 == tor.complex and tuple(pairing2) == tor.pairing,
    )
    pres, seif = bundled_knots()["trefoil"]
    p2, s2, _ = load_knot(dump_knot(pres, seif))
    report.check("roundtrip.knot", p2 == pres and s2 == seif)
    prof = _selftest_ledgers()[2][1]
    prof2, signs2 = load_ledger(dump_ledger(prof, [1, -1]))
    report.check("roundtrip.ledger", prof2 == prof and signs2 == [1, -1])

    # randomized invariants (smaller counts than the acceptance suite)
    ok = True
    for _ in range(50):
        letters = [
            (rng.randrange(3), rng.choice([1, -1]))
            for _ in range(rng.randrange(0, 10))
        ]
        w = Word(letters)
        total = GroupRingElem.zero()
        for g in range(3):
            xg = GroupRingElem.of_word(Word.generator(g)) - GroupRingElem.one()
            total = total + fox_derivative(w, g) * xg
        ok = ok and total == GroupRingElem.of_word(w) - GroupRingElem.one()
    report.check("invariants.fox-identity", ok)

    ok = True
    for _ in range(50):
        f = _random_ratfunc(rng)
        g = _random_ratfunc(rng)
        t0 = GaussRat(rng.randrange(-2, 3))
        ok = ok and f.valuation(t0) + g.valuation(t0) == (f * g).valuation(t0)
    report.check("invariants.valuation-additivity", ok)

    from .dvr import snf_local

    ok = True
    for _ in range(20):
        mat = _random_local_matrix(rng, rng.choice([2, 3]))
        ok = ok and snf_local(mat, 0, "first") == snf_local(mat, 0, "last")
    report.check("invariants.snf-pivots", ok)

    ok = True
    for _ in range(10):
        cplx = _random_acyclic_complex(rng)
        ok = ok and torsion(conjugate_complex(cplx)).value == conj_family(
            torsion(cplx).value
        )
    report.check("invariants.galois", ok)

    passed = sum(1 for _, okk in report.checks if okk)
    report.item("checks.passed", passed)
    report.item("checks.total", len(report.checks))
    return report


def _random_ratfunc(rng: random.Random) -> RatFunc:
    def poly():
        while True:
            p = Poly(
                [
                    GaussRat(rng.randrange(-3, 4), rng.randrange(-2, 3))
                    for _ in range(rng.randrange(1, 4))
                ]
            )
            if not p.is_zero():
                return p

    num = poly() * Poly([GaussRat(-rng.randrange(-2, 3)), GaussRat.one()])
    return RatFunc(num, poly())


def _random_local_matrix(rng: random.Random, n: int) -> Matrix:
    t = RatFunc.var()
    pool = [
        RatFunc.one(),
        t,
        t * t,
        1 + t,
        t * (1 + t),
        RatFunc.zero(),
        RatFunc.coerce(GaussRat(0, 1)) * t,
        2 + t,
    ]
    return Matrix([[rng.choice(pool) for _ in range(n)] for _ in range(n)], n)


def _random_acyclic_complex(rng: random.Random) -> BasedChainComplex:
    from .corpus import _divisor, _unimodular_gauss, elementary_complex

    m = rng.choice([1, 2, 3])
    k = rng.randrange(1, m + 1)
    a = rng.choice([1, 2])
    centers = [Fraction(rng.randrange(-1, 2))]
    diag = [_divisor(rng, centers, real_only=False) for _ in range(a)]
    core = Matrix.diagonal(diag, RatFunc.zero())
    u = _unimodular_gauss(rng, a)
    v = _unimodular_gauss(rng, a)
    mat = u.mul_with_zero(core, RatFunc.zero()).mul_with_zero(v, RatFunc.zero())
    return elementary_complex(m, k, mat)


# -- dispatch ------------------------------------------------------------------


def run(job: JobSpec) -> Report:
    """Dispatch a job to its command implementation."""
    convention = job.options.get("convention", CONVENTION_TAG)
    if convention != CONVENTION_TAG:
        raise ValueError(
            f"unknown convention {convention!r}; only {CONVENTION_TAG} exists in v1"
        )
    if job.command == "torsion":
        return _cmd_torsion(job)
    if job.command == "analyze":
        return _cmd_analyze(job)
    if job.command == "eta-check":
        return _cmd_eta_check(job)
    if job.command == "conway":
        return _cmd_conway(job)
    if job.command == "selftest":
        return selftest(int(job.options.get("seed", 20250)))
    raise ValueError(f"unknown command {job.command!r}")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="torsionfam",
        description="Exact sign-determined torsion of parameter families, "
        "deformation analysis, and eta-invariant ledger checks.",
    )
    parser.add_argument("--version", action="version", version=f"torsionfam {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument(
            "--format", choices=("text", "structured"), default="text",
            help="output rendering (default: text)",
        )
        p.add_argument(
            "--convention", default=CONVENTION_TAG,
            help="sign convention tag (only FT-cal-1 in v1)",
        )

    p = sub.add_parser("torsion", help="torsion of complex files")
    p.add_argument("inputs", nargs="+", metavar="FILE")
    p.add_argument("--t0", default="auto", help="comma list of points, or 'auto'")
    common(p)

    p = sub.add_parser("analyze", help="deformation reports of complex files")
    p.add_argument("inputs", nargs="+", metavar="FILE")
    p.add_argument("--t0", default="auto", help="comma list of points, or 'auto'")
    p.add_argument(
        "--duality", default="on",
        help="'on' (inline section), 'off', or a file with a duality section",
    )
    common(p)

    p = sub.add_parser("eta-check", help="ray invariance of eta ledgers")
    p.add_argument("inputs", nargs="+", metavar="LEDGER")
    p.add_argument("--complex", default=None, help="family complex feeding the ledger")
    p.add_argument(
        "--duality", default="on",
        help="duality handling for --complex (on/off/file)",
    )
    common(p)

    p = sub.add_parser("conway", help="knot pipeline with Seifert oracle")
    p.add_argument("inputs", nargs="+", metavar="KNOT")
    common(p)

    p = sub.add_parser("selftest", help="bundled corpus and invariants")
    p.add_argument("--seed", type=int, default=20250,
                   help="seed for the randomized invariant samples")
    common(p)
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    options = {}
    for key in ("t0", "duality", "convention", "seed", "complex"):
        if hasattr(args, key) and getattr(args, key) is not None:
            options[key] = getattr(args, key)
    job = JobSpec(
        command=args.command,
        input_paths=tuple(getattr(args, "inputs", ())),
        options=options,
    )
    try:
        report = run(job)
    except (ParseError, ValueError, ZeroDivisionError) as exc:
        print(f"torsionfam: error: {exc}", file=sys.stderr)
        return 2
    rendering = report.structured() if args.format == "structured" else report.text()
    sys.stdout.write(rendering)
    return 0 if report.all_pass else 1


if __name__ == "__main__":
    raise SystemExit(main())
