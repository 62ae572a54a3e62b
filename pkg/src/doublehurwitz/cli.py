"""Command-line front end.

    doublehurwitz hurwitz --mu 2 --nu 1,1 --r 1
    doublehurwitz closed-form --mu 5,2 --nu 4,3 --format latex
    doublehurwitz verify all

Exit codes: 0 ok, 2 usage error, 3 input on a wall, 4 invariant violation.
A JSON config file (--config) may supply any flag; flags given on the
command line win.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import asdict, dataclass, fields
from fractions import Fraction

from .errors import (HurwitzError, InexactDivision, InconsistentSystem, NotAdjacent, OnWall,
                     SingularSystem, SizeMismatch)

EXIT_OK, EXIT_USAGE, EXIT_WALL, EXIT_INVARIANT = 0, 2, 3, 4
FORMATS = ("text", "json", "latex")


class UsageError(Exception):
    pass


@dataclass
class JobConfig:
    command: str
    mu: tuple = ()
    nu: tuple = ()
    r: int | None = None
    g: int | None = None
    N: int | None = None
    order: str | None = None
    format: str = "text"
    seed: int = 0
    output: str | None = None
    oracle: bool = False
    suite: str | None = None
    wall: str | None = None
    check: bool = False
    interpolate: bool = False

    def hurwitz_input(self):
        from .partitions import HurwitzInput
        if not self.mu or not self.nu:
            raise UsageError("--mu and --nu are required")
        try:
            return HurwitzInput(self.mu, self.nu)
        except SizeMismatch as exc:
            raise UsageError(str(exc)) from exc
        except ValueError as exc:
            raise UsageError(str(exc)) from exc

    def resolve_r(self, inp, required: bool = True) -> int | None:
        """r from --r or --g; both may be given if they agree."""
        if self.r is None and self.g is None:
            if required:
                raise UsageError("one of --r or --g is required")
            return None
        if self.g is not None:
            r = inp.r_for_genus(self.g)
            if self.r is not None and self.r != r:
                raise UsageError(f"--r {self.r} disagrees with --g {self.g} (r = 2g-2+m+n = {r})")
            return r
        if self.r < 0:
            raise UsageError("--r must be non-negative")
        return self.r

    def resolve_g(self, inp) -> int:
        if self.g is not None:
            if self.r is not None and inp.r_for_genus(self.g) != self.r:
                raise UsageError("--r and --g disagree")
            return self.g
        if self.r is not None:
            try:
                return inp.genus_for_r(self.r)
            except ValueError as exc:
                raise UsageError(str(exc)) from exc
        raise UsageError("one of --r or --g is required")

    def ordering(self):
        if not self.order:
            return None, None
        from .patterns import parse_order
        try:
            return parse_order(self.order)
        except ValueError as exc:
            raise UsageError(str(exc)) from exc


def _parts(text) -> tuple:
    if isinstance(text, (list, tuple)):
        return tuple(int(x) for x in text)
    try:
        parts = tuple(int(x) for x in str(text).split(",") if x.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated positive integers, got {text!r}")
    if not parts or any(p <= 0 for p in parts):
        raise argparse.ArgumentTypeError(f"expected comma-separated positive integers, got {text!r}")
    return parts


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="doublehurwitz",
                                     description="Exact double Hurwitz numbers and their structure.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, shape=True, genus=False, series=False, order=False, fmt=True):
        p.add_argument("--config", help="JSON file with default flag values")
        p.add_argument("--output", help="write to this file instead of stdout")
        if shape:
            p.add_argument("--mu", type=_parts, help="parts of mu, e.g. 5,2")
            p.add_argument("--nu", type=_parts, help="parts of nu, e.g. 4,3")
        if genus:
            p.add_argument("--r", type=int, help="number of simple branch points")
            p.add_argument("--g", type=int, help="genus (r = 2g-2+m+n)")
        if series:
            p.add_argument("--N", type=int, help="truncation order")
        if order:
            p.add_argument("--order", help="operator order 'mu indices/nu indices', e.g. 1,2/1,2")
        if fmt:
            p.add_argument("--format", choices=FORMATS)
        p.add_argument("--seed", type=int, help="seed for chamber sampling")

    p = sub.add_parser("hurwitz", help="H^r(mu, nu) from the closed form")
    common(p, genus=True, series=True, order=True)
    p.add_argument("--oracle", action="store_true", default=None,
                   help="use the character formula (also valid on walls)")
    p = sub.add_parser("oracle", help="H^r(mu, nu) from the character formula")
    common(p, genus=True)
    p = sub.add_parser("closed-form", help="the closed form of the series")
    common(p, order=True)
    p = sub.add_parser("series", help="H_{mu,nu}(z) through z^N")
    common(p, series=True, order=True)
    p = sub.add_parser("chamber", help="chamber signature, patterns and phi ordering")
    common(p, order=True)
    p = sub.add_parser("poly", help="chamber polynomial of genus g")
    common(p, genus=True)
    p.add_argument("--check", action="store_true", default=None,
                   help="run degree/parity/positivity checks on sampled chamber points")
    p.add_argument("--interpolate", action="store_true", default=None,
                   help="also interpolate oracle values and compare")
    p = sub.add_parser("wallcross", help="compare both sides of the wall crossing formula")
    common(p, series=True)
    p.add_argument("--wall", required=False, help="wall as 'I/J', e.g. 1/1 or 1,2/1")
    p = sub.add_parser("verify", help="run self-verification suites")
    common(p, shape=False)
    p.add_argument("suite", help="oracle-equivalence | fock-identities | spp | wallcross | all")
    return parser


def config_from_args(args: argparse.Namespace) -> JobConfig:
    values: dict = {}
    if getattr(args, "config", None):
        try:
            with open(args.config) as fh:
                values = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise UsageError(f"cannot read config {args.config}: {exc}") from exc
        if not isinstance(values, dict):
            raise UsageError("config file must hold a JSON object")
    known = {f.name for f in fields(JobConfig)}
    unknown = set(values) - known
    if unknown:
        raise UsageError(f"unknown config keys: {sorted(unknown)}")
    for key in ("mu", "nu"):
        if key in values:
            try:
                values[key] = _parts(values[key])
            except argparse.ArgumentTypeError as exc:
                raise UsageError(str(exc)) from exc
    for key, val in vars(args).items():
        if key in known and val is not None:
            values[key] = val
    values["command"] = args.command
    cfg = JobConfig(**values)
    if cfg.format not in FORMATS:
        raise UsageError(f"unknown format {cfg.format!r}")
    return cfg


# -- commands -------------------------------------------------------------------

def _dump(data) -> str:
    return json.dumps(data, indent=2, sort_keys=True)


def cmd_hurwitz(cfg: JobConfig) -> str:
    from .partitions import hurwitz_oracle, require_off_wall
    from .patterns import hurwitz_number
    from .series import fmt_rational
    inp = cfg.hurwitz_input()
    r = cfg.resolve_r(inp)
    use_oracle = cfg.oracle or cfg.command == "oracle"
    if use_oracle:
        value = hurwitz_oracle(inp, r)
        method = "oracle"
    else:
        require_off_wall(inp)
        mo, no = cfg.ordering()
        value = hurwitz_number(inp, r, cfg.N, mo, no)
        method = "closed-form"
    if cfg.format == "json":
        twice = r + 2 - inp.m - inp.n
        return _dump({"mu": list(inp.mu), "nu": list(inp.nu), "r": r,
                      "g": twice // 2 if twice % 2 == 0 else None,
                      "value": fmt_rational(value), "method": method})
    if cfg.format == "latex":
        return rf"H^{{{r}}}({_tex_parts(inp.mu)},{_tex_parts(inp.nu)}) = {_tex_rational(value)}"
    return fmt_rational(value)


def _tex_parts(parts) -> str:
    return "(" + ",".join(map(str, parts)) + ")"


def _tex_rational(q: Fraction) -> str:
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    sign = "-" if q < 0 else ""
    return rf"{sign}\frac{{{abs(q.numerator)}}}{{{q.denominator}}}"


def cmd_closed_form(cfg: JobConfig) -> str:
    from .patterns import closed_form
    inp = cfg.hurwitz_input()
    mo, no = cfg.ordering()
    cf = closed_form(inp, mo, no)
    if cfg.format == "json":
        return _dump(cf.to_json())
    if cfg.format == "latex":
        return cf.to_latex()
    return cf.to_text()


def cmd_series(cfg: JobConfig) -> str:
    from .patterns import closed_form, evaluate_series
    inp = cfg.hurwitz_input()
    mo, no = cfg.ordering()
    N = 8 if cfg.N is None else cfg.N
    if N < 0:
        raise UsageError("--N must be non-negative")
    s = evaluate_series(closed_form(inp, mo, no), inp, N)
    if cfg.format == "json":
        return _dump({"mu": list(inp.mu), "nu": list(inp.nu), "series": s.to_json()})
    if cfg.format == "latex":
        terms = []
        for k, c in s.items():
            terms.append(f"{_tex_rational(c)}z^{{{k}}}")
        body = " + ".join(terms) or "0"
        return rf"H_{{{_tex_parts(inp.mu)},{_tex_parts(inp.nu)}}}(z) = {body} + O(z^{{{N + 1}}})"
    return s.to_text()


def cmd_chamber(cfg: JobConfig) -> str:
    from .chambers import chamber_signature
    from .patterns import is_totally_negative, phi_ordering, product_formula, run_algorithm
    inp = cfg.hurwitz_input()
    sig = chamber_signature(inp)
    mo, no = cfg.ordering()
    pats = run_algorithm(inp, mo, no)
    phi = phi_ordering(inp)
    tn = is_totally_negative(inp)
    data = {"mu": list(inp.mu), "nu": list(inp.nu), "signature": sig.to_json(),
            "patterns": len(pats), "phi": [str(p) for p in phi], "totally_negative": tn,
            "product_formula": product_formula(inp) if tn else None,
            "reordered": inp.reordered}
    if cfg.format == "json":
        return _dump(data)
    lines = [f"mu = {list(inp.mu)}, nu = {list(inp.nu)}",
             f"signature: {sig.to_text()}",
             f"commutation patterns: {len(pats)}",
             f"phi: {' '.join(data['phi'])}",
             f"totally negative: {'yes' if tn else 'no'}"]
    if tn:
        lines.append(f"product formula arguments: {data['product_formula']}")
    if inp.reordered:
        lines.append("note: parts were not given in decreasing order; signatures use the labels as given")
    return "\n".join(lines)


def cmd_poly(cfg: JobConfig) -> str:
    from .chambers import (chamber_signature, interpolate_polynomial, sample_points,
                           symbolic_polynomial, verify_spp)
    inp = cfg.hurwitz_input()
    g = cfg.resolve_g(inp)
    if g < 0:
        raise UsageError("genus must be non-negative")
    cp = symbolic_polynomial(inp, g)
    report = None
    if cfg.check:
        report = verify_spp(cp, sample_points(chamber_signature(inp), 10, seed=cfg.seed))
    match = None
    if cfg.interpolate:
        match = interpolate_polynomial(inp, g, seed=cfg.seed) == cp.polynomial
    if cfg.format == "json":
        data = cp.to_json()
        if report is not None:
            data["report"] = report.to_json()
            data["seed"] = cfg.seed
        if match is not None:
            data["interpolation_matches"] = match
        out = _dump(data)
    else:
        out = cp.to_text()
        if report is not None:
            out += f"\nchecks (seed {cfg.seed}):\n" + report.to_text()
        if match is not None:
            out += f"\ninterpolation matches: {'yes' if match else 'NO'}"
    if (report is not None and not report.ok) or match is False:
        raise _Invariant(out)
    return out


def cmd_wallcross(cfg: JobConfig) -> str:
    from .chambers import (WallCrossingSpec, find_adjacent, sub_inputs, wall_crossing_lhs,
                           wall_crossing_rhs)
    from .patterns import parse_order
    inp = cfg.hurwitz_input()
    if not cfg.wall:
        raise UsageError("--wall is required, e.g. --wall 1/1")
    try:
        I, J = parse_order(cfg.wall)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    if not set(I) <= set(range(1, inp.m + 1)) or not set(J) <= set(range(1, inp.n + 1)):
        raise UsageError("wall indices out of range")
    N = 10 if cfg.N is None else cfg.N
    spec = WallCrossingSpec.at(inp, I, J)
    p1 = find_adjacent(inp, spec, seed=cfg.seed)
    lhs = wall_crossing_lhs(inp, spec, p1, inp, N)
    rhs = wall_crossing_rhs(inp, spec, N)
    ok = lhs.equal_through(rhs, N)
    a, b = sub_inputs(inp, spec)
    if cfg.format == "json":
        out = _dump({"target": inp.to_json(), "wall": spec.to_json(), "adjacent": p1.to_json(),
                     "sub_inputs": [a.to_json(), b.to_json()], "seed": cfg.seed, "N": N,
                     "lhs": lhs.to_json(), "rhs": rhs.to_json(), "equal": ok})
    else:
        out = "\n".join([
            f"target {list(inp.mu)},{list(inp.nu)}; wall I={list(spec.I)} J={list(spec.J)}; "
            f"delta={spec.delta} d1={spec.d1} d2={spec.d2}",
            f"adjacent chamber point (seed {cfg.seed}): {list(p1.mu)},{list(p1.nu)}",
            f"sub-inputs: {list(a.mu)},{list(a.nu)} and {list(b.mu)},{list(b.nu)}",
            f"LHS = {lhs.to_text()}",
            f"RHS = {rhs.to_text()}",
            f"equal through z^{N}: {'yes' if ok else 'NO'}"])
    if not ok:
        raise _Invariant(out)
    return out


def cmd_verify(cfg: JobConfig) -> str:
    from .verify import SUITES, format_report, run_suite
    if cfg.suite not in SUITES + ("all",):
        raise UsageError(f"unknown suite {cfg.suite!r}; choose from {', '.join(SUITES + ('all',))}")
    results = run_suite(cfg.suite)
    if cfg.format == "json":
        out = _dump({"suite": cfg.suite, "ok": all(r.ok for r in results),
                     "checks": [asdict(r) for r in results]})
    else:
        out = format_report(results)
    if not all(r.ok for r in results):
        raise _Invariant(out)
    return out


COMMANDS = {
    "hurwitz": cmd_hurwitz,
    "oracle": cmd_hurwitz,
    "closed-form": cmd_closed_form,
    "series": cmd_series,
    "chamber": cmd_chamber,
    "poly": cmd_poly,
    "wallcross": cmd_wallcross,
    "verify": cmd_verify,
}


class _Invariant(Exception):
    """Carries the full output of a run whose checks failed."""


def _emit(text: str, cfg: JobConfig | None, stream=None) -> None:
    if cfg is not None and cfg.output:
        with open(cfg.output, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text, file=stream or sys.stdout)


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    cfg = None
    try:
        cfg = config_from_args(args)
        text = COMMANDS[cfg.command](cfg)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OnWall as exc:
        print(f"error: input lies on a wall: {exc}", file=sys.stderr)
        if cfg is not None and cfg.command == "hurwitz":
            print("hint: pass --oracle for the disconnected count on walls", file=sys.stderr)
        return EXIT_WALL
    except _Invariant as exc:
        _emit(str(exc), cfg)
        return EXIT_INVARIANT
    except (AssertionError, InexactDivision, InconsistentSystem, SingularSystem, NotAdjacent) as exc:
        print(f"invariant violation: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    except (HurwitzError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    _emit(text, cfg)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
