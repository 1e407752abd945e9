"""Command-line front end.

Subcommands ``analyze``, ``gamma``, ``atypical`` and ``euler`` share the
family flags; output is text or JSON and depends only on the input and seed.

Exit codes: 0 ok, 1 usage or parse error, 2 hypothesis failure, 3 genericity
exhaustion, 4 internal invariant violation.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass

from gmpy2 import mpq

from . import invariants as inv
from .family import FamilySpec, parse_family
from .parser import ParseError, parse_polynomial
from .poly import VarSet, format_polynomial, format_rational

SEED_ENV = "POLARINV_SEED"

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_HYPOTHESIS = 2
EXIT_GENERICITY = 3
EXIT_INTERNAL = 4


class CliError(Exception):
    def __init__(self, code: int, kind: str, message: str):
        self.code = code
        self.kind = kind
        super().__init__(message)


@dataclass(frozen=True)
class RunConfig:
    command: str
    spec: FamilySpec
    at: tuple = ()
    seed: int = 0
    retries: int = inv.DEFAULT_RETRIES
    fmt: str = "text"
    force: bool = False


def parse_value(text: str):
    try:
        p = parse_polynomial(text, VarSet(()))
    except ParseError as exc:
        raise CliError(EXIT_USAGE, "ParseError", f"bad parameter value {text!r}: {exc}") from None
    return p.constant_value()


def _matrix(m):
    return [list(r) for r in m]


def _choice_dict(profile: inv.GammaProfile, seed: int) -> dict:
    chains = []
    for ch in profile.choices:
        chains.append({
            "chain": ch.chain,
            "levels": [
                {
                    "level": lv.level,
                    "attempt": lv.attempt,
                    "matrix": _matrix(lv.matrix),
                    "hyperplane": None if lv.hyperplane is None else {
                        "coefficients": list(lv.hyperplane[0]),
                        "constant": lv.hyperplane[1],
                    },
                }
                for lv in ch.levels
            ],
        })
    primary = chains[0]["levels"] if chains else []
    return {
        "seed": seed,
        "matrix": primary[0]["matrix"] if primary else None,
        "hyperplanes": [lv["hyperplane"] for lv in primary if lv["hyperplane"] is not None],
        "chains": chains,
    }


def _lambda_profile(profile: inv.GammaProfile) -> list:
    return [
        {
            "level": lv.level,
            "defects": [{"min_poly": format_polynomial(a.min_poly), "lambda": a.defect} for a in lv.atypical],
        }
        for lv in profile.levels
    ]


def _rational_roots(polys) -> list:
    out = []
    for p in polys:
        if p.total_degree() == 1:
            coeffs = p.univariate_coefficients()
            out.append(-coeffs[0] / coeffs[1])
    return out


class Analysis:
    """Runs the pipeline once and serves the sub-results."""

    def __init__(self, config: RunConfig):
        self.config = config
        self.family = parse_family(config.spec)
        self.warnings: list[str] = []
        self._hyp = None
        self._profile = None

    @property
    def hypothesis(self) -> inv.HypothesisReport:
        if self._hyp is None:
            self._hyp = inv.verify_hypothesis(self.family, self.config.seed)
        return self._hyp

    def require_hypothesis(self):
        if not self.hypothesis.passed:
            if not self.config.force:
                raise inv.HypothesisFailed(self.hypothesis)
            self.warnings.append("hypothesis failed; raw values computed under --force, verdict tags suppressed")

    @property
    def profile(self) -> inv.GammaProfile:
        if self._profile is None:
            self._profile = inv.gamma_star_profile(self.family, self.config.seed, self.config.retries)
            for lv in self._profile.levels:
                for a in lv.atypical:
                    if a.defect < 0:
                        self.warnings.append(
                            f"negative defect {a.defect} at level {lv.level} over {format_polynomial(a.min_poly)}"
                        )
        return self._profile

    def singular_values(self) -> list:
        sv = inv.singular_values(self.family)
        if sv is None:
            return []
        if sv.is_zero():
            return ["every fibre"]
        return [format_polynomial(p) for p in inv.irreducible_factors(sv)]

    def default_values(self) -> list:
        if self.config.at:
            return sorted(set(self.config.at))
        values = set(_rational_roots(self.profile.atypical_values()))
        sv = inv.singular_values(self.family)
        if sv is not None and not sv.is_zero():
            values |= set(_rational_roots(inv.irreducible_factors(sv)))
        try:
            values.add(inv.generic_value(self.family, self.profile, self.config.seed))
        except ValueError:
            pass
        return sorted(values)

    def base(self) -> dict:
        fam = self.family
        return {
            "family": {
                "F": format_polynomial(fam.F),
                "parameter": fam.param,
                "space": list(fam.space),
                "n": fam.n,
                "degree": fam.d,
                "mode": self.config.spec.mode,
                "constant_family": fam.is_constant_family,
            },
        }

    def fibers(self, values) -> list:
        out = []
        for c in values:
            try:
                out.append(inv.cw_model(self.family, c, self.config.seed, self.profile).as_dict())
            except inv.NonIsolatedSingularities as exc:
                self.warnings.append(f"c = {format_rational(c)}: {exc}")
        return out

    def verdicts(self, values) -> list:
        out = []
        for c in values:
            v = inv.verdict(self.family, c, self.config.seed, self.profile, self.hypothesis, self.config.force)
            out.append(v.as_dict())
        return out

    def report(self) -> dict:
        cmd = self.config.command
        out = self.base()
        out["hypothesis"] = self.hypothesis.as_dict()
        self.require_hypothesis()
        if cmd == "analyze":
            values = self.default_values()
            out["generic_choice"] = _choice_dict(self.profile, self.config.seed)
            out["atypical_values"] = [format_polynomial(p) for p in self.profile.atypical_values()]
            out["lambda_profile"] = _lambda_profile(self.profile)
            out["gamma_profile"] = self.profile.as_dict()
            out["fibers"] = self.fibers(values)
            out["verdicts"] = self.verdicts(values)
            jumps = []
            if not self.singular_values() == ["every fibre"]:
                for c in values:
                    try:
                        jumps.append({"c": format_rational(c), "jump": inv.euler_jump(self.family, c, self.config.seed, self.profile)})
                    except ValueError as exc:
                        self.warnings.append(f"no Euler jump at c = {format_rational(c)}: {exc}")
            out["euler_jumps"] = jumps
        elif cmd == "gamma":
            out["generic_choice"] = _choice_dict(self.profile, self.config.seed)
            out["gamma_profile"] = self.profile.as_dict()
            out["gamma_at"] = [
                {"c": format_rational(c), "gamma": list(self.profile.at(c)), "lambda": list(self.profile.defects(c))}
                for c in sorted(set(self.config.at))
            ]
        elif cmd == "atypical":
            out["generic_choice"] = _choice_dict(self.profile, self.config.seed)
            out["atypical_values"] = [format_polynomial(p) for p in self.profile.atypical_values()]
            out["lambda_profile"] = _lambda_profile(self.profile)
            out["singular_values"] = self.singular_values()
        elif cmd == "euler":
            values = self.default_values()
            out["generic_choice"] = _choice_dict(self.profile, self.config.seed)
            out["fibers"] = self.fibers(values)
        out["warnings"] = list(self.warnings)
        return out


# -- text rendering ---------------------------------------------------------------


def _level_line(lv: dict) -> str:
    atyp = ", ".join(
        f"{a['min_poly']} = 0: gamma {a['gamma']} (defect {a['defect']})" for a in lv["atypical"]
    )
    return f"  gamma^{lv['level']}: generic {lv['generic']}" + (f"; {atyp}" if atyp else "; no atypical values")


def render_text(report: dict) -> str:
    lines = []
    fam = report["family"]
    lines.append(f"family: {fam['F']} = 0   (parameter {fam['parameter']}, space {', '.join(fam['space'])})")
    hyp = report["hypothesis"]
    lines.append(f"hypothesis: {'pass' if hyp['pass'] else 'FAIL'} ({'; '.join(hyp['diagnostics'])})")
    if "generic_choice" in report:
        gc = report["generic_choice"]
        lines.append(
            f"seed: {gc['seed']}   matrix: {json.dumps(gc['matrix'])}   hyperplanes: {json.dumps(gc['hyperplanes'])}"
        )
    if "atypical_values" in report:
        av = report["atypical_values"]
        lines.append("atypical values: " + ("{" + ", ".join(f"{p} = 0" for p in av) + "}" if av else "{}"))
    if "singular_values" in report:
        sv = report["singular_values"]
        shown = [p if p == "every fibre" else f"{p} = 0" for p in sv]
        lines.append("singular fibres: " + ("{" + ", ".join(shown) + "}" if sv else "none"))
    if "gamma_profile" in report:
        lines.append("gamma profile:")
        lines.extend(_level_line(lv) for lv in report["gamma_profile"])
    for g in report.get("gamma_at", []):
        lines.append(f"at {g['c']}: gamma* = {g['gamma']}  lambda* = {g['lambda']}")
    for f in report.get("fibers", []):
        lines.append(
            f"fibre {f['c']}: mu = {f['mu']}  gamma* = {f['gamma']}  chi = {f['chi']}  cells = {f['cells']}"
        )
    for j in report.get("euler_jumps", []):
        lines.append(f"euler jump at {j['c']}: chi(X_u) - chi(X_c) = {j['jump']}")
    for v in report.get("verdicts", []):
        state = "t-equisingular at infinity" if v["t_equisingular_at_infinity"] else "not t-equisingular at infinity"
        tags = f"  [{', '.join(v['implied'])}]" if v["implied"] else ""
        lines.append(f"verdict at {v['c']}: {state}{tags}")
    for w in report.get("warnings", []):
        lines.append(f"warning: {w}")
    return "\n".join(lines) + "\n"


# -- entry point ------------------------------------------------------------------


class _ArgumentParser(argparse.ArgumentParser):
    # argparse exits with 2 on usage errors, which is the hypothesis-failure code here
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    common = _ArgumentParser(add_help=False)
    common.add_argument("--mode", choices=("fiber", "general"), default="fiber")
    common.add_argument("--poly", required=True, help="polynomial expression")
    common.add_argument("--vars", required=True, help="comma-separated space variables")
    common.add_argument("--param", default="t")
    common.add_argument("--at", action="append", default=[], help="parameter value(s), comma-separated")
    common.add_argument("--seed", type=int, default=None)
    common.add_argument("--retries", type=int, default=inv.DEFAULT_RETRIES)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--force", action="store_true", help="compute despite a failed hypothesis")
    parser = _ArgumentParser(prog="polarinv", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name in ("analyze", "gamma", "atypical", "euler"):
        sub.add_parser(name, parents=[common])
    return parser


def config_from_args(args) -> RunConfig:
    seed = args.seed
    if seed is None:
        env = os.environ.get(SEED_ENV)
        seed = int(env) if env else 0
    space = tuple(v.strip() for v in args.vars.split(",") if v.strip())
    try:
        spec = FamilySpec(args.poly, space, args.param, args.mode)
    except ValueError as exc:
        raise CliError(EXIT_USAGE, "UsageError", str(exc)) from None
    at = []
    for chunk in args.at:
        for item in chunk.split(","):
            if item.strip():
                at.append(mpq(parse_value(item.strip())))
    return RunConfig(args.command, spec, tuple(at), seed, args.retries, args.format, args.force)


def run(config: RunConfig) -> dict:
    try:
        return Analysis(config).report()
    except ParseError as exc:
        raise CliError(EXIT_USAGE, type(exc).__name__, str(exc)) from None
    except inv.HypothesisFailed as exc:
        raise CliError(EXIT_HYPOTHESIS, "HypothesisFailed", str(exc)) from None
    except inv.RetriesExhausted as exc:
        raise CliError(EXIT_GENERICITY, "RetriesExhausted", str(exc)) from None
    except (inv.NegativeTopCellCount, inv.InvariantViolation) as exc:
        raise CliError(EXIT_INTERNAL, type(exc).__name__, str(exc)) from None
    except ValueError as exc:
        raise CliError(EXIT_USAGE, type(exc).__name__, str(exc)) from None


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    fmt = args.format
    try:
        config = config_from_args(args)
        report = run(config)
    except CliError as exc:
        if fmt == "json":
            err = {"error": {"type": exc.kind, "message": str(exc), "exit_code": exc.code}}
            sys.stdout.write(json.dumps(err, indent=2) + "\n")
        else:
            sys.stderr.write(f"error ({exc.kind}): {exc}\n")
        return exc.code
    if fmt == "json":
        sys.stdout.write(json.dumps(report, indent=2) + "\n")
    else:
        sys.stdout.write(render_text(report))
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
