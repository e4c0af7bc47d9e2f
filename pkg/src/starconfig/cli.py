"""Command-line surface: structured reports and computer-algebra script export.

Every command builds a plain-dict report and renders it as text, json, or csv
(csv for grid scans only).  Reports are byte-deterministic: identical inputs
produce identical output regardless of the --jobs hint, which is validated
but deliberately not echoed.

Exit codes: 0 computed/verified, 1 theorem check failed (witness printed),
2 usage error, 3 resource cap exceeded.

Environment variables override default caps: STARCONFIG_ENUM_CAP (symbolic
power enumeration), STARCONFIG_DEGREE_CAP (Hilbert function degree cap),
STARCONFIG_POWER_CAP (ordinary-power exponent cap in containment commands).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from fractions import Fraction

from . import decomp, exponents as ex, hilbert, resolution, star
from .errors import ResourceCapError, TheoremViolation, UsageError

monomial_str = ex.monomial_str


def _env_cap(name: str) -> int | None:
    raw = os.environ.get(name)
    if raw is None:
        return None
    try:
        value = int(raw)
    except ValueError:
        raise UsageError(f"{name} must be an integer, got {raw!r}") from None
    if value < 1:
        raise UsageError(f"{name} must be positive, got {value}")
    return value


def _frac_str(q: Fraction | None) -> str | None:
    return None if q is None else f"{q.numerator}/{q.denominator}"


def _ideal_summary(ideal: ex.MonomialIdeal, list_gens: bool = True) -> dict:
    out = {
        "arity": ideal.arity,
        "generator_count": len(ideal.gens),
    }
    if not ideal.is_zero:
        out["alpha"] = ex.alpha(ideal)
        out["omega"] = ex.omega(ideal)
    if list_gens:
        out["generators"] = [monomial_str(g) for g in ideal.gens]
        out["exponents"] = [list(g) for g in ideal.gens]
    return out


# ---------------------------------------------------------------------------
# command implementations: each returns (report_dict, exit_code)


def _cmd_skeleton(args) -> tuple[dict, int]:
    cfg = star.StarConfig(args.s, args.c)
    ideal = star.skeleton_ideal(cfg)
    hv = hilbert.h_vector(ideal, args.c, d_cap=args.degree_cap)
    generic = hilbert.generic_hvector(args.s, args.c)
    report = {
        "command": "skeleton",
        "params": {"s": args.s, "c": args.c},
        "caps": {"degree_cap": args.degree_cap},
        "ideal": _ideal_summary(ideal),
        "h_vector": list(hv.entries),
        "generic_h_vector": list(generic.entries),
        "h_vector_matches_generic": hv.entries == generic.entries,
        "degree": hv.total(),
        "alpha": ex.alpha(ideal),
    }
    return report, 0 if report["h_vector_matches_generic"] else 1


def _cmd_symbolic(args) -> tuple[dict, int]:
    cfg = star.StarConfig(args.s, args.c)
    cap = args.enum_cap or star.DEFAULT_ENUM_CAP
    ideal = star.symbolic_power(cfg, args.ell, enum_cap=cap)
    a, o = ex.alpha(ideal), ex.omega(ideal)
    a_formula = star.alpha_symbolic_formula(cfg, args.ell)
    o_formula = star.omega_symbolic_formula(cfg, args.ell)
    report = {
        "command": "symbolic",
        "params": {"s": args.s, "c": args.c, "ell": args.ell},
        "caps": {"enum_cap": cap},
        "ideal": _ideal_summary(ideal, list_gens=len(ideal.gens) <= args.max_listed),
        "alpha": a,
        "omega": o,
        "alpha_formula": a_formula,
        "omega_formula": o_formula,
        "formulas_match": a == a_formula and o == o_formula,
    }
    return report, 0 if report["formulas_match"] else 1


def _cmd_hvector(args) -> tuple[dict, int]:
    cfg = star.StarConfig(args.s, args.c)
    if args.ell == 1:
        ideal = star.skeleton_ideal(cfg)
    else:
        ideal = star.symbolic_power(cfg, args.ell)
    hv = hilbert.h_vector(ideal, args.c, d_cap=args.degree_cap)
    report = {
        "command": "hvector",
        "params": {"s": args.s, "c": args.c, "ell": args.ell},
        "caps": {"degree_cap": args.degree_cap},
        "h_vector": list(hv.entries),
        "degree": hv.total(),
    }
    if args.ell == 2:
        formula = hilbert.ss_hvector_formula(args.s, args.c)
        report["formula"] = list(formula.entries)
        report["matches_formula"] = hv.entries == formula.entries
        return report, 0 if report["matches_formula"] else 1
    return report, 0


def _cmd_betti(args) -> tuple[dict, int]:
    shape = resolution.ss_resolution(args.s, args.c)
    ideal = star.symbolic_power(star.StarConfig(args.s, args.c), 2)
    euler_ok = resolution.euler_check(shape, ideal)
    report = {
        "command": "betti",
        "params": {"s": args.s, "c": args.c},
        "caps": {},
        "modules": [
            {"index": i + 1, "terms": [{"twist": t, "rank": r} for t, r in pairs]}
            for i, pairs in enumerate(shape.modules)
        ],
        "euler_check": euler_ok,
    }
    return report, 0 if euler_ok else 1


def _cmd_hb(args) -> tuple[dict, int]:
    matrix = resolution.hb_matrix(args.s, args.m)
    minors = resolution.maximal_minors(matrix)
    verified = resolution.verify_hb(args.s, args.m)
    report = {
        "command": "hb",
        "params": {"s": args.s, "m": args.m},
        "caps": {"det_dimension_cap": resolution.DET_DIMENSION_CAP},
        "matrix_rows": matrix.rows,
        "matrix_cols": matrix.cols,
        "minors": [str(p) for p in minors],
        "minor_ideal_equals_symbolic_power": verified,
    }
    return report, 0 if verified else 1


def _cmd_decomp(args) -> tuple[dict, int]:
    power_ok = decomp.verify_power_decomposition(
        args.s, args.c, args.ell, s_cap=args.s_cap, l_cap=args.l_cap
    )
    sat_ok = decomp.verify_saturation(args.s, args.c, args.ell, s_cap=args.s_cap, l_cap=args.l_cap)
    report = {
        "command": "decomp",
        "params": {"s": args.s, "c": args.c, "ell": args.ell},
        "caps": {"s_cap": args.s_cap, "l_cap": args.l_cap},
        "power_decomposition": power_ok,
        "saturation_identity": sat_ok,
    }
    return report, 0 if power_ok and sat_ok else 1


def _cmd_containment(args) -> tuple[dict, int]:
    contained = decomp.symbolic_in_power(args.s, args.c, args.m, args.r, r_cap=args.power_cap)
    report = {
        "command": "containment",
        "params": {"s": args.s, "c": args.c, "m": args.m, "r": args.r},
        "caps": {"power_cap": args.power_cap},
        "contained": contained,
    }
    n_dim = args.s - 1
    if args.c == n_dim - 1 and n_dim >= 3:
        crit = decomp.criterion(n_dim, args.m, args.r)
        report["criterion_noncontainment"] = crit
        report["criterion_agrees"] = crit != contained
    return report, 0


def _cmd_scan(args) -> tuple[dict, int]:
    rep = decomp.resurgence_scan(args.s, args.c, args.mmax, args.rmax, r_cap=args.power_cap)
    report = {
        "command": "scan",
        "params": {"s": args.s, "c": args.c, "m_max": args.mmax, "r_max": args.rmax},
        "caps": {"power_cap": args.power_cap},
        "entries": [
            {"m": m, "r": r, "contained": contained} for m, r, contained in rep.entries
        ],
        "empirical_sup": _frac_str(rep.empirical_sup),
        "lower_bound": _frac_str(rep.lower_bound),
        "rho_exact": _frac_str(rep.rho),
        "criterion_mismatches": [list(p) for p in rep.criterion_mismatches],
    }
    return report, 0


def _cmd_matroid(args) -> tuple[dict, int]:
    cfg = star.StarConfig(args.s, args.c)
    complex_ = star.skeleton_complex(cfg)
    matroid_ok = star.is_matroid(complex_)
    sr_ok = ex.equals(star.stanley_reisner_ideal(complex_), star.skeleton_ideal(cfg))
    report = {
        "command": "matroid",
        "params": {"s": args.s, "c": args.c},
        "caps": {"vertex_cap": star.MATROID_VERTEX_CAP},
        "facet_count": len(complex_.facets),
        "is_matroid": matroid_ok,
        "stanley_reisner_matches_skeleton": sr_ok,
    }
    return report, 0 if matroid_ok and sr_ok else 1


def _cmd_wk(args) -> tuple[dict, int]:
    ks = [args.k] if args.k is not None else list(range(args.s))
    steps = []
    all_ok = True
    for k in ks:
        step_ok = star.wk_step_check(args.s, args.ell, k)
        link = star.wk_link_monomial(args.s, args.ell, k)
        hf_ok = hilbert.bdg_hf_check(
            ex.MonomialIdeal(args.s, (link,)),
            star.wk_ideal(args.s, args.ell, k),
            1,
            star.wk_ideal(args.s, args.ell, k + 1),
        )
        all_ok = all_ok and step_ok and hf_ok
        steps.append(
            {
                "k": k,
                "link_identity_and_degree": step_ok,
                "hilbert_function_identity": hf_ok,
                "degree_before": star.wk_degree(args.s, args.ell, k),
                "degree_after": star.wk_degree(args.s, args.ell, k + 1),
            }
        )
    report = {
        "command": "wk",
        "params": {"s": args.s, "ell": args.ell, "k": args.k},
        "caps": {},
        "steps": steps,
        "all_steps_verified": all_ok,
    }
    return report, 0 if all_ok else 1


def _cmd_export(args) -> tuple[dict, int]:
    if args.forms:
        forms = parse_forms(args.forms)
    else:
        # monomial model: the s coordinate hyperplanes of P^{s-1}
        forms = [tuple(Fraction(1 if j == i else 0) for j in range(args.s)) for i in range(args.s)]
    script = export_cas(args.s, args.c, args.ell, args.target, forms)
    report = {
        "command": "export",
        "params": {"s": args.s, "c": args.c, "ell": args.ell, "target": args.target},
        "caps": {},
        "script": script,
    }
    return report, 0


# ---------------------------------------------------------------------------
# CAS export


def parse_forms(text: str) -> list[tuple[Fraction, ...]]:
    """Parse ``a,b,c;d,e,f;...`` into coefficient tuples (exact rationals)."""
    forms = []
    for chunk in text.split(";"):
        chunk = chunk.strip()
        if not chunk:
            raise UsageError("empty linear form in --forms")
        try:
            coeffs = tuple(Fraction(p.strip()) for p in chunk.split(","))
        except (ValueError, ZeroDivisionError) as exc:
            raise UsageError(f"malformed coefficient in {chunk!r}: {exc}") from None
        forms.append(coeffs)
    widths = {len(f) for f in forms}
    if len(widths) != 1:
        raise UsageError(f"linear forms have inconsistent lengths {sorted(widths)}")
    if all(all(x == 0 for x in f) for f in forms):
        raise UsageError("all forms are zero")
    return forms


def _pairwise_dependent(forms: list[tuple[Fraction, ...]]) -> list[tuple[int, int]]:
    bad = []
    for i in range(len(forms)):
        for j in range(i + 1, len(forms)):
            a, b = forms[i], forms[j]
            # rank of the 2 x (n+1) matrix is < 2 iff all 2x2 minors vanish
            if all(a[p] * b[q] - a[q] * b[p] == 0 for p in range(len(a)) for q in range(p + 1, len(a))):
                bad.append((i, j))
    return bad


def _coeff_str(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _form_str(coeffs: tuple[Fraction, ...]) -> str:
    parts = []
    for i, a in enumerate(coeffs):
        if a == 0:
            continue
        if a == 1:
            parts.append(f"x{i}")
        else:
            parts.append(f"({_coeff_str(a)})*x{i}")
    return " + ".join(parts) if parts else "0"


def export_cas(
    s: int, c: int, ell: int, target: str, forms: list[tuple[Fraction, ...]]
) -> str:
    """Emit a script for an external computer-algebra system.

    The script builds the codimension-c configuration ideal of the given
    hyperplanes over the rationals, its ell-th power, and the conjectured
    intersection of symbolic powers, and prints whether they are equal.
    The number of variables is the length of the coefficient tuples; the
    forms must number s > n.
    """
    if target not in ("m2-syntax", "singular-syntax"):
        raise UsageError(f"unknown export target {target!r}")
    if len(forms) != s:
        raise UsageError(f"expected {s} linear forms, got {len(forms)}")
    if ell < 1:
        raise UsageError(f"need ell >= 1, got {ell}")
    n = len(forms[0]) - 1
    if n < 1:
        raise UsageError("forms must have at least 2 coefficients")
    if s <= n:
        raise UsageError(f"the configuration needs s > n, got s={s}, n={n}")
    star.StarConfig(s, c)  # range validation for c
    if c > n:
        raise UsageError(f"codimension c={c} exceeds the ambient dimension n={n}")
    big_n = s - 1
    m_exp = (big_n - c + 2) * ell
    from itertools import combinations

    warnings = [
        f"WARNING: forms {i} and {j} are proportional; the arrangement does not meet properly"
        for i, j in _pairwise_dependent(forms)
    ]
    variables = [f"x{i}" for i in range(n + 1)]
    lines: list[str] = []

    def subsets(size):
        return list(combinations(range(s), size))

    if target == "m2-syntax":
        comment = "--"
        lines.append(f"{comment} codimension {c} configuration of {s} hyperplanes in P^{n}")
        lines.append(f"{comment} checks the power decomposition for l = {ell}")
        lines.extend(f"{comment} {w}" for w in warnings)
        lines.append(f"R = QQ[{','.join(variables)}];")
        for i, f in enumerate(forms):
            lines.append(f"L{i} = {_form_str(f)};")
        lines.append(f"Ipow = (intersect({', '.join('ideal(' + ', '.join(f'L{i}' for i in sub) + ')' for sub in subsets(c))}))^{ell};")
        terms = []
        for j in range(0, n - c + 1):
            powers = [
                "(ideal(" + ", ".join(f"L{i}" for i in sub) + "))^" + str((j + 1) * ell)
                for sub in subsets(c + j)
            ]
            lines.append(f"T{j} = intersect({', '.join(powers)});")
            terms.append(f"T{j}")
        lines.append(f"Mpow = (ideal({', '.join(variables)}))^{m_exp};")
        lines.append(f"RHS = intersect({', '.join(terms)}, Mpow);")
        lines.append("print(Ipow == RHS);")
    else:
        comment = "//"
        lines.append(f"{comment} codimension {c} configuration of {s} hyperplanes in P^{n}")
        lines.append(f"{comment} checks the power decomposition for l = {ell}")
        lines.extend(f"{comment} {w}" for w in warnings)
        lines.append(f"ring R = 0, ({','.join(variables)}), dp;")
        for i, f in enumerate(forms):
            lines.append(f"poly L{i} = {_form_str(f)};")
        comp_names = []
        for k, sub in enumerate(subsets(c)):
            lines.append(f"ideal C{k} = {', '.join(f'L{i}' for i in sub)};")
            comp_names.append(f"C{k}")
        lines.append(f"ideal I = intersect({', '.join(comp_names)});")
        lines.append(f"ideal Ipow = I^{ell};")
        terms = []
        for j in range(0, n - c + 1):
            powers = []
            for k, sub in enumerate(subsets(c + j)):
                name = f"P{j}_{k}"
                lines.append(f"ideal {name} = {', '.join(f'L{i}' for i in sub)};")
                powers.append(f"{name}^{(j + 1) * ell}")
            lines.append(f"ideal T{j} = intersect({', '.join(powers)});")
            terms.append(f"T{j}")
        lines.append(f"ideal M = {', '.join(variables)};")
        lines.append(f"ideal RHS = intersect({', '.join(terms)}, M^{m_exp});")
        lines.append("ideal sIpow = std(Ipow);")
        lines.append("ideal sRHS = std(RHS);")
        lines.append("int equal = (size(reduce(Ipow, sRHS)) == 0) && (size(reduce(RHS, sIpow)) == 0);")
        lines.append('printf("%s", equal);')
        lines.append("exit;")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# rendering


def _render_text(report: dict) -> str:
    if "script" in report:
        return report["script"]
    buf = io.StringIO()

    def emit(key, value, indent=0):
        pad = "  " * indent
        if isinstance(value, dict):
            if not value:
                return
            buf.write(f"{pad}{key}:\n")
            for k, v in value.items():
                emit(k, v, indent + 1)
        elif isinstance(value, list) and value and isinstance(value[0], dict):
            buf.write(f"{pad}{key}:\n")
            for item in value:
                flat = "  ".join(f"{k}={_scalar(v)}" for k, v in item.items())
                buf.write(f"{pad}  {flat}\n")
        else:
            buf.write(f"{pad}{key}: {_scalar(value)}\n")

    for key, value in report.items():
        emit(key, value)
    return buf.getvalue()


def _scalar(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, dict):
        return "(" + ", ".join(f"{k}={_scalar(v)}" for k, v in value.items()) + ")"
    if isinstance(value, list):
        return "[" + ", ".join(_scalar(v) for v in value) + "]"
    if value is None:
        return "none"
    return str(value)


def _render_csv(report: dict) -> str:
    if report.get("command") != "scan":
        raise UsageError("csv output is only defined for the scan command")
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["m", "r", "contained", "ratio_num", "ratio_den"])
    for entry in report["entries"]:
        ratio = Fraction(entry["m"], entry["r"])
        writer.writerow(
            [entry["m"], entry["r"], str(entry["contained"]).lower(), ratio.numerator, ratio.denominator]
        )
    return buf.getvalue()


def render(report: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(report, indent=2, sort_keys=True) + "\n"
    if fmt == "csv":
        return _render_csv(report)
    return _render_text(report)


# ---------------------------------------------------------------------------
# argument parsing and dispatch


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="starconfig",
        description="Exact computations for star configurations in the monomial model.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "csv"), default="text")
    common.add_argument("--output", help="write the report to this path instead of stdout")
    common.add_argument("--jobs", type=int, default=1, help="parallelism hint; does not affect output")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, **kwargs):
        p = sub.add_parser(name, parents=[common], **kwargs)
        p.add_argument("--s", type=int, required=True, help="number of hyperplanes/variables")
        return p

    p = add("skeleton", help="skeleton ideal: generators, h-vector, degree, alpha")
    p.add_argument("--c", type=int, required=True)
    p.add_argument("--degree-cap", type=int, default=_env_cap("STARCONFIG_DEGREE_CAP"))

    p = add("symbolic", help="symbolic power: generators, alpha/omega vs closed forms")
    p.add_argument("--c", type=int, required=True)
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--enum-cap", type=int, default=_env_cap("STARCONFIG_ENUM_CAP"))
    p.add_argument("--max-listed", type=int, default=64, help="list generators only up to this count")

    p = add("hvector", help="h-vector of the skeleton (--ell 1) or a symbolic power")
    p.add_argument("--c", type=int, required=True)
    p.add_argument("--ell", type=int, default=1)
    p.add_argument("--degree-cap", type=int, default=_env_cap("STARCONFIG_DEGREE_CAP"))

    p = add("betti", help="resolution shape of the symbolic square plus the Euler check")
    p.add_argument("--c", type=int, required=True)

    p = add("hb", help="determinantal matrix, its maximal minors, and the minor-ideal check")
    p.add_argument("--m", type=int, required=True)

    p = add("decomp", help="power decomposition and saturation identity")
    p.add_argument("--c", type=int, required=True)
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--s-cap", type=int, default=decomp.DECOMP_S_CAP)
    p.add_argument("--l-cap", type=int, default=decomp.DECOMP_L_CAP)

    p = add("containment", help="single symbolic-vs-ordinary power containment")
    p.add_argument("--c", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--power-cap", type=int, default=_env_cap("STARCONFIG_POWER_CAP"))

    p = add("scan", help="containment grid with the empirical resurgence supremum")
    p.add_argument("--c", type=int, required=True)
    p.add_argument("--mmax", type=int, required=True)
    p.add_argument("--rmax", type=int, required=True)
    p.add_argument("--power-cap", type=int, default=_env_cap("STARCONFIG_POWER_CAP"))

    p = add("matroid", help="matroid property of the skeleton complex and the Stanley-Reisner check")
    p.add_argument("--c", type=int, required=True)

    p = add("wk", help="basic-double-link chain checks between symbolic powers (codimension 2)")
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--k", type=int, default=None, help="single step; default checks every step")

    p = add("export", help="emit a Macaulay2 or Singular script for the general-forms check")
    p.add_argument("--c", type=int, required=True)
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--target", choices=("m2-syntax", "singular-syntax"), required=True)
    p.add_argument(
        "--forms",
        help="semicolon-separated linear forms, each a comma-separated coefficient list; "
        "defaults to the s coordinate hyperplanes",
    )

    return parser


_COMMANDS = {
    "skeleton": _cmd_skeleton,
    "symbolic": _cmd_symbolic,
    "hvector": _cmd_hvector,
    "betti": _cmd_betti,
    "hb": _cmd_hb,
    "decomp": _cmd_decomp,
    "containment": _cmd_containment,
    "scan": _cmd_scan,
    "matroid": _cmd_matroid,
    "wk": _cmd_wk,
    "export": _cmd_export,
}


def main(argv: list[str] | None = None) -> int:
    args = None
    try:
        parser = build_parser()
        try:
            args = parser.parse_args(argv)
        except SystemExit as exc:
            return 2 if exc.code not in (0, None) else 0
        if args.jobs < 1:
            raise UsageError("--jobs must be >= 1")
        report, code = _COMMANDS[args.command](args)
        if code == 1:
            report["failure_reason"] = "a verified identity did not hold; see the report fields"
        text = render(report, args.format)
    except UsageError as exc:
        _emit_error(args, "usage", str(exc))
        return 2
    except ResourceCapError as exc:
        _emit_error(args, "resource-cap", str(exc))
        return 3
    except TheoremViolation as exc:
        _emit_error(args, "theorem-violation", str(exc))
        return 1
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


def _emit_error(args, kind: str, message: str) -> None:
    fmt = getattr(args, "format", "text")
    if fmt == "json":
        payload = {"error": {"kind": kind, "reason": message}}
        sys.stderr.write(json.dumps(payload, indent=2, sort_keys=True) + "\n")
    else:
        sys.stderr.write(f"error ({kind}): {message}\n")


if __name__ == "__main__":
    raise SystemExit(main())
