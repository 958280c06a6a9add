"""Command-line surface: system loading, experiments, CSV/JSON emission.

Exit codes: 0 success, 2 validation error, 3 budget or divergence-domain
error, 64 usage error.  All outputs are deterministic for a fixed
command line (fixed seeds, '%.12g' float formatting, no timestamps).
"""

from __future__ import annotations

import json
import math
import os
import sys

import click
import numpy as np

from . import analytic, summatory, verify
from .errors import (
    BudgetExceededError,
    DivergenceDomainError,
    GnumError,
    ValidationError,
)
from .grid import LogGridMeasure, exp_conv, mellin
from .semigroup import N_count, enumerate_up_to, lambda_of, mu_of
from .systems import (
    LOG2,
    Pi0_values,
    Pi_values,
    builtin_names,
    load_system,
    pi_count,
    to_grid,
)

_FMT = "%.12g"


def _fmt(x) -> str:
    if isinstance(x, complex):
        return f"{_FMT % x.real}{'+' if x.imag >= 0 else '-'}{_FMT % abs(x.imag)}i"
    if isinstance(x, float):
        return _FMT % x
    return str(x)


def _write_csv(path: str, header: list[str], rows) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(",".join(header) + "\n")
        for row in rows:
            fh.write(",".join(_fmt(v) for v in row) + "\n")


def _emit(payload: dict, as_json: bool) -> None:
    if as_json:
        click.echo(json.dumps(payload, default=_json_default, sort_keys=True))
    else:
        for key, val in payload.items():
            if key == "command":
                continue
            click.echo(f"{key}: {_fmt(val) if isinstance(val, (int, float, complex)) else val}")


def _json_default(obj):
    if isinstance(obj, complex):
        return {"re": obj.real, "im": obj.imag}
    if isinstance(obj, np.ndarray):
        return obj.tolist()
    if isinstance(obj, (np.floating, np.integer)):
        return obj.item()
    if isinstance(obj, tuple):
        return list(obj)
    return str(obj)


def _parse_complex(text: str) -> complex:
    return complex(text.strip().replace(" ", "").replace("i", "j"))


def _parse_range(text: str, n_default: int = 50):
    """'lo:hi[:n]' in x; returns geometric sample points."""
    parts = text.split(":")
    lo, hi = float(parts[0]), float(parts[1])
    n = int(parts[2]) if len(parts) > 2 else n_default
    if not (1.0 <= lo < hi) or n < 2:
        raise ValidationError([f"bad range {text!r}: need 1 <= lo < hi and n >= 2"])
    return np.exp(np.linspace(math.log(lo), math.log(hi), n))


_system_option = click.option(
    "--system",
    "system_src",
    required=True,
    help="System source: 'builtin:NAME' or a JSON definition file.",
)
_json_option = click.option(
    "--format", "fmt", type=click.Choice(["text", "json"]), default="text", show_default=True
)
_threads_option = click.option(
    "--threads", type=int, default=lambda: os.cpu_count() or 1, help="Worker threads where applicable."
)


@click.group(name="gnum")
def cli():
    """Numerical laboratory for Beurling generalized number systems."""


@cli.command()
@click.option("--validate", "validate_path", type=click.Path(exists=True), default=None)
def systems(validate_path):
    """List builtin systems or validate a JSON definition file."""
    if validate_path is None:
        for name in builtin_names():
            click.echo(name)
        return
    sysd = load_system(validate_path)
    click.echo(f"valid {sysd.kind} system: {sysd.label}")


@cli.command()
@_system_option
@click.option("--x", "x_max", type=float, required=True, help="Enumerate values <= x.")
@click.option("--out", type=click.Path(), default=None, help="CSV output path (default stdout).")
@click.option("--budget", type=int, default=None, help="Element budget override.")
def integers(system_src, x_max, out, budget):
    """Stream the generalized integers as CSV (value, Omega, mu, lambda, exponents)."""
    sysd = load_system(system_src)
    rows = (
        (
            g.value,
            g.omega_total,
            mu_of(g),
            lambda_of(g),
            ";".join(f"{i}^{e}" for i, e in g.exponents) or "1",
        )
        for g in enumerate_up_to(sysd, x_max, budget=budget)
    )
    header = ["value", "omega", "mu", "lambda", "exponents"]
    if out:
        _write_csv(out, header, rows)
        click.echo(f"wrote {out}")
    else:
        click.echo(",".join(header))
        for row in rows:
            click.echo(",".join(_fmt(v) for v in row))


@cli.command()
@_system_option
@click.option("--x", type=float, required=True)
@click.option("--h", type=float, default=1e-3, show_default=True)
@click.option("--u-max", type=float, default=None, help="Grid support (continuous systems).")
@_json_option
def count(system_src, x, h, u_max, fmt):
    """N(x): the number of generalized integers up to x."""
    sysd = load_system(system_src)
    res = N_count(sysd, x, h=h, u_max=u_max if u_max is not None else math.log(x) + 1.0)
    if fmt == "json":
        _emit(
            {"command": "count", "x": x, "N": res.value, "method": res.method, "h": res.h, "u_max": res.u_max},
            True,
        )
    else:
        click.echo(_fmt(res.value))


def _counts_table(system_src, xrange, include_pi: bool):
    sysd = load_system(system_src)
    xs = _parse_range(xrange)
    us = np.log(xs)
    pis = None
    if include_pi and sysd.is_discrete:
        pis = [pi_count(sysd, float(x)) for x in xs]
    Pi_v = Pi_values(sysd, us)
    Pi0_v = Pi0_values(us)
    rows = []
    for i, x in enumerate(xs):
        row = [float(x)]
        if pis is not None:
            row.append(pis[i])
        row.extend([float(Pi_v[i]), float(Pi0_v[i])])
        rows.append(row)
    header = ["x"] + (["pi"] if pis is not None else []) + ["Pi", "Pi0"]
    return header, rows


@cli.command(name="pi")
@_system_option
@click.option("--x-range", default="2:1000:50", show_default=True, help="lo:hi[:n], geometric.")
@click.option("--out", type=click.Path(), default=None)
def pi_cmd(system_src, x_range, out):
    """Table of (x, pi, Pi, Pi0) for a discrete system."""
    header, rows = _counts_table(system_src, x_range, include_pi=True)
    if out:
        _write_csv(out, header, rows)
        click.echo(f"wrote {out}")
    else:
        click.echo(",".join(header))
        for row in rows:
            click.echo(",".join(_fmt(v) for v in row))


@cli.command(name="Pi")
@_system_option
@click.option("--x-range", default="2:1000:50", show_default=True, help="lo:hi[:n], geometric.")
@click.option("--out", type=click.Path(), default=None)
def Pi_cmd(system_src, x_range, out):
    """Table of (x, Pi, Pi0) for any system."""
    header, rows = _counts_table(system_src, x_range, include_pi=False)
    if out:
        _write_csv(out, header, rows)
        click.echo(f"wrote {out}")
    else:
        click.echo(",".join(header))
        for row in rows:
            click.echo(",".join(_fmt(v) for v in row))


@cli.command(name="zeta")
@_system_option
@click.option("--s", "s_str", required=True, help="Mellin point, e.g. '2+0i' or '1.5+4i'.")
@click.option("--cutoff", type=float, default=1e6, show_default=True)
@click.option("--h", type=float, default=1e-3, show_default=True)
@click.option("--u-max", type=float, default=40.0, show_default=True)
@_json_option
def zeta_cmd(system_src, s_str, cutoff, h, u_max, fmt):
    """zeta(s) with a reported truncation-tail bound."""
    sysd = load_system(system_src)
    s = _parse_complex(s_str)
    res = analytic.zeta(sysd, s, cutoff=cutoff, h=h, u_max=u_max)
    _emit(
        {
            "command": "zeta",
            "s": s,
            "value": res.value,
            "tail_bound": res.tail_bound,
            "method": res.method,
        },
        fmt == "json",
    )


@cli.command(name="density")
@_system_option
@click.option("--U", "u_cut", type=float, required=True, help="log-cutoff of the J integral.")
@click.option(
    "--tail-model", type=click.Choice(["pi0", "xlogx", "none"]), default="pi0", show_default=True
)
@_json_option
def density_cmd(system_src, u_cut, tail_model, fmt):
    """Density constant a = exp(J(1)) with convergence evidence."""
    sysd = load_system(system_src)
    res = analytic.density_constant(sysd, u_cut, tail_model=tail_model)
    _emit(
        {
            "command": "density",
            "a": res.a,
            "J1": res.J1,
            "tail_bound": res.tail_bound,
            "reliable": res.reliable,
            "evidence": res.evidence.verdict,
        },
        fmt == "json",
    )


@cli.command(name="defect")
@_system_option
@click.option("--which", type=click.Choice(["l1", "density"]), required=True)
@click.option("--U", "u_cut", type=float, required=True)
@click.option("--comparator", type=click.Choice(["pi0", "xlogx"]), default="pi0", show_default=True)
@click.option("--a", "a_const", type=float, default=None, help="Density constant (density defect).")
@click.option("--h", type=float, default=2.5e-3, show_default=True)
@click.option("--rungs", default=None, help="Comma-separated rung list, e.g. '1,4,16,64'.")
@click.option("--out", type=click.Path(), default=None, help="CSV of (U, partial integral).")
@_json_option
def defect_cmd(system_src, which, u_cut, comparator, a_const, h, rungs, out, fmt):
    """L1 defect of Pi (l1) or of N against ax (density), with verdict."""
    sysd = load_system(system_src)
    rung_list = [float(r) for r in rungs.split(",")] if rungs else None
    if which == "l1":
        rep = analytic.l1_defect(sysd, u_cut, comparator=comparator, rungs=rung_list)
    else:
        rep = analytic.density_defect(sysd, a_const, u_cut, h=h, rungs=rung_list)
    if out:
        _write_csv(out, ["U", "partial"], zip(rep.rungs, rep.partials))
        click.echo(f"wrote {out}")
    _emit(
        {
            "command": f"defect-{which}",
            "rungs": list(rep.rungs),
            "partials": list(rep.partials),
            "increments": list(rep.increments),
            "verdict": rep.verdict,
        },
        fmt == "json",
    )


@cli.command(name="criteria")
@click.option("--terms", default=None, help="Cosine terms 'b:t:y,b:t:y,...'.")
@click.option("--system", "system_src", default=None, help="Use a builtin's known terms.")
@click.option("--strengthened", is_flag=True, default=False)
@_json_option
def criteria_cmd(terms, system_src, strengthened, fmt):
    """Cosine singularity criterion: values and pass/fail verdict."""
    if terms:
        parsed = tuple(tuple(float(p) for p in t.split(":")) for t in terms.split(","))
    elif system_src:
        sysd = load_system(system_src)
        if sysd.cosine_terms is None:
            raise ValidationError([f"system {sysd.label} carries no cosine terms"])
        parsed = sysd.cosine_terms
    else:
        raise click.UsageError("need --terms or --system")
    rep = analytic.cosine_criterion(analytic.CosineTermSpec(parsed), strengthened=strengthened)
    _emit(
        {
            "command": "criteria",
            "values": list(rep.values),
            "verdict": "pass" if rep.verdict else "fail",
            "strengthened": rep.strengthened,
        },
        fmt == "json",
    )


@cli.command(name="probe")
@_system_option
@click.option("--eta", type=float, required=True)
@click.option("--beta-terms", default="", help="Singular terms 't:beta,t:beta,...'.")
@click.option("--kind", type=click.Choice(["upper", "lower"]), default="upper", show_default=True)
@click.option("--sigma", default="1.005:2", show_default=True, help="Sigma range 'lo:hi'.")
@click.option("--t", "t_rng", default=None, help="t range 'lo:hi' (default from terms).")
@click.option("--steps", default="200:400", show_default=True, help="Grid steps 'n_sigma:n_t'.")
@click.option("--h", type=float, default=1e-3, show_default=True)
@click.option("--u-max", type=float, default=40.0, show_default=True)
@click.option("--out", type=click.Path(), default=None, help="CSV sample dump (sigma, t, Q).")
@_threads_option
@_json_option
def probe_cmd(system_src, eta, beta_terms, kind, sigma, t_rng, steps, h, u_max, out, threads, fmt):
    """Boundary-behavior probe: sampled sup/inf of the singular-subtracted
    log|zeta| on a rectangle right of Re s = 1.  Evidence, not proof."""
    sysd = load_system(system_src)
    terms = tuple(
        (float(a), float(b)) for a, b in (t.split(":") for t in beta_terms.split(",") if t)
    )
    spec = analytic.BetaTermSpec(eta=eta, terms=terms, kind=kind)
    s_lo, s_hi = (float(v) for v in sigma.split(":"))
    t_pair = tuple(float(v) for v in t_rng.split(":")) if t_rng else None
    n_sig, n_t = (int(v) for v in steps.split(":"))
    rep = analytic.boundary_probe(
        sysd,
        spec,
        sigma_range=(s_lo, s_hi),
        t_range=t_pair,
        steps=(n_sig, n_t),
        h=h,
        u_max=u_max,
        keep_samples=out is not None,
        threads=max(1, threads),
    )
    if out:
        _write_csv(out, ["sigma", "t", "Q"], rep.samples)
        click.echo(f"wrote {out}")
    _emit(
        {
            "command": "probe",
            "kind": rep.kind,
            "extremum": rep.extremum,
            "at_sigma": rep.arg_sigma,
            "at_t": rep.arg_t,
            "steps": list(rep.steps),
        },
        fmt == "json",
    )


def _measure_csv(meas: LogGridMeasure, path: str):
    rows = ((j, j * meas.h, meas.masses[j]) for j in range(meas.n))
    _write_csv(path, ["node", "u", "mass"], rows)


def _summatory_cmd(kind, system_src, h, u_max, ladder, measure_out, out, fmt):
    sysd = load_system(system_src)
    us = np.log(_parse_range(ladder))
    if kind == "m":
        res = summatory.m_ladder(sysd, us, h=h, u_max=u_max)
        other = summatory.ell_ladder(sysd, us, h=h, u_max=u_max)
        m_vals, l_vals = res.values, other.values
    else:
        res = summatory.ell_ladder(sysd, us, h=h, u_max=u_max)
        other = summatory.m_ladder(sysd, us, h=h, u_max=u_max)
        m_vals, l_vals = other.values, res.values
    if measure_out:
        if kind == "m":
            meas = summatory.mobius_measure(sysd, h, u_max if u_max else float(us[-1]))
        else:
            meas = summatory.liouville_measure(sysd, h, u_max if u_max else float(us[-1]))
        _measure_csv(meas, measure_out)
        click.echo(f"wrote {measure_out}")
    rows = list(zip(np.exp(us), m_vals, l_vals))
    if out:
        _write_csv(out, ["x", "m", "ell"], rows)
        click.echo(f"wrote {out}")
    tail = np.abs(res.values[len(res.values) // 2 :])
    _emit(
        {
            "command": kind,
            "sup_tail": float(tail.max()) if tail.size else 0.0,
            "decays": bool(tail.max() < 0.5 * np.abs(res.values).max()) if tail.size else True,
            "method": res.method,
        },
        fmt == "json",
    )


@cli.command(name="mobius")
@_system_option
@click.option("--h", type=float, default=1e-3, show_default=True)
@click.option("--u-max", type=float, default=None)
@click.option("--ladder", default="2:100000:40", show_default=True, help="x ladder lo:hi:n.")
@click.option("--measure-out", type=click.Path(), default=None, help="CSV of grid dM.")
@click.option("--out", type=click.Path(), default=None, help="CSV of (x, m, ell).")
@_json_option
def mobius_cmd(system_src, h, u_max, ladder, measure_out, out, fmt):
    """m(x) ladder (and ell for comparison); optional grid dM dump."""
    _summatory_cmd("m", system_src, h, u_max, ladder, measure_out, out, fmt)


@cli.command(name="liouville")
@_system_option
@click.option("--h", type=float, default=1e-3, show_default=True)
@click.option("--u-max", type=float, default=None)
@click.option("--ladder", default="2:100000:40", show_default=True, help="x ladder lo:hi:n.")
@click.option("--measure-out", type=click.Path(), default=None, help="CSV of grid dL.")
@click.option("--out", type=click.Path(), default=None, help="CSV of (x, m, ell).")
@_json_option
def liouville_cmd(system_src, h, u_max, ladder, measure_out, out, fmt):
    """ell(x) ladder (and m for comparison); optional grid dL dump."""
    _summatory_cmd("ell", system_src, h, u_max, ladder, measure_out, out, fmt)


@cli.command(name="wobble")
@click.option("--h-div", type=int, default=512, show_default=True, help="h = ln2 / h-div.")
@click.option("--u-lo", type=float, default=20.0, show_default=True)
@click.option("--u-hi", type=float, default=45.0, show_default=True)
@click.option("--out", type=click.Path(), default=None, help="CSV of (u, N/x).")
@_json_option
def wobble_cmd(h_div, u_lo, u_hi, out, fmt):
    """The ex43 wobble experiment: N(x)/x on [u_lo, u_hi] plus verdict."""
    from .systems import builtin

    h = LOG2 / h_div
    dN = exp_conv(to_grid(builtin("ex43"), h, u_hi))
    uu = dN.u_nodes
    ratio = np.cumsum(dN.masses) * np.exp(-uu)
    win = (uu >= u_lo) & (uu <= u_hi)
    lo, hi = float(ratio[win].min()), float(ratio[win].max())
    if out:
        _write_csv(out, ["u", "N_over_x"], zip(uu[win], ratio[win]))
        click.echo(f"wrote {out}")
    _emit(
        {
            "command": "wobble",
            "min_ratio": lo,
            "max_ratio": hi,
            "verdict": "pass" if (lo < 1.38 and hi > 1.51) else "fail",
            "h": h,
        },
        fmt == "json",
    )


@cli.command(name="verify-paper")
@click.argument("target", default="all")
@_json_option
def verify_paper(target, fmt):
    """Run the bundled verification harness (ex41..ex52, grid, rational, all)."""
    try:
        ids = verify.criteria_for_example(target)
    except KeyError as exc:
        raise click.UsageError(str(exc))
    results = verify.run_criteria(ids)
    if fmt == "json":
        click.echo(json.dumps(results, default=_json_default, sort_keys=True))
    else:
        width = max(len(r["name"]) for r in results)
        for r in results:
            status = "PASS" if r["passed"] else "FAIL"
            click.echo(f"{r['id']:<4} {r['name']:<{width}}  {status}")
        click.echo("all passed" if all(r["passed"] for r in results) else "FAILURES present")
    if not all(r["passed"] for r in results):
        sys.exit(1)


def run_command(argv=None) -> int:
    """Execute one CLI invocation; returns the process exit code."""
    try:
        cli.main(args=argv, standalone_mode=False)
        return 0
    except click.UsageError as exc:
        click.echo(f"usage error: {exc.format_message()}", err=True)
        return 64
    except ValidationError as exc:
        click.echo(f"validation error: {exc}", err=True)
        return 2
    except (BudgetExceededError, DivergenceDomainError) as exc:
        click.echo(f"error: {exc}", err=True)
        return 3
    except GnumError as exc:
        click.echo(f"error: {exc}", err=True)
        return 2
    except SystemExit as exc:
        return int(exc.code or 0)


def main():  # console entry point
    sys.exit(run_command())
