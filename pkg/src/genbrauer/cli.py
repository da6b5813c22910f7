"""Command-line entry point: every check as a run that prints one JSON document."""

from __future__ import annotations

import json
import sys
from fractions import Fraction
from pathlib import Path
from typing import Any

import click

from .exactlinalg import QuadraticSurd, format_fraction, format_scalar, to_fraction
from .groups import Group, GroupSpec, build_group

SCHEMA = "genbrauer.report/1"


# ---------------------------------------------------------------------------
# configuration


def _load_config(path: str | None) -> dict:
    if not path:
        return {}
    doc = json.loads(Path(path).read_text())
    if not isinstance(doc, dict):
        raise click.BadParameter("config must be a JSON object", param_hint="--config")
    return doc


def _parse_params(text: str | None) -> dict | str | None:
    """'generic', 'uniform:MU:M', or a JSON object {"mu": {...}, "m": {...}}."""
    if text is None or text == "generic":
        return text
    if text.startswith("uniform:"):
        parts = text.split(":")
        if len(parts) != 3:
            raise click.BadParameter("expected uniform:MU:M", param_hint="--params")
        return {"uniform": {"mu": parts[1], "m": parts[2]}}
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise click.BadParameter(f"not JSON: {exc}", param_hint="--params") from exc
    if not isinstance(doc, dict) or set(doc) - {"mu", "m", "uniform"}:
        raise click.BadParameter('expected {"mu": {...}, "m": {...}}', param_hint="--params")
    return doc


class RunConfig:
    """Merged config: file values first, explicit flags override."""

    def __init__(self, ctx: click.Context, command: str, **flags: Any) -> None:
        base = dict(ctx.obj.get("config", {}))
        group = dict(base.get("group", {}))
        for key in ("family", "m", "n"):
            if flags.get(key) is not None:
                group[key] = flags.pop(key)
            else:
                flags.pop(key, None)
        params = _parse_params(flags.pop("params", None))
        if params is None:
            params = base.get("params", "generic")
        options = dict(base.get("options", {}))
        options.update({k: v for k, v in flags.items() if v is not None})
        self.command = command
        self.group_doc = group
        self.params_doc = params
        self.options = options
        self.pretty = ctx.obj.get("pretty", False)

    def group(self) -> Group:
        try:
            return build_group(GroupSpec.from_doc(self.group_doc))
        except (KeyError, ValueError) as exc:
            raise click.UsageError(f"bad group {self.group_doc}: {exc}") from exc

    def params(self, group: Group):
        from .gbrauer import Params

        doc = self.params_doc
        try:
            if doc in (None, "generic"):
                return Params.generic(group)
            if "uniform" in doc:
                u = doc["uniform"]
                return Params.uniform(group, to_fraction(u["mu"]), to_fraction(u["m"]))
            return Params.from_doc(group, doc)
        except (ValueError, ZeroDivisionError, KeyError) as exc:
            raise click.UsageError(f"bad parameters: {exc}") from exc

    def algebra(self, certify: bool = False):
        from .gbrauer import build_algebra

        G = self.group()
        return build_algebra(G, self.params(G), self.options.get("variant", "standard"), certify=certify)

    def to_doc(self) -> dict:
        return {"group": self.group_doc, "params": self.params_doc, "options": self.options}


def _jsonable(x: Any) -> Any:
    if isinstance(x, Fraction):
        return format_fraction(x)
    if isinstance(x, QuadraticSurd):
        return format_scalar(x)
    if isinstance(x, complex):
        return [x.real, x.imag]
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if hasattr(x, "item"):  # numpy scalars
        return _jsonable(x.item())
    return x


def emit(cfg: RunConfig, result: dict, ok: bool) -> None:
    doc = {"schema": SCHEMA, "command": cfg.command, "config": cfg.to_doc(), "ok": ok}
    doc.update(_jsonable(result))
    if cfg.pretty:
        click.echo(_pretty(doc))
    else:
        click.echo(json.dumps(doc, sort_keys=True))
    if not ok:
        sys.exit(1)


def _pretty(doc: dict, indent: int = 0) -> str:
    lines = []
    width = max((len(k) for k in doc), default=0)
    for k in sorted(doc):
        v = doc[k]
        if isinstance(v, dict) and v:
            lines.append(" " * indent + f"{k}:")
            lines.append(_pretty(v, indent + 2))
        else:
            lines.append(" " * indent + f"{k.ljust(width)}  {json.dumps(v, sort_keys=True)}")
    return "\n".join(lines)


def group_options(f):
    f = click.option("--params", help='"generic", "uniform:MU:M", or JSON {"mu": {class: "p/q"}, "m": {orbit: "p/q"}}.')(f)
    f = click.option("--n", type=int, help="Rank (symmetric, cyclotomic).")(f)
    f = click.option("--m", type=int, help="Order parameter (dihedral, cyclotomic).")(f)
    f = click.option("--family", type=click.Choice(["dihedral", "symmetric", "cyclotomic"]))(f)
    return f


# ---------------------------------------------------------------------------
# commands


@click.group()
@click.option("--config", "config_path", type=click.Path(exists=True, dir_okay=False), help="JSON run config.")
@click.option("--pretty", is_flag=True, help="Human-readable output instead of JSON.")
@click.pass_context
def main(ctx: click.Context, config_path: str | None, pretty: bool) -> None:
    """Exact checks for generalized Brauer algebras."""
    ctx.ensure_object(dict)
    ctx.obj["config"] = _load_config(config_path)
    ctx.obj["pretty"] = pretty


@main.command()
@click.argument("action", type=click.Choice(["build", "dim", "assoc", "radical", "star-check"]))
@group_options
@click.option("--variant", type=click.Choice(["standard", "hat"]), default=None)
@click.pass_context
def algebra(ctx, action, **flags):
    """Build an algebra and report dimension, associativity, radical or star checks."""
    from .gbrauer import semisimplicity_report, star_check

    cfg = RunConfig(ctx, f"algebra {action}", **flags)
    alg = cfg.algebra(certify=False)
    out: dict = {"dimension": alg.dim}
    ok = True
    if action in ("build", "assoc"):
        w = alg.associativity_witness()
        out["assoc_ok"] = w is None
        if w is not None:
            out["witness"] = [alg.describe(k) for k in w]
        ok &= w is None
    if action in ("build", "radical"):
        rep = semisimplicity_report(alg)
        out["gram_rank"] = rep["gram_rank"]
        out["radical_dim"] = rep["radical_dim"]
    if action in ("build", "star-check"):
        out["star_ok"] = star_check(alg) if alg.params.star_compatible(alg.group) else False
        ok &= out["star_ok"]
    out["params_effective"] = alg.params.to_doc(alg.group)
    emit(cfg, out, ok)


@main.group()
def conn() -> None:
    """Connection checks."""


@conn.command("flat")
@click.option("--which", type=click.Choice(["brauer", "cherednik", "formal", "lk", "rho"]), required=True)
@group_options
@click.option("--tau", default=None, help="Loop value for the diagram algebra (p/q).")
@click.option("--perturb", default=None, help="I,J: add 1 to alpha[I][J] (lk only).")
@click.pass_context
def conn_flat(ctx, which, **flags):
    """Flatness and equivariance of a connection."""
    from . import connections as C
    from .reps import known_representations, verify_representation

    cfg = RunConfig(ctx, f"conn flat {which}", **flags)
    opts = cfg.options
    docs = []
    if which == "brauer":
        n = cfg.group_doc.get("n")
        if n is None:
            raise click.UsageError("--n is required for the brauer connection")
        tau = to_fraction(opts.get("tau", "7/3"))
        conn_ = C.brauer_connection(n, tau)
        docs.append(("brauer", conn_, C.brauer_phi(n, tau)))
    else:
        alg = cfg.algebra()
        if which == "lk":
            from .reps import lk_alpha

            alpha = [list(r) for r in lk_alpha(alg.group, alg.params)]
            if opts.get("perturb"):
                i, j = (int(t) for t in str(opts["perturb"]).split(","))
                alpha[i][j] += 1
            docs.append(("lk", C.lk_connection(alg, alpha), C.lk_phi(alg)))
        elif which == "rho":
            for rep in known_representations(alg, regular=False):
                if verify_representation(alg, rep):
                    raise click.ClickException(f"{rep.name} failed verification")
                docs.append((rep.name, C.rho_connection(alg, rep), C.rho_phi(rep)))
        else:
            c = C.build_connection(which, alg=alg)
            docs.append((which, c, C.default_phi(c, alg=alg)))
    results = {}
    ok = True
    for name, c, phi in docs:
        flat = [r.to_doc() for r in C.check_flat(c)]
        inv = C.check_invariance(c, phi)
        results[name] = {"violations": flat, "invariance_violations": inv}
        ok &= not flat and not inv
    out: dict = {"connections": results}
    if len(results) == 1:
        out["violations"] = next(iter(results.values()))["violations"]
    emit(cfg, out, ok)


@main.group()
def rep() -> None:
    """Representation checks."""


@rep.command("verify")
@group_options
@click.option("--regular/--no-regular", default=False, help="Also verify the regular representation.")
@click.pass_context
def rep_verify(ctx, **flags):
    """Verify every known representation; for dihedral groups also the Wedderburn count."""
    from .reps import burnside_dimension, known_representations, verify_representation, wedderburn_lower_bound

    cfg = RunConfig(ctx, "rep verify", **flags)
    alg = cfg.algebra()
    reps = known_representations(alg, regular=bool(cfg.options.get("regular")))
    rows = {}
    ok = True
    for r in reps:
        bad = verify_representation(alg, r)
        rows[r.name] = {"dim": r.dim, "violations": bad[:10], "burnside": burnside_dimension(r)}
        ok &= not bad
    out: dict = {"dimension": alg.dim, "representations": rows}
    if alg.group.spec.family == "dihedral":
        from .reps import dihedral_irreducibles

        out["wedderburn_sum"] = wedderburn_lower_bound(alg, dihedral_irreducibles(alg))
        ok &= out["wedderburn_sum"] == alg.dim
    emit(cfg, out, ok)


@main.group()
def cell() -> None:
    """Cellular structure checks."""


@cell.command("verify")
@group_options
@click.option("--mode", type=click.Choice(["exact", "numeric"]), default=None)
@click.pass_context
def cell_verify(ctx, **flags):
    """Build the cell datum of a dihedral algebra and check C1, C2, C3."""
    from .cellular import cell_module_dimensions, extend_cell_datum, verify_cellular

    cfg = RunConfig(ctx, "cell verify", **flags)
    alg = cfg.algebra()
    if alg.group.spec.family != "dihedral":
        raise click.UsageError("cell data are built for dihedral groups only")
    datum = extend_cell_datum(alg, cfg.options.get("mode", "exact"))
    rep = verify_cellular(alg, datum)
    out = rep.to_doc()
    out["cell_module_dimensions"] = cell_module_dimensions(datum)
    emit(cfg, out, rep.ok)


@main.group()
def present() -> None:
    """Presentation checks."""


@present.command("verify")
@group_options
@click.option("--kind", type=click.Choice(["auto", "coxeter"]), default=None)
@click.option("--literal", is_flag=True, default=None, help="Use the uncorrected relations (expected to fail where a correction applies).")
@click.pass_context
def present_verify(ctx, **flags):
    """Compare a presentation with the built algebra in both directions."""
    from .presentations import canonical_assignment, check_assignment, full_check, presentation_for, type_a_comparison

    cfg = RunConfig(ctx, "present verify", **flags)
    alg = cfg.algebra()
    kind = cfg.options.get("kind", "auto")
    if cfg.options.get("literal"):
        P = presentation_for(alg, kind, literal=True)
        bad = check_assignment(P, canonical_assignment(alg, P), alg)
        emit(cfg, {"presentation": P.name, "forward_violations": bad}, not bad)
        return
    out = full_check(alg, kind)
    ok = out["ok"]
    if alg.group.spec.family == "symmetric":
        out["table_comparison"] = type_a_comparison(alg)
        ok &= out["table_comparison"]["equal"]
    emit(cfg, out, ok)


@main.group()
def monodromy() -> None:
    """Numerical monodromy of the diagram-algebra connection."""


@monodromy.command("run")
@click.option("--n", "n", type=click.Choice(["2", "3"]), default="2")
@click.option("--kappa", default="1/10", help="Coupling constant (p/q or decimal).")
@click.option("--m-param", "m_param", default="3", help="Loop value m of the diagram algebra.")
@click.option("--tol", type=float, default=1e-10)
@click.pass_context
def monodromy_run(ctx, n, kappa, m_param, tol):
    """Integrate the generator monodromies and report BMW relation residuals."""
    from .monodromy import n2_report, n3_report

    cfg = RunConfig(ctx, "monodromy run", family="symmetric", n=int(n), m=None, kappa=kappa, m_param=m_param, tol=tol)
    k = float(to_fraction(kappa))
    mp = to_fraction(m_param)
    if int(n) == 2:
        out = n2_report(k, mp, tol)
        ok = out["transport_vs_closed_form"] < 1e-6 and out["cubic_residual"] < 1e-8
    else:
        out = {"reps": n3_report(k, mp, tol)}
        ok = all(r["max_bmw_residual"] < 1e-5 for r in out["reps"].values())
    emit(cfg, out, ok)


if __name__ == "__main__":  # pragma: no cover
    main()
