"""Command-line interface: ``hopfcode {construct,ideals,orthogonal,verify,gram}``.

Exit codes: 0 success, 1 verification failure, 2 configuration error,
3 construction error, 4 budget exhausted or theorem hypothesis violated.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from dataclasses import dataclass, field as dc_field
from typing import Any, Sequence

from hopfcode import errors
from hopfcode.scalars import Field, FieldSpec, field_create, is_prime

COMMANDS = ("construct", "ideals", "orthogonal", "verify", "gram")
ALGEBRAS = ("omega", "taft", "cdmm", "cyclic")
FORMATS = ("json", "csv", "table")

EXIT_OK, EXIT_VERIFY, EXIT_CONFIG, EXIT_CONSTRUCTION, EXIT_BUDGET = 0, 1, 2, 3, 4


class ConfigError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    algebra: str
    field: FieldSpec
    fmt: str = "json"
    budget: int | None = None
    N: int | None = None
    S: int | None = None
    omega: tuple | None = None
    n: int | None = None
    ideal: tuple | None = None
    unit_poly: tuple | None = None
    mu: tuple | None = None
    nu: tuple | None = None
    d: tuple | None = None
    generator: tuple | None = None
    q: int | None = None
    zeta: int | None = None
    exhaustive: bool = False
    samples: int = 100
    seed: int = 0
    extra: dict = dc_field(default_factory=dict)


def _int_list(value, what: str) -> tuple:
    if value is None:
        return None
    if isinstance(value, (list, tuple)):
        items = list(value)
    else:
        items = [p for p in str(value).replace(" ", "").split(",") if p != ""]
    try:
        return tuple(int(p) for p in items)
    except (TypeError, ValueError):
        raise ConfigError(f"{what}: expected a comma-separated list of integers, got {value!r}") from None


def default_prime(algebra: str, N: int | None) -> int:
    if algebra == "taft":
        # smallest p >= 7 with p = 1 mod N
        p = 7
        while not (is_prime(p) and (p - 1) % (N or 1) == 0):
            p += 1
        return p
    if algebra == "cdmm":
        return 7
    return 2


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hopfcode", description="Right ideals and their orthogonals in small Hopf algebras.")
    p.add_argument("command", nargs="?", choices=COMMANDS)
    p.add_argument("--config", help="JSON file with the same keys as the flags")
    p.add_argument("--algebra", choices=ALGEBRAS)
    p.add_argument("--N", type=int, help="nilpotency index of x (omega, taft)")
    p.add_argument("--S", type=int, help="size of the index set (omega)")
    p.add_argument("--omega", help="permutation of the index set, comma list")
    p.add_argument("--prime", type=int)
    p.add_argument("--cyclotomic-order", type=int)
    p.add_argument("--n", type=int, help="length of the cyclic group")
    p.add_argument("--ideal", help="s,t for omega and taft; s,t,m for cdmm")
    p.add_argument("--unit-poly", help="coefficients of a(x), low degree first")
    p.add_argument("--mu", help="permutation mu of the index set (omega forms)")
    p.add_argument("--nu", help="permutation nu of exponents (omega forms)")
    p.add_argument("--d", help="nonzero form coefficients, one value or one per basis element")
    p.add_argument("--generator", help="cyclic code generator polynomial, low degree first")
    p.add_argument("--q", type=int, help="primitive N-th root for taft")
    p.add_argument("--zeta", type=int, help="primitive 6th root for cdmm")
    p.add_argument("--exhaustive", action="store_true", default=None)
    p.add_argument("--budget", type=int)
    p.add_argument("--samples", type=int, help="random samples per suite (verify)")
    p.add_argument("--seed", type=int)
    p.add_argument("--format", choices=FORMATS, dest="fmt")
    return p


def load_config(args: argparse.Namespace) -> RunConfig:
    raw: dict[str, Any] = {}
    if args.config:
        try:
            with open(args.config, encoding="utf-8") as fh:
                raw = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise ConfigError(f"cannot read config {args.config}: {exc}") from None
        if not isinstance(raw, dict):
            raise ConfigError("config must be a JSON object")
        raw = {k.replace("-", "_"): v for k, v in raw.items()}
        if "format" in raw:
            raw["fmt"] = raw.pop("format")
    flags = {k: v for k, v in vars(args).items() if v is not None and k != "config"}
    merged = {**raw, **flags}

    command = merged.get("command")
    if command not in COMMANDS:
        raise ConfigError(f"command must be one of {', '.join(COMMANDS)}")
    algebra = merged.get("algebra")
    if algebra not in ALGEBRAS:
        raise ConfigError(f"--algebra must be one of {', '.join(ALGEBRAS)}")
    fmt = merged.get("fmt", "json")
    if fmt not in FORMATS:
        raise ConfigError(f"format must be one of {', '.join(FORMATS)}")

    N = merged.get("N")
    if "prime" in merged and "cyclotomic_order" in merged:
        raise ConfigError("give either --prime or --cyclotomic-order")
    if "prime" in merged:
        fspec = FieldSpec("prime", p=int(merged["prime"]))
    elif "cyclotomic_order" in merged:
        fspec = FieldSpec("cyclotomic", n=int(merged["cyclotomic_order"]))
    elif "field" in merged:
        try:
            fspec = FieldSpec.from_json(merged["field"])
        except (KeyError, TypeError, ValueError) as exc:
            raise ConfigError(f"bad field spec: {exc}") from None
    else:
        fspec = FieldSpec("prime", p=default_prime(algebra, N))

    budget = merged.get("budget")
    if budget is not None and int(budget) <= 0:
        raise ConfigError("budget must be positive")
    samples = int(merged.get("samples", 100))
    if samples < 1:
        raise ConfigError("samples must be positive")

    return RunConfig(
        command=command,
        algebra=algebra,
        field=fspec,
        fmt=fmt,
        budget=int(budget) if budget is not None else None,
        N=int(N) if N is not None else None,
        S=int(merged["S"]) if merged.get("S") is not None else None,
        omega=_int_list(merged.get("omega"), "--omega"),
        n=int(merged["n"]) if merged.get("n") is not None else None,
        ideal=_int_list(merged.get("ideal"), "--ideal"),
        unit_poly=_int_list(merged.get("unit_poly"), "--unit-poly"),
        mu=_int_list(merged.get("mu"), "--mu"),
        nu=_int_list(merged.get("nu"), "--nu"),
        d=_int_list(merged.get("d"), "--d"),
        generator=_int_list(merged.get("generator"), "--generator"),
        q=merged.get("q"),
        zeta=merged.get("zeta"),
        exhaustive=bool(merged.get("exhaustive", False)),
        samples=samples,
        seed=int(merged.get("seed", 0)),
    )


# -- construction ----------------------------------------------------------------------


def make_field(cfg: RunConfig) -> Field:
    try:
        return field_create(cfg.field)
    except errors.HopfcodeError as exc:
        raise ConfigError(str(exc)) from None
    except (TypeError, ValueError) as exc:
        raise ConfigError(f"bad field: {exc}") from None


def _scalar(F: Field, v):
    return None if v is None else F(v)


def build(cfg: RunConfig):
    """``(algebra, hopf structure or None)`` for the configured family."""
    from hopfcode.hopf.named import build_cdmm, build_cyclic, build_taft
    from hopfcode.omega import OmegaSpec, build_omega_algebra

    F = make_field(cfg)
    if cfg.algebra == "omega":
        if cfg.S is None or cfg.N is None:
            raise ConfigError("omega needs --S and --N")
        omega = cfg.omega if cfg.omega is not None else tuple(range(cfg.S))
        try:
            spec = OmegaSpec(cfg.S, omega, cfg.N)
        except errors.HopfcodeError as exc:
            raise ConfigError(str(exc)) from None
        return build_omega_algebra(spec, F), None
    if cfg.algebra == "taft":
        if cfg.N is None:
            raise ConfigError("taft needs --N")
        h = build_taft(cfg.N, F, _scalar(F, cfg.q))
    elif cfg.algebra == "cdmm":
        h = build_cdmm(F, _scalar(F, cfg.zeta))
    else:
        if cfg.n is None:
            raise ConfigError("cyclic needs --n")
        h = build_cyclic(cfg.n, F)
    return h.algebra, h


def omega_form(cfg: RunConfig, alg):
    """Monomial form on ``k(omega, N)`` from ``--mu``, ``--nu``, ``--d`` (defaults: identity, reversal, 1)."""
    from hopfcode.forms import gram_matrix, omega_form_spec

    F = alg.field
    mu = cfg.mu if cfg.mu is not None else tuple(range(alg.s_size))
    nu = cfg.nu if cfg.nu is not None else tuple(alg.capN - 1 - m for m in range(alg.capN))
    d = cfg.d if cfg.d is not None else (1,)
    if len(d) not in (1, alg.dim):
        raise ConfigError(f"--d needs 1 or {alg.dim} values")
    values = [F(c) for c in d] * (alg.dim if len(d) == 1 else 1)
    try:
        spec = omega_form_spec(alg, mu, nu, lambda s, m: values[alg.index(s, m)])
        return gram_matrix(spec, F, algebra=alg), mu, nu
    except (errors.InvalidPermutation, errors.ZeroCoefficient) as exc:
        raise ConfigError(str(exc)) from None


def hopf_form(h):
    from hopfcode.hopf.structure import form_from_integral

    return form_from_integral(h)


# -- commands ----------------------------------------------------------------------------


def cmd_construct(cfg: RunConfig) -> tuple[dict, int]:
    alg, h = build(cfg)
    F = alg.field
    out = {
        "algebra": cfg.algebra,
        "field": cfg.field.to_json(),
        "dim": alg.dim,
        "labels": list(alg.labels),
        "unit": [F.to_json(c) for c in alg.unit],
        "associative": True,
        "unital": True,
    }
    if h is not None:
        from hopfcode.hopf.structure import verify_hopf_axioms

        report = verify_hopf_axioms(h, rng=random.Random(cfg.seed))
        out["name"] = h.name
        out["hopf_axioms"] = {k: not v for k, v in sorted(report.items())}
        out["counit"] = [F.to_json(c) for c in h.counit]
        out["integral"] = [F.to_json(c) for c in h.integral]
        ok = all(out["hopf_axioms"].values())
        return out, EXIT_OK if ok else EXIT_VERIFY
    return out, EXIT_OK


def _ideal_entry(alg, s, t, sub) -> dict:
    return {"s": s, "t": t, "dim": sub.dim, "basis": sub.subspace.to_json()}


def cmd_ideals(cfg: RunConfig) -> tuple[dict, int]:
    from hopfcode.algebra import enumerate_right_submodules, is_indecomposable
    from hopfcode.omega import classify_indecomposables, representatives

    alg, h = build(cfg)
    if cfg.algebra == "cyclic":
        from hopfcode.hopf.named import cyclic_idempotent_form

        try:
            _, alg = cyclic_idempotent_form(h)
        except errors.NoSuchRoot as exc:
            raise errors.ConstructionError(f"no idempotent basis: {exc}") from None
    reps = representatives(alg)
    out = {
        "algebra": cfg.algebra,
        "dim": alg.dim,
        "representatives": [_ideal_entry(alg, s, t, sub) for (s, t), sub in reps],
        "count": len(reps),
    }
    if cfg.exhaustive:
        family = classify_indecomposables(alg, budget=cfg.budget)
        out["family"] = [c.to_json() for c in family]
        out["family_size"] = len(family)
        subs = enumerate_right_submodules(alg, cfg.budget)
        ind = {m.subspace.basis for m in subs if is_indecomposable(m, subs)}
        fam = {c.submodule.subspace.basis for c in family}
        out["submodule_count"] = len(subs)
        out["indecomposable_count"] = len(ind)
        out["cross_check"] = ind == fam
        return out, EXIT_OK if ind == fam else EXIT_VERIFY
    return out, EXIT_OK


def _subspace_json(w) -> dict:
    return {"dim": w.dim, "basis": w.to_json()}


def cmd_orthogonal(cfg: RunConfig) -> tuple[dict, int]:
    from hopfcode.forms import orthogonal_left, orthogonal_right, predicted_orthogonal_Nst
    from hopfcode.omega import ideal_N

    alg, h = build(cfg)
    if cfg.algebra == "cyclic":
        return _cyclic_orthogonal(cfg, h)
    if cfg.ideal is None:
        raise ConfigError("--ideal is required")
    if cfg.algebra == "omega":
        if len(cfg.ideal) != 2:
            raise ConfigError("--ideal takes s,t for omega")
        s, t = cfg.ideal
        form, mu, nu = omega_form(cfg, alg)
        _range_check(alg, s, t)
        predicted, (s2, t2) = predicted_orthogonal_Nst(alg, mu, nu, s, t)
        ideal = ideal_N(alg, s, t).subspace
        right = orthogonal_right(form, ideal)
        left_partner = orthogonal_left(form, ideal_N(alg, s2, t2).subspace)
        out = {
            "ideal": {"s": s, "t": t, "dim": ideal.dim},
            "predicted": _subspace_json(predicted),
            "computed": _subspace_json(right),
            "computed_left": _subspace_json(orthogonal_left(form, ideal)),
            "left_orthogonal_partner": {"s": s2, "t": t2, "equal": left_partner == right},
            "equal": predicted == right,
            "self_orthogonal": right == ideal,
        }
        return out, EXIT_OK if out["equal"] else EXIT_VERIFY

    from hopfcode.hopf.theorems import theorem_orthogonal_cdmm, theorem_orthogonal_taft
    from hopfcode.hopf.named import cdmm_index

    form = hopf_form(h)
    if cfg.algebra == "taft":
        if len(cfg.ideal) != 2:
            raise ConfigError("--ideal takes s,m for taft")
        s, m = cfg.ideal
        _range_check(alg, s, m)
        check = theorem_orthogonal_taft(h, s, m, cfg.unit_poly, form=form)
        ideal = ideal_N(alg, s, m).subspace
        selector = {"s": s, "m": m}
    else:
        if len(cfg.ideal) != 3:
            raise ConfigError("--ideal takes s,t,m for cdmm")
        s, t, m = cfg.ideal
        check = theorem_orthogonal_cdmm(h, s, t, m, cfg.unit_poly, form=form)
        ideal = ideal_N(alg, cdmm_index(s, t), m).subspace
        selector = {"s": s, "t": t, "m": m}
    if cfg.unit_poly is not None:
        from hopfcode.algebra import left_multiply_subspace
        from hopfcode.hopf.theorems import unit_in_R

        ideal = left_multiply_subspace(unit_in_R(alg, cfg.unit_poly), ideal)
        selector["unit_poly"] = list(cfg.unit_poly)
    out = {
        "ideal": {**selector, "dim": ideal.dim},
        "predicted": _subspace_json(check.predicted),
        "computed": _subspace_json(check.computed_right),
        "computed_left": _subspace_json(check.computed_left),
        "left_equals_right": check.sides_agree,
        "equal": check.equal,
        "self_orthogonal": check.computed_right == ideal,
    }
    return out, EXIT_OK if check.equal else EXIT_VERIFY


def _range_check(alg, s, t):
    if not (0 <= s < alg.s_size and 0 <= t < alg.capN):
        raise ConfigError(f"ideal ({s}, {t}) out of range")


def _cyclic_orthogonal(cfg: RunConfig, h) -> tuple[dict, int]:
    from hopfcode.hopf.codes import CyclicCode, cyclic_dual, dual_via_form, format_poly

    if cfg.generator is None:
        raise ConfigError("cyclic orthogonals need --generator")
    F = h.field
    try:
        code = CyclicCode(h.dim, tuple(F(c) for c in cfg.generator), F)
    except (errors.NotADivisor, errors.ConstructionError) as exc:
        raise ConfigError(str(exc)) from None
    dual = cyclic_dual(code, h)
    perp = dual_via_form(code, h)
    expected = dual.as_ideal(h).subspace
    out = {
        "code": {**code.to_json(), "generator_poly": format_poly(F, code.generator)},
        "dual": {**dual.to_json(), "generator_poly": format_poly(F, dual.generator)},
        "orthogonal": _subspace_json(perp),
        "equal": perp == expected,
    }
    return out, EXIT_OK if out["equal"] else EXIT_VERIFY


def cmd_verify(cfg: RunConfig) -> tuple[dict, int]:
    from hopfcode import verify

    alg, h = build(cfg)
    rng = random.Random(cfg.seed)
    if h is None:
        form, mu, nu = omega_form(cfg, alg)
        report = verify.run_omega(alg, form, mu, nu, rng=rng, samples=cfg.samples, budget=cfg.budget)
    else:
        report = verify.run_named(h, rng=rng, samples=cfg.samples)
    out = {"algebra": cfg.algebra, "field": cfg.field.to_json(), **report.to_json()}
    if not report.passed:
        out["failing_entries"] = report.failing()
    return out, EXIT_OK if report.passed else EXIT_VERIFY


def cmd_gram(cfg: RunConfig) -> tuple[dict, int]:
    from hopfcode.forms import gram_to_json

    alg, h = build(cfg)
    form = omega_form(cfg, alg)[0] if h is None else hopf_form(h)
    cert = form.certificate
    out = {
        "labels": list(alg.labels),
        "gram": gram_to_json(form),
        "monomial": cert is not None,
        "symmetric": form.is_symmetric(),
    }
    if cert is not None:
        out["sigma"] = list(cert.sigma)
        out["d"] = [alg.field.to_json(c) for c in cert.d]
    out["_form"] = form
    return out, EXIT_OK


HANDLERS = {
    "construct": cmd_construct,
    "ideals": cmd_ideals,
    "orthogonal": cmd_orthogonal,
    "verify": cmd_verify,
    "gram": cmd_gram,
}


# -- output ----------------------------------------------------------------------


def _table(obj, indent: int = 0) -> list[str]:
    pad = "  " * indent
    lines = []
    if isinstance(obj, dict):
        for k in sorted(obj):
            v = obj[k]
            if isinstance(v, (dict, list)) and v and not _flat(v):
                lines.append(f"{pad}{k}:")
                lines.extend(_table(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {_cell(v)}")
    elif isinstance(obj, list):
        for v in obj:
            if isinstance(v, (dict, list)) and not _flat(v):
                lines.append(f"{pad}-")
                lines.extend(_table(v, indent + 1))
            else:
                lines.append(f"{pad}- {_cell(v)}")
    return lines


def _flat(v) -> bool:
    return isinstance(v, list) and all(not isinstance(x, (dict, list)) for x in v)


def _cell(v) -> str:
    if isinstance(v, list):
        return " ".join(str(x) for x in v)
    if isinstance(v, bool):
        return "yes" if v else "no"
    return str(v)


def _csv(cfg: RunConfig, out: dict, alg_labels=None) -> str:
    import csv
    import io

    if "_form" in out:
        from hopfcode.forms import gram_to_csv

        return gram_to_csv(out["_form"], out["labels"])
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    if cfg.command == "ideals":
        w.writerow(["s", "t", "dim"])
        for r in out["representatives"]:
            w.writerow([r["s"], r["t"], r["dim"]])
    elif cfg.command == "verify":
        w.writerow(["entry", "passed", "checks", "failures"])
        for k, e in out["entries"].items():
            w.writerow([k, e["passed"], e["checks"], e["failures"]])
    else:
        w.writerow(["key", "value"])
        for k in sorted(out):
            w.writerow([k, json.dumps(out[k], sort_keys=True)])
    return buf.getvalue()


def render(cfg: RunConfig, out: dict) -> str:
    if cfg.fmt == "csv":
        return _csv(cfg, out)
    out = {k: v for k, v in out.items() if not k.startswith("_")}
    if cfg.fmt == "table":
        return "\n".join(_table(out)) + "\n"
    return json.dumps(out, sort_keys=True, indent=2) + "\n"


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_CONFIG if exc.code else EXIT_OK
    try:
        cfg = load_config(args)
        out, code = HANDLERS[cfg.command](cfg)
    except ConfigError as exc:
        print(f"hopfcode: configuration error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except (errors.BudgetExceeded, errors.HypothesisViolated) as exc:
        print(f"hopfcode: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (errors.IndexOutOfRange, errors.NotInvertible, errors.InvalidPermutation, errors.CompositeModulus, errors.InvalidOrder) as exc:
        print(f"hopfcode: configuration error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except errors.HopfcodeError as exc:
        print(f"hopfcode: construction failed: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_CONSTRUCTION
    sys.stdout.write(render(cfg, out))
    if code == EXIT_VERIFY and "failing_entries" in out:
        print("hopfcode: failing entries: " + ", ".join(out["failing_entries"]), file=sys.stderr)
    return code


if __name__ == "__main__":
    raise SystemExit(main())
