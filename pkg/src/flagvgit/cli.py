"""Command line: ``flagvgit <command> --embedding ... --lambda ...``.

Exit codes: 0 success, 2 validation error, 3 cap exceeded, 4 internal
invariant violation.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import liealg
from .embed import (EmbeddingDatum, EmbeddingError, diagonal_embedding, embedding_from_spec,
                    principal_embedding, xi_max)
from .rootcore import CapExceeded, build_root_datum, parse_type

EXIT_OK, EXIT_VALIDATION, EXIT_CAP, EXIT_INTERNAL = 0, 2, 3, 4

SEEDED = {"cones", "chambers", "strata", "fit-pairs"}


class ValidationError(ValueError):
    pass


# ------------------------------------------------------------ config

def load_embedding(text: str, weyl_cap: int | None = None) -> EmbeddingDatum:
    """A JSON file, inline JSON, or a preset diag:<type>:<k> / principal:<type> / identity:<type>."""
    if text is None:
        raise ValidationError("--embedding is required")
    spec = None
    if os.path.isfile(text):
        with open(text) as fh:
            spec = json.load(fh)
    elif text.lstrip().startswith("{"):
        try:
            spec = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ValidationError(f"bad embedding JSON: {exc}") from exc
    if spec is not None:
        return embedding_from_spec(spec, weyl_cap)
    parts = text.split(":")
    kw = {"weyl_cap": weyl_cap} if weyl_cap else {}
    try:
        if parts[0] in ("diag", "diagonal") and len(parts) == 3:
            return diagonal_embedding(build_root_datum(parse_type(parts[1]), **kw), int(parts[2]))
        if parts[0] == "principal" and len(parts) == 2:
            return principal_embedding(build_root_datum(parse_type(parts[1]), **kw))
        if parts[0] == "identity" and len(parts) == 2:
            return diagonal_embedding(build_root_datum(parse_type(parts[1]), **kw), 1)
    except (ValueError, IndexError) as exc:
        raise ValidationError(f"bad embedding preset {text!r}: {exc}") from exc
    raise ValidationError(f"unknown embedding {text!r} (file, JSON, diag:A1:4, principal:A2, identity:B2)")


def parse_weight(text: str | None, n: int) -> tuple[int, ...]:
    if text is None:
        raise ValidationError("--lambda is required")
    try:
        lam = tuple(int(x) for x in text.replace(" ", "").split(",") if x != "")
    except ValueError as exc:
        raise ValidationError(f"bad weight {text!r}") from exc
    if len(lam) != n:
        raise ValidationError(f"weight needs {n} coordinates, got {len(lam)}")
    return lam


def _strictly_dominant(lam):
    if any(x <= 0 for x in lam):
        raise ValidationError("weight must be strictly dominant (all coordinates > 0)")


def _json_default(o):
    if isinstance(o, Fraction):
        return str(o)
    if hasattr(o, "item"):
        return o.item()
    raise TypeError(type(o).__name__)


def _describe(E: EmbeddingDatum) -> dict:
    return {"ghat": E.ghat.name if hasattr(E.ghat, "name") else repr(E.ghat),
            "g": E.g.name if hasattr(E.g, "name") else repr(E.g),
            "kind": E.kind, "iota": [[str(x) for x in row] for row in E.iota]}


# ------------------------------------------------------------ commands

def cmd_ample(E, args) -> dict:
    from .oracle import membership
    from .popov import build_tree
    from .strat import codim_unstable
    lam = parse_weight(args.lam, E.g.rank)
    _strictly_dominant(lam)
    tree = build_tree(E, lam)
    c = codim_unstable(E, lam)
    out = {"ample": tree.sign == "+", "codim_unstable": 0 if c is None else c, "tree": tree.as_dict(),
           "tree_height": tree.height,
           "provenance": "ample iff the root of the signed Levi-orbit tree is '+'; codim is the "
                         "minimum over stratifying pairs of r - rhat - l"}
    if E.ghat.rank <= 3 and max(lam) <= 8:
        try:
            out["oracle"] = membership(E, lam, args.jmax).as_dict()
        except CapExceeded as exc:
            out["oracle"] = {"skipped": str(exc)}
    else:
        out["oracle"] = {"skipped": "outside the oracle box (rank <= 3, coordinates <= 8)"}
    return out


def cmd_cones(E, args) -> dict:
    from .cones import ck_cone, rho_criterion
    cones = {}
    for k in range(1, args.k + 1):
        cones[str(k)] = ck_cone(E, k, args.trials, args.seed).as_dict()
    n = E.g.rank
    out = {"cones": cones,
           "provenance": "C_k cut out by lam(u^-1 xi') <= 0 over fit pairs of length r - rhat - k + 1"}
    if args.k >= 2:
        d2 = cones["2"]["dim"]
        out["movable_chambers"] = d2 == n
        out["C2_zero"] = d2 == 0
        out["verdict"] = ("movable chambers exist (C2 has full dimension)" if d2 == n else
                          "no movable chambers: C2 = 0" if d2 == 0 else
                          f"no movable chambers: dim C2 = {d2} < {n}")
    crit = rho_criterion(E)
    out["rho_criterion"] = {"value": crit, "sufficient": crit is not None and crit >= 2}
    return out


def cmd_chambers(E, args) -> dict:
    from .cones import no_jump_audit, t_chambers
    G = t_chambers(E, args.cap_hyperplanes, args.trials, args.seed, walls=True)
    rep = no_jump_audit(G)
    out = G.as_dict()
    out["no_jump"] = {"ok": rep.ok, "adjacent": rep.adjacent, "closures": rep.closures,
                      "violations": rep.violations}
    out["provenance"] = ("chambers of the hyperplanes lam(u^-1 xi') = 0 inside the dominant cone; "
                         "a facet is a hat G-wall iff the restricted weight is ample for the Levi pair")
    return out


def cmd_t_chambers(E, args) -> dict:
    from .cones import t_chambers
    from .strat import t_codim_unstable
    G = t_chambers(E, args.cap_hyperplanes, walls=False)
    out = {"hyperplanes": [list(h) for h in G.hyperplanes],
           "chambers": [{"sample": list(c.sample), "signs": list(c.signs),
                         "t_codim": t_codim_unstable(E, c.sample)} for c in G.chambers],
           "facets": [{"chambers": [f.a, f.b], "normal": list(f.normal), "sample": list(f.sample),
                       "t_codim": t_codim_unstable(E, f.sample)} for f in G.facets],
           "provenance": "maximal-torus chambers; codim is min over Xi_max of r - l+"}
    return out


def cmd_strata(E, args) -> dict:
    from .strat import components, stratifying_pairs
    lam = parse_weight(args.lam, E.g.rank)
    _strictly_dominant(lam)
    recs = stratifying_pairs(E, lam, args.trials, args.seed)
    comp = {id(r) for r in components(recs)}
    rows = [{"xi": [str(x) for x in r.xi], "w": list(r.w.word), "m": r.m, "dim": r.dim, "codim": r.codim,
             "fit": r.fit, "measured_dim": r.measured_dim, "stabilized": r.stabilized,
             "component": id(r) in comp} for r in recs]
    return {"strata": rows, "codim_unstable": min((r.codim for r in recs), default=None),
            "seed": args.seed, "trials": args.trials,
            "provenance": "dim of each stratum is rhat + n + l; components are strata not in the "
                          "closure of another with the same xi"}


def cmd_fit_pairs(E, args) -> dict:
    from .liealg import generic_orbit_dim
    rows = []
    for xi, sigma, ld in xi_max(E):
        for u in sorted(ld.min_reps, key=lambda v: (v.length, v.word)):
            w = ld.twist(u)
            rep = generic_orbit_dim(E, ld.xi, w, args.trials, args.seed)
            rows.append({"xi": [str(x) for x in ld.xi], "w": list(w.word), "length": u.length,
                         "expected_dim": rep.expected, "measured_dim": rep.dim, "fit": rep.fit,
                         "ranks": rep.ranks, "stabilized": rep.stabilized})
    return {"pairs": rows, "seed": args.seed, "trials": args.trials,
            "provenance": "a pair is fit when the sweep of its parabolic orbit has the expected dimension"}


def cmd_oracle(E, args) -> dict:
    from .oracle import invariant_dim, membership
    lam = parse_weight(args.lam, E.g.rank)
    if any(x < 0 for x in lam):
        raise ValidationError("weight must be dominant")
    dims = {str(j): invariant_dim(E, [j * x for x in lam]) for j in range(1, args.jmax + 1)}
    return {"invariant_dims": dims, "membership": membership(E, lam, args.jmax).as_dict(),
            "provenance": "trivial multiplicity of V_{j lam} restricted to hat G"}


def cmd_reproduce(args) -> dict:
    from .acceptance import run_all
    res = run_all(args.trials, args.seed, args.cap_weyl, include_a3=not args.quick)
    return {"results": [r.as_dict() for r in res],
            "summary": {s: sum(1 for r in res if r.status == s) for s in ("pass", "fail", "skipped")}}


COMMANDS = {
    "ample": cmd_ample, "cones": cmd_cones, "chambers": cmd_chambers, "t-chambers": cmd_t_chambers,
    "strata": cmd_strata, "fit-pairs": cmd_fit_pairs, "oracle": cmd_oracle,
}


def _text(cmd: str, out: dict) -> str:
    if cmd == "ample":
        return f"ample: {str(out['ample']).lower()}, codim(X^us)={out['codim_unstable']}"
    if cmd == "reproduce":
        lines = [f"[{r['status'].upper():7}] {r['key']:4} {r['title']}" for r in out["results"]]
        s = out["summary"]
        lines.append(f"pass {s['pass']}  fail {s['fail']}  skipped {s['skipped']}")
        return "\n".join(lines)
    if cmd == "cones":
        lines = [f"C_{k}: dim {c['dim']}, {len(c['functionals'])} functionals, interior point "
                 f"{tuple(c['interior_point'])}" for k, c in out["cones"].items()]
        if "verdict" in out:
            lines.append(out["verdict"])
        return "\n".join(lines)
    if cmd == "chambers":
        lines = [f"{len(out['chambers'])} chambers, {len(out['facets'])} facets, "
                 f"no-jump {'pass' if out['no_jump']['ok'] else 'FAIL'}"]
        lines += [f"  chamber {i}: sample {tuple(c['sample'])} codim {c['codim']}"
                  for i, c in enumerate(out["chambers"])]
        lines += [f"  facet {f['chambers']}: codim {f['codim']} wall {f['hat_g_wall']}" for f in out["facets"]]
        return "\n".join(lines)
    if cmd == "strata":
        lines = [f"codim(X^us) = {out['codim_unstable']}"]
        lines += [f"  xi={tuple(r['xi'])} w={tuple(r['w'])} codim {r['codim']} fit {r['fit']}"
                  f"{' *' if r['component'] else ''}" for r in out["strata"]]
        return "\n".join(lines)
    return json.dumps(out, indent=1, sort_keys=True, default=_json_default)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="flagvgit", description="GIT on flag varieties for subgroup pairs")
    p.add_argument("command", choices=sorted(COMMANDS) + ["reproduce"])
    p.add_argument("--embedding")
    p.add_argument("--lambda", dest="lam")
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--trials", type=int, default=4)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--jmax", type=int, default=6)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--cap-weyl", type=int, default=None)
    p.add_argument("--cap-dim", type=int, default=None)
    p.add_argument("--cap-hyperplanes", type=int, default=64)
    p.add_argument("--quick", action="store_true", help="reproduce: skip the slowest table entry")
    return p


def run(argv=None) -> tuple[int, str]:
    args = build_parser().parse_args(argv)
    try:
        if args.trials < 3:
            raise ValidationError("--trials must be >= 3")
        if args.k < 1 or args.jmax < 1:
            raise ValidationError("--k and --jmax must be >= 1")
        if args.command in SEEDED and args.seed is None:
            raise ValidationError(f"'{args.command}' uses the randomized rank oracle: --seed is required")
        if args.seed is None:
            args.seed = 0
        if args.cap_dim is not None:
            liealg.DEFAULT_DIM_CAP = args.cap_dim
        if args.command == "reproduce":
            out = cmd_reproduce(args)
        else:
            E = load_embedding(args.embedding, args.cap_weyl)
            out = COMMANDS[args.command](E, args)
            out = {"command": args.command, "embedding": _describe(E), **out}
        out["config"] = {"seed": args.seed, "trials": args.trials, "jmax": args.jmax}
        if args.format == "json":
            return EXIT_OK, json.dumps(out, sort_keys=True, default=_json_default)
        return EXIT_OK, _text(args.command, out)
    except (ValidationError, EmbeddingError) as exc:
        return EXIT_VALIDATION, f"error: {exc}"
    except CapExceeded as exc:
        return EXIT_CAP, f"cap exceeded: {exc}"
    except Exception as exc:  # noqa: BLE001
        from .cones import CapError
        if isinstance(exc, CapError):
            return EXIT_CAP, f"cap exceeded: {exc}"
        if isinstance(exc, ValueError):
            return EXIT_VALIDATION, f"error: {exc}"
        return EXIT_INTERNAL, f"internal error: {type(exc).__name__}: {exc}"


def main(argv=None) -> int:
    code, text = run(argv)
    print(text, file=sys.stdout if code == EXIT_OK else sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
