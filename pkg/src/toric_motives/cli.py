"""
Command line interface.

    toric-motives fan-check FAN.json...
    toric-motives resolve FAN.json...
    toric-motives motive FAN.json... [--homology H.json] [--compact-support] [--json] [--diagnostic]
    toric-motives curve --branches 2,2,2
    toric-motives cellularity FAN.json... [--bound N]
    toric-motives cofiber E.json Z.json XT.json [--x X.json]

Exit codes: 0 success, 2 invalid input, 3 undetermined or obstructed motive,
4 cellularity not certified. With several input files the largest code wins;
output follows input order even with ``--jobs``.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Optional

from .cellularity import Status, singular_locus_graph
from .errors import (
    CellularityNotCertified,
    CompletenessMismatch,
    HypothesisViolated,
    RefinementError,
    ToricMotiveError,
    UnsupportedSingularStratum,
    WrongDimension,
)
from .fan import Fan, is_smooth_fan, minimal_singular_cones, refines, validate_fan
from .io import FanFile, load_fan, load_homology
from .lattice import format_vector
from .motive import (
    assemble_motive,
    certify_resolution,
    cofiber_diagnostic,
    curve_motive,
    exceptional_motive,
    is_pure_tate,
    surface_cofiber,
    toric_surface_report,
)
from .resolution import resolve_fan_2d

OK, INVALID, UNDETERMINED, NOT_CERTIFIED = 0, 2, 3, 4


@dataclass
class Outcome:
    code: int = OK
    lines: list[str] = field(default_factory=list)
    data: dict = field(default_factory=dict)


def _cones_text(fan: Fan, cones) -> str:
    return ", ".join("Cone(" + ", ".join(format_vector(r) for r in fan.generators(c)) + ")" for c in cones)


def _load_checked(path: str) -> tuple[FanFile, object]:
    ff = load_fan(path)
    profile = validate_fan(ff.fan)
    if ff.complete_hint is not None and ff.complete_hint != profile.is_complete:
        raise CompletenessMismatch(
            f"complete_hint={ff.complete_hint} but the fan is {'' if profile.is_complete else 'not '}complete"
        )
    return ff, profile


def cmd_fan_check(path: str, args) -> Outcome:
    ff, p = _load_checked(path)
    sing = minimal_singular_cones(ff.fan)
    out = Outcome()
    out.lines += [
        f"valid rank-{p.rank} fan: {p.num_rays} rays, {len(ff.fan.maximal_cones)} maximal cones",
        f"d = {p.d}, s = {p.span_dim}, complete = {str(p.is_complete).lower()}",
    ]
    if p.index_m is not None:
        out.lines.append(f"m = {p.index_m}")
    if p.degenerate:
        out.lines.append("degenerate: rays do not span the space")
    out.lines.append(f"minimal singular cones ({len(sing)}): {_cones_text(ff.fan, sing) or 'none'}")
    out.data = {
        "d": list(p.d),
        "span_dim": p.span_dim,
        "complete": p.is_complete,
        "index_m": p.index_m,
        "minimal_singular_cones": [list(c) for c in sing],
    }
    return out


def cmd_resolve(path: str, args) -> Outcome:
    ff, _ = _load_checked(path)
    if ff.fan.rank != 2:
        raise WrongDimension("resolve handles rank-2 fans; supply a refinement for rank 3")
    res = resolve_fan_2d(ff.fan)
    ex = res.exceptional
    out = Outcome()
    out.lines.append(f"added rays ({len(res.added_rays)}): {', '.join(format_vector(r) for r in res.added_rays) or 'none'}")
    for c, n in res.per_cone_chains.items():
        out.lines.append(f"  {_cones_text(ff.fan, [c])}: chain of {n}")
    out.lines.append(f"refined fan: {res.refined_fan}")
    out.lines.append(f"M(E) = {exceptional_motive(ex)}")
    out.data = {
        "added_rays": [list(r) for r in res.added_rays],
        "chains": sorted(ex.chain_lengths),
        "refined": {"rays": [list(r) for r in res.refined_fan.rays], "cones": [list(c) for c in res.refined_fan.cones]},
        "exceptional_motive": exceptional_motive(ex).to_records(),
    }
    return out


def _motive_outcome(label: str, m, notes) -> Outcome:
    out = Outcome()
    out.lines.append(f"{label}(X) = {m}")
    out.lines += [f"  {n}" for n in notes]
    out.data = {"status": "determined", "label": label, "motive": m.to_records(), "text": str(m), "pure_tate": is_pure_tate(m)}
    return out


def _motive_rank2(ff: FanFile, args) -> Outcome:
    try:
        rep = toric_surface_report(ff.fan, quasiprojective=ff.quasiprojective)
    except CellularityNotCertified as exc:
        return Outcome(NOT_CERTIFIED, [f"not certified: {exc}"], {"status": "not_certified", "reason": str(exc)})
    label = "Mc" if (rep.compact_support or args.compact_support) else "M"
    out = _motive_outcome(label, rep.motive, rep.annotations + (f"certificate: {rep.certificate}",))
    if args.diagnostic:
        diag = surface_cofiber(ff.fan)
        out.lines += ["cofiber presentation:"] + [f"  {s}" for s in diag.lines()]
    return out


def _motive_rank3(ff: FanFile, args) -> Outcome:
    if not args.homology:
        raise WrongDimension("rank-3 fans need --homology")
    h = load_homology(args.homology)
    if h.top_degree != 2 * ff.fan.rank:
        raise WrongDimension(f"homology top degree {h.top_degree} != {2 * ff.fan.rank}")
    profile = validate_fan(ff.fan)
    notes = []
    if not is_smooth_fan(ff.fan):
        try:
            g = singular_locus_graph(ff.fan)
        except UnsupportedSingularStratum as exc:
            return Outcome(UNDETERMINED, [f"undetermined: {exc}"], {"status": "undetermined", "reason": str(exc)})
        notes.append(f"singular locus: {len(g.edges)} curves, first Betti number {g.first_betti}")
        if profile.is_complete and g.first_betti > 0:
            reason = f"singular locus has H_1 of rank {g.first_betti}: no cellular resolution exists"
            out = Outcome(UNDETERMINED, [f"obstructed: {reason}"], {"status": "obstructed", "reason": reason})
            try:
                assemble_motive(h)
            except HypothesisViolated as exc:
                out.lines.append(f"undetermined: {exc}")
                out.data["hypothesis"] = str(exc)
            return out
        if ff.refinement is None:
            reason = "singular fan without a refinement"
            return Outcome(NOT_CERTIFIED, [f"not certified: {reason}"], {"status": "not_certified", "reason": reason})
        refined = ff.refinement
        validate_fan(refined)
        if not is_smooth_fan(refined):
            raise RefinementError("the supplied refinement is not smooth")
        if not refines(refined, ff.fan):
            raise RefinementError("the supplied refinement does not refine the fan")
        notes.append("exceptional and singular loci are taken to be cellular (not decided in rank 3)")
    else:
        refined = ff.fan
    cert = certify_resolution(ff.fan, refined, ff.quasiprojective)
    notes.append(f"certificate: {cert}")
    if not cert.is_cellular:
        return Outcome(NOT_CERTIFIED, [f"not certified: {cert.reason}"], {"status": cert.status.value, "reason": cert.reason})
    try:
        m = assemble_motive(h)
    except HypothesisViolated as exc:
        return Outcome(UNDETERMINED, [f"undetermined: {exc}"], {"status": "undetermined", "reason": str(exc)})
    label = "Mc" if (args.compact_support or not profile.is_complete) else "M"
    notes.insert(0, "complete: M = Mc" if profile.is_complete else "compact support")
    notes.insert(1, "pure Tate" if is_pure_tate(m) else "not pure Tate")
    return _motive_outcome(label, m, notes)


def cmd_motive(path: str, args) -> Outcome:
    ff, _ = _load_checked(path)
    return _motive_rank2(ff, args) if ff.fan.rank == 2 else _motive_rank3(ff, args)


def cmd_cellularity(path: str, args) -> Outcome:
    ff, _ = _load_checked(path)
    target = ff.fan
    if ff.refinement is not None:
        validate_fan(ff.refinement)
        if not refines(ff.refinement, ff.fan):
            raise RefinementError("the supplied refinement does not refine the fan")
        target = ff.refinement
    elif ff.fan.rank == 2 and not is_smooth_fan(ff.fan):
        target = resolve_fan_2d(ff.fan).refined_fan
    cert = certify_resolution(ff.fan, target, ff.quasiprojective, bound=args.bound)
    code = {Status.CELLULAR: OK, Status.NOT_CERTIFIED: NOT_CERTIFIED, Status.OBSTRUCTED: UNDETERMINED}[cert.status]
    data = {
        "status": cert.status.value,
        "u": list(cert.u) if cert.u else None,
        "reason": cert.reason,
        "quasiprojective_source": cert.quasiprojective_source.value if cert.quasiprojective_source else None,
    }
    return Outcome(code, [str(cert)], data)


def _run_file(fn: Callable, path: str, args) -> Outcome:
    try:
        out = fn(path, args)
    except ToricMotiveError as exc:
        out = Outcome(INVALID, [f"error: {type(exc).__name__}: {exc}"], {"status": "invalid", "error": type(exc).__name__, "message": str(exc)})
    except OSError as exc:
        out = Outcome(INVALID, [f"error: {exc}"], {"status": "invalid", "error": "OSError", "message": str(exc)})
    out.data = {"file": path, **out.data}
    return out


def _emit(outcomes: list[Outcome], as_json: bool) -> int:
    if as_json:
        payload = [o.data for o in outcomes]
        print(json.dumps(payload if len(payload) > 1 else payload[0], sort_keys=True))
    else:
        multi = len(outcomes) > 1
        for o in outcomes:
            if multi:
                print(f"== {o.data['file']}")
            for line in o.lines:
                print(line)
    return max(o.code for o in outcomes)


def _batch(fn: Callable, args) -> int:
    if args.jobs > 1 and len(args.paths) > 1:
        with ThreadPoolExecutor(max_workers=args.jobs) as pool:
            outcomes = list(pool.map(lambda p: _run_file(fn, p, args), args.paths))
    else:
        outcomes = [_run_file(fn, p, args) for p in args.paths]
    return _emit(outcomes, args.json)


def _curve(args) -> int:
    try:
        text = args.branches.strip()
        branches = [int(b) for b in text.split(",")] if text else []
        m = curve_motive(branches)
    except (ValueError, ToricMotiveError) as exc:
        print(f"error: {exc}")
        return INVALID
    if args.json:
        print(json.dumps({"motive": m.to_records(), "text": str(m), "pure_tate": is_pure_tate(m)}, sort_keys=True))
    else:
        print(f"M(C) = {m}")
        print(f"  {'pure Tate' if is_pure_tate(m) else 'not pure Tate'}")
    return OK


def _cofiber(args) -> int:
    try:
        e, z, xt = (load_homology(p) for p in (args.e, args.z, args.xt))
        x = load_homology(args.x) if args.x else None
        rep = cofiber_diagnostic(e, z, xt, x)
    except (ToricMotiveError, OSError, ValueError) as exc:
        print(f"error: {exc}")
        return INVALID
    if args.json:
        print(json.dumps({
            "source": rep.source.to_records(),
            "target": rep.target.to_records(),
            "constraints": [c.__dict__ for c in rep.constraints],
            "status": rep.status,
        }, sort_keys=True))
    else:
        print("\n".join(rep.lines()))
        print(f"note: {rep.note}")
    return UNDETERMINED


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="toric-motives", description="Motives of toric surfaces, curves and threefolds.")
    sub = ap.add_subparsers(dest="command", required=True)

    def with_paths(name, help_):
        p = sub.add_parser(name, help=help_)
        p.add_argument("paths", nargs="+", metavar="FAN.json")
        p.add_argument("--json", action="store_true", help="structured output")
        p.add_argument("--jobs", type=int, default=1, help="process files concurrently")
        return p

    with_paths("fan-check", "validate a fan and print its profile")
    with_paths("resolve", "HJ resolution of a rank-2 fan")
    p = with_paths("motive", "motive (or motive with compact support) of X_Sigma")
    p.add_argument("--homology", help="Borel-Moore homology file (required in rank 3)")
    p.add_argument("--compact-support", action="store_true", help="label the output as Mc even for complete fans")
    p.add_argument("--diagnostic", action="store_true", help="also print the cofiber presentation (rank 2)")
    p = with_paths("cellularity", "cellularity certificate of the fan or its resolution")
    p.add_argument("--bound", type=int, default=None, help="search bound for the regular vector")

    p = sub.add_parser("curve", help="motive of a rational curve from branch counts")
    p.add_argument("--branches", required=True, help='comma-separated branch counts, "" for a smooth curve')
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("cofiber", help="cofiber presentation from homology of E, Z and the resolution")
    p.add_argument("e", metavar="E.json")
    p.add_argument("z", metavar="Z.json")
    p.add_argument("xt", metavar="XT.json")
    p.add_argument("--x", help="homology of X, pins down the ranks of the map")
    p.add_argument("--json", action="store_true")
    return ap


COMMANDS = {
    "fan-check": cmd_fan_check,
    "resolve": cmd_resolve,
    "motive": cmd_motive,
    "cellularity": cmd_cellularity,
}


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "curve":
        return _curve(args)
    if args.command == "cofiber":
        return _cofiber(args)
    return _batch(COMMANDS[args.command], args)


if __name__ == "__main__":
    sys.exit(main())
