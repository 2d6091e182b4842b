"""``ohmgraph`` command line.

Exit codes: 0 success, 1 the property under test fails (a JSON witness is
printed), 2 bad input, 3 a size cap was hit.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass, fields
from pathlib import Path

from . import exact, grassmann, io, metrics, netcore, reconstruct
from .errors import CapExceeded, FormatError, NotInvolution, NotKalmanson, OhmgraphError

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_CAP = 0, 1, 2, 3
FORMATS = ("json", "csv", "dot")


@dataclass
class Config:
    plucker_n_cap: int = grassmann.PLUCKER_N_CAP
    order_search_cap: int = metrics.ORDER_SEARCH_CAP
    spanning_tree_edge_cap: int = netcore.SPANNING_TREE_EDGE_CAP
    format: str = "json"

    @classmethod
    def parse(cls, text: str) -> "Config":
        """``key = value`` lines; ``#`` starts a comment; strings may be quoted."""
        cfg = cls()
        known = {f.name: f.type for f in fields(cls)}
        for lineno, raw in enumerate(text.splitlines(), start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise FormatError(f"config line {lineno}: expected key = value")
            key, value = (part.strip() for part in line.split("=", 1))
            value = value.strip("\"'")
            if key not in known:
                raise FormatError(f"config line {lineno}: unknown key {key!r}")
            if key == "format":
                if value not in FORMATS:
                    raise FormatError(f"config line {lineno}: format must be one of {', '.join(FORMATS)}")
                cfg.format = value
                continue
            try:
                number = int(value)
            except ValueError:
                raise FormatError(f"config line {lineno}: {key} must be an integer") from None
            if number <= 0:
                raise FormatError(f"config line {lineno}: {key} must be positive")
            setattr(cfg, key, number)
        return cfg


class Result:
    def __init__(self, payload, code: int = EXIT_OK, text: str | None = None):
        self.payload, self.code, self.text = payload, code, text

    def render(self) -> str:
        return self.text if self.text is not None else io.dumps(self.payload)


# --------------------------------------------------------------------------
# argument helpers


def _order(args, n: int):
    if args.order is None:
        return tuple(range(1, n + 1))
    try:
        order = tuple(int(x) for x in args.order.split(","))
    except ValueError:
        raise FormatError(f"--order must be comma-separated integers, got {args.order!r}") from None
    if sorted(order) != list(range(1, n + 1)):
        raise FormatError(f"--order {args.order} is not a permutation of 1..{n}")
    return order


def _metric(args):
    d = io.load_matrix(Path(args.metric))
    problems = metrics.check_metric(d)
    if any(p["kind"] != "triangle" for p in problems):
        bad = next(p for p in problems if p["kind"] != "triangle")
        raise FormatError(f"not a distance matrix: {bad}")
    return d


def _matrix_result(m, cfg: Config, **extra):
    if cfg.format == "csv":
        return Result(None, text=io.matrix_to_csv(m))
    return Result({"matrix": io.matrix_to_json(m), **extra})


def _network_result(g, cfg: Config):
    if cfg.format == "dot":
        return Result(None, text=io.network_to_dot(g))
    return Result(io.network_to_json(g))


def _verdict(v, **extra):
    return Result({"ok": v.ok, **extra, "witness": io.to_jsonable(v.witness)}, EXIT_OK if v.ok else EXIT_FAIL)


def _not_kalmanson(exc: NotKalmanson, d, order):
    witness = io.to_jsonable(exc.witness)
    return Result({"ok": False, "reason": "not_kalmanson", "order": list(order), "metric": io.matrix_to_json(d), "witness": witness}, EXIT_FAIL)


# --------------------------------------------------------------------------
# subcommands


def cmd_response(args, cfg):
    return _matrix_result(netcore.response_matrix(io.load_network(Path(args.network))), cfg)


def cmd_resistance(args, cfg):
    return _matrix_result(netcore.resistance_matrix(io.load_network(Path(args.network))), cfg)


def cmd_oracle_resistance(args, cfg):
    g = io.load_network(Path(args.network))
    cap = cfg.spanning_tree_edge_cap
    b = g.boundary
    n = len(b)
    d = [[netcore.resistance_oracle(g, b[i], b[j], cap) if i != j else 0 for j in range(n)] for i in range(n)]
    return _matrix_result(exact.matrix(d), cfg)


def cmd_kalmanson(args, cfg):
    d = _metric(args)
    order = _order(args, len(d))
    return _verdict(metrics.kalmanson_check(d, order), order=list(order), metric=io.matrix_to_json(d))


def cmd_find_order(args, cfg):
    d = _metric(args)
    order = metrics.find_circular_order(d, cap=cfg.order_search_cap)
    return Result({"order": list(order) if order else None}, EXIT_OK if order else EXIT_FAIL)


def cmd_split_decompose(args, cfg):
    d = _metric(args)
    order = _order(args, len(d))
    try:
        system = metrics.split_weights(d, order)
    except NotKalmanson as exc:
        return _not_kalmanson(exc, d, order)
    return Result(io.splits_to_json(system))


def cmd_splits_to_metric(args, cfg):
    return _matrix_result(metrics.metric_from_splits(io.load_splits(Path(args.splits))), cfg)


def cmd_gromov(args, cfg):
    d = _metric(args)
    if not 1 <= args.base <= len(d):
        raise FormatError(f"--base must lie in 1..{len(d)}")
    return _matrix_result(metrics.gromov_transform(d, args.base), cfg)


def cmd_m_of_d(args, cfg):
    d = _metric(args)
    order = _order(args, len(d))
    return _matrix_result(metrics.m_of_d(d, order), cfg, order=list(order))


def _omega(args):
    if args.response is not None:
        return grassmann.build_omega_response(io.load_matrix(Path(args.response)))
    if args.metric is None:
        raise FormatError("give --metric or --response")
    d = _metric(args)
    return grassmann.build_omega_resistance(d, _order(args, len(d)))


def cmd_omega(args, cfg):
    om = _omega(args)
    if cfg.format == "csv":
        return Result(None, text=io.matrix_to_csv(om.as_lists()))
    return Result({"form": om.form, "deleted_row": om.deleted_row, "rows": io.matrix_to_json(om.as_lists())})


def _subsets(text):
    if text is None:
        return None
    try:
        return [tuple(int(c) for c in part.split(",")) for part in text.split(";") if part.strip()]
    except ValueError:
        raise FormatError("--subsets looks like '1,2,3;2,4,6'") from None


def cmd_plucker(args, cfg):
    om = _omega(args)
    p = grassmann.plucker(om, cap=cfg.plucker_n_cap, subsets=_subsets(args.subsets))
    try:
        cert = grassmann.certify_nonnegative(p)
    except grassmann.AllZero:
        return Result(io.plucker_to_json(p, {"reason": "all_zero"}), EXIT_FAIL)
    return Result(io.plucker_to_json(p, cert.witness if not cert else None), EXIT_OK if cert else EXIT_FAIL)


def cmd_is_electrical(args, cfg):
    d = _metric(args)
    order = _order(args, len(d))
    try:
        if args.method == "dual":
            v = metrics.is_electrical_via_dual(d, order)
        else:
            v = grassmann.is_electrical_via_grassmannian(d, order, cap=cfg.plucker_n_cap)
    except NotKalmanson as exc:
        return _not_kalmanson(exc, d, order)
    witness = dict(v.witness or {})
    if "plucker" in witness:
        p = witness.pop("plucker")
        witness["plucker"] = io.plucker_to_json(p)
    if "dual_response" in witness:
        witness["dual_response"] = io.matrix_to_json(witness["dual_response"])
    out = {"ok": v.ok, "method": args.method, "order": list(order), "metric": io.matrix_to_json(d), "witness": io.to_jsonable(witness)}
    return Result(out, EXIT_OK if v.ok else EXIT_FAIL)


def cmd_dual_response(args, cfg):
    d = _metric(args)
    order = _order(args, len(d))
    m = metrics.m_of_d(d, order)
    v = metrics.circular_minor_test(m)
    if cfg.format == "csv":
        return Result(None, EXIT_OK if v else EXIT_FAIL, text=io.matrix_to_csv(m))
    out = {"ok": v.ok, "order": list(order), "matrix": io.matrix_to_json(m), "witness": io.to_jsonable(v.witness)}
    return Result(out, EXIT_OK if v else EXIT_FAIL)


def cmd_dualize(args, cfg):
    return _network_result(netcore.dual_network(io.load_network(Path(args.network))), cfg)


def _strands(d, order):
    try:
        return reconstruct.strands_of_matrix(d, order), None
    except (NotInvolution, reconstruct.Degenerate) as exc:
        return None, Result({"ok": False, "reason": type(exc).__name__, "message": str(exc)}, EXIT_FAIL)


def cmd_strands(args, cfg):
    d = _metric(args)
    s, fail = _strands(d, _order(args, len(d)))
    if fail:
        return fail
    return Result({"g": list(s.g), "tau": [list(c) for c in s.cycles()]})


def cmd_reconstruct(args, cfg):
    d = _metric(args)
    order = _order(args, len(d))
    s, fail = _strands(d, order)
    if fail:
        return fail
    arr = reconstruct.build_chord_arrangement(s)
    net = reconstruct.arrangement_to_network(arr, labels=order)
    if args.medial:
        return Result(None, text=io.medial_to_dot(arr))
    if cfg.format == "dot":
        return Result(None, text=io.network_to_dot(net))
    tree = None
    if args.tree:
        reduced = reconstruct.triangles_to_stars(net)
        if reconstruct.is_tree(reduced):
            tree = reconstruct.fit_tree_weights(reduced, [[d[a - 1][b - 1] for b in order] for a in order])
    rt = reconstruct.verify_round_trip(d, order)
    return Result(io.reconstruction_report(s, net, tree, rt), EXIT_OK if rt else EXIT_FAIL)


def cmd_fit_tree(args, cfg):
    g = io.load_network(Path(args.network))
    d = _metric(args)
    try:
        tree = reconstruct.fit_tree_weights(g, d)
    except (reconstruct.Inconsistent, reconstruct.NonPositiveWeight) as exc:
        return Result({"ok": False, "reason": type(exc).__name__, "message": str(exc)}, EXIT_FAIL)
    return _network_result(tree, cfg)


def cmd_reduce(args, cfg):
    g = netcore.simplify(io.load_network(Path(args.network)))
    if not args.simplify_only:
        g = reconstruct.triangles_to_stars(g)
    return _network_result(g, cfg)


def cmd_verify(args, cfg):
    d = _metric(args)
    order = _order(args, len(d))
    s, fail = _strands(d, order)
    if fail:
        return fail
    ok = reconstruct.verify_round_trip(d, order)
    return Result({"ok": ok, "tau": [list(c) for c in s.cycles()]}, EXIT_OK if ok else EXIT_FAIL)


# --------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", default=argparse.SUPPRESS, help="key = value file (caps and output format)")
    common.add_argument("--format", choices=FORMATS, default=argparse.SUPPRESS, help="override the configured output format")
    parser = argparse.ArgumentParser(
        prog="ohmgraph", description="Exact algebra of circular planar electrical networks.", parents=[common]
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def add(name, func, help, inputs=(), order=False):
        p = sub.add_parser(name, help=help, parents=[common])
        for flag in inputs:
            p.add_argument(f"--{flag}", required=flag != "response", help=f"{flag} file")
        if order:
            p.add_argument("--order", help="circular order, e.g. 1,3,2,4")
        p.set_defaults(func=func)
        return p

    add("response", cmd_response, "response matrix of a network", ["network"])
    add("resistance", cmd_resistance, "boundary effective resistances", ["network"])
    add("oracle-resistance", cmd_oracle_resistance, "resistances via spanning-tree counts", ["network"])
    add("kalmanson", cmd_kalmanson, "check the Kalmanson inequalities", ["metric"], order=True)
    add("find-order", cmd_find_order, "search for a Kalmanson circular order", ["metric"])
    add("split-decompose", cmd_split_decompose, "circular split decomposition", ["metric"], order=True)
    add("splits-to-metric", cmd_splits_to_metric, "metric of a weighted split system", ["splits"])
    p = add("gromov", cmd_gromov, "Gromov product transform at a base node", ["metric"])
    p.add_argument("--base", type=int, required=True)
    add("m-of-d", cmd_m_of_d, "candidate dual response matrix M(D)", ["metric"], order=True)
    for name, func, help in (
        ("omega", cmd_omega, "the n x 2n Omega matrix"),
        ("plucker", cmd_plucker, "Plücker coordinates and sign certificate"),
    ):
        p = sub.add_parser(name, help=help, parents=[common])
        src = p.add_mutually_exclusive_group(required=True)
        src.add_argument("--metric", help="distance matrix CSV (resistance form)")
        src.add_argument("--response", help="response matrix CSV (response form)")
        p.add_argument("--order")
        if name == "plucker":
            p.add_argument("--subsets", help="only these coordinates, e.g. '1,2,3;2,4,6'")
        p.set_defaults(func=func)
    p = add("is-electrical", cmd_is_electrical, "is the metric a resistance metric?", ["metric"], order=True)
    p.add_argument("--method", choices=("grassmann", "dual"), default="grassmann")
    add("dual-response", cmd_dual_response, "M(D) and its circular-minor test", ["metric"], order=True)
    add("dualize", cmd_dualize, "dual network of an embedded network", ["network"])
    add("strands", cmd_strands, "column permutation g and strand permutation tau", ["metric"], order=True)
    p = add("reconstruct", cmd_reconstruct, "minimal network topology from a metric", ["metric"], order=True)
    p.add_argument("--tree", action="store_true", help="also reduce to a tree and fit its weights")
    p.add_argument("--medial", action="store_true", help="print the medial graph as DOT")
    add("fit-tree", cmd_fit_tree, "edge weights of a tree topology from a metric", ["network", "metric"])
    p = add("reduce", cmd_reduce, "simplify, then turn triangles into stars", ["network"])
    p.add_argument("--simplify-only", action="store_true")
    add("verify", cmd_verify, "strand round trip through reconstruction", ["metric"], order=True)
    return parser


def run(argv=None) -> tuple[int, str, str]:
    """Run a command and return ``(exit code, stdout, stderr)``."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0) and EXIT_INPUT, "", ""
    try:
        config = getattr(args, "config", None)
        cfg = Config.parse(Path(config).read_text()) if config else Config()
        if getattr(args, "format", None):
            cfg.format = args.format
        result = args.func(args, cfg)
    except CapExceeded as exc:
        return EXIT_CAP, "", f"ohmgraph: {exc}\n"
    except (OhmgraphError, ValueError, OSError, ZeroDivisionError) as exc:
        return EXIT_INPUT, "", f"ohmgraph: {exc}\n"
    return result.code, result.render(), ""


def main(argv=None) -> int:
    code, out, err = run(argv)
    sys.stdout.write(out)
    sys.stderr.write(err)
    return code


if __name__ == "__main__":
    sys.exit(main())
