"""Command-line driver: batch verification, series printing, and lattice
vector counts, all in exact arithmetic."""

import argparse
import json
import sys

from . import checks, codes, lattices, moonshine, qseries


def _named_series(name, prec):
    builders = {
        "j": moonshine.assemble_j,
        "e4": qseries.eisenstein_e4,
        "delta": qseries.discriminant_delta,
        "theta-niemeier": moonshine.theta_niemeier,
        "theta-leech": moonshine.theta_leech,
        "trace": moonshine.trace_theta,
        "twisted": moonshine.twisted_character,
        "char-leech": lambda p: qseries.char_lattice_voa(
            moonshine.theta_leech(p), 24),
        "char-niemeier": lambda p: qseries.char_lattice_voa(
            moonshine.theta_niemeier(p), 24),
        "v00": lambda p: moonshine.triality_components(p).v00,
        "v01": lambda p: moonshine.triality_components(p).v01,
    }
    if name not in builders:
        raise KeyError("unknown series %r; choose from: %s"
                       % (name, ", ".join(sorted(builders))))
    return builders[name](prec)


def _named_lattice(name):
    code = codes.golay_code()
    builders = {
        "niemeier": lattices.niemeier_a1_24,
        "leech": lattices.leech_lattice,
        "lambda0": lattices.lambda_zero,
    }
    if name not in builders:
        raise KeyError("unknown lattice %r; choose from: %s"
                       % (name, ", ".join(sorted(builders))))
    return builders[name](code)


def _load_config_file(path, cfg):
    with open(path) as fh:
        for raw in fh:
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ValueError("malformed config line %r" % raw.strip())
            key, value = (t.strip() for t in line.split("=", 1))
            key = key.replace("-", "_")
            if not hasattr(cfg, key):
                raise ValueError("unknown config key %r" % key)
            setattr(cfg, key, int(value))
    return cfg


def _add_common_options(parser, subcommand=False):
    # on subparsers the defaults are suppressed so that flags given before
    # the subcommand are not clobbered
    d = argparse.SUPPRESS if subcommand else None
    parser.add_argument("--config", default=d, help="key=value config file")
    parser.add_argument("--prec", type=int, default=d,
                        help="series precision")
    parser.add_argument("--nmax", type=int, default=d,
                        help="theta enumeration horizon (in q-powers)")
    parser.add_argument("--kmax", type=int, default=d,
                        help="replicability degree")
    parser.add_argument("--rank", type=int, default=d,
                        help="Heisenberg rank")
    parser.add_argument("--degree", type=int, default=d,
                        help="Fock degree bound")
    parser.add_argument("--seed", type=int, default=d,
                        help="seed for random sweeps")
    parser.add_argument("--budget-override", action="store_true",
                        default=d if subcommand else None,
                        dest="budget_override",
                        help="lift the default vector-count norm budget")
    parser.add_argument("--out", default=d,
                        help="write the output to this path")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="monstrous",
        description="Exact-arithmetic verification of lattice, q-series "
                    "and vertex-algebra identities.")
    _add_common_options(parser)
    sub = parser.add_subparsers(dest="command")

    p_verify = sub.add_parser("verify", help="run named checks (or 'all')")
    p_verify.add_argument("names", nargs="+")

    p_list = sub.add_parser("list", help="list the check catalogue")

    p_series = sub.add_parser("series", help="print a named series")
    p_series.add_argument("expr")

    p_enum = sub.add_parser("enumerate",
                            help="count lattice vectors of a given norm")
    p_enum.add_argument("lattice")
    p_enum.add_argument("norm", type=int)

    for p in (p_verify, p_list, p_series, p_enum):
        _add_common_options(p, subcommand=True)
    return parser


def _config_from_args(args):
    cfg = checks.CheckConfig()
    if getattr(args, "config", None):
        _load_config_file(args.config, cfg)
    for key in ("prec", "nmax", "kmax", "rank", "degree", "seed",
                "budget_override"):
        value = getattr(args, key, None)
        if value is not None:
            setattr(cfg, key, value)
    return cfg


def _emit(text, out_path):
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if not args.command:
        parser.print_help()
        return 2
    try:
        cfg = _config_from_args(args)
    except (ValueError, OSError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2

    if args.command == "list":
        lines = ["%-20s %s" % (name, anchor)
                 for name, anchor in checks.list_checks()]
        _emit("\n".join(lines), getattr(args, "out", None))
        return 0

    if args.command == "series":
        try:
            s = _named_series(args.expr, cfg.prec)
        except KeyError as exc:
            print("error: %s" % exc.args[0], file=sys.stderr)
            return 2
        _emit(str(s) + "\n" + qseries.series_to_text(s).rstrip("\n"),
              getattr(args, "out", None))
        return 0

    if args.command == "enumerate":
        try:
            lat = _named_lattice(args.lattice)
            count = lattices.count_vectors_of_norm(
                lat, args.norm, budget_override=bool(cfg.budget_override))
        except KeyError as exc:
            print("error: %s" % exc.args[0], file=sys.stderr)
            return 2
        except lattices.BudgetExceededError as exc:
            print("error: %s" % exc, file=sys.stderr)
            return 2
        _emit("%d" % count, getattr(args, "out", None))
        return 0

    if args.command == "verify":
        names = [name for name, _ in checks.list_checks()] \
            if args.names == ["all"] else args.names
        try:
            rows = checks.run_checks(names, cfg)
        except KeyError as exc:
            print("error: %s" % exc.args[0], file=sys.stderr)
            return 2
        report = json.dumps(rows, indent=2, sort_keys=True)
        _emit(report, getattr(args, "out", None))
        return 0 if all(r["status"] == "pass" for r in rows) else 1

    parser.error("unknown command %r" % args.command)


if __name__ == "__main__":
    sys.exit(main())
