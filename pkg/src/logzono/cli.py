"""Command-line front end.

Subcommands: reach, lfsr, set, reduce, contains, bench. Exit codes are
part of the interface: 0 success, 1 input or configuration problem,
2 internal soundness violation (the zonotope backend lost an exact
state, which is a bug), 3 key search failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import random
import sys
import time
from dataclasses import dataclass
from typing import Optional

from . import casestudies
from .dsl import parse_system
from .errors import LogzonoError, ParseError, SearchFailed, UsageError
from .reach import check_containment, reach as run_reach
from .gf2 import BitVec
from .zonotope import (LogicalZonotope, contains, evaluate, mink_and,
                       mink_nand, mink_nor, mink_not, mink_or, mink_xnor,
                       mink_xor, reduce)

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_SOUNDNESS = 2
EXIT_SEARCH = 3

_BINARY_SET_OPS = {
    "xor": mink_xor, "xnor": mink_xnor, "and": mink_and,
    "nand": mink_nand, "or": mink_or, "nor": mink_nor,
}


@dataclass(frozen=True)
class RunConfig:
    subcommand: str
    out: str = "text"
    gamma_cap: Optional[int] = None
    state_budget: int = 20
    seed: int = 0
    golden: Optional[str] = None

    def __post_init__(self):
        if self.gamma_cap is not None and self.gamma_cap <= 0:
            raise UsageError("gamma cap must be positive")
        if self.state_budget <= 0:
            raise UsageError("state budget must be positive")


def _config_from(args) -> RunConfig:
    return RunConfig(
        subcommand=args.cmd,
        out=getattr(args, "out", "text"),
        gamma_cap=getattr(args, "gamma_cap", None),
        state_budget=getattr(args, "state_budget", 20),
        seed=getattr(args, "seed", 0),
        golden=getattr(args, "golden", None),
    )


def _canonical_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def _emit(cfg: RunConfig, obj, text_lines, csv_rows=None, csv_header=None):
    """Render one result in the selected format; honor --golden."""
    if cfg.golden:
        with open(cfg.golden, "w") as fh:
            fh.write(_canonical_json(obj))
    if cfg.out == "json":
        print(_canonical_json(obj), end="")
    elif cfg.out == "csv":
        if csv_rows is None:
            raise UsageError(f"{cfg.subcommand} has no CSV form")
        buf = io.StringIO()
        w = csv.writer(buf)
        w.writerow(csv_header)
        w.writerows(csv_rows)
        print(buf.getvalue(), end="")
    else:
        for line in text_lines:
            print(line)


def _load_json(path: str) -> dict:
    with open(path) as fh:
        return json.load(fh)


def _load_zonotope(path: str) -> LogicalZonotope:
    return LogicalZonotope.from_json_dict(_load_json(path))


# ---------------------------------------------------------------- reach

def _backend_list(name: str):
    table = {"zono": ["zonotope"], "exact": ["explicit"],
             "both": ["zonotope", "explicit"]}
    return table[name]


def cmd_reach(args) -> int:
    cfg = _config_from(args)
    with open(args.system) as fh:
        sys_ = parse_system(fh.read())
    horizon = args.horizon if args.horizon is not None else sys_.horizon
    results = {b: run_reach(sys_, horizon, b, state_budget=cfg.state_budget)
               for b in _backend_list(args.backend)}

    obj = {b: r.to_json_dict() for b, r in results.items()}
    lines = []
    csv_rows = []
    for b, r in results.items():
        lines.append(f"[{b}] horizon {horizon}, "
                     f"total {r.total_time_s:.3f}s")
        for s in r.steps:
            lines.append(f"  k={s.k:<4d} size={s.size:<4d} "
                         f"joint={s.joint_count:<6d} time={s.time_s:.4f}s")
            csv_rows.append([s.k, b, f"{s.time_s:.6f}", s.size,
                             s.joint_count])

    code = EXIT_OK
    if args.backend == "both":
        rep = check_containment(results["zonotope"], results["explicit"])
        obj["containment"] = {"ok": rep.ok,
                              "violations": [list(v) for v in rep.violations],
                              "surplus": rep.surplus}
        lines.append(f"containment: {'ok' if rep.ok else 'VIOLATED'}, "
                     f"surplus per step {rep.surplus}")
        if not rep.ok:
            for v in rep.violations[:10]:
                lines.append(f"  lost state at k={v[0]}: {v[1]} ({v[2]})")
            code = EXIT_SOUNDNESS
    _emit(cfg, obj, lines, csv_rows,
          ["k", "backend", "time_s", "size", "joint_count"])
    return code


# ----------------------------------------------------------------- lfsr

def _spec_from_args(args) -> casestudies.LfsrSpec:
    if args.taps or args.output_taps:
        if not (args.taps and args.output_taps):
            raise UsageError("--taps and --output-taps go together")
        return casestudies.LfsrSpec(
            args.length,
            tuple(int(t) for t in args.taps.split(",")),
            tuple(int(t) for t in args.output_taps.split(",")))
    return casestudies.scaled_spec(args.length)


def _random_instance(spec, l_m, rng):
    key = tuple(rng.randint(0, 1) for _ in range(spec.length))
    msg = [rng.randint(0, 1) for _ in range(l_m)]
    return key, casestudies.make_instance(spec, key, msg)


def _search_once(spec, inst):
    t0 = time.perf_counter()
    key = casestudies.key_search(spec, inst)
    dt = time.perf_counter() - t0
    verified = casestudies.encrypt(spec, key, inst.message) == inst.cipher
    return key, verified, dt


def cmd_lfsr(args) -> int:
    cfg = _config_from(args)
    rng = random.Random(cfg.seed)

    if args.sweep:
        rows = []
        for length in (int(x) for x in args.sweep.split(",")):
            spec = casestudies.scaled_spec(length)
            _, inst = _random_instance(spec, 4 * length, rng)
            _, verified, dt = _search_once(spec, inst)
            rows.append([length, f"{dt:.4f}", str(verified).lower()])
        obj = {"sweep": [{"length": int(r[0]), "time_s": float(r[1]),
                          "verified": r[2] == "true"} for r in rows]}
        _emit(cfg, obj, [f"l_k={r[0]}  {r[1]}s  verified={r[2]}"
                         for r in rows],
              rows, ["length", "time_s", "verified"])
        return EXIT_OK

    spec = _spec_from_args(args)
    if args.instance:
        d = _load_json(args.instance)
        spec = casestudies.LfsrSpec.from_json_dict(d["spec"])
        inst = casestudies.CipherInstance(tuple(d["message"]),
                                          tuple(d["cipher"]))
    else:
        l_m = args.message_len if args.message_len else 4 * spec.length
        _, inst = _random_instance(spec, l_m, rng)
    if inst.l_m < spec.length:
        print(f"warning: message ({inst.l_m} bits) shorter than key "
              f"({spec.length} bits); instance may be under-determined",
              file=sys.stderr)

    key, verified, dt = _search_once(spec, inst)
    key_text = "".join(str(b) for b in key)
    obj = {"spec": spec.to_json_dict(), "key": key_text,
           "verified": verified, "time_s": round(dt, 6)}
    _emit(cfg, obj,
          [f"key {key_text}", f"verified {str(verified).lower()}",
           f"time {dt:.4f}s"],
          [[spec.length, f"{dt:.4f}", str(verified).lower()]],
          ["length", "time_s", "verified"])
    return EXIT_OK


# ------------------------------------------------- set / reduce / contains

def _zonotope_payload(z: LogicalZonotope, with_points: bool) -> dict:
    obj = z.to_json_dict()
    if with_points:
        obj["points"] = [p.to_text() for p in evaluate(z)]
    return obj


def cmd_set(args) -> int:
    cfg = _config_from(args)
    a = _load_zonotope(args.a)
    if args.op == "not":
        if args.b is not None:
            raise UsageError("'not' takes a single zonotope")
        result = mink_not(a)
    else:
        if args.b is None:
            raise UsageError(f"'{args.op}' needs two zonotopes")
        result = _BINARY_SET_OPS[args.op](a, _load_zonotope(args.b))
    obj = _zonotope_payload(result, args.evaluate)
    lines = [_canonical_json(obj).rstrip("\n")]
    _emit(cfg, obj, lines)
    return EXIT_OK


def cmd_reduce(args) -> int:
    cfg = _config_from(args)
    z = _load_zonotope(args.zonotope)
    r = reduce(z)
    obj = _zonotope_payload(r, args.evaluate)
    obj["gamma_before"] = z.gamma
    obj["gamma_after"] = r.gamma
    _emit(cfg, obj, [_canonical_json(obj).rstrip("\n")])
    return EXIT_OK


def cmd_contains(args) -> int:
    cfg = _config_from(args)
    z = _load_zonotope(args.zonotope)
    x = BitVec.from_text(args.point)
    verdict = contains(z, x)
    obj = {"zonotope": z.to_json_dict(), "point": args.point,
           "contains": verdict}
    _emit(cfg, obj, ["true" if verdict else "false"])
    return EXIT_OK


# ---------------------------------------------------------------- bench

def cmd_bench(args) -> int:
    cfg = _config_from(args)
    if args.target == "intersection":
        sys_ = casestudies.intersection_system()
        rows = []
        for n in (int(x) for x in args.horizons.split(",")):
            for b in _backend_list(args.backend):
                r = run_reach(sys_, n, b)
                last = r.steps[-1]
                rows.append([n, b, f"{r.total_time_s:.4f}", last.size,
                             last.joint_count])
        obj = {"rows": [{"N": r[0], "backend": r[1], "time_s": float(r[2]),
                         "size": r[3], "joint_count": r[4]} for r in rows]}
        _emit(cfg, obj,
              [f"N={r[0]:<5d} {r[1]:<9s} {r[2]}s size={r[3]} "
               f"joint={r[4]}" for r in rows],
              rows, ["N", "backend", "time_s", "size", "joint_count"])
        return EXIT_OK

    # lfsr: zonotope search vs exhaustive enumeration; exhaustive timing
    # is measured up to 20 bits and extrapolated from per-key cost above
    rng = random.Random(cfg.seed)
    rows = []
    for length in (int(x) for x in args.lengths.split(",")):
        spec = casestudies.scaled_spec(length)
        key, inst = _random_instance(spec, 4 * length, rng)
        _, _, dt = _search_once(spec, inst)
        t0 = time.perf_counter()
        if length <= 20:
            mode = "measured"
            for cand in range(1 << length):
                bits = [(cand >> (length - 1 - i)) & 1
                        for i in range(length)]
                if casestudies.encrypt(spec, bits, inst.message) == inst.cipher:
                    break
            exhaustive = time.perf_counter() - t0
        else:
            mode = "extrapolated"
            samples = 64
            for cand in range(samples):
                bits = [(cand >> (length - 1 - i)) & 1
                        for i in range(length)]
                casestudies.encrypt(spec, bits, inst.message)
            per_key = (time.perf_counter() - t0) / samples
            exhaustive = per_key * (1 << length)
        rows.append([length, f"{dt:.4f}", f"{exhaustive:.4f}", mode])
    obj = {"rows": [{"length": r[0], "search_time_s": float(r[1]),
                     "exhaustive_time_s": float(r[2]), "exhaustive": r[3]}
                    for r in rows]}
    _emit(cfg, obj,
          [f"l_k={r[0]:<4d} search {r[1]}s  exhaustive {r[2]}s ({r[3]})"
           for r in rows],
          rows, ["length", "search_time_s", "exhaustive_time_s",
                 "exhaustive_mode"])
    return EXIT_OK


# --------------------------------------------------------------- parser

def _add_common(p, default_out="text"):
    p.add_argument("--out", choices=["json", "csv", "text"],
                   default=default_out)
    p.add_argument("--golden", metavar="FILE",
                   help="also write canonical JSON to FILE")
    p.add_argument("--gamma-cap", type=int, default=None,
                   help="override the point-enumeration cap")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="logzono",
        description="logical-zonotope sets and Boolean-system reachability")
    sub = ap.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("reach", help="run reachability on a system file")
    p.add_argument("system")
    p.add_argument("--horizon", type=int, default=None)
    p.add_argument("--backend", choices=["zono", "exact", "both"],
                   default="zono")
    p.add_argument("--state-budget", type=int, default=20)
    _add_common(p)

    p = sub.add_parser("lfsr", help="stream-cipher key search")
    p.add_argument("--length", type=int, default=60)
    p.add_argument("--taps", help="feedback taps, comma separated")
    p.add_argument("--output-taps", help="output taps, comma separated")
    p.add_argument("--message-len", type=int, default=None)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--instance", help="JSON file with spec/message/cipher")
    p.add_argument("--sweep", help="comma list of key lengths to time")
    _add_common(p)

    p = sub.add_parser("set", help="Minkowski operation on zonotope files")
    p.add_argument("op", choices=sorted(_BINARY_SET_OPS) + ["not"])
    p.add_argument("a")
    p.add_argument("b", nargs="?")
    p.add_argument("--evaluate", action="store_true",
                   help="also list the explicit points")
    _add_common(p, default_out="json")

    p = sub.add_parser("reduce", help="drop redundant generators")
    p.add_argument("zonotope")
    p.add_argument("--evaluate", action="store_true")
    _add_common(p, default_out="json")

    p = sub.add_parser("contains", help="membership test for a bitstring")
    p.add_argument("zonotope")
    p.add_argument("point")
    _add_common(p)

    p = sub.add_parser("bench", help="benchmark tables")
    p.add_argument("target", choices=["intersection", "lfsr"])
    p.add_argument("--horizons", default="10,50,100,1000")
    p.add_argument("--backend", choices=["zono", "exact", "both"],
                   default="both")
    p.add_argument("--lengths", default="30,60")
    p.add_argument("--seed", type=int, default=0)
    _add_common(p, default_out="csv")
    return ap


_HANDLERS = {
    "reach": cmd_reach, "lfsr": cmd_lfsr, "set": cmd_set,
    "reduce": cmd_reduce, "contains": cmd_contains, "bench": cmd_bench,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "gamma_cap", None) is not None:
        if args.gamma_cap <= 0:
            print("error: gamma cap must be positive", file=sys.stderr)
            return EXIT_INPUT
        os.environ["LOGZONO_GAMMA_CAP"] = str(args.gamma_cap)
    try:
        return _HANDLERS[args.cmd](args)
    except SearchFailed as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_SEARCH
    except ParseError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT
    except (LogzonoError, OSError, ValueError, KeyError,
            json.JSONDecodeError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
