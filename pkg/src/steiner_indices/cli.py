"""Command-line front end: compute, classify, and bench subcommands.

Exit codes: 0 success, 1 usage or input error, 2 precondition violation,
3 verification mismatch. Output is line-oriented "key = value" by default;
--format json emits one object with the same keys in the same order.
"""

import argparse
import json
import os
import sys
import time
from math import comb

BRUTE_GUARD = 5_000_000  # default cap on enumerated subsets
CLASSIFY_LIMIT = 3000  # max C(n,3) scale for on-the-fly median classification is n^3-ish
PAIRWISE_EDGE_LIMIT = 3000  # beyond this the O(|E|^2) Theta scan is refused


class VerificationMismatch(Exception):
    pass


def _fmt_value(v):
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        return f"{v:.6f}"
    return str(v)


def emit(report, fmt, stream=None):
    stream = stream or sys.stdout
    if fmt == "json":
        out = {k: v for k, v in report.items()}
        json.dump(out, stream, indent=2)
        stream.write("\n")
    else:
        for k, v in report.items():
            stream.write(f"{k} = {_fmt_value(v)}\n")


def load_graph(args):
    """Resolve the single input source into (graph, descriptor-or-None, label)."""
    from .generators import generate, parse_descriptor
    from .graph import parse_edge_list

    if bool(args.input) == bool(args.gen):
        raise UsageError("exactly one of --input FILE or --gen SPEC is required")
    if args.gen:
        desc = parse_descriptor(args.gen)
        return generate(desc), desc, str(desc)
    with open(args.input, "r", encoding="utf-8") as fh:
        text = fh.read()
    return parse_edge_list(text), None, os.path.basename(args.input)


class UsageError(Exception):
    pass


class Analysis:
    """Lazily computed per-graph artifacts shared by the subcommands."""

    def __init__(self, g, desc):
        self.g = g
        self.desc = desc
        self._d = None
        self._tc = None
        self._pc = None
        self._classification = None
        self._moments = None

    @property
    def d(self):
        if self._d is None:
            from .graph import all_pairs_distances

            self._d = all_pairs_distances(self.g)
        return self._d

    @property
    def moments(self):
        if self._moments is None:
            from .graph import distance_moments

            self._moments = distance_moments(self.d)
        return self._moments

    @property
    def classification(self):
        if self._classification is None:
            from .errors import PreconditionError
            from .generators import family_classification
            from .theta import median_classification

            if self.desc is not None:
                known = family_classification(self.desc)
                if known is not None:
                    self._classification = known
                    return known
            if self.g.n > CLASSIFY_LIMIT:
                raise PreconditionError(
                    f"graph too large to classify by triple scan (n={self.g.n}); "
                    "only generated median families are supported at this size"
                )
            self._classification = median_classification(self.g, self.d, self.theta)
        return self._classification

    @property
    def theta(self):
        if self._tc is None:
            from .errors import PreconditionError
            from .generators import family_classification
            from .theta import theta_classes

            known = family_classification(self.desc) if self.desc is not None else None
            if known is not None and known.partial_cube:
                # generated median family: one BFS pair per class, no APSP needed
                self._tc = theta_classes(self.g, method="crossing")
            elif self.g.size > PAIRWISE_EDGE_LIMIT:
                raise PreconditionError(
                    f"graph too large for the pairwise Theta scan (|E|={self.g.size})"
                )
            else:
                self._tc = theta_classes(self.g, self.d)
        return self._tc

    @property
    def pairs(self):
        if self._pc is None:
            from .theta import pair_counts

            self._pc = pair_counts(self.theta)
        return self._pc


def _formula_result(an, index, k):
    """Closed-form value when the descriptor matches one, else None."""
    from .errors import PreconditionError
    from .generators import complete_formulas, grid_sw3, grid_sww3, path_formulas

    desc = an.desc
    if desc is None or index not in ("sw", "sww", "hosoya"):
        return None
    kind, params = desc.kind, desc.params
    if kind == "grid" and min(params) == 1:
        kind, params = "path", (max(params),)
    if kind == "complete":
        sh, sw, sww = complete_formulas(params[0], k)
        return {"sw": sw, "sww": sww, "hosoya": sh}[index]
    if kind == "path" and k >= 2:
        sh, sw, sww = path_formulas(params[0], k)
        return {"sw": sw, "sww": sww, "hosoya": sh}[index]
    if kind == "grid" and k == 3 and index in ("sw", "sww"):
        m, n = params
        try:
            return grid_sw3(m, n) if index == "sw" else grid_sww3(m, n)
        except PreconditionError:
            return None  # shape outside the formula's validity; fall through
    return None


def _brute_value(an, index, k, guard):
    from .graph import hyper_wiener
    from .steiner import steiner_hosoya, steiner_k_indices_brute

    if index == "w":
        return an.moments.wiener
    if index == "ww":
        ww = hyper_wiener(an.moments)
        assert ww.denominator == 1
        return int(ww)
    if index == "hosoya":
        return steiner_hosoya(an.g, an.d, k)
    sw, sww = steiner_k_indices_brute(an.g, an.d, k, guard=guard)
    return sw if index == "sw" else sww


def _compute_value(an, index, k, method, guard):
    """Returns (value, method_tag). Raises PreconditionError when an explicitly
    requested method is inapplicable."""
    from .errors import PreconditionError
    from .cutmethod import sw3_cut, sww3_cut, wiener_cut, wwbar_cut
    from .steiner import exact_div, modular_indices_3

    if method == "brute":
        tag = "hosoya" if index == "hosoya" else "brute"
        return _brute_value(an, index, k, guard), tag

    if method in ("auto", "formula"):
        value = _formula_result(an, index, k)
        if value is not None:
            return value, "formula"
        if method == "formula":
            raise PreconditionError(f"no closed formula applies to this input for index {index}, k={k}")

    if index in ("w", "ww"):
        if method in ("auto", "cut"):
            try:
                cls = an.classification
            except PreconditionError:
                cls = None
            if cls is not None and cls.partial_cube:
                tc, pc = an.theta, an.pairs
                w = wiener_cut(tc)
                if index == "w":
                    return w, "cut"
                return exact_div(w + wwbar_cut(tc, pc), 2), "cut"
            if method == "cut":
                raise PreconditionError("graph is not a verified partial cube")
        if method in ("modular", "hosoya"):
            raise PreconditionError(f"method {method} does not apply to index {index}")
        return _brute_value(an, index, k, guard), "brute"

    if index == "hosoya":
        return _brute_value(an, index, k, guard), "hosoya"

    # sw / sww
    if method in ("auto", "cut") and k == 3:
        try:
            cls = an.classification
        except PreconditionError:
            cls = None
        if cls is not None and cls.partial_cube and cls.modular:
            tc = an.theta
            if index == "sw":
                return sw3_cut(tc, an.g.n, cls), "cut"
            return sww3_cut(tc, an.pairs, an.g.n, cls), "cut"
        if method == "cut":
            if cls is not None and cls.partial_cube and not cls.modular:
                witness = cls.witness
                detail = f" (witness triple {','.join(map(str, witness))})" if witness else ""
                raise PreconditionError(f"graph is not modular{detail}")
            raise PreconditionError("graph is not a verified modular partial cube")
    if method == "cut":
        raise PreconditionError("cut method exists only for k = 3")
    if method in ("auto", "modular") and k == 3:
        cls = an.classification
        if cls.modular:
            sw3, sww3 = modular_indices_3(an.d, an.moments, cls)
            return (sw3 if index == "sw" else sww3), "modular"
        if method == "modular":
            witness = cls.witness
            detail = f" (witness triple {','.join(map(str, witness))})" if witness else ""
            raise PreconditionError(f"graph is not modular{detail}")
    if method == "modular":
        raise PreconditionError("modular formulas exist only for k = 3")
    return _brute_value(an, index, k, guard), "brute"


def _value_str(index, value):
    if index == "hosoya":
        return " ".join(f"{m}:{c}" for m, c in value.as_pairs())
    return value


def run_compute(args):
    from .steiner import K_MAX

    g, desc, label = load_graph(args)
    if not 1 <= args.k <= K_MAX:
        raise UsageError(f"--k must be in 1..{K_MAX}")
    an = Analysis(g, desc)
    guard = None if args.force else BRUTE_GUARD
    report = {"graph": label, "n": g.n, "edges": g.size}

    start = time.perf_counter()
    value, tag = _compute_value(an, args.index, args.k, args.method, guard)
    elapsed = time.perf_counter() - start

    key = args.index if args.index in ("w", "ww", "hosoya") else f"{args.index}{args.k}"
    report[key] = _value_str(args.index, value)
    report["method"] = tag
    report["elapsed_s"] = elapsed

    if args.verify:
        start = time.perf_counter()
        ref = _brute_value(an, args.index, args.k, guard)
        report["verify_method"] = "brute"
        report["verify_elapsed_s"] = time.perf_counter() - start
        if args.index == "hosoya":
            equal = ref.coeffs == value.coeffs
        else:
            equal = ref == value
        report["verified"] = equal
        if not equal:
            report["verify_value"] = _value_str(args.index, ref)
            emit(report, args.format)
            raise VerificationMismatch(
                f"{key}: {tag} gave {_value_str(args.index, value)}, brute gave {_value_str(args.index, ref)}"
            )
    emit(report, args.format)
    return 0


def run_classify(args):
    g, desc, label = load_graph(args)
    an = Analysis(g, desc)
    cls = an.classification
    report = {
        "graph": label,
        "n": g.n,
        "edges": g.size,
        "connected": cls.connected,
        "bipartite": cls.bipartite,
        "partial_cube": cls.partial_cube,
        "median_status": cls.median_status,
    }
    try:
        report["classes"] = an.theta.class_count
    except Exception:
        report["classes"] = "unknown"
    if cls.witness is not None:
        report["witness"] = ",".join(str(v) for v in cls.witness)
    emit(report, args.format)
    return 0


def run_bench(args):
    from .errors import PreconditionError
    from .cutmethod import sww3_cut
    from .steiner import steiner_k_indices_brute

    g, desc, label = load_graph(args)
    an = Analysis(g, desc)
    cls = an.classification
    if not (cls.partial_cube and cls.modular):
        raise PreconditionError("bench requires a modular partial cube")
    report = {"graph": label, "n": g.n, "edges": g.size}

    start = time.perf_counter()
    tc = an.theta
    pc = an.pairs
    cut_value = sww3_cut(tc, pc, g.n, cls)
    cut_elapsed = time.perf_counter() - start
    report["classes"] = tc.class_count
    report["sww3_cut"] = cut_value
    report["cut_s"] = cut_elapsed

    triples = comb(g.n, 3)
    guard = args.max_brute
    if triples > guard and not args.force:
        report["brute"] = f"skipped: guard ({triples} triples > {guard})"
    else:
        start = time.perf_counter()
        _, brute_value = steiner_k_indices_brute(an.g, an.d, 3)
        brute_elapsed = time.perf_counter() - start
        report["sww3_brute"] = brute_value
        report["brute_s"] = brute_elapsed
        report["speedup"] = brute_elapsed / cut_elapsed if cut_elapsed > 0 else float("inf")
        report["equal"] = brute_value == cut_value
        if brute_value != cut_value:
            emit(report, args.format)
            raise VerificationMismatch(
                f"sww3: cut gave {cut_value}, brute gave {brute_value}"
            )
    emit(report, args.format)
    return 0


def _add_source_args(p):
    p.add_argument("--input", help="edge-list file")
    p.add_argument("--gen", help="generator descriptor, e.g. grid:3,3")
    p.add_argument("--format", choices=("text", "json"), default="text")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="steiner-indices",
        description="Steiner k-Wiener / k-hyper-Wiener indices with a Theta-class cut method",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="compute an index of a graph")
    _add_source_args(p)
    p.add_argument("--index", choices=("w", "ww", "sw", "sww", "hosoya"), required=True)
    p.add_argument("--k", type=int, default=3)
    p.add_argument("--method", choices=("auto", "brute", "cut", "modular", "formula"), default="auto")
    p.add_argument("--verify", action="store_true", help="also run brute force and compare")
    p.add_argument("--force", action="store_true", help="ignore the enumeration guard")
    p.set_defaults(func=run_compute)

    p = sub.add_parser("classify", help="classify a graph (bipartite / partial cube / median)")
    _add_source_args(p)
    p.set_defaults(func=run_classify)

    p = sub.add_parser("bench", help="time the cut method against brute enumeration (k = 3)")
    _add_source_args(p)
    p.add_argument("--max-brute", type=int, default=BRUTE_GUARD)
    p.add_argument("--force", action="store_true", help="run brute even above the guard")
    p.set_defaults(func=run_bench)
    return parser


def main(argv=None):
    threads = os.environ.get("STEINER_THREADS")
    if threads:
        for var in ("OMP_NUM_THREADS", "OPENBLAS_NUM_THREADS", "MKL_NUM_THREADS"):
            os.environ.setdefault(var, threads)

    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 1 if exc.code not in (0, None) else 0

    from .errors import (
        DisconnectedGraphError,
        GraphFormatError,
        IntegralityError,
        NotPartialCubeClassError,
        PreconditionError,
    )

    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error = {exc}", file=sys.stderr)
        return 1
    except (PreconditionError, NotPartialCubeClassError) as exc:
        print(f"error = {exc}", file=sys.stderr)
        return 2
    except (GraphFormatError, DisconnectedGraphError, FileNotFoundError, ValueError) as exc:
        print(f"error = {exc}", file=sys.stderr)
        return 1
    except IntegralityError as exc:
        print(f"internal error = {exc}", file=sys.stderr)
        return 2
    except VerificationMismatch as exc:
        print(f"verification mismatch = {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
