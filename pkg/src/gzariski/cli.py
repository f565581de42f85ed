"""Command line entry point: ``gzariski validate|spectrum|topology|verify``."""
import argparse
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from . import __version__
from .checks import FAIL, run_check_suite, select
from .corpus import builtin_corpus
from .errors import GzariskiError, InstanceSyntaxError
from .instance import build, load
from .module import enumerate_graded_submodules
from .report import emit_report
from .ring import enumerate_graded_ideals
from .spectrum import build_spectrum, build_topology, topology_profile

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2

KIND_NAMES = {
    "spec-ring": "spec_ring",
    "qp-ring": "qpspec_ring",
    "spec-module": "spec_module",
    "qp-module": "qpspec_module",
}


def _error(msg):
    print(f"gzariski: error: {msg}", file=sys.stderr)
    return EXIT_INPUT


def _describe(exc):
    if isinstance(exc, InstanceSyntaxError):
        return f"line {exc.line}, column {exc.col}: expected {exc.expected}"
    line = getattr(exc, "line", None)
    prefix = f"line {line}: " if line else ""
    witness = getattr(exc, "witness", None)
    suffix = f" (witness {witness})" if witness is not None else ""
    return f"{type(exc).__name__}: {prefix}{exc}{suffix}"


def _load(path):
    desc = load(path)
    R, M = build(desc)
    return desc, R, M


def cmd_validate(args):
    desc, R, M = _load(args.file)
    print(f"{desc.name}: valid")
    print(f"  |G| = {R.group.order}, |R| = {R.size}, |M| = {M.size}")
    print(f"  graded ideals: {len(enumerate_graded_ideals(R))}, "
          f"graded submodules: {len(enumerate_graded_submodules(M))}")
    print(f"  hash {desc.content_hash()[:16]}")
    return EXIT_OK


def cmd_spectrum(args):
    desc, R, M = _load(args.file)
    primeful = desc.option("primeful", "required") == "required"
    space = build_spectrum(R, M, KIND_NAMES[args.kind], primeful)
    print(f"{desc.name} {args.kind}: {space.n} point(s)")
    for i in range(space.n):
        print(f"  {space.fmt_point(i)}")
    return EXIT_OK


def cmd_topology(args):
    desc, R, M = _load(args.file)
    semantics = args.semantics or desc.option("semantics", "radical")
    primeful = desc.option("primeful", "required") == "required"
    space = build_spectrum(R, M, KIND_NAMES[args.space], primeful)
    T = build_topology(space, semantics)
    prof = topology_profile(T)
    print(f"{desc.name} {args.space} (semantics {semantics}): {space.n} point(s)")
    print("closed sets:")
    for c in T.closed_family:
        print(f"  {space.fmt_subset(c)}")
    if T.axiom_failures:
        print(f"closed-set axiom failures: {len(T.axiom_failures)}")
    for key in ("is_T0", "is_T1", "is_connected", "is_irreducible_space",
                "is_noetherian", "is_quasi_compact", "is_spectral"):
        print(f"{key[3:]}: {str(getattr(prof, key)).lower()}")
    print("hochster: " + ", ".join(f"{k}={str(v).lower()}" for k, v in prof.hochster.items()))
    print("irreducible components:")
    for c in prof.irreducible_components:
        g = prof.generic_points.get(c)
        gp = space.fmt_point(g) if g is not None else "none"
        print(f"  {space.fmt_subset(c)}  generic point {gp}")
    for note in prof.annotations:
        print(f"note: {note}")
    return EXIT_OK


def _verify_one(job):
    desc, selection, semantics, cache_dir = job
    cache = None
    if cache_dir:
        from .cache import LatticeCache
        cache = LatticeCache(cache_dir)
    return run_check_suite(desc, selection, semantics, cache)


def cmd_verify(args):
    descs = list(builtin_corpus()) if args.corpus else []
    for f in args.files:
        descs.append(load(f))
    if not descs:
        return _error("verify needs instance files or --corpus")
    selection = args.checks.split(",") if args.checks else None
    try:
        select(selection)
    except KeyError as exc:
        return _error(exc.args[0])
    jobs = [(d, selection, args.semantics, args.cache_dir) for d in descs]
    if args.jobs > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            reports = list(pool.map(_verify_one, jobs))    # map keeps input order
    else:
        reports = [_verify_one(j) for j in jobs]
    text = emit_report(reports, args.format)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return EXIT_FAIL if any(r.status == FAIL for rep in reports for r in rep.results) \
        else EXIT_OK


def build_parser():
    p = argparse.ArgumentParser(
        prog="gzariski",
        description="Quasi-Zariski topologies on finite graded modules.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("validate", help="parse and validate an instance file")
    v.add_argument("file")
    v.set_defaults(func=cmd_validate)

    s = sub.add_parser("spectrum", help="list the points of a spectrum")
    s.add_argument("file")
    s.add_argument("--kind", choices=sorted(KIND_NAMES), default="qp-module")
    s.set_defaults(func=cmd_spectrum)

    t = sub.add_parser("topology", help="closed sets and topological profile")
    t.add_argument("file")
    t.add_argument("--space", choices=sorted(KIND_NAMES), default="qp-module")
    t.add_argument("--semantics", choices=("radical", "containment"))
    t.set_defaults(func=cmd_topology)

    c = sub.add_parser("verify", help="run the theorem-check suite")
    c.add_argument("files", nargs="*", metavar="file")
    c.add_argument("--corpus", action="store_true", help="include the built-in corpus")
    c.add_argument("--checks", help="comma separated check ids or id prefixes")
    c.add_argument("--format", choices=("text", "machine"), default="text")
    c.add_argument("--out", help="write the report here instead of stdout")
    c.add_argument("--jobs", type=int, default=1)
    c.add_argument("--cache-dir")
    c.add_argument("--semantics", choices=("radical", "containment"),
                   help="override the instance's ring variety semantics")
    c.set_defaults(func=cmd_verify)
    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (GzariskiError, OSError) as exc:
        return _error(_describe(exc))


if __name__ == "__main__":
    sys.exit(main())
