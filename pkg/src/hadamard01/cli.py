"""Command-line interface: generate, verify, convert, bench.

Exit statuses: 0 on success (all records pass for verify), 1 when a
verification reports failures, 2 on usage, parse, or domain errors.
"""

from __future__ import annotations

import argparse
import logging
import sys
import time
from contextlib import contextmanager
from typing import Iterator

from . import formats
from .core import BitMatrix, HadamardError, SignMatrix, validate_order
from .generator import GenConfig, generate_parallel, iter_matrices
from .gram import is_hadamard_zo
from .partition import PartitionMatrix, decode_matrix, encode_matrix
from .presentation import normalize, pm_from_zo, verify_sign_hadamard, zo_from_pm


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hadamard01",
        description="Generate, verify, and convert Hadamard matrices in {0,1} form.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    fmt_kwargs = dict(choices=formats.FORMATS, default="grouplist")

    p_gen = sub.add_parser("generate", help="search for matrices of order m")
    p_gen.add_argument("-m", type=int, required=True, help="matrix order (3 mod 4)")
    p_gen.add_argument("-o", dest="output", help="output path (default stdout)")
    p_gen.add_argument("--limit", type=int, help="stop after N matrices")
    p_gen.add_argument("--format", **fmt_kwargs)
    p_gen.add_argument(
        "--verify",
        action=argparse.BooleanOptionalAction,
        default=None,
        help="re-verify each emitted matrix (default: on for m <= 15)",
    )
    p_gen.add_argument("--progress", action="store_true", help="log row-entry events")
    p_gen.add_argument(
        "--parallel", type=int, metavar="THREADS",
        help="split the search at row 3 across worker threads",
    )

    p_ver = sub.add_parser("verify", help="check every record of a file")
    p_ver.add_argument("input", help="input path")
    p_ver.add_argument("--format", **fmt_kwargs)

    p_conv = sub.add_parser("convert", help="rewrite a file in another format")
    p_conv.add_argument("input", help="input path")
    p_conv.add_argument("--from", dest="from_format", required=True,
                        choices=formats.FORMATS)
    p_conv.add_argument("--to", dest="to_format", required=True,
                        choices=formats.FORMATS)
    p_conv.add_argument("-o", dest="output", help="output path (default stdout)")
    p_conv.add_argument(
        "--normalize", action="store_true",
        help="normalize densepm input before converting",
    )

    p_bench = sub.add_parser("bench", help="measure the matrix production rate")
    p_bench.add_argument("-m", type=int, required=True)
    p_bench.add_argument("--limit", type=int, help="stop after N matrices")
    p_bench.add_argument("--duration", type=float,
                         help="stop after this many seconds")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "generate":
            return _cmd_generate(args)
        if args.command == "verify":
            return _cmd_verify(args)
        if args.command == "convert":
            return _cmd_convert(args)
        if args.command == "bench":
            return _cmd_bench(args)
    except HadamardError as exc:
        print(f"Error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"Error: {exc}", file=sys.stderr)
        return 2
    raise AssertionError(f"unhandled command {args.command}")


@contextmanager
def _open_out(path: str | None):
    if path is None:
        yield sys.stdout
    else:
        with open(path, "w", encoding="ascii") as handle:
            yield handle


@contextmanager
def _progress_to_stderr(enabled: bool):
    """Send the generator's row-entry log to stderr for this run."""
    if not enabled:
        yield
        return
    gen_log = logging.getLogger("hadamard01.generator")
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter("%(message)s"))
    old_level = gen_log.level
    gen_log.addHandler(handler)
    gen_log.setLevel(logging.INFO)
    try:
        yield
    finally:
        gen_log.removeHandler(handler)
        gen_log.setLevel(old_level)


def _cmd_generate(args) -> int:
    params = validate_order(args.m)
    config = GenConfig(
        params,
        limit=args.limit,
        verify_each=args.verify,
        progress=args.progress,
    )
    start = time.monotonic()
    with _progress_to_stderr(args.progress), _open_out(args.output) as out:
        writer = _record_writer(out, args.format)
        if args.parallel and args.parallel > 1:
            count = generate_parallel(config, writer, args.parallel)
        else:
            count = 0
            for pm in iter_matrices(config):
                writer(pm)
                count += 1
    elapsed = time.monotonic() - start
    print(f"generated {count} matrices in {elapsed:.2f} s", file=sys.stderr)
    return 0


def _record_writer(out, fmt: str):
    counter = [0]

    def write(pm: PartitionMatrix) -> None:
        counter[0] += 1
        if fmt == "grouplist":
            out.write(formats.grouplist_record(pm, counter[0]) + "\n")
            return
        if counter[0] > 1:
            out.write("\n")
        t = decode_matrix(pm)
        if fmt == "dense01":
            for row in t.rows:
                out.write("".join(str(e) for e in row) + "\n")
        else:
            h = pm_from_zo(t)
            for row in h.rows:
                out.write("".join("+" if e == 1 else "-" for e in row) + "\n")

    return write


def _cmd_verify(args) -> int:
    with open(args.input, "r", encoding="ascii") as handle:
        text = handle.read()
    failures = 0
    total = 0
    for name, passed in _verify_records(text, args.format):
        total += 1
        print(f"{name}: {'PASS' if passed else 'FAIL'}")
        failures += not passed
    print(f"{total - failures}/{total} records pass", file=sys.stderr)
    return 1 if failures else 0


def _verify_records(text: str, fmt: str) -> Iterator[tuple[str, bool]]:
    if fmt == "grouplist":
        for name, pm in formats.parse_grouplist(text):
            yield name, is_hadamard_zo(decode_matrix(pm))
    elif fmt == "dense01":
        for idx, t in enumerate(formats.parse_dense01(text), start=1):
            yield f"matrix {idx}", is_hadamard_zo(t)
    else:
        for idx, h in enumerate(formats.parse_densepm(text), start=1):
            ok = verify_sign_hadamard(h)
            # cross-check through the {0,1} form where the characterization
            # applies (side >= 4 and all-ones border)
            if ok and h.n >= 4 and _is_normalized(h):
                ok = is_hadamard_zo(zo_from_pm(h))
            yield f"matrix {idx}", ok


def _is_normalized(h: SignMatrix) -> bool:
    return all(e == 1 for e in h.rows[0]) and all(row[0] == 1 for row in h.rows)


def _cmd_convert(args) -> int:
    with open(args.input, "r", encoding="ascii") as handle:
        text = handle.read()
    bits = _read_as_bits(text, args.from_format, args.normalize)
    with _open_out(args.output) as out:
        if args.to_format == "grouplist":
            formats.write_grouplist(out, (encode_matrix(t) for t in bits))
        elif args.to_format == "dense01":
            formats.write_dense01(out, bits)
        else:
            formats.write_densepm(out, (pm_from_zo(t) for t in bits))
    return 0


def _read_as_bits(text: str, fmt: str, do_normalize: bool) -> list[BitMatrix]:
    """Parse any input format down to a list of bit matrices."""
    if fmt == "grouplist":
        return [decode_matrix(pm) for _, pm in formats.parse_grouplist(text)]
    if fmt == "dense01":
        return formats.parse_dense01(text)
    out = []
    for h in formats.parse_densepm(text):
        if do_normalize:
            h = normalize(h)
        out.append(zo_from_pm(h))
    return out


def _cmd_bench(args) -> int:
    params = validate_order(args.m)
    config = GenConfig(params, limit=args.limit, verify_each=False)
    deadline = None
    if args.duration is not None:
        deadline = time.monotonic() + args.duration
    start = time.monotonic()
    count = 0
    for _ in iter_matrices(config, deadline=deadline):
        count += 1
    elapsed = time.monotonic() - start
    rate = round(count * 60.0 / elapsed) if elapsed > 0 else 0
    print(f"m={params.m}: {count} matrices in {elapsed:.2f} s")
    print(f"v={rate} matrices/minute")
    return 0
