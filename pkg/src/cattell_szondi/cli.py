"""Command-line client for the translation service.

Talks HTTP to a running server when --server is given; otherwise mounts the
service in-process, so no server is needed.  Subcommands mirror the
endpoints: right, left, check, table dump, norm-demo, find-empty, bigfive.

Exit codes: 0 success, 1 invalid input, 2 property violation, 3 I/O error.
"""

from __future__ import annotations

import argparse
import json
import sys

import httpx

EXIT_OK = 0
EXIT_INVALID_INPUT = 1
EXIT_PROPERTY_VIOLATION = 2
EXIT_IO_ERROR = 3


def make_client(server: str | None) -> httpx.Client:
    if server:
        return httpx.Client(base_url=server, timeout=None)
    # In-process fallback: mount the ASGI app behind a regular client.  Some
    # starlette builds warn about their preferred httpx flavour here; that is
    # environment noise, not actionable for callers.
    import warnings

    with warnings.catch_warnings():
        warnings.simplefilter("ignore", Warning)
        from starlette.testclient import TestClient

        from .service import app

        return TestClient(app)


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def read_input(path: str | None) -> str:
    if path in (None, "-"):
        return sys.stdin.read()
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc}", EXIT_IO_ERROR)


def write_output(path: str | None, text: str) -> None:
    if path in (None, "-"):
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")
        return
    try:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    except OSError as exc:
        raise CliError(f"cannot write {path}: {exc}", EXIT_IO_ERROR)


def parse_document(text: str) -> dict:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CliError(f"input is not valid JSON: {exc}", EXIT_INVALID_INPUT)
    if not isinstance(doc, dict):
        raise CliError("input document must be a JSON object", EXIT_INVALID_INPUT)
    return doc


def request(client: httpx.Client, method: str, url: str, **kwargs) -> httpx.Response:
    try:
        response = client.request(method, url, **kwargs)
    except httpx.RequestError as exc:
        raise CliError(f"request failed: {exc}", EXIT_IO_ERROR)
    if response.status_code >= 500:
        raise CliError(f"server error {response.status_code}: {response.text}", EXIT_IO_ERROR)
    if response.status_code >= 400:
        try:
            detail = response.json().get("detail", response.text)
        except ValueError:
            detail = response.text
        raise CliError(f"rejected ({response.status_code}): {detail}", EXIT_INVALID_INPUT)
    return response


def cmd_right(client: httpx.Client, args) -> int:
    doc = parse_document(read_input(args.in_path))
    response = request(client, "POST", "/right",
                       params={"enumerate": args.enumerate}, json=doc)
    write_output(args.out_path, json.dumps(response.json(), indent=2))
    return EXIT_OK


def cmd_left(client: httpx.Client, args) -> int:
    doc = parse_document(read_input(args.in_path))
    response = request(client, "POST", "/left",
                       params={"explain": args.explain}, json=doc)
    write_output(args.out_path, json.dumps(response.json(), indent=2))
    return EXIT_OK


def cmd_check(client: httpx.Client, args) -> int:
    response = request(client, "POST", "/check",
                       json={"trials": args.trials, "seed": args.seed})
    report = response.json()
    for suite in report["suites"]:
        if suite["passed"]:
            print(f"PASS {suite['name']} ({suite['trials']} trials)")
        else:
            print(f"FAIL {suite['name']}: {suite['counterexample']}")
    verdict = "all suites passed" if report["passed"] else "property violation"
    print(f"check: {verdict} (trials={report['trials']}, seed={report['seed']})")
    if args.out_path:
        write_output(args.out_path, json.dumps(report, indent=2))
    return EXIT_OK if report["passed"] else EXIT_PROPERTY_VIOLATION


def cmd_table_dump(client: httpx.Client, args) -> int:
    response = request(client, "GET", "/table.csv")
    write_output(args.out_path, response.text)
    return EXIT_OK


def cmd_norm_demo(client: httpx.Client, args) -> int:
    response = request(client, "GET", "/norm-demo")
    report = response.json()
    profile = " ".join(f"{k}={v}" for k, v in report["profile"].items())
    print(f"norm profile: {profile}")
    print(f"formula: {report['formula']}")
    state = "EMPTY" if report["empty"] else f"cardinality {report['cardinality']}"
    print(f"left polarity: {state}")
    print("failing traits: " + " ".join(report["failing_traits"]))
    print("published failing list: " + " ".join(report["published_failing_traits"]))
    for d in report["discrepancies"]:
        values = ",".join(str(v) for v in d["satisfying_values"])
        print(f"discrepancy: {d['trait']} is on the published list but "
              f"satisfiable at values {values}")
    if args.out_path:
        write_output(args.out_path, json.dumps(report, indent=2))
    return EXIT_OK


def cmd_find_empty(client: httpx.Client, args) -> int:
    response = request(client, "POST", "/find-empty",
                       json={"samples": args.samples, "seed": args.seed,
                             "max_examples": args.max_examples})
    report = response.json()
    print(f"samples: {report['samples']}, empty right-polarity images: "
          f"{report['empty_count']}")
    for example in report["examples"]:
        traits = " ".join(f"{k}={v}" for k, v in example["traits"].items())
        print(f"example: {traits}")
        for conflict in example["conflicts"]:
            parts = "; ".join(
                f"{c['trait']}@{c['value']} allows {{{','.join(c['allowed'])}}}"
                for c in conflict["constraints"]
            )
            pairs = " ".join(f"({a},{b})" for a, b in conflict["conflicting_pairs"])
            print(f"  factor {conflict['factor']}: {parts}")
            if pairs:
                print(f"  conflicting pairs: {pairs}")
    if args.out_path:
        write_output(args.out_path, json.dumps(report, indent=2))
    return EXIT_OK


def cmd_bigfive(client: httpx.Client, args) -> int:
    response = request(client, "GET", f"/bigfive/{args.name}/{args.value}",
                       params={"corrected": args.corrected_reversal})
    report = response.json()
    print(report["formula"])
    if args.out_path:
        write_output(args.out_path, json.dumps(report, indent=2))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cattell-szondi",
        description="Translate between Cattell PsychEval profiles and Szondi "
                    "personality profiles via the polarity pair.",
    )
    parser.add_argument("--server", default=None,
                        help="base URL of a running service; default runs in-process")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_io(p, input_doc: bool):
        if input_doc:
            p.add_argument("--in", dest="in_path", default=None,
                           help="input JSON document (default: stdin)")
        p.add_argument("--out", dest="out_path", default=None,
                       help="output file (default: stdout)")

    p = sub.add_parser("right", help="right polarity of a ppp/ppp_set document")
    add_io(p, True)
    p.add_argument("--enumerate", type=int, default=0, metavar="N",
                   help="include up to N explicit member SPPs")
    p.set_defaults(handler=cmd_right)

    p = sub.add_parser("left", help="left polarity of an spp/spp_set document")
    add_io(p, True)
    p.add_argument("--explain", action="store_true",
                   help="list all 10 cell evaluations for each failing trait")
    p.set_defaults(handler=cmd_left)

    p = sub.add_parser("check", help="run the seeded property suites")
    add_io(p, False)
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(handler=cmd_check)

    p = sub.add_parser("table", help="table operations")
    table_sub = p.add_subparsers(dest="table_command", required=True)
    pd = table_sub.add_parser("dump", help="emit all 280 cells as CSV")
    add_io(pd, False)
    pd.set_defaults(handler=cmd_table_dump)

    p = sub.add_parser("norm-demo",
                       help="show the norm profile mapping to the empty set")
    add_io(p, False)
    p.set_defaults(handler=cmd_norm_demo)

    p = sub.add_parser("find-empty",
                       help="sample PPPs with empty right-polarity images")
    add_io(p, False)
    p.add_argument("--samples", type=int, default=10000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-examples", type=int, default=5)
    p.set_defaults(handler=cmd_find_empty)

    p = sub.add_parser("bigfive", help="global-factor formula for one value")
    add_io(p, False)
    p.add_argument("name", help="Extraversion, HighAnxiety, ToughMindedness, "
                                "Independence or SelfControl")
    p.add_argument("value", type=int)
    p.add_argument("--corrected-reversal", action="store_true",
                   help="use the 11-v reversal instead of the published 10-v")
    p.set_defaults(handler=cmd_bigfive)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        with make_client(args.server) as client:
            return args.handler(client, args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except BrokenPipeError:
        # Downstream closed the pipe (e.g. | head); avoid a shutdown traceback.
        import os

        os.dup2(os.open(os.devnull, os.O_WRONLY), sys.stdout.fileno())
        return EXIT_IO_ERROR


if __name__ == "__main__":
    sys.exit(main())
