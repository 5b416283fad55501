import argparse
import sys

from .backend import toy_backend
from .protocol import serve


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="lm-adapter",
        description="Serve next-token distributions over stdio (NDJSON protocol).",
    )
    parser.add_argument("--corpus", required=True, help="text file for the toy model")
    parser.add_argument(
        "--stats", action="store_true",
        help="print request/error counters to stderr on shutdown",
    )
    args = parser.parse_args(argv)
    try:
        callback = toy_backend(args.corpus)
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    session = serve(callback)
    if args.stats:
        print(
            f"served {session.requests_served} requests, {session.errors} errors",
            file=sys.stderr,
        )
    return 0


if __name__ == "__main__":
    sys.exit(main())
