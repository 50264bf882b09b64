"""Standalone renderer: `ciplot figure-spec.txt [more-specs...]`."""

import argparse
import sys

from .formats import FigureSpec, FormatError
from .figures import render


def main(argv=None):
    parser = argparse.ArgumentParser(
        prog="ciplot",
        description="Render figures from stored simulation runs; each "
                    "argument is a flat key = value figure-spec file.")
    parser.add_argument("specs", nargs="+", help="figure-spec files")
    args = parser.parse_args(argv)
    failures = 0
    for path in args.specs:
        try:
            spec = FigureSpec.from_file(path)
            fig = render(spec)
            if fig is None:
                print(f"{path}: nothing to render (empty time list)")
            else:
                print(f"{path}: wrote {spec.out}")
        except (FormatError, FileNotFoundError) as exc:
            print(f"{path}: ERROR: {exc}", file=sys.stderr)
            failures += 1
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
