"""Render figures from diracstep CSV files.

    stepfigs --layout fig1 --out rt_grid.png a.csv b.csv c.csv d.csv
    stepfigs --layout fig2 --out sweep.png sweep.csv

Exits nonzero on missing files or schema violations, naming the offending
column in the message.
"""

import argparse
import sys

from .figures import FigureSpec, render
from .reader import SchemaError


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(prog="stepfigs", description=__doc__.splitlines()[0])
    parser.add_argument("inputs", nargs="+", help="input CSV paths")
    parser.add_argument("--layout", choices=("fig1", "fig2"), required=True)
    parser.add_argument("--out", required=True, help="output image path (.png/.svg/.pdf)")
    args = parser.parse_args(argv)
    try:
        render(FigureSpec(inputs=list(args.inputs), layout=args.layout, out_path=args.out))
    except (SchemaError, OSError) as exc:
        print(f"stepfigs: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
