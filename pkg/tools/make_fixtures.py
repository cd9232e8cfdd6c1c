"""Regenerate the bundled fixtures and the theta table.

Development tool only; the package never imports it. Needs ``snappy`` for
the knot PD codes and for identifying the larger diagrams:

    python3 tools/make_fixtures.py --table-source path/to/source.tex

Knot PD codes come from SnapPy's Rolfsen table. Each knot also gets a
non-minimal diagram (``<name>_r.pd``) made by random Reidemeister moves,
kept only if SnapPy still identifies it (or, for non-hyperbolic knots, if
its crossing count grew and the determinant is unchanged).
"""

from __future__ import annotations

import argparse
import random
import re
import sys
from pathlib import Path

import snappy

from thetadet.embedding import medial_diagram
from thetadet.families import KNOT_FIXTURES, PretzelParams, embedding_948, pretzel_theta
from thetadet.pd import diagram_from_tuples, format_pd, knot_determinant
from thetadet.symmetric import format_symmetric

ROOT = Path(__file__).resolve().parent.parent / "src" / "thetadet"
FIXTURES = ROOT / "fixtures"
DATA = ROOT / "data"

# the plain unknot has no crossings; its "minimal" fixture is a one-kink diagram
UNKNOT = "X(1,2,2,3),X(3,4,4,1)"
UNKNOT_R = "X(1,2,2,3),X(3,4,4,5),X(5,6,6,1)"


def _pd_text(name, tuples):
    d = diagram_from_tuples(tuples)
    return f"# {name}, {d.crossing_count} crossings\n{format_pd(d)}\n", d


def _identifies(link, name):
    try:
        found = link.exterior().identify()
    except (RuntimeError, ValueError):
        return False
    return any(str(m).split("(")[0] == name for m in found)


def write_knots(rng):
    for name in KNOT_FIXTURES:
        if name == "0_1":
            (FIXTURES / "0_1.pd").write_text(f"# 0_1, 2 crossings\n{UNKNOT}\n")
            (FIXTURES / "0_1_r.pd").write_text(f"# 0_1, 3 crossings\n{UNKNOT_R}\n")
            continue
        link = snappy.Link(name)
        text, d = _pd_text(name, link.PD_code())
        (FIXTURES / f"{name}.pd").write_text(text)
        det = knot_determinant(d)
        for _ in range(200):
            big = snappy.Link(name)
            random.seed(rng.random())
            big.backtrack(rng.randint(3, 8))
            if len(big.crossings) <= len(link.crossings):
                continue
            candidate = diagram_from_tuples(big.PD_code())
            if knot_determinant(candidate) != det:
                continue
            hyperbolic = name not in ("3_1", "5_1", "7_1")
            if hyperbolic and not _identifies(big, name):
                continue
            text, _ = _pd_text(f"{name}, non-minimal", big.PD_code())
            (FIXTURES / f"{name}_r.pd").write_text(text)
            break
        else:
            sys.exit(f"no non-minimal diagram found for {name}")


def write_symmetric():
    b = embedding_948()
    s, plane = b.build()
    (FIXTURES / "9_48.sym").write_text(format_symmetric(s, name="9_48"))
    d = medial_diagram(plane)
    (FIXTURES / "9_48.pd").write_text(f"# 9_48, symmetric diagram\n{format_pd(d)}\n")
    plane_ab, plane_bc = b.constituent_planes()
    for tag, p in (("ab", plane_ab), ("bc", plane_bc)):
        c = medial_diagram(p)
        (FIXTURES / f"9_48_{tag}.pd").write_text(f"# 9_48 constituent {tag}\n{format_pd(c)}\n")
    for p in (1, 3, 5, 7):
        for q in (2, 4, 6):
            s = pretzel_theta(PretzelParams(p, q))
            (FIXTURES / f"pretzel_{p}_{q}.sym").write_text(
                format_symmetric(s, name=f"pretzel_{p}_{q}")
            )


_ROW = re.compile(r"^\s*\$\\mathbf\{(\d)_\{?(\d+)\}?\}\$\s*&(.*)$")


def _knot(cell):
    cell = cell.strip().replace("$", "")
    return cell


def write_table(source: Path):
    rows = []
    for line in source.read_text().splitlines():
        m = _ROW.match(line)
        if not m:
            continue
        body = m.group(3).split("\\\\")[0]
        cells = [c.strip() for c in body.split("&")]
        knots = [_knot(c) for c in cells[:3] if c.strip()]
        dets = cells[3].replace(" ", "")
        theta_det = cells[4].strip()
        rows.append((f"{m.group(1)}_{m.group(2)}", ",".join(knots), dets, theta_det))
    if len(rows) != 90:
        sys.exit(f"expected 90 rows, parsed {len(rows)}")
    lines = [
        "# theta curves through seven crossings; constituents as 'kx<name>' for repeats",
        "theta_name\tconstituents\tconstituent_dets\ttheta_det",
    ]
    lines.extend("\t".join(r) for r in rows)
    (DATA / "moriuchi_table.tsv").write_text("\n".join(lines) + "\n")


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--table-source", type=Path, help="LaTeX source containing the theta table")
    parser.add_argument("--seed", type=int, default=2024)
    args = parser.parse_args()
    FIXTURES.mkdir(exist_ok=True)
    DATA.mkdir(exist_ok=True)
    write_knots(random.Random(args.seed))
    write_symmetric()
    if args.table_source:
        write_table(args.table_source)


if __name__ == "__main__":
    main()
