"""Symbolic source terms g = -Delta_M u sampled at Lebedev nodes.

The surface Laplacian is built in the intrinsic chart form
    Delta u = |g|^{-1/2} d_i (|g|^{1/2} g^{ij} d_j u)
from the parameterization r(theta, phi) e(theta, phi) in chart A or chart B,
differentiated by sympy and evaluated with mpmath at 30 digits.
"""

import argparse
import csv
import json
import math
import sys
from pathlib import Path

import mpmath
import sympy as sp

from . import GENERATOR_VERSION

PHI_MIN = 0.8 * math.pi / 4.0
MP_DIGITS = 30
# Nodes per file at which both charts are evaluated and compared.
CROSS_CHECK_NODES = 24

th, ph, a = sp.symbols("theta phi r0", real=True)


def chart_point(chart):
    e = sp.Matrix([sp.sin(ph) * sp.cos(th), sp.sin(ph) * sp.sin(th), sp.cos(ph)])
    if chart == "A":
        return e
    # (a, b, c) -> (c, b, -a)
    return sp.Matrix([e[2], e[1], -e[0]])


def radial(preset, e):
    x, z = e[0], e[2]
    if preset == "sphere":
        return sp.Integer(1)
    if preset == "dimple":
        return 1 + a * x * (4 * z**2 - 1)
    if preset == "fountain":
        return 1 + a * x * (64 * z**6 - 80 * z**4 + 24 * z**2 - 1)
    raise ValueError(f"unknown preset {preset}")


PRESET_DEGREE = {"sphere": 0, "dimple": 3, "fountain": 7}


def case_function(case, p):
    if case == "exp-poly":
        return sp.exp(p[1]) / (3 - p[2]) ** 4
    raise ValueError(f"unknown case {case}")


def laplacian_expr(preset, case, chart):
    e = chart_point(chart)
    s = radial(preset, e) * e
    u = case_function(case, s)
    st, sph = s.diff(th), s.diff(ph)
    g = sp.Matrix([[st.dot(st), st.dot(sph)], [st.dot(sph), sph.dot(sph)]])
    det = g.det()
    sqrt_det = sp.sqrt(det)
    ut, up = u.diff(th), u.diff(ph)
    # g^{-1} = adj(g) / det
    flux_t = sqrt_det * (g[1, 1] * ut - g[0, 1] * up) / det
    flux_p = sqrt_det * (-g[0, 1] * ut + g[0, 0] * up) / det
    lap = (flux_t.diff(th) + flux_p.diff(ph)) / sqrt_det
    return sp.lambdify((th, ph, a), [lap, u], modules="mpmath", cse=True)


def chart_angles(x, y, z, chart):
    if chart == "A":
        vx, vy, vz = x, y, z
    else:
        vx, vy, vz = -z, y, x
    theta = mpmath.atan2(vy, vx)
    if theta < 0:
        theta += 2 * mpmath.pi
    phi = mpmath.acos(max(-1, min(1, vz / mpmath.sqrt(vx * vx + vy * vy + vz * vz))))
    return theta, phi


def select_chart(z):
    return "A" if abs(z) <= math.cos(PHI_MIN) else "B"


def chart_valid(x, y, z, chart):
    _, phi = chart_angles(x, y, z, chart)
    return PHI_MIN <= float(phi) <= 0.8 * math.pi


def manifold_hash(preset, r0, max_degree, node_count):
    key = f"{preset}|{r0:.17g}|{max_degree}|{node_count}".encode()
    h = 14695981039346656037
    for c in key:
        h ^= c
        h = (h * 1099511628211) & 0xFFFFFFFFFFFFFFFF
    return f"{h:016x}"


def read_grid(path):
    with open(path, newline="") as f:
        rows = list(csv.DictReader(f))
    return [(mpmath.mpf(r["x"]), mpmath.mpf(r["y"]), mpmath.mpf(r["z"])) for r in rows]


def fmt(v):
    return "%.17g" % float(v)


def generate_case(case, preset, r0, grid_csv, out_dir, funcs):
    mpmath.mp.dps = MP_DIGITS
    nodes = read_grid(grid_csv)
    r0m = mpmath.mpf(repr(r0))
    u_vals, g_vals = [], []
    chart_gap = 0.0
    checked = 0
    for x, y, z in nodes:
        norm = mpmath.sqrt(x * x + y * y + z * z)
        x, y, z = x / norm, y / norm, z / norm
        chart = select_chart(float(z))
        lap, u = funcs[chart](*chart_angles(x, y, z, chart), r0m)
        other = "B" if chart == "A" else "A"
        if checked < CROSS_CHECK_NODES and chart_valid(x, y, z, other):
            checked += 1
            lap2, _ = funcs[other](*chart_angles(x, y, z, other), r0m)
            chart_gap = max(chart_gap, float(abs(lap - lap2) / max(1, abs(lap))))
        u_vals.append(u)
        g_vals.append(-lap)
    n = len(nodes)
    degree = PRESET_DEGREE[preset]
    name = f"{case}_{preset}_r0-{r0:.2f}_n{n}.json"
    body = (
        "{\n"
        f'  "case": "{case}",\n'
        f'  "manifold": {{"preset": "{preset}", "r0": {fmt(r0)}, "maxDegree": {degree}}},\n'
        f'  "nodeCount": {n},\n'
        f'  "hash": "{manifold_hash(preset, r0, degree, n)}",\n'
        f'  "generator_version": "{GENERATOR_VERSION}",\n'
        f'  "chart_agreement": {chart_gap:.3e},\n'
        f'  "u": [{", ".join(fmt(v) for v in u_vals)}],\n'
        f'  "g": [{", ".join(fmt(v) for v in g_vals)}]\n'
        "}\n"
    )
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    (out / name).write_text(body)
    json.loads(body)
    return name, chart_gap


def main(argv=None):
    p = argparse.ArgumentParser(prog="oracle")
    sub = p.add_subparsers(dest="command", required=True)
    gen = sub.add_parser("generate", help="write golden files")
    gen.add_argument("--case", default="exp-poly")
    gen.add_argument("--manifold", required=True, choices=sorted(PRESET_DEGREE))
    gen.add_argument("--r0", type=float, nargs="+", required=True)
    gen.add_argument("--nodes", required=True, help="comma-separated node counts")
    gen.add_argument("--grid-csv", required=True, nargs="+",
                     help="grid dumps from the primary, one per node count; a directory "
                          "containing lebedev_<n>.csv is also accepted")
    gen.add_argument("--out", required=True)
    args = p.parse_args(argv)

    counts = [int(s) for s in args.nodes.split(",") if s]
    if len(args.grid_csv) == 1 and Path(args.grid_csv[0]).is_dir():
        grids = [Path(args.grid_csv[0]) / f"lebedev_{n}.csv" for n in counts]
    else:
        grids = [Path(g) for g in args.grid_csv]
    if len(grids) != len(counts):
        p.error("need one --grid-csv per node count")

    funcs = {c: laplacian_expr(args.manifold, args.case, c) for c in ("A", "B")}
    manifest_path = Path(args.out) / "manifest.json"
    manifest = json.loads(manifest_path.read_text()) if manifest_path.exists() else {}
    for r0 in args.r0:
        for n, grid in zip(counts, grids):
            name, gap = generate_case(args.case, args.manifold, r0, grid, args.out, funcs)
            manifest[name] = {"generator_version": GENERATOR_VERSION, "chart_agreement": gap}
            print(f"{name} chart agreement {gap:.2e}", file=sys.stderr)
    manifest_path.write_text(json.dumps(dict(sorted(manifest.items())), indent=2) + "\n")
    return 0
