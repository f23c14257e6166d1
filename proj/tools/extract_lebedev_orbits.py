#!/usr/bin/env python3
"""Extract Lebedev-Laikov orbit generators into a C++ table.

Reads the generator listing shipped with SciPy (scipy/integrate/_lebedev.py,
itself a translation of the Lebedev-Laikov C routines) and writes
src/lebedev_orbits.inc. Only the orbit parameters are kept; the node sets are
expanded at runtime by LebedevGrid.

Usage: python3 tools/extract_lebedev_orbits.py > src/lebedev_orbits.inc
"""
import re
import sys

import scipy.integrate._lebedev as leb

SUPPORTED = {6: 3, 14: 5, 26: 7, 38: 9, 50: 11, 74: 13, 86: 15, 110: 17,
             146: 19, 170: 21, 194: 23, 230: 25, 266: 27, 302: 29, 350: 31,
             434: 35, 590: 41, 770: 47, 974: 53, 1202: 59}

def main():
    src = open(leb.__file__).read()
    body = src[src.index("match degree:"):src.index("def get_lebedev_recurrence_points")]
    cases = re.split(r"\n\s*case (\d+):", body)
    out = ["// Generated by tools/extract_lebedev_orbits.py. Do not edit.",
           "// {node count, precision, orbit offset, orbit count}, then orbits as",
           "// {type, a, b, v}; weight of every node in an orbit is 4*pi*v."]
    tables, index = [], []
    for i in range(1, len(cases), 2):
        count = int(cases[i])
        if count not in SUPPORTED:
            continue
        a = b = 0.0
        orbits = []
        for line in cases[i + 1].splitlines():
            line = line.strip()
            m = re.match(r"([abv]) = (\S+)", line)
            if m:
                val = m.group(2)
                if m.group(1) == "a": a = val
                elif m.group(1) == "b": b = val
                else: v = val
                continue
            m = re.match(r"leb_tmp, start = get_lebedev_recurrence_points\((\d)", line)
            if m:
                orbits.append((int(m.group(1)), a, b, v))
        index.append((count, SUPPORTED[count], len(tables), len(orbits)))
        tables.extend(orbits)
    out.append("constexpr OrbitGenerator kOrbits[] = {")
    for t, a, b, v in tables:
        out.append(f"    {{{t}, {a}, {b}, {v}}},")
    out.append("};")
    out.append("constexpr RuleEntry kRules[] = {")
    for c, p, off, n in index:
        out.append(f"    {{{c}, {p}, {off}, {n}}},")
    out.append("};")
    assert len(index) == len(SUPPORTED), index
    sys.stdout.write("\n".join(out) + "\n")

if __name__ == "__main__":
    main()
