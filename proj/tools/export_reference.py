#!/usr/bin/env python3
"""Export reference PD tables for knot/link identification.

Knots come from KnotInfo (Knot Atlas numbering, 10_1..10_165), links from the
spherogram tables (Rolfsen names up to 9 crossings, Hoste-Thistlethwaite
names from 10 crossings on).  PD tuples are written 1-based as
PD[X[a,b,c,d],...] with the incoming under-strand first.

Requires: pip install snappy database_knotinfo sympy
"""
import argparse
import csv
import re
import sys
import warnings

warnings.filterwarnings("ignore")

from database_knotinfo import link_list  # noqa: E402
from spherogram import Link  # noqa: E402
import snappy  # noqa: E402


def pd_string(tuples):
    return "PD[" + ",".join("X[" + ",".join(str(v) for v in t) + "]" for t in tuples) + "]"


def knot_rows(max_crossings):
    for r in link_list():
        name = r["name"]
        m = re.fullmatch(r"(\d+)([an]?)_(\d+)", name)
        if not m or name == "0_1":
            continue
        c = int(m.group(1))
        if c > max_crossings:
            continue
        if c >= 11:
            name = "K%d%s%s" % (c, m.group(2), m.group(3))
        pd = eval(r["pd_notation"])  # list of 4-lists
        yield name, 1, pd_string(pd)


def rolfsen_link_names():
    table = snappy.LinkExteriors
    cur = table._connection.execute("select name from %s" % table._table)
    for (name,) in cur:
        m = re.fullmatch(r"(\d+)\^(\d+)_(\d+)", name)
        if m and int(m.group(1)) <= 9:
            yield name


def ht_link_names(min_c, max_c):
    table = snappy.HTLinkExteriors
    cur = table._connection.execute("select name from %s" % table._table)
    for (name,) in cur:
        m = re.fullmatch(r"L(\d+)([an])(\d+)", name)
        if m and min_c <= int(m.group(1)) <= max_c:
            yield name


def link_rows(max_crossings):
    names = list(rolfsen_link_names()) + list(ht_link_names(10, max_crossings))
    for name in names:
        L = Link(name)
        pd = [tuple(v + 1 for v in t) for t in L.PD_code()]
        yield name, len(L.link_components), pd_string(pd)


def kauffman_rows(max_crossings):
    import sympy

    a, z = sympy.symbols("a z")
    for r in link_list():
        name = r["name"]
        m = re.fullmatch(r"(\d+)([an]?)_(\d+)", name)
        if not m or name == "0_1" or int(m.group(1)) > max_crossings:
            continue
        text = r["kauffman_polynomial"].replace("^", "**")
        expr = sympy.expand(sympy.sympify(text, locals={"a": a, "z": z}))
        terms = []
        for term in sympy.Add.make_args(expr):
            coeff, rest = term.as_coeff_Mul()
            powers = rest.as_powers_dict()
            ea = int(powers.get(a, 0))
            ez = int(powers.get(z, 0))
            terms.append((ea, ez, int(coeff)))
        terms.sort()
        yield name, " + ".join("%d a^%d z^%d" % (c, i, j) for i, j, c in terms)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("what", choices=["reference", "kauffman"])
    ap.add_argument("--max-crossings", type=int, default=10)
    ap.add_argument("-o", "--output", required=True)
    args = ap.parse_args()
    with open(args.output, "w", newline="") as f:
        w = csv.writer(f, lineterminator="\n")
        if args.what == "reference":
            w.writerow(["name", "components", "pd"])
            for row in knot_rows(args.max_crossings):
                w.writerow(row)
            for row in link_rows(args.max_crossings):
                w.writerow(row)
        else:
            w.writerow(["name", "kauffman"])
            for row in kauffman_rows(args.max_crossings):
                w.writerow(row)
    return 0


if __name__ == "__main__":
    sys.exit(main())
