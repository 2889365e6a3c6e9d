"""
Several functions for converting matrices and reports to readable text or JSON.
"""
import json
import math
from fractions import Fraction


def matrixlines(m):
    """
    convert a FreeMap to a list of column aligned text lines.
    """
    table = m.tostrings()
    if not table or not table[0]:
        return ["(%dx%d)" % (m.rows, m.cols)]
    widths = [max(len(row[j]) for row in table) for j in range(m.cols)]
    return ["[ %s ]" % "  ".join(e.rjust(w) for e, w in zip(row, widths)) for row in table]


def matrixdump(name, m, out):
    """
    Output a named matrix, one row per line.
    """
    lines = matrixlines(m)
    prefix = "%s = " % name
    for i, line in enumerate(lines):
        print("%s%s" % (prefix if i == 0 else " " * len(prefix), line), file=out)


def jsonsafe(obj):
    """
    Convert a report structure to plain JSON values: infinite lengths become
    the string "infinite", fractions their text form.
    """
    if isinstance(obj, dict):
        return {str(k): jsonsafe(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [jsonsafe(v) for v in obj]
    if isinstance(obj, float) and math.isinf(obj):
        return "infinite"
    if isinstance(obj, Fraction):
        return str(obj)
    return obj


def jsondump(obj, out):
    json.dump(jsonsafe(obj), out, indent=2, sort_keys=True)
    out.write("\n")
