"""Independent oracle for the F_6 golden file.

Enumerates all labeled 6-vertex graphs with plain Python (rational Gaussian
elimination, its own graph6 encoder) and writes one JSON line per member of
F_6, in enumeration order. The C++ search must reproduce this file exactly.

    python3 tests/python/make_f6_golden.py > tests/golden/f6_members.jsonl
"""

import json
import sys
from fractions import Fraction


def det(rows):
    m = [[Fraction(v) for v in r] for r in rows]
    n = len(m)
    d = Fraction(1)
    for c in range(n):
        p = next((r for r in range(c, n) if m[r][c] != 0), None)
        if p is None:
            return 0
        if p != c:
            m[c], m[p] = m[p], m[c]
            d = -d
        d *= m[c][c]
        for r in range(c + 1, n):
            f = m[r][c] / m[c][c]
            for k in range(c, n):
                m[r][k] -= f * m[c][k]
    return int(d)


def graph6(n, adj):
    # Upper triangle, column by column, big-endian 6-bit groups offset by 63.
    bits = "".join("1" if adj[i][j] else "0" for j in range(1, n) for i in range(j))
    bits += "0" * (-len(bits) % 6)
    body = "".join(chr(int(bits[k:k + 6], 2) + 63) for k in range(0, len(bits), 6))
    return chr(n + 63) + body


def main(n=6):
    pairs = [(i, j) for j in range(1, n) for i in range(j)]
    for mask in range(1 << len(pairs)):
        adj = [[0] * n for _ in range(n)]
        for b, (i, j) in enumerate(pairs):
            if mask >> b & 1:
                adj[i][j] = adj[j][i] = 1
        det_a = det(adj)
        if abs(det_a) != 1:
            continue
        cols = [[1] * n]
        for _ in range(n - 1):
            v = cols[-1]
            cols.append([sum(adj[i][j] * v[j] for j in range(n)) for i in range(n)])
        det_w = det([[cols[k][i] for k in range(n)] for i in range(n)])
        if abs(det_w) != 2 ** (n // 2):
            continue
        record = {"graph6": graph6(n, adj), "n": n, "detA": str(det_a), "detW": str(det_w), "member": True}
        sys.stdout.write(json.dumps(record, separators=(",", ":")) + "\n")


if __name__ == "__main__":
    main(int(sys.argv[1]) if len(sys.argv) > 1 else 6)
