#!/usr/bin/env python3
"""Writes the domestic relations graph from the arrow family rules.

Independent of the C++ enumeration: the arrows come from the family rules
(2,3,4)->(2,3,3), (2,3,3)->(2,2,2), (2,2,m)->(m,m), (2,2,2k)->(2,2,k) and
(k,k), and (a,b)->(a/n,b/n) for n | gcd(a,b).
"""
import math
import sys
from collections import deque


def norm(ws):
    return tuple(sorted((w for w in ws if w > 1), reverse=True))


def arrows(node):
    out = []
    if node == (4, 3, 2):
        out.append(((3, 3, 2), "C2"))
    if node == (3, 3, 2):
        out.append(((2, 2, 2), "C3"))
    if len(node) == 3 and node[1] == 2 and node[2] == 2:
        m = node[0]
        out.append((norm((m, m)), "C2"))
        if m % 2 == 0:
            out.append((norm((2, 2, m // 2)), "C2"))
            out.append((norm((m // 2, m // 2)), "C2xC2"))
    if len(node) == 2:
        a, b = node
        for n in range(2, math.gcd(a, b) + 1):
            if a % n == 0 and b % n == 0:
                out.append((norm((a // n, b // n)), "C%d" % n))
    return out


def node_id(n):
    return "w" + "_".join(map(str, n))


def node_label(n):
    return "(" + ",".join(map(str, n)) + ")"


def main(seed_path, out_path):
    seeds = []
    with open(seed_path) as f:
        for line in f:
            line = line.strip()
            if line and not line.startswith("#"):
                seeds.append(norm(int(x) for x in line.split(",")))
    nodes, edges = set(), set()
    queue = deque(seeds)
    nodes.update(seeds)
    while queue:
        n = queue.popleft()
        for target, label in arrows(n):
            edges.add((node_id(n), node_id(target), label))
            if target not in nodes:
                nodes.add(target)
                queue.append(target)
    lines = ["digraph relations {"]
    for n in sorted(nodes, key=node_id):
        lines.append('  "%s" [label="%s"];' % (node_id(n), node_label(n)))
    for s, t, l in sorted(edges):
        lines.append('  "%s" -> "%s" [label="%s"];' % (s, t, l))
    lines.append("}")
    with open(out_path, "w") as f:
        f.write("\n".join(lines) + "\n")


if __name__ == "__main__":
    main(sys.argv[1], sys.argv[2])
