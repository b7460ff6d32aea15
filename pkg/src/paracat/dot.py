"""Graphviz text for finite categories and TCats.

Nodes and edges follow the canonical id order of the JSON export, so the text
is a function of the input alone.  A TCat gets one cluster per base object
and its cocartesian edges drawn in red.
"""

from .fibration import TCat
from .schema import Ids


def _q(s):
    return '"' + str(s).replace("\\", "\\\\").replace('"', '\\"') + '"'


def export_dot(value, suppress_identities=False):
    C = value.total if isinstance(value, TCat) else value
    ids = Ids(C)
    node = {x: f"n{k}" for k, x in enumerate(ids.order)}
    lines = [f"digraph {_q(value.name)} {{", "  node [shape=box];"]
    if isinstance(value, TCat):
        bids = Ids(value.base)
        for V in bids.order:
            lines.append(f"  subgraph cluster_{V} {{")
            lines.append(f"    label={_q(bids.obj[V])};")
            for x in ids.order:
                if value.p(x) == V:
                    lines.append(f"    {node[x]} [label={_q(ids.obj[x])}];")
            lines.append("  }")
    else:
        for x in ids.order:
            lines.append(f"  {node[x]} [label={_q(ids.obj[x])}];")
    for m in ids.mors:
        if suppress_identities and C.is_identity(m):
            continue
        attrs = [f"label={_q(C.label(m))}"]
        if isinstance(value, TCat) and value.is_cocartesian(m):
            attrs.append("color=red")
        lines.append(f"  {node[m[0]]} -> {node[m[1]]} [{', '.join(attrs)}];")
    lines.append("}")
    return "\n".join(lines) + "\n"
