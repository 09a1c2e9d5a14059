"""Edge-list and DOT serialization.

The interchange format is a plain text edge list: a header line "n m" followed
by m lines "u v" or "u v w" (w a positive weight; omitted means 1.0).  Output
is deterministic: edges sorted lexicographically, weights printed with repr so
parsing them back reproduces the exact Graph.
"""

from .graph import Graph, build_graph


def format_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    for (u, v), w in zip(g.edges, g.weights):
        if w == 1.0:
            lines.append(f"{u} {v}")
        else:
            lines.append(f"{u} {v} {w!r}")
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> Graph:
    """Parse the edge-list format; raises ValueError with a line number on
    malformed input."""
    rows = [
        (i, line.strip())
        for i, line in enumerate(text.splitlines(), start=1)
        if line.strip()
    ]
    if not rows:
        raise ValueError("empty input: expected a header line 'n m'")
    header_no, header = rows[0]
    parts = header.split()
    if len(parts) != 2:
        raise ValueError(f"line {header_no}: header must be 'n m', got {header!r}")
    try:
        n, m = int(parts[0]), int(parts[1])
    except ValueError:
        raise ValueError(f"line {header_no}: header must contain two integers") from None
    body = rows[1:]
    if len(body) != m:
        raise ValueError(f"header declares {m} edges but {len(body)} edge lines found")
    edges = []
    weights = {}
    for line_no, line in body:
        parts = line.split()
        if len(parts) not in (2, 3):
            raise ValueError(f"line {line_no}: expected 'u v' or 'u v w', got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ValueError(f"line {line_no}: vertex labels must be integers") from None
        edges.append((u, v))
        if len(parts) == 3:
            try:
                w = float(parts[2])
            except ValueError:
                raise ValueError(f"line {line_no}: weight must be a number") from None
            weights[(min(u, v), max(u, v))] = w
    try:
        return build_graph(n, edges, weights)
    except ValueError as exc:
        raise ValueError(f"invalid graph: {exc}") from None


def format_dot(g: Graph) -> str:
    """Graphviz DOT rendering; vertex labels are used as node ids."""
    lines = ["graph blockspectra {"]
    for v in g.vertices():
        lines.append(f"  {v};")
    for (u, v), w in zip(g.edges, g.weights):
        if w == 1.0:
            lines.append(f"  {u} -- {v};")
        else:
            lines.append(f'  {u} -- {v} [label="{w!r}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def load_graph(path: str) -> Graph:
    with open(path, "r", encoding="ascii") as fh:
        return parse_edge_list(fh.read())


def save_graph(g: Graph, path: str) -> None:
    with open(path, "w", encoding="ascii") as fh:
        fh.write(format_edge_list(g))
