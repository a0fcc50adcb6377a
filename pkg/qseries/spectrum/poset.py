"""The H-prime poset (J_w contained in J_w') as a networkx DiGraph."""

from __future__ import annotations

from typing import Dict, List, Optional, Sequence, Tuple

import networkx as nx

from .strata import HPrime, Stratum, Subset, all_subsets, hprime


def build_poset(primes: Sequence[HPrime], strata: Optional[Sequence[Stratum]] = None) -> nx.DiGraph:
    """
    Nodes are subsets w with attributes:
    - 'meta': the HPrime
    - 'stratum': the Stratum of w, when given
    Edges are cover relations w -> w + {i}.
    """
    by_w: Dict[Subset, Stratum] = {s.w: s for s in strata or ()}
    g = nx.DiGraph()
    for prime in primes:
        g.add_node(prime.w, meta=prime, stratum=by_w.get(prime.w))
    nodes = set(g.nodes)
    universe = {i for w in nodes for i in w}
    for w in nodes:
        for i in universe - set(w):
            cover = tuple(sorted(w + (i,)))
            if cover in nodes:
                g.add_edge(w, cover)
    return g


def boolean_lattice(n: int) -> nx.DiGraph:
    return build_poset([hprime(w) for w in all_subsets(n)])


def hasse_edges(g: nx.DiGraph) -> List[Tuple[Subset, Subset]]:
    return sorted(g.edges, key=lambda e: (len(e[0]), e[0], e[1]))


def saturated_chains(g: nx.DiGraph, source: Subset, target: Subset) -> List[List[Subset]]:
    """Every maximal chain source < ... < target in the Hasse diagram."""
    if source == target:
        return [[source]]
    return [list(path) for path in nx.all_simple_paths(g, source, target)]


def is_contained(g: nx.DiGraph, w: Subset, w2: Subset) -> bool:
    return w == w2 or nx.has_path(g, w, w2)


def to_dot(g: nx.DiGraph, name: str = "hprimes") -> str:
    """DOT digraph, bottom (J_0) first; simple strata drawn as boxes."""
    lines = [f"digraph {name} {{", "  rankdir=BT;"]
    ids = {w: f"w{'_'.join(map(str, w)) or 'none'}" for w in g.nodes}
    for w in sorted(g.nodes, key=lambda w: (len(w), w)):
        meta: HPrime = g.nodes[w]["meta"]
        stratum: Optional[Stratum] = g.nodes[w].get("stratum")
        attrs = [f'label="{meta.label}"']
        if stratum is not None:
            attrs[0] = f'label="{meta.label}\\nrank {stratum.center_rank}"'
            attrs.append(f"shape={'box' if stratum.simple else 'ellipse'}")
        lines.append(f"  {ids[w]} [{', '.join(attrs)}];")
    for a, b in hasse_edges(g):
        lines.append(f"  {ids[a]} -> {ids[b]};")
    lines.append("}")
    return "\n".join(lines) + "\n"
