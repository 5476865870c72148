"""JSON schemas for path systems, weights, decisions, and reports.

Path system: ``{"nodes": [...], "paths": [[...], ...], "weights": {...}?}``
with rationals serialized as "p/q" or integer strings.  Weight keys join
the path's node names directly when every name is one character (the
common case), and with commas otherwise.

Witness weights: ``{"edges": [["a", "c", "1"], ...]}``.
Homomorphisms: ``{"phi": {...}, "rho": {...}}`` with path keys as above.
All emitters sort keys, so output is byte-deterministic.
"""

from __future__ import annotations

import json
from fractions import Fraction

from pathsys import topology
from pathsys.core import PathSystem, WeightedPathSystem
from pathsys.graphalg import WeightedDigraph
from pathsys.hom import Homomorphism
from pathsys.metrizability import Decision


def _path_key(p: tuple[str, ...], names) -> str:
    if all(len(n) == 1 for n in names):
        return "".join(p)
    if any("," in n for n in names):
        raise ValueError("node names may not contain commas")
    return ",".join(p)


def _parse_path_key(key: str, names) -> tuple[str, ...]:
    if all(len(n) == 1 for n in names):
        return tuple(key)
    return tuple(key.split(","))


def system_to_dict(s: PathSystem | WeightedPathSystem) -> dict:
    ws = s if isinstance(s, WeightedPathSystem) else None
    base = ws.system if ws else s
    out = {"nodes": list(base.names),
           "paths": [list(p) for p in base.name_paths()]}
    if ws and any(w != 1 for w in ws.weights):
        out["weights"] = {_path_key(p, base.names): str(w)
                          for p, w in ws.name_items()}
    return out


def system_from_dict(obj: dict) -> WeightedPathSystem:
    """Parse a system; absent weights mean unit weights."""
    if not isinstance(obj, dict) or "paths" not in obj:
        raise ValueError("expected an object with a 'paths' field")
    paths = [tuple(p) for p in obj["paths"]]
    declared = obj.get("nodes")
    system = PathSystem.from_names(paths, declared)
    raw = obj.get("weights")
    if raw is None:
        return WeightedPathSystem.unit(system)
    weights = {}
    for key, val in raw.items():
        p = _parse_path_key(key, system.names)
        weights[p] = Fraction(val)
    missing = set(system.name_paths()) - set(weights)
    if missing:
        raise ValueError(f"weights missing for paths: {sorted(missing)}")
    extra = set(weights) - set(system.name_paths())
    if extra:
        raise ValueError(f"weights given for unknown paths: {sorted(extra)}")
    return WeightedPathSystem.from_mapping(weights)


def load_system(text: str) -> WeightedPathSystem:
    return system_from_dict(json.loads(text))


def graph_to_dict(g: WeightedDigraph) -> dict:
    return {"edges": [[g.names[u], g.names[v], str(w)]
                      for (u, v), w in sorted(g.edges.items())]}


def graph_from_dict(obj: dict) -> WeightedDigraph:
    return WeightedDigraph.from_named_edges(
        [(u, v, Fraction(w)) for u, v, w in obj["edges"]])


def certificate_to_dict(cert: WeightedPathSystem, verified: bool) -> dict:
    out = system_to_dict(cert)
    if "weights" not in out:
        out["weights"] = {_path_key(p, cert.system.names): str(w)
                          for p, w in cert.name_items()}
    out["boundary_check"] = bool(verified)
    return out


def hom_to_dict(h: Homomorphism) -> dict:
    return {
        "phi": dict(sorted(h.phi.items())),
        "rho": {_path_key(p, h.source.names): _path_key(q, h.target.names)
                for p, q in sorted(h.rho.items())},
    }


def decision_to_dict(d: Decision) -> dict:
    out: dict = {"decision": d.tag, "setting": d.setting}
    if d.witness_graph is not None:
        out["witness"] = graph_to_dict(d.witness_graph)
    if d.certificate is not None:
        out["certificate"] = certificate_to_dict(d.certificate, True)
    if d.partner is not None:
        out["evidence"] = {
            "partner": system_to_dict(d.partner),
            "manifold": d.manifold.as_dict() if d.manifold else None,
        }
    out["stats"] = {k: v for k, v in d.stats.items() if k != "wall_ms"}
    return out


def dumps(obj: dict) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def manifold_to_dict(report: topology.ManifoldReport) -> dict:
    return report.as_dict()
