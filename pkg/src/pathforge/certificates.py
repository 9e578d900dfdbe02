"""Certificate files: a line-oriented text format that references graphs by
content hash, so every certificate can be re-validated against the exact
inputs it was produced from."""

from __future__ import annotations

from dataclasses import dataclass

from .generators import SubdivisionCert, WattleCertificate, validate_subdivision, validate_wattle
from .graph import Graph, RootedTree
from .io import graph_hash
from .minors import Distance5Partition, MinorModel, validate_distance5, validate_model
from .patterns import (
    Embedding,
    SubdivisionEmbedding,
    validate_embedding,
    validate_subdivision_embedding,
)
from .width import PathDecomposition, validate_path_decomposition

HEADER = "pathforge-certificate v1"

KINDS = ("path-decomposition", "minor-model", "embedding", "subdivision",
         "wattle", "partition")


def _fmt_set(xs) -> str:
    return " ".join(str(x) for x in sorted(xs))


def write_certificate(obj, graph: Graph | None = None) -> str:
    """Serialize a certificate object; `graph` names the host for kinds whose
    object does not carry it (decompositions, partitions)."""
    lines = [HEADER]
    if isinstance(obj, PathDecomposition):
        if graph is None:
            raise ValueError("path decompositions need their graph for the hash")
        lines.append("kind: path-decomposition")
        lines.append(f"graph: {graph_hash(graph)}")
        lines.extend(f"bag: {_fmt_set(bag)}" for bag in obj.bags)
    elif isinstance(obj, MinorModel):
        lines.append("kind: minor-model")
        lines.append(f"graph: {graph_hash(obj.host)}")
        lines.append(f"pattern: {graph_hash(obj.pattern)}")
        lines.append(f"induced: {'true' if obj.induced else 'false'}")
        for v in sorted(obj.branch_sets):
            lines.append(f"set: {v} -> {_fmt_set(obj.branch_sets[v])}")
    elif isinstance(obj, Embedding):
        lines.append("kind: embedding")
        lines.append(f"graph: {graph_hash(obj.host)}")
        lines.append(f"pattern: {graph_hash(obj.pattern)}")
        lines.append(f"induced: {'true' if obj.induced else 'false'}")
        for p in sorted(obj.mapping):
            lines.append(f"map: {p} -> {obj.mapping[p]}")
    elif isinstance(obj, SubdivisionEmbedding):
        lines.append("kind: subdivision")
        lines.append(f"graph: {graph_hash(obj.host)}")
        lines.append(f"base: {graph_hash(obj.base)}")
        lines.append("exact: false")
        lines.append(f"induced: {'true' if obj.induced else 'false'}")
        for v in sorted(obj.branch_map):
            lines.append(f"branch: {v} -> {obj.branch_map[v]}")
        for (u, v), path in sorted(obj.path_map.items()):
            lines.append(f"path: {u} {v} -> " + " ".join(str(x) for x in path))
    elif isinstance(obj, SubdivisionCert):
        lines.append("kind: subdivision")
        lines.append(f"graph: {graph_hash(obj.host)}")
        lines.append(f"base: {graph_hash(obj.base)}")
        lines.append("exact: true")
        for (u, v), path in sorted(obj.path_map.items()):
            lines.append(f"path: {u} {v} -> " + " ".join(str(x) for x in path))
    elif isinstance(obj, WattleCertificate):
        lines.append("kind: wattle")
        lines.append(f"graph: {graph_hash(obj.host)}")
        lines.append(f"base: {graph_hash(obj.base.graph)}")
        lines.append(f"root: {obj.base.root}")
        if obj.triangles:
            lines.append(f"triangles: {_fmt_set(obj.triangles)}")
        for v in sorted(obj.branch_map):
            img = obj.branch_map[v]
            if isinstance(img, frozenset):
                lines.append(f"branch: {v} -> {_fmt_set(img)}")
            else:
                lines.append(f"branch: {v} -> {img}")
        for (u, v), path in sorted(obj.path_map.items()):
            lines.append(f"path: {u} {v} -> " + " ".join(str(x) for x in path))
    elif isinstance(obj, Distance5Partition):
        if graph is None:
            raise ValueError("partitions need their graph for the hash")
        lines.append("kind: partition")
        lines.append(f"graph: {graph_hash(graph)}")
        lines.extend(f"class: {_fmt_set(cls)}" for cls in obj.classes)
    else:
        raise TypeError(f"no certificate writer for {type(obj).__name__}")
    return "\n".join(lines) + "\n"


@dataclass
class ParsedCertificate:
    kind: str
    fields: dict[str, str]
    sets: dict[int, list[int]]
    maps: dict[int, int]
    branches: dict[int, list[int]]
    paths: dict[tuple[int, int], list[int]]
    bags: list[list[int]]
    classes: list[list[int]]


def parse_certificate(text: str) -> ParsedCertificate:
    lines = text.splitlines()
    if not lines or lines[0].strip() != HEADER:
        raise ValueError("line 1: missing certificate header")
    out = ParsedCertificate("", {}, {}, {}, {}, {}, [], [])
    for lineno, raw in enumerate(lines[1:], 2):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if ":" not in line:
            raise ValueError(f"line {lineno}: expected 'key: value'")
        key, _, value = line.partition(":")
        key, value = key.strip(), value.strip()
        try:
            if key == "kind":
                if value not in KINDS:
                    raise ValueError(f"unknown kind {value!r}")
                out.kind = value
            elif key in ("graph", "pattern", "base", "root", "induced", "exact", "triangles"):
                out.fields[key] = value
            elif key == "set":
                left, _, right = value.partition("->")
                out.sets[int(left)] = [int(x) for x in right.split()]
            elif key == "map":
                left, _, right = value.partition("->")
                out.maps[int(left)] = int(right)
            elif key == "branch":
                left, _, right = value.partition("->")
                out.branches[int(left)] = [int(x) for x in right.split()]
            elif key == "path":
                left, _, right = value.partition("->")
                u, v = (int(x) for x in left.split())
                out.paths[(u, v)] = [int(x) for x in right.split()]
            elif key == "bag":
                out.bags.append([int(x) for x in value.split()])
            elif key == "class":
                out.classes.append([int(x) for x in value.split()])
            else:
                raise ValueError(f"unknown key {key!r}")
        except ValueError as exc:
            raise ValueError(f"line {lineno}: {exc}") from None
    if not out.kind:
        raise ValueError("certificate has no kind line")
    return out


def verify_certificate(text: str, graphs: list[Graph]) -> list[str]:
    """Re-validate a certificate against candidate graphs, matched by content
    hash.  Returns the list of problems (empty = certificate verifies)."""
    cert = parse_certificate(text)
    by_hash = {graph_hash(g): g for g in graphs}

    def resolve(role: str) -> Graph | None:
        want = cert.fields.get(role)
        if want is None:
            return None
        return by_hash.get(want)

    host = resolve("graph")
    if host is None:
        return [f"no supplied graph matches the {cert.fields.get('graph')} reference"]
    induced = cert.fields.get("induced", "false") == "true"

    if cert.kind == "path-decomposition":
        pd = PathDecomposition(tuple(frozenset(b) for b in cert.bags))
        return validate_path_decomposition(host, pd)
    if cert.kind == "partition":
        part = Distance5Partition(tuple(frozenset(c) for c in cert.classes))
        return validate_distance5(host, part)
    if cert.kind == "minor-model":
        pattern = resolve("pattern")
        if pattern is None:
            return ["no supplied graph matches the pattern reference"]
        model = MinorModel(pattern, host,
                           {v: frozenset(xs) for v, xs in cert.sets.items()}, induced)
        return validate_model(model)
    if cert.kind == "embedding":
        pattern = resolve("pattern")
        if pattern is None:
            return ["no supplied graph matches the pattern reference"]
        emb = Embedding(pattern, host, dict(cert.maps), induced)
        return validate_embedding(emb)
    if cert.kind == "subdivision":
        base = resolve("base")
        if base is None:
            return ["no supplied graph matches the base reference"]
        paths = {e: tuple(p) for e, p in cert.paths.items()}
        if cert.fields.get("exact") == "true":
            sc = SubdivisionCert(base=base, host=host,
                                 original_vertices=base.vertex_set(), path_map=paths)
            return validate_subdivision(sc)
        branch = {v: xs[0] for v, xs in cert.branches.items()}
        emb = SubdivisionEmbedding(base=base, host=host, branch_map=branch,
                                   path_map=paths, induced=induced)
        return validate_subdivision_embedding(emb)
    if cert.kind == "wattle":
        base = resolve("base")
        if base is None:
            return ["no supplied graph matches the base reference"]
        root = int(cert.fields.get("root", "0"))
        triangles = frozenset(int(x) for x in cert.fields.get("triangles", "").split())
        branch: dict[int, int | frozenset[int]] = {}
        for v, xs in cert.branches.items():
            branch[v] = frozenset(xs) if len(xs) == 3 and v in triangles else xs[0]
        wc = WattleCertificate(base=RootedTree(base, root), triangles=triangles,
                               host=host, branch_map=branch,
                               path_map={e: tuple(p) for e, p in cert.paths.items()})
        return validate_wattle(wc)
    raise AssertionError(cert.kind)
