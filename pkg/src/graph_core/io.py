import json
from pathlib import Path
from typing import Iterable, Union

from pydantic import TypeAdapter, ValidationError

from src.errors import MalformedFile, UnreadableFile
from src.models import DivisorEntry, EdgeSpec, GraphFile
from .divisor import Divisor
from .graph import MetricGraph, build_graph
from .rationals import format_rational, parse_rational

PathLike = Union[str, Path]

_entries = TypeAdapter(list[DivisorEntry])


# ============ Files ============

def _read(path: Path) -> str:
    try:
        return path.read_text()
    except OSError as exc:
        raise UnreadableFile(f"Cannot read {path}: {exc.strerror or exc}") from exc


def _invalid(path: Path, exc: ValidationError) -> MalformedFile:
    first = exc.errors()[0]
    where = ".".join(str(part) for part in first["loc"]) or "<root>"
    return MalformedFile(f"{path}: {exc.error_count()} problem(s), first at {where}: {first['msg']}")


# ============ Graphs ============

def graph_from_model(model: GraphFile, name: str = "") -> MetricGraph:
    edges = [(e.id, e.ends[0], e.ends[1], parse_rational(e.length)) for e in model.edges]
    return build_graph(model.vertices, edges, name=name)


def graph_to_model(graph: MetricGraph) -> GraphFile:
    return GraphFile(
        vertices=list(graph.vertices),
        edges=[EdgeSpec(id=e.id, ends=[e.tail, e.head], length=format_rational(e.length)) for e in graph.edges],
    )


def load_graph(path: PathLike) -> MetricGraph:
    path = Path(path)
    text = _read(path)
    try:
        model = GraphFile.model_validate_json(text)
    except ValidationError as exc:
        raise _invalid(path, exc) from exc
    return graph_from_model(model, name=path.stem)


def dump_graph(graph: MetricGraph, path: PathLike) -> None:
    Path(path).write_text(graph_to_model(graph).model_dump_json(indent=2))


# ============ Divisors ============

def divisor_from_entries(graph: MetricGraph, entries: Iterable[DivisorEntry]) -> Divisor:
    coeffs: dict = {}
    for entry in entries:
        if entry.vertex is not None:
            point = graph.vertex_point(entry.vertex)
        else:
            point = graph.point(entry.edge, parse_rational(entry.offset))
        coeffs[point] = coeffs.get(point, 0) + entry.coeff
    return Divisor(graph, coeffs)


def divisor_to_entries(divisor: Divisor) -> list[DivisorEntry]:
    entries = []
    for point, coeff in divisor.items():
        if point.is_vertex:
            entries.append(DivisorEntry(vertex=point.vertex, coeff=coeff))
        else:
            entries.append(DivisorEntry(edge=point.edge, offset=format_rational(point.offset), coeff=coeff))
    return entries


def divisor_to_json(divisor: Divisor) -> list[dict]:
    return [entry.model_dump(exclude_none=True) for entry in divisor_to_entries(divisor)]


def load_divisor(graph: MetricGraph, path: PathLike) -> Divisor:
    path = Path(path)
    text = _read(path)
    try:
        entries = _entries.validate_json(text)
    except ValidationError as exc:
        raise _invalid(path, exc) from exc
    return divisor_from_entries(graph, entries)


def dump_divisor(divisor: Divisor, path: PathLike) -> None:
    Path(path).write_text(json.dumps(divisor_to_json(divisor), indent=2))
