from pydantic import BaseModel, Field, model_validator
from typing import Any, Literal, Optional, Union


# ============ File Formats ============

class EdgeSpec(BaseModel):
    id: str = Field(..., description="Unique edge identifier")
    ends: list[str] = Field(..., min_length=2, max_length=2, description="Tail and head vertex names")
    length: Union[str, int] = Field(..., description="Exact positive length as 'p/q' or an integer")


class GraphFile(BaseModel):
    """Serialized metric graph."""
    vertices: list[str] = Field(..., description="Vertex names")
    edges: list[EdgeSpec] = Field(default_factory=list, description="Edges with exact lengths")


class DivisorEntry(BaseModel):
    """One term of a divisor: a vertex, or a point on an edge at an offset from its tail."""
    vertex: Optional[str] = Field(None, description="Vertex name")
    edge: Optional[str] = Field(None, description="Edge id for an interior point")
    offset: Optional[Union[str, int]] = Field(None, description="Offset from the edge's tail as 'p/q'")
    coeff: int = Field(..., description="Integer coefficient")

    @model_validator(mode="after")
    def _one_location(self):
        if (self.vertex is None) == (self.edge is None):
            raise ValueError("Give exactly one of 'vertex' or 'edge'")
        if self.edge is not None and self.offset is None:
            raise ValueError("An edge point needs an 'offset'")
        return self


# ============ Results ============

class ClassRecord(BaseModel):
    reduced: list[DivisorEntry] = Field(..., description="Reduced representative at the canonical basepoint")
    aj: list[str] = Field(..., description="Abel-Jacobi coordinates modulo 1")


class ScanReport(BaseModel):
    r: int
    d: int
    q: int
    classes: list[ClassRecord]
    adjacency: list[tuple[int, int]] = Field(default_factory=list, description="Pairs of grid-adjacent classes")
    dim_estimate: int


class CertificateReport(BaseModel):
    r: int
    d: int
    q: int
    rho: int = Field(..., description="Brill-Noether rank at the stated resolution")
    mode: Literal["verified_at_resolution", "falsified_with_witness"]
    witness: Optional[list[DivisorEntry]] = Field(None, description="Effective divisor of degree r+rho+1 under no class")
    witness_source: Optional[Literal["hint", "distinct_points", "repeated_points", "degree_bound"]] = Field(
        None, description="Where the witness was found: a supplied hint, the lexicographic sweep over distinct or repeated lattice points, or the degree bound"
    )


class CaseReport(BaseModel):
    case: Literal[1, 2, 3]
    basepoint: str
    divisor: list[DivisorEntry]
    fired: Optional[list[DivisorEntry]] = None
    reduced: list[DivisorEntry]
    rank: int


# ============ CLI ============

Subcommand = Literal[
    "gen", "genus", "canonical", "reduce", "equiv", "rank", "arank",
    "linsys", "scan-wrd", "bn-rank", "sweep", "cross-check",
]


class Command(BaseModel):
    """A parsed command line."""
    subcommand: Subcommand
    graph: Optional[str] = Field(None, description="Path to a graph JSON file")
    divisor: Optional[str] = Field(None, description="Path to a divisor JSON file")
    d1: Optional[str] = None
    d2: Optional[str] = None
    basepoint: Optional[str] = Field(None, description="Point spec such as 'v1' or 'e3@3/2'")
    points: Optional[str] = Field(None, description="Comma separated point specs")
    r: Optional[int] = None
    d: Optional[int] = None
    q: Optional[int] = None
    family: Optional[str] = None
    g: Optional[int] = None
    lengths: Optional[str] = None
    pair_lengths: Optional[str] = None
    t: Optional[str] = None
    ts: Optional[str] = None
    budget: Optional[int] = None
    jobs: Optional[int] = None
    seed: Optional[int] = None
    trials: Optional[int] = None
    oracle: bool = False
    out: Optional[str] = None
    save: bool = Field(False, description="Also write the report under the configured report directory")
    format: Literal["json", "tsv"] = "json"
    verbose: bool = False


class Report(BaseModel):
    """Machine-readable result of one command."""
    schema_version: str
    tool_version: str
    subcommand: Subcommand
    inputs: dict[str, Any] = Field(default_factory=dict)
    result: Optional[Any] = None
    error: Optional[str] = Field(None, description="Domain error class name")
    message: Optional[str] = None
    timing_seconds: float = 0.0
