"""Text file formats: matrices, permutation groups, partitions, code JSON.

Matrix files carry a header line "kind rows cols [modulus]" with kind one of
int, pm1, zpm1, fq, followed by whitespace-separated integer rows.  Blank
lines and '#' comments are ignored everywhere.  Group and partition files
use 1-based indices; everything in memory is 0-based.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from .errors import FileFormatError
from .gf import field_from_order, field_new
from .linalg import as_int_matrix
from .schemes import EquitablePartition
from .subspaces import Subspace

_KINDS = ("int", "pm1", "zpm1", "fq")


def _content_lines(text):
    out = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            out.append(line)
    return out


@dataclass(frozen=True)
class MatrixData:
    kind: str
    matrix: np.ndarray
    modulus: int | None = None


def parse_matrix_text(text):
    lines = _content_lines(text)
    if not lines:
        raise FileFormatError("empty matrix file")
    head = lines[0].split()
    if len(head) not in (3, 4) or head[0] not in _KINDS:
        raise FileFormatError(
            f"bad header {lines[0]!r}: expected 'kind rows cols [modulus]'")
    kind = head[0]
    try:
        rows, cols = int(head[1]), int(head[2])
        modulus = int(head[3]) if len(head) == 4 else None
    except ValueError:
        raise FileFormatError(f"non-integer header fields in {lines[0]!r}")
    if kind == "fq" and modulus is None:
        raise FileFormatError("kind fq requires a modulus in the header")
    if len(lines) - 1 != rows:
        raise FileFormatError(f"expected {rows} rows, found {len(lines) - 1}")
    data = []
    for ln in lines[1:]:
        try:
            row = [int(v) for v in ln.split()]
        except ValueError:
            raise FileFormatError(f"non-integer entry in row {ln!r}")
        if len(row) != cols:
            raise FileFormatError(f"expected {cols} columns, row has {len(row)}")
        data.append(row)
    M = np.array(data, dtype=np.int64).reshape(rows, cols)
    if kind == "pm1" and not ((M == 1) | (M == -1)).all():
        raise FileFormatError("pm1 entries must be +-1")
    if kind == "zpm1" and not ((M >= -1) & (M <= 1)).all():
        raise FileFormatError("zpm1 entries must be in {-1,0,1}")
    if kind == "fq" and ((M < 0) | (M >= modulus)).any():
        raise FileFormatError(f"fq entries must lie in [0, {modulus})")
    return MatrixData(kind, M, modulus)


def read_matrix(path):
    with open(path, encoding="utf-8") as fh:
        return parse_matrix_text(fh.read())


def format_matrix_text(matrix, kind, modulus=None, comment=None):
    M = as_int_matrix(matrix)
    if kind not in _KINDS:
        raise FileFormatError(f"unknown kind {kind!r}")
    head = f"{kind} {M.shape[0]} {M.shape[1]}"
    if kind == "fq":
        if modulus is None:
            raise FileFormatError("kind fq requires a modulus")
        head += f" {modulus}"
    lines = []
    if comment:
        lines.append(f"# {comment}")
    lines.append(head)
    for row in M:
        lines.append(" ".join(str(int(v)) for v in row))
    return "\n".join(lines) + "\n"


def write_matrix(path, matrix, kind, modulus=None, comment=None):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_matrix_text(matrix, kind, modulus, comment))
    return path


def parse_group_text(text):
    """One generator per line: the images g(1) ... g(n), 1-based."""
    from .drg import PermutationGroup

    lines = _content_lines(text)
    if not lines:
        raise FileFormatError("empty group file")
    gens = []
    degree = None
    for ln in lines:
        try:
            images = [int(v) for v in ln.split()]
        except ValueError:
            raise FileFormatError(f"non-integer image in {ln!r}")
        if degree is None:
            degree = len(images)
        elif len(images) != degree:
            raise FileFormatError("generators have different lengths")
        if sorted(images) != list(range(1, degree + 1)):
            raise FileFormatError(f"line {ln!r} is not a permutation of 1..{degree}")
        gens.append([v - 1 for v in images])
    return PermutationGroup(degree, gens)


def read_group(path):
    with open(path, encoding="utf-8") as fh:
        return parse_group_text(fh.read())


def parse_partition_text(text, size=None):
    """One cell per line, 1-based indices; cells must cover 1..n exactly."""
    lines = _content_lines(text)
    if not lines:
        raise FileFormatError("empty partition file")
    cells = []
    for ln in lines:
        try:
            cells.append([int(v) - 1 for v in ln.split()])
        except ValueError:
            raise FileFormatError(f"non-integer index in {ln!r}")
    if size is None:
        size = max(max(c) for c in cells) + 1
    return EquitablePartition(cells, size)


def read_partition(path, size=None):
    with open(path, encoding="utf-8") as fh:
        return parse_partition_text(fh.read(), size)


def parse_graph_text(text):
    """Dense matrix file with an int header, or an edge list of 1-based pairs."""
    from .drg import Graph

    lines = _content_lines(text)
    if not lines:
        raise FileFormatError("empty graph file")
    if lines[0].split()[0] in _KINDS:
        return Graph(parse_matrix_text(text).matrix)
    edges = []
    top = 0
    for ln in lines:
        parts = ln.split()
        if len(parts) != 2:
            raise FileFormatError(f"edge line {ln!r} needs exactly two vertices")
        try:
            u, v = int(parts[0]) - 1, int(parts[1]) - 1
        except ValueError:
            raise FileFormatError(f"non-integer vertex in {ln!r}")
        if u < 0 or v < 0:
            raise FileFormatError("vertices are 1-based")
        edges.append((u, v))
        top = max(top, u + 1, v + 1)
    A = np.zeros((top, top), dtype=np.int64)
    for u, v in edges:
        A[u, v] = A[v, u] = 1
    return Graph(A)


def read_graph(path):
    with open(path, encoding="utf-8") as fh:
        return parse_graph_text(fh.read())


def code_to_doc(code):
    """JSON-ready description of a subspace code: field, ambient, rref rows."""
    f = code.field
    return {
        "field": {"p": f.p, "r": f.r},
        "ambient": code.n,
        "codewords": [[[int(v) for v in row] for row in w.basis] for w in code],
    }


def code_from_doc(doc):
    from .codes import SubspaceCode

    try:
        p, r = int(doc["field"]["p"]), int(doc["field"]["r"])
        n = int(doc["ambient"]) if "ambient" in doc else int(doc["params"]["n"])
        words = doc["codewords"]
    except (KeyError, TypeError, ValueError):
        raise FileFormatError("code document needs field{p,r}, ambient, codewords")
    f = field_new(p, r)
    subs = []
    for rows in words:
        M = np.array(rows, dtype=np.int64).reshape(len(rows), n)
        subs.append(Subspace(f, n, M))
    return SubspaceCode(subs)


def read_code_json(path):
    with open(path, encoding="utf-8") as fh:
        return code_from_doc(json.load(fh))


def write_json(path, doc):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(doc))
    return path


def dumps(doc):
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def matrix_over_field(data, field=None):
    """Interpret MatrixData over a finite field, reducing int matrices mod p."""
    if data.kind == "fq":
        f = field_from_order(data.modulus)
        if field is not None and f != field:
            raise FileFormatError(
                f"file modulus {data.modulus} does not match field of order {field.q}")
        return f, data.matrix
    if field is None:
        raise FileFormatError("a field is required to interpret this matrix")
    return field, data.matrix % field.p
