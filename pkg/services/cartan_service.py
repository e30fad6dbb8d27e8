import logging
import os
import re
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from config import TYPE_TABLE_PATH
from models.cartan import AffineCartanDatum, LatticeCorrespondence, WeightVector
from utils.errors import DatumError, ExcludedTypeError, UnknownTypeError
from utils.helpers import is_positive_root_vector, lcm_of_denominators

logger = logging.getLogger(__name__)

IOTA_SUFFIX = "^iota"
_EXCLUDED_LABEL = re.compile(r"^A(\d+)(?:\^\(2\)|~\(2\)|\(2\))$")

Record = Tuple[Tuple[Tuple[int, ...], ...], Tuple[int, ...], Tuple[int, ...]]


def parse_type_table(text: str) -> Dict[str, Record]:
    table = {}
    for line_number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = [field.strip() for field in line.split("|")]
        if len(fields) != 4:
            raise DatumError(f"type table line {line_number}: expected 4 fields, got {len(fields)}")
        label, rows, marks, comarks = fields
        try:
            matrix = tuple(tuple(int(x) for x in row.split()) for row in rows.split(";"))
            record = (matrix, tuple(int(x) for x in marks.split()), tuple(int(x) for x in comarks.split()))
        except ValueError:
            raise DatumError(f"type table line {line_number}: non-integer entry")
        table[label] = record
    return table


@lru_cache(maxsize=None)
def load_type_table(path: Optional[str] = None) -> Dict[str, Record]:
    path = path or TYPE_TABLE_PATH
    with open(path, encoding="utf-8") as handle:
        table = parse_type_table(handle.read())
    logger.debug(f"Loaded {len(table)} affine types from {os.path.basename(path)}")
    return table


def finite_roots(finite: Sequence[Sequence[int]]) -> List[Tuple[int, ...]]:
    """All roots of the finite system with Cartan matrix `finite`, by closure under simple reflections."""
    n = len(finite)
    simple = [tuple(1 if k == j else 0 for k in range(n)) for j in range(n)]
    seen = set(simple)
    frontier = list(simple)
    while frontier:
        root = frontier.pop()
        for j in range(n):
            k = sum(root[m] * finite[j][m] for m in range(n))
            if k == 0:
                continue
            image = tuple(c - k if m == j else c for m, c in enumerate(root))
            if image not in seen:
                seen.add(image)
                frontier.append(image)
    return sorted(seen, key=lambda r: (sum(r), r))


def build_datum(label: str, matrix: Sequence[Sequence[int]], marks: Sequence[int],
                comarks: Sequence[int]) -> AffineCartanDatum:
    size = len(matrix)
    n = size - 1
    a = tuple(tuple(int(x) for x in row) for row in matrix)
    marks = tuple(int(x) for x in marks)
    comarks = tuple(int(x) for x in comarks)

    if n < 1 or any(len(row) != size for row in a):
        raise DatumError(f"{label}: matrix must be square of size at least 2")
    if len(marks) != size or len(comarks) != size:
        raise DatumError(f"{label}: expected {size} marks and comarks")
    if any(a[j][j] != 2 for j in range(size)):
        raise DatumError(f"{label}: diagonal entries must be 2")
    if any(a[j][k] > 0 for j in range(size) for k in range(size) if j != k):
        raise DatumError(f"{label}: off-diagonal entries must be nonpositive")
    if any(x <= 0 for x in marks + comarks):
        raise DatumError(f"{label}: marks and comarks must be positive")
    if any(sum(a[j][k] * marks[k] for k in range(size)) for j in range(size)):
        raise DatumError(f"{label}: marks are not a null vector of the matrix")
    if any(sum(comarks[j] * a[j][k] for j in range(size)) for k in range(size)):
        raise DatumError(f"{label}: comarks are not a left null vector of the matrix")

    d = tuple(Fraction(marks[j], comarks[j]) for j in range(size))
    for j in range(size):
        for k in range(size):
            if a[j][k] / d[j] != a[k][j] / d[k]:
                raise DatumError(f"{label}: d does not symmetrize the matrix at ({j}, {k})")
    e = tuple(max(Fraction(1, marks[0]), d[j]) for j in range(size))
    if any(x.denominator != 1 for x in e):
        raise DatumError(f"{label}: e values {e} are not integral")

    gram = np.empty((size + 1, size + 1), dtype=object)
    gram[:, :] = Fraction(0)
    for j in range(n):
        for k in range(n):
            gram[j, k] = Fraction(a[j + 1][k + 1]) / d[j + 1]
    gram[n, n + 1] = gram[n + 1, n] = Fraction(1)

    finite = [row[1:] for row in a[1:]]
    all_roots = finite_roots(finite)
    roots = tuple(r for r in all_roots if is_positive_root_vector(r))

    def norm(v):
        return sum(
            (Fraction(x) * gram[j, k] * y for j, x in enumerate(v) for k, y in enumerate(v)),
            Fraction(0),
        )

    long_norm = max(norm(r) for r in roots)
    length_class = ("l",) + tuple(
        "l" if gram[j, j] == long_norm else "s" for j in range(n)
    )
    for cls in ("s", "l"):
        values = {e[j] for j in range(1, size) if length_class[j] == cls}
        if len(values) > 1:
            raise DatumError(f"{label}: e is not constant on the {cls} roots")
    short = [e[j] for j in range(1, size) if length_class[j] == "s"]
    p = int(short[0]) if short else int(e[1])
    if p not in (1, 2, 3):
        raise DatumError(f"{label}: p = {p} is outside {{1, 2, 3}}")

    theta_finite = tuple(Fraction(marks[j], marks[0]) for j in range(1, size))
    if any(x.denominator != 1 for x in theta_finite) or tuple(int(x) for x in theta_finite) not in roots:
        raise DatumError(f"{label}: delta - a_0 alpha_0 is not a finite root")
    if norm(theta_finite) != 2:
        raise DatumError(f"{label}: (theta, theta) = {norm(theta_finite)}; only untwisted data with (theta, theta) = 2 is supported")
    short_roots = [r for r in roots if norm(r) != long_norm]
    theta_s_finite = max(short_roots, key=lambda r: (sum(r), r)) if short_roots else tuple(int(x) for x in theta_finite)

    pairings = [gram[j, k] for j in range(n) for k in range(n)]
    pairings += [gram[j, k] * e[k + 1] for j in range(n) for k in range(n)]
    m = lcm_of_denominators(pairings)

    datum = AffineCartanDatum(
        label=label,
        n=n,
        a=a,
        marks=marks,
        comarks=comarks,
        d=d,
        e=e,
        p=p,
        m=m,
        theta=WeightVector.from_finite(theta_finite),
        theta_s=WeightVector.from_finite(theta_s_finite),
        gram=gram,
        length_class=length_class,
        roots=roots,
    )
    logger.debug(f"Built datum {label}: n={n}, p={p}, m={m}, |R+|={len(roots)}")
    return datum


def load_cartan_datum(label: str, table_path: Optional[str] = None) -> AffineCartanDatum:
    label = label.strip()
    excluded = _EXCLUDED_LABEL.match(label)
    if excluded and int(excluded.group(1)) % 2 == 0:
        raise ExcludedTypeError(f"{label}: type A_{{2n}}^(2) is excluded from the duality construction")
    table = load_type_table(table_path)
    if label.endswith(IOTA_SUFFIX) and label not in table:
        base = load_cartan_datum(label[: -len(IOTA_SUFFIX)], table_path)
        datum, _ = iota_datum(base, table_path)
        if datum.label != label:
            raise UnknownTypeError(f"{label}: the dual of {base.label} is {datum.label}")
        return datum
    if label not in table:
        raise UnknownTypeError(f"Unknown affine type {label!r}; known types: {', '.join(table)}")
    matrix, marks, comarks = table[label]
    return _cached_datum(label, matrix, marks, comarks)


@lru_cache(maxsize=None)
def _cached_datum(label, matrix, marks, comarks) -> AffineCartanDatum:
    return build_datum(label, matrix, marks, comarks)


def inner_product(v: WeightVector, w: WeightVector, datum: AffineCartanDatum) -> Fraction:
    return datum.inner_product(v, w)


def positive_roots(datum: AffineCartanDatum) -> List[WeightVector]:
    return [WeightVector.from_finite(r) for r in datum.roots]


def affinize(label: str, finite: Sequence[Sequence[int]]) -> AffineCartanDatum:
    """Untwisted affine extension of a finite Cartan matrix, with long roots of square length 2."""
    n = len(finite)
    lengths = [None] * n
    lengths[0] = Fraction(1)
    pending = [0]
    while pending:
        j = pending.pop()
        for k in range(n):
            if k != j and finite[j][k] != 0 and lengths[k] is None:
                lengths[k] = lengths[j] * Fraction(finite[j][k], finite[k][j])
                pending.append(k)
    if any(x is None for x in lengths):
        raise DatumError(f"{label}: finite Cartan matrix is not connected")
    scale = 2 / max(lengths)
    lengths = [x * scale for x in lengths]

    def inner(u, v):
        total = Fraction(0)
        for j in range(n):
            for k in range(n):
                if u[j] and v[k]:
                    total += u[j] * v[k] * finite[j][k] * lengths[j] / 2
        return total

    roots = [r for r in finite_roots(finite) if is_positive_root_vector(r)]
    theta = max(roots, key=lambda r: (sum(r), r))
    simple = [tuple(1 if i == k else 0 for i in range(n)) for k in range(n)]
    top = [2] + [-int(inner(theta, simple[k])) for k in range(n)]
    matrix = [top]
    for j in range(n):
        column = -int(2 * inner(simple[j], theta) / lengths[j])
        matrix.append([column] + list(finite[j]))
    marks = [1] + list(theta)
    comarks = [1] + [int(theta[k] * lengths[k] / 2) for k in range(n)]
    return build_datum(label, matrix, marks, comarks)


def _iota_finite(datum: AffineCartanDatum) -> List[List[int]]:
    e = datum.e
    rows = []
    for j in range(1, datum.n + 1):
        rows.append([int(e[k] * datum.a[j][k] / e[j]) for k in range(1, datum.n + 1)])
    return rows


def iota_label(label: str) -> str:
    if label.endswith(IOTA_SUFFIX):
        return label[: -len(IOTA_SUFFIX)]
    return label + IOTA_SUFFIX


def iota_datum(datum: AffineCartanDatum,
               table_path: Optional[str] = None) -> Tuple[AffineCartanDatum, LatticeCorrespondence]:
    candidate = affinize(iota_label(datum.label), _iota_finite(datum))
    table = load_type_table(table_path)
    target = candidate
    for label, (matrix, marks, comarks) in table.items():
        if matrix == candidate.a:
            target = _cached_datum(label, matrix, marks, comarks)
            break
    logger.debug(f"iota({datum.label}) = {target.label}")
    return target, LatticeCorrespondence(datum.label, target.label, datum.n)
