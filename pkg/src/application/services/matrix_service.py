"""
Matrix Service - parse, serialize and preprocess character matrices
"""
from typing import Iterable, List, Optional, Sequence, TextIO, Tuple, Union

import numpy as np

from src.config.constants import (
    ACTIVE_DIRECTIVE,
    AUTO_CHARACTER_PREFIX,
    AUTO_SPECIES_PREFIX,
    COMMENT_PREFIX,
)
from src.domain.entities.binary_matrix import BinaryMatrix, PreprocessReport
from src.error_trace.exceptions import MatrixParseError, MatrixValidationError, UnknownVertexError
from src.utilities.helpers import is_binary_token
from src.utilities.logger import get_logger

logger = get_logger(__name__)


def _column_of(raw: str, token_index: int) -> int:
    """1-based text column of the token_index-th whitespace-separated token"""
    position = 0
    for i, token in enumerate(raw.split()):
        position = raw.index(token, position)
        if i == token_index:
            return position + 1
        position += len(token)
    return len(raw) + 1


def parse_matrix(
    source: Union[str, TextIO],
    strict_names: bool = False,
    active: Optional[Iterable[str]] = None,
) -> BinaryMatrix:
    """
    Parse the text matrix format

    Layout: an optional `#active: a,b` directive, an optional header of
    character names, then one `<species> <0/1 cells...>` line per species.
    Missing names are generated as s1..sn and c1..cm unless strict_names is set.

    Args:
        source: Text or a readable stream
        strict_names: Require a header and a name on every row
        active: Active character names overriding the directive

    Returns:
        Parsed matrix

    Raises:
        MatrixParseError: On any format violation, naming line and column
    """
    text = source if isinstance(source, str) else source.read()

    directive: Optional[Tuple[int, List[str]]] = None
    header: Optional[Tuple[int, List[str]]] = None
    rows: List[Tuple[int, str, Optional[str], List[str]]] = []

    for line_no, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped:
            continue
        if stripped.lower().startswith(ACTIVE_DIRECTIVE):
            if header is not None or rows or directive is not None:
                raise MatrixParseError("active directive must precede the header and rows", line_no, 1)
            names = [n.strip() for n in stripped[len(ACTIVE_DIRECTIVE):].split(",") if n.strip()]
            directive = (line_no, names)
            continue
        if stripped.startswith(COMMENT_PREFIX):
            continue

        tokens = stripped.split()
        if header is None and not rows and (strict_names or not any(is_binary_token(t) for t in tokens)):
            header = (line_no, tokens)
            continue

        if strict_names or not is_binary_token(tokens[0]):
            name, cells = tokens[0], tokens[1:]
            first_cell = 1
        else:
            name, cells = None, tokens
            first_cell = 0
        for k, token in enumerate(cells):
            if not is_binary_token(token):
                raise MatrixParseError(
                    f"non-binary cell '{token}'", line_no, _column_of(raw, first_cell + k)
                )
        rows.append((line_no, raw, name, cells))

    if not rows:
        raise MatrixParseError("no rows")

    m = len(header[1]) if header else len(rows[0][3])
    for line_no, raw, _, cells in rows:
        if len(cells) != m:
            raise MatrixParseError(
                f"row has {len(cells)} cells, expected {m}", line_no, _column_of(raw, 0)
            )

    named = [name is not None for _, _, name, _ in rows]
    if any(named) and not all(named):
        line_no = rows[named.index(not named[0])][0]
        raise MatrixParseError("either every row or no row must start with a species name", line_no, 1)
    if strict_names and header is None:
        raise MatrixParseError("strict names: a header line of character names is required", rows[0][0], 1)

    if header is not None:
        character_names = tuple(header[1])
        seen = set()
        for k, name in enumerate(character_names):
            if name in seen:
                raise MatrixParseError(
                    f"duplicate character name '{name}'", header[0], _column_of(text.splitlines()[header[0] - 1], k)
                )
            seen.add(name)
    else:
        character_names = tuple(f"{AUTO_CHARACTER_PREFIX}{j + 1}" for j in range(m))

    if all(named):
        species_names = tuple(name for _, _, name, _ in rows)
        seen = set()
        for line_no, _, name, _ in rows:
            if name in seen:
                raise MatrixParseError(f"duplicate species name '{name}'", line_no, 1)
            seen.add(name)
    else:
        species_names = tuple(f"{AUTO_SPECIES_PREFIX}{i + 1}" for i in range(len(rows)))

    cells = np.array([[int(t) for t in cells] for _, _, _, cells in rows], dtype=np.uint8).reshape(len(rows), m)

    requested = list(active) if active is not None else (directive[1] if directive else [])
    try:
        matrix = BinaryMatrix(species_names, character_names, cells).with_active(requested)
    except UnknownVertexError as e:
        line = directive[0] if (directive and active is None) else None
        raise MatrixParseError(f"active directive names {e.details['key']}, which is not a character", line)
    except MatrixValidationError as e:
        raise MatrixParseError(e.message)

    logger.debug(f"Parsed {matrix.n_species}x{matrix.n_characters} matrix, active={sorted(requested)}")
    return matrix


def serialize_matrix(matrix: BinaryMatrix) -> str:
    """Write a matrix in the format read by parse_matrix (directive, header, named rows)"""
    lines = []
    if matrix.active:
        names = ",".join(matrix.character_names[c] for c in sorted(matrix.active))
        lines.append(f"{ACTIVE_DIRECTIVE} {names}")
    lines.append(" ".join(matrix.character_names))
    for i, name in enumerate(matrix.species_names):
        lines.append(" ".join([name] + [str(int(v)) for v in matrix.cells[i]]))
    return "\n".join(lines) + "\n"


def preprocess(matrix: BinaryMatrix) -> Tuple[BinaryMatrix, PreprocessReport]:
    """
    Remove null characters and null species, then merge duplicate columns

    A null character is isolated in the red-black graph: an inactive all-zero
    column or an active all-one column. A null species is isolated as well:
    its row equals the root state. Identical columns merge into the first one
    only when both have the same activity. Universal and free characters are
    left for the reduction.

    Args:
        matrix: Parsed matrix

    Returns:
        The reduced matrix and a report of what was removed or merged
    """
    report = PreprocessReport()
    cells = matrix.cells

    keep_characters: List[int] = []
    for c in range(matrix.n_characters):
        column = cells[:, c]
        null = bool(np.all(column == 1)) if c in matrix.active else not column.any()
        if null and matrix.n_species:
            report.removed_null_characters.append(matrix.character_names[c])
        else:
            keep_characters.append(c)

    root = matrix.root_state[keep_characters]
    keep_species: List[int] = []
    for s in range(matrix.n_species):
        if keep_characters and not np.array_equal(cells[s, keep_characters], root):
            keep_species.append(s)
        else:
            report.removed_null_species.append(matrix.species_names[s])

    aliases = {c: list(matrix.aliases.get(c, ())) for c in keep_characters}
    unique: List[int] = []
    seen = {}
    for c in keep_characters:
        key = (c in matrix.active, cells[keep_species, c].tobytes())
        if key in seen:
            kept = seen[key]
            report.merged_duplicate_columns.append((matrix.character_names[kept], matrix.character_names[c]))
            aliases[kept].extend([matrix.character_names[c], *aliases[c]])
        else:
            seen[key] = c
            unique.append(c)

    if not keep_species:
        unique = []
    result = matrix.submatrix(keep_species, unique)
    position = {c: j for j, c in enumerate(unique)}
    result = BinaryMatrix(
        result.species_names,
        result.character_names,
        result.cells,
        result.active,
        {position[c]: tuple(names) for c, names in aliases.items() if c in position and names},
    )

    if not report.is_empty:
        logger.info(
            f"Preprocessing removed {len(report.removed_null_characters)} characters, "
            f"{len(report.removed_null_species)} species; merged {len(report.merged_duplicate_columns)} columns"
        )
    return result, report
