"""Reader for the diracstep CSV schema.

Files carry a column-header line, `# key=value` metadata lines (v0 is
mandatory; zone boundaries are drawn from it so figures stay self-describing)
and numeric data rows.  Validation errors always name the offending column.
"""

from dataclasses import dataclass


class SchemaError(ValueError):
    """The CSV does not match the documented schema."""


@dataclass(frozen=True)
class Table:
    path: str
    columns: list[str]
    meta: dict[str, str]
    data: dict[str, list[float]]

    @property
    def v0(self) -> float:
        try:
            return float(self.meta["v0"])
        except KeyError:
            raise SchemaError(f"{self.path}: missing '# v0=' metadata line") from None

    def column(self, name: str) -> list[float]:
        try:
            return self.data[name]
        except KeyError:
            raise SchemaError(f"{self.path}: missing required column '{name}'") from None


def read_table(path: str) -> Table:
    columns: list[str] | None = None
    meta: dict[str, str] = {}
    rows: list[list[float]] = []
    with open(path) as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.strip()
            if not line:
                continue
            if line.startswith("#"):
                key, _, value = line[1:].strip().partition("=")
                meta[key.strip()] = value.strip()
                continue
            if columns is None:
                columns = [c.strip() for c in line.split(",")]
                continue
            cells = line.split(",")
            if len(cells) != len(columns):
                raise SchemaError(f"{path}:{lineno}: expected {len(columns)} cells, got {len(cells)}")
            rows.append(cells)
    if columns is None or not rows:
        raise SchemaError(f"{path}: empty CSV (no header or no data rows)")

    data: dict[str, list[float]] = {name: [] for name in columns}
    for cells in rows:
        for name, cell in zip(columns, cells):
            try:
                data[name].append(float(cell))
            except ValueError:
                data[name].append(float("nan"))  # non-numeric columns (zone labels)
    return Table(path=path, columns=columns, meta=meta, data=data)


def require_columns(table: Table, names: list[str]) -> None:
    for name in names:
        if name not in table.columns:
            raise SchemaError(f"{table.path}: missing required column '{name}'")
