import logging
import os
from typing import Dict, List, Optional, Sequence, Tuple

import pandas as pd

logger = logging.getLogger(__name__)

Column = Tuple[str, str]


class ResultTable:
    """
    Rows of numeric records under a (name, unit) column schema, with metadata and companion tables.

    Metadata holds the config echo and the code version; `wall_time` is kept in memory only.
    """

    def __init__(self, columns: Sequence[Column], rows: Sequence[Sequence] = (), metadata: Optional[dict] = None,
                 companions: Optional[Dict[str, 'ResultTable']] = None):
        self.columns: List[Column] = [(name, unit) for name, unit in columns]
        self.rows: List[list] = []
        self.metadata = dict(metadata or {})
        self.companions: Dict[str, ResultTable] = dict(companions or {})
        self.wall_time: Optional[float] = None
        for row in rows:
            self.append(row)

    @property
    def names(self) -> List[str]:
        return [name for name, _ in self.columns]

    def append(self, row: Sequence):
        if len(row) != len(self.columns):
            raise ValueError(f"row has {len(row)} values, schema has {len(self.columns)} columns")
        self.rows.append(list(row))

    def column(self, name: str) -> list:
        index = self.names.index(name)
        return [row[index] for row in self.rows]

    def headers(self) -> List[str]:
        return [f"{name} [{unit}]" if unit else name for name, unit in self.columns]

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame(self.rows, columns=self.headers())

    def __len__(self):
        return len(self.rows)

    def __repr__(self):
        return f"ResultTable(columns={self.names}, rows={len(self.rows)}, companions={sorted(self.companions)})"

    def __eq__(self, other):
        if not isinstance(other, ResultTable):
            return False
        return (self.columns == other.columns and self.to_frame().equals(other.to_frame())
                and self.metadata == other.metadata and self.companions == other.companions)


def _write_frame(table: ResultTable, path: str, fmt: str):
    frame = table.to_frame()
    if fmt == "csv":
        frame.to_csv(path, index=False)
    elif fmt == "json":
        frame.to_json(path, orient="records")
    else:
        raise ValueError(f"unknown output format '{fmt}'")


def metadata_lines(metadata: dict) -> List[str]:
    return [f"{key}: {'' if value is None else value}" for key, value in metadata.items()]


def companion_path(out: str, name: str, fmt: str) -> str:
    stem, _ = os.path.splitext(out)
    return f"{stem}.{name}.{fmt}"


def export_result_table(table: ResultTable, out: str, fmt: str = "csv") -> List[str]:
    """
    Write the table to `out`, its metadata to `<out>.meta` and every companion to `<stem>.<name>.<fmt>`.

    Returns:
        list: written file paths
    """
    directory = os.path.dirname(out)
    if directory:
        os.makedirs(directory, exist_ok=True)
    _write_frame(table, out, fmt)
    with open(f"{out}.meta", 'w') as fd:
        fd.write("\n".join(metadata_lines(table.metadata)) + "\n")
    written = [out, f"{out}.meta"]
    for name, companion in table.companions.items():
        path = companion_path(out, name, fmt)
        _write_frame(companion, path, fmt)
        written.append(path)
    logger.info(f"Result table with {len(table)} rows exported to {out}")
    return written
