"""Census datasets: spectator number and floor for every connected graph up to N vertices.

Store format (UTF-8, one record per line, tab separated)::

    #specfloor-catalog v1	encoding	n	e	uspc	uspcf	minimal
    Bw	3	2	0	0	0

``encoding`` is graph6 for simple graphs and sparse6 otherwise; ``minimal``
is 1 or 0.  Record order is (n, e, canonical key).
"""

from __future__ import annotations

import logging
import warnings
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, replace
from pathlib import Path
from typing import Iterable, Iterator

from . import census
from .floor import FloorMemo, spectator_floor, spectator_floor_bruteforce
from .graph import MultiGraph, SizeGuardError, is_connected
from .io import decode, encode, read_graphs
from .minimality import is_minor_minimal
from .parade import spectator_number

log = logging.getLogger(__name__)

HEADER = "#specfloor-catalog v1\tencoding\tn\te\tuspc\tuspcf\tminimal"
MAX_N_GUARD = {"simple": 9, "multi": 6}


@dataclass(frozen=True)
class CatalogRecord:
    key: str
    n: int
    e: int
    uspc: int
    uspcf: int
    minimal: bool
    encoding: str

    def graph(self) -> MultiGraph:
        return decode(self.encoding)

    def to_line(self) -> str:
        return f"{self.encoding}\t{self.n}\t{self.e}\t{self.uspc}\t{self.uspcf}\t{int(self.minimal)}"

    @classmethod
    def from_line(cls, line: str) -> "CatalogRecord":
        enc, n, e, uspc, uspcf, minimal = line.rstrip("\n").split("\t")
        g = decode(enc)
        return cls(g.key.hex(), int(n), int(e), int(uspc), int(uspcf), minimal == "1", enc)


class CatalogWarning(UserWarning):
    pass


def _source_graphs(source: str, max_n: int, mode: str) -> list[MultiGraph]:
    if source == "gen":
        return list(census.graphs_up_to(max_n, mode))
    path = source[5:] if source.startswith("file:") else source
    seen: set[bytes] = set()
    out = []
    for g in read_graphs(Path(path).read_text(encoding="utf-8"), "auto"):
        if g.n > max_n:
            continue
        if mode == "simple" and not g.is_simple:
            warnings.warn(f"skipping non-simple graph in simple mode: {g}", CatalogWarning)
            continue
        if not is_connected(g):
            warnings.warn(f"skipping disconnected graph {encode(g)}", CatalogWarning)
            continue
        if g.key in seen:
            warnings.warn(f"skipping duplicate isomorphism class {encode(g)}", CatalogWarning)
            continue
        seen.add(g.key)
        out.append(g)
    return out


def _floor_job(args: tuple[str, bool]) -> tuple[int, int]:
    enc, faithful = args
    g = decode(enc)
    f = spectator_floor_bruteforce(g) if faithful else spectator_floor(g).uspcf
    return spectator_number(g), f


def build_catalog(
    source: str = "gen",
    max_n: int = 6,
    mode: str = "simple",
    *,
    faithful: bool = False,
    jobs: int = 1,
    force: bool = False,
    memo: FloorMemo | None = None,
) -> list[CatalogRecord]:
    """One record per isomorphism class of connected graphs with at most ``max_n`` vertices.

    ``faithful`` replaces the pruned floor search with the exhaustive
    supergraph sweep.  ``source`` is ``"gen"`` or ``"file:<path>"`` to a
    graph6/sparse6 stream.
    """
    if mode not in MAX_N_GUARD:
        raise ValueError("mode must be 'simple' or 'multi'")
    if max_n > MAX_N_GUARD[mode] and not force:
        raise SizeGuardError("catalog-max-n", f"max_n={max_n} > {MAX_N_GUARD[mode]} in {mode} mode")
    graphs = _source_graphs(source, max_n, mode)
    # sparse to dense, then normalised below
    graphs.sort(key=lambda g: (g.n, g.num_edges, g.key))
    encs = [encode(g) for g in graphs]
    work = [(e, faithful) for e in encs]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            values = list(pool.map(_floor_job, work, chunksize=16))
    else:
        values = [_floor_job(w) for w in work]
    records = [
        CatalogRecord(g.key.hex(), g.n, g.num_edges, uspc, uspcf, False, enc)
        for g, enc, (uspc, uspcf) in zip(graphs, encs, values)
    ]
    log.info("computed %d records", len(records))
    return mark_minimal(records, mode, memo)


def mark_minimal(records: list[CatalogRecord], mode: str = "simple", memo: FloorMemo | None = None):
    """Set ``minimal`` from elementary-minor floors; stored records answer lookups first."""
    memo = memo if memo is not None else FloorMemo()
    for r in records:
        memo.table.setdefault(bytes.fromhex(r.key), r.uspcf)
    simple_mode = mode == "simple"
    return [
        replace(r, minimal=bool(is_minor_minimal(r.graph(), simple_mode, memo))) for r in records
    ]


def write_catalog(records: Iterable[CatalogRecord], path: str | Path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(HEADER + "\n")
        for r in records:
            fh.write(r.to_line() + "\n")


def format_catalog(records: Iterable[CatalogRecord]) -> str:
    return "".join([HEADER + "\n"] + [r.to_line() + "\n" for r in records])


def read_catalog(path: str | Path) -> Iterator[CatalogRecord]:
    with open(path, encoding="utf-8") as fh:
        first = fh.readline()
        if not first.startswith("#specfloor-catalog v1"):
            raise ValueError(f"{path}: not a specfloor catalog (bad header)")
        for line in fh:
            if line.strip():
                yield CatalogRecord.from_line(line)


def query_catalog(
    store: str | Path,
    *,
    n: int | None = None,
    max_n: int | None = None,
    uspcf: int | None = None,
    minimal: bool | None = None,
    key: str | bytes | None = None,
) -> list[CatalogRecord]:
    """Filter a stored catalog, preserving stored order.  Missing store raises OSError."""
    if isinstance(key, bytes):
        key = key.hex()
    out = []
    for r in read_catalog(store):
        if n is not None and r.n != n:
            continue
        if max_n is not None and r.n > max_n:
            continue
        if uspcf is not None and r.uspcf != uspcf:
            continue
        if minimal is not None and r.minimal != minimal:
            continue
        if key is not None and r.key != key:
            continue
        out.append(r)
    return out
