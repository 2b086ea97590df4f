"""Article-level citation graphs and their journal-level aggregation.

A `CitationGraph` holds a directed citation multigraph over articles plus a
total article -> journal assignment. Aggregating it collapses every
citation onto the journal pair of its endpoints, producing an immutable
`JournalGraph` whose integer edge weights are citation multiplicities.
"""

from __future__ import annotations

import enum
from array import array
from collections import Counter
from types import MappingProxyType
from typing import Iterable, Iterator, Mapping

import numpy as np

from . import _kernels
from .errors import (
    ConflictingMembership,
    InvalidIdentifier,
    SelfCitation,
    UnknownArticle,
    UnknownJournal,
)


class SelfLoopPolicy(enum.Enum):
    """What aggregation does with intra-journal citations."""

    KEEP = "keep"
    DROP = "drop"


def _clean_id(value: str, kind: str) -> str:
    if not isinstance(value, str):
        raise InvalidIdentifier(f"{kind} identifier must be a string, got {type(value).__name__}")
    cleaned = value.strip()
    if not cleaned:
        raise InvalidIdentifier(f"{kind} identifier is empty")
    return cleaned


class CitationGraph:
    """Directed citation multigraph plus an article -> journal partition.

    Construction is single-writer: build the graph with `add_journal`,
    `add_article` and `add_citation`, then treat it as a read-only value.
    Identifiers are surrounding-whitespace trimmed; the same (citing,
    cited) pair may be added repeatedly and accumulates multiplicity.

    Articles and journals are interned to dense integer ids internally so
    that aggregation runs on flat arrays.
    """

    __slots__ = (
        "_journal_index",
        "_journal_names",
        "_article_index",
        "_article_names",
        "_article_journal",
        "_citing",
        "_cited",
        "_mult",
    )

    def __init__(self) -> None:
        self._journal_index: dict[str, int] = {}
        self._journal_names: list[str] = []
        self._article_index: dict[str, int] = {}
        self._article_names: list[str] = []
        self._article_journal = array("q")  # article id -> journal id
        self._citing = array("q")           # one entry per citation
        self._cited = array("q")
        self._mult = array("q")

    @classmethod
    def from_pairs(
        cls,
        memberships: Iterable[tuple[str, str]],
        citations: Iterable[tuple[str, str]] = (),
    ) -> "CitationGraph":
        """Build a graph from (article, journal) and (citing, cited) pairs."""
        g = cls()
        for article, journal in memberships:
            g.add_article(article, journal)
        for citing, cited in citations:
            g.add_citation(citing, cited)
        return g

    # -- construction ------------------------------------------------------

    def add_journal(self, journal: str) -> None:
        """Declare a journal; journals may exist with zero articles."""
        self._intern_journal(_clean_id(journal, "journal"))

    def add_article(self, article: str, journal: str) -> None:
        """Assign an article to a journal.

        Re-adding the same assignment is a no-op; assigning an article to a
        second journal raises ConflictingMembership.
        """
        article = _clean_id(article, "article")
        journal = _clean_id(journal, "journal")
        jid = self._intern_journal(journal)
        aid = self._article_index.get(article)
        if aid is not None:
            if self._article_journal[aid] != jid:
                raise ConflictingMembership(
                    article, self._journal_names[self._article_journal[aid]], journal
                )
            return
        self._article_index[article] = len(self._article_names)
        self._article_names.append(article)
        self._article_journal.append(jid)

    def add_citation(self, citing: str, cited: str) -> None:
        """Record one citation from `citing` to `cited` (multiplicity +1)."""
        citing = _clean_id(citing, "article")
        cited = _clean_id(cited, "article")
        if citing == cited:
            raise SelfCitation(citing)
        try:
            cid = self._article_index[citing]
        except KeyError:
            raise UnknownArticle(citing) from None
        try:
            did = self._article_index[cited]
        except KeyError:
            raise UnknownArticle(cited) from None
        self._citing.append(cid)
        self._cited.append(did)
        self._mult.append(1)

    def _intern_journal(self, journal: str) -> int:
        jid = self._journal_index.get(journal)
        if jid is None:
            jid = len(self._journal_names)
            self._journal_index[journal] = jid
            self._journal_names.append(journal)
        return jid

    def _extend_citations_by_id(self, citing_ids, cited_ids, mult) -> None:
        # Internal bulk append; callers guarantee valid ids and no self
        # citations. Used by synth for large graphs.
        self._citing.frombytes(np.ascontiguousarray(citing_ids, dtype=np.int64).tobytes())
        self._cited.frombytes(np.ascontiguousarray(cited_ids, dtype=np.int64).tobytes())
        self._mult.frombytes(np.ascontiguousarray(mult, dtype=np.int64).tobytes())

    def _citation_arrays(self):
        citing = np.frombuffer(self._citing, dtype=np.int64) if self._citing else np.empty(0, np.int64)
        cited = np.frombuffer(self._cited, dtype=np.int64) if self._cited else np.empty(0, np.int64)
        mult = np.frombuffer(self._mult, dtype=np.int64) if self._mult else np.empty(0, np.int64)
        return citing, cited, mult

    # -- queries -----------------------------------------------------------

    @property
    def journals(self) -> frozenset[str]:
        return frozenset(self._journal_names)

    @property
    def n_journals(self) -> int:
        return len(self._journal_names)

    @property
    def n_articles(self) -> int:
        return len(self._article_names)

    @property
    def total_citations(self) -> int:
        """Total citation multiplicity."""
        return sum(self._mult)

    def has_article(self, article: str) -> bool:
        return article in self._article_index

    def journal_of(self, article: str) -> str:
        try:
            aid = self._article_index[article]
        except KeyError:
            raise UnknownArticle(article) from None
        return self._journal_names[self._article_journal[aid]]

    def membership(self) -> dict[str, str]:
        """Snapshot of the article -> journal map."""
        return {
            name: self._journal_names[jid]
            for name, jid in zip(self._article_names, self._article_journal)
        }

    def articles_of(self, journal: str) -> list[str]:
        """Articles assigned to `journal`, in insertion order."""
        try:
            jid = self._journal_index[journal]
        except KeyError:
            raise UnknownJournal(journal) from None
        return [
            name
            for name, j in zip(self._article_names, self._article_journal)
            if j == jid
        ]

    def citation_multiset(self) -> Counter:
        """Citations as a Counter of (citing, cited) -> multiplicity."""
        out: Counter = Counter()
        names = self._article_names
        for cid, did, m in zip(self._citing, self._cited, self._mult):
            out[(names[cid], names[did])] += m
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, CitationGraph):
            return NotImplemented
        return (
            self.journals == other.journals
            and self.membership() == other.membership()
            and self.citation_multiset() == other.citation_multiset()
        )

    __hash__ = None  # mutable during construction

    def __repr__(self) -> str:
        return (
            f"CitationGraph(journals={self.n_journals}, articles={self.n_articles}, "
            f"citations={self.total_citations})"
        )

    # -- aggregation -------------------------------------------------------

    def aggregate(self, policy: SelfLoopPolicy = SelfLoopPolicy.DROP) -> "JournalGraph":
        """Collapse citations onto journal pairs.

        Edge weight (s, t) is the total multiplicity of citations whose
        citing article belongs to s and whose cited article belongs to t.
        Intra-journal citations become self-loop weight under
        SelfLoopPolicy.KEEP and are discarded under DROP.
        """
        order = tuple(sorted(self._journal_names))
        n = len(order)
        rank = {name: i for i, name in enumerate(order)}
        perm = np.fromiter(
            (rank[name] for name in self._journal_names), dtype=np.int64, count=n
        )
        art_journal = (
            np.frombuffer(self._article_journal, dtype=np.int64)
            if self._article_journal
            else np.empty(0, np.int64)
        )
        art_rank = perm[art_journal] if n else art_journal
        counts = np.bincount(art_rank, minlength=n).astype(np.int64)

        citing, cited, mult = self._citation_arrays()
        if citing.size:
            src, dst, w = _kernels.count_pairs(
                art_rank[citing],
                art_rank[cited],
                mult,
                n,
                policy is SelfLoopPolicy.DROP,
            )
        else:
            src = dst = w = np.empty(0, np.int64)
        return JournalGraph._from_arrays(order, counts, src, dst, w)


class JournalGraph:
    """Weighted directed graph over journals; immutable once built.

    Journals are kept in canonical lexicographic order, edges sorted by
    (source, target); weights are positive integers and zero-weight pairs
    are never stored.
    """

    __slots__ = ("_journals", "_jindex", "_counts", "_count_map",
                 "_src", "_dst", "_w", "_keys", "_out", "_in")

    def __init__(self, *args, **kwargs):
        raise TypeError(
            "use JournalGraph.from_edges or CitationGraph.aggregate"
        )

    @classmethod
    def _from_arrays(cls, journals, counts, src, dst, w) -> "JournalGraph":
        self = object.__new__(cls)
        n = len(journals)
        self._journals = tuple(journals)
        self._jindex = {name: i for i, name in enumerate(self._journals)}
        self._counts = np.ascontiguousarray(counts, dtype=np.int64)
        self._src = np.ascontiguousarray(src, dtype=np.int64)
        self._dst = np.ascontiguousarray(dst, dtype=np.int64)
        self._w = np.ascontiguousarray(w, dtype=np.int64)
        self._keys = self._src * max(n, 1) + self._dst
        self._out = np.zeros(n, dtype=np.int64)
        self._in = np.zeros(n, dtype=np.int64)
        np.add.at(self._out, self._src, self._w)
        np.add.at(self._in, self._dst, self._w)
        for arr in (self._counts, self._src, self._dst, self._w, self._keys,
                    self._out, self._in):
            arr.setflags(write=False)
        self._count_map = MappingProxyType(
            {name: int(c) for name, c in zip(self._journals, self._counts)}
        )
        return self

    @classmethod
    def from_edges(
        cls,
        edges: Iterable[tuple[str, str, int]],
        journals: Iterable[str] = (),
        article_count: Mapping[str, int] | None = None,
    ) -> "JournalGraph":
        """Build from (source, target, weight) triples.

        Duplicate pairs are summed. `journals` may declare extra journals
        beyond the edge endpoints; `article_count` defaults every journal
        to zero articles.
        """
        totals: dict[tuple[str, str], int] = {}
        names = set(journals)
        for s, t, w in edges:
            s = _clean_id(s, "journal")
            t = _clean_id(t, "journal")
            w = int(w)
            if w < 1:
                raise ValueError(f"edge weight must be >= 1, got {w} for ({s}, {t})")
            names.add(s)
            names.add(t)
            totals[(s, t)] = totals.get((s, t), 0) + w
        counts = dict(article_count or {})
        names.update(counts)
        order = tuple(sorted(names))
        rank = {name: i for i, name in enumerate(order)}
        count_arr = np.zeros(len(order), dtype=np.int64)
        for name, c in counts.items():
            if c < 0:
                raise ValueError(f"article count must be >= 0, got {c} for {name!r}")
            count_arr[rank[name]] = c
        items = sorted(totals.items())
        src = np.fromiter((rank[s] for (s, _t), _w in items), dtype=np.int64, count=len(items))
        dst = np.fromiter((rank[t] for (_s, t), _w in items), dtype=np.int64, count=len(items))
        w = np.fromiter((wt for _pair, wt in items), dtype=np.int64, count=len(items))
        return cls._from_arrays(order, count_arr, src, dst, w)

    # -- queries -----------------------------------------------------------

    @property
    def journals(self) -> tuple[str, ...]:
        """Journals in canonical lexicographic order."""
        return self._journals

    @property
    def article_count(self) -> Mapping[str, int]:
        return self._count_map

    @property
    def n_journals(self) -> int:
        return len(self._journals)

    @property
    def n_edges(self) -> int:
        return int(self._w.size)

    @property
    def total_weight(self) -> int:
        return int(self._w.sum())

    def _index_of(self, journal: str) -> int:
        try:
            return self._jindex[journal]
        except KeyError:
            raise UnknownJournal(journal) from None

    def weight(self, source: str, target: str) -> int:
        """Stored weight of (source, target); 0 if the pair is absent."""
        key = self._index_of(source) * max(self.n_journals, 1) + self._index_of(target)
        pos = int(np.searchsorted(self._keys, key))
        if pos < self._keys.size and self._keys[pos] == key:
            return int(self._w[pos])
        return 0

    def weights(self) -> dict[tuple[str, str], int]:
        """Snapshot of the full weight map."""
        return {
            (self._journals[s], self._journals[t]): int(w)
            for s, t, w in zip(self._src, self._dst, self._w)
        }

    def edges(self) -> Iterator[tuple[str, str, int]]:
        """Edges as (source, target, weight), sorted by (source, target)."""
        for s, t, w in zip(self._src, self._dst, self._w):
            yield self._journals[s], self._journals[t], int(w)

    def out_weight(self, journal: str) -> int:
        """Total weight of edges leaving `journal`."""
        return int(self._out[self._index_of(journal)])

    def in_weight(self, journal: str) -> int:
        """Total weight of edges entering `journal`."""
        return int(self._in[self._index_of(journal)])

    def without_self_loops(self) -> "JournalGraph":
        """Copy with (j, j) entries removed; journals and counts unchanged."""
        keep = self._src != self._dst
        if keep.all():
            return self
        return JournalGraph._from_arrays(
            self._journals, self._counts,
            self._src[keep], self._dst[keep], self._w[keep],
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, JournalGraph):
            return NotImplemented
        return (
            self._journals == other._journals
            and np.array_equal(self._counts, other._counts)
            and np.array_equal(self._src, other._src)
            and np.array_equal(self._dst, other._dst)
            and np.array_equal(self._w, other._w)
        )

    __hash__ = None

    def __repr__(self) -> str:
        return (
            f"JournalGraph(journals={self.n_journals}, edges={self.n_edges}, "
            f"total_weight={self.total_weight})"
        )
