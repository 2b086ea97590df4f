"""Exception types raised by the citerank library."""

from __future__ import annotations


class CiterankError(Exception):
    """Base class for all citerank errors."""


class InvalidIdentifier(CiterankError):
    """An article or journal identifier is empty after trimming."""


class ConflictingMembership(CiterankError):
    """An article was assigned to two different journals."""

    def __init__(self, article, existing, proposed):
        self.article = article
        self.existing = existing
        self.proposed = proposed
        super().__init__(
            f"article {article!r} already belongs to journal {existing!r}, "
            f"cannot reassign to {proposed!r}"
        )


class SelfCitation(CiterankError):
    """A citation's citing and cited article are the same."""

    def __init__(self, article):
        self.article = article
        super().__init__(f"article {article!r} cites itself")


class UnknownArticle(CiterankError):
    """A citation endpoint has no journal membership."""

    def __init__(self, article):
        self.article = article
        super().__init__(f"article {article!r} has no journal membership")


class UnknownJournal(CiterankError):
    """A journal identifier is not part of the graph."""

    def __init__(self, journal):
        self.journal = journal
        super().__init__(f"unknown journal {journal!r}")


class EmptyJournal(CiterankError):
    """A per-article quantity was requested for a journal with no articles."""

    def __init__(self, journal):
        self.journal = journal
        super().__init__(f"journal {journal!r} has no articles")


class DanglingJournal(CiterankError):
    """One or more journals have no outgoing citations."""

    def __init__(self, journals):
        self.journals = tuple(journals)
        names = ", ".join(repr(j) for j in self.journals)
        super().__init__(f"journal(s) with no outgoing citations: {names}")


class NotStronglyConnected(CiterankError):
    """The journal graph splits into more than one strongly connected component."""

    def __init__(self, components):
        self.components = tuple(tuple(c) for c in components)
        listed = "; ".join("{" + ", ".join(c) + "}" for c in self.components)
        super().__init__(
            f"journal graph is not strongly connected "
            f"({len(self.components)} components: {listed})"
        )


class NotConverged(CiterankError):
    """Iteration hit the step limit before reaching the tolerance.

    Carries the last iterate (``scores``) and its ``diagnostics`` so the
    caller can still inspect or export the partial result.
    """

    def __init__(self, scores, diagnostics):
        self.scores = scores
        self.diagnostics = diagnostics
        super().__init__(
            f"no convergence after {diagnostics.iterations} iterations "
            f"(residual {diagnostics.residual_l1:.3e})"
        )


class BadHeader(CiterankError):
    """The first line of a CSV input is not the expected header."""

    def __init__(self, expected, actual):
        self.expected = expected
        self.actual = actual
        super().__init__(f"line 1: expected header {expected!r}, got {actual!r}")


class MalformedLine(CiterankError):
    """A CSV data line could not be parsed."""

    def __init__(self, line_number, content, reason):
        self.line_number = line_number
        self.content = content
        self.reason = reason
        super().__init__(f"line {line_number}: {reason}: {content!r}")


class InfeasibleConfig(CiterankError):
    """A synthetic-network configuration cannot be satisfied."""


class TooFewArticles(CiterankError):
    """A journal does not have enough articles for the requested split."""

    def __init__(self, journal, available, requested):
        self.journal = journal
        self.available = available
        self.requested = requested
        super().__init__(
            f"journal {journal!r} has {available} article(s), "
            f"cannot split into {requested} parts"
        )
