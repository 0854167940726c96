"""Generalized minimal absent words (MAWs) over collections of strings."""

from ._mawkit import Index as _Index
from ._mawkit import MawkitError
from ._mawkit import oracle_maws as _oracle_maws

__all__ = ["Index", "MawkitError", "oracle_maws"]


def _encode(s):
    return s if isinstance(s, bytes) else s.encode("utf-8")


def _decode(items, as_text):
    if not as_text:
        return list(items)
    return [b.decode("utf-8", "surrogateescape") for b in items]


class Index:
    """DAWG over a list of documents; str inputs give str results."""

    def __init__(self, docs, alphabet=None):
        docs = list(docs)
        self._text = all(isinstance(d, str) for d in docs)
        self._index = _Index([_encode(d) for d in docs],
                             None if alphabet is None else _encode(alphabet))

    k = property(lambda self: self._index.k)
    n = property(lambda self: self._index.n)
    sigma = property(lambda self: self._index.sigma)
    num_nodes = property(lambda self: self._index.num_nodes)
    num_edges = property(lambda self: self._index.num_edges)

    def maws(self, mask):
        """MAWs for a bit-string mask such as "10", sorted by (length, bytes)."""
        return _decode(self._index.maws(mask), self._text)

    def refs(self, mask):
        """(first symbol, doc, start, end) tuples, 1-based and inclusive."""
        refs = self._index.refs(mask)
        if not self._text:
            return refs
        return [(a.decode("utf-8", "surrogateescape"), d, s, e) for a, d, s, e in refs]

    def count(self, mask):
        return self._index.count(mask)

    def set_op(self, op):
        """op is "intersection", "union" or "sym-diff" (two documents only)."""
        return _decode(self._index.set_op(op), self._text)

    def prime(self):
        return _decode(self._index.prime(), self._text)

    def specific(self, target, ref):
        return _decode(self._index.specific(list(target), list(ref)), self._text)


def oracle_maws(docs, mask, alphabet=None):
    """Brute-force MAW(S_B); slow, for cross-checking small inputs."""
    docs = list(docs)
    text = all(isinstance(d, str) for d in docs)
    out = _oracle_maws([_encode(d) for d in docs], mask,
                       None if alphabet is None else _encode(alphabet))
    return _decode(out, text)
