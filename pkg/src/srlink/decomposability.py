"""Vertex decomposability and weak vertex decomposability.

Both checkers follow the recursive definitions literally: the complex must be
pure, and it is decomposable if it is a simplex, ``{emptyset}``, or has a vertex
whose link and deletion satisfy the required conditions.  Whether the
dimension drops by one between link and deletion (the shedding condition) is
recorded in the trace but not required.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .homology import cm_failure, resolve_field
from .simplicial import vertices_of


@dataclass
class DecompositionTrace:
    verdict: bool
    kind: str
    reason: str
    vertex: int | None = None
    link: DecompositionTrace | None = None
    deletion: DecompositionTrace | None = None
    shedding: bool | None = None
    failures: dict = field(default_factory=dict)

    def lines(self, indent=0):
        pad = "  " * indent
        head = f"{pad}{self.kind}: {str(self.verdict).lower()} ({self.reason})"
        out = [head]
        if self.vertex is not None:
            flag = "" if self.shedding else " [dim(lk) != dim(del) - 1]"
            out.append(f"{pad}  vertex {self.vertex}{flag}")
        for v, why in sorted(self.failures.items()):
            out.append(f"{pad}  vertex {v}: {why}")
        for sub in (self.link, self.deletion):
            if sub is not None:
                out.extend(sub.lines(indent + 1))
        return out

    def __str__(self):
        return "\n".join(self.lines())


def _base_case(cx):
    if cx.is_void:
        raise ValueError("decomposability of the void complex is undefined")
    if not cx.is_pure:
        return False, "not pure"
    if cx.is_empty_complex:
        return True, "{emptyset}"
    if cx.is_simplex:
        return True, "simplex"
    return None, ""


def _shedding(lk, dl):
    return lk.dim == dl.dim - 1


class _VD:
    def __init__(self):
        self.memo = {}

    def holds(self, cx):
        key = cx.compressed_key()
        hit = self.memo.get(key)
        if hit is not None:
            return hit
        base, _ = _base_case(cx)
        if base is not None:
            self.memo[key] = base
            return base
        result = any(self._vertex_reason(cx, v) is None for v in cx.vertices)
        self.memo[key] = result
        return result

    def _vertex_reason(self, cx, v):
        lk, dl = cx.link(v), cx.deletion(v)
        if not lk.is_pure:
            return "link not pure"
        if not dl.is_pure:
            return "deletion not pure"
        if not self.holds(dl):
            return "deletion not vertex decomposable"
        if not self.holds(lk):
            return "link not vertex decomposable"
        return None

    def trace(self, cx):
        base, why = _base_case(cx)
        if base is not None:
            return DecompositionTrace(base, "vd", why)
        failures = {}
        for v in cx.vertices:
            reason = self._vertex_reason(cx, v)
            if reason is None:
                lk, dl = cx.link(v), cx.deletion(v)
                return DecompositionTrace(
                    True, "vd", "shedding", v, self.trace(lk), self.trace(dl), _shedding(lk, dl)
                )
            failures[v] = reason
        self.memo[cx.compressed_key()] = False
        return DecompositionTrace(False, "vd", "no vertex works", failures=failures)


class _WVD:
    def __init__(self, field):
        self.field = field
        self.memo = {}
        self.cm_memo = {}

    def deletion_cm(self, dl):
        key = dl.compressed_key()
        hit = self.cm_memo.get(key)
        if hit is None:
            hit = self.cm_memo[key] = cm_failure(dl, self.field) is None
        return hit

    def holds(self, cx):
        key = cx.compressed_key()
        hit = self.memo.get(key)
        if hit is not None:
            return hit
        base, _ = _base_case(cx)
        if base is not None:
            self.memo[key] = base
            return base
        result = any(self._vertex_reason(cx, v) is None for v in cx.vertices)
        self.memo[key] = result
        return result

    def _vertex_reason(self, cx, v):
        dl = cx.deletion(v)
        if not self.deletion_cm(dl):
            return "deletion not Cohen-Macaulay"
        if not self.holds(cx.link(v)):
            return "link not weakly vertex decomposable"
        return None

    def trace(self, cx):
        base, why = _base_case(cx)
        if base is not None:
            return DecompositionTrace(base, "wvd", why)
        failures = {}
        for v in cx.vertices:
            reason = self._vertex_reason(cx, v)
            if reason is None:
                lk, dl = cx.link(v), cx.deletion(v)
                return DecompositionTrace(
                    True, "wvd", "weak shedding", v, self.trace(lk), None, _shedding(lk, dl)
                )
            failures[v] = reason
        return DecompositionTrace(False, "wvd", "no vertex works", failures=failures)


def is_vertex_decomposable(cx):
    return _VD().trace(cx)


def is_weakly_vertex_decomposable(cx, field=None):
    return _WVD(resolve_field(field)).trace(cx)


def shedding_vertices(cx):
    """Vertices v with link and deletion both pure and vertex decomposable."""
    checker = _VD()
    _base_case(cx)
    return [v for v in vertices_of(cx.vertex_mask) if checker._vertex_reason(cx, v) is None]
