"""Sparse linear combinations over the rationals.

A :class:`LinComb` is a finitely supported map from basis keys to
``fractions.Fraction``.  Keys can be anything hashable with a total order:
words, biwords, tensor pairs (plain tuples of keys), strings, integers.
Zero coefficients are never stored, so equality is support-wise equality of
the coefficient maps.  Iteration is deterministic: keys are emitted in
canonical order (see :func:`canonical_key`).

Values are immutable once built; all arithmetic returns fresh objects.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Iterable, Mapping


def canonical_key(key):
    """Total-order sort key: ``sort_key()`` when provided, tuples recursed."""
    sk = getattr(key, "sort_key", None)
    if sk is not None:
        return sk()
    if isinstance(key, tuple):
        return tuple(canonical_key(k) for k in key)
    return key


class LinComb:
    """Finitely supported rational linear combination of basis keys."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping | Iterable | None = None):
        data = {}
        if terms:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for key, coeff in items:
                coeff = Fraction(coeff)
                if coeff:
                    c = data.get(key)
                    if c is None:
                        data[key] = coeff
                    else:
                        c = c + coeff
                        if c:
                            data[key] = c
                        else:
                            del data[key]
        self._terms = data

    @classmethod
    def zero(cls) -> "LinComb":
        return cls()

    @classmethod
    def single(cls, key, coeff=1) -> "LinComb":
        return cls({key: coeff})

    @classmethod
    def _raw(cls, data: dict) -> "LinComb":
        # trusted constructor: data already pruned, coefficients are Fractions
        out = object.__new__(cls)
        out._terms = data
        return out

    # -- read access -------------------------------------------------------

    def items(self):
        """Terms in canonical key order."""
        return sorted(self._terms.items(), key=lambda kv: canonical_key(kv[0]))

    def keys(self):
        return sorted(self._terms, key=canonical_key)

    def terms(self) -> dict:
        """Unordered live view of the underlying map; do not mutate."""
        return self._terms

    def coefficient(self, key) -> Fraction:
        return self._terms.get(key, Fraction(0))

    def __getitem__(self, key) -> Fraction:
        return self._terms.get(key, Fraction(0))

    def __contains__(self, key) -> bool:
        return key in self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __iter__(self):
        return iter(self.keys())

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other: "LinComb") -> "LinComb":
        if not isinstance(other, LinComb):
            return NotImplemented
        big, small = self._terms, other._terms
        if len(big) < len(small):
            big, small = small, big
        data = dict(big)
        for key, coeff in small.items():
            c = data.get(key)
            if c is None:
                data[key] = coeff
            else:
                c = c + coeff
                if c:
                    data[key] = c
                else:
                    del data[key]
        return LinComb._raw(data)

    def __sub__(self, other: "LinComb") -> "LinComb":
        if not isinstance(other, LinComb):
            return NotImplemented
        data = dict(self._terms)
        for key, coeff in other._terms.items():
            c = data.get(key)
            if c is None:
                data[key] = -coeff
            else:
                c = c - coeff
                if c:
                    data[key] = c
                else:
                    del data[key]
        return LinComb._raw(data)

    def __neg__(self) -> "LinComb":
        return LinComb._raw({k: -c for k, c in self._terms.items()})

    def __mul__(self, scalar) -> "LinComb":
        scalar = Fraction(scalar)
        if not scalar:
            return LinComb._raw({})
        return LinComb._raw({k: c * scalar for k, c in self._terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, LinComb):
            return NotImplemented
        return self._terms == other._terms

    def __ne__(self, other) -> bool:
        eq = self.__eq__(other)
        return NotImplemented if eq is NotImplemented else not eq

    __hash__ = None

    def map_keys(self, fn: Callable) -> "LinComb":
        """Relabel basis keys through ``fn`` (may merge terms)."""
        return LinComb((fn(k), c) for k, c in self._terms.items())

    def __repr__(self):
        return f"LinComb({dict(self.items())!r})"

    def __str__(self):
        if not self._terms:
            return "0"
        chunks = []
        for key, coeff in self.items():
            text = format_term(key, coeff)
            if chunks:
                if text.startswith("-"):
                    chunks.append(" - " + text[1:])
                else:
                    chunks.append(" + " + text)
            else:
                chunks.append(text)
        return "".join(chunks)


def format_term(key, coeff: Fraction) -> str:
    ks = str(key)
    if coeff == 1:
        return ks
    if coeff == -1:
        return "-" + ks
    return f"{coeff}*{ks}"


def linear_extend(fn: Callable, x: LinComb) -> LinComb:
    """Apply a key-level map ``fn: key -> LinComb`` linearly to ``x``."""
    out = LinComb.zero()
    for key, coeff in x.terms().items():
        out = out + fn(key) * coeff
    return out


def bilinear_extend(fn: Callable, x: LinComb, y: LinComb) -> LinComb:
    """Apply ``fn: (key, key) -> LinComb`` bilinearly to ``x`` and ``y``."""
    out = LinComb.zero()
    for ka, ca in x.terms().items():
        for kb, cb in y.terms().items():
            out = out + fn(ka, kb) * (ca * cb)
    return out


def tensor_key(left, right) -> tuple:
    return (left, right)
