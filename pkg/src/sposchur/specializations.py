"""Specializations of the algebra of symmetric functions.

A specialization is determined by the images p_k of the Newton power sums,
k >= 1.  Three flavors are supported:

* finitely supported power sums (the generic exact case; Plancherel is
  p_1 = theta, the rest zero),
* a plain alphabet y_1..y_N with p_k = sum y_i^k,
* a BC alphabet x_1, 1/x_1, ..., x_N, 1/x_N (optionally extended by the
  letter 1) with p_k = sum (x_i^k + x_i^(-k)) (+1).

Values may be exact rationals or floats; the complete homogeneous h_n and
elementary e_n images are derived through Newton's recurrences

    n h_n = sum_{k=1..n} p_k h_{n-k},      n e_n = sum_{k=1..n} (-1)^(k-1) p_k e_{n-k},

which preserve exactness.  Caches are grown under a lock so specializations
can be shared across threads.
"""

from __future__ import annotations

import json
import threading
from fractions import Fraction
from typing import Callable, Sequence

from .errors import TruncationOverflow
from .series import GradedScalar


def _coerce(value):
    """ints and strings become Fractions; Fractions and floats pass through."""
    if isinstance(value, (Fraction, float)):
        return value
    if isinstance(value, (int, str)):
        return Fraction(value)
    raise TypeError(f"cannot use {type(value).__name__} as a power-sum value")


class Specialization:
    """Algebra homomorphism from symmetric functions, given by its power sums."""

    def __init__(
        self,
        powersum_fn: Callable[[int], object],
        *,
        max_support: int | None = None,
        truncation_degree: int | None = None,
        _meta: dict | None = None,
    ):
        self._pfun = powersum_fn
        self.max_support = max_support  # p_k = 0 for k > max_support, if not None
        self.truncation_degree = truncation_degree
        self._meta = _meta or {}
        self._lock = threading.Lock()
        self._p_cache: dict[int, object] = {}
        self._h_cache: list = [_one_like(self)]
        self._e_cache: list = [_one_like(self)]

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, truncation_degree: int | None = None) -> "Specialization":
        return cls.from_powersums({}, truncation_degree=truncation_degree)

    @classmethod
    def from_powersums(cls, powersums: dict, truncation_degree: int | None = None):
        table = {int(k): _coerce(v) for k, v in powersums.items() if _coerce(v) != 0}
        if any(k < 1 for k in table):
            raise ValueError("power sums are indexed by k >= 1")
        mx = max(table) if table else 0
        return cls(
            lambda k: table.get(k, Fraction(0)),
            max_support=mx,
            truncation_degree=truncation_degree,
            _meta={"kind": "powersums", "table": table},
        )

    @classmethod
    def plancherel(cls, theta, truncation_degree: int | None = None):
        """p_1 = theta and p_k = 0 for k >= 2, so h_n = theta^n / n!."""
        return cls.from_powersums({1: theta}, truncation_degree=truncation_degree)

    @classmethod
    def from_alphabet(cls, variables: Sequence, truncation_degree: int | None = None):
        """Plain alphabet y_1..y_N: p_k = sum_i y_i^k."""
        ys = [_coerce(v) for v in variables]
        return cls(
            lambda k: sum((y**k for y in ys), start=Fraction(0)),
            max_support=None if ys else 0,
            truncation_degree=truncation_degree,
            _meta={"kind": "alphabet", "y": ys},
        )

    @classmethod
    def from_bc_alphabet(
        cls,
        variables: Sequence,
        include_one: bool = False,
        truncation_degree: int | None = None,
    ):
        """BC alphabet (x_1, 1/x_1, ..., x_N, 1/x_N) and optionally the letter 1."""
        xs = [_coerce(v) for v in variables]
        if any(x == 0 for x in xs):
            raise ValueError("BC alphabet variables must be nonzero")
        one = 1 if include_one else 0

        def p(k: int):
            return sum((x**k + x**-k for x in xs), start=Fraction(0)) + one

        return cls(
            p,
            max_support=None if (xs or include_one) else 0,
            truncation_degree=truncation_degree,
            _meta={"kind": "bc_alphabet", "x": xs, "include_one": include_one},
        )

    # -- values ------------------------------------------------------------

    def p(self, k: int):
        """Image of the power sum p_k."""
        if k < 1:
            raise ValueError("power sums are indexed by k >= 1")
        if self.max_support is not None and k > self.max_support:
            return Fraction(0)
        with self._lock:
            if k not in self._p_cache:
                self._p_cache[k] = _coerce(self._pfun(k))
            return self._p_cache[k]

    def h(self, n: int):
        """Complete homogeneous image h_n; h_n = 0 for n < 0."""
        if n < 0:
            return Fraction(0)
        self._extend(n)
        return self._h_cache[n]

    def e(self, n: int):
        """Elementary image e_n; e_n = 0 for n < 0."""
        if n < 0:
            return Fraction(0)
        self._extend(n)
        return self._e_cache[n]

    def _extend(self, n: int) -> None:
        with self._lock:
            h, e = self._h_cache, self._e_cache
            while len(h) <= n:
                m = len(h)
                ps = [self.__p_nolock(k) for k in range(1, m + 1)]
                h.append(
                    sum((ps[k - 1] * h[m - k] for k in range(1, m + 1)), Fraction(0))
                    / m
                )
                e.append(
                    sum(
                        ((-1) ** (k - 1) * ps[k - 1] * e[m - k] for k in range(1, m + 1)),
                        Fraction(0),
                    )
                    / m
                )

    def __p_nolock(self, k: int):
        if self.max_support is not None and k > self.max_support:
            return Fraction(0)
        if k not in self._p_cache:
            self._p_cache[k] = _coerce(self._pfun(k))
        return self._p_cache[k]

    # -- derived objects ------------------------------------------------------

    @property
    def kind(self) -> str:
        return self._meta.get("kind", "powersums")

    @property
    def variables(self) -> list | None:
        """Alphabet letters for alphabet-backed specializations, else None."""
        if self.kind == "alphabet":
            return list(self._meta["y"])
        if self.kind == "bc_alphabet":
            return list(self._meta["x"])
        return None

    @property
    def include_one(self) -> bool:
        return bool(self._meta.get("include_one", False))

    def is_exact(self, through_degree: int = 1) -> bool:
        return all(
            isinstance(self.p(k), Fraction) for k in range(1, through_degree + 1)
        )

    def omega(self) -> "Specialization":
        """The involution p_k -> (-1)^(k-1) p_k (h and e swap roles)."""
        return Specialization(
            lambda k: (-1) ** (k - 1) * self.p(k),
            max_support=self.max_support,
            truncation_degree=self.truncation_degree,
            _meta={"kind": "omega", "base": self},
        )

    def h_series(self, degree: int) -> GradedScalar:
        """H(rho; t) = sum h_n t^n = exp(sum p_k t^k / k), truncated."""
        return GradedScalar([self.h(n) for n in range(degree + 1)])

    def e_series(self, degree: int) -> GradedScalar:
        """E(rho; t) = sum e_n t^n = exp(sum (-1)^(k+1) p_k t^k / k), truncated."""
        return GradedScalar([self.e(n) for n in range(degree + 1)])

    # -- serialization ----------------------------------------------------------

    def to_json(self) -> dict:
        kind = self.kind
        if kind == "powersums":
            return {
                "powersums": {str(k): str(v) for k, v in self._meta["table"].items()},
                "truncation_degree": self.truncation_degree,
            }
        if kind == "alphabet":
            return {"y": [str(v) for v in self._meta["y"]]}
        if kind == "bc_alphabet":
            return {
                "x": [str(v) for v in self._meta["x"]],
                "include_one": self.include_one,
            }
        raise TypeError(f"cannot serialize a specialization of kind {kind!r}")

    @classmethod
    def from_json(cls, doc: dict | str) -> "Specialization":
        if isinstance(doc, str):
            doc = json.loads(doc)
        if not isinstance(doc, dict):
            raise ValueError("specialization document must be a JSON object")
        if "powersums" in doc:
            return cls.from_powersums(
                doc["powersums"], truncation_degree=doc.get("truncation_degree")
            )
        if "x" in doc:
            return cls.from_bc_alphabet(doc["x"], bool(doc.get("include_one", False)))
        if "y" in doc:
            return cls.from_alphabet(doc["y"])
        raise ValueError("unrecognized specialization document")

    def __repr__(self) -> str:
        return f"Specialization(kind={self.kind!r})"


def _one_like(rho: Specialization) -> Fraction:
    return Fraction(1)


def h_values(rho: Specialization, n_max: int) -> list:
    """[h_0(rho), ..., h_{n_max}(rho)], respecting a declared truncation degree."""
    if rho.truncation_degree is not None and n_max > rho.truncation_degree:
        raise TruncationOverflow(
            f"n_max={n_max} beyond truncation degree {rho.truncation_degree}"
        )
    return [rho.h(n) for n in range(n_max + 1)]


def e_values(rho: Specialization, n_max: int) -> list:
    """[e_0(rho), ..., e_{n_max}(rho)], respecting a declared truncation degree."""
    if rho.truncation_degree is not None and n_max > rho.truncation_degree:
        raise TruncationOverflow(
            f"n_max={n_max} beyond truncation degree {rho.truncation_degree}"
        )
    return [rho.e(n) for n in range(n_max + 1)]
