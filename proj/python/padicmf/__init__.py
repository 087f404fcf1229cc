"""Python front end for the padicmf C++ core.

Residues come back as Python ints together with their precision. Function
and character arguments accept the same descriptors as the command line:
a dict such as {"kind": "monomial", "degree": 3} or one of the words
"trivial" and "units".
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from . import _padicmf
from ._padicmf import PadicError, set_thread_count, default_multiplier

__all__ = [
    "PadicError",
    "Series",
    "act",
    "bernoulli",
    "default_multiplier",
    "eisenstein_2G",
    "eisenstein_2G_twisted",
    "eisenstein_eval",
    "kl_constant",
    "kummer_mul",
    "kummer_pair",
    "kummer_structure_check",
    "nu",
    "reduce_rational",
    "serre_tate_action_check",
    "set_thread_count",
    "theta",
    "two_variable_L",
    "verify",
]


class Series:
    """A truncated q-expansion over Z/p^N: residues plus per-coefficient precision."""

    def __init__(self, doc: dict[str, Any]):
        self.p: int = doc["p"]
        self.N: int = doc["N"]
        self.M: int = doc["M"]
        self.coeffs = [_residue(c) for c in doc["coeffs"]]
        self.prec: list[int] = list(doc["prec"])

    def __getitem__(self, n: int):
        return self.coeffs[n]

    def __len__(self) -> int:
        return len(self.coeffs)

    def centered(self, n: int) -> int:
        """Coefficient n as the representative in (-p^N/2, p^N/2]."""
        mod = self.p ** self.prec[n]
        r = self.coeffs[n] % mod
        return r - mod if r > mod // 2 else r

    def __repr__(self) -> str:
        head = ", ".join(str(c) for c in self.coeffs[:6])
        return f"Series(p={self.p}, N={self.N}, M={self.M}, [{head}, ...])"


def _residue(c: Any):
    if isinstance(c, str):
        return int(c)
    # Cyclotomic coefficient: basis coordinates in powers of zeta.
    return tuple(int(x) for x in c["coeffs"])


def _scalar(doc: dict[str, Any]) -> tuple[Any, int]:
    if "residue" in doc:
        return int(doc["residue"]), doc["prec"]
    return tuple(int(x) for x in doc["coeffs"]), doc["prec"]


def _fn(f: Any) -> str:
    return f if isinstance(f, str) else json.dumps(f)


def bernoulli(k: int) -> Fraction:
    num, den = _padicmf.bernoulli(k)
    return Fraction(int(num), int(den))


def reduce_rational(x: Fraction | int, p: int, N: int) -> tuple[int, int]:
    """(residue, precision) of a p-integral rational modulo p^N."""
    x = Fraction(x)
    return _scalar(json.loads(_padicmf.reduce_rational(str(x.numerator), str(x.denominator), p, N)))


def eisenstein_2G(k: int, p: int = 5, N: int = 12, M: int = 60) -> Series:
    return Series(json.loads(_padicmf.eisenstein_2G(p, N, M, k)))


def eisenstein_2G_twisted(k: int, f: Any, p: int = 5, N: int = 12, M: int = 60) -> Series:
    return Series(json.loads(_padicmf.eisenstein_2G_twisted(p, N, M, k, _fn(f))))


def eisenstein_eval(a: int, f: Any, p: int = 5, N: int = 12, M: int = 60, m_max: int = 3) -> Series:
    """mu^(a)(f) as a q-expansion."""
    return Series(json.loads(_padicmf.eisenstein_eval(p, N, M, a, _fn(f), m_max)))


def kl_constant(a: int, f: Any, p: int = 5, N: int = 12, m_max: int = 3) -> tuple[Any, int]:
    return _scalar(json.loads(_padicmf.kl_constant(p, N, a, _fn(f), m_max)))


def act(f: Any, coeffs: list[int], p: int = 5, N: int = 12) -> Series:
    """Coefficient n becomes f(n) a_n."""
    return Series(json.loads(_padicmf.act(p, N, _fn(f), list(coeffs))))


def theta(coeffs: list[int], t: int = 1, p: int = 5, N: int = 12) -> Series:
    return Series(json.loads(_padicmf.theta(p, N, list(coeffs), t)))


def nu(a: int, s: int, t: int, p: int = 5, N: int = 12, M: int = 60, m_max: int = 3) -> dict[str, Any]:
    """Both computations of nu(x^s y^t) and whether they agree."""
    doc = json.loads(_padicmf.nu(p, N, M, a, s, t, m_max))
    return {
        "convolution": Series(doc["convolution"]),
        "closed_form": Series(doc["closed_form"]),
        "agree": doc["agree"],
    }


def two_variable_L(chi1: Any, chi2: Any, a: int = 2, p: int = 5, N: int = 12, M: int = 60, m_max: int = 3) -> dict[str, Any]:
    doc = json.loads(_padicmf.two_variable_L(p, N, M, a, _fn(chi1), _fn(chi2), m_max))
    return {"series": Series(doc["series"]), "factor": _scalar(doc["factor"]), "constant": _scalar(doc["constant"])}


def kummer_mul(x: tuple[int, int], y: tuple[int, int], p: int = 3, k: int = 1) -> tuple[int, int]:
    return tuple(_padicmf.kummer_mul(p, k, tuple(x), tuple(y)))


def kummer_pair(x: tuple[int, int], y: tuple[int, int], p: int = 3, k: int = 1) -> int:
    """Exponent v of zeta_{p^k}^v; y lies in the group over the inverted parameter."""
    return _padicmf.kummer_pair(p, k, tuple(x), tuple(y))


def kummer_structure_check(p: int = 3, k: int = 1) -> dict[str, Any]:
    return json.loads(_padicmf.kummer_structure_check(p, k))


def serre_tate_action_check(p: int = 3, k: int = 1, power: int = 1) -> dict[str, Any]:
    """Check for zeta = zeta_{p^k}^power."""
    return json.loads(_padicmf.serre_tate_action_check(p, k, power))


def verify(suite: str = "all", p: int = 5, N: int = 12, M: int = 60, a: int | None = None, kummer_k: int = 1) -> list[dict[str, Any]]:
    if a is None:
        a = default_multiplier(p)
    return json.loads(_padicmf.verify(suite, p, N, M, a, kummer_k))
