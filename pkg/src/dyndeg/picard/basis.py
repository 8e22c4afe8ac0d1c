"""Basis elements of Pic(X).

A basis element is a tag plus an optional integer payload. Labels are the
printable names used in exports and in golden files; they are unique within
any basis the builders produce.
"""

from dataclasses import dataclass
from enum import Enum


class BasisKind(str, Enum):
    FULL = "Full"
    SYMMETRIZED = "Symmetrized"

    @classmethod
    def parse(cls, value):
        if isinstance(value, cls):
            return value
        v = str(value).strip().lower()
        for kind in cls:
            if kind.value.lower() == v:
                return kind
        if v == "sym":
            return cls.SYMMETRIZED
        raise ValueError(f"unknown basis kind {value!r}")


_PLAIN = {
    "E": "E_{}", "A": "A_{}", "V": "V_{}", "AV": "AV_{}", "Fcyc": "F_{}",
    "P": "P_{}", "Pe": "Pe_{}", "Po": "Po_{}", "Gamma": "Gamma_{}", "Ahalf": "A_{}",
    "SymP": "P_{}", "SymPw": "Pw_{}",
}
_FIXED = {
    "H": "H", "Pce": "Pe", "Pco": "Po", "APe": "APe", "APo": "APo",
    "SymAPw": "APw",
}


@dataclass(frozen=True)
class BasisElement:
    tag: str
    index: int = None

    @property
    def label(self):
        t, i = self.tag, self.index
        if t in _FIXED:
            return _FIXED[t]
        if t == "SymPw" and i is None:
            return "Pw"
        if t in _PLAIN:
            return _PLAIN[t].format(i)
        if t == "SymE":
            return "E" if i is None else f"E^({i})"
        if t == "SymA":
            return "A" if i is None else f"A^({i})"
        if t == "SymAV":
            return f"AV^({i})"
        if t == "SymV":
            return f"V^({i})"
        raise ValueError(f"unknown basis tag {t!r}")

    def __str__(self):
        return self.label

    def __repr__(self):
        return f"BasisElement({self.label})"


H = BasisElement("H")


def E(i):
    return BasisElement("E", i)


def A(i):
    return BasisElement("A", i)


def V(i):
    return BasisElement("V", i)


def AV(i):
    return BasisElement("AV", i)


def Fcyc(i):
    return BasisElement("Fcyc", i)


def P(r):
    return BasisElement("P", r)


def Pe(r):
    """Fiber over the even-multiples subspace for divisor r (r = 1 gives P_e)."""
    return BasisElement("Pce") if r == 1 else BasisElement("Pe", r)


def Po(r):
    """Fiber over the odd-multiples subspace for divisor r (r = 1 gives P_o)."""
    return BasisElement("Pco") if r == 1 else BasisElement("Po", r)


APe = BasisElement("APe")
APo = BasisElement("APo")


def Gamma(rho):
    return BasisElement("Gamma", rho)


def Ahalf(half):
    return BasisElement("Ahalf", half)


def SymE(i=None):
    return BasisElement("SymE", i)


def SymA(i=None):
    return BasisElement("SymA", i)


def SymAV(i=1):
    return BasisElement("SymAV", i)


def SymV(i=1):
    return BasisElement("SymV", i)


def SymP(r):
    return BasisElement("SymP", r)


def SymPw(r=None):
    return BasisElement("SymPw", r)


SymAPw = BasisElement("SymAPw")


_PARSE_FIXED = {v: k for k, v in _FIXED.items()}
_PARSE_PREFIX = [("Gamma_", "Gamma"), ("AV_", "AV"), ("Pe_", "Pe"), ("Po_", "Po"),
                 ("Pw_", "SymPw"), ("E_", "E"), ("A_", "A"), ("V_", "V"), ("F_", "Fcyc"),
                 ("P_", "P")]
_PARSE_SYM = [("AV^(", "SymAV"), ("V^(", "SymV"), ("E^(", "SymE"), ("A^(", "SymA")]


def parse_label(label, kind=None, half=None):
    """Inverse of BasisElement.label.

    A few labels are shared between bases. ``half`` is p/2 and is given only
    for q = 0 mod 4; there "A_k" with k = half is Ahalf(k), and in the
    symmetrized basis "P_r" is SymP(r) = P_{e,r} + P_{o,r}.
    """
    s = label.strip()
    if s in _PARSE_FIXED:
        return BasisElement(_PARSE_FIXED[s])
    if s == "Pw":
        return SymPw()
    if s == "E":
        return SymE()
    if s == "A":
        return SymA()
    for prefix, tag in _PARSE_SYM:
        if s.startswith(prefix) and s.endswith(")"):
            return BasisElement(tag, int(s[len(prefix):-1]))
    for prefix, tag in _PARSE_PREFIX:
        if s.startswith(prefix):
            idx = int(s[len(prefix):].strip("{}"))
            if tag == "A" and half is not None and idx == half:
                return Ahalf(idx)
            if (tag == "P" and half is not None and kind is not None
                    and BasisKind.parse(kind) == BasisKind.SYMMETRIZED):
                return SymP(idx)
            return BasisElement(tag, idx)
    raise ValueError(f"cannot parse basis label {label!r}")
