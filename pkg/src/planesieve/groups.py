"""Finite simple group parameters: orders, p-parts, parabolic indices.

GroupSpec is a validated discriminated record.  Orders are the simple
(adjoint quotient) orders, with the center divisor applied internally;
p_part is the full power of the defining characteristic.  Parabolic
indices cover the families where a closed product formula is wired in;
everything is exact integer arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial, gcd

from .exactmath import gaussian_binomial, is_prime_power

FAMILIES = (
    "A", "SPOR", "PSL", "PSU", "PSp", "POmega",
    "G2", "F4", "E6", "E7", "E8", "2B2", "2G2", "3D4", "2F4",
)

# Orders of the sporadic groups, keyed by canonical name.
SPORADIC_ORDERS: dict[str, int] = {
    "M11": 7_920,
    "M12": 95_040,
    "M22": 443_520,
    "M23": 10_200_960,
    "M24": 244_823_040,
    "J1": 175_560,
    "J2": 604_800,
    "J3": 50_232_960,
    "J4": 86_775_571_046_077_562_880,
    "Co1": 4_157_776_806_543_360_000,
    "Co2": 42_305_421_312_000,
    "Co3": 495_766_656_000,
    "Fi22": 64_561_751_654_400,
    "Fi23": 4_089_470_473_293_004_800,
    "Fi24'": 1_255_205_709_190_661_721_292_800,
    "HS": 44_352_000,
    "McL": 898_128_000,
    "He": 4_030_387_200,
    "Ru": 145_926_144_000,
    "Suz": 448_345_497_600,
    "ON": 460_815_505_920,
    "HN": 273_030_912_000_000,
    "Ly": 51_765_179_004_000_000,
    "Th": 90_745_943_887_872_000,
    "B": 4_154_781_481_226_426_191_177_580_544_000_000,
    "M": 808_017_424_794_512_875_886_459_904_961_710_757_005_754_368_000_000_000,
}

# Representative subgroups of odd index in sporadic groups: (group,
# subgroup shape, index).  Each index is what the admissibility filter
# must reject; the pair (order, index) is cross-checked for exact
# divisibility in the test suite.
SPORADIC_ODD_INDEX: tuple[tuple[str, str, int], ...] = (
    ("M11", "M10", 11),
    ("M12", "4^2:D12", 495),
    ("M22", "2^4:A6", 77),
    ("M23", "M22", 23),
    ("M24", "2^6:3.S6", 1_771),
    ("J1", "2^3:7:3", 1_045),
    ("J2", "2^(1+4):A5", 315),
    ("HS", "4.2^4.S5", 5_775),
    ("McL", "2.A8", 22_275),
    ("Co1", "2^(1+8).O8+(2)", 46_621_575),
    ("Co2", "2^(1+8):Sp6(2)", 56_925),
    ("Co3", "2.Sp6(2)", 170_775),
)

_SPORADIC_ALIASES = {name.upper().replace("'", ""): name for name in SPORADIC_ORDERS}
_SPORADIC_ALIASES["O'N"] = "ON"


@dataclass(frozen=True)
class GroupSpec:
    """One finite simple group.  n is the linear rank parameter (degree
    for alternating), q the field size with characteristic p and exponent
    e, eps the form sign for POmega/E6, name the sporadic key."""

    family: str
    n: int | None = None
    q: int | None = None
    eps: str | None = None
    name: str | None = None
    p: int | None = None
    e: int | None = None

    def __str__(self) -> str:
        if self.family == "A":
            return f"A{self.n}"
        if self.family == "SPOR":
            return str(self.name)
        if self.family in ("PSL", "PSU", "PSp"):
            return f"{self.family}({self.n},{self.q})"
        if self.family == "POmega":
            return f"POmega{self.eps}({self.n},{self.q})"
        if self.family == "E6":
            return f"E6{self.eps}({self.q})"
        return f"{self.family}({self.q})"


def _char(q: int, context: str) -> tuple[int, int]:
    pp = is_prime_power(q) if q >= 2 else None
    if pp is None:
        raise ValueError(f"{context}: q = {q} is not a prime power")
    return pp


def group_spec(family: str, n: int | None = None, q: int | None = None,
               eps: str | None = None, name: str | None = None) -> GroupSpec:
    """Validated constructor; raises ValueError outside each family's
    simple range."""
    if family == "A":
        if n is None or n < 5:
            raise ValueError(f"alternating degree must be >= 5, got {n}")
        return GroupSpec("A", n=n)
    if family == "SPOR":
        key = _SPORADIC_ALIASES.get((name or "").upper().replace("'", ""))
        if key is None:
            raise ValueError(f"unknown sporadic group {name!r}")
        return GroupSpec("SPOR", name=key)
    if q is None:
        raise ValueError(f"{family} requires a field size")
    p, e = _char(q, family)
    if family == "PSL":
        if n is None or n < 2:
            raise ValueError(f"PSL rank must be >= 2, got {n}")
        if n == 2 and q in (2, 3):
            raise ValueError(f"PSL(2,{q}) is not simple")
    elif family == "PSU":
        if n is None or n < 3:
            raise ValueError(f"PSU rank must be >= 3, got {n}")
        if (n, q) == (3, 2):
            raise ValueError("PSU(3,2) is not simple")
    elif family == "PSp":
        if n is None or n < 4 or n % 2:
            raise ValueError(f"PSp dimension must be even and >= 4, got {n}")
        if (n, q) == (4, 2):
            raise ValueError("PSp(4,2) is not simple")
    elif family == "POmega":
        if eps not in ("+", "-", "o"):
            raise ValueError(f"POmega sign must be one of + - o, got {eps!r}")
        if eps == "o":
            if n is None or n < 7 or n % 2 == 0:
                raise ValueError(f"odd-dimensional orthogonal needs odd n >= 7, got {n}")
            if p == 2:
                raise ValueError("odd-dimensional orthogonal groups need odd q")
        else:
            if n is None or n < 8 or n % 2:
                raise ValueError(f"even-dimensional orthogonal needs even n >= 8, got {n}")
    elif family == "G2":
        if q < 3:
            raise ValueError("G2 needs q >= 3")
    elif family == "E6":
        if eps not in ("+", "-"):
            raise ValueError(f"E6 sign must be + or -, got {eps!r}")
    elif family in ("F4", "E7", "E8", "3D4"):
        pass
    elif family == "2B2":
        if p != 2 or e % 2 == 0 or q < 8:
            raise ValueError(f"2B2 needs q = 2^a with a odd >= 3, got {q}")
    elif family == "2G2":
        if p != 3 or e % 2 == 0 or q < 27:
            raise ValueError(f"2G2 needs q = 3^a with a odd >= 3, got {q}")
    elif family == "2F4":
        if p != 2 or e % 2 == 0:
            raise ValueError(f"2F4 needs q = 2^a with a odd, got {q}")
    else:
        raise ValueError(f"unknown family {family!r}")
    return GroupSpec(family, n=n, q=q, eps=eps, p=p, e=e)


def _sign(eps: str) -> int:
    return {"+": 1, "-": -1}[eps]


def order(spec: GroupSpec) -> int:
    q, n = spec.q, spec.n
    if spec.family == "A":
        return factorial(n) // 2
    if spec.family == "SPOR":
        return SPORADIC_ORDERS[spec.name]
    if spec.family == "PSL":
        out = q ** (n * (n - 1) // 2)
        for i in range(2, n + 1):
            out *= q**i - 1
        return out // gcd(n, q - 1)
    if spec.family == "PSU":
        out = q ** (n * (n - 1) // 2)
        for i in range(2, n + 1):
            out *= q**i - (-1) ** i
        return out // gcd(n, q + 1)
    if spec.family == "PSp":
        m = n // 2
        out = q ** (m * m)
        for i in range(1, m + 1):
            out *= q ** (2 * i) - 1
        return out // gcd(2, q - 1)
    if spec.family == "POmega":
        if spec.eps == "o":
            m = (n - 1) // 2
            out = q ** (m * m)
            for i in range(1, m + 1):
                out *= q ** (2 * i) - 1
            return out // 2
        m = n // 2
        s = _sign(spec.eps)
        out = q ** (m * (m - 1)) * (q**m - s)
        for i in range(1, m):
            out *= q ** (2 * i) - 1
        return out // gcd(4, q**m - s)
    if spec.family == "G2":
        return q**6 * (q**6 - 1) * (q**2 - 1)
    if spec.family == "F4":
        return q**24 * (q**12 - 1) * (q**8 - 1) * (q**6 - 1) * (q**2 - 1)
    if spec.family == "E6":
        s = _sign(spec.eps)
        out = (q**36 * (q**12 - 1) * (q**9 - s) * (q**8 - 1)
               * (q**6 - 1) * (q**5 - s) * (q**2 - 1))
        return out // gcd(3, q - s)
    if spec.family == "E7":
        out = q**63
        for i in (18, 14, 12, 10, 8, 6, 2):
            out *= q**i - 1
        return out // gcd(2, q - 1)
    if spec.family == "E8":
        out = q**120
        for i in (30, 24, 20, 18, 14, 12, 8, 2):
            out *= q**i - 1
        return out
    if spec.family == "2B2":
        return q**2 * (q**2 + 1) * (q - 1)
    if spec.family == "2G2":
        return q**3 * (q**3 + 1) * (q - 1)
    if spec.family == "3D4":
        return q**12 * (q**8 + q**4 + 1) * (q**6 - 1) * (q**2 - 1)
    if spec.family == "2F4":
        out = q**12 * (q**6 + 1) * (q**4 - 1) * (q**3 + 1) * (q - 1)
        # q = 2 names the derived subgroup, which has index 2.
        return out // 2 if q == 2 else out
    raise ValueError(f"unknown family {spec.family!r}")


_P_PART_EXPONENT = {"G2": 6, "F4": 24, "E6": 36, "E7": 63, "E8": 120,
                    "2B2": 2, "2G2": 3, "3D4": 12, "2F4": 12}


def p_part(spec: GroupSpec) -> int:
    """Full power of the defining characteristic dividing order(spec)."""
    if spec.family in ("A", "SPOR"):
        raise ValueError(f"{spec} has no defining characteristic")
    q, n = spec.q, spec.n
    if spec.family in ("PSL", "PSU"):
        return q ** (n * (n - 1) // 2)
    if spec.family == "PSp":
        return q ** ((n // 2) ** 2)
    if spec.family == "POmega":
        if spec.eps == "o":
            return q ** (((n - 1) // 2) ** 2)
        return q ** ((n // 2) * (n // 2 - 1))
    return q ** _P_PART_EXPONENT[spec.family]


def parabolic_index(spec: GroupSpec, m: int) -> int:
    """Index of the m-th maximal parabolic subgroup (totally isotropic
    m-subspace stabilizer for the classical families)."""
    q, n = spec.q, spec.n
    if spec.family == "PSL":
        if not 1 <= m <= n - 1:
            raise ValueError(f"PSL({n},{q}) parabolic range is 1..{n - 1}, got {m}")
        return gaussian_binomial(n, m, q)
    if spec.family == "PSU":
        if not 1 <= m <= n // 2:
            raise ValueError(f"PSU({n},{q}) parabolic range is 1..{n // 2}, got {m}")
        num = 1
        for i in range(n - 2 * m + 1, n + 1):
            num *= q**i - (-1) ** i
        den = 1
        for i in range(1, m + 1):
            den *= q ** (2 * i) - 1
        assert num % den == 0
        return num // den
    if spec.family == "PSp":
        k = n // 2
        if not 1 <= m <= k:
            raise ValueError(f"PSp({n},{q}) parabolic range is 1..{k}, got {m}")
        out = 1
        for i in range(m):
            out *= q ** (2 * (k - i)) - 1
            den = q ** (i + 1) - 1
            assert out % den == 0
            out //= den
        return out
    if spec.family == "POmega":
        if m != 1:
            raise ValueError(f"only the point parabolic is wired for {spec}")
        if spec.eps == "o":
            return (q ** (n - 1) - 1) // (q - 1)
        s = _sign(spec.eps)
        num = (q ** (n // 2) - s) * (q ** ((n - 2) // 2) + s)
        assert num % (q - 1) == 0
        return num // (q - 1)
    if spec.family == "G2":
        if m not in (1, 2):
            raise ValueError(f"G2 parabolic range is 1..2, got {m}")
        return (q**6 - 1) // (q - 1)
    raise ValueError(f"parabolic index not wired for family {spec.family}")


# Smallest faithful permutation degrees that undercut the point parabolic
# index; used as subgroup-index floors.  Entries are (family, n, q).
_MIN_DEGREE_EXCEPTIONS = {
    ("PSL", 2, 5): 5, ("PSL", 2, 7): 7, ("PSL", 2, 9): 6, ("PSL", 2, 11): 11,
    ("PSL", 4, 2): 8,
    ("PSU", 3, 5): 50, ("PSU", 4, 2): 27, ("PSU", 4, 3): 112, ("PSU", 6, 2): 672,
    ("PSp", 4, 3): 27,
}


def min_proper_index(spec: GroupSpec) -> int | None:
    """A true lower bound on the index of any proper subgroup, or None
    when no safe bound is wired for the parameters."""
    key = (spec.family, spec.n, spec.q)
    if key in _MIN_DEGREE_EXCEPTIONS:
        return _MIN_DEGREE_EXCEPTIONS[key]
    q, n = spec.q, spec.n
    if spec.family == "PSL":
        return (q**n - 1) // (q - 1)
    if spec.family == "PSU":
        return parabolic_index(spec, 1)
    if spec.family == "PSp":
        if q == 2:
            m = n // 2
            return 2 ** (m - 1) * (2**m - 1)
        return (q**n - 1) // (q - 1)
    if spec.family == "POmega":
        if q in (2, 3):
            return None
        return parabolic_index(spec, 1)
    if spec.family == "G2":
        if q < 5:
            return None
        return (q**6 - 1) // (q - 1)
    return None


def parse_group(tokens: list[str]) -> GroupSpec:
    """Parse the token grammar used on the command line:

    PSL n q | PSU n q | PSp n q | POmega n q +|-|o | G2 q | F4 q
    | E6 q +|- | E7 q | E8 q | 2B2 q | 2G2 q | 3D4 q | 2F4 q
    | A n | SPOR name
    """
    if not tokens:
        raise ValueError("empty group description")
    fam = tokens[0]
    rest = tokens[1:]
    arity = {"A": 1, "SPOR": 1, "PSL": 2, "PSU": 2, "PSp": 2, "POmega": 3,
             "E6": 2, "G2": 1, "F4": 1, "E7": 1, "E8": 1, "2B2": 1,
             "2G2": 1, "3D4": 1, "2F4": 1}
    if fam not in arity:
        raise ValueError(f"unknown family {fam!r}")
    if len(rest) != arity[fam]:
        raise ValueError(f"{fam} takes {arity[fam]} parameter(s), got {len(rest)}")

    def as_int(token: str) -> int:
        try:
            return int(token)
        except ValueError:
            raise ValueError(f"expected an integer, got {token!r}") from None

    if fam == "A":
        return group_spec("A", n=as_int(rest[0]))
    if fam == "SPOR":
        return group_spec("SPOR", name=rest[0])
    if fam in ("PSL", "PSU", "PSp"):
        return group_spec(fam, n=as_int(rest[0]), q=as_int(rest[1]))
    if fam == "POmega":
        return group_spec(fam, n=as_int(rest[0]), q=as_int(rest[1]), eps=rest[2])
    if fam == "E6":
        return group_spec(fam, q=as_int(rest[0]), eps=rest[1])
    return group_spec(fam, q=as_int(rest[0]))
