"""Exact coefficient fields: F_p, Q and small extensions F_{p^k}.

Elements are plain Python values so they can sit in dict-based sparse
vectors: ``int`` for the finite fields, ``fractions.Fraction`` for Q.
Elements of F_{p^k} are encoded as integers whose base-p digits are the
coordinates in the power basis 1, a, a^2, ... of a fixed primitive
modulus.
"""

import logging
import random
from abc import ABC, abstractmethod
from fractions import Fraction
from functools import lru_cache
from typing import Any, Dict, Iterator, List, Optional, Tuple

from ..utils.errors import FieldError, ParseError

logger = logging.getLogger(__name__)

# Largest field order for which F_{p^k} log/exp tables are built.
MAX_EXTENSION_ORDER = 1 << 20
MAX_EXTENSION_DEGREE = 4
MAX_PRIME = 2**31 - 1


def is_prime(n: int) -> bool:
    """Deterministic trial-division primality test (n < 2^31)."""
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class Field(ABC):
    """Abstract exact field."""

    characteristic: int
    degree: int
    zero: Any
    one: Any

    @property
    def order(self) -> Optional[int]:
        """Number of elements, or None for Q."""
        return None

    @property
    def is_finite(self) -> bool:
        return self.order is not None

    @property
    @abstractmethod
    def name(self) -> str: ...

    @abstractmethod
    def from_int(self, n: int) -> Any: ...

    @abstractmethod
    def add(self, a: Any, b: Any) -> Any: ...

    @abstractmethod
    def neg(self, a: Any) -> Any: ...

    @abstractmethod
    def mul(self, a: Any, b: Any) -> Any: ...

    @abstractmethod
    def inv(self, a: Any) -> Any: ...

    @abstractmethod
    def format(self, a: Any) -> str: ...

    def from_fraction(self, q: Fraction) -> Any:
        """Map a rational number into the field."""
        num = self.from_int(q.numerator)
        den = self.from_int(q.denominator)
        if self.is_zero(den):
            raise ParseError(
                f"Coefficient {q} has a denominator divisible by p={self.characteristic}"
            )
        return self.div(num, den)

    def sub(self, a: Any, b: Any) -> Any:
        return self.add(a, self.neg(b))

    def div(self, a: Any, b: Any) -> Any:
        return self.mul(a, self.inv(b))

    def is_zero(self, a: Any) -> bool:
        return a == self.zero

    def power(self, a: Any, n: int) -> Any:
        result = self.one
        base = a
        if n < 0:
            base = self.inv(a)
            n = -n
        while n:
            if n & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            n >>= 1
        return result

    def elements(self) -> Iterator[Any]:
        """Iterate over all elements of a finite field."""
        raise FieldError(f"{self.name} is infinite")

    def random_element(self, rng: random.Random) -> Any:
        """Uniform element for finite fields; small integers for Q."""
        raise NotImplementedError

    def axpy(self, dst: Dict[int, Any], src: Dict[int, Any], c: Any) -> None:
        """In place ``dst += c * src`` on sparse vectors, dropping zeros."""
        for k, v in src.items():
            nv = self.add(dst.get(k, self.zero), self.mul(c, v))
            if self.is_zero(nv):
                dst.pop(k, None)
            else:
                dst[k] = nv

    def scale(self, vec: Dict[int, Any], c: Any) -> Dict[int, Any]:
        if self.is_zero(c):
            return {}
        return {k: self.mul(c, v) for k, v in vec.items()}

    def __repr__(self) -> str:
        return f"<{type(self).__name__} {self.name}>"


class PrimeField(Field):
    """The prime field F_p with elements 0..p-1."""

    degree = 1

    def __init__(self, p: int):
        if not is_prime(p) or p > MAX_PRIME:
            raise FieldError(f"GF({p}) is not a supported prime field")
        self.characteristic = p
        self.p = p
        self.zero = 0
        self.one = 1

    @property
    def order(self) -> int:
        return self.p

    @property
    def name(self) -> str:
        return f"GF({self.p})"

    def from_int(self, n: int) -> int:
        return n % self.p

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.p

    def sub(self, a: int, b: int) -> int:
        return (a - b) % self.p

    def neg(self, a: int) -> int:
        return (-a) % self.p

    def mul(self, a: int, b: int) -> int:
        return (a * b) % self.p

    def inv(self, a: int) -> int:
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of zero in " + self.name)
        return pow(a, self.p - 2, self.p)

    def format(self, a: int) -> str:
        # symmetric representatives read better: p-1 prints as -1
        return str(a if a <= self.p // 2 else a - self.p)

    def elements(self) -> Iterator[int]:
        return iter(range(self.p))

    def random_element(self, rng: random.Random) -> int:
        return rng.randrange(self.p)

    def axpy(self, dst: Dict[int, int], src: Dict[int, int], c: int) -> None:
        p = self.p
        for k, v in src.items():
            nv = (dst.get(k, 0) + c * v) % p
            if nv:
                dst[k] = nv
            else:
                dst.pop(k, None)


class RationalField(Field):
    """The rational numbers with exact Fraction arithmetic."""

    characteristic = 0
    degree = 1

    def __init__(self) -> None:
        self.zero = Fraction(0)
        self.one = Fraction(1)

    @property
    def name(self) -> str:
        return "QQ"

    def from_int(self, n: int) -> Fraction:
        return Fraction(n)

    def from_fraction(self, q: Fraction) -> Fraction:
        return Fraction(q)

    def add(self, a: Fraction, b: Fraction) -> Fraction:
        return a + b

    def sub(self, a: Fraction, b: Fraction) -> Fraction:
        return a - b

    def neg(self, a: Fraction) -> Fraction:
        return -a

    def mul(self, a: Fraction, b: Fraction) -> Fraction:
        return a * b

    def inv(self, a: Fraction) -> Fraction:
        if a == 0:
            raise ZeroDivisionError("inverse of zero in QQ")
        return 1 / a

    def div(self, a: Fraction, b: Fraction) -> Fraction:
        return a / b

    def format(self, a: Fraction) -> str:
        return str(a)

    def random_element(self, rng: random.Random) -> Fraction:
        return Fraction(rng.randint(-3, 3))

    def axpy(self, dst: Dict[int, Fraction], src: Dict[int, Fraction], c: Fraction) -> None:
        for k, v in src.items():
            nv = dst.get(k, 0) + c * v
            if nv:
                dst[k] = nv
            else:
                dst.pop(k, None)


def _encode(digits: List[int], p: int) -> int:
    value = 0
    for d in reversed(digits):
        value = value * p + d
    return value


def _decode(value: int, p: int, k: int) -> List[int]:
    digits = []
    for _ in range(k):
        value, d = divmod(value, p)
        digits.append(d)
    return digits


def _power_table(p: int, k: int, low: List[int]) -> Optional[List[int]]:
    """Powers of the class of x modulo x^k + sum low[i] x^i, or None if x is not primitive."""
    q = p**k
    current = [0] * k
    current[0] = 1
    table = [1]
    for _ in range(1, q - 1):
        top = current[-1]
        shifted = [0] + current[:-1]
        current = [(shifted[i] - top * low[i]) % p for i in range(k)]
        code = _encode(current, p)
        if code == 1:
            return None
        table.append(code)
    return table


@lru_cache(maxsize=None)
def primitive_modulus(p: int, k: int) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
    """First primitive monic polynomial of degree k over F_p and its power table.

    Candidates are scanned in lexicographic order of their low coefficients,
    so the choice is fixed for every (p, k).
    """
    for code in range(1, p**k):
        low = _decode(code, p, k)
        if low[0] == 0:
            continue
        table = _power_table(p, k, low)
        if table is not None:
            logger.debug(f"GF({p}^{k}) modulus low coefficients {low}")
            return tuple(low), tuple(table)
    raise FieldError(f"No primitive polynomial of degree {k} over GF({p})")


class ExtensionField(Field):
    """F_{p^k} for k <= 4 with log/exp multiplication tables."""

    def __init__(self, p: int, k: int):
        if not is_prime(p):
            raise FieldError(f"Characteristic {p} is not prime")
        if k < 2 or k > MAX_EXTENSION_DEGREE:
            raise FieldError(f"Extension degree {k} outside 2..{MAX_EXTENSION_DEGREE}")
        if p**k > MAX_EXTENSION_ORDER:
            raise FieldError(f"GF({p}^{k}) is too large for table arithmetic")
        self.characteristic = p
        self.degree = k
        self.p = p
        self.q = p**k
        self.zero = 0
        self.one = 1
        self.modulus, exp = primitive_modulus(p, k)
        self._exp = list(exp) + list(exp)
        self._log = [0] * self.q
        for i, v in enumerate(exp):
            self._log[v] = i
        self._digit_weights = [p**i for i in range(k)]

    @property
    def order(self) -> int:
        return self.q

    @property
    def name(self) -> str:
        return f"GF({self.p})^{self.degree}"

    @property
    def generator(self) -> int:
        """The class of x, a primitive element."""
        return self.p if self.degree > 1 else 1

    def from_int(self, n: int) -> int:
        return n % self.p

    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        p = self.p
        result = 0
        for w in self._digit_weights:
            result += (((a // w) % p + (b // w) % p) % p) * w
        return result

    def neg(self, a: int) -> int:
        if self.p == 2:
            return a
        p = self.p
        result = 0
        for w in self._digit_weights:
            result += ((-(a // w)) % p) * w
        return result

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self._exp[self._log[a] + self._log[b]]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero in " + self.name)
        return self._exp[(self.q - 1 - self._log[a]) % (self.q - 1)]

    def format(self, a: int) -> str:
        digits = _decode(a, self.p, self.degree)
        terms = []
        for i in reversed(range(self.degree)):
            d = digits[i]
            if d == 0:
                continue
            if i == 0:
                terms.append(str(d))
            else:
                base = "a" if i == 1 else f"a^{i}"
                terms.append(base if d == 1 else f"{d}*{base}")
        return "+".join(terms) if terms else "0"

    def elements(self) -> Iterator[int]:
        return iter(range(self.q))

    def random_element(self, rng: random.Random) -> int:
        return rng.randrange(self.q)


@lru_cache(maxsize=None)
def make_field(characteristic: int, extension_degree: int = 1) -> Field:
    """Build (and cache) the field for a characteristic/extension degree pair."""
    if characteristic == 0:
        if extension_degree != 1:
            raise FieldError("Extensions of QQ are not supported")
        return RationalField()
    if extension_degree == 1:
        return PrimeField(characteristic)
    return ExtensionField(characteristic, extension_degree)
