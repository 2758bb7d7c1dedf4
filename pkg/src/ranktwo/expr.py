"""
Scalar expressions of the rank-2 table.

An expression is ``(-1)^ε · ζ^a · q^e`` where ζ is a primitive cube root of
unity (fixed per instantiation) and q the row parameter. Text form: factors
joined by ``*``, each one of ``-1``, ``1``, ``z3``, ``z3^a``, ``q``, ``q^e``,
with an optional leading ``-`` (e.g. ``-q^-2``, ``-z3^2*q``).
"""

import re
from dataclasses import dataclass
from typing import List, Optional

from ..errors import InvalidArgument, ParseError
from ..scalar import UnityRoot, make

Z3 = make(1, 3)

_FACTOR = re.compile(r"^(?:(?P<minus_one>-1)|(?P<one>1)|z3(?:\^(?P<a>-?\d+))?|q(?:\^(?P<e>-?\d+))?)$")


@dataclass(frozen=True)
class ScalarExpr:
    sign: int = 0
    zeta_power: int = 0
    q_power: int = 0

    @property
    def mentions_q(self) -> bool:
        return self.q_power != 0

    @property
    def mentions_zeta(self) -> bool:
        return self.zeta_power % 3 != 0

    def constant(self, zeta: UnityRoot = Z3) -> UnityRoot:
        """The q-free factor (-1)^ε · ζ^a."""
        value = zeta ** self.zeta_power
        return -value if self.sign else value

    def evaluate(self, q: Optional[UnityRoot] = None, zeta: UnityRoot = Z3) -> UnityRoot:
        if self.q_power and q is None:
            raise InvalidArgument("expression mentions q but no value was given")
        value = self.constant(zeta)
        return value * q ** self.q_power if self.q_power else value

    def solve(self, target: UnityRoot, zeta: UnityRoot = Z3) -> List[UnityRoot]:
        """
        Every q with evaluate(q) = target.

        For q_power = 0 the answer is "any q" when the constant matches; this
        returns [] and callers check the constant directly.
        """
        if not self.q_power:
            return []
        rhs = target / self.constant(zeta)
        e = self.q_power
        if e < 0:
            rhs, e = rhs.inverse(), -e
        # q^e = exp(2πi k/N)  <=>  q = exp(2πi (k/N + m)/e), m = 0..e-1
        return sorted({make(rhs.num + m * rhs.den, rhs.den * e) for m in range(e)})

    def __str__(self) -> str:
        factors = []
        if self.zeta_power % 3:
            factors.append("z3" if self.zeta_power % 3 == 1 else "z3^2")
        if self.q_power:
            factors.append("q" if self.q_power == 1 else f"q^{self.q_power}")
        body = "*".join(factors)
        if not body:
            return "-1" if self.sign else "1"
        return f"-{body}" if self.sign else body


def parse_expr(text: str, position: int = 0) -> ScalarExpr:
    token = text.strip()
    if not token:
        raise ParseError("empty expression", text, position)

    sign = 0
    body = token
    if body.startswith("-") and body != "-1":
        sign, body = 1, body[1:]

    zeta_power = q_power = 0
    for factor in body.split("*"):
        match = _FACTOR.match(factor.strip())
        if match is None:
            raise ParseError("malformed table expression", token, position)
        if match.group("minus_one"):
            sign ^= 1
        elif match.group("one"):
            continue
        elif factor.strip().startswith("z3"):
            zeta_power += int(match.group("a") or 1)
        else:
            q_power += int(match.group("e") or 1)

    return ScalarExpr(sign=sign, zeta_power=zeta_power % 3, q_power=q_power)
