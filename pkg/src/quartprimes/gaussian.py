from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class GaussianInt:
    """re + im*i in Z[i]."""

    re: int
    im: int = 0

    @classmethod
    def coerce(cls, z: "GaussianInt | int") -> "GaussianInt":
        return z if isinstance(z, GaussianInt) else cls(int(z), 0)

    def __add__(self, other):
        o = GaussianInt.coerce(other)
        return GaussianInt(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self):
        return GaussianInt(-self.re, -self.im)

    def __sub__(self, other):
        return self + (-GaussianInt.coerce(other))

    def __rsub__(self, other):
        return GaussianInt.coerce(other) - self

    def __mul__(self, other):
        o = GaussianInt.coerce(other)
        return GaussianInt(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers leave Z[i]")
        out, base = GaussianInt(1), self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def conjugate(self) -> "GaussianInt":
        return GaussianInt(self.re, -self.im)

    def norm(self) -> int:
        return self.re * self.re + self.im * self.im

    def divides(self, other: "GaussianInt | int") -> bool:
        o = GaussianInt.coerce(other)
        if self.norm() == 0:
            return o.norm() == 0
        num = o * self.conjugate()
        n = self.norm()
        return num.re % n == 0 and num.im % n == 0

    def __str__(self) -> str:
        if self.im == 0:
            return str(self.re)
        sign = "+" if self.im > 0 else "-"
        return f"{self.re}{sign}{abs(self.im)}i"
