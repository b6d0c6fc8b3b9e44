"""Eigenvalue specs, existence validation, and the explicit matrix pairs.

An EigenSpec is the classification input: the eigenvalue set of the first
generator's image plus the discrete choice that pins the representation
(a sign for dim 4, a fifth root of the determinant for dim 5).  The builders
construct the concrete triangular matrix pairs in exact cyclotomic arithmetic.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction

from .cyclolinalg import CycMatrix
from .errors import (
    InternalInconsistency,
    InvalidRange,
    InvalidSpec,
    MissingParam,
    NotCoprime,
)
from .exactfield import (
    MINUS_ONE,
    ONE,
    CycNumber,
    RootOfUnity,
    embed,
    roots_sum_to_zero,
    spec_conductor,
)

# validation statuses
VALID = "Valid"
REPEATED = "RepeatedEigenvalues"
EXISTENCE_FAILS = "ExistenceFails"
UNKNOWN_CONDITIONS = "UnknownConditions"


@dataclass(frozen=True)
class EigenSpec:
    """Eigenvalue set of dimension 2..5 with the discrete representation choice.

    The order of `eigenvalues` is presentational; every operation treats the
    set.  For dim 4, `d_sign` selects gamma^2 = d_sign * sqrt(det) with the
    canonical square root (half the reduced exponent of the determinant);
    the two signs enumerate the two inequivalent representations sharing the
    spectrum.  For dim 5, `gamma` is one of the five fifth roots of det.
    """

    dim: int
    eigenvalues: tuple[RootOfUnity, ...]
    d_sign: int | None = None
    gamma: RootOfUnity | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "eigenvalues", tuple(self.eigenvalues))
        if not 2 <= self.dim <= 5:
            raise InvalidSpec(f"dim must be in [2, 5], got {self.dim}")
        if len(self.eigenvalues) != self.dim:
            raise InvalidSpec(
                f"expected {self.dim} eigenvalues, got {len(self.eigenvalues)}"
            )
        if self.d_sign is not None:
            if self.dim != 4:
                raise InvalidSpec("d_sign is a dim-4 parameter")
            if self.d_sign not in (1, -1):
                raise InvalidSpec(f"d_sign must be +1 or -1, got {self.d_sign}")
        if self.gamma is not None:
            if self.dim != 5:
                raise InvalidSpec("gamma is a dim-5 parameter")
            if self.gamma**5 != self.determinant():
                raise InvalidSpec("gamma^5 must equal the eigenvalue product")

    @classmethod
    def from_exponents(
        cls,
        exponents,
        d_sign: int | None = None,
        gamma: RootOfUnity | str | None = None,
    ) -> EigenSpec:
        """Build from exponents given as Fractions or "k/n" strings."""
        roots = tuple(
            RootOfUnity.parse(e) if isinstance(e, str) else RootOfUnity(Fraction(e))
            for e in exponents
        )
        if isinstance(gamma, str):
            gamma = RootOfUnity.parse(gamma)
        return cls(len(roots), roots, d_sign=d_sign, gamma=gamma)

    def exponents(self) -> tuple[Fraction, ...]:
        return tuple(r.exponent for r in self.eigenvalues)

    def determinant(self) -> RootOfUnity:
        prod = ONE
        for r in self.eigenvalues:
            prod = prod * r
        return prod

    def is_distinct(self) -> bool:
        return len(set(self.eigenvalues)) == self.dim

    def gamma_squared(self) -> RootOfUnity | None:
        """The selected gamma^2 for dim 4, None when the sign is absent."""
        if self.dim != 4 or self.d_sign is None:
            return None
        root = self.determinant().canonical_sqrt()
        return root if self.d_sign == 1 else -root

    def conductor(self) -> int:
        extra = []
        g2 = self.gamma_squared()
        if g2 is not None:
            extra.append(g2.order)
        if self.gamma is not None:
            extra.append(self.gamma.order)
        return spec_conductor(self.eigenvalues, *extra)

    def to_json(self) -> dict:
        return {
            "dim": self.dim,
            "eigenvalues": [str(r) for r in self.eigenvalues],
            "d_sign": self.d_sign,
            "gamma": str(self.gamma) if self.gamma is not None else None,
        }


def _sign_for(eigenvalues: tuple[RootOfUnity, ...], target: RootOfUnity) -> int:
    """The stored sign under which the spec's gamma_squared() equals `target`."""
    prod = ONE
    for r in eigenvalues:
        prod = prod * r
    base = prod.canonical_sqrt()
    if target == base:
        return 1
    if target == -base:
        return -1
    raise InternalInconsistency("gamma^2 candidate is not a square root of det")


def galois_image(spec: EigenSpec, a: int) -> EigenSpec:
    """Apply zeta -> zeta^a to the spec, transporting the discrete choice."""
    n = spec.conductor()
    if math.gcd(a, n) != 1:
        raise NotCoprime(f"exponent {a} not coprime to conductor {n}")
    eigs = tuple(r**a for r in spec.eigenvalues)
    d_sign = None
    if spec.d_sign is not None:
        d_sign = _sign_for(eigs, spec.gamma_squared() ** a)
    gamma = spec.gamma**a if spec.gamma is not None else None
    return EigenSpec(spec.dim, eigs, d_sign=d_sign, gamma=gamma)


def scale_spec(spec: EigenSpec, chi: RootOfUnity) -> EigenSpec:
    """Multiply every eigenvalue by chi, transporting the discrete choice.

    The scaled representation has gamma^2 scaled by chi^2 (dim 4) and gamma
    scaled by chi (dim 5).
    """
    eigs = tuple(chi * r for r in spec.eigenvalues)
    d_sign = None
    if spec.d_sign is not None:
        d_sign = _sign_for(eigs, chi**2 * spec.gamma_squared())
    gamma = chi * spec.gamma if spec.gamma is not None else None
    return EigenSpec(spec.dim, eigs, d_sign=d_sign, gamma=gamma)


@dataclass(frozen=True)
class ValidationReport:
    """Outcome of the existence screen, with witnesses for each violation."""

    status: str
    witnesses: tuple[str, ...] = field(default=())

    def to_json(self) -> dict:
        return {"status": self.status, "witnesses": list(self.witnesses)}


_PAIR_PARTITIONS = (((0, 1), (2, 3)), ((0, 2), (1, 3)), ((0, 3), (1, 2)))


def validate_spec(spec: EigenSpec) -> ValidationReport:
    """Screen a spec against the irreducible-existence conditions.

    Repeated eigenvalues are reported first.  For dim 3 the conditions are
    lam_r^2 + lam_s*lam_t != 0 over distinct (r,s,t); for dim 4 both factors
    (lam_r^2 + gamma^2) and (gamma^2 + lam_r*lam_s + lam_t*lam_u) must be
    nonzero, which needs the sign parameter.  Dims 2 and 5 have no published
    conditions and return UnknownConditions.
    """
    lam = spec.eigenvalues
    repeats = tuple(
        f"eigenvalue[{i}] == eigenvalue[{j}] == {lam[i]}"
        for i, j in itertools.combinations(range(spec.dim), 2)
        if lam[i] == lam[j]
    )
    if repeats:
        return ValidationReport(REPEATED, repeats)
    if spec.dim == 3:
        bad = []
        for r, s, t in itertools.permutations(range(3)):
            if s > t:
                continue  # lam_s * lam_t is symmetric in (s, t)
            if roots_sum_to_zero((lam[r] * lam[r], lam[s] * lam[t])):
                bad.append(f"(r,s,t)=({r},{s},{t}): lam_r^2 + lam_s*lam_t = 0")
        return (
            ValidationReport(EXISTENCE_FAILS, tuple(bad))
            if bad
            else ValidationReport(VALID)
        )
    if spec.dim == 4:
        g2 = spec.gamma_squared()
        if g2 is None:
            raise MissingParam("dim-4 existence conditions need the sign parameter")
        bad = []
        for r in range(4):
            if roots_sum_to_zero((lam[r] * lam[r], g2)):
                bad.append(f"r={r}: lam_r^2 + gamma^2 = 0")
        for (r, s), (t, u) in _PAIR_PARTITIONS:
            if roots_sum_to_zero((g2, lam[r] * lam[s], lam[t] * lam[u])):
                bad.append(
                    f"(r,s|t,u)=({r},{s}|{t},{u}): "
                    "gamma^2 + lam_r*lam_s + lam_t*lam_u = 0"
                )
        return (
            ValidationReport(EXISTENCE_FAILS, tuple(bad))
            if bad
            else ValidationReport(VALID)
        )
    return ValidationReport(UNKNOWN_CONDITIONS)


# -- matrix builders ----------------------------------------------------------


def build_d3(theta: RootOfUnity, phi: RootOfUnity) -> tuple[CycMatrix, CycMatrix]:
    """Triangular pair with diagonals (1, theta, phi) and (phi, theta, 1)."""
    spec = EigenSpec(3, (ONE, theta, phi))
    report = validate_spec(spec)
    if report.status != VALID:
        raise InvalidSpec(f"spec {{1, {theta}, {phi}}} is {report.status}")
    n = spec_conductor(spec.eigenvalues)
    t = embed(theta, n)
    f = embed(phi, n)
    ft = embed(phi / theta, n)
    a = CycMatrix.from_rows(
        [
            [1, ft + t, t],
            [0, t, t],
            [0, 0, f],
        ],
        n,
    )
    b = CycMatrix.from_rows(
        [
            [f, 0, 0],
            [-t, t, 0],
            [t, -ft - t, 1],
        ],
        n,
    )
    return a, b


def build_d4_block(u: RootOfUnity, d_sign: int) -> tuple[CycMatrix, CycMatrix]:
    """The block-imprimitive dim-4 pair with diagonal (1, -1, u, -u).

    d_sign is the literal D = +-1 substituted into the entries.  u must not
    be a 4th root of unity (else the spectrum {1, -1, u, -u} degenerates).
    """
    if d_sign not in (1, -1):
        raise InvalidSpec(f"d_sign must be +1 or -1, got {d_sign}")
    if u.order in (1, 2, 4):
        raise InvalidSpec(f"u must not be a 4th root of unity, got order {u.order}")
    n = spec_conductor((u,))
    uu = embed(u, n)
    d = d_sign
    # with d = +-1: 1/d^2 + 1/d + 1 = 2 + d and d^3 + d^2 + d = 2d + 1
    a = CycMatrix.from_rows(
        [
            [1, -(2 + d), (2 + d) * uu, -uu],
            [0, -1, (d + 1) * uu, -uu],
            [0, 0, uu, -uu],
            [0, 0, 0, -uu],
        ],
        n,
    )
    b = CycMatrix.from_rows(
        [
            [-uu, 0, 0, 0],
            [-uu, uu, 0, 0],
            [-d, d + 1, -1, 0],
            [-d, 2 * d + 1, -(2 + d), 1],
        ],
        n,
    )
    return a, b


def block_spec(u: RootOfUnity, d_sign: int) -> EigenSpec:
    """The EigenSpec matching build_d4_block, with the sign stored canonically.

    The representation built with literal D has gamma^2 = D*lam_1*lam_4 = -D*u
    in the builder's eigenvalue order; the stored sign re-encodes that value
    against the canonical square root of the determinant.
    """
    if d_sign not in (1, -1):
        raise InvalidSpec(f"d_sign must be +1 or -1, got {d_sign}")
    if u.order in (1, 2, 4):
        raise InvalidSpec(f"u must not be a 4th root of unity, got order {u.order}")
    eigs = (ONE, MINUS_ONE, u, -u)
    target = -u if d_sign == 1 else u
    return EigenSpec(4, eigs, d_sign=_sign_for(eigs, target))


def _qpow(conductor: int):
    """Helper producing exact powers q^k with q = zeta_conductor."""

    def q(k: int) -> CycNumber:
        return embed(RootOfUnity.of(k, conductor), conductor)

    return q


def build_so7(ell: int, d_sign: int = 1) -> tuple[CycMatrix, CycMatrix]:
    """The 4x4 spin-representation pair at even level ell >= 14.

    Only the D = +q^4 matrices have an explicit form; d_sign = -1 is rejected
    rather than guessed.
    """
    if ell % 2 != 0 or ell < 14:
        raise InvalidRange(f"ell must be even and >= 14, got {ell}")
    if d_sign != 1:
        raise InvalidSpec("only the D = +q^4 matrices are available")
    n = 2 * ell
    q = _qpow(n)
    a = CycMatrix.from_rows(
        [
            [1, q(12) + q(8) + q(4), -q(6) - q(2) - q(-2), -q(10)],
            [0, q(12), -q(6) - q(2), -q(10)],
            [0, 0, -q(6), -q(10)],
            [0, 0, 0, -q(10)],
        ],
        n,
    )
    b = CycMatrix.from_rows(
        [
            [-q(10), 0, 0, 0],
            [q(6), -q(6), 0, 0],
            [q(16), -q(16) - q(12), q(12), 0],
            [-q(12), q(12) + q(8) + q(4), -q(8) - q(4) - 1, 1],
        ],
        n,
    )
    return a, b


def build_so9(ell: int) -> tuple[CycMatrix, CycMatrix]:
    """The 5x5 spin-representation pair at even level ell >= 18 (gamma = q^12)."""
    if ell % 2 != 0 or ell < 18:
        raise InvalidRange(f"ell must be even and >= 18, got {ell}")
    n = 2 * ell
    q = _qpow(n)
    a = CycMatrix.from_rows(
        [
            [
                1,
                q(8) - q(6) + q(4) - q(2),
                -q(14) + q(12) - 2 * q(10) + q(8) - q(6),
                -q(16) + q(14) - q(12) + q(10),
                q(16),
            ],
            [0, q(8), -q(14) + q(12) - q(10), -q(16) + q(14) - q(12), q(16)],
            [0, 0, -q(14), -q(16) + q(14), q(16)],
            [0, 0, 0, -q(18), q(18)],
            [0, 0, 0, 0, q(20)],
        ],
        n,
    )
    b = CycMatrix.from_rows(
        [
            [q(20), 0, 0, 0, 0],
            [q(18), -q(18), 0, 0, 0],
            [q(16), -q(16) + q(14), -q(14), 0, 0],
            [q(16), -q(16) + q(14) - q(12), -q(14) + q(12) - q(10), q(8), 0],
            [
                q(16),
                -q(16) + q(14) - q(12) + q(10),
                -q(14) + q(12) - 2 * q(10) + q(8) - q(6),
                q(8) - q(6) + q(4) - q(2),
                1,
            ],
        ],
        n,
    )
    return a, b
