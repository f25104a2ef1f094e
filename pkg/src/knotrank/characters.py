"""Rank characters of witness knots and linear-independence certificates.

The rank of a witness is the top knot-Floer rank of its knot; it is
multiplicative under connected sums, so its p-adic valuations form a
family of additive characters.  A certificate exhibits witnesses whose
largest rank primes strictly increase, making the evaluation matrix of
those characters triangular with nonzero diagonal, hence of full rank.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from . import numtheory, pretzel
from .numtheory import NotPrime, PrimePower
from .pretzel import WitnessKnot
from .seifert import rank_int


class SearchExhausted(RuntimeError):
    """The witness scan ran out before enough primes were collected."""


def rank_value(w: WitnessKnot) -> int:
    """The rank character: top knot-Floer rank, insensitive to stabilization."""
    return pretzel.hfk_top_rank(w)


def prime_component(w: WitnessKnot, p: int) -> int:
    """Exponent of the prime p in the rank of w."""
    if not numtheory.is_prime(p):
        raise NotPrime(f"{p} is not prime")
    r = rank_value(w)
    e = 0
    while r % p == 0:
        r //= p
        e += 1
    return e


def max_prime(w: WitnessKnot) -> int:
    """Largest prime dividing the rank of w, or 1 for rank 1."""
    factors = numtheory.factorize(rank_value(w))
    return factors[-1].prime if factors else 1


@dataclass(frozen=True)
class CertifiedWitness:
    """A witness with its rank, full factorization, and largest rank prime."""

    witness: WitnessKnot
    rank: int
    factorization: tuple[PrimePower, ...]
    max_prime: int

    def to_json(self) -> dict:
        return {
            "witness": self.witness.to_json(),
            "rank": self.rank,
            "factorization": [[p, e] for p, e in self.factorization],
            "max_prime": self.max_prime,
        }

    @classmethod
    def from_json(cls, data: dict) -> "CertifiedWitness":
        try:
            w = WitnessKnot.from_json(data["witness"])
            rank = data["rank"]
            factorization = tuple(
                PrimePower(int(p), int(e)) for p, e in data["factorization"]
            )
            mp = data["max_prime"]
        except (KeyError, TypeError, ValueError) as exc:
            raise ValueError(f"malformed certified witness JSON: {exc}") from exc
        return cls(w, rank, factorization, mp)


def certify(w: WitnessKnot) -> CertifiedWitness:
    """Attach rank, factorization, and max prime to a witness."""
    r = rank_value(w)
    factors = tuple(numtheory.factorize(r))
    return CertifiedWitness(w, r, factors, factors[-1].prime if factors else 1)


def _exponent_in(factorization: tuple[PrimePower, ...], p: int) -> int:
    for q, e in factorization:
        if q == p:
            return e
    return 0


@dataclass(frozen=True)
class IndependenceCertificate:
    """Witnesses, their strictly increasing max primes, and the evaluation matrix.

    ``evaluation[i][j]`` is the exponent of ``selected_primes[i]`` in the
    rank of ``witnesses[j]``.  Nothing is validated at construction;
    ``verify_certificate`` is the trust boundary.
    """

    witnesses: tuple[CertifiedWitness, ...]
    selected_primes: tuple[int, ...]
    evaluation: tuple[tuple[int, ...], ...]

    def to_json(self) -> dict:
        return {
            "witnesses": [cw.to_json() for cw in self.witnesses],
            "primes": list(self.selected_primes),
            "matrix": [list(row) for row in self.evaluation],
        }

    @classmethod
    def from_json(cls, data: dict) -> "IndependenceCertificate":
        try:
            witnesses = tuple(CertifiedWitness.from_json(w) for w in data["witnesses"])
            primes = tuple(int(p) for p in data["primes"])
            matrix = tuple(tuple(int(v) for v in row) for row in data["matrix"])
        except (KeyError, TypeError, ValueError) as exc:
            raise ValueError(f"malformed certificate JSON: {exc}") from exc
        return cls(witnesses, primes, matrix)

    def to_csv(self) -> str:
        """Evaluation matrix as CSV: rows are primes, columns are witnesses."""
        header = ["prime"] + [f"witness_{cw.witness.index}" for cw in self.witnesses]
        lines = [",".join(header)]
        for p, row in zip(self.selected_primes, self.evaluation):
            lines.append(",".join([str(p)] + [str(v) for v in row]))
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class VerificationResult:
    ok: bool
    reason: Optional[str] = None

    def __bool__(self) -> bool:
        return self.ok


def build_certificate(count: int, search_limit: int) -> IndependenceCertificate:
    """Greedy certificate over witness indices 1..search_limit.

    A witness is kept iff its max prime strictly exceeds the last kept
    one (rank-1 witnesses never qualify), until ``count`` are collected.
    """
    if count < 1:
        raise ValueError(f"count must be >= 1, got {count}")
    if search_limit < 1:
        raise ValueError(f"search_limit must be >= 1, got {search_limit}")
    kept: list[CertifiedWitness] = []
    last = 1
    for index in range(1, search_limit + 1):
        cw = certify(pretzel.witness(index))
        if cw.max_prime > last:
            kept.append(cw)
            last = cw.max_prime
            if len(kept) == count:
                break
    else:
        raise SearchExhausted(
            f"found only {len(kept)} of {count} witnesses with indices <= {search_limit}"
        )
    primes = tuple(cw.max_prime for cw in kept)
    matrix = tuple(
        tuple(_exponent_in(cw.factorization, p) for cw in kept) for p in primes
    )
    cert = IndependenceCertificate(tuple(kept), primes, matrix)
    check = verify_certificate(cert)
    if not check:
        raise AssertionError(f"freshly built certificate failed verification: {check.reason}")
    return cert


def verify_certificate(cert: IndependenceCertificate) -> VerificationResult:
    """Recheck a certificate from its stored factorizations alone.

    True implies the selected prime-component characters are linearly
    independent: the evaluation matrix is triangular with nonzero
    diagonal and has full rank over the rationals.
    """

    def fail(reason: str) -> VerificationResult:
        return VerificationResult(False, reason)

    ws = cert.witnesses
    primes = cert.selected_primes
    matrix = cert.evaluation
    k = len(ws)
    if k == 0:
        return fail("certificate is empty")
    if len(primes) != k or len(matrix) != k or any(len(row) != k for row in matrix):
        return fail("witness, prime, and matrix dimensions disagree")
    for i in range(1, k):
        if primes[i] <= primes[i - 1]:
            return fail(f"selected primes are not strictly increasing at position {i}")
    for i in range(k):
        for j in range(i):
            if matrix[i][j] != 0:
                return fail(f"triangularity violated at evaluation[{i}][{j}]")
        if matrix[i][i] < 1:
            return fail(f"diagonal entry evaluation[{i}][{i}] is not positive")
    for i, p in enumerate(primes):
        if not numtheory.is_prime(p):
            return fail(f"selected value {p} at position {i} is not prime")
    for j, cw in enumerate(ws):
        if cw.rank != pretzel.hfk_top_rank(cw.witness):
            return fail(f"witness {j}: stored rank {cw.rank} does not match its knot")
        product = 1
        previous = 1
        for p, e in cw.factorization:
            if e < 1:
                return fail(f"witness {j}: exponent of {p} is not positive")
            if not numtheory.is_prime(p):
                return fail(f"witness {j}: factor {p} is not prime")
            if p <= previous:
                return fail(f"witness {j}: factorization primes are not ascending")
            previous = p
            product *= p**e
        if product != cw.rank:
            return fail(f"witness {j}: factorization does not multiply back to the rank")
        expected_max = cw.factorization[-1].prime if cw.factorization else 1
        if cw.max_prime != expected_max:
            return fail(f"witness {j}: stored max prime {cw.max_prime} is wrong")
    for i, p in enumerate(primes):
        for j, cw in enumerate(ws):
            if matrix[i][j] != _exponent_in(cw.factorization, p):
                return fail(f"evaluation[{i}][{j}] does not match the factorizations")
    if rank_int(matrix) != k:
        return fail("evaluation matrix is rank deficient over the rationals")
    return VerificationResult(True)


def witness_for_prime(p: int) -> CertifiedWitness:
    """The certified witness whose rank the prime p divides.

    Requires p prime and p = 1 (mod 4); the index comes from the square
    root of -1 case split, so prime_component(witness, p) >= 1.
    """
    index = numtheory.witness_index(p)
    return certify(pretzel.witness(index))
