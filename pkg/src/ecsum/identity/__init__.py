"""Machine checks of the three-point identities, exact or randomized."""

from __future__ import annotations

import multiprocessing as mp
import time
from dataclasses import asdict, dataclass

from .polynomial import PolyRing, SparsePolynomial, curve_normal_form, poly_arith
from .prover import STATEMENTS, check_identity, prove_exact
from .rational import RationalExpression
from .schwartz_zippel import DEFAULT_TRIALS, MERSENNE61, program_for, sz_check

EXACT = "exact"
SZ = "schwartz-zippel"

# CLI names; "theorem2" checks both coordinates
IDENTITY_NAMES = ("eq2", "lemma", "theorem2", "theorem2_x", "theorem2_y", "detm3")


@dataclass
class Verdict:
    identity: str
    mode: str
    result: bool
    trials: int | None
    prime: int | None
    elapsed_ms: int

    def to_json(self) -> dict:
        return asdict(self)


def _exact_names(name: str) -> list[str]:
    return ["theorem2_x", "theorem2_y"] if name == "theorem2" else [name]


def _exact_worker(names, conn):
    try:
        conn.send(all(prove_exact(n) for n in names))
    finally:
        conn.close()


def _exact_with_timeout(names: list[str], timeout: float | None) -> bool | None:
    """Run the exact checks; None when they exceed ``timeout`` seconds."""
    if timeout is None:
        return all(prove_exact(n) for n in names)
    ctx = mp.get_context("fork")
    recv, send = ctx.Pipe(duplex=False)
    proc = ctx.Process(target=_exact_worker, args=(names, send), daemon=True)
    proc.start()
    send.close()
    try:
        if recv.poll(timeout):
            try:
                return recv.recv()
            except EOFError:
                raise RuntimeError("exact prover worker died") from None
        return None
    finally:
        proc.kill()
        proc.join()
        recv.close()


def parse_identity(name: str) -> str:
    if name in IDENTITY_NAMES:
        return name
    if name.startswith("detm:"):
        n = name.split(":", 1)[1]
        if n.isdigit() and int(n) >= 2:
            return "detm3" if int(n) == 3 else f"detm:{int(n)}"
    raise ValueError(f"unknown identity {name!r}")


def prove(
    name: str,
    mode: str = "auto",
    timeout: float | None = 60.0,
    trials: int = DEFAULT_TRIALS,
    prime: int = MERSENNE61,
    seed: int = 0,
) -> Verdict:
    """Check a named identity.

    ``mode`` is ``"exact"``, ``"schwartz-zippel"`` or ``"auto"``. Auto runs
    the exact check where one exists and falls back to randomized testing
    when it exceeds ``timeout``; ``detm:n`` for ``n != 3`` is randomized only.
    """
    name = parse_identity(name)
    start = time.perf_counter()
    exact_available = not name.startswith("detm:")
    if mode not in (EXACT, SZ, "auto"):
        raise ValueError(f"unknown mode {mode!r}")
    if mode == EXACT and not exact_available:
        raise ValueError(f"{name} has no exact check")
    if mode != SZ and exact_available:
        result = _exact_with_timeout(_exact_names(name), None if mode == EXACT else timeout)
        if result is not None:
            ms = round((time.perf_counter() - start) * 1000)
            return Verdict(name, EXACT, result, None, None, ms)
    result = sz_check(program_for(name), trials, prime, seed)
    ms = round((time.perf_counter() - start) * 1000)
    return Verdict(name, SZ, result, trials, prime, ms)


__all__ = [
    "EXACT",
    "IDENTITY_NAMES",
    "PolyRing",
    "RationalExpression",
    "STATEMENTS",
    "SZ",
    "SparsePolynomial",
    "Verdict",
    "check_identity",
    "curve_normal_form",
    "poly_arith",
    "prove",
    "prove_exact",
    "sz_check",
]
