"""Text certificates for Proven search verdicts and their independent replay.

Layout::

    vknot-certificate 1
    from <code as given>
    to <code as given>
    from-canonical <canonical form>
    to-canonical <canonical form>
    regime <virtual|welded|all-forbidden>
    budget max_arrows=<n> max_nodes=<n> max_depth=<n> seed=<n>
    moves <count>
    <one move per line>

The thread count is left out on purpose: it never changes the verdict, so
certificates from different thread counts are byte-identical.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import PreconditionViolated, VKnotError
from .gauss import GaussDiagram, canonical_form, parse
from .moves import Move, MoveSet, apply

__all__ = ["Certificate", "CertificateError", "write_certificate", "read_certificate", "replay"]

MAGIC = "vknot-certificate 1"


class CertificateError(VKnotError, ValueError):
    """A certificate is malformed or does not replay."""


@dataclass(frozen=True)
class Certificate:
    source: str
    target: str
    source_canonical: str
    target_canonical: str
    regime: MoveSet
    budget: tuple
    moves: tuple


def write_certificate(d1: GaussDiagram, d2: GaussDiagram, regime: MoveSet, budget, path) -> str:
    """Render a certificate for ``path`` (a sequence of moves from ``d1`` to ``d2``)."""
    max_arrows = budget.resolve_arrows(d1, d2)
    lines = [
        MAGIC,
        f"from {d1}",
        f"to {d2}",
        f"from-canonical {canonical_form(d1)}",
        f"to-canonical {canonical_form(d2)}",
        f"regime {regime.value}",
        f"budget max_arrows={max_arrows} max_nodes={budget.max_nodes} "
        f"max_depth={budget.max_depth} seed={budget.seed}",
        f"moves {len(path)}",
    ]
    lines.extend(m.to_line() for m in path)
    return "\n".join(lines) + "\n"


def _field(line, name):
    head, _, rest = line.partition(" ")
    if head != name or not rest:
        raise CertificateError(f"expected '{name} ...', got {line!r}")
    return rest.strip()


def read_certificate(text: str) -> Certificate:
    lines = [ln.rstrip("\r") for ln in text.splitlines()]
    while lines and not lines[-1].strip():
        lines.pop()
    if len(lines) < 8 or lines[0] != MAGIC:
        raise CertificateError("not a vknot certificate")
    try:
        regime = MoveSet.from_name(_field(lines[5], "regime"))
        budget = []
        for item in _field(lines[6], "budget").split():
            k, _, v = item.partition("=")
            budget.append((k, int(v)))
        count = int(_field(lines[7], "moves"))
        moves = tuple(Move.from_line(ln) for ln in lines[8:])
    except (ValueError, KeyError) as exc:
        raise CertificateError(str(exc)) from exc
    if count != len(moves):
        raise CertificateError(f"header announces {count} moves, found {len(moves)}")
    return Certificate(
        _field(lines[1], "from"),
        _field(lines[2], "to"),
        _field(lines[3], "from-canonical"),
        _field(lines[4], "to-canonical"),
        regime,
        tuple(budget),
        moves,
    )


def replay(cert: Certificate | str) -> GaussDiagram:
    """Re-apply every move and check the endpoint; returns the final diagram.

    Raises :class:`CertificateError` on any mismatch.
    """
    if isinstance(cert, str):
        cert = read_certificate(cert)
    try:
        d = parse(cert.source)
        target = parse(cert.target)
    except ValueError as exc:
        raise CertificateError(f"endpoint does not parse: {exc}") from exc
    if canonical_form(d) != cert.source_canonical or canonical_form(target) != cert.target_canonical:
        raise CertificateError("canonical forms in the header do not match the endpoints")
    allowed = cert.regime.kinds
    for i, m in enumerate(cert.moves, 1):
        if m.kind not in allowed:
            raise CertificateError(f"move {i} ({m.kind.value}) is not allowed in regime {cert.regime.value}")
        try:
            d = apply(d, m)
        except PreconditionViolated as exc:
            raise CertificateError(f"move {i} does not apply: {exc}") from exc
    if canonical_form(d) != cert.target_canonical:
        raise CertificateError(f"path ends at {canonical_form(d)}, not {cert.target_canonical}")
    return d
