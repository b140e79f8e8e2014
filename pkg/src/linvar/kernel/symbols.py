"""Symbol table and the fixed variable order used for canonical forms.

Documented symbols come first, in the order below; any other name sorts after
them alphabetically.  The order drives the graded-lex monomial order, the
choice of monic denominator and every serialized expression.
"""

from __future__ import annotations

DOCUMENTED_ORDER: tuple[str, ...] = (
    "alpha_p",
    "alpha_prime",
    "alpha_11",
    "alpha_12",
    "alpha_21",
    "alpha_22",
    "log_u",
    "u",
    "chi_u",
    "k",
    "Delta",
    "L",
    "L2",
    "chi",
    "delta",
    "phi",
)

# Frozen short names for human-facing output.
SHORT_NAMES: dict[str, str] = {
    "alpha_p": "a",
    "alpha_prime": "ap",
    "alpha_11": "a11",
    "alpha_12": "a12",
    "alpha_21": "a21",
    "alpha_22": "a22",
    "Delta": "D",
    "log_u": "L_u",
}

LATEX_NAMES: dict[str, str] = {
    "alpha_p": r"\alpha_p",
    "alpha_prime": r"\alpha_p'",
    "alpha_11": r"\alpha_p^{(1,1)}",
    "alpha_12": r"\alpha_p^{(1,2)}",
    "alpha_21": r"\alpha_p^{(2,1)}",
    "alpha_22": r"\alpha_p^{(2,2)}",
    "Delta": r"\Delta",
    "log_u": r"\log_p u",
    "chi_u": r"\chi(\mathrm{rec}(u))^{k-1}",
    "chi": r"\chi^{k-1}",
    "delta": r"\delta",
    "phi": r"\phi",
    "L": r"\mathcal{L}_6",
    "L2": r"\mathcal{L}_2",
}

_RANK = {name: i for i, name in enumerate(DOCUMENTED_ORDER)}


def symbol_key(name: str) -> tuple:
    """Sort key realizing the documented symbol order."""
    rank = _RANK.get(name)
    if rank is None:
        return (1, 0, name)
    return (0, rank, "")


def sort_symbols(names) -> tuple[str, ...]:
    return tuple(sorted(set(names), key=symbol_key))


def short_name_table() -> str:
    return ", ".join(f"{long}->{short}" for long, short in SHORT_NAMES.items())
