"""Family presets: the diagonal characters of the two-parameter ordinary family.

A preset file is a JSON object with these keys::

    theta1, theta2   {"cyc": [c0, c1, c2]}          chi_cyc^(c0 + c1*s1 + c2*s2)
    mu1, mu2         {"frob": expr, "partials": [expr, expr]}
                                                    unramified; value at Frob_p
                                                    and its s1-, s2-partials
    gl2_mu           {"frob": expr, "derivative": expr}
                                                    one-variable Hida character
    mu1_power, mu2_power
                     integers e with mu_i(2s, s) = mu^e(s + 2)

Expressions use the symbol table of :mod:`linvar.kernel.symbols`
(``alpha_p^-3``, ``alpha_11`` ...).  ``cyc`` entries may be ``"p/q"`` strings.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources
from pathlib import Path

from .characters import OneVariableCharacter, PadicCharacter
from .kernel import parse


class PresetError(ValueError):
    pass


@dataclass(frozen=True)
class FamilyPreset:
    theta1: PadicCharacter
    theta2: PadicCharacter
    mu1: PadicCharacter
    mu2: PadicCharacter
    gl2_mu: OneVariableCharacter
    mu1_power: int = -3
    mu2_power: int = -1


def _cyc(entry, name) -> PadicCharacter:
    try:
        c = [Fraction(x) for x in entry["cyc"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise PresetError(f"{name}: expected {{'cyc': [c0, c1, c2]}}") from exc
    if len(c) != 3:
        raise PresetError(f"{name}: cyc needs three coefficients")
    return PadicCharacter.cyclotomic(*c, name=name)


def _unr(entry, name) -> PadicCharacter:
    try:
        d1, d2 = entry["partials"]
        return PadicCharacter.unramified(parse(entry["frob"]), parse(d1), parse(d2), name=name)
    except (KeyError, TypeError, ValueError) as exc:
        raise PresetError(f"{name}: expected {{'frob': expr, 'partials': [expr, expr]}}") from exc


def preset_from_dict(data: dict) -> FamilyPreset:
    missing = {"theta1", "theta2", "mu1", "mu2", "gl2_mu"} - set(data)
    if missing:
        raise PresetError(f"preset is missing {sorted(missing)}")
    g = data["gl2_mu"]
    try:
        gl2 = OneVariableCharacter(parse(g["frob"]), parse(g["derivative"]))
    except (KeyError, TypeError, ValueError) as exc:
        raise PresetError("gl2_mu: expected {'frob': expr, 'derivative': expr}") from exc
    return FamilyPreset(
        theta1=_cyc(data["theta1"], "theta1"),
        theta2=_cyc(data["theta2"], "theta2"),
        mu1=_unr(data["mu1"], "mu1"),
        mu2=_unr(data["mu2"], "mu2"),
        gl2_mu=gl2,
        mu1_power=int(data.get("mu1_power", -3)),
        mu2_power=int(data.get("mu2_power", -1)),
    )


def load_preset(path: str | Path | None = None) -> FamilyPreset:
    """Load a preset file; the packaged GSp(4) family when ``path`` is None."""
    if path is None:
        text = resources.files("linvar").joinpath("presets/gsp4_family.json").read_text()
    else:
        try:
            text = Path(path).read_text()
        except OSError as exc:
            raise PresetError(f"cannot read preset {path}: {exc}") from exc
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise PresetError(f"invalid preset JSON: {exc}") from exc
    return preset_from_dict(data)
