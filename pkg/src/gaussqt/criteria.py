"""EPR correlation, coherent-state teleportation fidelity, and classification.

For a two-mode covariance matrix with blocks A, B, C the quality of
unit-gain coherent-state teleportation through the state is governed by
the 2x2 matrix

    M = A - (C sigma_z + sigma_z C^T) + sigma_z B sigma_z + I,

which is symmetric positive definite for every physical state.  The
fidelity is F = 1/sqrt(det M), teleportation beats the classical channel
iff det M < 4, and the EPR uncertainty Delta = <d^2(x_a - x_b)> +
<d^2(p_a + p_b)> satisfies Tr M = Delta + 2, which makes EPR correlation
(Delta < 2) sufficient for det M < 4 by the AM-GM inequality.

All comparisons against the boundaries 2 and 4 are strict with no
tolerance band; raw values are always reported so consumers can apply
their own thresholds.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from . import core
from .core import CanonicalParams, PHYSICALITY_TOL
from .errors import NumericalDomainError

__all__ = [
    "CriteriaReport",
    "Classification",
    "epr_uncertainty",
    "epr_degree",
    "m_matrix",
    "fidelity",
    "detm_values",
    "detm_canonical",
    "detm_epsilon_values",
    "detm_epsilon_form",
    "qt_epr_values",
    "qt_epr_bound",
    "classify",
    "report_to_json",
]

_I2 = np.eye(2)


def _delta_raw(V: np.ndarray) -> np.ndarray:
    # <d^2(x_a - x_b)> + <d^2(p_a + p_b)> straight from the entries
    return (
        V[..., 0, 0] + V[..., 2, 2] - 2.0 * V[..., 0, 2]
        + V[..., 1, 1] + V[..., 3, 3] + 2.0 * V[..., 1, 3]
    )


def _m_raw(V: np.ndarray) -> np.ndarray:
    A = V[..., :2, :2]
    B = V[..., 2:, 2:]
    C = V[..., :2, 2:]
    SZ = core.SIGMA_Z
    Ct = np.swapaxes(C, -1, -2)
    return A - (C @ SZ + SZ @ Ct) + SZ @ B @ SZ + _I2


def _scalar_or_array(out: np.ndarray):
    return float(out) if out.ndim == 0 else out


def epr_uncertainty(V):
    """EPR uncertainty Delta = V11 + V33 - 2 V13 + V22 + V44 + 2 V24.

    Values below 2 mean the state is EPR correlated.  Stacked input
    broadcasts.
    """
    V = core.require_physical(V)
    return _scalar_or_array(_delta_raw(V))


def epr_degree(V):
    """Degree of EPR correlation, max(0, 2 - Delta)."""
    V = core.require_physical(V)
    return _scalar_or_array(np.maximum(0.0, 2.0 - _delta_raw(V)))


def m_matrix(V):
    """The 2x2 matrix M controlling coherent-state teleportation fidelity."""
    V = core.require_physical(V)
    return _m_raw(V)


def fidelity(V):
    """Coherent-state teleportation fidelity F = 1/sqrt(det M).

    F > 1/2 iff det M < 4.  det M <= 0 cannot happen for physical input
    (M >= I); if it does the call fails loudly.
    """
    V = core.require_physical(V)
    detm = core._det2(_m_raw(V))
    if np.any(detm <= 0.0):
        raise NumericalDomainError("det M <= 0 on physical input; internal inconsistency")
    return _scalar_or_array(1.0 / np.sqrt(detm))


def detm_values(eta, zeta, c1, c2):
    """det M from standard-form parameters:

    1 + 4 c1 c2 + (u + 2)(u - (c1 + c2)) - u (c1 + c2),  u = eta + zeta.

    Plain arithmetic on array-likes; no physicality requirement.
    """
    eta, zeta, c1, c2 = (np.asarray(v, dtype=float) for v in (eta, zeta, c1, c2))
    u = eta + zeta
    s = c1 + c2
    return _scalar_or_array(1.0 + 4.0 * c1 * c2 + (u + 2.0) * (u - s) - u * s)


def detm_canonical(p: CanonicalParams) -> float:
    """det M evaluated from CanonicalParams via the closed form above."""
    return float(detm_values(p.eta, p.zeta, p.c1, p.c2))


def detm_epsilon_values(eta, zeta, c1, c2):
    """det M in the form 4 - eps(4 - eps) - (c1 - c2)^2 with
    eps = 1 - ((eta + zeta) - (c1 + c2)).

    In standard form Delta = 2((eta + zeta) - (c1 + c2)), so eps equals
    f_epr/2 whenever the state is EPR correlated; eps may be negative and
    the expression remains an algebraic identity with detm_values.
    """
    eta, zeta, c1, c2 = (np.asarray(v, dtype=float) for v in (eta, zeta, c1, c2))
    eps = 1.0 - ((eta + zeta) - (c1 + c2))
    return _scalar_or_array(4.0 - eps * (4.0 - eps) - (c1 - c2) ** 2)


def detm_epsilon_form(p: CanonicalParams) -> float:
    return float(detm_epsilon_values(p.eta, p.zeta, p.c1, p.c2))


def qt_epr_values(eta, zeta, c1, c2):
    """Recast teleportation bound: qt iff lhs < rhs with
    lhs = (eta + zeta) - (c1 + c2), rhs = sqrt(4 + (c1 - c2)^2) - 1.

    When c1 = c2 the rhs is exactly 1, so qt reduces to the EPR condition
    lhs < 1, i.e. Delta < 2.
    """
    eta, zeta, c1, c2 = (np.asarray(v, dtype=float) for v in (eta, zeta, c1, c2))
    lhs = (eta + zeta) - (c1 + c2)
    rhs = np.sqrt(4.0 + (c1 - c2) ** 2) - 1.0
    return lhs, rhs, lhs < rhs


def qt_epr_bound(p: CanonicalParams) -> tuple[float, float, bool]:
    lhs, rhs, qt = qt_epr_values(p.eta, p.zeta, p.c1, p.c2)
    return float(lhs), float(rhs), bool(qt)


@dataclass(frozen=True)
class CriteriaReport:
    """Per-state record of the teleportation-relevant quantities.

    Invariants (for reports built from physical states):
    epr_correlated iff delta_epr < 2; f_epr = max(0, 2 - delta_epr);
    qt iff det_m < 4 iff fidelity > 1/2; epr_correlated implies qt.
    Unphysical input yields nan values with all flags False.
    """

    delta_epr: float
    f_epr: float
    det_m: float
    fidelity: float
    entangled: bool
    epr_correlated: bool
    qt: bool


class Classification(Enum):
    UNPHYSICAL = "Unphysical"
    SEPARABLE = "Separable"
    ENTANGLED_NO_QT = "EntangledNoQT"
    QT_NO_EPR = "QTNoEPR"
    EPR_CORRELATED = "EPRCorrelated"


def classify(V) -> tuple[CriteriaReport, Classification]:
    """Full per-state report plus a mutually exclusive region label.

    Precedence: Unphysical; else Separable if not entangled (PPT); else
    EPRCorrelated if Delta < 2; else QTNoEPR if det M < 4; else
    EntangledNoQT.  The entangled flag is the PPT verdict; the
    determinant-form verdict is available via simon_inseparable.
    Malformed input is folded into Unphysical rather than raised.
    """
    try:
        V = np.asarray(V, dtype=float)
        report_ok = V.shape == (4, 4) and core.validate(V).physical
    except (ValueError, TypeError):
        report_ok = False
    if not report_ok:
        nan = math.nan
        return (
            CriteriaReport(nan, nan, nan, nan, False, False, False),
            Classification.UNPHYSICAL,
        )

    delta = float(_delta_raw(V))
    detm = float(core._det2(_m_raw(V)))
    report = CriteriaReport(
        delta_epr=delta,
        f_epr=max(0.0, 2.0 - delta),
        det_m=detm,
        fidelity=1.0 / math.sqrt(detm),
        entangled=bool(core.ppt_nu_minus(V) < 0.5 - PHYSICALITY_TOL),
        epr_correlated=delta < 2.0,
        qt=detm < 4.0,
    )
    if not report.entangled:
        label = Classification.SEPARABLE
    elif report.epr_correlated:
        label = Classification.EPR_CORRELATED
    elif report.qt:
        label = Classification.QT_NO_EPR
    else:
        label = Classification.ENTANGLED_NO_QT
    return report, label


def _bool_token(v) -> str:
    return "true" if v else "false"


def report_to_json(report: CriteriaReport) -> str:
    """Serialise a report with numbers at 17 significant digits."""
    return (
        "{"
        f'"delta_epr": {core.fmt17(report.delta_epr)}, '
        f'"f_epr": {core.fmt17(report.f_epr)}, '
        f'"det_m": {core.fmt17(report.det_m)}, '
        f'"fidelity": {core.fmt17(report.fidelity)}, '
        f'"entangled": {_bool_token(report.entangled)}, '
        f'"epr_correlated": {_bool_token(report.epr_correlated)}, '
        f'"qt": {_bool_token(report.qt)}'
        "}"
    )
