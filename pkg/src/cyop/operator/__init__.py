"""Operators in theta-form and d/dx form, Calabi-Yau quantities, Riemann symbols."""

from .cy import (
    cy_numerator_coeffs,
    cy_quantity_Q,
    cy_quantity_W,
    printed_Q_eval,
    q_numerator_poly,
    satisfies_cy,
)
from .dxform import DxForm, adjoint, dx_polys, theta_to_dx
from .params import DegreeTwoParams, SigmaDelta, quartic_sigma_delta, sigma_delta
from .riemann import INFINITY, RiemannEntry, RiemannSymbol, riemann_symbol
from .theta import ThetaOperator, format_operator, parse_operator, theta_op

__all__ = [
    "cy_numerator_coeffs", "cy_quantity_Q", "cy_quantity_W", "printed_Q_eval",
    "q_numerator_poly", "satisfies_cy", "DxForm", "adjoint", "dx_polys", "theta_to_dx",
    "DegreeTwoParams", "SigmaDelta", "quartic_sigma_delta", "sigma_delta", "INFINITY",
    "RiemannEntry", "RiemannSymbol", "riemann_symbol", "ThetaOperator", "format_operator",
    "parse_operator", "theta_op",
]
