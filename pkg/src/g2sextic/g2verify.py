"""End-to-end co-calibration verification for the realized G2 structure.

Given the three-form phi (basic, orthonormal coframe metric) and the
structure constants, this computes *phi, d phi, d *phi, extracts the
constant lambda by orthogonal projection onto *phi, defines
tau = *(d phi) - lambda phi, and certifies

    d phi = lambda *phi + *tau,  d *phi = 0,  phi ^ tau = phi ^ *tau = 0.

The certificate stores every intermediate form so each identity can be
re-checked from the certificate alone; no floating point anywhere.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

from .exterior import (
    ExteriorForm,
    StructureConstants,
    add,
    d,
    forms_equal,
    hodge_star,
    inner_product,
    interior,
    is_basic,
    is_zero,
    scale,
    sub,
    theta,
    volume_form,
    wedge,
)
from .scalar import ZERO, AlgebraicScalar


@dataclass
class G2Certificate:
    phi: ExteriorForm
    star_phi: ExteriorForm
    d_phi: ExteriorForm
    d_star_phi: ExteriorForm
    lam: AlgebraicScalar
    tau: ExteriorForm
    orientation: str = "theta1^...^theta7"
    checks: dict = field(default_factory=dict)
    residuals: dict = field(default_factory=dict)

    @property
    def verdict(self) -> bool:
        return all(self.checks.values())

    def to_json(self) -> dict:
        from .exterior import form_to_json

        return {
            "phi": form_to_json(self.phi),
            "star_phi": form_to_json(self.star_phi),
            "d_phi": form_to_json(self.d_phi),
            "d_star_phi": form_to_json(self.d_star_phi),
            "lambda": str(self.lam),
            "tau": form_to_json(self.tau),
            "orientation": self.orientation,
            "checks": dict(self.checks),
            "residuals": {k: form_to_json(v) for k, v in self.residuals.items()},
        }

    def recheck(self) -> dict:
        """Re-derive every identity from the stored fields alone."""
        out = {}
        out["star_phi"] = forms_equal(hodge_star(self.phi), self.star_phi)
        out["d_star_phi_zero"] = is_zero(self.d_star_phi)
        lhs = self.d_phi
        rhs = add(scale(self.star_phi, self.lam), hodge_star(self.tau))
        out["torsion_identity"] = forms_equal(lhs, rhs)
        out["phi_wedge_tau"] = is_zero(wedge(self.phi, self.tau))
        out["phi_wedge_star_tau"] = is_zero(wedge(self.phi, hodge_star(self.tau)))
        return out


def verify_cocalibrated(phi: ExteriorForm, sc: StructureConstants) -> G2Certificate:
    if not is_basic(phi):
        raise ValueError("phi must be theta^8-free")
    star_phi = hodge_star(phi)
    d_phi = d(phi, sc)
    d_star_phi = d(star_phi, sc)

    checks = {}
    residuals = {}
    checks["d_phi_basic"] = is_basic(d_phi)
    checks["d_star_phi_basic"] = is_basic(d_star_phi)
    checks["d_star_phi_zero"] = is_zero(d_star_phi)
    if not checks["d_star_phi_zero"]:
        residuals["d_star_phi"] = d_star_phi

    norm = inner_product(star_phi, star_phi)
    checks["star_phi_norm_seven"] = norm == AlgebraicScalar.rational(7)
    lam = inner_product(d_phi, star_phi) * norm.inv()
    tau = sub(hodge_star(d_phi), scale(phi, lam))

    # definitional identity: d phi = lambda *phi + *tau
    recon = add(scale(star_phi, lam), hodge_star(tau))
    checks["torsion_identity"] = forms_equal(d_phi, recon)

    wedge_tau = wedge(phi, tau)
    wedge_star_tau = wedge(phi, hodge_star(tau))
    checks["phi_wedge_tau_zero"] = is_zero(wedge_tau)
    checks["phi_wedge_star_tau_zero"] = is_zero(wedge_star_tau)
    if not checks["phi_wedge_tau_zero"]:
        residuals["phi_wedge_tau"] = wedge_tau
    if not checks["phi_wedge_star_tau_zero"]:
        residuals["phi_wedge_star_tau"] = wedge_star_tau
    checks["tau_nonzero"] = not is_zero(tau)

    return G2Certificate(
        phi=phi,
        star_phi=star_phi,
        d_phi=d_phi,
        d_star_phi=d_star_phi,
        lam=lam,
        tau=tau,
        checks=checks,
        residuals=residuals,
    )


def metric_of_vector(vector) -> AlgebraicScalar:
    """g(V, V) for the orthonormal basic coframe (theta^8 direction absent)."""
    total = ZERO
    for v in vector[:7]:
        c = AlgebraicScalar.coerce(v)
        total = total + c * c
    return total


def contraction_value(phi: ExteriorForm, vector) -> AlgebraicScalar:
    """Coefficient c_V in (V -| phi) ^ (V -| phi) ^ phi = c_V vol."""
    contracted = interior(vector, phi)
    seven_form = wedge(wedge(contracted, contracted), phi)
    return seven_form.terms.get(tuple(range(1, 8)), ZERO)


def g2_identities(phi: ExteriorForm, samples: int = 20, seed: int = 0) -> dict:
    """phi ^ *phi = 7 vol and the contraction compatibility identity.

    The identity (V -| phi)^(V -| phi)^phi = c g(V,V) vol with one fixed
    c over rational sample vectors implies the null-direction statement.
    """
    vol = volume_form()
    seven = AlgebraicScalar.rational(7)
    out = {
        "phi_wedge_star_phi_is_seven_vol": forms_equal(
            wedge(phi, hodge_star(phi)), scale(vol, seven)
        )
    }
    rng = random.Random(seed)
    constant = None
    consistent = True
    for _ in range(samples):
        vector = [Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(7)]
        gvv = metric_of_vector(vector)
        cval = contraction_value(phi, vector)
        if not gvv:
            consistent = consistent and not cval
            continue
        ratio = cval * gvv.inv()
        if constant is None:
            constant = ratio
        consistent = consistent and ratio == constant
    out["contraction_proportional"] = consistent and constant is not None
    out["contraction_constant"] = constant
    out["contraction_constant_positive"] = bool(
        constant and constant.is_rational() and constant.rational_value() > 0
    )
    # complexified null direction: V = E1 + i E2 has g(V, V) = 0
    from .scalar import I as IMAG

    null_vector = [AlgebraicScalar.rational(1), IMAG, ZERO, ZERO, ZERO, ZERO, ZERO]
    out["null_direction_vanishes"] = (not metric_of_vector(null_vector)) and (
        not contraction_value(phi, null_vector)
    )
    return out
