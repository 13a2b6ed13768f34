"""Exact spinor geometry over a split quadratic lattice.

The library works over ℚ and quadratic extensions ℚ(√-d) throughout — no
floating point anywhere.  It provides the half-spin module of a rank-4n split
lattice, the Clifford algebra acting on it, the quartic invariant of rank-six
spinors, secant planes of pure spinors with their multiplication structures
and hermitian forms, transport isomorphisms between endomorphisms and
inhomogeneous forms, a truncated theta ring with its Euler pairing, and a
bigraded contraction model.  ``spinweil.cli`` exposes the command-line
interface; ``spinweil.checks`` hosts the named verification battery.
"""

from .scalars import QuadExt, sqrt_minus, squarefree_part
from .exterior import Ext, ext_exp, top_wedge
from .lattice import (b0, pairing, point_class, spinor_point_class,
                      theta_adjacent, theta_split)
from .clifford import (CliffordElement, SpinElement, bivector_lift,
                       integral_pairing, m_matrix, mukai_pairing,
                       spin_exp_even_nilpotent, spin_from_pair)
from .igusa import e_star, igusa_J, igusa_coords, pfaffian
from .spinors import (SecantData, Subspace, is_pure, isotropic_of_spinor,
                      plane_stabilizer, secant_from_polarization,
                      secant_plane, spinor_of_isotropic)
from .weil import (CMStructure, ample_class, centralizer_dims,
                   cm_from_secant, discriminant_H, g_definiteness,
                   gram_signature, hermitian_gram, real_gram,
                   standard_complex_structure)
from .chevalley import (duality_transport, kappa, orlov_inverse, orlov_phi,
                        psi, psi_inverse, rho_prime, rho_wedge,
                        tilde_varphi, tilde_varphi_closed, twist_class_c1,
                        twist_identity_check, twist_of, varphi)
from .thetaring import (ThetaPoly, alpha_beta, ch_secant_ideal_threefold,
                        embed_theta_into_spinor, euler_pairing,
                        solve_genus4_coeffs, texp)
from .hodgemodel import (HTClass, annihilator_kernel, ht2_basis, ht2_dim,
                         ht_contract, product_annihilator)
from . import jsonio

__version__ = "0.1.0"

__all__ = [
    "QuadExt", "sqrt_minus", "squarefree_part",
    "Ext", "ext_exp", "top_wedge",
    "b0", "pairing", "point_class", "spinor_point_class",
    "theta_adjacent", "theta_split",
    "CliffordElement", "SpinElement", "bivector_lift", "integral_pairing",
    "m_matrix", "mukai_pairing", "spin_exp_even_nilpotent", "spin_from_pair",
    "e_star", "igusa_J", "igusa_coords", "pfaffian",
    "SecantData", "Subspace", "is_pure", "isotropic_of_spinor",
    "plane_stabilizer", "secant_from_polarization", "secant_plane",
    "spinor_of_isotropic",
    "CMStructure", "ample_class", "centralizer_dims", "cm_from_secant",
    "discriminant_H", "g_definiteness", "gram_signature", "hermitian_gram",
    "real_gram", "standard_complex_structure",
    "duality_transport", "kappa", "orlov_inverse", "orlov_phi", "psi",
    "psi_inverse", "rho_prime", "rho_wedge", "tilde_varphi",
    "tilde_varphi_closed", "twist_class_c1", "twist_identity_check",
    "twist_of", "varphi",
    "ThetaPoly", "alpha_beta", "ch_secant_ideal_threefold",
    "embed_theta_into_spinor", "euler_pairing", "solve_genus4_coeffs", "texp",
    "HTClass", "annihilator_kernel", "ht2_basis", "ht2_dim", "ht_contract",
    "product_annihilator",
    "jsonio",
]
