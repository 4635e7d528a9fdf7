"""Exact-arithmetic mirror symmetry for complex tori and abelian varieties.

Construction and verification of mirror-symmetric pairs of complex tori:
lattices with rational complex structure, the hyperbolic lattice Lambda with
its Clifford algebra and spinor module, the I_omega operator family, the beta
correspondence, the Siegel-domain group action, and the Neron-Severi Lie
algebra acting on cohomology.
"""

__version__ = "0.1.0"
