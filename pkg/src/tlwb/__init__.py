"""Workbench for the Temperley-Lieb algebra of affine type D.

The algebra TL(D~_{n+2}) is realized twice: abstractly, over Z[d] on
the basis of fully commutative monomials with multiplication by term
rewriting, and concretely, as an algebra of decorated planar diagrams
with multiplication by stacking and reduction.  The two realizations
are tied together by the map sending the generator b_i to the simple
diagram D_i, and the test suite checks computationally that this map
is a well-defined injective homomorphism on the scales it enumerates.
"""

__version__ = "0.1.0"
