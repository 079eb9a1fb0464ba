"""Small resolutions of Schubert varieties: Coxeter-group combinatorics,
Hecke-algebra fiber profiles, Billey-Postnikov decompositions, and a
certified search over parabolic resolution data."""

__version__ = "1.0.0"
