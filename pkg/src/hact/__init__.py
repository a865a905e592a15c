"""Exact computations with Hopf algebroids and their differential calculi.

Presented algebras with confluent rewrite rules over Q(q), Hopf algebra
and bialgebroid structure checks, translation maps, covariant modules,
and first order differential calculi, all with exact scalar arithmetic.
"""

__version__ = "0.1.0"
