"""loopex: exact quantum knot invariants of braid closures and the rational
loop expansion of the colored Jones polynomial, verified against an embedded
golden corpus of knots with up to seven crossings."""

__version__ = "0.1.0"
