"""Canonical symbol names shared across the package.

Symbols are plain strings; any string is a valid symbol.  These are the
conventional names used by the built-in families and the CLI.
"""

LAM = "λ"
MU = "μ"
ALPHA = "α"
BETA = "β"
U = "u"
V = "v"
T = "t"
X = "x"
UMBRA = "D"
