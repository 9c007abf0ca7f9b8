"""Exact verification of partition identities, theta quotients, Dirichlet
series and Schur-function sums for bosonic, fermionic and parafermionic
partition functions."""

__version__ = "0.1.0"
