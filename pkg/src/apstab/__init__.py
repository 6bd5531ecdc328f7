"""Exact computations for homological stability of general linear groups
over Dedekind domains: the algebra A_P and its Tor groups, support-bound
propagation, the Jozefiak-Weyman cdga, RBS/CFP posets and the group
presentations for Z[sqrt(-5)]."""

__version__ = "0.1.0"
