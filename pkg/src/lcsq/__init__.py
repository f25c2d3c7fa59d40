"""lcsq: exact-arithmetic workbench for lower central series quotients
of free associative algebras and their symplectic quotients."""

from .kernel import KERNEL_NAME

__version__ = "0.1.0"
__all__ = ["KERNEL_NAME", "__version__"]
