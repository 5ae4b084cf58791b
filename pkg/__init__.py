"""fockcalc - exact Schubert derivations on the fermionic Fock space and DJKM vertex operators."""

__version__ = "0.1.0"
