__title__ = "latticestream"
__description__ = "One-pass threshold streaming for maximizing g(x) - c(x) on the integer lattice"
__version__ = "0.2.0"
