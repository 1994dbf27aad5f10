"""Local and global densities of soluble cubic hypersurfaces."""

__version__ = "0.1.0"
