"""fcplat: exact computation in lattices of finite commutative ring extensions."""

__version__ = "0.1.0"
