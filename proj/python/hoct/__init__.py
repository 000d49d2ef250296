"""Lossless context-transformation preprocessor.

Thin wrapper over the compiled extension: transform byte strings into a
lower-entropy form, invert exactly, and frame the result as a .hoct
container.
"""

from ._hoct import entropy, pack, restore, transform, unpack

__all__ = ["entropy", "pack", "restore", "transform", "unpack"]
