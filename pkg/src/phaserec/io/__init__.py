from .manifest import RunManifest
from .pfm import read_field, read_pfm, write_field, write_pfm
from .pgm import read_pgm, write_pgm

__all__ = [
    "RunManifest",
    "read_field",
    "read_pfm",
    "write_field",
    "write_pfm",
    "read_pgm",
    "write_pgm",
]
