"""
Line-oriented text formats: ``.spg`` line complexes, ``.tlg`` tilings and ``.gpt``
partitions.
"""

from conformal_type_lab.formats.base import TextFormat, tokenize
from conformal_type_lab.formats.gpt import GptFormat, gpt_format, partition_pieces
from conformal_type_lab.formats.spg import SpgFormat, spg_format
from conformal_type_lab.formats.tlg import TlgFormat, tlg_format

__all__ = [
    'GptFormat',
    'SpgFormat',
    'TextFormat',
    'TlgFormat',
    'gpt_format',
    'partition_pieces',
    'spg_format',
    'tlg_format',
    'tokenize',
]
