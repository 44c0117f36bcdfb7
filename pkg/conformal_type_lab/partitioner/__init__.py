"""
Partitions of line complexes into bounded connected pieces and the hyperbolicity
certificates built on them.
"""

from conformal_type_lab.partitioner.certify import (
    CONSTRUCTIVE, EXHAUSTIVE, certify_regularly_ramified, certify_T2, certify_Tfinal,
    connected_subsets,)
from conformal_type_lab.partitioner.splitting import (
    SubgraphSplitter, partition_lemma_par2, split_lemma_par,)
from conformal_type_lab.partitioner.subgraph import GraphPartition, SubgraphHandle

__all__ = [
    'CONSTRUCTIVE',
    'EXHAUSTIVE',
    'GraphPartition',
    'SubgraphHandle',
    'SubgraphSplitter',
    'certify_T2',
    'certify_Tfinal',
    'certify_regularly_ramified',
    'connected_subsets',
    'partition_lemma_par2',
    'split_lemma_par',
]
