"""The Jozefiak-Weyman cdga, its multiset blocks, and the D' complex."""

from .cdga import (DEFAULT_CAP, DPrimeComplexSlice, JWComplexSlice, MultisetBlock, block_decompose,
                   build_dprime_slice, build_jw_slice, closed_generator_count, dprime_homology,
                   jw_homology, squarefree_block, sum_homologies, verify_tensor_decomposition)
from .partitions import (Partition, partition_formula_dim, partitions, schur_dim,
                         self_conjugate_partitions)
