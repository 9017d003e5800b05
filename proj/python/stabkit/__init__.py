# Copyright 2026 The stabkit Authors
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Stabbing Planes proof toolkit."""

from stabkit._core import (
    Certificate,
    CpConfigProof,
    CpProof,
    DimensionError,
    DomainError,
    EncodingError,
    Error,
    Inequality,
    InvalidCertificateError,
    InvalidProofError,
    ParseError,
    RcpProof,
    ReferenceError,
    ResourceError,
    ShapeError,
    SolveResult,
    SpProof,
    System,
    brute_force_unsat,
    cp_space_to_sp,
    cp_to_sp_size,
    cp_tree_to_sp_balanced,
    cp_tree_to_sp_depth,
    find_certificate,
    pebbling_dimacs,
    rcp_to_sp,
    reduce_support,
    refute_tseitin,
    sp_solve,
    sp_to_rcp,
    tseitin_dimacs,
    tseitin_system,
)

__version__ = "0.1.0"

__all__ = [
    "Certificate",
    "CpConfigProof",
    "CpProof",
    "DimensionError",
    "DomainError",
    "EncodingError",
    "Error",
    "Inequality",
    "InvalidCertificateError",
    "InvalidProofError",
    "ParseError",
    "RcpProof",
    "ReferenceError",
    "ResourceError",
    "ShapeError",
    "SolveResult",
    "SpProof",
    "System",
    "brute_force_unsat",
    "cp_space_to_sp",
    "cp_to_sp_size",
    "cp_tree_to_sp_balanced",
    "cp_tree_to_sp_depth",
    "find_certificate",
    "pebbling_dimacs",
    "rcp_to_sp",
    "reduce_support",
    "refute_tseitin",
    "sp_solve",
    "sp_to_rcp",
    "tseitin_dimacs",
    "tseitin_system",
]
