"""Classification of smooth projective horospherical varieties of Picard number one."""

from .classify import (
    ClassificationRecord,
    MarkedDiagram,
    enumerate_special,
    match_families,
    projective_space_decomposition,
    x1_shape,
)
from .geometry import OrbitSide, ambient_dim, aut_dim, homogeneity, normal_sections
from .horo import HoroPair, dimension, embeddings, is_special, picard_number
from .roots import RootSystem, SimpleType, build_root_system, weyl_dim

__all__ = [
    "ClassificationRecord",
    "HoroPair",
    "MarkedDiagram",
    "OrbitSide",
    "RootSystem",
    "SimpleType",
    "ambient_dim",
    "aut_dim",
    "build_root_system",
    "dimension",
    "embeddings",
    "enumerate_special",
    "homogeneity",
    "is_special",
    "match_families",
    "normal_sections",
    "picard_number",
    "projective_space_decomposition",
    "weyl_dim",
    "x1_shape",
]
