"""Shape catalogue: every movable kind the engine can drive."""

from .base import GestureAux, Movable, allocate_id, ensure_id_floor
from .board import (FitTolerance, Hole, HoleKind, PerforatedBoard, Plug,
                    plug_fits)
from .circles import (NnodeCircle, NnodeRing, NnodeStrip, PartitionedCircle,
                      SectoredCircle, nnode_counts, nodes_on_arc,
                      nodes_on_circle)
from .labels import LabelBox, TextBasis
from .lines import LineShape, SegmentedLineShape
from .polygons import (ChatoyantPolyShape, ConvexPolyShape, MovementAllowed,
                       PolyMode, RegularPolyShape)
from .rects import FixedRatioRect, PartitionedRect, RectRange, RectShape
from .sectors import SectorShape

__all__ = [
    "GestureAux", "Movable", "allocate_id", "ensure_id_floor",
    "FitTolerance", "Hole", "HoleKind", "PerforatedBoard", "Plug", "plug_fits",
    "NnodeCircle", "NnodeRing", "NnodeStrip", "PartitionedCircle",
    "SectoredCircle", "nnode_counts", "nodes_on_arc", "nodes_on_circle",
    "LabelBox", "TextBasis",
    "LineShape", "SegmentedLineShape",
    "ChatoyantPolyShape", "ConvexPolyShape", "MovementAllowed", "PolyMode",
    "RegularPolyShape",
    "FixedRatioRect", "PartitionedRect", "RectRange", "RectShape",
    "SectorShape",
]
