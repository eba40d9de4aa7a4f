"""Parameter-homotopy continuation: square systems, path tracking, monodromy."""
from .tracker import TrackerOptions, PathResult, track
from .systems import (SquareSystem, build_square_system, generate_startpoint,
                      ParameterSegment, track_path)
from .monodromy import (LoopRecord, SolutionRegistry, monodromy_loop,
                        CountResult, count_decompositions, decompositions_of)
from .smallsolve import intersect_plane_curves

__all__ = [
    "TrackerOptions", "PathResult", "track",
    "SquareSystem", "build_square_system", "generate_startpoint",
    "ParameterSegment", "track_path",
    "LoopRecord", "SolutionRegistry", "monodromy_loop",
    "CountResult", "count_decompositions", "decompositions_of",
    "intersect_plane_curves",
]
