"""Monocular scale correction and visual-bootstrapped LiDAR odometry."""

from ._vlo import (
    CameraIntrinsics,
    ConfigError,
    CorrectionEvent,
    EvalReport,
    InsufficientSamplesError,
    NoConsensusError,
    Pose,
    RansacConfig,
    RunReport,
    ScaleEstimate,
    ScaleSample,
    TimedPose,
    compose,
    emit_report,
    evaluate,
    project_point,
    ransac_scale,
    read_trajectory,
    run,
    should_correct,
    triangulate_depth,
    write_trajectory,
)

__all__ = [
    "CameraIntrinsics",
    "ConfigError",
    "CorrectionEvent",
    "EvalReport",
    "InsufficientSamplesError",
    "NoConsensusError",
    "Pose",
    "RansacConfig",
    "RunReport",
    "ScaleEstimate",
    "ScaleSample",
    "TimedPose",
    "compose",
    "emit_report",
    "evaluate",
    "project_point",
    "ransac_scale",
    "read_trajectory",
    "run",
    "should_correct",
    "triangulate_depth",
    "write_trajectory",
]
