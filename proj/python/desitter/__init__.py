"""Causal structure of de Sitter space on the hyperboloid S(R)."""

from ._core import (
    Event,
    FigureKind,
    HalfSpaceSet,
    Isometry,
    NullRay,
    Sampler,
    Side,
    SpacetimeContext,
    Verdict,
    WorldLine,
    antipode,
    antipodal_causal_future,
    antipodal_causal_past,
    boost,
    build_scene,
    canonical_worldline,
    canonicalize,
    causal_future_of_event,
    causal_past_of_event,
    central_symmetry,
    chord_oracle,
    classify,
    future_event_horizon,
    horizon_limit_check,
    horizon_symmetry_check,
    inner,
    injectivity_check,
    light_cone_on_worldline,
    nesting_check,
    null_ray,
    observation_witness,
    observer_causal_future,
    observer_causal_past,
    observer_sets,
    on_hyperboloid,
    orientation_Y,
    past_event_horizon,
    quotient_rep,
    random_event,
    render_csv,
    render_svg,
    spatial_rotation,
    throat_distance,
    throat_intersection,
    time_direction,
    verify_isometry,
)

__all__ = [name for name in dir() if not name.startswith("_")]
