"""Figure rendering for qcylinder CSV datasets."""

from qcylinder_plots.render import (
    SchemaError,
    load_csv,
    main_density,
    main_jumps,
    main_trajectory,
    render_density,
    render_jumps,
    render_trajectory,
)

__all__ = [
    "SchemaError",
    "load_csv",
    "main_density",
    "main_jumps",
    "main_trajectory",
    "render_density",
    "render_jumps",
    "render_trajectory",
]

__version__ = "0.1.0"
