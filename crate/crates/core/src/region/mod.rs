//! Grid classification, connected components, boundary tracing and rendering.

pub mod components;
pub mod integer;
pub mod render;
pub mod scan;
pub mod trace;

pub use components::{connected_components, convexity_probe, Component, ComponentSet, ConvexityVerdict};
pub use integer::{IntegerClassifier, IntegerPencil};
pub use render::{render_pgm, render_svg, SvgStyle};
pub use scan::{grid_coordinate, scan_grid, CellLabel, GridBox, GridScan};
pub use trace::{trace_boundary, BoundaryTrace, TracePoint};
