//! Parameter sweeps, the stability-property suite and their file outputs.

pub mod config;
pub mod csv;
pub mod svg;
pub mod sweep;
pub mod theorem;

pub use config::{uniform_grid, ClassicalSweepConfig, ConfigFile, SweepConfig};
pub use csv::{emit_csv, format_g12, parse_csv, to_csv_string};
pub use svg::{emit_svg, render_svg};
pub use sweep::{
    classical_point, quantum_point, run_classical_sweep, run_quantum_sweep, SweepMetadata,
    SweepResult, SweepRow,
};
pub use theorem::{
    run_theorem_suite, run_theorem_suite_with, PropertyCheck, TheoremOptions, TheoremReport,
    THEOREM_TOLERANCE,
};
