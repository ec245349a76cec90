//! Design-space exploration on top of [`crate::capacity`]: frequency sweeps
//! behind the capacity, derivative and percent-of-maximum curves, and the
//! achievable-rate tables rebuilt from the built-in surveys.

mod sweep;
mod tables;

pub use sweep::{
    run_sweep, FrequencyRange, Spacing, SweepMode, SweepOutputs, SweepRow, SweepSpec,
    SweptParameter,
};
pub use tables::{
    check_table_iv, check_table_vii, market_capacity_points, market_capacity_points_for,
    reproduce_table_iv, reproduce_table_vii, FrequencyKind, GoldenCheck, GoldenComparison,
    MarketPoint, ScenarioRow, TABLE_IV_GOLDEN, TABLE_IV_TOLERANCE, TABLE_VII_GOLDEN,
    TABLE_VII_TOLERANCE,
};
