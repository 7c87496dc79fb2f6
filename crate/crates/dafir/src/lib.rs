//! Design-space exploration for distributed-arithmetic FIR filters.
//!
//! Given a filter's quantized coefficients and a gate-level cost model, this
//! crate searches the space of hybrid LUT + compressor-tree architectures for
//! the delay-, power-, or PDP-optimal design, simulates any candidate
//! architecture bit-exactly against a direct-form reference, and reports
//! costs against pure-LUT and LUT-less baselines.
//!
//! The main pieces:
//!
//! - [`fir`] — bit-exact fixed-point FIR arithmetic (direct form, bit-plane
//!   decomposition, distributed-arithmetic evaluation); the functional oracle.
//! - [`cost`] — the gate-delay/power cost model: LUT tables, the basic
//!   compressor catalog, mux and carry-lookahead adder models, config loading.
//! - [`pareto`] — non-dominated (delay, power) frontiers used by the
//!   optimizers.
//! - [`lut`] — partitioning `k` LUT address bits into `m` basic LUTs.
//! - [`compressor`] — composing catalog compressors into an `h:2` reduction
//!   tree.
//! - [`arch`] — the full architecture scan combining both layers with the mux
//!   layer and final adder, plus baselines and comparison reports.
//! - [`sim`] — bit-exact simulation of a chosen architecture and structural
//!   netlist export.
//! - [`coeffs`] — coefficient ingestion, quantization, and a windowed-sinc
//!   lowpass generator for producing test filters.

pub mod arch;
pub mod coeffs;
pub mod compressor;
pub mod cost;
pub mod error;
pub mod fir;
pub mod lut;
pub mod pareto;
pub mod sim;

pub use arch::{
    baseline_lutless, baseline_purelut, cla_width_for, compare_architectures,
    optimize_architecture, ArchVariant, ArchitecturePlan, ComparisonReport,
};
pub use compressor::{brute_force_comp, optimize_compressor, CompressorTree};
pub use cost::{
    cla_cost, load_cost_config, lut_size_bits, mux_layer_cost, Cost, CostPoint, CostTables,
    Objective,
};
pub use error::Error;
pub use fir::{bit_decompose, da_fir, direct_fir, partial_sum, QuantizedFilter, SampleWindow};
pub use lut::{brute_force_lut, optimize_lut, LutPartitionPlan};
pub use pareto::ParetoSet;
pub use sim::{build_lut_contents, export_netlist, simulate_plan, LutContents, TapAssignment};

/// Result alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
