//! Workbench companion crate: matrix text format, bundled reference
//! matrices, and the Monte Carlo BER simulator with full and sliding-window
//! belief propagation decoding. The analysis kernels live in `sclcc-core`.

pub mod corpus;
pub mod simulate;
pub mod textfmt;
