//! Monte Carlo BER evaluation over BPSK/AWGN with full belief propagation
//! and sliding-window decoding.
//!
//! Frames carry the all-zero codeword (the code is linear and both channel
//! and decoder are symmetric), terminated after `blocks` block columns with
//! the final `m_h * c` checks retained. The sliding window covers `W` block
//! columns; after at most `iterations` flooding passes the leftmost `a` bits
//! are finalized and the window slides by one block. When the window covers
//! the whole remaining frame, all remaining bits are finalized at once, so a
//! window spanning the frame reproduces the full decoder bit for bit.

use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sclcc_core::matrix::{expand_parity_check, profile, BinaryParityCheck, SymbolicMatrix};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum SimError {
    #[error("nonpositive code rate")]
    NonPositiveRate,
    #[error("window below decoding horizon: {window} blocks, need at least {needed}")]
    WindowBelowHorizon { window: usize, needed: usize },
    #[error("LLR stream holds {got} values, expected {expected}")]
    LlrLength { got: usize, expected: usize },
    #[error(transparent)]
    Core(#[from] sclcc_core::Error),
}

/// Decoding window: full-frame belief propagation or `W` block columns.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Window {
    Full,
    Blocks(usize),
}

#[derive(Debug, Clone)]
pub struct SimulationSpec {
    pub code: SymbolicMatrix,
    /// Termination length in blocks.
    pub blocks: usize,
    pub ebno_db: Vec<f64>,
    pub window: Window,
    pub iterations: u32,
    /// Clear retained messages every this many slides; 0 never resets.
    pub reset_period: u32,
    /// Stop a grid point after this many bit errors (0: frames only).
    pub min_errors: u64,
    pub max_frames: u64,
    pub seed: u64,
    pub threads: usize,
}

#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct BerPoint {
    pub ebno_db: f64,
    pub errors: u64,
    pub bits: u64,
    pub ber: f64,
    pub frames: u64,
    pub wall_ms: u64,
}

/// Noise variance for BPSK at rate `rate` and `Eb/N0` in dB.
pub fn noise_sigma2(rate: f64, ebno_db: f64) -> f64 {
    1.0 / (2.0 * rate * 10f64.powf(ebno_db / 10.0))
}

fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

fn frame_rng(seed: u64, frame: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(splitmix64(seed ^ splitmix64(frame.wrapping_add(1))))
}

fn standard_normal(rng: &mut ChaCha8Rng) -> f64 {
    let u1: f64 = 1.0 - rng.gen::<f64>(); // (0, 1]
    let u2: f64 = rng.gen();
    (-2.0 * u1.ln()).sqrt() * (core::f64::consts::TAU * u2).cos()
}

/// Channel LLRs for one all-zero frame of `nbits` BPSK symbols, reproducible
/// per `(seed, frame)`.
pub fn awgn_llr_stream(
    rate: f64,
    ebno_db: f64,
    nbits: usize,
    seed: u64,
    frame: u64,
) -> Result<Vec<f64>, SimError> {
    if rate <= 0.0 {
        return Err(SimError::NonPositiveRate);
    }
    let sigma2 = noise_sigma2(rate, ebno_db);
    let sigma = sigma2.sqrt();
    let mut rng = frame_rng(seed, frame);
    Ok((0..nbits)
        .map(|_| {
            let y = 1.0 + sigma * standard_normal(&mut rng);
            2.0 * y / sigma2
        })
        .collect())
}

/// Edge-indexed Tanner graph with flooding sum-product kernels.
struct BpEngine {
    num_vars: usize,
    var_edges: Vec<Vec<u32>>,
    check_edges: Vec<Vec<u32>>,
    edge_var: Vec<u32>,
    var_to_check: Vec<f64>,
    check_to_var: Vec<f64>,
    scratch: Vec<f64>,
}

const TANH_CLAMP: f64 = 1.0 - 1e-15;

impl BpEngine {
    fn new(h: &BinaryParityCheck) -> Self {
        let num_vars = h.num_variables();
        let num_checks = h.num_checks();
        let mut var_edges = vec![Vec::new(); num_vars];
        let mut check_edges = vec![Vec::new(); num_checks];
        let mut edge_var = Vec::new();
        for m in 0..num_checks {
            for &v in h.check_variables(m) {
                let e = edge_var.len() as u32;
                edge_var.push(v);
                var_edges[v as usize].push(e);
                check_edges[m].push(e);
            }
        }
        let edges = edge_var.len();
        BpEngine {
            num_vars,
            var_edges,
            check_edges,
            edge_var,
            var_to_check: vec![0.0; edges],
            check_to_var: vec![0.0; edges],
            scratch: Vec::new(),
        }
    }

    fn reset(&mut self, channel: &[f64]) {
        for (e, &v) in self.edge_var.iter().enumerate() {
            self.var_to_check[e] = channel[v as usize];
        }
        self.check_to_var.iter_mut().for_each(|m| *m = 0.0);
    }

    /// Check-to-variable update over the given check rows, exclusion via
    /// prefix/suffix products of clamped tanh halves.
    fn check_pass(&mut self, checks: core::ops::Range<usize>) {
        for m in checks {
            let edges = &self.check_edges[m];
            let d = edges.len();
            if d == 0 {
                continue;
            }
            self.scratch.clear();
            self.scratch
                .extend(edges.iter().map(|&e| {
                    (self.var_to_check[e as usize] * 0.5).tanh().clamp(-TANH_CLAMP, TANH_CLAMP)
                }));
            // suffix[i] = product of scratch[i..]
            let mut suffix = 1.0;
            let mut suffixes = vec![0.0; d];
            for i in (0..d).rev() {
                suffixes[i] = suffix;
                suffix *= self.scratch[i];
            }
            let mut prefix = 1.0;
            for i in 0..d {
                let excl: f64 = prefix * suffixes[i];
                self.check_to_var[edges[i] as usize] = 2.0 * excl.clamp(-TANH_CLAMP, TANH_CLAMP).atanh();
                prefix *= self.scratch[i];
            }
        }
    }

    /// Variable-to-check update over the given variable columns.
    fn var_pass(&mut self, channel: &[f64], vars: core::ops::Range<usize>) {
        for v in vars {
            let total: f64 = self.var_edges[v]
                .iter()
                .map(|&e| self.check_to_var[e as usize])
                .sum::<f64>()
                + channel[v];
            for &e in &self.var_edges[v] {
                self.var_to_check[e as usize] = total - self.check_to_var[e as usize];
            }
        }
    }

    fn posterior(&self, channel: &[f64], v: usize) -> f64 {
        channel[v] + self.var_edges[v].iter().map(|&e| self.check_to_var[e as usize]).sum::<f64>()
    }

    fn hard(&self, channel: &[f64], v: usize) -> u8 {
        (self.posterior(channel, v) < 0.0) as u8
    }

    /// Parity of every check in range against current (and finalized) hard
    /// decisions.
    fn syndrome_ok(&self, h: &BinaryParityCheck, channel: &[f64], checks: core::ops::Range<usize>) -> bool {
        for m in checks {
            let mut parity = 0u8;
            for &v in h.check_variables(m) {
                parity ^= self.hard(channel, v as usize);
            }
            if parity != 0 {
                return false;
            }
        }
        true
    }
}

/// Full-frame flooding sum-product decoder: early exit once every check is
/// satisfied, best-effort hard decisions otherwise.
pub fn bp_decode_full(h: &BinaryParityCheck, llrs: &[f64], iterations: u32) -> Result<Vec<u8>, SimError> {
    if llrs.len() != h.num_variables() {
        return Err(SimError::LlrLength { got: llrs.len(), expected: h.num_variables() });
    }
    let mut engine = BpEngine::new(h);
    engine.reset(llrs);
    let checks = 0..h.num_checks();
    let vars = 0..h.num_variables();
    for _ in 0..iterations {
        if engine.syndrome_ok(h, llrs, checks.clone()) {
            break;
        }
        engine.check_pass(checks.clone());
        engine.var_pass(llrs, vars.clone());
    }
    Ok((0..h.num_variables()).map(|v| engine.hard(llrs, v)).collect())
}

/// Sliding-window decoder over a terminated frame of `blocks` block columns.
///
/// Messages are retained across slides; every `reset_period` slides they are
/// cleared back to channel values. Requires `window >= m_h + 1`.
pub fn bp_decode_sliding_window(
    code: &SymbolicMatrix,
    llrs: &[f64],
    blocks: usize,
    window: usize,
    iterations: u32,
    reset_period: u32,
) -> Result<Vec<u8>, SimError> {
    let m_h = code.max_exponent().ok_or(sclcc_core::Error::EmptyMatrix)? as usize;
    if window < m_h + 1 {
        return Err(SimError::WindowBelowHorizon { window, needed: m_h + 1 });
    }
    let h = expand_parity_check(code, blocks)?;
    if llrs.len() != h.num_variables() {
        return Err(SimError::LlrLength { got: llrs.len(), expected: h.num_variables() });
    }
    let a = code.a();
    let c = code.c();
    let num_checks = h.num_checks();
    let mut engine = BpEngine::new(&h);
    engine.reset(llrs);
    let mut decisions = vec![0u8; h.num_variables()];
    let mut t = 0usize;
    while t < blocks {
        if reset_period > 0 && t > 0 && t % reset_period as usize == 0 {
            engine.reset(llrs);
        }
        let end = (t + window).min(blocks);
        let vars = t * a..end * a;
        let checks = t * c..((end + m_h) * c).min(num_checks);
        for _ in 0..iterations {
            if engine.syndrome_ok(&h, llrs, checks.clone()) {
                break;
            }
            engine.check_pass(checks.clone());
            engine.var_pass(llrs, vars.clone());
        }
        let finalize_to = if end == blocks { blocks } else { t + 1 };
        for v in t * a..finalize_to * a {
            decisions[v] = engine.hard(llrs, v);
        }
        if end == blocks {
            break;
        }
        t += 1;
    }
    Ok(decisions)
}

/// Monte Carlo sweep over the Eb/N0 grid. Deterministic for one worker; with
/// several workers the frame set per point may differ but the statistics are
/// equivalent.
pub fn monte_carlo_ber(spec: &SimulationSpec) -> Result<Vec<BerPoint>, SimError> {
    let prof = profile(&spec.code)?;
    let rate = prof.rate_num as f64 / prof.rate_den as f64;
    if rate <= 0.0 {
        return Err(SimError::NonPositiveRate);
    }
    if let Window::Blocks(w) = spec.window {
        if w < prof.m_h as usize + 1 {
            return Err(SimError::WindowBelowHorizon { window: w, needed: prof.m_h as usize + 1 });
        }
    }
    let frame_bits = spec.blocks * prof.a;
    let h_full = expand_parity_check(&spec.code, spec.blocks)?;
    let mut points = Vec::with_capacity(spec.ebno_db.len());
    for &ebno in &spec.ebno_db {
        let start = Instant::now();
        let errors = AtomicU64::new(0);
        let bits = AtomicU64::new(0);
        let frames = AtomicU64::new(0);
        let next_frame = AtomicU64::new(0);
        let stop = AtomicBool::new(false);
        let workers = spec.threads.max(1);
        std::thread::scope(|scope| {
            for _ in 0..workers {
                scope.spawn(|| {
                    loop {
                        if stop.load(Ordering::Relaxed) {
                            break;
                        }
                        let frame = next_frame.fetch_add(1, Ordering::Relaxed);
                        if frame >= spec.max_frames {
                            break;
                        }
                        let llrs = awgn_llr_stream(rate, ebno, frame_bits, spec.seed, frame)
                            .expect("rate checked above");
                        let decoded = match spec.window {
                            Window::Full => bp_decode_full(&h_full, &llrs, spec.iterations),
                            Window::Blocks(w) => bp_decode_sliding_window(
                                &spec.code,
                                &llrs,
                                spec.blocks,
                                w,
                                spec.iterations,
                                spec.reset_period,
                            ),
                        }
                        .expect("dimensions are consistent");
                        let frame_errors = decoded.iter().map(|&b| b as u64).sum::<u64>();
                        let total = errors.fetch_add(frame_errors, Ordering::Relaxed) + frame_errors;
                        bits.fetch_add(frame_bits as u64, Ordering::Relaxed);
                        frames.fetch_add(1, Ordering::Relaxed);
                        if spec.min_errors > 0 && total >= spec.min_errors {
                            stop.store(true, Ordering::Relaxed);
                            break;
                        }
                    }
                });
            }
        });
        let errors = errors.into_inner();
        let bits = bits.into_inner();
        let frames = frames.into_inner();
        points.push(BerPoint {
            ebno_db: ebno,
            errors,
            bits,
            ber: if bits > 0 { errors as f64 / bits as f64 } else { 0.0 },
            frames,
            wall_ms: start.elapsed().as_millis() as u64,
        });
    }
    Ok(points)
}
