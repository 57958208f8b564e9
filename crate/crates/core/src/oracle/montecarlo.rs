//! Hit-or-miss Monte Carlo estimate of the lens area.

use rayon::prelude::*;

use super::rng::SplitMix64;
use crate::error::{Error, Result};
use crate::geometry::LensConfig;

/// Monte Carlo area estimate.
///
/// `std_error = box_area * sqrt(p (1 - p) / samples)` with `p` the hit
/// fraction.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MCEstimate {
    pub value: f64,
    pub std_error: f64,
    pub samples: u64,
    pub seed: u64,
}

/// Sampling box `[d - r, R] x [-min(R, r), min(R, r)]`, which contains the lens.
struct SamplingBox {
    x0: f64,
    width: f64,
    half_height: f64,
}

impl SamplingBox {
    fn for_config(c: &LensConfig) -> Option<Self> {
        let (big_r, r, d) = (c.radius_a(), c.radius_b(), c.separation());
        if d >= big_r + r {
            return None;
        }
        let x0 = d - r;
        Some(SamplingBox {
            x0,
            width: big_r - x0,
            half_height: big_r.min(r),
        })
    }

    fn area(&self) -> f64 {
        self.width * 2.0 * self.half_height
    }
}

fn count_hits(c: &LensConfig, b: &SamplingBox, samples: u64, seed: u64) -> u64 {
    let (rr_a, rr_b, d) = (
        c.radius_a() * c.radius_a(),
        c.radius_b() * c.radius_b(),
        c.separation(),
    );
    let mut rng = SplitMix64::new(seed);
    let mut hits = 0;
    for _ in 0..samples {
        let x = b.x0 + b.width * rng.next_f64();
        let y = b.half_height * (2.0 * rng.next_f64() - 1.0);
        let y2 = y * y;
        if x * x + y2 <= rr_a && (x - d) * (x - d) + y2 <= rr_b {
            hits += 1;
        }
    }
    hits
}

fn estimate(b: &SamplingBox, hits: u64, samples: u64, seed: u64) -> MCEstimate {
    let p = hits as f64 / samples as f64;
    MCEstimate {
        value: b.area() * p,
        std_error: b.area() * (p * (1.0 - p) / samples as f64).sqrt(),
        samples,
        seed,
    }
}

fn empty(samples: u64, seed: u64) -> MCEstimate {
    MCEstimate {
        value: 0.0,
        std_error: 0.0,
        samples,
        seed,
    }
}

/// Sequential hit-or-miss estimate from a single SplitMix64 stream.
pub fn lens_area_montecarlo(c: LensConfig, samples: u64, seed: u64) -> Result<MCEstimate> {
    if samples == 0 {
        return Err(Error::domain("samples", 0.0, "at least 1"));
    }
    let Some(b) = SamplingBox::for_config(&c) else {
        return Ok(empty(samples, seed));
    };
    let hits = count_hits(&c, &b, samples, seed);
    Ok(estimate(&b, hits, samples, seed))
}

/// Chunked estimate: samples are split into blocks of `block_size`, block
/// `i` draws from [`SplitMix64::block_seed`]`(seed, i)`, and integer hit
/// counts are summed. The result does not depend on `parallel`.
pub fn lens_area_montecarlo_chunked(
    c: LensConfig,
    samples: u64,
    seed: u64,
    block_size: u64,
    parallel: bool,
) -> Result<MCEstimate> {
    if samples == 0 {
        return Err(Error::domain("samples", 0.0, "at least 1"));
    }
    if block_size == 0 {
        return Err(Error::domain("block_size", 0.0, "at least 1"));
    }
    let Some(b) = SamplingBox::for_config(&c) else {
        return Ok(empty(samples, seed));
    };
    let blocks = samples.div_ceil(block_size);
    let block = |i: u64| {
        let n = block_size.min(samples - i * block_size);
        count_hits(&c, &b, n, SplitMix64::block_seed(seed, i))
    };
    let hits: u64 = if parallel {
        (0..blocks).into_par_iter().map(block).sum()
    } else {
        (0..blocks).map(block).sum()
    };
    Ok(estimate(&b, hits, samples, seed))
}
