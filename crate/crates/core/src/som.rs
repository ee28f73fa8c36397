//! Stimulus-driven Kohonen map layout.
//!
//! Each iteration draws a stimulus uniformly from the region, picks the
//! nearest node as winner, and pulls every node within `radius` hops of the
//! winner toward the stimulus by `alpha * exp(-d² / 2σ²)` of the remaining
//! distance. The learning rate decays geometrically from `alpha_max` to
//! `alpha_min`; the radius steps down from `r_max` to `r_min` in equal-length
//! stages; `σ` follows the radius.
//!
//! The default `r_min` is 1. A final winner-only stage (`r_min = 0`) run at
//! `alpha ≈ 0.1` for a quarter of the iterations degenerates into plain
//! vector quantization and re-tangles layouts that were already plane.

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::layout::random_layout_from;
use crate::rng::seeded_rng;
use crate::{Error, Graph, Layout, Neighborhoods, Point, Region, Result};

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SomParams {
    pub t_max: usize,
    pub alpha_max: f64,
    pub alpha_min: f64,
    pub r_max: usize,
    pub r_min: usize,
    /// `σ = sigma_scale * max(radius, 1)`.
    pub sigma_scale: f64,
}

impl Default for SomParams {
    fn default() -> Self {
        SomParams {
            t_max: 1_000_000,
            alpha_max: 0.5,
            alpha_min: 0.1,
            r_max: 3,
            r_min: 1,
            sigma_scale: 1.0,
        }
    }
}

impl SomParams {
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidParams(msg));
        if self.t_max < 1 {
            return bad("t_max must be at least 1".into());
        }
        if !(self.alpha_min > 0.0 && self.alpha_min <= self.alpha_max && self.alpha_max <= 1.0) {
            return bad(format!(
                "need 0 < alpha_min <= alpha_max <= 1, got {} and {}",
                self.alpha_min, self.alpha_max
            ));
        }
        if self.r_max < self.r_min {
            return bad(format!("r_max {} is below r_min {}", self.r_max, self.r_min));
        }
        if !(self.sigma_scale > 0.0 && self.sigma_scale.is_finite()) {
            return bad(format!("sigma_scale must be positive, got {}", self.sigma_scale));
        }
        Ok(())
    }
}

/// Learning rate, radius and Gaussian width at one iteration.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SomSchedule {
    pub alpha: f64,
    pub radius: usize,
    pub sigma: f64,
}

/// `exp(-d² / 2σ²)`.
pub fn gaussian_factor(d: usize, sigma: f64) -> Result<f64> {
    if !(sigma > 0.0) {
        return Err(Error::InvalidParams(format!("sigma must be positive, got {sigma}")));
    }
    let d = d as f64;
    Ok((-(d * d) / (2.0 * sigma * sigma)).exp())
}

/// Radius for iteration `t` when `[r_min, r_max]` is split into equal time
/// stages over `t_max` iterations.
pub(crate) fn staged_radius(t: usize, t_max: usize, r_max: usize, r_min: usize) -> usize {
    let stages = r_max - r_min + 1;
    let stage = ((t as u128 * stages as u128) / t_max as u128) as usize;
    r_max - stage.min(stages - 1)
}

pub fn som_schedule(t: usize, p: &SomParams) -> Result<SomSchedule> {
    p.validate()?;
    if t >= p.t_max {
        return Err(Error::InvalidParams(format!(
            "iteration {t} outside 0..{}",
            p.t_max
        )));
    }
    let alpha = if t == 0 || p.t_max == 1 {
        p.alpha_max
    } else if t == p.t_max - 1 {
        p.alpha_min
    } else {
        let frac = t as f64 / (p.t_max - 1) as f64;
        p.alpha_max * (p.alpha_min / p.alpha_max).powf(frac)
    };
    let radius = staged_radius(t, p.t_max, p.r_max, p.r_min);
    let sigma = p.sigma_scale * radius.max(1) as f64;
    Ok(SomSchedule {
        alpha,
        radius,
        sigma,
    })
}

fn check_step_args(alpha: f64, sigma: f64) -> Result<()> {
    if !(alpha > 0.0 && alpha <= 1.0) {
        return Err(Error::InvalidParams(format!("alpha must lie in (0, 1], got {alpha}")));
    }
    if !(sigma > 0.0) {
        return Err(Error::InvalidParams(format!("sigma must be positive, got {sigma}")));
    }
    Ok(())
}

/// Moves every node in `ball` toward `stimulus`; the winner (distance 0)
/// moves by exactly `alpha`.
fn pull_ball(positions: &mut [Point], ball: &[(usize, usize)], stimulus: Point, alpha: f64, sigma: f64) {
    let two_sigma_sq = 2.0 * sigma * sigma;
    for &(node, d) in ball {
        let factor = if d == 0 {
            alpha
        } else {
            let d = d as f64;
            alpha * (-(d * d) / two_sigma_sq).exp()
        };
        let pos = positions[node];
        positions[node] = pos + (stimulus - pos) * factor;
    }
}

/// One SOM update in place. Returns the winner.
pub fn som_step(
    layout: &mut Layout,
    g: &Graph,
    stimulus: Point,
    alpha: f64,
    radius: usize,
    sigma: f64,
) -> Result<usize> {
    check_step_args(alpha, sigma)?;
    layout.check_matches(g)?;
    let w = layout.winner(stimulus)?;
    let ball: Vec<_> = g.distances_within(w, radius)?.into_iter().collect();
    pull_ball(layout.positions_mut(), &ball, stimulus, alpha, sigma);
    Ok(w)
}

/// Runs the full SOM schedule on an existing layout, drawing stimuli from
/// `rng`.
pub fn som_train<R: Rng + ?Sized>(
    layout: &mut Layout,
    g: &Graph,
    region: &Region,
    p: &SomParams,
    rng: &mut R,
) -> Result<()> {
    p.validate()?;
    layout.check_matches(g)?;
    let hoods = Neighborhoods::new(g, p.r_max);
    for t in 0..p.t_max {
        let s = som_schedule(t, p)?;
        let stimulus = region.sample(rng);
        let w = layout.winner(stimulus)?;
        pull_ball(layout.positions_mut(), hoods.ball(w, s.radius), stimulus, s.alpha, s.sigma);
    }
    Ok(())
}

/// Seeded SOM layout: random initial positions, then `t_max` iterations.
pub fn som_layout(g: &Graph, region: &Region, p: &SomParams, seed: u64) -> Result<Layout> {
    p.validate()?;
    let mut rng = seeded_rng(seed);
    let mut layout = random_layout_from(g, region, &mut rng);
    som_train(&mut layout, g, region, p, &mut rng)?;
    Ok(layout)
}
