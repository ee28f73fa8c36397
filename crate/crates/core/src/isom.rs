//! Inverted self-organizing map layout.
//!
//! The graph is the network and the stimuli come from a fixed uniform
//! distribution over the region. Per epoch the adaption is
//! `max(min_adaption, exp(-c·t/t_max)·max_adaption)`, and every node within
//! `radius` hops of the winner is updated as
//! `pos := pos - 2^-d · alpha · (pos - stimulus)`.
//!
//! The radius is held for [`IsomParams::stage_length`] epochs before each
//! decrement, so every radius in `r_max..=r_min` gets an equal share of the
//! run. Decrementing after every epoch is available through
//! [`IsomParams::with_per_epoch_radius_decay`]. The default `r_min` is 1: a
//! final `r = 0` phase at the adaption this schedule reaches (about 0.3)
//! undoes the ordering.

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::layout::random_layout_from;
use crate::rng::seeded_rng;
use crate::{Error, Graph, Layout, Neighborhoods, Point, Region, Result};

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct IsomParams {
    pub t_max: usize,
    pub max_adaption: f64,
    pub min_adaption: f64,
    pub cooling: f64,
    pub r_max: usize,
    pub r_min: usize,
    /// Epochs spent at each radius before it is decremented. `None` splits
    /// `t_max` evenly over the radii `r_max..=r_min`; `Some(1)` decrements
    /// after every epoch.
    pub radius_stage_length: Option<usize>,
}

impl Default for IsomParams {
    fn default() -> Self {
        IsomParams {
            t_max: 1000,
            max_adaption: 0.8,
            min_adaption: 0.15,
            cooling: 1.0,
            r_max: 3,
            r_min: 1,
            radius_stage_length: None,
        }
    }
}

impl IsomParams {
    /// Same parameters with the radius decremented after every epoch.
    pub fn with_per_epoch_radius_decay(self) -> Self {
        IsomParams {
            radius_stage_length: Some(1),
            ..self
        }
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidParams(msg));
        if self.t_max < 1 {
            return bad("t_max must be at least 1".into());
        }
        if !(self.min_adaption > 0.0
            && self.min_adaption <= self.max_adaption
            && self.max_adaption <= 1.0)
        {
            return bad(format!(
                "need 0 < min_adaption <= max_adaption <= 1, got {} and {}",
                self.min_adaption, self.max_adaption
            ));
        }
        if !(self.cooling > 0.0 && self.cooling.is_finite()) {
            return bad(format!("cooling must be positive, got {}", self.cooling));
        }
        if self.r_max < self.r_min {
            return bad(format!("r_max {} is below r_min {}", self.r_max, self.r_min));
        }
        if self.radius_stage_length == Some(0) {
            return bad("radius_stage_length must be at least 1".into());
        }
        Ok(())
    }

    pub fn stage_length(&self) -> usize {
        self.radius_stage_length
            .unwrap_or(self.t_max / (self.r_max - self.r_min + 1))
            .max(1)
    }
}

/// Clamped exponential adaption at epoch `t`, for `0 <= t <= t_max`.
pub fn isom_adaption(t: usize, p: &IsomParams) -> Result<f64> {
    p.validate()?;
    if t > p.t_max {
        return Err(Error::InvalidParams(format!(
            "epoch {t} outside 0..={}",
            p.t_max
        )));
    }
    let cooled = (-p.cooling * (t as f64 / p.t_max as f64)).exp() * p.max_adaption;
    Ok(p.min_adaption.max(cooled))
}

/// Radius in effect during epoch `t`.
pub fn isom_radius(t: usize, p: &IsomParams) -> usize {
    let steps = (t / p.stage_length()).min(p.r_max - p.r_min);
    p.r_max - steps
}

/// Neighbourhood falloff `2^-d`.
pub fn isom_factor(d: usize) -> f64 {
    let d = i32::try_from(d).unwrap_or(i32::MAX);
    2f64.powi(-d)
}

fn pull_ball(positions: &mut [Point], ball: &[(usize, usize)], stimulus: Point, alpha: f64) {
    for &(node, d) in ball {
        let pos = positions[node];
        positions[node] = pos - (pos - stimulus) * (isom_factor(d) * alpha);
    }
}

/// One ISOM update in place. Returns the winner.
pub fn isom_step(
    layout: &mut Layout,
    g: &Graph,
    stimulus: Point,
    alpha: f64,
    radius: usize,
) -> Result<usize> {
    if !(alpha > 0.0 && alpha <= 1.0) {
        return Err(Error::InvalidParams(format!("alpha must lie in (0, 1], got {alpha}")));
    }
    layout.check_matches(g)?;
    let w = layout.winner(stimulus)?;
    let ball: Vec<_> = g.distances_within(w, radius)?.into_iter().collect();
    pull_ball(layout.positions_mut(), &ball, stimulus, alpha);
    Ok(w)
}

/// Runs `t_max` ISOM epochs on an existing layout.
pub fn isom_train<R: Rng + ?Sized>(
    layout: &mut Layout,
    g: &Graph,
    region: &Region,
    p: &IsomParams,
    rng: &mut R,
) -> Result<()> {
    p.validate()?;
    layout.check_matches(g)?;
    let hoods = Neighborhoods::new(g, p.r_max);
    for t in 0..p.t_max {
        let alpha = isom_adaption(t, p)?;
        let radius = isom_radius(t, p);
        let stimulus = region.sample(rng);
        let w = layout.winner(stimulus)?;
        pull_ball(layout.positions_mut(), hoods.ball(w, radius), stimulus, alpha);
    }
    Ok(())
}

/// Seeded ISOM layout: random initial positions, then `t_max` epochs.
pub fn isom_layout(g: &Graph, region: &Region, p: &IsomParams, seed: u64) -> Result<Layout> {
    p.validate()?;
    let mut rng = seeded_rng(seed);
    let mut layout = random_layout_from(g, region, &mut rng);
    isom_train(&mut layout, g, region, p, &mut rng)?;
    Ok(layout)
}
