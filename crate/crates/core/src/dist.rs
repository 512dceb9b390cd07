//! Finite discrete distributions and scaled Gaussians: moments, log-MGFs,
//! and stop-loss transforms in closed form.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::specfun;

/// One atom of a finite distribution: location `x` with weight `w`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Atom {
    pub x: f64,
    pub w: f64,
}

/// A finite probability distribution in canonical form: atom locations
/// strictly increasing, weights positive and summing to 1.
///
/// Construction merges duplicate locations, drops zero weights and
/// renormalizes. A weight sum off by more than 1e-9 sets a warning flag;
/// more than 1e-6 is rejected as user error.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FiniteDistribution {
    atoms: Vec<Atom>,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    renormalized: bool,
}

impl FiniteDistribution {
    pub fn new(raw: impl IntoIterator<Item = (f64, f64)>) -> Result<Self> {
        let mut atoms: Vec<Atom> = Vec::new();
        for (x, w) in raw {
            if !x.is_finite() || !w.is_finite() {
                return Err(Error::NonFinite("distribution atom"));
            }
            if w == 0.0 {
                continue;
            }
            if w < 0.0 {
                return Err(Error::BadWeight { x, weight: w });
            }
            atoms.push(Atom { x, w });
        }
        if atoms.is_empty() {
            return Err(Error::EmptyDistribution);
        }
        atoms.sort_by(|a, b| a.x.total_cmp(&b.x));
        // merge duplicate locations
        let mut merged: Vec<Atom> = Vec::with_capacity(atoms.len());
        for a in atoms {
            match merged.last_mut() {
                Some(last) if last.x == a.x => last.w += a.w,
                _ => merged.push(a),
            }
        }
        let sum: f64 = merged.iter().map(|a| a.w).sum();
        if (sum - 1.0).abs() > 1e-6 {
            return Err(Error::WeightSum { sum });
        }
        let renormalized = (sum - 1.0).abs() > 1e-9;
        for a in &mut merged {
            a.w /= sum;
        }
        Ok(Self {
            atoms: merged,
            renormalized,
        })
    }

    /// Point mass at `x`.
    pub fn delta(x: f64) -> Self {
        Self::new([(x, 1.0)]).expect("point mass is always valid")
    }

    /// Uniform on {-1, 1}.
    pub fn rademacher() -> Self {
        Self::new([(-1.0, 0.5), (1.0, 0.5)]).expect("valid")
    }

    pub fn atoms(&self) -> &[Atom] {
        &self.atoms
    }

    pub fn len(&self) -> usize {
        self.atoms.len()
    }

    pub fn is_empty(&self) -> bool {
        false // at least one atom by construction
    }

    /// True if the input weights deviated from 1 by more than 1e-9.
    pub fn was_renormalized(&self) -> bool {
        self.renormalized
    }

    pub fn min_atom(&self) -> f64 {
        self.atoms[0].x
    }

    pub fn max_atom(&self) -> f64 {
        self.atoms[self.atoms.len() - 1].x
    }

    pub fn mean(&self) -> f64 {
        self.atoms.iter().map(|a| a.w * a.x).sum()
    }

    pub fn variance(&self) -> f64 {
        let m = self.mean();
        self.atoms.iter().map(|a| a.w * (a.x - m) * (a.x - m)).sum()
    }

    /// `log E[exp(lambda X)]`, computed with a max-shift so that it never
    /// overflows for any finite `lambda`.
    pub fn log_mgf(&self, lambda: f64) -> f64 {
        if lambda == 0.0 {
            return 0.0;
        }
        let shift = self
            .atoms
            .iter()
            .map(|a| lambda * a.x)
            .fold(f64::NEG_INFINITY, f64::max);
        let sum: f64 = self
            .atoms
            .iter()
            .map(|a| a.w * (lambda * a.x - shift).exp())
            .sum();
        shift + sum.ln()
    }

    /// Stop-loss transform `E[(X - t)_+]`.
    pub fn stop_loss(&self, t: f64) -> f64 {
        self.atoms
            .iter()
            .map(|a| a.w * (a.x - t).max(0.0))
            .sum()
    }

    /// The law scaled by `a`: the distribution of `aX` (requires `a > 0`).
    pub fn scaled(&self, a: f64) -> Result<Self> {
        if !(a > 0.0) || !a.is_finite() {
            return Err(Error::Domain {
                context: "scaled",
                value: a,
            });
        }
        Self::new(self.atoms.iter().map(|at| (a * at.x, at.w)))
    }

    /// Collapse the law to its conditional means on the two sides of `t`:
    /// the result has atoms at `E[X | X > t]` and `E[X | X <= t]` with the
    /// matching probabilities. The overall mean and the stop-loss value at
    /// `t` itself are preserved.
    ///
    /// Fails when one side of the split carries no mass.
    pub fn reduce_at_threshold(&self, t: f64) -> Result<Self> {
        let mut p_above = 0.0;
        let mut mass_above = 0.0;
        let mut p_below = 0.0;
        let mut mass_below = 0.0;
        for a in &self.atoms {
            if a.x > t {
                p_above += a.w;
                mass_above += a.w * a.x;
            } else {
                p_below += a.w;
                mass_below += a.w * a.x;
            }
        }
        if p_above <= 0.0 || p_below <= 0.0 {
            return Err(Error::DegenerateSplit {
                tail_prob: p_above,
            });
        }
        Self::new([
            (mass_below / p_below, p_below),
            (mass_above / p_above, p_above),
        ])
    }
}

/// Parameters of the mean-zero two-point law with atoms `(1-p) nu` (weight
/// `p`) and `-p nu` (weight `1-p`).
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct TwoPointParams {
    p: f64,
    nu: f64,
}

impl TwoPointParams {
    pub fn new(p: f64, nu: f64) -> Result<Self> {
        if !(p > 0.0 && p < 1.0) {
            return Err(Error::Domain {
                context: "TwoPointParams p",
                value: p,
            });
        }
        if !(nu > 0.0) || !nu.is_finite() {
            return Err(Error::Domain {
                context: "TwoPointParams nu",
                value: nu,
            });
        }
        Ok(Self { p, nu })
    }

    pub fn p(&self) -> f64 {
        self.p
    }

    pub fn nu(&self) -> f64 {
        self.nu
    }

    /// Upper atom `(1-p) nu`.
    pub fn upper(&self) -> f64 {
        (1.0 - self.p) * self.nu
    }

    /// Lower atom `-p nu`.
    pub fn lower(&self) -> f64 {
        -self.p * self.nu
    }

    /// `log((1-p)/p)`.
    pub fn beta(&self) -> f64 {
        ((1.0 - self.p) / self.p).ln()
    }

    pub fn distribution(&self) -> FiniteDistribution {
        FiniteDistribution::new([(self.lower(), 1.0 - self.p), (self.upper(), self.p)])
            .expect("two-point law is always valid")
    }

    /// Closed-form stop-loss `max(-t, p((1-p)nu - t), 0)`.
    pub fn stop_loss(&self, t: f64) -> f64 {
        (-t).max(self.p * (self.upper() - t)).max(0.0)
    }
}

/// `atanh(x)/x` with its removable singularity at 0 filled in by series.
pub(crate) fn atanh_over_x(x: f64) -> f64 {
    if x.abs() < 2e-6 {
        1.0 + x * x / 3.0
    } else {
        x.atanh() / x
    }
}

/// The largest scale `nu` for which the two-point law at `p` can satisfy the
/// unit Gaussian MGF bound: `nu^2 = 2 log((1-p)/p) / (1 - 2p)`, continuous
/// across the removable singularity at `p = 1/2` (value exactly 2).
pub fn extremal_nu(p: f64) -> Result<f64> {
    if !(p > 0.0 && p < 1.0) {
        return Err(Error::Domain {
            context: "extremal_nu",
            value: p,
        });
    }
    // 2 beta / (1 - 2p) = 4 atanh(u)/u with u = 1 - 2p
    let u = 1.0 - 2.0 * p;
    Ok(2.0 * atanh_over_x(u).sqrt())
}

/// A centered Gaussian with scale `b > 0`.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct ScaledGaussian {
    b: f64,
}

impl ScaledGaussian {
    pub fn new(b: f64) -> Result<Self> {
        if !(b > 0.0) || !b.is_finite() {
            return Err(Error::Domain {
                context: "ScaledGaussian b",
                value: b,
            });
        }
        Ok(Self { b })
    }

    pub fn scale(&self) -> f64 {
        self.b
    }

    /// Closed-form stop-loss
    /// `b phi(t/b) - (t/2) erfc(t/(sqrt 2 b))`.
    pub fn stop_loss(&self, t: f64) -> f64 {
        let b = self.b;
        b * specfun::phi(t / b) - 0.5 * t * specfun::erfc(t / (std::f64::consts::SQRT_2 * b))
    }

    /// Derivative of the stop-loss in `t`: `-erfc(t/(sqrt 2 b))/2`,
    /// always in (-1, 0).
    pub fn stop_loss_slope(&self, t: f64) -> f64 {
        -0.5 * specfun::erfc(t / (std::f64::consts::SQRT_2 * self.b))
    }
}
