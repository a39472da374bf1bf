//! Polar sampling of the level curve `|F(x, y)| = 1`.

use alloc::vec::Vec;
use core::f64::consts::PI;

use super::roots::FactoredPoly;
use crate::error::{Error, Result};
use crate::polycore::BinaryForm;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum CurvePoint {
    Point {
        theta: f64,
        x: f64,
        y: f64,
    },
    /// `F` vanishes in this direction: the region is unbounded along the ray.
    Ray {
        theta: f64,
    },
}

impl CurvePoint {
    pub fn theta(&self) -> f64 {
        match *self {
            CurvePoint::Point { theta, .. } | CurvePoint::Ray { theta } => theta,
        }
    }
}

pub struct CurveSampler {
    factored: FactoredPoly,
    form_degree: usize,
    /// Directions in `[0, 2π)` along which `F` vanishes.
    zero_directions: Vec<f64>,
}

impl CurveSampler {
    pub fn new(f: &BinaryForm) -> Result<Self> {
        let factored = FactoredPoly::new(&f.poly)?;
        let mut zero_directions = Vec::new();
        for r in factored.real_roots().roots {
            let t = libm::atan2(1.0, r.location);
            zero_directions.push(t);
            zero_directions.push(t + PI);
        }
        if f.form_degree > factored.degree() {
            zero_directions.push(0.0);
            zero_directions.push(PI);
        }
        zero_directions.sort_by(f64::total_cmp);
        Ok(CurveSampler {
            factored,
            form_degree: f.form_degree,
            zero_directions,
        })
    }

    pub fn zero_directions(&self) -> &[f64] {
        &self.zero_directions
    }

    /// `|F(cos θ, sin θ)|^(-1/n)`, or `None` when `|F| < 1e-12`.
    pub fn radius(&self, theta: f64) -> Option<f64> {
        let (s, c) = libm::sincos(theta);
        let ln_f = self.factored.ln_abs_form(self.form_degree, c, s);
        if ln_f < libm::log(1e-12) {
            return None;
        }
        Some(libm::exp(-ln_f / self.form_degree as f64))
    }

    /// `count` samples at `θ_k = 2πk/count`. A sample whose bin contains a
    /// zero direction is replaced by a ray in that exact direction.
    pub fn samples(&self, count: usize) -> Result<Vec<CurvePoint>> {
        if count < 8 {
            return Err(Error::Domain("curve sampling needs at least 8 samples"));
        }
        let step = 2.0 * PI / count as f64;
        let mut snapped: Vec<Option<f64>> = alloc::vec![None; count];
        for &phi in &self.zero_directions {
            let k = libm::round(phi / step) as usize % count;
            snapped[k].get_or_insert(phi);
        }
        Ok((0..count)
            .map(|k| {
                if let Some(theta) = snapped[k] {
                    return CurvePoint::Ray { theta };
                }
                let theta = step * k as f64;
                match self.radius(theta) {
                    Some(r) => CurvePoint::Point {
                        theta,
                        x: r * libm::cos(theta),
                        y: r * libm::sin(theta),
                    },
                    None => CurvePoint::Ray { theta },
                }
            })
            .collect())
    }
}

pub fn curve_samples(f: &BinaryForm, count: usize) -> Result<Vec<CurvePoint>> {
    CurveSampler::new(f)?.samples(count)
}
