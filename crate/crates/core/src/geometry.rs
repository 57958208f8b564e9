//! Circular segments and the lens-shaped intersection of two disks.
//!
//! The first circle has radius `R` and sits at the origin, the second has
//! radius `r` and sits at `(d, 0)`.

use std::f64::consts::{FRAC_PI_2, PI};

use crate::error::{Error, Result};
use crate::numeric::{clamp_to_domain, require_finite};

/// Two circles: radius `radius_a` at the origin, `radius_b` at `(separation, 0)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LensConfig {
    radius_a: f64,
    radius_b: f64,
    separation: f64,
}

impl LensConfig {
    pub fn new(radius_a: f64, radius_b: f64, separation: f64) -> Result<Self> {
        for (name, v) in [("R", radius_a), ("r", radius_b)] {
            if !(v > 0.0 && v.is_finite()) {
                return Err(Error::domain(name, v, "a positive finite radius"));
            }
        }
        if !(separation >= 0.0 && separation.is_finite()) {
            return Err(Error::domain("d", separation, "a finite separation >= 0"));
        }
        Ok(LensConfig {
            radius_a,
            radius_b,
            separation,
        })
    }

    /// Two unit circles at separation `d`.
    pub fn unit(separation: f64) -> Result<Self> {
        Self::new(1.0, 1.0, separation)
    }

    pub fn radius_a(&self) -> f64 {
        self.radius_a
    }

    pub fn radius_b(&self) -> f64 {
        self.radius_b
    }

    pub fn separation(&self) -> f64 {
        self.separation
    }

    pub fn with_separation(&self, separation: f64) -> Result<Self> {
        Self::new(self.radius_a, self.radius_b, separation)
    }

    /// `π min(R, r)^2`, the largest possible overlap.
    pub fn max_overlap(&self) -> f64 {
        let m = self.radius_a.min(self.radius_b);
        PI * m * m
    }

    /// True when the circle boundaries cross at two points.
    pub fn intersects_twice(&self) -> bool {
        let d = self.separation;
        d > (self.radius_a - self.radius_b).abs() && d < self.radius_a + self.radius_b
    }
}

/// A circular segment cut from a circle of radius `radius` by a chord at
/// signed distance `apothem` from the centre. Negative apothems describe the
/// major segment.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SegmentSpec {
    radius: f64,
    apothem: f64,
}

impl SegmentSpec {
    pub fn new(radius: f64, apothem: f64) -> Result<Self> {
        if !(radius > 0.0 && radius.is_finite()) {
            return Err(Error::domain("R", radius, "a positive finite radius"));
        }
        require_finite(apothem, "h")?;
        let apothem = clamp_to_domain(apothem, -radius, radius, "h", "|h| <= R")?;
        Ok(SegmentSpec { radius, apothem })
    }

    pub fn radius(&self) -> f64 {
        self.radius
    }

    pub fn apothem(&self) -> f64 {
        self.apothem
    }

    /// Half the chord length, `sqrt(R^2 - h^2)`.
    fn half_chord(&self) -> f64 {
        ((self.radius - self.apothem) * (self.radius + self.apothem)).sqrt()
    }
}

/// Segment area `R^2 arccos(h/R) - h sqrt(R^2 - h^2)`.
pub fn segment_area(s: SegmentSpec) -> f64 {
    let half_chord = s.half_chord();
    // arccos(h/R) == atan2(sqrt(R^2 - h^2), h) for |h| <= R, without the
    // ill-conditioning of arccos near ±1.
    let half_angle = half_chord.atan2(s.apothem);
    s.radius * s.radius * half_angle - s.apothem * half_chord
}

/// Abscissa of the chord through the two intersection points measured from
/// each centre: `(d1, d2)` with `d1 + d2 = d`.
pub fn intersection_abscissae(c: LensConfig) -> Result<(f64, f64)> {
    if !c.intersects_twice() {
        return Err(Error::domain(
            "d",
            c.separation,
            "|R - r| < d < R + r (two intersection points)",
        ));
    }
    let (big_r, r, d) = (c.radius_a, c.radius_b, c.separation);
    let d1 = (d * d - r * r + big_r * big_r) / (2.0 * d);
    let d2 = (d * d + r * r - big_r * big_r) / (2.0 * d);
    Ok((d1, d2))
}

/// Area of the intersection of the two disks.
///
/// Total over every valid configuration: zero once the disks are apart,
/// `π min(R, r)^2` once one contains the other, and the two-segment formula
/// in between. Radii are ordered internally so the result is exactly
/// symmetric in `R` and `r`.
pub fn lens_area(c: LensConfig) -> f64 {
    let (big, small) = if c.radius_a >= c.radius_b {
        (c.radius_a, c.radius_b)
    } else {
        (c.radius_b, c.radius_a)
    };
    let d = c.separation;
    if d >= big + small {
        return 0.0;
    }
    if d <= big - small {
        return PI * small * small;
    }
    // sqrt(-d^4 + 2d^2r^2 + 2d^2R^2 - r^4 + 2r^2R^2 - R^4) in factored form
    let radical = ((big + small - d) * (big + small + d)).sqrt()
        * ((d - (big - small)) * (d + (big - small))).sqrt();
    let half_chord = radical / (2.0 * d);
    let d_big = (d * d + big * big - small * small) / (2.0 * d);
    let d_small = (d * d - big * big + small * small) / (2.0 * d);
    let area = big * big * half_chord.atan2(d_big) + small * small * half_chord.atan2(d_small)
        - 0.5 * radical;
    area.clamp(0.0, PI * small * small)
}

/// Residual of the unit-disk half-overlap equation,
/// `2 arccos(d/2) - (d/2) sqrt(4 - d^2) - π/2`, for `d` in `[0, 2]`.
///
/// Strictly decreasing, zero exactly at the half-area offset.
pub fn half_overlap_gap(d: f64) -> Result<f64> {
    require_finite(d, "d")?;
    let d = clamp_to_domain(d, 0.0, 2.0, "d", "a value in [0, 2]")?;
    let root = ((2.0 - d) * (2.0 + d)).sqrt();
    Ok(2.0 * (0.5 * d).acos() - 0.5 * d * root - FRAC_PI_2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn lens(big_r: f64, r: f64, d: f64) -> f64 {
        lens_area(LensConfig::new(big_r, r, d).unwrap())
    }

    #[test]
    fn config_validation() {
        assert!(LensConfig::new(0.0, 1.0, 1.0).is_err());
        assert!(LensConfig::new(1.0, -1.0, 1.0).is_err());
        assert!(LensConfig::new(1.0, 1.0, -0.1).is_err());
        assert!(LensConfig::new(1.0, 1.0, f64::NAN).is_err());
        assert!(SegmentSpec::new(1.0, 1.5).is_err());
        assert_eq!(
            SegmentSpec::new(1.0, 1.0 + f64::EPSILON).unwrap().apothem(),
            1.0
        );
    }

    #[test]
    fn segment_examples() {
        assert_eq!(segment_area(SegmentSpec::new(1.0, 1.0).unwrap()), 0.0);
        assert!((segment_area(SegmentSpec::new(1.0, 0.0).unwrap()) - PI / 2.0).abs() < 1e-15);
        assert!((segment_area(SegmentSpec::new(1.0, -1.0).unwrap()) - PI).abs() < 1e-15);
    }

    #[test]
    fn segment_matches_arccos_formula() {
        for i in -10..=10 {
            let h = 2.0 * f64::from(i) / 10.0;
            let s = SegmentSpec::new(2.0, h).unwrap();
            let literal = 4.0 * (h / 2.0).acos() - h * (4.0 - h * h).sqrt();
            assert!((segment_area(s) - literal).abs() < 1e-14, "h = {h}");
        }
    }

    #[test]
    fn abscissae_examples() {
        let (d1, d2) = intersection_abscissae(LensConfig::unit(1.0).unwrap()).unwrap();
        assert_eq!((d1, d2), (0.5, 0.5));

        let dd = 0.807_945_506_6;
        let (d1, d2) = intersection_abscissae(LensConfig::unit(dd).unwrap()).unwrap();
        assert!((d1 - 0.403_972_753_3).abs() < 1e-15);
        assert_eq!(d1, d2);

        let (d1, d2) = intersection_abscissae(LensConfig::new(2.0, 1.0, 2.0).unwrap()).unwrap();
        assert_eq!((d1, d2), (1.75, 0.25));
        assert_eq!(d1 + d2, 2.0);
    }

    #[test]
    fn abscissae_errors() {
        for (big_r, r, d) in [
            (1.0, 1.0, 0.0),
            (1.0, 1.0, 2.0),
            (1.0, 1.0, 3.0),
            (3.0, 1.0, 2.0),
        ] {
            let c = LensConfig::new(big_r, r, d).unwrap();
            assert!(intersection_abscissae(c).is_err(), "{big_r} {r} {d}");
        }
    }

    #[test]
    fn lens_examples() {
        assert_eq!(lens(1.0, 1.0, 0.0), PI);
        assert_eq!(lens(1.0, 1.0, 2.0), 0.0);
        let expected = 2.0 * PI / 3.0 - 3f64.sqrt() / 2.0;
        assert!((lens(1.0, 1.0, 1.0) - expected).abs() < 1e-15);
        assert!((lens(1.0, 1.0, 0.807_945_506_599_034_4) - PI / 2.0).abs() < 1e-13);
        assert_eq!(lens(3.0, 1.0, 0.5), PI);
        assert_eq!(lens(1.0, 3.0, 0.5), PI);
    }

    #[test]
    fn factored_radical_matches_quartic() {
        for &(big_r, r, d) in &[
            (1.0_f64, 1.0_f64, 1.0_f64),
            (2.0, 1.0, 2.0),
            (1.5, 0.7, 1.1),
            (3.0, 2.5, 4.0),
        ] {
            let quartic: f64 = -d.powi(4) + 2.0 * d * d * r * r + 2.0 * d * d * big_r * big_r
                - r.powi(4)
                + 2.0 * r * r * big_r * big_r
                - big_r.powi(4);
            let factored: f64 =
                ((big_r + r) * (big_r + r) - d * d) * (d * d - (big_r - r) * (big_r - r));
            assert!((quartic - factored).abs() < 1e-12 * quartic.abs().max(1.0));
        }
    }

    #[test]
    fn gap_examples() {
        assert!((half_overlap_gap(0.0).unwrap() - PI / 2.0).abs() < 1e-15);
        assert!((half_overlap_gap(2.0).unwrap() + PI / 2.0).abs() < 1e-15);
        assert!(half_overlap_gap(0.807_945_506_599_034_4).unwrap().abs() < 1e-13);
        assert!(half_overlap_gap(2.1).is_err());
        assert!(half_overlap_gap(-0.1).is_err());
    }
}
