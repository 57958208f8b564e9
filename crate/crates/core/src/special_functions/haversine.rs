use crate::error::Result;
use crate::numeric::{clamp_to_domain, require_finite};

/// Haversine `sin^2(x / 2)`.
pub fn hav(x: f64) -> Result<f64> {
    require_finite(x, "x")?;
    Ok((0.5 * x).sin().powi(2))
}

/// Inverse haversine `2 arcsin(sqrt(h))` for `h` in `[0, 1]`, in `[0, π]`.
pub fn archav(h: f64) -> Result<f64> {
    let h = clamp_to_domain(h, 0.0, 1.0, "h", "a value in [0, 1]")?;
    Ok(2.0 * h.sqrt().asin())
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn examples() {
        assert_eq!(hav(0.0).unwrap(), 0.0);
        assert!((hav(PI).unwrap() - 1.0).abs() < 1e-16);
        let v = 0.83171;
        assert!((archav(hav(v).unwrap()).unwrap() - v).abs() < 1e-13);
        assert!((archav(1.0).unwrap() - PI).abs() < 1e-15);
    }

    #[test]
    fn errors() {
        assert!(archav(1.01).is_err());
        assert!(archav(-0.5).is_err());
        assert!(hav(f64::INFINITY).is_err());
    }
}
