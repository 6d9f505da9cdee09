//! Complex Gamma function and the additive character `e[x] = exp(2πix)`.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Distance to a pole below which evaluation is refused.
pub const POLE_RADIUS: f64 = 1e-8;

const LANCZOS_G: f64 = 7.0;
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_9,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_1,
    -176.615_029_162_140_6,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_572e-6,
    1.505_632_735_149_311_6e-7,
];

fn lanczos(z: Complex64) -> Complex64 {
    let z = z - 1.0;
    let mut x = Complex64::new(LANCZOS[0], 0.0);
    for (i, c) in LANCZOS.iter().enumerate().skip(1) {
        x += c / (z + i as f64);
    }
    let t = z + LANCZOS_G + 0.5;
    (2.0 * PI).sqrt() * t.powc(z + 0.5) * (-t).exp() * x
}

/// Distance from `z` to the nearest non-positive integer, or infinity when
/// `Re z > 1/2`.
pub fn pole_distance(z: Complex64) -> f64 {
    if z.re > 0.5 {
        return f64::INFINITY;
    }
    let k = z.re.round().min(0.0);
    (z - k).norm()
}

/// `Γ(z)` for complex `z`, with reflection for `Re z < 1/2`.
pub fn gamma(z: Complex64) -> Result<Complex64> {
    if pole_distance(z) < POLE_RADIUS {
        return Err(Error::Pole(format!("Gamma has a pole near {z}")));
    }
    Ok(gamma_unchecked(z))
}

fn gamma_unchecked(z: Complex64) -> Complex64 {
    if z.re < 0.5 {
        PI / ((PI * z).sin() * lanczos(1.0 - z))
    } else {
        lanczos(z)
    }
}

/// `e[x] = exp(2πi x)`.
pub fn e(x: Complex64) -> Complex64 {
    (Complex64::i() * 2.0 * PI * x).exp()
}

pub fn c(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}
