//! Small dense complex-matrix helpers shared by every module.
//!
//! Channel spaces here are tiny (a handful of partial waves), so all
//! operations go through dense `nalgebra` matrices of `Complex64`.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use rand::Rng;
use rand_chacha::rand_chacha::ChaCha8Rng;
use rand_chacha::rand_core::SeedableRng;

use crate::error::{Error, Result};

pub type CMat = DMatrix<Complex64>;
pub type CVec = DVector<Complex64>;

pub const C_ZERO: Complex64 = Complex64::new(0.0, 0.0);
pub const C_ONE: Complex64 = Complex64::new(1.0, 0.0);

/// Largest singular value of a square complex matrix.
///
/// This is the operator 2-norm used wherever a matrix magnitude is needed
/// (convergence margins, residual scalings, unitarity checks).
pub fn spectral_norm(m: &CMat) -> f64 {
    assert_eq!(m.nrows(), m.ncols(), "spectral_norm expects a square matrix");
    if m.nrows() == 0 {
        return 0.0;
    }
    m.clone()
        .svd(false, false)
        .singular_values
        .iter()
        .fold(0.0_f64, |acc, s| acc.max(*s))
}

/// Ratio of largest to smallest singular value; `f64::INFINITY` if singular.
pub fn condition_estimate(m: &CMat) -> f64 {
    let sv = m.clone().svd(false, false).singular_values;
    let (mut lo, mut hi) = (f64::INFINITY, 0.0_f64);
    for s in sv.iter() {
        lo = lo.min(*s);
        hi = hi.max(*s);
    }
    if lo == 0.0 {
        f64::INFINITY
    } else {
        hi / lo
    }
}

/// Solve `A x = b` by LU with partial pivoting.
pub fn solve(a: &CMat, b: &CVec) -> Result<CVec> {
    a.clone()
        .lu()
        .solve(b)
        .ok_or_else(|| Error::Domain("singular linear system".into()))
}

pub fn identity(n: usize) -> CMat {
    CMat::identity(n, n)
}

/// Seeded complex Gaussian (Ginibre) matrix; the workhorse behind every
/// reproducible "random matrix" in the synthetic harnesses.
pub fn seeded_gaussian_matrix(n: usize, rng: &mut ChaCha8Rng) -> CMat {
    CMat::from_fn(n, n, |_, _| {
        // Box-Muller from two uniforms, per component.
        let u1: f64 = rng.gen_range(f64::EPSILON..1.0);
        let u2: f64 = rng.gen_range(0.0..std::f64::consts::TAU);
        let r = (-2.0 * u1.ln()).sqrt();
        Complex64::new(r * u2.cos(), r * u2.sin())
    })
}

/// Haar-ish random unitary: Q factor of a Ginibre matrix with the usual
/// phase fix on R's diagonal.
pub fn seeded_unitary(n: usize, rng: &mut ChaCha8Rng) -> CMat {
    let g = seeded_gaussian_matrix(n, rng);
    let qr = g.qr();
    let (q, r) = (qr.q(), qr.r());
    let mut q = q;
    for j in 0..n {
        let d = r[(j, j)];
        let phase = if d.norm() == 0.0 { C_ONE } else { d / d.norm() };
        for i in 0..n {
            q[(i, j)] *= phase;
        }
    }
    q
}

pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}
