//! Adjacency spectra: floating eigenvalues via cyclic Jacobi rotations and
//! the exact integer characteristic polynomial.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::scalar::Real;

/// Eigenvalues with absolute value at or below this are treated as zero.
pub const ZERO_EIGENVALUE_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct JacobiOptions<S> {
    /// Stop once the off-diagonal Frobenius norm is at or below this.
    pub off_tol: S,
    pub max_sweeps: usize,
}

impl<S: Real> Default for JacobiOptions<S> {
    fn default() -> Self {
        JacobiOptions { off_tol: S::of(1e-12), max_sweeps: 100 }
    }
}

impl<S: Real> JacobiOptions<S> {
    pub fn with_tol(off_tol: S) -> Self {
        JacobiOptions { off_tol, ..Self::default() }
    }
}

/// Adjacency eigenvalues, sorted descending.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Spectrum<S> {
    pub eigenvalues: Vec<S>,
    /// Jacobi sweeps used; `None` if the sweep cap was hit first.
    #[serde(skip)]
    pub sweeps: Option<usize>,
}

impl<S: Real> Spectrum<S> {
    pub fn order(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn trace(&self) -> S {
        self.eigenvalues.iter().copied().sum()
    }

    pub fn sum_of_squares(&self) -> S {
        self.eigenvalues.iter().map(|&l| l * l).sum()
    }

    /// Sum of absolute eigenvalues.
    pub fn energy(&self) -> S {
        self.eigenvalues.iter().map(|l| l.abs()).sum()
    }

    /// Largest `|λ_i + λ_{n-1-i}|`; zero for a spectrum symmetric about 0.
    pub fn asymmetry(&self) -> S {
        let n = self.eigenvalues.len();
        (0..n)
            .map(|i| (self.eigenvalues[i] + self.eigenvalues[n - 1 - i]).abs())
            .fold(S::zero(), S::max)
    }
}

/// Dense symmetric eigenvalues by cyclic Jacobi rotations.
pub fn symmetric_eigenvalues<S: Real>(mut a: Vec<Vec<S>>, opts: JacobiOptions<S>) -> Spectrum<S> {
    let n = a.len();
    let frob: S = a.iter().flatten().map(|&v| v * v).sum::<S>().sqrt();
    // below this the requested tolerance is out of reach for the scalar type
    let floor = S::epsilon() * S::of(16.0) * frob;
    let tol = opts.off_tol.max(floor);
    let off_norm = |a: &Vec<Vec<S>>| -> S {
        let mut s = S::zero();
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    s = s + a[i][j] * a[i][j];
                }
            }
        }
        s.sqrt()
    };

    let mut sweeps = None;
    for sweep in 0..=opts.max_sweeps {
        if off_norm(&a) <= tol {
            sweeps = Some(sweep);
            break;
        }
        if sweep == opts.max_sweeps {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p][q];
                if apq == S::zero() {
                    continue;
                }
                let theta = (a[q][q] - a[p][p]) / (S::of(2.0) * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + S::one()).sqrt());
                let c = S::one() / (t * t + S::one()).sqrt();
                let s = t * c;
                for k in 0..n {
                    let akp = a[k][p];
                    let akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[p][k];
                    let aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
            }
        }
    }
    let mut eigenvalues: Vec<S> = (0..n).map(|i| a[i][i]).collect();
    eigenvalues.sort_by(|x, y| y.partial_cmp(x).expect("finite eigenvalues"));
    Spectrum { eigenvalues, sweeps }
}

pub fn eigenvalues_with<S: Real>(g: &Graph, opts: JacobiOptions<S>) -> Spectrum<S> {
    let a = g
        .adjacency_matrix()
        .into_iter()
        .map(|row| row.into_iter().map(|v| if v == 1 { S::one() } else { S::zero() }).collect())
        .collect();
    symmetric_eigenvalues(a, opts)
}

/// Adjacency eigenvalues, sorted descending.
pub fn eigenvalues<S: Real>(g: &Graph) -> Spectrum<S> {
    eigenvalues_with(g, JacobiOptions::default())
}

/// Characteristic polynomial `det(λI − A)` with exact integer coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CharPoly {
    /// `coeffs[k]` multiplies `λ^k`.
    coeffs: Vec<BigInt>,
}

impl CharPoly {
    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        CharPoly { coeffs }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, power: usize) -> &BigInt {
        &self.coeffs[power]
    }

    /// Horner evaluation in floating point.
    pub fn eval<S: Real>(&self, x: S) -> S {
        self.coeffs
            .iter()
            .rev()
            .fold(S::zero(), |acc, c| acc * x + S::from_f64(c.to_f64().unwrap_or(f64::NAN)).unwrap())
    }

    /// Sum of absolute coefficient values times `|x|^k`, the natural scale of
    /// the rounding error in [`CharPoly::eval`].
    pub fn eval_scale<S: Real>(&self, x: S) -> S {
        self.coeffs
            .iter()
            .rev()
            .fold(S::zero(), |acc, c| acc * x.abs() + S::from_f64(c.abs().to_f64().unwrap_or(f64::NAN)).unwrap())
    }
}

impl fmt::Display for CharPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            first = false;
            match (k, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => f.write_str("x")?,
                (1, false) => write!(f, "{mag}x")?,
                (_, true) => write!(f, "x^{k}")?,
                (_, false) => write!(f, "{mag}x^{k}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl Serialize for CharPoly {
    fn serialize<Ser: Serializer>(&self, s: Ser) -> std::result::Result<Ser::Ok, Ser::Error> {
        s.collect_seq(self.coeffs.iter().map(|c| c.to_string()))
    }
}

/// Exact characteristic polynomial by the Faddeev–LeVerrier recurrence over
/// the integers; each trace division is exact.
pub fn char_poly(g: &Graph) -> CharPoly {
    let n = g.order();
    let mut coeffs = vec![BigInt::zero(); n + 1];
    coeffs[n] = BigInt::one();
    // m holds M_{k-1}; start from M_0 = 0
    let mut m: Vec<Vec<BigInt>> = vec![vec![BigInt::zero(); n]; n];
    for k in 1..=n {
        // M_k = A M_{k-1} + c_{n-k+1} I
        let mut next = vec![vec![BigInt::zero(); n]; n];
        for (i, row) in next.iter_mut().enumerate() {
            for &w in g.neighbors(i) {
                for (dst, src) in row.iter_mut().zip(&m[w]) {
                    *dst += src;
                }
            }
            row[i] += &coeffs[n - k + 1];
        }
        // tr(A M_k) = Σ_i Σ_{w ∈ N(i)} M_k[w][i]
        let mut trace = BigInt::zero();
        for (i, _) in next.iter().enumerate() {
            for &w in g.neighbors(i) {
                trace += &next[w][i];
            }
        }
        coeffs[n - k] = -(trace / BigInt::from(k));
        m = next;
    }
    CharPoly { coeffs }
}

/// Whether two graphs of equal order share a characteristic polynomial.
pub fn is_cospectral(a: &Graph, b: &Graph) -> Result<bool> {
    if a.order() != b.order() {
        return Err(Error::OrderMismatch(a.order(), b.order()));
    }
    Ok(char_poly(a) == char_poly(b))
}
