//! Dirichlet eigenbasis `e_m(psi) = sin((m+1) psi)` on `[0, pi]` and the
//! quartic interaction coefficients
//! `C_ijk^(m) = (2/pi) int_0^pi e_i e_j e_k e_m / sin^2 psi dpsi`.
//!
//! The coefficients are integers. They are computed by counting index
//! coincidences in the Chebyshev linearization `U_p U_q = sum_s U_{q-p+2s}`,
//! and independently by an exact Gauss quadrature of the same integral.

use std::collections::HashMap;
use std::f64::consts::PI;
use std::sync::{OnceLock, RwLock};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ModesError {
    #[error("psi = {0} lies outside [0, pi]")]
    PsiOutOfRange(f64),
    #[error("Chebyshev argument {0} lies outside [-1, 1]")]
    ArgumentOutOfRange(f64),
}

/// Eigenfrequency of mode `m`.
pub fn omega(m: usize) -> u32 {
    m as u32 + 1
}

pub fn eigen_eval(m: usize, psi: f64) -> Result<f64, ModesError> {
    if !(0.0..=PI).contains(&psi) {
        return Err(ModesError::PsiOutOfRange(psi));
    }
    Ok((omega(m) as f64 * psi).sin())
}

/// `U_n(y)` by the three-term recurrence.
pub fn chebyshev_u(n: usize, y: f64) -> Result<f64, ModesError> {
    if !(-1.0..=1.0).contains(&y) {
        return Err(ModesError::ArgumentOutOfRange(y));
    }
    Ok(chebyshev_u_unchecked(n, y))
}

pub(crate) fn chebyshev_u_unchecked(n: usize, y: f64) -> f64 {
    let mut prev = 1.0;
    if n == 0 {
        return prev;
    }
    let mut cur = 2.0 * y;
    for _ in 1..n {
        let next = 2.0 * y * cur - prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// `U_0(y), ..., U_{count-1}(y)`.
pub fn chebyshev_u_table(count: usize, y: f64) -> Vec<f64> {
    let mut out = Vec::with_capacity(count);
    for n in 0..count {
        let v = match n {
            0 => 1.0,
            1 => 2.0 * y,
            _ => 2.0 * y * out[n - 1] - out[n - 2],
        };
        out.push(v);
    }
    out
}

fn ordered(a: usize, b: usize) -> (i64, i64) {
    if a <= b {
        (a as i64, b as i64)
    } else {
        (b as i64, a as i64)
    }
}

/// Closed formula: with `i <= j`, `k <= m`,
/// `C = #{(a, b) : 0 <= a <= i, 0 <= b <= k, 2(a - b) = (m - k) - (j - i)}`.
pub fn interaction_coeff(i: usize, j: usize, k: usize, m: usize) -> u64 {
    let (i, j) = ordered(i, j);
    let (k, m) = ordered(k, m);
    let target = (m - k) - (j - i);
    let mut count = 0;
    for a in 0..=i {
        for b in 0..=k {
            if 2 * (a - b) == target {
                count += 1;
            }
        }
    }
    count
}

/// Stepped-range form: count coincidences between `{j-i, j-i+2, ..., j+i}`
/// and `{m-k, m-k+2, ..., m+k}`.
pub fn interaction_coeff_stepped(i: usize, j: usize, k: usize, m: usize) -> u64 {
    let (i, j) = ordered(i, j);
    let (k, m) = ordered(k, m);
    let mut count = 0;
    for p in (j - i..=j + i).step_by(2) {
        for q in (m - k..=m + k).step_by(2) {
            if p == q {
                count += 1;
            }
        }
    }
    count
}

/// Nodes and weights of the `n`-point Gauss rule for
/// `int_{-1}^{1} sqrt(1 - y^2) P(y) dy`, exact for `deg P <= 2n - 1`.
pub fn gauss_chebyshev_u_rule(n: usize) -> (Vec<f64>, Vec<f64>) {
    let h = PI / (n as f64 + 1.0);
    (1..=n)
        .map(|k| {
            let theta = k as f64 * h;
            let s = theta.sin();
            (theta.cos(), h * s * s)
        })
        .unzip()
}

/// `(2/pi) int_{-1}^{1} U_i U_j U_k U_m sqrt(1 - y^2) dy` by Gauss quadrature.
pub fn interaction_coeff_quadrature(i: usize, j: usize, k: usize, m: usize) -> f64 {
    let degree = i + j + k + m;
    let (nodes, weights) = gauss_chebyshev_u_rule(degree / 2 + 1);
    let sum: f64 = nodes
        .iter()
        .zip(&weights)
        .map(|(&y, &w)| {
            w * chebyshev_u_unchecked(i, y)
                * chebyshev_u_unchecked(j, y)
                * chebyshev_u_unchecked(k, y)
                * chebyshev_u_unchecked(m, y)
        })
        .sum();
    2.0 / PI * sum
}

/// Memoized interaction coefficients keyed by the sorted index quadruple.
#[derive(Debug, Default)]
pub struct InteractionTable {
    cache: RwLock<HashMap<[usize; 4], u64>>,
}

impl InteractionTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&self, i: usize, j: usize, k: usize, m: usize) -> u64 {
        let mut key = [i, j, k, m];
        key.sort_unstable();
        if let Some(v) = self.cache.read().expect("cache poisoned").get(&key) {
            return *v;
        }
        let value = interaction_coeff(key[0], key[1], key[2], key[3]);
        *self
            .cache
            .write()
            .expect("cache poisoned")
            .entry(key)
            .or_insert(value)
    }

    pub fn len(&self) -> usize {
        self.cache.read().expect("cache poisoned").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// Process-wide table shared by the perturbation engine.
pub fn shared_table() -> &'static InteractionTable {
    static TABLE: OnceLock<InteractionTable> = OnceLock::new();
    TABLE.get_or_init(InteractionTable::new)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn frequencies() {
        assert_eq!(omega(0), 1);
        assert_eq!(omega(3), 4);
        assert_eq!(omega(12), 13);
    }

    #[test]
    fn eigenfunctions() {
        assert!((eigen_eval(0, PI / 2.0).unwrap() - 1.0).abs() < 1e-15);
        assert!((eigen_eval(1, PI / 4.0).unwrap() - 1.0).abs() < 1e-15);
        for m in 0..20 {
            assert_eq!(eigen_eval(m, 0.0).unwrap(), 0.0);
            assert!(eigen_eval(m, PI).unwrap().abs() < 1e-13);
        }
        assert!(matches!(
            eigen_eval(0, 3.2),
            Err(ModesError::PsiOutOfRange(_))
        ));
        assert!(eigen_eval(0, -1e-9).is_err());
    }

    #[test]
    fn chebyshev_values() {
        assert_eq!(chebyshev_u(0, 0.3).unwrap(), 1.0);
        assert_eq!(chebyshev_u(1, 0.5).unwrap(), 1.0);
        assert!(chebyshev_u(2, 1.5).is_err());
        let table = chebyshev_u_table(8, 0.37);
        for (n, v) in table.iter().enumerate() {
            assert!((v - chebyshev_u(n, 0.37).unwrap()).abs() < 1e-14);
        }
    }

    #[test]
    fn sine_identity() {
        for n in 0..=20 {
            for s in 0..100 {
                let psi = 0.031 * s as f64 + 0.001;
                let lhs = psi.sin() * chebyshev_u(n, psi.cos()).unwrap();
                let rhs = ((n + 1) as f64 * psi).sin();
                assert!((lhs - rhs).abs() < 1e-12, "n={n} psi={psi}");
            }
        }
    }

    #[test]
    fn known_coefficients() {
        assert_eq!(interaction_coeff(0, 0, 0, 0), 1);
        assert_eq!(interaction_coeff(0, 2, 2, 0), 1);
        assert_eq!(interaction_coeff(1, 1, 1, 1), 2);
        assert_eq!(interaction_coeff(0, 1, 0, 0), 0);
        for j in 0..8 {
            for k in 0..8 {
                assert_eq!(interaction_coeff(0, j, k, 0), u64::from(j == k));
            }
        }
    }

    #[test]
    fn quadrature_oracle_small() {
        assert!((interaction_coeff_quadrature(0, 0, 0, 0) - 1.0).abs() < 1e-10);
        assert!((interaction_coeff_quadrature(1, 1, 1, 1) - 2.0).abs() < 1e-10);
        assert!(interaction_coeff_quadrature(0, 1, 0, 0).abs() < 1e-10);
        for q in [[2, 2, 2, 2], [0, 1, 2, 3]] {
            let exact = interaction_coeff(q[0], q[1], q[2], q[3]) as f64;
            assert!((interaction_coeff_quadrature(q[0], q[1], q[2], q[3]) - exact).abs() < 1e-10);
        }
    }

    #[test]
    fn table_memoizes_by_sorted_key() {
        let table = InteractionTable::new();
        assert!(table.is_empty());
        assert_eq!(table.get(3, 1, 2, 0), interaction_coeff(0, 1, 2, 3));
        assert_eq!(table.get(0, 2, 1, 3), interaction_coeff(0, 1, 2, 3));
        assert_eq!(table.len(), 1);
    }

    #[test]
    fn table_concurrent_access() {
        let table = InteractionTable::new();
        std::thread::scope(|s| {
            for t in 0..4 {
                let table = &table;
                s.spawn(move || {
                    for i in 0..5 {
                        for j in 0..5 {
                            assert_eq!(table.get(i, j, t, 2), interaction_coeff(i, j, t, 2));
                        }
                    }
                });
            }
        });
    }
}
