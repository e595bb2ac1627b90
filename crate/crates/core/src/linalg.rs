//! Small exact linear algebra over `Ratio<i64>`.

use num_rational::Ratio;
use num_traits::{One, Zero};

pub(crate) type Rational = Ratio<i64>;
pub(crate) type RatMatrix = Vec<Vec<Rational>>;

pub(crate) fn to_rational(m: &[Vec<i64>]) -> RatMatrix {
    m.iter()
        .map(|row| row.iter().map(|&x| Rational::from_integer(x)).collect())
        .collect()
}

pub(crate) fn transpose(m: &RatMatrix, cols: usize) -> RatMatrix {
    (0..cols)
        .map(|j| m.iter().map(|row| row[j]).collect())
        .collect()
}

pub(crate) fn mat_mul(a: &RatMatrix, b: &RatMatrix, b_cols: usize) -> RatMatrix {
    a.iter()
        .map(|row| {
            (0..b_cols)
                .map(|j| {
                    row.iter()
                        .zip(b)
                        .fold(Rational::zero(), |acc, (&x, brow)| acc + x * brow[j])
                })
                .collect()
        })
        .collect()
}

/// Gauss-Jordan inverse of a square matrix; `None` if singular.
pub(crate) fn invert(m: &RatMatrix) -> Option<RatMatrix> {
    let n = m.len();
    let mut a: RatMatrix = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| {
                if i == j {
                    Rational::one()
                } else {
                    Rational::zero()
                }
            }));
            r
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        let p = a[col][col];
        for x in a[col].iter_mut() {
            *x /= p;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col];
                let pivot_row = a[col].clone();
                for (x, y) in a[r].iter_mut().zip(pivot_row) {
                    *x -= f * y;
                }
            }
        }
    }
    Some(a.into_iter().map(|row| row[n..].to_vec()).collect())
}

/// A linearly independent family of integer vectors together with a rational
/// left inverse, for exact coordinate extraction.
#[derive(Debug, Clone)]
pub(crate) struct Basis {
    vectors: Vec<Vec<i64>>,
    left_inverse: RatMatrix,
}

impl Basis {
    /// Panics if the vectors are linearly dependent.
    pub(crate) fn new(vectors: Vec<Vec<i64>>, dim: usize) -> Self {
        let k = vectors.len();
        // A has the vectors as columns; L = (A^T A)^{-1} A^T.
        let at = to_rational(&vectors);
        let a = transpose(&at, dim);
        let gram = mat_mul(&at, &a, k);
        let left_inverse = if k == 0 {
            Vec::new()
        } else {
            let gi = invert(&gram).expect("basis vectors must be linearly independent");
            mat_mul(&gi, &at, dim)
        };
        Basis {
            vectors,
            left_inverse,
        }
    }

    /// Rational coordinates of `v`, or `None` if `v` is outside the span.
    pub(crate) fn coords(&self, v: &[i64]) -> Option<Vec<Rational>> {
        let c: Vec<Rational> = self
            .left_inverse
            .iter()
            .map(|row| {
                row.iter()
                    .zip(v)
                    .fold(Rational::zero(), |acc, (&l, &x)| acc + l * x)
            })
            .collect();
        let recon_ok = (0..v.len()).all(|i| {
            let s = self
                .vectors
                .iter()
                .zip(&c)
                .fold(Rational::zero(), |acc, (b, &ci)| acc + ci * b[i]);
            s == Rational::from_integer(v[i])
        });
        recon_ok.then_some(c)
    }

    /// Integer coordinates of `v`, or `None` if `v` is not in the lattice
    /// spanned by the basis.
    pub(crate) fn integer_coords(&self, v: &[i64]) -> Option<Vec<i64>> {
        self.coords(v)?
            .into_iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_of_a2_cartan() {
        let c = to_rational(&[vec![2, -1], vec![-1, 2]]);
        let inv = invert(&c).unwrap();
        assert_eq!(inv[0][0], Rational::new(2, 3));
        assert_eq!(inv[0][1], Rational::new(1, 3));
        assert!(invert(&to_rational(&[vec![1, 2], vec![2, 4]])).is_none());
    }

    #[test]
    fn coords_detect_span_and_integrality() {
        let b = Basis::new(vec![vec![1, -1, 0], vec![0, 1, -1]], 3);
        assert_eq!(b.integer_coords(&[1, 0, -1]), Some(vec![1, 1]));
        assert_eq!(b.integer_coords(&[1, 1, 1]), None);
        let b2 = Basis::new(vec![vec![2, 0]], 2);
        assert_eq!(b2.integer_coords(&[1, 0]), None);
        assert_eq!(b2.coords(&[1, 0]), Some(vec![Rational::new(1, 2)]));
    }
}
