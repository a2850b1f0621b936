//! Vectors over prime fields and the projective points / hyperplanes built from them.

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FpVector {
    coords: Vec<u32>,
    p: u32,
}

pub fn is_prime(q: u32) -> bool {
    q >= 2 && (2..).take_while(|d| d * d <= q).all(|d| q % d != 0)
}

/// The prime `p` with `q = p^m`, `m >= 1`, if `q` is a prime power.
pub fn prime_power_base(q: u32) -> Option<u32> {
    let p = (2..=q).find(|d| q % d == 0)?;
    let mut r = q;
    while r % p == 0 {
        r /= p;
    }
    (r == 1).then_some(p)
}

/// Accepts prime `q`; prime powers give [`Error::NonPrimeField`], anything else `BadParams`.
pub fn check_field(q: u32) -> Result<()> {
    if is_prime(q) {
        Ok(())
    } else if prime_power_base(q).is_some() {
        Err(Error::NonPrimeField(q))
    } else {
        Err(Error::BadParams(format!("field order {q} is not a prime power")))
    }
}

impl FpVector {
    pub fn new(coords: Vec<u32>, p: u32) -> Result<Self> {
        check_field(p)?;
        if let Some(&c) = coords.iter().find(|&&c| c >= p) {
            return Err(Error::BadParams(format!("coordinate {c} not reduced mod {p}")));
        }
        Ok(FpVector { coords, p })
    }

    pub fn coords(&self) -> &[u32] {
        &self.coords
    }

    pub fn modulus(&self) -> u32 {
        self.p
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }

    pub fn dot(&self, other: &FpVector) -> u32 {
        let p = self.p as u64;
        let s: u64 = self.coords.iter().zip(&other.coords).map(|(&a, &b)| a as u64 * b as u64 % p).sum();
        (s % p) as u32
    }

    pub fn add(&self, other: &FpVector) -> FpVector {
        let coords = self.coords.iter().zip(&other.coords).map(|(&a, &b)| (a + b) % self.p).collect();
        FpVector { coords, p: self.p }
    }

    pub fn scale(&self, k: u32) -> FpVector {
        let coords = self.coords.iter().map(|&a| (a as u64 * k as u64 % self.p as u64) as u32).collect();
        FpVector { coords, p: self.p }
    }

    /// Scalar multiple whose first non-zero coordinate is 1.
    pub fn normalized(&self) -> FpVector {
        match self.coords.iter().find(|&&c| c != 0) {
            Some(&lead) => self.scale(inverse(lead, self.p)),
            None => self.clone(),
        }
    }

    /// Every vector of `F_p^n` in lexicographic order.
    pub fn all(n: usize, p: u32) -> Vec<FpVector> {
        let total = (p as usize).pow(n as u32);
        (0..total)
            .map(|mut k| {
                let mut coords = vec![0; n];
                for c in coords.iter_mut().rev() {
                    *c = (k % p as usize) as u32;
                    k /= p as usize;
                }
                FpVector { coords, p }
            })
            .collect()
    }

    /// One normalized representative per 1-dimensional subspace, sorted.
    pub fn projective_points(n: usize, p: u32) -> Vec<FpVector> {
        Self::all(n, p)
            .into_iter()
            .filter(|v| !v.is_zero() && v.normalized() == *v)
            .collect()
    }
}

impl std::fmt::Display for FpVector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for c in &self.coords {
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

fn inverse(a: u32, p: u32) -> u32 {
    // Fermat: a^(p-2) mod p.
    let (mut base, mut exp, mut acc) = (a as u64 % p as u64, p as u64 - 2, 1u64);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p as u64;
        }
        base = base * base % p as u64;
        exp >>= 1;
    }
    acc as u32
}

/// Dimension of the span of `vs` (all over the same field).
pub fn rank(vs: &[FpVector]) -> usize {
    let Some(first) = vs.first() else {
        return 0;
    };
    let p = first.p as u64;
    let mut rows: Vec<Vec<u64>> = vs.iter().map(|v| v.coords.iter().map(|&c| c as u64).collect()).collect();
    let cols = first.dim();
    let mut r = 0;
    for c in 0..cols {
        let Some(pivot) = (r..rows.len()).find(|&i| rows[i][c] != 0) else {
            continue;
        };
        rows.swap(r, pivot);
        let inv = inverse(rows[r][c] as u32, p as u32) as u64;
        for x in rows[r].iter_mut() {
            *x = *x * inv % p;
        }
        for i in 0..rows.len() {
            if i != r && rows[i][c] != 0 {
                let f = rows[i][c];
                for j in 0..cols {
                    rows[i][j] = (rows[i][j] + (p - f) * rows[r][j]) % p;
                }
            }
        }
        r += 1;
    }
    r
}

pub fn in_span(vs: &[FpVector], v: &FpVector) -> bool {
    let mut with = vs.to_vec();
    with.push(v.clone());
    rank(&with) == rank(vs)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_checks() {
        assert!(check_field(3).is_ok());
        assert_eq!(check_field(4), Err(Error::NonPrimeField(4)));
        assert_eq!(check_field(9), Err(Error::NonPrimeField(9)));
        assert!(matches!(check_field(6), Err(Error::BadParams(_))));
        assert!(matches!(FpVector::new(vec![3], 3), Err(Error::BadParams(_))));
    }

    #[test]
    fn point_counts() {
        assert_eq!(FpVector::projective_points(3, 2).len(), 7);
        assert_eq!(FpVector::projective_points(4, 2).len(), 15);
        assert_eq!(FpVector::projective_points(4, 3).len(), 40);
    }

    #[test]
    fn rank_and_span() {
        let v = |c: Vec<u32>| FpVector::new(c, 3).unwrap();
        let a = v(vec![1, 2, 0]);
        let b = v(vec![0, 1, 1]);
        assert_eq!(rank(&[a.clone(), b.clone(), a.add(&b)]), 2);
        assert!(in_span(&[a.clone(), b.clone()], &a.add(&b.scale(2))));
        assert!(!in_span(&[a.clone(), b], &v(vec![0, 0, 1])));
        assert_eq!(a.scale(2).normalized(), a);
    }
}
