//! Exponent vectors.

/// Monomial as a dense exponent vector.
///
/// The derived `Ord` is the structural lexicographic order on exponent
/// vectors; it fixes the canonical storage order inside polynomials and is
/// unrelated to the term orders used by Gröbner computations.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Monomial(e)
    }

    pub fn from_exponents(e: Vec<u32>) -> Self {
        Monomial(e)
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn exp(&self, i: usize) -> u32 {
        self.0[i]
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn try_div(&self, other: &Monomial) -> Option<Monomial> {
        if other.divides(self) {
            Some(Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect()))
        } else {
            None
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.min(b)).collect())
    }

    pub fn coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Indices of variables with nonzero exponent.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().filter(|(_, &e)| e > 0).map(|(i, _)| i)
    }

    /// Raise one variable's exponent.
    pub fn with_exp(&self, i: usize, e: u32) -> Monomial {
        let mut v = self.0.clone();
        v[i] = e;
        Monomial(v)
    }

    /// Re-index exponents into a smaller variable set; entries mapped to `None`
    /// must have exponent zero.
    pub fn project(&self, map: &[Option<usize>], new_nvars: usize) -> Option<Monomial> {
        let mut out = vec![0u32; new_nvars];
        for (i, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            match map[i] {
                Some(j) => out[j] = e,
                None => return None,
            }
        }
        Some(Monomial(out))
    }

    /// Re-index exponents into a larger variable set.
    pub fn inject(&self, map: &[usize], new_nvars: usize) -> Monomial {
        let mut out = vec![0u32; new_nvars];
        for (i, &e) in self.0.iter().enumerate() {
            out[map[i]] = e;
        }
        Monomial(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn division_and_lcm() {
        let a = Monomial::from_exponents(vec![2, 0, 1]);
        let b = Monomial::from_exponents(vec![1, 1, 0]);
        assert!(!b.divides(&a));
        assert_eq!(a.lcm(&b), Monomial::from_exponents(vec![2, 1, 1]));
        assert_eq!(a.gcd(&b), Monomial::from_exponents(vec![1, 0, 0]));
        assert_eq!(a.try_div(&Monomial::from_exponents(vec![1, 0, 1])), Some(Monomial::from_exponents(vec![1, 0, 0])));
        assert!(!a.coprime(&b));
        assert!(Monomial::from_exponents(vec![0, 2, 0]).coprime(&Monomial::from_exponents(vec![1, 0, 1])));
    }
}
