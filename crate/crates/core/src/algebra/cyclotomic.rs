//! Cyclotomic polynomials, used to keep fixed-point denominators factored.

use std::collections::BTreeMap;

use super::poly::Poly;
use crate::Rational;

/// Positive divisors of `n` in increasing order.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Memoised `Φ_n(x)` over the rationals.
#[derive(Default)]
pub struct CyclotomicTable {
    cache: BTreeMap<u64, Poly<Rational>>,
}

impl CyclotomicTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&mut self, n: u64) -> Poly<Rational> {
        assert!(n >= 1, "cyclotomic index must be positive");
        if let Some(p) = self.cache.get(&n) {
            return p.clone();
        }
        // x^n - 1 = Π_{d | n} Φ_d
        let mut num = Poly::x_pow(n as usize);
        num = &num - &Poly::one();
        for d in divisors(n) {
            if d == n {
                break;
            }
            let phi = self.get(d);
            num = num
                .div_exact_monic(&phi)
                .expect("Φ_d divides x^n - 1 for d | n");
        }
        self.cache.insert(n, num.clone());
        num
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    #[test]
    fn small_cyclotomics() {
        let mut t = CyclotomicTable::new();
        let p = |v: &[i64]| Poly::from_coeffs(v.iter().map(|&x| rat(x)).collect());
        assert_eq!(t.get(1), p(&[-1, 1]));
        assert_eq!(t.get(2), p(&[1, 1]));
        assert_eq!(t.get(4), p(&[1, 0, 1]));
        assert_eq!(t.get(6), p(&[1, -1, 1]));
        assert_eq!(t.get(12), p(&[1, 0, -1, 0, 1]));
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
    }
}
