//! Schroeder numbers and the generating-series identities that count the
//! primitive spaces.
//!
//! Everything is exact: the closed form involving a square root is never
//! evaluated; the corresponding identity is checked in the squared,
//! polynomial form `(4X(1+R) - 1 - X)^2 = 1 - 6X + X^2`.

use num::{BigInt, One, Zero};

use crate::report::Report;
use crate::vect::Coeff;

/// The `n`-th small Schroeder number via the three-term recurrence
/// `(n+1) a_n = (6n-3) a_{n-1} - (n-2) a_{n-2}`, `a_0 = a_1 = 1`.
/// The division is checked to be exact.
pub fn small_schroeder(n: usize) -> BigInt {
    let mut a: Vec<BigInt> = vec![BigInt::one(), BigInt::one()];
    for m in 2..=n.max(1) {
        let m_int = BigInt::from(m);
        let numerator =
            (BigInt::from(6 * m - 3)) * &a[m - 1] - (m_int.clone() - BigInt::from(2)) * &a[m - 2];
        let denominator = m_int + BigInt::one();
        let (q, r) = num::Integer::div_rem(&numerator, &denominator);
        assert!(r.is_zero(), "Schroeder recurrence division must be exact");
        a.push(q);
    }
    a[n].clone()
}

/// The `n`-th big Schroeder number: `A_0 = 0`, `A_1 = A_2 = 1`, and
/// `A_n = 2 a_{n-2}` for `n >= 3`.
pub fn big_schroeder(n: usize) -> BigInt {
    match n {
        0 => BigInt::zero(),
        1 | 2 => BigInt::one(),
        _ => BigInt::from(2) * small_schroeder(n - 2),
    }
}

/// A rational power series truncated at a fixed order; all arithmetic is
/// exact through that order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalSeries {
    coeffs: Vec<Coeff>,
}

impl RationalSeries {
    /// The zero series truncated at order `order` (inclusive).
    pub fn zero(order: usize) -> Self {
        RationalSeries {
            coeffs: vec![Coeff::zero(); order + 1],
        }
    }

    pub fn from_coeffs(coeffs: Vec<Coeff>) -> Self {
        assert!(!coeffs.is_empty());
        RationalSeries { coeffs }
    }

    /// Truncation order (largest tracked exponent).
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, n: usize) -> Coeff {
        self.coeffs.get(n).cloned().unwrap_or_else(Coeff::zero)
    }

    pub fn constant(order: usize, c: Coeff) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    /// The series `X`.
    pub fn x(order: usize) -> Self {
        let mut s = Self::zero(order);
        if order >= 1 {
            s.coeffs[1] = Coeff::one();
        }
        s
    }

    pub fn add(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        RationalSeries {
            coeffs: (0..=order)
                .map(|n| self.coeff(n) + other.coeff(n))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        RationalSeries {
            coeffs: (0..=order)
                .map(|n| self.coeff(n) - other.coeff(n))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Coeff) -> Self {
        RationalSeries {
            coeffs: self.coeffs.iter().map(|v| v.clone() * c.clone()).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let mut coeffs = vec![Coeff::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(order + 1 - i) {
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j] += a.clone() * b.clone();
            }
        }
        RationalSeries { coeffs }
    }

    /// Exact series division; the divisor must have a nonzero constant term.
    pub fn div(&self, other: &Self) -> Self {
        assert!(
            !other.coeff(0).is_zero(),
            "series division needs an invertible constant term"
        );
        let order = self.order().min(other.order());
        let mut q: Vec<Coeff> = Vec::with_capacity(order + 1);
        let b0 = other.coeff(0);
        for n in 0..=order {
            let mut acc = self.coeff(n);
            for (k, done) in q.iter().enumerate() {
                acc -= done.clone() * other.coeff(n - k);
            }
            q.push(acc / b0.clone());
        }
        RationalSeries { coeffs: q }
    }
}

fn int_coeff(v: BigInt) -> Coeff {
    Coeff::from_integer(v)
}

/// `R(X) = Σ_{n>=1} a_n X^n`: the Hilbert series of the algebra.
pub fn series_r(order: usize) -> RationalSeries {
    let mut coeffs = vec![Coeff::zero(); order + 1];
    for (n, c) in coeffs.iter_mut().enumerate().skip(1) {
        *c = int_coeff(small_schroeder(n));
    }
    RationalSeries::from_coeffs(coeffs)
}

/// `P(X) = Σ_{n>=1} A_n X^n`: the codendriform primitive series.
pub fn series_p(order: usize) -> RationalSeries {
    let mut coeffs = vec![Coeff::zero(); order + 1];
    for (n, c) in coeffs.iter_mut().enumerate().skip(1) {
        *c = int_coeff(big_schroeder(n));
    }
    RationalSeries::from_coeffs(coeffs)
}

/// `F(X) = P(X)/X - 1 = Σ_{n>=1} A_{n+1} X^n`: the coassociative primitive
/// series.
pub fn series_prim_coass(order: usize) -> RationalSeries {
    let mut coeffs = vec![Coeff::zero(); order + 1];
    for (n, c) in coeffs.iter_mut().enumerate().skip(1) {
        *c = int_coeff(big_schroeder(n + 1));
    }
    RationalSeries::from_coeffs(coeffs)
}

/// Verifies, coefficient-wise through the given order:
///
/// 1. `P = R / (1+R)^2`               (codendriform primitive count)
/// 2. `P = X + X^2 + 2 X^2 R`         (its closed rewriting)
/// 3. `R / (1+R) = X + 2XR`           (coassociative primitive count)
/// 4. `(4X(1+R) - 1 - X)^2 = 1 - 6X + X^2` (the closed form, squared)
pub fn check_series_identities(order: usize) -> Report {
    let mut report = Report::new();
    let r = series_r(order);
    let p = series_p(order);
    let x = RationalSeries::x(order);
    let one = RationalSeries::constant(order, Coeff::one());
    let one_plus_r = one.add(&r);
    let x2 = x.mul(&x);

    let mut check = |law: &str, lhs: &RationalSeries, rhs: &RationalSeries| {
        for n in 0..=order {
            report.checked += 1;
            let (l, r) = (lhs.coeff(n), rhs.coeff(n));
            if l != r {
                report.record(
                    law,
                    format!("coefficient of X^{n}"),
                    l.to_string(),
                    r.to_string(),
                );
            }
        }
    };

    check(
        "series-P=R/(1+R)^2",
        &p,
        &r.div(&one_plus_r.mul(&one_plus_r)),
    );
    check(
        "series-P=X+X^2+2X^2R",
        &p,
        &x.add(&x2)
            .add(&x2.mul(&r).scale(&crate::vect::coeff_int(2))),
    );
    check(
        "series-R/(1+R)=X+2XR",
        &r.div(&one_plus_r),
        &x.add(&x.mul(&r).scale(&crate::vect::coeff_int(2))),
    );
    let closed = x
        .mul(&one_plus_r)
        .scale(&crate::vect::coeff_int(4))
        .sub(&one)
        .sub(&x);
    let target = one.sub(&x.scale(&crate::vect::coeff_int(6))).add(&x2);
    check("series-closed-form", &closed.mul(&closed), &target);

    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_schroeder_values() {
        let expected: [i64; 10] = [1, 1, 3, 11, 45, 197, 903, 4279, 20793, 103049];
        for (n, &v) in expected.iter().enumerate() {
            assert_eq!(small_schroeder(n), BigInt::from(v), "a_{n}");
        }
    }

    #[test]
    fn big_schroeder_values() {
        let expected: [i64; 7] = [0, 1, 1, 2, 6, 22, 90];
        for (n, &v) in expected.iter().enumerate() {
            assert_eq!(big_schroeder(n), BigInt::from(v), "A_{n}");
        }
    }

    #[test]
    fn division_round_trips() {
        let r = series_r(10);
        let one_plus_r = RationalSeries::constant(10, Coeff::one()).add(&r);
        let q = r.div(&one_plus_r);
        assert_eq!(
            q.mul(&one_plus_r),
            r.mul(&RationalSeries::constant(10, Coeff::one()))
        );
    }

    #[test]
    fn identities_hold_through_order_twelve() {
        let report = check_series_identities(12);
        assert!(report.is_ok(), "violations: {:?}", report.violations);
    }

    #[test]
    fn named_coefficients() {
        // X^5 in R/(1+R)^2 is the fifth big Schroeder number
        let r = series_r(8);
        let one_plus_r = RationalSeries::constant(8, Coeff::one()).add(&r);
        let p = r.div(&one_plus_r.mul(&one_plus_r));
        assert_eq!(p.coeff(5), crate::vect::coeff_int(22));
        // X^4 in X + 2XR counts the degree-4 coassociative primitives
        let x = RationalSeries::x(8);
        let f = x.add(&x.mul(&r).scale(&crate::vect::coeff_int(2)));
        assert_eq!(f.coeff(4), crate::vect::coeff_int(22));
        assert_eq!(series_prim_coass(8).coeff(4), crate::vect::coeff_int(22));
    }
}
