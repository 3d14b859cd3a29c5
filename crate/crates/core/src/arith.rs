//! 2-adic valuations of factorials and of the falling product
//! `P(n) = n (n-1) ... (floor(n/2) + 1)`.

use std::time::Instant;

use num_bigint::BigUint;

use crate::groups::{Counterexample, VerificationReport};
use crate::{Error, Result};

/// Exact big-integer checks run up to this `n` by default.
pub const DEFAULT_EXACT_LIMIT: u64 = 30;

/// `nu2(n!)` by Legendre's formula.
pub fn nu2_factorial(n: u64) -> u64 {
    let mut total = 0;
    let mut q = n / 2;
    while q > 0 {
        total += q;
        q /= 2;
    }
    total
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValuationResult {
    pub n: u64,
    pub valuation: u64,
    /// Odd part `k` of `P(n) = 2^valuation * k`, present when the product
    /// was formed exactly.
    pub odd_cofactor: Option<BigUint>,
}

impl ValuationResult {
    pub fn odd_cofactor_checked(&self) -> bool {
        self.odd_cofactor.is_some()
    }
}

fn check_at_least_two(n: u64) -> Result<()> {
    if n < 2 {
        return Err(Error::TooSmall { n: n as usize, min: 2 });
    }
    Ok(())
}

/// `nu2(P(n))` as `nu2(n!) - nu2(floor(n/2)!)`.
pub fn nu2_falling_product(n: u64) -> Result<ValuationResult> {
    check_at_least_two(n)?;
    Ok(ValuationResult {
        n,
        valuation: nu2_factorial(n) - nu2_factorial(n / 2),
        odd_cofactor: None,
    })
}

/// `P(n)` as a big integer.
pub fn falling_product(n: u64) -> BigUint {
    (n / 2 + 1..=n).fold(BigUint::from(1u32), |acc, k| acc * k)
}

/// Forms `P(n)` exactly and splits off its power of two.
pub fn nu2_falling_product_exact(n: u64) -> Result<ValuationResult> {
    check_at_least_two(n)?;
    let product = falling_product(n);
    let valuation = product.trailing_zeros().expect("product is positive");
    Ok(ValuationResult {
        n,
        valuation,
        odd_cofactor: Some(product >> valuation),
    })
}

/// `floor(n/2)`, the 2-adic valuation of `P(n)` and hence the exponent of a
/// Sylow 2-subgroup of any group of order `P(n)`.
pub fn sylow2_exponent(n: u64) -> Result<u64> {
    check_at_least_two(n)?;
    Ok(n / 2)
}

fn big_factorial(n: u64) -> BigUint {
    (1..=n).fold(BigUint::from(1u32), |acc, k| acc * k)
}

/// Checks `nu2(P(n)) == floor(n/2)` for `2 <= n <= limit`, and for
/// `n <= exact_limit` also the exact product and the parity of its odd part.
pub fn verify_corollary(limit: u64, exact_limit: u64) -> Result<VerificationReport> {
    check_at_least_two(limit)?;
    let start = Instant::now();
    let mut report = VerificationReport::new("cor_3_4", limit as usize);
    for n in 2..=limit {
        report.checked += 1;
        let expected = sylow2_exponent(n)?;
        let by_legendre = nu2_falling_product(n)?;
        if by_legendre.valuation != expected {
            report.counterexamples.push(failure(
                n,
                format!("nu2(P({n})) = {}, expected {expected}", by_legendre.valuation),
            ));
        }
        if n <= exact_limit {
            let exact = nu2_falling_product_exact(n)?;
            let k = exact.odd_cofactor.as_ref().expect("exact");
            let rebuilt = (k.clone() << expected) == falling_product(n);
            if exact.valuation != by_legendre.valuation || !k.bit(0) || !rebuilt {
                report.counterexamples.push(failure(
                    n,
                    format!(
                        "exact valuation {} with cofactor {k}, Legendre gives {}",
                        exact.valuation, by_legendre.valuation
                    ),
                ));
            }
        }
    }
    report.duration = start.elapsed();
    Ok(report)
}

/// Checks `2^floor(n/2) * floor(n/2)! | n!` for `2 <= n <= limit`, by
/// valuations throughout and by exact division for `n <= exact_limit`.
pub fn verify_divisibility(limit: u64, exact_limit: u64) -> Result<VerificationReport> {
    check_at_least_two(limit)?;
    let start = Instant::now();
    let mut report = VerificationReport::new("divisibility", limit as usize);
    for n in 2..=limit {
        report.checked += 1;
        let half = n / 2;
        // the odd part of half! divides n! because half! itself does, so
        // only the power of two needs comparing
        if half + nu2_factorial(half) > nu2_factorial(n) {
            report
                .counterexamples
                .push(failure(n, format!("2^{half} * {half}! does not divide {n}! by valuation")));
        }
        if n <= exact_limit {
            let divisor = (BigUint::from(1u32) << half) * big_factorial(half);
            if big_factorial(n) % divisor != BigUint::ZERO {
                report
                    .counterexamples
                    .push(failure(n, format!("2^{half} * {half}! does not divide {n}!")));
            }
        }
    }
    report.duration = start.elapsed();
    Ok(report)
}

fn failure(n: u64, detail: String) -> Counterexample {
    Counterexample {
        rank: Some(n as u128),
        element: None,
        detail,
    }
}
