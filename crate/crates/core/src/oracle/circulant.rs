use crate::error::{invalid, Error, Result};

pub fn is_prime(n: usize) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

/// Whether `C(n, s1)` and `C(n, s2)` are isomorphic, for prime `n`.
///
/// Circulants of prime order are isomorphic exactly when a unit multiplier
/// maps one connection set `{±1, ±s}` onto the other, which reduces to
/// `s2 ≡ ±s1` or `s1·s2 ≡ ±1 (mod n)`.
pub fn csl_iso(n: usize, s1: usize, s2: usize) -> Result<bool> {
    if !is_prime(n) {
        return Err(Error::Unsupported(format!(
            "multiplier criterion only holds for prime order, got {n}"
        )));
    }
    for s in [s1, s2] {
        if s < 2 || s + 2 > n {
            return Err(invalid(format!("skip {s} outside 2..={}", n.saturating_sub(2))));
        }
    }
    let (a, b) = (s1 % n, s2 % n);
    let prod = a * b % n;
    Ok(b == a || b == n - a || prod == 1 || prod == n - 1)
}

/// Number of isomorphism classes among the distinct skips of a schedule.
pub fn csl_iso_class_count(n: usize, skips: &[usize]) -> Result<usize> {
    let mut reps: Vec<usize> = Vec::new();
    let mut distinct = skips.to_vec();
    distinct.sort_unstable();
    distinct.dedup();
    for s in distinct {
        let mut known = false;
        for &r in &reps {
            if csl_iso(n, r, s)? {
                known = true;
                break;
            }
        }
        if !known {
            reps.push(s);
        }
    }
    Ok(reps.len())
}
