use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Inverse of `a` modulo `m > 0`, normalized into `[0, m)`.
pub fn mod_inverse(a: i64, m: i64) -> Option<i64> {
    if m == 1 {
        return Some(0);
    }
    let ext = a.rem_euclid(m).extended_gcd(&m);
    if ext.gcd != 1 {
        return None;
    }
    Some(ext.x.rem_euclid(m))
}

/// Chinese remaindering over pairwise coprime moduli. Returns the unique
/// solution in `[0, m1 * ... * mk)`.
pub fn crt_solve(residues: &[(i64, i64)]) -> Result<BigInt> {
    for (i, &(_, mi)) in residues.iter().enumerate() {
        if mi <= 0 {
            return Err(Error::InvalidData(format!("modulus {mi} must be positive")));
        }
        for &(_, mj) in &residues[i + 1..] {
            if mi.gcd(&mj) != 1 {
                return Err(Error::NonCoprimeModuli(mi, mj));
            }
        }
    }
    let mut x = BigInt::zero();
    let mut modulus = BigInt::one();
    for &(r, m) in residues {
        let m_big = BigInt::from(m);
        // x + modulus * t ≡ r (mod m)
        let target = (BigInt::from(r) - &x).mod_floor(&m_big);
        let modulus_mod = modulus.mod_floor(&m_big);
        let inv = mod_inverse_big(&modulus_mod, &m_big);
        let t = (target * inv).mod_floor(&m_big);
        x += &modulus * t;
        modulus *= &m_big;
    }
    Ok(x.mod_floor(&modulus))
}

fn mod_inverse_big(a: &BigInt, m: &BigInt) -> BigInt {
    if m.is_one() {
        return BigInt::zero();
    }
    let ext = a.extended_gcd(m);
    debug_assert!(ext.gcd.is_one());
    ext.x.mod_floor(m)
}
