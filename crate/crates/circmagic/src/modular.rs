//! Exact residue arithmetic: gcd, modular inverse, p-parts and a Chinese
//! remainder solver.
//!
//! Everything here is plain integer arithmetic; intermediate products are
//! carried in `i128` so that congruence tests like `10·j·s` cannot overflow
//! for any supported order (`n ≤ 10^6`).

use crate::{Error, Result};

/// A single congruence `x ≡ residue (mod modulus)`.
///
/// Any sign is accepted on input; the stored residue is normalized into
/// `[0, modulus)`. A modulus of 1 is legal and satisfied by every integer.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Congruence {
    residue: i64,
    modulus: i64,
}

impl Congruence {
    pub fn new(residue: i64, modulus: i64) -> Result<Self> {
        if modulus < 1 {
            return Err(Error::Precondition(format!(
                "modulus must be >= 1, got {modulus}"
            )));
        }
        Ok(Congruence {
            residue: residue.rem_euclid(modulus),
            modulus,
        })
    }

    pub fn residue(&self) -> i64 {
        self.residue
    }

    pub fn modulus(&self) -> i64 {
        self.modulus
    }

    /// Does `x` satisfy this congruence?
    pub fn holds_for(&self, x: i64) -> bool {
        x.rem_euclid(self.modulus) == self.residue
    }
}

/// Greatest common divisor; `gcd(0, 0) = 0`.
pub fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Extended gcd: returns `(g, x, y)` with `a·x + b·y = g = gcd(a, b)`.
pub fn extended_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    let (mut r0, mut r1) = (a as i128, b as i128);
    let (mut x0, mut x1) = (1i128, 0i128);
    let (mut y0, mut y1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (x0, x1) = (x1, x0 - q * x1);
        (y0, y1) = (y1, y0 - q * y1);
    }
    if r0 < 0 {
        (r0, x0, y0) = (-r0, -x0, -y0);
    }
    (r0 as i64, x0 as i64, y0 as i64)
}

/// Is `p` prime? Trial division; sufficient for the supported range.
pub fn is_prime(p: i64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// The `p`-part of `m`: the largest power `p^t` dividing `m`.
pub fn p_part(m: i64, p: i64) -> Result<i64> {
    if m < 1 {
        return Err(Error::Precondition(format!("m must be >= 1, got {m}")));
    }
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let mut part = 1;
    let mut rest = m;
    while rest % p == 0 {
        part *= p;
        rest /= p;
    }
    Ok(part)
}

/// Inverse of `a` modulo `m`, in `[0, m)`. Requires `gcd(a, m) = 1`.
pub fn mod_inverse(a: i64, m: i64) -> Result<i64> {
    if m < 1 {
        return Err(Error::Precondition(format!("modulus must be >= 1, got {m}")));
    }
    let (g, x, _) = extended_gcd(a.rem_euclid(m), m);
    if g != 1 {
        return Err(Error::NoInverse { a, m });
    }
    Ok(x.rem_euclid(m))
}

/// Solve a system of congruences with pairwise coprime moduli.
///
/// Returns the unique `x` in `[0, M)` where `M` is the product of the
/// moduli. Moduli equal to 1 are ignored, so callers may pass degenerate
/// congruences without special-casing. Non-coprime moduli are rejected even
/// when the system happens to be consistent. The empty system yields 0.
pub fn crt_solve(system: &[Congruence]) -> Result<i64> {
    let active: Vec<&Congruence> = system.iter().filter(|c| c.modulus > 1).collect();
    for (i, c) in active.iter().enumerate() {
        for d in &active[i + 1..] {
            if gcd(c.modulus, d.modulus) != 1 {
                return Err(Error::NonCoprimeModuli(c.modulus, d.modulus));
            }
        }
    }
    let m_total: i128 = active.iter().map(|c| c.modulus as i128).product();
    let mut x: i128 = 0;
    for c in &active {
        let m_i = c.modulus as i128;
        let partial = m_total / m_i;
        let inv = mod_inverse((partial % m_i) as i64, c.modulus)? as i128;
        x = (x + c.residue as i128 * partial % m_total * inv) % m_total;
    }
    Ok(x.rem_euclid(m_total) as i64)
}
