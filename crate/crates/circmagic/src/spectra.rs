//! The admissible set `A_n(S) = {j in [1, n-1] : χ_j(S) = 0}` and the type
//! classification of its members, computed exactly.
//!
//! Two independent engines decide whether `χ_j(S) = Σ_{s in S} ζ_n^{js}`
//! vanishes:
//!
//! 1. Integer congruence tests. `χ_j(S) = 0` reduces to a sum of three
//!    cosines of rational angles being zero, and every rational solution of
//!    `cos(r1·π) + cos(r2·π) + cos(r3·π) = 0` belongs to one of two
//!    infinite families or two exceptional triples. Pulled back to `Z_n`
//!    these become the type-1, type-2 and type-3 congruences implemented by
//!    [`type1_test`], [`type2_test`] and [`type3_test`].
//! 2. A cyclotomic oracle: `χ_j(S) = 0` iff the n-th cyclotomic polynomial
//!    divides `P_j(x) = Σ_{s in S} x^{(j·s) mod n}`, checked by exact
//!    polynomial division over arbitrary-precision integers.
//!
//! The cosine form is never evaluated numerically; admissibility is a zero
//! test and hopeless under rounding. Agreement of the two engines is the
//! module's master property test.

use crate::circulant::ConnectionSet;
use crate::modular::gcd;
use crate::{Error, Result};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;
use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

/// Which solution family of the three-cosine equation a character realizes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum TypeTag {
    T1,
    T2,
    T3,
}

/// The two exceptional cosine triples behind type 3, in residue form.
///
/// `First` targets `(j·s1, j·s2, j·s3) ≡ (n/10, 3n/10, n/3)` and `Second`
/// targets `(n/6, n/5, 2n/5)`, all modulo `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Type3Form {
    First,
    Second,
}

/// Integer evidence that a character has a given type: the signed
/// assignment `(s1, s2, s3)` drawn from `{±a, ±b, ±c}` and the integer
/// quotients `k` that turn the defining congruences into exact identities
/// in `Z`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TypeWitness {
    pub tag: TypeTag,
    pub assignment: [i64; 3],
    pub ks: Vec<i64>,
    /// `j / (n/30)` for type 3 whenever `n/30` divides `j`.
    pub j0: Option<i64>,
    pub form: Option<Type3Form>,
}

/// An admissible character index with its full tag set and one witness per
/// succeeding type test.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AdmissibleChar {
    pub j: i64,
    pub types: Vec<TypeTag>,
    pub witnesses: Vec<TypeWitness>,
}

impl AdmissibleChar {
    pub fn has(&self, tag: TypeTag) -> bool {
        self.types.contains(&tag)
    }
}

// ---------------------------------------------------------------------------
// cyclotomic oracle
// ---------------------------------------------------------------------------

fn divisors(n: i64) -> Vec<i64> {
    let mut divs = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            divs.push(d);
            if d != n / d {
                divs.push(n / d);
            }
        }
        d += 1;
    }
    divs.sort_unstable();
    divs
}

/// Exact quotient of `num` by the monic polynomial `den`; panics if the
/// division leaves a remainder (which cannot happen for divisors of
/// `x^n - 1`).
fn exact_div_monic(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    assert!(den.last().map(|c| c.is_one()).unwrap_or(false));
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let nd = rem.len() - 1;
    assert!(nd >= dd);
    let mut quot = vec![BigInt::zero(); nd - dd + 1];
    for k in (0..=nd - dd).rev() {
        let coef = rem[k + dd].clone();
        if coef.is_zero() {
            continue;
        }
        quot[k] = coef.clone();
        for (i, dc) in den.iter().enumerate() {
            let t = dc * &coef;
            rem[k + i] -= t;
        }
    }
    assert!(rem.iter().all(Zero::is_zero), "non-exact division");
    quot
}

/// Remainder of `num` modulo the monic polynomial `den`.
fn rem_monic(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let dd = den.len() - 1;
    let mut rem = num.to_vec();
    if rem.len() <= dd {
        return rem;
    }
    for k in (dd..rem.len()).rev() {
        let coef = rem[k].clone();
        if coef.is_zero() {
            continue;
        }
        for (i, dc) in den.iter().enumerate() {
            let t = dc * &coef;
            rem[k - dd + i] -= t;
        }
        debug_assert!(rem[k].is_zero());
    }
    rem.truncate(dd);
    rem
}

type PhiCache = Mutex<HashMap<i64, Arc<Vec<BigInt>>>>;

fn phi_cache() -> &'static PhiCache {
    static CACHE: OnceLock<PhiCache> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Coefficients of the n-th cyclotomic polynomial, constant term first.
///
/// Computed by exact division of `x^n - 1` by the product of the
/// cyclotomic polynomials of the proper divisors of `n`; results are
/// memoized behind an internal lock.
pub fn cyclotomic_poly(n: i64) -> Arc<Vec<BigInt>> {
    assert!(n >= 1, "cyclotomic_poly: n must be >= 1");
    if let Some(hit) = phi_cache().lock().unwrap().get(&n) {
        return hit.clone();
    }
    for d in divisors(n) {
        if phi_cache().lock().unwrap().contains_key(&d) {
            continue;
        }
        let phi_d = if d == 1 {
            vec![BigInt::from(-1), BigInt::from(1)]
        } else {
            // x^d - 1
            let mut num = vec![BigInt::zero(); (d + 1) as usize];
            num[0] = BigInt::from(-1);
            num[d as usize] = BigInt::one();
            let mut quot = num;
            for e in divisors(d) {
                if e == d {
                    continue;
                }
                let phi_e = phi_cache().lock().unwrap().get(&e).unwrap().clone();
                quot = exact_div_monic(&quot, &phi_e);
            }
            quot
        };
        phi_cache()
            .lock()
            .unwrap()
            .insert(d, Arc::new(phi_d));
    }
    phi_cache().lock().unwrap().get(&n).unwrap().clone()
}

/// Above this order the oracle falls back to one-off polynomial division
/// instead of caching the full table of residues `x^k mod Φ_n`.
const RESIDUE_TABLE_LIMIT: i64 = 600;

type ResidueCache = Mutex<HashMap<i64, Arc<Vec<Vec<BigInt>>>>>;

fn residue_cache() -> &'static ResidueCache {
    static CACHE: OnceLock<ResidueCache> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

fn residue_table(n: i64) -> Arc<Vec<Vec<BigInt>>> {
    if let Some(hit) = residue_cache().lock().unwrap().get(&n) {
        return hit.clone();
    }
    let phi = cyclotomic_poly(n);
    let deg = phi.len() - 1;
    let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(n as usize);
    let mut row = vec![BigInt::zero(); deg];
    row[0] = BigInt::one();
    rows.push(row.clone());
    for _ in 1..n {
        // multiply by x, then reduce the degree-`deg` overflow against Φ_n
        let carry = row[deg - 1].clone();
        for i in (1..deg).rev() {
            row[i] = row[i - 1].clone();
        }
        row[0] = BigInt::zero();
        if !carry.is_zero() {
            for i in 0..deg {
                let t = &phi[i] * &carry;
                row[i] -= t;
            }
        }
        rows.push(row.clone());
    }
    let arc = Arc::new(rows);
    residue_cache().lock().unwrap().insert(n, arc.clone());
    arc
}

/// The six exponents `(j·s) mod n` for `s` ranging over `S`.
fn char_exponents(s: &ConnectionSet, j: i64) -> [usize; 6] {
    let n = s.order();
    let mut out = [0usize; 6];
    for (i, &r) in s.reps().iter().enumerate() {
        let e = ((j as i128 * r as i128).rem_euclid(n as i128)) as i64;
        out[2 * i] = e as usize;
        out[2 * i + 1] = ((n - e) % n) as usize;
    }
    out
}

/// Exact test of `χ_j(S) = 0` via the cyclotomic oracle: form the integer
/// polynomial `P_j(x) = Σ_{s in S} x^{(j·s) mod n}` and check that `Φ_n`
/// divides it. No floating point is involved.
pub fn char_sum_is_zero(s: &ConnectionSet, j: i64) -> bool {
    let n = s.order();
    assert!((0..n).contains(&j), "character index out of range");
    let exps = char_exponents(s, j);
    if n <= RESIDUE_TABLE_LIMIT {
        let table = residue_table(n);
        let deg = table[0].len();
        let mut acc = vec![BigInt::zero(); deg];
        for &e in &exps {
            for (a, r) in acc.iter_mut().zip(table[e].iter()) {
                *a += r;
            }
        }
        acc.iter().all(Zero::is_zero)
    } else {
        let phi = cyclotomic_poly(n);
        let mut poly = vec![BigInt::zero(); n as usize];
        for &e in &exps {
            poly[e] += 1;
        }
        rem_monic(&poly, &phi).iter().all(Zero::is_zero)
    }
}

// ---------------------------------------------------------------------------
// congruence engine
// ---------------------------------------------------------------------------

/// Index permutations of `(a, b, c)` in lexicographic order.
const PERMS: [[usize; 3]; 6] = [
    [0, 1, 2],
    [0, 2, 1],
    [1, 0, 2],
    [1, 2, 0],
    [2, 0, 1],
    [2, 1, 0],
];

fn rem(v: i128, m: i128) -> i128 {
    v.rem_euclid(m)
}

/// Type-1 test: with `n = 4·n0`, find a role assignment where
/// `j·s2 ≡ n0 (mod 2n0)` and `j·(s1 + s3) ≡ 2n0 (mod 4n0)`.
///
/// Which of `a, b, c` plays `s2` and the signs of `s1, s3` are scanned in a
/// fixed order (the sign of `s2` is immaterial); the first success is
/// returned with the quotients `k1, k2` making `j·s2 = n0(1 + 2k1)` and
/// `j(s1+s3) = 2n0(1 + 2k2)` exact in `Z`.
pub fn type1_test(s: &ConnectionSet, j: i64) -> Option<TypeWitness> {
    let n = s.order() as i128;
    if n % 4 != 0 {
        return None;
    }
    let n0 = n / 4;
    let reps = s.reps();
    let j = j as i128;
    for s2_idx in 0..3 {
        let s2 = reps[s2_idx] as i128;
        if rem(j * s2, 2 * n0) != n0 {
            continue;
        }
        let mut rest = (0..3).filter(|&i| i != s2_idx);
        let (i1, i3) = (rest.next().unwrap(), rest.next().unwrap());
        for mask in 0..4u8 {
            let s1 = if mask & 2 == 0 { reps[i1] } else { -reps[i1] } as i128;
            let s3 = if mask & 1 == 0 { reps[i3] } else { -reps[i3] } as i128;
            if rem(j * (s1 + s3), 4 * n0) == 2 * n0 {
                let k1 = (j * s2 - n0) / (2 * n0);
                let k2 = (j * (s1 + s3) - 2 * n0) / (4 * n0);
                return Some(TypeWitness {
                    tag: TypeTag::T1,
                    assignment: [s1 as i64, s2 as i64, s3 as i64],
                    ks: vec![k1 as i64, k2 as i64],
                    j0: None,
                    form: None,
                });
            }
        }
    }
    None
}

/// Type-2 test: with `n = 3·n0`, find a signed assignment where
/// `j·(s2 - s1) ≡ n0` and `j·(s3 - s1) ≡ 2n0`, both modulo `3n0`.
pub fn type2_test(s: &ConnectionSet, j: i64) -> Option<TypeWitness> {
    let n = s.order() as i128;
    if n % 3 != 0 {
        return None;
    }
    let n0 = n / 3;
    let reps = s.reps();
    let j = j as i128;
    for perm in PERMS {
        for mask in 0..8u8 {
            let s1 = if mask & 4 == 0 { reps[perm[0]] } else { -reps[perm[0]] } as i128;
            let s2 = if mask & 2 == 0 { reps[perm[1]] } else { -reps[perm[1]] } as i128;
            let s3 = if mask & 1 == 0 { reps[perm[2]] } else { -reps[perm[2]] } as i128;
            if rem(j * (s2 - s1), n) == n0 && rem(j * (s3 - s1), n) == 2 * n0 {
                let k1 = (j * (s2 - s1) - n0) / n;
                let k2 = (j * (s3 - s1) - 2 * n0) / n;
                return Some(TypeWitness {
                    tag: TypeTag::T2,
                    assignment: [s1 as i64, s2 as i64, s3 as i64],
                    ks: vec![k1 as i64, k2 as i64],
                    j0: None,
                    form: None,
                });
            }
        }
    }
    None
}

/// Type-3 test: with `30 | n`, find a signed assignment hitting one of the
/// two exceptional residue triples, `(n/10, 3n/10, n/3)` or
/// `(n/6, n/5, 2n/5)`, all modulo `n`.
pub fn type3_test(s: &ConnectionSet, j: i64) -> Option<TypeWitness> {
    let n = s.order() as i128;
    if n % 30 != 0 {
        return None;
    }
    let reps = s.reps();
    let j128 = j as i128;
    let forms = [
        (Type3Form::First, [n / 10, 3 * n / 10, n / 3]),
        (Type3Form::Second, [n / 6, n / 5, 2 * n / 5]),
    ];
    for (form, targets) in forms {
        for perm in PERMS {
            for mask in 0..8u8 {
                let sv = [
                    if mask & 4 == 0 { reps[perm[0]] } else { -reps[perm[0]] } as i128,
                    if mask & 2 == 0 { reps[perm[1]] } else { -reps[perm[1]] } as i128,
                    if mask & 1 == 0 { reps[perm[2]] } else { -reps[perm[2]] } as i128,
                ];
                if sv
                    .iter()
                    .zip(targets.iter())
                    .all(|(&s_i, &t)| rem(j128 * s_i, n) == t)
                {
                    let ks = match form {
                        Type3Form::First => vec![
                            ((10 * j128 * sv[0] - n) / (10 * n)) as i64,
                            ((10 * j128 * sv[1] - 3 * n) / (10 * n)) as i64,
                            ((3 * j128 * sv[2] - n) / (3 * n)) as i64,
                        ],
                        Type3Form::Second => vec![
                            ((6 * j128 * sv[0] - n) / (6 * n)) as i64,
                            ((5 * j128 * sv[1] - n) / (5 * n)) as i64,
                            ((5 * j128 * sv[2] - 2 * n) / (5 * n)) as i64,
                        ],
                    };
                    let n0 = (n / 30) as i64;
                    let j0 = if j % n0 == 0 { Some(j / n0) } else { None };
                    return Some(TypeWitness {
                        tag: TypeTag::T3,
                        assignment: [sv[0] as i64, sv[1] as i64, sv[2] as i64],
                        ks,
                        j0,
                        form: Some(form),
                    });
                }
            }
        }
    }
    None
}

/// All admissible characters of `S` with their tags and witnesses, sorted
/// by `j`. The union of the three type tests is exactly `{j : χ_j(S) = 0}`
/// (Crosby completeness), which the test suite checks against the
/// cyclotomic oracle.
pub fn admissible_set(s: &ConnectionSet) -> Vec<AdmissibleChar> {
    let n = s.order();
    let mut out = Vec::new();
    for j in 1..n {
        let mut types = Vec::new();
        let mut witnesses = Vec::new();
        for (tag, wit) in [
            (TypeTag::T1, type1_test(s, j)),
            (TypeTag::T2, type2_test(s, j)),
            (TypeTag::T3, type3_test(s, j)),
        ] {
            if let Some(w) = wit {
                types.push(tag);
                witnesses.push(w);
            }
        }
        if !types.is_empty() {
            out.push(AdmissibleChar { j, types, witnesses });
        }
    }
    out
}

/// Outcome of the kernel prefilter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum FilterOutcome {
    /// The zero eigenspace exists and its characters have no common divisor.
    Pass,
    /// `A_n(S)` is empty, so 0 is not an eigenvalue.
    EmptyKernel,
    /// Some `1 < d < n` divides every admissible `j`; every 0-eigenvector
    /// then has equal entries at `0` and `n/d`.
    CommonDivisor(i64),
}

impl FilterOutcome {
    pub fn passed(&self) -> bool {
        matches!(self, FilterOutcome::Pass)
    }
}

/// Necessary conditions for distance magicness read off the kernel: the
/// admissible set must be nonempty and must not have a common divisor
/// `1 < d < n` with `n`.
pub fn candidate_filter(s: &ConnectionSet) -> Result<FilterOutcome> {
    if !s.is_connected() {
        return Err(Error::Precondition(format!(
            "candidate_filter requires a connected set, got {s}"
        )));
    }
    let adm = admissible_set(s);
    if adm.is_empty() {
        return Ok(FilterOutcome::EmptyKernel);
    }
    let mut d = s.order();
    for ch in &adm {
        d = gcd(d, ch.j);
    }
    if d > 1 && d < s.order() {
        return Ok(FilterOutcome::CommonDivisor(d));
    }
    Ok(FilterOutcome::Pass)
}

/// `true` when any of the three congruence tests succeeds; this is the
/// congruence engine's answer to "is `j` admissible".
pub fn congruence_admissible(s: &ConnectionSet, j: i64) -> bool {
    type1_test(s, j).is_some() || type2_test(s, j).is_some() || type3_test(s, j).is_some()
}
