//! The six classified parametric families, their recognizers, the type-3
//! necessary-condition filter, and the full decision procedure.
//!
//! Three families are lexicographic-product blowups (a Möbius ladder or a
//! prism by two isolated vertices, or a cycle by three); the other three
//! are cut out by systems of congruences solved through the Chinese
//! remainder theorem. Every family instance is identified by its defining
//! connection set; a concrete set belongs to a family when some unit
//! multiple of it equals that defining set.

use crate::circulant::{units, ConnectionSet};
use crate::labelings::Labeling;
use crate::modular::{crt_solve, gcd, p_part, Congruence};
use crate::oracle::{search_labeling, SearchBudget, SearchOutcome};
use crate::spectra::{admissible_set, candidate_filter, AdmissibleChar, FilterOutcome, TypeTag};
use crate::{Error, Result};
use serde::Serialize;
use std::fmt;

/// One of the six classified families of valency-6 circulants.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Family {
    /// `Circ(4m; {±1, ±m, ±(2m-1)})`, the Möbius ladder blown up by `2K_1`.
    /// `m >= 2`: the degenerate ladder is `Ml_2 = K_4`, and its blowup
    /// `Circ(8; {±1, ±2, ±3})` is the cocktail-party graph, which is the
    /// only distance magic circulant of order 8.
    MobiusLadderLex { m: i64 },
    /// `Circ(4m; {±2, ±m, ±(2m-2)})`, the prism blown up by `2K_1`;
    /// `m >= 3` odd.
    PrismLex { m: i64 },
    /// `Circ(3m; {±1, ±(m-1), ±(m+1)})`, the cycle blown up by `3K_1`;
    /// `m >= 3`. The graph exists for every such `m`; it is distance magic
    /// only for `m` odd or divisible by 4, which `decide` enforces.
    CycleLex { m: i64 },
    /// `Circ(4dd'; {±2, ±dd', ±c})` with `c ≡ 0 (mod 4)`, `c ≡ 2 (mod d)`,
    /// `c ≡ -2 (mod d')`; `d, d'` odd coprime, `1 < d < d'`.
    T1Case1 { d: i64, dp: i64 },
    /// `Circ(4dd'd''; {±d, ±b, ±c})` with `b, c` solving the two coupled
    /// congruence systems below; `d, d', d''` odd pairwise coprime,
    /// `1 <= d < d' < d''`.
    T1Case2 { d: i64, dp: i64, dpp: i64 },
    /// `Circ(3dd'; {±1, ±(dd'+δ), ±c})` with `dd' ≡ δ (mod 3)` and
    /// `c ≡ 0 (mod 3)`, `c ≡ 1 (mod d)`, `c ≡ -1 (mod d')`; `d, d'`
    /// coprime, both coprime to 3, `1 < d < d'`. Distance magic requires
    /// both odd on top of this.
    T2Family { d: i64, dp: i64 },
}

impl Family {
    pub fn mobius_ladder_lex(m: i64) -> Result<Family> {
        if m < 2 {
            return Err(Error::InvalidFamily(format!("Ml[{m}]: need m >= 2")));
        }
        Ok(Family::MobiusLadderLex { m })
    }

    pub fn prism_lex(m: i64) -> Result<Family> {
        if m < 3 || m % 2 == 0 {
            return Err(Error::InvalidFamily(format!("Pr[{m}]: need odd m >= 3")));
        }
        Ok(Family::PrismLex { m })
    }

    pub fn cycle_lex(m: i64) -> Result<Family> {
        if m < 3 {
            return Err(Error::InvalidFamily(format!("C3K[{m}]: need m >= 3")));
        }
        Ok(Family::CycleLex { m })
    }

    pub fn t1_case1(d: i64, dp: i64) -> Result<Family> {
        if !(1 < d && d < dp) || d % 2 == 0 || dp % 2 == 0 || gcd(d, dp) != 1 {
            return Err(Error::InvalidFamily(format!(
                "T1a[{d},{dp}]: need odd coprime 1 < d < d'"
            )));
        }
        Ok(Family::T1Case1 { d, dp })
    }

    pub fn t1_case2(d: i64, dp: i64, dpp: i64) -> Result<Family> {
        let ok = 1 <= d
            && d < dp
            && dp < dpp
            && d % 2 == 1
            && dp % 2 == 1
            && dpp % 2 == 1
            && gcd(d, dp) == 1
            && gcd(d, dpp) == 1
            && gcd(dp, dpp) == 1;
        if !ok {
            return Err(Error::InvalidFamily(format!(
                "T1b[{d},{dp},{dpp}]: need odd pairwise coprime 1 <= d < d' < d''"
            )));
        }
        Ok(Family::T1Case2 { d, dp, dpp })
    }

    pub fn t2_family(d: i64, dp: i64) -> Result<Family> {
        if !(1 < d && d < dp) || gcd(d, dp) != 1 || d % 3 == 0 || dp % 3 == 0 {
            return Err(Error::InvalidFamily(format!(
                "T2[{d},{dp}]: need coprime 1 < d < d', both coprime to 3"
            )));
        }
        Ok(Family::T2Family { d, dp })
    }

    /// Order of the defining circulant.
    pub fn order(&self) -> i64 {
        match *self {
            Family::MobiusLadderLex { m } | Family::PrismLex { m } => 4 * m,
            Family::CycleLex { m } => 3 * m,
            Family::T1Case1 { d, dp } => 4 * d * dp,
            Family::T1Case2 { d, dp, dpp } => 4 * d * dp * dpp,
            Family::T2Family { d, dp } => 3 * d * dp,
        }
    }

    /// The raw solution `c` of the `T1Case1` congruence system, in `[0, n)`.
    pub(crate) fn t1_case1_solution(&self) -> Option<i64> {
        let Family::T1Case1 { d, dp } = *self else {
            return None;
        };
        let c = crt_solve(&[
            Congruence::new(0, 4).unwrap(),
            Congruence::new(2, d).unwrap(),
            Congruence::new(-2, dp).unwrap(),
        ])
        .expect("validated parameters are pairwise coprime");
        Some(c)
    }

    /// The raw solutions `(b, c)` of the two coupled `T1Case2` systems, in
    /// `(1, n)`, with `b` the smallest solution of the left system coprime
    /// to `d`.
    pub(crate) fn t1_case2_solutions(&self) -> Option<(i64, i64)> {
        let Family::T1Case2 { d, dp, dpp } = *self else {
            return None;
        };
        let b0 = crt_solve(&[
            Congruence::new(2 - d, 4).unwrap(),
            Congruence::new(0, dp).unwrap(),
            Congruence::new(-d, dpp).unwrap(),
        ])
        .expect("validated parameters are pairwise coprime");
        let period = 4 * dp * dpp;
        let b = (0..d)
            .map(|t| b0 + period * t)
            .find(|&b| b > 1 && gcd(b, d) == 1)
            .expect("4d'd'' is invertible mod d, so some shift is coprime to d");
        let c = crt_solve(&[
            Congruence::new(2 - d, 4).unwrap(),
            Congruence::new(-b, d).unwrap(),
            Congruence::new(-d, dp).unwrap(),
            Congruence::new(0, dpp).unwrap(),
        ])
        .expect("validated parameters are pairwise coprime");
        Some((b, c))
    }

    /// For `T2Family`: `(n0, δ, c)` with `n0 = dd'`, `n0 ≡ δ (mod 3)` and
    /// `c` the raw solution of the defining system, in `[0, n)`.
    pub(crate) fn t2_solution(&self) -> Option<(i64, i64, i64)> {
        let Family::T2Family { d, dp } = *self else {
            return None;
        };
        let n0 = d * dp;
        let delta = if n0 % 3 == 1 { 1 } else { -1 };
        let c = crt_solve(&[
            Congruence::new(0, 3).unwrap(),
            Congruence::new(1, d).unwrap(),
            Congruence::new(-1, dp).unwrap(),
        ])
        .expect("validated parameters are pairwise coprime");
        Some((n0, delta, c))
    }

    /// The defining connection set of this family instance.
    pub fn connection_set(&self) -> ConnectionSet {
        let set = match *self {
            Family::MobiusLadderLex { m } => ConnectionSet::new(4 * m, [1, m, 2 * m - 1]),
            Family::PrismLex { m } => ConnectionSet::new(4 * m, [2, m, 2 * m - 2]),
            Family::CycleLex { m } => ConnectionSet::new(3 * m, [1, m - 1, m + 1]),
            Family::T1Case1 { d, dp } => {
                let c = self.t1_case1_solution().unwrap();
                ConnectionSet::new(4 * d * dp, [2, d * dp, c])
            }
            Family::T1Case2 { d, dp, dpp } => {
                let (b, c) = self.t1_case2_solutions().unwrap();
                ConnectionSet::new(4 * d * dp * dpp, [d, b, c])
            }
            Family::T2Family { .. } => {
                let (n0, delta, c) = self.t2_solution().unwrap();
                ConnectionSet::new(3 * n0, [1, n0 + delta, c])
            }
        };
        set.expect("validated family parameters define a nondegenerate set")
    }

    /// Is this one of the candidates of the all-type-1 classification
    /// (the two `2K_1` blowups or the two congruence-defined type-1
    /// families)?
    pub fn is_type1_family(&self) -> bool {
        matches!(
            self,
            Family::MobiusLadderLex { .. }
                | Family::PrismLex { .. }
                | Family::T1Case1 { .. }
                | Family::T1Case2 { .. }
        )
    }

    /// Is this one of the candidates of the all-type-2 classification
    /// (the `3K_1` blowup of a cycle or the congruence-defined type-2
    /// family)?
    pub fn is_type2_family(&self) -> bool {
        matches!(self, Family::CycleLex { .. } | Family::T2Family { .. })
    }

    /// Is this instance distance magic? The blowup families are except for
    /// `CycleLex` with `m = 2 (mod 4)`, and the congruence families are
    /// except for `T2Family` with an even parameter (even order).
    pub fn is_distance_magic(&self) -> bool {
        match *self {
            Family::MobiusLadderLex { .. }
            | Family::PrismLex { .. }
            | Family::T1Case1 { .. }
            | Family::T1Case2 { .. } => true,
            Family::CycleLex { m } => m % 2 == 1 || m % 4 == 0,
            Family::T2Family { d, dp } => d % 2 == 1 && dp % 2 == 1,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Family::MobiusLadderLex { m } => write!(f, "Ml[{m}]"),
            Family::PrismLex { m } => write!(f, "Pr[{m}]"),
            Family::CycleLex { m } => write!(f, "C3K[{m}]"),
            Family::T1Case1 { d, dp } => write!(f, "T1a[{d},{dp}]"),
            Family::T1Case2 { d, dp, dpp } => write!(f, "T1b[{d},{dp},{dpp}]"),
            Family::T2Family { d, dp } => write!(f, "T2[{d},{dp}]"),
        }
    }
}

/// Parse the textual family form: `Ml[m]`, `Pr[m]`, `C3K[m]`, `T1a[d,d']`,
/// `T1b[d,d',d'']` or `T2[d,d']`.
pub fn parse_family(text: &str) -> Result<Family> {
    let text = text.trim();
    let open = text
        .find('[')
        .ok_or_else(|| Error::Parse(format!("expected Kind[params], got {text:?}")))?;
    if !text.ends_with(']') {
        return Err(Error::Parse(format!("expected Kind[params], got {text:?}")));
    }
    let kind = &text[..open];
    let params: Vec<i64> = text[open + 1..text.len() - 1]
        .split(',')
        .map(|p| {
            p.trim()
                .parse::<i64>()
                .map_err(|_| Error::Parse(format!("bad family parameter {p:?}")))
        })
        .collect::<Result<_>>()?;
    match (kind, params.as_slice()) {
        ("Ml", [m]) => Family::mobius_ladder_lex(*m),
        ("Pr", [m]) => Family::prism_lex(*m),
        ("C3K", [m]) => Family::cycle_lex(*m),
        ("T1a", [d, dp]) => Family::t1_case1(*d, *dp),
        ("T1b", [d, dp, dpp]) => Family::t1_case2(*d, *dp, *dpp),
        ("T2", [d, dp]) => Family::t2_family(*d, *dp),
        _ => Err(Error::Parse(format!("unknown family spec {text:?}"))),
    }
}

fn divisors_of(n: i64) -> Vec<i64> {
    let mut out = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            if d != n / d {
                out.push(n / d);
            }
        }
        d += 1;
    }
    out.sort_unstable();
    out
}

/// Every valid family instance of order `n`, in a fixed order: the three
/// blowup families first, then `T1Case1`, `T1Case2`, `T2Family`, each with
/// parameters ascending.
pub fn enumerate_families(n: i64) -> Vec<Family> {
    let mut out = Vec::new();
    if n % 4 == 0 && n / 4 >= 2 {
        out.push(Family::mobius_ladder_lex(n / 4).unwrap());
        if n / 4 >= 3 && (n / 4) % 2 == 1 {
            out.push(Family::prism_lex(n / 4).unwrap());
        }
    }
    if n % 3 == 0 && n / 3 >= 3 {
        out.push(Family::cycle_lex(n / 3).unwrap());
    }
    if n % 4 == 0 && (n / 4) % 2 == 1 {
        let n0 = n / 4;
        for d in divisors_of(n0) {
            let dp = n0 / d;
            if d > 1 && d < dp && gcd(d, dp) == 1 {
                out.push(Family::t1_case1(d, dp).unwrap());
            }
        }
        for d in divisors_of(n0) {
            for dp in divisors_of(n0 / d) {
                if dp <= d || gcd(d, dp) != 1 {
                    continue;
                }
                let dpp = n0 / (d * dp);
                if dpp > dp && gcd(dpp, d) == 1 && gcd(dpp, dp) == 1 {
                    out.push(Family::t1_case2(d, dp, dpp).unwrap());
                }
            }
        }
    }
    if n % 3 == 0 {
        let n0 = n / 3;
        if n0 % 3 != 0 {
            for d in divisors_of(n0) {
                let dp = n0 / d;
                if d > 1 && d < dp && gcd(d, dp) == 1 && d % 3 != 0 && dp % 3 != 0 {
                    out.push(Family::t2_family(d, dp).unwrap());
                }
            }
        }
    }
    out
}

/// Find the first family instance of order `n` and unit `q` with
/// `qS` equal to the family's defining set. The scan order is the order of
/// [`enumerate_families`] with units ascending, so the result is
/// deterministic.
pub fn recognize(s: &ConnectionSet) -> Option<(Family, i64)> {
    recognize_among(s, &enumerate_families(s.order()))
}

fn recognize_among(s: &ConnectionSet, families: &[Family]) -> Option<(Family, i64)> {
    let qs = units(s.order());
    for f in families {
        let target = f.connection_set();
        for &q in &qs {
            if s.multiply(q).expect("unit") == target {
                return Some((*f, q));
            }
        }
    }
    None
}

/// Which necessary condition for type-3 candidates failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Type3Failure {
    NotDivisibleBy60,
    ThreePartNot3,
    FivePartNot5,
    /// There is not exactly one element divisible by 5, or that element is
    /// not one of `n/12` and `5n/12`.
    BadFiveElement,
    /// Type-1 characters must exist and type-2 characters must not.
    NeedsType1WithoutType2,
    /// Every type-1 character must be odd and divisible by 15.
    Type1CharsNotOddMultiplesOf15,
    /// Every type-3 character must be even and coprime to 15.
    Type3CharsNotEvenCoprimeTo15,
}

/// Outcome of the type-3 necessary-condition filter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Type3Outcome {
    Pass,
    Fail(Type3Failure),
}

/// Check every necessary condition a distance magic circulant with a
/// type-3 character must satisfy; returns the first failing one.
///
/// Precondition: `S` has at least one type-3 character.
pub fn type3_necessary(s: &ConnectionSet) -> Result<Type3Outcome> {
    let adm = admissible_set(s);
    if !adm.iter().any(|c| c.has(TypeTag::T3)) {
        return Err(Error::Precondition(format!(
            "type3_necessary requires a type-3 character, none in {s}"
        )));
    }
    Ok(type3_necessary_with(s, &adm))
}

fn type3_necessary_with(s: &ConnectionSet, adm: &[AdmissibleChar]) -> Type3Outcome {
    use Type3Failure::*;
    let n = s.order();
    if n % 60 != 0 {
        return Type3Outcome::Fail(NotDivisibleBy60);
    }
    if p_part(n, 3).unwrap() != 3 {
        return Type3Outcome::Fail(ThreePartNot3);
    }
    if p_part(n, 5).unwrap() != 5 {
        return Type3Outcome::Fail(FivePartNot5);
    }
    let fives: Vec<i64> = s.reps().iter().copied().filter(|r| r % 5 == 0).collect();
    if fives.len() != 1 || !(fives[0] == n / 12 || fives[0] == 5 * n / 12) {
        return Type3Outcome::Fail(BadFiveElement);
    }
    let t1: Vec<i64> = adm.iter().filter(|c| c.has(TypeTag::T1)).map(|c| c.j).collect();
    let t2 = adm.iter().any(|c| c.has(TypeTag::T2));
    if t1.is_empty() || t2 {
        return Type3Outcome::Fail(NeedsType1WithoutType2);
    }
    if t1.iter().any(|&j| j % 2 == 0 || j % 15 != 0) {
        return Type3Outcome::Fail(Type1CharsNotOddMultiplesOf15);
    }
    let t3 = adm.iter().filter(|c| c.has(TypeTag::T3)).map(|c| c.j);
    for j in t3 {
        if j % 2 != 0 || gcd(j, 15) != 1 {
            return Type3Outcome::Fail(Type3CharsNotEvenCoprimeTo15);
        }
    }
    Type3Outcome::Pass
}

/// Why a graph is not distance magic.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum NoReason {
    /// The admissible set is empty: 0 is not an eigenvalue.
    EmptyKernel,
    /// A divisor `1 < d < n` divides every admissible character.
    CommonDivisor(i64),
    /// All characters are of type 1 but the set matches no type-1 family.
    TheoremType1,
    /// All characters are of type 2 but the order is even or the set
    /// matches no type-2 family.
    TheoremType2,
    /// A type-3 character exists but a necessary condition fails.
    Type3Necessary(Type3Failure),
    /// Exhaustive search covered the whole (symmetry-reduced) space.
    SearchExhausted,
}

/// Evidence for a positive verdict.
#[derive(Debug, Clone, Serialize)]
pub enum YesEvidence {
    /// `multiplier · S` equals the family's defining set; the family's
    /// labeler plus transport produces a concrete labeling.
    Family { family: Family, multiplier: i64 },
    /// A labeling found by search (already verified).
    Labeling(Labeling),
}

/// Statistics reported when a search gave up.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BudgetReport {
    pub nodes: u64,
    pub depth_reached: usize,
}

/// The three-valued answer of [`decide`].
#[derive(Debug, Clone, Serialize)]
pub enum DmVerdict {
    Yes(YesEvidence),
    No(NoReason),
    Unknown(BudgetReport),
}

impl DmVerdict {
    pub fn is_yes(&self) -> bool {
        matches!(self, DmVerdict::Yes(_))
    }

    pub fn is_no(&self) -> bool {
        matches!(self, DmVerdict::No(_))
    }

    /// `Some(true)`/`Some(false)` when conclusive, `None` when unknown.
    pub fn existence(&self) -> Option<bool> {
        match self {
            DmVerdict::Yes(_) => Some(true),
            DmVerdict::No(_) => Some(false),
            DmVerdict::Unknown(_) => None,
        }
    }
}

/// Decide whether `Circ(n; S)` is distance magic.
///
/// The cascade: (1) the kernel prefilter; (2) the tag profile of the
/// admissible set; (3) if every character carries a type-1 tag, the
/// all-type-1 classification applies and the answer is a family match or
/// No; (4) if every character carries a type-2 tag, the all-type-2
/// classification applies (the order must also be odd); (5) a type-3
/// character sends the set through the necessary-condition filter; (6)
/// what survives — the genuinely mixed profiles — goes to bounded
/// exhaustive search, which may return Unknown on budget.
///
/// "Every character carries a type-1 tag" deliberately allows characters
/// that are of types 1 and 2 at once.
pub fn decide(s: &ConnectionSet, budget: &SearchBudget) -> Result<DmVerdict> {
    if !s.is_connected() {
        return Err(Error::Precondition(format!(
            "decide requires a connected set, got {s}"
        )));
    }
    match candidate_filter(s)? {
        FilterOutcome::EmptyKernel => return Ok(DmVerdict::No(NoReason::EmptyKernel)),
        FilterOutcome::CommonDivisor(d) => {
            return Ok(DmVerdict::No(NoReason::CommonDivisor(d)))
        }
        FilterOutcome::Pass => {}
    }
    let adm = admissible_set(s);
    let all_t1 = adm.iter().all(|c| c.has(TypeTag::T1));
    let all_t2 = adm.iter().all(|c| c.has(TypeTag::T2));
    let has_t3 = adm.iter().any(|c| c.has(TypeTag::T3));

    if all_t1 {
        let fams: Vec<Family> = enumerate_families(s.order())
            .into_iter()
            .filter(Family::is_type1_family)
            .collect();
        return Ok(match recognize_among(s, &fams) {
            Some((family, multiplier)) => {
                DmVerdict::Yes(YesEvidence::Family { family, multiplier })
            }
            None => DmVerdict::No(NoReason::TheoremType1),
        });
    }
    if all_t2 {
        if s.order() % 2 == 0 {
            return Ok(DmVerdict::No(NoReason::TheoremType2));
        }
        let fams: Vec<Family> = enumerate_families(s.order())
            .into_iter()
            .filter(Family::is_type2_family)
            .collect();
        return Ok(match recognize_among(s, &fams) {
            Some((family, multiplier)) => {
                DmVerdict::Yes(YesEvidence::Family { family, multiplier })
            }
            None => DmVerdict::No(NoReason::TheoremType2),
        });
    }
    if has_t3 {
        if let Type3Outcome::Fail(which) = type3_necessary_with(s, &adm) {
            return Ok(DmVerdict::No(NoReason::Type3Necessary(which)));
        }
    }
    // mixed profile: a recognized family instance that is known distance
    // magic settles the question without search (the blowup families in
    // particular usually carry characters of two types)
    if let Some((family, multiplier)) = recognize(s) {
        if family.is_distance_magic() {
            return Ok(DmVerdict::Yes(YesEvidence::Family { family, multiplier }));
        }
    }
    // what is left is open in general; fall back to bounded search
    Ok(match search_labeling(s, budget)? {
        SearchOutcome::Found(l) => DmVerdict::Yes(YesEvidence::Labeling(l)),
        SearchOutcome::Exhausted => DmVerdict::No(NoReason::SearchExhausted),
        SearchOutcome::BudgetExceeded {
            nodes,
            depth_reached,
        } => DmVerdict::Unknown(BudgetReport {
            nodes,
            depth_reached,
        }),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn blowup_family_sets() {
        assert_eq!(
            Family::mobius_ladder_lex(6).unwrap().connection_set().reps(),
            [1, 6, 11]
        );
        assert_eq!(
            Family::prism_lex(3).unwrap().connection_set().reps(),
            [2, 3, 4]
        );
        assert_eq!(
            Family::cycle_lex(8).unwrap().connection_set().reps(),
            [1, 7, 9]
        );
        assert!(Family::prism_lex(4).is_err());
        assert!(Family::mobius_ladder_lex(1).is_err());
        // the degenerate ladder blowup is the order-8 cocktail-party graph
        assert_eq!(
            Family::mobius_ladder_lex(2).unwrap().connection_set().reps(),
            [1, 2, 3]
        );
    }

    #[test]
    fn t1_case1_sets_of_order_1540() {
        for (d, dp, expected) in [
            (5, 77, [2, 152, 385]),
            (7, 55, [2, 385, 548]),
            (11, 35, [2, 68, 385]),
        ] {
            let f = Family::t1_case1(d, dp).unwrap();
            assert_eq!(f.connection_set().reps(), expected, "T1a[{d},{dp}]");
        }
    }

    #[test]
    fn t1_case2_sets_of_order_1540() {
        let f = Family::t1_case2(5, 7, 11).unwrap();
        // the smallest-b scan: b = 105 is rejected (gcd 5), b = 413 is next
        assert_eq!(f.t1_case2_solutions().unwrap(), (413, 737));
        assert_eq!(f.connection_set().reps(), [5, 413, 737]);

        let f = Family::t1_case2(1, 5, 77).unwrap();
        assert_eq!(f.t1_case2_solutions().unwrap(), (1385, 1309));
        assert_eq!(f.connection_set().reps(), [1, 155, 231]);

        assert_eq!(
            Family::t1_case2(1, 7, 55).unwrap().connection_set().reps(),
            [1, 329, 715]
        );
        assert_eq!(
            Family::t1_case2(1, 11, 35).unwrap().connection_set().reps(),
            [1, 209, 595]
        );
    }

    #[test]
    fn t2_family_set() {
        let f = Family::t2_family(5, 7).unwrap();
        assert_eq!(f.t2_solution().unwrap(), (35, -1, 6));
        assert_eq!(f.connection_set().reps(), [1, 6, 34]);
        assert!(Family::t2_family(3, 5).is_err());
        assert!(Family::t2_family(5, 5).is_err());
    }

    #[test]
    fn family_display_and_parse_round_trip() {
        for text in ["Ml[3]", "Pr[385]", "C3K[8]", "T1a[5,77]", "T1b[1,5,77]", "T2[5,7]"] {
            assert_eq!(parse_family(text).unwrap().to_string(), text);
        }
        assert!(parse_family("T1a[4,6]").is_err());
        assert!(parse_family("Zz[3]").is_err());
        assert!(parse_family("Ml[x]").is_err());
    }

    #[test]
    fn enumerate_families_order_1540() {
        let fams = enumerate_families(1540);
        let names: Vec<String> = fams.iter().map(|f| f.to_string()).collect();
        assert_eq!(
            names,
            vec![
                "Ml[385]",
                "Pr[385]",
                "T1a[5,77]",
                "T1a[7,55]",
                "T1a[11,35]",
                "T1b[1,5,77]",
                "T1b[1,7,55]",
                "T1b[1,11,35]",
                "T1b[5,7,11]",
            ]
        );
    }

    #[test]
    fn enumerate_families_small_orders() {
        let names: Vec<String> =
            enumerate_families(12).iter().map(|f| f.to_string()).collect();
        assert_eq!(names, vec!["Ml[3]", "Pr[3]", "C3K[4]"]);
        let names: Vec<String> =
            enumerate_families(105).iter().map(|f| f.to_string()).collect();
        assert_eq!(names, vec!["C3K[35]", "T2[5,7]"]);
    }

    #[test]
    fn recognize_order_24_candidates() {
        let s = ConnectionSet::new(24, [1, 6, 11]).unwrap();
        let (f, q) = recognize(&s).unwrap();
        assert_eq!(f, Family::MobiusLadderLex { m: 6 });
        assert_eq!(s.multiply(q).unwrap(), f.connection_set());

        let s = ConnectionSet::new(24, [1, 7, 9]).unwrap();
        let (f, _) = recognize(&s).unwrap();
        assert_eq!(f, Family::CycleLex { m: 8 });

        let s = ConnectionSet::new(24, [1, 2, 3]).unwrap();
        assert!(recognize(&s).is_none());
    }

    #[test]
    fn recognize_accepts_any_orbit_member() {
        let f = Family::t1_case1(5, 77).unwrap();
        let moved = f.connection_set().multiply(9).unwrap();
        let (g, q) = recognize(&moved).unwrap();
        assert_eq!(g, f);
        assert_eq!(moved.multiply(q).unwrap(), f.connection_set());
    }

    #[test]
    fn type3_filter_on_the_order_60_candidate() {
        let s = ConnectionSet::new(60, [5, 6, 12]).unwrap();
        assert_eq!(type3_necessary(&s).unwrap(), Type3Outcome::Pass);
        // 30 is not divisible by 60; (30, {3,9,10}) has type-3 characters
        let s30 = ConnectionSet::new(30, [3, 9, 10]).unwrap();
        assert_eq!(
            type3_necessary(&s30).unwrap(),
            Type3Outcome::Fail(Type3Failure::NotDivisibleBy60)
        );
        // precondition: no type-3 character at all
        assert!(type3_necessary(&ConnectionSet::new(24, [1, 2, 3]).unwrap()).is_err());
    }

    #[test]
    fn decide_theorem_paths() {
        let budget = SearchBudget::nodes(10_000);
        // empty kernel
        let v = decide(&ConnectionSet::new(7, [1, 2, 3]).unwrap(), &budget).unwrap();
        assert!(matches!(v, DmVerdict::No(NoReason::EmptyKernel)));
        // all type 1, family match
        let v = decide(&ConnectionSet::new(1540, [2, 152, 385]).unwrap(), &budget).unwrap();
        match v {
            DmVerdict::Yes(YesEvidence::Family { family, .. }) => {
                assert_eq!(family, Family::T1Case1 { d: 5, dp: 77 })
            }
            other => panic!("expected family evidence, got {other:?}"),
        }
        // all type 2, family match, odd order
        let v = decide(&ConnectionSet::new(105, [1, 6, 34]).unwrap(), &budget).unwrap();
        match v {
            DmVerdict::Yes(YesEvidence::Family { family, .. }) => {
                assert_eq!(family, Family::T2Family { d: 5, dp: 7 })
            }
            other => panic!("expected family evidence, got {other:?}"),
        }
        // disconnected input is a precondition violation
        assert!(decide(&ConnectionSet::new(24, [2, 4, 6]).unwrap(), &budget).is_err());
    }
}
