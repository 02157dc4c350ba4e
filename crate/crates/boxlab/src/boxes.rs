//! Bipartite two-setting / two-outcome probability boxes.
//!
//! A box is a conditional probability table p(i, j | x, y) with outcomes
//! i, j in {+1, -1}, Alice's setting x in {a, a'} and Bob's setting y in
//! {b, b'}. The module provides the built-in families (PR, uniform, the
//! tunable unbiased family, local deterministic points), correlators and the
//! CHSH combination, and a no-signaling validator that reports marginal
//! discrepancies instead of panicking, so user-supplied tables can be
//! explained rather than rejected.

use std::fmt;
use std::str::FromStr;

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Outcomes in table order: index 0 holds +1, index 1 holds -1.
pub const OUTCOMES: [i8; 2] = [1, -1];

fn outcome_index(v: i8) -> usize {
    debug_assert!(v == 1 || v == -1);
    if v == 1 {
        0
    } else {
        1
    }
}

/// The two parties sharing a box.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Party {
    Alice,
    Bob,
}

impl fmt::Display for Party {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Party::Alice => write!(f, "alice"),
            Party::Bob => write!(f, "bob"),
        }
    }
}

/// Alice's measurement choice: a or a'.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AliceSetting {
    A,
    APrime,
}

impl AliceSetting {
    pub const ALL: [AliceSetting; 2] = [AliceSetting::A, AliceSetting::APrime];

    pub fn index(self) -> usize {
        match self {
            AliceSetting::A => 0,
            AliceSetting::APrime => 1,
        }
    }

    /// The other choice.
    pub fn flipped(self) -> Self {
        match self {
            AliceSetting::A => AliceSetting::APrime,
            AliceSetting::APrime => AliceSetting::A,
        }
    }
}

impl fmt::Display for AliceSetting {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AliceSetting::A => write!(f, "a"),
            AliceSetting::APrime => write!(f, "a'"),
        }
    }
}

impl FromStr for AliceSetting {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "a" => Ok(AliceSetting::A),
            "a'" | "ap" | "a_prime" => Ok(AliceSetting::APrime),
            other => Err(format!("unknown Alice setting {other:?} (expected a or a')")),
        }
    }
}

/// Bob's measurement choice: b or b'.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BobSetting {
    B,
    BPrime,
}

impl BobSetting {
    pub const ALL: [BobSetting; 2] = [BobSetting::B, BobSetting::BPrime];

    pub fn index(self) -> usize {
        match self {
            BobSetting::B => 0,
            BobSetting::BPrime => 1,
        }
    }

    pub fn flipped(self) -> Self {
        match self {
            BobSetting::B => BobSetting::BPrime,
            BobSetting::BPrime => BobSetting::B,
        }
    }
}

impl fmt::Display for BobSetting {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BobSetting::B => write!(f, "b"),
            BobSetting::BPrime => write!(f, "b'"),
        }
    }
}

impl FromStr for BobSetting {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "b" => Ok(BobSetting::B),
            "b'" | "bp" | "b_prime" => Ok(BobSetting::BPrime),
            other => Err(format!("unknown Bob setting {other:?} (expected b or b')")),
        }
    }
}

/// One 2x2 outcome block: rows are Alice's outcome (+1 first), columns Bob's.
pub type Block<T> = [[T; 2]; 2];

/// Conditional probability table p(i, j | x, y) of a bipartite box.
#[derive(Debug, Clone, PartialEq)]
pub struct BoxTable<T> {
    /// `blocks[x][y]` is the outcome distribution for setting pair (x, y).
    blocks: [[Block<T>; 2]; 2],
}

impl<T: Scalar> BoxTable<T> {
    /// Build a table from raw blocks. No validation is performed here;
    /// call [`BoxTable::check_distribution`] to validate.
    pub fn from_blocks(blocks: [[Block<T>; 2]; 2]) -> Self {
        BoxTable { blocks }
    }

    /// The box with every entry 1/4: uncorrelated uniform outcomes.
    pub fn uniform() -> Self {
        let q = T::ratio(1, 4);
        let block = || [[q.clone(), q.clone()], [q.clone(), q.clone()]];
        BoxTable {
            blocks: [[block(), block()], [block(), block()]],
        }
    }

    /// The PR box: perfectly correlated outcomes on (a,b), (a,b'), (a',b) and
    /// perfectly anti-correlated outcomes on (a',b'), with uniform marginals.
    pub fn pr() -> Self {
        let half = T::ratio(1, 2);
        let zero = T::zero();
        // i*j = +1 with probability 1 on the three unprimed-product blocks.
        let corr = [[half.clone(), zero.clone()], [zero.clone(), half.clone()]];
        let anti = [[zero.clone(), half.clone()], [half.clone(), zero]];
        BoxTable {
            blocks: [[corr.clone(), corr.clone()], [corr, anti]],
        }
    }

    /// Uniform-marginal box with prescribed correlators
    /// `[C(a,b), C(a,b'), C(a',b), C(a',b')]`; each block is
    /// p(i,j) = (1 + c*i*j)/4.
    pub fn with_correlators(correlators: [T; 4]) -> Result<Self> {
        for c in &correlators {
            if c.abs() > T::one() {
                return Err(Error::OutOfRange {
                    name: "correlator",
                    value: c.to_f64_lossy(),
                    min: -1.0,
                    max: 1.0,
                });
            }
        }
        let quarter = T::ratio(1, 4);
        let block = |c: &T| {
            let mut out = [[T::zero(), T::zero()], [T::zero(), T::zero()]];
            for (bi, &i) in OUTCOMES.iter().enumerate() {
                for (bj, &j) in OUTCOMES.iter().enumerate() {
                    let sign = T::from_int(i64::from(i) * i64::from(j));
                    out[bi][bj] = (T::one() + sign * c.clone()) * quarter.clone();
                }
            }
            out
        };
        let [c_ab, c_abp, c_apb, c_apbp] = correlators;
        Ok(BoxTable {
            blocks: [
                [block(&c_ab), block(&c_abp)],
                [block(&c_apb), block(&c_apbp)],
            ],
        })
    }

    /// The tunable family with C(a,b) = C(a,b') = C(a',b) = E = -C(a',b') and
    /// uniform marginals. E = 1 reproduces the PR box, E = 0 the uniform box.
    pub fn unbiased(e: T) -> Result<Self> {
        if e.abs() > T::one() {
            return Err(Error::OutOfRange {
                name: "correlation strength E",
                value: e.to_f64_lossy(),
                min: -1.0,
                max: 1.0,
            });
        }
        Self::with_correlators([e.clone(), e.clone(), e.clone(), -e])
    }

    /// Point-mass box assigning a fixed outcome to each setting.
    pub fn local_deterministic(i_a: i8, i_a_prime: i8, j_b: i8, j_b_prime: i8) -> Result<Self> {
        for (name, v) in [
            ("i_a", i_a),
            ("i_a'", i_a_prime),
            ("j_b", j_b),
            ("j_b'", j_b_prime),
        ] {
            if v != 1 && v != -1 {
                return Err(Error::NotAnOutcome {
                    name,
                    value: i64::from(v),
                });
            }
        }
        let alice = [i_a, i_a_prime];
        let bob = [j_b, j_b_prime];
        let mut table = BoxTable {
            blocks: [
                [Self::zero_block(), Self::zero_block()],
                [Self::zero_block(), Self::zero_block()],
            ],
        };
        for x in AliceSetting::ALL {
            for y in BobSetting::ALL {
                let i = outcome_index(alice[x.index()]);
                let j = outcome_index(bob[y.index()]);
                table.blocks[x.index()][y.index()][i][j] = T::one();
            }
        }
        Ok(table)
    }

    fn zero_block() -> Block<T> {
        [[T::zero(), T::zero()], [T::zero(), T::zero()]]
    }

    /// Convex combination `lambda * p + (1 - lambda) * q`.
    pub fn mix(p: &Self, q: &Self, lambda: T) -> Result<Self> {
        if lambda < T::zero() || lambda > T::one() {
            return Err(Error::OutOfRange {
                name: "lambda",
                value: lambda.to_f64_lossy(),
                min: 0.0,
                max: 1.0,
            });
        }
        let co = T::one() - lambda.clone();
        let mut out = p.clone();
        for x in 0..2 {
            for y in 0..2 {
                for i in 0..2 {
                    for j in 0..2 {
                        out.blocks[x][y][i][j] = lambda.clone() * p.blocks[x][y][i][j].clone()
                            + co.clone() * q.blocks[x][y][i][j].clone();
                    }
                }
            }
        }
        Ok(out)
    }

    /// p(i, j | x, y).
    pub fn prob(&self, x: AliceSetting, y: BobSetting, i: i8, j: i8) -> &T {
        &self.blocks[x.index()][y.index()][outcome_index(i)][outcome_index(j)]
    }

    /// The 2x2 outcome block for setting pair (x, y).
    pub fn block(&self, x: AliceSetting, y: BobSetting) -> &Block<T> {
        &self.blocks[x.index()][y.index()]
    }

    /// Alice's marginal p(i | x, y).
    pub fn alice_marginal(&self, x: AliceSetting, y: BobSetting, i: i8) -> T {
        let b = self.block(x, y);
        let row = outcome_index(i);
        b[row][0].clone() + b[row][1].clone()
    }

    /// Bob's marginal p(j | x, y).
    pub fn bob_marginal(&self, x: AliceSetting, y: BobSetting, j: i8) -> T {
        let b = self.block(x, y);
        let col = outcome_index(j);
        b[0][col].clone() + b[1][col].clone()
    }

    /// Check nonnegativity and per-block normalization, naming the offending
    /// block on failure.
    pub fn check_distribution(&self) -> Result<()> {
        let tol = T::validation_tol();
        for x in AliceSetting::ALL {
            for y in BobSetting::ALL {
                let block = self.block(x, y);
                let mut total = T::zero();
                for (bi, &i) in OUTCOMES.iter().enumerate() {
                    for (bj, &j) in OUTCOMES.iter().enumerate() {
                        let p = &block[bi][bj];
                        if *p < T::zero() {
                            return Err(Error::NegativeEntry {
                                x,
                                y,
                                i,
                                j,
                                value: p.to_f64_lossy(),
                            });
                        }
                        total += p.clone();
                    }
                }
                if (total.clone() - T::one()).abs() > tol {
                    return Err(Error::BlockNotNormalized {
                        x,
                        y,
                        total: total.to_f64_lossy(),
                    });
                }
            }
        }
        Ok(())
    }

    /// The correlator C(x, y) = p(1,1) + p(-1,-1) - p(1,-1) - p(-1,1).
    pub fn correlation(&self, x: AliceSetting, y: BobSetting) -> Result<T> {
        self.check_distribution()?;
        let b = self.block(x, y);
        Ok(b[0][0].clone() + b[1][1].clone() - b[0][1].clone() - b[1][0].clone())
    }

    /// All four correlators and the CHSH combination.
    pub fn chsh(&self) -> Result<CorrelationVector<T>> {
        Ok(CorrelationVector::new(
            self.correlation(AliceSetting::A, BobSetting::B)?,
            self.correlation(AliceSetting::A, BobSetting::BPrime)?,
            self.correlation(AliceSetting::APrime, BobSetting::B)?,
            self.correlation(AliceSetting::APrime, BobSetting::BPrime)?,
        ))
    }

    /// Marginal-discrepancy report for the no-signaling condition: each
    /// party's outcome marginals must not depend on the other party's setting.
    pub fn no_signaling_report(&self) -> NoSignalingReport<T> {
        let mut alice = MarginalCheck {
            party: Party::Alice,
            setting: AliceSetting::A.to_string(),
            outcome: 1,
            discrepancy: T::zero(),
        };
        for x in AliceSetting::ALL {
            for &i in &OUTCOMES {
                let d = (self.alice_marginal(x, BobSetting::B, i)
                    - self.alice_marginal(x, BobSetting::BPrime, i))
                .abs();
                if d > alice.discrepancy {
                    alice = MarginalCheck {
                        party: Party::Alice,
                        setting: x.to_string(),
                        outcome: i,
                        discrepancy: d,
                    };
                }
            }
        }
        let mut bob = MarginalCheck {
            party: Party::Bob,
            setting: BobSetting::B.to_string(),
            outcome: 1,
            discrepancy: T::zero(),
        };
        for y in BobSetting::ALL {
            for &j in &OUTCOMES {
                let d = (self.bob_marginal(AliceSetting::A, y, j)
                    - self.bob_marginal(AliceSetting::APrime, y, j))
                .abs();
                if d > bob.discrepancy {
                    bob = MarginalCheck {
                        party: Party::Bob,
                        setting: y.to_string(),
                        outcome: j,
                        discrepancy: d,
                    };
                }
            }
        }
        NoSignalingReport {
            alice,
            bob,
            tolerance: T::validation_tol(),
        }
    }
}

impl<T: Scalar + Serialize> BoxTable<T> {
    /// Serialize to the box JSON format:
    /// `{"table": {"a,b": [[p(1,1), p(1,-1)], [p(-1,1), p(-1,-1)]], ...}}`.
    pub fn to_json(&self) -> String {
        let repr = BoxJson {
            table: BlockMap {
                ab: self.block(AliceSetting::A, BobSetting::B).clone(),
                ab_prime: self.block(AliceSetting::A, BobSetting::BPrime).clone(),
                a_prime_b: self.block(AliceSetting::APrime, BobSetting::B).clone(),
                a_prime_b_prime: self.block(AliceSetting::APrime, BobSetting::BPrime).clone(),
            },
        };
        serde_json::to_string_pretty(&repr).expect("box JSON serialization cannot fail")
    }
}

impl<T: Scalar + DeserializeOwned> BoxTable<T> {
    /// Parse the box JSON format. The result is not validated; call
    /// [`BoxTable::check_distribution`] afterwards.
    pub fn from_json(s: &str) -> Result<Self> {
        let repr: BoxJson<T> = serde_json::from_str(s)?;
        Ok(BoxTable {
            blocks: [
                [repr.table.ab, repr.table.ab_prime],
                [repr.table.a_prime_b, repr.table.a_prime_b_prime],
            ],
        })
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct BoxJson<T> {
    table: BlockMap<T>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct BlockMap<T> {
    #[serde(rename = "a,b")]
    ab: [[T; 2]; 2],
    #[serde(rename = "a,b'")]
    ab_prime: [[T; 2]; 2],
    #[serde(rename = "a',b")]
    a_prime_b: [[T; 2]; 2],
    #[serde(rename = "a',b'")]
    a_prime_b_prime: [[T; 2]; 2],
}

/// The four correlators of a box and their CHSH combination
/// S = C(a,b) + C(a,b') + C(a',b) - C(a',b').
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CorrelationVector<T> {
    pub c_ab: T,
    pub c_ab_prime: T,
    pub c_a_prime_b: T,
    pub c_a_prime_b_prime: T,
    pub s_chsh: T,
}

impl<T: Scalar> CorrelationVector<T> {
    pub fn new(c_ab: T, c_ab_prime: T, c_a_prime_b: T, c_a_prime_b_prime: T) -> Self {
        let s_chsh =
            c_ab.clone() + c_ab_prime.clone() + c_a_prime_b.clone() - c_a_prime_b_prime.clone();
        CorrelationVector {
            c_ab,
            c_ab_prime,
            c_a_prime_b,
            c_a_prime_b_prime,
            s_chsh,
        }
    }
}

/// Worst marginal discrepancy found for one party.
#[derive(Debug, Clone)]
pub struct MarginalCheck<T> {
    pub party: Party,
    /// Own setting at which the worst discrepancy occurs.
    pub setting: String,
    /// Outcome at which the worst discrepancy occurs.
    pub outcome: i8,
    /// max |p(outcome | setting, other) - p(outcome | setting, other')|.
    pub discrepancy: T,
}

/// Result of [`BoxTable::no_signaling_report`]. Carries pass/fail rather than
/// erroring so the caller can explain a violation.
#[derive(Debug, Clone)]
pub struct NoSignalingReport<T> {
    pub alice: MarginalCheck<T>,
    pub bob: MarginalCheck<T>,
    pub tolerance: T,
}

impl<T: Scalar> NoSignalingReport<T> {
    pub fn alice_passes(&self) -> bool {
        self.alice.discrepancy <= self.tolerance
    }

    pub fn bob_passes(&self) -> bool {
        self.bob.discrepancy <= self.tolerance
    }

    pub fn passes(&self) -> bool {
        self.alice_passes() && self.bob_passes()
    }
}

impl<T: Scalar> fmt::Display for NoSignalingReport<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (check, ok) in [
            (&self.alice, self.alice_passes()),
            (&self.bob, self.bob_passes()),
        ] {
            writeln!(
                f,
                "{}: max |Δ p({} | {})| = {} ({})",
                check.party,
                check.outcome,
                check.setting,
                check.discrepancy,
                if ok { "ok" } else { "SIGNALING" },
            )?;
        }
        write!(f, "tolerance {}", self.tolerance)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    type Exact = BigRational;

    #[test]
    fn pr_box_correlators() {
        let pr = BoxTable::<f64>::pr();
        assert_eq!(pr.correlation(AliceSetting::A, BobSetting::B).unwrap(), 1.0);
        assert_eq!(
            pr.correlation(AliceSetting::A, BobSetting::BPrime).unwrap(),
            1.0
        );
        assert_eq!(
            pr.correlation(AliceSetting::APrime, BobSetting::B).unwrap(),
            1.0
        );
        assert_eq!(
            pr.correlation(AliceSetting::APrime, BobSetting::BPrime)
                .unwrap(),
            -1.0
        );
    }

    #[test]
    fn pr_box_chsh_is_four() {
        let s = BoxTable::<f64>::pr().chsh().unwrap().s_chsh;
        assert_eq!(s, 4.0);
    }

    #[test]
    fn pr_box_entry_and_no_signaling() {
        let pr = BoxTable::<f64>::pr();
        assert_eq!(*pr.prob(AliceSetting::A, BobSetting::B, 1, 1), 0.5);
        assert!(pr.no_signaling_report().passes());
    }

    #[test]
    fn uniform_box_correlation_vanishes() {
        let u = BoxTable::<f64>::uniform();
        assert_eq!(u.correlation(AliceSetting::A, BobSetting::B).unwrap(), 0.0);
    }

    #[test]
    fn unbiased_at_one_is_pr() {
        let pr = BoxTable::<Exact>::pr();
        let unbiased = BoxTable::<Exact>::unbiased(Exact::from_int(1)).unwrap();
        assert_eq!(pr, unbiased);
    }

    #[test]
    fn unbiased_tsirelson_point() {
        let e = std::f64::consts::SQRT_2 / 2.0;
        let s = BoxTable::unbiased(e).unwrap().chsh().unwrap().s_chsh;
        assert!((s - 2.0 * std::f64::consts::SQRT_2).abs() <= 1e-12);
    }

    #[test]
    fn unbiased_half_sits_on_chsh_bound() {
        let s = BoxTable::unbiased(0.5).unwrap().chsh().unwrap().s_chsh;
        assert_eq!(s, 2.0);
    }

    #[test]
    fn unbiased_rejects_out_of_range() {
        assert!(matches!(
            BoxTable::<f64>::unbiased(1.5),
            Err(Error::OutOfRange { .. })
        ));
    }

    #[test]
    fn local_deterministic_all_plus_chsh() {
        let b = BoxTable::<f64>::local_deterministic(1, 1, 1, 1).unwrap();
        assert_eq!(b.chsh().unwrap().s_chsh, 2.0);
        b.check_distribution().unwrap();
    }

    #[test]
    fn local_deterministic_mixed_assignment() {
        // (+1,+1,+1,-1): S = 1 + (-1) + 1 - (-1) = 2.
        let b = BoxTable::<f64>::local_deterministic(1, 1, 1, -1).unwrap();
        assert_eq!(b.chsh().unwrap().s_chsh, 2.0);
        let b = BoxTable::<f64>::local_deterministic(1, -1, 1, 1).unwrap();
        b.check_distribution().unwrap();
    }

    #[test]
    fn local_deterministic_rejects_non_outcomes() {
        assert!(matches!(
            BoxTable::<f64>::local_deterministic(2, 1, 1, 1),
            Err(Error::NotAnOutcome { .. })
        ));
    }

    #[test]
    fn sixteen_deterministic_boxes_max_chsh_two() {
        let mut max_abs: f64 = 0.0;
        for i_a in OUTCOMES {
            for i_ap in OUTCOMES {
                for j_b in OUTCOMES {
                    for j_bp in OUTCOMES {
                        let b =
                            BoxTable::<f64>::local_deterministic(i_a, i_ap, j_b, j_bp).unwrap();
                        max_abs = max_abs.max(b.chsh().unwrap().s_chsh.abs());
                    }
                }
            }
        }
        assert_eq!(max_abs, 2.0);
    }

    #[test]
    fn crafted_signaling_box_reports_discrepancy() {
        // Bob's marginal p(j=1 | b) is 0.9 under x=a and 0.1 under x=a'.
        let skew = |p: f64| [[p / 2.0, (1.0 - p) / 2.0], [p / 2.0, (1.0 - p) / 2.0]];
        let uniform = [[0.25, 0.25], [0.25, 0.25]];
        let table = BoxTable::from_blocks([[skew(0.9), uniform], [skew(0.1), uniform]]);
        table.check_distribution().unwrap();
        let report = table.no_signaling_report();
        assert!(!report.passes());
        assert!(report.alice_passes());
        assert_eq!(report.bob.party, Party::Bob);
        assert_eq!(report.bob.setting, "b");
        assert!((report.bob.discrepancy - 0.8).abs() <= 1e-12);
    }

    #[test]
    fn unbiased_family_no_signaling_by_direct_marginal_sum() {
        for e in [0.0, 0.5, 1.0] {
            let b = BoxTable::unbiased(e).unwrap();
            for x in AliceSetting::ALL {
                for y in BobSetting::ALL {
                    for &i in &OUTCOMES {
                        assert!((b.alice_marginal(x, y, i) - 0.5).abs() <= 1e-12);
                        assert!((b.bob_marginal(x, y, i) - 0.5).abs() <= 1e-12);
                    }
                }
            }
            assert!(b.no_signaling_report().passes());
        }
    }

    #[test]
    fn correlation_errors_name_offending_block() {
        let mut blocks = [[[[0.25f64; 2]; 2]; 2]; 2];
        blocks[1][0] = [[0.5, 0.5], [0.25, 0.25]]; // sums to 1.5
        let table = BoxTable::from_blocks(blocks);
        match table.correlation(AliceSetting::A, BobSetting::B) {
            Err(Error::BlockNotNormalized { x, y, total }) => {
                assert_eq!(x, AliceSetting::APrime);
                assert_eq!(y, BobSetting::B);
                assert!((total - 1.5).abs() <= 1e-12);
            }
            other => panic!("expected normalization error, got {other:?}"),
        }
    }

    #[test]
    fn negative_entry_rejected() {
        let mut blocks = [[[[0.25f64; 2]; 2]; 2]; 2];
        blocks[0][1][1][0] = -0.25;
        blocks[0][1][0][0] = 0.75;
        let table = BoxTable::from_blocks(blocks);
        assert!(matches!(
            table.correlation(AliceSetting::A, BobSetting::B),
            Err(Error::NegativeEntry {
                x: AliceSetting::A,
                y: BobSetting::BPrime,
                ..
            })
        ));
    }

    #[test]
    fn exact_pr_box_validates_with_zero_tolerance() {
        let pr = BoxTable::<Exact>::pr();
        pr.check_distribution().unwrap();
        assert!(pr.no_signaling_report().passes());
        assert_eq!(pr.chsh().unwrap().s_chsh, Exact::from_int(4));
    }

    #[test]
    fn json_round_trip_preserves_dyadic_entries() {
        let pr = BoxTable::<f64>::pr();
        let parsed = BoxTable::<f64>::from_json(&pr.to_json()).unwrap();
        assert_eq!(pr, parsed);
    }

    #[test]
    fn json_parse_error_carries_position() {
        let err = BoxTable::<f64>::from_json("{\"table\": {").unwrap_err();
        assert!(matches!(err, Error::BoxJson { .. }));
    }
}
