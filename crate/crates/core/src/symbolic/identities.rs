//! Polynomial identities relating commutators of generic strictly upper
//! triangular 5×5 matrices to closed-form expressions.
//!
//! Three generic matrices `X = [x_ij]`, `Y = [y_ij]`, `A = [a_ij]` are built
//! under a variable substitution (a [`Setup`]); an identity states that one
//! entry of a commutator expression equals a displayed polynomial. Each
//! identity is checked exactly in the polynomial ring and cross-checked
//! numerically by evaluating the same commutators over ℚ at random points.

use std::collections::HashMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::expr::{Evaluator, Expr, ExprError};
use super::poly::{Polynomial, Var};
use crate::exactnum::{Field, Rational, Ring};
use crate::linalg::Matrix;

/// Default seed for the numeric cross-check.
pub const DEFAULT_SEED: u64 = 0x5eed_0005;
/// Default number of random points per identity.
pub const DEFAULT_RANDOM_CHECKS: usize = 100;

/// Scalars in which the generic matrices can be instantiated.
pub trait Scalar: Ring {
    fn from_rational(r: &Rational) -> Self;
    /// Exact division; `None` when the divisor is not invertible in this domain.
    fn div_exact(&self, rhs: &Self) -> Option<Self>;
}

impl Scalar for Rational {
    fn from_rational(r: &Rational) -> Self {
        r.clone()
    }
    fn div_exact(&self, rhs: &Self) -> Option<Self> {
        Field::checked_div(self, rhs)
    }
}

impl Scalar for Polynomial {
    fn from_rational(r: &Rational) -> Self {
        Polynomial::constant(r.clone())
    }
    fn div_exact(&self, rhs: &Self) -> Option<Self> {
        Polynomial::div_exact(self, rhs)
    }
}

/// Evaluates expressions over a [`Scalar`] given values for the variable
/// universe and a table of named intermediates.
pub struct ScalarEval<'a, R> {
    vars: &'a dyn Fn(Var) -> R,
    defs: HashMap<String, R>,
}

impl<'a, R: Scalar> ScalarEval<'a, R> {
    pub fn new(vars: &'a dyn Fn(Var) -> R) -> Self {
        ScalarEval {
            vars,
            defs: HashMap::new(),
        }
    }

    pub fn define(&mut self, name: &str, body: &str) -> Result<(), ExprError> {
        let value = Expr::parse(body)?.eval(self)?;
        self.defs.insert(name.to_string(), value);
        Ok(())
    }

    pub fn eval_str(&self, s: &str) -> Result<R, ExprError> {
        Expr::parse(s)?.eval(self)
    }
}

impl<R: Scalar> Evaluator for ScalarEval<'_, R> {
    type Value = R;

    fn number(&self, n: &Rational) -> Result<R, ExprError> {
        Ok(R::from_rational(n))
    }
    fn name(&self, name: &str) -> Result<R, ExprError> {
        if let Some(v) = self.defs.get(name) {
            return Ok(v.clone());
        }
        Var::from_name(name)
            .map(|v| (self.vars)(v))
            .ok_or_else(|| ExprError::UnknownName(name.to_string()))
    }
    fn add(&self, a: R, b: R) -> Result<R, ExprError> {
        Ok(a + b)
    }
    fn sub(&self, a: R, b: R) -> Result<R, ExprError> {
        Ok(a - b)
    }
    fn mul(&self, a: R, b: R) -> Result<R, ExprError> {
        Ok(a * b)
    }
    fn div(&self, a: R, b: R) -> Result<R, ExprError> {
        a.div_exact(&b)
            .ok_or_else(|| ExprError::NonInvertible(b.to_string()))
    }
    fn neg(&self, a: R) -> Result<R, ExprError> {
        Ok(-a)
    }
}

/// A specialization of the generic matrices, given as variable substitutions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Setup {
    /// No substitution.
    Generic,
    /// `x45 = c·x12`, `y45 = c·y12`.
    CornerScaled,
    /// `CornerScaled` plus `x23 = y23·x34/y34`.
    CornerAligned,
    /// `x45 = y45 = 0`.
    LastRowZero,
    /// `x12 = y12 = 0`.
    FirstRowZero,
    /// `CornerAligned` plus `a45 = c·a12`.
    CommutingScaled,
    /// `x45 = y45 = a45 = 0`.
    CommutingZero,
    /// `CornerAligned` with `A` reduced to the entries 13, 14, 15, 24, 25 and
    /// `a35 = −c·a13·y34/y23`.
    ReducedScaled,
    /// `LastRowZero` with `A` reduced to the entries 13, 14, 15, 24, 25.
    ReducedZero,
}

impl Setup {
    pub fn substitutions(self) -> &'static [(&'static str, &'static str)] {
        const CORNER: [(&str, &str); 2] = [("x45", "c x12"), ("y45", "c y12")];
        match self {
            Setup::Generic => &[],
            Setup::CornerScaled => &CORNER,
            Setup::CornerAligned => &[("x45", "c x12"), ("y45", "c y12"), ("x23", "y23 x34 / y34")],
            Setup::LastRowZero => &[("x45", "0"), ("y45", "0")],
            Setup::FirstRowZero => &[("x12", "0"), ("y12", "0")],
            Setup::CommutingScaled => &[
                ("x45", "c x12"),
                ("y45", "c y12"),
                ("x23", "y23 x34 / y34"),
                ("a45", "c a12"),
            ],
            Setup::CommutingZero => &[("x45", "0"), ("y45", "0"), ("a45", "0")],
            Setup::ReducedScaled => &[
                ("x45", "c x12"),
                ("y45", "c y12"),
                ("x23", "y23 x34 / y34"),
                ("a12", "0"),
                ("a23", "0"),
                ("a34", "0"),
                ("a45", "0"),
                ("a35", "-c a13 y34 / y23"),
            ],
            Setup::ReducedZero => &[
                ("x45", "0"),
                ("y45", "0"),
                ("a12", "0"),
                ("a23", "0"),
                ("a34", "0"),
                ("a45", "0"),
                ("a35", "0"),
            ],
        }
    }

    /// Variable values after substitution, starting from free values `base`.
    pub fn specialize<R: Scalar>(self, base: &dyn Fn(Var) -> R) -> Result<Vec<R>, ExprError> {
        let free = ScalarEval::new(base);
        let mut values: Vec<R> = Var::all().map(base).collect();
        for (name, body) in self.substitutions() {
            let v = Var::from_name(name).ok_or_else(|| ExprError::UnknownName(name.to_string()))?;
            values[v.index()] = free.eval_str(body)?;
        }
        Ok(values)
    }
}

/// Generic strictly upper triangular 5×5 matrix with entries `prefix_ij`.
pub fn generic_matrix<R: Ring>(prefix: char, value: impl Fn(Var) -> R) -> Matrix<R> {
    Matrix::from_fn(5, 5, |i, j| {
        if i < j {
            value(Var::entry(prefix, i + 1, j + 1).expect("indices in range"))
        } else {
            R::zero()
        }
    })
}

/// Which commutator entry an identity is about. Positions are 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Lhs {
    /// Entry of `[X, [X, Y]]`.
    Z1(usize, usize),
    /// Entry of `[Y, [X, Y]]`.
    Z2(usize, usize),
    /// `Z1[1,4]·Z2[1,5] − Z1[1,5]·Z2[1,4]`.
    Det14,
    /// `Z1[2,5]·Z2[1,5] − Z1[1,5]·Z2[2,5]`.
    Det25,
    /// Entry of `[[X, Y], A]`.
    K(usize, usize),
    /// Entry of `[X, A]`.
    P(usize, usize),
    /// Entry of `[Y, A]`.
    Q(usize, usize),
}

impl Lhs {
    pub fn evaluate<R: Ring>(self, x: &Matrix<R>, y: &Matrix<R>, a: &Matrix<R>) -> R {
        let br = |p: &Matrix<R>, q: &Matrix<R>| p.commutator(q).expect("equal shapes");
        let at = |m: &Matrix<R>, i: usize, j: usize| m.get(i - 1, j - 1).clone();
        let x3 = || br(x, y);
        match self {
            Lhs::Z1(i, j) => at(&br(x, &x3()), i, j),
            Lhs::Z2(i, j) => at(&br(y, &x3()), i, j),
            Lhs::Det14 | Lhs::Det25 => {
                let (z1, z2) = (br(x, &x3()), br(y, &x3()));
                let (r, s) = if self == Lhs::Det14 {
                    ((1, 4), (1, 5))
                } else {
                    ((2, 5), (1, 5))
                };
                at(&z1, r.0, r.1) * &at(&z2, s.0, s.1) - at(&z1, s.0, s.1) * &at(&z2, r.0, r.1)
            }
            Lhs::K(i, j) => at(&br(&x3(), a), i, j),
            Lhs::P(i, j) => at(&br(x, a), i, j),
            Lhs::Q(i, j) => at(&br(y, a), i, j),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Group {
    /// Entries and determinants of the center generators `[X,[X,Y]]`, `[Y,[X,Y]]`.
    CenterDeterminants,
    /// Linear equations on `A` forced by commutation constraints.
    KernelEquations,
}

/// One checked identity: `lhs` (after `setup`) equals `rhs` (with `defs`).
#[derive(Clone, Copy, Debug)]
pub struct Identity {
    pub name: &'static str,
    pub group: Group,
    pub setup: Setup,
    pub lhs: Lhs,
    /// Named intermediates, evaluated in order; later ones may use earlier ones.
    pub defs: &'static [(&'static str, &'static str)],
    pub rhs: &'static str,
}

const A2: &str = "x12 (x23 y35 + x24 y45 - y23 x35 - y24 x45) + x13 (x34 y45 - y34 x45) \
                  - x35 (x12 y23 - y12 x23) - x45 (x12 y24 + x13 y34 - y12 x24 - y13 x34)";
const B2: &str = "y12 (x23 y35 + x24 y45 - y23 x35 - y24 x45) + y13 (x34 y45 - y34 x45) \
                  - y35 (x12 y23 - y12 x23) - y45 (x12 y24 + x13 y34 - y12 x24 - y13 x34)";
const A1: &str = "x12 (x23 y34 - y23 x34) - (x12 y23 - y12 x23) x34";
const B1: &str = "y12 (x23 y34 - y23 x34) - y34 (x12 y23 - y12 x23)";
const LAST_ROW_ZERO_DET: &str = "2 (y12 x23 - x12 y23)^2 (x34 y35 - x35 y34)";
const M_DEF: [(&str, &str); 1] = [(
    "m",
    "2c (x12 y24 - y12 x24) + c (x13 y34 - y13 x34) + (y23/y34)(x35 y34 - x34 y35)",
)];

const fn id(
    name: &'static str,
    group: Group,
    setup: Setup,
    lhs: Lhs,
    rhs: &'static str,
) -> Identity {
    Identity {
        name,
        group,
        setup,
        lhs,
        defs: &[],
        rhs,
    }
}

/// The full identity suite, in report order.
pub fn all_identities() -> Vec<Identity> {
    use Group::*;
    use Lhs::*;
    use Setup::*;
    vec![
        id("z1[1,4].generic", CenterDeterminants, Generic, Z1(1, 4), A1),
        id("z1[1,5].generic", CenterDeterminants, Generic, Z1(1, 5), A2),
        id(
            "z1[2,5].generic",
            CenterDeterminants,
            Generic,
            Z1(2, 5),
            "x23 (x34 y45 - y34 x45) - x45 (x23 y34 - y23 x34)",
        ),
        id("z2[1,4].generic", CenterDeterminants, Generic, Z2(1, 4), B1),
        id("z2[1,5].generic", CenterDeterminants, Generic, Z2(1, 5), B2),
        id(
            "z2[2,5].generic",
            CenterDeterminants,
            Generic,
            Z2(2, 5),
            "y23 (x34 y45 - y34 x45) - y45 (x23 y34 - y23 x34)",
        ),
        id(
            "z1[1,4].corner_scaled",
            CenterDeterminants,
            CornerScaled,
            Z1(1, 4),
            A1,
        ),
        id(
            "z2[1,4].corner_scaled",
            CenterDeterminants,
            CornerScaled,
            Z2(1, 4),
            B1,
        ),
        id(
            "z1[2,5].corner_scaled",
            CenterDeterminants,
            CornerScaled,
            Z1(2, 5),
            "c (x23 (x34 y12 - y34 x12) - x12 (x23 y34 - y23 x34))",
        ),
        id(
            "z2[2,5].corner_scaled",
            CenterDeterminants,
            CornerScaled,
            Z2(2, 5),
            "c (y23 (x34 y12 - y34 x12) - y12 (x23 y34 - y23 x34))",
        ),
        id(
            "z1[1,5].corner_scaled",
            CenterDeterminants,
            CornerScaled,
            Z1(1, 5),
            "x12 (x23 y35 - y23 x35 + c x24 y12 - c y24 x12) + c x13 (x34 y12 - y34 x12) \
             - x35 (x12 y23 - y12 x23) - c x12 (x12 y24 + x13 y34 - y12 x24 - y13 x34)",
        ),
        id(
            "z2[1,5].corner_scaled",
            CenterDeterminants,
            CornerScaled,
            Z2(1, 5),
            "y12 (x23 y35 - y23 x35 + c x24 y12 - c y24 x12) + c y13 (x34 y12 - y34 x12) \
             - y35 (x12 y23 - y12 x23) - c y12 (x12 y24 + x13 y34 - y12 x24 - y13 x34)",
        ),
        Identity {
            name: "det14.corner_aligned",
            group: CenterDeterminants,
            setup: CornerAligned,
            lhs: Det14,
            defs: &[(
                "a",
                "c y34 (y24 x12 + x13 y34 - x34 y13 - x24 y12) + y23 (x35 y34 - x34 y35)",
            )],
            rhs: "-2 y23 (y34 x12 - x34 y12)^2 a / y34^2",
        },
        id(
            "z1[2,5].last_row_zero",
            CenterDeterminants,
            LastRowZero,
            Z1(2, 5),
            "0",
        ),
        id(
            "z2[2,5].last_row_zero",
            CenterDeterminants,
            LastRowZero,
            Z2(2, 5),
            "0",
        ),
        id(
            "z1[1,5].last_row_zero",
            CenterDeterminants,
            LastRowZero,
            Z1(1, 5),
            "x12 (x23 y35 - y23 x35) - x35 (x12 y23 - y12 x23)",
        ),
        id(
            "z2[1,5].last_row_zero",
            CenterDeterminants,
            LastRowZero,
            Z2(1, 5),
            "y12 (x23 y35 - y23 x35) - y35 (x12 y23 - y12 x23)",
        ),
        id(
            "det14.last_row_zero",
            CenterDeterminants,
            LastRowZero,
            Det14,
            LAST_ROW_ZERO_DET,
        ),
        id(
            "det25.first_row_zero.published",
            CenterDeterminants,
            FirstRowZero,
            Det25,
            LAST_ROW_ZERO_DET,
        ),
        id(
            "det25.first_row_zero.mirrored",
            CenterDeterminants,
            FirstRowZero,
            Det25,
            "-2 (x13 y23 - x23 y13) (x34 y45 - x45 y34)^2",
        ),
        id(
            "xy_a[1,4].scaled",
            KernelEquations,
            CommutingScaled,
            K(1, 4),
            "a34 (y23/y34)(y34 x12 - x34 y12)",
        ),
        id(
            "xy_a[2,5].scaled",
            KernelEquations,
            CommutingScaled,
            K(2, 5),
            "a23 c (y34 x12 - x34 y12)",
        ),
        Identity {
            name: "xy_a[1,5].scaled.published",
            group: KernelEquations,
            setup: CommutingScaled,
            lhs: K(1, 5),
            defs: &M_DEF,
            rhs: "a35 (y23/y34)(y34 x12 - x34 y12) + a13 c (y34 x12 - x34 y12) - a12 m",
        },
        Identity {
            name: "xy_a[1,5].scaled.corrected",
            group: KernelEquations,
            setup: CommutingScaled,
            lhs: K(1, 5),
            defs: &M_DEF,
            rhs: "a35 (y23/y34)(y34 x12 - x34 y12) + a13 c (y34 x12 - x34 y12) + a12 m",
        },
        id(
            "y_a[1,3].scaled",
            KernelEquations,
            CommutingScaled,
            Q(1, 3),
            "y12 a23 - a12 y23",
        ),
        id(
            "x_a[1,3].zero",
            KernelEquations,
            CommutingZero,
            P(1, 3),
            "x12 a23 - a12 x23",
        ),
        id(
            "y_a[1,3].zero",
            KernelEquations,
            CommutingZero,
            Q(1, 3),
            "y12 a23 - a12 y23",
        ),
        id(
            "x_a[2,4].zero",
            KernelEquations,
            CommutingZero,
            P(2, 4),
            "x23 a34 - a23 x34",
        ),
        id(
            "y_a[2,4].zero",
            KernelEquations,
            CommutingZero,
            Q(2, 4),
            "y23 a34 - a23 y34",
        ),
        id(
            "x_a[2,5].zero",
            KernelEquations,
            CommutingZero,
            P(2, 5),
            "x23 a35 - a23 x35",
        ),
        id(
            "y_a[2,5].zero",
            KernelEquations,
            CommutingZero,
            Q(2, 5),
            "y23 a35 - a23 y35",
        ),
        id(
            "x_a[1,4].reduced_scaled",
            KernelEquations,
            ReducedScaled,
            P(1, 4),
            "a24 x12 - a13 x34",
        ),
        id(
            "y_a[1,4].reduced_scaled",
            KernelEquations,
            ReducedScaled,
            Q(1, 4),
            "a24 y12 - a13 y34",
        ),
        id(
            "x_a[1,5].reduced_scaled.published",
            KernelEquations,
            ReducedScaled,
            P(1, 5),
            "(a25 - c a14) x12 - a13 (c x13 y34 / y23 - x35)",
        ),
        id(
            "x_a[1,5].reduced_scaled.corrected",
            KernelEquations,
            ReducedScaled,
            P(1, 5),
            "(a25 - c a14) x12 - a13 (c x13 y34 / y23 + x35)",
        ),
        id(
            "y_a[1,5].reduced_scaled.published",
            KernelEquations,
            ReducedScaled,
            Q(1, 5),
            "(a25 - c a14) y12 - a13 (c y13 y34 / y23 - y35)",
        ),
        id(
            "y_a[1,5].reduced_scaled.corrected",
            KernelEquations,
            ReducedScaled,
            Q(1, 5),
            "(a25 - c a14) y12 - a13 (c y13 y34 / y23 + y35)",
        ),
        id(
            "x_a[1,4].reduced_zero",
            KernelEquations,
            ReducedZero,
            P(1, 4),
            "x12 a24 - a13 x34",
        ),
        id(
            "x_a[1,5].reduced_zero",
            KernelEquations,
            ReducedZero,
            P(1, 5),
            "x12 a25 - a13 x35",
        ),
        id(
            "y_a[1,4].reduced_zero",
            KernelEquations,
            ReducedZero,
            Q(1, 4),
            "y12 a24 - a13 y34",
        ),
        id(
            "y_a[1,5].reduced_zero",
            KernelEquations,
            ReducedZero,
            Q(1, 5),
            "y12 a25 - a13 y35",
        ),
    ]
}

impl Identity {
    /// Both sides in a scalar domain, from free variable values `base`.
    pub fn sides<R: Scalar>(&self, base: &dyn Fn(Var) -> R) -> Result<(R, R), ExprError> {
        let values = self.setup.specialize(base)?;
        let value = |v: Var| values[v.index()].clone();
        let x = generic_matrix('x', value);
        let y = generic_matrix('y', value);
        let a = generic_matrix('a', value);
        let lhs = self.lhs.evaluate(&x, &y, &a);
        let mut ev = ScalarEval::new(&value);
        for (name, body) in self.defs {
            ev.define(name, body)?;
        }
        Ok((lhs, ev.eval_str(self.rhs)?))
    }

    pub fn check(&self) -> Result<IdentityReport, ExprError> {
        let (lhs, rhs) = self.sides(&Polynomial::var)?;
        let clearing = lhs.clearing_factor().lcm(&rhs.clearing_factor());
        let diff = (lhs - &rhs).mul_monomial(&clearing);
        let status = if diff.is_zero() {
            Status::Match
        } else {
            Status::Mismatch
        };
        Ok(IdentityReport {
            identity: self.name.to_string(),
            status,
            clearing_factor: clearing.to_string(),
            difference: (!diff.is_zero()).then(|| diff.to_string()),
        })
    }

    /// Evaluates both sides over ℚ at `points` random nonzero points and
    /// returns whether they agree at all of them.
    pub fn numeric_check(&self, rng: &mut ChaCha8Rng, points: usize) -> Result<bool, ExprError> {
        let mut agree = true;
        for _ in 0..points {
            let values: Vec<Rational> = Var::all().map(|_| random_nonzero(rng)).collect();
            let (lhs, rhs) = self.sides(&|v: Var| values[v.index()].clone())?;
            agree &= lhs == rhs;
        }
        Ok(agree)
    }
}

fn random_nonzero(rng: &mut ChaCha8Rng) -> Rational {
    let mut n = 0;
    while n == 0 {
        n = rng.gen_range(-20i64..=20);
    }
    Rational::new(n, rng.gen_range(1i64..=7)).expect("positive denominator")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Match,
    Mismatch,
}

/// Outcome of an exact check. `difference` is `(lhs − rhs)·clearing_factor`,
/// a genuine polynomial, present only on mismatch.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityReport {
    pub identity: String,
    pub status: Status,
    pub clearing_factor: String,
    pub difference: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NumericCheck {
    pub identity: String,
    pub points: usize,
    /// Both sides agreed at every point.
    pub agrees: bool,
    /// The numeric verdict equals the exact verdict.
    pub consistent: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub seed: u64,
    pub random_checks: usize,
    pub identities: Vec<IdentityReport>,
    pub numeric: Vec<NumericCheck>,
}

impl SuiteReport {
    pub fn all_match(&self) -> bool {
        self.identities.iter().all(|r| r.status == Status::Match)
    }

    pub fn numerics_consistent(&self) -> bool {
        self.numeric.iter().all(|n| n.consistent)
    }
}

/// Runs the given identities exactly and numerically. Each identity gets its
/// own generator seeded from `seed` and its position, so results do not depend
/// on scheduling.
pub fn run_suite(
    identities: &[Identity],
    seed: u64,
    random_checks: usize,
) -> Result<SuiteReport, ExprError> {
    let results: Vec<(IdentityReport, NumericCheck)> = identities
        .par_iter()
        .enumerate()
        .map(|(k, ident)| {
            let report = ident.check()?;
            let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(k as u64));
            let agrees = ident.numeric_check(&mut rng, random_checks)?;
            let consistent = agrees == (report.status == Status::Match);
            let numeric = NumericCheck {
                identity: ident.name.to_string(),
                points: random_checks,
                agrees,
                consistent,
            };
            Ok((report, numeric))
        })
        .collect::<Result<_, ExprError>>()?;
    let (identities, numeric) = results.into_iter().unzip();
    Ok(SuiteReport {
        seed,
        random_checks,
        identities,
        numeric,
    })
}

/// Entry and determinant identities for the center generators.
pub fn verify_center_determinants(
    seed: u64,
    random_checks: usize,
) -> Result<SuiteReport, ExprError> {
    let ids: Vec<Identity> = all_identities()
        .into_iter()
        .filter(|i| i.group == Group::CenterDeterminants)
        .collect();
    run_suite(&ids, seed, random_checks)
}

/// Commutation equations on the fourth generator.
pub fn verify_kernel_equations(seed: u64, random_checks: usize) -> Result<SuiteReport, ExprError> {
    let ids: Vec<Identity> = all_identities()
        .into_iter()
        .filter(|i| i.group == Group::KernelEquations)
        .collect();
    run_suite(&ids, seed, random_checks)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn find(name: &str) -> Identity {
        all_identities()
            .into_iter()
            .find(|i| i.name == name)
            .unwrap()
    }

    #[test]
    fn names_are_unique() {
        let ids = all_identities();
        let mut names: Vec<_> = ids.iter().map(|i| i.name).collect();
        names.sort();
        names.dedup();
        assert_eq!(names.len(), ids.len());
    }

    #[test]
    fn aligned_determinant_needs_y34_squared() {
        let r = find("det14.corner_aligned").check().unwrap();
        assert_eq!(r.status, Status::Match);
        assert_eq!(r.clearing_factor, "y34^2");
    }

    #[test]
    fn last_row_zero_determinant() {
        let r = find("det14.last_row_zero").check().unwrap();
        assert_eq!(r.status, Status::Match, "{:?}", r.difference);
        assert_eq!(r.clearing_factor, "1");
    }

    #[test]
    fn flipped_sign_reports_difference() {
        let mut ident = find("det14.last_row_zero");
        ident.rhs = "-2 (y12 x23 - x12 y23)^2 (x34 y35 - x35 y34)";
        let r = ident.check().unwrap();
        assert_eq!(r.status, Status::Mismatch);
        assert!(r.difference.is_some());
    }

    #[test]
    fn unknown_names_are_errors() {
        let mut ident = find("det14.last_row_zero");
        ident.rhs = "q12";
        assert!(matches!(ident.check(), Err(ExprError::UnknownName(_))));
    }
}
