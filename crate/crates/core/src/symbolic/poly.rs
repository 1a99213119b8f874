use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::exactnum::{Field, Rational, Ring};

const ENTRY_INDICES: [(usize, usize); 10] = [
    (1, 2),
    (1, 3),
    (1, 4),
    (1, 5),
    (2, 3),
    (2, 4),
    (2, 5),
    (3, 4),
    (3, 5),
    (4, 5),
];
const PREFIXES: [char; 3] = ['x', 'y', 'a'];

/// Number of variables in the fixed universe.
pub const NVARS: usize = 32;

/// One of the fixed indeterminates: the strictly-upper entries `x_ij`, `y_ij`,
/// `a_ij` of three generic 5×5 matrices, plus `c` and `eps`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Var(u8);

impl Var {
    pub const C: Var = Var(30);
    pub const EPS: Var = Var(31);

    /// Entry variable for `prefix ∈ {x, y, a}` at 1-based position `(i, j)`, `i < j ≤ 5`.
    pub fn entry(prefix: char, i: usize, j: usize) -> Option<Var> {
        let p = PREFIXES.iter().position(|&q| q == prefix)?;
        let k = ENTRY_INDICES.iter().position(|&e| e == (i, j))?;
        Some(Var((p * 10 + k) as u8))
    }

    pub fn from_name(name: &str) -> Option<Var> {
        match name {
            "c" => return Some(Var::C),
            "eps" => return Some(Var::EPS),
            _ => {}
        }
        let mut chars = name.chars();
        let prefix = chars.next()?;
        let digits: Vec<usize> = chars
            .map(|ch| ch.to_digit(10).map(|d| d as usize))
            .collect::<Option<_>>()?;
        match digits[..] {
            [i, j] => Var::entry(prefix, i, j),
            _ => None,
        }
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub fn all() -> impl Iterator<Item = Var> {
        (0..NVARS as u8).map(Var)
    }

    pub fn name(self) -> String {
        match self {
            Var::C => "c".into(),
            Var::EPS => "eps".into(),
            Var(k) => {
                let (i, j) = ENTRY_INDICES[k as usize % 10];
                format!("{}{}{}", PREFIXES[k as usize / 10], i, j)
            }
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

/// Exponent vector over the variable universe.
///
/// Exponents may be negative so that monomial denominators such as `1/y34`
/// can be carried exactly; [`Polynomial::clearing_factor`] recovers the
/// monomial that turns an expression back into an honest polynomial.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Monomial([i16; NVARS]);

impl Monomial {
    pub fn one() -> Self {
        Monomial([0; NVARS])
    }

    pub fn var(v: Var) -> Self {
        let mut e = [0; NVARS];
        e[v.index()] = 1;
        Monomial(e)
    }

    pub fn exponent(&self, v: Var) -> i16 {
        self.0[v.index()]
    }

    pub fn degree(&self) -> i32 {
        self.0.iter().map(|&e| i32::from(e)).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Self) -> Self {
        Monomial(std::array::from_fn(|k| self.0[k] + other.0[k]))
    }

    pub fn inv(&self) -> Self {
        Monomial(std::array::from_fn(|k| -self.0[k]))
    }

    pub fn is_polynomial(&self) -> bool {
        self.0.iter().all(|&e| e >= 0)
    }

    /// Componentwise maximum.
    pub fn lcm(&self, other: &Self) -> Self {
        Monomial(std::array::from_fn(|k| self.0[k].max(other.0[k])))
    }

    /// Denominator part: `x^max(0, -e)` for each exponent `e`.
    pub fn denominator(&self) -> Self {
        Monomial(std::array::from_fn(|k| (-self.0[k]).max(0)))
    }
}

/// Graded lexicographic order with `x12 > x13 > … > a45 > c > eps`.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for v in Var::all() {
            let e = self.exponent(v);
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Sparse polynomial over ℚ in the fixed variable universe, allowing monomial
/// denominators. No zero coefficient is ever stored, so equality is structural.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn constant(c: Rational) -> Self {
        Self::term(c, Monomial::one())
    }

    pub fn var(v: Var) -> Self {
        Self::term(Rational::one(), Monomial::var(v))
    }

    pub fn term(c: Rational, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial { terms }
    }

    /// Terms in descending graded-lex order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter().rev()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_polynomial(&self) -> bool {
        self.terms.keys().all(Monomial::is_polynomial)
    }

    /// Least monomial `m` such that `m · self` has no negative exponents.
    pub fn clearing_factor(&self) -> Monomial {
        self.terms
            .keys()
            .fold(Monomial::one(), |acc, m| acc.lcm(&m.denominator()))
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Self {
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(k, c)| (k.mul(m), c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Polynomial::default();
        }
        Polynomial {
            terms: self.terms.iter().map(|(k, v)| (*k, v * c)).collect(),
        }
    }

    /// Exact quotient by a single-term divisor; `None` otherwise.
    pub fn div_exact(&self, rhs: &Self) -> Option<Self> {
        if rhs.terms.len() != 1 {
            return None;
        }
        let (m, c) = rhs.terms.iter().next()?;
        Some(self.mul_monomial(&m.inv()).scale(&c.recip()?))
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Polynomial::one();
        for _ in 0..e {
            acc = acc * self;
        }
        acc
    }

    /// Evaluates at a point given as one value per variable.
    pub fn eval<F: Field>(&self, point: impl Fn(Var) -> F) -> Option<F> {
        let values: Vec<F> = Var::all().map(point).collect();
        let mut total = F::zero();
        for (m, c) in &self.terms {
            let mut t = F::from_rational(c);
            for v in Var::all() {
                let e = m.exponent(v);
                let base = if e < 0 {
                    values[v.index()].inv()?
                } else {
                    values[v.index()].clone()
                };
                for _ in 0..e.unsigned_abs() {
                    t = t * &base;
                }
            }
            total = total + &t;
        }
        Some(total)
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(m).or_insert_with(Rational::zero);
        *slot = slot.clone() + &c;
        if slot.is_zero() {
            self.terms.remove(&m);
        }
    }
}

impl From<Var> for Polynomial {
    fn from(v: Var) -> Self {
        Polynomial::var(v)
    }
}

impl From<i64> for Polynomial {
    fn from(n: i64) -> Self {
        Polynomial::constant(Rational::from(n))
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms().enumerate() {
            let (neg, mag) = if c.is_negative() {
                (true, c.abs())
            } else {
                (false, c.clone())
            };
            match (k, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if m.is_one() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{mag}*{m}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl<'a> Add<&'a Polynomial> for Polynomial {
    type Output = Polynomial;
    fn add(mut self, rhs: &'a Polynomial) -> Polynomial {
        for (m, c) in &rhs.terms {
            self.add_term(*m, c.clone());
        }
        self
    }
}

impl Add for Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: Polynomial) -> Polynomial {
        self + &rhs
    }
}

impl<'a> Sub<&'a Polynomial> for Polynomial {
    type Output = Polynomial;
    fn sub(mut self, rhs: &'a Polynomial) -> Polynomial {
        for (m, c) in &rhs.terms {
            self.add_term(*m, -c);
        }
        self
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: Polynomial) -> Polynomial {
        self - &rhs
    }
}

impl<'a> Mul<&'a Polynomial> for Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &'a Polynomial) -> Polynomial {
        let mut out = Polynomial::default();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: Polynomial) -> Polynomial {
        self * &rhs
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            terms: self.terms.into_iter().map(|(m, c)| (m, -c)).collect(),
        }
    }
}

impl Ring for Polynomial {
    fn zero() -> Self {
        Polynomial::default()
    }
    fn one() -> Self {
        Polynomial::constant(Rational::one())
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn from_i64(n: i64) -> Self {
        Polynomial::from(n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(name: &str) -> Polynomial {
        Polynomial::var(Var::from_name(name).unwrap())
    }

    #[test]
    fn variable_names_round_trip() {
        for var in Var::all() {
            assert_eq!(Var::from_name(&var.name()), Some(var));
        }
        assert_eq!(Var::from_name("x21"), None);
        assert_eq!(Var::from_name("z12"), None);
        assert_eq!(Var::from_name("x123"), None);
    }

    #[test]
    fn binomial_square() {
        let (x, y) = (v("x12"), v("y12"));
        let lhs = (x.clone() + &y).pow(2);
        let rhs = x.clone() * &x + &(Polynomial::from(2) * &x * &y) + &(y.clone() * &y);
        assert!((lhs - rhs).is_zero());
        assert!((x * &Polynomial::zero()).is_zero());
    }

    #[test]
    fn display_is_graded_lex() {
        let p = v("y12") + &v("x12").pow(2) - &Polynomial::from(3) + &(v("x13") * &v("x12"));
        assert_eq!(p.to_string(), "x12^2 + x12*x13 + y12 - 3");
    }

    #[test]
    fn monomial_denominators_clear() {
        let p = v("x34").div_exact(&v("y34")).unwrap() * &v("y23")
            + &v("x12").div_exact(&v("y34").pow(2)).unwrap();
        assert!(!p.is_polynomial());
        let m = p.clearing_factor();
        assert_eq!(m.to_string(), "y34^2");
        assert!(p.mul_monomial(&m).is_polynomial());
        assert!(v("x12").div_exact(&(v("x12") + &v("x13"))).is_none());
    }

    #[test]
    fn evaluation() {
        let p = v("x12") * &v("c") - &v("eps").div_exact(&v("x12")).unwrap();
        let val = p
            .eval(|var| Rational::from(var.index() as i64 + 1))
            .unwrap();
        // x12 = 1, c = 31, eps = 32
        assert_eq!(val, Rational::from(31 - 32));
    }
}
