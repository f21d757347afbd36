//! Exact sparse Laurent polynomials in `u_1..u_n` (integer exponents of any
//! sign) and `y_1..y_n` (nonnegative exponents), with arbitrary-precision
//! integer coefficients.
//!
//! All cluster variables, F-polynomials and cluster-character values live in
//! this ring. Terms are kept in a canonical graded-lex order so that two equal
//! polynomials always have identical term maps and identical text renderings.

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

/// Exponent vector of a single monomial: `u` exponents may be negative,
/// `y` exponents are nonnegative by construction.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExpVector {
    pub u: Vec<i64>,
    pub y: Vec<u32>,
}

impl ExpVector {
    pub fn zero(rank: usize) -> Self {
        ExpVector {
            u: vec![0; rank],
            y: vec![0; rank],
        }
    }

    pub fn rank(&self) -> usize {
        self.u.len()
    }

    /// Total degree, counting `u` exponents with sign.
    pub fn grade(&self) -> i64 {
        self.u.iter().sum::<i64>() + self.y.iter().map(|&e| e as i64).sum::<i64>()
    }

    fn checked_add(&self, other: &ExpVector) -> ExpVector {
        ExpVector {
            u: self
                .u
                .iter()
                .zip(&other.u)
                .map(|(a, b)| a + b)
                .collect(),
            y: self
                .y
                .iter()
                .zip(&other.y)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

/// Graded-lexicographic order on the concatenated `(u, y)` exponents.
impl Ord for ExpVector {
    fn cmp(&self, other: &Self) -> Ordering {
        debug_assert_eq!(self.rank(), other.rank());
        self.grade()
            .cmp(&other.grade())
            .then_with(|| self.u.cmp(&other.u))
            .then_with(|| self.y.cmp(&other.y))
    }
}

impl PartialOrd for ExpVector {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A sparse Laurent polynomial of fixed rank. No stored coefficient is zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentPoly {
    rank: usize,
    terms: BTreeMap<ExpVector, BigInt>,
}

impl LaurentPoly {
    pub fn zero(rank: usize) -> Self {
        LaurentPoly {
            rank,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(rank: usize) -> Self {
        Self::constant(rank, 1)
    }

    pub fn constant(rank: usize, c: i64) -> Self {
        let mut p = Self::zero(rank);
        if c != 0 {
            p.terms.insert(ExpVector::zero(rank), BigInt::from(c));
        }
        p
    }

    /// The variable `u_i` (1-based).
    pub fn var_u(rank: usize, i: usize) -> Self {
        assert!(i >= 1 && i <= rank, "u index out of range");
        let mut e = ExpVector::zero(rank);
        e.u[i - 1] = 1;
        Self::from_term(e, BigInt::one())
    }

    /// The variable `y_j` (1-based).
    pub fn var_y(rank: usize, j: usize) -> Self {
        assert!(j >= 1 && j <= rank, "y index out of range");
        let mut e = ExpVector::zero(rank);
        e.y[j - 1] = 1;
        Self::from_term(e, BigInt::one())
    }

    /// A single monomial `c * u^{u_exps} * y^{y_exps}`.
    pub fn monomial(u_exps: Vec<i64>, y_exps: Vec<u32>, coeff: BigInt) -> Self {
        assert_eq!(u_exps.len(), y_exps.len());
        let rank = u_exps.len();
        let mut p = Self::zero(rank);
        if !coeff.is_zero() {
            p.terms.insert(
                ExpVector {
                    u: u_exps,
                    y: y_exps,
                },
                coeff,
            );
        }
        p
    }

    /// The monomial `u^g` for an integer vector `g`.
    pub fn u_monomial(g: &[i64]) -> Self {
        Self::monomial(g.to_vec(), vec![0; g.len()], BigInt::one())
    }

    /// The monomial `y^e` for a nonnegative vector `e`.
    pub fn y_monomial(e: &[u32]) -> Self {
        Self::monomial(vec![0; e.len()], e.to_vec(), BigInt::one())
    }

    pub fn from_term(e: ExpVector, c: BigInt) -> Self {
        let rank = e.rank();
        let mut p = Self::zero(rank);
        if !c.is_zero() {
            p.terms.insert(e, c);
        }
        p
    }

    pub fn from_terms(rank: usize, it: impl IntoIterator<Item = (ExpVector, BigInt)>) -> Self {
        let mut p = Self::zero(rank);
        for (e, c) in it {
            assert_eq!(e.rank(), rank, "exponent vector rank mismatch");
            p.add_term(e, c);
        }
        p
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .next()
                .map(|(e, c)| e == &ExpVector::zero(self.rank) && c.is_one())
                .unwrap_or(false)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending canonical (graded-lex) order.
    pub fn terms(&self) -> impl Iterator<Item = (&ExpVector, &BigInt)> {
        self.terms.iter()
    }

    /// The canonically largest term, if any.
    pub fn leading_term(&self) -> Option<(&ExpVector, &BigInt)> {
        self.terms.iter().next_back()
    }

    pub fn coeff(&self, e: &ExpVector) -> BigInt {
        self.terms.get(e).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Coefficient of the constant monomial.
    pub fn constant_term(&self) -> BigInt {
        self.coeff(&ExpVector::zero(self.rank))
    }

    /// True if the polynomial is a single monomial with coefficient ±1.
    pub fn is_unit_monomial(&self) -> bool {
        self.terms.len() == 1 && self.terms.values().next().map(|c| c.magnitude().is_one()).unwrap_or(false)
    }

    /// True if every term has all `u` exponents zero.
    pub fn is_y_only(&self) -> bool {
        self.terms.keys().all(|e| e.u.iter().all(|&x| x == 0))
    }

    /// True if every coefficient is positive.
    pub fn has_positive_coeffs(&self) -> bool {
        self.terms.values().all(|c| c.is_positive())
    }

    fn add_term(&mut self, e: ExpVector, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(e) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check_rank(&self, other: &LaurentPoly) -> Result<()> {
        if self.rank != other.rank {
            return Err(Error::RankMismatch(self.rank, other.rank));
        }
        Ok(())
    }

    /// Coefficient-wise sum.
    pub fn add(&self, other: &LaurentPoly) -> Result<LaurentPoly> {
        self.check_rank(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &LaurentPoly) -> Result<LaurentPoly> {
        self.check_rank(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn neg(&self) -> LaurentPoly {
        LaurentPoly {
            rank: self.rank,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    /// Distributive product; exponent vectors add componentwise.
    pub fn mul(&self, other: &LaurentPoly) -> Result<LaurentPoly> {
        self.check_rank(other)?;
        let mut out = Self::zero(self.rank);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                out.add_term(e1.checked_add(e2), c1 * c2);
            }
        }
        Ok(out)
    }

    pub fn pow(&self, k: u32) -> LaurentPoly {
        let mut out = Self::one(self.rank);
        for _ in 0..k {
            out = out.mul(self).expect("same rank");
        }
        out
    }

    /// Ring-homomorphism evaluation at the given images. Every `u_i` and
    /// `y_j` of `self` must have an image; all images share one rank, which
    /// becomes the rank of the result. Negative `u` exponents require the
    /// corresponding image to be a unit monomial.
    pub fn substitute(
        &self,
        u_images: &[LaurentPoly],
        y_images: &[LaurentPoly],
    ) -> Result<LaurentPoly> {
        if u_images.len() != self.rank || y_images.len() != self.rank {
            return Err(Error::RankMismatch(self.rank, u_images.len()));
        }
        let out_rank = u_images
            .first()
            .or_else(|| y_images.first())
            .map(|p| p.rank)
            .unwrap_or(0);
        for img in u_images.iter().chain(y_images) {
            if img.rank != out_rank {
                return Err(Error::RankMismatch(out_rank, img.rank));
            }
        }
        let mut out = Self::zero(out_rank);
        for (e, c) in &self.terms {
            let mut term = Self::constant(out_rank, 1);
            term = term.mul(&Self::from_term(ExpVector::zero(out_rank), c.clone()))?;
            for (i, &exp) in e.u.iter().enumerate() {
                if exp == 0 {
                    continue;
                }
                if exp > 0 {
                    term = term.mul(&u_images[i].pow(exp as u32))?;
                } else {
                    let inv = u_images[i]
                        .invert_unit()
                        .ok_or(Error::NonUnitImage(i + 1))?;
                    term = term.mul(&inv.pow((-exp) as u32))?;
                }
            }
            for (j, &exp) in e.y.iter().enumerate() {
                if exp > 0 {
                    term = term.mul(&y_images[j].pow(exp))?;
                }
            }
            out = out.add(&term)?;
        }
        Ok(out)
    }

    /// Inverse of a unit monomial (single term, coefficient ±1, y-free).
    fn invert_unit(&self) -> Option<LaurentPoly> {
        if self.terms.len() != 1 {
            return None;
        }
        let (e, c) = self.terms.iter().next().unwrap();
        if !c.magnitude().is_one() || e.y.iter().any(|&x| x != 0) {
            return None;
        }
        Some(Self::monomial(
            e.u.iter().map(|&x| -x).collect(),
            vec![0; self.rank],
            c.clone(),
        ))
    }

    /// Specialize all `u_i = 1`, keeping the `y` variables.
    pub fn specialize_u_one(&self) -> LaurentPoly {
        let mut out = Self::zero(self.rank);
        for (e, c) in &self.terms {
            out.add_term(
                ExpVector {
                    u: vec![0; self.rank],
                    y: e.y.clone(),
                },
                c.clone(),
            );
        }
        out
    }

    /// Multidegree under `deg(u_i) = e_i`, `deg(y_j) = -b_j` where `b_j` is
    /// the j-th column of `top`. Returns `None` if not homogeneous.
    pub fn multidegree(&self, top: &[Vec<i64>]) -> Option<Vec<i64>> {
        let n = self.rank;
        let mut deg: Option<Vec<i64>> = None;
        for (e, _) in &self.terms {
            let mut d: Vec<i64> = e.u.clone();
            for (j, &yj) in e.y.iter().enumerate() {
                if yj != 0 {
                    for i in 0..n {
                        d[i] -= top[i][j] * yj as i64;
                    }
                }
            }
            match &deg {
                None => deg = Some(d),
                Some(prev) => {
                    if *prev != d {
                        return None;
                    }
                }
            }
        }
        deg
    }

    /// Exact division: returns `q` with `q * divisor == self`, or an error if
    /// no such Laurent polynomial exists. Used by seed mutation, where the
    /// Laurent phenomenon guarantees success.
    pub fn div_exact(&self, divisor: &LaurentPoly) -> Result<LaurentPoly> {
        self.check_rank(divisor)?;
        if divisor.is_zero() {
            return Err(Error::DivisionFailed);
        }
        let mut rem = self.clone();
        let mut quot = Self::zero(self.rank);
        let (dlead_e, dlead_c) = {
            let (e, c) = divisor.leading_term().unwrap();
            (e.clone(), c.clone())
        };
        while !rem.is_zero() {
            let (rlead_e, rlead_c) = {
                let (e, c) = rem.leading_term().unwrap();
                (e.clone(), c.clone())
            };
            // y exponents cannot go negative; u exponents may.
            let mut qe = ExpVector::zero(self.rank);
            let mut ok = true;
            for i in 0..self.rank {
                qe.u[i] = rlead_e.u[i] - dlead_e.u[i];
            }
            for j in 0..self.rank {
                if rlead_e.y[j] < dlead_e.y[j] {
                    ok = false;
                    break;
                }
                qe.y[j] = rlead_e.y[j] - dlead_e.y[j];
            }
            if !ok || (&rlead_c % &dlead_c) != BigInt::zero() {
                return Err(Error::DivisionFailed);
            }
            let qc = &rlead_c / &dlead_c;
            let qterm = Self::from_term(qe, qc);
            rem = rem.sub(&qterm.mul(divisor)?)?;
            quot = quot.add(&qterm)?;
        }
        Ok(quot)
    }

    /// Deterministic text rendering in descending canonical term order,
    /// constants last. Round-trips through [`parse_poly`].
    pub fn canonical_text(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (idx, (e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let mag = c.magnitude();
            if idx == 0 {
                if neg {
                    out.push_str("-");
                }
            } else if neg {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let mut factors: Vec<String> = Vec::new();
            if !mag.is_one() {
                factors.push(mag.to_string());
            }
            for (i, &exp) in e.u.iter().enumerate() {
                if exp == 1 {
                    factors.push(format!("u{}", i + 1));
                } else if exp != 0 {
                    factors.push(format!("u{}^{}", i + 1, exp));
                }
            }
            for (j, &exp) in e.y.iter().enumerate() {
                if exp == 1 {
                    factors.push(format!("y{}", j + 1));
                } else if exp != 0 {
                    factors.push(format!("y{}^{}", j + 1, exp));
                }
            }
            if factors.is_empty() {
                factors.push("1".to_string());
            }
            out.push_str(&factors.join("*"));
        }
        out
    }

    /// JSON rendering: array of `{"coeff", "u", "y"}` in descending canonical
    /// order. Coefficients that fit in an `i64` are emitted as numbers,
    /// larger ones as decimal strings.
    pub fn to_json(&self) -> serde_json::Value {
        let arr: Vec<serde_json::Value> = self
            .terms
            .iter()
            .rev()
            .map(|(e, c)| {
                let coeff = match i64::try_from(c.clone()) {
                    Ok(v) => serde_json::json!(v),
                    Err(_) => serde_json::json!(c.to_string()),
                };
                serde_json::json!({ "coeff": coeff, "u": e.u, "y": e.y })
            })
            .collect();
        serde_json::Value::Array(arr)
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.canonical_text())
    }
}

/// Parse the output of [`LaurentPoly::canonical_text`] (and mild variations:
/// arbitrary whitespace, `+`/`-` separated terms, factors joined by `*`).
pub fn parse_poly(text: &str, rank: usize) -> Result<LaurentPoly> {
    let text = text.trim();
    if text.is_empty() {
        return Err(Error::Parse("empty polynomial".into()));
    }
    if text == "0" {
        return Ok(LaurentPoly::zero(rank));
    }
    let mut out = LaurentPoly::zero(rank);
    // Split into signed terms.
    let mut terms: Vec<(bool, String)> = Vec::new();
    let mut cur = String::new();
    let mut sign_neg = false;
    let mut chars = text.chars().peekable();
    // leading sign
    if let Some(&c) = chars.peek() {
        if c == '-' {
            sign_neg = true;
            chars.next();
        } else if c == '+' {
            chars.next();
        }
    }
    while let Some(c) = chars.next() {
        let after_caret = cur.trim_end().ends_with('^');
        match c {
            '+' | '-' if !cur.trim().is_empty() && !after_caret => {
                terms.push((sign_neg, cur.trim().to_string()));
                cur = String::new();
                sign_neg = c == '-';
            }
            _ => cur.push(c),
        }
    }
    if !cur.trim().is_empty() {
        terms.push((sign_neg, cur.trim().to_string()));
    }
    for (neg, term) in terms {
        let mut coeff = BigInt::one();
        let mut e = ExpVector::zero(rank);
        for factor in term.split('*') {
            let factor = factor.trim();
            if factor.is_empty() {
                return Err(Error::Parse(format!("empty factor in term '{term}'")));
            }
            if factor.chars().all(|c| c.is_ascii_digit()) {
                coeff *= factor
                    .parse::<BigInt>()
                    .map_err(|_| Error::Parse(format!("bad integer '{factor}'")))?;
                continue;
            }
            let (var, rest) = factor.split_at(1);
            let (idx_str, exp) = match rest.find('^') {
                Some(pos) => {
                    let (i, p) = rest.split_at(pos);
                    (
                        i,
                        p[1..]
                            .parse::<i64>()
                            .map_err(|_| Error::Parse(format!("bad exponent in '{factor}'")))?,
                    )
                }
                None => (rest, 1),
            };
            let idx: usize = idx_str
                .parse()
                .map_err(|_| Error::Parse(format!("bad variable index in '{factor}'")))?;
            if idx < 1 || idx > rank {
                return Err(Error::Parse(format!(
                    "variable index {idx} out of range for rank {rank}"
                )));
            }
            match var {
                "u" => e.u[idx - 1] += exp,
                "y" => {
                    if exp < 0 {
                        return Err(Error::Parse("negative y exponent".into()));
                    }
                    e.y[idx - 1] += exp as u32;
                }
                _ => return Err(Error::Parse(format!("unknown variable '{var}'"))),
            }
        }
        out.add_term(e, if neg { -coeff } else { coeff });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn y(rank: usize, j: usize) -> LaurentPoly {
        LaurentPoly::var_y(rank, j)
    }
    fn u(rank: usize, i: usize) -> LaurentPoly {
        LaurentPoly::var_u(rank, i)
    }
    fn p(text: &str, rank: usize) -> LaurentPoly {
        parse_poly(text, rank).unwrap()
    }

    #[test]
    fn add_inverse_gives_zero() {
        let a = u(3, 1);
        let r = a.add(&a.neg()).unwrap();
        assert!(r.is_zero());
        assert_eq!(r.canonical_text(), "0");
    }

    #[test]
    fn add_disjoint_supports() {
        let a = y(3, 1).add(&LaurentPoly::one(3)).unwrap();
        let b = y(3, 3).add(&LaurentPoly::one(3)).unwrap();
        assert_eq!(a.add(&b).unwrap().canonical_text(), "y1 + y3 + 2");
    }

    #[test]
    fn add_restriction_f_polys() {
        // F_{gamma1} + F_{gamma2} for the two restriction diagonals of the
        // octagon example.
        let f1 = p("y1*y2*y3 + y1*y3 + y1 + y3 + 1", 3);
        let f2 = p("y3 + 1", 3);
        assert_eq!(
            f1.add(&f2).unwrap().canonical_text(),
            "y1*y2*y3 + y1*y3 + y1 + 2*y3 + 2"
        );
    }

    #[test]
    fn mul_identity_and_inverse_monomials() {
        let f = p("y3 + 1", 3);
        assert_eq!(f.mul(&LaurentPoly::one(3)).unwrap(), f);
        let ui = LaurentPoly::monomial(vec![-1, 0, 0], vec![0, 0, 0], 1.into());
        assert!(ui.mul(&u(3, 1)).unwrap().is_one());
    }

    #[test]
    fn mul_expands_f_product() {
        let f1 = p("y1*y2*y3 + y1*y3 + y1 + y3 + 1", 3);
        let f2 = p("y3 + 1", 3);
        let prod = f1.mul(&f2).unwrap();
        let expected = p(
            "y1*y2*y3^2 + y1*y2*y3 + y1*y3^2 + 2*y1*y3 + y3^2 + y1 + 2*y3 + 1",
            3,
        );
        assert_eq!(prod, expected);
        // subtracting y1*y2*y3 reproduces the paper's F_{ab}
        let fab = prod.sub(&p("y1*y2*y3", 3)).unwrap();
        assert_eq!(
            fab.canonical_text(),
            "y1*y2*y3^2 + y1*y3^2 + 2*y1*y3 + y3^2 + y1 + 2*y3 + 1"
        );
    }

    #[test]
    fn substitute_specializes_u() {
        let f = u(3, 1).mul(&u(3, 2)).unwrap().mul(&y(3, 2)).unwrap();
        let ones: Vec<_> = (0..3).map(|_| LaurentPoly::one(3)).collect();
        let ys: Vec<_> = (1..=3).map(|j| y(3, j)).collect();
        assert_eq!(f.substitute(&ones, &ys).unwrap(), y(3, 2));
    }

    #[test]
    fn substitute_yhat_column() {
        // yhat_1 = y1*u2 for B(T-bar) with column 1 = (0,1,0)^T.
        let f = y(3, 1);
        let us: Vec<_> = (1..=3).map(|i| u(3, i)).collect();
        let mut ys: Vec<_> = (1..=3).map(|j| y(3, j)).collect();
        ys[0] = y(3, 1).mul(&u(3, 2)).unwrap();
        assert_eq!(
            f.substitute(&us, &ys).unwrap().canonical_text(),
            "u2*y1"
        );
    }

    #[test]
    fn substitute_negative_needs_unit() {
        let f = LaurentPoly::monomial(vec![-1], vec![0], 1.into());
        let img = p("y1 + 1", 1);
        let ys = vec![y(1, 1)];
        assert!(f.substitute(&[img], &ys).is_err());
    }

    #[test]
    fn canonical_text_examples() {
        assert_eq!(LaurentPoly::zero(3).canonical_text(), "0");
        assert_eq!(
            y(3, 3).add(&LaurentPoly::one(3)).unwrap().canonical_text(),
            "y3 + 1"
        );
        let f = p("y1*y2*y3^2 + y1*y3^2 + 2*y1*y3 + y3^2 + y1 + 2*y3 + 1", 3);
        assert_eq!(
            f.canonical_text(),
            "y1*y2*y3^2 + y1*y3^2 + 2*y1*y3 + y3^2 + y1 + 2*y3 + 1"
        );
    }

    #[test]
    fn text_round_trip_negative_exponents() {
        let x = p("u1^-1*u3^-1*y1*y2*y3 + u2^-1", 3);
        assert_eq!(parse_poly(&x.canonical_text(), 3).unwrap(), x);
    }

    #[test]
    fn div_exact_small() {
        let f1 = p("y1*y2*y3 + y1*y3 + y1 + y3 + 1", 3);
        let f2 = p("y3 + 1", 3);
        let prod = f1.mul(&f2).unwrap();
        assert_eq!(prod.div_exact(&f2).unwrap(), f1);
        assert_eq!(prod.div_exact(&f1).unwrap(), f2);
        assert!(p("y1 + 1", 3).div_exact(&f2).is_err());
    }

    #[test]
    fn multidegree_reads_grading() {
        // B = [[0,-1,0],[1,0,-1],[0,2,0]] (type B octagon seed); u1 has
        // degree e1, y1 has degree -(0,1,0).
        let top = vec![vec![0, -1, 0], vec![1, 0, -1], vec![0, 2, 0]];
        let f = u(3, 1);
        assert_eq!(f.multidegree(&top).unwrap(), vec![1, 0, 0]);
        let g = y(3, 1).mul(&u(3, 2)).unwrap();
        assert_eq!(g.multidegree(&top).unwrap(), vec![0, 0, 0]);
        let inhom = y(3, 1).add(&u(3, 1)).unwrap();
        assert!(inhom.multidegree(&top).is_none());
    }

    #[test]
    fn json_shape() {
        let f = p("y2 + 1", 2).mul(&u(2, 1)).unwrap();
        let v = f.to_json();
        let arr = v.as_array().unwrap();
        assert_eq!(arr.len(), 2);
        assert_eq!(arr[0]["coeff"], 1);
        assert_eq!(arr[0]["u"][0], 1);
    }
}
