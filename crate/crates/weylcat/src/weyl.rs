//! The Weyl algebra A_n in normal form: sums of monomials t^a d^b with exact
//! rational coefficients, all t's to the left of all d's. The adopted
//! commutation relation is the calculus convention [d_i, t_j] = delta_ij,
//! i.e. d t = t d + 1, so t d acts on t^k as multiplication by k.
//!
//! Exponents are stored as signed integers so that the localization layer can
//! reuse the same arithmetic with negative powers in chosen directions;
//! ordinary elements keep all exponents nonnegative.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::rat::{falling_i, rat, rat_from_str, rat_to_string, Rat};

/// Exponent pair (t-exponents, d-exponents) of a normal-form monomial.
pub type ExpPair = (Vec<i64>, Vec<i64>);

#[derive(Clone, PartialEq, Eq)]
pub struct WeylElement {
    n: usize,
    terms: BTreeMap<ExpPair, Rat>,
}

/// Z^n-degree of a homogeneous element: a - b for the monomial t^a d^b.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Grading(pub Vec<i64>);

impl Grading {
    /// Lies in the even sublattice: coordinate sum in 2Z.
    pub fn is_even(&self) -> bool {
        self.0.iter().sum::<i64>().rem_euclid(2) == 0
    }
}

impl std::fmt::Debug for WeylElement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.to_display())
    }
}

impl WeylElement {
    pub fn zero(n: usize) -> Self {
        WeylElement {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(n: usize) -> Self {
        Self::monomial(n, &vec![0; n], &vec![0; n], rat(1))
    }

    pub fn scalar(n: usize, c: Rat) -> Self {
        Self::monomial(n, &vec![0; n], &vec![0; n], c)
    }

    /// t_i (1-based index)
    pub fn t(n: usize, i: usize) -> Self {
        assert!((1..=n).contains(&i));
        let mut a = vec![0; n];
        a[i - 1] = 1;
        Self::monomial(n, &a, &vec![0; n], rat(1))
    }

    /// d_i = ∂_i (1-based index)
    pub fn d(n: usize, i: usize) -> Self {
        assert!((1..=n).contains(&i));
        let mut b = vec![0; n];
        b[i - 1] = 1;
        Self::monomial(n, &vec![0; n], &b, rat(1))
    }

    pub fn monomial(n: usize, a: &[i64], b: &[i64], c: Rat) -> Self {
        assert_eq!(a.len(), n);
        assert_eq!(b.len(), n);
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((a.to_vec(), b.to_vec()), c);
        }
        WeylElement { n, terms }
    }

    pub fn vars(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ExpPair, &Rat)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// All exponents nonnegative (a genuine polynomial differential operator).
    pub fn is_polynomial(&self) -> bool {
        self.terms
            .keys()
            .all(|(a, b)| a.iter().all(|&x| x >= 0) && b.iter().all(|&x| x >= 0))
    }

    fn add_term(&mut self, key: ExpPair, c: Rat) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(key) {
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

    pub fn add(&self, other: &WeylElement) -> Result<WeylElement> {
        self.check_vars(other)?;
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(k.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &WeylElement) -> Result<WeylElement> {
        self.add(&other.scale(&-rat(1)))
    }

    pub fn scale(&self, s: &Rat) -> WeylElement {
        if s.is_zero() {
            return WeylElement::zero(self.n);
        }
        WeylElement {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(k, c)| (k.clone(), c * s))
                .collect(),
        }
    }

    fn check_vars(&self, other: &WeylElement) -> Result<()> {
        if self.n != other.n {
            return Err(Error::VarMismatch(self.n, other.n));
        }
        Ok(())
    }

    /// Normal-order product. Reordering uses d^b t^c = sum_k C(b,k) (c)_k
    /// t^(c-k) d^(b-k) per coordinate, which also covers negative exponents
    /// as long as at most one of b, c is negative in each coordinate.
    pub fn multiply(&self, other: &WeylElement) -> Result<WeylElement> {
        self.check_vars(other)?;
        let n = self.n;
        let mut out = WeylElement::zero(n);
        for ((a1, b1), c1) in &self.terms {
            for ((a2, b2), c2) in &other.terms {
                // reorder d^b1 t^a2 coordinate by coordinate
                let mut partial: Vec<(Vec<i64>, Vec<i64>, Rat)> =
                    vec![(vec![0; n], vec![0; n], c1 * c2)];
                for i in 0..n {
                    let b = b1[i];
                    let c = a2[i];
                    let kmax = if b >= 0 {
                        b
                    } else if c >= 0 {
                        c
                    } else {
                        panic!("both exponents negative in coordinate {i}: not Ore-localizable on one side");
                    };
                    let mut next = Vec::new();
                    for (ta, tb, tc) in &partial {
                        for k in 0..=kmax {
                            let coef = crate::rat::binom(&rat(b), k as usize)
                                * falling_i(c, k as usize);
                            if coef.is_zero() {
                                continue;
                            }
                            let mut ta2 = ta.clone();
                            let mut tb2 = tb.clone();
                            ta2[i] = c - k;
                            tb2[i] = b - k;
                            next.push((ta2, tb2, tc * &coef));
                        }
                    }
                    partial = next;
                }
                for (ta, tb, tc) in partial {
                    let key: ExpPair = (
                        (0..n).map(|i| a1[i] + ta[i]).collect(),
                        (0..n).map(|i| tb[i] + b2[i]).collect(),
                    );
                    out.add_term(key, tc);
                }
            }
        }
        Ok(out)
    }

    pub fn commutator(&self, other: &WeylElement) -> Result<WeylElement> {
        self.multiply(other)?.sub(&other.multiply(self)?)
    }

    /// Degree of a monomial key.
    fn degree_of(key: &ExpPair) -> Grading {
        Grading(
            key.0
                .iter()
                .zip(&key.1)
                .map(|(a, b)| a - b)
                .collect(),
        )
    }

    /// Split into homogeneous parts; each part carries its degree and the
    /// parity flag (true iff the degree lies in the even sublattice, i.e. the
    /// component belongs to A_n^ev).
    pub fn homogeneous_parts(&self) -> Vec<(Grading, WeylElement, bool)> {
        let mut map: BTreeMap<Grading, WeylElement> = BTreeMap::new();
        for (k, c) in &self.terms {
            let deg = Self::degree_of(k);
            map.entry(deg)
                .or_insert_with(|| WeylElement::zero(self.n))
                .add_term(k.clone(), c.clone());
        }
        map.into_iter()
            .map(|(deg, part)| {
                let even = deg.is_even();
                (deg, part, even)
            })
            .collect()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.homogeneous_parts().len() <= 1
    }

    pub fn degree(&self) -> Option<Grading> {
        let parts = self.homogeneous_parts();
        match parts.len() {
            1 => Some(parts.into_iter().next().unwrap().0),
            _ => None,
        }
    }

    /// True when every homogeneous part is even.
    pub fn is_even(&self) -> bool {
        self.homogeneous_parts().iter().all(|(_, _, e)| *e)
    }

    /// Canonical text form; parses back exactly.
    pub fn to_display(&self) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (idx, ((a, b), c)) in self.terms.iter().enumerate() {
            let neg = c < &Rat::zero();
            let abs = if neg { -c.clone() } else { c.clone() };
            if idx == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mut factors: Vec<String> = Vec::new();
            for (i, &e) in a.iter().enumerate() {
                if e == 1 {
                    factors.push(format!("t{}", i + 1));
                } else if e != 0 {
                    factors.push(format!("t{}^{}", i + 1, e));
                }
            }
            for (i, &e) in b.iter().enumerate() {
                if e == 1 {
                    factors.push(format!("d{}", i + 1));
                } else if e != 0 {
                    factors.push(format!("d{}^{}", i + 1, e));
                }
            }
            let one = abs == rat(1);
            if factors.is_empty() {
                out.push_str(&rat_to_string(&abs));
            } else {
                if !one {
                    out.push_str(&rat_to_string(&abs));
                    out.push('*');
                }
                out.push_str(&factors.join("*"));
            }
        }
        out
    }
}

/// Normalize a product of generators given in arbitrary order, e.g. from the
/// parser: the factors are multiplied left to right through the normal-form
/// product.
pub fn normalize(n: usize, factors: &[WeylElement]) -> Result<WeylElement> {
    let mut acc = WeylElement::one(n);
    for f in factors {
        acc = acc.multiply(f)?;
    }
    Ok(acc)
}

/// Parse expressions like `t1^2*d2 + 3*d1 - 1/2`. Generators may appear in
/// any order inside a term; the result is the normal form.
pub fn parse(n: usize, input: &str) -> Result<WeylElement> {
    Parser {
        n,
        chars: input.chars().collect(),
        pos: 0,
    }
    .parse_expr()
}

struct Parser {
    n: usize,
    chars: Vec<char>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek();
        if c.is_some() {
            self.pos += 1;
        }
        c
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn parse_expr(&mut self) -> Result<WeylElement> {
        let mut acc = WeylElement::zero(self.n);
        let mut sign = rat(1);
        self.skip_ws();
        if self.peek() == Some('-') {
            self.bump();
            sign = -sign;
        } else if self.peek() == Some('+') {
            self.bump();
        }
        loop {
            let term = self.parse_term()?;
            acc = acc.add(&term.scale(&sign))?;
            self.skip_ws();
            match self.peek() {
                Some('+') => {
                    self.bump();
                    sign = rat(1);
                }
                Some('-') => {
                    self.bump();
                    sign = -rat(1);
                }
                None => return Ok(acc),
                Some(c) => return Err(Error::Parse(format!("unexpected character {c:?}"))),
            }
        }
    }

    fn parse_term(&mut self) -> Result<WeylElement> {
        let mut factors = vec![self.parse_factor()?];
        loop {
            self.skip_ws();
            if self.peek() == Some('*') {
                self.bump();
                factors.push(self.parse_factor()?);
            } else {
                break;
            }
        }
        normalize(self.n, &factors)
    }

    fn parse_factor(&mut self) -> Result<WeylElement> {
        self.skip_ws();
        match self.peek() {
            Some('t') | Some('d') => {
                let kind = self.bump().unwrap();
                let idx = self.parse_usize()?;
                if idx == 0 || idx > self.n {
                    return Err(Error::Parse(format!(
                        "generator index {idx} out of range 1..={}",
                        self.n
                    )));
                }
                let base = if kind == 't' {
                    WeylElement::t(self.n, idx)
                } else {
                    WeylElement::d(self.n, idx)
                };
                self.skip_ws();
                if self.peek() == Some('^') {
                    self.bump();
                    let e = self.parse_usize()?;
                    let mut acc = WeylElement::one(self.n);
                    for _ in 0..e {
                        acc = acc.multiply(&base)?;
                    }
                    Ok(acc)
                } else {
                    Ok(base)
                }
            }
            Some(c) if c.is_ascii_digit() => {
                let c = self.parse_rational()?;
                Ok(WeylElement::scalar(self.n, c))
            }
            other => Err(Error::Parse(format!("unexpected token {other:?}"))),
        }
    }

    fn parse_usize(&mut self) -> Result<usize> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(Error::Parse("expected a number".into()));
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        s.parse().map_err(|_| Error::Parse(format!("bad number {s}")))
    }

    fn parse_rational(&mut self) -> Result<Rat> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        let mut s: String = self.chars[start..self.pos].iter().collect();
        if self.peek() == Some('/') {
            self.bump();
            let dstart = self.pos;
            while self.peek().is_some_and(|c| c.is_ascii_digit()) {
                self.pos += 1;
            }
            let d: String = self.chars[dstart..self.pos].iter().collect();
            s = format!("{s}/{d}");
        }
        rat_from_str(&s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::ratio;

    fn t() -> WeylElement {
        WeylElement::t(1, 1)
    }

    fn d() -> WeylElement {
        WeylElement::d(1, 1)
    }

    #[test]
    fn d_times_t() {
        // d t = t d + 1
        let dt = d().multiply(&t()).unwrap();
        let expected = parse(1, "t1*d1 + 1").unwrap();
        assert_eq!(dt, expected);
    }

    #[test]
    fn td_already_normal() {
        let td = t().multiply(&d()).unwrap();
        assert_eq!(td, parse(1, "t1*d1").unwrap());
    }

    #[test]
    fn d2_times_t() {
        // d^2 t = t d^2 + 2 d
        let d2 = d().multiply(&d()).unwrap();
        let r = d2.multiply(&t()).unwrap();
        assert_eq!(r, parse(1, "t1*d1^2 + 2*d1").unwrap());
    }

    #[test]
    fn td_squared() {
        // (t d)^2 = t^2 d^2 + t d; check against k^2 = k(k-1) + k on t^k
        let td = t().multiply(&d()).unwrap();
        let sq = td.multiply(&td).unwrap();
        assert_eq!(sq, parse(1, "t1^2*d1^2 + t1*d1").unwrap());
    }

    #[test]
    fn commutators() {
        // [d, t] = 1
        assert_eq!(
            d().commutator(&t()).unwrap(),
            WeylElement::one(1)
        );
        // [t, t] = 0
        assert!(t().commutator(&t()).unwrap().is_zero());
        // [t d, t] = t
        let td = t().multiply(&d()).unwrap();
        assert_eq!(td.commutator(&t()).unwrap(), t());
    }

    #[test]
    fn homogeneous_parts_and_parity() {
        let e = parse(1, "t1^2").unwrap();
        let parts = e.homogeneous_parts();
        assert_eq!(parts.len(), 1);
        assert_eq!(parts[0].0, Grading(vec![2]));
        assert!(parts[0].2);

        let e = parse(1, "t1 + d1").unwrap();
        let parts = e.homogeneous_parts();
        assert_eq!(parts.len(), 2);
        assert!(parts.iter().all(|(_, _, even)| !even));

        let e = parse(2, "t1*t2 + t1*d2").unwrap();
        let parts = e.homogeneous_parts();
        assert_eq!(parts.len(), 2);
        assert!(parts.iter().all(|(_, _, even)| *even));
        let degs: Vec<_> = parts.iter().map(|p| p.0.clone()).collect();
        assert!(degs.contains(&Grading(vec![1, 1])));
        assert!(degs.contains(&Grading(vec![1, -1])));
    }

    #[test]
    fn parse_round_trip() {
        for s in ["t1^2*d2 + 3*d1", "t1*d1 + 1", "-t1 + 1/2", "2*t1^3"] {
            let e = parse(2, s).unwrap();
            let printed = e.to_display();
            let back = parse(2, &printed).unwrap();
            assert_eq!(e, back, "round trip failed for {s}: printed {printed}");
        }
    }

    #[test]
    fn parser_normalizes_arbitrary_order() {
        // d1*t1 parses to t1*d1 + 1
        let e = parse(1, "d1*t1").unwrap();
        assert_eq!(e, parse(1, "t1*d1 + 1").unwrap());
    }

    #[test]
    fn product_degree_additive() {
        let u = parse(2, "t1*t2").unwrap();
        let v = parse(2, "t1*d2").unwrap();
        let p = u.multiply(&v).unwrap();
        assert_eq!(p.degree().unwrap(), Grading(vec![2, 0]));
    }

    #[test]
    fn jacobi_small() {
        let a = parse(1, "t1^2*d1").unwrap();
        let b = parse(1, "d1^2").unwrap();
        let c = parse(1, "t1").unwrap();
        let j1 = a.commutator(&b.commutator(&c).unwrap()).unwrap();
        let j2 = b.commutator(&c.commutator(&a).unwrap()).unwrap();
        let j3 = c.commutator(&a.commutator(&b).unwrap()).unwrap();
        assert!(j1.add(&j2).unwrap().add(&j3).unwrap().is_zero());
    }

    #[test]
    fn scalar_half() {
        let e = parse(1, "1/2").unwrap();
        assert_eq!(e, WeylElement::scalar(1, ratio(1, 2)));
    }

    #[test]
    fn negative_exponent_reordering() {
        // d * t^{-1} = t^{-1} d - t^{-2}
        let tinv = WeylElement::monomial(1, &[-1], &[0], rat(1));
        let r = d().multiply(&tinv).unwrap();
        let mut expected = WeylElement::monomial(1, &[-1], &[1], rat(1));
        expected = expected
            .add(&WeylElement::monomial(1, &[-2], &[0], rat(-1)))
            .unwrap();
        assert_eq!(r, expected);
    }
}
