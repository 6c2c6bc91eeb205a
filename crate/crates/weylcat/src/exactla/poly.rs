//! Univariate polynomials over Q, coefficients lowest degree first, plus the
//! factorization routines needed for primary decomposition. In-scope degrees
//! are tiny, so factoring combines rational-root extraction, discriminant
//! tests, a monic-quartic split, and a budgeted Kronecker fallback.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rat::{exact_sqrt, rat, Rat};

use super::Mat;

#[derive(Clone, PartialEq, Eq)]
pub struct Poly {
    /// coefficients, lowest degree first; leading coefficient nonzero unless zero poly
    c: Vec<Rat>,
}

impl std::fmt::Debug for Poly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Poly[{}]", self.to_display())
    }
}

impl Poly {
    pub fn new(mut c: Vec<Rat>) -> Self {
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        Poly { c }
    }

    pub fn zero() -> Self {
        Poly { c: vec![] }
    }

    pub fn one() -> Self {
        Poly { c: vec![Rat::one()] }
    }

    pub fn x() -> Self {
        Poly::new(vec![Rat::zero(), Rat::one()])
    }

    /// x - a
    pub fn x_minus(a: &Rat) -> Self {
        Poly::new(vec![-a.clone(), Rat::one()])
    }

    pub fn constant(a: Rat) -> Self {
        Poly::new(vec![a])
    }

    pub fn from_i64(c: Vec<i64>) -> Self {
        Poly::new(c.into_iter().map(rat).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.c.len().saturating_sub(1)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.c
    }

    pub fn leading(&self) -> Rat {
        self.c.last().cloned().unwrap_or_else(Rat::zero)
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_one()
    }

    pub fn monic(&self) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let inv = self.leading().recip();
        Poly::new(self.c.iter().map(|x| x * &inv).collect())
    }

    pub fn add(&self, o: &Poly) -> Poly {
        let n = self.c.len().max(o.c.len());
        let mut c = vec![Rat::zero(); n];
        for (i, x) in self.c.iter().enumerate() {
            c[i] += x;
        }
        for (i, x) in o.c.iter().enumerate() {
            c[i] += x;
        }
        Poly::new(c)
    }

    pub fn sub(&self, o: &Poly) -> Poly {
        self.add(&o.scale(&-Rat::one()))
    }

    pub fn scale(&self, s: &Rat) -> Poly {
        Poly::new(self.c.iter().map(|x| x * s).collect())
    }

    pub fn mul(&self, o: &Poly) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly::zero();
        }
        let mut c = vec![Rat::zero(); self.c.len() + o.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.c.iter().enumerate() {
                let prod = a * b;
                c[i + j] += prod;
            }
        }
        Poly::new(c)
    }

    pub fn pow(&self, k: usize) -> Poly {
        let mut acc = Poly::one();
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Euclidean division; divisor must be nonzero.
    pub fn divrem(&self, d: &Poly) -> (Poly, Poly) {
        assert!(!d.is_zero(), "division by zero polynomial");
        let mut r = self.c.clone();
        let dd = d.degree();
        let lead_inv = d.leading().recip();
        let mut q = vec![Rat::zero(); self.c.len().saturating_sub(dd)];
        while r.len() > dd && !r.is_empty() {
            let k = r.len() - 1 - dd;
            let f = r.last().unwrap() * &lead_inv;
            if !f.is_zero() {
                for (i, dc) in d.c.iter().enumerate() {
                    let t = &r[k + i] - &(dc * &f);
                    r[k + i] = t;
                }
                q[k] = f;
            }
            r.pop();
        }
        (Poly::new(q), Poly::new(r))
    }

    pub fn divides(&self, other: &Poly) -> bool {
        other.divrem(self).1.is_zero()
    }

    pub fn gcd(&self, o: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.divrem(&b).1;
            a = b;
            b = r;
        }
        if a.is_zero() {
            a
        } else {
            a.monic()
        }
    }

    pub fn derivative(&self) -> Poly {
        if self.c.len() <= 1 {
            return Poly::zero();
        }
        Poly::new(
            self.c[1..]
                .iter()
                .enumerate()
                .map(|(i, x)| x * &rat(i as i64 + 1))
                .collect(),
        )
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.c.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Evaluate at a square matrix.
    pub fn eval_mat(&self, m: &Mat) -> Mat {
        assert!(m.is_square());
        let n = m.rows();
        let mut acc = Mat::zeros(n, n);
        for c in self.c.iter().rev() {
            acc = acc.mul(m).add(&Mat::scalar(n, c));
        }
        acc
    }

    pub fn to_display(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut parts = Vec::new();
        for (i, c) in self.c.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let cs = crate::rat::rat_to_string(c);
            let term = match i {
                0 => cs,
                1 if c.is_one() => "x".into(),
                1 => format!("{cs}*x"),
                _ if c.is_one() => format!("x^{i}"),
                _ => format!("{cs}*x^{i}"),
            };
            parts.push(term);
        }
        parts.join(" + ")
    }
}

/// Clear denominators and content: returns primitive integer coefficients
/// with positive leading coefficient.
fn primitive_int(p: &Poly) -> Vec<BigInt> {
    let mut den = BigInt::one();
    for c in p.coeffs() {
        den = num_integer::lcm(den, c.denom().clone());
    }
    let mut ints: Vec<BigInt> = p
        .coeffs()
        .iter()
        .map(|c| c.numer() * (&den / c.denom()))
        .collect();
    let mut g = BigInt::zero();
    for x in &ints {
        g = num_integer::gcd(g, x.clone());
    }
    if !g.is_zero() {
        for x in ints.iter_mut() {
            *x = &*x / &g;
        }
    }
    if ints.last().is_some_and(|x| x.is_negative()) {
        for x in ints.iter_mut() {
            *x = -&*x;
        }
    }
    ints
}

fn poly_from_int(c: &[BigInt]) -> Poly {
    Poly::new(c.iter().map(|x| Rat::from_integer(x.clone())).collect())
}

/// All positive divisors of |n|, capped; None when the cap is exceeded.
fn divisors(n: &BigInt, cap: usize) -> Option<Vec<BigInt>> {
    let mut n = n.abs();
    if n.is_zero() {
        return Some(vec![]);
    }
    let mut factors: Vec<(BigInt, u32)> = Vec::new();
    let mut d = BigInt::from(2u32);
    let mut steps = 0usize;
    while &d * &d <= n {
        steps += 1;
        if steps > 200_000 {
            return None;
        }
        if (&n % &d).is_zero() {
            let mut e = 0;
            while (&n % &d).is_zero() {
                n = &n / &d;
                e += 1;
            }
            factors.push((d.clone(), e));
        }
        d += 1;
    }
    if n > BigInt::one() {
        factors.push((n, 1));
    }
    let mut divs = vec![BigInt::one()];
    for (p, e) in factors {
        let mut next = Vec::new();
        for d in &divs {
            let mut pe = BigInt::one();
            for _ in 0..=e {
                next.push(d * &pe);
                pe = &pe * &p;
            }
        }
        divs = next;
        if divs.len() > cap {
            return None;
        }
    }
    divs.sort();
    Some(divs)
}

/// Rational roots of a primitive integer polynomial (rational root theorem).
fn rational_roots(ints: &[BigInt]) -> Result<Vec<Rat>> {
    let a0 = ints.first().cloned().unwrap_or_else(BigInt::zero);
    let an = ints.last().cloned().unwrap_or_else(BigInt::one);
    let p = poly_from_int(ints);
    let mut roots = Vec::new();
    if a0.is_zero() {
        roots.push(Rat::zero());
        return Ok(roots); // caller re-runs after dividing out x
    }
    let nums = divisors(&a0, 4096).ok_or(Error::FactorBudget(ints.len() - 1))?;
    let dens = divisors(&an, 4096).ok_or(Error::FactorBudget(ints.len() - 1))?;
    for n in &nums {
        for d in &dens {
            for sign in [1i64, -1] {
                let cand = Rat::new(n * BigInt::from(sign), d.clone());
                if p.eval(&cand).is_zero() && !roots.contains(&cand) {
                    roots.push(cand);
                }
            }
        }
    }
    Ok(roots)
}

/// Factor a squarefree monic polynomial into monic irreducibles over Q.
fn factor_squarefree(p: &Poly) -> Result<Vec<Poly>> {
    let deg = p.degree();
    if deg <= 1 {
        return Ok(vec![p.clone()]);
    }
    let ints = primitive_int(p);
    // split off rational roots first
    let roots = rational_roots(&ints)?;
    if !roots.is_empty() {
        let mut rest = p.clone();
        let mut out = Vec::new();
        for r in roots {
            let lin = Poly::x_minus(&r);
            let (q, rem) = rest.divrem(&lin);
            debug_assert!(rem.is_zero());
            out.push(lin);
            rest = q;
        }
        if rest.degree() >= 1 {
            out.extend(factor_squarefree(&rest.monic())?);
        }
        return Ok(out);
    }
    // no rational roots: degree 2 and 3 are irreducible now
    if deg <= 3 {
        return Ok(vec![p.clone()]);
    }
    if deg == 4 && p.is_monic() {
        if let Some((a, b)) = split_monic_quartic(p)? {
            let mut out = factor_squarefree(&a)?;
            out.extend(factor_squarefree(&b)?);
            return Ok(out);
        }
        return Ok(vec![p.clone()]);
    }
    kronecker(p)
}

/// Try to write a monic rootless quartic as a product of two monic quadratics
/// with rational coefficients.
fn split_monic_quartic(p: &Poly) -> Result<Option<(Poly, Poly)>> {
    let c = p.coeffs();
    let (c0, c1, c2, c3) = (c[0].clone(), c[1].clone(), c[2].clone(), c[3].clone());
    // depressed via b*d = c0 candidates over divisor pairs after scaling to integers
    let ints = primitive_int(p);
    // p monic primitive integer => integer factor coefficients
    let a0 = ints[0].clone();
    if ints[4] != BigInt::one() {
        // non-monic integer model: fall back to Kronecker
        return Ok(None);
    }
    let Some(divs) = divisors(&a0, 4096) else {
        return Err(Error::FactorBudget(4));
    };
    let mut bds: Vec<(BigInt, BigInt)> = Vec::new();
    for d in &divs {
        let q = &a0 / d;
        for (s1, s2) in [(1, 1), (-1, -1)] {
            bds.push((d * BigInt::from(s1 as i64), &q * BigInt::from(s2 as i64)));
        }
    }
    for (b, d) in bds {
        let b = Rat::from_integer(b);
        let d = Rat::from_integer(d);
        if &b * &d != c0 {
            continue;
        }
        // (x^2+a x+b)(x^2+e x+d): a+e=c3, b+d+ae=c2, ad+be=c1
        // a+e = c3, ae = c2-b-d; a,e roots of t^2 - c3 t + (c2-b-d)
        let s = c3.clone();
        let prod = &c2 - &b - &d;
        let disc = &s * &s - rat(4) * &prod;
        let num = disc.numer() * disc.denom();
        if let Some(root) = exact_sqrt(&num) {
            let sq = Rat::new(root, disc.denom().clone());
            for sign in [1i64, -1] {
                let a = (&s + &sq * rat(sign)) / rat(2);
                let e = &s - &a;
                if &a * &d + &b * &e == c1 {
                    let f1 = Poly::new(vec![b.clone(), a.clone(), Rat::one()]);
                    let f2 = Poly::new(vec![d.clone(), e.clone(), Rat::one()]);
                    if f1.mul(&f2) == *p {
                        return Ok(Some((f1, f2)));
                    }
                }
            }
        }
    }
    Ok(None)
}

/// Kronecker interpolation factoring for small degrees; budgeted.
fn kronecker(p: &Poly) -> Result<Vec<Poly>> {
    let deg = p.degree();
    let half = deg / 2;
    let ints = primitive_int(p);
    let ip = poly_from_int(&ints);
    let pts: Vec<Rat> = (0..=half as i64).map(rat).collect();
    let vals: Vec<Rat> = pts.iter().map(|x| ip.eval(x)).collect();
    if vals.iter().any(|v| v.is_zero()) {
        // integer root slipped through; root finding handles it
        let roots = rational_roots(&ints)?;
        if !roots.is_empty() {
            let mut rest = p.clone();
            let mut out = Vec::new();
            for r in roots {
                let lin = Poly::x_minus(&r);
                let (q, rem) = rest.divrem(&lin);
                debug_assert!(rem.is_zero());
                out.push(lin);
                rest = q;
            }
            if rest.degree() >= 1 {
                out.extend(factor_squarefree(&rest.monic())?);
            }
            return Ok(out);
        }
    }
    let mut divisor_lists = Vec::new();
    let mut budget: usize = 1;
    for v in &vals {
        let ds = divisors(&v.numer().abs(), 512).ok_or(Error::FactorBudget(deg))?;
        let mut signed: Vec<BigInt> = Vec::new();
        for d in ds {
            signed.push(d.clone());
            signed.push(-d);
        }
        budget = budget.saturating_mul(signed.len());
        if budget > 2_000_000 {
            return Err(Error::FactorBudget(deg));
        }
        divisor_lists.push(signed);
    }
    // enumerate candidate value tuples, interpolate, test divisibility
    let mut idx = vec![0usize; divisor_lists.len()];
    loop {
        let values: Vec<Rat> = idx
            .iter()
            .zip(&divisor_lists)
            .map(|(&i, l)| Rat::from_integer(l[i].clone()))
            .collect();
        if let Some(cand) = lagrange(&pts, &values) {
            if cand.degree() >= 1 && cand.degree() <= half {
                let cm = cand.monic();
                if cm.divides(p) {
                    let (q, _) = p.divrem(&cm);
                    let mut out = factor_squarefree(&cm)?;
                    out.extend(factor_squarefree(&q.monic())?);
                    return Ok(out);
                }
            }
        }
        // odometer
        let mut k = 0;
        loop {
            if k == idx.len() {
                return Ok(vec![p.clone()]); // exhausted: irreducible
            }
            idx[k] += 1;
            if idx[k] < divisor_lists[k].len() {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
    }
}

fn lagrange(xs: &[Rat], ys: &[Rat]) -> Option<Poly> {
    let mut acc = Poly::zero();
    for (i, y) in ys.iter().enumerate() {
        let mut term = Poly::constant(y.clone());
        for (j, xj) in xs.iter().enumerate() {
            if i == j {
                continue;
            }
            let denom = &xs[i] - xj;
            if denom.is_zero() {
                return None;
            }
            term = term.mul(&Poly::x_minus(xj).scale(&denom.recip()));
        }
        acc = acc.add(&term);
    }
    Some(acc)
}

/// Squarefree decomposition (Yun): returns [(g_i, i)] with p = prod g_i^i,
/// g_i squarefree and pairwise coprime.
pub fn squarefree_decomposition(p: &Poly) -> Vec<(Poly, usize)> {
    let p = p.monic();
    if p.degree() == 0 {
        return vec![];
    }
    let dp = p.derivative();
    let mut a = p.gcd(&dp);
    let mut b = p.divrem(&a).0;
    let mut c = dp.divrem(&a).0;
    let mut d = c.sub(&b.derivative());
    let mut out = Vec::new();
    let mut i = 1;
    loop {
        let g = b.gcd(&d);
        if g.degree() > 0 {
            out.push((g.monic(), i));
        }
        b = b.divrem(&g).0;
        c = d.divrem(&g).0;
        d = c.sub(&b.derivative());
        i += 1;
        if b.degree() == 0 {
            break;
        }
        let _ = &a;
        a = Poly::one();
    }
    out
}

/// Full factorization of a monic polynomial into (irreducible, multiplicity).
pub fn factor(p: &Poly) -> Result<Vec<(Poly, usize)>> {
    assert!(!p.is_zero(), "cannot factor the zero polynomial");
    let p = p.monic();
    let mut out: Vec<(Poly, usize)> = Vec::new();
    for (g, e) in squarefree_decomposition(&p) {
        for f in factor_squarefree(&g)? {
            out.push((f.monic(), e));
        }
    }
    out.sort_by(|a, b| {
        (a.0.degree(), format!("{:?}", a.0)).cmp(&(b.0.degree(), format!("{:?}", b.0)))
    });
    Ok(out)
}

pub fn is_irreducible(p: &Poly) -> Result<bool> {
    if p.degree() == 0 {
        return Ok(false);
    }
    let f = factor(p)?;
    Ok(f.len() == 1 && f[0].1 == 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::ratio;

    #[test]
    fn divrem_exact() {
        let p = Poly::from_i64(vec![2, -3, 1]); // x^2-3x+2
        let d = Poly::from_i64(vec![-1, 1]); // x-1
        let (q, r) = p.divrem(&d);
        assert!(r.is_zero());
        assert_eq!(q, Poly::from_i64(vec![-2, 1]));
    }

    #[test]
    fn factor_quadratic_split() {
        let p = Poly::from_i64(vec![2, -3, 1]);
        let f = factor(&p).unwrap();
        assert_eq!(f.len(), 2);
        assert!(f.iter().all(|(g, e)| g.degree() == 1 && *e == 1));
    }

    #[test]
    fn factor_irreducible_quadratic() {
        let p = Poly::from_i64(vec![1, 0, 1]); // x^2+1
        let f = factor(&p).unwrap();
        assert_eq!(f.len(), 1);
        assert_eq!(f[0], (p, 1));
    }

    #[test]
    fn factor_with_multiplicity() {
        // (x-1)^2 (x+2)
        let p = Poly::x_minus(&rat(1)).pow(2).mul(&Poly::x_minus(&rat(-2)));
        let f = factor(&p).unwrap();
        assert_eq!(f.len(), 2);
        let mults: Vec<usize> = f.iter().map(|x| x.1).collect();
        assert!(mults.contains(&2) && mults.contains(&1));
    }

    #[test]
    fn factor_rational_root() {
        // (2x-1)(x+3) = 2x^2+5x-3, monic: x^2+5/2x-3/2
        let p = Poly::new(vec![ratio(-3, 2), ratio(5, 2), rat(1)]);
        let f = factor(&p).unwrap();
        assert_eq!(f.len(), 2);
    }

    #[test]
    fn factor_quartic_into_quadratics() {
        // (x^2+1)(x^2+2) = x^4+3x^2+2
        let p = Poly::from_i64(vec![2, 0, 3, 0, 1]);
        let f = factor(&p).unwrap();
        assert_eq!(f.len(), 2);
        assert!(f.iter().all(|(g, _)| g.degree() == 2));
    }

    #[test]
    fn quartic_irreducible() {
        // x^4 + x + 1 is irreducible over Q
        let p = Poly::from_i64(vec![1, 1, 0, 0, 1]);
        let f = factor(&p).unwrap();
        assert_eq!(f.len(), 1);
    }

    #[test]
    fn eval_mat_annihilates() {
        let m = Mat::from_i64(vec![vec![1, 0], vec![0, 2]]);
        let p = Poly::from_i64(vec![2, -3, 1]);
        assert!(p.eval_mat(&m).is_zero());
    }
}
