//! Structure of finite-dimensional matrix algebras over Q: minimal
//! polynomials, primary (Fitting) decomposition, the Jacobson radical via the
//! trace form, and splitting-idempotent search with radical lifting. This is
//! the engine behind Krull-Schmidt decomposition of quiver representations.

use num_traits::{One, Zero};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::rat::{rat, Rat};

use super::poly::{factor, Poly};
use super::{Mat, Subspace};

/// rank, kernel basis, image basis (columns of the original matrix at pivot
/// positions). rank + |kernel| = cols.
pub fn rank_profile(m: &Mat) -> (usize, Vec<Vec<Rat>>, Vec<Vec<Rat>>) {
    let (_, pivots) = m.rref();
    let kernel = m.kernel_basis();
    let image: Vec<Vec<Rat>> = pivots.iter().map(|&c| m.col(c)).collect();
    (pivots.len(), kernel, image)
}

/// Monic least-degree annihilating polynomial of a square matrix.
pub fn min_poly(m: &Mat) -> Result<Poly> {
    if !m.is_square() {
        return Err(Error::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    let n = m.rows();
    if n == 0 {
        return Ok(Poly::one());
    }
    let mut powers: Vec<Vec<Rat>> = Vec::new();
    let mut span = Subspace::new(n * n);
    let mut acc = Mat::identity(n);
    loop {
        let flat = acc.flatten();
        if !span.insert(&flat) {
            // dependency found: solve for coefficients against the stored powers
            let a = Mat::from_cols(powers.clone());
            let coeffs = a.solve(&flat).expect("dependent power must be solvable");
            let mut c: Vec<Rat> = coeffs.into_iter().map(|x| -x).collect();
            c.push(Rat::one());
            return Ok(Poly::new(c));
        }
        powers.push(flat);
        acc = acc.mul(m);
    }
}

/// Primary decomposition of the ambient space under m: for each irreducible
/// factor p^e of the minimal polynomial, the kernel of p(m)^e. The returned
/// subspaces are m-invariant and direct-sum to the full space.
pub fn primary_decomposition(m: &Mat) -> Result<Vec<(Poly, Vec<Vec<Rat>>)>> {
    let mp = min_poly(m)?;
    let factors = factor(&mp)?;
    let mut out = Vec::new();
    let mut total = 0usize;
    for (p, e) in factors {
        let pe = p.pow(e).eval_mat(m);
        let (_, kernel, _) = rank_profile(&pe);
        total += kernel.len();
        out.push((p, kernel));
    }
    debug_assert_eq!(total, m.rows());
    Ok(out)
}

/// A concrete unital matrix algebra, held as a basis plus structure data.
pub struct Algebra {
    pub basis: Vec<Mat>,
    dim_rep: usize,
    span: Subspace,
    /// coordinates of the identity in the basis
    pub unit: Vec<Rat>,
}

impl Algebra {
    /// Build from a spanning set; verifies multiplicative closure and the
    /// presence of the identity.
    pub fn new(gens: &[Mat]) -> Result<Algebra> {
        let dim_rep = gens.first().map_or(0, |m| m.rows());
        for g in gens {
            if !g.is_square() || g.rows() != dim_rep {
                return Err(Error::DimMismatch(
                    "algebra basis matrices must be square of equal size".into(),
                ));
            }
        }
        // reduce to an independent basis
        let mut span = Subspace::new(dim_rep * dim_rep);
        let mut basis = Vec::new();
        for g in gens {
            if span.insert(&g.flatten()) {
                basis.push(g.clone());
            }
        }
        // closure check against the original span
        for (i, a) in basis.iter().enumerate() {
            for (j, b) in basis.iter().enumerate() {
                if !span.contains(&a.mul(b).flatten()) {
                    return Err(Error::NotClosed { i, j });
                }
            }
        }
        let a = Mat::from_cols(basis.iter().map(|m| m.flatten()).collect());
        let unit = a
            .solve(&Mat::identity(dim_rep).flatten())
            .ok_or(Error::NoUnit)?;
        Ok(Algebra {
            basis,
            dim_rep,
            span,
            unit,
        })
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn element(&self, coords: &[Rat]) -> Mat {
        let mut m = Mat::zeros(self.dim_rep, self.dim_rep);
        for (c, b) in coords.iter().zip(&self.basis) {
            if !c.is_zero() {
                m = m.add(&b.scale(c));
            }
        }
        m
    }

    pub fn coordinates(&self, m: &Mat) -> Option<Vec<Rat>> {
        let a = Mat::from_cols(self.basis.iter().map(|b| b.flatten()).collect());
        a.solve(&m.flatten())
    }

    pub fn contains(&self, m: &Mat) -> bool {
        self.span.contains(&m.flatten())
    }
}

/// Jacobson radical as the kernel of the trace form (valid over Q).
pub fn radical(gens: &[Mat]) -> Result<Vec<Mat>> {
    let alg = Algebra::new(gens)?;
    Ok(radical_of(&alg))
}

fn radical_of(alg: &Algebra) -> Vec<Mat> {
    let d = alg.dim();
    let gram = Mat::from_fn(d, d, |i, j| alg.basis[i].mul(&alg.basis[j]).trace());
    gram.kernel_basis()
        .into_iter()
        .map(|v| alg.element(&v))
        .collect()
}

#[derive(Debug)]
pub enum SplitOutcome {
    /// A nontrivial idempotent e with e*e == e, e not in {0, 1}.
    Idempotent(Mat),
    /// Certified local: the quotient by the radical is a division algebra.
    Local,
}

/// Extended Euclid over Q[x]: g = s*a + t*b with g monic (or zero).
fn ext_gcd(a: &Poly, b: &Poly) -> (Poly, Poly, Poly) {
    let (mut r0, mut r1) = (a.clone(), b.clone());
    let (mut s0, mut s1) = (Poly::one(), Poly::zero());
    let (mut t0, mut t1) = (Poly::zero(), Poly::one());
    while !r1.is_zero() {
        let (q, r) = r0.divrem(&r1);
        let s = s0.sub(&q.mul(&s1));
        let t = t0.sub(&q.mul(&t1));
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s;
        t0 = t1;
        t1 = t;
    }
    if r0.is_zero() {
        return (r0, s0, t0);
    }
    let lead = r0.leading().recip();
    (
        r0.scale(&lead),
        s0.scale(&lead),
        t0.scale(&lead),
    )
}

/// Given a minimal polynomial already factored, build a CRT polynomial f with
/// f = 1 mod the first primary part and f = 0 mod the rest. Returns None when
/// there is only one primary part.
fn crt_split_poly(factors: &[(Poly, usize)]) -> Option<Poly> {
    if factors.len() < 2 {
        return None;
    }
    let u = factors[0].0.pow(factors[0].1);
    let mut v = Poly::one();
    for (p, e) in &factors[1..] {
        v = v.mul(&p.pow(*e));
    }
    let (g, _s, t) = ext_gcd(&u, &v);
    debug_assert_eq!(g.degree(), 0);
    // t*v = 1 mod u, and divisible by v
    Some(t.mul(&v))
}

/// Deterministic small-integer coefficient sampler.
fn sample_coords(rng: &mut ChaCha8Rng, dim: usize, attempt: usize) -> Vec<Rat> {
    let bound = 2 + (attempt / 4) as i64;
    (0..dim)
        .map(|_| rat(rng.gen_range(-bound..=bound)))
        .collect()
}

const FITTING_ATTEMPTS: usize = 16;

/// Search for a nontrivial idempotent in the algebra spanned by `gens`,
/// or certify that the algebra is local. Sampling is deterministic given the
/// seed; the "local" verdict is only returned when the quotient by the
/// radical is certified to be a division algebra (here: a field).
pub fn find_splitting_idempotent(gens: &[Mat], seed: u64) -> Result<SplitOutcome> {
    let alg = Algebra::new(gens)?;
    find_splitting_idempotent_alg(&alg, seed)
}

pub fn find_splitting_idempotent_alg(alg: &Algebra, seed: u64) -> Result<SplitOutcome> {
    let d = alg.dim();
    if d == 1 {
        return Ok(SplitOutcome::Local);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x1d3a_f00d);

    // Stage 1: Fitting on generic concrete elements.
    for attempt in 0..FITTING_ATTEMPTS {
        let coords = sample_coords(&mut rng, d, attempt);
        let z = alg.element(&coords);
        let mp = min_poly(&z)?;
        let factors = factor(&mp)?;
        if let Some(f) = crt_split_poly(&factors) {
            let e = f.eval_mat(&z);
            if !e.is_zero() && e != Mat::identity(e.rows()) {
                debug_assert_eq!(e.mul(&e), e);
                return Ok(SplitOutcome::Idempotent(e));
            }
        }
    }

    // Stage 2: pass to the semisimple quotient.
    let quotient = QuotientAlgebra::new(alg);
    quotient.split_or_certify(alg, &mut rng)
}

/// The quotient A/rad(A), carried as structure constants on a complement of
/// the radical inside the coordinate space of A.
struct QuotientAlgebra {
    /// dimension of S = A/R
    dim: usize,
    /// representatives of the S-basis as coordinates in A
    reps: Vec<Vec<Rat>>,
    /// structure constants: table[i][j] = coords of rep_i * rep_j in S
    table: Vec<Vec<Vec<Rat>>>,
    /// unit of S
    unit: Vec<Rat>,
    /// the parent algebra dimension
    dim_a: usize,
}

impl QuotientAlgebra {
    fn new(alg: &Algebra) -> QuotientAlgebra {
        let d = alg.dim();
        let rad = radical_of(alg);
        let rad_coords: Vec<Vec<Rat>> = rad
            .iter()
            .map(|m| alg.coordinates(m).expect("radical lies in the algebra"))
            .collect();
        // complement basis: greedy from standard unit vectors
        let mut span = Subspace::new(d);
        for rc in &rad_coords {
            span.insert(rc);
        }
        let mut reps = Vec::new();
        for i in 0..d {
            let mut e = vec![Rat::zero(); d];
            e[i] = Rat::one();
            if span.insert(&e) {
                reps.push(e);
            }
        }
        let sdim = reps.len();
        // basis matrix [rad | reps] as columns; inverse maps A-coords to (R,S)-coords
        let mut cols = rad_coords.clone();
        cols.extend(reps.clone());
        let basis_mat = Mat::from_cols(cols);
        let to_rs = basis_mat.inverse().expect("radical+complement spans A");
        let r = rad_coords.len();
        let project = |a_coords: &[Rat]| -> Vec<Rat> {
            let rs = to_rs.apply(a_coords);
            rs[r..].to_vec()
        };
        // structure constants via concrete multiplication
        let rep_mats: Vec<Mat> = reps.iter().map(|c| alg.element(c)).collect();
        let mut table = vec![vec![Vec::new(); sdim]; sdim];
        for i in 0..sdim {
            for j in 0..sdim {
                let prod = rep_mats[i].mul(&rep_mats[j]);
                let coords = alg.coordinates(&prod).expect("closure");
                table[i][j] = project(&coords);
            }
        }
        let unit = project(&alg.unit);
        QuotientAlgebra {
            dim: sdim,
            reps,
            table,
            unit,
            dim_a: d,
        }
    }

    fn mul(&self, a: &[Rat], b: &[Rat]) -> Vec<Rat> {
        let mut out = vec![Rat::zero(); self.dim];
        for i in 0..self.dim {
            if a[i].is_zero() {
                continue;
            }
            for j in 0..self.dim {
                if b[j].is_zero() {
                    continue;
                }
                let f = &a[i] * &b[j];
                for (o, t) in out.iter_mut().zip(&self.table[i][j]) {
                    *o += t * &f;
                }
            }
        }
        out
    }

    /// Minimal polynomial of an element of S via its powers.
    fn min_poly_of(&self, a: &[Rat]) -> Poly {
        let mut powers: Vec<Vec<Rat>> = Vec::new();
        let mut span = Subspace::new(self.dim);
        let mut acc = self.unit.clone();
        loop {
            if !span.insert(&acc) {
                let m = Mat::from_cols(powers.clone());
                let coeffs = m.solve(&acc).expect("dependent power");
                let mut c: Vec<Rat> = coeffs.into_iter().map(|x| -x).collect();
                c.push(Rat::one());
                return Poly::new(c);
            }
            powers.push(acc.clone());
            acc = self.mul(&acc, a);
        }
    }

    fn eval_poly(&self, p: &Poly, a: &[Rat]) -> Vec<Rat> {
        let mut acc = vec![Rat::zero(); self.dim];
        for c in p.coeffs().iter().rev() {
            acc = self.mul(&acc, a);
            for (x, u) in acc.iter_mut().zip(&self.unit) {
                *x += u * c;
            }
        }
        acc
    }

    /// Lift an idempotent of S to an exact idempotent of A by Newton
    /// iteration through the radical.
    fn lift(&self, alg: &Algebra, s_coords: &[Rat]) -> Result<Mat> {
        let mut a_coords = vec![Rat::zero(); self.dim_a];
        for (c, rep) in s_coords.iter().zip(&self.reps) {
            for (x, r) in a_coords.iter_mut().zip(rep) {
                *x += r * c;
            }
        }
        let mut e = alg.element(&a_coords);
        let id = Mat::identity(e.rows());
        for _ in 0..(usize::BITS - (self.dim_a.leading_zeros())) as usize + 3 {
            let e2 = e.mul(&e);
            if e2 == e {
                break;
            }
            // 3e^2 - 2e^3
            e = e2.scale(&rat(3)).sub(&e2.mul(&e).scale(&rat(2)));
        }
        if e.mul(&e) != e || e.is_zero() || e == id {
            return Err(Error::UnresolvedEnd);
        }
        Ok(e)
    }

    fn try_split_element(&self, alg: &Algebra, a: &[Rat]) -> Result<Option<Mat>> {
        let mp = self.min_poly_of(a);
        let factors = factor(&mp)?;
        if let Some(f) = crt_split_poly(&factors) {
            let e = self.eval_poly(&f, a);
            if e.iter().any(|x| !x.is_zero()) && e != self.unit {
                return Ok(Some(self.lift(alg, &e)?));
            }
        }
        // single primary part p^e with e >= 2 gives a nilpotent zero divisor
        if factors.len() == 1 && factors[0].1 >= 2 {
            let z = self.eval_poly(&factors[0].0, a);
            if z.iter().any(|x| !x.is_zero()) {
                if let Some(e) = self.idempotent_from_left_ideal(&z) {
                    return Ok(Some(self.lift(alg, &e)?));
                }
            }
        }
        Ok(None)
    }

    /// In the semisimple quotient every left ideal is generated by an
    /// idempotent; recover one for S*z by linear algebra.
    fn idempotent_from_left_ideal(&self, z: &[Rat]) -> Option<Vec<Rat>> {
        let mut span = Subspace::new(self.dim);
        let mut ideal_basis: Vec<Vec<Rat>> = Vec::new();
        // S*z spanned by basis_i * z
        for i in 0..self.dim {
            let mut ei = vec![Rat::zero(); self.dim];
            ei[i] = Rat::one();
            let v = self.mul(&ei, z);
            if span.insert(&v) {
                ideal_basis.push(v);
            }
        }
        if ideal_basis.is_empty() || span.contains(&self.unit) {
            return None; // zero or the whole algebra
        }
        // unknowns: coefficients of e in the ideal basis; equations: x_j e = x_j
        let t = ideal_basis.len();
        let mut rows = Vec::new();
        let mut rhs = Vec::new();
        for xj in &ideal_basis {
            for coord in 0..self.dim {
                let mut row = Vec::with_capacity(t);
                for bk in &ideal_basis {
                    row.push(self.mul(xj, bk)[coord].clone());
                }
                rows.push(row);
                rhs.push(xj[coord].clone());
            }
        }
        let a = Mat::from_rows(rows);
        let sol = a.solve(&rhs)?;
        let mut e = vec![Rat::zero(); self.dim];
        for (c, b) in sol.iter().zip(&ideal_basis) {
            for (x, v) in e.iter_mut().zip(b) {
                *x += v * c;
            }
        }
        debug_assert_eq!(self.mul(&e, &e), e);
        Some(e)
    }

    fn center(&self) -> Vec<Vec<Rat>> {
        // [x, b_j] = 0 for all j: rows indexed by (j, coordinate)
        let mut rows = Vec::new();
        for j in 0..self.dim {
            let mut ej = vec![Rat::zero(); self.dim];
            ej[j] = Rat::one();
            for coord in 0..self.dim {
                let mut row = Vec::with_capacity(self.dim);
                for i in 0..self.dim {
                    let mut ei = vec![Rat::zero(); self.dim];
                    ei[i] = Rat::one();
                    let comm = &self.mul(&ei, &ej)[coord] - &self.mul(&ej, &ei)[coord];
                    row.push(comm);
                }
                rows.push(row);
            }
        }
        Mat::from_rows(rows).kernel_basis()
    }

    fn split_or_certify(&self, alg: &Algebra, rng: &mut ChaCha8Rng) -> Result<SplitOutcome> {
        if self.dim == 1 {
            return Ok(SplitOutcome::Local);
        }
        // generic elements of the quotient
        for attempt in 0..FITTING_ATTEMPTS {
            let coords = sample_coords(rng, self.dim, attempt);
            if let Some(e) = self.try_split_element(alg, &coords)? {
                return Ok(SplitOutcome::Idempotent(e));
            }
        }
        // the center decides the division-algebra question
        let center = self.center();
        let cdim = center.len();
        let mut certified_field = false;
        for attempt in 0..FITTING_ATTEMPTS {
            let weights = sample_coords(rng, cdim, attempt);
            let mut c = vec![Rat::zero(); self.dim];
            for (w, cb) in weights.iter().zip(&center) {
                for (x, v) in c.iter_mut().zip(cb) {
                    *x += v * w;
                }
            }
            if let Some(e) = self.try_split_element(alg, &c)? {
                return Ok(SplitOutcome::Idempotent(e));
            }
            let mp = self.min_poly_of(&c);
            if mp.degree() == cdim && crate::exactla::poly::is_irreducible(&mp)? {
                certified_field = true;
                break;
            }
        }
        if certified_field && self.dim == cdim {
            // S equals its center, a field: division algebra
            return Ok(SplitOutcome::Local);
        }
        // last resort: scan basis elements and their pairwise products
        for i in 0..self.dim {
            for j in 0..=i {
                let mut ei = vec![Rat::zero(); self.dim];
                ei[i] = Rat::one();
                let mut ej = vec![Rat::zero(); self.dim];
                ej[j] = Rat::one();
                let p = self.mul(&ei, &ej);
                for cand in [&ei, &p] {
                    if cand.iter().all(|x| x.is_zero()) {
                        continue;
                    }
                    if let Some(e) = self.try_split_element(alg, cand)? {
                        return Ok(SplitOutcome::Idempotent(e));
                    }
                }
            }
        }
        if certified_field {
            // noncommutative over a certified central field; a genuine division
            // algebra is out of scope, so refuse rather than mislabel
            return Err(Error::UnresolvedEnd);
        }
        Err(Error::UnresolvedEnd)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn j2() -> Mat {
        Mat::from_i64(vec![vec![0, 1], vec![0, 0]])
    }

    #[test]
    fn rank_profile_identity() {
        let (r, k, im) = rank_profile(&Mat::identity(2));
        assert_eq!(r, 2);
        assert!(k.is_empty());
        assert_eq!(im.len(), 2);
    }

    #[test]
    fn rank_profile_zero() {
        let (r, k, im) = rank_profile(&Mat::zeros(2, 2));
        assert_eq!(r, 0);
        assert_eq!(k.len(), 2);
        assert!(im.is_empty());
    }

    #[test]
    fn rank_profile_rank_one() {
        let m = Mat::from_i64(vec![vec![1, 2], vec![2, 4]]);
        let (r, k, im) = rank_profile(&m);
        assert_eq!((r, k.len(), im.len()), (1, 1, 1));
        // kernel spans (2, -1) up to scale
        let v = &k[0];
        assert!((&v[0] * rat(-1)) == &v[1] * rat(2));
        assert_eq!(im[0], vec![rat(1), rat(2)]);
    }

    #[test]
    fn min_poly_examples() {
        assert_eq!(
            min_poly(&Mat::identity(3)).unwrap(),
            Poly::from_i64(vec![-1, 1])
        );
        assert_eq!(min_poly(&j2()).unwrap(), Poly::from_i64(vec![0, 0, 1]));
        let d = Mat::from_i64(vec![vec![1, 0], vec![0, 2]]);
        assert_eq!(min_poly(&d).unwrap(), Poly::from_i64(vec![2, -3, 1]));
    }

    #[test]
    fn min_poly_rejects_non_square() {
        assert!(min_poly(&Mat::zeros(2, 3)).is_err());
    }

    #[test]
    fn primary_decomposition_diag() {
        let d = Mat::from_i64(vec![vec![1, 0], vec![0, 2]]);
        let parts = primary_decomposition(&d).unwrap();
        assert_eq!(parts.len(), 2);
        assert!(parts.iter().all(|(_, b)| b.len() == 1));
    }

    #[test]
    fn primary_decomposition_single_factor() {
        let parts = primary_decomposition(&j2()).unwrap();
        assert_eq!(parts.len(), 1);
        assert_eq!(parts[0].1.len(), 2);
        let d = Mat::identity(2);
        let parts = primary_decomposition(&d).unwrap();
        assert_eq!(parts.len(), 1);
    }

    #[test]
    fn radical_examples() {
        // span{I}: radical 0
        assert!(radical(&[Mat::identity(2)]).unwrap().is_empty());
        // span{I, J}: radical spanned by J
        let r = radical(&[Mat::identity(2), j2()]).unwrap();
        assert_eq!(r.len(), 1);
        assert!(r[0].mul(&r[0]).is_zero());
        // full 2x2 matrix algebra: semisimple
        let full = vec![
            Mat::from_i64(vec![vec![1, 0], vec![0, 0]]),
            Mat::from_i64(vec![vec![0, 1], vec![0, 0]]),
            Mat::from_i64(vec![vec![0, 0], vec![1, 0]]),
            Mat::from_i64(vec![vec![0, 0], vec![0, 1]]),
        ];
        assert!(radical(&full).unwrap().is_empty());
    }

    #[test]
    fn radical_rejects_unclosed() {
        // span{I, E12 + E21-ish non-closed set}: {I, [[0,1],[1,0]]} is closed
        // (square is I), so use a genuinely non-closed pair instead.
        let bad = vec![Mat::identity(2), Mat::from_i64(vec![vec![0, 1], vec![0, 1]])];
        // (E12+E22)^2 = [[0,1],[0,1]] is in span; craft one that fails:
        let bad2 = vec![Mat::identity(3), Mat::from_i64(vec![vec![0,1,0],vec![0,0,1],vec![0,0,0]])];
        // J^2 = E13 not in span{I, J}
        assert!(radical(&bad2).is_err());
        let _ = bad;
    }

    #[test]
    fn idempotent_local_cases() {
        match find_splitting_idempotent(&[Mat::identity(2)], 0).unwrap() {
            SplitOutcome::Local => {}
            _ => panic!("span{{I}} is local"),
        }
        // Q[x]/(x^2+1) embedded as rotation matrices: a field, hence local
        let rot = Mat::from_i64(vec![vec![0, -1], vec![1, 0]]);
        match find_splitting_idempotent(&[Mat::identity(2), rot], 0).unwrap() {
            SplitOutcome::Local => {}
            _ => panic!("Q(i) is local"),
        }
    }

    #[test]
    fn idempotent_split_diag() {
        let e11 = Mat::from_i64(vec![vec![1, 0], vec![0, 0]]);
        match find_splitting_idempotent(&[Mat::identity(2), e11.clone()], 0).unwrap() {
            SplitOutcome::Idempotent(e) => {
                assert_eq!(e.mul(&e), e);
                assert!(!e.is_zero() && e != Mat::identity(2));
            }
            _ => panic!("diag algebra splits"),
        }
    }

    #[test]
    fn idempotent_split_with_radical() {
        // upper triangular 2x2: I, E11, E12; quotient is Q x Q
        let basis = vec![
            Mat::identity(2),
            Mat::from_i64(vec![vec![1, 0], vec![0, 0]]),
            j2(),
        ];
        match find_splitting_idempotent(&basis, 0).unwrap() {
            SplitOutcome::Idempotent(e) => assert_eq!(e.mul(&e), e),
            _ => panic!("triangular algebra splits"),
        }
    }

    #[test]
    fn isotypic_matrix_algebra_splits() {
        // M_2(Q) itself: must find an idempotent, never report local
        let full = vec![
            Mat::from_i64(vec![vec![1, 0], vec![0, 0]]),
            Mat::from_i64(vec![vec![0, 1], vec![0, 0]]),
            Mat::from_i64(vec![vec![0, 0], vec![1, 0]]),
            Mat::from_i64(vec![vec![0, 0], vec![0, 1]]),
        ];
        match find_splitting_idempotent(&full, 7).unwrap() {
            SplitOutcome::Idempotent(e) => assert_eq!(e.mul(&e), e),
            _ => panic!("M_2(Q) is not local"),
        }
    }
}
