//! The oscillator realization of sp(2n) inside the even part of the Weyl
//! algebra, and the symplectic view of weight-module supports.
//!
//! An element of sp(2n) is a block matrix [[A, B], [C, -A^t]] with B, C
//! symmetric. The realization sends
//!     A |-> sum a_ij (t_i d_j + 1/2 delta_ij)
//!     B |-> 1/2 sum b_ij t_i t_j
//!     C |-> -1/2 sum c_ij d_i d_j
//! (full double sums over symmetric matrices). The half-shift on the Cartan
//! is what places the lowest weight of the even-function module at
//! (1/2, ..., 1/2): an A_n-weight mu corresponds to the sp-weight mu + 1/2.


use num_traits::Zero;

use crate::blocks::{weight_multiplicity, WeightModule};
use crate::error::{Error, Result};
use crate::exactla::Mat;
use crate::localization;
use crate::rat::{rat, ratio, Rat};
use crate::weyl::WeylElement;

/// An element of sp(2n) in block form; B and C are symmetric n x n.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpElement {
    pub n: usize,
    pub a: Mat,
    pub b: Mat,
    pub c: Mat,
}

/// A weight in the epsilon-basis of the symplectic Cartan dual.
pub type SpWeight = Vec<Rat>;

impl SpElement {
    pub fn new(n: usize, a: Mat, b: Mat, c: Mat) -> Result<SpElement> {
        for (name, m) in [("A", &a), ("B", &b), ("C", &c)] {
            if m.rows() != n || m.cols() != n {
                return Err(Error::DimMismatch(format!("{name} block must be {n}x{n}")));
            }
        }
        if b != b.transpose() || c != c.transpose() {
            return Err(Error::DimMismatch("B and C blocks must be symmetric".into()));
        }
        Ok(SpElement { n, a, b, c })
    }

    pub fn zero(n: usize) -> SpElement {
        SpElement {
            n,
            a: Mat::zeros(n, n),
            b: Mat::zeros(n, n),
            c: Mat::zeros(n, n),
        }
    }

    /// The full 2n x 2n matrix [[A, B], [C, -A^t]].
    pub fn to_full(&self) -> Mat {
        let n = self.n;
        Mat::from_fn(2 * n, 2 * n, |r, c| {
            if r < n && c < n {
                self.a[(r, c)].clone()
            } else if r < n {
                self.b[(r, c - n)].clone()
            } else if c < n {
                self.c[(r - n, c)].clone()
            } else {
                -self.a[(c - n, r - n)].clone()
            }
        })
    }

    pub fn from_full(n: usize, m: &Mat) -> Result<SpElement> {
        if m.rows() != 2 * n || m.cols() != 2 * n {
            return Err(Error::DimMismatch(format!(
                "expected a {0}x{0} matrix",
                2 * n
            )));
        }
        let a = Mat::from_fn(n, n, |r, c| m[(r, c)].clone());
        let b = Mat::from_fn(n, n, |r, c| m[(r, c + n)].clone());
        let c_blk = Mat::from_fn(n, n, |r, c| m[(r + n, c)].clone());
        // the lower-right block must be -A^t
        for r in 0..n {
            for c in 0..n {
                if m[(r + n, c + n)] != -a[(c, r)].clone() {
                    return Err(Error::DimMismatch(
                        "matrix does not lie in sp(2n)".into(),
                    ));
                }
            }
        }
        SpElement::new(n, a, b, c_blk)
    }

    pub fn bracket(&self, other: &SpElement) -> Result<SpElement> {
        if self.n != other.n {
            return Err(Error::VarMismatch(self.n, other.n));
        }
        let x = self.to_full();
        let y = other.to_full();
        let comm = x.mul(&y).sub(&y.mul(&x));
        SpElement::from_full(self.n, &comm)
    }

    pub fn scale(&self, s: &Rat) -> SpElement {
        SpElement {
            n: self.n,
            a: self.a.scale(s),
            b: self.b.scale(s),
            c: self.c.scale(s),
        }
    }

    pub fn add(&self, other: &SpElement) -> SpElement {
        SpElement {
            n: self.n,
            a: self.a.add(&other.a),
            b: self.b.add(&other.b),
            c: self.c.add(&other.c),
        }
    }
}

/// A basis of sp(2n): the gl_n part (E_ij in the A block) and the symmetric
/// generators of the B and C blocks.
pub fn sp_basis(n: usize) -> Vec<SpElement> {
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let mut a = Mat::zeros(n, n);
            a[(i, j)] = rat(1);
            out.push(SpElement {
                n,
                a,
                b: Mat::zeros(n, n),
                c: Mat::zeros(n, n),
            });
        }
    }
    for pick_b in [true, false] {
        for i in 0..n {
            for j in i..n {
                let mut s = Mat::zeros(n, n);
                s[(i, j)] = rat(1);
                s[(j, i)] = rat(1);
                if i == j {
                    s[(i, i)] = rat(1);
                }
                let (b, c) = if pick_b {
                    (s, Mat::zeros(n, n))
                } else {
                    (Mat::zeros(n, n), s)
                };
                out.push(SpElement {
                    n,
                    a: Mat::zeros(n, n),
                    b,
                    c,
                });
            }
        }
    }
    out
}

/// The Lie algebra map into A_n; its image is the even subalgebra.
pub fn omega(x: &SpElement) -> WeylElement {
    let n = x.n;
    let mut out = WeylElement::zero(n);
    let half = ratio(1, 2);
    for i in 0..n {
        for j in 0..n {
            let aij = &x.a[(i, j)];
            if !aij.is_zero() {
                let td = WeylElement::t(n, i + 1)
                    .multiply(&WeylElement::d(n, j + 1))
                    .unwrap();
                out = out.add(&td.scale(aij)).unwrap();
                if i == j {
                    out = out
                        .add(&WeylElement::scalar(n, aij * &half))
                        .unwrap();
                }
            }
            let bij = &x.b[(i, j)];
            if !bij.is_zero() {
                let tt = WeylElement::t(n, i + 1)
                    .multiply(&WeylElement::t(n, j + 1))
                    .unwrap();
                out = out.add(&tt.scale(&(bij * &half))).unwrap();
            }
            let cij = &x.c[(i, j)];
            if !cij.is_zero() {
                let dd = WeylElement::d(n, i + 1)
                    .multiply(&WeylElement::d(n, j + 1))
                    .unwrap();
                out = out.add(&dd.scale(&(-cij * &half))).unwrap();
            }
        }
    }
    out
}

/// Which of the two even-sublattice cosets of a block's support to view.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Coset {
    Even,
    Odd,
}

impl Coset {
    pub fn parity(self) -> i64 {
        match self {
            Coset::Even => 0,
            Coset::Odd => 1,
        }
    }
}

/// The sp-weight of an A_n-weight: the uniform half shift.
pub fn sp_weight_of(mu: &[Rat]) -> SpWeight {
    mu.iter().map(|x| x + ratio(1, 2)).collect()
}

/// Multiplicity table over sp-weights for one even-coset of the module's
/// support, on the box of offsets prod [lo_i, hi_i].
pub fn sp_support(
    m: &WeightModule,
    coset: Coset,
    lo: &[i64],
    hi: &[i64],
) -> Result<Vec<(SpWeight, usize)>> {
    let n = m.n();
    if lo.len() != n || hi.len() != n {
        return Err(Error::DimMismatch("box bounds must have length n".into()));
    }
    let mut out = Vec::new();
    let mut offsets = vec![vec![]];
    for i in 0..n {
        let mut next = Vec::new();
        for p in &offsets {
            for v in lo[i]..=hi[i] {
                let mut q: Vec<i64> = p.clone();
                q.push(v);
                next.push(q);
            }
        }
        offsets = next;
    }
    for off in offsets {
        if off.iter().sum::<i64>().rem_euclid(2) != coset.parity() {
            continue;
        }
        let mu: Vec<Rat> = (0..n).map(|i| &m.block.frac()[i] + rat(off[i])).collect();
        let mult = weight_multiplicity(m, &mu);
        if mult > 0 {
            out.push((sp_weight_of(&mu), mult));
        }
    }
    out.sort();
    Ok(out)
}

/// sp_support with the coset named by a representative weight; errors when
/// the weight lies outside the module's block.
pub fn sp_support_at(
    m: &WeightModule,
    gamma: &[Rat],
    lo: &[i64],
    hi: &[i64],
) -> Result<Vec<(SpWeight, usize)>> {
    let n = m.n();
    if gamma.len() != n {
        return Err(Error::DimMismatch("coset representative must have length n".into()));
    }
    let mut parity = 0i64;
    for i in 0..n {
        let diff = gamma[i].clone() - m.block.frac()[i].clone();
        if !crate::rat::is_integer(&diff) {
            return Err(Error::CosetOutsideBlock);
        }
        if diff.numer() % num_bigint::BigInt::from(2) != num_bigint::BigInt::from(0) {
            parity += 1;
        }
    }
    let coset = if parity.rem_euclid(2) == 0 { Coset::Even } else { Coset::Odd };
    sp_support(m, coset, lo, hi)
}

/// Projective covers on the symplectic side exist only in rank at least two.
pub fn sp_projective_cover(l: &WeightModule) -> Result<WeightModule> {
    if l.n() < 2 {
        return Err(Error::SpRankOne);
    }
    localization::projective_cover(l)
}

/// Injective hulls on the symplectic side exist only in rank at least two.
pub fn sp_injective_hull(l: &WeightModule) -> Result<WeightModule> {
    if l.n() < 2 {
        return Err(Error::SpRankOne);
    }
    localization::injective_hull(l)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::blocks::{std_module, StdKind};
    use crate::weyl::parse;

    #[test]
    fn sp2_images() {
        // e = B-generator E11: t^2/2; f = C-generator: -d^2/2; h: t d + 1/2
        let basis = sp_basis(1);
        assert_eq!(basis.len(), 3);
        let h = omega(&basis[0]);
        let e = omega(&basis[1]);
        let f = omega(&basis[2]);
        assert_eq!(h, parse(1, "t1*d1 + 1/2").unwrap());
        assert_eq!(e, parse(1, "1/2*t1^2").unwrap());
        assert_eq!(f, parse(1, "-1/2*d1^2").unwrap());
    }

    #[test]
    fn bracket_preserved_sp2() {
        let basis = sp_basis(1);
        for x in &basis {
            for y in &basis {
                let lhs = omega(&x.bracket(y).unwrap());
                let rhs = omega(x).commutator(&omega(y)).unwrap();
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn bracket_preserved_sp4() {
        let basis = sp_basis(2);
        assert_eq!(basis.len(), 10);
        for x in &basis {
            for y in &basis {
                let lhs = omega(&x.bracket(y).unwrap());
                let rhs = omega(x).commutator(&omega(y)).unwrap();
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn images_are_even() {
        for x in sp_basis(2) {
            assert!(omega(&x).is_even());
        }
    }

    #[test]
    fn cartan_is_diagonal_shift() {
        // A = E_22 for n = 2: t2 d2 + 1/2
        let basis = sp_basis(2);
        // gl part is listed first, row-major: E_22 is index 3
        let h2 = omega(&basis[3]);
        assert_eq!(h2, parse(2, "t2*d2 + 1/2").unwrap());
    }

    #[test]
    fn weil_multiplicities() {
        // L(0) ⊗ L(0), even coset: multiplicity 1 on even-total offsets of
        // the positive quadrant, shifted to sp-weights (k+1/2, l+1/2)
        let m = std_module(StdKind::L, &[rat(0), rat(0)]).unwrap();
        let table = sp_support(&m, Coset::Even, &[-2, -2], &[3, 3]).unwrap();
        for (w, mult) in &table {
            assert_eq!(*mult, 1);
            assert!(w[0] >= ratio(1, 2) && w[1] >= ratio(1, 2));
            let total = (&w[0] - ratio(1, 2)) + (&w[1] - ratio(1, 2));
            assert!(crate::rat::is_integer(&total));
            assert!(total.numer() % 2 == num_bigint::BigInt::from(0));
        }
        assert!(table.contains(&(vec![ratio(1, 2), ratio(1, 2)], 1)));
        assert!(table.contains(&(vec![ratio(3, 2), ratio(3, 2)], 1)));
        assert!(!table.iter().any(|(w, _)| w == &vec![ratio(3, 2), ratio(1, 2)]));
    }

    #[test]
    fn free_module_coset_constant() {
        let m = std_module(StdKind::F, &[ratio(1, 2), ratio(1, 2)]).unwrap();
        for coset in [Coset::Even, Coset::Odd] {
            let table = sp_support(&m, coset, &[-2, -2], &[2, 2]).unwrap();
            assert!(table.iter().all(|(_, mult)| *mult == 1));
            // half of the 25 box points land in each coset
            assert_eq!(table.len(), if coset == Coset::Even { 13 } else { 12 });
        }
    }

    #[test]
    fn cosets_partition_support() {
        let m = std_module(StdKind::P, &[rat(0), rat(0)]).unwrap();
        let even = sp_support(&m, Coset::Even, &[-2, -2], &[2, 2]).unwrap();
        let odd = sp_support(&m, Coset::Odd, &[-2, -2], &[2, 2]).unwrap();
        assert_eq!(even.len() + odd.len(), 25);
        for (w, _) in &even {
            assert!(!odd.iter().any(|(v, _)| v == w));
        }
    }

    #[test]
    fn coset_membership_error() {
        let m = std_module(StdKind::F, &[ratio(1, 2)]).unwrap();
        assert!(sp_support_at(&m, &[ratio(1, 3)], &[-1], &[1]).is_err());
        assert!(sp_support_at(&m, &[ratio(3, 2)], &[-1], &[1]).is_ok());
    }

    #[test]
    fn rank_one_refusal() {
        let l = std_module(StdKind::L, &[rat(0)]).unwrap();
        assert!(matches!(sp_projective_cover(&l), Err(Error::SpRankOne)));
        assert!(matches!(sp_injective_hull(&l), Err(Error::SpRankOne)));
        // rank two works
        let l2 = std_module(StdKind::L, &[rat(0), rat(0)]).unwrap();
        assert!(sp_projective_cover(&l2).is_ok());
    }

    #[test]
    fn empty_window_empty_table() {
        let m = std_module(StdKind::L, &[rat(0), rat(0)]).unwrap();
        // a box entirely outside the support
        let table = sp_support(&m, Coset::Even, &[-5, -5], &[-1, -1]).unwrap();
        assert!(table.is_empty());
    }
}
