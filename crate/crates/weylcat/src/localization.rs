//! Localization and twisted localization of weight modules.
//!
//! A direction names one generator per coordinate (t_i or d_i). Localizing a
//! module at a direction makes that generator act bijectively; on quiver
//! data this is the face formula: keep the face the generator maps onto and
//! extend back across the seam with an identity edge. Twisting shifts the
//! block's fractional part; non-integral shifts move coordinates in and out
//! of the integral set. The conjugation operator theta realizes the twisted
//! action on the localized algebra itself.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::blocks::{dual, BlockId, WeightModule};
use crate::error::{Error, Result};
use crate::exactla::Mat;
use crate::quiver::Dir;
use crate::rat::{binom, frac_mod_one, is_integer, rat, Rat};
use crate::weyl::WeylElement;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Side {
    T,
    D,
}

/// A localization direction: one side of one coordinate (0-based).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Direction {
    pub coord: usize,
    pub side: Side,
}

impl Direction {
    pub fn t(coord: usize) -> Direction {
        Direction { coord, side: Side::T }
    }

    pub fn d(coord: usize) -> Direction {
        Direction { coord, side: Side::D }
    }

    pub fn display(&self) -> String {
        match self.side {
            Side::T => format!("t{}", self.coord + 1),
            Side::D => format!("d{}", self.coord + 1),
        }
    }

    fn generator(&self, n: usize) -> WeylElement {
        match self.side {
            Side::T => WeylElement::t(n, self.coord + 1),
            Side::D => WeylElement::d(n, self.coord + 1),
        }
    }

    /// The generator raised to an integer power (negative allowed).
    fn generator_pow(&self, n: usize, e: i64) -> WeylElement {
        let mut a = vec![0i64; n];
        let mut b = vec![0i64; n];
        match self.side {
            Side::T => a[self.coord] = e,
            Side::D => b[self.coord] = e,
        }
        WeylElement::monomial(n, &a, &b, rat(1))
    }
}

/// Validate a direction set: at most one side per coordinate.
pub fn check_directions(gamma: &[Direction]) -> Result<()> {
    let mut seen = BTreeMap::new();
    for d in gamma {
        if seen.insert(d.coord, d.side).is_some() {
            return Err(Error::DuplicateDirection(d.coord + 1));
        }
    }
    Ok(())
}

/// An element of the localized algebra: negative exponents may appear only
/// in the active directions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentWeylElement {
    pub elem: WeylElement,
    pub dirs: Vec<Direction>,
}

impl LaurentWeylElement {
    pub fn new(elem: WeylElement, dirs: Vec<Direction>) -> Result<LaurentWeylElement> {
        check_directions(&dirs)?;
        for ((a, b), _) in elem.terms() {
            for i in 0..elem.vars() {
                let side = dirs.iter().find(|d| d.coord == i).map(|d| d.side);
                if a[i] < 0 && side != Some(Side::T) {
                    return Err(Error::NotBijective(format!("t{}", i + 1)));
                }
                if b[i] < 0 && side != Some(Side::D) {
                    return Err(Error::NotBijective(format!("d{}", i + 1)));
                }
            }
        }
        Ok(LaurentWeylElement { elem, dirs })
    }
}

/// The conjugation series: for a single direction with generator f and
/// rational parameter x,
///     theta_x(u) = sum_i (x choose i) ad(f)^i(u) f^(-i),
/// which is a finite sum since ad(f) is locally nilpotent. For several
/// directions the operators compose (the generators commute). For integer x
/// this is conjugation f^x u f^(-x).
pub fn theta(u: &WeylElement, gamma: &[Direction], x: &[Rat]) -> Result<LaurentWeylElement> {
    check_directions(gamma)?;
    if gamma.len() != x.len() {
        return Err(Error::DimMismatch(format!(
            "{} directions but {} parameters",
            gamma.len(),
            x.len()
        )));
    }
    let n = u.vars();
    let mut acc = u.clone();
    for (dir, xi) in gamma.iter().zip(x) {
        let f = dir.generator(n);
        let mut sum = WeylElement::zero(n);
        let mut ad_power = acc.clone();
        let mut i = 0usize;
        while !ad_power.is_zero() {
            let coef = binom(xi, i);
            if !coef.is_zero() {
                let shifted = ad_power.multiply(&dir.generator_pow(n, -(i as i64)))?;
                sum = sum.add(&shifted.scale(&coef))?;
            }
            ad_power = f.commutator(&ad_power)?;
            i += 1;
            if i > 10_000 {
                return Err(Error::DimMismatch(
                    "theta series failed to terminate".into(),
                ));
            }
        }
        acc = sum;
    }
    LaurentWeylElement::new(acc, gamma.to_vec())
}

/// Explicit conjugation f^m u f^(-m) for integer m; the reference point for
/// theta's integer specialization.
pub fn integer_conjugation(
    u: &WeylElement,
    gamma: &[Direction],
    m: &[i64],
) -> Result<LaurentWeylElement> {
    check_directions(gamma)?;
    let n = u.vars();
    let mut acc = u.clone();
    for (dir, &mi) in gamma.iter().zip(m) {
        let left = dir.generator_pow(n, mi);
        let right = dir.generator_pow(n, -mi);
        acc = left.multiply(&acc)?.multiply(&right)?;
    }
    LaurentWeylElement::new(acc, gamma.to_vec())
}

fn is_direction_bijective(m: &WeightModule, dir: &Direction) -> bool {
    match m.block.integral_pos(dir.coord) {
        None => true,
        Some(j) => {
            let want = match dir.side {
                Side::T => Dir::T,
                Side::D => Dir::D,
            };
            m.rep
                .arrows()
                .iter()
                .filter(|a| a.coord == j && a.dir == want)
                .all(|a| m.rep.map(a).is_invertible())
        }
    }
}

pub fn is_gamma_bijective(m: &WeightModule, gamma: &[Direction]) -> bool {
    gamma.iter().all(|d| is_direction_bijective(m, d))
}

/// Localization D_Gamma on quiver data (the face formula): for each integral
/// localized coordinate keep the face the generator maps onto, then extend
/// back across the seam with an identity edge for the generator and a zero
/// edge for its partner. Torsion (the part killed by iterating the
/// generator) dies. Directions already acting bijectively are untouched.
pub fn localize(m: &WeightModule, gamma: &[Direction]) -> Result<WeightModule> {
    check_directions(gamma)?;
    let mut rep = m.rep.clone();
    for dir in gamma {
        let Some(j) = m.block.integral_pos(dir.coord) else {
            continue; // non-integral coordinates are already bijective
        };
        let one = Mat::identity(1);
        let zero = Mat::zeros(1, 1);
        match dir.side {
            Side::T => {
                // keep the 0 face, new t-edge identity, d-edge zero
                let face = rep.face(j, false);
                rep = face.insert_coordinate(j, 1, 1, &one, &zero);
            }
            Side::D => {
                let face = rep.face(j, true);
                rep = face.insert_coordinate(j, 1, 1, &zero, &one);
            }
        }
    }
    WeightModule::new(m.block.clone(), rep)
}

/// The support-shift twist Phi: shifts the block's fractional part by x_i in
/// each direction's coordinate. Requires the module to be bijective in every
/// direction (localize first). Integer shifts leave the data unchanged;
/// non-integral shifts move the coordinate out of (or into) the integral
/// set, with the quiver data restricted to (or extended from) the face the
/// direction trivializes.
pub fn twist(m: &WeightModule, gamma: &[Direction], x: &[Rat]) -> Result<WeightModule> {
    check_directions(gamma)?;
    if gamma.len() != x.len() {
        return Err(Error::DimMismatch(format!(
            "{} directions but {} twist parameters",
            gamma.len(),
            x.len()
        )));
    }
    for dir in gamma {
        if !is_direction_bijective(m, dir) {
            return Err(Error::NotBijective(dir.display()));
        }
    }
    let n = m.n();
    let mut frac = m.block.frac().to_vec();
    let mut rep = m.rep.clone();
    // track the integral set as it evolves
    let mut integral: Vec<usize> = m.block.integral_set();
    for (dir, xi) in gamma.iter().zip(x) {
        if xi.is_zero() || is_integer(xi) {
            continue;
        }
        let i = dir.coord;
        let new_frac = frac_mod_one(&(&frac[i] + xi));
        match integral.iter().position(|&c| c == i) {
            Some(j) => {
                // leaves the integral set: restrict to the trivialized face
                debug_assert!(!new_frac.is_zero());
                let keep_bit = match dir.side {
                    Side::T => false,
                    Side::D => true,
                };
                rep = rep.face(j, keep_bit);
                integral.remove(j);
                frac[i] = new_frac;
            }
            None => {
                if new_frac.is_zero() {
                    // enters the integral set
                    let j = integral.iter().filter(|&&c| c < i).count();
                    let one = Mat::identity(1);
                    let zero = Mat::zeros(1, 1);
                    rep = match dir.side {
                        Side::T => rep.insert_coordinate(j, 1, 1, &one, &zero),
                        Side::D => rep.insert_coordinate(j, 1, 1, &zero, &one),
                    };
                    integral.insert(j, i);
                }
                frac[i] = new_frac;
            }
        }
    }
    WeightModule::new(BlockId::new(n, frac)?, rep)
}

/// Twisted localization: localize, then twist the support by x.
pub fn twisted_localize(m: &WeightModule, gamma: &[Direction], x: &[Rat]) -> Result<WeightModule> {
    twist(&localize(m, gamma)?, gamma, x)
}

fn simple_corner(m: &WeightModule) -> Result<usize> {
    let nonzero: Vec<usize> = (0..m.rep.dims.len()).filter(|&v| m.rep.dims[v] > 0).collect();
    if nonzero.len() == 1 && m.rep.dims[nonzero[0]] == 1 {
        Ok(nonzero[0])
    } else {
        Err(Error::NotSimple)
    }
}

/// The direction set on which a simple acts injectively: side t where the
/// corner sits at 0, side d where it sits at -1.
pub fn injective_directions(l: &WeightModule) -> Result<Vec<Direction>> {
    let corner = simple_corner(l)?;
    let mut out = Vec::new();
    for (j, &i) in l.block.integral_set().iter().enumerate() {
        let side = if corner & (1 << j) == 0 { Side::T } else { Side::D };
        out.push(Direction { coord: i, side });
    }
    Ok(out)
}

/// Injective hull of a simple: localize along its injective directions.
pub fn injective_hull(l: &WeightModule) -> Result<WeightModule> {
    let gamma = injective_directions(l)?;
    localize(l, &gamma)
}

/// Projective cover of a simple: the dual of the injective hull of the dual.
pub fn projective_cover(l: &WeightModule) -> Result<WeightModule> {
    Ok(dual(&injective_hull(&dual(l))?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::blocks::{socle_series, std_module, weight_multiplicity, StdKind};
    use crate::rat::ratio;

    fn f0() -> WeightModule {
        std_module(StdKind::F, &[rat(0)]).unwrap()
    }

    fn l0() -> WeightModule {
        std_module(StdKind::L, &[rat(0)]).unwrap()
    }

    fn lm1() -> WeightModule {
        std_module(StdKind::L, &[rat(-1)]).unwrap()
    }

    #[test]
    fn theta_central_like() {
        // u = t1 commutes with the localized generator t1
        let u = WeylElement::t(1, 1);
        let r = theta(&u, &[Direction::t(0)], &[ratio(1, 2)]).unwrap();
        assert_eq!(r.elem, u);
    }

    #[test]
    fn theta_on_d_with_x_one() {
        // t d t^{-1} = d - t^{-1}
        let u = WeylElement::d(1, 1);
        let r = theta(&u, &[Direction::t(0)], &[rat(1)]).unwrap();
        let expected = u
            .sub(&WeylElement::monomial(1, &[-1], &[0], rat(1)))
            .unwrap();
        assert_eq!(r.elem, expected);
        // must agree with the explicit conjugation
        let conj = integer_conjugation(&u, &[Direction::t(0)], &[1]).unwrap();
        assert_eq!(r.elem, conj.elem);
    }

    #[test]
    fn theta_zero_is_identity() {
        let u = crate::weyl::parse(1, "t1^2*d1 + 3*t1").unwrap();
        let r = theta(&u, &[Direction::t(0)], &[rat(0)]).unwrap();
        assert_eq!(r.elem, u);
    }

    #[test]
    fn theta_integer_specialization() {
        let u = crate::weyl::parse(1, "t1*d1^2 + d1").unwrap();
        for m in -2i64..=2 {
            let a = theta(&u, &[Direction::t(0)], &[rat(m)]).unwrap();
            let b = integer_conjugation(&u, &[Direction::t(0)], &[m]).unwrap();
            assert_eq!(a.elem, b.elem, "mismatch at m = {m}");
        }
    }

    #[test]
    fn theta_is_multiplicative() {
        let u = crate::weyl::parse(1, "t1*d1").unwrap();
        let v = crate::weyl::parse(1, "d1^2 + t1").unwrap();
        let g = [Direction::t(0)];
        let x = [ratio(1, 3)];
        let uv = u.multiply(&v).unwrap();
        let lhs = theta(&uv, &g, &x).unwrap();
        let rhs = theta(&u, &g, &x)
            .unwrap()
            .elem
            .multiply(&theta(&v, &g, &x).unwrap().elem)
            .unwrap();
        assert_eq!(lhs.elem, rhs);
    }

    #[test]
    fn laurent_guard() {
        let bad = WeylElement::monomial(1, &[-1], &[0], rat(1));
        assert!(LaurentWeylElement::new(bad.clone(), vec![]).is_err());
        assert!(LaurentWeylElement::new(bad, vec![Direction::t(0)]).is_ok());
    }

    #[test]
    fn localize_examples() {
        // D_t L(0) = F(0)
        let d = localize(&l0(), &[Direction::t(0)]).unwrap();
        assert_eq!(d.rep, f0().rep);
        // D_t L(-1) = 0
        let d = localize(&lm1(), &[Direction::t(0)]).unwrap();
        assert!(d.is_zero());
        // D_t F(0) = F(0)
        let d = localize(&f0(), &[Direction::t(0)]).unwrap();
        assert_eq!(d.rep, f0().rep);
        // D_d L(-1) = P(0)
        let d = localize(&lm1(), &[Direction::d(0)]).unwrap();
        assert_eq!(d.rep, std_module(StdKind::P, &[rat(0)]).unwrap().rep);
    }

    #[test]
    fn twist_requires_bijectivity() {
        assert!(twist(&l0(), &[Direction::t(0)], &[ratio(1, 2)]).is_err());
    }

    #[test]
    fn twist_f0_to_f_half() {
        let t = twist(&f0(), &[Direction::t(0)], &[ratio(1, 2)]).unwrap();
        let fh = std_module(StdKind::F, &[ratio(1, 2)]).unwrap();
        assert_eq!(t, fh);
        // integer twists change nothing
        let t = twist(&f0(), &[Direction::t(0)], &[rat(3)]).unwrap();
        assert_eq!(t, f0());
        // twist and untwist compose to the identity
        let fwd = twist(&f0(), &[Direction::t(0)], &[ratio(1, 2)]).unwrap();
        let back = twist(&fwd, &[Direction::t(0)], &[ratio(-1, 2)]).unwrap();
        assert_eq!(back, f0());
    }

    #[test]
    fn twisted_localize_l0() {
        let t = twisted_localize(&l0(), &[Direction::t(0)], &[ratio(1, 2)]).unwrap();
        let fh = std_module(StdKind::F, &[ratio(1, 2)]).unwrap();
        assert_eq!(t, fh);
        for k in -3i64..=3 {
            assert_eq!(
                weight_multiplicity(&t, &[ratio(1, 2) + rat(k)]),
                1
            );
        }
        // x = 0 is plain localization
        let t = twisted_localize(&l0(), &[Direction::t(0)], &[rat(0)]).unwrap();
        assert_eq!(t.rep, f0().rep);
    }

    #[test]
    fn hull_and_cover_rank_one() {
        let hull = injective_hull(&l0()).unwrap();
        assert_eq!(hull.rep, f0().rep);
        let cover = projective_cover(&l0()).unwrap();
        assert_eq!(cover.rep, std_module(StdKind::P, &[rat(0)]).unwrap().rep);
        // socle of the hull is the simple itself
        let layers = socle_series(&hull);
        assert_eq!(layers[0], std::collections::BTreeMap::from([(0usize, 1)]));
    }

    #[test]
    fn hull_of_k0_simple_is_itself() {
        let s = std_module(StdKind::F, &[ratio(1, 3)]).unwrap();
        let hull = injective_hull(&s).unwrap();
        assert_eq!(hull, s);
        let cover = projective_cover(&s).unwrap();
        assert_eq!(cover, s);
    }

    #[test]
    fn cover_rejects_non_simple() {
        assert!(injective_hull(&f0()).is_err());
    }

    #[test]
    fn twist_enters_integral_set() {
        // F(1/2) twisted by 1/2 along t becomes F(0)
        let fh = std_module(StdKind::F, &[ratio(1, 2)]).unwrap();
        let t = twist(&fh, &[Direction::t(0)], &[ratio(1, 2)]).unwrap();
        assert_eq!(t.rep, f0().rep);
        assert_eq!(t.block, f0().block);
    }
}
