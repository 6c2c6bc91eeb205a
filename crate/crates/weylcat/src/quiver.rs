//! Bound cube quivers V_k and their representations.
//!
//! Vertices are the corners of a k-cube, encoded as bitmasks where bit i set
//! means coordinate i sits at -1 (and clear means 0). Every cube edge carries
//! both orientations: a t-arrow moves coordinate i from -1 to 0, a d-arrow
//! moves it back. Relations: every non-admissible path (one that moves some
//! coordinate back and forth) is zero, and any two admissible paths with the
//! same endpoints are equal. Checking these on paths of length two generates
//! the whole relation ideal.

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::exactla::{
    find_splitting_idempotent, poly::factor, Mat, Poly, SplitOutcome, Subspace,
};
use crate::rat::{rat, Rat};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Dir {
    /// from coordinate value -1 to 0
    T,
    /// from coordinate value 0 to -1
    D,
}

impl Dir {
    pub fn flip(self) -> Dir {
        match self {
            Dir::T => Dir::D,
            Dir::D => Dir::T,
        }
    }

    pub fn letter(self) -> char {
        match self {
            Dir::T => 't',
            Dir::D => 'd',
        }
    }
}

/// An arrow of V_k: moves coordinate `coord` at source corner `src`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Arrow {
    pub coord: usize,
    pub dir: Dir,
    pub src: usize,
}

impl Arrow {
    pub fn tgt(&self) -> usize {
        self.src ^ (1 << self.coord)
    }
}

/// The bound cube quiver V_k.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundQuiver {
    pub k: usize,
}

#[derive(Clone, Debug)]
pub enum Relation {
    /// coordinate round trip at a corner: the composite is zero
    RoundTrip { coord: usize, corner: usize },
    /// the two admissible routes across a square agree
    Square { i: usize, j: usize, corner: usize },
}

pub fn vk(k: usize) -> BoundQuiver {
    BoundQuiver { k }
}

impl BoundQuiver {
    pub fn num_vertices(&self) -> usize {
        1 << self.k
    }

    pub fn arrows(&self) -> Vec<Arrow> {
        let mut out = Vec::new();
        for src in 0..self.num_vertices() {
            for coord in 0..self.k {
                let dir = if src & (1 << coord) != 0 { Dir::T } else { Dir::D };
                out.push(Arrow { coord, dir, src });
            }
        }
        out
    }

    pub fn relations(&self) -> Vec<Relation> {
        let mut out = Vec::new();
        for corner in 0..self.num_vertices() {
            for coord in 0..self.k {
                out.push(Relation::RoundTrip { coord, corner });
            }
            for i in 0..self.k {
                for j in i + 1..self.k {
                    out.push(Relation::Square { i, j, corner });
                }
            }
        }
        out
    }

    /// Number of admissible path classes (including the lazy paths); exposed
    /// as the combinatorial oracle for endomorphism dimensions: a path moves
    /// each disagreeing coordinate exactly once, so classes correspond to
    /// ordered corner pairs.
    pub fn admissible_path_classes(&self) -> usize {
        self.num_vertices() * self.num_vertices()
    }
}

/// Render a corner as a bitstring, one char per coordinate, '1' meaning -1.
pub fn corner_string(k: usize, corner: usize) -> String {
    (0..k)
        .map(|i| if corner & (1 << i) != 0 { '1' } else { '0' })
        .collect()
}

/// A representation of V_k: one space per corner, one matrix per arrow.
/// Matrices are target-dim x source-dim and act on column vectors.
#[derive(Clone, PartialEq, Eq)]
pub struct Rep {
    pub k: usize,
    pub dims: Vec<usize>,
    maps: BTreeMap<Arrow, Mat>,
}

impl std::fmt::Debug for Rep {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Rep(V_{}, dims {:?})", self.k, self.dims)
    }
}

impl Rep {
    pub fn new(k: usize, dims: Vec<usize>, maps: BTreeMap<Arrow, Mat>) -> Result<Rep> {
        if dims.len() != 1 << k {
            return Err(Error::DimMismatch(format!(
                "expected {} vertex dimensions, got {}",
                1 << k,
                dims.len()
            )));
        }
        let mut full = BTreeMap::new();
        for a in vk(k).arrows() {
            let m = maps
                .get(&a)
                .cloned()
                .unwrap_or_else(|| Mat::zeros(dims[a.tgt()], dims[a.src]));
            if m.rows() != dims[a.tgt()] || m.cols() != dims[a.src] {
                return Err(Error::DimMismatch(format!(
                    "edge {},{},{} must be {}x{}, got {}x{}",
                    a.coord + 1,
                    a.dir.letter(),
                    corner_string(k, a.src),
                    dims[a.tgt()],
                    dims[a.src],
                    m.rows(),
                    m.cols()
                )));
            }
            full.insert(a, m);
        }
        Ok(Rep { k, dims, maps: full })
    }

    /// The zero representation.
    pub fn zero(k: usize) -> Rep {
        Rep::new(k, vec![0; 1 << k], BTreeMap::new()).unwrap()
    }

    /// One-dimensional simple at a corner.
    pub fn vertex_simple(k: usize, corner: usize) -> Rep {
        let mut dims = vec![0; 1 << k];
        dims[corner] = 1;
        Rep::new(k, dims, BTreeMap::new()).unwrap()
    }

    /// The V_0 representation of a given dimension.
    pub fn point(dim: usize) -> Rep {
        Rep::new(0, vec![dim], BTreeMap::new()).unwrap()
    }

    pub fn map(&self, a: &Arrow) -> &Mat {
        &self.maps[a]
    }

    pub fn set_map(&mut self, a: Arrow, m: Mat) {
        assert_eq!((m.rows(), m.cols()), (self.dims[a.tgt()], self.dims[a.src]));
        self.maps.insert(a, m);
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }

    pub fn arrows(&self) -> Vec<Arrow> {
        vk(self.k).arrows()
    }

    /// Arrows leaving a corner.
    pub fn outgoing(&self, corner: usize) -> Vec<Arrow> {
        (0..self.k)
            .map(|coord| Arrow {
                coord,
                dir: if corner & (1 << coord) != 0 { Dir::T } else { Dir::D },
                src: corner,
            })
            .collect()
    }

    /// Validate all defining relations; reports the first violation.
    pub fn validate(&self) -> Result<()> {
        for rel in vk(self.k).relations() {
            match rel {
                Relation::RoundTrip { coord, corner } => {
                    let out = Arrow {
                        coord,
                        dir: if corner & (1 << coord) != 0 { Dir::T } else { Dir::D },
                        src: corner,
                    };
                    let back = Arrow {
                        coord,
                        dir: out.dir.flip(),
                        src: out.tgt(),
                    };
                    let comp = self.map(&back).mul(self.map(&out));
                    if !comp.is_zero() {
                        return Err(Error::RelationViolated(format!(
                            "{}{}∘{}{} at corner {} must vanish",
                            back.dir.letter(),
                            coord + 1,
                            out.dir.letter(),
                            coord + 1,
                            corner_string(self.k, corner)
                        )));
                    }
                }
                Relation::Square { i, j, corner } => {
                    let ai = Arrow {
                        coord: i,
                        dir: if corner & (1 << i) != 0 { Dir::T } else { Dir::D },
                        src: corner,
                    };
                    let aj = Arrow {
                        coord: j,
                        dir: if corner & (1 << j) != 0 { Dir::T } else { Dir::D },
                        src: corner,
                    };
                    let then_j = Arrow {
                        coord: j,
                        dir: aj.dir,
                        src: ai.tgt(),
                    };
                    let then_i = Arrow {
                        coord: i,
                        dir: ai.dir,
                        src: aj.tgt(),
                    };
                    let p1 = self.map(&then_j).mul(self.map(&ai));
                    let p2 = self.map(&then_i).mul(self.map(&aj));
                    if p1 != p2 {
                        return Err(Error::RelationViolated(format!(
                            "square {}{},{}{} at corner {} does not commute",
                            ai.dir.letter(),
                            i + 1,
                            aj.dir.letter(),
                            j + 1,
                            corner_string(self.k, corner)
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn direct_sum(&self, other: &Rep) -> Result<Rep> {
        if self.k != other.k {
            return Err(Error::QuiverMismatch(self.k, other.k));
        }
        let dims: Vec<usize> = self
            .dims
            .iter()
            .zip(&other.dims)
            .map(|(a, b)| a + b)
            .collect();
        let mut maps = BTreeMap::new();
        for a in self.arrows() {
            maps.insert(a, self.map(&a).block_diag(other.map(&a)));
        }
        Rep::new(self.k, dims, maps)
    }

    /// Conjugate by invertible vertex maps: edge -> g_tgt * edge * g_src^{-1}.
    pub fn conjugate(&self, g: &[Mat]) -> Result<Rep> {
        let inv: Vec<Mat> = g.iter().map(|m| m.inverse()).collect::<Result<_>>()?;
        let mut maps = BTreeMap::new();
        for a in self.arrows() {
            maps.insert(a, g[a.tgt()].mul(self.map(&a)).mul(&inv[a.src]));
        }
        Rep::new(self.k, self.dims.clone(), maps)
    }

    /// Restrict to per-vertex invariant subspaces (columns span each space).
    /// Panics if the subspaces are not invariant; callers pass images/kernels
    /// of endomorphisms, which always are.
    pub fn sub_rep(&self, bases: &[Vec<Vec<Rat>>]) -> Rep {
        let dims: Vec<usize> = bases.iter().map(|b| b.len()).collect();
        let basis_mats: Vec<Mat> = bases
            .iter()
            .enumerate()
            .map(|(v, b)| {
                if b.is_empty() {
                    Mat::zeros(self.dims[v], 0)
                } else {
                    Mat::from_cols(b.clone())
                }
            })
            .collect();
        let mut maps = BTreeMap::new();
        for a in self.arrows() {
            let src_m = &basis_mats[a.src];
            let tgt_m = &basis_mats[a.tgt()];
            let mut cols = Vec::new();
            for c in 0..dims[a.src] {
                let v = self.map(&a).apply(&src_m.col(c));
                let x = tgt_m
                    .solve(&v)
                    .expect("subspaces must be invariant under the edge maps");
                cols.push(x);
            }
            let m = if dims[a.src] == 0 {
                Mat::zeros(dims[a.tgt()], 0)
            } else {
                Mat::from_cols(cols)
            };
            maps.insert(a, m);
        }
        Rep::new(self.k, dims, maps).expect("sub rep shapes are consistent")
    }

    /// Quotient by per-vertex subspaces that form a subrepresentation.
    pub fn quotient_rep(&self, sub: &[Vec<Vec<Rat>>]) -> Rep {
        // choose complement coordinates per vertex via echelon pivots
        let mut proj = Vec::new(); // projection matrices (quot-dim x dim)
        let mut lift = Vec::new(); // section matrices (dim x quot-dim)
        for (v, basis) in sub.iter().enumerate() {
            let d = self.dims[v];
            let mut span = Subspace::new(d);
            for b in basis {
                span.insert(b);
            }
            let mut complement = Vec::new();
            for i in 0..d {
                let mut e = vec![Rat::zero(); d];
                e[i] = Rat::one();
                if span.insert(&e) {
                    complement.push(i);
                }
            }
            // full basis matrix [sub | complement-units]; inverse gives quotient coords
            let mut cols: Vec<Vec<Rat>> = basis.clone();
            for &i in &complement {
                let mut e = vec![Rat::zero(); d];
                e[i] = Rat::one();
                cols.push(e);
            }
            let qdim = complement.len();
            if d == 0 {
                proj.push(Mat::zeros(0, 0));
                lift.push(Mat::zeros(0, 0));
                continue;
            }
            let full = Mat::from_cols(cols);
            let inv = full.inverse().expect("sub basis plus complement spans");
            let p = Mat::from_fn(qdim, d, |r, c| inv[(basis.len() + r, c)].clone());
            let l = Mat::from_fn(d, qdim, |r, c| {
                if r == complement[c] {
                    Rat::one()
                } else {
                    Rat::zero()
                }
            });
            proj.push(p);
            lift.push(l);
        }
        let dims: Vec<usize> = proj.iter().map(|p| p.rows()).collect();
        let mut maps = BTreeMap::new();
        for a in self.arrows() {
            let m = proj[a.tgt()].mul(self.map(&a)).mul(&lift[a.src]);
            maps.insert(a, m);
        }
        Rep::new(self.k, dims, maps).expect("quotient shapes are consistent")
    }

    /// Append one coordinate with the given V_1 data (tensor product on the
    /// new coordinate): dims multiply, old arrows act as map ⊗ id, the new
    /// coordinate acts as id ⊗ edge.
    pub fn tensor_v1(&self, dim_minus: usize, dim_zero: usize, t_edge: &Mat, d_edge: &Mat) -> Rep {
        assert_eq!((t_edge.rows(), t_edge.cols()), (dim_zero, dim_minus));
        assert_eq!((d_edge.rows(), d_edge.cols()), (dim_minus, dim_zero));
        let k2 = self.k + 1;
        let newbit = 1 << self.k;
        let dim_at = |bit: bool| if bit { dim_minus } else { dim_zero };
        let mut dims = vec![0; 1 << k2];
        for v in 0..(1 << self.k) {
            dims[v] = self.dims[v] * dim_at(false);
            dims[v | newbit] = self.dims[v] * dim_at(true);
        }
        let mut maps = BTreeMap::new();
        for a in vk(k2).arrows() {
            let src_old = a.src & !newbit;
            let bit = a.src & newbit != 0;
            let m = if a.coord < self.k {
                let inner = Arrow {
                    coord: a.coord,
                    dir: a.dir,
                    src: src_old,
                };
                self.map(&inner).kron(&Mat::identity(dim_at(bit)))
            } else {
                let edge = match a.dir {
                    Dir::T => t_edge,
                    Dir::D => d_edge,
                };
                Mat::identity(self.dims[src_old]).kron(edge)
            };
            maps.insert(a, m);
        }
        Rep::new(k2, dims, maps).expect("tensor shapes are consistent")
    }

    /// Restrict to the face where coordinate j is frozen at the given bit,
    /// dropping that coordinate (result lives over V_{k-1}).
    pub fn face(&self, j: usize, bit: bool) -> Rep {
        assert!(j < self.k);
        let k2 = self.k - 1;
        let embed = |c: usize| -> usize {
            // insert the frozen bit at position j
            let low = c & ((1 << j) - 1);
            let high = (c >> j) << (j + 1);
            low | high | ((bit as usize) << j)
        };
        let mut dims = vec![0; 1 << k2];
        for (c, d) in dims.iter_mut().enumerate() {
            *d = self.dims[embed(c)];
        }
        let mut maps = BTreeMap::new();
        for a in vk(k2).arrows() {
            let coord_old = if a.coord < j { a.coord } else { a.coord + 1 };
            let inner = Arrow {
                coord: coord_old,
                dir: a.dir,
                src: embed(a.src),
            };
            maps.insert(a, self.map(&inner).clone());
        }
        Rep::new(k2, dims, maps).expect("face shapes are consistent")
    }

    /// Reindex coordinates: new coordinate p carries what old coordinate
    /// perm[p] carried.
    pub fn permute_coordinates(&self, perm: &[usize]) -> Rep {
        assert_eq!(perm.len(), self.k);
        let to_old = |c_new: usize| -> usize {
            let mut c = 0usize;
            for (p, &old) in perm.iter().enumerate() {
                if c_new & (1 << p) != 0 {
                    c |= 1 << old;
                }
            }
            c
        };
        let mut dims = vec![0; 1 << self.k];
        for (c, d) in dims.iter_mut().enumerate() {
            *d = self.dims[to_old(c)];
        }
        let mut maps = BTreeMap::new();
        for a in vk(self.k).arrows() {
            let inner = Arrow {
                coord: perm[a.coord],
                dir: a.dir,
                src: to_old(a.src),
            };
            maps.insert(a, self.map(&inner).clone());
        }
        Rep::new(self.k, dims, maps).expect("permutation preserves shapes")
    }

    /// Insert a fresh coordinate at position j carrying the given V_1 data.
    pub fn insert_coordinate(
        &self,
        j: usize,
        dim_minus: usize,
        dim_zero: usize,
        t_edge: &Mat,
        d_edge: &Mat,
    ) -> Rep {
        assert!(j <= self.k);
        let appended = self.tensor_v1(dim_minus, dim_zero, t_edge, d_edge);
        // move the last coordinate (index k) into slot j
        let mut perm: Vec<usize> = Vec::with_capacity(self.k + 1);
        for p in 0..=self.k {
            if p < j {
                perm.push(p);
            } else if p == j {
                perm.push(self.k);
            } else {
                perm.push(p - 1);
            }
        }
        appended.permute_coordinates(&perm)
    }

    /// Relabel by the cube automorphism flipping the coordinates in `mask`
    /// (t- and d-roles swap in those coordinates).
    pub fn flip_coordinates(&self, mask: usize) -> Rep {
        let mut dims = vec![0; 1 << self.k];
        for v in 0..(1 << self.k) {
            dims[v ^ mask] = self.dims[v];
        }
        let mut maps = BTreeMap::new();
        for a in self.arrows() {
            let dir = if mask & (1 << a.coord) != 0 { a.dir.flip() } else { a.dir };
            let image = Arrow {
                coord: a.coord,
                dir,
                src: a.src ^ mask,
            };
            maps.insert(image, self.map(&a).clone());
        }
        Rep::new(self.k, dims, maps).expect("flip preserves shapes")
    }

    /// The linear dual: vertex spaces dualize in place, the t-arrow over an
    /// edge becomes the transpose of the opposite d-arrow and vice versa.
    pub fn dual(&self) -> Rep {
        let mut maps = BTreeMap::new();
        for a in self.arrows() {
            let opposite = Arrow {
                coord: a.coord,
                dir: a.dir.flip(),
                src: a.tgt(),
            };
            maps.insert(a, self.map(&opposite).transpose());
        }
        Rep::new(self.k, self.dims.clone(), maps).expect("dual preserves shapes")
    }
}

/// A homomorphism of representations: one matrix per vertex.
pub type RepHom = Vec<Mat>;

/// Solve the intertwining system: h_tgt * M_a = N_a * h_src for all arrows.
pub fn hom_space(from: &Rep, to: &Rep) -> Result<Vec<RepHom>> {
    if from.k != to.k {
        return Err(Error::QuiverMismatch(from.k, to.k));
    }
    let nv = 1 << from.k;
    // unknowns: entries of h_v, v = 0..nv
    let mut offsets = vec![0usize; nv + 1];
    for v in 0..nv {
        offsets[v + 1] = offsets[v] + to.dims[v] * from.dims[v];
    }
    let total = offsets[nv];
    if total == 0 {
        return Ok(vec![]);
    }
    let mut rows: Vec<Vec<Rat>> = Vec::new();
    for a in from.arrows() {
        let m = from.map(&a);
        let n = to.map(&a);
        let (s, t) = (a.src, a.tgt());
        // equation: h_t * M - N * h_s = 0, entry (r, c): r < to.dims[t], c < from.dims[s]
        for r in 0..to.dims[t] {
            for c in 0..from.dims[s] {
                let mut row = vec![Rat::zero(); total];
                // (h_t * M)[r][c] = sum_j h_t[r][j] * M[j][c]
                for j in 0..from.dims[t] {
                    let idx = offsets[t] + r * from.dims[t] + j;
                    row[idx] = row[idx].clone() + m[(j, c)].clone();
                }
                // -(N * h_s)[r][c] = -sum_j N[r][j] * h_s[j][c]
                for j in 0..to.dims[s] {
                    let idx = offsets[s] + j * from.dims[s] + c;
                    row[idx] = row[idx].clone() - n[(r, j)].clone();
                }
                rows.push(row);
            }
        }
    }
    let kernel = if rows.is_empty() {
        Mat::zeros(0, total).kernel_basis()
    } else {
        Mat::from_rows(rows).kernel_basis()
    };
    let mut out = Vec::new();
    for vch in kernel {
        let mut hom = Vec::new();
        for v in 0..nv {
            let h = Mat::from_fn(to.dims[v], from.dims[v], |r, c| {
                vch[offsets[v] + r * from.dims[v] + c].clone()
            });
            hom.push(h);
        }
        out.push(hom);
    }
    Ok(out)
}

/// Basis of End(rep) as vertex-matrix tuples.
pub fn end_algebra(rep: &Rep) -> Result<Vec<RepHom>> {
    rep.validate()?;
    hom_space(rep, rep)
}

/// Embed a vertex-matrix tuple block-diagonally into End of the total space.
pub fn hom_to_block(rep_from: &Rep, hom: &RepHom) -> Mat {
    let nv = 1 << rep_from.k;
    let mut acc = Mat::zeros(0, 0);
    for v in 0..nv {
        acc = acc.block_diag(&hom[v]);
    }
    acc
}

fn block_to_vertex(rep: &Rep, m: &Mat) -> Vec<Mat> {
    let nv = 1 << rep.k;
    let mut out = Vec::new();
    let mut off = 0usize;
    for v in 0..nv {
        let d = rep.dims[v];
        out.push(Mat::from_fn(d, d, |r, c| m[(off + r, off + c)].clone()));
        off += d;
    }
    out
}

/// Split a representation along an idempotent endomorphism: image and kernel
/// are subrepresentations.
fn split_by_idempotent(rep: &Rep, e_blocks: &[Mat]) -> (Rep, Rep) {
    let nv = 1 << rep.k;
    let mut im_bases = Vec::with_capacity(nv);
    let mut ker_bases = Vec::with_capacity(nv);
    for v in 0..nv {
        let (_, kernel, image) = crate::exactla::rank_profile(&e_blocks[v]);
        im_bases.push(image);
        ker_bases.push(kernel);
    }
    (rep.sub_rep(&im_bases), rep.sub_rep(&ker_bases))
}

/// Krull-Schmidt decomposition into certified indecomposable summands.
/// Each summand's End algebra passed the local test.
pub fn decompose_summands(rep: &Rep, seed: u64) -> Result<Vec<Rep>> {
    rep.validate()?;
    let mut out = Vec::new();
    let mut stack = vec![rep.clone()];
    let mut round = 0u64;
    while let Some(r) = stack.pop() {
        if r.is_zero() {
            continue;
        }
        round += 1;
        let end = hom_space(&r, &r)?;
        let blocks: Vec<Mat> = end.iter().map(|h| hom_to_block(&r, h)).collect();
        match find_splitting_idempotent(&blocks, seed.wrapping_add(round))? {
            SplitOutcome::Local => out.push(r),
            SplitOutcome::Idempotent(e) => {
                let eb = block_to_vertex(&r, &e);
                let (a, b) = split_by_idempotent(&r, &eb);
                debug_assert_eq!(a.total_dim() + b.total_dim(), r.total_dim());
                stack.push(a);
                stack.push(b);
            }
        }
    }
    // deterministic order: by dims then by map content
    out.sort_by_key(|r| (std::cmp::Reverse(r.total_dim()), r.dims.clone()));
    Ok(out)
}

/// Decompose and group isomorphic summands into (representative, multiplicity).
pub fn decompose(rep: &Rep, seed: u64) -> Result<Vec<(Rep, usize)>> {
    let summands = decompose_summands(rep, seed)?;
    let mut grouped: Vec<(Rep, usize)> = Vec::new();
    'outer: for s in summands {
        for (r, m) in grouped.iter_mut() {
            if is_isomorphic_indec(r, &s)? {
                *m += 1;
                continue 'outer;
            }
        }
        grouped.push((s, 1));
    }
    Ok(grouped)
}

/// Isomorphism test for certified indecomposables: a hom basis contains an
/// invertible element iff the two are isomorphic (the non-invertible homs
/// form a proper subspace when an isomorphism exists).
pub fn is_isomorphic_indec(a: &Rep, b: &Rep) -> Result<bool> {
    if a.k != b.k {
        return Err(Error::QuiverMismatch(a.k, b.k));
    }
    if a.dims != b.dims {
        return Ok(false);
    }
    if a.total_dim() == 0 {
        return Ok(true);
    }
    let homs = hom_space(a, b)?;
    for h in &homs {
        if h.iter().all(|m| m.is_invertible()) {
            return Ok(true);
        }
    }
    Ok(false)
}

/// General isomorphism test: decompose both sides and match summands.
pub fn is_isomorphic(a: &Rep, b: &Rep, seed: u64) -> Result<bool> {
    if a.k != b.k {
        return Err(Error::QuiverMismatch(a.k, b.k));
    }
    if a.dims != b.dims {
        return Ok(false);
    }
    let sa = decompose_summands(a, seed)?;
    let mut sb = decompose_summands(b, seed.wrapping_add(0x9e37))?;
    if sa.len() != sb.len() {
        return Ok(false);
    }
    for s in &sa {
        let mut found = None;
        for (i, t) in sb.iter().enumerate() {
            if is_isomorphic_indec(s, t)? {
                found = Some(i);
                break;
            }
        }
        match found {
            Some(i) => {
                sb.remove(i);
            }
            None => return Ok(false),
        }
    }
    Ok(true)
}

/// Which of the two alternating orientations of the 4-cycle V_2 an arrow
/// belongs to. Quiver A has sources at the mixed corners 01 and 10; quiver B
/// has sources at 00 and 11.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AB {
    A,
    B,
}

fn orientation_of(arrow: &Arrow) -> AB {
    // sources of A: corners 0b01 and 0b10
    if arrow.src.count_ones() == 1 {
        AB::A
    } else {
        AB::B
    }
}

/// V_2 corner names in catalog order: N=00, W=01, E=10, S=11.
pub const CORNER_N: usize = 0b00;
pub const CORNER_W: usize = 0b01;
pub const CORNER_E: usize = 0b10;
pub const CORNER_S: usize = 0b11;

/// Tube point data for defect-zero affine indecomposables: monic irreducible
/// factors of the pencil polynomial with multiplicities, plus the
/// multiplicity of the point at infinity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TubeParam {
    pub finite: Vec<(Poly, usize)>,
    pub infinity: usize,
}

impl TubeParam {
    /// Render a single rational point when the parameter is one.
    pub fn single_rational(&self) -> Option<(Option<Rat>, usize)> {
        if self.finite.is_empty() && self.infinity > 0 {
            return Some((None, self.infinity));
        }
        if self.finite.len() == 1 && self.infinity == 0 && self.finite[0].0.degree() == 1 {
            let p = &self.finite[0].0;
            let c = -p.coeffs()[0].clone();
            return Some((Some(c), self.finite[0].1));
        }
        None
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum V1Label {
    /// dims (1,0): simple at the -1 corner
    SimpleMinus,
    /// dims (0,1): simple at the 0 corner
    SimpleZero,
    /// dims (1,1) with nonzero t-edge
    TwoPlus,
    /// dims (1,1) with nonzero d-edge
    TwoMinus,
}

impl V1Label {
    pub fn display(&self) -> &'static str {
        match self {
            V1Label::SimpleMinus => "(1,0)",
            V1Label::SimpleZero => "(0,1)",
            V1Label::TwoPlus => "(1,1)+",
            V1Label::TwoMinus => "(1,1)-",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IndecLabel {
    V1(V1Label),
    /// k = 2 projective-injective orbit: rho_1..rho_4
    Rho(u8),
    /// k = 2, supported on one alternating orientation of the 4-cycle
    Affine {
        quiver: AB,
        dims: [usize; 4],
        defect: i64,
        parameter: Option<TubeParam>,
    },
    /// k = 0 or k >= 3: dimensions only (with a wildness notice for k >= 3)
    Generic {
        k: usize,
        dims: Vec<usize>,
        wild: bool,
    },
}

impl IndecLabel {
    pub fn display(&self) -> String {
        match self {
            IndecLabel::V1(l) => format!("V1 label {}", l.display()),
            IndecLabel::Rho(i) => format!("rho{i}"),
            IndecLabel::Affine {
                quiver,
                dims,
                defect,
                parameter,
            } => {
                let q = match quiver {
                    AB::A => "A",
                    AB::B => "B",
                };
                let mut s = format!(
                    "{q}-induced dims (N:{},W:{},E:{},S:{}) defect {defect}",
                    dims[0], dims[1], dims[2], dims[3]
                );
                if let Some(p) = parameter {
                    if let Some((pt, m)) = p.single_rational() {
                        match pt {
                            Some(c) => {
                                s.push_str(&format!(
                                    " parameter {} (multiplicity {m})",
                                    crate::rat::rat_to_string(&c)
                                ));
                            }
                            None => s.push_str(&format!(" parameter ∞ (multiplicity {m})")),
                        }
                    } else if !p.finite.is_empty() || p.infinity > 0 {
                        let parts: Vec<String> = p
                            .finite
                            .iter()
                            .map(|(f, m)| format!("[{}]^{m}", f.to_display()))
                            .collect();
                        s.push_str(&format!(
                            " parameter classes {}{}",
                            parts.join(" "),
                            if p.infinity > 0 {
                                format!(" ∞^{}", p.infinity)
                            } else {
                                String::new()
                            }
                        ));
                    }
                }
                s
            }
            IndecLabel::Generic { k, dims, wild } => {
                if *wild {
                    format!("generic V_{k} dims {dims:?} (classification wild for k >= 3)")
                } else {
                    format!("V_{k} dims {dims:?}")
                }
            }
        }
    }
}

/// Classify a certified indecomposable representation.
pub fn classify(rep: &Rep, seed: u64) -> Result<IndecLabel> {
    rep.validate()?;
    if rep.total_dim() == 0 {
        return Err(Error::DimMismatch(
            "the zero representation is not indecomposable".into(),
        ));
    }
    // certification: reducible input is an error
    let end = hom_space(rep, rep)?;
    let blocks: Vec<Mat> = end.iter().map(|h| hom_to_block(rep, h)).collect();
    match find_splitting_idempotent(&blocks, seed)? {
        SplitOutcome::Local => {}
        SplitOutcome::Idempotent(_) => {
            return Err(Error::DimMismatch(
                "classify requires an indecomposable representation".into(),
            ))
        }
    }
    match rep.k {
        0 => Ok(IndecLabel::Generic {
            k: 0,
            dims: rep.dims.clone(),
            wild: false,
        }),
        1 => classify_v1(rep),
        2 => classify_v2(rep),
        k => Ok(IndecLabel::Generic {
            k,
            dims: rep.dims.clone(),
            wild: true,
        }),
    }
}

fn classify_v1(rep: &Rep) -> Result<IndecLabel> {
    let dm = rep.dims[1]; // corner -1
    let dz = rep.dims[0]; // corner 0
    let t = rep.map(&Arrow { coord: 0, dir: Dir::T, src: 1 });
    let d = rep.map(&Arrow { coord: 0, dir: Dir::D, src: 0 });
    match (dm, dz) {
        (1, 0) => Ok(IndecLabel::V1(V1Label::SimpleMinus)),
        (0, 1) => Ok(IndecLabel::V1(V1Label::SimpleZero)),
        (1, 1) if !t.is_zero() => Ok(IndecLabel::V1(V1Label::TwoPlus)),
        (1, 1) if !d.is_zero() => Ok(IndecLabel::V1(V1Label::TwoMinus)),
        _ => Err(Error::DimMismatch(format!(
            "no V_1 indecomposable has dims ({dm},{dz})"
        ))),
    }
}

fn classify_v2(rep: &Rep) -> Result<IndecLabel> {
    // rho detection: a nonzero admissible double composite
    for a in rep.arrows() {
        for coord in 0..2 {
            if coord == a.coord {
                continue;
            }
            let mid = a.tgt();
            let b = Arrow {
                coord,
                dir: if mid & (1 << coord) != 0 { Dir::T } else { Dir::D },
                src: mid,
            };
            if !rep.map(&b).mul(rep.map(&a)).is_zero() {
                // the sector is given by the two directions moved
                let dir_of = |c: usize| if c == a.coord { a.dir } else { b.dir };
                let idx = match (dir_of(0), dir_of(1)) {
                    (Dir::T, Dir::T) => 1,
                    (Dir::T, Dir::D) => 2,
                    (Dir::D, Dir::D) => 3,
                    (Dir::D, Dir::T) => 4,
                };
                return Ok(IndecLabel::Rho(idx));
            }
        }
    }
    // orientation support
    let mut support: Option<AB> = None;
    for a in rep.arrows() {
        if rep.map(&a).is_zero() {
            continue;
        }
        let o = orientation_of(&a);
        match support {
            None => support = Some(o),
            Some(s) if s == o => {}
            Some(_) => {
                return Err(Error::RelationViolated(
                    "indecomposable V_2 representation supported on both orientations".into(),
                ))
            }
        }
    }
    let quiver = support.unwrap_or_else(|| {
        // all arrows zero: a vertex simple; sinks of A (corners 00 and 11)
        // are labeled A-induced, the others B-induced
        let v = rep.dims.iter().position(|&d| d > 0).unwrap();
        if v == CORNER_N || v == CORNER_S {
            AB::A
        } else {
            AB::B
        }
    });
    // reduce B to A by flipping coordinate 1
    let (arep, quiver_name) = match quiver {
        AB::A => (rep.clone(), AB::A),
        AB::B => (rep.flip_coordinates(0b01), AB::B),
    };
    let dims = [
        rep.dims[CORNER_N],
        rep.dims[CORNER_W],
        rep.dims[CORNER_E],
        rep.dims[CORNER_S],
    ];
    // defect: sources minus sinks in the A-orientation picture of arep
    let defect = (arep.dims[CORNER_W] + arep.dims[CORNER_E]) as i64
        - (arep.dims[CORNER_N] + arep.dims[CORNER_S]) as i64;
    let parameter = if defect == 0 {
        Some(tube_parameter(&arep)?)
    } else {
        None
    };
    Ok(IndecLabel::Affine {
        quiver: quiver_name,
        dims,
        defect,
        parameter,
    })
}

/// Kronecker-pencil invariant of an A-supported defect-zero representation:
/// roots of the even part of det(f + t g), where f collects the matching
/// {W->N, E->S} and g the matching {W->S, E->N}.
fn tube_parameter(arep: &Rep) -> Result<TubeParam> {
    let a = arep.map(&Arrow { coord: 0, dir: Dir::T, src: CORNER_W }); // W -> N
    let b = arep.map(&Arrow { coord: 1, dir: Dir::D, src: CORNER_W }); // W -> S
    let c = arep.map(&Arrow { coord: 1, dir: Dir::T, src: CORNER_E }); // E -> N
    let d = arep.map(&Arrow { coord: 0, dir: Dir::D, src: CORNER_E }); // E -> S
    let (dn, dw, de, ds) = (
        arep.dims[CORNER_N],
        arep.dims[CORNER_W],
        arep.dims[CORNER_E],
        arep.dims[CORNER_S],
    );
    let rows_total = dn + ds;
    let cols_total = dw + de;
    if rows_total != cols_total || rows_total == 0 {
        return Ok(TubeParam {
            finite: vec![],
            infinity: 0,
        });
    }
    // det as a polynomial in t: expand by interpolation at rows_total+1 points
    let deg = rows_total;
    let mut xs = Vec::new();
    let mut ys = Vec::new();
    for i in 0..=deg as i64 {
        let t = rat(i);
        let m = Mat::from_fn(rows_total, cols_total, |r, cc| {
            // rows: N block then S block; cols: W block then E block
            if r < dn {
                if cc < dw {
                    a[(r, cc)].clone()
                } else {
                    &c[(r, cc - dw)] * &t
                }
            } else if cc < dw {
                &b[(r - dn, cc)] * &t
            } else {
                d[(r - dn, cc - dw)].clone()
            }
        });
        xs.push(t.clone());
        ys.push(m.det());
    }
    let p = interpolate(&xs, &ys);
    if p.is_zero() {
        return Ok(TubeParam {
            finite: vec![],
            infinity: 0,
        });
    }
    // fixed parity in t; read off the even-or-odd coefficient sequence
    let sigma = (dn as i64 - dw as i64).rem_euclid(2) as usize;
    let mut h = Vec::new();
    for (i, coeff) in p.coeffs().iter().enumerate() {
        if i % 2 == sigma {
            h.push(coeff.clone());
        } else {
            debug_assert!(coeff.is_zero(), "pencil polynomial parity violated");
        }
    }
    let h = Poly::new(h);
    let expected = (rows_total - sigma) / 2;
    let finite = factor(&h.monic())?;
    let infinity = expected.saturating_sub(h.degree());
    Ok(TubeParam { finite, infinity })
}

fn interpolate(xs: &[Rat], ys: &[Rat]) -> Poly {
    let mut acc = Poly::zero();
    for (i, y) in ys.iter().enumerate() {
        let mut term = Poly::constant(y.clone());
        for (j, xj) in xs.iter().enumerate() {
            if i == j {
                continue;
            }
            let denom = &xs[i] - xj;
            term = term.mul(&Poly::x_minus(xj).scale(&denom.recip()));
        }
        acc = acc.add(&term);
    }
    acc
}

/// Deterministic random invertible vertex maps for conjugation tests.
pub fn random_conjugator(dims: &[usize], rng: &mut ChaCha8Rng) -> Vec<Mat> {
    dims.iter()
        .map(|&d| {
            // product of a unit lower- and upper-triangular integer matrix
            let l = Mat::from_fn(d, d, |r, c| {
                if r == c {
                    rat(1)
                } else if r > c {
                    rat(rng.gen_range(-2..=2))
                } else {
                    rat(0)
                }
            });
            let u = Mat::from_fn(d, d, |r, c| {
                if r == c {
                    rat(1)
                } else if r < c {
                    rat(rng.gen_range(-2..=2))
                } else {
                    rat(0)
                }
            });
            l.mul(&u)
        })
        .collect()
}

/// Seeded RNG shared by the randomized searches.
pub fn rng_for(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// The four V_1 indecomposables.
pub fn v1_indecomposables() -> Vec<(V1Label, Rep)> {
    let mk = |dm: usize, dz: usize, t: i64, d: i64| {
        let mut maps = BTreeMap::new();
        maps.insert(
            Arrow { coord: 0, dir: Dir::T, src: 1 },
            Mat::from_fn(dz, dm, |_, _| rat(t)),
        );
        maps.insert(
            Arrow { coord: 0, dir: Dir::D, src: 0 },
            Mat::from_fn(dm, dz, |_, _| rat(d)),
        );
        Rep::new(1, vec![dz, dm], maps).unwrap()
    };
    // dims vector is [corner 0, corner 1=minus]
    vec![
        (V1Label::SimpleMinus, mk(1, 0, 0, 0)),
        (V1Label::SimpleZero, mk(0, 1, 0, 0)),
        (V1Label::TwoPlus, mk(1, 1, 1, 0)),
        (V1Label::TwoMinus, mk(1, 1, 0, 1)),
    ]
}

/// rho_j for j = 1..4: dims (1,1,1,1), the two forward directions carried by
/// identities, reverse arrows zero. rho_1 is the all-t sector; each
/// successive rho rotates the sector by 90 degrees.
pub fn rho(j: u8) -> Rep {
    let sector = match j {
        1 => (Dir::T, Dir::T),
        2 => (Dir::T, Dir::D),
        3 => (Dir::D, Dir::D),
        4 => (Dir::D, Dir::T),
        _ => panic!("rho index must be 1..=4"),
    };
    let mut maps = BTreeMap::new();
    for src in 0..4usize {
        for coord in 0..2usize {
            let dir = if src & (1 << coord) != 0 { Dir::T } else { Dir::D };
            let want = if coord == 0 { sector.0 } else { sector.1 };
            if dir == want {
                maps.insert(Arrow { coord, dir, src }, Mat::identity(1));
            }
        }
    }
    Rep::new(2, vec![1; 4], maps).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn vk_counts() {
        let q = vk(2);
        assert_eq!(q.num_vertices(), 4);
        assert_eq!(q.arrows().len(), 8);
        // 8 round trips + 4 squares
        assert_eq!(q.relations().len(), 12);
        let q1 = vk(1);
        assert_eq!(q1.num_vertices(), 2);
        assert_eq!(q1.arrows().len(), 2);
        let q0 = vk(0);
        assert_eq!(q0.num_vertices(), 1);
        assert!(q0.arrows().is_empty());
    }

    #[test]
    fn admissible_path_class_counts() {
        assert_eq!(vk(1).admissible_path_classes(), 4);
        assert_eq!(vk(2).admissible_path_classes(), 16);
    }

    #[test]
    fn validate_detects_roundtrip_violation() {
        // dims (1,1) with both edges nonzero violates the V_1 relations
        let mut maps = BTreeMap::new();
        maps.insert(Arrow { coord: 0, dir: Dir::T, src: 1 }, Mat::identity(1));
        maps.insert(Arrow { coord: 0, dir: Dir::D, src: 0 }, Mat::identity(1));
        let rep = Rep::new(1, vec![1, 1], maps).unwrap();
        assert!(matches!(rep.validate(), Err(Error::RelationViolated(_))));
    }

    #[test]
    fn rho_reps_validate() {
        for j in 1..=4 {
            rho(j).validate().unwrap();
        }
    }

    #[test]
    fn v1_indecs_validate_and_classify() {
        for (label, rep) in v1_indecomposables() {
            rep.validate().unwrap();
            let got = classify(&rep, 0).unwrap();
            assert_eq!(got, IndecLabel::V1(label));
        }
    }

    #[test]
    fn end_dim_of_simple() {
        let (_, rep) = &v1_indecomposables()[0];
        assert_eq!(end_algebra(rep).unwrap().len(), 1);
    }

    #[test]
    fn direct_sum_and_decompose_v1() {
        let indecs = v1_indecomposables();
        let sum = indecs[2].1.direct_sum(&indecs[3].1).unwrap();
        let mut rng = rng_for(5);
        let g = random_conjugator(&sum.dims, &mut rng);
        let twisted = sum.conjugate(&g).unwrap();
        twisted.validate().unwrap();
        let parts = decompose(&twisted, 1).unwrap();
        assert_eq!(parts.iter().map(|p| p.1).sum::<usize>(), 2);
        let labels: Vec<IndecLabel> = parts
            .iter()
            .map(|(r, _)| classify(r, 0).unwrap())
            .collect();
        assert!(labels.contains(&IndecLabel::V1(V1Label::TwoPlus)));
        assert!(labels.contains(&IndecLabel::V1(V1Label::TwoMinus)));
    }

    #[test]
    fn repeated_summand_splits() {
        // L0 ⊕ L0: the isotypic case must still split
        let l0 = &v1_indecomposables()[1].1;
        let sum = l0.direct_sum(l0).unwrap();
        let mut rng = rng_for(11);
        let g = random_conjugator(&sum.dims, &mut rng);
        let twisted = sum.conjugate(&g).unwrap();
        let parts = decompose(&twisted, 3).unwrap();
        assert_eq!(parts.len(), 1);
        assert_eq!(parts[0].1, 2);
    }

    #[test]
    fn iso_detects_conjugates_and_distinguishes() {
        let plus = &v1_indecomposables()[2].1;
        let minus = &v1_indecomposables()[3].1;
        let mut rng = rng_for(2);
        let g = random_conjugator(&plus.dims, &mut rng);
        let twisted = plus.conjugate(&g).unwrap();
        assert!(is_isomorphic(plus, &twisted, 0).unwrap());
        assert!(!is_isomorphic(plus, minus, 0).unwrap());
    }

    #[test]
    fn rho_classify() {
        for j in 1..=4u8 {
            assert_eq!(classify(&rho(j), 0).unwrap(), IndecLabel::Rho(j));
        }
    }

    #[test]
    fn rho_rotation_cycle() {
        // flipping coordinate roles realizes the rotation orbit
        let r2 = rho(1).flip_coordinates(0b10);
        assert_eq!(classify(&r2, 0).unwrap(), IndecLabel::Rho(2));
    }

    #[test]
    fn dual_swaps_v1_two_classes() {
        let plus = &v1_indecomposables()[2].1;
        let d = plus.dual();
        assert_eq!(classify(&d, 0).unwrap(), IndecLabel::V1(V1Label::TwoMinus));
    }

    #[test]
    fn vertex_simple_affine_labels() {
        let n = Rep::vertex_simple(2, CORNER_N);
        match classify(&n, 0).unwrap() {
            IndecLabel::Affine { quiver: AB::A, defect, .. } => assert_eq!(defect, -1),
            other => panic!("unexpected label {other:?}"),
        }
        let w = Rep::vertex_simple(2, CORNER_W);
        match classify(&w, 0).unwrap() {
            IndecLabel::Affine { quiver: AB::B, .. } => {}
            other => panic!("unexpected label {other:?}"),
        }
    }

    #[test]
    fn tensor_v1_builds_v2() {
        // L(0) ⊗ L(0) = simple at corner 00
        let l0 = &v1_indecomposables()[1].1;
        let t = Mat::zeros(1, 0);
        let d = Mat::zeros(0, 1);
        let v2 = l0.tensor_v1(0, 1, &t, &d);
        assert_eq!(v2.dims, vec![1, 0, 0, 0]);
        v2.validate().unwrap();
    }
}
