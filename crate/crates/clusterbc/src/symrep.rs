//! The categorification layer: bound (symmetric) quivers from triangulations,
//! string modules attached to diagonals, the twisted dual, the I/S/R
//! classification of symmetric indecomposables, restriction of
//! representations, module F-polynomials via subrepresentation enumeration,
//! and the Caldero-Chapoton map for acyclic quivers.

use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::polygon::{
    lamination_vector, Chord, Diagonal, LabeledTriangulation, ThetaOrbit, ThetaTriangulation,
};
use crate::seeds::b_matrix_from_triangulation;
use std::collections::BTreeSet;

/// A bound quiver on vertices `1..=k`: arrows with source/target, the
/// length-two relations coming from internal triangles, and an optional
/// involution making it symmetric.
#[derive(Clone, Debug)]
pub struct BoundQuiver {
    pub vertices: usize,
    pub arrows: Vec<(usize, usize)>,
    /// Pairs of composable arrow indices `(a1, a2)` with `a2 ∘ a1 = 0`.
    pub relations: Vec<(usize, usize)>,
    /// Vertex involution, 1-based, when the quiver is symmetric.
    pub sigma: Option<Vec<usize>>,
    pub acyclic: bool,
}

impl BoundQuiver {
    /// The cluster-tilted bound quiver of a labeled triangulation: an arrow
    /// `j -> i` whenever `b_ij = 1`, with relations along the 3-cycles of
    /// internal triangles. If `sigma` labels are supplied the quiver carries
    /// the corresponding involution.
    pub fn from_triangulation(t: &LabeledTriangulation) -> Result<BoundQuiver> {
        let b = b_matrix_from_triangulation(t)?;
        let k = t.rank();
        let mut arrows = Vec::new();
        for i in 1..=k {
            for j in 1..=k {
                if b[i - 1][j - 1] == 1 {
                    arrows.push((j, i));
                }
            }
        }
        let arrow_idx = |from: usize, to: usize| arrows.iter().position(|&a| a == (from, to));
        let mut relations = Vec::new();
        for (a1i, &(i, j)) in arrows.iter().enumerate() {
            for (a2i, &(j2, kk)) in arrows.iter().enumerate() {
                if j2 != j {
                    continue;
                }
                if arrow_idx(kk, i).is_some() {
                    relations.push((a1i, a2i));
                }
            }
        }
        let acyclic = {
            // DFS cycle detection on 1..=k
            let mut color = vec![0u8; k + 1];
            fn dfs(v: usize, arrows: &[(usize, usize)], color: &mut [u8]) -> bool {
                color[v] = 1;
                for &(s, t) in arrows {
                    if s == v {
                        if color[t] == 1 {
                            return false;
                        }
                        if color[t] == 0 && !dfs(t, arrows, color) {
                            return false;
                        }
                    }
                }
                color[v] = 2;
                true
            }
            (1..=k).all(|v| color[v] != 0 || dfs(v, &arrows, &mut color))
        };
        Ok(BoundQuiver {
            vertices: k,
            arrows,
            relations,
            sigma: None,
            acyclic,
        })
    }

    /// Attach the involution `tau_i <-> rho(tau_i)` of a rho-invariant
    /// triangulation.
    pub fn with_sigma_from(mut self, t: &ThetaTriangulation, tp: &LabeledTriangulation) -> Result<BoundQuiver> {
        let mut sigma = vec![0usize; self.vertices + 1];
        for (i, &tau) in tp.taus.iter().enumerate() {
            let img = t.rho_diag(tau);
            let j = tp
                .label_of(img)
                .ok_or_else(|| Error::Model("triangulation is not rho-invariant".into()))?;
            sigma[i + 1] = j;
        }
        // sigma must reverse arrows
        for &(s, tgt) in &self.arrows {
            if !self.arrows.contains(&(sigma[tgt], sigma[s])) {
                return Err(Error::Model("involution does not reverse arrows".into()));
            }
        }
        self.sigma = Some(sigma);
        Ok(self)
    }

    fn sigma_vertex(&self, v: usize) -> Result<usize> {
        Ok(self.sigma.as_ref().ok_or(Error::NoSigma)?[v])
    }

    /// The exchange matrix of the quiver: `b_ij = 1` iff there is an arrow
    /// `j -> i`.
    pub fn exchange_matrix(&self) -> Vec<Vec<i64>> {
        let k = self.vertices;
        let mut b = vec![vec![0i64; k]; k];
        for &(s, t) in &self.arrows {
            b[t - 1][s - 1] += 1;
            b[s - 1][t - 1] -= 1;
        }
        b
    }
}

/// A representation with 0/1 dimensions (a string module, or one summand of
/// a direct sum). Arrow maps are the identity wherever both ends are
/// nonzero, zero elsewhere; such data always satisfies the relations because
/// a diagonal crosses at most two sides of any triangle.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct QuiverRep {
    pub dims: Vec<u32>,
}

impl QuiverRep {
    pub fn zero(vertices: usize) -> QuiverRep {
        QuiverRep {
            dims: vec![0; vertices],
        }
    }

    pub fn simple(vertices: usize, i: usize) -> QuiverRep {
        let mut dims = vec![0; vertices];
        dims[i - 1] = 1;
        QuiverRep { dims }
    }

    pub fn support(&self) -> BTreeSet<usize> {
        self.dims
            .iter()
            .enumerate()
            .filter(|(_, &d)| d > 0)
            .map(|(i, _)| i + 1)
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.dims.iter().all(|&d| d == 0)
    }

    /// Arrow scalar: 1 iff both endpoints are in the support.
    pub fn arrow_map(&self, q: &BoundQuiver, arrow: usize) -> u32 {
        let (s, t) = q.arrows[arrow];
        (self.dims[s - 1] > 0 && self.dims[t - 1] > 0) as u32
    }

    pub fn to_json(&self, q: &BoundQuiver) -> serde_json::Value {
        let arrows: Vec<serde_json::Value> = q
            .arrows
            .iter()
            .enumerate()
            .map(|(ai, &(s, t))| {
                serde_json::json!({ "from": s, "to": t, "map": self.arrow_map(q, ai) })
            })
            .collect();
        serde_json::json!({ "dims": self.dims, "arrows": arrows })
    }
}

/// The string module `L_gamma` of a diagonal not in the triangulation:
/// one-dimensional exactly at the crossed diagonals.
pub fn rep_from_diagonal(
    t: &LabeledTriangulation,
    q: &BoundQuiver,
    gamma: Diagonal,
) -> Result<QuiverRep> {
    if t.contains(gamma) {
        return Err(Error::InvalidDiagonal(format!("{gamma} lies in the triangulation")));
    }
    let support = t.crossings(&Chord::Diag(gamma));
    if support.is_empty() {
        return Err(Error::InvalidDiagonal(format!("{gamma} crosses nothing")));
    }
    let mut dims = vec![0u32; q.vertices];
    for i in support {
        dims[i - 1] = 1;
    }
    Ok(QuiverRep { dims })
}

/// The twisted dual: dimensions permuted by the involution. On the
/// sign-normalized 0/1 string data this determines the iso class.
pub fn nabla(q: &BoundQuiver, m: &QuiverRep) -> Result<QuiverRep> {
    let mut dims = vec![0u32; q.vertices];
    for v in 1..=q.vertices {
        dims[q.sigma_vertex(v)? - 1] = m.dims[v - 1];
    }
    Ok(QuiverRep { dims })
}

/// Kind of a symmetric indecomposable.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SymKind {
    I,
    S,
    R,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Flavor {
    Orthogonal,
    Symplectic,
}

/// A symmetric indecomposable: one string module (type I) or a pair
/// `L ⊕ ∇L` (types S and R).
#[derive(Clone, Debug)]
pub struct SymmetricIndec {
    pub kind: SymKind,
    pub flavor: Flavor,
    pub summands: Vec<QuiverRep>,
}

impl SymmetricIndec {
    pub fn to_json(&self, q: &BoundQuiver) -> serde_json::Value {
        serde_json::json!({
            "kind": match self.kind { SymKind::I => "I", SymKind::S => "S", SymKind::R => "R" },
            "flavor": match self.flavor { Flavor::Orthogonal => "orthogonal", Flavor::Symplectic => "symplectic" },
            "summands": self.summands.iter().map(|s| s.to_json(q)).collect::<Vec<_>>(),
        })
    }

    pub fn total_dims(&self) -> Vec<u32> {
        let mut dims = vec![0; self.summands[0].dims.len()];
        for s in &self.summands {
            for (d, &x) in dims.iter_mut().zip(&s.dims) {
                *d += x;
            }
        }
        dims
    }
}

/// The symmetric indecomposable corresponding to the `F_d` image of a
/// theta-orbit.
pub fn orbit_to_symmetric(
    t: &LabeledTriangulation,
    q: &BoundQuiver,
    f_d_image: &[Diagonal],
    flavor: Flavor,
) -> Result<SymmetricIndec> {
    match f_d_image {
        [alpha] => {
            let l = rep_from_diagonal(t, q, *alpha)?;
            match flavor {
                Flavor::Orthogonal => Ok(SymmetricIndec {
                    kind: SymKind::I,
                    flavor,
                    summands: vec![l],
                }),
                Flavor::Symplectic => Ok(SymmetricIndec {
                    kind: SymKind::R,
                    flavor,
                    summands: vec![l.clone(), l],
                }),
            }
        }
        [a1, a2] => {
            let l1 = rep_from_diagonal(t, q, *a1)?;
            let l2 = rep_from_diagonal(t, q, *a2)?;
            if nabla(q, &l1)? != l2 {
                return Err(Error::Model("pair is not nabla-dual".into()));
            }
            Ok(SymmetricIndec {
                kind: SymKind::S,
                flavor,
                summands: vec![l1, l2],
            })
        }
        _ => Err(Error::Model("orbit image must have one or two diagonals".into())),
    }
}

/// Dimension vectors of all subrepresentations of a 0/1 representation: the
/// subsets of the support closed under the nonzero arrow maps, each
/// contributing once.
pub fn subrep_dims(q: &BoundQuiver, m: &QuiverRep) -> Vec<Vec<u32>> {
    let supp: Vec<usize> = m.support().into_iter().collect();
    let k = supp.len();
    let mut out = Vec::new();
    'subsets: for mask in 0u32..(1 << k) {
        let chosen: BTreeSet<usize> = supp
            .iter()
            .enumerate()
            .filter(|(i, _)| mask & (1 << i) != 0)
            .map(|(_, &v)| v)
            .collect();
        for (ai, &(s, t)) in q.arrows.iter().enumerate() {
            if m.arrow_map(q, ai) != 0 && chosen.contains(&s) && !chosen.contains(&t) {
                continue 'subsets;
            }
        }
        let mut e = vec![0u32; q.vertices];
        for v in chosen {
            e[v - 1] = 1;
        }
        out.push(e);
    }
    out.sort();
    out
}

/// The F-polynomial of a module, `F_M = sum over subrepresentation dimension
/// vectors e of y^e`, multiplicative over direct sums. The rank of the
/// result equals the number of quiver vertices.
pub fn f_polynomial_of_rep(q: &BoundQuiver, summands: &[QuiverRep]) -> Result<LaurentPoly> {
    let n = q.vertices;
    let mut f = LaurentPoly::one(n);
    for m in summands {
        let mut fm = LaurentPoly::zero(n);
        for e in subrep_dims(q, m) {
            fm = fm.add(&LaurentPoly::y_monomial(&e))?;
        }
        f = f.mul(&fm)?;
    }
    Ok(f)
}

/// g-vector of a module over an acyclic quiver:
/// `(g_M)_i = -<S_i, M> = -dim_i + sum over arrows i -> j of dim_j`.
pub fn g_vector_of_rep(q: &BoundQuiver, summands: &[QuiverRep]) -> Result<Vec<i64>> {
    if !q.acyclic {
        return Err(Error::CyclicQuiver);
    }
    let n = q.vertices;
    let mut g = vec![0i64; n];
    for m in summands {
        for i in 1..=n {
            g[i - 1] -= m.dims[i - 1] as i64;
            for &(s, t) in &q.arrows {
                if s == i {
                    g[i - 1] += m.dims[t - 1] as i64;
                }
            }
        }
    }
    Ok(g)
}

/// The Caldero-Chapoton map over an acyclic quiver:
/// `CC(M) = sum_e chi(Gr_e(M)) y^e x^{B e + g_M}`, multiplicative over
/// direct sums. Every quiver Grassmannian here is empty or a point.
pub fn cc_map(q: &BoundQuiver, summands: &[QuiverRep]) -> Result<LaurentPoly> {
    if !q.acyclic {
        return Err(Error::CyclicQuiver);
    }
    let n = q.vertices;
    let b = q.exchange_matrix();
    let mut out = LaurentPoly::one(n);
    for m in summands {
        let g = g_vector_of_rep(q, std::slice::from_ref(m))?;
        let mut cc = LaurentPoly::zero(n);
        for e in subrep_dims(q, m) {
            let mut xexp = g.clone();
            for (j, &ej) in e.iter().enumerate() {
                if ej != 0 {
                    for i in 0..n {
                        xexp[i] += b[i][j] * ej as i64;
                    }
                }
            }
            cc = cc.add(&LaurentPoly::monomial(xexp, e, 1.into()))?;
        }
        out = out.mul(&cc)?;
    }
    Ok(out)
}

/// Restriction of a representation over `Q(T')` to `Q(T-bar)`: keep the
/// first `n` coordinates, then split into string summands along the
/// connected components of the surviving support.
pub fn restriction_rep(
    q_bar: &BoundQuiver,
    n: usize,
    summands: &[QuiverRep],
) -> Vec<QuiverRep> {
    let mut out = Vec::new();
    for m in summands {
        let kept: BTreeSet<usize> = m
            .support()
            .into_iter()
            .filter(|&v| v <= n)
            .collect();
        // connected components under arrows of Q(T-bar) restricted to kept
        let mut remaining = kept.clone();
        while let Some(&start) = remaining.iter().next() {
            let mut comp = BTreeSet::new();
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                if !comp.insert(v) {
                    continue;
                }
                remaining.remove(&v);
                for &(s, t) in &q_bar.arrows {
                    if s == v && remaining.contains(&t) {
                        stack.push(t);
                    }
                    if t == v && remaining.contains(&s) {
                        stack.push(s);
                    }
                }
            }
            let mut dims = vec![0u32; q_bar.vertices];
            for v in comp {
                dims[v - 1] = 1;
            }
            out.push(QuiverRep { dims });
        }
    }
    out.sort();
    out
}

/// Context bundling a theta-invariant triangulation with its rho-invariant
/// partner `T' = F_d(T)` and the two quivers involved in the
/// categorification.
pub struct SymContext {
    pub t: ThetaTriangulation,
    pub t_prime: LabeledTriangulation,
    pub q_prime: BoundQuiver,
    pub t_bar: LabeledTriangulation,
    pub q_bar: BoundQuiver,
}

impl SymContext {
    pub fn new(t: ThetaTriangulation) -> Result<SymContext> {
        let t_prime = t.t_prime();
        let q_prime = BoundQuiver::from_triangulation(&t_prime)?.with_sigma_from(&t, &t_prime)?;
        let t_bar = t.restricted();
        let q_bar = BoundQuiver::from_triangulation(&t_bar)?;
        Ok(SymContext {
            t,
            t_prime,
            q_prime,
            t_bar,
            q_bar,
        })
    }

    /// The symmetric indecomposable of a non-initial theta-orbit.
    pub fn symmetric_of_orbit(&self, orb: &ThetaOrbit, flavor: Flavor) -> Result<SymmetricIndec> {
        let image = self.t.f_d_orbit(orb);
        orbit_to_symmetric(&self.t_prime, &self.q_prime, &image, flavor)
    }

    /// `Res(M)` over `Q(T-bar)` for the module of a theta-orbit, mode B.
    pub fn restriction_of(&self, m: &SymmetricIndec) -> Vec<QuiverRep> {
        restriction_rep(&self.q_bar, self.t.n, &m.summands)
    }
}

/// The data of the categorical multiplication formula for a split-type
/// orthogonal module `M = L ⊕ ∇L` coming from a d-crossing orbit `[a, b]`:
/// the two nabla-invariant middle terms of the short exact sequence
/// `0 -> L -> G1 ⊕ G2 -> ∇L -> 0`, the dimension vector `dim ∇L^L` realized
/// as a lamination crossing vector, and the correction module
/// `L_(a, b-bar) ⊕ ∇L_(a, b-bar)`.
pub struct CatInterprData {
    pub g1: QuiverRep,
    pub g2: QuiverRep,
    pub dim_nabla_l_l: Vec<u32>,
    pub correction: Vec<QuiverRep>,
}

pub fn cat_interpr_data(ctx: &SymContext, orb: &ThetaOrbit) -> Result<CatInterprData> {
    if !ctx.q_prime.acyclic {
        return Err(Error::CyclicQuiver);
    }
    if !ctx.t.orbit_crosses_diameter(orb) || orb.is_diameter() {
        return Err(Error::Model(
            "categorical correction data needs a d-crossing pair orbit".into(),
        ));
    }
    let t = &ctx.t;
    let rep = orb
        .reps
        .iter()
        .copied()
        .find(|r| t.strictly_left(r.a) || t.strictly_left(r.b))
        .ok_or_else(|| Error::Model("d-crossing orbit without left endpoint".into()))?;
    let (a, bv) = if t.strictly_left(rep.a) {
        (rep.a, rep.b)
    } else {
        (rep.b, rep.a)
    };
    let bbar = t.theta(bv);
    let diam1 = Diagonal::new(t.m(), a, t.rho(a))?;
    let diam2 = Diagonal::new(t.m(), bbar, t.rho(bbar))?;
    let g1 = rep_from_diagonal(&ctx.t_prime, &ctx.q_prime, diam1)?;
    let g2 = rep_from_diagonal(&ctx.t_prime, &ctx.q_prime, diam2)?;
    let dim_nabla_l_l = lamination_vector(
        &ctx.t_prime,
        &Chord::Diag(diam1),
        &Chord::Diag(diam2),
    );
    let corr_chord = Chord::from_vertices(t.m(), a, bbar);
    let correction = match corr_chord {
        Chord::Diag(d) => {
            let l = rep_from_diagonal(&ctx.t_prime, &ctx.q_prime, d)?;
            let nl = rep_from_diagonal(&ctx.t_prime, &ctx.q_prime, t.rho_diag(d))?;
            vec![l, nl]
        }
        // the sequence is almost split: the correction module vanishes
        _ => Vec::new(),
    };
    Ok(CatInterprData {
        g1,
        g2,
        dim_nabla_l_l,
        correction,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::parse_poly;
    use crate::polygon::{all_diagonals, canonical_labeling};
    use std::collections::BTreeSet;

    /// The octagon triangulation whose quiver is the running example:
    /// arrows 2 -> 1, 2 -> 3, 3 -> 4, 5 -> 4.
    fn ex_quiver_t() -> LabeledTriangulation {
        LabeledTriangulation::new(
            8,
            vec![
                Diagonal::sorted(3, 5),
                Diagonal::sorted(3, 6),
                Diagonal::sorted(2, 6),
                Diagonal::sorted(1, 6),
                Diagonal::sorted(1, 7),
            ],
        )
        .unwrap()
    }

    #[test]
    fn quiver_of_example() {
        let q = BoundQuiver::from_triangulation(&ex_quiver_t()).unwrap();
        let mut arrows = q.arrows.clone();
        arrows.sort();
        assert_eq!(arrows, vec![(2, 1), (2, 3), (3, 4), (5, 4)]);
        assert!(q.relations.is_empty());
        assert!(q.acyclic);
    }

    #[test]
    fn linear_quiver_of_fan() {
        // the rho-invariant fan at one diameter endpoint gives the linear
        // quiver 1 <- 2 <- 3 <- 4 <- 5
        let set: BTreeSet<Diagonal> = [(2, 4), (2, 5), (2, 6), (0, 6), (1, 6)]
            .iter()
            .map(|&(a, b)| Diagonal::sorted(a, b))
            .collect();
        let t = canonical_labeling(3, &set, 6, 2).unwrap();
        let tp = t.t_prime();
        let q = BoundQuiver::from_triangulation(&tp).unwrap();
        let mut arrows = q.arrows.clone();
        arrows.sort();
        assert_eq!(arrows, vec![(2, 1), (3, 2), (4, 3), (5, 4)]);
        assert!(q.relations.is_empty());
    }

    #[test]
    fn relation_count_equals_internal_triangles() {
        for t in enumerate_triangulations_of_octagon() {
            let q = BoundQuiver::from_triangulation(&t).unwrap();
            let internal = t
                .triangles()
                .iter()
                .filter(|tri| {
                    [
                        Diagonal::sorted(tri[0], tri[1]),
                        Diagonal::sorted(tri[1], tri[2]),
                        Diagonal::sorted(tri[0], tri[2]),
                    ]
                    .iter()
                    .all(|s| t.contains(*s))
                })
                .count();
            assert_eq!(q.relations.len(), 3 * internal);
            assert_eq!(q.acyclic, internal == 0);
        }
    }

    fn enumerate_triangulations_of_octagon() -> Vec<LabeledTriangulation> {
        crate::polygon::enumerate_triangulations(8)
            .into_iter()
            .map(|d| LabeledTriangulation::new(8, d).unwrap())
            .collect()
    }

    #[test]
    fn string_module_of_example() {
        let t = ex_quiver_t();
        let q = BoundQuiver::from_triangulation(&t).unwrap();
        // gamma = (4, 1) crosses diagonals 1, 2, 3: the module 2/13
        let l = rep_from_diagonal(&t, &q, Diagonal::sorted(4, 1)).unwrap();
        assert_eq!(l.dims, vec![1, 1, 1, 0, 0]);
        // distinct diagonals give distinct dimension vectors
        let mut seen = BTreeSet::new();
        for gamma in all_diagonals(8) {
            if t.contains(gamma) {
                continue;
            }
            let l = rep_from_diagonal(&t, &q, gamma).unwrap();
            assert!(seen.insert(l.dims.clone()), "duplicate dims for {gamma}");
        }
    }

    #[test]
    fn nabla_involution_and_fixed_points() {
        let set: BTreeSet<Diagonal> = [(3, 5), (1, 7), (3, 6), (2, 7), (2, 6)]
            .iter()
            .map(|&(a, b)| Diagonal::sorted(a, b))
            .collect();
        let t = canonical_labeling(3, &set, 6, 2).unwrap();
        let ctx = SymContext::new(t).unwrap();
        for gamma in all_diagonals(8) {
            if ctx.t_prime.contains(gamma) {
                continue;
            }
            let l = rep_from_diagonal(&ctx.t_prime, &ctx.q_prime, gamma).unwrap();
            let nl = nabla(&ctx.q_prime, &l).unwrap();
            assert_eq!(nabla(&ctx.q_prime, &nl).unwrap(), l);
            let rho_img = ctx.t.rho_diag(gamma);
            let l_rho = rep_from_diagonal(&ctx.t_prime, &ctx.q_prime, rho_img).unwrap();
            assert_eq!(nl, l_rho);
            assert_eq!(gamma == rho_img, nl == l);
        }
    }

    #[test]
    fn simple_module_f_polynomial() {
        let t = ex_quiver_t();
        let q = BoundQuiver::from_triangulation(&t).unwrap();
        let s3 = QuiverRep::simple(5, 3);
        let f = f_polynomial_of_rep(&q, &[s3]).unwrap();
        assert_eq!(f, parse_poly("y3 + 1", 5).unwrap());
    }

    #[test]
    fn string_f_polynomial_2_13() {
        let t = ex_quiver_t();
        let q = BoundQuiver::from_triangulation(&t).unwrap();
        let l = rep_from_diagonal(&t, &q, Diagonal::sorted(4, 1)).unwrap();
        let f = f_polynomial_of_rep(&q, &[l]).unwrap();
        assert_eq!(
            f,
            parse_poly("y1*y2*y3 + y1*y3 + y1 + y3 + 1", 5).unwrap()
        );
    }

    #[test]
    fn orthogonal_indecomposable_count() {
        // fan T': 9 = n^2 orthogonal symmetric indecomposables for n = 3
        let set: BTreeSet<Diagonal> = [(2, 4), (2, 5), (2, 6), (0, 6), (1, 6)]
            .iter()
            .map(|&(a, b)| Diagonal::sorted(a, b))
            .collect();
        let t = canonical_labeling(3, &set, 6, 2).unwrap();
        let ctx = SymContext::new(t).unwrap();
        let mut count = 0;
        let mut seen: BTreeSet<Vec<Diagonal>> = BTreeSet::new();
        for gamma in all_diagonals(8) {
            if ctx.t_prime.contains(gamma) {
                continue;
            }
            let mut orbit = vec![gamma, ctx.t.rho_diag(gamma)];
            orbit.sort();
            orbit.dedup();
            if seen.insert(orbit) {
                count += 1;
            }
        }
        assert_eq!(count, 9);
    }

    #[test]
    fn subrep_enumeration_matches_brute_force() {
        // independent check: enumerate all 0/1 vectors <= dims and keep those
        // stable under the arrow maps
        let t = ex_quiver_t();
        let q = BoundQuiver::from_triangulation(&t).unwrap();
        for gamma in all_diagonals(8) {
            if t.contains(gamma) {
                continue;
            }
            let l = rep_from_diagonal(&t, &q, gamma).unwrap();
            let fast = subrep_dims(&q, &l);
            let mut slow = Vec::new();
            let verts = q.vertices;
            'vecs: for mask in 0u32..(1 << verts) {
                let e: Vec<u32> = (0..verts).map(|i| (mask >> i) & 1).collect();
                for i in 0..verts {
                    if e[i] > l.dims[i] {
                        continue 'vecs;
                    }
                }
                for (ai, &(s, tt)) in q.arrows.iter().enumerate() {
                    if l.arrow_map(&q, ai) != 0 && e[s - 1] == 1 && e[tt - 1] == 0 {
                        continue 'vecs;
                    }
                }
                slow.push(e);
            }
            slow.sort();
            assert_eq!(fast, slow);
        }
    }

    #[test]
    fn restriction_truncates_and_splits() {
        let set: BTreeSet<Diagonal> = [(3, 5), (1, 7), (3, 6), (2, 7), (2, 6)]
            .iter()
            .map(|&(a, b)| Diagonal::sorted(a, b))
            .collect();
        let t = canonical_labeling(3, &set, 6, 2).unwrap();
        let ctx = SymContext::new(t).unwrap();
        let orb = ThetaOrbit::of(8, Diagonal::sorted(3, 0));
        let m = ctx.symmetric_of_orbit(&orb, Flavor::Orthogonal).unwrap();
        assert_eq!(m.kind, SymKind::S);
        let res = ctx.restriction_of(&m);
        // dims of Res(M) = first-n truncation of dims of M
        let mut total = vec![0u32; ctx.q_bar.vertices];
        for r in &res {
            for (d, &x) in total.iter_mut().zip(&r.dims) {
                *d += x;
            }
        }
        let full = m.total_dims();
        assert_eq!(&total[..], &full[..3]);
    }
}
