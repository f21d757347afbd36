//! Combinatorics of the regular polygon `P_m`, vertices `0..m` numbered
//! counterclockwise: diagonals and crossing tests, the rotation `theta` and
//! reflection `rho`, theta-invariant triangulations with their canonical
//! labeling and restriction to `P_{n+3}`, elementary laminations, and the
//! cut-flip-glue involution `F_d`.
//!
//! Everything is pure index arithmetic; no coordinates are ever computed.

use crate::error::{Error, Result};
use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

/// A diagonal of `P_m`, stored with `a < b`. Endpoints must be distinct and
/// non-adjacent modulo `m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Diagonal {
    pub a: usize,
    pub b: usize,
}

impl Diagonal {
    pub fn new(m: usize, x: usize, y: usize) -> Result<Diagonal> {
        if x >= m || y >= m {
            return Err(Error::InvalidDiagonal(format!(
                "vertex out of range for P_{m}: ({x},{y})"
            )));
        }
        if x == y || adjacent(m, x, y) {
            return Err(Error::InvalidDiagonal(format!(
                "({x},{y}) is not a diagonal of P_{m}"
            )));
        }
        Ok(Self::sorted(x, y))
    }

    pub fn sorted(x: usize, y: usize) -> Diagonal {
        if x < y {
            Diagonal { a: x, b: y }
        } else {
            Diagonal { a: y, b: x }
        }
    }

    pub fn contains(&self, v: usize) -> bool {
        self.a == v || self.b == v
    }

    pub fn other(&self, v: usize) -> usize {
        if self.a == v {
            self.b
        } else {
            self.a
        }
    }

    pub fn is_diameter(&self, m: usize) -> bool {
        (self.b - self.a) * 2 == m
    }
}

impl fmt::Display for Diagonal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.a, self.b)
    }
}

/// A chord of the polygon that may be a genuine diagonal, a boundary edge, or
/// an image collapsed to a point by restriction. Boundary and collapsed
/// chords carry `F = 1` downstream.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Chord {
    Diag(Diagonal),
    Boundary(usize, usize),
    Collapsed,
}

impl Chord {
    /// Build a chord from two (not necessarily distinct) vertices of `P_m`.
    pub fn from_vertices(m: usize, x: usize, y: usize) -> Chord {
        if x == y {
            Chord::Collapsed
        } else if adjacent(m, x, y) {
            let (a, b) = if x < y { (x, y) } else { (y, x) };
            Chord::Boundary(a, b)
        } else {
            Chord::Diag(Diagonal::sorted(x, y))
        }
    }

    pub fn endpoints(&self) -> Option<(usize, usize)> {
        match *self {
            Chord::Diag(d) => Some((d.a, d.b)),
            Chord::Boundary(a, b) => Some((a, b)),
            Chord::Collapsed => None,
        }
    }

    pub fn as_diagonal(&self) -> Option<Diagonal> {
        match *self {
            Chord::Diag(d) => Some(d),
            _ => None,
        }
    }
}

impl fmt::Display for Chord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Chord::Diag(d) => write!(f, "{d}"),
            Chord::Boundary(a, b) => write!(f, "[{a},{b}]bd"),
            Chord::Collapsed => write!(f, "(pt)"),
        }
    }
}

pub fn adjacent(m: usize, x: usize, y: usize) -> bool {
    (x + 1) % m == y || (y + 1) % m == x
}

/// `v` strictly inside the ccw open arc from `s` to `e` (all mod `m`).
fn in_open_arc(m: usize, v: usize, s: usize, e: usize) -> bool {
    let span = (e + m - s) % m;
    let off = (v + m - s) % m;
    off > 0 && off < span
}

/// Strict interior crossing of two chords; sharing an endpoint counts as
/// non-crossing.
pub fn crosses(m: usize, d1: Diagonal, d2: Diagonal) -> bool {
    if d1.contains(d2.a) || d1.contains(d2.b) {
        return false;
    }
    in_open_arc(m, d2.a, d1.a, d1.b) != in_open_arc(m, d2.b, d1.a, d1.b)
}

/// The 180-degree rotation on vertices of `P_m` (`m` even).
pub fn theta_vertex(m: usize, v: usize) -> usize {
    (v + m / 2) % m
}

pub fn theta_diag(m: usize, d: Diagonal) -> Diagonal {
    Diagonal::sorted(theta_vertex(m, d.a), theta_vertex(m, d.b))
}

/// A theta-orbit: a diameter (singleton) or a centrally symmetric pair,
/// stored sorted.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ThetaOrbit {
    pub reps: Vec<Diagonal>,
}

impl ThetaOrbit {
    pub fn of(m: usize, d: Diagonal) -> ThetaOrbit {
        let t = theta_diag(m, d);
        let mut reps = if t == d { vec![d] } else { vec![d, t] };
        reps.sort();
        ThetaOrbit { reps }
    }

    pub fn is_diameter(&self) -> bool {
        self.reps.len() == 1
    }

    /// Smallest representative, used as the orbit's display key `[a,b]`.
    pub fn key(&self) -> Diagonal {
        self.reps[0]
    }

    pub fn contains(&self, d: Diagonal) -> bool {
        self.reps.contains(&d)
    }
}

impl fmt::Display for ThetaOrbit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.key().a, self.key().b)
    }
}

/// All diagonals of `P_m`.
pub fn all_diagonals(m: usize) -> Vec<Diagonal> {
    let mut out = Vec::new();
    for a in 0..m {
        for b in a + 1..m {
            if !adjacent(m, a, b) {
                out.push(Diagonal { a, b });
            }
        }
    }
    out
}

/// All theta-orbits of diagonals of `P_{2n+2}`, in sorted order.
pub fn all_theta_orbits(n: usize) -> Vec<ThetaOrbit> {
    let m = 2 * n + 2;
    let mut set = BTreeSet::new();
    for d in all_diagonals(m) {
        set.insert(ThetaOrbit::of(m, d));
    }
    set.into_iter().collect()
}

/// A triangulation of `P_m` with an ordered labeling `tau_1..tau_k`
/// (`k = m - 3`). The label order is significant: it indexes matrix rows,
/// cluster variables and quiver vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledTriangulation {
    pub m: usize,
    pub taus: Vec<Diagonal>,
}

impl LabeledTriangulation {
    pub fn new(m: usize, taus: Vec<Diagonal>) -> Result<Self> {
        let t = LabeledTriangulation { m, taus };
        t.validate()?;
        Ok(t)
    }

    fn validate(&self) -> Result<()> {
        if self.m < 4 {
            return Err(Error::InvalidTriangulation(format!("P_{} too small", self.m)));
        }
        if self.taus.len() != self.m - 3 {
            return Err(Error::InvalidTriangulation(format!(
                "expected {} diagonals for P_{}, got {}",
                self.m - 3,
                self.m,
                self.taus.len()
            )));
        }
        for (i, d) in self.taus.iter().enumerate() {
            Diagonal::new(self.m, d.a, d.b)?;
            for d2 in &self.taus[i + 1..] {
                if d == d2 {
                    return Err(Error::InvalidTriangulation(format!("duplicate {d}")));
                }
                if crosses(self.m, *d, *d2) {
                    return Err(Error::InvalidTriangulation(format!("{d} crosses {d2}")));
                }
            }
        }
        Ok(())
    }

    pub fn rank(&self) -> usize {
        self.taus.len()
    }

    pub fn contains(&self, d: Diagonal) -> bool {
        self.taus.contains(&d)
    }

    /// Position (1-based label) of a diagonal.
    pub fn label_of(&self, d: Diagonal) -> Option<usize> {
        self.taus.iter().position(|&t| t == d).map(|i| i + 1)
    }

    /// All triangle faces, as sorted vertex triples. A triple is a face iff
    /// all three connecting chords are sides (boundary edges or diagonals).
    pub fn triangles(&self) -> Vec<[usize; 3]> {
        triangles_of(self.m, &self.taus)
    }

    /// Labels of the diagonals crossed by a chord.
    pub fn crossings(&self, c: &Chord) -> BTreeSet<usize> {
        let mut out = BTreeSet::new();
        if let Some((x, y)) = c.endpoints() {
            if let Chord::Diag(d) = Chord::from_vertices(self.m, x, y) {
                for (i, t) in self.taus.iter().enumerate() {
                    if crosses(self.m, d, *t) {
                        out.insert(i + 1);
                    }
                }
            }
        }
        out
    }

    /// Flip the diagonal at 1-based label `pos`, returning the new
    /// triangulation (same label order, one entry replaced) and the new
    /// diagonal.
    pub fn flip(&self, pos: usize) -> Result<(LabeledTriangulation, Diagonal)> {
        let old = self.taus[pos - 1];
        let rest: Vec<Diagonal> = self
            .taus
            .iter()
            .copied()
            .filter(|&d| d != old)
            .collect();
        let mut found = None;
        for cand in all_diagonals(self.m) {
            if cand == old || rest.contains(&cand) {
                continue;
            }
            if rest.iter().all(|&r| !crosses(self.m, cand, r)) {
                if found.is_some() {
                    return Err(Error::Model(format!("flip of {old} not unique")));
                }
                found = Some(cand);
            }
        }
        let new = found.ok_or_else(|| Error::Model(format!("no flip for {old}")))?;
        let mut taus = self.taus.clone();
        taus[pos - 1] = new;
        Ok((LabeledTriangulation { m: self.m, taus }, new))
    }
}

pub fn triangles_of(m: usize, diags: &[Diagonal]) -> Vec<[usize; 3]> {
    let dset: BTreeSet<Diagonal> = diags.iter().copied().collect();
    let side = |x: usize, y: usize| adjacent(m, x, y) || dset.contains(&Diagonal::sorted(x, y));
    let mut out = Vec::new();
    for x in 0..m {
        for y in x + 1..m {
            if !side(x, y) {
                continue;
            }
            for z in y + 1..m {
                if side(y, z) && side(x, z) {
                    out.push([x, y, z]);
                }
            }
        }
    }
    out
}

/// In the ccw side cycle `(x,y) -> (y,z) -> (z,x)` of a face `{x<y<z}`,
/// `succ` is the side immediately following `side` counterclockwise.
pub fn ccw_successor(tri: [usize; 3], side: Diagonal) -> Diagonal {
    let [x, y, z] = tri;
    let s1 = Diagonal::sorted(x, y);
    let s2 = Diagonal::sorted(y, z);
    let s3 = Diagonal::sorted(x, z);
    if side == s1 {
        s2
    } else if side == s2 {
        s3
    } else {
        debug_assert_eq!(side, s3);
        s1
    }
}

/// All triangulations of `P_m` (as sorted diagonal sets), enumerated by the
/// classic recursion on the triangle over one fixed boundary edge.
pub fn enumerate_triangulations(m: usize) -> Vec<Vec<Diagonal>> {
    fn rec(m: usize, verts: &[usize]) -> Vec<Vec<Diagonal>> {
        if verts.len() < 3 {
            return vec![vec![]];
        }
        let a = verts[0];
        let b = *verts.last().unwrap();
        let mut out = Vec::new();
        for k in 1..verts.len() - 1 {
            let c = verts[k];
            let lefts = rec(m, &verts[..=k]);
            let rights = rec(m, &verts[k..]);
            for l in &lefts {
                for r in &rights {
                    let mut t = l.clone();
                    t.extend_from_slice(r);
                    if !adjacent(m, a, c) {
                        t.push(Diagonal::sorted(a, c));
                    }
                    if !adjacent(m, c, b) {
                        t.push(Diagonal::sorted(c, b));
                    }
                    out.push(t);
                }
            }
        }
        out
    }
    let verts: Vec<usize> = (0..m).collect();
    let mut all = rec(m, &verts);
    for t in &mut all {
        t.sort();
    }
    all.sort();
    all
}

/// A theta-invariant triangulation of `P_{2n+2}` with oriented diameter
/// `d = (tail, head)` and canonical labels `tau_1..tau_{2n-1}`:
/// `tau_n = d`, `tau_1..tau_{n-1}` strictly left of `d` ordered by
/// decreasing separation from the collapsed corner, and
/// `tau_{2n-i} = theta(tau_i)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThetaTriangulation {
    pub n: usize,
    pub tail: usize,
    pub head: usize,
    pub taus: Vec<Diagonal>,
}

impl ThetaTriangulation {
    pub fn m(&self) -> usize {
        2 * self.n + 2
    }

    pub fn diameter(&self) -> Diagonal {
        Diagonal::sorted(self.tail, self.head)
    }

    pub fn theta(&self, v: usize) -> usize {
        theta_vertex(self.m(), v)
    }

    /// Reflection along the oriented diameter.
    pub fn rho(&self, v: usize) -> usize {
        (2 * self.tail + self.m() - v % self.m()) % self.m()
    }

    pub fn rho_diag(&self, d: Diagonal) -> Diagonal {
        Diagonal::sorted(self.rho(d.a), self.rho(d.b))
    }

    /// Position of `v` on the closed left arc `head..tail` (ccw), or `None`
    /// if `v` lies strictly right of the diameter. `head` has position 0 and
    /// `tail` position `n+1`.
    pub fn left_position(&self, v: usize) -> Option<usize> {
        let pos = (v + self.m() - self.head) % self.m();
        (pos <= self.n + 1).then_some(pos)
    }

    pub fn strictly_left(&self, v: usize) -> bool {
        self.left_position(v).map(|p| p >= 1 && p <= self.n).unwrap_or(false)
    }

    pub fn strictly_right(&self, v: usize) -> bool {
        self.left_position(v).is_none()
    }

    /// Restricted vertex: left-arc position, or the collapsed vertex `*`
    /// (index `n+2` of `P_{n+3}`).
    pub fn restrict_vertex(&self, v: usize) -> usize {
        self.left_position(v).unwrap_or(self.n + 2)
    }

    pub const fn star(&self) -> usize {
        self.n + 2
    }

    /// Inverse of `restrict_vertex` on non-star vertices.
    pub fn unrestrict_vertex(&self, rv: usize) -> usize {
        debug_assert!(rv <= self.n + 1);
        (self.head + rv) % self.m()
    }

    /// The restriction `T-bar` of this triangulation: the triangulation of
    /// `P_{n+3}` formed by `tau_1..tau_{n-1}` and the image of `d`, with
    /// `tau_n = d` mapping to `(0, n+1)`.
    pub fn restricted(&self) -> LabeledTriangulation {
        let taus = (1..=self.n)
            .map(|i| {
                let t = self.taus[i - 1];
                Diagonal::sorted(self.restrict_vertex(t.a), self.restrict_vertex(t.b))
            })
            .collect();
        LabeledTriangulation {
            m: self.n + 3,
            taus,
        }
    }

    /// Image of an original-polygon chord in `P_{n+3}`.
    pub fn restrict_chord(&self, d: Diagonal) -> Chord {
        Chord::from_vertices(
            self.n + 3,
            self.restrict_vertex(d.a),
            self.restrict_vertex(d.b),
        )
    }

    /// Restriction of a theta-orbit: the distinct non-collapsed images of its
    /// diagonals (diagonals first, then boundary images).
    pub fn restrict_orbit(&self, orb: &ThetaOrbit) -> Vec<Chord> {
        let mut seen = BTreeSet::new();
        let mut diags = Vec::new();
        let mut other = Vec::new();
        for &rep in &orb.reps {
            let c = self.restrict_chord(rep);
            if !seen.insert(c) {
                continue;
            }
            match c {
                Chord::Diag(_) => diags.push(c),
                Chord::Boundary(..) => other.push(c),
                Chord::Collapsed => {}
            }
        }
        diags.extend(other);
        diags
    }

    /// `Res([a,b])`: the genuine diagonals of `P_{n+3}` among the restricted
    /// images, ordered by their left endpoint (closest to `head` first).
    pub fn res(&self, orb: &ThetaOrbit) -> Vec<Diagonal> {
        let mut out: Vec<Diagonal> = self
            .restrict_orbit(orb)
            .iter()
            .filter_map(|c| c.as_diagonal())
            .collect();
        out.sort_by_key(|d| d.a.min(d.b));
        out
    }

    /// Does the orbit cross the diameter (equivalently, is `Res` a pair)?
    pub fn orbit_crosses_diameter(&self, orb: &ThetaOrbit) -> bool {
        orb.reps
            .iter()
            .any(|&r| crosses(self.m(), r, self.diameter()))
    }

    /// The rotated restriction of Definition `Res~`: one or two chords of
    /// `P_{n+3}`. The second chord, when it exists, crosses the same
    /// diagonals of `T-bar` as the reference image except the diameter.
    pub fn res_tilde(&self, orb: &ThetaOrbit) -> Vec<Chord> {
        let tbar = self.restricted();
        let n = self.n;
        let search_companion = |of: &Chord| -> Option<Chord> {
            let mut target = tbar.crossings(of);
            target.remove(&n);
            let mut found = Vec::new();
            for cand in all_diagonals(n + 3) {
                if tbar.contains(cand) {
                    continue;
                }
                let cs = tbar.crossings(&Chord::Diag(cand));
                if cs == target && Chord::Diag(cand) != *of {
                    found.push(cand);
                }
            }
            match found.len() {
                0 => None,
                1 => Some(Chord::Diag(found[0])),
                _ => panic!("rotated restriction target chord not unique"),
            }
        };
        if orb.is_diameter() {
            let gamma = Chord::Diag(self.res(orb)[0]);
            match search_companion(&gamma) {
                Some(g2) => vec![gamma, g2],
                None => vec![gamma],
            }
        } else if !self.orbit_crosses_diameter(orb) {
            self.res(orb).into_iter().map(Chord::Diag).collect()
        } else {
            let res = self.res(orb);
            debug_assert_eq!(res.len(), 2);
            // Both share the right endpoint *; gamma_1 has the left endpoint
            // closer to head, gamma_2 is obtained from it by rotating the
            // left endpoint counterclockwise.
            let g1 = Chord::Diag(res[0]);
            let g2 = Chord::Diag(res[1]);
            match search_companion(&g2) {
                Some(g2t) => vec![g1, g2t],
                None => vec![g1],
            }
        }
    }

    /// The image of a diagonal under the cut-flip-glue involution `F_d`:
    /// the right half is reflected onto itself (reversing the diameter), the
    /// left half is fixed, and diagonals crossing `d` are re-straightened by
    /// isotopy.
    pub fn f_d(&self, d: Diagonal) -> Diagonal {
        let m = self.m();
        let refl = |v: usize| (self.tail + self.head + 2 * m - v) % m;
        let on_closed_right =
            |v: usize| !self.strictly_left(v);
        if on_closed_right(d.a) && on_closed_right(d.b) {
            Diagonal::sorted(refl(d.a), refl(d.b))
        } else {
            let map = |v: usize| if self.strictly_right(v) { refl(v) } else { v };
            Diagonal::sorted(map(d.a), map(d.b))
        }
    }

    pub fn f_d_orbit(&self, orb: &ThetaOrbit) -> Vec<Diagonal> {
        let mut out: BTreeSet<Diagonal> = orb.reps.iter().map(|&r| self.f_d(r)).collect();
        let v: Vec<Diagonal> = out.iter().copied().collect();
        // sanity: the image is a rho-orbit
        for d in &v {
            out.insert(self.rho_diag(*d));
        }
        debug_assert_eq!(out.len(), v.len(), "F_d image is not rho-closed");
        v
    }

    /// The rho-invariant triangulation `T'` in the isotopy class of
    /// `F_d(T)`: the left half of `T` together with its rho-reflection,
    /// labeled so that `tau'_i = tau_i` for `i <= n` and
    /// `tau'_{2n-i} = rho(tau'_i)`.
    pub fn t_prime(&self) -> LabeledTriangulation {
        let n = self.n;
        let mut taus = Vec::with_capacity(2 * n - 1);
        for i in 1..=n {
            taus.push(self.taus[i - 1]);
        }
        for i in (1..n).rev() {
            taus.push(self.rho_diag(self.taus[i - 1]));
        }
        let t = LabeledTriangulation {
            m: self.m(),
            taus,
        };
        t.validate().expect("F_d image of a theta-triangulation");
        t
    }

    /// The orbit of the initial cluster position `k` (1-based):
    /// `{tau_k, theta(tau_k)}`.
    pub fn initial_orbit(&self, k: usize) -> ThetaOrbit {
        ThetaOrbit::of(self.m(), self.taus[k - 1])
    }

    /// All diagonals as an unlabeled set.
    pub fn diagonal_set(&self) -> BTreeSet<Diagonal> {
        self.taus.iter().copied().collect()
    }
}

/// Build the canonical labeling of a theta-invariant triangulation given its
/// oriented diameter. `tau_1..tau_{n-1}` are the diagonals strictly left of
/// `d`, ordered by decreasing dual-tree distance from the corner triangle at
/// the collapsed vertex; `tau_n = d`; `tau_{2n-i} = theta(tau_i)`.
pub fn canonical_labeling(
    n: usize,
    diagonals: &BTreeSet<Diagonal>,
    tail: usize,
    head: usize,
) -> Result<ThetaTriangulation> {
    let m = 2 * n + 2;
    if n < 2 {
        return Err(Error::InvalidTriangulation("rank must be >= 2".into()));
    }
    if (tail + n + 1) % m != head {
        return Err(Error::InvalidDiagonal(format!(
            "({tail},{head}) is not a diameter of P_{m}"
        )));
    }
    let d = Diagonal::sorted(tail, head);
    if !diagonals.contains(&d) {
        return Err(Error::InvalidTriangulation(format!(
            "diameter {d} not in triangulation"
        )));
    }
    // theta-invariance and diameter uniqueness
    for t in diagonals {
        if !diagonals.contains(&theta_diag(m, *t)) {
            return Err(Error::NotThetaInvariant);
        }
        if t.is_diameter(m) && *t != d {
            return Err(Error::InvalidTriangulation(
                "more than one diameter".into(),
            ));
        }
    }
    let base = ThetaTriangulation {
        n,
        tail,
        head,
        taus: Vec::new(),
    };
    let mut left: Vec<Diagonal> = diagonals
        .iter()
        .copied()
        .filter(|t| {
            *t != d && base.left_position(t.a).is_some() && base.left_position(t.b).is_some()
        })
        .collect();
    if left.len() != n - 1 {
        return Err(Error::InvalidTriangulation(format!(
            "expected {} left diagonals, found {}",
            n - 1,
            left.len()
        )));
    }
    // Depth in the restricted triangulation's dual tree, measured from the
    // corner triangle at the collapsed vertex.
    let rtaus: Vec<Diagonal> = left
        .iter()
        .chain(std::iter::once(&d))
        .map(|t| Diagonal::sorted(base.restrict_vertex(t.a), base.restrict_vertex(t.b)))
        .collect();
    let depth = dual_depths(n + 3, &rtaus, n + 2);
    left.sort_by_key(|t| {
        let img = Diagonal::sorted(base.restrict_vertex(t.a), base.restrict_vertex(t.b));
        (std::cmp::Reverse(depth[&img]), img)
    });
    let mut taus = left;
    taus.push(d);
    for i in (1..n).rev() {
        let ti = taus[i - 1];
        taus.push(theta_diag(m, ti));
    }
    let t = ThetaTriangulation {
        n,
        tail,
        head,
        taus,
    };
    LabeledTriangulation {
        m,
        taus: t.taus.clone(),
    }
    .validate()?;
    Ok(t)
}

/// BFS distance, in diagonals crossed, from the triangle incident to
/// `corner` to each diagonal of the triangulation.
fn dual_depths(m: usize, diags: &[Diagonal], corner: usize) -> BTreeMap<Diagonal, usize> {
    let tris = triangles_of(m, diags);
    let dset: BTreeSet<Diagonal> = diags.iter().copied().collect();
    let start = tris
        .iter()
        .position(|t| t.contains(&corner))
        .expect("corner triangle");
    let mut depth = BTreeMap::new();
    let mut tri_seen = vec![false; tris.len()];
    let mut queue = VecDeque::new();
    tri_seen[start] = true;
    queue.push_back((start, 0usize));
    while let Some((ti, lvl)) = queue.pop_front() {
        let [x, y, z] = tris[ti];
        for side in [
            Diagonal::sorted(x, y),
            Diagonal::sorted(y, z),
            Diagonal::sorted(x, z),
        ] {
            if !dset.contains(&side) {
                continue;
            }
            depth.entry(side).or_insert(lvl);
            for (tj, tri) in tris.iter().enumerate() {
                if tri_seen[tj] {
                    continue;
                }
                let sides_tj = [
                    Diagonal::sorted(tri[0], tri[1]),
                    Diagonal::sorted(tri[1], tri[2]),
                    Diagonal::sorted(tri[0], tri[2]),
                ];
                if sides_tj.contains(&side) {
                    tri_seen[tj] = true;
                    queue.push_back((tj, lvl + 1));
                }
            }
        }
    }
    depth
}

/// All theta-invariant triangulations of `P_{2n+2}`, canonically labeled with
/// the diameter oriented from its smaller endpoint, in deterministic order.
pub fn enumerate_theta_triangulations(n: usize) -> Result<Vec<ThetaTriangulation>> {
    if n < 2 {
        return Err(Error::InvalidTriangulation("rank must be >= 2".into()));
    }
    let m = 2 * n + 2;
    let mut out = Vec::new();
    for t in enumerate_triangulations(m) {
        let set: BTreeSet<Diagonal> = t.iter().copied().collect();
        if !set.iter().all(|d| set.contains(&theta_diag(m, *d))) {
            continue;
        }
        let diameters: Vec<Diagonal> = set.iter().copied().filter(|d| d.is_diameter(m)).collect();
        if diameters.len() != 1 {
            return Err(Error::Model(
                "theta-invariant triangulation without unique diameter".into(),
            ));
        }
        let d = diameters[0];
        out.push(canonical_labeling(n, &set, d.a, d.b)?);
    }
    Ok(out)
}

/// Does the elementary lamination of `lam` (its copy shifted clockwise off
/// both endpoints) cross the given chord? Computed with doubled vertex
/// coordinates: the lamination endpoint near `a` sits at `2a - 1`. A
/// lamination never crosses its own diagonal.
pub fn lamination_crosses(m: usize, lam: Diagonal, chord: &Chord) -> bool {
    let Some((x, y)) = chord.endpoints() else {
        return false;
    };
    if Diagonal::sorted(x, y) == lam {
        return false;
    }
    let mm = 2 * m;
    let p1 = (2 * lam.a + mm - 1) % mm;
    let p2 = (2 * lam.b + mm - 1) % mm;
    let q1 = 2 * x;
    let q2 = 2 * y;
    in_open_arc(mm, q1, p1, p2) != in_open_arc(mm, q2, p1, p2)
}

/// The crossing vector of Prop. "skein": bit `i` is 1 iff the elementary
/// lamination of `tau_i` crosses both chords.
pub fn lamination_vector(t: &LabeledTriangulation, c1: &Chord, c2: &Chord) -> Vec<u32> {
    t.taus
        .iter()
        .map(|&tau| {
            (lamination_crosses(t.m, tau, c1) && lamination_crosses(t.m, tau, c2)) as u32
        })
        .collect()
}

/// Flip one theta-orbit of a theta-invariant triangulation. `orbits` is the
/// current cluster of orbits; the orbit at `pos` (1-based) is replaced by the
/// unique other orbit completing the rest to a theta-invariant triangulation.
pub fn flip_theta_orbit(
    n: usize,
    orbits: &[ThetaOrbit],
    pos: usize,
) -> Result<(Vec<ThetaOrbit>, ThetaOrbit)> {
    let m = 2 * n + 2;
    let old = &orbits[pos - 1];
    let rest: Vec<Diagonal> = orbits
        .iter()
        .enumerate()
        .filter(|(i, _)| *i != pos - 1)
        .flat_map(|(_, o)| o.reps.iter().copied())
        .collect();
    let mut found: Option<ThetaOrbit> = None;
    for cand in all_theta_orbits(n) {
        if &cand == old {
            continue;
        }
        if cand.reps.iter().any(|d| rest.contains(d)) {
            continue;
        }
        let mut all: Vec<Diagonal> = rest.clone();
        all.extend(cand.reps.iter().copied());
        if all.len() != 2 * n - 1 {
            continue;
        }
        let ok = all
            .iter()
            .enumerate()
            .all(|(i, d1)| all[i + 1..].iter().all(|d2| !crosses(m, *d1, *d2)));
        if !ok {
            continue;
        }
        if all.iter().filter(|d| d.is_diameter(m)).count() != 1 {
            continue;
        }
        if found.is_some() {
            return Err(Error::Model("theta-flip not unique".into()));
        }
        found = Some(cand);
    }
    let new = found.ok_or_else(|| Error::Model("no theta-flip found".into()))?;
    let mut out = orbits.to_vec();
    out[pos - 1] = new.clone();
    Ok((out, new))
}

/// Parse the text format `m; (a1,b1) (a2,b2) ...`.
pub fn parse_triangulation(text: &str) -> Result<(usize, Vec<Diagonal>)> {
    let text = text.trim();
    let (m_str, rest) = text
        .split_once(';')
        .ok_or_else(|| Error::Parse("expected 'm; (a,b) ...'".into()))?;
    let m: usize = m_str
        .trim()
        .parse()
        .map_err(|_| Error::Parse(format!("bad vertex count '{}'", m_str.trim())))?;
    let mut diags = Vec::new();
    for tok in rest.split_whitespace() {
        let (a, b) = parse_vertex_pair(tok)?;
        diags.push(Diagonal::new(m, a, b)?);
    }
    Ok((m, diags))
}

/// Parse `(a,b)` or `[a,b]`.
pub fn parse_vertex_pair(tok: &str) -> Result<(usize, usize)> {
    let inner = tok
        .trim()
        .trim_start_matches(['(', '['])
        .trim_end_matches([')', ']']);
    let (a, b) = inner
        .split_once(',')
        .ok_or_else(|| Error::Parse(format!("bad vertex pair '{tok}'")))?;
    let a = a
        .trim()
        .parse()
        .map_err(|_| Error::Parse(format!("bad vertex '{a}'")))?;
    let b = b
        .trim()
        .parse()
        .map_err(|_| Error::Parse(format!("bad vertex '{b}'")))?;
    Ok((a, b))
}

pub fn triangulation_to_json(t: &ThetaTriangulation) -> serde_json::Value {
    serde_json::json!({
        "n": t.n,
        "diagonals": t.taus.iter().map(|d| vec![d.a, d.b]).collect::<Vec<_>>(),
        "diameter": [t.tail, t.head],
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    /// The octagon triangulation of the matrix figure: fan at the diameter
    /// ends, d oriented (6, 2).
    pub(crate) fn fig_matrix_triangulation() -> ThetaTriangulation {
        let set: BTreeSet<Diagonal> = [(2, 7), (0, 2), (4, 6), (3, 6), (2, 6)]
            .iter()
            .map(|&(a, b)| Diagonal::sorted(a, b))
            .collect();
        canonical_labeling(3, &set, 6, 2).unwrap()
    }

    #[test]
    fn crossing_basics() {
        assert!(crosses(8, Diagonal::sorted(0, 4), Diagonal::sorted(2, 6)));
        assert!(!crosses(8, Diagonal::sorted(0, 4), Diagonal::sorted(0, 2)));
        // gamma = (1,4) in the hexagon crosses all three fan diagonals
        let t = [(3, 5), (0, 3), (0, 2)];
        let gamma = Diagonal::sorted(1, 4);
        for (a, b) in t {
            assert!(crosses(6, gamma, Diagonal::sorted(a, b)));
        }
    }

    #[test]
    fn theta_orbits() {
        let orb = ThetaOrbit::of(8, Diagonal::sorted(0, 4));
        assert!(orb.is_diameter());
        let orb = ThetaOrbit::of(8, Diagonal::sorted(0, 2));
        assert_eq!(orb.reps, vec![Diagonal::sorted(0, 2), Diagonal::sorted(4, 6)]);
        for d in all_diagonals(10) {
            assert_eq!(theta_diag(10, theta_diag(10, d)), d);
        }
    }

    #[test]
    fn orbit_count_is_n_squared_plus_n() {
        for n in 2..=4 {
            assert_eq!(all_theta_orbits(n).len(), n * n + n);
        }
        // P_8: 20 diagonals, 4 diameters, 8 pairs
        let m = 8;
        let diags = all_diagonals(m);
        assert_eq!(diags.len(), 20);
        assert_eq!(diags.iter().filter(|d| d.is_diameter(m)).count(), 4);
    }

    #[test]
    fn theta_triangulation_counts() {
        assert_eq!(enumerate_theta_triangulations(2).unwrap().len(), 6);
        assert_eq!(enumerate_theta_triangulations(3).unwrap().len(), 20);
    }

    #[test]
    fn catalan_counts() {
        assert_eq!(enumerate_triangulations(6).len(), 14);
        assert_eq!(enumerate_triangulations(8).len(), 132);
    }

    #[test]
    fn canonical_labels_match_figure() {
        let t = fig_matrix_triangulation();
        assert_eq!(t.taus[0], Diagonal::sorted(4, 6)); // tau_1 = (bottom, left-lower)
        assert_eq!(t.taus[1], Diagonal::sorted(3, 6)); // tau_2 = (bottom, left-upper)
        assert_eq!(t.taus[2], Diagonal::sorted(2, 6)); // tau_3 = d
        assert_eq!(t.taus[3], theta_diag(8, t.taus[1]));
        assert_eq!(t.taus[4], theta_diag(8, t.taus[0]));
        // restriction: hexagon with taus (2,4), (1,4), (0,4)
        let r = t.restricted();
        assert_eq!(r.m, 6);
        assert_eq!(
            r.taus,
            vec![
                Diagonal::sorted(2, 4),
                Diagonal::sorted(1, 4),
                Diagonal::sorted(0, 4)
            ]
        );
    }

    #[test]
    fn restriction_cases() {
        let t = fig_matrix_triangulation();
        // the diameter restricts to itself
        let res = t.res(&ThetaOrbit::of(8, t.diameter()));
        assert_eq!(res, vec![Diagonal::sorted(0, 4)]);
        // a d-crossing orbit restricts to a pair ending at *
        let orb = ThetaOrbit::of(8, Diagonal::sorted(0, 3));
        let res = t.res(&orb);
        assert_eq!(res.len(), 2);
        assert!(res.iter().all(|d| d.contains(t.star())));
        // Res is a pair exactly for the centrally symmetric pairs that
        // cross d; d-crossing diameters restrict to a single diagonal.
        for orb in all_theta_orbits(3) {
            let res = t.res(&orb);
            assert_eq!(
                res.len() == 2,
                !orb.is_diameter() && t.orbit_crosses_diameter(&orb)
            );
        }
    }

    #[test]
    fn lamination_matches_skein_example() {
        // Octagon fan at vertex 2 with labels L1..L5; the pair
        // ((a,c),(b,d)) = ((3,1),(7,5)) gets coefficient y3*y4.
        let t = LabeledTriangulation::new(
            8,
            vec![
                Diagonal::sorted(2, 4),
                Diagonal::sorted(2, 5),
                Diagonal::sorted(2, 6),
                Diagonal::sorted(2, 7),
                Diagonal::sorted(2, 0),
            ],
        )
        .unwrap();
        let ad = Chord::Diag(Diagonal::sorted(3, 1));
        let bc = Chord::Diag(Diagonal::sorted(7, 5));
        assert_eq!(lamination_vector(&t, &ad, &bc), vec![0, 0, 1, 1, 0]);
        let ac = Chord::Diag(Diagonal::sorted(3, 5));
        let bd = Chord::Diag(Diagonal::sorted(7, 1));
        assert_eq!(lamination_vector(&t, &ac, &bd), vec![0, 0, 0, 0, 0]);
    }

    #[test]
    fn lamination_never_crosses_own_diagonal() {
        let t = fig_matrix_triangulation();
        let lt = LabeledTriangulation {
            m: 8,
            taus: t.taus.clone(),
        };
        for &tau in &lt.taus {
            assert!(!lamination_crosses(8, tau, &Chord::Diag(tau)));
        }
    }

    #[test]
    fn skein_correction_vectors_disjoint() {
        // For every crossing pair in P_8 and every theta-invariant T, the two
        // smoothings' correction vectors have disjoint support.
        for t in enumerate_theta_triangulations(3).unwrap() {
            let lt = LabeledTriangulation {
                m: 8,
                taus: t.taus.clone(),
            };
            let diags = all_diagonals(8);
            for &d1 in &diags {
                for &d2 in &diags {
                    if !crosses(8, d1, d2) {
                        continue;
                    }
                    // smoothings of (d1, d2) = (a,b),(c,d): pairs (a,d),(b,c)
                    // and (a,c),(b,d) -- with d1=(a,b), d2=(c,d)
                    let (a, b) = (d1.a, d1.b);
                    let (c, d) = (d2.a, d2.b);
                    let v1 = lamination_vector(
                        &lt,
                        &Chord::from_vertices(8, a, d),
                        &Chord::from_vertices(8, b, c),
                    );
                    let v2 = lamination_vector(
                        &lt,
                        &Chord::from_vertices(8, a, c),
                        &Chord::from_vertices(8, b, d),
                    );
                    assert!(
                        v1.iter().zip(&v2).all(|(x, y)| x * y == 0),
                        "overlapping supports for {d1} x {d2}"
                    );
                }
            }
        }
    }

    #[test]
    fn f_d_matches_figures() {
        let t = fig_matrix_triangulation();
        // diameter (3,7) -> rho-invariant (1,3)
        assert_eq!(t.f_d(Diagonal::sorted(3, 7)), Diagonal::sorted(1, 3));
        // d-crossing pair {(3,0),(7,4)} -> {(3,0),(1,4)}
        assert_eq!(t.f_d(Diagonal::sorted(3, 0)), Diagonal::sorted(0, 3));
        assert_eq!(t.f_d(Diagonal::sorted(7, 4)), Diagonal::sorted(1, 4));
        // non-crossing pair {(3,6),(2,7)} -> {(3,6),(6,1)}
        assert_eq!(t.f_d(Diagonal::sorted(3, 6)), Diagonal::sorted(3, 6));
        assert_eq!(t.f_d(Diagonal::sorted(2, 7)), Diagonal::sorted(1, 6));
    }

    #[test]
    fn f_d_is_involution() {
        for t in enumerate_theta_triangulations(3).unwrap() {
            for d in all_diagonals(8) {
                assert_eq!(t.f_d(t.f_d(d)), d);
            }
        }
    }

    #[test]
    fn t_prime_is_rho_invariant() {
        for t in enumerate_theta_triangulations(3).unwrap() {
            let tp = t.t_prime();
            let set: BTreeSet<Diagonal> = tp.taus.iter().copied().collect();
            for d in &set {
                assert!(set.contains(&t.rho_diag(*d)));
            }
            // labels pair up under rho
            let n = t.n;
            for i in 1..n {
                assert_eq!(tp.taus[2 * n - i - 1], t.rho_diag(tp.taus[i - 1]));
            }
        }
    }

    #[test]
    fn theta_flip_is_involution() {
        let t = fig_matrix_triangulation();
        let orbits: Vec<ThetaOrbit> = (1..=3).map(|k| t.initial_orbit(k)).collect();
        for k in 1..=3 {
            let (next, _) = flip_theta_orbit(3, &orbits, k).unwrap();
            let (back, _) = flip_theta_orbit(3, &next, k).unwrap();
            assert_eq!(back, orbits);
        }
    }

    #[test]
    fn parse_round_trip() {
        let (m, diags) = parse_triangulation("8; (2,7) (0,2) (4,6) (3,6) (2,6)").unwrap();
        assert_eq!(m, 8);
        assert_eq!(diags.len(), 5);
        assert!(parse_triangulation("8 (2,7)").is_err());
    }
}
