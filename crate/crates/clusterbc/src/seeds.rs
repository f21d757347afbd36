//! Skew-symmetrizable extended exchange matrices, seed mutation with
//! principal coefficients, and exhaustive exchange-graph enumeration. This is
//! the ground-truth oracle against which the closed expansion formulas are
//! verified.

use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::polygon::{
    ccw_successor, flip_theta_orbit, Diagonal, LabeledTriangulation, ThetaOrbit,
    ThetaTriangulation,
};
use std::collections::{BTreeMap, HashMap, VecDeque};

/// Which cluster algebra a seed belongs to: type A uses `B` itself, type B
/// uses `D B` and type C uses `B D`, with `D = diag(1,..,1,2)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    A,
    B,
    C,
}

impl Mode {
    pub fn apply_symmetrizer(&self, b: &[Vec<i64>]) -> Vec<Vec<i64>> {
        let n = b.len();
        let mut top = b.to_vec();
        match self {
            Mode::A => {}
            Mode::B => {
                // D B: scale the last row
                for j in 0..n {
                    top[n - 1][j] *= 2;
                }
            }
            Mode::C => {
                // B D: scale the last column
                for i in 0..n {
                    top[i][n - 1] *= 2;
                }
            }
        }
        top
    }
}

/// Extended exchange matrix: the top `n x n` exchange matrix and the bottom
/// `n x n` matrix of c-vectors (columns).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExtMatrix {
    pub top: Vec<Vec<i64>>,
    pub bottom: Vec<Vec<i64>>,
}

impl ExtMatrix {
    pub fn with_principal_coefficients(top: Vec<Vec<i64>>) -> ExtMatrix {
        let n = top.len();
        let mut bottom = vec![vec![0; n]; n];
        for (i, row) in bottom.iter_mut().enumerate() {
            row[i] = 1;
        }
        ExtMatrix { top, bottom }
    }

    pub fn n(&self) -> usize {
        self.top.len()
    }

    /// Standard matrix mutation at column `k` (1-based) applied to the full
    /// 2n x n matrix.
    pub fn mutate(&self, k: usize) -> ExtMatrix {
        let n = self.n();
        let k = k - 1;
        let rows: Vec<&Vec<i64>> = self.top.iter().chain(self.bottom.iter()).collect();
        let mut new_rows: Vec<Vec<i64>> = Vec::with_capacity(2 * n);
        for (i, row) in rows.iter().enumerate() {
            let mut new_row = vec![0i64; n];
            for j in 0..n {
                new_row[j] = if i == k || j == k {
                    -row[j]
                } else {
                    // b_ik * b_kj with sign rule
                    let bik = row[k];
                    let bkj = self.top[k][j];
                    row[j] + bik.signum() * 0.max(bik * bkj)
                };
            }
            new_rows.push(new_row);
        }
        let bottom = new_rows.split_off(n);
        ExtMatrix {
            top: new_rows,
            bottom,
        }
    }

    /// The c-vector at column `k` (1-based), checked for sign coherence.
    pub fn c_vector(&self, k: usize) -> Result<Vec<i64>> {
        let col: Vec<i64> = self.bottom.iter().map(|row| row[k - 1]).collect();
        let pos = col.iter().any(|&c| c > 0);
        let neg = col.iter().any(|&c| c < 0);
        if pos && neg {
            return Err(Error::MixedSigns(k));
        }
        Ok(col)
    }
}

/// A seed: `n` cluster variables plus the extended exchange matrix.
#[derive(Clone, Debug)]
pub struct Seed {
    pub vars: Vec<LaurentPoly>,
    pub ext: ExtMatrix,
}

impl Seed {
    pub fn initial(top: Vec<Vec<i64>>) -> Seed {
        let n = top.len();
        Seed {
            vars: (1..=n).map(|i| LaurentPoly::var_u(n, i)).collect(),
            ext: ExtMatrix::with_principal_coefficients(top),
        }
    }

    pub fn n(&self) -> usize {
        self.ext.n()
    }

    /// Mutate at cluster position `k` (1-based): standard exchange relation
    /// with principal coefficients, the division performed exactly.
    pub fn mutate(&self, k: usize) -> Result<Seed> {
        let n = self.n();
        let c = self.ext.c_vector(k)?;
        let mut pos = LaurentPoly::one(n);
        let mut neg = LaurentPoly::one(n);
        for (j, &cj) in c.iter().enumerate() {
            if cj > 0 {
                pos = pos.mul(&LaurentPoly::var_y(n, j + 1).pow(cj as u32))?;
            } else if cj < 0 {
                neg = neg.mul(&LaurentPoly::var_y(n, j + 1).pow((-cj) as u32))?;
            }
        }
        for i in 0..n {
            let bik = self.ext.top[i][k - 1];
            if bik > 0 {
                pos = pos.mul(&self.vars[i].pow(bik as u32))?;
            } else if bik < 0 {
                neg = neg.mul(&self.vars[i].pow((-bik) as u32))?;
            }
        }
        let numerator = pos.add(&neg)?;
        let new_var = numerator.div_exact(&self.vars[k - 1])?;
        let mut vars = self.vars.clone();
        vars[k - 1] = new_var;
        Ok(Seed {
            vars,
            ext: self.ext.mutate(k),
        })
    }
}

/// `B(T-bar)`: the skew-symmetric sign matrix of a labeled triangulation.
/// `b_ij = 1` iff `tau_i` and `tau_j` are sides of a triangle and `tau_i`
/// immediately follows `tau_j` in the triangle's counterclockwise side cycle.
pub fn b_matrix_from_triangulation(t: &LabeledTriangulation) -> Result<Vec<Vec<i64>>> {
    let n = t.rank();
    if n == 0 {
        return Err(Error::Unlabeled);
    }
    let mut b = vec![vec![0i64; n]; n];
    for tri in t.triangles() {
        let sides = [
            Diagonal::sorted(tri[0], tri[1]),
            Diagonal::sorted(tri[1], tri[2]),
            Diagonal::sorted(tri[0], tri[2]),
        ];
        for &s in &sides {
            let Some(j) = t.label_of(s) else { continue };
            let succ = ccw_successor(tri, s);
            let Some(i) = t.label_of(succ) else { continue };
            b[i - 1][j - 1] += 1;
            b[j - 1][i - 1] -= 1;
        }
    }
    for row in &b {
        for &e in row {
            if e.abs() > 1 {
                return Err(Error::Model("b-matrix entry out of {0,±1}".into()));
            }
        }
    }
    Ok(b)
}

/// Initial seed of the cluster algebra of the given mode attached to a
/// theta-invariant triangulation.
pub fn initial_seed(t: &ThetaTriangulation, mode: Mode) -> Result<Seed> {
    let b = b_matrix_from_triangulation(&t.restricted())?;
    Ok(Seed::initial(mode.apply_symmetrizer(&b)))
}

/// What a cluster position is tracked by during enumeration: a diagonal
/// (type A) or a theta-orbit (types B and C).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TrackKey {
    Diagonal(Diagonal),
    Orbit(ThetaOrbit),
}

impl std::fmt::Display for TrackKey {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            TrackKey::Diagonal(d) => write!(f, "{d}"),
            TrackKey::Orbit(o) => write!(f, "{o}"),
        }
    }
}

/// One enumerated cluster variable with its expansion data, as produced by
/// the mutation oracle.
#[derive(Clone, Debug)]
pub struct OracleVariable {
    pub x: LaurentPoly,
    pub f: LaurentPoly,
    pub g: Vec<i64>,
}

/// Result of the breadth-first closure of a seed under mutation.
pub struct ExchangeGraph {
    pub clusters: usize,
    pub variables: BTreeMap<TrackKey, OracleVariable>,
}

const SEED_CAP: usize = 200_000;

/// Tracking state threaded through the BFS: either a labeled triangulation
/// whose positions flip (mode A) or a vector of theta-orbits (modes B/C).
#[derive(Clone, Debug, PartialEq, Eq)]
enum Tracker {
    Plain(LabeledTriangulation),
    Theta(usize, Vec<ThetaOrbit>),
}

impl Tracker {
    fn key_at(&self, k: usize) -> TrackKey {
        match self {
            Tracker::Plain(t) => TrackKey::Diagonal(t.taus[k - 1]),
            Tracker::Theta(_, orbits) => TrackKey::Orbit(orbits[k - 1].clone()),
        }
    }

    fn flip(&self, k: usize) -> Result<Tracker> {
        match self {
            Tracker::Plain(t) => Ok(Tracker::Plain(t.flip(k)?.0)),
            Tracker::Theta(n, orbits) => {
                let (next, _) = flip_theta_orbit(*n, orbits, k)?;
                Ok(Tracker::Theta(*n, next))
            }
        }
    }

    fn sorted_keys(&self) -> Vec<TrackKey> {
        let mut keys: Vec<TrackKey> = match self {
            Tracker::Plain(t) => t.taus.iter().map(|&d| TrackKey::Diagonal(d)).collect(),
            Tracker::Theta(_, orbits) => {
                orbits.iter().map(|o| TrackKey::Orbit(o.clone())).collect()
            }
        };
        keys.sort();
        keys
    }
}

/// Breadth-first enumeration of all seeds reachable from the initial seed of
/// `(t, mode)`, with each distinct cluster variable matched to its
/// theta-orbit (modes B/C) by tracking flips of the triangulation.
///
/// Asserts along the way: exact divisions succeed, F-polynomials have
/// constant term 1, every variable is homogeneous for the principal grading,
/// and the variable attached to a track key never changes.
pub fn enumerate_exchange_graph(t: &ThetaTriangulation, mode: Mode) -> Result<ExchangeGraph> {
    let seed = initial_seed(t, mode)?;
    let tracker = match mode {
        Mode::A => {
            return Err(Error::Model(
                "mode A enumeration runs on a plain triangulation; use enumerate_exchange_graph_plain".into(),
            ))
        }
        Mode::B | Mode::C => Tracker::Theta(
            t.n,
            (1..=t.n).map(|k| t.initial_orbit(k)).collect(),
        ),
    };
    enumerate(seed, tracker)
}

/// Mode-A enumeration on an arbitrary labeled triangulation of a polygon:
/// cluster variables are matched to diagonals by tracking flips.
pub fn enumerate_exchange_graph_plain(t: &LabeledTriangulation) -> Result<ExchangeGraph> {
    let b = b_matrix_from_triangulation(t)?;
    let seed = Seed::initial(b);
    enumerate(seed, Tracker::Plain(t.clone()))
}

fn enumerate(seed: Seed, tracker: Tracker) -> Result<ExchangeGraph> {
    let n = seed.n();
    let init_top = seed.ext.top.clone();
    let mut variables: BTreeMap<TrackKey, OracleVariable> = BTreeMap::new();
    let mut seen: HashMap<Vec<String>, Vec<TrackKey>> = HashMap::new();
    let mut queue = VecDeque::new();

    let record = |variables: &mut BTreeMap<TrackKey, OracleVariable>,
                  key: TrackKey,
                  x: &LaurentPoly|
     -> Result<()> {
        let f = x.specialize_u_one();
        if f.constant_term() != 1.into() {
            return Err(Error::Model(format!(
                "F-polynomial of {key} has constant term != 1"
            )));
        }
        let g = x
            .multidegree(&init_top)
            .ok_or_else(|| Error::Model(format!("variable of {key} is not homogeneous")))?;
        if !x.has_positive_coeffs() {
            return Err(Error::Model(format!("variable of {key} has a negative coefficient")));
        }
        match variables.get(&key) {
            Some(prev) => {
                if prev.x != *x {
                    return Err(Error::Model(format!(
                        "track key {key} reached with two distinct variables"
                    )));
                }
            }
            None => {
                variables.insert(key, OracleVariable { x: x.clone(), f, g });
            }
        }
        Ok(())
    };

    let cluster_sig = |s: &Seed| -> Vec<String> {
        let mut texts: Vec<String> = s.vars.iter().map(|v| v.canonical_text()).collect();
        texts.sort();
        texts
    };

    for k in 1..=n {
        record(&mut variables, tracker.key_at(k), &seed.vars[k - 1])?;
    }
    seen.insert(cluster_sig(&seed), tracker.sorted_keys());
    queue.push_back((seed, tracker));
    let mut clusters = 1usize;

    while let Some((s, tr)) = queue.pop_front() {
        for k in 1..=n {
            let next = s.mutate(k)?;
            let next_tr = tr.flip(k)?;
            record(&mut variables, next_tr.key_at(k), &next.vars[k - 1])?;
            let sig = cluster_sig(&next);
            match seen.get(&sig) {
                Some(keys) => {
                    if *keys != next_tr.sorted_keys() {
                        return Err(Error::Model(
                            "cluster revisited with different tracked labels".into(),
                        ));
                    }
                }
                None => {
                    clusters += 1;
                    if clusters > SEED_CAP {
                        return Err(Error::EnumerationCap(SEED_CAP));
                    }
                    seen.insert(sig, next_tr.sorted_keys());
                    queue.push_back((next, next_tr));
                }
            }
        }
    }

    Ok(ExchangeGraph {
        clusters,
        variables,
    })
}
