//! Snake graphs of diagonals in triangulated polygons, perfect-matching
//! enumeration, and the resulting expansion data `(x, F, g)` of a type-A
//! cluster variable with principal coefficients.
//!
//! A tile is built for every crossing of the diagonal with the
//! triangulation; consecutive tiles are glued north or east. The planar
//! embedding fixes, per tile, which quadrilateral side sits on which edge:
//! within each of a tile's two triangles, the side whose counterclockwise
//! successor is the crossed diagonal goes to the south/north pair on
//! odd-numbered tiles and to the west/east pair on even ones (tiles alternate
//! orientation), the other side taking the remaining slot.

use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::polygon::{ccw_successor, crosses, Chord, Diagonal, LabeledTriangulation};
use num_bigint::BigInt;
use std::collections::{BTreeMap, BTreeSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Dir {
    North,
    East,
}

/// A labeled tile edge: the polygon chord it carries, and the label of that
/// chord when it is a diagonal of the triangulation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EdgeLabel {
    pub chord: Option<(usize, usize)>,
    pub tau: Option<usize>,
}

impl EdgeLabel {
    fn boundary() -> Self {
        EdgeLabel {
            chord: None,
            tau: None,
        }
    }
}

/// One tile: the label of the crossed diagonal and its four edge labels.
#[derive(Clone, Debug)]
pub struct Tile {
    pub label: usize,
    pub north: EdgeLabel,
    pub east: EdgeLabel,
    pub south: EdgeLabel,
    pub west: EdgeLabel,
}

/// A snake graph: tiles in crossing order, gluing directions between
/// consecutive tiles, and the surface sign function on the interior edges.
#[derive(Clone, Debug)]
pub struct SnakeGraph {
    pub tiles: Vec<Tile>,
    pub shape: Vec<Dir>,
    pub signs: Vec<i8>,
}

type Point = (i64, i64);
type GeomEdge = (Point, Point);

fn geom_edge(p: Point, q: Point) -> GeomEdge {
    if p <= q {
        (p, q)
    } else {
        (q, p)
    }
}

impl SnakeGraph {
    /// Grid position of each tile under the planar embedding.
    pub fn positions(&self) -> Vec<Point> {
        let mut pos = vec![(0i64, 0i64)];
        for d in &self.shape {
            let (x, y) = *pos.last().unwrap();
            pos.push(match d {
                Dir::North => (x, y + 1),
                Dir::East => (x + 1, y),
            });
        }
        pos
    }

    /// Map from geometric edges to labels; shared edges are inserted once.
    fn edge_map(&self) -> BTreeMap<GeomEdge, EdgeLabel> {
        let mut map = BTreeMap::new();
        for (tile, &(x, y)) in self.tiles.iter().zip(self.positions().iter()) {
            let corners = [
                ((x, y), (x + 1, y), tile.south),
                ((x, y + 1), (x + 1, y + 1), tile.north),
                ((x, y), (x, y + 1), tile.west),
                ((x + 1, y), (x + 1, y + 1), tile.east),
            ];
            for (p, q, lab) in corners {
                let e = geom_edge(p, q);
                if let Some(prev) = map.insert(e, lab) {
                    debug_assert_eq!(prev.chord, lab.chord, "shared edge label mismatch");
                }
            }
        }
        map
    }

    /// For tests: a snake graph with the given tile labels and shape, all
    /// edges unlabeled.
    pub fn synthetic(labels: &[usize], shape: &[Dir]) -> SnakeGraph {
        assert_eq!(labels.len(), shape.len() + 1);
        SnakeGraph {
            tiles: labels
                .iter()
                .map(|&l| Tile {
                    label: l,
                    north: EdgeLabel::boundary(),
                    east: EdgeLabel::boundary(),
                    south: EdgeLabel::boundary(),
                    west: EdgeLabel::boundary(),
                })
                .collect(),
            shape: shape.to_vec(),
            signs: vec![0; shape.len()],
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        let tiles: Vec<serde_json::Value> = self
            .tiles
            .iter()
            .map(|t| {
                let edge = |l: &EdgeLabel| match l.tau {
                    Some(i) => serde_json::json!(i),
                    None => serde_json::Value::Null,
                };
                serde_json::json!({
                    "label": t.label,
                    "edges": {
                        "N": edge(&t.north),
                        "S": edge(&t.south),
                        "E": edge(&t.east),
                        "W": edge(&t.west),
                    }
                })
            })
            .collect();
        let shape: Vec<&str> = self
            .shape
            .iter()
            .map(|d| match d {
                Dir::North => "N",
                Dir::East => "E",
            })
            .collect();
        serde_json::json!({ "tiles": tiles, "shape": shape })
    }
}

/// A perfect matching, together with the tiles enclosed by its symmetric
/// difference with the minimal matching (0-based tile indices).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matching {
    pub edges: BTreeSet<GeomEdge>,
    pub region: BTreeSet<usize>,
}

/// Walk along `gamma` through the triangulation, returning the triangle
/// sequence and the crossed diagonals in order.
fn crossing_walk(
    t: &LabeledTriangulation,
    gamma: Diagonal,
    from: usize,
) -> Result<(Vec<[usize; 3]>, Vec<Diagonal>)> {
    let m = t.m;
    let to = gamma.other(from);
    let tris = t.triangles();
    let sides_of = |tri: [usize; 3]| {
        [
            Diagonal::sorted(tri[0], tri[1]),
            Diagonal::sorted(tri[1], tri[2]),
            Diagonal::sorted(tri[0], tri[2]),
        ]
    };
    // starting triangle: has `from` as a vertex and its opposite side crossed
    let mut start = None;
    for &tri in &tris {
        if !tri.contains(&from) {
            continue;
        }
        let opp: Vec<usize> = tri.iter().copied().filter(|&v| v != from).collect();
        let opp_side = Diagonal::sorted(opp[0], opp[1]);
        if crosses(m, gamma, opp_side) {
            if start.is_some() {
                return Err(Error::Model("ambiguous starting triangle".into()));
            }
            start = Some((tri, opp_side));
        }
    }
    let (mut tri, mut crossed_side) =
        start.ok_or_else(|| Error::Model(format!("no starting triangle for {gamma}")))?;
    let mut triangles = vec![tri];
    let mut crossed = Vec::new();
    loop {
        crossed.push(crossed_side);
        // step into the other triangle adjacent to the crossed side
        let next = tris
            .iter()
            .copied()
            .find(|&tr| {
                tr != tri && sides_of(tr).contains(&crossed_side)
            })
            .ok_or_else(|| Error::Model(format!("no triangle across {crossed_side}")))?;
        triangles.push(next);
        let w = *next
            .iter()
            .find(|&&v| !crossed_side.contains(v))
            .expect("third vertex");
        if w == to {
            break;
        }
        let exit = sides_of(next)
            .into_iter()
            .filter(|&s| s != crossed_side && crosses(m, gamma, s))
            .collect::<Vec<_>>();
        if exit.len() != 1 {
            return Err(Error::Model(format!("walk stuck after {crossed_side}")));
        }
        tri = next;
        crossed_side = exit[0];
    }
    Ok((triangles, crossed))
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Slot {
    N,
    E,
    S,
    W,
}

/// Build the snake graph of a diagonal `gamma` not in the triangulation,
/// oriented from its smaller endpoint.
pub fn build_snake_graph(t: &LabeledTriangulation, gamma: Diagonal) -> Result<SnakeGraph> {
    build_snake_graph_oriented(t, gamma, gamma.a)
}

/// Same, with an explicit starting endpoint; the expansion data is
/// independent of the choice.
pub fn build_snake_graph_oriented(
    t: &LabeledTriangulation,
    gamma: Diagonal,
    from: usize,
) -> Result<SnakeGraph> {
    if t.contains(gamma) {
        return Err(Error::InvalidDiagonal(format!(
            "{gamma} is in the triangulation"
        )));
    }
    Diagonal::new(t.m, gamma.a, gamma.b)?;
    let to = gamma.other(from);
    let (tris, crossed) = crossing_walk(t, gamma, from)?;
    let d = crossed.len();
    debug_assert_eq!(tris.len(), d + 1);

    let label_edge = |s: Diagonal| EdgeLabel {
        chord: Some((s.a, s.b)),
        tau: t.label_of(s),
    };

    let mut tiles: Vec<Tile> = Vec::with_capacity(d);
    let mut slots_of_interior: Vec<Slot> = Vec::new(); // slot of e_j on tile j
    for j in 1..=d {
        let tau = crossed[j - 1];
        let behind = tris[j - 1];
        let ahead = tris[j];
        let odd = j % 2 == 1;
        let mut tile = Tile {
            label: t.label_of(tau).ok_or(Error::Unlabeled)?,
            north: EdgeLabel::boundary(),
            east: EdgeLabel::boundary(),
            south: EdgeLabel::boundary(),
            west: EdgeLabel::boundary(),
        };
        let place = |tile: &mut Tile, slot: Slot, side: Diagonal| {
            let lab = label_edge(side);
            match slot {
                Slot::N => tile.north = lab,
                Slot::E => tile.east = lab,
                Slot::S => tile.south = lab,
                Slot::W => tile.west = lab,
            }
        };
        for (tri, is_behind) in [(behind, true), (ahead, false)] {
            let sides = [
                Diagonal::sorted(tri[0], tri[1]),
                Diagonal::sorted(tri[1], tri[2]),
                Diagonal::sorted(tri[0], tri[2]),
            ];
            for s in sides {
                if s == tau {
                    continue;
                }
                let cw = ccw_successor(tri, s) == tau;
                let slot = match (is_behind, odd, cw) {
                    (true, true, true) => Slot::S,
                    (true, true, false) => Slot::W,
                    (true, false, true) => Slot::W,
                    (true, false, false) => Slot::S,
                    (false, true, true) => Slot::N,
                    (false, true, false) => Slot::E,
                    (false, false, true) => Slot::E,
                    (false, false, false) => Slot::N,
                };
                if !is_behind && j < d {
                    // remember where the interior edge e_j lands
                    let e_j_is_this = {
                        let next_tau = crossed[j];
                        s != next_tau
                    };
                    if e_j_is_this {
                        slots_of_interior.push(slot);
                    }
                }
                place(&mut tile, slot, s);
            }
        }
        tiles.push(tile);
    }
    debug_assert_eq!(slots_of_interior.len(), d.saturating_sub(1));
    let shape: Vec<Dir> = slots_of_interior
        .iter()
        .map(|s| match s {
            Slot::N => Ok(Dir::North),
            Slot::E => Ok(Dir::East),
            _ => Err(Error::Model("interior edge landed on S/W".into())),
        })
        .collect::<Result<_>>()?;

    // surface sign function on the interior edges: +1 iff e_j lies on the
    // right of gamma, i.e. both endpoints on the ccw arc from `from` to `to`
    let m = t.m;
    let right_of = |v: usize| {
        let span = (to + m - from) % m;
        let off = (v + m - from) % m;
        off > 0 && off < span
    };
    let mut signs: Vec<i8> = Vec::new();
    for j in 1..d {
        // e_j = side of triangle ahead of tile j shared with tile j+1
        let tri = tris[j];
        let sides = [
            Diagonal::sorted(tri[0], tri[1]),
            Diagonal::sorted(tri[1], tri[2]),
            Diagonal::sorted(tri[0], tri[2]),
        ];
        let e_j = sides
            .into_iter()
            .find(|&s| s != crossed[j - 1] && s != crossed[j])
            .expect("third side");
        signs.push(if right_of(e_j.a) && right_of(e_j.b) {
            1
        } else {
            -1
        });
    }
    // consistency: equal consecutive signs force a turn, opposite signs a
    // straight continuation
    for j in 1..signs.len() {
        let straight = shape[j] == shape[j - 1];
        if straight == (signs[j] == signs[j - 1]) {
            return Err(Error::Model("sign function inconsistent with shape".into()));
        }
    }
    Ok(SnakeGraph {
        tiles,
        shape,
        signs,
    })
}

/// All perfect matchings, ordered by height (region size, then region, then
/// edges). The first entry is the minimal matching.
pub fn enumerate_matchings(g: &SnakeGraph) -> Vec<Matching> {
    let edge_map = g.edge_map();
    let edges: Vec<GeomEdge> = edge_map.keys().copied().collect();
    let mut vertices: BTreeSet<Point> = BTreeSet::new();
    for (p, q) in &edges {
        vertices.insert(*p);
        vertices.insert(*q);
    }
    let verts: Vec<Point> = vertices.iter().copied().collect();
    let vidx: BTreeMap<Point, usize> = verts.iter().enumerate().map(|(i, &p)| (p, i)).collect();
    let incident: Vec<Vec<usize>> = {
        let mut inc = vec![Vec::new(); verts.len()];
        for (ei, (p, q)) in edges.iter().enumerate() {
            inc[vidx[p]].push(ei);
            inc[vidx[q]].push(ei);
        }
        inc
    };
    let mut out: Vec<BTreeSet<GeomEdge>> = Vec::new();
    let mut covered = vec![false; verts.len()];
    let mut chosen: Vec<usize> = Vec::new();
    fn backtrack(
        verts: &[Point],
        edges: &[GeomEdge],
        vidx: &BTreeMap<Point, usize>,
        incident: &[Vec<usize>],
        covered: &mut Vec<bool>,
        chosen: &mut Vec<usize>,
        out: &mut Vec<BTreeSet<GeomEdge>>,
    ) {
        let Some(v) = covered.iter().position(|&c| !c) else {
            out.push(chosen.iter().map(|&e| edges[e]).collect());
            return;
        };
        for &ei in &incident[v] {
            let (p, q) = edges[ei];
            let (pi, qi) = (vidx[&p], vidx[&q]);
            if covered[pi] || covered[qi] {
                continue;
            }
            covered[pi] = true;
            covered[qi] = true;
            chosen.push(ei);
            backtrack(verts, edges, vidx, incident, covered, chosen, out);
            chosen.pop();
            covered[pi] = false;
            covered[qi] = false;
        }
    }
    backtrack(
        &verts, &edges, &vidx, &incident, &mut covered, &mut chosen, &mut out,
    );

    let minimal = minimal_edges(g, &out);
    let positions = g.positions();
    let mut matchings: Vec<Matching> = out
        .into_iter()
        .map(|edges| {
            let region = region_of(&edges, &minimal, &positions);
            Matching { edges, region }
        })
        .collect();
    matchings.sort_by(|a, b| {
        (a.region.len(), &a.region, &a.edges).cmp(&(b.region.len(), &b.region, &b.edges))
    });
    matchings
}

/// The minimal matching: the boundary-only matching containing the south
/// edge of the first tile.
pub fn minimal_matching(g: &SnakeGraph) -> Matching {
    let all = enumerate_matchings(g);
    let first = all.into_iter().next().expect("non-empty matching set");
    debug_assert!(first.region.is_empty());
    first
}

fn minimal_edges(g: &SnakeGraph, all: &[BTreeSet<GeomEdge>]) -> BTreeSet<GeomEdge> {
    // boundary edges belong to exactly one tile
    let positions = g.positions();
    let mut count: BTreeMap<GeomEdge, usize> = BTreeMap::new();
    for &(x, y) in &positions {
        for e in [
            geom_edge((x, y), (x + 1, y)),
            geom_edge((x, y + 1), (x + 1, y + 1)),
            geom_edge((x, y), (x, y + 1)),
            geom_edge((x + 1, y), (x + 1, y + 1)),
        ] {
            *count.entry(e).or_insert(0) += 1;
        }
    }
    let boundary: BTreeSet<GeomEdge> = count
        .iter()
        .filter(|(_, &c)| c == 1)
        .map(|(&e, _)| e)
        .collect();
    let boundary_only: Vec<&BTreeSet<GeomEdge>> = all
        .iter()
        .filter(|m| m.iter().all(|e| boundary.contains(e)))
        .collect();
    assert_eq!(
        boundary_only.len(),
        2,
        "a snake graph has exactly two boundary matchings"
    );
    let south_first = geom_edge((0, 0), (1, 0));
    let min: Vec<&&BTreeSet<GeomEdge>> = boundary_only
        .iter()
        .filter(|m| m.contains(&south_first))
        .collect();
    assert_eq!(min.len(), 1, "exactly one boundary matching contains S_1");
    (*min[0]).clone()
}

/// Tiles enclosed by the symmetric difference with the minimal matching,
/// by an even-odd ray test from each tile center.
fn region_of(
    edges: &BTreeSet<GeomEdge>,
    minimal: &BTreeSet<GeomEdge>,
    positions: &[Point],
) -> BTreeSet<usize> {
    let diff: BTreeSet<GeomEdge> = edges.symmetric_difference(minimal).copied().collect();
    let mut region = BTreeSet::new();
    for (ti, &(x, y)) in positions.iter().enumerate() {
        // ray straight down from the tile center crosses horizontal edges
        // ((x, b), (x+1, b)) with b <= y
        let mut crossings = 0;
        for &((px, py), (qx, qy)) in &diff {
            if py == qy && px == x && qx == x + 1 && py <= y {
                crossings += 1;
            }
        }
        if crossings % 2 == 1 {
            region.insert(ti);
        }
    }
    region
}

/// The expansion data of a cluster variable: its Laurent expansion, its
/// F-polynomial and its g-vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Expansion {
    pub x: LaurentPoly,
    pub f: LaurentPoly,
    pub g: Vec<i64>,
}

/// Expansion data of an arbitrary chord: boundary edges and collapsed chords
/// give `(1, 1, 0)`, diagonals of the triangulation give `(u_i, 1, e_i)`,
/// and all other diagonals are expanded over the perfect matchings of their
/// snake graph.
pub fn expansion(t: &LabeledTriangulation, chord: &Chord) -> Result<Expansion> {
    let n = t.rank();
    let trivial = Expansion {
        x: LaurentPoly::one(n),
        f: LaurentPoly::one(n),
        g: vec![0; n],
    };
    let gamma = match chord {
        Chord::Collapsed | Chord::Boundary(..) => return Ok(trivial),
        Chord::Diag(d) => *d,
    };
    if let Some(i) = t.label_of(gamma) {
        let mut g = vec![0i64; n];
        g[i - 1] = 1;
        return Ok(Expansion {
            x: LaurentPoly::var_u(n, i),
            f: LaurentPoly::one(n),
            g,
        });
    }
    let graph = build_snake_graph(t, gamma)?;
    expansion_of_graph(&graph, n)
}

/// Expansion from an already-built snake graph.
pub fn expansion_of_graph(graph: &SnakeGraph, n: usize) -> Result<Expansion> {
    let matchings = enumerate_matchings(graph);
    let edge_map = graph.edge_map();
    let mut cross = vec![0i64; n];
    for tile in &graph.tiles {
        cross[tile.label - 1] += 1;
    }
    let inv_cross = LaurentPoly::u_monomial(&cross.iter().map(|&c| -c).collect::<Vec<_>>());

    let weight = |mt: &Matching| -> (Vec<i64>, Vec<u32>) {
        let mut u = vec![0i64; n];
        for e in &mt.edges {
            if let Some(i) = edge_map[e].tau {
                u[i - 1] += 1;
            }
        }
        let mut y = vec![0u32; n];
        for &ti in &mt.region {
            y[graph.tiles[ti].label - 1] += 1;
        }
        (u, y)
    };

    let mut x = LaurentPoly::zero(n);
    let mut f = LaurentPoly::zero(n);
    let mut seen_heights = BTreeSet::new();
    for mt in &matchings {
        let (u, y) = weight(mt);
        if !seen_heights.insert(y.clone()) {
            return Err(Error::Model("height monomials not distinct".into()));
        }
        x = x.add(&LaurentPoly::monomial(u, y.clone(), BigInt::from(1)))?;
        f = f.add(&LaurentPoly::y_monomial(&y))?;
    }
    x = x.mul(&inv_cross)?;
    let (u_min, y_min) = weight(&matchings[0]);
    if y_min.iter().any(|&e| e != 0) {
        return Err(Error::Model("minimal matching has nontrivial height".into()));
    }
    let g: Vec<i64> = u_min
        .iter()
        .zip(&cross)
        .map(|(&a, &b)| a - b)
        .collect();
    Ok(Expansion { x, f, g })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::parse_poly;
    use crate::polygon::all_diagonals;

    /// The triangulated hexagon of the snake-graph example, with labels
    /// 1 = (3,5), 2 = (0,3), 3 = (0,2).
    fn hexagon() -> LabeledTriangulation {
        LabeledTriangulation::new(
            6,
            vec![
                Diagonal::sorted(3, 5),
                Diagonal::sorted(0, 3),
                Diagonal::sorted(0, 2),
            ],
        )
        .unwrap()
    }

    #[test]
    fn hexagon_snake_has_three_tiles() {
        let t = hexagon();
        let g = build_snake_graph(&t, Diagonal::sorted(1, 4)).unwrap();
        assert_eq!(g.tiles.len(), 3);
        assert_eq!(g.shape, vec![Dir::East, Dir::East]);
        let labels: Vec<usize> = g.tiles.iter().map(|t| t.label).collect();
        assert_eq!(labels, vec![3, 2, 1]);
        // interior labels as drawn: the middle tile carries tau_1 and tau_3
        // on its horizontal edges
        assert_eq!(g.tiles[0].north.tau, Some(2));
        assert_eq!(g.tiles[1].south.tau, Some(3));
        assert_eq!(g.tiles[1].north.tau, Some(1));
        assert_eq!(g.tiles[2].south.tau, Some(2));
    }

    #[test]
    fn hexagon_five_matchings_and_displays() {
        let t = hexagon();
        let gamma = Diagonal::sorted(1, 4);
        let g = build_snake_graph(&t, gamma).unwrap();
        assert_eq!(enumerate_matchings(&g).len(), 5);
        let exp = expansion(&t, &Chord::Diag(gamma)).unwrap();
        assert_eq!(
            exp.f,
            parse_poly("y1*y2*y3 + y1*y3 + y1 + y3 + 1", 3).unwrap()
        );
        assert_eq!(exp.g, vec![-1, 1, -1]);
        let num = parse_poly("u1*u3*y1*y2*y3 + y1*y3 + u2*y1 + u2*y3 + u2^2", 3).unwrap();
        let expected = num
            .mul(&LaurentPoly::u_monomial(&[-1, -1, -1]))
            .unwrap();
        assert_eq!(exp.x, expected);
    }

    #[test]
    fn minimal_matching_weight() {
        let t = hexagon();
        let g = build_snake_graph(&t, Diagonal::sorted(1, 4)).unwrap();
        let m = minimal_matching(&g);
        assert!(m.region.is_empty());
        let edge_map = g.edge_map();
        let mut u = vec![0; 3];
        for e in &m.edges {
            if let Some(i) = edge_map[e].tau {
                u[i - 1] += 1;
            }
        }
        assert_eq!(u, vec![0, 2, 0]); // u(P_-) = u_2^2
    }

    #[test]
    fn single_tile_two_matchings() {
        let t = hexagon();
        // (1,3) crosses only tau_3 = (0,2)
        let g = build_snake_graph(&t, Diagonal::sorted(1, 3)).unwrap();
        assert_eq!(g.tiles.len(), 1);
        assert_eq!(enumerate_matchings(&g).len(), 2);
    }

    #[test]
    fn straight_snakes_count_fibonacci() {
        // straight snake with d tiles has F(d+2) matchings: 2, 3, 5, 8, ...
        let mut fib = vec![1u64, 1];
        for i in 2..12 {
            let v = fib[i - 1] + fib[i - 2];
            fib.push(v);
        }
        for d in 1..=8 {
            let labels: Vec<usize> = (1..=d).collect();
            let shape = vec![Dir::East; d - 1];
            let g = SnakeGraph::synthetic(&labels, &shape);
            assert_eq!(
                enumerate_matchings(&g).len() as u64,
                fib[d + 1],
                "straight snake with {d} tiles"
            );
        }
        // a zigzag snake with d tiles has d+1 matchings
        for d in 2..=7 {
            let labels: Vec<usize> = (1..=d).collect();
            let shape: Vec<Dir> = (0..d - 1)
                .map(|i| if i % 2 == 0 { Dir::North } else { Dir::East })
                .collect();
            let g = SnakeGraph::synthetic(&labels, &shape);
            assert_eq!(enumerate_matchings(&g).len(), d + 1);
        }
    }

    #[test]
    fn tile_count_matches_crossings() {
        let t = hexagon();
        for gamma in all_diagonals(6) {
            if t.contains(gamma) {
                continue;
            }
            let crossings = t.crossings(&Chord::Diag(gamma)).len();
            let g = build_snake_graph(&t, gamma).unwrap();
            assert_eq!(g.tiles.len(), crossings);
        }
    }

    #[test]
    fn orientation_independence() {
        let t = hexagon();
        for gamma in all_diagonals(6) {
            if t.contains(gamma) {
                continue;
            }
            let g1 = build_snake_graph_oriented(&t, gamma, gamma.a).unwrap();
            let g2 = build_snake_graph_oriented(&t, gamma, gamma.b).unwrap();
            let e1 = expansion_of_graph(&g1, 3).unwrap();
            let e2 = expansion_of_graph(&g2, 3).unwrap();
            assert_eq!(e1, e2);
        }
    }

    #[test]
    fn tau_in_t_and_boundary_conventions() {
        let t = hexagon();
        let e = expansion(&t, &Chord::Diag(Diagonal::sorted(0, 3))).unwrap();
        assert_eq!(e.x, LaurentPoly::var_u(3, 2));
        assert_eq!(e.g, vec![0, 1, 0]);
        let e = expansion(&t, &Chord::Boundary(0, 1)).unwrap();
        assert!(e.x.is_one());
        let e = expansion(&t, &Chord::Collapsed).unwrap();
        assert!(e.x.is_one());
    }

    #[test]
    fn f_constant_term_and_top_term() {
        let t = hexagon();
        for gamma in all_diagonals(6) {
            if t.contains(gamma) {
                continue;
            }
            let exp = expansion(&t, &Chord::Diag(gamma)).unwrap();
            assert_eq!(exp.f.constant_term(), 1.into());
            // unique top term y(P_+) = prod of all crossed labels
            let crossed = t.crossings(&Chord::Diag(gamma));
            let mut top = vec![0u32; 3];
            for i in crossed {
                top[i - 1] += 1;
            }
            let top_mono = LaurentPoly::y_monomial(&top);
            let lead = exp.f.leading_term().unwrap();
            assert_eq!(
                LaurentPoly::from_term(lead.0.clone(), lead.1.clone()),
                top_mono
            );
        }
    }
}
