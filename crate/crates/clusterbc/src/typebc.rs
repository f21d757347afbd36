//! The closed expansion formulas for cluster variables of types B and C with
//! principal coefficients in a theta-invariant triangulation: F-polynomial
//! and g-vector per theta-orbit, plus assembly of the Laurent expansion from
//! them. Type A data comes straight from the snake module; here the type-B
//! and type-C variables are built from restrictions of the orbit to the
//! collapsed polygon `P_{n+3}`.

use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::polygon::{
    all_theta_orbits, lamination_vector, Chord, ThetaOrbit, ThetaTriangulation,
};
use crate::seeds::{b_matrix_from_triangulation, Mode};
use crate::snake;

/// F-polynomial, g-vector, and the assembled cluster variable of one
/// theta-orbit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExpansionData {
    pub f: LaurentPoly,
    pub g: Vec<i64>,
    pub x: LaurentPoly,
}

impl ExpansionData {
    pub fn to_json(&self, orb: &ThetaOrbit) -> serde_json::Value {
        serde_json::json!({
            "orbit": [orb.key().a, orb.key().b],
            "F": self.f.to_json(),
            "g": self.g,
            "x": self.x.to_json(),
        })
    }
}

/// `x = F(yhat_1, ..., yhat_n) * u^g` with `yhat_j = y_j prod_i u_i^{b_ij}`.
pub fn assemble_x(f: &LaurentPoly, g: &[i64], top: &[Vec<i64>]) -> Result<LaurentPoly> {
    if !f.is_y_only() {
        return Err(Error::Model("F-polynomial must involve only y".into()));
    }
    let n = g.len();
    let us: Vec<LaurentPoly> = (1..=n).map(|i| LaurentPoly::var_u(n, i)).collect();
    let yhats: Vec<LaurentPoly> = (1..=n)
        .map(|j| {
            let col: Vec<i64> = (0..n).map(|i| top[i][j - 1]).collect();
            LaurentPoly::var_y(n, j).mul(&LaurentPoly::u_monomial(&col))
        })
        .collect::<Result<_>>()?;
    f.substitute(&us, &yhats)?.mul(&LaurentPoly::u_monomial(g))
}

fn d_scale(g: &[i64]) -> Vec<i64> {
    let mut v = g.to_vec();
    let n = v.len();
    v[n - 1] *= 2;
    v
}

fn vec_add(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn e_vec(n: usize, i: usize) -> Vec<i64> {
    let mut v = vec![0; n];
    v[i - 1] = 1;
    v
}

/// The unique label `i` with `b_{i,n} = -1`, i.e. the diagonal that is the
/// clockwise triangle-mate of the diameter, when it exists.
fn clockwise_mate_of_diameter(b: &[Vec<i64>]) -> Result<Option<usize>> {
    let n = b.len();
    let mates: Vec<usize> = (1..n).filter(|&i| b[i - 1][n - 1] == -1).collect();
    match mates.len() {
        0 => Ok(None),
        1 => Ok(Some(mates[0])),
        _ => Err(Error::Model("diameter has several clockwise mates".into())),
    }
}

/// Type-B expansion data of the cluster variable indexed by a theta-orbit.
pub fn expand_type_b(t: &ThetaTriangulation, orb: &ThetaOrbit) -> Result<ExpansionData> {
    let n = t.n;
    let tbar = t.restricted();
    let b = b_matrix_from_triangulation(&tbar)?;
    let res = t.res(orb);
    let (f, g) = match res.len() {
        1 => {
            let gamma = res[0];
            let exp = snake::expansion(&tbar, &Chord::Diag(gamma))?;
            let g = if tbar.contains(gamma) {
                exp.g
            } else if tbar.crossings(&Chord::Diag(gamma)).contains(&n) {
                vec_add(&d_scale(&exp.g), &e_vec(n, n))
            } else {
                d_scale(&exp.g)
            };
            (exp.f, g)
        }
        2 => {
            let (g1, g2) = (res[0], res[1]);
            let e1 = snake::expansion(&tbar, &Chord::Diag(g1))?;
            let e2 = snake::expansion(&tbar, &Chord::Diag(g2))?;
            let c = lamination_vector(&tbar, &Chord::Diag(g1), &Chord::Diag(g2));
            // the subtracted term: F of the restricted image of (a, theta(b))
            // where (a, b) is the orbit representative crossing d left to
            // right
            let rep = orb
                .reps
                .iter()
                .copied()
                .find(|r| t.strictly_left(r.a) || t.strictly_left(r.b))
                .ok_or_else(|| Error::Model("d-crossing orbit without left endpoint".into()))?;
            let (a, bvert) = if t.strictly_left(rep.a) {
                (rep.a, rep.b)
            } else {
                (rep.b, rep.a)
            };
            let ab_bar = Chord::from_vertices(t.m(), a, t.theta(bvert));
            let corr = match ab_bar.endpoints() {
                Some((x, y)) => Chord::from_vertices(
                    n + 3,
                    t.restrict_vertex(x),
                    t.restrict_vertex(y),
                ),
                None => Chord::Collapsed,
            };
            let f_corr = snake::expansion(&tbar, &corr)?.f;
            let f = e1
                .f
                .mul(&e2.f)?
                .sub(&LaurentPoly::y_monomial(&c).mul(&f_corr)?)?;
            let g = d_scale(&vec_add(&vec_add(&e1.g, &e2.g), &e_vec(n, n)));
            (f, g)
        }
        k => return Err(Error::Model(format!("restriction of size {k}"))),
    };
    let top = Mode::B.apply_symmetrizer(&b);
    let x = assemble_x(&f, &g, &top)?;
    Ok(ExpansionData { f, g, x })
}

/// Find the unique theta-orbit whose rotated restriction is exactly the
/// given singleton chord.
fn orbit_with_res_tilde(
    t: &ThetaTriangulation,
    target: &Chord,
    exclude: &ThetaOrbit,
) -> Result<ThetaOrbit> {
    let mut found = Vec::new();
    for orb in all_theta_orbits(t.n) {
        if &orb == exclude {
            continue;
        }
        let rt = t.res_tilde(&orb);
        if rt.len() == 1 && rt[0] == *target {
            found.push(orb);
        }
    }
    match found.len() {
        1 => Ok(found.remove(0)),
        k => Err(Error::Model(format!(
            "expected a unique companion orbit for {target}, found {k}"
        ))),
    }
}

impl ThetaTriangulation {
    /// Restricted image of the chord between two original vertices.
    fn restricted_span(&self, x: usize, y: usize) -> Chord {
        let rx = self.restrict_vertex(x);
        let ry = self.restrict_vertex(y);
        if rx == ry {
            Chord::Collapsed
        } else {
            Chord::from_vertices(self.n + 3, rx, ry)
        }
    }
}

/// The other endpoint of the representative of `orb` at vertex `v`.
fn partner_at(orb: &ThetaOrbit, v: usize) -> Result<usize> {
    orb.reps
        .iter()
        .find(|r| r.contains(v))
        .map(|r| r.other(v))
        .ok_or_else(|| Error::Model(format!("orbit {orb} has no representative at vertex {v}")))
}

/// Halve the last coordinate of a crossing-exponent sum; the paper's
/// remark guarantees it is even.
fn res_tilde_exponent(mut v: Vec<u32>) -> Result<Vec<u32>> {
    let n = v.len();
    if v[n - 1] % 2 != 0 {
        return Err(Error::Model(
            "rotated restriction of an odd exponent vector".into(),
        ));
    }
    v[n - 1] /= 2;
    Ok(v)
}

/// Type-C expansion data of the cluster variable indexed by a theta-orbit.
pub fn expand_type_c(t: &ThetaTriangulation, orb: &ThetaOrbit) -> Result<ExpansionData> {
    let n = t.n;
    let tbar = t.restricted();
    let b = b_matrix_from_triangulation(&tbar)?;
    let cw_mate = clockwise_mate_of_diameter(&b)?;
    let rt = t.res_tilde(orb);
    let (f, g) = match rt.len() {
        1 => {
            let exp = snake::expansion(&tbar, &rt[0])?;
            let crosses_diameter = tbar.crossings(&rt[0]).contains(&n);
            let g = match (crosses_diameter, cw_mate) {
                (true, Some(i)) => vec_add(&exp.g, &e_vec(n, i)),
                _ => exp.g,
            };
            (exp.f, g)
        }
        2 => {
            let (gt1, gt2) = (rt[0], rt[1]);
            let f1 = snake::expansion(&tbar, &gt1)?;
            let f2 = snake::expansion(&tbar, &gt2)?;
            let o1 = orbit_with_res_tilde(t, &gt1, orb)?;
            let o2 = orbit_with_res_tilde(t, &gt2, orb)?;
            let (exponent, corr1, corr2);
            if orb.is_diameter() {
                // orbit [a, a-bar]: companions [a, c-bar] and [a, b-bar]
                let rep = orb.reps[0];
                let a = if t.strictly_left(rep.a) { rep.a } else { rep.b };
                let cbar = partner_at(&o1, a)?;
                let bbar = partner_at(&o2, a)?;
                let c = t.theta(cbar);
                let bv = t.theta(bbar);
                let star = Chord::from_vertices(n + 3, t.restrict_vertex(a), t.star());
                debug_assert_eq!(Chord::Diag(t.res(orb)[0]), star);
                let v1 = lamination_vector(&tbar, &star, &t.restricted_span(c, bbar));
                let v2 = lamination_vector(
                    &tbar,
                    &t.restricted_span(a, bbar),
                    &Chord::from_vertices(n + 3, t.restrict_vertex(bv), t.star()),
                );
                exponent = res_tilde_exponent(vec_add_u32(&v1, &v2))?;
                corr1 = t.restricted_span(a, bv);
                corr2 = t.restricted_span(a, c);
            } else {
                // d-crossing pair: gamma_1 = (a, *), gamma_2 = (b-bar, *);
                // companions [a, d] and [b, c]
                let res = t.res(orb);
                let a = t.unrestrict_vertex(res[0].a.min(res[0].b));
                let bbar = t.unrestrict_vertex(res[1].a.min(res[1].b));
                let bv = t.theta(bbar);
                let dd = partner_at(&o1, a)?;
                let cc = partner_at(&o2, bv)?;
                let dbar = t.theta(dd);
                let cbar = t.theta(cc);
                let v1 = lamination_vector(
                    &tbar,
                    &Chord::Diag(res[1]),
                    &t.restricted_span(dbar, cbar),
                );
                let v2 = lamination_vector(
                    &tbar,
                    &t.restricted_span(a, cbar),
                    &Chord::from_vertices(n + 3, t.restrict_vertex(cc), t.star()),
                );
                exponent = res_tilde_exponent(vec_add_u32(&v1, &v2))?;
                // correction factors (a,c) and (b-bar, d-bar), as drawn in
                // the paper's figure for this case
                corr1 = t.restricted_span(a, cc);
                corr2 = t.restricted_span(bbar, dbar);
            }
            let fc1 = snake::expansion(&tbar, &corr1)?.f;
            let fc2 = snake::expansion(&tbar, &corr2)?.f;
            let f = f1.f.mul(&f2.f)?.sub(
                &LaurentPoly::y_monomial(&exponent)
                    .mul(&fc1)?
                    .mul(&fc2)?,
            )?;
            let g0 = vec_add(&f1.g, &f2.g);
            let g = match cw_mate {
                Some(i) => vec_add(&g0, &e_vec(n, i)),
                None => g0,
            };
            (f, g)
        }
        k => return Err(Error::Model(format!("rotated restriction of size {k}"))),
    };
    let top = Mode::C.apply_symmetrizer(&b);
    let x = assemble_x(&f, &g, &top)?;
    Ok(ExpansionData { f, g, x })
}

fn vec_add_u32(a: &[u32], b: &[u32]) -> Vec<u32> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::parse_poly;
    use crate::polygon::{canonical_labeling, Diagonal};
    use crate::seeds::{enumerate_exchange_graph, TrackKey};
    use std::collections::BTreeSet;

    fn fig_t() -> ThetaTriangulation {
        let set: BTreeSet<Diagonal> = [(3, 5), (1, 7), (3, 6), (2, 7), (2, 6)]
            .iter()
            .map(|&(a, b)| Diagonal::sorted(a, b))
            .collect();
        canonical_labeling(3, &set, 6, 2).unwrap()
    }

    #[test]
    fn example_f_poly_type_b() {
        // the F-polynomial of the orbit [3,0] in the octagon of the type-B
        // worked example
        let t = fig_t();
        let orb = ThetaOrbit::of(8, Diagonal::sorted(3, 0));
        let data = expand_type_b(&t, &orb).unwrap();
        assert_eq!(
            data.f,
            parse_poly(
                "y1*y2*y3^2 + y1*y3^2 + 2*y1*y3 + y3^2 + y1 + 2*y3 + 1",
                3
            )
            .unwrap()
        );
    }

    #[test]
    fn initial_orbits_give_initial_variables() {
        let t = fig_t();
        for k in 1..=3 {
            let orb = t.initial_orbit(k);
            for data in [
                expand_type_b(&t, &orb).unwrap(),
                expand_type_c(&t, &orb).unwrap(),
            ] {
                assert!(data.f.is_one());
                assert_eq!(data.g, e_vec(3, k));
                assert_eq!(data.x, LaurentPoly::var_u(3, k));
            }
        }
    }

    #[test]
    fn assemble_simple() {
        let top = vec![vec![0, -1, 0], vec![1, 0, -1], vec![0, 2, 0]];
        let f = LaurentPoly::one(3);
        assert_eq!(
            assemble_x(&f, &e_vec(3, 2), &top).unwrap(),
            LaurentPoly::var_u(3, 2)
        );
    }

    #[test]
    fn matches_oracle_on_fig_t() {
        let t = fig_t();
        type Expander = fn(&ThetaTriangulation, &ThetaOrbit) -> Result<ExpansionData>;
        let cases: [(Mode, Expander); 2] =
            [(Mode::B, expand_type_b), (Mode::C, expand_type_c)];
        for (mode, expand) in cases {
            let oracle = enumerate_exchange_graph(&t, mode).unwrap();
            for orb in all_theta_orbits(3) {
                let data = expand(&t, &orb).unwrap();
                let var = &oracle.variables[&TrackKey::Orbit(orb.clone())];
                assert_eq!(data.f, var.f, "{mode:?} F mismatch at {orb}");
                assert_eq!(data.g, var.g, "{mode:?} g mismatch at {orb}");
                assert_eq!(data.x, var.x, "{mode:?} x mismatch at {orb}");
            }
        }
    }
}
