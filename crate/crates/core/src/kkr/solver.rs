//! Grid seeding and Gauss–Newton refinement for coincidence equations on
//! two-parameter domains.

use crate::quat::S2Point;
use crate::tol::{TRANSVERSALITY_TOL, WITNESS_SEPARATION};

/// A refined solution of a coincidence system.
#[derive(Clone, Debug)]
pub struct Solution {
    /// Chart parameters (disc coordinates or a sphere point's coords).
    pub params: Vec<f64>,
    pub residual: f64,
    /// Smallest singular value of the 2-column Jacobian at the solution.
    pub jacobian_min_sv: f64,
}

const NEWTON_STEPS: usize = 80;
const CONVERGED: f64 = 1e-12;
/// The seed grid is partitioned into this many blocks per axis and the
/// best seed of every block is refined, so well-separated solution basins
/// are all visited regardless of how residuals compare across basins.
const SEED_BLOCKS: usize = 12;

fn gauss_newton_step(g: &[f64], j: &[Vec<f64>]) -> Option<(f64, f64)> {
    // Solve (JᵀJ) δ = -Jᵀ g for the 2×2 normal equations.
    let mut jtj = [[0.0f64; 2]; 2];
    let mut jtg = [0.0f64; 2];
    for (row, jrow) in j.iter().enumerate() {
        for a in 0..2 {
            for b in 0..2 {
                jtj[a][b] += jrow[a] * jrow[b];
            }
            jtg[a] += jrow[a] * g[row];
        }
    }
    let det = jtj[0][0] * jtj[1][1] - jtj[0][1] * jtj[1][0];
    if det.abs() < 1e-18 {
        return None;
    }
    let dx = (-jtg[0] * jtj[1][1] + jtg[1] * jtj[0][1]) / det;
    let dy = (-jtg[1] * jtj[0][0] + jtg[0] * jtj[1][0]) / det;
    Some((dx, dy))
}

fn norm(v: &[f64]) -> f64 {
    v.iter().map(|x| x * x).sum::<f64>().sqrt()
}

/// Smallest singular value of an m×2 matrix.
fn min_singular_value(j: &[Vec<f64>]) -> f64 {
    let mut a = 0.0;
    let mut b = 0.0;
    let mut c = 0.0;
    for row in j {
        a += row[0] * row[0];
        b += row[0] * row[1];
        c += row[1] * row[1];
    }
    // Eigenvalues of [[a, b], [b, c]].
    let tr = a + c;
    let disc = ((a - c) * (a - c) + 4.0 * b * b).sqrt();
    let lambda_min = 0.5 * (tr - disc);
    lambda_min.max(0.0).sqrt()
}

/// Refines a seed on a rectangle chart `(u, v)` with the given wrap/clamp
/// projection. Returns `None` if the iteration fails to converge.
fn refine_chart<G, P>(g: &G, project: &P, start: (f64, f64)) -> Option<Solution>
where
    G: Fn(f64, f64) -> Vec<f64>,
    P: Fn(f64, f64) -> (f64, f64),
{
    let h = 1e-6;
    let (mut u, mut v) = project(start.0, start.1);
    for _ in 0..NEWTON_STEPS {
        let val = g(u, v);
        if val.iter().any(|x| !x.is_finite()) {
            return None;
        }
        if norm(&val) <= CONVERGED {
            break;
        }
        let gu: Vec<f64> = {
            let plus = g(u + h, v);
            let minus = g(u - h, v);
            plus.iter()
                .zip(&minus)
                .map(|(p, m)| (p - m) / (2.0 * h))
                .collect()
        };
        let gv: Vec<f64> = {
            let plus = g(u, v + h);
            let minus = g(u, v - h);
            plus.iter()
                .zip(&minus)
                .map(|(p, m)| (p - m) / (2.0 * h))
                .collect()
        };
        let jac: Vec<Vec<f64>> = gu.iter().zip(&gv).map(|(&a, &b)| vec![a, b]).collect();
        let (du, dv) = gauss_newton_step(&val, &jac)?;
        let scale = 1.0f64.min(0.2 / (du * du + dv * dv).sqrt().max(1e-30));
        let (nu, nv) = project(u + du * scale.min(1.0), v + dv * scale.min(1.0));
        u = nu;
        v = nv;
    }
    let val = g(u, v);
    let residual = norm(&val);
    if residual > 1e-10 {
        return None;
    }
    let gu: Vec<f64> = {
        let plus = g(u + h, v);
        let minus = g(u - h, v);
        plus.iter()
            .zip(&minus)
            .map(|(p, m)| (p - m) / (2.0 * h))
            .collect()
    };
    let gv: Vec<f64> = {
        let plus = g(u, v + h);
        let minus = g(u, v - h);
        plus.iter()
            .zip(&minus)
            .map(|(p, m)| (p - m) / (2.0 * h))
            .collect()
    };
    let jac: Vec<Vec<f64>> = gu.iter().zip(&gv).map(|(&a, &b)| vec![a, b]).collect();
    Some(Solution {
        params: vec![u, v],
        residual,
        jacobian_min_sv: min_singular_value(&jac),
    })
}

/// Solves `g = 0` over the unit disc in polar coordinates `(r, t)`,
/// `0 < r < 1`, `t` periodic. Returns deduplicated solutions and the
/// smallest residual seen over the seed grid (a floor when nothing
/// converges).
pub fn solve_on_disc<G>(g: G, grid: usize) -> (Vec<Solution>, f64)
where
    G: Fn(f64, f64) -> Vec<f64>,
{
    let project = |r: f64, t: f64| -> (f64, f64) { (r.clamp(1e-6, 1.0 - 1e-6), t.rem_euclid(1.0)) };
    let blocks = SEED_BLOCKS.min(grid);
    let mut best: Vec<Option<(f64, (f64, f64))>> = vec![None; blocks * blocks];
    let mut floor = f64::INFINITY;
    for i in 0..grid {
        let r = (i as f64 + 0.5) / grid as f64;
        for j in 0..grid {
            let t = j as f64 / grid as f64;
            let v = norm(&g(r, t));
            floor = floor.min(v);
            let slot = (i * blocks / grid) * blocks + j * blocks / grid;
            if best[slot].is_none_or(|(bv, _)| v < bv) {
                best[slot] = Some((v, (r, t)));
            }
        }
    }
    let mut solutions: Vec<Solution> = Vec::new();
    for seed in best.into_iter().flatten() {
        if let Some(sol) = refine_chart(&g, &project, seed.1) {
            let dup = solutions
                .iter()
                .any(|s| disc_param_dist(&s.params, &sol.params) < WITNESS_SEPARATION);
            if !dup {
                solutions.push(sol);
            }
        }
    }
    (solutions, floor)
}

fn disc_param_dist(a: &[f64], b: &[f64]) -> f64 {
    let dr = a[0] - b[0];
    let dt = (a[1] - b[1])
        .rem_euclid(1.0)
        .min((b[1] - a[1]).rem_euclid(1.0));
    (dr * dr + dt * dt).sqrt()
}

/// Solves `g = 0` over the sphere. Refinement runs in moving tangent
/// charts so the poles are ordinary points. Returns solutions (params are
/// the point coordinates) and the seed-grid floor.
pub fn solve_on_sphere<G>(g: G, grid: usize) -> (Vec<Solution>, f64)
where
    G: Fn(S2Point) -> Vec<f64>,
{
    let blocks = SEED_BLOCKS.min(grid);
    let mut best: Vec<Option<(f64, S2Point)>> = vec![None; blocks * blocks];
    let mut floor = f64::INFINITY;
    for i in 0..grid {
        let theta = std::f64::consts::PI * (i as f64 + 0.5) / grid as f64;
        for j in 0..grid {
            let phi = 2.0 * std::f64::consts::PI * j as f64 / grid as f64;
            let p = S2Point::new(
                theta.sin() * phi.cos(),
                theta.sin() * phi.sin(),
                theta.cos(),
            );
            let v = norm(&g(p));
            floor = floor.min(v);
            let slot = (i * blocks / grid) * blocks + j * blocks / grid;
            if best[slot].is_none_or(|(bv, _)| v < bv) {
                best[slot] = Some((v, p));
            }
        }
    }

    let mut solutions: Vec<Solution> = Vec::new();
    for (_, seed) in best.into_iter().flatten() {
        if let Some(sol) = refine_on_sphere(&g, seed) {
            let p = S2Point::new(sol.params[0], sol.params[1], sol.params[2]);
            let dup = solutions.iter().any(|s| {
                S2Point::new(s.params[0], s.params[1], s.params[2]).dist(p) < WITNESS_SEPARATION
            });
            if !dup {
                solutions.push(sol);
            }
        }
    }
    (solutions, floor)
}

fn tangent_basis(p: S2Point) -> ([f64; 3], [f64; 3]) {
    let [x, y, z] = p.coords();
    let helper = if x.abs() < 0.9 {
        [1.0, 0.0, 0.0]
    } else {
        [0.0, 1.0, 0.0]
    };
    // e1 = normalize(helper × p), e2 = p × e1.
    let cross = |a: [f64; 3], b: [f64; 3]| {
        [
            a[1] * b[2] - a[2] * b[1],
            a[2] * b[0] - a[0] * b[2],
            a[0] * b[1] - a[1] * b[0],
        ]
    };
    let e1 = cross(helper, [x, y, z]);
    let n1 = (e1[0] * e1[0] + e1[1] * e1[1] + e1[2] * e1[2]).sqrt();
    let e1 = [e1[0] / n1, e1[1] / n1, e1[2] / n1];
    let e2 = cross([x, y, z], e1);
    (e1, e2)
}

fn refine_on_sphere<G>(g: &G, start: S2Point) -> Option<Solution>
where
    G: Fn(S2Point) -> Vec<f64>,
{
    let mut anchor = start;
    let mut last = None;
    for _ in 0..NEWTON_STEPS {
        let (e1, e2) = tangent_basis(anchor);
        let [ax, ay, az] = anchor.coords();
        let chart = |a: f64, b: f64| -> S2Point {
            S2Point::new(
                ax + a * e1[0] + b * e2[0],
                ay + a * e1[1] + b * e2[1],
                az + a * e1[2] + b * e2[2],
            )
        };
        let gc = |a: f64, b: f64| g(chart(a, b));
        let sol = refine_chart(&gc, &|a, b| (a, b), (0.0, 0.0));
        match sol {
            Some(s) => {
                let p = chart(s.params[0], s.params[1]);
                let moved = anchor.dist(p);
                anchor = p;
                last = Some(Solution {
                    params: p.coords().to_vec(),
                    residual: s.residual,
                    jacobian_min_sv: s.jacobian_min_sv,
                });
                if moved < 1e-13 {
                    break;
                }
            }
            None => return last,
        }
    }
    last
}

/// True when the coincidence differential has full rank at the solution.
pub fn is_transverse(sol: &Solution) -> bool {
    sol.jacobian_min_sv >= TRANSVERSALITY_TOL
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn disc_solver_finds_circle_crossings() {
        // cos(πr) = 0 and cos(2πt) = 0 has solutions (1/2, 1/4), (1/2, 3/4).
        let g = |r: f64, t: f64| {
            vec![
                (std::f64::consts::PI * r).cos(),
                (2.0 * std::f64::consts::PI * t).cos(),
            ]
        };
        let (sols, _) = solve_on_disc(g, 60);
        assert_eq!(sols.len(), 2);
        for s in &sols {
            assert!((s.params[0] - 0.5).abs() < 1e-9);
            assert!(s.residual <= 1e-10);
            assert!(is_transverse(s));
        }
        let mut ts: Vec<f64> = sols.iter().map(|s| s.params[1]).collect();
        ts.sort_by(f64::total_cmp);
        assert!((ts[0] - 0.25).abs() < 1e-9 && (ts[1] - 0.75).abs() < 1e-9);
    }

    #[test]
    fn sphere_solver_finds_poles() {
        // z-component of p × k vanishes only at the poles... use
        // g(p) = (x, y): zeros at the two poles.
        let g = |p: S2Point| {
            let [x, y, _] = p.coords();
            vec![x, y]
        };
        let (sols, _) = solve_on_sphere(g, 50);
        assert_eq!(sols.len(), 2);
        for s in &sols {
            assert!(s.params[2].abs() > 1.0 - 1e-9);
            assert!(is_transverse(s));
        }
    }

    #[test]
    fn no_solution_reports_floor() {
        let g = |_r: f64, _t: f64| vec![1.0, 1.0];
        let (sols, floor) = solve_on_disc(g, 30);
        assert!(sols.is_empty());
        assert!((floor - std::f64::consts::SQRT_2).abs() < 1e-12);
    }
}
