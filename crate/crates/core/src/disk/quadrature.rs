//! Hyperbolic area of a geodesic triangle by adaptive cubature.
//!
//! The triangle is mapped to Beltrami–Klein coordinates `2z/(1+|z|²)`, where
//! geodesics are straight chords, so the region becomes a Euclidean triangle
//! and the area element `4/(1−|z|²)²` pulls back to `(1−|x|²)^(−3/2)`. The
//! triangle is refined by 1-to-4 midpoint subdivision; a 7-point degree-5 rule
//! on a cell is compared with the rule on its four children and the pair is
//! Richardson-extrapolated once they agree.

use std::collections::BinaryHeap;

use crate::error::{Error, Result};
use crate::vector::Vec2;

use super::DiskTriangle;

pub const RELATIVE_TOLERANCE: f64 = 1e-6;
pub const MAX_DEPTH: u32 = 30;

type Tri = [Vec2; 3];

fn to_klein(z: Vec2) -> Vec2 {
    z * (2.0 / (1.0 + z.norm_sq()))
}

fn density(x: Vec2) -> f64 {
    let s = 1.0 - x.norm_sq();
    1.0 / (s * s.sqrt())
}

fn euclidean_area(t: &Tri) -> f64 {
    0.5 * (t[1] - t[0]).cross(t[2] - t[0]).abs()
}

/// Radon's 7-point rule, exact for polynomials of degree 5.
fn rule(t: &Tri) -> f64 {
    let r15 = 15f64.sqrt();
    let (a1, w1) = ((6.0 - r15) / 21.0, (155.0 - r15) / 1200.0);
    let (a2, w2) = ((6.0 + r15) / 21.0, (155.0 + r15) / 1200.0);
    let at = |l0: f64, l1: f64, l2: f64| density(t[0] * l0 + t[1] * l1 + t[2] * l2);
    let mut sum = 0.225 * at(1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0);
    for (a, w) in [(a1, w1), (a2, w2)] {
        let b = 1.0 - 2.0 * a;
        sum += w * (at(b, a, a) + at(a, b, a) + at(a, a, b));
    }
    sum * euclidean_area(t)
}

fn split(t: &Tri) -> [Tri; 4] {
    let m01 = (t[0] + t[1]) * 0.5;
    let m12 = (t[1] + t[2]) * 0.5;
    let m20 = (t[2] + t[0]) * 0.5;
    [[t[0], m01, m20], [m01, t[1], m12], [m20, m12, t[2]], [m01, m12, m20]]
}

struct Cell {
    tri: Tri,
    depth: u32,
    coarse: f64,
    fine: f64,
    error: f64,
}

impl Cell {
    fn new(tri: Tri, depth: u32) -> Self {
        let coarse = rule(&tri);
        let fine: f64 = split(&tri).iter().map(rule).sum();
        Cell {
            tri,
            depth,
            coarse,
            fine,
            error: (fine - coarse).abs(),
        }
    }

    /// Richardson-extrapolated value; the rule error scales as h⁶.
    fn value(&self) -> f64 {
        self.fine + (self.fine - self.coarse) / 63.0
    }
}

impl PartialEq for Cell {
    fn eq(&self, o: &Self) -> bool {
        self.error.total_cmp(&o.error).is_eq()
    }
}

impl Eq for Cell {}

impl PartialOrd for Cell {
    fn partial_cmp(&self, o: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(o))
    }
}

impl Ord for Cell {
    fn cmp(&self, o: &Self) -> std::cmp::Ordering {
        self.error.total_cmp(&o.error)
    }
}

/// Hyperbolic area of `t`, to relative accuracy about [`RELATIVE_TOLERANCE`].
///
/// Globally adaptive: the cell with the largest error estimate is split until
/// the summed estimate meets the tolerance.
pub fn area_numeric(t: &DiskTriangle) -> Result<f64> {
    let tri: Tri = [t.a, t.b, t.c].map(|p| to_klein(p.coords()));
    let root = Cell::new(tri, 0);
    let tol = (RELATIVE_TOLERANCE * root.fine).max(1e-300);
    let mut total_error = root.error;
    let mut heap = BinaryHeap::from([root]);
    while total_error > tol {
        let cell = heap.pop().expect("heap holds at least one cell");
        if cell.depth >= MAX_DEPTH {
            return Err(Error::NonConvergence(MAX_DEPTH));
        }
        total_error -= cell.error;
        for kid in split(&cell.tri) {
            let c = Cell::new(kid, cell.depth + 1);
            total_error += c.error;
            heap.push(c);
        }
    }
    Ok(heap.iter().map(Cell::value).sum())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rule_is_exact_on_quintic_monomials() {
        // ∫ over the unit right triangle of x^a y^b = a! b! / (a + b + 2)!
        let t: Tri = [Vec2::new(0.0, 0.0), Vec2::new(1.0, 0.0), Vec2::new(0.0, 1.0)];
        let r15 = 15f64.sqrt();
        let (a1, w1) = ((6.0 - r15) / 21.0, (155.0 - r15) / 1200.0);
        let (a2, w2) = ((6.0 + r15) / 21.0, (155.0 + r15) / 1200.0);
        let quad = |f: &dyn Fn(Vec2) -> f64| {
            let at = |l0: f64, l1: f64, l2: f64| f(t[0] * l0 + t[1] * l1 + t[2] * l2);
            let mut s = 0.225 * at(1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0);
            for (a, w) in [(a1, w1), (a2, w2)] {
                let b = 1.0 - 2.0 * a;
                s += w * (at(b, a, a) + at(a, b, a) + at(a, a, b));
            }
            s * 0.5
        };
        let fact = |n: u32| (1..=n).map(f64::from).product::<f64>();
        for a in 0..=5u32 {
            for b in 0..=(5 - a) {
                let exact = fact(a) * fact(b) / fact(a + b + 2);
                let got = quad(&|p: Vec2| p.x.powi(a as i32) * p.y.powi(b as i32));
                assert!((got - exact).abs() < 1e-15, "x^{a} y^{b}");
            }
        }
    }

    #[test]
    fn klein_map_sends_boundary_to_boundary() {
        let z = Vec2::from_polar(0.999_999, 1.0);
        assert!(to_klein(z).norm() < 1.0);
        assert!((to_klein(Vec2::new(0.5, 0.0)).x - 0.8).abs() < 1e-15);
    }
}
