//! Small exact linear algebra: 3-vectors and 3x3 matrices over any field,
//! plus a Gaussian-elimination solver for the affine systems that arise when
//! computing fixed loci of isometries.

use crate::field::Field;
use std::fmt;

#[derive(Clone, PartialEq)]
pub struct Vector3<F: Field> {
    pub x: F,
    pub y: F,
    pub z: F,
}

#[derive(Clone, PartialEq)]
pub struct Matrix3<F: Field> {
    /// Row-major entries.
    pub m: [[F; 3]; 3],
}

impl<F: Field> Vector3<F> {
    pub fn new(x: F, y: F, z: F) -> Self {
        Vector3 { x, y, z }
    }

    pub fn zero() -> Self {
        Vector3::new(F::zero(), F::zero(), F::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero() && self.z.is_zero()
    }

    pub fn add(&self, o: &Self) -> Self {
        Vector3::new(self.x.add(&o.x), self.y.add(&o.y), self.z.add(&o.z))
    }

    pub fn sub(&self, o: &Self) -> Self {
        Vector3::new(self.x.sub(&o.x), self.y.sub(&o.y), self.z.sub(&o.z))
    }

    pub fn neg(&self) -> Self {
        Vector3::new(self.x.neg(), self.y.neg(), self.z.neg())
    }

    pub fn scale(&self, c: &F) -> Self {
        Vector3::new(self.x.mul(c), self.y.mul(c), self.z.mul(c))
    }

    pub fn dot(&self, o: &Self) -> F {
        self.x
            .mul(&o.x)
            .add(&self.y.mul(&o.y))
            .add(&self.z.mul(&o.z))
    }

    pub fn cross(&self, o: &Self) -> Self {
        Vector3::new(
            self.y.mul(&o.z).sub(&self.z.mul(&o.y)),
            self.z.mul(&o.x).sub(&self.x.mul(&o.z)),
            self.x.mul(&o.y).sub(&self.y.mul(&o.x)),
        )
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> Vector3<G> {
        Vector3::new(f(&self.x), f(&self.y), f(&self.z))
    }

    pub fn as_array(&self) -> [&F; 3] {
        [&self.x, &self.y, &self.z]
    }
}

impl<F: Field> Matrix3<F> {
    pub fn new(m: [[F; 3]; 3]) -> Self {
        Matrix3 { m }
    }

    pub fn identity() -> Self {
        let o = F::one;
        let z = F::zero;
        Matrix3::new([[o(), z(), z()], [z(), o(), z()], [z(), z(), o()]])
    }

    pub fn zero() -> Self {
        let z = F::zero;
        Matrix3::new([[z(), z(), z()], [z(), z(), z()], [z(), z(), z()]])
    }

    /// Matrix with the given columns.
    pub fn from_columns(c0: &Vector3<F>, c1: &Vector3<F>, c2: &Vector3<F>) -> Self {
        Matrix3::new([
            [c0.x.clone(), c1.x.clone(), c2.x.clone()],
            [c0.y.clone(), c1.y.clone(), c2.y.clone()],
            [c0.z.clone(), c1.z.clone(), c2.z.clone()],
        ])
    }

    pub fn transpose(&self) -> Self {
        let m = &self.m;
        Matrix3::new([
            [m[0][0].clone(), m[1][0].clone(), m[2][0].clone()],
            [m[0][1].clone(), m[1][1].clone(), m[2][1].clone()],
            [m[0][2].clone(), m[1][2].clone(), m[2][2].clone()],
        ])
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for i in 0..3 {
            for j in 0..3 {
                out.m[i][j] = self.m[i][j].add(&o.m[i][j]);
            }
        }
        out
    }

    pub fn sub(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for i in 0..3 {
            for j in 0..3 {
                out.m[i][j] = self.m[i][j].sub(&o.m[i][j]);
            }
        }
        out
    }

    pub fn neg(&self) -> Self {
        let mut out = self.clone();
        for i in 0..3 {
            for j in 0..3 {
                out.m[i][j] = self.m[i][j].neg();
            }
        }
        out
    }

    pub fn scale(&self, c: &F) -> Self {
        let mut out = self.clone();
        for i in 0..3 {
            for j in 0..3 {
                out.m[i][j] = self.m[i][j].mul(c);
            }
        }
        out
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut out = Matrix3::zero();
        for i in 0..3 {
            for j in 0..3 {
                let mut acc = F::zero();
                for k in 0..3 {
                    acc = acc.add(&self.m[i][k].mul(&o.m[k][j]));
                }
                out.m[i][j] = acc;
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &Vector3<F>) -> Vector3<F> {
        let row = |i: usize| {
            self.m[i][0]
                .mul(&v.x)
                .add(&self.m[i][1].mul(&v.y))
                .add(&self.m[i][2].mul(&v.z))
        };
        Vector3::new(row(0), row(1), row(2))
    }

    pub fn det(&self) -> F {
        let m = &self.m;
        let a = m[0][0].mul(&m[1][1].mul(&m[2][2]).sub(&m[1][2].mul(&m[2][1])));
        let b = m[0][1].mul(&m[1][0].mul(&m[2][2]).sub(&m[1][2].mul(&m[2][0])));
        let c = m[0][2].mul(&m[1][0].mul(&m[2][1]).sub(&m[1][1].mul(&m[2][0])));
        a.sub(&b).add(&c)
    }

    pub fn trace(&self) -> F {
        self.m[0][0].add(&self.m[1][1]).add(&self.m[2][2])
    }

    /// Inverse via the adjugate; `None` for singular matrices.
    pub fn inverse(&self) -> Option<Self> {
        let d = self.det();
        if d.is_zero() {
            return None;
        }
        let m = &self.m;
        let cof = |r1: usize, c1: usize, r2: usize, c2: usize| {
            m[r1][c1].mul(&m[r2][c2]).sub(&m[r1][c2].mul(&m[r2][c1]))
        };
        // adjugate (transposed cofactor matrix), scaled by 1/det
        let adj = Matrix3::new([
            [cof(1, 1, 2, 2), cof(0, 2, 2, 1), cof(0, 1, 1, 2)],
            [cof(1, 2, 2, 0), cof(0, 0, 2, 2), cof(0, 2, 1, 0)],
            [cof(1, 0, 2, 1), cof(0, 1, 2, 0), cof(0, 0, 1, 1)],
        ]);
        Some(adj.scale(&d.inv()))
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> Matrix3<G> {
        let g = |i: usize, j: usize| f(&self.m[i][j]);
        Matrix3::new([
            [g(0, 0), g(0, 1), g(0, 2)],
            [g(1, 0), g(1, 1), g(1, 2)],
            [g(2, 0), g(2, 1), g(2, 2)],
        ])
    }
}

/// Solution set of a consistent linear system `A p = rhs`, described by a
/// particular point and a basis of the kernel of `A`.
#[derive(Clone, Debug, PartialEq)]
pub enum AffineSolution<F: Field> {
    Empty,
    /// `point + span(directions)`; an empty span is a single point, one
    /// direction a line, two a plane, three all of space.
    Flat {
        point: Vector3<F>,
        directions: Vec<Vector3<F>>,
    },
}

/// Solve `A p = rhs` exactly by Gaussian elimination with full solution-set
/// reporting.
pub fn solve_affine<F: Field>(a: &Matrix3<F>, rhs: &Vector3<F>) -> AffineSolution<F> {
    // augmented 3x4 system
    let mut rows: Vec<[F; 4]> = (0..3)
        .map(|i| {
            [
                a.m[i][0].clone(),
                a.m[i][1].clone(),
                a.m[i][2].clone(),
                rhs.as_array()[i].clone(),
            ]
        })
        .collect();
    let mut pivot_cols = Vec::new();
    let mut r = 0usize;
    for c in 0..3 {
        let Some(p) = (r..3).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].inv();
        for k in c..4 {
            rows[r][k] = rows[r][k].mul(&inv);
        }
        for i in 0..3 {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c].clone();
                for k in c..4 {
                    rows[i][k] = rows[i][k].sub(&f.mul(&rows[r][k]));
                }
            }
        }
        pivot_cols.push(c);
        r += 1;
        if r == 3 {
            break;
        }
    }
    // inconsistent row: 0 = nonzero
    for row in rows.iter().skip(r) {
        if !row[3].is_zero() {
            return AffineSolution::Empty;
        }
    }
    let free_cols: Vec<usize> = (0..3).filter(|c| !pivot_cols.contains(c)).collect();
    let mut point = [F::zero(), F::zero(), F::zero()];
    for (i, &c) in pivot_cols.iter().enumerate() {
        point[c] = rows[i][3].clone();
    }
    let mut directions = Vec::new();
    for &fc in &free_cols {
        let mut dir = [F::zero(), F::zero(), F::zero()];
        dir[fc] = F::one();
        for (i, &c) in pivot_cols.iter().enumerate() {
            dir[c] = rows[i][fc].neg();
        }
        directions.push(Vector3::new(dir[0].clone(), dir[1].clone(), dir[2].clone()));
    }
    let [px, py, pz] = point;
    AffineSolution::Flat {
        point: Vector3::new(px, py, pz),
        directions,
    }
}

impl<F: Field> fmt::Debug for Vector3<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?}, {:?}, {:?})", self.x, self.y, self.z)
    }
}

impl<F: Field> fmt::Debug for Matrix3<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{:?}; {:?}; {:?}]",
            self.m[0], self.m[1], self.m[2]
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, rat_int, Rat};

    fn v(x: i64, y: i64, z: i64) -> Vector3<Rat> {
        Vector3::new(rat_int(x), rat_int(y), rat_int(z))
    }

    fn m(rows: [[i64; 3]; 3]) -> Matrix3<Rat> {
        Matrix3::new(rows.map(|r| r.map(rat_int)))
    }

    #[test]
    fn det_and_inverse() {
        let a = m([[2, 0, 1], [0, 1, 0], [1, 0, 1]]);
        assert_eq!(a.det(), rat_int(1));
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv), Matrix3::identity());
        assert_eq!(inv.mul(&a), Matrix3::identity());
    }

    #[test]
    fn singular_has_no_inverse() {
        let a = m([[1, 2, 3], [2, 4, 6], [0, 0, 1]]);
        assert_eq!(a.det(), rat_int(0));
        assert!(a.inverse().is_none());
    }

    #[test]
    fn cross_and_dot() {
        let e1 = v(1, 0, 0);
        let e2 = v(0, 1, 0);
        assert_eq!(e1.cross(&e2), v(0, 0, 1));
        assert_eq!(e1.dot(&e2), rat_int(0));
        let a = v(1, 2, 3);
        let b = v(4, 5, 6);
        assert_eq!(a.cross(&b), v(-3, 6, -3));
        assert_eq!(a.dot(&b), rat_int(32));
        assert_eq!(a.cross(&b).dot(&a), rat_int(0));
    }

    #[test]
    fn solve_unique() {
        let a = m([[2, 0, 1], [0, 1, 0], [1, 0, 1]]);
        let sol = solve_affine(&a, &v(3, 5, 2));
        match sol {
            AffineSolution::Flat { point, directions } => {
                assert!(directions.is_empty());
                assert_eq!(point, v(1, 5, 1));
            }
            _ => panic!("expected unique solution"),
        }
    }

    #[test]
    fn solve_plane_of_solutions() {
        // rank-1 system x + y + z = 3 repeated
        let a = m([[1, 1, 1], [2, 2, 2], [0, 0, 0]]);
        let sol = solve_affine(&a, &v(3, 6, 0));
        match sol {
            AffineSolution::Flat { point, directions } => {
                assert_eq!(directions.len(), 2);
                assert_eq!(point.x.clone() + point.y.clone() + point.z.clone(), rat_int(3));
                for d in &directions {
                    assert_eq!(d.x.clone() + d.y.clone() + d.z.clone(), rat_int(0));
                }
            }
            _ => panic!("expected a plane"),
        }
    }

    #[test]
    fn solve_inconsistent() {
        let a = m([[1, 1, 1], [1, 1, 1], [0, 0, 0]]);
        assert_eq!(solve_affine(&a, &v(1, 2, 0)), AffineSolution::Empty);
    }

    #[test]
    fn solve_line_of_solutions() {
        // fixed axis of a half-turn about the z-axis: (Q - I) p = 0
        let q = m([[-1, 0, 0], [0, -1, 0], [0, 0, 1]]);
        let a = q.sub(&Matrix3::identity());
        let sol = solve_affine(&a, &v(0, 0, 0));
        match sol {
            AffineSolution::Flat { point, directions } => {
                assert!(point.is_zero());
                assert_eq!(directions.len(), 1);
                assert_eq!(directions[0], v(0, 0, 1));
            }
            _ => panic!("expected a line"),
        }
    }

    #[test]
    fn fractions_stay_exact() {
        let a = Matrix3::new([
            [rat(1, 3), rat_int(0), rat_int(0)],
            [rat_int(0), rat(2, 7), rat_int(0)],
            [rat_int(0), rat_int(0), rat(5, 11)],
        ]);
        let inv = a.inverse().unwrap();
        assert_eq!(inv.m[0][0], rat_int(3));
        assert_eq!(inv.m[1][1], rat(7, 2));
        assert_eq!(inv.m[2][2], rat(11, 5));
    }
}
