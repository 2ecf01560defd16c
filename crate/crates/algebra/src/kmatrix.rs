//! Classical matrices over the base field K (Q or Z_p).
//!
//! The slot-level twin of [`crate::kpoly`]: neutrosophic matrix questions
//! are answered per evaluation slot on these, then recombined. Elimination
//! here uses division freely (K is a field); the neutrosophic level cannot,
//! which is exactly why the two make good cross-checks for each other.
//!
//! Row-major storage. Vectors are plain `Vec<BaseElem>` treated as columns.

use std::fmt;

use crate::field::{Base, BaseElem};
use crate::kpoly::KPoly;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KMatrix {
    base: Base,
    rows: usize,
    cols: usize,
    data: Vec<BaseElem>,
}

impl KMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<BaseElem>, base: Base) -> Self {
        assert_eq!(data.len(), rows * cols, "shape/data mismatch");
        for x in &data {
            assert!(x.base() == base, "mixed bases in KMatrix");
        }
        KMatrix { base, rows, cols, data }
    }

    pub fn zero(rows: usize, cols: usize, base: Base) -> Self {
        KMatrix {
            base,
            rows,
            cols,
            data: vec![BaseElem::zero(base); rows * cols],
        }
    }

    pub fn identity(n: usize, base: Base) -> Self {
        let mut m = Self::zero(n, n, base);
        for i in 0..n {
            m.set(i, i, BaseElem::one(base));
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<BaseElem>>, base: Base) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            data.extend(row);
        }
        Self::new(r, c, data, base)
    }

    pub fn from_cols(cols: Vec<Vec<BaseElem>>, base: Base) -> Self {
        let c = cols.len();
        let r = cols.first().map_or(0, |col| col.len());
        let mut m = Self::zero(r, c, base);
        for (j, col) in cols.iter().enumerate() {
            assert_eq!(col.len(), r, "ragged columns");
            for (i, x) in col.iter().enumerate() {
                m.set(i, j, x.clone());
            }
        }
        m
    }

    pub fn from_i64(rows: &[&[i64]], base: Base) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| BaseElem::from_i64(v, base)).collect())
                .collect(),
            base,
        )
    }

    pub fn diagonal(entries: &[BaseElem], base: Base) -> Self {
        let n = entries.len();
        let mut m = Self::zero(n, n, base);
        for (i, e) in entries.iter().enumerate() {
            m.set(i, i, e.clone());
        }
        m
    }

    pub fn base(&self) -> Base {
        self.base
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BaseElem {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BaseElem) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> Vec<BaseElem> {
        (0..self.cols).map(|j| self.get(i, j).clone()).collect()
    }

    pub fn col(&self, j: usize) -> Vec<BaseElem> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn add(&self, other: &Self) -> Self {
        assert!(self.rows == other.rows && self.cols == other.cols, "shape mismatch");
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a.add(b))
            .collect();
        KMatrix { base: self.base, rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        KMatrix {
            base: self.base,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x.neg()).collect(),
        }
    }

    pub fn scale(&self, c: &BaseElem) -> Self {
        KMatrix {
            base: self.base,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x.mul(c)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "shape mismatch");
        let mut out = Self::zero(self.rows, other.cols, self.base);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let v = out.get(i, j).add(&a.mul(other.get(k, j)));
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[BaseElem]) -> Vec<BaseElem> {
        assert_eq!(self.cols, v.len(), "shape mismatch");
        (0..self.rows)
            .map(|i| {
                let mut acc = BaseElem::zero(self.base);
                for j in 0..self.cols {
                    acc = acc.add(&self.get(i, j).mul(&v[j]));
                }
                acc
            })
            .collect()
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zero(self.cols, self.rows, self.base);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j).clone());
            }
        }
        out
    }

    pub fn pow(&self, mut e: u64) -> Self {
        assert!(self.is_square(), "pow of non-square");
        let mut acc = Self::identity(self.rows, self.base);
        let mut b = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&b);
            }
            b = b.mul(&b);
            e >>= 1;
        }
        acc
    }

    /// Reduced row echelon form with the list of pivot columns. Pivot choice
    /// is first-nonzero, so the output is deterministic.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(pr) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            if pr != r {
                for j in 0..m.cols {
                    let tmp = m.get(r, j).clone();
                    m.set(r, j, m.get(pr, j).clone());
                    m.set(pr, j, tmp);
                }
            }
            let inv = m.get(r, c).inv().expect("nonzero pivot");
            for j in 0..m.cols {
                m.set(r, j, m.get(r, j).mul(&inv));
            }
            for i in 0..m.rows {
                if i == r || m.get(i, c).is_zero() {
                    continue;
                }
                let f = m.get(i, c).clone();
                for j in 0..m.cols {
                    let v = m.get(i, j).sub(&f.mul(m.get(r, j)));
                    m.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the null space {v : Av = 0}, in the standard rref form:
    /// one vector per free column, deterministic.
    pub fn kernel_basis(&self) -> Vec<Vec<BaseElem>> {
        let (r, pivots) = self.rref();
        let mut out = Vec::new();
        let piv_of_col: Vec<Option<usize>> = {
            let mut v = vec![None; self.cols];
            for (pi, &c) in pivots.iter().enumerate() {
                v[c] = Some(pi);
            }
            v
        };
        for free in 0..self.cols {
            if piv_of_col[free].is_some() {
                continue;
            }
            let mut vec = vec![BaseElem::zero(self.base); self.cols];
            vec[free] = BaseElem::one(self.base);
            for (pi, &pc) in pivots.iter().enumerate() {
                vec[pc] = r.get(pi, free).neg();
            }
            out.push(vec);
        }
        out
    }

    /// One solution of Ax = b, if any (deterministic: free variables 0).
    pub fn solve(&self, b: &[BaseElem]) -> Option<Vec<BaseElem>> {
        assert_eq!(b.len(), self.rows, "shape mismatch");
        let mut aug = Self::zero(self.rows, self.cols + 1, self.base);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, self.cols, b[i].clone());
        }
        let (r, pivots) = aug.rref();
        if pivots.contains(&self.cols) {
            return None; // pivot in the augmented column: inconsistent
        }
        let mut x = vec![BaseElem::zero(self.base); self.cols];
        for (pi, &pc) in pivots.iter().enumerate() {
            x[pc] = r.get(pi, self.cols).clone();
        }
        Some(x)
    }

    pub fn inverse(&self) -> Option<Self> {
        assert!(self.is_square(), "inverse of non-square");
        let n = self.rows;
        let mut aug = Self::zero(n, 2 * n, self.base);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, n + i, BaseElem::one(self.base));
        }
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        let mut out = Self::zero(n, n, self.base);
        for i in 0..n {
            for j in 0..n {
                out.set(i, j, r.get(i, n + j).clone());
            }
        }
        Some(out)
    }

    /// Determinant by elimination (product of pivots, sign from swaps).
    /// Deliberately a different algorithm than the cofactor expansion used
    /// one level up, so the two check each other.
    pub fn det(&self) -> BaseElem {
        assert!(self.is_square(), "det of non-square");
        let n = self.rows;
        let mut m = self.clone();
        let mut det = BaseElem::one(self.base);
        for c in 0..n {
            let Some(pr) = (c..n).find(|&i| !m.get(i, c).is_zero()) else {
                return BaseElem::zero(self.base);
            };
            if pr != c {
                for j in 0..n {
                    let tmp = m.get(c, j).clone();
                    m.set(c, j, m.get(pr, j).clone());
                    m.set(pr, j, tmp);
                }
                det = det.neg();
            }
            det = det.mul(m.get(c, c));
            let inv = m.get(c, c).inv().expect("nonzero pivot");
            for i in (c + 1)..n {
                if m.get(i, c).is_zero() {
                    continue;
                }
                let f = m.get(i, c).mul(&inv);
                for j in c..n {
                    let v = m.get(i, j).sub(&f.mul(m.get(c, j)));
                    m.set(i, j, v);
                }
            }
        }
        det
    }

    /// Characteristic polynomial det(xI − A) by the Berkowitz iteration:
    /// division-free, hence valid over any commutative ring and fully
    /// independent of both elimination and symbolic cofactor expansion.
    pub fn charpoly(&self) -> KPoly {
        assert!(self.is_square(), "charpoly of non-square");
        let n = self.rows;
        let base = self.base;
        if n == 0 {
            return KPoly::one(base);
        }
        // descending coefficient vector, starts with the 1×1 block
        let mut p = vec![BaseElem::one(base), self.get(0, 0).neg()];
        for r in 2..=n {
            // Toeplitz column: [1, -a_rr, -(R·C), -(R·B·C), -(R·B²·C), …]
            let rr = r - 1;
            let row: Vec<BaseElem> = (0..rr).map(|j| self.get(rr, j).clone()).collect();
            let col: Vec<BaseElem> = (0..rr).map(|i| self.get(i, rr).clone()).collect();
            let mut tcol = Vec::with_capacity(r + 1);
            tcol.push(BaseElem::one(base));
            tcol.push(self.get(rr, rr).neg());
            let mut w = col.clone();
            for _ in 0..rr.saturating_sub(1) {
                let dot = dot(&row, &w, base);
                tcol.push(dot.neg());
                // w ← B·w with B the leading (r−1)×(r−1) block
                w = (0..rr)
                    .map(|i| {
                        let mut acc = BaseElem::zero(base);
                        for j in 0..rr {
                            acc = acc.add(&self.get(i, j).mul(&w[j]));
                        }
                        acc
                    })
                    .collect();
            }
            let dot = dot(&row, &w, base);
            tcol.push(dot.neg());
            // p ← T·p where T is (r+1)×r lower-triangular Toeplitz from tcol
            let mut next = vec![BaseElem::zero(base); r + 1];
            for (j, pj) in p.iter().enumerate() {
                for (i, t) in tcol.iter().enumerate().take(r + 1 - j) {
                    next[i + j] = next[i + j].add(&t.mul(pj));
                }
            }
            p = next;
        }
        p.reverse();
        KPoly::new(p, base)
    }

    /// p(A) by Horner.
    pub fn eval_poly(&self, p: &KPoly) -> Self {
        assert!(self.is_square(), "eval_poly of non-square");
        let n = self.rows;
        let mut acc = Self::zero(n, n, self.base);
        for c in p.coeffs().iter().rev() {
            acc = acc.mul(self);
            for i in 0..n {
                let v = acc.get(i, i).add(c);
                acc.set(i, i, v);
            }
        }
        acc
    }

    /// Minimal monic g with g(A)v = 0: the first linear dependence in the
    /// Krylov sequence v, Av, A²v, …
    pub fn vector_annihilator(&self, v: &[BaseElem]) -> KPoly {
        self.vector_conductor(v, &[])
    }

    /// Minimal monic g with g(A)v ∈ span(w). With empty w this is the
    /// annihilator. Minimality: a smaller monic h with h(A)v ∈ span(w)
    /// would witness an earlier Krylov dependence.
    pub fn vector_conductor(&self, v: &[BaseElem], w: &[Vec<BaseElem>]) -> KPoly {
        assert!(self.is_square(), "conductor of non-square");
        let n = self.rows;
        let mut krylov: Vec<Vec<BaseElem>> = Vec::new();
        let mut cur = v.to_vec();
        loop {
            // solve [w | krylov] x = cur
            let mut cols: Vec<Vec<BaseElem>> = w.to_vec();
            cols.extend(krylov.iter().cloned());
            let m = Self::from_cols(cols, self.base);
            let sol = if m.cols() == 0 {
                if cur.iter().all(|x| x.is_zero()) {
                    Some(vec![])
                } else {
                    None
                }
            } else {
                m.solve(&cur)
            };
            if let Some(x) = sol {
                // g = x^k − Σ cᵢ x^i over the Krylov part of the solution
                let k = krylov.len();
                let mut coeffs = vec![BaseElem::zero(self.base); k + 1];
                for (i, c) in x[w.len()..].iter().enumerate() {
                    coeffs[i] = c.neg();
                }
                coeffs[k] = BaseElem::one(self.base);
                return KPoly::new(coeffs, self.base);
            }
            krylov.push(cur.clone());
            cur = self.mul_vec(&cur);
            assert!(krylov.len() <= n, "Krylov sequence exceeded dimension");
        }
    }

    /// Minimal polynomial as the lcm of the annihilators of the standard
    /// basis vectors.
    pub fn minpoly(&self) -> KPoly {
        assert!(self.is_square(), "minpoly of non-square");
        let n = self.rows;
        let mut m = KPoly::one(self.base);
        for i in 0..n {
            let mut e = vec![BaseElem::zero(self.base); n];
            e[i] = BaseElem::one(self.base);
            let ann = self.vector_annihilator(&e);
            // lcm(m, ann), kept monic
            let g = m.gcd(&ann);
            m = m.mul(&ann).divmod(&g).expect("gcd divides").0.make_monic();
            if m.eval_matrix_is_zero(self) {
                // every later annihilator divides m: done
                break;
            }
        }
        m
    }

    /// Does span(vs) contain v?
    pub fn span_contains(vs: &[Vec<BaseElem>], v: &[BaseElem], base: Base) -> bool {
        if vs.is_empty() {
            return v.iter().all(|x| x.is_zero());
        }
        KMatrix::from_cols(vs.to_vec(), base).solve(v).is_some()
    }

    /// Similarity check: P invertible and AP = PB.
    pub fn similar_via(&self, b: &Self, p: &Self) -> bool {
        p.is_square()
            && p.inverse().is_some()
            && self.mul(p) == p.mul(b)
    }
}

impl KPoly {
    fn eval_matrix_is_zero(&self, a: &KMatrix) -> bool {
        a.eval_poly(self).is_zero()
    }
}

fn dot(a: &[BaseElem], b: &[BaseElem], base: Base) -> BaseElem {
    let mut acc = BaseElem::zero(base);
    for (x, y) in a.iter().zip(b) {
        acc = acc.add(&x.mul(y));
    }
    acc
}

impl fmt::Display for KMatrix {
    /// Terse row-list form: `[[1,2],[3,4]]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kpoly::Degree;

    fn q() -> Base {
        Base::Rationals
    }

    fn z(p: u64) -> Base {
        Base::Prime(p)
    }

    #[test]
    fn arithmetic_fixtures() {
        let a = KMatrix::from_i64(&[&[1, 2], &[3, 4]], q());
        let b = KMatrix::from_i64(&[&[0, 1], &[1, 0]], q());
        assert_eq!(a.mul(&b), KMatrix::from_i64(&[&[2, 1], &[4, 3]], q()));
        assert_eq!(
            a.mul_vec(&[BaseElem::from_i64(1, q()), BaseElem::from_i64(1, q())]),
            vec![BaseElem::from_i64(3, q()), BaseElem::from_i64(7, q())]
        );
        assert_eq!(a.transpose().get(0, 1), &BaseElem::from_i64(3, q()));
    }

    #[test]
    fn rref_rank_kernel() {
        let a = KMatrix::from_i64(&[&[1, 2, 3], &[2, 4, 6], &[1, 1, 1]], q());
        assert_eq!(a.rank(), 2);
        let kern = a.kernel_basis();
        assert_eq!(kern.len(), 1);
        for v in &kern {
            assert!(a.mul_vec(v).iter().all(|x| x.is_zero()));
        }
        // rank-nullity
        assert_eq!(a.rank() + kern.len(), a.cols());
    }

    #[test]
    fn solve_and_inverse() {
        let a = KMatrix::from_i64(&[&[2, 1], &[1, 1]], z(5));
        let b = [BaseElem::from_i64(1, z(5)), BaseElem::from_i64(0, z(5))];
        let x = a.solve(&b).unwrap();
        assert_eq!(a.mul_vec(&x), b.to_vec());
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv), KMatrix::identity(2, z(5)));
        // singular matrix has no inverse and det 0
        let s = KMatrix::from_i64(&[&[1, 2], &[2, 4]], q());
        assert!(s.inverse().is_none());
        assert!(s.det().is_zero());
    }

    #[test]
    fn det_fixtures() {
        let a = KMatrix::from_i64(&[&[1, 2], &[3, 4]], q());
        assert_eq!(a.det(), BaseElem::from_i64(-2, q()));
        let b = KMatrix::from_i64(&[&[2, 0, 1], &[1, 1, 0], &[0, 3, 1]], z(7));
        // 2(1·1−0·3) − 0 + 1(1·3−1·0) = 2+3 = 5
        assert_eq!(b.det(), BaseElem::from_i64(5, z(7)));
    }

    #[test]
    fn berkowitz_matches_textbook_values() {
        // det(xI − A) for A = [[1,2],[3,4]]: x² − 5x − 2
        let a = KMatrix::from_i64(&[&[1, 2], &[3, 4]], q());
        assert_eq!(a.charpoly(), KPoly::from_i64(&[-2, -5, 1], q()));
        // 3×3 companion of x³+2x²+x+1 over Z₅ (last column −coeffs)
        let c = KMatrix::from_i64(&[&[0, 0, -1], &[1, 0, -1], &[0, 1, -2]], z(5));
        assert_eq!(c.charpoly(), KPoly::from_i64(&[1, 1, 2, 1], z(5)));
        // constant term = (−1)ⁿ det A on 100 cases would be a property test;
        // one spot check here
        assert_eq!(a.charpoly().coeff(0), a.det());
    }

    #[test]
    fn charpoly_is_monic_of_degree_n() {
        for n in 1..=4 {
            let m = KMatrix::zero(n, n, z(3));
            let p = m.charpoly();
            assert_eq!(p.degree(), Degree::Fin(n));
            assert!(p.is_monic());
        }
    }

    #[test]
    fn cayley_hamilton_spot_checks() {
        let a = KMatrix::from_i64(&[&[1, 2, 0], &[0, 1, 1], &[2, 0, 1]], z(5));
        assert!(a.eval_poly(&a.charpoly()).is_zero());
        let b = KMatrix::from_i64(&[&[3, 1], &[4, 1]], q());
        assert!(b.eval_poly(&b.charpoly()).is_zero());
    }

    #[test]
    fn minpoly_divides_charpoly() {
        // diag(1,1,2) over Q: minpoly (x−1)(x−2), charpoly (x−1)²(x−2)
        let d = KMatrix::diagonal(
            &[
                BaseElem::from_i64(1, q()),
                BaseElem::from_i64(1, q()),
                BaseElem::from_i64(2, q()),
            ],
            q(),
        );
        let m = d.minpoly();
        assert_eq!(m, KPoly::from_i64(&[2, -3, 1], q()));
        assert!(m.divides(&d.charpoly()));
        assert!(d.eval_poly(&m).is_zero());
    }

    #[test]
    fn krylov_annihilator() {
        // nilpotent shift: e₂ ↦ e₁ ↦ 0 (lower-1 convention block at 0)
        let n = KMatrix::from_i64(&[&[0, 1], &[0, 0]], q());
        let e1 = vec![BaseElem::from_i64(1, q()), BaseElem::from_i64(0, q())];
        let e2 = vec![BaseElem::from_i64(0, q()), BaseElem::from_i64(1, q())];
        assert_eq!(n.vector_annihilator(&e1), KPoly::from_i64(&[0, 1], q()));
        assert_eq!(n.vector_annihilator(&e2), KPoly::from_i64(&[0, 0, 1], q()));
        assert_eq!(n.minpoly(), KPoly::from_i64(&[0, 0, 1], q()));
    }

    #[test]
    fn conductor_into_subspace() {
        // A = [[0,1],[0,0]], W = span{e₁}: A e₂ = e₁ ∈ W so conductor(e₂) = x
        let a = KMatrix::from_i64(&[&[0, 1], &[0, 0]], q());
        let e1 = vec![BaseElem::from_i64(1, q()), BaseElem::from_i64(0, q())];
        let e2 = vec![BaseElem::from_i64(0, q()), BaseElem::from_i64(1, q())];
        let g = a.vector_conductor(&e2, &[e1.clone()]);
        assert_eq!(g, KPoly::from_i64(&[0, 1], q()));
        // v ∈ W has conductor 1
        let h = a.vector_conductor(&e1, &[e1.clone()]);
        assert_eq!(h, KPoly::one(q()));
    }

    #[test]
    fn similarity_check() {
        let a = KMatrix::from_i64(&[&[2, 0], &[0, 3]], q());
        let p = KMatrix::from_i64(&[&[1, 1], &[0, 1]], q());
        let b = p.inverse().unwrap().mul(&a).mul(&p);
        assert!(a.similar_via(&b, &p));
        assert!(!a.similar_via(&KMatrix::identity(2, q()), &p));
    }
}
