use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Entries the elimination can run over. `i64` reports overflow through
/// `None`, which sends the computation to the `BigInt` path.
trait Entry: Clone + PartialEq + std::fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn abs_lt(&self, other: &Self) -> bool;
    fn is_negative(&self) -> bool;
    fn neg(&self) -> Option<Self>;
    fn quot(&self, d: &Self) -> Option<Self>;
    /// `self - q * b`
    fn sub_mul(&self, q: &Self, b: &Self) -> Option<Self>;
    fn add(&self, b: &Self) -> Option<Self>;
    fn divides(&self, b: &Self) -> bool;
    fn to_big(&self) -> BigInt;
}

impl Entry for i64 {
    fn zero() -> Self {
        0
    }
    fn one() -> Self {
        1
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn abs_lt(&self, other: &Self) -> bool {
        self.unsigned_abs() < other.unsigned_abs()
    }
    fn is_negative(&self) -> bool {
        *self < 0
    }
    fn neg(&self) -> Option<Self> {
        self.checked_neg()
    }
    fn quot(&self, d: &Self) -> Option<Self> {
        self.checked_div(*d)
    }
    fn sub_mul(&self, q: &Self, b: &Self) -> Option<Self> {
        self.checked_sub(q.checked_mul(*b)?)
    }
    fn add(&self, b: &Self) -> Option<Self> {
        self.checked_add(*b)
    }
    fn divides(&self, b: &Self) -> bool {
        b.checked_rem(*self) == Some(0)
    }
    fn to_big(&self) -> BigInt {
        BigInt::from(*self)
    }
}

impl Entry for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn abs_lt(&self, other: &Self) -> bool {
        self.abs() < other.abs()
    }
    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }
    fn neg(&self) -> Option<Self> {
        Some(-self)
    }
    fn quot(&self, d: &Self) -> Option<Self> {
        Some(self / d)
    }
    fn sub_mul(&self, q: &Self, b: &Self) -> Option<Self> {
        Some(self - q * b)
    }
    fn add(&self, b: &Self) -> Option<Self> {
        Some(self + b)
    }
    fn divides(&self, b: &Self) -> bool {
        Zero::is_zero(&(b % self))
    }
    fn to_big(&self) -> BigInt {
        self.clone()
    }
}

/// `P · A · Q = D` with `P`, `Q` unimodular and `D` in Smith normal form:
/// diagonal entries `d_1 | d_2 | … | d_rank`, all positive.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm {
    pub rows: usize,
    pub cols: usize,
    pub diagonal: Vec<BigInt>,
    pub p: Vec<Vec<BigInt>>,
    pub q: Vec<Vec<BigInt>>,
}

impl SmithForm {
    pub fn rank(&self) -> usize {
        self.diagonal.len()
    }

    /// Invariant factors greater than one.
    pub fn torsion(&self) -> Vec<u64> {
        self.diagonal
            .iter()
            .filter(|d| !d.is_one())
            .map(|d| d.to_u64().expect("torsion coefficient fits in u64"))
            .collect()
    }

    /// Columns of `Q` past the rank: a basis of the integer kernel.
    pub fn kernel_basis(&self) -> Vec<Vec<BigInt>> {
        (self.rank()..self.cols).map(|j| self.q.iter().map(|row| row[j].clone()).collect()).collect()
    }

    /// Whether `v = A x` has an integer solution.
    pub fn in_image(&self, v: &[i64]) -> bool {
        for (i, row) in self.p.iter().enumerate() {
            let w: BigInt = row.iter().zip(v).map(|(a, &b)| a * b).sum();
            let ok = match self.diagonal.get(i) {
                Some(d) => Zero::is_zero(&(&w % d)),
                None => Zero::is_zero(&w),
            };
            if !ok {
                return false;
            }
        }
        true
    }
}

struct Work<T: Entry> {
    a: Vec<Vec<T>>,
    p: Vec<Vec<T>>,
    q: Vec<Vec<T>>,
}

impl<T: Entry> Work<T> {
    fn row_sub(&mut self, i: usize, t: usize, k: &T) -> Option<()> {
        for j in 0..self.a[i].len() {
            self.a[i][j] = self.a[i][j].sub_mul(k, &self.a[t][j])?;
        }
        for j in 0..self.p[i].len() {
            self.p[i][j] = self.p[i][j].sub_mul(k, &self.p[t][j])?;
        }
        Some(())
    }

    fn col_sub(&mut self, j: usize, t: usize, k: &T) -> Option<()> {
        for row in self.a.iter_mut() {
            row[j] = row[j].sub_mul(k, &row[t])?;
        }
        for row in self.q.iter_mut() {
            row[j] = row[j].sub_mul(k, &row[t])?;
        }
        Some(())
    }

    fn row_add(&mut self, t: usize, i: usize) -> Option<()> {
        for j in 0..self.a[t].len() {
            self.a[t][j] = self.a[t][j].add(&self.a[i][j])?;
        }
        for j in 0..self.p[t].len() {
            self.p[t][j] = self.p[t][j].add(&self.p[i][j])?;
        }
        Some(())
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        self.a.swap(i, j);
        self.p.swap(i, j);
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        for row in self.a.iter_mut() {
            row.swap(i, j);
        }
        for row in self.q.iter_mut() {
            row.swap(i, j);
        }
    }

    fn negate_row(&mut self, t: usize) -> Option<()> {
        for x in self.a[t].iter_mut() {
            *x = x.neg()?;
        }
        for x in self.p[t].iter_mut() {
            *x = x.neg()?;
        }
        Some(())
    }
}

fn identity<T: Entry>(n: usize) -> Vec<Vec<T>> {
    (0..n).map(|i| (0..n).map(|j| if i == j { T::one() } else { T::zero() }).collect()).collect()
}

fn smith<T: Entry>(a: Vec<Vec<T>>, rows: usize, cols: usize) -> Option<SmithForm> {
    let mut w = Work { a, p: identity(rows), q: identity(cols) };
    let mut t = 0;
    while t < rows.min(cols) {
        loop {
            // smallest nonzero entry of the remaining block
            let mut best: Option<(usize, usize)> = None;
            for i in t..rows {
                for j in t..cols {
                    if !w.a[i][j].is_zero() && best.is_none_or(|(bi, bj)| w.a[i][j].abs_lt(&w.a[bi][bj])) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((bi, bj)) = best else {
                return Some(finish(w, t, rows, cols));
            };
            w.swap_rows(t, bi);
            w.swap_cols(t, bj);
            let mut clean = true;
            for i in t + 1..rows {
                if !w.a[i][t].is_zero() {
                    let k = w.a[i][t].quot(&w.a[t][t])?;
                    w.row_sub(i, t, &k)?;
                    clean &= w.a[i][t].is_zero();
                }
            }
            for j in t + 1..cols {
                if !w.a[t][j].is_zero() {
                    let k = w.a[t][j].quot(&w.a[t][t])?;
                    w.col_sub(j, t, &k)?;
                    clean &= w.a[t][j].is_zero();
                }
            }
            if !clean {
                continue;
            }
            let pivot = w.a[t][t].clone();
            let bad = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !pivot.divides(&w.a[i][j])));
            match bad {
                Some(i) => w.row_add(t, i)?,
                None => break,
            }
        }
        if w.a[t][t].is_negative() {
            w.negate_row(t)?;
        }
        t += 1;
    }
    Some(finish(w, t, rows, cols))
}

fn finish<T: Entry>(w: Work<T>, rank: usize, rows: usize, cols: usize) -> SmithForm {
    let big = |m: Vec<Vec<T>>| m.into_iter().map(|r| r.iter().map(Entry::to_big).collect()).collect();
    SmithForm {
        rows,
        cols,
        diagonal: (0..rank).map(|i| w.a[i][i].to_big()).collect(),
        p: big(w.p),
        q: big(w.q),
    }
}

/// Smith normal form of a dense integer matrix given by rows. Runs in `i64`
/// with checked arithmetic and restarts over `BigInt` on overflow.
pub fn smith_normal_form(a: &[Vec<i64>], cols: usize) -> SmithForm {
    let rows = a.len();
    if let Some(s) = smith(a.to_vec(), rows, cols) {
        return s;
    }
    let big = a.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
    smith(big, rows, cols).expect("BigInt elimination cannot overflow")
}

#[cfg(test)]
pub(crate) fn smith_normal_form_big(a: &[Vec<i64>], cols: usize) -> SmithForm {
    let big = a.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
    smith(big, a.len(), cols).unwrap()
}
